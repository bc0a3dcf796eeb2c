//! Words over a finite generator alphabet and the word problem in the ambient
//! group.
//!
//! A [`Word`] is always freely reduced. A [`GroupPresentation`] is either a
//! free group (no relators) or a group with small-cancellation relators, in
//! which case triviality is decided by Dehn's algorithm (see [`dehn`]).

pub mod dehn;
mod text;

use std::fmt;
use std::ops::Mul;
use std::sync::Arc;

use thiserror::Error;

pub use dehn::DehnReducer;
pub use text::WordDisplay;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("unknown generator index {index} (alphabet has {rank} generators)")]
    UnknownGenerator { index: usize, rank: usize },
    #[error("unknown generator name `{0}`")]
    UnknownName(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("no image given for generator `{0}`")]
    Unmapped(String),
    #[error("invalid presentation: {0}")]
    Presentation(String),
}

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    generator: u32,
    inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator: generator as u32, inverse }
    }

    pub fn pos(generator: usize) -> Self {
        Self::new(generator, false)
    }

    pub fn neg(generator: usize) -> Self {
        Self::new(generator, true)
    }

    pub fn generator(self) -> usize {
        self.generator as usize
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn inverse(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }

    /// Position in the shortlex letter order `x1 < x2 < .. < x1^-1 < x2^-1 < ..`.
    pub fn order_index(self, rank: usize) -> usize {
        if self.inverse {
            rank + self.generator()
        } else {
            self.generator()
        }
    }

    /// All letters of a rank-`rank` alphabet in shortlex order.
    pub fn all(rank: usize) -> impl Iterator<Item = Letter> + Clone {
        (0..rank).map(Letter::pos).chain((0..rank).map(Letter::neg))
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn generator(g: usize) -> Self {
        Word(vec![Letter::pos(g)])
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            push_reduced(&mut out, l);
        }
        Word(out)
    }

    /// Builds a word from `(generator, exponent)` syllables.
    pub fn from_powers(powers: &[(usize, i32)]) -> Self {
        Self::reduce(powers.iter().flat_map(|&(g, e)| {
            std::iter::repeat(Letter::new(g, e < 0)).take(e.unsigned_abs() as usize)
        }))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// One more than the largest generator index used (0 for the identity).
    pub fn rank_needed(&self) -> usize {
        self.0.iter().map(|l| l.generator() + 1).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        for &l in &other.0 {
            push_reduced(&mut out, l);
        }
        Word(out)
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// `c · self · c⁻¹`.
    pub fn conjugate_by(&self, c: &Word) -> Word {
        c.concat(self).concat(&c.inverse())
    }

    /// Strips matching first/last letter pairs; the result is conjugate to `self`.
    pub fn cyclic_reduce(&self) -> Word {
        let s = &self.0;
        let (mut i, mut j) = (0, s.len());
        while j >= i + 2 && s[i] == s[j - 1].inverse() {
            i += 1;
            j -= 1;
        }
        Word(s[i..j].to_vec())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (Some(&a), Some(&b)) => self.0.len() < 2 || a != b.inverse(),
            _ => true,
        }
    }

    /// Homomorphic extension of `images` (one word per generator).
    pub fn substitute(&self, images: &[Word]) -> Result<Word, WordError> {
        let mut out: Vec<Letter> = Vec::new();
        for &l in &self.0 {
            let img = images.get(l.generator()).ok_or(WordError::UnknownGenerator {
                index: l.generator(),
                rank: images.len(),
            })?;
            if l.is_inverse() {
                for &m in img.0.iter().rev() {
                    push_reduced(&mut out, m.inverse());
                }
            } else {
                for &m in &img.0 {
                    push_reduced(&mut out, m);
                }
            }
        }
        Ok(Word(out))
    }

    /// Exponent sum of each generator (image in the abelianization `Z^rank`).
    pub fn abelianization(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0i64; rank];
        for l in &self.0 {
            v[l.generator()] += if l.is_inverse() { -1 } else { 1 };
        }
        v
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if out.last() == Some(&l.inverse()) {
        out.pop();
    } else {
        out.push(l);
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        self.concat(&rhs)
    }
}

impl From<Letter> for Word {
    fn from(l: Letter) -> Self {
        Word::letter(l)
    }
}

/// Symbolic fallback: generators printed as `x0`, `x1`, ...
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.rank_needed()).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.display(&names))
    }
}

/// Generators plus relators.
///
/// The group is free iff there are no relators. Relators must be nonempty and
/// cyclically reduced.
#[derive(Clone, Debug)]
pub struct GroupPresentation {
    name: String,
    generators: Vec<String>,
    relators: Vec<Word>,
    dehn: Arc<DehnReducer>,
}

impl PartialEq for GroupPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators && self.relators == other.relators
    }
}

impl Eq for GroupPresentation {}

impl GroupPresentation {
    pub fn new(
        name: impl Into<String>,
        generators: Vec<String>,
        relators: Vec<Word>,
    ) -> Result<Self, WordError> {
        for (i, g) in generators.iter().enumerate() {
            if !text::is_identifier(g) {
                return Err(WordError::Presentation(format!("bad generator name `{g}`")));
            }
            if generators[..i].contains(g) {
                return Err(WordError::Presentation(format!("duplicate generator `{g}`")));
            }
        }
        for r in &relators {
            if r.is_empty() || !r.is_cyclically_reduced() {
                return Err(WordError::Presentation(
                    "relators must be nonempty and cyclically reduced".into(),
                ));
            }
            if r.rank_needed() > generators.len() {
                return Err(WordError::UnknownGenerator {
                    index: r.rank_needed() - 1,
                    rank: generators.len(),
                });
            }
        }
        let dehn = Arc::new(DehnReducer::new(&relators));
        Ok(GroupPresentation { name: name.into(), generators, relators, dehn })
    }

    pub fn free(name: &str, generators: &[&str]) -> Result<Self, WordError> {
        Self::new(name, generators.iter().map(|s| s.to_string()).collect(), Vec::new())
    }

    /// `F₂ = ⟨A, B⟩`.
    pub fn free_rank2() -> Self {
        Self::free("free2", &["A", "B"]).expect("valid presentation")
    }

    /// `Γ₂ = ⟨A, B, C, D | [A,B][C,D]⟩` with `[X,Y] = XYX⁻¹Y⁻¹`.
    pub fn genus2() -> Self {
        let rel = Word::from_powers(&[(0, 1), (1, 1), (0, -1), (1, -1), (2, 1), (3, 1), (2, -1), (3, -1)]);
        Self::new("genus2", ["A", "B", "C", "D"].map(String::from).to_vec(), vec![rel])
            .expect("valid presentation")
    }

    /// The two-letter alphabet `a, b` of Baumslag–Solitar words (no relators).
    pub fn bs_alphabet() -> Self {
        Self::free("bs", &["a", "b"]).expect("valid presentation")
    }

    /// Looks up one of the built-in groups by the name used in data files.
    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "free2" | "F2" => Some(Self::free_rank2()),
            "genus2" | "Gamma2" => Some(Self::genus2()),
            _ => None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn is_free(&self) -> bool {
        self.relators.is_empty()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Checks that a word only uses this alphabet.
    pub fn check(&self, w: &Word) -> Result<(), WordError> {
        if w.rank_needed() > self.rank() {
            return Err(WordError::UnknownGenerator { index: w.rank_needed() - 1, rank: self.rank() });
        }
        Ok(())
    }

    /// Free reduction of a raw letter sequence over this alphabet.
    pub fn free_reduce(&self, letters: &[Letter]) -> Result<Word, WordError> {
        if let Some(l) = letters.iter().find(|l| l.generator() >= self.rank()) {
            return Err(WordError::UnknownGenerator { index: l.generator(), rank: self.rank() });
        }
        Ok(Word::reduce(letters.iter().copied()))
    }

    /// Applies a generator → word map (by generator name) homomorphically.
    pub fn apply_letter_map(
        &self,
        map: &[(&str, Word)],
        w: &Word,
    ) -> Result<Word, WordError> {
        let images = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| match map.iter().find(|(n, _)| n == g) {
                Some((_, img)) => Ok(img.clone()),
                None if w.letters().iter().any(|l| l.generator() == i) => {
                    Err(WordError::Unmapped(g.clone()))
                }
                None => Ok(Word::generator(i)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        w.substitute(&images)
    }

    /// Decides whether `w` is the identity of this group.
    pub fn is_trivial(&self, w: &Word) -> bool {
        if self.is_free() {
            w.is_empty()
        } else {
            self.dehn.is_trivial(w)
        }
    }

    pub fn words_equal(&self, u: &Word, v: &Word) -> bool {
        u == v || self.is_trivial(&u.concat(&v.inverse()))
    }

    /// Length-reducing Dehn rewriting without cyclic permutation; the result
    /// represents the same element. The identity map for free groups.
    pub fn shorten(&self, w: &Word) -> Word {
        if self.is_free() {
            w.clone()
        } else {
            self.dehn.shorten(w)
        }
    }

    pub fn parse(&self, s: &str) -> Result<Word, WordError> {
        text::parse(s, &self.generators)
    }

    pub fn format(&self, w: &Word) -> String {
        w.display(&self.generators).to_string()
    }
}
