//! Words over a finite set of named commensurators.

use crate::iso::IsoError;
use crate::words::{GroupPresentation, Letter, Word};

use super::{CommError, Commensurator};

/// Named commensurators and a word over their names.
#[derive(Clone, Debug)]
pub struct CommWordProblemInstance {
    names: Vec<String>,
    letters: Vec<Commensurator>,
    word: Word,
}

impl CommWordProblemInstance {
    pub fn new(letters: Vec<(String, Commensurator)>, word: Word) -> Result<Self, CommError> {
        let (names, letters): (Vec<_>, Vec<_>) = letters.into_iter().unzip();
        alphabet(&names)?;
        if word.rank_needed() > names.len() {
            return Err(CommError::UnknownLetter(format!("x{}", word.rank_needed() - 1)));
        }
        if let Some(first) = letters.first() {
            if letters.iter().any(|c: &Commensurator| c.group() != first.group()) {
                return Err(CommError::GroupMismatch);
            }
        }
        Ok(CommWordProblemInstance { names, letters, word })
    }

    /// Parses a word such as `a^-1 b a b^-1` over the letter names.
    pub fn parse(letters: Vec<(String, Commensurator)>, text: &str) -> Result<Self, CommError> {
        let names: Vec<String> = letters.iter().map(|(n, _)| n.clone()).collect();
        let word = alphabet(&names)?.parse(text).map_err(|e| match e {
            crate::words::WordError::UnknownName(n) => CommError::UnknownLetter(n),
            other => CommError::Word(other),
        })?;
        Self::new(letters, word)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn letter(&self, name: &str) -> Option<&Commensurator> {
        self.names.iter().position(|n| n == name).map(|i| &self.letters[i])
    }

    pub fn format_word(&self) -> String {
        self.word.display(&self.names).to_string()
    }

    fn group(&self) -> Option<&GroupPresentation> {
        self.letters.first().map(Commensurator::group)
    }

    fn letter_value(&self, l: Letter) -> Commensurator {
        let c = &self.letters[l.generator()];
        if l.is_inverse() {
            c.inverse()
        } else {
            c.clone()
        }
    }

    fn letter_text(&self, l: Letter) -> String {
        Word::letter(l).display(&self.names).to_string()
    }

    /// The product as one commensurator, composed left to right.
    pub fn product(&self, group: &GroupPresentation) -> Result<Commensurator, CommError> {
        let mut acc = Commensurator::identity(group);
        for &l in self.word.letters() {
            acc = acc.compose(&self.letter_value(l))?;
        }
        Ok(acc)
    }
}

fn alphabet(names: &[String]) -> Result<GroupPresentation, CommError> {
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    GroupPresentation::free("letters", &refs).map_err(|e| CommError::Letters(e.to_string()))
}

/// Outcome of the word problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub trivial: bool,
    /// A generator of the final domain and its image, when nontrivial.
    pub witness: Option<(Word, Word)>,
    /// Index of the final representative's domain.
    pub domain_index: usize,
}

/// Decides whether the product is the identity commensurator.
pub fn decide_comm_word(inst: &CommWordProblemInstance, group: &GroupPresentation) -> Result<Verdict, CommError> {
    if inst.group().is_some_and(|g| g != group) {
        return Err(CommError::GroupMismatch);
    }
    let product = inst.product(group)?;
    let witness = product.moved_generator();
    Ok(Verdict { trivial: witness.is_none(), witness, domain_index: product.rep().domain().index() })
}

/// Applies the letters to `test` one at a time, rightmost first.
pub fn sequential_evaluate(inst: &CommWordProblemInstance, test: &Word) -> Result<Word, CommError> {
    let mut w = test.clone();
    for (k, &l) in inst.word.letters().iter().rev().enumerate() {
        w = inst.letter_value(l).evaluate(&w).map_err(|e| match e {
            IsoError::DomainError => CommError::Domain { step: k + 1, letter: inst.letter_text(l) },
            other => CommError::Iso(other),
        })?;
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters() -> (GroupPresentation, Vec<(String, Commensurator)>) {
        let f2 = GroupPresentation::free_rank2();
        let phi = Commensurator::inner(&f2, &f2.parse("A").unwrap());
        let beta = Commensurator::inner(&f2, &f2.parse("B").unwrap());
        (f2, vec![("p".into(), phi), ("q".into(), beta)])
    }

    #[test]
    fn empty_and_cancelling_words() {
        let (f2, ls) = letters();
        let test = f2.parse("A*B").unwrap();
        let inst = CommWordProblemInstance::parse(ls.clone(), "").unwrap();
        assert_eq!(sequential_evaluate(&inst, &test).unwrap(), test);
        assert!(decide_comm_word(&inst, &f2).unwrap().trivial);
        let inst = CommWordProblemInstance::parse(ls, "p p^-1").unwrap();
        assert!(decide_comm_word(&inst, &f2).unwrap().trivial);
    }

    #[test]
    fn order_is_right_to_left() {
        let (f2, ls) = letters();
        let inst = CommWordProblemInstance::parse(ls, "p q").unwrap();
        // q acts first: B·B·B⁻¹ = B, then A·B·A⁻¹
        let out = sequential_evaluate(&inst, &f2.parse("B").unwrap()).unwrap();
        assert_eq!(f2.format(&out), "A*B*A^-1");
        let v = decide_comm_word(&inst, &f2).unwrap();
        assert!(!v.trivial);
        let (t, img) = v.witness.unwrap();
        assert!(!f2.words_equal(&t, &img));
    }

    #[test]
    fn unknown_letters() {
        let (_, ls) = letters();
        assert_eq!(
            CommWordProblemInstance::parse(ls, "p z").unwrap_err(),
            CommError::UnknownLetter("z".into())
        );
    }
}
