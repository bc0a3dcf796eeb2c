//! Schreier transversals, Schreier generators and Reidemeister rewriting.
//!
//! The transversal is the breadth-first spanning tree of a standardized
//! table, so the representative of each state is its shortlex-least word.
//! Every (state, positive generator) edge outside the tree yields one
//! generator `t_{c,x} = rep(c)·x·rep(c·x)⁻¹`; generators are numbered by
//! state, then by generator. Rewritten words are words over these symbols:
//! symbol `i` is `Letter::pos(i)`.

use crate::words::{Letter, Word};

use super::{CosetTable, SubgroupError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreierGenerator {
    pub word: Word,
    pub state: usize,
    /// Always a positive letter.
    pub letter: Letter,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreierData {
    table: CosetTable,
    transversal: Vec<Word>,
    generators: Vec<SchreierGenerator>,
    tree_edges: Vec<(usize, Letter)>,
    /// `symbol[state][g]`: generator index of the edge, `None` on tree edges.
    symbol: Vec<Vec<Option<usize>>>,
}

impl SchreierData {
    pub fn new(table: &CosetTable) -> Self {
        let n = table.index();
        let rank = table.group().rank();
        let mut transversal: Vec<Option<Word>> = vec![None; n];
        let mut is_tree = vec![vec![false; rank]; n];
        let mut tree_edges = Vec::with_capacity(n.saturating_sub(1));
        transversal[0] = Some(Word::identity());
        // standardized tables number states in discovery order, so a
        // single pass in state order is the breadth-first search
        for c in 0..n {
            let rep = transversal[c].clone().expect("standardized table");
            for l in Letter::all(rank) {
                let d = table.step(c, l);
                if transversal[d].is_none() {
                    transversal[d] = Some(rep.concat(&Word::letter(l)));
                    let edge = if l.is_inverse() { (d, l.inverse()) } else { (c, l) };
                    is_tree[edge.0][edge.1.generator()] = true;
                    tree_edges.push(edge);
                }
            }
        }
        let transversal: Vec<Word> = transversal.into_iter().map(Option::unwrap).collect();
        let mut generators = Vec::new();
        let mut symbol = vec![vec![None; rank]; n];
        for c in 0..n {
            for g in 0..rank {
                if is_tree[c][g] {
                    continue;
                }
                let x = Letter::pos(g);
                let d = table.step(c, x);
                let word = transversal[c].concat(&Word::letter(x)).concat(&transversal[d].inverse());
                symbol[c][g] = Some(generators.len());
                generators.push(SchreierGenerator { word, state: c, letter: x });
            }
        }
        SchreierData { table: table.clone(), transversal, generators, tree_edges, symbol }
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    pub fn transversal(&self) -> &[Word] {
        &self.transversal
    }

    pub fn generators(&self) -> &[SchreierGenerator] {
        &self.generators
    }

    /// Generator words, in numbering order.
    pub fn generator_words(&self) -> Vec<Word> {
        self.generators.iter().map(|g| g.word.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn tree_edges(&self) -> &[(usize, Letter)] {
        &self.tree_edges
    }

    /// Index of the generator on edge (`state`, positive generator `g`).
    pub fn symbol_at(&self, state: usize, g: usize) -> Option<usize> {
        self.symbol[state][g]
    }

    /// Rewrites a subgroup element over the Schreier generators.
    pub fn rewrite(&self, w: &Word) -> Result<Word, SubgroupError> {
        if !self.table.contains(w) {
            return Err(SubgroupError::NotAMember);
        }
        let mut out = Vec::new();
        let mut c = 0;
        for &l in w.letters() {
            let d = self.table.step(c, l);
            let g = l.generator();
            if l.is_inverse() {
                if let Some(s) = self.symbol[d][g] {
                    out.push(Letter::neg(s));
                }
            } else if let Some(s) = self.symbol[c][g] {
                out.push(Letter::pos(s));
            }
            c = d;
        }
        Ok(Word::reduce(out))
    }

    /// Expands a word over the Schreier generators into the ambient group.
    pub fn expand(&self, symbols: &Word) -> Word {
        symbols
            .substitute(&self.generator_words())
            .expect("symbol word within the generator range")
    }

    /// Reidemeister–Schreier relators: for each state `c` and relator `r`,
    /// the rewrite of `rep(c)·r·rep(c)⁻¹`. Empty for free groups.
    pub fn relators(&self) -> Vec<Word> {
        let mut out = Vec::new();
        for rep in &self.transversal {
            for r in self.table.group().relators() {
                let w = r.conjugate_by(rep);
                out.push(self.rewrite(&w).expect("relators act trivially on every coset"));
            }
        }
        out
    }
}
