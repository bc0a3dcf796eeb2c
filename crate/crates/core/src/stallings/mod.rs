//! Stallings folding for subgroups of free groups, with witnesses.
//!
//! Each input generator `wᵢ` becomes a loop at the basepoint whose first edge
//! carries the witness symbol `sᵢ` and whose other edges carry the empty
//! witness. Reading a closed path from the basepoint multiplies edge
//! witnesses along the way, producing an expression of the path's label over
//! the symbols. Folding keeps this true: before a vertex is merged into
//! another, the witnesses around it are rescaled (left-multiplied on
//! outgoing edges, right-multiplied by the inverse on incoming ones) so that
//! the two identified edges agree.
//!
//! When two parallel edges with the same label turn out to have different
//! witnesses, their quotient is a relation among the inputs. Such
//! discrepancies are recorded; a graph with none means the inputs form a
//! free basis of the subgroup they generate.

use std::collections::HashSet;

use thiserror::Error;

use crate::subgroups::{CosetTable, SchreierData};
use crate::words::{Letter, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StallingsError {
    #[error("input words are not a free basis: {0} relation(s) found while folding")]
    NotABasis(usize),
    #[error("word is not in the folded subgroup")]
    NotMember,
}

#[derive(Clone, Debug)]
struct Edge {
    from: usize,
    to: usize,
    label: Letter,
    witness: Word,
    alive: bool,
}

/// Folding workspace; every edge is listed in the incidence lists of both ends.
struct Builder {
    edges: Vec<Edge>,
    incident: Vec<Vec<usize>>,
    alive: Vec<bool>,
    discrepancies: Vec<Word>,
}

impl Builder {
    fn wedge(generators: &[Word]) -> Self {
        let mut b = Builder { edges: Vec::new(), incident: vec![Vec::new()], alive: vec![true], discrepancies: Vec::new() };
        for (i, w) in generators.iter().enumerate() {
            if w.is_empty() {
                // a trivial input is itself a relation
                b.discrepancies.push(Word::generator(i));
                continue;
            }
            let mut at = 0;
            for (k, &l) in w.letters().iter().enumerate() {
                let to = if k + 1 == w.len() {
                    0
                } else {
                    b.incident.push(Vec::new());
                    b.alive.push(true);
                    b.incident.len() - 1
                };
                let witness = if k == 0 { Word::generator(i) } else { Word::identity() };
                b.add_edge(at, to, l, witness);
                at = to;
            }
        }
        b
    }

    fn add_edge(&mut self, from: usize, to: usize, label: Letter, witness: Word) {
        let id = self.edges.len();
        self.edges.push(Edge { from, to, label, witness, alive: true });
        self.incident[from].push(id);
        if to != from {
            self.incident[to].push(id);
        }
    }

    /// Ways to leave `v`: (edge, traversal label, far end, traversal witness).
    fn exits(&self, v: usize) -> Vec<(usize, Letter, usize, Word)> {
        let mut out = Vec::new();
        for &id in &self.incident[v] {
            let e = &self.edges[id];
            if !e.alive {
                continue;
            }
            if e.from == v {
                out.push((id, e.label, e.to, e.witness.clone()));
            }
            if e.to == v {
                out.push((id, e.label.inverse(), e.from, e.witness.inverse()));
            }
        }
        out
    }

    /// Two distinct edges leaving `v` with the same traversal label.
    fn find_fold(&self, v: usize) -> Option<((usize, usize, Word), (usize, usize, Word))> {
        let exits = self.exits(v);
        for i in 0..exits.len() {
            for j in i + 1..exits.len() {
                if exits[i].1 == exits[j].1 && exits[i].0 != exits[j].0 {
                    let (a, b) = (&exits[i], &exits[j]);
                    return Some(((a.0, a.2, a.3.clone()), (b.0, b.2, b.3.clone())));
                }
            }
        }
        None
    }

    fn gauge(&mut self, u: usize, h: &Word) {
        let ids: HashSet<usize> = self.incident[u].iter().copied().collect();
        for id in ids {
            let e = &mut self.edges[id];
            if e.from == u {
                e.witness = h.concat(&e.witness);
            }
            if e.to == u {
                e.witness = e.witness.concat(&h.inverse());
            }
        }
    }

    fn kill_edge(&mut self, id: usize) {
        self.edges[id].alive = false;
        let (from, to) = (self.edges[id].from, self.edges[id].to);
        self.incident[from].retain(|&x| x != id);
        self.incident[to].retain(|&x| x != id);
    }

    /// Merges `drop` into `keep`; the basepoint is never dropped.
    fn merge(&mut self, keep: usize, drop: usize) {
        let moved = std::mem::take(&mut self.incident[drop]);
        for &id in &moved {
            let e = &mut self.edges[id];
            let was_loop_at_keep = e.from == keep || e.to == keep;
            if e.from == drop {
                e.from = keep;
            }
            if e.to == drop {
                e.to = keep;
            }
            if !was_loop_at_keep {
                self.incident[keep].push(id);
            }
        }
        self.alive[drop] = false;
    }

    fn run(&mut self, mut choose: impl FnMut(usize) -> usize) {
        let mut pending: Vec<usize> = (0..self.incident.len()).collect();
        while !pending.is_empty() {
            let v = pending.swap_remove(choose(pending.len()) % pending.len());
            if !self.alive[v] {
                continue;
            }
            let Some(((_, t1, w1), (e2, t2, w2))) = self.find_fold(v) else {
                continue;
            };
            if t1 == t2 {
                let d = w1.concat(&w2.inverse());
                if !d.is_empty() {
                    self.discrepancies.push(d);
                }
                self.kill_edge(e2);
            } else {
                // rescale the end being dropped so both edges carry the same witness
                let (keep, drop, wk, wd) = if t2 == 0 { (t2, t1, w2, w1) } else { (t1, t2, w1, w2) };
                self.gauge(drop, &wk.inverse().concat(&wd));
                self.merge(keep, drop);
            }
            pending.push(v);
            for t in [t1, t2] {
                if self.alive[t] {
                    pending.push(t);
                }
            }
        }
    }
}

/// A folded (deterministic) labeled graph with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessGraph {
    rank: usize,
    generators: Vec<Word>,
    /// `next[v][k]`: target and witness for the `k`-th letter in shortlex order.
    next: Vec<Vec<Option<(usize, Word)>>>,
    discrepancies: Vec<Word>,
}

impl WitnessGraph {
    /// Folds the wedge of loops spelling `generators` over a free group of
    /// the given rank.
    pub fn fold(rank: usize, generators: &[Word]) -> Self {
        Self::fold_with(rank, generators, |n| n - 1)
    }

    /// Like [`fold`](Self::fold), with `choose(n)` picking which of the `n`
    /// pending vertices to examine next. The result does not depend on it
    /// beyond the witnesses' particular form.
    pub fn fold_with(rank: usize, generators: &[Word], choose: impl FnMut(usize) -> usize) -> Self {
        let mut b = Builder::wedge(generators);
        b.run(choose);
        // renumber live vertices breadth first from the basepoint
        let mut label = vec![usize::MAX; b.incident.len()];
        let mut order = vec![0];
        label[0] = 0;
        let mut k = 0;
        while k < order.len() {
            let v = order[k];
            let mut exits = b.exits(v);
            exits.sort_by_key(|x| x.1.order_index(rank));
            for (_, _, t, _) in exits {
                if label[t] == usize::MAX {
                    label[t] = order.len();
                    order.push(t);
                }
            }
            k += 1;
        }
        let next = order
            .iter()
            .map(|&v| {
                let mut row = vec![None; 2 * rank];
                for (_, l, t, w) in b.exits(v) {
                    row[l.order_index(rank)] = Some((label[t], w));
                }
                row
            })
            .collect();
        WitnessGraph { rank, generators: generators.to_vec(), next, discrepancies: b.discrepancies }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[Word] {
        &self.generators
    }

    pub fn vertex_count(&self) -> usize {
        self.next.len()
    }

    pub fn edge_count(&self) -> usize {
        self.next.iter().flatten().filter(|x| x.is_some()).count() / 2
    }

    /// Every vertex has all `2·rank` directed edges, i.e. finite index.
    pub fn is_complete(&self) -> bool {
        self.next.iter().all(|row| row.iter().all(Option::is_some))
    }

    /// Relations among the inputs found while folding; empty iff they are a
    /// free basis.
    pub fn discrepancies(&self) -> &[Word] {
        &self.discrepancies
    }

    pub fn is_free_basis(&self) -> bool {
        self.discrepancies.is_empty()
    }

    /// Target of `letter` at `v`.
    pub fn step(&self, v: usize, l: Letter) -> Option<usize> {
        self.next[v][l.order_index(self.rank)].as_ref().map(|(t, _)| *t)
    }

    /// Expresses `w` over the input symbols if it lies in the subgroup.
    pub fn membership_with_witness(&self, w: &Word) -> Option<Word> {
        if w.rank_needed() > self.rank {
            return None;
        }
        let mut v = 0;
        let mut out = Vec::new();
        for &l in w.letters() {
            let (t, wit) = self.next[v][l.order_index(self.rank)].as_ref()?;
            out.extend_from_slice(wit.letters());
            v = *t;
        }
        (v == 0).then(|| Word::reduce(out))
    }

    pub fn contains(&self, w: &Word) -> bool {
        let mut v = 0;
        for &l in w.letters() {
            match self.step(v, l) {
                Some(t) => v = t,
                None => return false,
            }
        }
        v == 0
    }

    /// Whether the folded subgroup is exactly the subgroup of `table`.
    pub fn equals_table(&self, table: &CosetTable) -> bool {
        table.group().is_free()
            && table.group().rank() == self.rank
            && self.is_complete()
            && self.vertex_count() == table.index()
            && SchreierData::new(table).generators().iter().all(|g| self.contains(&g.word))
    }

    /// Expresses each target over the inputs, failing if the inputs are not
    /// a basis or some target is outside their span.
    pub fn express_all(&self, targets: &[Word]) -> Result<Vec<Word>, StallingsError> {
        if !self.is_free_basis() {
            return Err(StallingsError::NotABasis(self.discrepancies.len()));
        }
        targets
            .iter()
            .map(|t| self.membership_with_witness(t).ok_or(StallingsError::NotMember))
            .collect()
    }
}
