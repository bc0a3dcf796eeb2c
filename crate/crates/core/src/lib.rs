//! Arithmetic in the abstract commensurator of the rank-2 free group and of the
//! genus-2 surface group.
//!
//! An element of `Comm(G)` is an isomorphism between two finite-index
//! subgroups of `G`, up to agreement on a common finite-index subgroup. This
//! crate represents finite-index subgroups by coset tables, isomorphisms by the
//! images of Schreier generators (always paired with a verified inverse), and
//! decides equality of commensurators by checking a generating set of a common
//! domain. Word problems in the ambient group are solved by free reduction
//! (free group) and Dehn's algorithm (genus-2 surface group).
//!
//! The main entry points:
//!
//! - [`words`]: words, presentations, the ambient word problem;
//! - [`subgroups`]: coset tables, Schreier data, Reidemeister rewriting;
//! - [`stallings`]: folded subgroup graphs with witnesses (free groups);
//! - [`iso`]: validated isomorphisms between finite-index subgroups;
//! - [`comm`]: composition and the word problem in `Comm(G)`, plus the
//!   Baumslag–Solitar constructions;
//! - [`cli`]: scenario reports behind the `commensurator` binary.

pub mod cli;
pub mod comm;
pub mod iso;
pub mod stallings;
pub mod subgroups;
pub mod words;

pub use comm::{CommError, Commensurator};
pub use iso::{IsoError, SubgroupIso};
pub use subgroups::{CosetTable, FiniteAbelianTarget, SchreierData, SubgroupError};
pub use words::{GroupPresentation, Letter, Word, WordError};
