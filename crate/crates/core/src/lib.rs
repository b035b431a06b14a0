//! Cai-Fürer-Immerman graphs and the machinery around them.
//!
//! The crate builds the CFI gadget `X(d)` and the graphs `X(G)`, `X̃(G)`,
//! `Y(G)`, `Ỹ(G)` over a connected base graph `G`, and provides:
//!
//! * a backtracking isomorphism / automorphism oracle ([`iso`]),
//! * gadget automorphism theory ([`gadget`]) and its lift to `X(G)` ([`cfi`]),
//! * a polynomial-time procedure telling `Y(G)` from `Ỹ(G)` ([`distinguish`]),
//! * pebble games and Weisfeiler-Leman refinement ([`equivalence`]),
//! * exact treewidth and the cops-and-robber game ([`treewidth`]),
//! * homomorphism counts and their GF(2) description ([`homcount`]),
//! * the first-order predicates that recover gadget structure ([`fo`]).
//!
//! Vertices are always dense indices `0..n`.

pub mod cfi;
pub mod distinguish;
pub mod equivalence;
pub mod error;
pub mod fo;
pub mod gadget;
pub mod graph;
pub mod homcount;
pub mod io;
pub mod iso;
pub mod matching;
pub mod suite;
pub mod treewidth;

pub use cfi::{CfiGraph, CfiVertex, Side};
pub use error::{Error, Result};
pub use graph::{BaseGraph, Family};
