//! First-order predicates that recover the gadget structure of `Y(G)` and
//! `Ỹ(G)` when every base vertex has degree at least three.
//!
//! * `gadget(x,y)`: `x` and `y` lie on a common cycle of length at most 8
//!   (true for `x = y`).
//! * `link(x)`: `∃y (¬gadget(x,y) ∧ Exy)`; `middle(x)` is its negation.
//! * `graph'(x,y)`: `link(x) ∧ link(y) ∧ gadget(x,y) ∧
//!   ∀z ((gadget(z,x) ∧ middle(z)) → (Exz ↔ ¬Eyz))` (twins).
//! * `same_color(x,y)`: `x = y ∨ graph'(x,y) ∨ (gadget(x,y) ∧ middle(x) ∧ middle(y))`.

use serde::Serialize;

use crate::cfi::CfiGraph;
use crate::distinguish::{short_cycle_mates, SHORT_CYCLE};
use crate::error::{Error, Result};
use crate::graph::BaseGraph;

/// Evaluated predicates of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredicateTable {
    gadget: Vec<Vec<bool>>,
    link: Vec<bool>,
    twin: Vec<Vec<bool>>,
}

impl PredicateTable {
    pub fn new(z: &BaseGraph) -> Self {
        let n = z.n();
        let gadget: Vec<Vec<bool>> = (0..n)
            .map(|x| {
                let mut row = short_cycle_mates(z, x, SHORT_CYCLE);
                row[x] = true;
                row
            })
            .collect();
        let link: Vec<bool> = (0..n).map(|x| z.neighbors(x).iter().any(|&y| !gadget[x][y])).collect();
        let twin = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        link[x]
                            && link[y]
                            && gadget[x][y]
                            && (0..n)
                                .filter(|&w| gadget[w][x] && !link[w])
                                .all(|w| z.has_edge(x, w) != z.has_edge(y, w))
                    })
                    .collect()
            })
            .collect();
        PredicateTable { gadget, link, twin }
    }

    pub fn n(&self) -> usize {
        self.link.len()
    }

    pub fn gadget(&self, x: usize, y: usize) -> bool {
        self.gadget[x][y]
    }

    pub fn link(&self, x: usize) -> bool {
        self.link[x]
    }

    pub fn middle(&self, x: usize) -> bool {
        !self.link[x]
    }

    pub fn graph_prime(&self, x: usize, y: usize) -> bool {
        self.twin[x][y]
    }

    pub fn same_color(&self, x: usize, y: usize) -> bool {
        x == y || self.twin[x][y] || (self.gadget[x][y] && self.middle(x) && self.middle(y))
    }

    /// Number of classes of `same_color` (assumed to be an equivalence).
    pub fn class_count(&self) -> usize {
        let n = self.n();
        (0..n).filter(|&x| (0..x).all(|y| !self.same_color(x, y))).count()
    }
}

/// Result of comparing `same_color` with the true colours.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SameColorReport {
    pub pairs_checked: usize,
    pub mismatches: usize,
    /// `same_color` classes found in `Y(G)` and `Ỹ(G)`.
    pub classes: [usize; 2],
    /// `|V(G)| + 2|E(G)|`.
    pub expected_classes: usize,
}

impl SameColorReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0 && self.classes == [self.expected_classes; 2]
    }
}

/// Checks `same_color(x,y) ⟺ colour(x) = colour(y)` on `Y(G)` and `Ỹ(G)`.
pub fn check_same_color(base: &BaseGraph) -> Result<SameColorReport> {
    if base.min_degree() < 3 {
        return Err(Error::Precondition("every base vertex needs degree at least 3".into()));
    }
    let mut pairs_checked = 0;
    let mut mismatches = 0;
    let mut classes = [0; 2];
    for (i, c) in [CfiGraph::y(base)?, CfiGraph::y_tilde(base)?].into_iter().enumerate() {
        let table = PredicateTable::new(c.graph());
        for x in 0..c.n() {
            for y in 0..c.n() {
                pairs_checked += 1;
                if table.same_color(x, y) != (c.color(x)? == c.color(y)?) {
                    mismatches += 1;
                }
            }
        }
        classes[i] = table.class_count();
    }
    Ok(SameColorReport { pairs_checked, mismatches, classes, expected_classes: base.n() + 2 * base.edge_count() })
}
