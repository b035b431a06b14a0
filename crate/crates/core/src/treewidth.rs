//! Exact treewidth by dynamic programming over vertex subsets, tree
//! decompositions built from elimination orders, and the cops-and-robber
//! game on small graphs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::BaseGraph;

/// Largest graph accepted by the exponential algorithms here.
pub const MAX_VERTICES: usize = 16;

fn guard(g: &BaseGraph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.n() > MAX_VERTICES {
        return Err(Error::TooLarge(format!("exact treewidth is limited to {MAX_VERTICES} vertices")));
    }
    Ok(())
}

fn adjacency_masks(g: &BaseGraph) -> Vec<u32> {
    (0..g.n()).map(|v| g.neighbors(v).iter().map(|&w| 1u32 << w).sum()).collect()
}

/// Vertices reachable from `start` inside `allowed` (which must contain `start`).
fn reach(adj: &[u32], allowed: u32, start: usize) -> u32 {
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        next &= allowed & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Vertices outside `s ∪ {v}` with a path from `v` whose interior lies in `s`.
fn q_size(adj: &[u32], s: u32, v: usize) -> u32 {
    let inner = reach(adj, s | 1 << v, v);
    let mut out = 0;
    let mut f = inner;
    while f != 0 {
        let w = f.trailing_zeros() as usize;
        f &= f - 1;
        out |= adj[w];
    }
    (out & !inner & !s).count_ones()
}

/// Exact treewidth together with an optimal elimination order.
pub fn treewidth_with_order(g: &BaseGraph) -> Result<(usize, Vec<usize>)> {
    guard(g)?;
    let n = g.n();
    let adj = adjacency_masks(g);
    let full = (1u32 << n) - 1;
    let mut tw = vec![0u32; 1 << n];
    let mut choice = vec![0u8; 1 << n];
    for s in 1..=full {
        let mut best = u32::MAX;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            let prev = if rest == 0 { 0 } else { tw[rest as usize] };
            let val = prev.max(q_size(&adj, rest, v));
            if val < best {
                best = val;
                choice[s as usize] = v as u8;
            }
        }
        tw[s as usize] = best;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = choice[s as usize] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    Ok((tw[full as usize] as usize, order))
}

pub fn treewidth(g: &BaseGraph) -> Result<usize> {
    Ok(treewidth_with_order(g)?.0)
}

/// Tree decomposition: `bags[i]` is a sorted vertex list, `edges` join bags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }
}

/// Decomposition from an elimination order: bag of `v` is `v` plus its
/// neighbours eliminated later in the fill-in graph.
pub fn decomposition_from_order(g: &BaseGraph, order: &[usize]) -> Result<TreeDecomposition> {
    crate::graph::check_permutation(order, g.n())?;
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut fill: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = (0..n).filter(|&w| fill[v][w] && pos[w] > i).collect();
        for &a in &later {
            for &b in &later {
                if a != b {
                    fill[a][b] = true;
                }
            }
        }
        let mut bag = later.clone();
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
        if let Some(&p) = later.iter().min_by_key(|&&w| pos[w]) {
            edges.push((i, pos[p]));
        }
    }
    // Join the trees of a forest into one tree.
    let roots: Vec<usize> = (0..n).filter(|&i| !edges.iter().any(|&(a, _)| a == i)).collect();
    for w in roots.windows(2) {
        edges.push((w[0], w[1]));
    }
    Ok(TreeDecomposition { bags, edges })
}

/// Exact treewidth and a witnessing decomposition.
pub fn tree_decomposition(g: &BaseGraph) -> Result<TreeDecomposition> {
    let (_, order) = treewidth_with_order(g)?;
    decomposition_from_order(g, &order)
}

/// Checks the three tree-decomposition axioms and that the bag graph is a tree.
pub fn validate_decomposition(g: &BaseGraph, td: &TreeDecomposition) -> Result<()> {
    let fail = |m: &str| Err(Error::Precondition(format!("invalid tree decomposition: {m}")));
    let k = td.bags.len();
    if k == 0 {
        return fail("no bags");
    }
    let tree = BaseGraph::from_edges(k, &td.edges)?;
    if tree.edge_count() != k - 1 || !tree.is_connected() {
        return fail("bag graph is not a tree");
    }
    for bag in &td.bags {
        if bag.iter().any(|&v| v >= g.n()) {
            return fail("bag mentions unknown vertex");
        }
    }
    for v in 0..g.n() {
        let holding: Vec<usize> = (0..k).filter(|&i| td.bags[i].contains(&v)).collect();
        if holding.is_empty() {
            return fail("vertex not covered");
        }
        let sub = BaseGraph::from_edges(
            holding.len(),
            &td.edges
                .iter()
                .filter_map(|&(a, b)| {
                    let ia = holding.iter().position(|&x| x == a)?;
                    let ib = holding.iter().position(|&x| x == b)?;
                    Some((ia, ib))
                })
                .collect::<Vec<_>>(),
        )?;
        if !sub.is_connected() {
            return fail("bags containing a vertex are not connected");
        }
    }
    for (u, v) in g.edges() {
        if !td.bags.iter().any(|b| b.contains(&u) && b.contains(&v)) {
            return fail("edge not covered");
        }
    }
    Ok(())
}

/// Whether the robber escapes `k` cops forever.
///
/// Cops are visible and move one at a time: each round one cop is added
/// (while fewer than `k` are placed) or lifted and put down elsewhere. The
/// robber then runs along paths avoiding the cops that stayed put and must
/// stop off the new cop position. He is caught when no such vertex remains.
pub fn robber_wins(g: &BaseGraph, k: usize) -> Result<bool> {
    guard(g)?;
    let n = g.n();
    if k == 0 {
        return Ok(true);
    }
    let adj = adjacency_masks(g);
    let full = (1u32 << n) - 1;
    let states: Vec<u32> = (0..=full).filter(|s| s.count_ones() as usize <= k).collect();
    // cop_wins[s][r]
    let mut cop_wins = vec![vec![false; n]; 1 << n];
    let moves = |s: u32| -> Vec<(u32, u32)> {
        // (stationary cops, new cop set)
        let mut out = Vec::new();
        for x in 0..n {
            if s >> x & 1 == 1 {
                continue;
            }
            if (s.count_ones() as usize) < k {
                out.push((s, s | 1 << x));
            }
            let mut bits = s;
            while bits != 0 {
                let y = bits.trailing_zeros();
                bits &= bits - 1;
                let stay = s & !(1 << y);
                out.push((stay, stay | 1 << x));
            }
        }
        out
    };
    let all_moves: Vec<Vec<(u32, u32)>> = states.iter().map(|&s| moves(s)).collect();
    loop {
        let mut changed = false;
        for (si, &s) in states.iter().enumerate() {
            for r in 0..n {
                if s >> r & 1 == 1 || cop_wins[s as usize][r] {
                    continue;
                }
                let win = all_moves[si].iter().any(|&(stay, next)| {
                    let region = reach(&adj, full & !stay, r) & !next;
                    let mut bits = region;
                    while bits != 0 {
                        let w = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        if !cop_wins[next as usize][w] {
                            return false;
                        }
                    }
                    true
                });
                if win {
                    cop_wins[s as usize][r] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let cops_win = (0..n).any(|x| (0..n).filter(|&r| r != x).all(|r| cop_wins[1 << x][r]));
    Ok(!cops_win)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn build(f: &str) -> BaseGraph {
        f.parse::<Family>().unwrap().build().unwrap()
    }

    #[test]
    fn known_widths() {
        let cases =
            [("P3", 1), ("C5", 2), ("K4", 3), ("K3,3", 3), ("grid2x3", 2), ("petersen", 4), ("S3", 1), ("K5", 4)];
        for (f, w) in cases {
            let g = build(f);
            assert_eq!(treewidth(&g).unwrap(), w, "{f}");
            let td = tree_decomposition(&g).unwrap();
            validate_decomposition(&g, &td).unwrap();
            assert_eq!(td.width(), w, "{f}");
        }
        assert_eq!(treewidth(&BaseGraph::empty(1)).unwrap(), 0);
        assert_eq!(treewidth(&BaseGraph::empty(3)).unwrap(), 0);
    }

    #[test]
    fn guards() {
        assert_eq!(treewidth(&BaseGraph::empty(0)), Err(Error::EmptyGraph));
        assert!(matches!(treewidth(&BaseGraph::empty(17)), Err(Error::TooLarge(_))));
    }

    #[test]
    fn validator_rejects_broken_decompositions() {
        let g = build("C5");
        let mut td = tree_decomposition(&g).unwrap();
        td.bags[0].clear();
        assert!(validate_decomposition(&g, &td).is_err());
        let td = TreeDecomposition { bags: vec![vec![0, 1, 2, 3, 4]; 2], edges: vec![] };
        assert!(validate_decomposition(&g, &td).is_err());
    }

    #[test]
    fn robber_matches_width_on_small_graphs() {
        for f in ["P3", "C5", "K4", "S3", "grid2x3"] {
            let g = build(f);
            let w = treewidth(&g).unwrap();
            for k in 0..=g.n() {
                assert_eq!(robber_wins(&g, k).unwrap(), w >= k, "{f} k={k}");
            }
        }
    }
}
