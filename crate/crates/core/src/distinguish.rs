//! Polynomial-time recognition of `Y(G)` versus `Ỹ(G)` from an unlabelled graph.
//!
//! Gadgets of base vertices of degree at least three are exactly the classes
//! of "lies on a common cycle of length at most 8" among vertices of degree
//! at least three. Links are the gadget vertices with an outside neighbour,
//! twins are links with complementary middle neighbourhoods, and gadgets of
//! degree one or two are recovered by walking outward from known twin pairs.
//! One representative per twin pair is then chosen so that, in every gadget,
//! an even number of representatives are `b`-vertices; the parity of the
//! number of base edges whose representatives are cross-joined decides.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::cfi::Parity;
use crate::error::{Error, Result};
use crate::graph::{BaseGraph, Family, LinearComponent};

/// Longest cycle that still counts as "short".
pub const SHORT_CYCLE: usize = 8;

/// Twin pair of a recovered gadget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecoveredPair {
    /// The two vertices, smaller index first.
    pub vertices: [usize; 2],
    /// Chosen representative after the parity correction.
    pub rep: usize,
    /// Recovered base vertex this pair points to.
    pub toward: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecoveredGadget {
    pub vertices: Vec<usize>,
    pub middles: Vec<usize>,
    pub pairs: Vec<RecoveredPair>,
}

/// Outcome of [`distinguish`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distinction {
    pub verdict: Parity,
    /// Recovered base graph.
    pub base: BaseGraph,
    /// Gadget structure; empty when the input has maximum degree two.
    pub gadgets: Vec<RecoveredGadget>,
}

/// Vertices lying on a simple cycle of length at most `max_len` through `x`.
pub fn short_cycle_mates(g: &BaseGraph, x: usize, max_len: usize) -> Vec<bool> {
    let dist = g.distances_from(x);
    let mut on_cycle = vec![false; g.n()];
    let mut in_path = vec![false; g.n()];
    let mut path = vec![x];
    in_path[x] = true;
    fn walk(
        g: &BaseGraph,
        x: usize,
        max_len: usize,
        dist: &[Option<usize>],
        path: &mut Vec<usize>,
        in_path: &mut [bool],
        on_cycle: &mut [bool],
    ) {
        let end = *path.last().expect("non-empty path");
        let edges = path.len() - 1;
        for &w in g.neighbors(end) {
            if w == x && edges >= 2 {
                path.iter().for_each(|&p| on_cycle[p] = true);
            } else if !in_path[w] && dist[w].is_some_and(|d| edges + 1 + d <= max_len) {
                in_path[w] = true;
                path.push(w);
                walk(g, x, max_len, dist, path, in_path, on_cycle);
                path.pop();
                in_path[w] = false;
            }
        }
    }
    walk(g, x, max_len, &dist, &mut path, &mut in_path, &mut on_cycle);
    on_cycle
}

/// Decides whether `z` is isomorphic to `Y(G)` or to `Ỹ(G)` and recovers `G`.
///
/// Errors with [`Error::NotCfi`] if `z` is not a CFI graph over a connected
/// base graph.
pub fn distinguish(z: &BaseGraph) -> Result<Distinction> {
    if z.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if z.max_degree() <= 2 {
        return distinguish_linear(z);
    }
    let gadgets = recover_gadgets(z)?;
    finish(z, gadgets)
}

/// The base graph `G` of a CFI graph `z`.
pub fn recover_base(z: &BaseGraph) -> Result<BaseGraph> {
    Ok(distinguish(z)?.base)
}

fn not_cfi(msg: impl Into<String>) -> Error {
    Error::NotCfi(msg.into())
}

fn distinguish_linear(z: &BaseGraph) -> Result<Distinction> {
    use LinearComponent::{Cycle, Path};
    let shape = z.classify_linear()?;
    let (verdict, family) = match shape.as_slice() {
        [Path(a), Path(b)] if a % 3 == 1 && *b == a + 2 => (Parity::Original, Family::Path((a - 1) / 3 + 1)),
        [Path(a), Path(b)] if a % 3 == 2 && a == b => (Parity::Twisted, Family::Path((a - 2) / 3 + 1)),
        [Cycle(a), Cycle(b)] if a == b && a % 3 == 0 && *a >= 9 => (Parity::Original, Family::Cycle(a / 3)),
        [Cycle(a)] if a % 6 == 0 && *a >= 18 => (Parity::Twisted, Family::Cycle(a / 6)),
        _ => return Err(not_cfi(format!("degree-two graph with components {shape:?}"))),
    };
    Ok(Distinction { verdict, base: family.build()?, gadgets: Vec::new() })
}

struct Pair {
    xs: [usize; 2],
    ext: [usize; 2],
}

struct Work {
    verts: Vec<usize>,
    middles: Vec<usize>,
    pairs: Vec<Pair>,
    degree_one_link: Option<usize>,
}

fn outside_neighbors(z: &BaseGraph, x: usize, inside: &BTreeSet<usize>) -> Vec<usize> {
    z.neighbors(x).iter().copied().filter(|y| !inside.contains(y)).collect()
}

fn recover_gadgets(z: &BaseGraph) -> Result<Vec<Work>> {
    let n = z.n();
    let heavy: Vec<bool> = (0..n).map(|v| z.neighbors(v).len() >= 3).collect();
    let mut assign: Vec<Option<usize>> = vec![None; n];
    let mut gadgets: Vec<Work> = Vec::new();

    // Gadgets of degree >= 3.
    for x in 0..n {
        if !heavy[x] || assign[x].is_some() {
            continue;
        }
        let mates = short_cycle_mates(z, x, SHORT_CYCLE);
        let class: BTreeSet<usize> = (0..n).filter(|&y| y == x || (heavy[y] && mates[y])).collect();
        if class.iter().any(|&y| assign[y].is_some()) {
            return Err(not_cfi("short-cycle classes overlap"));
        }
        let size = class.len();
        let d = (3..=crate::gadget::MAX_GADGET_DEGREE)
            .find(|&d| 2 * d + (1 << (d - 1)) == size)
            .ok_or_else(|| not_cfi(format!("class of size {size} is not a gadget")))?;
        let links: Vec<usize> =
            class.iter().copied().filter(|&y| !outside_neighbors(z, y, &class).is_empty()).collect();
        let middles: Vec<usize> = class.iter().copied().filter(|y| !links.contains(y)).collect();
        if links.len() != 2 * d {
            return Err(not_cfi("wrong number of link vertices"));
        }
        let mid_pos = |y: usize| middles.binary_search(&y).ok();
        let profile = |y: usize| -> Result<Vec<bool>> {
            let mut p = vec![false; middles.len()];
            for &w in z.neighbors(y) {
                if let Some(i) = mid_pos(w) {
                    p[i] = true;
                }
            }
            Ok(p)
        };
        let profiles: Vec<Vec<bool>> = links.iter().map(|&y| profile(y)).collect::<Result<_>>()?;
        let mut pairs = Vec::new();
        let mut paired = vec![false; links.len()];
        for i in 0..links.len() {
            if paired[i] {
                continue;
            }
            let twins: Vec<usize> = (0..links.len())
                .filter(|&j| j != i && profiles[i].iter().zip(&profiles[j]).all(|(p, q)| p != q))
                .collect();
            let [j] = twins[..] else {
                return Err(not_cfi("link without a unique twin"));
            };
            if paired[j] {
                return Err(not_cfi("inconsistent twin pairs"));
            }
            paired[i] = true;
            paired[j] = true;
            let xs = [links[i], links[j]];
            let mut ext = [0; 2];
            for (k, &v) in xs.iter().enumerate() {
                let out = outside_neighbors(z, v, &class);
                let [o] = out[..] else {
                    return Err(not_cfi("link with several outside neighbours"));
                };
                ext[k] = o;
            }
            pairs.push(Pair { xs, ext });
        }
        for &m in &middles {
            if z.neighbors(m).len() != d {
                return Err(not_cfi("middle vertex of wrong degree"));
            }
        }
        let id = gadgets.len();
        class.iter().for_each(|&y| assign[y] = Some(id));
        gadgets.push(Work { verts: class.into_iter().collect(), middles, pairs, degree_one_link: None });
    }
    if gadgets.is_empty() {
        return Err(not_cfi("no gadget of degree three or more"));
    }

    // Gadgets of degree one and two, reached from known twin pairs.
    let mut queue: VecDeque<(usize, usize)> =
        gadgets.iter().enumerate().flat_map(|(g, w)| (0..w.pairs.len()).map(move |p| (g, p))).collect();
    while let Some((g, p)) = queue.pop_front() {
        let (xs, ys) = (gadgets[g].pairs[p].xs, gadgets[g].pairs[p].ext);
        match (assign[ys[0]], assign[ys[1]]) {
            (Some(a), Some(b)) if a == b => continue,
            (None, None) => {}
            _ => return Err(not_cfi("twin pair joined to two different gadgets")),
        }
        if ys[0] == ys[1] {
            return Err(not_cfi("twins share an outside neighbour"));
        }
        let others: Vec<Vec<usize>> =
            ys.iter().map(|&y| z.neighbors(y).iter().copied().filter(|w| !xs.contains(w)).collect()).collect();
        let id = gadgets.len();
        let back = Pair { xs: ys, ext: xs };
        let work = match (&others[0][..], &others[1][..]) {
            ([], [m]) | ([m], []) => {
                let m = *m;
                if z.neighbors(m).len() != 1 || assign[m].is_some() {
                    return Err(not_cfi("malformed degree-one gadget"));
                }
                let lone = if others[0].is_empty() { ys[0] } else { ys[1] };
                let mut verts = vec![ys[0], ys[1], m];
                verts.sort_unstable();
                Work { verts, middles: vec![m], pairs: vec![back], degree_one_link: Some(lone) }
            }
            ([m1], [m2]) if m1 != m2 => {
                let ms = [*m1, *m2];
                let mut zs = [0; 2];
                for k in 0..2 {
                    let nb: Vec<usize> = z.neighbors(ms[k]).iter().copied().filter(|&w| w != ys[k]).collect();
                    let [w] = nb[..] else {
                        return Err(not_cfi("malformed degree-two gadget"));
                    };
                    zs[k] = w;
                }
                let mut ext = [0; 2];
                for k in 0..2 {
                    let nb: Vec<usize> = z.neighbors(zs[k]).iter().copied().filter(|&w| w != ms[k]).collect();
                    let [w] = nb[..] else {
                        return Err(not_cfi("malformed degree-two gadget"));
                    };
                    ext[k] = w;
                }
                let mut verts = vec![ys[0], ys[1], ms[0], ms[1], zs[0], zs[1]];
                verts.sort_unstable();
                verts.dedup();
                if verts.len() != 6 || verts.iter().any(|&v| assign[v].is_some()) {
                    return Err(not_cfi("malformed degree-two gadget"));
                }
                let mut middles = ms.to_vec();
                middles.sort_unstable();
                queue.push_back((id, 1));
                Work { verts, middles, pairs: vec![back, Pair { xs: zs, ext }], degree_one_link: None }
            }
            _ => return Err(not_cfi("unexpected neighbourhood next to a twin pair")),
        };
        work.verts.iter().for_each(|&v| assign[v] = Some(id));
        gadgets.push(work);
    }
    if assign.iter().any(Option::is_none) {
        return Err(not_cfi("vertices outside every gadget"));
    }
    Ok(gadgets)
}

fn finish(z: &BaseGraph, mut gadgets: Vec<Work>) -> Result<Distinction> {
    gadgets.sort_by_key(|w| w.verts[0]);
    let mut owner = vec![0; z.n()];
    for (i, w) in gadgets.iter().enumerate() {
        w.verts.iter().for_each(|&v| owner[v] = i);
    }
    let k = gadgets.len();
    let mut base = BaseGraph::empty(k);
    let mut out = Vec::with_capacity(k);
    for (i, w) in gadgets.iter_mut().enumerate() {
        for p in w.pairs.iter_mut() {
            p.xs.sort_unstable();
        }
        w.pairs.sort_by_key(|p| p.xs[0]);
        let mut seen = BTreeSet::new();
        for p in &w.pairs {
            let t = owner[p.ext[0]];
            if t != owner[p.ext[1]] || t == i || !seen.insert(t) {
                return Err(not_cfi("twin pairs do not induce a simple base graph"));
            }
            base.add_edge(i, t)?;
        }
    }
    for w in &gadgets {
        let mut reps: Vec<usize> = w.pairs.iter().map(|p| p.xs[0]).collect();
        if let Some(lone) = w.degree_one_link {
            reps[0] = lone;
        } else {
            let m0 = w.middles[0];
            let hits = reps.iter().filter(|&&r| z.has_edge(r, m0)).count();
            if hits % 2 == 1 {
                let last = w.pairs.len() - 1;
                let p = &w.pairs[last];
                reps[last] = if reps[last] == p.xs[0] { p.xs[1] } else { p.xs[0] };
            }
        }
        out.push(RecoveredGadget {
            vertices: w.verts.clone(),
            middles: w.middles.clone(),
            pairs: w
                .pairs
                .iter()
                .zip(&reps)
                .map(|(p, &rep)| RecoveredPair { vertices: p.xs, rep, toward: owner[p.ext[0]] })
                .collect(),
        });
    }
    if !base.is_connected() {
        return Err(Error::Disconnected);
    }
    let rep_toward = |u: usize, v: usize| -> &RecoveredPair {
        out[u].pairs.iter().find(|p| p.toward == v).expect("edge has pairs at both ends")
    };
    let mut crossed = 0;
    for (u, v) in base.edges() {
        let pu = rep_toward(u, v);
        let pv = rep_toward(v, u);
        let partner = z.neighbors(pu.rep).iter().copied().find(|w| pv.vertices.contains(w));
        match partner {
            Some(w) if w != pv.rep => crossed += 1,
            Some(_) => {}
            None => return Err(not_cfi("twin pairs of an edge are not joined")),
        }
    }
    let verdict = if crossed % 2 == 0 { Parity::Original } else { Parity::Twisted };
    Ok(Distinction { verdict, base, gadgets: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfi::{CfiGraph, CfiVertex, Side};

    fn build(f: &str) -> BaseGraph {
        f.parse::<Family>().unwrap().build().unwrap()
    }

    #[test]
    fn verdicts_on_small_bases() {
        for f in ["P1", "P2", "P4", "C3", "C6", "K4", "S3", "grid2x3", "K3,3", "K5"] {
            let g = build(f);
            let y = distinguish(CfiGraph::y(&g).unwrap().graph()).unwrap();
            let yt = distinguish(CfiGraph::y_tilde(&g).unwrap().graph()).unwrap();
            assert_eq!(y.verdict, Parity::Original, "{f}");
            assert_eq!(yt.verdict, Parity::Twisted, "{f}");
            assert_eq!(y.base.edge_count(), g.edge_count(), "{f}");
        }
    }

    #[test]
    fn representatives_have_even_b_count() {
        let g = build("grid2x3");
        let c = CfiGraph::new(&g, &[(0, 1), (1, 4)], false).unwrap();
        let d = distinguish(c.graph()).unwrap();
        for gadget in &d.gadgets {
            let bs = gadget
                .pairs
                .iter()
                .filter(|p| matches!(c.vertex(p.rep).unwrap(), CfiVertex::Link { side: Side::B, .. }))
                .count();
            assert_eq!(bs % 2, 0);
        }
    }

    #[test]
    fn short_cycles_inside_gadget() {
        let y = CfiGraph::y(&build("K4")).unwrap();
        for x in y.gadget_range(0) {
            let mates = short_cycle_mates(y.graph(), x, SHORT_CYCLE);
            for (w, &mate) in mates.iter().enumerate() {
                assert_eq!(mate, y.gadget_of(w) == 0, "x={x} w={w}");
            }
        }
    }

    #[test]
    fn rejects_non_cfi_graphs() {
        assert!(matches!(distinguish(&build("K4")), Err(Error::NotCfi(_))));
        assert!(matches!(distinguish(&build("C5")), Err(Error::NotCfi(_))));
        assert!(matches!(distinguish(&build("petersen")), Err(Error::NotCfi(_))));
        assert_eq!(distinguish(&BaseGraph::empty(0)), Err(Error::EmptyGraph));
    }
}
