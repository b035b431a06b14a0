//! Homomorphism counts from the doubly subdivided base graph into CFI graphs,
//! and their description as GF(2) linear systems.
//!
//! `G₂` replaces every edge `uv` of `G` by the path `u, w(u,v), w(v,u), v`.
//! The projection `p: Y(G) → G₂` sends `a(u,v), b(u,v) ↦ w(u,v)` and every
//! middle of gadget `u` to `u`. For an endomorphism `g` of `G₂` the
//! homomorphisms `f: G₂ → Yⁱ(G)` with `p ∘ f = g` correspond exactly to the
//! solutions of the system built by [`build_system`], where `Y⁰ = Y(G)` and
//! `Y¹ = Ỹ(G)` (least edge twisted).

use serde::Serialize;

use crate::cfi::{CfiGraph, CfiVertex};
use crate::error::{Error, Result};
use crate::graph::BaseGraph;

/// Largest source graph accepted by the exhaustive counters.
pub const MAX_SOURCE_VERTICES: usize = 16;
/// Upper bound on the number of homomorphisms that are materialised.
pub const MAX_ENUMERATED: usize = 1 << 20;

/// Vertex of the subdivided graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubVertex {
    Base(usize),
    /// `w(from,to)`: the subdivision vertex of edge `from–to` next to `from`.
    Mid {
        from: usize,
        to: usize,
    },
}

/// `G₂` with its vertex naming. Base vertices keep their indices; edge `i`
/// of `G` (in sorted order) contributes `w(u,v) = n + 2i` and
/// `w(v,u) = n + 2i + 1` for `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    base: BaseGraph,
    graph: BaseGraph,
}

impl Subdivision {
    pub fn new(base: &BaseGraph) -> Self {
        let n = base.n();
        let edges = base.edges();
        let mut graph = BaseGraph::empty(n + 2 * edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            let (wu, wv) = (n + 2 * i, n + 2 * i + 1);
            for (a, b) in [(u, wu), (wu, wv), (wv, v)] {
                graph.add_edge(a, b).expect("in range");
            }
        }
        Subdivision { base: base.clone(), graph }
    }

    pub fn graph(&self) -> &BaseGraph {
        &self.graph
    }

    pub fn base(&self) -> &BaseGraph {
        &self.base
    }

    pub fn vertex(&self, x: usize) -> SubVertex {
        let n = self.base.n();
        if x < n {
            return SubVertex::Base(x);
        }
        let (u, v) = self.base.edges()[(x - n) / 2];
        if (x - n).is_multiple_of(2) {
            SubVertex::Mid { from: u, to: v }
        } else {
            SubVertex::Mid { from: v, to: u }
        }
    }

    pub fn index(&self, v: SubVertex) -> Result<usize> {
        match v {
            SubVertex::Base(u) if u < self.base.n() => Ok(u),
            SubVertex::Base(u) => Err(Error::VertexOutOfRange { vertex: u, n: self.base.n() }),
            SubVertex::Mid { from, to } => {
                let e = self.base.edge_index(from, to).ok_or(Error::NotAnEdge { a: from, b: to })?;
                Ok(self.base.n() + 2 * e + (from > to) as usize)
            }
        }
    }
}

/// The projection `p` from a CFI graph over `s.base()` onto `G₂`.
pub fn projection(c: &CfiGraph, s: &Subdivision) -> Result<Vec<usize>> {
    if c.base() != s.base() {
        return Err(Error::Precondition("CFI graph and subdivision have different bases".into()));
    }
    (0..c.n())
        .map(|x| match c.vertex(x)? {
            CfiVertex::Link { u, v, .. } => s.index(SubVertex::Mid { from: u, to: v }),
            CfiVertex::Middle { u, .. } => Ok(u),
        })
        .collect()
}

fn guard_source(f: &BaseGraph) -> Result<()> {
    if f.n() > MAX_SOURCE_VERTICES {
        return Err(Error::TooLarge(format!("source graph has more than {MAX_SOURCE_VERTICES} vertices")));
    }
    Ok(())
}

/// Enumerates homomorphisms `f → h` subject to `allowed(x, y)` (may `x ↦ y`),
/// calling `visit` on each; stops when `visit` returns `false`.
fn for_each_hom(
    f: &BaseGraph,
    h: &BaseGraph,
    allowed: &dyn Fn(usize, usize) -> bool,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) {
    let n = f.n();
    // Order: breadth-first within each component so most vertices have an
    // already-mapped neighbour.
    let mut order = Vec::with_capacity(n);
    for comp in f.components() {
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::from([comp[0]]);
        seen[comp[0]] = true;
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in f.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    let mut pos = vec![0; n];
    for (i, &x) in order.iter().enumerate() {
        pos[x] = i;
    }
    let earlier: Vec<Vec<usize>> =
        order.iter().map(|&x| f.neighbors(x).iter().copied().filter(|&y| pos[y] < pos[x]).collect()).collect();
    let mut map = vec![usize::MAX; n];
    fn rec(
        depth: usize,
        order: &[usize],
        earlier: &[Vec<usize>],
        h: &BaseGraph,
        allowed: &dyn Fn(usize, usize) -> bool,
        map: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if depth == order.len() {
            return visit(map);
        }
        let x = order[depth];
        let candidates: Vec<usize> = match earlier[depth].first() {
            Some(&a) => h.neighbors(map[a]).to_vec(),
            None => (0..h.n()).collect(),
        };
        for y in candidates {
            if !allowed(x, y) || !earlier[depth].iter().all(|&e| h.has_edge(map[e], y)) {
                continue;
            }
            map[x] = y;
            if !rec(depth + 1, order, earlier, h, allowed, map, visit) {
                return false;
            }
        }
        map[x] = usize::MAX;
        true
    }
    rec(0, &order, &earlier, h, allowed, &mut map, visit);
}

/// Number of homomorphisms `f → h`.
pub fn hom_count(f: &BaseGraph, h: &BaseGraph) -> Result<u128> {
    guard_source(f)?;
    let mut count = 0u128;
    for_each_hom(f, h, &|_, _| true, &mut |_| {
        count += 1;
        true
    });
    Ok(count)
}

/// All homomorphisms `f → h`.
pub fn homomorphisms(f: &BaseGraph, h: &BaseGraph) -> Result<Vec<Vec<usize>>> {
    guard_source(f)?;
    let mut out = Vec::new();
    let mut overflow = false;
    for_each_hom(f, h, &|_, _| true, &mut |m| {
        out.push(m.to_vec());
        overflow = out.len() > MAX_ENUMERATED;
        !overflow
    });
    if overflow {
        return Err(Error::TooLarge(format!("more than {MAX_ENUMERATED} homomorphisms")));
    }
    Ok(out)
}

/// `|Homⁱ_g|`: homomorphisms `f: G₂ → c` with `p ∘ f = g`, by search.
pub fn hom_fiber_count(c: &CfiGraph, s: &Subdivision, g: &[usize]) -> Result<u128> {
    guard_source(s.graph())?;
    check_endomorphism(s, g)?;
    let p = projection(c, s)?;
    let mut count = 0u128;
    for_each_hom(s.graph(), c.graph(), &|x, y| p[y] == g[x], &mut |_| {
        count += 1;
        true
    });
    Ok(count)
}

fn check_endomorphism(s: &Subdivision, g: &[usize]) -> Result<()> {
    let h = s.graph();
    if g.len() != h.n() || g.iter().any(|&y| y >= h.n()) || h.edges().iter().any(|&(a, b)| !h.has_edge(g[a], g[b])) {
        return Err(Error::Precondition("map is not an endomorphism of the subdivided graph".into()));
    }
    Ok(())
}

/// Name of a variable of the system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Var {
    /// `x_{α,u}`: whether `a(g(α),u)` lies in the middle `f(α)`.
    Member { alpha: usize, u: usize },
    /// `x_α`: whether `f(α)` is the `a`-vertex.
    Side { alpha: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EqFamily {
    /// Middles are even subsets.
    Parity,
    /// A middle and an adjacent link agree.
    Incidence,
    /// Two links across a base edge agree, or disagree on the twisted edge.
    Cross,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Equation {
    pub vars: Vec<usize>,
    pub rhs: bool,
    pub family: EqFamily,
}

/// Linear system over GF(2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gf2System {
    pub vars: Vec<Var>,
    pub equations: Vec<Equation>,
}

/// Builds `Eqⁱ_g` for an endomorphism `g` of `G₂`; `twisted` selects `i = 1`.
pub fn build_system(s: &Subdivision, g: &[usize], twisted: bool) -> Result<Gf2System> {
    check_endomorphism(s, g)?;
    let base = s.base();
    let least = *base.edges().first().ok_or(Error::Precondition("base graph needs an edge".into()))?;
    let h = s.graph();
    let mut vars = Vec::new();
    let mut member = std::collections::HashMap::new();
    let mut side = vec![usize::MAX; h.n()];
    for alpha in 0..h.n() {
        match s.vertex(g[alpha]) {
            SubVertex::Base(x) => {
                for &u in base.neighbors(x) {
                    member.insert((alpha, u), vars.len());
                    vars.push(Var::Member { alpha, u });
                }
            }
            SubVertex::Mid { .. } => {
                side[alpha] = vars.len();
                vars.push(Var::Side { alpha });
            }
        }
    }
    let mut equations = Vec::new();
    for alpha in 0..h.n() {
        if let SubVertex::Base(x) = s.vertex(g[alpha]) {
            let vs = base.neighbors(x).iter().map(|&u| member[&(alpha, u)]).collect();
            equations.push(Equation { vars: vs, rhs: false, family: EqFamily::Parity });
        }
    }
    for (a, b) in h.edges() {
        for (alpha, beta) in [(a, b), (b, a)] {
            match (s.vertex(g[alpha]), s.vertex(g[beta])) {
                (SubVertex::Base(x), SubVertex::Mid { from, to }) if from == x => {
                    equations.push(Equation {
                        vars: vec![member[&(alpha, to)], side[beta]],
                        rhs: false,
                        family: EqFamily::Incidence,
                    });
                }
                (SubVertex::Mid { from: u, to: v }, SubVertex::Mid { from: v2, to: u2 })
                    if alpha == a && u == u2 && v == v2 =>
                {
                    let edge = (u.min(v), u.max(v));
                    equations.push(Equation {
                        vars: vec![side[alpha], side[beta]],
                        rhs: twisted && edge == least,
                        family: EqFamily::Cross,
                    });
                }
                _ => {}
            }
        }
    }
    Ok(Gf2System { vars, equations })
}

/// Solution count of a GF(2) system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Gf2Count {
    pub consistent: bool,
    pub rank: usize,
    /// `log2` of the number of solutions, when consistent.
    pub exponent: Option<usize>,
}

impl Gf2Count {
    /// `0` or `2^exponent`; `None` if it does not fit in a `u128`.
    pub fn count(&self) -> Option<u128> {
        match self.exponent {
            None => Some(0),
            Some(e) if e < 128 => Some(1u128 << e),
            Some(_) => None,
        }
    }
}

/// Gaussian elimination over GF(2).
pub fn gf2_count(sys: &Gf2System) -> Gf2Count {
    let nv = sys.vars.len();
    let words = nv / 64 + 1;
    // Bit `nv` holds the right-hand side.
    let mut rows: Vec<Vec<u64>> = sys
        .equations
        .iter()
        .map(|e| {
            let mut row = vec![0u64; words];
            for &v in &e.vars {
                row[v / 64] ^= 1 << (v % 64);
            }
            if e.rhs {
                row[nv / 64] ^= 1 << (nv % 64);
            }
            row
        })
        .collect();
    let bit = |row: &[u64], i: usize| row[i / 64] >> (i % 64) & 1 == 1;
    let mut rank = 0;
    for col in 0..nv {
        let Some(p) = (rank..rows.len()).find(|&r| bit(&rows[r], col)) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && bit(row, col) {
                row.iter_mut().zip(&pivot).for_each(|(a, b)| *a ^= b);
            }
        }
        rank += 1;
    }
    let consistent = rows[rank..].iter().all(|r| !bit(r, nv));
    Gf2Count { consistent, rank, exponent: consistent.then(|| nv - rank) }
}

/// `(hom(G₂, Y(G)), hom(G₂, Ỹ(G)))`.
pub fn hom_gap(base: &BaseGraph) -> Result<(u128, u128)> {
    let s = Subdivision::new(base);
    guard_source(s.graph())?;
    let y = CfiGraph::y(base)?;
    let yt = CfiGraph::y_tilde(base)?;
    Ok((hom_count(s.graph(), y.graph())?, hom_count(s.graph(), yt.graph())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn build(f: &str) -> BaseGraph {
        f.parse::<Family>().unwrap().build().unwrap()
    }

    #[test]
    fn subdivision_shape() {
        let g = build("K4");
        let s = Subdivision::new(&g);
        assert_eq!(s.graph().n(), 4 + 12);
        assert_eq!(s.graph().edge_count(), 18);
        for x in 0..s.graph().n() {
            assert_eq!(s.index(s.vertex(x)).unwrap(), x);
        }
        assert_eq!(s.vertex(5), SubVertex::Mid { from: 1, to: 0 });
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let g = build("C4");
        let s = Subdivision::new(&g);
        for c in [CfiGraph::y(&g).unwrap(), CfiGraph::y_tilde(&g).unwrap()] {
            let p = projection(&c, &s).unwrap();
            for (x, y) in c.graph().edges() {
                assert!(s.graph().has_edge(p[x], p[y]));
            }
        }
    }

    #[test]
    fn hom_counts_of_cycles() {
        let c9 = build("C9");
        let c3 = build("C3");
        assert_eq!(hom_count(&c9, &c9).unwrap(), 18);
        assert_eq!(hom_count(&c3, &c3).unwrap(), 6);
        assert_eq!(hom_count(&build("C4"), &build("P1")).unwrap(), 2);
        assert_eq!(hom_count(&c3, &build("C4")).unwrap(), 0);
        assert!(hom_count(&BaseGraph::empty(17), &c3).is_err());
    }

    #[test]
    fn gf2_small_systems() {
        let sys = Gf2System {
            vars: vec![Var::Side { alpha: 0 }, Var::Side { alpha: 1 }],
            equations: vec![
                Equation { vars: vec![0, 1], rhs: true, family: EqFamily::Cross },
                Equation { vars: vec![0, 1], rhs: false, family: EqFamily::Cross },
            ],
        };
        assert_eq!(gf2_count(&sys).count(), Some(0));
        let sys = Gf2System { vars: sys.vars.clone(), equations: vec![sys.equations[0].clone()] };
        assert_eq!(gf2_count(&sys), Gf2Count { consistent: true, rank: 1, exponent: Some(1) });
    }

    #[test]
    fn identity_system_is_inconsistent_only_when_twisted() {
        let g = build("K4");
        let s = Subdivision::new(&g);
        let id: Vec<usize> = (0..s.graph().n()).collect();
        assert!(gf2_count(&build_system(&s, &id, false).unwrap()).consistent);
        assert!(!gf2_count(&build_system(&s, &id, true).unwrap()).consistent);
    }

    #[test]
    fn every_variable_occurs_in_an_equation() {
        let g = build("P2");
        let s = Subdivision::new(&g);
        for e in homomorphisms(s.graph(), s.graph()).unwrap().iter().take(50) {
            let sys = build_system(&s, e, true).unwrap();
            for v in 0..sys.vars.len() {
                assert!(sys.equations.iter().any(|q| q.vars.contains(&v)));
            }
        }
    }
}
