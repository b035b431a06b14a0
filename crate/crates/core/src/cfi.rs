//! The graphs `X(G)`, `X̃(G)`, `Y(G)`, `Ỹ(G)` and their twisted variants.
//!
//! Every base vertex `u` of degree `d` carries a copy of the gadget of
//! degree `d`; its links are `a(u,v)`, `b(u,v)` for neighbours `v`, and its
//! middles are even subsets of those neighbours (stored as masks over the
//! neighbour ranks of `u`). An untwisted base edge `uv` joins `a(u,v)–a(v,u)`
//! and `b(u,v)–b(v,u)`; a twisted one joins `a(u,v)–b(v,u)` and
//! `b(u,v)–a(v,u)`.
//!
//! Vertices of gadget `u` occupy a contiguous index block ordered as
//! `a(u,v₀), b(u,v₀), a(u,v₁), …` followed by the middles by mask value.

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gadget::{is_even, Gadget, GadgetAut, GadgetVertex, MAX_GADGET_DEGREE};
use crate::graph::{check_permutation, BaseGraph};
use crate::io::GraphDoc;
use crate::iso::Colored;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// Named vertex of a CFI graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CfiVertex {
    /// `a(u,v)` or `b(u,v)`.
    Link { u: usize, v: usize, side: Side },
    /// Even subset of the neighbours of `u`, as a mask over neighbour ranks.
    Middle { u: usize, mask: u32 },
}

impl CfiVertex {
    pub fn base(&self) -> usize {
        match *self {
            CfiVertex::Link { u, .. } | CfiVertex::Middle { u, .. } => u,
        }
    }
}

/// Vertex colour: `c1` is `(u, rank of v)` for links `a(u,v)`, `b(u,v)` and
/// absent for middles; `c2` is the base vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Color {
    pub c1: Option<(usize, usize)>,
    pub c2: usize,
}

/// Which of the two isomorphism classes a twist set produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    /// Even number of twisted edges: isomorphic to `X(G)`.
    Original,
    /// Odd number of twisted edges: isomorphic to `X̃(G)`.
    Twisted,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Original => "original",
            Parity::Twisted => "twisted",
        })
    }
}

/// CFI graph over a connected base graph with a set of twisted edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfiGraph {
    base: BaseGraph,
    twisted: Vec<bool>,
    colored: bool,
    offsets: Vec<usize>,
    graph: BaseGraph,
}

impl CfiGraph {
    /// Builds the graph with twist set equal to the symmetric difference of
    /// `twists` (so listing an edge twice cancels it).
    pub fn new(base: &BaseGraph, twists: &[(usize, usize)], colored: bool) -> Result<Self> {
        if base.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        if !base.is_connected() {
            return Err(Error::Disconnected);
        }
        if base.n() < 2 {
            return Err(Error::Precondition("base graph needs an edge".into()));
        }
        if base.max_degree() > MAX_GADGET_DEGREE {
            return Err(Error::DegreeTooLarge(base.max_degree()));
        }
        let mut twisted = vec![false; base.edge_count()];
        for &(u, v) in twists {
            let e = base.edge_index(u, v).ok_or(Error::NotAnEdge { a: u, b: v })?;
            twisted[e] ^= true;
        }
        Ok(Self::assemble(base.clone(), twisted, colored))
    }

    fn assemble(base: BaseGraph, twisted: Vec<bool>, colored: bool) -> Self {
        let mut offsets = Vec::with_capacity(base.n() + 1);
        let mut total = 0;
        for u in 0..base.n() {
            offsets.push(total);
            total += Gadget::new(base.neighbors(u).len()).expect("degree checked").n();
        }
        offsets.push(total);
        let mut c = CfiGraph { base, twisted, colored, offsets, graph: BaseGraph::empty(total) };
        let mut graph = BaseGraph::empty(total);
        for u in 0..c.base.n() {
            let gd = c.gadget(u);
            let local = gd.graph();
            for (x, y) in local.edges() {
                graph.add_edge(c.from_local(u, x), c.from_local(u, y)).expect("in range");
            }
        }
        for (e, (u, v)) in c.base.edges().into_iter().enumerate() {
            let au = c.link_index(u, v, Side::A).expect("edge");
            let bu = au + 1;
            let av = c.link_index(v, u, Side::A).expect("edge");
            let bv = av + 1;
            if c.twisted[e] {
                graph.add_edge(au, bv).expect("in range");
                graph.add_edge(bu, av).expect("in range");
            } else {
                graph.add_edge(au, av).expect("in range");
                graph.add_edge(bu, bv).expect("in range");
            }
        }
        c.graph = graph;
        c
    }

    /// `X(G)` (coloured) or `Y(G)` (uncoloured).
    pub fn untwisted(base: &BaseGraph, colored: bool) -> Result<Self> {
        Self::new(base, &[], colored)
    }

    /// `X̃(G)` / `Ỹ(G)`: the lexicographically least edge is twisted.
    pub fn tilde(base: &BaseGraph, colored: bool) -> Result<Self> {
        let first = *base.edges().first().ok_or(Error::Precondition("base graph needs an edge".into()))?;
        Self::new(base, &[first], colored)
    }

    pub fn x(base: &BaseGraph) -> Result<Self> {
        Self::untwisted(base, true)
    }

    pub fn x_tilde(base: &BaseGraph) -> Result<Self> {
        Self::tilde(base, true)
    }

    pub fn y(base: &BaseGraph) -> Result<Self> {
        Self::untwisted(base, false)
    }

    pub fn y_tilde(base: &BaseGraph) -> Result<Self> {
        Self::tilde(base, false)
    }

    pub fn base(&self) -> &BaseGraph {
        &self.base
    }

    pub fn graph(&self) -> &BaseGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn is_colored(&self) -> bool {
        self.colored
    }

    /// Same graph with colours switched on or off.
    pub fn with_colors(&self, colored: bool) -> Self {
        CfiGraph { colored, ..self.clone() }
    }

    pub fn twist_edges(&self) -> Vec<(usize, usize)> {
        self.base.edges().into_iter().zip(&self.twisted).filter(|(_, &t)| t).map(|(e, _)| e).collect()
    }

    pub fn parity(&self) -> Parity {
        if self.twisted.iter().filter(|&&t| t).count() % 2 == 0 {
            Parity::Original
        } else {
            Parity::Twisted
        }
    }

    /// Same construction with edge `uv` additionally twisted (or untwisted).
    pub fn toggle_twist(&self, u: usize, v: usize) -> Result<Self> {
        let e = self.base.edge_index(u, v).ok_or(Error::NotAnEdge { a: u, b: v })?;
        let mut twisted = self.twisted.clone();
        twisted[e] ^= true;
        Ok(Self::assemble(self.base.clone(), twisted, self.colored))
    }

    /// Effect of relabelling gadget `u` by `f_mask`: every edge from `u` to
    /// a neighbour whose rank is in `mask` changes its twist.
    pub fn apply_gadget_aut(&self, u: usize, mask: u32) -> Result<Self> {
        let gd = self.gadget(u);
        gd.check_middle(mask)?;
        let mut out = self.clone();
        for (r, &v) in self.base.neighbors(u).iter().enumerate() {
            if mask >> r & 1 == 1 {
                out = out.toggle_twist(u, v)?;
            }
        }
        Ok(out)
    }

    pub fn gadget(&self, u: usize) -> Gadget {
        Gadget::new(self.base.neighbors(u).len()).expect("degree checked at construction")
    }

    pub fn gadget_range(&self, u: usize) -> Range<usize> {
        self.offsets[u]..self.offsets[u + 1]
    }

    /// Base vertex whose gadget contains `x`.
    pub fn gadget_of(&self, x: usize) -> usize {
        self.offsets.partition_point(|&o| o <= x) - 1
    }

    pub fn neighbor_rank(&self, u: usize, v: usize) -> Result<usize> {
        if u >= self.base.n() {
            return Err(Error::VertexOutOfRange { vertex: u, n: self.base.n() });
        }
        self.base.neighbors(u).binary_search(&v).map_err(|_| Error::NotAnEdge { a: u, b: v })
    }

    pub fn link_index(&self, u: usize, v: usize, side: Side) -> Result<usize> {
        let r = self.neighbor_rank(u, v)?;
        Ok(self.offsets[u] + 2 * r + (side == Side::B) as usize)
    }

    pub fn index(&self, v: CfiVertex) -> Result<usize> {
        match v {
            CfiVertex::Link { u, v, side } => self.link_index(u, v, side),
            CfiVertex::Middle { u, mask } => {
                if u >= self.base.n() {
                    return Err(Error::VertexOutOfRange { vertex: u, n: self.base.n() });
                }
                let gd = self.gadget(u);
                gd.check_middle(mask)?;
                Ok(self.offsets[u] + 2 * gd.d() + (mask >> 1) as usize)
            }
        }
    }

    pub fn vertex(&self, x: usize) -> Result<CfiVertex> {
        if x >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: x, n: self.n() });
        }
        let u = self.gadget_of(x);
        match self.gadget(u).vertex(self.to_local(x))? {
            GadgetVertex::A(r) => Ok(CfiVertex::Link { u, v: self.base.neighbors(u)[r], side: Side::A }),
            GadgetVertex::B(r) => Ok(CfiVertex::Link { u, v: self.base.neighbors(u)[r], side: Side::B }),
            GadgetVertex::Middle(mask) => Ok(CfiVertex::Middle { u, mask }),
        }
    }

    /// Index in the stand-alone gadget of `gadget_of(x)` (see [`Gadget`]).
    pub fn to_local(&self, x: usize) -> usize {
        let u = self.gadget_of(x);
        let d = self.base.neighbors(u).len();
        let off = x - self.offsets[u];
        if off < 2 * d {
            if off.is_multiple_of(2) {
                off / 2
            } else {
                d + off / 2
            }
        } else {
            off
        }
    }

    /// Inverse of [`CfiGraph::to_local`] for gadget `u`.
    pub fn from_local(&self, u: usize, local: usize) -> usize {
        let d = self.base.neighbors(u).len();
        let off = match local {
            l if l < d => 2 * l,
            l if l < 2 * d => 2 * (l - d) + 1,
            l => l,
        };
        self.offsets[u] + off
    }

    pub fn is_link(&self, x: usize) -> bool {
        let u = self.gadget_of(x);
        x - self.offsets[u] < 2 * self.base.neighbors(u).len()
    }

    /// The other vertex of the twin pair of a link.
    pub fn twin(&self, x: usize) -> Result<usize> {
        if x >= self.n() || !self.is_link(x) {
            return Err(Error::NotALink(x));
        }
        let off = self.offsets[self.gadget_of(x)];
        Ok(off + ((x - off) ^ 1))
    }

    pub fn color(&self, x: usize) -> Result<Color> {
        Ok(match self.vertex(x)? {
            CfiVertex::Link { u, v, .. } => Color { c1: Some((u, self.neighbor_rank(u, v)?)), c2: u },
            CfiVertex::Middle { u, .. } => Color { c1: None, c2: u },
        })
    }

    /// Integer colour `(ℓ-1)(D+1) + i` with `ℓ = u+1`, `D` the maximum base
    /// degree, `i` the 1-based neighbour rank for links and `D+1` for middles.
    pub fn color_code(&self, x: usize) -> Result<u32> {
        let big_d = self.base.max_degree();
        let c = self.color(x)?;
        let i = c.c1.map_or(big_d + 1, |(_, r)| r + 1);
        Ok((c.c2 * (big_d + 1) + i) as u32)
    }

    /// Integer colours of all vertices, regardless of whether colours are on.
    pub fn color_codes(&self) -> Vec<u32> {
        (0..self.n()).map(|x| self.color_code(x).expect("in range")).collect()
    }

    /// Colours if the graph is coloured.
    pub fn colors(&self) -> Option<Vec<u32>> {
        self.colored.then(|| self.color_codes())
    }

    /// Human-readable names like `a(0,1)`, `b(0,1)`, `m(2;{1,3})`.
    pub fn names(&self) -> Vec<String> {
        (0..self.n())
            .map(|x| match self.vertex(x).expect("in range") {
                CfiVertex::Link { u, v, side } => {
                    format!("{}({u},{v})", if side == Side::A { 'a' } else { 'b' })
                }
                CfiVertex::Middle { u, mask } => {
                    let members: Vec<String> = self
                        .base
                        .neighbors(u)
                        .iter()
                        .enumerate()
                        .filter(|(r, _)| mask >> r & 1 == 1)
                        .map(|(_, v)| v.to_string())
                        .collect();
                    format!("m({u};{{{}}})", members.join(","))
                }
            })
            .collect()
    }

    pub fn doc(&self) -> GraphDoc {
        let mut doc = GraphDoc::from_graph(&self.graph);
        doc.colors = self.colors();
        doc.names = Some(self.names());
        doc
    }

    /// Runs `f` with the graph and its colours (when coloured).
    pub fn with_colored<T>(&self, f: impl FnOnce(Colored<'_>) -> T) -> T {
        let colors = self.colors();
        f(Colored { graph: &self.graph, colors: colors.as_deref() })
    }

    /// Replaces colours by pendant paths: vertex `x` with colour code `c`
    /// gets a fresh path with `c` edges hanging from it.
    pub fn path_encode(&self) -> BaseGraph {
        let codes = self.color_codes();
        let extra: usize = codes.iter().map(|&c| c as usize).sum();
        let mut g = BaseGraph::empty(self.n() + extra);
        for (u, v) in self.graph.edges() {
            g.add_edge(u, v).expect("in range");
        }
        let mut next = self.n();
        for (x, &c) in codes.iter().enumerate() {
            let mut prev = x;
            for _ in 0..c {
                g.add_edge(prev, next).expect("in range");
                prev = next;
                next += 1;
            }
        }
        g
    }

    /// `τ_σ` for a base automorphism `σ`: `a(u,v) ↦ a(σu,σv)`,
    /// `b(u,v) ↦ b(σu,σv)`, and middles are mapped element-wise.
    pub fn tau(&self, sigma: &[usize]) -> Result<Vec<usize>> {
        if !self.base.is_automorphism(sigma) {
            return Err(Error::NotAnAutomorphism);
        }
        (0..self.n())
            .map(|x| {
                let image = match self.vertex(x)? {
                    CfiVertex::Link { u, v, side } => CfiVertex::Link { u: sigma[u], v: sigma[v], side },
                    CfiVertex::Middle { u, mask } => {
                        let mut out = 0u32;
                        for (r, &w) in self.base.neighbors(u).iter().enumerate() {
                            if mask >> r & 1 == 1 {
                                out |= 1 << self.neighbor_rank(sigma[u], sigma[w])?;
                            }
                        }
                        CfiVertex::Middle { u: sigma[u], mask: out }
                    }
                };
                self.index(image)
            })
            .collect()
    }

    /// Vertex map acting as `f_{masks[u]}` inside every gadget `u`.
    pub fn gadget_map(&self, masks: &[u32]) -> Result<Vec<usize>> {
        if masks.len() != self.base.n() {
            return Err(Error::Precondition("one mask per base vertex required".into()));
        }
        let mut out = vec![0; self.n()];
        for (u, &m) in masks.iter().enumerate() {
            let local = GadgetAut::new(self.gadget(u), m)?.as_map();
            for x in self.gadget_range(u) {
                out[x] = self.from_local(u, local[self.to_local(x)]);
            }
        }
        Ok(out)
    }

    /// Base map induced by a gadget-preserving map, if `g` is one.
    pub fn induced_base_map(&self, g: &[usize]) -> Result<Vec<usize>> {
        check_permutation(g, self.n())?;
        let sigma: Vec<usize> = (0..self.base.n())
            .map(|u| {
                let range = self.gadget_range(u);
                let target = self.gadget_of(g[range.start]);
                if range.clone().all(|x| self.gadget_of(g[x]) == target) {
                    Ok(target)
                } else {
                    Err(Error::NotGadgetPreserving)
                }
            })
            .collect::<Result<_>>()?;
        check_permutation(&sigma, self.base.n()).map_err(|_| Error::NotGadgetPreserving)?;
        Ok(sigma)
    }

    /// Writes an automorphism `g` as `f ∘ τ_σ` with `f` acting as
    /// `f_{masks[u]}` inside gadget `u`. Returns `(σ, masks)`.
    pub fn decompose_aut(&self, g: &[usize]) -> Result<(Vec<usize>, Vec<u32>)> {
        if !self.graph.is_automorphism(g) {
            return Err(Error::NotAnAutomorphism);
        }
        let sigma = self.induced_base_map(g)?;
        let tau = self.tau(&sigma)?;
        let mut tau_inv = vec![0; self.n()];
        for (x, &t) in tau.iter().enumerate() {
            tau_inv[t] = x;
        }
        let f: Vec<usize> = (0..self.n()).map(|x| g[tau_inv[x]]).collect();
        let masks: Vec<u32> = (0..self.base.n())
            .map(|u| {
                let d = self.base.neighbors(u).len();
                (0..d)
                    .filter(|&r| {
                        let a = self.offsets[u] + 2 * r;
                        f[a] == a + 1
                    })
                    .map(|r| 1u32 << r)
                    .sum()
            })
            .collect();
        if masks.iter().any(|&m| !is_even(m)) {
            return Err(Error::NotAnAutomorphism);
        }
        let rebuilt = self.gadget_map(&masks)?;
        if rebuilt != f {
            return Err(Error::NotAnAutomorphism);
        }
        Ok((sigma, masks))
    }

    /// `f ∘ τ_σ` from its factors.
    pub fn compose_aut(&self, sigma: &[usize], masks: &[u32]) -> Result<Vec<usize>> {
        let tau = self.tau(sigma)?;
        let f = self.gadget_map(masks)?;
        Ok(tau.iter().map(|&x| f[x]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Family, LinearComponent};

    fn build(f: Family) -> BaseGraph {
        f.build().unwrap()
    }

    #[test]
    fn vertex_count_matches_gadget_sizes() {
        for f in [Family::Complete(4), Family::Cycle(5), Family::Path(3), Family::Petersen] {
            let g = build(f);
            let y = CfiGraph::y(&g).unwrap();
            let expected: usize = (0..g.n())
                .map(|u| {
                    let d = g.degree(u).unwrap();
                    2 * d + (1 << (d - 1))
                })
                .sum();
            assert_eq!(y.n(), expected);
        }
    }

    #[test]
    fn names_round_trip() {
        let c = CfiGraph::x(&build(Family::Complete(4))).unwrap();
        for x in 0..c.n() {
            assert_eq!(c.index(c.vertex(x).unwrap()).unwrap(), x);
            assert_eq!(c.from_local(c.gadget_of(x), c.to_local(x)), x);
        }
        assert_eq!(c.names()[0], "a(0,1)");
        assert_eq!(c.names()[1], "b(0,1)");
        assert_eq!(c.names()[6], "m(0;{})");
        assert!(c.index(CfiVertex::Link { u: 0, v: 0, side: Side::A }).is_err());
    }

    #[test]
    fn sorted_index_order() {
        let c = CfiGraph::y(&build(Family::Petersen)).unwrap();
        let vs: Vec<CfiVertex> = (0..c.n()).map(|x| c.vertex(x).unwrap()).collect();
        let key = |v: &CfiVertex| match *v {
            CfiVertex::Link { u, v, side } => (u, 0, v as u64, side as u64),
            CfiVertex::Middle { u, mask } => (u, 1, mask as u64, 0),
        };
        assert!(vs.windows(2).all(|w| key(&w[0]) < key(&w[1])));
    }

    #[test]
    fn link_degrees() {
        let c = CfiGraph::y(&build(Family::Star(3))).unwrap();
        for x in 0..c.n() {
            if let CfiVertex::Link { u, side, .. } = c.vertex(x).unwrap() {
                let d = c.base().degree(u).unwrap();
                let inner = if d >= 2 {
                    1 << (d - 2)
                } else if side == Side::A {
                    0
                } else {
                    1
                };
                assert_eq!(c.graph().degree(x).unwrap(), inner + 1);
            }
        }
    }

    #[test]
    fn twins_and_colours() {
        let c = CfiGraph::x(&build(Family::Cycle(4))).unwrap();
        for x in 0..c.n() {
            if c.is_link(x) {
                let t = c.twin(x).unwrap();
                assert_eq!(c.twin(t).unwrap(), x);
                assert_eq!(c.color(x).unwrap(), c.color(t).unwrap());
            } else {
                assert!(c.twin(x).is_err());
                assert_eq!(c.color(x).unwrap().c1, None);
            }
        }
        let codes = c.color_codes();
        assert_eq!(codes[0], 1);
        assert_eq!(*codes.iter().max().unwrap(), 12);
    }

    #[test]
    fn twist_cancellation_and_errors() {
        let g = build(Family::Cycle(4));
        let y = CfiGraph::y(&g).unwrap();
        let same = CfiGraph::new(&g, &[(0, 1), (1, 0)], false).unwrap();
        assert_eq!(same.graph(), y.graph());
        assert_eq!(CfiGraph::new(&g, &[(0, 2)], false), Err(Error::NotAnEdge { a: 0, b: 2 }));
        let disconnected = BaseGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(CfiGraph::y(&disconnected), Err(Error::Disconnected));
        assert_eq!(CfiGraph::y(&BaseGraph::empty(0)), Err(Error::EmptyGraph));
    }

    #[test]
    fn tilde_twists_least_edge() {
        let g = build(Family::Complete(4));
        assert_eq!(CfiGraph::y_tilde(&g).unwrap().twist_edges(), vec![(0, 1)]);
        assert_eq!(CfiGraph::y_tilde(&g).unwrap().parity(), Parity::Twisted);
    }

    #[test]
    fn triangle_gives_two_nine_cycles() {
        let g = build(Family::Cycle(3));
        let y = CfiGraph::y(&g).unwrap().graph().classify_linear().unwrap();
        assert_eq!(y, vec![LinearComponent::Cycle(9); 2]);
        let yt = CfiGraph::y_tilde(&g).unwrap().graph().classify_linear().unwrap();
        assert_eq!(yt, vec![LinearComponent::Cycle(18)]);
    }

    #[test]
    fn gadget_relabelling_equals_twist_toggle() {
        let g = build(Family::Complete(4));
        let y = CfiGraph::y(&g).unwrap();
        for u in 0..4 {
            for m in y.gadget(u).middles() {
                let mut masks = vec![0; 4];
                masks[u] = m;
                let perm = y.gadget_map(&masks).unwrap();
                let relabelled = y.graph().relabel(&perm).unwrap();
                assert_eq!(&relabelled, y.apply_gadget_aut(u, m).unwrap().graph());
            }
        }
    }

    #[test]
    fn tau_and_decomposition() {
        let g = build(Family::Complete(4));
        let x = CfiGraph::x(&g).unwrap();
        let sigma = vec![1, 2, 3, 0];
        let tau = x.tau(&sigma).unwrap();
        assert!(x.graph().is_automorphism(&tau));
        // Gadgets 0 and 1 both flip their links toward each other and toward 2;
        // gadget 2 flips toward 0 and 1, so every edge is flipped at both ends.
        let masks = vec![0b011, 0b011, 0b011, 0];
        let gmap = x.compose_aut(&sigma, &masks).unwrap();
        assert!(x.graph().is_automorphism(&gmap));
        assert_eq!(x.decompose_aut(&gmap).unwrap(), (sigma, masks));
        let bad = x.gadget_map(&[0b011, 0, 0, 0]).unwrap();
        assert_eq!(x.decompose_aut(&bad), Err(Error::NotAnAutomorphism));
        assert!(x.tau(&[1, 0, 2, 2]).is_err());
    }

    #[test]
    fn path_encoding_size() {
        let c = CfiGraph::x(&build(Family::Cycle(3))).unwrap();
        let enc = c.path_encode();
        let codes = c.color_codes();
        assert_eq!(enc.n(), c.n() + codes.iter().map(|&c| c as usize).sum::<usize>());
        assert_eq!(enc.edge_count(), c.graph().edge_count() + enc.n() - c.n());
    }
}
