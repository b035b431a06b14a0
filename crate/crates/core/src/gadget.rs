//! The CFI gadget `X(d)` / `Y(d)` and its automorphisms.
//!
//! Link vertices are `A(i)` (written `i+1`) and their twins `B(i)`
//! (written `(i+1)'`); middle vertices are the even subsets of
//! `{0..d}` stored as bit masks. `A(i)` is adjacent to the middles that
//! contain `i`, `B(i)` to the ones that do not. `X(d)` is `Y(d)` with each
//! twin pair `{A(i), B(i)}` coloured `i + 1` and middles coloured `0`.
//!
//! Vertex indices: `A(i) = i`, `B(i) = d + i`, middle `m = 2d + (m >> 1)`
//! (even masks are ordered by value, and `m >> 1` is their rank).

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::BaseGraph;
use crate::iso::{self, Colored};

pub const MAX_GADGET_DEGREE: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GadgetVertex {
    A(usize),
    B(usize),
    Middle(u32),
}

impl fmt::Display for GadgetVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GadgetVertex::A(i) => write!(f, "{}", i + 1),
            GadgetVertex::B(i) => write!(f, "{}'", i + 1),
            GadgetVertex::Middle(m) => {
                write!(f, "{{")?;
                let items: Vec<String> = (0..32).filter(|i| m >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
                write!(f, "{}}}", items.join(","))
            }
        }
    }
}

pub fn is_even(mask: u32) -> bool {
    mask.count_ones().is_multiple_of(2)
}

/// Gadget of degree `d`, `1 <= d <= 20`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gadget {
    d: usize,
}

impl Gadget {
    pub fn new(d: usize) -> Result<Self> {
        if d == 0 || d > MAX_GADGET_DEGREE {
            return Err(Error::DegreeTooLarge(d));
        }
        Ok(Gadget { d })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn middle_count(&self) -> usize {
        1 << (self.d - 1)
    }

    /// `2d + 2^(d-1)`.
    pub fn n(&self) -> usize {
        2 * self.d + self.middle_count()
    }

    pub fn full_mask(&self) -> u32 {
        ((1u64 << self.d) - 1) as u32
    }

    pub fn check_middle(&self, m: u32) -> Result<()> {
        if m & !self.full_mask() != 0 || !is_even(m) {
            return Err(Error::NotEvenSubset { mask: m as u64, d: self.d });
        }
        Ok(())
    }

    pub fn index(&self, v: GadgetVertex) -> Result<usize> {
        let d = self.d;
        match v {
            GadgetVertex::A(i) | GadgetVertex::B(i) if i >= d => Err(Error::VertexOutOfRange { vertex: i, n: d }),
            GadgetVertex::A(i) => Ok(i),
            GadgetVertex::B(i) => Ok(d + i),
            GadgetVertex::Middle(m) => {
                self.check_middle(m)?;
                Ok(2 * d + (m >> 1) as usize)
            }
        }
    }

    pub fn vertex(&self, idx: usize) -> Result<GadgetVertex> {
        let d = self.d;
        match idx {
            i if i < d => Ok(GadgetVertex::A(i)),
            i if i < 2 * d => Ok(GadgetVertex::B(i - d)),
            i if i < self.n() => {
                let k = (i - 2 * d) as u32;
                Ok(GadgetVertex::Middle(k << 1 | (k.count_ones() & 1)))
            }
            _ => Err(Error::VertexOutOfRange { vertex: idx, n: self.n() }),
        }
    }

    pub fn middles(&self) -> impl Iterator<Item = u32> {
        (0..self.middle_count() as u32).map(|k| k << 1 | (k.count_ones() & 1))
    }

    /// `Y(d)` as a plain graph.
    pub fn graph(&self) -> BaseGraph {
        let d = self.d;
        let mut g = BaseGraph::empty(self.n());
        for m in self.middles() {
            let mi = 2 * d + (m >> 1) as usize;
            for i in 0..d {
                let link = if m >> i & 1 == 1 { i } else { d + i };
                g.add_edge(link, mi).expect("indices in range");
            }
        }
        g
    }

    /// Colours turning `Y(d)` into `X(d)`.
    pub fn colors(&self) -> Vec<u32> {
        let d = self.d;
        (0..self.n()).map(|x| if x < 2 * d { (x % d) as u32 + 1 } else { 0 }).collect()
    }

    pub fn is_link(&self, idx: usize) -> bool {
        idx < 2 * self.d
    }

    pub fn twin(&self, idx: usize) -> Result<usize> {
        let d = self.d;
        match idx {
            i if i < d => Ok(i + d),
            i if i < 2 * d => Ok(i - d),
            _ => Err(Error::NotALink(idx)),
        }
    }

    /// Twin-preservation test for a vertex map of `Y(d)`.
    pub fn is_twin_preserving(&self, g: &[usize]) -> bool {
        (0..2 * self.d).all(|x| self.is_link(g[x]) && g[self.twin(x).unwrap()] == self.twin(g[x]).unwrap())
    }

    /// Link-preservation test: links are sent onto links.
    pub fn is_link_preserving(&self, g: &[usize]) -> bool {
        (0..2 * self.d).all(|x| self.is_link(g[x]))
    }
}

/// The automorphism `f_m` of `X(d)` for an even subset `m`: it swaps
/// `A(i)` and `B(i)` exactly for `i ∈ m` and sends middle `n` to `n Δ m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GadgetAut {
    gadget: Gadget,
    m: u32,
}

impl GadgetAut {
    pub fn new(gadget: Gadget, m: u32) -> Result<Self> {
        gadget.check_middle(m)?;
        Ok(GadgetAut { gadget, m })
    }

    pub fn identity(gadget: Gadget) -> Self {
        GadgetAut { gadget, m: 0 }
    }

    pub fn mask(&self) -> u32 {
        self.m
    }

    pub fn apply(&self, v: GadgetVertex) -> GadgetVertex {
        let flips = |i: usize| self.m >> i & 1 == 1;
        match v {
            GadgetVertex::A(i) if flips(i) => GadgetVertex::B(i),
            GadgetVertex::B(i) if flips(i) => GadgetVertex::A(i),
            GadgetVertex::Middle(n) => GadgetVertex::Middle(n ^ self.m),
            other => other,
        }
    }

    /// `self ∘ other`, which is `f_{m Δ m'}`.
    pub fn compose(&self, other: &GadgetAut) -> GadgetAut {
        GadgetAut { gadget: self.gadget, m: self.m ^ other.m }
    }

    /// Vertex map on indices of `Y(d)`.
    pub fn as_map(&self) -> Vec<usize> {
        let g = self.gadget;
        (0..g.n()).map(|x| g.index(self.apply(g.vertex(x).unwrap())).unwrap()).collect()
    }
}

/// The unique `f ∈ Aut(X(d))` with `f(m1) = m2`.
pub fn aut_between_middles(gadget: Gadget, m1: u32, m2: u32) -> Result<GadgetAut> {
    gadget.check_middle(m1)?;
    gadget.check_middle(m2)?;
    GadgetAut::new(gadget, m1 ^ m2)
}

/// All `2^(d-1)` maps `f_m`.
pub fn enumerate_aut_xd(gadget: Gadget) -> Vec<GadgetAut> {
    gadget.middles().map(|m| GadgetAut { gadget, m }).collect()
}

/// Lift `ρ_π` of a permutation `π` of `{0..d}` to a vertex map of `Y(d)`.
pub fn lift_perm(gadget: Gadget, pi: &[usize]) -> Result<Vec<usize>> {
    crate::graph::check_permutation(pi, gadget.d)?;
    let image = |v| match v {
        GadgetVertex::A(i) => GadgetVertex::A(pi[i]),
        GadgetVertex::B(i) => GadgetVertex::B(pi[i]),
        GadgetVertex::Middle(m) => {
            GadgetVertex::Middle((0..gadget.d).filter(|&i| m >> i & 1 == 1).map(|i| 1u32 << pi[i]).sum())
        }
    };
    Ok((0..gadget.n()).map(|x| gadget.index(image(gadget.vertex(x).unwrap())).unwrap()).collect())
}

/// Every automorphism of `Y(d)`, found by exhaustive search.
pub fn enumerate_aut_yd(gadget: Gadget) -> Result<Vec<Vec<usize>>> {
    iso::automorphisms(Colored::plain(&gadget.graph()))
}

/// The maps `f ∘ ρ_π` for all `f ∈ Aut(X(d))` and all permutations `π`.
pub fn twin_preserving_auts(gadget: Gadget) -> Result<Vec<Vec<usize>>> {
    if gadget.d > 8 {
        return Err(Error::TooLarge("permutation enumeration is limited to d <= 8".into()));
    }
    let fs = enumerate_aut_xd(gadget);
    let mut out = Vec::new();
    for pi in permutations(gadget.d) {
        let rho = lift_perm(gadget, &pi)?;
        for f in &fs {
            let fm = f.as_map();
            out.push(rho.iter().map(|&x| fm[x]).collect());
        }
    }
    Ok(out)
}

/// Unique `(f, π)` with `g = f ∘ ρ_π`, for a twin-preserving automorphism `g`.
pub fn decompose_twin_preserving(gadget: Gadget, g: &[usize]) -> Result<(GadgetAut, Vec<usize>)> {
    let y = gadget.graph();
    if !y.is_automorphism(g) {
        return Err(Error::NotAnAutomorphism);
    }
    if !gadget.is_twin_preserving(g) {
        return Err(Error::NotTwinPreserving);
    }
    let d = gadget.d;
    let pi: Vec<usize> = (0..d).map(|i| g[i] % d).collect();
    let m: u32 = (0..d).filter(|&i| g[pi.iter().position(|&p| p == i).unwrap()] >= d).map(|i| 1u32 << i).sum();
    let f = GadgetAut::new(gadget, m)?;
    let rho = lift_perm(gadget, &pi)?;
    let fm = f.as_map();
    if (0..gadget.n()).any(|x| fm[rho[x]] != g[x]) {
        return Err(Error::NotTwinPreserving);
    }
    Ok((f, pi))
}

/// All permutations of `0..d` in lexicographic order.
pub fn permutations(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..d).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..d).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..d).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mask(items: &[usize]) -> u32 {
        items.iter().map(|i| 1u32 << (i - 1)).sum()
    }

    #[test]
    fn sizes_and_degrees() {
        for d in 1..=8 {
            let gd = Gadget::new(d).unwrap();
            let y = gd.graph();
            assert_eq!(y.n(), 2 * d + (1 << (d - 1)));
            for x in 0..gd.n() {
                let expected = if gd.is_link(x) {
                    if d >= 2 {
                        1 << (d - 2)
                    } else {
                        x
                    }
                } else {
                    d
                };
                assert_eq!(y.degree(x).unwrap(), expected, "d={d} x={x}");
            }
        }
        assert!(Gadget::new(0).is_err());
        assert!(Gadget::new(21).is_err());
    }

    #[test]
    fn index_vertex_round_trip() {
        let gd = Gadget::new(5).unwrap();
        for x in 0..gd.n() {
            assert_eq!(gd.index(gd.vertex(x).unwrap()).unwrap(), x);
        }
        assert!(gd.index(GadgetVertex::Middle(1)).is_err());
        assert!(gd.index(GadgetVertex::Middle(1 << 6 | 1)).is_err());
        assert!(gd.vertex(gd.n()).is_err());
        assert!(gd.twin(2 * 5).is_err());
    }

    #[test]
    fn f_m_on_named_vertices() {
        let gd = Gadget::new(3).unwrap();
        let f = GadgetAut::new(gd, mask(&[1, 2])).unwrap();
        assert_eq!(f.apply(GadgetVertex::A(0)), GadgetVertex::B(0));
        assert_eq!(f.apply(GadgetVertex::A(2)), GadgetVertex::A(2));
        assert_eq!(f.apply(GadgetVertex::Middle(mask(&[1, 3]))), GadgetVertex::Middle(mask(&[2, 3])));
        assert!(GadgetAut::new(gd, mask(&[1])).is_err());
    }

    #[test]
    fn between_middles_is_unique_and_correct() {
        let gd = Gadget::new(4).unwrap();
        for m1 in gd.middles() {
            for m2 in gd.middles() {
                let f = aut_between_middles(gd, m1, m2).unwrap();
                assert_eq!(f.apply(GadgetVertex::Middle(m1)), GadgetVertex::Middle(m2));
                let hits = enumerate_aut_xd(gd)
                    .iter()
                    .filter(|g| g.apply(GadgetVertex::Middle(m1)) == GadgetVertex::Middle(m2))
                    .count();
                assert_eq!(hits, 1);
            }
        }
    }

    #[test]
    fn lifted_permutations_are_automorphisms() {
        let gd = Gadget::new(4).unwrap();
        let y = gd.graph();
        for pi in permutations(4) {
            let rho = lift_perm(gd, &pi).unwrap();
            assert!(y.is_automorphism(&rho));
            assert!(gd.is_twin_preserving(&rho));
        }
        assert_eq!(permutations(4).len(), 24);
        assert!(lift_perm(gd, &[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn decomposition_recovers_factors() {
        let gd = Gadget::new(4).unwrap();
        for pi in permutations(4) {
            for f in enumerate_aut_xd(gd) {
                let rho = lift_perm(gd, &pi).unwrap();
                let fm = f.as_map();
                let g: Vec<usize> = rho.iter().map(|&x| fm[x]).collect();
                let (f2, pi2) = decompose_twin_preserving(gd, &g).unwrap();
                assert_eq!((f2, pi2), (f, pi.clone()));
            }
        }
    }

    #[test]
    fn display_uses_one_based_names() {
        assert_eq!(GadgetVertex::B(0).to_string(), "1'");
        assert_eq!(GadgetVertex::Middle(0b101).to_string(), "{1,3}");
    }
}
