//! Backtracking isomorphism and automorphism search for small coloured graphs.
//!
//! Vertices are first split by the signature (colour, degree, sorted
//! neighbour degrees) and the split is refined to a stable colouring;
//! both steps are invariant under isomorphism, so they only prune. The
//! search then assigns vertices most-constrained first, checking adjacency
//! against every already-mapped vertex.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::BaseGraph;

/// Largest graph the exhaustive automorphism enumeration accepts.
pub const MAX_AUT_VERTICES: usize = 64;
/// Largest automorphism group the enumeration will materialise.
pub const MAX_AUT_GROUP: usize = 1 << 20;

/// Graph paired with optional vertex colours.
#[derive(Clone, Copy, Debug)]
pub struct Colored<'a> {
    pub graph: &'a BaseGraph,
    pub colors: Option<&'a [u32]>,
}

impl<'a> Colored<'a> {
    pub fn plain(graph: &'a BaseGraph) -> Self {
        Colored { graph, colors: None }
    }

    pub fn new(graph: &'a BaseGraph, colors: Option<&'a [u32]>) -> Result<Self> {
        if let Some(c) = colors {
            if c.len() != graph.n() {
                return Err(Error::ColourLength { got: c.len(), expected: graph.n() });
            }
        }
        Ok(Colored { graph, colors })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors.map_or(0, |c| c[v])
    }
}

/// Returns some isomorphism `h1 → h2` as a vector `v ↦ image`, if one exists.
pub fn find_isomorphism(h1: Colored<'_>, h2: Colored<'_>) -> Result<Option<Vec<usize>>> {
    let mut found = None;
    search(h1, h2, |m| {
        found = Some(m.to_vec());
        false
    })?;
    Ok(found)
}

pub fn is_isomorphic(h1: Colored<'_>, h2: Colored<'_>) -> Result<bool> {
    Ok(find_isomorphism(h1, h2)?.is_some())
}

/// All colour-preserving automorphisms of `h`.
pub fn automorphisms(h: Colored<'_>) -> Result<Vec<Vec<usize>>> {
    if h.n() > MAX_AUT_VERTICES {
        return Err(Error::TooLarge(format!("automorphism enumeration is limited to {MAX_AUT_VERTICES} vertices")));
    }
    let mut out = Vec::new();
    let mut overflow = false;
    search(h, h, |m| {
        out.push(m.to_vec());
        overflow = out.len() > MAX_AUT_GROUP;
        !overflow
    })?;
    if overflow {
        return Err(Error::TooLarge(format!("automorphism group exceeds {MAX_AUT_GROUP}")));
    }
    Ok(out)
}

pub fn automorphism_count(h: Colored<'_>) -> Result<usize> {
    Ok(automorphisms(h)?.len())
}

/// Joint stable colouring of two graphs seeded by the pruning signature.
fn joint_classes(h1: Colored<'_>, h2: Colored<'_>) -> (Vec<usize>, Vec<usize>) {
    let seed = |h: Colored<'_>, v: usize| {
        let mut nd: Vec<usize> = h.graph.neighbors(v).iter().map(|&w| h.graph.neighbors(w).len()).collect();
        nd.sort_unstable();
        (h.color(v), h.graph.neighbors(v).len(), nd)
    };
    let mut ids = HashMap::new();
    let mut intern = |key| {
        let next = ids.len();
        *ids.entry(key).or_insert(next)
    };
    let mut c1: Vec<usize> = (0..h1.n()).map(|v| intern(seed(h1, v))).collect();
    let mut c2: Vec<usize> = (0..h2.n()).map(|v| intern(seed(h2, v))).collect();
    let mut classes = ids.len();
    loop {
        let mut ids: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut step = |h: Colored<'_>, c: &[usize]| -> Vec<usize> {
            (0..h.n())
                .map(|v| {
                    let mut nb: Vec<usize> = h.graph.neighbors(v).iter().map(|&w| c[w]).collect();
                    nb.sort_unstable();
                    let next = ids.len();
                    *ids.entry((c[v], nb)).or_insert(next)
                })
                .collect()
        };
        let n1 = step(h1, &c1);
        let n2 = step(h2, &c2);
        let now = ids.len();
        c1 = n1;
        c2 = n2;
        if now == classes {
            return (c1, c2);
        }
        classes = now;
    }
}

/// Enumerates isomorphisms `h1 → h2`, handing each to `visit`; stops when
/// `visit` returns `false`.
fn search<F: FnMut(&[usize]) -> bool>(h1: Colored<'_>, h2: Colored<'_>, mut visit: F) -> Result<()> {
    Colored::new(h1.graph, h1.colors)?;
    Colored::new(h2.graph, h2.colors)?;
    let n = h1.n();
    if n != h2.n() || h1.graph.edge_count() != h2.graph.edge_count() {
        return Ok(());
    }
    if n == 0 {
        visit(&[]);
        return Ok(());
    }
    let (cls1, cls2) = joint_classes(h1, h2);
    let k = cls1.iter().chain(&cls2).max().map_or(0, |m| m + 1);
    let mut size1 = vec![0usize; k];
    let mut size2 = vec![0usize; k];
    cls1.iter().for_each(|&c| size1[c] += 1);
    cls2.iter().for_each(|&c| size2[c] += 1);
    if size1 != size2 {
        return Ok(());
    }
    let mut by_class2 = vec![Vec::new(); k];
    for (v, &c) in cls2.iter().enumerate() {
        by_class2[c].push(v);
    }

    // Static most-constrained-first order.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut placed_nbrs = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (placed_nbrs[v], std::cmp::Reverse(size1[cls1[v]]), std::cmp::Reverse(v)))
            .expect("unplaced vertex exists");
        placed[v] = true;
        order.push(v);
        for &w in h1.graph.neighbors(v) {
            placed_nbrs[w] += 1;
        }
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let earlier: Vec<Vec<usize>> =
        order.iter().map(|&v| h1.graph.neighbors(v).iter().copied().filter(|&w| pos[w] < pos[v]).collect()).collect();

    let mut st = State {
        h2: h2.graph,
        cls1,
        cls2,
        by_class2,
        order,
        earlier,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        used_nbrs: vec![0; n],
    };
    st.extend(0, &mut visit);
    Ok(())
}

struct State<'a> {
    h2: &'a BaseGraph,
    cls1: Vec<usize>,
    cls2: Vec<usize>,
    by_class2: Vec<Vec<usize>>,
    order: Vec<usize>,
    earlier: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
    used_nbrs: Vec<usize>,
}

impl State<'_> {
    /// Returns `false` once the visitor asked to stop.
    fn extend<F: FnMut(&[usize]) -> bool>(&mut self, depth: usize, visit: &mut F) -> bool {
        if depth == self.order.len() {
            return visit(&self.map);
        }
        let v = self.order[depth];
        let candidates: Vec<usize> = match self.earlier[depth].first() {
            Some(&a) => self.h2.neighbors(self.map[a]).to_vec(),
            None => self.by_class2[self.cls1[v]].clone(),
        };
        for w in candidates {
            if self.used[w]
                || self.cls2[w] != self.cls1[v]
                || self.used_nbrs[w] != self.earlier[depth].len()
                || !self.earlier[depth].iter().all(|&u| self.h2.has_edge(self.map[u], w))
            {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            for &x in self.h2.neighbors(w) {
                self.used_nbrs[x] += 1;
            }
            let go_on = self.extend(depth + 1, visit);
            for &x in self.h2.neighbors(w) {
                self.used_nbrs[x] -= 1;
            }
            self.used[w] = false;
            self.map[v] = usize::MAX;
            if !go_on {
                return false;
            }
        }
        true
    }
}
