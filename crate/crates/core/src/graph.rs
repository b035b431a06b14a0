//! Simple undirected graphs on dense vertex sets and the standard base families.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Finite simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BaseGraph {
    adj: Vec<Vec<usize>>,
}

impl BaseGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        BaseGraph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = BaseGraph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `uv`; a no-op if present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbours of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.adj.get(v).map(Vec::len).ok_or(Error::VertexOutOfRange { vertex: v, n: self.n() })
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nb) in self.adj.iter().enumerate() {
            for &v in nb {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Position of edge `uv` in [`BaseGraph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        if !self.has_edge(u, v) {
            return None;
        }
        let before: usize = (0..u).map(|w| self.adj[w].iter().filter(|&&x| x > w).count()).sum();
        let within = self.adj[u].iter().filter(|&&x| x > u && x < v).count();
        Some(before + within)
    }

    /// Connected components, each sorted, ordered by their least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    /// Breadth-first distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0);
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Image of the graph under the vertex permutation `perm` (`v ↦ perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n())?;
        let mut adj = vec![Vec::new(); self.n()];
        for (u, nb) in self.adj.iter().enumerate() {
            adj[perm[u]] = nb.iter().map(|&v| perm[v]).collect();
            adj[perm[u]].sort_unstable();
        }
        Ok(BaseGraph { adj })
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &BaseGraph) -> BaseGraph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|nb| nb.iter().map(|&v| v + shift).collect::<Vec<_>>()));
        BaseGraph { adj }
    }

    /// Whether `map` is an automorphism (a permutation preserving adjacency).
    pub fn is_automorphism(&self, map: &[usize]) -> bool {
        if check_permutation(map, self.n()).is_err() {
            return false;
        }
        self.adj
            .iter()
            .enumerate()
            .all(|(u, nb)| nb.len() == self.adj[map[u]].len() && nb.iter().all(|&v| self.has_edge(map[u], map[v])))
    }

    /// Shape of a graph of maximum degree at most two.
    ///
    /// Returns the sorted multiset of component shapes, where a path is
    /// reported by its number of edges.
    pub fn classify_linear(&self) -> Result<Vec<LinearComponent>> {
        if self.max_degree() > 2 {
            return Err(Error::Precondition("maximum degree exceeds 2".into()));
        }
        let mut out: Vec<LinearComponent> = self
            .components()
            .into_iter()
            .map(|comp| {
                let edges: usize = comp.iter().map(|&v| self.adj[v].len()).sum::<usize>() / 2;
                if edges == comp.len() {
                    LinearComponent::Cycle(comp.len())
                } else {
                    LinearComponent::Path(edges)
                }
            })
            .collect();
        out.sort_unstable();
        Ok(out)
    }
}

/// Component of a graph of maximum degree two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LinearComponent {
    /// Path with the given number of edges.
    Path(usize),
    /// Cycle with the given number of vertices.
    Cycle(usize),
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::NotAPermutation(n));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::NotAPermutation(n));
        }
    }
    Ok(())
}

/// Named base-graph families.
///
/// `Path(k)` has `k` edges; `Cycle(k)` and `Complete(k)` have `k` vertices;
/// `Star(k)` is `K_{1,k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Grid(usize, usize),
    Petersen,
}

impl Family {
    pub fn build(&self) -> Result<BaseGraph> {
        let bad = |msg: &str| Err(Error::InvalidFamily(format!("{self}: {msg}")));
        match *self {
            Family::Path(k) => {
                if k == 0 {
                    return bad("a path needs at least one edge");
                }
                let edges: Vec<_> = (0..k).map(|i| (i, i + 1)).collect();
                BaseGraph::from_edges(k + 1, &edges)
            }
            Family::Cycle(k) => {
                if k < 3 {
                    return bad("a cycle needs at least three vertices");
                }
                let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
                BaseGraph::from_edges(k, &edges)
            }
            Family::Complete(k) => {
                if k < 2 {
                    return bad("need at least two vertices");
                }
                let mut edges = Vec::new();
                for u in 0..k {
                    for v in u + 1..k {
                        edges.push((u, v));
                    }
                }
                BaseGraph::from_edges(k, &edges)
            }
            Family::CompleteBipartite(a, b) => {
                if a == 0 || b == 0 {
                    return bad("both sides must be non-empty");
                }
                let mut edges = Vec::new();
                for u in 0..a {
                    for v in 0..b {
                        edges.push((u, a + v));
                    }
                }
                BaseGraph::from_edges(a + b, &edges)
            }
            Family::Star(k) => Family::CompleteBipartite(1, k).build(),
            Family::Grid(r, c) => {
                if r == 0 || c == 0 || r * c < 2 {
                    return bad("grid needs at least two vertices");
                }
                let mut edges = Vec::new();
                for i in 0..r {
                    for j in 0..c {
                        let v = i * c + j;
                        if j + 1 < c {
                            edges.push((v, v + 1));
                        }
                        if i + 1 < r {
                            edges.push((v, v + c));
                        }
                    }
                }
                BaseGraph::from_edges(r * c, &edges)
            }
            Family::Petersen => {
                let mut edges = Vec::new();
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((i, i + 5));
                    edges.push((5 + i, 5 + (i + 2) % 5));
                }
                BaseGraph::from_edges(10, &edges)
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(k) => write!(f, "P{k}"),
            Family::Cycle(k) => write!(f, "C{k}"),
            Family::Complete(k) => write!(f, "K{k}"),
            Family::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            Family::Star(k) => write!(f, "S{k}"),
            Family::Grid(r, c) => write!(f, "grid{r}x{c}"),
            Family::Petersen => write!(f, "petersen"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `P3`, `C5`, `K4`, `K3,3`, `S3`, `grid2x3`, `petersen`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidFamily(s.to_string());
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        if s.eq_ignore_ascii_case("petersen") {
            return Ok(Family::Petersen);
        }
        if let Some(rest) = s.strip_prefix("grid") {
            let (r, c) = rest.split_once('x').ok_or_else(bad)?;
            return Ok(Family::Grid(num(r)?, num(c)?));
        }
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        match head.to_ascii_uppercase() {
            'P' => Ok(Family::Path(num(rest)?)),
            'C' => Ok(Family::Cycle(num(rest)?)),
            'S' => Ok(Family::Star(num(rest)?)),
            'K' => match rest.split_once(',') {
                Some((a, b)) => Ok(Family::CompleteBipartite(num(a)?, num(b)?)),
                None => Ok(Family::Complete(num(rest)?)),
            },
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        let cases = [
            ("P3", 4, 3),
            ("C5", 5, 5),
            ("K4", 4, 6),
            ("K3,3", 6, 9),
            ("S3", 4, 3),
            ("grid2x3", 6, 7),
            ("petersen", 10, 15),
        ];
        for (name, n, m) in cases {
            let g = name.parse::<Family>().unwrap().build().unwrap();
            assert_eq!((g.n(), g.edge_count()), (n, m), "{name}");
            assert!(g.is_connected());
        }
    }

    #[test]
    fn petersen_is_cubic_with_girth_five() {
        let g = Family::Petersen.build().unwrap();
        assert!((0..10).all(|v| g.degree(v).unwrap() == 3));
        for (u, v) in g.edges() {
            let common = g.neighbors(u).iter().filter(|w| g.has_edge(**w, v)).count();
            assert_eq!(common, 0);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(BaseGraph::from_edges(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(BaseGraph::from_edges(2, &[(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, n: 2 })));
        assert!(Family::Cycle(2).build().is_err());
        assert!(Family::Path(0).build().is_err());
        assert!("Q4".parse::<Family>().is_err());
        assert!(BaseGraph::empty(3).degree(3).is_err());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = BaseGraph::from_edges(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn edge_index_matches_edge_list() {
        let g = Family::Petersen.build().unwrap();
        for (i, (u, v)) in g.edges().into_iter().enumerate() {
            assert_eq!(g.edge_index(u, v), Some(i));
            assert_eq!(g.edge_index(v, u), Some(i));
        }
        assert_eq!(g.edge_index(0, 2), None);
    }

    #[test]
    fn classify_linear_shapes() {
        let g = Family::Path(3).build().unwrap().disjoint_union(&Family::Cycle(4).build().unwrap());
        assert_eq!(g.classify_linear().unwrap(), vec![LinearComponent::Path(3), LinearComponent::Cycle(4)]);
        assert!(Family::Complete(4).build().unwrap().classify_linear().is_err());
        let single = BaseGraph::empty(1);
        assert_eq!(single.classify_linear().unwrap(), vec![LinearComponent::Path(0)]);
    }

    #[test]
    fn relabel_preserves_structure() {
        let g = Family::Path(2).build().unwrap();
        let h = g.relabel(&[2, 0, 1]).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (0, 2)]);
        assert!(g.relabel(&[0, 0, 1]).is_err());
    }
}
