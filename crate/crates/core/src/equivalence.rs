//! Finite-variable equivalence: the `k`-pebble game (`L^k`), the bijective
//! `k`-pebble game (`C^k`) and `k`-dimensional Weisfeiler-Leman refinement.
//!
//! Game positions are `k`-tuples of pebbled vertices in each graph (several
//! pebbles may share a vertex, which also encodes unplaced pebbles). The
//! Duplicator's winning region is a greatest fixpoint; since it is an
//! equivalence relation on the union of both tuple sets at every stage, it is
//! stored as a partition and refined until stable.
//!
//! * `L^k`: a position survives if, for every pebble `i`, every move of
//!   pebble `i` in either graph has a surviving answer.
//! * `C^k`: a position survives if, for every pebble `i`, some bijection
//!   between the vertex sets keeps every resulting position surviving;
//!   existence is decided by a perfect matching.
//! * `dim = 1` WL is colour refinement seeded by (degree, colour); `dim >= 2`
//!   is the folklore variant on `dim`-tuples, which captures `C^(dim+1)`.

use std::collections::HashMap;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::iso::Colored;
use crate::matching::has_perfect_matching;

/// Cap on `n^k` tuples per graph.
pub const MAX_TUPLES: usize = 1 << 21;
/// Cap on `n^k` for the matching-based bijective game.
pub const MAX_GAME_TUPLES: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Logic {
    /// `k`-variable first-order logic.
    Lk,
    /// `k`-variable logic with counting quantifiers.
    Ck,
}

/// Verdict together with the number of joint classes after each round.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivReport {
    pub equivalent: bool,
    pub classes_per_round: Vec<usize>,
}

struct Interner<K> {
    ids: HashMap<K, u32>,
}

impl<K: Hash + Eq> Interner<K> {
    fn new() -> Self {
        Interner { ids: HashMap::new() }
    }

    fn id(&mut self, key: K) -> u32 {
        let next = self.ids.len() as u32;
        *self.ids.entry(key).or_insert(next)
    }

    fn len(&self) -> usize {
        self.ids.len()
    }
}

fn tuple_count(n: usize, k: usize, cap: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::Precondition("number of pebbles must be positive".into()));
    }
    let mut total = 1usize;
    for _ in 0..k {
        total = total
            .checked_mul(n.max(1))
            .filter(|&t| t <= cap)
            .ok_or_else(|| Error::TooLarge(format!("{n}^{k} tuples exceed the limit of {cap}")))?;
    }
    Ok(total)
}

/// Helper for `k`-tuples over `0..n` encoded in base `n`.
#[derive(Clone, Copy)]
struct Tuples {
    n: usize,
    k: usize,
    count: usize,
}

impl Tuples {
    fn new(n: usize, k: usize, cap: usize) -> Result<Self> {
        Ok(Tuples { n, k, count: tuple_count(n, k, cap)? })
    }

    fn digit(&self, t: usize, i: usize) -> usize {
        t / self.n.pow(i as u32) % self.n
    }

    fn replace(&self, t: usize, i: usize, w: usize) -> usize {
        let p = self.n.pow(i as u32);
        t - self.digit(t, i) * p + w * p
    }

    fn diagonal(&self, v: usize) -> usize {
        (0..self.k).map(|i| v * self.n.pow(i as u32)).sum()
    }
}

/// Colours, equalities and adjacencies among the entries of a tuple.
fn atomic_type(h: Colored<'_>, tup: &Tuples, t: usize) -> Vec<u32> {
    let xs: Vec<usize> = (0..tup.k).map(|i| tup.digit(t, i)).collect();
    let mut key: Vec<u32> = xs.iter().map(|&x| h.color(x)).collect();
    for i in 0..tup.k {
        for j in i + 1..tup.k {
            key.push(if xs[i] == xs[j] { 2 } else { h.graph.has_edge(xs[i], xs[j]) as u32 });
        }
    }
    key
}

fn initial_colors(graphs: [Colored<'_>; 2], tups: [Tuples; 2], interner: &mut Interner<Vec<u32>>) -> [Vec<u32>; 2] {
    [0, 1].map(|g| (0..tups[g].count).map(|t| interner.id(atomic_type(graphs[g], &tups[g], t))).collect())
}

fn check_colors(h: Colored<'_>) -> Result<()> {
    Colored::new(h.graph, h.colors).map(|_| ())
}

/// `k`-pebble game equivalence.
pub fn lk_equivalent(h1: Colored<'_>, h2: Colored<'_>, k: usize) -> Result<bool> {
    Ok(lk_report(h1, h2, k)?.equivalent)
}

pub fn lk_report(h1: Colored<'_>, h2: Colored<'_>, k: usize) -> Result<EquivReport> {
    check_colors(h1)?;
    check_colors(h2)?;
    let graphs = [h1, h2];
    let tups = [Tuples::new(h1.n(), k, MAX_TUPLES)?, Tuples::new(h2.n(), k, MAX_TUPLES)?];
    let mut interner = Interner::new();
    let mut colors = initial_colors(graphs, tups, &mut interner);
    let mut classes = interner.len();
    let mut rounds = vec![classes];
    loop {
        let mut next_ids: Interner<Vec<u32>> = Interner::new();
        let next = [0, 1].map(|g| {
            let tup = tups[g];
            let c = &colors[g];
            (0..tup.count)
                .map(|t| {
                    let mut sig = vec![c[t]];
                    for i in 0..k {
                        let mut set: Vec<u32> = (0..tup.n).map(|w| c[tup.replace(t, i, w)]).collect();
                        set.sort_unstable();
                        set.dedup();
                        sig.push(u32::MAX);
                        sig.extend(set);
                    }
                    next_ids.id(sig)
                })
                .collect::<Vec<u32>>()
        });
        colors = next;
        let now = next_ids.len();
        rounds.push(now);
        if now == classes {
            break;
        }
        classes = now;
    }
    let diag = |g: usize| -> std::collections::BTreeSet<u32> {
        (0..graphs[g].n()).map(|v| colors[g][tups[g].diagonal(v)]).collect()
    };
    Ok(EquivReport { equivalent: diag(0) == diag(1), classes_per_round: rounds })
}

/// Bijective `k`-pebble game equivalence, decided with perfect matchings.
pub fn ck_equivalent_game(h1: Colored<'_>, h2: Colored<'_>, k: usize) -> Result<bool> {
    Ok(ck_report(h1, h2, k)?.equivalent)
}

pub fn ck_report(h1: Colored<'_>, h2: Colored<'_>, k: usize) -> Result<EquivReport> {
    check_colors(h1)?;
    check_colors(h2)?;
    let graphs = [h1, h2];
    let tups = [Tuples::new(h1.n(), k, MAX_GAME_TUPLES)?, Tuples::new(h2.n(), k, MAX_GAME_TUPLES)?];
    if h1.n() != h2.n() {
        return Ok(EquivReport { equivalent: false, classes_per_round: Vec::new() });
    }
    let n = h1.n();
    let mut interner = Interner::new();
    let mut colors = initial_colors(graphs, tups, &mut interner);
    let mut classes = interner.len();
    let mut rounds = vec![classes];
    loop {
        // moves[g][t][i] = classes of the positions reached by moving pebble i.
        let moves: [Vec<Vec<Vec<u32>>>; 2] = [0, 1].map(|g| {
            let tup = tups[g];
            (0..tup.count)
                .map(|t| (0..k).map(|i| (0..n).map(|w| colors[g][tup.replace(t, i, w)]).collect()).collect())
                .collect()
        });
        let bijection_exists = |a: &[u32], b: &[u32]| {
            let adj: Vec<Vec<usize>> = a.iter().map(|ca| (0..n).filter(|&w| b[w] == *ca).collect()).collect();
            has_perfect_matching(&adj, n)
        };
        let survives = |(g1, t1): (usize, usize), (g2, t2): (usize, usize)| {
            (0..k).all(|i| bijection_exists(&moves[g1][t1][i], &moves[g2][t2][i]))
        };
        let mut members: Vec<Vec<(usize, usize)>> = vec![Vec::new(); classes];
        for (g, side) in colors.iter().enumerate() {
            for (t, &c) in side.iter().enumerate() {
                members[c as usize].push((g, t));
            }
        }
        let mut next = [vec![0u32; tups[0].count], vec![0u32; tups[1].count]];
        let mut fresh = 0u32;
        for class in &members {
            let mut reps: Vec<((usize, usize), u32)> = Vec::new();
            for &pos in class {
                let id = match reps.iter().find(|(r, _)| survives(pos, *r)) {
                    Some(&(_, id)) => id,
                    None => {
                        reps.push((pos, fresh));
                        fresh += 1;
                        fresh - 1
                    }
                };
                next[pos.0][pos.1] = id;
            }
        }
        colors = next;
        rounds.push(fresh as usize);
        if fresh as usize == classes {
            break;
        }
        classes = fresh as usize;
    }
    let d0: Vec<u32> = (0..n).map(|v| colors[0][tups[0].diagonal(v)]).collect();
    let d1: Vec<u32> = (0..n).map(|v| colors[1][tups[1].diagonal(v)]).collect();
    let adj: Vec<Vec<usize>> = d0.iter().map(|c| (0..n).filter(|&w| d1[w] == *c).collect()).collect();
    Ok(EquivReport { equivalent: has_perfect_matching(&adj, n), classes_per_round: rounds })
}

/// Weisfeiler-Leman equivalence of dimension `dim`.
pub fn wl_equivalent(h1: Colored<'_>, h2: Colored<'_>, dim: usize) -> Result<bool> {
    Ok(wl_report(h1, h2, dim)?.equivalent)
}

pub fn wl_report(h1: Colored<'_>, h2: Colored<'_>, dim: usize) -> Result<EquivReport> {
    check_colors(h1)?;
    check_colors(h2)?;
    if dim == 0 {
        return Err(Error::Precondition("WL dimension must be positive".into()));
    }
    if dim > 4 {
        return Err(Error::TooLarge("WL dimension is limited to 4".into()));
    }
    let graphs = [h1, h2];
    let (colors, rounds) = if dim == 1 { color_refinement(graphs) } else { folklore(graphs, dim)? };
    let histogram = |c: &[u32]| {
        let mut h = c.to_vec();
        h.sort_unstable();
        h
    };
    Ok(EquivReport { equivalent: histogram(&colors[0]) == histogram(&colors[1]), classes_per_round: rounds })
}

fn color_refinement(graphs: [Colored<'_>; 2]) -> ([Vec<u32>; 2], Vec<usize>) {
    let mut seed: Interner<(usize, u32)> = Interner::new();
    let mut colors =
        graphs.map(|h| (0..h.n()).map(|v| seed.id((h.graph.neighbors(v).len(), h.color(v)))).collect::<Vec<u32>>());
    let mut classes = seed.len();
    let mut rounds = vec![classes];
    loop {
        let mut ids: Interner<(u32, Vec<u32>)> = Interner::new();
        let next = [0, 1].map(|g| {
            let h = graphs[g];
            (0..h.n())
                .map(|v| {
                    let mut nb: Vec<u32> = h.graph.neighbors(v).iter().map(|&w| colors[g][w]).collect();
                    nb.sort_unstable();
                    ids.id((colors[g][v], nb))
                })
                .collect::<Vec<u32>>()
        });
        colors = next;
        rounds.push(ids.len());
        if ids.len() == classes {
            return (colors, rounds);
        }
        classes = ids.len();
    }
}

fn folklore(graphs: [Colored<'_>; 2], dim: usize) -> Result<([Vec<u32>; 2], Vec<usize>)> {
    let tups = [Tuples::new(graphs[0].n(), dim, MAX_TUPLES)?, Tuples::new(graphs[1].n(), dim, MAX_TUPLES)?];
    let mut interner = Interner::new();
    let mut colors = initial_colors(graphs, tups, &mut interner);
    let mut classes = interner.len();
    let mut rounds = vec![classes];
    loop {
        let mut ids: Interner<(u32, Vec<u128>)> = Interner::new();
        let next = [0, 1].map(|g| {
            let tup = tups[g];
            let c = &colors[g];
            (0..tup.count)
                .map(|t| {
                    let mut multiset: Vec<u128> = (0..tup.n)
                        .map(|w| (0..dim).fold(0u128, |acc, i| acc << 32 | c[tup.replace(t, i, w)] as u128))
                        .collect();
                    multiset.sort_unstable();
                    ids.id((c[t], multiset))
                })
                .collect::<Vec<u32>>()
        });
        colors = next;
        rounds.push(ids.len());
        if ids.len() == classes {
            return Ok((colors, rounds));
        }
        classes = ids.len();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{BaseGraph, Family};

    fn build(f: &str) -> BaseGraph {
        f.parse::<Family>().unwrap().build().unwrap()
    }

    fn plain(g: &BaseGraph) -> Colored<'_> {
        Colored::plain(g)
    }

    #[test]
    fn cycle_pairs() {
        let c6 = build("C6");
        let two_c3 = build("C3").disjoint_union(&build("C3"));
        assert!(wl_equivalent(plain(&c6), plain(&two_c3), 1).unwrap());
        assert!(!wl_equivalent(plain(&c6), plain(&two_c3), 2).unwrap());
        assert!(ck_equivalent_game(plain(&c6), plain(&two_c3), 2).unwrap());
        assert!(!ck_equivalent_game(plain(&c6), plain(&two_c3), 3).unwrap());
        assert!(lk_equivalent(plain(&c6), plain(&two_c3), 2).unwrap());
        assert!(!lk_equivalent(plain(&c6), plain(&two_c3), 3).unwrap());
    }

    #[test]
    fn lk_cannot_count_but_ck_can() {
        let k3 = build("K3");
        let k4 = build("K4");
        assert!(lk_equivalent(plain(&k3), plain(&k4), 2).unwrap());
        assert!(!lk_equivalent(plain(&k3), plain(&k4), 4).unwrap());
        assert!(!ck_equivalent_game(plain(&k3), plain(&k4), 1).unwrap());
        let s2 = build("S2");
        let s3 = build("S3");
        assert!(lk_equivalent(plain(&s2), plain(&s3), 2).unwrap());
        assert!(!wl_equivalent(plain(&s2), plain(&s3), 1).unwrap());
    }

    #[test]
    fn colours_matter() {
        let g = build("P2");
        let c1 = [0, 0, 1];
        let c2 = [1, 0, 0];
        let c3 = [0, 1, 0];
        let a = Colored::new(&g, Some(&c1)).unwrap();
        assert!(wl_equivalent(a, Colored::new(&g, Some(&c2)).unwrap(), 1).unwrap());
        assert!(!wl_equivalent(a, Colored::new(&g, Some(&c3)).unwrap(), 1).unwrap());
        assert!(lk_equivalent(a, Colored::new(&g, Some(&c3)).unwrap(), 1).unwrap());
        assert!(!lk_equivalent(a, Colored::new(&g, Some(&c3)).unwrap(), 2).unwrap());
        assert!(ck_equivalent_game(a, Colored::new(&g, Some(&c2)).unwrap(), 2).unwrap());
    }

    #[test]
    fn guards() {
        let g = build("petersen");
        assert!(lk_equivalent(plain(&g), plain(&g), 0).is_err());
        assert!(wl_equivalent(plain(&g), plain(&g), 0).is_err());
        assert!(matches!(ck_equivalent_game(plain(&g), plain(&g), 6), Err(Error::TooLarge(_))));
        let bad = [1u32];
        assert!(lk_equivalent(Colored { graph: &g, colors: Some(&bad) }, plain(&g), 1).is_err());
    }

    #[test]
    fn ck_game_agrees_with_wl_on_small_pairs() {
        let pairs = [("C6", "P5"), ("S3", "P3"), ("K3,3", "C6"), ("grid2x3", "C6")];
        for (a, b) in pairs {
            let (ga, gb) = (build(a), build(b));
            for k in 2..=3 {
                assert_eq!(
                    ck_equivalent_game(plain(&ga), plain(&gb), k).unwrap(),
                    wl_equivalent(plain(&ga), plain(&gb), k - 1).unwrap(),
                    "{a} {b} k={k}"
                );
            }
        }
    }
}
