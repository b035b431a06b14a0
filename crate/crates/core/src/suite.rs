//! End-to-end verification battery.
//!
//! Each check exercises one property of the CFI construction across several
//! base graphs and reports a pass/fail line. `extra_twist` deliberately
//! corrupts the graphs that should be untwisted, so the parity-sensitive
//! checks must fail; it exists to show the battery is not vacuous.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cfi::{CfiGraph, Parity};
use crate::distinguish::distinguish;
use crate::equivalence::{ck_equivalent_game, lk_equivalent, wl_equivalent};
use crate::error::Result;
use crate::fo::{check_same_color, PredicateTable};
use crate::gadget::{self, Gadget, GadgetAut, GadgetVertex};
use crate::graph::{BaseGraph, Family, LinearComponent};
use crate::homcount::{build_system, gf2_count, hom_count, hom_fiber_count, hom_gap, homomorphisms, Subdivision};
use crate::iso::{self, Colored};
use crate::treewidth::{robber_wins, tree_decomposition, treewidth, validate_decomposition};

#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Twist one extra edge in every graph expected to be untwisted.
    pub extra_twist: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub const CHECKS: [&str; 12] = [
    "paths and cycles",
    "gadget automorphisms",
    "twin preservation",
    "automorphism count of Y(3)",
    "non-isomorphism and twist parity",
    "distinguisher",
    "treewidth bridge",
    "cops and robber",
    "two-variable separation",
    "bijective game versus WL",
    "homomorphism gap",
    "first-order colour recovery",
];

/// Runs one check by its 1-based number.
pub fn run_check(id: usize, opts: SuiteOptions) -> Result<CheckResult> {
    let outcome = match id {
        1 => paths_and_cycles(),
        2 => gadget_automorphisms(),
        3 => twin_preservation(),
        4 => aut_count_y3(),
        5 => parity(opts),
        6 => distinguisher(opts),
        7 => treewidth_bridge(),
        8 => cops_and_robber(),
        9 => two_variable_separation(),
        10 => game_versus_wl(),
        11 => hom_gap_check(),
        12 => first_order(opts),
        _ => return Err(crate::Error::Precondition(format!("no check numbered {id}"))),
    }?;
    Ok(CheckResult { id, name: CHECKS[id - 1], passed: outcome.0, detail: outcome.1 })
}

pub fn run_suite(opts: SuiteOptions) -> Result<Vec<CheckResult>> {
    (1..=CHECKS.len()).map(|id| run_check(id, opts)).collect()
}

type Outcome = Result<(bool, String)>;

fn family(s: &str) -> BaseGraph {
    s.parse::<Family>().and_then(|f| f.build()).expect("suite families are valid")
}

fn untwisted(g: &BaseGraph, colored: bool, opts: SuiteOptions) -> Result<CfiGraph> {
    let c = CfiGraph::untwisted(g, colored)?;
    if opts.extra_twist {
        let (u, v) = g.edges()[0];
        c.toggle_twist(u, v)
    } else {
        Ok(c)
    }
}

fn paths_and_cycles() -> Outcome {
    use LinearComponent::{Cycle, Path};
    let mut bad = Vec::new();
    for k in 1..=6 {
        let g = Family::Path(k).build()?;
        let y = CfiGraph::y(&g)?.graph().classify_linear()?;
        let yt = CfiGraph::y_tilde(&g)?.graph().classify_linear()?;
        let m = 3 * (k - 1);
        if y != [Path(m + 1), Path(m + 3)] || yt != [Path(m + 2), Path(m + 2)] {
            bad.push(format!("P{k}"));
        }
    }
    for k in 3..=7 {
        let g = Family::Cycle(k).build()?;
        let y = CfiGraph::y(&g)?.graph().classify_linear()?;
        let yt = CfiGraph::y_tilde(&g)?.graph().classify_linear()?;
        if y != [Cycle(3 * k), Cycle(3 * k)] || yt != [Cycle(6 * k)] {
            bad.push(format!("C{k}"));
        }
    }
    Ok((bad.is_empty(), format!("P1..P6, C3..C7; mismatches: {bad:?}")))
}

fn gadget_automorphisms() -> Outcome {
    let mut sizes = Vec::new();
    let mut ok = true;
    for d in 1..=5 {
        let gd = Gadget::new(d)?;
        let colors = gd.colors();
        let y = gd.graph();
        let auts = iso::automorphisms(Colored::new(&y, Some(&colors))?)?;
        let fs: BTreeSet<Vec<usize>> = gadget::enumerate_aut_xd(gd).iter().map(GadgetAut::as_map).collect();
        let found: BTreeSet<Vec<usize>> = auts.iter().cloned().collect();
        ok &= auts.len() == 1 << (d - 1) && found == fs;
        for f in gadget::enumerate_aut_xd(gd) {
            ok &= f.compose(&f) == GadgetAut::identity(gd);
            let m = f.as_map();
            ok &= (0..gd.n()).all(|x| m[m[x]] == x);
        }
        sizes.push(auts.len());
    }
    Ok((ok, format!("|Aut(X(d))| for d=1..5: {sizes:?}")))
}

fn named_map(gd: Gadget, pairs: &[(GadgetVertex, GadgetVertex)]) -> Result<Vec<usize>> {
    let mut map = vec![usize::MAX; gd.n()];
    for &(x, y) in pairs {
        map[gd.index(x)?] = gd.index(y)?;
    }
    Ok(map)
}

fn mask(items: &[usize]) -> GadgetVertex {
    GadgetVertex::Middle(items.iter().map(|i| 1u32 << (i - 1)).sum())
}

/// Non-twin-preserving automorphisms of `Y(1)`, `Y(2)`, `Y(4)` given by name.
pub fn named_exceptional_maps() -> Result<Vec<(usize, Vec<usize>)>> {
    use GadgetVertex::{A, B};
    let y1 = named_map(Gadget::new(1)?, &[(A(0), A(0)), (B(0), mask(&[])), (mask(&[]), B(0))])?;
    let y2 = named_map(
        Gadget::new(2)?,
        &[
            (A(0), B(0)),
            (A(1), B(1)),
            (mask(&[1, 2]), mask(&[])),
            (B(0), A(1)),
            (mask(&[]), mask(&[1, 2])),
            (B(1), A(0)),
        ],
    )?;
    let mut pairs = vec![
        (A(3), mask(&[])),
        (B(0), mask(&[1, 4])),
        (B(1), mask(&[2, 4])),
        (B(2), mask(&[3, 4])),
        (B(3), mask(&[1, 2, 3, 4])),
        (A(0), mask(&[2, 3])),
        (A(1), mask(&[1, 3])),
        (A(2), mask(&[1, 2])),
    ];
    let inverse: Vec<_> = pairs.iter().map(|&(x, y)| (y, x)).collect();
    pairs.extend(inverse);
    let y4 = named_map(Gadget::new(4)?, &pairs)?;
    Ok(vec![(1, y1), (2, y2), (4, y4)])
}

fn twin_preservation() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for d in 1..=5 {
        let gd = Gadget::new(d)?;
        let auts = gadget::enumerate_aut_yd(gd)?;
        let non_twin = auts.iter().filter(|g| !gd.is_twin_preserving(g)).count();
        let expect_all = matches!(d, 3 | 5);
        ok &= if expect_all { non_twin == 0 } else { non_twin > 0 };
        notes.push(format!("d={d}: {non_twin}/{} not twin-preserving", auts.len()));
    }
    for (d, map) in named_exceptional_maps()? {
        let gd = Gadget::new(d)?;
        let is_aut = gd.graph().is_automorphism(&map);
        let link = gd.is_link_preserving(&map);
        ok &= is_aut && !gd.is_twin_preserving(&map) && link == (d == 2);
        notes.push(format!("named map on Y({d}): automorphism={is_aut}, link-preserving={link}"));
    }
    Ok((ok, notes.join("; ")))
}

fn aut_count_y3() -> Outcome {
    let gd = Gadget::new(3)?;
    let count = gadget::enumerate_aut_yd(gd)?.len();
    let mut ok = count == 24 || count == 32;
    let mut notes = vec![format!("|Aut(Y(3))| = {count}")];
    for d in [3, 5, 6] {
        let gd = Gadget::new(d)?;
        let brute: BTreeSet<Vec<usize>> = gadget::enumerate_aut_yd(gd)?.into_iter().collect();
        let composed: BTreeSet<Vec<usize>> = gadget::twin_preserving_auts(gd)?.into_iter().collect();
        let unique = composed.len() == (1..=d).product::<usize>() << (d - 1);
        let decomposes = brute.iter().all(|g| gadget::decompose_twin_preserving(gd, g).is_ok());
        ok &= brute == composed && unique && decomposes;
        notes.push(format!("d={d}: {} automorphisms, all f∘ρ_π: {}", brute.len(), brute == composed));
    }
    Ok((ok, notes.join("; ")))
}

fn parity(opts: SuiteOptions) -> Outcome {
    let mut ok = true;
    let mut failures = Vec::new();
    for f in ["P2", "P3", "C3", "C4", "K4"] {
        let g = family(f);
        let x = untwisted(&g, true, opts)?;
        let xt = CfiGraph::x_tilde(&g)?;
        let y = untwisted(&g, false, opts)?;
        let yt = CfiGraph::y_tilde(&g)?;
        let xi = x.with_colored(|a| xt.with_colored(|b| iso::is_isomorphic(a, b)))?;
        let yi = iso::is_isomorphic(Colored::plain(y.graph()), Colored::plain(yt.graph()))?;
        if xi || yi {
            ok = false;
            failures.push(f.to_string());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut trials = 0;
    for f in ["C4", "K4"] {
        let g = family(f);
        let edges = g.edges();
        let x = untwisted(&g, true, opts)?;
        for _ in 0..10 {
            let len = rng.gen_range(0..=4);
            let seq: Vec<(usize, usize)> = (0..len).map(|_| *edges.choose(&mut rng).expect("edges")).collect();
            let z = CfiGraph::new(&g, &seq, true)?;
            let iso_x = x.with_colored(|a| z.with_colored(|b| iso::is_isomorphic(a, b)))?;
            trials += 1;
            if iso_x != (len % 2 == 0) {
                ok = false;
                failures.push(format!("{f} twists {seq:?}"));
            }
        }
    }
    Ok((ok, format!("5 bases non-isomorphic, {trials} twist sequences; failures: {failures:?}")))
}

fn relabel(g: &BaseGraph, rng: &mut ChaCha8Rng) -> Result<BaseGraph> {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

fn distinguisher(opts: SuiteOptions) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed);
    let mut ok = true;
    let mut failures = Vec::new();
    let mut petersen_time = Duration::ZERO;
    let mut runs = 0;
    for f in ["P3", "C5", "K4", "K3,3", "grid2x3", "petersen"] {
        let g = family(f);
        for round in 0..10 {
            for (c, expected) in
                [(untwisted(&g, false, opts)?, Parity::Original), (CfiGraph::y_tilde(&g)?, Parity::Twisted)]
            {
                let c = if round >= 5 {
                    let mut c = c;
                    for u in 0..g.n() {
                        let middles: Vec<u32> = c.gadget(u).middles().collect();
                        c = c.apply_gadget_aut(u, *middles.choose(&mut rng).expect("middles"))?;
                    }
                    c
                } else {
                    c
                };
                let z = relabel(c.graph(), &mut rng)?;
                let start = Instant::now();
                let result = distinguish(&z);
                if f == "petersen" {
                    petersen_time = petersen_time.max(start.elapsed());
                }
                runs += 1;
                let good = match result {
                    Ok(d) => {
                        d.verdict == expected
                            && iso::is_isomorphic(Colored::plain(&d.base), Colored::plain(&g)).unwrap_or(false)
                    }
                    Err(_) => false,
                };
                if !good {
                    ok = false;
                    failures.push(format!("{f} round {round} expected {expected}"));
                }
            }
        }
    }
    ok &= petersen_time < Duration::from_secs(1);
    failures.truncate(5);
    Ok((ok, format!("{runs} runs, slowest Petersen run {petersen_time:?}; failures: {failures:?}")))
}

fn treewidth_bridge() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for (f, tw) in [("P3", 1), ("C5", 2), ("K4", 3)] {
        let g = family(f);
        ok &= treewidth(&g)? == tw;
        for colored in [false, true] {
            let a = CfiGraph::untwisted(&g, colored)?;
            let b = CfiGraph::tilde(&g, colored)?;
            for k in 2..=4 {
                let eq = a.with_colored(|x| b.with_colored(|y| wl_equivalent(x, y, k - 1)))?;
                if eq != (tw >= k) {
                    ok = false;
                    notes.push(format!("{f} colored={colored} k={k}: equivalent={eq}"));
                }
            }
        }
    }
    Ok((ok, format!("P3, C5, K4 with k=2..4, coloured and plain; failures: {notes:?}")))
}

fn cops_and_robber() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for f in ["P3", "C5", "K4", "K3,3", "grid2x3", "petersen", "S3"] {
        let g = family(f);
        let tw = treewidth(&g)?;
        let td = tree_decomposition(&g)?;
        ok &= validate_decomposition(&g, &td).is_ok() && td.width() == tw;
        ok &= treewidth(Subdivision::new(&g).graph()).map_or(true, |t| t == tw);
        for k in 0..=g.n() {
            if robber_wins(&g, k)? != (tw >= k) {
                ok = false;
                notes.push(format!("{f} k={k}"));
            }
        }
    }
    Ok((ok, format!("7 graphs, all k; failures: {notes:?}")))
}

fn two_variable_separation() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for m in 3..=5 {
        let g = Family::Path(m).build()?;
        let (y, yt) = (CfiGraph::y(&g)?, CfiGraph::y_tilde(&g)?);
        let (a, b) = (Colored::plain(y.graph()), Colored::plain(yt.graph()));
        let l2 = lk_equivalent(a, b, 2)?;
        let c2 = wl_equivalent(a, b, 1)?;
        ok &= l2 && !c2;
        notes.push(format!("P{m}: L2={l2} C2={c2}"));
    }
    for f in ["P3", "S3"] {
        let g = family(f);
        let (x, xt) = (CfiGraph::x(&g)?, CfiGraph::x_tilde(&g)?);
        let l2 = x.with_colored(|a| xt.with_colored(|b| lk_equivalent(a, b, 2)))?;
        ok &= !l2;
        notes.push(format!("X({f}): L2={l2}"));
    }
    Ok((ok, notes.join("; ")))
}

fn game_versus_wl() -> Outcome {
    let mut ok = true;
    let mut compared = 0;
    let mut notes = Vec::new();
    for colored in [false, true] {
        let mut graphs = Vec::new();
        for f in ["P3", "C4"] {
            let g = family(f);
            graphs.push(CfiGraph::untwisted(&g, colored)?);
            graphs.push(CfiGraph::tilde(&g, colored)?);
        }
        for i in 0..graphs.len() {
            for j in i..graphs.len() {
                for k in 2..=3 {
                    let (a, b) = (&graphs[i], &graphs[j]);
                    let game = a.with_colored(|x| b.with_colored(|y| ck_equivalent_game(x, y, k)))?;
                    let wl = a.with_colored(|x| b.with_colored(|y| wl_equivalent(x, y, k - 1)))?;
                    compared += 1;
                    if game != wl {
                        ok = false;
                        notes.push(format!("pair ({i},{j}) colored={colored} k={k}"));
                    }
                }
            }
        }
    }
    Ok((ok, format!("{compared} comparisons; disagreements: {notes:?}")))
}

fn hom_gap_check() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for f in ["P2", "C3", "C4"] {
        let g = family(f);
        let (h0, h1) = hom_gap(&g)?;
        ok &= h0 > h1;
        notes.push(format!("{f}: ({h0}, {h1})"));
        if f == "C3" {
            ok &= (h0, h1) == (36, 0);
        }
        if f == "C4" {
            continue;
        }
        let s = Subdivision::new(&g);
        let ys = [CfiGraph::y(&g)?, CfiGraph::y_tilde(&g)?];
        let mut fiber_sum = [0u128; 2];
        let mut inconsistent_identity = false;
        let endos = homomorphisms(s.graph(), s.graph())?;
        for e in &endos {
            for (i, y) in ys.iter().enumerate() {
                let solved = gf2_count(&build_system(&s, e, i == 1)?);
                let brute = hom_fiber_count(y, &s, e)?;
                ok &= solved.count() == Some(brute);
                fiber_sum[i] += brute;
            }
        }
        let id: Vec<usize> = (0..s.graph().n()).collect();
        inconsistent_identity |= !gf2_count(&build_system(&s, &id, true)?).consistent;
        ok &= inconsistent_identity;
        ok &= fiber_sum[0] == hom_count(s.graph(), ys[0].graph())? && fiber_sum[1] == h1;
        notes.push(format!("{f}: {} endomorphisms, fibre sums {fiber_sum:?}", endos.len()));
    }
    Ok((ok, notes.join("; ")))
}

fn first_order(opts: SuiteOptions) -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for f in ["K4", "K3,3"] {
        let report = check_same_color(&family(f))?;
        ok &= report.passed();
        notes.push(format!("{f}: {} mismatches, classes {:?}", report.mismatches, report.classes));
    }
    let y = CfiGraph::y(&family("K4"))?;
    let table = PredicateTable::new(y.graph());
    let mut auts = iso::automorphisms(Colored::plain(y.graph()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xf0);
    auts.shuffle(&mut rng);
    auts.truncate(32);
    let n = y.n();
    for a in &auts {
        for x in 0..n {
            ok &= table.link(x) == table.link(a[x]);
            for z in 0..n {
                ok &= table.gadget(x, z) == table.gadget(a[x], a[z])
                    && table.graph_prime(x, z) == table.graph_prime(a[x], a[z])
                    && table.same_color(x, z) == table.same_color(a[x], a[z]);
            }
        }
    }
    notes.push(format!("predicates invariant under {} sampled automorphisms of Y(K4)", auts.len()));
    Ok((ok, notes.join("; ")))
}
