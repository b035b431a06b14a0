//! Pebble games and Weisfeiler-Leman on CFI pairs: the dimension at which
//! the twist becomes visible follows the treewidth of the base.

use cfi::equivalence::{ck_report, lk_equivalent, wl_equivalent};
use cfi::graph::Family;
use cfi::iso::Colored;
use cfi::treewidth::treewidth;
use cfi::CfiGraph;

fn main() -> cfi::Result<()> {
    for family in [Family::Path(3), Family::Cycle(5), Family::Complete(4)] {
        let g = family.build()?;
        let (x, xt) = (CfiGraph::x(&g)?, CfiGraph::x_tilde(&g)?);
        let dims: Vec<String> = (1..=3)
            .map(|dim| {
                let eq = x.with_colored(|a| xt.with_colored(|b| wl_equivalent(a, b, dim)))?;
                Ok(format!("WL{dim}={eq}"))
            })
            .collect::<cfi::Result<_>>()?;
        println!("{family} (treewidth {}): {}", treewidth(&g)?, dims.join(" "));
    }
    let g = Family::Path(3).build()?;
    let (y, yt) = (CfiGraph::y(&g)?, CfiGraph::y_tilde(&g)?);
    let (a, b) = (Colored::plain(y.graph()), Colored::plain(yt.graph()));
    println!(
        "Y(P3) vs Ytilde(P3): L2 equivalent {}, C2 equivalent {}",
        lk_equivalent(a, b, 2)?,
        wl_equivalent(a, b, 1)?
    );
    let report = x_report()?;
    println!("C3 game on X(C4) vs Xtilde(C4): {report:?}");
    Ok(())
}

fn x_report() -> cfi::Result<cfi::equivalence::EquivReport> {
    let g = Family::Cycle(4).build()?;
    let (x, xt) = (CfiGraph::x(&g)?, CfiGraph::x_tilde(&g)?);
    x.with_colored(|a| xt.with_colored(|b| ck_report(a, b, 3)))
}
