//! Exact treewidth, an optimal tree decomposition and the cops-and-robber game.

use cfi::graph::Family;
use cfi::treewidth::{robber_wins, tree_decomposition, treewidth, validate_decomposition};

fn main() -> cfi::Result<()> {
    for family in [Family::Path(3), Family::Cycle(5), Family::Grid(2, 3), Family::Complete(4), Family::Petersen] {
        let g = family.build()?;
        let tw = treewidth(&g)?;
        let td = tree_decomposition(&g)?;
        validate_decomposition(&g, &td)?;
        let cops = (1..=g.n()).find(|&k| !robber_wins(&g, k).unwrap_or(true)).unwrap_or(g.n());
        println!("{family}: treewidth {tw}, {} bags, cops needed {cops}", td.bags.len());
    }
    Ok(())
}
