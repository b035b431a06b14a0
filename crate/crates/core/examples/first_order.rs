//! First-order predicates that recover the colouring of an uncoloured CFI graph.

use cfi::fo::{check_same_color, PredicateTable};
use cfi::graph::Family;
use cfi::CfiGraph;

fn main() -> cfi::Result<()> {
    for family in [Family::Complete(4), Family::CompleteBipartite(3, 3), Family::Petersen] {
        let report = check_same_color(&family.build()?)?;
        println!("{family}: {report:?}, passed {}", report.passed());
    }
    let y = CfiGraph::y(&Family::Complete(4).build()?)?;
    let table = PredicateTable::new(y.graph());
    let links = (0..y.n()).filter(|&x| table.link(x)).count();
    println!("Y(K4): {links} links, {} middles, {} colour classes", y.n() - links, table.class_count());
    Ok(())
}
