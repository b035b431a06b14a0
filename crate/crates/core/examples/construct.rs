//! Builds original and twisted CFI graphs and shows how twists compose.

use cfi::graph::Family;
use cfi::iso::is_isomorphic;
use cfi::CfiGraph;

fn main() -> cfi::Result<()> {
    let g = Family::Complete(4).build()?;
    let x = CfiGraph::x(&g)?;
    println!("X(K4): {} vertices, {} edges", x.n(), x.graph().edge_count());
    for (i, name) in x.names().iter().enumerate().take(8) {
        println!("  {i:>2} {name} colour {}", x.color_code(i)?);
    }
    for twists in [vec![], vec![(0, 1)], vec![(0, 1), (2, 3)], vec![(0, 1), (0, 1), (1, 2)]] {
        let z = CfiGraph::new(&g, &twists, true)?;
        let same = x.with_colored(|a| z.with_colored(|b| is_isomorphic(a, b)))?;
        println!("twists {twists:?}: parity {}, isomorphic to X(K4): {same}", z.parity());
    }
    let y = CfiGraph::y(&Family::Cycle(4).build()?)?;
    println!("Y(C4) components: {:?}", y.graph().classify_linear()?);
    let yt = CfiGraph::y_tilde(&Family::Cycle(4).build()?)?;
    println!("Ytilde(C4) components: {:?}", yt.graph().classify_linear()?);
    Ok(())
}
