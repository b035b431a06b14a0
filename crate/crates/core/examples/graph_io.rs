//! JSON and DIMACS serialisation, including CFI colours and vertex names.

use cfi::graph::Family;
use cfi::io::{from_json, read_dimacs, to_json, write_dimacs};
use cfi::CfiGraph;

fn main() -> cfi::Result<()> {
    let x = CfiGraph::x(&Family::Path(1).build()?)?;
    let text = to_json(&x.doc());
    println!("{text}");
    let doc = from_json(&text)?;
    assert_eq!(doc.graph()?, *x.graph());
    let dimacs = write_dimacs(x.graph());
    print!("{dimacs}");
    assert_eq!(read_dimacs(&dimacs)?, *x.graph());
    println!("path-encoded X(P1): {} vertices", x.path_encode().n());
    Ok(())
}
