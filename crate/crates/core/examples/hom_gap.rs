//! Homomorphism counts from the subdivided base into `Y(G)` and `Ỹ(G)`,
//! and the per-fibre count through a linear system over GF(2).

use cfi::graph::Family;
use cfi::homcount::{build_system, gf2_count, hom_gap, homomorphisms, Subdivision};

fn main() -> cfi::Result<()> {
    for family in [Family::Path(2), Family::Cycle(3), Family::Cycle(4), Family::Complete(4)] {
        let g = family.build()?;
        let (y, yt) = hom_gap(&g)?;
        println!("{family}: hom into Y = {y}, into Ytilde = {yt}");
    }
    let s = Subdivision::new(&Family::Cycle(3).build()?);
    let id: Vec<usize> = (0..s.graph().n()).collect();
    for twisted in [false, true] {
        let count = gf2_count(&build_system(&s, &id, twisted)?);
        println!("identity fibre, twisted={twisted}: consistent {}, count {:?}", count.consistent, count.count());
    }
    println!("endomorphisms of the subdivided C3: {}", homomorphisms(s.graph(), s.graph())?.len());
    Ok(())
}
