//! Gadget automorphisms: the `f_m` family on `X(d)` and the exceptional
//! automorphisms of small uncoloured gadgets.

use cfi::gadget::{self, Gadget};

fn main() -> cfi::Result<()> {
    for d in 1..=6 {
        let gd = Gadget::new(d)?;
        let all = gadget::enumerate_aut_yd(gd)?;
        let twin = all.iter().filter(|g| gd.is_twin_preserving(g)).count();
        println!(
            "d={d}: {} vertices, |Aut(X(d))| = {}, |Aut(Y(d))| = {}, twin-preserving: {twin}",
            gd.n(),
            gadget::enumerate_aut_xd(gd).len(),
            all.len(),
        );
    }
    let gd = Gadget::new(3)?;
    let f = gadget::enumerate_aut_xd(gd).into_iter().nth(1).expect("d=3 has four f_m");
    let mut names = Vec::new();
    for x in 0..gd.n() {
        let v = gd.vertex(x)?;
        names.push(format!("{v}->{}", f.apply(v)));
    }
    println!("f_m on Y(3) with m = {:#b}: {}", f.mask(), names.join(" "));
    Ok(())
}
