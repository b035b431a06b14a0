//! Decides original versus twisted on a shuffled CFI graph and recovers the base.

use cfi::distinguish::distinguish;
use cfi::graph::Family;
use cfi::CfiGraph;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> cfi::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for family in [Family::Petersen, Family::Grid(2, 3), Family::Path(4), Family::Cycle(6)] {
        let g = family.build()?;
        for c in [CfiGraph::y(&g)?, CfiGraph::y_tilde(&g)?] {
            let mut perm: Vec<usize> = (0..c.n()).collect();
            perm.shuffle(&mut rng);
            let z = c.graph().relabel(&perm)?;
            let d = distinguish(&z)?;
            println!(
                "{family} ({}): verdict {}, recovered base with {} vertices and {} edges",
                c.parity(),
                d.verdict,
                d.base.n(),
                d.base.edge_count()
            );
        }
    }
    Ok(())
}
