//! Free (V,P)-categories on a graph and the round trip through ΣP-algebras.

use iterop::enrich::{fc_v, fc_vp, ordinary_category, random_chaotic_category, vp_roundtrip, VGraph};
use iterop::operads::{GOperad, SetOperad};

fn main() -> iterop::Result<()> {
    // one object with a single loop
    let a = VGraph::from_counts(1, &[1])?;
    println!("formal paths of length <= 3 on a loop: {}", fc_v(&a, 3).graph.hom(0, 0).count(0));

    let magma = GOperad::discrete(SetOperad::magma(6), 0);
    let f = fc_vp(&a, &magma, 3)?;
    println!(
        "bracketed paths: {} directly, {} through the pullback",
        f.direct.graph.hom(0, 0).count(0),
        f.pullbacks[0].set.count(0)
    );

    let z3 = ordinary_category(1, &[3], |_| 0, |_, _, _, f, g| (f + g) % 3, 3)?;
    let r = vp_roundtrip(&z3)?;
    println!("Z_3 as a category: round trip {} ({} cells)", r.passed(), r.cells_compared);

    let p = GOperad::chaotic(SetOperad::cyclic(2, 6)?, 1);
    let c = random_chaotic_category(2, 2, &p, 2, 42)?;
    let r = vp_roundtrip(&c)?;
    println!("random chaotic (V,{p})-category: round trip {}", r.passed());
    Ok(())
}
