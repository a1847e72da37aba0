//! The distributive law between a hom-wise monad and free P-labeled composition.

use iterop::enrich::{check_distributive_law, VGraph, Vertical};
use iterop::gset::GlobularSet;
use iterop::operads::GOperad;

fn main() -> iterop::Result<()> {
    let lp = GlobularSet::new(1, vec![1, 1], vec![vec![0]], vec![vec![0]])?;
    let e = GlobularSet::empty(1);
    let g = VGraph::new(2, 1, vec![lp.clone(), GlobularSet::ball(1), e.clone(), lp])?;
    for p in [GOperad::terminal(1, 6), GOperad::loops(2, 1, 6)?] {
        for t in [Vertical::Identity, Vertical::FreeCategory { max_len: 2 }] {
            let r = check_distributive_law(&g, t, &p, 2)?;
            println!("{p} with {t:?}: {} (elements per axiom {:?})", if r.passed() { "holds" } else { "fails" }, r.checked);
        }
    }
    Ok(())
}
