//! Cells of the globular operad compiled from an operad series, and its contractibility.

use iterop::globop::{q_apply, q_boundary, q_cells, q_is_contractible_exact, q_is_contractible_lifting, Side};
use iterop::gset::GlobularSet;
use iterop::operads::{GOperad, OperadSeries, SetOperad};
use iterop::pd::PastingDiagram;

fn main() -> iterop::Result<()> {
    let s = OperadSeries::with_top(GOperad::chaotic(SetOperad::cyclic(2, 6)?, 1))?;
    let p: PastingDiagram = "dim=2:[[oo][o][][oooo]]".parse()?;
    let cells = q_cells(&s, &p)?;
    println!("{} cells over {p} for {s}", cells.len());
    for q in &cells {
        let src = q_boundary(&s, q, Side::Source)?;
        let tgt = q_boundary(&s, q, Side::Target)?;
        println!("  {}: {} -> {}", q.to_json(), src, tgt);
    }

    for series in [
        s.clone(),
        OperadSeries::with_top(GOperad::discrete(SetOperad::cyclic(2, 6)?, 1))?,
        OperadSeries::with_top(GOperad::chaotic(SetOperad::magma(6), 1))?,
    ] {
        let exact = q_is_contractible_exact(&series);
        let lift = q_is_contractible_lifting(&series, 5)?;
        println!("{series}: exact {}, lifting {}", exact.contractible, lift.contractible);
        if let Some(f) = lift.failures.first() {
            println!("  {f}");
        }
    }

    let x = GlobularSet::new(1, vec![1, 1], vec![vec![0]], vec![vec![0]])?;
    let free = q_apply(&OperadSeries::terminal(1, 6), &x, 5)?;
    println!("free algebra on a loop, shapes up to 5 vertices: {:?}", free.set.counts());
    Ok(())
}
