//! The interchange law parametrised by the 1-cells of P₁(2).

use iterop::globop::interchange_check;
use iterop::operads::{GOperad, OperadSeries, SetOperad};

fn main() -> iterop::Result<()> {
    let s = OperadSeries::with_top(GOperad::chaotic(SetOperad::cyclic(2, 6)?, 1))?;
    let p = s.get(1);
    for f in 0..p.count(2, 1) {
        for g in 0..p.count(2, 1) {
            match interchange_check(&s, f, g) {
                Ok(r) => println!("f={f} g={g}: {} on both sides, g∘f = {}", r.lhs, r.composite),
                Err(e) => println!("f={f} g={g}: {e}"),
            }
        }
    }
    Ok(())
}
