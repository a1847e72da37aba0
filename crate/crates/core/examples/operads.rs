//! Classical operads, their globular lifts, and the checks run on them.

use iterop::operads::{check_operad_axioms, operad_is_contractible, GOperad, SetOperad};

fn main() -> iterop::Result<()> {
    let magma = SetOperad::magma(5);
    println!("bracketings of 4 leaves: {}", magma.size(4));
    let ((k, c), b) = {
        let x = magma.bracketing_index(&"(x(xx))".parse()?).expect("3 leaves");
        let y = magma.bracketing_index(&"(xx)".parse()?).expect("2 leaves");
        let r = magma.gamma((3, x), &[(1, 0), (2, y), (1, 0)])?;
        (r, magma.bracketing(r.0, r.1).cloned())
    };
    println!("(x(xx)) ∘ (x, (xx), x) = {} (arity {k}, index {c})", b.expect("valid"));

    for p in [
        GOperad::chaotic(SetOperad::cyclic(2, 6)?, 1),
        GOperad::discrete(SetOperad::cyclic(2, 6)?, 1),
        GOperad::chaotic(SetOperad::magma(6), 1),
        GOperad::loops(3, 1, 6)?,
    ] {
        let laws = check_operad_axioms(&p, 3, 1_000_000, 0);
        let c = operad_is_contractible(&p, 6);
        println!(
            "{p}: laws {} over {} instances; contractible {}{}",
            if laws.passed { "hold" } else { "fail" },
            laws.checked,
            c.contractible,
            c.witness.map(|w| format!(" ({w})")).unwrap_or_default()
        );
    }
    Ok(())
}
