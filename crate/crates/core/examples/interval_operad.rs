//! Exact piecewise-linear maps composed in the interval operad.

use iterop::interval::{pl_check_axioms, pl_compose, pl_eval, PLMap, SampleSpec};

fn main() -> iterop::Result<()> {
    let f = PLMap::linear(2);
    let g1 = PLMap::linear(3);
    let g2 = PLMap::from_json(r#"{"k":0,"pts":[["0","0"],["1","0"]]}"#)?;
    let h = pl_compose(&f, &[g1, g2])?;
    println!("{h}");
    println!("h(1/4) = {}", pl_eval(&h, &"1/4".parse().expect("rational"))?);
    println!("as json: {}", h.to_json());

    let r = pl_check_axioms(&SampleSpec::default());
    println!("unit and associativity on {} random triples: {}", r.checked, if r.passed() { "hold" } else { "fail" });
    Ok(())
}
