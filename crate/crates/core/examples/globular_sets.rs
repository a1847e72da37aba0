//! Globular sets built from pasting diagrams, diagrams into a set, and pullbacks.

use iterop::gset::{associated_gset, diagrams, pullback, GMorphism, GlobularSet};
use iterop::pd::PastingDiagram;

fn main() -> iterop::Result<()> {
    let p = PastingDiagram::columns(&[2, 0, 1]);
    let a = associated_gset(&p);
    println!("Gl({p}) has cells {:?}", a.set.counts());
    let s = a.source.expect("positive dimension");
    println!("source inclusion of the boundary: {:?}", s.maps());

    // a 2-globular set with two objects, two parallel arrows and a 2-cell between them
    let x = GlobularSet::new(2, vec![2, 2, 1], vec![vec![0, 0], vec![0]], vec![vec![1, 1], vec![1]])?;
    println!("X contractible: {}", x.is_contractible());
    if let Some(why) = x.contractibility_failure() {
        println!("  because {why}");
    }
    let paths = diagrams(&x, &PastingDiagram::arity(1))?;
    println!("{} diagrams of shape {} in X", paths.len(), PastingDiagram::arity(1));

    let ball = GlobularSet::ball(2);
    let t = GlobularSet::terminal(2);
    for (name, g) in [("the 2-ball", &ball), ("the terminal set", &t)] {
        match g.contractibility_failure() {
            None => println!("{name} is contractible"),
            Some(why) => println!("{name} is not contractible: {why}"),
        }
    }
    let pb = pullback(&x, &GMorphism::to_terminal(&x, 2), &ball, &GMorphism::to_terminal(&ball, 2), &t)?;
    println!("X × B² has cells {:?}", pb.set.counts());
    Ok(())
}
