//! Parse, inspect, enumerate and compose pasting diagrams.

use iterop::pd::{enumerate_pds, substitute, PastingDiagram, SubstLabeling};

fn main() -> iterop::Result<()> {
    let p: PastingDiagram = "dim=2:[[oo][o][][oooo]]".parse()?;
    println!("{p} has dimension {} and {} vertices", p.dim(), p.vertex_count());
    for n in p.nodes() {
        println!("  node at height {} with arity {}", n.height, n.arity);
    }
    println!("boundary: {}", p.boundary()?);
    println!("cells per dimension: {:?}", p.cell_counts());

    println!("2-dimensional diagrams with at most 4 vertices:");
    for q in enumerate_pds(2, 4) {
        println!("  {q}");
    }

    // two stacked 2-cells, each replaced by a horizontal pair
    let stack = PastingDiagram::columns(&[2]);
    let l = SubstLabeling::new(vec![
        vec![PastingDiagram::point(); 2],
        vec![PastingDiagram::arity(2); 3],
        vec![PastingDiagram::columns(&[1, 1]); 2],
    ]);
    println!("{stack} with every 2-cell replaced by {} gives {}", l.labels[2][0], substitute(&stack, &l)?);
    Ok(())
}
