use std::collections::BTreeMap;

use iterop::globop::{q2_multiply, q_boundary, q_cells, q_unit, QCell, Side};
use iterop::gset::{associated_gset, diagrams, GlobularSet};
use iterop::operads::{GOperad, OperadSeries, SetOperad};
use iterop::pd::{enumerate_pds, substitute, substitute_with_embeddings, PastingDiagram, SubstLabeling};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Diagrams = (GlobularSet, Vec<Vec<PastingDiagram>>);

fn diagram_set(top: usize, v: usize) -> Diagrams {
    let cells: Vec<Vec<PastingDiagram>> = (0..=top).map(|d| enumerate_pds(d, v)).collect();
    let index: Vec<BTreeMap<PastingDiagram, usize>> =
        cells.iter().map(|row| row.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect()).collect();
    let bd: Vec<Vec<usize>> = (1..=top)
        .map(|d| cells[d].iter().map(|p| index[d - 1][&p.boundary().unwrap()]).collect())
        .collect();
    let g = GlobularSet::new(top, cells.iter().map(Vec::len).collect(), bd.clone(), bd).unwrap();
    (g, cells)
}

/// A random labeling drawn cell by cell from the lowest dimension up, retrying on dead ends.
fn random_labeling(pd: &PastingDiagram, g: &Diagrams, rng: &mut ChaCha8Rng) -> SubstLabeling {
    let gl = associated_gset(pd).set;
    'attempt: for _ in 0..100 {
        let mut picks: Vec<Vec<usize>> = Vec::new();
        for d in 0..=pd.dim() {
            let mut row = Vec::new();
            for c in 0..gl.count(d) {
                let options: Vec<usize> = (0..g.0.count(d))
                    .filter(|&x| {
                        d == 0 || (g.0.src(d, x) == picks[d - 1][gl.src(d, c)] && g.0.tgt(d, x) == picks[d - 1][gl.tgt(d, c)])
                    })
                    .collect();
                match options.choose(rng) {
                    Some(&x) => row.push(x),
                    None => continue 'attempt,
                }
            }
            picks.push(row);
        }
        let labels = picks.iter().enumerate().map(|(d, row)| row.iter().map(|&x| g.1[d][x].clone()).collect()).collect();
        return SubstLabeling::new(labels);
    }
    SubstLabeling::unit(pd)
}

/// Arguments over every labeled cell, chosen bottom-up so boundaries agree.
fn random_args(s: &OperadSeries, pd: &PastingDiagram, l: &SubstLabeling, rng: &mut ChaCha8Rng) -> Vec<Vec<QCell>> {
    let gl = associated_gset(pd).set;
    let mut args: Vec<Vec<QCell>> = Vec::new();
    for d in 0..=pd.dim() {
        let mut row = Vec::new();
        for c in 0..gl.count(d) {
            let options: Vec<QCell> = q_cells(s, &l.labels[d][c])
                .unwrap()
                .into_iter()
                .filter(|q| {
                    d == 0
                        || (q_boundary(s, q, Side::Source).unwrap() == args[d - 1][gl.src(d, c)]
                            && q_boundary(s, q, Side::Target).unwrap() == args[d - 1][gl.tgt(d, c)])
                })
                .collect();
            row.push(options.choose(rng).expect("chaotic and terminal fibers always fill").clone());
        }
        args.push(row);
    }
    args
}

/// Arguments on a globe determined by the top one.
fn globe_args(s: &OperadSeries, top: &QCell) -> Vec<Vec<QCell>> {
    let m = top.dim();
    let gl = associated_gset(&PastingDiagram::globe(m)).set;
    let mut args: Vec<Vec<Option<QCell>>> = (0..=m).map(|d| vec![None; gl.count(d)]).collect();
    args[m][0] = Some(top.clone());
    for d in (1..=m).rev() {
        for c in 0..gl.count(d) {
            let q = args[d][c].clone().unwrap();
            args[d - 1][gl.src(d, c)] = Some(q_boundary(s, &q, Side::Source).unwrap());
            args[d - 1][gl.tgt(d, c)] = Some(q_boundary(s, &q, Side::Target).unwrap());
        }
    }
    args.into_iter().map(|row| row.into_iter().map(Option::unwrap).collect()).collect()
}

fn series() -> Vec<OperadSeries> {
    vec![
        OperadSeries::with_top(GOperad::chaotic(SetOperad::cyclic(2, 40).unwrap(), 1)).unwrap(),
        OperadSeries::with_top(GOperad::chaotic(SetOperad::cyclic(3, 40).unwrap(), 1)).unwrap(),
        OperadSeries::terminal(2, 40),
        OperadSeries::terminal(1, 40),
    ]
}

#[test]
fn unit_laws() {
    for s in series() {
        for m in 0..=s.n() {
            for pd in enumerate_pds(m, 6) {
                for q in q_cells(&s, &pd).unwrap() {
                    let gl = associated_gset(&pd).set;
                    let units: Vec<Vec<QCell>> =
                        (0..=m).map(|d| vec![q_unit(&s, d).unwrap(); gl.count(d)]).collect();
                    let right = q2_multiply(&s, &q, &SubstLabeling::unit(&pd), &units).unwrap();
                    assert_eq!(right, q, "right unit at {q}");
                    let left =
                        q2_multiply(&s, &q_unit(&s, m).unwrap(), &SubstLabeling::on_globe(&pd), &globe_args(&s, &q))
                            .unwrap();
                    assert_eq!(left, q, "left unit at {q}");
                }
            }
        }
    }
}

#[test]
fn associativity() {
    let first = diagram_set(2, 4);
    let second = diagram_set(2, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    for s in series() {
        for m in 1..=s.n() {
            for pd in enumerate_pds(m, 6) {
                let l1s: Vec<SubstLabeling> =
                    diagrams(&first.0, &pd).unwrap().iter().map(|f| SubstLabeling::from_morphism(f, &first.1)).collect();
                for l1 in l1s.choose_multiple(&mut rng, 12) {
                    let cells = q_cells(&s, &pd).unwrap();
                    let q = cells.choose(&mut rng).unwrap();
                    let args1 = random_args(&s, &pd, l1, &mut rng);
                    let sub = substitute_with_embeddings(&pd, l1).unwrap();
                    let mid = q2_multiply(&s, q, l1, &args1).unwrap();
                    assert_eq!(mid.shape(), &sub.result);
                    let l2 = random_labeling(&sub.result, &second, &mut rng);
                    let args2 = random_args(&s, &sub.result, &l2, &mut rng);
                    let lhs = q2_multiply(&s, &mid, &l2, &args2).unwrap();

                    let mut labels = Vec::new();
                    let mut args = Vec::new();
                    for (d, row) in sub.embeddings.iter().enumerate() {
                        let mut lrow = Vec::new();
                        let mut arow = Vec::new();
                        for (c, e) in row.iter().enumerate() {
                            let inner = l2.restrict(e);
                            let inner_args: Vec<Vec<QCell>> = (0..e.dims())
                                .map(|dd| e.map(dd).iter().map(|&x| args2[dd][x].clone()).collect())
                                .collect();
                            lrow.push(substitute(&l1.labels[d][c], &inner).unwrap());
                            arow.push(q2_multiply(&s, &args1[d][c], &inner, &inner_args).unwrap());
                        }
                        labels.push(lrow);
                        args.push(arow);
                    }
                    let rhs = q2_multiply(&s, q, &SubstLabeling::new(labels), &args).unwrap();
                    assert_eq!(lhs, rhs, "associativity over {pd}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 500, "only {checked} triples");
}

#[test]
fn rejects_higher_truncation() {
    let s = OperadSeries::terminal(3, 6);
    let q = q_unit(&s, 1).unwrap();
    let pd = PastingDiagram::globe(1);
    let args = globe_args(&s, &q);
    assert!(matches!(
        q2_multiply(&s, &q, &SubstLabeling::unit(&pd), &args),
        Err(iterop::Error::Unsupported(_))
    ));
}

#[test]
fn mismatched_argument_is_named() {
    let s = OperadSeries::with_top(GOperad::chaotic(SetOperad::cyclic(2, 6).unwrap(), 1)).unwrap();
    let pd = PastingDiagram::arity(2);
    let q = q_cells(&s, &pd).unwrap().remove(0);
    let l = SubstLabeling::new(vec![vec![PastingDiagram::point(); 3], vec![PastingDiagram::arity(1); 2]]);
    let pt = q_unit(&s, 0).unwrap();
    let wrong = q_cells(&s, &PastingDiagram::arity(2)).unwrap().remove(0);
    let good = q_cells(&s, &PastingDiagram::arity(1)).unwrap().remove(0);
    let args = vec![vec![pt.clone(), pt.clone(), pt], vec![good, wrong]];
    match q2_multiply(&s, &q, &l, &args) {
        Err(iterop::Error::IncompatibleLabel { dim: 1, cell: 1, .. }) => {}
        other => panic!("{other:?}"),
    }
}
