use iterop::globop::{q_boundary, q_cells, q_project, QCell, Side};
use iterop::gset::{associated_gset, boundary_inclusions, GlobularSet};
use iterop::interval::{canonicalize, pl_compose, pl_eval, random_map, PLMap, Q};
use iterop::operads::{GOperad, OperadSeries, SetOperad};
use iterop::pd::{parse_pd, print_pd, substitute, PastingDiagram, SubstLabeling};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pd_of_dim(d: usize) -> BoxedStrategy<PastingDiagram> {
    if d == 0 {
        return Just(PastingDiagram::point()).boxed();
    }
    prop::collection::vec(pd_of_dim(d - 1), 0..=3)
        .prop_map(move |c| PastingDiagram::new(d, c).unwrap())
        .boxed()
}

fn any_pd() -> impl Strategy<Value = PastingDiagram> {
    (1usize..=3).prop_flat_map(pd_of_dim)
}

fn chaotic_series() -> OperadSeries {
    OperadSeries::new(vec![
        GOperad::terminal(0, 12),
        GOperad::chaotic(SetOperad::cyclic(2, 12).unwrap(), 1),
        GOperad::chaotic(SetOperad::cyclic(3, 12).unwrap(), 2),
    ])
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn print_parse_round_trip(p in any_pd()) {
        prop_assert_eq!(parse_pd(&print_pd(&p)).unwrap(), p);
    }

    #[test]
    fn vertex_count_is_nodes_plus_leaves(p in any_pd()) {
        let counts = p.cell_counts();
        prop_assert_eq!(counts[0], p.root_arity() + 1);
        prop_assert!(p.vertex_count() >= p.nodes().len());
    }

    #[test]
    fn associated_sets_are_globular(p in any_pd()) {
        let a = associated_gset(&p);
        prop_assert!(a.set.check_globularity().is_ok());
        let (s, t) = boundary_inclusions(&p).unwrap();
        let b = associated_gset(&p.boundary().unwrap()).set;
        prop_assert!(s.validate(&b, &a.set).is_ok());
        prop_assert!(t.validate(&b, &a.set).is_ok());
    }

    #[test]
    fn substitution_commutes_with_boundary(p in any_pd()) {
        // relabel every cell by itself and compare boundaries before and after
        let l = SubstLabeling::unit(&p);
        let r = substitute(&p, &l).unwrap();
        let (s, _) = boundary_inclusions(&p).unwrap();
        let b = substitute(&p.boundary().unwrap(), &l.restrict(&s)).unwrap();
        prop_assert_eq!(r.boundary().unwrap(), b);
    }

    #[test]
    fn q_boundary_projects_to_boundary(p in any_pd(), pick in any::<prop::sample::Index>()) {
        let s = chaotic_series();
        let cells = q_cells(&s, &p).unwrap();
        let q = pick.get(&cells);
        for side in [Side::Source, Side::Target] {
            let b = q_boundary(&s, q, side).unwrap();
            prop_assert_eq!(q_project(&b), p.boundary().unwrap());
            if p.dim() >= 2 {
                let ss = q_boundary(&s, &b, Side::Source).unwrap();
                let st = q_boundary(&s, &q_boundary(&s, q, Side::Target).unwrap(), Side::Source).unwrap();
                prop_assert_eq!(ss, st);
            }
        }
    }

    #[test]
    fn q_cell_json_round_trip(p in any_pd(), pick in any::<prop::sample::Index>()) {
        let s = chaotic_series();
        let cells = q_cells(&s, &p).unwrap();
        let q = pick.get(&cells);
        prop_assert_eq!(&QCell::from_json(&s, &q.to_json()).unwrap(), q);
    }

    #[test]
    fn products_and_coproducts_stay_globular(a in any_pd(), b in any_pd()) {
        let (x, y) = (associated_gset(&a).set, associated_gset(&b).set);
        if x.n() == y.n() {
            let p = GlobularSet::product(&x, &y).unwrap();
            prop_assert!(p.check_globularity().is_ok());
            prop_assert_eq!(p.count(0), x.count(0) * y.count(0));
            let c = GlobularSet::coproduct(&x, &y).unwrap();
            prop_assert_eq!(c.total_cells(), x.total_cells() + y.total_cells());
            prop_assert_eq!(GlobularSet::from_json(&c.to_json()).unwrap(), c);
        }
    }

    #[test]
    fn composites_preserve_endpoints(seed in any::<u64>(), m in 0usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_map(&mut rng, m, 4);
        let gs: Vec<PLMap> = (0..m).map(|i| random_map(&mut rng, i % 3, 3)).collect();
        let h = pl_compose(&f, &gs).unwrap();
        let total: usize = gs.iter().map(PLMap::k).sum();
        let top = Q::from_integer(BigInt::from(total));
        prop_assert!(h.points()[0].1.is_zero());
        prop_assert_eq!(&h.points().last().unwrap().1, &top);
        prop_assert!(h.points().iter().all(|(_, v)| !(v < &Q::zero()) && v <= &top));
    }

    #[test]
    fn canonical_form_is_idempotent_and_exact(seed in any::<u64>(), k in 0usize..=3, i in 0i64..=24) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_map(&mut rng, k, 5);
        let pts = f.points().to_vec();
        prop_assert_eq!(&canonicalize(pts.clone()), &pts);
        // inserting a point of the graph changes nothing
        let t = Q::new(BigInt::from(i), BigInt::from(24));
        let v = pl_eval(&f, &t).unwrap();
        let mut refined = pts.clone();
        if !refined.iter().any(|(s, _)| s == &t) {
            refined.push((t.clone(), v.clone()));
            refined.sort();
        }
        let g = PLMap::new(k, refined).unwrap();
        prop_assert_eq!(&g, &f);
        prop_assert_eq!(PLMap::from_json(&f.to_json()).unwrap(), f);
    }
}
