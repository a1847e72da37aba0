//! Piecewise-linear endpoint-preserving maps `[0,1] -> [0,k]` with rational
//! breakpoints, closed under the reparametrisation composition of the interval operad.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Q = BigRational;

fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

fn int(n: usize) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// A map of the interval operad in arity `k`, stored in canonical form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PLMap {
    k: usize,
    pts: Vec<(Q, Q)>,
}

impl PLMap {
    /// Validates endpoints, ordering and range, then canonicalizes.
    pub fn new(k: usize, pts: Vec<(Q, Q)>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidMap(msg));
        if pts.len() < 2 {
            return bad("need at least two breakpoints".into());
        }
        if !pts[0].0.is_zero() || !pts[pts.len() - 1].0.is_one() {
            return bad("breakpoints must start at 0 and end at 1".into());
        }
        if pts.windows(2).any(|w| w[0].0 >= w[1].0) {
            return bad("breakpoints must be strictly increasing".into());
        }
        let top = int(k);
        if !pts[0].1.is_zero() || pts[pts.len() - 1].1 != top {
            return bad(format!("values must run from 0 to {k}"));
        }
        if let Some((t, v)) = pts.iter().find(|(_, v)| v < &Q::zero() || v > &top) {
            return bad(format!("value {v} at {t} outside [0, {k}]"));
        }
        Ok(PLMap { k, pts: canonicalize(pts) })
    }

    pub fn identity() -> Self {
        PLMap { k: 1, pts: vec![(Q::zero(), Q::zero()), (Q::one(), Q::one())] }
    }

    /// `t ↦ k t`.
    pub fn linear(k: usize) -> Self {
        PLMap::new(k, vec![(Q::zero(), Q::zero()), (Q::one(), int(k))]).expect("endpoint preserving")
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn points(&self) -> &[(Q, Q)] {
        &self.pts
    }

    pub fn to_json(&self) -> String {
        let repr = PLRepr {
            k: self.k,
            pts: self.pts.iter().map(|(t, v)| [t.to_string(), v.to_string()]).collect(),
        };
        serde_json::to_string(&repr).expect("plain data")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let repr: PLRepr = serde_json::from_str(text)?;
        let parse = |s: &str| s.parse::<Q>().map_err(|e| Error::Json(format!("bad rational {s:?}: {e}")));
        let pts = repr
            .pts
            .iter()
            .map(|[t, v]| Ok((parse(t)?, parse(v)?)))
            .collect::<Result<Vec<_>>>()?;
        PLMap::new(repr.k, pts)
    }
}

impl fmt::Display for PLMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E({}):", self.k)?;
        for (t, v) in &self.pts {
            write!(f, " ({t}, {v})")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PLRepr {
    k: usize,
    pts: Vec<[String; 2]>,
}

/// Drop breakpoints lying on the segment through their neighbours.
pub fn canonicalize(pts: Vec<(Q, Q)>) -> Vec<(Q, Q)> {
    let mut out: Vec<(Q, Q)> = Vec::with_capacity(pts.len());
    for p in pts {
        if out.last().is_some_and(|l| l.0 == p.0) {
            continue;
        }
        while out.len() >= 2 {
            let (a, b) = (&out[out.len() - 2], &out[out.len() - 1]);
            if (&b.1 - &a.1) * (&p.0 - &a.0) == (&p.1 - &a.1) * (&b.0 - &a.0) {
                out.pop();
            } else {
                break;
            }
        }
        out.push(p);
    }
    out
}

fn interpolate(pts: &[(Q, Q)], t: &Q) -> Q {
    let i = pts.partition_point(|(s, _)| s <= t).clamp(1, pts.len() - 1);
    let ((t0, v0), (t1, v1)) = (&pts[i - 1], &pts[i]);
    v0 + (v1 - v0) * (t - t0) / (t1 - t0)
}

/// Exact value at `t ∈ [0,1]`.
pub fn pl_eval(f: &PLMap, t: &Q) -> Result<Q> {
    if t < &Q::zero() || t > &Q::one() {
        return Err(Error::InvalidMap(format!("{t} outside [0, 1]")));
    }
    Ok(interpolate(&f.pts, t))
}

/// The offset added to the `j`-th argument, given as a function so faults can be injected.
pub type Offsets = dyn Fn(&[usize], usize) -> usize + Sync;

fn standard_offset(ks: &[usize], j: usize) -> usize {
    ks[..j].iter().sum()
}

/// Operadic composition: run `f`, then on the stretch where `f` lies in `[j, j+1]`
/// run `gs[j]` shifted by the arities of the earlier arguments.
pub fn pl_compose(f: &PLMap, gs: &[PLMap]) -> Result<PLMap> {
    compose_with(f, gs, &standard_offset)
}

pub fn compose_with(f: &PLMap, gs: &[PLMap], offset: &Offsets) -> Result<PLMap> {
    if gs.len() != f.k {
        return Err(Error::ArityMismatch { expected: f.k, got: gs.len() });
    }
    let ks: Vec<usize> = gs.iter().map(|g| g.k).collect();
    let total: usize = ks.iter().sum();
    if f.k == 0 {
        return PLMap::new(0, vec![(Q::zero(), Q::zero()), (Q::one(), Q::zero())]);
    }
    let mut levels: Vec<Q> = Vec::new();
    for (j, g) in gs.iter().enumerate() {
        levels.extend(g.pts.iter().map(|(s, _)| int(j) + s));
    }
    let mut ts: Vec<Q> = Vec::new();
    for w in f.pts.windows(2) {
        let ((t0, v0), (t1, v1)) = (&w[0], &w[1]);
        ts.push(t0.clone());
        if v0 == v1 {
            continue;
        }
        let (lo, hi) = if v0 < v1 { (v0, v1) } else { (v1, v0) };
        for l in levels.iter().filter(|l| *l > lo && *l < hi) {
            ts.push(t0 + (t1 - t0) * (l - v0) / (v1 - v0));
        }
    }
    ts.push(Q::one());
    ts.sort();
    ts.dedup();
    let m = f.k;
    let pts = ts
        .into_iter()
        .map(|t| {
            let v = interpolate(&f.pts, &t);
            let j = (v.floor().to_integer().try_into().unwrap_or(0usize)).min(m - 1);
            let inner = interpolate(&gs[j].pts, &(v - int(j)));
            (t, int(offset(&ks, j)) + inner)
        })
        .collect();
    PLMap::new(total, pts)
}

/// How many random instances to draw and how large they may be.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SampleSpec {
    pub triples: usize,
    pub seed: u64,
    pub max_arity: usize,
    pub max_pieces: usize,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec { triples: 100, seed: 0, max_arity: 3, max_pieces: 4 }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub checked: usize,
    pub failure: Option<String>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// A random map of arity `k` whose interior values may leave the monotone range.
pub fn random_map(rng: &mut impl Rng, k: usize, max_pieces: usize) -> PLMap {
    let pieces = rng.gen_range(1..=max_pieces.max(1));
    let mut ts: Vec<Q> = (1..pieces).map(|_| q(rng.gen_range(1..12), 12)).collect();
    ts.sort();
    ts.dedup();
    let mut pts = vec![(Q::zero(), Q::zero())];
    for t in ts {
        let v = if k == 0 { Q::zero() } else { q(rng.gen_range(0..=(6 * k as i64)), 6) };
        pts.push((t, v));
    }
    pts.push((Q::one(), int(k)));
    PLMap::new(k, pts).expect("generated within range")
}

/// Unit and associativity laws on seeded random instances.
pub fn pl_check_axioms(spec: &SampleSpec) -> AxiomCheck {
    check_axioms_with(spec, &standard_offset)
}

pub fn check_axioms_with(spec: &SampleSpec, offset: &Offsets) -> AxiomCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let compose = |f: &PLMap, gs: &[PLMap]| compose_with(f, gs, offset);
    let mut checked = 0;
    let fail = |checked, msg: String| AxiomCheck { checked, failure: Some(msg) };
    for _ in 0..spec.triples {
        let m = rng.gen_range(0..=spec.max_arity);
        let f = random_map(&mut rng, m, spec.max_pieces);
        let gs: Vec<PLMap> = (0..m)
            .map(|_| {
                let k = rng.gen_range(0..=spec.max_arity);
                random_map(&mut rng, k, spec.max_pieces)
            })
            .collect();
        let hs: Vec<Vec<PLMap>> = gs
            .iter()
            .map(|g| {
                (0..g.k)
                    .map(|_| {
                        let k = rng.gen_range(0..=spec.max_arity);
                        random_map(&mut rng, k, spec.max_pieces)
                    })
                    .collect()
            })
            .collect();
        checked += 1;
        let left = compose(&PLMap::identity(), std::slice::from_ref(&f));
        if left.as_ref() != Ok(&f) {
            return fail(checked, format!("id ∘ f ≠ f for f = {f}"));
        }
        let right = compose(&f, &vec![PLMap::identity(); m]);
        if right.as_ref() != Ok(&f) {
            return fail(checked, format!("f ∘ (id, …, id) ≠ f for f = {f}"));
        }
        let outer = compose(&f, &gs).and_then(|fg| compose(&fg, &hs.concat()));
        let inner = gs
            .iter()
            .zip(&hs)
            .map(|(g, h)| compose(g, h))
            .collect::<Result<Vec<_>>>()
            .and_then(|gh| compose(&f, &gh));
        if outer.is_err() || outer != inner {
            return fail(checked, format!("associativity fails for f = {f}, gs = {gs:?}"));
        }
    }
    AxiomCheck { checked, failure: None }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(k: usize, pts: &[(i64, i64, i64, i64)]) -> PLMap {
        PLMap::new(k, pts.iter().map(|&(a, b, c, d)| (q(a, b), q(c, d))).collect()).unwrap()
    }

    #[test]
    fn worked_composite() {
        let f = PLMap::linear(2);
        let g1 = PLMap::linear(3);
        let g2 = map(0, &[(0, 1, 0, 1), (1, 1, 0, 1)]);
        let h = pl_compose(&f, &[g1, g2]).unwrap();
        assert_eq!(h, map(3, &[(0, 1, 0, 1), (1, 2, 3, 1), (1, 1, 3, 1)]));
        assert_eq!(pl_eval(&h, &q(1, 4)).unwrap(), q(3, 2));
        assert_eq!(pl_eval(&PLMap::identity(), &q(1, 2)).unwrap(), q(1, 2));
        assert!(pl_eval(&h, &q(3, 2)).is_err());
    }

    #[test]
    fn non_monotone_associativity() {
        let f = map(2, &[(0, 1, 0, 1), (1, 3, 2, 1), (2, 3, 1, 1), (1, 1, 2, 1)]);
        let g1 = map(2, &[(0, 1, 0, 1), (1, 2, 1, 2), (1, 1, 2, 1)]);
        let g2 = PLMap::linear(1);
        let h1 = vec![PLMap::linear(1), PLMap::linear(2)];
        let h2 = vec![map(1, &[(0, 1, 0, 1), (1, 2, 1, 1), (1, 1, 1, 1)])];
        let a = pl_compose(&pl_compose(&f, &[g1.clone(), g2.clone()]).unwrap(), &[h1.clone(), h2.clone()].concat()).unwrap();
        let b = pl_compose(&f, &[pl_compose(&g1, &h1).unwrap(), pl_compose(&g2, &h2).unwrap()]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn canonical_form_merges_collinear_points() {
        let f = map(2, &[(0, 1, 0, 1), (1, 4, 1, 2), (1, 2, 1, 1), (1, 1, 2, 1)]);
        assert_eq!(f, PLMap::linear(2));
        assert_eq!(f.points().len(), 2);
    }

    #[test]
    fn rejects_bad_endpoints() {
        assert!(PLMap::new(1, vec![(q(0, 1), q(1, 2)), (q(1, 1), q(1, 1))]).is_err());
        assert!(PLMap::new(1, vec![(q(0, 1), q(0, 1)), (q(1, 1), q(2, 1))]).is_err());
        assert!(PLMap::new(1, vec![(q(0, 1), q(0, 1)), (q(1, 2), q(3, 1)), (q(1, 1), q(1, 1))]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = map(2, &[(0, 1, 0, 1), (1, 2, 1, 4), (1, 1, 2, 1)]);
        let s = f.to_json();
        assert_eq!(s, r#"{"k":2,"pts":[["0","0"],["1/2","1/4"],["1","2"]]}"#);
        assert_eq!(PLMap::from_json(&s).unwrap(), f);
    }

    #[test]
    fn seeded_axioms_and_fault() {
        assert!(pl_check_axioms(&SampleSpec::default()).passed());
        let broken = |ks: &[usize], j: usize| ks[..j].iter().sum::<usize>() + usize::from(j > 0);
        let r = check_axioms_with(&SampleSpec::default(), &broken);
        assert!(!r.passed());
    }
}
