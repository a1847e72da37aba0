//! V-graphs, (V,P)-categories and the free monads on them, at bounded path length.
//!
//! `V` is a category of finite `n`-truncated globular sets. A V-graph has a
//! finite object set and a globular set `hom(a, b)` for every ordered pair.
//! Free constructions are materialised up to a maximal path length: a cell of
//! `fc_(V,P)(A)(a, b)` is a [`LabeledPath`], an object string from `a` to `b`
//! with one cell of each hom along it and one cell of `P(k)` of the same
//! dimension. Nothing is quotiented, so equality of elements is equality of terms.

use std::collections::{BTreeMap, HashMap};

use rand::seq::SliceRandom;
use rayon::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gset::{pullback, GMorphism, GlobularSet, Pullback};
use crate::operads::{odometer, GOperad, OperadSpec};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VGraph {
    objects: usize,
    n: usize,
    homs: Vec<GlobularSet>,
}

#[derive(Serialize, Deserialize)]
struct VGraphJson {
    objects: usize,
    n: usize,
    hom: Vec<Vec<GlobularSet>>,
}

impl VGraph {
    /// `homs[a * objects + b]` is `hom(a, b)`.
    pub fn new(objects: usize, n: usize, homs: Vec<GlobularSet>) -> Result<Self> {
        if homs.len() != objects * objects {
            return Err(Error::InvalidGlobularSet(format!(
                "{} hom-objects for {objects} objects",
                homs.len()
            )));
        }
        if let Some(h) = homs.iter().find(|h| h.n() != n) {
            return Err(Error::TruncationMismatch(h.n(), n));
        }
        Ok(VGraph { objects, n, homs })
    }

    /// A Set-graph: `counts[a * objects + b]` parallel arrows from `a` to `b`.
    pub fn from_counts(objects: usize, counts: &[usize]) -> Result<Self> {
        let homs = counts
            .iter()
            .map(|&c| GlobularSet::new(0, vec![c], vec![], vec![]))
            .collect::<Result<Vec<_>>>()?;
        Self::new(objects, 0, homs)
    }

    /// One object whose single hom is `hom`.
    pub fn one_object(hom: GlobularSet) -> Self {
        VGraph { objects: 1, n: hom.n(), homs: vec![hom] }
    }

    /// The terminal V-graph: one object, terminal hom.
    pub fn terminal(n: usize) -> Self {
        Self::one_object(GlobularSet::terminal(n))
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hom(&self, a: usize, b: usize) -> &GlobularSet {
        &self.homs[a * self.objects + b]
    }

    pub fn homs(&self) -> &[GlobularSet] {
        &self.homs
    }

    pub fn to_json(&self) -> String {
        let hom = (0..self.objects)
            .map(|a| (0..self.objects).map(|b| self.hom(a, b).clone()).collect())
            .collect();
        serde_json::to_string(&VGraphJson { objects: self.objects, n: self.n, hom }).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: VGraphJson = serde_json::from_str(text)?;
        if j.hom.len() != j.objects || j.hom.iter().any(|r| r.len() != j.objects) {
            return Err(Error::InvalidGlobularSet("hom table must be objects × objects".into()));
        }
        Self::new(j.objects, j.n, j.hom.into_iter().flatten().collect())
    }
}

/// A formal composite: objects `a_0 … a_k`, a label in `P(k)` and one cell of
/// `hom(a_i, a_{i+1})` per step, all of one dimension.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct LabeledPath {
    pub objects: Vec<usize>,
    pub label: usize,
    pub cells: Vec<usize>,
}

impl LabeledPath {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// A free construction on a V-graph with its cells spelled out as terms.
#[derive(Clone, Debug)]
pub struct FreeGraph {
    pub graph: VGraph,
    terms: Vec<Vec<Vec<LabeledPath>>>,
    index: Vec<Vec<HashMap<LabeledPath, usize>>>,
}

impl FreeGraph {
    /// The term behind the `d`-cell `i` of `hom(a, b)`.
    pub fn term(&self, a: usize, b: usize, d: usize, i: usize) -> &LabeledPath {
        &self.terms[a * self.graph.objects + b][d][i]
    }

    pub fn terms(&self, a: usize, b: usize, d: usize) -> &[LabeledPath] {
        &self.terms[a * self.graph.objects + b][d]
    }

    pub fn find(&self, a: usize, b: usize, d: usize, t: &LabeledPath) -> Option<usize> {
        self.index[a * self.graph.objects + b][d].get(t).copied()
    }
}

/// Object strings `a = a_0, …, a_k = b`, lexicographic.
pub fn object_strings(objects: usize, a: usize, b: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if a == b { vec![vec![a]] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let mut mid = vec![0usize; k - 1];
    let radices = vec![objects; k - 1];
    if objects == 0 {
        return out;
    }
    loop {
        let mut s = vec![a];
        s.extend(&mid);
        s.push(b);
        out.push(s);
        if !odometer(&mut mid, &radices) {
            break;
        }
    }
    out
}

fn free_paths(a: &VGraph, p: Option<&GOperad>, max_len: usize) -> Result<FreeGraph> {
    if let Some(p) = p {
        if p.n() != a.n {
            return Err(Error::TruncationMismatch(p.n(), a.n));
        }
    }
    let n = a.n;
    let no = a.objects;
    let max_k = p.map_or(max_len, |p| max_len.min(p.max_arity()));
    let mut terms = Vec::with_capacity(no * no);
    let mut index = Vec::with_capacity(no * no);
    for s in 0..no {
        for t in 0..no {
            let mut per_dim = Vec::with_capacity(n + 1);
            for d in 0..=n {
                let mut list = Vec::new();
                for k in 0..=max_k {
                    for objs in object_strings(no, s, t, k) {
                        let radices: Vec<usize> = objs.windows(2).map(|w| a.hom(w[0], w[1]).count(d)).collect();
                        if radices.contains(&0) {
                            continue;
                        }
                        let labels = p.map_or(1, |p| p.count(k, d));
                        for label in 0..labels {
                            let mut cells = vec![0; k];
                            loop {
                                list.push(LabeledPath { objects: objs.clone(), label, cells: cells.clone() });
                                if !odometer(&mut cells, &radices) {
                                    break;
                                }
                            }
                        }
                    }
                }
                per_dim.push(list);
            }
            let idx: Vec<HashMap<LabeledPath, usize>> = per_dim
                .iter()
                .map(|l| l.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect())
                .collect();
            terms.push(per_dim);
            index.push(idx);
        }
    }
    let mut homs = Vec::with_capacity(no * no);
    for h in 0..no * no {
        let counts = terms[h].iter().map(|l| l.len()).collect();
        let mut src = Vec::with_capacity(n);
        let mut tgt = Vec::with_capacity(n);
        for d in 1..=n {
            let bd = |which: usize| -> Vec<usize> {
                terms[h][d]
                    .iter()
                    .map(|x| {
                        let k = x.cells.len();
                        let b = |g: &GlobularSet, c: usize| if which == 0 { g.src(d, c) } else { g.tgt(d, c) };
                        let label = p.map_or(0, |p| if which == 0 { p.src(k, d, x.label) } else { p.tgt(k, d, x.label) });
                        let cells = x
                            .cells
                            .iter()
                            .enumerate()
                            .map(|(i, &c)| b(a.hom(x.objects[i], x.objects[i + 1]), c))
                            .collect();
                        index[h][d - 1][&LabeledPath { objects: x.objects.clone(), label, cells }]
                    })
                    .collect()
            };
            src.push(bd(0));
            tgt.push(bd(1));
        }
        homs.push(GlobularSet::new(n, counts, src, tgt)?);
    }
    Ok(FreeGraph { graph: VGraph { objects: no, n, homs }, terms, index })
}

/// The free V-category on `a`, paths of length at most `max_len`.
pub fn fc_v(a: &VGraph, max_len: usize) -> FreeGraph {
    free_paths(a, None, max_len).expect("no operad to mismatch")
}

/// The suspension of an operad: one object with hom `∐_{k <= max_len} P(k)`,
/// together with its degree map onto `fc_V(1)`.
#[derive(Clone, Debug)]
pub struct SigmaCollection {
    pub operad: GOperad,
    pub max_len: usize,
    pub hom: GlobularSet,
    /// The hom of `fc_V(1)`: one cell per length and dimension.
    pub base: GlobularSet,
    pub degree: GMorphism,
    offsets: Vec<Vec<usize>>,
}

impl SigmaCollection {
    /// Index of the `d`-cell `c` of the summand `P(k)`.
    pub fn cell(&self, k: usize, d: usize, c: usize) -> usize {
        self.offsets[k][d] + c
    }

    /// Summand and cell behind an index.
    pub fn locate(&self, d: usize, idx: usize) -> (usize, usize) {
        let k = self.degree.apply(d, idx);
        (k, idx - self.offsets[k][d])
    }

    pub fn summand_sizes(&self, d: usize) -> Vec<usize> {
        (0..self.offsets.len()).map(|k| self.operad.count(k, d)).collect()
    }

    pub fn unit(&self, d: usize) -> usize {
        self.cell(1, d, self.operad.unit(d))
    }

    /// Multiplication inherited from `γ`.
    pub fn compose(&self, d: usize, outer: usize, inner: &[usize]) -> Result<usize> {
        let top = self.locate(d, outer);
        let args: Vec<_> = inner.iter().map(|&i| self.locate(d, i)).collect();
        let (k, c) = self.operad.gamma(d, top, &args)?;
        if k > self.max_len {
            return Err(Error::BoundExceeded(format!("composite of length {k} over {}", self.max_len)));
        }
        Ok(self.cell(k, d, c))
    }
}

pub fn suspend_operad(p: &GOperad, max_len: usize) -> Result<SigmaCollection> {
    let len = max_len.min(p.max_arity());
    let n = p.n();
    let mut hom = GlobularSet::empty(n);
    let mut offsets = Vec::with_capacity(len + 1);
    for k in 0..=len {
        offsets.push(hom.counts().to_vec());
        hom = GlobularSet::coproduct(&hom, &p.gset(k)?)?;
    }
    let ids = |c: usize| vec![(0..c).collect::<Vec<_>>(); n];
    let base = GlobularSet::new(n, vec![len + 1; n + 1], ids(len + 1), ids(len + 1))?;
    let degree_maps = (0..=n)
        .map(|d| (0..=len).flat_map(|k| std::iter::repeat_n(k, p.count(k, d))).collect())
        .collect();
    let degree = GMorphism::new(&hom, &base, degree_maps)?;
    Ok(SigmaCollection { operad: p.clone(), max_len: len, hom, base, degree, offsets })
}

/// `fc_(V,P)(A)` computed directly and as the pullback of `ΣP -> fc_V(1) <- fc_V(A)`.
#[derive(Clone, Debug)]
pub struct FreeVP {
    pub direct: FreeGraph,
    pub paths: FreeGraph,
    pub sigma: SigmaCollection,
    /// One pullback per hom, indexed `a * objects + b`.
    pub pullbacks: Vec<Pullback>,
    /// `bijection[h][d][i]`: the pullback cell matching direct cell `i`.
    pub bijection: Vec<Vec<Vec<usize>>>,
}

pub fn fc_vp(a: &VGraph, p: &GOperad, max_len: usize) -> Result<FreeVP> {
    let len = max_len.min(p.max_arity());
    let direct = free_paths(a, Some(p), len)?;
    let paths = fc_v(a, len);
    let sigma = suspend_operad(p, len)?;
    let no = a.objects;
    let mut pullbacks = Vec::with_capacity(no * no);
    let mut bijection = Vec::with_capacity(no * no);
    for s in 0..no {
        for t in 0..no {
            let h = s * no + t;
            let fa = &paths.graph.homs[h];
            let to_len = GMorphism::new(
                fa,
                &sigma.base,
                (0..=a.n).map(|d| paths.terms(s, t, d).iter().map(|x| x.len()).collect()).collect(),
            )?;
            let pb = pullback(fa, &to_len, &sigma.hom, &sigma.degree, &sigma.base)?;
            let mut per_dim = Vec::with_capacity(a.n + 1);
            for d in 0..=a.n {
                let lookup: HashMap<(usize, usize), usize> =
                    pb.pairs[d].iter().enumerate().map(|(i, &q)| (q, i)).collect();
                let mut row = Vec::with_capacity(direct.terms(s, t, d).len());
                for x in direct.terms(s, t, d) {
                    let bare = LabeledPath { objects: x.objects.clone(), label: 0, cells: x.cells.clone() };
                    let pi = paths.find(s, t, d, &bare).expect("every direct path is a path");
                    let si = sigma.cell(x.len(), d, x.label);
                    row.push(*lookup.get(&(pi, si)).ok_or_else(|| {
                        Error::InvalidMorphism(format!("no pullback cell for {x:?}"))
                    })?);
                }
                if row.len() != pb.pairs[d].len() {
                    return Err(Error::InvalidMorphism(format!(
                        "direct and pullback homs differ in size at dim {d}: {} vs {}",
                        row.len(),
                        pb.pairs[d].len()
                    )));
                }
                per_dim.push(row);
            }
            GMorphism::new(&direct.graph.homs[h], &pb.set, per_dim.clone())?;
            pullbacks.push(pb);
            bijection.push(per_dim);
        }
    }
    Ok(FreeVP { direct, paths, sigma, pullbacks, bijection })
}

/// A V-graph with `k`-ary composition parametrised by `P(k)`, stored as a table
/// from formal composites to cells, for every length up to `max_len`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VPCategory {
    pub graph: VGraph,
    pub operad: GOperad,
    pub max_len: usize,
    /// `table[a * objects + b][d]` sends a formal composite to a `d`-cell of `hom(a, b)`.
    pub table: Vec<Vec<BTreeMap<LabeledPath, usize>>>,
}

#[derive(Serialize, Deserialize)]
struct CompositionEntry {
    objects: Vec<usize>,
    dim: usize,
    label: usize,
    cells: Vec<usize>,
    result: usize,
}

#[derive(Serialize, Deserialize)]
struct VPCategoryJson {
    graph: serde_json::Value,
    operad: OperadSpec,
    max_len: usize,
    compose: Vec<CompositionEntry>,
}

impl VPCategory {
    /// Fill the table by evaluating `compose(d, path)` on every formal composite.
    pub fn from_fn(
        graph: VGraph,
        operad: GOperad,
        max_len: usize,
        mut compose: impl FnMut(usize, &LabeledPath) -> usize,
    ) -> Result<Self> {
        let max_len = max_len.min(operad.max_arity());
        let free = free_paths(&graph, Some(&operad), max_len)?;
        let no = graph.objects;
        let mut table = Vec::with_capacity(no * no);
        for s in 0..no {
            for t in 0..no {
                table.push(
                    (0..=graph.n)
                        .map(|d| free.terms(s, t, d).iter().map(|x| (x.clone(), compose(d, x))).collect())
                        .collect(),
                );
            }
        }
        Ok(VPCategory { graph, operad, max_len, table })
    }

    /// A one-object category from an algebra `action(d, label, args)` on `hom`.
    pub fn from_algebra(
        hom: GlobularSet,
        operad: GOperad,
        max_len: usize,
        mut action: impl FnMut(usize, usize, &[usize]) -> usize,
    ) -> Result<Self> {
        Self::from_fn(VGraph::one_object(hom), operad, max_len, |d, x| action(d, x.label, &x.cells))
    }

    pub fn compose(&self, d: usize, x: &LabeledPath) -> Option<usize> {
        let (a, b) = (*x.objects.first()?, *x.objects.last()?);
        self.table.get(a * self.graph.objects + b)?.get(d)?.get(x).copied()
    }

    /// Check totality, compatibility with boundaries, the unit law and compatibility
    /// with operadic composition for every composite within the length bound.
    pub fn validate(&self) -> Result<usize> {
        let bad = |m: String| Err(Error::InvalidCategory(m));
        let g = &self.graph;
        let p = &self.operad;
        if p.n() != g.n {
            return Err(Error::TruncationMismatch(p.n(), g.n));
        }
        let free = free_paths(g, Some(p), self.max_len)?;
        let no = g.objects;
        let mut checked = 0;
        for s in 0..no {
            for t in 0..no {
                let hom = g.hom(s, t);
                for d in 0..=g.n {
                    if self.table[s * no + t][d].len() != free.terms(s, t, d).len() {
                        return bad(format!("table for hom({s},{t}) at dim {d} is incomplete"));
                    }
                    for x in free.terms(s, t, d) {
                        checked += 1;
                        let Some(r) = self.compose(d, x) else {
                            return bad(format!("no composite for {x:?} at dim {d}"));
                        };
                        if r >= hom.count(d) {
                            return bad(format!("composite of {x:?} is not a {d}-cell"));
                        }
                        if d >= 1 {
                            let i = free.find(s, t, d, x).expect("listed");
                            let fh = &free.graph.homs[s * no + t];
                            let sx = free.term(s, t, d - 1, fh.src(d, i));
                            let tx = free.term(s, t, d - 1, fh.tgt(d, i));
                            if self.compose(d - 1, sx) != Some(hom.src(d, r)) || self.compose(d - 1, tx) != Some(hom.tgt(d, r)) {
                                return bad(format!("composition does not commute with boundaries at {x:?}, dim {d}"));
                            }
                        }
                    }
                    if self.max_len >= 1 {
                        for c in 0..hom.count(d) {
                            let x = LabeledPath { objects: vec![s, t], label: p.unit(d), cells: vec![c] };
                            checked += 1;
                            if self.compose(d, &x) != Some(c) {
                                return bad(format!("unit law fails on {d}-cell {c} of hom({s},{t})"));
                            }
                        }
                    }
                }
            }
        }
        checked += self.check_associativity(&free, |d, x| self.compose(d, x))?;
        Ok(checked)
    }

    /// Compare `compose(flatten(l; x_1 … x_m))` with `compose(l; compose(x_1) …)`.
    fn check_associativity(
        &self,
        free: &FreeGraph,
        eval: impl Fn(usize, &LabeledPath) -> Option<usize>,
    ) -> Result<usize> {
        let g = &self.graph;
        let p = &self.operad;
        let mut checked = 0;
        for d in 0..=g.n {
            for m in 0..=self.max_len {
                for s in 0..g.objects {
                    for t in 0..g.objects {
                        for outer in object_strings(g.objects, s, t, m) {
                            for l in 0..p.count(m, d) {
                                let mut stack = Vec::new();
                                self.assoc_rec(free, &eval, d, &outer, l, 0, self.max_len, &mut stack, &mut checked)?;
                            }
                        }
                    }
                }
            }
        }
        Ok(checked)
    }

    #[allow(clippy::too_many_arguments)]
    fn assoc_rec<'f>(
        &self,
        free: &'f FreeGraph,
        eval: &impl Fn(usize, &LabeledPath) -> Option<usize>,
        d: usize,
        outer: &[usize],
        l: usize,
        i: usize,
        budget: usize,
        stack: &mut Vec<&'f LabeledPath>,
        checked: &mut usize,
    ) -> Result<()> {
        let m = outer.len() - 1;
        if i == m {
            *checked += 1;
            let flat_label = self
                .operad
                .gamma(d, (m, l), &stack.iter().map(|x| (x.len(), x.label)).collect::<Vec<_>>())?
                .1;
            let mut objects = vec![outer[0]];
            let mut cells = Vec::new();
            for x in stack.iter() {
                objects.extend(&x.objects[1..]);
                cells.extend(&x.cells);
            }
            let flat = LabeledPath { objects, label: flat_label, cells };
            let inner: Option<Vec<usize>> = stack.iter().map(|x| eval(d, x)).collect();
            let nested = inner.and_then(|cells| eval(d, &LabeledPath { objects: outer.to_vec(), label: l, cells }));
            let direct = eval(d, &flat);
            if nested.is_none() || nested != direct {
                return Err(Error::InvalidCategory(format!(
                    "associativity fails at dim {d}: label {l} over {outer:?} applied to {:?}",
                    stack
                )));
            }
            return Ok(());
        }
        for x in free.terms(outer[i], outer[i + 1], d) {
            if x.len() <= budget {
                stack.push(x);
                self.assoc_rec(free, eval, d, outer, l, i + 1, budget - x.len(), stack, checked)?;
                stack.pop();
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut compose = Vec::new();
        for row in &self.table {
            for (d, tab) in row.iter().enumerate() {
                for (x, &r) in tab {
                    compose.push(CompositionEntry {
                        objects: x.objects.clone(),
                        dim: d,
                        label: x.label,
                        cells: x.cells.clone(),
                        result: r,
                    });
                }
            }
        }
        let graph = serde_json::from_str(&self.graph.to_json()).expect("valid json");
        serde_json::to_string(&VPCategoryJson { graph, operad: self.operad.spec(), max_len: self.max_len, compose })
            .expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: VPCategoryJson = serde_json::from_str(text)?;
        let graph = VGraph::from_json(&j.graph.to_string())?;
        let operad = crate::operads::build_operad(&j.operad)?.into_globular();
        let no = graph.objects;
        let mut table = vec![vec![BTreeMap::new(); graph.n + 1]; no * no];
        for e in j.compose {
            let (Some(&a), Some(&b)) = (e.objects.first(), e.objects.last()) else {
                return Err(Error::InvalidCategory("empty object string".into()));
            };
            if a >= no || b >= no || e.dim > graph.n {
                return Err(Error::InvalidCategory("composition entry out of range".into()));
            }
            table[a * no + b][e.dim].insert(LabeledPath { objects: e.objects, label: e.label, cells: e.cells }, e.result);
        }
        let c = VPCategory { graph, operad, max_len: j.max_len, table };
        c.validate()?;
        Ok(c)
    }
}

/// Outcome of [`vp_roundtrip`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RoundTripReport {
    pub cells_compared: usize,
    pub vp_axioms_hold: bool,
    pub algebra_axioms_hold: bool,
    pub tables_equal: bool,
}

impl RoundTripReport {
    pub fn passed(&self) -> bool {
        self.vp_axioms_hold && self.algebra_axioms_hold && self.tables_equal
    }
}

/// Turn a (V,P)-category into an action of `ΣP` on its graph, read through the
/// pullback description of `fc_(V,P)`, and back again.
pub fn vp_roundtrip(c: &VPCategory) -> Result<RoundTripReport> {
    c.validate()?;
    let free = fc_vp(&c.graph, &c.operad, c.max_len)?;
    let no = c.graph.objects;
    let n = c.graph.n;

    // algebra action indexed by pullback cells
    let mut action: Vec<Vec<Vec<usize>>> = Vec::with_capacity(no * no);
    for s in 0..no {
        for t in 0..no {
            let h = s * no + t;
            let mut per_dim = Vec::with_capacity(n + 1);
            for d in 0..=n {
                let mut row = vec![usize::MAX; free.pullbacks[h].pairs[d].len()];
                for (i, x) in free.direct.terms(s, t, d).iter().enumerate() {
                    row[free.bijection[h][d][i]] = c.compose(d, x).expect("validated");
                }
                per_dim.push(row);
            }
            action.push(per_dim);
        }
    }

    // the action read back as a composition table
    let mut cells_compared = 0;
    let mut back = vec![vec![BTreeMap::new(); n + 1]; no * no];
    for s in 0..no {
        for t in 0..no {
            let h = s * no + t;
            for d in 0..=n {
                for (i, &(pi, si)) in free.pullbacks[h].pairs[d].iter().enumerate() {
                    let path = free.paths.term(s, t, d, pi);
                    let (k, label) = free.sigma.locate(d, si);
                    debug_assert_eq!(k, path.len());
                    back[h][d].insert(
                        LabeledPath { objects: path.objects.clone(), label, cells: path.cells.clone() },
                        action[h][d][i],
                    );
                    cells_compared += 1;
                }
            }
        }
    }
    let rebuilt = VPCategory { graph: c.graph.clone(), operad: c.operad.clone(), max_len: c.max_len, table: back };
    let tables_equal = rebuilt == *c;
    let vp_axioms_hold = rebuilt.validate().is_ok();

    // algebra axioms, evaluated through pullback indices
    let lookup = |d: usize, x: &LabeledPath| -> Option<usize> {
        let (s, t) = (*x.objects.first()?, *x.objects.last()?);
        let h = s * no + t;
        let bare = LabeledPath { objects: x.objects.clone(), label: 0, cells: x.cells.clone() };
        let pi = free.paths.find(s, t, d, &bare)?;
        if x.label >= c.operad.count(x.len(), d) {
            return None;
        }
        let si = free.sigma.cell(x.len(), d, x.label);
        let i = free.pullbacks[h].pairs[d].binary_search(&(pi, si)).ok()?;
        Some(action[h][d][i])
    };
    let mut algebra_axioms_hold = true;
    for s in 0..no {
        for t in 0..no {
            let h = s * no + t;
            let maps = action[h].clone();
            if GMorphism::new(&free.pullbacks[h].set, c.graph.hom(s, t), maps).is_err() {
                algebra_axioms_hold = false;
            }
            for d in 0..=n {
                for cell in 0..c.graph.hom(s, t).count(d) {
                    if c.max_len == 0 {
                        break;
                    }
                    let x = LabeledPath { objects: vec![s, t], label: c.operad.unit(d), cells: vec![cell] };
                    if lookup(d, &x) != Some(cell) {
                        algebra_axioms_hold = false;
                    }
                }
            }
        }
    }
    if algebra_axioms_hold {
        algebra_axioms_hold = c.check_associativity(&free.direct, lookup).is_ok();
    }
    Ok(RoundTripReport { cells_compared, vp_axioms_hold, algebra_axioms_hold, tables_equal })
}

/// An ordinary finite category as a (Set, terminal)-category: `hom(a, b)` has
/// `counts[a * objects + b]` arrows and `comp(a, b, c, f, g)` is `g ∘ f`.
pub fn ordinary_category(
    objects: usize,
    counts: &[usize],
    identity: impl Fn(usize) -> usize,
    comp: impl Fn(usize, usize, usize, usize, usize) -> usize,
    max_len: usize,
) -> Result<VPCategory> {
    let graph = VGraph::from_counts(objects, counts)?;
    VPCategory::from_fn(graph, GOperad::terminal(0, max_len.max(1)), max_len, |_, x| {
        if x.cells.is_empty() {
            return identity(x.objects[0]);
        }
        let mut acc = x.cells[0];
        for i in 1..x.cells.len() {
            acc = comp(x.objects[0], x.objects[i], x.objects[i + 1], acc, x.cells[i]);
        }
        acc
    })
}

/// A seeded (V,P)-category whose homs are chaotic over `Z_r`, composing by
/// addition and then relabeled by a random permutation of every hom.
///
/// `p` must be `chaotic(cyclic(r), 1)` or `cyclic(r)` viewed at truncation 0.
pub fn random_chaotic_category(objects: usize, r: usize, p: &GOperad, max_len: usize, seed: u64) -> Result<VPCategory> {
    let n = p.n();
    if n > 1 {
        return Err(Error::Unsupported("random chaotic categories need n <= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chaotic = |r: usize| -> Result<GlobularSet> {
        if n == 0 {
            return GlobularSet::new(0, vec![r], vec![], vec![]);
        }
        GlobularSet::new(1, vec![r, r * r], vec![(0..r * r).map(|c| c / r).collect()], vec![(0..r * r).map(|c| c % r).collect()])
    };
    let homs = (0..objects * objects).map(|_| chaotic(r)).collect::<Result<Vec<_>>>()?;
    let perms: Vec<Vec<usize>> = (0..objects * objects)
        .map(|_| {
            let mut v: Vec<usize> = (0..r).collect();
            v.shuffle(&mut rng);
            v
        })
        .collect();
    let inv: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            let mut q = vec![0; r];
            for (i, &x) in p.iter().enumerate() {
                q[x] = i;
            }
            q
        })
        .collect();
    let graph = VGraph::new(objects, n, homs)?;
    let no = objects;
    VPCategory::from_fn(graph, p.clone(), max_len, |d, x| {
        let h = |i: usize| x.objects[i] * no + x.objects[i + 1];
        let out = x.objects[0] * no + x.objects[x.objects.len() - 1];
        // the label splits as (source, target) in Z_r at dimension 1
        let (ls, lt) = if d == 0 { (x.label, x.label) } else { (x.label / r, x.label % r) };
        let mut s = ls;
        let mut t = lt;
        for (i, &c) in x.cells.iter().enumerate() {
            let (cs, ct) = if d == 0 { (c, c) } else { (c / r, c % r) };
            s += inv[h(i)][cs];
            t += inv[h(i)][ct];
        }
        let (s, t) = (perms[out][s % r], perms[out][t % r]);
        if d == 0 {
            s
        } else {
            s * r + t
        }
    })
}

/// The monad applied hom-wise in the distributive law: the identity, or the
/// free category on a graph with paths of bounded length.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Vertical {
    Identity,
    FreeCategory { max_len: usize },
}

/// Elements of iterated free constructions on a V-graph with `n <= 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Term {
    /// A cell of the base graph: `hom = a * objects + b`.
    Cell { hom: usize, dim: usize, id: usize },
    /// A formal `P`-labeled composite of `parts` along `objects`.
    Formal { objects: Vec<usize>, dim: usize, label: usize, parts: Vec<Term> },
    /// A vertex of a free category.
    TVertex(Box<Term>),
    /// An edge path of a free category: a start vertex and composable edges.
    Path { start: Box<Term>, steps: Vec<Term> },
}

impl Term {
    pub fn dim(&self) -> usize {
        match self {
            Term::Cell { dim, .. } | Term::Formal { dim, .. } => *dim,
            Term::TVertex(_) => 0,
            Term::Path { .. } => 1,
        }
    }

    fn s_len(&self) -> usize {
        match self {
            Term::Formal { parts, .. } if matches!(parts.first(), Some(Term::Formal { .. })) => {
                parts.iter().map(|p| p.s_len()).sum()
            }
            Term::Formal { objects, .. } => objects.len() - 1,
            _ => 1,
        }
    }

    fn t_len(&self) -> usize {
        match self {
            Term::Path { steps, .. } if matches!(steps.first(), Some(Term::Path { .. })) => {
                steps.iter().map(|p| p.t_len()).sum()
            }
            Term::Path { steps, .. } => steps.len(),
            _ => 0,
        }
    }
}

/// The distributive law `λ: T fc_(V,P) => fc_(V,P) T` on a fixed V-graph, with
/// the monad structures it is checked against.
pub struct DistributiveLaw<'a> {
    graph: &'a VGraph,
    vertical: Vertical,
    operad: &'a GOperad,
    max_len: usize,
}

/// Outcome of [`check_distributive_law`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DistributiveReport {
    /// Elements checked for: unit of `T`, unit of `S`, multiplication of `T`,
    /// multiplication of `S`, compatibility with boundaries.
    pub checked: [usize; 5],
    pub failure: Option<String>,
}

impl DistributiveReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl<'a> DistributiveLaw<'a> {
    pub fn new(graph: &'a VGraph, vertical: Vertical, operad: &'a GOperad, max_len: usize) -> Result<Self> {
        if operad.n() != graph.n {
            return Err(Error::TruncationMismatch(operad.n(), graph.n));
        }
        if let Vertical::FreeCategory { .. } = vertical {
            if graph.n != 1 {
                return Err(Error::Unsupported("the free category monad acts on graphs (n = 1)".into()));
            }
        }
        if max_len > operad.max_arity() {
            return Err(Error::BoundExceeded(format!("length {max_len} over the operad's cap {}", operad.max_arity())));
        }
        Ok(DistributiveLaw { graph, vertical, operad, max_len })
    }

    fn t_len_bound(&self) -> usize {
        match self.vertical {
            Vertical::Identity => 0,
            Vertical::FreeCategory { max_len } => max_len,
        }
    }

    pub fn src(&self, t: &Term) -> Term {
        self.boundary(t, 0)
    }

    pub fn tgt(&self, t: &Term) -> Term {
        self.boundary(t, 1)
    }

    fn boundary(&self, t: &Term, which: usize) -> Term {
        match t {
            Term::Cell { hom, dim, id } => {
                let g = &self.graph.homs[*hom];
                let id = if which == 0 { g.src(*dim, *id) } else { g.tgt(*dim, *id) };
                Term::Cell { hom: *hom, dim: dim - 1, id }
            }
            Term::Formal { objects, dim, label, parts } => {
                let k = objects.len() - 1;
                let label = if which == 0 { self.operad.src(k, *dim, *label) } else { self.operad.tgt(k, *dim, *label) };
                Term::Formal {
                    objects: objects.clone(),
                    dim: dim - 1,
                    label,
                    parts: parts.iter().map(|p| self.boundary(p, which)).collect(),
                }
            }
            Term::Path { start, steps } => {
                if which == 0 || steps.is_empty() {
                    Term::TVertex(start.clone())
                } else {
                    Term::TVertex(Box::new(self.tgt(steps.last().expect("nonempty"))))
                }
            }
            Term::TVertex(_) => panic!("vertices have no boundary"),
        }
    }

    pub fn eta_t(&self, x: &Term) -> Term {
        match self.vertical {
            Vertical::Identity => x.clone(),
            Vertical::FreeCategory { .. } => match x.dim() {
                0 => Term::TVertex(Box::new(x.clone())),
                _ => Term::Path { start: Box::new(self.src(x)), steps: vec![x.clone()] },
            },
        }
    }

    pub fn mu_t(&self, x: &Term) -> Term {
        if self.vertical == Vertical::Identity {
            return x.clone();
        }
        match x {
            Term::TVertex(v) => match &**v {
                Term::TVertex(inner) => Term::TVertex(inner.clone()),
                other => panic!("μ_T on a non-nested vertex {other:?}"),
            },
            Term::Path { start, steps } => {
                let Term::TVertex(v) = &**start else { panic!("μ_T on a non-nested path") };
                let mut flat = Vec::new();
                for s in steps {
                    let Term::Path { steps: inner, .. } = s else { panic!("μ_T on a non-nested path") };
                    flat.extend(inner.iter().cloned());
                }
                Term::Path { start: v.clone(), steps: flat }
            }
            other => panic!("μ_T on {other:?}"),
        }
    }

    pub fn map_t(&self, x: &Term, f: &dyn Fn(&Term) -> Term) -> Term {
        if self.vertical == Vertical::Identity {
            return f(x);
        }
        match x {
            Term::TVertex(v) => Term::TVertex(Box::new(f(v))),
            Term::Path { start, steps } => Term::Path { start: Box::new(f(start)), steps: steps.iter().map(f).collect() },
            other => panic!("T acting on {other:?}"),
        }
    }

    /// Unit of `fc_(V,P)` on an element of `hom(a, b)`.
    pub fn eta_s(&self, a: usize, b: usize, x: &Term) -> Term {
        let d = x.dim();
        Term::Formal { objects: vec![a, b], dim: d, label: self.operad.unit(d), parts: vec![x.clone()] }
    }

    pub fn mu_s(&self, x: &Term) -> Result<Term> {
        let Term::Formal { objects, dim, label, parts } = x else { panic!("μ_S on {x:?}") };
        let mut objs = vec![objects[0]];
        let mut args = Vec::with_capacity(parts.len());
        let mut flat = Vec::new();
        for p in parts {
            let Term::Formal { objects: o, label: l, parts: ps, .. } = p else { panic!("μ_S on a non-nested formal") };
            objs.extend(&o[1..]);
            args.push((o.len() - 1, *l));
            flat.extend(ps.iter().cloned());
        }
        let (_, l) = self.operad.gamma(*dim, (objects.len() - 1, *label), &args)?;
        Ok(Term::Formal { objects: objs, dim: *dim, label: l, parts: flat })
    }

    pub fn map_s(&self, x: &Term, f: &dyn Fn(&Term) -> Term) -> Term {
        let Term::Formal { objects, dim, label, parts } = x else { panic!("S acting on {x:?}") };
        Term::Formal { objects: objects.clone(), dim: *dim, label: *label, parts: parts.iter().map(f).collect() }
    }

    /// Composite in `P(k)` of a vertical path of labels; the identity when empty.
    fn act(&self, k: usize, start: usize, steps: &[usize]) -> Result<usize> {
        match steps.split_first() {
            None => self.operad.identity(k, 0, start),
            Some((&first, rest)) => rest.iter().try_fold(first, |acc, &g| self.operad.compose1(k, acc, g)),
        }
    }

    /// `λ`: a vertical path of formal composites becomes a formal composite of
    /// vertical paths, its labels composed in the category `P(k)`.
    pub fn lambda(&self, x: &Term) -> Result<Term> {
        if self.vertical == Vertical::Identity {
            return Ok(x.clone());
        }
        match x {
            Term::TVertex(v) => {
                let Term::Formal { objects, dim: 0, label, parts } = &**v else { panic!("λ on {x:?}") };
                Ok(Term::Formal {
                    objects: objects.clone(),
                    dim: 0,
                    label: *label,
                    parts: parts.iter().map(|p| Term::TVertex(Box::new(p.clone()))).collect(),
                })
            }
            Term::Path { start, steps } => {
                let Term::Formal { objects, label: l0, parts: p0, .. } = &**start else { panic!("λ on {x:?}") };
                let k = objects.len() - 1;
                let mut labels = Vec::with_capacity(steps.len());
                for s in steps {
                    let Term::Formal { objects: o, label, .. } = s else { panic!("λ on {x:?}") };
                    if o != objects {
                        return Err(Error::NotComposable(format!("vertical path changes object string at {s:?}")));
                    }
                    labels.push(*label);
                }
                let label = self.act(k, *l0, &labels)?;
                let parts = (0..k)
                    .map(|i| Term::Path {
                        start: Box::new(p0[i].clone()),
                        steps: steps
                            .iter()
                            .map(|s| match s {
                                Term::Formal { parts, .. } => parts[i].clone(),
                                _ => unreachable!(),
                            })
                            .collect(),
                    })
                    .collect();
                Ok(Term::Formal { objects: objects.clone(), dim: 1, label, parts })
            }
            other => panic!("λ on {other:?}"),
        }
    }

    fn base(&self, a: usize, b: usize, d: usize) -> Vec<Term> {
        let hom = a * self.graph.objects + b;
        (0..self.graph.homs[hom].count(d)).map(|id| Term::Cell { hom, dim: d, id }).collect()
    }

    /// Formal composites over `parts`, with total `weight` of the parts at most `budget`.
    fn enum_s(
        &self,
        a: usize,
        b: usize,
        d: usize,
        parts: &dyn Fn(usize, usize) -> Vec<Term>,
        weight: fn(&Term) -> usize,
        budget: usize,
    ) -> Vec<Term> {
        let mut out = Vec::new();
        for k in 0..=self.max_len {
            for objects in object_strings(self.graph.objects, a, b, k) {
                let lists: Vec<Vec<Term>> = objects.windows(2).map(|w| parts(w[0], w[1])).collect();
                if lists.iter().any(|l| l.is_empty()) {
                    continue;
                }
                for label in 0..self.operad.count(k, d) {
                    let mut chosen = Vec::new();
                    product_within(&lists, weight, budget, &mut chosen, &mut |ps| {
                        out.push(Term::Formal { objects: objects.clone(), dim: d, label, parts: ps.to_vec() })
                    });
                }
            }
        }
        out
    }

    /// Vertices or edge paths of the free category on a graph given by its
    /// vertex and edge lists, with total step `weight` at most `budget`.
    fn enum_t(&self, zero: &[Term], one: &[Term], d: usize, weight: fn(&Term) -> usize, budget: usize) -> Vec<Term> {
        if self.vertical == Vertical::Identity {
            return if d == 0 { zero.to_vec() } else { one.to_vec() };
        }
        if d == 0 {
            return zero.iter().map(|v| Term::TVertex(Box::new(v.clone()))).collect();
        }
        let mut out = Vec::new();
        let by_src: Vec<(Term, &Term)> = one.iter().map(|e| (self.src(e), e)).collect();
        for v in zero {
            let mut steps = Vec::new();
            self.paths_from(v, &by_src, weight, budget, &mut steps, &mut out);
        }
        out
    }

    fn paths_from(
        &self,
        start: &Term,
        edges: &[(Term, &Term)],
        weight: fn(&Term) -> usize,
        budget: usize,
        steps: &mut Vec<Term>,
        out: &mut Vec<Term>,
    ) {
        out.push(Term::Path { start: Box::new(start.clone()), steps: steps.clone() });
        if steps.len() == self.t_len_bound() {
            return;
        }
        let here = match steps.last() {
            None => Term::TVertex(Box::new(start.clone())),
            Some(e) => Term::TVertex(Box::new(self.tgt(e))),
        };
        for (s, e) in edges {
            let w = weight(e);
            if Term::TVertex(Box::new(s.clone())) == here && w <= budget {
                steps.push((*e).clone());
                self.paths_from(start, edges, weight, budget - w, steps, out);
                steps.pop();
            }
        }
    }

    fn s_of_base(&self, a: usize, b: usize, d: usize) -> Vec<Term> {
        self.enum_s(a, b, d, &|x, y| self.base(x, y, d), |_| 1, self.max_len)
    }

    fn t_of_base(&self, a: usize, b: usize, d: usize) -> Vec<Term> {
        self.enum_t(&self.base(a, b, 0), &self.base(a, b, 1), d, |_| 0, 0)
    }

    fn ts(&self, a: usize, b: usize, d: usize) -> Vec<Term> {
        self.enum_t(&self.s_of_base(a, b, 0), &self.s_of_base(a, b, 1), d, |_| 0, 0)
    }

    fn tts(&self, a: usize, b: usize, d: usize) -> Vec<Term> {
        let bound = self.t_len_bound();
        let zero = self.ts(a, b, 0);
        let one = self.ts(a, b, 1);
        self.enum_t(&zero, &one, d, Term::t_len, bound)
    }

    fn ss(&self, a: usize, b: usize, d: usize) -> Vec<Term> {
        self.enum_s(a, b, d, &|x, y| self.s_of_base(x, y, d), Term::s_len, self.max_len)
    }

    fn tss(&self, a: usize, b: usize, d: usize) -> Vec<Term> {
        self.enum_t(&self.ss(a, b, 0), &self.ss(a, b, 1), d, |_| 0, 0)
    }

    /// The component of `λ` on `hom(a, b)`: pairs (input, image) per dimension.
    pub fn component(&self, a: usize, b: usize) -> Result<Vec<Vec<(Term, Term)>>> {
        (0..=self.graph.n)
            .map(|d| self.ts(a, b, d).into_iter().map(|x| Ok((x.clone(), self.lambda(&x)?))).collect())
            .collect()
    }

    pub fn check(&self) -> DistributiveReport {
        let mut checked = [0usize; 5];
        let fail = |checked: [usize; 5], msg: String| DistributiveReport { checked, failure: Some(msg) };
        let no = self.graph.objects;
        for a in 0..no {
            for b in 0..no {
                for d in 0..=self.graph.n {
                    for x in self.s_of_base(a, b, d) {
                        checked[0] += 1;
                        let lhs = self.lambda(&self.eta_t(&x));
                        let rhs = self.map_s(&x, &|p| self.eta_t(p));
                        if lhs.as_ref() != Ok(&rhs) {
                            return fail(checked, format!("λ ∘ η_T ≠ S η_T on {x:?}"));
                        }
                    }
                    for y in self.t_of_base(a, b, d) {
                        checked[1] += 1;
                        let lhs = self.lambda(&self.map_t(&y, &|p| self.eta_s(a, b, p)));
                        let rhs = self.eta_s(a, b, &y);
                        if lhs.as_ref() != Ok(&rhs) {
                            return fail(checked, format!("λ ∘ T η_S ≠ η_S T on {y:?}"));
                        }
                    }
                    let tts = self.tts(a, b, d);
                    checked[2] += tts.len();
                    let bad = tts.par_iter().find_first(|z| {
                        let lhs = self.lambda(&self.mu_t(z));
                        let rhs = (|| {
                            let inner = self.map_t(z, &|p| self.lambda(p).expect("λ on TS elements"));
                            let swapped = self.lambda(&inner)?;
                            Ok(self.map_s(&swapped, &|p| self.mu_t(p)))
                        })();
                        lhs != rhs
                    });
                    if let Some(z) = bad {
                        return fail(checked, format!("λ ∘ μ_T ≠ S μ_T ∘ λ T ∘ T λ on {z:?}"));
                    }
                    let tss = self.tss(a, b, d);
                    checked[3] += tss.len();
                    let bad = tss.par_iter().find_first(|w| {
                        let lhs = self.lambda(&self.map_t(w, &|p| self.mu_s(p).expect("within the cap")));
                        let rhs = (|| {
                            let once = self.lambda(w)?;
                            let twice = self.map_s(&once, &|p| self.lambda(p).expect("λ on TS elements"));
                            self.mu_s(&twice)
                        })();
                        lhs.is_err() || lhs != rhs
                    });
                    if let Some(w) = bad {
                        return fail(checked, format!("λ ∘ T μ_S ≠ μ_S T ∘ S λ ∘ λ S on {w:?}"));
                    }
                    if d == 1 {
                        for x in self.ts(a, b, 1) {
                            checked[4] += 1;
                            let Ok(lx) = self.lambda(&x) else {
                                return fail(checked, format!("λ undefined on {x:?}"));
                            };
                            for which in 0..2 {
                                let bx = self.boundary(&x, which);
                                if self.lambda(&bx).as_ref() != Ok(&self.boundary(&lx, which)) {
                                    return fail(checked, format!("λ does not commute with boundaries on {x:?}"));
                                }
                            }
                        }
                    }
                }
            }
        }
        DistributiveReport { checked, failure: None }
    }
}

fn product_within(
    lists: &[Vec<Term>],
    weight: fn(&Term) -> usize,
    budget: usize,
    chosen: &mut Vec<Term>,
    emit: &mut dyn FnMut(&[Term]),
) {
    let i = chosen.len();
    if i == lists.len() {
        emit(chosen);
        return;
    }
    for x in &lists[i] {
        let w = weight(x);
        if w <= budget {
            chosen.push(x.clone());
            product_within(lists, weight, budget - w, chosen, emit);
            chosen.pop();
        }
    }
}

/// The component of `λ` on every hom of `a`.
pub fn lambda_component(a: &VGraph, t: Vertical, p: &GOperad, max_len: usize) -> Result<Vec<Vec<Vec<(Term, Term)>>>> {
    let law = DistributiveLaw::new(a, t, p, max_len)?;
    let no = a.objects;
    (0..no * no).map(|h| law.component(h / no, h % no)).collect()
}

/// Check the four distributive-law axioms, and compatibility with boundaries,
/// on every element with each path layer and each flattened path of length at
/// most `max_len`.
pub fn check_distributive_law(a: &VGraph, t: Vertical, p: &GOperad, max_len: usize) -> Result<DistributiveReport> {
    Ok(DistributiveLaw::new(a, t, p, max_len)?.check())
}

/// Outcome of [`check_free_monad_laws`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MonadReport {
    pub checked: usize,
    pub failure: Option<String>,
}

/// Unit and associativity of `fc_(V,P)` on every element of `S(A)` and `SSS(A)`
/// whose flattened length is at most `max_len`.
pub fn check_free_monad_laws(a: &VGraph, p: &GOperad, max_len: usize) -> Result<MonadReport> {
    let law = DistributiveLaw::new(a, Vertical::Identity, p, max_len)?;
    let no = a.objects;
    let mut checked = 0;
    for s in 0..no {
        for t in 0..no {
            for d in 0..=a.n {
                for x in law.s_of_base(s, t, d) {
                    checked += 1;
                    let Term::Formal { objects, .. } = &x else { unreachable!() };
                    let left = law.mu_s(&law.eta_s(s, t, &x))?;
                    let right = law.mu_s(&law.map_s(&x, &|p| {
                        let Term::Cell { hom, .. } = p else { unreachable!() };
                        law.eta_s(hom / no, hom % no, p)
                    }))?;
                    if left != x || right != x {
                        return Ok(MonadReport { checked, failure: Some(format!("unit law fails on {x:?} over {objects:?}")) });
                    }
                }
                let sss = law.enum_s(s, t, d, &|x, y| law.ss(x, y, d), Term::s_len, max_len);
                for w in sss {
                    checked += 1;
                    let left = law.mu_s(&law.mu_s(&w)?)?;
                    let right = law.mu_s(&law.map_s(&w, &|p| law.mu_s(p).expect("within the cap")))?;
                    if left != right {
                        return Ok(MonadReport { checked, failure: Some(format!("associativity fails on {w:?}")) });
                    }
                }
            }
        }
    }
    Ok(MonadReport { checked, failure: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operads::SetOperad;

    fn loop_graph() -> VGraph {
        VGraph::from_counts(1, &[1]).unwrap()
    }

    #[test]
    fn path_counts() {
        let chain = VGraph::from_counts(3, &[0, 1, 0, 0, 0, 1, 0, 0, 0]).unwrap();
        assert_eq!(fc_v(&chain, 3).graph.hom(0, 2).count(0), 1);
        assert_eq!(fc_v(&loop_graph(), 3).graph.hom(0, 0).count(0), 4);
        let empty = VGraph::from_counts(2, &[0, 0, 0, 0]).unwrap();
        let f = fc_v(&empty, 3);
        assert_eq!(f.graph.hom(0, 0).count(0), 1);
        assert_eq!(f.graph.hom(0, 1).count(0), 0);
    }

    #[test]
    fn labeled_path_counts() {
        let magma = GOperad::discrete(SetOperad::magma(6), 0);
        let f = fc_vp(&loop_graph(), &magma, 3).unwrap();
        assert_eq!(f.direct.graph.hom(0, 0).count(0), 4);
        let c2 = GOperad::discrete(SetOperad::cyclic(2, 6).unwrap(), 0);
        let f = fc_vp(&loop_graph(), &c2, 2).unwrap();
        assert_eq!(f.direct.graph.hom(0, 0).count(0), 6);
        let t = GOperad::terminal(0, 6);
        let chain = VGraph::from_counts(2, &[1, 2, 0, 1]).unwrap();
        let plain = fc_v(&chain, 3);
        let via_p = fc_vp(&chain, &t, 3).unwrap();
        assert_eq!(plain.graph, via_p.direct.graph);
    }

    #[test]
    fn suspension_summands() {
        let s = suspend_operad(&GOperad::discrete(SetOperad::magma(6), 0), 4).unwrap();
        assert_eq!(s.summand_sizes(0), vec![0, 1, 1, 2, 5]);
        let s = suspend_operad(&GOperad::discrete(SetOperad::cyclic(2, 6).unwrap(), 0), 2).unwrap();
        assert_eq!(s.summand_sizes(0), vec![2, 2, 2]);
        let s = suspend_operad(&GOperad::terminal(1, 6), 3).unwrap();
        assert_eq!(s.hom.counts(), &[4, 4]);
        assert_eq!(s.degree.map(0), &[0, 1, 2, 3]);
    }

    #[test]
    fn ordinary_category_round_trip() {
        // the ordinal 0 < 1 < 2
        let counts = [1, 1, 1, 0, 1, 1, 0, 0, 1];
        let c = ordinary_category(3, &counts, |_| 0, |_, _, _, _, _| 0, 3).unwrap();
        assert!(vp_roundtrip(&c).unwrap().passed());
    }

    #[test]
    fn broken_category_is_rejected() {
        // Z_3 with a composition that is not associative
        let c = ordinary_category(1, &[3], |_| 0, |_, _, _, f, g| (f * 2 + g) % 3, 3).unwrap();
        assert!(matches!(c.validate(), Err(Error::InvalidCategory(_))));
    }

    #[test]
    fn lambda_adds_labels() {
        let hom = GlobularSet::new(1, vec![1, 2], vec![vec![0, 0]], vec![vec![0, 0]]).unwrap();
        let g = VGraph::one_object(hom);
        let p = GOperad::loops(2, 1, 4).unwrap();
        let law = DistributiveLaw::new(&g, Vertical::FreeCategory { max_len: 3 }, &p, 3).unwrap();
        let cell = |dim, id| Term::Cell { hom: 0, dim, id };
        let formal = |dim, label, parts| Term::Formal { objects: vec![0, 0, 0], dim, label, parts };
        let x = Term::Path {
            start: Box::new(formal(0, 0, vec![cell(0, 0), cell(0, 0)])),
            steps: vec![formal(1, 1, vec![cell(1, 0), cell(1, 1)]), formal(1, 1, vec![cell(1, 1), cell(1, 1)])],
        };
        let vpath = |a, b| Term::Path { start: Box::new(cell(0, 0)), steps: vec![cell(1, a), cell(1, b)] };
        assert_eq!(law.lambda(&x).unwrap(), formal(1, 0, vec![vpath(0, 1), vpath(1, 1)]));
    }

    #[test]
    fn identity_vertical_is_identity() {
        let g = VGraph::from_counts(2, &[1, 1, 0, 1]).unwrap();
        let p = GOperad::discrete(SetOperad::cyclic(2, 4).unwrap(), 0);
        for row in lambda_component(&g, Vertical::Identity, &p, 2).unwrap() {
            for (x, y) in row.into_iter().flatten() {
                assert_eq!(x, y);
            }
        }
    }

    #[test]
    fn free_monad_laws_small() {
        let g = VGraph::from_counts(2, &[1, 1, 0, 1]).unwrap();
        let p = GOperad::discrete(SetOperad::cyclic(2, 6).unwrap(), 0);
        let r = check_free_monad_laws(&g, &p, 2).unwrap();
        assert!(r.failure.is_none(), "{r:?}");
        assert!(r.checked > 0);
    }
}
