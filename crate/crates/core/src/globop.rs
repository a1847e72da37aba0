//! The globular operad `Q⁽ⁿ⁾` compiled from an operad series.
//!
//! A cell of `Q⁽ⁿ⁾(1)` over an `m`-dimensional pasting diagram carries, for each
//! node `(b, k)` of the tree, an `(m-b-1)`-cell of `P_{n-b-1}(k)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gset::{associated_gset, boundary_inclusions, diagrams, GMorphism, GlobularSet};
use crate::operads::{odometer, operad_is_contractible, GOperad, OperadSeries};
use crate::pd::{enumerate_pds, substitute, Node, PastingDiagram, SubstLabeling};

/// A cell of `Q⁽ⁿ⁾(1)`: a shape and one operad cell per node, in canonical node order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct QCell {
    shape: PastingDiagram,
    labels: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Source,
    Target,
}

/// The operad and cell dimension a node's label lives in.
fn label_fiber<'a>(series: &'a OperadSeries, m: usize, node: &Node) -> Result<(&'a GOperad, usize)> {
    let n = series.n();
    let p = series.get(n - node.height - 1);
    if node.arity > p.max_arity() {
        return Err(Error::ArityCap { arity: node.arity, cap: p.max_arity() });
    }
    Ok((p, m - node.height - 1))
}

fn check_dim(series: &OperadSeries, pd: &PastingDiagram) -> Result<()> {
    if pd.dim() > series.n() {
        return Err(Error::DimensionOutOfRange { dim: pd.dim(), n: series.n() });
    }
    Ok(())
}

fn fiber_sizes(series: &OperadSeries, pd: &PastingDiagram) -> Result<Vec<usize>> {
    check_dim(series, pd)?;
    let m = pd.dim();
    pd.nodes()
        .iter()
        .map(|node| label_fiber(series, m, node).map(|(p, d)| p.count(node.arity, d)))
        .collect()
}

impl QCell {
    pub fn new(series: &OperadSeries, shape: PastingDiagram, labels: Vec<usize>) -> Result<Self> {
        let sizes = fiber_sizes(series, &shape)?;
        if sizes.len() != labels.len() {
            return Err(Error::ArityMismatch { expected: sizes.len(), got: labels.len() });
        }
        let nodes = shape.nodes();
        for ((node, &l), &s) in nodes.iter().zip(&labels).zip(&sizes) {
            if l >= s {
                return Err(Error::NoSuchCell { arity: node.arity, dim: shape.dim() - node.height - 1, cell: l });
            }
        }
        Ok(QCell { shape, labels })
    }

    pub fn shape(&self) -> &PastingDiagram {
        &self.shape
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.shape.dim()
    }

    /// The `{"shape", "labels"}` form, labels annotated with their nodes.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_repr()).expect("plain data")
    }

    pub fn from_json(series: &OperadSeries, text: &str) -> Result<Self> {
        let r: QCellRepr = serde_json::from_str(text)?;
        let nodes = r.shape.nodes();
        if nodes.len() != r.labels.len() {
            return Err(Error::ArityMismatch { expected: nodes.len(), got: r.labels.len() });
        }
        for (node, l) in nodes.iter().zip(&r.labels) {
            if node.height != l.height || node.arity != l.arity {
                return Err(Error::Json(format!(
                    "label at node ({}, {}) does not match shape node ({}, {})",
                    l.height, l.arity, node.height, node.arity
                )));
            }
        }
        QCell::new(series, r.shape, r.labels.iter().map(|l| l.cell).collect())
    }

    fn to_repr(&self) -> QCellRepr {
        let labels = self
            .shape
            .nodes()
            .into_iter()
            .zip(&self.labels)
            .map(|(node, &cell)| QLabel { height: node.height, arity: node.arity, cell })
            .collect();
        QCellRepr { shape: self.shape.clone(), labels }
    }
}

impl fmt::Display for QCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.shape, self.labels)
    }
}

#[derive(Serialize, Deserialize)]
struct QLabel {
    height: usize,
    arity: usize,
    cell: usize,
}

#[derive(Serialize, Deserialize)]
struct QCellRepr {
    shape: PastingDiagram,
    labels: Vec<QLabel>,
}

/// Number of cells of `Q⁽ⁿ⁾(1)` over `pd`, the product of the label fibers.
pub fn q_count(series: &OperadSeries, pd: &PastingDiagram) -> Result<u128> {
    fiber_sizes(series, pd)?.iter().try_fold(1u128, |acc, &s| {
        acc.checked_mul(s as u128).ok_or_else(|| Error::BoundExceeded(format!("cell count over {pd}")))
    })
}

/// Every cell of `Q⁽ⁿ⁾(1)` over `pd`, labels in lexicographic order.
pub fn q_cells(series: &OperadSeries, pd: &PastingDiagram) -> Result<Vec<QCell>> {
    let sizes = fiber_sizes(series, pd)?;
    let mut out = Vec::new();
    if sizes.contains(&0) {
        return Ok(out);
    }
    let mut digits = vec![0; sizes.len()];
    loop {
        out.push(QCell { shape: pd.clone(), labels: digits.clone() });
        if !odometer(&mut digits, &sizes) {
            return Ok(out);
        }
    }
}

/// The unit cell over the `m`-globe.
pub fn q_unit(series: &OperadSeries, m: usize) -> Result<QCell> {
    let shape = PastingDiagram::globe(m);
    check_dim(series, &shape)?;
    let labels = shape
        .nodes()
        .iter()
        .map(|node| label_fiber(series, m, node).map(|(p, d)| p.unit(d)))
        .collect::<Result<Vec<_>>>()?;
    Ok(QCell { shape, labels })
}

/// Source or target: drop the top level of the tree and take the boundary of every
/// remaining label.
pub fn q_boundary(series: &OperadSeries, q: &QCell, which: Side) -> Result<QCell> {
    let m = q.dim();
    let shape = q.shape.boundary()?;
    let nodes = q.shape.nodes();
    let mut labels = Vec::new();
    for (node, &l) in nodes.iter().zip(&q.labels) {
        if node.height + 1 >= m {
            break;
        }
        let (p, d) = label_fiber(series, m, node)?;
        labels.push(match which {
            Side::Source => p.src(node.arity, d, l),
            Side::Target => p.tgt(node.arity, d, l),
        });
    }
    debug_assert_eq!(labels.len(), shape.nodes().len());
    Ok(QCell { shape, labels })
}

/// The underlying pasting diagram.
pub fn q_project(q: &QCell) -> PastingDiagram {
    q.shape.clone()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ExactReport {
    pub contractible: bool,
    pub witness: Option<String>,
}

/// Contractibility decided operad by operad.
pub fn q_is_contractible_exact(series: &OperadSeries) -> ExactReport {
    for (i, p) in series.operads().iter().enumerate() {
        let r = operad_is_contractible(p, p.max_arity());
        if !r.contractible {
            let w = r.witness.unwrap_or_default();
            let w = w.strip_prefix('P').map(|rest| format!("P_{i}{rest}")).unwrap_or(w);
            return ExactReport { contractible: false, witness: Some(w) };
        }
    }
    ExactReport { contractible: true, witness: None }
}

/// Why a lifting problem has no solution.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum LiftFailure {
    /// No filler of the given shape between two parallel cells.
    MissingLift {
        shape: PastingDiagram,
        filler_shape: PastingDiagram,
        source: Vec<usize>,
        target: Vec<usize>,
        node: Node,
    },
    /// Two distinct parallel top-dimensional cells of the same shape.
    DistinctTopCells { shape: PastingDiagram, a: Vec<usize>, b: Vec<usize> },
}

impl fmt::Display for LiftFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftFailure::MissingLift { shape, filler_shape, source, target, node } => write!(
                f,
                "no filler of shape {filler_shape} from {shape} {source:?} to {shape} {target:?}: \
                 empty choice at node (height {}, arity {})",
                node.height, node.arity
            ),
            LiftFailure::DistinctTopCells { shape, a, b } => {
                write!(f, "distinct parallel top cells over {shape}: {a:?} and {b:?}")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LiftingReport {
    pub contractible: bool,
    pub pairs_checked: usize,
    /// At most one failure per lifting shape, in enumeration order.
    pub failures: Vec<LiftFailure>,
}

/// Contractibility by literal search for fillers over every diagram within the bound.
pub fn q_is_contractible_lifting(series: &OperadSeries, max_vertices: usize) -> Result<LiftingReport> {
    let n = series.n();
    let mut pairs_checked = 0;
    let mut failures = Vec::new();
    for m in 0..=n {
        let pds = enumerate_pds(m, max_vertices);
        let mut fillers: BTreeMap<PastingDiagram, Vec<PastingDiagram>> = BTreeMap::new();
        if m < n {
            for p in enumerate_pds(m + 1, max_vertices) {
                fillers.entry(p.boundary()?).or_default().push(p);
            }
        }
        let results = pds
            .par_iter()
            .map(|pd| check_shape(series, pd, m, fillers.get(pd).map_or(&[][..], |v| v)))
            .collect::<Result<Vec<_>>>()?;
        for (count, fs) in results {
            pairs_checked += count;
            failures.extend(fs);
        }
    }
    Ok(LiftingReport { contractible: failures.is_empty(), pairs_checked, failures })
}

fn parallel_groups(series: &OperadSeries, cells: Vec<QCell>) -> Result<Vec<Vec<QCell>>> {
    if cells.first().is_none_or(|c| c.dim() == 0) {
        return Ok(vec![cells]);
    }
    let mut groups: BTreeMap<(QCell, QCell), Vec<QCell>> = BTreeMap::new();
    for c in cells {
        let key = (q_boundary(series, &c, Side::Source)?, q_boundary(series, &c, Side::Target)?);
        groups.entry(key).or_default().push(c);
    }
    Ok(groups.into_values().collect())
}

fn check_shape(
    series: &OperadSeries,
    pd: &PastingDiagram,
    m: usize,
    fillers: &[PastingDiagram],
) -> Result<(usize, Vec<LiftFailure>)> {
    let n = series.n();
    let groups = parallel_groups(series, q_cells(series, pd)?)?;
    let mut checked = 0;
    let mut failures = Vec::new();
    if m == n {
        for g in &groups {
            checked += g.len() * g.len();
            if g.len() > 1 && failures.is_empty() {
                failures.push(LiftFailure::DistinctTopCells {
                    shape: pd.clone(),
                    a: g[0].labels.clone(),
                    b: g[1].labels.clone(),
                });
            }
        }
        return Ok((checked, failures));
    }
    for p in fillers {
        let nodes = p.nodes();
        let mut failed = false;
        for g in &groups {
            for a in g {
                for b in g {
                    checked += 1;
                    if failed {
                        continue;
                    }
                    match find_filler(series, p, &nodes, a, b)? {
                        Ok(x) => {
                            debug_assert_eq!(q_boundary(series, &x, Side::Source)?, *a);
                            debug_assert_eq!(q_boundary(series, &x, Side::Target)?, *b);
                        }
                        Err(node) => {
                            failed = true;
                            failures.push(LiftFailure::MissingLift {
                                shape: pd.clone(),
                                filler_shape: p.clone(),
                                source: a.labels.clone(),
                                target: b.labels.clone(),
                                node,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok((checked, failures))
}

/// A cell over `p` with source `a` and target `b`, or the first node with no admissible label.
fn find_filler(
    series: &OperadSeries,
    p: &PastingDiagram,
    nodes: &[Node],
    a: &QCell,
    b: &QCell,
) -> Result<std::result::Result<QCell, Node>> {
    let top = p.dim();
    let mut labels = Vec::with_capacity(nodes.len());
    for (i, node) in nodes.iter().enumerate() {
        let (op, d) = label_fiber(series, top, node)?;
        let count = op.count(node.arity, d);
        let choice = if i < a.labels.len() {
            (0..count).find(|&x| {
                op.src(node.arity, d, x) == a.labels[i] && op.tgt(node.arity, d, x) == b.labels[i]
            })
        } else {
            (count > 0).then_some(0)
        };
        match choice {
            Some(x) => labels.push(x),
            None => return Ok(Err(node.clone())),
        }
    }
    Ok(Ok(QCell { shape: p.clone(), labels }))
}

/// A cell of `Q⁽ⁿ⁾(X)`: an operation together with a diagram of its shape in `X`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FreeCell {
    pub q: QCell,
    pub delta: GMorphism,
}

/// The bounded part of `Q⁽ⁿ⁾(X)` as a globular set, with the cell behind each index.
#[derive(Clone, Debug)]
pub struct QApply {
    pub set: GlobularSet,
    pub cells: Vec<Vec<FreeCell>>,
}

/// Free `Q⁽ⁿ⁾`-algebra on `x`, restricted to shapes with at most `max_vertices` vertices.
pub fn q_apply(series: &OperadSeries, x: &GlobularSet, max_vertices: usize) -> Result<QApply> {
    let n = series.n();
    if x.n() != n {
        return Err(Error::TruncationMismatch(x.n(), n));
    }
    let mut cells: Vec<Vec<FreeCell>> = vec![Vec::new(); n + 1];
    let mut index: Vec<HashMap<FreeCell, usize>> = vec![HashMap::new(); n + 1];
    let mut src: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut tgt: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for m in 0..=n {
        for pd in enumerate_pds(m, max_vertices) {
            let qs = q_cells(series, &pd)?;
            let deltas = diagrams(x, &pd)?;
            let incl = boundary_inclusions(&pd);
            for q in &qs {
                let (qs_, qt_) = if m > 0 {
                    (Some(q_boundary(series, q, Side::Source)?), Some(q_boundary(series, q, Side::Target)?))
                } else {
                    (None, None)
                };
                for delta in &deltas {
                    if let (Some((s, t)), Some(qs_), Some(qt_)) = (&incl, &qs_, &qt_) {
                        let a = FreeCell { q: qs_.clone(), delta: s.then(delta) };
                        let b = FreeCell { q: qt_.clone(), delta: t.then(delta) };
                        src[m].push(index[m - 1][&a]);
                        tgt[m].push(index[m - 1][&b]);
                    }
                    let c = FreeCell { q: q.clone(), delta: delta.clone() };
                    index[m].insert(c.clone(), cells[m].len());
                    cells[m].push(c);
                }
            }
        }
    }
    let counts = cells.iter().map(Vec::len).collect();
    let set = GlobularSet::new(n, counts, src.split_off(1), tgt.split_off(1))?;
    Ok(QApply { set, cells })
}

/// The bounded part of `Q⁽ⁿ⁾(1)` as a globular set.
pub fn q_globular_set(series: &OperadSeries, max_vertices: usize) -> Result<(GlobularSet, Vec<Vec<QCell>>)> {
    let a = q_apply(series, &GlobularSet::terminal(series.n()), max_vertices)?;
    let cells = a.cells.into_iter().map(|row| row.into_iter().map(|c| c.q).collect()).collect();
    Ok((a.set, cells))
}

/// Operad multiplication of `Q⁽ⁿ⁾` for `n <= 2`: compose `q` with one argument per
/// cell of its shape, the arguments lying over the diagrams of `subst`.
pub fn q2_multiply(
    series: &OperadSeries,
    q: &QCell,
    subst: &SubstLabeling,
    args: &[Vec<QCell>],
) -> Result<QCell> {
    let n = series.n();
    if n > 2 {
        return Err(Error::Unsupported(format!("operad multiplication of Q at n = {n}")));
    }
    let shape = substitute(&q.shape, subst)?;
    let gl = associated_gset(&q.shape).set;
    validate_args(series, &gl, subst, args)?;
    let m = q.dim();
    if m == 0 {
        return Ok(QCell { shape, labels: Vec::new() });
    }
    let p = series.get(n - 1);
    let root = root_label(p, q, &gl, args, m)?;
    let mut labels = vec![root];
    labels.extend(std::iter::repeat_n(0, shape.nodes().len() - 1));
    QCell::new(series, shape, labels)
}

fn validate_args(series: &OperadSeries, gl: &GlobularSet, subst: &SubstLabeling, args: &[Vec<QCell>]) -> Result<()> {
    if args.len() != subst.labels.len() {
        return Err(Error::IncompatibleLabel {
            dim: args.len().min(subst.labels.len()),
            cell: 0,
            msg: "argument dimensions differ from the labeling".into(),
        });
    }
    for (d, row) in args.iter().enumerate() {
        if row.len() != subst.labels[d].len() {
            return Err(Error::IncompatibleLabel { dim: d, cell: 0, msg: "wrong number of arguments".into() });
        }
        for (c, a) in row.iter().enumerate() {
            let bad = |msg: String| Error::IncompatibleLabel { dim: d, cell: c, msg };
            if a.shape != subst.labels[d][c] {
                return Err(bad(format!("argument over {} but labeled {}", a.shape, subst.labels[d][c])));
            }
            QCell::new(series, a.shape.clone(), a.labels.clone()).map_err(|e| bad(e.to_string()))?;
            if d > 0 {
                let s = q_boundary(series, a, Side::Source)?;
                let t = q_boundary(series, a, Side::Target)?;
                if s != args[d - 1][gl.src(d, c)] || t != args[d - 1][gl.tgt(d, c)] {
                    return Err(bad("argument boundary differs from the arguments on its boundary".into()));
                }
            }
        }
    }
    Ok(())
}

fn root_of(a: &QCell) -> (usize, usize) {
    (a.shape.root_arity(), a.labels[0])
}

fn root_label(p: &GOperad, q: &QCell, gl: &GlobularSet, args: &[Vec<QCell>], m: usize) -> Result<usize> {
    let k = q.shape.root_arity();
    let parts: Vec<(usize, usize)> = if m == 1 {
        args[1].iter().map(root_of).collect()
    } else {
        let offs = q.shape.column_offsets();
        let mut parts = Vec::with_capacity(k);
        for (i, child) in q.shape.children().iter().enumerate() {
            let h = child.root_arity();
            let first = offs[i][1];
            let (ni, c) = if h == 0 {
                let (ni, x) = root_of(&args[1][offs[i][0]]);
                (ni, p.identity(ni, 0, x)?)
            } else {
                let (ni, mut c) = root_of(&args[2][first]);
                for j in 1..h {
                    c = p.compose1(ni, c, root_of(&args[2][first + j]).1)?;
                }
                (ni, c)
            };
            debug_assert!(gl.count(2) >= first);
            parts.push((ni, c));
        }
        parts
    };
    Ok(p.gamma(m - 1, (k, q.labels[0]), &parts)?.1)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InterchangeReport {
    pub lhs: QCell,
    pub rhs: QCell,
    pub composite: usize,
    pub passed: bool,
}

/// Both ways of composing a 2-by-2 grid of 2-cells whose horizontal composites are
/// parametrised by `f` and `g` in `P₁(2)`.
pub fn interchange_check(series: &OperadSeries, f: usize, g: usize) -> Result<InterchangeReport> {
    if series.n() != 2 {
        return Err(Error::Unsupported(format!("interchange needs n = 2, got {}", series.n())));
    }
    let p = series.get(1);
    let gf = p.compose1(2, f, g)?;
    let u = p.unit(0);
    let id_u = p.unit(1);
    let point = || QCell { shape: PastingDiagram::point(), labels: Vec::new() };
    let one = |k: usize, x: usize| QCell { shape: PastingDiagram::arity(k), labels: vec![x] };
    let two = |heights: &[usize], x: usize| {
        let shape = PastingDiagram::columns(heights);
        let mut labels = vec![x];
        labels.extend(std::iter::repeat_n(0, heights.len()));
        QCell { shape, labels }
    };
    let horizontal = PastingDiagram::columns(&[1, 1]);
    let vertical = PastingDiagram::columns(&[2]);

    let lhs_q = two(&[2], id_u);
    let lhs_subst = SubstLabeling::new(vec![
        vec![PastingDiagram::point(); 2],
        vec![PastingDiagram::arity(2); 3],
        vec![horizontal.clone(); 2],
    ]);
    let lhs_args = vec![
        vec![point(), point()],
        vec![one(2, p.src(2, 1, f)), one(2, p.tgt(2, 1, f)), one(2, p.tgt(2, 1, g))],
        vec![two(&[1, 1], f), two(&[1, 1], g)],
    ];
    let lhs = q2_multiply(series, &lhs_q, &lhs_subst, &lhs_args)?;

    let rhs_q = two(&[1, 1], gf);
    let rhs_subst = SubstLabeling::new(vec![
        vec![PastingDiagram::point(); 3],
        vec![PastingDiagram::arity(1); 4],
        vec![vertical.clone(); 2],
    ]);
    let rhs_args = vec![
        vec![point(), point(), point()],
        vec![one(1, u); 4],
        vec![two(&[2], id_u), two(&[2], id_u)],
    ];
    let rhs = q2_multiply(series, &rhs_q, &rhs_subst, &rhs_args)?;

    let grid = PastingDiagram::columns(&[2, 2]);
    let passed = lhs == rhs && lhs.shape == grid && lhs.labels[0] == gf;
    Ok(InterchangeReport { lhs, rhs, composite: gf, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operads::SetOperad;

    fn chaotic2() -> OperadSeries {
        let base = SetOperad::cyclic(2, 6).unwrap();
        OperadSeries::with_top(GOperad::chaotic(base, 1)).unwrap()
    }

    fn running() -> PastingDiagram {
        "dim=2:[[oo][o][][oooo]]".parse().unwrap()
    }

    #[test]
    fn running_example_count() {
        let s = chaotic2();
        assert_eq!(q_count(&s, &running()).unwrap(), 4);
        assert_eq!(q_cells(&s, &running()).unwrap().len(), 4);
        let t = OperadSeries::terminal(2, 6);
        assert_eq!(q_cells(&t, &running()).unwrap().len(), 1);
        assert_eq!(q_cells(&s, &PastingDiagram::point()).unwrap().len(), 1);
    }

    #[test]
    fn boundary_keeps_root_endpoint() {
        let s = chaotic2();
        for q in q_cells(&s, &running()).unwrap() {
            let src = q_boundary(&s, &q, Side::Source).unwrap();
            let tgt = q_boundary(&s, &q, Side::Target).unwrap();
            assert_eq!(src.shape, PastingDiagram::arity(4));
            assert_eq!(src.labels, vec![q.labels[0] / 2]);
            assert_eq!(tgt.labels, vec![q.labels[0] % 2]);
        }
        assert!(q_boundary(&s, &q_unit(&s, 0).unwrap(), Side::Source).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = chaotic2();
        let q = q_cells(&s, &running()).unwrap().pop().unwrap();
        let text = q.to_json();
        assert!(text.starts_with(r#"{"shape":"dim=2:[[oo][o][][oooo]]","labels":[{"height":0,"arity":4,"cell":3}"#));
        assert_eq!(QCell::from_json(&s, &text).unwrap(), q);
    }

    #[test]
    fn exact_contractibility() {
        assert!(q_is_contractible_exact(&OperadSeries::terminal(3, 6)).contractible);
        let magma = OperadSeries::with_top(GOperad::chaotic(SetOperad::magma(6), 1)).unwrap();
        let r = q_is_contractible_exact(&magma);
        assert_eq!(r.witness.as_deref(), Some("P_1(0) empty"));
    }

    #[test]
    fn discrete_reports_missing_lift() {
        let s = OperadSeries::with_top(GOperad::discrete(SetOperad::cyclic(2, 6).unwrap(), 1)).unwrap();
        let r = q_is_contractible_lifting(&s, 6).unwrap();
        assert!(!r.contractible);
        assert!(r.failures.iter().any(|f| matches!(
            f,
            LiftFailure::MissingLift { shape, .. } if *shape == PastingDiagram::arity(2)
        )));
        assert!(q_is_contractible_lifting(&chaotic2(), 6).unwrap().contractible);
    }

    #[test]
    fn free_algebra_on_a_loop_has_paths() {
        let s = OperadSeries::terminal(1, 6);
        let x = GlobularSet::new(1, vec![1, 1], vec![vec![0]], vec![vec![0]]).unwrap();
        let a = q_apply(&s, &x, 5).unwrap();
        assert_eq!(a.set.counts(), &[1, 5]);
    }

    #[test]
    fn dim_one_multiplication() {
        let s = chaotic2();
        let q = QCell::new(&s, PastingDiagram::arity(2), vec![1]).unwrap();
        let subst = SubstLabeling::new(vec![vec![PastingDiagram::point(); 3], vec![PastingDiagram::arity(1); 2]]);
        let pt = QCell { shape: PastingDiagram::point(), labels: vec![] };
        let args = vec![
            vec![pt.clone(), pt.clone(), pt],
            vec![
                QCell::new(&s, PastingDiagram::arity(1), vec![1]).unwrap(),
                QCell::new(&s, PastingDiagram::arity(1), vec![0]).unwrap(),
            ],
        ];
        let r = q2_multiply(&s, &q, &subst, &args).unwrap();
        assert_eq!(r.shape, PastingDiagram::arity(2));
        assert_eq!(r.labels, vec![0]);
    }

    #[test]
    fn interchange_chaotic() {
        let s = chaotic2();
        let p = s.get(1);
        let mut passed = 0;
        for f in 0..4 {
            for g in 0..4 {
                match interchange_check(&s, f, g) {
                    Ok(r) => {
                        assert!(r.passed);
                        assert_eq!(r.composite, p.src(2, 1, f) * 2 + p.tgt(2, 1, g));
                        passed += 1;
                    }
                    Err(Error::NotComposable(_)) => assert_ne!(p.tgt(2, 1, f), p.src(2, 1, g)),
                    Err(e) => panic!("{e}"),
                }
            }
        }
        assert_eq!(passed, 8);
    }
}
