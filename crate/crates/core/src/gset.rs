//! Finite n-truncated globular sets.
//!
//! Cells of dimension `d` are the integers `0..count(d)`; identity is index
//! equality. Source and target maps are stored densely and validated on
//! construction, so every `GlobularSet` value satisfies `ss = st`, `ts = tt`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pd::PastingDiagram;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GlobularSet {
    n: usize,
    counts: Vec<usize>,
    src: Vec<Vec<usize>>,
    tgt: Vec<Vec<usize>>,
}

impl GlobularSet {
    /// `src[d-1]` and `tgt[d-1]` give the boundaries of the `d`-cells, `1 <= d <= n`.
    pub fn new(
        n: usize,
        counts: Vec<usize>,
        src: Vec<Vec<usize>>,
        tgt: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidGlobularSet(m));
        if counts.len() != n + 1 {
            return bad(format!("expected {} cell counts, got {}", n + 1, counts.len()));
        }
        if src.len() != n || tgt.len() != n {
            return bad(format!("expected {n} source and target maps"));
        }
        let mut s = vec![Vec::new()];
        let mut t = vec![Vec::new()];
        s.extend(src);
        t.extend(tgt);
        for d in 1..=n {
            for (name, map) in [("source", &s[d]), ("target", &t[d])] {
                if map.len() != counts[d] {
                    return bad(format!("{name} map at dim {d} has {} entries for {} cells", map.len(), counts[d]));
                }
                if let Some(&x) = map.iter().find(|&&x| x >= counts[d - 1]) {
                    return bad(format!("{name} map at dim {d} points to missing cell {x}"));
                }
            }
            if d >= 2 {
                for c in 0..counts[d] {
                    let (a, b) = (s[d][c], t[d][c]);
                    if s[d - 1][a] != s[d - 1][b] || t[d - 1][a] != t[d - 1][b] {
                        return bad(format!("globularity fails at {d}-cell {c}"));
                    }
                }
            }
        }
        Ok(GlobularSet { n, counts, src: s, tgt: t })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn count(&self, d: usize) -> usize {
        self.counts.get(d).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total_cells(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Source of the `d`-cell `c`, `d >= 1`.
    pub fn src(&self, d: usize, c: usize) -> usize {
        self.src[d][c]
    }

    pub fn tgt(&self, d: usize, c: usize) -> usize {
        self.tgt[d][c]
    }

    pub fn src_map(&self, d: usize) -> &[usize] {
        &self.src[d]
    }

    pub fn tgt_map(&self, d: usize) -> &[usize] {
        &self.tgt[d]
    }

    /// Re-run the globularity check; constructed values always pass.
    pub fn check_globularity(&self) -> Result<()> {
        GlobularSet::new(
            self.n,
            self.counts.clone(),
            self.src[1..].to_vec(),
            self.tgt[1..].to_vec(),
        )
        .map(|_| ())
    }

    pub fn empty(n: usize) -> Self {
        GlobularSet { n, counts: vec![0; n + 1], src: vec![Vec::new(); n + 1], tgt: vec![Vec::new(); n + 1] }
    }

    /// One cell in every dimension.
    pub fn terminal(n: usize) -> Self {
        let mut src = vec![Vec::new()];
        src.extend((1..=n).map(|_| vec![0]));
        GlobularSet { n, counts: vec![1; n + 1], src: src.clone(), tgt: src }
    }

    /// The globular `m`-sphere: two cells in each dimension `0..=m`.
    pub fn sphere(m: usize) -> Self {
        let mut src = vec![Vec::new()];
        let mut tgt = vec![Vec::new()];
        for _ in 1..=m {
            src.push(vec![0, 0]);
            tgt.push(vec![1, 1]);
        }
        GlobularSet { n: m, counts: vec![2; m + 1], src, tgt }
    }

    /// The `m`-ball: the sphere with its top dimension collapsed to one cell.
    pub fn ball(m: usize) -> Self {
        if m == 0 {
            return Self::terminal(0);
        }
        let s = Self::sphere(m - 1);
        let mut counts = s.counts.clone();
        counts.push(1);
        let mut src = s.src;
        let mut tgt = s.tgt;
        src.push(vec![0]);
        tgt.push(vec![1]);
        GlobularSet { n: m, counts, src, tgt }
    }

    /// The boundary inclusion of the `m`-sphere into the `(m+1)`-ball.
    pub fn sphere_into_ball(m: usize) -> GMorphism {
        GMorphism { maps: vec![vec![0, 1]; m + 1], cod_n: m + 1 }
    }

    /// Cells of dimension `<= k`.
    pub fn truncate(&self, k: usize) -> Result<Self> {
        if k > self.n {
            return Err(Error::DimensionOutOfRange { dim: k, n: self.n });
        }
        Ok(GlobularSet {
            n: k,
            counts: self.counts[..=k].to_vec(),
            src: self.src[..=k].to_vec(),
            tgt: self.tgt[..=k].to_vec(),
        })
    }

    /// Dimension-wise product; the pair `(a, b)` has index `a * |B_d| + b`.
    pub fn product(a: &GlobularSet, b: &GlobularSet) -> Result<Self> {
        if a.n != b.n {
            return Err(Error::TruncationMismatch(a.n, b.n));
        }
        let n = a.n;
        let counts: Vec<usize> = (0..=n).map(|d| a.counts[d] * b.counts[d]).collect();
        let mut src = vec![Vec::new()];
        let mut tgt = vec![Vec::new()];
        for d in 1..=n {
            let below = b.counts[d - 1];
            let mut s = Vec::with_capacity(counts[d]);
            let mut t = Vec::with_capacity(counts[d]);
            for x in 0..a.counts[d] {
                for y in 0..b.counts[d] {
                    s.push(a.src[d][x] * below + b.src[d][y]);
                    t.push(a.tgt[d][x] * below + b.tgt[d][y]);
                }
            }
            src.push(s);
            tgt.push(t);
        }
        Ok(GlobularSet { n, counts, src, tgt })
    }

    /// Dimension-wise disjoint union, `a` first.
    pub fn coproduct(a: &GlobularSet, b: &GlobularSet) -> Result<Self> {
        if a.n != b.n {
            return Err(Error::TruncationMismatch(a.n, b.n));
        }
        let n = a.n;
        let counts: Vec<usize> = (0..=n).map(|d| a.counts[d] + b.counts[d]).collect();
        let mut src = vec![Vec::new()];
        let mut tgt = vec![Vec::new()];
        for d in 1..=n {
            let off = a.counts[d - 1];
            src.push(a.src[d].iter().copied().chain(b.src[d].iter().map(|x| x + off)).collect());
            tgt.push(a.tgt[d].iter().copied().chain(b.tgt[d].iter().map(|x| x + off)).collect());
        }
        Ok(GlobularSet { n, counts, src, tgt })
    }

    /// Ordered pairs of parallel `m`-cells; all pairs when `m = 0`.
    pub fn parallel_pairs(&self, m: usize) -> Result<Vec<(usize, usize)>> {
        if m > self.n {
            return Err(Error::DimensionOutOfRange { dim: m, n: self.n });
        }
        let c = self.counts[m];
        let mut out = Vec::new();
        for a in 0..c {
            for b in 0..c {
                if m == 0 || (self.src[m][a] == self.src[m][b] && self.tgt[m][a] == self.tgt[m][b]) {
                    out.push((a, b));
                }
            }
        }
        Ok(out)
    }

    /// The `(m+1)`-cells from `a` to `b`.
    pub fn hom(&self, m: usize, a: usize, b: usize) -> Vec<usize> {
        if m >= self.n {
            return Vec::new();
        }
        (0..self.counts[m + 1])
            .filter(|&x| self.src[m + 1][x] == a && self.tgt[m + 1][x] == b)
            .collect()
    }

    pub fn is_contractible(&self) -> bool {
        self.contractibility_failure().is_none()
    }

    /// The first clause of contractibility that fails, if any.
    pub fn contractibility_failure(&self) -> Option<ContractibilityFailure> {
        if self.counts[0] == 0 {
            return Some(ContractibilityFailure::NoObjects);
        }
        if self.n == 0 {
            return (self.counts[0] != 1)
                .then_some(ContractibilityFailure::NotTerminal { cells: self.counts[0] });
        }
        for m in 0..self.n {
            let mut fibers: HashMap<(usize, usize), usize> = HashMap::new();
            for x in 0..self.counts[m + 1] {
                *fibers.entry((self.src[m + 1][x], self.tgt[m + 1][x])).or_default() += 1;
            }
            for (a, b) in self.parallel_pairs(m).expect("m < n") {
                let k = fibers.get(&(a, b)).copied().unwrap_or(0);
                if k == 0 {
                    return Some(ContractibilityFailure::MissingFiller { dim: m, a, b });
                }
                if m + 1 == self.n && k > 1 {
                    return Some(ContractibilityFailure::DistinctTopCells { dim: m, a, b, count: k });
                }
            }
        }
        None
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum ContractibilityFailure {
    NoObjects,
    NotTerminal { cells: usize },
    /// No `(dim+1)`-cell from `a` to `b`.
    MissingFiller { dim: usize, a: usize, b: usize },
    /// More than one top cell from `a` to `b`.
    DistinctTopCells { dim: usize, a: usize, b: usize, count: usize },
}

impl std::fmt::Display for ContractibilityFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ContractibilityFailure::NoObjects => write!(f, "no 0-cells"),
            ContractibilityFailure::NotTerminal { cells } => write!(f, "{cells} 0-cells in a 0-truncated set"),
            ContractibilityFailure::MissingFiller { dim, a, b } => {
                write!(f, "no {}-cell between parallel {dim}-cells {a} and {b}", dim + 1)
            }
            ContractibilityFailure::DistinctTopCells { dim, a, b, count } => {
                write!(f, "{count} distinct {}-cells between {dim}-cells {a} and {b}", dim + 1)
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GlobularSetJson {
    n: usize,
    cells: Vec<Vec<u64>>,
    src: Vec<Vec<u64>>,
    tgt: Vec<Vec<u64>>,
}

impl Serialize for GlobularSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let to64 = |v: &Vec<usize>| v.iter().map(|&x| x as u64).collect::<Vec<_>>();
        GlobularSetJson {
            n: self.n,
            cells: self.counts.iter().map(|&c| (0..c as u64).collect()).collect(),
            src: self.src[1..].iter().map(to64).collect(),
            tgt: self.tgt[1..].iter().map(to64).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GlobularSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GlobularSetJson::deserialize(d)?;
        from_json_parts(j).map_err(serde::de::Error::custom)
    }
}

impl GlobularSet {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        from_json_parts(serde_json::from_str(text)?)
    }
}

fn from_json_parts(j: GlobularSetJson) -> Result<GlobularSet> {
    if j.cells.len() != j.n + 1 {
        return Err(Error::InvalidGlobularSet(format!("expected {} cell lists", j.n + 1)));
    }
    let mut index: Vec<HashMap<u64, usize>> = Vec::new();
    for (d, ids) in j.cells.iter().enumerate() {
        let m: HashMap<u64, usize> = ids.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        if m.len() != ids.len() {
            return Err(Error::InvalidGlobularSet(format!("duplicate cell ids at dim {d}")));
        }
        index.push(m);
    }
    let relabel = |maps: &Vec<Vec<u64>>| -> Result<Vec<Vec<usize>>> {
        maps.iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .map(|x| {
                        index[i].get(x).copied().ok_or_else(|| {
                            Error::InvalidGlobularSet(format!("unknown {i}-cell id {x}"))
                        })
                    })
                    .collect()
            })
            .collect()
    };
    if j.src.len() != j.n || j.tgt.len() != j.n {
        return Err(Error::InvalidGlobularSet(format!("expected {} source and target lists", j.n)));
    }
    GlobularSet::new(j.n, j.cells.iter().map(|c| c.len()).collect(), relabel(&j.src)?, relabel(&j.tgt)?)
}

/// A map of globular sets, stored as one cell map per dimension of its domain.
///
/// The codomain may have a larger truncation than the domain, which is what the
/// boundary inclusions of pasting diagrams need.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct GMorphism {
    maps: Vec<Vec<usize>>,
    cod_n: usize,
}

impl GMorphism {
    pub fn new(dom: &GlobularSet, cod: &GlobularSet, maps: Vec<Vec<usize>>) -> Result<Self> {
        let m = GMorphism { maps, cod_n: cod.n };
        m.validate(dom, cod)?;
        Ok(m)
    }

    pub(crate) fn from_maps(maps: Vec<Vec<usize>>, cod_n: usize) -> Self {
        GMorphism { maps, cod_n }
    }

    pub fn identity(a: &GlobularSet) -> Self {
        GMorphism { maps: a.counts.iter().map(|&c| (0..c).collect()).collect(), cod_n: a.n }
    }

    /// The unique map to the terminal set of truncation `n`.
    pub fn to_terminal(a: &GlobularSet, n: usize) -> Self {
        GMorphism { maps: a.counts.iter().map(|&c| vec![0; c]).collect(), cod_n: n }
    }

    /// Number of domain dimensions, i.e. domain truncation plus one.
    pub fn dims(&self) -> usize {
        self.maps.len()
    }

    pub fn cod_n(&self) -> usize {
        self.cod_n
    }

    pub fn map(&self, d: usize) -> &[usize] {
        &self.maps[d]
    }

    pub fn apply(&self, d: usize, c: usize) -> usize {
        self.maps[d][c]
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn validate(&self, dom: &GlobularSet, cod: &GlobularSet) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidMorphism(m));
        if self.maps.len() != dom.n + 1 {
            return bad(format!("{} cell maps for a domain of truncation {}", self.maps.len(), dom.n));
        }
        if dom.n > cod.n || self.cod_n != cod.n {
            return Err(Error::TruncationMismatch(dom.n, cod.n));
        }
        for d in 0..=dom.n {
            if self.maps[d].len() != dom.counts[d] {
                return bad(format!("cell map at dim {d} has the wrong length"));
            }
            if let Some(&x) = self.maps[d].iter().find(|&&x| x >= cod.counts[d]) {
                return bad(format!("image {x} at dim {d} is not a cell"));
            }
            if d >= 1 {
                for c in 0..dom.counts[d] {
                    let x = self.maps[d][c];
                    if cod.src[d][x] != self.maps[d - 1][dom.src[d][c]]
                        || cod.tgt[d][x] != self.maps[d - 1][dom.tgt[d][c]]
                    {
                        return bad(format!("does not commute with boundaries at {d}-cell {c}"));
                    }
                }
            }
        }
        Ok(())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GMorphism) -> GMorphism {
        GMorphism {
            maps: self
                .maps
                .iter()
                .enumerate()
                .map(|(d, row)| row.iter().map(|&x| other.maps[d][x]).collect())
                .collect(),
            cod_n: other.cod_n,
        }
    }
}

/// `Gl(pd)` with its source and target inclusions of `Gl(boundary(pd))`.
#[derive(Clone, Debug)]
pub struct AssociatedGSet {
    pub set: GlobularSet,
    pub source: Option<GMorphism>,
    pub target: Option<GMorphism>,
}

pub fn associated_gset(pd: &PastingDiagram) -> AssociatedGSet {
    let set = gl(pd);
    let (source, target) = match boundary_inclusions(pd) {
        Some((s, t)) => (Some(s), Some(t)),
        None => (None, None),
    };
    AssociatedGSet { set, source, target }
}

fn gl(pd: &PastingDiagram) -> GlobularSet {
    let m = pd.dim();
    if m == 0 {
        return GlobularSet::terminal(0);
    }
    let counts = pd.cell_counts();
    let offs = pd.column_offsets();
    let mut src: Vec<Vec<usize>> = vec![Vec::new(); m + 1];
    let mut tgt: Vec<Vec<usize>> = vec![Vec::new(); m + 1];
    for (i, child) in pd.children().iter().enumerate() {
        let inner = gl(child);
        for _ in 0..inner.count(0) {
            src[1].push(i);
            tgt[1].push(i + 1);
        }
        for d in 2..=m {
            for c in 0..inner.count(d - 1) {
                src[d].push(offs[i][d - 2] + inner.src(d - 1, c));
                tgt[d].push(offs[i][d - 2] + inner.tgt(d - 1, c));
            }
        }
    }
    GlobularSet { n: m, counts, src, tgt }
}

/// The inclusions `s, t: Gl(boundary(pd)) -> Gl(pd)`; `None` for the point.
pub fn boundary_inclusions(pd: &PastingDiagram) -> Option<(GMorphism, GMorphism)> {
    let m = pd.dim();
    if m == 0 {
        return None;
    }
    let k = pd.root_arity();
    if m == 1 {
        return Some((
            GMorphism { maps: vec![vec![0]], cod_n: 1 },
            GMorphism { maps: vec![vec![k]], cod_n: 1 },
        ));
    }
    let b = pd.boundary().expect("dim >= 1");
    let b_counts = b.cell_counts();
    let b_offs = b.column_offsets();
    let offs = pd.column_offsets();
    let mut s: Vec<Vec<usize>> = b_counts.iter().map(|&c| vec![0; c]).collect();
    let mut t = s.clone();
    for v in 0..=k {
        s[0][v] = v;
        t[0][v] = v;
    }
    for (i, child) in pd.children().iter().enumerate() {
        let (si, ti) = boundary_inclusions(child).expect("child dim >= 1");
        for (dd, (srow, trow)) in si.maps.iter().zip(&ti.maps).enumerate() {
            for (y, (&a, &b)) in srow.iter().zip(trow).enumerate() {
                s[dd + 1][b_offs[i][dd] + y] = offs[i][dd] + a;
                t[dd + 1][b_offs[i][dd] + y] = offs[i][dd] + b;
            }
        }
    }
    Some((GMorphism { maps: s, cod_n: m }, GMorphism { maps: t, cod_n: m }))
}

/// All morphisms `Gl(pd) -> X`, in lexicographic order of the chosen cells.
pub fn diagrams(x: &GlobularSet, pd: &PastingDiagram) -> Result<Vec<GMorphism>> {
    if pd.dim() > x.n {
        return Err(Error::DimensionOutOfRange { dim: pd.dim(), n: x.n });
    }
    let g = gl(pd);
    Ok(morphisms(&g, x))
}

/// All morphisms `A -> X` with `A.n <= X.n`, found by backtracking over the
/// maximal cells of `A`.
pub fn morphisms(a: &GlobularSet, x: &GlobularSet) -> Vec<GMorphism> {
    let mut maximal = Vec::new();
    for d in 0..=a.n {
        let mut hit = vec![false; a.counts[d]];
        if d < a.n {
            for c in 0..a.counts[d + 1] {
                hit[a.src[d + 1][c]] = true;
                hit[a.tgt[d + 1][c]] = true;
            }
        }
        maximal.extend((0..a.counts[d]).filter(|&c| !hit[c]).map(|c| (d, c)));
    }
    // Assign higher cells first: their boundaries then constrain the rest.
    maximal.sort_by(|p, q| q.0.cmp(&p.0).then(p.1.cmp(&q.1)));
    let mut assign: Vec<Vec<Option<usize>>> = a.counts.iter().map(|&c| vec![None; c]).collect();
    let mut out = Vec::new();
    search(a, x, &maximal, 0, &mut assign, &mut out);
    out
}

fn search(
    a: &GlobularSet,
    x: &GlobularSet,
    maximal: &[(usize, usize)],
    i: usize,
    assign: &mut Vec<Vec<Option<usize>>>,
    out: &mut Vec<GMorphism>,
) {
    if i == maximal.len() {
        out.push(GMorphism {
            maps: assign.iter().map(|r| r.iter().map(|c| c.expect("all cells assigned")).collect()).collect(),
            cod_n: x.n,
        });
        return;
    }
    let (d, c) = maximal[i];
    if assign[d][c].is_some() {
        search(a, x, maximal, i + 1, assign, out);
        return;
    }
    for img in 0..x.counts[d] {
        let mut trail = Vec::new();
        if bind(a, x, d, c, img, assign, &mut trail) {
            search(a, x, maximal, i + 1, assign, out);
        }
        for (dd, cc) in trail {
            assign[dd][cc] = None;
        }
    }
}

fn bind(
    a: &GlobularSet,
    x: &GlobularSet,
    d: usize,
    c: usize,
    img: usize,
    assign: &mut Vec<Vec<Option<usize>>>,
    trail: &mut Vec<(usize, usize)>,
) -> bool {
    match assign[d][c] {
        Some(v) => v == img,
        None => {
            assign[d][c] = Some(img);
            trail.push((d, c));
            d == 0
                || (bind(a, x, d - 1, a.src[d][c], x.src[d][img], assign, trail)
                    && bind(a, x, d - 1, a.tgt[d][c], x.tgt[d][img], assign, trail))
        }
    }
}

/// `A ×_C B` with its projections; `pairs[d][i]` is the pair of cells behind cell `i`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub set: GlobularSet,
    pub left: GMorphism,
    pub right: GMorphism,
    pub pairs: Vec<Vec<(usize, usize)>>,
}

pub fn pullback(
    a: &GlobularSet,
    f: &GMorphism,
    b: &GlobularSet,
    g: &GMorphism,
    c: &GlobularSet,
) -> Result<Pullback> {
    if a.n != b.n || a.n != c.n {
        return Err(Error::TruncationMismatch(a.n, if a.n != b.n { b.n } else { c.n }));
    }
    f.validate(a, c)?;
    g.validate(b, c)?;
    let n = a.n;
    let mut pairs: Vec<Vec<(usize, usize)>> = Vec::with_capacity(n + 1);
    let mut index: Vec<HashMap<(usize, usize), usize>> = Vec::with_capacity(n + 1);
    for d in 0..=n {
        let mut by_base: HashMap<usize, Vec<usize>> = HashMap::new();
        for y in 0..b.counts[d] {
            by_base.entry(g.maps[d][y]).or_default().push(y);
        }
        let mut row = Vec::new();
        for xa in 0..a.counts[d] {
            if let Some(ys) = by_base.get(&f.maps[d][xa]) {
                row.extend(ys.iter().map(|&y| (xa, y)));
            }
        }
        index.push(row.iter().enumerate().map(|(i, &p)| (p, i)).collect());
        pairs.push(row);
    }
    let mut src = Vec::with_capacity(n);
    let mut tgt = Vec::with_capacity(n);
    for d in 1..=n {
        src.push(pairs[d].iter().map(|&(p, q)| index[d - 1][&(a.src[d][p], b.src[d][q])]).collect());
        tgt.push(pairs[d].iter().map(|&(p, q)| index[d - 1][&(a.tgt[d][p], b.tgt[d][q])]).collect());
    }
    let set = GlobularSet::new(n, pairs.iter().map(|r| r.len()).collect(), src, tgt)?;
    let left = GMorphism { maps: pairs.iter().map(|r| r.iter().map(|p| p.0).collect()).collect(), cod_n: n };
    let right = GMorphism { maps: pairs.iter().map(|r| r.iter().map(|p| p.1).collect()).collect(), cod_n: n };
    Ok(Pullback { set, left, right, pairs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chaotic_two_objects() -> GlobularSet {
        GlobularSet::new(1, vec![2, 4], vec![vec![0, 0, 1, 1]], vec![vec![0, 1, 0, 1]]).unwrap()
    }

    #[test]
    fn spheres_and_balls() {
        assert_eq!(GlobularSet::sphere(0).counts(), &[2]);
        assert_eq!(GlobularSet::ball(1).counts(), &[2, 1]);
        assert_eq!(GlobularSet::ball(3).counts(), &[2, 2, 2, 1]);
        let inc = GlobularSet::sphere_into_ball(0);
        inc.validate(&GlobularSet::sphere(0), &GlobularSet::ball(1)).unwrap();
        assert_eq!(inc.map(0), &[0, 1]);
        for m in 0..4 {
            GlobularSet::sphere_into_ball(m)
                .validate(&GlobularSet::sphere(m), &GlobularSet::ball(m + 1))
                .unwrap();
        }
    }

    #[test]
    fn parallel_pair_counts() {
        assert_eq!(GlobularSet::sphere(1).parallel_pairs(1).unwrap().len(), 4);
        assert_eq!(GlobularSet::ball(1).parallel_pairs(1).unwrap(), vec![(0, 0)]);
        assert_eq!(chaotic_two_objects().parallel_pairs(0).unwrap().len(), 4);
        assert!(GlobularSet::ball(1).parallel_pairs(2).is_err());
    }

    #[test]
    fn contractibility_examples() {
        assert!(chaotic_two_objects().is_contractible());
        let discrete = GlobularSet::new(1, vec![2, 0], vec![vec![]], vec![vec![]]).unwrap();
        assert!(!discrete.is_contractible());
        for n in 0..5 {
            assert!(GlobularSet::terminal(n).is_contractible());
        }
        assert!(!GlobularSet::empty(2).is_contractible());
        assert!(!GlobularSet::sphere(0).is_contractible());
        assert_eq!(
            GlobularSet::sphere(1).contractibility_failure(),
            Some(ContractibilityFailure::MissingFiller { dim: 0, a: 0, b: 0 })
        );
    }

    #[test]
    fn rejects_non_globular_data() {
        // two 1-cells 0->1 and 0->0, one 2-cell between them
        let r = GlobularSet::new(2, vec![2, 2, 1], vec![vec![0, 0], vec![0]], vec![vec![1, 0], vec![1]]);
        assert!(matches!(r, Err(Error::InvalidGlobularSet(_))));
    }

    #[test]
    fn running_example_cell_counts() {
        let g = associated_gset(&PastingDiagram::columns(&[2, 1, 0, 4]));
        assert_eq!(g.set.counts(), &[5, 11, 7]);
        let b = PastingDiagram::columns(&[2, 1, 0, 4]).boundary().unwrap();
        let gb = associated_gset(&b).set;
        g.source.unwrap().validate(&gb, &g.set).unwrap();
        g.target.unwrap().validate(&gb, &g.set).unwrap();
        assert_eq!(associated_gset(&PastingDiagram::point()).set, GlobularSet::terminal(0));
        for m in 0..5 {
            assert_eq!(associated_gset(&PastingDiagram::globe(m)).set, GlobularSet::ball(m));
        }
    }

    #[test]
    fn diagram_counts() {
        let pd = PastingDiagram::columns(&[2, 1, 0, 4]);
        assert_eq!(diagrams(&GlobularSet::terminal(2), &pd).unwrap().len(), 1);
        let loop1 = GlobularSet::new(1, vec![1, 1], vec![vec![0]], vec![vec![0]]).unwrap();
        assert_eq!(diagrams(&loop1, &PastingDiagram::arity(3)).unwrap().len(), 1);
        let arrow = GlobularSet::ball(1);
        assert!(diagrams(&arrow, &PastingDiagram::arity(2)).unwrap().is_empty());
        assert_eq!(diagrams(&chaotic_two_objects(), &PastingDiagram::arity(2)).unwrap().len(), 8);
    }

    #[test]
    fn pullback_over_terminal_is_product() {
        let a = chaotic_two_objects();
        let b = GlobularSet::sphere(1);
        let t = GlobularSet::terminal(1);
        let p = pullback(&a, &GMorphism::to_terminal(&a, 1), &b, &GMorphism::to_terminal(&b, 1), &t).unwrap();
        assert_eq!(p.set, GlobularSet::product(&a, &b).unwrap());
        p.left.validate(&p.set, &a).unwrap();
        p.right.validate(&p.set, &b).unwrap();
    }

    #[test]
    fn pullback_along_identity() {
        let a = chaotic_two_objects();
        let id = GMorphism::identity(&a);
        let p = pullback(&a, &id, &a, &id, &a).unwrap();
        assert_eq!(p.set, a);
    }

    #[test]
    fn json_round_trip() {
        let a = chaotic_two_objects();
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"n":1,"cells":[[0,1],[0,1,2,3]],"src":[[0,0,1,1]],"tgt":[[0,1,0,1]]}"#);
        let back: GlobularSet = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        let relabeled: GlobularSet =
            serde_json::from_str(r#"{"n":1,"cells":[[7,9],[5]],"src":[[9]],"tgt":[[7]]}"#).unwrap();
        assert_eq!(relabeled.src(1, 0), 1);
        let bad = serde_json::from_str::<GlobularSet>(r#"{"n":1,"cells":[[0],[0]],"src":[[3]],"tgt":[[0]]}"#);
        assert!(bad.is_err());
    }
}
