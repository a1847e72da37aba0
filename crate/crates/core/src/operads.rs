//! Non-symmetric operads in sets and in finite truncated globular sets.
//!
//! Operads are represented up to an arity cap. A cell is addressed by its arity
//! and its index in the fiber, so composition takes and returns `(arity, cell)`
//! pairs. Composites whose total arity exceeds the cap are reported as
//! [`Error::ArityCap`].

use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gset::GlobularSet;

pub const DEFAULT_MAX_ARITY: usize = 6;

/// A planar binary bracketing; leaves are unlabeled.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Bracketing {
    Leaf,
    Node(Box<Bracketing>, Box<Bracketing>),
}

impl Bracketing {
    pub fn leaves(&self) -> usize {
        match self {
            Bracketing::Leaf => 1,
            Bracketing::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    /// Replace the leaves, left to right, by `args`.
    fn graft(&self, args: &mut std::slice::Iter<'_, Bracketing>) -> Bracketing {
        match self {
            Bracketing::Leaf => args.next().expect("one argument per leaf").clone(),
            Bracketing::Node(l, r) => {
                let l = l.graft(args);
                Bracketing::Node(Box::new(l), Box::new(r.graft(args)))
            }
        }
    }
}

impl fmt::Display for Bracketing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracketing::Leaf => write!(f, "x"),
            Bracketing::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

impl std::str::FromStr for Bracketing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        fn go(b: &[u8], i: &mut usize) -> Result<Bracketing> {
            match b.get(*i) {
                Some(b'x') => {
                    *i += 1;
                    Ok(Bracketing::Leaf)
                }
                Some(b'(') => {
                    *i += 1;
                    let l = go(b, i)?;
                    let r = go(b, i)?;
                    if b.get(*i) != Some(&b')') {
                        return Err(Error::Syntax { pos: *i, msg: "expected ')'".into() });
                    }
                    *i += 1;
                    Ok(Bracketing::Node(Box::new(l), Box::new(r)))
                }
                _ => Err(Error::Syntax { pos: *i, msg: "expected 'x' or '('".into() }),
            }
        }
        let b: Vec<u8> = s.bytes().filter(|c| !c.is_ascii_whitespace()).collect();
        let mut i = 0;
        let t = go(&b, &mut i)?;
        if i != b.len() {
            return Err(Error::Syntax { pos: i, msg: "trailing input".into() });
        }
        Ok(t)
    }
}

/// Finite table of an operad: fiber sizes, unit, and every composite within the cap.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TableData {
    pub sizes: Vec<usize>,
    pub unit: usize,
    /// `(m, top, [(k_i, arg_i)], result)`, the result lying in arity `Σ k_i`.
    pub compositions: Vec<(usize, usize, Vec<(usize, usize)>, usize)>,
}

type TableKey = (usize, usize, Vec<(usize, usize)>);

#[derive(Clone, PartialEq, Eq, Debug)]
enum SetFamily {
    Terminal,
    Cyclic(usize),
    Magma { trees: Vec<Vec<Bracketing>>, index: Vec<HashMap<Bracketing, usize>> },
    Table { data: TableData, lookup: HashMap<TableKey, usize> },
}

/// A non-symmetric operad in sets, up to an arity cap.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetOperad {
    family: SetFamily,
    max_arity: usize,
}

impl SetOperad {
    pub fn terminal(max_arity: usize) -> Self {
        SetOperad { family: SetFamily::Terminal, max_arity }
    }

    /// `Z_r` in every arity, composing by addition.
    pub fn cyclic(r: usize, max_arity: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::OperadSpec("cyclic order must be positive".into()));
        }
        Ok(SetOperad { family: SetFamily::Cyclic(r), max_arity })
    }

    /// The free magma: binary bracketings, composing by grafting; empty in arity 0.
    pub fn magma(max_arity: usize) -> Self {
        let mut trees: Vec<Vec<Bracketing>> = vec![Vec::new(), vec![Bracketing::Leaf]];
        for k in 2..=max_arity.max(1) {
            let mut row = Vec::new();
            for i in 1..k {
                for l in &trees[i] {
                    for r in &trees[k - i] {
                        row.push(Bracketing::Node(Box::new(l.clone()), Box::new(r.clone())));
                    }
                }
            }
            trees.push(row);
        }
        trees.truncate(max_arity + 1);
        let index = trees
            .iter()
            .map(|row| row.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect())
            .collect();
        SetOperad { family: SetFamily::Magma { trees, index }, max_arity }
    }

    /// A table operad, validated against the unit and associativity laws.
    pub fn table(data: TableData) -> Result<Self> {
        let op = Self::table_unchecked(data)?;
        let report = check_operad_axioms(&GOperad::discrete(op.clone(), 0), op.max_arity, usize::MAX, 0);
        match report.failure {
            None => Ok(op),
            Some(f) => Err(Error::OperadLaw(f)),
        }
    }

    /// A table operad checked only for well-formed entries, not for the operad laws.
    pub fn table_unchecked(data: TableData) -> Result<Self> {
        if data.sizes.is_empty() {
            return Err(Error::OperadSpec("table needs at least arity 0".into()));
        }
        let max_arity = data.sizes.len() - 1;
        if max_arity < 1 || data.unit >= data.sizes[1] {
            return Err(Error::OperadSpec("unit is not an element of arity 1".into()));
        }
        let mut lookup = HashMap::new();
        for (m, top, args, res) in &data.compositions {
            let total: usize = args.iter().map(|a| a.0).sum();
            let ok = *m <= max_arity
                && *top < data.sizes[*m]
                && args.len() == *m
                && total <= max_arity
                && args.iter().all(|&(k, b)| k <= max_arity && b < data.sizes[k])
                && *res < data.sizes[total];
            if !ok {
                return Err(Error::OperadSpec(format!("malformed table entry ({m}, {top}, {args:?}, {res})")));
            }
            if lookup.insert((*m, *top, args.clone()), *res).is_some() {
                return Err(Error::OperadSpec(format!("duplicate table entry ({m}, {top}, {args:?})")));
            }
        }
        Ok(SetOperad { family: SetFamily::Table { data, lookup }, max_arity })
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    pub fn size(&self, k: usize) -> usize {
        if k > self.max_arity {
            return 0;
        }
        match &self.family {
            SetFamily::Terminal => 1,
            SetFamily::Cyclic(r) => *r,
            SetFamily::Magma { trees, .. } => trees[k].len(),
            SetFamily::Table { data, .. } => data.sizes[k],
        }
    }

    pub fn unit(&self) -> usize {
        match &self.family {
            SetFamily::Table { data, .. } => data.unit,
            _ => 0,
        }
    }

    /// The bracketing behind a magma element.
    pub fn bracketing(&self, k: usize, x: usize) -> Option<&Bracketing> {
        match &self.family {
            SetFamily::Magma { trees, .. } => trees.get(k)?.get(x),
            _ => None,
        }
    }

    pub fn bracketing_index(&self, t: &Bracketing) -> Option<usize> {
        match &self.family {
            SetFamily::Magma { index, .. } => index.get(t.leaves())?.get(t).copied(),
            _ => None,
        }
    }

    pub fn gamma(&self, top: (usize, usize), args: &[(usize, usize)]) -> Result<(usize, usize)> {
        let (m, x) = top;
        if m != args.len() {
            return Err(Error::ArityMismatch { expected: m, got: args.len() });
        }
        for &(k, c) in std::iter::once(&top).chain(args) {
            if c >= self.size(k) {
                return Err(Error::NoSuchCell { arity: k, dim: 0, cell: c });
            }
        }
        let total: usize = args.iter().map(|a| a.0).sum();
        if total > self.max_arity {
            return Err(Error::ArityCap { arity: total, cap: self.max_arity });
        }
        let r = match &self.family {
            SetFamily::Terminal => 0,
            SetFamily::Cyclic(r) => (x + args.iter().map(|a| a.1).sum::<usize>()) % r,
            SetFamily::Magma { trees, index } => {
                let subs: Vec<Bracketing> = args.iter().map(|&(k, c)| trees[k][c].clone()).collect();
                let t = trees[m][x].graft(&mut subs.iter());
                index[total][&t]
            }
            SetFamily::Table { lookup, .. } => *lookup
                .get(&(m, x, args.to_vec()))
                .ok_or_else(|| Error::OperadSpec(format!("table has no composite for ({m}, {x}, {args:?})")))?,
        };
        Ok((total, r))
    }

    /// Every fiber within the cap is nonempty.
    pub fn all_fibers_nonempty(&self) -> bool {
        (0..=self.max_arity).all(|k| self.size(k) > 0)
    }

    fn spec(&self) -> OperadSpec {
        let mut s = OperadSpec::kind(match &self.family {
            SetFamily::Terminal => "terminal",
            SetFamily::Cyclic(_) => "cyclic",
            SetFamily::Magma { .. } => "magma",
            SetFamily::Table { .. } => "table",
        });
        s.max_arity = Some(self.max_arity);
        match &self.family {
            SetFamily::Cyclic(r) => s.r = Some(*r),
            SetFamily::Table { data, .. } => s.data = Some(data.clone()),
            _ => {}
        }
        s
    }
}

impl fmt::Display for SetOperad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            SetFamily::Terminal => write!(f, "terminal"),
            SetFamily::Cyclic(r) => write!(f, "cyclic({r})"),
            SetFamily::Magma { .. } => write!(f, "magma"),
            SetFamily::Table { .. } => write!(f, "table"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum GKind {
    Terminal,
    Chaotic(SetOperad),
    Discrete(SetOperad),
    Loops(usize),
}

/// A non-symmetric operad in `n`-truncated globular sets, up to an arity cap.
///
/// Cell encodings per family, with `s = |O(k)|`:
/// - chaotic: 0-cells are `O(k)`; every higher cell is a pair `(a, b)` stored
///   as `a * s + b`, a 1-cell `a -> b` at dimension 1 and the unique cell over
///   itself above;
/// - discrete: `O(k)` in every dimension, higher cells are identities;
/// - loops: one 0-cell and `Z_r` as loops on it, composing by addition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GOperad {
    n: usize,
    kind: GKind,
    max_arity: usize,
}

impl GOperad {
    pub fn terminal(n: usize, max_arity: usize) -> Self {
        GOperad { n, kind: GKind::Terminal, max_arity }
    }

    /// One higher cell for every parallel pair over the sets of `base`.
    pub fn chaotic(base: SetOperad, n: usize) -> Self {
        let max_arity = base.max_arity;
        GOperad { n, kind: GKind::Chaotic(base), max_arity }
    }

    /// Only identity cells above the sets of `base`; `discrete(O, 0)` is `O` itself.
    pub fn discrete(base: SetOperad, n: usize) -> Self {
        let max_arity = base.max_arity;
        GOperad { n, kind: GKind::Discrete(base), max_arity }
    }

    /// A one-object category `Z_r` in every arity, with `γ` adding all labels.
    pub fn loops(r: usize, n: usize, max_arity: usize) -> Result<Self> {
        if r == 0 || n > 1 {
            return Err(Error::OperadSpec("loops needs r >= 1 and n <= 1".into()));
        }
        Ok(GOperad { n, kind: GKind::Loops(r), max_arity })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    /// Same operad with the cap lowered to `cap`.
    pub fn with_cap(&self, cap: usize) -> Self {
        let mut o = self.clone();
        o.max_arity = cap.min(self.max_arity);
        o
    }

    fn base_size(&self, k: usize) -> usize {
        match &self.kind {
            GKind::Terminal | GKind::Loops(_) => usize::from(k <= self.max_arity),
            GKind::Chaotic(o) | GKind::Discrete(o) => o.size(k),
        }
    }

    /// Number of `d`-cells of `P(k)`.
    pub fn count(&self, k: usize, d: usize) -> usize {
        if k > self.max_arity || d > self.n {
            return 0;
        }
        let s = self.base_size(k);
        match &self.kind {
            GKind::Terminal => 1,
            GKind::Discrete(_) => s,
            GKind::Chaotic(_) => {
                if d == 0 {
                    s
                } else {
                    s * s
                }
            }
            GKind::Loops(r) => {
                if d == 0 {
                    1
                } else {
                    *r
                }
            }
        }
    }

    fn check_cell(&self, k: usize, d: usize, c: usize) -> Result<()> {
        if k > self.max_arity {
            return Err(Error::ArityCap { arity: k, cap: self.max_arity });
        }
        if d > self.n {
            return Err(Error::DimensionOutOfRange { dim: d, n: self.n });
        }
        if c >= self.count(k, d) {
            return Err(Error::NoSuchCell { arity: k, dim: d, cell: c });
        }
        Ok(())
    }

    /// Source of the `d`-cell `c` of `P(k)`, `d >= 1`.
    pub fn src(&self, k: usize, d: usize, c: usize) -> usize {
        match &self.kind {
            GKind::Chaotic(_) if d == 1 => c / self.base_size(k),
            GKind::Loops(_) if d == 1 => 0,
            _ => c,
        }
    }

    pub fn tgt(&self, k: usize, d: usize, c: usize) -> usize {
        match &self.kind {
            GKind::Chaotic(_) if d == 1 => c % self.base_size(k),
            GKind::Loops(_) if d == 1 => 0,
            _ => c,
        }
    }

    /// The identity `(d+1)`-cell on the `d`-cell `c` of `P(k)`.
    pub fn identity(&self, k: usize, d: usize, c: usize) -> Result<usize> {
        self.check_cell(k, d, c)?;
        if d >= self.n {
            return Err(Error::DimensionOutOfRange { dim: d + 1, n: self.n });
        }
        Ok(match &self.kind {
            GKind::Chaotic(_) if d == 0 => c * self.base_size(k) + c,
            GKind::Loops(_) if d == 0 => 0,
            _ => c,
        })
    }

    /// Iterated identity lifting the 0-cell `c` to dimension `d`.
    pub fn degenerate(&self, k: usize, d: usize, c: usize) -> Result<usize> {
        let mut x = c;
        for e in 0..d {
            x = self.identity(k, e, x)?;
        }
        Ok(x)
    }

    /// Composite `g ∘ f` of 1-cells in the category `P(k)`.
    pub fn compose1(&self, k: usize, f: usize, g: usize) -> Result<usize> {
        self.check_cell(k, 1, f)?;
        self.check_cell(k, 1, g)?;
        if self.tgt(k, 1, f) != self.src(k, 1, g) {
            return Err(Error::NotComposable(format!("1-cells {f} and {g} of arity {k}")));
        }
        Ok(match &self.kind {
            GKind::Terminal => 0,
            GKind::Discrete(_) => f,
            GKind::Chaotic(_) => {
                let s = self.base_size(k);
                (f / s) * s + g % s
            }
            GKind::Loops(r) => (f + g) % r,
        })
    }

    /// The unit as a `d`-cell of `P(1)`.
    pub fn unit(&self, d: usize) -> usize {
        let u = match &self.kind {
            GKind::Chaotic(o) | GKind::Discrete(o) => o.unit(),
            _ => 0,
        };
        self.degenerate(1, d, u).expect("unit lies in arity 1")
    }

    /// Operadic composition of `d`-cells.
    pub fn gamma(&self, d: usize, top: (usize, usize), args: &[(usize, usize)]) -> Result<(usize, usize)> {
        let (m, x) = top;
        if m != args.len() {
            return Err(Error::ArityMismatch { expected: m, got: args.len() });
        }
        self.check_cell(m, d, x)?;
        for &(k, c) in args {
            self.check_cell(k, d, c)?;
        }
        let total: usize = args.iter().map(|a| a.0).sum();
        if total > self.max_arity {
            return Err(Error::ArityCap { arity: total, cap: self.max_arity });
        }
        let cell = match &self.kind {
            GKind::Terminal => 0,
            GKind::Discrete(o) => o.gamma(top, args)?.1,
            GKind::Chaotic(o) if d == 0 => o.gamma(top, args)?.1,
            GKind::Chaotic(o) => {
                let s = o.size(m);
                let split = |k: usize, c: usize| (c / o.size(k), c % o.size(k));
                let (a, b) = (x / s, x % s);
                let srcs: Vec<_> = args.iter().map(|&(k, c)| (k, split(k, c).0)).collect();
                let tgts: Vec<_> = args.iter().map(|&(k, c)| (k, split(k, c).1)).collect();
                let ga = o.gamma((m, a), &srcs)?.1;
                let gb = o.gamma((m, b), &tgts)?.1;
                ga * o.size(total) + gb
            }
            GKind::Loops(_) if d == 0 => 0,
            GKind::Loops(r) => (x + args.iter().map(|a| a.1).sum::<usize>()) % r,
        };
        Ok((total, cell))
    }

    /// The globular set `P(k)`.
    pub fn gset(&self, k: usize) -> Result<GlobularSet> {
        if k > self.max_arity {
            return Err(Error::ArityCap { arity: k, cap: self.max_arity });
        }
        let counts: Vec<usize> = (0..=self.n).map(|d| self.count(k, d)).collect();
        let src = (1..=self.n).map(|d| (0..counts[d]).map(|c| self.src(k, d, c)).collect()).collect();
        let tgt = (1..=self.n).map(|d| (0..counts[d]).map(|c| self.tgt(k, d, c)).collect()).collect();
        GlobularSet::new(self.n, counts, src, tgt)
    }

    /// Verdict on contractibility decided by the family for every arity, if any.
    fn family_contractible(&self) -> Option<bool> {
        match &self.kind {
            GKind::Terminal => Some(true),
            GKind::Loops(r) => Some(*r == 1 || self.n == 0),
            GKind::Chaotic(o) => match o.family {
                SetFamily::Terminal | SetFamily::Cyclic(_) => Some(self.n > 0 || o.size(0) == 1),
                SetFamily::Magma { .. } => Some(false),
                SetFamily::Table { .. } => None,
            },
            GKind::Discrete(o) => match o.family {
                SetFamily::Terminal => Some(true),
                SetFamily::Cyclic(r) => Some(r == 1),
                SetFamily::Magma { .. } => Some(false),
                SetFamily::Table { .. } => None,
            },
        }
    }

    pub fn spec(&self) -> OperadSpec {
        let mut s = match &self.kind {
            GKind::Terminal => OperadSpec::kind("terminal"),
            GKind::Loops(r) => {
                let mut s = OperadSpec::kind("loops");
                s.r = Some(*r);
                s
            }
            GKind::Chaotic(o) | GKind::Discrete(o) => {
                let mut s = OperadSpec::kind(if matches!(self.kind, GKind::Chaotic(_)) { "chaotic" } else { "discrete" });
                s.base = Some(Box::new(o.spec()));
                s
            }
        };
        s.n = Some(self.n);
        s.max_arity = Some(self.max_arity);
        s
    }
}

impl fmt::Display for GOperad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GKind::Terminal => write!(f, "terminal({})", self.n),
            GKind::Chaotic(o) => write!(f, "chaotic({o},{})", self.n),
            GKind::Discrete(o) => write!(f, "discrete({o},{})", self.n),
            GKind::Loops(r) => write!(f, "loops({r},{})", self.n),
        }
    }
}

/// JSON description of an operad.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct OperadSpec {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Box<OperadSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_arity: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<TableData>,
}

impl OperadSpec {
    fn kind(k: &str) -> Self {
        OperadSpec { kind: k.to_string(), ..Default::default() }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Operad {
    Set(SetOperad),
    Globular(GOperad),
}

impl Operad {
    /// Set operads become 0-truncated globular operads.
    pub fn into_globular(self) -> GOperad {
        match self {
            Operad::Set(o) => GOperad::discrete(o, 0),
            Operad::Globular(g) => g,
        }
    }
}

pub fn build_operad(spec: &OperadSpec) -> Result<Operad> {
    let cap = spec.max_arity.unwrap_or(DEFAULT_MAX_ARITY);
    let need_r = || spec.r.ok_or_else(|| Error::OperadSpec(format!("{} needs \"r\"", spec.kind)));
    let need_n = || spec.n.ok_or_else(|| Error::OperadSpec(format!("{} needs \"n\"", spec.kind)));
    let base = || -> Result<SetOperad> {
        let b = spec.base.as_ref().ok_or_else(|| Error::OperadSpec(format!("{} needs \"base\"", spec.kind)))?;
        let mut b = (**b).clone();
        if b.max_arity.is_none() {
            b.max_arity = Some(cap);
        }
        match build_operad(&b)? {
            Operad::Set(o) => Ok(o),
            Operad::Globular(_) => Err(Error::OperadSpec("base must be a set operad".into())),
        }
    };
    match spec.kind.as_str() {
        "terminal" => Ok(match spec.n {
            Some(n) => Operad::Globular(GOperad::terminal(n, cap)),
            None => Operad::Set(SetOperad::terminal(cap)),
        }),
        "cyclic" => Ok(Operad::Set(SetOperad::cyclic(need_r()?, cap)?)),
        "magma" => Ok(Operad::Set(SetOperad::magma(cap))),
        "table" => {
            let data = spec.data.clone().ok_or_else(|| Error::OperadSpec("table needs \"data\"".into()))?;
            Ok(Operad::Set(SetOperad::table(data)?))
        }
        "chaotic" => Ok(Operad::Globular(GOperad::chaotic(base()?, need_n()?))),
        "discrete" => Ok(Operad::Globular(GOperad::discrete(base()?, need_n()?))),
        "loops" => Ok(Operad::Globular(GOperad::loops(need_r()?, need_n()?, cap)?)),
        k => Err(Error::OperadSpec(format!("unknown kind {k:?}"))),
    }
}

/// Outcome of [`check_operad_axioms`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AxiomReport {
    pub passed: bool,
    /// Whether every instance within the cap was checked rather than a sample.
    pub exhaustive: bool,
    pub checked: usize,
    pub failure: Option<String>,
}

/// Check unit, associativity, boundary compatibility and, at dimension 1,
/// functoriality of `γ`. Instances are enumerated when there are at most
/// `sample_budget` of them, and otherwise sampled with `seed`.
pub fn check_operad_axioms(p: &GOperad, max_arity: usize, sample_budget: usize, seed: u64) -> AxiomReport {
    let p = p.with_cap(max_arity);
    let cap = p.max_arity;
    let mut checked = 0usize;
    let mut exhaustive = true;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fail = |checked: usize, exhaustive: bool, msg: String| AxiomReport {
        passed: false,
        exhaustive,
        checked,
        failure: Some(msg),
    };

    for d in 0..=p.n {
        let u = p.unit(d);
        for k in 0..=cap {
            for x in 0..p.count(k, d) {
                checked += 2;
                match p.gamma(d, (1, u), &[(k, x)]) {
                    Ok((_, y)) if y == x => {}
                    Ok((_, y)) => return fail(checked, true, format!("γ(u; x) ≠ x: dim {d}, arity {k}, x = {x}, got {y}")),
                    Err(e) => return fail(checked, true, format!("γ(u; x) undefined for dim {d}, arity {k}, x = {x}: {e}")),
                }
                match p.gamma(d, (k, x), &vec![(1, u); k]) {
                    Ok((_, y)) if y == x => {}
                    Ok((_, y)) => return fail(checked, true, format!("γ(x; u,…,u) ≠ x: dim {d}, arity {k}, x = {x}, got {y}")),
                    Err(e) => return fail(checked, true, format!("γ(x; u,…,u) undefined for dim {d}, arity {k}, x = {x}: {e}")),
                }
            }
        }
    }

    // Arity shapes (m; k_1..k_m; j_11..j_mk_m) with Σk and Σj within the cap.
    let mut shapes: Vec<(usize, Vec<usize>, Vec<Vec<usize>>)> = Vec::new();
    for m in 0..=cap {
        for ks in tuples(m, cap) {
            let nk: usize = ks.iter().sum();
            for flat in tuples(nk, cap) {
                let mut js = Vec::new();
                let mut it = flat.into_iter();
                for &k in &ks {
                    js.push(it.by_ref().take(k).collect());
                }
                shapes.push((m, ks.clone(), js));
            }
        }
    }
    let mut total = 0usize;
    for d in 0..=p.n {
        for (m, ks, js) in &shapes {
            let mut prod = p.count(*m, d);
            for &k in ks {
                prod = prod.saturating_mul(p.count(k, d));
            }
            for &j in js.iter().flatten() {
                prod = prod.saturating_mul(p.count(j, d));
            }
            total = total.saturating_add(prod);
        }
    }

    let run = |d: usize, m: usize, x: usize, ys: &[(usize, usize)], zs: &[Vec<(usize, usize)>]| -> Option<String> {
        let inner: Vec<(usize, usize)> = match ys
            .iter()
            .zip(zs)
            .map(|(&y, z)| p.gamma(d, y, z))
            .collect::<Result<Vec<_>>>()
        {
            Ok(v) => v,
            Err(e) => return Some(format!("composite undefined at dim {d}: {e}")),
        };
        let flat: Vec<(usize, usize)> = zs.iter().flatten().copied().collect();
        let lhs = p.gamma(d, (m, x), &inner);
        let rhs = p.gamma(d, (m, x), ys).and_then(|xy| p.gamma(d, xy, &flat));
        match (lhs, rhs) {
            (Ok(a), Ok(b)) if a == b => {}
            (Ok(a), Ok(b)) => {
                return Some(format!(
                    "associativity fails at dim {d}: x = ({m},{x}), ys = {ys:?}, zs = {zs:?}: {a:?} ≠ {b:?}"
                ))
            }
            (Err(e), _) | (_, Err(e)) => return Some(format!("composite undefined at dim {d}: {e}")),
        }
        if d >= 1 {
            let xy = p.gamma(d, (m, x), ys).expect("checked above");
            for (name, bd) in [("source", 0), ("target", 1)] {
                let b = |k: usize, c: usize| if bd == 0 { p.src(k, d, c) } else { p.tgt(k, d, c) };
                let lower: Vec<_> = ys.iter().map(|&(k, c)| (k, b(k, c))).collect();
                match p.gamma(d - 1, (m, b(m, x)), &lower) {
                    Ok(v) if v.1 == b(xy.0, xy.1) => {}
                    _ => return Some(format!("γ does not commute with {name} at dim {d}: x = ({m},{x}), ys = {ys:?}")),
                }
            }
        }
        if d < p.n {
            let xy = p.gamma(d, (m, x), ys).expect("checked above");
            let ids: Vec<_> = ys.iter().map(|&(k, c)| (k, p.identity(k, d, c).expect("d < n"))).collect();
            let idx = p.identity(m, d, x).expect("d < n");
            match p.gamma(d + 1, (m, idx), &ids) {
                Ok(v) if v.1 == p.identity(xy.0, d, xy.1).expect("d < n") => {}
                _ => return Some(format!("γ does not preserve identities at dim {d}: x = ({m},{x}), ys = {ys:?}")),
            }
        }
        if d == 1 {
            let xy = p.gamma(1, (m, x), ys).expect("checked above");
            for x2 in (0..p.count(m, 1)).filter(|&c| p.src(m, 1, c) == p.tgt(m, 1, x)) {
                let ys2: Vec<_> = ys
                    .iter()
                    .map(|&(k, c)| (k, p.identity(k, 0, p.tgt(k, 1, c)).expect("n >= 1")))
                    .collect();
                let comp = p.compose1(m, x, x2).expect("composable");
                let ycomp: Vec<_> = ys.iter().zip(&ys2).map(|(&(k, a), &(_, b))| (k, p.compose1(k, a, b).expect("composable"))).collect();
                let lhs = p.gamma(1, (m, comp), &ycomp);
                let rhs = p.gamma(1, (m, x2), &ys2).and_then(|v| p.compose1(xy.0, xy.1, v.1));
                match (lhs, rhs) {
                    (Ok(a), Ok(b)) if a.1 == b => {}
                    _ => return Some(format!("γ is not functorial at x = ({m},{x}), x' = {x2}, ys = {ys:?}")),
                }
            }
        }
        None
    };

    if total <= sample_budget {
        for d in 0..=p.n {
            for (m, ks, js) in &shapes {
                let mut radices = vec![p.count(*m, d)];
                radices.extend(ks.iter().map(|&k| p.count(k, d)));
                radices.extend(js.iter().flatten().map(|&j| p.count(j, d)));
                if radices.contains(&0) {
                    continue;
                }
                let mut digits = vec![0usize; radices.len()];
                loop {
                    let (ys, zs) = assemble(ks, js, &digits[1..]);
                    checked += 1;
                    if let Some(msg) = run(d, *m, digits[0], &ys, &zs) {
                        return fail(checked, true, msg);
                    }
                    if !odometer(&mut digits, &radices) {
                        break;
                    }
                }
            }
        }
    } else {
        exhaustive = false;
        let mut drawn = 0;
        let mut attempts = 0;
        while drawn < sample_budget && attempts < sample_budget.saturating_mul(20) && !shapes.is_empty() {
            attempts += 1;
            let d = rng.gen_range(0..=p.n);
            let (m, ks, js) = &shapes[rng.gen_range(0..shapes.len())];
            let mut radices = vec![p.count(*m, d)];
            radices.extend(ks.iter().map(|&k| p.count(k, d)));
            radices.extend(js.iter().flatten().map(|&j| p.count(j, d)));
            if radices.contains(&0) {
                continue;
            }
            let digits: Vec<usize> = radices.iter().map(|&r| rng.gen_range(0..r)).collect();
            let (ys, zs) = assemble(ks, js, &digits[1..]);
            drawn += 1;
            checked += 1;
            if let Some(msg) = run(d, *m, digits[0], &ys, &zs) {
                return fail(checked, false, msg);
            }
        }
    }
    AxiomReport { passed: true, exhaustive, checked, failure: None }
}

type Assembled = (Vec<(usize, usize)>, Vec<Vec<(usize, usize)>>);

fn assemble(ks: &[usize], js: &[Vec<usize>], digits: &[usize]) -> Assembled {
    let ys: Vec<(usize, usize)> = ks.iter().zip(digits).map(|(&k, &c)| (k, c)).collect();
    let mut rest = digits[ks.len()..].iter();
    let zs = js
        .iter()
        .map(|row| row.iter().map(|&j| (j, *rest.next().expect("one digit per argument"))).collect())
        .collect();
    (ys, zs)
}

/// Advance a mixed-radix counter; false once it wraps.
pub(crate) fn odometer(digits: &mut [usize], radices: &[usize]) -> bool {
    for i in (0..digits.len()).rev() {
        digits[i] += 1;
        if digits[i] < radices[i] {
            return true;
        }
        digits[i] = 0;
    }
    false
}

/// All tuples of the given length with entry sum at most `max_sum`.
pub(crate) fn tuples(len: usize, max_sum: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..=max_sum {
        for mut rest in tuples(len - 1, max_sum - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// How far a contractibility verdict reaches.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Scope {
    /// Decided for every arity by the operad's family.
    AllArities,
    /// Checked cell by cell up to the given arity.
    UpToArity(usize),
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ContractibilityReport {
    pub contractible: bool,
    pub scope: Scope,
    pub witness: Option<String>,
}

/// Whether every `P(k)`, `k <= max_arity`, is contractible.
pub fn operad_is_contractible(p: &GOperad, max_arity: usize) -> ContractibilityReport {
    let cap = max_arity.min(p.max_arity);
    let mut witness = None;
    for k in 0..=cap {
        let g = p.gset(k).expect("k within cap");
        if let Some(f) = g.contractibility_failure() {
            witness = Some(match f {
                crate::gset::ContractibilityFailure::NoObjects => format!("P({k}) empty"),
                other => format!("P({k}): {other}"),
            });
            break;
        }
    }
    let family = p.family_contractible();
    if let (Some(v), None) = (family, &witness) {
        debug_assert!(v, "family verdict contradicts the cell check for {p}");
    }
    let scope = match family {
        Some(v) if v == witness.is_none() => Scope::AllArities,
        _ => Scope::UpToArity(cap),
    };
    ContractibilityReport { contractible: witness.is_none(), scope, witness }
}

/// The operads `P_0, …, P_{n-1}` of an iterative theory, `P_i` truncated at `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OperadSeries {
    operads: Vec<GOperad>,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    operads: Vec<OperadSpec>,
}

impl OperadSeries {
    pub fn new(operads: Vec<GOperad>) -> Result<Self> {
        for (i, p) in operads.iter().enumerate() {
            if p.n != i {
                return Err(Error::Series(format!("P_{i} = {p} has truncation {}, expected {i}", p.n)));
            }
        }
        if let Some(p0) = operads.first() {
            if let Some(k) = (0..=p0.max_arity).find(|&k| p0.count(k, 0) != 1) {
                return Err(Error::Series(format!("P_0 = {p0} is not terminal: |P_0({k})| = {}", p0.count(k, 0))));
            }
        }
        Ok(OperadSeries { operads })
    }

    /// The series of `n` terminal operads.
    pub fn terminal(n: usize, max_arity: usize) -> Self {
        OperadSeries { operads: (0..n).map(|i| GOperad::terminal(i, max_arity)).collect() }
    }

    /// Terminal `P_0`, …, `P_{n-2}` followed by `top` as `P_{n-1}`.
    pub fn with_top(top: GOperad) -> Result<Self> {
        let n = top.n + 1;
        let cap = top.max_arity;
        let mut ops: Vec<GOperad> = (0..n - 1).map(|i| GOperad::terminal(i, cap)).collect();
        ops.push(top);
        Self::new(ops)
    }

    pub fn n(&self) -> usize {
        self.operads.len()
    }

    pub fn get(&self, i: usize) -> &GOperad {
        &self.operads[i]
    }

    pub fn operads(&self) -> &[GOperad] {
        &self.operads
    }

    /// The smallest arity cap among the operads.
    pub fn max_arity(&self) -> usize {
        self.operads.iter().map(|p| p.max_arity).min().unwrap_or(usize::MAX)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: SeriesJson = serde_json::from_str(text)?;
        let ops = j
            .operads
            .iter()
            .map(|s| build_operad(s).map(Operad::into_globular))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ops)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SeriesJson { operads: self.operads.iter().map(|p| p.spec()).collect() })
            .expect("specs serialize")
    }
}

impl fmt::Display for OperadSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.operads.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", names.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalan(k: usize) -> usize {
        // number of bracketings of k letters, by the convolution recurrence
        let mut c = vec![0usize; k.max(2) + 1];
        c[1] = 1;
        for m in 2..=k {
            c[m] = (1..m).map(|i| c[i] * c[m - i]).sum();
        }
        c[k]
    }

    #[test]
    fn magma_sizes_are_catalan() {
        let m = SetOperad::magma(6);
        let sizes: Vec<usize> = (0..=6).map(|k| m.size(k)).collect();
        assert_eq!(sizes, vec![0, 1, 1, 2, 5, 14, 42]);
        for k in 1..=6 {
            assert_eq!(m.size(k), catalan(k));
        }
    }

    #[test]
    fn magma_grafting() {
        let m = SetOperad::magma(6);
        let idx = |s: &str| {
            let t: Bracketing = s.parse().unwrap();
            (t.leaves(), m.bracketing_index(&t).unwrap())
        };
        let r = m.gamma(idx("((xx)x)"), &[idx("(xx)"), idx("x"), idx("x")]).unwrap();
        assert_eq!(r, idx("(((xx)x)x)"));
        assert_eq!(m.bracketing(r.0, r.1).unwrap().to_string(), "(((xx)x)x)");
        let r = m.gamma(idx("(xx)"), &[idx("x"), idx("(x(xx))")]).unwrap();
        assert_eq!(r, idx("(x(x(xx)))"));
    }

    #[test]
    fn cyclic_composites() {
        let c2 = SetOperad::cyclic(2, 6).unwrap();
        assert_eq!(c2.gamma((2, 1), &[(1, 1), (1, 0)]).unwrap(), (2, 0));
        let c3 = SetOperad::cyclic(3, 6).unwrap();
        assert_eq!(c3.gamma((2, 2), &[(1, 2), (1, 2)]).unwrap(), (2, 0));
        assert_eq!(
            c3.gamma((2, 2), &[(1, 2)]),
            Err(Error::ArityMismatch { expected: 2, got: 1 })
        );
        assert!(matches!(c3.gamma((2, 0), &[(4, 0), (4, 0)]), Err(Error::ArityCap { .. })));
    }

    #[test]
    fn terminal_gamma_is_unique_cell() {
        let t = GOperad::terminal(2, 6);
        for d in 0..=2 {
            assert_eq!(t.gamma(d, (2, 0), &[(3, 0), (0, 0)]).unwrap(), (3, 0));
        }
    }

    #[test]
    fn axiom_checks() {
        let r = check_operad_axioms(&GOperad::terminal(2, 4), 4, 100_000, 1);
        assert!(r.passed && r.exhaustive);
        let c2 = GOperad::discrete(SetOperad::cyclic(2, 4).unwrap(), 0);
        let r = check_operad_axioms(&c2, 4, usize::MAX, 1);
        assert!(r.passed && r.exhaustive, "{r:?}");
        let ch = GOperad::chaotic(SetOperad::cyclic(2, 3).unwrap(), 2);
        let r = check_operad_axioms(&ch, 3, 2000, 7);
        assert!(r.passed && !r.exhaustive, "{r:?}");
        let magma = GOperad::chaotic(SetOperad::magma(4), 1);
        assert!(check_operad_axioms(&magma, 4, 200_000, 3).passed);
        let loops = GOperad::loops(2, 1, 4).unwrap();
        assert!(check_operad_axioms(&loops, 4, 200_000, 3).passed);
    }

    fn z2_table(unit: usize) -> TableData {
        let mut compositions = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                compositions.push((1, a, vec![(1, b)], (a + b) % 2));
            }
        }
        TableData { sizes: vec![0, 2], unit, compositions }
    }

    #[test]
    fn table_operads() {
        let ok = SetOperad::table(z2_table(0)).unwrap();
        assert_eq!(ok.gamma((1, 1), &[(1, 1)]).unwrap(), (1, 0));
        assert!(matches!(SetOperad::table(z2_table(1)), Err(Error::OperadLaw(_))));
        let bad = SetOperad::table_unchecked(z2_table(1)).unwrap();
        let r = check_operad_axioms(&GOperad::discrete(bad, 0), 1, 1000, 0);
        assert!(!r.passed);
        assert!(r.failure.unwrap().starts_with("γ(u; x) ≠ x"));
    }

    #[test]
    fn contractibility_examples() {
        let c2 = || SetOperad::cyclic(2, 6).unwrap();
        let r = operad_is_contractible(&GOperad::chaotic(c2(), 2), 6);
        assert!(r.contractible);
        assert_eq!(r.scope, Scope::AllArities);
        let r = operad_is_contractible(&GOperad::discrete(c2(), 2), 6);
        assert!(!r.contractible);
        assert_eq!(r.witness.as_deref(), Some("P(0): no 1-cell between parallel 0-cells 0 and 1"));
        let r = operad_is_contractible(&GOperad::chaotic(SetOperad::magma(6), 2), 6);
        assert!(!r.contractible);
        assert_eq!(r.witness.as_deref(), Some("P(0) empty"));
        assert_eq!(r.scope, Scope::AllArities);
        assert!(operad_is_contractible(&GOperad::terminal(3, 6), 6).contractible);
    }

    #[test]
    fn chaotic_cells_are_globular() {
        let p = GOperad::chaotic(SetOperad::magma(5), 3);
        for k in 0..=5 {
            let g = p.gset(k).unwrap();
            assert_eq!(g.count(1), p.count(k, 0).pow(2));
        }
    }

    #[test]
    fn spec_round_trip() {
        let text = r#"{"operads":[{"kind":"terminal","n":0},{"kind":"chaotic","n":1,"base":{"kind":"cyclic","r":2}}]}"#;
        let s = OperadSeries::from_json(text).unwrap();
        assert_eq!(s.n(), 2);
        assert_eq!(s.to_string(), "[terminal(0), chaotic(cyclic(2),1)]");
        assert_eq!(OperadSeries::from_json(&s.to_json()).unwrap(), s);
        let bad = r#"{"operads":[{"kind":"cyclic","r":2}]}"#;
        assert!(matches!(OperadSeries::from_json(bad), Err(Error::Series(_))));
    }
}
