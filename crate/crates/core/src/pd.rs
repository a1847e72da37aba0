//! Pasting diagrams as Batanin trees.
//!
//! An `m`-dimensional pasting diagram is either the point (`m = 0`) or a possibly
//! empty sequence of `(m-1)`-dimensional diagrams. The declared dimension is
//! carried explicitly because a drawn tree of height `h` also denotes a degenerate
//! diagram of every dimension `m > h`.
//!
//! Text form: `dim=<m>:<term>` with `<term> := "o" | "[" <term>* "]"`. Inside a
//! term whose remaining dimension is 1 a decimal arity may replace the brackets.
//! A leaf drawn below the declared dimension denotes an empty sequence, so
//! `dim=1:o` and `dim=1:[]` are the same diagram.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gset::{associated_gset, GMorphism, GlobularSet};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PastingDiagram {
    dim: usize,
    children: Vec<PastingDiagram>,
}

/// A sequence constructor inside a diagram: `height` is its depth in the tree and
/// `arity` the number of children.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Node {
    pub height: usize,
    pub arity: usize,
    pub path: Vec<usize>,
}

impl PastingDiagram {
    pub fn point() -> Self {
        PastingDiagram { dim: 0, children: Vec::new() }
    }

    pub fn new(dim: usize, children: Vec<PastingDiagram>) -> Result<Self> {
        if dim == 0 && !children.is_empty() {
            return Err(Error::InvalidDiagram("a 0-diagram has no children".into()));
        }
        if let Some(c) = children.iter().find(|c| c.dim + 1 != dim) {
            return Err(Error::InvalidDiagram(format!(
                "child of dimension {} under a {}-diagram",
                c.dim, dim
            )));
        }
        Ok(PastingDiagram { dim, children })
    }

    /// The 1-diagram with `k` composable arrows.
    pub fn arity(k: usize) -> Self {
        PastingDiagram { dim: 1, children: vec![Self::point(); k] }
    }

    /// The 2-diagram whose `i`-th column holds `heights[i]` vertically stacked 2-cells.
    pub fn columns(heights: &[usize]) -> Self {
        PastingDiagram { dim: 2, children: heights.iter().map(|&h| Self::arity(h)).collect() }
    }

    /// The linear tree: the single `m`-globe.
    pub fn globe(m: usize) -> Self {
        let mut pd = Self::point();
        for d in 1..=m {
            pd = PastingDiagram { dim: d, children: vec![pd] };
        }
        pd
    }

    /// The empty sequence of dimension `m`: the identity on the point, iterated.
    pub fn empty(m: usize) -> Self {
        PastingDiagram { dim: m, children: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn children(&self) -> &[PastingDiagram] {
        &self.children
    }

    /// Arity of the bottom node (0 for the point).
    pub fn root_arity(&self) -> usize {
        self.children.len()
    }

    /// Height of the drawn tree; below `dim` exactly when the tree is degenerate.
    pub fn height(&self) -> usize {
        self.children.iter().map(|c| c.height() + 1).max().unwrap_or(0)
    }

    /// Vertices of the drawn tree, nodes and leaves together.
    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(|c| c.vertex_count()).sum::<usize>()
    }

    pub fn is_globe(&self) -> bool {
        *self == Self::globe(self.dim)
    }

    /// Source and target of the diagram in `T1`: forget the top level of the tree.
    pub fn boundary(&self) -> Result<Self> {
        match self.dim {
            0 => Err(Error::PointBoundary),
            1 => Ok(Self::point()),
            d => Ok(PastingDiagram {
                dim: d - 1,
                children: self
                    .children
                    .iter()
                    .map(|c| c.boundary())
                    .collect::<Result<Vec<_>>>()?,
            }),
        }
    }

    /// Iterated boundary down to dimension `target`.
    pub fn truncate_to(&self, target: usize) -> Result<Self> {
        if target > self.dim {
            return Err(Error::DimensionOutOfRange { dim: target, n: self.dim });
        }
        let mut pd = self.clone();
        while pd.dim > target {
            pd = pd.boundary()?;
        }
        Ok(pd)
    }

    /// Nodes in canonical order: bottom-up by height, left to right within a height.
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        let mut level: Vec<(&PastingDiagram, Vec<usize>)> = vec![(self, Vec::new())];
        let mut height = 0;
        while !level.is_empty() {
            let mut next = Vec::new();
            for (pd, path) in level {
                if pd.dim == 0 {
                    continue;
                }
                out.push(Node { height, arity: pd.children.len(), path: path.clone() });
                for (i, c) in pd.children.iter().enumerate() {
                    let mut p = path.clone();
                    p.push(i);
                    next.push((c, p));
                }
            }
            level = next;
            height += 1;
        }
        out
    }

    /// Number of cells per dimension of the associated globular set.
    pub fn cell_counts(&self) -> Vec<usize> {
        if self.dim == 0 {
            return vec![1];
        }
        let mut counts = vec![0; self.dim + 1];
        counts[0] = self.children.len() + 1;
        for c in &self.children {
            for (d, n) in c.cell_counts().into_iter().enumerate() {
                counts[d + 1] += n;
            }
        }
        counts
    }

    /// `offsets[i][d]`: index of the first `(d+1)`-cell contributed by column `i`.
    pub fn column_offsets(&self) -> Vec<Vec<usize>> {
        let mut acc = vec![0; self.dim];
        let mut out = Vec::with_capacity(self.children.len());
        for c in &self.children {
            out.push(acc.clone());
            for (d, n) in c.cell_counts().into_iter().enumerate() {
                acc[d] += n;
            }
        }
        out
    }
}

impl fmt::Display for PastingDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn term(pd: &PastingDiagram, out: &mut String) {
            if pd.dim == 0 {
                out.push('o');
            } else {
                out.push('[');
                for c in &pd.children {
                    term(c, out);
                }
                out.push(']');
            }
        }
        let mut s = String::new();
        term(self, &mut s);
        write!(f, "dim={}:{}", self.dim, s)
    }
}

impl FromStr for PastingDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pd(s)
    }
}

impl Serialize for PastingDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PastingDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_pd(&s).map_err(serde::de::Error::custom)
    }
}

pub fn print_pd(pd: &PastingDiagram) -> String {
    pd.to_string()
}

pub fn parse_pd(text: &str) -> Result<PastingDiagram> {
    let toks: Vec<(usize, char)> =
        text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut p = Parser { toks: &toks, i: 0, end: text.len() };
    p.expect_word("dim=")?;
    let dim = p.number()?;
    p.expect(':')?;
    let pd = p.term(dim)?;
    if p.i < toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(pd)
}

struct Parser<'a> {
    toks: &'a [(usize, char)],
    i: usize,
    end: usize,
}

impl Parser<'_> {
    fn pos(&self) -> usize {
        self.toks.get(self.i).map(|t| t.0).unwrap_or(self.end)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos(), msg: msg.to_string() }
    }

    fn peek(&self) -> Option<char> {
        self.toks.get(self.i).map(|t| t.1)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.i += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    fn expect_word(&mut self, w: &str) -> Result<()> {
        for c in w.chars() {
            self.expect(c)?;
        }
        Ok(())
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.i;
        let mut v: usize = 0;
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add(c as usize - '0' as usize))
                .ok_or_else(|| self.err("number too large"))?;
            self.i += 1;
            // whitespace separates numbers even though it is otherwise ignored
            if let (Some(a), Some(b)) = (self.toks.get(self.i - 1), self.toks.get(self.i)) {
                if b.0 != a.0 + 1 {
                    break;
                }
            }
        }
        if self.i == start {
            return Err(self.err("expected a number"));
        }
        Ok(v)
    }

    fn term(&mut self, dim: usize) -> Result<PastingDiagram> {
        match self.peek() {
            Some('o') => {
                self.i += 1;
                Ok(PastingDiagram::empty(dim))
            }
            Some('[') => {
                if dim == 0 {
                    return Err(self.err("declared dim smaller than drawn height"));
                }
                self.i += 1;
                let mut children = Vec::new();
                while self.peek() != Some(']') {
                    if self.peek().is_none() {
                        return Err(self.err("unclosed '['"));
                    }
                    children.push(self.term(dim - 1)?);
                }
                self.i += 1;
                Ok(PastingDiagram { dim, children })
            }
            Some(c) if c.is_ascii_digit() => {
                if dim != 1 {
                    return Err(self.err("decimal arity is only allowed for 1-dimensional terms"));
                }
                Ok(PastingDiagram::arity(self.number()?))
            }
            Some(_) => Err(self.err("expected 'o', '[' or a decimal arity")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// All diagrams of dimension `m` whose drawn tree has at most `max_vertices` vertices.
///
/// Ordered by root arity, then vertex count, then children compared right to left.
pub fn enumerate_pds(m: usize, max_vertices: usize) -> Vec<PastingDiagram> {
    let mut out = generate(m, max_vertices);
    out.sort_by(enum_order);
    out
}

fn generate(m: usize, budget: usize) -> Vec<PastingDiagram> {
    if budget == 0 {
        return Vec::new();
    }
    if m == 0 {
        return vec![PastingDiagram::point()];
    }
    let below = generate(m - 1, budget - 1);
    let mut out = Vec::new();
    let mut stack: Vec<PastingDiagram> = Vec::new();
    sequences(&below, budget - 1, &mut stack, &mut |seq| {
        out.push(PastingDiagram { dim: m, children: seq.to_vec() })
    });
    out
}

fn sequences(
    pool: &[PastingDiagram],
    budget: usize,
    stack: &mut Vec<PastingDiagram>,
    emit: &mut dyn FnMut(&[PastingDiagram]),
) {
    emit(stack);
    for c in pool {
        let v = c.vertex_count();
        if v <= budget {
            stack.push(c.clone());
            sequences(pool, budget - v, stack, emit);
            stack.pop();
        }
    }
}

fn enum_order(a: &PastingDiagram, b: &PastingDiagram) -> Ordering {
    a.children
        .len()
        .cmp(&b.children.len())
        .then(a.vertex_count().cmp(&b.vertex_count()))
        .then_with(|| {
            for (x, y) in a.children.iter().rev().zip(b.children.iter().rev()) {
                let o = enum_order(x, y);
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
}

/// An element of `T(T1)` over a diagram: one diagram per cell of its globular set.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SubstLabeling {
    /// `labels[d][c]` labels the `d`-cell `c` of the associated globular set.
    pub labels: Vec<Vec<PastingDiagram>>,
}

impl SubstLabeling {
    pub fn new(labels: Vec<Vec<PastingDiagram>>) -> Self {
        SubstLabeling { labels }
    }

    /// Every cell labeled by the globe of its own dimension.
    pub fn unit(pd: &PastingDiagram) -> Self {
        let labels = pd
            .cell_counts()
            .into_iter()
            .enumerate()
            .map(|(d, n)| vec![PastingDiagram::globe(d); n])
            .collect();
        SubstLabeling { labels }
    }

    /// Labeling of a globe whose top cell carries `pd`; lower cells get its boundaries.
    pub fn on_globe(pd: &PastingDiagram) -> Self {
        let m = pd.dim();
        let mut labels = Vec::with_capacity(m + 1);
        for d in 0..=m {
            let l = pd.truncate_to(d).expect("d <= dim");
            let n = if d == m { 1 } else { 2 };
            labels.push(vec![l; n]);
        }
        SubstLabeling { labels }
    }

    /// Read a labeling off a morphism into a globular set whose cells are diagrams.
    pub fn from_morphism(m: &GMorphism, cells: &[Vec<PastingDiagram>]) -> Self {
        let labels = (0..m.dims())
            .map(|d| m.map(d).iter().map(|&c| cells[d][c].clone()).collect())
            .collect();
        SubstLabeling { labels }
    }

    /// Pull the labeling back along `f: Gl(other) -> Gl(pd)`.
    pub fn restrict(&self, f: &GMorphism) -> Self {
        let labels = (0..f.dims())
            .map(|d| f.map(d).iter().map(|&c| self.labels[d][c].clone()).collect())
            .collect();
        SubstLabeling { labels }
    }

    pub fn validate(&self, pd: &PastingDiagram) -> Result<()> {
        validate_labeling(pd, &associated_gset(pd).set, &self.labels)
    }
}

fn validate_labeling(
    pd: &PastingDiagram,
    gl: &GlobularSet,
    labels: &[Vec<PastingDiagram>],
) -> Result<()> {
    let counts = pd.cell_counts();
    if labels.len() != counts.len() {
        return Err(Error::IncompatibleLabel {
            dim: labels.len().min(counts.len()),
            cell: 0,
            msg: format!("labeling has {} dimensions, diagram has {}", labels.len(), counts.len()),
        });
    }
    for (d, row) in labels.iter().enumerate() {
        if row.len() != counts[d] {
            return Err(Error::IncompatibleLabel {
                dim: d,
                cell: row.len().min(counts[d]),
                msg: format!("expected {} labels, got {}", counts[d], row.len()),
            });
        }
        for (c, l) in row.iter().enumerate() {
            let bad = |msg: String| Error::IncompatibleLabel { dim: d, cell: c, msg };
            if l.dim() != d {
                return Err(bad(format!("label {l} has the wrong dimension")));
            }
            if d == 0 {
                continue;
            }
            let b = l.boundary()?;
            let s = &labels[d - 1][gl.src(d, c)];
            let t = &labels[d - 1][gl.tgt(d, c)];
            if &b != s || &b != t {
                return Err(bad(format!(
                    "boundary {b} of label {l} differs from source label {s} or target label {t}"
                )));
            }
        }
    }
    Ok(())
}

/// Result of a substitution together with, for every cell `c` of the original
/// diagram, the embedding of `Gl(label(c))` into `Gl(result)`.
#[derive(Clone, Debug)]
pub struct Substitution {
    pub result: PastingDiagram,
    pub embeddings: Vec<Vec<GMorphism>>,
}

/// Multiplication of the free strict ω-category monad on `T1`.
pub fn substitute(pd: &PastingDiagram, l: &SubstLabeling) -> Result<PastingDiagram> {
    Ok(substitute_with_embeddings(pd, l)?.result)
}

pub fn substitute_with_embeddings(pd: &PastingDiagram, l: &SubstLabeling) -> Result<Substitution> {
    l.validate(pd)?;
    let (result, maps) = subst_rec(pd, &l.labels)?;
    let n = result.dim();
    let embeddings = maps
        .into_iter()
        .map(|row| row.into_iter().map(|m| GMorphism::from_maps(m, n)).collect())
        .collect();
    Ok(Substitution { result, embeddings })
}

type CellMaps = Vec<Vec<usize>>;

fn subst_rec(
    pd: &PastingDiagram,
    labels: &[Vec<PastingDiagram>],
) -> Result<(PastingDiagram, Vec<Vec<CellMaps>>)> {
    if pd.dim == 0 {
        return Ok((PastingDiagram::point(), vec![vec![vec![vec![0]]]]));
    }
    let offs = pd.column_offsets();
    let mut pieces: Vec<(PastingDiagram, Vec<Vec<CellMaps>>)> = Vec::new();
    let mut widths = Vec::with_capacity(pd.children.len());
    for (i, child) in pd.children.iter().enumerate() {
        let width = labels[1][offs[i][0]].root_arity();
        widths.push(width);
        let cc = child.cell_counts();
        for j in 0..width {
            let mut lij = Vec::with_capacity(cc.len());
            for (d, &n) in cc.iter().enumerate() {
                let mut row = Vec::with_capacity(n);
                for x in 0..n {
                    let cell = offs[i][d] + x;
                    let lab = &labels[d + 1][cell];
                    if lab.root_arity() != width {
                        return Err(Error::IncompatibleLabel {
                            dim: d + 1,
                            cell,
                            msg: format!("root arity {} differs from column width {width}", lab.root_arity()),
                        });
                    }
                    row.push(lab.children[j].clone());
                }
                lij.push(row);
            }
            pieces.push(subst_rec(child, &lij)?);
        }
    }
    let result = PastingDiagram {
        dim: pd.dim,
        children: pieces.iter().map(|p| p.0.clone()).collect(),
    };
    let res_offs = result.column_offsets();
    let mut prefix = vec![0usize];
    for w in &widths {
        prefix.push(prefix.last().unwrap() + w);
    }

    let counts = pd.cell_counts();
    let mut emb: Vec<Vec<CellMaps>> = counts.iter().map(|&n| Vec::with_capacity(n)).collect();
    for &p in &prefix {
        emb[0].push(vec![vec![p]]);
    }
    let mut piece_start = 0;
    for (i, child) in pd.children.iter().enumerate() {
        let width = widths[i];
        for (d, &n) in child.cell_counts().iter().enumerate() {
            for x in 0..n {
                let beta = &labels[d + 1][offs[i][d] + x];
                let mut map: CellMaps = beta.cell_counts().iter().map(|&c| vec![0; c]).collect();
                for w in 0..=width {
                    map[0][w] = prefix[i] + w;
                }
                let beta_offs = beta.column_offsets();
                for j in 0..width {
                    let col = prefix[i] + j;
                    let inner = &pieces[piece_start + j].1[d][x];
                    for (dd, row) in inner.iter().enumerate() {
                        for (y, &img) in row.iter().enumerate() {
                            map[dd + 1][beta_offs[j][dd] + y] = res_offs[col][dd] + img;
                        }
                    }
                }
                emb[d + 1].push(map);
            }
        }
        piece_start += width;
    }
    Ok((result, emb))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(s: &str) -> PastingDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn globe_shapes() {
        assert_eq!(PastingDiagram::globe(0), PastingDiagram::point());
        assert_eq!(PastingDiagram::globe(1), PastingDiagram::arity(1));
        assert_eq!(PastingDiagram::globe(2), PastingDiagram::columns(&[1]));
        for m in 0..6 {
            let nodes = PastingDiagram::globe(m).nodes();
            assert_eq!(nodes.len(), m);
            assert!(nodes.iter().all(|n| n.arity == 1));
        }
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(PastingDiagram::arity(4).boundary().unwrap(), PastingDiagram::point());
        assert_eq!(PastingDiagram::globe(3).boundary().unwrap(), PastingDiagram::globe(2));
        assert_eq!(PastingDiagram::point().boundary(), Err(Error::PointBoundary));

        let four = pd("dim=4:[[[2][]][[1 1][][]][[]]]");
        let three = pd("dim=3:[[1 0][2 0 0][0]]");
        assert_eq!(four.boundary().unwrap(), three);
        assert_eq!(four.boundary().unwrap().boundary().unwrap(), four.truncate_to(2).unwrap());
    }

    #[test]
    fn running_example_nodes() {
        let p = PastingDiagram::columns(&[2, 1, 0, 4]);
        let got: Vec<(usize, usize)> = p.nodes().iter().map(|n| (n.height, n.arity)).collect();
        assert_eq!(got, vec![(0, 4), (1, 2), (1, 1), (1, 0), (1, 4)]);
        assert!(PastingDiagram::point().nodes().is_empty());
        let g: Vec<_> = PastingDiagram::globe(3).nodes().iter().map(|n| (n.height, n.arity)).collect();
        assert_eq!(g, vec![(0, 1), (1, 1), (2, 1)]);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(pd("dim=2:[[oo][o][][oooo]]"), PastingDiagram::columns(&[2, 1, 0, 4]));
        assert_eq!(pd("dim=0:o"), PastingDiagram::point());
        assert_eq!(pd(" dim = 2 : [ 2 1 0 4 ] "), PastingDiagram::columns(&[2, 1, 0, 4]));
        assert_eq!(pd("dim=1:4"), PastingDiagram::arity(4));
        assert_eq!(pd("dim=1:o"), PastingDiagram::arity(0));
        assert_eq!(PastingDiagram::columns(&[2, 0]).to_string(), "dim=2:[[oo][]]");

        let degenerate = pd("dim=3:[[oo]]");
        assert_eq!(degenerate.dim(), 3);
        assert_eq!(degenerate.height(), 2);
        assert_eq!(degenerate.to_string(), "dim=3:[[[][]]]");
        let nodes: Vec<_> = degenerate.nodes().iter().map(|n| (n.height, n.arity)).collect();
        assert_eq!(nodes, vec![(0, 1), (1, 2), (2, 0), (2, 0)]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_pd("dim=1:[[o]]"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_pd("dim=2:[o"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_pd("dim=2:3"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_pd("[oo]"), Err(Error::Syntax { pos: 0, .. })));
        match parse_pd("dim=1:[oo]x") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 10),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn enumeration_examples() {
        let ones = enumerate_pds(1, 5);
        assert_eq!(ones, (0..5).map(PastingDiagram::arity).collect::<Vec<_>>());
        let twos = enumerate_pds(2, 4);
        let expected: Vec<PastingDiagram> = [
            vec![],
            vec![0],
            vec![1],
            vec![2],
            vec![0, 0],
            vec![1, 0],
            vec![0, 1],
            vec![0, 0, 0],
        ]
        .iter()
        .map(|h| PastingDiagram::columns(h))
        .collect();
        assert_eq!(twos, expected);
        assert_eq!(enumerate_pds(0, 1), vec![PastingDiagram::point()]);
        assert!(enumerate_pds(3, 0).is_empty());
    }

    #[test]
    fn dim_one_substitution_flattens() {
        let p = PastingDiagram::arity(3);
        let l = SubstLabeling::new(vec![
            vec![PastingDiagram::point(); 4],
            vec![PastingDiagram::arity(2), PastingDiagram::arity(0), PastingDiagram::arity(1)],
        ]);
        assert_eq!(substitute(&p, &l).unwrap(), PastingDiagram::arity(3));
    }

    #[test]
    fn two_dim_substitution_example() {
        let p = PastingDiagram::columns(&[2]);
        let l = SubstLabeling::new(vec![
            vec![PastingDiagram::point(); 2],
            vec![PastingDiagram::arity(2); 3],
            vec![PastingDiagram::columns(&[1, 1]); 2],
        ]);
        assert_eq!(substitute(&p, &l).unwrap(), PastingDiagram::columns(&[2, 2]));
    }

    #[test]
    fn incompatible_labeling_names_cell() {
        let p = PastingDiagram::columns(&[1]);
        let l = SubstLabeling::new(vec![
            vec![PastingDiagram::point(); 2],
            vec![PastingDiagram::arity(2), PastingDiagram::arity(3)],
            vec![PastingDiagram::columns(&[1, 1])],
        ]);
        match substitute(&p, &l) {
            Err(Error::IncompatibleLabel { dim: 2, cell: 0, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unit_laws_small() {
        for m in 0..=3 {
            for p in enumerate_pds(m, 6) {
                assert_eq!(substitute(&p, &SubstLabeling::unit(&p)).unwrap(), p);
                let g = PastingDiagram::globe(m);
                assert_eq!(substitute(&g, &SubstLabeling::on_globe(&p)).unwrap(), p);
            }
        }
    }
}
