//! Pre-diagrams (D-J classes joined by colored edges) and diagrams (plus
//! realizable squares).

mod edge;
mod marked_row;
mod square;

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use edge::{edge_exists, edge_lift, edge_row};
pub use marked_row::{lambda_power, marked_row_compose, Composition, MarkedRow};
pub use square::{
    build_diagram, square_corner, square_realizable, Diagram, DiagramFile, RealizableSquare,
};

use crate::charmap::{enumerate_z2, CharMatrix, CharMatrixFile, Ring};
use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

/// An edge `{a, b, color}` with `a < b`; `row` is centered at `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramEdge {
    pub a: usize,
    pub b: usize,
    /// 0-based color.
    pub color: usize,
    pub row: MarkedRow,
}

#[derive(Clone, Debug)]
pub struct PreDiagram {
    complex: SimplicialComplex,
    ring: Ring,
    classes: Vec<CharMatrix>,
    index: HashMap<CharMatrix, usize>,
    edges: Vec<DiagramEdge>,
    /// `neighbors[c][v]`: classes joined to `c` by a non-loop edge colored `v`.
    neighbors: Vec<Vec<Vec<usize>>>,
    /// Reduced rows keyed by `(from, to, color)`, both orientations.
    rows: HashMap<(usize, usize, usize), MarkedRow>,
}

/// Pre-diagram over `Z2`, from the full class list.
pub fn build_prediagram(k: &SimplicialComplex, ring: Ring) -> Result<PreDiagram> {
    match ring {
        Ring::Z2 => {
            let classes = enumerate_z2(k)?.into_iter().map(|c| c.canonical).collect();
            PreDiagram::from_classes(k, classes)
        }
        Ring::Z => Err(Error::InvalidArgument(
            "over z the pre-diagram needs an explicit class list".into(),
        )),
    }
}

impl PreDiagram {
    /// Pre-diagram on a given list of characteristic maps (any ring).
    /// Classes are canonicalized, deduplicated and sorted.
    pub fn from_classes(k: &SimplicialComplex, classes: Vec<CharMatrix>) -> Result<Self> {
        let ring = match classes.first() {
            Some(c) => c.ring(),
            None => return Err(Error::EmptyInput("class list")),
        };
        let mut canon = Vec::with_capacity(classes.len());
        for c in &classes {
            if c.ring() != ring {
                return Err(Error::WrongRing {
                    expected: ring.name(),
                    found: c.ring().name(),
                });
            }
            if !c.is_characteristic(k)? {
                return Err(Error::InvalidArgument(format!(
                    "{c} is not characteristic over the complex"
                )));
            }
            canon.push(c.canonical()?);
        }
        canon.sort();
        canon.dedup();
        let m = k.m();
        let prs: Vec<Vec<CharMatrix>> = canon
            .par_iter()
            .map(|c| (0..m).map(|v| c.pr_matrix(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        let mut pairs = BTreeSet::new();
        for v in 0..m {
            let mut groups: HashMap<&CharMatrix, Vec<usize>> = HashMap::new();
            for (c, pr) in prs.iter().enumerate() {
                groups.entry(&pr[v]).or_default().push(c);
            }
            for g in groups.values() {
                for (i, &a) in g.iter().enumerate() {
                    for &b in &g[i + 1..] {
                        pairs.insert((a, b, v));
                    }
                }
            }
        }
        let pairs: Vec<(usize, usize, usize)> = pairs.into_iter().collect();
        let computed: Vec<(MarkedRow, MarkedRow)> = pairs
            .par_iter()
            .map(|&(a, b, v)| {
                let ab = edge_row(&canon[a], &canon[b], v)?;
                let ba = edge_row(&canon[b], &canon[a], v)?;
                if lambda_power(&canon[a], &ab)? != canon[b] || lambda_power(&canon[b], &ba)? != canon[a] {
                    return Err(Error::InvariantViolation(format!(
                        "edge row between classes {a} and {b} at color {} does not reach its endpoint",
                        v + 1
                    )));
                }
                Ok((ab, ba))
            })
            .collect::<Result<_>>()?;
        let mut neighbors = vec![vec![Vec::new(); m]; canon.len()];
        let mut rows = HashMap::with_capacity(2 * pairs.len());
        let mut edges = Vec::with_capacity(pairs.len());
        for (&(a, b, v), (ab, ba)) in pairs.iter().zip(computed) {
            neighbors[a][v].push(b);
            neighbors[b][v].push(a);
            rows.insert((a, b, v), ab.clone());
            rows.insert((b, a, v), ba);
            edges.push(DiagramEdge {
                a,
                b,
                color: v,
                row: ab,
            });
        }
        for per_color in &mut neighbors {
            for list in per_color {
                list.sort_unstable();
            }
        }
        let index = canon
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        Ok(PreDiagram {
            complex: k.clone(),
            ring,
            classes: canon,
            index,
            edges,
            neighbors,
            rows,
        })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn classes(&self) -> &[CharMatrix] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &CharMatrix {
        &self.classes[i]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class of `m` (any representative).
    pub fn index_of(&self, m: &CharMatrix) -> Option<usize> {
        let c = m.canonical().ok()?;
        self.index.get(&c).copied()
    }

    /// Index of an already canonical matrix.
    pub fn index_of_canonical(&self, m: &CharMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Non-loop edges, sorted by `(a, b, color)`.
    pub fn edges(&self) -> &[DiagramEdge] {
        &self.edges
    }

    /// Loops count as edges.
    pub fn has_edge(&self, a: usize, b: usize, color: usize) -> bool {
        a == b || self.rows.contains_key(&(a, b, color))
    }

    /// Non-loop neighbors of `c` along `color`.
    pub fn neighbors(&self, c: usize, color: usize) -> &[usize] {
        &self.neighbors[c][color]
    }

    /// `c` itself (the loop) followed by its neighbors along `color`.
    pub fn incident(&self, c: usize, color: usize) -> Vec<usize> {
        std::iter::once(c)
            .chain(self.neighbors[c][color].iter().copied())
            .collect()
    }

    /// Colors of the edges joining `a` and `b` (all colors when `a == b`).
    pub fn colors_between(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.complex.m())
            .filter(|&v| self.has_edge(a, b, v))
            .collect()
    }

    /// Reduced row of the edge `from → to` colored `color`, centered at
    /// `from`; the zero row for a loop.
    pub fn row(&self, from: usize, to: usize, color: usize) -> Result<MarkedRow> {
        if from == to {
            return Ok(MarkedRow::zero(self.ring, self.complex.m(), color));
        }
        self.rows
            .get(&(from, to, color))
            .cloned()
            .ok_or_else(|| Error::NoEdge {
                between: format!("classes {from} and {to}"),
                color: color + 1,
            })
    }

    pub(crate) fn row_ref(&self, from: usize, to: usize, color: usize) -> Option<&MarkedRow> {
        self.rows.get(&(from, to, color))
    }

    pub fn to_file(&self) -> PreDiagramFile {
        PreDiagramFile {
            classes: self.classes.iter().map(|c| c.to_file(None)).collect(),
            edges: self.edge_records(),
        }
    }

    pub(crate) fn edge_records(&self) -> Vec<EdgeRecord> {
        self.edges
            .iter()
            .map(|e| EdgeRecord {
                a: e.a,
                b: e.b,
                color: e.color + 1,
            })
            .collect()
    }

    /// Rebuilds from a class list and checks the stored edges.
    pub fn from_file(k: &SimplicialComplex, file: &PreDiagramFile) -> Result<Self> {
        Self::from_records(k, &file.classes, &file.edges)
    }

    pub(crate) fn from_records(
        k: &SimplicialComplex,
        classes: &[CharMatrixFile],
        edges: &[EdgeRecord],
    ) -> Result<Self> {
        let mats = classes
            .iter()
            .map(CharMatrix::from_file)
            .collect::<Result<Vec<_>>>()?;
        let n = mats.len();
        let pre = Self::from_classes(k, mats.clone())?;
        if pre.len() != n || pre.classes.iter().zip(&mats).any(|(a, b)| a != b) {
            return Err(Error::Format(
                "class list is not canonical, sorted and duplicate-free".into(),
            ));
        }
        if pre.edge_records() != edges {
            return Err(Error::Format(
                "stored edges disagree with the class list".into(),
            ));
        }
        Ok(pre)
    }

    /// Graphviz rendering: one node per class, one labeled edge per
    /// colored edge.
    pub fn to_dot(&self) -> String {
        self.dot_with(&[])
    }

    pub(crate) fn dot_with(&self, squares: &[RealizableSquare]) -> String {
        let mut s = String::from("graph diagram {\n  node [shape=box, fontname=\"monospace\"];\n");
        for (i, c) in self.classes.iter().enumerate() {
            let _ = writeln!(s, "  c{i} [label=\"{i}: {c}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(s, "  c{} -- c{} [label=\"{}\"];", e.a, e.b, e.color + 1);
        }
        for q in squares {
            let [a, b, c, d] = q.corners;
            let _ = writeln!(
                s,
                "  // square {a} {b} {c} {d} colors {} {}",
                q.v + 1,
                q.w + 1
            );
        }
        s.push_str("}\n");
        s
    }
}

/// An edge in the JSON form, with a 1-based color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub a: usize,
    pub b: usize,
    pub color: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreDiagramFile {
    pub classes: Vec<CharMatrixFile>,
    pub edges: Vec<EdgeRecord>,
}
