//! Simplicial wedges and the iterated wedge `K(J)`.
//!
//! Vertices of `K(J)` are ordered `1_1, …, 1_{j_1}, 2_1, …, m_{j_m}`; a
//! [`WedgeVector`] translates between that order and `(base, copy)` pairs.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{SimplicialComplex, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

pub const MAX_BASE_VERTICES: usize = 24;
pub const MAX_WEDGE_TOTAL: usize = MAX_VERTICES;

/// Multiplicities `(j_1, …, j_m)`, all at least 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct WedgeVector {
    j: Vec<usize>,
    offsets: Vec<usize>,
}

impl WedgeVector {
    pub fn new(j: Vec<usize>) -> Result<Self> {
        if j.is_empty() {
            return Err(Error::EmptyInput("wedge vector"));
        }
        if let Some(p) = j.iter().position(|&x| x == 0) {
            return Err(Error::InvalidArgument(format!(
                "wedge vector entry {} is 0; entries must be >= 1",
                p + 1
            )));
        }
        let mut offsets = Vec::with_capacity(j.len() + 1);
        let mut acc = 0usize;
        for &x in &j {
            offsets.push(acc);
            acc = acc.saturating_add(x);
        }
        offsets.push(acc);
        Ok(WedgeVector { j, offsets })
    }

    pub fn ones(m: usize) -> Self {
        Self::new(vec![1; m]).expect("nonempty")
    }

    /// `J` with 2 at the (0-based) vertices in `at` and 1 elsewhere.
    pub fn twos_at(m: usize, at: &[usize]) -> Self {
        let mut j = vec![1; m];
        for &v in at {
            j[v] = 2;
        }
        Self::new(j).expect("valid")
    }

    /// Parses `2,3,1,1`.
    pub fn parse(s: &str) -> Result<Self> {
        let j = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("bad wedge vector entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(j)
    }

    pub fn check_len(&self, m: usize) -> Result<()> {
        if self.j.len() != m {
            return Err(Error::DimensionMismatch(format!(
                "wedge vector has {} entries, complex has {m} vertices",
                self.j.len()
            )));
        }
        Ok(())
    }

    pub fn entries(&self) -> &[usize] {
        &self.j
    }

    pub fn len(&self) -> usize {
        self.j.len()
    }

    pub fn is_empty(&self) -> bool {
        self.j.is_empty()
    }

    pub fn get(&self, v: usize) -> usize {
        self.j[v]
    }

    /// `Σ j_i`, the vertex count of `K(J)`.
    pub fn total(&self) -> usize {
        self.offsets[self.j.len()]
    }

    /// `Σ (j_i − 1)`, the number of extra rows/columns in `K(J)`.
    pub fn excess(&self) -> usize {
        self.total() - self.j.len()
    }

    /// `Π j_i`, the number of board vertices.
    pub fn board_size(&self) -> usize {
        self.j.iter().fold(1usize, |a, &x| a.saturating_mul(x))
    }

    /// Column of the 0-based `copy` of the 0-based `base` vertex.
    pub fn column(&self, base: usize, copy: usize) -> usize {
        debug_assert!(copy < self.j[base]);
        self.offsets[base] + copy
    }

    pub fn vertex(&self, column: usize) -> KjVertex {
        let base = self.offsets.partition_point(|&o| o <= column) - 1;
        KjVertex {
            base,
            copy: column - self.offsets[base],
        }
    }

    /// All copies of `base`.
    pub fn copies(&self, base: usize) -> VertexSet {
        VertexSet::from_indices(self.offsets[base]..self.offsets[base + 1])
    }

    /// Human-readable column label, `3` when `j_3 = 1`, `2_1` otherwise.
    pub fn label(&self, column: usize) -> String {
        self.vertex(column).label(self)
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.total()).map(|c| self.label(c)).collect()
    }

    /// `σ(α) = all copies minus {1_{α_1}, …, m_{α_m}}`, for a 1-based index.
    pub fn sigma_face(&self, alpha: &[usize]) -> Result<VertexSet> {
        if alpha.len() != self.j.len() {
            return Err(Error::DimensionMismatch(format!(
                "index has {} entries, wedge vector {}",
                alpha.len(),
                self.j.len()
            )));
        }
        let mut s = VertexSet::full(self.total());
        for (v, &a) in alpha.iter().enumerate() {
            if a == 0 || a > self.j[v] {
                return Err(Error::InvalidArgument(format!(
                    "index entry {a} at position {} outside 1..={}",
                    v + 1,
                    self.j[v]
                )));
            }
            s = s.remove(self.column(v, a - 1));
        }
        Ok(s)
    }

    /// The copies `{1_{α_1}, …, m_{α_m}}` left over by `σ(α)`, in base order.
    pub fn transversal(&self, alpha0: &[usize]) -> Vec<usize> {
        alpha0
            .iter()
            .enumerate()
            .map(|(v, &a)| self.column(v, a))
            .collect()
    }
}

impl TryFrom<Vec<usize>> for WedgeVector {
    type Error = Error;
    fn try_from(j: Vec<usize>) -> Result<Self> {
        Self::new(j)
    }
}

impl From<WedgeVector> for Vec<usize> {
    fn from(w: WedgeVector) -> Vec<usize> {
        w.j
    }
}

impl fmt::Debug for WedgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "J{:?}", self.j)
    }
}

/// A vertex `base_copy` of `K(J)`, both 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KjVertex {
    pub base: usize,
    pub copy: usize,
}

impl KjVertex {
    pub fn label(&self, j: &WedgeVector) -> String {
        if j.get(self.base) == 1 {
            format!("{}", self.base + 1)
        } else {
            format!("{}_{}", self.base + 1, self.copy + 1)
        }
    }
}

impl SimplicialComplex {
    /// Simplicial wedge at the 0-based vertex `v`, evaluated from
    /// `(I * link{v}) ∪ (∂I * (K \ v))`. The old `v` becomes `v_1` and the new
    /// vertex `v_2` is inserted right after it.
    pub fn wedge(&self, v: usize) -> Result<SimplicialComplex> {
        if v >= self.m {
            return Err(Error::VertexOutOfRange {
                vertex: v + 1,
                m: self.m,
            });
        }
        if self.m + 1 > MAX_VERTICES {
            return Err(Error::SizeLimit(format!(
                "wedge would have {} vertices",
                self.m + 1
            )));
        }
        // shift vertices above v by one to make room for v_2 = v + 1
        let shift = |s: VertexSet| {
            let low = s.0 & ((1u32 << (v + 1)) - 1);
            let high = s.0 >> (v + 1) << (v + 2);
            VertexSet(low | high)
        };
        let (v1, v2) = (v, v + 1);
        let mut facets = Vec::new();
        for &f in &self.facets {
            if f.contains(v) {
                // I * link{v}
                facets.push(shift(f.remove(v)).insert(v1).insert(v2));
            } else {
                // ∂I * (K \ v): facets of K avoiding v stay maximal there
                facets.push(shift(f).insert(v1));
                facets.push(shift(f).insert(v2));
            }
        }
        let facets = maximal_only(facets);
        SimplicialComplex::from_masks(self.m + 1, facets)
    }

    /// `K(J)` from its minimal non-faces: a set is a face iff the base
    /// vertices it contains with every copy form a face of `K`. Facets are
    /// extracted as maximal faces by depth-first search.
    pub fn expand(&self, j: &WedgeVector) -> Result<SimplicialComplex> {
        self.check_wedge(j)?;
        let total = j.total();
        let full_base = |s: VertexSet| {
            VertexSet::from_indices((0..self.m).filter(|&b| j.copies(b).is_subset(s)))
        };
        let is_face = |s: VertexSet| self.is_face(full_base(s));
        let mut facets = Vec::new();
        let mut stack = vec![(VertexSet::EMPTY, 0usize)];
        while let Some((s, start)) = stack.pop() {
            let mut maximal = true;
            for x in 0..total {
                if s.contains(x) {
                    continue;
                }
                let t = s.insert(x);
                if is_face(t) {
                    maximal = false;
                    if x >= start {
                        stack.push((t, x + 1));
                    }
                }
            }
            if maximal {
                facets.push(s);
            }
        }
        SimplicialComplex::from_masks(total, facets)
    }

    /// Facets of `K(J)` directly: for a facet `τ` of `K` and a choice of one
    /// copy `c_i` for each `i ∉ τ`, all copies minus those choices.
    pub fn facets_of_kj(&self, j: &WedgeVector) -> Result<Vec<VertexSet>> {
        self.check_wedge(j)?;
        let all = VertexSet::full(j.total());
        let mut out = Vec::new();
        for &tau in &self.facets {
            let outside: Vec<usize> = (0..self.m).filter(|&i| !tau.contains(i)).collect();
            let mut choice = vec![0usize; outside.len()];
            loop {
                let removed = VertexSet::from_indices(
                    outside.iter().zip(&choice).map(|(&i, &c)| j.column(i, c)),
                );
                out.push(all.difference(removed));
                // odometer
                let mut k = 0;
                while k < outside.len() {
                    choice[k] += 1;
                    if choice[k] < j.get(outside[k]) {
                        break;
                    }
                    choice[k] = 0;
                    k += 1;
                }
                if k == outside.len() {
                    break;
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// `K(J)` through [`Self::facets_of_kj`].
    pub fn expand_fast(&self, j: &WedgeVector) -> Result<SimplicialComplex> {
        let facets = self.facets_of_kj(j)?;
        SimplicialComplex::from_masks(j.total(), facets)
    }

    pub(crate) fn check_wedge(&self, j: &WedgeVector) -> Result<()> {
        j.check_len(self.m)?;
        if self.m > MAX_BASE_VERTICES {
            return Err(Error::SizeLimit(format!(
                "{} base vertices, at most {MAX_BASE_VERTICES}",
                self.m
            )));
        }
        if j.total() > MAX_WEDGE_TOTAL {
            return Err(Error::SizeLimit(format!(
                "sum of J is {}, at most {MAX_WEDGE_TOTAL}",
                j.total()
            )));
        }
        Ok(())
    }
}

fn maximal_only(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort();
    sets.dedup();
    let keep: Vec<bool> = sets
        .iter()
        .map(|&a| !sets.iter().any(|&b| b != a && a.is_subset(b)))
        .collect();
    sets.into_iter()
        .zip(keep)
        .filter_map(|(s, k)| k.then_some(s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{isomorphic, ngon, same_facets, simplex_boundary};

    fn one_based(k: &SimplicialComplex) -> Vec<Vec<usize>> {
        k.facets_one_based()
    }

    #[test]
    fn pentagon_wedge_facets() {
        let w = ngon(5).unwrap().wedge(0).unwrap();
        // columns: 1_1=1, 1_2=2, 2=3, 3=4, 4=5, 5=6
        let mut expected = vec![
            vec![1, 2, 3],
            vec![1, 2, 6],
            vec![1, 3, 4],
            vec![1, 4, 5],
            vec![1, 5, 6],
            vec![2, 3, 4],
            vec![2, 4, 5],
            vec![2, 5, 6],
        ];
        expected.sort();
        assert_eq!(one_based(&w), expected);
        w.validate().unwrap();
    }

    #[test]
    fn wedge_of_two_points_is_triangle() {
        let w = simplex_boundary(1).unwrap().wedge(0).unwrap();
        assert_eq!(w, simplex_boundary(2).unwrap());
    }

    #[test]
    fn expand_identity_and_single_wedge() {
        let p = ngon(5).unwrap();
        assert!(same_facets(&p.expand(&WedgeVector::ones(5)).unwrap(), &p));
        for v in 0..5 {
            let j = WedgeVector::twos_at(5, &[v]);
            assert_eq!(p.expand(&j).unwrap(), p.wedge(v).unwrap());
        }
    }

    #[test]
    fn hexagon_2_3_expansion() {
        let h = ngon(6).unwrap();
        let j = WedgeVector::new(vec![2, 3, 1, 1, 1, 1]).unwrap();
        let kj = h.expand(&j).unwrap();
        assert_eq!((kj.m(), kj.n()), (9, 5));
        kj.validate().unwrap();
        assert_eq!(kj.facets(), h.facets_of_kj(&j).unwrap().as_slice());
        assert_eq!(kj.facets().len(), 24);
        assert_eq!(kj.minimal_non_faces().len(), h.minimal_non_faces().len());
    }

    #[test]
    fn fast_path_counts() {
        let p = ngon(5).unwrap();
        let j = WedgeVector::twos_at(5, &[0]);
        assert_eq!(p.facets_of_kj(&j).unwrap().len(), 8);
        assert_eq!(
            p.facets_of_kj(&WedgeVector::ones(5)).unwrap(),
            p.facets().to_vec()
        );
    }

    #[test]
    fn sigma_faces() {
        let j = WedgeVector::new(vec![2, 3, 1, 1, 1, 1]).unwrap();
        let s = j.sigma_face(&[1, 1, 1, 1, 1, 1]).unwrap();
        let labels: Vec<String> = s.iter().map(|c| j.label(c)).collect();
        assert_eq!(labels, vec!["1_2", "2_2", "2_3"]);
        let s = j.sigma_face(&[2, 3, 1, 1, 1, 1]).unwrap();
        let labels: Vec<String> = s.iter().map(|c| j.label(c)).collect();
        assert_eq!(labels, vec!["1_1", "2_1", "2_2"]);
        assert!(WedgeVector::ones(4)
            .sigma_face(&[1, 1, 1, 1])
            .unwrap()
            .is_empty());
        assert!(j.sigma_face(&[3, 1, 1, 1, 1, 1]).is_err());
    }

    #[test]
    fn sigma_face_links_are_the_base() {
        let h = ngon(6).unwrap();
        let j = WedgeVector::new(vec![2, 3, 1, 1, 1, 1]).unwrap();
        let kj = h.expand_fast(&j).unwrap();
        for a in 1..=2 {
            for b in 1..=3 {
                let s = j.sigma_face(&[a, b, 1, 1, 1, 1]).unwrap();
                let link = kj.link(s).unwrap();
                // natural identification: the i-th link vertex is a copy of base i
                let bases: Vec<usize> = link.vertices.iter().map(|&c| j.vertex(c).base).collect();
                assert_eq!(bases, (0..6).collect::<Vec<_>>());
                assert!(same_facets(&link.complex, &h));
            }
        }
    }

    #[test]
    fn wedge_links_recover_base() {
        for k in [
            ngon(5).unwrap(),
            simplex_boundary(3).unwrap(),
            ngon(4).unwrap(),
        ] {
            for v in 0..k.m() {
                let w = k.wedge(v).unwrap();
                for copy in [v, v + 1] {
                    let l = w.link(VertexSet::singleton(copy)).unwrap();
                    assert!(isomorphic(&l.complex, &k));
                }
            }
        }
    }

    #[test]
    fn wedge_vector_parsing() {
        let j = WedgeVector::parse("2, 3,1").unwrap();
        assert_eq!(j.entries(), &[2, 3, 1]);
        assert_eq!((j.total(), j.excess(), j.board_size()), (6, 3, 6));
        assert!(WedgeVector::parse("2,0").is_err());
        assert!(WedgeVector::parse("a").is_err());
        assert_eq!(j.vertex(4), KjVertex { base: 1, copy: 2 });
        assert_eq!(j.label(5), "3");
    }

    #[test]
    fn size_limits_are_enforced() {
        let h = ngon(6).unwrap();
        let j = WedgeVector::new(vec![5, 5, 5, 5, 5, 5]).unwrap();
        assert!(matches!(h.expand(&j), Err(Error::SizeLimit(_))));
        assert!(matches!(
            h.expand(&WedgeVector::ones(5)),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
