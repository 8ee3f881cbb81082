//! Simplicial complexes on small vertex sets.
//!
//! Vertices are `0..m` internally and 1-based at every public boundary that
//! takes or returns plain vertex numbers. Faces are bitmasks ([`VertexSet`]),
//! which caps a complex at [`MAX_VERTICES`] vertices.

mod generators;
mod wedge;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use generators::{cyclic_boundary, ngon, simplex_boundary};
pub use wedge::{KjVertex, WedgeVector, MAX_BASE_VERTICES, MAX_WEDGE_TOTAL};

/// Hard cap imposed by the bitmask representation.
pub const MAX_VERTICES: usize = 28;

/// A set of (0-based) vertices stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    /// All vertices `0..m`.
    pub fn full(m: usize) -> Self {
        if m >= 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << m) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(it.into_iter().fold(0, |acc, v| acc | (1 << v)))
    }

    /// Converts 1-based vertex numbers, checking them against `m`.
    pub fn from_one_based(vertices: &[usize], m: usize) -> Result<Self> {
        let mut bits = 0u32;
        for &v in vertices {
            if v == 0 || v > m {
                return Err(Error::VertexOutOfRange { vertex: v, m });
            }
            bits |= 1 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn insert(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn remove(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Ascending 0-based vertices.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }
}

impl Ord for VertexSet {
    /// Lexicographic order of the ascending vertex lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.to_one_based()).finish()
    }
}

/// A pure simplicial complex given by its facets.
///
/// Values built through [`SimplicialComplex::from_facets`] are validated
/// as pure pseudomanifolds without unused vertices; this is the only
/// sphere-likeness the crate checks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    m: usize,
    n: usize,
    facets: Vec<VertexSet>,
}

/// On-disk form: `{"m": 6, "facets": [[1,2],[2,3],...]}` with 1-based vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub m: usize,
    pub facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds and validates a complex from 1-based facets.
    pub fn from_facets(m: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let k = Self::pure(m, facets)?;
        k.validate()?;
        Ok(k)
    }

    /// Builds a pure complex without the pseudomanifold and vertex-usage
    /// checks. Joins with non-spheres and other intermediate objects go
    /// through here.
    pub fn pure(m: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyInput("facet list"));
        }
        if m > MAX_VERTICES {
            return Err(Error::SizeLimit(format!(
                "{m} vertices, at most {MAX_VERTICES} supported"
            )));
        }
        let n = facets[0].len();
        let mut masks = Vec::with_capacity(facets.len());
        for f in facets {
            let mask = VertexSet::from_one_based(f, m)?;
            if mask.len() != f.len() || f.len() != n {
                let mut sorted = f.clone();
                sorted.sort_unstable();
                return Err(Error::NotPure {
                    facet: sorted,
                    expected: n,
                    found: mask.len(),
                });
            }
            masks.push(mask);
        }
        Self::from_masks(m, masks)
    }

    /// Builds from 0-based masks; checks purity and duplicates only.
    pub(crate) fn from_masks(m: usize, mut facets: Vec<VertexSet>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyInput("facet list"));
        }
        let n = facets[0].len();
        if let Some(bad) = facets.iter().find(|f| f.len() != n) {
            return Err(Error::NotPure {
                facet: bad.to_one_based(),
                expected: n,
                found: bad.len(),
            });
        }
        facets.sort();
        if let Some(w) = facets.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateFacet(w[0].to_one_based()));
        }
        Ok(SimplicialComplex { m, n, facets })
    }

    /// Pseudomanifold and vertex-usage checks.
    pub fn validate(&self) -> Result<()> {
        let mut ridges: HashMap<VertexSet, usize> = HashMap::new();
        for &f in &self.facets {
            for v in f.iter() {
                *ridges.entry(f.remove(v)).or_default() += 1;
            }
        }
        let mut bad: Vec<_> = ridges.into_iter().filter(|&(_, c)| c != 2).collect();
        bad.sort();
        if let Some((ridge, count)) = bad.into_iter().next() {
            return Err(Error::NotPseudomanifold {
                ridge: ridge.to_one_based(),
                count,
            });
        }
        let used = self.vertex_set();
        if let Some(v) = (0..self.m).find(|&v| !used.contains(v)) {
            return Err(Error::UnusedVertex(v + 1));
        }
        Ok(())
    }

    pub fn from_file(file: &ComplexFile) -> Result<Self> {
        Self::from_facets(file.m, &file.facets)
    }

    pub fn to_file(&self) -> ComplexFile {
        ComplexFile {
            m: self.m,
            facets: self.facets.iter().map(|f| f.to_one_based()).collect(),
        }
    }

    /// Number of vertices.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Facet cardinality (dimension + 1).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn picard(&self) -> usize {
        self.m - self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facets_one_based(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.to_one_based()).collect()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |a, &f| a.union(f))
    }

    pub fn is_face(&self, s: VertexSet) -> bool {
        self.facets.iter().any(|&f| s.is_subset(f))
    }

    /// The facet used to pin enumerations: smallest in lexicographic order.
    pub fn first_facet(&self) -> VertexSet {
        self.facets[0]
    }

    /// Link of a face, re-indexed onto its own vertex set.
    pub fn link(&self, sigma: VertexSet) -> Result<Link> {
        if !self.is_face(sigma) {
            return Err(Error::NotAFace(sigma.to_one_based()));
        }
        let pieces: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|&&f| sigma.is_subset(f))
            .map(|&f| f.difference(sigma))
            .collect();
        let support = pieces.iter().fold(VertexSet::EMPTY, |a, &p| a.union(p));
        let vertices = support.to_vec();
        let relabel = |s: VertexSet| {
            VertexSet::from_indices(s.iter().map(|v| {
                vertices
                    .iter()
                    .position(|&w| w == v)
                    .expect("support vertex")
            }))
        };
        let facets = pieces.into_iter().map(relabel).collect();
        let complex = Self::from_masks(vertices.len(), facets)?;
        Ok(Link { complex, vertices })
    }

    /// Join with a second complex whose vertices are shifted past ours.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let m = self.m + other.m;
        if m > MAX_VERTICES {
            return Err(Error::SizeLimit(format!("join has {m} vertices")));
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &a in &self.facets {
            for &b in &other.facets {
                facets.push(VertexSet(a.0 | b.0 << self.m));
            }
        }
        Self::from_masks(m, facets)
    }

    /// All inclusion-minimal non-faces.
    ///
    /// Depth-first over faces in increasing vertex order; a non-face is
    /// never extended because its supersets cannot be minimal.
    pub fn minimal_non_faces(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.mnf_search(VertexSet::EMPTY, 0, &mut out);
        out.sort();
        out
    }

    fn mnf_search(&self, face: VertexSet, start: usize, out: &mut Vec<VertexSet>) {
        for v in start..self.m {
            let s = face.insert(v);
            if self.is_face(s) {
                self.mnf_search(s, v + 1, out);
            } else if s.iter().all(|u| self.is_face(s.remove(u))) {
                out.push(s);
            }
        }
    }

    /// Seed status: looks for a pair `{v, w}` meeting every facet.
    pub fn seed_report(&self) -> SeedReport {
        let mut wedge = None;
        let mut suspension = None;
        for v in 0..self.m {
            for w in v + 1..self.m {
                let pair = VertexSet::from_indices([v, w]);
                if self.facets.iter().all(|f| !f.intersection(pair).is_empty()) {
                    let kind = if self.is_face(pair) {
                        DecompositionKind::Wedge
                    } else {
                        DecompositionKind::Suspension
                    };
                    let d = Decomposition {
                        v: v + 1,
                        w: w + 1,
                        kind,
                    };
                    match kind {
                        DecompositionKind::Wedge if wedge.is_none() => wedge = Some(d),
                        DecompositionKind::Suspension if suspension.is_none() => {
                            suspension = Some(d)
                        }
                        _ => {}
                    }
                }
            }
        }
        SeedReport {
            is_seed: wedge.is_none(),
            witness: wedge.or(suspension),
        }
    }

    pub fn is_seed(&self) -> bool {
        self.seed_report().is_seed
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("m", &self.m)
            .field("n", &self.n)
            .field("facets", &self.facets)
            .finish()
    }
}

/// A link together with the original (0-based) vertex behind each of its
/// vertices.
#[derive(Clone, Debug)]
pub struct Link {
    pub complex: SimplicialComplex,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompositionKind {
    /// `{v, w}` is a face: the complex is a wedge.
    Wedge,
    /// `{v, w}` is not a face: the complex is a suspension `L * ∂I`.
    Suspension,
}

/// A pair of 1-based vertices meeting every facet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub v: usize,
    pub w: usize,
    pub kind: DecompositionKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeedReport {
    pub is_seed: bool,
    /// A wedge witness for non-seeds; a suspension witness, if any, for seeds.
    pub witness: Option<Decomposition>,
}

impl SeedReport {
    pub fn suspension(&self) -> Option<Decomposition> {
        self.witness
            .filter(|d| d.kind == DecompositionKind::Suspension)
    }
}

/// Two complexes are equal as labeled complexes iff their facet sets agree.
pub fn same_facets(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    a.m == b.m && a.facets == b.facets
}

/// Isomorphism test by brute force over vertex bijections; only meant for
/// the small complexes used in checks.
pub fn isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    if a.m != b.m || a.n != b.n || a.facets.len() != b.facets.len() {
        return false;
    }
    let target: std::collections::HashSet<VertexSet> = b.facets.iter().copied().collect();
    let mut perm: Vec<usize> = Vec::with_capacity(a.m);
    let mut used = vec![false; a.m];
    fn go(
        a: &SimplicialComplex,
        target: &std::collections::HashSet<VertexSet>,
        perm: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let k = perm.len();
        // prune: every facet of `a` inside the assigned prefix must map into `b`
        let prefix = VertexSet::full(k);
        for &f in &a.facets {
            if f.is_subset(prefix) && f.iter().any(|v| v + 1 == k) {
                let img = VertexSet::from_indices(f.iter().map(|v| perm[v]));
                if !target.contains(&img) {
                    return false;
                }
            }
        }
        if k == a.m {
            return true;
        }
        for t in 0..a.m {
            if !used[t] {
                used[t] = true;
                perm.push(t);
                if go(a, target, perm, used) {
                    return true;
                }
                perm.pop();
                used[t] = false;
            }
        }
        false
    }
    go(a, &target, &mut perm, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagon() -> SimplicialComplex {
        ngon(5).unwrap()
    }

    #[test]
    fn pentagon_from_facets() {
        let k = SimplicialComplex::from_facets(
            5,
            &[vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![1, 5]],
        )
        .unwrap();
        assert_eq!(k.n(), 2);
        assert_eq!(k, pentagon());
    }

    #[test]
    fn mixed_facet_sizes_are_not_pure() {
        let err =
            SimplicialComplex::from_facets(4, &[vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 4, 2]])
                .unwrap_err();
        assert!(matches!(err, Error::NotPure { .. }));
        let err =
            SimplicialComplex::from_facets(4, &[vec![1, 2], vec![1, 3], vec![2, 3, 4], vec![1, 4]])
                .unwrap_err();
        assert!(matches!(err, Error::NotPure { .. }));
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            SimplicialComplex::from_facets(3, &[]),
            Err(Error::EmptyInput(_))
        ));
        // path, not a cycle
        assert!(matches!(
            SimplicialComplex::from_facets(3, &[vec![1, 2], vec![2, 3]]),
            Err(Error::NotPseudomanifold { .. })
        ));
        assert!(matches!(
            SimplicialComplex::from_facets(4, &[vec![1, 2], vec![2, 3], vec![1, 3]]),
            Err(Error::UnusedVertex(4))
        ));
        assert!(matches!(
            SimplicialComplex::from_facets(3, &[vec![1, 4], vec![2, 3]]),
            Err(Error::VertexOutOfRange { vertex: 4, m: 3 })
        ));
    }

    #[test]
    fn links() {
        let k = pentagon();
        let l = k.link(VertexSet::singleton(0)).unwrap();
        assert_eq!(l.vertices, vec![1, 4]);
        assert_eq!(l.complex.facets_one_based(), vec![vec![1], vec![2]]);
        let whole = k.link(VertexSet::EMPTY).unwrap();
        assert!(same_facets(&whole.complex, &k));
        assert!(matches!(
            k.link(VertexSet::from_indices([0, 2])),
            Err(Error::NotAFace(_))
        ));
    }

    #[test]
    fn joins() {
        let i = simplex_boundary(1).unwrap();
        let square = i.join(&i).unwrap();
        square.validate().unwrap();
        assert!(isomorphic(&square, &ngon(4).unwrap()));

        let t = simplex_boundary(2).unwrap();
        let pic2 = i.join(&t).unwrap();
        pic2.validate().unwrap();
        assert_eq!((pic2.m(), pic2.n(), pic2.picard()), (5, 3, 2));

        let point = SimplicialComplex::pure(1, &[vec![1]]).unwrap();
        let cone = pentagon().join(&point).unwrap();
        assert!(cone.validate().is_err());
    }

    #[test]
    fn minimal_non_faces_small() {
        let mnf: Vec<_> = pentagon()
            .minimal_non_faces()
            .into_iter()
            .map(|s| s.to_one_based())
            .collect();
        assert_eq!(
            mnf,
            vec![vec![1, 3], vec![1, 4], vec![2, 4], vec![2, 5], vec![3, 5]]
        );
        let hex: Vec<_> = ngon(6)
            .unwrap()
            .minimal_non_faces()
            .into_iter()
            .map(|s| s.to_one_based())
            .collect();
        assert_eq!(
            hex,
            vec![
                vec![1, 3],
                vec![1, 4],
                vec![1, 5],
                vec![2, 4],
                vec![2, 5],
                vec![2, 6],
                vec![3, 5],
                vec![3, 6],
                vec![4, 6]
            ]
        );
        for d in 1..6 {
            let mnf = simplex_boundary(d).unwrap().minimal_non_faces();
            assert_eq!(mnf, vec![VertexSet::full(d + 1)]);
        }
    }

    #[test]
    fn picard_numbers() {
        assert_eq!(ngon(6).unwrap().picard(), 4);
        assert_eq!(cyclic_boundary(4, 7).unwrap().picard(), 3);
        assert_eq!(simplex_boundary(3).unwrap().picard(), 1);
    }

    #[test]
    fn seeds() {
        assert!(cyclic_boundary(4, 7).unwrap().is_seed());
        let tri = simplex_boundary(2).unwrap().seed_report();
        assert!(!tri.is_seed);
        assert_eq!(tri.witness.unwrap().kind, DecompositionKind::Wedge);
        let sq = ngon(4).unwrap().seed_report();
        assert!(sq.is_seed);
        assert_eq!(
            sq.suspension(),
            Some(Decomposition {
                v: 1,
                w: 3,
                kind: DecompositionKind::Suspension
            })
        );
        assert!(ngon(5).unwrap().seed_report().witness.is_none());
        assert!(ngon(6).unwrap().seed_report().witness.is_none());
    }

    #[test]
    fn vertex_set_order_is_lexicographic() {
        let a = VertexSet::from_indices([0, 3]);
        let b = VertexSet::from_indices([1, 2]);
        let c = VertexSet::from_indices([0, 1, 5]);
        assert!(a < b);
        assert!(c < a);
    }
}
