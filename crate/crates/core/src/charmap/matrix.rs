use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{gf2, zint};
use crate::simplicial::{SimplicialComplex, VertexSet};

/// Coefficient ring of a characteristic matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ring {
    #[serde(rename = "z")]
    Z,
    #[serde(rename = "z2")]
    Z2,
}

impl Ring {
    pub fn name(self) -> &'static str {
        match self {
            Ring::Z => "z",
            Ring::Z2 => "z2",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "z" => Ok(Ring::Z),
            "z2" => Ok(Ring::Z2),
            _ => Err(Error::InvalidArgument(format!(
                "unknown ring {s:?}, expected z or z2"
            ))),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An `n × m` matrix over [`Ring`]; column `i` is the vector assigned to
/// vertex `i`.
///
/// Over `Z2` entries are kept normalized to `0`/`1`. The derived ordering
/// (ring, shape, then row-major entries) is the order used for class lists.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharMatrix {
    ring: Ring,
    nrows: usize,
    ncols: usize,
    entries: Vec<BigInt>,
}

impl CharMatrix {
    pub fn new(ring: Ring, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        if ring == Ring::Z2 && ncols > gf2::MAX_COLS {
            return Err(Error::SizeLimit(format!("{ncols} columns over z2")));
        }
        let mut entries: Vec<BigInt> = rows.into_iter().flatten().collect();
        if ring == Ring::Z2 {
            for e in &mut entries {
                *e = e.mod_floor(&BigInt::from(2));
            }
        }
        Ok(CharMatrix {
            ring,
            nrows,
            ncols,
            entries,
        })
    }

    pub fn from_i64(ring: Ring, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            ring,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn zero(ring: Ring, nrows: usize, ncols: usize) -> Self {
        CharMatrix {
            ring,
            nrows,
            ncols,
            entries: vec![BigInt::zero(); nrows * ncols],
        }
    }

    pub(crate) fn from_gf2_rows(nrows: usize, ncols: usize, rows: &[u64]) -> Self {
        let mut entries = Vec::with_capacity(nrows * ncols);
        for &row in &rows[..nrows] {
            for c in 0..ncols {
                entries.push(BigInt::from((row >> c) & 1));
            }
        }
        CharMatrix {
            ring: Ring::Z2,
            nrows,
            ncols,
            entries,
        }
    }

    pub(crate) fn from_zrows(ncols: usize, rows: zint::Rows) -> Self {
        let nrows = rows.len();
        CharMatrix {
            ring: Ring::Z,
            nrows,
            ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub(crate) fn from_rows_in(ring: Ring, ncols: usize, rows: zint::Rows) -> Self {
        match ring {
            Ring::Z => Self::from_zrows(ncols, rows),
            Ring::Z2 => Self::new(Ring::Z2, rows).expect("rectangular"),
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.ncols + c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.ncols..(r + 1) * self.ncols]
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.nrows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn rows(&self) -> zint::Rows {
        (0..self.nrows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Entries as `i64`, or `None` if some entry does not fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.nrows)
            .map(|r| self.row(r).iter().map(|x| x.to_i64()).collect())
            .collect()
    }

    pub(crate) fn gf2_rows(&self) -> Vec<u64> {
        (0..self.nrows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (c, x)| acc | u64::from(x.is_odd()) << c)
            })
            .collect()
    }

    pub(crate) fn gf2_columns(&self) -> Vec<u64> {
        gf2::columns(&self.gf2_rows(), self.ncols)
    }

    pub fn select_columns(&self, cols: &[usize]) -> CharMatrix {
        let rows = (0..self.nrows)
            .map(|r| cols.iter().map(|&c| self.get(r, c).clone()).collect())
            .collect();
        CharMatrix::from_rows_in(self.ring, cols.len(), rows)
    }

    fn same_ring(&self, other: &CharMatrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::WrongRing {
                expected: self.ring.name(),
                found: other.ring.name(),
            });
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        match self.ring {
            Ring::Z2 => gf2::rank(&self.gf2_rows(), self.ncols),
            Ring::Z => zint::rank(&self.rows(), self.ncols),
        }
    }

    /// Whether `x` is an integer (resp. GF(2)) combination of the rows.
    pub fn row_space_contains(&self, x: &[BigInt]) -> bool {
        assert_eq!(x.len(), self.ncols, "vector length");
        match self.ring {
            Ring::Z2 => {
                let mut rows = self.gf2_rows();
                let pivots = gf2::rref(&mut rows, self.ncols);
                let mut v = x
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (c, e)| acc | u64::from(e.is_odd()) << c);
                for (r, &p) in pivots.iter().enumerate() {
                    if v >> p & 1 == 1 {
                        v ^= rows[r];
                    }
                }
                v == 0
            }
            Ring::Z => {
                let mut rows = self.rows();
                let pivots = zint::hnf(&mut rows, self.ncols);
                let mut v = x.to_vec();
                for (r, &p) in pivots.iter().enumerate() {
                    let (q, rem) = v[p].div_rem(&rows[r][p]);
                    if !rem.is_zero() {
                        return false;
                    }
                    for (e, h) in v.iter_mut().zip(&rows[r]) {
                        *e -= &q * h;
                    }
                }
                v.iter().all(Zero::is_zero)
            }
        }
    }

    /// Davis–Januszkiewicz canonical form: reduced row echelon form over
    /// `Z2`, row Hermite normal form over `Z`.
    pub fn canonical(&self) -> Result<CharMatrix> {
        match self.ring {
            Ring::Z2 => {
                let mut rows = self.gf2_rows();
                if gf2::rref(&mut rows, self.ncols).len() < self.nrows {
                    return Err(Error::RankDeficient);
                }
                Ok(Self::from_gf2_rows(self.nrows, self.ncols, &rows))
            }
            Ring::Z => {
                let mut rows = self.rows();
                if zint::hnf(&mut rows, self.ncols).len() < self.nrows {
                    return Err(Error::RankDeficient);
                }
                Ok(Self::from_zrows(self.ncols, rows))
            }
        }
    }

    pub fn dj_equivalent(&self, other: &CharMatrix) -> Result<bool> {
        self.same_ring(other)?;
        if (self.nrows, self.ncols) != (other.nrows, other.ncols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        Ok(self.canonical()? == other.canonical()?)
    }

    /// Whether the columns in `cols` form a basis of `R^n` (so `cols.len()`
    /// must equal the row count).
    pub fn columns_form_basis(&self, cols: VertexSet) -> bool {
        if cols.len() != self.nrows {
            return false;
        }
        match self.ring {
            Ring::Z2 => {
                let all = self.gf2_columns();
                let picked: Vec<u64> = cols.iter().map(|c| all[c]).collect();
                gf2::independent(&picked)
            }
            Ring::Z => {
                let idx = cols.to_vec();
                let square: zint::Rows = (0..self.nrows)
                    .map(|r| idx.iter().map(|&c| self.get(r, c).clone()).collect())
                    .collect();
                zint::det(&square).abs().is_one()
            }
        }
    }

    /// The non-singularity condition on an explicit facet list.
    pub fn nonsingular_on(&self, facets: &[VertexSet]) -> bool {
        match self.ring {
            Ring::Z2 => {
                let all = self.gf2_columns();
                let mut picked = Vec::with_capacity(self.nrows);
                facets.iter().all(|f| {
                    picked.clear();
                    picked.extend(f.iter().map(|c| all[c]));
                    picked.len() == self.nrows && gf2::independent(&picked)
                })
            }
            Ring::Z => facets.iter().all(|&f| self.columns_form_basis(f)),
        }
    }

    fn check_shape(&self, k: &SimplicialComplex) -> Result<()> {
        if self.nrows != k.n() || self.ncols != k.m() {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {}x{}, complex needs {}x{}",
                self.nrows,
                self.ncols,
                k.n(),
                k.m()
            )));
        }
        Ok(())
    }

    /// Non-singularity over every facet of `k`.
    pub fn is_characteristic(&self, k: &SimplicialComplex) -> Result<bool> {
        self.check_shape(k)?;
        Ok(self.nonsingular_on(k.facets()))
    }

    /// Row operations making column `cols[i]` the `i`-th coordinate vector.
    pub fn normalize_columns(&self, cols: &[usize]) -> Result<CharMatrix> {
        match self.ring {
            Ring::Z2 => {
                let mut rows = self.gf2_rows();
                gf2::normalize_columns(&mut rows, cols)
                    .map_err(|_| Error::NotUnimodular(cols.iter().map(|c| c + 1).collect()))?;
                Ok(Self::from_gf2_rows(self.nrows, self.ncols, &rows))
            }
            Ring::Z => {
                let mut rows = self.rows();
                zint::normalize_columns(&mut rows, cols)
                    .map_err(|_| Error::NotUnimodular(cols.iter().map(|c| c + 1).collect()))?;
                Ok(Self::from_zrows(self.ncols, rows))
            }
        }
    }

    /// Quotient by the span of the columns in `sigma`, restricted to the
    /// columns `keep` (in that order). Not canonicalized.
    pub fn quotient(&self, sigma: &[usize], keep: &[usize]) -> Result<CharMatrix> {
        let normal = self.normalize_columns(sigma)?;
        let k = sigma.len();
        let rows = (k..self.nrows)
            .map(|r| keep.iter().map(|&c| normal.get(r, c).clone()).collect())
            .collect();
        Ok(CharMatrix::from_rows_in(self.ring, keep.len(), rows))
    }

    /// Projection onto the link of the face `sigma` of `k`, canonicalized.
    /// Columns follow the link's vertex order.
    pub fn project(&self, k: &SimplicialComplex, sigma: VertexSet) -> Result<Projection> {
        self.check_shape(k)?;
        let link = k.link(sigma)?;
        let matrix = self.quotient(&sigma.to_vec(), &link.vertices)?;
        let matrix = if matrix.nrows == 0 {
            matrix
        } else {
            matrix.canonical()?
        };
        Ok(Projection {
            complex: link.complex,
            vertices: link.vertices,
            matrix,
        })
    }

    /// `Pr(λ, v)`: bring column `v` to the first coordinate vector, delete
    /// the first row and column `v`, canonicalize.
    pub fn pr_matrix(&self, v: usize) -> Result<CharMatrix> {
        if v >= self.ncols {
            return Err(Error::VertexOutOfRange {
                vertex: v + 1,
                m: self.ncols,
            });
        }
        let keep: Vec<usize> = (0..self.ncols).filter(|&c| c != v).collect();
        let q = self
            .quotient(&[v], &keep)
            .map_err(|_| Error::ZeroColumn(v + 1))?;
        if q.nrows == 0 {
            return Ok(q);
        }
        q.canonical()
    }

    /// Entrywise reduction modulo 2.
    pub fn mod2(&self) -> Result<CharMatrix> {
        if self.ring != Ring::Z {
            return Err(Error::WrongRing {
                expected: "z",
                found: self.ring.name(),
            });
        }
        Ok(CharMatrix::new(Ring::Z2, self.rows()).expect("same shape"))
    }

    /// Same entries read in the other ring's conventions (Z2 → Z lifts
    /// 0/1 entries verbatim).
    pub fn with_ring(&self, ring: Ring) -> CharMatrix {
        CharMatrix::new(ring, self.rows()).expect("same shape")
    }

    pub fn to_file(&self, labels: Option<Vec<String>>) -> CharMatrixFile {
        CharMatrixFile {
            ring: self.ring,
            rows: self
                .rows()
                .into_iter()
                .map(|r| r.into_iter().map(Entry::from).collect())
                .collect(),
            vertex_labels: labels
                .unwrap_or_else(|| (1..=self.ncols).map(|i| i.to_string()).collect()),
        }
    }

    pub fn from_file(file: &CharMatrixFile) -> Result<Self> {
        let rows = file
            .rows
            .iter()
            .map(|r| r.iter().map(Entry::to_bigint).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let m = Self::new(file.ring, rows)?;
        if !file.vertex_labels.is_empty() && file.vertex_labels.len() != m.ncols {
            return Err(Error::DimensionMismatch(format!(
                "{} vertex labels for {} columns",
                file.vertex_labels.len(),
                m.ncols
            )));
        }
        Ok(m)
    }
}

impl fmt::Debug for CharMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharMatrix<{}>{self}", self.ring)
    }
}

impl fmt::Display for CharMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.nrows {
            if r > 0 {
                f.write_str("; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            f.write_str(&row.join(" "))?;
        }
        f.write_str("]")
    }
}

/// Result of [`CharMatrix::project`].
#[derive(Clone, Debug)]
pub struct Projection {
    pub complex: SimplicialComplex,
    /// Original 0-based vertex behind each link vertex.
    pub vertices: Vec<usize>,
    pub matrix: CharMatrix,
}

/// JSON form: `{"ring": "z2", "rows": [[1,0,1], ...], "vertex_labels": ["1", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharMatrixFile {
    pub ring: Ring,
    pub rows: Vec<Vec<Entry>>,
    #[serde(default)]
    pub vertex_labels: Vec<String>,
}

/// A matrix entry: a JSON integer, or a decimal string when it does not
/// fit in 64 bits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Big(String),
}

impl Entry {
    fn to_bigint(&self) -> Result<BigInt> {
        match self {
            Entry::Int(x) => Ok(BigInt::from(*x)),
            Entry::Big(s) => s
                .parse()
                .map_err(|_| Error::Format(format!("bad matrix entry {s:?}"))),
        }
    }
}

impl From<BigInt> for Entry {
    fn from(x: BigInt) -> Self {
        match x.to_i64() {
            Some(v) => Entry::Int(v),
            None => Entry::Big(x.to_string()),
        }
    }
}
