use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::charmap::{CharMatrix, Ring};
use crate::error::{Error, Result};

/// A row vector `r` with a marked vertex `v`: the bottom row datum of a
/// standard form. Over `Z2` entries are kept in `{0, 1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedRow {
    ring: Ring,
    marking: usize,
    entries: Vec<BigInt>,
}

impl MarkedRow {
    pub fn new(ring: Ring, marking: usize, mut entries: Vec<BigInt>) -> Result<Self> {
        if marking >= entries.len() {
            return Err(Error::VertexOutOfRange {
                vertex: marking + 1,
                m: entries.len(),
            });
        }
        if ring == Ring::Z2 {
            for e in &mut entries {
                *e = e.mod_floor(&BigInt::from(2));
            }
        }
        Ok(MarkedRow {
            ring,
            marking,
            entries,
        })
    }

    pub fn from_i64(ring: Ring, marking: usize, entries: &[i64]) -> Result<Self> {
        Self::new(
            ring,
            marking,
            entries.iter().map(|&x| BigInt::from(x)).collect(),
        )
    }

    /// The zero row: the datum of a loop (canonical extension).
    pub fn zero(ring: Ring, m: usize, marking: usize) -> Self {
        assert!(marking < m, "marking out of range");
        MarkedRow {
            ring,
            marking,
            entries: vec![BigInt::zero(); m],
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn marking(&self) -> usize {
        self.marking
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> &BigInt {
        &self.entries[i]
    }

    /// `r_v = 0`.
    pub fn is_reduced(&self) -> bool {
        self.entries[self.marking].is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    fn check_center(&self, center: &CharMatrix) -> Result<()> {
        if center.ring() != self.ring {
            return Err(Error::WrongRing {
                expected: center.ring().name(),
                found: self.ring.name(),
            });
        }
        if center.ncols() != self.entries.len() {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} against a matrix with {} columns",
                self.entries.len(),
                center.ncols()
            )));
        }
        Ok(())
    }

    /// The `~`-representative with `r_v = 0`: subtract `r_v` times a row
    /// combination of `center` that is `1` at `v`.
    pub fn reduce(&self, center: &CharMatrix) -> Result<MarkedRow> {
        self.check_center(center)?;
        if self.is_reduced() {
            return Ok(self.clone());
        }
        let normal = center.normalize_columns(&[self.marking])?;
        let t = self.entries[self.marking].clone();
        let entries = self
            .entries
            .iter()
            .zip(normal.row(0))
            .map(|(x, y)| x - &t * y)
            .collect();
        MarkedRow::new(self.ring, self.marking, entries)
    }

    /// `r ~ r'`: same marking and `r − r'` in the row space of `center`.
    pub fn equivalent(&self, other: &MarkedRow, center: &CharMatrix) -> Result<bool> {
        self.check_center(center)?;
        other.check_center(center)?;
        if self.marking != other.marking {
            return Ok(false);
        }
        let diff: Vec<BigInt> = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(center.row_space_contains(&diff))
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.entries.iter().map(|x| x.to_i64()).collect()
    }
}

impl fmt::Debug for MarkedRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "({}; {})", e.join(" "), self.marking + 1)
    }
}

/// `Λ^r`: column `i` becomes `a_i + r_i a_v`, canonicalized. An unreduced
/// `r` is reduced first.
pub fn lambda_power(center: &CharMatrix, r: &MarkedRow) -> Result<CharMatrix> {
    let r = r.reduce(center)?;
    let v = r.marking;
    let rows = (0..center.nrows())
        .map(|i| {
            let row = center.row(i);
            (0..center.ncols())
                .map(|c| {
                    if c == v {
                        row[c].clone()
                    } else {
                        &row[c] + &r.entries[c] * &row[v]
                    }
                })
                .collect()
        })
        .collect();
    CharMatrix::new(center.ring(), rows)?.canonical()
}

/// Result of [`marked_row_compose`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    /// `r^s` by the closed formula; marking `v`, generally not reduced.
    pub raw: MarkedRow,
    /// A reduced representative of `r^s` relative to `Λ^s`.
    pub reduced: MarkedRow,
    /// `Λ^s`, canonicalized.
    pub power: CharMatrix,
}

/// `r^s` for reduced `r` (marking `v`) and `s` (marking `w ≠ v`):
/// `(r^s)_i = r_i + s_i r_w` off `v, w`, `(r^s)_v = s_v r_w`, `(r^s)_w = r_w`.
pub fn marked_row_compose(
    r: &MarkedRow,
    s: &MarkedRow,
    center: &CharMatrix,
) -> Result<Composition> {
    r.check_center(center)?;
    s.check_center(center)?;
    let (v, w) = (r.marking, s.marking);
    if v == w {
        return Err(Error::SameMarking(v + 1));
    }
    if !r.is_reduced() || !s.is_reduced() {
        return Err(Error::InvalidArgument(
            "composition needs reduced rows".into(),
        ));
    }
    let rw = &r.entries[w];
    let entries = (0..r.len())
        .map(|i| {
            if i == v {
                &s.entries[v] * rw
            } else if i == w {
                rw.clone()
            } else {
                &r.entries[i] + &s.entries[i] * rw
            }
        })
        .collect();
    let raw = MarkedRow::new(r.ring, v, entries)?;
    let power = lambda_power(center, s)?;
    let reduced = raw.reduce(&power)?;
    Ok(Composition {
        raw,
        reduced,
        power,
    })
}
