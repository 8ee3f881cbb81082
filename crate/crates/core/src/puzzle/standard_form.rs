use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::charmap::CharMatrix;
use crate::diagram::MarkedRow;
use crate::error::{Error, Result};
use crate::simplicial::{SimplicialComplex, VertexSet, WedgeVector};

/// Position of the row for copy `copy` (0-based, `>= 1`) of `v` among the
/// rows of a standard form: colors in order, copies in order.
pub fn row_slot(j: &WedgeVector, v: usize, copy: usize) -> usize {
    debug_assert!(copy >= 1 && copy < j.get(v));
    (0..v).map(|i| j.get(i) - 1).sum::<usize>() + copy - 1
}

/// The `(color, copy)` pairs of the rows of a standard form, in slot order.
pub fn row_slots(j: &WedgeVector) -> Vec<(usize, usize)> {
    (0..j.len())
        .flat_map(|v| (1..j.get(v)).map(move |c| (v, c)))
        .collect()
}

/// A center class and one marked row per extra copy, together with the
/// assembled `(n + Σ(j_i − 1)) × Σ j_i` matrix:
///
/// ```text
///   A_1 0 … | A_2 0 … | …          columns 1_1 … 1_{j_1}, 2_1 …
///   S_1 rows: −1 + r_1 at 1_1, 1 at 1_c, r_i at i_1
///   …
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    j: WedgeVector,
    center: CharMatrix,
    rows: Vec<MarkedRow>,
    matrix: CharMatrix,
}

impl StandardForm {
    /// `rows[row_slot(j, v, c)]` is the row for copy `c` of `v` and must be
    /// marked `v`. Rows need not be reduced.
    pub fn assemble(center: &CharMatrix, j: &WedgeVector, rows: &[MarkedRow]) -> Result<Self> {
        let m = center.ncols();
        j.check_len(m)?;
        let slots = row_slots(j);
        if rows.len() != slots.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} marked rows for {} extra copies",
                rows.len(),
                slots.len()
            )));
        }
        for (r, &(v, _)) in rows.iter().zip(&slots) {
            if r.ring() != center.ring() {
                return Err(Error::WrongRing {
                    expected: center.ring().name(),
                    found: r.ring().name(),
                });
            }
            if r.len() != m || r.marking() != v {
                return Err(Error::DimensionMismatch(format!(
                    "row {:?} does not fit color {} of a {m}-column center",
                    r,
                    v + 1
                )));
            }
        }
        let total = j.total();
        let mut out: Vec<Vec<BigInt>> = Vec::with_capacity(center.nrows() + rows.len());
        for i in 0..center.nrows() {
            let mut row = vec![BigInt::zero(); total];
            for (base, x) in center.row(i).iter().enumerate() {
                row[j.column(base, 0)] = x.clone();
            }
            out.push(row);
        }
        for (r, &(v, copy)) in rows.iter().zip(&slots) {
            let mut row = vec![BigInt::zero(); total];
            for (base, x) in r.entries().iter().enumerate() {
                row[j.column(base, 0)] = x.clone();
            }
            row[j.column(v, 0)] -= BigInt::one();
            row[j.column(v, copy)] = BigInt::one();
            out.push(row);
        }
        let matrix = CharMatrix::new(center.ring(), out)?;
        Ok(StandardForm {
            j: j.clone(),
            center: center.clone(),
            rows: rows.to_vec(),
            matrix,
        })
    }

    pub fn j(&self) -> &WedgeVector {
        &self.j
    }

    pub fn center(&self) -> &CharMatrix {
        &self.center
    }

    pub fn rows(&self) -> &[MarkedRow] {
        &self.rows
    }

    pub fn matrix(&self) -> &CharMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CharMatrix {
        self.matrix
    }

    /// All rows zero.
    pub fn is_trivial(&self) -> bool {
        self.rows.iter().all(MarkedRow::is_zero)
    }
}

/// `K` together with `J` and the facets of `K(J)`, computed once.
#[derive(Clone, Debug)]
pub struct WedgeContext {
    k: SimplicialComplex,
    j: WedgeVector,
    facets: Vec<VertexSet>,
}

impl WedgeContext {
    pub fn new(k: &SimplicialComplex, j: &WedgeVector) -> Result<Self> {
        let facets = k.facets_of_kj(j)?;
        Ok(WedgeContext {
            k: k.clone(),
            j: j.clone(),
            facets,
        })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.k
    }

    pub fn j(&self) -> &WedgeVector {
        &self.j
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// The assembled standard form when it is characteristic over `K(J)`.
    pub fn realize(&self, center: &CharMatrix, rows: &[MarkedRow]) -> Result<Option<CharMatrix>> {
        if center.nrows() != self.k.n() || center.ncols() != self.k.m() {
            return Err(Error::DimensionMismatch(format!(
                "center is {}x{}, complex needs {}x{}",
                center.nrows(),
                center.ncols(),
                self.k.n(),
                self.k.m()
            )));
        }
        let form = StandardForm::assemble(center, &self.j, rows)?;
        Ok(form
            .matrix
            .nonsingular_on(&self.facets)
            .then_some(form.matrix))
    }

    /// `proj_{σ(α)} Λ` for a 0-based index `α`, canonicalized; columns are
    /// the transversal copies, so the result lives over `K`.
    pub fn project_at(&self, lambda: &CharMatrix, alpha0: &[usize]) -> Result<CharMatrix> {
        let alpha1: Vec<usize> = alpha0.iter().map(|a| a + 1).collect();
        let sigma = self.j.sigma_face(&alpha1)?;
        let keep = self.j.transversal(alpha0);
        lambda.quotient(&sigma.to_vec(), &keep)?.canonical()
    }
}

/// Direct realizability: assemble and test every facet of `K(J)`.
pub fn is_realizable_direct(
    k: &SimplicialComplex,
    j: &WedgeVector,
    center: &CharMatrix,
    rows: &[MarkedRow],
) -> Result<Option<CharMatrix>> {
    WedgeContext::new(k, j)?.realize(center, rows)
}
