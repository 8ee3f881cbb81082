use num_bigint::BigInt;

use super::MarkedRow;
use crate::charmap::CharMatrix;
use crate::error::{Error, Result};
use crate::puzzle::StandardForm;
use crate::simplicial::{SimplicialComplex, WedgeVector};

/// Edge criterion: `Pr(λ1, v)` and `Pr(λ2, v)` agree after row operations.
pub fn edge_exists(l1: &CharMatrix, l2: &CharMatrix, v: usize) -> Result<bool> {
    if l1.ring() != l2.ring() {
        return Err(Error::WrongRing {
            expected: l1.ring().name(),
            found: l2.ring().name(),
        });
    }
    Ok(l1.pr_matrix(v)? == l2.pr_matrix(v)?)
}

/// Column `v` turned into `e_1`, remaining rows put in canonical form.
/// Returns the first row and the canonical bottom block.
fn split_at(l: &CharMatrix, v: usize) -> Result<(Vec<BigInt>, Option<CharMatrix>)> {
    let normal = l.normalize_columns(&[v])?;
    let top = normal.row(0).to_vec();
    if normal.nrows() == 1 {
        return Ok((top, None));
    }
    let rest = CharMatrix::new(
        l.ring(),
        (1..normal.nrows())
            .map(|r| normal.row(r).to_vec())
            .collect(),
    )?;
    Ok((top, Some(rest.canonical()?)))
}

fn no_edge(v: usize) -> Error {
    Error::NoEdge {
        between: "the given matrices".into(),
        color: v + 1,
    }
}

/// Reduced marked row `r = b − a` with `⟨λ1; r⟩` the lift of the edge
/// `{λ1, λ2, v}`, where `a`, `b` are the rows of `λ1`, `λ2` through the
/// normalized column `v` over a common bottom block.
pub fn edge_row(l1: &CharMatrix, l2: &CharMatrix, v: usize) -> Result<MarkedRow> {
    if l1.ring() != l2.ring() {
        return Err(Error::WrongRing {
            expected: l1.ring().name(),
            found: l2.ring().name(),
        });
    }
    if (l1.nrows(), l1.ncols()) != (l2.nrows(), l2.ncols()) {
        return Err(Error::DimensionMismatch(
            "edge endpoints differ in shape".into(),
        ));
    }
    if v >= l1.ncols() {
        return Err(Error::VertexOutOfRange {
            vertex: v + 1,
            m: l1.ncols(),
        });
    }
    let (a, h1) = split_at(l1, v).map_err(|_| no_edge(v))?;
    let (b, h2) = split_at(l2, v).map_err(|_| no_edge(v))?;
    if h1 != h2 {
        return Err(no_edge(v));
    }
    let r = b.iter().zip(&a).map(|(x, y)| x - y).collect();
    MarkedRow::new(l1.ring(), v, r)
}

/// The characteristic map over `wed_v K` whose projections at `v_2` and
/// `v_1` are `λ1` and `λ2`, canonicalized.
pub fn edge_lift(
    k: &SimplicialComplex,
    l1: &CharMatrix,
    l2: &CharMatrix,
    v: usize,
) -> Result<CharMatrix> {
    let r = edge_row(l1, l2, v)?;
    let j = WedgeVector::twos_at(k.m(), &[v]);
    let lift = StandardForm::assemble(l1, &j, &[r])?.into_matrix();
    if !lift.is_characteristic(&k.wedge(v)?)? {
        return Err(Error::InvariantViolation(format!(
            "edge lift at color {} is not characteristic",
            v + 1
        )));
    }
    lift.canonical()
}
