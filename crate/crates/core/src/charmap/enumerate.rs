//! Exhaustive Z2 and bounded Z search for characteristic maps.
//!
//! Every D-J class has exactly one representative whose columns on the
//! pinned facet (the lexicographically smallest one) are the coordinate
//! vectors in order, so searching over those representatives lists each
//! class once.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;

use super::{CharMatrix, Ring};
use crate::error::{Error, Result};
use crate::linalg::{gf2, zint};
use crate::simplicial::{SimplicialComplex, VertexSet};

pub const MAX_ENUM_ROWS: usize = 12;
pub const MAX_ENUM_COLS: usize = 24;
pub const MAX_Z_BOUND: i64 = 16;
/// Cap on `(2B + 1)^n`, the candidate count per column in the Z search.
pub const MAX_Z_CANDIDATES: u64 = 1 << 20;

/// A D-J class: its canonical matrix and its position in a sorted list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DjClass {
    pub index: usize,
    pub canonical: CharMatrix,
}

/// Facet bookkeeping shared by both searches.
struct SearchPlan {
    n: usize,
    pinned: Vec<usize>,
    free: Vec<usize>,
    /// `checks[t]`: facets completed once `free[t]` is assigned.
    checks: Vec<Vec<VertexSet>>,
}

impl SearchPlan {
    fn new(k: &SimplicialComplex) -> Self {
        let pinned_set = k.first_facet();
        let pinned = pinned_set.to_vec();
        let free: Vec<usize> = (0..k.m()).filter(|&v| !pinned_set.contains(v)).collect();
        let mut checks = vec![Vec::new(); free.len()];
        for &f in k.facets() {
            if let Some(t) = free.iter().rposition(|&v| f.contains(v)) {
                checks[t].push(f);
            }
        }
        SearchPlan {
            n: k.n(),
            pinned,
            free,
            checks,
        }
    }
}

fn check_limits(k: &SimplicialComplex) -> Result<()> {
    if k.n() > MAX_ENUM_ROWS || k.m() > MAX_ENUM_COLS {
        return Err(Error::SizeLimit(format!(
            "enumeration supports n <= {MAX_ENUM_ROWS}, m <= {MAX_ENUM_COLS}; got n={}, m={}",
            k.n(),
            k.m()
        )));
    }
    Ok(())
}

/// All Z2 D-J classes over `k`, sorted by canonical form.
pub fn enumerate_z2(k: &SimplicialComplex) -> Result<Vec<DjClass>> {
    check_limits(k)?;
    let plan = SearchPlan::new(k);
    let mut cols = vec![0u64; k.m()];
    for (i, &v) in plan.pinned.iter().enumerate() {
        cols[v] = 1 << i;
    }
    let choices: Vec<u64> = (1..1u64 << plan.n).collect();
    let found: Vec<Vec<u64>> = if plan.free.is_empty() {
        vec![cols]
    } else {
        choices
            .par_iter()
            .flat_map_iter(|&first| {
                let mut cols = cols.clone();
                let mut out = Vec::new();
                cols[plan.free[0]] = first;
                if z2_facets_ok(&plan, 0, &cols) {
                    z2_search(&plan, 1, &mut cols, &choices, &mut out);
                }
                out
            })
            .collect()
    };
    let mats = found
        .into_iter()
        .map(|cols| {
            let rows = gf2::rows_from_columns(&cols, plan.n);
            CharMatrix::from_gf2_rows(plan.n, k.m(), &rows).canonical()
        })
        .collect::<Result<Vec<_>>>()?;
    finish(mats)
}

fn z2_facets_ok(plan: &SearchPlan, t: usize, cols: &[u64]) -> bool {
    let mut picked = Vec::with_capacity(plan.n);
    plan.checks[t].iter().all(|f| {
        picked.clear();
        picked.extend(f.iter().map(|v| cols[v]));
        gf2::independent(&picked)
    })
}

fn z2_search(
    plan: &SearchPlan,
    t: usize,
    cols: &mut [u64],
    choices: &[u64],
    out: &mut Vec<Vec<u64>>,
) {
    if t == plan.free.len() {
        out.push(cols.to_vec());
        return;
    }
    let v = plan.free[t];
    for &c in choices {
        cols[v] = c;
        if z2_facets_ok(plan, t, cols) {
            z2_search(plan, t + 1, cols, choices, out);
        }
    }
    cols[v] = 0;
}

/// Z D-J classes having a pinned representative with every entry in
/// `[-bound, bound]`. Not exhaustive: classes needing larger entries are
/// missed.
pub fn enumerate_z_bounded(k: &SimplicialComplex, bound: i64) -> Result<Vec<DjClass>> {
    check_limits(k)?;
    if bound < 1 {
        return Err(Error::InvalidArgument(format!(
            "bound must be >= 1, got {bound}"
        )));
    }
    if bound > MAX_Z_BOUND {
        return Err(Error::SizeLimit(format!("bound {bound} > {MAX_Z_BOUND}")));
    }
    let plan = SearchPlan::new(k);
    let width = (2 * bound + 1) as u64;
    let per_column = width.checked_pow(plan.n as u32).unwrap_or(u64::MAX);
    if per_column > MAX_Z_CANDIDATES {
        return Err(Error::SizeLimit(format!(
            "{per_column} candidate columns (n={}, bound={bound})",
            plan.n
        )));
    }
    let choices: Vec<Vec<i64>> = (0..per_column)
        .map(|mut code| {
            (0..plan.n)
                .map(|_| {
                    let d = (code % width) as i64 - bound;
                    code /= width;
                    d
                })
                .collect::<Vec<i64>>()
        })
        .filter(|c| c.iter().any(|&x| x != 0))
        .collect();
    let mut cols = vec![vec![0i64; plan.n]; k.m()];
    for (i, &v) in plan.pinned.iter().enumerate() {
        cols[v][i] = 1;
    }
    let found: Vec<Vec<Vec<i64>>> = if plan.free.is_empty() {
        vec![cols]
    } else {
        choices
            .par_iter()
            .flat_map_iter(|first| {
                let mut cols = cols.clone();
                let mut out = Vec::new();
                cols[plan.free[0]] = first.clone();
                if z_facets_ok(&plan, 0, &cols) {
                    z_search(&plan, 1, &mut cols, &choices, &mut out);
                }
                out
            })
            .collect()
    };
    let mats = found
        .into_iter()
        .map(|cols| {
            let rows: Vec<Vec<i64>> = (0..plan.n)
                .map(|r| cols.iter().map(|c| c[r]).collect())
                .collect();
            CharMatrix::from_i64(Ring::Z, &rows)?.canonical()
        })
        .collect::<Result<Vec<_>>>()?;
    finish(mats)
}

fn z_facets_ok(plan: &SearchPlan, t: usize, cols: &[Vec<i64>]) -> bool {
    plan.checks[t].iter().all(|f| {
        let idx = f.to_vec();
        let square: zint::Rows = (0..plan.n)
            .map(|r| idx.iter().map(|&v| BigInt::from(cols[v][r])).collect())
            .collect();
        zint::det(&square).abs().is_one()
    })
}

fn z_search(
    plan: &SearchPlan,
    t: usize,
    cols: &mut Vec<Vec<i64>>,
    choices: &[Vec<i64>],
    out: &mut Vec<Vec<Vec<i64>>>,
) {
    if t == plan.free.len() {
        out.push(cols.clone());
        return;
    }
    let v = plan.free[t];
    for c in choices {
        cols[v].clone_from(c);
        if z_facets_ok(plan, t, cols) {
            z_search(plan, t + 1, cols, choices, out);
        }
    }
}

fn finish(mut mats: Vec<CharMatrix>) -> Result<Vec<DjClass>> {
    mats.sort();
    if mats.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvariantViolation(
            "pinned enumeration produced two representatives of one class".into(),
        ));
    }
    Ok(mats
        .into_iter()
        .enumerate()
        .map(|(index, canonical)| DjClass { index, canonical })
        .collect())
}

/// Whether `k` admits a Z2 characteristic map. Stops at the first hit.
pub fn admits_z2(k: &SimplicialComplex) -> Result<bool> {
    check_limits(k)?;
    let plan = SearchPlan::new(k);
    let mut cols = vec![0u64; k.m()];
    for (i, &v) in plan.pinned.iter().enumerate() {
        cols[v] = 1 << i;
    }
    let choices: Vec<u64> = (1..1u64 << plan.n).collect();
    fn any(plan: &SearchPlan, t: usize, cols: &mut [u64], choices: &[u64]) -> bool {
        if t == plan.free.len() {
            return true;
        }
        let v = plan.free[t];
        for &c in choices {
            cols[v] = c;
            if z2_facets_ok(plan, t, cols) && any(plan, t + 1, cols, choices) {
                return true;
            }
        }
        false
    }
    Ok(any(&plan, 0, &mut cols, &choices))
}
