//! Integer row reduction over arbitrary-precision entries.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rows = Vec<Vec<BigInt>>;

fn sub_multiple(rows: &mut Rows, target: usize, source: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (t, s) = if target < source {
        let (a, b) = rows.split_at_mut(source);
        (&mut a[target], &b[0])
    } else {
        let (a, b) = rows.split_at_mut(target);
        (&mut b[0], &a[source])
    };
    for (x, y) in t.iter_mut().zip(s) {
        *x -= q * y;
    }
}

fn negate(row: &mut [BigInt]) {
    for x in row {
        *x = -std::mem::take(x);
    }
}

/// Euclidean elimination in column `c` over rows `from..`: afterwards
/// `rows[from][c]` holds the gcd (up to sign) and rows below are zero there.
/// Returns false if the whole column segment is zero.
fn gcd_down(rows: &mut Rows, from: usize, c: usize) -> bool {
    loop {
        let best = (from..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
        let Some(p) = best else {
            return false;
        };
        rows.swap(from, p);
        let mut done = true;
        for i in from + 1..rows.len() {
            if !rows[i][c].is_zero() {
                let q = rows[i][c].div_floor(&rows[from][c]);
                sub_multiple(rows, i, from, &q);
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
        }
        if done {
            return true;
        }
    }
}

/// Row-style Hermite normal form in place: echelon, positive pivots, entries
/// above each pivot reduced into `[0, pivot)`. Unique for the row lattice.
/// Returns pivot columns.
pub fn hnf(rows: &mut Rows, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        if !gcd_down(rows, r, c) {
            continue;
        }
        if rows[r][c].is_negative() {
            negate(&mut rows[r]);
        }
        for i in 0..r {
            let q = rows[i][c].div_floor(&rows[r][c]);
            sub_multiple(rows, i, r, &q);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &Rows, ncols: usize) -> usize {
    let mut tmp = rows.clone();
    hnf(&mut tmp, ncols).len()
}

/// Unimodular row operations making column `cols[k]` the `k`-th coordinate
/// vector for every `k`. Fails with the first column for which this is
/// impossible (the columns do not extend to a basis).
pub fn normalize_columns(rows: &mut Rows, cols: &[usize]) -> Result<(), usize> {
    for (k, &c) in cols.iter().enumerate() {
        if k >= rows.len() || !gcd_down(rows, k, c) || !rows[k][c].abs().is_one() {
            return Err(c);
        }
        if rows[k][c].is_negative() {
            negate(&mut rows[k]);
        }
        for i in 0..rows.len() {
            if i != k && !rows[i][c].is_zero() {
                let q = rows[i][c].clone();
                sub_multiple(rows, i, k, &q);
            }
        }
    }
    Ok(())
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(square: &Rows) -> BigInt {
    let n = square.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = square.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}
