//! Dense GF(2) matrices with each row packed into a `u64` (bit `c` is
//! column `c`).

pub const MAX_COLS: usize = 64;

/// Reduced row echelon form in place; returns pivot columns. Zero rows sink
/// to the bottom.
pub fn rref(rows: &mut [u64], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let bit = 1u64 << c;
        let Some(p) = (r..rows.len()).find(|&i| rows[i] & bit != 0) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && *row & bit != 0 {
                *row ^= pivot;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[u64], ncols: usize) -> usize {
    let mut tmp = rows.to_vec();
    rref(&mut tmp, ncols).len()
}

/// Linear independence of a family of vectors.
pub fn independent(vectors: &[u64]) -> bool {
    let mut basis = [0u64; 64];
    for &v in vectors {
        let mut x = v;
        while x != 0 {
            let top = 63 - x.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = x;
                break;
            }
            x ^= basis[top];
        }
        if x == 0 {
            return false;
        }
    }
    true
}

/// Row operations making column `cols[k]` the `k`-th coordinate vector for
/// every `k`. Returns the first column that cannot be brought to that shape.
pub fn normalize_columns(rows: &mut [u64], cols: &[usize]) -> Result<(), usize> {
    for (k, &c) in cols.iter().enumerate() {
        let bit = 1u64 << c;
        let Some(p) = (k..rows.len()).find(|&i| rows[i] & bit != 0) else {
            return Err(c);
        };
        rows.swap(k, p);
        let pivot = rows[k];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != k && *row & bit != 0 {
                *row ^= pivot;
            }
        }
    }
    Ok(())
}

/// Column `c` of a row-packed matrix, packed with bit `r` for row `r`.
pub fn column(rows: &[u64], c: usize) -> u64 {
    rows.iter()
        .enumerate()
        .fold(0, |acc, (r, &row)| acc | ((row >> c) & 1) << r)
}

/// Transposes a row-packed `nrows × ncols` matrix into packed columns.
pub fn columns(rows: &[u64], ncols: usize) -> Vec<u64> {
    (0..ncols).map(|c| column(rows, c)).collect()
}

/// Inverse of `columns`: packed columns back to packed rows.
pub fn rows_from_columns(cols: &[u64], nrows: usize) -> Vec<u64> {
    (0..nrows)
        .map(|r| {
            cols.iter()
                .enumerate()
                .fold(0, |acc, (c, &col)| acc | ((col >> r) & 1) << c)
        })
        .collect()
}
