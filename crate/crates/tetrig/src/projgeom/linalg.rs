//! Small dense complex linear algebra on fixed-size arrays.
//!
//! Everything the geometry needs is 4×4 or smaller: inverses, kernels of
//! rank-deficient systems, and matrix products. Hand-rolled Gaussian
//! elimination with full pivoting keeps the pivoting and rank-tolerance
//! decisions explicit (they feed directly into degeneracy errors upstream).

use super::Cx;

/// `a · b` for 4×4 complex matrices.
pub(crate) fn mat_mul(a: &[[Cx; 4]; 4], b: &[[Cx; 4]; 4]) -> [[Cx; 4]; 4] {
    let mut out = [[Cx::new(0.0, 0.0); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

/// `m · v` for a 4×4 matrix and 4-vector.
pub(crate) fn mat_vec(m: &[[Cx; 4]; 4], v: &[Cx; 4]) -> [Cx; 4] {
    std::array::from_fn(|i| (0..4).map(|k| m[i][k] * v[k]).sum())
}

/// Transpose of a 4×4 matrix.
pub(crate) fn transpose(m: &[[Cx; 4]; 4]) -> [[Cx; 4]; 4] {
    std::array::from_fn(|i| std::array::from_fn(|j| m[j][i]))
}

/// Determinant of a 4×4 complex matrix by LU elimination with partial
/// pivoting.
pub(crate) fn det4(m: &[[Cx; 4]; 4]) -> Cx {
    let mut a = *m;
    let mut det = Cx::new(1.0, 0.0);
    for col in 0..4 {
        let pivot_row = (col..4)
            .max_by(|&r, &s| a[r][col].norm().partial_cmp(&a[s][col].norm()).unwrap())
            .unwrap();
        if a[pivot_row][col].norm() == 0.0 {
            return Cx::new(0.0, 0.0);
        }
        if pivot_row != col {
            a.swap(col, pivot_row);
            det = -det;
        }
        det *= a[col][col];
        for r in col + 1..4 {
            let f = a[r][col] / a[col][col];
            for j in col..4 {
                a[r][j] = a[r][j] - f * a[col][j];
            }
        }
    }
    det
}

/// Inverse of a 4×4 complex matrix by Gauss-Jordan elimination with partial
/// pivoting. Returns `None` when a pivot falls below `tiny` relative to the
/// matrix scale (singular input).
pub(crate) fn invert4(m: &[[Cx; 4]; 4]) -> Option<[[Cx; 4]; 4]> {
    let scale: f64 = m
        .iter()
        .flatten()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    let tiny = 1e-14 * scale;

    let mut a = *m;
    let mut inv = [[Cx::new(0.0, 0.0); 4]; 4];
    for (i, row) in inv.iter_mut().enumerate() {
        row[i] = Cx::new(1.0, 0.0);
    }
    for col in 0..4 {
        let pivot_row = (col..4).max_by(|&r, &s| {
            a[r][col].norm().partial_cmp(&a[s][col].norm()).unwrap()
        })?;
        if a[pivot_row][col].norm() < tiny {
            return None;
        }
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let p = a[col][col];
        for j in 0..4 {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..4 {
            if r != col {
                let f = a[r][col];
                for j in 0..4 {
                    let acj = a[col][j];
                    let icj = inv[col][j];
                    a[r][j] -= f * acj;
                    inv[r][j] -= f * icj;
                }
            }
        }
    }
    Some(inv)
}

/// Kernel basis of an `m×4` complex system (rows are linear functionals on
/// `ℂ⁴`). Gaussian elimination with full pivoting; a row counts toward the
/// rank while its pivot exceeds `rank_tol` relative to the largest original
/// row norm. Returns one basis vector per free column.
pub(crate) fn kernel_basis(rows: &[[Cx; 4]], rank_tol: f64) -> Vec<[Cx; 4]> {
    let mut a: Vec<[Cx; 4]> = rows.to_vec();
    let scale: f64 = a
        .iter()
        .flatten()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    let cutoff = rank_tol * scale;

    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for _ in 0..4 {
        // full pivot among remaining rows × non-pivot columns
        let mut best = (0usize, 0usize, 0.0f64);
        for r in row..a.len() {
            for c in 0..4 {
                if pivot_cols.contains(&c) {
                    continue;
                }
                let mag = a[r][c].norm();
                if mag > best.2 {
                    best = (r, c, mag);
                }
            }
        }
        let (r, c, mag) = best;
        if mag <= cutoff {
            break;
        }
        a.swap(row, r);
        let p = a[row][c];
        for j in 0..4 {
            a[row][j] /= p;
        }
        for rr in 0..a.len() {
            if rr != row {
                let f = a[rr][c];
                if f.norm() != 0.0 {
                    for j in 0..4 {
                        let v = a[row][j];
                        a[rr][j] -= f * v;
                    }
                }
            }
        }
        pivot_cols.push(c);
        row += 1;
        if row == a.len() {
            break;
        }
    }

    let free_cols: Vec<usize> = (0..4).filter(|c| !pivot_cols.contains(c)).collect();
    free_cols
        .into_iter()
        .map(|fc| {
            let mut v = [Cx::new(0.0, 0.0); 4];
            v[fc] = Cx::new(1.0, 0.0);
            // each pivot row reads: x[pivot_col] + Σ_free a[row][fc]·x[fc] = 0
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -a[r][fc];
            }
            v
        })
        .collect()
}
