//! Exact linear algebra over the rationals, sized for the small integer Gram
//! matrices of this module (dimension ≤ 14, entries of magnitude ≤ 2).
//!
//! Everything is backed by `i128` fractions; Hadamard bounds for these
//! dimensions stay far below the overflow threshold, so no arbitrary
//! precision is needed.

/// A reduced fraction with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) struct Frac {
    num: i128,
    den: i128,
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Frac {
    pub(crate) fn new(num: i128, den: i128) -> Frac {
        assert!(den != 0, "fraction denominator must be nonzero");
        let g = gcd(num, den).max(1);
        let sign = if den < 0 { -1 } else { 1 };
        Frac {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub(crate) fn from_int(n: i128) -> Frac {
        Frac { num: n, den: 1 }
    }

    pub(crate) fn is_zero(self) -> bool {
        self.num == 0
    }

    /// Sign of the fraction: -1, 0, or 1.
    pub(crate) fn signum(self) -> i128 {
        self.num.signum()
    }

    /// The integer value, if the fraction is integral.
    pub(crate) fn as_int(self) -> Option<i128> {
        (self.den == 1).then_some(self.num)
    }

    pub(crate) fn add(self, o: Frac) -> Frac {
        Frac::new(self.num * o.den + o.num * self.den, self.den * o.den)
    }

    pub(crate) fn sub(self, o: Frac) -> Frac {
        Frac::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }

    pub(crate) fn mul(self, o: Frac) -> Frac {
        Frac::new(self.num * o.num, self.den * o.den)
    }

    pub(crate) fn div(self, o: Frac) -> Frac {
        assert!(o.num != 0, "division by zero fraction");
        Frac::new(self.num * o.den, self.den * o.num)
    }
}

/// Solve the square system `g · x = v` exactly; `None` if `g` is singular.
pub(crate) fn solve(g: &[Vec<i64>], v: &[i64]) -> Option<Vec<Frac>> {
    let n = g.len();
    debug_assert!(g.iter().all(|row| row.len() == n) && v.len() == n);
    let mut a: Vec<Vec<Frac>> = g
        .iter()
        .zip(v)
        .map(|(row, &rhs)| {
            let mut r: Vec<Frac> = row.iter().map(|&x| Frac::from_int(x as i128)).collect();
            r.push(Frac::from_int(rhs as i128));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].div(p);
                for c in col..=n {
                    a[r][c] = a[r][c].sub(factor.mul(a[col][c]));
                }
            }
        }
    }
    Some((0..n).map(|r| a[r][n].div(a[r][r])).collect())
}

/// Solve `g · x = v` exactly and demand an integer solution; `None` if `g`
/// is singular or the solution has a nonintegral entry.
pub(crate) fn solve_integer(g: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    solve(g, v)?
        .into_iter()
        .map(|f| f.as_int().map(|n| n as i64))
        .collect()
}

/// Exact determinant by fraction-based Gaussian elimination.
pub(crate) fn det(g: &[Vec<i64>]) -> i128 {
    let n = g.len();
    let mut a: Vec<Vec<Frac>> = g
        .iter()
        .map(|row| row.iter().map(|&x| Frac::from_int(x as i128)).collect())
        .collect();
    let mut sign = 1i128;
    let mut d = Frac::from_int(1);
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return 0;
        };
        if pivot != col {
            a.swap(col, pivot);
            sign = -sign;
        }
        let p = a[col][col];
        d = d.mul(p);
        for r in col + 1..n {
            if !a[r][col].is_zero() {
                let factor = a[r][col].div(p);
                for c in col..n {
                    a[r][c] = a[r][c].sub(factor.mul(a[col][c]));
                }
            }
        }
    }
    let d = d.as_int().expect("product of pivots of an integer matrix");
    sign * d
}

/// Signature `(positive, negative)` of a nondegenerate symmetric integer
/// matrix, by exact congruence diagonalization.
///
/// A nonzero diagonal entry in the remaining block is swapped into pivot
/// position when one exists; otherwise the whole remaining diagonal is zero
/// and adding an off-diagonal partner's row and column makes the pivot
/// `2·g[k][j] ≠ 0` without leaving the congruence class.
pub(crate) fn signature(g: &[Vec<i64>]) -> (usize, usize) {
    let n = g.len();
    let mut a: Vec<Vec<Frac>> = g
        .iter()
        .map(|row| row.iter().map(|&x| Frac::from_int(x as i128)).collect())
        .collect();
    let (mut pos, mut neg) = (0, 0);
    for k in 0..n {
        if let Some(r) = (k..n).find(|&r| !a[r][r].is_zero()) {
            if r != k {
                a.swap(k, r);
                for row in a.iter_mut() {
                    row.swap(k, r);
                }
            }
        } else {
            let partner = (k + 1..n).find(|&j| !a[k][j].is_zero());
            let Some(j) = partner else {
                panic!("degenerate symmetric matrix in signature computation");
            };
            for c in 0..n {
                let add = a[j][c];
                a[k][c] = a[k][c].add(add);
            }
            for r in 0..n {
                let add = a[r][j];
                a[r][k] = a[r][k].add(add);
            }
        }
        let p = a[k][k];
        assert!(!p.is_zero(), "degenerate symmetric matrix");
        if p.signum() > 0 {
            pos += 1;
        } else {
            neg += 1;
        }
        for r in k + 1..n {
            if !a[r][k].is_zero() {
                let factor = a[r][k].div(p);
                for c in 0..n {
                    let sub = factor.mul(a[k][c]);
                    a[r][c] = a[r][c].sub(sub);
                }
                for rr in 0..n {
                    let sub = factor.mul(a[rr][k]);
                    // column operation mirroring the row operation
                    a[rr][r] = a[rr][r].sub(sub);
                }
            }
        }
    }
    (pos, neg)
}
