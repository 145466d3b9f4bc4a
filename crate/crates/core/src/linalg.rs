//! Small dense matrices over the rationals.

use num_traits::{One, Zero};

use crate::{QPoly, Rational};

pub type Matrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut s = Rational::zero();
                    for t in 0..k {
                        if !a[i][t].is_zero() && !b[t][j].is_zero() {
                            s += &a[i][t] * &b[t][j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn trace(a: &Matrix) -> Rational {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

/// Determinant by Gaussian elimination.
pub fn det(a: &Matrix) -> Rational {
    let n = a.len();
    let mut m = a.clone();
    let mut d = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            d = -d;
        }
        let p = m[col][col].clone();
        d *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    d
}

/// Characteristic polynomial `det(xI - A)` by the Faddeev-LeVerrier recursion.
pub fn char_poly(a: &Matrix) -> QPoly {
    let n = a.len();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = identity(n);
    for k in 1..=n {
        let am = mat_mul(a, &m);
        let c = -trace(&am) / Rational::from_integer((k as i64).into());
        coeffs[n - k] = c.clone();
        m = am;
        for i in 0..n {
            m[i][i] += &c;
        }
    }
    QPoly::new(coeffs)
}

/// Solve `A x = b` for square nonsingular `A`.
pub fn solve(a: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(piv, col);
        let p = m[col][col].clone();
        for c in col..=n {
            m[col][c] = &m[col][c] / &p;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..=n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    #[test]
    fn det_and_charpoly() {
        let a = vec![vec![r(2), r(1)], vec![r(1), r(3)]];
        assert_eq!(det(&a), r(5));
        assert_eq!(char_poly(&a), QPoly::new(vec![r(5), r(-5), r(1)]));
        let x = solve(&a, &[r(3), r(4)]).unwrap();
        assert_eq!(x, vec![r(1), r(1)]);
    }
}
