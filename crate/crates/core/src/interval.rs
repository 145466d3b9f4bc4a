//! Closed rational intervals, used to bound real embeddings and their
//! logarithms without floating point.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::field::{FieldElement, NumberField};
use crate::{QPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn add(&self, o: &Self) -> Self {
        Interval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Interval::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }

    pub fn neg(&self) -> Self {
        Interval::new(-&self.hi, -&self.lo)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval::new(lo, hi)
    }

    pub fn abs(&self) -> Self {
        if self.lo.is_negative() && self.hi.is_positive() {
            Interval::new(Rational::zero(), self.lo.abs().max(self.hi.abs()))
        } else if self.hi.is_positive() || self.hi.is_zero() && self.lo.is_zero() {
            self.clone()
        } else {
            self.neg()
        }
    }

    /// Natural logarithm; requires `lo > 0`.
    pub fn ln(&self) -> Self {
        assert!(self.lo.is_positive(), "ln of a non-positive interval");
        Interval::new(ln_bounds(&self.lo).lo, ln_bounds(&self.hi).hi)
    }
}

/// Interval image of a polynomial over an interval (Horner form).
pub fn eval_poly(p: &QPoly, x: &Interval) -> Interval {
    let mut acc = Interval::point(Rational::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add(&Interval::point(c.clone()));
    }
    acc
}

const DYADIC_BITS: u32 = 80;
const SERIES_TERMS: usize = 40;

fn floor_dyadic(x: &Rational) -> Rational {
    let s = BigInt::one() << DYADIC_BITS;
    let n = (x * Rational::from_integer(s.clone())).floor().to_integer();
    Rational::new(n, s)
}

fn ceil_dyadic(x: &Rational) -> Rational {
    let s = BigInt::one() << DYADIC_BITS;
    let n = (x * Rational::from_integer(s.clone())).ceil().to_integer();
    Rational::new(n, s)
}

/// Bounds on `2·atanh(z)` for `0 <= z <= 1/3`.
fn two_atanh(z: &Rational) -> Interval {
    let z2 = z * z;
    let mut term = z.clone();
    let mut sum = Rational::zero();
    for j in 0..SERIES_TERMS {
        sum += &term / rat(2 * j as i64 + 1);
        term = floor_dyadic(&(&term * &z2)).max(Rational::zero());
    }
    // Truncating the powers loses at most SERIES_TERMS * 2^-80 per term.
    let slack = Rational::new(BigInt::from(SERIES_TERMS as u64 * 2), BigInt::one() << DYADIC_BITS);
    let zk = z.pow(2 * SERIES_TERMS as i32 + 1);
    let tail = zk / (rat(2 * SERIES_TERMS as i64 + 1) * (rat(1) - &z2));
    Interval::new(rat(2) * &sum, rat(2) * (&sum + &tail + &slack))
}

fn ln2() -> Interval {
    static LN2: OnceLock<Interval> = OnceLock::new();
    LN2.get_or_init(|| two_atanh(&Rational::new(1.into(), 3.into())))
        .clone()
}

/// Bounds on `ln(x)` for rational x > 0.
pub fn ln_bounds(x: &Rational) -> Interval {
    assert!(x.is_positive());
    if x < &rat(1) {
        return ln_bounds(&x.recip()).neg();
    }
    let mut k = 0i64;
    let mut m = x.clone();
    let two = rat(2);
    while m >= two {
        m /= &two;
        k += 1;
    }
    let z = (&m - rat(1)) / (&m + rat(1));
    let lo_z = floor_dyadic(&z);
    let hi_z = ceil_dyadic(&z).min(Rational::new(1.into(), 3.into()));
    let l2 = ln2();
    let base = Interval::new(two_atanh(&lo_z).lo, two_atanh(&hi_z).hi);
    base.add(&Interval::new(rat(k) * &l2.lo, rat(k) * &l2.hi))
}

/// Interval containing the image of x under the i-th real embedding, with
/// the root interval refined below width `eps`.
pub fn real_embedding(field: &NumberField, x: &FieldElement, i: usize, eps: &Rational) -> Interval {
    let iv = field.refined_root(i, eps);
    eval_poly(&x.as_poly(), &Interval::new(iv.lo, iv.hi))
}

/// Intervals for `ln |σ_i(x)|` over the real embeddings, refining until every
/// image interval excludes zero.
pub fn log_abs_real(field: &NumberField, x: &FieldElement) -> Vec<Interval> {
    (0..field.real_roots.len())
        .map(|i| {
            let mut eps = Rational::new(1.into(), BigInt::from(1u64 << 20));
            loop {
                let v = real_embedding(field, x, i, &eps).abs();
                if v.lo.is_positive() && (&v.hi / &v.lo) < Rational::new(1001.into(), 1000.into()) {
                    return v.ln();
                }
                eps = eps / rat(1 << 10);
                if eps.denom().bits() > 4000 {
                    return v.abs().ln();
                }
            }
        })
        .collect()
}

/// Floor of a positive rational's square root, as an integer.
pub fn isqrt_floor(x: &Rational) -> BigInt {
    let n = x.floor().to_integer();
    let mut r = n.sqrt();
    while Rational::from_integer((&r + 1) * (&r + 1)) <= *x {
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_brackets_known_values() {
        let l2 = ln2();
        // ln 2 = 0.693147180559945...
        assert!(l2.lo < Rational::new(693148.into(), 1000000.into()));
        assert!(l2.hi > Rational::new(693147.into(), 1000000.into()));
        assert!(l2.width() < Rational::new(1.into(), BigInt::from(10u64).pow(15)));
        let l10 = ln_bounds(&rat(10));
        assert!(l10.lo < Rational::new(2302586.into(), 1000000.into()));
        assert!(l10.hi > Rational::new(2302585.into(), 1000000.into()));
        let lsmall = ln_bounds(&Rational::new(1.into(), 10.into()));
        assert!(lsmall.hi < rat(0));
    }

    #[test]
    fn embedding_of_unit_in_sqrt2() {
        let k = NumberField::from_int_coeffs(&[-2, 0, 1]).unwrap();
        let u = k.elem_i64(&[1, 1]);
        let logs = log_abs_real(&k, &u);
        // ln(sqrt2 - 1) = -ln(1 + sqrt2)
        let s = logs[0].add(&logs[1]);
        assert!(s.contains_zero());
        assert!(logs[1].lo > Rational::new(88.into(), 100.into()));
    }
}
