//! Prime ideals above rational primes via Dedekind factorization, splitting
//! shapes, and P-adic valuations of field elements.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};
use crate::fp::{self, FpPoly};
use crate::{Rational, ZPoly};

/// A prime `P = (q, g(θ))` of O_K, valid when q does not divide the index of
/// `Z[θ]`. `beta_num / q` is an anti-uniformizer: it lies in `P^{-1}` but not
/// in O_K, and has non-negative valuation at every other prime.
#[derive(Clone, Debug)]
pub struct PrimeIdeal {
    pub q: u64,
    pub e: u32,
    pub f: u32,
    pub gen_poly: FpPoly,
    beta_num: FieldElement,
}

impl PartialEq for PrimeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.gen_poly == other.gen_poly
    }
}

impl Eq for PrimeIdeal {}

impl PartialOrd for PrimeIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered by norm, then rational prime, then the Dedekind factor.
impl Ord for PrimeIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.norm()
            .cmp(&other.norm())
            .then(self.q.cmp(&other.q))
            .then_with(|| self.gen_poly.c.cmp(&other.gen_poly.c))
    }
}

impl PrimeIdeal {
    /// Absolute norm `q^f`.
    pub fn norm(&self) -> BigInt {
        BigInt::from(self.q).pow(self.f)
    }

    /// `β = h(θ)/q` with `β·P ⊆ O_K` and `β ∉ O_K`.
    pub fn anti_uniformizer(&self, field: &NumberField) -> FieldElement {
        field.scale(&self.beta_num, &Rational::new(1.into(), self.q.into()))
    }

    /// The root `r` when `gen_poly = x - r` (residue degree one).
    pub fn residue_root(&self) -> Option<u64> {
        (self.gen_poly.deg() == 1).then(|| (self.q - self.gen_poly.c[0]) % self.q)
    }

    /// The second generator `g(θ)` of `P = (q, g(θ))`, with `g` lifted to
    /// non-negative integer coefficients.
    pub fn second_generator(&self, field: &NumberField) -> FieldElement {
        field.from_zpoly(&self.gen_poly.to_zpoly())
    }

    pub fn label(&self) -> String {
        format!("({}, {})", self.q, self.gen_poly.to_zpoly())
    }
}

fn check_prime(q: u64) -> Result<()> {
    if arith::is_prime_u64(q) {
        Ok(())
    } else {
        Err(Error::NotPrime(q.into()))
    }
}

/// Dedekind's criterion: true when q does not divide `[O_K : Z[θ]]`.
pub fn index_clean(f: &ZPoly, q: u64) -> bool {
    let fb = FpPoly::from_zpoly(f, q);
    let fac = fp::factor(&fb);
    let g = fac.iter().fold(FpPoly::one(q), |acc, (gi, _)| acc.mul(gi));
    let h = fb.div_exact(&g);
    let lifted = &g.to_zpoly() * &h.to_zpoly();
    let diff = &lifted - f;
    let qb = BigInt::from(q);
    let big_f = ZPoly::new(diff.coeffs().iter().map(|c| c / &qb).collect());
    let fbar = FpPoly::from_zpoly(&big_f, q);
    fbar.gcd(&g).gcd(&h).is_one()
}

/// Prime ideals above q, one per irreducible factor of f mod q, in the order
/// of the factors (by degree, then coefficients).
pub fn factor_rational_prime(field: &NumberField, q: u64) -> Result<Vec<PrimeIdeal>> {
    check_prime(q)?;
    let f = &field.defining_poly;
    if !index_clean(f, q) {
        return Err(Error::IndexDivisor {
            q: q.into(),
            poly: f.to_string(),
        });
    }
    let fb = FpPoly::from_zpoly(f, q);
    Ok(fp::factor(&fb)
        .into_iter()
        .map(|(g, e)| {
            let h = fb.div_exact(&g);
            PrimeIdeal {
                q,
                e,
                f: g.deg() as u32,
                beta_num: field.from_zpoly(&h.to_zpoly()),
                gen_poly: g,
            }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplittingType {
    Inert,
    TotallyRamified,
    TotallySplit,
    Mixed(Vec<(u32, u32)>),
}

/// Factorization shape of q with the three named predicates. For K = Q all
/// three predicates hold and the type is reported as `TotallySplit`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub q: u64,
    pub kind: SplittingType,
    /// `(e, f)` per prime, sorted descending.
    pub pattern: Vec<(u32, u32)>,
    pub inert: bool,
    pub totally_ramified: bool,
    pub totally_split: bool,
    pub primes: Vec<PrimeIdeal>,
}

pub fn splitting(field: &NumberField, q: u64) -> Result<Splitting> {
    let primes = factor_rational_prime(field, q)?;
    let n = field.degree as u32;
    let mut pattern: Vec<(u32, u32)> = primes.iter().map(|p| (p.e, p.f)).collect();
    pattern.sort_by(|a, b| b.cmp(a));
    let inert = primes.len() == 1 && primes[0].f == n;
    let totally_ramified = primes.len() == 1 && primes[0].e == n;
    let totally_split = primes.len() == n as usize && primes.iter().all(|p| p.e == 1 && p.f == 1);
    let kind = if totally_split {
        SplittingType::TotallySplit
    } else if inert {
        SplittingType::Inert
    } else if totally_ramified {
        SplittingType::TotallyRamified
    } else {
        SplittingType::Mixed(pattern.clone())
    };
    Ok(Splitting {
        q,
        kind,
        pattern,
        inert,
        totally_ramified,
        totally_split,
        primes,
    })
}

pub fn splitting_type(field: &NumberField, q: u64) -> Result<SplittingType> {
    Ok(splitting(field, q)?.kind)
}

/// All primes above 2.
pub fn s_k(field: &NumberField) -> Result<Vec<PrimeIdeal>> {
    factor_rational_prime(field, 2)
}

/// Primes above 2 whose ramification index is prime to 3.
pub fn u_k(field: &NumberField) -> Result<Vec<PrimeIdeal>> {
    Ok(s_k(field)?.into_iter().filter(|p| p.e % 3 != 0).collect())
}

/// `v_P(x)` for nonzero x.
pub fn valuation(field: &NumberField, x: &FieldElement, p: &PrimeIdeal) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let qb = BigInt::from(p.q);
    let d = x.denominator();
    let y = field.scale(x, &Rational::from_integer(d.clone()));
    let vd = if d.is_one() {
        0
    } else {
        p.e as i64 * arith::val_int(&d, &qb) as i64
    };
    let ny = field.norm(&y).to_integer();
    if !(&ny % &qb).is_zero() {
        return Ok(-vd);
    }
    let mut z = y;
    let mut k = 0i64;
    loop {
        let w = field.mul(&z, &p.beta_num);
        if w.coords.iter().all(|c| (c.numer() % &qb).is_zero()) {
            z = field.scale(&w, &Rational::new(BigInt::one(), qb.clone()));
            k += 1;
        } else {
            return Ok(k - vd);
        }
    }
}

/// `v_P(x)`, or `None` when x = 0.
pub fn valuation_opt(field: &NumberField, x: &FieldElement, p: &PrimeIdeal) -> Option<i64> {
    valuation(field, x, p).ok()
}

/// The rational primes dividing numerator or denominator of `Norm(x)` and
/// the denominator of x, i.e. every prime under which x can have non-zero
/// valuation. The second component is false when factoring was incomplete.
pub fn support_primes(field: &NumberField, x: &FieldElement) -> (Vec<BigInt>, bool) {
    let nx = field.norm(x);
    let mut acc = nx.numer().abs() * nx.denom() * x.denominator();
    if acc.is_zero() {
        acc = BigInt::one();
    }
    let fac = arith::factor(&acc);
    (fac.primes().cloned().collect(), fac.is_complete())
}
