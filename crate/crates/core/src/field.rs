//! Number fields `K = Q[x]/(f)` in the power basis, with exact element
//! arithmetic and sign data at the real embeddings.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::factor_z;
use crate::linalg::{self, Matrix};
use crate::sturm::{self, RootInterval, SturmChain};
use crate::{QPoly, Rational, ZPoly};

/// Largest degree accepted by [`NumberField::new`].
pub const MAX_DEGREE: usize = 6;

/// Coordinates in the power basis `1, θ, …, θ^{n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct FieldElement {
    pub coords: Vec<Rational>,
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn as_poly(&self) -> QPoly {
        QPoly::new(self.coords.clone())
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coords.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// All coordinates are integers, i.e. the element lies in `Z[θ]`.
    pub fn is_integral_coords(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// Least common multiple of the coordinate denominators.
    pub fn denominator(&self) -> BigInt {
        self.coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Sum of absolute values of the coordinates; used to order search results.
    pub fn height(&self) -> Rational {
        self.coords.iter().map(|c| c.abs()).sum()
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_poly())
    }
}

#[derive(Clone, Debug)]
pub struct NumberField {
    pub defining_poly: ZPoly,
    pub degree: usize,
    pub poly_disc: BigInt,
    /// Known when every prime whose square divides `poly_disc` passes the
    /// Dedekind index test (or when computed directly for quadratic fields).
    pub field_disc: Option<BigInt>,
    pub signature: (usize, usize),
    pub real_roots: Vec<RootInterval<Rational>>,
    fq: QPoly,
    sturm: SturmChain<Rational>,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.defining_poly == other.defining_poly
    }
}

impl Eq for NumberField {}

/// Build a field from integer coefficients listed low-to-high.
pub fn make_field(coeffs: &[BigInt]) -> Result<NumberField> {
    NumberField::new(ZPoly::new(coeffs.to_vec()))
}

impl NumberField {
    pub fn new(f: ZPoly) -> Result<Self> {
        let n = match f.degree() {
            None | Some(0) => return Err(Error::DegreeZero),
            Some(n) => n,
        };
        if !f.is_monic() {
            return Err(Error::NotMonic);
        }
        if n > MAX_DEGREE {
            return Err(Error::Unsupported(format!(
                "degree {n} exceeds the supported maximum {MAX_DEGREE}"
            )));
        }
        if let Some(g) = factor_z::proper_factor(&f) {
            return Err(Error::Reducible {
                factor: g.to_string(),
            });
        }
        let fq = f.to_rational();
        let sturm = SturmChain::new(&fq);
        let real_roots = sturm::isolate_real_roots(&fq);
        let r1 = real_roots.len();
        let mut k = NumberField {
            defining_poly: f,
            degree: n,
            poly_disc: BigInt::zero(),
            field_disc: None,
            signature: (r1, (n - r1) / 2),
            real_roots,
            fq,
            sturm,
        };
        let df = k.from_poly(&k.fq.derivative());
        let nd = k.norm(&df).to_integer();
        k.poly_disc = if (n * (n - 1) / 2) % 2 == 1 { -nd } else { nd };
        k.field_disc = k.compute_field_disc();
        Ok(k)
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Result<Self> {
        NumberField::new(ZPoly::from_i64s(coeffs))
    }

    /// The rationals, presented as `Q[x]/(x)`.
    pub fn rationals() -> Self {
        NumberField::new(ZPoly::from_i64s(&[0, 1])).expect("x is irreducible")
    }

    fn compute_field_disc(&self) -> Option<BigInt> {
        if self.degree == 1 {
            return Some(BigInt::one());
        }
        if self.degree == 2 {
            let (d, _) = arith::squarefree_part(&self.poly_disc);
            let four = BigInt::from(4);
            return Some(if d.mod_floor(&four).is_one() { d } else { d * four });
        }
        let fac = arith::factor(&self.poly_disc);
        if !fac.is_complete() {
            return None;
        }
        for (q, e) in &fac.factors {
            if *e >= 2 {
                let q = arith::to_u64(q)?;
                if !crate::ideal::index_clean(&self.defining_poly, q) {
                    return None;
                }
            }
        }
        Some(self.poly_disc.clone())
    }

    pub fn is_rationals(&self) -> bool {
        self.degree == 1
    }

    pub fn is_totally_real(&self) -> bool {
        self.signature.1 == 0
    }

    pub fn defining_qpoly(&self) -> &QPoly {
        &self.fq
    }

    pub fn sturm_chain(&self) -> &SturmChain<Rational> {
        &self.sturm
    }

    // ---- construction ----

    pub fn elem(&self, coords: Vec<Rational>) -> FieldElement {
        assert!(coords.len() <= self.degree, "too many coordinates");
        let mut c = coords;
        c.resize(self.degree, Rational::zero());
        FieldElement { coords: c }
    }

    pub fn elem_i64(&self, coords: &[i64]) -> FieldElement {
        self.elem(coords.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_poly(&self, p: &QPoly) -> FieldElement {
        let r = p.rem(&self.fq);
        let mut c = r.into_coeffs();
        c.resize(self.degree, Rational::zero());
        FieldElement { coords: c }
    }

    pub fn from_zpoly(&self, p: &ZPoly) -> FieldElement {
        self.from_poly(&p.to_rational())
    }

    pub fn from_rational(&self, q: Rational) -> FieldElement {
        self.elem(vec![q])
    }

    pub fn from_int(&self, k: impl Into<BigInt>) -> FieldElement {
        self.from_rational(Rational::from_integer(k.into()))
    }

    pub fn zero(&self) -> FieldElement {
        self.from_int(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// The generator θ (a rational number when n = 1).
    pub fn theta(&self) -> FieldElement {
        self.from_poly(&QPoly::x())
    }

    // ---- arithmetic ----

    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        FieldElement {
            coords: x.coords.iter().zip(&y.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        FieldElement {
            coords: x.coords.iter().zip(&y.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self, x: &FieldElement) -> FieldElement {
        FieldElement {
            coords: x.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.from_poly(&(&x.as_poly() * &y.as_poly()))
    }

    pub fn scale(&self, x: &FieldElement, q: &Rational) -> FieldElement {
        FieldElement {
            coords: x.coords.iter().map(|a| a * q).collect(),
        }
    }

    pub fn inv(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s) = half_xgcd(&x.as_poly(), &self.fq);
        debug_assert!(g.degree() == Some(0));
        let s = s.scale(&(Rational::one() / g.lc()));
        Ok(self.from_poly(&s))
    }

    pub fn div(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    /// Integer power; negative exponents need `x != 0`.
    pub fn pow(&self, x: &FieldElement, e: i64) -> Result<FieldElement> {
        let base = if e < 0 { self.inv(x)? } else { x.clone() };
        let mut k = e.unsigned_abs();
        let mut b = base;
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            k >>= 1;
            if k > 0 {
                b = self.mul(&b, &b);
            }
        }
        Ok(acc)
    }

    /// Matrix of multiplication by `x` acting on coordinate columns.
    pub fn mult_matrix(&self, x: &FieldElement) -> Matrix {
        let n = self.degree;
        let mut m = vec![vec![Rational::zero(); n]; n];
        let mut col = x.clone();
        let theta = self.theta();
        for j in 0..n {
            for i in 0..n {
                m[i][j] = col.coords[i].clone();
            }
            col = self.mul(&col, &theta);
        }
        m
    }

    pub fn norm(&self, x: &FieldElement) -> Rational {
        linalg::det(&self.mult_matrix(x))
    }

    pub fn trace(&self, x: &FieldElement) -> Rational {
        linalg::trace(&self.mult_matrix(x))
    }

    pub fn norm_trace(&self, x: &FieldElement) -> (Rational, Rational) {
        let m = self.mult_matrix(x);
        (linalg::det(&m), linalg::trace(&m))
    }

    /// Characteristic polynomial of `x` over Q (degree n, monic).
    pub fn char_poly(&self, x: &FieldElement) -> QPoly {
        linalg::char_poly(&self.mult_matrix(x))
    }

    // ---- real embeddings ----

    /// Signs of `x` at each real embedding, in increasing order of the roots.
    pub fn real_signs(&self, x: &FieldElement) -> Result<Vec<i8>> {
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        let g = x.as_poly();
        Ok(self
            .real_roots
            .iter()
            .map(|iv| sturm::sign_at_root(&self.sturm, iv, &g).0)
            .collect())
    }

    pub fn is_totally_positive(&self, x: &FieldElement) -> Result<bool> {
        if !self.is_totally_real() {
            return Err(Error::NotTotallyReal);
        }
        Ok(self.real_signs(x)?.iter().all(|&s| s > 0))
    }

    /// Isolating interval of the i-th real root refined to width below `eps`.
    pub fn refined_root(&self, i: usize, eps: &Rational) -> RootInterval<Rational> {
        let mut iv = self.real_roots[i].clone();
        while &(&iv.hi - &iv.lo) >= eps {
            iv = sturm::bisect(&self.sturm, &iv);
        }
        iv
    }
}

/// `(g, s)` with `g = gcd(a, b)` and `s·a ≡ g (mod b)`.
fn half_xgcd(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (QPoly::one(), QPoly::zero());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = &s0 - &(&q * &s1);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    (r0, s0)
}
