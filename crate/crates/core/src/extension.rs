//! Quadratic extensions `K(√a)`: square testing and absolute defining
//! polynomials, both through characteristic polynomials of elements of
//! `K[Y]/(Y² - a)` acting on the 2n-dimensional Q-basis `θ^i, θ^i·Y`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::factor_z;
use crate::field::{FieldElement, NumberField, MAX_DEGREE};
use crate::ideal;
use crate::linalg::{self, Matrix};
use crate::{QPoly, Rational, ZPoly};

/// Characteristic polynomial over Q of `u + v·Y` in `K[Y]/(Y² - a)`.
fn relative_char_poly(k: &NumberField, a: &FieldElement, u: &FieldElement, v: &FieldElement) -> QPoly {
    let n = k.degree;
    let mu = k.mult_matrix(u);
    let mv = k.mult_matrix(v);
    let mva = k.mult_matrix(&k.mul(v, a));
    let mut m: Matrix = vec![vec![Rational::zero(); 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = mu[i][j].clone();
            m[i][j + n] = mva[i][j].clone();
            m[i + n][j] = mv[i][j].clone();
            m[i + n][j + n] = mu[i][j].clone();
        }
    }
    linalg::char_poly(&m)
}

fn is_squarefree(f: &QPoly) -> bool {
    f.gcd(&f.derivative()).degree() == Some(0)
}

/// `a·d²` with integral coordinates; same square class as a.
fn integral_rep(k: &NumberField, a: &FieldElement) -> FieldElement {
    let d = a.denominator();
    k.scale(a, &Rational::from_integer(&d * &d))
}

/// Shifts `0, 1, -1, 2, -2, ...`.
fn shifts() -> impl Iterator<Item = i64> {
    (0..).map(|i: i64| if i % 2 == 0 { -(i / 2) } else { i / 2 + 1 })
}

/// The first shift k for which the primitive element `Y + kθ` has a
/// squarefree characteristic polynomial, together with that polynomial.
/// At most `C(2n, 2)` shifts fail.
fn squarefree_norm(k: &NumberField, a: &FieldElement) -> (i64, ZPoly) {
    let n = k.degree;
    let limit = (2 * n) * (2 * n - 1) / 2 + 1;
    for s in shifts().take(limit + 1) {
        let u = k.scale(&k.theta(), &Rational::from_integer(s.into()));
        let chi = relative_char_poly(k, a, &u, &k.one());
        if is_squarefree(&chi) {
            return (s, chi.to_integer().expect("integral element"));
        }
    }
    unreachable!("a squarefree norm exists among the first C(2n,2)+1 shifts")
}

/// Whether x is a square in K. `Y² - x` splits over K exactly when the
/// squarefree norm of `Y + kθ` splits over Q.
pub fn is_square(k: &NumberField, x: &FieldElement) -> bool {
    if x.is_zero() {
        return true;
    }
    // x = y² forces N(x) = N(y)², a rational square
    let nx = k.norm(x);
    if nx < Rational::zero() || !(arith::is_square(nx.numer()) && arith::is_square(nx.denom())) {
        return false;
    }
    if k.degree == 1 {
        let q = &x.coords[0];
        return arith::is_square(q.numer()) && arith::is_square(q.denom());
    }
    let a = integral_rep(k, x);
    let (_, chi) = squarefree_norm(k, &a);
    factor_z::proper_factor(&chi).is_some()
}

/// A square root of x when one exists.
pub fn sqrt(k: &NumberField, x: &FieldElement) -> Option<FieldElement> {
    if x.is_zero() {
        return Some(k.zero());
    }
    if !is_square(k, x) {
        return None;
    }
    let d = x.denominator();
    let a = integral_rep(k, x);
    // a = y²: y is a root of Y² - a in K; find it from the K-linear factor
    // of Y² - a, via the Q-factor of the squarefree norm.
    let (s, chi) = squarefree_norm(k, &a);
    let g = factor_z::factor_monic(&chi).into_iter().next().expect("reducible").0;
    // the factor g of degree n is the char poly of y + sθ over Q, and
    // y + sθ is a root of g in K: solve with the K-gcd of g(Z) and (Z - sθ)² - a.
    let y = root_via_gcd(k, &a, s, &g.to_rational())?;
    let y = k.scale(&y, &Rational::new(BigInt::one(), d));
    debug_assert_eq!(&k.mul(&y, &y), x);
    Some(y)
}

/// Polynomials with coefficients in K, low to high.
type KPoly = Vec<FieldElement>;

fn kpoly_trim(mut p: KPoly) -> KPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn kpoly_rem(k: &NumberField, a: &KPoly, b: &KPoly) -> KPoly {
    let mut r = kpoly_trim(a.clone());
    let b = kpoly_trim(b.clone());
    let lb = k.inv(b.last().expect("nonzero divisor")).unwrap();
    while r.len() >= b.len() && !r.is_empty() {
        let c = k.mul(r.last().unwrap(), &lb);
        let sh = r.len() - b.len();
        for (i, bc) in b.iter().enumerate() {
            r[sh + i] = k.sub(&r[sh + i], &k.mul(&c, bc));
        }
        r = kpoly_trim(r);
    }
    r
}

fn kpoly_gcd(k: &NumberField, a: &KPoly, b: &KPoly) -> KPoly {
    let (mut a, mut b) = (kpoly_trim(a.clone()), kpoly_trim(b.clone()));
    while !b.is_empty() {
        let r = kpoly_rem(k, &a, &b);
        a = b;
        b = r;
    }
    a
}

fn root_via_gcd(k: &NumberField, a: &FieldElement, s: i64, g: &QPoly) -> Option<FieldElement> {
    let st = k.scale(&k.theta(), &Rational::from_integer(s.into()));
    // (Z - sθ)² - a = Z² - 2sθ Z + (s²θ² - a)
    let quad: KPoly = vec![
        k.sub(&k.mul(&st, &st), a),
        k.scale(&st, &Rational::from_integer((-2).into())),
        k.one(),
    ];
    let gk: KPoly = g.coeffs().iter().map(|c| k.from_rational(c.clone())).collect();
    let h = kpoly_gcd(k, &quad, &gk);
    if h.len() != 2 {
        return None;
    }
    // root of h0 + h1 Z is -h0/h1, which equals y + sθ
    let z = k.neg(&k.div(&h[0], &h[1]).ok()?);
    Some(k.sub(&z, &st))
}

/// Outcome of [`quadratic_extension`].
#[derive(Clone, Debug)]
pub struct Extension {
    pub field: NumberField,
    /// The radicand actually used: a times a nonzero rational square.
    pub radicand: FieldElement,
    /// The primitive element as `(u, v)` with value `u + v·√radicand`.
    pub generator: (FieldElement, FieldElement),
    /// The defining polynomial passes the Dedekind test at 2.
    pub two_clean: bool,
}

/// `L = K(√a)` as an absolute field. The defining polynomial is the
/// characteristic polynomial of an integral primitive element, preferring
/// `√a + kθ` and otherwise searching small half-integral combinations for
/// one whose polynomial is 2-maximal, so that primes above 2 can be factored.
pub fn quadratic_extension(k: &NumberField, a: &FieldElement) -> Result<Extension> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    if 2 * k.degree > MAX_DEGREE {
        return Err(Error::Unsupported(format!(
            "an extension of degree {} exceeds the maximum degree {MAX_DEGREE}",
            2 * k.degree
        )));
    }
    if is_square(k, a) {
        return Err(Error::IsSquare);
    }
    let a = integral_rep(k, a);
    let a = strip_square_integers(k, &a);
    let n = k.degree;
    let mut first: Option<(ZPoly, FieldElement, FieldElement)> = None;
    let mut consider = |u: FieldElement, v: FieldElement| -> Option<(ZPoly, FieldElement, FieldElement)> {
        let chi = relative_char_poly(k, &a, &u, &v);
        if !is_squarefree(&chi) {
            return None;
        }
        let z = chi.to_integer()?;
        if factor_z::proper_factor(&z).is_some() {
            return None;
        }
        if first.is_none() {
            first = Some((z.clone(), u.clone(), v.clone()));
        }
        ideal::index_clean(&z, 2).then_some((z, u, v))
    };
    let mut found = None;
    for s in shifts().take(2 * n * n + 4) {
        let u = k.scale(&k.theta(), &Rational::from_integer(s.into()));
        if let Some(hit) = consider(u, k.one()) {
            found = Some(hit);
            break;
        }
    }
    if found.is_none() {
        // (u + v√a)/2 with u, v in {-1, 0, 1}-combinations of the power basis
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let mut vecs = Vec::new();
        crate::units::for_each_shell(2 * n, 1, &mut |c| vecs.push(c.to_vec()));
        for c in vecs {
            let u = k.scale(&k.elem_i64(&c[..n]), &half);
            let v = k.scale(&k.elem_i64(&c[n..]), &half);
            if v.is_zero() {
                continue;
            }
            if let Some(hit) = consider(u, v) {
                found = Some(hit);
                break;
            }
        }
    }
    let (two_clean, (poly, u, v)) = match found {
        Some(hit) => (true, hit),
        None => (false, first.expect("Y + kθ is primitive for some small k")),
    };
    Ok(Extension {
        field: NumberField::new(poly)?,
        radicand: a,
        generator: (u, v),
        two_clean,
    })
}

/// Divide out rational square factors from an integral element's content.
fn strip_square_integers(k: &NumberField, a: &FieldElement) -> FieldElement {
    let mut g = BigInt::zero();
    for c in &a.coords {
        g = num_integer::Integer::gcd(&g, c.numer());
    }
    if g.is_zero() {
        return a.clone();
    }
    let (_, root) = arith::squarefree_part(&g);
    k.scale(a, &Rational::new(BigInt::one(), &root * &root))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares() {
        let q = NumberField::rationals();
        assert!(is_square(&q, &q.from_rational(Rational::new(9.into(), 4.into()))));
        assert!(!is_square(&q, &q.from_int(2)));
        assert!(!is_square(&q, &q.from_int(-1)));
        let k = NumberField::from_int_coeffs(&[-2, 0, 1]).unwrap();
        // (1+√2)² = 3 + 2√2
        assert!(is_square(&k, &k.elem_i64(&[3, 2])));
        assert!(!is_square(&k, &k.elem_i64(&[1, 1])));
        assert!(is_square(&k, &k.from_int(2)));
        assert!(!is_square(&k, &k.from_int(-1)));
        assert_eq!(sqrt(&k, &k.from_int(2)).map(|y| k.mul(&y, &y)), Some(k.from_int(2)));
        let c = NumberField::from_int_coeffs(&[1, 0, -1, 1]).unwrap();
        let t = c.theta();
        let y = c.add(&t, &c.from_int(3));
        assert!(is_square(&c, &c.mul(&y, &y)));
        assert!(!is_square(&c, &y));
        assert_eq!(sqrt(&c, &c.mul(&y, &y)).map(|r| c.mul(&r, &r)), Some(c.mul(&y, &y)));
    }

    #[test]
    fn extensions_of_q() {
        let q = NumberField::rationals();
        let l = quadratic_extension(&q, &q.from_int(-1)).unwrap();
        assert_eq!(l.field.defining_poly, ZPoly::from_i64s(&[1, 0, 1]));
        let l = quadratic_extension(&q, &q.from_int(2)).unwrap();
        assert_eq!(l.field.defining_poly, ZPoly::from_i64s(&[-2, 0, 1]));
        assert_eq!(quadratic_extension(&q, &q.one()).unwrap_err(), Error::IsSquare);
        let l = quadratic_extension(&q, &q.from_int(5)).unwrap();
        assert!(l.two_clean);
        assert_eq!(ideal::s_k(&l.field).unwrap().len(), 1);
        // -12 ~ -3 and Z[√-3] is not 2-maximal; (1 + √-3)/2 is used instead
        let l = quadratic_extension(&q, &q.from_int(-12)).unwrap();
        assert!(l.two_clean);
        assert_eq!(l.field.poly_disc, BigInt::from(-3));
    }

    #[test]
    fn extension_of_sqrt2() {
        let k = NumberField::from_int_coeffs(&[-2, 0, 1]).unwrap();
        let l = quadratic_extension(&k, &k.from_int(-1)).unwrap();
        assert_eq!(l.field.degree, 4);
        assert!(l.two_clean);
        let s = ideal::s_k(&l.field).unwrap();
        assert_eq!(s.iter().map(|p| p.e * p.f).sum::<u32>(), 4);
    }
}
