//! Frey curves for `x^p + y^p = 2^r z^p` (family A) and `x^p + y^p = z^2`
//! (family B): closed-form invariants, a literal Weierstrass cross-check,
//! symbolic valuation profiles, conductor shapes and the Legendre λ-invariant.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};
use crate::ideal::PrimeIdeal;
use crate::valform::ValuationForm;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `Y^2 = X(X - a^p)(X + b^p)` for `a^p + b^p = 2^r c^p`.
    TwoPowerTwist { r: u32 },
    /// `Y^2 = X^3 + 4cX^2 + 4a^p X` for `a^p + b^p = c^2`.
    PPTwo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exponent {
    Symbolic,
    Concrete(u32),
}

#[derive(Clone, Debug)]
pub struct FreySpec {
    pub family: Family,
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub p: Exponent,
}

/// Exact values of the closed forms for a concrete exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcreteInvariants {
    pub delta: FieldElement,
    pub c4: FieldElement,
    /// `None` when Δ = 0.
    pub j: Option<FieldElement>,
    /// Family A: j from `(a^{2p} + b^{2p} + a^p b^p)^3`; family B: c4 from
    /// `2^6(a^p + 4b^p)`. Both rely on the defining relation.
    pub alternate: FieldElement,
}

#[derive(Clone, Debug)]
pub struct Invariants {
    pub delta_formula: String,
    pub c4_formula: String,
    pub j_formula: String,
    pub concrete: Option<ConcreteInvariants>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weierstrass {
    pub a1: FieldElement,
    pub a2: FieldElement,
    pub a3: FieldElement,
    pub a4: FieldElement,
    pub a6: FieldElement,
}

/// Invariants computed from a Weierstrass model by the standard formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardInvariants {
    pub b2: FieldElement,
    pub b4: FieldElement,
    pub b6: FieldElement,
    pub b8: FieldElement,
    pub c4: FieldElement,
    pub c6: FieldElement,
    pub delta: FieldElement,
    pub j: Option<FieldElement>,
}

fn int(k: &NumberField, n: i64) -> FieldElement {
    k.from_int(n)
}

fn pow2(k: &NumberField, e: i64) -> FieldElement {
    k.pow(&int(k, 2), e).expect("2 is invertible")
}

fn concrete_p(spec: &FreySpec) -> Option<u32> {
    match spec.p {
        Exponent::Concrete(p) => Some(p),
        Exponent::Symbolic => None,
    }
}

/// The defining relation of the family at a concrete exponent.
pub fn relation_holds(k: &NumberField, spec: &FreySpec, p: u32) -> bool {
    let ap = k.pow(&spec.a, p as i64).unwrap();
    let bp = k.pow(&spec.b, p as i64).unwrap();
    let lhs = k.add(&ap, &bp);
    let rhs = match spec.family {
        Family::TwoPowerTwist { r } => k.mul(&pow2(k, r as i64), &k.pow(&spec.c, p as i64).unwrap()),
        Family::PPTwo => k.mul(&spec.c, &spec.c),
    };
    lhs == rhs
}

pub fn invariants(k: &NumberField, spec: &FreySpec) -> Result<Invariants> {
    let (df, cf, jf) = match spec.family {
        Family::TwoPowerTwist { r } => (
            format!("2^{}(abc)^(2p)", 4 + 2 * r as i64),
            format!("2^4(a^(2p) + 2^{r} b^p c^p)"),
            format!("2^{}(a^(2p) + 2^{r} b^p c^p)^3/(abc)^(2p)", 8 - 2 * r as i64),
        ),
        Family::PPTwo => (
            "2^12(a^2 b)^p".to_string(),
            "2^6(4c^2 - 3a^p)".to_string(),
            "2^6(a^p + 4b^p)^3/(a^2 b)^p".to_string(),
        ),
    };
    let concrete = match concrete_p(spec) {
        None => None,
        Some(p) => {
            if !relation_holds(k, spec, p) {
                return Err(Error::RelationViolated);
            }
            Some(concrete_values(k, spec, p))
        }
    };
    Ok(Invariants {
        delta_formula: df,
        c4_formula: cf,
        j_formula: jf,
        concrete,
    })
}

fn concrete_values(k: &NumberField, spec: &FreySpec, p: u32) -> ConcreteInvariants {
    let p = p as i64;
    let pw = |x: &FieldElement, e: i64| k.pow(x, e).unwrap();
    let (a, b, c) = (&spec.a, &spec.b, &spec.c);
    match spec.family {
        Family::TwoPowerTwist { r } => {
            let r = r as i64;
            let abc = k.mul(&k.mul(a, b), c);
            let abc2p = pw(&abc, 2 * p);
            let delta = k.mul(&pow2(k, 4 + 2 * r), &abc2p);
            let inner = k.add(&pw(a, 2 * p), &k.mul(&pow2(k, r), &k.mul(&pw(b, p), &pw(c, p))));
            let c4 = k.mul(&pow2(k, 4), &inner);
            let inner_alt = k.add(
                &k.add(&pw(a, 2 * p), &pw(b, 2 * p)),
                &k.mul(&pw(a, p), &pw(b, p)),
            );
            let quot = |x: &FieldElement| {
                (!abc2p.is_zero()).then(|| {
                    k.mul(&pow2(k, 8 - 2 * r), &k.div(&pw(x, 3), &abc2p).unwrap())
                })
            };
            let j = quot(&inner);
            let alternate = quot(&inner_alt).unwrap_or_else(|| k.zero());
            ConcreteInvariants { delta, c4, j, alternate }
        }
        Family::PPTwo => {
            let a2b = k.mul(&k.mul(a, a), b);
            let a2bp = pw(&a2b, p);
            let delta = k.mul(&pow2(k, 12), &a2bp);
            let c4 = k.mul(&pow2(k, 6), &k.sub(&k.mul(&int(k, 4), &k.mul(c, c)), &k.mul(&int(k, 3), &pw(a, p))));
            let inner = k.add(&pw(a, p), &k.mul(&int(k, 4), &pw(b, p)));
            let alternate = k.mul(&pow2(k, 6), &inner);
            let j = (!a2bp.is_zero())
                .then(|| k.mul(&pow2(k, 6), &k.div(&pw(&inner, 3), &a2bp).unwrap()));
            ConcreteInvariants { delta, c4, j, alternate }
        }
    }
}

/// The literal model of the Frey curve at a concrete exponent.
pub fn frey_model(k: &NumberField, spec: &FreySpec) -> Result<Weierstrass> {
    let p = concrete_p(spec)
        .ok_or_else(|| Error::Unsupported("a Weierstrass model needs a concrete exponent".into()))?;
    if !relation_holds(k, spec, p) {
        return Err(Error::RelationViolated);
    }
    let ap = k.pow(&spec.a, p as i64).unwrap();
    let bp = k.pow(&spec.b, p as i64).unwrap();
    let (a2, a4) = match spec.family {
        Family::TwoPowerTwist { .. } => (k.sub(&bp, &ap), k.neg(&k.mul(&ap, &bp))),
        Family::PPTwo => (k.mul(&int(k, 4), &spec.c), k.mul(&int(k, 4), &ap)),
    };
    Ok(Weierstrass {
        a1: k.zero(),
        a2,
        a3: k.zero(),
        a4,
        a6: k.zero(),
    })
}

pub fn standard_invariants(k: &NumberField, w: &Weierstrass) -> StandardInvariants {
    let m = |x: &FieldElement, y: &FieldElement| k.mul(x, y);
    let s = |n: i64, x: &FieldElement| k.mul(&int(k, n), x);
    let b2 = k.add(&m(&w.a1, &w.a1), &s(4, &w.a2));
    let b4 = k.add(&s(2, &w.a4), &m(&w.a1, &w.a3));
    let b6 = k.add(&m(&w.a3, &w.a3), &s(4, &w.a6));
    let b8 = {
        let t1 = m(&m(&w.a1, &w.a1), &w.a6);
        let t2 = s(4, &m(&w.a2, &w.a6));
        let t3 = m(&m(&w.a1, &w.a3), &w.a4);
        let t4 = m(&m(&w.a2, &w.a3), &w.a3);
        let t5 = m(&w.a4, &w.a4);
        k.sub(&k.add(&k.sub(&k.add(&t1, &t2), &t3), &t4), &t5)
    };
    let c4 = k.sub(&m(&b2, &b2), &s(24, &b4));
    let c6 = k.sub(
        &k.add(&k.neg(&m(&m(&b2, &b2), &b2)), &s(36, &m(&b2, &b4))),
        &s(216, &b6),
    );
    let delta = {
        let t1 = k.neg(&m(&m(&b2, &b2), &b8));
        let t2 = s(8, &m(&m(&b4, &b4), &b4));
        let t3 = s(27, &m(&b6, &b6));
        let t4 = s(9, &m(&m(&b2, &b4), &b6));
        k.add(&k.sub(&k.sub(&t1, &t2), &t3), &t4)
    };
    let j = (!delta.is_zero()).then(|| k.div(&m(&m(&c4, &c4), &c4), &delta).unwrap());
    StandardInvariants { b2, b4, b6, b8, c4, c6, delta, j }
}

/// Outcome of comparing the closed forms with the literal model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub delta_matches: bool,
    pub c4_matches: bool,
    pub j_matches: bool,
    /// The two printed forms (of j for family A, of c4 for family B) agree.
    pub alternate_matches: bool,
    /// `c4^3 - c6^2 = 1728 Δ` on the model.
    pub identity_holds: bool,
}

impl CrossCheck {
    pub fn all(&self) -> bool {
        self.delta_matches && self.c4_matches && self.j_matches && self.alternate_matches && self.identity_holds
    }
}

/// Compare claimed invariants against the literal model.
pub fn cross_check_against(k: &NumberField, spec: &FreySpec, claimed: &ConcreteInvariants) -> Result<CrossCheck> {
    let w = frey_model(k, spec)?;
    let st = standard_invariants(k, &w);
    let lhs = k.sub(&k.pow(&st.c4, 3).unwrap(), &k.mul(&st.c6, &st.c6));
    let alternate_matches = match spec.family {
        Family::TwoPowerTwist { .. } => claimed.j.as_ref().map_or(true, |j| *j == claimed.alternate),
        Family::PPTwo => claimed.c4 == claimed.alternate,
    };
    Ok(CrossCheck {
        delta_matches: st.delta == claimed.delta,
        c4_matches: st.c4 == claimed.c4,
        j_matches: st.j == claimed.j,
        alternate_matches,
        identity_holds: lhs == k.mul(&int(k, 1728), &st.delta),
    })
}

pub fn cross_check_report(k: &NumberField, spec: &FreySpec) -> Result<CrossCheck> {
    let inv = invariants(k, spec)?;
    let claimed = inv
        .concrete
        .ok_or_else(|| Error::Unsupported("cross-check needs a concrete exponent".into()))?;
    cross_check_against(k, spec, &claimed)
}

/// True when the closed forms agree with the literal model in every respect.
pub fn concrete_cross_check(k: &NumberField, spec: &FreySpec) -> Result<bool> {
    Ok(cross_check_report(k, spec)?.all())
}

// ---- symbolic valuations ----

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionType {
    Good,
    Multiplicative,
    PotentiallyMultiplicative,
    PotentiallyGood,
}

impl fmt::Display for ReductionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ReductionType::Good => "good",
            ReductionType::Multiplicative => "multiplicative",
            ReductionType::PotentiallyMultiplicative => "potentially multiplicative",
            ReductionType::PotentiallyGood => "potentially good",
        };
        f.write_str(s)
    }
}

/// Valuations of a, b, c at the prime in question.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Divisibility {
    pub va: u32,
    pub vb: u32,
    pub vc: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub prime: PrimeIdeal,
    pub v_delta: ValuationForm,
    /// `None` where the value depends on the solution beyond the data given.
    pub v_c4: Option<ValuationForm>,
    pub v_j: Option<ValuationForm>,
    pub kind: ReductionType,
    pub flag_p_in_inertia: bool,
    pub flag_3_in_inertia: bool,
    pub p_threshold: u64,
}

const BASE_THRESHOLD: u64 = 5;

fn report(
    prime: &PrimeIdeal,
    v_delta: ValuationForm,
    v_c4: Option<ValuationForm>,
    v_j: Option<ValuationForm>,
    kind: ReductionType,
    extra_threshold: u64,
) -> ReductionReport {
    let flag_p = v_j.is_some_and(|j| j.is_negative() && !j.p_divides());
    let flag_3 = kind == ReductionType::PotentiallyGood && v_delta.beta == 0 && v_delta.alpha % 3 != 0;
    let form_threshold = [Some(v_delta), v_c4, v_j]
        .iter()
        .flatten()
        .map(|f| f.sign_threshold())
        .max()
        .unwrap_or(0);
    ReductionReport {
        prime: prime.clone(),
        v_delta,
        v_c4,
        v_j,
        kind,
        flag_p_in_inertia: flag_p,
        flag_3_in_inertia: flag_3,
        p_threshold: BASE_THRESHOLD.max(extra_threshold).max(form_threshold),
    }
}

/// Symbolic valuations of Δ, c4, j at `prime` given the valuations of a, b, c.
pub fn valuation_profile(family: Family, prime: &PrimeIdeal, div: Divisibility) -> Result<ReductionReport> {
    let vals = [div.va, div.vb, div.vc];
    let positive = vals.iter().filter(|&&v| v > 0).count();
    if positive > 1 {
        return Err(Error::InconsistentDivisibility(format!(
            "{} divides more than one of a, b, c",
            prime.label()
        )));
    }
    let v2 = if prime.q == 2 { prime.e as i64 } else { 0 };
    let f = ValuationForm::new;
    let (va, vb, vc) = (div.va as i64, div.vb as i64, div.vc as i64);
    use ReductionType::*;
    Ok(match family {
        Family::TwoPowerTwist { r } => {
            let r = r as i64;
            let v = va + vb + vc;
            if v2 == 0 {
                if v == 0 {
                    report(prime, ValuationForm::ZERO, None, None, Good, 0)
                } else {
                    report(prime, f(0, 2 * v), Some(ValuationForm::ZERO), Some(f(0, -2 * v)), Multiplicative, 0)
                }
            } else if v > 0 {
                let vj = f((8 - 2 * r) * v2, -2 * v);
                report(
                    prime,
                    f((4 + 2 * r) * v2, 2 * v),
                    Some(f(4 * v2, 0)),
                    Some(vj),
                    PotentiallyMultiplicative,
                    ((4 - r) * v2).unsigned_abs(),
                )
            } else {
                if !(2..=3).contains(&r) {
                    return Err(Error::UnsupportedCase(format!(
                        "r = {r} at a prime above 2 not dividing abc"
                    )));
                }
                report(
                    prime,
                    f((4 + 2 * r) * v2, 0),
                    Some(f(4 * v2, 0)),
                    Some(f((8 - 2 * r) * v2, 0)),
                    PotentiallyGood,
                    0,
                )
            }
        }
        Family::PPTwo => {
            if v2 == 0 {
                if va > 0 {
                    report(prime, f(0, 2 * va), Some(ValuationForm::ZERO), Some(f(0, -2 * va)), Multiplicative, 0)
                } else if vb > 0 {
                    report(prime, f(0, vb), Some(ValuationForm::ZERO), Some(f(0, -vb)), Multiplicative, 0)
                } else {
                    report(prime, ValuationForm::ZERO, None, None, Good, 0)
                }
            } else {
                let t = (6 * v2) as u64;
                if va > 0 {
                    report(prime, f(12 * v2, 2 * va), Some(f(8 * v2, 0)), Some(f(12 * v2, -2 * va)), PotentiallyMultiplicative, t)
                } else if vb > 0 {
                    report(prime, f(12 * v2, vb), Some(f(6 * v2, 0)), Some(f(6 * v2, -vb)), PotentiallyMultiplicative, t)
                } else {
                    report(prime, f(12 * v2, 0), Some(f(6 * v2, 0)), Some(f(6 * v2, 0)), PotentiallyGood, t)
                }
            }
        }
    })
}

// ---- conductor ----

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExponentRange {
    Exact(u32),
    /// Some exponent in `[0, bound]`.
    AtMost(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConductorFactor {
    pub prime: PrimeIdeal,
    pub exponent: ExponentRange,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConductorShape {
    /// Factors at S_K and at m.
    pub bounded: Vec<ConductorFactor>,
    /// Odd multiplicative primes among the reports supplied.
    pub multiplicative: Vec<ConductorFactor>,
    /// Whether the conductor also carries the symbolic product over the
    /// remaining odd primes dividing the solution.
    pub symbolic_tail: bool,
    /// The level after deleting multiplicative primes with p | v(Δ).
    pub level_lowered: Vec<ConductorFactor>,
    pub deleted: Vec<PrimeIdeal>,
}

/// Conductor as a formal product. `s_k` are the primes above 2, `m` the
/// class representative (family A only), `odd_reports` the profiles at the
/// odd primes known to divide the solution.
pub fn conductor_shape(
    family: Family,
    s_k: &[PrimeIdeal],
    m: Option<&PrimeIdeal>,
    odd_reports: &[ReductionReport],
) -> ConductorShape {
    let mut bounded: Vec<ConductorFactor> = s_k
        .iter()
        .map(|p| ConductorFactor {
            prime: p.clone(),
            exponent: ExponentRange::AtMost(2 + 6 * p.e),
        })
        .collect();
    if let (Family::TwoPowerTwist { .. }, Some(m)) = (family, m) {
        let v3 = if m.q == 3 { m.e } else { 0 };
        bounded.push(ConductorFactor {
            prime: m.clone(),
            exponent: ExponentRange::AtMost(2 + 3 * v3),
        });
    }
    let mut multiplicative = Vec::new();
    let mut deleted = Vec::new();
    for r in odd_reports {
        if r.kind == ReductionType::Multiplicative && bounded.iter().all(|b| b.prime != r.prime) {
            multiplicative.push(ConductorFactor {
                prime: r.prime.clone(),
                exponent: ExponentRange::Exact(1),
            });
            if r.v_delta.p_divides() {
                deleted.push(r.prime.clone());
            }
        }
    }
    let level_lowered = bounded
        .iter()
        .cloned()
        .chain(multiplicative.iter().filter(|f| !deleted.contains(&f.prime)).cloned())
        .collect();
    ConductorShape {
        bounded,
        multiplicative,
        symbolic_tail: true,
        level_lowered,
        deleted,
    }
}

// ---- Legendre λ ----

fn check_lambda(k: &NumberField, l: &FieldElement) -> Result<()> {
    if l.is_zero() || *l == k.one() {
        Err(Error::DegenerateLambda)
    } else {
        Ok(())
    }
}

/// `2^8 (λ^2 - λ + 1)^3 / (λ^2 (1 - λ)^2)`.
pub fn legendre_j(k: &NumberField, l: &FieldElement) -> Result<FieldElement> {
    check_lambda(k, l)?;
    let one = k.one();
    let l2 = k.mul(l, l);
    let num = k.add(&k.sub(&l2, l), &one);
    let oml = k.sub(&one, l);
    let den = k.mul(&l2, &k.mul(&oml, &oml));
    Ok(k.mul(&int(k, 256), &k.div(&k.pow(&num, 3)?, &den)?))
}

/// `{λ, 1/λ, 1-λ, 1/(1-λ), λ/(λ-1), (λ-1)/λ}` in that order.
pub fn lambda_orbit(k: &NumberField, l: &FieldElement) -> Result<[FieldElement; 6]> {
    check_lambda(k, l)?;
    let one = k.one();
    let oml = k.sub(&one, l);
    let lm1 = k.sub(l, &one);
    Ok([
        l.clone(),
        k.inv(l)?,
        oml.clone(),
        k.inv(&oml)?,
        k.div(l, &lm1)?,
        k.div(&lm1, l)?,
    ])
}

/// `2^8 (1 - λμ)^3 / (λμ)^2` for λ + μ = 1.
pub fn j_from_lambda_mu(k: &NumberField, l: &FieldElement, mu: &FieldElement) -> Result<FieldElement> {
    check_lambda(k, l)?;
    if k.add(l, mu) != k.one() {
        return Err(Error::RelationViolated);
    }
    let lm = k.mul(l, mu);
    let num = k.sub(&k.one(), &lm);
    Ok(k.mul(&int(k, 256), &k.div(&k.pow(&num, 3)?, &k.mul(&lm, &lm))?))
}

/// Trivial solutions: abc = 0 or a = ±b.
pub fn is_trivial_2r(k: &NumberField, a: &FieldElement, b: &FieldElement, c: &FieldElement) -> bool {
    a.is_zero() || b.is_zero() || c.is_zero() || a == b || *a == k.neg(b)
}

/// Trivial solutions of `x^p + y^p = z^2`: abc = 0 or (a, b, c) = (1, 1, ±√2).
pub fn is_trivial_pp2(k: &NumberField, a: &FieldElement, b: &FieldElement, c: &FieldElement) -> bool {
    a.is_zero()
        || b.is_zero()
        || c.is_zero()
        || (*a == k.one() && *b == k.one() && k.mul(c, c) == int(k, 2))
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal;

    fn spec_q(family: Family, a: i64, b: i64, c: i64, p: u32) -> (NumberField, FreySpec) {
        let k = NumberField::rationals();
        let s = FreySpec {
            family,
            a: k.from_int(a),
            b: k.from_int(b),
            c: k.from_int(c),
            p: Exponent::Concrete(p),
        };
        (k, s)
    }

    #[test]
    fn family_a_unit_triple() {
        let (k, s) = spec_q(Family::TwoPowerTwist { r: 1 }, 1, 1, 1, 5);
        let inv = invariants(&k, &s).unwrap().concrete.unwrap();
        assert_eq!(inv.delta, k.from_int(64));
        assert_eq!(inv.c4, k.from_int(48));
        assert_eq!(inv.j, Some(k.from_int(1728)));
        assert!(concrete_cross_check(&k, &s).unwrap());
        let (k, s) = spec_q(Family::TwoPowerTwist { r: 2 }, 1, 1, 1, 5);
        assert_eq!(invariants(&k, &s).unwrap_err(), Error::RelationViolated);
    }

    #[test]
    fn family_b_in_sqrt2() {
        let k = NumberField::from_int_coeffs(&[-2, 0, 1]).unwrap();
        let s = FreySpec {
            family: Family::PPTwo,
            a: k.one(),
            b: k.one(),
            c: k.theta(),
            p: Exponent::Concrete(3),
        };
        let inv = invariants(&k, &s).unwrap().concrete.unwrap();
        assert_eq!(inv.delta, k.from_int(4096));
        assert_eq!(inv.c4, k.from_int(320));
        assert_eq!(inv.j, Some(k.from_int(8000)));
        assert!(concrete_cross_check(&k, &s).unwrap());
        let mut tampered = inv.clone();
        tampered.delta = k.from_int(2048);
        assert!(!cross_check_against(&k, &s, &tampered).unwrap().all());
    }

    #[test]
    fn profiles() {
        let q = NumberField::rationals();
        let three = ideal::factor_rational_prime(&q, 3).unwrap().remove(0);
        let two = ideal::s_k(&q).unwrap().remove(0);
        let r = valuation_profile(Family::TwoPowerTwist { r: 2 }, &three, Divisibility { va: 1, vb: 0, vc: 0 }).unwrap();
        assert_eq!(r.v_delta, ValuationForm::new(0, 2));
        assert!(r.v_delta.p_divides());
        assert_eq!(r.kind, ReductionType::Multiplicative);
        let r = valuation_profile(Family::TwoPowerTwist { r: 2 }, &two, Divisibility { va: 1, vb: 0, vc: 0 }).unwrap();
        assert_eq!(r.v_j, Some(ValuationForm::new(4, -2)));
        assert!(r.flag_p_in_inertia);
        assert_eq!(r.p_threshold, 5);
        let r = valuation_profile(Family::TwoPowerTwist { r: 3 }, &two, Divisibility { va: 0, vb: 0, vc: 0 }).unwrap();
        assert_eq!((r.v_j, r.v_delta), (Some(ValuationForm::constant(2)), ValuationForm::constant(10)));
        assert!(r.flag_3_in_inertia);
        assert!(matches!(
            valuation_profile(Family::TwoPowerTwist { r: 1 }, &two, Divisibility { va: 0, vb: 0, vc: 0 }),
            Err(Error::UnsupportedCase(_))
        ));
        assert!(matches!(
            valuation_profile(Family::PPTwo, &two, Divisibility { va: 1, vb: 1, vc: 0 }),
            Err(Error::InconsistentDivisibility(_))
        ));
    }

    #[test]
    fn legendre() {
        let q = NumberField::rationals();
        let m1 = q.from_int(-1);
        assert_eq!(legendre_j(&q, &m1).unwrap(), q.from_int(1728));
        let orbit = lambda_orbit(&q, &m1).unwrap();
        let mut got: Vec<_> = orbit.to_vec();
        got.sort();
        let mut want = vec![m1.clone(), m1.clone(), q.from_int(2), q.from_rational(rational(1, 2)), q.from_rational(rational(1, 2)), q.from_int(2)];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(j_from_lambda_mu(&q, &q.from_int(2), &m1).unwrap(), q.from_int(1728));
        assert_eq!(legendre_j(&q, &q.one()).unwrap_err(), Error::DegenerateLambda);
    }

    #[test]
    fn conductor_over_q() {
        let q = NumberField::rationals();
        let s = ideal::s_k(&q).unwrap();
        let m = ideal::factor_rational_prime(&q, 3).unwrap().remove(0);
        let five = ideal::factor_rational_prime(&q, 5).unwrap().remove(0);
        let r5 = valuation_profile(Family::TwoPowerTwist { r: 1 }, &five, Divisibility { va: 1, vb: 0, vc: 0 }).unwrap();
        let c = conductor_shape(Family::TwoPowerTwist { r: 1 }, &s, Some(&m), &[r5]);
        assert_eq!(c.bounded[0].exponent, ExponentRange::AtMost(8));
        assert_eq!(c.bounded[1].exponent, ExponentRange::AtMost(5));
        assert_eq!(c.deleted, vec![five]);
        assert_eq!(c.level_lowered.len(), 2);
        let cb = conductor_shape(Family::PPTwo, &s, Some(&m), &[]);
        assert_eq!(cb.level_lowered.len(), 1);
    }
}
