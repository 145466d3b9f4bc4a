//! Bounded enumeration of solutions to `λ + μ = 1` in S-units.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::arith;
use crate::class;
use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};
use crate::ideal::{self, PrimeIdeal};
use crate::quadratic::Quadratic;
use crate::units::{self, Completeness};

/// Generators of the S-unit group: a root of unity ζ, the fundamental units
/// and one π_P per P in S with `(π_P) = P^{o_P}`.
#[derive(Clone, Debug)]
pub struct SUnitBasis {
    pub s: Vec<PrimeIdeal>,
    pub torsion_generator: FieldElement,
    pub torsion_order: u32,
    pub units: Vec<FieldElement>,
    pub pi: Vec<FieldElement>,
    /// `o_P`, the order of the class of P.
    pub class_orders: Vec<u32>,
    pub exponent_bound: u32,
    pub unit_completeness: Completeness,
}

impl SUnitBasis {
    pub fn new(field: &NumberField, s: &[PrimeIdeal], bounds: &Bounds) -> Result<Self> {
        let unavailable = |e: Error| Error::BasisUnavailable(e.to_string());
        let ug = units::fundamental_units(field, bounds.unit_height_bound).map_err(unavailable)?;
        let mut s: Vec<PrimeIdeal> = s.to_vec();
        s.sort();
        s.dedup();
        let h = match field.degree {
            1 => Some(1),
            2 => Some(Quadratic::new(field)?.class_reps().len() as u64),
            _ => bounds.user_class_number,
        };
        let mut pi = Vec::new();
        let mut orders = Vec::new();
        for p in &s {
            let (o, g) = match (field.degree, h) {
                (1 | 2, Some(h)) => {
                    let o = class::class_order(field, p, h)?;
                    let g = class::principal_power_generator(field, p, o, bounds.unit_height_bound)?
                        .expect("P^o is principal");
                    (o, g)
                }
                _ => {
                    // A bounded search for a generator of P itself: an element
                    // of norm N(P) with v_P = 1 generates P, whatever h is.
                    let g = class::search_generator(field, p, 1, bounds.unit_height_bound).map_err(|e| {
                        Error::BasisUnavailable(format!(
                            "no generator of {} found ({e}); supply user_class_number if it is not principal",
                            p.label()
                        ))
                    })?;
                    (1, g)
                }
            };
            orders.push(o);
            pi.push(g);
        }
        Ok(SUnitBasis {
            s,
            torsion_generator: ug.torsion_generator,
            torsion_order: ug.torsion_order,
            units: ug.fundamental_units,
            pi,
            class_orders: orders,
            exponent_bound: bounds.sunit_exponent_bound,
            unit_completeness: ug.completeness,
        })
    }

    /// Number of candidates λ in the exponent box.
    pub fn box_size(&self) -> u128 {
        let side = 2 * self.exponent_bound as u128 + 1;
        self.torsion_order as u128 * side.pow((self.units.len() + self.pi.len()) as u32)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SUnitSolution {
    pub lambda: FieldElement,
    pub mu: FieldElement,
    /// `(v_P(λ), v_P(μ))` for each P in S, in the order of the basis.
    pub val_profile: Vec<(i64, i64)>,
    /// `max(|v_P(λ)|, |v_P(μ)|)` for each P in S.
    pub t_max: Vec<u64>,
    /// Index of the solution `(μ, λ)`.
    pub partner: usize,
}

impl SUnitSolution {
    /// Valuation data for a given pair, without checking that it is a
    /// solution in S-units. Partner is left pointing at itself.
    pub fn from_pair(field: &NumberField, s: &[PrimeIdeal], lambda: FieldElement, mu: FieldElement) -> Result<Self> {
        let mut val_profile = Vec::with_capacity(s.len());
        for p in s {
            val_profile.push((ideal::valuation(field, &lambda, p)?, ideal::valuation(field, &mu, p)?));
        }
        let t_max = val_profile
            .iter()
            .map(|(a, b): &(i64, i64)| a.unsigned_abs().max(b.unsigned_abs()))
            .collect();
        Ok(SUnitSolution {
            lambda,
            mu,
            val_profile,
            t_max,
            partner: 0,
        })
    }
}

#[derive(Clone, Debug)]
pub struct SUnitSearch {
    pub s: Vec<PrimeIdeal>,
    pub solutions: Vec<SUnitSolution>,
    /// Every solution with both λ and μ inside the box was found.
    pub completeness: Completeness,
    pub candidates: u64,
    /// Candidates dropped because a prime dividing the index of `Z[θ]`
    /// would have been needed to decide them.
    pub index_rejections: u64,
    pub unit_completeness: Completeness,
}

/// Decides S-unit membership. Rational primes outside S and not dividing
/// the polynomial discriminant are excluded by stripping a norm; the rest
/// are decided by explicit valuations.
struct Membership<'a> {
    field: &'a NumberField,
    s: &'a [PrimeIdeal],
    /// Rational primes under S or dividing the discriminant, with the primes
    /// above them that are not in S (or `None` when the index blocks it).
    strip: Vec<(BigInt, Option<Vec<PrimeIdeal>>)>,
}

enum Verdict {
    Yes,
    No,
    IndexBlocked,
}

impl<'a> Membership<'a> {
    fn new(field: &'a NumberField, s: &'a [PrimeIdeal]) -> Self {
        let mut qs: Vec<BigInt> = s.iter().map(|p| BigInt::from(p.q)).collect();
        let disc = field.poly_disc.abs();
        if !disc.is_zero() {
            qs.extend(arith::factor(&disc).primes().cloned());
        }
        qs.sort();
        qs.dedup();
        let strip = qs
            .into_iter()
            .map(|q| {
                let others = arith::to_u64(&q)
                    .and_then(|qq| ideal::factor_rational_prime(field, qq).ok())
                    .map(|ps| ps.into_iter().filter(|p| !s.contains(p)).collect());
                (q, others)
            })
            .collect();
        Membership { field, s, strip }
    }

    fn check(&self, mu: &FieldElement) -> Verdict {
        let k = self.field;
        let d = mu.denominator();
        let y = k.scale(mu, &crate::Rational::from_integer(d.clone()));
        let ny = k.norm(&y).to_integer().abs();
        if ny.is_zero() {
            return Verdict::No;
        }
        let mut rest = ny * &d;
        let mut touched = Vec::new();
        for (i, (q, _)) in self.strip.iter().enumerate() {
            if (&rest % q).is_zero() {
                rest = arith::strip(&rest, q);
                touched.push(i);
            }
        }
        if !rest.is_one() {
            return Verdict::No;
        }
        for i in touched {
            match &self.strip[i].1 {
                Some(others) => {
                    for p in others {
                        if ideal::valuation(k, mu, p).unwrap_or(0) != 0 {
                            return Verdict::No;
                        }
                    }
                }
                None => {
                    let q = &self.strip[i].0;
                    if self.s.iter().all(|p| BigInt::from(p.q) != *q) {
                        return Verdict::IndexBlocked;
                    }
                }
            }
        }
        Verdict::Yes
    }
}

/// Powers `g^{-B..=B}` of each generator.
fn power_table(field: &NumberField, g: &FieldElement, b: u32) -> Vec<FieldElement> {
    let b = b as i64;
    (-b..=b).map(|e| field.pow(g, e).expect("generators are nonzero")).collect()
}

struct Enumerator<'a> {
    field: &'a NumberField,
    torsion: Vec<FieldElement>,
    tables: Vec<Vec<FieldElement>>,
    side: u64,
}

impl Enumerator<'_> {
    fn element(&self, mut idx: u64) -> FieldElement {
        let t = (idx % self.torsion.len() as u64) as usize;
        idx /= self.torsion.len() as u64;
        let mut x = self.torsion[t].clone();
        for tab in &self.tables {
            let e = (idx % self.side) as usize;
            idx /= self.side;
            x = self.field.mul(&x, &tab[e]);
        }
        x
    }
}

/// Whether an S-unit lies in the exponent box of the basis.
fn in_box(field: &NumberField, basis: &SUnitBasis, en: &Enumerator, x: &FieldElement) -> bool {
    let b = basis.exponent_bound as i64;
    // the exponent of π_P is forced by v_P
    let mut u = x.clone();
    for ((p, g), o) in basis.s.iter().zip(&basis.pi).zip(&basis.class_orders) {
        let v = ideal::valuation(field, x, p).expect("nonzero");
        if v % *o as i64 != 0 || (v / *o as i64).abs() > b {
            return false;
        }
        u = field.div(&u, &field.pow(g, v / *o as i64).unwrap()).unwrap();
    }
    // u is a unit: try every unit exponent vector in the box
    let r = basis.units.len();
    let side = en.side;
    let total = side.pow(r as u32);
    (0..total).any(|mut idx| {
        let mut w = u.clone();
        for k in 0..r {
            let e = (idx % side) as usize;
            idx /= side;
            // divide by g^{e - B}: multiply by the mirrored entry
            w = field.mul(&w, &en.tables[k][en.tables[k].len() - 1 - e]);
        }
        en.torsion.contains(&w)
    })
}

/// All solutions `λ + μ = 1` with λ and μ both in the exponent box
/// `ζ^t · Π ε_i^{e_i} · Π π_P^{f_P}`, `|e_i|, |f_P| ≤ B`.
pub fn solve_sunit(field: &NumberField, s: &[PrimeIdeal], bounds: &Bounds) -> Result<SUnitSearch> {
    let basis = SUnitBasis::new(field, s, bounds)?;
    solve_with_basis(field, &basis, bounds.max_candidates)
}

pub fn solve_with_basis(field: &NumberField, basis: &SUnitBasis, max_candidates: u64) -> Result<SUnitSearch> {
    let total = basis.box_size();
    if total > max_candidates as u128 {
        return Err(Error::WorkExceeded(max_candidates));
    }
    let total = total as u64;
    let b = basis.exponent_bound;
    let torsion: Vec<FieldElement> = (0..basis.torsion_order as i64)
        .map(|t| field.pow(&basis.torsion_generator, t).unwrap())
        .collect();
    let tables: Vec<Vec<FieldElement>> = basis
        .units
        .iter()
        .chain(&basis.pi)
        .map(|g| power_table(field, g, b))
        .collect();
    let en = Enumerator {
        field,
        torsion,
        tables,
        side: 2 * b as u64 + 1,
    };
    let member = Membership::new(field, &basis.s);
    let blocked = AtomicU64::new(0);
    let one = field.one();
    let found: Vec<FieldElement> = (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let lambda = en.element(idx);
            let mu = field.sub(&one, &lambda);
            if mu.is_zero() {
                return None;
            }
            match member.check(&mu) {
                Verdict::Yes => Some(lambda),
                Verdict::No => None,
                Verdict::IndexBlocked => {
                    blocked.fetch_add(1, Ordering::Relaxed);
                    None
                }
            }
        })
        .collect();
    let blocked = blocked.into_inner();
    if blocked > 0 {
        log::warn!("{blocked} S-unit candidates rejected: deciding them needs a prime dividing the index");
    }
    // keep pairs with both members in the box; the set is then symmetric
    let mut lambdas: Vec<FieldElement> = found
        .into_iter()
        .filter(|l| in_box(field, basis, &en, &field.sub(&one, l)))
        .collect();
    lambdas.sort();
    lambdas.dedup();
    let index: BTreeMap<FieldElement, usize> = lambdas.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
    let mut solutions = Vec::with_capacity(lambdas.len());
    for l in &lambdas {
        let mu = field.sub(&one, l);
        debug_assert_eq!(&field.add(l, &mu), &one);
        let partner = *index.get(&mu).expect("solution set is symmetric");
        let mut sol = SUnitSolution::from_pair(field, &basis.s, l.clone(), mu)?;
        sol.partner = partner;
        solutions.push(sol);
    }
    Ok(SUnitSearch {
        s: basis.s.clone(),
        solutions,
        completeness: Completeness::BoundedSearch {
            height_bound: b as u64,
        },
        candidates: total,
        index_rejections: blocked,
        unit_completeness: basis.unit_completeness.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn bounds(b: u32) -> Bounds {
        Bounds {
            sunit_exponent_bound: b,
            ..Bounds::default()
        }
    }

    #[test]
    fn rationals_with_two() {
        let q = NumberField::rationals();
        let s = ideal::s_k(&q).unwrap();
        let r = solve_sunit(&q, &s, &bounds(8)).unwrap();
        let got: Vec<(Rational, Rational)> = r
            .solutions
            .iter()
            .map(|s| (s.lambda.coords[0].clone(), s.mu.coords[0].clone()))
            .collect();
        let rat = |n: i64, d: i64| Rational::new(n.into(), d.into());
        assert_eq!(
            got,
            vec![(rat(-1, 1), rat(2, 1)), (rat(1, 2), rat(1, 2)), (rat(2, 1), rat(-1, 1))]
        );
        assert_eq!(r.solutions[0].partner, 2);
        assert_eq!(r.solutions[1].partner, 1);
        assert!(solve_sunit(&q, &[], &bounds(8)).unwrap().solutions.is_empty());
        assert!(solve_sunit(&q, &s, &bounds(0)).unwrap().solutions.is_empty());
    }

    #[test]
    fn gaussian_solutions() {
        let k = NumberField::from_int_coeffs(&[1, 0, 1]).unwrap();
        let s = ideal::s_k(&k).unwrap();
        let r = solve_sunit(&k, &s, &bounds(6)).unwrap();
        let has = |l: &[i64]| r.solutions.iter().any(|s| s.lambda == k.elem_i64(l));
        assert!(has(&[0, 1]));
        assert!(has(&[1, 1]));
        let half = k.from_rational(Rational::new(1.into(), 2.into()));
        assert!(r.solutions.iter().any(|s| s.lambda == half));
    }

    #[test]
    fn work_limit() {
        let q = NumberField::rationals();
        let s = ideal::s_k(&q).unwrap();
        let b = Bounds {
            max_candidates: 5,
            ..bounds(8)
        };
        assert_eq!(solve_sunit(&q, &s, &b).unwrap_err(), Error::WorkExceeded(5));
    }
}
