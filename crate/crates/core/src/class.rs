//! Class numbers, narrow class numbers, the odd prime class representatives
//! and the normalization of triples by the class of their gcd ideal.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::config::{Bounds, PRACTICAL_HEIGHT_CAP};
use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};
use crate::ideal::{self, PrimeIdeal};
use crate::quadratic::{Lattice, Quadratic};
use crate::units::{self, UnitGroup};
use crate::Rational;

/// A class representative: a prime ideal, or O_K itself when the switch
/// for the principal class is on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassRep {
    Trivial,
    Prime(PrimeIdeal),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassCompleteness {
    /// Class group closed over all primes of norm at most the given bound.
    Proven { prime_bound: u64 },
    UserSupplied,
}

#[derive(Clone, Debug)]
pub struct ClassData {
    pub h: u64,
    pub h_plus: u64,
    /// One representative per class, the principal class first.
    pub reps_h: Vec<ClassRep>,
    pub completeness: ClassCompleteness,
    /// Largest rational prime examined while choosing `reps_h`.
    pub rep_search_bound: u64,
}

/// Rank over F_2 of the sign vectors of the given elements at the real places.
pub fn sign_rank(field: &NumberField, elems: &[FieldElement]) -> Result<usize> {
    let mut rows: Vec<u64> = Vec::new();
    for e in elems {
        let signs = field.real_signs(e)?;
        let mut v = 0u64;
        for (i, s) in signs.iter().enumerate() {
            if *s < 0 {
                v |= 1 << i;
            }
        }
        rows.push(v);
    }
    let mut rank = 0;
    for bit in 0..field.signature.0 {
        let m = 1u64 << bit;
        if let Some(pos) = (rank..rows.len()).find(|&i| rows[i] & m != 0) {
            rows.swap(rank, pos);
            let pivot = rows[rank];
            for (i, r) in rows.iter_mut().enumerate() {
                if i != rank && *r & m != 0 {
                    *r ^= pivot;
                }
            }
            rank += 1;
        }
    }
    Ok(rank)
}

/// `h⁺ = h · 2^{r1} / #(sign image of the units)`.
pub fn narrow_class_number(field: &NumberField, h: u64, u: &UnitGroup) -> Result<u64> {
    let r1 = field.signature.0;
    if r1 == 0 {
        return Ok(h);
    }
    let mut gens = vec![field.from_int(-1)];
    gens.extend(u.fundamental_units.iter().cloned());
    let k = sign_rank(field, &gens)?;
    Ok(h << (r1 - k))
}

/// Odd prime ideals ordered by norm, then residue root, then rational prime.
/// Primes dividing the index of `Z[θ]` are skipped with a warning.
fn odd_prime_candidates(field: &NumberField, limit: u64) -> Vec<PrimeIdeal> {
    let mut out = Vec::new();
    for q in arith::primes_up_to(limit as u32) {
        if q == 2 {
            continue;
        }
        match ideal::factor_rational_prime(field, q as u64) {
            Ok(ps) => out.extend(ps.into_iter().filter(|p| p.norm() <= BigInt::from(limit))),
            Err(e) => log::warn!("skipping {q} while choosing class representatives: {e}"),
        }
    }
    out.sort_by(|a, b| {
        a.norm()
            .cmp(&b.norm())
            .then(a.residue_root().unwrap_or(u64::MAX).cmp(&b.residue_root().unwrap_or(u64::MAX)))
            .then(a.q.cmp(&b.q))
    });
    out
}

pub fn class_data(field: &NumberField, bounds: &Bounds) -> Result<ClassData> {
    let u = units::fundamental_units(field, bounds.unit_height_bound)?;
    class_data_with_units(field, &u, bounds)
}

pub fn class_data_with_units(field: &NumberField, u: &UnitGroup, bounds: &Bounds) -> Result<ClassData> {
    let (h, lattices, completeness, quad) = match field.degree {
        1 => (1, vec![Lattice::unit()], ClassCompleteness::Proven { prime_bound: 1 }, None),
        2 => {
            let q = Quadratic::new(field)?;
            let reps = q.class_reps();
            let bound = q.disc.abs().sqrt();
            (
                reps.len() as u64,
                reps,
                ClassCompleteness::Proven {
                    prime_bound: bound.try_into().unwrap_or(u64::MAX),
                },
                Some(q),
            )
        }
        n => match bounds.user_class_number {
            Some(h) => (h, vec![], ClassCompleteness::UserSupplied, None),
            None => return Err(Error::MissingUserClassNumber(n)),
        },
    };
    let h_plus = narrow_class_number(field, h, u)?;
    let mut limit = 64u64.min(bounds.class_enum_bound.max(3));
    let mut reps: Vec<Option<PrimeIdeal>> = vec![None; h as usize];
    loop {
        let cands = odd_prime_candidates(field, limit);
        reps = vec![None; h as usize];
        for p in cands {
            let idx = match (&quad, h) {
                (_, 1) => 0,
                (Some(q), _) => {
                    let l = q.prime_lattice(field, &p);
                    match lattices.iter().position(|r| q.equivalent(&l, r)) {
                        Some(i) => i,
                        None => continue,
                    }
                }
                (None, _) => break,
            };
            if reps[idx].is_none() {
                reps[idx] = Some(p);
            }
        }
        if reps.iter().all(|r| r.is_some()) || limit >= bounds.class_enum_bound {
            break;
        }
        limit = (limit * 2).min(bounds.class_enum_bound);
    }
    let mut reps_h = Vec::new();
    for (i, r) in reps.into_iter().enumerate() {
        if i == 0 && bounds.allow_trivial_ideal {
            reps_h.push(ClassRep::Trivial);
        } else if let Some(p) = r {
            reps_h.push(ClassRep::Prime(p));
        } else if quad.is_some() || h == 1 {
            return Err(Error::SearchExhausted(limit));
        }
    }
    Ok(ClassData {
        h,
        h_plus,
        reps_h,
        completeness,
        rep_search_bound: limit,
    })
}

/// A generator of `P^k` when that ideal is principal.
pub fn principal_power_generator(field: &NumberField, p: &PrimeIdeal, k: u32, height_bound: u64) -> Result<Option<FieldElement>> {
    match field.degree {
        1 => Ok(Some(field.from_int(BigInt::from(p.q).pow(k)))),
        2 => {
            let q = Quadratic::new(field)?;
            let l = q.ideal_pow(&q.prime_lattice(field, p), k);
            Ok(q.principal_generator(&l).map(|g| q.to_field(field, &g)))
        }
        _ => search_generator(field, p, k, height_bound).map(Some),
    }
}

/// Order of the class of P (the least k with P^k principal). Outside
/// degrees one and two the class number must be one.
pub fn class_order(field: &NumberField, p: &PrimeIdeal, h: u64) -> Result<u32> {
    match field.degree {
        1 => Ok(1),
        2 => {
            let q = Quadratic::new(field)?;
            let l = q.prime_lattice(field, p);
            let mut acc = Lattice::unit();
            for k in 1..=h as u32 {
                acc = q.ideal_mul(&acc, &l);
                if q.is_principal(&acc) {
                    return Ok(k);
                }
            }
            unreachable!("class order exceeds the class number")
        }
        _ if h == 1 => Ok(1),
        n => Err(Error::Unsupported(format!(
            "class orders in degree {n} with class number {h}"
        ))),
    }
}

/// Bounded search in `Z[θ]` for α with |Norm α| = N(P)^k and v_P(α) = k.
pub fn search_generator(field: &NumberField, p: &PrimeIdeal, k: u32, height_bound: u64) -> Result<FieldElement> {
    let target = p.norm().pow(k);
    let nm = units::IntNorm::new(field);
    let cap = height_bound.min(PRACTICAL_HEIGHT_CAP) as i64;
    let t: i128 = (&target).try_into().map_err(|_| Error::GeneratorNotFound(0))?;
    for h in 1..=cap {
        let mut best: Option<FieldElement> = None;
        units::for_each_shell(field.degree, h, &mut |v| {
            if best.is_some() || nm.norm(v).abs() != t {
                return;
            }
            let x = field.elem_i64(v);
            if ideal::valuation(field, &x, p).ok() == Some(k as i64) {
                best = Some(x);
            }
        });
        if let Some(b) = best {
            return Ok(b);
        }
    }
    Err(Error::GeneratorNotFound(cap as u64))
}

/// Output of [`normalize_solution`].
#[derive(Clone, Debug)]
pub struct Normalized {
    pub xi: FieldElement,
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub m: ClassRep,
}

fn rational_gcd(xs: &[Rational]) -> Rational {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for x in xs {
        if x.is_zero() {
            continue;
        }
        num = num.gcd(x.numer());
        den = den.lcm(x.denom());
    }
    Rational::new(num, den)
}

/// Scale a nonzero triple by ξ so that its gcd ideal becomes the prime
/// representative of its class. Only class number one is supported.
pub fn normalize_solution(
    field: &NumberField,
    cd: &ClassData,
    a: &FieldElement,
    b: &FieldElement,
    c: &FieldElement,
) -> Result<Normalized> {
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Err(Error::ZeroElement);
    }
    if cd.h != 1 {
        return Err(Error::Unsupported(format!(
            "normalization with class number {}",
            cd.h
        )));
    }
    let gamma = match field.degree {
        1 => field.from_rational(rational_gcd(&[
            a.coords[0].clone(),
            b.coords[0].clone(),
            c.coords[0].clone(),
        ])),
        2 => {
            let q = Quadratic::new(field)?;
            let d = a.denominator().lcm(&b.denominator()).lcm(&c.denominator());
            let dr = Rational::from_integer(d.clone());
            let gens: Vec<_> = [a, b, c]
                .iter()
                .filter(|x| !x.is_zero())
                .map(|x| q.from_field(&field.scale(x, &dr)).expect("cleared denominators"))
                .collect();
            let l = q.ideal_from_gens(&gens);
            let g = q
                .principal_generator(&l)
                .expect("every ideal is principal when h = 1");
            field.scale(&q.to_field(field, &g), &(Rational::one() / dr))
        }
        n => {
            return Err(Error::Unsupported(format!(
                "normalization in degree {n}"
            )))
        }
    };
    let m = cd.reps_h[0].clone();
    let mu = match &m {
        ClassRep::Trivial => field.one(),
        ClassRep::Prime(p) => principal_power_generator(field, p, 1, PRACTICAL_HEIGHT_CAP)?
            .ok_or(Error::GeneratorNotFound(PRACTICAL_HEIGHT_CAP))?,
    };
    let xi = field.div(&mu, &gamma)?;
    Ok(Normalized {
        a: field.mul(&xi, a),
        b: field.mul(&xi, b),
        c: field.mul(&xi, c),
        xi,
        m,
    })
}
