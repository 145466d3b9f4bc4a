//! Unit groups: trivial for Q, continued fractions for quadratic fields,
//! bounded-height search with logarithmic independence tests for cubics.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::config::PRACTICAL_HEIGHT_CAP;
use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};
use crate::interval::{self, Interval};
use crate::quadratic::Quadratic;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Completeness {
    Proven,
    BoundedSearch { height_bound: u64 },
}

#[derive(Clone, Debug)]
pub struct UnitGroup {
    pub rank: usize,
    pub fundamental_units: Vec<FieldElement>,
    /// Generates the roots of unity in K.
    pub torsion_generator: FieldElement,
    pub torsion_order: u32,
    pub completeness: Completeness,
}

/// Integer norms of elements of `Z[θ]`, via powers of the companion matrix.
pub(crate) struct IntNorm {
    powers: Vec<Vec<Vec<i128>>>,
    n: usize,
}

impl IntNorm {
    pub(crate) fn new(field: &NumberField) -> Self {
        let n = field.degree;
        let theta = field.theta();
        let mut powers = Vec::with_capacity(n);
        let mut x = field.one();
        for _ in 0..n {
            let m = field.mult_matrix(&x);
            powers.push(
                m.iter()
                    .map(|row| {
                        row.iter()
                            .map(|c| c.to_integer().try_into().expect("small companion entries"))
                            .collect()
                    })
                    .collect(),
            );
            x = field.mul(&x, &theta);
        }
        IntNorm { powers, n }
    }

    pub(crate) fn norm(&self, coords: &[i64]) -> i128 {
        let n = self.n;
        let mut m = vec![vec![0i128; n]; n];
        for (k, &c) in coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    m[i][j] += c as i128 * self.powers[k][i][j];
                }
            }
        }
        bareiss(m)
    }
}

fn bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Calls `f` on every integer vector of length n with max-norm exactly h.
pub(crate) fn for_each_shell(n: usize, h: i64, f: &mut dyn FnMut(&[i64])) {
    let mut v = vec![-h; n];
    loop {
        if v.iter().any(|x| x.abs() == h) {
            f(&v);
        }
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if v[i] < h {
                v[i] += 1;
                break;
            }
            v[i] = -h;
            i += 1;
        }
    }
}

fn to_elem(field: &NumberField, v: &[i64]) -> FieldElement {
    field.elem_i64(v)
}

/// Sum of `|ln|σ_i(u)||` midpoints; orders units from small to large.
fn log_size(logs: &[Interval]) -> Rational {
    logs.iter()
        .map(|l| ((&l.lo + &l.hi) / Rational::from_integer(2.into())).abs())
        .sum()
}

fn independent(a: &[Interval], b: &[Interval]) -> bool {
    let det = a[0].mul(&b[1]).sub(&a[1].mul(&b[0]));
    !det.contains_zero()
}

pub fn fundamental_units(field: &NumberField, height_bound: u64) -> Result<UnitGroup> {
    let minus_one = field.from_int(-1);
    match field.degree {
        1 => Ok(UnitGroup {
            rank: 0,
            fundamental_units: vec![],
            torsion_generator: minus_one,
            torsion_order: 2,
            completeness: Completeness::Proven,
        }),
        2 => {
            let q = Quadratic::new(field)?;
            if let Some(u) = &q.unit {
                return Ok(UnitGroup {
                    rank: 1,
                    fundamental_units: vec![q.to_field(field, u)],
                    torsion_generator: minus_one,
                    torsion_order: 2,
                    completeness: Completeness::Proven,
                });
            }
            let omega = (BigInt::zero(), BigInt::from(1));
            let (gen, order) = if q.d == BigInt::from(-1) {
                (q.to_field(field, &omega), 4)
            } else if q.d == BigInt::from(-3) {
                (q.to_field(field, &omega), 6)
            } else {
                (minus_one, 2)
            };
            Ok(UnitGroup {
                rank: 0,
                fundamental_units: vec![],
                torsion_generator: gen,
                torsion_order: order,
                completeness: Completeness::Proven,
            })
        }
        3 => cubic_units(field, height_bound),
        n => Err(Error::Unsupported(format!("unit group of a degree-{n} field"))),
    }
}

fn cubic_units(field: &NumberField, height_bound: u64) -> Result<UnitGroup> {
    let (r1, r2) = field.signature;
    let rank = r1 + r2 - 1;
    let cap = height_bound.min(PRACTICAL_HEIGHT_CAP) as i64;
    let nm = IntNorm::new(field);
    let mut found: Vec<(Rational, FieldElement, Vec<Interval>)> = Vec::new();
    let mut h = 1;
    let mut last_h = 0;
    while h <= cap {
        for_each_shell(3, h, &mut |v| {
            // skip rationals, and keep one of ±u
            if v[1] == 0 && v[2] == 0 || v.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
                return;
            }
            if nm.norm(v).abs() == 1 {
                let u = to_elem(field, v);
                let logs = interval::log_abs_real(field, &u);
                found.push((log_size(&logs), u, logs));
            }
        });
        last_h = h;
        if !found.is_empty() && has_rank(&found, rank) {
            break;
        }
        h += 1;
    }
    found.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    let mut chosen: Vec<(FieldElement, Vec<Interval>)> = Vec::new();
    for (_, u, logs) in &found {
        if chosen.len() == rank {
            break;
        }
        let ok = match chosen.len() {
            0 => logs.iter().any(|l| !l.contains_zero()),
            _ => independent(&chosen[0].1, logs),
        };
        if ok {
            chosen.push((u.clone(), logs.clone()));
        }
    }
    if chosen.len() < rank {
        return Err(Error::SearchExhausted(last_h as u64));
    }
    Ok(UnitGroup {
        rank,
        fundamental_units: chosen.into_iter().map(|(u, _)| u).collect(),
        torsion_generator: field.from_int(-1),
        torsion_order: 2,
        completeness: Completeness::BoundedSearch {
            height_bound: last_h as u64,
        },
    })
}

fn has_rank(found: &[(Rational, FieldElement, Vec<Interval>)], rank: usize) -> bool {
    if rank <= 1 {
        return !found.is_empty();
    }
    found
        .iter()
        .any(|a| found.iter().any(|b| independent(&a.2, &b.2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_and_trivial_units() {
        let q = NumberField::rationals();
        let u = fundamental_units(&q, 100).unwrap();
        assert_eq!(u.rank, 0);
        let k = NumberField::from_int_coeffs(&[-2, 0, 1]).unwrap();
        let u = fundamental_units(&k, 100).unwrap();
        assert_eq!(u.fundamental_units, vec![k.elem_i64(&[1, 1])]);
        let gi = NumberField::from_int_coeffs(&[1, 0, 1]).unwrap();
        let u = fundamental_units(&gi, 100).unwrap();
        assert_eq!((u.rank, u.torsion_order), (0, 4));
    }

    #[test]
    fn cubic_unit_search() {
        // x^3 - 3x + 1: totally real, units θ and θ + 1 among the smallest
        let k = NumberField::from_int_coeffs(&[1, -3, 0, 1]).unwrap();
        let u = fundamental_units(&k, 100).unwrap();
        assert_eq!(u.rank, 2);
        for e in &u.fundamental_units {
            assert_eq!(k.norm(e).abs(), Rational::from_integer(1.into()));
        }
        let c = NumberField::from_int_coeffs(&[1, 0, -1, 1]).unwrap();
        let u = fundamental_units(&c, 100).unwrap();
        assert_eq!(u.rank, 1);
        assert!(matches!(u.completeness, Completeness::BoundedSearch { .. }));
    }
}
