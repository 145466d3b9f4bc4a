// Reference computations that share no code with the library beyond the
// BigRational type: quadratic arithmetic on coordinate pairs, brute-force
// exponent boxes, and the classical splitting rules for quadratic fields.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// `a + b·√d`, stored as (a, b).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quad {
    pub a: Q,
    pub b: Q,
}

impl Quad {
    pub fn new(a: i64, b: i64) -> Self {
        Quad { a: q(a), b: q(b) }
    }

    pub fn mul(&self, o: &Quad, d: i64) -> Quad {
        Quad {
            a: &self.a * &o.a + &self.b * &o.b * q(d),
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }

    pub fn inv(&self, d: i64) -> Quad {
        let n = &self.a * &self.a - &self.b * &self.b * q(d);
        Quad { a: &self.a / &n, b: -&self.b / &n }
    }

    pub fn pow(&self, e: i64, d: i64) -> Quad {
        let base = if e < 0 { self.inv(d) } else { self.clone() };
        let mut acc = Quad::new(1, 0);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base, d);
        }
        acc
    }

    pub fn one_minus(&self) -> Quad {
        Quad { a: Q::one() - &self.a, b: -&self.b }
    }
}

/// S-units `ζ^t · ε^u · π^n` with `t < order`, `|u|, |n| ≤ bound`.
pub struct QuadBox {
    pub d: i64,
    pub zeta: Quad,
    pub order: u32,
    pub unit: Option<Quad>,
    pub pi: Quad,
    pub bound: i64,
}

impl QuadBox {
    pub fn elements(&self) -> BTreeSet<Quad> {
        let d = self.d;
        let mut out = BTreeSet::new();
        let units: Vec<Quad> = match &self.unit {
            Some(e) => (-self.bound..=self.bound).map(|u| e.pow(u, d)).collect(),
            None => vec![Quad::new(1, 0)],
        };
        for t in 0..self.order as i64 {
            let z = self.zeta.pow(t, d);
            for eu in &units {
                for n in -self.bound..=self.bound {
                    out.insert(z.mul(eu, d).mul(&self.pi.pow(n, d), d));
                }
            }
        }
        out
    }

    /// Every λ with λ and 1 - λ both in the box.
    pub fn solutions(&self) -> BTreeSet<(Quad, Quad)> {
        let e = self.elements();
        e.iter()
            .filter(|l| e.contains(&l.one_minus()))
            .map(|l| (l.clone(), l.one_minus()))
            .collect()
    }
}

/// Q with S = {2}: ±2^n.
pub fn rational_box(bound: i64) -> QuadBox {
    QuadBox { d: 0, zeta: Quad::new(-1, 0), order: 2, unit: None, pi: Quad::new(2, 0), bound }
}

/// Q(i) with S = {(1 + i)}.
pub fn gaussian_box(bound: i64) -> QuadBox {
    QuadBox { d: -1, zeta: Quad::new(0, 1), order: 4, unit: None, pi: Quad::new(1, 1), bound }
}

/// Q(√2) with S = {(√2)}.
pub fn sqrt2_box(bound: i64) -> QuadBox {
    QuadBox {
        d: 2,
        zeta: Quad::new(-1, 0),
        order: 2,
        unit: Some(Quad::new(1, 1)),
        pi: Quad::new(0, 1),
        bound,
    }
}

/// Coordinates of a library element (power basis 1, θ) as a pair.
pub fn pair(coords: &[Q]) -> Quad {
    Quad {
        a: coords.first().cloned().unwrap_or_else(Q::zero),
        b: coords.get(1).cloned().unwrap_or_else(Q::zero),
    }
}

// ---- splitting in quadratic fields ----

/// Euler's criterion for an odd prime p not dividing a.
pub fn legendre(a: i64, p: i64) -> i64 {
    let a = a.rem_euclid(p);
    let mut r = 1i64;
    let mut base = a;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if r == p - 1 {
        -1
    } else {
        r
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Split {
    Ramified,
    Split,
    Inert,
}

/// How q decomposes in Q(√d) for squarefree d ≠ 1, from the discriminant.
pub fn quadratic_split(d: i64, q: i64) -> Split {
    let disc = if d.rem_euclid(4) == 1 { d } else { 4 * d };
    if disc % q == 0 {
        return Split::Ramified;
    }
    if q == 2 {
        // here d ≡ 1 mod 4
        return if d.rem_euclid(8) == 1 { Split::Split } else { Split::Inert };
    }
    if legendre(d, q) == 1 {
        Split::Split
    } else {
        Split::Inert
    }
}

/// A defining polynomial for Q(√d) whose root generates the maximal order,
/// as integer coefficients from low to high degree.
pub fn clean_poly(d: i64) -> [i64; 3] {
    if d.rem_euclid(4) == 1 {
        [(1 - d) / 4, -1, 1]
    } else {
        [-d, 0, 1]
    }
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}
