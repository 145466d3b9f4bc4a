//! Factorization of monic integer polynomials over Q: squarefree split,
//! Hensel lifting from a small prime and exhaustive recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::arith::{isqrt, is_prime_u64};
use crate::fp::{self, FpPoly};
use crate::{QPoly, ZPoly};

fn exact_div(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let (q, r) = a.div_rem(b);
    r.is_zero().then_some(q)
}

/// Yun's squarefree decomposition over Q for a monic integer polynomial.
fn squarefree_parts(f: &ZPoly) -> Vec<(ZPoly, u32)> {
    let fq = f.to_rational();
    let df = fq.derivative();
    let a = fq.gcd(&df);
    let mut b: QPoly = fq.div_rem(&a).0;
    let mut d: QPoly = &df.div_rem(&a).0 - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let g = b.gcd(&d);
        let bn = b.div_rem(&g).0;
        d = &d.div_rem(&g).0 - &bn.derivative();
        if g.degree().unwrap_or(0) > 0 {
            out.push((g.to_integer().expect("integral factor"), i));
        }
        b = bn;
        i += 1;
    }
    out
}

fn mignotte_bound(f: &ZPoly) -> BigInt {
    let n = f.degree().unwrap_or(0);
    let norm = isqrt(&f.norm2_squared()) + BigInt::one();
    (BigInt::one() << n) * norm
}

/// Lift a pair `f ≡ g·h (mod p)` to `f ≡ G·H (mod p^k)`.
fn hensel_pair(f: &ZPoly, g: &FpPoly, h: &FpPoly, p: u64, pk: &BigInt) -> (ZPoly, ZPoly) {
    let (one, s, t) = g.xgcd(h);
    debug_assert!(one.is_one());
    let pb = BigInt::from(p);
    let mut gz = g.to_zpoly();
    let mut hz = h.to_zpoly();
    let mut m = pb.clone();
    while &m < pk {
        let diff = f - &(&gz * &hz);
        let e = ZPoly::new(diff.coeffs().iter().map(|c| c / &m).collect());
        let e = FpPoly::from_zpoly(&e, p);
        let (q, r) = t.mul(&e).div_rem(g);
        let tau = s.mul(&e).add(&q.mul(h));
        let mz = ZPoly::constant(m.clone());
        gz = &gz + &(&mz * &r.to_zpoly());
        hz = &hz + &(&mz * &tau.to_zpoly());
        m *= &pb;
    }
    let red = |z: &ZPoly| ZPoly::new(z.coeffs().iter().map(|c| c.mod_floor(pk)).collect());
    (red(&gz), red(&hz))
}

fn hensel_multi(f: &ZPoly, factors: &[FpPoly], p: u64, pk: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![ZPoly::new(f.coeffs().iter().map(|c| c.mod_floor(pk)).collect())];
    }
    let g = &factors[0];
    let h = factors[1..]
        .iter()
        .fold(FpPoly::one(p), |acc, x| acc.mul(x));
    let (gz, hz) = hensel_pair(f, g, &h, p, pk);
    let mut out = vec![gz];
    out.extend(hensel_multi(&hz, &factors[1..], p, pk));
    out
}

fn symmetric(z: &ZPoly, pk: &BigInt) -> ZPoly {
    let half = pk / 2;
    ZPoly::new(
        z.coeffs()
            .iter()
            .map(|c| {
                let c = c.mod_floor(pk);
                if c > half {
                    c - pk
                } else {
                    c
                }
            })
            .collect(),
    )
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Irreducible factors of a squarefree monic integer polynomial.
fn zassenhaus(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.degree().unwrap_or(0);
    if n <= 1 {
        return vec![f.clone()];
    }
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut tried = 0;
    let mut p = 2u64;
    while tried < 6 {
        p += 1;
        if !is_prime_u64(p) {
            continue;
        }
        let fp_ = FpPoly::from_zpoly(f, p);
        if fp_.deg() != n || !fp_.gcd(&fp_.derivative()).is_one() {
            continue;
        }
        tried += 1;
        let fac: Vec<FpPoly> = fp::factor(&fp_).into_iter().map(|(g, _)| g).collect();
        if fac.len() == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().map_or(true, |(_, b)| fac.len() < b.len()) {
            best = Some((p, fac));
        }
    }
    let (p, local) = best.expect("some prime keeps f squarefree");
    let bound = mignotte_bound(f) * 2;
    let pb = BigInt::from(p);
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
    }
    let lifted = hensel_multi(f, &local, p, &pk);
    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut g = f.clone();
    let mut out = Vec::new();
    let mut k = 1;
    while 2 * k <= remaining.len() {
        let mut found = false;
        for combo in subsets(remaining.len(), k) {
            let prod = combo
                .iter()
                .fold(ZPoly::one(), |acc, &i| &acc * &lifted[remaining[i]]);
            let cand = symmetric(&prod, &pk);
            if let Some(q) = exact_div(&g, &cand) {
                out.push(cand);
                g = q;
                let chosen: Vec<usize> = combo.iter().map(|&i| remaining[i]).collect();
                remaining.retain(|i| !chosen.contains(i));
                found = true;
                break;
            }
        }
        if !found {
            k += 1;
        }
    }
    if g.degree().unwrap_or(0) > 0 {
        out.push(g);
    }
    out
}

/// Irreducible monic factors of a monic integer polynomial, with multiplicity,
/// sorted by degree then coefficients.
pub fn factor_monic(f: &ZPoly) -> Vec<(ZPoly, u32)> {
    assert!(f.is_monic(), "factor_monic expects a monic polynomial");
    let mut out = Vec::new();
    for (part, mult) in squarefree_parts(f) {
        for g in zassenhaus(&part) {
            out.push((g, mult));
        }
    }
    out.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    out
}

/// A proper monic factor of `f`, or `None` if `f` is irreducible over Q.
pub fn proper_factor(f: &ZPoly) -> Option<ZPoly> {
    let fac = factor_monic(f);
    if fac.len() == 1 && fac[0].1 == 1 {
        None
    } else {
        Some(fac[0].0.clone())
    }
}

/// Make a monic rational polynomial integral by the substitution x -> x/d,
/// returning `(d, d^n f(x/d))`.
pub fn integralize(f: &QPoly) -> (BigInt, ZPoly) {
    let n = f.degree().unwrap_or(0);
    let mut d = BigInt::one();
    loop {
        let scaled = QPoly::new(
            (0..=n)
                .map(|i| f.coeff(i) * crate::Rational::from_integer(d.pow((n - i) as u32)))
                .collect(),
        );
        if let Some(z) = scaled.to_integer() {
            return (d, z);
        }
        let den = f
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        d *= den.abs();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(cs: &[i64]) -> ZPoly {
        ZPoly::from_i64s(cs)
    }

    #[test]
    fn reducible_fixtures() {
        for f in [z(&[-1, 0, 1]), z(&[0, -1, 0, 1]), z(&[-4, 0, 0, 0, 1])] {
            assert!(proper_factor(&f).is_some(), "{f}");
        }
        assert_eq!(
            factor_monic(&z(&[-4, 0, 0, 0, 1])),
            vec![(z(&[-2, 0, 1]), 1), (z(&[2, 0, 1]), 1)]
        );
    }

    #[test]
    fn irreducible_fixtures() {
        for f in [z(&[1, 0, -1, 1]), z(&[-2, 0, 1]), z(&[1, 0, 1]), z(&[1, 0, 0, 0, 1]), z(&[-2, 0, 0, 1])] {
            assert!(proper_factor(&f).is_none(), "{f}");
        }
        // x^4 + 1 splits modulo every prime but is irreducible over Q
        assert_eq!(factor_monic(&z(&[1, 0, 0, 0, 1])).len(), 1);
    }

    #[test]
    fn product_of_quadratics_and_squares() {
        let a = z(&[1, 1, 1]);
        let b = z(&[-3, 0, 1]);
        let c = z(&[5, 1]);
        let f = &(&(&a * &b) * &c) * &c;
        let fac = factor_monic(&f);
        assert_eq!(fac, vec![(c.clone(), 2), (b.clone(), 1), (a.clone(), 1)]);
    }

    #[test]
    fn sextic_split_as_two_cubics() {
        let a = z(&[1, 0, -1, 1]);
        let b = z(&[-2, 0, 0, 1]);
        let fac = factor_monic(&(&a * &b));
        assert_eq!(fac.len(), 2);
        assert!(fac.iter().any(|(g, _)| *g == a));
        assert!(fac.iter().any(|(g, _)| *g == b));
    }
}
