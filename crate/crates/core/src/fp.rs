//! Polynomials over a prime field F_p, with complete factorization
//! (squarefree, distinct-degree, Cantor-Zassenhaus).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ZPoly;

/// Coefficients low-to-high, reduced mod `p`, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct FpPoly {
    pub p: u64,
    pub c: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powmod_u64(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero mod {p}");
    powmod_u64(a, p - 2, p)
}

impl FpPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { p, c }
    }

    pub fn from_zpoly(f: &ZPoly, p: u64) -> Self {
        let pb = BigInt::from(p);
        FpPoly::new(
            p,
            f.coeffs()
                .iter()
                .map(|c| c.mod_floor(&pb).to_u64().unwrap())
                .collect(),
        )
    }

    /// Lift with coefficients in `[0, p)`.
    pub fn to_zpoly(&self) -> ZPoly {
        ZPoly::new(self.c.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Lift with coefficients in `(-p/2, p/2]`.
    pub fn to_zpoly_symmetric(&self) -> ZPoly {
        ZPoly::new(
            self.c
                .iter()
                .map(|&x| {
                    if x > self.p / 2 {
                        BigInt::from(x) - BigInt::from(self.p)
                    } else {
                        BigInt::from(x)
                    }
                })
                .collect(),
        )
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, c: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        FpPoly::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        FpPoly::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    fn coeff(&self, i: usize) -> u64 {
        *self.c.get(i).unwrap_or(&0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        FpPoly::new(
            self.p,
            (0..n).map(|i| (self.coeff(i) + o.coeff(i)) % self.p).collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        FpPoly::new(
            self.p,
            (0..n)
                .map(|i| (self.coeff(i) + self.p - o.coeff(i)) % self.p)
                .collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return FpPoly::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(a, b, p)) % p;
            }
        }
        FpPoly::new(p, out)
    }

    pub fn scale(&self, k: u64) -> Self {
        FpPoly::new(self.p, self.c.iter().map(|&a| mulmod(a, k, self.p)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.lc(), self.p))
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "FpPoly division by zero");
        let p = self.p;
        let dd = d.c.len() - 1;
        if self.c.len() <= dd {
            return (FpPoly::zero(p), self.clone());
        }
        let inv = inv_mod(d.lc(), p);
        let mut r = self.c.clone();
        let mut q = vec![0u64; r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = mulmod(r[i + dd], inv, p);
            if c == 0 {
                continue;
            }
            for (j, &dc) in d.c.iter().enumerate() {
                r[i + j] = (r[i + j] + p - mulmod(c, dc, p)) % p;
            }
            q[i] = c;
        }
        r.truncate(dd);
        (FpPoly::new(p, q), FpPoly::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero());
        q
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: `(g, s, t)` with `s·self + t·o = g`, `g` monic.
    pub fn xgcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (FpPoly::one(p), FpPoly::zero(p));
        let (mut t0, mut t1) = (FpPoly::zero(p), FpPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = inv_mod(r0.lc(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        FpPoly::new(
            self.p,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &a)| mulmod(a, (i as u64) % self.p, self.p))
                .collect(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0;
        for &a in self.c.iter().rev() {
            acc = (mulmod(acc, x, self.p) + a) % self.p;
        }
        acc
    }

    /// `self^e mod m`.
    pub fn powmod(&self, e: &BigInt, m: &Self) -> Self {
        let mut acc = FpPoly::one(self.p).rem(m);
        let base = self.rem(m);
        let bits = e.bits();
        for i in (0..bits).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    /// For `self = g(x^p)` returns `g`.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        FpPoly::new(self.p, self.c.iter().step_by(p).copied().collect())
    }

    /// Roots in F_p, ascending.
    pub fn roots(&self) -> Vec<u64> {
        let mut r = factor(self)
            .into_iter()
            .filter(|(g, _)| g.deg() == 1)
            .map(|(g, _)| (self.p - g.c[0]) % self.p)
            .collect::<Vec<_>>();
        r.sort_unstable();
        r
    }
}

fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.p;
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let fp = f.derivative();
    if fp.is_zero() {
        for (g, j) in squarefree_decomposition(&f.pth_root()) {
            out.push((g, j * p as u32));
        }
        return out;
    }
    let mut c = f.gcd(&fp);
    let mut w = f.div_exact(&c);
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y);
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.div_exact(&w);
        i += 1;
    }
    if !c.is_one() {
        for (g, j) in squarefree_decomposition(&c.pth_root()) {
            out.push((g, j * p as u32));
        }
    }
    out
}

fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = FpPoly::x(p);
    let mut h = x.clone();
    let pb = BigInt::from(p);
    let mut i = 1;
    while rest.deg() >= 2 * i {
        h = h.powmod(&pb, &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
            out.push((g, i));
        }
        i += 1;
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<FpPoly>) {
    let n = f.deg();
    if n == d {
        out.push(f.monic());
        return;
    }
    let p = f.p;
    loop {
        let a = FpPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = if p == 2 {
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = (BigInt::from(p).pow(d as u32) - BigInt::one()) / 2;
            a.powmod(&e, f).sub(&FpPoly::one(p))
        };
        let g = f.gcd(&b);
        if g.deg() > 0 && g.deg() < n {
            let h = f.div_exact(&g);
            equal_degree(&g, d, rng, out);
            equal_degree(&h, d, rng, out);
            return;
        }
    }
}

/// Complete factorization of `f` into monic irreducibles with multiplicity,
/// sorted by (degree, coefficients).
pub fn factor(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    assert!(!f.is_zero(), "factor(0)");
    let f = f.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d ^ f.p);
    let mut out = Vec::new();
    for (sf, mult) in squarefree_decomposition(&f) {
        for (g, d) in distinct_degree(&sf) {
            let mut parts = Vec::new();
            equal_degree(&g, d, &mut rng, &mut parts);
            for q in parts {
                out.push((q, mult));
            }
        }
    }
    out.sort_by(|(a, _), (b, _)| a.deg().cmp(&b.deg()).then_with(|| a.c.cmp(&b.c)));
    out
}

pub fn is_irreducible(f: &FpPoly) -> bool {
    let fac = factor(f);
    fac.len() == 1 && fac[0].1 == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64, c: &[u64]) -> FpPoly {
        FpPoly::new(p, c.to_vec())
    }

    fn product(fs: &[(FpPoly, u32)], p: u64) -> FpPoly {
        fs.iter().fold(FpPoly::one(p), |acc, (g, e)| {
            (0..*e).fold(acc, |a, _| a.mul(g))
        })
    }

    #[test]
    fn cubic_mod_2_is_irreducible() {
        // x^3 - x^2 + 1 == x^3 + x^2 + 1 over F_2
        let f = FpPoly::from_zpoly(&ZPoly::from_i64s(&[1, 0, -1, 1]), 2);
        assert!(is_irreducible(&f));
    }

    #[test]
    fn cubic_mod_23_has_double_root() {
        let f = FpPoly::from_zpoly(&ZPoly::from_i64s(&[1, 0, -1, 1]), 23);
        let fac = factor(&f);
        assert_eq!(fac, vec![(fp(23, &[7, 1]), 2), (fp(23, &[8, 1]), 1)]);
        assert_eq!(f.roots(), vec![15, 16]);
        assert_eq!(f.eval(16), 0);
        assert_eq!(f.derivative().eval(16), 0);
    }

    #[test]
    fn factorization_reconstructs() {
        for &p in &[2u64, 3, 5, 7, 101, 1_000_003] {
            let f = FpPoly::from_zpoly(&ZPoly::from_i64s(&[4, 0, 0, 0, -1, 0, 1, 1, 3]), p)
                .mul(&FpPoly::from_zpoly(&ZPoly::from_i64s(&[1, 1]), p))
                .mul(&FpPoly::from_zpoly(&ZPoly::from_i64s(&[1, 1]), p));
            let fac = factor(&f);
            assert_eq!(product(&fac, p), f.monic(), "p = {p}");
            for (g, _) in &fac {
                let sub = factor(g);
                assert_eq!(sub.len(), 1);
                assert_eq!(sub[0].1, 1);
            }
        }
    }

    #[test]
    fn pth_powers() {
        let f = fp(3, &[1, 0, 0, 1]); // x^3 + 1 = (x+1)^3
        assert_eq!(factor(&f), vec![(fp(3, &[1, 1]), 3)]);
    }

    #[test]
    fn xgcd_identity() {
        let a = fp(7, &[1, 2, 3, 1]);
        let b = fp(7, &[5, 1, 1]);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }
}
