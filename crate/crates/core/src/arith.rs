//! Integer helpers: primality, factorization, p-adic valuations.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::sync::OnceLock;

use crate::Rational;

/// Trial division covers every prime below this bound.
pub const TRIAL_DIVISION_BOUND: u32 = 1_000_000;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(TRIAL_DIVISION_BOUND))
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(n: u32) -> Vec<u32> {
    let n = n as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u32);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

fn mod_pow(base: &BigInt, exp: &BigInt, m: &BigInt) -> BigInt {
    base.modpow(exp, m)
}

/// Miller-Rabin with the first twelve prime bases. Deterministic below 3.18e23.
pub fn is_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for &p in &[2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigInt::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let n1 = n - &one;
    let mut d = n1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'bases: for &a in &[2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(&BigInt::from(a), &d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

pub fn is_prime_u64(n: u64) -> bool {
    is_prime(&BigInt::from(n))
}

/// Result of integer factorization. `unfactored` holds a composite cofactor
/// that Pollard rho failed to split within its work limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(BigInt, u32)>,
    pub unfactored: Option<BigInt>,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn is_complete(&self) -> bool {
        self.unfactored.is_none()
    }
}

fn pollard_rho(n: &BigInt) -> Option<BigInt> {
    if n.is_even() {
        return Some(BigInt::from(2));
    }
    for c in 1u32..40 {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut x = BigInt::from(2);
        let mut y = x.clone();
        let mut d = BigInt::one();
        let mut steps = 0u64;
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
            steps += 1;
            if steps > 2_000_000 {
                break;
            }
        }
        if !d.is_one() && &d != n {
            return Some(d);
        }
    }
    None
}

/// Factor |n| (n nonzero). Trial division to 10^6, then Miller-Rabin and
/// Pollard rho on the cofactor.
pub fn factor(n: &BigInt) -> Factorization {
    assert!(!n.is_zero(), "factor(0)");
    let mut m = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    for &p in small_primes() {
        let pb = BigInt::from(p);
        if &pb * &pb > m {
            break;
        }
        let mut e = 0;
        while (&m % &pb).is_zero() {
            m /= &pb;
            e += 1;
        }
        if e > 0 {
            factors.push((pb, e));
        }
    }
    let mut unfactored = None;
    if !m.is_one() {
        let mut stack = vec![m];
        let mut big: Vec<BigInt> = Vec::new();
        while let Some(x) = stack.pop() {
            if x.is_one() {
                continue;
            }
            let bound = BigInt::from(TRIAL_DIVISION_BOUND);
            if x < &bound * &bound || is_prime(&x) {
                big.push(x);
            } else if let Some(d) = pollard_rho(&x) {
                let other = &x / &d;
                stack.push(d);
                stack.push(other);
            } else {
                unfactored = Some(match unfactored {
                    None => x,
                    Some(u) => u * x,
                });
            }
        }
        big.sort();
        for p in big {
            match factors.iter_mut().find(|(q, _)| *q == p) {
                Some(entry) => entry.1 += 1,
                None => factors.push((p, 1)),
            }
        }
    }
    factors.sort();
    Factorization {
        factors,
        unfactored,
    }
}

/// Exponent of the prime `p` in the nonzero integer `n`.
pub fn val_int(n: &BigInt, p: &BigInt) -> u32 {
    assert!(!n.is_zero());
    let mut m = n.clone();
    let mut e = 0;
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return e;
        }
        m = q;
        e += 1;
    }
}

/// p-adic valuation of a nonzero rational.
pub fn val_rat(x: &Rational, p: &BigInt) -> i64 {
    val_int(x.numer(), p) as i64 - val_int(x.denom(), p) as i64
}

/// Strip every factor of `p` from `n`.
pub fn strip(n: &BigInt, p: &BigInt) -> BigInt {
    let mut m = n.clone();
    while !m.is_zero() && (&m % p).is_zero() {
        m /= p;
    }
    m
}

pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(n.sign() != Sign::Minus);
    n.sqrt()
}

pub fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = isqrt(n);
    &r * &r == *n
}

/// Squarefree part with sign, e.g. 8 -> 2, -12 -> -3.
pub fn squarefree_part(n: &BigInt) -> (BigInt, BigInt) {
    let f = factor(n);
    assert!(f.is_complete(), "squarefree_part: incomplete factorization");
    let mut core = BigInt::one();
    let mut root = BigInt::one();
    for (p, e) in &f.factors {
        if e % 2 == 1 {
            core *= p;
        }
        root *= p.pow(e / 2);
    }
    if n.is_negative() {
        core = -core;
    }
    (core, root)
}

pub fn to_u64(n: &BigInt) -> Option<u64> {
    n.to_u64()
}

pub fn next_prime(n: u64) -> u64 {
    let mut m = n + 1;
    while !is_prime_u64(m) {
        m += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let ps: Vec<u64> = (0..60).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            ps,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(&BigInt::from(1_000_000_007u64)));
        assert!(!is_prime(&BigInt::from(561u32)));
    }

    #[test]
    fn factor_mixed() {
        let n = BigInt::from(2u64 * 2 * 3 * 1_000_003 * 1_000_033);
        let f = factor(&n);
        assert!(f.is_complete());
        assert_eq!(
            f.factors,
            vec![
                (BigInt::from(2), 2),
                (BigInt::from(3), 1),
                (BigInt::from(1_000_003), 1),
                (BigInt::from(1_000_033), 1)
            ]
        );
        assert_eq!(factor(&BigInt::from(-23)).factors, vec![(BigInt::from(23), 1)]);
        assert!(factor(&BigInt::one()).factors.is_empty());
    }

    #[test]
    fn squarefree() {
        assert_eq!(squarefree_part(&BigInt::from(8)), (BigInt::from(2), BigInt::from(2)));
        assert_eq!(squarefree_part(&BigInt::from(-12)), (BigInt::from(-3), BigInt::from(2)));
    }

    #[test]
    fn valuations() {
        let x = Rational::new(BigInt::from(3), BigInt::from(4));
        assert_eq!(val_rat(&x, &BigInt::from(2)), -2);
        assert_eq!(val_int(&BigInt::from(48), &BigInt::from(2)), 4);
    }
}
