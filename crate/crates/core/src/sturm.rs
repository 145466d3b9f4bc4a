//! Sturm sequences and real-root isolation with exact interval endpoints.

use num_traits::Signed;

use crate::poly::{Poly, Scalar};

/// Half-open interval `(lo, hi]` known to contain exactly one real root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval<T> {
    pub lo: T,
    pub hi: T,
}

#[derive(Clone, Debug)]
pub struct SturmChain<T> {
    chain: Vec<Poly<T>>,
}

impl<T: Scalar + Signed + PartialOrd> SturmChain<T> {
    /// Chain of the squarefree part of `f`.
    pub fn new(f: &Poly<T>) -> Self {
        let g = f.gcd(&f.derivative());
        let f0 = f.div_rem(&g).0;
        let mut chain = vec![f0.clone(), f0.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(-&r);
        }
        SturmChain { chain }
    }

    pub fn base(&self) -> &Poly<T> {
        &self.chain[0]
    }

    fn variations(&self, x: &T) -> usize {
        let mut last: Option<bool> = None;
        let mut v = 0;
        for p in &self.chain {
            let s = p.eval(x);
            if s.is_zero() {
                continue;
            }
            let pos = s.is_positive();
            if let Some(l) = last {
                if l != pos {
                    v += 1;
                }
            }
            last = Some(pos);
        }
        v
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &T, hi: &T) -> usize {
        self.variations(lo) - self.variations(hi)
    }

    /// Total number of distinct real roots.
    pub fn count_all(&self) -> usize {
        let b = cauchy_bound(self.base());
        self.count(&-b.clone(), &b)
    }
}

/// `1 + max |a_i / a_n|`: every root has absolute value below this.
pub fn cauchy_bound<T: Scalar + Signed + PartialOrd>(f: &Poly<T>) -> T {
    let lc = f.lc();
    let mut m = T::zero();
    for c in f.coeffs() {
        let r = (c.clone() / lc.clone()).abs();
        if r > m {
            m = r;
        }
    }
    m + T::one()
}

fn two<T: Scalar>() -> T {
    T::one() + T::one()
}

/// Isolating intervals for every distinct real root, in increasing order.
pub fn isolate_real_roots<T: Scalar + Signed + PartialOrd>(f: &Poly<T>) -> Vec<RootInterval<T>> {
    let sc = SturmChain::new(f);
    let b = cauchy_bound(sc.base());
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = sc.count(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(RootInterval { lo, hi });
            continue;
        }
        let mid = (lo.clone() + hi.clone()) / two();
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.lo.partial_cmp(&b.lo).expect("ordered scalar"));
    out
}

/// Halve an isolating interval of a root of `sc`'s base polynomial.
pub fn bisect<T: Scalar + Signed + PartialOrd>(sc: &SturmChain<T>, iv: &RootInterval<T>) -> RootInterval<T> {
    let mid = (iv.lo.clone() + iv.hi.clone()) / two();
    if sc.count(&iv.lo, &mid) == 1 {
        RootInterval { lo: iv.lo.clone(), hi: mid }
    } else {
        RootInterval { lo: mid, hi: iv.hi.clone() }
    }
}

/// Sign of `g(α)` where `α` is the root of `sc`'s base polynomial isolated
/// by `iv`, assuming `g(α) != 0`. Returns the sign (+1/-1) and the refined
/// interval on which `g` has no root.
pub fn sign_at_root<T: Scalar + Signed + PartialOrd>(
    sc: &SturmChain<T>,
    iv: &RootInterval<T>,
    g: &Poly<T>,
) -> (i8, RootInterval<T>) {
    assert!(!g.is_zero(), "sign of the zero polynomial");
    if g.degree() == Some(0) {
        return (if g.lc().is_positive() { 1 } else { -1 }, iv.clone());
    }
    let gc = SturmChain::new(g);
    let mut iv = iv.clone();
    for _ in 0..10_000 {
        if gc.count(&iv.lo, &iv.hi) == 0 {
            let v = g.eval(&iv.hi);
            if !v.is_zero() {
                return (if v.is_positive() { 1 } else { -1 }, iv);
            }
        }
        iv = bisect(sc, &iv);
    }
    panic!("sign_at_root: g appears to vanish at the root");
}
