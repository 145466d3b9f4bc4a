//! Quadratic fields through their maximal order `Z[ω]`: ideals as HNF
//! lattices, an exact principal-ideal test, continued-fraction units and the
//! class group closure used for class numbers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};
use crate::fp::FpPoly;
use crate::ideal::PrimeIdeal;
use crate::{QPoly, Rational};

/// Element `u + v·ω` of the maximal order.
pub type OElem = (BigInt, BigInt);

/// Z-lattice `a·Z + (b + c·ω)·Z` in Hermite normal form (a, c > 0, 0 ≤ b < a).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl Lattice {
    pub fn unit() -> Self {
        Lattice {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::one(),
        }
    }

    pub fn norm(&self) -> BigInt {
        &self.a * &self.c
    }

    pub fn basis(&self) -> [OElem; 2] {
        [
            (self.a.clone(), BigInt::zero()),
            (self.b.clone(), self.c.clone()),
        ]
    }

    pub fn contains(&self, x: &OElem) -> bool {
        let (u, v) = x;
        if !(v % &self.c).is_zero() {
            return false;
        }
        let y = v / &self.c;
        ((u - &y * &self.b) % &self.a).is_zero()
    }
}

/// Hermite normal form of the lattice spanned by `gens` (full rank assumed).
pub fn hnf(gens: &[OElem]) -> Lattice {
    let mut rows: Vec<OElem> = gens
        .iter()
        .filter(|(u, v)| !(u.is_zero() && v.is_zero()))
        .cloned()
        .collect();
    // Euclid on the ω-coordinates until one row carries their gcd.
    loop {
        let mut nz: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i].1.is_zero()).collect();
        if nz.len() <= 1 {
            break;
        }
        nz.sort_by(|&i, &j| rows[i].1.abs().cmp(&rows[j].1.abs()));
        let p = nz[0];
        let (pu, pv) = rows[p].clone();
        for &i in &nz[1..] {
            let q = rows[i].1.div_floor(&pv);
            rows[i].0 -= &q * &pu;
            rows[i].1 -= &q * &pv;
        }
    }
    let mut c = BigInt::zero();
    let mut b = BigInt::zero();
    let mut a = BigInt::zero();
    for (u, v) in &rows {
        if v.is_zero() {
            a = a.gcd(u);
        } else {
            c = v.clone();
            b = u.clone();
        }
    }
    if c.is_negative() {
        c = -c;
        b = -b;
    }
    assert!(!a.is_zero() && !c.is_zero(), "lattice is not of full rank");
    b = b.mod_floor(&a);
    Lattice { a, b, c }
}

#[derive(Clone, Debug)]
pub struct Quadratic {
    /// Squarefree d with K = Q(√d).
    pub d: BigInt,
    pub disc: BigInt,
    /// `Tr(ω)` and `Norm(ω)`.
    pub tr: BigInt,
    pub nm: BigInt,
    /// θ = t0 + t1·ω.
    t0: BigInt,
    t1: BigInt,
    pub unit: Option<OElem>,
    /// Integer strictly above the fundamental unit (1 for imaginary fields).
    unit_bound: BigInt,
}

impl Quadratic {
    pub fn new(field: &NumberField) -> Result<Self> {
        if field.degree != 2 {
            return Err(Error::Unsupported("quadratic machinery needs degree 2".into()));
        }
        let f = &field.defining_poly;
        let bcoef = f.coeff(1);
        let dp = &field.poly_disc;
        let (d, s) = arith::squarefree_part(dp);
        let four = BigInt::from(4);
        let one_mod_four = d.mod_floor(&four).is_one();
        let (tr, nm, disc) = if one_mod_four {
            (BigInt::one(), (BigInt::one() - &d) / &four, d.clone())
        } else {
            (BigInt::zero(), -d.clone(), &d * &four)
        };
        // θ = (-B + s√d)/2 and √d = ω (d ≢ 1) or 2ω - 1 (d ≡ 1).
        let (t0, t1) = if one_mod_four {
            ((-&bcoef - &s) / 2, s.clone())
        } else {
            (-&bcoef / 2, &s / 2)
        };
        let mut q = Quadratic {
            d,
            disc,
            tr,
            nm,
            t0,
            t1,
            unit: None,
            unit_bound: BigInt::one(),
        };
        debug_assert_eq!(q.to_field(field, &q.theta_coords()), field.theta());
        if q.d.is_positive() {
            let u = q.fundamental_unit();
            // u = x + y ω > 1 with x + y ω ≤ |x| + |y|·(⌊√d⌋ + 1)
            q.unit_bound = u.0.abs() + u.1.abs() * (q.d.sqrt() + 2) + 1;
            q.unit = Some(u);
        }
        Ok(q)
    }

    fn theta_coords(&self) -> OElem {
        (self.t0.clone(), self.t1.clone())
    }

    pub fn mul(&self, x: &OElem, y: &OElem) -> OElem {
        let vv = &x.1 * &y.1;
        (
            &x.0 * &y.0 - &vv * &self.nm,
            &x.0 * &y.1 + &x.1 * &y.0 + &vv * &self.tr,
        )
    }

    pub fn conj(&self, x: &OElem) -> OElem {
        (&x.0 + &x.1 * &self.tr, -x.1.clone())
    }

    pub fn norm(&self, x: &OElem) -> BigInt {
        &x.0 * &x.0 + &x.0 * &x.1 * &self.tr + &x.1 * &x.1 * &self.nm
    }

    /// Power-basis element for `u + vω`.
    pub fn to_field(&self, field: &NumberField, x: &OElem) -> FieldElement {
        // ω = (θ - t0)/t1
        let t1 = Rational::from_integer(self.t1.clone());
        let w = QPoly::new(vec![
            -Rational::from_integer(self.t0.clone()) / &t1,
            Rational::one() / &t1,
        ]);
        let p = &QPoly::constant(Rational::from_integer(x.0.clone()))
            + &w.scale(&Rational::from_integer(x.1.clone()));
        field.from_poly(&p)
    }

    /// ω-coordinates of an element of O_K; `None` if not integral.
    pub fn from_field(&self, x: &FieldElement) -> Option<OElem> {
        let x0 = &x.coords[0];
        let x1 = &x.coords[1];
        let u = x0 + x1 * Rational::from_integer(self.t0.clone());
        let v = x1 * Rational::from_integer(self.t1.clone());
        (u.is_integer() && v.is_integer()).then(|| (u.to_integer(), v.to_integer()))
    }

    pub fn ideal_mul(&self, x: &Lattice, y: &Lattice) -> Lattice {
        let mut gens = Vec::with_capacity(4);
        for a in x.basis() {
            for b in y.basis() {
                gens.push(self.mul(&a, &b));
            }
        }
        hnf(&gens)
    }

    pub fn ideal_conj(&self, x: &Lattice) -> Lattice {
        hnf(&x.basis().iter().map(|e| self.conj(e)).collect::<Vec<_>>())
    }

    pub fn ideal_pow(&self, x: &Lattice, k: u32) -> Lattice {
        (0..k).fold(Lattice::unit(), |acc, _| self.ideal_mul(&acc, x))
    }

    /// Ideal generated by the given elements of O_K.
    pub fn ideal_from_gens(&self, gens: &[OElem]) -> Lattice {
        let omega = (BigInt::zero(), BigInt::one());
        let mut all = Vec::new();
        for g in gens {
            all.push(g.clone());
            all.push(self.mul(g, &omega));
        }
        hnf(&all)
    }

    /// Lattice of a prime ideal produced by Dedekind factorization.
    pub fn prime_lattice(&self, field: &NumberField, p: &PrimeIdeal) -> Lattice {
        let g = self
            .from_field(&p.second_generator(field))
            .expect("Dedekind generator is integral");
        self.ideal_from_gens(&[(BigInt::from(p.q), BigInt::zero()), g])
    }

    /// Prime ideals of O_K above q as lattices, built from the minimal
    /// polynomial of ω (independent of the chosen defining polynomial).
    pub fn primes_above(&self, q: u64) -> Vec<Lattice> {
        let m = FpPoly::from_zpoly(
            &crate::ZPoly::new(vec![self.nm.clone(), -self.tr.clone(), BigInt::one()]),
            q,
        );
        let roots = m.roots();
        let qb = BigInt::from(q);
        if roots.is_empty() {
            return vec![self.ideal_from_gens(&[(qb, BigInt::zero())])];
        }
        roots
            .iter()
            .map(|&r| self.ideal_from_gens(&[(qb.clone(), BigInt::zero()), (-BigInt::from(r), BigInt::one())]))
            .collect()
    }

    /// A generator of the ideal if it is principal. The search is exact: a
    /// generator can always be moved by a unit power into the box examined.
    pub fn principal_generator(&self, x: &Lattice) -> Option<OElem> {
        let n = x.norm();
        // |σ_i(α)|^2 ≤ N·ε for a balanced generator α.
        let r2 = &n * &self.unit_bound;
        let r = r2.sqrt() + 1;
        let k: i64 = if self.tr.is_zero() { 2 } else { 1 };
        let sd = self.d.abs().sqrt().max(BigInt::one());
        let vmax: BigInt = (BigInt::from(2) * &r) / (BigInt::from(k) * &sd) + 1;
        let targets: Vec<BigInt> = if self.d.is_negative() {
            vec![n.clone()]
        } else {
            vec![n.clone(), -n.clone()]
        };
        let mut best: Option<OElem> = None;
        let step = x.c.clone();
        let mut v: BigInt = -(&vmax / &step) * &step;
        while v <= vmax {
            for t in &targets {
                // u^2 + u·v·tr + v^2·nm - t = 0
                let bq = &v * &self.tr;
                let cq = &v * &v * &self.nm - t;
                let disc = &bq * &bq - BigInt::from(4) * &cq;
                if disc.is_negative() || !arith::is_square(&disc) {
                    continue;
                }
                let sq = disc.sqrt();
                for sgn in [1, -1] {
                    let num: BigInt = -&bq + &sq * BigInt::from(sgn);
                    if !num.is_even() {
                        continue;
                    }
                    let u = num / 2;
                    let cand = (u, v.clone());
                    if x.contains(&cand) {
                        let better = match &best {
                            None => true,
                            Some(b) => height(&cand) < height(b),
                        };
                        if better {
                            best = Some(cand);
                        }
                    }
                }
            }
            v += &step;
        }
        best
    }

    pub fn is_principal(&self, x: &Lattice) -> bool {
        self.principal_generator(x).is_some()
    }

    /// Same ideal class (in the wide sense).
    pub fn equivalent(&self, x: &Lattice, y: &Lattice) -> bool {
        self.is_principal(&self.ideal_mul(x, &self.ideal_conj(y)))
    }

    /// Fundamental unit `> 1` of a real quadratic field, from the continued
    /// fraction of ω.
    fn fundamental_unit(&self) -> OElem {
        assert!(self.d.is_positive());
        let d = &self.d;
        let sd = d.sqrt();
        // ω = (P + √d)/Q
        let (mut p, mut q) = if self.tr.is_zero() {
            (BigInt::zero(), BigInt::one())
        } else {
            (BigInt::one(), BigInt::from(2))
        };
        let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
        let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
        loop {
            let a = (&p + &sd).div_floor(&q);
            let h2 = &a * &h1 + &h0;
            let k2 = &a * &k1 + &k0;
            h0 = h1;
            h1 = h2;
            k0 = k1;
            k1 = k2;
            // h1/k1 ≈ ω, so h1 - k1·ω is tiny and its conjugate is the unit.
            let small = (h1.clone(), -k1.clone());
            if self.norm(&small).abs().is_one() {
                return self.conj(&small);
            }
            p = &a * &q - &p;
            q = (d - &p * &p) / &q;
        }
    }

    /// Number of ideal classes, by closing the classes of all primes of norm
    /// at most √|D| (which exceeds the Minkowski bound) under multiplication.
    /// Returns one lattice per class, the principal class first.
    pub fn class_reps(&self) -> Vec<Lattice> {
        let bound = self.disc.abs().sqrt().to_u64().unwrap_or(u64::MAX);
        let mut gens = Vec::new();
        for q in arith::primes_up_to(bound.min(1 << 20) as u32) {
            for l in self.primes_above(q as u64) {
                if l.norm() <= BigInt::from(bound) {
                    gens.push(l);
                }
            }
        }
        let mut reps = vec![Lattice::unit()];
        let mut i = 0;
        while i < reps.len() {
            for g in &gens {
                let j = self.ideal_mul(&reps[i], g);
                if !reps.iter().any(|r| self.equivalent(&j, r)) {
                    reps.push(j);
                }
            }
            i += 1;
        }
        reps
    }
}

fn height(x: &OElem) -> (BigInt, BigInt, bool, bool) {
    (
        x.0.abs() + x.1.abs(),
        x.1.abs(),
        x.1.is_negative(),
        x.0.is_negative(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad(c: &[i64]) -> (NumberField, Quadratic) {
        let k = NumberField::from_int_coeffs(c).unwrap();
        let q = Quadratic::new(&k).unwrap();
        (k, q)
    }

    #[test]
    fn units_by_continued_fractions() {
        let (k, q) = quad(&[-2, 0, 1]);
        assert_eq!(q.to_field(&k, &q.unit.clone().unwrap()), k.elem_i64(&[1, 1]));
        let (k, q) = quad(&[-3, 0, 1]);
        assert_eq!(q.to_field(&k, &q.unit.clone().unwrap()), k.elem_i64(&[2, 1]));
        let (_, q) = quad(&[-1, -1, 1]);
        assert_eq!(q.unit.clone().unwrap(), (BigInt::zero(), BigInt::one()));
        let (k, q) = quad(&[-7, 0, 1]);
        assert_eq!(q.to_field(&k, &q.unit.clone().unwrap()), k.elem_i64(&[8, 3]));
    }

    #[test]
    fn class_numbers() {
        for (c, h) in [
            (&[-2, 0, 1][..], 1),
            (&[-10, 0, 1], 2),
            (&[5, 0, 1], 2),
            (&[1, 0, 1], 1),
            (&[-15, 0, 1], 2),
            (&[6, -1, 1], 3),
            (&[-79, 0, 1], 3),
        ] {
            let (_, q) = quad(c);
            assert_eq!(q.class_reps().len(), h, "{c:?}");
        }
    }

    #[test]
    fn principal_generators() {
        let (k, q) = quad(&[1, 0, 1]);
        let p = crate::ideal::s_k(&k).unwrap().remove(0);
        let l = q.prime_lattice(&k, &p);
        assert_eq!(l.norm(), BigInt::from(2));
        let g = q.principal_generator(&l).unwrap();
        assert_eq!(q.norm(&g), BigInt::from(2));
        let (k, q) = quad(&[-10, 0, 1]);
        let p = crate::ideal::s_k(&k).unwrap().remove(0);
        assert!(!q.is_principal(&q.prime_lattice(&k, &p)));
    }

    #[test]
    fn conversion_round_trip() {
        let (k, q) = quad(&[-1, -1, 1]);
        let x = k.elem_i64(&[3, -2]);
        let o = q.from_field(&x).unwrap();
        assert_eq!(q.to_field(&k, &o), x);
        assert_eq!(q.norm(&o), k.norm(&x).to_integer());
    }
}
