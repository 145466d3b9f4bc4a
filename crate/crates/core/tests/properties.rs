use fermat_core::config::Bounds;
use fermat_core::extension;
use fermat_core::frey;
use fermat_core::ideal;
use fermat_core::selmer::selmer_group;
use fermat_core::{FieldElement, NumberField, PrimeIdeal, Rational, ValuationForm};
use proptest::prelude::*;

fn fields() -> Vec<NumberField> {
    vec![
        NumberField::rationals(),
        NumberField::from_int_coeffs(&[-2, 0, 1]).unwrap(),
        NumberField::from_int_coeffs(&[1, 0, 1]).unwrap(),
        NumberField::from_int_coeffs(&[-1, -1, 1]).unwrap(),
        NumberField::from_int_coeffs(&[1, 0, -1, 1]).unwrap(),
    ]
}

fn field(i: usize) -> NumberField {
    fields().swap_remove(i % 5)
}

fn coord() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=6).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn element(k: &NumberField, cs: &[Rational]) -> FieldElement {
    k.elem(cs[..k.degree].to_vec())
}

fn coords() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(coord(), 3)
}

/// Primes above 2, 3 and 5 that the field can factor.
fn small_primes(k: &NumberField) -> Vec<PrimeIdeal> {
    [2u64, 3, 5]
        .iter()
        .filter_map(|&q| ideal::factor_rational_prime(k, q).ok())
        .flatten()
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn norm_is_multiplicative_and_trace_additive(i in 0usize..5, x in coords(), y in coords()) {
        let k = field(i);
        let (x, y) = (element(&k, &x), element(&k, &y));
        prop_assert_eq!(k.norm(&k.mul(&x, &y)), k.norm(&x) * k.norm(&y));
        prop_assert_eq!(k.trace(&k.add(&x, &y)), k.trace(&x) + k.trace(&y));
        let (n, t) = k.norm_trace(&x);
        prop_assert_eq!(n, k.norm(&x));
        prop_assert_eq!(t, k.trace(&x));
    }

    #[test]
    fn valuation_is_a_valuation(i in 0usize..5, x in coords(), y in coords()) {
        let k = field(i);
        let (x, y) = (element(&k, &x), element(&k, &y));
        prop_assume!(!x.is_zero() && !y.is_zero());
        for p in small_primes(&k) {
            let vx = ideal::valuation(&k, &x, &p).unwrap();
            let vy = ideal::valuation(&k, &y, &p).unwrap();
            prop_assert_eq!(ideal::valuation(&k, &k.mul(&x, &y), &p).unwrap(), vx + vy);
            let s = k.add(&x, &y);
            if !s.is_zero() {
                prop_assert!(ideal::valuation(&k, &s, &p).unwrap() >= vx.min(vy));
            }
            let q = k.from_int(p.q);
            prop_assert_eq!(ideal::valuation(&k, &q, &p).unwrap(), p.e as i64);
        }
    }

    #[test]
    fn legendre_j_is_constant_on_the_orbit(i in 0usize..3, x in coords()) {
        let k = field([0, 1, 3][i]);
        let l = element(&k, &x);
        prop_assume!(!l.is_zero() && l != k.one());
        let j = frey::legendre_j(&k, &l).unwrap();
        for m in frey::lambda_orbit(&k, &l).unwrap() {
            prop_assert_eq!(&frey::legendre_j(&k, &m).unwrap(), &j);
        }
        let mu = k.sub(&k.one(), &l);
        prop_assert_eq!(frey::j_from_lambda_mu(&k, &l, &mu).unwrap(), j);
    }

    #[test]
    fn squares_are_recognised(i in 0usize..5, x in coords()) {
        let k = field(i);
        let x = element(&k, &x);
        prop_assume!(!x.is_zero());
        let sq = k.mul(&x, &x);
        prop_assert!(extension::is_square(&k, &sq));
        let r = extension::sqrt(&k, &sq).unwrap();
        prop_assert!(r == x || r == k.neg(&x));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn valuation_forms_agree_with_evaluation(alpha in -2000i64..=2000, beta in -50i64..=50) {
        let f = ValuationForm::new(alpha, beta);
        for p in [7u64, 11, 13, 10007] {
            let v = f.eval(p);
            if p > f.threshold() {
                prop_assert_eq!(f.p_divides(), v % p as i128 == 0, "{} at p = {}", f, p);
                prop_assert_eq!(f.sign() as i128, v.signum(), "{} at p = {}", f, p);
            }
            if p > f.sign_threshold() {
                prop_assert_eq!(f.sign() as i128, v.signum(), "{} at p = {}", f, p);
            }
        }
    }
}

fn selmer_closure(k: &NumberField) {
    let s = ideal::s_k(k).unwrap();
    let g = selmer_group(k, &s, 2, &Bounds::default()).unwrap();
    assert_eq!(g.representatives.len(), 1 << g.basis_size);
    let reps = &g.representatives;
    for (i, r) in reps.iter().enumerate() {
        assert_eq!(g.class_of(k, r), Some(i));
        for (j, t) in reps.iter().enumerate() {
            let prod = k.mul(r, t);
            // bits add mod 2 under multiplication
            assert_eq!(g.class_of(k, &prod), Some(i ^ j), "{} * {} in {}", r, t, k.defining_poly);
            if i != j {
                assert!(!extension::is_square(k, &k.div(r, t).unwrap()));
            }
        }
    }
}

#[test]
fn selmer_groups_are_closed() {
    for k in &fields()[..4] {
        selmer_closure(k);
    }
}

#[test]
fn selmer_group_over_q() {
    let q = NumberField::rationals();
    let g = selmer_group(&q, &ideal::s_k(&q).unwrap(), 2, &Bounds::default()).unwrap();
    let reps: Vec<Rational> = g.representatives.iter().map(|r| r.as_rational().unwrap()).collect();
    let want: Vec<Rational> = [1, -1, 2, -2].iter().map(|&n: &i64| Rational::from_integer(n.into())).collect();
    assert_eq!(reps, want);
}
