mod support;

use fermat_core::frey::{self, ConcreteInvariants, Exponent, Family, FreySpec};
use fermat_core::{Error, FieldElement, NumberField};
use support::fixtures::frey_fixtures;

fn pw(k: &NumberField, x: &FieldElement, e: i64) -> FieldElement {
    k.pow(x, e).unwrap()
}

/// Δ and c4 straight from the closed forms, with the field's own arithmetic.
fn closed_forms(k: &NumberField, s: &FreySpec, p: i64) -> (FieldElement, FieldElement) {
    let two = k.from_int(2);
    let (a, b, c) = (&s.a, &s.b, &s.c);
    match s.family {
        Family::TwoPowerTwist { r } => {
            let abc = k.mul(&k.mul(a, b), c);
            let delta = k.mul(&pw(k, &two, 4 + 2 * r as i64), &pw(k, &abc, 2 * p));
            let inner = k.add(&pw(k, a, 2 * p), &k.mul(&pw(k, &two, r as i64), &k.mul(&pw(k, b, p), &pw(k, c, p))));
            (delta, k.mul(&pw(k, &two, 4), &inner))
        }
        Family::PPTwo => {
            let a2b = k.mul(&k.mul(a, a), b);
            let delta = k.mul(&pw(k, &two, 12), &pw(k, &a2b, p));
            let inner = k.sub(&k.scale(&k.mul(c, c), &frey::rational(4, 1)), &k.scale(&pw(k, a, p), &frey::rational(3, 1)));
            (delta, k.mul(&pw(k, &two, 6), &inner))
        }
    }
}

#[test]
fn fixtures_cross_check_exactly() {
    let fx = frey_fixtures();
    assert!(fx.len() >= 50, "only {} fixtures", fx.len());
    let mut per_family = [0usize; 2];
    for f in &fx {
        let (k, s) = (&f.field, &f.spec);
        let Exponent::Concrete(p) = s.p else { unreachable!() };
        assert!(frey::relation_holds(k, s, p), "{}", f.label);
        let report = frey::cross_check_report(k, s).unwrap();
        assert!(report.all(), "{}: {report:?}", f.label);
        assert!(frey::concrete_cross_check(k, s).unwrap());

        let w = frey::frey_model(k, s).unwrap();
        let st = frey::standard_invariants(k, &w);
        let lhs = k.sub(&pw(k, &st.c4, 3), &k.mul(&st.c6, &st.c6));
        assert_eq!(lhs, k.scale(&st.delta, &frey::rational(1728, 1)), "{}", f.label);

        let inv = frey::invariants(k, s).unwrap().concrete.unwrap();
        let (delta, c4) = closed_forms(k, s, p as i64);
        assert_eq!(inv.delta, delta, "{}", f.label);
        assert_eq!(inv.c4, c4, "{}", f.label);
        per_family[matches!(s.family, Family::PPTwo) as usize] += 1;
    }
    assert!(per_family.iter().all(|&n| n >= 15), "{per_family:?}");
}

#[test]
fn required_fixtures_are_present() {
    let fx = frey_fixtures();
    let has = |pred: &dyn Fn(&support::fixtures::Fixture) -> bool| fx.iter().any(pred);
    for p in [3, 5, 7] {
        assert!(has(&|f| {
            f.field.degree == 1
                && f.spec.family == Family::TwoPowerTwist { r: 1 }
                && f.spec.p == Exponent::Concrete(p)
                && [&f.spec.a, &f.spec.b, &f.spec.c].iter().all(|x| **x == f.field.one())
        }));
    }
    for p in [3, 5] {
        assert!(has(&|f| {
            f.field.defining_poly.to_string() == "x^2 - 2"
                && f.spec.family == Family::PPTwo
                && f.spec.p == Exponent::Concrete(p)
                && f.spec.a == f.field.one()
                && f.spec.b == f.field.one()
                && f.spec.c == f.field.theta()
        }));
    }
}

#[test]
fn tampered_invariants_are_caught() {
    for f in frey_fixtures().iter().take(20) {
        let (k, s) = (&f.field, &f.spec);
        let good = frey::invariants(k, s).unwrap().concrete.unwrap();
        let bumped = |x: &FieldElement| k.add(x, &k.one());
        let variants = [
            ConcreteInvariants { delta: bumped(&good.delta), ..good.clone() },
            ConcreteInvariants { c4: bumped(&good.c4), ..good.clone() },
            ConcreteInvariants { j: good.j.as_ref().map(bumped), ..good.clone() },
        ];
        for v in &variants {
            assert!(!frey::cross_check_against(k, s, v).unwrap().all(), "{}", f.label);
        }
    }
}

#[test]
fn relation_is_enforced() {
    let k = NumberField::rationals();
    let spec = FreySpec {
        family: Family::TwoPowerTwist { r: 2 },
        a: k.from_int(1),
        b: k.from_int(1),
        c: k.from_int(1),
        p: Exponent::Concrete(3),
    };
    assert_eq!(frey::invariants(&k, &spec).unwrap_err(), Error::RelationViolated);
    let symbolic = FreySpec { p: Exponent::Symbolic, ..spec };
    assert!(frey::invariants(&k, &symbolic).unwrap().concrete.is_none());
}

#[test]
fn trivial_solution_predicates() {
    let k = NumberField::from_int_coeffs(&[-2, 0, 1]).unwrap();
    let one = k.one();
    assert!(frey::is_trivial_2r(&k, &one, &one, &one));
    assert!(frey::is_trivial_2r(&k, &one, &k.neg(&one), &k.zero()));
    assert!(!frey::is_trivial_2r(&k, &k.from_int(3), &k.from_int(-1), &one));
    assert!(frey::is_trivial_pp2(&k, &one, &one, &k.theta()));
    assert!(frey::is_trivial_pp2(&k, &one, &one, &k.neg(&k.theta())));
    assert!(!frey::is_trivial_pp2(&k, &one, &k.from_int(2), &k.from_int(3)));
}
