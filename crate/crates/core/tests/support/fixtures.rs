// Triples satisfying the defining relations, over Q, Q(√2) and Q(√5).

#![allow(dead_code)]

use fermat_core::frey::{rational, Exponent, Family, FreySpec};
use fermat_core::{FieldElement, NumberField};

pub struct Fixture {
    pub field: NumberField,
    pub spec: FreySpec,
    pub label: String,
}

fn fields() -> Vec<(NumberField, Vec<FieldElement>)> {
    let q = NumberField::rationals();
    let q_scalars = vec![q.one(), q.from_int(2), q.from_int(3), q.from_int(-1), q.from_rational(rational(1, 2))];
    let r2 = NumberField::from_int_coeffs(&[-2, 0, 1]).unwrap();
    let r2_scalars = vec![r2.one(), r2.theta(), r2.elem_i64(&[1, 1])];
    let r5 = NumberField::from_int_coeffs(&[-1, -1, 1]).unwrap();
    let r5_scalars = vec![r5.one(), r5.theta(), r5.elem_i64(&[2, -1])];
    vec![(q, q_scalars), (r2, r2_scalars), (r5, r5_scalars)]
}

fn pw(k: &NumberField, x: &FieldElement, e: i64) -> FieldElement {
    k.pow(x, e).unwrap()
}

pub fn frey_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    let mut push = |k: &NumberField, family, a: FieldElement, b, c, p: u32| {
        let label = format!("{family:?} over {} p={p} ({a}, {b}, {c})", k.defining_poly);
        out.push(Fixture {
            field: k.clone(),
            spec: FreySpec { family, a, b, c, p: Exponent::Concrete(p) },
            label,
        });
    };
    for (k, scalars) in fields() {
        for t in &scalars {
            // t(1, 1, 1) with r = 1
            for p in [3, 5, 7] {
                push(&k, Family::TwoPowerTwist { r: 1 }, t.clone(), t.clone(), t.clone(), p);
            }
            // (t^2, 2t^2, 3t^3) with p = 3
            let t2 = pw(&k, t, 2);
            let t3 = pw(&k, t, 3);
            push(&k, Family::PPTwo, t2.clone(), k.scale(&t2, &rational(2, 1)), k.scale(&t3, &rational(3, 1)), 3);
        }
        let two = k.from_int(2);
        for p in [3u32, 5] {
            // (2, 2, 1) with r = p + 1
            push(&k, Family::TwoPowerTwist { r: p + 1 }, two.clone(), two.clone(), k.one(), p);
        }
        for p in [3u32, 5, 7] {
            // 2^p + 2^p = (2^((p+1)/2))^2
            push(&k, Family::PPTwo, two.clone(), two.clone(), pw(&k, &two, (p as i64 + 1) / 2), p);
        }
    }
    let r2 = NumberField::from_int_coeffs(&[-2, 0, 1]).unwrap();
    for t in [r2.one(), r2.elem_i64(&[1, 1])] {
        for p in [3u32, 5] {
            // (t^2, t^2, t^p √2)
            let t2 = pw(&r2, &t, 2);
            let c = r2.mul(&pw(&r2, &t, p as i64), &r2.theta());
            push(&r2, Family::PPTwo, t2.clone(), t2, c, p);
        }
    }
    out
}
