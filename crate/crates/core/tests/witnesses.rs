use fermat_core::config::Bounds;
use fermat_core::criteria::{self, Applies, Verdict, Witness};
use fermat_core::ideal;
use fermat_core::NumberField;

fn bounds(b: u32) -> Bounds {
    Bounds { sunit_exponent_bound: b, ..Bounds::default() }
}

/// Recompute every solution witness with `valuation()`, in K or in the
/// extension named by the preceding Extension witness. Returns the count.
fn revalidate(k: &NumberField, v: &Verdict) -> usize {
    let mut current = k.clone();
    let mut n = 0;
    for h in &v.hypotheses {
        match &h.witness {
            Witness::Extension { poly, .. } => current = NumberField::new(poly.clone()).unwrap(),
            Witness::Search { .. } if h.name.contains("S_K") => current = k.clone(),
            Witness::Solution(w) => {
                let p = w.prime.as_ref().expect("solution witnesses name a prime");
                assert_eq!(ideal::valuation(&current, &w.lambda, p).unwrap(), w.v_lambda, "{}", h.name);
                assert_eq!(ideal::valuation(&current, &w.mu, p).unwrap(), w.v_mu, "{}", h.name);
                assert_eq!(ideal::valuation(&current, &current.from_int(2), p).unwrap(), w.v_two);
                assert_eq!(current.add(&w.lambda, &w.mu), current.one());
                n += 1;
            }
            _ => {}
        }
    }
    n
}

#[test]
fn rational_bound_witnesses() {
    let q = NumberField::rationals();
    for v in [
        criteria::check_sunit_bound(&q, &bounds(8)).unwrap(),
        criteria::check_sunit_exact(&q, &bounds(8), Some(2)).unwrap(),
    ] {
        assert_eq!(v.applies, Applies::Unknown);
        assert_eq!(v.failures().count(), 0);
        assert_eq!(revalidate(&q, &v), 3);
        for h in &v.hypotheses {
            if let Witness::Solution(w) = &h.witness {
                assert_eq!(w.v_lambda.abs().max(w.v_mu.abs()), 1);
                assert_eq!(w.v_two, 1);
            }
        }
    }
}

#[test]
fn quadratic_witnesses() {
    let k = NumberField::from_int_coeffs(&[-2, 0, 1]).unwrap();
    let v = criteria::check_sunit_congruence(&k, &bounds(4), Some(3)).unwrap();
    assert!(revalidate(&k, &v) > 0);
    let v = criteria::check_sunit_bound(&k, &bounds(4)).unwrap();
    assert!(revalidate(&k, &v) > 0);
}

#[test]
fn selmer_pipeline_witnesses() {
    let q = NumberField::rationals();
    let v = criteria::check_selmer_bound(&q, &bounds(6)).unwrap();
    let exts = v.hypotheses.iter().filter(|h| matches!(h.witness, Witness::Extension { .. })).count();
    assert_eq!(exts, 3);
    assert!(revalidate(&q, &v) > 3);
}

#[test]
fn refuting_solution_is_reported() {
    let q = NumberField::rationals();
    let s = ideal::s_k(&q).unwrap();
    let sol = fermat_core::sunit::SUnitSolution::from_pair(&q, &s, q.from_int(32), q.from_int(-31)).unwrap();
    let v = criteria::check_sunit_bound_on(&q, &s, &[sol], None, 8);
    assert_eq!(v.applies, Applies::No);
    assert_eq!(revalidate(&q, &v), 1);
}
