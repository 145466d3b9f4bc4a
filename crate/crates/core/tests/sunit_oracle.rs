mod support;

use std::collections::BTreeSet;

use fermat_core::config::Bounds;
use fermat_core::frey;
use fermat_core::ideal;
use fermat_core::sunit::{solve_sunit, SUnitSearch};
use fermat_core::NumberField;
use support::oracle::{self, pair, Quad, QuadBox};

fn bounds(b: u32) -> Bounds {
    Bounds { sunit_exponent_bound: b, ..Bounds::default() }
}

fn solve(k: &NumberField, b: u32) -> SUnitSearch {
    let s = ideal::s_k(k).unwrap();
    solve_sunit(k, &s, &bounds(b)).unwrap()
}

fn as_set(search: &SUnitSearch) -> BTreeSet<(Quad, Quad)> {
    search
        .solutions
        .iter()
        .map(|s| (pair(&s.lambda.coords), pair(&s.mu.coords)))
        .collect()
}

fn compare(k: &NumberField, oracle: &QuadBox) {
    let got = solve(k, oracle.bound as u32);
    let want = oracle.solutions();
    assert_eq!(got.solutions.len(), want.len(), "duplicates or misses for {}", k.defining_poly);
    assert_eq!(as_set(&got), want, "solution sets differ for {}", k.defining_poly);
}

#[test]
fn rationals_match_oracle() {
    let k = NumberField::rationals();
    let want: BTreeSet<_> = [(-1, 2), (2, -1)]
        .iter()
        .map(|&(l, m)| (Quad::new(l, 0), Quad::new(m, 0)))
        .chain([(
            Quad { a: oracle::q(1) / oracle::q(2), b: oracle::q(0) },
            Quad { a: oracle::q(1) / oracle::q(2), b: oracle::q(0) },
        )])
        .collect();
    assert_eq!(oracle::rational_box(8).solutions(), want);
    compare(&k, &oracle::rational_box(8));
}

#[test]
fn gaussian_matches_oracle() {
    let k = NumberField::from_int_coeffs(&[1, 0, 1]).unwrap();
    for b in [0, 1, 3, 6] {
        compare(&k, &oracle::gaussian_box(b));
    }
}

#[test]
fn sqrt2_matches_oracle() {
    let k = NumberField::from_int_coeffs(&[-2, 0, 1]).unwrap();
    for b in [0, 2, 6] {
        compare(&k, &oracle::sqrt2_box(b));
    }
}

#[test]
fn solutions_come_in_symmetric_pairs_and_grow_with_the_box() {
    let k = NumberField::from_int_coeffs(&[-2, 0, 1]).unwrap();
    let mut prev: BTreeSet<(Quad, Quad)> = BTreeSet::new();
    for b in 0..=5 {
        let got = solve(&k, b);
        let set = as_set(&got);
        for (l, m) in &set {
            assert!(set.contains(&(m.clone(), l.clone())));
        }
        for (i, s) in got.solutions.iter().enumerate() {
            let p = &got.solutions[s.partner];
            assert_eq!((&p.lambda, &p.mu), (&s.mu, &s.lambda));
            assert_eq!(got.solutions[s.partner].partner, i);
        }
        assert!(prev.is_subset(&set), "box {b} lost solutions");
        prev = set;
    }
}

/// The valuation facts the proofs use, on every solution and every P in S.
fn proof_chain(k: &NumberField, b: u32) -> usize {
    let got = solve(k, b);
    let two = k.from_int(2);
    let mut checked = 0;
    for sol in &got.solutions {
        for (i, p) in got.s.iter().enumerate() {
            let vl = ideal::valuation(k, &sol.lambda, p).unwrap();
            let vm = ideal::valuation(k, &sol.mu, p).unwrap();
            assert_eq!(sol.val_profile[i], (vl, vm), "stored profile disagrees with valuation()");
            let t = vl.abs().max(vm.abs());
            assert_eq!(sol.t_max[i], t as u64);
            let v2 = ideal::valuation(k, &two, p).unwrap();
            let vlm = vl + vm;
            if t > 0 {
                assert!(vlm == -2 * t || vlm == t, "v(λμ) = {vlm} with t = {t}");
            }
            let j = frey::j_from_lambda_mu(k, &sol.lambda, &sol.mu).unwrap();
            let vj = ideal::valuation(k, &j, p).unwrap();
            assert!(vj >= 8 * v2 - 2 * t, "v(j) = {vj} below 8v(2) - 2t");
            assert_eq!((vj - (8 * v2 - 2 * vlm)).rem_euclid(3), 0);
            checked += 1;
        }
    }
    checked
}

#[test]
fn proof_chain_valuations() {
    assert_eq!(proof_chain(&NumberField::rationals(), 8), 3);
    assert!(proof_chain(&NumberField::from_int_coeffs(&[1, 0, 1]).unwrap(), 6) > 0);
    assert!(proof_chain(&NumberField::from_int_coeffs(&[-2, 0, 1]).unwrap(), 6) > 0);
}
