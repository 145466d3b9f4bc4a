mod support;

use fermat_core::ideal;
use fermat_core::NumberField;
use support::oracle::{self, Split};

const DS: [i64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];
const QS: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn classify(pattern: &[(u32, u32)]) -> Split {
    match pattern {
        [(2, 1)] => Split::Ramified,
        [(1, 1), (1, 1)] => Split::Split,
        [(1, 2)] => Split::Inert,
        other => panic!("not a quadratic pattern: {other:?}"),
    }
}

#[test]
fn quadratic_splitting_matches_congruences() {
    let mut cases = 0;
    for d in DS {
        let k = NumberField::from_int_coeffs(&oracle::clean_poly(d)).unwrap();
        for q in QS {
            let s = ideal::splitting(&k, q).unwrap();
            assert_eq!(
                classify(&s.pattern),
                oracle::quadratic_split(d, q as i64),
                "q = {q} in Q(sqrt {d})"
            );
            assert_eq!(s.inert, classify(&s.pattern) == Split::Inert);
            assert_eq!(s.totally_ramified, classify(&s.pattern) == Split::Ramified);
            assert_eq!(s.totally_split, classify(&s.pattern) == Split::Split);
            cases += 1;
        }
    }
    assert_eq!(cases, 48);
}

#[test]
fn oracle_sanity() {
    // quadratic reciprocity spot checks
    assert_eq!(oracle::legendre(2, 7), 1);
    assert_eq!(oracle::legendre(3, 7), -1);
    assert_eq!(oracle::quadratic_split(5, 2), Split::Inert);
    assert_eq!(oracle::quadratic_split(17, 2), Split::Split);
    assert_eq!(oracle::quadratic_split(3, 2), Split::Ramified);
    assert_eq!(oracle::quadratic_split(13, 3), Split::Split);
}
