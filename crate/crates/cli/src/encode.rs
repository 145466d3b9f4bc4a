//! Canonical JSON encodings of core values.
//!
//! Objects are `serde_json::Map`, which keeps keys sorted. Integers that fit
//! in 53 bits are numbers, larger ones decimal strings; rationals are always
//! strings `"n/d"` (or `"n"` when integral).

use fermat_core::criteria::{Applies, Caveat, HypothesisStatus, SolutionWitness, Verdict, Witness};
use fermat_core::frey::{ConductorFactor, ExponentRange, ReductionReport};
use fermat_core::ideal::{Splitting, SplittingType};
use fermat_core::{FieldElement, NumberField, PrimeIdeal, Rational, ValuationForm, ZPoly};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Map, Value};

const SAFE: i64 = (1 << 53) - 1;

pub fn int(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) if (-SAFE..=SAFE).contains(&v) => json!(v),
        _ => Value::String(n.to_string()),
    }
}

pub fn rat(q: &Rational) -> Value {
    if q.denom().is_one() {
        Value::String(q.numer().to_string())
    } else {
        Value::String(format!("{}/{}", q.numer(), q.denom()))
    }
}

/// Inverse of [`rat`].
pub fn parse_rat(v: &Value) -> Option<Rational> {
    let s = v.as_str()?;
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            (d != BigInt::from(0)).then(|| Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

pub fn elem(x: &FieldElement) -> Value {
    json!({
        "coords": x.coords.iter().map(rat).collect::<Vec<_>>(),
        "text": x.to_string(),
    })
}

pub fn zpoly(f: &ZPoly) -> Value {
    json!({
        "coeffs": f.coeffs().iter().map(int).collect::<Vec<_>>(),
        "text": f.to_string(),
    })
}

pub fn prime(p: &PrimeIdeal) -> Value {
    let mut m = Map::new();
    m.insert("q".into(), json!(p.q));
    m.insert("e".into(), json!(p.e));
    m.insert("f".into(), json!(p.f));
    m.insert("label".into(), json!(p.label()));
    m.insert("generator".into(), json!(p.gen_poly.to_zpoly().to_string()));
    if let Some(r) = p.residue_root() {
        m.insert("residue_root".into(), json!(r));
    }
    Value::Object(m)
}

pub fn primes(ps: &[PrimeIdeal]) -> Value {
    Value::Array(ps.iter().map(prime).collect())
}

pub fn valform(f: &ValuationForm) -> Value {
    json!({
        "alpha": f.alpha,
        "beta": f.beta,
        "threshold": f.threshold(),
        "text": f.to_string(),
    })
}

pub fn splitting_kind(k: &SplittingType) -> &'static str {
    match k {
        SplittingType::Inert => "inert",
        SplittingType::TotallyRamified => "totally_ramified",
        SplittingType::TotallySplit => "totally_split",
        SplittingType::Mixed(_) => "mixed",
    }
}

pub fn splitting(s: &Splitting) -> Value {
    json!({
        "q": s.q,
        "type": splitting_kind(&s.kind),
        "pattern": s.pattern.iter().map(|(e, f)| json!([e, f])).collect::<Vec<_>>(),
        "inert": s.inert,
        "totally_ramified": s.totally_ramified,
        "totally_split": s.totally_split,
        "primes": primes(&s.primes),
    })
}

pub fn field(k: &NumberField) -> Value {
    json!({
        "poly": zpoly(&k.defining_poly),
        "degree": k.degree,
        "signature": [k.signature.0, k.signature.1],
        "poly_disc": int(&k.poly_disc),
        "field_disc": k.field_disc.as_ref().map(int),
        "real_roots": k.real_roots.iter().map(|iv| json!([rat(&iv.lo), rat(&iv.hi)])).collect::<Vec<_>>(),
    })
}

pub fn applies(a: Applies) -> &'static str {
    match a {
        Applies::Yes => "yes",
        Applies::No => "no",
        Applies::Unknown => "unknown",
    }
}

pub fn caveat(c: &Caveat) -> Value {
    match c {
        Caveat::None => Value::Null,
        Caveat::BoundedSearch { bound } => json!({"kind": "bounded_search", "bound": bound}),
        Caveat::AssumedIfNeeded { note } => json!({"kind": "assumed_if_needed", "note": note}),
        Caveat::Undetermined { diagnostic } => json!({"kind": "undetermined", "diagnostic": diagnostic}),
    }
}

pub fn solution_witness(w: &SolutionWitness) -> Value {
    json!({
        "lambda": elem(&w.lambda),
        "mu": elem(&w.mu),
        "prime": w.prime.as_ref().map(prime),
        "v_lambda": w.v_lambda,
        "v_mu": w.v_mu,
        "v_two": w.v_two,
    })
}

pub fn witness(w: &Witness) -> Value {
    match w {
        Witness::None => Value::Null,
        Witness::Degree { n } => json!({"kind": "degree", "n": n}),
        Witness::Signature { r1, r2 } => json!({"kind": "signature", "r1": r1, "r2": r2}),
        Witness::Gcd { a, b, gcd } => json!({"kind": "gcd", "a": a, "b": b, "gcd": gcd}),
        Witness::Splitting(s) => {
            let mut v = splitting(s);
            v["kind"] = json!("splitting");
            v
        }
        Witness::ClassNumber { h, h_plus } => json!({"kind": "class_number", "h": h, "h_plus": h_plus}),
        Witness::Solution(s) => {
            let mut v = solution_witness(s);
            v["kind"] = json!("solution");
            v
        }
        Witness::Search { solutions, candidates, bound } => json!({
            "kind": "search", "solutions": solutions, "candidates": candidates, "bound": bound,
        }),
        Witness::Extension { a, poly, s_l } => json!({
            "kind": "extension", "a": elem(a), "poly": zpoly(poly), "s_l": primes(s_l),
        }),
        Witness::Selmer { representatives } => json!({
            "kind": "selmer", "representatives": representatives.iter().map(elem).collect::<Vec<_>>(),
        }),
    }
}

pub fn hypothesis(h: &HypothesisStatus) -> Value {
    json!({
        "name": h.name,
        "holds": h.holds,
        "witness": witness(&h.witness),
        "caveat": caveat(&h.caveat),
    })
}

pub fn verdict(v: &Verdict) -> Value {
    json!({
        "theorem": v.theorem.code(),
        "field_poly": zpoly(&v.field_poly),
        "r": v.r,
        "l": v.l,
        "applies": applies(v.applies),
        "hypotheses": v.hypotheses.iter().map(hypothesis).collect::<Vec<_>>(),
        "failures": v.failures().count(),
        "conclusion": v.conclusion_text,
        "notes": v.notes,
    })
}

pub fn range(r: &ExponentRange) -> Value {
    match r {
        ExponentRange::Exact(n) => json!({"exact": n}),
        ExponentRange::AtMost(n) => json!({"at_most": n}),
    }
}

pub fn conductor_factor(c: &ConductorFactor) -> Value {
    json!({"prime": prime(&c.prime), "exponent": range(&c.exponent)})
}

pub fn reduction(r: &ReductionReport) -> Value {
    json!({
        "prime": prime(&r.prime),
        "v_delta": valform(&r.v_delta),
        "v_c4": r.v_c4.as_ref().map(valform),
        "v_j": r.v_j.as_ref().map(valform),
        "kind": r.kind.to_string(),
        "flag_p_in_inertia": r.flag_p_in_inertia,
        "flag_3_in_inertia": r.flag_3_in_inertia,
        "p_threshold": r.p_threshold,
    })
}

/// Indented, key-sorted encoding with a trailing newline.
pub fn emit(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
