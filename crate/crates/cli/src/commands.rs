//! One function per subcommand. Each returns the JSON result payload, the
//! caveats, the text rendering and the exit code.

use fermat_core::class::{self, ClassCompleteness};
use fermat_core::criteria::{self, Applies, Caveat, TheoremId, Verdict};
use fermat_core::frey::{self, Divisibility, Exponent, Family, FreySpec, ReductionReport};
use fermat_core::ideal;
use fermat_core::parse;
use fermat_core::selmer;
use fermat_core::sunit;
use fermat_core::units::{self, Completeness};
use fermat_core::{Error, NumberField, PrimeIdeal, Result, ValuationForm};
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::human::{self, Text};
use crate::encode;

pub struct Report {
    pub result: Value,
    pub caveats: Vec<Value>,
    pub text: Text,
    pub code: i32,
}

impl Report {
    fn data(result: Value, caveats: Vec<Value>, text: Text) -> Self {
        Report { result, caveats, text, code: 0 }
    }
}

pub fn exit_code(a: Applies) -> i32 {
    match a {
        Applies::Yes => 0,
        Applies::No => 2,
        Applies::Unknown => 3,
    }
}

fn caveat(kind: &str, detail: impl Into<String>) -> Value {
    json!({"kind": kind, "detail": detail.into()})
}

fn completeness(c: &Completeness) -> Value {
    match c {
        Completeness::Proven => json!("proven"),
        Completeness::BoundedSearch { height_bound } => json!({"bounded_search": height_bound}),
    }
}

pub fn field(k: &NumberField, cfg: &RunConfig) -> Result<Report> {
    let two = ideal::splitting(k, 2)?;
    let three = ideal::splitting(k, 3)?;
    let s_k = ideal::s_k(k)?;
    let u_k = ideal::u_k(k)?;
    let mut caveats = Vec::new();
    let mut t = Text::default();
    let mut rows = vec![
        ("field", human::field_summary(k)),
        ("2", human::splitting(&two)),
        ("3", human::splitting(&three)),
        ("S_K", human::primes(&s_k)),
        ("U_K", human::primes(&u_k)),
    ];
    let units = match units::fundamental_units(k, cfg.bounds.unit_height_bound) {
        Ok(u) => {
            if let Completeness::BoundedSearch { height_bound } = u.completeness {
                caveats.push(caveat("bounded_search", format!("units from a height-{height_bound} search")));
            }
            let list: Vec<String> = u.fundamental_units.iter().map(|e| e.to_string()).collect();
            rows.push(("units", format!("rank {}, torsion order {}, [{}]", u.rank, u.torsion_order, list.join(", "))));
            let class = match class::class_data_with_units(k, &u, &cfg.bounds) {
                Ok(c) => {
                    rows.push(("class number", format!("h = {}, h+ = {}", c.h, c.h_plus)));
                    let how = match c.completeness {
                        ClassCompleteness::Proven { prime_bound } => json!({"proven_to_prime": prime_bound}),
                        ClassCompleteness::UserSupplied => json!("user_supplied"),
                    };
                    json!({"h": c.h, "h_plus": c.h_plus, "completeness": how})
                }
                Err(e) => {
                    rows.push(("class number", format!("not computed: {e}")));
                    caveats.push(caveat("undetermined", format!("class number: {e}")));
                    Value::Null
                }
            };
            json!({
                "rank": u.rank,
                "fundamental": u.fundamental_units.iter().map(encode::elem).collect::<Vec<_>>(),
                "torsion_generator": encode::elem(&u.torsion_generator),
                "torsion_order": u.torsion_order,
                "completeness": completeness(&u.completeness),
                "class": class,
            })
        }
        Err(e) => {
            rows.push(("units", format!("not computed: {e}")));
            caveats.push(caveat("undetermined", format!("units: {e}")));
            Value::Null
        }
    };
    t.pairs(&rows);
    let result = json!({
        "splitting_2": encode::splitting(&two),
        "splitting_3": encode::splitting(&three),
        "s_k": encode::primes(&s_k),
        "u_k": encode::primes(&u_k),
        "units": units,
    });
    Ok(Report::data(result, caveats, t))
}

pub fn sunit(k: &NumberField, cfg: &RunConfig) -> Result<Report> {
    let s = ideal::s_k(k)?;
    let search = sunit::solve_sunit(k, &s, &cfg.bounds)?;
    let bound = cfg.bounds.sunit_exponent_bound;
    let mut caveats = vec![caveat("bounded_search", format!("exponent box |e_i| <= {bound}"))];
    if let Completeness::BoundedSearch { height_bound } = search.unit_completeness {
        caveats.push(caveat("bounded_search", format!("units from a height-{height_bound} search")));
    }
    if search.index_rejections > 0 {
        caveats.push(caveat(
            "undetermined",
            format!("{} candidates undecided at primes dividing the index", search.index_rejections),
        ));
    }
    let mut t = Text::default();
    t.pairs(&[
        ("field", human::field_summary(k)),
        ("S", human::primes(&s)),
        ("box", format!("|e_i| <= {bound}, {} candidates", search.candidates)),
        ("solutions", search.solutions.len().to_string()),
    ]);
    if !search.solutions.is_empty() {
        t.blank();
        let rows: Vec<Vec<String>> = search
            .solutions
            .iter()
            .enumerate()
            .map(|(i, sol)| {
                let prof = sol.val_profile.iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(" ");
                vec![i.to_string(), sol.lambda.to_string(), sol.mu.to_string(), prof, sol.partner.to_string()]
            })
            .collect();
        t.table(&["#", "λ", "μ", "(v(λ),v(μ)) over S", "partner"], &rows);
    }
    let result = json!({
        "s": encode::primes(&s),
        "bound": bound,
        "candidates": search.candidates,
        "index_rejections": search.index_rejections,
        "completeness": completeness(&search.completeness),
        "unit_completeness": completeness(&search.unit_completeness),
        "solutions": search.solutions.iter().map(|sol| json!({
            "lambda": encode::elem(&sol.lambda),
            "mu": encode::elem(&sol.mu),
            "val_profile": sol.val_profile.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
            "t_max": sol.t_max,
            "partner": sol.partner,
        })).collect::<Vec<_>>(),
    });
    Ok(Report::data(result, caveats, t))
}

pub fn selmer(k: &NumberField, cfg: &RunConfig) -> Result<Report> {
    let s = ideal::s_k(k)?;
    let g = selmer::selmer_group(k, &s, 2, &cfg.bounds)?;
    let mut caveats = Vec::new();
    if let Some(c) = &g.class_caveat {
        caveats.push(caveat("class_group", c.clone()));
    }
    let mut t = Text::default();
    let basis: Vec<String> = g.basis.iter().map(|b| b.to_string()).collect();
    t.pairs(&[
        ("field", human::field_summary(k)),
        ("S", human::primes(&s)),
        ("basis", format!("[{}]", basis.join(", "))),
        ("order", format!("2^{} = {}", g.basis_size, g.representatives.len())),
    ]);
    t.blank();
    let rows: Vec<Vec<String>> = g
        .representatives
        .iter()
        .enumerate()
        .map(|(i, r)| vec![i.to_string(), r.to_string()])
        .collect();
    t.table(&["#", "representative"], &rows);
    if let Some(c) = &g.class_caveat {
        t.blank();
        t.line(format!("caveat: {c}"));
    }
    let result = json!({
        "m": g.m,
        "s": encode::primes(&g.s),
        "basis": g.basis.iter().map(encode::elem).collect::<Vec<_>>(),
        "basis_size": g.basis_size,
        "representatives": g.representatives.iter().map(encode::elem).collect::<Vec<_>>(),
        "class_caveat": g.class_caveat,
    });
    Ok(Report::data(result, caveats, t))
}

pub struct FreyArgs<'a> {
    pub family: Family,
    pub a: &'a str,
    pub b: &'a str,
    pub c: &'a str,
    pub p: Exponent,
    pub prime: Option<u64>,
}

pub fn frey(k: &NumberField, args: &FreyArgs) -> Result<Report> {
    let spec = FreySpec {
        family: args.family,
        a: parse::parse_element(k, args.a)?,
        b: parse::parse_element(k, args.b)?,
        c: parse::parse_element(k, args.c)?,
        p: args.p,
    };
    let trivial = match args.family {
        Family::TwoPowerTwist { .. } => frey::is_trivial_2r(k, &spec.a, &spec.b, &spec.c),
        Family::PPTwo => frey::is_trivial_pp2(k, &spec.a, &spec.b, &spec.c),
    };
    let inv = frey::invariants(k, &spec)?;
    let mut caveats = Vec::new();
    let mut t = Text::default();
    let (family, r) = match args.family {
        Family::TwoPowerTwist { r } => ("2r", Some(r)),
        Family::PPTwo => ("pp2", None),
    };
    let p_text = match args.p {
        Exponent::Symbolic => "symbolic".to_string(),
        Exponent::Concrete(p) => p.to_string(),
    };
    let mut rows = vec![
        ("field", human::field_summary(k)),
        ("family", r.map_or(family.to_string(), |r| format!("{family} (r = {r})"))),
        ("(a, b, c)", format!("({}, {}, {})", spec.a, spec.b, spec.c)),
        ("p", p_text.clone()),
        ("trivial", trivial.to_string()),
        ("Δ", inv.delta_formula.clone()),
        ("c4", inv.c4_formula.clone()),
        ("j", inv.j_formula.clone()),
    ];
    let concrete = match &inv.concrete {
        None => {
            caveats.push(caveat("symbolic", "the defining relation is not checked for a symbolic exponent"));
            Value::Null
        }
        Some(ci) => {
            let model = frey::frey_model(k, &spec)?;
            let st = frey::standard_invariants(k, &model);
            let cc = frey::cross_check_against(k, &spec, ci)?;
            rows.push(("Δ value", ci.delta.to_string()));
            rows.push(("c4 value", ci.c4.to_string()));
            rows.push(("j value", ci.j.as_ref().map_or("undefined (Δ = 0)".into(), |j| j.to_string())));
            rows.push(("cross-check", if cc.all() { "all agree".into() } else { format!("{cc:?}") }));
            json!({
                "delta": encode::elem(&ci.delta),
                "c4": encode::elem(&ci.c4),
                "j": ci.j.as_ref().map(encode::elem),
                "alternate": encode::elem(&ci.alternate),
                "model": {
                    "a1": encode::elem(&model.a1), "a2": encode::elem(&model.a2), "a3": encode::elem(&model.a3),
                    "a4": encode::elem(&model.a4), "a6": encode::elem(&model.a6),
                },
                "standard": {
                    "b2": encode::elem(&st.b2), "b4": encode::elem(&st.b4), "b6": encode::elem(&st.b6),
                    "b8": encode::elem(&st.b8), "c4": encode::elem(&st.c4), "c6": encode::elem(&st.c6),
                    "delta": encode::elem(&st.delta), "j": st.j.as_ref().map(encode::elem),
                },
                "cross_check": {
                    "delta_matches": cc.delta_matches,
                    "c4_matches": cc.c4_matches,
                    "j_matches": cc.j_matches,
                    "alternate_matches": cc.alternate_matches,
                    "identity_holds": cc.identity_holds,
                    "all": cc.all(),
                },
            })
        }
    };
    t.pairs(&rows);

    let profile = |pr: &PrimeIdeal| -> Result<ReductionReport> {
        let mut v = [0u32; 3];
        for (slot, x) in v.iter_mut().zip([&spec.a, &spec.b, &spec.c]) {
            let val = ideal::valuation(k, x, pr)?;
            *slot = u32::try_from(val)
                .map_err(|_| Error::Unsupported(format!("a, b, c must be integral at {}", pr.label())))?;
        }
        frey::valuation_profile(args.family, pr, Divisibility { va: v[0], vb: v[1], vc: v[2] })
    };
    let mut profiles = Vec::new();
    if let Some(q) = args.prime {
        for pr in ideal::factor_rational_prime(k, q)? {
            let res = profile(&pr);
            if let Err(e) = &res {
                caveats.push(caveat("undetermined", format!("reduction at {}: {e}", pr.label())));
            }
            profiles.push((pr, res));
        }
    }
    if !profiles.is_empty() {
        t.blank();
        let rows: Vec<Vec<String>> = profiles
            .iter()
            .map(|(pr, res)| match res {
                Ok(r) => {
                    let opt = |f: &Option<ValuationForm>| f.map_or("-".into(), |f| f.to_string());
                    vec![
                        pr.label(),
                        r.v_delta.to_string(),
                        opt(&r.v_c4),
                        opt(&r.v_j),
                        r.kind.to_string(),
                        format!("p | e(I): {}, 3 | e(I): {}", r.flag_p_in_inertia, r.flag_3_in_inertia),
                        format!("p > {}", r.p_threshold),
                    ]
                }
                Err(e) => vec![pr.label(), "-".into(), "-".into(), "-".into(), format!("not determined: {e}")],
            })
            .collect();
        t.table(&["prime", "v(Δ)", "v(c4)", "v(j)", "reduction", "inertia", "valid for"], &rows);
    }
    let reports: Vec<ReductionReport> = profiles.iter().filter_map(|(_, r)| r.as_ref().ok().cloned()).collect();
    let s_k = ideal::s_k(k)?;
    let odd: Vec<_> = reports.iter().filter(|r| r.prime.q != 2).cloned().collect();
    let cond = frey::conductor_shape(args.family, &s_k, None, &odd);
    let factors = |fs: &[frey::ConductorFactor]| fs.iter().map(encode::conductor_factor).collect::<Vec<_>>();
    let result = json!({
        "family": family,
        "r": r,
        "p": match args.p { Exponent::Symbolic => json!("symbolic"), Exponent::Concrete(p) => json!(p) },
        "a": encode::elem(&spec.a),
        "b": encode::elem(&spec.b),
        "c": encode::elem(&spec.c),
        "trivial": trivial,
        "formulas": {"delta": inv.delta_formula, "c4": inv.c4_formula, "j": inv.j_formula},
        "concrete": concrete,
        "reductions": profiles.iter().map(|(pr, res)| match res {
            Ok(r) => encode::reduction(r),
            Err(e) => json!({"prime": encode::prime(pr), "diagnostic": e.to_string()}),
        }).collect::<Vec<_>>(),
        "conductor": {
            "bounded": factors(&cond.bounded),
            "multiplicative": factors(&cond.multiplicative),
            "symbolic_tail": cond.symbolic_tail,
            "level_lowered": factors(&cond.level_lowered),
            "deleted": encode::primes(&cond.deleted),
        },
    });
    Ok(Report::data(result, caveats, t))
}

pub fn check(k: &NumberField, theorem: TheoremId, l: Option<u64>, cfg: &RunConfig) -> Result<Report> {
    let r = Some(cfg.r);
    let need_l = || l.ok_or_else(|| Error::Unsupported(format!("{} needs --l", theorem.code())));
    let v: Verdict = match theorem {
        TheoremId::SUnitBound => criteria::check_sunit_bound(k, &cfg.bounds)?,
        TheoremId::SUnitCongruence => criteria::check_sunit_congruence(k, &cfg.bounds, r)?,
        TheoremId::SUnitExact => criteria::check_sunit_exact(k, &cfg.bounds, r)?,
        TheoremId::SelmerBound => criteria::check_selmer_bound(k, &cfg.bounds)?,
        TheoremId::RamifiedInert => criteria::check_ramified_inert(k, need_l()?, r)?,
        TheoremId::InertSplit => criteria::check_inert_split(k, r)?,
        TheoremId::LocalRamified => criteria::check_local(k, 1, Some(need_l()?))?,
        TheoremId::LocalSplit => criteria::check_local(k, 2, None)?,
    };
    let mut caveats: Vec<Value> = Vec::new();
    for h in &v.hypotheses {
        let c = match &h.caveat {
            Caveat::None => continue,
            Caveat::BoundedSearch { bound } => caveat("bounded_search", format!("exponent box {bound}")),
            Caveat::AssumedIfNeeded { note } => caveat("assumed_if_needed", format!("{}: {note}", h.name)),
            Caveat::Undetermined { diagnostic } => caveat("undetermined", format!("{}: {diagnostic}", h.name)),
        };
        if !caveats.contains(&c) {
            caveats.push(c);
        }
    }
    let mut t = Text::default();
    t.pairs(&[("field", human::field_summary(k))]);
    human::verdict(&mut t, &v);
    Ok(Report {
        result: encode::verdict(&v),
        caveats,
        text: t,
        code: exit_code(v.applies),
    })
}

pub fn scan(k: &NumberField, cfg: &RunConfig) -> Result<Report> {
    let entries = criteria::scan_ramified_l(k, cfg.bounds.l_max);
    let mut t = Text::default();
    t.pairs(&[
        ("field", human::field_summary(k)),
        ("l range", format!("5 < l <= {}, l dividing the discriminant", cfg.bounds.l_max)),
    ]);
    t.blank();
    let rows: Vec<Vec<String>> = entries
        .iter()
        .map(|e| match (&e.verdict, &e.diagnostic) {
            (Some(v), _) => {
                let failed: Vec<&str> = v.failures().map(|h| h.name.as_str()).collect();
                vec![e.l.to_string(), encode::applies(v.applies).into(), failed.join("; ")]
            }
            (None, d) => vec![e.l.to_string(), "error".into(), d.clone().unwrap_or_default()],
        })
        .collect();
    t.table(&["l", "applies", "failing hypotheses"], &rows);
    let result = json!({
        "l_max": cfg.bounds.l_max,
        "entries": entries.iter().map(|e| json!({
            "l": e.l,
            "verdict": e.verdict.as_ref().map(encode::verdict),
            "diagnostic": e.diagnostic,
        })).collect::<Vec<_>>(),
    });
    Ok(Report::data(result, Vec::new(), t))
}
