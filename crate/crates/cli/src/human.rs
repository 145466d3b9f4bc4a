//! Plain-text rendering: aligned key/value blocks and column tables.

use fermat_core::criteria::{Caveat, HypothesisStatus, Verdict, Witness};
use fermat_core::ideal::Splitting;
use fermat_core::{NumberField, PrimeIdeal};

use crate::encode;

#[derive(Default)]
pub struct Text {
    out: String,
}

impl Text {
    pub fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    pub fn blank(&mut self) {
        self.out.push('\n');
    }

    /// Keys padded to a common width.
    pub fn pairs(&mut self, rows: &[(&str, String)]) {
        let w = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        for (k, v) in rows {
            self.line(format!("{k:<w$}  {v}"));
        }
    }

    /// Columns padded to their widest cell; the header is underlined.
    pub fn table(&mut self, header: &[&str], rows: &[Vec<String>]) {
        let mut w: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
        for r in rows {
            for (i, c) in r.iter().enumerate() {
                w[i] = w[i].max(c.chars().count());
            }
        }
        let fmt_row = |cells: Vec<&str>| {
            let last = cells.len() - 1;
            cells
                .iter()
                .enumerate()
                .map(|(i, c)| if i == last { c.to_string() } else { format!("{c:<width$}", width = w[i]) })
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        self.line(format!("  {}", fmt_row(header.to_vec())));
        let rules: Vec<String> = w.iter().map(|&n| "-".repeat(n)).collect();
        self.line(format!("  {}", fmt_row(rules.iter().map(String::as_str).collect())));
        for r in rows {
            self.line(format!("  {}", fmt_row(r.iter().map(String::as_str).collect())));
        }
    }

    pub fn finish(self) -> String {
        self.out
    }
}

pub fn field_summary(k: &NumberField) -> String {
    let disc = match &k.field_disc {
        Some(d) => format!("disc {d}"),
        None => format!("poly disc {}", k.poly_disc),
    };
    format!(
        "{}  (degree {}, signature ({}, {}), {disc})",
        k.defining_poly, k.degree, k.signature.0, k.signature.1
    )
}

pub fn prime(p: &PrimeIdeal) -> String {
    let mut s = format!("{} e={} f={}", p.label(), p.e, p.f);
    if let Some(r) = p.residue_root() {
        s.push_str(&format!(" root {r}"));
    }
    s
}

pub fn primes(ps: &[PrimeIdeal]) -> String {
    if ps.is_empty() {
        "(none)".into()
    } else {
        ps.iter().map(prime).collect::<Vec<_>>().join("; ")
    }
}

pub fn splitting(s: &Splitting) -> String {
    let pattern = s.pattern.iter().map(|(e, f)| format!("({e},{f})")).collect::<Vec<_>>().join(" ");
    let roots: Vec<String> = s
        .primes
        .iter()
        .filter_map(|p| p.residue_root().map(|r| if p.e > 1 { format!("{r} (e={})", p.e) } else { r.to_string() }))
        .collect();
    let mut out = format!("{}: {}, (e,f) = {pattern}", s.q, encode::splitting_kind(&s.kind));
    if !roots.is_empty() {
        out.push_str(&format!(", roots mod {}: {}", s.q, roots.join(", ")));
    }
    out
}

fn witness(w: &Witness) -> String {
    match w {
        Witness::None => String::new(),
        Witness::Degree { n } => format!("n = {n}"),
        Witness::Signature { r1, r2 } => format!("signature ({r1}, {r2})"),
        Witness::Gcd { a, b, gcd } => format!("gcd({a}, {b}) = {gcd}"),
        Witness::Splitting(s) => splitting(s),
        Witness::ClassNumber { h, h_plus } => format!("h = {h}, h+ = {h_plus}"),
        Witness::Solution(s) => {
            let at = s.prime.as_ref().map(|p| format!(" at {}", p.label())).unwrap_or_default();
            format!(
                "λ = {}, μ = {}{at}: v(λ) = {}, v(μ) = {}, v(2) = {}",
                s.lambda, s.mu, s.v_lambda, s.v_mu, s.v_two
            )
        }
        Witness::Search { solutions, candidates, bound } => {
            format!("{solutions} solutions among {candidates} candidates, box {bound}")
        }
        Witness::Extension { a, poly, s_l } => format!("K(√({a})) = K[x]/({poly}), |S_L| = {}", s_l.len()),
        Witness::Selmer { representatives } => {
            representatives.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ")
        }
    }
}

fn caveat(c: &Caveat) -> String {
    match c {
        Caveat::None => String::new(),
        Caveat::BoundedSearch { bound } => format!("bounded search ({bound})"),
        Caveat::AssumedIfNeeded { note } => format!("assumed if needed: {note}"),
        Caveat::Undetermined { diagnostic } => format!("undetermined: {diagnostic}"),
    }
}

fn holds(h: &HypothesisStatus) -> &'static str {
    match (&h.caveat, h.holds) {
        (Caveat::Undetermined { .. }, _) => "?",
        (_, true) => "yes",
        (_, false) => "NO",
    }
}

pub fn verdict(t: &mut Text, v: &Verdict) {
    let applies = match v.applies {
        fermat_core::criteria::Applies::Yes => "Yes",
        fermat_core::criteria::Applies::No => "No",
        fermat_core::criteria::Applies::Unknown => "Unknown (bounded)",
    };
    let mut rows = vec![("criterion", v.theorem.code().to_string()), ("applies", applies.to_string())];
    if let Some(r) = v.r {
        rows.push(("r", r.to_string()));
    }
    if let Some(l) = v.l {
        rows.push(("l", l.to_string()));
    }
    t.pairs(&rows);
    t.blank();
    let table: Vec<Vec<String>> = v
        .hypotheses
        .iter()
        .map(|h| {
            let mut detail = witness(&h.witness);
            let c = caveat(&h.caveat);
            if !c.is_empty() {
                detail = if detail.is_empty() { c } else { format!("{detail} [{c}]") };
            }
            vec![h.name.clone(), holds(h).to_string(), detail]
        })
        .collect();
    t.table(&["hypothesis", "holds", "witness"], &table);
    for n in &v.notes {
        t.blank();
        t.line(format!("note: {n}"));
    }
    t.blank();
    t.line(format!("conclusion when the hypotheses hold: {}", v.conclusion_text));
}
