//! The 2-Selmer group `K(S, 2)`: square classes of S-units.

use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::extension;
use crate::field::{FieldElement, NumberField};
use crate::ideal::PrimeIdeal;
use crate::sunit::SUnitBasis;

#[derive(Clone, Debug)]
pub struct SelmerGroup {
    pub s: Vec<PrimeIdeal>,
    pub m: u32,
    /// Independent generators mod squares, in the fixed order: the root of
    /// unity, the fundamental units, then π_P by norm.
    pub basis: Vec<FieldElement>,
    /// `2^k` representatives; index bit i selects `basis[i]`, so 1 comes first.
    pub representatives: Vec<FieldElement>,
    pub basis_size: usize,
    /// Set when the class group may contribute classes that are not S-units
    /// (even or unknown class number).
    pub class_caveat: Option<String>,
}

impl SelmerGroup {
    /// Index of the representative in the square class of x, if any.
    pub fn class_of(&self, field: &NumberField, x: &FieldElement) -> Option<usize> {
        self.representatives
            .iter()
            .position(|r| extension::is_square(field, &field.mul(x, r)))
    }
}

/// Square classes generated by the S-unit generators. Only m = 2 is supported.
pub fn selmer_group(field: &NumberField, s: &[PrimeIdeal], m: u32, bounds: &Bounds) -> Result<SelmerGroup> {
    if m != 2 {
        return Err(Error::Unsupported(format!("Selmer groups with m = {m}")));
    }
    let basis = SUnitBasis::new(field, s, bounds)?;
    let mut gens: Vec<FieldElement> = vec![basis.torsion_generator.clone()];
    gens.extend(basis.units.iter().cloned());
    gens.extend(basis.pi.iter().cloned());
    let mut reps = vec![field.one()];
    let mut chosen = Vec::new();
    for g in gens {
        // g is new mod squares iff g·r is a non-square for every current r
        if reps.iter().any(|r| extension::is_square(field, &field.mul(&g, r))) {
            continue;
        }
        let more: Vec<FieldElement> = reps.iter().map(|r| field.mul(r, &g)).collect();
        reps.extend(more);
        chosen.push(g);
    }
    let h = match field.degree {
        1 => Some(1),
        2 => Some(crate::quadratic::Quadratic::new(field)?.class_reps().len() as u64),
        _ => bounds.user_class_number,
    };
    let class_caveat = match h {
        Some(h) if h % 2 == 1 => None,
        Some(h) => Some(format!(
            "class number {h} is even; classes from the 2-torsion of the class group are not included"
        )),
        None => Some("class number unknown; classes from the class group may be missing".into()),
    };
    Ok(SelmerGroup {
        s: basis.s,
        m,
        basis_size: chosen.len(),
        basis: chosen,
        representatives: reps,
        class_caveat,
    })
}
