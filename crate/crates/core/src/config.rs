//! Search bounds and switches shared by the solvers and the criteria.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Exponent box `|e_i| <= B` for S-unit enumeration.
    pub sunit_exponent_bound: u32,
    /// Coordinate bound for unit and generator searches in the power basis.
    pub unit_height_bound: u64,
    /// Largest rational prime examined when choosing class representatives.
    pub class_enum_bound: u64,
    /// Largest l examined by the ramified-prime scan.
    pub l_max: u64,
    /// Limit on S-unit candidates examined in one search.
    pub max_candidates: u64,
    /// Class number supplied by the user for fields where it is not computed.
    pub user_class_number: Option<u64>,
    /// Use O_K itself for the principal class instead of a prime ideal.
    pub allow_trivial_ideal: bool,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            sunit_exponent_bound: 8,
            unit_height_bound: 1_000_000,
            class_enum_bound: 10_000,
            l_max: 1_000,
            max_candidates: 50_000_000,
            user_class_number: None,
            allow_trivial_ideal: false,
        }
    }
}

/// Coordinate shells actually scanned by element searches never exceed
/// this, whatever `unit_height_bound` says.
pub const PRACTICAL_HEIGHT_CAP: u64 = 40;
