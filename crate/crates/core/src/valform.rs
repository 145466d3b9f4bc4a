//! Affine forms `α + β·p` in a symbolic prime exponent p.

use std::fmt;

/// The value `alpha + beta * p` for a prime p not yet fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ValuationForm {
    pub alpha: i64,
    pub beta: i64,
}

impl ValuationForm {
    pub const ZERO: ValuationForm = ValuationForm { alpha: 0, beta: 0 };

    pub fn new(alpha: i64, beta: i64) -> Self {
        ValuationForm { alpha, beta }
    }

    pub fn constant(alpha: i64) -> Self {
        ValuationForm { alpha, beta: 0 }
    }

    pub fn eval(&self, p: u64) -> i128 {
        self.alpha as i128 + self.beta as i128 * p as i128
    }

    pub fn add(&self, o: &Self) -> Self {
        ValuationForm::new(self.alpha + o.alpha, self.beta + o.beta)
    }

    pub fn sub(&self, o: &Self) -> Self {
        ValuationForm::new(self.alpha - o.alpha, self.beta - o.beta)
    }

    pub fn scale(&self, k: i64) -> Self {
        ValuationForm::new(self.alpha * k, self.beta * k)
    }

    /// Primes above this make both [`Self::p_divides`] and [`Self::sign`]
    /// exact statements about the evaluated value.
    pub fn threshold(&self) -> u64 {
        self.alpha.unsigned_abs()
    }

    /// Threshold for the sign rule alone: `|α| / max(1, |β|)`, rounded down.
    pub fn sign_threshold(&self) -> u64 {
        self.alpha.unsigned_abs() / self.beta.unsigned_abs().max(1)
    }

    /// Whether p divides the value, for p > threshold.
    pub fn p_divides(&self) -> bool {
        self.alpha == 0
    }

    /// Sign of the value for p beyond the sign threshold.
    pub fn sign(&self) -> i8 {
        let s = if self.beta != 0 { self.beta } else { self.alpha };
        s.signum() as i8
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }
}

impl fmt::Display for ValuationForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.alpha, self.beta) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}p"),
            (a, b) if b < 0 => write!(f, "{a} - {}p", -b),
            (a, b) => write!(f, "{a} + {b}p"),
        }
    }
}
