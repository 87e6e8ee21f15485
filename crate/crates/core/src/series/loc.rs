use std::fmt;

use num_traits::{One, Zero};

use crate::error::{SeriesError, SymError};
use crate::rational::Rational;
use crate::symcore::{e1_valuation, times_e1_power, Basis, Partition, SymFn};

/// `numerator / e1^e1_power` with the numerator in the `E` basis and the
/// power kept minimal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LocSymFn {
    numerator: SymFn,
    e1_power: u32,
}

impl LocSymFn {
    /// Converts the numerator to `E` if needed and cancels common factors of `e1`.
    pub fn new(numerator: SymFn, e1_power: u32) -> Self {
        let numerator = numerator.to_basis(Basis::E);
        if numerator.is_zero() {
            return Self::zero();
        }
        let cancel = e1_valuation(&numerator).min(e1_power);
        let numerator = if cancel == 0 {
            numerator
        } else {
            let drop = Partition::ones(cancel);
            SymFn::from_terms(
                Basis::E,
                numerator.iter().map(|(p, c)| {
                    let mut parts = p.parts().to_vec();
                    parts.truncate(p.len() - drop.len());
                    (Partition::from_parts(parts), c.clone())
                }),
            )
        };
        LocSymFn {
            numerator,
            e1_power: e1_power - cancel,
        }
    }

    pub fn zero() -> Self {
        LocSymFn {
            numerator: SymFn::zero(Basis::E),
            e1_power: 0,
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(SymFn::constant(Basis::E, c), 0)
    }

    pub fn from_symfn(f: &SymFn) -> Self {
        Self::new(f.clone(), 0)
    }

    /// `c · e1^k` for any integer `k`.
    pub fn e1_monomial(c: Rational, k: i64) -> Self {
        if k >= 0 {
            Self::new(SymFn::term(Basis::E, Partition::ones(k as u32), c), 0)
        } else {
            Self::new(SymFn::constant(Basis::E, c), (-k) as u32)
        }
    }

    pub fn numerator(&self) -> &SymFn {
        &self.numerator
    }

    pub fn e1_power(&self) -> u32 {
        self.e1_power
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.e1_power == 0
    }

    /// The symmetric function itself, when no `e1` remains in the denominator.
    pub fn to_symfn(&self) -> Option<SymFn> {
        self.is_integral().then(|| self.numerator.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LocSymFn {
            numerator: self.numerator.scale(c),
            e1_power: if c.is_zero() { 0 } else { self.e1_power },
        }
    }

    pub fn add(&self, other: &LocSymFn) -> LocSymFn {
        let p = self.e1_power.max(other.e1_power);
        let a = times_e1_power(&self.numerator, p - self.e1_power);
        let b = times_e1_power(&other.numerator, p - other.e1_power);
        Self::new(&a + &b, p)
    }

    pub fn sub(&self, other: &LocSymFn) -> LocSymFn {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &LocSymFn) -> LocSymFn {
        Self::new(
            &self.numerator * &other.numerator,
            self.e1_power + other.e1_power,
        )
    }

    /// If this is `c · e1^k` (any integer `k`), returns `(c, k)`.
    pub fn as_e1_monomial(&self) -> Option<(Rational, i64)> {
        if self.numerator.len() != 1 {
            return None;
        }
        let (p, c) = self.numerator.iter().next().unwrap();
        if p.big_parts() != 0 {
            return None;
        }
        Some((c.clone(), p.len() as i64 - self.e1_power as i64))
    }

    pub fn require_integral(&self, order: usize) -> Result<SymFn, SeriesError> {
        self.to_symfn().ok_or(SeriesError::NonIntegralCoefficient {
            order,
            power: self.e1_power,
        })
    }

    pub fn to_m(&self) -> Result<SymFn, SymError> {
        match self.to_symfn() {
            Some(f) => Ok(f.to_basis(Basis::M)),
            None => Err(SymError::NotDivisible),
        }
    }
}

impl fmt::Display for LocSymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e1_power == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / e1^{}", self.numerator, self.e1_power)
        }
    }
}

impl fmt::Debug for LocSymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
