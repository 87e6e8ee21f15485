use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::loc::LocSymFn;
use crate::error::SeriesError;
use crate::rational::{rat, Rational};
use crate::symcore::{specialize_ex, SpecValue, SymFn};

/// A power series in `T` truncated after `T^{trunc-1}`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymSeries {
    coeffs: Vec<LocSymFn>,
}

impl SymSeries {
    pub fn from_coeffs(mut coeffs: Vec<LocSymFn>, trunc: usize) -> Self {
        assert!(trunc >= 1, "truncation must be positive");
        coeffs.resize(trunc, LocSymFn::zero());
        SymSeries { coeffs }
    }

    pub fn from_symfns(coeffs: impl IntoIterator<Item = SymFn>, trunc: usize) -> Self {
        Self::from_coeffs(
            coeffs
                .into_iter()
                .map(|f| LocSymFn::from_symfn(&f))
                .collect(),
            trunc,
        )
    }

    pub fn one(trunc: usize) -> Self {
        Self::constant(LocSymFn::one(), trunc)
    }

    pub fn constant(c: LocSymFn, trunc: usize) -> Self {
        Self::from_coeffs(vec![c], trunc)
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[LocSymFn] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&LocSymFn, SeriesError> {
        self.coeffs
            .get(n)
            .ok_or(SeriesError::OrderBeyondTruncation {
                order: n,
                trunc: self.trunc(),
            })
    }

    /// The coefficient of `T^n`, which must be free of `1/e1`.
    pub fn coeff_integral(&self, n: usize) -> Result<SymFn, SeriesError> {
        self.coeff(n)?.require_integral(n)
    }

    /// Keeps `T^0 .. T^{trunc-1}`; never extends.
    pub fn truncate(&self, trunc: usize) -> Self {
        let t = trunc.min(self.trunc()).max(1);
        SymSeries {
            coeffs: self.coeffs[..t].to_vec(),
        }
    }

    fn check(&self, other: &SymSeries) -> Result<(), SeriesError> {
        if self.trunc() != other.trunc() {
            return Err(SeriesError::TruncMismatch(self.trunc(), other.trunc()));
        }
        Ok(())
    }

    pub fn add(&self, other: &SymSeries) -> Result<SymSeries, SeriesError> {
        self.check(other)?;
        Ok(SymSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &SymSeries) -> Result<SymSeries, SeriesError> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> SymSeries {
        SymSeries {
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Multiplies by `T`, dropping the top coefficient.
    pub fn shift(&self) -> SymSeries {
        let mut coeffs = vec![LocSymFn::zero()];
        coeffs.extend(self.coeffs[..self.trunc() - 1].iter().cloned());
        SymSeries { coeffs }
    }

    /// Cauchy product; both operands must share the truncation.
    pub fn mul(&self, other: &SymSeries) -> Result<SymSeries, SeriesError> {
        self.check(other)?;
        let coeffs = (0..self.trunc())
            .into_par_iter()
            .map(|n| {
                (0..=n)
                    .filter(|&i| !self.coeffs[i].is_zero() && !other.coeffs[n - i].is_zero())
                    .map(|i| self.coeffs[i].mul(&other.coeffs[n - i]))
                    .fold(LocSymFn::zero(), |acc, t| acc.add(&t))
            })
            .collect();
        Ok(SymSeries { coeffs })
    }

    /// Only the coefficient of `T^n` in `self · other`.
    pub fn mul_coeff(&self, other: &SymSeries, n: usize) -> Result<LocSymFn, SeriesError> {
        self.check(other)?;
        if n >= self.trunc() {
            return Err(SeriesError::OrderBeyondTruncation {
                order: n,
                trunc: self.trunc(),
            });
        }
        Ok((0..=n)
            .into_par_iter()
            .filter(|&i| !self.coeffs[i].is_zero() && !other.coeffs[n - i].is_zero())
            .map(|i| self.coeffs[i].mul(&other.coeffs[n - i]))
            .reduce(LocSymFn::zero, |a, b| a.add(&b)))
    }

    /// Solves `a · b = 1` order by order. The constant term must be a
    /// nonzero rational multiple of a power of `e1`.
    pub fn reciprocal(&self) -> Result<SymSeries, SeriesError> {
        let (c, k) = self.coeffs[0]
            .as_e1_monomial()
            .filter(|(c, _)| !c.is_zero())
            .ok_or(SeriesError::NonInvertibleConstantTerm)?;
        let inv0 = LocSymFn::e1_monomial(Rational::one() / c, -k);
        let minus_inv0 = inv0.scale(&rat(-1));
        let mut out: Vec<LocSymFn> = vec![inv0];
        for n in 1..self.trunc() {
            let s = (1..=n)
                .into_par_iter()
                .filter(|&i| !self.coeffs[i].is_zero() && !out[n - i].is_zero())
                .map(|i| self.coeffs[i].mul(&out[n - i]))
                .reduce(LocSymFn::zero, |a, b| a.add(&b));
            out.push(minus_inv0.mul(&s));
        }
        Ok(SymSeries { coeffs: out })
    }

    /// `self^n` for any integer `n`; negative powers go through the reciprocal.
    pub fn pow(&self, n: i64) -> Result<SymSeries, SeriesError> {
        let base = if n < 0 {
            self.reciprocal()?
        } else {
            self.clone()
        };
        let mut e = n.unsigned_abs();
        let mut acc = SymSeries::one(self.trunc());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// `exp(self)` for a series with zero constant term, via `n F_n = Σ k S_k F_{n-k}`.
    pub fn exp(&self) -> Result<SymSeries, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonInvertibleConstantTerm);
        }
        let mut out = vec![LocSymFn::one()];
        for n in 1..self.trunc() {
            let mut acc = LocSymFn::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[k].mul(&out[n - k]).scale(&rat(k as i64)));
            }
            out.push(acc.scale(&(Rational::one() / rat(n as i64))));
        }
        Ok(SymSeries { coeffs: out })
    }

    /// Applies `ex` coefficientwise. `ex(e1) = 1`, so localized coefficients are fine.
    pub fn specialize_ex(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .map(|c| {
                specialize_ex(c.numerator())
                    .as_constant()
                    .unwrap_or_else(Rational::zero)
            })
            .collect()
    }

    /// Applies a specialization coefficientwise; every coefficient must be
    /// free of `1/e1`.
    pub fn specialize_with(
        &self,
        spec: impl Fn(&SymFn) -> SpecValue,
    ) -> Result<Vec<SpecValue>, SeriesError> {
        self.coeffs
            .iter()
            .map(|c| match c.to_symfn() {
                Some(f) => Ok(spec(&f)),
                None => Err(SeriesError::LocalizedSpecialization(c.e1_power())),
            })
            .collect()
    }
}

impl fmt::Display for SymSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}] T^{i}")?;
        }
        write!(f, " + O(T^{})", self.trunc())
    }
}

impl fmt::Debug for SymSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::Basis;

    #[test]
    fn reciprocal_of_one_plus_e2_t() {
        let a = SymSeries::from_symfns([SymFn::one(Basis::E), SymFn::e(&[2])], 4);
        let b = a.reciprocal().unwrap();
        assert_eq!(
            b.coeff_integral(3).unwrap(),
            SymFn::e(&[2, 2, 2]).scale(&rat(-1))
        );
        assert_eq!(a.mul(&b).unwrap(), SymSeries::one(4));
    }

    #[test]
    fn non_invertible_constant() {
        let a = SymSeries::from_symfns([SymFn::e(&[2])], 3);
        assert_eq!(a.reciprocal(), Err(SeriesError::NonInvertibleConstantTerm));
    }

    #[test]
    fn truncation_errors() {
        let a = SymSeries::one(3);
        assert!(matches!(
            a.mul(&SymSeries::one(4)),
            Err(SeriesError::TruncMismatch(3, 4))
        ));
        assert!(matches!(
            a.coeff(3),
            Err(SeriesError::OrderBeyondTruncation { order: 3, trunc: 3 })
        ));
    }
}
