use num_traits::{One, Zero};

use crate::rational::{factorial_rat, Rational};

/// A truncated power series in `T` with rational coefficients; used for the
/// closed forms that the `ex` specialization produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarSeries(pub Vec<Rational>);

impl ScalarSeries {
    pub fn new(mut coeffs: Vec<Rational>, trunc: usize) -> Self {
        coeffs.resize(trunc, Rational::zero());
        ScalarSeries(coeffs)
    }

    pub fn one(trunc: usize) -> Self {
        Self::new(vec![Rational::one()], trunc)
    }

    /// `sinh(√T)/√T = Σ T^n / (2n+1)!`
    pub fn sinh_sqrt_over_sqrt(trunc: usize) -> Self {
        ScalarSeries(
            (0..trunc)
                .map(|n| Rational::one() / factorial_rat(2 * n as u32 + 1))
                .collect(),
        )
    }

    /// `cosh(√T) = Σ T^n / (2n)!`
    pub fn cosh_sqrt(trunc: usize) -> Self {
        ScalarSeries(
            (0..trunc)
                .map(|n| Rational::one() / factorial_rat(2 * n as u32))
                .collect(),
        )
    }

    pub fn trunc(&self) -> usize {
        self.0.len()
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.0.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn mul(&self, other: &ScalarSeries) -> ScalarSeries {
        let t = self.trunc().min(other.trunc());
        ScalarSeries(
            (0..t)
                .map(|n| (0..=n).map(|i| &self.0[i] * &other.0[n - i]).sum())
                .collect(),
        )
    }

    /// Panics if the constant term is zero.
    pub fn reciprocal(&self) -> ScalarSeries {
        let inv0 = Rational::one() / &self.0[0];
        let mut out = vec![inv0.clone()];
        for n in 1..self.trunc() {
            let s: Rational = (1..=n).map(|i| &self.0[i] * &out[n - i]).sum();
            out.push(-s * &inv0);
        }
        ScalarSeries(out)
    }

    pub fn pow(&self, n: u32) -> ScalarSeries {
        (0..n).fold(ScalarSeries::one(self.trunc()), |acc, _| acc.mul(self))
    }
}
