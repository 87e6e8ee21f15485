use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::rational::{binomial, Rational};

/// Bernoulli numbers with `B_1 = -1/2`, from `Σ_{k=0}^{n} C(n+1,k) B_k = 0`.
#[derive(Clone, Debug, Default)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn new() -> Self {
        BernoulliTable {
            values: vec![Rational::one()],
        }
    }

    pub fn get(&mut self, n: usize) -> Rational {
        while self.values.len() <= n {
            let m = self.values.len();
            let s: Rational = self
                .values
                .iter()
                .enumerate()
                .map(|(k, b)| Rational::from_integer(binomial(m as u64 + 1, k as u64).into()) * b)
                .sum();
            let next = if m > 1 && m % 2 == 1 {
                Rational::zero()
            } else {
                -s / Rational::from_integer((m as u64 + 1).into())
            };
            self.values.push(next);
        }
        self.values[n].clone()
    }
}

fn shared() -> &'static RwLock<BernoulliTable> {
    static TABLE: OnceLock<RwLock<BernoulliTable>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(BernoulliTable::new()))
}

/// `B_n`
pub fn bernoulli(n: usize) -> Rational {
    if let Some(b) = shared().read().unwrap().values.get(n) {
        return b.clone();
    }
    shared().write().unwrap().get(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::series::ScalarSeries;

    #[test]
    fn first_values() {
        assert_eq!(bernoulli(0), ratio(1, 1));
        assert_eq!(bernoulli(1), ratio(-1, 2));
        assert_eq!(bernoulli(2), ratio(1, 6));
        assert_eq!(bernoulli(4), ratio(-1, 30));
        assert_eq!(bernoulli(12), ratio(-691, 2730));
        assert_eq!(bernoulli(7), ratio(0, 1));
    }

    #[test]
    fn sqrt_over_sinh_identity() {
        // Coeff_{T^{g-1}} √T/sinh√T = -(2^{2g-2} - 2) B_{2g-2} / (2g-2)!
        let t = 8;
        let s = ScalarSeries::sinh_sqrt_over_sqrt(t).reciprocal();
        for g in 1..=t {
            let n = 2 * g - 2;
            let two = Rational::from_integer((1u64 << n).into()) - ratio(2, 1);
            let expected = -two * bernoulli(n) / crate::rational::factorial_rat(n as u32);
            assert_eq!(s.coeff(g - 1), expected, "g = {g}");
        }
    }
}
