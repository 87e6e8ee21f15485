//! Pairings of monomials in the Newstead classes `α, β, γ` on `N_g`.

use num_traits::Zero;

use super::bernoulli::bernoulli;
use crate::error::PairingError;
use crate::rational::{binomial, factorial_rat, rat, two_pow, Rational};

fn check_degree(g: u32, lhs: i64, detail: &str) -> Result<(), PairingError> {
    let rhs = 3 * g as i64 - 3;
    if lhs != rhs {
        return Err(PairingError::DegreeMismatch {
            lhs,
            rhs,
            detail: detail.to_string(),
        });
    }
    Ok(())
}

/// `α^i β^j [N_g]`, zero when `i - g + 1 < 0`.
pub fn pairing_ab(g: u32, i: u32, j: u32) -> Result<Rational, PairingError> {
    if g == 0 {
        return Err(PairingError::InvalidGenus { g, k: 0 });
    }
    check_degree(g, i as i64 + 2 * j as i64, "i + 2j = 3g - 3")?;
    let n = i as i64 - g as i64 + 1;
    if n < 0 {
        return Ok(Rational::zero());
    }
    let n = n as u32;
    let sign = if g.is_multiple_of(2) { rat(1) } else { rat(-1) };
    let falling = factorial_rat(i) / factorial_rat(n);
    Ok(sign * falling * two_pow(2 * g - 2) * (two_pow(n) - rat(2)) * bernoulli(n as usize))
}

/// `α^i β^j γ^k [N_g] = 2^k k! C(g,k) · α^i β^j [N_{g-k}]`.
pub fn pairing_newstead(g: u32, i: u32, j: u32, k: u32) -> Result<Rational, PairingError> {
    if g == 0 {
        return Err(PairingError::InvalidGenus { g, k });
    }
    check_degree(
        g,
        i as i64 + 2 * j as i64 + 3 * k as i64,
        "i + 2j + 3k = 3g - 3",
    )?;
    if k >= g {
        return Ok(Rational::zero());
    }
    let c =
        two_pow(k) * factorial_rat(k) * Rational::from_integer(binomial(g as u64, k as u64).into());
    Ok(c * pairing_ab(g - k, i, j)?)
}
