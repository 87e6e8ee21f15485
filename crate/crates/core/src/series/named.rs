use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use super::loc::LocSymFn;
use super::symseries::SymSeries;
use crate::error::{ParseError, SeriesError};
use crate::rational::{rat, Rational};
use crate::symcore::{Basis, Partition, SymFn};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesName {
    U,
    Q,
    R,
    P,
    E,
    U0,
    U1,
    U2,
}

impl SeriesName {
    pub const ALL: [SeriesName; 8] = [
        SeriesName::U,
        SeriesName::Q,
        SeriesName::R,
        SeriesName::P,
        SeriesName::E,
        SeriesName::U0,
        SeriesName::U1,
        SeriesName::U2,
    ];
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SeriesName::U => "U",
            SeriesName::Q => "Q",
            SeriesName::R => "R",
            SeriesName::P => "P",
            SeriesName::E => "E",
            SeriesName::U0 => "u0",
            SeriesName::U1 => "u1",
            SeriesName::U2 => "u2",
        };
        write!(f, "{s}")
    }
}

impl FromStr for SeriesName {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        SeriesName::ALL
            .into_iter()
            .find(|n| n.to_string() == s)
            .ok_or_else(|| ParseError::SeriesName(s.to_string()))
    }
}

fn sign(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        rat(1)
    } else {
        rat(-1)
    }
}

fn twos(n: usize, extra: &[u32]) -> Partition {
    Partition::from_parts(std::iter::repeat_n(2, n).chain(extra.iter().copied()))
}

/// Coefficient of `T^n`, in the monomial basis where that is the natural form.
fn raw_coeff(name: SeriesName, n: usize) -> SymFn {
    let m = |p: Partition| SymFn::basis_element(Basis::M, p);
    match name {
        SeriesName::U => m(twos(n, &[1])).scale(&sign(n)),
        SeriesName::Q => SymFn::e(&[2 * n as u32 + 1]),
        SeriesName::R => m(twos(n, &[])).scale(&sign(n)),
        SeriesName::P => {
            let sq = rat(((n + 1) * (n + 1)) as i64);
            (&m(twos(n, &[1, 1])).scale(&rat(2)) + &m(twos(n + 1, &[])).scale(&sq)).scale(&sign(n))
        }
        SeriesName::E => SymFn::e(&[2 * n as u32]),
        SeriesName::U1 => SymFn::m(&[2 * n as u32 + 1]),
        SeriesName::U2 => SymFn::m(&[2 * n as u32 + 2]),
        SeriesName::U0 => unreachable!("u0 is built by exponentiation"),
    }
}

fn cache() -> &'static RwLock<HashMap<(SeriesName, usize), SymSeries>> {
    static CACHE: OnceLock<RwLock<HashMap<(SeriesName, usize), SymSeries>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The named series truncated after `T^{trunc-1}`, coefficients in the `E` basis.
///
/// `u0` is computed independently as `exp(-Σ_k p_{2k} T^k / k)`, i.e. the
/// expansion of `Π (1 - T x_i^2)`, so comparing it with `R` is a real check.
pub fn named_series(name: SeriesName, trunc: usize) -> Result<SymSeries, SeriesError> {
    if trunc == 0 {
        return Err(SeriesError::OrderBeyondTruncation { order: 0, trunc: 0 });
    }
    if let Some(hit) = cache().read().unwrap().get(&(name, trunc)) {
        return Ok(hit.clone());
    }
    let s = match name {
        SeriesName::U0 => {
            let mut log = vec![LocSymFn::zero()];
            for k in 1..trunc {
                let p = SymFn::m(&[2 * k as u32]).scale(&(rat(-1) / rat(k as i64)));
                log.push(LocSymFn::from_symfn(&p));
            }
            SymSeries::from_coeffs(log, trunc).exp()?
        }
        _ => SymSeries::from_symfns((0..trunc).map(|n| raw_coeff(name, n)), trunc),
    };
    cache().write().unwrap().insert((name, trunc), s.clone());
    Ok(s)
}

/// Like [`named_series`] but takes the textual name (`U`, `Q`, `R`, `P`,
/// `E`, `u0`, `u1`, `u2`).
pub fn named_series_str(name: &str, trunc: usize) -> Result<SymSeries, SeriesError> {
    named_series(name.parse()?, trunc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_coefficients() {
        let q = named_series(SeriesName::Q, 3).unwrap();
        assert_eq!(q.coeff_integral(0).unwrap(), SymFn::e(&[1]));
        assert_eq!(q.coeff_integral(1).unwrap(), SymFn::e(&[3]));
        let u = named_series(SeriesName::U, 3).unwrap();
        assert_eq!(
            u.coeff_integral(1).unwrap().to_basis(Basis::M),
            SymFn::m(&[2, 1]).scale(&rat(-1))
        );
        let p = named_series(SeriesName::P, 2).unwrap();
        assert_eq!(p.coeff_integral(0).unwrap(), SymFn::e(&[1, 1]));
        let r = named_series(SeriesName::R, 2).unwrap();
        assert_eq!(r.coeff_integral(0).unwrap(), SymFn::one(Basis::E));
    }

    #[test]
    fn names_round_trip() {
        for n in SeriesName::ALL {
            assert_eq!(n.to_string().parse::<SeriesName>().unwrap(), n);
        }
        assert!("V".parse::<SeriesName>().is_err());
    }
}
