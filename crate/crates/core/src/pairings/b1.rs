//! Pairings on `M_k` that include the degree-three classes `b_1^i b_1^{i+g}`.
//!
//! The closed formula available for these is internally inconsistent: its
//! binomial prefactor vanishes for `j < k`, its series does not reduce to
//! the `z`-class formula at `j = 0`, and its stated degree condition
//! `|λ| = 4k - 3 + j` disagrees with the dimension count
//! `2|λ| + 2j = 8k - 6`. It is served only on explicit request, with both
//! degree checks and every discrepancy reported.

use num_traits::Zero;

use super::cn::cn_z;
use super::{check_genus_pair, guard, Space};
use crate::error::PairingError;
use crate::rational::{binomial, rat, two_pow, Rational};
use crate::series::{named_series, SeriesName, SymSeries};
use crate::symcore::{Basis, Partition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct B1Report {
    pub g: u32,
    pub k: u32,
    pub j: u32,
    pub lambda: Partition,
    /// `|λ| = 4k - 3 + j`, the condition attached to the formula.
    pub printed_degree_ok: bool,
    /// `|λ| = 4k - 3 - j`, from `2|λ| + 2j = 8k - 6`.
    pub dimension_degree_ok: bool,
    /// Value of the formula as stated, when requested.
    pub as_printed: Option<Rational>,
    /// At `j = 0`: the coefficient of `m_λ` in `CN(Z_g|M_k)`.
    pub mg_route: Option<Rational>,
    pub discrepancies: Vec<String>,
}

fn printed_value(
    g: u32,
    k: u32,
    j: u32,
    lambda: &Partition,
) -> Result<(Rational, Vec<String>), PairingError> {
    let mut notes = Vec::new();
    let choose = binomial(j as u64, k as u64);
    if choose.is_zero() {
        notes.push(format!(
            "prefactor C({j},{k}) is zero, so the formula gives 0"
        ));
        return Ok((Rational::zero(), notes));
    }
    let order = k as usize - 1;
    let trunc = order + 1;
    let factors = [
        (SeriesName::R, g as i64 + k as i64 - 2 * j as i64),
        (SeriesName::U, j as i64),
        (SeriesName::P, j as i64 - k as i64),
        (SeriesName::Q, -1),
    ];
    let mut acc = SymSeries::one(trunc);
    for (name, power) in factors {
        if power != 0 {
            acc = acc.mul(&named_series(name, trunc)?.pow(power)?)?;
        }
    }
    let c = acc.coeff(order)?;
    let f = match c.to_symfn() {
        Some(f) => f.to_basis(Basis::M),
        None => {
            notes.push(format!(
                "coefficient of T^{order} still carries 1/e1^{}; no m_λ coefficient exists",
                c.e1_power()
            ));
            return Ok((Rational::zero(), notes));
        }
    };
    if let Some(d) = f.max_degree() {
        if d != lambda.size() {
            notes.push(format!(
                "extracted coefficient is homogeneous of degree {d}, not |λ| = {}",
                lambda.size()
            ));
        }
    }
    let sign = if k.is_multiple_of(2) { rat(1) } else { rat(-1) };
    let value = sign / two_pow(2 * k - 1) * Rational::from_integer(choose.into()) * f.coeff(lambda);
    Ok((value, notes))
}

/// `z_{g,λ} Π_{i∈J} b_1^i b_1^{i+g} [M_k]` with `j = |J|`.
///
/// For `j > 0` only the stated closed formula is available and `as_printed`
/// must be set. At `j = 0` the `z`-class route is always reported.
pub fn b1_pairing(
    g: u32,
    k: u32,
    j: u32,
    lambda: &Partition,
    as_printed: bool,
) -> Result<B1Report, PairingError> {
    check_genus_pair(g, k)?;
    guard(Space::M, g)?;
    if j > g {
        return Err(PairingError::InvalidIndex(format!(
            "|J| = {j} exceeds g = {g}"
        )));
    }
    let size = lambda.size() as i64;
    let printed_degree_ok = size == 4 * k as i64 - 3 + j as i64;
    let dimension_degree_ok = size == 4 * k as i64 - 3 - j as i64;
    if !printed_degree_ok && !dimension_degree_ok {
        return Err(PairingError::DegreeMismatch {
            lhs: 2 * size + 2 * j as i64,
            rhs: 8 * k as i64 - 6,
            detail: format!("neither |λ| = 4k-3+j nor |λ| = 4k-3-j holds for |λ| = {size}"),
        });
    }
    if j > 0 && !as_printed {
        return Err(PairingError::AsPrintedNotRequested);
    }
    let mut discrepancies = Vec::new();
    if !printed_degree_ok {
        discrepancies.push("stated degree condition |λ| = 4k-3+j fails".to_string());
    }
    if !dimension_degree_ok {
        discrepancies.push("dimension count 2|λ| + 2j = 8k-6 fails".to_string());
    }
    let mg_route = if j == 0 && dimension_degree_ok {
        Some(cn_z(g, k)?.coeff(lambda))
    } else {
        None
    };
    let as_printed_value = if as_printed {
        let (v, notes) = printed_value(g, k, j, lambda)?;
        discrepancies.extend(notes);
        Some(v)
    } else {
        None
    };
    if let (Some(a), Some(b)) = (&as_printed_value, &mg_route) {
        if a != b {
            discrepancies.push(format!("stated formula gives {a}, z-class route gives {b}"));
        }
    }
    Ok(B1Report {
        g,
        k,
        j,
        lambda: lambda.clone(),
        printed_degree_ok,
        dimension_degree_ok,
        as_printed: as_printed_value,
        mg_route,
        discrepancies,
    })
}

/// Collapsing a handle: `x · b_1^j b_1^{j+g} b_2^j b_2^{j+g} [M_g]` equals,
/// up to sign, the restriction of `x = z_{g,λ}` paired on `M_{g-1}`. Returns
/// that restricted pairing.
pub fn mrec_prediction(g: u32, lambda: &Partition) -> Result<Rational, PairingError> {
    if g < 2 {
        return Err(PairingError::InvalidGenus {
            g,
            k: g.saturating_sub(1),
        });
    }
    let cn = cn_z(g, g - 1)?;
    if lambda.size() != cn.degree() {
        return Err(PairingError::DegreeMismatch {
            lhs: 2 * lambda.size() as i64 + 12,
            rhs: 8 * g as i64 - 6,
            detail: "2|λ| + 12 = 8g - 6".to_string(),
        });
    }
    Ok(cn.coeff(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn empty_j_matches_z_route() {
        let l = Partition::from_parts([3, 1, 1]);
        let r = b1_pairing(2, 2, 0, &l, false).unwrap();
        assert_eq!(r.mg_route, Some(cn_z(2, 2).unwrap().coeff(&l)));
        assert_eq!(r.as_printed, None);
    }

    #[test]
    fn genus_one_as_printed() {
        let r = b1_pairing(1, 1, 1, &Partition::empty(), true).unwrap();
        assert_eq!(r.as_printed, Some(ratio(-1, 2)));
        assert!(r.dimension_degree_ok);
        assert!(!r.printed_degree_ok);
    }

    #[test]
    fn needs_flag() {
        assert_eq!(
            b1_pairing(1, 1, 1, &Partition::empty(), false),
            Err(PairingError::AsPrintedNotRequested)
        );
    }
}
