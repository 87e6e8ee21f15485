//! Chern number polynomials extracted from the generating series.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_traits::Zero;
use rayon::prelude::*;

use super::twist::delta_monomial_in_xi;
use super::{check_genus_pair, guard};
use crate::error::PairingError;
use crate::rational::{pow_rat, rat, two_pow, Rational};
use crate::series::{named_series, SeriesName};
use crate::symcore::{partitions_of, Basis, Partition, SymFn};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    N,
    M,
    Tangent,
}

impl Space {
    pub fn name(self) -> &'static str {
        match self {
            Space::N => "N",
            Space::M => "M",
            Space::Tangent => "N-tangent",
        }
    }
}

/// Which classes the `m_λ` coefficients pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassFamily {
    /// `ξ_{g,i}` on `N_k`
    Xi,
    /// `z_{g,i}` on `M_k`
    Z,
    /// `δ_{g,i}` on `N_k`
    Delta,
    /// `d_{g,i}` on `M_k`
    D,
    /// `c_i(TN_g)`
    Chern,
}

impl ClassFamily {
    pub fn space(self) -> Space {
        match self {
            ClassFamily::Xi | ClassFamily::Delta => Space::N,
            ClassFamily::Z | ClassFamily::D => Space::M,
            ClassFamily::Chern => Space::Tangent,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ClassFamily::Xi => "xi",
            ClassFamily::Z => "z",
            ClassFamily::Delta => "delta",
            ClassFamily::D => "d",
            ClassFamily::Chern => "c",
        }
    }
}

/// `Σ_λ (class monomial λ)[space_k] · m_λ` for classes coming from genus `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnPolynomial {
    pub family: ClassFamily,
    pub g: u32,
    pub k: u32,
    /// Homogeneous, in the monomial basis.
    pub data: SymFn,
}

impl CnPolynomial {
    pub fn space(&self) -> Space {
        self.family.space()
    }

    /// `3k - 3` on `N_k`, `4k - 3` on `M_k`.
    pub fn degree(&self) -> u32 {
        match self.space() {
            Space::N | Space::Tangent => 3 * self.k - 3,
            Space::M => 4 * self.k - 3,
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.data.coeff(lambda)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.len()
    }

    pub fn in_basis(&self, basis: Basis) -> SymFn {
        self.data.to_basis(basis)
    }
}

impl fmt::Display for CnPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.data)
    }
}

type Key = (ClassFamily, u32, u32);

fn cache() -> &'static RwLock<HashMap<Key, CnPolynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, CnPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached(
    key: Key,
    build: impl FnOnce() -> Result<SymFn, PairingError>,
) -> Result<CnPolynomial, PairingError> {
    if let Some(hit) = cache().read().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let poly = CnPolynomial {
        family: key.0,
        g: key.1,
        k: key.2,
        data: build()?,
    };
    debug_assert!(poly.data.iter().all(|(p, _)| p.size() == poly.degree()));
    cache().write().unwrap().insert(key, poly.clone());
    Ok(poly)
}

/// `Coeff_{T^order} Π name^power`, as an `M`-basis symmetric function.
fn extract(factors: &[(SeriesName, i64)], order: usize) -> Result<SymFn, PairingError> {
    let trunc = order + 1;
    let mut pieces = Vec::with_capacity(factors.len());
    for &(name, power) in factors {
        if power != 0 {
            pieces.push(named_series(name, trunc)?.pow(power)?);
        }
    }
    let last = match pieces.pop() {
        Some(p) => p,
        None => return Ok(SymFn::one(Basis::M)),
    };
    let mut acc = pieces
        .pop()
        .unwrap_or_else(|| crate::series::SymSeries::one(trunc));
    for p in pieces {
        acc = acc.mul(&p)?;
    }
    let c = acc.mul_coeff(&last, order)?;
    Ok(c.require_integral(order)?.to_basis(Basis::M))
}

/// `CN(Z_g|N_k) = 2^{1-k} Coeff_{T^{k-1}} [U^k R^{g-k} / Q]`.
pub fn cn_xi(g: u32, k: u32) -> Result<CnPolynomial, PairingError> {
    check_genus_pair(g, k)?;
    guard(Space::N, g)?;
    cached((ClassFamily::Xi, g, k), || {
        let f = extract(
            &[
                (SeriesName::U, k as i64),
                (SeriesName::R, (g - k) as i64),
                (SeriesName::Q, -1),
            ],
            k as usize - 1,
        )?;
        Ok(f.scale(&(rat(1) / two_pow(k - 1))))
    })
}

/// `CN(Z_g|M_k) = (-1)^k 2^{1-2k} Coeff_{T^{k-1}} [P^k R^{g-k} / Q]`.
pub fn cn_z(g: u32, k: u32) -> Result<CnPolynomial, PairingError> {
    check_genus_pair(g, k)?;
    guard(Space::M, g)?;
    cached((ClassFamily::Z, g, k), || {
        let f = extract(
            &[
                (SeriesName::P, k as i64),
                (SeriesName::R, (g - k) as i64),
                (SeriesName::Q, -1),
            ],
            k as usize - 1,
        )?;
        let sign = if k.is_multiple_of(2) { rat(1) } else { rat(-1) };
        Ok(f.scale(&(sign / two_pow(2 * k - 1))))
    })
}

/// All Chern numbers of `N_g`: `(-2)^{3g-3} Coeff_{T^{g-1}} [U^g / (Q E)]`.
pub fn cn_tangent(g: u32) -> Result<CnPolynomial, PairingError> {
    if g < 2 {
        return Err(PairingError::InvalidGenus { g, k: g });
    }
    guard(Space::Tangent, g)?;
    cached((ClassFamily::Chern, g, g), || {
        let f = extract(
            &[
                (SeriesName::U, g as i64),
                (SeriesName::E, -1),
                (SeriesName::Q, -1),
            ],
            g as usize - 1,
        )?;
        Ok(f.scale(&pow_rat(&rat(-2), 3 * g - 3)))
    })
}

/// Pairs `(degree-two class)^power · (twisted classes)_λ` using the
/// untwisted Chern number polynomial `cn`.
///
/// The twisted classes are `δ` over `ξ` on `N` and `d` over `z` on `M`; in
/// both cases the degree-two class is `-2` times the first untwisted class.
pub fn twisted_pairing(
    cn: &CnPolynomial,
    lambda: &Partition,
    power: u32,
) -> Result<Rational, PairingError> {
    let lhs = lambda.size() as i64 + power as i64;
    let rhs = cn.degree() as i64;
    if lhs != rhs {
        return Err(PairingError::DegreeMismatch {
            lhs: 2 * lhs,
            rhs: 2 * rhs,
            detail: format!(
                "2(|λ| + power) must equal the real dimension of {}_{}",
                cn.space().name(),
                cn.k
            ),
        });
    }
    let expanded = delta_monomial_in_xi(cn.g, lambda, power);
    Ok(expanded
        .terms()
        .iter()
        .map(|((_, classes), c)| c * cn.coeff(classes))
        .fold(Rational::zero(), |a, b| a + b))
}

/// `α^{alpha_power} δ_{g,λ_1} ... δ_{g,λ_n} [N_k]`.
pub fn delta_pairing(
    g: u32,
    k: u32,
    lambda: &Partition,
    alpha_power: u32,
) -> Result<Rational, PairingError> {
    twisted_pairing(&cn_xi(g, k)?, lambda, alpha_power)
}

/// `a_1^{a1_power} d_{g,λ_1} ... d_{g,λ_n} [M_k]`.
pub fn d_pairing(
    g: u32,
    k: u32,
    lambda: &Partition,
    a1_power: u32,
) -> Result<Rational, PairingError> {
    twisted_pairing(&cn_z(g, k)?, lambda, a1_power)
}

fn twisted_cn(base: CnPolynomial, family: ClassFamily) -> Result<CnPolynomial, PairingError> {
    cached((family, base.g, base.k), || {
        let lambdas = partitions_of(base.degree(), None, None);
        let values: Vec<(Partition, Rational)> = lambdas
            .into_par_iter()
            .map(|l| twisted_pairing(&base, &l, 0).map(|v| (l, v)))
            .collect::<Result<_, _>>()?;
        Ok(SymFn::from_terms(Basis::M, values))
    })
}

/// `CN(f_! V_g |N_k)`: the `δ` classes in place of `ξ`.
pub fn cn_delta(g: u32, k: u32) -> Result<CnPolynomial, PairingError> {
    twisted_cn(cn_xi(g, k)?, ClassFamily::Delta)
}

/// The `d` classes on `M_k` in place of `z`.
pub fn cn_d(g: u32, k: u32) -> Result<CnPolynomial, PairingError> {
    twisted_cn(cn_z(g, k)?, ClassFamily::D)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn small_xi() {
        assert_eq!(cn_xi(1, 1).unwrap().data, SymFn::one(Basis::M));
        let two = cn_xi(2, 2).unwrap().data.scale(&rat(2));
        assert_eq!(
            two,
            &SymFn::m(&[1, 1, 1]).scale(&rat(-1)) - &SymFn::m(&[2, 1]).scale(&rat(2))
        );
        for g in 1..=6 {
            assert_eq!(cn_xi(g, 1).unwrap().data, SymFn::one(Basis::M), "g = {g}");
        }
    }

    #[test]
    fn small_z() {
        let z = cn_z(1, 1).unwrap();
        assert_eq!(z.data, SymFn::m(&[1]).scale(&ratio(-1, 2)));
        // a1^5[M_2] = (-2)^5 z1^5[M_2] = 80
        let c = cn_z(2, 2).unwrap().coeff(&Partition::ones(5));
        assert_eq!(c * rat(-32), rat(80));
    }

    #[test]
    fn small_delta() {
        let d = cn_delta(2, 2).unwrap().data;
        let expected = &(&SymFn::m(&[1, 1, 1]).scale(&rat(4)) + &SymFn::m(&[2, 1]).scale(&rat(3)))
            + &SymFn::m(&[3]);
        assert_eq!(d, expected);
        assert_eq!(
            delta_pairing(2, 2, &Partition::single(2), 1).unwrap(),
            rat(3)
        );
        assert!(matches!(
            delta_pairing(2, 2, &Partition::single(2), 2),
            Err(PairingError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn tangent_genus_two() {
        let t = cn_tangent(2).unwrap();
        assert_eq!(t.coeff(&Partition::ones(3)), rat(32));
    }

    #[test]
    fn guard_refuses() {
        assert!(matches!(
            cn_xi(9, 9),
            Err(PairingError::GenusOutOfRange { .. })
        ));
        assert!(matches!(
            cn_xi(2, 3),
            Err(PairingError::InvalidGenus { .. })
        ));
    }
}
