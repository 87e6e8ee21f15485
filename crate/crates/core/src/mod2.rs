//! Mod-2 pairings: the tables `P_{g,k}`, certificates for the nilpotency
//! degrees of `α` and `a_1`, and reduction modulo the ideal `I` generated by
//! `2` and the `m_λ` with at least two parts greater than one.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::Mod2Error;
use crate::pairings::{cn_z, d_pairing, delta_pairing};
use crate::rational::{format_rational, integer_parity, two_pow, Rational};
use crate::symcore::{partitions_of, Basis, Partition, SymFn};

/// Parts `1, 2, 4, ...` up to `2g - 1`.
fn power_of_two_parts(g: u32) -> BTreeSet<u32> {
    std::iter::successors(Some(1u32), |p| Some(p * 2))
        .take_while(|&p| p <= (2 * g).saturating_sub(1).max(1))
        .collect()
}

fn parity(value: &Rational, what: impl FnOnce() -> String) -> Result<bool, Mod2Error> {
    integer_parity(value).ok_or_else(|| {
        Mod2Error::InternalParityFault(format!("{} = {}", what(), format_rational(value)))
    })
}

/// The partitions `λ ∈ P(2)` whose pairing
/// `α^{m_1} δ_{g,λ#} ψ_1 ψ_{1+g} ... ψ_p ψ_{p+g} [N_g]` is odd, where `m_1`
/// counts the ones of `λ` and `λ#` is the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityTableRow {
    pub g: u32,
    pub psi_pairs: u32,
    pub odd_partitions: BTreeSet<Partition>,
}

impl ParityTableRow {
    /// The genus of the space the pairings live on after removing the
    /// `ψ` pairs.
    pub fn restricted_genus(&self) -> u32 {
        self.g - self.psi_pairs
    }
}

impl fmt::Display for ParityTableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self
            .odd_partitions
            .iter()
            .rev()
            .map(|l| {
                if l.is_empty() {
                    "0".to_string()
                } else {
                    format!("({})", l.exponent_string())
                }
            })
            .collect();
        write!(f, "g={} k={}: {}", self.g, self.psi_pairs, cells.join(" "))
    }
}

/// One cell of the parity table: `p` pairs of `ψ` classes, which moves the
/// pairing to `N_{g-p}`.
pub fn pgk_row(g: u32, p: u32) -> Result<ParityTableRow, Mod2Error> {
    if g == 0 || p >= g {
        return Err(Mod2Error::InvalidArguments(format!(
            "need 0 <= p < g, got g = {g}, p = {p}"
        )));
    }
    let k = g - p;
    let parts = power_of_two_parts(g);
    let candidates = partitions_of(3 * k - 3, None, Some(&parts));
    let odd: Vec<Option<Partition>> = candidates
        .into_par_iter()
        .map(|l| {
            let (rest, ones) = l.split_ones();
            let v = delta_pairing(g, k, &rest, ones)?;
            let odd = parity(&v, || format!("a^{ones} d{rest} on N_{k}"))?;
            Ok(odd.then_some(l))
        })
        .collect::<Result<_, Mod2Error>>()?;
    Ok(ParityTableRow {
        g,
        psi_pairs: p,
        odd_partitions: odd.into_iter().flatten().collect(),
    })
}

/// Rows `g = 1 ..= g_max`, each with columns `p = 0 .. g`.
pub fn table1(g_max: u32) -> Result<Vec<Vec<ParityTableRow>>, Mod2Error> {
    (1..=g_max)
        .map(|g| (0..g).map(|p| pgk_row(g, p)).collect())
        .collect()
}

/// Evidence that `α^g ≡ 0` and `α^{g-1} ≢ 0` in `H*(N_g; Z_2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaCertificate {
    pub g: u32,
    /// Number of pairings `α^g δ_λ (ψ-pairs)[N_g]` examined.
    pub checked: usize,
    /// The first odd completion found, as `(ψ pairs, λ)`.
    pub odd_completion: Option<(u32, Partition)>,
    /// `α^{g-1} δ_{2g-2} [N_g]`
    pub witness: Rational,
    pub witness_odd: bool,
}

impl AlphaCertificate {
    pub fn certified(&self) -> bool {
        self.odd_completion.is_none() && self.witness_odd
    }
}

/// Checks every pairing of `α^g` against `δ` monomials and `ψ`-pair blocks,
/// and evaluates the odd witness `α^{g-1} δ_{2g-2} [N_g]`.
pub fn nilpotency_alpha(g: u32) -> Result<AlphaCertificate, Mod2Error> {
    if !(2..=6).contains(&g) {
        return Err(Mod2Error::InvalidArguments(format!(
            "g = {g} outside 2..=6"
        )));
    }
    let mut checked = 0;
    let mut odd_completion = None;
    for p in 0..g {
        let k = g - p;
        let Some(rest) = (3 * k - 3).checked_sub(g) else {
            continue;
        };
        for l in partitions_of(rest, Some(2 * g - 1), None) {
            let v = delta_pairing(g, k, &l, g)?;
            checked += 1;
            if parity(&v, || format!("a^{g} d{l} on N_{k}"))? && odd_completion.is_none() {
                odd_completion = Some((p, l));
            }
        }
    }
    let witness = delta_pairing(g, g, &Partition::single(2 * g - 2), g - 1)?;
    let witness_odd = parity(&witness, || format!("a^{} d[{}]", g - 1, 2 * g - 2))?;
    Ok(AlphaCertificate {
        g,
        checked,
        odd_completion,
        witness,
        witness_odd,
    })
}

/// Evidence for the nilpotency degree `2g` of `a_1` mod 2 on `M_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A1Certificate {
    pub g: u32,
    /// `a_1^{2g-1} d_{2g-2} [M_g]`
    pub witness: Rational,
    pub witness_odd: bool,
    /// The `j` with `2^{2g-1} z_1^j z_{4g-3-j} [M_g]` odd, for `0 <= j <= 4g-4`.
    pub odd_window: BTreeSet<u32>,
    /// Number of pairings `a_1^{2g} d_λ [M_k]` examined.
    pub checked: usize,
    /// The first such pairing that is odd, as `(k, λ)`.
    pub odd_completion: Option<(u32, Partition)>,
    /// What the even-pairing check does not reach.
    pub coverage: String,
}

impl A1Certificate {
    pub fn window_matches(&self) -> bool {
        self.odd_window == BTreeSet::from([2 * self.g - 2, 2 * self.g - 1])
    }

    /// The odd witness and the parity window both hold and no covered
    /// `a_1^{2g}` pairing is odd. This is partial evidence for `a_1^{2g} ≡ 0`.
    pub fn certified(&self) -> bool {
        self.witness_odd && self.window_matches() && self.odd_completion.is_none()
    }
}

/// Exhibits the odd pairing `a_1^{2g-1} d_{2g-2}[M_g]`, tabulates the parity
/// window of `z_1^j z_{4g-3-j}`, and checks that the `a_1^{2g}` pairings
/// reachable from the `z`-class formula and handle collapsing are even.
pub fn nilpotency_a1(g: u32) -> Result<A1Certificate, Mod2Error> {
    if !(2..=4).contains(&g) {
        return Err(Mod2Error::InvalidArguments(format!(
            "g = {g} outside 2..=4"
        )));
    }
    let witness = d_pairing(g, g, &Partition::single(2 * g - 2), 2 * g - 1)?;
    let witness_odd = parity(&witness, || format!("a1^{} d[{}]", 2 * g - 1, 2 * g - 2))?;

    let cn = cn_z(g, g)?;
    let mut odd_window = BTreeSet::new();
    for j in 0..=4 * g - 4 {
        let l = Partition::ones(j).union(&Partition::from_parts([4 * g - 3 - j]));
        let v = cn.coeff(&l) * two_pow(2 * g - 1);
        if parity(&v, || format!("2^{} z{l}", 2 * g - 1))? {
            odd_window.insert(j);
        }
    }

    // Handle collapsing turns b-class blocks into pairings on M_k, k < g.
    let mut checked = 0;
    let mut odd_completion = None;
    for k in 1..=g {
        let Some(rest) = (4 * k - 3).checked_sub(2 * g) else {
            continue;
        };
        for l in partitions_of(rest, Some(2 * g - 1), None) {
            let v = d_pairing(g, k, &l, 2 * g)?;
            checked += 1;
            if parity(&v, || format!("a1^{} d{l} on M_{k}", 2 * g))? && odd_completion.is_none() {
                odd_completion = Some((k, l));
            }
        }
    }
    Ok(A1Certificate {
        g,
        witness,
        witness_odd,
        odd_window,
        checked,
        odd_completion,
        coverage: "covers a1^{2g} d_λ with b-classes only in collapsible blocks \
                   b1^j b1^{j+g} b2^j b2^{j+g}; pairings such as b1^j b2^{j+g} z_λ are \
                   not reached, so a1^{2g} ≡ 0 is partially verified"
            .to_string(),
    })
}

/// Parity of the multinomial `(Σ a_i)! / Π a_i!`: odd exactly when no two of
/// the `a_i` share a binary digit. Returns `true` for odd.
pub fn lucas_parity(counts: &[u64]) -> bool {
    let mut seen = 0u64;
    for &a in counts {
        if seen & a != 0 {
            return false;
        }
        seen |= a;
    }
    true
}

/// The image of a symmetric function in `Λ / I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealIReduced {
    /// `M`-basis, coefficients `1`, every partition with at most one part > 1.
    pub data: SymFn,
}

impl IdealIReduced {
    pub fn partitions(&self) -> impl Iterator<Item = &Partition> {
        self.data.terms().keys()
    }

    pub fn is_zero(&self) -> bool {
        self.data.is_zero()
    }
}

impl fmt::Display for IdealIReduced {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.data)
    }
}

/// Drops every `m_λ` with two parts greater than one and reduces the
/// remaining coefficients mod 2. Coefficients need odd denominators.
pub fn reduce_mod_i(f: &SymFn) -> Result<IdealIReduced, Mod2Error> {
    let m = f.to_basis(Basis::M);
    let mut out = SymFn::zero(Basis::M);
    for (l, c) in m.iter() {
        if l.big_parts() > 1 {
            continue;
        }
        if c.denom().is_even() {
            return Err(Mod2Error::EvenDenominator(format!(
                "{} at m{l}",
                format_rational(c)
            )));
        }
        if c.numer().is_odd() {
            out.add_term(l.clone(), Rational::from_integer(1.into()));
        }
    }
    Ok(IdealIReduced { data: out })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lucas() {
        assert!(!lucas_parity(&[1, 1]));
        assert!(lucas_parity(&[2, 1]));
        assert!(lucas_parity(&[4, 2, 1]));
        assert!(!lucas_parity(&[3, 3, 4]));
        assert!(lucas_parity(&[]));
    }

    #[test]
    fn small_rows() {
        let row = pgk_row(2, 0).unwrap();
        assert_eq!(
            row.odd_partitions,
            BTreeSet::from([Partition::from_parts([2, 1])])
        );
        assert_eq!(
            pgk_row(1, 0).unwrap().odd_partitions,
            BTreeSet::from([Partition::empty()])
        );
        assert!(pgk_row(3, 3).is_err());
    }

    #[test]
    fn reduce_drops_two_big_parts() {
        let f = SymFn::m(&[2, 1]);
        assert!(reduce_mod_i(&(&f * &f)).unwrap().is_zero());
        let g = SymFn::m(&[3, 1]).scale(&Rational::new(3.into(), 5.into()));
        assert_eq!(reduce_mod_i(&g).unwrap().data, SymFn::m(&[3, 1]));
        let h = SymFn::m(&[1]).scale(&Rational::new(1.into(), 2.into()));
        assert!(matches!(
            reduce_mod_i(&h),
            Err(Mod2Error::EvenDenominator(_))
        ));
    }

    #[test]
    fn alpha_genus_two() {
        let c = nilpotency_alpha(2).unwrap();
        assert_eq!(c.witness, Rational::from_integer(3.into()));
        assert!(c.certified());
    }
}
