use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::convert;
use super::mono;
use super::partition::Partition;
use crate::error::SymError;
use crate::rational::{format_rational, lcm_denominators, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Monomial symmetric functions `m_λ`.
    M,
    /// Products of elementary symmetric functions `e_λ`.
    E,
    /// Products of complete homogeneous symmetric functions `h_λ`.
    H,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
        }
    }
}

/// A symmetric function with exact rational coefficients in one of the
/// bases `M`, `E`, `H`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymFn {
    basis: Basis,
    terms: BTreeMap<Partition, Rational>,
}

impl SymFn {
    pub fn zero(basis: Basis) -> Self {
        SymFn {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        Self::term(basis, Partition::empty(), Rational::one())
    }

    pub fn constant(basis: Basis, c: Rational) -> Self {
        Self::term(basis, Partition::empty(), c)
    }

    pub fn term(basis: Basis, lambda: Partition, c: Rational) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lambda, c);
        f
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        Self::term(basis, lambda, Rational::one())
    }

    /// `m_λ`
    pub fn m(parts: &[u32]) -> Self {
        Self::basis_element(Basis::M, Partition::from_parts(parts.iter().copied()))
    }

    /// `e_λ`
    pub fn e(parts: &[u32]) -> Self {
        Self::basis_element(Basis::E, Partition::from_parts(parts.iter().copied()))
    }

    /// `h_λ`
    pub fn h(parts: &[u32]) -> Self {
        Self::basis_element(Basis::H, Partition::from_parts(parts.iter().copied()))
    }

    pub fn from_terms(
        basis: Basis,
        terms: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Self {
        let mut f = Self::zero(basis);
        for (p, c) in terms {
            f.add_term(p, c);
        }
        f
    }

    pub(crate) fn from_int_map(
        basis: Basis,
        map: impl IntoIterator<Item = (Partition, BigInt)>,
        denom: &BigInt,
    ) -> Self {
        let terms = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (p, Rational::new(c, denom.clone())))
            .collect();
        SymFn { basis, terms }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, Rational> {
        self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Largest degree present, `None` for zero.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|p| p.size())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|p| p.size());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, degree: u32) -> SymFn {
        SymFn {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() == degree)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SymFn {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        SymFn {
            basis: self.basis,
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&Rational) -> Rational) -> SymFn {
        Self::from_terms(
            self.basis,
            self.terms.iter().map(|(p, c)| (p.clone(), f(c))),
        )
    }

    pub fn checked_add(&self, other: &SymFn) -> Result<SymFn, SymError> {
        if self.basis != other.basis {
            return Err(SymError::BasisMismatch(self.basis, other.basis));
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SymFn) -> Result<SymFn, SymError> {
        self.checked_add(&-other)
    }

    /// Product in the basis shared by both operands. In `E` and `H` the keys
    /// are free monomials, so this is a merge of parts; in `M` it uses the
    /// monomial structure constants.
    pub fn checked_mul(&self, other: &SymFn) -> Result<SymFn, SymError> {
        if self.basis != other.basis {
            return Err(SymError::BasisMismatch(self.basis, other.basis));
        }
        Ok(match self.basis {
            Basis::M => mono::mono_mul_unchecked(self, other),
            Basis::E | Basis::H => free_mul(self, other),
        })
    }

    pub fn pow(&self, n: u32) -> SymFn {
        let mut acc = SymFn::one(self.basis);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_basis(&self, target: Basis) -> SymFn {
        convert::to_basis(self, target)
    }

    /// Common denominator and the integer numerators over it.
    pub(crate) fn integer_form(&self) -> (BigInt, Vec<(&Partition, BigInt)>) {
        let d = lcm_denominators(self.terms.values());
        let v = self
            .terms
            .iter()
            .map(|(p, c)| (p, (c * Rational::from_integer(d.clone())).to_integer()))
            .collect();
        (d, v)
    }
}

/// Multiplication in a free polynomial basis (`E` or `H`).
pub(crate) fn free_mul(a: &SymFn, b: &SymFn) -> SymFn {
    debug_assert_eq!(a.basis, b.basis);
    if a.is_zero() || b.is_zero() {
        return SymFn::zero(a.basis);
    }
    let (da, ia) = a.integer_form();
    let (db, ib) = b.integer_form();
    let mut acc: HashMap<Partition, BigInt> = HashMap::with_capacity(ia.len() * ib.len());
    for (p, x) in &ia {
        for (q, y) in &ib {
            *acc.entry(p.union(q)).or_insert_with(BigInt::zero) += x * y;
        }
    }
    SymFn::from_int_map(a.basis, acc, &(da * db))
}

impl Add for &SymFn {
    type Output = SymFn;
    /// Panics if the bases differ; see [`SymFn::checked_add`].
    fn add(self, rhs: &SymFn) -> SymFn {
        self.checked_add(rhs)
            .expect("adding symmetric functions in different bases")
    }
}

impl Sub for &SymFn {
    type Output = SymFn;
    fn sub(self, rhs: &SymFn) -> SymFn {
        self.checked_sub(rhs)
            .expect("subtracting symmetric functions in different bases")
    }
}

impl Mul for &SymFn {
    type Output = SymFn;
    fn mul(self, rhs: &SymFn) -> SymFn {
        self.checked_mul(rhs)
            .expect("multiplying symmetric functions in different bases")
    }
}

impl Neg for &SymFn {
    type Output = SymFn;
    fn neg(self) -> SymFn {
        SymFn {
            basis: self.basis,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

impl Add for SymFn {
    type Output = SymFn;
    fn add(self, rhs: SymFn) -> SymFn {
        &self + &rhs
    }
}

impl Sub for SymFn {
    type Output = SymFn;
    fn sub(self, rhs: SymFn) -> SymFn {
        &self - &rhs
    }
}

impl Mul for SymFn {
    type Output = SymFn;
    fn mul(self, rhs: SymFn) -> SymFn {
        &self * &rhs
    }
}

impl Neg for SymFn {
    type Output = SymFn;
    fn neg(self) -> SymFn {
        -&self
    }
}

/// Terms in canonical order, e.g. `-m[1,1,1] - 2m[2,1]`; `0` for zero.
impl fmt::Display for SymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sym = self.basis.symbol();
        // descending degree reads more naturally
        let mut first = true;
        let mut by_degree: Vec<(&Partition, &Rational)> = self.terms.iter().collect();
        by_degree.sort_by(|a, b| b.0.size().cmp(&a.0.size()));
        for (p, c) in by_degree {
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if p.is_empty() {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{sym}{p}")?;
            } else if mag.denom().is_one() {
                write!(f, "{}{sym}{p}", format_rational(&mag))?;
            } else {
                write!(f, "({}){sym}{p}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFn<{:?}>({})", self.basis, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn arithmetic_in_free_basis() {
        let a = &SymFn::e(&[1]) + &SymFn::e(&[2]);
        let sq = &a * &a;
        assert_eq!(sq.coeff(&Partition::from_parts([2, 1])), rat(2));
        assert_eq!(sq.len(), 3);
        assert!((&sq - &sq).is_zero());
    }

    #[test]
    fn mismatched_bases_are_rejected() {
        assert_eq!(
            SymFn::e(&[1]).checked_add(&SymFn::m(&[1])),
            Err(SymError::BasisMismatch(Basis::E, Basis::M))
        );
    }

    #[test]
    fn display() {
        let f = &SymFn::m(&[1, 1, 1]).scale(&rat(-1)) - &SymFn::m(&[2, 1]).scale(&rat(2));
        assert_eq!(f.to_string(), "-2m[2,1] - m[1,1,1]");
        assert_eq!(SymFn::zero(Basis::M).to_string(), "0");
    }
}
