//! The exponential specialization `ex`, its refinement `ex̄` that tracks one
//! variable as `x`, and the two-variable evaluation `ev2`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::partition::Partition;
use super::symfn::{Basis, SymFn};
use crate::rational::{factorial_rat, format_rational, Rational};

/// A polynomial in `x` and `y` with rational coefficients, keyed by
/// `(deg_x, deg_y)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SpecValue {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl SpecValue {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    pub fn monomial(i: u32, j: u32, c: Rational) -> Self {
        let mut s = Self::zero();
        s.add_term(i, j, c);
        s
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(i, j), v) in &self.terms {
            out.add_term(i, j, v * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Sets `x = 0`.
    pub fn at_x_zero(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), v) in &self.terms {
            if i == 0 {
                out.add_term(0, j, v.clone());
            }
        }
        out
    }
}

impl Add for &SpecValue {
    type Output = SpecValue;
    fn add(self, rhs: &SpecValue) -> SpecValue {
        let mut out = self.clone();
        for (&(i, j), v) in &rhs.terms {
            out.add_term(i, j, v.clone());
        }
        out
    }
}

impl Sub for &SpecValue {
    type Output = SpecValue;
    fn sub(self, rhs: &SpecValue) -> SpecValue {
        self + &(-rhs)
    }
}

impl Neg for &SpecValue {
    type Output = SpecValue;
    fn neg(self) -> SpecValue {
        self.scale(&-Rational::one())
    }
}

impl Mul for &SpecValue {
    type Output = SpecValue;
    fn mul(self, rhs: &SpecValue) -> SpecValue {
        let mut out = SpecValue::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }
}

impl fmt::Display for SpecValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| {
                let mut s = format_rational(c);
                if i > 0 {
                    s.push_str(&format!("*x^{i}"));
                }
                if j > 0 {
                    s.push_str(&format!("*y^{j}"));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SpecValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    Ex,
    ExBar,
    Ev2,
}

fn inv_fact(n: u32) -> Rational {
    Rational::one() / factorial_rat(n)
}

fn on_monomial(spec: Specialization, lambda: &Partition) -> SpecValue {
    let n = lambda.size();
    match spec {
        Specialization::Ex => {
            if lambda.big_parts() == 0 {
                SpecValue::constant(inv_fact(n))
            } else {
                SpecValue::zero()
            }
        }
        Specialization::ExBar => match lambda.big_parts() {
            0 if n == 0 => SpecValue::one(),
            0 => &SpecValue::monomial(1, 0, inv_fact(n - 1)) + &SpecValue::constant(inv_fact(n)),
            1 => {
                let k = lambda.largest();
                SpecValue::monomial(k, 0, inv_fact(n - k))
            }
            _ => SpecValue::zero(),
        },
        Specialization::Ev2 => match lambda.parts() {
            [] => SpecValue::one(),
            [a] => {
                &SpecValue::monomial(*a, 0, Rational::one())
                    + &SpecValue::monomial(0, *a, Rational::one())
            }
            [a, b] if a == b => SpecValue::monomial(*a, *b, Rational::one()),
            [a, b] => {
                &SpecValue::monomial(*a, *b, Rational::one())
                    + &SpecValue::monomial(*b, *a, Rational::one())
            }
            _ => SpecValue::zero(),
        },
    }
}

fn on_e(spec: Specialization, n: u32) -> SpecValue {
    // e_n = m_(1^n)
    on_monomial(spec, &Partition::ones(n))
}

fn on_h(spec: Specialization, n: u32) -> SpecValue {
    match spec {
        Specialization::Ex => SpecValue::constant(inv_fact(n)),
        Specialization::ExBar => {
            let mut v = SpecValue::constant(inv_fact(n));
            for k in 1..=n {
                v.add_term(k, 0, inv_fact(n - k));
            }
            v
        }
        Specialization::Ev2 => {
            let mut v = SpecValue::zero();
            for a in 0..=n {
                v.add_term(a, n - a, Rational::one());
            }
            v
        }
    }
}

/// Applies a specialization to `f` in any basis.
pub fn specialize(spec: Specialization, f: &SymFn) -> SpecValue {
    let mut out = SpecValue::zero();
    for (lambda, c) in f.iter() {
        let v = match f.basis() {
            Basis::M => on_monomial(spec, lambda),
            Basis::E => lambda
                .parts()
                .iter()
                .fold(SpecValue::one(), |acc, &p| &acc * &on_e(spec, p)),
            Basis::H => lambda
                .parts()
                .iter()
                .fold(SpecValue::one(), |acc, &p| &acc * &on_h(spec, p)),
        };
        out = &out + &v.scale(c);
    }
    out
}

pub fn specialize_ex(f: &SymFn) -> SpecValue {
    specialize(Specialization::Ex, f)
}

pub fn specialize_exbar(f: &SymFn) -> SpecValue {
    specialize(Specialization::ExBar, f)
}

pub fn specialize_ev2(f: &SymFn) -> SpecValue {
    specialize(Specialization::Ev2, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn ex_on_monomials() {
        assert_eq!(
            specialize_ex(&SymFn::m(&[1, 1, 1])).as_constant(),
            Some(ratio(1, 6))
        );
        assert_eq!(specialize_ex(&SymFn::m(&[2, 1])), SpecValue::zero());
    }

    #[test]
    fn exbar_examples() {
        let e2 = specialize_exbar(&SymFn::e(&[2]));
        assert_eq!(e2, &SpecValue::x() + &SpecValue::constant(ratio(1, 2)));
        assert_eq!(specialize_exbar(&SymFn::m(&[2])), SpecValue::x().pow(2));
    }

    #[test]
    fn ev2_examples() {
        assert_eq!(
            specialize_ev2(&SymFn::m(&[3, 3])),
            SpecValue::monomial(3, 3, rat(1))
        );
        assert_eq!(specialize_ev2(&SymFn::e(&[3])), SpecValue::zero());
        assert_eq!(
            specialize_ev2(&SymFn::e(&[1])),
            &SpecValue::x() + &SpecValue::y()
        );
    }

    #[test]
    fn bases_agree() {
        let f = &SymFn::m(&[2, 1, 1]) + &SymFn::m(&[3, 2]).scale(&rat(-3));
        let fe = f.to_basis(Basis::E);
        let fh = f.to_basis(Basis::H);
        for s in [
            Specialization::Ex,
            Specialization::ExBar,
            Specialization::Ev2,
        ] {
            assert_eq!(specialize(s, &f), specialize(s, &fe));
            assert_eq!(specialize(s, &f), specialize(s, &fh));
        }
    }
}
