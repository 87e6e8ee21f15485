//! Chern classes of a twist by a line bundle, and the change of generators
//! between the `δ` (resp. `d`) classes and the `ξ` (resp. `z`) classes.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::rational::{binomial_signed, format_rational, pow_rat, rat, Rational};
use crate::symcore::Partition;

/// A polynomial in a degree-two class `a` and indexed classes `c_1, c_2, ...`
/// (`c_0 = 1`). A monomial is `a^p · c_λ`, keyed by `(p, λ)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ClassPoly {
    terms: BTreeMap<(u32, Partition), Rational>,
}

impl ClassPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Partition::empty(), Rational::one())
    }

    /// The class `c_i`; `c_0 = 1`.
    pub fn class(i: u32) -> Self {
        Self::monomial(0, Partition::from_parts([i]), Rational::one())
    }

    /// `a^p`
    pub fn a_pow(p: u32) -> Self {
        Self::monomial(p, Partition::empty(), Rational::one())
    }

    pub fn monomial(a_pow: u32, classes: Partition, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(a_pow, classes, c);
        out
    }

    pub fn add_term(&mut self, a_pow: u32, classes: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (a_pow, classes);
        let e = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, Partition), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a_pow: u32, classes: &Partition) -> Rational {
        self.terms
            .get(&(a_pow, classes.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for ((p, l), v) in &self.terms {
            out.add_term(*p, l.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &ClassPoly) -> Self {
        let mut out = self.clone();
        for ((p, l), v) in &other.terms {
            out.add_term(*p, l.clone(), v.clone());
        }
        out
    }

    pub fn mul(&self, other: &ClassPoly) -> Self {
        let mut out = Self::zero();
        for ((p, l), v) in &self.terms {
            for ((q, m), w) in &other.terms {
                out.add_term(p + q, l.union(m), v * w);
            }
        }
        out
    }

    /// Replaces `a` by `s · c_1`, leaving only indexed classes.
    pub fn substitute_a(&self, s: &Rational) -> Self {
        let mut out = Self::zero();
        for ((p, l), v) in &self.terms {
            let ones = Partition::ones(*p);
            out.add_term(0, l.union(&ones), v * pow_rat(s, *p));
        }
        out
    }
}

impl fmt::Display for ClassPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((p, l), v)| {
                let mut s = format_rational(v);
                if *p > 0 {
                    s.push_str(&format!("*a^{p}"));
                }
                for i in l.parts() {
                    s.push_str(&format!("*c{i}"));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for ClassPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `c_i ↦ Σ_j C(r-j, i-j) (t·a)^{i-j} c_j` for `i = 0 .. values.len()-1`,
/// with the generalized binomial so that `r - j < 0` is allowed.
///
/// `values[0]` must be `1`.
pub fn twist_transform(values: &[ClassPoly], r: i64, t: &Rational) -> Vec<ClassPoly> {
    assert!(
        values.first().is_none_or(|v| *v == ClassPoly::one()),
        "c_0 must be 1"
    );
    (0..values.len())
        .map(|i| {
            let mut acc = ClassPoly::zero();
            for (j, cj) in values.iter().enumerate().take(i + 1) {
                let b = binomial_signed(r - j as i64, (i - j) as u64);
                if b.is_zero() {
                    continue;
                }
                let coeff = Rational::from_integer(b) * pow_rat(t, (i - j) as u32);
                acc = acc.add(&ClassPoly::a_pow((i - j) as u32).mul(cj).scale(&coeff));
            }
            acc
        })
        .collect()
}

/// The generic classes `1, c_1, ..., c_n`.
pub fn generic_classes(n: u32) -> Vec<ClassPoly> {
    std::iter::once(ClassPoly::one())
        .chain((1..=n).map(ClassPoly::class))
        .collect()
}

/// `δ_{g,i}` (equally `d_{g,i}`) for `i = 0..=n` as polynomials in the `ξ`
/// (resp. `z`) classes, with the degree-two class eliminated through
/// `α = -2ξ_1`.
pub fn delta_in_xi(g: u32, n: u32) -> Vec<ClassPoly> {
    let r = 2 * g as i64 - 1;
    twist_transform(&generic_classes(n), r, &Rational::new(1.into(), 2.into()))
        .into_iter()
        .map(|p| p.substitute_a(&rat(-2)))
        .collect()
}

/// `α^{alpha_power} · δ_λ` expanded in the `ξ` classes.
pub fn delta_monomial_in_xi(g: u32, lambda: &Partition, alpha_power: u32) -> ClassPoly {
    let table = delta_in_xi(g, lambda.largest());
    let mut acc = ClassPoly::monomial(
        0,
        Partition::ones(alpha_power),
        pow_rat(&rat(-2), alpha_power),
    );
    for &p in lambda.parts() {
        acc = acc.mul(&table[p as usize]);
    }
    acc
}
