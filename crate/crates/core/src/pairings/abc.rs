//! Classes on `N_g` written as polynomials in the Newstead generators
//! `α, β, γ` (degrees 2, 4, 6).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::newstead::pairing_newstead;
use crate::error::PairingError;
use crate::rational::{
    binomial_rational, binomial_signed, format_rational, pow_rat, rat, ratio, Rational,
};

/// `Σ c · α^i β^j γ^k`, keyed by `(i, j, k)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct AbcPoly {
    terms: BTreeMap<(u32, u32, u32), Rational>,
}

impl AbcPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 0, Rational::one())
    }

    pub fn monomial(i: u32, j: u32, k: u32, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(i, j, k, c);
        out
    }

    pub fn add_term(&mut self, i: u32, j: u32, k: u32, c: Rational) {
        add_into(&mut self.terms, (i, j, k), c);
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32, u32), Rational> {
        &self.terms
    }

    pub fn coeff(&self, i: u32, j: u32, k: u32) -> Rational {
        self.terms
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(i, j, k), v) in &self.terms {
            out.add_term(i, j, k, v * c);
        }
        out
    }

    pub fn add(&self, other: &AbcPoly) -> Self {
        let mut out = self.clone();
        for (&(i, j, k), v) in &other.terms {
            out.add_term(i, j, k, v.clone());
        }
        out
    }

    pub fn mul(&self, other: &AbcPoly) -> Self {
        let mut out = Self::zero();
        for (&(i, j, k), v) in &self.terms {
            for (&(a, b, c), w) in &other.terms {
                out.add_term(i + a, j + b, k + c, v * w);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Real degree `2i + 4j + 6k` of each term.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self
            .terms
            .keys()
            .map(|&(i, j, k)| 2 * i + 4 * j + 6 * k)
            .collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Pairs against `[N_g]` term by term.
    pub fn evaluate(&self, g: u32) -> Result<Rational, PairingError> {
        let mut acc = Rational::zero();
        for (&(i, j, k), c) in &self.terms {
            acc += c * pairing_newstead(g, i, j, k)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for AbcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(i, j, k), c)| {
                let mut s = format_rational(c);
                for (sym, e) in [("a", i), ("b", j), ("c", k)] {
                    match e {
                        0 => {}
                        1 => s.push_str(&format!("*{sym}")),
                        _ => s.push_str(&format!("*{sym}^{e}")),
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for AbcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn add_into<K: Ord + Clone>(map: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(key.clone()).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        map.remove(&key);
    }
}

/// Coefficients in `Q[α, β, β^{-1}, γ]`, keyed by `(α, β, γ)` exponents.
type Laurent = BTreeMap<(u32, i64, u32), Rational>;

fn l_mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (&(i, j, k), v) in a {
        for (&(p, q, r), w) in b {
            add_into(&mut out, (i + p, j + q, k + r), v * w);
        }
    }
    out
}

fn l_add(a: &mut Laurent, b: &Laurent, c: &Rational) {
    for (key, v) in b {
        add_into(a, *key, v * c);
    }
}

/// A power series in `x` truncated after `x^n`.
type XSeries = Vec<Laurent>;

fn x_mul(a: &XSeries, b: &XSeries) -> XSeries {
    let n = a.len();
    (0..n)
        .map(|d| {
            let mut acc = Laurent::new();
            for i in 0..=d {
                l_add(&mut acc, &l_mul(&a[i], &b[d - i]), &Rational::one());
            }
            acc
        })
        .collect()
}

fn x_exp(s: &XSeries) -> XSeries {
    assert!(s[0].is_empty(), "exp needs a zero constant term");
    let mut out: XSeries = vec![Laurent::from([((0, 0, 0), Rational::one())])];
    for d in 1..s.len() {
        let mut acc = Laurent::new();
        for k in 1..=d {
            l_add(&mut acc, &l_mul(&s[k], &out[d - k]), &rat(k as i64));
        }
        let mut scaled = Laurent::new();
        l_add(&mut scaled, &acc, &(Rational::one() / rat(d as i64)));
        out.push(scaled);
    }
    out
}

/// `(1 - β x^2)^e` through `x^n`.
fn one_minus_beta_x2(e: &Rational, n: usize) -> XSeries {
    let mut out = vec![Laurent::new(); n + 1];
    for m in 0..=n / 2 {
        let c = binomial_rational(e, m as u32) * pow_rat(&rat(-1), m as u32);
        add_into(&mut out[2 * m], (0, m as i64, 0), c);
    }
    out
}

/// `γ* β^{m-1} c = (2γ + αβ) β^{m-1} c`
fn gamma_star(m: i64, c: Rational) -> Laurent {
    let mut l = Laurent::new();
    add_into(&mut l, (0, m - 1, 1), rat(2) * &c);
    add_into(&mut l, (1, m, 0), c);
    l
}

/// `Σ_{m≥0} β^{m-1} x^{2m+1} / (2m+1)`, multiplied by `γ*`; this is `γ*
/// tanh^{-1}(x√β)/(β√β)`.
fn gamma_star_atanh(n: usize) -> XSeries {
    let mut out = vec![Laurent::new(); n + 1];
    for m in 0..=(n.saturating_sub(1)) / 2 {
        if 2 * m < n {
            out[2 * m + 1] = gamma_star(m as i64, ratio(1, 2 * m as i64 + 1));
        }
    }
    out
}

/// `c · Σ_{m≥0} β^{m-1} x^{2m+1} · (γ^{gamma_pow} α^{alpha_pow})`, i.e. a
/// multiple of `x / (β (1 - β x^2))`.
fn geometric(n: usize, c: &Rational, alpha_pow: u32, gamma_pow: u32, beta_shift: i64) -> XSeries {
    let mut out = vec![Laurent::new(); n + 1];
    for m in 0..=(n.saturating_sub(1)) / 2 {
        if 2 * m < n {
            add_into(
                &mut out[2 * m + 1],
                (alpha_pow, m as i64 - 1 + beta_shift, gamma_pow),
                c.clone(),
            );
        }
    }
    out
}

fn x_sum(parts: &[XSeries]) -> XSeries {
    let n = parts[0].len();
    (0..n)
        .map(|d| {
            let mut acc = Laurent::new();
            for p in parts {
                l_add(&mut acc, &p[d], &Rational::one());
            }
            acc
        })
        .collect()
}

fn to_abc(l: &Laurent) -> Result<AbcPoly, PairingError> {
    let mut out = AbcPoly::zero();
    for (&(i, j, k), c) in l {
        if j < 0 {
            return Err(PairingError::ResidualBetaDenominator(format!(
                "{}*a^{i}*b^{j}*c^{k}",
                format_rational(c)
            )));
        }
        out.add_term(i, j as u32, k, c.clone());
    }
    Ok(out)
}

/// `c(Z_g)_{-2x}` on `N_g` through `x^n`:
/// `(1-βx²)^{g-1/2} · exp(γ* Σ β^{m-1}x^{2m+1}/(2m+1) - 2γ Σ β^{m-1}x^{2m+1})`.
fn zagier_series(g: u32, n: usize) -> Result<Vec<AbcPoly>, PairingError> {
    let atanh = gamma_star_atanh(n);
    let geo = geometric(n, &rat(-2), 0, 1, 0);
    let e1 = x_exp(&atanh);
    let e2 = x_exp(&geo);
    let binom = one_minus_beta_x2(&(rat(g as i64) - ratio(1, 2)), n);
    let series = x_mul(&x_mul(&binom, &e1), &e2);
    series.iter().map(to_abc).collect()
}

/// `c(TN_g)_x` through `x^n`:
/// `(1-βx²)^{g-1} exp(2αx/(1-βx²) + 2γ*(tanh^{-1}(x√β)/(β√β) - x/(β(1-βx²))))`.
fn tangent_series(g: u32, n: usize) -> Result<Vec<AbcPoly>, PairingError> {
    let mut atanh = gamma_star_atanh(n);
    for l in atanh.iter_mut() {
        let mut doubled = Laurent::new();
        l_add(&mut doubled, l, &rat(2));
        *l = doubled;
    }
    let mut pole = vec![Laurent::new(); n + 1];
    for m in 0..=(n.saturating_sub(1)) / 2 {
        if 2 * m < n {
            pole[2 * m + 1] = gamma_star(m as i64, rat(-2));
        }
    }
    let alpha = geometric(n, &rat(2), 1, 0, 1);
    let exponent = x_sum(&[atanh, pole, alpha]);
    let binom = one_minus_beta_x2(&rat(g as i64 - 1), n);
    let series = x_mul(&binom, &x_exp(&exponent));
    series.iter().map(to_abc).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassKind {
    Xi,
    Delta,
    Tangent,
}

/// The degree-`2i` class of the given kind on `N_g` as a polynomial in
/// `α, β, γ`.
pub fn class_in_abc(g: u32, i: u32, which: ClassKind) -> Result<AbcPoly, PairingError> {
    if g == 0 {
        return Err(PairingError::InvalidGenus { g, k: 0 });
    }
    let n = i as usize;
    match which {
        ClassKind::Xi => {
            let z = zagier_series(g, n)?;
            Ok(z[n].scale(&(Rational::one() / pow_rat(&rat(-2), i))))
        }
        ClassKind::Delta => {
            // δ_i = Σ_j C(2g-1-j, i-j) (α/2)^{i-j} ξ_j
            let z = zagier_series(g, n)?;
            let mut acc = AbcPoly::zero();
            for (j, zj) in z.iter().enumerate() {
                let xi = zj.scale(&(Rational::one() / pow_rat(&rat(-2), j as u32)));
                let e = (i as usize - j) as u32;
                let b = binomial_signed(2 * g as i64 - 1 - j as i64, e as u64);
                let c = Rational::from_integer(b) / pow_rat(&rat(2), e);
                acc = acc.add(&AbcPoly::monomial(e, 0, 0, c).mul(&xi));
            }
            Ok(acc)
        }
        ClassKind::Tangent => Ok(tangent_series(g, n)?[n].clone()),
    }
}
