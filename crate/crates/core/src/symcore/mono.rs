//! Structure constants of the monomial basis.
//!
//! For `m_λ · m_ν` pad both to length `L = l(λ) + l(ν)` with zeros. The
//! coefficient of `m_μ` is the number of ways to write the sorted exponent
//! vector of `μ` as `a + b` with `a` a rearrangement of `λ` and `b` one of
//! `ν`. Grouping the positions of `λ` by value turns this into a sum over
//! contingency tables between the value classes of `λ` and of `ν`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::partition::Partition;
use super::symfn::{Basis, SymFn};
use crate::error::SymError;
use crate::rational::{binomial, factorial};

type Expansion = Arc<Vec<(Partition, BigInt)>>;

fn product_cache() -> &'static RwLock<HashMap<(Partition, Partition), Expansion>> {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, Partition), Expansion>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Value classes of `parts` padded with zeros to length `len`, as
/// `(value, count)` pairs in increasing value order.
fn value_classes(p: &Partition, len: usize) -> Vec<(u32, u32)> {
    let mut v = Vec::new();
    let zeros = (len - p.len()) as u32;
    if zeros > 0 {
        v.push((0, zeros));
    }
    v.extend(p.exponents());
    v
}

/// Coefficients of `m_λ · m_ν` in the monomial basis, memoized.
pub fn monomial_product(lambda: &Partition, nu: &Partition) -> Expansion {
    let key = if lambda <= nu {
        (lambda.clone(), nu.clone())
    } else {
        (nu.clone(), lambda.clone())
    };
    if let Some(hit) = product_cache().read().unwrap().get(&key) {
        return hit.clone();
    }
    let out = Arc::new(compute_product(&key.0, &key.1));
    product_cache()
        .write()
        .unwrap()
        .entry(key)
        .or_insert(out)
        .clone()
}

fn compute_product(lambda: &Partition, nu: &Partition) -> Vec<(Partition, BigInt)> {
    let len = lambda.len() + nu.len();
    let rows = value_classes(lambda, len);
    let cols = value_classes(nu, len);
    let mut forward: BTreeMap<Partition, BigUint> = BTreeMap::new();
    let mut remaining: Vec<u32> = cols.iter().map(|c| c.1).collect();
    let mut parts = Vec::with_capacity(len);
    tables(
        &rows,
        &cols,
        0,
        &mut remaining,
        &mut parts,
        BigUint::one(),
        &mut forward,
    );

    let lambda_orbit: BigUint = rows.iter().map(|&(_, c)| factorial(c)).product();
    forward
        .into_iter()
        .map(|(mu, w)| {
            let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
            for &p in mu.parts() {
                *mult.entry(p).or_default() += 1;
            }
            let zeros = (len - mu.len()) as u32;
            let mu_orbit: BigUint =
                mult.values().map(|&c| factorial(c)).product::<BigUint>() * factorial(zeros);
            (mu, BigInt::from(w * mu_orbit / &lambda_orbit))
        })
        .collect()
}

/// Enumerates tables `k[r][c]` with row sums from `rows` and column sums from
/// `cols`, weighting each by `Π_r c_r! / Π k[r][c]!`.
fn tables(
    rows: &[(u32, u32)],
    cols: &[(u32, u32)],
    r: usize,
    remaining: &mut Vec<u32>,
    parts: &mut Vec<u32>,
    weight: BigUint,
    out: &mut BTreeMap<Partition, BigUint>,
) {
    if r == rows.len() {
        let mu = Partition::from_parts(parts.iter().copied());
        *out.entry(mu).or_insert_with(BigUint::zero) += weight;
        return;
    }
    let count = rows[r].1;
    // distribute `count` positions of this row over the columns
    fn row(
        rows: &[(u32, u32)],
        cols: &[(u32, u32)],
        r: usize,
        c: usize,
        left: u32,
        remaining: &mut Vec<u32>,
        parts: &mut Vec<u32>,
        weight: BigUint,
        out: &mut BTreeMap<Partition, BigUint>,
    ) {
        let value = rows[r].0;
        if c == cols.len() {
            if left == 0 {
                tables(rows, cols, r + 1, remaining, parts, weight, out);
            }
            return;
        }
        let cap: u32 = remaining[c..].iter().sum();
        if cap < left {
            return;
        }
        let max = left.min(remaining[c]);
        for k in 0..=max {
            remaining[c] -= k;
            for _ in 0..k {
                parts.push(value + cols[c].0);
            }
            let w = &weight / factorial(k);
            row(rows, cols, r, c + 1, left - k, remaining, parts, w, out);
            for _ in 0..k {
                parts.pop();
            }
            remaining[c] += k;
        }
    }
    let w = weight * factorial(count);
    row(rows, cols, r, 0, count, remaining, parts, w, out);
}

/// Exact product in the monomial basis.
pub fn mono_mul(a: &SymFn, b: &SymFn) -> Result<SymFn, SymError> {
    for f in [a, b] {
        if f.basis() != Basis::M {
            return Err(SymError::WrongBasis {
                expected: Basis::M,
                found: f.basis(),
            });
        }
    }
    Ok(mono_mul_unchecked(a, b))
}

pub(crate) fn mono_mul_unchecked(a: &SymFn, b: &SymFn) -> SymFn {
    let (da, ia) = a.integer_form();
    let (db, ib) = b.integer_form();
    let mut acc: HashMap<Partition, BigInt> = HashMap::new();
    for (p, x) in &ia {
        for (q, y) in &ib {
            let xy = x * y;
            for (mu, c) in monomial_product(p, q).iter() {
                *acc.entry(mu.clone()).or_insert_with(BigInt::zero) += &xy * c;
            }
        }
    }
    SymFn::from_int_map(Basis::M, acc, &(da * db))
}

/// `m_ν · e_k` in the monomial basis: add one to `k` distinct positions of
/// `ν` padded with zeros. Choosing `t_v` positions from the value class `v`
/// gives coefficient `Π_w C(c'_w, t_{w-1})` where `c'_w` counts the parts
/// equal to `w` in the result.
pub(crate) fn m_times_e(nu: &Partition, k: u32) -> Vec<(Partition, BigInt)> {
    let classes = value_classes(nu, nu.len() + k as usize);
    let mut out = Vec::new();
    let mut t = vec![0u32; classes.len()];
    choose(&classes, 0, k, &mut t, &mut out);
    out
}

fn choose(
    classes: &[(u32, u32)],
    i: usize,
    left: u32,
    t: &mut Vec<u32>,
    out: &mut Vec<(Partition, BigInt)>,
) {
    if i == classes.len() {
        if left > 0 {
            return;
        }
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        let mut raised: BTreeMap<u32, u32> = BTreeMap::new();
        for (&(v, c), &tv) in classes.iter().zip(t.iter()) {
            *counts.entry(v).or_default() += c - tv;
            if tv > 0 {
                *counts.entry(v + 1).or_default() += tv;
                raised.insert(v + 1, tv);
            }
        }
        let coeff: BigUint = raised
            .iter()
            .map(|(w, &tw)| binomial(counts[w] as u64, tw as u64))
            .product();
        let mu = Partition::from_exponents(counts.into_iter().filter(|&(v, _)| v > 0));
        out.push((mu, BigInt::from(coeff)));
        return;
    }
    let cap: u32 = classes[i..].iter().map(|c| c.1).sum();
    if cap < left {
        return;
    }
    for tv in 0..=left.min(classes[i].1) {
        t[i] = tv;
        choose(classes, i + 1, left - tv, t, out);
    }
    t[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, Rational};

    #[test]
    fn square_of_m1() {
        let sq = mono_mul(&SymFn::m(&[1]), &SymFn::m(&[1])).unwrap();
        assert_eq!(sq, &SymFn::m(&[2]) + &SymFn::m(&[1, 1]).scale(&rat(2)));
    }

    #[test]
    fn identity_and_basis_check() {
        let f = SymFn::m(&[2, 1]);
        assert_eq!(mono_mul(&f, &SymFn::one(Basis::M)).unwrap(), f);
        assert!(mono_mul(&f, &SymFn::e(&[1])).is_err());
    }

    #[test]
    fn m11_squared() {
        // m_(1^p) m_(1^q) = C(p+q,p) m_(1^{p+q}) + C(p+q-2,p-1) m_(2,1^{p+q-2}) + ...
        let sq = mono_mul(&SymFn::m(&[1, 1]), &SymFn::m(&[1, 1])).unwrap();
        assert_eq!(sq.coeff(&Partition::ones(4)), rat(6));
        assert_eq!(sq.coeff(&Partition::from_parts([2, 1, 1])), rat(2));
        assert_eq!(sq.coeff(&Partition::from_parts([2, 2])), rat(1));
        assert_eq!(sq.len(), 3);
    }

    #[test]
    fn m_times_e_small() {
        // m_(1) e_1 = m_(2) + 2 m_(1,1)
        let v = m_times_e(&Partition::ones(1), 1);
        let f = SymFn::from_terms(
            Basis::M,
            v.into_iter().map(|(p, c)| (p, Rational::from_integer(c))),
        );
        assert_eq!(f, &SymFn::m(&[2]) + &SymFn::m(&[1, 1]).scale(&rat(2)));
    }
}
