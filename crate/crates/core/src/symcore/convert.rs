//! Changes of basis between `M`, `E` and `H`.
//!
//! `e_λ → M` comes from a memoized table built one factor at a time with
//! `m_ν · e_k`. `M → E` is triangular: the lexicographically largest `m_λ`
//! in `f` is the leading term of `e_{λ'}`. `E ↔ H` uses the polynomial
//! `W_n` with `h_n = W_n(e)` and, by the involution, `e_n = W_n(h)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::mono::m_times_e;
use super::partition::Partition;
use super::symfn::{free_mul, Basis, SymFn};
use crate::error::SymError;
use crate::rational::Rational;

type Expansion = Arc<Vec<(Partition, BigInt)>>;

fn e_table() -> &'static RwLock<HashMap<Partition, Expansion>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, Expansion>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `e_λ` in the monomial basis. Coefficients count 0-1 matrices with row
/// sums `λ`, so they are nonnegative integers.
pub fn e_in_m(lambda: &Partition) -> Expansion {
    if let Some(hit) = e_table().read().unwrap().get(lambda) {
        return hit.clone();
    }
    let out = if lambda.is_empty() {
        vec![(Partition::empty(), BigInt::one())]
    } else {
        let k = *lambda.parts().last().unwrap();
        let rest = lambda.without_part(k).unwrap();
        let base = e_in_m(&rest);
        let mut acc: HashMap<Partition, BigInt> = HashMap::new();
        for (nu, c) in base.iter() {
            for (mu, d) in m_times_e(nu, k) {
                *acc.entry(mu).or_insert_with(BigInt::zero) += c * d;
            }
        }
        let mut v: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    };
    let out = Arc::new(out);
    e_table()
        .write()
        .unwrap()
        .entry(lambda.clone())
        .or_insert(out)
        .clone()
}

fn e_to_m(f: &SymFn) -> SymFn {
    let (d, ints) = f.integer_form();
    let mut acc: HashMap<Partition, BigInt> = HashMap::new();
    for (lambda, c) in ints {
        for (mu, k) in e_in_m(lambda).iter() {
            *acc.entry(mu.clone()).or_insert_with(BigInt::zero) += &c * k;
        }
    }
    SymFn::from_int_map(Basis::M, acc, &d)
}

fn m_to_e(f: &SymFn) -> SymFn {
    let (d, ints) = f.integer_form();
    let mut rest: BTreeMap<Partition, BigInt> =
        ints.into_iter().map(|(p, c)| (p.clone(), c)).collect();
    let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
    // within each degree the map iterates lexicographically largest first
    while let Some((lambda, c)) = rest.pop_first() {
        let conj = lambda.conjugate();
        for (mu, k) in e_in_m(&conj).iter() {
            if *mu == lambda {
                debug_assert!(k.is_one());
                continue;
            }
            let entry = rest.entry(mu.clone()).or_insert_with(BigInt::zero);
            *entry -= &c * k;
            if entry.is_zero() {
                rest.remove(mu);
            }
        }
        out.insert(conj, c);
    }
    SymFn::from_int_map(Basis::E, out, &d)
}

/// `W_n` as an element of the free ring on generators `g_1, g_2, ...`, tagged
/// with `basis`: `W_n = Σ_{i=1}^{n} (-1)^{i-1} g_i W_{n-i}`.
fn w_poly(n: u32, basis: Basis) -> SymFn {
    let mut w: Vec<SymFn> = vec![SymFn::one(basis)];
    for m in 1..=n {
        let mut acc = SymFn::zero(basis);
        for i in 1..=m {
            let g = SymFn::basis_element(basis, Partition::single(i));
            let t = free_mul(&g, &w[(m - i) as usize]);
            let sign = if i % 2 == 1 {
                Rational::one()
            } else {
                -Rational::one()
            };
            acc = &acc + &t.scale(&sign);
        }
        w.push(acc);
    }
    w.pop().unwrap()
}

fn w_cache(basis: Basis) -> &'static RwLock<HashMap<u32, SymFn>> {
    static E: OnceLock<RwLock<HashMap<u32, SymFn>>> = OnceLock::new();
    static H: OnceLock<RwLock<HashMap<u32, SymFn>>> = OnceLock::new();
    match basis {
        Basis::H => H.get_or_init(Default::default),
        _ => E.get_or_init(Default::default),
    }
}

fn cached_w(n: u32, basis: Basis) -> SymFn {
    if let Some(hit) = w_cache(basis).read().unwrap().get(&n) {
        return hit.clone();
    }
    let w = w_poly(n, basis);
    w_cache(basis)
        .write()
        .unwrap()
        .entry(n)
        .or_insert(w)
        .clone()
}

/// Substitutes `g_n ↦ W_n` (in the opposite basis) into each key.
fn swap_free(f: &SymFn, target: Basis) -> SymFn {
    let mut out = SymFn::zero(target);
    for (lambda, c) in f.iter() {
        let mut prod = SymFn::one(target);
        for &p in lambda.parts() {
            prod = free_mul(&prod, &cached_w(p, target));
        }
        for (p, x) in prod.into_terms() {
            out.add_term(p, x * c);
        }
    }
    out
}

/// The same symmetric function expressed in `target`.
pub fn to_basis(f: &SymFn, target: Basis) -> SymFn {
    use Basis::*;
    match (f.basis(), target) {
        (a, b) if a == b => f.clone(),
        (E, M) => e_to_m(f),
        (M, E) => m_to_e(f),
        (E, H) | (H, E) => swap_free(f, target),
        (H, M) => e_to_m(&swap_free(f, E)),
        (M, H) => swap_free(&m_to_e(f), H),
        _ => unreachable!(),
    }
}

/// `g` with `e_1 · g = f`, for `f` in the `E` basis.
pub fn divide_by_e1(f: &SymFn) -> Result<SymFn, SymError> {
    if f.basis() != Basis::E {
        return Err(SymError::WrongBasis {
            expected: Basis::E,
            found: f.basis(),
        });
    }
    let mut out = SymFn::zero(Basis::E);
    for (lambda, c) in f.iter() {
        match lambda.without_part(1) {
            Some(rest) => out.add_term(rest, c.clone()),
            None => return Err(SymError::NotDivisible),
        }
    }
    Ok(out)
}

/// Multiplies an `E`-basis function by `e_1^k`.
pub fn times_e1_power(f: &SymFn, k: u32) -> SymFn {
    debug_assert_eq!(f.basis(), Basis::E);
    if k == 0 {
        return f.clone();
    }
    let ones = Partition::ones(k);
    SymFn::from_terms(Basis::E, f.iter().map(|(p, c)| (p.union(&ones), c.clone())))
}

/// Largest `k` with `e_1^k` dividing `f` (zero for the zero function).
pub fn e1_valuation(f: &SymFn) -> u32 {
    f.iter().map(|(p, _)| p.multiplicity(1)).min().unwrap_or(0)
}

/// True when every coefficient is an integer.
pub fn is_integral(f: &SymFn) -> bool {
    f.iter().all(|(_, c)| c.denom().is_one())
}
