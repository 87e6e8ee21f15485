//! Skew Schur functions from Jacobi–Trudi determinants, Kostka numbers from
//! semistandard tableaux, and the staircase shapes whose skew Schur
//! functions generate `1/Q(T)` and `1/E(T)`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{SchurError, SeriesError};
use crate::rational::rat;
use crate::series::{named_series, SeriesName};
use crate::symcore::{times_e1_power, Basis, Partition, SymFn};

/// The skew diagram `λ/μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, SchurError> {
        if !outer.contains(&inner) {
            return Err(SchurError::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `λ/∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// `λ(n, m) = (n, ..., n, n-1, ..., 2, 1)` with `n` repeated `m` times.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Staircase {
    pub n: u32,
    pub m: u32,
}

impl Staircase {
    pub fn new(n: u32, m: u32) -> Self {
        Staircase { n, m }
    }

    pub fn partition(&self) -> Partition {
        let top = std::iter::repeat_n(self.n, self.m as usize);
        Partition::from_parts(top.chain((1..self.n).rev()))
    }

    pub fn conjugate(&self) -> Partition {
        self.partition().conjugate()
    }

    /// `λ(n, m) / λ(n, 0)`
    pub fn skew(n: u32, m: u32) -> SkewShape {
        SkewShape {
            outer: Staircase::new(n, m).partition(),
            inner: Staircase::new(n, 0).partition(),
        }
    }
}

/// Which Jacobi–Trudi determinant to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JtRoute {
    /// `det(e_{λ'_i - μ'_j + j - i})`
    E,
    /// `det(h_{λ_i - μ_j + j - i})`
    H,
}

/// Entry of a Jacobi–Trudi matrix: `None` is zero, `Some(0)` is one.
type Entry = Option<u32>;

fn jt_matrix(outer: &Partition, inner: &Partition) -> Vec<Vec<Entry>> {
    let k = outer.len();
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let idx = outer.part(i) as i64 - inner.part(j) as i64 + j as i64 - i as i64;
                    (idx >= 0).then_some(idx as u32)
                })
                .collect()
        })
        .collect()
}

/// Laplace expansion along successive rows, memoized on the set of columns
/// still available. Entries are generators of the free ring in `basis`.
fn determinant(matrix: &[Vec<Entry>], basis: Basis) -> SymFn {
    let k = matrix.len();
    assert!(k <= 32, "Jacobi–Trudi matrix too large");
    let mut memo: HashMap<u32, SymFn> = HashMap::new();
    minor(
        matrix,
        basis,
        0,
        if k == 0 { 0 } else { (1u32 << k) - 1 },
        &mut memo,
    )
}

fn minor(
    matrix: &[Vec<Entry>],
    basis: Basis,
    row: usize,
    cols: u32,
    memo: &mut HashMap<u32, SymFn>,
) -> SymFn {
    if row == matrix.len() {
        return SymFn::one(basis);
    }
    if let Some(hit) = memo.get(&cols) {
        return hit.clone();
    }
    let mut acc = SymFn::zero(basis);
    let mut position = 0;
    for j in 0..matrix.len() {
        if cols & (1 << j) == 0 {
            continue;
        }
        if let Some(idx) = matrix[row][j] {
            let rest = minor(matrix, basis, row + 1, cols & !(1 << j), memo);
            if !rest.is_zero() {
                let entry = SymFn::basis_element(basis, Partition::from_parts([idx]));
                let term = &entry * &rest;
                acc = if position % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
        }
        position += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// `s_{λ/μ}` in the monomial basis.
pub fn skew_schur(shape: &SkewShape, via: JtRoute) -> SymFn {
    let det = match via {
        JtRoute::E => determinant(
            &jt_matrix(&shape.outer.conjugate(), &shape.inner.conjugate()),
            Basis::E,
        ),
        JtRoute::H => determinant(&jt_matrix(&shape.outer, &shape.inner), Basis::H),
    };
    det.to_basis(Basis::M)
}

/// Number of semistandard tableaux of the given shape and content.
///
/// A tableau with content `ν` is a chain of shapes growing by a horizontal
/// strip of `ν_i` boxes for each value `i`; the count runs over these chains.
pub fn kostka_ssyt(shape: &SkewShape, content: &Partition) -> Result<BigUint, SchurError> {
    if content.size() != shape.size() {
        return Err(SchurError::SizeMismatch {
            type_size: content.size(),
            shape_size: shape.size(),
        });
    }
    let outer: Vec<u32> = shape.outer.parts().to_vec();
    let start: Vec<u32> = (0..outer.len()).map(|i| shape.inner.part(i)).collect();
    let mut memo = HashMap::new();
    Ok(count_chains(&outer, content.parts(), start, &mut memo))
}

fn count_chains(
    outer: &[u32],
    content: &[u32],
    current: Vec<u32>,
    memo: &mut HashMap<(usize, Vec<u32>), BigUint>,
) -> BigUint {
    let Some((&first, rest)) = content.split_first() else {
        return if current.as_slice() == outer {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    };
    let key = (content.len(), current.clone());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let mut total = BigUint::zero();
    let mut next = current.clone();
    strips(outer, &current, 0, first, &mut next, &mut |grown| {
        total += count_chains(outer, rest, grown.to_vec(), memo);
    });
    memo.insert(key, total.clone());
    total
}

/// Visits every way to add a horizontal strip of `left` boxes to `current`
/// inside `outer`, starting at row `row`. Row `i` may grow up to the old
/// length of row `i-1`, so no two new boxes share a column.
fn strips(
    outer: &[u32],
    current: &[u32],
    row: usize,
    left: u32,
    next: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]),
) {
    if left == 0 {
        visit(next);
        return;
    }
    if row == outer.len() {
        return;
    }
    let cap = if row == 0 {
        outer[0]
    } else {
        outer[row].min(current[row - 1])
    };
    let room = cap.saturating_sub(current[row]);
    let remaining_room: u32 = (row + 1..outer.len())
        .map(|r| {
            let c = outer[r].min(current[r - 1]);
            c.saturating_sub(current[r])
        })
        .sum();
    for add in (0..=room.min(left)).rev() {
        if left - add > remaining_room {
            break;
        }
        next[row] = current[row] + add;
        strips(outer, current, row + 1, left - add, next, visit);
    }
    next[row] = current[row];
}

/// Both sides of the staircase identities at order `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocalReport {
    pub n: u32,
    /// `e_1^{n+1} · Coeff_{T^n} 1/Q(T)`
    pub q_series: SymFn,
    /// `(-1)^n s_{λ(n,3)/λ(n,0)}`
    pub q_schur: SymFn,
    /// `Coeff_{T^n} 1/E(T)`
    pub e_series: SymFn,
    /// `(-1)^n s_{λ(n,2)/λ(n,0)}`
    pub e_schur: SymFn,
}

impl ReciprocalReport {
    pub fn q_holds(&self) -> bool {
        self.q_series == self.q_schur
    }

    pub fn e_holds(&self) -> bool {
        self.e_series == self.e_schur
    }

    pub fn holds(&self) -> bool {
        self.q_holds() && self.e_holds()
    }
}

/// Compares the coefficients of `1/Q(T)` and `1/E(T)` at `T^n` with the
/// staircase skew Schur functions.
pub fn q_reciprocal_identity(n: u32) -> Result<ReciprocalReport, SeriesError> {
    let trunc = n as usize + 1;
    let sign = if n.is_multiple_of(2) { rat(1) } else { rat(-1) };
    let q_inv = named_series(SeriesName::Q, trunc)?.reciprocal()?;
    let c = q_inv.coeff(n as usize)?;
    let q_series = if c.e1_power() <= n + 1 {
        times_e1_power(c.numerator(), n + 1 - c.e1_power()).to_basis(Basis::M)
    } else {
        return Err(SeriesError::NonIntegralCoefficient {
            order: n as usize,
            power: c.e1_power() - n - 1,
        });
    };
    let e_inv = named_series(SeriesName::E, trunc)?.reciprocal()?;
    let e_series = e_inv.coeff_integral(n as usize)?.to_basis(Basis::M);
    Ok(ReciprocalReport {
        n,
        q_series,
        q_schur: skew_schur(&Staircase::skew(n, 3), JtRoute::E).scale(&sign),
        e_series,
        e_schur: skew_schur(&Staircase::skew(n, 2), JtRoute::E).scale(&sign),
    })
}
