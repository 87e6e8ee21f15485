//! Intersection pairings on `N_g` and `M_g`.
//!
//! The central objects are Chern number polynomials: symmetric functions
//! whose `m_λ` coefficient is the pairing of the class monomial indexed by
//! `λ`. Everything else (twisted classes, Newstead monomials, tangent Chern
//! numbers) is derived from these or checked against them.

mod abc;
mod b1;
mod bernoulli;
mod cn;
mod newstead;
mod twist;
mod vanishing;
mod xipair;

use std::sync::atomic::{AtomicU32, Ordering};

use crate::error::PairingError;

pub use abc::{class_in_abc, AbcPoly, ClassKind};
pub use b1::{b1_pairing, mrec_prediction, B1Report};
pub use bernoulli::{bernoulli, BernoulliTable};
pub use cn::{
    cn_d, cn_delta, cn_tangent, cn_xi, cn_z, d_pairing, delta_pairing, twisted_pairing,
    ClassFamily, CnPolynomial, Space,
};
pub use newstead::{pairing_ab, pairing_newstead};
pub use twist::{delta_in_xi, delta_monomial_in_xi, generic_classes, twist_transform, ClassPoly};
pub use vanishing::{b_classes_vanish, psi_classes_vanish};
pub use xipair::{xipair_identity, XipairReport};

static N_LIMIT: AtomicU32 = AtomicU32::new(8);
static M_LIMIT: AtomicU32 = AtomicU32::new(6);

/// Largest genus accepted for computations on `N_g` and on `M_g`.
pub fn limits() -> (u32, u32) {
    (
        N_LIMIT.load(Ordering::Relaxed),
        M_LIMIT.load(Ordering::Relaxed),
    )
}

/// Overrides the resource guard. The defaults are 8 for `N_g` and 6 for `M_g`.
pub fn set_limits(n_space: u32, m_space: u32) {
    N_LIMIT.store(n_space, Ordering::Relaxed);
    M_LIMIT.store(m_space, Ordering::Relaxed);
}

pub(crate) fn guard(space: Space, g: u32) -> Result<(), PairingError> {
    let (n, m) = limits();
    let limit = match space {
        Space::N | Space::Tangent => n,
        Space::M => m,
    };
    if g > limit {
        return Err(PairingError::GenusOutOfRange {
            space: space.name(),
            genus: g,
            limit,
        });
    }
    Ok(())
}

pub(crate) fn check_genus_pair(g: u32, k: u32) -> Result<(), PairingError> {
    if k == 0 || k > g {
        return Err(PairingError::InvalidGenus { g, k });
    }
    Ok(())
}
