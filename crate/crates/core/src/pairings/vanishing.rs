//! Symmetry arguments that force pairings to vanish.

use std::collections::BTreeSet;

use crate::error::PairingError;

fn check(g: u32, set: &BTreeSet<u32>) -> Result<(), PairingError> {
    match set.iter().find(|&&i| i == 0 || i > 2 * g) {
        Some(i) => Err(PairingError::InvalidIndex(format!(
            "{i} is outside 1..={}",
            2 * g
        ))),
        None => Ok(()),
    }
}

/// `K + g`, with indices taken in `1..=2g`.
fn shift(g: u32, set: &BTreeSet<u32>) -> BTreeSet<u32> {
    set.iter().map(|&i| (i + g - 1) % (2 * g) + 1).collect()
}

/// Whether `x · Π_{j∈K} ψ_j [N_g]` vanishes for every invariant `x`,
/// which happens when `K ≠ K + g`.
pub fn psi_classes_vanish(g: u32, k: &BTreeSet<u32>) -> Result<bool, PairingError> {
    check(g, k)?;
    Ok(*k != shift(g, k))
}

/// Whether `x · Π_{j∈J1} b_1^j · Π_{j∈J2} b_2^j [M_g]` is forced to vanish:
/// with `I_i = J_i ∩ (J_i + g)`, this holds when `J1 \ I1 ≠ (J2 \ I2) + g`.
pub fn b_classes_vanish(
    g: u32,
    j1: &BTreeSet<u32>,
    j2: &BTreeSet<u32>,
) -> Result<bool, PairingError> {
    check(g, j1)?;
    check(g, j2)?;
    let unpaired = |j: &BTreeSet<u32>| -> BTreeSet<u32> {
        let shifted = shift(g, j);
        j.difference(&shifted).copied().collect()
    };
    Ok(unpaired(j1) != shift(g, &unpaired(j2)))
}
