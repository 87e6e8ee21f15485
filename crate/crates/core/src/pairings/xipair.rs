use super::cn::cn_xi;
use crate::error::PairingError;
use crate::rational::{pow_rat, rat, two_pow};
use crate::symcore::{specialize_ev2, SpecValue};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XipairReport {
    pub g: u32,
    pub holds: bool,
    /// `Σ_{i+j=3g-3} ξ_i ξ_j [N_g] x^i y^j`, read off `CN(Z_g|N_g)`.
    pub lhs: SpecValue,
    /// `g (-1)^{g-1} / 2^{g-1} · (x y^2 + x^2 y)^{g-1}`
    pub rhs: SpecValue,
}

/// Compares the two-variable evaluation of `CN(Z_g|N_g)` with the closed
/// form for pairings of two `ξ` classes.
pub fn xipair_identity(g: u32) -> Result<XipairReport, PairingError> {
    let cn = cn_xi(g, g)?;
    let lhs = specialize_ev2(&cn.data);
    let x = SpecValue::x();
    let y = SpecValue::y();
    let base = &(&x * &(&y * &y)) + &(&(&x * &x) * &y);
    let c = rat(g as i64) * pow_rat(&rat(-1), g - 1) / two_pow(g - 1);
    let rhs = base.pow(g - 1).scale(&c);
    Ok(XipairReport {
        g,
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_genus() {
        for g in 1..=4 {
            let r = xipair_identity(g).unwrap();
            assert!(r.holds, "g = {g}: {} vs {}", r.lhs, r.rhs);
        }
    }
}
