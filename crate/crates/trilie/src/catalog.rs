//! Built-in examples. Each builder is gated on its checker: an entry that
//! fails its laws is a bug, so the builders panic rather than return it.

use crate::axioms::{check_3lie, check_rinehart};
use crate::linalg::{unit_vec, Matrix};
use crate::model::{AAction, CommAlgebra, PairFamily, RinehartTriple, ThreeLie};
use crate::structure::{StructureConstants, Symmetry};

pub const NAMES: [&str; 3] = ["L0", "A4", "TDER"];

fn admit(name: &str, t: RinehartTriple) -> RinehartTriple {
    let rep = check_rinehart(&t);
    assert!(rep.passed(), "catalog entry {name} fails {:?}", rep.failed_laws());
    t
}

/// Abelian 3-dimensional `L` over the field, zero anchor.
pub fn l0() -> RinehartTriple {
    let t = RinehartTriple::with_zero_anchor(ThreeLie::abelian(3), CommAlgebra::field(), AAction::unit_only(1, 3))
        .expect("dimensions");
    admit("L0", t)
}

/// The simple 4-dimensional 3-Lie algebra with
/// `[e2,e3,e4] = e1, [e1,e3,e4] = e2, [e1,e2,e4] = e3, [e1,e2,e3] = e4`.
pub fn a4_algebra() -> ThreeLie {
    let mut bracket = StructureConstants::new(3, 4, Symmetry::Skew);
    for (idx, out) in [([1, 2, 3], 0), ([0, 2, 3], 1), ([0, 1, 3], 2), ([0, 1, 2], 3)] {
        bracket.add(&idx, &unit_vec(4, out)).expect("dimension");
    }
    let l = ThreeLie { bracket };
    assert!(check_3lie(&l).passed(), "A4 fails the fundamental identity");
    l
}

/// [`a4_algebra`] over the field, zero anchor.
pub fn a4() -> RinehartTriple {
    let t = RinehartTriple::with_zero_anchor(a4_algebra(), CommAlgebra::field(), AAction::unit_only(1, 4))
        .expect("dimensions");
    admit("A4", t)
}

/// `A = F[t]/(t²)`, `L = F²` with zero bracket, `t` acting as zero and
/// `ρ(e1, e2) = t·d/dt` (`1 ↦ 0`, `t ↦ t`).
pub fn tder() -> RinehartTriple {
    let mut rho = PairFamily::zero(2, 2);
    rho.set(0, 1, Matrix::unit(2, 2, 1, 1));
    let t = RinehartTriple::new(ThreeLie::abelian(2), CommAlgebra::truncated_polynomial(2), rho, AAction::unit_only(2, 2))
        .expect("dimensions");
    admit("TDER", t)
}

pub fn get(name: &str) -> Option<RinehartTriple> {
    match name {
        "L0" => Some(l0()),
        "A4" => Some(a4()),
        "TDER" => Some(tder()),
        _ => None,
    }
}

/// One-line description for listings.
pub fn describe(name: &str) -> Option<&'static str> {
    match name {
        "L0" => Some("abelian 3-dimensional L over F, zero anchor"),
        "A4" => Some("simple 4-dimensional 3-Lie algebra over F, zero anchor"),
        "TDER" => Some("F^2 over F[t]/(t^2), zero bracket, anchor t d/dt"),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_is_admitted() {
        for n in NAMES {
            assert!(get(n).is_some());
        }
        assert!(get("nope").is_none());
    }
}
