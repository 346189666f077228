//! Random certified instances: chains of semidirect products, tensor and E
//! extensions starting from the catalog, followed by a random change of
//! basis. The caller supplies the generator.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::axioms::{check_module, check_rinehart};
use crate::catalog;
use crate::constructions::{e_extension, semidirect, tensor_extension};
use crate::linalg::{unit_vec, Matrix, Vector};
use crate::model::{pairs, AAction, ActionData, PairFamily, RinehartTriple, ThreeLie};
use crate::scalar::Scalar;
use crate::structure::{StructureConstants, Symmetry};

/// Integer matrix with determinant 1, built from a few elementary row
/// operations with small coefficients.
pub fn random_unimodular<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Matrix {
    let mut m = Matrix::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = Scalar::from_int(*[-2i64, -1, 1, 2].choose(rng).expect("nonempty"));
        let rj = m.row(j).to_vec();
        for (col, v) in rj.iter().enumerate() {
            m.add_at(i, col, &(&c * v));
        }
    }
    m
}

/// The same triple in the basis given by the columns of `p`.
pub fn change_basis(t: &RinehartTriple, p: &Matrix) -> RinehartTriple {
    let n = t.dim_l();
    let pinv = p.inverse().expect("change of basis must be invertible");
    let f: Vec<Vector> = (0..n).map(|i| p.col(i)).collect();
    let mut bracket = StructureConstants::new(3, n, Symmetry::Skew);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let v = pinv.apply(&t.l.br(&f[i], &f[j], &f[k]));
                if v.iter().any(|c| !c.is_zero()) {
                    bracket.add(&[i, j, k], &v).expect("dimension");
                }
            }
        }
    }
    let maps = t.alpha.maps.iter().map(|m| pinv.mul(m).mul(p)).collect();
    let mut rho = PairFamily::zero(n, t.dim_a());
    for (i, j) in pairs(n) {
        rho.set(i, j, t.rho.eval(&f[i], &f[j]));
    }
    RinehartTriple::new(ThreeLie { bracket }, t.a.clone(), rho, AAction::new(n, maps).expect("dimension"))
        .expect("dimension")
}

/// `R = F^k` abelian, `β = 0`, only the unit (basis element 0) acting.
pub fn trivial_module(t: &RinehartTriple, k: usize) -> ActionData {
    ActionData::new(t.clone(), ThreeLie::abelian(k), AAction::unit_only(t.dim_a(), k), PairFamily::zero(t.dim_l(), k))
        .expect("dimension")
}

/// An abelian copy of `L` with `β = ad` and the action of `A` on `L`.
pub fn adjoint_module(t: &RinehartTriple) -> ActionData {
    ActionData::new(t.clone(), ThreeLie::abelian(t.dim_l()), t.alpha.clone(), t.l.ad_family()).expect("dimension")
}

/// `A` itself as an abelian algebra acted on by multiplication, with
/// `β = ρ`. The anchor laws of the triple make this a module.
pub fn anchor_module(t: &RinehartTriple) -> ActionData {
    let m = t.dim_a();
    let maps = (0..m).map(|i| t.a.mult_matrix(&unit_vec(m, i))).collect();
    ActionData::new(t.clone(), ThreeLie::abelian(m), AAction::new(m, maps).expect("dimension"), t.rho.clone())
        .expect("dimension")
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub triple: RinehartTriple,
    /// How the instance was built, e.g. `A4 > semidirect(trivial 2) > basis`.
    pub recipe: String,
}

/// A certified triple with `dim L ≤ max_dim`, built by one to three
/// construction steps (semidirect products with trivial, adjoint or anchor
/// modules, tensor and E extensions) from a catalog seed and a final change of basis.
pub fn random_certified<R: Rng + ?Sized>(rng: &mut R, max_dim: usize) -> Instance {
    let seed = *catalog::NAMES.choose(rng).expect("nonempty");
    let mut t = catalog::get(seed).expect("catalog name");
    let mut recipe = seed.to_string();
    let steps = rng.gen_range(1..=3);
    for _ in 0..steps {
        let (n, m) = (t.dim_l(), t.dim_a());
        let mut options: Vec<u8> = Vec::new();
        if n < max_dim {
            options.push(0);
        }
        if 2 * n <= max_dim {
            options.push(1);
        }
        if n * m <= max_dim && m > 1 {
            options.push(2);
        }
        if n + m <= max_dim {
            options.push(3);
            options.push(4);
        }
        let Some(&op) = options.choose(rng) else { break };
        let next = match op {
            0 => {
                let k = rng.gen_range(1..=(max_dim - n).min(2));
                let md = trivial_module(&t, k);
                module_step(&md).map(|s| (s, format!("semidirect(trivial {k})")))
            }
            1 => module_step(&adjoint_module(&t)).map(|s| (s, "semidirect(adjoint)".to_string())),
            2 => tensor_extension(&t).ok().map(|s| (s, "tensor".to_string())),
            3 => module_step(&anchor_module(&t)).map(|s| (s, "semidirect(anchor)".to_string())),
            _ => e_extension(&t).ok().map(|s| (s, "e-extension".to_string())),
        };
        if let Some((s, what)) = next {
            if check_rinehart(&s).passed() {
                t = s;
                recipe.push_str(" > ");
                recipe.push_str(&what);
            }
        }
    }
    let p = random_unimodular(t.dim_l(), rng);
    recipe.push_str(" > basis");
    Instance { triple: change_basis(&t, &p), recipe }
}

fn module_step(md: &ActionData) -> Option<RinehartTriple> {
    if !check_module(md).ok()?.passed() {
        return None;
    }
    semidirect(md).ok().map(|s| s.triple)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn unimodular_is_invertible() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 0..6 {
            let m = random_unimodular(n, &mut rng);
            assert!(m.inverse().is_some());
        }
    }

    #[test]
    fn basis_change_preserves_certification() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let t = catalog::a4();
        let p = random_unimodular(4, &mut rng);
        assert!(check_rinehart(&change_basis(&t, &p)).passed());
    }
}
