//! Derivation spaces as nullspaces, and the derivation side of semidirect
//! products.
//!
//! Endomorphisms are flattened row by row: the unknown for entry `(i, j)`
//! sits at index `i * cols + j`.

use crate::axioms::{self, check_action, check_homomorphism, check_module, CheckReport, Law, Report};
use crate::constructions::{
    certify, induced_module, projections, semidirect, ConstructionError, Semidirect,
};
use crate::linalg::{is_zero_vec, unit_vec, zero_vec, Matrix, RowReducer, Subspace, Vector};
use crate::model::{ActionData, AAction, LieAlg, PairFamily, RinehartTriple, ThreeLie};
use crate::scalar::Scalar;
use crate::structure::{StructureConstants, Symmetry};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerKind {
    Der,
    DerA,
    DerBeta,
}

/// A space of linear maps `F^cols → F^rows`, stored as a subspace of the
/// flattened matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationSpace {
    pub kind: DerKind,
    pub rows: usize,
    pub cols: usize,
    pub space: Subspace,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn matrices(&self) -> Vec<Matrix> {
        self.space.basis().iter().map(|v| Matrix::from_flat(self.rows, self.cols, v.clone())).collect()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        m.rows() == self.rows && m.cols() == self.cols && self.space.contains(m.flat())
    }
}

fn push_rows(rr: &mut RowReducer, rows: Vec<Vector>) {
    for r in rows {
        if !is_zero_vec(&r) {
            rr.push(r);
        }
    }
}

/// Canonical tuples of a skew product of the given arity.
fn canonical_tuples(n: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if arity == 2 {
        for i in 0..n {
            for j in i + 1..n {
                out.push(vec![i, j]);
            }
        }
    } else {
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    out.push(vec![i, j, k]);
                }
            }
        }
    }
    out
}

/// Rows of the Leibniz system `D[t] = Σ_s [.., D t_s, ..]`.
fn leibniz_rows(sc: &StructureConstants, rr: &mut RowReducer) {
    let n = sc.dim();
    for t in canonical_tuples(n, sc.arity()) {
        let val = sc.basis(&t);
        let mut block = vec![zero_vec(n * n); n];
        for (p, row) in block.iter_mut().enumerate() {
            for (c, vc) in val.iter().enumerate() {
                if !vc.is_zero() {
                    row[p * n + c] += vc;
                }
            }
        }
        for s in 0..t.len() {
            let mut u = t.clone();
            for a in 0..n {
                u[s] = a;
                let Some((neg, v)) = sc.basis_ref(&u) else { continue };
                for (p, vp) in v.iter().enumerate() {
                    if vp.is_zero() {
                        continue;
                    }
                    let c = if neg { vp.clone() } else { -vp };
                    block[p][a * n + t[s]] += &c;
                }
            }
        }
        push_rows(rr, block);
    }
}

/// Rows of `D α(a) = α(a) D` for every basis `a`.
fn commuting_rows(alpha: &AAction, rr: &mut RowReducer) {
    let n = alpha.module_dim();
    for m in &alpha.maps {
        let mut rows = Vec::with_capacity(n * n);
        for p in 0..n {
            for q in 0..n {
                let mut row = zero_vec(n * n);
                for c in 0..n {
                    let a = m.get(c, q);
                    if !a.is_zero() {
                        row[p * n + c] += a;
                    }
                    let b = m.get(p, c);
                    if !b.is_zero() {
                        row[c * n + q] -= b;
                    }
                }
                rows.push(row);
            }
        }
        push_rows(rr, rows);
    }
}

fn der_space(sc: &StructureConstants) -> DerivationSpace {
    let n = sc.dim();
    let mut rr = RowReducer::new(n * n);
    leibniz_rows(sc, &mut rr);
    DerivationSpace { kind: DerKind::Der, rows: n, cols: n, space: rr.kernel() }
}

/// All derivations of a 3-Lie algebra.
pub fn compute_der(l: &ThreeLie) -> DerivationSpace {
    der_space(&l.bracket)
}

/// All derivations of a Lie algebra.
pub fn compute_der_lie(g: &LieAlg) -> DerivationSpace {
    der_space(&g.bracket)
}

/// Derivations of `L` commuting with the action of `A`.
pub fn compute_der_a(t: &RinehartTriple) -> Result<DerivationSpace, ConstructionError> {
    certify(&axioms::check_rinehart(t), "the triple is not a 3-Lie-Rinehart algebra")?;
    let n = t.dim_l();
    let mut rr = RowReducer::new(n * n);
    leibniz_rows(&t.l.bracket, &mut rr);
    commuting_rows(&t.alpha, &mut rr);
    Ok(DerivationSpace { kind: DerKind::DerA, rows: n, cols: n, space: rr.kernel() })
}

/// `ψ: L → R` with `ψ[x,y,z] = β(x,y)ψz + β(y,z)ψx + β(z,x)ψy` and
/// `ψ(ax) = aψ(x)`. Only for abelian `R`, where the condition is linear.
pub fn compute_der_beta(ad: &ActionData) -> Result<DerivationSpace, ConstructionError> {
    if !ad.r.is_abelian() {
        return Err(ConstructionError::NonabelianTarget);
    }
    certify(&check_action(ad)?, "the action is not certified")?;
    let t = &ad.source;
    let (n, k) = (t.dim_l(), ad.r.dim());
    let idx = |r: usize, c: usize| r * n + c;
    let mut rr = RowReducer::new(k * n);
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let val = t.l.br_basis(x, y, z);
                let mut block = vec![zero_vec(k * n); k];
                for (p, row) in block.iter_mut().enumerate() {
                    for (c, vc) in val.iter().enumerate() {
                        if !vc.is_zero() {
                            row[idx(p, c)] += vc;
                        }
                    }
                    for (a, b, w) in [(x, y, z), (y, z, x), (z, x, y)] {
                        let m = ad.beta.get(a, b);
                        for q in 0..k {
                            let e = m.get(p, q);
                            if !e.is_zero() {
                                row[idx(q, w)] -= e;
                            }
                        }
                    }
                }
                push_rows(&mut rr, block);
            }
        }
    }
    for a in 0..t.dim_a() {
        let al = &t.alpha.maps[a];
        let ar = &ad.alpha_r.maps[a];
        let mut rows = Vec::new();
        for p in 0..k {
            for q in 0..n {
                let mut row = zero_vec(k * n);
                for c in 0..n {
                    let e = al.get(c, q);
                    if !e.is_zero() {
                        row[idx(p, c)] += e;
                    }
                }
                for c in 0..k {
                    let e = ar.get(p, c);
                    if !e.is_zero() {
                        row[idx(c, q)] -= e;
                    }
                }
                rows.push(row);
            }
        }
        push_rows(&mut rr, rows);
    }
    Ok(DerivationSpace { kind: DerKind::DerBeta, rows: k, cols: n, space: rr.kernel() })
}

/// `D[x1,…] = Σ [.., D x_s, ..]` on canonical basis tuples, for a square
/// matrix `D` on the carrier of `sc`.
pub fn plain_derivation_law(sc: &StructureConstants, d: &Matrix, id: &str) -> CheckReport {
    let n = sc.dim();
    let cols: Vec<Vector> = (0..n).map(|j| d.col(j)).collect();
    let mut law = Law::new(id, if sc.arity() == 2 { "x<y" } else { "x<y<z" });
    for t in canonical_tuples(n, sc.arity()) {
        let mut defect = d.apply(&sc.basis(&t));
        for s in 0..t.len() {
            let mut args: Vec<Vector> = t.iter().map(|&i| unit_vec(n, i)).collect();
            args[s] = cols[t[s]].clone();
            let refs: Vec<&[Scalar]> = args.iter().map(|v| v.as_slice()).collect();
            let v = sc.eval(&refs).expect("arity");
            for (o, x) in defect.iter_mut().zip(&v) {
                *o -= x;
            }
        }
        law.record(&t, defect);
    }
    law.done()
}

/// `β̄` and `ψ̄` on `L⋉R`, with both conclusions checked: `ψ̄` is a
/// derivation against `β̄`, and `ψ̄` (followed by the inclusion of `R`) is a
/// derivation of the semidirect 3-Lie algebra.
#[derive(Debug, Clone)]
pub struct BarExtension {
    pub semidirect: Semidirect,
    pub action: ActionData,
    pub psi_bar: Matrix,
    pub derivation_report: Report,
    pub plain_report: Report,
}

/// `β̄(x1+r1, x2+r2) = β(x1, x2)` as an action of `L⋉R` on `R`.
pub fn bar_action(ad: &ActionData) -> Result<(Semidirect, ActionData), ConstructionError> {
    let sd = semidirect(ad)?;
    let (n, k) = (sd.dim_l, sd.dim_r);
    let mut beta = PairFamily::zero(n + k, k);
    for ((i, j), m) in ad.beta.entries() {
        beta.set(i, j, m.clone());
    }
    let action = ActionData::new(sd.triple.clone(), ad.r.clone(), ad.alpha_r.clone(), beta)?;
    Ok((sd, action))
}

pub fn bar_extension(psi: &Matrix, ad: &ActionData) -> Result<BarExtension, ConstructionError> {
    certify(&axioms::check_rinehart_derivation(psi, ad)?, "ψ is not a derivation")?;
    let (sd, action) = bar_action(ad)?;
    let (n, k) = (sd.dim_l, sd.dim_r);
    let psi_bar = psi.mul(&projections(&sd)?.0);
    let derivation_report = axioms::derivation_laws(&psi_bar, &action);
    let include = Matrix::from_cols(n + k, &(0..k).map(|r| unit_vec(n + k, n + r)).collect::<Vec<_>>());
    let d = include.mul(&psi_bar);
    let plain_report = Report::new(vec![plain_derivation_law(&sd.triple.l.bracket, &d, "plain.leibniz")]);
    Ok(BarExtension { semidirect: sd, action, psi_bar, derivation_report, plain_report })
}

/// `ψ(x, r)(z + r') = β(z, x)r`, checked against `β̄`.
pub fn inner_psi(x: &[Scalar], r: &[Scalar], ad: &ActionData) -> Result<(Matrix, Report), ConstructionError> {
    if !ad.r.is_abelian() {
        return Err(ConstructionError::NonabelianTarget);
    }
    certify(&check_module(ad)?, "the action is not a module")?;
    let (sd, action) = bar_action(ad)?;
    let (n, k) = (sd.dim_l, sd.dim_r);
    let mut psi = Matrix::zeros(k, n + k);
    for z in 0..n {
        let v = ad.beta.eval(&unit_vec(n, z), x).apply(r);
        for (p, c) in v.into_iter().enumerate() {
            psi.set(p, z, c);
        }
    }
    let report = axioms::derivation_laws(&psi, &action);
    Ok((psi, report))
}

/// `ψ' = ψ∘f`, checked against the module induced by `f`.
pub fn pullback_derivation(
    psi: &Matrix,
    f: &Matrix,
    src: &RinehartTriple,
    ad: &ActionData,
) -> Result<(Matrix, ActionData, Report), ConstructionError> {
    certify(&axioms::check_rinehart_derivation(psi, ad)?, "ψ is not a derivation")?;
    let induced = induced_module(f, src, ad)?;
    let pulled = psi.mul(f);
    let report = axioms::derivation_laws(&pulled, &induced);
    Ok((pulled, induced, report))
}

/// Result of either direction of the correspondence between pairs
/// `(f, ψ')` and homomorphisms `h: L' → L⋉R`.
#[derive(Debug, Clone)]
pub struct HomPair {
    pub f: Matrix,
    pub psi: Matrix,
    pub h: Matrix,
    pub report: Report,
    pub round_trip: bool,
}

/// `h = f + ψ'`. Checks that `h` is a homomorphism, `π∘h = f`, `q∘h = ψ'`,
/// and that splitting `h` again returns the pair.
pub fn pair_to_hom(
    f: &Matrix,
    psi: &Matrix,
    src: &RinehartTriple,
    ad: &ActionData,
) -> Result<HomPair, ConstructionError> {
    certify(&check_homomorphism(f, src, &ad.source)?, "f is not a homomorphism")?;
    let induced = induced_module(f, src, ad)?;
    certify(&axioms::derivation_laws(psi, &induced), "ψ' is not a derivation for the induced module")?;
    let sd = semidirect(ad)?;
    let (pi, _, q) = projections(&sd)?;
    let (n, k) = (sd.dim_l, sd.dim_r);
    let n2 = f.cols();
    let mut h = Matrix::zeros(n + k, n2);
    for c in 0..n2 {
        for r in 0..n {
            h.set(r, c, f.get(r, c).clone());
        }
        for r in 0..k {
            h.set(n + r, c, psi.get(r, c).clone());
        }
    }
    let mut report = check_homomorphism(&h, src, &sd.triple)?;
    let mut law = Law::new("pair.projections", "column");
    for c in 0..n2 {
        let mut d = pi.mul(&h).col(c);
        for (o, x) in d.iter_mut().zip(f.col(c)) {
            *o -= &x;
        }
        let mut e = q.mul(&h).col(c);
        for (o, x) in e.iter_mut().zip(psi.col(c)) {
            *o -= &x;
        }
        d.extend(e);
        law.record(&[c], d);
    }
    report.extend(Report::new(vec![law.done()]));
    let back = hom_to_pair(&h, src, ad)?;
    let round_trip = &back.f == f && &back.psi == psi;
    Ok(HomPair { f: f.clone(), psi: psi.clone(), h, report, round_trip })
}

/// `(π∘h, q∘h)` for a homomorphism `h: L' → L⋉R`, with `q∘h` checked as a
/// derivation for the module induced by `π∘h`, and `h` rebuilt from the pair.
pub fn hom_to_pair(h: &Matrix, src: &RinehartTriple, ad: &ActionData) -> Result<HomPair, ConstructionError> {
    let sd = semidirect(ad)?;
    certify(&check_homomorphism(h, src, &sd.triple)?, "h is not a homomorphism")?;
    let (pi, _, q) = projections(&sd)?;
    let f = pi.mul(h);
    let psi = q.mul(h);
    let induced = induced_module(&f, src, ad)?;
    let mut report = check_homomorphism(&f, src, &ad.source)?;
    report.extend(axioms::derivation_laws(&psi, &induced));
    let (n, k) = (sd.dim_l, sd.dim_r);
    let mut rebuilt = Matrix::zeros(n + k, h.cols());
    for c in 0..h.cols() {
        for r in 0..n {
            rebuilt.set(r, c, f.get(r, c).clone());
        }
        for r in 0..k {
            rebuilt.set(n + r, c, psi.get(r, c).clone());
        }
    }
    let round_trip = &rebuilt == h;
    Ok(HomPair { f, psi, h: h.clone(), report, round_trip })
}

/// The span of the maps `ad(e_i, e_j)` as a Lie algebra under the
/// commutator, with the surjection from `L∧L`.
#[derive(Debug, Clone)]
pub struct InnerDerivations {
    pub space: Subspace,
    pub algebra: LieAlg,
    /// Columns are the coordinates of `ad(e_i, e_j)`, pairs in lexicographic order.
    pub from_wedge: Matrix,
    pub closure: CheckReport,
}

pub fn inner_derivation_algebra(l: &ThreeLie) -> InnerDerivations {
    let n = l.dim();
    let fam = l.ad_family();
    let flats: Vec<Vector> = fam.entries().map(|(_, m)| m.flat().to_vec()).collect();
    let space = Subspace::span(n * n, &flats);
    let d = space.dim();
    let basis: Vec<Matrix> = space.basis().iter().map(|v| Matrix::from_flat(n, n, v.clone())).collect();
    let mut bracket = StructureConstants::new(2, d, Symmetry::Skew);
    for i in 0..d {
        for j in i + 1..d {
            let c = basis[i].commutator(&basis[j]);
            if let Some(coords) = space.coordinates(c.flat()) {
                if !is_zero_vec(&coords) {
                    bracket.add(&[i, j], &coords).expect("dimension");
                }
            }
        }
    }
    let cols: Vec<Vector> = flats.iter().map(|v| space.coordinates(v).expect("spanning vector")).collect();
    let from_wedge = Matrix::from_cols(d, &cols);
    // [ad(x1,y1), ad(x2,y2)] = ad([x1,y1,x2], y2) + ad(x2, [x1,y1,y2])
    let mut law = Law::new("inner.closure", "x1<y1, x2<y2, v");
    let pairs: Vec<(usize, usize)> = fam.entries().map(|(p, _)| p).collect();
    for &(x1, y1) in &pairs {
        for &(x2, y2) in &pairs {
            let lhs = fam.get(x1, y1).commutator(&fam.get(x2, y2));
            let rhs = l
                .ad(&l.br_basis(x1, y1, x2), &unit_vec(n, y2))
                .add(&l.ad(&unit_vec(n, x2), &l.br_basis(x1, y1, y2)));
            let diff = lhs.sub(&rhs);
            for v in 0..n {
                law.record(&[x1, y1, x2, y2, v], diff.col(v));
            }
        }
    }
    InnerDerivations { space, algebra: LieAlg { bracket }, from_wedge, closure: law.done() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn abelian_derivations_are_everything() {
        assert_eq!(compute_der(&ThreeLie::abelian(3)).dim(), 9);
        assert_eq!(compute_der(&ThreeLie::abelian(0)).dim(), 0);
    }

    #[test]
    fn a4_has_six_derivations() {
        let t = catalog::a4();
        let d = compute_der(&t.l);
        assert_eq!(d.dim(), 6);
        for m in d.matrices() {
            assert!(plain_derivation_law(&t.l.bracket, &m, "d").passed);
        }
        assert_eq!(inner_derivation_algebra(&t.l).space.dim(), 6);
    }

    #[test]
    fn tder_der_a_is_all_endomorphisms() {
        assert_eq!(compute_der_a(&catalog::tder()).unwrap().dim(), 4);
    }
}
