//! Crossed modules from ideals, central epimorphisms and `L∧L`, and the
//! structure every crossed module induces on `Im ∂` and `Ker ∂`.

use super::wedge::{build_w, quotient_w, wedge_lie_rinehart, RTarget, WBar, WSpace};
use super::{
    certified_triple, certify, classify, quotient_zero_anchor, require_ideal, restrict_triple, Classification,
    ConstructionError,
};
use crate::axioms::{
    check_a_algebra, check_action, check_central_epi, check_crossed_module, check_lie_crossed_module, check_rinehart,
    Law, Report,
};
use crate::linalg::{image, is_zero_vec, nullspace, solve, unit_vec, Matrix, Subspace, Vector};
use crate::model::{
    pairs, AAction, ActionData, CrossedModuleData, LieActionData, LieCrossedModule, LinearFamily, PairFamily,
    RinehartTriple, ThreeLie,
};
use crate::structure::{StructureConstants, Symmetry};

/// `(N, A, ad, i)` for an ideal `N`: the restricted bracket, `β = ad` and
/// `∂` the inclusion.
pub fn crossed_from_ideal(t: &RinehartTriple, n_sub: &Subspace) -> Result<CrossedModuleData, ConstructionError> {
    certified_triple(t)?;
    require_ideal(t, n_sub)?;
    let u = n_sub.basis();
    let s = u.len();
    let n = t.dim_l();
    let coords = |v: &[crate::scalar::Scalar]| n_sub.coordinates(v).expect("ideal is closed");
    let mut bracket = StructureConstants::new(3, s, Symmetry::Skew);
    for a in 0..s {
        for b in a + 1..s {
            for c in b + 1..s {
                let v = coords(&t.l.br(&u[a], &u[b], &u[c]));
                if !is_zero_vec(&v) {
                    bracket.add(&[a, b, c], &v).expect("dimension");
                }
            }
        }
    }
    let maps = t
        .alpha
        .maps
        .iter()
        .map(|m| Matrix::from_cols(s, &u.iter().map(|x| coords(&m.apply(x))).collect::<Vec<_>>()))
        .collect();
    let mut beta = PairFamily::zero(n, s);
    for (x, y) in pairs(n) {
        let cols: Vec<Vector> = u.iter().map(|w| coords(&t.l.br(&unit_vec(n, x), &unit_vec(n, y), w))).collect();
        beta.set(x, y, Matrix::from_cols(s, &cols));
    }
    let partial = Matrix::from_cols(n, u);
    let action = ActionData::new(t.clone(), ThreeLie { bracket }, AAction::new(s, maps)?, beta)?;
    Ok(CrossedModuleData::new(action, partial)?)
}

/// `β(x, y)r = [r1, r2, r]` with `∂r1 = x`, `∂r2 = y`.
///
/// Preimages are the particular solutions with free variables zero. A
/// second set of preimages, shifted by kernel vectors, must give the same
/// `β`; otherwise the result depends on the choice and an error is returned.
pub fn crossed_from_central_epi(
    partial: &Matrix,
    r_triple: &RinehartTriple,
    l_triple: &RinehartTriple,
) -> Result<CrossedModuleData, ConstructionError> {
    certify(&check_central_epi(partial, r_triple, l_triple)?, "the map is not a central epimorphism")?;
    let n = l_triple.dim_l();
    let k = r_triple.dim_l();
    let kernel = nullspace(partial);
    let pre: Vec<Vector> = (0..n)
        .map(|x| solve(partial, &unit_vec(n, x)).expect("surjective"))
        .collect();
    let shifted: Vec<Vector> = pre
        .iter()
        .enumerate()
        .map(|(x, r)| {
            let mut r = r.clone();
            for (i, kv) in kernel.basis().iter().enumerate() {
                let c = crate::scalar::Scalar::from_int((x + i + 1) as i64);
                for (o, v) in r.iter_mut().zip(kv) {
                    *o += &(&c * v);
                }
            }
            r
        })
        .collect();
    let rl = &r_triple.l;
    let mut beta = PairFamily::zero(n, k);
    for (x, y) in pairs(n) {
        let b = rl.ad(&pre[x], &pre[y]);
        let b2 = rl.ad(&shifted[x], &shifted[y]);
        if b != b2 {
            return Err(ConstructionError::WellDefinednessFailure(format!(
                "β(e{}, e{}) changes with the preimage",
                x + 1,
                y + 1
            )));
        }
        beta.set(x, y, b);
    }
    let action = ActionData::new(l_triple.clone(), rl.clone(), r_triple.alpha.clone(), beta)?;
    Ok(CrossedModuleData::new(action, partial.clone())?)
}

/// The crossed module of `W̄(L, L∧L, A)` on the Lie A-algebra `L∧L`.
#[derive(Debug, Clone)]
pub struct CrossedWedge {
    pub cm: LieCrossedModule,
    pub wbar: WBar,
    pub report: Report,
    pub kernel: Subspace,
    /// Center of the Lie algebra `L∧L`.
    pub center: Subspace,
    pub kernel_is_center: bool,
}

/// Requires `ρ(x,y)(a)·z = 0` for all basis elements.
pub fn crossed_wedge(t: &RinehartTriple) -> Result<CrossedWedge, ConstructionError> {
    certified_triple(t)?;
    let (n, m) = (t.dim_l(), t.dim_a());
    for (x, y) in pairs(n) {
        let r = t.rho.get(x, y);
        for a in 0..m {
            let op = t.alpha.op(&r.col(a));
            if let Some(z) = (0..n).find(|&z| !is_zero_vec(&op.col(z))) {
                return Err(ConstructionError::HypothesisViolated(format!(
                    "ρ(e{}, e{})(a{})·e{} is not zero",
                    x + 1,
                    y + 1,
                    a + 1,
                    z + 1
                )));
            }
        }
    }
    let (_, wp) = wedge_lie_rinehart(t)?;
    let r = wp.g.clone();
    let alpha_r = wp.alpha.clone();
    let ws: WSpace = build_w(t, &RTarget::Lie(r.clone()), &alpha_r)?;
    let wbar = quotient_w(&ws)?;
    let d = r.dim();
    let beta = LinearFamily { target: d, maps: (0..wbar.dim()).map(|a| wbar.phi_of(&unit_vec(wbar.dim(), a))).collect() };
    let zero_w = vec![crate::scalar::Scalar::zero(); d];
    let mut cols = Vec::with_capacity(d);
    for q in 0..d {
        let ad = r.ad(&unit_vec(d, q));
        let c = wbar
            .class_of(&ad, &zero_w)
            .ok_or_else(|| ConstructionError::NotWellDefined(format!("(Ad(w{}), 0) is not in W", q + 1)))?;
        cols.push(c);
    }
    let partial = Matrix::from_cols(wbar.dim(), &cols);
    let action = LieActionData::new(wbar.pair.clone(), r.clone(), alpha_r, beta)?;
    let cm = LieCrossedModule::new(action, partial)?;
    let report = check_lie_crossed_module(&cm)?;
    let kernel = nullspace(&cm.partial);
    let mut rows: Vec<Vector> = Vec::new();
    for s in 0..d {
        // r ↦ [r, e_s]
        let cols: Vec<Vector> = (0..d).map(|q| r.br_basis(q, s)).collect();
        let mm = Matrix::from_cols(d, &cols);
        rows.extend((0..d).map(|i| mm.row(i).to_vec()));
    }
    let center = nullspace(&Matrix::from_rows(d, &rows));
    let kernel_is_center = kernel == center;
    Ok(CrossedWedge { cm, wbar, report, kernel, center, kernel_is_center })
}

/// What a crossed module induces on `Im ∂`, `Coker ∂` and `Ker ∂`.
#[derive(Debug, Clone)]
pub struct CrossedAnalysis {
    pub image: Subspace,
    pub image_class: Classification,
    /// `L/Im ∂` with zero anchor, when `Im ∂` is a hypo-ideal.
    pub coker: Option<RinehartTriple>,
    /// Laws of `Coker ∂` as a 3-Lie A-algebra.
    pub coker_report: Option<Report>,
    pub kernel: Subspace,
    /// `Ker ∂` is an ideal of `(R, A)` with `[Ker, Ker, R] = 0`.
    pub kernel_report: Report,
    /// `β` restricted to `Im ∂` acting on `Ker ∂`.
    pub restriction_report: Option<Report>,
}

impl CrossedAnalysis {
    pub fn report(&self) -> Report {
        let mut r = self.kernel_report.clone();
        if let Some(c) = &self.coker_report {
            r.extend(c.clone().prefixed("coker"));
        }
        if let Some(c) = &self.restriction_report {
            r.extend(c.clone().prefixed("restriction"));
        }
        r
    }
}

pub fn crossed_analysis(cm: &CrossedModuleData) -> Result<CrossedAnalysis, ConstructionError> {
    certify(&check_crossed_module(cm)?, "the crossed module is not certified")?;
    let t = &cm.action.source;
    let r = &cm.action.r;
    let k = r.dim();
    let img = image(&cm.partial);
    let image_class = classify(t, &img);
    let (coker, coker_report) = if image_class.hypo_ideal() {
        let q = quotient_zero_anchor(t, &img)?;
        let rep = check_a_algebra(&q.l, &q.a, &q.alpha)?;
        (Some(q), Some(rep))
    } else {
        (None, None)
    };
    let kernel = nullspace(&cm.partial);
    let kb = kernel.basis();
    let mut ideal = Law::new("kernel.ideal", "k, r1<r2");
    let mut stable = Law::new("kernel.a_stable", "a, k");
    let mut abelian = Law::new("kernel.abelian", "k1<k2, r");
    for (i, u) in kb.iter().enumerate() {
        for r1 in 0..k {
            for r2 in r1 + 1..k {
                ideal.record(&[i, r1, r2], kernel.reduce(&r.br(u, &unit_vec(k, r1), &unit_vec(k, r2))));
            }
        }
        for (a, mm) in cm.action.alpha_r.maps.iter().enumerate() {
            stable.record(&[a, i], kernel.reduce(&mm.apply(u)));
        }
        for (j, w) in kb.iter().enumerate().skip(i + 1) {
            for s in 0..k {
                abelian.record(&[i, j, s], r.br(u, w, &unit_vec(k, s)));
            }
        }
    }
    let kernel_report = Report::new(vec![ideal.done(), stable.done(), abelian.done()]);
    let restriction_report = if kernel_report.passed() && classify(t, &img).subalgebra() {
        Some(restricted_action(cm, &img, &kernel)?)
    } else {
        None
    };
    Ok(CrossedAnalysis { image: img, image_class, coker, coker_report, kernel, kernel_report, restriction_report })
}

/// `β(Im ∂, Im ∂)` acting on `Ker ∂`, checked as an action of the
/// subalgebra `Im ∂`.
fn restricted_action(cm: &CrossedModuleData, img: &Subspace, kernel: &Subspace) -> Result<Report, ConstructionError> {
    let t = &cm.action.source;
    let src = restrict_triple(t, img)?;
    let r = &cm.action.r;
    let kb = kernel.basis();
    let s = kb.len();
    let mut closure = Law::new("restriction.closure", "i<j, k");
    let ib = img.basis();
    let mut beta = PairFamily::zero(ib.len(), s);
    for (i, j) in pairs(ib.len()) {
        let b = cm.action.beta.eval(&ib[i], &ib[j]);
        let mut cols = Vec::with_capacity(s);
        for (q, u) in kb.iter().enumerate() {
            let v = b.apply(u);
            closure.record(&[i, j, q], kernel.reduce(&v));
            cols.push(kernel.coordinates(&v).unwrap_or_else(|| vec![crate::scalar::Scalar::zero(); s]));
        }
        beta.set(i, j, Matrix::from_cols(s, &cols));
    }
    let closure = closure.done();
    if !closure.passed {
        return Ok(Report::new(vec![closure]));
    }
    let mut kbracket = StructureConstants::new(3, s, Symmetry::Skew);
    for a in 0..s {
        for b in a + 1..s {
            for c in b + 1..s {
                let v = kernel.coordinates(&r.br(&kb[a], &kb[b], &kb[c])).unwrap_or_else(|| vec![crate::scalar::Scalar::zero(); s]);
                if !is_zero_vec(&v) {
                    kbracket.add(&[a, b, c], &v).expect("dimension");
                }
            }
        }
    }
    let maps = cm
        .action
        .alpha_r
        .maps
        .iter()
        .map(|mm| {
            let cols: Vec<Vector> = kb
                .iter()
                .map(|u| kernel.coordinates(&mm.apply(u)).unwrap_or_else(|| vec![crate::scalar::Scalar::zero(); s]))
                .collect();
            Matrix::from_cols(s, &cols)
        })
        .collect();
    let src_report = check_rinehart(&src);
    if !src_report.passed() {
        let mut rep = Report::new(vec![closure]);
        rep.extend(src_report.prefixed("source"));
        return Ok(rep);
    }
    let ad = ActionData::new(src, ThreeLie { bracket: kbracket }, AAction::new(s, maps)?, beta)?;
    let mut rep = check_action(&ad)?;
    rep.extend(Report::new(vec![closure]));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::Subspace;

    #[test]
    fn zero_ideal_crossed_module() {
        let t = catalog::a4();
        let cm = crossed_from_ideal(&t, &Subspace::zero(4)).unwrap();
        assert!(check_crossed_module(&cm).unwrap().passed());
        let an = crossed_analysis(&cm).unwrap();
        assert!(an.image.is_zero() && an.kernel.is_zero());
        assert_eq!(an.coker.as_ref().unwrap().dim_l(), 4);
    }

    #[test]
    fn identity_epi_gives_ad() {
        let t = catalog::a4();
        let cm = crossed_from_central_epi(&Matrix::identity(4), &t, &t).unwrap();
        assert_eq!(cm.action.beta, t.l.ad_family());
        assert!(check_crossed_module(&cm).unwrap().passed());
    }

    #[test]
    fn wedge_crossed_modules() {
        for t in [catalog::a4(), catalog::tder(), catalog::l0()] {
            let cw = crossed_wedge(&t).unwrap();
            assert!(cw.report.passed(), "{:?}", cw.report.failed_laws());
            assert!(cw.kernel_is_center);
        }
    }
}
