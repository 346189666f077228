//! `L∧L` as a Lie-Rinehart algebra and the algebras `W(L,R,A)` built on it.
//!
//! `Λ²L` has basis `e_i∧e_j` (`i<j`, lexicographic). `J` is the joint kernel
//! of the lifted maps `x∧y ↦ ad(x,y)` and `x∧y ↦ ρ(x,y)`; everything on the
//! wedge side lives on `Λ²L/J` in the coordinates of [`quotient_basis`].

use super::{certified_triple, certify, ConstructionError};
use crate::axioms::{
    check_a_algebra, check_lie_action, check_lie_a_algebra, check_lie_rinehart, check_lie_rinehart_hom, CheckReport,
    Law, Report,
};
use crate::derivations::{compute_der, compute_der_lie, DerivationSpace};
use crate::linalg::{is_zero_vec, nullspace, quotient_basis, unit_vec, zero_vec, Matrix, Quotient, Subspace, Vector};
use crate::model::{pairs, AAction, LieActionData, LieAlg, LieRinehartPair, LinearFamily, RinehartTriple, ThreeLie};
use crate::scalar::Scalar;
use crate::structure::{StructureConstants, Symmetry};

/// Coordinates of `u∧v` in `Λ²`.
pub fn wedge_vec(u: &[Scalar], v: &[Scalar]) -> Vector {
    let n = u.len();
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for (i, j) in pairs(n) {
        out.push(&(&u[i] * &v[j]) - &(&u[j] * &v[i]));
    }
    out
}

fn add_into(out: &mut [Scalar], v: &[Scalar]) {
    for (o, x) in out.iter_mut().zip(v) {
        *o += x;
    }
}

/// Bracket and action on all of `Λ²L`, before passing to the quotient.
struct Lifted<'a> {
    t: &'a RinehartTriple,
    pairs: Vec<(usize, usize)>,
}

impl<'a> Lifted<'a> {
    fn new(t: &'a RinehartTriple) -> Self {
        Lifted { t, pairs: pairs(t.dim_l()).collect() }
    }

    fn dim(&self) -> usize {
        self.pairs.len()
    }

    /// `[x∧y, x'∧y'] = [x,y,x']∧y' + x'∧[x,y,y']`
    fn bracket_basis(&self, p: usize, q: usize) -> Vector {
        let n = self.t.dim_l();
        let (i, j) = self.pairs[p];
        let (k, l) = self.pairs[q];
        let mut out = wedge_vec(&self.t.l.br_basis(i, j, k), &unit_vec(n, l));
        add_into(&mut out, &wedge_vec(&unit_vec(n, k), &self.t.l.br_basis(i, j, l)));
        out
    }

    fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.dim());
        for (p, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (q, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (o, x) in out.iter_mut().zip(self.bracket_basis(p, q)) {
                    *o += &(&ab * &x);
                }
            }
        }
        out
    }

    /// `b·(x∧y) = ½((bx)∧y + x∧(by))` as a matrix on `Λ²L`.
    fn action(&self, m: &Matrix) -> Matrix {
        let n = self.t.dim_l();
        let half = Scalar::new(1, 2);
        let cols: Vec<Vector> = self
            .pairs
            .iter()
            .map(|&(i, j)| {
                let mut v = wedge_vec(&m.col(i), &unit_vec(n, j));
                add_into(&mut v, &wedge_vec(&unit_vec(n, i), &m.col(j)));
                v.iter().map(|c| c * &half).collect()
            })
            .collect();
        Matrix::from_cols(self.dim(), &cols)
    }
}

/// `Λ²L`, the subspace `J` and the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeSpace {
    pub n: usize,
    pub j: Subspace,
    /// Kernel of the lifted `ad` alone.
    pub ad_kernel: Subspace,
    pub quotient: Quotient,
    /// Laws showing that the bracket and action descend to `Λ²L/J`.
    pub descent: Report,
    /// `(bx)∧(b'y) + (b'x)∧(by) = (b'bx)∧y + x∧(b'by)` modulo `J`.
    pub auxiliary: CheckReport,
}

impl WedgeSpace {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// True when `J` is strictly smaller than the kernel of `ad` alone.
    pub fn j_differs(&self) -> bool {
        self.j != self.ad_kernel
    }

    /// Class of `u∧v` in the quotient.
    pub fn class_of(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        self.quotient.project.apply(&wedge_vec(u, v))
    }
}

/// `(Λ²L/J, ρ₂)` with the bracket `[x∧y, x'∧y'] = [x,y,x']∧y' + x'∧[x,y,y']`,
/// the action `b·(x∧y) = ½((bx)∧y + x∧(by))` and `ρ₂(x∧y) = ρ(x,y)`.
pub fn wedge_lie_rinehart(t: &RinehartTriple) -> Result<(WedgeSpace, LieRinehartPair), ConstructionError> {
    certified_triple(t)?;
    let (n, m) = (t.dim_l(), t.dim_a());
    let lifted = Lifted::new(t);
    let big = lifted.dim();
    let cols_ad: Vec<Vector> = lifted.pairs.iter().map(|&(i, j)| t.l.ad_basis(i, j).flat().to_vec()).collect();
    let cols_joint: Vec<Vector> = lifted
        .pairs
        .iter()
        .zip(&cols_ad)
        .map(|(&(i, j), ad)| {
            let mut v = ad.clone();
            v.extend(t.rho.get(i, j).flat().iter().cloned());
            v
        })
        .collect();
    let ad_kernel = nullspace(&Matrix::from_cols(n * n, &cols_ad));
    let j = nullspace(&Matrix::from_cols(n * n + m * m, &cols_joint));
    let q = quotient_basis(&j);
    let actions: Vec<Matrix> = t.alpha.maps.iter().map(|a| lifted.action(a)).collect();

    let mut jb = Law::new("wedge.j-bracket", "k, p");
    let mut skew = Law::new("wedge.skew", "p<=q");
    let mut ja = Law::new("wedge.j-action", "k, b");
    for (k, kappa) in j.basis().iter().enumerate() {
        for p in 0..big {
            let e = unit_vec(big, p);
            let mut d = q.project.apply(&lifted.bracket(kappa, &e));
            d.extend(q.project.apply(&lifted.bracket(&e, kappa)));
            jb.record(&[k, p], d);
        }
        for (b, a) in actions.iter().enumerate() {
            ja.record(&[k, b], q.project.apply(&a.apply(kappa)));
        }
    }
    for p in 0..big {
        for r in p..big {
            let mut s = lifted.bracket_basis(p, r);
            add_into(&mut s, &lifted.bracket_basis(r, p));
            skew.record(&[p, r], q.project.apply(&s));
        }
    }
    let descent = Report::new(vec![jb.done(), skew.done(), ja.done()]);
    if let Some(c) = descent.checks.iter().find(|c| !c.passed) {
        let w = &c.witnesses[0];
        return Err(ConstructionError::JDescentFailure(format!("{} fails at {:?}", c.law, w.tuple)));
    }

    let mut aux = Law::new("wedge.auxiliary", "x<y, b, b'");
    for x in 0..n {
        for y in x + 1..n {
            let (ex, ey) = (unit_vec(n, x), unit_vec(n, y));
            for b in 0..m {
                for b2 in 0..m {
                    let (ab, ab2) = (&t.alpha.maps[b], &t.alpha.maps[b2]);
                    let prod = t.alpha.op(&t.a.mul_basis(b2, b));
                    let mut d = wedge_vec(&ab.col(x), &ab2.col(y));
                    add_into(&mut d, &wedge_vec(&ab2.col(x), &ab.col(y)));
                    for (o, v) in d.iter_mut().zip(wedge_vec(&prod.col(x), &ey)) {
                        *o -= &v;
                    }
                    for (o, v) in d.iter_mut().zip(wedge_vec(&ex, &prod.col(y))) {
                        *o -= &v;
                    }
                    aux.record(&[x, y, b, b2], q.project.apply(&d));
                }
            }
        }
    }

    let d = q.dim();
    let reps = &q.reps;
    let mut bracket = StructureConstants::new(2, d, Symmetry::Skew);
    for a in 0..d {
        for b in a + 1..d {
            let v = q.project.apply(&lifted.bracket_basis(reps[a], reps[b]));
            if !is_zero_vec(&v) {
                bracket.add(&[a, b], &v).expect("dimension");
            }
        }
    }
    let lift = q.lift_matrix();
    let maps = actions.iter().map(|a| q.project.mul(a).mul(&lift)).collect();
    let rho = LinearFamily {
        target: m,
        maps: reps
            .iter()
            .map(|&r| {
                let (i, jj) = lifted.pairs[r];
                t.rho.get(i, jj)
            })
            .collect(),
    };
    let pair = LieRinehartPair::new(LieAlg { bracket }, t.a.clone(), rho, AAction::new(d, maps)?)?;
    let ws = WedgeSpace { n, j, ad_kernel, quotient: q, descent, auxiliary: aux.done() };
    Ok((ws, pair))
}

/// The algebra acted on by the derivation part of `W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RTarget {
    Three(ThreeLie),
    Lie(LieAlg),
}

impl RTarget {
    pub fn dim(&self) -> usize {
        match self {
            RTarget::Three(r) => r.dim(),
            RTarget::Lie(r) => r.dim(),
        }
    }

    fn der(&self) -> DerivationSpace {
        match self {
            RTarget::Three(r) => compute_der(r),
            RTarget::Lie(r) => compute_der_lie(r),
        }
    }

    /// Flattened inner derivations `ad(r_i, r_j)` or `ad(r_i)`.
    fn inner(&self) -> Vec<Vector> {
        match self {
            RTarget::Three(r) => r.ad_family().entries().map(|(_, m)| m.flat().to_vec()).collect(),
            RTarget::Lie(r) => r.ad_family().maps.iter().map(|m| m.flat().to_vec()).collect(),
        }
    }
}

/// `W(L,R,A)`: pairs `(φ, w)` with `φ ∈ Der(R)`, `w ∈ Λ²L/J` and
/// `φ(br) = bφ(r) + ρ₂(w)(b)r`. Ambient coordinates are `φ` flattened
/// row-major followed by `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WSpace {
    pub wedge: WedgeSpace,
    pub wedge_pair: LieRinehartPair,
    pub target: RTarget,
    pub alpha_r: AAction,
    pub der_r: DerivationSpace,
    pub carrier: Subspace,
    /// The Lie-Rinehart structure on the echelon basis of `carrier`.
    pub pair: LieRinehartPair,
    pub certification: Report,
}

impl WSpace {
    pub fn k(&self) -> usize {
        self.target.dim()
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn split(&self, v: &[Scalar]) -> (Matrix, Vector) {
        let k = self.k();
        (Matrix::from_flat(k, k, v[..k * k].to_vec()), v[k * k..].to_vec())
    }

    pub fn join(phi: &Matrix, w: &[Scalar]) -> Vector {
        let mut v = phi.flat().to_vec();
        v.extend(w.iter().cloned());
        v
    }

    /// Ambient vector of an element given in `W` coordinates.
    pub fn element(&self, coords: &[Scalar]) -> Vector {
        let mut v = zero_vec(self.carrier.ambient_dim());
        for (c, b) in coords.iter().zip(self.carrier.basis()) {
            if !c.is_zero() {
                for (o, x) in v.iter_mut().zip(b) {
                    *o += &(c * x);
                }
            }
        }
        v
    }
}

fn certify_target(target: &RTarget, t: &RinehartTriple, alpha_r: &AAction) -> Result<(), ConstructionError> {
    let rep = match target {
        RTarget::Three(r) => check_a_algebra(r, &t.a, alpha_r)?,
        RTarget::Lie(r) => check_lie_a_algebra(r, &t.a, alpha_r)?,
    };
    certify(&rep, "the target is not an A-algebra")
}

pub fn build_w(t: &RinehartTriple, target: &RTarget, alpha_r: &AAction) -> Result<WSpace, ConstructionError> {
    certified_triple(t)?;
    certify_target(target, t, alpha_r)?;
    let (wedge, wedge_pair) = wedge_lie_rinehart(t)?;
    let der_r = target.der();
    let (k, m, d) = (target.dim(), t.dim_a(), wedge.dim());
    let phis = der_r.matrices();
    let nd = phis.len();
    // one column per unknown, rows indexed by (b, r, output)
    let rows = m * k * k;
    let mut cols: Vec<Vector> = Vec::with_capacity(nd + d);
    for phi in &phis {
        let mut c = Vec::with_capacity(rows);
        for ab in &alpha_r.maps {
            let lhs = phi.mul(ab).sub(&ab.mul(phi));
            for r in 0..k {
                c.extend(lhs.col(r));
            }
        }
        cols.push(c);
    }
    for q in 0..d {
        let rq = &wedge_pair.rho.maps[q];
        let mut c = Vec::with_capacity(rows);
        for b in 0..m {
            let op = alpha_r.op(&rq.col(b));
            for r in 0..k {
                c.extend(op.col(r).into_iter().map(|x| -x));
            }
        }
        cols.push(c);
    }
    let system = Matrix::from_cols(rows, &cols);
    let sols = nullspace(&system);
    let amb: Vec<Vector> = sols
        .basis()
        .iter()
        .map(|s| {
            let mut phi = Matrix::zeros(k, k);
            for (c, p) in s[..nd].iter().zip(&phis) {
                if !c.is_zero() {
                    phi.axpy(c, p);
                }
            }
            WSpace::join(&phi, &s[nd..])
        })
        .collect();
    let carrier = Subspace::span(k * k + d, &amb);
    let dw = carrier.dim();
    let parts: Vec<(Matrix, Vector)> = carrier
        .basis()
        .iter()
        .map(|v| (Matrix::from_flat(k, k, v[..k * k].to_vec()), v[k * k..].to_vec()))
        .collect();
    let coords = |v: Vector, what: &str| {
        carrier
            .coordinates(&v)
            .ok_or_else(|| ConstructionError::DescentFailure(format!("W is not closed under {what}")))
    };
    let mut bracket = StructureConstants::new(2, dw, Symmetry::Skew);
    for a in 0..dw {
        for b in a + 1..dw {
            let phi = parts[a].0.commutator(&parts[b].0);
            let w = wedge_pair.g.br(&parts[a].1, &parts[b].1);
            let c = coords(WSpace::join(&phi, &w), "the bracket")?;
            if !is_zero_vec(&c) {
                bracket.add(&[a, b], &c).expect("dimension");
            }
        }
    }
    let mut maps = Vec::with_capacity(m);
    for c in 0..m {
        let cols = parts
            .iter()
            .map(|(phi, w)| {
                let v = WSpace::join(&alpha_r.maps[c].mul(phi), &wedge_pair.alpha.act_basis(c, w));
                coords(v, "the action of A")
            })
            .collect::<Result<Vec<_>, _>>()?;
        maps.push(Matrix::from_cols(dw, &cols));
    }
    let rho = LinearFamily { target: m, maps: parts.iter().map(|(_, w)| wedge_pair.rho.eval(w)).collect() };
    let pair = LieRinehartPair::new(LieAlg { bracket }, t.a.clone(), rho, AAction::new(dw, maps)?)?;
    let certification = check_lie_rinehart(&pair);
    Ok(WSpace {
        wedge,
        wedge_pair,
        target: target.clone(),
        alpha_r: alpha_r.clone(),
        der_r,
        carrier,
        pair,
        certification,
    })
}

/// The pairs whose derivation part is inner, and whether they form a
/// subalgebra of `W`. Returned in `W` coordinates.
pub fn w_closed_subalgebra(ws: &WSpace) -> (Subspace, CheckReport) {
    let (k, d) = (ws.k(), ws.wedge.dim());
    let mut gens: Vec<Vector> = ws.target.inner().into_iter().map(|f| WSpace::join(&Matrix::from_flat(k, k, f), &zero_vec(d))).collect();
    gens.extend((0..d).map(|q| WSpace::join(&Matrix::zeros(k, k), &unit_vec(d, q))));
    let big = Subspace::span(k * k + d, &gens);
    let inter = big.intersection(&ws.carrier).expect("same ambient");
    let in_w: Vec<Vector> =
        inter.basis().iter().map(|v| ws.carrier.coordinates(v).expect("inside W")).collect();
    let sub = Subspace::span(ws.dim(), &in_w);
    let mut law = Law::new("w.subalgebra-closure", "i<j");
    let sb = sub.basis();
    for i in 0..sb.len() {
        for j in i + 1..sb.len() {
            let v = ws.pair.g.br(&sb[i], &sb[j]);
            law.record(&[i, j], sub.reduce(&v));
        }
    }
    (sub, law.done())
}

/// `W` modulo the pairs with `φ = 0` and `ρ₂(w) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WBar {
    pub w: WSpace,
    /// In `W` coordinates.
    pub kernel: Subspace,
    pub quotient: Quotient,
    pub pair: LieRinehartPair,
    pub descent: Report,
    pub certification: Report,
}

impl WBar {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// `(φ, ρ₂(w))` of a `W` element, flattened.
    fn invariant(w: &WSpace, coords: &[Scalar]) -> Vector {
        let (phi, wv) = w.split(&w.element(coords));
        let mut v = phi.flat().to_vec();
        v.extend(w.wedge_pair.rho.eval(&wv).flat().iter().cloned());
        v
    }

    /// Class of `(φ, w)`, or `None` if the pair is not in `W`.
    pub fn class_of(&self, phi: &Matrix, w: &[Scalar]) -> Option<Vector> {
        let c = self.w.carrier.coordinates(&WSpace::join(phi, w))?;
        Some(self.quotient.project.apply(&c))
    }

    /// `φ` of the canonical representative of a class.
    pub fn phi_of(&self, class: &[Scalar]) -> Matrix {
        let c = self.quotient.lift(class);
        self.w.split(&self.w.element(&c)).0
    }

    /// Kernel of the relation map on `W̄` itself; zero when quotienting
    /// again changes nothing.
    pub fn relation_kernel(&self) -> Subspace {
        let cols: Vec<Vector> = (0..self.dim())
            .map(|a| Self::invariant(&self.w, &self.quotient.lift(&unit_vec(self.dim(), a))))
            .collect();
        let k = self.w.k();
        let rows = k * k + self.w.pair.a.dim().pow(2);
        nullspace(&Matrix::from_cols(rows, &cols))
    }
}

pub fn quotient_w(ws: &WSpace) -> Result<WBar, ConstructionError> {
    let dw = ws.dim();
    let k = ws.k();
    let m = ws.pair.a.dim();
    let cols: Vec<Vector> = (0..dw).map(|a| WBar::invariant(ws, &unit_vec(dw, a))).collect();
    let kernel = nullspace(&Matrix::from_cols(k * k + m * m, &cols));
    let q = quotient_basis(&kernel);
    let g = &ws.pair.g;
    let mut bd = Law::new("wbar.bracket-descent", "k, a");
    let mut ad = Law::new("wbar.action-descent", "k, b");
    for (i, kappa) in kernel.basis().iter().enumerate() {
        for a in 0..dw {
            bd.record(&[i, a], q.project.apply(&g.br(kappa, &unit_vec(dw, a))));
        }
        for (b, mm) in ws.pair.alpha.maps.iter().enumerate() {
            ad.record(&[i, b], q.project.apply(&mm.apply(kappa)));
        }
    }
    let descent = Report::new(vec![bd.done(), ad.done()]);
    if let Some(c) = descent.checks.iter().find(|c| !c.passed) {
        return Err(ConstructionError::DescentFailure(format!("{} fails at {:?}", c.law, c.witnesses[0].tuple)));
    }
    let d = q.dim();
    let reps = q.reps.clone();
    let mut bracket = StructureConstants::new(2, d, Symmetry::Skew);
    for a in 0..d {
        for b in a + 1..d {
            let v = q.project.apply(&g.br_basis(reps[a], reps[b]));
            if !is_zero_vec(&v) {
                bracket.add(&[a, b], &v).expect("dimension");
            }
        }
    }
    let lift = q.lift_matrix();
    let maps = ws.pair.alpha.maps.iter().map(|mm| q.project.mul(mm).mul(&lift)).collect();
    let rho = LinearFamily { target: m, maps: reps.iter().map(|&r| ws.pair.rho.maps[r].clone()).collect() };
    let pair = LieRinehartPair::new(LieAlg { bracket }, ws.pair.a.clone(), rho, AAction::new(d, maps)?)?;
    let certification = check_lie_rinehart(&pair);
    Ok(WBar { w: ws.clone(), kernel, quotient: q, pair, descent, certification })
}

/// The two sides of the correspondence between actions of `(L∧L, ρ₂)` on
/// a Lie A-algebra `R` and homomorphisms `η: L∧L → W̄(L,R,A)`.
#[derive(Debug, Clone)]
pub struct EtaBridge {
    pub wbar: WBar,
    /// `dim W̄ × dim(L∧L)`.
    pub eta: Matrix,
    pub action: LieActionData,
    /// Homomorphism laws for `η` and action laws for `β`.
    pub report: Report,
    pub round_trip: bool,
}

fn bridge_w(t: &RinehartTriple, r: &LieAlg, alpha_r: &AAction) -> Result<WBar, ConstructionError> {
    let ws = build_w(t, &RTarget::Lie(r.clone()), alpha_r)?;
    quotient_w(&ws)
}

/// `η(w) = class of (β(w), w)`.
pub fn eta_from_action(t: &RinehartTriple, act: &LieActionData) -> Result<EtaBridge, ConstructionError> {
    let wbar = bridge_w(t, &act.r, &act.alpha_r)?;
    if act.source != wbar.w.wedge_pair {
        return Err(ConstructionError::NotWellDefined("the action is not over the wedge algebra of the triple".into()));
    }
    let mut report = check_lie_action(act)?;
    certify(&report, "the action is not certified")?;
    let d = wbar.w.wedge.dim();
    let mut cols = Vec::with_capacity(d);
    for q in 0..d {
        let c = wbar.class_of(&act.beta.maps[q], &unit_vec(d, q)).ok_or_else(|| {
            ConstructionError::NotWellDefined(format!("(β(w{}), w{}) is not in W", q + 1, q + 1))
        })?;
        cols.push(c);
    }
    let eta = Matrix::from_cols(wbar.dim(), &cols);
    report.extend(check_lie_rinehart_hom(&eta, &wbar.w.wedge_pair, &wbar.pair)?);
    let round_trip = (0..d).all(|q| wbar.phi_of(&eta.col(q)) == act.beta.maps[q]);
    Ok(EtaBridge { wbar, eta, action: act.clone(), report, round_trip })
}

/// `β(w) = φ` of any representative of `η(w)`.
pub fn action_from_eta(
    t: &RinehartTriple,
    r: &LieAlg,
    alpha_r: &AAction,
    eta: &Matrix,
) -> Result<EtaBridge, ConstructionError> {
    let wbar = bridge_w(t, r, alpha_r)?;
    let mut report = check_lie_rinehart_hom(eta, &wbar.w.wedge_pair, &wbar.pair)?;
    certify(&report, "η is not a Lie-Rinehart homomorphism")?;
    // a second representative of every class: add each kernel vector
    for kappa in wbar.kernel.basis() {
        let (phi, _) = wbar.w.split(&wbar.w.element(kappa));
        if !phi.is_zero() {
            return Err(ConstructionError::NotWellDefined("a representative of zero has nonzero φ".into()));
        }
    }
    let d = wbar.w.wedge.dim();
    let beta = LinearFamily { target: r.dim(), maps: (0..d).map(|q| wbar.phi_of(&eta.col(q))).collect() };
    let action = LieActionData::new(wbar.w.wedge_pair.clone(), r.clone(), alpha_r.clone(), beta)?;
    report.extend(check_lie_action(&action)?);
    let round_trip = (0..d).all(|q| wbar.class_of(&action.beta.maps[q], &unit_vec(d, q)) == Some(eta.col(q)));
    Ok(EtaBridge { wbar, eta: eta.clone(), action, report, round_trip })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn a4_wedge() {
        let (ws, p) = wedge_lie_rinehart(&catalog::a4()).unwrap();
        assert!(ws.j.is_zero());
        assert_eq!(ws.dim(), 6);
        assert!(check_lie_rinehart(&p).passed());
        // [e1∧e2, e1∧e3] = e1∧e4; pairs (0,1), (0,2), (0,3) are indices 0, 1, 2
        assert_eq!(p.g.br_basis(0, 1), unit_vec(6, 2));
    }

    #[test]
    fn l0_wedge_is_zero() {
        let (ws, p) = wedge_lie_rinehart(&catalog::l0()).unwrap();
        assert!(ws.j.is_full());
        assert_eq!(p.g.dim(), 0);
    }

    #[test]
    fn tder_wedge_is_one_dim() {
        let (ws, p) = wedge_lie_rinehart(&catalog::tder()).unwrap();
        assert!(ws.j.is_zero());
        assert!(ws.j_differs());
        assert_eq!(p.g.dim(), 1);
        assert!(check_lie_rinehart(&p).passed());
    }
}
