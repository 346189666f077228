//! Constructors for new structures out of old ones, and the subspace
//! calculus (ideals, centers, kernels and images).
//!
//! Every constructor builds raw data; certification is a separate call so
//! that a broken input produces a broken output that the checkers can see.

mod crossed;
mod wedge;

pub use crossed::{
    crossed_analysis, crossed_from_central_epi, crossed_from_ideal, crossed_wedge, CrossedAnalysis,
    CrossedWedge,
};
pub use wedge::{
    action_from_eta, build_w, eta_from_action, quotient_w, w_closed_subalgebra, wedge_lie_rinehart,
    wedge_vec, EtaBridge, RTarget, WBar, WSpace, WedgeSpace,
};

use crate::axioms::{self, check_a_algebra, check_homomorphism, AxiomError, Report};
use crate::linalg::{is_zero_vec, quotient_basis, unit_vec, zero_vec, Matrix, Subspace, Vector};
use crate::model::{pairs, AAction, ActionData, ModelError, PairFamily, RinehartTriple, ThreeLie};
use crate::scalar::Scalar;
use crate::structure::{StructureConstants, Symmetry};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Axiom(#[from] AxiomError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("{what} (failing laws: {})", laws.join(", "))]
    Uncertified { what: String, laws: Vec<String> },
    #[error("the algebra acted on is not abelian")]
    AbelianViolated,
    #[error("the target algebra is not abelian; the derivation condition is not linear")]
    NonabelianTarget,
    #[error("not a semidirect product: {0}")]
    NotASemidirect(String),
    #[error("not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("not a subalgebra: {0}")]
    NotASubalgebra(String),
    #[error("the structure does not descend to (L∧L)/J: {0}")]
    JDescentFailure(String),
    #[error("the structure does not descend: {0}")]
    DescentFailure(String),
    #[error("the kernel of the map is not contained in the subspace")]
    KernelNotContained,
    #[error("the subspace is not contained in the image of the map")]
    NotInImage,
    #[error("not a 3-Lie A-algebra homomorphism (failing laws: {})", .0.join(", "))]
    NotAnAAlgebraHom(Vec<String>),
    #[error("not well defined: {0}")]
    NotWellDefined(String),
    #[error("the result depends on the choice of preimage: {0}")]
    WellDefinednessFailure(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
}

impl ConstructionError {
    /// True for errors that mean "the input does not meet the precondition"
    /// rather than "a computed law failed".
    pub fn is_precondition(&self) -> bool {
        !matches!(
            self,
            ConstructionError::JDescentFailure(_)
                | ConstructionError::DescentFailure(_)
                | ConstructionError::NotWellDefined(_)
                | ConstructionError::WellDefinednessFailure(_)
        )
    }
}

/// Turns a failing report into [`ConstructionError::Uncertified`].
pub fn certify(report: &Report, what: &str) -> Result<(), ConstructionError> {
    if report.passed() {
        Ok(())
    } else {
        Err(ConstructionError::Uncertified {
            what: what.to_string(),
            laws: report.failed_laws().into_iter().map(String::from).collect(),
        })
    }
}

fn certified_triple(t: &RinehartTriple) -> Result<(), ConstructionError> {
    certify(&axioms::check_rinehart(t), "the input is not a 3-Lie-Rinehart algebra")
}

/// `v` placed at `offset` in a vector of length `n`.
pub(crate) fn embed(n: usize, offset: usize, v: &[Scalar]) -> Vector {
    let mut out = zero_vec(n);
    for (o, x) in out[offset..offset + v.len()].iter_mut().zip(v) {
        *o = x.clone();
    }
    out
}

// ---------------------------------------------------------------------------
// Semidirect products

/// `L⋉R` with `L` in coordinates `0..dim_l` and `R` after it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semidirect {
    pub triple: RinehartTriple,
    pub dim_l: usize,
    pub dim_r: usize,
}

/// `[x1+r1, x2+r2, x3+r3] = [x1,x2,x3] + β(x1,x2)r3 + β(x2,x3)r1 + β(x3,x1)r2`,
/// `ρ(x+r, y+s) = ρ(x,y)`, `A` acting on both summands.
///
/// The action is not certified here, so that a broken module gives a
/// broken triple.
pub fn semidirect(ad: &ActionData) -> Result<Semidirect, ConstructionError> {
    if !ad.r.is_abelian() {
        return Err(ConstructionError::AbelianViolated);
    }
    let t = &ad.source;
    let (n, k, m) = (t.dim_l(), ad.r.dim(), t.dim_a());
    let dim = n + k;
    let mut bracket = StructureConstants::new(3, dim, Symmetry::Skew);
    for (idx, v) in t.l.bracket.entries() {
        bracket.add(&idx, &embed(dim, 0, v)).expect("dimension");
    }
    for ((x, y), b) in ad.beta.entries() {
        for r in 0..k {
            let col = b.col(r);
            if !is_zero_vec(&col) {
                bracket.add(&[x, y, n + r], &embed(dim, n, &col)).expect("dimension");
            }
        }
    }
    let mut rho = PairFamily::zero(dim, m);
    for ((x, y), r) in t.rho.entries() {
        rho.set(x, y, r.clone());
    }
    let maps = (0..m).map(|a| t.alpha.maps[a].direct_sum(&ad.alpha_r.maps[a])).collect();
    let alpha = AAction::new(dim, maps)?;
    let triple = RinehartTriple::new(ThreeLie { bracket }, t.a.clone(), rho, alpha)?;
    Ok(Semidirect { triple, dim_l: n, dim_r: k })
}

/// `π(x+r) = x`, `i(r) = r`, `q(x+r) = r`.
pub fn projections(sd: &Semidirect) -> Result<(Matrix, Matrix, Matrix), ConstructionError> {
    let (n, k) = (sd.dim_l, sd.dim_r);
    if sd.triple.dim_l() != n + k {
        return Err(ConstructionError::NotASemidirect(format!(
            "carrier has dimension {}, expected {}",
            sd.triple.dim_l(),
            n + k
        )));
    }
    let mut pi = Matrix::zeros(n, n + k);
    for x in 0..n {
        pi.set(x, x, Scalar::one());
    }
    let mut inc = Matrix::zeros(n + k, k);
    let mut q = Matrix::zeros(k, n + k);
    for r in 0..k {
        inc.set(n + r, r, Scalar::one());
        q.set(r, n + r, Scalar::one());
    }
    Ok((pi, inc, q))
}

/// `R` with zero anchor, the source of the inclusion `i: R → L⋉R`.
pub fn module_triple(ad: &ActionData) -> Result<RinehartTriple, ConstructionError> {
    Ok(RinehartTriple::with_zero_anchor(ad.r.clone(), ad.source.a.clone(), ad.alpha_r.clone())?)
}

// ---------------------------------------------------------------------------
// Tensor and E extensions

/// The free product `A⊗L`, basis `a⊗x` at index `a·dim L + x`:
/// `[a1x1, a2x2, a3x3] = a1a2a3[x1,x2,x3] + a1a2ρ(x1,x2)(a3)x3
///  + a2a3ρ(x2,x3)(a1)x1 + a3a1ρ(x3,x1)(a2)x2`,
/// `ρ(a1x1, a2x2) = a1a2ρ(x1,x2)`, `A` acting on the left factor.
pub fn tensor_extension(t: &RinehartTriple) -> Result<RinehartTriple, ConstructionError> {
    certified_triple(t)?;
    let (n, m) = (t.dim_l(), t.dim_a());
    let dim = n * m;
    let tensor = |c: &[Scalar], v: &[Scalar], out: &mut Vector| {
        for (a, ca) in c.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (x, vx) in v.iter().enumerate() {
                if !vx.is_zero() {
                    out[a * n + x] += &(ca * vx);
                }
            }
        }
    };
    let rho: Vec<Vec<Matrix>> = (0..n).map(|x| (0..n).map(|y| t.rho.get(x, y)).collect()).collect();
    let mut bracket = StructureConstants::new(3, dim, Symmetry::Skew);
    for p in 0..dim {
        for q in p + 1..dim {
            for s in q + 1..dim {
                let (a1, x1, a2, x2, a3, x3) = (p / n, p % n, q / n, q % n, s / n, s % n);
                let a12 = t.a.mul_basis(a1, a2);
                let a23 = t.a.mul_basis(a2, a3);
                let a31 = t.a.mul_basis(a3, a1);
                let mut v = zero_vec(dim);
                tensor(&t.a.mul(&a12, &unit_vec(m, a3)), &t.l.br_basis(x1, x2, x3), &mut v);
                tensor(&t.a.mul(&a12, &rho[x1][x2].col(a3)), &unit_vec(n, x3), &mut v);
                tensor(&t.a.mul(&a23, &rho[x2][x3].col(a1)), &unit_vec(n, x1), &mut v);
                tensor(&t.a.mul(&a31, &rho[x3][x1].col(a2)), &unit_vec(n, x2), &mut v);
                if !is_zero_vec(&v) {
                    bracket.add(&[p, q, s], &v).expect("dimension");
                }
            }
        }
    }
    let mut rho1 = PairFamily::zero(dim, m);
    for p in 0..dim {
        for q in p + 1..dim {
            let (a1, x1, a2, x2) = (p / n, p % n, q / n, q % n);
            if x1 == x2 {
                continue;
            }
            let mm = t.a.mult_matrix(&t.a.mul_basis(a1, a2)).mul(&rho[x1][x2]);
            rho1.set(p, q, mm);
        }
    }
    let maps = (0..m)
        .map(|b| {
            let mut mat = Matrix::zeros(dim, dim);
            for a in 0..m {
                let ba = t.a.mul_basis(b, a);
                for (c, cc) in ba.iter().enumerate() {
                    if cc.is_zero() {
                        continue;
                    }
                    for x in 0..n {
                        mat.add_at(c * n + x, a * n + x, cc);
                    }
                }
            }
            mat
        })
        .collect();
    let alpha = AAction::new(dim, maps)?;
    Ok(RinehartTriple::new(ThreeLie { bracket }, t.a.clone(), rho1, alpha)?)
}

/// `E = L⊕A`: `[(x,a),(y,b),(z,c)] = ([x,y,z], ρ(x,y)c + ρ(y,z)a + ρ(z,x)b)`,
/// `a(y,b) = (ay, ab)`, `ρ̄((x,a),(y,b)) = ρ(x,y)`.
pub fn e_extension(t: &RinehartTriple) -> Result<RinehartTriple, ConstructionError> {
    certified_triple(t)?;
    let (n, m) = (t.dim_l(), t.dim_a());
    let dim = n + m;
    let mut bracket = StructureConstants::new(3, dim, Symmetry::Skew);
    for (idx, v) in t.l.bracket.entries() {
        bracket.add(&idx, &embed(dim, 0, v)).expect("dimension");
    }
    for ((x, y), r) in t.rho.entries() {
        for c in 0..m {
            let col = r.col(c);
            if !is_zero_vec(&col) {
                bracket.add(&[x, y, n + c], &embed(dim, n, &col)).expect("dimension");
            }
        }
    }
    let mut rho = PairFamily::zero(dim, m);
    for ((x, y), r) in t.rho.entries() {
        rho.set(x, y, r.clone());
    }
    let maps = (0..m).map(|b| t.alpha.maps[b].direct_sum(&t.a.mult_matrix(&unit_vec(m, b)))).collect();
    let alpha = AAction::new(dim, maps)?;
    Ok(RinehartTriple::new(ThreeLie { bracket }, t.a.clone(), rho, alpha)?)
}

// ---------------------------------------------------------------------------
// Subspaces: classification, restriction, quotients

/// Which closure conditions a subspace `S` satisfies inside an ambient
/// subalgebra `M` (usually all of `L`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    /// `[S,S,S] ⊆ S`
    pub bracket_closed: bool,
    /// `[S,M,M] ⊆ S`
    pub bracket_ideal: bool,
    /// `A·S ⊆ S`
    pub a_stable: bool,
    /// `ρ(S, M) = 0`
    pub anchor_vanishes: bool,
}

impl Classification {
    pub fn subalgebra(&self) -> bool {
        self.bracket_closed && self.a_stable
    }

    pub fn hypo_ideal(&self) -> bool {
        self.bracket_ideal && self.a_stable
    }

    pub fn ideal(&self) -> bool {
        self.hypo_ideal() && self.anchor_vanishes
    }

    pub fn label(&self) -> &'static str {
        if self.ideal() {
            "ideal"
        } else if self.hypo_ideal() {
            "hypo-ideal"
        } else if self.subalgebra() {
            "subalgebra"
        } else {
            "subspace"
        }
    }
}

/// Classifies `s` relative to the subalgebra `within`.
pub fn classify_within(t: &RinehartTriple, within: &Subspace, s: &Subspace) -> Classification {
    let sb = s.basis();
    let wb = within.basis();
    let mut bracket_closed = true;
    'outer: for i in 0..sb.len() {
        for j in i + 1..sb.len() {
            for k in j + 1..sb.len() {
                if !s.contains(&t.l.br(&sb[i], &sb[j], &sb[k])) {
                    bracket_closed = false;
                    break 'outer;
                }
            }
        }
    }
    let mut bracket_ideal = true;
    let mut anchor_vanishes = true;
    for u in sb {
        for j in 0..wb.len() {
            if anchor_vanishes && !t.rho.eval(u, &wb[j]).is_zero() {
                anchor_vanishes = false;
            }
            for k in j + 1..wb.len() {
                if bracket_ideal && !s.contains(&t.l.br(u, &wb[j], &wb[k])) {
                    bracket_ideal = false;
                }
            }
        }
    }
    let a_stable = sb.iter().all(|u| t.alpha.maps.iter().all(|m| s.contains(&m.apply(u))));
    Classification { bracket_closed, bracket_ideal, a_stable, anchor_vanishes }
}

pub fn classify(t: &RinehartTriple, s: &Subspace) -> Classification {
    classify_within(t, &Subspace::full(t.dim_l()), s)
}

fn check_ambient(t: &RinehartTriple, s: &Subspace) -> Result<(), ConstructionError> {
    if s.ambient_dim() != t.dim_l() {
        return Err(AxiomError::DimensionMismatch {
            what: "subspace ambient",
            expected: t.dim_l(),
            got: s.ambient_dim(),
        }
        .into());
    }
    Ok(())
}

/// Fails with the first violated clause of the strong ideal condition.
pub fn require_ideal(t: &RinehartTriple, b: &Subspace) -> Result<(), ConstructionError> {
    check_ambient(t, b)?;
    let c = classify(t, b);
    if !c.bracket_ideal {
        return Err(ConstructionError::NotAnIdeal("[B,L,L] is not contained in B".into()));
    }
    if !c.a_stable {
        return Err(ConstructionError::NotAnIdeal("A·B is not contained in B".into()));
    }
    if !c.anchor_vanishes {
        return Err(ConstructionError::NotAnIdeal("ρ(B,L) is not zero (a hypo-ideal only)".into()));
    }
    Ok(())
}

/// The structure restricted to a subalgebra, in the coordinates of its
/// echelon basis.
pub fn restrict_triple(t: &RinehartTriple, s: &Subspace) -> Result<RinehartTriple, ConstructionError> {
    check_ambient(t, s)?;
    let b = s.basis();
    let d = b.len();
    let coords = |v: &[Scalar], what: &str| {
        s.coordinates(v).ok_or_else(|| ConstructionError::NotASubalgebra(format!("{what} leaves the subspace")))
    };
    let mut bracket = StructureConstants::new(3, d, Symmetry::Skew);
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                let c = coords(&t.l.br(&b[i], &b[j], &b[k]), "the bracket")?;
                if !is_zero_vec(&c) {
                    bracket.add(&[i, j, k], &c).expect("dimension");
                }
            }
        }
    }
    let mut maps = Vec::new();
    for m in &t.alpha.maps {
        let cols = b.iter().map(|u| coords(&m.apply(u), "the action of A")).collect::<Result<Vec<_>, _>>()?;
        maps.push(Matrix::from_cols(d, &cols));
    }
    let mut rho = PairFamily::zero(d, t.dim_a());
    for (i, j) in pairs(d) {
        rho.set(i, j, t.rho.eval(&b[i], &b[j]));
    }
    Ok(RinehartTriple::new(ThreeLie { bracket }, t.a.clone(), rho, AAction::new(d, maps)?)?)
}

/// `L/B` for an ideal `B` (bracket, action and anchor all descend).
pub fn quotient_triple(t: &RinehartTriple, b: &Subspace) -> Result<RinehartTriple, ConstructionError> {
    require_ideal(t, b)?;
    Ok(quotient_data(t, b).0)
}

/// Induced structure on `L/B` without any check; the quotient map is
/// returned alongside.
fn quotient_data(t: &RinehartTriple, b: &Subspace) -> (RinehartTriple, Matrix) {
    let q = quotient_basis(b);
    let d = q.dim();
    let reps = &q.reps;
    let mut bracket = StructureConstants::new(3, d, Symmetry::Skew);
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                let v = q.project.apply(&t.l.br_basis(reps[i], reps[j], reps[k]));
                if !is_zero_vec(&v) {
                    bracket.add(&[i, j, k], &v).expect("dimension");
                }
            }
        }
    }
    let lift = q.lift_matrix();
    let maps = t.alpha.maps.iter().map(|m| q.project.mul(m).mul(&lift)).collect();
    let mut rho = PairFamily::zero(d, t.dim_a());
    for (i, j) in pairs(d) {
        rho.set(i, j, t.rho.get(reps[i], reps[j]));
    }
    let alpha = AAction::new(d, maps).expect("dimension");
    (RinehartTriple::new(ThreeLie { bracket }, t.a.clone(), rho, alpha).expect("dimension"), q.project)
}

/// `L/B` as a 3-Lie A-algebra (zero anchor) when `B` is only a hypo-ideal.
pub fn quotient_zero_anchor(t: &RinehartTriple, b: &Subspace) -> Result<RinehartTriple, ConstructionError> {
    check_ambient(t, b)?;
    let c = classify(t, b);
    if !c.hypo_ideal() {
        return Err(ConstructionError::NotAnIdeal("not a hypo-ideal".into()));
    }
    let (q, _) = quotient_data(t, b);
    Ok(RinehartTriple::with_zero_anchor(q.l, q.a, q.alpha)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealCalculus {
    pub sum: Subspace,
    pub intersection: Subspace,
    pub b: Classification,
    pub c: Classification,
    pub sum_class: Classification,
    pub intersection_class: Classification,
}

pub fn ideal_calculus(t: &RinehartTriple, b: &Subspace, c: &Subspace) -> Result<IdealCalculus, ConstructionError> {
    check_ambient(t, b)?;
    check_ambient(t, c)?;
    let sum = b.sum(c).expect("same ambient");
    let intersection = b.intersection(c).expect("same ambient");
    Ok(IdealCalculus {
        b: classify(t, b),
        c: classify(t, c),
        sum_class: classify(t, &sum),
        intersection_class: classify(t, &intersection),
        sum,
        intersection,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Centers {
    /// `{x : [x,L,L] = 0, ρ(x,L) = 0}`
    pub z_rho: Subspace,
    /// `{a : aL = 0}`
    pub z_la: Subspace,
    pub z_rho_class: Classification,
    /// `A·Z_L(A) ⊆ Z_L(A)`
    pub z_la_is_ideal: bool,
}

pub fn centers(t: &RinehartTriple) -> Result<Centers, ConstructionError> {
    certified_triple(t)?;
    let (n, m) = (t.dim_l(), t.dim_a());
    let mut rows: Vec<Vector> = Vec::new();
    for j in 0..n {
        for k in j + 1..n {
            // x ↦ [x, e_j, e_k]
            let cols: Vec<Vector> = (0..n).map(|x| t.l.br_basis(x, j, k)).collect();
            let mm = Matrix::from_cols(n, &cols);
            rows.extend((0..n).map(|r| mm.row(r).to_vec()));
        }
        for b in 0..m {
            // x ↦ ρ(x, e_j)(e_b)
            let cols: Vec<Vector> = (0..n).map(|x| t.rho.get(x, j).col(b)).collect();
            let mm = Matrix::from_cols(m, &cols);
            rows.extend((0..m).map(|r| mm.row(r).to_vec()));
        }
    }
    let z_rho = crate::linalg::nullspace(&Matrix::from_rows(n, &rows));
    let mut arows: Vec<Vector> = Vec::new();
    for x in 0..n {
        for r in 0..n {
            arows.push((0..m).map(|a| t.alpha.maps[a].get(r, x).clone()).collect());
        }
    }
    let z_la = crate::linalg::nullspace(&Matrix::from_rows(m, &arows));
    let z_la_is_ideal = z_la
        .basis()
        .iter()
        .all(|z| (0..m).all(|a| z_la.contains(&t.a.mul(&unit_vec(m, a), z))));
    Ok(Centers { z_rho_class: classify(t, &z_rho), z_rho, z_la, z_la_is_ideal })
}

// ---------------------------------------------------------------------------
// Homomorphisms

#[derive(Debug, Clone)]
pub struct HomCalculus {
    pub kernel: Subspace,
    pub image: Subspace,
    pub kernel_class: Classification,
    pub image_class: Classification,
    pub image_triple: RinehartTriple,
    pub quotient: RinehartTriple,
    /// `L/Ker f → f(L)` in the coordinates of both.
    pub induced: Matrix,
    pub induced_report: Report,
    pub induced_bijective: bool,
}

fn require_hom(f: &Matrix, src: &RinehartTriple, dst: &RinehartTriple) -> Result<(), ConstructionError> {
    certify(&check_homomorphism(f, src, dst)?, "the map is not a homomorphism")
}

pub fn hom_calculus(f: &Matrix, src: &RinehartTriple, dst: &RinehartTriple) -> Result<HomCalculus, ConstructionError> {
    require_hom(f, src, dst)?;
    let kernel = crate::linalg::nullspace(f);
    let image = crate::linalg::image(f);
    let kernel_class = classify(src, &kernel);
    let image_class = classify(dst, &image);
    let image_triple = restrict_triple(dst, &image)?;
    let quotient = quotient_triple(src, &kernel)?;
    let q = quotient_basis(&kernel);
    let fl = f.mul(&q.lift_matrix());
    let cols: Vec<Vector> = (0..fl.cols())
        .map(|j| image.coordinates(&fl.col(j)).expect("column of f lies in its image"))
        .collect();
    let induced = Matrix::from_cols(image.dim(), &cols);
    let induced_report = check_homomorphism(&induced, &quotient, &image_triple)?;
    let induced_bijective = induced.rows() == induced.cols() && induced.rank() == induced.rows();
    Ok(HomCalculus {
        kernel,
        image,
        kernel_class,
        image_class,
        image_triple,
        quotient,
        induced,
        induced_report,
        induced_bijective,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Preimage,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transport {
    pub result: Subspace,
    /// `f⁻¹(f(S)) = S` (forward) or `f(f⁻¹(S)) = S` (preimage).
    pub round_trip: bool,
    /// Classification on the source side, relative to `L`.
    pub source_class: Classification,
    /// Classification on the target side, relative to `f(L)`.
    pub target_class: Classification,
}

impl Transport {
    /// Hypo-ideals and ideals correspond to each other.
    pub fn classification_preserved(&self) -> bool {
        self.source_class.subalgebra() == self.target_class.subalgebra()
            && self.source_class.hypo_ideal() == self.target_class.hypo_ideal()
            && self.source_class.ideal() == self.target_class.ideal()
    }
}

pub fn subalgebra_transport(
    f: &Matrix,
    src: &RinehartTriple,
    dst: &RinehartTriple,
    s: &Subspace,
    direction: Direction,
) -> Result<Transport, ConstructionError> {
    require_hom(f, src, dst)?;
    let kernel = crate::linalg::nullspace(f);
    let img = crate::linalg::image(f);
    let (src_side, dst_side) = match direction {
        Direction::Forward => {
            check_ambient(src, s)?;
            if !kernel.is_subspace_of(s) {
                return Err(ConstructionError::KernelNotContained);
            }
            if !classify(src, s).subalgebra() {
                return Err(ConstructionError::NotASubalgebra("S is not a subalgebra of the source".into()));
            }
            (s.clone(), s.image(f))
        }
        Direction::Preimage => {
            check_ambient(dst, s)?;
            if !s.is_subspace_of(&img) {
                return Err(ConstructionError::NotInImage);
            }
            if !classify_within(dst, &img, s).subalgebra() {
                return Err(ConstructionError::NotASubalgebra("S is not a subalgebra of the image".into()));
            }
            (s.preimage(f), s.clone())
        }
    };
    let (result, round_trip) = match direction {
        Direction::Forward => (dst_side.clone(), dst_side.preimage(f) == *s),
        Direction::Preimage => (src_side.clone(), src_side.image(f) == *s),
    };
    Ok(Transport {
        result,
        round_trip,
        source_class: classify(src, &src_side),
        target_class: classify_within(dst, &img, &dst_side),
    })
}

/// `β'(x', y') = β(f x', f y')` for `f: L' → L`.
pub fn induced_module(f: &Matrix, src: &RinehartTriple, ad: &ActionData) -> Result<ActionData, ConstructionError> {
    require_hom(f, src, &ad.source)?;
    certify(&axioms::check_action(ad)?, "the action is not certified")?;
    let n = src.dim_l();
    let cols: Vec<Vector> = (0..n).map(|j| f.col(j)).collect();
    let mut beta = PairFamily::zero(n, ad.r.dim());
    for (i, j) in pairs(n) {
        beta.set(i, j, ad.beta.eval(&cols[i], &cols[j]));
    }
    Ok(ActionData::new(src.clone(), ad.r.clone(), ad.alpha_r.clone(), beta)?)
}

/// `β(x, y)r = [fx, fy, r]` for a 3-Lie A-algebra homomorphism `f: L → R`.
pub fn action_from_hom(
    f: &Matrix,
    t: &RinehartTriple,
    r: &ThreeLie,
    alpha_r: &AAction,
) -> Result<ActionData, ConstructionError> {
    certified_triple(t)?;
    certify(&check_a_algebra(r, &t.a, alpha_r)?, "the target is not a 3-Lie A-algebra")?;
    let rt = RinehartTriple::with_zero_anchor(r.clone(), t.a.clone(), alpha_r.clone())?;
    let rep = check_homomorphism(f, &t.with_zero_anchor_copy(), &rt)?;
    let failing: Vec<String> = rep
        .checks
        .iter()
        .filter(|c| !c.passed && c.law != "hom.anchor")
        .map(|c| c.law.clone())
        .collect();
    if !failing.is_empty() {
        return Err(ConstructionError::NotAnAAlgebraHom(failing));
    }
    let n = t.dim_l();
    let cols: Vec<Vector> = (0..n).map(|j| f.col(j)).collect();
    let mut beta = PairFamily::zero(n, r.dim());
    for (i, j) in pairs(n) {
        beta.set(i, j, r.ad(&cols[i], &cols[j]));
    }
    Ok(ActionData::new(t.clone(), r.clone(), alpha_r.clone(), beta)?)
}

impl RinehartTriple {
    /// The same triple with its anchor replaced by zero.
    pub fn with_zero_anchor_copy(&self) -> RinehartTriple {
        RinehartTriple::with_zero_anchor(self.l.clone(), self.a.clone(), self.alpha.clone())
            .expect("dimensions unchanged")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::check_rinehart;
    use crate::catalog;

    #[test]
    fn tder_e_extension() {
        let e = e_extension(&catalog::tder()).unwrap();
        assert_eq!(e.dim_l(), 4);
        assert_eq!(e.l.br_basis(0, 1, 3), unit_vec(4, 3));
        assert!(is_zero_vec(&e.l.br_basis(0, 1, 2)));
        assert!(check_rinehart(&e).passed());
    }

    #[test]
    fn tder_span_e1_is_hypo_ideal_only() {
        let t = catalog::tder();
        let b = Subspace::span(2, &[unit_vec(2, 0)]);
        let c = classify(&t, &b);
        assert!(c.hypo_ideal() && !c.ideal());
        assert!(matches!(quotient_triple(&t, &b), Err(ConstructionError::NotAnIdeal(_))));
    }

    #[test]
    fn centers_of_catalog() {
        let c = centers(&catalog::tder()).unwrap();
        assert!(c.z_rho.is_zero());
        assert_eq!(c.z_la, Subspace::span(2, &[unit_vec(2, 1)]));
        assert!(c.z_la_is_ideal);
        assert!(centers(&catalog::a4()).unwrap().z_rho.is_zero());
        let l0 = centers(&catalog::l0()).unwrap();
        assert!(l0.z_rho.is_full() && l0.z_la.is_zero());
    }
}
