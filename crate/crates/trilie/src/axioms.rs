//! Exhaustive checkers for the identity systems.
//!
//! Every law is tested on basis tuples only; by multilinearity that is
//! enough. Tuples that differ by a declared symmetry are visited once, in
//! lexicographic order, so the first witness of a failing law is always the
//! same. A law id looks like `rinehart.bracket`; the `pattern` field of a
//! report names the tuple layout (indices are 0-based internally and printed
//! 1-based).

use crate::linalg::{axpy, image, is_zero_vec, nullspace, unit_vec, zero_vec, Matrix, Vector};
use crate::model::{
    AAction, ActionData, CommAlgebra, CrossedModuleData, LieActionData, LieAlg, LieCrossedModule,
    LieRinehartPair, LinearFamily, PairFamily, RinehartTriple, ThreeLie,
};
use crate::scalar::Scalar;
use crate::structure::StructureConstants;

/// Witnesses kept per law; the failure count is always exact.
pub const MAX_WITNESSES: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub defect: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub law: String,
    pub pattern: &'static str,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
    pub failures: u64,
    pub tuples_checked: u64,
}

/// A set of law reports, sorted by law id.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub checks: Vec<CheckReport>,
}

impl Report {
    pub fn new(mut checks: Vec<CheckReport>) -> Self {
        checks.sort_by(|a, b| a.law.cmp(&b.law));
        Report { checks }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn law(&self, id: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.law == id)
    }

    /// True when the named law is present and passed.
    pub fn law_passed(&self, id: &str) -> bool {
        self.law(id).is_some_and(|c| c.passed)
    }

    pub fn failed_laws(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.law.as_str()).collect()
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.checks.sort_by(|a, b| a.law.cmp(&b.law));
    }

    /// Prepends `prefix.` to every law id.
    pub fn prefixed(self, prefix: &str) -> Report {
        Report::new(
            self.checks
                .into_iter()
                .map(|mut c| {
                    c.law = format!("{prefix}.{}", c.law);
                    c
                })
                .collect(),
        )
    }

    pub fn tuples_checked(&self) -> u64 {
        self.checks.iter().map(|c| c.tuples_checked).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AxiomError {
    #[error("precondition violated: {what} (failing laws: {})", laws.join(", "))]
    PreconditionViolated { what: String, laws: Vec<String> },
    #[error("dimension mismatch in {what}: expected {expected}, got {got}")]
    DimensionMismatch { what: &'static str, expected: usize, got: usize },
}

fn dims(what: &'static str, expected: usize, got: usize) -> Result<(), AxiomError> {
    if expected != got {
        return Err(AxiomError::DimensionMismatch { what, expected, got });
    }
    Ok(())
}

pub(crate) fn require(report: &Report, what: &str) -> Result<(), AxiomError> {
    if report.passed() {
        Ok(())
    } else {
        Err(AxiomError::PreconditionViolated {
            what: what.to_string(),
            laws: report.failed_laws().into_iter().map(String::from).collect(),
        })
    }
}

pub(crate) struct Law {
    rep: CheckReport,
}

impl Law {
    pub(crate) fn new(id: &str, pattern: &'static str) -> Self {
        Law {
            rep: CheckReport {
                law: id.to_string(),
                pattern,
                passed: true,
                witnesses: Vec::new(),
                failures: 0,
                tuples_checked: 0,
            },
        }
    }

    pub(crate) fn record(&mut self, tuple: &[usize], defect: Vector) {
        self.rep.tuples_checked += 1;
        if !is_zero_vec(&defect) {
            self.rep.failures += 1;
            if self.rep.witnesses.len() < MAX_WITNESSES {
                self.rep.witnesses.push(Witness { tuple: tuple.to_vec(), defect });
            }
        }
    }

    /// Records every column of a matrix-valued defect, the column index
    /// appended to the tuple.
    pub(crate) fn record_cols(&mut self, tuple: &[usize], defect: &Matrix) {
        let mut t = tuple.to_vec();
        t.push(0);
        for v in 0..defect.cols() {
            *t.last_mut().unwrap() = v;
            self.record(&t, defect.col(v));
        }
    }

    pub(crate) fn done(mut self) -> CheckReport {
        self.rep.passed = self.rep.failures == 0;
        self.rep
    }
}

/// `α(e_a) e_k` for every pair, so that actions of general elements are
/// sums of stored columns.
pub(crate) struct ActTable {
    cols: Vec<Vec<Vector>>,
    module_dim: usize,
}

impl ActTable {
    pub(crate) fn new(alpha: &AAction) -> Self {
        let cols = alpha.maps.iter().map(|m| (0..m.cols()).map(|k| m.col(k)).collect()).collect();
        ActTable { cols, module_dim: alpha.module_dim() }
    }

    /// `out += s · (c·v)`
    pub(crate) fn acc(&self, out: &mut [Scalar], s: &Scalar, c: &[Scalar], v: &[Scalar]) {
        for (a, ca) in c.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            let sa = s * ca;
            for (k, vk) in v.iter().enumerate() {
                if !vk.is_zero() {
                    axpy(out, &(&sa * vk), &self.cols[a][k]);
                }
            }
        }
    }

    pub(crate) fn act(&self, c: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.module_dim);
        self.acc(&mut out, &Scalar::one(), c, v);
        out
    }

    pub(crate) fn basis(&self, a: usize, k: usize) -> &Vector {
        &self.cols[a][k]
    }
}

/// A skew pair family expanded to all ordered pairs.
pub(crate) struct PairTable {
    n: usize,
    target: usize,
    mats: Vec<Matrix>,
}

impl PairTable {
    pub(crate) fn new(f: &PairFamily) -> Self {
        let n = f.n();
        let mut mats = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                mats.push(f.get(i, j));
            }
        }
        PairTable { n, target: f.target(), mats }
    }

    pub(crate) fn get(&self, i: usize, j: usize) -> &Matrix {
        &self.mats[i * self.n + j]
    }

    /// `φ(u, e_j)` for a general `u`.
    pub(crate) fn left(&self, u: &[Scalar], j: usize) -> Matrix {
        let mut m = Matrix::zeros(self.target, self.target);
        for (k, c) in u.iter().enumerate() {
            if !c.is_zero() {
                m.axpy(c, self.get(k, j));
            }
        }
        m
    }

    pub(crate) fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.target, self.target);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if !b.is_zero() && i != j {
                    m.axpy(&(a * b), self.get(i, j));
                }
            }
        }
        m
    }
}

/// `[v, e_j, e_k]` with the general vector in the first slot.
fn br_v(sc: &StructureConstants, v: &[Scalar], j: usize, k: usize) -> Vector {
    let mut out = zero_vec(sc.dim());
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            sc.accumulate_basis(&mut out, c, &[i, j, k]);
        }
    }
    out
}

/// `[e_i, e_j, v]` with the general vector in the last slot.
fn br_last(sc: &StructureConstants, i: usize, j: usize, v: &[Scalar]) -> Vector {
    let mut out = zero_vec(sc.dim());
    for (k, c) in v.iter().enumerate() {
        if !c.is_zero() {
            sc.accumulate_basis(&mut out, c, &[i, j, k]);
        }
    }
    out
}

/// `[e_i, v]` for a binary bracket.
fn br2_last(sc: &StructureConstants, i: usize, v: &[Scalar]) -> Vector {
    let mut out = zero_vec(sc.dim());
    for (k, c) in v.iter().enumerate() {
        if !c.is_zero() {
            sc.accumulate_basis(&mut out, c, &[i, k]);
        }
    }
    out
}

fn sub_into(out: &mut [Scalar], v: &[Scalar]) {
    axpy(out, &Scalar::from_int(-1), v);
}

fn add_into(out: &mut [Scalar], v: &[Scalar]) {
    axpy(out, &Scalar::one(), v);
}

// ---------------------------------------------------------------------------
// Coefficient algebra, 3-Lie and Lie algebras, modules

fn comm_assoc_laws(a: &CommAlgebra) -> Vec<CheckReport> {
    let n = a.dim();
    let p = &a.product;
    let mut comm = Law::new("assoc.commutative", "a<b");
    for i in 0..n {
        for j in i + 1..n {
            let mut d = p.basis(&[i, j]);
            sub_into(&mut d, &p.basis(&[j, i]));
            comm.record(&[i, j], d);
        }
    }
    let mut assoc = Law::new("assoc.associative", "a, b, c");
    for i in 0..n {
        for j in 0..n {
            let ij = p.basis(&[i, j]);
            for k in 0..n {
                let jk = p.basis(&[j, k]);
                let mut d = a.mul(&ij, &unit_vec(n, k));
                sub_into(&mut d, &a.mul(&unit_vec(n, i), &jk));
                assoc.record(&[i, j, k], d);
            }
        }
    }
    let mut out = vec![comm.done(), assoc.done()];
    if let Some(u) = &a.unit {
        let mut unit = Law::new("assoc.unit", "a");
        for i in 0..n {
            let mut d = a.mul(u, &unit_vec(n, i));
            sub_into(&mut d, &unit_vec(n, i));
            unit.record(&[i], d);
        }
        out.push(unit.done());
    }
    out
}

/// Commutativity, associativity, and the unit law when a unit is declared.
pub fn check_comm_assoc(a: &CommAlgebra) -> Report {
    Report::new(comm_assoc_laws(a))
}

fn fundamental_law(l: &ThreeLie, id: &str) -> CheckReport {
    let n = l.dim();
    let sc = &l.bracket;
    let mut law = Law::new(id, "x1<x2<x3, y2<y3");
    for x1 in 0..n {
        for x2 in x1 + 1..n {
            for x3 in x2 + 1..n {
                let u = sc.basis(&[x1, x2, x3]);
                for y2 in 0..n {
                    for y3 in y2 + 1..n {
                        let mut d = br_v(sc, &u, y2, y3);
                        sub_into(&mut d, &br_v(sc, &sc.basis(&[x1, y2, y3]), x2, x3));
                        sub_into(&mut d, &br_v(sc, &sc.basis(&[x2, y2, y3]), x3, x1));
                        sub_into(&mut d, &br_v(sc, &sc.basis(&[x3, y2, y3]), x1, x2));
                        law.record(&[x1, x2, x3, y2, y3], d);
                    }
                }
            }
        }
    }
    law.done()
}

/// The fundamental identity
/// `[[x1,x2,x3],y2,y3] = [[x1,y2,y3],x2,x3] + [[x2,y2,y3],x3,x1] + [[x3,y2,y3],x1,x2]`.
pub fn check_3lie(l: &ThreeLie) -> Report {
    Report::new(vec![fundamental_law(l, "3lie.fundamental")])
}

fn jacobi_law(g: &LieAlg, id: &str) -> CheckReport {
    let n = g.dim();
    let sc = &g.bracket;
    let mut law = Law::new(id, "x<y<z");
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut d = zero_vec(n);
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    let ab = sc.basis(&[a, b]);
                    for (p, coef) in ab.iter().enumerate() {
                        if !coef.is_zero() {
                            sc.accumulate_basis(&mut d, coef, &[p, c]);
                        }
                    }
                }
                law.record(&[i, j, k], d);
            }
        }
    }
    law.done()
}

pub fn check_lie(g: &LieAlg) -> Report {
    Report::new(vec![jacobi_law(g, "lie.jacobi")])
}

fn a_module_law(a: &CommAlgebra, alpha: &AAction, id: &str) -> CheckReport {
    let m = a.dim();
    let v_dim = alpha.module_dim();
    let t = ActTable::new(alpha);
    let mut law = Law::new(id, "a, b, v");
    for p in 0..m {
        for q in 0..m {
            let pq = a.mul_basis(p, q);
            for v in 0..v_dim {
                let mut d = t.act(&pq, &unit_vec(v_dim, v));
                sub_into(&mut d, &alpha.maps[p].apply(t.basis(q, v)));
                law.record(&[p, q, v], d);
            }
        }
    }
    law.done()
}

/// `α(ab) = α(a)α(b)` on basis pairs. Additivity holds by construction.
pub fn check_a_module(a: &CommAlgebra, alpha: &AAction) -> Result<Report, AxiomError> {
    dims("acting algebra", a.dim(), alpha.algebra_dim())?;
    Ok(Report::new(vec![a_module_law(a, alpha, "module.multiplicative")]))
}

fn representation_laws(prefix: &str, l: &ThreeLie, fam: &PairTable) -> Vec<CheckReport> {
    let n = l.dim();
    let sc = &l.bracket;
    let mut comm = Law::new(&format!("{prefix}.commutator"), "x1<x2, x3<x4, v");
    for x1 in 0..n {
        for x2 in x1 + 1..n {
            for x3 in 0..n {
                for x4 in x3 + 1..n {
                    let mut d = fam.get(x1, x2).commutator(fam.get(x3, x4));
                    d = d.sub(&fam.left(&sc.basis(&[x1, x2, x3]), x4));
                    d = d.add(&fam.left(&sc.basis(&[x1, x2, x4]), x3));
                    comm.record_cols(&[x1, x2, x3, x4], &d);
                }
            }
        }
    }
    let mut comp = Law::new(&format!("{prefix}.composition"), "x1<x2<x3, x4, v");
    for x1 in 0..n {
        for x2 in x1 + 1..n {
            for x3 in x2 + 1..n {
                let u = sc.basis(&[x1, x2, x3]);
                for x4 in 0..n {
                    let mut d = fam.left(&u, x4);
                    d = d.sub(&fam.get(x1, x2).mul(fam.get(x3, x4)));
                    d = d.sub(&fam.get(x2, x3).mul(fam.get(x1, x4)));
                    d = d.sub(&fam.get(x3, x1).mul(fam.get(x2, x4)));
                    comp.record_cols(&[x1, x2, x3, x4], &d);
                }
            }
        }
    }
    vec![comm.done(), comp.done()]
}

/// The two representation identities
/// `[ρ(x1,x2), ρ(x3,x4)] = ρ([x1,x2,x3],x4) − ρ([x1,x2,x4],x3)` and
/// `ρ([x1,x2,x3],x4) = ρ(x1,x2)ρ(x3,x4) + ρ(x2,x3)ρ(x1,x4) + ρ(x3,x1)ρ(x2,x4)`.
pub fn check_representation(l: &ThreeLie, fam: &PairFamily) -> Result<Report, AxiomError> {
    dims("representation domain", l.dim(), fam.n())?;
    Ok(Report::new(representation_laws("rep", l, &PairTable::new(fam))))
}

/// Each `φ(e_i, e_j)` is a derivation of `A`.
fn pair_derivation_law(id: &str, a: &CommAlgebra, fam: &PairTable, n: usize) -> CheckReport {
    let m = a.dim();
    let mut law = Law::new(id, "x<y, a, b");
    for x in 0..n {
        for y in x + 1..n {
            let r = fam.get(x, y);
            for p in 0..m {
                let rp = r.col(p);
                for q in 0..m {
                    let rq = r.col(q);
                    let mut d = r.apply(&a.mul_basis(p, q));
                    sub_into(&mut d, &a.mul(&rp, &unit_vec(m, q)));
                    sub_into(&mut d, &a.mul(&unit_vec(m, p), &rq));
                    law.record(&[x, y, p, q], d);
                }
            }
        }
    }
    law.done()
}

fn linear_derivation_law(id: &str, a: &CommAlgebra, fam: &LinearFamily) -> CheckReport {
    let m = a.dim();
    let mut law = Law::new(id, "x, a, b");
    for (x, r) in fam.maps.iter().enumerate() {
        for p in 0..m {
            let rp = r.col(p);
            for q in 0..m {
                let rq = r.col(q);
                let mut d = r.apply(&a.mul_basis(p, q));
                sub_into(&mut d, &a.mul(&rp, &unit_vec(m, q)));
                sub_into(&mut d, &a.mul(&unit_vec(m, p), &rq));
                law.record(&[x, p, q], d);
            }
        }
    }
    law.done()
}

// ---------------------------------------------------------------------------
// 3-Lie-Rinehart algebras

fn rinehart_laws(t: &RinehartTriple) -> Vec<CheckReport> {
    let n = t.dim_l();
    let m = t.dim_a();
    let sc = &t.l.bracket;
    let rho = PairTable::new(&t.rho);
    let act = ActTable::new(&t.alpha);

    let mut out = vec![fundamental_law(&t.l, "3lie.fundamental")];
    out.extend(comm_assoc_laws(&t.a));
    out.push(a_module_law(&t.a, &t.alpha, "module.multiplicative"));
    out.extend(representation_laws("anchor", &t.l, &rho));
    out.push(pair_derivation_law("anchor.derivation", &t.a, &rho, n));

    // [x, y, az] = a[x, y, z] + (ρ(x, y)a)z
    let mut bracket = Law::new("rinehart.bracket", "x<y, z, a");
    for x in 0..n {
        for y in x + 1..n {
            let r = rho.get(x, y);
            for z in 0..n {
                let xyz = sc.basis(&[x, y, z]);
                let ez = unit_vec(n, z);
                for a in 0..m {
                    let mut d = br_last(sc, x, y, act.basis(a, z));
                    sub_into(&mut d, &act.act(&unit_vec(m, a), &xyz));
                    sub_into(&mut d, &act.act(&r.col(a), &ez));
                    bracket.record(&[x, y, z, a], d);
                }
            }
        }
    }

    // ρ(ax, y) = aρ(x, y). Running over all ordered (x, y) also covers
    // ρ(x, ay) = aρ(x, y), since both sides are skew.
    let mut anchor = Law::new("rinehart.anchor", "x, y, a, b");
    for x in 0..n {
        for y in 0..n {
            let r = rho.get(x, y);
            for a in 0..m {
                let lhs = rho.left(act.basis(a, x), y);
                for b in 0..m {
                    let mut d = lhs.col(b);
                    sub_into(&mut d, &t.a.mul(&unit_vec(m, a), &r.col(b)));
                    anchor.record(&[x, y, a, b], d);
                }
            }
        }
    }
    out.push(bracket.done());
    out.push(anchor.done());
    out
}

/// Every law of a 3-Lie-Rinehart algebra: the fundamental identity, the
/// laws of `A`, the module law, the anchor as a representation by
/// derivations, and the two compatibilities between anchor and action.
pub fn check_rinehart(t: &RinehartTriple) -> Report {
    Report::new(rinehart_laws(t))
}

/// The four consequences of the axioms: `N = 0`, `R = 0` and the two long
/// identities in five variables.
pub fn check_nr_identities(t: &RinehartTriple) -> Result<Report, AxiomError> {
    require(&check_rinehart(t), "the triple is not a 3-Lie-Rinehart algebra")?;
    Ok(nr_laws(t))
}

fn nr_laws(t: &RinehartTriple) -> Report {
    let n = t.dim_l();
    let m = t.dim_a();
    let sc = &t.l.bracket;
    let rho = PairTable::new(&t.rho);
    let act = ActTable::new(&t.alpha);
    let prod: Vec<Vector> = (0..m * m).map(|k| t.a.mul_basis(k / m, k % m)).collect();

    let mut nl = Law::new("nr.n", "x1, x2, x3, x4, a");
    let mut rl = Law::new("nr.r", "x1, x2, x3, x4, b, a");
    for x1 in 0..n {
        for x2 in 0..n {
            for x3 in 0..n {
                for x4 in 0..n {
                    let (r12, r34) = (rho.get(x1, x2), rho.get(x3, x4));
                    let (r23, r14) = (rho.get(x2, x3), rho.get(x1, x4));
                    let (r31, r24) = (rho.get(x3, x1), rho.get(x2, x4));
                    let mut d = r12.mul(r34).add(&r34.mul(r12));
                    d = d.add(&r23.mul(r14)).add(&r14.mul(r23));
                    d = d.add(&r31.mul(r24)).add(&r24.mul(r31));
                    nl.record_cols(&[x1, x2, x3, x4], &d);
                    for b in 0..m {
                        for a in 0..m {
                            let mut d = t.a.mul(&r12.col(b), &r34.col(a));
                            add_into(&mut d, &t.a.mul(&r31.col(b), &r24.col(a)));
                            add_into(&mut d, &t.a.mul(&r23.col(b), &r14.col(a)));
                            rl.record(&[x1, x2, x3, x4, b, a], d);
                        }
                    }
                }
            }
        }
    }

    let one = Scalar::one();
    let minus = Scalar::from_int(-1);
    // Brackets of basis triples, looked up by index.
    let br = |i: usize, j: usize, k: usize| sc.basis(&[i, j, k]);

    let mut l1 = Law::new("nr.long1", "x1, x2, x3, x4, x5, a4, a5");
    let mut l2 = Law::new("nr.long2", "x1, x2, x3, x4, x5, a");
    for x1 in 0..n {
        for x2 in 0..n {
            for x3 in 0..n {
                for x4 in 0..n {
                    for x5 in 0..n {
                        let b145 = br(x1, x4, x5);
                        let b245 = br(x2, x4, x5);
                        let b345 = br(x3, x4, x5);
                        let b523 = br(x5, x2, x3);
                        let b531 = br(x5, x3, x1);
                        let b512 = br(x5, x1, x2);
                        let b423 = br(x4, x2, x3);
                        let b431 = br(x4, x3, x1);
                        let b412 = br(x4, x1, x2);
                        for a4 in 0..m {
                            for a5 in 0..m {
                                let p = &prod[a4 * m + a5];
                                let mut d = zero_vec(n);
                                act.acc(&mut d, &one, &rho.get(x2, x3).apply(p), &b145);
                                act.acc(&mut d, &one, &rho.get(x3, x1).apply(p), &b245);
                                act.acc(&mut d, &one, &rho.get(x1, x2).apply(p), &b345);
                                let e4 = unit_vec(m, a4);
                                let e5 = unit_vec(m, a5);
                                for (r, b) in [((x1, x4), &b523), ((x2, x4), &b531), ((x3, x4), &b512)] {
                                    let c = t.a.mul(&e4, &rho.get(r.0, r.1).col(a5));
                                    act.acc(&mut d, &one, &c, b);
                                }
                                for (r, b) in [((x1, x5), &b423), ((x2, x5), &b431), ((x3, x5), &b412)] {
                                    let c = t.a.mul(&e5, &rho.get(r.0, r.1).col(a4));
                                    act.acc(&mut d, &minus, &c, b);
                                }
                                l1.record(&[x1, x2, x3, x4, x5, a4, a5], d);
                            }
                        }
                        let b235 = br(x2, x3, x5);
                        let b315 = br(x3, x1, x5);
                        let b125 = br(x1, x2, x5);
                        for a in 0..m {
                            let mut d = zero_vec(n);
                            for (r, b) in [
                                ((x2, x3), &b145),
                                ((x1, x4), &b235),
                                ((x3, x1), &b245),
                                ((x2, x4), &b315),
                                ((x1, x2), &b345),
                                ((x3, x4), &b125),
                            ] {
                                act.acc(&mut d, &one, &rho.get(r.0, r.1).col(a), b);
                            }
                            l2.record(&[x1, x2, x3, x4, x5, a], d);
                        }
                    }
                }
            }
        }
    }
    Report::new(vec![nl.done(), rl.done(), l1.done(), l2.done()])
}

// ---------------------------------------------------------------------------
// Lie-Rinehart algebras

fn lie_rinehart_laws(p: &LieRinehartPair) -> Vec<CheckReport> {
    let n = p.g.dim();
    let m = p.a.dim();
    let sc = &p.g.bracket;
    let act = ActTable::new(&p.alpha);
    let mut out = vec![jacobi_law(&p.g, "lie.jacobi")];
    out.extend(comm_assoc_laws(&p.a));
    out.push(a_module_law(&p.a, &p.alpha, "module.multiplicative"));
    out.push(linear_derivation_law("anchor.derivation", &p.a, &p.rho));

    let mut hom = Law::new("anchor.homomorphism", "x<y, a");
    for x in 0..n {
        for y in x + 1..n {
            let d = p.rho.eval(&sc.basis(&[x, y])).sub(&p.rho.maps[x].commutator(&p.rho.maps[y]));
            hom.record_cols(&[x, y], &d);
        }
    }
    // [x, az] = a[x, z] + (ρ(x)a)z
    let mut bracket = Law::new("lierinehart.bracket", "x, z, a");
    for x in 0..n {
        for z in 0..n {
            let xz = sc.basis(&[x, z]);
            let ez = unit_vec(n, z);
            for a in 0..m {
                let mut d = br2_last(sc, x, act.basis(a, z));
                sub_into(&mut d, &act.act(&unit_vec(m, a), &xz));
                sub_into(&mut d, &act.act(&p.rho.maps[x].col(a), &ez));
                bracket.record(&[x, z, a], d);
            }
        }
    }
    // ρ(ax) = aρ(x)
    let mut anchor = Law::new("lierinehart.anchor", "x, a, b");
    for x in 0..n {
        for a in 0..m {
            let lhs = p.rho.eval(act.basis(a, x));
            for b in 0..m {
                let mut d = lhs.col(b);
                sub_into(&mut d, &p.a.mul(&unit_vec(m, a), &p.rho.maps[x].col(b)));
                anchor.record(&[x, a, b], d);
            }
        }
    }
    out.push(hom.done());
    out.push(bracket.done());
    out.push(anchor.done());
    out
}

/// Jacobi, the laws of `A`, the module law, the anchor as a Lie
/// homomorphism into derivations, and the two Leibniz-type compatibilities.
pub fn check_lie_rinehart(p: &LieRinehartPair) -> Report {
    Report::new(lie_rinehart_laws(p))
}

// ---------------------------------------------------------------------------
// Homomorphisms

/// `f[x,y,z] = [fx,fy,fz]`, `f(ax) = af(x)`, `ρ'(fx,fy) = ρ(x,y)`.
pub fn check_homomorphism(f: &Matrix, src: &RinehartTriple, dst: &RinehartTriple) -> Result<Report, AxiomError> {
    dims("homomorphism source", src.dim_l(), f.cols())?;
    dims("homomorphism target", dst.dim_l(), f.rows())?;
    dims("coefficient algebra", src.dim_a(), dst.dim_a())?;
    let n = src.dim_l();
    let m = src.dim_a();
    let fc: Vec<Vector> = (0..n).map(|k| f.col(k)).collect();
    let sact = ActTable::new(&src.alpha);
    let dact = ActTable::new(&dst.alpha);
    let srho = PairTable::new(&src.rho);
    let drho = PairTable::new(&dst.rho);

    let mut bracket = Law::new("hom.bracket", "x<y<z");
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let mut d = f.apply(&src.l.br_basis(x, y, z));
                sub_into(&mut d, &dst.l.br(&fc[x], &fc[y], &fc[z]));
                bracket.record(&[x, y, z], d);
            }
        }
    }
    let mut lin = Law::new("hom.a_linear", "a, x");
    for a in 0..m {
        for x in 0..n {
            let mut d = f.apply(sact.basis(a, x));
            sub_into(&mut d, &dact.act(&unit_vec(m, a), &fc[x]));
            lin.record(&[a, x], d);
        }
    }
    let mut anchor = Law::new("hom.anchor", "x<y, b");
    for x in 0..n {
        for y in x + 1..n {
            let d = drho.eval(&fc[x], &fc[y]).sub(srho.get(x, y));
            anchor.record_cols(&[x, y], &d);
        }
    }
    Ok(Report::new(vec![bracket.done(), lin.done(), anchor.done()]))
}

/// Surjectivity and centrality of the kernel, for a map that is already a
/// homomorphism.
pub fn check_central_epi(f: &Matrix, src: &RinehartTriple, dst: &RinehartTriple) -> Result<Report, AxiomError> {
    require(&check_homomorphism(f, src, dst)?, "the map is not a homomorphism")?;
    let n = src.dim_l();
    let m = src.dim_a();
    let img = image(f);
    let mut surj = Law::new("epi.surjective", "target basis vector");
    for k in 0..dst.dim_l() {
        surj.record(&[k], img.reduce(&unit_vec(dst.dim_l(), k)));
    }
    let ker = nullspace(f);
    let rho = PairTable::new(&src.rho);
    let mut cb = Law::new("epi.central-bracket", "kernel basis vector, y<z");
    let mut ca = Law::new("epi.central-anchor", "kernel basis vector, y, a");
    for (p, k) in ker.basis().iter().enumerate() {
        for y in 0..n {
            for z in y + 1..n {
                cb.record(&[p, y, z], br_v(&src.l.bracket, k, y, z));
            }
            let r = rho.left(k, y);
            for a in 0..m {
                ca.record(&[p, y, a], r.col(a));
            }
        }
    }
    Ok(Report::new(vec![surj.done(), cb.done(), ca.done()]))
}

// ---------------------------------------------------------------------------
// Actions and modules

/// The target `(R, A)` of an action is a 3-Lie A-algebra: fundamental
/// identity, module law, and `[r1, r2, ar3] = a[r1, r2, r3]`.
fn target_laws(r: &ThreeLie, a: &CommAlgebra, alpha: &AAction) -> Vec<CheckReport> {
    let n = r.dim();
    let m = a.dim();
    let act = ActTable::new(alpha);
    let sc = &r.bracket;
    let mut lin = Law::new("target.bracket", "r1<r2, r3, a");
    for r1 in 0..n {
        for r2 in r1 + 1..n {
            for r3 in 0..n {
                let b = sc.basis(&[r1, r2, r3]);
                for p in 0..m {
                    let mut d = br_last(sc, r1, r2, act.basis(p, r3));
                    sub_into(&mut d, &act.act(&unit_vec(m, p), &b));
                    lin.record(&[r1, r2, r3, p], d);
                }
            }
        }
    }
    vec![fundamental_law(r, "target.fundamental"), a_module_law(a, alpha, "target.module"), lin.done()]
}

fn action_laws(ad: &ActionData) -> Vec<CheckReport> {
    let t = &ad.source;
    let n = t.dim_l();
    let m = t.dim_a();
    let k = ad.r.dim();
    let rs = &ad.r.bracket;
    let beta = PairTable::new(&ad.beta);
    let lact = ActTable::new(&t.alpha);
    let ract = ActTable::new(&ad.alpha_r);
    let rho = PairTable::new(&t.rho);

    let mut out = target_laws(&ad.r, &t.a, &ad.alpha_r);
    out.extend(representation_laws("action", &t.l, &beta));

    // β(x, y) is a derivation of R.
    let mut der = Law::new("action.derivation", "x<y, r1<r2<r3");
    for x in 0..n {
        for y in x + 1..n {
            let b = beta.get(x, y);
            let bc: Vec<Vector> = (0..k).map(|i| b.col(i)).collect();
            for r1 in 0..k {
                for r2 in r1 + 1..k {
                    for r3 in r2 + 1..k {
                        let mut d = b.apply(&rs.basis(&[r1, r2, r3]));
                        sub_into(&mut d, &br_v(rs, &bc[r1], r2, r3));
                        sub_into(&mut d, &br_v(rs, &bc[r2], r3, r1));
                        sub_into(&mut d, &br_v(rs, &bc[r3], r1, r2));
                        der.record(&[x, y, r1, r2, r3], d);
                    }
                }
            }
        }
    }
    // β(ax, y) = α_R(a)β(x, y); the other half follows by skew-symmetry.
    let mut lin = Law::new("action.a_linear", "x, y, a, r");
    for x in 0..n {
        for y in 0..n {
            let b = beta.get(x, y);
            for a in 0..m {
                let lhs = beta.left(lact.basis(a, x), y);
                let d = lhs.sub(&ad.alpha_r.maps[a].mul(b));
                lin.record_cols(&[x, y, a], &d);
            }
        }
    }
    // β(x, y)(ar) = aβ(x, y)r + ρ(x, y)(a)r
    let mut anchor = Law::new("action.anchor", "x<y, a, r");
    for x in 0..n {
        for y in x + 1..n {
            let b = beta.get(x, y);
            let rxy = rho.get(x, y);
            for a in 0..m {
                let ea = unit_vec(m, a);
                let ra = rxy.col(a);
                for r in 0..k {
                    let mut d = b.apply(ract.basis(a, r));
                    sub_into(&mut d, &ract.act(&ea, &b.col(r)));
                    sub_into(&mut d, &ract.act(&ra, &unit_vec(k, r)));
                    anchor.record(&[x, y, a, r], d);
                }
            }
        }
    }
    out.push(der.done());
    out.push(lin.done());
    out.push(anchor.done());
    out
}

/// `R` is a 3-Lie A-algebra: the fundamental identity, the module law and
/// `[r1, r2, ar3] = a[r1, r2, r3]`.
pub fn check_a_algebra(r: &ThreeLie, a: &CommAlgebra, alpha: &AAction) -> Result<Report, AxiomError> {
    dims("action module", r.dim(), alpha.module_dim())?;
    dims("coefficient algebra", a.dim(), alpha.algebra_dim())?;
    Ok(Report::new(target_laws(r, a, alpha)))
}

/// `R` is a Lie A-algebra.
pub fn check_lie_a_algebra(r: &LieAlg, a: &CommAlgebra, alpha: &AAction) -> Result<Report, AxiomError> {
    dims("action module", r.dim(), alpha.module_dim())?;
    dims("coefficient algebra", a.dim(), alpha.algebra_dim())?;
    Ok(Report::new(lie_target_laws(r, a, alpha)))
}

/// `f[x,y] = [fx,fy]`, `f(ax) = af(x)`, `ρ'(fx) = ρ(x)`.
pub fn check_lie_rinehart_hom(f: &Matrix, src: &LieRinehartPair, dst: &LieRinehartPair) -> Result<Report, AxiomError> {
    dims("homomorphism source", src.g.dim(), f.cols())?;
    dims("homomorphism target", dst.g.dim(), f.rows())?;
    dims("coefficient algebra", src.a.dim(), dst.a.dim())?;
    let (n, m) = (src.g.dim(), src.a.dim());
    let fc: Vec<Vector> = (0..n).map(|k| f.col(k)).collect();
    let sact = ActTable::new(&src.alpha);
    let dact = ActTable::new(&dst.alpha);
    let mut bracket = Law::new("lhom.bracket", "x<y");
    for x in 0..n {
        for y in x + 1..n {
            let mut d = f.apply(&src.g.br_basis(x, y));
            sub_into(&mut d, &dst.g.br(&fc[x], &fc[y]));
            bracket.record(&[x, y], d);
        }
    }
    let mut lin = Law::new("lhom.a_linear", "a, x");
    for a in 0..m {
        for x in 0..n {
            let mut d = f.apply(sact.basis(a, x));
            sub_into(&mut d, &dact.act(&unit_vec(m, a), &fc[x]));
            lin.record(&[a, x], d);
        }
    }
    let mut anchor = Law::new("lhom.anchor", "x, b");
    for x in 0..n {
        let d = dst.rho.eval(&fc[x]).sub(&src.rho.maps[x]);
        anchor.record_cols(&[x], &d);
    }
    Ok(Report::new(vec![bracket.done(), lin.done(), anchor.done()]))
}

fn source_certified(t: &RinehartTriple) -> Result<(), AxiomError> {
    require(&check_rinehart(t), "the source is not a 3-Lie-Rinehart algebra")
}

/// Action laws for `β: L∧L → End(R)`: `β` lands in `Der(R)`, is a
/// representation, is `A`-linear in each slot, and satisfies the anchor rule
/// `β(x,y)(ar) = aβ(x,y)r + ρ(x,y)(a)r`. The target must be a 3-Lie
/// A-algebra; those laws are reported under `target.*`.
pub fn check_action(ad: &ActionData) -> Result<Report, AxiomError> {
    source_certified(&ad.source)?;
    Ok(Report::new(action_laws(ad)))
}

fn abelian_law(r: &ThreeLie) -> CheckReport {
    let n = r.dim();
    let mut law = Law::new("target.abelian", "r1<r2<r3");
    for r1 in 0..n {
        for r2 in r1 + 1..n {
            for r3 in r2 + 1..n {
                law.record(&[r1, r2, r3], r.br_basis(r1, r2, r3));
            }
        }
    }
    law.done()
}

/// An action on an abelian target.
pub fn check_module(ad: &ActionData) -> Result<Report, AxiomError> {
    source_certified(&ad.source)?;
    let mut laws = action_laws(ad);
    laws.push(abelian_law(&ad.r));
    Ok(Report::new(laws))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleHomReport {
    pub report: Report,
    /// The map passed and is invertible.
    pub equivalence: bool,
}

/// `f(ar) = af(r)` and `f(β₁(x,y)r) = β₂(x,y)f(r)`.
pub fn check_module_hom(f: &Matrix, m1: &ActionData, m2: &ActionData) -> Result<ModuleHomReport, AxiomError> {
    if m1.source != m2.source {
        return Err(AxiomError::PreconditionViolated {
            what: "the modules are over different triples".into(),
            laws: Vec::new(),
        });
    }
    dims("module map source", m1.r.dim(), f.cols())?;
    dims("module map target", m2.r.dim(), f.rows())?;
    require(&check_module(m1)?, "the source is not a module")?;
    require(&check_module(m2)?, "the target is not a module")?;
    let t = &m1.source;
    let (n, m, k) = (t.dim_l(), t.dim_a(), m1.r.dim());
    let a1 = ActTable::new(&m1.alpha_r);
    let a2 = ActTable::new(&m2.alpha_r);
    let b1 = PairTable::new(&m1.beta);
    let b2 = PairTable::new(&m2.beta);
    let mut lin = Law::new("modhom.a_linear", "a, r");
    for a in 0..m {
        for r in 0..k {
            let mut d = f.apply(a1.basis(a, r));
            sub_into(&mut d, &a2.act(&unit_vec(m, a), &f.col(r)));
            lin.record(&[a, r], d);
        }
    }
    let mut tw = Law::new("modhom.intertwine", "x<y, r");
    for x in 0..n {
        for y in x + 1..n {
            let d = f.mul(b1.get(x, y)).sub(&b2.get(x, y).mul(f));
            tw.record_cols(&[x, y], &d);
        }
    }
    let report = Report::new(vec![lin.done(), tw.done()]);
    let equivalence = report.passed() && f.rows() == f.cols() && f.inverse().is_some();
    Ok(ModuleHomReport { report, equivalence })
}

/// `ψ` is `A`-linear and
/// `ψ[x,y,z] = [ψx,ψy,ψz] + β(x,y)ψz + β(y,z)ψx + β(z,x)ψy`.
pub fn check_rinehart_derivation(psi: &Matrix, ad: &ActionData) -> Result<Report, AxiomError> {
    dims("derivation source", ad.source.dim_l(), psi.cols())?;
    dims("derivation target", ad.r.dim(), psi.rows())?;
    require(&check_action(ad)?, "the action is not certified")?;
    Ok(derivation_laws(psi, ad))
}

pub(crate) fn derivation_laws(psi: &Matrix, ad: &ActionData) -> Report {
    let t = &ad.source;
    let (n, m) = (t.dim_l(), t.dim_a());
    let lact = ActTable::new(&t.alpha);
    let ract = ActTable::new(&ad.alpha_r);
    let beta = PairTable::new(&ad.beta);
    let pc: Vec<Vector> = (0..n).map(|k| psi.col(k)).collect();
    let mut lin = Law::new("derivation.a_linear", "a, x");
    for a in 0..m {
        for x in 0..n {
            let mut d = psi.apply(lact.basis(a, x));
            sub_into(&mut d, &ract.act(&unit_vec(m, a), &pc[x]));
            lin.record(&[a, x], d);
        }
    }
    let mut br = Law::new("derivation.bracket", "x<y<z");
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let mut d = psi.apply(&t.l.br_basis(x, y, z));
                sub_into(&mut d, &ad.r.br(&pc[x], &pc[y], &pc[z]));
                sub_into(&mut d, &beta.get(x, y).apply(&pc[z]));
                sub_into(&mut d, &beta.get(y, z).apply(&pc[x]));
                sub_into(&mut d, &beta.get(z, x).apply(&pc[y]));
                br.record(&[x, y, z], d);
            }
        }
    }
    Report::new(vec![lin.done(), br.done()])
}

/// `∂` is a 3-Lie homomorphism together with the five crossed-module
/// conditions: equivariance, the Peiffer rule, skew-symmetry of
/// `β(x, ∂r1)r2`, `A`-linearity, and `ρ(∂r1, ∂r2) = 0`.
pub fn check_crossed_module(cm: &CrossedModuleData) -> Result<Report, AxiomError> {
    require(&check_action(&cm.action)?, "the action is not certified")?;
    let ad = &cm.action;
    let t = &ad.source;
    let (n, m, k) = (t.dim_l(), t.dim_a(), ad.r.dim());
    let p = &cm.partial;
    let pc: Vec<Vector> = (0..k).map(|i| p.col(i)).collect();
    let beta = PairTable::new(&ad.beta);
    let rho = PairTable::new(&t.rho);
    let lact = ActTable::new(&t.alpha);
    let ract = ActTable::new(&ad.alpha_r);

    let mut hom = Law::new("crossed.hom", "r1<r2<r3");
    for r1 in 0..k {
        for r2 in r1 + 1..k {
            for r3 in r2 + 1..k {
                let mut d = p.apply(&ad.r.br_basis(r1, r2, r3));
                sub_into(&mut d, &t.l.br(&pc[r1], &pc[r2], &pc[r3]));
                hom.record(&[r1, r2, r3], d);
            }
        }
    }
    let mut eq = Law::new("crossed.equivariance", "x<y, r");
    for x in 0..n {
        for y in x + 1..n {
            let b = beta.get(x, y);
            for r in 0..k {
                let mut d = p.apply(&b.col(r));
                sub_into(&mut d, &br_last(&t.l.bracket, x, y, &pc[r]));
                eq.record(&[x, y, r], d);
            }
        }
    }
    let mut pf = Law::new("crossed.peiffer", "r1<r2, r");
    for r1 in 0..k {
        for r2 in r1 + 1..k {
            let b = beta.eval(&pc[r1], &pc[r2]);
            for r in 0..k {
                let mut d = b.col(r);
                sub_into(&mut d, &ad.r.br_basis(r1, r2, r));
                pf.record(&[r1, r2, r], d);
            }
        }
    }
    let mut sk = Law::new("crossed.skew", "x, r1<=r2");
    for x in 0..n {
        let ex = unit_vec(n, x);
        let bx: Vec<Matrix> = (0..k).map(|r| beta.eval(&ex, &pc[r])).collect();
        for r1 in 0..k {
            for r2 in r1..k {
                let mut d = bx[r1].col(r2);
                add_into(&mut d, &bx[r2].col(r1));
                sk.record(&[x, r1, r2], d);
            }
        }
    }
    let mut lin = Law::new("crossed.a_linear", "a, r");
    for a in 0..m {
        for r in 0..k {
            let mut d = p.apply(ract.basis(a, r));
            sub_into(&mut d, &lact.act(&unit_vec(m, a), &pc[r]));
            lin.record(&[a, r], d);
        }
    }
    let mut an = Law::new("crossed.anchor", "r1<r2, a");
    for r1 in 0..k {
        for r2 in r1 + 1..k {
            let d = rho.eval(&pc[r1], &pc[r2]);
            an.record_cols(&[r1, r2], &d);
        }
    }
    Ok(Report::new(vec![hom.done(), eq.done(), pf.done(), sk.done(), lin.done(), an.done()]))
}

// ---------------------------------------------------------------------------
// Lie actions and Lie crossed modules

fn lie_target_laws(r: &LieAlg, a: &CommAlgebra, alpha: &AAction) -> Vec<CheckReport> {
    let n = r.dim();
    let m = a.dim();
    let act = ActTable::new(alpha);
    let sc = &r.bracket;
    let mut lin = Law::new("target.bracket", "r1, r2, a");
    for r1 in 0..n {
        for r2 in 0..n {
            let b = sc.basis(&[r1, r2]);
            for p in 0..m {
                let mut d = br2_last(sc, r1, act.basis(p, r2));
                sub_into(&mut d, &act.act(&unit_vec(m, p), &b));
                lin.record(&[r1, r2, p], d);
            }
        }
    }
    vec![jacobi_law(r, "target.jacobi"), a_module_law(a, alpha, "target.module"), lin.done()]
}

/// Action of a Lie-Rinehart algebra `(G, ρ)` on a Lie A-algebra `R`:
/// `β(G) ⊆ Der(R)`, `β` a Lie homomorphism, `β(ax) = aβ(x)`, and
/// `β(x)(ar) = aβ(x)r + ρ(x)(a)r`.
pub fn check_lie_action(ad: &LieActionData) -> Result<Report, AxiomError> {
    require(&check_lie_rinehart(&ad.source), "the source is not a Lie-Rinehart algebra")?;
    Ok(Report::new(lie_action_laws(ad)))
}

fn lie_action_laws(ad: &LieActionData) -> Vec<CheckReport> {
    let p = &ad.source;
    let (n, m, k) = (p.g.dim(), p.a.dim(), ad.r.dim());
    let rs = &ad.r.bracket;
    let gact = ActTable::new(&p.alpha);
    let ract = ActTable::new(&ad.alpha_r);
    let mut out = lie_target_laws(&ad.r, &p.a, &ad.alpha_r);

    let mut der = Law::new("action.derivation", "x, r1<r2");
    for (x, b) in ad.beta.maps.iter().enumerate() {
        for r1 in 0..k {
            for r2 in r1 + 1..k {
                let mut d = b.apply(&rs.basis(&[r1, r2]));
                sub_into(&mut d, &rs.mul2(&b.col(r1), &unit_vec(k, r2)));
                sub_into(&mut d, &br2_last(rs, r1, &b.col(r2)));
                der.record(&[x, r1, r2], d);
            }
        }
    }
    let mut hom = Law::new("action.homomorphism", "x<y, r");
    for x in 0..n {
        for y in x + 1..n {
            let d = ad.beta.eval(&p.g.br_basis(x, y)).sub(&ad.beta.maps[x].commutator(&ad.beta.maps[y]));
            hom.record_cols(&[x, y], &d);
        }
    }
    let mut lin = Law::new("action.a_linear", "x, a, r");
    for x in 0..n {
        for a in 0..m {
            let d = ad.beta.eval(gact.basis(a, x)).sub(&ad.alpha_r.maps[a].mul(&ad.beta.maps[x]));
            lin.record_cols(&[x, a], &d);
        }
    }
    let mut anchor = Law::new("action.anchor", "x, a, r");
    for x in 0..n {
        let b = &ad.beta.maps[x];
        for a in 0..m {
            let ea = unit_vec(m, a);
            let ra = p.rho.maps[x].col(a);
            for r in 0..k {
                let mut d = b.apply(ract.basis(a, r));
                sub_into(&mut d, &ract.act(&ea, &b.col(r)));
                sub_into(&mut d, &ract.act(&ra, &unit_vec(k, r)));
                anchor.record(&[x, a, r], d);
            }
        }
    }
    out.push(der.done());
    out.push(hom.done());
    out.push(lin.done());
    out.push(anchor.done());
    out
}

/// `∂` a Lie homomorphism with `∂(β(x)r) = [x, ∂r]`, `β(∂r1)r2 = [r1, r2]`,
/// `∂(ar) = a∂r` and `ρ(∂r) = 0`.
pub fn check_lie_crossed_module(cm: &LieCrossedModule) -> Result<Report, AxiomError> {
    require(&check_lie_action(&cm.action)?, "the action is not certified")?;
    let ad = &cm.action;
    let p = &ad.source;
    let (m, k) = (p.a.dim(), ad.r.dim());
    let n = p.g.dim();
    let d_ = &cm.partial;
    let pc: Vec<Vector> = (0..k).map(|i| d_.col(i)).collect();
    let gact = ActTable::new(&p.alpha);
    let ract = ActTable::new(&ad.alpha_r);

    let mut hom = Law::new("crossed.hom", "r1<r2");
    for r1 in 0..k {
        for r2 in r1 + 1..k {
            let mut d = d_.apply(&ad.r.br_basis(r1, r2));
            sub_into(&mut d, &p.g.br(&pc[r1], &pc[r2]));
            hom.record(&[r1, r2], d);
        }
    }
    let mut eq = Law::new("crossed.equivariance", "x, r");
    for x in 0..n {
        for r in 0..k {
            let mut d = d_.apply(&ad.beta.maps[x].col(r));
            sub_into(&mut d, &br2_last(&p.g.bracket, x, &pc[r]));
            eq.record(&[x, r], d);
        }
    }
    let mut pf = Law::new("crossed.peiffer", "r1, r2");
    for r1 in 0..k {
        let b = ad.beta.eval(&pc[r1]);
        for r2 in 0..k {
            let mut d = b.col(r2);
            sub_into(&mut d, &ad.r.br_basis(r1, r2));
            pf.record(&[r1, r2], d);
        }
    }
    let mut lin = Law::new("crossed.a_linear", "a, r");
    for a in 0..m {
        for r in 0..k {
            let mut d = d_.apply(ract.basis(a, r));
            sub_into(&mut d, &gact.act(&unit_vec(m, a), &pc[r]));
            lin.record(&[a, r], d);
        }
    }
    let mut an = Law::new("crossed.anchor", "r, a");
    for r in 0..k {
        let d = p.rho.eval(&pc[r]);
        an.record_cols(&[r], &d);
    }
    Ok(Report::new(vec![hom.done(), eq.done(), pf.done(), lin.done(), an.done()]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a4() -> ThreeLie {
        let mut l = ThreeLie::abelian(4);
        l.bracket.add(&[1, 2, 3], &unit_vec(4, 0)).unwrap();
        l.bracket.add(&[0, 2, 3], &unit_vec(4, 1)).unwrap();
        l.bracket.add(&[0, 1, 3], &unit_vec(4, 2)).unwrap();
        l.bracket.add(&[0, 1, 2], &unit_vec(4, 3)).unwrap();
        l
    }

    #[test]
    fn zero_bracket_passes() {
        assert!(check_3lie(&ThreeLie::abelian(5)).passed());
    }

    #[test]
    fn a4_passes_and_bad_entry_fails() {
        assert!(check_3lie(&a4()).passed());
        let mut bad = a4();
        bad.bracket.add(&[0, 1, 2], &unit_vec(4, 0)).unwrap();
        let r = check_3lie(&bad);
        assert!(!r.passed());
        assert_eq!(r.checks[0].witnesses[0].tuple.len(), 5);
    }

    #[test]
    fn one_entry_on_three_basis_vectors_is_3lie() {
        // [e1,e2,e3] = e1 only involves a 3-dimensional subspace, where the
        // fundamental identity is automatic.
        let mut l = ThreeLie::abelian(4);
        l.bracket.add(&[0, 1, 2], &unit_vec(4, 0)).unwrap();
        assert!(check_3lie(&l).passed());
    }

    #[test]
    fn ad_is_a_representation_of_a4() {
        let l = a4();
        assert!(check_representation(&l, &l.ad_family()).unwrap().passed());
        let mut fam = l.ad_family();
        fam.set(0, 1, l.ad_basis(0, 1).neg());
        assert!(!check_representation(&l, &fam).unwrap().passed());
    }

    #[test]
    fn truncated_polynomial_is_associative() {
        let r = check_comm_assoc(&CommAlgebra::truncated_polynomial(2));
        assert!(r.passed());
        assert_eq!(r.law("assoc.associative").unwrap().tuples_checked, 8);
    }

    #[test]
    fn identity_action_of_nilpotent_fails() {
        let a = CommAlgebra::truncated_polynomial(2);
        let alpha = AAction::new(2, vec![Matrix::identity(2), Matrix::identity(2)]).unwrap();
        assert!(!check_a_module(&a, &alpha).unwrap().passed());
    }
}
