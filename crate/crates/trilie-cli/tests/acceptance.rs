//! One line per acceptance criterion. Criteria known not to hold as stated
//! are printed as FAIL with the reason and are not asserted.

use std::io::Write;
use std::process::{Command, Output, Stdio};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trilie::axioms::*;
use trilie::catalog;
use trilie::constructions::*;
use trilie::derivations::*;
use trilie::format::{render_report, Document, ReportFormat};
use trilie::linalg::{unit_vec, Matrix, Subspace};
use trilie::model::{AAction, ThreeLie};
use trilie::sample::{adjoint_module, anchor_module, change_basis, random_certified, random_unimodular, trivial_module};
use trilie::scalar::Scalar;

type Outcome = Result<String, String>;

fn trilie(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_trilie"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn trilie");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn text(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn emit(name: &str) -> String {
    text(&trilie(&["examples", "emit", name], ""))
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn catalog_triples() -> Vec<(&'static str, trilie::model::RinehartTriple)> {
    catalog::NAMES.iter().map(|n| (*n, catalog::get(n).unwrap())).collect()
}

/// Inputs for every construct kind.
fn construct_inputs() -> Vec<(&'static str, String)> {
    let tder = emit("TDER");
    let a4 = emit("A4");
    let anchor = format!(
        "{tder}\n@3lie R dim=2\n\n@action A on R\na 1 . 1 -> 1 : 1\na 1 . 2 -> 2 : 1\na 2 . 1 -> 2 : 1\n\n@beta TDER on R\nb 1 2 . 2 -> 2 : 1\n"
    );
    let copy = a4.replace("A4", "B4").replace("@assoc F dim=1 unit=1\nm 1 1 -> 1 : 1\n", "");
    let epi = format!("{a4}\n{copy}\n@hom f : A4 -> B4\nh 1 -> 1 : 1\nh 2 -> 2 : 1\nh 3 -> 3 : 1\nh 4 -> 4 : 1\n");
    let mut v = vec![("semidirect", anchor)];
    for n in ["L0", "A4", "TDER"] {
        for kind in ["tensor", "e-ext", "wedge", "w-space", "quotient-w"] {
            v.push((kind, emit(n)));
        }
    }
    v.push(("quotient", format!("{}\n@subspace B in L0\nv : 1 0 0\n", emit("L0"))));
    v.push(("quotient", format!("{a4}\n@subspace Z in A4\nv : 0 0 0 0\n")));
    v.push(("crossed-ideal", format!("{a4}\n@subspace Z in A4\nv : 0 0 0 0\n")));
    v.push(("crossed-epi", epi));
    v.push(("crossed-wedge", a4.clone()));
    v.push(("crossed-wedge", tder));
    v
}

fn criterion_1() -> Outcome {
    for n in ["L0", "A4", "TDER"] {
        let o = trilie(&["validate", "-"], &emit(n));
        ensure(o.status.code() == Some(0), format!("validate {n} exited {:?}", o.status.code()))?;
    }
    let a4 = catalog::a4_algebra();
    let (mut caught, mut diagonal) = (0, Vec::new());
    let start = Instant::now();
    for (i, j, k, own) in [(0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 3, 1), (1, 2, 3, 0)] {
        for out in 0..4 {
            let mut l = a4.clone();
            l.bracket.add(&[i, j, k], &unit_vec(4, out)).unwrap();
            let rep = check_3lie(&l);
            match rep.law("3lie.fundamental") {
                Some(law) if !law.passed => {
                    ensure(law.witnesses.first().map(|w| w.tuple.len()) == Some(5), "witness is not a 5-tuple")?;
                    caught += 1;
                }
                _ => {
                    ensure(out == own, format!("off-diagonal mutation ({i},{j},{k})->{out} not caught"))?;
                    diagonal.push(format!("[e{} e{} e{}] e{}", i + 1, j + 1, k + 1, out + 1));
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 1.0, format!("mutation sweep took {secs:.2}s"))?;
    if diagonal.is_empty() {
        return Ok(format!("validate exits 0 on the catalog; all {caught} mutations caught with 5-tuple witnesses"));
    }
    Err(format!(
        "validate exits 0 on the catalog and {caught} of 16 mutations are caught with 5-tuple witnesses, \
         but doubling a nonzero constant ({}) gives another 3-Lie algebra, so no witness exists",
        diagonal.join(", ")
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    for (n, t) in catalog_triples() {
        let r = check_nr_identities(&t).map_err(|e| e.to_string())?;
        ensure(r.passed(), format!("{n}: {:?}", r.failed_laws()))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut largest = 0;
    for _ in 0..20 {
        let inst = random_certified(&mut rng, 8);
        ensure(inst.triple.dim_a() <= 2, "dim A above 2")?;
        ensure(check_rinehart(&inst.triple).passed(), format!("{} not certified", inst.recipe))?;
        let r = check_nr_identities(&inst.triple).map_err(|e| e.to_string())?;
        ensure(r.passed(), format!("{}: {:?}", inst.recipe, r.failed_laws()))?;
        largest = largest.max(inst.triple.dim_l());
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 30.0, format!("took {secs:.1}s"))?;
    Ok(format!("catalog and 20 random instances (largest dim L = {largest}) in {secs:.1}s"))
}

fn criterion_3() -> Outcome {
    for (n, t) in catalog_triples() {
        let r = |x: Result<trilie::model::RinehartTriple, ConstructionError>| x.map(|s| check_rinehart(&s).passed());
        ensure(r(tensor_extension(&t)) == Ok(true), format!("tensor {n}"))?;
        ensure(r(e_extension(&t)) == Ok(true), format!("e-extension {n}"))?;
        let (ws, pair) = wedge_lie_rinehart(&t).map_err(|e| e.to_string())?;
        ensure(ws.descent.passed() && check_lie_rinehart(&pair).passed(), format!("wedge {n}"))?;
        let w = build_w(&t, &RTarget::Three(ThreeLie::abelian(1)), &AAction::unit_only(t.dim_a(), 1))
            .map_err(|e| e.to_string())?;
        ensure(w.certification.passed(), format!("W {n}"))?;
        let wb = quotient_w(&w).map_err(|e| e.to_string())?;
        ensure(wb.certification.passed() && wb.descent.passed(), format!("Wbar {n}"))?;
        ensure(r(quotient_triple(&t, &Subspace::zero(t.dim_l()))) == Ok(true), format!("quotient {n}"))?;
        for md in [trivial_module(&t, 2), adjoint_module(&t), anchor_module(&t)] {
            if check_module(&md).map_err(|e| e.to_string())?.passed() {
                let s = semidirect(&md).map_err(|e| e.to_string())?;
                ensure(check_rinehart(&s.triple).passed(), format!("semidirect {n}"))?;
            }
        }
    }
    let inputs = construct_inputs();
    for (kind, input) in &inputs {
        let c = trilie(&["construct", kind, "-"], input);
        ensure(c.status.code() == Some(0), format!("construct {kind} exited {:?}", c.status.code()))?;
        let v = trilie(&["validate", "-"], &text(&c));
        ensure(v.status.code() == Some(0), format!("validate after {kind} exited {:?}", v.status.code()))?;
    }
    Ok(format!("library checks on the catalog; {} construct | validate pipelines over all 10 kinds exit 0", inputs.len()))
}

fn criterion_4() -> Outcome {
    let good = anchor_module(&catalog::tder());
    ensure(check_module(&good).map_err(|e| e.to_string())?.passed(), "anchor module is not a module")?;
    let s = semidirect(&good).map_err(|e| e.to_string())?;
    ensure(check_rinehart(&s.triple).passed(), "semidirect of a module not certified")?;

    let mut bad = good.clone();
    let mut m = bad.beta.get(0, 1);
    m.set(1, 1, Scalar::from_int(2));
    bad.beta.set(0, 1, m);
    let mr = check_module(&bad).map_err(|e| e.to_string())?;
    let mf = mr.failed_laws();
    ensure(mf == vec!["action.anchor"], format!("perturbed module fails {mf:?}"))?;
    let s = semidirect(&bad).map_err(|e| e.to_string())?;
    let sr = check_rinehart(&s.triple);
    let sf = sr.failed_laws();
    ensure(sf == vec!["rinehart.bracket"], format!("perturbed semidirect fails {sf:?}"))?;
    Ok("module on TDER gives a certified triple; perturbing one β entry breaks only the anchor condition and the semidirect fails only the bracket law".into())
}

fn criterion_5() -> Outcome {
    let t = catalog::a4();
    let beta = compute_der_beta(&adjoint_module(&t)).map_err(|e| e.to_string())?;
    let der_a = compute_der_a(&t).map_err(|e| e.to_string())?;
    ensure(beta.space == der_a.space, "subspaces differ")?;
    let inner = inner_derivation_algebra(&t.l);
    ensure(inner.space.basis().iter().all(|v| der_a.space.contains(v)), "inner derivation outside Der_A")?;
    ensure(der_a.dim() == 6 && inner.space.dim() == 6, format!("dim {} (inner {})", der_a.dim(), inner.space.dim()))?;
    Ok("Der_beta(ad) = Der_A(A4), dimension 6, equal to the span of the inner derivations".into())
}

fn criterion_6() -> Outcome {
    for n in ["L0", "A4"] {
        let r = check_action(&adjoint_module(&catalog::get(n).unwrap())).map_err(|e| e.to_string())?;
        ensure(r.passed(), format!("ad-family over {n} fails {:?}", r.failed_laws()))?;
    }
    let r = check_action(&adjoint_module(&catalog::tder())).map_err(|e| e.to_string())?;
    if r.passed() {
        let e = e_extension(&catalog::tder()).map_err(|e| e.to_string())?;
        let er = check_action(&adjoint_module(&e)).map_err(|e| e.to_string())?;
        let ef = er.failed_laws();
        return Err(format!(
            "ad-family over L0 and A4 passes, but over TDER it also passes: L is abelian and t acts as zero, \
             so ad = 0 and every law holds (over e(TDER) it fails {ef:?})"
        ));
    }
    Ok(format!("fails over TDER at {:?}, passes over L0 and A4", r.failed_laws()))
}

fn criterion_7() -> Outcome {
    let a4 = catalog::a4();
    let zero = crossed_from_ideal(&a4, &Subspace::zero(4)).map_err(|e| e.to_string())?;
    ensure(check_crossed_module(&zero).map_err(|e| e.to_string())?.passed(), "zero ideal")?;
    let epi = crossed_from_central_epi(&Matrix::identity(4), &a4, &a4).map_err(|e| e.to_string())?;
    ensure(check_crossed_module(&epi).map_err(|e| e.to_string())?.passed(), "identity of A4")?;
    for (n, t) in [("TDER", catalog::tder()), ("A4", a4)] {
        let cw = crossed_wedge(&t).map_err(|e| e.to_string())?;
        ensure(check_lie_crossed_module(&cw.cm).map_err(|e| e.to_string())?.passed(), format!("wedge {n}"))?;
        ensure(cw.kernel_is_center && cw.kernel == cw.center, format!("Ker d differs from the center for {n}"))?;
    }
    Ok("zero ideal, identity epimorphism and both wedge crossed modules pass; Ker d = center in both cases".into())
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for round in 0..10 {
        let base = if round % 2 == 0 { catalog::l0() } else { catalog::a4() };
        let md = if round % 4 < 2 { adjoint_module(&base) } else { trivial_module(&base, 2) };
        let p = random_unimodular(base.dim_l(), &mut rng);
        let src = change_basis(&base, &p);
        let induced = induced_module(&p, &src, &md).map_err(|e| e.to_string())?;
        let space = compute_der_beta(&induced).map_err(|e| e.to_string())?;
        let mut psi = Matrix::zeros(space.rows, space.cols);
        for b in space.matrices() {
            psi.axpy(&Scalar::from_int(rng.gen_range(-3..=3)), &b);
        }
        let hp = pair_to_hom(&p, &psi, &src, &md).map_err(|e| e.to_string())?;
        ensure(hp.report.passed() && hp.round_trip, format!("pair -> hom -> pair, round {round}"))?;
        let back = hom_to_pair(&hp.h, &src, &md).map_err(|e| e.to_string())?;
        ensure(back.report.passed() && back.round_trip, format!("hom -> pair -> hom, round {round}"))?;
        ensure(back.f == p && back.psi == psi, format!("pair changed, round {round}"))?;
    }
    Ok("10 instances over L0 and A4 semidirect products, both round trips exact".into())
}

fn machine_suite() -> String {
    let mut all = String::new();
    for n in ["L0", "A4", "TDER"] {
        all += &text(&trilie(&["--format", "machine", "validate", "-"], &emit(n)));
        all += &text(&trilie(&["--format", "machine", "derive", "der", "-"], &emit(n)));
        all += &text(&trilie(&["--format", "machine", "analyze", "centers", "-"], &emit(n)));
    }
    for (kind, input) in construct_inputs() {
        all += &text(&trilie(&["--format", "machine", "construct", kind, "-"], &input));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..5 {
        let t = random_certified(&mut rng, 6).triple;
        all += &render_report(&check_rinehart(&t), ReportFormat::Machine, 5);
    }
    all
}

fn criterion_9() -> Outcome {
    let (a, b) = (machine_suite(), machine_suite());
    ensure(a == b, "machine reports differ between runs")?;
    Ok(format!("two runs give identical machine reports ({} bytes)", a.len()))
}

fn criterion_10() -> Outcome {
    let tder = catalog::tder();
    let step = semidirect(&anchor_module(&tder)).map_err(|e| e.to_string())?.triple;
    let big = tensor_extension(&step).map_err(|e| e.to_string())?;
    let big = change_basis(&big, &random_unimodular(big.dim_l(), &mut ChaCha8Rng::seed_from_u64(10)));
    ensure(big.dim_l() == 8 && big.dim_a() == 2, format!("built dim L = {}, dim A = {}", big.dim_l(), big.dim_a()))?;
    let mut doc = Document::new();
    doc.push_triple("L", "A", &big).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let o = trilie(&["validate", "-"], &doc.to_string());
    let took = start.elapsed();
    ensure(o.status.code() == Some(0), format!("validate exited {:?}", o.status.code()))?;
    ensure(took < Duration::from_secs(60), format!("took {:.1}s", took.as_secs_f64()))?;
    Ok(format!("validate of dim L = 8, dim A = 2 took {:.2}s", took.as_secs_f64()))
}

#[test]
fn acceptance() {
    // criteria that do not hold as stated; see the decisions ledger
    let known_fail = [1, 6];
    let criteria: [fn() -> Outcome; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let mut unexpected = Vec::new();
    let mut out = std::io::stdout();
    for (i, c) in criteria.iter().enumerate() {
        let n = i + 1;
        let line = match c() {
            Ok(msg) => format!("criterion {n}: PASS - {msg}"),
            Err(msg) => {
                if !known_fail.contains(&n) {
                    unexpected.push(n);
                }
                format!("criterion {n}: FAIL - {msg}")
            }
        };
        // written directly so the lines show up without --nocapture
        writeln!(out, "{line}").unwrap();
    }
    assert!(unexpected.is_empty(), "criteria failed: {unexpected:?}");
}
