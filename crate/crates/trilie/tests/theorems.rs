use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trilie::axioms::*;
use trilie::catalog;
use trilie::constructions::*;
use trilie::derivations::*;
use trilie::linalg::{unit_vec, Matrix, Subspace, Vector};
use trilie::model::{AAction, ActionData, RinehartTriple, ThreeLie};
use trilie::sample::{self, adjoint_module, anchor_module, change_basis, random_unimodular, trivial_module};
use trilie::scalar::Scalar;

fn catalog_triples() -> Vec<(&'static str, RinehartTriple)> {
    catalog::NAMES.iter().map(|n| (*n, catalog::get(n).unwrap())).collect()
}

#[test]
fn catalog_is_certified_and_satisfies_consequences() {
    for (name, t) in catalog_triples() {
        assert!(check_rinehart(&t).passed(), "{name}");
        assert!(check_nr_identities(&t).unwrap().passed(), "{name}");
    }
}

#[test]
fn single_mutations_of_a4() {
    let a4 = catalog::a4_algebra();
    for (i, j, k, own) in [(0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 3, 1), (1, 2, 3, 0)] {
        for out in 0..4 {
            let mut l = a4.clone();
            l.bracket.add(&[i, j, k], &unit_vec(4, out)).unwrap();
            let rep = check_3lie(&l);
            if out == own {
                // rescaling one diagonal constant gives another 3-Lie algebra
                assert!(rep.passed(), "diagonal ({i},{j},{k})");
                continue;
            }
            assert!(!rep.passed(), "mutation ({i},{j},{k}) -> {out}");
            let law = rep.law("3lie.fundamental").unwrap();
            assert_eq!(law.witnesses[0].tuple.len(), 5);
        }
    }
}

#[test]
fn consequences_hold_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..20 {
        let inst = sample::random_certified(&mut rng, 8);
        assert!(inst.triple.dim_a() <= 2);
        let rep = check_nr_identities(&inst.triple).unwrap();
        assert!(rep.passed(), "{}: {:?}", inst.recipe, rep.failed_laws());
    }
}

#[test]
fn consequences_need_a_certified_triple() {
    let mut t = catalog::tder();
    t.alpha = AAction::zero(2, 2);
    assert!(matches!(check_nr_identities(&t), Err(AxiomError::PreconditionViolated { .. })));
}

#[test]
fn extensions_of_the_catalog_are_certified() {
    for (name, t) in catalog_triples() {
        assert!(check_rinehart(&tensor_extension(&t).unwrap()).passed(), "tensor {name}");
        let e = e_extension(&t).unwrap();
        assert!(check_rinehart(&e).passed(), "e {name}");
        let (ws, pair) = wedge_lie_rinehart(&t).unwrap();
        assert!(ws.descent.passed(), "wedge descent {name}");
        assert!(check_lie_rinehart(&pair).passed(), "wedge {name}");
        let w = build_w(&t, &RTarget::Three(ThreeLie::abelian(1)), &AAction::unit_only(t.dim_a(), 1)).unwrap();
        assert!(w.certification.passed(), "W {name}");
        let wb = quotient_w(&w).unwrap();
        assert!(wb.certification.passed() && wb.descent.passed(), "Wbar {name}");
        for md in [trivial_module(&t, 2), adjoint_module(&t), anchor_module(&t)] {
            if check_module(&md).unwrap().passed() {
                assert!(check_rinehart(&semidirect(&md).unwrap().triple).passed(), "semidirect {name}");
            }
        }
        let n = t.dim_l();
        for b in [Subspace::zero(n), Subspace::full(n)] {
            if !classify(&t, &b).ideal() {
                assert!(quotient_triple(&t, &b).is_err());
                continue;
            }
            assert!(check_rinehart(&quotient_triple(&t, &b).unwrap()).passed(), "quotient {name}");
        }
    }
}

#[test]
fn tensor_bracket_of_tder_uses_the_anchor() {
    let t = tensor_extension(&catalog::tder()).unwrap();
    // basis a*n + x: 1⊗e1 = 0, 1⊗e2 = 1, t⊗e1 = 2
    assert_eq!(t.l.br_basis(0, 1, 2), unit_vec(4, 2));
}

#[test]
fn extension_part_of_e_tder_is_an_ideal_with_quotient_tder() {
    let e = e_extension(&catalog::tder()).unwrap();
    let a_part = Subspace::span(4, &[unit_vec(4, 2), unit_vec(4, 3)]);
    assert!(classify(&e, &a_part).ideal());
    let q = quotient_triple(&e, &a_part).unwrap();
    assert_eq!(q.dim_l(), 2);
    assert!(check_rinehart(&q).passed());
}

#[test]
fn w_for_tder_over_the_field_has_dimension_two() {
    let w = build_w(&catalog::tder(), &RTarget::Three(ThreeLie::abelian(1)), &AAction::unit_only(2, 1)).unwrap();
    assert_eq!(w.dim(), 2);
}

fn broken_anchor_module() -> ActionData {
    let mut md = anchor_module(&catalog::tder());
    let mut m = md.beta.get(0, 1);
    m.set(1, 1, Scalar::from_int(2));
    md.beta.set(0, 1, m);
    md
}

#[test]
fn semidirect_is_certified_exactly_for_modules() {
    let good = anchor_module(&catalog::tder());
    assert!(check_module(&good).unwrap().passed());
    assert!(check_rinehart(&semidirect(&good).unwrap().triple).passed());

    let bad = broken_anchor_module();
    assert_eq!(check_module(&bad).unwrap().failed_laws(), vec!["action.anchor"]);
    assert_eq!(check_rinehart(&semidirect(&bad).unwrap().triple).failed_laws(), vec!["rinehart.bracket"]);
}

#[test]
fn semidirect_refuses_a_nonabelian_target() {
    let t = catalog::a4();
    let md = ActionData::new(t.clone(), t.l.clone(), t.alpha.clone(), t.l.ad_family()).unwrap();
    assert!(matches!(semidirect(&md), Err(ConstructionError::AbelianViolated)));
}

#[test]
fn derivations_of_the_adjoint_module_of_a4() {
    let t = catalog::a4();
    let beta = compute_der_beta(&adjoint_module(&t)).unwrap();
    let der_a = compute_der_a(&t).unwrap();
    assert_eq!(beta.space, der_a.space);
    assert_eq!(der_a.dim(), 6);
    // independent count: the inner derivations already span six dimensions
    let inner = inner_derivation_algebra(&t.l);
    assert_eq!(inner.space.dim(), 6);
    assert!(inner.closure.passed);
    assert!(inner.space.basis().iter().all(|v| der_a.space.contains(v)));
}

#[test]
fn adjoint_family_as_an_action() {
    for name in ["L0", "A4"] {
        let t = catalog::get(name).unwrap();
        assert!(check_action(&adjoint_module(&t)).unwrap().passed(), "{name}");
    }
    // L is abelian and t acts as zero, so every law holds.
    assert!(check_action(&adjoint_module(&catalog::tder())).unwrap().passed());
    // With t acting nontrivially the A-linearity fails.
    let e = e_extension(&catalog::tder()).unwrap();
    assert_eq!(check_action(&adjoint_module(&e)).unwrap().failed_laws(), vec!["action.a_linear"]);
}

#[test]
fn crossed_module_gates() {
    let a4 = catalog::a4();
    let zero = crossed_from_ideal(&a4, &Subspace::zero(4)).unwrap();
    assert!(check_crossed_module(&zero).unwrap().passed());
    let full = crossed_from_ideal(&a4, &Subspace::full(4)).unwrap();
    assert!(check_crossed_module(&full).unwrap().passed());
    let epi = crossed_from_central_epi(&Matrix::identity(4), &a4, &a4).unwrap();
    assert!(check_crossed_module(&epi).unwrap().passed());
    assert_eq!(epi.action.beta, a4.l.ad_family());
    for t in [catalog::tder(), a4] {
        let cw = crossed_wedge(&t).unwrap();
        assert!(cw.report.passed());
        assert!(cw.kernel_is_center);
    }
}

#[test]
fn crossed_analysis_of_an_ideal() {
    let cm = crossed_from_ideal(&catalog::a4(), &Subspace::full(4)).unwrap();
    let ca = crossed_analysis(&cm).unwrap();
    assert_eq!(ca.image.dim(), 4);
    assert_eq!(ca.kernel.dim(), 0);
    assert!(ca.report().passed());
}

#[test]
fn crossed_wedge_hypothesis_is_checked() {
    let e = e_extension(&catalog::tder()).unwrap();
    assert!(matches!(crossed_wedge(&e), Err(ConstructionError::HypothesisViolated(_))));
}

fn random_derivation(space: &DerivationSpace, rng: &mut ChaCha8Rng) -> Matrix {
    let mut m = Matrix::zeros(space.rows, space.cols);
    for b in space.matrices() {
        m.axpy(&Scalar::from_int(rng.gen_range(-3..=3)), &b);
    }
    m
}

#[test]
fn pairs_and_homomorphisms_correspond() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for round in 0..10 {
        let base = if round % 2 == 0 { catalog::l0() } else { catalog::a4() };
        let md = if rng.gen_bool(0.5) { adjoint_module(&base) } else { trivial_module(&base, 2) };
        let p = random_unimodular(base.dim_l(), &mut rng);
        let src = change_basis(&base, &p);
        let induced = induced_module(&p, &src, &md).unwrap();
        let psi = random_derivation(&compute_der_beta(&induced).unwrap(), &mut rng);
        let there = pair_to_hom(&p, &psi, &src, &md).unwrap();
        assert!(there.report.passed() && there.round_trip, "round {round}");
        let back = hom_to_pair(&there.h, &src, &md).unwrap();
        assert!(back.report.passed() && back.round_trip);
        assert_eq!((back.f, back.psi), (p, psi));
    }
}

#[test]
fn identity_homomorphism_calculus() {
    let t = catalog::a4();
    let hc = hom_calculus(&Matrix::identity(4), &t, &t).unwrap();
    assert!(hc.kernel.is_zero() && hc.image.is_full());
    assert!(hc.induced_bijective && hc.induced_report.passed());
}

#[test]
fn centers_of_l0_and_a4() {
    let c = centers(&catalog::l0()).unwrap();
    assert!(c.z_rho.is_full());
    let c = centers(&catalog::a4()).unwrap();
    assert!(c.z_rho.is_zero());
}

#[test]
fn reports_are_deterministic() {
    let t = e_extension(&catalog::tder()).unwrap();
    let p = random_unimodular(4, &mut ChaCha8Rng::seed_from_u64(1));
    let s = change_basis(&t, &p);
    assert_eq!(check_rinehart(&s), check_rinehart(&s));
    assert_eq!(check_nr_identities(&s).unwrap(), check_nr_identities(&s).unwrap());
    let v: Vector = vec![Scalar::one(); 4];
    assert_eq!(classify(&s, &Subspace::span(4, std::slice::from_ref(&v))), classify(&s, &Subspace::span(4, &[v])));
}
