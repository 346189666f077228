use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trilie::axioms::check_rinehart;
use trilie::format::{parse, Document};
use trilie::linalg::{is_zero_vec, nullspace, rref, unit_vec, Matrix, Subspace, Vector};
use trilie::model::RinehartTriple;
use trilie::sample::{change_basis, random_certified, random_unimodular};
use trilie::scalar::Scalar;

fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        (-20i64..20, 1i64..12).prop_map(|(n, d)| Scalar::new(n, d)),
        (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| Scalar::new(n, d)),
    ]
}

fn small() -> impl Strategy<Value = Scalar> {
    (-3i64..=3).prop_map(Scalar::from_int)
}

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(small(), r * c).prop_map(move |d| Matrix::from_flat(r, c, d))
    })
}

fn vectors(n: usize, k: usize) -> impl Strategy<Value = Vec<Vector>> {
    proptest::collection::vec(proptest::collection::vec(small(), n), 0..=k)
}

fn instance(seed: u64, max_dim: usize) -> RinehartTriple {
    random_certified(&mut ChaCha8Rng::seed_from_u64(seed), max_dim).triple
}

fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    use rand::Rng;
    (0..n).map(|_| Scalar::from_int(rng.gen_range(-2..=2))).collect()
}

proptest! {
    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.recip().unwrap()).is_one());
        }
    }

    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        let back: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn nullspace_is_kernel(m in matrix(5)) {
        let k = nullspace(&m);
        for v in k.basis() {
            prop_assert!(is_zero_vec(&m.apply(v)));
        }
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        let (r, _) = rref(&m);
        prop_assert_eq!(rref(&r).0, r);
    }

    #[test]
    fn inverse_when_full_rank(m in (1usize..=4).prop_flat_map(|n| proptest::collection::vec(small(), n * n).prop_map(move |d| Matrix::from_flat(n, n, d)))) {
        match m.inverse() {
            Some(inv) => prop_assert_eq!(m.mul(&inv), Matrix::identity(m.rows())),
            None => prop_assert!(m.rank() < m.rows()),
        }
    }

    #[test]
    fn subspace_lattice_dimensions(u in vectors(5, 4), v in vectors(5, 4)) {
        let (u, v) = (Subspace::span(5, &u), Subspace::span(5, &v));
        let s = u.sum(&v).unwrap();
        let i = u.intersection(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(i.is_subspace_of(&u) && i.is_subspace_of(&v));
        prop_assert!(u.is_subspace_of(&s) && v.is_subspace_of(&s));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bracket_is_multilinear_and_skew(seed in any::<u64>()) {
        let t = instance(seed, 6);
        let n = t.dim_l();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let (x, y, z, w) = (random_vec(&mut rng, n), random_vec(&mut rng, n), random_vec(&mut rng, n), random_vec(&mut rng, n));
        let c = Scalar::new(3, 2);
        let xcy: Vector = x.iter().zip(&y).map(|(a, b)| a + &(&c * b)).collect();
        let lhs = t.l.br(&xcy, &z, &w);
        let rhs: Vector = t.l.br(&x, &z, &w).iter().zip(t.l.br(&y, &z, &w)).map(|(a, b)| a + &(&c * &b)).collect();
        prop_assert_eq!(lhs, rhs);
        let swapped: Vector = t.l.br(&z, &x, &w).into_iter().map(|s| -s).collect();
        prop_assert_eq!(t.l.br(&x, &z, &w), swapped);
    }

    #[test]
    fn anchor_satisfies_leibniz(seed in any::<u64>()) {
        let t = instance(seed, 6);
        let (n, m) = (t.dim_l(), t.dim_a());
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xa11);
        let (x, y) = (random_vec(&mut rng, n), random_vec(&mut rng, n));
        let (a, b) = (random_vec(&mut rng, m), random_vec(&mut rng, m));
        let lhs = t.rho_eval(&x, &y, &t.a.mul(&a, &b)).unwrap();
        let rhs: Vector = t.a.mul(&a, &t.rho_eval(&x, &y, &b).unwrap())
            .iter()
            .zip(t.a.mul(&b, &t.rho_eval(&x, &y, &a).unwrap()))
            .map(|(p, q)| p + &q)
            .collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn document_round_trip(seed in any::<u64>()) {
        let t = instance(seed, 6);
        let mut d = Document::new();
        d.push_triple("L", "A", &t).unwrap();
        let text = d.to_string();
        let back = parse(&text).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back.triple("L").unwrap(), t);
    }

    #[test]
    fn basis_change_is_invertible(seed in any::<u64>()) {
        let t = instance(seed, 5);
        let p = random_unimodular(t.dim_l(), &mut ChaCha8Rng::seed_from_u64(seed));
        let s = change_basis(&t, &p);
        prop_assert!(check_rinehart(&s).passed());
        prop_assert_eq!(change_basis(&s, &p.inverse().unwrap()), t);
    }
}

#[test]
fn unit_vectors_span_everything() {
    let basis: Vec<Vector> = (0..4).map(|i| unit_vec(4, i)).collect();
    assert!(Subspace::span(4, &basis).is_full());
}
