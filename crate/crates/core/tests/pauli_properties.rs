use num_complex::Complex64;
use proptest::prelude::*;
use qca_lab::fpoly::{Exponent, LaurentPoly};
use qca_lab::pauli::{
    dense_matrix, parse_pauli, pauli_mul, vec_to_pauli, PauliLetter, PauliMonomial, Phase,
};
use qca_lab::symplectic::{omega_form, ModuleVector};

fn monomial(letters: &[PauliLetter], phase: u8) -> PauliMonomial {
    letters
        .iter()
        .enumerate()
        .fold(PauliMonomial::identity(), |acc, (site, &l)| {
            pauli_mul(&acc, &PauliMonomial::single(Exponent::from(site as i64), 0, l))
        })
        .with_phase(Phase::from_power_of_i(phase))
}

fn letter() -> impl Strategy<Value = PauliLetter> {
    (0usize..4).prop_map(|i| PauliLetter::from_index(i).unwrap())
}

fn monomial_strategy(sites: usize) -> impl Strategy<Value = PauliMonomial> {
    (prop::collection::vec(letter(), sites), 0u8..4).prop_map(|(ls, ph)| monomial(&ls, ph))
}

fn vector(sites: i64) -> impl Strategy<Value = ModuleVector> {
    prop::collection::vec(prop::collection::btree_set(0..sites, 0..sites as usize), 2).prop_map(|es| {
        let entries = es
            .iter()
            .map(|e| LaurentPoly::from_exponents_1d(&e.iter().copied().collect::<Vec<_>>()))
            .collect();
        ModuleVector::new(entries).unwrap()
    })
}

#[test]
fn products_match_dense_matrices_on_two_sites() {
    let all: Vec<[PauliLetter; 2]> = PauliLetter::ALL
        .iter()
        .flat_map(|&a| PauliLetter::ALL.iter().map(move |&b| [a, b]))
        .collect();
    for p in &all {
        for q in &all {
            for (pp, qp) in [(0u8, 0u8), (1, 3), (2, 1)] {
                let a = monomial(p, pp);
                let b = monomial(q, qp);
                let prod = dense_matrix(&pauli_mul(&a, &b), 0, 2, 1).unwrap();
                let dense = dense_matrix(&a, 0, 2, 1).unwrap().mul(&dense_matrix(&b, 0, 2, 1).unwrap());
                assert!(prod.max_abs_diff(&dense) < 1e-15, "{a} * {b}");
            }
        }
    }
}

#[test]
fn basis_monomials_are_orthonormal() {
    let all: Vec<PauliMonomial> = (0..16)
        .map(|i| monomial(&[PauliLetter::from_index(i / 4).unwrap(), PauliLetter::from_index(i % 4).unwrap()], 0))
        .collect();
    for (i, p) in all.iter().enumerate() {
        let dp = dense_matrix(p, 0, 2, 1).unwrap();
        assert!(dp.mul(&dp.adjoint()).max_abs_diff(&qca_lab::pauli::CMatrix::identity(4)) < 1e-15);
        for (j, q) in all.iter().enumerate() {
            let ip = dp.adjoint().mul(&dense_matrix(q, 0, 2, 1).unwrap()).trace() / 4.0;
            let want = if i == j { 1.0 } else { 0.0 };
            assert!((ip - Complex64::new(want, 0.0)).norm() < 1e-15);
        }
    }
}

proptest! {
    #[test]
    fn multiplication_is_associative(a in monomial_strategy(3), b in monomial_strategy(3), c in monomial_strategy(3)) {
        prop_assert_eq!(pauli_mul(&pauli_mul(&a, &b), &c), pauli_mul(&a, &pauli_mul(&b, &c)));
        prop_assert_eq!(pauli_mul(&a, &PauliMonomial::identity()), a.clone());
    }

    #[test]
    fn encoding_is_a_bijection_up_to_phase(q in vector(4), q2 in vector(4)) {
        let p = vec_to_pauli(&q).unwrap();
        prop_assert_eq!(p.to_vector(1, 1).unwrap(), q.clone());
        let prod = pauli_mul(&p, &vec_to_pauli(&q2).unwrap());
        let sum = vec_to_pauli(&q.add(&q2).unwrap()).unwrap();
        prop_assert_eq!(prod.with_phase(Phase::ONE), sum.with_phase(Phase::ONE));
    }

    #[test]
    fn commutation_matches_constant_term_of_omega(q in vector(3), q2 in vector(3)) {
        let a = dense_matrix(&vec_to_pauli(&q).unwrap(), 0, 3, 1).unwrap();
        let b = dense_matrix(&vec_to_pauli(&q2).unwrap(), 0, 3, 1).unwrap();
        let commute = a.mul(&b).max_abs_diff(&b.mul(&a)) < 1e-12;
        let omega = omega_form(&q, &q2).unwrap();
        prop_assert_eq!(commute, !omega.contains(&Exponent::from(0)));
    }

    #[test]
    fn text_round_trip(p in monomial_strategy(4)) {
        let text = p.to_string();
        prop_assert_eq!(parse_pauli(&text, 1, 1).unwrap(), p);
    }

    #[test]
    fn parser_never_panics(s in "[-iIXYZ0-9@*(), ]{0,20}") {
        let _ = parse_pauli(&s, 1, 2);
        let _ = parse_pauli(&s, 2, 1);
    }
}
