use proptest::prelude::*;
use qca_lab::fpoly::{Exponent, LaurentPoly};
use qca_lab::symplectic::{omega_form, ModuleVector, PolyMatrix};

fn palindromic(pos: &[i64], constant: bool) -> LaurentPoly {
    let mut exps: Vec<i64> = pos.iter().flat_map(|&e| [e, -e]).collect();
    if constant {
        exps.push(0);
    }
    LaurentPoly::from_exponents_1d(&exps)
}

fn palindromic_strategy() -> impl Strategy<Value = LaurentPoly> {
    (prop::collection::btree_set(1i64..4, 0..3), any::<bool>())
        .prop_map(|(pos, c)| palindromic(&pos.into_iter().collect::<Vec<_>>(), c))
}

fn poly_strategy() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(-3i64..=3, 0..5).prop_map(|e| LaurentPoly::from_exponents_1d(&e))
}

fn m2(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly, d: LaurentPoly) -> PolyMatrix {
    PolyMatrix::from_rows(vec![vec![a, b], vec![c, d]]).unwrap()
}

/// Generators of 2×2 pseudo-unitary matrices.
fn generator() -> impl Strategy<Value = PolyMatrix> {
    prop_oneof![
        palindromic_strategy().prop_map(|t| PolyMatrix::palindromic_family(&t)),
        palindromic_strategy().prop_map(|s| m2(LaurentPoly::one(1), s, LaurentPoly::zero(1), LaurentPoly::one(1))),
        palindromic_strategy().prop_map(|s| m2(LaurentPoly::one(1), LaurentPoly::zero(1), s, LaurentPoly::one(1))),
        (-2i64..=2).prop_map(|k| PolyMatrix::scalar(2, &LaurentPoly::mono(k))),
    ]
}

fn pseudo_unitary() -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(generator(), 1..4).prop_map(|gs| {
        gs.iter().skip(1).fold(gs[0].clone(), |acc, g| acc.mul(g).unwrap())
    })
}

/// Invertible (unit-determinant) 2×2 matrices that need not be pseudo-unitary.
fn invertible() -> impl Strategy<Value = PolyMatrix> {
    let elem = prop_oneof![
        poly_strategy().prop_map(|p| m2(LaurentPoly::one(1), p, LaurentPoly::zero(1), LaurentPoly::one(1))),
        poly_strategy().prop_map(|p| m2(LaurentPoly::one(1), LaurentPoly::zero(1), p, LaurentPoly::one(1))),
        (-2i64..=2).prop_map(|k| m2(LaurentPoly::mono(k), LaurentPoly::zero(1), LaurentPoly::zero(1), LaurentPoly::one(1))),
    ];
    prop::collection::vec(elem, 1..4).prop_map(|gs| {
        gs.iter().skip(1).fold(gs[0].clone(), |acc, g| acc.mul(g).unwrap())
    })
}

fn vector(size: usize) -> impl Strategy<Value = ModuleVector> {
    prop::collection::vec(poly_strategy(), size).prop_map(|e| ModuleVector::new(e).unwrap())
}

proptest! {
    #[test]
    fn closure_under_product_power_inverse(a in pseudo_unitary(), b in pseudo_unitary(), n in 0u64..5) {
        prop_assert!(a.is_pseudo_unitary());
        prop_assert!(a.mul(&b).unwrap().is_pseudo_unitary());
        prop_assert!(a.pow(n).unwrap().is_pseudo_unitary());
        let inv = a.inverse_unit().unwrap();
        prop_assert!(inv.is_pseudo_unitary());
        prop_assert_eq!(a.mul(&inv).unwrap(), PolyMatrix::identity(2, 1));
    }

    #[test]
    fn omega_is_preserved(l in pseudo_unitary(), q in vector(2), q2 in vector(2)) {
        let before = omega_form(&q, &q2).unwrap();
        let after = omega_form(&l.apply(&q).unwrap(), &l.apply(&q2).unwrap()).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn determinant_identities(a in invertible(), b in invertible(), c in pseudo_unitary()) {
        let da = a.determinant().unwrap();
        prop_assert!(da.as_monomial().is_some());
        prop_assert_eq!(
            a.mul(&b).unwrap().determinant().unwrap(),
            da.mul(&b.determinant().unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&a.adjugate().unwrap()).unwrap(),
            PolyMatrix::scalar(2, &da)
        );
        prop_assert!(c.determinant().unwrap().as_monomial().is_some());
    }

    #[test]
    fn doubling_makes_pseudo_unitary(a in invertible(), q in vector(4), q2 in vector(4)) {
        let d = a.double().unwrap();
        prop_assert_eq!(d.size(), 4);
        prop_assert!(d.is_pseudo_unitary());
        let before = omega_form(&q, &q2).unwrap();
        let after = omega_form(&d.apply(&q).unwrap(), &d.apply(&q2).unwrap()).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn apply_matches_column_combination(a in invertible(), q in vector(2)) {
        let direct = a.apply(&q).unwrap();
        let mut combo = ModuleVector::zero(2, 1);
        for j in 0..2 {
            combo = combo.add(&a.column(j).scale(q.entry(j)).unwrap()).unwrap();
        }
        prop_assert_eq!(direct, combo);
    }

    #[test]
    fn power_matches_repeated_product(l in pseudo_unitary(), n in 0u64..7) {
        let mut acc = PolyMatrix::identity(2, 1);
        for _ in 0..n {
            acc = acc.mul(&l).unwrap();
        }
        prop_assert_eq!(l.pow(n).unwrap(), acc);
    }
}

/// `F^{2^r}` in closed form: `s = Σ_{j=1}^r u^{2^r − 2^j}`, `[[s, u^{2^r−1}], [u^{2^r−1}, u^{2^r} + s]]`.
fn f_power_closed_form(r: u32) -> PolyMatrix {
    let n = 1i64 << r;
    let s_exps: Vec<i64> = (1..=r).map(|j| n - (1i64 << j)).collect();
    let s = LaurentPoly::from_exponents_1d(&s_exps);
    let off = LaurentPoly::mono(n - 1);
    let corner = s.add(&LaurentPoly::mono(n)).unwrap();
    m2(s, off.clone(), off, corner)
}

#[test]
fn f_powers_of_two() {
    let f = PolyMatrix::palindromic_family(&LaurentPoly::mono(1));
    let mut power = f.clone();
    for r in 1..=10u32 {
        power = power.mul(&power).unwrap();
        assert_eq!(power, f_power_closed_form(r), "r = {r}");
        assert_eq!(f.pow(1 << r).unwrap(), power);
        let q = ModuleVector::new(vec![
            LaurentPoly::from_exponents_1d(&[0, 3, -2]),
            LaurentPoly::from_exponents_1d(&[1]),
        ])
        .unwrap();
        let image = power.apply(&q).unwrap();
        assert!(image.total_weight() <= (2 * r as usize + 1) * q.total_weight());
    }
}

#[test]
fn shift_and_identity_are_pseudo_unitary() {
    assert!(PolyMatrix::identity(4, 2).is_pseudo_unitary());
    let shift = PolyMatrix::scalar(2, &LaurentPoly::monomial(Exponent::new(&[1, -1])));
    assert!(shift.is_pseudo_unitary());
}
