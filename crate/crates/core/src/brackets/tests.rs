use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::catalog::{special_orthogonal, vanishing_order};
use crate::poly::{int, Polynomial};
use crate::resolution::geometric_resolution;
use crate::Error;

fn xyz() -> (Polynomial, Polynomial, Polynomial) {
    (Polynomial::var(3, 0), Polynomial::var(3, 1), Polynomial::var(3, 2))
}

fn sphere() -> Polynomial {
    let (x, y, z) = xyz();
    &(&x.pow(2) + &y.pow(2)) + &z.pow(2)
}

#[test]
fn koszul_contraction_and_anchor() {
    let k = koszul_linfty(&sphere(), 3).unwrap();
    let (x, y, z) = xyz();
    let l1 = bracket(&k, &[k.basis_element(vec![0, 1, 2])]);
    let mut expected = GradedElement::zero(3, -1);
    expected.add_term(vec![1, 2], x.scale(&int(2)));
    expected.add_term(vec![0, 2], y.scale(&int(-2)));
    expected.add_term(vec![0, 1], z.scale(&int(2)));
    assert_eq!(l1, expected);
    let rho = k.anchor_of(0, 1);
    assert_eq!(rho.coefficient(0), &y.scale(&int(2)));
    assert_eq!(rho.coefficient(1), &x.scale(&int(-2)));
}

#[test]
fn koszul_xy_square_bracket_vanishes() {
    let x = Polynomial::var(2, 0);
    let y = Polynomial::var(2, 1);
    for sign in [NarySign::Shifted, NarySign::Literal] {
        let k = koszul_linfty_with(&(&x * &y), 2, sign).unwrap();
        let e = k.basis_element(vec![0, 1]);
        assert!(bracket(&k, &[e.clone(), e]).is_zero());
    }
}

#[test]
fn bad_phi() {
    assert_eq!(koszul_linfty(&Polynomial::from_int(2, 5), 2).unwrap_err(), Error::BadPhi);
}

fn all_basis(k: &KoszulLinfty) -> Vec<GradedElement> {
    (1..k.dimension()).flat_map(|i| k.basis(i)).map(|idx| k.basis_element(idx)).collect()
}

fn graded_symmetric(k: &KoszulLinfty) -> bool {
    let basis = all_basis(k);
    for a in &basis {
        for b in &basis {
            let ab = bracket(k, &[a.clone(), b.clone()]);
            let ba = bracket(k, &[b.clone(), a.clone()]);
            let expected = if (a.degree * b.degree) % 2 != 0 { ba.neg() } else { ba };
            if ab != expected {
                return false;
            }
        }
    }
    true
}

fn anchor_compatible(k: &KoszulLinfty) -> bool {
    let pairs = k.basis(1);
    for a in &pairs {
        for b in &pairs {
            let l2 = bracket(k, &[k.basis_element(a.clone()), k.basis_element(b.clone())]);
            let mut rho = crate::vector_field::VectorField::zero(k.dimension());
            for (idx, c) in &l2.combination {
                rho = rho.add(&k.anchor_of(idx[0], idx[1]).mul_poly(c));
            }
            let expected = k.anchor_of(a[0], a[1]).bracket(&k.anchor_of(b[0], b[1])).unwrap();
            if rho != expected {
                return false;
            }
        }
    }
    true
}

#[test]
fn shifted_sign_is_symmetric_and_anchored() {
    let v = |i| Polynomial::var(4, i);
    let quartic = &(&(&v(0).pow(3) + &v(1).pow(3)) + &v(2).pow(3)) + &(&v(3).pow(3) + &(&v(0) * &v(1)));
    let shifted = koszul_linfty(&quartic, 3).unwrap();
    assert!(graded_symmetric(&shifted));
    assert!(anchor_compatible(&shifted));
    assert!(anchor_compatible(&koszul_linfty(&sphere(), 2).unwrap()));
    let literal = koszul_linfty_with(&quartic, 3, NarySign::Literal).unwrap();
    assert!(!graded_symmetric(&literal));
    assert!(!anchor_compatible(&literal));
}

#[test]
fn koszul_higher_jacobi_small() {
    let k = koszul_linfty(&sphere(), 3).unwrap();
    let basis = all_basis(&k);
    for a in &basis {
        assert!(higher_jacobi_residual(&k, core::slice::from_ref(a), 1).unwrap().is_zero());
        for b in &basis {
            assert!(higher_jacobi_residual(&k, &[a.clone(), b.clone()], 2).unwrap().is_zero());
            for c in &basis {
                let r = higher_jacobi_residual(&k, &[a.clone(), b.clone(), c.clone()], 3).unwrap();
                assert!(r.is_zero(), "{:?} {:?} {:?}", a, b, c);
            }
        }
    }
    let e = basis[0].clone();
    assert_eq!(
        higher_jacobi_residual(&k, &[e.clone(), e.clone(), e.clone(), e], 4).unwrap_err(),
        Error::ArityUnavailable { requested: 4, available: 3 }
    );
}

#[test]
fn koszul_jacobi_with_polynomial_coefficients() {
    let k = koszul_linfty(&sphere(), 3).unwrap();
    let (x, y, z) = xyz();
    let a = GradedElement::term(-1, vec![0, 1], x.clone());
    let b = GradedElement::term(-1, vec![1, 2], &y * &z);
    let c = GradedElement::term(-1, vec![0, 2], y.clone());
    let t = GradedElement::term(-2, vec![0, 1, 2], z.pow(2));
    assert!(higher_jacobi_residual(&k, &[a.clone(), b.clone()], 2).unwrap().is_zero());
    assert!(higher_jacobi_residual(&k, &[a.clone(), b.clone(), c.clone()], 3).unwrap().is_zero());
    assert!(higher_jacobi_residual(&k, &[a.clone(), t.clone()], 2).unwrap().is_zero());
    assert!(higher_jacobi_residual(&k, &[a, b, t], 3).unwrap().is_zero());
}

#[test]
fn two_lie_over_f1() {
    let f = vanishing_order(2, 1).unwrap();
    let r = geometric_resolution(&f, 4).unwrap();
    let a = almost_lie_algebroid(&f).unwrap();
    let two = extend_to_two_algebroid(&f, &r, &a).unwrap();
    assert_eq!(
        two.verdicts,
        TwoLieVerdicts { leibniz: true, differential: true, jacobiator: true, mixed_jacobi: true }
    );
    let e = |i: usize| GradedElement::basis(2, -1, vec![i]);
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                let res = higher_jacobi_residual(&two, &[e(i), e(j), e(k)], 3).unwrap();
                assert!(res.is_zero());
            }
            for b in 0..2 {
                let fb = GradedElement::basis(2, -2, vec![b]);
                assert!(higher_jacobi_residual(&two, &[e(i), e(j), fb], 3).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn two_lie_over_so3_has_no_three_bracket() {
    let f = special_orthogonal(3).unwrap();
    let r = geometric_resolution(&f, 5).unwrap();
    assert_eq!(r.ranks(), &[3, 1]);
    let two = extend_to_two_algebroid(&f, &r, &almost_lie_algebroid(&f).unwrap()).unwrap();
    assert!(two.verdicts.all());
    assert!(two.three_bracket.iter().all(Polynomial::is_zero));
}

#[test]
fn wrong_length_is_rejected() {
    let x = Polynomial::var(1, 0);
    let f = crate::foliation::FoliationPresentation::new(
        vec!["x".into()],
        vec![crate::vector_field::VectorField::from_component(x, 0)],
    )
    .unwrap();
    let r = geometric_resolution(&f, 3).unwrap();
    let a = almost_lie_algebroid(&f).unwrap();
    assert_eq!(extend_to_two_algebroid(&f, &r, &a).unwrap_err(), Error::WrongLength { expected: 2, found: 1 });
}
