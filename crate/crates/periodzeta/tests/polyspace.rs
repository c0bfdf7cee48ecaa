use periodzeta::exact_linalg::{kernel, q, Matrix, Subspace};
use periodzeta::polyspace::*;
use periodzeta::Error;

fn p(w: usize, terms: &[(usize, i64)]) -> HPoly2 {
    HPoly2::from_terms(w, terms)
}

#[test]
fn act_examples() {
    // X^2 | S = Y^2
    assert_eq!(act(&p(2, &[(2, 1)]), &GroupElt::S), p(2, &[(0, 1)]));
    assert_eq!(act(&p(2, &[(1, 1)]), &GroupElt::S), p(2, &[(1, -1)]));
}

#[test]
fn u_cubed_acts_by_parity_of_degree() {
    let u2 = GroupElt::U.pow(2);
    let even = HPoly2::from_i64(4, &[3, -1, 0, 7, 2]);
    let odd = HPoly2::from_i64(5, &[1, 0, -2, 5, 3, 1]);
    assert_eq!(act(&act(&even, &GroupElt::U), &u2), even);
    assert_eq!(act(&act(&odd, &GroupElt::U), &u2), -&odd);
}

#[test]
fn act_ring_examples() {
    let one_s = GroupRingElt::from_terms(&[(GroupElt::IDENTITY, 1), (GroupElt::S, 1)]);
    assert!(act_ring(&p(2, &[(1, 1)]), &one_s).is_zero());
    let one_u_u2 =
        GroupRingElt::from_terms(&[(GroupElt::IDENTITY, 1), (GroupElt::U, 1), (GroupElt::U.pow(2), 1)]);
    assert!(act_ring(&p(10, &[(10, 1), (0, -1)]), &one_u_u2).is_zero());
    let r = HPoly2::from_i64(3, &[1, 2, 3, 4]);
    assert!(act_ring(&r, &GroupRingElt::zero()).is_zero());
}

#[test]
fn inner_products() {
    assert_eq!(inner2(&p(3, &[(2, 1)]), &p(3, &[(2, 1)])).unwrap(), q(2));
    assert_eq!(inner2(&p(3, &[(2, 1)]), &p(3, &[(1, 1)])).unwrap(), q(0));
    let m = HPoly3::monomial(1, 1, 1);
    assert_eq!(inner3(&m, &m).unwrap(), q(1));
    assert!(matches!(inner2(&p(3, &[(2, 1)]), &p(2, &[(2, 1)])), Err(Error::DegreeMismatch { .. })));
}

#[test]
fn group_identities() {
    assert_eq!(GroupElt::T, GroupElt::U.mul(&GroupElt::S.inverse()));
    assert_eq!(GroupElt::T_PRIME, GroupElt::U.pow(2).mul(&GroupElt::S.inverse()));
    let s = GroupElt::S;
    let u = GroupElt::U;
    assert_eq!(GroupElt::M, s.mul(&u).mul(&s).mul(&u.pow(2)).mul(&s));
    assert!(GroupElt::new(1, 1, 1, 1).is_err());
    assert_eq!(GroupElt::EPS.det(), -1);
}

#[test]
fn matrix_of_examples() {
    let plus = monomial_basis(2, Some(Parity::Plus));
    let m = matrix_of_polys(|x| x.clone(), &plus, &plus).unwrap();
    assert_eq!(m, Matrix::identity(2));

    let dom = [HPoly2::monomial(2, 2), HPoly2::monomial(2, 1), HPoly2::monomial(2, 0)];
    let cod = [HPoly2::monomial(1, 1), HPoly2::monomial(1, 0)];
    let m = matrix_of_polys(HPoly2::deriv_y, &dom, &cod).unwrap();
    assert_eq!(m, Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 2]]));

    let one_s = GroupRingElt::from_terms(&[(GroupElt::IDENTITY, 1), (GroupElt::S, 1)]);
    // X^2 and Y^2 both go to X^2 + Y^2, so X^2 - Y^2 spans the kernel
    let m = matrix_of_polys(|x| x.act_ring(&one_s), &plus, &plus).unwrap();
    assert_eq!(kernel(&m).dim(), 1);
}

#[test]
fn matrix_of_rejects_images_outside_span() {
    let plus = monomial_basis(2, Some(Parity::Plus));
    let r = matrix_of_polys(HPoly2::clone, &monomial_basis(2, None), &plus);
    assert!(matches!(r, Err(Error::NotInSpan)));
}

#[test]
fn preimage_examples() {
    let f = Matrix::from_i64(&[&[1, 1, 0], &[0, 0, 1]]);
    assert_eq!(preimage(&f, &Subspace::zero(2)).unwrap(), kernel(&f));
    assert_eq!(preimage(&f, &Subspace::full(2)).unwrap(), Subspace::full(3));
    assert!(preimage(&f, &Subspace::full(3)).is_err());
}

#[test]
fn parity_matches_eps_action() {
    let even = HPoly2::from_i64(4, &[1, 0, 3, 0, -2]);
    let odd = HPoly2::from_i64(4, &[0, 5, 0, -1, 0]);
    assert!(even.has_parity(Parity::Plus));
    assert_eq!(act(&even, &GroupElt::EPS), even);
    assert!(odd.has_parity(Parity::Minus));
    assert_eq!(act(&odd, &GroupElt::EPS), -&odd);
}

#[test]
fn json_shapes() {
    let x = HPoly2::from_i64(1, &[1, -2]);
    assert_eq!(x.to_json(), serde_json::json!({"degree": 1, "coeffs": ["1/1", "-2/1"]}));
    let t = HPoly3::monomial(0, 1, 0);
    assert_eq!(t.to_json(), serde_json::json!([[0, 1, 0, "1/1"]]));
}
