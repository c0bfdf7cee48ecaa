use periodzeta::det_lab::{build_matrix, DetFamily};
use periodzeta::exact_linalg::*;
use periodzeta::Error;

#[test]
fn rref_examples() {
    let r = rref(&Matrix::from_i64(&[&[1, 2], &[2, 4]]));
    assert_eq!(r.rank, 1);
    assert_eq!(r.pivot_columns, vec![0]);

    let id = Matrix::identity(3);
    let r = rref(&id);
    assert_eq!(r.reduced, id);
    assert_eq!(r.rank, 3);

    let r = rref(&Matrix::from_i64(&[&[0, 1], &[1, 0]]));
    assert_eq!(r.reduced, Matrix::identity(2));
    assert_eq!(r.rank, 2);
}

#[test]
fn kernel_examples() {
    let k = kernel(&Matrix::from_i64(&[&[1, 1]]));
    assert_eq!(k.basis_vectors(), vec![vec![q(1), q(-1)]]);

    assert_eq!(kernel(&Matrix::identity(4)).dim(), 0);

    // RREF of span{(1, -1/2)} is (1, -1/2)
    let k = kernel(&Matrix::from_i64(&[&[1, 2], &[2, 4]]));
    assert_eq!(k.dim(), 1);
    assert_eq!(k, Subspace::span(2, &[vec![q(-2), q(1)]]).unwrap());
    assert_eq!(k.basis_vectors(), vec![vec![q(1), qr(-1, 2)]]);
}

#[test]
fn det_examples() {
    assert_eq!(det_exact(&Matrix::from_i64(&[&[2]])).unwrap(), q(2));
    assert_eq!(det_exact(&Matrix::from_i64(&[&[1, 2], &[3, 4]])).unwrap(), q(-2));
    assert_eq!(det_exact(&build_matrix(DetFamily::E0o, 3).unwrap()).unwrap(), q(1));
    assert!(matches!(det_exact(&Matrix::zeros(2, 3)), Err(Error::Shape(_))));
}

#[test]
fn det_with_fractions() {
    let m = Matrix::from_rows(2, &[vec![qr(1, 2), qr(1, 3)], vec![qr(1, 4), qr(1, 5)]]).unwrap();
    assert_eq!(det_exact(&m).unwrap(), qr(1, 10) - qr(1, 12));
}

#[test]
fn reduce_mod_examples() {
    let r = reduce_mod(&Matrix::identity(3), 2).unwrap();
    assert!(r.is_identity());
    assert_eq!(r.det, Some(1));

    let r = reduce_mod(&Matrix::from_i64(&[&[2, 1], &[1, 2]]), 2).unwrap();
    assert_eq!(r.entries, vec![0, 1, 1, 0]);
    assert_eq!(r.det, Some(1));
    assert_eq!(r.rank, 2);

    let r = reduce_mod(&build_matrix(DetFamily::E1e, 7).unwrap(), 2).unwrap();
    assert!(r.is_identity());
}

#[test]
fn reduce_mod_rejects_bad_denominator() {
    let m = Matrix::from_rows(1, &[vec![qr(1, 3)]]).unwrap();
    assert!(matches!(reduce_mod(&m, 3), Err(Error::BadReduction(3))));
    assert_eq!(reduce_mod(&m, 2).unwrap().entries, vec![1]);
}

#[test]
fn rationals_print_as_fractions() {
    assert_eq!(fmt_q(&q(3)), "3/1");
    assert_eq!(fmt_q(&qr(-2, 4)), "-1/2");
    assert_eq!(parse_q("-1/2").unwrap(), qr(-1, 2));
    assert_eq!(parse_q("5").unwrap(), q(5));
}

#[test]
fn subspace_operations() {
    let a = Subspace::span(3, &[vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]]).unwrap();
    let b = Subspace::span(3, &[vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)]]).unwrap();
    assert_eq!(a.intersection(&b).unwrap(), Subspace::span(3, &[vec![q(0), q(5), q(0)]]).unwrap());
    assert_eq!(a.sum(&b).unwrap(), Subspace::full(3));
    assert_eq!(a.annihilator(), Subspace::span(3, &[vec![q(0), q(0), q(1)]]).unwrap());
    assert!(a.contains(&[q(2), q(-7), q(0)]));
    assert!(!a.contains(&[q(0), q(0), q(1)]));
}
