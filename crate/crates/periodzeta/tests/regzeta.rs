use periodzeta::exact_linalg::{q, Q};
use periodzeta::regzeta::numeric::{euler_checks, pi};
use periodzeta::regzeta::*;
use periodzeta::Error;

const D: u32 = 30;

fn w(s: &str) -> Word01 {
    s.parse().unwrap()
}

fn close(a: &Real, b: &Real, digits: u32) -> bool {
    let tol = Real::pow10_neg(digits, D);
    let scale = if b.abs() > Real::one(D) { b.abs() } else { Real::one(D) };
    a.sub(b).abs() < tol.mul(&scale)
}

#[test]
fn reg_word_examples() {
    assert_eq!(reg_word(&w("1")).unwrap(), MZVExpr::t().scale(&q(-1)));
    assert!(reg_word(&w("0")).unwrap().is_zero());
    assert_eq!(reg_word(&w("10")).unwrap(), MZVExpr::zeta(2).scale(&q(-1)));
    assert_eq!(reg_word(&w("01")).unwrap(), MZVExpr::zeta(2));
    assert_eq!(reg_word(&w("")).unwrap(), MZVExpr::one());
    assert!(matches!(reg_word(&w("0111")), Err(Error::DepthUnsupported(3))));
}

#[test]
fn reg_of_ones_is_exponential() {
    // I(1^n) = (-T)^n / n!
    let e = reg_word(&w("11")).unwrap();
    assert_eq!(e, MZVExpr::term(2, ZetaSym::One, Q::new(1.into(), 2.into())));
}

#[test]
fn j_expand_examples() {
    assert_eq!(j_expand(&[1, 0]).unwrap(), MZVExpr::zeta(2));
    // J(0; k) = -zeta(k+1)
    assert_eq!(j_expand(&[0, 3]).unwrap(), MZVExpr::zeta(4).scale(&q(-1)));
    assert_eq!(j_expand(&[0, 0]).unwrap(), MZVExpr::t().scale(&q(-1)));
    assert!(j_expand(&[1, 1, 1, 1]).is_err());
    // J(1;3,0) = -(4 zeta^sh(5,1) + zeta^sh(4,2)), expanded through reg_word
    let e = j_expand(&[1, 3, 0]).unwrap();
    assert_eq!(e, j_value(&[1, 3, 0]).unwrap());
    assert!(e.max_t_power() == Some(1));
}

#[test]
fn closed_form_matches_regularization() {
    for total in 0..=12usize {
        for k0 in 0..=total {
            for k1 in 0..=total - k0 {
                let k2 = total - k0 - k1;
                assert_eq!(j_expand(&[k0, k1, k2]).unwrap(), j_value(&[k0, k1, k2]).unwrap(), "J({k0};{k1},{k2})");
            }
            assert_eq!(j_expand(&[k0, total - k0]).unwrap(), j_value(&[k0, total - k0]).unwrap());
        }
    }
}

#[test]
fn zeta_num_examples() {
    let p = pi(D);
    let z2 = zeta_num(2, D).unwrap();
    assert!(close(&z2, &p.mul(&p).mul_q(&Q::new(1.into(), 6.into())), 30));
    assert_eq!(z2.to_decimal(12), "1.644934066848");
    assert_eq!(dzeta_num(1, 2, 20).unwrap().to_decimal(19), zeta_num(3, 20).unwrap().to_decimal(19));
    assert!(close(&dzeta_num(1, 2, D).unwrap(), &zeta_num(3, D).unwrap(), 29));
    let z4 = zeta_num(4, D).unwrap();
    let harmonic = z2.mul(&z2).sub(&z4).mul_q(&Q::new(1.into(), 2.into()));
    assert!(close(&dzeta_num(2, 2, D).unwrap(), &harmonic, 29));
    let p4 = p.mul(&p).mul(&p).mul(&p);
    assert!(close(&harmonic, &p4.mul_q(&Q::new(1.into(), 120.into())), 29));
    assert!(matches!(zeta_num(1, D), Err(Error::Divergent(_))));
    assert!(dzeta_num(2, 1, D).is_err());
}

#[test]
fn euler_oracles() {
    let tol = Real::pow10_neg(25, D);
    for (id, r) in euler_checks(D).unwrap() {
        assert!(r < tol, "{id}: {}", r.to_sci());
    }
}

#[test]
fn eval_expr_examples() {
    let zero = Real::zero(D);
    assert!(eval_expr(&MZVExpr::t().scale(&q(-1)), &zero, D).unwrap().is_zero());
    let z2 = eval_expr(&MZVExpr::zeta(2), &zero, D).unwrap();
    assert_eq!(z2.to_decimal(9), "1.644934067");
    let e = j_value(&[0, 5]).unwrap();
    let v = eval_expr(&e, &Real::from_i64(3, D), D).unwrap();
    assert!(close(&v, &zeta_num(6, D).unwrap().neg(), 28));
}

#[test]
fn j_word_shape() {
    assert_eq!(Word01::from_j(&[2, 0, 1]).to_string(), "00110");
    assert_eq!(Word01::from_j(&[0, 1]).to_string(), "10");
    assert!(w("1100").is_convergent());
    assert!(!w("0110").is_convergent());
    assert_eq!(w("1100").dual(), w("1100"));
    assert_eq!(w("110").dual(), w("100"));
}

#[test]
fn shuffle_counts() {
    let s = shuffle(&w("01"), &w("1"));
    let total: u64 = s.values().sum();
    assert_eq!(total, 3);
    assert_eq!(s[&w("011")], 2);
    assert_eq!(s[&w("101")], 1);
}

#[test]
fn table1_weight_4() {
    let six = q(6);
    let lhs = vec![(six.clone(), vec![1, 3, 0]), (-six, vec![3, 1, 0])];
    let r = check_identity(&lhs, Some(&q(11)), D).unwrap();
    assert!(r.t_coefficients_vanish && r.constant_term_matches == Some(true));
    assert_eq!(r.recovered, Some(q(11)));
}

#[test]
fn euler_relation() {
    for wt in [4, 8, 10] {
        let lhs = vec![(q(1), vec![wt, 0, 0]), (q(-1), vec![0, wt, 0])];
        assert!(check_identity(&lhs, Some(&q(1)), D).unwrap().passed(), "w={wt}");
    }
}

#[test]
fn wrong_rhs_is_reported() {
    let lhs = vec![(q(1), vec![4, 0, 0]), (q(-1), vec![0, 4, 0])];
    let r = check_identity(&lhs, Some(&q(2)), D).unwrap();
    assert_eq!(r.constant_term_matches, Some(false));
    assert!(!r.passed());
}

#[test]
fn mixed_weights_are_rejected() {
    let lhs = vec![(q(1), vec![4, 0, 0]), (q(1), vec![0, 3, 0])];
    assert!(check_identity(&lhs, None, D).is_err());
}

#[test]
fn rational_recovery() {
    let x = Real::from_q(&Q::new(118492.into(), 691.into()), D);
    let tol = Real::pow10_neg(25, D);
    assert_eq!(recover_rational(&x, &tol, 1_000_000), Some(Q::new(118492.into(), 691.into())));
    assert_eq!(recover_rational(&pi(D), &tol, 1000), None);
}
