//! The explicit linear maps and vanishing criteria relating period
//! polynomials to depth-graded double zeta values.

use crate::error::{Error, Result};
use crate::exact_linalg::{q, qr, Q};
use crate::polyspace::{GroupElt, GroupRingElt, HPoly2, HPoly3, Lin2, Lin3, Parity};

const X: Lin2 = Lin2(1, 0);
const Y: Lin2 = Lin2(0, 1);
const NEG_X: Lin2 = Lin2(-1, 0);
const NEG_Y: Lin2 = Lin2(0, -1);
const X_PLUS_Y: Lin2 = Lin2(1, 1);
const X_MINUS_Y: Lin2 = Lin2(1, -1);
const NEG_X_MINUS_Y: Lin2 = Lin2(-1, -1);
const NEG_X_PLUS_Y: Lin2 = Lin2(-1, 1);

fn half() -> Q {
    qr(1, 2)
}

/// The linear form aX + bY as a degree-1 polynomial.
pub fn linear(a: i64, b: i64) -> HPoly2 {
    HPoly2::from_i64(1, &[b, a])
}

pub fn pow(p: &HPoly2, n: usize) -> HPoly2 {
    (0..n).fold(HPoly2::from_i64(0, &[1]), |acc, _| &acc * p)
}

/// 1/2 (p(-X-Y, X) + p(X-Y, X)).
pub fn u_gkz(p: &HPoly2) -> HPoly2 {
    (&p.compose(NEG_X_MINUS_Y, X) + &p.compose(X_MINUS_Y, X)).scale(&half())
}

/// X p(X+Y, X) + d/dY [q(X+Y, X)].
pub fn r_poly(p: &HPoly2, qq: &HPoly2) -> HPoly2 {
    &p.compose(X_PLUS_Y, X).mul_x() + &qq.compose(X_PLUS_Y, X).deriv_y()
}

fn check_m_degrees(p: &HPoly2, qq: &HPoly2, w: usize) -> Result<()> {
    if w.is_multiple_of(2) {
        return Err(Error::ParityMismatch(format!("u_M needs odd w, got {w}")));
    }
    if p.degree() != w - 1 {
        return Err(Error::DegreeMismatch { expected: w - 1, got: p.degree() });
    }
    if qq.degree() != w + 1 {
        return Err(Error::DegreeMismatch { expected: w + 1, got: qq.degree() });
    }
    Ok(())
}

/// (X-Y)(X+Y)^(w-1) - (X+Y)(X-Y)^(w-1) - 2Y^w + 4X^(w-1)Y.
pub fn ma_trivial_poly(w: usize) -> HPoly2 {
    let xp = linear(1, 1);
    let xm = linear(1, -1);
    let a = &xm * &pow(&xp, w - 1);
    let b = &xp * &pow(&xm, w - 1);
    let mut c = &a - &b;
    c = &c - &HPoly2::from_terms(w, &[(0, 2)]);
    &c + &HPoly2::from_terms(w, &[(w - 1, 4)])
}

pub fn u_m(p: &HPoly2, qq: &HPoly2, c: &Q, w: usize) -> Result<HPoly2> {
    check_m_degrees(p, qq, w)?;
    let r = r_poly(p, qq);
    let s = &(&(&r - &r.swap()) + &r.compose(NEG_X, Y)) - &r.compose(Y, NEG_X);
    Ok(&s.scale(&half()) + &ma_trivial_poly(w).scale(c))
}

pub fn u_m_prime(p: &HPoly2, qq: &HPoly2, w: usize) -> Result<HPoly2> {
    check_m_degrees(p, qq, w)?;
    let r = r_poly(p, qq);
    let s = &(&(&r + &r.swap()) - &r.compose(NEG_X, Y)) - &r.compose(Y, NEG_X);
    Ok(s.scale(&half()))
}

/// (X+Y)^w + (-X+Y)^w.
pub fn a_poly(w: usize) -> HPoly2 {
    &pow(&linear(1, 1), w) + &pow(&linear(-1, 1), w)
}

/// q(x1-x0, x2-x0) + q(x2-x1, x1-x0) - q(x2-x1, x2-x0).
pub fn dual_criterion(qq: &HPoly2) -> HPoly3 {
    let a = qq.compose3(Lin3(-1, 1, 0), Lin3(-1, 0, 1));
    let b = qq.compose3(Lin3(0, -1, 1), Lin3(-1, 1, 0));
    let c = qq.compose3(Lin3(0, -1, 1), Lin3(-1, 0, 1));
    &(&a + &b) - &c
}

/// p(-X-Y, X, Y) + p(-Y, -X+Y, X) - p(-Y, -X, X+Y); the relation holds
/// exactly when this lies in V_w^-.
pub fn relation_criterion(p: &HPoly3) -> HPoly2 {
    let a = p.compose2(NEG_X_MINUS_Y, X, Y);
    let b = p.compose2(NEG_Y, NEG_X_PLUS_Y, X);
    let c = p.compose2(NEG_Y, NEG_X, X_PLUS_Y);
    &(&a + &b) - &c
}

/// The two-variable form paired against q in the basic pairing identity.
pub fn two_variable_form(p: &HPoly3) -> HPoly2 {
    relation_criterion(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Calculus {
    DX,
    DY,
    IntY,
}

pub fn calculus(p: &HPoly2, which: Calculus) -> HPoly2 {
    match which {
        Calculus::DX => p.deriv_x(),
        Calculus::DY => p.deriv_y(),
        Calculus::IntY => p.integrate_y(),
    }
}

/// 1/2 (-p(X,X+Y) - p(X,-X+Y) - p(X-Y,Y) - p(X+Y,Y) + 2p).
pub fn eta(p: &HPoly2) -> HPoly2 {
    let s = &(&(&p.compose(X, X_PLUS_Y) + &p.compose(X, NEG_X_PLUS_Y)) + &p.compose(X_MINUS_Y, Y))
        + &p.compose(X_PLUS_Y, Y);
    (&p.scale(&q(2)) - &s).scale(&half())
}

/// p(Y, X+Y) - p(X+Y, X) + p(X, Y).
pub fn phi_prime(p: &HPoly2) -> HPoly2 {
    &(&p.compose(Y, X_PLUS_Y) - &p.compose(X_PLUS_Y, X)) + p
}

/// Projection of `phi_prime` onto V_w^+.
pub fn phi(p: &HPoly2) -> HPoly2 {
    phi_prime(p).parity_part(Parity::Plus)
}

/// phi_prime(p + p(-X, Y)), taken verbatim; not contained in V_w^+ in general.
pub fn phi_literal(p: &HPoly2) -> HPoly2 {
    phi_prime(&(p + &p.compose(NEG_X, Y)))
}

/// (U + U^2)(S - 1).
pub fn alpha_operator() -> GroupRingElt {
    let u = GroupRingElt::elt(GroupElt::U);
    let u2 = GroupRingElt::elt(GroupElt::U.pow(2));
    let s = GroupRingElt::elt(GroupElt::S);
    &(&u + &u2) * &(&s - &GroupRingElt::one())
}

pub fn alpha(p: &HPoly2) -> HPoly2 {
    p.act_ring(&alpha_operator())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProofOp {
    Eta,
    Phi,
    PhiPrime,
    Alpha,
}

pub fn proof_operator(p: &HPoly2, which: ProofOp) -> HPoly2 {
    match which {
        ProofOp::Eta => eta(p),
        ProofOp::Phi => phi(p),
        ProofOp::PhiPrime => phi_prime(p),
        ProofOp::Alpha => alpha(p),
    }
}

/// Basis X^a Y^b + X^b Y^a (a < b odd, or a = b odd) of the symmetric part of V_w^-.
pub fn symmetric_odd_basis(w: usize) -> Vec<HPoly2> {
    (1..=w / 2)
        .filter(|a| a % 2 == 1 && (w - a) % 2 == 1)
        .map(|a| {
            let b = w - a;
            if a == b {
                HPoly2::from_terms(w, &[(a, 1)])
            } else {
                HPoly2::from_terms(w, &[(a, 1), (b, 1)])
            }
        })
        .collect()
}
