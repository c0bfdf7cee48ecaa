#![allow(dead_code)]
//! Checks shared by the property suites and the acceptance harness.

use periodzeta::exact_linalg::{q, Q};
use periodzeta::polyspace::{inner2, inner3, monomials3, HPoly2, HPoly3, Parity};
use periodzeta::seq_verifier::{relation_kernel, swap_relations, IndexSet, MonomialFamily};
use periodzeta::structure_maps::{dual_criterion, two_variable_form};
use proptest::collection::vec;
use proptest::prelude::*;

pub fn hpoly3(w: usize, c: &[i64]) -> HPoly3 {
    let terms: Vec<((usize, usize, usize), Q)> = monomials3(w).into_iter().zip(c).map(|(m, &x)| (m, q(x))).collect();
    HPoly3::from_terms(w, &terms).unwrap()
}

pub fn hpoly2(w: usize, c: &[i64]) -> HPoly2 {
    HPoly2::from_i64(w, c)
}

pub fn n3(w: usize) -> usize {
    (w + 1) * (w + 2) / 2
}

/// Even degree <= 12 with random p(x0, x1, x2) and q(X, Y).
pub fn even_pair() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>)> {
    (0usize..=6).prop_flat_map(|h| {
        let w = 2 * h;
        (Just(w), vec(-6i64..=6, n3(w)), vec(-6i64..=6, w + 1))
    })
}

/// Odd total degree 1 + a + b <= 12 for the shift lemma, with q in Q[X^2, Y].
pub fn shift_case() -> impl Strategy<Value = (usize, Vec<i64>)> {
    (1usize..=12).prop_flat_map(|d| (Just(d), vec(-6i64..=6, d + 1)))
}

pub fn basic_lemma(w: usize, pc: &[i64], qc: &[i64]) -> bool {
    let p = hpoly3(w, pc);
    let qq = hpoly2(w, qc);
    inner3(&p, &dual_criterion(&qq)).unwrap() == inner2(&two_variable_form(&p), &qq).unwrap()
}

pub fn antipode_pairing(w: usize, pc: &[i64], qc: &[i64]) -> bool {
    let p = hpoly3(w, pc);
    let qq = hpoly2(w, qc).parity_part(Parity::Plus);
    inner3(&p, &dual_criterion(&qq)).unwrap() == inner3(&p.swap01(), &dual_criterion(&qq.swap())).unwrap()
}

/// Coefficient of x0 x1^a x2^b in dual_criterion(q) is minus that of x1^a x2^b in
/// dual_criterion(dq/dY), for q with only even powers of X and even a.
pub fn shift_lemma(d: usize, qc: &[i64]) -> bool {
    let mut c = qc.to_vec();
    for (i, x) in c.iter_mut().enumerate() {
        if i % 2 == 1 {
            *x = 0;
        }
    }
    let qq = hpoly2(d, &c);
    let lhs = dual_criterion(&qq);
    let rhs = dual_criterion(&qq.deriv_y());
    (0..d).step_by(2).all(|a| lhs.coeff(1, a, d - 1 - a) == -rhs.coeff(0, a, d - 1 - a))
}

pub fn index_set() -> impl Strategy<Value = IndexSet> {
    prop_oneof![
        Just(IndexSet::Even),
        Just(IndexSet::Odd),
        Just(IndexSet::Zero),
        Just(IndexSet::One),
        Just(IndexSet::All),
    ]
}

pub fn family_and_even_weight() -> impl Strategy<Value = (MonomialFamily, usize)> {
    (index_set(), index_set(), index_set(), 0usize..=6)
        .prop_map(|(a, b, c, h)| (MonomialFamily::new(a, b, c), 2 * h))
}

pub fn antipode_kernel_swap(f: &MonomialFamily, w: usize) -> bool {
    let k = relation_kernel(f, w);
    let swapped = swap_relations(f, w, &k);
    swapped == relation_kernel(&f.antipode(), w)
}
