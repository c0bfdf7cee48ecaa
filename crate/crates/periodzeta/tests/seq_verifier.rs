use periodzeta::exact_linalg::{q, qi, Q, Subspace};
use periodzeta::period_polys::{dim_modular_oracle, period_basis, period_space, GroupId};
use periodzeta::polyspace::{factorial, HPoly2, Parity};
use periodzeta::seq_verifier::*;
use periodzeta::structure_maps::u_gkz;
use periodzeta::Error;
use std::collections::HashSet;

fn fam(s: &str) -> MonomialFamily {
    s.parse().unwrap()
}

fn qs(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

#[test]
fn registry_has_34_unique_sequences() {
    let r = registry();
    assert_eq!(r.len(), 34);
    assert_eq!(r.iter().filter(|d| d.side == Side::Relation).count(), 17);
    assert_eq!(r.iter().filter(|d| d.side == Side::Dual).count(), 17);
    let ids: HashSet<_> = r.iter().map(|d| d.id).collect();
    assert_eq!(ids.len(), 34);
    for d in &r {
        assert!(d.id.ends_with(&d.family.name()), "{}", d.id);
    }
}

#[test]
fn family_enumeration_is_lexicographic() {
    let f = fam("oo0");
    assert_eq!(f.enumerate(4), vec![(1, 3, 0), (3, 1, 0)]);
    let all = fam("aaa").enumerate(3);
    assert_eq!(all.len(), 10);
    assert!(all.windows(2).all(|p| p[0] < p[1]));
    assert!("ox1".parse::<MonomialFamily>().is_err());
}

#[test]
fn rel_oo0_weight_4() {
    let c = verify_sequence("rel:oo0", 4).unwrap();
    assert_eq!((c.dim_left, c.dim_middle, c.dim_right), (1, 2, 1));
    assert!(c.exact && c.composition_zero && c.injective);
}

#[test]
fn rel_e0o_is_spanned_by_a_poly() {
    for w in (1..=15).step_by(2) {
        let c = verify_sequence("rel:e0o", w).unwrap();
        assert!(c.exact, "w={w}");
        assert_eq!(c.dim_left, 1);
    }
}

#[test]
fn dual_oe0_has_zero_kernel() {
    for w in (1..=15).step_by(2) {
        let c = verify_sequence("dual:oe0", w).unwrap();
        assert!(c.exact);
        assert_eq!(c.kernel.dim(), 0);
    }
}

#[test]
fn verify_rejects_bad_inputs() {
    assert!(matches!(verify_sequence("rel:oo0", 5), Err(Error::ParityMismatch(_))));
    assert!(matches!(verify_sequence("rel:xyz", 4), Err(Error::UnknownSequence(_))));
    assert!(verify_sequence("dual:oo0", 0).is_err());
}

#[test]
fn gkz_relations_at_weight_10() {
    let k = relation_kernel(&fam("0ee"), 10);
    assert_eq!(k.dim(), 2);
    // monomials (0, a, 10 - a) for even a correspond to X^a Y^(10-a)
    let f = fam("0ee");
    for b in period_basis(GroupId::SL2Z, Parity::Plus, 10).unwrap() {
        let img = u_gkz(&b);
        let v: Vec<Q> = f.enumerate(10).iter().map(|&(_, a, _)| img.coeff(a).clone()).collect();
        assert!(k.contains(&v));
    }
}

#[test]
fn table1_relations() {
    let k = relation_kernel(&fam("oo0"), 4);
    assert_eq!(k, Subspace::span(2, &[qs(&[1, -1])]).unwrap());
    let k = relation_kernel(&fam("oo0"), 8);
    assert_eq!(k, Subspace::span(4, &[qs(&[1, -2, 2, -1])]).unwrap());
    let k = relation_kernel(&fam("oo0"), 10);
    let expected = Subspace::span(5, &[qs(&[2, -3, 0, 3, -2]), qs(&[4, -25, 42, -25, 4])]).unwrap();
    assert_eq!(k, expected);
}

#[test]
fn even_zero_odd_sum_relation() {
    let f = fam("e0o");
    for w in (1..=15).step_by(2) {
        let monos = f.enumerate(w);
        // psi coefficients whose J form is the all-ones vector
        let v: Vec<Q> = monos.iter().map(|&(r, s, t)| Q::new(1.into(), factorial(r) * factorial(s) * factorial(t))).collect();
        assert_eq!(to_j_normalization(&f, w, &v), vec![q(1); monos.len()]);
        let k = relation_kernel(&f, w);
        assert_eq!(k.dim(), 1, "w={w}");
        assert!(k.contains(&v));
    }
}

#[test]
fn no_relations_for_the_determinant_families() {
    for w in (1..=21).step_by(2) {
        for f in ["e1e", "eo0", "oe0"] {
            let fw = if f == "e1e" { w + 1 } else { w };
            assert_eq!(relation_kernel(&fam(f), fw).dim(), 0, "{f} w={w}");
        }
    }
}

#[test]
fn dual_kernel_characterizations() {
    for w in (2..=16).step_by(2) {
        let k = dual_kernel(&fam("0oo"), w, Parity::Plus);
        let swapped: Vec<Vec<Q>> =
            period_basis(GroupId::Gamma0_2, Parity::Plus, w).unwrap().iter().map(|p| p.swap().into_coeffs()).collect();
        assert_eq!(k, Subspace::span(w + 1, &swapped).unwrap(), "w={w}");

        let k = dual_kernel(&fam("oo0"), w, Parity::Plus);
        assert_eq!(k, period_space(GroupId::GammaA, Parity::Plus, w).unwrap(), "w={w}");

        assert_eq!(dual_kernel(&fam("e1e"), w + 1, Parity::Plus).dim(), 0);
    }
}

#[test]
fn discrepancy_notes_name_the_matching_space() {
    let c = verify_sequence("dual:oo0", 8).unwrap();
    let note = c.discrepancy_note.unwrap();
    assert!(note.contains("equals W^(+,Gamma_A)"), "{note}");
    assert!(c.exact);
    let c = verify_sequence("dual:o0o", 8).unwrap();
    let note = c.discrepancy_note.unwrap();
    assert!(note.contains("unswapped"), "{note}");
    assert!(c.exact);
    assert!(verify_sequence("rel:oo0", 8).unwrap().discrepancy_note.is_none());
}

#[test]
fn known_dimension_identities() {
    for w in (4..=24).step_by(2) {
        let (m, s) = dim_modular_oracle(w + 2).unwrap();
        let n = family_size(&fam("0ee"), w);
        assert_eq!(n - relation_kernel(&fam("0ee"), w).dim(), w / 2 + 1 - m);
        let n = family_size(&fam("o1o"), w + 1);
        assert_eq!(n - relation_kernel(&fam("o1o"), w + 1).dim(), w / 2 - s);
    }
}

#[test]
fn survey_examples() {
    for r in dimension_survey(SurveyFamily::EvenEvenOne, 0..=21) {
        assert_eq!((r.computed, r.predicted), (1, 1), "w={}", r.weight);
    }
    for r in dimension_survey(SurveyFamily::OneOddEven, 0..=20) {
        assert_eq!(r.computed, r.predicted, "w={}", r.weight);
    }
    let low = dimension_survey(SurveyFamily::OddOneEven, 0..=8);
    assert!(low.iter().all(|r| r.predicted == 0 && r.computed == 0));
}

#[test]
fn certificate_json_shape() {
    let c = verify_sequence("rel:oo0", 4).unwrap();
    let j = c.to_json();
    assert_eq!(j["id"], "rel:oo0");
    assert_eq!(j["weight"], 4);
    assert_eq!(j["dims"]["left"], 1);
    assert_eq!(j["dims"]["middle"], 2);
    assert_eq!(j["dims"]["right"], 1);
    assert_eq!(j["exact"], true);
    assert_eq!(j["composition_zero"], true);
    assert!(j["discrepancy_note"].is_null());
    let kb = j["kernel_basis"].as_array().unwrap();
    assert_eq!(kb.len(), 1);
    assert!(kb[0].as_array().unwrap().iter().all(|x| x.as_str().unwrap().contains('/')));
}

#[test]
fn ma_sequences_fail_only_at_weight_one() {
    for id in ["rel:0eo", "rel:1eo", "rel:e1o"] {
        let c = verify_sequence(id, 1).unwrap();
        assert!(!c.exact && !c.injective && c.composition_zero, "{id}");
        assert_eq!((c.kernel.dim(), c.image.dim()), (1, 0));
        for w in (3..=13).step_by(2) {
            assert!(verify_sequence(id, w).unwrap().exact, "{id} w={w}");
        }
    }
}

#[test]
fn quotient_representatives_skip_eisenstein() {
    for w in (2..=14).step_by(2) {
        let reps = quotient_representatives(w);
        let dim = period_space(GroupId::SL2Z, Parity::Plus, w).unwrap().dim();
        assert_eq!(reps.len(), dim - 1);
        let mut vs: Vec<Vec<Q>> = reps.iter().map(|p| p.coeffs().to_vec()).collect();
        vs.push(HPoly2::from_terms(w, &[(w, 1), (0, -1)]).into_coeffs());
        assert_eq!(Subspace::span(w + 1, &vs).unwrap().dim(), dim);
    }
}

#[test]
fn j_normalization_scales_by_factorials() {
    let f = fam("o1o");
    let v: Vec<Q> = f.enumerate(5).iter().map(|_| q(1)).collect();
    let j = to_j_normalization(&f, 5, &v);
    let expected: Vec<Q> = f.enumerate(5).iter().map(|&(r, s, t)| qi(factorial(r) * factorial(s) * factorial(t))).collect();
    assert_eq!(j, expected);
}
