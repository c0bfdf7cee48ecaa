use periodzeta::exact_linalg::Subspace;
use periodzeta::period_polys::*;
use periodzeta::polyspace::{HPoly2, Parity};
use periodzeta::Error;

fn span_of(w: usize, polys: &[HPoly2]) -> Subspace {
    Subspace::span(w + 1, &polys.iter().map(|p| p.coeffs().to_vec()).collect::<Vec<_>>()).unwrap()
}

fn p(w: usize, terms: &[(usize, i64)]) -> HPoly2 {
    HPoly2::from_terms(w, terms)
}

#[test]
fn gamma_a_odd_generators() {
    let w4 = period_space(GroupId::GammaA, Parity::Minus, 4).unwrap();
    assert_eq!(w4, span_of(4, &[p(4, &[(1, 1), (3, -1)])]));
    let w8 = period_space(GroupId::GammaA, Parity::Minus, 8).unwrap();
    assert_eq!(w8, span_of(8, &[p(8, &[(1, 1), (3, -2), (5, 2), (7, -1)])]));
}

#[test]
fn sl2z_weight_ten() {
    let minus = period_space(GroupId::SL2Z, Parity::Minus, 10).unwrap();
    assert_eq!(minus, span_of(10, &[p(10, &[(1, 4), (3, -25), (5, 42), (7, -25), (9, 4)])]));
    let plus = period_space(GroupId::SL2Z, Parity::Plus, 10).unwrap();
    assert_eq!(plus.dim(), 2);
    assert!(plus.contains(p(10, &[(10, 1), (0, -1)]).coeffs()));
    assert!(plus.contains(p(10, &[(2, 1), (4, -3), (6, 3), (8, -1)]).coeffs()));
}

#[test]
fn constants_are_not_period_polynomials() {
    assert_eq!(period_space(GroupId::SL2Z, Parity::Plus, 0).unwrap().dim(), 0);
}

#[test]
fn unsupported_pairs_error() {
    assert!(matches!(period_space(GroupId::Gamma0_2, Parity::Minus, 4), Err(Error::NoCharacterization(_))));
    assert!(matches!(period_space(GroupId::GammaB, Parity::Plus, 4), Err(Error::NoCharacterization(_))));
    assert!(period_space(GroupId::SL2Z, Parity::Plus, 3).is_err());
}

#[test]
fn modular_dimensions() {
    assert_eq!(dim_modular_oracle(12).unwrap(), (2, 1));
    assert_eq!(dim_modular_oracle(4).unwrap(), (1, 0));
    assert_eq!(dim_modular_oracle(26).unwrap(), (2, 1));
    assert!(dim_modular_oracle(7).is_err());
}

#[test]
fn eichler_shimura_dimensions() {
    for w in (4..=40).step_by(2) {
        let (m, s) = dim_modular_oracle(w + 2).unwrap();
        assert_eq!(period_space(GroupId::SL2Z, Parity::Plus, w).unwrap().dim(), m, "w={w}");
        assert_eq!(period_space(GroupId::SL2Z, Parity::Minus, w).unwrap().dim(), s, "w={w}");
    }
}

#[test]
fn eisenstein_polynomial_is_even_period() {
    for w in (2..=30).step_by(2) {
        assert!(period_space(GroupId::SL2Z, Parity::Plus, w).unwrap().contains(p(w, &[(w, 1), (0, -1)]).coeffs()));
    }
}

#[test]
fn gamma_b_is_all_odd_symmetric() {
    for w in (2..=20).step_by(2) {
        // X^a Y^b | S = -X^b Y^a for odd a, so the space is spanned by X^a Y^b + X^b Y^a
        let s = period_space(GroupId::GammaB, Parity::Minus, w).unwrap();
        let odd = Parity::Minus.exponents(w);
        let pairs = odd.iter().filter(|&&a| a <= w - a).count();
        assert_eq!(s.dim(), pairs, "w={w}");
    }
}

#[test]
fn bases_satisfy_their_conditions() {
    let pairs = [
        (GroupId::SL2Z, Parity::Plus),
        (GroupId::SL2Z, Parity::Minus),
        (GroupId::Gamma0_2, Parity::Plus),
        (GroupId::GammaA, Parity::Plus),
        (GroupId::GammaA, Parity::Minus),
        (GroupId::GammaB, Parity::Minus),
    ];
    for (g, par) in pairs {
        let sp = spec(g, par).unwrap();
        for w in (0..=16).step_by(2) {
            for b in period_basis(g, par, w).unwrap() {
                assert!(b.has_parity(par));
                for c in &sp.conditions {
                    assert!(b.act_ring(c).is_zero(), "{} {:?} w={w}", g.name(), par);
                }
            }
        }
    }
}
