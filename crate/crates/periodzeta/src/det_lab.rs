//! Binomial determinant families, their closed forms and the related
//! conjectures.

use crate::error::{Error, Result};
use crate::exact_linalg::{det_exact, qi, qr, reduce_mod, sign, Matrix, ModReduction, Q};
use crate::polyspace::{binomial, factorial};
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DetFamily {
    E1e,
    Eo0,
    Oe0,
    E0o,
    /// -delta + C(w-2m-1, 2n) - C(2m+1, 2n)
    OneOo,
    /// -delta + C(w-2m-1, 2n) + C(2m+1, 2n)
    OneOoPlus,
    /// -delta + C(w-2m-1, 2n-2m) - C(2m+1, 2n)
    OoOne,
}

impl DetFamily {
    pub const ALL: [DetFamily; 7] = [
        DetFamily::E1e,
        DetFamily::Eo0,
        DetFamily::Oe0,
        DetFamily::E0o,
        DetFamily::OneOo,
        DetFamily::OneOoPlus,
        DetFamily::OoOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DetFamily::E1e => "e1e",
            DetFamily::Eo0 => "eo0",
            DetFamily::Oe0 => "oe0",
            DetFamily::E0o => "e0o",
            DetFamily::OneOo => "one_oo",
            DetFamily::OneOoPlus => "one_oo_plus",
            DetFamily::OoOne => "oo_one",
        }
    }

    pub fn odd_weight(self) -> bool {
        matches!(self, DetFamily::E1e | DetFamily::Eo0 | DetFamily::Oe0 | DetFamily::E0o)
    }

    pub fn accepts(self, w: usize) -> bool {
        match self {
            DetFamily::E0o => w % 2 == 1 && w >= 3,
            f if f.odd_weight() => w % 2 == 1,
            _ => w.is_multiple_of(2) && w >= 2,
        }
    }

    /// Index range `lo..=hi` for m and n.
    fn range(self, w: usize) -> (i64, i64) {
        let w = w as i64;
        match self {
            DetFamily::E0o => (1, (w - 1) / 2),
            f if f.odd_weight() => (0, (w - 1) / 2),
            _ => (0, w / 2 - 1),
        }
    }

    pub fn entry(self, w: usize, m: i64, n: i64) -> BigInt {
        let w = w as i64;
        let c = binomial;
        let delta = if m == n { BigInt::one() } else { BigInt::zero() };
        match self {
            DetFamily::E1e => delta + c(w - 1 - 2 * m, 2 * n - 1) + c(2 * m, 2 * n - 1),
            DetFamily::Eo0 => c(2 * m, w - 2 * n) + c(w - 2 * m, 2 * n),
            DetFamily::Oe0 => delta - c(w - 2 * m, 2 * n - 2 * m) - c(2 * m, 2 * n),
            DetFamily::E0o => c(2 * m, 2 * n) - c(w - 2 * m, 2 * n),
            DetFamily::OneOo => -delta + c(w - 2 * m - 1, 2 * n) - c(2 * m + 1, 2 * n),
            DetFamily::OneOoPlus => -delta + c(w - 2 * m - 1, 2 * n) + c(2 * m + 1, 2 * n),
            DetFamily::OoOne => -delta + c(w - 2 * m - 1, 2 * n - 2 * m) - c(2 * m + 1, 2 * n),
        }
    }
}

impl std::str::FromStr for DetFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DetFamily::ALL
            .iter()
            .copied()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

pub fn build_matrix(family: DetFamily, w: usize) -> Result<Matrix> {
    if !family.accepts(w) {
        return Err(Error::ParityMismatch(format!("{} is not defined at w={w}", family.name())));
    }
    let (lo, hi) = family.range(w);
    let rows: Vec<Vec<Q>> =
        (lo..=hi).map(|m| (lo..=hi).map(|n| qi(family.entry(w, m, n))).collect()).collect();
    Matrix::from_rows(rows.len(), &rows)
}

pub fn determinant(family: DetFamily, w: usize) -> Result<Q> {
    det_exact(&build_matrix(family, w)?)
}

/// ((w-1)/2)! with sign -1 exactly when w = 5 mod 8.
pub fn e0o_closed_form(w: usize) -> Q {
    let v = qi(factorial((w - 1) / 2));
    if w % 8 == 5 {
        -v
    } else {
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub family: DetFamily,
    pub weight: usize,
    pub det: Q,
    pub predicted: Q,
    pub matches: bool,
}

pub fn check_e0o_closed_form(w: usize) -> Result<Comparison> {
    let det = determinant(DetFamily::E0o, w)?;
    let predicted = e0o_closed_form(w);
    Ok(Comparison { family: DetFamily::E0o, weight: w, matches: det == predicted, det, predicted })
}

/// L_1 = 1, L_2 = 3, L_n = L_{n-1} + L_{n-2}.
pub fn lucas(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::from(2), BigInt::one());
    for _ in 0..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    a
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LucasFactor {
    pub n: usize,
    pub c: Q,
}

pub fn lucas_factor(n: usize) -> LucasFactor {
    assert!(n % 2 == 1, "lucas factors are defined for odd n");
    let mut c = qi(lucas(n));
    if n % 6 == 3 {
        c *= qr(1, 4);
    }
    if (n - 1) / 2 % 2 == 1 {
        c = -c;
    }
    LucasFactor { n, c }
}

pub fn lucas_product(w: usize) -> Q {
    (1..=w).step_by(2).map(|n| lucas_factor(n).c).product()
}

pub fn lucas_conjecture(w: usize) -> Result<Comparison> {
    let det = determinant(DetFamily::Eo0, w)?;
    let predicted = lucas_product(w);
    Ok(Comparison { family: DetFamily::Eo0, weight: w, matches: det == predicted, det, predicted })
}

/// Predicted sign of det for the relation families at even w.
pub fn predicted_sign(family: DetFamily, w: usize) -> Result<i32> {
    let h = w / 2;
    match family {
        DetFamily::OneOo | DetFamily::OneOoPlus => Ok(if matches!(h % 6, 0 | 2 | 5) { 1 } else { -1 }),
        DetFamily::OoOne => Ok(if h.is_multiple_of(2) { 1 } else { -1 }),
        f => Err(Error::Invalid(format!("no sign predictor for {}", f.name()))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignCheck {
    pub family: DetFamily,
    pub weight: usize,
    pub det: Q,
    pub sign: i32,
    pub predicted: i32,
    /// False when the determinant vanishes.
    pub nonzero: bool,
    pub matches: bool,
}

pub fn sign_pattern(family: DetFamily, w: usize) -> Result<SignCheck> {
    let predicted = predicted_sign(family, w)?;
    let det = determinant(family, w)?;
    let s = sign(&det);
    Ok(SignCheck { family, weight: w, nonzero: s != 0, matches: s == predicted, sign: s, predicted, det })
}

pub fn mod_reduction(family: DetFamily, w: usize, p: u64) -> Result<ModReduction> {
    reduce_mod(&build_matrix(family, w)?, p)
}

/// Entries strictly below the anti-diagonal vanish and the anti-diagonal is 1.
pub fn is_unit_anti_triangular(m: &ModReduction) -> bool {
    let n = m.rows;
    if n != m.cols {
        return false;
    }
    (0..n).all(|i| {
        (0..n).all(|j| match (i + j).cmp(&(n - 1)) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Equal => m.get(i, j) == 1,
            std::cmp::Ordering::Greater => m.get(i, j) == 0,
        })
    })
}
