//! Shuffle regularization of depth <= 2 iterated integrals on {0, 1} with
//! tangential base points, and numeric checks of explicit identities.

pub mod numeric;

use crate::error::{Error, Result};
use crate::exact_linalg::{fmt_q, q, qi, Q};
use crate::polyspace::binomial;
pub use numeric::{dzeta_num, dzeta_with_cutoff, eval_expr, recover_rational, zeta_num, Real};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

pub const MAX_DEPTH: usize = 2;

/// A word over {0, 1}; `true` is the letter 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word01(pub Vec<bool>);

impl Word01 {
    pub fn letters(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn depth(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    /// Starts with 1 and ends with 0 (or is empty).
    pub fn is_convergent(&self) -> bool {
        self.0.is_empty() || (self.0[0] && !self.0[self.0.len() - 1])
    }

    /// Word of J(k0; k1, ..., kd) = 0^k0 1 0^k1 ... 1 0^kd.
    pub fn from_j(k: &[usize]) -> Word01 {
        let mut v = vec![false; k[0]];
        for &ki in &k[1..] {
            v.push(true);
            v.extend(std::iter::repeat_n(false, ki));
        }
        Word01(v)
    }

    /// Reverse and exchange the letters.
    pub fn dual(&self) -> Word01 {
        Word01(self.0.iter().rev().map(|b| !b).collect())
    }
}

impl std::str::FromStr for Word01 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Invalid(format!("bad letter {c:?} in word {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word01)
    }
}

impl fmt::Display for Word01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Shuffle product as a multiset of words.
pub fn shuffle(a: &Word01, b: &Word01) -> BTreeMap<Word01, u64> {
    fn go(a: &[bool], b: &[bool], prefix: &mut Vec<bool>, out: &mut BTreeMap<Word01, u64>) {
        if a.is_empty() || b.is_empty() {
            let mut w = prefix.clone();
            w.extend_from_slice(a);
            w.extend_from_slice(b);
            *out.entry(Word01(w)).or_insert(0) += 1;
            return;
        }
        prefix.push(a[0]);
        go(&a[1..], b, prefix, out);
        prefix.pop();
        prefix.push(b[0]);
        go(a, &b[1..], prefix, out);
        prefix.pop();
    }
    let mut out = BTreeMap::new();
    go(&a.0, &b.0, &mut Vec::new(), &mut out);
    out
}

/// Z(n) = zeta(n), Z2(a, b) = sum over 0 < m1 < m2 of m1^-a m2^-b.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZetaSym {
    One,
    Z(u32),
    Z2(u32, u32),
}

impl ZetaSym {
    pub fn weight(self) -> u32 {
        match self {
            ZetaSym::One => 0,
            ZetaSym::Z(n) => n,
            ZetaSym::Z2(a, b) => a + b,
        }
    }
}

impl fmt::Display for ZetaSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZetaSym::One => f.write_str("1"),
            ZetaSym::Z(n) => write!(f, "Z({n})"),
            ZetaSym::Z2(a, b) => write!(f, "Z({a},{b})"),
        }
    }
}

/// Polynomial in T whose coefficients are rational combinations of
/// convergent zeta symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MZVExpr {
    terms: BTreeMap<(u32, ZetaSym), Q>,
}

impl MZVExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(0, ZetaSym::One, Q::one())
    }

    pub fn t() -> Self {
        Self::term(1, ZetaSym::One, Q::one())
    }

    pub fn term(t_pow: u32, sym: ZetaSym, c: Q) -> Self {
        let mut e = Self::zero();
        e.add_term(t_pow, sym, c);
        e
    }

    pub fn zeta(n: u32) -> Self {
        Self::term(0, ZetaSym::Z(n), Q::one())
    }

    pub fn add_term(&mut self, t_pow: u32, sym: ZetaSym, c: Q) {
        if c.is_zero() {
            return;
        }
        let key = (t_pow, sym);
        let v = self.terms.entry(key).or_insert_with(Q::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, ZetaSym), Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero();
        for (&(k, s), v) in &self.terms {
            out.add_term(k, s, v * c);
        }
        out
    }

    pub fn add_assign_scaled(&mut self, other: &MZVExpr, c: &Q) {
        for (&(k, s), v) in &other.terms {
            self.add_term(k, s, v * c);
        }
    }

    pub fn mul_t(&self) -> Self {
        let mut out = Self::zero();
        for (&(k, s), v) in &self.terms {
            out.add_term(k + 1, s, v.clone());
        }
        out
    }

    pub fn max_t_power(&self) -> Option<u32> {
        self.terms.keys().map(|&(k, _)| k).max()
    }

    /// Coefficient of T^k.
    pub fn t_coefficient(&self, k: u32) -> Vec<(ZetaSym, Q)> {
        self.terms.iter().filter(|((p, _), _)| *p == k).map(|(&(_, s), v)| (s, v.clone())).collect()
    }
}

impl fmt::Display for MZVExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(k, s), c)| {
                let t = match k {
                    0 => String::new(),
                    1 => "*T".to_string(),
                    _ => format!("*T^{k}"),
                };
                format!("({})*{s}{t}", fmt_q(c))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Value of a convergent word: (-1)^d zeta(k1, ..., kd).
fn convergent_value(w: &[bool]) -> MZVExpr {
    if w.is_empty() {
        return MZVExpr::one();
    }
    let mut ks: Vec<u32> = Vec::new();
    for &b in w {
        if b {
            ks.push(1);
        } else {
            *ks.last_mut().expect("convergent word starts with 1") += 1;
        }
    }
    let (sym, sign) = match ks.as_slice() {
        [n] => (ZetaSym::Z(*n), -1),
        [a, b] => (ZetaSym::Z2(*a, *b), 1),
        _ => unreachable!("depth checked by caller"),
    };
    MZVExpr::term(0, sym, q(sign))
}

fn reg_rec(w: &[bool], memo: &mut HashMap<Vec<bool>, MZVExpr>) -> MZVExpr {
    if let Some(e) = memo.get(w) {
        return e.clone();
    }
    let out = if w.is_empty() {
        MZVExpr::one()
    } else if w[w.len() - 1] {
        // u 1^n: (-T) I(u 1^(n-1)) = n I(u 1^n) + sum_j I(u[..j] 1 u[j..] 1^(n-1))
        let n = w.iter().rev().take_while(|&&b| b).count();
        let u = &w[..w.len() - n];
        let mut acc = reg_rec(&w[..w.len() - 1], memo).mul_t().scale(&q(-1));
        for j in 0..u.len() {
            let mut v = u[..j].to_vec();
            v.push(true);
            v.extend_from_slice(&u[j..]);
            v.extend(std::iter::repeat_n(true, n - 1));
            acc.add_assign_scaled(&reg_rec(&v, memo), &q(-1));
        }
        acc.scale(&Q::new(1.into(), (n as i64).into()))
    } else if !w[0] {
        // 0^m u: 0 * I(0^(m-1) u) = m I(0^m u) + sum_j I(0^(m-1) u[..j] 0 u[j..])
        let m = w.iter().take_while(|&&b| !b).count();
        let u = &w[m..];
        let mut acc = MZVExpr::zero();
        for j in 1..=u.len() {
            let mut v = vec![false; m - 1];
            v.extend_from_slice(&u[..j]);
            v.push(false);
            v.extend_from_slice(&u[j..]);
            acc.add_assign_scaled(&reg_rec(&v, memo), &q(-1));
        }
        acc.scale(&Q::new(1.into(), (m as i64).into()))
    } else {
        convergent_value(w)
    };
    memo.insert(w.to_vec(), out.clone());
    out
}

/// Regularized value of I(0'; word; 1'), with I(1) = -T and I(0) = 0.
pub fn reg_word(word: &Word01) -> Result<MZVExpr> {
    if word.depth() > MAX_DEPTH {
        return Err(Error::DepthUnsupported(word.depth()));
    }
    Ok(reg_rec(&word.0, &mut HashMap::new()))
}

/// Regularized value of a formal sum of words.
pub fn reg_sum<'a>(words: impl IntoIterator<Item = (&'a Word01, Q)>) -> Result<MZVExpr> {
    let mut memo = HashMap::new();
    let mut acc = MZVExpr::zero();
    for (w, c) in words {
        if w.depth() > MAX_DEPTH {
            return Err(Error::DepthUnsupported(w.depth()));
        }
        acc.add_assign_scaled(&reg_rec(&w.0, &mut memo), &c);
    }
    Ok(acc)
}

/// zeta^sh(n1, ..., nd; T) = (-1)^d I(0'; 1 0^(n1-1) ... 1 0^(nd-1); 1').
fn zeta_sh(ns: &[usize], memo: &mut HashMap<Vec<bool>, MZVExpr>) -> MZVExpr {
    let mut v = Vec::new();
    for &n in ns {
        v.push(true);
        v.extend(std::iter::repeat_n(false, n - 1));
    }
    let e = reg_rec(&v, memo);
    if ns.len() % 2 == 1 {
        e.scale(&q(-1))
    } else {
        e
    }
}

/// Closed-form expansion of J(k0; k1, ..., kd) for d <= 2.
pub fn j_expand(k: &[usize]) -> Result<MZVExpr> {
    if k.is_empty() {
        return Err(Error::Invalid("empty J index".into()));
    }
    let d = k.len() - 1;
    if d > MAX_DEPTH {
        return Err(Error::DepthUnsupported(d));
    }
    let k0 = k[0];
    let mut memo = HashMap::new();
    let mut acc = MZVExpr::zero();
    let mut push = |ls: &[usize], acc: &mut MZVExpr| {
        let mut c = Q::one();
        let mut ns = Vec::new();
        for (i, &l) in ls.iter().enumerate() {
            let ki = k[i + 1];
            c *= qi(binomial((ki + l) as i64, l as i64));
            ns.push(ki + l + 1);
        }
        acc.add_assign_scaled(&zeta_sh(&ns, &mut memo), &c);
    };
    match d {
        0 => {
            if k0 == 0 {
                acc = MZVExpr::one();
            }
        }
        1 => push(&[k0], &mut acc),
        _ => {
            for l1 in 0..=k0 {
                push(&[l1, k0 - l1], &mut acc);
            }
        }
    }
    let sign = if (k0 + d).is_multiple_of(2) { 1 } else { -1 };
    Ok(acc.scale(&q(sign)))
}

/// Regularized value of J(k0; k1, ..., kd) through its word.
pub fn j_value(k: &[usize]) -> Result<MZVExpr> {
    reg_word(&Word01::from_j(k))
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub weight: usize,
    /// Largest |value| of a positive T-power coefficient.
    pub t_residual: Real,
    pub t_coefficients_vanish: bool,
    pub constant: Real,
    /// Relative error of the constant term against the claimed right side, if one is given.
    pub residual: Option<Real>,
    pub constant_term_matches: Option<bool>,
    /// Constant term divided by zeta(weight).
    pub ratio: Real,
    pub recovered: Option<Q>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.t_coefficients_vanish && self.constant_term_matches.unwrap_or(true)
    }
}

/// Sum of c_i J(k_i) as an expression.
pub fn j_combination(lhs: &[(Q, Vec<usize>)]) -> Result<MZVExpr> {
    let mut acc = MZVExpr::zero();
    for (c, k) in lhs {
        acc.add_assign_scaled(&j_value(k)?, c);
    }
    Ok(acc)
}

/// Checks sum c_i J(k_i) = r zeta(weight) coefficient-wise in T.
/// Without `rhs` the rational multiple of zeta(weight) is recovered instead.
pub fn check_identity(lhs: &[(Q, Vec<usize>)], rhs: Option<&Q>, digits: u32) -> Result<IdentityReport> {
    let weight = lhs
        .iter()
        .map(|(_, k)| k.iter().sum::<usize>() + k.len() - 1)
        .max()
        .ok_or_else(|| Error::Invalid("empty identity".into()))?;
    if lhs.iter().any(|(_, k)| k.iter().sum::<usize>() + k.len() - 1 != weight) {
        return Err(Error::Invalid("identity mixes weights".into()));
    }
    let expr = j_combination(lhs)?;
    let threshold = Real::pow10_neg(digits.saturating_sub(5), digits);
    let zero_t = Real::zero(digits);
    let mut t_residual = Real::zero(digits);
    for k in 1..=expr.max_t_power().unwrap_or(0) {
        let part = MZVExpr { terms: expr.terms.iter().filter(|((p, _), _)| *p == k).map(|(&(_, s), v)| ((0, s), v.clone())).collect() };
        let v = eval_expr(&part, &zero_t, digits)?.abs();
        if v > t_residual {
            t_residual = v;
        }
    }
    let constant_part =
        MZVExpr { terms: expr.terms.iter().filter(|((p, _), _)| *p == 0).map(|(k, v)| (*k, v.clone())).collect() };
    let constant = eval_expr(&constant_part, &zero_t, digits)?;
    let zw = zeta_num(weight as u32, digits)?;
    let ratio = constant.div(&zw);
    let (residual, matches) = match rhs {
        Some(r) => {
            let target = Real::from_q(r, digits).mul(&zw);
            let err = constant.sub(&target).abs();
            let scale = if target.is_zero() { Real::one(digits) } else { target.abs() };
            let rel = err.div(&scale);
            let ok = rel < threshold;
            (Some(rel), Some(ok))
        }
        None => (None, None),
    };
    let recovered = recover_rational(&ratio, &threshold, 10_000_000);
    Ok(IdentityReport {
        weight,
        t_coefficients_vanish: t_residual < threshold,
        t_residual,
        constant,
        residual,
        constant_term_matches: matches,
        ratio,
        recovered,
    })
}

/// Named identities: the F(a,b) relations, J(w;0,0) - J(0;w,0), and the weight 12 to 17 examples.
pub fn named_identities(set: &str) -> Result<Vec<(String, Vec<(Q, Vec<usize>)>, Q)>> {
    let qq = |n: i64, d: i64| Q::new(n.into(), d.into());
    let f = |a: usize, b: usize| -> Vec<usize> { vec![a, b, 0] };
    let fact = |n: usize| qi(crate::polyspace::factorial(n));
    // F(a, b) = a! b! J(a; b, 0)
    let fterm = |c: i64, a: usize, b: usize| (q(c) * fact(a) * fact(b), f(a, b));
    let table1 = || {
        vec![
            ("table1:w4".to_string(), vec![fterm(1, 1, 3), fterm(-1, 3, 1)], q(11)),
            (
                "table1:w8".to_string(),
                vec![fterm(1, 1, 7), fterm(-2, 3, 5), fterm(2, 5, 3), fterm(-1, 7, 1)],
                q(8 * 9 * 5 * 29),
            ),
            (
                "table1:w10a".to_string(),
                vec![fterm(2, 1, 9), fterm(-3, 3, 7), fterm(3, 7, 3), fterm(-2, 9, 1)],
                qq(16 * 27 * 5 * 49 * 10243, 691),
            ),
            (
                "table1:w10b".to_string(),
                vec![fterm(4, 1, 9), fterm(-25, 3, 7), fterm(42, 5, 5), fterm(-25, 7, 3), fterm(4, 9, 1)],
                q(32 * 81 * 5 * 7 * 11),
            ),
        ]
    };
    let euler = || {
        [4usize, 8, 10]
            .iter()
            .map(|&w| (format!("euler:w{w}"), vec![(q(1), vec![w, 0, 0]), (q(-1), vec![0, w, 0])], q(1)))
            .collect::<Vec<_>>()
    };
    let gkz = || {
        vec![
            (
                "gkz:w12".to_string(),
                vec![(q(28), vec![2, 0, 8]), (q(150), vec![4, 0, 6]), (q(168), vec![6, 0, 4])],
                qq(118492, 691),
            ),
            (
                "gkz:w13".to_string(),
                vec![(q(28), vec![1, 2, 8]), (q(150), vec![1, 4, 6]), (q(168), vec![1, 6, 4])],
                q(-69),
            ),
            (
                "gkz:w16".to_string(),
                vec![
                    (q(66), vec![2, 0, 12]),
                    (q(375), vec![4, 0, 10]),
                    (q(686), vec![6, 0, 8]),
                    (q(675), vec![8, 0, 6]),
                    (q(396), vec![10, 0, 4]),
                ],
                qq(3961222, 3617),
            ),
            (
                "gkz:w17".to_string(),
                vec![
                    (q(66), vec![1, 2, 12]),
                    (q(375), vec![1, 4, 10]),
                    (q(686), vec![1, 6, 8]),
                    (q(675), vec![1, 8, 6]),
                    (q(396), vec![1, 10, 4]),
                ],
                q(-283),
            ),
            (
                "gkz:o1o:w13".to_string(),
                vec![(q(48), vec![1, 1, 9]), (q(119), vec![3, 1, 7]), (q(10), vec![5, 1, 5]), (q(-144), vec![7, 1, 3])],
                q(640),
            ),
        ]
    };
    Ok(match set {
        "table1" => table1(),
        "sec4" => euler(),
        "sec5" => gkz(),
        "all" => {
            let mut v = table1();
            v.extend(euler());
            v.extend(gkz());
            v
        }
        other => return Err(Error::Invalid(format!("unknown identity set {other:?}"))),
    })
}
