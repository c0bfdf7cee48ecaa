//! Homogeneous polynomials in two and three variables, the right action of
//! integer 2x2 matrices, and linear maps between coefficient spaces.

use crate::error::{Error, Result};
use crate::exact_linalg::{kernel, q, qi, Matrix, Subspace, Q, rref};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

const FACT_TABLE: usize = 256;

fn fact_table() -> &'static [BigInt] {
    static T: OnceLock<Vec<BigInt>> = OnceLock::new();
    T.get_or_init(|| {
        let mut v = vec![BigInt::one()];
        for i in 1..FACT_TABLE {
            let x = &v[i - 1] * BigInt::from(i);
            v.push(x);
        }
        v
    })
}

pub fn factorial(n: usize) -> BigInt {
    if n < FACT_TABLE {
        return fact_table()[n].clone();
    }
    (FACT_TABLE..=n).fold(fact_table()[FACT_TABLE - 1].clone(), |acc, i| acc * BigInt::from(i))
}

/// C(n, k), zero outside 0 <= k <= n.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Plus,
    Minus,
}

impl Parity {
    pub fn sign(self) -> i64 {
        match self {
            Parity::Plus => 1,
            Parity::Minus => -1,
        }
    }

    /// Exponents of X allowed in V_w^parity.
    pub fn exponents(self, w: usize) -> Vec<usize> {
        let r = match self {
            Parity::Plus => 0,
            Parity::Minus => 1,
        };
        (0..=w).filter(|a| a % 2 == r).collect()
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Parity::Plus => "+",
            Parity::Minus => "-",
        }
    }
}

impl std::str::FromStr for Parity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" | "even" => Ok(Parity::Plus),
            "-" | "minus" | "odd" => Ok(Parity::Minus),
            _ => Err(Error::Invalid(format!("parity {s}"))),
        }
    }
}

/// Integer linear form aX + bY.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lin2(pub i64, pub i64);

/// Integer linear form in x0, x1, x2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lin3(pub i64, pub i64, pub i64);

/// Dense integer polynomial in X; index is the X exponent of a homogeneous form.
fn mul_dense(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Powers f^0..f^n of a two-variable linear form as dense X-exponent vectors.
fn lin2_powers(f: Lin2, n: usize) -> Vec<Vec<BigInt>> {
    let base = vec![BigInt::from(f.1), BigInt::from(f.0)];
    let mut out = vec![vec![BigInt::one()]];
    for i in 1..=n {
        let next = mul_dense(&out[i - 1], &base);
        out.push(next);
    }
    out
}

/// c[a] is the coefficient of X^a Y^(w-a).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HPoly2 {
    degree: usize,
    coeffs: Vec<Q>,
}

impl HPoly2 {
    pub fn new(degree: usize, coeffs: Vec<Q>) -> Result<Self> {
        if coeffs.len() != degree + 1 {
            return Err(Error::Shape(format!("{} coefficients for degree {degree}", coeffs.len())));
        }
        Ok(HPoly2 { degree, coeffs })
    }

    pub fn zero(degree: usize) -> Self {
        HPoly2 { degree, coeffs: vec![Q::zero(); degree + 1] }
    }

    /// X^a Y^(w-a).
    pub fn monomial(degree: usize, a: usize) -> Self {
        let mut p = Self::zero(degree);
        p.coeffs[a] = Q::one();
        p
    }

    pub fn from_i64(degree: usize, coeffs: &[i64]) -> Self {
        Self::new(degree, coeffs.iter().map(|&c| q(c)).collect()).expect("length")
    }

    /// From (X exponent, coefficient) pairs.
    pub fn from_terms(degree: usize, terms: &[(usize, i64)]) -> Self {
        let mut p = Self::zero(degree);
        for &(a, c) in terms {
            p.coeffs[a] += q(c);
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, a: usize) -> &Q {
        &self.coeffs[a]
    }

    pub fn into_coeffs(self) -> Vec<Q> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn has_parity(&self, parity: Parity) -> bool {
        let r = match parity {
            Parity::Plus => 1,
            Parity::Minus => 0,
        };
        self.coeffs.iter().enumerate().all(|(a, c)| a % 2 != r || c.is_zero())
    }

    pub fn parity_part(&self, parity: Parity) -> HPoly2 {
        let keep = match parity {
            Parity::Plus => 0,
            Parity::Minus => 1,
        };
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(a, c)| if a % 2 == keep { c.clone() } else { Q::zero() })
            .collect();
        HPoly2 { degree: self.degree, coeffs }
    }

    pub fn scale(&self, c: &Q) -> HPoly2 {
        HPoly2 { degree: self.degree, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// p(Y, X).
    pub fn swap(&self) -> HPoly2 {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        HPoly2 { degree: self.degree, coeffs }
    }

    /// p(f, g) for integer linear forms f, g.
    pub fn compose(&self, f: Lin2, g: Lin2) -> HPoly2 {
        let w = self.degree;
        let fp = lin2_powers(f, w);
        let gp = lin2_powers(g, w);
        let mut out = vec![Q::zero(); w + 1];
        for (a, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let prod = mul_dense(&fp[a], &gp[w - a]);
            for (i, x) in prod.into_iter().enumerate() {
                if !x.is_zero() {
                    out[i] += c * qi(x);
                }
            }
        }
        HPoly2 { degree: w, coeffs: out }
    }

    /// p(f, g) for linear forms in three variables.
    pub fn compose3(&self, f: Lin3, g: Lin3) -> HPoly3 {
        let w = self.degree;
        let fp = lin3_powers(f, w);
        let gp = lin3_powers(g, w);
        let mut out = HPoly3::zero(w);
        for (a, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut acc: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
            for ((i0, i1), x) in &fp[a] {
                for ((j0, j1), y) in &gp[w - a] {
                    *acc.entry((i0 + j0, i1 + j1)).or_insert_with(BigInt::zero) += x * y;
                }
            }
            for ((k0, k1), x) in acc {
                if !x.is_zero() {
                    let idx = out.index(k0, k1);
                    out.coeffs[idx] += c * qi(x);
                }
            }
        }
        out
    }

    /// Right action p|g = p(aX+bY, cX+dY).
    pub fn act(&self, g: &GroupElt) -> HPoly2 {
        self.compose(Lin2(g.a, g.b), Lin2(g.c, g.d))
    }

    pub fn act_ring(&self, r: &GroupRingElt) -> HPoly2 {
        let mut out = HPoly2::zero(self.degree);
        for (g, c) in &r.terms {
            out = &out + &self.act(g).scale(c);
        }
        out
    }

    pub fn mul_x(&self) -> HPoly2 {
        let mut coeffs = vec![Q::zero()];
        coeffs.extend(self.coeffs.iter().cloned());
        HPoly2 { degree: self.degree + 1, coeffs }
    }

    pub fn mul_y(&self) -> HPoly2 {
        let mut coeffs = self.coeffs.clone();
        coeffs.push(Q::zero());
        HPoly2 { degree: self.degree + 1, coeffs }
    }

    /// Degree 0 polynomials differentiate to the zero polynomial of degree 0.
    pub fn deriv_x(&self) -> HPoly2 {
        let w = self.degree;
        if w == 0 {
            return HPoly2::zero(0);
        }
        let coeffs = (0..w).map(|a| &self.coeffs[a + 1] * q(a as i64 + 1)).collect();
        HPoly2 { degree: w - 1, coeffs }
    }

    pub fn deriv_y(&self) -> HPoly2 {
        let w = self.degree;
        if w == 0 {
            return HPoly2::zero(0);
        }
        let coeffs = (0..w).map(|a| &self.coeffs[a] * q((w - a) as i64)).collect();
        HPoly2 { degree: w - 1, coeffs }
    }

    /// Antiderivative in Y with no Y-free term.
    pub fn integrate_y(&self) -> HPoly2 {
        let w = self.degree;
        let mut coeffs: Vec<Q> = (0..=w).map(|a| &self.coeffs[a] / q((w - a + 1) as i64)).collect();
        coeffs.push(Q::zero());
        HPoly2 { degree: w + 1, coeffs }
    }

    /// Coordinates on the monomials of the given parity.
    pub fn restrict(&self, parity: Parity) -> Vec<Q> {
        parity.exponents(self.degree).into_iter().map(|a| self.coeffs[a].clone()).collect()
    }

    pub fn from_restricted(degree: usize, parity: Parity, coords: &[Q]) -> HPoly2 {
        let mut p = HPoly2::zero(degree);
        for (a, c) in parity.exponents(degree).into_iter().zip(coords) {
            p.coeffs[a] = c.clone();
        }
        p
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree,
            "coeffs": self.coeffs.iter().map(crate::exact_linalg::fmt_q).collect::<Vec<_>>(),
        })
    }

    /// Scaled so that the coefficients are coprime integers with a positive
    /// leading (highest X power) coefficient.
    pub fn primitive(&self) -> HPoly2 {
        let mut c = self.coeffs.clone();
        c.reverse();
        let mut c = crate::exact_linalg::primitive(&c);
        c.reverse();
        HPoly2 { degree: self.degree, coeffs: c }
    }
}

impl std::fmt::Display for HPoly2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let w = self.degree;
        let mut first = true;
        for a in (0..=w).rev() {
            let c = &self.coeffs[a];
            if c.is_zero() {
                continue;
            }
            let b = w - a;
            let neg = c < &Q::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match (a, b) {
                (0, 0) => String::new(),
                _ => {
                    let px = match a {
                        0 => String::new(),
                        1 => "X".into(),
                        _ => format!("X^{a}"),
                    };
                    let py = match b {
                        0 => String::new(),
                        1 => "Y".into(),
                        _ => format!("Y^{b}"),
                    };
                    px + &py
                }
            };
            if mag.is_one() && !mono.is_empty() {
                write!(f, "{mono}")?;
            } else if mono.is_empty() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}{mono}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &HPoly2 {
    type Output = HPoly2;
    fn add(self, o: &HPoly2) -> HPoly2 {
        assert_eq!(self.degree, o.degree, "degree mismatch in addition");
        HPoly2 { degree: self.degree, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &HPoly2 {
    type Output = HPoly2;
    fn sub(self, o: &HPoly2) -> HPoly2 {
        assert_eq!(self.degree, o.degree, "degree mismatch in subtraction");
        HPoly2 { degree: self.degree, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &HPoly2 {
    type Output = HPoly2;
    fn neg(self) -> HPoly2 {
        HPoly2 { degree: self.degree, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Mul for &HPoly2 {
    type Output = HPoly2;
    fn mul(self, o: &HPoly2) -> HPoly2 {
        let mut coeffs = vec![Q::zero(); self.degree + o.degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        HPoly2 { degree: self.degree + o.degree, coeffs }
    }
}

/// Powers of a three-variable form, sparse, keyed by (k0, k1).
fn lin3_powers(f: Lin3, n: usize) -> Vec<BTreeMap<(usize, usize), BigInt>> {
    let mut out = vec![BTreeMap::from([((0, 0), BigInt::one())])];
    for i in 1..=n {
        let mut next = BTreeMap::new();
        for (&(k0, k1), c) in &out[i - 1] {
            for (dk, coef) in [((1, 0), f.0), ((0, 1), f.1), ((0, 0), f.2)] {
                if coef != 0 {
                    *next.entry((k0 + dk.0, k1 + dk.1)).or_insert_with(BigInt::zero) += c * BigInt::from(coef);
                }
            }
        }
        next.retain(|_, v: &mut BigInt| !v.is_zero());
        out.push(next);
    }
    out
}

/// Dense coefficients over (k0, k1, k2), k0+k1+k2 = w, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HPoly3 {
    degree: usize,
    coeffs: Vec<Q>,
}

impl HPoly3 {
    pub fn zero(degree: usize) -> Self {
        let n = (degree + 1) * (degree + 2) / 2;
        HPoly3 { degree, coeffs: vec![Q::zero(); n] }
    }

    pub fn monomial(k0: usize, k1: usize, k2: usize) -> Self {
        let mut p = Self::zero(k0 + k1 + k2);
        let i = p.index(k0, k1);
        p.coeffs[i] = Q::one();
        p
    }

    pub fn from_terms(degree: usize, terms: &[((usize, usize, usize), Q)]) -> Result<Self> {
        let mut p = Self::zero(degree);
        for ((k0, k1, k2), c) in terms {
            if k0 + k1 + k2 != degree {
                return Err(Error::DegreeMismatch { expected: degree, got: k0 + k1 + k2 });
            }
            let i = p.index(*k0, *k1);
            p.coeffs[i] += c;
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn index(&self, k0: usize, k1: usize) -> usize {
        // rows k0' < k0 hold w - k0' + 1 entries each
        k0 * (self.degree + 1) - k0 * k0.saturating_sub(1) / 2 + k1
    }

    pub fn coeff(&self, k0: usize, k1: usize, k2: usize) -> Q {
        if k0 + k1 + k2 != self.degree {
            return Q::zero();
        }
        self.coeffs[self.index(k0, k1)].clone()
    }

    /// Exponent triples in storage order.
    pub fn monomials(&self) -> Vec<(usize, usize, usize)> {
        monomials3(self.degree)
    }

    pub fn terms(&self) -> Vec<((usize, usize, usize), Q)> {
        self.monomials().into_iter().zip(self.coeffs.iter().cloned()).filter(|(_, c)| !c.is_zero()).collect()
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &Q) -> HPoly3 {
        HPoly3 { degree: self.degree, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// p(f, g, h) for two-variable linear forms.
    pub fn compose2(&self, f: Lin2, g: Lin2, h: Lin2) -> HPoly2 {
        let w = self.degree;
        let fp = lin2_powers(f, w);
        let gp = lin2_powers(g, w);
        let hp = lin2_powers(h, w);
        let mut out = vec![Q::zero(); w + 1];
        for ((k0, k1, k2), c) in self.terms() {
            let prod = mul_dense(&mul_dense(&fp[k0], &gp[k1]), &hp[k2]);
            for (i, x) in prod.into_iter().enumerate() {
                if !x.is_zero() {
                    out[i] += &c * qi(x);
                }
            }
        }
        HPoly2 { degree: w, coeffs: out }
    }

    /// p(x1, x0, x2).
    pub fn swap01(&self) -> HPoly3 {
        let mut out = HPoly3::zero(self.degree);
        for ((k0, k1, _), c) in self.terms() {
            let i = out.index(k1, k0);
            out.coeffs[i] = c;
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms()
                .into_iter()
                .map(|((a, b, c), v)| serde_json::json!([a, b, c, crate::exact_linalg::fmt_q(&v)]))
                .collect(),
        )
    }
}

pub fn monomials3(w: usize) -> Vec<(usize, usize, usize)> {
    let mut v = Vec::with_capacity((w + 1) * (w + 2) / 2);
    for k0 in 0..=w {
        for k1 in 0..=(w - k0) {
            v.push((k0, k1, w - k0 - k1));
        }
    }
    v
}

impl Add for &HPoly3 {
    type Output = HPoly3;
    fn add(self, o: &HPoly3) -> HPoly3 {
        assert_eq!(self.degree, o.degree, "degree mismatch in addition");
        HPoly3 { degree: self.degree, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &HPoly3 {
    type Output = HPoly3;
    fn sub(self, o: &HPoly3) -> HPoly3 {
        assert_eq!(self.degree, o.degree, "degree mismatch in subtraction");
        HPoly3 { degree: self.degree, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElt {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl GroupElt {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let det = a * d - b * c;
        if det != 1 && det != -1 {
            return Err(Error::Invalid(format!("determinant {det} is not a unit")));
        }
        Ok(GroupElt { a, b, c, d })
    }

    const fn raw(a: i64, b: i64, c: i64, d: i64) -> Self {
        GroupElt { a, b, c, d }
    }

    pub const IDENTITY: GroupElt = GroupElt::raw(1, 0, 0, 1);
    pub const EPS: GroupElt = GroupElt::raw(-1, 0, 0, 1);
    pub const S: GroupElt = GroupElt::raw(0, -1, 1, 0);
    pub const U: GroupElt = GroupElt::raw(1, -1, 1, 0);
    pub const T: GroupElt = GroupElt::raw(1, 1, 0, 1);
    pub const T_PRIME: GroupElt = GroupElt::raw(1, 0, 1, 1);
    pub const M: GroupElt = GroupElt::raw(-1, -1, 2, 1);

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn mul(&self, o: &GroupElt) -> GroupElt {
        GroupElt::raw(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }

    pub fn inverse(&self) -> GroupElt {
        let det = self.det();
        GroupElt::raw(self.d * det, -self.b * det, -self.c * det, self.a * det)
    }

    pub fn pow(&self, n: u32) -> GroupElt {
        (0..n).fold(GroupElt::IDENTITY, |acc, _| acc.mul(self))
    }
}

/// Finite formal combination of group elements; zero coefficients are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GroupRingElt {
    terms: BTreeMap<GroupElt, Q>,
}

impl GroupRingElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::elt(GroupElt::IDENTITY)
    }

    pub fn elt(g: GroupElt) -> Self {
        Self::from_terms(&[(g, 1)])
    }

    pub fn from_terms(terms: &[(GroupElt, i64)]) -> Self {
        let mut r = Self::zero();
        for &(g, c) in terms {
            r.add_term(g, q(c));
        }
        r
    }

    pub fn add_term(&mut self, g: GroupElt, c: Q) {
        let e = self.terms.entry(g).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn terms(&self) -> &BTreeMap<GroupElt, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Add for &GroupRingElt {
    type Output = GroupRingElt;
    fn add(self, o: &GroupRingElt) -> GroupRingElt {
        let mut r = self.clone();
        for (g, c) in &o.terms {
            r.add_term(*g, c.clone());
        }
        r
    }
}

impl Sub for &GroupRingElt {
    type Output = GroupRingElt;
    fn sub(self, o: &GroupRingElt) -> GroupRingElt {
        let mut r = self.clone();
        for (g, c) in &o.terms {
            r.add_term(*g, -c.clone());
        }
        r
    }
}

/// Product in the group ring; (p|r)|s = p|(rs).
impl Mul for &GroupRingElt {
    type Output = GroupRingElt;
    fn mul(self, o: &GroupRingElt) -> GroupRingElt {
        let mut r = GroupRingElt::zero();
        for (g, c) in &self.terms {
            for (h, d) in &o.terms {
                r.add_term(g.mul(h), c * d);
            }
        }
        r
    }
}

pub fn act(p: &HPoly2, g: &GroupElt) -> HPoly2 {
    p.act(g)
}

pub fn act_ring(p: &HPoly2, r: &GroupRingElt) -> HPoly2 {
    p.act_ring(r)
}

/// <X^a Y^b, X^a' Y^b'> = a! b! when equal, else 0.
pub fn inner2(p: &HPoly2, r: &HPoly2) -> Result<Q> {
    if p.degree != r.degree {
        return Err(Error::DegreeMismatch { expected: p.degree, got: r.degree });
    }
    let w = p.degree;
    Ok((0..=w)
        .filter(|&a| !p.coeffs[a].is_zero() && !r.coeffs[a].is_zero())
        .fold(Q::zero(), |acc, a| acc + &p.coeffs[a] * &r.coeffs[a] * qi(factorial(a) * factorial(w - a))))
}

pub fn inner3(p: &HPoly3, r: &HPoly3) -> Result<Q> {
    if p.degree != r.degree {
        return Err(Error::DegreeMismatch { expected: p.degree, got: r.degree });
    }
    Ok(p.monomials()
        .into_iter()
        .enumerate()
        .filter(|(i, _)| !p.coeffs[*i].is_zero() && !r.coeffs[*i].is_zero())
        .fold(Q::zero(), |acc, (i, (a, b, c))| {
            acc + &p.coeffs[i] * &r.coeffs[i] * qi(factorial(a) * factorial(b) * factorial(c))
        }))
}

/// Matrix whose columns are the coordinates of `images` in `codomain_basis`.
pub fn matrix_of(images: &[Vec<Q>], codomain_basis: &[Vec<Q>], codomain_dim: usize) -> Result<Matrix> {
    let k = codomain_basis.len();
    let b = Matrix::from_cols(codomain_dim, codomain_basis)?;
    let mut out = Matrix::zeros(k, images.len());
    if images.is_empty() {
        return Ok(out);
    }
    let aug = Matrix::from_cols(codomain_dim, &[codomain_basis, images].concat())?;
    if crate::exact_linalg::rank(&b) != k {
        return Err(Error::Invalid("codomain basis is linearly dependent".into()));
    }
    let r = rref(&aug);
    if r.pivot_columns.iter().any(|&c| c >= k) {
        return Err(Error::NotInSpan);
    }
    for j in 0..images.len() {
        for i in 0..k {
            out.set(i, j, r.reduced.get(i, k + j).clone());
        }
    }
    Ok(out)
}

/// Matrix of a polynomial map from `domain` to `codomain` (both as polynomial bases).
pub fn matrix_of_polys(f: impl Fn(&HPoly2) -> HPoly2, domain: &[HPoly2], codomain: &[HPoly2]) -> Result<Matrix> {
    let Some(first) = codomain.first() else {
        return Ok(Matrix::zeros(0, domain.len()));
    };
    let n = first.degree + 1;
    let images: Vec<Vec<Q>> = domain.iter().map(|p| f(p).into_coeffs()).collect();
    for im in &images {
        if im.len() != n {
            return Err(Error::DegreeMismatch { expected: n - 1, got: im.len() - 1 });
        }
    }
    let cod: Vec<Vec<Q>> = codomain.iter().map(|p| p.coeffs.clone()).collect();
    matrix_of(&images, &cod, n)
}

/// Monomial basis of V_w^parity (or all of V_w when `parity` is None).
pub fn monomial_basis(w: usize, parity: Option<Parity>) -> Vec<HPoly2> {
    let exps: Vec<usize> = match parity {
        Some(p) => p.exponents(w),
        None => (0..=w).collect(),
    };
    exps.into_iter().map(|a| HPoly2::monomial(w, a)).collect()
}

/// `{v : f v in target}`.
pub fn preimage(f: &Matrix, target: &Subspace) -> Result<Subspace> {
    if f.rows() != target.ambient_dim() {
        return Err(Error::Shape(format!(
            "map into dimension {} but target lives in dimension {}",
            f.rows(),
            target.ambient_dim()
        )));
    }
    let ann = target.annihilator();
    if ann.dim() == 0 {
        return Ok(Subspace::full(f.cols()));
    }
    Ok(kernel(&ann.basis().mul(f)?))
}

pub fn poly_from_vec(v: &[Q]) -> HPoly2 {
    HPoly2::new(v.len() - 1, v.to_vec()).expect("length")
}

impl From<&HPoly2> for Vec<Q> {
    fn from(p: &HPoly2) -> Vec<Q> {
        p.coeffs.clone()
    }
}
