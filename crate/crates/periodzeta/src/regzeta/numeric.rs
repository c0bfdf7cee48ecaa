//! Fixed-point reals and Euler-Maclaurin evaluation of zeta(n) and zeta(a, b).

use super::{MZVExpr, ZetaSym};
use crate::error::{Error, Result};
use crate::exact_linalg::{q, Q};
use crate::polyspace::binomial;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

const GUARD_BITS: u32 = 64;

/// Binary fixed point: the value is `v / 2^bits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Real {
    v: BigInt,
    bits: u32,
}

pub fn bits_for(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + GUARD_BITS
}

impl Real {
    pub fn zero(digits: u32) -> Self {
        Real { v: BigInt::zero(), bits: bits_for(digits) }
    }

    pub fn one(digits: u32) -> Self {
        let bits = bits_for(digits);
        Real { v: BigInt::one() << bits, bits }
    }

    fn with_bits(v: BigInt, bits: u32) -> Self {
        Real { v, bits }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn from_q(x: &Q, digits: u32) -> Self {
        let bits = bits_for(digits);
        Real { v: (x.numer() << bits).div_floor(x.denom()), bits }
    }

    pub fn from_i64(n: i64, digits: u32) -> Self {
        Self::from_q(&q(n), digits)
    }

    /// Parses a plain decimal literal such as "-3.1415".
    pub fn from_decimal(s: &str, digits: u32) -> Result<Self> {
        let neg = s.starts_with('-');
        let body = s.trim_start_matches(['-', '+']);
        let (int, frac) = body.split_once('.').unwrap_or((body, ""));
        let digits_str = format!("{int}{frac}");
        let n: BigInt = digits_str.parse().map_err(|_| Error::Invalid(format!("bad decimal {s:?}")))?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        let x = Q::new(if neg { -n } else { n }, den);
        Ok(Self::from_q(&x, digits))
    }

    /// 10^-k at precision `digits`.
    pub fn pow10_neg(k: u32, digits: u32) -> Self {
        Self::from_q(&Q::new(BigInt::one(), BigInt::from(10u32).pow(k)), digits)
    }

    /// n^-e.
    pub fn inv_pow(n: u64, e: u32, bits: u32) -> Self {
        let d = BigInt::from(n).pow(e);
        Real { v: (BigInt::one() << bits) / d, bits }
    }

    fn check(&self, o: &Real) {
        debug_assert_eq!(self.bits, o.bits, "mixed precisions");
    }

    pub fn add(&self, o: &Real) -> Real {
        self.check(o);
        Real::with_bits(&self.v + &o.v, self.bits)
    }

    pub fn sub(&self, o: &Real) -> Real {
        self.check(o);
        Real::with_bits(&self.v - &o.v, self.bits)
    }

    pub fn mul(&self, o: &Real) -> Real {
        self.check(o);
        Real::with_bits((&self.v * &o.v) >> self.bits, self.bits)
    }

    pub fn div(&self, o: &Real) -> Real {
        self.check(o);
        if o.v.is_zero() {
            return Real::with_bits(BigInt::zero(), self.bits);
        }
        Real::with_bits((&self.v << self.bits) / &o.v, self.bits)
    }

    pub fn mul_q(&self, x: &Q) -> Real {
        Real::with_bits((&self.v * x.numer()) / x.denom(), self.bits)
    }

    pub fn neg(&self) -> Real {
        Real::with_bits(-&self.v, self.bits)
    }

    pub fn abs(&self) -> Real {
        Real::with_bits(self.v.abs(), self.bits)
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.v.sign() == Sign::Minus
    }

    /// Exact rational value of the fixed-point representation.
    pub fn to_q(&self) -> Q {
        Q::new(self.v.clone(), BigInt::one() << self.bits)
    }

    pub fn to_f64(&self) -> f64 {
        let shift = self.v.bits().saturating_sub(60);
        let top = (&self.v >> shift).to_f64().unwrap_or(f64::NAN);
        top * 2f64.powf(shift as f64 - self.bits as f64)
    }

    /// Rounded to `n` digits after the point.
    pub fn to_decimal(&self, n: u32) -> String {
        let scale = BigInt::from(10u32).pow(n);
        let half = BigInt::one() << (self.bits - 1);
        let x = (&self.v.abs() * &scale + half) >> self.bits;
        let (i, f) = x.div_rem(&scale);
        let sign = if self.is_negative() && !x.is_zero() { "-" } else { "" };
        if n == 0 {
            format!("{sign}{i}")
        } else {
            format!("{sign}{i}.{:0>width$}", f.to_string(), width = n as usize)
        }
    }

    /// Scientific notation with three significant digits, for residual reports.
    pub fn to_sci(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        format!("{:.3e}", self.to_f64())
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, o: &Real) -> Option<Ordering> {
        if self.bits != o.bits {
            return None;
        }
        Some(self.v.cmp(&o.v))
    }
}

/// B_{2j} / (2j)! for j = 0, 1, ...
fn bernoulli_over_factorial() -> &'static Vec<Q> {
    static TABLE: OnceLock<Vec<Q>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n_max = 200usize;
        let mut b: Vec<Q> = vec![Q::one()];
        for n in 1..=n_max {
            let mut s = Q::zero();
            for (k, bk) in b.iter().enumerate() {
                s += Q::from(binomial(n as i64 + 1, k as i64)) * bk;
            }
            b.push(-s / Q::from(BigInt::from(n + 1)));
        }
        (0..=n_max / 2)
            .map(|j| &b[2 * j] / Q::from(crate::polyspace::factorial(2 * j)))
            .collect()
    })
}

/// e (e+1) ... (e+r-1).
fn rising(e: u32, r: u32) -> BigInt {
    (0..r).fold(BigInt::one(), |acc, i| acc * BigInt::from(e + i))
}

/// Euler-Maclaurin value of sum_{k >= n} k^-e for e >= 2.
fn tail(n: u64, e: u32, bits: u32) -> Real {
    let b = bernoulli_over_factorial();
    let lead = Real::inv_pow(n, e - 1, bits).mul_q(&Q::new(BigInt::one(), BigInt::from(e - 1)));
    let mut acc = lead.add(&Real::inv_pow(n, e, bits).mul_q(&Q::new(BigInt::one(), BigInt::from(2))));
    let eps = BigInt::one();
    let mut prev: Option<BigInt> = None;
    for (j, bj) in b.iter().enumerate().skip(1) {
        let c = bj * Q::from(rising(e, 2 * j as u32 - 1));
        let term = Real::inv_pow(n, e + 2 * j as u32 - 1, bits).mul_q(&c);
        let mag = term.v.abs();
        if let Some(p) = &prev {
            if &mag > p {
                break;
            }
        }
        acc = acc.add(&term);
        if mag <= eps {
            break;
        }
        prev = Some(mag);
    }
    acc
}

fn zeta_at(s: u32, n: u64, bits: u32) -> Real {
    let mut acc = Real::with_bits(BigInt::zero(), bits);
    for k in 1..n {
        acc = acc.add(&Real::inv_pow(k, s, bits));
    }
    acc.add(&tail(n, s, bits))
}

/// sum over 0 < m1 < m2 of m1^-a m2^-b, partial sums to n, then
/// H_{n-1}^(a) times the single tail plus the expansion of the double tail.
fn dzeta_at(a: u32, b: u32, n: u64, bits: u32) -> Real {
    let mut acc = Real::with_bits(BigInt::zero(), bits);
    let mut h = Real::with_bits(BigInt::zero(), bits);
    for m in 1..n {
        acc = acc.add(&h.mul(&Real::inv_pow(m, b, bits)));
        h = h.add(&Real::inv_pow(m, a, bits));
    }
    acc = acc.add(&h.mul(&tail(n, b, bits)));
    // sum_{k >= n} k^-a sum_{m > k} m^-b, with the inner sum expanded in k
    let bern = bernoulli_over_factorial();
    let mut dt = tail(n, a + b - 1, bits).mul_q(&Q::new(BigInt::one(), BigInt::from(b - 1)));
    dt = dt.sub(&tail(n, a + b, bits).mul_q(&Q::new(BigInt::one(), BigInt::from(2))));
    let mut prev: Option<BigInt> = None;
    for (j, bj) in bern.iter().enumerate().skip(1) {
        let c = bj * Q::from(rising(b, 2 * j as u32 - 1));
        let size = Real::inv_pow(n, a + b + 2 * j as u32 - 2, bits).mul_q(&c).v.abs();
        if let Some(p) = &prev {
            if &size > p {
                break;
            }
        }
        dt = dt.add(&tail(n, a + b + 2 * j as u32 - 1, bits).mul_q(&c));
        if size <= BigInt::one() {
            break;
        }
        prev = Some(size);
    }
    acc.add(&dt)
}

/// Doubles the cutoff until two successive estimates agree to digits + 5.
fn escalate(digits: u32, f: impl Fn(u64, u32) -> Real) -> Real {
    let work = digits + 10;
    let bits = bits_for(work);
    let tol = Real::pow10_neg(digits + 5, work);
    let mut n = 16u64;
    let mut prev = f(n, bits);
    loop {
        n *= 2;
        let cur = f(n, bits);
        if cur.sub(&prev).abs() < tol || n > 1 << 16 {
            return cur.round_to(digits);
        }
        prev = cur;
    }
}

impl Real {
    /// Drops precision to that of `digits`.
    pub fn round_to(&self, digits: u32) -> Real {
        let bits = bits_for(digits);
        match self.bits.cmp(&bits) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => Real::with_bits(&self.v >> (self.bits - bits), bits),
            Ordering::Less => Real::with_bits(&self.v << (bits - self.bits), bits),
        }
    }
}

type Cache = Mutex<HashMap<(ZetaSym, u32), Real>>;

fn cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(sym: ZetaSym, digits: u32, f: impl FnOnce() -> Real) -> Real {
    if let Some(v) = cache().lock().expect("cache").get(&(sym, digits)) {
        return v.clone();
    }
    let v = f();
    cache().lock().expect("cache").insert((sym, digits), v.clone());
    v
}

pub fn zeta_num(n: u32, digits: u32) -> Result<Real> {
    if n < 2 {
        return Err(Error::Divergent(format!("zeta({n})")));
    }
    Ok(cached(ZetaSym::Z(n), digits, || escalate(digits, |cut, bits| zeta_at(n, cut, bits))))
}

pub fn dzeta_num(a: u32, b: u32, digits: u32) -> Result<Real> {
    if a < 1 || b < 2 {
        return Err(Error::Divergent(format!("zeta({a},{b})")));
    }
    Ok(cached(ZetaSym::Z2(a, b), digits, || escalate(digits, |cut, bits| dzeta_at(a, b, cut, bits))))
}

/// zeta(a, b) with a fixed partial-sum cutoff, no escalation.
pub fn dzeta_with_cutoff(a: u32, b: u32, cutoff: u64, digits: u32) -> Result<Real> {
    if a < 1 || b < 2 {
        return Err(Error::Divergent(format!("zeta({a},{b})")));
    }
    Ok(dzeta_at(a, b, cutoff.max(2), bits_for(digits + 10)).round_to(digits))
}

/// Value of an expression with T replaced by `t`.
pub fn eval_expr(e: &MZVExpr, t: &Real, digits: u32) -> Result<Real> {
    let t = t.round_to(digits);
    let mut acc = Real::zero(digits);
    for (&(k, sym), c) in e.terms() {
        let mut v = match sym {
            ZetaSym::One => Real::one(digits),
            ZetaSym::Z(n) => zeta_num(n, digits)?,
            ZetaSym::Z2(a, b) => dzeta_num(a, b, digits)?,
        };
        for _ in 0..k {
            v = v.mul(&t);
        }
        acc = acc.add(&v.mul_q(c));
    }
    Ok(acc)
}

/// Continued-fraction recovery of a rational within `tol` (relative when |x| > 1).
pub fn recover_rational(x: &Real, tol: &Real, max_den: u64) -> Option<Q> {
    let exact = x.to_q();
    let scale = if x.abs() > Real::one_like(x) { x.abs() } else { Real::one_like(x) };
    let bound = tol.mul(&scale);
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut r = exact;
    for _ in 0..64 {
        let a = r.floor().to_integer();
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        if k2 > BigInt::from(max_den) {
            return None;
        }
        let cand = Q::new(h2.clone(), k2.clone());
        let err = Real::from_q_bits(&cand, x.bits).sub(x).abs();
        if err <= bound {
            return Some(cand);
        }
        let frac = &r - Q::from(a);
        if frac.is_zero() {
            return None;
        }
        r = frac.recip();
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
    }
    None
}

impl Real {
    fn one_like(x: &Real) -> Real {
        Real::with_bits(BigInt::one() << x.bits, x.bits)
    }

    /// Exact conversion at a given number of fractional bits.
    pub fn from_q_bits(x: &Q, bits: u32) -> Real {
        Real::with_bits((x.numer() << bits).div_floor(x.denom()), bits)
    }
}

pub const PI_DIGITS: &str =
    "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706798";

pub fn pi(digits: u32) -> Real {
    Real::from_decimal(PI_DIGITS, digits).expect("literal")
}

/// Classical checks: zeta(2) = pi^2/6, zeta(1,2) = zeta(3), zeta(2,2) = pi^4/120.
pub fn euler_checks(digits: u32) -> Result<Vec<(String, Real)>> {
    let p = pi(digits);
    let p2 = p.mul(&p);
    let rel = |a: &Real, b: &Real| a.sub(b).abs().div(&b.abs());
    let z2 = zeta_num(2, digits)?;
    let z3 = zeta_num(3, digits)?;
    let z12 = dzeta_num(1, 2, digits)?;
    let z22 = dzeta_num(2, 2, digits)?;
    Ok(vec![
        ("euler:zeta2".to_string(), rel(&z2, &p2.mul_q(&Q::new(1.into(), 6.into())))),
        ("euler:zeta12".to_string(), rel(&z12, &z3)),
        ("euler:zeta22".to_string(), rel(&z22, &p2.mul(&p2).mul_q(&Q::new(1.into(), 120.into())))),
    ])
}
