//! Dense matrices over the rationals, row reduction, kernels, Bareiss
//! determinants and reduction modulo a prime.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: BigInt) -> Q {
    Q::from_integer(n)
}

/// Always `p/q`, also for integers.
pub fn fmt_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Scaled to coprime integers with a positive first nonzero entry.
pub fn primitive(v: &[Q]) -> Vec<Q> {
    let Some(first) = v.iter().find(|x| !x.is_zero()) else {
        return v.to_vec();
    };
    let l = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = v.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let g = if first.is_negative() { -g } else { g };
    ints.into_iter().map(|x| qi(x / &g)).collect()
}

pub fn parse_q(s: &str) -> Result<Q> {
    let bad = || Error::Invalid(format!("not a rational: {s}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Q>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    /// Rows may be empty, in which case `cols` fixes the width.
    pub fn from_rows(cols: usize, rows: &[Vec<Q>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Shape(format!("row of length {} in a {cols}-column matrix", r.len())));
            }
            data.extend(r.iter().cloned());
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let vs: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        Self::from_rows(cols, &vs).expect("ragged rows")
    }

    /// Columns given as vectors of equal length `rows`.
    pub fn from_cols(rows: usize, cols: &[Vec<Q>]) -> Result<Self> {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::Shape(format!("column of length {} in a {rows}-row matrix", c.len())));
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn col(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[Q] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Q]) -> Result<Vec<Q>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Q::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::Shape("vstack width mismatch".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

/// Gauss-Jordan elimination with first-nonzero pivoting.
pub fn rref(m: &Matrix) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = a.get(r, c).recip();
        for j in c..cols {
            let v = a.get(r, j) * &inv;
            a.set(r, j, v);
        }
        let prow: Vec<Q> = a.row(r).to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                if !prow[j].is_zero() {
                    let v = a.get(i, j) - &f * &prow[j];
                    a.set(i, j, v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { reduced: a, rank: r, pivot_columns: pivots }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank
}

/// A subspace of Q^n with its canonical RREF basis (one vector per row).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Matrix::zeros(0, n) }
    }

    pub fn full(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Matrix::identity(n) }
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let r = rref(m);
        let n = m.cols;
        let data = r.reduced.data[..r.rank * n].to_vec();
        Subspace { ambient_dim: n, basis: Matrix { rows: r.rank, cols: n, data } }
    }

    pub fn span(n: usize, vectors: &[Vec<Q>]) -> Result<Self> {
        Ok(Self::row_space(&Matrix::from_rows(n, vectors)?))
    }

    /// Column space of `m`.
    pub fn column_space(m: &Matrix) -> Self {
        Self::row_space(&m.transpose())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Q>> {
        self.basis.row_vecs()
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        let mut m = self.basis.clone();
        m.data.extend(v.iter().cloned());
        m.rows += 1;
        rank(&m) == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.sum(other).is_ok_and(|s| s.dim() == self.dim())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        Ok(Self::row_space(&self.basis.vstack(&other.basis)?))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::Shape("intersection of subspaces of different ambients".into()));
        }
        // v = a.B1 = b.B2  <=>  (a, -b) in ker [B1; B2]^T
        let stacked = self.basis.vstack(&other.basis)?;
        let k = kernel(&stacked.transpose());
        let d1 = self.dim();
        let coeffs: Vec<Vec<Q>> = k.basis_vectors().into_iter().map(|v| v[..d1].to_vec()).collect();
        let vs: Vec<Vec<Q>> = coeffs
            .iter()
            .map(|a| self.basis.transpose().mul_vec(a).expect("shape"))
            .collect();
        Subspace::span(self.ambient_dim, &vs)
    }

    /// Orthogonal complement under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        kernel(&self.basis)
    }
}

/// Null space `{v : m v = 0}` with RREF basis.
pub fn kernel(m: &Matrix) -> Subspace {
    let r = rref(m);
    let n = m.cols;
    let mut vs = Vec::new();
    for f in (0..n).filter(|c| !r.pivot_columns.contains(c)) {
        let mut v = vec![Q::zero(); n];
        v[f] = Q::one();
        for (i, &pc) in r.pivot_columns.iter().enumerate() {
            v[pc] = -r.reduced.get(i, f).clone();
        }
        vs.push(v);
    }
    Subspace::span(n, &vs).expect("kernel vectors have ambient length")
}

/// Exact determinant: rows scaled to integers, then Bareiss over Z.
pub fn det_exact(m: &Matrix) -> Result<Q> {
    if !m.is_square() {
        return Err(Error::Shape(format!("determinant of a {}x{} matrix", m.rows, m.cols)));
    }
    let n = m.rows;
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let l = m.row(i).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        a.push(m.row(i).iter().map(|x| x.numer() * (&l / x.denom())).collect());
        scale *= l;
    }
    Ok(Q::new(bareiss(a), scale))
}

/// Fraction-free determinant of an integer matrix.
pub fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModReduction {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<u64>,
    pub rank: usize,
    pub det: Option<u64>,
}

impl ModReduction {
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u64::from(i == j)))
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn reduce_rational_mod(x: &Q, p: u64) -> Result<u64> {
    let pb = BigInt::from(p);
    let d = x.denom().mod_floor(&pb).to_u64().expect("small");
    if d == 0 {
        return Err(Error::BadReduction(p));
    }
    let n = x.numer().mod_floor(&pb).to_u64().expect("small");
    Ok(((n as u128 * inv_mod(d, p) as u128) % p as u128) as u64)
}

/// Entry-wise image in F_p with rank and (for square input) determinant.
pub fn reduce_mod(m: &Matrix, p: u64) -> Result<ModReduction> {
    if p < 2 {
        return Err(Error::Invalid(format!("modulus {p}")));
    }
    let entries = m.data.iter().map(|x| reduce_rational_mod(x, p)).collect::<Result<Vec<_>>>()?;
    let (rows, cols) = (m.rows, m.cols);
    let mut a = entries.clone();
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let mut det = 1u64;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            det = 0;
            continue;
        };
        if piv != r {
            for j in 0..cols {
                a.swap(piv * cols + j, r * cols + j);
            }
            det = (p - det) % p;
        }
        let pv = a[r * cols + c];
        det = mul(det, pv);
        let inv = inv_mod(pv, p);
        for i in r + 1..rows {
            let f = mul(a[i * cols + c], inv);
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let s = mul(f, a[r * cols + j]);
                a[i * cols + j] = (a[i * cols + j] + p - s) % p;
            }
        }
        r += 1;
    }
    let det = if rows == cols { Some(if r == rows { det } else { 0 }) } else { None };
    Ok(ModReduction { p, rows, cols, entries, rank: r, det })
}

pub fn is_integer_matrix(m: &Matrix) -> bool {
    m.data.iter().all(|x| x.is_integer())
}

pub fn sign(x: &Q) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
