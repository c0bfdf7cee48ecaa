//! Period polynomial spaces as kernels of group-ring operators.

use crate::error::{Error, Result};
use crate::exact_linalg::{kernel, Matrix, Subspace, Q};
use crate::polyspace::{GroupElt, GroupRingElt, HPoly2, Parity};
use num_traits::Zero;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupId {
    SL2Z,
    Gamma0_2,
    GammaA,
    GammaB,
}

impl GroupId {
    pub fn name(self) -> &'static str {
        match self {
            GroupId::SL2Z => "sl2z",
            GroupId::Gamma0_2 => "gamma0_2",
            GroupId::GammaA => "gamma_a",
            GroupId::GammaB => "gamma_b",
        }
    }
}

impl std::str::FromStr for GroupId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sl2z" | "sl2" => Ok(GroupId::SL2Z),
            "gamma0_2" | "gamma0(2)" | "g02" => Ok(GroupId::Gamma0_2),
            "gamma_a" | "gammaa" => Ok(GroupId::GammaA),
            "gamma_b" | "gammab" => Ok(GroupId::GammaB),
            _ => Err(Error::Invalid(format!("unknown group {s}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodSpaceSpec {
    pub group: GroupId,
    pub parity: Parity,
    pub conditions: Vec<GroupRingElt>,
}

fn e(g: GroupElt) -> GroupRingElt {
    GroupRingElt::elt(g)
}

fn one_plus_s() -> GroupRingElt {
    &GroupRingElt::one() + &e(GroupElt::S)
}

fn one_u_u2() -> GroupRingElt {
    &(&GroupRingElt::one() + &e(GroupElt::U)) + &e(GroupElt::U.pow(2))
}

fn s_su_su2() -> GroupRingElt {
    let s = GroupElt::S;
    &(&e(s) + &e(s.mul(&GroupElt::U))) + &e(s.mul(&GroupElt::U.pow(2)))
}

/// (1 - T)(1 + M).
pub fn gamma0_2_operator() -> GroupRingElt {
    let a = &GroupRingElt::one() - &e(GroupElt::T);
    let b = &GroupRingElt::one() + &e(GroupElt::M);
    &a * &b
}

pub fn spec(group: GroupId, parity: Parity) -> Result<PeriodSpaceSpec> {
    let conditions = match (group, parity) {
        (GroupId::SL2Z, _) => vec![one_plus_s(), one_u_u2()],
        (GroupId::Gamma0_2, Parity::Plus) => vec![gamma0_2_operator()],
        (GroupId::GammaA, _) => vec![one_u_u2(), s_su_su2()],
        (GroupId::GammaB, Parity::Minus) => vec![one_plus_s()],
        _ => {
            return Err(Error::NoCharacterization(format!("{}{}", group.name(), parity.symbol())));
        }
    };
    Ok(PeriodSpaceSpec { group, parity, conditions })
}

/// Subspace of V_w^parity cut out by `conditions`, in full V_w coordinates.
pub fn kernel_of_conditions(w: usize, parity: Parity, conditions: &[GroupRingElt]) -> Subspace {
    let exps = parity.exponents(w);
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let images: Vec<Vec<HPoly2>> = exps
        .iter()
        .map(|&a| {
            let m = HPoly2::monomial(w, a);
            conditions.iter().map(|r| m.act_ring(r)).collect()
        })
        .collect();
    for ci in 0..conditions.len() {
        for t in 0..=w {
            let row: Vec<Q> = images.iter().map(|ims| ims[ci].coeff(t).clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let m = Matrix::from_rows(exps.len(), &rows).expect("rectangular");
    let k = kernel(&m);
    embed(w, &exps, &k)
}

/// Lift a subspace in coordinates `exps` to full V_w coordinates.
pub fn embed(w: usize, exps: &[usize], k: &Subspace) -> Subspace {
    let vs: Vec<Vec<Q>> = k
        .basis_vectors()
        .into_iter()
        .map(|v| {
            let mut full = vec![Q::zero(); w + 1];
            for (a, c) in exps.iter().zip(v) {
                full[*a] = c;
            }
            full
        })
        .collect();
    Subspace::span(w + 1, &vs).expect("length")
}

type Cache = Mutex<HashMap<(GroupId, Parity, usize), Subspace>>;

fn cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// W_w^{parity, group} in full coordinates of V_w; w must be even.
pub fn period_space(group: GroupId, parity: Parity, w: usize) -> Result<Subspace> {
    if !w.is_multiple_of(2) {
        return Err(Error::ParityMismatch(format!("period spaces need even weight, got {w}")));
    }
    let s = spec(group, parity)?;
    if let Some(hit) = cache().lock().expect("cache").get(&(group, parity, w)) {
        return Ok(hit.clone());
    }
    let k = kernel_of_conditions(w, parity, &s.conditions);
    cache().lock().expect("cache").insert((group, parity, w), k.clone());
    Ok(k)
}

pub fn period_basis(group: GroupId, parity: Parity, w: usize) -> Result<Vec<HPoly2>> {
    Ok(period_space(group, parity, w)?
        .basis_vectors()
        .into_iter()
        .map(|v| HPoly2::new(w, v).expect("length"))
        .collect())
}

/// (dim M_k, dim S_k) for SL2(Z), even k >= 4.
pub fn dim_modular_oracle(k: usize) -> Result<(usize, usize)> {
    if !k.is_multiple_of(2) {
        return Err(Error::ParityMismatch(format!("odd weight {k}")));
    }
    if k < 4 {
        return Err(Error::Invalid(format!("weight {k} below 4")));
    }
    let m = k / 12 + if k % 12 == 2 { 0 } else { 1 };
    Ok((m, m - 1))
}

/// Like `dim_modular_oracle` but also answers k = 0 and k = 2.
pub fn dim_modular(k: usize) -> (usize, usize) {
    match k {
        0 => (1, 0),
        2 => (0, 0),
        _ if k % 2 == 1 => (0, 0),
        _ => dim_modular_oracle(k).expect("even k >= 4"),
    }
}
