//! Registry of the 34 exact sequences and their certification at a fixed
//! weight, plus the dimension survey of further monomial families.

use crate::error::{Error, Result};
use crate::exact_linalg::{fmt_q, kernel, qi, rank, Matrix, Subspace, Q};
use crate::period_polys::{dim_modular, embed, period_basis, period_space, GroupId};
use crate::polyspace::{factorial, monomial_basis, preimage, HPoly2, HPoly3, Parity};
use crate::structure_maps::{a_poly, dual_criterion, relation_criterion, u_gkz, u_m, u_m_prime};
use num_traits::{One, Zero};
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexSet {
    Even,
    Odd,
    Zero,
    One,
    All,
}

impl IndexSet {
    pub fn contains(self, n: usize) -> bool {
        match self {
            IndexSet::Even => n.is_multiple_of(2),
            IndexSet::Odd => n % 2 == 1,
            IndexSet::Zero => n == 0,
            IndexSet::One => n == 1,
            IndexSet::All => true,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            IndexSet::Even => 'e',
            IndexSet::Odd => 'o',
            IndexSet::Zero => '0',
            IndexSet::One => '1',
            IndexSet::All => 'a',
        }
    }

    fn parse(c: char) -> Option<Self> {
        Some(match c {
            'e' => IndexSet::Even,
            'o' => IndexSet::Odd,
            '0' => IndexSet::Zero,
            '1' => IndexSet::One,
            'a' => IndexSet::All,
            _ => return None,
        })
    }
}

/// Index sets for (r; s, t) of J(r; s, t).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialFamily {
    pub sets: [IndexSet; 3],
}

impl MonomialFamily {
    pub fn new(a: IndexSet, b: IndexSet, c: IndexSet) -> Self {
        MonomialFamily { sets: [a, b, c] }
    }

    pub fn name(&self) -> String {
        self.sets.iter().map(|s| s.symbol()).collect()
    }

    pub fn contains(&self, (r, s, t): (usize, usize, usize)) -> bool {
        self.sets[0].contains(r) && self.sets[1].contains(s) && self.sets[2].contains(t)
    }

    /// Triples of total `w` in lexicographic order.
    pub fn enumerate(&self, w: usize) -> Vec<(usize, usize, usize)> {
        crate::polyspace::monomials3(w).into_iter().filter(|&m| self.contains(m)).collect()
    }

    /// Family with the first two index sets exchanged.
    pub fn antipode(&self) -> Self {
        MonomialFamily { sets: [self.sets[1], self.sets[0], self.sets[2]] }
    }
}

impl std::str::FromStr for MonomialFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let cs: Vec<IndexSet> = s.chars().filter_map(IndexSet::parse).collect();
        if cs.len() != 3 || s.chars().count() != 3 {
            return Err(Error::UnknownFamily(s.to_string()));
        }
        Ok(MonomialFamily { sets: [cs[0], cs[1], cs[2]] })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Relation,
    Dual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightParity {
    Even,
    Odd,
}

impl WeightParity {
    pub fn matches(self, w: usize) -> bool {
        w.is_multiple_of(2) == (self == WeightParity::Even)
    }
}

/// Where X^a Y^b of the middle space is sent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleMap {
    ZeroAB,
    OneAB,
    AB0,
    BA0,
    A0B,
    A1B,
}

impl TripleMap {
    pub fn apply(self, a: usize, b: usize) -> (usize, usize, usize) {
        match self {
            TripleMap::ZeroAB => (0, a, b),
            TripleMap::OneAB => (1, a, b),
            TripleMap::AB0 => (a, b, 0),
            TripleMap::BA0 => (b, a, 0),
            TripleMap::A0B => (a, 0, b),
            TripleMap::A1B => (a, 1, b),
        }
    }
}

/// How the claimed left term is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Recipe {
    Zero,
    Period(GroupId, Parity),
    /// W^- (w-1) x W^+ (w+1) modulo Eisenstein x Q.
    MaTriple,
    /// W^+ (w-1) x W^- (w+1).
    MaPrime,
    APoly,
    YPow,
    /// d/dX^{-1} W^-_w inside V^+_{w+1}.
    PreimageDX,
    /// W^- (w-1) (+) W^+ (w+1).
    PeriodPairMinusPlus,
    /// W^+ (w-1) (+) W^- (w+1).
    PeriodPairPlusMinus,
    /// d/dY^{-1} W^-_{w-1} inside V^-_w, times W^+_{w+1}.
    PreimageDYPair,
    /// d/dX^{-1} W^-_{w-1} inside V^+_w, times W^+_{w+1}.
    PreimageDXPair,
    /// Stated as the odd Gamma_A space inside V^+_w.
    StatedGammaAOdd,
    /// Stated as the odd Gamma_0(2) space inside V^+_w.
    StatedGamma02Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapId {
    Identity,
    UGkz,
    UM,
    UMPrime,
    XpDYq,
    YpDXq,
    IntDY,
    Swap,
    XpPlusQ,
    YpPlusQ,
}

impl MapId {
    pub fn name(self) -> &'static str {
        match self {
            MapId::Identity => "identity",
            MapId::UGkz => "u_gkz",
            MapId::UM => "u_m",
            MapId::UMPrime => "u_m_prime",
            MapId::XpDYq => "Xp+dYq",
            MapId::YpDXq => "Yp+dXq",
            MapId::IntDY => "intdY",
            MapId::Swap => "swap",
            MapId::XpPlusQ => "Xp+q",
            MapId::YpPlusQ => "Yp+q",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceDescriptor {
    pub id: &'static str,
    pub side: Side,
    pub weight_parity: WeightParity,
    pub min_weight: usize,
    pub family: MonomialFamily,
    /// The family lives in weight w + shift; the middle space is V_w on the
    /// relation side and V_{w + shift}^+ on the dual side.
    pub shift: usize,
    pub middle_parity: Parity,
    /// Relation side only.
    pub triple: Option<TripleMap>,
    pub claimed_kernel: Recipe,
    pub claimed_injection: MapId,
    pub source: &'static str,
}

impl SequenceDescriptor {
    pub fn middle_degree(&self, w: usize) -> usize {
        match self.side {
            Side::Relation => w,
            Side::Dual => w + self.shift,
        }
    }

    pub fn family_weight(&self, w: usize) -> usize {
        w + self.shift
    }

    pub fn applies_to(&self, w: usize) -> bool {
        self.weight_parity.matches(w) && w >= self.min_weight
    }

    /// Matching weights in `0..=max`.
    pub fn weights_up_to(&self, max: usize) -> Vec<usize> {
        (0..=max).filter(|&w| self.applies_to(w)).collect()
    }
}

fn fam(s: &str) -> MonomialFamily {
    s.parse().expect("registry family")
}

#[allow(clippy::too_many_arguments)]
fn rel(
    code: &'static str,
    id: &'static str,
    even: bool,
    shift: usize,
    parity: Parity,
    triple: TripleMap,
    recipe: Recipe,
    map: MapId,
    source: &'static str,
) -> SequenceDescriptor {
    SequenceDescriptor {
        id,
        side: Side::Relation,
        weight_parity: if even { WeightParity::Even } else { WeightParity::Odd },
        min_weight: if even { 0 } else { 1 },
        family: fam(code),
        shift,
        middle_parity: parity,
        triple: Some(triple),
        claimed_kernel: recipe,
        claimed_injection: map,
        source,
    }
}

fn dual(
    code: &'static str,
    id: &'static str,
    even: bool,
    shift: usize,
    recipe: Recipe,
    map: MapId,
    source: &'static str,
) -> SequenceDescriptor {
    SequenceDescriptor {
        id,
        side: Side::Dual,
        weight_parity: if even { WeightParity::Even } else { WeightParity::Odd },
        min_weight: if even { 0 } else { 1 },
        family: fam(code),
        shift,
        middle_parity: Parity::Plus,
        triple: None,
        claimed_kernel: recipe,
        claimed_injection: map,
        source,
    }
}

pub fn registry() -> Vec<SequenceDescriptor> {
    use GroupId::*;
    use MapId::*;
    use Parity::*;
    use Recipe::*;
    use TripleMap::*;
    let mut v = vec![
        rel("0ee", "rel:0ee", true, 0, Plus, ZeroAB, Period(SL2Z, Plus), UGkz, "Gangl-Kaneko-Zagier"),
        rel("0eo", "rel:0eo", false, 0, Plus, ZeroAB, MaTriple, UM, "Ma; Li-Liu"),
        rel("0oe", "rel:0oe", false, 0, Minus, ZeroAB, Zero, Identity, "Zagier"),
        rel("0oo", "rel:0oo", true, 0, Minus, ZeroAB, Period(GammaB, Minus), Identity, "Tasaka"),
        rel("oo0", "rel:oo0", true, 0, Minus, AB0, Period(GammaA, Minus), Identity, "relation, Gamma_A odd"),
        rel("ee0", "rel:ee0", true, 0, Plus, AB0, Period(SL2Z, Plus), Identity, "relation, even-even-0"),
        rel("1ee", "rel:1ee", true, 1, Plus, OneAB, Period(SL2Z, Plus), UGkz, "relation, GKZ shift to 1"),
        rel("e0e", "rel:e0e", true, 0, Plus, A0B, Period(SL2Z, Plus), UGkz, "relation, GKZ even-0-even"),
        rel("o1o", "rel:o1o", true, 1, Minus, A1B, Period(SL2Z, Minus), UGkz, "relation, GKZ odd-1-odd"),
        rel("1eo", "rel:1eo", false, 1, Plus, OneAB, MaTriple, UM, "relation, Ma shift to 1"),
        rel("e1o", "rel:e1o", false, 1, Plus, A1B, MaTriple, UM, "relation, Ma even-1-odd"),
        rel("o0e", "rel:o0e", false, 0, Minus, A0B, MaPrime, UMPrime, "relation, Ma odd-0-even"),
        rel("o0o", "rel:o0o", true, 0, Minus, A0B, Period(GammaB, Minus), Identity, "relation, Gamma_B odd"),
        rel("e0o", "rel:e0o", false, 0, Plus, A0B, APoly, Identity, "relation, single A relation"),
        rel("e1e", "rel:e1e", true, 1, Plus, A1B, Zero, Identity, "relation, none even-1-even"),
        rel("eo0", "rel:eo0", false, 0, Plus, AB0, Zero, Identity, "relation, none even-odd-0"),
        rel("oe0", "rel:oe0", false, 0, Plus, BA0, Zero, Identity, "relation, none odd-even-0"),
    ];
    let mut d = vec![
        dual("0ee", "dual:0ee", true, 0, Period(SL2Z, Plus), Identity, "Ihara-Takao"),
        dual("0eo", "dual:0eo", false, 0, PeriodPairMinusPlus, XpDYq, "Zagier; Li-Liu"),
        dual("0oo", "dual:0oo", true, 0, Period(Gamma0_2, Plus), Swap, "Tasaka"),
        dual("0oe", "dual:0oe", false, 0, Zero, Identity, "dual, odd weight"),
        dual("oo0", "dual:oo0", true, 0, StatedGammaAOdd, Identity, "dual, Gamma_A"),
        dual("ee0", "dual:ee0", true, 0, Period(SL2Z, Plus), Identity, "dual, even-even-0"),
        dual("1ee", "dual:1ee", true, 1, Period(SL2Z, Plus), IntDY, "dual, shift to 1"),
        dual("e0e", "dual:e0e", true, 0, Period(SL2Z, Plus), Identity, "dual, even-0-even"),
        dual("o1o", "dual:o1o", true, 1, PreimageDX, Identity, "dual, odd-1-odd"),
        dual("1eo", "dual:1eo", false, 1, PreimageDYPair, XpPlusQ, "dual, 1-even-odd"),
        dual("e1o", "dual:e1o", false, 1, PreimageDXPair, YpPlusQ, "dual, even-1-odd"),
        dual("o0e", "dual:o0e", false, 0, PeriodPairPlusMinus, YpDXq, "dual, odd-0-even"),
        dual("o0o", "dual:o0o", true, 0, StatedGamma02Odd, Identity, "dual, Gamma_0(2)"),
        dual("e0o", "dual:e0o", false, 0, YPow, Identity, "dual, Y^w"),
        dual("e1e", "dual:e1e", true, 1, Zero, Identity, "dual, none even-1-even"),
        dual("eo0", "dual:eo0", false, 0, Zero, Identity, "dual, none even-odd-0"),
        dual("oe0", "dual:oe0", false, 0, Zero, Identity, "dual, none odd-even-0"),
    ];
    for s in d.iter_mut() {
        if matches!(s.claimed_kernel, StatedGammaAOdd | StatedGamma02Odd) {
            s.min_weight = 2;
        }
    }
    v.append(&mut d);
    v
}

pub fn descriptor(id: &str) -> Result<SequenceDescriptor> {
    registry().into_iter().find(|d| d.id == id).ok_or_else(|| Error::UnknownSequence(id.to_string()))
}

/// Ambient dimension of a family at weight `w`.
pub fn family_size(family: &MonomialFamily, w: usize) -> usize {
    family.enumerate(w).len()
}

fn even_part_rows(p: &HPoly2) -> Vec<Q> {
    Parity::Plus.exponents(p.degree()).into_iter().map(|a| p.coeff(a).clone()).collect()
}

/// Matrix whose kernel is the space of relations among the given x-monomials.
fn relation_matrix(monos: &[(usize, usize, usize)], w: usize) -> Matrix {
    let cols: Vec<Vec<Q>> = monos
        .iter()
        .map(|&(r, s, t)| even_part_rows(&relation_criterion(&HPoly3::monomial(r, s, t))))
        .collect();
    Matrix::from_cols(w / 2 + 1, &cols).expect("criterion has degree w")
}

/// Relations in the x-monomial (psi) normalization, coordinates over `family.enumerate(w)`.
pub fn relation_kernel(family: &MonomialFamily, w: usize) -> Subspace {
    let monos = family.enumerate(w);
    if monos.is_empty() {
        return Subspace::zero(0);
    }
    kernel(&relation_matrix(&monos, w))
}

/// `family_size - rank`, without materializing the kernel.
pub fn relation_kernel_dim(family: &MonomialFamily, w: usize) -> usize {
    let monos = family.enumerate(w);
    if monos.is_empty() {
        return 0;
    }
    monos.len() - rank(&relation_matrix(&monos, w))
}

/// Convert psi-normalized coefficients to coefficients of J(r; s, t).
pub fn to_j_normalization(family: &MonomialFamily, w: usize, v: &[Q]) -> Vec<Q> {
    family
        .enumerate(w)
        .into_iter()
        .zip(v)
        .map(|((r, s, t), c)| c * qi(factorial(r) * factorial(s) * factorial(t)))
        .collect()
}

/// Coefficients of the family monomials in dual_criterion(q).
fn pairing_rows(family: &MonomialFamily, w: usize, q: &HPoly2) -> Vec<Q> {
    let c = dual_criterion(q);
    family.enumerate(w).into_iter().map(|(a, b, d)| c.coeff(a, b, d)).collect()
}

/// Rows: family monomials; columns: monomial basis of V_w^parity.
pub fn pairing_matrix(family: &MonomialFamily, w: usize, parity: Parity) -> Matrix {
    let n = family_size(family, w);
    let cols: Vec<Vec<Q>> = monomial_basis(w, Some(parity)).iter().map(|q| pairing_rows(family, w, q)).collect();
    Matrix::from_cols(n, &cols).expect("rows match family")
}

/// `{q in V_w^parity : every family coefficient of dual_criterion(q) vanishes}`, full V_w coordinates.
pub fn dual_kernel(family: &MonomialFamily, w: usize, parity: Parity) -> Subspace {
    let exps = parity.exponents(w);
    let k = kernel(&pairing_matrix(family, w, parity));
    embed(w, &exps, &k)
}

/// Relation kernel expressed on the middle space of a relation-side sequence.
fn middle_relation_kernel(d: &SequenceDescriptor, w: usize) -> Subspace {
    let deg = d.middle_degree(w);
    let tm = d.triple.expect("relation side");
    let exps = d.middle_parity.exponents(deg);
    let fw = d.family_weight(w);
    let monos: Vec<(usize, usize, usize)> = exps.iter().map(|&a| tm.apply(a, deg - a)).collect();
    debug_assert!(monos.iter().all(|&m| d.family.contains(m)));
    let k = if monos.is_empty() { Subspace::zero(0) } else { kernel(&relation_matrix(&monos, fw)) };
    embed(deg, &exps, &k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceCertificate {
    pub id: String,
    pub weight: usize,
    pub dim_left: usize,
    pub dim_middle: usize,
    pub dim_right: usize,
    pub kernel: Subspace,
    pub image: Subspace,
    pub composition_zero: bool,
    pub injective: bool,
    pub exact: bool,
    pub discrepancy_note: Option<String>,
}

impl SequenceCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        let rows = |s: &Subspace| -> Vec<Vec<String>> {
            s.basis_vectors().iter().map(|v| v.iter().map(fmt_q).collect()).collect()
        };
        json!({
            "id": self.id,
            "weight": self.weight,
            "dims": {"left": self.dim_left, "middle": self.dim_middle, "right": self.dim_right},
            "composition_zero": self.composition_zero,
            "injective": self.injective,
            "exact": self.exact,
            "kernel_basis": rows(&self.kernel),
            "image_basis": rows(&self.image),
            "discrepancy_note": self.discrepancy_note,
        })
    }
}

fn basis(g: GroupId, p: Parity, w: usize) -> Vec<HPoly2> {
    period_basis(g, p, w).expect("supported period space")
}

fn poly_basis(s: &Subspace, deg: usize) -> Vec<HPoly2> {
    s.basis_vectors().into_iter().map(|v| HPoly2::new(deg, v).expect("length")).collect()
}

fn eisenstein(w: usize) -> HPoly2 {
    HPoly2::from_terms(w, &[(w, 1), (0, -1)])
}

/// Representatives of W^+_{w} modulo X^w - Y^w.
pub fn quotient_representatives(w: usize) -> Vec<HPoly2> {
    let full = basis(GroupId::SL2Z, Parity::Plus, w);
    let e = eisenstein(w);
    let space = period_space(GroupId::SL2Z, Parity::Plus, w).expect("even");
    let mut chosen: Vec<Vec<Q>> = if space.contains(e.coeffs()) { vec![e.coeffs().to_vec()] } else { vec![] };
    let skip = chosen.len();
    for b in full {
        let mut trial = chosen.clone();
        trial.push(b.coeffs().to_vec());
        if rank(&Matrix::from_rows(w + 1, &trial).expect("rows")) == trial.len() {
            chosen = trial;
        }
    }
    chosen.into_iter().skip(skip).map(|v| HPoly2::new(w, v).expect("length")).collect()
}

/// Restriction of a derivative to V_deg^parity, as a matrix into full V_{deg-1}.
fn derivative_preimage(deg: usize, parity: Parity, by_x: bool, target: &Subspace) -> Subspace {
    let exps = parity.exponents(deg);
    let cols: Vec<Vec<Q>> = exps
        .iter()
        .map(|&a| {
            let m = HPoly2::monomial(deg, a);
            let d = if by_x { m.deriv_x() } else { m.deriv_y() };
            d.into_coeffs()
        })
        .collect();
    let f = Matrix::from_cols(deg, &cols).expect("derivative degree");
    let k = preimage(&f, target).expect("shapes agree");
    embed(deg, &exps, &k)
}

pub fn preimage_dx_minus(w: usize) -> Subspace {
    let t = period_space(GroupId::SL2Z, Parity::Minus, w).expect("even");
    derivative_preimage(w + 1, Parity::Plus, true, &t)
}

/// Left dimension and images in the middle space.
struct LeftTerm {
    dim: usize,
    images: Vec<HPoly2>,
    note: Option<String>,
}

fn build_left(d: &SequenceDescriptor, w: usize, kernel: &Subspace) -> LeftTerm {
    use Recipe::*;
    let deg = d.middle_degree(w);
    let plain = |dim: usize, images: Vec<HPoly2>| LeftTerm { dim, images, note: None };
    match d.claimed_kernel {
        Zero => plain(0, vec![]),
        Period(g, p) => {
            let b = basis(g, p, w);
            let images: Vec<HPoly2> = match d.claimed_injection {
                MapId::Identity => b.clone(),
                MapId::UGkz => b.iter().map(u_gkz).collect(),
                MapId::Swap => b.iter().map(HPoly2::swap).collect(),
                MapId::IntDY => b.iter().map(HPoly2::integrate_y).collect(),
                m => panic!("map {} not used with a period space", m.name()),
            };
            plain(b.len(), images)
        }
        MaTriple => {
            let ps = basis(GroupId::SL2Z, Parity::Minus, w - 1);
            let qs = quotient_representatives(w + 1);
            let zp = HPoly2::zero(w - 1);
            let zq = HPoly2::zero(w + 1);
            let mut images: Vec<HPoly2> =
                ps.iter().map(|p| u_m(p, &zq, &Q::zero(), w).expect("degrees")).collect();
            images.extend(qs.iter().map(|q| u_m(&zp, q, &Q::zero(), w).expect("degrees")));
            images.push(u_m(&zp, &zq, &Q::one(), w).expect("degrees"));
            plain(ps.len() + qs.len() + 1, images)
        }
        MaPrime => {
            let ps = basis(GroupId::SL2Z, Parity::Plus, w - 1);
            let qs = basis(GroupId::SL2Z, Parity::Minus, w + 1);
            let zp = HPoly2::zero(w - 1);
            let zq = HPoly2::zero(w + 1);
            let mut images: Vec<HPoly2> = ps.iter().map(|p| u_m_prime(p, &zq, w).expect("degrees")).collect();
            images.extend(qs.iter().map(|q| u_m_prime(&zp, q, w).expect("degrees")));
            plain(ps.len() + qs.len(), images)
        }
        APoly => plain(1, vec![a_poly(w)]),
        YPow => plain(1, vec![HPoly2::monomial(w, 0)]),
        PreimageDX => {
            let s = preimage_dx_minus(w);
            plain(s.dim(), poly_basis(&s, deg))
        }
        PeriodPairMinusPlus => {
            let ps = basis(GroupId::SL2Z, Parity::Minus, w - 1);
            let qs = basis(GroupId::SL2Z, Parity::Plus, w + 1);
            let mut images: Vec<HPoly2> = ps.iter().map(HPoly2::mul_x).collect();
            images.extend(qs.iter().map(HPoly2::deriv_y));
            plain(ps.len() + qs.len(), images)
        }
        PeriodPairPlusMinus => {
            let ps = basis(GroupId::SL2Z, Parity::Plus, w - 1);
            let qs = basis(GroupId::SL2Z, Parity::Minus, w + 1);
            let mut images: Vec<HPoly2> = ps.iter().map(HPoly2::mul_y).collect();
            images.extend(qs.iter().map(HPoly2::deriv_x));
            plain(ps.len() + qs.len(), images)
        }
        PreimageDYPair | PreimageDXPair => {
            let by_x = d.claimed_kernel == PreimageDXPair;
            let t = period_space(GroupId::SL2Z, Parity::Minus, w - 1).expect("even");
            let parity = if by_x { Parity::Plus } else { Parity::Minus };
            let pre = derivative_preimage(w, parity, by_x, &t);
            let ps = poly_basis(&pre, w);
            let qs = basis(GroupId::SL2Z, Parity::Plus, w + 1);
            let mut images: Vec<HPoly2> =
                ps.iter().map(|p| if by_x { p.mul_y() } else { p.mul_x() }).collect();
            images.extend(qs.iter().cloned());
            plain(ps.len() + qs.len(), images)
        }
        StatedGammaAOdd => {
            let stated = period_space(GroupId::GammaA, Parity::Minus, w).expect("even");
            let proof = period_space(GroupId::GammaA, Parity::Plus, w).expect("even");
            let stated_match = &stated == kernel;
            let proof_match = &proof == kernel;
            let note = format!(
                "stated left term W^(-,Gamma_A) has dim {} and lies in V^-, which meets V^+ only in 0; \
                 computed kernel (dim {}) {} W^(+,Gamma_A) (dim {}){}",
                stated.dim(),
                kernel.dim(),
                if proof_match { "equals" } else { "differs from" },
                proof.dim(),
                if stated_match { "; it also equals the stated space" } else { "" },
            );
            LeftTerm { dim: proof.dim(), images: poly_basis(&proof, w), note: Some(note) }
        }
        StatedGamma02Odd => {
            let plus = period_space(GroupId::Gamma0_2, Parity::Plus, w).expect("even");
            let plus_basis = poly_basis(&plus, w);
            let swapped_vs: Vec<Vec<Q>> = plus_basis.iter().map(|p| p.swap().into_coeffs()).collect();
            let swapped = Subspace::span(w + 1, &swapped_vs).expect("length");
            let sw = &swapped == kernel;
            let un = &plus == kernel;
            let verdict = match (sw, un) {
                (true, true) => "equals both the swapped and the unswapped W^(+,Gamma_0(2)) (they coincide here)",
                (true, false) => "equals the swapped W^(+,Gamma_0(2)) only",
                (false, true) => "equals the unswapped W^(+,Gamma_0(2)), not its X<->Y swap",
                (false, false) => "matches neither the swapped nor the unswapped W^(+,Gamma_0(2))",
            };
            let note = format!(
                "stated left term W^(-,Gamma_0(2)) has no kernel characterization and is not computed; \
                 computed kernel (dim {}) {verdict}",
                kernel.dim()
            );
            let images = if un && !sw { plus_basis } else { swapped_vs.iter().map(|v| HPoly2::new(w, v.clone()).expect("length")).collect() };
            LeftTerm { dim: plus.dim(), images, note: Some(note) }
        }
    }
}

pub fn verify_sequence(id: &str, w: usize) -> Result<SequenceCertificate> {
    let d = descriptor(id)?;
    verify_descriptor(&d, w)
}

pub fn verify_descriptor(d: &SequenceDescriptor, w: usize) -> Result<SequenceCertificate> {
    if !d.weight_parity.matches(w) {
        return Err(Error::ParityMismatch(format!("{} needs {:?} weight, got {w}", d.id, d.weight_parity)));
    }
    if w < d.min_weight {
        return Err(Error::Invalid(format!("{} is stated for w >= {}, got {w}", d.id, d.min_weight)));
    }
    let deg = d.middle_degree(w);
    let kernel = match d.side {
        Side::Relation => middle_relation_kernel(d, w),
        Side::Dual => dual_kernel(&d.family, d.family_weight(w), d.middle_parity),
    };
    let left = build_left(d, w, &kernel);
    let vs: Vec<Vec<Q>> = left.images.iter().map(|p| p.coeffs().to_vec()).collect();
    let image = Subspace::span(deg + 1, &vs)?;
    let composition_zero = kernel.contains_subspace(&image);
    let injective = image.dim() == left.dim;
    let dim_middle = d.middle_parity.exponents(deg).len();
    let exact = composition_zero && image == kernel && injective;
    let mut note = left.note;
    if !injective {
        let extra = format!("left map has rank {} on a {}-dimensional domain", image.dim(), left.dim);
        note = Some(match note {
            Some(n) => format!("{n}; {extra}"),
            None => extra,
        });
    }
    Ok(SequenceCertificate {
        id: d.id.to_string(),
        weight: w,
        dim_left: left.dim,
        dim_middle,
        dim_right: dim_middle - kernel.dim(),
        kernel,
        image,
        composition_zero,
        injective,
        exact,
        discrepancy_note: note,
    })
}

/// Families of the dimension survey with their predicted relation counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurveyFamily {
    EvenEvenOne,
    OneOddEven,
    OddOneEven,
    OddEvenOne,
    EvenOddOne,
}

impl SurveyFamily {
    pub const ALL: [SurveyFamily; 5] = [
        SurveyFamily::EvenEvenOne,
        SurveyFamily::OneOddEven,
        SurveyFamily::OddOneEven,
        SurveyFamily::OddEvenOne,
        SurveyFamily::EvenOddOne,
    ];

    pub fn family(self) -> MonomialFamily {
        fam(match self {
            SurveyFamily::EvenEvenOne => "ee1",
            SurveyFamily::OneOddEven => "1oe",
            SurveyFamily::OddOneEven => "o1e",
            SurveyFamily::OddEvenOne => "oe1",
            SurveyFamily::EvenOddOne => "eo1",
        })
    }

    /// Total index weights r+s+t at which the family is nonempty.
    pub fn weight_parity(self) -> WeightParity {
        match self {
            SurveyFamily::EvenEvenOne => WeightParity::Odd,
            _ => WeightParity::Even,
        }
    }

    pub fn predictor_name(self) -> &'static str {
        match self {
            SurveyFamily::EvenEvenOne => "1",
            SurveyFamily::OneOddEven | SurveyFamily::OddOneEven => "dim S_k",
            _ => "dim M_k",
        }
    }

    /// k is the zeta weight r+s+t+2.
    pub fn predicted(self, w: usize) -> usize {
        let (m, s) = dim_modular(w + 2);
        match self {
            SurveyFamily::EvenEvenOne => 1,
            SurveyFamily::OneOddEven | SurveyFamily::OddOneEven => s,
            _ => m,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyRow {
    pub family: String,
    pub weight: usize,
    pub computed: usize,
    pub predicted: usize,
}

impl SurveyRow {
    pub fn matches(&self) -> bool {
        self.computed == self.predicted
    }
}

pub fn dimension_survey(family: SurveyFamily, weights: impl IntoIterator<Item = usize>) -> Vec<SurveyRow> {
    weights
        .into_iter()
        .filter(|&w| family.weight_parity().matches(w) && !family.family().enumerate(w).is_empty())
        .map(|w| SurveyRow {
            family: family.family().name(),
            weight: w,
            computed: relation_kernel(&family.family(), w).dim(),
            predicted: family.predicted(w),
        })
        .collect()
}

/// (dim H via relations, dim H via the pairing rank).
pub fn double_sided_dims(family: &MonomialFamily, w: usize) -> (usize, usize) {
    let n = family_size(family, w);
    let from_relations = n - relation_kernel_dim(family, w);
    let from_pairing = rank(&pairing_matrix(family, w, Parity::Plus));
    (from_relations, from_pairing)
}

/// Every family registered or surveyed, without duplicates.
pub fn all_families() -> Vec<MonomialFamily> {
    let mut out: Vec<MonomialFamily> = Vec::new();
    for f in registry().iter().map(|d| d.family).chain(SurveyFamily::ALL.iter().map(|s| s.family())) {
        if !out.contains(&f) {
            out.push(f);
        }
    }
    for extra in ["1oo", "oo1", "aaa"] {
        let f = fam(extra);
        if !out.contains(&f) {
            out.push(f);
        }
    }
    out
}

/// Relation kernel after the index swap (r,s,t) -> (s,r,t), in coordinates of the antipodal family.
pub fn swap_relations(family: &MonomialFamily, w: usize, k: &Subspace) -> Subspace {
    let src = family.enumerate(w);
    let dst = family.antipode().enumerate(w);
    let vs: Vec<Vec<Q>> = k
        .basis_vectors()
        .into_iter()
        .map(|v| {
            let mut out = vec![Q::zero(); dst.len()];
            for (&(r, s, t), c) in src.iter().zip(v) {
                let j = dst.iter().position(|&m| m == (s, r, t)).expect("antipodal monomial");
                out[j] = c;
            }
            out
        })
        .collect();
    Subspace::span(dst.len(), &vs).expect("length")
}
