//! Proof objectives of the sharp-bound arguments, with their regions and
//! claimed extrema, and a deterministic grid + golden-section optimizer that
//! reproduces each extremum numerically.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{coeffs_from_caratheodory, coeffs_from_schwarz, ClassId};
use crate::error::{Error, Result};
use crate::functionals::FunctionalId;
use crate::report::{BoundReport, ReportMeta, Status, Value};
use crate::scalar::{parse_rational, q, Rational, RealScalar, Scalar};
use crate::schwarz::{LiberaDraw, SchwarzCoeffs};

pub const DEFAULT_GRID: usize = 512;
pub const DEFAULT_REFINE_ITERS: usize = 40;
pub const DEFAULT_TOL: f64 = 1e-6;
pub const MIN_GRID: usize = 64;

/// Tolerance for the decimal ceilings quoted inside the proofs.
pub const DECIMAL_CEILING_TOL: f64 = 1e-4;
/// Numeric agreement required for the ceilings that are exact rationals.
pub const EXACT_CEILING_TOL: f64 = 1e-12;

const REFINE_SWEEPS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    /// `{(x, y): 0 <= x <= 1, 0 <= y <= 1 - x^2}`
    Lambda,
    /// `[0, 2] x [0, 1] x [0, 1]`
    Omega,
    /// `[0, 2] x [0, 1]`
    Delta,
}

impl Region {
    pub fn dim(self) -> usize {
        match self {
            Region::Lambda | Region::Delta => 2,
            Region::Omega => 3,
        }
    }

    /// Maps the unit cube onto the region. `Lambda` uses `y = s (1 - x^2)`.
    pub fn embed(self, u: [f64; 3]) -> [f64; 3] {
        match self {
            Region::Lambda => [u[0], u[1] * (1.0 - u[0] * u[0]), 0.0],
            Region::Omega => [2.0 * u[0], u[1], u[2]],
            Region::Delta => [2.0 * u[0], u[1], 0.0],
        }
    }

    pub fn contains(self, pt: &[f64]) -> bool {
        if pt.len() != self.dim() || pt.iter().any(|v| !v.is_finite()) {
            return false;
        }
        let unit = |v: f64| (0.0..=1.0).contains(&v);
        match self {
            Region::Lambda => unit(pt[0]) && pt[1] >= 0.0 && pt[1] <= 1.0 - pt[0] * pt[0],
            Region::Omega => (0.0..=2.0).contains(&pt[0]) && unit(pt[1]) && unit(pt[2]),
            Region::Delta => (0.0..=2.0).contains(&pt[0]) && unit(pt[1]),
        }
    }

    pub fn contains_exact(self, pt: &[Rational]) -> bool {
        if pt.len() != self.dim() {
            return false;
        }
        let zero = q(0, 1);
        let one = q(1, 1);
        let two = q(2, 1);
        let within = |v: &Rational, hi: &Rational| *v >= zero && v <= hi;
        match self {
            Region::Lambda => within(&pt[0], &one) && within(&pt[1], &(one.clone() - pt[0].powi(2))),
            Region::Omega => within(&pt[0], &two) && within(&pt[1], &one) && within(&pt[2], &one),
            Region::Delta => within(&pt[0], &two) && within(&pt[1], &one),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Max,
    Min,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ObjectiveId {
    ChiE,
    UpsilonE,
    PhiE,
    UE,
    NL,
    BetaL,
    AlphaL,
    MuL,
    VL,
    PhiTE,
    PsiTE,
    KappaL,
    GL,
    DeltaL,
    JL,
}

impl ObjectiveId {
    pub const ALL: [ObjectiveId; 15] = [
        ObjectiveId::ChiE,
        ObjectiveId::UpsilonE,
        ObjectiveId::PhiE,
        ObjectiveId::UE,
        ObjectiveId::NL,
        ObjectiveId::BetaL,
        ObjectiveId::AlphaL,
        ObjectiveId::MuL,
        ObjectiveId::VL,
        ObjectiveId::PhiTE,
        ObjectiveId::PsiTE,
        ObjectiveId::KappaL,
        ObjectiveId::GL,
        ObjectiveId::DeltaL,
        ObjectiveId::JL,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ObjectiveId::ChiE => "chi_e",
            ObjectiveId::UpsilonE => "upsilon_e",
            ObjectiveId::PhiE => "phi_e",
            ObjectiveId::UE => "u_e",
            ObjectiveId::NL => "N_L",
            ObjectiveId::BetaL => "beta_L",
            ObjectiveId::AlphaL => "alpha_L",
            ObjectiveId::MuL => "mu_L",
            ObjectiveId::VL => "v_L",
            ObjectiveId::PhiTE => "PhiT_e",
            ObjectiveId::PsiTE => "PsiT_e",
            ObjectiveId::KappaL => "kappa_L",
            ObjectiveId::GL => "G_L",
            ObjectiveId::DeltaL => "delta_L",
            ObjectiveId::JL => "J_L",
        }
    }

    pub fn region(self) -> Region {
        use ObjectiveId::*;
        match self {
            NL => Region::Omega,
            PhiTE | PsiTE | KappaL | GL | DeltaL | JL => Region::Delta,
            _ => Region::Lambda,
        }
    }

    pub fn arity(self) -> usize {
        self.region().dim()
    }

    pub fn sense(self) -> Sense {
        match self {
            ObjectiveId::PsiTE | ObjectiveId::GL | ObjectiveId::JL => Sense::Min,
            _ => Sense::Max,
        }
    }

    pub fn class(self) -> ClassId {
        use ObjectiveId::*;
        match self {
            ChiE | UpsilonE | PhiE | UE | PhiTE | PsiTE => ClassId::Sse,
            _ => ClassId::Ssl,
        }
    }

    /// The functionals this objective bounds (the `Sse` Toeplitz pair serves both versions).
    pub fn functionals(self) -> &'static [FunctionalId] {
        use ObjectiveId::*;
        match self {
            ChiE | NL => &[FunctionalId::H21LogInverse],
            UpsilonE | AlphaL => &[FunctionalId::H22Inverse],
            BetaL => &[FunctionalId::H22],
            PhiE | MuL => &[FunctionalId::H23Inverse],
            UE | VL => &[FunctionalId::H23Diff],
            PhiTE | PsiTE => &[FunctionalId::T21Log, FunctionalId::T21LogInverse],
            KappaL | GL => &[FunctionalId::T21Log],
            DeltaL | JL => &[FunctionalId::T21LogInverse],
        }
    }

    /// Evaluates the objective at `pt` (`(x, y)` on `Lambda`, `(p, x, y)` on
    /// `Omega`, `(p, x)` on `Delta`).
    pub fn eval<T: RealScalar>(self, pt: &[T]) -> T {
        use ObjectiveId::*;
        let k = |n: i64| T::int(n);
        let r = |n: i64, d: i64| T::ratio(n, d);
        match self.region() {
            Region::Lambda => {
                let (x, y) = (&pt[0], &pt[1]);
                let q = k(1) - x.powi(2) - y.powi(2) / (k(1) + x.clone());
                let rr = k(1) - x.powi(2) - y.powi(2);
                let xy = x.clone() * y.clone();
                match self {
                    ChiE => {
                        (x.powi(4) + k(48) * y.powi(2) + k(36) * x.powi(2) * y.clone() + k(24) * x.clone() * q)
                            / k(768)
                    }
                    UpsilonE => {
                        (x.powi(4) + k(18) * x.powi(2) * y.clone() + k(24) * y.powi(2) + k(12) * x.clone() * q)
                            / k(96)
                    }
                    PhiE => {
                        r(109, 2304) * x.powi(6)
                            + r(53, 192) * x.powi(4) * y.clone()
                            + r(33, 64) * x.powi(2) * y.powi(2)
                            + y.powi(3) / k(4)
                            + x.powi(3) * q.clone() / k(96)
                            + xy * q.clone() / k(16)
                            + q.powi(2) / k(16)
                            + x.powi(2) * rr.clone() / k(16)
                            + y.clone() * rr / k(8)
                    }
                    UE => {
                        r(3, 64)
                            * (x.powi(6)
                                + k(8) * y.powi(3)
                                + k(6) * x.powi(4) * y.clone()
                                + k(12) * x.powi(2) * y.powi(2))
                    }
                    BetaL => {
                        (x.powi(4) + k(12) * x.powi(2) * y.clone() + k(32) * y.powi(2) + k(16) * x.clone() * q)
                            / k(512)
                    }
                    AlphaL => {
                        (k(3) * x.powi(4) + k(4) * x.powi(2) * y.clone() + k(32) * y.powi(2) + k(16) * x.clone() * q)
                            / k(512)
                    }
                    MuL => {
                        (k(19) * x.powi(6)
                            + k(200) * x.powi(4) * y.clone()
                            + k(688) * x.powi(2) * y.powi(2)
                            + k(768) * y.powi(3)
                            + k(32) * x.powi(3) * q.clone()
                            + k(128) * xy * q.clone()
                            + k(256) * q.powi(2)
                            + k(128) * x.powi(2) * rr.clone()
                            + k(512) * y.clone() * rr)
                            / k(16384)
                    }
                    VL => {
                        r(3, 4096)
                            * (x.powi(6)
                                + k(64) * y.powi(3)
                                + k(12) * x.powi(4) * y.clone()
                                + k(48) * x.powi(2) * y.powi(2))
                    }
                    _ => unreachable!(),
                }
            }
            Region::Omega => {
                let (p, x, y) = (&pt[0], &pt[1], &pt[2]);
                let t = k(4) - p.powi(2);
                (k(38) * p.powi(4)
                    + k(48) * p.powi(2) * t.clone() * (x.clone() + k(4) * x.powi(2))
                    + k(384) * p.clone() * y.clone() * t.clone() * (k(1) - x.powi(2))
                    + k(384) * t.powi(2) * x.powi(2))
                    / k(393216)
            }
            Region::Delta => {
                let (p, x) = (&pt[0], &pt[1]);
                let t = k(4) - p.powi(2);
                let sign = if self.sense() == Sense::Max { k(1) } else { k(-1) };
                let (c4, c2, cx, cxx, den) = match self {
                    PhiTE | PsiTE => (-1, 64, 8, -16, 4096),
                    KappaL | GL => (-9, 256, 48, -64, 65536),
                    DeltaL | JL => (-25, 256, 80, -64, 65536),
                    _ => unreachable!(),
                };
                (k(c4) * p.powi(4)
                    + k(c2) * p.powi(2)
                    + sign * k(cx) * p.powi(2) * t.clone() * x.clone()
                    + k(cxx) * t.powi(2) * x.powi(2))
                    / k(den)
            }
        }
    }

    pub fn eval_f64(self, pt: &[f64]) -> f64 {
        self.eval::<f64>(pt)
    }
}

impl fmt::Display for ObjectiveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ObjectiveId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ObjectiveId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown objective `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ObjectiveSpec {
    pub id: ObjectiveId,
    pub claimed_value: Rational,
    pub claimed_point: Vec<Rational>,
    pub theorem_tag: &'static str,
}

impl ObjectiveSpec {
    pub fn region(&self) -> Region {
        self.id.region()
    }

    pub fn sense(&self) -> Sense {
        self.id.sense()
    }

    pub fn arity(&self) -> usize {
        self.id.arity()
    }

    /// Exact value of the objective at the claimed point.
    pub fn value_at_claimed_point(&self) -> Rational {
        self.id.eval(&self.claimed_point)
    }
}

fn pt(coords: &[(i64, i64)]) -> Vec<Rational> {
    coords.iter().map(|&(n, d)| q(n, d)).collect()
}

/// The fifteen proof objectives, in theorem order.
pub fn objective_catalog() -> Vec<ObjectiveSpec> {
    use ObjectiveId::*;
    let entry = |id, value: (i64, i64), point: &[(i64, i64)], tag| ObjectiveSpec {
        id,
        claimed_value: q(value.0, value.1),
        claimed_point: pt(point),
        theorem_tag: tag,
    };
    vec![
        entry(ChiE, (1, 16), &[(0, 1), (1, 1)], "S*_{S,e}: |H_{2,1}(F_{f^-1}/2)| <= 1/16"),
        entry(UpsilonE, (1, 4), &[(0, 1), (1, 1)], "S*_{S,e}: |H_{2,2}(f^-1)| <= 1/4"),
        entry(PhiE, (1, 4), &[(0, 1), (1, 1)], "S*_{S,e}: |H_{2,3}(f^-1)| <= 1/4"),
        entry(UE, (3, 8), &[(0, 1), (1, 1)], "S*_{S,e}: |H_{2,3}(f^-1) - H_{2,3}(f)| <= 3/8"),
        entry(NL, (1, 64), &[(0, 1), (1, 1), (0, 1)], "S*_{S,L}: |H_{2,1}(F_{f^-1}/2)| <= 1/64"),
        entry(BetaL, (1, 16), &[(0, 1), (1, 1)], "S*_{S,L}: |H_{2,2}(f)| <= 1/16"),
        entry(AlphaL, (1, 16), &[(0, 1), (1, 1)], "S*_{S,L}: |H_{2,2}(f^-1)| <= 1/16"),
        entry(MuL, (3, 64), &[(0, 1), (1, 1)], "S*_{S,L}: |H_{2,3}(f^-1)| <= 3/64"),
        entry(VL, (3, 64), &[(0, 1), (1, 1)], "S*_{S,L}: |H_{2,3}(f^-1) - H_{2,3}(f)| <= 3/64"),
        entry(PhiTE, (15, 256), &[(2, 1), (0, 1)], "S*_{S,e}: -1/16 <= T_{2,1} <= 15/256"),
        entry(PsiTE, (-1, 16), &[(0, 1), (1, 1)], "S*_{S,e}: -1/16 <= T_{2,1} <= 15/256"),
        entry(KappaL, (55, 4096), &[(2, 1), (0, 1)], "S*_{S,L}: -1/64 <= T_{2,1}(F_f/gamma) <= 55/4096"),
        entry(GL, (-1, 64), &[(0, 1), (1, 1)], "S*_{S,L}: -1/64 <= T_{2,1}(F_f/gamma) <= 55/4096"),
        entry(DeltaL, (39, 4096), &[(2, 1), (0, 1)], "S*_{S,L}: -1/64 <= T_{2,1}(F_{f^-1}/Gamma) <= 39/4096"),
        entry(JL, (-1, 64), &[(0, 1), (1, 1)], "S*_{S,L}: -1/64 <= T_{2,1}(F_{f^-1}/Gamma) <= 39/4096"),
    ]
}

pub fn objective_spec(id: ObjectiveId) -> ObjectiveSpec {
    objective_catalog().into_iter().find(|s| s.id == id).expect("catalog covers every objective")
}

/// Located extremum: `point` in region coordinates, `value` of the objective
/// itself (not negated for minimization).
#[derive(Clone, Debug, PartialEq)]
pub struct Optimum {
    pub point: Vec<f64>,
    pub value: f64,
}

fn better(a: (f64, usize), b: (f64, usize)) -> (f64, usize) {
    if a.0 > b.0 || (a.0 == b.0 && a.1 < b.1) {
        a
    } else {
        b
    }
}

fn grid_point(dim: usize, grid: usize, mut idx: usize) -> [f64; 3] {
    let n = grid + 1;
    let mut u = [0.0; 3];
    for axis in (0..dim).rev() {
        u[axis] = (idx % n) as f64 / grid as f64;
        idx /= n;
    }
    u
}

fn golden_max<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, iters: usize) -> (f64, f64) {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..iters {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d);
        }
    }
    let mid = (a + b) / 2.0;
    let mut best = (mid, f(mid));
    for t in [lo, hi, c, d] {
        let v = f(t);
        if v > best.1 {
            best = (t, v);
        }
    }
    best
}

/// Maximizes `f` over `[0, 1]^dim`: a scan of `(grid + 1)^dim` nodes
/// (ties go to the lexicographically smallest node), then coordinate-wise
/// golden-section refinement within one cell of the best node.
pub fn maximize_unit_cube<F>(dim: usize, grid: usize, refine_iters: usize, f: F) -> ([f64; 3], f64)
where
    F: Fn([f64; 3]) -> f64 + Sync,
{
    assert!((1..=3).contains(&dim), "dimension must be 1, 2 or 3");
    assert!(grid >= 1, "grid must be positive");
    let clean = |v: f64| if v.is_nan() { f64::NEG_INFINITY } else { v };
    let total = (grid + 1).pow(dim as u32);
    let (best_value, best_idx) = (0..total)
        .into_par_iter()
        .map(|i| (clean(f(grid_point(dim, grid, i))), i))
        .reduce(|| (f64::NEG_INFINITY, usize::MAX), better);
    let mut u = grid_point(dim, grid, best_idx);
    let mut value = best_value;
    let h = 1.0 / grid as f64;
    for _ in 0..REFINE_SWEEPS {
        for axis in 0..dim {
            let lo = (u[axis] - h).max(0.0);
            let hi = (u[axis] + h).min(1.0);
            let along = |t: f64| {
                let mut v = u;
                v[axis] = t;
                clean(f(v))
            };
            let (t, v) = golden_max(&along, lo, hi, refine_iters);
            if v > value {
                value = v;
                u[axis] = t;
            }
        }
    }
    (u, value)
}

/// Locates the extremum of `spec` on its region.
pub fn optimize(spec: &ObjectiveSpec, grid: usize, refine_iters: usize) -> Optimum {
    optimize_id(spec.id, grid, refine_iters)
}

pub fn optimize_id(id: ObjectiveId, grid: usize, refine_iters: usize) -> Optimum {
    let region = id.region();
    let dim = region.dim();
    let sign = match id.sense() {
        Sense::Max => 1.0,
        Sense::Min => -1.0,
    };
    let (u, v) = maximize_unit_cube(dim, grid, refine_iters, |u| sign * id.eval_f64(&region.embed(u)[..dim]));
    Optimum { point: region.embed(u)[..dim].to_vec(), value: sign * v }
}

/// The side conditions the proofs quote along boundary curves and faces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AuxiliaryId {
    ChiEdge,
    UpsilonEdge,
    BetaEdge,
    AlphaEdge,
    NEdge,
    NFaceP2,
    PhiEEdge,
    MuEdge,
}

impl AuxiliaryId {
    pub const ALL: [AuxiliaryId; 8] = [
        AuxiliaryId::ChiEdge,
        AuxiliaryId::UpsilonEdge,
        AuxiliaryId::BetaEdge,
        AuxiliaryId::AlphaEdge,
        AuxiliaryId::NEdge,
        AuxiliaryId::NFaceP2,
        AuxiliaryId::PhiEEdge,
        AuxiliaryId::MuEdge,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AuxiliaryId::ChiEdge => "chi_e.y0",
            AuxiliaryId::UpsilonEdge => "upsilon_e.y0",
            AuxiliaryId::BetaEdge => "beta_L.y0",
            AuxiliaryId::AlphaEdge => "alpha_L.y0",
            AuxiliaryId::NEdge => "N_L.x0y1",
            AuxiliaryId::NFaceP2 => "N_L.p2",
            AuxiliaryId::PhiEEdge => "phi_e.y0",
            AuxiliaryId::MuEdge => "mu_L.y0",
        }
    }

    pub fn objective(self) -> ObjectiveId {
        match self {
            AuxiliaryId::ChiEdge => ObjectiveId::ChiE,
            AuxiliaryId::UpsilonEdge => ObjectiveId::UpsilonE,
            AuxiliaryId::BetaEdge => ObjectiveId::BetaL,
            AuxiliaryId::AlphaEdge => ObjectiveId::AlphaL,
            AuxiliaryId::NEdge | AuxiliaryId::NFaceP2 => ObjectiveId::NL,
            AuxiliaryId::PhiEEdge => ObjectiveId::PhiE,
            AuxiliaryId::MuEdge => ObjectiveId::MuL,
        }
    }

    /// Quoted ceiling; decimals are stored as exact decimal rationals.
    pub fn ceiling(self) -> Rational {
        let dec = |s: &str| parse_rational(s).expect("literal decimal");
        match self {
            AuxiliaryId::ChiEdge => dec("0.0122"),
            AuxiliaryId::UpsilonEdge => dec("0.049"),
            AuxiliaryId::BetaEdge => dec("0.0123"),
            AuxiliaryId::AlphaEdge => dec("0.0128"),
            AuxiliaryId::NEdge => dec("0.0032"),
            AuxiliaryId::NFaceP2 => q(19, 12288),
            AuxiliaryId::PhiEEdge => q(1, 16),
            AuxiliaryId::MuEdge => q(1, 64),
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, AuxiliaryId::NFaceP2 | AuxiliaryId::PhiEEdge | AuxiliaryId::MuEdge)
    }

    /// Dimension of the slice and its embedding into the objective's arguments.
    fn slice(self) -> (usize, fn([f64; 3]) -> [f64; 3]) {
        match self {
            AuxiliaryId::NEdge => (1, |u| [2.0 * u[0], 0.0, 1.0]),
            AuxiliaryId::NFaceP2 => (2, |u| [2.0, u[0], u[1]]),
            _ => (1, |u| [u[0], 0.0, 0.0]),
        }
    }

    fn exact_point(self, u: [f64; 3], grid: usize) -> Vec<Rational> {
        let snap = |v: f64| q((v * grid as f64).round() as i64, grid as i64);
        match self {
            AuxiliaryId::NEdge => vec![snap(u[0]) * q(2, 1), q(0, 1), q(1, 1)],
            AuxiliaryId::NFaceP2 => vec![q(2, 1), snap(u[0]), snap(u[1])],
            _ => vec![snap(u[0]), q(0, 1)],
        }
    }
}

/// Outcome of one auxiliary check.
#[derive(Clone, Debug, PartialEq)]
pub struct AuxiliaryOutcome {
    pub id: AuxiliaryId,
    pub ceiling: Rational,
    /// Numerical maximum along the slice.
    pub maximum: f64,
    pub argmax: Vec<f64>,
    /// Exact value at the grid node nearest the argmax (rational ceilings only).
    pub exact_at_argmax: Option<Rational>,
    pub pass: bool,
}

/// Maximizes the objective along the slice named by `id` and compares with
/// the quoted ceiling: within [`DECIMAL_CEILING_TOL`] for decimals, exactly
/// (at the snapped argmax) and within [`EXACT_CEILING_TOL`] numerically for
/// rationals. On the `p = 2` face of `N` the minimum must agree as well,
/// since the face value is claimed constant.
pub fn auxiliary_check(id: AuxiliaryId, grid: usize, refine_iters: usize) -> AuxiliaryOutcome {
    let obj = id.objective();
    let dim_obj = obj.arity();
    let (dim, embed) = id.slice();
    let (u, maximum) = maximize_unit_cube(dim, grid, refine_iters, |u| obj.eval_f64(&embed(u)[..dim_obj]));
    let argmax = embed(u)[..dim_obj].to_vec();
    let ceiling = id.ceiling();
    let ceiling_f = ceiling.to_f64();
    let (exact_at_argmax, pass) = if id.is_exact() {
        let exact = obj.eval(&id.exact_point(u, grid));
        let mut ok = exact == ceiling && (maximum - ceiling_f).abs() <= EXACT_CEILING_TOL;
        if id == AuxiliaryId::NFaceP2 {
            let (_, neg_min) = maximize_unit_cube(dim, grid, refine_iters, |u| -obj.eval_f64(&embed(u)[..dim_obj]));
            ok &= (-neg_min - ceiling_f).abs() <= EXACT_CEILING_TOL;
        }
        (Some(exact), ok)
    } else {
        (None, (maximum - ceiling_f).abs() <= DECIMAL_CEILING_TOL)
    };
    AuxiliaryOutcome { id, ceiling, maximum, argmax, exact_at_argmax, pass }
}

pub fn auxiliary_report(outcome: &AuxiliaryOutcome, elapsed: f64) -> BoundReport {
    let computed = match &outcome.exact_at_argmax {
        Some(r) => Value::Exact(r.clone()),
        None => Value::Float(outcome.maximum),
    };
    let gap = match &outcome.exact_at_argmax {
        Some(r) if *r == outcome.ceiling => Value::Float((outcome.maximum - outcome.ceiling.to_f64()).abs()),
        Some(r) => Value::Exact((r.clone() - outcome.ceiling.clone()).abs()),
        None => Value::Float((outcome.maximum - outcome.ceiling.to_f64()).abs()),
    };
    let obj = outcome.id.objective();
    BoundReport {
        id: outcome.id.as_str().to_string(),
        claimed: outcome.ceiling.clone(),
        computed,
        gap,
        status: Status::from_pass(outcome.pass),
        elapsed: Some(elapsed),
        meta: Some(ReportMeta {
            group: "Auxiliary proof constants".to_string(),
            class: Some(obj.class()),
            functional: obj.as_str().to_string(),
            extremal: None,
        }),
    }
}

/// Certification report for one catalog entry.
pub fn certify_objective(spec: &ObjectiveSpec, grid: usize, refine_iters: usize, tol: f64) -> BoundReport {
    let start = Instant::now();
    let opt = optimize(spec, grid, refine_iters);
    let gap = (opt.value - spec.claimed_value.to_f64()).abs();
    BoundReport {
        id: spec.id.as_str().to_string(),
        claimed: spec.claimed_value.clone(),
        computed: Value::Float(opt.value),
        gap: Value::Float(gap),
        status: Status::from_pass(gap <= tol),
        elapsed: Some(start.elapsed().as_secs_f64()),
        meta: Some(ReportMeta {
            group: spec.theorem_tag.to_string(),
            class: Some(spec.id.class()),
            functional: spec.id.as_str().to_string(),
            extremal: None,
        }),
    }
}

/// One report per catalog entry followed by one per auxiliary ceiling.
pub fn certify_all(grid: usize, refine_iters: usize, tol: f64) -> Result<Vec<BoundReport>> {
    if grid < MIN_GRID {
        return Err(Error::OutOfRange { name: "grid", value: grid.to_string(), range: ">= 64" });
    }
    if !(tol > 0.0) {
        return Err(Error::OutOfRange { name: "tol", value: tol.to_string(), range: "> 0" });
    }
    let mut reports: Vec<BoundReport> =
        objective_catalog().iter().map(|spec| certify_objective(spec, grid, refine_iters, tol)).collect();
    for id in AuxiliaryId::ALL {
        let start = Instant::now();
        let outcome = auxiliary_check(id, grid, refine_iters);
        reports.push(auxiliary_report(&outcome, start.elapsed().as_secs_f64()));
    }
    Ok(reports)
}

/// Input to a proof: Schwarz coefficients for the `Lambda` objectives,
/// a Libera–Zlotkiewicz draw for the `Omega` and `Delta` ones.
#[derive(Clone, Copy, Debug)]
pub enum ProofInput<'a> {
    Schwarz(&'a SchwarzCoeffs<Complex64>),
    Libera(&'a LiberaDraw),
}

/// Proof coordinates of `input` for `id`, or `None` if the input kind does not
/// match the objective's region.
pub fn proof_coordinates(id: ObjectiveId, input: ProofInput<'_>) -> Option<Vec<f64>> {
    match (id.region(), input) {
        (Region::Lambda, ProofInput::Schwarz(c)) => Some(vec![c.c1.norm(), c.c2.norm()]),
        (Region::Omega, ProofInput::Libera(d)) => Some(vec![d.p1, d.xi.norm(), d.eta.norm()]),
        (Region::Delta, ProofInput::Libera(d)) => Some(vec![d.p1, d.xi.norm()]),
        _ => None,
    }
}

/// Slack of the proof inequality at `input` for every functional `id` bounds:
/// `objective - |F|` (or `objective - T`) for maxima, `T - objective` for
/// minima. Non-negative whenever the proof's estimate is valid.
pub fn majorization_slack(id: ObjectiveId, input: ProofInput<'_>) -> Option<Vec<f64>> {
    let coords = proof_coordinates(id, input)?;
    let bound = id.eval_f64(&coords);
    let a = match input {
        ProofInput::Schwarz(c) => coeffs_from_schwarz(id.class(), c),
        ProofInput::Libera(d) => coeffs_from_caratheodory(id.class(), &d.expand()),
    };
    Some(
        id.functionals()
            .iter()
            .map(|f| {
                let v = f.measure(&a);
                match id.sense() {
                    Sense::Max => bound - v,
                    Sense::Min => v - bound,
                }
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schwarz::{sample_libera, sample_schwarz, SamplerConfig};
    use proptest::prelude::*;

    #[test]
    fn catalog_shape() {
        let cat = objective_catalog();
        assert_eq!(cat.len(), 15);
        for spec in &cat {
            assert_eq!(spec.claimed_point.len(), spec.arity(), "{}", spec.id);
            assert!(spec.region().contains_exact(&spec.claimed_point), "{}", spec.id);
            assert_eq!(spec.value_at_claimed_point(), spec.claimed_value, "{}", spec.id);
        }
    }

    #[test]
    fn spot_values() {
        assert_eq!(ObjectiveId::ChiE.eval(&[q(0, 1), q(1, 1)]), q(1, 16));
        for (x, y) in [(0, 0), (1, 3), (1, 1)] {
            assert_eq!(ObjectiveId::NL.eval(&[q(2, 1), q(x, 1), q(y, 1)]), q(19, 12288));
        }
        for x in [q(0, 1), q(1, 2), q(1, 1)] {
            assert_eq!(ObjectiveId::PhiTE.eval(&[q(2, 1), x]), q(15, 256));
        }
        assert_eq!(ObjectiveId::PhiE.eval(&[q(0, 1), q(0, 1)]), q(1, 16));
        assert_eq!(ObjectiveId::MuL.eval(&[q(0, 1), q(0, 1)]), q(1, 64));
    }

    #[test]
    fn phi_e_on_the_boundary_curve() {
        // Along y = 1 - x^2 the objective is (493u^3 - 996u^2 + 36u + 576)/2304 with u = x^2.
        for n in 0..=10 {
            let x = q(n, 10);
            let u = x.powi(2);
            let y = q(1, 1) - u.clone();
            let expected = (q(493, 1) * u.powi(3) - q(996, 1) * u.powi(2) + q(36, 1) * u + q(576, 1)) / q(2304, 1);
            assert_eq!(ObjectiveId::PhiE.eval(&[x, y]), expected);
        }
    }

    #[test]
    fn optimizer_examples() {
        let chi = optimize_id(ObjectiveId::ChiE, 512, 40);
        assert!((chi.value - 1.0 / 16.0).abs() <= 1e-6);
        assert!(chi.point[0].abs() < 1e-3 && (chi.point[1] - 1.0).abs() < 1e-3);
        assert!((optimize_id(ObjectiveId::UE, 512, 40).value - 3.0 / 8.0).abs() <= 1e-6);
        assert!((optimize_id(ObjectiveId::PsiTE, 512, 40).value + 1.0 / 16.0).abs() <= 1e-6);
    }

    #[test]
    fn optimizer_stays_in_region() {
        for id in ObjectiveId::ALL {
            let opt = optimize_id(id, 64, 20);
            assert!(id.region().contains(&opt.point), "{id}: {:?}", opt.point);
        }
    }

    #[test]
    fn refinement_finds_an_off_grid_peak() {
        let (u, v) = maximize_unit_cube(1, 64, 60, |u| -(u[0] - 0.123456789).powi(2));
        assert!((u[0] - 0.123456789).abs() < 1e-7);
        assert!(v > -1e-14);
    }

    #[test]
    fn ties_break_to_smallest_index() {
        let (u, _) = maximize_unit_cube(2, 8, 0, |_| 1.0);
        assert_eq!(u, [0.0, 0.0, 0.0]);
    }

    #[test]
    fn doubling_the_grid_never_loses_ground() {
        for id in ObjectiveId::ALL {
            let mut last = f64::NEG_INFINITY;
            for grid in [64, 128, 256] {
                let sign = if id.sense() == Sense::Max { 1.0 } else { -1.0 };
                let v = sign * optimize_id(id, grid, 40).value;
                assert!(v >= last - 1e-9, "{id}: grid {grid} gave {v} after {last}");
                last = v;
            }
        }
    }

    #[test]
    fn auxiliary_exact_ceilings() {
        for id in [AuxiliaryId::NFaceP2, AuxiliaryId::PhiEEdge, AuxiliaryId::MuEdge] {
            let out = auxiliary_check(id, 512, 40);
            assert!(out.pass, "{:?}: {:?}", id, out);
        }
    }

    #[test]
    fn majorization_on_samples() {
        let config = SamplerConfig::blaschke(11);
        for i in 0..1000u64 {
            let c = sample_schwarz(&config, i).unwrap().coeffs;
            let d = sample_libera(11, i);
            for id in ObjectiveId::ALL {
                let input = match id.region() {
                    Region::Lambda => ProofInput::Schwarz(&c),
                    _ => ProofInput::Libera(&d),
                };
                for s in majorization_slack(id, input).unwrap() {
                    assert!(s >= -1e-12, "{id} at draw {i}: slack {s}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn exact_and_float_evaluation_agree(
            id in prop::sample::select(ObjectiveId::ALL.to_vec()),
            a in 0i64..=64, b in 0i64..=64, c in 0i64..=64,
        ) {
            let spec = objective_spec(id);
            let region = spec.region();
            let u = [a as f64 / 64.0, b as f64 / 64.0, c as f64 / 64.0];
            let p = region.embed(u);
            let exact: Vec<Rational> = match region {
                Region::Lambda => {
                    let x = q(a, 64);
                    let y = q(b, 64) * (q(1, 1) - x.powi(2));
                    vec![x, y]
                }
                Region::Omega => vec![q(2 * a, 64), q(b, 64), q(c, 64)],
                Region::Delta => vec![q(2 * a, 64), q(b, 64)],
            };
            let e = id.eval(&exact).to_f64();
            let f = id.eval_f64(&p[..region.dim()]);
            prop_assert!((e - f).abs() <= 1e-12, "{} {} {}", id, e, f);
        }
    }
}
