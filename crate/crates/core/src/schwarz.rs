//! Schwarz functions `w` and Carathéodory functions `p`: coefficient
//! feasibility, the `p = (1+w)/(1-w)` correspondence, the Libera–Zlotkiewicz
//! parametrization, and seeded samplers.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use num_traits::Zero;

use crate::scalar::{RealScalar, Scalar};
use crate::series::TruncatedSeries;

/// Tolerance for feasibility checks on analytically exact constructions.
pub const FEASIBILITY_TOL: f64 = 1e-12;

/// `w(z) = c1 z + c2 z^2 + c3 z^3 + c4 z^4 + ...`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SchwarzCoeffs<T> {
    pub c1: T,
    pub c2: T,
    pub c3: T,
    pub c4: T,
}

/// `p(z) = 1 + p1 z + p2 z^2 + p3 z^3 + p4 z^4 + ...` with `Re p > 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaratheodoryCoeffs<T> {
    pub p1: T,
    pub p2: T,
    pub p3: T,
    pub p4: T,
}

impl<T: Scalar> SchwarzCoeffs<T> {
    pub fn new(c1: T, c2: T, c3: T, c4: T) -> Self {
        SchwarzCoeffs { c1, c2, c3, c4 }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    pub fn as_array(&self) -> [T; 4] {
        [self.c1.clone(), self.c2.clone(), self.c3.clone(), self.c4.clone()]
    }

    /// `w` as a truncated series of the given order (at least 4).
    pub fn to_series(&self, order: usize) -> TruncatedSeries<T> {
        let mut coeffs = vec![T::zero()];
        coeffs.extend(self.as_array());
        TruncatedSeries::new(coeffs, order)
    }

    pub fn from_series(w: &TruncatedSeries<T>) -> Result<Self> {
        if w.order() < 4 {
            return Err(Error::OrderTooSmall { got: w.order(), need: 4 });
        }
        if !w.coeff(0).is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        Ok(Self::new(w.coeff(1), w.coeff(2), w.coeff(3), w.coeff(4)))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> SchwarzCoeffs<U> {
        SchwarzCoeffs::new(f(&self.c1), f(&self.c2), f(&self.c3), f(&self.c4))
    }
}

impl<T: Scalar> CaratheodoryCoeffs<T> {
    pub fn new(p1: T, p2: T, p3: T, p4: T) -> Self {
        CaratheodoryCoeffs { p1, p2, p3, p4 }
    }

    pub fn as_array(&self) -> [T; 4] {
        [self.p1.clone(), self.p2.clone(), self.p3.clone(), self.p4.clone()]
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> CaratheodoryCoeffs<U> {
        CaratheodoryCoeffs::new(f(&self.p1), f(&self.p2), f(&self.p3), f(&self.p4))
    }

    /// `t = 4 - p1^2`.
    pub fn t(&self) -> T {
        T::int(4) - self.p1.clone() * self.p1.clone()
    }
}

/// One of the four coefficient inequalities satisfied by every Schwarz function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SchwarzInequality {
    /// `|c1| <= 1`
    C1,
    /// `|c2| <= 1 - |c1|^2`
    C2,
    /// `|c3| <= 1 - |c1|^2 - |c2|^2 / (1 + |c1|)`
    C3,
    /// `|c4| <= 1 - |c1|^2 - |c2|^2`
    C4,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub inequality: SchwarzInequality,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`; negative for a violation.
    pub slack: f64,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct SchwarzVerdict {
    pub violations: Vec<Violation>,
}

impl SchwarzVerdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The four right-hand sides, as functions of the moduli `x = |c1|, y = |c2|`.
pub fn schwarz_ceilings(x: f64, y: f64) -> [f64; 4] {
    [1.0, 1.0 - x * x, 1.0 - x * x - y * y / (1.0 + x), 1.0 - x * x - y * y]
}

/// Checks the necessary coefficient conditions. These are not sufficient, so
/// a pass does not certify that a Schwarz function with these coefficients
/// exists.
pub fn validate_schwarz<T: Scalar>(c: &SchwarzCoeffs<T>, tol: f64) -> SchwarzVerdict {
    let moduli = [c.c1.modulus(), c.c2.modulus(), c.c3.modulus(), c.c4.modulus()];
    let ceilings = schwarz_ceilings(moduli[0], moduli[1]);
    let kinds = [
        SchwarzInequality::C1,
        SchwarzInequality::C2,
        SchwarzInequality::C3,
        SchwarzInequality::C4,
    ];
    let violations = kinds
        .iter()
        .zip(moduli.iter().zip(ceilings.iter()))
        .filter(|(_, (lhs, rhs))| **lhs > **rhs + tol)
        .map(|(&inequality, (&lhs, &rhs))| Violation {
            inequality,
            lhs,
            rhs,
            slack: rhs - lhs,
        })
        .collect();
    SchwarzVerdict { violations }
}

/// Coefficients of `p = (1 + w) / (1 - w)`.
pub fn caratheodory_from_schwarz<T: Scalar>(c: &SchwarzCoeffs<T>) -> CaratheodoryCoeffs<T> {
    let two = T::int(2);
    let (c1, c2, c3, c4) = (c.c1.clone(), c.c2.clone(), c.c3.clone(), c.c4.clone());
    let p1 = two.clone() * c1.clone();
    let p2 = two.clone() * (c2.clone() + c1.powi(2));
    let p3 = two.clone() * (c3.clone() + T::int(2) * c1.clone() * c2.clone() + c1.powi(3));
    let p4 = two
        * (c4 + T::int(2) * c1.clone() * c3 + c2.powi(2) + T::int(3) * c1.powi(2) * c2 + c1.powi(4));
    CaratheodoryCoeffs::new(p1, p2, p3, p4)
}

/// Coefficients of `w = (p - 1) / (p + 1)`.
pub fn schwarz_from_caratheodory<T: Scalar>(p: &CaratheodoryCoeffs<T>) -> SchwarzCoeffs<T> {
    let (p1, p2, p3, p4) = (p.p1.clone(), p.p2.clone(), p.p3.clone(), p.p4.clone());
    let c1 = p1.clone() / T::int(2);
    let c2 = p2.clone() / T::int(2) - p1.powi(2) / T::int(4);
    let c3 = p3.clone() / T::int(2) - p1.clone() * p2.clone() / T::int(2) + p1.powi(3) / T::int(8);
    let c4 = p4 / T::int(2) - (p2.powi(2) + T::int(2) * p1.clone() * p3) / T::int(4)
        + T::int(3) * p1.powi(2) * p2 / T::int(8)
        - p1.powi(4) / T::int(16);
    SchwarzCoeffs::new(c1, c2, c3, c4)
}

/// Libera–Zlotkiewicz: `p2, p3, p4` from a real `p1 ∈ [0, 2]` and free
/// parameters `xi, eta, gamma` in the closed unit disk.
pub fn libera_expand<T: Scalar>(
    p1: &T::Real,
    xi: &T,
    eta: &T,
    gamma: &T,
) -> Result<CaratheodoryCoeffs<T>> {
    let zero = T::Real::zero();
    let two = T::Real::int(2);
    if *p1 < zero || *p1 > two {
        return Err(out_of_range("p1", p1.to_f64(), "[0, 2]"));
    }
    for (name, v) in [("xi", xi), ("eta", eta), ("gamma", gamma)] {
        if v.norm_sqr().to_f64() > 1.0 + FEASIBILITY_TOL {
            return Err(out_of_range(name, v.modulus(), "closed unit disk"));
        }
    }
    let p = T::from_real(p1.clone());
    let t = T::int(4) - p.powi(2);
    let one_minus_xi2 = T::one() - T::from_real(xi.norm_sqr());
    let one_minus_eta2 = T::one() - T::from_real(eta.norm_sqr());
    let xi = xi.clone();
    let eta = eta.clone();

    let p2 = (p.powi(2) + t.clone() * xi.clone()) / T::int(2);
    let p3 = (p.powi(3) + T::int(2) * p.clone() * t.clone() * xi.clone()
        - p.clone() * t.clone() * xi.powi(2)
        + T::int(2) * t.clone() * one_minus_xi2.clone() * eta.clone())
        / T::int(4);
    let p4 = (p.powi(4)
        + T::int(3) * p.powi(2) * t.clone() * xi.clone()
        + (T::int(4) - T::int(3) * p.powi(2)) * t.clone() * xi.powi(2)
        + p.powi(2) * t.clone() * xi.powi(3)
        + T::int(4) * t.clone() * one_minus_xi2.clone() * one_minus_eta2 * gamma.clone()
        + T::int(4)
            * t
            * one_minus_xi2
            * (p.clone() * eta.clone() - p.clone() * xi.clone() * eta.clone() - xi.conj() * eta.powi(2)))
        / T::int(8);
    Ok(CaratheodoryCoeffs::new(p, p2, p3, p4))
}

fn out_of_range(name: &'static str, value: f64, range: &'static str) -> Error {
    Error::OutOfRange {
        name,
        value: value.to_string(),
        range,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SamplerKind {
    BlaschkeMix,
    HerglotzMix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplerConfig {
    pub kind: SamplerKind,
    /// Maximum number of Möbius factors per atom (0..=4).
    pub degree: u32,
    /// Maximum number of mixed atoms (1..=6).
    pub atoms: u32,
    pub seed: u64,
}

impl SamplerConfig {
    pub fn blaschke(seed: u64) -> Self {
        SamplerConfig {
            kind: SamplerKind::BlaschkeMix,
            degree: 4,
            atoms: 6,
            seed,
        }
    }

    pub fn herglotz(seed: u64) -> Self {
        SamplerConfig {
            kind: SamplerKind::HerglotzMix,
            degree: 0,
            atoms: 6,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.degree > 4 {
            return Err(out_of_range("degree", self.degree as f64, "0..=4"));
        }
        if !(1..=6).contains(&self.atoms) {
            return Err(out_of_range("atoms", self.atoms as f64, "1..=6"));
        }
        Ok(())
    }

    /// Independent generator for one stream index: the output depends only on
    /// `(seed, stream_index)`, never on which thread draws it.
    pub fn rng(&self, stream_index: u64) -> ChaCha8Rng {
        stream_rng(self.seed, stream_index)
    }
}

pub fn stream_rng(seed: u64, stream_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream_index);
    rng
}

/// A sampled Schwarz function: its order-4 coefficients and the series itself.
#[derive(Clone, Debug, PartialEq)]
pub struct SchwarzSample {
    pub coeffs: SchwarzCoeffs<Complex64>,
    pub series: TruncatedSeries<Complex64>,
}

/// Series of the Möbius factor `(alpha + z) / (1 + conj(alpha) z)`.
fn mobius_series(alpha: Complex64, order: usize) -> TruncatedSeries<Complex64> {
    let scale = 1.0 - alpha.norm_sqr();
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(alpha);
    let mut power = Complex64::new(1.0, 0.0);
    for _ in 1..=order {
        coeffs.push(power * scale);
        power *= -alpha.conj();
    }
    TruncatedSeries::new(coeffs, order)
}

/// `e^{i theta} z prod_j (alpha_j + z) / (1 + conj(alpha_j) z)`: a Blaschke
/// product vanishing at the origin.
pub fn blaschke_atom(rotation: f64, zeros: &[Complex64], order: usize) -> TruncatedSeries<Complex64> {
    let mut acc = TruncatedSeries::identity(order).scale(&Complex64::from_polar(1.0, rotation));
    for &alpha in zeros {
        acc = acc.multiply(&mobius_series(alpha, order));
    }
    acc
}

/// Uniform point of the open unit disk, or of the unit circle with
/// probability `boundary_prob`.
pub fn disk_point(rng: &mut impl Rng, boundary_prob: f64) -> Complex64 {
    let angle = rng.random::<f64>() * TAU;
    let radius = if rng.random::<f64>() < boundary_prob {
        1.0
    } else {
        rng.random::<f64>().sqrt()
    };
    Complex64::from_polar(radius, angle)
}

/// Flat Dirichlet weights on `n` atoms.
fn simplex_weights(rng: &mut impl Rng, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![1.0];
    }
    let raw: Vec<f64> = (0..n).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|v| v / total).collect()
}

/// Convex combination of up to `atoms` Blaschke atoms. The disk is convex,
/// so the mixture is again a Schwarz function.
pub fn sample_schwarz(config: &SamplerConfig, stream_index: u64) -> Result<SchwarzSample> {
    config.validate()?;
    if config.kind != SamplerKind::BlaschkeMix {
        return Err(Error::WrongSamplerKind("herglotz_mix"));
    }
    let mut rng = config.rng(stream_index);
    let n_atoms = rng.random_range(1..=config.atoms) as usize;
    let weights = simplex_weights(&mut rng, n_atoms);
    let mut w = TruncatedSeries::zero(4);
    for weight in weights {
        let rotation = rng.random::<f64>() * TAU;
        let degree = rng.random_range(0..=config.degree) as usize;
        let zeros: Vec<Complex64> = (0..degree).map(|_| disk_point(&mut rng, 0.0)).collect();
        let atom = blaschke_atom(rotation, &zeros, 4);
        w = w.add(&atom.scale(&Complex64::new(weight, 0.0)));
    }
    let coeffs = SchwarzCoeffs::from_series(&w)?;
    Ok(SchwarzSample { coeffs, series: w })
}

/// `p(z) = sum_k t_k (1 + x_k z) / (1 - x_k z)` with `|x_k| = 1`; returns
/// `p_n = 2 sum_k t_k x_k^n`.
pub fn herglotz_coeffs(atoms: &[(f64, Complex64)]) -> CaratheodoryCoeffs<Complex64> {
    let mut p = [Complex64::new(0.0, 0.0); 4];
    for &(weight, x) in atoms {
        let mut power = x;
        for slot in p.iter_mut() {
            *slot += 2.0 * weight * power;
            power *= x;
        }
    }
    CaratheodoryCoeffs::new(p[0], p[1], p[2], p[3])
}

pub fn sample_caratheodory(
    config: &SamplerConfig,
    stream_index: u64,
) -> Result<CaratheodoryCoeffs<Complex64>> {
    config.validate()?;
    if config.kind != SamplerKind::HerglotzMix {
        return Err(Error::WrongSamplerKind("blaschke_mix"));
    }
    let mut rng = config.rng(stream_index);
    let n_atoms = rng.random_range(1..=config.atoms) as usize;
    let weights = simplex_weights(&mut rng, n_atoms);
    let atoms: Vec<(f64, Complex64)> = weights
        .into_iter()
        .map(|t| (t, Complex64::from_polar(1.0, rng.random::<f64>() * TAU)))
        .collect();
    Ok(herglotz_coeffs(&atoms))
}

/// Parameters of one Libera–Zlotkiewicz draw.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LiberaDraw {
    pub p1: f64,
    pub xi: Complex64,
    pub eta: Complex64,
    pub gamma: Complex64,
}

impl LiberaDraw {
    pub fn expand(&self) -> CaratheodoryCoeffs<Complex64> {
        libera_expand(&self.p1, &self.xi, &self.eta, &self.gamma)
            .expect("sampled parameters lie in their ranges")
    }
}

/// Real `p1` uniform on `[0, 2]`; each disk parameter lands on the unit
/// circle half the time, where the extremal configurations live.
pub fn sample_libera(seed: u64, stream_index: u64) -> LiberaDraw {
    let mut rng = stream_rng(seed, stream_index);
    let p1 = 2.0 * rng.random::<f64>();
    let xi = disk_point(&mut rng, 0.5);
    let eta = disk_point(&mut rng, 0.5);
    let gamma = disk_point(&mut rng, 0.5);
    LiberaDraw { p1, xi, eta, gamma }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Rational};
    use num_complex::Complex;
    use proptest::prelude::*;

    fn cq(n: i64, d: i64) -> Complex<Rational> {
        Complex::new(q(n, d), q(0, 1))
    }

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn validate_examples() {
        assert!(validate_schwarz(&SchwarzCoeffs::new(1.0, 0.0, 0.0, 0.0), 1e-12).is_valid());
        assert!(validate_schwarz(&SchwarzCoeffs::new(0.5, 0.75, 0.0, 0.0), 0.0).is_valid());
        let verdict = validate_schwarz(&SchwarzCoeffs::new(0.9, 0.5, 0.0, 0.0), 1e-12);
        assert!(!verdict.is_valid());
        let v = &verdict.violations[0];
        assert_eq!(v.inequality, SchwarzInequality::C2);
        assert!((v.rhs - 0.19).abs() < 1e-12);
        assert!((v.slack + 0.31).abs() < 1e-12);
    }

    #[test]
    fn validate_reports_each_violation() {
        let verdict = validate_schwarz(&SchwarzCoeffs::new(1.5, 0.0, 0.0, 0.0), 1e-12);
        let kinds: Vec<_> = verdict.violations.iter().map(|v| v.inequality).collect();
        // |c1| > 1 drives every later ceiling negative.
        assert_eq!(kinds, vec![SchwarzInequality::C1, SchwarzInequality::C2, SchwarzInequality::C3, SchwarzInequality::C4]);
        let verdict = validate_schwarz(&SchwarzCoeffs::new(0.0, 0.0, 2.0, 2.0), 1e-12);
        assert_eq!(verdict.violations.len(), 2);
    }

    #[test]
    fn caratheodory_examples() {
        let zero = SchwarzCoeffs::<Rational>::zero();
        assert_eq!(caratheodory_from_schwarz(&zero).as_array(), [q(0, 1), q(0, 1), q(0, 1), q(0, 1)]);
        let c = SchwarzCoeffs::new(q(1, 1), q(0, 1), q(0, 1), q(0, 1));
        assert_eq!(caratheodory_from_schwarz(&c).as_array(), [q(2, 1), q(2, 1), q(2, 1), q(2, 1)]);
        let p = CaratheodoryCoeffs::new(q(2, 1), q(2, 1), q(2, 1), q(2, 1));
        assert_eq!(schwarz_from_caratheodory(&p), c);
    }

    #[test]
    fn caratheodory_matches_series_division() {
        // (1 + w)/(1 - w) computed in the series ring.
        let c = SchwarzCoeffs::new(q(1, 3), q(-2, 5), q(1, 7), q(3, 11));
        let w = c.to_series(4);
        let one = TruncatedSeries::one(4);
        let p = one.add(&w).multiply(&one.sub(&w).reciprocal_unit().unwrap());
        let got = caratheodory_from_schwarz(&c);
        assert_eq!(got.as_array().to_vec(), p.coeffs()[1..].to_vec());

        // w = (p - 1)/(p + 1) for p = 1 + z + z^2/2 + z^3/4 + z^4/8.
        let pc = CaratheodoryCoeffs::new(q(1, 1), q(1, 2), q(1, 4), q(1, 8));
        let ps = TruncatedSeries::new(vec![q(1, 1), q(1, 1), q(1, 2), q(1, 4), q(1, 8)], 4);
        let num = ps.sub(&one);
        let den = ps.add(&one).scale(&q(1, 2)).reciprocal_unit().unwrap().scale(&q(1, 2));
        let expected = num.multiply(&den);
        let got = schwarz_from_caratheodory(&pc);
        assert_eq!(got.c1, q(1, 2));
        assert_eq!(got.c2, q(0, 1));
        assert_eq!(got.as_array().to_vec(), expected.coeffs()[1..].to_vec());
    }

    #[test]
    fn libera_examples() {
        let any = Complex64::new(0.3, -0.4);
        let p = libera_expand(&2.0, &any, &any, &any).unwrap();
        for v in [p.p2, p.p3, p.p4] {
            assert!(close(v, Complex64::new(2.0, 0.0)));
        }
        let one = cq(1, 1);
        let zero = cq(0, 1);
        let p = libera_expand(&q(0, 1), &one, &zero, &zero).unwrap();
        assert_eq!([p.p2, p.p3, p.p4], [cq(2, 1), cq(0, 1), cq(2, 1)]);
        let p = libera_expand(&q(1, 1), &zero, &zero, &zero).unwrap();
        assert_eq!([p.p2, p.p3, p.p4], [cq(1, 2), cq(1, 4), cq(1, 8)]);
    }

    #[test]
    fn libera_rejects_out_of_range() {
        let z = Complex64::new(0.0, 0.0);
        assert!(libera_expand(&2.5, &z, &z, &z).is_err());
        assert!(libera_expand(&-0.1, &z, &z, &z).is_err());
        assert!(libera_expand(&1.0, &Complex64::new(0.8, 0.8), &z, &z).is_err());
    }

    #[test]
    fn simplest_inner_function() {
        let w = blaschke_atom(0.0, &[], 4);
        let c = SchwarzCoeffs::from_series(&w).unwrap();
        assert!(close(c.c1, Complex64::new(1.0, 0.0)));
        for v in [c.c2, c.c3, c.c4] {
            assert!(close(v, Complex64::new(0.0, 0.0)));
        }
    }

    #[test]
    fn single_mobius_factor() {
        let alpha = std::f64::consts::FRAC_1_SQRT_2;
        let w = blaschke_atom(0.0, &[Complex64::new(alpha, 0.0)], 4);
        let c = SchwarzCoeffs::from_series(&w).unwrap();
        assert!(close(c.c1, Complex64::new(alpha, 0.0)));
        assert!(close(c.c2, Complex64::new(0.5, 0.0)));
        let verdict = validate_schwarz(&c, FEASIBILITY_TOL);
        assert!(verdict.is_valid(), "{verdict:?}");
    }

    #[test]
    fn sampler_is_deterministic() {
        let config = SamplerConfig::blaschke(7);
        assert_eq!(sample_schwarz(&config, 11).unwrap(), sample_schwarz(&config, 11).unwrap());
        assert_ne!(sample_schwarz(&config, 11).unwrap(), sample_schwarz(&config, 12).unwrap());
        let h = SamplerConfig::herglotz(7);
        assert_eq!(sample_caratheodory(&h, 3).unwrap(), sample_caratheodory(&h, 3).unwrap());
        assert_eq!(sample_libera(1, 2), sample_libera(1, 2));
    }

    #[test]
    fn sampler_kind_and_config_checked() {
        assert!(sample_schwarz(&SamplerConfig::herglotz(1), 0).is_err());
        assert!(sample_caratheodory(&SamplerConfig::blaschke(1), 0).is_err());
        let mut bad = SamplerConfig::blaschke(1);
        bad.degree = 5;
        assert!(sample_schwarz(&bad, 0).is_err());
        bad.degree = 2;
        bad.atoms = 0;
        assert!(sample_schwarz(&bad, 0).is_err());
    }

    #[test]
    fn herglotz_examples() {
        let p = herglotz_coeffs(&[(1.0, Complex64::new(1.0, 0.0))]);
        for v in p.as_array() {
            assert!(close(v, Complex64::new(2.0, 0.0)));
        }
        let p = herglotz_coeffs(&[(0.5, Complex64::new(1.0, 0.0)), (0.5, Complex64::new(-1.0, 0.0))]);
        let expected = [0.0, 2.0, 0.0, 2.0];
        for (v, e) in p.as_array().into_iter().zip(expected) {
            assert!(close(v, Complex64::new(e, 0.0)));
        }
    }

    #[test]
    fn sampled_schwarz_reaches_the_boundary() {
        let config = SamplerConfig::blaschke(2024);
        let mut best_c1: f64 = 0.0;
        let mut best_c2_ratio: f64 = 0.0;
        for i in 0..100_000 {
            let c = sample_schwarz(&config, i).unwrap().coeffs;
            let x = c.c1.norm();
            best_c1 = best_c1.max(x);
            if x < 0.9 {
                best_c2_ratio = best_c2_ratio.max(c.c2.norm() / (1.0 - x * x));
            }
        }
        assert!(best_c1 >= 0.95, "sup |c1| = {best_c1}");
        assert!(best_c2_ratio >= 0.95, "sup |c2|/(1-|c1|^2) = {best_c2_ratio}");
    }

    fn exact_schwarz() -> impl Strategy<Value = SchwarzCoeffs<Rational>> {
        prop::array::uniform4((-40i64..=40, 1i64..=30))
            .prop_map(|c| SchwarzCoeffs::new(q(c[0].0, c[0].1), q(c[1].0, c[1].1), q(c[2].0, c[2].1), q(c[3].0, c[3].1)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn round_trip_exact(c in exact_schwarz()) {
            prop_assert_eq!(schwarz_from_caratheodory(&caratheodory_from_schwarz(&c)), c);
        }

        #[test]
        fn sampled_schwarz_is_feasible(seed in any::<u64>(), index in 0u64..1_000_000) {
            let sample = sample_schwarz(&SamplerConfig::blaschke(seed), index).unwrap();
            let verdict = validate_schwarz(&sample.coeffs, FEASIBILITY_TOL);
            prop_assert!(verdict.is_valid(), "{:?}", verdict);
            let p = caratheodory_from_schwarz(&sample.coeffs);
            for v in p.as_array() {
                prop_assert!(v.norm() <= 2.0 + 1e-12);
            }
        }

        #[test]
        fn libera_output_is_feasible(seed in any::<u64>(), index in 0u64..1_000_000) {
            let draw = sample_libera(seed, index);
            let c = schwarz_from_caratheodory(&draw.expand());
            let verdict = validate_schwarz(&c, 1e-12);
            prop_assert!(verdict.is_valid(), "{:?} {:?}", draw, verdict);
        }

        #[test]
        fn herglotz_output_bounded(seed in any::<u64>(), index in 0u64..1_000_000) {
            let p = sample_caratheodory(&SamplerConfig::herglotz(seed), index).unwrap();
            for v in p.as_array() {
                prop_assert!(v.norm() <= 2.0 + 1e-12);
            }
        }
    }
}
