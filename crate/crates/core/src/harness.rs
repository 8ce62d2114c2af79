//! Randomized end-to-end checks of the sharp bounds, exact extremal
//! attainment, and the exploration of the true `H_{2,3}(f^{-1})`.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{coeffs_from_caratheodory, coeffs_from_schwarz, ClassId, CoefficientVector, Extremal};
use crate::error::{Error, Result};
use crate::functionals::{h23_inverse_residual, FunctionalId};
use crate::report::{rational_string, BoundReport, ReportMeta, Status, Value};
use crate::scalar::{format_rational, q, Rational, RealScalar};
use crate::schwarz::{blaschke_atom, sample_libera, sample_schwarz, LiberaDraw, SamplerConfig, SchwarzCoeffs};

pub const VIOLATION_TOL: f64 = 1e-9;
pub const DEFAULT_TRIALS: u64 = 100_000;
pub const DEFAULT_SEED: u64 = 42;

/// Number of deterministic extremal inputs at the head of every stream.
pub const INJECTED_TRIALS: u64 = 3;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    Modulus(#[serde(with = "rational_string")] Rational),
    Interval {
        #[serde(with = "rational_string")]
        lower: Rational,
        #[serde(with = "rational_string")]
        upper: Rational,
    },
}

impl Bound {
    pub fn is_violated(&self, value: f64, tol: f64) -> bool {
        match self {
            Bound::Modulus(b) => value.abs() > b.to_f64() + tol,
            Bound::Interval { lower, upper } => value > upper.to_f64() + tol || value < lower.to_f64() - tol,
        }
    }

    /// `bound - max |value|`, or the smaller distance to either end of an interval.
    pub fn gap(&self, max_abs: f64, max_value: f64, min_value: f64) -> f64 {
        match self {
            Bound::Modulus(b) => b.to_f64() - max_abs,
            Bound::Interval { lower, upper } => (upper.to_f64() - max_value).min(min_value - lower.to_f64()),
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Modulus(b) => write!(f, "|.| <= {}", format_rational(b)),
            Bound::Interval { lower, upper } => write!(f, "[{}, {}]", format_rational(lower), format_rational(upper)),
        }
    }
}

/// The bounded functionals of each class, in theorem order.
pub fn bounded_functionals(class: ClassId) -> Vec<FunctionalId> {
    use FunctionalId::*;
    match class {
        ClassId::Sse => vec![H21LogInverse, H22Inverse, H22Diff, H23Inverse, H23Diff, T21Log, T21LogInverse],
        ClassId::Ssl => vec![H21LogInverse, H22, H22Inverse, H22Diff, H23Inverse, H23Diff, T21Log, T21LogInverse],
    }
}

/// The sharp bound claimed for `functional` on `class`, if any.
pub fn claimed_bound(class: ClassId, functional: FunctionalId) -> Option<Bound> {
    use FunctionalId::*;
    let m = |n, d| Some(Bound::Modulus(q(n, d)));
    let i = |ln, ld, un, ud| Some(Bound::Interval { lower: q(ln, ld), upper: q(un, ud) });
    match (class, functional) {
        (ClassId::Sse, H21LogInverse) => m(1, 16),
        (ClassId::Sse, H22Inverse) => m(1, 4),
        (ClassId::Sse, H22Diff) => m(1, 32),
        (ClassId::Sse, H23Inverse) => m(1, 4),
        (ClassId::Sse, H23Diff) => m(3, 8),
        (ClassId::Sse, T21Log | T21LogInverse) => i(-1, 16, 15, 256),
        (ClassId::Ssl, H21LogInverse) => m(1, 64),
        (ClassId::Ssl, H22 | H22Inverse) => m(1, 16),
        (ClassId::Ssl, H22Diff) => m(1, 128),
        (ClassId::Ssl, H23Inverse) => m(3, 64),
        (ClassId::Ssl, H23Diff) => m(3, 64),
        (ClassId::Ssl, T21Log) => i(-1, 64, 55, 4096),
        (ClassId::Ssl, T21LogInverse) => i(-1, 64, 39, 4096),
        _ => None,
    }
}

fn functional_label(functional: FunctionalId) -> &'static str {
    use FunctionalId::*;
    match functional {
        H21LogInverse => "|H_{2,1}(F_{f^-1}/2)|",
        H22 => "|H_{2,2}(f)|",
        H22Inverse => "|H_{2,2}(f^-1)|",
        H22Diff => "|H_{2,2}(f^-1) - H_{2,2}(f)|",
        H23Inverse => "|H_{2,3}(f^-1)|",
        H23InverseTrue => "|A_3 A_5 - A_4^2|",
        H23Diff => "|H_{2,3}(f^-1) - H_{2,3}(f)|",
        T21Log => "T_{2,1}(F_f/gamma)",
        T21LogInverse => "T_{2,1}(F_{f^-1}/Gamma)",
    }
}

/// Human-readable statement of the bound, used to group report tables.
pub fn theorem_tag(class: ClassId, functional: FunctionalId) -> String {
    match claimed_bound(class, functional) {
        Some(b @ Bound::Modulus(_)) => format!("{}: {} {}", class.symbol(), functional_label(functional), b)
            .replace("|.| ", ""),
        Some(Bound::Interval { lower, upper }) => format!(
            "{}: {} <= {} <= {}",
            class.symbol(),
            format_rational(&lower),
            functional_label(functional),
            format_rational(&upper)
        ),
        None => format!("{}: {}", class.symbol(), functional_label(functional)),
    }
}

/// One sampled (or injected) input.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrialInput {
    Schwarz(SchwarzCoeffs<Complex64>),
    Libera(LiberaDraw),
}

impl TrialInput {
    pub fn coefficients(&self, class: ClassId) -> CoefficientVector<Complex64> {
        match self {
            TrialInput::Schwarz(c) => coeffs_from_schwarz(class, c),
            TrialInput::Libera(d) => coeffs_from_caratheodory(class, &d.expand()),
        }
    }
}

fn real_schwarz(c: [f64; 4]) -> SchwarzCoeffs<Complex64> {
    SchwarzCoeffs::new(
        Complex64::new(c[0], 0.0),
        Complex64::new(c[1], 0.0),
        Complex64::new(c[2], 0.0),
        Complex64::new(c[3], 0.0),
    )
}

/// Input at `index`. Indices 0, 1, 2 are `w = z^2`, `w = z` and the Blaschke
/// factor `z (z + 1/sqrt 2)/(1 + z/sqrt 2)`; signed functionals draw odd
/// indices from the Libera–Zlotkiewicz route.
pub fn trial_input(functional: FunctionalId, index: u64, seed: u64) -> Result<TrialInput> {
    Ok(match index {
        0 => TrialInput::Schwarz(real_schwarz([0.0, 1.0, 0.0, 0.0])),
        1 => TrialInput::Schwarz(real_schwarz([1.0, 0.0, 0.0, 0.0])),
        2 => {
            let w = blaschke_atom(0.0, &[Complex64::new(FRAC_1_SQRT_2, 0.0)], 4);
            TrialInput::Schwarz(SchwarzCoeffs::from_series(&w)?)
        }
        i if functional.is_signed() && i % 2 == 1 => TrialInput::Libera(sample_libera(seed, i)),
        i => TrialInput::Schwarz(sample_schwarz(&SamplerConfig::blaschke(seed), i)?.coeffs),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrialStats {
    pub class: ClassId,
    pub functional: FunctionalId,
    pub seed: u64,
    pub trials: u64,
    pub max_abs: f64,
    pub max_value: f64,
    pub min_value: f64,
    pub argmax_index: u64,
    pub argmax_input: TrialInput,
    pub violations: u64,
    pub bound: Bound,
    pub gap_to_bound: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExploreStats {
    pub stats: TrialStats,
    pub bound_respected: bool,
    pub max_residual: f64,
    pub residual_index: u64,
    pub residual_input: TrialInput,
}

#[derive(Clone, Copy, Debug)]
struct Acc {
    max_abs: (f64, u64),
    max_value: f64,
    min_value: f64,
    violations: u64,
    residual: (f64, u64),
}

impl Acc {
    const EMPTY: Acc = Acc {
        max_abs: (f64::NEG_INFINITY, u64::MAX),
        max_value: f64::NEG_INFINITY,
        min_value: f64::INFINITY,
        violations: 0,
        residual: (f64::NEG_INFINITY, u64::MAX),
    };

    fn merge(self, other: Acc) -> Acc {
        let top = |a: (f64, u64), b: (f64, u64)| if a.0 > b.0 || (a.0 == b.0 && a.1 < b.1) { a } else { b };
        Acc {
            max_abs: top(self.max_abs, other.max_abs),
            max_value: self.max_value.max(other.max_value),
            min_value: self.min_value.min(other.min_value),
            violations: self.violations + other.violations,
            residual: top(self.residual, other.residual),
        }
    }
}

fn campaign(
    class: ClassId,
    functionals: &[FunctionalId],
    bounds: &[Bound],
    n: u64,
    seed: u64,
    track_residual: bool,
) -> Result<Vec<Acc>> {
    let per_index = |i: u64| -> Result<Vec<Acc>> {
        let schwarz = trial_input(FunctionalId::H22, i, seed)?;
        let libera = if i >= INJECTED_TRIALS && i % 2 == 1 && functionals.iter().any(|f| f.is_signed()) {
            Some(trial_input(FunctionalId::T21Log, i, seed)?)
        } else {
            None
        };
        let a_schwarz = schwarz.coefficients(class);
        let a_libera = libera.as_ref().map(|t| t.coefficients(class));
        Ok(functionals
            .iter()
            .zip(bounds)
            .map(|(f, bound)| {
                let a = match (&a_libera, f.is_signed()) {
                    (Some(a), true) => a,
                    _ => &a_schwarz,
                };
                let v = f.measure(a);
                let v = if v.is_nan() { f64::INFINITY } else { v };
                let residual = if track_residual { h23_inverse_residual(a).norm() } else { f64::NEG_INFINITY };
                Acc {
                    max_abs: (v.abs(), i),
                    max_value: v,
                    min_value: v,
                    violations: bound.is_violated(v, VIOLATION_TOL) as u64,
                    residual: (residual, i),
                }
            })
            .collect())
    };
    (0..n)
        .into_par_iter()
        .map(per_index)
        .try_reduce(
            || vec![Acc::EMPTY; functionals.len()],
            |a, b| Ok(a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect()),
        )
}

fn stats_from(class: ClassId, functional: FunctionalId, bound: Bound, acc: &Acc, n: u64, seed: u64) -> Result<TrialStats> {
    Ok(TrialStats {
        class,
        functional,
        seed,
        trials: n,
        max_abs: acc.max_abs.0,
        max_value: acc.max_value,
        min_value: acc.min_value,
        argmax_index: acc.max_abs.1,
        argmax_input: trial_input(functional, acc.max_abs.1, seed)?,
        violations: acc.violations,
        gap_to_bound: bound.gap(acc.max_abs.0, acc.max_value, acc.min_value),
        bound,
    })
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange { name: "trials", value: "0".into(), range: ">= 1" });
    }
    Ok(())
}

/// Samples `n` inputs (stream indices `0..n`) and tabulates `functional`.
/// Deterministic in `seed` for any thread count.
pub fn run_trials(class: ClassId, functional: FunctionalId, n: u64, seed: u64) -> Result<TrialStats> {
    Ok(run_campaign(class, &[functional], n, seed)?.remove(0))
}

/// [`run_trials`] for several functionals sharing the same draws.
pub fn run_campaign(class: ClassId, functionals: &[FunctionalId], n: u64, seed: u64) -> Result<Vec<TrialStats>> {
    check_n(n)?;
    let bounds = functionals
        .iter()
        .map(|&f| claimed_bound(class, f).ok_or_else(|| Error::UnknownFunctional(format!("{f} for {class}"))))
        .collect::<Result<Vec<_>>>()?;
    let accs = campaign(class, functionals, &bounds, n, seed, false)?;
    functionals
        .iter()
        .zip(bounds)
        .zip(&accs)
        .map(|((&f, b), acc)| stats_from(class, f, b, acc, n, seed))
        .collect()
}

/// Samples the true `A3 A5 - A4^2` against the bound stated for the surrogate,
/// recording the largest surrogate residual seen.
pub fn explore_true_h23(class: ClassId, n: u64, seed: u64) -> Result<ExploreStats> {
    check_n(n)?;
    let bound = claimed_bound(class, FunctionalId::H23Inverse).expect("every class bounds H_{2,3}(f^-1)");
    let functional = FunctionalId::H23InverseTrue;
    let acc = campaign(class, &[functional], std::slice::from_ref(&bound), n, seed, true)?.remove(0);
    let stats = stats_from(class, functional, bound, &acc, n, seed)?;
    Ok(ExploreStats {
        bound_respected: stats.violations == 0,
        max_residual: acc.residual.0,
        residual_index: acc.residual.1,
        residual_input: trial_input(functional, acc.residual.1, seed)?,
        stats,
    })
}

/// An exact attainment check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremalCase {
    pub extremal: Extremal,
    pub functional: FunctionalId,
    pub claimed: (i64, i64),
}

pub fn extremal_cases() -> Vec<ExtremalCase> {
    use Extremal::*;
    use FunctionalId::*;
    let c = |extremal, functional, claimed| ExtremalCase { extremal, functional, claimed };
    vec![
        c(F1, H21LogInverse, (1, 16)),
        c(F1, H22Inverse, (1, 4)),
        c(F1, H23Inverse, (1, 4)),
        c(F1, H23Diff, (3, 8)),
        c(F1, T21Log, (-1, 16)),
        c(F1, T21LogInverse, (-1, 16)),
        c(F2, T21Log, (15, 256)),
        c(F2, T21LogInverse, (15, 256)),
        c(G1, H21LogInverse, (1, 64)),
        c(G1, H22, (1, 16)),
        c(G1, H22Inverse, (1, 16)),
        c(G1, H23Inverse, (3, 64)),
        c(G1, H23InverseTrue, (3, 64)),
        c(G1, H23Diff, (3, 64)),
        c(G1, T21Log, (-1, 64)),
        c(G1, T21LogInverse, (-1, 64)),
        c(G2, H22Diff, (1, 128)),
        c(G2, T21Log, (55, 4096)),
        c(G2, T21LogInverse, (39, 4096)),
    ]
}

/// Exact value of the bounded quantity: the real value for signed
/// functionals, the modulus (of a real extremal value) otherwise.
pub fn exact_measure(functional: FunctionalId, a: &CoefficientVector<Rational>) -> Rational {
    let v = functional.evaluate(a);
    if functional.is_signed() {
        v
    } else {
        v.abs()
    }
}

/// Evaluates every attainment case in exact arithmetic; pass iff equal.
pub fn check_extremals() -> Vec<BoundReport> {
    extremal_cases()
        .into_iter()
        .map(|case| {
            let claimed = q(case.claimed.0, case.claimed.1);
            let value = exact_measure(case.functional, &case.extremal.coeffs());
            let gap = (value.clone() - claimed.clone()).abs();
            let class = case.extremal.class();
            BoundReport {
                id: format!("{}/{}", case.extremal.name(), case.functional),
                status: Status::from_pass(value == claimed),
                claimed,
                computed: Value::Exact(value),
                gap: Value::Exact(gap),
                elapsed: None,
                meta: Some(ReportMeta {
                    group: theorem_tag(class, case.functional),
                    class: Some(class),
                    functional: case.functional.to_string(),
                    extremal: Some(case.extremal.name().to_string()),
                }),
            }
        })
        .collect()
}
