//! Truncated power series `c0 + c1 z + ... + cN z^N`.
//!
//! Series of different truncation orders may be combined; the result keeps
//! the smaller order, since nothing beyond it is known.

use std::fmt;

use num_rational::BigRational;

use crate::classes::ClassId;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Order used when the caller has no reason to pick another: every
/// functional needs `a5` only, the extra terms are headroom for oracles.
pub const DEFAULT_ORDER: usize = 8;

#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncatedSeries<T> {
    /// Builds a series of the given order from leading coefficients; missing
    /// trailing coefficients are zero, surplus ones are dropped.
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![T::one()], order)
    }

    /// The series `z`.
    pub fn identity(order: usize) -> Self {
        Self::new(vec![T::zero(), T::one()], order)
    }

    /// Normalized class member `z + a2 z^2 + a3 z^3 + ...`.
    pub fn normalized(tail: &[T], order: usize) -> Self {
        let mut coeffs = vec![T::zero(), T::one()];
        coeffs.extend_from_slice(tail);
        Self::new(coeffs, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `z^n`, zero past the truncation order.
    pub fn coeff(&self, n: usize) -> T {
        self.coeffs.get(n).cloned().unwrap_or_else(T::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order.min(self.order()))
    }

    pub fn is_normalized(&self) -> bool {
        self.order() >= 1 && self.coeffs[0].is_zero() && self.coeffs[1].is_one()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> TruncatedSeries<U> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| self.coeffs[k].clone() + other.coeffs[k].clone())
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, factor: &T) -> Self {
        self.map(|c| c.clone() * factor.clone())
    }

    /// Cauchy product truncated at the smaller order.
    pub fn multiply(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncatedSeries { coeffs }
    }

    /// `self ∘ inner` by Horner's scheme in the series ring.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::new(vec![self.coeffs[order].clone()], order);
        for k in (0..order).rev() {
            acc = acc.multiply(&inner);
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeffs[k].clone();
        }
        Ok(acc)
    }

    /// Compositional inverse of a normalized series.
    ///
    /// Fixed-point iteration `F <- w - (f(F) - F)`; each pass fixes one more
    /// coefficient, so `order` passes reach the truncation order.
    pub fn revert(&self) -> Result<Self> {
        if !self.is_normalized() {
            return Err(Error::NotNormalized);
        }
        let order = self.order();
        let w = Self::identity(order);
        // f(z) - z: the nonlinear tail.
        let tail = self.sub(&w);
        let mut inverse = w.clone();
        for _ in 0..order {
            inverse = w.sub(&tail.compose(&inverse)?);
        }
        Ok(inverse)
    }

    /// Divides by `z`, dropping the (zero) constant term; order drops by one.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.order() == 0 {
            return Err(Error::NonZeroConstantTerm);
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// `log(f(z)/z)` for a normalized `f`; one order shorter than `f`.
    pub fn log_normalized(&self) -> Result<Self> {
        if !self.is_normalized() {
            return Err(Error::NotNormalized);
        }
        let quotient = self.shift_down()?;
        let order = quotient.order();
        let u = quotient.sub(&Self::one(order));
        log1p_series::<T>(order).compose(&u)
    }

    /// Reciprocal of a series with unit constant term.
    pub fn reciprocal_unit(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::PhiNotNormalized);
        }
        let order = self.order();
        let mut inv = vec![T::zero(); order + 1];
        inv[0] = T::one();
        for n in 1..=order {
            let mut acc = T::zero();
            for k in 1..=n {
                acc = acc + self.coeffs[k].clone() * inv[n - k].clone();
            }
            inv[n] = -acc;
        }
        Ok(TruncatedSeries { coeffs: inv })
    }
}

/// `log(1 + u) = u - u^2/2 + u^3/3 - ...`
pub fn log1p_series<T: Scalar>(order: usize) -> TruncatedSeries<T> {
    let coeffs = (0..=order)
        .map(|k| match k {
            0 => T::zero(),
            _ if k % 2 == 1 => T::ratio(1, k as i64),
            _ => T::ratio(-1, k as i64),
        })
        .collect();
    TruncatedSeries { coeffs }
}

/// `exp(z) = sum z^n / n!`
pub fn exp_series<T: Scalar>(order: usize) -> TruncatedSeries<T> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = T::one();
    for n in 0..=order {
        if n > 0 {
            term = term / T::int(n as i64);
        }
        coeffs.push(term.clone());
    }
    TruncatedSeries { coeffs }
}

/// `sqrt(1 + z) = sum binom(1/2, n) z^n`
pub fn sqrt1p_series<T: Scalar>(order: usize) -> TruncatedSeries<T> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = T::one();
    for n in 0..=order {
        if n > 0 {
            // binom(1/2, n) = binom(1/2, n-1) * (1/2 - (n-1)) / n
            term = term * T::ratio(3 - 2 * n as i64, 2 * n as i64);
        }
        coeffs.push(term.clone());
    }
    TruncatedSeries { coeffs }
}

/// The subordinating function of a class: `e^z` or `sqrt(1+z)`.
pub fn phi_series<T: Scalar>(class: ClassId, order: usize) -> TruncatedSeries<T> {
    match class {
        ClassId::Sse => exp_series(order),
        ClassId::Ssl => sqrt1p_series(order),
    }
}

impl<T: Scalar> fmt::Debug for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries(order {}: {:?})", self.order(), self.coeffs)
    }
}

/// Which scalar field a dynamically typed series carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarMode {
    Exact,
    Float,
}

impl ScalarMode {
    pub fn name(self) -> &'static str {
        match self {
            ScalarMode::Exact => "exact",
            ScalarMode::Float => "float",
        }
    }
}

impl std::str::FromStr for ScalarMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(ScalarMode::Exact),
            "float" => Ok(ScalarMode::Float),
            other => Err(Error::Parse(format!("unknown mode `{other}`"))),
        }
    }
}

/// A series whose scalar field is chosen at run time. Mixing modes is a
/// usage error rather than a silent conversion.
#[derive(Clone, Debug, PartialEq)]
pub enum AnySeries {
    Exact(TruncatedSeries<BigRational>),
    Float(TruncatedSeries<f64>),
}

impl AnySeries {
    pub fn mode(&self) -> ScalarMode {
        match self {
            AnySeries::Exact(_) => ScalarMode::Exact,
            AnySeries::Float(_) => ScalarMode::Float,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            AnySeries::Exact(s) => s.order(),
            AnySeries::Float(s) => s.order(),
        }
    }

    fn mismatch(&self, other: &Self) -> Error {
        Error::ScalarModeMismatch {
            left: self.mode().name(),
            right: other.mode().name(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (AnySeries::Exact(a), AnySeries::Exact(b)) => Ok(AnySeries::Exact(a.multiply(b))),
            (AnySeries::Float(a), AnySeries::Float(b)) => Ok(AnySeries::Float(a.multiply(b))),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn compose(&self, inner: &Self) -> Result<Self> {
        match (self, inner) {
            (AnySeries::Exact(a), AnySeries::Exact(b)) => a.compose(b).map(AnySeries::Exact),
            (AnySeries::Float(a), AnySeries::Float(b)) => a.compose(b).map(AnySeries::Float),
            _ => Err(self.mismatch(inner)),
        }
    }

    pub fn revert(&self) -> Result<Self> {
        match self {
            AnySeries::Exact(a) => a.revert().map(AnySeries::Exact),
            AnySeries::Float(a) => a.revert().map(AnySeries::Float),
        }
    }

    pub fn log_normalized(&self) -> Result<Self> {
        match self {
            AnySeries::Exact(a) => a.log_normalized().map(AnySeries::Exact),
            AnySeries::Float(a) => a.log_normalized().map(AnySeries::Float),
        }
    }
}
