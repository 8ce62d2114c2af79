//! Coefficients `a2..a5` of members of the two Sakaguchi classes, extracted
//! three ways: closed forms in the Schwarz coefficients, closed forms in the
//! Carathéodory coefficients, and a generic subordination solver.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::schwarz::{CaratheodoryCoeffs, SchwarzCoeffs};
use crate::series::{phi_series, TruncatedSeries, DEFAULT_ORDER};

/// The two instantiated classes: `2zf'/(f(z)-f(-z))` subordinate to `e^z`
/// (`Sse`) or to `sqrt(1+z)` (`Ssl`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassId {
    Sse,
    Ssl,
}

impl ClassId {
    pub const ALL: [ClassId; 2] = [ClassId::Sse, ClassId::Ssl];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassId::Sse => "sse",
            ClassId::Ssl => "ssl",
        }
    }

    /// Conventional notation, for human-facing reports.
    pub fn symbol(self) -> &'static str {
        match self {
            ClassId::Sse => "S*_{S,e}",
            ClassId::Ssl => "S*_{S,L}",
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sse" | "e" => Ok(ClassId::Sse),
            "ssl" | "l" => Ok(ClassId::Ssl),
            _ => Err(Error::UnknownClass(s.to_string())),
        }
    }
}

/// `(a2, a3, a4, a5)` of `f(z) = z + a2 z^2 + a3 z^3 + ...`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoefficientVector<T> {
    pub a2: T,
    pub a3: T,
    pub a4: T,
    pub a5: T,
}

impl<T: Scalar> CoefficientVector<T> {
    pub fn new(a2: T, a3: T, a4: T, a5: T) -> Self {
        CoefficientVector { a2, a3, a4, a5 }
    }

    /// The identity function `f(z) = z`.
    pub fn identity() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    pub fn as_array(&self) -> [T; 4] {
        [self.a2.clone(), self.a3.clone(), self.a4.clone(), self.a5.clone()]
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> CoefficientVector<U> {
        CoefficientVector::new(f(&self.a2), f(&self.a3), f(&self.a4), f(&self.a5))
    }

    pub fn to_series(&self, order: usize) -> TruncatedSeries<T> {
        TruncatedSeries::normalized(&self.as_array(), order)
    }

    pub fn from_series(f: &TruncatedSeries<T>) -> Result<Self> {
        if !f.is_normalized() {
            return Err(Error::NotNormalized);
        }
        if f.order() < 5 {
            return Err(Error::OrderTooSmall { got: f.order(), need: 5 });
        }
        Ok(Self::new(f.coeff(2), f.coeff(3), f.coeff(4), f.coeff(5)))
    }

    /// Coefficients of `e^{-i theta} f(e^{i theta} z)` with `e^{i theta}`
    /// given as a unit `rotation`: `a_n -> a_n rotation^{n-1}`.
    pub fn rotate(&self, rotation: &T) -> Self {
        let r = rotation.clone();
        Self::new(
            self.a2.clone() * r.clone(),
            self.a3.clone() * r.powi(2),
            self.a4.clone() * r.powi(3),
            self.a5.clone() * r.powi(4),
        )
    }
}

/// `a2..a5` in terms of the Schwarz coefficients of `w`.
pub fn coeffs_from_schwarz<T: Scalar>(class: ClassId, c: &SchwarzCoeffs<T>) -> CoefficientVector<T> {
    let [c1, c2, c3, c4] = c.as_array();
    let k = |n: i64| T::int(n);
    match class {
        ClassId::Sse => CoefficientVector::new(
            c1.clone() / k(2),
            (c1.powi(2) + k(2) * c2.clone()) / k(4),
            (k(5) * c1.powi(3) + k(18) * c1.clone() * c2.clone() + k(12) * c3.clone()) / k(48),
            (c1.powi(4)
                + k(6) * c1.powi(2) * c2.clone()
                + k(6) * c2.powi(2)
                + k(6) * c1.clone() * c3
                + k(6) * c4)
                / k(24),
        ),
        ClassId::Ssl => CoefficientVector::new(
            c1.clone() / k(4),
            (-c1.powi(2) + k(4) * c2.clone()) / k(16),
            (c1.powi(3) - k(4) * c1.clone() * c2.clone() + k(16) * c3.clone()) / k(128),
            (-c1.powi(4) + k(4) * c1.powi(2) * c2 - k(8) * c1 * c3 + k(16) * c4) / k(128),
        ),
    }
}

/// `a2..a5` in terms of the Carathéodory coefficients of `p = (1+w)/(1-w)`.
///
/// For `Sse` the `a5` entry is `(p1^4 - 24 p1 p3 + 48 p4)/384`, which is what
/// the subordination solver produces; see [`sse_a5_printed`] for the variant
/// in circulation with a `p1^2 p3` term.
pub fn coeffs_from_caratheodory<T: Scalar>(
    class: ClassId,
    p: &CaratheodoryCoeffs<T>,
) -> CoefficientVector<T> {
    let [p1, p2, p3, p4] = p.as_array();
    let k = |n: i64| T::int(n);
    match class {
        ClassId::Sse => CoefficientVector::new(
            p1.clone() / k(4),
            (-p1.powi(2) + k(4) * p2.clone()) / k(16),
            (-p1.powi(3) - k(12) * p1.clone() * p2 + k(48) * p3.clone()) / k(384),
            (p1.powi(4) - k(24) * p1 * p3 + k(48) * p4) / k(384),
        ),
        ClassId::Ssl => CoefficientVector::new(
            p1.clone() / k(8),
            (-k(5) * p1.powi(2) + k(8) * p2.clone()) / k(64),
            (k(21) * p1.powi(3) - k(72) * p1.clone() * p2.clone() + k(64) * p3.clone()) / k(1024),
            (-k(116) * p1.powi(4) + k(544) * p1.powi(2) * p2.clone() - k(256) * p2.powi(2)
                - k(640) * p1 * p3
                + k(512) * p4)
                / k(8192),
        ),
    }
}

/// The printed `Sse` formula `(p1^4 - 24 p1^2 p3 + 48 p4)/384`. Its `p1^2 p3`
/// term has weight 5 where `a5` is homogeneous of weight 4; kept only so the
/// discrepancy can be reported.
pub fn sse_a5_printed<T: Scalar>(p: &CaratheodoryCoeffs<T>) -> T {
    let [p1, _, p3, p4] = p.as_array();
    (p1.powi(4) - T::int(24) * p1.powi(2) * p3 + T::int(48) * p4) / T::int(384)
}

/// Solves `z f'(z) = phi(w(z)) (f(z) - f(-z)) / 2` for `a2..a5`.
///
/// With `phi(w(z)) = 1 + e1 z + e2 z^2 + e3 z^3 + e4 z^4 + ...`, matching
/// coefficients gives `a2 = e1/2`, `a3 = e2/2`, `a4 = (e3 + e1 e2/2)/4`,
/// `a5 = (e4 + e2^2/2)/4`.
pub fn solve_subordination<T: Scalar>(
    phi: &TruncatedSeries<T>,
    w: &TruncatedSeries<T>,
) -> Result<CoefficientVector<T>> {
    if !phi.coeff(0).is_one() {
        return Err(Error::PhiNotNormalized);
    }
    if !w.coeff(0).is_zero() {
        return Err(Error::NonZeroConstantTerm);
    }
    let order = phi.order().min(w.order());
    if order < 4 {
        return Err(Error::OrderTooSmall { got: order, need: 4 });
    }
    let e = phi.compose(w)?;
    let [e1, e2, e3, e4] = [e.coeff(1), e.coeff(2), e.coeff(3), e.coeff(4)];
    let half = T::ratio(1, 2);
    Ok(CoefficientVector::new(
        e1.clone() * half.clone(),
        e2.clone() * half.clone(),
        (e3 + e1 * e2.clone() * half.clone()) / T::int(4),
        (e4 + e2.powi(2) * half) / T::int(4),
    ))
}

/// Which Schwarz function generates an extremal function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremalWhich {
    /// `w(z) = z^2`: the odd functions `f1` / `g1`.
    OddWZsq,
    /// `w(z) = z`: `f2` / `g2`.
    WZ,
}

impl ExtremalWhich {
    pub fn schwarz<T: Scalar>(self) -> SchwarzCoeffs<T> {
        match self {
            ExtremalWhich::OddWZsq => SchwarzCoeffs::new(T::zero(), T::one(), T::zero(), T::zero()),
            ExtremalWhich::WZ => SchwarzCoeffs::new(T::one(), T::zero(), T::zero(), T::zero()),
        }
    }
}

/// The four named extremal functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Extremal {
    F1,
    F2,
    G1,
    G2,
}

impl Extremal {
    pub fn class(self) -> ClassId {
        match self {
            Extremal::F1 | Extremal::F2 => ClassId::Sse,
            Extremal::G1 | Extremal::G2 => ClassId::Ssl,
        }
    }

    pub fn which(self) -> ExtremalWhich {
        match self {
            Extremal::F1 | Extremal::G1 => ExtremalWhich::OddWZsq,
            Extremal::F2 | Extremal::G2 => ExtremalWhich::WZ,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Extremal::F1 => "f1",
            Extremal::F2 => "f2",
            Extremal::G1 => "g1",
            Extremal::G2 => "g2",
        }
    }

    pub fn coeffs(self) -> CoefficientVector<BigRational> {
        extremal_function(self.class(), self.which())
    }
}

/// `f` with `2zf'/(f(z)-f(-z)) = phi(w(z))` for `w = z^2` or `w = z`, exactly.
pub fn extremal_function(class: ClassId, which: ExtremalWhich) -> CoefficientVector<BigRational> {
    let phi = phi_series::<BigRational>(class, DEFAULT_ORDER);
    let w = which.schwarz::<BigRational>().to_series(DEFAULT_ORDER);
    solve_subordination(&phi, &w).expect("phi and w are well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Rational};

    fn cv(v: [(i64, i64); 4]) -> CoefficientVector<Rational> {
        CoefficientVector::new(q(v[0].0, v[0].1), q(v[1].0, v[1].1), q(v[2].0, v[2].1), q(v[3].0, v[3].1))
    }

    fn sc(v: [i64; 4]) -> SchwarzCoeffs<Rational> {
        SchwarzCoeffs::new(q(v[0], 1), q(v[1], 1), q(v[2], 1), q(v[3], 1))
    }

    #[test]
    fn schwarz_route_extremals() {
        assert_eq!(coeffs_from_schwarz(ClassId::Sse, &sc([0, 1, 0, 0])), cv([(0, 1), (1, 2), (0, 1), (1, 4)]));
        assert_eq!(coeffs_from_schwarz(ClassId::Sse, &sc([1, 0, 0, 0])), cv([(1, 2), (1, 4), (5, 48), (1, 24)]));
        assert_eq!(coeffs_from_schwarz(ClassId::Ssl, &sc([0, 1, 0, 0])), cv([(0, 1), (1, 4), (0, 1), (0, 1)]));
        assert_eq!(
            coeffs_from_schwarz(ClassId::Ssl, &sc([1, 0, 0, 0])),
            cv([(1, 4), (-1, 16), (1, 128), (-1, 128)])
        );
    }

    #[test]
    fn caratheodory_route() {
        let two = CaratheodoryCoeffs::new(q(2, 1), q(2, 1), q(2, 1), q(2, 1));
        assert_eq!(coeffs_from_caratheodory(ClassId::Sse, &two), cv([(1, 2), (1, 4), (5, 48), (1, 24)]));
        assert_eq!(
            coeffs_from_caratheodory(ClassId::Ssl, &two),
            cv([(1, 4), (-1, 16), (1, 128), (-1, 128)])
        );
        let zero = CaratheodoryCoeffs::new(q(0, 1), q(0, 1), q(0, 1), q(0, 1));
        assert_eq!(coeffs_from_caratheodory(ClassId::Ssl, &zero), CoefficientVector::identity());
    }

    #[test]
    fn printed_a5_disagrees_at_the_half_plane_kernel() {
        let two = CaratheodoryCoeffs::new(q(2, 1), q(2, 1), q(2, 1), q(2, 1));
        assert_eq!(sse_a5_printed(&two), q(-5, 24));
        assert_eq!(coeffs_from_caratheodory(ClassId::Sse, &two).a5, q(1, 24));
    }

    #[test]
    fn solver_examples() {
        let id = TruncatedSeries::<Rational>::identity(DEFAULT_ORDER);
        let exp = phi_series::<Rational>(ClassId::Sse, DEFAULT_ORDER);
        assert_eq!(solve_subordination(&exp, &id).unwrap(), cv([(1, 2), (1, 4), (5, 48), (1, 24)]));

        let constant = TruncatedSeries::<Rational>::one(DEFAULT_ORDER);
        let w = sc([3, -1, 2, 5]).to_series(DEFAULT_ORDER);
        assert_eq!(solve_subordination(&constant, &w).unwrap(), CoefficientVector::identity());

        let sqrt = phi_series::<Rational>(ClassId::Ssl, DEFAULT_ORDER);
        let zsq = sc([0, 1, 0, 0]).to_series(DEFAULT_ORDER);
        assert_eq!(solve_subordination(&sqrt, &zsq).unwrap(), cv([(0, 1), (1, 4), (0, 1), (0, 1)]));
    }

    #[test]
    fn solver_rejects_bad_input() {
        let id = TruncatedSeries::<Rational>::identity(DEFAULT_ORDER);
        let exp = phi_series::<Rational>(ClassId::Sse, DEFAULT_ORDER);
        assert_eq!(solve_subordination(&id, &id), Err(Error::PhiNotNormalized));
        assert_eq!(solve_subordination(&exp, &exp), Err(Error::NonZeroConstantTerm));
        let short = TruncatedSeries::<Rational>::identity(3);
        assert!(matches!(solve_subordination(&exp, &short), Err(Error::OrderTooSmall { .. })));
    }

    #[test]
    fn extremal_functions() {
        assert_eq!(extremal_function(ClassId::Sse, ExtremalWhich::OddWZsq), cv([(0, 1), (1, 2), (0, 1), (1, 4)]));
        assert_eq!(extremal_function(ClassId::Ssl, ExtremalWhich::OddWZsq), cv([(0, 1), (1, 4), (0, 1), (0, 1)]));
        assert_eq!(
            extremal_function(ClassId::Ssl, ExtremalWhich::WZ),
            cv([(1, 4), (-1, 16), (1, 128), (-1, 128)])
        );
        assert_eq!(Extremal::F2.coeffs(), cv([(1, 2), (1, 4), (5, 48), (1, 24)]));
    }

    #[test]
    fn class_parsing() {
        assert_eq!("SSE".parse::<ClassId>().unwrap(), ClassId::Sse);
        assert_eq!("ssl".parse::<ClassId>().unwrap(), ClassId::Ssl);
        assert!("ssx".parse::<ClassId>().is_err());
    }
}
