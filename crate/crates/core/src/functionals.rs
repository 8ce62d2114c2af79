//! Coefficient functionals of a normalized `f`: inverse and logarithmic
//! coefficients, second-order Hankel determinants, and second-order
//! Hermitian-Toeplitz determinants.

use serde::{Deserialize, Serialize};

use crate::classes::CoefficientVector;
use crate::scalar::Scalar;

/// `(A2, A3, A4, A5)` of `F = f^{-1}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InverseCoeffs<T> {
    pub a2: T,
    pub a3: T,
    pub a4: T,
    pub a5: T,
}

impl<T: Scalar> InverseCoeffs<T> {
    pub fn as_array(&self) -> [T; 4] {
        [self.a2.clone(), self.a3.clone(), self.a4.clone(), self.a5.clone()]
    }

    /// The inverse coefficients viewed as a coefficient vector of `F`.
    pub fn as_coefficients(&self) -> CoefficientVector<T> {
        CoefficientVector::new(self.a2.clone(), self.a3.clone(), self.a4.clone(), self.a5.clone())
    }
}

/// First three logarithmic coefficients, `log(f(z)/z) = 2 sum gamma_n z^n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogCoeffs<T> {
    pub g1: T,
    pub g2: T,
    pub g3: T,
}

impl<T: Scalar> LogCoeffs<T> {
    pub fn as_array(&self) -> [T; 3] {
        [self.g1.clone(), self.g2.clone(), self.g3.clone()]
    }
}

pub fn inverse_coeffs<T: Scalar>(a: &CoefficientVector<T>) -> InverseCoeffs<T> {
    let [a2, a3, a4, a5] = a.as_array();
    let k = |n: i64| T::int(n);
    InverseCoeffs {
        a2: -a2.clone(),
        a3: -a3.clone() + k(2) * a2.powi(2),
        a4: -a4.clone() + k(5) * a2.clone() * a3.clone() - k(5) * a2.powi(3),
        a5: -a5 + k(6) * a2.clone() * a4 - k(21) * a2.powi(2) * a3.clone()
            + k(3) * a3.powi(2)
            + k(14) * a2.powi(4),
    }
}

/// `gamma_1 = a2/2`, `gamma_2 = (a3 - a2^2/2)/2`, `gamma_3 = (a4 - a2 a3 + a2^3/3)/2`.
pub fn log_coeffs<T: Scalar>(a: &CoefficientVector<T>) -> LogCoeffs<T> {
    log_of(&a.a2, &a.a3, &a.a4)
}

/// The same expressions in the inverse coefficients give `Gamma_1..Gamma_3`.
pub fn log_inverse_coeffs<T: Scalar>(inv: &InverseCoeffs<T>) -> LogCoeffs<T> {
    log_of(&inv.a2, &inv.a3, &inv.a4)
}

fn log_of<T: Scalar>(a2: &T, a3: &T, a4: &T) -> LogCoeffs<T> {
    let half = T::ratio(1, 2);
    LogCoeffs {
        g1: a2.clone() * half.clone(),
        g2: (a3.clone() - a2.powi(2) * half.clone()) * half.clone(),
        g3: (a4.clone() - a2.clone() * a3.clone() + a2.powi(3) / T::int(3)) * half,
    }
}

/// `H_{2,2}(f) = a2 a4 - a3^2`.
pub fn hankel_h22<T: Scalar>(a: &CoefficientVector<T>) -> T {
    a.a2.clone() * a.a4.clone() - a.a3.powi(2)
}

/// `H_{2,3}(f) = a3 a5 - a4^2`.
pub fn hankel_h23<T: Scalar>(a: &CoefficientVector<T>) -> T {
    a.a3.clone() * a.a5.clone() - a.a4.powi(2)
}

/// `H_{2,2}(f^{-1}) = a2 a4 - a3^2 - a2^2 (a3 - a2^2)`, identical to `A2 A4 - A3^2`.
pub fn hankel_h22_inverse<T: Scalar>(a: &CoefficientVector<T>) -> T {
    hankel_h22(a) - a.a2.powi(2) * (a.a3.clone() - a.a2.powi(2))
}

/// `a3 a5 - a4^2 - 3 a3^3`: the form of `H_{2,3}(f^{-1})` that the sharp
/// bounds are stated for. It equals the true determinant only when `a2 = 0`.
pub fn hankel_h23_inverse_surrogate<T: Scalar>(a: &CoefficientVector<T>) -> T {
    hankel_h23(a) - T::int(3) * a.a3.powi(3)
}

/// `A3 A5 - A4^2` computed from the inverse coefficients.
pub fn hankel_h23_inverse_true<T: Scalar>(a: &CoefficientVector<T>) -> T {
    hankel_h23(&inverse_coeffs(a).as_coefficients())
}

/// `true - surrogate`, by direct subtraction.
pub fn h23_inverse_residual<T: Scalar>(a: &CoefficientVector<T>) -> T {
    hankel_h23_inverse_true(a) - hankel_h23_inverse_surrogate(a)
}

/// Closed form of the residual:
/// `4 a2 a3 a4 + 2 a2^2 a3^2 - 6 a2^4 a3 - 2 a2^2 a5 + 2 a2^3 a4 + 3 a2^6`.
pub fn h23_inverse_residual_polynomial<T: Scalar>(a: &CoefficientVector<T>) -> T {
    let [a2, a3, a4, a5] = a.as_array();
    let k = |n: i64| T::int(n);
    k(4) * a2.clone() * a3.clone() * a4.clone() + k(2) * a2.powi(2) * a3.powi(2)
        - k(6) * a2.powi(4) * a3
        - k(2) * a2.powi(2) * a5
        + k(2) * a2.powi(3) * a4
        + k(3) * a2.powi(6)
}

/// `H_{2,1}(F_{f^{-1}}/2) = Gamma_1 Gamma_3 - Gamma_2^2`
/// `= (13 a2^4 - 12 a2^2 a3 - 12 a3^2 + 12 a2 a4)/48`.
pub fn hankel_h21_log_inverse<T: Scalar>(a: &CoefficientVector<T>) -> T {
    let [a2, a3, a4, _] = a.as_array();
    let k = |n: i64| T::int(n);
    (k(13) * a2.powi(4) - k(12) * a2.powi(2) * a3.clone() - k(12) * a3.powi(2) + k(12) * a2 * a4) / k(48)
}

/// `gamma_1 gamma_3 - gamma_2^2` of any log-coefficient triple.
pub fn hankel_h21_of<T: Scalar>(g: &LogCoeffs<T>) -> T {
    g.g1.clone() * g.g3.clone() - g.g2.powi(2)
}

/// `T_{2,1}(F_f/gamma) = (-a2^4 + 4 a2^2 + 4 a2^2 Re a3 - 4 |a3|^2)/16` for real `a2`.
pub fn toeplitz_t21_log<T: Scalar>(a2: &T::Real, a3: &T) -> T::Real {
    toeplitz_real_a2::<T>(a2, a3)
}

/// Same expression in `(A2, A3)`: `T_{2,1}(F_{f^{-1}}/Gamma)`.
pub fn toeplitz_t21_log_inverse<T: Scalar>(inv_a2: &T::Real, inv_a3: &T) -> T::Real {
    toeplitz_real_a2::<T>(inv_a2, inv_a3)
}

fn toeplitz_real_a2<T: Scalar>(a2: &T::Real, a3: &T) -> T::Real {
    let k = |n: i64| <T::Real as Scalar>::int(n);
    let a2sq = a2.powi(2);
    (-a2sq.powi(2) + k(4) * a2sq.clone() + k(4) * a2sq * a3.re() - k(4) * a3.norm_sqr()) / k(16)
}

/// `gamma_1^2 - |gamma_2|^2` after rotating `f` so that `a2 >= 0`.
///
/// Rotation-invariant form valid for complex `a2`:
/// `(-|a2|^4 + 4|a2|^2 + 4 Re(conj(a2)^2 a3) - 4|a3|^2)/16`; reduces to
/// [`toeplitz_t21_log`] when `a2` is real.
pub fn toeplitz_t21_log_normalized<T: Scalar>(a: &CoefficientVector<T>) -> T::Real {
    toeplitz_rotated(&a.a2, &a.a3)
}

/// [`toeplitz_t21_log_normalized`] for the inverse coefficients.
pub fn toeplitz_t21_log_inverse_normalized<T: Scalar>(a: &CoefficientVector<T>) -> T::Real {
    let inv = inverse_coeffs(a);
    toeplitz_rotated(&inv.a2, &inv.a3)
}

fn toeplitz_rotated<T: Scalar>(a2: &T, a3: &T) -> T::Real {
    let k = |n: i64| <T::Real as Scalar>::int(n);
    let m = a2.norm_sqr();
    let cross = (a2.conj().powi(2) * a3.clone()).re();
    (-m.powi(2) + k(4) * m + k(4) * cross - k(4) * a3.norm_sqr()) / k(16)
}

/// `(H_{2,2}(f^{-1}) - H_{2,2}(f), H_{2,3}(f^{-1}) - H_{2,3}(f))`
/// `= (-a2^2 (a3 - a2^2), -3 a3^3)`, the second using the surrogate form.
pub fn diff_functionals<T: Scalar>(a: &CoefficientVector<T>) -> (T, T) {
    (
        -(a.a2.powi(2) * (a.a3.clone() - a.a2.powi(2))),
        -(T::int(3) * a.a3.powi(3)),
    )
}

/// Functionals the harness samples, by command-line identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionalId {
    H21LogInverse,
    H22,
    H22Inverse,
    H22Diff,
    H23Inverse,
    H23InverseTrue,
    H23Diff,
    T21Log,
    T21LogInverse,
}

impl FunctionalId {
    pub const ALL: [FunctionalId; 9] = [
        FunctionalId::H21LogInverse,
        FunctionalId::H22,
        FunctionalId::H22Inverse,
        FunctionalId::H22Diff,
        FunctionalId::H23Inverse,
        FunctionalId::H23InverseTrue,
        FunctionalId::H23Diff,
        FunctionalId::T21Log,
        FunctionalId::T21LogInverse,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FunctionalId::H21LogInverse => "h21_log_inverse",
            FunctionalId::H22 => "h22",
            FunctionalId::H22Inverse => "h22_inverse",
            FunctionalId::H22Diff => "h22_diff",
            FunctionalId::H23Inverse => "h23_inverse",
            FunctionalId::H23InverseTrue => "h23_inverse_true",
            FunctionalId::H23Diff => "h23_diff",
            FunctionalId::T21Log => "t21_log",
            FunctionalId::T21LogInverse => "t21_log_inverse",
        }
    }

    /// Toeplitz functionals are real and signed; the rest are bounded in modulus.
    pub fn is_signed(self) -> bool {
        matches!(self, FunctionalId::T21Log | FunctionalId::T21LogInverse)
    }

    /// Value at `a`. Toeplitz values come back as a real embedded in `T`.
    pub fn evaluate<T: Scalar>(self, a: &CoefficientVector<T>) -> T {
        match self {
            FunctionalId::H21LogInverse => hankel_h21_log_inverse(a),
            FunctionalId::H22 => hankel_h22(a),
            FunctionalId::H22Inverse => hankel_h22_inverse(a),
            FunctionalId::H22Diff => diff_functionals(a).0,
            FunctionalId::H23Inverse => hankel_h23_inverse_surrogate(a),
            FunctionalId::H23InverseTrue => hankel_h23_inverse_true(a),
            FunctionalId::H23Diff => diff_functionals(a).1,
            FunctionalId::T21Log => T::from_real(toeplitz_t21_log_normalized(a)),
            FunctionalId::T21LogInverse => T::from_real(toeplitz_t21_log_inverse_normalized(a)),
        }
    }

    /// The quantity the bounds speak about: `|value|`, or the real value for
    /// the signed functionals.
    pub fn measure<T: Scalar>(self, a: &CoefficientVector<T>) -> f64 {
        let v = self.evaluate(a);
        if self.is_signed() {
            crate::scalar::RealScalar::to_f64(&v.re())
        } else {
            v.modulus()
        }
    }
}

impl std::fmt::Display for FunctionalId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for FunctionalId {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> crate::error::Result<Self> {
        FunctionalId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| crate::error::Error::UnknownFunctional(s.to_string()))
    }
}


#[cfg(test)]
mod oracles {
    use super::*;
    use crate::scalar::{q, Rational};
    use crate::series::TruncatedSeries;
    use proptest::prelude::*;

    fn exact_coeffs() -> impl Strategy<Value = CoefficientVector<Rational>> {
        prop::array::uniform4((-30i64..=30, 1i64..=20))
            .prop_map(|a| CoefficientVector::new(q(a[0].0, a[0].1), q(a[1].0, a[1].1), q(a[2].0, a[2].1), q(a[3].0, a[3].1)))
    }

    proptest! {
        #[test]
        fn inverse_matches_series_reversion(a in exact_coeffs()) {
            let reverted = a.to_series(5).revert().unwrap();
            let got = inverse_coeffs(&a).as_array();
            for (n, v) in got.iter().enumerate() {
                prop_assert_eq!(v, &reverted.coeff(n + 2));
            }
        }

        #[test]
        fn log_matches_series_log(a in exact_coeffs()) {
            let l = a.to_series(5).log_normalized().unwrap();
            let g = log_coeffs(&a).as_array();
            for (n, v) in g.iter().enumerate() {
                prop_assert_eq!(v.clone() * q(2, 1), l.coeff(n + 1));
            }
        }

        #[test]
        fn inverse_hankel_identities(a in exact_coeffs()) {
            let inv = inverse_coeffs(&a);
            prop_assert_eq!(
                hankel_h22_inverse(&a),
                inv.a2.clone() * inv.a4.clone() - inv.a3.clone() * inv.a3.clone()
            );
            prop_assert_eq!(h23_inverse_residual(&a), h23_inverse_residual_polynomial(&a));
            prop_assert_eq!(hankel_h21_log_inverse(&a), hankel_h21_of(&log_inverse_coeffs(&inv)));
        }

        #[test]
        fn surrogate_is_exact_when_a2_vanishes(a in exact_coeffs()) {
            let a = CoefficientVector::new(q(0, 1), a.a3, a.a4, a.a5);
            prop_assert_eq!(hankel_h23_inverse_surrogate(&a), hankel_h23_inverse_true(&a));
        }

        #[test]
        fn toeplitz_real_form_is_gamma_difference(a in exact_coeffs()) {
            let g = log_coeffs(&a);
            let direct = g.g1.clone() * g.g1.clone() - g.g2.clone() * g.g2.clone();
            prop_assert_eq!(toeplitz_t21_log::<Rational>(&a.a2, &a.a3), direct);
            let inv = inverse_coeffs(&a);
            let g = log_inverse_coeffs(&inv);
            let direct = g.g1.clone() * g.g1.clone() - g.g2.clone() * g.g2.clone();
            prop_assert_eq!(toeplitz_t21_log_inverse::<Rational>(&inv.a2, &inv.a3), direct);
        }

        #[test]
        fn float_path_agrees_with_exact(a in exact_coeffs()) {
            let f = a.map(crate::scalar::RealScalar::to_f64);
            let exact = crate::scalar::RealScalar::to_f64(&hankel_h23_inverse_true(&a));
            let float = hankel_h23_inverse_true(&f);
            prop_assert!((exact - float).abs() <= 1e-9 * (1.0 + exact.abs()));
        }
    }

    #[test]
    fn series_route_for_extremals() {
        for e in [crate::classes::Extremal::F1, crate::classes::Extremal::F2, crate::classes::Extremal::G1, crate::classes::Extremal::G2] {
            let a = e.coeffs();
            let s: TruncatedSeries<Rational> = a.to_series(5);
            let inv = CoefficientVector::from_series(&s.revert().unwrap()).unwrap();
            assert_eq!(hankel_h23(&inv), hankel_h23_inverse_true(&a));
        }
    }
}
