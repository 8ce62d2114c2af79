//! Field abstraction shared by the exact (rational) and floating-point paths.
//!
//! Every formula in the crate is written once against [`Scalar`] and then
//! evaluated either over `BigRational` (identity and oracle checks, where the
//! answer must be exactly right) or over `f64` / `Complex64` (sampling and
//! optimization).

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;
pub type ExactComplex = Complex<BigRational>;

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    type Real: RealScalar;

    /// `num / den`; panics on `den == 0`.
    fn ratio(num: i64, den: i64) -> Self;
    fn from_real(r: Self::Real) -> Self;
    fn re(&self) -> Self::Real;
    fn im(&self) -> Self::Real;
    fn conj(&self) -> Self;
    /// `|self|^2`, exact for rational inputs.
    fn norm_sqr(&self) -> Self::Real;
    fn modulus(&self) -> f64;

    fn int(n: i64) -> Self {
        Self::ratio(n, 1)
    }

    fn powi(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }
}

pub trait RealScalar: Scalar<Real = Self> + PartialOrd + Num {
    fn to_f64(&self) -> f64;
    fn abs(&self) -> Self;
}

impl Scalar for f64 {
    type Real = f64;

    fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }
    fn from_real(r: f64) -> Self {
        r
    }
    fn re(&self) -> f64 {
        *self
    }
    fn im(&self) -> f64 {
        0.0
    }
    fn conj(&self) -> Self {
        *self
    }
    fn norm_sqr(&self) -> f64 {
        self * self
    }
    fn modulus(&self) -> f64 {
        f64::abs(*self)
    }
}

impl RealScalar for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
}

impl Scalar for BigRational {
    type Real = BigRational;

    fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn from_real(r: Self) -> Self {
        r
    }
    fn re(&self) -> Self {
        self.clone()
    }
    fn im(&self) -> Self {
        Self::zero()
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn norm_sqr(&self) -> Self {
        self * self
    }
    fn modulus(&self) -> f64 {
        RealScalar::to_f64(self).abs()
    }
}

impl RealScalar for BigRational {
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
}

impl<R> Scalar for Complex<R>
where
    R: RealScalar,
{
    type Real = R;

    fn ratio(num: i64, den: i64) -> Self {
        Complex::new(R::ratio(num, den), R::zero())
    }
    fn from_real(r: R) -> Self {
        Complex::new(r, R::zero())
    }
    fn re(&self) -> R {
        self.re.clone()
    }
    fn im(&self) -> R {
        self.im.clone()
    }
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
    fn norm_sqr(&self) -> R {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }
    fn modulus(&self) -> f64 {
        self.re.to_f64().hypot(self.im.to_f64())
    }
}

/// Shorthand for an exact rational `num / den`.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::ratio(num, den)
}

pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Parses `p`, `p/q`, or a finite decimal such as `-0.0125` into an exact
/// rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let s = text.trim();
    if s.is_empty() || s.len() > 256 {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = parse_integer(n)?;
        let d: BigInt = parse_integer(d)?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    let (neg, body) = match s.as_bytes()[0] {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mantissa: BigInt = digits.parse().ok()?;
    let scale = num_traits::pow(BigInt::from(10u8), frac_part.len());
    let value = BigRational::new(mantissa, scale);
    Some(if neg { -value } else { value })
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let s = s.trim();
    let body = s.strip_prefix(['-', '+']).unwrap_or(s);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Canonical `p/q` rendering (`p` alone when the denominator is 1).
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn format_exact_complex(z: &ExactComplex) -> String {
    if z.im.is_zero() {
        return format_rational(&z.re);
    }
    let im_abs = Signed::abs(&z.im);
    let im_text = if im_abs.is_one() {
        String::new()
    } else {
        format_rational(&im_abs)
    };
    if z.re.is_zero() {
        let sign = if z.im.is_negative() { "-" } else { "" };
        return format!("{sign}{im_text}i");
    }
    let sign = if z.im.is_negative() { '-' } else { '+' };
    format!("{}{sign}{im_text}i", format_rational(&z.re))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("1/16"), Some(q(1, 16)));
        assert_eq!(parse_rational("-3/6"), Some(q(-1, 2)));
        assert_eq!(parse_rational("0.0122"), Some(q(61, 5000)));
        assert_eq!(parse_rational("-.5"), Some(q(-1, 2)));
        assert_eq!(parse_rational("7"), Some(q(7, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("."), None);
        assert_eq!(parse_rational("1e5"), None);
        assert_eq!(parse_rational("--1"), None);
        assert_eq!(parse_rational(""), None);
    }

    #[test]
    fn rational_formatting_round_trips() {
        for r in [q(1, 16), q(-55, 4096), q(3, 1), q(0, 1)] {
            assert_eq!(parse_rational(&format_rational(&r)), Some(r));
        }
    }

    #[test]
    fn complex_formatting() {
        assert_eq!(format_exact_complex(&Complex::new(q(1, 2), q(0, 1))), "1/2");
        assert_eq!(format_exact_complex(&Complex::new(q(1, 2), q(-1, 3))), "1/2-1/3i");
        assert_eq!(format_exact_complex(&Complex::new(q(0, 1), q(1, 1))), "i");
        assert_eq!(format_exact_complex(&Complex::new(q(0, 1), q(-2, 1))), "-2i");
    }

    #[test]
    fn exact_complex_norm() {
        let z = Complex::new(q(3, 5), q(-4, 5));
        assert_eq!(z.norm_sqr(), q(1, 1));
        assert_eq!(Scalar::conj(&z), Complex::new(q(3, 5), q(4, 5)));
    }
}
