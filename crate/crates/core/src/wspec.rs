//! Textual Schwarz-function specifications: `z`, `z2`, or up to four
//! comma-separated coefficients `c1,c2,c3,c4`, each a rational, a decimal,
//! or a complex number such as `1/2-1/3i`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{format_exact_complex, parse_rational, q, ExactComplex, Rational};
use crate::schwarz::SchwarzCoeffs;

const MAX_LEN: usize = 4096;

pub const USAGE_EXAMPLE: &str = "expected `z`, `z2`, or coefficients like `1/2,0,-1/4i,0.125`";

#[derive(Clone, Debug, PartialEq)]
pub enum WSpec {
    Z,
    Z2,
    Coeffs(SchwarzCoeffs<ExactComplex>),
}

impl WSpec {
    pub fn coeffs(&self) -> SchwarzCoeffs<ExactComplex> {
        let one = || Complex::new(q(1, 1), q(0, 1));
        let zero = || Complex::new(q(0, 1), q(0, 1));
        match self {
            WSpec::Z => SchwarzCoeffs::new(one(), zero(), zero(), zero()),
            WSpec::Z2 => SchwarzCoeffs::new(zero(), one(), zero(), zero()),
            WSpec::Coeffs(c) => c.clone(),
        }
    }

    /// True when every coefficient is real.
    pub fn is_real(&self) -> bool {
        self.coeffs().as_array().iter().all(|c| c.im.is_zero())
    }
}

impl fmt::Display for WSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WSpec::Z => f.write_str("z"),
            WSpec::Z2 => f.write_str("z2"),
            WSpec::Coeffs(c) => {
                let parts: Vec<String> = c.as_array().iter().map(format_exact_complex).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}

impl FromStr for WSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_w_spec(s)
    }
}

fn bad(text: &str) -> Error {
    let shown: String = text.chars().take(40).collect();
    Error::Parse(format!("invalid w `{shown}`: {USAGE_EXAMPLE}"))
}

/// Parses a complex number `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` with rational
/// or decimal parts.
pub fn parse_exact_complex(text: &str) -> Option<ExactComplex> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let Some(body) = s.strip_suffix('i') else {
        return parse_rational(&s).map(|re| Complex::new(re, q(0, 1)));
    };
    let split = body.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(i, _)| i).last();
    let (re_text, im_text) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re = if re_text.is_empty() { q(0, 1) } else { parse_rational(re_text)? };
    let im: Rational = match im_text {
        "" | "+" => q(1, 1),
        "-" => q(-1, 1),
        t => parse_rational(t)?,
    };
    Some(Complex::new(re, im))
}

pub fn parse_w_spec(text: &str) -> Result<WSpec> {
    if text.len() > MAX_LEN {
        return Err(bad(text));
    }
    let t = text.trim();
    match t {
        "z" => return Ok(WSpec::Z),
        "z2" | "z^2" => return Ok(WSpec::Z2),
        _ => {}
    }
    let parts: Vec<&str> = t.split(',').collect();
    if parts.is_empty() || parts.len() > 4 {
        return Err(bad(text));
    }
    let mut c: Vec<ExactComplex> = Vec::with_capacity(4);
    for p in parts {
        c.push(parse_exact_complex(p).ok_or_else(|| bad(text))?);
    }
    while c.len() < 4 {
        c.push(Complex::new(q(0, 1), q(0, 1)));
    }
    let [c1, c2, c3, c4]: [ExactComplex; 4] = c.try_into().expect("padded to four");
    Ok(WSpec::Coeffs(SchwarzCoeffs::new(c1, c2, c3, c4)))
}
