//! Full expansion of one class member: coefficients, inverse and logarithmic
//! coefficients, and every functional, in exact or floating-point arithmetic.

use std::fmt::Write as _;

use num_complex::{Complex, Complex64};
use serde::{Deserialize, Serialize};

use crate::classes::{coeffs_from_schwarz, ClassId, CoefficientVector};
use crate::functionals::{inverse_coeffs, log_coeffs, log_inverse_coeffs, FunctionalId};
use crate::report::OutputFormat;
use crate::scalar::{format_exact_complex, ExactComplex, RealScalar, Scalar};
use crate::schwarz::{validate_schwarz, SchwarzVerdict, FEASIBILITY_TOL};
use crate::series::ScalarMode;
use crate::wspec::WSpec;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expansion {
    pub class: ClassId,
    pub w: String,
    pub mode: String,
    pub rows: Vec<Row>,
}

/// Functionals listed by `expand`, in output order.
pub const EXPANDED_FUNCTIONALS: [FunctionalId; 9] = [
    FunctionalId::H22,
    FunctionalId::H22Inverse,
    FunctionalId::H22Diff,
    FunctionalId::H23Inverse,
    FunctionalId::H23InverseTrue,
    FunctionalId::H23Diff,
    FunctionalId::H21LogInverse,
    FunctionalId::T21Log,
    FunctionalId::T21LogInverse,
];

fn format_c64(z: &Complex64) -> String {
    if z.im == 0.0 {
        format!("{:?}", z.re)
    } else if z.re == 0.0 {
        format!("{:?}i", z.im)
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{:?}{}{:?}i", z.re, sign, z.im.abs())
    }
}

fn rows_for<T: Scalar>(a: &CoefficientVector<T>, fmt: impl Fn(&T) -> String) -> Vec<Row> {
    let mut rows = Vec::new();
    let mut push = |name: String, v: &T| rows.push(Row { name, value: fmt(v) });
    for (n, v) in a.as_array().iter().enumerate() {
        push(format!("a{}", n + 2), v);
    }
    let inv = inverse_coeffs(a);
    for (n, v) in inv.as_array().iter().enumerate() {
        push(format!("A{}", n + 2), v);
    }
    for (n, v) in log_coeffs(a).as_array().iter().enumerate() {
        push(format!("gamma{}", n + 1), v);
    }
    for (n, v) in log_inverse_coeffs(&inv).as_array().iter().enumerate() {
        push(format!("Gamma{}", n + 1), v);
    }
    for f in EXPANDED_FUNCTIONALS {
        push(f.to_string(), &f.evaluate(a));
    }
    rows
}

/// Expands the member of `class` generated by `w`.
pub fn expand(class: ClassId, w: &WSpec, mode: ScalarMode) -> Expansion {
    let c = w.coeffs();
    let rows = match mode {
        ScalarMode::Exact => rows_for(&coeffs_from_schwarz(class, &c), format_exact_complex),
        ScalarMode::Float => {
            let cf = c.map(|z: &ExactComplex| Complex::new(z.re.to_f64(), z.im.to_f64()));
            rows_for(&coeffs_from_schwarz(class, &cf), format_c64)
        }
    };
    Expansion {
        class,
        w: w.to_string(),
        mode: mode.name().to_string(),
        rows,
    }
}

/// Schwarz-coefficient feasibility of `w`, for warning about inputs that
/// cannot come from a self-map of the disk.
pub fn feasibility(w: &WSpec) -> SchwarzVerdict {
    validate_schwarz(&w.coeffs(), FEASIBILITY_TOL)
}

impl Expansion {
    pub fn value(&self, name: &str) -> Option<&str> {
        self.rows.iter().find(|r| r.name == name).map(|r| r.value.as_str())
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut out = serde_json::to_string_pretty(self).expect("expansion serializes");
                out.push('\n');
                out
            }
            OutputFormat::Csv => {
                let mut out = String::from("quantity,value\n");
                for r in &self.rows {
                    let _ = writeln!(out, "{},{}", r.name, r.value);
                }
                out
            }
            OutputFormat::Markdown => {
                let mut out = format!("## {} with w = {} ({})\n\n| quantity | value |\n|---|---|\n", self.class.symbol(), self.w, self.mode);
                for r in &self.rows {
                    let _ = writeln!(out, "| {} | {} |", r.name, r.value);
                }
                out
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wspec::parse_w_spec;

    fn a_row(e: &Expansion) -> Vec<&str> {
        ["a2", "a3", "a4", "a5"].iter().map(|n| e.value(n).unwrap()).collect()
    }

    #[test]
    fn expand_examples() {
        let e = expand(ClassId::Sse, &WSpec::Z, ScalarMode::Exact);
        assert_eq!(a_row(&e), ["1/2", "1/4", "5/48", "1/24"]);
        assert_eq!(e.value("t21_log"), Some("15/256"));
        let e = expand(ClassId::Ssl, &WSpec::Z2, ScalarMode::Exact);
        assert_eq!(a_row(&e), ["0", "1/4", "0", "0"]);
        let e = expand(ClassId::Sse, &parse_w_spec("0,0,0,0").unwrap(), ScalarMode::Exact);
        assert!(e.rows.iter().all(|r| r.value == "0"), "{:?}", e.rows);
    }

    #[test]
    fn float_mode_matches() {
        let e = expand(ClassId::Sse, &WSpec::Z, ScalarMode::Float);
        assert_eq!(a_row(&e), ["0.5", "0.25", format!("{:?}", 5.0 / 48.0).as_str(), format!("{:?}", 1.0 / 24.0).as_str()]);
    }

    #[test]
    fn complex_input_is_exact() {
        let e = expand(ClassId::Sse, &parse_w_spec("i").unwrap(), ScalarMode::Exact);
        assert_eq!(e.value("a2"), Some("1/2i"));
        // Rotating z -> iz leaves the Toeplitz value unchanged.
        assert_eq!(e.value("t21_log"), Some("15/256"));
    }

    #[test]
    fn renderings() {
        let e = expand(ClassId::Ssl, &WSpec::Z, ScalarMode::Exact);
        assert!(e.render(OutputFormat::Csv).starts_with("quantity,value\na2,1/4\n"));
        assert!(e.render(OutputFormat::Markdown).contains("| h22_diff | 1/128 |"));
        let v: serde_json::Value = serde_json::from_str(&e.render(OutputFormat::Json)).unwrap();
        assert_eq!(v["class"], "ssl");
    }

    #[test]
    fn feasibility_flags_bad_inputs() {
        assert!(feasibility(&WSpec::Z).is_valid());
        assert!(!feasibility(&parse_w_spec("1,1").unwrap()).is_valid());
    }
}
