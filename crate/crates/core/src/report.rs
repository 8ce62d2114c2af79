//! Report values and their JSON, CSV and Markdown renderings.
//!
//! Rationals are always written as `"p/q"` strings so reports stay exact;
//! floats use the shortest representation that round-trips.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::classes::ClassId;
use crate::error::{Error, Result};
use crate::harness::{ExploreStats, TrialStats};
use crate::scalar::{format_rational, parse_rational, Rational};

/// Serde adapter writing a rational as a `"p/q"` string.
pub mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).ok_or_else(|| de::Error::custom(format!("invalid rational `{text}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Status::Pass
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// A computed quantity: exact when it came from rational arithmetic.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(Rational),
    Float(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => crate::scalar::RealScalar::to_f64(r),
            Value::Float(v) => *v,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => f.write_str(&format_rational(r)),
            Value::Float(v) => write!(f, "{v:?}"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Value::Exact(r) => s.serialize_str(&format_rational(r)),
            Value::Float(v) => s.serialize_f64(*v),
        }
    }
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Number(f64),
        }
        match Raw::deserialize(d)? {
            Raw::Text(t) => parse_rational(&t)
                .map(Value::Exact)
                .ok_or_else(|| de::Error::custom(format!("invalid rational `{t}`"))),
            Raw::Number(v) => Ok(Value::Float(v)),
        }
    }
}

/// Presentation data; not part of the serialized report.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct ReportMeta {
    pub group: String,
    pub class: Option<ClassId>,
    pub functional: String,
    pub extremal: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundReport {
    pub id: String,
    #[serde(with = "rational_string")]
    pub claimed: Rational,
    pub computed: Value,
    pub gap: Value,
    pub status: Status,
    /// Wall-clock seconds; omitted from serialized output so reports are
    /// reproducible byte for byte.
    #[serde(skip)]
    pub elapsed: Option<f64>,
    #[serde(skip)]
    pub meta: Option<ReportMeta>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportSet {
    pub reports: Vec<BoundReport>,
    pub summary: Summary,
}

impl ReportSet {
    pub fn new(reports: Vec<BoundReport>) -> Self {
        let pass = reports.iter().filter(|r| r.status.is_pass()).count();
        let fail = reports.len() - pass;
        ReportSet { reports, summary: Summary { pass, fail } }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Markdown,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "markdown" | "md" => Ok(OutputFormat::Markdown),
            other => Err(Error::Parse(format!("unknown output format `{other}`"))),
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn md_cell(s: &str) -> String {
    s.replace('|', "\\|")
}

pub fn reports_to_json(set: &ReportSet) -> String {
    let mut out = serde_json::to_string_pretty(set).expect("reports serialize");
    out.push('\n');
    out
}

pub fn reports_from_json(text: &str) -> Result<ReportSet> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn reports_to_csv(set: &ReportSet) -> String {
    let mut out = String::from("id,claimed,computed,gap,status\n");
    for r in &set.reports {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            csv_field(&r.id),
            format_rational(&r.claimed),
            r.computed,
            r.gap,
            r.status.as_str()
        );
    }
    out
}

/// One table per theorem group, in order of first appearance.
pub fn reports_to_markdown(set: &ReportSet) -> String {
    let mut groups: Vec<(String, Vec<&BoundReport>)> = Vec::new();
    for r in &set.reports {
        let name = r.meta.as_ref().map(|m| m.group.clone()).unwrap_or_else(|| "Reports".to_string());
        match groups.iter_mut().find(|(g, _)| *g == name) {
            Some((_, rows)) => rows.push(r),
            None => groups.push((name, vec![r])),
        }
    }
    let mut out = String::new();
    for (name, rows) in groups {
        let _ = writeln!(out, "## {}\n", md_cell(&name));
        out.push_str("| id | functional | class | sharp value | computed | gap | extremal function | status |\n");
        out.push_str("|---|---|---|---|---|---|---|---|\n");
        for r in rows {
            let meta = r.meta.clone().unwrap_or_default();
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} | {} |",
                md_cell(&r.id),
                md_cell(&meta.functional),
                meta.class.map(|c| c.symbol()).unwrap_or("-"),
                format_rational(&r.claimed),
                r.computed,
                r.gap,
                meta.extremal.as_deref().unwrap_or("-"),
                r.status.as_str()
            );
        }
        out.push('\n');
    }
    let _ = writeln!(out, "**Summary:** {} pass, {} fail", set.summary.pass, set.summary.fail);
    out
}

pub fn render_reports(set: &ReportSet, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => reports_to_json(set),
        OutputFormat::Csv => reports_to_csv(set),
        OutputFormat::Markdown => reports_to_markdown(set),
    }
}

/// Sampling output: one row per functional, plus optional exploration rows.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StatsSet {
    pub stats: Vec<TrialStats>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub explorations: Vec<ExploreStats>,
}

impl StatsSet {
    pub fn total_violations(&self) -> u64 {
        self.stats.iter().map(|s| s.violations).sum()
    }
}

pub fn stats_to_json(set: &StatsSet) -> String {
    let mut out = serde_json::to_string_pretty(set).expect("stats serialize");
    out.push('\n');
    out
}

pub fn stats_from_json(text: &str) -> Result<StatsSet> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn stats_to_csv(set: &StatsSet) -> String {
    let mut out =
        String::from("class,functional,trials,max_abs,max_value,min_value,argmax_index,violations,bound,gap_to_bound\n");
    let rows = set.stats.iter().chain(set.explorations.iter().map(|e| &e.stats));
    for s in rows {
        let _ = writeln!(
            out,
            "{},{},{},{:?},{:?},{:?},{},{},{},{:?}",
            s.class,
            s.functional,
            s.trials,
            s.max_abs,
            s.max_value,
            s.min_value,
            s.argmax_index,
            s.violations,
            csv_field(&s.bound.to_string()),
            s.gap_to_bound
        );
    }
    out
}

pub fn stats_to_markdown(set: &StatsSet) -> String {
    let mut out = String::from(
        "| class | functional | trials | max abs | max | min | argmax trial | violations | bound | gap to bound |\n",
    );
    out.push_str("|---|---|---|---|---|---|---|---|---|---|\n");
    let rows = set.stats.iter().chain(set.explorations.iter().map(|e| &e.stats));
    for s in rows {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {:?} | {:?} | {:?} | {} | {} | {} | {:?} |",
            s.class.symbol(),
            s.functional,
            s.trials,
            s.max_abs,
            s.max_value,
            s.min_value,
            s.argmax_index,
            s.violations,
            md_cell(&s.bound.to_string()),
            s.gap_to_bound
        );
    }
    for e in &set.explorations {
        let _ = writeln!(
            out,
            "\n{} true H_{{2,3}}(f^-1): max residual {:?} at trial {}; bound {} respected: {}",
            e.stats.class.symbol(),
            e.max_residual,
            e.residual_index,
            e.stats.bound,
            e.bound_respected
        );
    }
    out
}

pub fn render_stats(set: &StatsSet, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => stats_to_json(set),
        OutputFormat::Csv => stats_to_csv(set),
        OutputFormat::Markdown => stats_to_markdown(set),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use proptest::prelude::*;

    fn sample_set() -> ReportSet {
        ReportSet::new(vec![
            BoundReport {
                id: "chi_e".into(),
                claimed: q(1, 16),
                computed: Value::Float(0.0625),
                gap: Value::Float(0.0),
                status: Status::Pass,
                elapsed: Some(0.5),
                meta: None,
            },
            BoundReport {
                id: "g2/t21_log".into(),
                claimed: q(55, 4096),
                computed: Value::Exact(q(55, 4096)),
                gap: Value::Exact(q(0, 1)),
                status: Status::Pass,
                elapsed: None,
                meta: None,
            },
            BoundReport {
                id: "kappa_L".into(),
                claimed: q(55, 4096),
                computed: Value::Float(0.013429752066115703),
                gap: Value::Float(2.0e-6),
                status: Status::Fail,
                elapsed: None,
                meta: None,
            },
        ])
    }

    #[test]
    fn json_schema() {
        let json = reports_to_json(&sample_set());
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["reports"][0]["claimed"], "1/16");
        assert_eq!(v["reports"][1]["computed"], "55/4096");
        assert_eq!(v["reports"][0]["status"], "pass");
        assert_eq!(v["summary"]["pass"], 2);
        assert_eq!(v["summary"]["fail"], 1);
        assert!(v["reports"][0].get("elapsed").is_none());
        let pos: Vec<usize> =
            ["\"id\"", "\"claimed\"", "\"computed\"", "\"gap\"", "\"status\""].iter().map(|k| json.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]), "key order {pos:?}");
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let json = reports_to_json(&sample_set());
        let again = reports_to_json(&reports_from_json(&json).unwrap());
        assert_eq!(json, again);
    }

    #[test]
    fn csv_header() {
        let csv = reports_to_csv(&sample_set());
        assert!(csv.starts_with("id,claimed,computed,gap,status\n"));
        assert!(csv.contains("chi_e,1/16,0.0625,0.0,pass"));
        assert_eq!(csv.lines().count(), 4);
    }

    #[test]
    fn markdown_has_summary() {
        let md = reports_to_markdown(&sample_set());
        assert!(md.contains("| chi_e |"));
        assert!(md.ends_with("**Summary:** 2 pass, 1 fail\n"));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(reports_from_json("{}").is_err());
        assert!(reports_from_json(r#"{"reports":[{"id":"x","claimed":"1/0","computed":1.0,"gap":0.0,"status":"pass"}],"summary":{"pass":1,"fail":0}}"#).is_err());
        assert!(reports_from_json(r#"{"reports":[],"summary":{"pass":0,"fail":0},"extra":1}"#).is_err());
    }

    proptest! {
        #[test]
        fn float_values_round_trip(v in proptest::num::f64::NORMAL | proptest::num::f64::ZERO | proptest::num::f64::SUBNORMAL) {
            let set = ReportSet::new(vec![BoundReport {
                id: "x".into(),
                claimed: q(1, 3),
                computed: Value::Float(v),
                gap: Value::Exact(q(-7, 9)),
                status: Status::Fail,
                elapsed: None,
                meta: None,
            }]);
            let json = reports_to_json(&set);
            let back = reports_from_json(&json).unwrap();
            prop_assert_eq!(&back, &set);
            prop_assert_eq!(reports_to_json(&back), json);
        }
    }
}
