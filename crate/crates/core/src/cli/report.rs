//! Reports for the `invariants`, `bounds` and `check` commands.
//!
//! Integers are rendered as decimal strings and rationals as exact `p/q`
//! strings paired with a six-digit approximation, so reports never lose
//! precision and are byte-identical across runs.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::bounds::{BoundEntry, BoundReport, MultiValuation, TonoFamily, ValuationBundle};
use crate::checks::{all_passed, run_checks, CheckResult};
use crate::config::PointKind;
use crate::fuzz::FuzzSummary;
use crate::rational::{approx_string, exact_string};

use super::file::ValuationFile;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rational {
    pub exact: String,
    pub approx: String,
}

impl From<&BigRational> for Rational {
    fn from(x: &BigRational) -> Self {
        Self {
            exact: exact_string(x),
            approx: approx_string(x),
        }
    }
}

fn ints(values: &[BigInt]) -> Vec<String> {
    values.iter().map(BigInt::to_string).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sections {
    Invariants,
    Bounds,
    Checks,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantSection {
    pub multiplicities: Vec<String>,
    pub beta_bar: Vec<String>,
    pub puiseux: Vec<Rational>,
    pub volume: Rational,
    pub normalized_volume: Rational,
    pub tangent_value: String,
    pub tangent_count: usize,
    pub delta0: i64,
    pub genus: usize,
    pub satellites: Vec<usize>,
}

impl InvariantSection {
    pub fn new(bundle: &ValuationBundle) -> Self {
        let record = &bundle.record;
        let satellites = bundle
            .cfg
            .classify_points()
            .into_iter()
            .enumerate()
            .filter(|(_, k)| *k == PointKind::Satellite)
            .map(|(i, _)| i + 1)
            .collect();
        Self {
            multiplicities: ints(record.multiplicities.values()),
            beta_bar: ints(&record.beta_bar.beta_bar),
            puiseux: record
                .puiseux
                .beta_prime
                .iter()
                .map(Rational::from)
                .collect(),
            volume: (&record.volume).into(),
            normalized_volume: (&record.normalized_volume).into(),
            tangent_value: record.tangent_value.to_string(),
            tangent_count: bundle.cfg.tangent_count(),
            delta0: bundle.delta0,
            genus: record.beta_bar.genus(),
            satellites,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundLine {
    pub name: &'static str,
    pub value: Rational,
    pub source: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

impl BoundLine {
    fn new(name: &'static str, entry: &BoundEntry, note: Option<&'static str>) -> Self {
        Self {
            name,
            value: (&entry.value).into(),
            source: entry.source,
            note,
        }
    }
}

pub const TANGENT_LINE_NOTE: &str = "does not apply to the tangent line";

fn bound_lines(report: &BoundReport) -> Vec<BoundLine> {
    let mut lines = vec![
        BoundLine::new("degree_bound", &report.degree_bound, None),
        BoundLine::new("mu_hat_upper", &report.mu_hat_upper, None),
        BoundLine::new("ratio_bound", &report.ratio_bound, Some(TANGENT_LINE_NOTE)),
        BoundLine::new("multi_ratio_bound", &report.multi_ratio_bound, None),
        BoundLine::new("lambda_bound", &report.lambda_bound, None),
    ];
    if let Some(entry) = &report.combinatorial_lambda_bound {
        lines.push(BoundLine::new("combinatorial_lambda_bound", entry, None));
    }
    lines.push(BoundLine::new("trivial_bound", &report.trivial_bound, None));
    lines
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValuationReport {
    pub name: String,
    pub points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Vec<BoundLine>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckResult>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiSection {
    pub valuations: usize,
    pub aligned_mu: u64,
    pub multi_ratio_bound: i64,
    pub lambda_bound: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TonoSection {
    pub a: i64,
    pub e: i64,
    pub curve_degree: String,
    pub certified_mu_hat: Rational,
    pub mu_hat_upper: String,
    pub curve_ratio: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
    pub valuations: Vec<ValuationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multi: Option<MultiSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tono: Option<TonoSection>,
}

impl Report {
    pub fn build(command: &'static str, file: &ValuationFile, sections: &[Sections]) -> Self {
        let bundles = file.bundles();
        let single = bundles.len() == 1;
        let valuations = bundles
            .iter()
            .enumerate()
            .map(|(i, bundle)| {
                let aligned = if single { file.aligned_mu() } else { None };
                valuation_report(i, bundle, sections, aligned)
            })
            .collect();
        let multi = (!single && sections.contains(&Sections::Bounds)).then(|| {
            let mv =
                MultiValuation::new(bundles, file.aligned_mu()).expect("validated at parse time");
            MultiSection {
                valuations: mv.len(),
                aligned_mu: mv.aligned_mu,
                multi_ratio_bound: mv.multi_ratio_bound(),
                lambda_bound: mv.lambda_lower_bound(),
            }
        });
        Self {
            command,
            generated_at: None,
            valuations,
            multi,
            tono: None,
        }
    }

    pub fn tono(family: &TonoFamily) -> Self {
        let valuation = valuation_report(
            0,
            &family.bundle,
            &[Sections::Invariants, Sections::Bounds],
            None,
        );
        Self {
            command: "family",
            generated_at: None,
            valuations: vec![valuation],
            multi: None,
            tono: Some(TonoSection {
                a: family.a,
                e: family.e,
                curve_degree: family.expected.curve_degree.to_string(),
                certified_mu_hat: (&family.certified_mu_hat).into(),
                mu_hat_upper: family.bundle.mu_hat_upper_bound().to_string(),
                curve_ratio: (&family.curve_ratio).into(),
            }),
        }
    }

    /// True unless some check ran and failed.
    pub fn checks_passed(&self) -> bool {
        self.valuations
            .iter()
            .filter_map(|v| v.checks.as_deref())
            .all(all_passed)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("plain data serializes");
        text.push('\n');
        text
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        if let Some(at) = self.generated_at {
            writeln!(out, "generated at {at} (unix seconds)").unwrap();
        }
        for (i, v) in self.valuations.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            writeln!(out, "== {} ({} points)", v.name, v.points).unwrap();
            if let Some(inv) = &v.invariants {
                write_invariants(&mut out, inv);
            }
            if let Some(bounds) = &v.bounds {
                writeln!(out, "bounds").unwrap();
                for line in bounds {
                    let note = line.note.map(|n| format!("  [{n}]")).unwrap_or_default();
                    writeln!(
                        out,
                        "  {:<26} {}{note}",
                        line.name,
                        rational_cell(&line.value)
                    )
                    .unwrap();
                }
            }
            if let Some(checks) = &v.checks {
                writeln!(out, "checks").unwrap();
                for c in checks {
                    if c.passed {
                        writeln!(out, "  [ok]   {}", c.name).unwrap();
                    } else {
                        writeln!(out, "  [FAIL] {}: {}", c.name, c.detail).unwrap();
                    }
                }
            }
        }
        if let Some(m) = &self.multi {
            writeln!(out, "\n== {} valuations together", m.valuations).unwrap();
            writeln!(out, "  {:<26} {}", "aligned_mu", m.aligned_mu).unwrap();
            writeln!(out, "  {:<26} {}", "multi_ratio_bound", m.multi_ratio_bound).unwrap();
            writeln!(out, "  {:<26} {}", "lambda_bound", m.lambda_bound).unwrap();
        }
        if let Some(t) = &self.tono {
            writeln!(out, "tono curve (a={}, e={})", t.a, t.e).unwrap();
            writeln!(out, "  {:<26} {}", "curve_degree", t.curve_degree).unwrap();
            writeln!(
                out,
                "  {:<26} {}",
                "certified_mu_hat",
                rational_cell(&t.certified_mu_hat)
            )
            .unwrap();
            writeln!(out, "  {:<26} {}", "mu_hat_upper", t.mu_hat_upper).unwrap();
            writeln!(
                out,
                "  {:<26} {}",
                "curve_ratio",
                rational_cell(&t.curve_ratio)
            )
            .unwrap();
        }
        out
    }
}

fn valuation_report(
    index: usize,
    bundle: &ValuationBundle,
    sections: &[Sections],
    aligned_mu: Option<u64>,
) -> ValuationReport {
    ValuationReport {
        name: bundle
            .cfg
            .name()
            .map_or_else(|| format!("valuation {}", index + 1), str::to_string),
        points: bundle.cfg.len(),
        invariants: sections
            .contains(&Sections::Invariants)
            .then(|| InvariantSection::new(bundle)),
        bounds: sections
            .contains(&Sections::Bounds)
            .then(|| bound_lines(&bundle.report(aligned_mu))),
        checks: sections
            .contains(&Sections::Checks)
            .then(|| run_checks(&bundle.cfg)),
    }
}

fn rational_cell(r: &Rational) -> String {
    if r.exact == r.approx {
        r.exact.clone()
    } else {
        format!("{} (~{})", r.exact, r.approx)
    }
}

/// `6 3x7 1x9` for `(6, 3, 3, 3, 3, 3, 3, 3, 1, ...)`.
pub fn run_length(values: &[String]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < values.len() {
        let run = values[i..].iter().take_while(|v| **v == values[i]).count();
        parts.push(if run == 1 {
            values[i].clone()
        } else {
            format!("{}x{run}", values[i])
        });
        i += run;
    }
    parts.join(" ")
}

fn write_invariants(out: &mut String, inv: &InvariantSection) {
    let rationals = |rs: &[Rational]| rs.iter().map(rational_cell).collect::<Vec<_>>().join(", ");
    let satellites = if inv.satellites.is_empty() {
        "none".to_string()
    } else {
        inv.satellites
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    writeln!(out, "invariants").unwrap();
    let rows = [
        ("multiplicities", run_length(&inv.multiplicities)),
        ("beta_bar", inv.beta_bar.join(", ")),
        ("puiseux", rationals(&inv.puiseux)),
        ("volume", rational_cell(&inv.volume)),
        ("normalized_volume", rational_cell(&inv.normalized_volume)),
        ("tangent_value", inv.tangent_value.clone()),
        ("tangent_count", inv.tangent_count.to_string()),
        ("delta0", inv.delta0.to_string()),
        ("genus", inv.genus.to_string()),
        ("satellites", satellites),
    ];
    for (k, v) in rows {
        writeln!(out, "  {k:<26} {v}").unwrap();
    }
}

pub fn fuzz_table(summary: &FuzzSummary) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "fuzz: {} trials, max {} points, seed {}",
        summary.trials, summary.max_points, summary.seed
    )
    .unwrap();
    writeln!(out, "  passed        {}", summary.passed).unwrap();
    writeln!(out, "  failed        {}", summary.failed).unwrap();
    writeln!(
        out,
        "  tail checks   {} ({} findings)",
        summary.tail_checks, summary.tail_findings
    )
    .unwrap();
    if let Some(c) = &summary.first_counterexample {
        writeln!(
            out,
            "first counterexample: trial {}, proximity {:?}, tangent_count {}",
            c.trial, c.proximity, c.tangent_count
        )
        .unwrap();
        for f in &c.failures {
            writeln!(out, "  [FAIL] {}: {}", f.name, f.detail).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::file::parse;

    #[test]
    fn run_length_compresses() {
        let v: Vec<String> = ["6", "3", "3", "1"].iter().map(|s| s.to_string()).collect();
        assert_eq!(run_length(&v), "6 3x2 1");
        assert_eq!(run_length(&[]), "");
    }

    #[test]
    fn tono_invariants() {
        let file = parse(r#"{"valuations":[{"tono":{"a":3,"e":0}}]}"#).unwrap();
        let report = Report::build("invariants", &file, &[Sections::Invariants]);
        let inv = report.valuations[0].invariants.as_ref().unwrap();
        assert_eq!(inv.beta_bar, ["6", "9", "34", "108"]);
        assert_eq!(inv.tangent_value, "9");
        assert_eq!(inv.delta0, 0);
        assert_eq!(inv.satellites, [3, 10, 11]);
    }

    #[test]
    fn tono_bounds() {
        let file = parse(r#"{"valuations":[{"tono":{"a":4,"e":1}}]}"#).unwrap();
        let report = Report::build("bounds", &file, &[Sections::Bounds]);
        let bounds = report.valuations[0].bounds.as_ref().unwrap();
        let get = |name: &str| &bounds.iter().find(|b| b.name == name).unwrap().value.exact;
        assert_eq!(get("mu_hat_upper"), "44");
        assert_eq!(get("lambda_bound"), "-2");
        let ratio = bounds.iter().find(|b| b.name == "ratio_bound").unwrap();
        assert_eq!(ratio.note, Some(TANGENT_LINE_NOTE));
        assert!(report.to_table().contains(TANGENT_LINE_NOTE));
    }

    #[test]
    fn multi_section_only_with_several_valuations() {
        let file = parse(r#"{"valuations":[{"proximity":[[],[1]]},{"proximity":[[]]}]}"#).unwrap();
        let report = Report::build("bounds", &file, &[Sections::Bounds]);
        let multi = report.multi.unwrap();
        assert_eq!(multi.aligned_mu, 2);
        // δ₀ = 0 and -1
        assert_eq!(multi.multi_ratio_bound, -2);
    }

    #[test]
    fn check_report_passes() {
        let file = parse(r#"{"valuations":[{"proximity":[[],[1],[2,1],[3,2]]}]}"#).unwrap();
        let report = Report::build("check", &file, &[Sections::Checks]);
        assert!(report.checks_passed());
        assert!(report.to_table().contains("[ok]   sum_of_squares"));
    }
}
