//! The operations behind the CLI subcommands. Each returns its output as a
//! string (plus an exit code where the code is the contract), so the binary
//! stays a thin argument parser and everything here is testable directly.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::json;

use crate::error::Error;
use crate::heisenberg::{minimal_packing, pi_ab, pi_tilde_ab, PackingParams, Representation};
use crate::json::{representation_to_string, CheckReport};
use crate::mu::{mu_result, MuResult, RepWitness};
use crate::repcheck::{
    engel_flag, is_faithful, is_faithful_via_center, is_homomorphism, rep_kernel, EngelOutcome,
    HomReport,
};
use crate::suite::{run_selftest, SelftestLevel};
use crate::symbolic;

/// Which representation family to construct.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// The packing family `pi_{a,b}` (a nilrepresentation).
    Nil,
    /// The scalar-shifted family `pi~_{a,b}` (needs `n >= 1`).
    Scalar,
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "nil" => Ok(Variant::Nil),
            "scalar" => Ok(Variant::Scalar),
            other => Err(Error::InvalidParameter(format!(
                "unknown variant {other:?} (expected nil or scalar)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructFormat {
    Json,
    Latex,
    Text,
}

impl FromStr for ConstructFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "json" => Ok(ConstructFormat::Json),
            "latex" => Ok(ConstructFormat::Latex),
            "text" => Ok(ConstructFormat::Text),
            other => Err(Error::InvalidParameter(format!(
                "unknown format {other:?} (expected json, latex or text)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MuFormat {
    Text,
    Csv,
}

impl FromStr for MuFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "text" => Ok(MuFormat::Text),
            "csv" => Ok(MuFormat::Csv),
            other => Err(Error::InvalidParameter(format!(
                "unknown format {other:?} (expected text or csv)"
            ))),
        }
    }
}

impl FromStr for SelftestLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "quick" => Ok(SelftestLevel::Quick),
            "full" => Ok(SelftestLevel::Full),
            other => Err(Error::InvalidParameter(format!(
                "unknown level {other:?} (expected quick or full)"
            ))),
        }
    }
}

/// The checks `verify` can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Hom,
    Faithful,
    FaithfulCenter,
    Nil,
    Kernel,
}

impl CheckKind {
    pub const ALL: [CheckKind; 5] = [
        CheckKind::Hom,
        CheckKind::Faithful,
        CheckKind::FaithfulCenter,
        CheckKind::Nil,
        CheckKind::Kernel,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::Hom => "hom",
            CheckKind::Faithful => "faithful",
            CheckKind::FaithfulCenter => "faithful-center",
            CheckKind::Nil => "nil",
            CheckKind::Kernel => "kernel",
        }
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "hom" => Ok(CheckKind::Hom),
            "faithful" => Ok(CheckKind::Faithful),
            "faithful-center" => Ok(CheckKind::FaithfulCenter),
            "nil" => Ok(CheckKind::Nil),
            "kernel" => Ok(CheckKind::Kernel),
            other => Err(Error::InvalidParameter(format!(
                "unknown check {other:?} (expected hom, faithful, faithful-center, nil or kernel)"
            ))),
        }
    }
}

/// Parse a comma-separated check list, e.g. `"hom,nil"`.
pub fn parse_checks(s: &str) -> Result<Vec<CheckKind>, Error> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(CheckKind::from_str)
        .collect()
}

/// Build a family member and serialize it. When `a`, `b` are omitted the
/// minimal packing for the variant is used, so the defaults emit the
/// minimal faithful (nil)representation.
pub fn cmd_construct(
    m: usize,
    n: usize,
    a: Option<usize>,
    b: Option<usize>,
    variant: Variant,
    format: ConstructFormat,
) -> Result<String, Error> {
    if variant == Variant::Scalar && n == 0 {
        return Err(Error::InvalidParameter(
            "variant scalar needs n >= 1 (no A_n to carry the scalar)".into(),
        ));
    }
    let default = match variant {
        Variant::Nil => minimal_packing(n + 1),
        Variant::Scalar => minimal_packing(n),
    };
    let p = PackingParams::new(a.unwrap_or(default.a), b.unwrap_or(default.b))?;
    let rep = match variant {
        Variant::Nil => pi_ab(m, n, p)?,
        Variant::Scalar => pi_tilde_ab(m, n, p)?,
    };
    match format {
        ConstructFormat::Json => Ok(representation_to_string(&rep)),
        ConstructFormat::Text | ConstructFormat::Latex => {
            let pattern = match variant {
                Variant::Nil => symbolic::pi_ab_pattern(m, n, p)?,
                Variant::Scalar => symbolic::pi_tilde_pattern(m, n, p)?,
            };
            Ok(match format {
                ConstructFormat::Text => pattern.render_text(),
                _ => pattern.render_latex(),
            })
        }
    }
}

/// Exit codes for `verify`: 0 all checks pass, 1 some check fails, 2 the
/// input does not parse, 3 a precondition is violated.
pub const VERIFY_OK: i32 = 0;
pub const VERIFY_FAILED: i32 = 1;
pub const VERIFY_PARSE_ERROR: i32 = 2;
pub const VERIFY_PRECONDITION: i32 = 3;

/// Run the requested checks against a representation JSON text. Returns the
/// exit code and a JSON report (valid JSON on every path).
pub fn cmd_verify(input: &str, checks: &[CheckKind]) -> (i32, String) {
    let rep = match crate::json::parse_representation(input) {
        Ok(rep) => rep,
        Err(e) => {
            let report = vec![CheckReport::fail(
                "parse",
                json!({ "error": e.to_string() }),
            )];
            return (
                VERIFY_PARSE_ERROR,
                serde_json::to_string_pretty(&report).expect("report serializes"),
            );
        }
    };
    let mut reports = Vec::new();
    let mut any_failed = false;
    let mut precondition = false;
    for check in checks {
        let report = run_check(&rep, *check, &mut precondition);
        any_failed |= !report.pass;
        reports.push(report);
        if precondition {
            break;
        }
    }
    let code = if precondition {
        VERIFY_PRECONDITION
    } else if any_failed {
        VERIFY_FAILED
    } else {
        VERIFY_OK
    };
    (
        code,
        serde_json::to_string_pretty(&reports).expect("report serializes"),
    )
}

fn run_check(rep: &Representation, check: CheckKind, precondition: &mut bool) -> CheckReport {
    let name = check.name();
    match check {
        CheckKind::Hom => match is_homomorphism(rep) {
            HomReport::Pass => CheckReport::pass(name),
            HomReport::Fail { i, j, residual } => CheckReport::fail(
                name,
                json!({
                    "pair": [i, j],
                    "residual": crate::json::matrix_to_strings(&residual),
                }),
            ),
        },
        CheckKind::Faithful => {
            if is_faithful(rep) {
                CheckReport::pass(name)
            } else {
                CheckReport::fail(name, json!({ "kernel_dim": rep_kernel(rep).dim() }))
            }
        }
        CheckKind::FaithfulCenter => match is_faithful_via_center(rep) {
            Ok(true) => CheckReport::pass(name),
            Ok(false) => {
                CheckReport::fail(name, json!({ "reason": "center images are dependent" }))
            }
            Err(e) => {
                *precondition = true;
                CheckReport::fail(name, json!({ "error": e.to_string() }))
            }
        },
        CheckKind::Nil => match engel_flag(rep) {
            Ok(EngelOutcome::Success { stages, .. }) => {
                let mut r = CheckReport::pass(name);
                r.witness = Some(json!({ "stages": stages }));
                r
            }
            Ok(EngelOutcome::Failure { stage }) => {
                CheckReport::fail(name, json!({ "stage": stage }))
            }
            Err(e) => {
                *precondition = true;
                CheckReport::fail(name, json!({ "error": e.to_string() }))
            }
        },
        CheckKind::Kernel => {
            let kernel = rep_kernel(rep);
            if kernel.is_zero() {
                CheckReport::pass(name)
            } else {
                let basis: Vec<Vec<String>> = kernel
                    .basis()
                    .iter()
                    .map(|v| {
                        v.coords()
                            .iter()
                            .map(crate::linalg::format_rational)
                            .collect()
                    })
                    .collect();
                CheckReport::fail(name, json!({ "dimension": kernel.dim(), "basis": basis }))
            }
        }
    }
}

fn witness_rep_label(w: &RepWitness) -> String {
    match w {
        RepWitness::Packing(p) => format!("{}x{}", p.a, p.b),
        RepWitness::CanonicalPi0 => "pi_0".to_string(),
        RepWitness::Scalar => "1x1".to_string(),
    }
}

fn mu_rows(rows: &[MuResult], format: MuFormat) -> String {
    match format {
        MuFormat::Csv => {
            let mut out =
                String::from("m,n,mu,mu_nil,epsilon_mu,epsilon_mu_nil,nil_witness,rep_witness\n");
            for r in rows {
                let e_mu = r.epsilon_mu.map_or(String::new(), |e| e.to_string());
                let e_nil = r.epsilon_mu_nil.map_or(String::new(), |e| e.to_string());
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}x{},{}",
                    r.m,
                    r.n,
                    r.mu,
                    r.mu_nil,
                    e_mu,
                    e_nil,
                    r.witness_nil_packing.a,
                    r.witness_nil_packing.b,
                    witness_rep_label(&r.witness_rep_packing)
                )
                .expect("string write");
            }
            out
        }
        MuFormat::Text => {
            let header = [
                "m",
                "n",
                "mu",
                "mu_nil",
                "eps_mu",
                "eps_mu_nil",
                "nil_witness",
                "rep_witness",
            ];
            let mut table: Vec<[String; 8]> = Vec::with_capacity(rows.len());
            for r in rows {
                table.push([
                    r.m.to_string(),
                    r.n.to_string(),
                    r.mu.to_string(),
                    r.mu_nil.to_string(),
                    r.epsilon_mu.map_or("-".into(), |e| e.to_string()),
                    r.epsilon_mu_nil.map_or("-".into(), |e| e.to_string()),
                    format!("{}x{}", r.witness_nil_packing.a, r.witness_nil_packing.b),
                    witness_rep_label(&r.witness_rep_packing),
                ]);
            }
            let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
            for row in &table {
                for (w, cell) in widths.iter_mut().zip(row.iter()) {
                    *w = (*w).max(cell.len());
                }
            }
            let mut out = String::new();
            let render = |cells: &[String], widths: &[usize], out: &mut String| {
                let line: Vec<String> = cells
                    .iter()
                    .zip(widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                out.push_str(line.join("  ").trim_end());
                out.push('\n');
            };
            render(
                &header.iter().map(|h| h.to_string()).collect::<Vec<_>>(),
                &widths,
                &mut out,
            );
            for row in &table {
                render(row.as_slice(), &widths, &mut out);
            }
            out
        }
    }
}

/// One row of mu values.
pub fn cmd_mu_single(m: u64, n: u64, format: MuFormat) -> Result<String, Error> {
    Ok(mu_rows(&[mu_result(m, n)?], format))
}

/// The full table over `0 <= m <= m_max`, `0 <= n <= n_max`.
pub fn cmd_mu_table(m_max: u64, n_max: u64, format: MuFormat) -> Result<String, Error> {
    let mut rows = Vec::new();
    for m in 0..=m_max {
        for n in 0..=n_max {
            rows.push(mu_result(m, n)?);
        }
    }
    Ok(mu_rows(&rows, format))
}

/// Run the internal verification suite. Returns the exit code (0 iff every
/// check passed) and a line-per-check report.
pub fn cmd_selftest(level: SelftestLevel, seed: u64) -> (i32, String) {
    let outcomes = run_selftest(level, seed);
    let mut out = format!(
        "selftest level: {}  seed: {seed}\n",
        match level {
            SelftestLevel::Quick => "quick",
            SelftestLevel::Full => "full",
        }
    );
    let mut all_pass = true;
    for o in &outcomes {
        all_pass &= o.pass;
        writeln!(
            out,
            "[{}] {:<24} {} ({:.2?})",
            if o.pass { "PASS" } else { "FAIL" },
            o.name,
            o.detail,
            o.elapsed
        )
        .expect("string write");
    }
    (if all_pass { 0 } else { 1 }, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construct_json_round_trips_through_verify() {
        let text =
            cmd_construct(2, 4, Some(2), Some(3), Variant::Nil, ConstructFormat::Json).unwrap();
        let (code, report) = cmd_verify(&text, &CheckKind::ALL);
        assert_eq!(code, VERIFY_OK, "report: {report}");
        let parsed: serde_json::Value = serde_json::from_str(&report).unwrap();
        assert_eq!(parsed.as_array().unwrap().len(), 5);
    }

    #[test]
    fn construct_defaults_to_minimal_packing() {
        let explicit =
            cmd_construct(2, 4, Some(2), Some(3), Variant::Nil, ConstructFormat::Json).unwrap();
        let defaulted =
            cmd_construct(2, 4, None, None, Variant::Nil, ConstructFormat::Json).unwrap();
        assert_eq!(explicit, defaulted);
    }

    #[test]
    fn construct_rejects_scalar_without_abelian_part() {
        assert!(cmd_construct(1, 0, None, None, Variant::Scalar, ConstructFormat::Text).is_err());
    }

    #[test]
    fn verify_flags_the_scalar_family_as_non_nil() {
        let text = cmd_construct(
            1,
            1,
            Some(1),
            Some(1),
            Variant::Scalar,
            ConstructFormat::Json,
        )
        .unwrap();
        let (code, report) = cmd_verify(&text, &[CheckKind::Nil]);
        assert_eq!(code, VERIFY_FAILED);
        assert!(report.contains("\"stage\""));
        // Everything except nil passes.
        let (code, _) = cmd_verify(
            &text,
            &[
                CheckKind::Hom,
                CheckKind::Faithful,
                CheckKind::FaithfulCenter,
            ],
        );
        assert_eq!(code, VERIFY_OK);
    }

    #[test]
    fn verify_reports_parse_errors_as_json() {
        let (code, report) = cmd_verify("{ truncated", &CheckKind::ALL);
        assert_eq!(code, VERIFY_PARSE_ERROR);
        let parsed: serde_json::Value = serde_json::from_str(&report).unwrap();
        assert_eq!(parsed[0]["check"], "parse");
        assert_eq!(parsed[0]["pass"], false);
    }

    #[test]
    fn verify_precondition_exit_code() {
        // A zero representation of a non-nilpotent algebra: hom passes but
        // the center criterion must refuse.
        let algebra = serde_json::json!({
            "dim": 2,
            "basis": ["e_1", "e_2"],
            "brackets": [ { "i": 0, "j": 1, "coeffs": { "1": "1" } } ]
        });
        let rep = serde_json::json!({
            "algebra": algebra,
            "space_dim": 2,
            "matrices": [
                [["0", "0"], ["0", "0"]],
                [["0", "0"], ["0", "0"]]
            ]
        });
        let (code, report) = cmd_verify(&rep.to_string(), &[CheckKind::FaithfulCenter]);
        assert_eq!(code, VERIFY_PRECONDITION, "report: {report}");
        assert!(report.contains("not nilpotent"));
    }

    #[test]
    fn verify_kernel_witness_lists_basis() {
        let text =
            cmd_construct(2, 4, Some(1), Some(3), Variant::Nil, ConstructFormat::Json).unwrap();
        let (code, report) = cmd_verify(&text, &[CheckKind::Kernel]);
        assert_eq!(code, VERIFY_FAILED);
        let parsed: serde_json::Value = serde_json::from_str(&report).unwrap();
        assert_eq!(parsed[0]["witness"]["dimension"], 2);
    }

    #[test]
    fn mu_single_row_values() {
        let out = cmd_mu_single(2, 4, MuFormat::Csv).unwrap();
        assert!(out.contains("2,4,6,7,2,1,2x3,2x2"), "{out}");
        let out = cmd_mu_single(1, 0, MuFormat::Csv).unwrap();
        assert!(out.contains("1,0,3,3,,,1x1,pi_0"), "{out}");
    }

    #[test]
    fn mu_text_table_is_aligned() {
        let out = cmd_mu_table(1, 1, MuFormat::Text).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[0].contains("mu_nil"));
        assert!(lines[0].contains("rep_witness"));
        // Every row has the same number of columns.
        for line in &lines[1..] {
            assert_eq!(line.split_whitespace().count(), 8);
        }
    }

    #[test]
    fn mu_table_abelian_column() {
        let out = cmd_mu_table(0, 3, MuFormat::Csv).unwrap();
        let nil_column: Vec<&str> = out
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(3).unwrap())
            .collect();
        assert_eq!(nil_column, vec!["2", "3", "4", "4"]);
    }

    #[test]
    fn check_list_parsing() {
        assert_eq!(
            parse_checks("hom, nil").unwrap(),
            vec![CheckKind::Hom, CheckKind::Nil]
        );
        assert!(parse_checks("hom,bogus").is_err());
    }
}
