//! Serializable reports tying the pipeline together, shared by the
//! command-line tool and the test suites.
//!
//! Reports are plain data: every matrix is a grid of exact value strings,
//! every polynomial both a display string and a term list, so the JSON form
//! round-trips and is bit-identical across runs. `schemaVersion` stamps the
//! layout; inputs are identified by their SHA-256.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::canonical::{
    generic_form, permutations_to_block_form, reduce_numeric, triple_from_pair, CanonicalTriple,
};
use crate::field::{Field, FieldError, Rationals};
use crate::graph::{BipartiteGraph, GenericRanks, Matchbox, MatchboxKind};
use crate::oracle::{
    brute_force_min_v, enumerate_largest_matchboxes, verify_reduction, OracleError,
    VerificationReport, VerifyOptions,
};
use crate::pattern::{Assignment, Pattern, PatternError};
use crate::poly::{generic_polynomial, minor_polynomial, PolyTerm};

/// Version stamp carried by every JSON report.
pub const SCHEMA_VERSION: u32 = 1;

pub fn tool_version() -> String {
    env!("CARGO_PKG_VERSION").to_owned()
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for byte in digest {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// The chosen largest-left / largest-right pair, as 1-based edge indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PairReport {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub merged: Vec<usize>,
    pub common_vertices: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MinorsReport {
    pub left: String,
    pub right: String,
    pub merged: String,
}

/// Full pipeline output for one pattern: ranks, pair, triple, generic
/// member, permutations to block form, minors, and f.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub input_sha256: String,
    pub rows: usize,
    pub a_cols: usize,
    pub b_cols: usize,
    pub unknowns: usize,
    pub pattern: Vec<String>,
    pub generic_ranks: GenericRanks,
    pub pair: PairReport,
    pub triple: CanonicalTriple,
    pub generic_member: Vec<Vec<String>>,
    /// new position -> old index, 1-based, applied to the generic member
    pub row_order: Vec<usize>,
    pub a_col_order: Vec<usize>,
    pub b_col_order: Vec<usize>,
    pub block_form: Vec<Vec<String>>,
    pub minors: MinorsReport,
    pub f: String,
    pub f_terms: Vec<PolyTerm>,
}

fn edge_list(mb: &Matchbox) -> Vec<usize> {
    mb.edges().iter().copied().collect()
}

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|&i| i + 1).collect()
}

fn edge_set_text(edges: &[usize]) -> String {
    let inner: Vec<String> = edges.iter().map(|e| format!("x{e}")).collect();
    format!("{{{}}}", inner.join(", "))
}

fn index_list_text(indices: &[usize]) -> String {
    let inner: Vec<String> = indices.iter().map(|i| i.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

/// Pad each column and insert the strip separator, if any; deterministic
/// layout.
fn grid_lines(grid: &[Vec<String>], split: Option<usize>) -> Vec<String> {
    if grid.is_empty() {
        return vec!["  (no rows)".to_owned()];
    }
    let cols = grid[0].len();
    let mut widths = vec![0usize; cols];
    for row in grid {
        for (j, cell) in row.iter().enumerate() {
            widths[j] = widths[j].max(cell.len());
        }
    }
    grid.iter()
        .map(|row| {
            let mut parts: Vec<String> = Vec::with_capacity(cols + 1);
            for (j, cell) in row.iter().enumerate() {
                if split == Some(j) {
                    parts.push("|".to_owned());
                }
                parts.push(format!("{cell:>width$}", width = widths[j]));
            }
            if split == Some(cols) {
                parts.push("|".to_owned());
            }
            format!("  {}", parts.join(" "))
        })
        .collect()
}

fn triple_text(t: CanonicalTriple) -> String {
    format!("(r, s, t) = ({}, {}, {})", t.r, t.s, t.t)
}

/// Run the whole pipeline on a pattern file's text.
pub fn analyze(text: &str) -> Result<AnalysisReport, ReportError> {
    let pattern = Pattern::parse(text)?;
    let graph = BipartiteGraph::build(&pattern);
    let ranks = graph.generic_ranks();
    let (a, b) = graph.optimal_pair();
    let merged = graph.merge(&a, &b).expect("pair comes from this graph");
    let triple = triple_from_pair(&graph, &a, &b);
    let mgen = generic_form(&Rationals, &pattern, &a, &b)?;
    let perms = permutations_to_block_form(&pattern, &a, &b);
    let block = perms.apply(&mgen);
    let f = generic_polynomial(&pattern, &a, &b).expect("pair comes from this graph");
    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        tool_version: tool_version(),
        input_sha256: sha256_hex(text.as_bytes()),
        rows: pattern.rows(),
        a_cols: pattern.a_cols(),
        b_cols: pattern.b_cols(),
        unknowns: pattern.unknowns(),
        pattern: pattern.render().lines().map(str::to_owned).collect(),
        generic_ranks: ranks,
        pair: PairReport {
            left: edge_list(&a),
            right: edge_list(&b),
            merged: edge_list(&merged),
            common_vertices: graph.common_vertex_count(&a, &b),
        },
        triple,
        generic_member: mgen.render_rows(),
        row_order: one_based(&perms.rows),
        a_col_order: one_based(&perms.a_cols),
        b_col_order: one_based(&perms.b_cols),
        block_form: block.render_rows(),
        minors: MinorsReport {
            left: minor_polynomial(&pattern, &a).to_string(),
            right: minor_polynomial(&pattern, &b).to_string(),
            merged: minor_polynomial(&pattern, &merged).to_string(),
        },
        f: f.to_string(),
        f_terms: f.terms_descending(),
    })
}

impl AnalysisReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for line in &self.pattern {
            out.push_str(line);
            out.push('\n');
        }
        out.push_str(&format!(
            "generic ranks: rank A = {}, rank B = {}, rank M = {}\n",
            self.generic_ranks.rank_a, self.generic_ranks.rank_b, self.generic_ranks.rank_m
        ));
        out.push_str(&format!(
            "pair: left {}, right {}\n",
            edge_set_text(&self.pair.left),
            edge_set_text(&self.pair.right)
        ));
        out.push_str(&format!("common vertices: v = {}\n", self.pair.common_vertices));
        out.push_str(&format!("merge: {}\n", edge_set_text(&self.pair.merged)));
        out.push_str(&format!("canonical triple: {}\n", triple_text(self.triple)));
        out.push_str("generic member (pair union set to 1):\n");
        for line in grid_lines(&self.generic_member, Some(self.a_cols)) {
            out.push_str(&line);
            out.push('\n');
        }
        out.push_str(&format!(
            "block permutations (1-based): rows {}, A columns {}, B columns {}\n",
            index_list_text(&self.row_order),
            index_list_text(&self.a_col_order),
            index_list_text(&self.b_col_order)
        ));
        out.push_str("canonical form:\n");
        for line in grid_lines(&self.block_form, Some(self.a_cols)) {
            out.push_str(&line);
            out.push('\n');
        }
        out.push_str(&format!("minor of the left matchbox: {}\n", self.minors.left));
        out.push_str(&format!("minor of the right matchbox: {}\n", self.minors.right));
        out.push_str(&format!("minor of the merge: {}\n", self.minors.merged));
        out.push_str(&format!("f = {}\n", self.f));
        out.push_str(&format!("input sha256: {}\n", self.input_sha256));
        out.push_str(&format!("tool version: {}\n", self.tool_version));
        out
    }
}

/// One member of the family checked against the generic prediction, with
/// the reduction certificate spelled out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub input_sha256: String,
    pub rows: usize,
    pub a_cols: usize,
    pub b_cols: usize,
    pub unknowns: usize,
    pub field: String,
    pub assignment: Vec<String>,
    pub f: String,
    pub f_value: String,
    pub f_nonzero: bool,
    pub expected_triple: CanonicalTriple,
    pub triple: CanonicalTriple,
    pub triple_matches: bool,
    pub rank_a: usize,
    pub rank_b: usize,
    pub rank_m: usize,
    pub certificate_sound: bool,
    pub s: Vec<Vec<String>>,
    pub r1: Vec<Vec<String>>,
    pub r2: Vec<Vec<String>>,
    pub canonical: Vec<Vec<String>>,
    /// certificate sound, and the triple matches whenever f(a) != 0
    pub ok: bool,
}

/// Evaluate f at one assignment and reduce that member exactly.
pub fn check<F: Field>(
    text: &str,
    field: &F,
    values: &[BigRational],
) -> Result<CheckReport, ReportError> {
    let pattern = Pattern::parse(text)?;
    if values.len() != pattern.unknowns() {
        return Err(PatternError::LengthMismatch {
            expected: pattern.unknowns(),
            found: values.len(),
        }
        .into());
    }
    let assignment = Assignment::from_rationals(field.clone(), values)?;
    let graph = BipartiteGraph::build(&pattern);
    let (a, b) = graph.optimal_pair();
    let expected_triple = triple_from_pair(&graph, &a, &b);
    let f = generic_polynomial(&pattern, &a, &b).expect("pair comes from this graph");
    let f_value = f.evaluate(&assignment)?;
    let f_nonzero = !field.is_zero(&f_value);
    let m = pattern.instantiate(&assignment)?;
    let cert = reduce_numeric(&m);
    let triple_matches = cert.triple == expected_triple;
    let certificate_sound = cert.is_sound_for(&m);
    Ok(CheckReport {
        schema_version: SCHEMA_VERSION,
        tool_version: tool_version(),
        input_sha256: sha256_hex(text.as_bytes()),
        rows: pattern.rows(),
        a_cols: pattern.a_cols(),
        b_cols: pattern.b_cols(),
        unknowns: pattern.unknowns(),
        field: field.name(),
        assignment: assignment.values().iter().map(|v| v.to_string()).collect(),
        f: f.to_string(),
        f_value: f_value.to_string(),
        f_nonzero,
        expected_triple,
        triple: cert.triple,
        triple_matches,
        rank_a: m.a_block().rank(),
        rank_b: m.b_block().rank(),
        rank_m: m.rank(),
        certificate_sound,
        s: cert.s.render_rows(),
        r1: cert.r1.render_rows(),
        r2: cert.r2.render_rows(),
        canonical: cert.canonical.render_rows(),
        ok: certificate_sound && (!f_nonzero || triple_matches),
    })
}

impl CheckReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("field: {}\n", self.field));
        out.push_str(&format!("assignment: {}\n", self.assignment.join(" ")));
        out.push_str(&format!("f = {}\n", self.f));
        if self.f_nonzero {
            out.push_str(&format!("f(a) = {} != 0: generic member\n", self.f_value));
        } else {
            out.push_str(
                "f(a) = 0: outside the generic family; the triple below may differ\n",
            );
        }
        out.push_str(&format!(
            "expected triple: {}\n",
            triple_text(self.expected_triple)
        ));
        out.push_str(&format!("reduced triple: {}\n", triple_text(self.triple)));
        out.push_str(&format!(
            "ranks: rank A = {}, rank B = {}, rank M = {}\n",
            self.rank_a, self.rank_b, self.rank_m
        ));
        out.push_str("canonical form:\n");
        for line in grid_lines(&self.canonical, Some(self.a_cols)) {
            out.push_str(&line);
            out.push('\n');
        }
        out.push_str("row transform S:\n");
        for line in grid_lines(&self.s, None) {
            out.push_str(&line);
            out.push('\n');
        }
        out.push_str("A-column transform R1:\n");
        for line in grid_lines(&self.r1, None) {
            out.push_str(&line);
            out.push('\n');
        }
        out.push_str("B-column transform R2:\n");
        for line in grid_lines(&self.r2, None) {
            out.push_str(&line);
            out.push('\n');
        }
        out.push_str(&format!(
            "certificate: {}\n",
            if self.certificate_sound { "sound" } else { "UNSOUND" }
        ));
        let verdict = if self.ok {
            if self.f_nonzero { "ok" } else { "ok (assignment outside the generic family)" }
        } else {
            "MISMATCH"
        };
        out.push_str(&format!("verdict: {verdict}\n"));
        out.push_str(&format!("input sha256: {}\n", self.input_sha256));
        out.push_str(&format!("tool version: {}\n", self.tool_version));
        out
    }
}

/// Parse a pattern and hand it to the sampling verifier.
pub fn run_verify<F: Field>(
    text: &str,
    field: &F,
    options: &VerifyOptions,
) -> Result<VerificationReport, ReportError> {
    let pattern = Pattern::parse(text)?;
    Ok(verify_reduction(field, &pattern, options))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MatchboxSummary {
    pub size: usize,
    pub count: usize,
    pub matchboxes: Vec<Vec<usize>>,
}

fn summarize(boxes: &[Matchbox]) -> MatchboxSummary {
    MatchboxSummary {
        size: boxes.first().map_or(0, Matchbox::size),
        count: boxes.len(),
        matchboxes: boxes.iter().map(edge_list).collect(),
    }
}

/// Brute-force enumerations next to the fast answers, with agreement
/// verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub input_sha256: String,
    pub exhaustive_limit: usize,
    pub left: MatchboxSummary,
    pub right: MatchboxSummary,
    pub mixed: MatchboxSummary,
    pub generic_ranks: GenericRanks,
    pub sizes_match_ranks: bool,
    pub pair_left: Vec<usize>,
    pub pair_right: Vec<usize>,
    pub fast_v: usize,
    pub brute_force_min_v: usize,
    pub v_agrees: bool,
}

/// Exhaustive enumerations for one pattern, cross-checked against the
/// augmenting-path ranks and the optimal pair.
pub fn run_oracle(text: &str, limit: usize) -> Result<OracleReport, ReportError> {
    let pattern = Pattern::parse(text)?;
    let left = enumerate_largest_matchboxes(&pattern, MatchboxKind::Left, limit)?;
    let right = enumerate_largest_matchboxes(&pattern, MatchboxKind::Right, limit)?;
    let mixed = enumerate_largest_matchboxes(&pattern, MatchboxKind::Mixed, limit)?;
    let min_v = brute_force_min_v(&pattern, limit)?;
    let graph = BipartiteGraph::build(&pattern);
    let ranks = graph.generic_ranks();
    let (a, b) = graph.optimal_pair();
    let fast_v = graph.common_vertex_count(&a, &b);
    let left = summarize(&left);
    let right = summarize(&right);
    let mixed = summarize(&mixed);
    let sizes_match_ranks =
        (left.size, right.size, mixed.size) == (ranks.rank_a, ranks.rank_b, ranks.rank_m);
    let v_agrees = fast_v == min_v && min_v + ranks.rank_m == ranks.rank_a + ranks.rank_b;
    Ok(OracleReport {
        schema_version: SCHEMA_VERSION,
        tool_version: tool_version(),
        input_sha256: sha256_hex(text.as_bytes()),
        exhaustive_limit: limit,
        left,
        right,
        mixed,
        generic_ranks: ranks,
        sizes_match_ranks,
        pair_left: edge_list(&a),
        pair_right: edge_list(&b),
        fast_v,
        brute_force_min_v: min_v,
        v_agrees,
    })
}

impl OracleReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (label, summary) in
            [("left", &self.left), ("right", &self.right), ("mixed", &self.mixed)]
        {
            out.push_str(&format!(
                "largest {} matchboxes (size {}, {} total):\n",
                label, summary.size, summary.count
            ));
            for edges in &summary.matchboxes {
                out.push_str(&format!("  {}\n", edge_set_text(edges)));
            }
        }
        out.push_str(&format!(
            "fast generic ranks: rank A = {}, rank B = {}, rank M = {}\n",
            self.generic_ranks.rank_a, self.generic_ranks.rank_b, self.generic_ranks.rank_m
        ));
        out.push_str(&format!(
            "matchbox sizes match ranks: {}\n",
            if self.sizes_match_ranks { "yes" } else { "NO" }
        ));
        out.push_str(&format!(
            "fast pair: left {}, right {} with v = {}\n",
            edge_set_text(&self.pair_left),
            edge_set_text(&self.pair_right),
            self.fast_v
        ));
        out.push_str(&format!("brute-force minimal v: {}\n", self.brute_force_min_v));
        out.push_str(&format!(
            "v agreement (fast = brute force = rank A + rank B - rank M): {}\n",
            if self.v_agrees { "yes" } else { "NO" }
        ));
        out.push_str(&format!("input sha256: {}\n", self.input_sha256));
        out.push_str(&format!("tool version: {}\n", self.tool_version));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use num_bigint::BigInt;

    const GRID_4X5: &str = "\
pattern 4 2 3
.  .  | x4 x7 .
x1 .  | x5 .  .
.  x2 | .  .  x9
.  x3 | x6 x8 .
";

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn analysis_of_the_grid() {
        let report = analyze(GRID_4X5).unwrap();
        assert_eq!(report.schema_version, SCHEMA_VERSION);
        assert_eq!((report.rows, report.a_cols, report.b_cols, report.unknowns), (4, 2, 3, 9));
        assert_eq!(
            report.generic_ranks,
            GenericRanks { rank_a: 2, rank_b: 3, rank_m: 4 }
        );
        assert_eq!(report.pair.left, vec![1, 3]);
        assert_eq!(report.pair.right, vec![5, 7, 9]);
        assert_eq!(report.pair.merged, vec![1, 3, 7, 9]);
        assert_eq!(report.pair.common_vertices, 1);
        assert_eq!(report.triple, CanonicalTriple { r: 1, s: 1, t: 2 });
        assert_eq!(report.row_order, vec![2, 4, 1, 3]);
        assert_eq!(report.a_col_order, vec![1, 2]);
        assert_eq!(report.b_col_order, vec![2, 3, 1]);
        assert_eq!(
            report.block_form,
            vec![
                vec!["1", "0", "0", "0", "1"],
                vec!["0", "1", "0", "0", "0"],
                vec!["0", "0", "1", "0", "0"],
                vec!["0", "0", "0", "1", "0"],
            ]
            .into_iter()
            .map(|r: Vec<&str>| r.into_iter().map(str::to_owned).collect::<Vec<_>>())
            .collect::<Vec<_>>()
        );
        assert_eq!(report.minors.left, "x1*x3");
        assert_eq!(report.minors.right, "-x5*x7*x9");
        assert_eq!(report.minors.merged, "-x1*x3*x7*x9");
        assert_eq!(report.f, "x1*x3*x5*x7*x9");
        assert_eq!(report.f_terms.len(), 1);
        assert_eq!(report.f_terms[0].coeff, "1");
        assert_eq!(report.f_terms[0].exps, vec![1, 0, 1, 0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn analysis_is_deterministic_and_round_trips() {
        let first = analyze(GRID_4X5).unwrap();
        let second = analyze(GRID_4X5).unwrap();
        assert_eq!(first, second);
        let json1 = serde_json::to_string_pretty(&first).unwrap();
        let json2 = serde_json::to_string_pretty(&second).unwrap();
        assert_eq!(json1, json2);
        let back: AnalysisReport = serde_json::from_str(&json1).unwrap();
        assert_eq!(first, back);
        assert_eq!(first.to_text(), second.to_text());
    }

    #[test]
    fn analysis_of_the_empty_pattern() {
        let report = analyze("pattern 2 1 1\n. | .\n. | .\n").unwrap();
        assert_eq!(report.triple, CanonicalTriple { r: 0, s: 0, t: 0 });
        assert_eq!(report.f, "1");
        assert_eq!(report.pair.common_vertices, 0);
    }

    #[test]
    fn check_inside_the_generic_family() {
        // x8 = 2 keeps the left pair's polynomial nonzero at all-ones...
        let values: Vec<BigRational> =
            vec![q(1), q(1), q(1), q(1), q(1), q(1), q(1), q(2), q(1)];
        let report = check(GRID_4X5, &Rationals, &values).unwrap();
        assert!(report.f_nonzero);
        assert!(report.triple_matches);
        assert!(report.certificate_sound);
        assert!(report.ok);
        assert_eq!(report.triple, CanonicalTriple { r: 1, s: 1, t: 2 });
        assert_eq!((report.rank_a, report.rank_b, report.rank_m), (2, 3, 4));
    }

    #[test]
    fn check_outside_the_generic_family() {
        // ...but the deterministic pair picks f = x1*x3*x5*x7*x9, which is 1
        // at all-ones; kill it instead with x9 = 0.
        let mut values = vec![q(1); 9];
        values[8] = q(0);
        let report = check(GRID_4X5, &Rationals, &values).unwrap();
        assert!(!report.f_nonzero);
        assert_eq!(report.f_value, "0");
        assert!(report.certificate_sound);
        assert!(report.ok);
        assert_ne!(report.triple, report.expected_triple);
        assert!(report.to_text().contains("outside the generic family"));
    }

    #[test]
    fn check_over_a_prime_field() {
        let values: Vec<BigRational> =
            vec![q(1), q(1), q(1), q(1), q(1), q(1), q(1), q(2), q(1)];
        let report = check(GRID_4X5, &PrimeField::new(5).unwrap(), &values).unwrap();
        assert_eq!(report.field, "gf(5)");
        assert!(report.f_nonzero);
        assert!(report.ok);
        let json = serde_json::to_string(&report).unwrap();
        let back: CheckReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report, back);
    }

    #[test]
    fn check_rejects_wrong_value_counts() {
        let err = check(GRID_4X5, &Rationals, &[q(1), q(2)]).unwrap_err();
        assert!(matches!(
            err,
            ReportError::Pattern(PatternError::LengthMismatch { expected: 9, found: 2 })
        ));
    }

    #[test]
    fn oracle_report_on_the_grid() {
        let report = run_oracle(GRID_4X5, 24).unwrap();
        assert_eq!(report.left.size, 2);
        assert_eq!(report.left.count, 2);
        assert_eq!(report.right.size, 3);
        assert_eq!(report.right.count, 4);
        assert_eq!(report.mixed.size, 4);
        assert!(report.sizes_match_ranks);
        assert_eq!(report.fast_v, 1);
        assert_eq!(report.brute_force_min_v, 1);
        assert!(report.v_agrees);
        let text = report.to_text();
        assert!(text.contains("brute-force minimal v: 1"));
        let json = serde_json::to_string(&report).unwrap();
        let back: OracleReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report, back);
    }

    #[test]
    fn oracle_guard_propagates() {
        let err = run_oracle(GRID_4X5, 4).unwrap_err();
        assert!(matches!(
            err,
            ReportError::Oracle(OracleError::GuardExceeded { edges: 9, limit: 4 })
        ));
    }

    #[test]
    fn verify_wrapper_parses_and_runs() {
        let report = run_verify(
            GRID_4X5,
            &Rationals,
            &VerifyOptions { trials: 8, ..Default::default() },
        )
        .unwrap();
        assert_eq!(report.trials, 8);
        assert_eq!(report.failures, 0);
    }

    #[test]
    fn sha256_is_stable() {
        assert_eq!(
            sha256_hex(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
