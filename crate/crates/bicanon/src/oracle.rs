//! Brute-force and randomized cross-checks for the fast path.
//!
//! Nothing here is needed to *compute* a canonical form; these routines
//! re-derive the same answers by slower, more literal means so the fast
//! implementation can be falsified:
//!
//! * [`enumerate_largest_matchboxes`] lists every largest matchbox by
//!   exhaustive backtracking instead of augmenting paths;
//! * [`brute_force_min_v`] minimizes the common-vertex count over all
//!   pairs of largest matchboxes instead of trusting the three-phase
//!   construction;
//! * [`verify_reduction`] samples assignments and checks that every member
//!   with f(a) != 0 reduces to the canonical form predicted by the pair;
//! * [`determinant_crosscheck`] compares symbolic minors against exact
//!   numeric determinants.
//!
//! Randomized runs are reproducible: the per-trial generator is derived
//! from the seed by counter, so reports do not depend on how trials are
//! scheduled across threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canonical::{reduce_numeric, triple_from_pair, CanonicalTriple};
use crate::field::{Field, SampleRange};
use crate::graph::{BipartiteGraph, Matchbox, MatchboxKind};
use crate::pattern::{Assignment, Pattern, Placement, Side};
use crate::poly::{generic_polynomial, minor_polynomial};
use crate::report::SCHEMA_VERSION;

/// Edge-count ceiling for the exhaustive searches. Backtracking over all
/// matchings is exponential in the worst case; this keeps the brute-force
/// paths to interactive runtimes unless the caller raises it explicitly.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 24;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum OracleError {
    #[error(
        "pattern has {edges} unknowns, above the exhaustive-search limit {limit}; \
         raise the limit to force the search"
    )]
    GuardExceeded { edges: usize, limit: usize },
}

/// Every largest matchbox of the given kind, by exhaustive include/exclude
/// backtracking over the admissible edges. Results are sorted by their
/// edge lists, so the output is deterministic.
pub fn enumerate_largest_matchboxes(
    pattern: &Pattern,
    kind: MatchboxKind,
    limit: usize,
) -> Result<Vec<Matchbox>, OracleError> {
    let edges = pattern.unknowns();
    if edges > limit {
        return Err(OracleError::GuardExceeded { edges, limit });
    }
    let graph = BipartiteGraph::build(pattern);
    let admissible: Vec<usize> =
        (1..=edges).filter(|&i| graph.edge(i).admissible(kind)).collect();
    let mut search = Search {
        graph: &graph,
        edges: admissible,
        row_used: vec![false; graph.rows()],
        col_used: vec![false; graph.left_cols() + graph.right_cols()],
        chosen: Vec::new(),
        best: 0,
        found: Vec::new(),
    };
    search.run(0);
    let mut found = search.found;
    found.sort();
    Ok(found
        .into_iter()
        .map(|set| graph.matchbox(kind, set).expect("search respects the matching constraints"))
        .collect())
}

struct Search<'g> {
    graph: &'g BipartiteGraph,
    edges: Vec<usize>,
    row_used: Vec<bool>,
    col_used: Vec<bool>,
    chosen: Vec<usize>,
    best: usize,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, i: usize) {
        if self.chosen.len() + (self.edges.len() - i) < self.best {
            return; // cannot reach the best size any more
        }
        if i == self.edges.len() {
            if self.chosen.len() > self.best {
                self.best = self.chosen.len();
                self.found.clear();
            }
            if self.chosen.len() == self.best {
                self.found.push(self.chosen.clone());
            }
            return;
        }
        let index = self.edges[i];
        let e = self.graph.edge(index);
        let row = e.row - 1;
        let col = match e.side {
            Side::A => e.col - 1,
            Side::B => self.graph.left_cols() + e.col - 1,
        };
        if !self.row_used[row] && !self.col_used[col] {
            self.row_used[row] = true;
            self.col_used[col] = true;
            self.chosen.push(index);
            self.run(i + 1);
            self.chosen.pop();
            self.row_used[row] = false;
            self.col_used[col] = false;
        }
        self.run(i + 1);
    }
}

/// Minimum common-vertex count over *all* pairs of a largest left and a
/// largest right matchbox. The fast path claims this equals
/// rank A + rank B - rank M; this function recomputes it literally.
pub fn brute_force_min_v(pattern: &Pattern, limit: usize) -> Result<usize, OracleError> {
    let lefts = enumerate_largest_matchboxes(pattern, MatchboxKind::Left, limit)?;
    let rights = enumerate_largest_matchboxes(pattern, MatchboxKind::Right, limit)?;
    let graph = BipartiteGraph::build(pattern);
    let mut min = usize::MAX;
    for a in &lefts {
        for b in &rights {
            min = min.min(graph.common_vertex_count(a, b));
        }
    }
    debug_assert_ne!(min, usize::MAX, "both lists contain at least the empty matchbox");
    Ok(min)
}

/// Knobs for the sampling verifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub trials: usize,
    pub seed: u64,
    pub range: SampleRange,
    /// Additionally recompose S·A·R1, S·B·R2 from each certificate and
    /// require bit-exact equality with the canonical form.
    pub check_certificates: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { trials: 100, seed: 7, range: SampleRange::default(), check_certificates: false }
    }
}

/// Everything needed to reproduce and debug one failed trial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TrialFailure {
    pub trial: usize,
    pub assignment: Vec<String>,
    pub expected: String,
    pub observed: String,
}

/// Outcome tally of a sampling run. `trials` always equals
/// `successes + failures + skipped`; a trial is skipped when f vanishes at
/// the sampled point, which says nothing about the claim under test. Over
/// small prime fields skips can dominate, since the complement of the
/// vanishing set may be tiny or empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub schema_version: u32,
    pub check: String,
    pub field: String,
    pub trials: usize,
    pub successes: usize,
    pub failures: usize,
    pub skipped: usize,
    pub rng_seed: u64,
    pub sample_lo: i64,
    pub sample_hi: i64,
    pub first_failure: Option<TrialFailure>,
}

impl VerificationReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("check: {}\n", self.check));
        out.push_str(&format!("field: {}\n", self.field));
        out.push_str(&format!(
            "sampling: integer window [{}, {}], rng seed {}\n",
            self.sample_lo, self.sample_hi, self.rng_seed
        ));
        out.push_str(&format!(
            "trials: {}  successes: {}  failures: {}  skipped: {}\n",
            self.trials, self.successes, self.failures, self.skipped
        ));
        match &self.first_failure {
            None => out.push_str("verdict: ok\n"),
            Some(fail) => {
                out.push_str(&format!("verdict: FAILED at trial {}\n", fail.trial));
                out.push_str(&format!("  assignment: {}\n", fail.assignment.join(" ")));
                out.push_str(&format!("  expected: {}\n", fail.expected));
                out.push_str(&format!("  observed: {}\n", fail.observed));
            }
        }
        out
    }
}

enum TrialOutcome {
    Success,
    Skipped,
    Failure(TrialFailure),
}

fn tally(
    check: &str,
    field: String,
    options: &VerifyOptions,
    outcomes: Vec<TrialOutcome>,
) -> VerificationReport {
    let mut successes = 0;
    let mut failures = 0;
    let mut skipped = 0;
    let mut first_failure = None;
    for outcome in outcomes {
        match outcome {
            TrialOutcome::Success => successes += 1,
            TrialOutcome::Skipped => skipped += 1,
            TrialOutcome::Failure(fail) => {
                failures += 1;
                if first_failure.is_none() {
                    first_failure = Some(fail);
                }
            }
        }
    }
    VerificationReport {
        schema_version: SCHEMA_VERSION,
        check: check.to_owned(),
        field,
        trials: options.trials,
        successes,
        failures,
        skipped,
        rng_seed: options.seed,
        sample_lo: options.range.lo,
        sample_hi: options.range.hi,
        first_failure,
    }
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64 + 1);
    rng
}

fn sample_assignment<F: Field>(
    field: &F,
    n: usize,
    rng: &mut ChaCha8Rng,
    range: SampleRange,
) -> Assignment<F> {
    let values: Vec<F::Elem> = (0..n).map(|_| field.sample(rng, range)).collect();
    Assignment::new(field.clone(), values)
}

fn render_values<F: Field>(assignment: &Assignment<F>) -> Vec<String> {
    assignment.values().iter().map(|v| v.to_string()).collect()
}

fn triple_text(t: CanonicalTriple) -> String {
    format!("(r, s, t) = ({}, {}, {})", t.r, t.s, t.t)
}

/// Sample assignments and, whenever f does not vanish, demand that the
/// member reduces to the canonical form predicted by the optimal pair and
/// that the three ranks match the matchbox sizes. Trials run in parallel;
/// the report is identical for any schedule.
pub fn verify_reduction<F: Field>(
    field: &F,
    pattern: &Pattern,
    options: &VerifyOptions,
) -> VerificationReport {
    let graph = BipartiteGraph::build(pattern);
    let (a, b) = graph.optimal_pair();
    let expected = triple_from_pair(&graph, &a, &b);
    let f = generic_polynomial(pattern, &a, &b)
        .expect("the pair comes from the pattern's own graph");
    let n = pattern.unknowns();
    let expected_text = format!(
        "triple {}, ranks ({}, {}, {}){}",
        triple_text(expected),
        expected.rank_a(),
        expected.rank_b(),
        expected.rank_m(),
        if options.check_certificates { ", sound certificate" } else { "" }
    );

    let outcomes: Vec<TrialOutcome> = (0..options.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(options.seed, trial);
            let assignment = sample_assignment(field, n, &mut rng, options.range);
            let fail = |observed: String| {
                TrialOutcome::Failure(TrialFailure {
                    trial,
                    assignment: render_values(&assignment),
                    expected: expected_text.clone(),
                    observed,
                })
            };
            let fa = match f.evaluate(&assignment) {
                Ok(v) => v,
                Err(e) => return fail(format!("evaluating f: {e}")),
            };
            if field.is_zero(&fa) {
                return TrialOutcome::Skipped;
            }
            let m = pattern.instantiate(&assignment).expect("assignment length matches");
            let cert = reduce_numeric(&m);
            let mut problems = Vec::new();
            if cert.triple != expected {
                problems.push(format!("triple {}", triple_text(cert.triple)));
            }
            let ranks = (m.a_block().rank(), m.b_block().rank(), m.rank());
            if ranks != (expected.rank_a(), expected.rank_b(), expected.rank_m()) {
                problems.push(format!("ranks ({}, {}, {})", ranks.0, ranks.1, ranks.2));
            }
            if options.check_certificates && !cert.is_sound_for(&m) {
                problems.push("unsound certificate".to_owned());
            }
            if problems.is_empty() {
                TrialOutcome::Success
            } else {
                fail(problems.join("; "))
            }
        })
        .collect();
    tally("canonical reduction against the optimal pair", field.name(), options, outcomes)
}

/// Sample assignments and compare the symbolic minor of one matchbox with
/// the exact determinant of the corresponding numeric submatrix. No trial
/// is ever skipped; both sides may legitimately be zero.
pub fn determinant_crosscheck<F: Field>(
    field: &F,
    pattern: &Pattern,
    matchbox: &Matchbox,
    options: &VerifyOptions,
) -> VerificationReport {
    let minor = minor_polynomial(pattern, matchbox);
    let (rows, cols) = submatrix_selection(pattern, matchbox);
    let n = pattern.unknowns();

    let outcomes: Vec<TrialOutcome> = (0..options.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(options.seed, trial);
            let assignment = sample_assignment(field, n, &mut rng, options.range);
            let fail = |expected: String, observed: String| {
                TrialOutcome::Failure(TrialFailure {
                    trial,
                    assignment: render_values(&assignment),
                    expected,
                    observed,
                })
            };
            let symbolic = match minor.evaluate(&assignment) {
                Ok(v) => v,
                Err(e) => return fail("minor evaluates".into(), format!("field error: {e}")),
            };
            let m = pattern.instantiate(&assignment).expect("assignment length matches");
            let numeric = m.submatrix(&rows, &cols).determinant();
            if numeric == symbolic {
                TrialOutcome::Success
            } else {
                fail(
                    format!("determinant {symbolic} (symbolic minor)"),
                    format!("determinant {numeric} (numeric)"),
                )
            }
        })
        .collect();
    tally("symbolic minor against numeric determinant", field.name(), options, outcomes)
}

/// Row and column selections of a matchbox's submatrix: rows ascending,
/// A-strip columns ascending, then B-strip columns ascending — the same
/// convention the symbolic minor uses.
fn submatrix_selection(pattern: &Pattern, matchbox: &Matchbox) -> (Vec<usize>, Vec<usize>) {
    let mut rows = Vec::new();
    let mut a_cols = Vec::new();
    let mut b_cols = Vec::new();
    for &e in matchbox.edges() {
        let pl = pattern.placement(e);
        rows.push(pl.row - 1);
        match pl.side {
            Side::A => a_cols.push(pl.col - 1),
            Side::B => b_cols.push(pattern.a_cols() + pl.col - 1),
        }
    }
    rows.sort_unstable();
    a_cols.sort_unstable();
    b_cols.sort_unstable();
    a_cols.extend(b_cols);
    (rows, a_cols)
}

/// Every pattern with the given dimensions and at most `max_n` unknowns,
/// one per subset of cells; the subset's cells are labeled x1, x2, ... in
/// row-major order, A strip before B strip. Sizes and common-vertex counts
/// do not depend on the labeling, so this exhausts all small instances for
/// oracle sweeps.
pub fn all_patterns(max_m: usize, max_p: usize, max_q: usize, max_n: usize) -> Vec<Pattern> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        for p in 1..=max_p {
            for q in 1..=max_q {
                let cells = cell_list(m, p, q);
                for k in 0..=max_n.min(cells.len()) {
                    for combo in combinations(cells.len(), k) {
                        let placements: Vec<Placement> =
                            combo.iter().map(|&i| cells[i]).collect();
                        out.push(
                            Pattern::new(m, p, q, placements)
                                .expect("cells are in range and distinct"),
                        );
                    }
                }
            }
        }
    }
    out
}

/// A pattern with `n` unknowns on distinct uniformly chosen cells, labeled
/// in draw order (so labelings are exercised too, not just cell sets).
pub fn random_pattern<R: Rng + ?Sized>(
    rng: &mut R,
    m: usize,
    p: usize,
    q: usize,
    n: usize,
) -> Pattern {
    let cells = cell_list(m, p, q);
    assert!(n <= cells.len(), "cannot place {n} unknowns on {} cells", cells.len());
    let placements: Vec<Placement> =
        rand::seq::index::sample(rng, cells.len(), n).iter().map(|i| cells[i]).collect();
    Pattern::new(m, p, q, placements).expect("sampled cells are distinct")
}

fn cell_list(m: usize, p: usize, q: usize) -> Vec<Placement> {
    (1..=m)
        .flat_map(|row| {
            (1..=p)
                .map(move |col| Placement { side: Side::A, row, col })
                .chain((1..=q).map(move |col| Placement { side: Side::B, row, col }))
        })
        .collect()
}

/// All k-element subsets of 0..n in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    const GRID_4X5: &str = "\
pattern 4 2 3
.  .  | x4 x7 .
x1 .  | x5 .  .
.  x2 | .  .  x9
.  x3 | x6 x8 .
";

    fn grid() -> Pattern {
        Pattern::parse(GRID_4X5).unwrap()
    }

    fn edge_lists(boxes: &[Matchbox]) -> Vec<Vec<usize>> {
        boxes.iter().map(|mb| mb.edges().iter().copied().collect()).collect()
    }

    #[test]
    fn largest_left_matchboxes_of_the_grid() {
        let found =
            enumerate_largest_matchboxes(&grid(), MatchboxKind::Left, DEFAULT_EXHAUSTIVE_LIMIT)
                .unwrap();
        assert_eq!(edge_lists(&found), vec![vec![1, 2], vec![1, 3]]);
    }

    #[test]
    fn largest_right_matchboxes_of_the_grid() {
        let found =
            enumerate_largest_matchboxes(&grid(), MatchboxKind::Right, DEFAULT_EXHAUSTIVE_LIMIT)
                .unwrap();
        assert_eq!(
            edge_lists(&found),
            vec![vec![4, 8, 9], vec![5, 7, 9], vec![5, 8, 9], vec![6, 7, 9]]
        );
    }

    #[test]
    fn largest_mixed_matchboxes_have_full_rank_size() {
        let found =
            enumerate_largest_matchboxes(&grid(), MatchboxKind::Mixed, DEFAULT_EXHAUSTIVE_LIMIT)
                .unwrap();
        assert!(found.iter().all(|mb| mb.size() == 4));
        // {x1, x2, x4, x8} from the merge construction must be among them.
        assert!(edge_lists(&found).contains(&vec![1, 2, 4, 8]));
        // sizes agree with the augmenting-path ranks
        let ranks = BipartiteGraph::build(&grid()).generic_ranks();
        assert_eq!(ranks.rank_m, 4);
    }

    #[test]
    fn empty_pattern_has_only_the_empty_matchbox() {
        let pat = Pattern::new(2, 2, 2, Vec::new()).unwrap();
        for kind in [MatchboxKind::Left, MatchboxKind::Right, MatchboxKind::Mixed] {
            let found =
                enumerate_largest_matchboxes(&pat, kind, DEFAULT_EXHAUSTIVE_LIMIT).unwrap();
            assert_eq!(found.len(), 1);
            assert_eq!(found[0].size(), 0);
        }
        assert_eq!(brute_force_min_v(&pat, DEFAULT_EXHAUSTIVE_LIMIT).unwrap(), 0);
    }

    #[test]
    fn guard_refuses_large_patterns() {
        let err = enumerate_largest_matchboxes(&grid(), MatchboxKind::Left, 3).unwrap_err();
        assert_eq!(err, OracleError::GuardExceeded { edges: 9, limit: 3 });
        assert_eq!(
            brute_force_min_v(&grid(), 8),
            Err(OracleError::GuardExceeded { edges: 9, limit: 8 })
        );
    }

    #[test]
    fn min_v_of_the_grid_is_one() {
        assert_eq!(brute_force_min_v(&grid(), DEFAULT_EXHAUSTIVE_LIMIT).unwrap(), 1);
        // and it equals rank A + rank B - rank M
        let ranks = BipartiteGraph::build(&grid()).generic_ranks();
        assert_eq!(ranks.rank_a + ranks.rank_b - ranks.rank_m, 1);
    }

    #[test]
    fn disjoint_strips_need_no_shared_rows() {
        let text = "\
pattern 2 1 1
x1 | .
.  | x2
";
        let pat = Pattern::parse(text).unwrap();
        assert_eq!(brute_force_min_v(&pat, DEFAULT_EXHAUSTIVE_LIMIT).unwrap(), 0);
    }

    #[test]
    fn reduction_holds_on_the_grid() {
        let report = verify_reduction(&Rationals, &grid(), &VerifyOptions::default());
        assert_eq!(report.trials, 100);
        assert_eq!(report.failures, 0);
        assert_eq!(report.successes + report.skipped, 100);
        assert!(report.first_failure.is_none());
        assert!(report.successes > 0, "skip rate must stay away from 1 over the rationals");
    }

    #[test]
    fn verification_is_schedule_independent() {
        let options = VerifyOptions { trials: 64, seed: 99, ..VerifyOptions::default() };
        let first = verify_reduction(&Rationals, &grid(), &options);
        let second = verify_reduction(&Rationals, &grid(), &options);
        assert_eq!(first, second);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let serial = pool.install(|| verify_reduction(&Rationals, &grid(), &options));
        assert_eq!(first, serial);
    }

    #[test]
    fn certificates_over_a_prime_field() {
        let options = VerifyOptions { trials: 40, check_certificates: true, ..Default::default() };
        let report = verify_reduction(&PrimeField::new(101).unwrap(), &grid(), &options);
        assert_eq!(report.failures, 0);
        assert!(report.successes > 0);
        assert_eq!(report.field, "gf(101)");
    }

    #[test]
    fn empty_pattern_trials_never_skip() {
        let pat = Pattern::new(2, 2, 2, Vec::new()).unwrap();
        let options = VerifyOptions { trials: 10, ..Default::default() };
        let report = verify_reduction(&Rationals, &pat, &options);
        assert_eq!((report.successes, report.failures, report.skipped), (10, 0, 0));
    }

    #[test]
    fn single_unknown_skips_exactly_at_zero() {
        // one unknown over GF(2): samples are 0 or 1; skipped iff 0
        let pat = Pattern::new(1, 1, 1, vec![Placement { side: Side::A, row: 1, col: 1 }])
            .unwrap();
        let options = VerifyOptions { trials: 200, ..Default::default() };
        let report = verify_reduction(&PrimeField::new(2).unwrap(), &pat, &options);
        assert_eq!(report.failures, 0);
        assert!(report.skipped > 0 && report.successes > 0);
    }

    #[test]
    fn minor_matches_determinant_on_the_grid() {
        let pat = grid();
        let graph = BipartiteGraph::build(&pat);
        let (a, b) = graph.optimal_pair();
        let merged = graph.merge(&a, &b).unwrap();
        let options = VerifyOptions { trials: 30, ..Default::default() };
        for mb in [&a, &b, &merged, &graph.empty_matchbox(MatchboxKind::Mixed)] {
            let report = determinant_crosscheck(&Rationals, &pat, mb, &options);
            assert_eq!(report.failures, 0, "matchbox {mb}");
            assert_eq!(report.successes, 30);
        }
    }

    #[test]
    fn all_patterns_counts_and_shapes() {
        let pats = all_patterns(1, 1, 1, 2);
        // one 1x(1|1) shape, cells {A11, B11}: subsets of size 0, 1, 1, 2
        assert_eq!(pats.len(), 4);
        assert!(pats.iter().all(|p| p.rows() == 1 && p.a_cols() == 1 && p.b_cols() == 1));
        let sizes: Vec<usize> = pats.iter().map(|p| p.unknowns()).collect();
        assert_eq!(sizes, vec![0, 1, 1, 2]);

        let pats = all_patterns(2, 2, 1, 2);
        // shapes (m,p,q) in {1,2}x{1,2}x{1}; for each, C(cells,0)+C(cells,1)+C(cells,2)
        let expect: usize = [(1usize, 1usize, 1usize), (1, 2, 1), (2, 1, 1), (2, 2, 1)]
            .iter()
            .map(|&(m, p, q)| {
                let c = m * (p + q);
                1 + c + c * (c - 1) / 2
            })
            .sum();
        assert_eq!(pats.len(), expect);
    }

    #[test]
    fn random_patterns_are_valid_and_seeded() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let pat = random_pattern(&mut rng, 3, 2, 2, 7);
        assert_eq!((pat.rows(), pat.a_cols(), pat.b_cols(), pat.unknowns()), (3, 2, 2, 7));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let again = random_pattern(&mut rng, 3, 2, 2, 7);
        assert_eq!(pat, again);
    }

    #[test]
    fn report_json_round_trips() {
        let report = verify_reduction(
            &Rationals,
            &grid(),
            &VerifyOptions { trials: 5, ..Default::default() },
        );
        let json = serde_json::to_string_pretty(&report).unwrap();
        assert!(json.contains("\"schemaVersion\""));
        assert!(json.contains("\"rngSeed\""));
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report, back);
    }

    #[test]
    fn combinations_enumerate_lexicographically() {
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(2, 3), Vec::<Vec<usize>>::new());
        assert_eq!(combinations(4, 4), vec![vec![0, 1, 2, 3]]);
    }
}
