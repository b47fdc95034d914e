//! Zero patterns and their text format.
//!
//! A pattern describes an m x (p+q) matrix split into a left strip A and a
//! right strip B, where each of n unknowns x1..xn occupies exactly one cell
//! and every other cell is pinned to zero.
//!
//! Text format:
//!
//! ```text
//! # comment lines and blank lines are ignored
//! pattern 4 2 3
//! .  .  | x4 x7 .
//! x1 .  | x5 .  .
//! .  x2 | .  .  x9
//! .  x3 | x6 x8 .
//! ```
//!
//! The header gives the row count and the widths of the two strips. Each of
//! the following m significant lines holds p tokens, a literal `|`, and q
//! tokens; a token is `.` (structural zero) or `x<k>` with 1 <= k <= n. The
//! unknown indices must cover 1..n with no duplicates and no gaps.
//!
//! Assignment files hold one significant line `a = v1 v2 ... vn` with exact
//! integer or `num/den` rational values.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::field::{Field, FieldError};
use crate::matrix::ExactMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: expected {expected} tokens in the {strip} strip, found {found}")]
    RaggedRow {
        line: usize,
        strip: Side,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: missing '|' strip separator")]
    MissingSeparator { line: usize },
    #[error("unknown x{index} appears more than once")]
    DuplicateUnknown { index: usize },
    #[error("unknown indices must cover 1..={count} with no gaps; x{missing} is missing")]
    IndexGap { count: usize, missing: usize },
    #[error("placement of x{index} lies outside the {rows} x {cols} {strip} strip")]
    PlacementOutOfRange {
        index: usize,
        strip: Side,
        rows: usize,
        cols: usize,
    },
    #[error("x{first} and x{second} occupy the same cell")]
    SharedCell { first: usize, second: usize },
    #[error("assignment has {found} values but the pattern has {expected} unknowns")]
    LengthMismatch { expected: usize, found: usize },
    #[error("edge index {index} is outside 1..={count}")]
    EdgeOutOfRange { index: usize, count: usize },
}

/// Which strip a cell belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::A => write!(f, "A"),
            Side::B => write!(f, "B"),
        }
    }
}

/// Cell occupied by one unknown. Rows and strip-local columns are 1-based,
/// matching the text format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Placement {
    pub side: Side,
    pub row: usize,
    pub col: usize,
}

/// A zero pattern: dimensions plus one placement per unknown.
/// `placements[k]` is the cell of unknown `x(k+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    m: usize,
    p: usize,
    q: usize,
    placements: Vec<Placement>,
}

impl Pattern {
    pub fn new(
        m: usize,
        p: usize,
        q: usize,
        placements: Vec<Placement>,
    ) -> Result<Self, PatternError> {
        for (k, pl) in placements.iter().enumerate() {
            let cols = match pl.side {
                Side::A => p,
                Side::B => q,
            };
            if pl.row == 0 || pl.row > m || pl.col == 0 || pl.col > cols {
                return Err(PatternError::PlacementOutOfRange {
                    index: k + 1,
                    strip: pl.side,
                    rows: m,
                    cols,
                });
            }
        }
        for (k, pl) in placements.iter().enumerate() {
            for (k2, pl2) in placements.iter().enumerate().skip(k + 1) {
                if pl == pl2 {
                    return Err(PatternError::SharedCell {
                        first: k + 1,
                        second: k2 + 1,
                    });
                }
            }
        }
        Ok(Self { m, p, q, placements })
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    /// Width of the A strip.
    pub fn a_cols(&self) -> usize {
        self.p
    }

    /// Width of the B strip.
    pub fn b_cols(&self) -> usize {
        self.q
    }

    /// Number of unknowns.
    pub fn unknowns(&self) -> usize {
        self.placements.len()
    }

    /// Placement of unknown `x<index>` (1-based).
    pub fn placement(&self, index: usize) -> Placement {
        self.placements[index - 1]
    }

    pub fn placements(&self) -> &[Placement] {
        &self.placements
    }

    /// Grid of cells as `Some(unknown index)` / `None`, row-major over the
    /// full width p+q (A strip first).
    pub fn cell_grid(&self) -> Vec<Vec<Option<usize>>> {
        let mut grid = vec![vec![None; self.p + self.q]; self.m];
        for (k, pl) in self.placements.iter().enumerate() {
            let col = match pl.side {
                Side::A => pl.col - 1,
                Side::B => self.p + pl.col - 1,
            };
            grid[pl.row - 1][col] = Some(k + 1);
        }
        grid
    }

    /// Parse the text format. See the module doc for the grammar.
    pub fn parse(text: &str) -> Result<Self, PatternError> {
        let mut lines = significant_lines(text);
        let Some((header_no, header)) = lines.next() else {
            return Err(syntax(1, 1, "empty input: expected a 'pattern m p q' header"));
        };
        let tokens = tokenize(header);
        if tokens.len() != 4 || tokens[0].1 != "pattern" {
            let (col, _) = tokens.first().copied().unwrap_or((1, ""));
            return Err(syntax(header_no, col, "expected header 'pattern <m> <p> <q>'"));
        }
        let dim = |(col, tok): (usize, &str), what: &str| {
            tok.parse::<usize>()
                .map_err(|_| syntax(header_no, col, &format!("invalid {what} '{tok}'")))
        };
        let m = dim(tokens[1], "row count")?;
        let p = dim(tokens[2], "A width")?;
        let q = dim(tokens[3], "B width")?;

        let mut placements: Vec<(usize, Placement)> = Vec::new();
        for row in 1..=m {
            let Some((line_no, line)) = lines.next() else {
                return Err(syntax(
                    header_no,
                    1,
                    &format!("expected {m} grid rows, found {}", row - 1),
                ));
            };
            let tokens = tokenize(line);
            let sep = tokens.iter().position(|&(_, t)| t == "|");
            let Some(sep) = sep else {
                return Err(PatternError::MissingSeparator { line: line_no });
            };
            if let Some(extra) = tokens[sep + 1..].iter().find(|&&(_, t)| t == "|") {
                return Err(syntax(line_no, extra.0, "more than one '|' separator"));
            }
            let (left, right) = (&tokens[..sep], &tokens[sep + 1..]);
            if left.len() != p {
                return Err(PatternError::RaggedRow {
                    line: line_no,
                    strip: Side::A,
                    expected: p,
                    found: left.len(),
                });
            }
            if right.len() != q {
                return Err(PatternError::RaggedRow {
                    line: line_no,
                    strip: Side::B,
                    expected: q,
                    found: right.len(),
                });
            }
            let mut place = |side, toks: &[(usize, &str)]| -> Result<(), PatternError> {
                for (i, &(col, tok)) in toks.iter().enumerate() {
                    if tok == "." {
                        continue;
                    }
                    let index = parse_unknown_token(tok)
                        .ok_or_else(|| syntax(line_no, col, &format!("expected '.' or 'x<k>', found '{tok}'")))?;
                    placements.push((index, Placement { side, row, col: i + 1 }));
                }
                Ok(())
            };
            place(Side::A, left)?;
            place(Side::B, right)?;
        }
        if let Some((line_no, line)) = lines.next() {
            let col = tokenize(line).first().map_or(1, |&(c, _)| c);
            return Err(syntax(line_no, col, "unexpected content after the grid"));
        }

        let n = placements.len();
        let mut by_index: Vec<Option<Placement>> = vec![None; n];
        for (index, pl) in placements {
            if index > n {
                // Some smaller index must then be missing.
                continue;
            }
            if by_index[index - 1].is_some() {
                return Err(PatternError::DuplicateUnknown { index });
            }
            by_index[index - 1] = Some(pl);
        }
        let mut ordered = Vec::with_capacity(n);
        for (i, slot) in by_index.into_iter().enumerate() {
            match slot {
                Some(pl) => ordered.push(pl),
                None => return Err(PatternError::IndexGap { count: n, missing: i + 1 }),
            }
        }
        Pattern::new(m, p, q, ordered)
    }

    /// Canonical text rendering; `parse(render(p)) == p`.
    pub fn render(&self) -> String {
        let grid = self.cell_grid();
        let mut out = format!("pattern {} {} {}\n", self.m, self.p, self.q);
        for row in &grid {
            let token = |cell: &Option<usize>| match cell {
                Some(k) => format!("x{k}"),
                None => ".".to_owned(),
            };
            let left: Vec<String> = row[..self.p].iter().map(token).collect();
            let right: Vec<String> = row[self.p..].iter().map(token).collect();
            let mut parts = left;
            parts.push("|".to_owned());
            parts.extend(right);
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }

    /// The matrix obtained by substituting assignment values for the
    /// unknowns: a zero m x (p+q) matrix (split after column p) whose cell
    /// for unknown k holds `values[k-1]`.
    pub fn instantiate<F: Field>(
        &self,
        assignment: &Assignment<F>,
    ) -> Result<ExactMatrix<F>, PatternError> {
        if assignment.len() != self.unknowns() {
            return Err(PatternError::LengthMismatch {
                expected: self.unknowns(),
                found: assignment.len(),
            });
        }
        let field = assignment.field().clone();
        let mut m = ExactMatrix::zero(field, self.m, self.p + self.q, self.p);
        for (k, pl) in self.placements.iter().enumerate() {
            let col = match pl.side {
                Side::A => pl.col - 1,
                Side::B => self.p + pl.col - 1,
            };
            m.set(pl.row - 1, col, assignment.values()[k].clone());
        }
        Ok(m)
    }

    /// 0/1 vector with ones exactly at the given 1-based unknown indices.
    pub fn characteristic_vector(
        &self,
        indices: &BTreeSet<usize>,
    ) -> Result<CharacteristicVector, PatternError> {
        let n = self.unknowns();
        let mut bits = vec![false; n];
        for &index in indices {
            if index == 0 || index > n {
                return Err(PatternError::EdgeOutOfRange { index, count: n });
            }
            bits[index - 1] = true;
        }
        Ok(CharacteristicVector { bits })
    }
}

fn syntax(line: usize, column: usize, message: &str) -> PatternError {
    PatternError::Syntax {
        line,
        column,
        message: message.to_owned(),
    }
}

/// Lines with comments stripped and blanks dropped, 1-based numbering kept.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

/// Whitespace-separated tokens with their 1-based starting columns.
fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_unknown_token(tok: &str) -> Option<usize> {
    let digits = tok.strip_prefix('x')?;
    if digits.is_empty() || digits.starts_with('+') {
        return None;
    }
    let index: usize = digits.parse().ok()?;
    if index == 0 {
        None
    } else {
        Some(index)
    }
}

/// Exact values for the unknowns over a declared field.
#[derive(Debug, Clone, PartialEq)]
pub struct Assignment<F: Field> {
    field: F,
    values: Vec<F::Elem>,
}

impl<F: Field> Assignment<F> {
    pub fn new(field: F, values: Vec<F::Elem>) -> Self {
        Self { field, values }
    }

    /// Embed rational values into the field; over GF(p) this fails when a
    /// denominator is divisible by p.
    pub fn from_rationals(field: F, values: &[BigRational]) -> Result<Self, FieldError> {
        let values = values
            .iter()
            .map(|v| field.from_rational(v))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { field, values })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn values(&self) -> &[F::Elem] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Parse an assignment file: one significant line `a = v1 v2 ... vn`.
pub fn parse_assignment(text: &str) -> Result<Vec<BigRational>, PatternError> {
    let mut lines = significant_lines(text);
    let Some((line_no, line)) = lines.next() else {
        return Err(syntax(1, 1, "empty input: expected 'a = v1 v2 ...'"));
    };
    if let Some((extra_no, extra)) = lines.next() {
        let col = tokenize(extra).first().map_or(1, |&(c, _)| c);
        return Err(syntax(extra_no, col, "expected a single assignment line"));
    }
    let tokens = tokenize(line);
    if tokens.len() < 2 || tokens[0].1 != "a" || tokens[1].1 != "=" {
        let (col, _) = tokens.first().copied().unwrap_or((1, ""));
        return Err(syntax(line_no, col, "expected 'a = v1 v2 ...'"));
    }
    tokens[2..]
        .iter()
        .map(|&(col, tok)| {
            parse_exact_value(tok)
                .ok_or_else(|| syntax(line_no, col, &format!("invalid exact value '{tok}'")))
        })
        .collect()
}

/// Parse bare whitespace-separated exact values, e.g. `1 -2 3/4`.
pub fn parse_values(text: &str) -> Result<Vec<BigRational>, PatternError> {
    tokenize(text)
        .iter()
        .map(|&(col, tok)| {
            parse_exact_value(tok)
                .ok_or_else(|| syntax(1, col, &format!("invalid exact value '{tok}'")))
        })
        .collect()
}

/// `123`, `-4`, or `num/den` with a nonzero denominator.
fn parse_exact_value(tok: &str) -> Option<BigRational> {
    match tok.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.parse().ok()?;
            let den: BigInt = den.parse().ok()?;
            if den.is_zero() {
                None
            } else {
                Some(BigRational::new(num, den))
            }
        }
        None => {
            let num: BigInt = tok.parse().ok()?;
            Some(BigRational::from_integer(num))
        }
    }
}

/// 0/1 marker vector over the unknowns of a pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicVector {
    bits: Vec<bool>,
}

impl CharacteristicVector {
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// As an assignment: 1 where marked, 0 elsewhere.
    pub fn to_assignment<F: Field>(&self, field: F) -> Assignment<F> {
        let values = self
            .bits
            .iter()
            .map(|&b| if b { field.one() } else { field.zero() })
            .collect();
        Assignment::new(field, values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use num_traits::One;

    pub(crate) const GRID_4X5: &str = "\
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
    fn parses_the_four_row_grid() {
        let pat = Pattern::parse(GRID_4X5).unwrap();
        assert_eq!((pat.rows(), pat.a_cols(), pat.b_cols()), (4, 2, 3));
        assert_eq!(pat.unknowns(), 9);
        assert_eq!(pat.placement(1), Placement { side: Side::A, row: 2, col: 1 });
        assert_eq!(pat.placement(4), Placement { side: Side::B, row: 1, col: 1 });
        assert_eq!(pat.placement(7), Placement { side: Side::B, row: 1, col: 2 });
        assert_eq!(pat.placement(9), Placement { side: Side::B, row: 3, col: 3 });
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let text = "# title\n\npattern 1 1 1  # dims\n x1 | . # row\n\n# trailing\n";
        let pat = Pattern::parse(text).unwrap();
        assert_eq!(pat.unknowns(), 1);
    }

    #[test]
    fn round_trips_through_render() {
        for text in [GRID_4X5, "pattern 0 0 0\n", "pattern 2 0 2\n| . x1\n| x2 .\n"] {
            let pat = Pattern::parse(text).unwrap();
            let again = Pattern::parse(&pat.render()).unwrap();
            assert_eq!(pat, again);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let dup = "pattern 1 2 0\nx1 x1 |\n";
        assert_eq!(
            Pattern::parse(dup).unwrap_err(),
            PatternError::DuplicateUnknown { index: 1 }
        );

        let gap = "pattern 1 2 0\nx1 x3 |\n";
        assert_eq!(
            Pattern::parse(gap).unwrap_err(),
            PatternError::IndexGap { count: 2, missing: 2 }
        );

        let ragged = "pattern 1 2 1\nx1 | x2\n";
        assert_eq!(
            Pattern::parse(ragged).unwrap_err(),
            PatternError::RaggedRow { line: 2, strip: Side::A, expected: 2, found: 1 }
        );

        let missing_sep = "pattern 1 1 1\nx1 x2\n";
        assert_eq!(
            Pattern::parse(missing_sep).unwrap_err(),
            PatternError::MissingSeparator { line: 2 }
        );

        let junk = "pattern 1 1 0\ny2 |\n";
        assert!(matches!(
            Pattern::parse(junk).unwrap_err(),
            PatternError::Syntax { line: 2, .. }
        ));

        let short = "pattern 2 1 0\nx1 |\n";
        assert!(matches!(
            Pattern::parse(short).unwrap_err(),
            PatternError::Syntax { .. }
        ));

        let trailing = "pattern 1 1 0\nx1 |\nx2 |\n";
        assert!(matches!(
            Pattern::parse(trailing).unwrap_err(),
            PatternError::Syntax { line: 3, .. }
        ));
    }

    #[test]
    fn instantiate_places_values() {
        let pat = Pattern::parse(GRID_4X5).unwrap();
        let values: Vec<BigRational> = (1..=9).map(q).collect();
        let a = Assignment::from_rationals(Rationals, &values).unwrap();
        let m = pat.instantiate(&a).unwrap();
        assert_eq!((m.rows(), m.cols(), m.split()), (4, 5, 2));
        assert_eq!(*m.get(1, 0), q(1)); // x1
        assert_eq!(*m.get(0, 2), q(4)); // x4
        assert_eq!(*m.get(3, 1), q(3)); // x3
        assert_eq!(*m.get(2, 4), q(9)); // x9
        assert_eq!(*m.get(0, 0), q(0)); // structural zero

        let short = Assignment::from_rationals(Rationals, &values[..3]).unwrap();
        assert_eq!(
            pat.instantiate(&short).unwrap_err(),
            PatternError::LengthMismatch { expected: 9, found: 3 }
        );
    }

    #[test]
    fn characteristic_vector_marks_the_right_slots() {
        let pat = Pattern::parse(GRID_4X5).unwrap();
        let set: BTreeSet<usize> = [1, 2, 4, 8, 9].into_iter().collect();
        let cv = pat.characteristic_vector(&set).unwrap();
        assert_eq!(
            cv.bits(),
            &[true, true, false, true, false, false, false, true, true]
        );
        assert_eq!(cv.ones(), 5);
        let a = cv.to_assignment(Rationals);
        assert!(a.values()[0].is_one());
        assert!(a.values()[2].is_zero());
    }

    #[test]
    fn marker_matrix_of_a_matching_has_single_entries_per_line() {
        // {x1, x3, x4, x9} touches four distinct rows and four distinct
        // columns, so its 0/1 matrix has at most one 1 per row and column.
        let pat = Pattern::parse(GRID_4X5).unwrap();
        let set: BTreeSet<usize> = [1, 3, 4, 9].into_iter().collect();
        let cv = pat.characteristic_vector(&set).unwrap();
        let m = pat.instantiate(&cv.to_assignment(Rationals)).unwrap();
        for i in 0..m.rows() {
            let nonzero = (0..m.cols()).filter(|&j| !m.get(i, j).is_zero()).count();
            assert!(nonzero <= 1);
        }
        for j in 0..m.cols() {
            let nonzero = (0..m.rows()).filter(|&i| !m.get(i, j).is_zero()).count();
            assert!(nonzero <= 1);
        }
    }

    #[test]
    fn assignment_values_parse_exactly() {
        let vals = parse_assignment("# c\na = 1 2 3/4 -5 0 -7/2\n").unwrap();
        assert_eq!(vals.len(), 6);
        assert_eq!(vals[2], BigRational::new(BigInt::from(3), BigInt::from(4)));
        assert_eq!(vals[3], q(-5));
        assert_eq!(vals[5], BigRational::new(BigInt::from(-7), BigInt::from(2)));

        assert!(parse_assignment("a = 1/0\n").is_err());
        assert!(parse_assignment("b = 1\n").is_err());
        assert!(parse_assignment("a = 1\na = 2\n").is_err());
        assert_eq!(parse_assignment("a =\n").unwrap(), vec![]);
    }

    #[test]
    fn characteristic_vector_rejects_out_of_range() {
        let pat = Pattern::parse("pattern 1 1 1\nx1 | x2\n").unwrap();
        let bad: BTreeSet<usize> = [3].into_iter().collect();
        assert_eq!(
            pat.characteristic_vector(&bad).unwrap_err(),
            PatternError::EdgeOutOfRange { index: 3, count: 2 }
        );
    }

    #[test]
    fn shared_cell_rejected_by_constructor() {
        let pl = Placement { side: Side::A, row: 1, col: 1 };
        let err = Pattern::new(1, 1, 0, vec![pl, pl]).unwrap_err();
        assert_eq!(err, PatternError::SharedCell { first: 1, second: 2 });
    }
}
