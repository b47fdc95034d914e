//! Canonical block form of a strip matrix and exact reductions to it.
//!
//! Every m x (p+q) strip matrix [A | B] is equivalent, under invertible S on
//! the rows and invertible R1, R2 on the columns of the two strips, to a
//! matrix determined by a triple (r, s, t):
//!
//! ```text
//!       A strip               B strip
//!   [ I_r      0    0 ]   [ 0    I_r  0 ]      r rows
//!   [ 0        I_s  0 ]   [ 0    0    0 ]      s rows
//!   [ 0        0    0 ]   [ I_t  0    0 ]      t rows
//!   [ 0        0    0 ]   [ 0    0    0 ]      remaining rows
//! ```
//!
//! so r + s = rank A, r + t = rank B, r + s + t = rank [A | B].
//! [`reduce_numeric`] computes this form for a concrete matrix and returns
//! the witnessing S, R1, R2; [`generic_form`] and
//! [`permutations_to_block_form`] produce the 0/1 representative of a whole
//! pattern from an optimal matchbox pair.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::graph::{BipartiteGraph, Matchbox, MatchboxKind};
use crate::matrix::ExactMatrix;
use crate::pattern::{Pattern, PatternError, Side};

/// The block sizes of the canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalTriple {
    pub r: usize,
    pub s: usize,
    pub t: usize,
}

impl CanonicalTriple {
    pub fn rank_a(&self) -> usize {
        self.r + self.s
    }

    pub fn rank_b(&self) -> usize {
        self.r + self.t
    }

    pub fn rank_m(&self) -> usize {
        self.r + self.s + self.t
    }
}

/// The canonical representative for given dimensions and triple.
pub fn canonical_bipartite<F: Field>(
    field: &F,
    rows: usize,
    a_cols: usize,
    b_cols: usize,
    triple: CanonicalTriple,
) -> ExactMatrix<F> {
    let CanonicalTriple { r, s, t } = triple;
    assert!(r + s <= a_cols, "A strip too narrow for the triple");
    assert!(r + t <= b_cols, "B strip too narrow for the triple");
    assert!(r + s + t <= rows, "not enough rows for the triple");
    let mut m = ExactMatrix::zero(field.clone(), rows, a_cols + b_cols, a_cols);
    for i in 0..r + s {
        m.set(i, i, field.one());
    }
    for i in 0..r {
        m.set(i, a_cols + t + i, field.one());
    }
    for j in 0..t {
        m.set(r + s + j, a_cols + j, field.one());
    }
    m
}

/// Triple attached to a largest-left / largest-right pair: r is the number
/// of shared vertices, s and t the leftover sizes.
pub fn triple_from_pair(
    graph: &BipartiteGraph,
    a: &Matchbox,
    b: &Matchbox,
) -> CanonicalTriple {
    assert_eq!(a.kind(), MatchboxKind::Left, "first matchbox must be left");
    assert_eq!(b.kind(), MatchboxKind::Right, "second matchbox must be right");
    let r = graph.common_vertex_count(a, b);
    CanonicalTriple { r, s: a.size() - r, t: b.size() - r }
}

/// The 0/1 representative of the family: the pattern instantiated at the
/// characteristic vector of the union of the pair.
pub fn generic_form<F: Field>(
    field: &F,
    pattern: &Pattern,
    a: &Matchbox,
    b: &Matchbox,
) -> Result<ExactMatrix<F>, PatternError> {
    let union: BTreeSet<usize> = a.edges().union(b.edges()).copied().collect();
    let cv = pattern.characteristic_vector(&union)?;
    pattern.instantiate(&cv.to_assignment(field.clone()))
}

/// Row and per-strip column orders (new position -> old 0-based index) that
/// carry the generic representative of an optimal pair into the canonical
/// form, with no arithmetic at all.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockPermutations {
    pub rows: Vec<usize>,
    pub a_cols: Vec<usize>,
    pub b_cols: Vec<usize>,
}

impl BlockPermutations {
    pub fn apply<F: Field>(&self, m: &ExactMatrix<F>) -> ExactMatrix<F> {
        assert_eq!(m.split(), self.a_cols.len());
        let p = self.a_cols.len();
        let cols: Vec<usize> = self
            .a_cols
            .iter()
            .copied()
            .chain(self.b_cols.iter().map(|&c| p + c))
            .collect();
        m.permuted(&self.rows, &cols)
    }
}

/// Permutations sorting the rows into [shared | left-only | right-only |
/// unmatched] and pairing each identity block with its rows; leftover
/// columns keep their relative order.
pub fn permutations_to_block_form(
    pattern: &Pattern,
    a: &Matchbox,
    b: &Matchbox,
) -> BlockPermutations {
    let m = pattern.rows();
    let p = pattern.a_cols();
    let q = pattern.b_cols();
    let mut a_col_of_row: BTreeMap<usize, usize> = BTreeMap::new();
    let mut b_col_of_row: BTreeMap<usize, usize> = BTreeMap::new();
    for &e in a.edges() {
        let pl = pattern.placement(e);
        debug_assert_eq!(pl.side, Side::A);
        a_col_of_row.insert(pl.row - 1, pl.col - 1);
    }
    for &e in b.edges() {
        let pl = pattern.placement(e);
        debug_assert_eq!(pl.side, Side::B);
        b_col_of_row.insert(pl.row - 1, pl.col - 1);
    }

    let shared: Vec<usize> = a_col_of_row
        .keys()
        .filter(|r| b_col_of_row.contains_key(r))
        .copied()
        .collect();
    let a_only: Vec<usize> = a_col_of_row
        .keys()
        .filter(|r| !b_col_of_row.contains_key(r))
        .copied()
        .collect();
    let b_only: Vec<usize> = b_col_of_row
        .keys()
        .filter(|r| !a_col_of_row.contains_key(r))
        .copied()
        .collect();
    let mut rows: Vec<usize> = Vec::with_capacity(m);
    rows.extend(&shared);
    rows.extend(&a_only);
    rows.extend(&b_only);
    let touched: BTreeSet<usize> = rows.iter().copied().collect();
    rows.extend((0..m).filter(|r| !touched.contains(r)));

    let mut a_cols: Vec<usize> = shared
        .iter()
        .chain(&a_only)
        .map(|r| a_col_of_row[r])
        .collect();
    let used: BTreeSet<usize> = a_cols.iter().copied().collect();
    a_cols.extend((0..p).filter(|c| !used.contains(c)));

    let mut b_cols: Vec<usize> = b_only
        .iter()
        .chain(&shared)
        .map(|r| b_col_of_row[r])
        .collect();
    let used: BTreeSet<usize> = b_cols.iter().copied().collect();
    b_cols.extend((0..q).filter(|c| !used.contains(c)));

    BlockPermutations { rows, a_cols, b_cols }
}

/// Invertible witnesses carrying a concrete matrix to its canonical form:
/// `s * A * r1` next to `s * B * r2` equals `canonical`, which is the
/// canonical representative for `triple`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionCertificate<F: Field> {
    pub s: ExactMatrix<F>,
    pub r1: ExactMatrix<F>,
    pub r2: ExactMatrix<F>,
    pub triple: CanonicalTriple,
    pub canonical: ExactMatrix<F>,
}

impl<F: Field> ReductionCertificate<F> {
    /// Recompose and compare; also checks that the three witnesses are
    /// square and invertible and that `canonical` really is the canonical
    /// representative of `triple`. Exact arithmetic, no tolerance.
    pub fn is_sound_for(&self, original: &ExactMatrix<F>) -> bool {
        let f = original.field();
        let invertible = |m: &ExactMatrix<F>| m.rows() == m.cols() && !f.is_zero(&m.determinant());
        if !invertible(&self.s) || !invertible(&self.r1) || !invertible(&self.r2) {
            return false;
        }
        let a = original.a_block();
        let b = original.b_block();
        let lhs = self
            .s
            .multiply(&a)
            .multiply(&self.r1)
            .hstack(&self.s.multiply(&b).multiply(&self.r2));
        let p = original.split();
        let q = original.cols() - p;
        lhs == self.canonical
            && self.canonical
                == canonical_bipartite(f, original.rows(), p, q, self.triple)
    }
}

/// Tracks the working matrix plus the three witnesses; every elementary
/// operation is mirrored on the matching companion.
struct Workbench<F: Field> {
    field: F,
    w: ExactMatrix<F>,
    s: ExactMatrix<F>,
    r1: ExactMatrix<F>,
    r2: ExactMatrix<F>,
    p: usize,
}

impl<F: Field> Workbench<F> {
    fn row_swap(&mut self, i: usize, j: usize) {
        self.w.row_swap(i, j);
        self.s.row_swap(i, j);
    }

    fn row_scale(&mut self, i: usize, c: &F::Elem) {
        self.w.row_scale(i, c);
        self.s.row_scale(i, c);
    }

    fn row_add(&mut self, dst: usize, src: usize, c: &F::Elem) {
        self.w.row_add(dst, src, c);
        self.s.row_add(dst, src, c);
    }

    fn a_col_swap(&mut self, i: usize, j: usize) {
        self.w.col_swap(i, j);
        self.r1.col_swap(i, j);
    }

    fn a_col_scale(&mut self, j: usize, c: &F::Elem) {
        self.w.col_scale(j, c);
        self.r1.col_scale(j, c);
    }

    fn a_col_add(&mut self, dst: usize, src: usize, c: &F::Elem) {
        self.w.col_add(dst, src, c);
        self.r1.col_add(dst, src, c);
    }

    fn b_col_swap(&mut self, i: usize, j: usize) {
        self.w.col_swap(self.p + i, self.p + j);
        self.r2.col_swap(i, j);
    }

    fn b_col_add(&mut self, dst: usize, src: usize, c: &F::Elem) {
        self.w.col_add(self.p + dst, self.p + src, c);
        self.r2.col_add(dst, src, c);
    }

    // Row operations on the rows of the finished identity block of A,
    // compensated by A-column operations so that A stays put. For a swap,
    // swapping the same columns restores A; for a scale, the column takes
    // the inverse factor; for row[dst] += c * row[src], entry (dst, src) of
    // A becomes c and col[src] -= c * col[dst] clears it again.

    fn comp_row_swap(&mut self, i: usize, j: usize) {
        self.row_swap(i, j);
        self.a_col_swap(i, j);
    }

    fn comp_row_scale(&mut self, i: usize, c: &F::Elem, c_inv: &F::Elem) {
        self.row_scale(i, c);
        self.a_col_scale(i, c_inv);
    }

    fn comp_row_add(&mut self, dst: usize, src: usize, c: &F::Elem) {
        self.row_add(dst, src, c);
        let neg = self.field.neg(c);
        self.a_col_add(src, dst, &neg);
    }
}

/// Exact reduction of one strip matrix to the canonical form, together with
/// the invertible witnesses. Pivots are always the first nonzero entry of
/// the remaining block in row-major scan order, so the result is
/// deterministic.
pub fn reduce_numeric<F: Field>(m: &ExactMatrix<F>) -> ReductionCertificate<F> {
    let field = m.field().clone();
    let rows = m.rows();
    let p = m.split();
    let q = m.cols() - p;
    let mut wb = Workbench {
        field: field.clone(),
        w: m.clone(),
        s: ExactMatrix::identity(field.clone(), rows),
        r1: ExactMatrix::identity(field.clone(), p),
        r2: ExactMatrix::identity(field.clone(), q),
        p,
    };
    let f = field;

    // Phase 1: A -> I_h (+) 0, clearing each pivot's row and column.
    let mut h = 0;
    loop {
        let Some((pi, pj)) = first_nonzero(&wb.w, h..rows, h..p, 0) else {
            break;
        };
        wb.row_swap(h, pi);
        wb.a_col_swap(h, pj);
        let inv = f.inv(wb.w.get(h, h)).expect("pivot is nonzero");
        wb.row_scale(h, &inv);
        for i in 0..rows {
            if i == h {
                continue;
            }
            let c = wb.w.get(i, h).clone();
            if !f.is_zero(&c) {
                wb.row_add(i, h, &f.neg(&c));
            }
        }
        for j in 0..p {
            if j == h {
                continue;
            }
            let c = wb.w.get(h, j).clone();
            if !f.is_zero(&c) {
                wb.a_col_add(j, h, &f.neg(&c));
            }
        }
        h += 1;
    }

    // Phase 2: the rows below h carry zeros in A, so ordinary elimination
    // brings their B part to I_t (+) 0.
    let mut t = 0;
    loop {
        let Some((pi, pj)) = first_nonzero(&wb.w, h + t..rows, t..q, p) else {
            break;
        };
        wb.row_swap(h + t, pi);
        wb.b_col_swap(t, pj);
        let inv = f.inv(wb.w.get(h + t, p + t)).expect("pivot is nonzero");
        wb.row_scale(h + t, &inv);
        for i in h..rows {
            if i == h + t {
                continue;
            }
            let c = wb.w.get(i, p + t).clone();
            if !f.is_zero(&c) {
                wb.row_add(i, h + t, &f.neg(&c));
            }
        }
        for j in 0..q {
            if j == t {
                continue;
            }
            let c = wb.w.get(h + t, p + j).clone();
            if !f.is_zero(&c) {
                wb.b_col_add(j, t, &f.neg(&c));
            }
        }
        t += 1;
    }

    // Phase 3: the I_t rows clear everything above them without touching A.
    for i in 0..h {
        for j in 0..t {
            let c = wb.w.get(i, p + j).clone();
            if !f.is_zero(&c) {
                wb.row_add(i, h + j, &f.neg(&c));
            }
        }
    }

    // Phase 4: what is left of B in the top rows occupies columns t..q;
    // reduce it to I_r (+) 0 with compensated row operations.
    let mut r = 0;
    loop {
        let Some((pi, pj)) = first_nonzero(&wb.w, r..h, t + r..q, p) else {
            break;
        };
        wb.comp_row_swap(r, pi);
        wb.b_col_swap(t + r, pj);
        let piv = wb.w.get(r, p + t + r).clone();
        let inv = f.inv(&piv).expect("pivot is nonzero");
        wb.comp_row_scale(r, &inv, &piv);
        for i in 0..h {
            if i == r {
                continue;
            }
            let c = wb.w.get(i, p + t + r).clone();
            if !f.is_zero(&c) {
                wb.comp_row_add(i, r, &f.neg(&c));
            }
        }
        for j in t..q {
            if j == t + r {
                continue;
            }
            let c = wb.w.get(r, p + j).clone();
            if !f.is_zero(&c) {
                wb.b_col_add(j, t + r, &f.neg(&c));
            }
        }
        r += 1;
    }

    // The pivot block of B sits at columns t..t+r; the canonical form wants
    // row i paired with column t+i, which is already the case.
    let triple = CanonicalTriple { r, s: h - r, t };
    debug_assert_eq!(
        wb.w,
        canonical_bipartite(&f, rows, p, q, triple),
        "reduction must land exactly on the canonical representative"
    );
    ReductionCertificate {
        s: wb.s,
        r1: wb.r1,
        r2: wb.r2,
        triple,
        canonical: wb.w,
    }
}

/// First nonzero entry of `m` in the given row/column ranges, scanning rows
/// outer and columns inner; `col_offset` shifts the column window.
fn first_nonzero<F: Field>(
    m: &ExactMatrix<F>,
    row_range: std::ops::Range<usize>,
    col_range: std::ops::Range<usize>,
    col_offset: usize,
) -> Option<(usize, usize)> {
    let f = m.field();
    for i in row_range {
        for j in col_range.clone() {
            if !f.is_zero(m.get(i, col_offset + j)) {
                return Some((i, j));
            }
        }
    }
    None
}
