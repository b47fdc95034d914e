//! Dense exact matrices with a remembered column split `[A | B]`.

use crate::field::Field;

/// Row-major dense matrix over an exact field. `split` marks where the A
/// strip ends and the B strip begins; plain square matrices use
/// `split == cols`.
#[derive(Debug, Clone)]
pub struct ExactMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    split: usize,
    entries: Vec<F::Elem>,
}

impl<F: Field> PartialEq for ExactMatrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.split == other.split
            && self.entries == other.entries
    }
}

impl<F: Field> ExactMatrix<F> {
    pub fn zero(field: F, rows: usize, cols: usize, split: usize) -> Self {
        assert!(split <= cols, "split {split} exceeds column count {cols}");
        let entries = vec![field.zero(); rows * cols];
        Self { field, rows, cols, split, entries }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zero(field, n, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>, split: usize) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        assert!(split <= ncols);
        let entries = rows.into_iter().flatten().collect();
        Self { field, rows: nrows, cols: ncols, split, entries }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn split(&self) -> usize {
        self.split
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.field.is_zero(e))
    }

    /// Left strip (columns `0..split`), as a standalone matrix.
    pub fn a_block(&self) -> Self {
        self.column_range(0, self.split)
    }

    /// Right strip (columns `split..cols`).
    pub fn b_block(&self) -> Self {
        self.column_range(self.split, self.cols)
    }

    fn column_range(&self, from: usize, to: usize) -> Self {
        let mut out = Self::zero(self.field.clone(), self.rows, to - from, to - from);
        for i in 0..self.rows {
            for j in from..to {
                out.set(i, j - from, self.get(i, j).clone());
            }
        }
        out
    }

    /// Copy of the listed rows and columns, in the listed order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zero(self.field.clone(), rows.len(), cols.len(), cols.len());
        for (i, &ri) in rows.iter().enumerate() {
            for (j, &cj) in cols.iter().enumerate() {
                out.set(i, j, self.get(ri, cj).clone());
            }
        }
        out
    }

    pub fn multiply(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = Self::zero(self.field.clone(), self.rows, rhs.cols, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if self.field.is_zero(a) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let add = self.field.mul(a, rhs.get(k, j));
                    let cur = self.field.add(out.get(i, j), &add);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Horizontal join; the seam becomes the column split.
    pub fn hstack(&self, right: &Self) -> Self {
        assert_eq!(self.rows, right.rows);
        let mut out = Self::zero(
            self.field.clone(),
            self.rows,
            self.cols + right.cols,
            self.cols,
        );
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..right.cols {
                out.set(i, self.cols + j, right.get(i, j).clone());
            }
        }
        out
    }

    /// Rank by Gaussian elimination on a working copy.
    pub fn rank(&self) -> usize {
        let f = self.field.clone();
        let mut w = self.entries.clone();
        let at = |w: &Vec<F::Elem>, i: usize, j: usize| w[i * self.cols + j].clone();
        let mut r = 0;
        for col in 0..self.cols {
            let Some(pivot) = (r..self.rows).find(|&i| !f.is_zero(&at(&w, i, col))) else {
                continue;
            };
            for j in 0..self.cols {
                w.swap(r * self.cols + j, pivot * self.cols + j);
            }
            let inv = f.inv(&at(&w, r, col)).expect("pivot is nonzero");
            for i in r + 1..self.rows {
                let factor = f.mul(&at(&w, i, col), &inv);
                if f.is_zero(&factor) {
                    continue;
                }
                for j in col..self.cols {
                    let sub = f.mul(&factor, &at(&w, r, j));
                    w[i * self.cols + j] = f.sub(&at(&w, i, j), &sub);
                }
            }
            r += 1;
            if r == self.rows {
                break;
            }
        }
        r
    }

    /// Exact determinant of a square matrix.
    pub fn determinant(&self) -> F::Elem {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let f = self.field.clone();
        let n = self.rows;
        let mut w = self.entries.clone();
        let at = |w: &Vec<F::Elem>, i: usize, j: usize| w[i * n + j].clone();
        let mut det = f.one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&i| !f.is_zero(&at(&w, i, col))) else {
                return f.zero();
            };
            if pivot != col {
                for j in 0..n {
                    w.swap(col * n + j, pivot * n + j);
                }
                det = f.neg(&det);
            }
            let p = at(&w, col, col);
            det = f.mul(&det, &p);
            let inv = f.inv(&p).expect("pivot is nonzero");
            for i in col + 1..n {
                let factor = f.mul(&at(&w, i, col), &inv);
                if f.is_zero(&factor) {
                    continue;
                }
                for j in col..n {
                    let sub = f.mul(&factor, &at(&w, col, j));
                    w[i * n + j] = f.sub(&at(&w, i, j), &sub);
                }
            }
        }
        det
    }

    /// Reorder rows and columns: entry `(i, j)` of the result is entry
    /// `(rows[i], cols[j])` of `self`. The split is preserved, so `cols`
    /// must keep strip membership intact (checked).
    pub fn permuted(&self, rows: &[usize], cols: &[usize]) -> Self {
        assert_eq!(rows.len(), self.rows);
        assert_eq!(cols.len(), self.cols);
        for (j, &c) in cols.iter().enumerate() {
            assert_eq!(j < self.split, c < self.split, "column crosses the strip seam");
        }
        let mut out = Self::zero(self.field.clone(), self.rows, self.cols, self.split);
        for (i, &ri) in rows.iter().enumerate() {
            for (j, &cj) in cols.iter().enumerate() {
                out.set(i, j, self.get(ri, cj).clone());
            }
        }
        out
    }

    pub fn render_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }

    // Elementary operations, used by the reduction and tracked on the
    // certificate companions.

    pub(crate) fn row_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub(crate) fn row_scale(&mut self, i: usize, c: &F::Elem) {
        for j in 0..self.cols {
            let v = self.field.mul(self.get(i, j), c);
            self.set(i, j, v);
        }
    }

    /// row[dst] += c * row[src]
    pub(crate) fn row_add(&mut self, dst: usize, src: usize, c: &F::Elem) {
        assert_ne!(dst, src);
        for j in 0..self.cols {
            let v = self.field.add(self.get(dst, j), &self.field.mul(self.get(src, j), c));
            self.set(dst, j, v);
        }
    }

    pub(crate) fn col_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    pub(crate) fn col_scale(&mut self, j: usize, c: &F::Elem) {
        for i in 0..self.rows {
            let v = self.field.mul(self.get(i, j), c);
            self.set(i, j, v);
        }
    }

    /// col[dst] += c * col[src]
    pub(crate) fn col_add(&mut self, dst: usize, src: usize, c: &F::Elem) {
        assert_ne!(dst, src);
        for i in 0..self.rows {
            let v = self.field.add(self.get(i, dst), &self.field.mul(self.get(i, src), c));
            self.set(i, dst, v);
        }
    }
}
