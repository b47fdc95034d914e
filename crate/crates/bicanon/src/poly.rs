//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a map ordered by graded lexicographic monomial order
//! (total degree first, then earlier variables weigh more), so every
//! traversal, rendering, and leading-term choice is deterministic.
//!
//! The gcd is a primitive pseudo-remainder sequence on the lowest-indexed
//! variable that occurs, with contents handled by recursion; it never leaves
//! exact arithmetic. Normalized polynomials have coprime integer
//! coefficients and a positive leading coefficient.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{Field, FieldError};
use crate::graph::{BipartiteGraph, GraphError, Matchbox};
use crate::pattern::{Assignment, Pattern, Side};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("lcm requires nonzero inputs")]
    LcmOfZero,
    #[error("division is not exact")]
    InexactDivision,
}

/// Exponent vector; one slot per unknown.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn unit(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise quotient; `None` when `other` does not divide `self`.
    fn div(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: compare total degree, then exponents from the
    /// first variable on (a higher exponent earlier means a later monomial).
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.degree()
            .cmp(&other.degree())
            .then_with(|| {
                for (a, b) in self.0.iter().zip(&other.0) {
                    if a != b {
                        return a.cmp(b);
                    }
                }
                Ordering::Equal
            })
    }
}

/// One rendered term of the JSON form: exact coefficient plus exponents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub coeff: String,
    pub exps: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, value: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.insert(Monomial::unit(nvars), value);
        p
    }

    /// The unknown `x<index>` (1-based) as a polynomial.
    pub fn variable(nvars: usize, index: usize) -> Self {
        assert!(index >= 1 && index <= nvars);
        let mut exps = vec![0; nvars];
        exps[index - 1] = 1;
        let mut p = Self::zero(nvars);
        p.insert(Monomial(exps), BigRational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Greatest term in graded lex order.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    fn insert(&mut self, mono: Monomial, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { nvars: self.nvars, terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    fn mul_term(&self, mono: &Monomial, coeff: &BigRational) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.mul(mono), c * coeff))
            .collect();
        Polynomial { nvars: self.nvars, terms }
    }

    /// Multiply by `x<var>^power` (0-based variable slot).
    fn shift_var(&self, var: usize, power: u32) -> Self {
        if power == 0 {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e[var] += power;
                (Monomial(e), c.clone())
            })
            .collect();
        Polynomial { nvars: self.nvars, terms }
    }

    /// Quotient `self / divisor` when the division is exact.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        assert_eq!(self.nvars, divisor.nvars);
        let Some((dm, dc)) = divisor.leading() else {
            return Err(PolyError::InexactDivision); // division by zero
        };
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((rm, rc)) = rem.leading() {
            let Some(m) = rm.div(&dm) else {
                return Err(PolyError::InexactDivision);
            };
            let c = rc / &dc;
            rem = rem.sub(&divisor.mul_term(&m, &c));
            quot.insert(m, c);
        }
        Ok(quot)
    }

    /// Smallest 0-based variable slot that occurs; `None` for constants.
    fn lowest_var(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for m in self.terms.keys() {
            if let Some(v) = m.0.iter().position(|&e| e > 0) {
                best = Some(best.map_or(v, |b| b.min(v)));
            }
        }
        best
    }

    fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Coefficient of `x<var>^power` as a polynomial with `var` zeroed out.
    fn coefficient_in(&self, var: usize, power: u32) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.0[var] == power {
                let mut e = m.0.clone();
                e[var] = 0;
                out.insert(Monomial(e), c.clone());
            }
        }
        out
    }

    /// Gcd of the coefficients of the powers of `var` (nonzero input).
    fn content_in(&self, var: usize) -> Self {
        let mut acc: Option<Polynomial> = None;
        for power in 0..=self.degree_in(var) {
            let c = self.coefficient_in(var, power);
            if c.is_zero() {
                continue;
            }
            acc = Some(match acc {
                None => c,
                Some(a) => gcd_raw(&a, &c),
            });
        }
        acc.expect("content of a nonzero polynomial")
    }

    /// Scale so that coefficients are coprime integers and the leading
    /// coefficient is positive.
    pub fn normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let scaled = c.numer() * (&den / c.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        let factor = BigRational::new(den, num_gcd);
        let mut out = Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * &factor))
                .collect(),
        };
        let negative = out.leading().map(|(_, c)| c.is_negative()).unwrap_or(false);
        if negative {
            out = out.neg();
        }
        out
    }

    /// Exact value at an assignment; the coefficients are embedded into the
    /// assignment's field.
    pub fn evaluate<F: Field>(&self, assignment: &Assignment<F>) -> Result<F::Elem, FieldError> {
        assert_eq!(
            assignment.len(),
            self.nvars,
            "assignment length must match the variable count"
        );
        let field = assignment.field();
        let mut acc = field.zero();
        for (mono, coeff) in &self.terms {
            let mut term = field.from_rational(coeff)?;
            for (i, &e) in mono.0.iter().enumerate() {
                for _ in 0..e {
                    term = field.mul(&term, &assignment.values()[i]);
                }
            }
            acc = field.add(&acc, &term);
        }
        Ok(acc)
    }

    /// Terms in descending graded lex order, coefficients as exact strings.
    pub fn terms_descending(&self) -> Vec<PolyTerm> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| PolyTerm { coeff: c.to_string(), exps: m.0.clone() })
            .collect()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mono, coeff)) in self.terms.iter().rev().enumerate() {
            let negative = coeff.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.abs();
            let vars: Vec<String> = mono
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, &e)| {
                    if e == 1 {
                        format!("x{}", k + 1)
                    } else {
                        format!("x{}^{}", k + 1, e)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Pseudo-remainder of `f` by `g` in `var`: repeatedly kill the top power of
/// `var` after scaling by `g`'s leading coefficient. Requires
/// `degree_in(g, var) >= 1`.
fn prem(f: &Polynomial, g: &Polynomial, var: usize) -> Polynomial {
    let dg = g.degree_in(var);
    let lg = g.coefficient_in(var, dg);
    let mut r = f.clone();
    while !r.is_zero() {
        let dr = r.degree_in(var);
        if dr < dg {
            break;
        }
        let lr = r.coefficient_in(var, dr);
        r = r.mul(&lg).sub(&lr.mul(g).shift_var(var, dr - dg));
    }
    r
}

/// Gcd of two nonzero polynomials, correct up to a nonzero rational factor.
fn gcd_raw(f: &Polynomial, g: &Polynomial) -> Polynomial {
    debug_assert!(!f.is_zero() && !g.is_zero());
    if f.is_constant() || g.is_constant() {
        return Polynomial::one(f.nvars);
    }
    let var = match (f.lowest_var(), g.lowest_var()) {
        (Some(a), Some(b)) => a.min(b),
        _ => unreachable!("non-constant polynomials name a variable"),
    };
    if f.degree_in(var) == 0 {
        return gcd_raw(f, &g.content_in(var));
    }
    if g.degree_in(var) == 0 {
        return gcd_raw(&f.content_in(var), g);
    }
    let cf = f.content_in(var);
    let cg = g.content_in(var);
    let c = gcd_raw(&cf, &cg);
    let mut a = f.divide_exact(&cf).expect("content divides");
    let mut b = g.divide_exact(&cg).expect("content divides");
    if a.degree_in(var) < b.degree_in(var) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = prem(&a, &b, var);
        if r.is_zero() {
            return c.mul(&b);
        }
        if r.degree_in(var) == 0 {
            // The primitive parts are coprime in `var`.
            return c;
        }
        a = b;
        let content = r.content_in(var);
        b = r.divide_exact(&content).expect("content divides");
    }
}

/// Normalized greatest common divisor. Errors only when both inputs vanish.
pub fn gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, PolyError> {
    assert_eq!(f.nvars(), g.nvars());
    match (f.is_zero(), g.is_zero()) {
        (true, true) => Err(PolyError::GcdOfZeros),
        (true, false) => Ok(g.normalize()),
        (false, true) => Ok(f.normalize()),
        (false, false) => Ok(gcd_raw(f, g).normalize()),
    }
}

/// Normalized least common multiple of two nonzero polynomials.
pub fn lcm(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::LcmOfZero);
    }
    let d = gcd(f, g)?;
    let product = f.mul(g);
    Ok(product
        .divide_exact(&d)
        .expect("gcd divides the product")
        .normalize())
}

pub fn lcm3(f: &Polynomial, g: &Polynomial, h: &Polynomial) -> Result<Polynomial, PolyError> {
    lcm(&lcm(f, g)?, h)
}

/// The minor of the instantiated pattern selected by a matchbox: rows of the
/// matchbox in ascending order against its A columns (ascending) followed by
/// its B columns (ascending). Computed as a signed sum over the perfect
/// matchings of the selected cells, so the result is a polynomial with
/// coefficients 1 and -1 and squarefree monomials; it is never zero.
pub fn minor_polynomial(pattern: &Pattern, matchbox: &Matchbox) -> Polynomial {
    let n = pattern.unknowns();
    let grid = pattern.cell_grid();
    let mut rows: Vec<usize> = Vec::new();
    let mut a_cols: Vec<usize> = Vec::new();
    let mut b_cols: Vec<usize> = Vec::new();
    for &index in matchbox.edges() {
        let pl = pattern.placement(index);
        rows.push(pl.row - 1);
        match pl.side {
            Side::A => a_cols.push(pl.col - 1),
            Side::B => b_cols.push(pattern.a_cols() + pl.col - 1),
        }
    }
    rows.sort_unstable();
    a_cols.sort_unstable();
    b_cols.sort_unstable();
    let cols: Vec<usize> = a_cols.into_iter().chain(b_cols).collect();

    let k = rows.len();
    let mut out = Polynomial::zero(n);
    let mut used = vec![false; k];
    let mut perm: Vec<usize> = Vec::with_capacity(k);
    let mut chosen: Vec<usize> = Vec::with_capacity(k);

    // Row-by-row DFS over column choices; a recursive closure would
    // borrow-conflict, so the state is passed explicitly.
    fn step(
        i: usize,
        rows: &[usize],
        cols: &[usize],
        grid: &[Vec<Option<usize>>],
        used: &mut [bool],
        perm: &mut Vec<usize>,
        chosen: &mut Vec<usize>,
        out: &mut Polynomial,
    ) {
        let k = rows.len();
        if i == k {
            let mut inversions = 0usize;
            for a in 0..k {
                for b in a + 1..k {
                    if perm[a] > perm[b] {
                        inversions += 1;
                    }
                }
            }
            let mut exps = vec![0u32; out.nvars()];
            for &l in chosen.iter() {
                exps[l - 1] = 1;
            }
            let coeff = if inversions % 2 == 0 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            out.insert(Monomial(exps), coeff);
            return;
        }
        for j in 0..k {
            if used[j] {
                continue;
            }
            if let Some(l) = grid[rows[i]][cols[j]] {
                used[j] = true;
                perm.push(j);
                chosen.push(l);
                step(i + 1, rows, cols, grid, used, perm, chosen, out);
                chosen.pop();
                perm.pop();
                used[j] = false;
            }
        }
    }

    step(0, &rows, &cols, &grid, &mut used, &mut perm, &mut chosen, &mut out);
    out
}

/// The nonvanishing polynomial of a largest-left / largest-right pair: the
/// lcm of the two matchbox minors and the minor of their merge.
pub fn generic_polynomial(
    pattern: &Pattern,
    a: &Matchbox,
    b: &Matchbox,
) -> Result<Polynomial, GraphError> {
    let graph = BipartiteGraph::build(pattern);
    let merged = graph.merge(a, b)?;
    let ma = minor_polynomial(pattern, a);
    let mb = minor_polynomial(pattern, b);
    let mm = minor_polynomial(pattern, &merged);
    Ok(lcm3(&ma, &mb, &mm).expect("matchbox minors are nonzero"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::graph::MatchboxKind;
    use proptest::prelude::*;

    const GRID_4X5: &str = "\
pattern 4 2 3
.  .  | x4 x7 .
x1 .  | x5 .  .
.  x2 | .  .  x9
.  x3 | x6 x8 .
";

    fn fixture() -> (Pattern, BipartiteGraph) {
        let pat = Pattern::parse(GRID_4X5).unwrap();
        let g = BipartiteGraph::build(&pat);
        (pat, g)
    }

    fn var(k: usize) -> Polynomial {
        Polynomial::variable(9, k)
    }

    fn prod(ks: &[usize]) -> Polynomial {
        ks.iter().fold(Polynomial::one(9), |acc, &k| acc.mul(&var(k)))
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn minor_golden_values() {
        let (pat, g) = fixture();
        let minor = |kind, e: &[usize]| {
            let mb = g.matchbox(kind, e.iter().copied()).unwrap();
            minor_polynomial(&pat, &mb).to_string()
        };
        assert_eq!(minor(MatchboxKind::Left, &[1, 2]), "x1*x2");
        assert_eq!(minor(MatchboxKind::Right, &[4, 8, 9]), "-x4*x8*x9 + x6*x7*x9");
        assert_eq!(minor(MatchboxKind::Mixed, &[1, 2, 4, 8]), "x1*x2*x4*x8 - x1*x2*x6*x7");
        assert_eq!(minor(MatchboxKind::Mixed, &[1, 2, 7]), "x1*x2*x7");
        assert_eq!(minor(MatchboxKind::Left, &[1, 3]), "x1*x3");
        assert_eq!(minor(MatchboxKind::Right, &[5, 7, 9]), "-x5*x7*x9");
        assert_eq!(minor(MatchboxKind::Mixed, &[1, 3, 7, 9]), "-x1*x3*x7*x9");
        assert_eq!(minor(MatchboxKind::Mixed, &[]), "1");
    }

    #[test]
    fn minors_are_signed_squarefree_and_nonzero() {
        let (pat, g) = fixture();
        for (kind, e) in [
            (MatchboxKind::Right, vec![4, 8, 9]),
            (MatchboxKind::Mixed, vec![1, 2, 4, 8]),
            (MatchboxKind::Mixed, vec![1, 3, 7, 9]),
        ] {
            let mb = g.matchbox(kind, e).unwrap();
            let mu = minor_polynomial(&pat, &mb);
            assert!(!mu.is_zero());
            for term in mu.terms_descending() {
                assert!(term.coeff == "1" || term.coeff == "-1");
                assert!(term.exps.iter().all(|&e| e <= 1));
                assert_eq!(
                    term.exps.iter().map(|&e| e as usize).sum::<usize>(),
                    mb.size()
                );
            }
        }
    }

    #[test]
    fn generic_polynomial_golden_values() {
        let (pat, g) = fixture();
        let a = g.matchbox(MatchboxKind::Left, [1, 2]).unwrap();
        let b = g.matchbox(MatchboxKind::Right, [4, 8, 9]).unwrap();
        assert_eq!(
            generic_polynomial(&pat, &a, &b).unwrap().to_string(),
            "x1*x2*x4*x8*x9 - x1*x2*x6*x7*x9"
        );

        let a2 = g.matchbox(MatchboxKind::Left, [1, 3]).unwrap();
        let b2 = g.matchbox(MatchboxKind::Right, [5, 7, 9]).unwrap();
        assert_eq!(
            generic_polynomial(&pat, &a2, &b2).unwrap().to_string(),
            "x1*x3*x5*x7*x9"
        );
    }

    #[test]
    fn gcd_golden_value() {
        let (pat, g) = fixture();
        let f = minor_polynomial(
            &pat,
            &g.matchbox(MatchboxKind::Mixed, [1, 2, 4, 8]).unwrap(),
        );
        let h = minor_polynomial(&pat, &g.matchbox(MatchboxKind::Right, [4, 8, 9]).unwrap());
        assert_eq!(gcd(&f, &h).unwrap().to_string(), "x4*x8 - x6*x7");
    }

    #[test]
    fn gcd_edge_cases() {
        let f = prod(&[1, 2]);
        let zero = Polynomial::zero(9);
        assert_eq!(gcd(&zero, &f).unwrap(), f);
        assert_eq!(gcd(&f, &zero).unwrap(), f);
        assert_eq!(gcd(&zero, &zero).unwrap_err(), PolyError::GcdOfZeros);
        assert_eq!(gcd(&f, &f).unwrap(), f);
        // coprime inputs
        assert_eq!(gcd(&var(1), &var(2)).unwrap().to_string(), "1");
    }

    #[test]
    fn lcm_edge_cases() {
        assert_eq!(lcm(&var(1), &var(2)).unwrap().to_string(), "x1*x2");
        assert_eq!(
            lcm(&var(1), &Polynomial::zero(9)).unwrap_err(),
            PolyError::LcmOfZero
        );
        let f = prod(&[1, 2]);
        assert_eq!(lcm3(&f, &f, &var(1)).unwrap(), f);
    }

    #[test]
    fn gcd_times_lcm_matches_the_product() {
        let f = var(3).mul(&var(1).add(&var(2)));
        let g = var(1)
            .add(&var(2))
            .mul(&var(2).sub(&Polynomial::one(9)));
        let d = gcd(&f, &g).unwrap();
        let m = lcm(&f, &g).unwrap();
        assert_eq!(d.to_string(), "x1 + x2");
        assert_eq!(d.mul(&m).normalize(), f.mul(&g).normalize());
    }

    #[test]
    fn divide_exact_roundtrip_and_failure() {
        let sum = var(1).add(&var(2));
        let diff = var(1).sub(&var(2));
        let product = sum.mul(&diff);
        assert_eq!(product.divide_exact(&sum).unwrap(), diff);
        assert_eq!(
            sum.divide_exact(&var(3)).unwrap_err(),
            PolyError::InexactDivision
        );
        assert_eq!(
            sum.divide_exact(&Polynomial::zero(9)).unwrap_err(),
            PolyError::InexactDivision
        );
    }

    #[test]
    fn normalize_scales_and_fixes_the_sign() {
        let two_thirds = BigRational::new(BigInt::from(2), BigInt::from(3));
        let p = prod(&[1, 2])
            .mul(&Polynomial::constant(9, two_thirds))
            .sub(&var(2).mul(&var(2)).mul(&Polynomial::constant(9, q(4) / q(3))));
        assert_eq!(p.normalize().to_string(), "x1*x2 - 2*x2^2");
        assert_eq!(var(1).neg().normalize().to_string(), "x1");
        assert_eq!(Polynomial::zero(9).normalize().to_string(), "0");
    }

    #[test]
    fn display_forms() {
        assert_eq!(Polynomial::zero(2).to_string(), "0");
        let c = Polynomial::constant(2, BigRational::new(BigInt::from(-3), BigInt::from(4)));
        assert_eq!(c.to_string(), "-3/4");
        let p = Polynomial::variable(2, 1)
            .mul(&Polynomial::constant(2, q(2)))
            .add(&Polynomial::one(2));
        let sq = p.mul(&p);
        assert_eq!(sq.to_string(), "4*x1^2 + 4*x1 + 1");
    }

    #[test]
    fn graded_lex_puts_higher_degree_and_earlier_variables_first() {
        let p = var(2).mul(&var(2)).add(&prod(&[1, 2])).add(&var(1));
        assert_eq!(p.to_string(), "x1*x2 + x2^2 + x1");
    }

    #[test]
    fn terms_descending_match_the_rendering() {
        let (pat, g) = fixture();
        let a = g.matchbox(MatchboxKind::Left, [1, 2]).unwrap();
        let b = g.matchbox(MatchboxKind::Right, [4, 8, 9]).unwrap();
        let f = generic_polynomial(&pat, &a, &b).unwrap();
        let terms = f.terms_descending();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].coeff, "1");
        assert_eq!(terms[0].exps, vec![1, 1, 0, 1, 0, 0, 0, 1, 1]);
        assert_eq!(terms[1].coeff, "-1");
        assert_eq!(terms[1].exps, vec![1, 1, 0, 0, 0, 1, 1, 0, 1]);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism_spot_check() {
        let f = prod(&[1, 2]).add(&var(3));
        let g = var(1).sub(&prod(&[2, 3]));
        let vals: Vec<BigRational> = vec![
            q(2),
            BigRational::new(BigInt::from(-1), BigInt::from(2)),
            q(3),
            q(0),
            q(1),
            q(-4),
            q(7),
            q(5),
            q(-2),
        ];
        let a = Assignment::from_rationals(Rationals, &vals).unwrap();
        let fe = f.evaluate(&a).unwrap();
        let ge = g.evaluate(&a).unwrap();
        assert_eq!(f.mul(&g).evaluate(&a).unwrap(), &fe * &ge);
        assert_eq!(f.add(&g).evaluate(&a).unwrap(), &fe + &ge);

        let gf = PrimeField::new(7).unwrap();
        let am = Assignment::from_rationals(gf, &vals).unwrap();
        let fm = f.evaluate(&am).unwrap();
        let gm = g.evaluate(&am).unwrap();
        assert_eq!(f.mul(&g).evaluate(&am).unwrap(), gf.mul(&fm, &gm));
        assert_eq!(f.add(&g).evaluate(&am).unwrap(), gf.add(&fm, &gm));
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(
            (proptest::collection::vec(0u32..3, 3), -4i64..=4i64),
            0..5,
        )
        .prop_map(|terms| {
            let mut p = Polynomial::zero(3);
            for (exps, c) in terms {
                p.insert(Monomial(exps), q(c));
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn gcd_divides_both_and_lcm_is_divided_by_both(f in arb_poly(), g in arb_poly()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let d = gcd(&f, &g).unwrap();
            prop_assert!(f.divide_exact(&d).is_ok());
            prop_assert!(g.divide_exact(&d).is_ok());
            let m = lcm(&f, &g).unwrap();
            prop_assert!(m.divide_exact(&f).is_ok());
            prop_assert!(m.divide_exact(&g).is_ok());
            prop_assert_eq!(d.mul(&m).normalize(), f.mul(&g).normalize());
        }

        #[test]
        fn multiplication_is_associative_and_distributes(
            f in arb_poly(), g in arb_poly(), h in arb_poly()
        ) {
            prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
            prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        }
    }
}
