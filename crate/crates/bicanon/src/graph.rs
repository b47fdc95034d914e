//! The bipartite view of a pattern and the matchbox combinatorics on it.
//!
//! Rows 1..m sit on one side; the columns of both strips sit on the other
//! (left columns 1..p and right columns 1..q, kept apart). Unknown `x<l>`
//! becomes edge `l` joining its row to its column. A *matchbox* is a set of
//! edges without common vertices, i.e. a matching; it is *left* (*right*) if
//! it uses only left (right) edges, and *mixed* otherwise.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::pattern::{Pattern, Side};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edges x{first} and x{second} share a vertex")]
    SharedVertex { first: usize, second: usize },
    #[error("edge x{index} is not admissible in a {kind} matchbox")]
    KindMismatch { index: usize, kind: MatchboxKind },
    #[error("edge index {index} is outside 1..={count}")]
    EdgeOutOfRange { index: usize, count: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MatchboxKind {
    Left,
    Right,
    Mixed,
}

impl fmt::Display for MatchboxKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchboxKind::Left => write!(f, "left"),
            MatchboxKind::Right => write!(f, "right"),
            MatchboxKind::Mixed => write!(f, "mixed"),
        }
    }
}

/// A matching in the pattern graph, tagged with the strip discipline it was
/// built under. Edge indices are the 1-based unknown indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matchbox {
    kind: MatchboxKind,
    edges: BTreeSet<usize>,
}

impl Matchbox {
    pub fn kind(&self) -> MatchboxKind {
        self.kind
    }

    pub fn edges(&self) -> &BTreeSet<usize> {
        &self.edges
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.edges.contains(&edge)
    }
}

impl fmt::Display for Matchbox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {{", self.kind)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x{e}")?;
        }
        write!(f, "}}")
    }
}

/// One edge: its row and its column, with the strip remembered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub row: usize,
    pub side: Side,
    pub col: usize,
}

impl Edge {
    pub fn admissible(&self, kind: MatchboxKind) -> bool {
        match kind {
            MatchboxKind::Left => self.side == Side::A,
            MatchboxKind::Right => self.side == Side::B,
            MatchboxKind::Mixed => true,
        }
    }
}

/// Sizes of the largest left, right, and mixed matchboxes. These equal the
/// ranks of A(a), B(a), and M(a) for all assignments outside a proper closed
/// subset, hence the name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GenericRanks {
    pub rank_a: usize,
    pub rank_b: usize,
    pub rank_m: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    m: usize,
    p: usize,
    q: usize,
    edges: Vec<Edge>,
    row_edges: Vec<Vec<usize>>, // ascending edge indices per row (0-based row)
}

impl BipartiteGraph {
    pub fn build(pattern: &Pattern) -> Self {
        let m = pattern.rows();
        let mut edges = Vec::with_capacity(pattern.unknowns());
        let mut row_edges = vec![Vec::new(); m];
        for l in 1..=pattern.unknowns() {
            let pl = pattern.placement(l);
            edges.push(Edge { row: pl.row, side: pl.side, col: pl.col });
            row_edges[pl.row - 1].push(l);
        }
        Self {
            m,
            p: pattern.a_cols(),
            q: pattern.b_cols(),
            edges,
            row_edges,
        }
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn left_cols(&self) -> usize {
        self.p
    }

    pub fn right_cols(&self) -> usize {
        self.q
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge `index` (1-based).
    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index - 1]
    }

    /// Column slot in a combined 0-based namespace (left columns first).
    fn col_slot(&self, e: &Edge) -> usize {
        match e.side {
            Side::A => e.col - 1,
            Side::B => self.p + e.col - 1,
        }
    }

    /// Validate a set of edges as a matchbox of the given kind.
    pub fn matchbox(
        &self,
        kind: MatchboxKind,
        edges: impl IntoIterator<Item = usize>,
    ) -> Result<Matchbox, GraphError> {
        let edges: BTreeSet<usize> = edges.into_iter().collect();
        let mut row_used = vec![false; self.m];
        let mut col_used = vec![false; self.p + self.q];
        let mut row_owner = vec![0usize; self.m];
        let mut col_owner = vec![0usize; self.p + self.q];
        for &index in &edges {
            if index == 0 || index > self.edges.len() {
                return Err(GraphError::EdgeOutOfRange { index, count: self.edges.len() });
            }
            let e = self.edge(index);
            if !e.admissible(kind) {
                return Err(GraphError::KindMismatch { index, kind });
            }
            let slot = self.col_slot(&e);
            if row_used[e.row - 1] {
                return Err(GraphError::SharedVertex { first: row_owner[e.row - 1], second: index });
            }
            if col_used[slot] {
                return Err(GraphError::SharedVertex { first: col_owner[slot], second: index });
            }
            row_used[e.row - 1] = true;
            row_owner[e.row - 1] = index;
            col_used[slot] = true;
            col_owner[slot] = index;
        }
        Ok(Matchbox { kind, edges })
    }

    pub fn empty_matchbox(&self, kind: MatchboxKind) -> Matchbox {
        Matchbox { kind, edges: BTreeSet::new() }
    }

    /// A maximum matchbox of `kind` containing a matching that covers every
    /// vertex matched by `seed`. Augmenting paths only ever extend the set of
    /// matched vertices, so the guarantee holds by construction. Rows are
    /// processed in ascending order and edges in ascending index order, so
    /// the result is deterministic.
    ///
    /// The seed's edges must all be admissible for `kind`; its tag is
    /// otherwise ignored (a left matchbox is a fine seed for a mixed search).
    pub fn maximum_matchbox(
        &self,
        kind: MatchboxKind,
        seed: &Matchbox,
    ) -> Result<Matchbox, GraphError> {
        // Re-validate under the requested kind; catches foreign edge sets too.
        let seed = self.matchbox(kind, seed.edges.iter().copied())?;
        let mut row_match: Vec<Option<usize>> = vec![None; self.m];
        let mut col_match: Vec<Option<usize>> = vec![None; self.p + self.q];
        for &index in &seed.edges {
            let e = self.edge(index);
            row_match[e.row - 1] = Some(index);
            col_match[self.col_slot(&e)] = Some(index);
        }
        for row in 0..self.m {
            if row_match[row].is_some() {
                continue;
            }
            let mut visited = vec![false; self.p + self.q];
            self.try_augment(row, kind, &mut visited, &mut row_match, &mut col_match);
        }
        let edges: BTreeSet<usize> = row_match.into_iter().flatten().collect();
        Ok(Matchbox { kind, edges })
    }

    fn try_augment(
        &self,
        row: usize,
        kind: MatchboxKind,
        visited: &mut [bool],
        row_match: &mut [Option<usize>],
        col_match: &mut [Option<usize>],
    ) -> bool {
        for &index in &self.row_edges[row] {
            let e = self.edge(index);
            if !e.admissible(kind) {
                continue;
            }
            let slot = self.col_slot(&e);
            if visited[slot] {
                continue;
            }
            visited[slot] = true;
            let free = match col_match[slot] {
                None => true,
                Some(other) => {
                    let other_row = self.edge(other).row - 1;
                    self.try_augment(other_row, kind, visited, row_match, col_match)
                }
            };
            if free {
                row_match[row] = Some(index);
                col_match[slot] = Some(index);
                return true;
            }
        }
        false
    }

    /// Sizes of the largest left, right, and mixed matchboxes.
    pub fn generic_ranks(&self) -> GenericRanks {
        let rank_a = self
            .maximum_matchbox(MatchboxKind::Left, &self.empty_matchbox(MatchboxKind::Left))
            .expect("empty seed is valid")
            .size();
        let rank_b = self
            .maximum_matchbox(MatchboxKind::Right, &self.empty_matchbox(MatchboxKind::Right))
            .expect("empty seed is valid")
            .size();
        let rank_m = self
            .maximum_matchbox(MatchboxKind::Mixed, &self.empty_matchbox(MatchboxKind::Mixed))
            .expect("empty seed is valid")
            .size();
        debug_assert!(rank_a.max(rank_b) <= rank_m && rank_m <= rank_a + rank_b);
        GenericRanks { rank_a, rank_b, rank_m }
    }

    /// Number of vertices shared by two matchboxes. Columns of the two
    /// strips never coincide, so for a left/right pair only rows can be
    /// shared; the count is over all vertices regardless.
    pub fn common_vertex_count(&self, a: &Matchbox, b: &Matchbox) -> usize {
        let mark = |mb: &Matchbox| {
            let mut rows = vec![false; self.m];
            let mut cols = vec![false; self.p + self.q];
            for &index in &mb.edges {
                let e = self.edge(index);
                rows[e.row - 1] = true;
                cols[self.col_slot(&e)] = true;
            }
            (rows, cols)
        };
        let (ra, ca) = mark(a);
        let (rb, cb) = mark(b);
        let shared_rows = ra.iter().zip(&rb).filter(|(x, y)| **x && **y).count();
        let shared_cols = ca.iter().zip(&cb).filter(|(x, y)| **x && **y).count();
        shared_rows + shared_cols
    }

    /// `a` together with every edge of `b` that shares no vertex with `a`.
    /// For a left `a` and right `b` the result is a mixed matchbox of size
    /// `size(a) + size(b) - v(a, b)`.
    pub fn merge(&self, a: &Matchbox, b: &Matchbox) -> Result<Matchbox, GraphError> {
        let mut rows = vec![false; self.m];
        let mut cols = vec![false; self.p + self.q];
        for &index in &a.edges {
            let e = self.edge(index);
            rows[e.row - 1] = true;
            cols[self.col_slot(&e)] = true;
        }
        let mut edges = a.edges.clone();
        for &index in &b.edges {
            let e = self.edge(index);
            if !rows[e.row - 1] && !cols[self.col_slot(&e)] {
                edges.insert(index);
            }
        }
        // The union of two matchings could still pair one row twice only via
        // the filter above, so this re-validation is a cheap safety net.
        self.matchbox(MatchboxKind::Mixed, edges)
    }

    /// A largest-left / largest-right pair whose number of common vertices
    /// is minimal among all such pairs.
    ///
    /// Construction: grow a maximum left matchbox, extend it (as a seed) to
    /// a maximum mixed matchbox F, then extend F's right edges to a maximum
    /// right matchbox. F holds exactly `rank_a` left edges (matched left
    /// columns stay matched, and left edges cannot outnumber `rank_a`), so
    /// its right part has size `rank_m - rank_a`; those right edges keep
    /// their rows matched in the final right matchbox, which therefore meets
    /// the left matchbox in at most `rank_a + rank_b - rank_m` rows. That
    /// many shared vertices is forced for every pair, because merging a
    /// largest pair yields a mixed matchbox, of size at most `rank_m`.
    pub fn optimal_pair(&self) -> (Matchbox, Matchbox) {
        let a0 = self
            .maximum_matchbox(MatchboxKind::Left, &self.empty_matchbox(MatchboxKind::Left))
            .expect("empty seed is valid");
        let mixed = self
            .maximum_matchbox(MatchboxKind::Mixed, &a0)
            .expect("a left matchbox seeds a mixed search");
        let mut left_edges = BTreeSet::new();
        let mut right_edges = BTreeSet::new();
        for &index in &mixed.edges {
            match self.edge(index).side {
                Side::A => left_edges.insert(index),
                Side::B => right_edges.insert(index),
            };
        }
        let a = Matchbox { kind: MatchboxKind::Left, edges: left_edges };
        let c = Matchbox { kind: MatchboxKind::Right, edges: right_edges };
        let b = self
            .maximum_matchbox(MatchboxKind::Right, &c)
            .expect("right edges of a mixed matchbox seed a right search");
        (a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const GRID_4X5: &str = "\
pattern 4 2 3
.  .  | x4 x7 .
x1 .  | x5 .  .
.  x2 | .  .  x9
.  x3 | x6 x8 .
";

    fn graph() -> BipartiteGraph {
        BipartiteGraph::build(&Pattern::parse(GRID_4X5).unwrap())
    }

    fn edges(mb: &Matchbox) -> Vec<usize> {
        mb.edges().iter().copied().collect()
    }

    #[test]
    fn edges_follow_placements() {
        let g = graph();
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.edge(1), Edge { row: 2, side: Side::A, col: 1 });
        assert_eq!(g.edge(8), Edge { row: 4, side: Side::B, col: 2 });
        assert_eq!(g.edge(9), Edge { row: 3, side: Side::B, col: 3 });
    }

    #[test]
    fn matchbox_validation() {
        let g = graph();
        assert!(g.matchbox(MatchboxKind::Left, [1, 2]).is_ok());
        // x2 and x3 share the second left column
        assert_eq!(
            g.matchbox(MatchboxKind::Left, [2, 3]).unwrap_err(),
            GraphError::SharedVertex { first: 2, second: 3 }
        );
        // x4 and x5 share the first right column
        assert_eq!(
            g.matchbox(MatchboxKind::Mixed, [4, 5]).unwrap_err(),
            GraphError::SharedVertex { first: 4, second: 5 }
        );
        // x4 and x7 share row 1
        assert_eq!(
            g.matchbox(MatchboxKind::Right, [4, 7]).unwrap_err(),
            GraphError::SharedVertex { first: 4, second: 7 }
        );
        assert_eq!(
            g.matchbox(MatchboxKind::Left, [4]).unwrap_err(),
            GraphError::KindMismatch { index: 4, kind: MatchboxKind::Left }
        );
        assert_eq!(
            g.matchbox(MatchboxKind::Mixed, [10]).unwrap_err(),
            GraphError::EdgeOutOfRange { index: 10, count: 9 }
        );
    }

    #[test]
    fn generic_ranks_of_the_grid() {
        let ranks = graph().generic_ranks();
        assert_eq!(ranks, GenericRanks { rank_a: 2, rank_b: 3, rank_m: 4 });
    }

    #[test]
    fn seeded_search_keeps_matched_vertices() {
        let g = graph();
        // Seed the mixed search with the left matchbox {x1, x2}: rows 2 and 3
        // and both left columns must stay matched in the result.
        let seed = g.matchbox(MatchboxKind::Left, [1, 2]).unwrap();
        let mixed = g.maximum_matchbox(MatchboxKind::Mixed, &seed).unwrap();
        assert_eq!(mixed.size(), 4);
        let mut rows = BTreeSet::new();
        let mut left_cols = BTreeSet::new();
        for &e in mixed.edges() {
            let edge = g.edge(e);
            rows.insert(edge.row);
            if edge.side == Side::A {
                left_cols.insert(edge.col);
            }
        }
        assert!(rows.contains(&2) && rows.contains(&3));
        assert_eq!(left_cols, [1, 2].into_iter().collect());
    }

    #[test]
    fn common_vertices_and_merge() {
        let g = graph();
        // The pair ({x1, x2}, {x5, x7, x9}) shares rows 2 and 3.
        let a = g.matchbox(MatchboxKind::Left, [1, 2]).unwrap();
        let b = g.matchbox(MatchboxKind::Right, [5, 7, 9]).unwrap();
        assert_eq!(g.common_vertex_count(&a, &b), 2);
        let merged = g.merge(&a, &b).unwrap();
        assert_eq!(edges(&merged), vec![1, 2, 7]);
        assert_eq!(merged.size(), a.size() + b.size() - 2);

        // ({x1, x2}, {x4, x8, x9}) shares only row 3.
        let b2 = g.matchbox(MatchboxKind::Right, [4, 8, 9]).unwrap();
        assert_eq!(g.common_vertex_count(&a, &b2), 1);
        assert_eq!(edges(&g.merge(&a, &b2).unwrap()), vec![1, 2, 4, 8]);

        // ({x1, x3}, {x5, x7, x9}) shares only row 2.
        let a2 = g.matchbox(MatchboxKind::Left, [1, 3]).unwrap();
        assert_eq!(g.common_vertex_count(&a2, &b), 1);
        assert_eq!(edges(&g.merge(&a2, &b).unwrap()), vec![1, 3, 7, 9]);
    }

    #[test]
    fn optimal_pair_reaches_the_minimum_overlap() {
        let g = graph();
        let (a, b) = g.optimal_pair();
        let ranks = g.generic_ranks();
        assert_eq!(a.size(), ranks.rank_a);
        assert_eq!(b.size(), ranks.rank_b);
        assert_eq!(
            g.common_vertex_count(&a, &b),
            ranks.rank_a + ranks.rank_b - ranks.rank_m
        );
        // The deterministic scan lands on this particular pair.
        assert_eq!(edges(&a), vec![1, 3]);
        assert_eq!(edges(&b), vec![5, 7, 9]);
    }

    #[test]
    fn optimal_pair_handles_degenerate_graphs() {
        for text in [
            "pattern 0 0 0\n",
            "pattern 2 2 0\nx1 . | \n. x2 |\n",
            "pattern 2 0 2\n| x1 .\n| . x2\n",
            "pattern 1 1 1\nx1 | x2\n",
        ] {
            let g = BipartiteGraph::build(&Pattern::parse(text).unwrap());
            let (a, b) = g.optimal_pair();
            let ranks = g.generic_ranks();
            assert_eq!(a.size(), ranks.rank_a);
            assert_eq!(b.size(), ranks.rank_b);
            assert_eq!(
                g.common_vertex_count(&a, &b),
                ranks.rank_a + ranks.rank_b - ranks.rank_m
            );
        }
    }
}
