//! Ferrers diagrams of neighbor-nested bipartite graphs.
//!
//! Column `i` (1-based) has height `a_i`, the degree of the `i`-th vertex on the
//! column side; row `j` has length `b_j`, the degree of the `j`-th vertex on the
//! other side. Each unit square is one edge.

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use serde::Serialize;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FerrersDiagram {
    columns: Vec<usize>,
}

impl FerrersDiagram {
    pub fn new(columns: Vec<usize>) -> Result<Self> {
        if columns.contains(&0) || columns.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDiagram(columns));
        }
        Ok(FerrersDiagram { columns })
    }

    /// Diagram whose rows (bottom to top) have the given lengths.
    pub fn from_rows(rows: &[usize]) -> Result<Self> {
        let rows = FerrersDiagram::new(rows.to_vec())?;
        Ok(FerrersDiagram { columns: rows.rows() })
    }

    pub fn columns(&self) -> &[usize] {
        &self.columns
    }

    /// Conjugate partition: `b_j = |{i : a_i >= j}|`.
    pub fn rows(&self) -> Vec<usize> {
        conjugate(&self.columns)
    }

    pub fn conjugate(&self) -> FerrersDiagram {
        FerrersDiagram { columns: self.rows() }
    }

    /// Number of columns `m`.
    pub fn width(&self) -> usize {
        self.columns.len()
    }

    /// Number of rows `t = a_1`.
    pub fn height(&self) -> usize {
        self.columns.first().copied().unwrap_or(0)
    }

    pub fn squares(&self) -> usize {
        self.columns.iter().sum()
    }

    /// Side of the largest square anchored at the origin.
    pub fn durfee(&self) -> usize {
        self.columns.iter().enumerate().take_while(|&(i, &a)| a > i).count()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }
}

impl fmt::Debug for FerrersDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ferrers{:?}", self.columns)
    }
}

impl fmt::Display for FerrersDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.columns.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

pub fn conjugate(parts: &[usize]) -> Vec<usize> {
    let height = parts.first().copied().unwrap_or(0);
    (1..=height).map(|j| parts.iter().take_while(|&&a| a >= j).count()).collect()
}

/// First same-side pair with incomparable neighborhoods, if any.
pub fn nested_violation(g: &Graph, p: &Bipartition) -> Option<(usize, usize)> {
    for side in [&p.left, &p.right] {
        for (i, &x) in side.iter().enumerate() {
            for &y in &side[i + 1..] {
                if !g.neighborhood_subset(x, y) && !g.neighborhood_subset(y, x) {
                    return Some((x, y));
                }
            }
        }
    }
    None
}

pub fn is_neighbor_nested(g: &Graph, p: &Bipartition) -> bool {
    nested_violation(g, p).is_none()
}

fn side_degrees(g: &Graph, side: &[usize]) -> Vec<usize> {
    let mut d: Vec<usize> = side.iter().map(|&v| g.degree(v)).filter(|&d| d > 0).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// Diagram of a neighbor-nested bipartite graph.
///
/// Columns come from the side with fewer non-isolated vertices; on a tie, from
/// the side holding the lowest-labeled vertex of maximum degree.
pub fn diagram_of(g: &Graph, p: &Bipartition) -> Result<FerrersDiagram> {
    if let Some((x, y)) = nested_violation(g, p) {
        return Err(Error::NotNested(x, y));
    }
    let left = side_degrees(g, &p.left);
    let right = side_degrees(g, &p.right);
    let use_left = match left.len().cmp(&right.len()) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => {
            let max = g.degrees().iter().copied().max().unwrap_or(0);
            let top = (0..g.n()).find(|&v| g.degree(v) == max);
            top.is_none_or(|v| p.left.contains(&v))
        }
    };
    FerrersDiagram::new(if use_left { left } else { right })
}

/// Bipartite graph on `n` vertices: column vertices `0..m`, row vertices
/// `m..m+t`, edge `(i, m+j)` iff `j < a_{i+1}`; the rest isolated.
pub fn realize_diagram(d: &FerrersDiagram, n: usize) -> Result<Graph> {
    let m = d.width();
    let needed = m + d.height();
    if needed > n {
        return Err(Error::InsufficientVertices { needed, available: n });
    }
    let edges: Vec<_> = d
        .columns()
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| (0..a).map(move |j| (i, m + j)))
        .collect();
    Graph::new(n, &edges)
}
