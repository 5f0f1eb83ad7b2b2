//! Transforming a bipartite graph into `B_n^e` without losing `k`-stars.
//!
//! The run has two phases. Shifting moves an edge `xz` to `yz` whenever `x`
//! and `y` sit on the same side, `deg(x) <= deg(y)` and `z ∈ N(x) \ N(y)`,
//! until the graph is neighbor-nested. The nested graph is then read as a
//! Ferrers diagram and rewritten by alternating two diagram steps:
//!
//! * step 1 moves every square above the Durfee square of column `i` to the
//!   end of row `i`;
//! * step 2 fills the empty cells of column `b_{t-1} + 1` below the top row
//!   with squares taken from the end of the top row.
//!
//! The run ends when step 2 cannot be applied, which happens exactly at the
//! diagram of `B_n^e`.

use crate::count::{binomial, Count};
use crate::counting::count_stars;
use crate::diagram::{diagram_of, realize_diagram, FerrersDiagram};
use crate::error::{Error, Result};
use crate::graph::{bipartition_of, words_for, Bipartition, Bits, Graph};
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightParams {
    k: usize,
}

impl WeightParams {
    pub fn new(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::LeafCount { k, min: 2 });
        }
        Ok(WeightParams { k })
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// Weight of the square in column `i`, row `j` (both 1-based):
/// `C(i-1, k-1) + C(j-1, k-1)`.
pub fn weight(i: usize, j: usize, p: WeightParams) -> Count {
    assert!(i >= 1 && j >= 1, "squares are indexed from 1");
    let k = p.k as u64 - 1;
    binomial(i as u64 - 1, k) + binomial(j as u64 - 1, k)
}

/// Sum of square weights, `Σ C(a_i, k) + Σ C(b_j, k)`.
pub fn total_weight(d: &FerrersDiagram, p: WeightParams) -> Count {
    let k = p.k as u64;
    let cols: Count = d.columns().iter().map(|&a| binomial(a as u64, k)).sum();
    let rows: Count = d.rows().iter().map(|&b| binomial(b as u64, k)).sum();
    cols + rows
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    Shift,
    Step1,
    Step2,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepKind::Shift => "shift",
            StepKind::Step1 => "step1",
            StepKind::Step2 => "step2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub kind: StepKind,
    pub star_count_k: Count,
    pub star_count_2: Count,
    /// Column heights after the step. During shifting the graph is not yet
    /// nested, so this is the sorted degree sequence of the left side.
    pub columns: Vec<usize>,
    /// Squares moved by a step 2.
    pub moved: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub k: usize,
    pub initial_k: Count,
    pub initial_2: Count,
    pub entries: Vec<TraceEntry>,
}

impl Trace {
    fn start(g: &Graph, p: WeightParams) -> Trace {
        Trace {
            k: p.k,
            initial_k: count_stars(g, p.k),
            initial_2: count_stars(g, 2),
            entries: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn final_count(&self) -> Count {
        self.entries.last().map_or(self.initial_k, |e| e.star_count_k)
    }

    /// `k`-star and 2-star counts never decrease along the run.
    pub fn is_monotone(&self) -> bool {
        let mut prev = (self.initial_k, self.initial_2);
        self.entries.iter().all(|e| {
            let ok = e.star_count_k >= prev.0 && e.star_count_2 >= prev.1;
            prev = (e.star_count_k, e.star_count_2);
            ok
        })
    }

    /// Every shift raises the 2-star count by at least one.
    pub fn shifts_strictly_increase(&self) -> bool {
        let mut prev = self.initial_2;
        self.entries.iter().all(|e| {
            let ok = e.kind != StepKind::Shift || e.star_count_2 > prev;
            prev = e.star_count_2;
            ok
        })
    }

    pub fn shift_count(&self) -> usize {
        self.entries.iter().filter(|e| e.kind == StepKind::Shift).count()
    }
}

fn sorted_positive(mut d: Vec<usize>) -> Vec<usize> {
    d.retain(|&x| x > 0);
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// Shifts edges until the graph is neighbor-nested with respect to `part`.
///
/// Among all violating triples the one with `x` of minimum degree is taken,
/// then `y` of maximum degree, then the smallest `z` (labels break ties).
pub fn shift_to_nested(g: &Graph, part: &Bipartition, p: WeightParams) -> (Graph, Trace) {
    let n = g.n();
    let words = words_for(n);
    let mut rows: Vec<Vec<u64>> = (0..n).map(|v| g.row(v).to_vec()).collect();
    let mut deg = g.degrees().to_vec();
    let mut trace = Trace::start(g, p);
    let (mut stars_k, mut stars_2) = (trace.initial_k, trace.initial_2);
    let kk = p.k as u64;

    loop {
        let mut best: Option<(usize, usize, std::cmp::Reverse<usize>, usize)> = None;
        for side in [&part.left, &part.right] {
            for &x in side.iter() {
                for &y in side.iter() {
                    if x == y || deg[x] > deg[y] {
                        continue;
                    }
                    let escapes = rows[x].iter().zip(&rows[y]).any(|(a, b)| a & !b != 0);
                    if escapes {
                        let key = (deg[x], x, std::cmp::Reverse(deg[y]), y);
                        if best.is_none_or(|b| key < b) {
                            best = Some(key);
                        }
                    }
                }
            }
        }
        let Some((_, x, _, y)) = best else { break };
        let diff: Vec<u64> = rows[x].iter().zip(&rows[y]).map(|(a, b)| a & !b).collect();
        let z = Bits::new(&diff).next().expect("violation has a witness");

        // C(dy+1,k) - C(dy,k) - C(dx,k) + C(dx-1,k) = C(dy,k-1) - C(dx-1,k-1)
        let (dx, dy) = (deg[x] as u64, deg[y] as u64);
        stars_k = (stars_k + binomial(dy, kk - 1))
            .checked_sub(binomial(dx - 1, kk - 1))
            .expect("shift never loses stars");
        stars_2 = (stars_2 + Count::from(dy)).checked_sub(Count::from(dx - 1)).unwrap();

        rows[x][z / 64] &= !(1 << (z % 64));
        rows[z][x / 64] &= !(1 << (x % 64));
        rows[y][z / 64] |= 1 << (z % 64);
        rows[z][y / 64] |= 1 << (y % 64);
        deg[x] -= 1;
        deg[y] += 1;

        trace.entries.push(TraceEntry {
            kind: StepKind::Shift,
            star_count_k: stars_k,
            star_count_2: stars_2,
            columns: sorted_positive(part.left.iter().map(|&v| deg[v]).collect()),
            moved: None,
        });
    }
    debug_assert!(rows.iter().all(|r| r.len() == words));

    let edges: Vec<_> = (0..n)
        .flat_map(|u| Bits::new(&rows[u]).filter(move |&v| v > u).map(move |v| (u, v)).collect::<Vec<_>>())
        .collect();
    (Graph::new(n, &edges).expect("shifting keeps the graph simple"), trace)
}

/// Moves the squares above the Durfee square to the ends of their rows.
pub fn step1(d: &FerrersDiagram) -> FerrersDiagram {
    let side = d.durfee();
    let a = d.columns();
    let rows: Vec<usize> = d.rows().iter().take(side).enumerate().map(|(j, &b)| b + (a[j] - side)).collect();
    FerrersDiagram::from_rows(&rows).expect("step 1 yields a partition")
}

/// One application of step 2 on a step-1 fixed point, together with the
/// number of squares moved, or `None` when the diagram is final.
pub fn step2_moved(d: &FerrersDiagram, n: usize) -> Option<(FerrersDiagram, usize)> {
    let mut rows = d.rows();
    let t = rows.len();
    if t <= 1 {
        return None;
    }
    let below = rows[t - 2];
    if rows[..t - 1].iter().all(|&b| b == below) && d.width() + t >= n {
        return None;
    }
    // Rows directly under the second-from-top that end at the same place
    // each gain the cell in column below+1.
    let first = rows.iter().position(|&b| b == below).unwrap();
    let moved = t - 1 - first;
    assert!(
        rows[t - 1] > moved,
        "step 2 needs a top row longer than the number of squares moved"
    );
    for b in &mut rows[first..t - 1] {
        *b += 1;
    }
    rows[t - 1] -= moved;
    Some((FerrersDiagram::from_rows(&rows).expect("step 2 yields a partition"), moved))
}

pub fn step2(d: &FerrersDiagram, n: usize) -> Option<FerrersDiagram> {
    step2_moved(d, n).map(|(d, _)| d)
}

/// Full run from a bipartite graph to `B_n^e`, returning the endpoint and the trace.
pub fn run_transformation(g: &Graph, n: usize, p: WeightParams) -> Result<(Graph, Trace)> {
    if g.n() > n {
        return Err(Error::InsufficientVertices { needed: g.n(), available: n });
    }
    let g = g.with_vertex_count(n)?;
    let part = bipartition_of(&g).ok_or(Error::NotBipartite)?;
    let (nested, mut trace) = shift_to_nested(&g, &part, p);
    let mut d = diagram_of(&nested, &part)?;

    let snapshot = |kind, d: &FerrersDiagram, moved| TraceEntry {
        kind,
        star_count_k: total_weight(d, p),
        star_count_2: total_weight(d, WeightParams { k: 2 }),
        columns: d.columns().to_vec(),
        moved,
    };
    loop {
        let next = step1(&d);
        if next != d {
            trace.entries.push(snapshot(StepKind::Step1, &next, None));
            d = next;
        }
        match step2_moved(&d, n) {
            Some((next, moved)) => {
                trace.entries.push(snapshot(StepKind::Step2, &next, Some(moved)));
                d = next;
            }
            None => break,
        }
    }
    Ok((realize_diagram(&d, n)?, trace))
}
