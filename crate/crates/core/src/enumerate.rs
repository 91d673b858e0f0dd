//! Isomorphism-free generation of stable multidigraphs.
//!
//! For `j` vertices and `s` edges we walk the partitions of `s` into `j`
//! parts that are each at least 2 and use them as out-degree sequences.
//! Relabeling vertices by decreasing out-degree shows every stable graph is
//! isomorphic to one whose row sums are non-increasing, so partitions suffice.
//! Rows are filled one at a time with a column-demand check, and duplicates
//! are removed through canonical keys.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{CanonicalKey, MultiDigraph};
use crate::zeta::det_a_minus_i;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphClassCounts {
    pub total: usize,
    pub connected: usize,
    pub strongly_connected: usize,
    pub lambda: usize,
}

/// One canonical representative per isomorphism class of stable graphs with
/// `j` vertices and `s` edges, sorted by canonical key.
pub fn enumerate_stable(j: usize, s: usize) -> Vec<MultiDigraph> {
    if j == 0 || s < 2 * j {
        return Vec::new();
    }
    let partitions = partitions_with_min(s, j, 2);
    let keys: BTreeSet<CanonicalKey> = partitions
        .par_iter()
        .map(|rows| {
            let mut found = BTreeSet::new();
            let mut filler = RowFiller::new(j, rows);
            filler.fill(0, &mut |flat| {
                found.insert(MultiDigraph::from_flat(j, flat.to_vec()).canonical_key());
            });
            found
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    keys.into_iter().map(|k| k.to_graph()).collect()
}

/// All stable graphs of weight `k`: the union over `j = 1..=k` of the
/// `j`-vertex graphs with `j + k` edges.
pub fn enumerate_weight(k: usize) -> Vec<MultiDigraph> {
    let mut out: Vec<MultiDigraph> = (1..=k)
        .into_par_iter()
        .map(|j| enumerate_stable(j, j + k))
        .flatten()
        .collect();
    out.sort_by_cached_key(|g| g.canonical_key());
    out
}

/// Connectivity class of a nonempty graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConnectivityClass {
    Disconnected,
    Connected,
    StronglyConnected,
}

impl ConnectivityClass {
    pub fn of(g: &MultiDigraph) -> ConnectivityClass {
        if !g.is_weakly_connected() {
            ConnectivityClass::Disconnected
        } else if g.is_strongly_connected().unwrap_or(false) {
            ConnectivityClass::StronglyConnected
        } else {
            ConnectivityClass::Connected
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ConnectivityClass::Disconnected => "disconnected",
            ConnectivityClass::Connected => "connected",
            ConnectivityClass::StronglyConnected => "strongly_connected",
        }
    }
}

pub fn classify_graphs(graphs: &[MultiDigraph]) -> GraphClassCounts {
    graphs
        .par_iter()
        .map(|g| {
            let class = ConnectivityClass::of(g);
            let strong = class == ConnectivityClass::StronglyConnected;
            GraphClassCounts {
                total: 1,
                connected: (class != ConnectivityClass::Disconnected) as usize,
                strongly_connected: strong as usize,
                lambda: (strong && det_a_minus_i(g) != 0.into()) as usize,
            }
        })
        .reduce(GraphClassCounts::default, |a, b| GraphClassCounts {
            total: a.total + b.total,
            connected: a.connected + b.connected,
            strongly_connected: a.strongly_connected + b.strongly_connected,
            lambda: a.lambda + b.lambda,
        })
}

/// Counts of all, connected, strongly connected, and strongly connected with
/// `det(A - I) != 0` stable graphs of weight `k`.
pub fn classify(k: usize) -> GraphClassCounts {
    classify_graphs(&enumerate_weight(k))
}

/// Non-increasing sequences of `parts` integers, each `>= min`, summing to
/// `total`.
fn partitions_with_min(total: usize, parts: usize, min: usize) -> Vec<Vec<u32>> {
    fn go(
        rest: usize,
        parts: usize,
        min: usize,
        max: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if parts == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if rest < parts * min {
            return;
        }
        let hi = max.min(rest - (parts - 1) * min);
        for v in (min..=hi).rev() {
            cur.push(v as u32);
            go(rest - v, parts - 1, min, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts * min <= total {
        go(total, parts, min, total, &mut Vec::new(), &mut out);
    }
    out
}

struct RowFiller<'a> {
    n: usize,
    row_sums: &'a [u32],
    /// Sum of row sums from row r onward.
    suffix: Vec<u32>,
    col: Vec<u32>,
    flat: Vec<u32>,
}

impl<'a> RowFiller<'a> {
    fn new(n: usize, row_sums: &'a [u32]) -> Self {
        let mut suffix = vec![0u32; n + 1];
        for r in (0..n).rev() {
            suffix[r] = suffix[r + 1] + row_sums[r];
        }
        RowFiller {
            n,
            row_sums,
            suffix,
            col: vec![0; n],
            flat: vec![0; n * n],
        }
    }

    fn fill(&mut self, row: usize, visit: &mut dyn FnMut(&[u32])) {
        if row == self.n {
            if self.col.iter().all(|&c| c >= 2) {
                visit(&self.flat);
            }
            return;
        }
        let demand: u32 = self.col.iter().map(|&c| 2u32.saturating_sub(c)).sum();
        if demand > self.suffix[row] {
            return;
        }
        self.fill_entry(row, 0, self.row_sums[row], visit);
    }

    fn fill_entry(&mut self, row: usize, c: usize, left: u32, visit: &mut dyn FnMut(&[u32])) {
        let n = self.n;
        if c == n - 1 {
            self.flat[row * n + c] = left;
            self.col[c] += left;
            self.fill(row + 1, visit);
            self.col[c] -= left;
            return;
        }
        for v in 0..=left {
            self.flat[row * n + c] = v;
            self.col[c] += v;
            self.fill_entry(row, c + 1, left - v, visit);
            self.col[c] -= v;
        }
        self.flat[row * n + c] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, parse_graph};

    /// Every `j x j` matrix with entries summing to `s`, no pruning at all.
    fn raw_stable_matrices(j: usize, s: usize) -> Vec<MultiDigraph> {
        let cells = j * j;
        let mut out = Vec::new();
        let mut cur = vec![0u32; cells];
        fn go(i: usize, left: u32, cur: &mut Vec<u32>, j: usize, out: &mut Vec<MultiDigraph>) {
            if i == cur.len() - 1 {
                cur[i] = left;
                let g = MultiDigraph::from_flat(j, cur.clone());
                if g.is_stable() {
                    out.push(g);
                }
                return;
            }
            for v in 0..=left {
                cur[i] = v;
                go(i + 1, left - v, cur, j, out);
            }
        }
        go(0, s as u32, &mut cur, j, &mut out);
        out
    }

    fn brute_force_classes(j: usize, s: usize) -> Vec<MultiDigraph> {
        let mut reps: Vec<MultiDigraph> = Vec::new();
        for g in raw_stable_matrices(j, s) {
            if !reps.iter().any(|r| are_isomorphic(r, &g)) {
                reps.push(g);
            }
        }
        reps
    }

    #[test]
    fn small_cases_match_brute_force() {
        assert_eq!(enumerate_stable(1, 2), vec![parse_graph("2").unwrap()]);
        assert_eq!(enumerate_stable(1, 3), vec![parse_graph("3").unwrap()]);
        let two = enumerate_stable(2, 4);
        assert_eq!(two.len(), 3);
        for text in ["1 1;1 1", "0 2;2 0", "2 0;0 2"] {
            let g = parse_graph(text).unwrap();
            assert!(two.iter().any(|h| are_isomorphic(h, &g)), "{text}");
        }
        assert_eq!(brute_force_classes(2, 4).len(), 3);
        assert!(enumerate_stable(2, 3).is_empty());
        assert!(enumerate_stable(0, 4).is_empty());
    }

    #[test]
    fn exhaustive_against_raw_generator_up_to_weight_three() {
        for k in 1..=3 {
            for j in 1..=k {
                let s = j + k;
                let reps = enumerate_stable(j, s);
                for g in raw_stable_matrices(j, s) {
                    let hits = reps.iter().filter(|r| are_isomorphic(r, &g)).count();
                    assert_eq!(hits, 1, "{g:?} matched {hits} representatives");
                }
                assert_eq!(reps.len(), brute_force_classes(j, s).len());
            }
        }
    }

    #[test]
    fn output_is_sorted_canonical_and_stable() {
        let graphs = enumerate_weight(3);
        assert_eq!(graphs.len(), 15);
        let keys: Vec<_> = graphs.iter().map(|g| g.canonical_key()).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        for (g, key) in graphs.iter().zip(&keys) {
            assert_eq!(&key.to_graph(), g);
            assert!(g.is_stable());
            assert_eq!(g.weight(), 3);
        }
        assert_eq!(graphs, enumerate_weight(3));
    }

    #[test]
    fn weight_counts() {
        assert_eq!(enumerate_weight(1).len(), 1);
        assert_eq!(enumerate_weight(2).len(), 4);
        assert_eq!(
            classify(2),
            GraphClassCounts {
                total: 4,
                connected: 3,
                strongly_connected: 3,
                lambda: 3
            }
        );
    }

    #[test]
    fn partitions() {
        assert_eq!(partitions_with_min(5, 2, 2), vec![vec![3, 2]]);
        assert_eq!(partitions_with_min(4, 2, 2), vec![vec![2, 2]]);
        assert!(partitions_with_min(3, 2, 2).is_empty());
        assert_eq!(partitions_with_min(8, 3, 2).len(), 2);
    }
}
