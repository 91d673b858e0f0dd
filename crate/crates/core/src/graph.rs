//! Dense multidigraphs: degrees, connectivity, canonical labeling and
//! automorphism counting.
//!
//! Vertices are `0..n`. `adj[i][j]` is the number of parallel edges `i -> j`;
//! diagonal entries are loop counts and a loop adds one to both the out- and
//! in-degree of its vertex.
//!
//! Canonical forms and automorphisms are found by searching vertex
//! permutations directly. Every stable graph of weight `k` has at most `k`
//! vertices, so this stays cheap for the graphs the rest of the crate handles.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDigraph {
    n: usize,
    adj: Vec<u32>,
}

/// `n` followed by the lexicographically smallest row-major flattening of the
/// adjacency matrix over all vertex relabelings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u32>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub outdeg: Vec<u32>,
    pub indeg: Vec<u32>,
}

impl CanonicalKey {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0[0] as usize
    }

    /// The canonical representative this key describes.
    pub fn to_graph(&self) -> MultiDigraph {
        let n = self.vertex_count();
        MultiDigraph {
            n,
            adj: self.0[1..].to_vec(),
        }
    }
}

impl MultiDigraph {
    pub fn empty() -> Self {
        MultiDigraph {
            n: 0,
            adj: Vec::new(),
        }
    }

    /// Graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Self {
        MultiDigraph {
            n,
            adj: vec![0; n * n],
        }
    }

    /// Builds a graph from square rows. Panics on a ragged matrix; use
    /// [`parse_graph`] for untrusted input.
    pub fn from_rows<R: AsRef<[u32]>>(rows: &[R]) -> Self {
        let n = rows.len();
        let mut adj = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), n, "adjacency matrix must be square");
            adj.extend_from_slice(row);
        }
        MultiDigraph { n, adj }
    }

    pub(crate) fn from_flat(n: usize, adj: Vec<u32>) -> Self {
        debug_assert_eq!(adj.len(), n * n);
        MultiDigraph { n, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.adj[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: u32) {
        self.adj[i * self.n + j] = value;
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.adj
            .chunks(self.n.max(1))
            .take(self.n)
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn flat(&self) -> &[u32] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|&a| a as usize).sum()
    }

    /// `|E| - |V|`.
    pub fn weight(&self) -> i64 {
        self.edge_count() as i64 - self.n as i64
    }

    pub fn out_degree(&self, v: usize) -> u32 {
        (0..self.n).map(|j| self.get(v, j)).sum()
    }

    pub fn in_degree(&self, v: usize) -> u32 {
        (0..self.n).map(|i| self.get(i, v)).sum()
    }

    pub fn degrees(&self) -> DegreeProfile {
        DegreeProfile {
            outdeg: (0..self.n).map(|v| self.out_degree(v)).collect(),
            indeg: (0..self.n).map(|v| self.in_degree(v)).collect(),
        }
    }

    /// Every vertex has out-degree and in-degree at least 2.
    pub fn is_stable(&self) -> bool {
        let d = self.degrees();
        d.outdeg
            .iter()
            .zip(&d.indeg)
            .all(|(&o, &i)| o >= 2 && i >= 2)
    }

    pub fn is_semistable(&self) -> bool {
        let d = self.degrees();
        d.outdeg
            .iter()
            .zip(&d.indeg)
            .all(|(&o, &i)| o >= 1 && i >= 1 && o + i >= 3)
    }

    /// Vertex sets of the connected components of the underlying undirected
    /// support, each sorted, listed by smallest vertex.
    pub fn weak_component_vertices(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in 0..self.n {
                    if !seen[w] && (self.get(u, w) > 0 || self.get(w, u) > 0) {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced sub-multidigraphs on the weak components, in canonical-key
    /// order. A connected graph is returned as is; otherwise each component
    /// is returned in canonical form.
    pub fn weak_components(&self) -> Vec<MultiDigraph> {
        let comps = self.weak_component_vertices();
        if comps.len() == 1 {
            return vec![self.clone()];
        }
        let mut keyed: Vec<(CanonicalKey, MultiDigraph)> = comps
            .iter()
            .map(|vs| {
                let key = self.induced(vs).canonical_key();
                let g = key.to_graph();
                (key, g)
            })
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.into_iter().map(|(_, g)| g).collect()
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.n > 0 && self.weak_component_vertices().len() == 1
    }

    pub fn induced(&self, vertices: &[usize]) -> MultiDigraph {
        let m = vertices.len();
        let mut adj = Vec::with_capacity(m * m);
        for &i in vertices {
            for &j in vertices {
                adj.push(self.get(i, j));
            }
        }
        MultiDigraph { n: m, adj }
    }

    fn reach(&self, start: usize, forward: bool) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for w in 0..self.n {
                let a = if forward {
                    self.get(u, w)
                } else {
                    self.get(w, u)
                };
                if a > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    pub fn is_strongly_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(self.reach(0, true).into_iter().all(|b| b)
            && self.reach(0, false).into_iter().all(|b| b))
    }

    /// Relabels vertex `i` as `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> MultiDigraph {
        assert_eq!(perm.len(), self.n);
        let mut out = MultiDigraph::edgeless(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(perm[i], perm[j], self.get(i, j));
            }
        }
        out
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        let n = self.n;
        let mut best: Option<Vec<u32>> = None;
        let mut order: Vec<usize> = (0..n).collect();
        let mut scratch = vec![0u32; n * n];
        for_each_permutation(&mut order, &mut |order| {
            // order[r] is the original vertex placed at position r.
            match &best {
                None => {
                    for r in 0..n {
                        for c in 0..n {
                            scratch[r * n + c] = self.get(order[r], order[c]);
                        }
                    }
                    best = Some(scratch.clone());
                }
                Some(cur) => {
                    let mut idx = 0;
                    let mut smaller = false;
                    'cmp: for r in 0..n {
                        for c in 0..n {
                            let v = self.get(order[r], order[c]);
                            if v != cur[idx] {
                                smaller = v < cur[idx];
                                break 'cmp;
                            }
                            idx += 1;
                        }
                    }
                    if smaller {
                        for r in 0..n {
                            for c in 0..n {
                                scratch[r * n + c] = self.get(order[r], order[c]);
                            }
                        }
                        best = Some(scratch.clone());
                    }
                }
            }
        });
        let mut key = Vec::with_capacity(n * n + 1);
        key.push(n as u32);
        key.extend(best.unwrap_or_default());
        CanonicalKey(key)
    }

    pub fn canonical_form(&self) -> MultiDigraph {
        self.canonical_key().to_graph()
    }

    pub fn is_isomorphic_to(&self, other: &MultiDigraph) -> bool {
        are_isomorphic(self, other)
    }

    /// All vertex permutations `phi` with `adj[phi(i)][phi(j)] == adj[i][j]`.
    pub fn vertex_automorphisms(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.search_automorphisms(&mut |phi| out.push(phi.to_vec()));
        out
    }

    /// Number of vertex permutations preserving the adjacency matrix.
    pub fn matrix_stabilizer_count(&self) -> u64 {
        let mut count = 0u64;
        self.search_automorphisms(&mut |_| count += 1);
        count
    }

    /// `|Aut(G)|` with parallel edges treated as distinguishable: the matrix
    /// stabilizer count times the product of `A_ij!`.
    ///
    /// Panics if the order does not fit in a `u64`.
    pub fn aut_order(&self) -> u64 {
        let edge_perms = self
            .adj
            .iter()
            .map(|&a| factorial(a as u64))
            .try_fold(1u64, |acc, f| acc.checked_mul(f))
            .expect("automorphism group order overflows u64");
        self.matrix_stabilizer_count()
            .checked_mul(edge_perms)
            .expect("automorphism group order overflows u64")
    }

    fn search_automorphisms(&self, visit: &mut dyn FnMut(&[usize])) {
        let n = self.n;
        if n == 0 {
            visit(&[]);
            return;
        }
        let degs = self.degrees();
        let sig: Vec<(u32, u32, u32)> = (0..n)
            .map(|v| (self.get(v, v), degs.outdeg[v], degs.indeg[v]))
            .collect();
        // Visit vertices in BFS order so each new vertex is usually adjacent
        // to an already mapped one; this keeps the search tree narrow.
        let order: Vec<usize> = self
            .weak_component_vertices()
            .into_iter()
            .flat_map(|comp| self.bfs_order(comp[0]))
            .collect();
        let mut phi = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_automorphism(&order, 0, &sig, &mut phi, &mut used, visit);
    }

    fn bfs_order(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut out = Vec::new();
        while let Some(u) = queue.pop_front() {
            out.push(u);
            for w in 0..self.n {
                if !seen[w] && (self.get(u, w) > 0 || self.get(w, u) > 0) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        out
    }

    fn extend_automorphism(
        &self,
        order: &[usize],
        depth: usize,
        sig: &[(u32, u32, u32)],
        phi: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if depth == order.len() {
            visit(phi);
            return;
        }
        let v = order[depth];
        for w in 0..self.n {
            if used[w] || sig[w] != sig[v] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&u| {
                let fu = phi[u];
                self.get(u, v) == self.get(fu, w) && self.get(v, u) == self.get(w, fu)
            });
            if !consistent {
                continue;
            }
            phi[v] = w;
            used[w] = true;
            self.extend_automorphism(order, depth + 1, sig, phi, used, visit);
            used[w] = false;
            phi[v] = usize::MAX;
        }
    }
}

pub fn are_isomorphic(g: &MultiDigraph, h: &MultiDigraph) -> bool {
    g.n == h.n && g.edge_count() == h.edge_count() && g.canonical_key() == h.canonical_key()
}

/// Block-diagonal union; vertices of `gs[0]` come first.
pub fn disjoint_union(gs: &[MultiDigraph]) -> MultiDigraph {
    let n: usize = gs.iter().map(|g| g.n).sum();
    let mut out = MultiDigraph::edgeless(n);
    let mut offset = 0;
    for g in gs {
        for i in 0..g.n {
            for j in 0..g.n {
                out.set(offset + i, offset + j, g.get(i, j));
            }
        }
        offset += g.n;
    }
    out
}

pub(crate) fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Heap's algorithm; calls `visit` once per ordering of `items`.
pub(crate) fn for_each_permutation(items: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
    let n = items.len();
    let mut c = vec![0usize; n];
    visit(items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            visit(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Parses rows of space-separated nonnegative integers. Rows are separated by
/// `;` or newlines. The empty string is the empty graph.
pub fn parse_graph(text: &str) -> Result<MultiDigraph> {
    let rows: Vec<&str> = text
        .split([';', '\n'])
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .collect();
    let n = rows.len();
    let mut adj = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        let mut count = 0;
        for (c, tok) in row.split_whitespace().enumerate() {
            let value: u32 = tok.parse().map_err(|_| Error::Parse {
                row: r + 1,
                col: c + 1,
                msg: format!("`{tok}` is not a nonnegative integer"),
            })?;
            adj.push(value);
            count += 1;
        }
        if count != n {
            return Err(Error::Parse {
                row: r + 1,
                col: count.min(n) + 1,
                msg: format!("ragged matrix: row has {count} entries, expected {n}"),
            });
        }
    }
    Ok(MultiDigraph { n, adj })
}

/// Single-line form: `0 2;2 0`.
pub fn format_graph(g: &MultiDigraph) -> String {
    g.rows()
        .iter()
        .map(|row| row.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(";")
}

/// One row per line, for files.
pub fn format_graph_lines(g: &MultiDigraph) -> String {
    format_graph(g).replace(';', "\n")
}

impl fmt::Display for MultiDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_graph(self))
    }
}

impl fmt::Debug for MultiDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiDigraph[{}]", format_graph(self))
    }
}

impl FromStr for MultiDigraph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_graph(s)
    }
}
