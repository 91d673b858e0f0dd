//! Characteristic polynomials, linear subgraphs, and the orbit-sum form of
//! `z` for strongly connected graphs.
//!
//! A linear subgraph is a set of vertex-disjoint simple directed cycles
//! (loops count as 1-cycles). Parallel edges are labeled `0..A_ij`, and two
//! linear subgraphs using different labels on the same arc are different.
//!
//! `Aut(G)` acts on labeled linear subgraphs: an element is a vertex
//! automorphism `phi` of the adjacency matrix together with, for every arc
//! `(i, j)`, a bijection from the labels of `i -> j` onto the labels of
//! `phi(i) -> phi(j)`. Its order is therefore the matrix stabilizer count
//! times `prod A_ij!`.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{for_each_permutation, MultiDigraph};
use crate::rational::Rational;

/// `det(lambda I - A) = lambda^n + c_1 lambda^(n-1) + ... + c_n`, stored as
/// `[1, c_1, ..., c_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharPoly {
    pub coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `det(I - A)`, the value at `lambda = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| i64::try_from(c).ok()).collect()
    }
}

/// Faddeev-LeVerrier on the integer adjacency matrix; every division is
/// exact.
pub fn charpoly(g: &MultiDigraph) -> CharPoly {
    let n = g.vertex_count();
    let a: Vec<Vec<BigInt>> = g
        .rows()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let mut coeffs = vec![BigInt::one()];
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{k-1} I
        let mut next = mat_mul(&a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[k - 1];
        }
        m = next;
        let am = mat_mul(&a, &m);
        let trace: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        let (q, r) = (-trace).div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        coeffs.push(q);
    }
    CharPoly { coeffs }
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

/// A labeled linear subgraph, stored as a partial successor map: `succ[v]`
/// is `Some((w, label))` when the arc `v -> w` with that parallel-edge label
/// belongs to the subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearSubgraph {
    succ: Vec<Option<(usize, u32)>>,
}

/// One cycle of a linear subgraph: vertices in traversal order starting from
/// the smallest, and the label of each arc `vertices[t] -> vertices[t + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub labels: Vec<u32>,
}

impl LinearSubgraph {
    pub fn empty(n: usize) -> Self {
        LinearSubgraph {
            succ: vec![None; n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.succ.iter().filter(|s| s.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count() == 0
    }

    /// `p(L)`: number of cycles.
    pub fn component_count(&self) -> usize {
        self.cycles().len()
    }

    pub fn cycles(&self) -> Vec<Cycle> {
        let mut seen = vec![false; self.succ.len()];
        let mut out = Vec::new();
        for start in 0..self.succ.len() {
            if seen[start] || self.succ[start].is_none() {
                continue;
            }
            let mut cycle = Cycle {
                vertices: Vec::new(),
                labels: Vec::new(),
            };
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                let (w, label) = self.succ[v].expect("linear subgraph successor");
                cycle.vertices.push(v);
                cycle.labels.push(label);
                v = w;
            }
            out.push(cycle);
        }
        out
    }

    /// Checks the defining property against `g`: every covered vertex has
    /// exactly one outgoing and one incoming subgraph arc, and each arc label
    /// exists in `g`.
    pub fn is_valid_in(&self, g: &MultiDigraph) -> bool {
        let n = g.vertex_count();
        if self.succ.len() != n {
            return false;
        }
        let mut indeg = vec![0u32; n];
        for s in self.succ.iter().flatten() {
            indeg[s.0] += 1;
        }
        (0..n).all(|v| match self.succ[v] {
            Some((w, label)) => label < g.get(v, w) && indeg[v] == 1,
            None => indeg[v] == 0,
        }) && indeg.iter().all(|&d| d <= 1)
    }
}

/// Every nonempty labeled linear subgraph of `g`.
pub fn linear_subgraphs(g: &MultiDigraph) -> Vec<LinearSubgraph> {
    let mut out = Vec::new();
    let mut cur = LinearSubgraph::empty(g.vertex_count());
    extend_linear(g, 0, &mut cur, &mut out);
    out.retain(|l| !l.is_empty());
    out
}

fn extend_linear(
    g: &MultiDigraph,
    from: usize,
    cur: &mut LinearSubgraph,
    out: &mut Vec<LinearSubgraph>,
) {
    let n = g.vertex_count();
    let Some(v) = (from..n).find(|&v| cur.succ[v].is_none()) else {
        out.push(cur.clone());
        return;
    };
    // v stays uncovered
    extend_linear(g, v + 1, cur, out);
    // or v is the smallest vertex of a new cycle
    let mut path = vec![v];
    grow_cycle(g, v, &mut path, cur, out);
}

fn grow_cycle(
    g: &MultiDigraph,
    start: usize,
    path: &mut Vec<usize>,
    cur: &mut LinearSubgraph,
    out: &mut Vec<LinearSubgraph>,
) {
    let n = g.vertex_count();
    let last = *path.last().unwrap();
    // close the cycle
    for label in 0..g.get(last, start) {
        cur.succ[last] = Some((start, label));
        extend_linear(g, start + 1, cur, out);
        cur.succ[last] = None;
    }
    for w in start + 1..n {
        if cur.succ[w].is_some() || path.contains(&w) {
            continue;
        }
        for label in 0..g.get(last, w) {
            cur.succ[last] = Some((w, label));
            path.push(w);
            grow_cycle(g, start, path, cur, out);
            path.pop();
            cur.succ[last] = None;
        }
    }
}

/// `c_i` as the signed count `sum (-1)^p(L)` over linear subgraphs with
/// exactly `i` vertices. The empty subgraph gives `c_0 = 1`.
pub fn coefficient_from_linear(g: &MultiDigraph, i: usize) -> BigInt {
    if i == 0 {
        return BigInt::one();
    }
    linear_subgraphs(g)
        .iter()
        .filter(|l| l.vertex_count() == i)
        .map(|l| parity_sign(l.component_count()))
        .sum::<i64>()
        .into()
}

fn parity_sign(p: usize) -> i64 {
    if p % 2 == 0 {
        1
    } else {
        -1
    }
}

/// An element of `Aut(G)` with labeled parallel edges.
#[derive(Clone, Debug)]
pub struct LabeledAutomorphism {
    pub phi: Vec<usize>,
    /// Indexed by `i * n + j`; maps labels of `i -> j` to labels of
    /// `phi(i) -> phi(j)`.
    pub labels: Vec<Vec<u32>>,
}

impl LabeledAutomorphism {
    pub fn apply(&self, l: &LinearSubgraph) -> LinearSubgraph {
        let n = self.phi.len();
        let mut succ = vec![None; n];
        for (v, s) in l.succ.iter().enumerate() {
            if let Some((w, label)) = *s {
                succ[self.phi[v]] = Some((self.phi[w], self.labels[v * n + w][label as usize]));
            }
        }
        LinearSubgraph { succ }
    }
}

/// Every element of `Aut(G)`, labeled edges included.
pub fn labeled_automorphisms(g: &MultiDigraph) -> Vec<LabeledAutomorphism> {
    let n = g.vertex_count();
    let arcs: Vec<usize> = (0..n * n).filter(|&c| g.flat()[c] > 1).collect();
    // all permutations of 0..a for each multiplicity a that occurs
    let mut perms_by_size: HashMap<u32, Vec<Vec<u32>>> = HashMap::new();
    for &c in &arcs {
        let a = g.flat()[c];
        perms_by_size.entry(a).or_insert_with(|| {
            let mut items: Vec<usize> = (0..a as usize).collect();
            let mut all = Vec::new();
            for_each_permutation(&mut items, &mut |p| {
                all.push(p.iter().map(|&x| x as u32).collect())
            });
            all
        });
    }
    let identity: Vec<Vec<u32>> = g.flat().iter().map(|&a| (0..a).collect()).collect();
    let mut out = Vec::new();
    for phi in g.vertex_automorphisms() {
        let mut labels = identity.clone();
        product_of_label_maps(g, &arcs, 0, &perms_by_size, &mut labels, &mut |labels| {
            out.push(LabeledAutomorphism {
                phi: phi.clone(),
                labels: labels.to_vec(),
            })
        });
    }
    out
}

fn product_of_label_maps(
    g: &MultiDigraph,
    arcs: &[usize],
    idx: usize,
    perms: &HashMap<u32, Vec<Vec<u32>>>,
    labels: &mut Vec<Vec<u32>>,
    visit: &mut dyn FnMut(&[Vec<u32>]),
) {
    if idx == arcs.len() {
        visit(labels);
        return;
    }
    let c = arcs[idx];
    for p in &perms[&g.flat()[c]] {
        labels[c] = p.clone();
        product_of_label_maps(g, arcs, idx + 1, perms, labels, visit);
    }
}

/// One `Aut(G)`-orbit of labeled linear subgraphs (the empty one included).
#[derive(Clone, Debug)]
pub struct LinearOrbit {
    pub representative: LinearSubgraph,
    pub size: usize,
    pub stabilizer: usize,
}

/// Partitions all labeled linear subgraphs of `g`, the empty one included,
/// into `Aut(G)`-orbits and records each orbit's size and stabilizer order.
pub fn linear_subgraph_orbits(g: &MultiDigraph) -> Vec<LinearOrbit> {
    let group = labeled_automorphisms(g);
    let mut all = linear_subgraphs(g);
    all.push(LinearSubgraph::empty(g.vertex_count()));
    all.sort();
    let mut assigned: HashSet<LinearSubgraph> = HashSet::new();
    let mut orbits = Vec::new();
    for l in all {
        if assigned.contains(&l) {
            continue;
        }
        let mut orbit: HashSet<LinearSubgraph> = HashSet::new();
        let mut stabilizer = 0;
        for h in &group {
            let image = h.apply(&l);
            if image == l {
                stabilizer += 1;
            }
            orbit.insert(image);
        }
        let size = orbit.len();
        assigned.extend(orbit);
        orbits.push(LinearOrbit {
            representative: l,
            size,
            stabilizer,
        });
    }
    orbits
}

/// `z(G)` as the orbit sum `sum (-1)^(|V| + 1 + p(L)) / |Aut_G(L)|` over
/// `Aut(G)`-classes of linear subgraphs, for strongly connected semistable
/// graphs.
pub fn z_orbit(g: &MultiDigraph) -> Result<Rational> {
    if !g.is_strongly_connected()? {
        return Err(Error::NotStronglyConnected);
    }
    if !g.is_semistable() {
        return Err(Error::NotSemistable);
    }
    let n = g.vertex_count();
    Ok(linear_subgraph_orbits(g)
        .iter()
        .map(|o| {
            let p = o.representative.component_count();
            Rational::new(parity_sign(n + 1 + p), o.stabilizer as i64)
        })
        .sum())
}
