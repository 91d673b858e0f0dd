//! Euler tours, arborescences, cycle decompositions, Bernoulli numbers, and
//! the two catalog-wide identities built from them.
//!
//! Edges are labeled: an arc of multiplicity `a` contributes `a` distinct
//! edges. Walks are enumerated over these labeled edges.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::enumerate_weight;
use crate::error::{Error, Result};
use crate::graph::{factorial, MultiDigraph};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::zeta::{det_a_minus_i, det_int, z};

/// Edge-count limit for the backtracking tour counter.
pub const BRUTE_FORCE_EDGE_LIMIT: usize = 12;

pub fn is_balanced(g: &MultiDigraph) -> bool {
    (0..g.vertex_count()).all(|v| g.out_degree(v) == g.in_degree(v))
}

/// `prod_v (deg+(v) - 1)!`, with `0! = 1` standing in for isolated vertices.
pub fn out_degree_factorial_product(g: &MultiDigraph) -> u64 {
    (0..g.vertex_count())
        .map(|v| factorial(g.out_degree(v).saturating_sub(1) as u64))
        .product()
}

/// Labeled edges `(tail, head)` in row-major order, `a` copies per arc.
fn labeled_edges(g: &MultiDigraph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut out = Vec::with_capacity(g.edge_count());
    for i in 0..n {
        for j in 0..n {
            for _ in 0..g.get(i, j) {
                out.push((i, j));
            }
        }
    }
    out
}

fn check_vertex(g: &MultiDigraph, v: usize) -> Result<()> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if v >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.vertex_count(),
        });
    }
    Ok(())
}

/// Spanning trees oriented toward `root`, by the matrix-tree theorem on the
/// loopless out-degree Laplacian with row and column `root` deleted.
pub fn arborescence_count(g: &MultiDigraph, root: usize) -> Result<BigInt> {
    check_vertex(g, root)?;
    let n = g.vertex_count();
    let keep: Vec<usize> = (0..n).filter(|&v| v != root).collect();
    let lap: Vec<Vec<BigInt>> = keep
        .iter()
        .map(|&i| {
            keep.iter()
                .map(|&j| {
                    if i == j {
                        BigInt::from(g.out_degree(i) - g.get(i, i))
                    } else {
                        -BigInt::from(g.get(i, j))
                    }
                })
                .collect()
        })
        .collect();
    Ok(det_int(&lap))
}

/// Direct count of in-trees toward `root`: every other vertex picks one
/// outgoing non-loop edge, and the picks must lead every vertex to `root`.
pub fn arborescence_bruteforce(g: &MultiDigraph, root: usize) -> Result<u64> {
    check_vertex(g, root)?;
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    Ok(pick_parents(g, root, 0, &mut parent))
}

fn pick_parents(g: &MultiDigraph, root: usize, v: usize, parent: &mut Vec<usize>) -> u64 {
    let n = g.vertex_count();
    if v == n {
        let reaches_root = (0..n).all(|start| {
            let mut cur = start;
            for _ in 0..n {
                if cur == root {
                    return true;
                }
                cur = parent[cur];
            }
            cur == root
        });
        return reaches_root as u64;
    }
    if v == root {
        return pick_parents(g, root, v + 1, parent);
    }
    let mut total = 0;
    for w in (0..n).filter(|&w| w != v) {
        let mult = g.get(v, w) as u64;
        if mult == 0 {
            continue;
        }
        parent[v] = w;
        total += mult * pick_parents(g, root, v + 1, parent);
    }
    parent[v] = usize::MAX;
    total
}

/// Euler tours starting with a fixed edge, by the BEST theorem:
/// `tau(G) * prod (deg+(v) - 1)!` with `tau` the in-tree count rooted at the
/// head of the first edge. Zero for graphs that are edgeless, unbalanced, or
/// not weakly connected.
pub fn euler_tour_count(g: &MultiDigraph) -> u64 {
    if g.edge_count() == 0 || !is_balanced(g) || !g.is_weakly_connected() {
        return 0;
    }
    let (_, head) = labeled_edges(g)[0];
    let trees = arborescence_count(g, head)
        .expect("head of an edge is a vertex")
        .to_u64()
        .expect("arborescence count fits in u64");
    trees * out_degree_factorial_product(g)
}

/// Counts closed trails that begin with the first labeled edge and use every
/// edge exactly once.
pub fn euler_tour_bruteforce(g: &MultiDigraph) -> Result<u64> {
    let edges = labeled_edges(g);
    if edges.len() > BRUTE_FORCE_EDGE_LIMIT {
        return Err(Error::GuardrailExceeded {
            edges: edges.len(),
            limit: BRUTE_FORCE_EDGE_LIMIT,
        });
    }
    if edges.is_empty() {
        return Ok(0);
    }
    let mut used = vec![false; edges.len()];
    used[0] = true;
    let (start, next) = edges[0];
    Ok(extend_tour(&edges, &mut used, start, next, 1))
}

fn extend_tour(
    edges: &[(usize, usize)],
    used: &mut [bool],
    start: usize,
    at: usize,
    count: usize,
) -> u64 {
    if count == edges.len() {
        return (at == start) as u64;
    }
    let mut total = 0;
    for e in 0..edges.len() {
        if used[e] || edges[e].0 != at {
            continue;
        }
        used[e] = true;
        total += extend_tour(edges, used, start, edges[e].1, count + 1);
        used[e] = false;
    }
    total
}

/// `sum_H N^p(H)` over cycle decompositions `H` of `g`.
///
/// A cycle decomposition is a set of closed trails, each taken up to
/// rotation, that together use every labeled edge exactly once; `p(H)` is the
/// number of trails. A block of edges therefore counts once per distinct
/// closed trail through it. Unbalanced graphs give the zero polynomial.
pub fn cycle_decomposition_poly(g: &MultiDigraph) -> Polynomial {
    let edges = labeled_edges(g);
    if !is_balanced(g) {
        return Polynomial::zero();
    }
    let mut counts = vec![0u64; edges.len() + 1];
    let mut used = vec![false; edges.len()];
    decompose(&edges, &mut used, 0, &mut counts);
    Polynomial::new(
        counts
            .into_iter()
            .map(|c| Rational::from(c as i64))
            .collect(),
    )
}

fn decompose(edges: &[(usize, usize)], used: &mut [bool], trails: usize, counts: &mut [u64]) {
    // Each new trail is written starting with the lowest unused edge, which
    // fixes its rotation.
    let Some(first) = used.iter().position(|u| !u) else {
        counts[trails] += 1;
        return;
    };
    used[first] = true;
    let (start, next) = edges[first];
    close_or_extend(edges, used, start, next, trails, counts);
    used[first] = false;
}

fn close_or_extend(
    edges: &[(usize, usize)],
    used: &mut [bool],
    start: usize,
    at: usize,
    trails: usize,
    counts: &mut [u64],
) {
    if at == start {
        decompose(edges, used, trails + 1, counts);
    }
    for e in 0..edges.len() {
        if used[e] || edges[e].0 != at {
            continue;
        }
        used[e] = true;
        close_or_extend(edges, used, start, edges[e].1, trails, counts);
        used[e] = false;
    }
}

/// Bernoulli numbers with `B_1 = -1/2`, from
/// `sum_{j=0}^{m} C(m+1, j) B_j = 0`.
pub fn bernoulli(k: usize) -> Rational {
    bernoulli_table(k).pop().expect("table has k + 1 entries")
}

/// `[B_0, ..., B_k]`.
pub fn bernoulli_table(k: usize) -> Vec<Rational> {
    let mut table: Vec<Rational> = Vec::with_capacity(k + 1);
    table.push(Rational::one());
    for m in 1..=k {
        let mut binom = BigInt::from(1); // C(m+1, 0)
        let mut acc = Rational::zero();
        for (j, b) in table.iter().enumerate() {
            acc += Rational::from(binom.clone()) * b;
            binom = binom * (m + 1 - j) / (j + 1);
        }
        table.push(-acc / Rational::from((m + 1) as i64));
    }
    table
}

fn check_weight(k: usize, max: usize) -> Result<()> {
    if k == 0 || k > max {
        return Err(Error::WeightOutOfRange {
            weight: k,
            min: 1,
            max,
        });
    }
    Ok(())
}

/// `sum_{G} z(G) * eps(G) * prod (deg+(v) - 1)!` over the stable graphs of
/// weight `k`.
pub fn bernoulli_identity_lhs(k: usize) -> Result<Rational> {
    check_weight(k, 5)?;
    bernoulli_sum(&enumerate_weight(k))
}

pub fn bernoulli_sum(graphs: &[MultiDigraph]) -> Result<Rational> {
    let terms: Result<Vec<Rational>> = graphs
        .par_iter()
        .map(|g| {
            let tours = euler_tour_count(g);
            if tours == 0 {
                return Ok(Rational::zero());
            }
            let weight = tours * out_degree_factorial_product(g);
            Ok(z(g)? * Rational::from(weight as i64))
        })
        .collect();
    Ok(terms?.into_iter().sum())
}

/// `(-1)^(k+1) B_k / k`.
pub fn bernoulli_identity_rhs(k: usize) -> Rational {
    let sign = if k % 2 == 1 { 1 } else { -1 };
    bernoulli(k) * Rational::new(sign, k as i64)
}

/// `P_k(N) = sum_{1 <= i_1 < ... < i_k <= N} (-i_1)...(-i_k)` at one `N`.
pub fn unit_ball_value(k: usize, n: usize) -> Rational {
    let mut e = vec![BigInt::from(0); k + 1];
    e[0] = BigInt::from(1);
    for i in 1..=n {
        for t in (1..=k).rev() {
            let prev = e[t - 1].clone();
            e[t] -= prev * i;
        }
    }
    Rational::from(e[k].clone())
}

/// `P_k` as a polynomial in `N`, interpolated through `N = 0..=2k`.
pub fn unit_ball_polynomial(k: usize) -> Polynomial {
    let points: Vec<(Rational, Rational)> = (0..=2 * k)
        .map(|n| (Rational::from(n as i64), unit_ball_value(k, n)))
        .collect();
    Polynomial::interpolate(&points)
}

#[derive(Clone, Debug, Serialize)]
pub struct UnitBallCheck {
    pub weight: usize,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
    pub equal: bool,
}

/// Graph side of the unit-ball identity for one graph:
/// `(-1)^n(G) det(A - I) / |Aut(G)| * prod (deg+(v) - 1)! * sum_H N^p(H)`
/// with `n(G)` the number of weak components.
pub fn unit_ball_term(g: &MultiDigraph) -> Polynomial {
    let decomp = cycle_decomposition_poly(g);
    if decomp.is_zero() {
        return decomp;
    }
    let components = g.weak_component_vertices().len();
    let sign = if components % 2 == 0 { 1 } else { -1 };
    let coeff = Rational::new(det_a_minus_i(g) * sign, BigInt::from(g.aut_order()))
        * Rational::from(out_degree_factorial_product(g) as i64);
    decomp.scale(&coeff)
}

pub fn unit_ball_identity(k: usize) -> Result<UnitBallCheck> {
    check_weight(k, 4)?;
    let graphs = enumerate_weight(k);
    let lhs: Polynomial = graphs
        .par_iter()
        .map(unit_ball_term)
        .collect::<Vec<_>>()
        .into_iter()
        .sum();
    let rhs = unit_ball_polynomial(k);
    Ok(UnitBallCheck {
        weight: k,
        equal: lhs == rhs,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn g(text: &str) -> MultiDigraph {
        parse_graph(text).unwrap()
    }

    fn q(text: &str) -> Rational {
        text.parse().unwrap()
    }

    #[test]
    fn balance() {
        assert!(is_balanced(&g("2")));
        assert!(is_balanced(&g("0 2;2 0")));
        assert!(!is_balanced(&g("0 2;0 2")));
    }

    #[test]
    fn arborescences() {
        assert_eq!(arborescence_count(&g("3"), 0).unwrap(), BigInt::from(1));
        assert_eq!(
            arborescence_count(&g("0 2;2 0"), 0).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            arborescence_count(&g("1 1;1 1"), 0).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(arborescence_bruteforce(&g("0 2;2 0"), 0).unwrap(), 2);
        assert_eq!(arborescence_bruteforce(&g("1 1;1 1"), 0).unwrap(), 1);
        assert!(arborescence_count(&g("2"), 1).is_err());
        assert!(arborescence_count(&MultiDigraph::empty(), 0).is_err());
    }

    #[test]
    fn euler_tours() {
        assert_eq!(euler_tour_count(&g("3")), 2);
        assert_eq!(euler_tour_count(&g("1 1;1 1")), 1);
        assert_eq!(euler_tour_count(&g("0 2;2 0")), 2);
        assert_eq!(euler_tour_count(&g("2 0;0 2")), 0);
        assert_eq!(euler_tour_bruteforce(&g("3")).unwrap(), 2);
        assert_eq!(euler_tour_bruteforce(&g("0 2;0 2")).unwrap(), 0);
        assert_eq!(euler_tour_bruteforce(&g("2")).unwrap(), 1);
        assert!(matches!(
            euler_tour_bruteforce(&g("13")),
            Err(Error::GuardrailExceeded { edges: 13, .. })
        ));
    }

    #[test]
    fn cycle_decompositions() {
        assert_eq!(
            cycle_decomposition_poly(&g("2")),
            Polynomial::from_integers(&[0, 1, 1])
        );
        assert_eq!(
            cycle_decomposition_poly(&g("0 1;1 0")),
            Polynomial::from_integers(&[0, 1])
        );
        assert!(cycle_decomposition_poly(&g("0 2;0 2")).is_zero());
        // three loops: N^3 + 3N^2 + 2N
        assert_eq!(
            cycle_decomposition_poly(&g("3")),
            Polynomial::from_integers(&[0, 2, 3, 1])
        );
        assert_eq!(
            cycle_decomposition_poly(&g("0 2;2 0")),
            Polynomial::from_integers(&[0, 2, 2])
        );
    }

    #[test]
    fn bernoulli_numbers() {
        assert_eq!(bernoulli(0), q("1"));
        assert_eq!(bernoulli(1), q("-1/2"));
        assert_eq!(bernoulli(2), q("1/6"));
        assert_eq!(bernoulli(3), q("0"));
        assert_eq!(bernoulli(4), q("-1/30"));
        assert_eq!(bernoulli(6), q("1/42"));
        assert_eq!(bernoulli(12), q("-691/2730"));
    }

    #[test]
    fn unit_ball_values() {
        assert_eq!(unit_ball_value(1, 3), q("-6"));
        assert_eq!(unit_ball_value(2, 3), q("11"));
        assert_eq!(unit_ball_value(2, 1), q("0"));
        let p1 = unit_ball_polynomial(1);
        assert_eq!(p1.coeffs(), &[q("0"), q("-1/2"), q("-1/2")]);
    }

    #[test]
    fn weight_range_checked() {
        assert!(bernoulli_identity_lhs(0).is_err());
        assert!(unit_ball_identity(5).is_err());
    }
}
