//! The coefficient function `z(G)`.
//!
//! For a strongly connected semistable graph with adjacency matrix `A`,
//! `z(G) = -det(A - I) / |Aut(G)|`. A connected graph that is not strongly
//! connected has `z = 0`, and a disjoint union of components `G_1..G_m` has
//! `z = prod z(G_i) / |Sym(G_1..G_m)|` where the symmetry factor is the
//! product of factorials of the isomorphism-class multiplicities.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{factorial, MultiDigraph};
use crate::rational::Rational;

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det_int(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // exact by Sylvester's identity
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                a[i][j] = q;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// `det(A - I)` for the adjacency matrix `A` of `g`.
pub fn det_a_minus_i(g: &MultiDigraph) -> BigInt {
    let n = g.vertex_count();
    let m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigInt::from(g.get(i, j)) - BigInt::from((i == j) as u32))
                .collect()
        })
        .collect();
    det_int(&m)
}

/// `-det(A - I) / |Aut(G)|` for a strongly connected semistable graph.
pub fn z_strong(g: &MultiDigraph) -> Result<Rational> {
    if !g.is_strongly_connected()? {
        return Err(Error::NotStronglyConnected);
    }
    if !g.is_semistable() {
        return Err(Error::NotSemistable);
    }
    Ok(Rational::new(
        -det_a_minus_i(g),
        BigInt::from(g.aut_order()),
    ))
}

/// `z(G)` for any semistable graph; `z` of the empty graph is 1.
pub fn z(g: &MultiDigraph) -> Result<Rational> {
    if !g.is_semistable() {
        return Err(Error::NotSemistable);
    }
    if g.is_empty() {
        return Ok(Rational::one());
    }
    let comps = g.weak_components();
    let mut value = Rational::one();
    for c in &comps {
        if !c.is_strongly_connected()? {
            return Ok(Rational::zero());
        }
        value *= &z_strong(c)?;
    }
    Ok(value / Rational::from_integer(sym_factor(&comps)))
}

/// Order of the group permuting isomorphic components among themselves.
pub fn sym_factor(components: &[MultiDigraph]) -> u64 {
    // a lone component needs no canonical key, which is costly for large n
    if components.len() < 2 {
        return 1;
    }
    let mut classes: BTreeMap<_, u64> = BTreeMap::new();
    for c in components {
        *classes.entry(c.canonical_key()).or_default() += 1;
    }
    classes.values().map(|&m| factorial(m)).product()
}
