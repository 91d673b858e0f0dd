//! Named families of stable graphs with closed-form `z` values.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{factorial, MultiDigraph};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `A_n`: directed `n`-cycle with every arc doubled.
    DoubledCycle { n: usize },
    /// `B_n`: undirected `n`-cycle with each edge replaced by two opposite arcs.
    BidirectedCycle { n: usize },
    /// `C_n`: directed `n`-cycle with one loop at each vertex.
    LoopedCycle { n: usize },
    /// `K_n`: all-ones adjacency matrix, loops included.
    Complete { n: usize },
    /// `D_n`: binary de Bruijn graph on the `2^(n-1)` words of length `n - 1`.
    DeBruijn { n: usize },
    /// `K_{m,n}`: every vertex of one side has an arc to every vertex of the
    /// other side, in both directions.
    CompleteBipartite { m: usize, n: usize },
    /// One vertex with `k` loops.
    OneVertexLoops { k: usize },
    /// Two vertices with `m` and `n` loops, `i` arcs `0 -> 1`, `j` arcs `1 -> 0`.
    TwoVertex {
        m: usize,
        n: usize,
        i: usize,
        j: usize,
    },
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::DoubledCycle { .. } => "A",
            FamilySpec::BidirectedCycle { .. } => "B",
            FamilySpec::LoopedCycle { .. } => "C",
            FamilySpec::Complete { .. } => "K",
            FamilySpec::DeBruijn { .. } => "D",
            FamilySpec::CompleteBipartite { .. } => "Kmn",
            FamilySpec::OneVertexLoops { .. } => "loops",
            FamilySpec::TwoVertex { .. } => "two-vertex",
        }
    }

    /// Builds a family member from its name and its integer parameters.
    ///
    /// `n` is the main size parameter; `m` is the second side of `Kmn`, and
    /// the two-vertex family reads loops `(m, n)` and arcs `(i, j)`.
    pub fn from_parts(
        name: &str,
        n: usize,
        m: Option<usize>,
        i: Option<usize>,
        j: Option<usize>,
    ) -> Result<FamilySpec> {
        let need = |v: Option<usize>, what: &str| {
            v.ok_or_else(|| Error::FamilyParams {
                family: name.to_string(),
                msg: format!("missing parameter {what}"),
            })
        };
        let spec = match FamilyKind::from_str(name)? {
            FamilyKind::A => FamilySpec::DoubledCycle { n },
            FamilyKind::B => FamilySpec::BidirectedCycle { n },
            FamilyKind::C => FamilySpec::LoopedCycle { n },
            FamilyKind::K => FamilySpec::Complete { n },
            FamilyKind::D => FamilySpec::DeBruijn { n },
            FamilyKind::Kmn => FamilySpec::CompleteBipartite {
                m: need(m, "m")?,
                n,
            },
            FamilyKind::Loops => FamilySpec::OneVertexLoops { k: n },
            FamilyKind::TwoVertex => FamilySpec::TwoVertex {
                m: need(m, "m")?,
                n,
                i: need(i, "i")?,
                j: need(j, "j")?,
            },
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| {
            Err(Error::FamilyParams {
                family: self.name().to_string(),
                msg: msg.to_string(),
            })
        };
        match *self {
            FamilySpec::DoubledCycle { n }
            | FamilySpec::BidirectedCycle { n }
            | FamilySpec::LoopedCycle { n } => {
                if n < 3 {
                    return fail("n must be at least 3");
                }
            }
            FamilySpec::Complete { n } | FamilySpec::DeBruijn { n } => {
                if n < 2 {
                    return fail("n must be at least 2");
                }
                if matches!(self, FamilySpec::DeBruijn { .. }) && n > 12 {
                    return fail("n must be at most 12");
                }
            }
            FamilySpec::CompleteBipartite { m, n } => {
                if m < 2 || n < 2 {
                    return fail("m and n must be at least 2");
                }
            }
            FamilySpec::OneVertexLoops { k } => {
                if k < 2 {
                    return fail("k must be at least 2");
                }
            }
            FamilySpec::TwoVertex { m, n, i, j } => {
                if i == 0 || j == 0 {
                    return fail("i and j must be nonzero");
                }
                if m + i < 2 || m + j < 2 || n + i < 2 || n + j < 2 {
                    return fail("both vertices must have in- and out-degree at least 2");
                }
            }
        }
        Ok(())
    }

    /// The adjacency matrix. Cycle families use vertices `0..n` in cycle
    /// order; `D_n` indexes words by their binary value, most significant
    /// letter first; `K_{m,n}` puts the `m`-side first.
    pub fn build(&self) -> Result<MultiDigraph> {
        self.validate()?;
        let g = match *self {
            FamilySpec::DoubledCycle { n } => cycle(n, 2, 0),
            FamilySpec::BidirectedCycle { n } => {
                let mut g = cycle(n, 1, 0);
                for v in 0..n {
                    g.set((v + 1) % n, v, 1);
                }
                g
            }
            FamilySpec::LoopedCycle { n } => cycle(n, 1, 1),
            FamilySpec::Complete { n } => MultiDigraph::from_rows(&vec![vec![1u32; n]; n]),
            FamilySpec::DeBruijn { n } => {
                let size = 1usize << (n - 1);
                let mask = size - 1;
                let mut g = MultiDigraph::edgeless(size);
                for a in 0..size {
                    for bit in 0..2 {
                        let b = ((a << 1) & mask) | bit;
                        g.set(a, b, g.get(a, b) + 1);
                    }
                }
                g
            }
            FamilySpec::CompleteBipartite { m, n } => {
                let mut g = MultiDigraph::edgeless(m + n);
                for a in 0..m {
                    for b in m..m + n {
                        g.set(a, b, 1);
                        g.set(b, a, 1);
                    }
                }
                g
            }
            FamilySpec::OneVertexLoops { k } => MultiDigraph::from_rows(&[[k as u32]]),
            FamilySpec::TwoVertex { m, n, i, j } => {
                MultiDigraph::from_rows(&[[m as u32, i as u32], [j as u32, n as u32]])
            }
        };
        Ok(g)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum FamilyKind {
    A,
    B,
    C,
    K,
    D,
    Kmn,
    Loops,
    TwoVertex,
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "A" | "A_n" | "doubled-cycle" => FamilyKind::A,
            "B" | "B_n" | "bidirected-cycle" => FamilyKind::B,
            "C" | "C_n" | "looped-cycle" => FamilyKind::C,
            "K" | "K_n" | "complete" => FamilyKind::K,
            "D" | "D_n" | "de-bruijn" => FamilyKind::D,
            "Kmn" | "K_mn" | "bipartite" => FamilyKind::Kmn,
            "loops" | "one-vertex" => FamilyKind::Loops,
            "two-vertex" => FamilyKind::TwoVertex,
            other => return Err(Error::UnknownFamily(other.to_string())),
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::DoubledCycle { n } => write!(f, "A_{n}"),
            FamilySpec::BidirectedCycle { n } => write!(f, "B_{n}"),
            FamilySpec::LoopedCycle { n } => write!(f, "C_{n}"),
            FamilySpec::Complete { n } => write!(f, "K_{n}"),
            FamilySpec::DeBruijn { n } => write!(f, "D_{n}"),
            FamilySpec::CompleteBipartite { m, n } => write!(f, "K_{{{m},{n}}}"),
            FamilySpec::OneVertexLoops { k } => write!(f, "loops_{k}"),
            FamilySpec::TwoVertex { m, n, i, j } => {
                write!(f, "two-vertex(m={m},n={n},i={i},j={j})")
            }
        }
    }
}

fn cycle(n: usize, arcs: u32, loops: u32) -> MultiDigraph {
    let mut g = MultiDigraph::edgeless(n);
    for v in 0..n {
        g.set(v, (v + 1) % n, arcs);
        g.set(v, v, loops);
    }
    g
}

fn fact(n: usize) -> BigInt {
    BigInt::from(factorial(n as u64))
}

fn sign(n: usize) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Closed-form `z` for a family member.
pub fn z_family(spec: &FamilySpec) -> Result<Rational> {
    spec.validate()?;
    let value = match *spec {
        FamilySpec::DoubledCycle { n } => {
            let two_n = BigInt::from(1) << n;
            Rational::new(sign(n) * (two_n.clone() - 1), two_n * n)
        }
        FamilySpec::BidirectedCycle { n } => {
            let s = sign(n);
            match n % 6 {
                0 => Rational::zero(),
                1 | 5 => Rational::new(s, 2 * n),
                2 | 4 => Rational::new(3 * s, 2 * n),
                _ => Rational::new(2 * s, n),
            }
        }
        FamilySpec::LoopedCycle { n } => Rational::new(sign(n), n),
        FamilySpec::Complete { n } => Rational::new(sign(n) * (n as i64 - 1), fact(n)),
        FamilySpec::DeBruijn { .. } => Rational::new(1, 2),
        // As printed. The adjacency matrix gives an extra (-1)^(m+n), so this
        // disagrees with z(build) when m + n is odd.
        FamilySpec::CompleteBipartite { m, n } => {
            let tie = if m == n { 2 } else { 1 };
            Rational::new((m * n) as i64 - 1, fact(m) * fact(n) * tie)
        }
        FamilySpec::OneVertexLoops { k } => Rational::new(-(k as i64 - 1), fact(k)),
        FamilySpec::TwoVertex { m, n, i, j } => {
            let numer = (i * j) as i64 - (1 - m as i64) * (1 - n as i64);
            let tie = if i == j && m == n { 2 } else { 1 };
            Rational::new(numer, fact(m) * fact(n) * fact(i) * fact(j) * tie)
        }
    };
    Ok(value)
}
