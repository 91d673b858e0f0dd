//! Named verification suites. Each produces a report of expected vs actual
//! values, one case per line, in a fixed order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::catalog::{enumerate_weight_cached, FormalSum};
use crate::enumerate::{classify_graphs, ConnectivityClass};
use crate::error::{Error, Result};
use crate::eulerian::{
    arborescence_bruteforce, arborescence_count, bernoulli_identity_rhs, bernoulli_sum,
    euler_tour_bruteforce, euler_tour_count, is_balanced, unit_ball_polynomial, unit_ball_term,
};
use crate::family::{z_family, FamilySpec};
use crate::golden::golden_for_weight;
use crate::graph::{factorial, format_graph, MultiDigraph};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::spectral::{charpoly, coefficient_from_linear, z_orbit};
use crate::zeta::{z, z_strong};

/// Known `(total, connected, strongly connected, lambda)` for weights 1..=5.
pub const TABLE2: [(usize, usize, usize, usize); 5] = [
    (1, 1, 1, 1),
    (4, 3, 3, 3),
    (15, 11, 10, 9),
    (82, 61, 51, 45),
    (589, 474, 373, 316),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Table2,
    Weight2,
    Weight3,
    Weight4,
    Bernoulli,
    UnitBall,
    Oracle,
    Best,
    Families,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Table2,
        Suite::Weight2,
        Suite::Weight3,
        Suite::Weight4,
        Suite::Bernoulli,
        Suite::UnitBall,
        Suite::Oracle,
        Suite::Best,
        Suite::Families,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table2 => "table2",
            Suite::Weight2 => "weight2",
            Suite::Weight3 => "weight3",
            Suite::Weight4 => "weight4",
            Suite::Bernoulli => "bernoulli",
            Suite::UnitBall => "unitball",
            Suite::Oracle => "oracle",
            Suite::Best => "best",
            Suite::Families => "families",
        }
    }

    /// `(default, largest accepted)` for `--max-weight`; `None` when the
    /// suite ignores it.
    pub fn weight_bounds(self) -> Option<(usize, usize)> {
        match self {
            Suite::Table2 | Suite::Bernoulli | Suite::Oracle => Some((4, 5)),
            Suite::UnitBall => Some((4, 4)),
            Suite::Best => Some((3, 4)),
            _ => None,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    pub suite: &'static str,
    pub case: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub cases: Vec<Case>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    fn push(
        &mut self,
        suite: Suite,
        case: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
    ) {
        let expected = expected.to_string();
        let actual = actual.to_string();
        let pass = expected == actual;
        if pass {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        self.cases.push(Case {
            suite: suite.name(),
            case: case.into(),
            expected,
            actual,
            pass,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn merge(&mut self, other: Report) {
        self.passed += other.passed;
        self.failed += other.failed;
        self.cases.extend(other.cases);
    }
}

/// Run one suite. A `max_weight` outside the suite's bounds is an error.
pub fn run_suite(suite: Suite, max_weight: Option<usize>) -> Result<Report> {
    let k = match (suite.weight_bounds(), max_weight) {
        (Some((default, _)), None) => default,
        (Some((_, max)), Some(w)) if (1..=max).contains(&w) => w,
        (Some((_, max)), Some(w)) => {
            return Err(Error::WeightOutOfRange {
                weight: w,
                min: 1,
                max,
            })
        }
        (None, _) => 0,
    };
    let mut r = Report::default();
    match suite {
        Suite::Table2 => table2(&mut r, k)?,
        Suite::Weight2 => golden(&mut r, suite, 2)?,
        Suite::Weight3 => golden(&mut r, suite, 3)?,
        Suite::Weight4 => golden(&mut r, suite, 4)?,
        Suite::Bernoulli => bernoulli(&mut r, k)?,
        Suite::UnitBall => unitball(&mut r, k)?,
        Suite::Oracle => oracle(&mut r, k)?,
        Suite::Best => best(&mut r, k)?,
        Suite::Families => families(&mut r)?,
    }
    Ok(r)
}

fn tuple(c: (usize, usize, usize, usize)) -> String {
    format!("({},{},{},{})", c.0, c.1, c.2, c.3)
}

fn table2(r: &mut Report, max: usize) -> Result<()> {
    for k in 1..=max {
        let c = classify_graphs(&enumerate_weight_cached(k)?);
        r.push(
            Suite::Table2,
            format!("k={k}"),
            tuple(TABLE2[k - 1]),
            tuple((c.total, c.connected, c.strongly_connected, c.lambda)),
        );
    }
    Ok(())
}

fn golden(r: &mut Report, suite: Suite, k: usize) -> Result<()> {
    let graphs = enumerate_weight_cached(k)?;
    let sum = FormalSum::from_graphs(k, &graphs)?;
    let entries = golden_for_weight(k as i64);
    if k == 4 {
        // the weight-4 tables list only the strongly connected graphs
        let strong = graphs
            .iter()
            .filter(|g| ConnectivityClass::of(g) == ConnectivityClass::StronglyConnected)
            .count();
        r.push(suite, "strongly connected count", entries.len(), strong);
    } else {
        r.push(suite, "graph count", entries.len(), sum.len());
    }
    for e in &entries {
        let actual = match sum.coefficient(&e.graph) {
            Some(v) => v.to_string(),
            None => "absent".to_string(),
        };
        r.push(
            suite,
            format!("{} [{}]", e.label, format_graph(&e.graph)),
            &e.z,
            actual,
        );
    }
    Ok(())
}

fn bernoulli(r: &mut Report, max: usize) -> Result<()> {
    for k in 1..=max {
        let lhs = bernoulli_sum(&enumerate_weight_cached(k)?)?;
        r.push(
            Suite::Bernoulli,
            format!("k={k}"),
            bernoulli_identity_rhs(k),
            lhs,
        );
    }
    Ok(())
}

/// `P_1` and `P_2` written out by hand.
pub fn printed_unit_ball(k: usize) -> Option<Polynomial> {
    let q = Rational::new;
    match k {
        1 => Some(Polynomial::new(vec![q(0, 1), q(-1, 2), q(-1, 2)])),
        2 => Some(Polynomial::new(vec![
            q(0, 1),
            q(-1, 12),
            q(-1, 8),
            q(1, 12),
            q(1, 8),
        ])),
        _ => None,
    }
}

/// `(-1)^k / (2^k k!)`.
pub fn unit_ball_leading(k: usize) -> Rational {
    let sign = if k % 2 == 0 { 1 } else { -1 };
    Rational::new(sign, (1i64 << k) * factorial(k as u64) as i64)
}

fn unitball(r: &mut Report, max: usize) -> Result<()> {
    for k in 1..=max {
        let graphs = enumerate_weight_cached(k)?;
        let lhs: Polynomial = graphs.iter().map(unit_ball_term).sum();
        let rhs = unit_ball_polynomial(k);
        r.push(Suite::UnitBall, format!("k={k} interpolated"), &rhs, &lhs);
        if let Some(printed) = printed_unit_ball(k) {
            r.push(Suite::UnitBall, format!("k={k} closed form"), printed, &lhs);
        }
        r.push(
            Suite::UnitBall,
            format!("k={k} leading coefficient"),
            unit_ball_leading(k),
            lhs.leading_coefficient(),
        );
    }
    Ok(())
}

fn strongly_connected_up_to(max: usize) -> Result<Vec<MultiDigraph>> {
    let mut out = Vec::new();
    for k in 1..=max {
        out.extend(
            enumerate_weight_cached(k)?
                .into_iter()
                .filter(|g| ConnectivityClass::of(g) == ConnectivityClass::StronglyConnected),
        );
    }
    Ok(out)
}

fn oracle(r: &mut Report, max: usize) -> Result<()> {
    for g in strongly_connected_up_to(max)? {
        let label = format_graph(&g);
        r.push(
            Suite::Oracle,
            format!("z orbit [{label}]"),
            z_strong(&g)?,
            z_orbit(&g)?,
        );
        let cp = charpoly(&g);
        let from_linear: Vec<String> = (0..=g.vertex_count())
            .map(|i| coefficient_from_linear(&g, i).to_string())
            .collect();
        let direct: Vec<String> = cp.coeffs.iter().map(ToString::to_string).collect();
        r.push(
            Suite::Oracle,
            format!("charpoly [{label}]"),
            format!("[{}]", direct.join(", ")),
            format!("[{}]", from_linear.join(", ")),
        );
    }
    Ok(())
}

fn best(r: &mut Report, max: usize) -> Result<()> {
    for k in 1..=max {
        for g in enumerate_weight_cached(k)? {
            if !is_balanced(&g) || !g.is_weakly_connected() {
                continue;
            }
            let label = format_graph(&g);
            r.push(
                Suite::Best,
                format!("euler tours [{label}]"),
                euler_tour_bruteforce(&g)?,
                euler_tour_count(&g),
            );
            let brute: Vec<String> = (0..g.vertex_count())
                .map(|v| arborescence_bruteforce(&g, v).map(|c| c.to_string()))
                .collect::<Result<_>>()?;
            let det: Vec<String> = (0..g.vertex_count())
                .map(|v| arborescence_count(&g, v).map(|c| c.to_string()))
                .collect::<Result<_>>()?;
            r.push(
                Suite::Best,
                format!("in-trees by root [{label}]"),
                brute.join(" "),
                det.join(" "),
            );
            r.push(
                Suite::Best,
                format!("in-trees root independent [{label}]"),
                true,
                det.iter().all(|d| d == &det[0]),
            );
        }
    }
    Ok(())
}

/// The family instances checked by the `families` suite.
pub fn family_cases() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for n in 3..=8 {
        out.push(FamilySpec::DoubledCycle { n });
        out.push(FamilySpec::BidirectedCycle { n });
        out.push(FamilySpec::LoopedCycle { n });
    }
    for n in 2..=4 {
        out.push(FamilySpec::Complete { n });
        out.push(FamilySpec::DeBruijn { n });
    }
    for m in 2..=3 {
        for n in 2..=3 {
            out.push(FamilySpec::CompleteBipartite { m, n });
        }
    }
    for k in 2..=6 {
        out.push(FamilySpec::OneVertexLoops { k });
    }
    // every stable two-vertex graph of weight <= 4 with arcs both ways
    for edges in 4..=6 {
        for m in 0..=edges {
            for n in 0..=edges - m {
                for i in 1..=edges - m - n {
                    let j = edges - m - n - i;
                    let spec = FamilySpec::TwoVertex { m, n, i, j };
                    if j > 0 && spec.validate().is_ok() {
                        out.push(spec);
                    }
                }
            }
        }
    }
    out
}

fn families(r: &mut Report) -> Result<()> {
    for spec in family_cases() {
        let g = spec.build()?;
        r.push(Suite::Families, spec.to_string(), z_family(&spec)?, z(&g)?);
    }
    Ok(())
}
