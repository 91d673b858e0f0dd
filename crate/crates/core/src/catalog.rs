//! Formal sums `a_k = sum z(G) G`, JSON-lines catalogs, and the on-disk
//! enumeration cache.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::{enumerate_stable, ConnectivityClass};
use crate::error::{Error, Result};
use crate::eulerian::euler_tour_count;
use crate::graph::{format_graph, CanonicalKey, MultiDigraph};
use crate::rational::Rational;
use crate::spectral::charpoly;
use crate::zeta::{det_a_minus_i, z};

pub const MAX_WEIGHT: usize = 5;

/// Environment variable naming the enumeration cache directory.
pub const CACHE_ENV: &str = "TYZ_CACHE_DIR";

/// `sum z(G) G` over every stable graph of one weight. Zero coefficients are
/// kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSum {
    weight: usize,
    terms: BTreeMap<CanonicalKey, Rational>,
}

#[derive(Serialize)]
struct Term<'a> {
    graph: String,
    z: &'a Rational,
}

impl FormalSum {
    pub fn from_graphs(weight: usize, graphs: &[MultiDigraph]) -> Result<FormalSum> {
        let pairs: Vec<(CanonicalKey, Rational)> = graphs
            .par_iter()
            .map(|g| Ok((g.canonical_key(), z(g)?)))
            .collect::<Result<_>>()?;
        Ok(FormalSum {
            weight,
            terms: pairs.into_iter().collect(),
        })
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the class of `g`, if it occurs.
    pub fn coefficient(&self, g: &MultiDigraph) -> Option<&Rational> {
        self.terms.get(&g.canonical_key())
    }

    pub fn iter(&self) -> impl Iterator<Item = (MultiDigraph, &Rational)> {
        self.terms.iter().map(|(k, v)| (k.to_graph(), v))
    }

    pub fn nonzero_count(&self) -> usize {
        self.terms.values().filter(|v| !v.is_zero()).count()
    }
}

impl Serialize for FormalSum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(k, v)| Term {
                graph: format_graph(&k.to_graph()),
                z: v,
            })
            .collect();
        let mut st = s.serialize_struct("FormalSum", 2)?;
        st.serialize_field("weight", &self.weight)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

pub fn check_weight(k: usize) -> Result<()> {
    if (1..=MAX_WEIGHT).contains(&k) {
        Ok(())
    } else {
        Err(Error::WeightOutOfRange {
            weight: k,
            min: 1,
            max: MAX_WEIGHT,
        })
    }
}

/// `a_k` as a formal sum, built from the cached enumeration.
pub fn expansion(k: usize) -> Result<FormalSum> {
    check_weight(k)?;
    FormalSum::from_graphs(k, &enumerate_weight_cached(k)?)
}

/// One line of a catalog file. Every field other than `adjacency` is derived
/// and is recomputed when the catalog is read back.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogRecord {
    pub vertices: usize,
    pub adjacency: Vec<Vec<u32>>,
    pub weight: i64,
    pub edges: usize,
    pub class: ConnectivityClass,
    #[serde(rename = "det_A_minus_I")]
    pub det_a_minus_i: i64,
    pub aut_order: u64,
    pub z: Rational,
    pub euler_tours: u64,
    pub charpoly: Vec<i64>,
}

impl CatalogRecord {
    /// Record for the canonical form of a semistable, nonempty `g`.
    pub fn from_graph(g: &MultiDigraph) -> Result<CatalogRecord> {
        if g.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let g = g.canonical_form();
        Ok(CatalogRecord {
            vertices: g.vertex_count(),
            adjacency: g.rows(),
            weight: g.weight(),
            edges: g.edge_count(),
            class: ConnectivityClass::of(&g),
            det_a_minus_i: i64::try_from(det_a_minus_i(&g))
                .map_err(|_| Error::Overflow("det(A - I)"))?,
            aut_order: g.aut_order(),
            z: z(&g)?,
            euler_tours: euler_tour_count(&g),
            charpoly: charpoly(&g)
                .to_i64()
                .ok_or(Error::Overflow("characteristic polynomial"))?,
        })
    }

    pub fn graph(&self) -> MultiDigraph {
        MultiDigraph::from_rows(&self.adjacency)
    }

    /// Recompute every derived field; on mismatch name the first bad field.
    pub fn validate(&self, line: usize) -> Result<()> {
        let bad = |field: &'static str, msg: String| Error::CatalogValidation { line, field, msg };
        let n = self.adjacency.len();
        if n == 0 || self.adjacency.iter().any(|r| r.len() != n) {
            return Err(bad(
                "adjacency",
                "matrix must be square and nonempty".into(),
            ));
        }
        let g = self.graph();
        if !g.is_semistable() {
            return Err(bad("adjacency", "graph is not semistable".into()));
        }
        if g.canonical_form() != g {
            return Err(bad("adjacency", "matrix is not in canonical form".into()));
        }
        let fresh = CatalogRecord::from_graph(&g).map_err(|e| bad("adjacency", e.to_string()))?;
        macro_rules! check {
            ($field:ident, $name:literal) => {
                if self.$field != fresh.$field {
                    return Err(bad(
                        $name,
                        format!("stored {:?}, recomputed {:?}", self.$field, fresh.$field),
                    ));
                }
            };
        }
        check!(vertices, "vertices");
        check!(weight, "weight");
        check!(edges, "edges");
        check!(class, "class");
        check!(det_a_minus_i, "det_A_minus_I");
        check!(aut_order, "aut_order");
        check!(z, "z");
        check!(euler_tours, "euler_tours");
        check!(charpoly, "charpoly");
        Ok(())
    }
}

pub fn records_for(graphs: &[MultiDigraph]) -> Result<Vec<CatalogRecord>> {
    let mut out: Vec<CatalogRecord> = graphs
        .par_iter()
        .map(CatalogRecord::from_graph)
        .collect::<Result<_>>()?;
    out.sort_by_cached_key(|r| r.graph().canonical_key());
    Ok(out)
}

/// Write one record per line, sorted by canonical key.
pub fn write_catalog(records: &[CatalogRecord], path: &Path) -> Result<()> {
    let mut sorted: Vec<&CatalogRecord> = records.iter().collect();
    sorted.sort_by_cached_key(|r| r.graph().canonical_key());
    let mut w = BufWriter::new(fs::File::create(path)?);
    for r in sorted {
        let line = serde_json::to_string(r).expect("records serialize");
        writeln!(w, "{line}")?;
    }
    w.flush()?;
    Ok(())
}

/// Read and validate a catalog. Blank lines are skipped.
pub fn read_catalog(path: &Path) -> Result<Vec<CatalogRecord>> {
    let reader = BufReader::new(fs::File::open(path)?);
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: CatalogRecord = serde_json::from_str(&line).map_err(|e| Error::CatalogFormat {
            line: line_no,
            msg: e.to_string(),
        })?;
        rec.validate(line_no)?;
        out.push(rec);
    }
    Ok(out)
}

pub fn cache_dir() -> PathBuf {
    std::env::var_os(CACHE_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(".tyz-cache"))
}

/// `enumerate_stable(j, s)` backed by a catalog file in `dir`. A missing or
/// unreadable cache entry is recomputed and rewritten.
pub fn enumerate_stable_in(dir: &Path, j: usize, s: usize) -> Result<Vec<MultiDigraph>> {
    let path = dir.join(format!("stable-j{j}-s{s}.jsonl"));
    if let Ok(records) = read_catalog(&path) {
        if records.iter().all(|r| r.vertices == j && r.edges == s) {
            return Ok(records.iter().map(CatalogRecord::graph).collect());
        }
    }
    let graphs = enumerate_stable(j, s);
    let records = records_for(&graphs)?;
    fs::create_dir_all(dir)?;
    // write then rename so concurrent readers never see half a file
    let tmp = dir.join(format!(".stable-j{j}-s{s}.{}.tmp", std::process::id()));
    write_catalog(&records, &tmp)?;
    fs::rename(&tmp, &path)?;
    Ok(graphs)
}

pub fn enumerate_stable_cached(j: usize, s: usize) -> Result<Vec<MultiDigraph>> {
    enumerate_stable_in(&cache_dir(), j, s)
}

/// All stable graphs of weight `k`, sorted by canonical key, via the cache.
pub fn enumerate_weight_cached(k: usize) -> Result<Vec<MultiDigraph>> {
    let dir = cache_dir();
    let mut out = Vec::new();
    for j in 1..=k {
        out.extend(enumerate_stable_in(&dir, j, j + k)?);
    }
    out.sort_by_cached_key(|g| g.canonical_key());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_weight;

    fn g(text: &str) -> MultiDigraph {
        text.parse().unwrap()
    }

    #[test]
    fn record_fields() {
        let r = CatalogRecord::from_graph(&g("0 2;2 0")).unwrap();
        assert_eq!(r.vertices, 2);
        assert_eq!(r.weight, 2);
        assert_eq!(r.edges, 4);
        assert_eq!(r.class, ConnectivityClass::StronglyConnected);
        assert_eq!(r.det_a_minus_i, -3);
        assert_eq!(r.aut_order, 8);
        assert_eq!(r.z, "3/8".parse().unwrap());
        assert_eq!(r.charpoly, vec![1, 0, -4]);
        r.validate(1).unwrap();

        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"det_A_minus_I\":-3"));
        assert!(json.contains("\"z\":\"3/8\""));
    }

    #[test]
    fn tampering_is_named() {
        let mut r = CatalogRecord::from_graph(&g("3")).unwrap();
        r.z = Rational::new(1, 3);
        match r.validate(7) {
            Err(Error::CatalogValidation {
                line: 7,
                field: "z",
                ..
            }) => {}
            other => panic!("unexpected {other:?}"),
        }
        let mut r = CatalogRecord::from_graph(&g("2 1;0 2")).unwrap();
        r.class = ConnectivityClass::StronglyConnected;
        assert!(matches!(
            r.validate(1),
            Err(Error::CatalogValidation { field: "class", .. })
        ));
    }

    #[test]
    fn formal_sum_keeps_zeros() {
        let a3 = FormalSum::from_graphs(3, &enumerate_weight(3)).unwrap();
        assert_eq!(a3.len(), 15);
        assert_eq!(a3.nonzero_count(), 13);
        assert_eq!(a3.coefficient(&g("2 1;0 2")), Some(&Rational::zero()));
        let a1 = FormalSum::from_graphs(1, &enumerate_weight(1)).unwrap();
        let json = serde_json::to_string(&a1).unwrap();
        assert_eq!(json, r#"{"weight":1,"terms":[{"graph":"2","z":"-1/2"}]}"#);
    }

    #[test]
    fn weight_range() {
        assert!(check_weight(0).is_err());
        assert!(check_weight(6).is_err());
        assert!(check_weight(5).is_ok());
    }
}
