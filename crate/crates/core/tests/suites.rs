use std::sync::OnceLock;

use tyz_core::family::{z_family, FamilySpec};
use tyz_core::verify::{run_suite, Suite};
use tyz_core::{z, Rational};

/// One cache directory for the whole test binary; tests run in parallel.
fn use_temp_cache() {
    static DIR: OnceLock<tempfile::TempDir> = OnceLock::new();
    DIR.get_or_init(|| {
        let dir = tempfile::tempdir().unwrap();
        std::env::set_var("TYZ_CACHE_DIR", dir.path());
        dir
    });
}

#[test]
fn default_suites_pass() {
    use_temp_cache();
    for suite in Suite::ALL {
        if suite == Suite::Families {
            continue;
        }
        let r = run_suite(suite, None).unwrap();
        let failures: Vec<_> = r.cases.iter().filter(|c| !c.pass).collect();
        assert!(failures.is_empty(), "{suite}: {failures:?}");
        assert!(r.passed > 0);
    }
}

#[test]
fn weight4_suite_covers_51_graphs() {
    use_temp_cache();
    let r = run_suite(Suite::Weight4, None).unwrap();
    assert_eq!(r.passed, 52);
    assert!(r
        .cases
        .iter()
        .any(|c| c.case.starts_with("b1.01") && c.actual == "-1/30"));
}

#[test]
fn reports_are_deterministic() {
    use_temp_cache();
    let a = run_suite(Suite::Oracle, Some(3)).unwrap();
    let b = run_suite(Suite::Oracle, Some(3)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn bipartite_closed_form_sign() {
    // The closed form holds when m + n is even and is off by (-1)^(m+n)
    // otherwise.
    for (m, n) in [(2, 2), (3, 3), (2, 4), (2, 3), (3, 2), (3, 4)] {
        let spec = FamilySpec::CompleteBipartite { m, n };
        let direct = z(&spec.build().unwrap()).unwrap();
        let closed = z_family(&spec).unwrap();
        if (m + n) % 2 == 0 {
            assert_eq!(direct, closed, "{spec}");
        } else {
            assert_eq!(direct, -closed, "{spec}");
        }
    }
    let r = run_suite(Suite::Families, None).unwrap();
    let failing: Vec<&str> = r
        .cases
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.case.as_str())
        .collect();
    assert_eq!(failing, ["K_{2,3}", "K_{3,2}"]);
}

#[test]
fn bidirected_cycles_follow_period_six() {
    for n in 3..=14 {
        let spec = FamilySpec::BidirectedCycle { n };
        assert_eq!(
            z(&spec.build().unwrap()).unwrap(),
            z_family(&spec).unwrap(),
            "{spec}"
        );
    }
    let b9 = z(&FamilySpec::BidirectedCycle { n: 9 }.build().unwrap()).unwrap();
    assert_eq!(b9, Rational::new(-2, 9));
}
