use std::fs;

use tyz_core::catalog::{
    enumerate_stable_in, expansion, read_catalog, records_for, write_catalog, CatalogRecord,
};
use tyz_core::{enumerate_stable, enumerate_weight, Error, Rational};

#[test]
fn weight3_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w3.jsonl");
    let records = records_for(&enumerate_weight(3)).unwrap();
    assert_eq!(records.len(), 15);
    write_catalog(&records, &path).unwrap();
    let back = read_catalog(&path).unwrap();
    assert_eq!(back, records);

    // writing is order independent
    let mut shuffled = records.clone();
    shuffled.reverse();
    let again = dir.path().join("w3b.jsonl");
    write_catalog(&shuffled, &again).unwrap();
    assert_eq!(fs::read(&path).unwrap(), fs::read(&again).unwrap());
}

#[test]
fn tampered_field_is_reported_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w2.jsonl");
    write_catalog(&records_for(&enumerate_weight(2)).unwrap(), &path).unwrap();
    let text = fs::read_to_string(&path).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    assert!(lines[1].contains("\"z\":\"3/8\""));
    lines[1] = lines[1].replace("\"z\":\"3/8\"", "\"z\":\"1/8\"");
    fs::write(&path, lines.join("\n")).unwrap();
    match read_catalog(&path) {
        Err(Error::CatalogValidation {
            line: 2,
            field: "z",
            ..
        }) => {}
        other => panic!("unexpected {other:?}"),
    }

    lines[1] = "{not json".into();
    fs::write(&path, lines.join("\n")).unwrap();
    assert!(matches!(
        read_catalog(&path),
        Err(Error::CatalogFormat { line: 2, .. })
    ));
}

#[test]
fn non_canonical_adjacency_is_rejected() {
    let mut r = CatalogRecord::from_graph(&"0 1 1;0 1 1;2 0 0".parse().unwrap()).unwrap();
    let g = r.graph();
    r.adjacency = g.permuted(&[2, 0, 1]).rows();
    if r.adjacency != g.rows() {
        assert!(matches!(
            r.validate(3),
            Err(Error::CatalogValidation {
                field: "adjacency",
                ..
            })
        ));
    }
}

#[test]
fn empty_file_is_empty_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.jsonl");
    fs::write(&path, "").unwrap();
    assert!(read_catalog(&path).unwrap().is_empty());
}

#[test]
fn cache_is_written_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let first = enumerate_stable_in(dir.path(), 3, 7).unwrap();
    assert_eq!(first, enumerate_stable(3, 7));
    let file = dir.path().join("stable-j3-s7.jsonl");
    assert!(file.exists());
    assert_eq!(enumerate_stable_in(dir.path(), 3, 7).unwrap(), first);

    // a damaged cache entry is recomputed, not trusted
    fs::write(&file, "garbage\n").unwrap();
    assert_eq!(enumerate_stable_in(dir.path(), 3, 7).unwrap(), first);
    assert!(read_catalog(&file).is_ok());
}

#[test]
fn expansion_bounds_and_values() {
    let dir = tempfile::tempdir().unwrap();
    std::env::set_var("TYZ_CACHE_DIR", dir.path());
    assert!(matches!(expansion(0), Err(Error::WeightOutOfRange { .. })));
    assert!(matches!(expansion(6), Err(Error::WeightOutOfRange { .. })));
    let a1 = expansion(1).unwrap();
    assert_eq!(a1.len(), 1);
    assert_eq!(
        a1.coefficient(&"2".parse().unwrap()),
        Some(&Rational::new(-1, 2))
    );
    let a2 = expansion(2).unwrap();
    assert_eq!(
        a2.coefficient(&"2 0;0 2".parse().unwrap()),
        Some(&Rational::new(1, 8))
    );
}
