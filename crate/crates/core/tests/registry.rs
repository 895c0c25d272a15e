use std::fs;

use trilcd::printed::{table_bounds_main, TABLE_TYPOS};
use trilcd::registry::{format_code, parse_code};
use trilcd::{
    bounds_table, build_registry, diff_against_paper, export_registry, import_registry,
    BoundStatus, DiffStatus, Error, PaperMatch,
};

#[test]
fn export_import_round_trip() {
    let records = build_registry().unwrap();
    let dir = tempfile::tempdir().unwrap();
    export_registry(&records, dir.path()).unwrap();
    let back = import_registry(dir.path()).unwrap();
    assert_eq!(back, records);

    // exporting again is byte for byte stable
    let again = tempfile::tempdir().unwrap();
    export_registry(&back, again.path()).unwrap();
    for r in &records {
        let file = format!("{}.code", r.id);
        assert_eq!(
            fs::read(dir.path().join(&file)).unwrap(),
            fs::read(again.path().join(&file)).unwrap()
        );
    }
}

#[test]
fn tampered_code_file_is_rejected() {
    let records = build_registry().unwrap();
    let dir = tempfile::tempdir().unwrap();
    export_registry(&records, dir.path()).unwrap();
    let victim = &records[0];
    let path = dir.path().join(format!("{}.code", victim.id));
    let mut text = fs::read_to_string(&path).unwrap();
    let last = text.trim_end().len() - 1;
    let flipped = if &text[last..=last] == "0" { "1" } else { "0" };
    text.replace_range(last..=last, flipped);
    fs::write(&path, text).unwrap();
    match import_registry(dir.path()) {
        Err(Error::HashMismatch { id, .. }) => assert_eq!(id, victim.id),
        other => panic!("expected a hash mismatch, got {other:?}"),
    }
}

#[test]
fn every_record_is_recomputed_and_canonical() {
    for r in build_registry().unwrap() {
        let text = format_code(r.code.generator());
        let parsed = parse_code(&text).unwrap();
        assert_eq!(parsed.generator(), r.code.generator(), "{}", r.id);
        assert_eq!(
            r.params(),
            (r.n, r.k, r.code.min_distance().unwrap(), r.code.is_lcd()),
            "{}",
            r.id
        );
        assert_eq!(r.enumerator.total(), 3u128.pow(r.k as u32), "{}", r.id);
        if r.paper_match == PaperMatch::DerivedStandin {
            assert!(r.is_lcd, "{}", r.id);
        }
    }
}

#[test]
fn diff_covers_every_printed_cell() {
    let records = build_registry().unwrap();
    let diff = diff_against_paper(&records);
    assert_eq!(diff.len(), table_bounds_main().len());
    let misses: Vec<_> = diff
        .iter()
        .filter(|c| c.status == DiffStatus::Miss)
        .collect();
    assert!(misses.is_empty(), "{misses:?}");
    for t in TABLE_TYPOS {
        let cell = diff.iter().find(|c| (c.n, c.k) == (t.0, t.1)).unwrap();
        assert_eq!(
            (cell.status, cell.witnessed),
            (DiffStatus::TypoFlag, t.2),
            "{cell:?}"
        );
    }
    let c = diff.iter().find(|c| (c.n, c.k) == (20, 6)).unwrap();
    assert!(c.witnessed >= 9 && c.note.is_some(), "{c:?}");
}

#[test]
fn bounds_table_is_complete_up_to_twenty() {
    let records = build_registry().unwrap();
    let table = bounds_table(&records, 20);
    assert_eq!(table.len(), (2..=20).map(|n| n - 1).sum::<usize>());
    for e in &table {
        assert!(e.d_lower <= e.d_upper, "{e:?}");
        assert_ne!(e.status, BoundStatus::MissingWitness, "{e:?}");
        if e.status == BoundStatus::Tight {
            assert_eq!(e.d_lower, e.d_upper, "{e:?}");
        }
    }
    let cell = |n, k| table.iter().find(|e| (e.n, e.k) == (n, k)).unwrap();
    assert_eq!((cell(12, 5).d_lower, cell(12, 5).d_upper), (5, 5));
    assert_eq!(cell(15, 1).d_lower, 14);
}
