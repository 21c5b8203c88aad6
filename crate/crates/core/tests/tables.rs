mod common;

use std::collections::BTreeSet;

use cubic_laway::emit::{self, Format};
use cubic_laway::enumerate::{
    compare_with_reference, corrected_2away, reference_1away, table_1away, table_2away, RowMismatch,
    ONE_AWAY_STRATA, TWO_AWAY_STRATA,
};
use cubic_laway::picard::canonical_orbit;
use cubic_laway::Exec;

use common::reflection_closure;

#[test]
fn sequential_and_parallel_agree() {
    let a = table_2away(Exec::Sequential).unwrap();
    let b = table_2away(Exec::Parallel).unwrap();
    assert_eq!(emit::table(&a, Format::Json).unwrap(), emit::table(&b, Format::Json).unwrap());
}

#[test]
fn one_away_table_is_printed_table() {
    let rows = table_1away(Exec::Parallel).unwrap();
    assert!(compare_with_reference(&rows, reference_1away()).unwrap().is_empty());
    for s in ONE_AWAY_STRATA {
        let ours: BTreeSet<_> = rows.iter().filter(|r| r.stratum == s).map(|r| canonical_orbit(&r.record.rep)).collect();
        assert_eq!(reflection_closure(ours.iter().copied()), ours);
    }
}

#[test]
fn two_away_table_extends_printed_rows_by_reflection_images() {
    let rows = table_2away(Exec::Parallel).unwrap();
    let counts: Vec<usize> = TWO_AWAY_STRATA.iter().map(|&s| rows.iter().filter(|r| r.stratum == s).count()).collect();
    assert_eq!(counts, vec![5, 9, 9, 9, 7]);
    let diffs = compare_with_reference(&rows, &corrected_2away()).unwrap();
    assert_eq!(diffs.len(), 6);
    assert!(diffs.iter().all(|d| matches!(d, RowMismatch::Extra { .. })));
    for s in TWO_AWAY_STRATA {
        let printed = corrected_2away()
            .into_iter()
            .filter(|r| r.stratum == s)
            .map(|r| canonical_orbit(&r.rep.parse().unwrap()));
        let ours: BTreeSet<_> = rows.iter().filter(|r| r.stratum == s).map(|r| canonical_orbit(&r.record.rep)).collect();
        assert_eq!(reflection_closure(printed), ours, "{s}");
    }
}

#[test]
fn every_row_is_initialized_and_two_away() {
    for r in table_2away(Exec::Parallel).unwrap() {
        assert!(r.record.flags.initialized);
        assert_eq!(r.record.flags.ell, 2);
        assert_eq!(r.record.u, cubic_laway::picard::orbit_size(&r.display));
    }
}
