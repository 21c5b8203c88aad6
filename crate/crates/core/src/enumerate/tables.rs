//! The 1-away and 2-away classification tables and their published form.

use std::cmp::Reverse;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{enum_classes, Filter, OrbitRecord};
use crate::error::Result;
use crate::laway::t35_condition;
use crate::par::Exec;
use crate::picard::{canonical_orbit, degree, orbit_size, self_intersection, DivisorClass, OrbitKey};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Stratum {
    pub self_intersection: i64,
    pub degree: i64,
}

impl Stratum {
    pub const fn new(self_intersection: i64, degree: i64) -> Self {
        Stratum { self_intersection, degree }
    }

    pub fn of(d: &DivisorClass) -> Self {
        Stratum::new(self_intersection(d), degree(d))
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.self_intersection, self.degree)
    }
}

/// Strata of the 1-away table, in print order.
pub const ONE_AWAY_STRATA: [Stratum; 2] = [Stratum::new(-2, 2), Stratum::new(2, 4)];

/// Strata of the 2-away table, in print order.
pub const TWO_AWAY_STRATA: [Stratum; 5] = [
    Stratum::new(4, 6),
    Stratum::new(3, 5),
    Stratum::new(0, 4),
    Stratum::new(-3, 3),
    Stratum::new(-1, 3),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub stratum: Stratum,
    /// Orbit member with `b1 >= ... >= b6`, the way tables print it.
    pub display: DivisorClass,
    pub record: OrbitRecord,
}

impl TableRow {
    fn new(stratum: Stratum, record: OrbitRecord) -> Self {
        let display = canonical_orbit(&record.rep).table_class();
        TableRow { stratum, display, record }
    }

    pub fn notation(&self) -> String {
        self.display.paper_notation()
    }
}

/// Print order inside a stratum: `a` ascending, then `(b1, ..., b6)` descending.
fn row_order(key: &OrbitKey) -> (i64, Reverse<[i64; 6]>) {
    // sorted holds c nonincreasing, i.e. b nondecreasing; negating and reversing gives b nonincreasing.
    let s = key.sorted;
    (key.l, Reverse([-s[5], -s[4], -s[3], -s[2], -s[1], -s[0]]))
}

fn build(exec: Exec, strata: &[Stratum], ell: u64, side: impl Fn(&DivisorClass) -> bool) -> Result<Vec<TableRow>> {
    let filters = [Filter::Effective, Filter::Initialized, Filter::Ell(ell)];
    let mut rows = Vec::new();
    for &stratum in strata {
        let mut records = enum_classes(exec, stratum.degree, stratum.self_intersection, &filters)?;
        records.retain(|r| side(&r.rep));
        records.sort_by_key(|r| row_order(&canonical_orbit(&r.rep)));
        rows.extend(records.into_iter().map(|r| TableRow::new(stratum, r)));
    }
    Ok(rows)
}

/// Initialized 1-away orbits in the strata `(-2, 2)` and `(2, 4)`.
pub fn table_1away(exec: Exec) -> Result<Vec<TableRow>> {
    build(exec, &ONE_AWAY_STRATA, 1, |_| true)
}

/// Initialized 2-away orbits in the five strata, each with its side condition.
pub fn table_2away(exec: Exec) -> Result<Vec<TableRow>> {
    build(exec, &TWO_AWAY_STRATA, 2, t35_condition)
}

/// A row as printed in the published tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReferenceRow {
    pub stratum: Stratum,
    pub rep: &'static str,
    /// Printed orbit count, as written.
    pub u_text: &'static str,
    /// Value of `u_text`.
    pub u: u64,
}

const fn row(s: i64, d: i64, rep: &'static str, u_text: &'static str, u: u64) -> ReferenceRow {
    ReferenceRow { stratum: Stratum::new(s, d), rep, u_text, u }
}

pub fn reference_1away() -> &'static [ReferenceRow] {
    const ROWS: [ReferenceRow; 12] = [
        row(-2, 2, "e5+e6", "C(6,2)", 15),
        row(-2, 2, "l-e1-e2+e6", "C(6,3)*C(3,2)", 60),
        row(-2, 2, "2l-e1-e2-e3-e4-e5+e6", "6", 6),
        row(-2, 2, "2l-2e1-e2-e3", "C(6,3)*C(3,2)", 60),
        row(-2, 2, "3l-2e1-2e2-e3-e4-e5", "6*C(5,2)", 60),
        row(-2, 2, "4l-2e1-2e2-2e3-2e4-e5-e6", "C(6,2)", 15),
        row(2, 4, "2l-e1-e2", "C(6,2)", 15),
        row(2, 4, "3l-2e1-e2-e3-e4", "4*C(6,4)", 60),
        row(2, 4, "4l-3e1-e2-e3-e4-e5-e6", "6", 6),
        row(2, 4, "4l-2e1-2e2-2e3-e4-e5", "6*C(5,2)", 60),
        row(2, 4, "5l-3e1-2e2-2e3-2e4-e5-e6", "4*C(6,2)", 60),
        row(2, 4, "6l-3e1-3e2-2e3-2e4-2e5-2e6", "C(6,2)", 15),
    ];
    &ROWS
}

pub fn reference_2away() -> &'static [ReferenceRow] {
    const ROWS: [ReferenceRow; 34] = [
        row(4, 6, "2l", "1", 1),
        row(4, 6, "6l-4e1-2e2-2e3-2e4-2e5", "C(6,5)*C(5,4)", 30),
        row(4, 6, "10l-4e1-4e2-4e3-4e4-4e5-4e6", "1", 1),
        row(3, 5, "2l-e1", "6", 6),
        row(3, 5, "3l-2e1-e2-e3", "C(6,3)*C(3,2)", 60),
        row(3, 5, "4l-3e1-e2-e3-e4-e5", "C(6,5)*C(5,4)", 30),
        row(3, 5, "4l-2e1-2e2-2e3-e4", "C(6,2)", 15),
        row(3, 5, "6l-4e1-2e2-2e3-2e4-2e5-e6", "2*C(6,2)", 30),
        row(3, 5, "6l-3e1-3e2-3e3-2e4-e5-e6", "3*C(6,3)", 60),
        row(3, 5, "7l-4e1-3e2-3e3-2e4-2e5-2e6", "3*C(6,3)", 60),
        row(3, 5, "8l-4e1-3e2-3e3-3e4-3e5-3e6", "6", 6),
        row(0, 4, "l+e6", "6", 6),
        row(0, 4, "2l-e1-e2-e3+e6", "C(6,2)", 15),
        row(0, 4, "3l-2e1-2e2-e3", "3*C(6,3)", 60),
        row(0, 4, "3l-2e1-e2-e3-e4-e5+e6", "6", 6),
        row(0, 4, "4l-3e1-2e2-e3-e4-e5", "6", 6),
        row(0, 4, "5l-3e1-3e2-2e3-e4-e5-e6", "12*C(5,3)", 120),
        row(0, 4, "6l-3e1-3e2-3e3-2e4-2e5-e6", "C(6,3)*C(3,2)", 60),
        row(0, 4, "7l-3e1-3e2-3e3-3e4-3e5-2e6", "6", 6),
        row(-3, 3, "e4+e5+e6", "C(6,3)", 20),
        row(-3, 3, "l-e1-e2+e5+e6", "C(6,4)*C(4,2)", 90),
        row(-3, 3, "2l-2e1-e2-e3+e6", "2*C(6,4)*C(4,2)", 180),
        row(-3, 3, "3l-3e1-e2-e3-e4", "4*C(6,4)", 60),
        row(-3, 3, "3l-2e1-2e2-e3-e4-e5+e6", "6*C(5,3)", 60),
        row(-3, 3, "4l-3e1-2e2-2e3-e4-e5-e6", "3*C(6,3)", 60),
        row(-3, 3, "5l-3e1-3e2-2e3-2e4-e5-e6", "C(6,2)*C(4,2)", 90),
        row(-3, 3, "6l-3e1-3e2-3e3-2e4-2e5-2e6", "C(6,3)", 20),
        row(-1, 3, "l-e1+e6", "2*C(6,2)", 30),
        row(-1, 3, "2l-2e1-e2", "2*C(6,2)", 30),
        row(-1, 3, "2l-e1-e2-e3-e4+e6", "5*C(6,5)", 30),
        row(-1, 3, "3l-2e1-2e2-e3-e4", "C(6,2)*C(4,2)", 90),
        row(-1, 3, "4l-3e1-2e2-e3-e4-e5-e6", "2*C(6,2)", 30),
        row(-1, 3, "4l-2e1-2e2-2e3-e5", "4*C(6,2)", 60),
        row(-1, 3, "5l-3e1-2e2-2e3-2e4-2e5-e6", "2*C(6,4)", 30),
    ];
    &ROWS
}

/// A published 2-away row whose printed data fails a mechanical check, with
/// the row that replaces it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub stratum: Stratum,
    pub printed_rep: &'static str,
    pub printed_u: u64,
    /// Replacement class and count; `None` drops the row.
    pub corrected: Option<(&'static str, u64)>,
    pub reason: &'static str,
}

const U_MISMATCH: &str = "printed u differs from the number of distinct permutations of the printed class";

pub const P37_ERRATA: [Erratum; 7] = [
    Erratum {
        stratum: Stratum::new(3, 5),
        printed_rep: "4l-2e1-2e2-2e3-e4",
        printed_u: 15,
        corrected: Some(("4l-2e1-2e2-2e3-e4", 60)),
        reason: U_MISMATCH,
    },
    Erratum {
        stratum: Stratum::new(0, 4),
        printed_rep: "2l-e1-e2-e3+e6",
        printed_u: 15,
        corrected: Some(("2l-e1-e2-e3+e6", 60)),
        reason: U_MISMATCH,
    },
    Erratum {
        stratum: Stratum::new(0, 4),
        printed_rep: "3l-2e1-e2-e3-e4-e5+e6",
        printed_u: 6,
        corrected: Some(("3l-2e1-e2-e3-e4-e5+e6", 30)),
        reason: U_MISMATCH,
    },
    Erratum {
        stratum: Stratum::new(0, 4),
        printed_rep: "4l-3e1-2e2-e3-e4-e5",
        printed_u: 6,
        corrected: Some(("4l-3e1-2e2-e3-e4-e5", 120)),
        reason: U_MISMATCH,
    },
    Erratum {
        stratum: Stratum::new(0, 4),
        printed_rep: "5l-3e1-3e2-2e3-e4-e5-e6",
        printed_u: 120,
        corrected: Some(("5l-3e1-3e2-2e3-e4-e5-e6", 60)),
        reason: U_MISMATCH,
    },
    Erratum {
        stratum: Stratum::new(-1, 3),
        printed_rep: "4l-2e1-2e2-2e3-e5",
        printed_u: 60,
        corrected: Some(("4l-2e1-2e2-2e3-2e4-e5", 30)),
        reason: "printed class has (D^2, D.H) = (3, 5), outside its stratum; \
                 the only unlisted orbit of the stratum with a = 4 replaces it",
    },
    Erratum {
        stratum: Stratum::new(-3, 3),
        printed_rep: "4l-3e1-2e2-2e3-e4-e5-e6",
        printed_u: 60,
        corrected: None,
        reason: "printed class has (D^2, D.H) = (-4, 2), outside its stratum; \
                 two orbits of the stratum are unlisted, so no single replacement is determined",
    },
];

/// The published 2-away rows with [`P37_ERRATA`] applied.
pub fn corrected_2away() -> Vec<ReferenceRow> {
    reference_2away()
        .iter()
        .filter_map(|r| match P37_ERRATA.iter().find(|e| e.stratum == r.stratum && e.printed_rep == r.rep) {
            Some(e) => e.corrected.map(|(rep, u)| ReferenceRow { stratum: r.stratum, rep, u_text: r.u_text, u }),
            None => Some(*r),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RowMismatch {
    /// Reference row with no computed orbit.
    Missing { stratum: Stratum, rep: String },
    /// Computed orbit with no reference row.
    Extra { stratum: Stratum, rep: String },
    /// Same orbit, different count.
    OrbitSize { stratum: Stratum, rep: String, printed: u64, computed: u64 },
    /// Reference class lies outside the stratum it is printed under.
    WrongStratum { stratum: Stratum, rep: String, actual: Stratum },
}

impl fmt::Display for RowMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowMismatch::Missing { stratum, rep } => write!(f, "{stratum}: printed row {rep} not found"),
            RowMismatch::Extra { stratum, rep } => write!(f, "{stratum}: computed row {rep} not printed"),
            RowMismatch::OrbitSize { stratum, rep, printed, computed } => {
                write!(f, "{stratum}: {rep} printed u = {printed}, computed u = {computed}")
            }
            RowMismatch::WrongStratum { stratum, rep, actual } => {
                write!(f, "{stratum}: printed row {rep} lies in {actual}")
            }
        }
    }
}

/// Row-by-row comparison up to permutation of `e1..e6`.
pub fn compare_with_reference(computed: &[TableRow], reference: &[ReferenceRow]) -> Result<Vec<RowMismatch>> {
    let mut out = Vec::new();
    let mut matched = vec![false; computed.len()];
    for r in reference {
        let class: DivisorClass = r.rep.parse()?;
        let actual = Stratum::of(&class);
        if actual != r.stratum {
            out.push(RowMismatch::WrongStratum { stratum: r.stratum, rep: r.rep.to_string(), actual });
        }
        let key = canonical_orbit(&class);
        let hit = computed
            .iter()
            .enumerate()
            .find(|(i, row)| !matched[*i] && row.stratum == r.stratum && canonical_orbit(&row.record.rep) == key);
        match hit {
            Some((i, row)) => {
                matched[i] = true;
                if row.record.u != r.u {
                    out.push(RowMismatch::OrbitSize {
                        stratum: r.stratum,
                        rep: r.rep.to_string(),
                        printed: r.u,
                        computed: row.record.u,
                    });
                }
            }
            None => out.push(RowMismatch::Missing { stratum: r.stratum, rep: r.rep.to_string() }),
        }
    }
    for (i, row) in computed.iter().enumerate() {
        if !matched[i] {
            out.push(RowMismatch::Extra { stratum: row.stratum, rep: row.notation() });
        }
    }
    Ok(out)
}

/// Printed rows whose `u` differs from the multinomial count of the printed class.
pub fn inconsistent_printed_counts(reference: &[ReferenceRow]) -> Result<Vec<(ReferenceRow, u64)>> {
    let mut out = Vec::new();
    for r in reference {
        let class: DivisorClass = r.rep.parse()?;
        let u = orbit_size(&class);
        if u != r.u {
            out.push((*r, u));
        }
    }
    Ok(out)
}
