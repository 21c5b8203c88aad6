//! Enumeration of classes by degree and self-intersection, orbit records,
//! classification tables and the brute-force verifiers.
//!
//! Solutions of `3a - sum b_i = d`, `a^2 - sum b_i^2 = s` are produced one per
//! orbit under permutations of `e1..e6`. Every predicate used downstream is
//! invariant under those permutations, so checking one representative per
//! orbit checks the whole orbit.

mod catalog;
mod tables;
mod verify;

pub use catalog::{
    catalog_entries, ext_family, low_degree_catalog, CatalogEntry, CatalogReport, Component, CurveKind, ExtCase,
};
pub use tables::{
    compare_with_reference, corrected_2away, inconsistent_printed_counts, reference_1away,
    reference_2away, table_1away, table_2away, Erratum, ReferenceRow, RowMismatch, Stratum,
    TableRow, ONE_AWAY_STRATA, P37_ERRATA, TWO_AWAY_STRATA,
};
pub use verify::{
    verify_acm_ton, verify_degreebound, verify_ext, verify_lemma_nef, verify_not_ulrich,
    verify_prop3l, verify_t31, verify_t35, Counterexample, VerificationReport,
};

use serde::{Deserialize, Serialize};

use crate::cohomology::{h0_raw, twist_raw};
use crate::error::{Error, Result};
use crate::laway::{h1_profile, is_ulrich, is_weakly_ulrich};
use crate::par::Exec;
use crate::picard::{canonical_orbit, is_nef, orbit_size, DivisorClass, OrbitKey, COEFF_BOUND};

/// Orbit representatives of all classes with `D.H = d` and `D^2 = s`.
///
/// The range of `a` comes from Cauchy-Schwarz, `(3a - d)^2 <= 6 (a^2 - s)`,
/// and each `|b_i| <= sqrt(a^2 - s)`. Output is sorted by [`OrbitKey`].
pub fn enum_orbits(d: i64, s: i64) -> Result<Vec<OrbitKey>> {
    let disc = 2 * d * d - 6 * s;
    if disc < 0 {
        return Ok(Vec::new());
    }
    let r = ((disc as f64) / 3.0).sqrt();
    let a_lo = (d as f64 - r).floor() as i64 - 1;
    let a_hi = (d as f64 + r).ceil() as i64 + 1;
    for bound in [a_lo, a_hi] {
        if bound.abs() > COEFF_BOUND {
            return Err(Error::Bounds { value: bound as i128, bound: COEFF_BOUND });
        }
    }
    let mut out = Vec::new();
    let mut b = [0i64; 6];
    for a in a_lo..=a_hi {
        if 3 * a * a - 6 * a * d + d * d + 6 * s > 0 {
            continue;
        }
        let sum = 3 * a - d;
        let squares = a * a - s;
        if squares < 0 {
            continue;
        }
        let cap = isqrt(squares);
        if cap > COEFF_BOUND {
            return Err(Error::Bounds { value: cap as i128, bound: COEFF_BOUND });
        }
        fill(0, cap, sum, squares, &mut b, &mut |b| {
            // b is nonincreasing, so c = -b is nondecreasing; the key wants it reversed.
            let sorted = [-b[5], -b[4], -b[3], -b[2], -b[1], -b[0]];
            out.push(OrbitKey { l: a, sorted });
        });
    }
    out.sort();
    Ok(out)
}

fn isqrt(n: i64) -> i64 {
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Fills `b[k..]` with a nonincreasing sequence bounded above by `max`,
/// summing to `sum` with squares summing to `squares`.
fn fill(k: usize, max: i64, sum: i64, squares: i64, b: &mut [i64; 6], emit: &mut impl FnMut(&[i64; 6])) {
    let left = (6 - k) as i64;
    if left == 0 {
        if sum == 0 && squares == 0 {
            emit(b);
        }
        return;
    }
    // The largest remaining entry is at least the mean.
    let lo = sum.div_euclid(left) + i64::from(sum.rem_euclid(left) != 0);
    let hi = max.min(isqrt(squares));
    let mut v = hi;
    while v >= lo {
        let rest_sum = sum - v;
        let rest_sq = squares - v * v;
        let rest = left - 1;
        let feasible = if rest == 0 {
            rest_sum == 0 && rest_sq == 0
        } else {
            rest_sq >= 0 && rest * rest_sq >= rest_sum * rest_sum && rest_sum <= rest * v
        };
        if feasible {
            b[k] = v;
            fill(k + 1, v, rest_sum, rest_sq, b, emit);
        }
        v -= 1;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitFlags {
    pub effective: bool,
    pub initialized: bool,
    pub nef: bool,
    pub ell: u64,
    pub s_set: Vec<i64>,
    pub ulrich: bool,
    pub weakly_ulrich: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    /// Canonical representative (`c1 >= ... >= c6`).
    pub rep: DivisorClass,
    pub u: u64,
    pub self_intersection: i64,
    pub degree: i64,
    pub flags: OrbitFlags,
}

impl OrbitRecord {
    pub fn new(key: &OrbitKey) -> Result<Self> {
        let rep = key.class();
        let c = rep.coeffs();
        let h0 = h0_raw(c);
        let profile = h1_profile(&rep)?;
        Ok(OrbitRecord {
            rep,
            u: orbit_size(&rep),
            self_intersection: crate::picard::self_intersection(&rep),
            degree: crate::picard::degree(&rep),
            flags: OrbitFlags {
                effective: h0 > 0,
                initialized: h0 > 0 && h0_raw(twist_raw(&c, -1)) == 0,
                nef: is_nef(&rep),
                ell: profile.ell,
                s_set: profile.s_set,
                ulrich: is_ulrich(&rep)?,
                weakly_ulrich: is_weakly_ulrich(&rep)?,
            },
        })
    }

    pub fn key(&self) -> OrbitKey {
        canonical_orbit(&self.rep)
    }
}

/// Orbit filters selectable by name, combined by conjunction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filter {
    Effective,
    Initialized,
    Nef,
    Acm,
    Ulrich,
    WeaklyUlrich,
    Ell(u64),
}

impl Filter {
    pub fn accepts(&self, r: &OrbitRecord) -> bool {
        match *self {
            Filter::Effective => r.flags.effective,
            Filter::Initialized => r.flags.initialized,
            Filter::Nef => r.flags.nef,
            Filter::Acm => r.flags.ell == 0,
            Filter::Ulrich => r.flags.ulrich,
            Filter::WeaklyUlrich => r.flags.weakly_ulrich,
            Filter::Ell(k) => r.flags.ell == k,
        }
    }
}

impl std::str::FromStr for Filter {
    type Err = Error;

    /// `effective`, `initialized`, `nef`, `acm`, `ulrich`, `weakly-ulrich`, or `ell=K`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        Ok(match lower.as_str() {
            "effective" => Filter::Effective,
            "initialized" => Filter::Initialized,
            "nef" => Filter::Nef,
            "acm" => Filter::Acm,
            "ulrich" => Filter::Ulrich,
            "weakly-ulrich" | "weakly_ulrich" => Filter::WeaklyUlrich,
            other => match other.strip_prefix("ell=").map(str::parse) {
                Some(Ok(k)) => Filter::Ell(k),
                _ => {
                    return Err(Error::Parse {
                        token: s.to_string(),
                        reason: "unknown filter".into(),
                    })
                }
            },
        })
    }
}

/// Orbit records of the `(d, s)` stratum passing every filter, sorted by key.
pub fn enum_classes(exec: Exec, d: i64, s: i64, filters: &[Filter]) -> Result<Vec<OrbitRecord>> {
    let keys = enum_orbits(d, s)?;
    let records = exec.try_map(&keys, OrbitRecord::new)?;
    Ok(records.into_iter().filter(|r| filters.iter().all(|f| f.accepts(r))).collect())
}
