//! Twist profiles `t -> h^1(D + tH)` and the predicates built on them.
//!
//! `S(D)` is the set of twists with `h^1(D + tH) != 0` and `ell(D) = |S(D)|`;
//! `O_X(D)` is `ell(D)`-away ACM, and ACM when `S(D)` is empty.

use serde::{Deserialize, Serialize};

use crate::cohomology::{coh, dual_raw, h0_raw, h1_raw, h2_raw, twist_raw, CohTriple};
use crate::error::{Error, Result};
use crate::picard::{degree, is_nef, line_products, self_intersection, DivisorClass};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistProfile {
    pub lo: i64,
    pub hi: i64,
    /// `h^1(D + tH)` for `t = lo..=hi`.
    pub h1: Vec<u64>,
    pub ell: u64,
    pub s_set: Vec<i64>,
}

impl TwistProfile {
    pub fn value(&self, t: i64) -> u64 {
        if t < self.lo || t > self.hi {
            0
        } else {
            self.h1[(t - self.lo) as usize]
        }
    }
}

pub(crate) fn window_raw(c: &[i64; 7]) -> (i64, i64) {
    let products = line_products(c);
    let max = *products.iter().max().expect("27 lines");
    let min = *products.iter().min().expect("27 lines");
    (-max - 1, 0.max(-min))
}

/// `(lo, hi)` such that `h^1(D + tH) = 0` for every `t <= lo` and every `t >= hi`.
///
/// For `t >= hi` the class `D + tH` meets every line nonnegatively, hence is
/// nef; for `t <= lo` the same holds for its Serre dual `-H - D - tH`.
pub fn twist_window(d: &DivisorClass) -> (i64, i64) {
    window_raw(&d.coeffs())
}

/// Evaluates `h^1(D + tH)` across the certified window and one twist beyond
/// each end, checking the guaranteed zeros and that `S(D)` is an interval.
pub fn h1_profile(d: &DivisorClass) -> Result<TwistProfile> {
    let c = d.coeffs();
    let (lo, hi) = window_raw(&c);
    for t in [lo - 1, lo, hi, hi + 1] {
        let v = h1_raw(&twist_raw(&c, t))?;
        if v != 0 {
            return Err(Error::Consistency(format!(
                "h1({d} + {t}H) = {v} outside the certified window [{lo}, {hi}]"
            )));
        }
    }
    let mut values = Vec::with_capacity((hi - lo + 1) as usize);
    let mut s_set = Vec::new();
    values.push(0);
    for t in (lo + 1)..hi {
        let v = h1_raw(&twist_raw(&c, t))? as u64;
        if v != 0 {
            s_set.push(t);
        }
        values.push(v);
    }
    if hi > lo {
        values.push(0);
    }
    check_contiguous(d, &s_set)?;
    Ok(TwistProfile { lo, hi, h1: values, ell: s_set.len() as u64, s_set })
}

fn check_contiguous(d: &DivisorClass, s_set: &[i64]) -> Result<()> {
    if let (Some(first), Some(last)) = (s_set.first(), s_set.last()) {
        if (last - first + 1) as usize != s_set.len() {
            return Err(Error::Consistency(format!(
                "nonvanishing twists of {d} are not an interval: {s_set:?}"
            )));
        }
    }
    Ok(())
}

/// `S(D)` and `ell(D)` without building the full value table.
pub(crate) fn s_range_raw(c: &[i64; 7]) -> Result<Option<(i64, i64)>> {
    let (lo, hi) = window_raw(c);
    let mut first = None;
    let mut last = None;
    for t in (lo + 1)..hi {
        if h1_raw(&twist_raw(c, t))? != 0 {
            if first.is_none() {
                first = Some(t);
            } else if last != Some(t - 1) {
                return Err(Error::Consistency(format!(
                    "nonvanishing twists of {} are not an interval",
                    DivisorClass::raw(*c)
                )));
            }
            last = Some(t);
        }
    }
    Ok(first.zip(last))
}

/// `ell(D)` if it is at most `cap`, `None` otherwise; stops scanning once the cap is passed.
pub(crate) fn ell_at_most(c: &[i64; 7], cap: u64) -> Result<Option<u64>> {
    let (lo, hi) = window_raw(c);
    let mut count = 0u64;
    let mut last = None;
    for t in (lo + 1)..hi {
        if h1_raw(&twist_raw(c, t))? != 0 {
            if last.is_some_and(|p| p != t - 1) {
                return Err(Error::Consistency(format!(
                    "nonvanishing twists of {} are not an interval",
                    DivisorClass::raw(*c)
                )));
            }
            last = Some(t);
            count += 1;
            if count > cap {
                return Ok(None);
            }
        }
    }
    Ok(Some(count))
}

pub(crate) fn ell_raw(c: &[i64; 7]) -> Result<u64> {
    Ok(s_range_raw(c)?.map_or(0, |(a, b)| (b - a + 1) as u64))
}

pub fn ell(d: &DivisorClass) -> Result<u64> {
    ell_raw(&d.coeffs())
}

pub fn is_acm(d: &DivisorClass) -> Result<bool> {
    Ok(ell(d)? == 0)
}

pub fn is_l_away(d: &DivisorClass, k: u64) -> Result<bool> {
    Ok(ell(d)? == k)
}

/// Number of twists `t` with `chi(D + tH) < 0`, given `D.H = d` and `D^2 = s`.
///
/// Each such twist has `h^1 >= -chi > 0`, so this bounds `ell(D)` from below.
pub fn riemann_roch_lower_bound(d: i64, s: i64) -> u64 {
    // 2 chi(D + tH) = 3t^2 + (2d + 3)t + (s + d + 2)
    let (a, b, c) = (3i64, 2 * d + 3, s + d + 2);
    let disc = b * b - 4 * a * c;
    if disc <= 0 {
        return 0;
    }
    let root = (disc as f64).sqrt();
    let lo = ((-b as f64 - root) / 6.0).floor() as i64 - 1;
    let hi = ((-b as f64 + root) / 6.0).ceil() as i64 + 1;
    (lo..=hi).filter(|&t| a * t * t + b * t + c < 0).count() as u64
}

/// `coh(D - H) = coh(D - 2H) = (0, 0, 0)`.
pub fn is_ulrich(d: &DivisorClass) -> Result<bool> {
    let c = d.coeffs();
    for t in [-1, -2] {
        let shifted = DivisorClass::raw(twist_raw(&c, t));
        if coh(&shifted)? != CohTriple::ZERO {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Weakly Ulrich on a surface: initialized, `h^1(D - tH) = 0` for `t <= 0`
/// and `t >= 3`, `h^2(D - tH) = 0` for `t <= 1`, `h^0(D - tH) = 0` for `t >= 2`.
///
/// The `h^1` conditions say `S(D)` lies in `{-2, -1}`, which the certified
/// profile decides. `h^0(D - tH)` is nonincreasing in `t` and `h^2(D - tH)`
/// nondecreasing, so the `h^0` and `h^2` conditions reduce to `t = 2` and
/// `t = 1`. Three further twists past each of those are checked as well; a
/// nonzero value there is reported as an inconsistency.
pub fn is_weakly_ulrich(d: &DivisorClass) -> Result<bool> {
    let c = d.coeffs();
    let at = |t: i64| twist_raw(&c, -t);
    let h0_tail_ok = h0_raw(at(2)) == 0;
    let h2_tail_ok = h2_raw(&at(1)) == 0;
    if h0_tail_ok && (3..=5).any(|t| h0_raw(at(t)) != 0) {
        return Err(Error::Consistency(format!("h0 of {d} is not monotone under twisting")));
    }
    if h2_tail_ok && (-2..=0).any(|t| h2_raw(&at(t)) != 0) {
        return Err(Error::Consistency(format!("h2 of {d} is not monotone under twisting")));
    }
    let initialized = h0_raw(c) > 0 && h0_raw(at(1)) == 0;
    if !(initialized && h0_tail_ok && h2_tail_ok) {
        return Ok(false);
    }
    Ok(match s_range_raw(&c)? {
        None => true,
        Some((a, b)) => a >= -2 && b <= -1,
    })
}

/// `(D^2, D.H)` is `(-2, 2)` or `(2, 4)`.
pub fn t31_numeric(d: &DivisorClass) -> bool {
    matches!((self_intersection(d), degree(d)), (-2, 2) | (2, 4))
}

/// One of: `(4, 6)`, nef and `|3H - D|` empty; `(3, 5)` and nef;
/// `(0, 4)` and `|2H - D|` empty; `(-3, 3)`; `(-1, 3)`.
pub fn t35_condition(d: &DivisorClass) -> bool {
    let c = d.coeffs();
    let empty_after = |t: i64| h0_raw(twist_raw(&dual_raw(&c), t + 1)) == 0;
    match (self_intersection(d), degree(d)) {
        (4, 6) => is_nef(d) && empty_after(3),
        (3, 5) => is_nef(d),
        (0, 4) => empty_after(2),
        (-3, 3) | (-1, 3) => true,
        _ => false,
    }
}
