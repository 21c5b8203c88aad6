//! Dimensions `h^0`, `h^1`, `h^2` of `O_X(D)` on the cubic surface.
//!
//! `h^0` is computed by base-locus reduction: while some line `C` has
//! `D.C < 0` it is a fixed component of `|D|`, so `h^0(D) = h^0(D - C)`.
//! Each step lowers the degree, and the loop ends either at a class of
//! non-positive degree or at a nef class. A nef `D` has `D - K = D + H`
//! ample, so Kawamata-Viehweg gives `h^1 = h^2 = 0` and `h^0 = chi(D)`.
//! `h^2` follows from Serre duality with `K = -H`, and `h^1` from
//! Riemann-Roch.

use std::collections::HashSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::picard::{
    self, degree, intersect, is_nef, line_products, raw_chi, raw_degree, DivisorClass, LINES,
};

/// Largest degree accepted by [`monoid_effective`].
pub const MONOID_DEGREE_BUDGET: i64 = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CohTriple {
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
}

impl CohTriple {
    pub const ZERO: CohTriple = CohTriple { h0: 0, h1: 0, h2: 0 };

    pub fn euler(&self) -> i64 {
        self.h0 as i64 - self.h1 as i64 + self.h2 as i64
    }

    /// `(h2, h1, h0)`, the triple of the Serre dual.
    pub fn reversed(&self) -> CohTriple {
        CohTriple { h0: self.h2, h1: self.h1, h2: self.h0 }
    }
}

impl std::fmt::Display for CohTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.h0, self.h1, self.h2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TerminalKind {
    /// Reduced to the zero class: `h^0 = 1`.
    Zero,
    /// Reduced to a nef class: `h^0 = chi`.
    Nef,
    /// Reduced to a nonzero class with `D.H <= 0`: `h^0 = 0`.
    NegativeDegree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub line: DivisorClass,
    pub intersection: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub terminal: DivisorClass,
    pub terminal_kind: TerminalKind,
}

#[inline]
pub(crate) fn twist_raw(c: &[i64; 7], t: i64) -> [i64; 7] {
    [c[0] + 3 * t, c[1] - t, c[2] - t, c[3] - t, c[4] - t, c[5] - t, c[6] - t]
}

/// Coefficients of `-H - D`, the Serre dual.
#[inline]
pub(crate) fn dual_raw(c: &[i64; 7]) -> [i64; 7] {
    [-3 - c[0], 1 - c[1], 1 - c[2], 1 - c[3], 1 - c[4], 1 - c[5], 1 - c[6]]
}

/// `h^0` on raw coefficients.
///
/// Each sweep visits the lines in fixed order and removes a negative line
/// `C` with its full multiplicity `-D.C` at once, which is the same as
/// `-D.C` single reductions in a row.
pub(crate) fn h0_raw(mut c: [i64; 7]) -> i64 {
    let mut deg = raw_degree(&c);
    loop {
        if deg <= 0 {
            return i64::from(c == [0; 7]);
        }
        let mut reduced = false;
        for slot in c.iter_mut().skip(1) {
            let k = *slot;
            if k > 0 {
                *slot = 0;
                deg -= k;
                reduced = true;
            }
        }
        if deg <= 0 {
            continue;
        }
        for &(i, j) in picard::PAIRS.iter() {
            let p = c[0] + c[i + 1] + c[j + 1];
            if p < 0 {
                let k = -p;
                c[0] -= k;
                c[i + 1] += k;
                c[j + 1] += k;
                deg -= k;
                reduced = true;
            }
        }
        if deg <= 0 {
            continue;
        }
        for j in 1..=6 {
            let s = c[1] + c[2] + c[3] + c[4] + c[5] + c[6];
            let p = 2 * c[0] + s - c[j];
            if p < 0 {
                let k = -p;
                c[0] -= 2 * k;
                for (i, v) in c.iter_mut().enumerate().skip(1) {
                    if i != j {
                        *v += k;
                    }
                }
                deg -= k;
                reduced = true;
            }
        }
        if !reduced {
            return raw_chi(&c);
        }
    }
}

#[inline]
pub(crate) fn h2_raw(c: &[i64; 7]) -> i64 {
    h0_raw(dual_raw(c))
}

pub(crate) fn h1_raw(c: &[i64; 7]) -> Result<i64> {
    let v = h0_raw(*c) + h2_raw(c) - raw_chi(c);
    if v < 0 {
        return Err(Error::Consistency(format!(
            "negative h1 = {v} for {}",
            DivisorClass::raw(*c)
        )));
    }
    Ok(v)
}

pub fn h0(d: &DivisorClass) -> u64 {
    h0_raw(d.coeffs()) as u64
}

/// `h^0` together with the single-step reduction that produced it.
///
/// At every step the first line in [`LINES`] order with `D.C < 0` is removed.
pub fn h0_with_trace(d: &DivisorClass) -> (u64, ReductionTrace) {
    let mut cur = *d;
    let mut steps = Vec::new();
    loop {
        let deg = degree(&cur);
        if cur.is_zero() || deg <= 0 {
            let (value, kind) = if cur.is_zero() {
                (1, TerminalKind::Zero)
            } else {
                (0, TerminalKind::NegativeDegree)
            };
            return (value, ReductionTrace { steps, terminal: cur, terminal_kind: kind });
        }
        let negative = LINES.iter().map(|c| (c, intersect(&cur, c))).find(|&(_, p)| p < 0);
        match negative {
            Some((line, p)) => {
                steps.push(ReductionStep { line: *line, intersection: p });
                let next = cur.coeffs();
                let lc = line.coeffs();
                cur = DivisorClass::raw(std::array::from_fn(|k| next[k] - lc[k]));
            }
            None => {
                debug_assert!(is_nef(&cur));
                let value = raw_chi(&cur.coeffs());
                debug_assert!(value > 0);
                return (
                    value as u64,
                    ReductionTrace { steps, terminal: cur, terminal_kind: TerminalKind::Nef },
                );
            }
        }
    }
}

/// `h^2(D) = h^0(-H - D)`.
pub fn h2(d: &DivisorClass) -> u64 {
    h2_raw(&d.coeffs()) as u64
}

/// `h^1(D) = h^0(D) + h^2(D) - chi(D)`; a negative value is reported as an error.
pub fn h1(d: &DivisorClass) -> Result<u64> {
    h1_raw(&d.coeffs()).map(|v| v as u64)
}

pub fn coh(d: &DivisorClass) -> Result<CohTriple> {
    let c = d.coeffs();
    let h0 = h0_raw(c);
    let h2 = h2_raw(&c);
    let h1 = h0 + h2 - raw_chi(&c);
    if h1 < 0 {
        return Err(Error::Consistency(format!("negative h1 = {h1} for {d}")));
    }
    Ok(CohTriple { h0: h0 as u64, h1: h1 as u64, h2: h2 as u64 })
}

pub fn is_effective(d: &DivisorClass) -> bool {
    h0_raw(d.coeffs()) > 0
}

/// `h^0(D) >= 1` and `h^0(D - H) = 0`.
pub fn is_initialized(d: &DivisorClass) -> bool {
    let c = d.coeffs();
    h0_raw(c) > 0 && h0_raw(twist_raw(&c, -1)) == 0
}

/// Castelnuovo-Mumford `m`-regularity with respect to `H`:
/// `h^1(D + (m-1)H) = 0` and `h^2(D + (m-2)H) = 0`.
pub fn is_m_regular(d: &DivisorClass, m: i64) -> Result<bool> {
    let c = d.coeffs();
    Ok(h1_raw(&twist_raw(&c, m - 1))? == 0 && h2_raw(&twist_raw(&c, m - 2)) == 0)
}

/// Extremal rays of the nef cone: the 27 conic classes (`D^2 = 0`, degree 2)
/// and the 72 twisted-cubic classes (`D^2 = 1`, degree 3).
pub fn nef_cone_generators() -> &'static [DivisorClass] {
    static GENERATORS: OnceLock<Vec<DivisorClass>> = OnceLock::new();
    GENERATORS.get_or_init(|| {
        let mut out = Vec::new();
        for c0 in 0..=5i64 {
            for code in 0..5i64.pow(6) {
                let mut c = [c0, 0, 0, 0, 0, 0, 0];
                let mut rest = code;
                for slot in c.iter_mut().skip(1) {
                    *slot = rest % 5 - 3;
                    rest /= 5;
                }
                let d = DivisorClass::raw(c);
                let numerics = (picard::self_intersection(&d), degree(&d));
                if (numerics == (0, 2) || numerics == (1, 3)) && is_nef(&d) {
                    out.push(d);
                }
            }
        }
        out.sort();
        out
    })
}

/// Whether `D` is a sum of lines with nonnegative integer multiplicities.
///
/// Depth-first search that removes one line per level. A line meeting the
/// current class negatively must be a summand, so it is the only branch
/// tried; otherwise lines are tried by ascending intersection. Classes that
/// pair negatively with a nef generator are outside the effective cone and
/// are cut immediately, and failed classes are remembered.
pub fn monoid_effective(d: &DivisorClass) -> Result<bool> {
    let deg = degree(d);
    if deg > MONOID_DEGREE_BUDGET {
        return Err(Error::Budget { degree: deg, limit: MONOID_DEGREE_BUDGET });
    }
    let gens: Vec<[i64; 7]> = nef_cone_generators().iter().map(|g| g.coeffs()).collect();
    let mut failed = HashSet::new();
    Ok(monoid_search(d.coeffs(), &gens, &mut failed))
}

fn monoid_search(c: [i64; 7], gens: &[[i64; 7]], failed: &mut HashSet<[i64; 7]>) -> bool {
    if c == [0; 7] {
        return true;
    }
    if raw_degree(&c) <= 0 || failed.contains(&c) {
        return false;
    }
    let pair = |g: &[i64; 7]| c[0] * g[0] - (1..7).map(|k| c[k] * g[k]).sum::<i64>();
    if gens.iter().any(|g| pair(g) < 0) {
        failed.insert(c);
        return false;
    }
    let products = line_products(&c);
    let minus = |n: usize| {
        let lc = LINES[n].coeffs();
        std::array::from_fn(|k| c[k] - lc[k])
    };
    let found = match products.iter().position(|&p| p < 0) {
        Some(n) => monoid_search(minus(n), gens, failed),
        None => {
            let mut order: Vec<usize> = (0..27).collect();
            order.sort_by_key(|&n| (products[n], n));
            order.into_iter().any(|n| monoid_search(minus(n), gens, failed))
        }
    };
    if !found {
        failed.insert(c);
    }
    found
}
