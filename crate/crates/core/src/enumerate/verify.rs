//! Exhaustive checks of the classification statements over bounded degree.
//!
//! Effective classes of degree `d` have `-d^2 <= D^2 <= d^2 / 3`: an
//! effective class is a nonnegative sum of `d` lines, and the Hodge index
//! theorem gives `3 D^2 <= (D.H)^2`. Strata are skipped only when the
//! Riemann-Roch lower bound on `ell` already decides the statement.

use serde::{Deserialize, Serialize};

use super::catalog::ext_family;
use super::enum_orbits;
use crate::cohomology::{dual_raw, h0_raw, is_initialized, twist_raw};
use crate::error::{Error, Result};
use crate::laway::{
    ell_at_most, h1_profile, is_ulrich, is_weakly_ulrich, riemann_roch_lower_bound, t31_numeric,
    t35_condition,
};
use crate::par::Exec;
use crate::picard::{is_nef, orbit_size, DivisorClass, OrbitKey};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub class: DivisorClass,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub statement: String,
    pub bounds: String,
    /// Orbit representatives examined.
    pub orbits_checked: u64,
    /// Classes covered, counting every permutation.
    pub classes_checked: u64,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn new(statement: &str, bounds: String) -> Self {
        VerificationReport {
            statement: statement.to_string(),
            bounds,
            orbits_checked: 0,
            classes_checked: 0,
            counterexamples: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn success(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn absorb(&mut self, outcomes: Vec<(OrbitKey, Option<String>)>) {
        for (key, failure) in outcomes {
            self.orbits_checked += 1;
            self.classes_checked += orbit_size(&key.class());
            if let Some(detail) = failure {
                self.counterexamples.push(Counterexample { class: key.class(), detail });
            }
        }
    }
}

fn check_dmax(dmax: i64, min: i64) -> Result<()> {
    if dmax < min {
        return Err(Error::Precondition(format!("dmax must be at least {min}, got {dmax}")));
    }
    Ok(())
}

/// Orbit representatives of effective classes with `1 <= D.H <= dmax`, over
/// the strata accepted by `keep(d, s)`.
fn effective_orbits(exec: Exec, dmax: i64, keep: impl Fn(i64, i64) -> bool) -> Result<Vec<OrbitKey>> {
    let strata: Vec<(i64, i64)> = (1..=dmax)
        .flat_map(|d| (-d * d..=d * d / 3).map(move |s| (d, s)))
        .filter(|&(d, s)| keep(d, s))
        .collect();
    let keys: Vec<OrbitKey> = exec
        .try_map(&strata, |&(d, s)| enum_orbits(d, s))?
        .into_iter()
        .flatten()
        .collect();
    let effective = exec.map(&keys, |k| h0_raw(k.class().coeffs()) > 0);
    Ok(keys.into_iter().zip(effective).filter_map(|(k, e)| e.then_some(k)).collect())
}

fn numerics(k: &OrbitKey) -> (i64, i64) {
    let c = k.class();
    (crate::picard::self_intersection(&c), crate::picard::degree(&c))
}

fn initialized(c: &[i64; 7]) -> bool {
    h0_raw(*c) > 0 && h0_raw(twist_raw(c, -1)) == 0
}

/// Compares the two sides of an equivalence on every effective orbit.
fn equivalence(
    exec: Exec,
    report: &mut VerificationReport,
    keys: &[OrbitKey],
    lhs: impl Fn(&OrbitKey) -> Result<bool> + Sync + Send,
    rhs: impl Fn(&OrbitKey) -> bool + Sync + Send,
) -> Result<()> {
    let outcomes = exec.try_map(keys, |k| {
        let (l, r) = (lhs(k)?, rhs(k));
        let (s, d) = numerics(k);
        let detail = (l != r).then(|| format!("(D^2, D.H) = ({s}, {d}): left side {l}, right side {r}"));
        Ok::<_, Error>((*k, detail))
    })?;
    report.absorb(outcomes);
    Ok(())
}

/// Initialized and 1-away exactly when `(D^2, D.H)` is `(-2, 2)` or `(2, 4)`.
pub fn verify_t31(exec: Exec, dmax: i64) -> Result<VerificationReport> {
    check_dmax(dmax, 4)?;
    let mut report = VerificationReport::new("initialized and 1-away <=> (D^2, D.H) in {(-2,2), (2,4)}", format!("1 <= D.H <= {dmax}"));
    let keys = effective_orbits(exec, dmax, |_, _| true)?;
    let lhs = |k: &OrbitKey| -> Result<bool> {
        let (s, d) = numerics(k);
        let c = k.class().coeffs();
        if riemann_roch_lower_bound(d, s) > 1 || !initialized(&c) {
            return Ok(false);
        }
        Ok(ell_at_most(&c, 1)? == Some(1))
    };
    equivalence(exec, &mut report, &keys, lhs, |k| t31_numeric(&k.class()))?;
    Ok(report)
}

/// Initialized and 2-away exactly when one of the five numeric cases holds.
pub fn verify_t35(exec: Exec, dmax: i64) -> Result<VerificationReport> {
    check_dmax(dmax, 6)?;
    let mut report = VerificationReport::new("initialized and 2-away <=> one of the five (D^2, D.H) cases", format!("1 <= D.H <= {dmax}"));
    let keys = effective_orbits(exec, dmax, |_, _| true)?;
    let lhs = |k: &OrbitKey| -> Result<bool> {
        let (s, d) = numerics(k);
        let c = k.class().coeffs();
        if riemann_roch_lower_bound(d, s) > 2 || !initialized(&c) {
            return Ok(false);
        }
        Ok(ell_at_most(&c, 2)? == Some(2))
    };
    equivalence(exec, &mut report, &keys, lhs, |k| t35_condition(&k.class()))?;
    Ok(report)
}

/// Initialized and ACM exactly when `D^2 = D.H - 2` and `0 < D.H <= 3`.
pub fn verify_acm_ton(exec: Exec, dmax: i64) -> Result<VerificationReport> {
    check_dmax(dmax, 3)?;
    let mut report = VerificationReport::new("initialized and ACM <=> D^2 = D.H - 2, 0 < D.H <= 3", format!("1 <= D.H <= {dmax}"));
    let keys = effective_orbits(exec, dmax, |_, _| true)?;
    let lhs = |k: &OrbitKey| -> Result<bool> {
        let (s, d) = numerics(k);
        let c = k.class().coeffs();
        if riemann_roch_lower_bound(d, s) > 0 || !initialized(&c) {
            return Ok(false);
        }
        Ok(ell_at_most(&c, 0)? == Some(0))
    };
    let rhs = |k: &OrbitKey| {
        let (s, d) = numerics(k);
        s == d - 2 && 0 < d && d <= 3
    };
    equivalence(exec, &mut report, &keys, lhs, rhs)?;
    Ok(report)
}

/// Initialized, weakly Ulrich and not Ulrich exactly when one of the seven numeric cases holds.
pub fn verify_not_ulrich(exec: Exec, dmax: i64) -> Result<VerificationReport> {
    check_dmax(dmax, 4)?;
    let mut report = VerificationReport::new("initialized, weakly Ulrich, not Ulrich <=> one of seven (D^2, D.H) cases", format!("1 <= D.H <= {dmax}"));
    let keys = effective_orbits(exec, dmax, |_, _| true)?;
    let lhs = |k: &OrbitKey| -> Result<bool> {
        let (s, d) = numerics(k);
        // Weakly Ulrich forces S(D) into {-2, -1}.
        if riemann_roch_lower_bound(d, s) > 2 {
            return Ok(false);
        }
        let class = k.class();
        Ok(initialized(&class.coeffs()) && is_weakly_ulrich(&class)? && !is_ulrich(&class)?)
    };
    let rhs = |k: &OrbitKey| {
        let c = k.class().coeffs();
        match numerics(k) {
            (0, 2) | (-1, 1) | (-2, 2) | (2, 4) | (-3, 3) | (-1, 3) => true,
            (0, 4) => h0_raw(twist_raw(&dual_raw(&c), 3)) == 0,
            _ => false,
        }
    };
    equivalence(exec, &mut report, &keys, lhs, rhs)?;
    Ok(report)
}

/// For effective `D` with `D^2 = D.H - 2` and `D.H >= 3`: initialized exactly when nef.
pub fn verify_lemma_nef(exec: Exec, dmax: i64) -> Result<VerificationReport> {
    check_dmax(dmax, 3)?;
    let mut report = VerificationReport::new("D^2 = D.H - 2, D.H >= 3: initialized <=> nef", format!("3 <= D.H <= {dmax}"));
    let keys = effective_orbits(exec, dmax, |d, s| d >= 3 && s == d - 2)?;
    equivalence(exec, &mut report, &keys, |k| Ok(initialized(&k.class().coeffs())), |k| is_nef(&k.class()))?;
    Ok(report)
}

/// Degree bounds for initialized `ell`-away classes with `2 <= ell <= lmax`:
/// (i) `D.H <= 3 ell`; (ii) `D.H <= 3 ell - 1` when `ell >= 3`;
/// (iii) `D.H != 3 ell - k` whenever `k >= 1` and `ell > 2k/3 + 3`.
pub fn verify_degreebound(exec: Exec, lmax: u64, dmax: i64) -> Result<VerificationReport> {
    check_dmax(dmax, 1)?;
    if lmax < 2 {
        return Err(Error::Precondition(format!("lmax must be at least 2, got {lmax}")));
    }
    let mut report = VerificationReport::new("degree bounds (i), (ii), (iii)", format!("2 <= ell <= {lmax}, 1 <= D.H <= {dmax}"));
    let keys = effective_orbits(exec, dmax, |d, s| riemann_roch_lower_bound(d, s) <= lmax)?;
    let outcomes = exec.try_map(&keys, |k| {
        let c = k.class().coeffs();
        if !initialized(&c) {
            return Ok::<_, Error>(None);
        }
        let Some(ell) = ell_at_most(&c, lmax)? else { return Ok(None) };
        if ell < 2 {
            return Ok(None);
        }
        let (_, d) = numerics(k);
        let l = ell as i64;
        let mut failed = Vec::new();
        if d > 3 * l {
            failed.push("(i)".to_string());
        }
        if l >= 3 && d > 3 * l - 1 {
            failed.push("(ii)".to_string());
        }
        for kk in 1..=(3 * l) {
            if 3 * l > 2 * kk + 9 && d == 3 * l - kk {
                failed.push(format!("(iii) with k = {kk}"));
            }
        }
        let detail = (!failed.is_empty()).then(|| format!("ell = {ell}, D.H = {d} violates {}", failed.join(", ")));
        Ok(Some((*k, detail, ell)))
    })?;
    let mut per_ell = vec![0u64; lmax as usize + 1];
    let relevant: Vec<(OrbitKey, Option<String>)> = outcomes
        .into_iter()
        .flatten()
        .map(|(k, detail, ell)| {
            per_ell[ell as usize] += 1;
            (k, detail)
        })
        .collect();
    report.absorb(relevant);
    for (ell, count) in per_ell.iter().enumerate().skip(2) {
        report.notes.push(format!("ell = {ell}: {count} initialized orbits"));
    }
    Ok(report)
}

/// For nef effective `D` with `(D^2, D.H) = (3l - 2, 3l)` and `|(2l - 1)H - D|`
/// empty: `S(D) = {-(2l - 1), ..., -2}`.
pub fn verify_prop3l(exec: Exec, lrange: &[i64]) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("(3l-2, 3l), nef, |(2l-1)H - D| empty => (2l-2)-away", format!("l in {lrange:?}"));
    for &l in lrange {
        if l < 2 {
            return Err(Error::Precondition(format!("l must be at least 2, got {l}")));
        }
        let keys: Vec<OrbitKey> = enum_orbits(3 * l, 3 * l - 2)?
            .into_iter()
            .filter(|k| {
                let c = k.class().coeffs();
                h0_raw(c) > 0 && is_nef(&k.class()) && h0_raw(twist_raw(&dual_raw(&c), 2 * l)) == 0
            })
            .collect();
        let expected: Vec<i64> = (-(2 * l - 1)..=-2).collect();
        let outcomes = exec.try_map(&keys, |k| {
            let p = h1_profile(&k.class())?;
            let detail = (p.s_set != expected).then(|| format!("S(D) = {:?}, expected {:?}", p.s_set, expected));
            Ok::<_, Error>((*k, detail))
        })?;
        report.notes.push(format!("l = {l}: {} orbits in the stratum", keys.len()));
        report.absorb(outcomes);
    }
    Ok(report)
}

/// Each of the six families for `0 <= a <= amax` has the stated `ell` and window.
///
/// For `a >= 1` the classes have negative degree, so they are not effective;
/// the notes record which members are initialized.
pub fn verify_ext(exec: Exec, amax: i64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("six explicit families: ell and nonvanishing window", format!("0 <= a <= {amax}"));
    let cases: Vec<(u8, i64)> = (1..=6).flat_map(|k| (0..=amax).map(move |a| (k, a))).collect();
    let outcomes = exec.try_map(&cases, |&(case, a)| {
        let fam = ext_family(case, a)?;
        let p = h1_profile(&fam.class)?;
        let expected: Vec<i64> = (fam.window.0..=fam.window.1).collect();
        let mut problems = Vec::new();
        if p.ell != fam.expected_ell {
            problems.push(format!("ell = {}, expected {}", p.ell, fam.expected_ell));
        }
        if p.s_set != expected {
            problems.push(format!("S(D) = {:?}, expected {:?}", p.s_set, fam.window));
        }
        let detail = (!problems.is_empty()).then(|| format!("case {case}, a = {a}: {}", problems.join("; ")));
        Ok::<_, Error>((fam, detail))
    })?;
    let mut initialized = Vec::new();
    for (fam, detail) in outcomes {
        report.orbits_checked += 1;
        report.classes_checked += 1;
        if is_initialized(&fam.class) {
            initialized.push(format!("({}, {})", fam.case, fam.a));
        }
        if let Some(detail) = detail {
            report.counterexamples.push(Counterexample { class: fam.class, detail });
        }
    }
    report.notes.push(format!("initialized members (case, a): {}", initialized.join(" ")));
    Ok(report)
}
