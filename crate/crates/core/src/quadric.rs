//! Line bundles on the smooth quadric `Q = P^1 x P^1` and the transfer to
//! smooth surfaces of degree `d` in `P^3`.
//!
//! A class `(a, b)` is `a h1 + b h2`; the hyperplane class is `(1, 1)` and the
//! canonical class `(-2, -2)`. Cohomology comes from Kunneth.
//!
//! A curve `D` of class `(l + 1, 0)` on `Q` has the resolution
//! `0 -> O(-2) -> I_D -> O_Q(-D) -> 0` on `P^3`. If `I_D(d)` is 0-regular, a
//! general surface of degree `d` through `D` is smooth and `O(D)` restricted
//! to it is initialized and `l`-away ACM. [`regularity_certificate`] checks
//! the vanishings that regularity reduces to; smoothness itself comes from a
//! global generation argument that is not computed here.

use serde::{Deserialize, Serialize};

use crate::cohomology::CohTriple;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BidegreeClass {
    pub a: i64,
    pub b: i64,
}

impl BidegreeClass {
    pub const H: BidegreeClass = BidegreeClass { a: 1, b: 1 };
    pub const K: BidegreeClass = BidegreeClass { a: -2, b: -2 };

    pub const fn new(a: i64, b: i64) -> Self {
        BidegreeClass { a, b }
    }

    pub fn twist(&self, t: i64) -> Self {
        BidegreeClass { a: self.a + t, b: self.b + t }
    }
}

/// `h^0(O_{P^1}(x))`.
fn n(x: i64) -> u64 {
    (x + 1).max(0) as u64
}

/// `h^1(O_{P^1}(x))`.
fn m(x: i64) -> u64 {
    (-x - 1).max(0) as u64
}

pub fn q_coh(c: BidegreeClass) -> CohTriple {
    CohTriple {
        h0: n(c.a) * n(c.b),
        h1: n(c.a) * m(c.b) + m(c.a) * n(c.b),
        h2: m(c.a) * m(c.b),
    }
}

/// Number of twists `t` with `h^1(c + t(1, 1)) != 0`.
///
/// `h^1` needs one coordinate `>= 0` and the other `<= -2`, so only twists
/// with `-max(a, b) <= t <= -min(a, b) - 2` can contribute; the scan adds a
/// margin of two on each side.
pub fn q_ell(c: BidegreeClass) -> u64 {
    q_nonvanishing(c).len() as u64
}

pub fn q_nonvanishing(c: BidegreeClass) -> Vec<i64> {
    let lo = -c.a.max(c.b) - 2;
    let hi = -c.a.min(c.b) + 2;
    (lo..=hi).filter(|&t| q_coh(c.twist(t)).h1 != 0).collect()
}

/// `(h^0, h^1, h^2, h^3)` of `O_{P^3}(m)`.
pub fn p3_coh(m: i64) -> [u64; 4] {
    let h0 = |k: i64| -> u64 {
        if k < 0 {
            0
        } else {
            let k = k as u64;
            (k + 1) * (k + 2) * (k + 3) / 6
        }
    };
    [h0(m), 0, 0, h0(-m - 4)]
}

fn check_preconditions(ell: i64, d: i64) -> Result<()> {
    if ell < 1 || d < 3 {
        return Err(Error::Precondition(format!(
            "need ell >= 1 and d >= 3, got ell = {ell}, d = {d}"
        )));
    }
    Ok(())
}

/// Vanishings that make `I_D(d)` 0-regular for `D = (ell + 1, 0)` on the quadric.
///
/// The conditions are `h^0(O_Q(D)(1 - d)) = 0`, `h^1(O_Q(D)(-1 - d)) = 0`,
/// and `h^1(I_D(d-1)) = h^2(I_D(d-2)) = h^3(I_D(d-3)) = 0`. The last three
/// come from the resolution of `I_D`: the first is exact since
/// `O_{P^3}(d-3)` has no `h^1`, `h^2`; the other two are bounded above by
/// `h^2(O_Q(-D)(d-2))` and `h^3(O_{P^3}(d-5))`.
pub fn regularity_certificate(ell: i64, d: i64) -> Result<bool> {
    check_preconditions(ell, d)?;
    let class = BidegreeClass::new(ell + 1, 0);
    let dual = BidegreeClass::new(-class.a, -class.b);
    let checks = [
        q_coh(class.twist(1 - d)).h0 == 0,
        q_coh(class.twist(-1 - d)).h1 == 0,
        q_coh(dual.twist(d - 1)).h1 == 0,
        q_coh(dual.twist(d - 2)).h2 == 0,
        p3_coh(d - 5)[3] == 0,
    ];
    Ok(checks.iter().all(|&ok| ok))
}

/// Number of twists `m` with `h^1(I_D(m)) != 0` for `D = (ell + 1, 0)`.
///
/// `h^1(I_D(m)) = h^1(O_Q(-D)(m))` because `O_{P^3}(m - 2)` has no
/// intermediate cohomology.
pub fn ideal_h1_count(ell: i64) -> u64 {
    q_ell(BidegreeClass::new(-(ell + 1), 0))
}

/// `q_ell((ell + 1, 0)) = ell`, the transfer count agrees, and the regularity
/// certificate holds.
pub fn t41_check(ell: i64, d: i64) -> Result<bool> {
    check_preconditions(ell, d)?;
    let on_quadric = q_ell(BidegreeClass::new(ell + 1, 0));
    let transferred = ideal_h1_count(ell);
    if transferred != on_quadric {
        return Err(Error::Consistency(format!(
            "ideal sheaf count {transferred} differs from quadric count {on_quadric} at ell = {ell}"
        )));
    }
    Ok(on_quadric == ell as u64 && regularity_certificate(ell, d)?)
}
