//! Lattice arithmetic on the Picard group of a smooth cubic surface.
//!
//! The surface is the blow-up of the plane in six general points, so
//! `Pic(X) = Z l + Z e1 + ... + Z e6` with `l^2 = 1`, `e_i^2 = -1` and all
//! other products zero. A class is stored in the signed basis
//! `D = c0 l + c1 e1 + ... + c6 e6`. The classical notation
//! `D = a l - b1 e1 - ... - b6 e6` is the same class with `a = c0` and
//! `b_i = -c_i`; every parser and renderer in this crate uses that mapping.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible absolute value of a stored coefficient.
///
/// With this bound every pairing and every Riemann-Roch numerator fits in an
/// `i64` with many orders of magnitude to spare.
pub const COEFF_BOUND: i64 = 1_000_000;

/// A divisor class `c0 l + sum c_i e_i` with `|c_i| <= COEFF_BOUND`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ClassRepr", into = "ClassRepr")]
pub struct DivisorClass {
    c: [i64; 7],
}

/// JSON form: `{"l": c0, "e": [c1, ..., c6]}` (signed basis, `b_i = -e[i]`).
#[derive(Serialize, Deserialize)]
struct ClassRepr {
    l: i64,
    e: [i64; 6],
}

impl TryFrom<ClassRepr> for DivisorClass {
    type Error = Error;
    fn try_from(r: ClassRepr) -> Result<Self> {
        DivisorClass::new(r.l, r.e)
    }
}

impl From<DivisorClass> for ClassRepr {
    fn from(d: DivisorClass) -> Self {
        ClassRepr { l: d.c[0], e: d.e() }
    }
}

fn check_bound(value: i128) -> Result<i64> {
    if value.abs() > COEFF_BOUND as i128 {
        Err(Error::Bounds { value, bound: COEFF_BOUND })
    } else {
        Ok(value as i64)
    }
}

impl DivisorClass {
    pub const ZERO: DivisorClass = DivisorClass { c: [0; 7] };
    /// Pullback of a line of the plane.
    pub const L: DivisorClass = DivisorClass { c: [1, 0, 0, 0, 0, 0, 0] };
    /// Hyperplane class `3l - sum e_i`.
    pub const H: DivisorClass = DivisorClass { c: [3, -1, -1, -1, -1, -1, -1] };
    /// Canonical class `-H`.
    pub const K: DivisorClass = DivisorClass { c: [-3, 1, 1, 1, 1, 1, 1] };

    pub fn new(l: i64, e: [i64; 6]) -> Result<Self> {
        Self::from_coeffs([l, e[0], e[1], e[2], e[3], e[4], e[5]])
    }

    pub fn from_coeffs(c: [i64; 7]) -> Result<Self> {
        for &v in &c {
            check_bound(v as i128)?;
        }
        Ok(DivisorClass { c })
    }

    /// Builds `a l - sum b_i e_i`.
    pub fn from_paper(a: i64, b: [i64; 6]) -> Result<Self> {
        let mut e = [0i64; 6];
        for i in 0..6 {
            e[i] = b[i].checked_neg().ok_or(Error::Bounds {
                value: -(b[i] as i128),
                bound: COEFF_BOUND,
            })?;
        }
        Self::new(a, e)
    }

    /// The exceptional class `e_i`, `i` in `1..=6`.
    pub fn exceptional(i: usize) -> Self {
        assert!((1..=6).contains(&i), "exceptional index {i} out of range");
        let mut c = [0; 7];
        c[i] = 1;
        DivisorClass { c }
    }

    /// Unchecked constructor for coefficient vectors already known to be in range.
    pub(crate) const fn raw(c: [i64; 7]) -> Self {
        DivisorClass { c }
    }

    pub fn coeffs(&self) -> [i64; 7] {
        self.c
    }

    pub fn l(&self) -> i64 {
        self.c[0]
    }

    pub fn e(&self) -> [i64; 6] {
        [self.c[1], self.c[2], self.c[3], self.c[4], self.c[5], self.c[6]]
    }

    /// `(a, [b1..b6])` with `D = a l - sum b_i e_i`.
    pub fn paper_coeffs(&self) -> (i64, [i64; 6]) {
        let e = self.e();
        (self.c[0], e.map(|x| -x))
    }

    pub fn is_zero(&self) -> bool {
        self.c == [0; 7]
    }

    fn combine(&self, other: &Self, scale: i64) -> Result<Self> {
        let mut c = [0i64; 7];
        for (k, slot) in c.iter_mut().enumerate() {
            *slot = check_bound(self.c[k] as i128 + scale as i128 * other.c[k] as i128)?;
        }
        Ok(DivisorClass { c })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1)
    }

    /// `self + k * other`.
    pub fn add_multiple(&self, other: &Self, k: i64) -> Result<Self> {
        self.combine(other, k)
    }

    pub fn checked_scale(&self, k: i64) -> Result<Self> {
        Self::ZERO.combine(self, k)
    }

    /// `self + t H`.
    pub fn twist(&self, t: i64) -> Result<Self> {
        self.combine(&Self::H, t)
    }

    /// Applies a permutation of the exceptional classes: `e_i` goes to `e_{perm[i-1]}`.
    pub fn permute(&self, perm: [usize; 6]) -> Self {
        let mut c = [0i64; 7];
        c[0] = self.c[0];
        for i in 0..6 {
            c[perm[i] + 1] = self.c[i + 1];
        }
        DivisorClass { c }
    }

    /// Renders `a l - sum b_i e_i` in the given exceptional order.
    fn render(&self, order: &[usize; 6]) -> String {
        let mut out = String::new();
        let mut push = |coef: i64, sym: &str| {
            if coef == 0 {
                return;
            }
            let mag = coef.unsigned_abs();
            if out.is_empty() {
                if coef < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if coef < 0 { " - " } else { " + " });
            }
            if mag != 1 {
                out.push_str(&mag.to_string());
            }
            out.push_str(sym);
        };
        push(self.c[0], "l");
        for &i in order {
            push(self.c[i + 1], &format!("e{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// The class written in index order, e.g. `2l - e1 - e2 + e6`.
    pub fn paper_notation(&self) -> String {
        self.render(&[0, 1, 2, 3, 4, 5])
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("class serializes")
    }
}

impl std::ops::Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass { c: self.c.map(|x| -x) }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.paper_notation())
    }
}

impl fmt::Debug for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DivisorClass({})", self.paper_notation())
    }
}

impl FromStr for DivisorClass {
    type Err = Error;

    /// Accepts the JSON form or the notation `a*l - b1*e1 - ... - b6*e6`.
    ///
    /// Terms may appear in any order, `*` is optional, `H` and `K` are
    /// accepted as symbols, and a Unicode minus sign is treated as `-`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.starts_with('{') {
            return serde_json::from_str(trimmed).map_err(|err| Error::Parse {
                token: trimmed.to_string(),
                reason: err.to_string(),
            });
        }
        parse_notation(trimmed)
    }
}

fn parse_notation(s: &str) -> Result<DivisorClass> {
    let cleaned: String = s
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '*' && *c != '·')
        .map(|c| if c == '−' { '-' } else { c })
        .collect();
    if cleaned.is_empty() {
        return Err(Error::Parse { token: s.to_string(), reason: "empty class".into() });
    }
    if cleaned == "0" {
        return Ok(DivisorClass::ZERO);
    }
    let mut acc = [0i128; 7];
    let chars: Vec<char> = cleaned.chars().collect();
    let mut pos = 0;
    while pos < chars.len() {
        let start = pos;
        let mut sign = 1i128;
        if chars[pos] == '+' || chars[pos] == '-' {
            if chars[pos] == '-' {
                sign = -1;
            }
            pos += 1;
        } else if start != 0 {
            unreachable!("terms are split on signs");
        }
        let digits_start = pos;
        while pos < chars.len() && chars[pos].is_ascii_digit() {
            pos += 1;
        }
        let coef: i128 = if pos == digits_start {
            1
        } else {
            let text: String = chars[digits_start..pos].iter().collect();
            text.parse().map_err(|_| Error::Parse {
                token: text.clone(),
                reason: "coefficient out of range".into(),
            })?
        };
        let sym_start = pos;
        while pos < chars.len() && chars[pos] != '+' && chars[pos] != '-' {
            pos += 1;
        }
        let symbol: String = chars[sym_start..pos].iter().collect();
        let token: String = chars[start..pos].iter().collect();
        let basis: [i128; 7] = match symbol.as_str() {
            "l" | "L" => [1, 0, 0, 0, 0, 0, 0],
            "H" | "h" => [3, -1, -1, -1, -1, -1, -1],
            "K" | "k" => [-3, 1, 1, 1, 1, 1, 1],
            other => {
                let rest = other.strip_prefix('e').or_else(|| other.strip_prefix('E'));
                match rest.and_then(|r| r.parse::<usize>().ok()) {
                    Some(i) if (1..=6).contains(&i) => {
                        let mut b = [0; 7];
                        b[i] = 1;
                        b
                    }
                    _ => {
                        return Err(Error::Parse {
                            token,
                            reason: "expected a term in l, e1..e6, H or K".into(),
                        })
                    }
                }
            }
        };
        for k in 0..7 {
            acc[k] = acc[k]
                .checked_add(sign * coef * basis[k])
                .ok_or_else(|| Error::Parse { token: token.clone(), reason: "overflow".into() })?;
        }
    }
    let mut c = [0i64; 7];
    for k in 0..7 {
        c[k] = check_bound(acc[k])?;
    }
    Ok(DivisorClass { c })
}

/// Intersection pairing `c0 c0' - sum c_i c_i'`.
pub fn intersect(d: &DivisorClass, e: &DivisorClass) -> i64 {
    let a = &d.c;
    let b = &e.c;
    a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3] - a[4] * b[4] - a[5] * b[5] - a[6] * b[6]
}

pub fn self_intersection(d: &DivisorClass) -> i64 {
    intersect(d, d)
}

/// `D.H = 3a - sum b_i`.
pub fn degree(d: &DivisorClass) -> i64 {
    raw_degree(&d.c)
}

#[inline]
pub(crate) fn raw_degree(c: &[i64; 7]) -> i64 {
    3 * c[0] + c[1] + c[2] + c[3] + c[4] + c[5] + c[6]
}

#[inline]
pub(crate) fn raw_self_intersection(c: &[i64; 7]) -> i64 {
    c[0] * c[0] - c[1] * c[1] - c[2] * c[2] - c[3] * c[3] - c[4] * c[4] - c[5] * c[5] - c[6] * c[6]
}

/// Euler characteristic `(D^2 + D.H)/2 + 1` (Riemann-Roch with `K = -H`).
pub fn chi(d: &DivisorClass) -> Result<i64> {
    half_plus_one(self_intersection(d) + degree(d))
}

/// Arithmetic genus `(D^2 - D.H)/2 + 1`.
pub fn arithmetic_genus(d: &DivisorClass) -> Result<i64> {
    half_plus_one(self_intersection(d) - degree(d))
}

fn half_plus_one(numerator: i64) -> Result<i64> {
    if numerator % 2 != 0 {
        return Err(Error::Consistency(format!(
            "odd Riemann-Roch numerator {numerator}; the pairing is not even on K-shifted classes"
        )));
    }
    Ok(numerator / 2 + 1)
}

/// Riemann-Roch on raw coefficients; parity always holds since `D^2 = D.K mod 2`.
#[inline]
pub(crate) fn raw_chi(c: &[i64; 7]) -> i64 {
    let n = raw_self_intersection(c) + raw_degree(c);
    debug_assert!(n % 2 == 0);
    n / 2 + 1
}

const fn build_lines() -> [DivisorClass; 27] {
    let mut out = [DivisorClass::ZERO; 27];
    let mut n = 0;
    let mut i = 1;
    while i <= 6 {
        let mut c = [0i64; 7];
        c[i] = 1;
        out[n] = DivisorClass::raw(c);
        n += 1;
        i += 1;
    }
    let mut i = 1;
    while i <= 6 {
        let mut j = i + 1;
        while j <= 6 {
            let mut c = [0i64; 7];
            c[0] = 1;
            c[i] = -1;
            c[j] = -1;
            out[n] = DivisorClass::raw(c);
            n += 1;
            j += 1;
        }
        i += 1;
    }
    let mut j = 1;
    while j <= 6 {
        let mut c = [2, -1, -1, -1, -1, -1, -1];
        c[j] = 0;
        out[n] = DivisorClass::raw(c);
        n += 1;
        j += 1;
    }
    out
}

/// The 27 lines: `e_i`, then `l - e_i - e_j` (i < j, lexicographic), then
/// `2l - sum_{k != j} e_k` for `j = 1..6`.
pub const LINES: [DivisorClass; 27] = build_lines();

pub fn lines27() -> &'static [DivisorClass; 27] {
    &LINES
}

/// Index pairs `(i, j)` (0-based exceptional indices) of the lines
/// `l - e_i - e_j`, in `LINES` order.
pub(crate) const PAIRS: [(usize, usize); 15] = {
    let mut out = [(0usize, 0usize); 15];
    let mut n = 0;
    let mut i = 0;
    while i < 6 {
        let mut j = i + 1;
        while j < 6 {
            out[n] = (i, j);
            n += 1;
            j += 1;
        }
        i += 1;
    }
    out
};

/// `D.C` for every line, in `LINES` order, from closed forms.
#[inline]
pub(crate) fn line_products(c: &[i64; 7]) -> [i64; 27] {
    let mut out = [0i64; 27];
    let e = &c[1..];
    for i in 0..6 {
        out[i] = -e[i];
    }
    for (n, &(i, j)) in PAIRS.iter().enumerate() {
        out[6 + n] = c[0] + e[i] + e[j];
    }
    let s: i64 = e.iter().sum();
    for j in 0..6 {
        out[21 + j] = 2 * c[0] + s - e[j];
    }
    out
}

/// Nefness from the inequalities `b_i >= 0`, `a >= b_i + b_j` and
/// `2a >= sum_{i != j} b_i`.
pub fn is_nef_by_inequalities(d: &DivisorClass) -> bool {
    let (a, b) = d.paper_coeffs();
    if b.iter().any(|&x| x < 0) {
        return false;
    }
    for i in 0..6 {
        for j in (i + 1)..6 {
            if a < b[i] + b[j] {
                return false;
            }
        }
    }
    let total: i64 = b.iter().sum();
    (0..6).all(|j| 2 * a >= total - b[j])
}

/// Nefness as `D.C >= 0` for every line `C`, using the generic pairing.
pub fn is_nef_by_lines(d: &DivisorClass) -> bool {
    LINES.iter().all(|c| intersect(d, c) >= 0)
}

pub fn is_nef(d: &DivisorClass) -> bool {
    let nef = is_nef_by_inequalities(d);
    debug_assert_eq!(nef, is_nef_by_lines(d), "nefness routes disagree on {d}");
    nef
}

/// Canonical representative of an orbit under permutations of `e1..e6`.
///
/// `sorted` holds `c1..c6` in nonincreasing order (so `b_i` nondecreasing).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitKey {
    pub l: i64,
    pub sorted: [i64; 6],
}

impl OrbitKey {
    pub fn class(&self) -> DivisorClass {
        let s = self.sorted;
        DivisorClass::raw([self.l, s[0], s[1], s[2], s[3], s[4], s[5]])
    }

    /// The orbit member with `b_i` nonincreasing, as printed in classification tables.
    pub fn table_class(&self) -> DivisorClass {
        let s = self.sorted;
        DivisorClass::raw([self.l, s[5], s[4], s[3], s[2], s[1], s[0]])
    }

    /// Table rendering, e.g. `4l - 3e1 - e2 - e3 - e4 - e5 - e6`.
    pub fn table_notation(&self) -> String {
        self.table_class().paper_notation()
    }
}

pub fn canonical_orbit(d: &DivisorClass) -> OrbitKey {
    let mut sorted = d.e();
    sorted.sort_unstable_by(|x, y| y.cmp(x));
    OrbitKey { l: d.c[0], sorted }
}

/// Number of distinct classes obtained by permuting `e1..e6`: `6! / prod m_v!`.
pub fn orbit_size(d: &DivisorClass) -> u64 {
    let key = canonical_orbit(d);
    let mut size = 720u64;
    let mut run = 1u64;
    for k in 1..6 {
        if key.sorted[k] == key.sorted[k - 1] {
            run += 1;
            size /= run;
        } else {
            run = 1;
        }
    }
    size
}

/// Reflection in the root `r = l - e_i - e_j - e_k` (1-based indices):
/// `D -> D + (D.r) r`.
pub fn weyl_reflect(d: &DivisorClass, i: usize, j: usize, k: usize) -> Result<DivisorClass> {
    let valid = |x: usize| (1..=6).contains(&x);
    if !(valid(i) && valid(j) && valid(k)) || i == j || j == k || i == k {
        return Err(Error::Index(i, j, k));
    }
    let mut root = [0i64; 7];
    root[0] = 1;
    root[i] = -1;
    root[j] = -1;
    root[k] = -1;
    let root = DivisorClass::raw(root);
    d.add_multiple(&root, intersect(d, &root))
}
