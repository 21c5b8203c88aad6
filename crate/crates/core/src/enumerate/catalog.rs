//! Explicit classes with known twist profiles: the six families of growing
//! `ell`, and every configuration of curves of degree at most three.

use serde::{Deserialize, Serialize};

use crate::cohomology::is_initialized;
use crate::error::{Error, Result};
use crate::laway::h1_profile;
use crate::picard::{degree, intersect, is_nef, self_intersection, DivisorClass, LINES};

/// A member of one of the six explicit families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtCase {
    pub case: u8,
    pub a: i64,
    pub class: DivisorClass,
    pub expected_ell: u64,
    /// Nonvanishing twists, as an inclusive range.
    pub window: (i64, i64),
}

/// Case `k` (1 to 6) at parameter `a >= 0`: `2l + (a+1)(e1 + .. + e_{k-1}) + a(e_k + .. + e6)`.
///
/// Case 1 has `S(D) = [-(5a + 3), a - 2]`, so `ell = 6a + 2`; case `k >= 2` has
/// `S(D) = [-(5a + 2 + k), a - 1]`, so `ell = 6a + 2 + k`.
pub fn ext_family(case: u8, a: i64) -> Result<ExtCase> {
    if !(1..=6).contains(&case) {
        return Err(Error::Precondition(format!("case must be in 1..=6, got {case}")));
    }
    if a < 0 {
        return Err(Error::Precondition(format!("a must be nonnegative, got {a}")));
    }
    let mut e = [a; 6];
    for slot in e.iter_mut().take(case as usize - 1) {
        *slot = a + 1;
    }
    let class = DivisorClass::new(2, e)?;
    let kk = case as i64;
    let window = if case == 1 { (-(5 * a + 3), a - 2) } else { (-(5 * a + 2 + kk), a - 1) };
    Ok(ExtCase {
        case,
        a,
        class,
        expected_ell: (window.1 - window.0 + 1) as u64,
        window,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CurveKind {
    Line,
    Conic,
    TwistedCubic,
}

impl CurveKind {
    /// Whether `c` is the class of an irreducible curve of this kind.
    fn admits(self, c: &DivisorClass) -> bool {
        match self {
            CurveKind::Line => LINES.contains(c),
            CurveKind::Conic => self_intersection(c) == 0 && degree(c) == 2 && is_nef(c),
            CurveKind::TwistedCubic => self_intersection(c) == 1 && degree(c) == 3 && is_nef(c),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub kind: CurveKind,
    pub class: DivisorClass,
    pub multiplicity: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub description: String,
    pub components: Vec<Component>,
    /// Intersection numbers of distinct components, pairs `(i, j)` with `i < j` in order.
    pub meetings: Vec<i64>,
    pub expected_ell: u64,
    pub expected_s_set: Option<Vec<i64>>,
    pub expected_initialized: bool,
}

impl CatalogEntry {
    pub fn class(&self) -> Result<DivisorClass> {
        self.components.iter().try_fold(DivisorClass::ZERO, |acc, c| {
            acc.checked_add(&c.class.checked_scale(c.multiplicity)?)
        })
    }

    /// Components are irreducible curves of their stated kind with the stated meetings.
    pub fn configuration_holds(&self) -> bool {
        if !self.components.iter().all(|c| c.kind.admits(&c.class) && c.multiplicity > 0) {
            return false;
        }
        let n = self.components.len();
        let actual: Vec<i64> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .map(|(i, j)| intersect(&self.components[i].class, &self.components[j].class))
            .collect();
        actual == self.meetings
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogReport {
    pub entry: CatalogEntry,
    pub class: DivisorClass,
    pub degree: i64,
    pub configuration_ok: bool,
    pub ell: u64,
    pub s_set: Vec<i64>,
    pub initialized: bool,
}

impl CatalogReport {
    pub fn passed(&self) -> bool {
        self.configuration_ok
            && self.ell == self.entry.expected_ell
            && self.entry.expected_s_set.as_ref().is_none_or(|s| *s == self.s_set)
            && self.initialized == self.entry.expected_initialized
    }
}

fn cls(s: &str) -> DivisorClass {
    s.parse().expect("catalog classes are well formed")
}

fn entry(
    description: &str,
    components: &[(CurveKind, &str, i64)],
    meetings: &[i64],
    expected_ell: u64,
    expected_s_set: Option<Vec<i64>>,
    expected_initialized: bool,
) -> CatalogEntry {
    CatalogEntry {
        description: description.to_string(),
        components: components
            .iter()
            .map(|&(kind, class, multiplicity)| Component { kind, class: cls(class), multiplicity })
            .collect(),
        meetings: meetings.to_vec(),
        expected_ell,
        expected_s_set: if expected_ell == 0 { Some(Vec::new()) } else { expected_s_set },
        expected_initialized,
    }
}

/// Every configuration of curves of degree 1, 2 and 3, with one representative each.
pub fn catalog_entries() -> Vec<CatalogEntry> {
    use CurveKind::{Conic, Line, TwistedCubic};
    vec![
        entry("line (exceptional)", &[(Line, "e1", 1)], &[], 0, None, true),
        entry("line (strict transform of a line)", &[(Line, "l - e1 - e2", 1)], &[], 0, None, true),
        entry("line (strict transform of a conic)", &[(Line, "2l - e1 - e2 - e3 - e4 - e5", 1)], &[], 0, None, true),
        entry("irreducible conic", &[(Conic, "l - e1", 1)], &[], 0, None, true),
        entry("two lines meeting", &[(Line, "e1", 1), (Line, "l - e1 - e2", 1)], &[1], 0, None, true),
        entry("two skew lines", &[(Line, "e5", 1), (Line, "e6", 1)], &[0], 1, Some(vec![-1]), true),
        entry("double line", &[(Line, "e1", 2)], &[], 3, Some(vec![-2, -1, 0]), true),
        entry("twisted cubic", &[(TwistedCubic, "l", 1)], &[], 0, None, true),
        entry("conic and skew line", &[(Conic, "l - e1", 1), (Line, "e2", 1)], &[0], 2, None, true),
        entry("conic and line meeting once", &[(Conic, "l - e1", 1), (Line, "e1", 1)], &[1], 0, None, true),
        entry(
            "conic and line meeting twice",
            &[(Conic, "l - e1", 1), (Line, "2l - e2 - e3 - e4 - e5 - e6", 1)],
            &[2],
            0,
            None,
            false,
        ),
        entry("line and double meeting line", &[(Line, "e1", 1), (Line, "l - e1 - e2", 2)], &[1], 2, None, true),
        entry("line and double skew line", &[(Line, "e1", 1), (Line, "e2", 2)], &[0], 3, Some(vec![-2, -1, 0]), true),
        entry("three skew lines", &[(Line, "e1", 1), (Line, "e2", 1), (Line, "e3", 1)], &[0, 0, 0], 2, None, true),
        entry(
            "three lines, one meeting pair",
            &[(Line, "e1", 1), (Line, "l - e1 - e2", 1), (Line, "e3", 1)],
            &[1, 0, 0],
            2,
            None,
            true,
        ),
        entry(
            "chain of three lines",
            &[(Line, "l - e1 - e2", 1), (Line, "e1", 1), (Line, "e2", 1)],
            &[1, 1, 0],
            0,
            None,
            true,
        ),
        entry(
            "triangle of lines",
            &[(Line, "e1", 1), (Line, "l - e1 - e2", 1), (Line, "2l - e1 - e3 - e4 - e5 - e6", 1)],
            &[1, 1, 1],
            0,
            None,
            false,
        ),
        entry("triple line", &[(Line, "e1", 3)], &[], 5, Some(vec![-3, -2, -1, 0, 1]), true),
    ]
}

/// Computes each catalog entry and compares it with its expected profile.
pub fn low_degree_catalog() -> Result<Vec<CatalogReport>> {
    catalog_entries()
        .into_iter()
        .map(|entry| {
            let class = entry.class()?;
            let profile = h1_profile(&class)?;
            Ok(CatalogReport {
                configuration_ok: entry.configuration_holds(),
                degree: degree(&class),
                initialized: is_initialized(&class),
                ell: profile.ell,
                s_set: profile.s_set,
                class,
                entry,
            })
        })
        .collect()
}
