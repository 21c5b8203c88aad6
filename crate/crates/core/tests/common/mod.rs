//! Oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cubic_laway::cohomology::{coh, is_effective, monoid_effective};
use cubic_laway::laway::{ell, h1_profile};
use cubic_laway::picard::{
    canonical_orbit, chi, is_nef_by_inequalities, is_nef_by_lines, weyl_reflect, DivisorClass, OrbitKey,
};

/// Invariant checks that need no published numbers. Returns the first failure.
pub fn check_invariants(d: &DivisorClass) -> Result<(), String> {
    let fail = |what: &str| Err(format!("{d}: {what}"));
    let c = coh(d).map_err(|e| format!("{d}: {e}"))?;
    let dual = (-*d).add_multiple(&DivisorClass::H, -1).map_err(|e| e.to_string())?;
    let cd = coh(&dual).map_err(|e| format!("{dual}: {e}"))?;
    if c != cd.reversed() {
        return fail("Serre duality");
    }
    if c.euler() != chi(d).map_err(|e| e.to_string())? {
        return fail("Euler characteristic");
    }
    let profile = match h1_profile(d) {
        Ok(p) => p,
        Err(e) => return fail(&format!("profile: {e}")),
    };
    if let (Some(first), Some(last)) = (profile.s_set.first(), profile.s_set.last()) {
        if (last - first + 1) as usize != profile.s_set.len() {
            return fail("nonvanishing twists not contiguous");
        }
    }
    if ell(&-*d).map_err(|e| e.to_string())? != profile.ell {
        return fail("ell(-D) != ell(D)");
    }
    let nef_ineq = is_nef_by_inequalities(d);
    if nef_ineq != is_nef_by_lines(d) {
        return fail("nef routes disagree");
    }
    if nef_ineq && (c.h1 != 0 || c.h2 != 0) {
        return fail("nef class with higher cohomology");
    }
    Ok(())
}

/// The effective-monoid search agrees with the reduction `h^0 > 0`.
pub fn check_effectivity_routes(d: &DivisorClass) -> Result<(), String> {
    let monoid = monoid_effective(d).map_err(|e| format!("{d}: {e}"))?;
    if monoid != is_effective(d) {
        return Err(format!("{d}: monoid says {monoid}, reduction says {}", is_effective(d)));
    }
    Ok(())
}

/// Orbits reachable from `seeds` by the reflections in `l - ei - ej - ek`.
pub fn reflection_closure(seeds: impl IntoIterator<Item = OrbitKey>) -> BTreeSet<OrbitKey> {
    let mut seen: BTreeSet<OrbitKey> = seeds.into_iter().collect();
    let mut queue: Vec<OrbitKey> = seen.iter().copied().collect();
    while let Some(k) = queue.pop() {
        for i in 1..=4 {
            for j in (i + 1)..=5 {
                for l in (j + 1)..=6 {
                    let image = canonical_orbit(&weyl_reflect(&k.class(), i, j, l).unwrap());
                    if seen.insert(image) {
                        queue.push(image);
                    }
                }
            }
        }
    }
    seen
}

/// Every class with all coordinates in `-r..=r`.
pub fn box_classes(r: i64) -> Vec<DivisorClass> {
    let side = 2 * r + 1;
    (0..side.pow(7))
        .map(|mut code| {
            let mut c = [0i64; 7];
            for slot in c.iter_mut() {
                *slot = code % side - r;
                code /= side;
            }
            DivisorClass::from_coeffs(c).unwrap()
        })
        .collect()
}
