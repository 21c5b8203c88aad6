//! Worked values for each public operation.

use cubic_laway::cohomology::{
    coh, h0, h0_with_trace, h1, h2, is_effective, is_initialized, is_m_regular, monoid_effective, CohTriple,
};
use cubic_laway::enumerate::{
    enum_classes, ext_family, low_degree_catalog, verify_acm_ton, verify_degreebound, verify_ext, verify_not_ulrich,
    verify_prop3l, verify_t31, verify_t35, Filter,
};
use cubic_laway::laway::{
    ell, h1_profile, is_acm, is_l_away, is_ulrich, is_weakly_ulrich, t31_numeric, t35_condition, twist_window,
};
use cubic_laway::picard::{
    arithmetic_genus, canonical_orbit, chi, degree, intersect, is_nef, orbit_size, weyl_reflect, DivisorClass,
};
use cubic_laway::quadric::{p3_coh, q_coh, q_ell, regularity_certificate, t41_check, BidegreeClass};
use cubic_laway::Exec;

fn cls(s: &str) -> DivisorClass {
    s.parse().unwrap()
}

fn t(h0: u64, h1: u64, h2: u64) -> CohTriple {
    CohTriple { h0, h1, h2 }
}

#[test]
fn lattice() {
    let h = DivisorClass::H;
    assert_eq!(intersect(&h, &h), 3);
    assert_eq!(intersect(&cls("e1"), &cls("e2")), 0);
    assert_eq!(intersect(&cls("l"), &cls("l")), 1);
    assert_eq!(degree(&h), 3);
    assert_eq!(degree(&cls("e5 + e6")), 2);
    assert_eq!(degree(&cls("2l + e1 + e2 + e3 + e4 + e5 + e6")), 12);
    assert_eq!(chi(&DivisorClass::ZERO).unwrap(), 1);
    assert_eq!(chi(&h).unwrap(), 4);
    assert_eq!(chi(&cls("2l - 2H")).unwrap(), -3);
    assert_eq!(arithmetic_genus(&h).unwrap(), 1);
    assert_eq!(arithmetic_genus(&cls("e1")).unwrap(), 0);
    assert_eq!(arithmetic_genus(&cls("e5 + e6")).unwrap(), -1);
    assert!(is_nef(&h));
    assert!(is_nef(&cls("2l")));
    assert!(!is_nef(&cls("3l + e1 - e3 - e4 - e5 - e6")));
}

#[test]
fn orbits_and_reflections() {
    let k = canonical_orbit(&cls("e5 + e6"));
    assert_eq!(k.class().paper_coeffs(), (0, [-1, -1, 0, 0, 0, 0]));
    assert_eq!(canonical_orbit(&cls("l - e1 - e2 + e6")), canonical_orbit(&cls("l - e3 - e5 + e2")));
    assert_eq!(canonical_orbit(&cls("2l")).class(), cls("2l"));
    assert_eq!(orbit_size(&cls("e5 + e6")), 15);
    assert_eq!(orbit_size(&cls("l - e1 - e2 + e6")), 60);
    assert_eq!(orbit_size(&cls("2l")), 1);
    assert_eq!(weyl_reflect(&DivisorClass::H, 1, 2, 3).unwrap(), DivisorClass::H);
    assert_eq!(weyl_reflect(&cls("e1"), 1, 2, 3).unwrap(), cls("l - e2 - e3"));
    let d = cls("4l - 3e1 + 2e5");
    assert_eq!(weyl_reflect(&weyl_reflect(&d, 1, 2, 3).unwrap(), 1, 2, 3).unwrap(), d);
    assert!(weyl_reflect(&d, 1, 1, 3).is_err());
}

#[test]
fn cohomology() {
    assert_eq!(h0(&cls("l + e6")), 3);
    assert_eq!(h0(&cls("e5 + e6")), 1);
    assert_eq!(h0(&cls("2H")), 10);
    assert_eq!(h0(&DivisorClass::ZERO), 1);
    assert_eq!(h2(&cls("-H")), 1);
    assert_eq!(h2(&cls("2l - 2H")), 0);
    assert_eq!(h2(&DivisorClass::H), 0);
    assert_eq!(h1(&cls("e5 + e6 - H")).unwrap(), 1);
    assert_eq!(h1(&cls("2l - 2H")).unwrap(), 3);
    assert_eq!(h1(&cls("-H")).unwrap(), 0);
    assert_eq!(coh(&DivisorClass::ZERO).unwrap(), t(1, 0, 0));
    assert_eq!(coh(&cls("2l - 2H")).unwrap(), t(0, 3, 0));
    assert_eq!(coh(&DivisorClass::H).unwrap(), t(4, 0, 0));
}

#[test]
fn reduction_trace_steps() {
    let (n, trace) = h0_with_trace(&cls("l + e6"));
    assert_eq!(n, 3);
    let mut deg = degree(&cls("l + e6"));
    for step in &trace.steps {
        assert!(step.intersection < 0);
        deg -= 1;
    }
    assert_eq!(deg, 3);
}

#[test]
fn effectivity() {
    assert!(is_effective(&cls("e1")));
    assert!(!is_effective(&cls("-H")));
    let d = cls("6l - 4e1 - 2e2 - 2e3 - 2e4 - 2e5");
    assert!(!is_effective(&cls("3H").checked_sub(&d).unwrap()));
    assert!(monoid_effective(&DivisorClass::H).unwrap());
    assert!(!monoid_effective(&cls("l - e1 - e2 - e3")).unwrap());
    assert!(monoid_effective(&cls("2e1")).unwrap());
    assert!(is_initialized(&cls("e1")));
    assert!(!is_initialized(&DivisorClass::H));
    assert!(is_initialized(&cls("2l")));
}

#[test]
fn regularity() {
    assert!(!is_m_regular(&DivisorClass::H, 0).unwrap());
    assert!(is_m_regular(&cls("2l + H"), 0).unwrap());
    assert!(!is_m_regular(&DivisorClass::ZERO, 1).unwrap());
    assert!(is_m_regular(&DivisorClass::ZERO, 2).unwrap());
}

#[test]
fn profiles() {
    assert_eq!(twist_window(&DivisorClass::ZERO), (-1, 0));
    assert_eq!(twist_window(&cls("2l + e1 + e2 + e3 + e4 + e5 + e6")), (-10, 1));
    assert_eq!(twist_window(&cls("e1")), (-2, 1));
    assert_eq!(h1_profile(&cls("3e1")).unwrap().s_set, vec![-3, -2, -1, 0, 1]);
    assert_eq!(h1_profile(&cls("e5 + e6")).unwrap().s_set, vec![-1]);
    assert_eq!(h1_profile(&cls("2l")).unwrap().s_set, vec![-3, -2]);
    assert_eq!(ell(&cls("e1")).unwrap(), 0);
    assert_eq!(ell(&cls("2e1")).unwrap(), 3);
    assert_eq!(ell(&cls("9l - 5e1 - 4e2 - 3e3 - 3e4 - 3e5 - 3e6")).unwrap(), 3);
    assert_eq!(ell(&cls("2l + e1 + e2 + e3 + e4 + e5 + e6")).unwrap(), 8);
    assert_eq!(ell(&cls("10l - 4e1 - 4e2 - 4e3 - 4e4 - 4e5 - 4e6")).unwrap(), 2);
}

#[test]
fn predicates() {
    assert!(is_acm(&cls("l - e1")).unwrap());
    assert!(is_l_away(&cls("2l - e1 - e2"), 1).unwrap());
    assert!(is_l_away(&cls("3l - 2e1 - e2 - e3"), 2).unwrap());
    assert!(is_ulrich(&cls("l")).unwrap());
    assert!(!is_ulrich(&DivisorClass::H).unwrap());
    assert!(!is_ulrich(&cls("e5 + e6")).unwrap());
    assert!(is_weakly_ulrich(&cls("l - e1")).unwrap());
    assert!(!is_weakly_ulrich(&cls("2l")).unwrap());
    assert!(is_weakly_ulrich(&cls("e5 + e6")).unwrap());
    assert!(t31_numeric(&cls("2l - e1 - e2")));
    assert!(t35_condition(&cls("2l")));
    assert!(!t35_condition(&cls("9l - 5e1 - 4e2 - 3e3 - 3e4 - 3e5 - 3e6")));
    assert!(t35_condition(&cls("l + e6")));
    assert!(!t35_condition(&cls("3e1")));
}

#[test]
fn enumeration() {
    let f = [Filter::Effective, Filter::Initialized];
    assert_eq!(enum_classes(Exec::Parallel, 2, -2, &f).unwrap().len(), 6);
    assert_eq!(enum_classes(Exec::Parallel, 4, 2, &f).unwrap().len(), 6);
    // The 27 lines fall into three permutation orbits: e_i, l - e_i - e_j, 2l - (five e's).
    let lines = enum_classes(Exec::Sequential, 1, -1, &[Filter::Effective]).unwrap();
    let mut u: Vec<u64> = lines.iter().map(|r| r.u).collect();
    u.sort();
    assert_eq!(u, vec![6, 6, 15]);
    for r in &lines {
        assert_eq!(canonical_orbit(&r.rep).class(), r.rep);
        assert_eq!(r.u, orbit_size(&r.rep));
    }
}

#[test]
fn verifiers() {
    let e = Exec::Parallel;
    assert!(verify_t31(e, 4).unwrap().success());
    assert!(verify_t35(e, 8).unwrap().success());
    assert!(verify_degreebound(e, 6, 18).unwrap().success());
    assert!(verify_acm_ton(e, 8).unwrap().success());
    assert!(verify_not_ulrich(e, 8).unwrap().success());
    assert!(verify_ext(e, 3).unwrap().success());
    let p = verify_prop3l(e, &[2, 3]).unwrap();
    assert!(p.success());
    // The double line has ell 3, so it is excluded from the 1-away side.
    assert!(!is_l_away(&cls("2e1"), 1).unwrap());
    // Degree-bound witnesses.
    assert_eq!((ell(&cls("2l")).unwrap(), degree(&cls("2l"))), (2, 6));
    let d = cls("2l + e1 + e2 + e3 + e4 + e5 + e6");
    assert!(degree(&d) <= 3 * ell(&d).unwrap() as i64);
}

#[test]
fn families_and_catalog() {
    let f = ext_family(1, 0).unwrap();
    assert_eq!((f.class, f.expected_ell, f.window), (cls("2l"), 2, (-3, -2)));
    let f = ext_family(2, 0).unwrap();
    assert_eq!((f.class, f.expected_ell, f.window), (cls("2l + e1"), 4, (-4, -1)));
    let f = ext_family(6, 1).unwrap();
    assert_eq!((f.class, f.expected_ell, f.window), (cls("2l + 2e1 + 2e2 + 2e3 + 2e4 + 2e5 + e6"), 14, (-13, 0)));
    let cat = low_degree_catalog().unwrap();
    let r = cat.iter().find(|r| r.entry.description == "line and double skew line").unwrap();
    assert_eq!((r.ell, r.s_set.clone()), (3, vec![-2, -1, 0]));
}

#[test]
fn quadric() {
    assert_eq!(q_coh(BidegreeClass::new(1, 1)), t(4, 0, 0));
    assert_eq!(q_coh(BidegreeClass::new(-2, 0)), t(0, 1, 0));
    for l in 1..=8i64 {
        let nonzero: Vec<i64> =
            (-20..=20).filter(|&s| q_coh(BidegreeClass::new(l + 1 + s, s)).h1 != 0).collect();
        assert_eq!(nonzero, (-l - 1..=-2).collect::<Vec<_>>());
    }
    assert_eq!(q_ell(BidegreeClass::new(2, 0)), 1);
    assert_eq!(q_ell(BidegreeClass::new(3, 0)), 2);
    assert_eq!(q_ell(BidegreeClass::new(1, 1)), 0);
    assert_eq!(p3_coh(0), [1, 0, 0, 0]);
    assert_eq!(p3_coh(2), [10, 0, 0, 0]);
    assert_eq!(p3_coh(-4), [0, 0, 0, 1]);
    assert!(regularity_certificate(1, 3).unwrap());
    assert!(!regularity_certificate(3, 3).unwrap());
    assert!(regularity_certificate(2, 5).unwrap());
    assert!(t41_check(2, 3).unwrap());
    assert!(!t41_check(4, 4).unwrap());
    assert!(t41_check(1, 12).unwrap());
}
