//! Full catalog sweeps in every mode, checking each claim lands on the
//! verdict the catalog expects (including the deliberately-kept printed
//! variant that must come out Discrepant).

use stfib::params::{standard_families, Params};
use stfib::polytopic::{default_limits, find_claim, run_catalog, run_claim, SweepLimits};
use stfib::claims::{Expectation, Verdict};
use stfib::fib::FibCache;
use stfib::ring::Ring;

#[test]
fn symbolic_catalog_is_healthy() {
    let params = Params::Symbolic;
    let reports = run_catalog(&params, &default_limits(&params));
    // 22 claims minus the q-display statements and the four family-specific
    // corollaries
    assert_eq!(reports.len(), 13, "unexpected symbolic catalog size");
    for r in &reports {
        println!("{}", r.summary_line());
        assert!(r.as_expected, "{}", r.summary_line());
    }
}

#[test]
fn q_symbolic_catalog_is_healthy() {
    let params = Params::QSymbolic;
    let reports = run_catalog(&params, &default_limits(&params));
    // the q-only statements must actually be exercised in this mode
    for name in [
        "q-polytopic-reduction",
        "q-triangular-pair",
        "schlosser",
        "warnaar-square-diff",
        "warnaar",
    ] {
        assert!(
            reports.iter().any(|r| r.claim == name),
            "missing q-mode claim {name}"
        );
    }
    for r in &reports {
        println!("{}", r.summary_line());
        assert!(r.as_expected, "{}", r.summary_line());
    }
}

#[test]
fn rational_catalog_is_healthy_on_standard_families() {
    for fam in standard_families() {
        let limits = default_limits(&fam);
        for r in run_catalog(&fam, &limits) {
            assert!(r.as_expected, "{}", r.summary_line());
        }
    }
}

#[test]
fn printed_recurrence_variant_is_certified_discrepant() {
    let spec = find_claim("polytopic-recurrence-2-printed").expect("claim exists");
    assert_eq!(spec.expected, Expectation::Discrepant);
    let params = Params::Symbolic;
    let rep = run_claim(spec, &params, &default_limits(&params));
    assert_eq!(rep.verdict, Verdict::Discrepant);
    assert!(rep.as_expected);
    assert!(rep.failure_count > 0);
    let f = &rep.failures[0];
    assert!(!f.difference.is_empty() && f.difference != "0");
}

#[test]
fn corrected_and_printed_recurrences_differ_only_in_the_index() {
    // the corrected form passes on a sweep where the printed one fails
    let limits = SweepLimits { max_n: 8, max_d: 3 };
    let params = Params::Symbolic;
    let good = run_claim(find_claim("polytopic-recurrence-2").unwrap(), &params, &limits);
    let bad = run_claim(
        find_claim("polytopic-recurrence-2-printed").unwrap(),
        &params,
        &limits,
    );
    assert_eq!(good.verdict, Verdict::Verified);
    assert_eq!(bad.verdict, Verdict::Discrepant);
}

/// {n+1}^2 - {n}{n+2} = (-t)^n: the cancellation that makes the alternating
/// reciprocal sum telescope, checked as an exact polynomial identity.
#[test]
fn telescoping_square_identity_symbolic() {
    let fc = FibCache::new(Params::st_context_sym());
    let minus_t = fc.ctx().t.neg();
    for n in 1..=30usize {
        let lhs = fc.fib(n + 1).mul(&fc.fib(n + 1)).sub(&fc.fib(n).mul(&fc.fib(n + 2)));
        let rhs = minus_t.pow(n as u32);
        assert_eq!(lhs, rhs, "telescoping identity fails at n={n}");
    }
}

#[test]
fn family_restricted_claims_only_run_on_their_family() {
    let pell = stfib::params::spec_lookup("pell", &[]).unwrap();
    let limits = default_limits(&pell);
    let reports = run_catalog(&pell, &limits);
    assert!(reports.iter().any(|r| r.claim == "cube-sum-pell"));
    assert!(!reports.iter().any(|r| r.claim == "cube-sum-fibonacci"));
}
