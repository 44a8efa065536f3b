//! The certified-summation battery: every reciprocal-sum claim evaluated
//! against its closed form (or its printed decimal), each comparison landing
//! on the expected verdict.

use stfib::numerics::{
    alt_tri_report, even_reciprocal_report, standard_battery, tri_reciprocal_report,
    zeta_report, zeta_st, NumVerdict,
};
use stfib::params::spec_lookup;
use stfib::real::RealCtx;
use stfib::ring::{Int, Rat};

fn rint(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

#[test]
fn battery_is_as_expected_at_128_bits() {
    let reports = standard_battery(128);
    assert!(reports.len() >= 20);
    for rep in &reports {
        println!("{}", rep.summary_line());
        for note in &rep.notes {
            println!("    note: {note}");
        }
        assert!(rep.as_expected, "{}", rep.summary_line());
    }
}

#[test]
fn fibonacci_reciprocal_sum_has_the_known_leading_digits() {
    // crude independent bracket: 7 terms give 3.3598, the tail is < 1e-4
    let fam = spec_lookup("fibonacci", &[]).unwrap();
    let out = zeta_st(&fam, &rint(1), 128).unwrap();
    let rc = RealCtx::new(160);
    assert!(rc.lt(&rc.parse("3.35988"), &out.value));
    assert!(rc.lt(&out.value, &rc.parse("3.35989")));
    assert!(out.converged);
}

#[test]
fn discrepant_zeta_decimals_are_certified_not_rounding() {
    // difference far above 1e-3, tail bound far below: the printed decimal
    // cannot be a truncation artifact of our summation
    for name in ["pell", "jacobsthal", "mersenne"] {
        let fam = spec_lookup(name, &[]).unwrap();
        let rep = zeta_report(&fam, &rint(1), 128);
        let printed = rep
            .comparisons
            .iter()
            .find(|c| c.label == "printed-value")
            .expect("printed comparison");
        assert_eq!(printed.verdict, NumVerdict::Discrepant, "{name}");
        assert!(
            rep.partial_sum_coincidence.is_some(),
            "{name}: printed decimal should match some small partial sum"
        );
        let lhs = rep.lhs.expect("sum converged");
        assert!(lhs.converged);
    }
}

#[test]
fn pell_printed_decimal_is_the_five_term_partial_sum() {
    let fam = spec_lookup("pell", &[]).unwrap();
    let rep = zeta_report(&fam, &rint(1), 128);
    assert_eq!(rep.partial_sum_coincidence, Some(5));
}

#[test]
fn triangular_reciprocal_closed_form_budget() {
    // jacobsthal and mersenne admit a certificate; fibonacci and pell sit on
    // the convergence boundary of the log series
    for (name, expect) in [
        ("jacobsthal", NumVerdict::Verified),
        ("mersenne", NumVerdict::Verified),
        ("fibonacci", NumVerdict::Inconclusive),
        ("pell", NumVerdict::Inconclusive),
    ] {
        let fam = spec_lookup(name, &[]).unwrap();
        let rep = tri_reciprocal_report(&fam, 128);
        let cmp = &rep.comparisons[0];
        assert_eq!(cmp.verdict, expect, "{name}: {}", rep.summary_line());
        assert!(rep.as_expected, "{name}");
    }
}

#[test]
fn alternating_triangular_printed_limit_is_the_wrong_root() {
    for name in ["fibonacci", "pell", "jacobsthal", "mersenne"] {
        let fam = spec_lookup(name, &[]).unwrap();
        let rep = alt_tri_report(&fam, 128);
        let printed = rep
            .comparisons
            .iter()
            .find(|c| c.label == "printed-limit-phi")
            .unwrap();
        let corrected = rep
            .comparisons
            .iter()
            .find(|c| c.label == "corrected-limit-phi-conjugate")
            .unwrap();
        assert_eq!(printed.verdict, NumVerdict::Discrepant, "{name}");
        assert_eq!(corrected.verdict, NumVerdict::Verified, "{name}");
    }
}

#[test]
fn classic_even_reciprocal_is_inconclusive() {
    // (s,t) = (2,-1) puts the Lambert arguments on the unit circle
    let fam = spec_lookup("classic", &[]).unwrap();
    let rep = even_reciprocal_report(&fam, 128);
    assert_eq!(rep.comparisons[0].verdict, NumVerdict::Inconclusive);
}

#[test]
fn verdicts_stable_between_128_and_256_bits() {
    let low = standard_battery(128);
    let high = standard_battery(256);
    assert_eq!(low.len(), high.len());
    for (a, b) in low.iter().zip(high.iter()) {
        assert_eq!(a.claim, b.claim);
        assert_eq!(a.params, b.params);
        let va: Vec<_> = a.comparisons.iter().map(|c| c.verdict).collect();
        let vb: Vec<_> = b.comparisons.iter().map(|c| c.verdict).collect();
        assert_eq!(va, vb, "verdict flip between precisions: {}", a.claim);
    }
}
