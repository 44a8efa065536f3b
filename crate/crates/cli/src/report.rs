//! The all-in-one verification report: exact sweeps, generating functions,
//! certified numerics, sequence cross-checks, and the errata they certify.

use std::path::PathBuf;

use serde::Serialize;
use stfib::claims::{ClaimReport, Expectation, Verdict};
use stfib::numerics::{standard_battery, NumVerdict, NumericReport};
use stfib::params::{standard_families, Params};
use stfib::polytopic::{default_limits, run_catalog};
use stfib::series::run_gf_checks;

use crate::oeis::{run_checks, OeisReport};

/// A statement the run certifies as wrong (or as unconfirmable) in its
/// printed form, with the corrected reading when there is one.
#[derive(Debug, Clone, Serialize)]
pub struct Erratum {
    pub claim: String,
    pub params: String,
    pub kind: String,
    pub note: String,
}

#[derive(Serialize)]
pub struct FullReport {
    pub schema: u32,
    pub prec_bits: usize,
    pub gf_order: usize,
    pub exact: Vec<ClaimReport>,
    pub series: Vec<ClaimReport>,
    pub numeric: Vec<NumericReport>,
    pub oeis: Vec<OeisReport>,
    pub errata: Vec<Erratum>,
    pub all_as_expected: bool,
}

pub fn build(prec: usize, gf_order: usize, fixtures: Option<&PathBuf>) -> FullReport {
    let mut exact = Vec::new();
    for params in [Params::Symbolic, Params::QSymbolic] {
        exact.extend(run_catalog(&params, &default_limits(&params)));
    }
    for fam in standard_families() {
        exact.extend(run_catalog(&fam, &default_limits(&fam)));
    }

    let mut series = Vec::new();
    series.extend(run_gf_checks(&Params::Symbolic, gf_order));
    series.extend(run_gf_checks(&Params::QSymbolic, gf_order));
    let rational_order = gf_order.max(40);
    for name in ["classic", "fibonacci"] {
        let fam = stfib::params::spec_lookup(name, &[]).expect("registry family");
        series.extend(run_gf_checks(&fam, rational_order));
    }

    let numeric = standard_battery(prec);
    let oeis = run_checks(fixtures, 40);

    let errata = collect_errata(&exact, &numeric);
    let all_as_expected = exact.iter().all(|r| r.as_expected)
        && series.iter().all(|r| r.as_expected)
        && numeric.iter().all(|r| r.as_expected)
        && oeis.iter().all(|r| r.ok);

    FullReport {
        schema: 1,
        prec_bits: prec,
        gf_order,
        exact,
        series,
        numeric,
        oeis,
        errata,
        all_as_expected,
    }
}

fn collect_errata(exact: &[ClaimReport], numeric: &[NumericReport]) -> Vec<Erratum> {
    let mut out = Vec::new();
    for r in exact {
        if r.expected == Expectation::Discrepant && r.verdict == Verdict::Discrepant {
            // one entry per claim, not per parameter choice
            if out.iter().any(|e: &Erratum| e.claim == r.claim) {
                continue;
            }
            let note = r
                .notes
                .first()
                .cloned()
                .unwrap_or_else(|| "fails as printed".to_string());
            out.push(Erratum {
                claim: r.claim.clone(),
                params: "all checked parameters".to_string(),
                kind: "printed-identity".to_string(),
                note,
            });
        }
    }
    for r in numeric {
        for c in &r.comparisons {
            match c.expected {
                NumVerdict::Discrepant if c.verdict == NumVerdict::Discrepant => {
                    let note = r
                        .notes
                        .iter()
                        .find(|n| !n.starts_with("printed decimal coincides"))
                        .cloned()
                        .unwrap_or_else(|| format!("{} fails as printed", c.label));
                    out.push(Erratum {
                        claim: format!("{} [{}]", r.claim, c.label),
                        params: r.params.clone(),
                        kind: "printed-value".to_string(),
                        note,
                    });
                }
                NumVerdict::Inconclusive if c.verdict == NumVerdict::Inconclusive => {
                    let note = r
                        .notes
                        .last()
                        .cloned()
                        .unwrap_or_else(|| "no finite certificate on this route".to_string());
                    out.push(Erratum {
                        claim: format!("{} [{}]", r.claim, c.label),
                        params: r.params.clone(),
                        kind: "not-certifiable".to_string(),
                        note,
                    });
                }
                _ => {}
            }
        }
    }
    out
}

pub fn render_text(r: &FullReport) -> String {
    let mut s = String::new();
    let push_line = |s: &mut String, line: String| {
        s.push_str(&line);
        s.push('\n');
    };

    push_line(&mut s, format!("exact identity sweeps ({} runs)", r.exact.len()));
    for c in &r.exact {
        push_line(&mut s, format!("  {}", c.summary_line()));
    }
    push_line(&mut s, String::new());

    push_line(
        &mut s,
        format!(
            "generating functions to order {} ({} runs)",
            r.gf_order,
            r.series.len()
        ),
    );
    for c in &r.series {
        push_line(&mut s, format!("  {}", c.summary_line()));
    }
    push_line(&mut s, String::new());

    push_line(
        &mut s,
        format!("certified numerics at {} bits ({} runs)", r.prec_bits, r.numeric.len()),
    );
    for c in &r.numeric {
        push_line(&mut s, format!("  {}", c.summary_line()));
        if let Some(lhs) = &c.lhs {
            push_line(
                &mut s,
                format!("    value {} (tail <= {})", lhs.value_sig, lhs.tail_bound),
            );
        }
    }
    push_line(&mut s, String::new());

    push_line(&mut s, format!("sequence cross-checks ({} ids)", r.oeis.len()));
    for c in &r.oeis {
        push_line(&mut s, format!("  {}", c.summary_line()));
        for m in c.mismatches.iter().take(3) {
            push_line(&mut s, format!("    {m}"));
        }
    }
    push_line(&mut s, String::new());

    push_line(&mut s, format!("errata ({} confirmed)", r.errata.len()));
    for e in &r.errata {
        push_line(&mut s, format!("  [{}] {} ({})", e.kind, e.claim, e.params));
        push_line(&mut s, format!("      {}", e.note));
    }
    push_line(&mut s, String::new());

    push_line(
        &mut s,
        if r.all_as_expected {
            "RESULT: every check landed on its expected verdict".to_string()
        } else {
            "RESULT: UNEXPECTED verdicts present (see lines marked UNEXPECTED/MISMATCH)"
                .to_string()
        },
    );
    s
}
