//! Truncated power series over the quadratic extension, and the
//! generating-function checks built on them.
//!
//! A `Series` holds coefficients of x^0 .. x^order as `Quad` elements.
//! Products truncate at the shorter order; inversion needs an invertible
//! constant term. The degree-lowering derivative used here acts on
//! monomials by D(x^m) = {m} x^(m-1), so it reduces to the ordinary
//! derivative at (s,t) = (2,-1).
//!
//! The checks all take the same shape: expand both sides of a claimed
//! generating-function identity to a fixed order and compare coefficients
//! exactly. The right-hand sides are products of linear factors
//! (1 - phi^i phi'^j x) and their inverses, which live in the extension
//! even though every compared coefficient is a base-ring element.

use crate::claims::{ClaimReport, Expectation, Failure, Verdict, MAX_RECORDED_FAILURES};
use crate::error::CoreError;
use crate::fib::FibCache;
use crate::params::Params;
use crate::polytopic::{geom, simplicial};
use crate::quad::{Quad, StContext};
use crate::ring::{Ring, VarNames, VARS_Q, VARS_ST};

#[derive(Debug, Clone, PartialEq)]
pub struct Series<R: Ring> {
    coeffs: Vec<Quad<R>>,
}

impl<R: Ring> Series<R> {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Quad::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Quad::one();
        s
    }

    /// The series x (requires order >= 1).
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[1] = Quad::one();
        s
    }

    /// 1 - c x.
    pub fn linear(c: &Quad<R>, order: usize) -> Self {
        let mut s = Self::one(order);
        s.coeffs[1] = c.neg();
        s
    }

    pub fn from_coeffs(coeffs: Vec<Quad<R>>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs a constant term");
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &Quad<R> {
        &self.coeffs[i]
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let ord = self.order().min(rhs.order());
        Series {
            coeffs: (0..=ord)
                .map(|i| self.coeffs[i].add(&rhs.coeffs[i]))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let ord = self.order().min(rhs.order());
        Series {
            coeffs: (0..=ord)
                .map(|i| self.coeffs[i].sub(&rhs.coeffs[i]))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Quad<R>, ctx: &StContext<R>) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.mul(c, ctx)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self, ctx: &StContext<R>) -> Self {
        let ord = self.order().min(rhs.order());
        let mut coeffs = vec![Quad::zero(); ord + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(ord + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(ord + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b, ctx));
            }
        }
        Series { coeffs }
    }

    /// Multiplicative inverse to the same order. The constant term must be
    /// a unit; every use here has constant term 1.
    pub fn inv(&self, ctx: &StContext<R>) -> Result<Self, CoreError> {
        let c0 = self.coeffs[0]
            .inv(ctx)
            .ok_or(CoreError::NonUnitConstantTerm)?;
        let ord = self.order();
        let mut out = vec![Quad::zero(); ord + 1];
        out[0] = c0.clone();
        for n in 1..=ord {
            let mut acc = Quad::zero();
            for j in 1..=n {
                acc = acc.add(&self.coeffs[j].mul(&out[n - j], ctx));
            }
            out[n] = acc.mul(&c0, ctx).neg();
        }
        Ok(Series { coeffs: out })
    }

    /// Degree-lowering derivative: coefficient of x^m maps to {m} times it
    /// at x^(m-1). Drops the order by one.
    pub fn pderiv(&self, fc: &FibCache<R>) -> Self {
        assert!(self.order() >= 1, "derivative needs order >= 1");
        let coeffs = (1..=self.order())
            .map(|m| self.coeffs[m].scale(&fc.fib(m)))
            .collect();
        Series { coeffs }
    }
}

/// prod_{k=0}^{count-1} (1 - phi^(top-k) phi'^k x), expanded to `order`.
pub fn pochhammer_series<R: Ring>(
    fc: &FibCache<R>,
    top: usize,
    count: usize,
    order: usize,
) -> Series<R> {
    let ctx = fc.ctx();
    let mut acc = Series::one(order);
    for k in 0..count {
        let root = fc.phi_pow(top - k).mul(&fc.conj_pow(k), ctx);
        acc = acc.mul(&Series::linear(&root, order), ctx);
    }
    acc
}

// ---------------------------------------------------------------------------
// generating-function checks
// ---------------------------------------------------------------------------

struct GfRun<'a> {
    vars: &'a VarNames,
    report: ClaimReport,
}

impl<'a> GfRun<'a> {
    fn new(vars: &'a VarNames, params: &Params, claim: &str, source: &str) -> Self {
        let mode = match params {
            Params::Symbolic => "symbolic",
            Params::QSymbolic => "q-symbolic",
            Params::Rational { .. } => "rational",
        };
        GfRun {
            vars,
            report: ClaimReport {
                claim: claim.to_string(),
                source: source.to_string(),
                mode: mode.to_string(),
                params: params.describe(),
                instances: 0,
                failure_count: 0,
                failures: Vec::new(),
                verdict: Verdict::Verified,
                expected: Expectation::Pass,
                as_expected: false,
                error: None,
                notes: Vec::new(),
            },
        }
    }

    fn compare<R: Ring>(&mut self, label: &str, lhs: &Series<R>, rhs: &Series<R>) {
        let ord = lhs.order().min(rhs.order());
        for i in 0..=ord {
            self.report.instances += 1;
            let l = lhs.coeff(i);
            let r = rhs.coeff(i);
            if l != r {
                self.report.failure_count += 1;
                if self.report.failures.len() < MAX_RECORDED_FAILURES {
                    self.report.failures.push(Failure {
                        instance: format!("{label}, coefficient of x^{i}"),
                        lhs: l.render(self.vars),
                        rhs: r.render(self.vars),
                        difference: l.sub(r).render(self.vars),
                    });
                }
            }
        }
    }

    fn fail(mut self, err: CoreError, at: &str) -> ClaimReport {
        self.report.verdict = Verdict::Error;
        self.report.error = Some(format!("{err} at {at}"));
        self.report.as_expected = false;
        self.report
    }

    fn finish(mut self) -> ClaimReport {
        self.report.verdict = if self.report.failure_count == 0 {
            Verdict::Verified
        } else {
            Verdict::Discrepant
        };
        self.report.as_expected = self.report.verdict == Verdict::Verified;
        self.report
    }
}

fn fib_cache_for(params: &Params) -> (FibCache<crate::poly::Poly2>, &'static VarNames) {
    match params {
        Params::QSymbolic => (FibCache::new(Params::st_context_q()), &VARS_Q),
        _ => (FibCache::new(Params::st_context_sym()), &VARS_ST),
    }
}

/// Repeated degree-lowering derivatives of the geometric series 1/(1-x)
/// against the claimed product form
/// D^n(1/(1-x)) = {n}! * prod_{k=0}^{n} (1 - phi^(n-k) phi'^k x)^(-1).
pub fn check_nderiv_geo(params: &Params, max_deriv: usize, order: usize) -> ClaimReport {
    fn run<R: Ring>(
        fc: &FibCache<R>,
        vars: &VarNames,
        params: &Params,
        max_deriv: usize,
        order: usize,
    ) -> ClaimReport {
        let mut run = GfRun::new(
            vars,
            params,
            "derivative-geometric",
            "derivative-of-geometric-series",
        );
        let ctx = fc.ctx();
        for n in 0..=max_deriv {
            // expand far enough that n derivatives still leave `order`
            let mut lhs = Series::<R>::from_coeffs(vec![Quad::one(); order + n + 1]);
            for _ in 0..n {
                lhs = lhs.pderiv(fc);
            }
            let poch = pochhammer_series(fc, n, n + 1, order);
            let rhs = match poch.inv(ctx) {
                Ok(p) => p.scale(&Quad::from_base(fc.fibotorial(n)), ctx),
                Err(e) => return run.fail(e, &format!("n={n}")),
            };
            run.compare(&format!("n={n}"), &lhs, &rhs);
        }
        run.finish()
    }
    match params {
        Params::Rational { .. } => {
            let fc = FibCache::new(params.st_context_rat().expect("rational params"));
            run(&fc, &VARS_ST, params, max_deriv, order)
        }
        _ => {
            let (fc, vars) = fib_cache_for(params);
            run(&fc, vars, params, max_deriv, order)
        }
    }
}

/// Generating function of the d-polytopic column:
/// sum_n simplicial(n,d) x^n = x * prod_{k=0}^{d} (1 - phi^(d-k) phi'^k x)^(-1).
pub fn check_gf_polytopic(params: &Params, max_d: usize, order: usize) -> ClaimReport {
    fn run<R: Ring>(
        fc: &FibCache<R>,
        vars: &VarNames,
        params: &Params,
        max_d: usize,
        order: usize,
    ) -> ClaimReport {
        let mut run = GfRun::new(vars, params, "gf-polytopic", "polytopic-generating-function");
        let ctx = fc.ctx();
        for d in 1..=max_d {
            let mut coeffs = Vec::with_capacity(order + 1);
            for n in 0..=order {
                match simplicial(fc, n as i64, d as i64) {
                    Ok(v) => coeffs.push(Quad::from_base(v)),
                    Err(e) => return run.fail(e, &format!("d={d}, n={n}")),
                }
            }
            let lhs = Series::from_coeffs(coeffs);
            let poch = pochhammer_series(fc, d, d + 1, order);
            let rhs = match poch.inv(ctx) {
                Ok(p) => Series::x(order).mul(&p, ctx),
                Err(e) => return run.fail(e, &format!("d={d}")),
            };
            run.compare(&format!("d={d}"), &lhs, &rhs);
        }
        run.finish()
    }
    match params {
        Params::Rational { .. } => {
            let fc = FibCache::new(params.st_context_rat().expect("rational params"));
            run(&fc, &VARS_ST, params, max_d, order)
        }
        _ => {
            let (fc, vars) = fib_cache_for(params);
            run(&fc, vars, params, max_d, order)
        }
    }
}

/// Generating function of squared triangular values, rational form:
///
/// sum_n ({n}{n+1}/{2})^2 x^n =
///   [x + ({4}phi - phi^4) x^2 - {3} phi^3 phi'^3 x^3
///      + ({3} phi^7 phi'^3 - {4} phi^6 phi'^3) x^4]
///   / [(1 - t^2 x) prod_{k=0}^{4} (1 - phi^(4-k) phi'^k x)].
pub fn check_gf_tri_squared(params: &Params, order: usize) -> ClaimReport {
    fn run<R: Ring>(
        fc: &FibCache<R>,
        vars: &VarNames,
        params: &Params,
        order: usize,
    ) -> ClaimReport {
        let mut run = GfRun::new(
            vars,
            params,
            "gf-triangular-squared",
            "squared-triangular-generating-function",
        );
        let ctx = fc.ctx().clone();
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            match simplicial(fc, n as i64, 2) {
                Ok(v) => coeffs.push(Quad::from_base(v.mul(&v))),
                Err(e) => return run.fail(e, &format!("n={n}")),
            }
        }
        let lhs = Series::from_coeffs(coeffs);

        let mut num = Series::zero(order);
        let c = |i: usize| -> Quad<R> {
            match i {
                1 => Quad::one(),
                2 => fc.phi_pow(1).scale(&fc.fib(4)).sub(&fc.phi_pow(4)),
                3 => fc
                    .phi_pow(3)
                    .mul(&fc.conj_pow(3), &ctx)
                    .scale(&fc.fib(3))
                    .neg(),
                4 => fc
                    .phi_pow(7)
                    .mul(&fc.conj_pow(3), &ctx)
                    .scale(&fc.fib(3))
                    .sub(&fc.phi_pow(6).mul(&fc.conj_pow(3), &ctx).scale(&fc.fib(4))),
                _ => unreachable!(),
            }
        };
        for i in 1..=4.min(order) {
            let mut mono = Series::zero(order);
            mono.coeffs[i] = c(i);
            num = num.add(&mono);
        }
        let t_sq = ctx.t.mul(&ctx.t);
        let mut den = Series::linear(&Quad::from_base(t_sq), order);
        den = den.mul(&pochhammer_series(fc, 4, 5, order), &ctx);
        let rhs = match den.inv(&ctx) {
            Ok(p) => num.mul(&p, &ctx),
            Err(e) => return run.fail(e, "denominator"),
        };
        run.compare("tri-squared", &lhs, &rhs);
        run.finish()
    }
    match params {
        Params::Rational { .. } => {
            let fc = FibCache::new(params.st_context_rat().expect("rational params"));
            run(&fc, &VARS_ST, params, order)
        }
        _ => {
            let (fc, vars) = fib_cache_for(params);
            run(&fc, vars, params, order)
        }
    }
}

/// The q-display of the squared-triangular generating function. Applying
/// the evaluation phi -> 1 (hence phi' -> q) to the rational form gives a
/// statement entirely in the base ring:
///
/// sum_n [T_n]^2 x^n = [x + ([4]-1) x^2 - [3] q^3 x^3 + ([3]-[4]) q^3 x^4]
///                     / [(1 - q^2 x)(1 - q^4 x) prod_{k=0}^{3} (1 - q^k x)]
///
/// with [T_n] = [n][n+1]/[2] and [m] the geometric bracket.
pub fn check_gf_tri_squared_q(order: usize) -> ClaimReport {
    let params = Params::QSymbolic;
    let fc: FibCache<crate::poly::Poly2> = FibCache::new(Params::st_context_q());
    let ctx = fc.ctx().clone();
    let q = ctx.q_elem();
    let mut run = GfRun::new(
        &VARS_Q,
        &params,
        "gf-triangular-squared-q",
        "squared-triangular-generating-function-q-display",
    );

    let two_br = geom(&q, 2); // 1 + q
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let prod = geom(&q, n as u32).mul(&geom(&q, n as u32 + 1));
        let tn = match prod.exact_div(&two_br) {
            Some(v) => v,
            None => {
                return run.fail(
                    CoreError::NotDivisible(format!(
                        "[{n}][{}] is not divisible by [2]",
                        n + 1
                    )),
                    &format!("n={n}"),
                )
            }
        };
        coeffs.push(Quad::from_base(tn.mul(&tn)));
    }
    let lhs = Series::from_coeffs(coeffs);

    let qp = |e: u32| Quad::from_base(q.pow(e));
    let mut num = Series::zero(order);
    let coefs: [(usize, Quad<crate::poly::Poly2>); 4] = [
        (1, Quad::one()),
        (2, Quad::from_base(geom(&q, 4).sub(&crate::poly::Poly2::one()))),
        (3, Quad::from_base(geom(&q, 3).mul(&q.pow(3))).neg()),
        (
            4,
            Quad::from_base(geom(&q, 3).sub(&geom(&q, 4)).mul(&q.pow(3))),
        ),
    ];
    for (i, cval) in coefs {
        if i <= order {
            let mut mono = Series::zero(order);
            mono.coeffs[i] = cval;
            num = num.add(&mono);
        }
    }
    let mut den = Series::linear(&qp(2), order);
    den = den.mul(&Series::linear(&qp(4), order), &ctx);
    for k in 0..4u32 {
        den = den.mul(&Series::linear(&qp(k), order), &ctx);
    }
    let rhs = match den.inv(&ctx) {
        Ok(p) => num.mul(&p, &ctx),
        Err(e) => return run.fail(e, "denominator"),
    };
    run.compare("tri-squared-q", &lhs, &rhs);
    run.finish()
}

/// All generating-function reports for one parameter choice, at the given
/// expansion order.
pub fn run_gf_checks(params: &Params, order: usize) -> Vec<ClaimReport> {
    let max_deriv = 4;
    let max_d = 4;
    let mut out = vec![
        check_nderiv_geo(params, max_deriv, order),
        check_gf_polytopic(params, max_d, order),
        check_gf_tri_squared(params, order),
    ];
    if matches!(params, Params::QSymbolic) {
        out.push(check_gf_tri_squared_q(order));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rat;

    fn sym_cache() -> FibCache<crate::poly::Poly2> {
        FibCache::new(Params::st_context_sym())
    }

    #[test]
    fn geometric_inverse_round_trip() {
        let fc = sym_cache();
        let ctx = fc.ctx();
        let g = Series::from_coeffs(vec![Quad::one(); 9]);
        let inv = g.inv(ctx).unwrap();
        // 1/(1-x) inverts to 1 - x
        let expect = Series::linear(&Quad::one(), 8);
        assert_eq!(inv, expect);
        assert_eq!(g.mul(&inv, ctx), Series::one(8));
    }

    #[test]
    fn pochhammer_degree_two_expansion() {
        // (1 - phi x)(1 - phi' x) = 1 - s x - t x^2
        let fc = sym_cache();
        let ctx = fc.ctx();
        let p = pochhammer_series(&fc, 1, 2, 4);
        assert_eq!(p.coeff(0), &Quad::one());
        assert_eq!(p.coeff(1), &Quad::from_base(ctx.s.neg()));
        assert_eq!(p.coeff(2), &Quad::from_base(ctx.t.neg()));
        assert!(p.coeff(3).is_zero());
    }

    #[test]
    fn derivative_lowers_monomials() {
        let fc = sym_cache();
        // D(x^3) = {3} x^2
        let mut s = Series::zero(3);
        s.coeffs[3] = Quad::one();
        let d = s.pderiv(&fc);
        assert!(d.coeff(0).is_zero() && d.coeff(1).is_zero());
        assert_eq!(d.coeff(2), &Quad::from_base(fc.fib(3)));
    }

    #[test]
    fn classical_gf_checks_pass() {
        let params = Params::rational(Rat::from_integer(2.into()), Rat::from_integer((-1).into()))
            .unwrap();
        for rep in run_gf_checks(&params, 12) {
            assert!(rep.as_expected, "{}", rep.summary_line());
        }
    }

    #[test]
    fn symbolic_gf_checks_pass_to_low_order() {
        for rep in run_gf_checks(&Params::Symbolic, 6) {
            assert!(rep.as_expected, "{}", rep.summary_line());
        }
    }

    #[test]
    fn q_display_matches_to_low_order() {
        let rep = check_gf_tri_squared_q(8);
        assert!(rep.as_expected, "{}", rep.summary_line());
    }
}
