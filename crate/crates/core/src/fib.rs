//! The sequence engine: `{n}`, the companion `<n>`, powers of phi,
//! fibotorials `{n}!` and fibonomials `{n | k}`, all memoized per (s, t)
//! context.
//!
//! Fibonomials are computed twice on independent routes and must agree:
//!
//! * exact division of fibotorials, `{n}! / ({k}! {n-k}!)`, which must leave
//!   no remainder;
//! * the phi-weighted Pascal rule, run in the quadratic extension, whose
//!   result must land in the base ring (phi-component identically zero).
//!
//! Any disagreement surfaces as `CoreError::InternalMismatch`; there is no
//! fallback, because a mismatch means a bug, not bad data.

use std::cell::RefCell;

use crate::error::CoreError;
use crate::quad::{Quad, StContext};
use crate::ring::Ring;

pub struct FibCache<R: Ring> {
    ctx: StContext<R>,
    fib: RefCell<Vec<R>>,
    lucas: RefCell<Vec<R>>,
    fact: RefCell<Vec<R>>,
    phi_pows: RefCell<Vec<Quad<R>>>,
    conj_pows: RefCell<Vec<Quad<R>>>,
    /// row n of the fibonomial table, entries k = 0..=n, base-ring values
    rows: RefCell<Vec<Vec<R>>>,
}

impl<R: Ring> FibCache<R> {
    pub fn new(ctx: StContext<R>) -> Self {
        FibCache {
            ctx,
            fib: RefCell::new(vec![R::zero(), R::one()]),
            lucas: RefCell::new(vec![R::from_int(2)]),
            fact: RefCell::new(vec![R::one(), R::one()]),
            phi_pows: RefCell::new(vec![Quad::one(), Quad::phi()]),
            conj_pows: RefCell::new(Vec::new()),
            rows: RefCell::new(vec![vec![R::one()]]),
        }
    }

    pub fn ctx(&self) -> &StContext<R> {
        &self.ctx
    }

    /// `{n}`: {0}=0, {1}=1, {n+2} = s*{n+1} + t*{n}.
    pub fn fib(&self, n: usize) -> R {
        {
            let v = self.fib.borrow();
            if n < v.len() {
                return v[n].clone();
            }
        }
        let mut v = self.fib.borrow_mut();
        while v.len() <= n {
            let k = v.len();
            let next = self.ctx.s.mul(&v[k - 1]).add(&self.ctx.t.mul(&v[k - 2]));
            v.push(next);
        }
        v[n].clone()
    }

    /// `<n>`: <0>=2, <1>=s, same recurrence. Also equals trace(phi^n).
    pub fn lucas(&self, n: usize) -> R {
        {
            let v = self.lucas.borrow();
            if n < v.len() {
                return v[n].clone();
            }
        }
        let mut v = self.lucas.borrow_mut();
        if v.len() == 1 {
            v.push(self.ctx.s.clone());
        }
        while v.len() <= n {
            let k = v.len();
            let next = self.ctx.s.mul(&v[k - 1]).add(&self.ctx.t.mul(&v[k - 2]));
            v.push(next);
        }
        v[n].clone()
    }

    /// phi^n in reduced form. Satisfies phi^n = t*{n-1} + {n}*phi for n >= 1.
    pub fn phi_pow(&self, n: usize) -> Quad<R> {
        {
            let v = self.phi_pows.borrow();
            if n < v.len() {
                return v[n].clone();
            }
        }
        let mut v = self.phi_pows.borrow_mut();
        while v.len() <= n {
            let last = v.last().expect("seeded").clone();
            v.push(last.mul(&Quad::phi(), &self.ctx));
        }
        v[n].clone()
    }

    /// (phi')^n = conj(phi^n).
    pub fn conj_pow(&self, n: usize) -> Quad<R> {
        {
            let v = self.conj_pows.borrow();
            if n < v.len() {
                return v[n].clone();
            }
        }
        let val = self.phi_pow(n).conj(&self.ctx);
        let mut v = self.conj_pows.borrow_mut();
        while v.len() <= n {
            let k = v.len();
            v.push(self.phi_pow(k).conj(&self.ctx));
        }
        debug_assert_eq!(v[n], val);
        v[n].clone()
    }

    /// Fibotorial `{n}! = {1}{2}...{n}` with `{0}! = 1`.
    pub fn fibotorial(&self, n: usize) -> R {
        {
            let v = self.fact.borrow();
            if n < v.len() {
                return v[n].clone();
            }
        }
        // fill fib first so the two RefCells are never borrowed together
        self.fib(n);
        let fibs = self.fib.borrow();
        let mut v = self.fact.borrow_mut();
        while v.len() <= n {
            let k = v.len();
            let next = v[k - 1].mul(&fibs[k]);
            v.push(next);
        }
        v[n].clone()
    }

    fn pascal_row(&self, n: usize) -> Result<Vec<R>, CoreError> {
        {
            let rows = self.rows.borrow();
            if n < rows.len() {
                return Ok(rows[n].clone());
            }
        }
        let mut rows = self.rows.borrow_mut();
        while rows.len() <= n {
            let m = rows.len(); // building row m from row m-1
            let prev = rows[m - 1].clone();
            let mut row = Vec::with_capacity(m + 1);
            for k in 0..=m {
                if k == 0 || k == m {
                    row.push(R::one());
                    continue;
                }
                // {m | k} = phi^k {m-1 | k} + phi'^(m-k) {m-1 | k-1}
                let lhs = self.phi_pow(k).scale(&prev[k]);
                let rhs = self.conj_pow(m - k).scale(&prev[k - 1]);
                let q = lhs.add(&rhs);
                let val = q.base_part().cloned().ok_or_else(|| {
                    CoreError::InternalMismatch(format!(
                        "phi-component of Pascal-rule fibonomial ({m},{k}) did not vanish"
                    ))
                })?;
                row.push(val);
            }
            rows.push(row);
        }
        Ok(rows[n].clone())
    }

    /// Fibonomial `{n | k}` computed by two independent routes, erroring on
    /// any disagreement. Out-of-range indices give 0.
    ///
    /// The primary cross-check divides fibotorials. Degenerate rational
    /// parameters can make an intermediate `{m}` vanish (only possible with
    /// a negative discriminant), which turns that quotient into 0/0; the
    /// value is still well defined as the specialization of the polynomial
    /// fibonomial, so in that case the cross-check switches to the mirrored
    /// Pascal rule, which is built from the conjugate weights.
    pub fn fibonomial(&self, n: i64, k: i64) -> Result<R, CoreError> {
        if k < 0 || n < 0 || k > n {
            return Ok(R::zero());
        }
        let (n, k) = (n as usize, k as usize);
        let via_pascal = self.pascal_row(n)?[k].clone();
        let denom = self.fibotorial(k).mul(&self.fibotorial(n - k));
        if denom.is_zero() {
            let via_mirror = self.mirror_value(n, k)?;
            if via_mirror != via_pascal {
                return Err(CoreError::InternalMismatch(format!(
                    "fibonomial ({n},{k}): mirrored route != Pascal route"
                )));
            }
            return Ok(via_pascal);
        }
        let via_div = self.fibotorial(n).exact_div(&denom).ok_or_else(|| {
            CoreError::NotDivisible(format!("fibotorial quotient for ({n},{k})"))
        })?;
        if via_div != via_pascal {
            return Err(CoreError::InternalMismatch(format!(
                "fibonomial ({n},{k}): division route != Pascal route"
            )));
        }
        Ok(via_div)
    }

    /// One step of the mirrored Pascal rule on top of the primary table.
    fn mirror_value(&self, n: usize, k: usize) -> Result<R, CoreError> {
        if k == 0 || k == n {
            return Ok(R::one());
        }
        let prev = self.pascal_row(n - 1)?;
        let q = self
            .conj_pow(k)
            .scale(&prev[k])
            .add(&self.phi_pow(n - k).scale(&prev[k - 1]));
        q.base_part().cloned().ok_or_else(|| {
            CoreError::InternalMismatch(format!(
                "phi-component of mirrored Pascal fibonomial ({n},{k}) did not vanish"
            ))
        })
    }

    /// The mirrored Pascal rule, `{n | k} = phi'^k {n-1 | k} + phi^(n-k)
    /// {n-1 | k-1}`, as an independent route used by the claim sweeps.
    pub fn fibonomial_pascal_mirror(&self, n: i64, k: i64) -> Result<R, CoreError> {
        if k < 0 || n < 0 || k > n {
            return Ok(R::zero());
        }
        let (n, k) = (n as usize, k as usize);
        if k == 0 || k == n {
            return Ok(R::one());
        }
        let prev_k = self.fibonomial(n as i64 - 1, k as i64)?;
        let prev_k1 = self.fibonomial(n as i64 - 1, k as i64 - 1)?;
        let q = self
            .conj_pow(k)
            .scale(&prev_k)
            .add(&self.phi_pow(n - k).scale(&prev_k1));
        q.base_part().cloned().ok_or_else(|| {
            CoreError::InternalMismatch(format!(
                "phi-component of mirrored Pascal fibonomial ({n},{k}) did not vanish"
            ))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::Params;
    use crate::poly::Poly2;
    use crate::ring::{Rat, Ring, VARS_ST};

    fn sym() -> FibCache<Poly2> {
        FibCache::new(Params::st_context_sym())
    }

    fn rat(s: i64, t: i64) -> FibCache<Rat> {
        FibCache::new(StContext::new(
            <Rat as Ring>::from_int(s),
            <Rat as Ring>::from_int(t),
        ))
    }

    #[test]
    fn symbolic_first_values() {
        let fc = sym();
        assert_eq!(fc.fib(0).render(&VARS_ST), "0");
        assert_eq!(fc.fib(1).render(&VARS_ST), "1");
        assert_eq!(fc.fib(2).render(&VARS_ST), "s");
        assert_eq!(fc.fib(3).render(&VARS_ST), "s^2 + t");
        assert_eq!(fc.fib(4).render(&VARS_ST), "s^3 + 2*s*t");
        assert_eq!(fc.fib(5).render(&VARS_ST), "s^4 + 3*s^2*t + t^2");
        assert_eq!(fc.lucas(0).render(&VARS_ST), "2");
        assert_eq!(fc.lucas(1).render(&VARS_ST), "s");
        assert_eq!(fc.lucas(2).render(&VARS_ST), "s^2 + 2*t");
        assert_eq!(fc.lucas(3).render(&VARS_ST), "s^3 + 3*s*t");
    }

    #[test]
    fn weighted_homogeneity() {
        // every term of {n} satisfies deg_s + 2*deg_t = n - 1
        let fc = sym();
        for n in 1..=25usize {
            for (e, _) in fc.fib(n).terms() {
                assert_eq!(e.0 + 2 * e.1, (n - 1) as u32, "term {e:?} of fib({n})");
            }
        }
    }

    #[test]
    fn phi_pow_encodes_sequence() {
        let fc = sym();
        for n in 1..=20usize {
            let p = fc.phi_pow(n);
            assert_eq!(p.b, fc.fib(n), "phi-part of phi^{n}");
            assert_eq!(p.a, fc.ctx().t.mul(&fc.fib(n - 1)), "base part of phi^{n}");
            // trace(phi^n) = <n>
            assert_eq!(p.trace(fc.ctx()), fc.lucas(n));
        }
    }

    #[test]
    fn specialization_values() {
        let fib = rat(1, 1);
        let expect = [0i64, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(fib.fib(n), <Rat as Ring>::from_int(e));
        }
        let pell = rat(2, 1);
        let expect = [0i64, 1, 2, 5, 12, 29, 70, 169, 408];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(pell.fib(n), <Rat as Ring>::from_int(e));
        }
        let jac = rat(1, 2);
        let expect = [0i64, 1, 1, 3, 5, 11, 21, 43, 85, 171];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(jac.fib(n), <Rat as Ring>::from_int(e));
        }
        let mer = rat(3, -2);
        for n in 0..20usize {
            assert_eq!(
                mer.fib(n),
                <Rat as Ring>::from_int((1i64 << n) - 1),
                "mersenne {n}"
            );
        }
        let nat = rat(2, -1);
        for n in 0..20usize {
            assert_eq!(nat.fib(n), <Rat as Ring>::from_int(n as i64));
        }
    }

    #[test]
    fn fibonomial_matches_hand_values() {
        // Fibonacci fibonomials, a classical table
        let fc = rat(1, 1);
        let f = |n: i64, k: i64| fc.fibonomial(n, k).unwrap();
        assert_eq!(f(5, 2), <Rat as Ring>::from_int(15)); // {5}!/( {2}! {3}! ) = 30/2
        assert_eq!(f(6, 3), <Rat as Ring>::from_int(60));
        assert_eq!(f(7, 3), <Rat as Ring>::from_int(260)); // 13*8*5 / (1*1*2)
        assert_eq!(f(4, 2), <Rat as Ring>::from_int(6));
        // out of range
        assert_eq!(f(3, 5), <Rat as Ring>::from_int(0));
        assert_eq!(f(-1, 0), <Rat as Ring>::from_int(0));
    }

    #[test]
    fn fibonomial_symbolic_and_mirror_route() {
        let fc = sym();
        // {4 | 2} = {4}!{2}!^-1{2}!^-1... = ({1}{2}{3}{4})/({1}{2})^2
        let expect = fc
            .fib(3)
            .mul(&fc.fib(4))
            .exact_div(&fc.fib(2))
            .unwrap();
        assert_eq!(fc.fibonomial(4, 2).unwrap(), expect);
        for n in 0..=12i64 {
            for k in 0..=n {
                assert_eq!(
                    fc.fibonomial(n, k).unwrap(),
                    fc.fibonomial_pascal_mirror(n, k).unwrap(),
                    "mirror route ({n},{k})"
                );
            }
        }
    }

    #[test]
    fn classic_fibonomials_are_binomials() {
        let fc = rat(2, -1);
        let mut binom = vec![1i64];
        for n in 0..=12i64 {
            for (k, &b) in binom.iter().enumerate() {
                assert_eq!(
                    fc.fibonomial(n, k as i64).unwrap(),
                    <Rat as Ring>::from_int(b)
                );
            }
            let mut next = vec![1i64];
            for w in binom.windows(2) {
                next.push(w[0] + w[1]);
            }
            next.push(1);
            binom = next;
        }
    }

    #[test]
    fn fibotorial_stays_sparse() {
        let fc = sym();
        let f25 = fc.fibotorial(25);
        assert!(
            f25.num_terms() <= 151,
            "expected sparse fibotorial, got {} terms",
            f25.num_terms()
        );
    }
}
