//! The quadratic extension R[phi] with phi^2 = s*phi + t, where phi is a
//! root of x^2 - s*x - t over the coefficient ring R. Elements are kept in
//! reduced form `a + b*phi`. The conjugate root is phi' = s - phi, and
//! phi * phi' = -t, so conjugation and norms stay inside R.
//!
//! Powers of phi encode the whole sequence: phi^n = t*{n-1} + {n}*phi.

use crate::ring::{Ring, VarNames};

/// The defining data (s, t) of the recurrence, as ring elements. Symbolic
/// mode sets these to the two polynomial variables; rational mode to
/// constants; q-mode to (1 + q, -q).
#[derive(Debug, Clone, PartialEq)]
pub struct StContext<R: Ring> {
    pub s: R,
    pub t: R,
}

impl<R: Ring> StContext<R> {
    pub fn new(s: R, t: R) -> Self {
        StContext { s, t }
    }

    /// `q` as a ring element: in the q-parameterization t = -q.
    pub fn q_elem(&self) -> R {
        self.t.neg()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Quad<R: Ring> {
    /// coefficient of 1
    pub a: R,
    /// coefficient of phi
    pub b: R,
}

impl<R: Ring> Quad<R> {
    pub fn new(a: R, b: R) -> Self {
        Quad { a, b }
    }

    pub fn from_base(a: R) -> Self {
        Quad { a, b: R::zero() }
    }

    pub fn zero() -> Self {
        Quad { a: R::zero(), b: R::zero() }
    }

    pub fn one() -> Self {
        Quad { a: R::one(), b: R::zero() }
    }

    pub fn phi() -> Self {
        Quad { a: R::zero(), b: R::one() }
    }

    /// phi' = s - phi.
    pub fn phi_conj(ctx: &StContext<R>) -> Self {
        Quad { a: ctx.s.clone(), b: R::one().neg() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True iff the phi-component vanishes.
    pub fn is_base(&self) -> bool {
        self.b.is_zero()
    }

    pub fn base_part(&self) -> Option<&R> {
        if self.is_base() {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Quad { a: self.a.add(&rhs.a), b: self.b.add(&rhs.b) }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Quad { a: self.a.sub(&rhs.a), b: self.b.sub(&rhs.b) }
    }

    pub fn neg(&self) -> Self {
        Quad { a: self.a.neg(), b: self.b.neg() }
    }

    /// Reduced product: (a1 + b1 phi)(a2 + b2 phi) with phi^2 = s phi + t.
    pub fn mul(&self, rhs: &Self, ctx: &StContext<R>) -> Self {
        let bb = self.b.mul(&rhs.b);
        let a = self.a.mul(&rhs.a).add(&bb.mul(&ctx.t));
        let b = self.a.mul(&rhs.b).add(&self.b.mul(&rhs.a)).add(&bb.mul(&ctx.s));
        Quad { a, b }
    }

    pub fn scale(&self, c: &R) -> Self {
        Quad { a: self.a.mul(c), b: self.b.mul(c) }
    }

    pub fn pow(&self, e: u32, ctx: &StContext<R>) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, ctx);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, ctx);
            }
        }
        acc
    }

    /// Galois conjugate: a + b*phi  |->  (a + b*s) - b*phi.
    pub fn conj(&self, ctx: &StContext<R>) -> Self {
        Quad { a: self.a.add(&self.b.mul(&ctx.s)), b: self.b.neg() }
    }

    /// Norm into the base ring: self * conj(self). The phi-component of that
    /// product vanishes identically; computed directly here.
    pub fn norm(&self, ctx: &StContext<R>) -> R {
        // (a + b phi)((a + b s) - b phi) = a^2 + a b s - b^2 t
        let aa = self.a.mul(&self.a);
        let abs = self.a.mul(&self.b).mul(&ctx.s);
        let bbt = self.b.mul(&self.b).mul(&ctx.t);
        aa.add(&abs).sub(&bbt)
    }

    /// Trace into the base ring: self + conj(self) = 2a + b*s.
    pub fn trace(&self, ctx: &StContext<R>) -> R {
        self.a.add(&self.a).add(&self.b.mul(&ctx.s))
    }

    /// Inverse, when the norm is a unit: conj(self) / norm(self).
    pub fn inv(&self, ctx: &StContext<R>) -> Option<Self> {
        let n = self.norm(ctx);
        let ninv = n.inv()?;
        Some(self.conj(ctx).scale(&ninv))
    }

    /// Exact division by phi - phi' = 2*phi - s: for X = y*(phi - phi') the
    /// unique preimage is y = b/2 with a = -s*b/2; returns None when self is
    /// not of that shape or b has no half in R.
    pub fn div_root_diff(&self, ctx: &StContext<R>) -> Option<R> {
        let y = self.b.exact_div(&R::from_int(2))?;
        if self.a.add(&ctx.s.mul(&y)).is_zero() {
            Some(y)
        } else {
            None
        }
    }

    pub fn render(&self, vars: &VarNames) -> String {
        if self.b.is_zero() {
            self.a.render(vars)
        } else if self.a.is_zero() {
            format!("({})*phi", self.b.render(vars))
        } else {
            format!("({}) + ({})*phi", self.a.render(vars), self.b.render(vars))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly2;
    use crate::ring::Rat;

    fn sym_ctx() -> StContext<Poly2> {
        StContext::new(Poly2::var1(), Poly2::var2())
    }

    #[test]
    fn phi_satisfies_its_equation() {
        let ctx = sym_ctx();
        let phi = Quad::<Poly2>::phi();
        let lhs = phi.mul(&phi, &ctx);
        let rhs = phi.scale(&ctx.s).add(&Quad::from_base(ctx.t.clone()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn conj_is_other_root_and_invariants() {
        let ctx = sym_ctx();
        let phi = Quad::<Poly2>::phi();
        let phic = phi.conj(&ctx);
        assert_eq!(phic, Quad::phi_conj(&ctx));
        // phi + phi' = s, phi * phi' = -t
        assert_eq!(phi.add(&phic), Quad::from_base(ctx.s.clone()));
        assert_eq!(phi.mul(&phic, &ctx), Quad::from_base(ctx.t.neg()));
        // norm(phi) = -t, trace(phi) = s
        assert_eq!(phi.norm(&ctx), ctx.t.neg());
        assert_eq!(phi.trace(&ctx), ctx.s.clone());
    }

    #[test]
    fn inverse_in_rational_mode() {
        // (s,t) = (2,1): phi = 1 + sqrt(2), norm(phi) = -1, so phi is a unit
        let ctx = StContext::new(<Rat as Ring>::from_int(2), <Rat as Ring>::from_int(1));
        let phi = Quad::<Rat>::phi();
        let inv = phi.inv(&ctx).expect("unit");
        assert_eq!(phi.mul(&inv, &ctx), Quad::one());
    }

    #[test]
    fn div_root_diff_recovers_factor() {
        let ctx = sym_ctx();
        let phi = Quad::<Poly2>::phi();
        let diff = phi.sub(&Quad::phi_conj(&ctx)); // 2 phi - s
        let y = Poly2::var1().mul(&Poly2::var2()).add(&Poly2::from_int(5));
        let x = diff.scale(&y);
        assert_eq!(x.div_root_diff(&ctx), Some(y));
        // something with the wrong shape
        assert_eq!(Quad::<Poly2>::one().div_root_diff(&ctx), None);
    }
}
