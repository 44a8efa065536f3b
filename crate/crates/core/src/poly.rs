//! Sparse bivariate polynomials over arbitrary-precision rationals.
//!
//! Terms are kept in a BTreeMap keyed by `(e1, e2)` exponent pairs, so the
//! map order is lex order with the first variable dominant; the maximal key
//! is the leading term used by exact division. Generalized Fibonacci
//! polynomials are weighted-homogeneous (every term of `{n}` has
//! `deg_s + 2*deg_t = n-1`), so sparse storage is what keeps fibotorials of
//! useful size tractable: `{25}!` has 151 terms, not ~10^4.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::ring::{render_rat, Rat, Ring, VarNames};

/// Exponents of the two variables, `(first, second)`.
pub type Exp = (u32, u32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly2 {
    terms: BTreeMap<Exp, Rat>,
}

impl Poly2 {
    pub fn new() -> Self {
        Poly2 { terms: BTreeMap::new() }
    }

    pub fn monomial(e: Exp, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&c) {
            terms.insert(e, c);
        }
        Poly2 { terms }
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial((0, 0), c)
    }

    /// The first variable (printed `s`, or `q` in the q-ring).
    pub fn var1() -> Self {
        Self::monomial((1, 0), <Rat as One>::one())
    }

    /// The second variable (printed `t`; unused in the q-ring).
    pub fn var2() -> Self {
        Self::monomial((0, 1), <Rat as One>::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: Exp) -> Rat {
        self.terms.get(&e).cloned().unwrap_or_else(<Rat as Zero>::zero)
    }

    /// Total degree, or None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == (0, 0))
    }

    /// The constant this polynomial is, if it is one.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            Some(<Rat as Zero>::zero())
        } else if self.terms.len() == 1 {
            self.terms.get(&(0, 0)).cloned()
        } else {
            None
        }
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    fn insert_add(&mut self, e: Exp, c: Rat) {
        if Zero::is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing += c;
                if Zero::is_zero(existing) {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Evaluate at rational values of the two variables.
    pub fn eval(&self, v1: &Rat, v2: &Rat) -> Rat {
        let mut acc = <Rat as Zero>::zero();
        for (&(a, b), c) in &self.terms {
            let mut term = c.clone();
            if a > 0 {
                term *= pow_rat(v1, a);
            }
            if b > 0 {
                term *= pow_rat(v2, b);
            }
            acc += term;
        }
        acc
    }

    fn leading(&self) -> Option<(Exp, &Rat)> {
        self.terms.last_key_value().map(|(e, c)| (*e, c))
    }
}

impl Default for Poly2 {
    fn default() -> Self {
        Self::new()
    }
}

fn pow_rat(r: &Rat, e: u32) -> Rat {
    let mut acc = <Rat as One>::one();
    let mut base = r.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

impl Ring for Poly2 {
    fn zero() -> Self {
        Poly2::new()
    }
    fn one() -> Self {
        Poly2::constant(<Rat as One>::one())
    }
    fn from_int(n: i64) -> Self {
        Poly2::constant(<Rat as Ring>::from_int(n))
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.insert_add(e, c.clone());
        }
        out
    }

    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.insert_add(e, -c.clone());
        }
        out
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = Poly2::new();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.insert_add((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }

    fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map(One::is_one).unwrap_or(false)
    }

    /// Division by repeated cancellation of the lex-leading term. Division by
    /// a single divisor is greedy-complete: if an exact quotient exists the
    /// loop finds it, otherwise some step leaves a remainder whose leading
    /// monomial is not divisible and we return None.
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let (dexp, dc) = rhs.leading()?; // None for division by zero
        let mut rem = self.clone();
        let mut quo = Poly2::new();
        while let Some((rexp, rc)) = rem.leading() {
            if rexp.0 < dexp.0 || rexp.1 < dexp.1 {
                return None;
            }
            let qe = (rexp.0 - dexp.0, rexp.1 - dexp.1);
            let qc = rc / dc;
            let qmono = Poly2::monomial(qe, qc.clone());
            rem = rem.sub(&qmono.mul(rhs));
            quo.insert_add(qe, qc);
        }
        Some(quo)
    }

    fn inv(&self) -> Option<Self> {
        // Units of a polynomial ring over a field: nonzero constants.
        let c = self.as_constant()?;
        if Zero::is_zero(&c) {
            None
        } else {
            Some(Poly2::constant(c.recip()))
        }
    }

    fn render(&self, vars: &VarNames) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        // Display in a human order: total degree descending, then first
        // variable descending; matches how these polynomials are written out.
        let mut keys: Vec<Exp> = self.terms.keys().cloned().collect();
        keys.sort_by(|x, y| (y.0 + y.1, y.0).cmp(&(x.0 + x.1, x.0)));
        let mut out = String::new();
        for (i, e) in keys.iter().enumerate() {
            let c = &self.terms[e];
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !One::is_one(&mag) || *e == (0, 0) {
                factors.push(render_rat(&mag));
            }
            if e.0 > 0 {
                factors.push(if e.0 == 1 {
                    vars.first.to_string()
                } else {
                    format!("{}^{}", vars.first, e.0)
                });
            }
            if e.1 > 0 {
                factors.push(if e.1 == 1 {
                    vars.second.to_string()
                } else {
                    format!("{}^{}", vars.second, e.1)
                });
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl std::fmt::Display for Poly2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render(&crate::ring::VARS_ST))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::VARS_ST;

    fn s() -> Poly2 {
        Poly2::var1()
    }
    fn t() -> Poly2 {
        Poly2::var2()
    }
    fn int(n: i64) -> Poly2 {
        Poly2::from_int(n)
    }

    #[test]
    fn arithmetic_and_display() {
        // s^2 + t, the third Fibonacci polynomial
        let p = s().mul(&s()).add(&t());
        assert_eq!(p.render(&VARS_ST), "s^2 + t");
        let q = p.sub(&p);
        assert!(q.is_zero());
        assert_eq!(int(-3).render(&VARS_ST), "-3");
        let m = s().mul(&t()).mul(&int(2)).sub(&int(1));
        assert_eq!(m.render(&VARS_ST), "2*s*t - 1");
    }

    #[test]
    fn eval_matches_structure() {
        let p = s().pow(3).add(&s().mul(&t()).mul(&int(2))); // {4} = s^3 + 2 s t
        let v = p.eval(&<Rat as Ring>::from_int(1), &<Rat as Ring>::from_int(1));
        assert_eq!(v, <Rat as Ring>::from_int(3)); // Fibonacci F(4)
        let v = p.eval(&<Rat as Ring>::from_int(2), &<Rat as Ring>::from_int(1));
        assert_eq!(v, <Rat as Ring>::from_int(12)); // Pell P(4)
    }

    #[test]
    fn exact_div_round_trip() {
        let a = s().pow(2).add(&t().mul(&int(3))).sub(&int(1));
        let b = s().mul(&t()).add(&int(7));
        let prod = a.mul(&b);
        let q = prod.exact_div(&b).expect("constructed to divide");
        assert_eq!(q, a);
        // and a non-divisible pair: (s+1) | p iff p vanishes at s = -1
        let bad = s().add(&int(1));
        assert!(s().pow(2).add(&t()).exact_div(&bad).is_none());
    }

    #[test]
    fn inv_only_for_nonzero_constants() {
        assert!(s().inv().is_none());
        assert!(Poly2::new().inv().is_none());
        let c = Poly2::constant(Rat::new(2.into(), 3.into()));
        let ci = c.inv().unwrap();
        assert!(c.mul(&ci).is_one());
    }
}
