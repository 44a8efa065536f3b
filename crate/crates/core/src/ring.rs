use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Variable names used when rendering ring elements for reports. The
/// rational ring ignores them; the polynomial ring prints its first variable
/// as `first` and its second as `second`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarNames {
    pub first: &'static str,
    pub second: &'static str,
}

pub const VARS_ST: VarNames = VarNames { first: "s", second: "t" };
pub const VARS_Q: VarNames = VarNames { first: "q", second: "_" };

/// A commutative ring with exact (checked) division. Implemented by
/// arbitrary-precision rationals and by sparse polynomials over them.
///
/// `exact_div` must return `Some(q)` iff `q * rhs == self` has a solution in
/// the ring, and that exact `q`; `inv` must return the multiplicative inverse
/// iff the element is a unit. No implementation may approximate.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    /// Exact division: `Some(q)` with `q * rhs == self`, else `None`.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    /// Multiplicative inverse, if this element is a unit.
    fn inv(&self) -> Option<Self>;

    fn pow(&self, e: u32) -> Self {
        // Square-and-multiply; exponents here stay small (hundreds).
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn render(&self, vars: &VarNames) -> String;
}

impl Ring for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn from_int(n: i64) -> Self {
        Rat::from_integer(Int::from(n))
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn render(&self, _vars: &VarNames) -> String {
        render_rat(self)
    }
}

pub fn render_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True iff the rational is an integer and, if so, hands it back.
pub fn rat_to_int(r: &Rat) -> Option<Int> {
    if r.denom().is_one() {
        Some(r.numer().clone())
    } else {
        None
    }
}

pub fn rat_is_negative(r: &Rat) -> bool {
    r.is_negative()
}
