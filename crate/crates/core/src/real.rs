//! Thin context around astro-float: one working precision, one rounding
//! mode, a shared constants cache, and exact conversion from bignum
//! rationals.
//!
//! Every certified bound downstream multiplies in a rounding guard, so the
//! only contract this layer needs is "relative error per operation is at
//! most a few ulps", which ties-to-even gives.

use std::cell::RefCell;
use std::cmp::Ordering;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ring::{Int, Rat};

pub struct RealCtx {
    /// working precision in bits
    pub prec: usize,
    rm: RoundingMode,
    cc: RefCell<Consts>,
}

impl RealCtx {
    pub fn new(prec_bits: usize) -> Self {
        let prec = prec_bits.max(64);
        RealCtx {
            prec,
            rm: RoundingMode::ToEven,
            cc: RefCell::new(Consts::new().expect("constants cache")),
        }
    }

    pub fn zero(&self) -> BigFloat {
        BigFloat::from_i64(0, self.prec)
    }

    pub fn from_i64(&self, v: i64) -> BigFloat {
        BigFloat::from_i64(v, self.prec)
    }

    /// Exact conversion of a big integer: accumulate 64-bit limbs.
    pub fn from_int(&self, v: &Int) -> BigFloat {
        let (sign, limbs) = v.to_u64_digits();
        if limbs.is_empty() {
            return self.zero();
        }
        let p = 64 * limbs.len() + 64;
        let two64 = BigFloat::from_u64(u64::MAX, p).add(&BigFloat::from_u64(1, p), p, RoundingMode::None);
        let mut acc = BigFloat::from_i64(0, p);
        for limb in limbs.iter().rev() {
            acc = acc.mul(&two64, p, RoundingMode::None);
            acc = acc.add(&BigFloat::from_u64(*limb, p), p, RoundingMode::None);
        }
        if sign == num_bigint::Sign::Minus {
            acc = acc.neg();
        }
        // round down to working precision
        self.add(&acc, &self.zero())
    }

    pub fn from_rat(&self, v: &Rat) -> BigFloat {
        if v.is_zero() {
            return self.zero();
        }
        if v.denom().is_one() {
            return self.from_int(v.numer());
        }
        // convert at extra precision so the final quotient is clean
        let num = self.from_int(v.numer());
        let den = self.from_int(v.denom());
        num.div(&den, self.prec, self.rm)
    }

    pub fn parse(&self, s: &str) -> BigFloat {
        let mut cc = self.cc.borrow_mut();
        BigFloat::parse(s, Radix::Dec, self.prec, self.rm, &mut cc)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.prec, self.rm)
    }
    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.prec, self.rm)
    }
    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.prec, self.rm)
    }
    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.prec, self.rm)
    }
    pub fn recip(&self, a: &BigFloat) -> BigFloat {
        self.div(&self.from_i64(1), a)
    }

    /// Square root; caller guarantees a >= 0.
    pub fn sqrt(&self, a: &BigFloat) -> BigFloat {
        debug_assert!(!self.is_negative(a), "sqrt of negative");
        a.sqrt(self.prec, self.rm)
    }

    pub fn powi(&self, a: &BigFloat, e: usize) -> BigFloat {
        a.powi(e, self.prec, self.rm)
    }

    /// a^b for a > 0.
    pub fn pow(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        let mut cc = self.cc.borrow_mut();
        a.pow(b, self.prec, self.rm, &mut cc)
    }

    /// a^z for rational z; exact exponentiation when z is an integer.
    pub fn pow_rat(&self, a: &BigFloat, z: &Rat) -> BigFloat {
        if z.denom().is_one() {
            if let Some(e) = z.numer().to_i64() {
                let mag = self.powi(a, e.unsigned_abs() as usize);
                return if e < 0 { self.recip(&mag) } else { mag };
            }
        }
        let zf = self.from_rat(z);
        if z.is_negative() {
            self.recip(&self.pow(a, &zf.abs()))
        } else {
            self.pow(a, &zf)
        }
    }

    pub fn ln(&self, a: &BigFloat) -> BigFloat {
        let mut cc = self.cc.borrow_mut();
        a.ln(self.prec, self.rm, &mut cc)
    }

    pub fn pi(&self) -> BigFloat {
        let mut cc = self.cc.borrow_mut();
        cc.pi(self.prec, self.rm)
    }

    /// 2^e for any integer e, exactly.
    pub fn two_pow(&self, e: i64) -> BigFloat {
        let mut one = self.from_i64(1);
        let cur = one.exponent().expect("finite");
        one.set_exponent(cur + e as astro_float::Exponent);
        one
    }

    pub fn cmp(&self, a: &BigFloat, b: &BigFloat) -> Ordering {
        match a.cmp(b) {
            Some(v) if v < 0 => Ordering::Less,
            Some(v) if v > 0 => Ordering::Greater,
            Some(_) => Ordering::Equal,
            None => panic!("NaN in certified comparison"),
        }
    }

    pub fn lt(&self, a: &BigFloat, b: &BigFloat) -> bool {
        self.cmp(a, b) == Ordering::Less
    }
    pub fn le(&self, a: &BigFloat, b: &BigFloat) -> bool {
        self.cmp(a, b) != Ordering::Greater
    }

    pub fn is_negative(&self, a: &BigFloat) -> bool {
        a.is_negative() && !a.is_zero()
    }

    /// max(1, |a|), the scale used by relative tolerances.
    pub fn max1(&self, a: &BigFloat) -> BigFloat {
        let one = self.from_i64(1);
        let aa = a.abs();
        if self.lt(&aa, &one) {
            one
        } else {
            aa
        }
    }

    pub fn abs_diff(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        self.sub(a, b).abs()
    }

    /// Multiplicative guard covering accumulated per-op rounding in bound
    /// computations: ties-to-even is not directed, so certified quantities
    /// get widened by this factor.
    pub fn rounding_guard(&self) -> BigFloat {
        self.add(&self.from_i64(1), &self.two_pow(16 - self.prec as i64))
    }
}

/// Round a decimal scientific string (astro-float display form) to a number
/// of significant digits. Purely textual, so it cannot introduce binary
/// rounding on top of what the float already shows.
pub fn round_sig(display: &str, digits: usize) -> String {
    if digits == 0 || !display.contains('e') {
        return display.to_string();
    }
    let (neg, rest) = match display.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, display),
    };
    let Some((mantissa, exp)) = rest.split_once('e') else {
        return display.to_string();
    };
    let mut exp: i64 = match exp.parse() {
        Ok(e) => e,
        Err(_) => return display.to_string(),
    };
    let mut ds: Vec<u8> = mantissa
        .bytes()
        .filter(|b| b.is_ascii_digit())
        .map(|b| b - b'0')
        .collect();
    if ds.len() > digits {
        let round_up = ds[digits] >= 5;
        ds.truncate(digits);
        if round_up {
            let mut i = digits;
            loop {
                if i == 0 {
                    ds.insert(0, 1);
                    ds.truncate(digits);
                    exp += 1;
                    break;
                }
                i -= 1;
                if ds[i] == 9 {
                    ds[i] = 0;
                } else {
                    ds[i] += 1;
                    break;
                }
            }
        }
    }
    while ds.len() > 1 && ds.last() == Some(&0) {
        ds.pop();
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push((b'0' + ds[0]) as char);
    if ds.len() > 1 {
        out.push('.');
        for d in &ds[1..] {
            out.push((b'0' + d) as char);
        }
    }
    out.push_str(&format!("e{}{}", if exp < 0 { "-" } else { "+" }, exp.abs()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn exact_int_and_rat_conversion() {
        let rc = RealCtx::new(192);
        // a 100-bit integer survives the limb walk exactly
        let big: Int = Int::from(1u64 << 60) * Int::from(1u64 << 40) + Int::from(12345);
        let x = rc.from_int(&big);
        let back = rc.sub(&x, &rc.from_int(&(big.clone() - Int::from(12345))));
        assert_eq!(rc.cmp(&back, &rc.from_i64(12345)), Ordering::Equal);
        // 1/3 + 2/3 = 1 to working precision
        let third = rc.from_rat(&Rat::new(1.into(), 3.into()));
        let two_thirds = rc.from_rat(&Rat::new(2.into(), 3.into()));
        let one = rc.add(&third, &two_thirds);
        let err = rc.abs_diff(&one, &rc.from_i64(1));
        assert!(rc.le(&err, &rc.two_pow(-180)));
    }

    #[test]
    fn two_pow_is_exact() {
        let rc = RealCtx::new(64);
        assert_eq!(rc.cmp(&rc.two_pow(10), &rc.from_i64(1024)), Ordering::Equal);
        let x = rc.mul(&rc.two_pow(-10), &rc.from_i64(1024));
        assert_eq!(rc.cmp(&x, &rc.from_i64(1)), Ordering::Equal);
    }

    #[test]
    fn known_constants() {
        let rc = RealCtx::new(256);
        let pi = rc.pi();
        let approx = rc.from_rat(&Rat::new(355.into(), 113.into()));
        let err = rc.abs_diff(&pi, &approx);
        assert!(rc.lt(&err, &rc.from_rat(&Rat::new(1.into(), 1_000_000.into()))));
        let l2 = rc.ln(&rc.from_i64(2));
        let e = rc.abs_diff(&rc.pow(&rc.from_i64(2), &rc.recip(&l2)), &rc.parse("2.71828182845904523536028747135266249775724709369995"));
        assert!(rc.lt(&e, &rc.two_pow(-150)), "2^(1/ln 2) = e");
    }

    #[test]
    fn sig_rounding() {
        assert_eq!(round_sig("3.359885666243177e+0", 12), "3.35988566624e+0");
        assert_eq!(round_sig("9.99996e+1", 3), "1e+2");
        assert_eq!(round_sig("-1.23456e-4", 4), "-1.235e-4");
        assert_eq!(round_sig("2.5e+0", 8), "2.5e+0");
    }

    #[test]
    fn pow_rat_integer_fast_path() {
        let rc = RealCtx::new(128);
        let x = rc.from_i64(3);
        let y = rc.pow_rat(&x, &<Rat as Ring>::from_int(-2));
        let expect = rc.from_rat(&Rat::new(1.into(), 9.into()));
        let err = rc.abs_diff(&y, &expect);
        assert!(rc.le(&err, &rc.two_pow(-120)));
    }
}
