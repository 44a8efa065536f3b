//! Parameter handling: which ring we work in and which (s, t) pair.
//!
//! Three modes:
//! * `Symbolic`: s and t are independent polynomial variables.
//! * `QSymbolic`: the q-parameterization (s, t) = (1 + q, -q), computed in
//!   polynomials in q. Under it `{n}` becomes the q-integer bracket
//!   (1 - q^n)/(1 - q).
//! * `Rational(s0, t0)`: concrete rational values.
//!
//! Named specializations map to rational pairs: natural numbers (2, -1),
//! Fibonacci (1, 1), Pell (2, 1), Jacobsthal (1, 2), Mersenne (3, -2),
//! (p, q)-parameters (p + q, -p*q), q-numbers (1 + q0, -q0), and Chebyshev
//! via tau (2*tau, -1).

use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::poly::Poly2;
use crate::quad::StContext;
use crate::ring::{rat_to_int, render_rat, Rat, Ring};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Mode {
    Symbolic,
    QSymbolic,
    Rational { s: String, t: String },
}

/// A resolved parameter choice. Rational values are kept as exact `Rat`;
/// `Mode` above is the serializable mirror used in reports.
#[derive(Debug, Clone, PartialEq)]
pub enum Params {
    Symbolic,
    QSymbolic,
    Rational { s: Rat, t: Rat, name: Option<String> },
}

impl Params {
    pub fn rational(s: Rat, t: Rat) -> Result<Self, CoreError> {
        use num_traits::Zero;
        if Zero::is_zero(&s) || Zero::is_zero(&t) {
            return Err(CoreError::InvalidParams(
                "s and t must both be nonzero".into(),
            ));
        }
        Ok(Params::Rational { s, t, name: None })
    }

    pub fn named(name: &str, s: Rat, t: Rat) -> Result<Self, CoreError> {
        let mut p = Self::rational(s, t)?;
        if let Params::Rational { name: n, .. } = &mut p {
            *n = Some(name.to_string());
        }
        Ok(p)
    }

    pub fn mode(&self) -> Mode {
        match self {
            Params::Symbolic => Mode::Symbolic,
            Params::QSymbolic => Mode::QSymbolic,
            Params::Rational { s, t, .. } => Mode::Rational {
                s: render_rat(s),
                t: render_rat(t),
            },
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Params::Symbolic => "symbolic (s,t)".to_string(),
            Params::QSymbolic => "q-symbolic, (s,t) = (1+q, -q)".to_string(),
            Params::Rational { s, t, name } => match name {
                Some(n) => format!("{} (s={}, t={})", n, render_rat(s), render_rat(t)),
                None => format!("s={}, t={}", render_rat(s), render_rat(t)),
            },
        }
    }

    pub fn family_name(&self) -> Option<&str> {
        match self {
            Params::Rational { name: Some(n), .. } => Some(n),
            _ => None,
        }
    }

    pub fn rational_st(&self) -> Option<(&Rat, &Rat)> {
        match self {
            Params::Rational { s, t, .. } => Some((s, t)),
            _ => None,
        }
    }

    /// Symbolic context over the polynomial ring in (s, t).
    pub fn st_context_sym() -> StContext<Poly2> {
        StContext::new(Poly2::var1(), Poly2::var2())
    }

    /// q-symbolic context: polynomials in q with s = 1 + q, t = -q.
    pub fn st_context_q() -> StContext<Poly2> {
        let q = Poly2::var1();
        StContext::new(q.add(&Poly2::one()), q.neg())
    }

    pub fn st_context_rat(&self) -> Option<StContext<Rat>> {
        self.rational_st()
            .map(|(s, t)| StContext::new(s.clone(), t.clone()))
    }
}

/// One row of the specialization registry.
pub struct SpecEntry {
    pub name: &'static str,
    /// how many numeric arguments the entry takes
    pub arity: usize,
    pub summary: &'static str,
    /// OEIS ids whose terms this family's derived sequences should match
    pub oeis: &'static [&'static str],
    make: fn(&[Rat]) -> Result<Params, CoreError>,
}

fn int(n: i64) -> Rat {
    <Rat as Ring>::from_int(n)
}

fn mk_classic(_: &[Rat]) -> Result<Params, CoreError> {
    Params::named("classic", int(2), int(-1))
}
fn mk_fibonacci(_: &[Rat]) -> Result<Params, CoreError> {
    Params::named("fibonacci", int(1), int(1))
}
fn mk_pell(_: &[Rat]) -> Result<Params, CoreError> {
    Params::named("pell", int(2), int(1))
}
fn mk_jacobsthal(_: &[Rat]) -> Result<Params, CoreError> {
    Params::named("jacobsthal", int(1), int(2))
}
fn mk_mersenne(_: &[Rat]) -> Result<Params, CoreError> {
    Params::named("mersenne", int(3), int(-2))
}
fn mk_pq(args: &[Rat]) -> Result<Params, CoreError> {
    let (p, q) = (&args[0], &args[1]);
    if p == q {
        return Err(CoreError::InvalidParams(
            "p and q must be distinct for the (p,q) specialization".into(),
        ));
    }
    Params::named("pq", p + q, -(p * q))
}
fn mk_qnumber(args: &[Rat]) -> Result<Params, CoreError> {
    use num_traits::One;
    let q0 = &args[0];
    if One::is_one(q0) {
        return Err(CoreError::InvalidParams(
            "q = 1 degenerates the q-number specialization".into(),
        ));
    }
    Params::named("qnumber", q0 + int(1), -q0.clone())
}
fn mk_chebyshev(args: &[Rat]) -> Result<Params, CoreError> {
    let tau = &args[0];
    Params::named("chebyshev", tau * int(2), int(-1))
}

pub const SPEC_REGISTRY: &[SpecEntry] = &[
    SpecEntry {
        name: "classic",
        arity: 0,
        summary: "(s,t) = (2,-1): {n} = n, polytopic numbers become binomials",
        oeis: &["A000027"],
        make: mk_classic,
    },
    SpecEntry {
        name: "fibonacci",
        arity: 0,
        summary: "(s,t) = (1,1): Fibonacci numbers",
        oeis: &["A000045", "A001654", "A001655"],
        make: mk_fibonacci,
    },
    SpecEntry {
        name: "pell",
        arity: 0,
        summary: "(s,t) = (2,1): Pell numbers",
        oeis: &["A000129", "A084158", "A099930"],
        make: mk_pell,
    },
    SpecEntry {
        name: "jacobsthal",
        arity: 0,
        summary: "(s,t) = (1,2): Jacobsthal numbers",
        oeis: &["A001045", "A084175"],
        make: mk_jacobsthal,
    },
    SpecEntry {
        name: "mersenne",
        arity: 0,
        summary: "(s,t) = (3,-2): Mersenne numbers 2^n - 1",
        oeis: &["A000225", "A006095", "A006096"],
        make: mk_mersenne,
    },
    SpecEntry {
        name: "pq",
        arity: 2,
        summary: "(s,t) = (p+q, -p*q): (p,q)-numbers (p^n - q^n)/(p - q)",
        oeis: &[],
        make: mk_pq,
    },
    SpecEntry {
        name: "qnumber",
        arity: 1,
        summary: "(s,t) = (1+q, -q) at a concrete q: q-integers [n]_q",
        oeis: &[],
        make: mk_qnumber,
    },
    SpecEntry {
        name: "chebyshev",
        arity: 1,
        summary: "(s,t) = (2*tau, -1): Chebyshev-type specialization",
        oeis: &[],
        make: mk_chebyshev,
    },
];

/// Look a named specialization up and build its parameters.
pub fn spec_lookup(name: &str, args: &[Rat]) -> Result<Params, CoreError> {
    let entry = SPEC_REGISTRY
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CoreError::UnknownName(format!("family '{name}'")))?;
    if args.len() != entry.arity {
        return Err(CoreError::InvalidParams(format!(
            "family '{}' takes {} argument(s), got {}",
            entry.name,
            entry.arity,
            args.len()
        )));
    }
    (entry.make)(args)
}

/// Families over which the rational-mode claim sweeps run. The sixth entry
/// is the tau = 2 Chebyshev-type pair (4, -1).
pub fn standard_families() -> Vec<Params> {
    let cheb2 = spec_lookup("chebyshev", &[int(2)]).expect("registry entry");
    vec![
        spec_lookup("classic", &[]).unwrap(),
        spec_lookup("fibonacci", &[]).unwrap(),
        spec_lookup("pell", &[]).unwrap(),
        spec_lookup("jacobsthal", &[]).unwrap(),
        spec_lookup("mersenne", &[]).unwrap(),
        cheb2,
    ]
}

/// Integer sequence check: does the rational actually denote an integer?
pub fn expect_integer(r: &Rat, what: &str) -> Result<crate::ring::Int, CoreError> {
    rat_to_int(r).ok_or_else(|| {
        CoreError::InternalMismatch(format!("{what} is not an integer: {}", render_rat(r)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_and_validation() {
        let p = spec_lookup("pell", &[]).unwrap();
        assert_eq!(p.rational_st().unwrap().0, &int(2));
        assert!(spec_lookup("nope", &[]).is_err());
        assert!(spec_lookup("pq", &[int(3)]).is_err());
        assert!(spec_lookup("pq", &[int(3), int(3)]).is_err());
        let pq = spec_lookup("pq", &[int(3), int(2)]).unwrap();
        assert_eq!(pq.rational_st().unwrap(), (&int(5), &int(-6)));
        assert!(Params::rational(int(0), int(1)).is_err());
    }

    #[test]
    fn q_context_builds_brackets() {
        let ctx = Params::st_context_q();
        // {3} = s^2 + t = (1+q)^2 - q = 1 + q + q^2, the bracket [3]_q
        let s = &ctx.s;
        let t = &ctx.t;
        let n3 = s.mul(s).add(t);
        let expected = Poly2::var1()
            .pow(2)
            .add(&Poly2::var1())
            .add(&Poly2::one());
        assert_eq!(n3, expected);
    }
}
