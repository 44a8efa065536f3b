//! Exact and certified high-precision arithmetic for generalized Fibonacci
//! polynomials `{n}` defined by `{n+2} = s*{n+1} + t*{n}`, `{0}=0`, `{1}=1`,
//! together with the fibonomial coefficients and simplicial d-polytopic
//! numbers built from them.
//!
//! The crate has three layers:
//!
//! * exact algebra over a coefficient ring (arbitrary-precision rationals, or
//!   sparse polynomials in `s,t` / in `q`), including the quadratic extension
//!   by a root `phi` of `x^2 - s*x - t`;
//! * a claim catalog: every identity the library knows about, evaluated
//!   exactly over finite index ranges, with structured pass/fail reports;
//! * certified numerics: infinite reciprocal sums evaluated with proven tail
//!   bounds, compared against closed forms (theta functions, Lambert series,
//!   a formal logarithm) and against printed decimal values, some of which
//!   are known to be wrong and are flagged as such.
//!
//! Nothing in the exact layer ever rounds: a failed exact division or a
//! nonzero `phi`-component where none is allowed is reported as an error, not
//! papered over.

pub mod claims;
pub mod error;
pub mod fib;
pub mod numerics;
pub mod params;
pub mod poly;
pub mod polytopic;
pub mod quad;
pub mod real;
pub mod ring;
pub mod series;

pub use error::CoreError;
pub use fib::FibCache;
pub use params::{Mode, Params};
pub use poly::Poly2;
pub use quad::{Quad, StContext};
pub use ring::{Int, Rat, Ring};
