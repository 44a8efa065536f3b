//! Shared command-line parameter handling: ring selection and ranges.

use clap::Args;
use stfib::params::{spec_lookup, Params};
use stfib::ring::Rat;

#[derive(Args, Debug, Clone, Default)]
pub struct ModeArgs {
    /// Named family: classic, fibonacci, pell, jacobsthal, mersenne, pq,
    /// qnumber, chebyshev
    #[arg(long, conflicts_with_all = ["s", "symbolic", "q_symbolic"])]
    pub family: Option<String>,

    /// Numeric argument for parametric families; repeat for pq (two values)
    #[arg(long = "arg", value_name = "RATIONAL", requires = "family")]
    pub args: Vec<String>,

    /// Explicit s as a rational, e.g. 3 or 5/2
    #[arg(long, requires = "t", conflicts_with_all = ["symbolic", "q_symbolic"])]
    pub s: Option<String>,

    /// Explicit t as a rational
    #[arg(long, requires = "s")]
    pub t: Option<String>,

    /// Work in the polynomial ring Z[s, t]
    #[arg(long, conflicts_with = "q_symbolic")]
    pub symbolic: bool,

    /// Work with (s, t) = (1 + q, -q) over polynomials in q
    #[arg(long = "q-symbolic")]
    pub q_symbolic: bool,
}

impl ModeArgs {
    /// Whether any mode flag was given at all.
    pub fn is_given(&self) -> bool {
        self.family.is_some() || self.s.is_some() || self.symbolic || self.q_symbolic
    }

    pub fn to_params(&self) -> Result<Params, String> {
        if self.symbolic {
            return Ok(Params::Symbolic);
        }
        if self.q_symbolic {
            return Ok(Params::QSymbolic);
        }
        if let Some(fam) = &self.family {
            let args: Vec<Rat> = self
                .args
                .iter()
                .map(|a| parse_rat(a))
                .collect::<Result<_, _>>()?;
            return spec_lookup(fam, &args).map_err(|e| e.to_string());
        }
        if let (Some(s), Some(t)) = (&self.s, &self.t) {
            let s = parse_rat(s)?;
            let t = parse_rat(t)?;
            return Params::rational(s, t).map_err(|e| e.to_string());
        }
        Err("no parameters given; use --family, --s/--t, --symbolic, or --q-symbolic".into())
    }

    /// The given mode, defaulting to symbolic when nothing was specified.
    pub fn to_params_or_symbolic(&self) -> Result<Params, String> {
        if self.is_given() {
            self.to_params()
        } else {
            Ok(Params::Symbolic)
        }
    }
}

pub fn parse_rat(text: &str) -> Result<Rat, String> {
    text.trim()
        .parse::<Rat>()
        .map_err(|e| format!("cannot parse '{text}' as a rational: {e}"))
}

/// Inclusive range "a..b", or a single index "a".
pub fn parse_range(text: &str) -> Result<(i64, i64), String> {
    let t = text.trim();
    let (lo, hi) = match t.split_once("..") {
        Some((a, b)) => {
            let lo = a
                .trim()
                .parse::<i64>()
                .map_err(|_| format!("bad range start '{a}'"))?;
            let hi = b
                .trim()
                .parse::<i64>()
                .map_err(|_| format!("bad range end '{b}'"))?;
            (lo, hi)
        }
        None => {
            let v = t
                .parse::<i64>()
                .map_err(|_| format!("bad index '{t}'"))?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    if hi - lo > 100_000 {
        return Err("range too large".into());
    }
    Ok((lo, hi))
}
