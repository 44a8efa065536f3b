//! Cross-checks of derived integer sequences against b-file fixtures.
//!
//! Each check row says: this family's sequence (the sequence itself, or a
//! simplicial column d) should match fixture id X at fixture index
//! `library_index + offset`. Fixtures are bundled into the binary; a
//! directory override and a network refresh are available.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use stfib::fib::FibCache;
use stfib::params::{expect_integer, spec_lookup};
use stfib::polytopic::simplicial;
use stfib::ring::Rat;

pub struct CheckSpec {
    pub id: &'static str,
    pub family: &'static str,
    /// 0 = the sequence {n} itself, otherwise the simplicial column d
    pub d: u32,
    /// fixture index = library index + offset
    pub offset: i64,
    pub definition: &'static str,
}

pub const CHECKS: &[CheckSpec] = &[
    CheckSpec { id: "A000045", family: "fibonacci", d: 0, offset: 0, definition: "F(n)" },
    CheckSpec { id: "A000129", family: "pell", d: 0, offset: 0, definition: "Pell(n)" },
    CheckSpec { id: "A001045", family: "jacobsthal", d: 0, offset: 0, definition: "Jacobsthal(n)" },
    CheckSpec { id: "A000225", family: "mersenne", d: 0, offset: 0, definition: "2^n - 1" },
    CheckSpec { id: "A000027", family: "classic", d: 0, offset: 0, definition: "n" },
    CheckSpec { id: "A001654", family: "fibonacci", d: 2, offset: 0, definition: "F(n)F(n+1)" },
    CheckSpec { id: "A084158", family: "pell", d: 2, offset: 0, definition: "P(n)P(n+1)/2" },
    CheckSpec { id: "A084175", family: "jacobsthal", d: 2, offset: 0, definition: "J(n)J(n+1)" },
    CheckSpec { id: "A006095", family: "mersenne", d: 2, offset: 1, definition: "Gaussian [n,2] for q=2" },
    CheckSpec { id: "A001655", family: "fibonacci", d: 3, offset: 2, definition: "Fibonomial C(n,3)" },
    CheckSpec { id: "A099930", family: "pell", d: 3, offset: 0, definition: "P(n)P(n+1)P(n+2)/10" },
    CheckSpec { id: "A006096", family: "mersenne", d: 3, offset: 2, definition: "Gaussian [n,3] for q=2" },
];

const EMBEDDED: &[(&str, &str)] = &[
    ("A000045", include_str!("../fixtures/b000045.txt")),
    ("A000129", include_str!("../fixtures/b000129.txt")),
    ("A001045", include_str!("../fixtures/b001045.txt")),
    ("A000225", include_str!("../fixtures/b000225.txt")),
    ("A000027", include_str!("../fixtures/b000027.txt")),
    ("A001654", include_str!("../fixtures/b001654.txt")),
    ("A084158", include_str!("../fixtures/b084158.txt")),
    ("A084175", include_str!("../fixtures/b084175.txt")),
    ("A006095", include_str!("../fixtures/b006095.txt")),
    ("A001655", include_str!("../fixtures/b001655.txt")),
    ("A099930", include_str!("../fixtures/b099930.txt")),
    ("A006096", include_str!("../fixtures/b006096.txt")),
];

pub fn bfile_name(id: &str) -> String {
    format!("b{}.txt", &id[1..])
}

/// Parse b-file text: `index value` per line with strictly increasing
/// indices, `#` comments ignored.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, String)>, String> {
    let mut out: Vec<(i64, String)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let n = parts
            .next()
            .and_then(|p| p.parse::<i64>().ok())
            .ok_or_else(|| format!("line {}: bad index", lineno + 1))?;
        if let Some((prev, _)) = out.last() {
            if n <= *prev {
                return Err(format!("line {}: index {n} not increasing", lineno + 1));
            }
        }
        let v = parts
            .next()
            .ok_or_else(|| format!("line {}: missing value", lineno + 1))?;
        if !v.chars().enumerate().all(|(i, c)| c.is_ascii_digit() || (i == 0 && c == '-')) {
            return Err(format!("line {}: bad value '{v}'", lineno + 1));
        }
        out.push((n, v.to_string()));
    }
    if out.is_empty() {
        return Err("no terms".into());
    }
    Ok(out)
}

pub struct Fixture {
    pub terms: Vec<(i64, String)>,
    /// "bundled", or the file path, with a fetch timestamp when one was
    /// recorded at download time
    pub provenance: String,
}

fn fetch_stamp(text: &str) -> Option<&str> {
    text.lines()
        .find(|l| l.starts_with("# fetched "))
        .map(|l| l.trim_start_matches("# ").trim())
}

fn load_fixture(dir: Option<&Path>, id: &str) -> Result<Fixture, String> {
    match dir {
        Some(d) => {
            let path = d.join(bfile_name(id));
            let text = fs::read_to_string(&path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let terms = parse_bfile(&text).map_err(|e| format!("{}: {e}", path.display()))?;
            let provenance = match fetch_stamp(&text) {
                Some(stamp) => format!("{} ({stamp})", path.display()),
                None => path.display().to_string(),
            };
            Ok(Fixture { terms, provenance })
        }
        None => {
            let (_, text) = EMBEDDED
                .iter()
                .find(|(i, _)| *i == id)
                .ok_or_else(|| format!("no bundled fixture for {id}"))?;
            let terms = parse_bfile(text).map_err(|e| format!("bundled {id}: {e}"))?;
            Ok(Fixture { terms, provenance: "bundled".into() })
        }
    }
}

/// Directory override from the environment, used when no --fixtures flag
/// is given.
pub fn env_fixture_dir() -> Option<PathBuf> {
    std::env::var_os("STFIB_FIXTURES").map(PathBuf::from)
}

/// Download fresh b-files for every check id into `dir`. This is the only
/// code path that touches the network, so a proxy from the environment is
/// honored exactly when fetching was requested.
pub fn fetch_all(dir: &Path) -> Result<(), String> {
    fs::create_dir_all(dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
    let mut builder = ureq::AgentBuilder::new().timeout(std::time::Duration::from_secs(30));
    if let Ok(proxy) = ureq::Proxy::try_from_env() {
        builder = builder.proxy(proxy);
    }
    let agent = builder.build();
    for spec in CHECKS {
        let name = bfile_name(spec.id);
        let url = format!("https://oeis.org/{}/{}", spec.id, name);
        let body = agent
            .get(&url)
            .call()
            .map_err(|e| format!("GET {url}: {e}"))?
            .into_string()
            .map_err(|e| format!("read {url}: {e}"))?;
        parse_bfile(&body).map_err(|e| format!("{url}: {e}"))?;
        let now = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let stamped = format!("# fetched at unix time {now} from {url}\n{body}");
        fs::write(dir.join(&name), stamped)
            .map_err(|e| format!("write {}: {e}", dir.display()))?;
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct OeisReport {
    pub id: String,
    pub family: String,
    pub d: u32,
    pub definition: String,
    /// where the fixture came from: bundled, or a file path (with a fetch
    /// timestamp when the file records one)
    pub source: String,
    pub compared: u64,
    pub mismatches: Vec<String>,
    pub ok: bool,
}

impl OeisReport {
    pub fn summary_line(&self) -> String {
        let what = if self.d == 0 {
            "sequence".to_string()
        } else {
            format!("d={} column", self.d)
        };
        format!(
            "{:<9} {:<11} {:<12} {:<26} terms={:<4} [{}]",
            self.id,
            self.family,
            what,
            self.definition,
            self.compared,
            if self.ok { "ok" } else { "MISMATCH" }
        )
    }
}

/// Run every check against fixtures from `dir` (falling back to the
/// STFIB_FIXTURES directory, then the bundled copies), comparing at most
/// `max_terms` terms per sequence.
pub fn run_checks(dir: Option<&PathBuf>, max_terms: u64) -> Vec<OeisReport> {
    let env_dir = env_fixture_dir();
    let effective = dir.map(|d| d.as_path()).or(env_dir.as_deref());
    CHECKS
        .iter()
        .map(|spec| run_one(spec, effective, max_terms))
        .collect()
}

fn run_one(spec: &CheckSpec, dir: Option<&Path>, max_terms: u64) -> OeisReport {
    let mut report = OeisReport {
        id: spec.id.to_string(),
        family: spec.family.to_string(),
        d: spec.d,
        definition: spec.definition.to_string(),
        source: String::new(),
        compared: 0,
        mismatches: Vec::new(),
        ok: false,
    };
    let Fixture { terms, provenance } = match load_fixture(dir, spec.id) {
        Ok(t) => t,
        Err(e) => {
            report.source = "missing".into();
            report.mismatches.push(e);
            return report;
        }
    };
    report.source = provenance;
    let params = spec_lookup(spec.family, &[]).expect("registry family");
    let fc: FibCache<Rat> = FibCache::new(params.st_context_rat().expect("rational"));
    for (fixture_n, fixture_val) in terms {
        let lib_n = fixture_n - spec.offset;
        if lib_n < 0 || report.compared >= max_terms {
            continue;
        }
        let value = if spec.d == 0 {
            Ok(fc.fib(lib_n as usize))
        } else {
            simplicial(&fc, lib_n, spec.d as i64)
        };
        let rendered = value
            .map_err(|e| e.to_string())
            .and_then(|v| {
                expect_integer(&v, "sequence term")
                    .map(|i| i.to_string())
                    .map_err(|e| e.to_string())
            });
        report.compared += 1;
        match rendered {
            Ok(r) if r == fixture_val => {}
            Ok(r) => report.mismatches.push(format!(
                "{} index {fixture_n}: library {r} != fixture {fixture_val}",
                spec.id
            )),
            Err(e) => report
                .mismatches
                .push(format!("{} index {fixture_n}: {e}", spec.id)),
        }
    }
    report.ok = report.mismatches.is_empty() && report.compared >= 20.min(max_terms);
    report
}
