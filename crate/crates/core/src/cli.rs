//! The `bzeta` command line.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or out of scope.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::luo;
use crate::oracle;
use crate::typeorbits::{NextType, TypeOrbit};
use crate::weyl::{Family, RootSystem};
use crate::zeta::{self, Format};

#[derive(Debug, Parser)]
#[command(name = "bzeta", version, about = "Type orbits, Luo's m and edge zeta functions of spherical buildings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the type orbits, one cycle per row.
    Orbits(Target),
    /// List the type orbits with Luo's half period m.
    Luo(Target),
    /// Factored inverse zeta function per orbit (types A, B = C, C).
    Zeta(Target),
    /// Compare closed-walk counts of a brute-force building with the
    /// prediction, one PASS/FAIL row per length.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Target {
    /// Family letter, optionally with the rank attached (`E8`, `C3`).
    #[arg(long)]
    pub family: String,
    /// Coxeter rank: C3 is Sp_6, A2 is GL_3.
    #[arg(long)]
    pub rank: Option<usize>,
    /// Restrict to the orbit containing the ordered pair "r,s".
    #[arg(long)]
    pub orbit: Option<String>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub target: Target,
    /// Field size (a prime, 2 or 3).
    #[arg(long)]
    pub q: u64,
    /// Largest walk length to compare (at most 20).
    #[arg(long)]
    pub max_len: u32,
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRow {
    pub cycle: Vec<usize>,
    pub c: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub segment_lengths: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitsReport {
    pub family: Family,
    pub rank: usize,
    pub orbits: Vec<OrbitRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRow {
    pub length: u32,
    pub oracle: String,
    pub predicted: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub family: Family,
    pub rank: usize,
    pub q: u64,
    pub rows: Vec<VerifyRow>,
}

/// `"E8"` → `(E, Some(8))`, `"C"` → `(C, None)`.
pub fn parse_family(s: &str) -> Result<(Family, Option<usize>)> {
    let s = s.trim();
    let mut chars = s.chars();
    let letter = chars.next().ok_or_else(|| Error::Parse("empty family".into()))?;
    let family: Family = letter.to_string().parse()?;
    let rest = chars.as_str();
    if rest.is_empty() {
        return Ok((family, None));
    }
    let rank = rest.parse().map_err(|_| Error::Parse(format!("bad family {s:?}")))?;
    Ok((family, Some(rank)))
}

fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("bad orbit selector {s:?}, expected \"r,s\""));
    let (r, t) = s.split_once(',').ok_or_else(bad)?;
    Ok((r.trim().parse().map_err(|_| bad())?, t.trim().parse().map_err(|_| bad())?))
}

impl Target {
    fn resolve(&self) -> Result<(Family, usize)> {
        let (family, attached) = parse_family(&self.family)?;
        match (self.rank, attached) {
            (Some(a), Some(b)) if a != b => Err(Error::Parse(format!("rank {a} conflicts with {}", self.family))),
            (Some(r), _) | (None, Some(r)) => Ok((family, r)),
            (None, None) => Err(Error::Parse("missing --rank".into())),
        }
    }

    fn selected(&self, orbits: Vec<TypeOrbit>) -> Result<Vec<TypeOrbit>> {
        match &self.orbit {
            None => Ok(orbits),
            Some(sel) => {
                let pair = parse_pair(sel)?;
                let hit: Vec<TypeOrbit> = orbits.into_iter().filter(|o| o.contains(pair)).collect();
                if hit.is_empty() {
                    return Err(Error::Parse(format!("no orbit contains the pair {sel:?}")));
                }
                Ok(hit)
            }
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes") + "\n"
}

fn run_orbits(t: &Target, with_m: bool) -> Result<Outcome> {
    let (family, rank) = t.resolve()?;
    let rs = RootSystem::build(family, rank)?;
    let orbits = t.selected(NextType::new(&rs).enumerate())?;
    let mut rows = Vec::new();
    for o in orbits {
        let (m, segs) = if with_m {
            let r = luo::half_period(&rs, &o)?;
            let alt = luo::u_sequence_m(&rs, &o)?;
            if alt != r.m {
                return Err(Error::CrossCheckFailed { half_period: r.m, u_sequence: alt });
            }
            (Some(r.m), Some(r.segment_lengths))
        } else {
            (None, None)
        };
        rows.push((o, m, segs));
    }
    let stdout = match t.format {
        OutputFormat::Json => to_json(&OrbitsReport {
            family,
            rank,
            orbits: rows
                .into_iter()
                .map(|(o, m, segment_lengths)| OrbitRow { cycle: o.cycle().to_vec(), c: o.c(), m, segment_lengths })
                .collect(),
        }),
        OutputFormat::Text => {
            let mut s = String::new();
            for (o, m, _) in rows {
                match m {
                    Some(m) => writeln!(s, "{o} | {m}"),
                    None => writeln!(s, "{o}"),
                }
                .expect("write to string");
            }
            s
        }
    };
    Ok(Outcome { status: 0, stdout })
}

fn run_zeta(t: &Target) -> Result<Outcome> {
    let (family, rank) = t.resolve()?;
    let mut factors = zeta::full_edge_zeta(family, rank)?;
    if t.orbit.is_some() {
        let keep = t.selected(factors.iter().map(|f| f.orbit.clone()).collect())?;
        factors.retain(|f| keep.contains(&f.orbit));
    }
    // B shares the formulas and labels of C
    let shown = if family == Family::B { Family::C } else { family };
    let format = match t.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Json => Format::Json,
    };
    Ok(Outcome { status: 0, stdout: zeta::emit_factored(shown, rank, &factors, format) })
}

fn run_verify(v: &VerifyArgs) -> Result<Outcome> {
    let (family, rank) = v.target.resolve()?;
    let n = match family {
        Family::A => rank + 1,
        Family::B | Family::C => rank,
        other => return Err(Error::NoClosedFormula(other)),
    };
    let sk = oracle::build_x2(family, n, v.q)?;
    let counts = oracle::closed_walk_counts(&sk, v.max_len as usize)?;
    let factors = zeta::full_edge_zeta(family, rank)?;
    let mut rows = Vec::new();
    for (i, got) in counts.iter().enumerate() {
        let l = i as u32 + 1;
        let (predicted, pass) = match zeta::predicted_closed_walks(&factors, l, Some(v.q)) {
            Ok(p) => (p.to_string(), &p == got),
            Err(e) => (format!("error: {e}"), false),
        };
        rows.push(VerifyRow { length: l, oracle: got.to_string(), predicted, pass });
    }
    let status = if rows.iter().all(|r| r.pass) { 0 } else { 1 };
    let shown = if family == Family::B { Family::C } else { family };
    let stdout = match v.target.format {
        OutputFormat::Json => to_json(&VerifyReport { family: shown, rank, q: v.q, rows }),
        OutputFormat::Text => {
            let mut s = String::new();
            for r in rows {
                let verdict = if r.pass { "PASS" } else { "FAIL" };
                writeln!(s, "L={} oracle={} predicted={} {verdict}", r.length, r.oracle, r.predicted)
                    .expect("write to string");
            }
            s
        }
    };
    Ok(Outcome { status, stdout })
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Orbits(t) => run_orbits(t, false),
        Command::Luo(t) => run_orbits(t, true),
        Command::Zeta(t) => run_zeta(t),
        Command::Verify(v) => run_verify(v),
    }
}

fn output_path(cli: &Cli) -> Option<&PathBuf> {
    match &cli.command {
        Command::Orbits(t) | Command::Luo(t) | Command::Zeta(t) => t.output.as_ref(),
        Command::Verify(v) => v.target.output.as_ref(),
    }
}

/// Parse arguments, run, write output; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(out) => {
            if let Some(path) = output_path(&cli) {
                if let Err(e) = std::fs::write(path, &out.stdout) {
                    eprintln!("bzeta: cannot write {}: {e}", path.display());
                    return 2;
                }
            } else {
                print!("{}", out.stdout);
            }
            out.status
        }
        Err(e) => {
            eprintln!("bzeta: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Outcome> {
        let cli = Cli::try_parse_from(std::iter::once("bzeta").chain(args.iter().copied())).unwrap();
        run(&cli)
    }

    #[test]
    fn family_parsing() {
        assert_eq!(parse_family("E8").unwrap(), (Family::E, Some(8)));
        assert_eq!(parse_family("c").unwrap(), (Family::C, None));
        assert!(parse_family("X3").is_err());
        assert!(parse_family("E8x").is_err());
    }

    #[test]
    fn luo_rows() {
        let out = run_args(&["luo", "--family", "G2"]).unwrap();
        assert_eq!(out.stdout, "1 → 2 → 1 | 6\n");
        let out = run_args(&["luo", "--family", "F", "--rank", "4", "--orbit", "4,1"]).unwrap();
        assert_eq!(out.stdout, "1 → 4 → 1 | 4\n");
    }

    #[test]
    fn orbit_rows() {
        let out = run_args(&["orbits", "--family", "A", "--rank", "2"]).unwrap();
        assert_eq!(out.stdout, "1 → 2 → 1\n");
    }

    #[test]
    fn json_round_trips() {
        let out = run_args(&["luo", "--family", "E6", "--format", "json"]).unwrap();
        let rep: OrbitsReport = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(to_json(&rep), out.stdout);
        assert_eq!(rep.orbits.len(), 5);
        let out = run_args(&["orbits", "--family", "D5", "--format", "json"]).unwrap();
        let rep: OrbitsReport = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(to_json(&rep), out.stdout);
        let out =
            run_args(&["verify", "--family", "A", "--rank", "2", "--q", "2", "--max-len", "6", "--format", "json"])
                .unwrap();
        let rep: VerifyReport = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(to_json(&rep), out.stdout);
        let out = run_args(&["zeta", "--family", "C2", "--format", "json"]).unwrap();
        let rep: zeta::ZetaReport = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(to_json(&rep), out.stdout);
    }

    #[test]
    fn out_of_scope() {
        assert_eq!(run_args(&["zeta", "--family", "E6"]).unwrap_err(), Error::NoClosedFormula(Family::E));
        assert!(matches!(
            run_args(&["verify", "--family", "A", "--rank", "5", "--q", "2", "--max-len", "4"]),
            Err(Error::OracleSizeOutOfRange(_))
        ));
        assert!(run_args(&["luo", "--family", "E"]).is_err());
        assert!(run_args(&["luo", "--family", "E8", "--rank", "7"]).is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(main_with_args(["bzeta", "zeta", "--family", "D", "--rank", "4"]), 2);
        assert_eq!(main_with_args(["bzeta", "luo"]), 2);
        assert_eq!(
            main_with_args(["bzeta", "verify", "--family", "C", "--rank", "2", "--q", "2", "--max-len", "8"]),
            0
        );
    }
}
