//! Closed-form spectral data of the edge zeta function for types A and C.
//!
//! Per type orbit `C` with `c = |C|` and `d = 2m/c`, every irreducible `χ`
//! with `n_χ > 0` contributes the factor
//! `∏_{ζ^d = 1} (1 − ζ q^{E/d} u^c)^{m(ζ) d_χ(q)}` to `1/Z`, where
//! `E = f_χ − 2ℓ(w_I)`.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{eigenvalue_power_sum, fmt_q_power, Eigenvalue};
use crate::luo::half_period;
use crate::symfunc::{self, Bipartition, Partition};
use crate::typeorbits::{NextType, TypeOrbit};
use crate::weyl::{Family, RootSystem};
use crate::{QPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Label {
    A(Partition),
    C(Bipartition),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::A(p) => write!(f, "{p}"),
            Label::C(b) => write!(f, "{b}"),
        }
    }
}

/// One irreducible's contribution to an orbit's zeta factor.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralLine {
    pub label: Label,
    /// `q^{E/d}`, the positive real root.
    pub eigenvalue_base: Eigenvalue,
    pub n_total: u64,
    pub degree: QPoly,
    /// unity index `k` (meaning `ζ = e^{2πik/d}`) → multiplicity; zeros omitted.
    pub splits: BTreeMap<u32, u64>,
}

impl SpectralLine {
    pub fn eigenvalues(&self) -> Vec<(Eigenvalue, u64)> {
        self.splits
            .iter()
            .map(|(&k, &m)| (self.eigenvalue_base.with_unity_index(k).expect("index below root order"), m))
            .collect()
    }

    /// `d_χ(q) · Σ_ζ m(ζ) (ζ q^{E/d})^l`.
    pub fn power_sum(&self, l: u32) -> Result<QPoly> {
        Ok(&self.degree * &eigenvalue_power_sum(&self.eigenvalues(), l)?)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZetaFactor {
    pub orbit: TypeOrbit,
    pub c: usize,
    pub m: usize,
    pub d: u32,
    pub lines: Vec<SpectralLine>,
}

fn orbit_data(rs: &RootSystem, start: (usize, usize)) -> Result<(TypeOrbit, usize, usize, u32)> {
    let orbit = NextType::new(rs).orbit_of(start)?;
    let m = half_period(rs, &orbit)?.m;
    let c = orbit.c();
    Ok((orbit, c, m, (2 * m / c) as u32))
}

/// Split `K` as evenly as possible over `1, ω, ω²` with `m(ω) = m(ω²)`;
/// the solution must be unique.
pub fn balanced_split(k: u64) -> Result<(u64, u64)> {
    let sols: Vec<(u64, u64)> = (0..=k / 2)
        .map(|w| (k - 2 * w, w))
        .filter(|&(one, w)| one.abs_diff(w) <= 1 && (one as i64 - w as i64).rem_euclid(3) == (k % 3) as i64)
        .collect();
    match sols.as_slice() {
        [only] => Ok(*only),
        _ => Err(Error::AmbiguousSplit(k)),
    }
}

fn row_weight(parts: &[u32]) -> i64 {
    parts.iter().map(|&p| p as i64 * (p as i64 - 1) / 2).sum()
}

/// Orbit of `GL_n` through the pair `(i, i+j)`, `n = i + j + k`.
pub fn type_a_component(n: usize, i: usize, j: usize, k: usize) -> Result<ZetaFactor> {
    if i == 0 || j == 0 || k == 0 || i + j + k != n {
        return Err(Error::InvalidComposition(format!("({i},{j},{k}) for n = {n}")));
    }
    let rs = RootSystem::build(Family::A, n - 1)?;
    let (orbit, c, m, d) = orbit_data(&rs, (i, i + j))?;
    let content = [i as u32, j as u32, k as u32];
    let wt = row_weight(&content);
    let base_f = (n * (n - 1) / 2) as i64;

    let mut lines = Vec::new();
    for lambda in symfunc::partitions(n as u32) {
        let kk = symfunc::kostka(&lambda, &content)?;
        if kk == 0 {
            continue;
        }
        let e = base_f + lambda.kappa() - 2 * wt;
        let splits: BTreeMap<u32, u64> = match d {
            1 => [(0, kk)].into(),
            3 => {
                let (one, w) = balanced_split(kk)?;
                [(0, one), (1, w), (2, w)].into_iter().filter(|&(_, m)| m > 0).collect()
            }
            other => return Err(Error::UnsupportedRootOrder(other)),
        };
        lines.push(SpectralLine {
            degree: symfunc::q_hook_dimension_a(&lambda)?,
            label: Label::A(lambda),
            eigenvalue_base: Eigenvalue::new(d, 0, e)?,
            n_total: kk,
            splits,
        });
    }
    Ok(ZetaFactor { orbit, c, m, d, lines })
}

/// `ℓ(w_I)` for `I = S − {s_i, s_{i+j}}` in `C_n`.
pub fn type_c_parabolic_length(i: usize, j: usize, k: usize) -> usize {
    i * (i - 1) / 2 + j * (j - 1) / 2 + k * k
}

/// `n_χ = Σ_{a≤i, b≤j} K_{λ,(a,b,k)} K_{μ,(i−a,j−b)}`.
pub fn type_c_multiplicity(bp: &Bipartition, i: u32, j: u32, k: u32) -> Result<u64> {
    let mut total = 0;
    for a in 0..=i {
        for b in 0..=j {
            if a + b + k != bp.plus.size() || (i - a) + (j - b) != bp.minus.size() {
                continue;
            }
            let kl = symfunc::kostka(&bp.plus, &[a, b, k])?;
            if kl == 0 {
                continue;
            }
            total += kl * symfunc::kostka(&bp.minus, &[i - a, j - b])?;
        }
    }
    Ok(total)
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `χ^{λ,μ}(u e_{W_I})` for the balanced orbit (`i = j`), `|μ|` even.
pub fn type_c_balanced_character(bp: &Bipartition, k: u32) -> i64 {
    let (l, mu) = (&bp.plus, &bp.minus);
    let half = (l.size() as i64 - k as i64) / 2;
    let (l2, l3) = (l.part(1) as i64, l.part(2) as i64);
    let a = l3.max(l2 + l3 - k as i64);
    let b = l2.min(half).min(2 * half - l2);
    sign(mu.size() as i64 / 2 + mu.part(0) as i64) * (sign(a) + sign(b)) / 2
}

/// Orbit of `Sp_2n` through `(i, i+j)` with `1 ≤ i ≤ j`, `i + j ≤ n`.
pub fn type_c_component(n: usize, i: usize, j: usize) -> Result<ZetaFactor> {
    if i == 0 || i > j || i + j > n {
        return Err(Error::InvalidComposition(format!("(i,j) = ({i},{j}) for n = {n}")));
    }
    let k = n - i - j;
    let rs = RootSystem::build(Family::C, n)?;
    let (orbit, c, m, d) = orbit_data(&rs, (i, i + j))?;
    let len_wi = type_c_parabolic_length(i, j, k) as i64;

    let mut lines = Vec::new();
    for bp in symfunc::bipartitions(n as u32) {
        let nn = type_c_multiplicity(&bp, i as u32, j as u32, k as u32)?;
        if nn == 0 {
            continue;
        }
        let (lsize, msize) = (bp.plus.size() as i64, bp.minus.size() as i64);
        let f = (n * n) as i64 + lsize - msize + 2 * (bp.plus.kappa() + bp.minus.kappa());
        let e = f - 2 * len_wi;
        let odd = msize % 2 == 1;
        let splits: BTreeMap<u32, u64> = match d {
            // u = w_0 acts by (−1)^{|μ|}
            2 => [(odd as u32, nn)].into(),
            4 if odd => {
                if nn % 2 == 1 {
                    return Err(Error::SplitParityViolated(bp.to_string()));
                }
                [(1, nn / 2), (3, nn / 2)].into()
            }
            4 => {
                let eps = type_c_balanced_character(&bp, k as u32);
                let (plus, minus) = (nn as i64 + eps, nn as i64 - eps);
                if plus.is_odd() || minus < 0 {
                    return Err(Error::SplitParityViolated(bp.to_string()));
                }
                [(0, plus as u64 / 2), (2, minus as u64 / 2)].into_iter().filter(|&(_, m)| m > 0).collect()
            }
            other => return Err(Error::UnsupportedRootOrder(other)),
        };
        lines.push(SpectralLine {
            degree: symfunc::generic_degree_c(&bp)?,
            label: Label::C(bp),
            eigenvalue_base: Eigenvalue::new(d, 0, e)?,
            n_total: nn,
            splits,
        });
    }
    Ok(ZetaFactor { orbit, c, m, d, lines })
}

/// One factor per type orbit. B is treated as C; D, E, F, G have no closed
/// formula here.
pub fn full_edge_zeta(family: Family, rank: usize) -> Result<Vec<ZetaFactor>> {
    let (fam, n) = match family {
        Family::A => (Family::A, rank + 1),
        Family::B | Family::C => (Family::C, rank),
        other => return Err(Error::NoClosedFormula(other)),
    };
    let rs = RootSystem::build(fam, rank)?;
    let mut out = Vec::new();
    for orbit in NextType::new(&rs).enumerate() {
        // the smallest pair of an orbit is (i, i+j): i = min(i,j) for C
        let (a, b) = orbit.start();
        if a >= b {
            return Err(Error::InvalidComposition(format!("unexpected orbit start ({a},{b})")));
        }
        let factor = match fam {
            Family::A => type_a_component(n, a, b - a, n - b)?,
            _ => type_c_component(n, a, b - a)?,
        };
        out.push(factor);
    }
    Ok(out)
}

/// `Σ_{C : c | L} c · Σ_χ d_χ(q) Σ_ζ m(ζ) (ζ q^{E/d})^{L/c}` as a polynomial
/// in `q`.
pub fn predicted_closed_walks_poly(factors: &[ZetaFactor], l: u32) -> Result<QPoly> {
    let mut total = QPoly::zero();
    for f in factors {
        if !(l as usize).is_multiple_of(f.c) {
            continue;
        }
        let per = (l as usize / f.c) as u32;
        let mut orbit_sum = QPoly::zero();
        for line in &f.lines {
            orbit_sum = &orbit_sum + &line.power_sum(per)?;
        }
        total = &total + &orbit_sum.scale(&Rational::from_integer(BigInt::from(f.c)));
    }
    Ok(total)
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
    let mut x = q;
    while x.is_multiple_of(p) {
        x /= p;
    }
    x == 1
}

/// Predicted number of closed walks of length `l` in the geodesic edge graph
/// at a concrete prime power `q`.
pub fn predicted_closed_walks(factors: &[ZetaFactor], l: u32, q: Option<u64>) -> Result<BigInt> {
    let q = q.ok_or(Error::NeedsConcreteQ)?;
    if !is_prime_power(q) {
        return Err(Error::NotPrimePower(q));
    }
    if l == 0 {
        return Err(Error::Parse("walk length must be positive".into()));
    }
    let value = predicted_closed_walks_poly(factors, l)?.eval(&Rational::from_integer(BigInt::from(q)))?;
    if !value.is_integer() || value.is_negative() {
        return Err(Error::NonIntegralCount(value.to_string()));
    }
    Ok(value.to_integer())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// `1 − ζ x` written as `1-`, `1+`, `1-i*`, `1+i*`, `1-ω*`, `1-ω²*`.
fn zeta_prefix(d: u32, k: u32) -> &'static str {
    match (d, k) {
        (_, 0) => "1-",
        (2, 1) | (4, 2) => "1+",
        (4, 1) => "1-i*",
        (4, 3) => "1+i*",
        (3, 1) => "1-ω*",
        (3, 2) => "1-ω²*",
        _ => "1-?*",
    }
}

fn line_text(line: &SpectralLine, c: usize) -> String {
    let ev = line.eigenvalue_base;
    let qp = fmt_q_power(ev.q_exp_num(), ev.root_order(), true);
    let factor = |k: u32| format!("({}{}*u^{})", zeta_prefix(ev.root_order(), k), qp, c);
    // group unity indices sharing a multiplicity, groups ordered by their
    // smallest index, members by descending index
    let mut groups: Vec<(u64, Vec<u32>)> = Vec::new();
    for (&k, &m) in &line.splits {
        match groups.iter_mut().find(|(gm, _)| *gm == m) {
            Some((_, ks)) => ks.push(k),
            None => groups.push((m, vec![k])),
        }
    }
    let parts: Vec<String> = groups
        .into_iter()
        .map(|(m, mut ks)| {
            ks.sort_unstable_by(|a, b| b.cmp(a));
            let body: String = ks.iter().map(|&k| factor(k)).collect();
            let body = if ks.len() > 1 { format!("({body})") } else { body };
            format!("{body}^{{[{m}]×[{}]}}", line.degree)
        })
        .collect();
    format!("{}  {}", line.label, parts.join(" "))
}

/// Factored `1/Z` in text or JSON form.
pub fn emit_factored(family: Family, rank: usize, factors: &[ZetaFactor], format: Format) -> String {
    match format {
        Format::Json => {
            let report = ZetaReport::from_factors(family, rank, factors);
            serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
        }
        Format::Text => {
            if factors.is_empty() {
                return "1\n".to_string();
            }
            let mut out = String::new();
            for f in factors {
                let _ = writeln!(out, "# {}_{} orbit {}  c={} m={} d={}", family, rank, f.orbit, f.c, f.m, f.d);
                for line in &f.lines {
                    let _ = writeln!(out, "{}", line_text(line, f.c));
                }
            }
            out
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QExp {
    pub num: i64,
    pub den: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineReport {
    pub lambda: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<u32>>,
    pub q_exp: QExp,
    pub n: u64,
    pub splits: BTreeMap<String, u64>,
    pub degree: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub cycle: Vec<usize>,
    pub c: usize,
    pub m: usize,
    pub d: u32,
    pub lines: Vec<LineReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaReport {
    pub family: Family,
    pub rank: usize,
    pub orbits: Vec<OrbitReport>,
}

impl ZetaReport {
    pub fn from_factors(family: Family, rank: usize, factors: &[ZetaFactor]) -> Self {
        let orbits = factors
            .iter()
            .map(|f| OrbitReport {
                cycle: f.orbit.cycle().to_vec(),
                c: f.c,
                m: f.m,
                d: f.d,
                lines: f
                    .lines
                    .iter()
                    .map(|l| {
                        let (lambda, mu) = match &l.label {
                            Label::A(p) => (p.parts().to_vec(), None),
                            Label::C(b) => (b.plus.parts().to_vec(), Some(b.minus.parts().to_vec())),
                        };
                        LineReport {
                            lambda,
                            mu,
                            q_exp: QExp { num: l.eigenvalue_base.q_exp_num(), den: l.eigenvalue_base.root_order() },
                            n: l.n_total,
                            splits: l.splits.iter().map(|(k, m)| (k.to_string(), *m)).collect(),
                            degree: l.degree.to_string(),
                        }
                    })
                    .collect(),
            })
            .collect();
        Self { family, rank, orbits }
    }
}

/// `λ^d = q^E` with `E` integral for every emitted eigenvalue.
pub fn check_main_theorem(factor: &ZetaFactor) -> bool {
    factor.lines.iter().all(|l| {
        l.eigenvalues().iter().all(|(ev, _)| {
            let (z, qp) = ev.pow::<Rational>(ev.root_order());
            z.to_real() == Some(Rational::one())
                && qp.eval(&Rational::from_integer(2.into())).is_ok()
                && qp == QPoly::monomial(Rational::one(), ev.pow_root_order(), 1)
        })
    })
}
