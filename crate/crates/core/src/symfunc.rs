//! Partition combinatorics: Kostka numbers, one-row Pieri coefficients,
//! κ-statistics, q-hook dimensions for GL_n, defect-1 symbols and the
//! hook-cohook generic degrees of Sp_2n.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{QPoly, Rational};

/// A partition, parts positive and weakly decreasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self { parts })
    }

    /// Sort a composition and drop zero parts.
    pub fn from_composition(comp: &[u32]) -> Self {
        let mut parts: Vec<u32> = comp.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0) as usize;
        let parts = (0..width).map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as u32).collect();
        Self { parts }
    }

    /// `Σ C(λ_i, 2) − Σ C(λ'_j, 2)`.
    pub fn kappa(&self) -> i64 {
        let rows: i64 = self.parts.iter().map(|&p| binom2(p as i64)).sum();
        let cols: i64 = self.conjugate().parts.iter().map(|&p| binom2(p as i64)).sum();
        rows - cols
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> u32 {
        self.parts.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }

    /// Hook lengths of all boxes, row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                out.push(row - j as u32 + conj.parts[j] - i as u32 - 1);
            }
        }
        out
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Dimension of the Specht module, by the hook length formula.
    pub fn dimension(&self) -> BigInt {
        let mut num = factorial(self.size());
        for h in self.hook_lengths() {
            num /= BigInt::from(h);
        }
        num
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bad partition {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad partition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// All partitions of `n` in lexicographically increasing order of parts.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// A pair of partitions `(λ, μ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    pub plus: Partition,
    pub minus: Partition,
}

impl Bipartition {
    pub fn new(plus: Partition, minus: Partition) -> Self {
        Self { plus, minus }
    }

    pub fn size(&self) -> u32 {
        self.plus.size() + self.minus.size()
    }
}

/// Table order: by `|λ|`, then `λ`, then `μ`, each lexicographically.
impl Ord for Bipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.plus.size(), &self.plus, &self.minus).cmp(&(other.plus.size(), &other.plus, &other.minus))
    }
}

impl PartialOrd for Bipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.plus, self.minus)
    }
}

/// All bipartitions of `n` in table order.
pub fn bipartitions(n: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for a in 0..=n {
        for l in partitions(a) {
            for m in partitions(n - a) {
                out.push(Bipartition::new(l.clone(), m));
            }
        }
    }
    out.sort();
    out
}

/// Kostka number by filling the Young diagram box by box with a
/// semistandard tableau of the given content.
pub fn kostka(lambda: &Partition, content: &[u32]) -> Result<u64> {
    let total: u32 = content.iter().sum();
    if total != lambda.size() {
        return Err(Error::SizeMismatch(lambda.size(), total));
    }
    let cells: Vec<(usize, usize)> =
        lambda.parts.iter().enumerate().flat_map(|(i, &r)| (0..r as usize).map(move |j| (i, j))).collect();
    let width = lambda.part(0) as usize;
    let mut grid = vec![vec![0usize; width]; lambda.len()];
    let mut remaining = content.to_vec();

    fn fill(idx: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, remaining: &mut Vec<u32>) -> u64 {
        let Some(&(i, j)) = cells.get(idx) else { return 1 };
        // entries are 1-based letters
        let lo_row = if j > 0 { grid[i][j - 1] } else { 1 };
        let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
        let lo = lo_row.max(lo_col);
        let mut count = 0;
        for v in lo..=remaining.len() {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            grid[i][j] = v;
            count += fill(idx + 1, cells, grid, remaining);
            remaining[v - 1] += 1;
        }
        grid[i][j] = 0;
        count
    }
    Ok(fill(0, &cells, &mut grid, &mut remaining))
}

/// `c^ν_{μ,(k)}`: 1 when `ν/μ` is a horizontal strip of size `k`, else 0.
pub fn pieri_coefficient(nu: &Partition, mu: &Partition, k: u32) -> Result<u32> {
    if nu.size() != mu.size() + k {
        return Err(Error::SizeMismatch(nu.size(), mu.size() + k));
    }
    // interlacing ν_1 ≥ μ_1 ≥ ν_2 ≥ μ_2 ≥ …
    let ok = (0..nu.len().max(mu.len())).all(|i| nu.part(i) >= mu.part(i) && mu.part(i) >= nu.part(i + 1));
    Ok(ok as u32)
}

/// Kostka number as the number of chains `∅ ⊂ ν¹ ⊂ ⋯ ⊂ λ` whose successive
/// differences are horizontal strips of the given sizes.
pub fn kostka_via_pieri(lambda: &Partition, content: &[u32]) -> Result<u64> {
    let total: u32 = content.iter().sum();
    if total != lambda.size() {
        return Err(Error::SizeMismatch(lambda.size(), total));
    }
    fn rec(cur: &Partition, content: &[u32], lambda: &Partition) -> u64 {
        let Some((&k, rest)) = content.split_first() else {
            return (cur == lambda) as u64;
        };
        // candidates: partitions between cur and lambda of size |cur| + k
        let mut count = 0;
        for next in strips_within(cur, lambda, k) {
            count += rec(&next, rest, lambda);
        }
        count
    }
    Ok(rec(&Partition::empty(), content, lambda))
}

/// Partitions `ν ⊆ bound` with `ν/cur` a horizontal strip of size `k`, found
/// by trying every row-increment vector and filtering with
/// [`pieri_coefficient`].
fn strips_within(cur: &Partition, bound: &Partition, k: u32) -> Vec<Partition> {
    let rows = bound.len();
    let mut out = Vec::new();
    let mut parts: Vec<u32> = (0..rows).map(|i| cur.part(i)).collect();
    fn rec(
        i: usize,
        left: u32,
        parts: &mut Vec<u32>,
        cur: &Partition,
        bound: &Partition,
        k: u32,
        out: &mut Vec<Partition>,
    ) {
        if i == parts.len() {
            if left == 0 && parts.windows(2).all(|w| w[0] >= w[1]) {
                let p = Partition::from_composition(parts);
                if pieri_coefficient(&p, cur, k) == Ok(1) {
                    out.push(p);
                }
            }
            return;
        }
        let base = cur.part(i);
        for add in 0..=left.min(bound.part(i).saturating_sub(base)) {
            parts[i] = base + add;
            rec(i + 1, left - add, parts, cur, bound, k, out);
        }
        parts[i] = base;
    }
    rec(0, k, &mut parts, cur, bound, k, &mut out);
    out
}

/// `q^{n(λ)} ∏_{i≤n}(q^i − 1) / ∏_{boxes}(q^{h} − 1)`.
pub fn q_hook_dimension_a(lambda: &Partition) -> Result<QPoly> {
    let one = Rational::one();
    let q_minus_one = |e: u32| QPoly::from_terms(1, [(e as i64, one.clone()), (0, -one.clone())]);
    let num: QPoly = (1..=lambda.size()).map(q_minus_one).product();
    let den: QPoly = lambda.hook_lengths().into_iter().map(q_minus_one).product();
    Ok(num.div_exact(&den)?.shift(lambda.n_stat() as i64, 1))
}

/// Defect-1 symbol `(X, Y)` with `|X| = k`, `|Y| = k − 1`; both stored
/// decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symbol {
    pub x: Vec<i64>,
    pub y: Vec<i64>,
}

pub fn min_symbol_k(bp: &Bipartition) -> usize {
    bp.plus.len().max(bp.minus.len() + 1)
}

pub fn symbol_of(bp: &Bipartition, k: usize) -> Result<Symbol> {
    let min = min_symbol_k(bp);
    if k < min {
        return Err(Error::SymbolTooSmall { k, min });
    }
    let x = (1..=k).map(|i| bp.plus.part(i - 1) as i64 - i as i64 + k as i64).collect();
    let y = (1..k).map(|j| bp.minus.part(j - 1) as i64 - j as i64 + k as i64 - 1).collect();
    Ok(Symbol { x, y })
}

impl Symbol {
    fn pairs(from: &[i64], avoid: &[i64]) -> Vec<(i64, i64)> {
        let avoid: BTreeSet<i64> = avoid.iter().copied().collect();
        let mut out = Vec::new();
        for &c in from {
            for b in 0..c {
                if !avoid.contains(&b) {
                    out.push((b, c));
                }
            }
        }
        out
    }

    /// `(b, c)` with `b < c` and `c ∈ X, b ∉ X` or `c ∈ Y, b ∉ Y`.
    pub fn hooks(&self) -> Vec<(i64, i64)> {
        let mut h = Self::pairs(&self.x, &self.x);
        h.extend(Self::pairs(&self.y, &self.y));
        h
    }

    /// `(b, c)` with `b < c` and `c ∈ X, b ∉ Y` or `c ∈ Y, b ∉ X`.
    pub fn cohooks(&self) -> Vec<(i64, i64)> {
        let mut h = Self::pairs(&self.x, &self.y);
        h.extend(Self::pairs(&self.y, &self.x));
        h
    }

    /// Sum of `min` over all 2-element selections of the multiset `X ⊔ Y`,
    /// minus `Σ_{i≥1} C(|X|+|Y|−2i, 2)`.
    pub fn a_stat(&self) -> i64 {
        let mut all: Vec<i64> = self.x.iter().chain(&self.y).copied().collect();
        all.sort_unstable();
        let len = all.len() as i64;
        let mins: i64 = all.iter().enumerate().map(|(i, &v)| v * (len - 1 - i as i64)).sum();
        let correction: i64 = (1..).map(|i| len - 2 * i).take_while(|&m| m >= 2).map(binom2).sum();
        mins - correction
    }

    /// `⌊(|X|+|Y|−1)/2⌋ − |X ∩ Y|`.
    pub fn b_stat(&self) -> i64 {
        let common = self.x.iter().filter(|v| self.y.contains(v)).count() as i64;
        (self.x.len() as i64 + self.y.len() as i64 - 1) / 2 - common
    }
}

/// Hook-cohook generic degree using the symbol with parameter `k`.
pub fn generic_degree_c_with_k(bp: &Bipartition, k: usize) -> Result<QPoly> {
    let s = symbol_of(bp, k)?;
    let n = bp.size() as i64;
    let one = Rational::one();
    let binom = |e: i64, sign: i64| QPoly::from_terms(1, [(e, one.clone()), (0, Rational::from_integer(sign.into()))]);
    let num: QPoly = (1..=n).map(|i| binom(2 * i, -1)).product();
    let den: QPoly = s
        .hooks()
        .into_iter()
        .map(|(b, c)| binom(c - b, -1))
        .chain(s.cohooks().into_iter().map(|(b, c)| binom(c - b, 1)))
        .product();
    let two_b = Rational::from_integer(BigInt::from(2).pow(s.b_stat() as u32));
    Ok(num.div_exact(&den)?.shift(s.a_stat(), 1).scale(&(one / two_b)))
}

/// Generic degree of the unipotent character of `Sp_2n(q)` labelled by `bp`.
pub fn generic_degree_c(bp: &Bipartition) -> Result<QPoly> {
    generic_degree_c_with_k(bp, min_symbol_k(bp))
}

/// `C(n, |μ|) · dim S^λ · dim S^μ`, the degree of the hyperoctahedral
/// character.
pub fn wn_dimension(bp: &Bipartition) -> BigInt {
    binomial(bp.size(), bp.minus.size()) * bp.plus.dimension() * bp.minus.dimension()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn bp(l: &str, m: &str) -> Bipartition {
        Bipartition::new(p(l), p(m))
    }

    fn poly(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    #[test]
    fn kappa_and_conjugate() {
        assert_eq!(p("(3)").kappa(), 3);
        assert_eq!(p("(1,1,1)").kappa(), -3);
        assert_eq!(p("(2,2)").kappa(), 0);
        assert_eq!(p("(3,1)").conjugate(), p("(2,1,1)"));
        for n in 0..=7 {
            for l in partitions(n) {
                assert_eq!(l.conjugate().kappa(), -l.kappa());
            }
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p("(2,1)"), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(kostka(&p("(1,1)"), &[2]).unwrap(), 0);
        assert_eq!(kostka(&p("(3,2)"), &[3, 2]).unwrap(), 1);
        assert_eq!(kostka(&p("(2)"), &[1, 0, 1]).unwrap(), 1);
        assert!(matches!(kostka(&p("(2)"), &[1]), Err(Error::SizeMismatch(2, 1))));
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_coefficient(&p("(3,1)"), &p("(2,1)"), 1).unwrap(), 1);
        assert_eq!(pieri_coefficient(&p("(2,2)"), &p("(1,1)"), 2).unwrap(), 0);
        // s_1 h_2 = s_3 + s_21, so (2,1)/(1) is a horizontal 2-strip
        assert_eq!(pieri_coefficient(&p("(2,1)"), &p("(1)"), 2).unwrap(), 1);
        assert!(pieri_coefficient(&p("(2,1)"), &p("(1)"), 1).is_err());
    }

    #[test]
    fn pieri_matches_skew_tableau_count() {
        // a one-row LR coefficient counts fillings of ν/μ by a single letter
        for n in 0..=6 {
            for nu in partitions(n) {
                for m in 0..=n {
                    for mu in partitions(m) {
                        // at most one box of ν/μ per column
                        let (nc, mc) = (nu.conjugate(), mu.conjugate());
                        let strip =
                            nu.contains(&mu) && (0..nc.len()).all(|j| nc.part(j) - mc.part(j).min(nc.part(j)) <= 1);
                        assert_eq!(pieri_coefficient(&nu, &mu, n - m).unwrap(), strip as u32);
                    }
                }
            }
        }
    }

    #[test]
    fn q_hook_examples() {
        assert_eq!(q_hook_dimension_a(&p("(3)")).unwrap(), QPoly::one());
        assert_eq!(q_hook_dimension_a(&p("(1,1,1)")).unwrap(), poly("q^3"));
        assert_eq!(q_hook_dimension_a(&p("(2,1)")).unwrap(), poly("q^2+q"));
        for n in 1..=7 {
            for l in partitions(n) {
                let at1 = q_hook_dimension_a(&l).unwrap().eval(&Rational::one()).unwrap();
                assert_eq!(at1, Rational::from_integer(l.dimension()));
            }
        }
    }

    #[test]
    fn symbol_example() {
        let b = bp("(2,2)", "()");
        let s = symbol_of(&b, 2).unwrap();
        assert_eq!(s, Symbol { x: vec![3, 2], y: vec![0] });
        let hooks: BTreeSet<_> = s.hooks().into_iter().collect();
        assert_eq!(hooks, [(0, 3), (1, 3), (0, 2), (1, 2)].into_iter().collect());
        let cohooks: BTreeSet<_> = s.cohooks().into_iter().collect();
        assert_eq!(cohooks, [(1, 3), (2, 3), (1, 2)].into_iter().collect());
        assert_eq!((s.a_stat(), s.b_stat()), (2, 1));
        assert_eq!(symbol_of(&b, 1), Err(Error::SymbolTooSmall { k: 1, min: 2 }));
    }

    #[test]
    fn generic_degree_examples() {
        let expect = &(&poly("1/2*q^2") * &poly("q^2-q+1")) * &poly("q^6+q^4+q^2+1");
        let d = generic_degree_c(&bp("(2,2)", "()")).unwrap();
        assert_eq!(d, expect);
        assert_eq!(d.eval(&Rational::one()).unwrap(), Rational::from_integer(2.into()));
        assert_eq!(generic_degree_c(&bp("()", "(1,1)")).unwrap(), poly("q^4"));
        assert_eq!(generic_degree_c(&bp("(1)", "(1)")).unwrap(), &poly("1/2*q") * &poly("q^2+2*q+1"));
    }

    #[test]
    fn generic_degree_independent_of_k() {
        for n in 0..=5 {
            for b in bipartitions(n) {
                let k = min_symbol_k(&b);
                assert_eq!(generic_degree_c_with_k(&b, k).unwrap(), generic_degree_c_with_k(&b, k + 1).unwrap(), "{b}");
            }
        }
    }

    #[test]
    fn wn_dimension_examples() {
        assert_eq!(wn_dimension(&bp("(2,2)", "()")), 2.into());
        assert_eq!(wn_dimension(&bp("(1)", "(1)")), 2.into());
        assert_eq!(wn_dimension(&bp("(4)", "()")), 1.into());
    }

    #[test]
    fn bipartition_order_matches_tables() {
        let labels: Vec<String> = bipartitions(2).iter().map(|b| b.to_string()).collect();
        assert_eq!(labels, ["((),(1,1))", "((),(2))", "((1),(1))", "((1,1),())", "((2),())"]);
    }

    #[test]
    fn partition_rejects_bad_input() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(partitions(4).len(), 5);
    }
}
