//! Orbits of the next-type map `next(r,s) = (s, w_{S-{s}} r w_{S-{s}})` on
//! ordered pairs of distinct node labels.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::{RootSystem, WeylElement};

/// A closed cycle `[t0, t1, …, tc]` with `tc = t0`; its pairs are
/// `(t_i, t_{i+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeOrbit {
    cycle: Vec<usize>,
}

impl TypeOrbit {
    /// Wrap a closed label cycle; the last label must repeat the first.
    pub fn from_cycle(cycle: Vec<usize>) -> Result<Self> {
        if cycle.len() < 3 || cycle.first() != cycle.last() {
            return Err(Error::Parse(format!("not a closed cycle: {cycle:?}")));
        }
        Ok(Self { cycle })
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    /// Number of ordered pairs in the orbit.
    pub fn c(&self) -> usize {
        self.cycle.len() - 1
    }

    pub fn start(&self) -> (usize, usize) {
        (self.cycle[0], self.cycle[1])
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cycle.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn contains(&self, pair: (usize, usize)) -> bool {
        self.pairs().any(|p| p == pair)
    }

    /// True when both describe the same cycle up to the starting point.
    pub fn same_cycle(&self, other: &[usize]) -> bool {
        cyclic_eq(&self.cycle, other)
    }
}

impl fmt::Display for TypeOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cycle.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(" → "))
    }
}

/// Compare two closed cycles `[t0..tc]` (with `tc = t0`) up to rotation.
pub fn cyclic_eq(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() || a.len() < 2 {
        return false;
    }
    let a = &a[..a.len() - 1];
    let b = &b[..b.len() - 1];
    (0..a.len()).any(|shift| (0..a.len()).all(|i| a[(i + shift) % a.len()] == b[i]))
}

/// The next-type map with the longest elements `w_{S-{s}}` precomputed.
pub struct NextType<'a> {
    rs: &'a RootSystem,
    complements: Vec<WeylElement>,
}

impl<'a> NextType<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        let complements = rs.labels().iter().map(|&s| rs.longest_complement(&[s]).expect("valid label")).collect();
        Self { rs, complements }
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    /// `w_{S-{s}}`.
    pub fn complement(&self, s: usize) -> Result<&WeylElement> {
        self.rs.simple_root_index(s)?;
        Ok(&self.complements[s - 1])
    }

    pub fn next(&self, (r, s): (usize, usize)) -> Result<(usize, usize)> {
        if r == s {
            return Err(Error::EqualLabels(r));
        }
        let t = self.rs.conjugated_simple(self.complement(s)?, r)?;
        Ok((s, t))
    }

    /// Inverse of [`NextType::next`]; `w_{S-{s}}` is an involution.
    pub fn prev(&self, (s, t): (usize, usize)) -> Result<(usize, usize)> {
        if s == t {
            return Err(Error::EqualLabels(s));
        }
        let r = self.rs.conjugated_simple(self.complement(s)?, t)?;
        Ok((r, s))
    }

    /// The orbit through `pair`, reported from its lexicographically
    /// smallest pair.
    pub fn orbit_of(&self, pair: (usize, usize)) -> Result<TypeOrbit> {
        let mut pairs = vec![pair];
        let mut cur = self.next(pair)?;
        while cur != pair {
            pairs.push(cur);
            cur = self.next(cur)?;
        }
        let start = pairs.iter().enumerate().min_by_key(|(_, p)| **p).map(|(i, _)| i).unwrap();
        pairs.rotate_left(start);
        let mut cycle: Vec<usize> = pairs.iter().map(|p| p.0).collect();
        cycle.push(pairs[0].0);
        Ok(TypeOrbit { cycle })
    }

    /// All orbits, sorted by their smallest pair; together they partition
    /// the `n(n-1)` ordered pairs.
    pub fn enumerate(&self) -> Vec<TypeOrbit> {
        let labels = self.rs.labels();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &r in &labels {
            for &s in &labels {
                if r == s || seen.contains(&(r, s)) {
                    continue;
                }
                let orbit = self.orbit_of((r, s)).expect("distinct valid labels");
                seen.extend(orbit.pairs());
                out.push(orbit);
            }
        }
        out.sort_by_key(|o| o.start());
        out
    }
}

pub fn next_type(rs: &RootSystem, pair: (usize, usize)) -> Result<(usize, usize)> {
    NextType::new(rs).next(pair)
}

pub fn prev_type(rs: &RootSystem, pair: (usize, usize)) -> Result<(usize, usize)> {
    NextType::new(rs).prev(pair)
}

pub fn enumerate_orbits(rs: &RootSystem) -> Vec<TypeOrbit> {
    NextType::new(rs).enumerate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::Family;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::build(f, n).unwrap()
    }

    #[test]
    fn next_examples() {
        assert_eq!(next_type(&rs(Family::A, 5), (1, 2)).unwrap(), (2, 1));
        assert_eq!(next_type(&rs(Family::C, 5), (1, 2)).unwrap(), (2, 1));
        assert_eq!(next_type(&rs(Family::D, 5), (1, 4)).unwrap(), (4, 5));
        assert_eq!(next_type(&rs(Family::A, 3), (2, 2)), Err(Error::EqualLabels(2)));
    }

    #[test]
    fn orbit_counts() {
        let a5: Vec<usize> = enumerate_orbits(&rs(Family::A, 5)).iter().map(|o| o.c()).collect();
        assert_eq!(a5, vec![6, 6, 6, 2]);
        assert_eq!(enumerate_orbits(&rs(Family::E, 7)).len(), 10);
        let g2 = enumerate_orbits(&rs(Family::G, 2));
        assert_eq!(g2.len(), 1);
        assert_eq!(g2[0].c(), 2);
        assert_eq!(g2[0].to_string(), "1 → 2 → 1");
    }

    #[test]
    fn type_a_orbit_shape() {
        for n in 3..=9usize {
            let sys = rs(Family::A, n - 1);
            let nt = NextType::new(&sys);
            for i in 1..n {
                for j in 1..n - i {
                    let k = n - i - j;
                    let orbit = nt.orbit_of((i, i + j)).unwrap();
                    let expect = [(i, i + j), (i + j, j), (j, j + k), (j + k, k), (k, k + i), (k + i, i)];
                    let got: BTreeSet<_> = orbit.pairs().collect();
                    let want: BTreeSet<_> = expect.into_iter().collect();
                    assert_eq!(got, want);
                    assert_eq!(orbit.c(), if i == j && j == k { 2 } else { 6 });
                }
            }
        }
    }

    #[test]
    fn cyclic_comparison() {
        assert!(cyclic_eq(&[1, 2, 3, 1], &[2, 3, 1, 2]));
        assert!(!cyclic_eq(&[1, 2, 3, 1], &[1, 3, 2, 1]));
    }
}
