//! Finite crystallographic root systems and their Weyl groups.
//!
//! Roots are integer vectors in the basis of simple roots. Positive roots come
//! first (by height, then lexicographically), followed by their negatives in
//! the same order, so root `k < N` has negative `k + N`. A Weyl element is the
//! permutation it induces on this list.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// Cartan matrix `a[i][j] = <α_i^∨, α_j>` in the node labelling of the
/// classical diagrams (double bond at the far end `(n-1, n)`, D branching
/// at `n-2`) and the Bourbaki labelling for E, F, G.
fn cartan_matrix(family: Family, n: usize) -> Result<Vec<Vec<i64>>> {
    let supported = match family {
        Family::A => n >= 1,
        Family::B | Family::C => n >= 2,
        Family::D => n >= 3,
        Family::E => (6..=8).contains(&n),
        Family::F => n == 4,
        Family::G => n == 2,
    };
    if !supported {
        return Err(Error::UnsupportedRootSystem { family, rank: n });
    }
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    match family {
        Family::A | Family::B | Family::C => {
            for i in 1..n {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 1..n - 1 {
                link(i, i + 1);
            }
            link(n - 2, n);
        }
        Family::E => {
            link(1, 3);
            link(2, 4);
            for i in 3..n {
                link(i, i + 1);
            }
        }
        Family::F => {
            link(1, 2);
            link(2, 3);
            link(3, 4);
        }
        Family::G => link(1, 2),
    }
    match family {
        // α_n long
        Family::C => a[n - 2][n - 1] = -2,
        // α_n short
        Family::B => a[n - 1][n - 2] = -2,
        Family::F => a[2][1] = -2,
        Family::G => a[0][1] = -3,
        _ => {}
    }
    Ok(a)
}

/// A Weyl group element as a permutation of the root list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: Vec<u32>,
}

impl WeylElement {
    pub fn identity(num_roots: usize) -> Self {
        Self { perm: (0..num_roots as u32).collect() }
    }

    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    /// Index of the image of root `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.perm[k] as usize
    }

    /// `self · other`, acting as `other` first.
    pub fn multiply(&self, other: &Self) -> Self {
        Self { perm: other.perm.iter().map(|&k| self.perm[k as usize]).collect() }
    }

    pub fn invert(&self) -> Self {
        let mut inv = vec![0u32; self.perm.len()];
        for (k, &img) in self.perm.iter().enumerate() {
            inv[img as usize] = k as u32;
        }
        Self { perm: inv }
    }

    /// Number of positive roots sent to negative ones.
    pub fn length(&self) -> usize {
        let npos = self.perm.len() / 2;
        self.perm[..npos].iter().filter(|&&k| k as usize >= npos).count()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &v)| k == v as usize)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.perm.len());
        for _ in 0..e {
            acc = acc.multiply(self);
        }
        acc
    }

    /// Smallest `k ≥ 1` with `self^k = 1`.
    pub fn order(&self) -> u32 {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.multiply(self);
            k += 1;
        }
        k
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    num_positive: usize,
    simple_indices: Vec<usize>,
    reflections: Vec<WeylElement>,
}

impl RootSystem {
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        let cartan = cartan_matrix(family, rank)?;
        let n = rank;
        let reflect = |beta: &[i64], i: usize| -> Vec<i64> {
            let pairing: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
            let mut out = beta.to_vec();
            out[i] -= pairing;
            out
        };

        let simple: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        let mut seen: HashMap<Vec<i64>, ()> = simple.iter().map(|v| (v.clone(), ())).collect();
        let mut queue: VecDeque<Vec<i64>> = simple.iter().cloned().collect();
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let img = reflect(&beta, i);
                if !seen.contains_key(&img) {
                    seen.insert(img.clone(), ());
                    queue.push_back(img);
                }
            }
        }
        let mut positives: Vec<Vec<i64>> = seen.into_keys().filter(|v| v.iter().all(|&x| x >= 0)).collect();
        positives.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });
        let num_positive = positives.len();
        let mut roots = positives.clone();
        roots.extend(positives.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()));
        let index: HashMap<Vec<i64>, usize> = roots.iter().enumerate().map(|(k, v)| (v.clone(), k)).collect();
        let simple_indices: Vec<usize> = simple.iter().map(|v| index[v]).collect();

        let reflections = (0..n)
            .map(|i| WeylElement { perm: roots.iter().map(|beta| index[&reflect(beta, i)] as u32).collect() })
            .collect();

        Ok(Self { family, rank, cartan, roots, index, num_positive, simple_indices, reflections })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn num_positive(&self) -> usize {
        self.num_positive
    }

    pub fn is_positive(&self, k: usize) -> bool {
        k < self.num_positive
    }

    /// Index of the negative of root `k`.
    pub fn negate(&self, k: usize) -> usize {
        if k < self.num_positive {
            k + self.num_positive
        } else {
            k - self.num_positive
        }
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Node labels `1..=rank`.
    pub fn labels(&self) -> Vec<usize> {
        (1..=self.rank).collect()
    }

    /// `(label, index of α_label in the root list)` for every node.
    pub fn label_map(&self) -> Vec<(usize, usize)> {
        self.simple_indices.iter().enumerate().map(|(i, &k)| (i + 1, k)).collect()
    }

    fn check_label(&self, label: usize) -> Result<usize> {
        if (1..=self.rank).contains(&label) {
            Ok(label - 1)
        } else {
            Err(Error::UnknownLabel { family: self.family, rank: self.rank, label })
        }
    }

    pub fn simple_root_index(&self, label: usize) -> Result<usize> {
        Ok(self.simple_indices[self.check_label(label)?])
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.roots.len())
    }

    pub fn simple_reflection(&self, label: usize) -> Result<WeylElement> {
        Ok(self.reflections[self.check_label(label)?].clone())
    }

    /// Product of simple reflections `s_{w[0]} s_{w[1]} ⋯`.
    pub fn word(&self, labels: &[usize]) -> Result<WeylElement> {
        let mut acc = self.identity();
        for &l in labels {
            acc = acc.multiply(&self.simple_reflection(l)?);
        }
        Ok(acc)
    }

    /// Longest element of the standard parabolic subgroup `W_J`, by greedy
    /// ascent: multiply by `s ∈ J` while `w(α_s) > 0`.
    pub fn longest_parabolic(&self, j: &[usize]) -> Result<WeylElement> {
        let gens: Vec<(usize, &WeylElement)> = j
            .iter()
            .map(|&l| {
                let i = self.check_label(l)?;
                Ok((self.simple_indices[i], &self.reflections[i]))
            })
            .collect::<Result<_>>()?;
        let mut w = self.identity();
        'ascend: loop {
            for &(alpha, s) in &gens {
                if self.is_positive(w.apply(alpha)) {
                    w = w.multiply(s);
                    continue 'ascend;
                }
            }
            return Ok(w);
        }
    }

    /// Longest element `w_S`.
    pub fn longest(&self) -> WeylElement {
        self.longest_parabolic(&self.labels()).expect("all labels are valid")
    }

    /// Longest element of `W_{S - excluded}`.
    pub fn longest_complement(&self, excluded: &[usize]) -> Result<WeylElement> {
        for &l in excluded {
            self.check_label(l)?;
        }
        let j: Vec<usize> = self.labels().into_iter().filter(|l| !excluded.contains(l)).collect();
        self.longest_parabolic(&j)
    }

    /// The label `t` with `w s w⁻¹ = s_t`, read off from `w(α_s) = ±α_t`.
    pub fn conjugated_simple(&self, w: &WeylElement, s: usize) -> Result<usize> {
        let img = w.apply(self.simple_root_index(s)?);
        let pos = if self.is_positive(img) { img } else { self.negate(img) };
        self.simple_indices.iter().position(|&k| k == pos).map(|i| i + 1).ok_or(Error::NotSimpleConjugate(s))
    }

    /// Images of the simple roots as coordinate vectors, for debug dumps.
    pub fn one_line(&self, w: &WeylElement) -> String {
        self.simple_indices.iter().map(|&k| format!("{:?}", self.roots[w.apply(k)])).collect::<Vec<_>>().join(" ")
    }

    /// For type C, the signed permutation `σ` with `w(ε_l) = sign · ε_|σ(l)|`,
    /// returned as `σ(1..=n)`. Uses `α_i = ε_i − ε_{i+1}`, `α_n = 2ε_n`.
    pub fn signed_permutation_c(&self, w: &WeylElement) -> Result<Vec<i64>> {
        if self.family != Family::C {
            return Err(Error::UnsupportedRootSystem { family: self.family, rank: self.rank });
        }
        let n = self.rank;
        // 2ε_l = 2(α_l + … + α_{n-1}) + α_n in simple coordinates
        let long_root = |l: usize| -> Vec<i64> {
            (1..=n)
                .map(|i| {
                    if i == n {
                        1
                    } else if i >= l {
                        2
                    } else {
                        0
                    }
                })
                .collect()
        };
        let lookup: HashMap<usize, i64> = (1..=n)
            .flat_map(|l| {
                let k = self.index[&long_root(l)];
                [(k, l as i64), (self.negate(k), -(l as i64))]
            })
            .collect();
        (1..=n)
            .map(|l| {
                let img = w.apply(self.index[&long_root(l)]);
                lookup.get(&img).copied().ok_or(Error::NotSimpleConjugate(l))
            })
            .collect()
    }
}
