//! Luo's half period `m` of a type orbit.
//!
//! Along the cycle `t_0, t_1, …` put `w_i = w_{S-{t_i}}` and
//! `w'_i = w_{S-{t_i, t_{i+1}}}`. Then `w'_0 w_S` factors length-additively
//! as `(w'_0 w_1)(w'_1 w_2)⋯(w'_{m-1} w_m)` for a unique `m`.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::typeorbits::{NextType, TypeOrbit};
use crate::weyl::{RootSystem, WeylElement};

#[derive(Clone, Debug)]
pub struct LuoResult {
    pub orbit: TypeOrbit,
    pub m: usize,
    /// `ℓ(w'_{k-1} w_k)` for `k = 1..=m`.
    pub segment_lengths: Vec<usize>,
    /// `(w'_0 w_1)(w'_1 w_2)⋯(w'_{c-1} w_c)`.
    pub rde_word: WeylElement,
}

/// Per-orbit parabolic data, indexed periodically along the cycle.
struct Walk<'a> {
    rs: &'a RootSystem,
    labels: Vec<usize>,
    w: Vec<WeylElement>,
    w_prime: Vec<WeylElement>,
    w_s: WeylElement,
}

impl<'a> Walk<'a> {
    fn new(rs: &'a RootSystem, orbit: &TypeOrbit) -> Result<Self> {
        let labels: Vec<usize> = orbit.cycle()[..orbit.c()].to_vec();
        let c = labels.len();
        let mut cache: HashMap<(usize, usize), WeylElement> = HashMap::new();
        let mut w = Vec::with_capacity(c);
        let mut w_prime = Vec::with_capacity(c);
        for i in 0..c {
            w.push(rs.longest_complement(&[labels[i]])?);
            let key = (labels[i], labels[(i + 1) % c]);
            if let Entry::Vacant(e) = cache.entry(key) {
                e.insert(rs.longest_complement(&[key.0, key.1])?);
            }
            w_prime.push(cache[&key].clone());
        }
        Ok(Self { rs, labels, w, w_prime, w_s: rs.longest() })
    }

    fn c(&self) -> usize {
        self.labels.len()
    }

    fn w(&self, i: usize) -> &WeylElement {
        &self.w[i % self.c()]
    }

    fn w_prime(&self, i: usize) -> &WeylElement {
        &self.w_prime[i % self.c()]
    }

    /// `w'_{k-1} w_k`.
    fn segment(&self, k: usize) -> WeylElement {
        self.w_prime(k - 1).multiply(self.w(k))
    }

    /// Generous cap on the number of steps before giving up.
    fn step_cap(&self) -> usize {
        2 * self.c() * (self.rs.num_positive() + 1)
    }
}

/// Compute `m` from the length criterion and verify the product identity
/// and the shift `s_i^{w_S} = s_{i+m}`.
pub fn half_period(rs: &RootSystem, orbit: &TypeOrbit) -> Result<LuoResult> {
    let walk = Walk::new(rs, orbit)?;
    let target_elem = walk.w_prime(0).multiply(&walk.w_s);
    let target = target_elem.length();

    let mut running = 0;
    let mut segment_lengths = Vec::new();
    let mut product = rs.identity();
    let mut k = 0;
    while running < target || k == 0 {
        k += 1;
        if k > walk.step_cap() {
            return Err(Error::LengthAdditivityViolated { running, target });
        }
        let seg = walk.segment(k);
        let len = seg.length();
        running += len;
        segment_lengths.push(len);
        product = product.multiply(&seg);
        if running > target {
            return Err(Error::LengthAdditivityViolated { running, target });
        }
    }
    let m = k;
    let (t0, t1) = orbit.start();
    if product != target_elem {
        return Err(Error::ProductIdentityFailed(t0, t1));
    }
    let c = walk.c();
    for i in 0..c {
        if rs.conjugated_simple(&walk.w_s, walk.labels[i])? != walk.labels[(i + m) % c] {
            return Err(Error::ShiftFailed(i));
        }
    }
    Ok(LuoResult { orbit: orbit.clone(), m, segment_lengths, rde_word: rde_word_of(&walk) })
}

/// Independent computation of `m`: `u_0 = w_S w'_0`,
/// `u_{k+1} = u_k (w'_k w_{k+1})`, and `m` is the least `k ≥ 1` with
/// `u_k = 1`.
pub fn u_sequence_m(rs: &RootSystem, orbit: &TypeOrbit) -> Result<usize> {
    let walk = Walk::new(rs, orbit)?;
    let mut u = walk.w_s.multiply(walk.w_prime(0));
    for k in 1..=walk.step_cap() {
        u = u.multiply(&walk.segment(k));
        if u.is_identity() {
            return Ok(k);
        }
    }
    Err(Error::CrossCheckFailed { half_period: 0, u_sequence: 0 })
}

/// Run both algorithms and insist they agree.
pub fn verify_u_sequence(rs: &RootSystem, orbit: &TypeOrbit) -> Result<usize> {
    let a = half_period(rs, orbit)?.m;
    let b = u_sequence_m(rs, orbit)?;
    if a != b {
        return Err(Error::CrossCheckFailed { half_period: a, u_sequence: b });
    }
    Ok(a)
}

fn rde_word_of(walk: &Walk<'_>) -> WeylElement {
    (1..=walk.c()).fold(walk.rs.identity(), |acc, k| acc.multiply(&walk.segment(k)))
}

/// `u = (w'_0 w_1)(w'_1 w_2)⋯(w'_{c-1} w_c)` over one revolution.
pub fn rde_word(rs: &RootSystem, orbit: &TypeOrbit) -> Result<WeylElement> {
    Ok(rde_word_of(&Walk::new(rs, orbit)?))
}

/// Orbits of a root system with their `m`, cross-checked.
pub fn luo_table(rs: &RootSystem) -> Result<Vec<LuoResult>> {
    NextType::new(rs)
        .enumerate()
        .iter()
        .map(|o| {
            let res = half_period(rs, o)?;
            let alt = u_sequence_m(rs, o)?;
            if alt != res.m {
                return Err(Error::CrossCheckFailed { half_period: res.m, u_sequence: alt });
            }
            Ok(res)
        })
        .collect()
}
