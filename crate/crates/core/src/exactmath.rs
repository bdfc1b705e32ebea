//! Exact arithmetic substrate.
//!
//! [`LaurentPoly`] holds Laurent polynomials in a fractional power `q^(1/d)`,
//! [`Cyclotomic`] holds elements of `Q`, `Q(ω)` or `Q(i)` (roots of unity of
//! order 1 through 4), and [`Eigenvalue`] denotes `ζ_d^k · q^(E/d)`.
//!
//! Coefficients are generic over any [`Field`] so the same code evaluates in
//! exact rationals (`BigRational`, the default everywhere else in the crate)
//! or in `f64` for quick approximations.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficient field for polynomials and cyclotomic numbers.
pub trait Field: Clone + PartialEq + fmt::Debug + Num + Neg<Output = Self> {}

impl<T: Clone + PartialEq + fmt::Debug + Num + Neg<Output = T>> Field for T {}

fn pow_field<T: Field>(base: &T, mut exp: u64) -> T {
    let mut acc = T::one();
    let mut b = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b.clone();
        }
        b = b.clone() * b;
        exp >>= 1;
    }
    acc
}

/// Reduce `num/den` to lowest terms with a positive denominator.
fn reduce_exp(num: i64, den: u32) -> (i64, i64) {
    let g = num.gcd(&(den as i64));
    let g = if g == 0 { 1 } else { g };
    (num / g, den as i64 / g)
}

/// A Laurent polynomial `Σ c_e q^(e/denom)`.
///
/// No stored coefficient is zero. Two values with different `denom` compare
/// equal when their term maps agree after rescaling to the common multiple.
#[derive(Clone, Debug)]
pub struct LaurentPoly<T> {
    denom: u32,
    terms: BTreeMap<i64, T>,
}

impl<T: Field> LaurentPoly<T> {
    pub fn zero() -> Self {
        Self { denom: 1, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0, 1)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(T::one(), 1, 1)
    }

    /// `coeff · q^(num/denom)`; the denominator is stored as given.
    pub fn monomial(coeff: T, num: i64, denom: u32) -> Self {
        assert!(denom > 0, "exponent denominator must be positive");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(num, coeff);
        }
        Self { denom, terms }
    }

    /// Build from `(exponent numerator, coefficient)` pairs over `denom`;
    /// repeated exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, T)>>(denom: u32, iter: I) -> Self {
        assert!(denom > 0, "exponent denominator must be positive");
        let mut p = Self { denom, terms: BTreeMap::new() };
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: i64, c: T) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&e) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(e, sum);
        }
    }

    pub fn denom(&self) -> u32 {
        self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing exponent order as `(numerator, coefficient)`,
    /// meaning `coefficient · q^(numerator/denom)`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &T)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Coefficient of `q^(num/den)`, zero if absent.
    pub fn coeff(&self, num: i64, den: u32) -> T {
        let l = (self.denom as u64).lcm(&(den as u64));
        let a = self.rescaled(l as u32);
        let e = num * (l / den as u64) as i64;
        a.terms.get(&e).cloned().unwrap_or_else(T::zero)
    }

    /// Same value over the denominator `new_denom`, which must be a multiple
    /// of the current one.
    pub fn rescaled(&self, new_denom: u32) -> Self {
        assert!(new_denom.is_multiple_of(self.denom), "rescale must go to a multiple");
        let f = (new_denom / self.denom) as i64;
        Self { denom: new_denom, terms: self.terms.iter().map(|(e, c)| (e * f, c.clone())).collect() }
    }

    /// Smallest denominator that represents the same value.
    pub fn normalized(&self) -> Self {
        let mut g = self.denom as i64;
        for e in self.terms.keys() {
            g = g.gcd(e);
        }
        if g <= 1 {
            return self.clone();
        }
        Self {
            denom: (self.denom as i64 / g) as u32,
            terms: self.terms.iter().map(|(e, c)| (e / g, c.clone())).collect(),
        }
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let l = (self.denom as u64).lcm(&(other.denom as u64)) as u32;
        (self.rescaled(l), other.rescaled(l))
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(self.denom, self.terms.iter().map(|(e, x)| (*e, x.clone() * c.clone())))
    }

    /// Multiply by `q^(num/den)`.
    pub fn shift(&self, num: i64, den: u32) -> Self {
        self * &Self::monomial(T::one(), num, den)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Exact evaluation at `q`; every exponent must be integral once reduced.
    pub fn eval(&self, q: &T) -> Result<T> {
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            if e % self.denom as i64 != 0 {
                let (n, d) = reduce_exp(*e, self.denom);
                return Err(Error::NonIntegralExponent { num: n, den: d as u32 });
            }
            let k = e / self.denom as i64;
            let qk = if k >= 0 {
                pow_field(q, k as u64)
            } else {
                if q.is_zero() {
                    return Err(Error::ZeroBase);
                }
                T::one() / pow_field(q, k.unsigned_abs())
            };
            acc = acc + c.clone() * qk;
        }
        Ok(acc)
    }

    /// Exact quotient `self / divisor`; fails unless the division leaves no
    /// remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::NotAPolynomial);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (mut rem, div) = self.common(divisor);
        let denom = rem.denom;
        let (&dtop, dlead) = div.terms.iter().next_back().unwrap();
        let dlow = *div.terms.keys().next().unwrap();
        let low_bound = *rem.terms.keys().next().unwrap() - dlow;
        let mut quot = Self { denom, terms: BTreeMap::new() };
        while let Some((&rtop, rlead)) = rem.terms.iter().next_back() {
            let e = rtop - dtop;
            if e < low_bound {
                return Err(Error::NotAPolynomial);
            }
            let c = rlead.clone() / dlead.clone();
            quot.add_term(e, c.clone());
            for (de, dc) in &div.terms {
                rem.add_term(de + e, -(dc.clone() * c.clone()));
            }
            // leading term must cancel exactly
            if rem.terms.contains_key(&rtop) {
                return Err(Error::NotAPolynomial);
            }
        }
        Ok(quot.normalized())
    }

    pub fn map_coeffs<U: Field>(&self, f: impl Fn(&T) -> U) -> LaurentPoly<U> {
        LaurentPoly::from_terms(self.denom, self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// True when every coefficient is an integer-valued rational would be
    /// too specific for a generic field; callers test coefficients directly.
    pub fn all_coeffs(&self, pred: impl Fn(&T) -> bool) -> bool {
        self.terms.values().all(pred)
    }
}

impl<T: Field> PartialEq for LaurentPoly<T> {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.terms == b.terms
    }
}

impl<T: Field + Eq> Eq for LaurentPoly<T> {}

impl<'a, T: Field> Add<&'a LaurentPoly<T>> for &'a LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, rhs: &'a LaurentPoly<T>) -> LaurentPoly<T> {
        let (mut a, b) = self.common(rhs);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }
}

impl<'a, T: Field> Sub<&'a LaurentPoly<T>> for &'a LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, rhs: &'a LaurentPoly<T>) -> LaurentPoly<T> {
        let (mut a, b) = self.common(rhs);
        for (e, c) in b.terms {
            a.add_term(e, -c);
        }
        a
    }
}

impl<'a, T: Field> Mul<&'a LaurentPoly<T>> for &'a LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: &'a LaurentPoly<T>) -> LaurentPoly<T> {
        let (a, b) = self.common(rhs);
        let mut out = LaurentPoly { denom: a.denom, terms: BTreeMap::new() };
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                out.add_term(ea + eb, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<T: Field> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly { denom: self.denom, terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl<T: Field> $tr for LaurentPoly<T> {
            type Output = LaurentPoly<T>;
            fn $m(self, rhs: LaurentPoly<T>) -> LaurentPoly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<T: Field> Neg for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        -&self
    }
}

impl<T: Field> std::iter::Sum for LaurentPoly<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| &a + &b)
    }
}

impl<T: Field> std::iter::Product for LaurentPoly<T> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| &a * &b)
    }
}

/// Render `q^(num/den)` in the text form, or nothing for exponent zero.
pub(crate) fn fmt_q_power(num: i64, den: u32, always_exponent: bool) -> String {
    let (p, d) = reduce_exp(num, den);
    match (p, d) {
        (0, _) if always_exponent => "q^0".to_string(),
        (0, _) => String::new(),
        (1, 1) if !always_exponent => "q".to_string(),
        (p, 1) if p > 0 => format!("q^{p}"),
        (p, 1) => format!("q^({p})"),
        (p, d) => format!("q^({p}/{d})"),
    }
}

/// Sparse text form: terms in decreasing exponent, `c*q^e`, coefficients as
/// reduced fractions, unit coefficients omitted, fractional exponents as
/// `q^(e/d)`. The zero polynomial prints as `0`.
impl<T: Field + Signed + fmt::Display> fmt::Display for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                write!(f, "-")?;
            } else if idx > 0 {
                write!(f, "+")?;
            }
            let qp = fmt_q_power(*e, self.denom, false);
            if qp.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{qp}")?;
            } else {
                write!(f, "{abs}*{qp}")?;
            }
        }
        Ok(())
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad coefficient {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n).map_err(|_| bad())?;
            let d = BigInt::from_str(d).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

fn parse_exponent(s: &str) -> Result<(i64, u32)> {
    let bad = || Error::Parse(format!("bad exponent {s:?}"));
    let inner = s.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(s);
    match inner.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.parse().map_err(|_| bad())?;
            let d: u32 = d.parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok((n, d))
        }
        None => Ok((inner.parse().map_err(|_| bad())?, 1)),
    }
}

impl FromStr for LaurentPoly<BigRational> {
    type Err = Error;

    /// Parses the text form produced by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(Self::zero());
        }
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        // split into signed terms at top-level +/- (not inside parentheses)
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut depth = 0usize;
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '(' => {
                    depth += 1;
                    cur.push(ch);
                }
                ')' => {
                    depth = depth.saturating_sub(1);
                    cur.push(ch);
                }
                '+' | '-' if depth == 0 => {
                    if i > 0 {
                        if cur.is_empty() {
                            return Err(Error::Parse(format!("dangling sign in {s:?}")));
                        }
                        pieces.push((neg, std::mem::take(&mut cur)));
                    }
                    neg = ch == '-';
                }
                _ => cur.push(ch),
            }
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {s:?}")));
        }
        pieces.push((neg, cur));

        let mut parts = Vec::with_capacity(pieces.len());
        for (neg, body) in pieces {
            let (coef, qpart) = match body.find('q') {
                Some(pos) => {
                    let c = body[..pos].trim_end_matches('*');
                    let c = if c.is_empty() { BigRational::one() } else { parse_rational(c)? };
                    (c, Some(&body[pos + 1..]))
                }
                None => (parse_rational(&body)?, None),
            };
            let (num, den) = match qpart {
                None => (0, 1),
                Some("") => (1, 1),
                Some(rest) => {
                    let e = rest.strip_prefix('^').ok_or_else(|| Error::Parse(format!("bad term {body:?}")))?;
                    parse_exponent(e)?
                }
            };
            let coef = if neg { -coef } else { coef };
            parts.push((num, den, coef));
        }
        let l = parts.iter().fold(1u64, |acc, (_, d, _)| acc.lcm(&(*d as u64))) as u32;
        Ok(Self::from_terms(l, parts.into_iter().map(|(n, d, c)| (n * (l / d) as i64, c))).normalized())
    }
}

/// Supported orders of roots of unity.
fn check_order(order: u32) -> Result<()> {
    if (1..=4).contains(&order) {
        Ok(())
    } else {
        Err(Error::UnsupportedRootOrder(order))
    }
}

/// An element `a + b·θ` of `Q(θ)` with `θ = ω = e^(2πi/3)` for order 3,
/// `θ = i` for order 4, and `b = 0` for orders 1 and 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclotomic<T> {
    order: u32,
    re: T,
    im: T,
}

impl<T: Field> Cyclotomic<T> {
    pub fn from_real(order: u32, a: T) -> Result<Self> {
        check_order(order)?;
        Ok(Self { order, re: a, im: T::zero() })
    }

    /// `a + b·θ` for order 3 or 4; for orders 1 and 2, `b` must be zero.
    pub fn new(order: u32, a: T, b: T) -> Result<Self> {
        check_order(order)?;
        if order <= 2 && !b.is_zero() {
            return Err(Error::UnsupportedRootOrder(order));
        }
        Ok(Self { order, re: a, im: b })
    }

    /// `ζ_order^k` with `ζ_d = e^(2πi/d)`.
    pub fn root_of_unity(order: u32, k: u32) -> Result<Self> {
        check_order(order)?;
        let one = T::one;
        let zero = T::zero;
        let (a, b) = match (order, k % order) {
            (_, 0) => (one(), zero()),
            (2, 1) => (-one(), zero()),
            (3, 1) => (zero(), one()),
            (3, 2) => (-one(), -one()),
            (4, 1) => (zero(), one()),
            (4, 2) => (-one(), zero()),
            (4, 3) => (zero(), -one()),
            _ => unreachable!(),
        };
        Ok(Self { order, re: a, im: b })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Rational coordinates in the basis `{1, θ}`.
    pub fn coords(&self) -> (&T, &T) {
        (&self.re, &self.im)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// The exact real value when the non-real coordinate vanishes.
    pub fn to_real(&self) -> Option<T> {
        self.is_real().then(|| self.re.clone())
    }

    fn joint_order(&self, other: &Self) -> Result<u32> {
        match (self.order, other.order) {
            (a, b) if a <= 2 && b <= 2 => Ok(a.max(b)),
            (a, b) if a <= 2 => Ok(b),
            (a, b) if b <= 2 => Ok(a),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(Error::IncompatibleOrders(a, b)),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let order = self.joint_order(other)?;
        Ok(Self { order, re: self.re.clone() + other.re.clone(), im: self.im.clone() + other.im.clone() })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let order = self.joint_order(other)?;
        let (a, b) = (self.re.clone(), self.im.clone());
        let (c, d) = (other.re.clone(), other.im.clone());
        let (re, im) = match order {
            // ω² = -1 - ω
            3 => (a.clone() * c.clone() - b.clone() * d.clone(), a * d.clone() + b.clone() * c - b * d),
            // i² = -1 (and the real case, where b = d = 0)
            _ => (a.clone() * c.clone() - b.clone() * d.clone(), a * d + b * c),
        };
        Ok(Self { order, re, im })
    }

    pub fn scale(&self, s: &T) -> Self {
        Self { order: self.order, re: self.re.clone() * s.clone(), im: self.im.clone() * s.clone() }
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        match self.order {
            // conj(a + bω) = a + bω² = (a - b) - bω
            3 => Self { order: 3, re: self.re.clone() - self.im.clone(), im: -self.im.clone() },
            _ => Self { order: self.order, re: self.re.clone(), im: -self.im.clone() },
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::from_real(self.order, T::one()).expect("order already checked");
        for _ in 0..n {
            acc = acc.try_mul(self).expect("same order");
        }
        acc
    }
}

impl<T: Field + ToPrimitive> Cyclotomic<T> {
    /// Floating approximation `(re, im)`.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let a = self.re.to_f64().unwrap_or(f64::NAN);
        let b = self.im.to_f64().unwrap_or(f64::NAN);
        match self.order {
            3 => (a - 0.5 * b, b * 3f64.sqrt() / 2.0),
            4 => (a, b),
            _ => (a, 0.0),
        }
    }
}

impl<T: Field> Add for Cyclotomic<T> {
    type Output = Self;
    /// Panics when mixing orders 3 and 4; use [`Cyclotomic::try_add`] to
    /// handle that case.
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("incompatible cyclotomic orders")
    }
}

impl<T: Field> Mul for Cyclotomic<T> {
    type Output = Self;
    /// Panics when mixing orders 3 and 4; use [`Cyclotomic::try_mul`].
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("incompatible cyclotomic orders")
    }
}

/// `ζ_d^k · q^(E/d)` with `d = root_order`, `k = unity_index`,
/// `E = q_exp_num`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Eigenvalue {
    root_order: u32,
    unity_index: u32,
    q_exp_num: i64,
}

impl Eigenvalue {
    pub fn new(root_order: u32, unity_index: u32, q_exp_num: i64) -> Result<Self> {
        check_order(root_order)?;
        if unity_index >= root_order {
            return Err(Error::UnsupportedRootOrder(root_order));
        }
        Ok(Self { root_order, unity_index, q_exp_num })
    }

    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    pub fn unity_index(&self) -> u32 {
        self.unity_index
    }

    pub fn q_exp_num(&self) -> i64 {
        self.q_exp_num
    }

    /// Same modulus, different root of unity.
    pub fn with_unity_index(&self, k: u32) -> Result<Self> {
        Self::new(self.root_order, k, self.q_exp_num)
    }

    pub fn conj(&self) -> Self {
        Self { unity_index: (self.root_order - self.unity_index) % self.root_order, ..*self }
    }

    /// The exponent `E` of `λ^d = q^E`; always an integer.
    pub fn pow_root_order(&self) -> i64 {
        self.q_exp_num
    }

    /// `λ^l` split into its root-of-unity part and its power of `q`.
    pub fn pow<T: Field>(&self, l: u32) -> (Cyclotomic<T>, LaurentPoly<T>) {
        let k = ((self.unity_index as u64 * l as u64) % self.root_order as u64) as u32;
        let z = Cyclotomic::root_of_unity(self.root_order, k).expect("order checked at construction");
        let qp = LaurentPoly::monomial(T::one(), self.q_exp_num * l as i64, self.root_order);
        (z, qp)
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let qp = fmt_q_power(self.q_exp_num, self.root_order, true);
        match (self.root_order, self.unity_index) {
            (_, 0) => write!(f, "{qp}"),
            (2, 1) | (4, 2) => write!(f, "-{qp}"),
            (4, 1) => write!(f, "i*{qp}"),
            (4, 3) => write!(f, "-i*{qp}"),
            (3, 1) => write!(f, "ω*{qp}"),
            (3, 2) => write!(f, "ω²*{qp}"),
            _ => unreachable!(),
        }
    }
}

/// `Σ mult · λ^l` over the given eigenvalue lines, exactly.
///
/// The result must be real: every `ω`- and `i`-coordinate has to cancel,
/// which happens exactly when multiplicities are conjugation symmetric.
pub fn eigenvalue_power_sum(lines: &[(Eigenvalue, u64)], l: u32) -> Result<LaurentPoly<BigRational>> {
    let denom = lines.iter().fold(1u64, |acc, (ev, _)| acc.lcm(&(ev.root_order as u64))) as u32;
    // exponent numerator over `denom` -> (real, ω-part, i-part)
    let mut acc: BTreeMap<i64, [BigRational; 3]> = BTreeMap::new();
    for (ev, mult) in lines {
        if *mult == 0 {
            continue;
        }
        let (z, _) = ev.pow::<BigRational>(l);
        let m = BigRational::from_integer(BigInt::from(*mult));
        let e = ev.q_exp_num * l as i64 * (denom / ev.root_order) as i64;
        let slot = acc.entry(e).or_insert_with(|| [BigRational::zero(), BigRational::zero(), BigRational::zero()]);
        let (re, im) = z.coords();
        slot[0] += re.clone() * m.clone();
        match ev.root_order {
            3 => slot[1] += im.clone() * m,
            4 => slot[2] += im.clone() * m,
            _ => {}
        }
    }
    if acc.values().any(|s| !s[1].is_zero() || !s[2].is_zero()) {
        return Err(Error::AsymmetricRootMultiplicities);
    }
    Ok(LaurentPoly::from_terms(denom, acc.into_iter().map(|(e, [re, _, _])| (e, re))).normalized())
}
