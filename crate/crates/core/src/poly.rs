//! Exact sparse Laurent polynomials over the integers.
//!
//! [`LaurentPoly1`] is a polynomial in `z`, [`LaurentPoly2`] a polynomial in
//! `z` and `a`. Coefficients are arbitrary precision; a zero coefficient is
//! never stored, so structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Degree of a polynomial in one variable; the zero polynomial has degree
/// `NegInfinity`, which compares below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Degree::NegInfinity => s.serialize_str("-inf"),
            Degree::Finite(d) => s.serialize_i64(*d),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot parse polynomial {text:?}: {reason}")]
pub struct PolyParseError {
    pub text: String,
    pub reason: String,
}

/// Laurent polynomial in `z`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly1 {
    terms: BTreeMap<i64, BigInt>,
}

/// Laurent polynomial in `z` and `a`, keyed by `(z-exponent, a-exponent)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), BigInt>,
}

fn insert_add<K: Ord>(map: &mut BTreeMap<K, BigInt>, key: K, c: BigInt) {
    if c.is_zero() {
        return;
    }
    // zero entries are left for `prune`
    *map.entry(key).or_insert_with(BigInt::zero) += c;
}

fn prune<K: Ord + Clone>(map: &mut BTreeMap<K, BigInt>) {
    map.retain(|_, c| !c.is_zero());
}

impl LaurentPoly1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * z^e`
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        let c = c.into();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    pub fn z_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut terms = BTreeMap::new();
        for (e, c) in iter {
            insert_add(&mut terms, e, c.into());
        }
        prune(&mut terms);
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .next_back()
            .map_or(Degree::NegInfinity, |&d| Degree::Finite(d))
    }

    pub fn shift(&self, by: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + by, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Embeds as `self * a^n`.
    pub fn times_a_pow(&self, n: i64) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(e, c)| ((*e, n), c.clone())).collect(),
        }
    }
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `c * z^ze * a^ae`
    pub fn monomial(c: impl Into<BigInt>, ze: i64, ae: i64) -> Self {
        let mut terms = BTreeMap::new();
        let c = c.into();
        if !c.is_zero() {
            terms.insert((ze, ae), c);
        }
        Self { terms }
    }

    pub fn z() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn a_pow(n: i64) -> Self {
        Self::monomial(1, 0, n)
    }

    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = ((i64, i64), C)>,
        C: Into<BigInt>,
    {
        let mut terms = BTreeMap::new();
        for (k, c) in iter {
            insert_add(&mut terms, k, c.into());
        }
        prune(&mut terms);
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `((z-exponent, a-exponent), coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// The `z`-polynomial multiplying `a^n`.
    pub fn coeff_a(&self, n: i64) -> LaurentPoly1 {
        LaurentPoly1 {
            terms: self
                .terms
                .iter()
                .filter(|((_, ae), _)| *ae == n)
                .map(|((ze, _), c)| (*ze, c.clone()))
                .collect(),
        }
    }

    /// All `a`-exponents carrying a nonzero coefficient, ascending.
    pub fn a_exponents(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.terms.keys().map(|(_, ae)| *ae).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn deg_a(&self) -> Degree {
        self.terms
            .keys()
            .map(|(_, ae)| *ae)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn shift_a(&self, by: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|((ze, ae), c)| ((*ze, ae + by), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Zero for LaurentPoly1 {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly1 {
    fn one() -> Self {
        Self::monomial(1, 0)
    }
}

impl Zero for LaurentPoly2 {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly2 {
    fn one() -> Self {
        Self::monomial(1, 0, 0)
    }
}

macro_rules! ring_ops {
    ($t:ty, $key:ty, $combine:expr) => {
        impl<'a> Add<&'a $t> for &'a $t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                let mut terms = self.terms.clone();
                for (k, c) in &rhs.terms {
                    insert_add(&mut terms, *k, c.clone());
                }
                prune(&mut terms);
                <$t>::from_map(terms)
            }
        }
        impl<'a> Sub<&'a $t> for &'a $t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                let mut terms = self.terms.clone();
                for (k, c) in &rhs.terms {
                    insert_add(&mut terms, *k, -c.clone());
                }
                prune(&mut terms);
                <$t>::from_map(terms)
            }
        }
        impl<'a> Mul<&'a $t> for &'a $t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                let mut terms: BTreeMap<$key, BigInt> = BTreeMap::new();
                for (k1, c1) in &self.terms {
                    for (k2, c2) in &rhs.terms {
                        insert_add(&mut terms, $combine(*k1, *k2), c1 * c2);
                    }
                }
                prune(&mut terms);
                <$t>::from_map(terms)
            }
        }
        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                <$t>::from_map(self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect())
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl std::iter::Sum for $t {
            fn sum<I: Iterator<Item = $t>>(iter: I) -> $t {
                iter.fold(<$t>::default(), |acc, p| &acc + &p)
            }
        }
    };
}

impl LaurentPoly1 {
    fn from_map(terms: BTreeMap<i64, BigInt>) -> Self {
        Self { terms }
    }
}

impl LaurentPoly2 {
    fn from_map(terms: BTreeMap<(i64, i64), BigInt>) -> Self {
        Self { terms }
    }
}

ring_ops!(LaurentPoly1, i64, |a: i64, b: i64| a + b);
ring_ops!(LaurentPoly2, (i64, i64), |a: (i64, i64), b: (i64, i64)| (
    a.0 + b.0,
    a.1 + b.1
));

/// Writes one term given its coefficient and already-rendered monomial
/// (empty for the constant monomial).
fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &BigInt,
    mono: &str,
) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {} ", if neg { '-' } else { '+' })?;
    }
    if mono.is_empty() {
        write!(f, "{abs}")
    } else if abs.is_one() {
        write!(f, "{mono}")
    } else {
        write!(f, "{abs}*{mono}")
    }
}

fn var_pow(v: char, e: i64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    }
}

impl fmt::Display for LaurentPoly1 {
    /// Terms by descending `z`-exponent, e.g. `z^2 + 2 - z^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono = var_pow('z', *e).unwrap_or_default();
            write_term(f, i == 0, c, &mono)?;
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly2 {
    /// Terms sorted by (`a`-exponent desc, `z`-exponent desc), e.g.
    /// `z^-1*a + 1 - z^-1*a^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&(i64, i64)> = self.terms.keys().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.1, k.0)));
        for (i, k) in keys.into_iter().enumerate() {
            let parts: Vec<String> = [var_pow('z', k.0), var_pow('a', k.1)]
                .into_iter()
                .flatten()
                .collect();
            write_term(f, i == 0, &self.terms[k], &parts.join("*"))?;
        }
        Ok(())
    }
}

/// Parses the canonical rendering: a sum of terms `[coef*]z^e*a^f`, where
/// any factor may be omitted and exponents may be negative.
fn parse_terms(text: &str) -> Result<Vec<(BigInt, i64, i64)>, PolyParseError> {
    let err = |reason: &str| PolyParseError {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty input"));
    }
    // split into signed terms; a '-' right after '^' belongs to an exponent
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut prev: Option<char> = None;
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && prev != Some('^') {
            if !cur.is_empty() {
                pieces.push((neg, std::mem::take(&mut cur)));
            } else if prev.is_some() {
                return Err(err("dangling sign"));
            }
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    if cur.is_empty() {
        return Err(err("trailing sign"));
    }
    pieces.push((neg, cur));

    let mut out = Vec::new();
    for (neg, piece) in pieces {
        let mut coef = BigInt::one();
        let (mut ze, mut ae) = (0i64, 0i64);
        for factor in piece.split('*') {
            if factor.is_empty() {
                return Err(err("empty factor"));
            }
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => (b, Some(e)),
                None => (factor, None),
            };
            match base {
                "z" | "a" => {
                    let e: i64 = match exp {
                        Some(e) => e.parse().map_err(|_| err("bad exponent"))?,
                        None => 1,
                    };
                    if base == "z" {
                        ze += e;
                    } else {
                        ae += e;
                    }
                }
                _ => {
                    if exp.is_some() {
                        return Err(err("exponent on a constant"));
                    }
                    let c: BigInt = base.parse().map_err(|_| err("bad coefficient"))?;
                    coef *= c;
                }
            }
        }
        if neg {
            coef = -coef;
        }
        out.push((coef, ze, ae));
    }
    Ok(out)
}

impl FromStr for LaurentPoly2 {
    type Err = PolyParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let terms = parse_terms(s)?;
        Ok(Self::from_terms(
            terms.into_iter().map(|(c, ze, ae)| ((ze, ae), c)),
        ))
    }
}

impl FromStr for LaurentPoly1 {
    type Err = PolyParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let terms = parse_terms(s)?;
        if terms.iter().any(|(_, _, ae)| *ae != 0) {
            return Err(PolyParseError {
                text: s.to_string(),
                reason: "unexpected variable a".into(),
            });
        }
        Ok(Self::from_terms(terms.into_iter().map(|(c, ze, _)| (ze, c))))
    }
}

macro_rules! text_serde {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }
        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

text_serde!(LaurentPoly1);
text_serde!(LaurentPoly2);
