//! Sparse Laurent polynomials with arbitrary-precision integer coefficients.
//!
//! [`QPoly`] is a polynomial in one variable `q`, [`QTPoly`] in two variables
//! `q` and `t`. Exponents may be negative. Zero coefficients are never stored,
//! so structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Polynomial in `q` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    terms: BTreeMap<i64, BigInt>,
}

/// Polynomial in `q` and `t` with integer coefficients, keyed by `(q-exp, t-exp)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QTPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

fn add_term<K: Ord>(terms: &mut BTreeMap<K, BigInt>, k: K, c: BigInt) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn fmt_coeff(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt, mono: &str) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if mono.is_empty() {
        write!(f, "{abs}")
    } else if abs.is_one() {
        write!(f, "{mono}")
    } else {
        write!(f, "{abs}{mono}")
    }
}

fn var_power(v: &str, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{e}"),
    }
}

fn parse_coeff(v: &serde_json::Value) -> Result<BigInt> {
    match v {
        serde_json::Value::Number(n) => n
            .to_string()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(n.to_string())),
        other => Err(Error::Parse(other.to_string())),
    }
}

fn parse_exp(tok: &str, var: char) -> Result<i64> {
    let rest = tok
        .strip_prefix(var)
        .and_then(|r| r.strip_prefix('^'))
        .ok_or_else(|| Error::Parse(tok.to_string()))?;
    rest.parse().map_err(|_| Error::Parse(tok.to_string()))
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * q^e`.
    pub fn monomial(e: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        add_term(&mut p.terms, e, c.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I, C>(it: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in it {
            add_term(&mut p.terms, e, c.into());
        }
        p
    }

    /// Builds `Σ q^e` over the given exponents.
    pub fn from_exponents<I: IntoIterator<Item = i64>>(it: I) -> Self {
        let mut p = Self::zero();
        for e in it {
            p.add_monomial(e, BigInt::one());
        }
        p
    }

    pub fn add_monomial(&mut self, e: i64, c: BigInt) {
        add_term(&mut self.terms, e, c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        QPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn invert(&self) -> Self {
        QPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut p = Self::zero();
        for (e, x) in &self.terms {
            add_term(&mut p.terms, *e, x * c);
        }
        p
    }

    /// Exact division by a divisor with nonzero lowest coefficient.
    /// Fails when the division leaves a remainder.
    pub fn div_exact(&self, d: &QPoly) -> Result<QPoly> {
        let (dlo, dhi) = match (d.min_degree(), d.max_degree()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::Precondition("division by zero polynomial".into())),
        };
        let lead = d.coeff(dlo);
        let mut rem = self.clone();
        let mut quot = QPoly::zero();
        while let Some(lo) = rem.min_degree() {
            let hi = rem.max_degree().unwrap();
            if hi - lo < dhi - dlo {
                return Err(Error::Precondition("inexact polynomial division".into()));
            }
            let c = rem.coeff(lo);
            if (&c % &lead) != BigInt::zero() {
                return Err(Error::Precondition("inexact polynomial division".into()));
            }
            let m = QPoly::monomial(lo - dlo, &c / &lead);
            rem = &rem - &(&m * d);
            quot = &quot + &m;
        }
        Ok(quot)
    }

    /// Canonical JSON object `{"q^a": coeff}` with keys in byte order.
    pub fn to_json(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        for (e, c) in &self.terms {
            let n: serde_json::Number = c.to_string().parse().expect("integer literal");
            m.insert(format!("q^{e}"), serde_json::Value::Number(n));
        }
        serde_json::Value::Object(m)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::Parse(v.to_string()))?;
        let mut p = Self::zero();
        for (k, c) in obj {
            p.add_monomial(parse_exp(k, 'q')?, parse_coeff(c)?);
        }
        Ok(p)
    }
}

impl QTPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    /// `c * q^a t^b`.
    pub fn monomial(a: i64, b: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        add_term(&mut p.terms, (a, b), c.into());
        p
    }

    pub fn from_terms<I, C>(it: I) -> Self
    where
        I: IntoIterator<Item = ((i64, i64), C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (k, c) in it {
            add_term(&mut p.terms, k, c.into());
        }
        p
    }

    pub fn add_monomial(&mut self, a: i64, b: i64, c: BigInt) {
        add_term(&mut self.terms, (a, b), c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: i64, b: i64) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// Specializes `t = 1`.
    pub fn at_t_one(&self) -> QPoly {
        QPoly::from_terms(self.terms.iter().map(|((a, _), c)| (*a, c.clone())))
    }

    /// Specializes `q = 1`, returning a polynomial in `t` (stored as a [`QPoly`]).
    pub fn at_q_one(&self) -> QPoly {
        QPoly::from_terms(self.terms.iter().map(|((_, b), c)| (*b, c.clone())))
    }

    /// Value at `q = t = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut p = Self::zero();
        for (k, x) in &self.terms {
            add_term(&mut p.terms, *k, x * c);
        }
        p
    }

    /// Canonical JSON object `{"q^a t^b": coeff}` with keys in byte order.
    pub fn to_json(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        for ((a, b), c) in &self.terms {
            let n: serde_json::Number = c.to_string().parse().expect("integer literal");
            m.insert(format!("q^{a} t^{b}"), serde_json::Value::Number(n));
        }
        serde_json::Value::Object(m)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::Parse(v.to_string()))?;
        let mut p = Self::zero();
        for (k, c) in obj {
            let (qs, ts) = k.split_once(' ').ok_or_else(|| Error::Parse(k.clone()))?;
            p.add_monomial(parse_exp(qs, 'q')?, parse_exp(ts, 't')?, parse_coeff(c)?);
        }
        Ok(p)
    }
}

impl fmt::Display for QPoly {
    /// Terms in descending degree, e.g. `q^5 + 4q^4 + 7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            fmt_coeff(f, i == 0, c, &var_power("q", *e))?;
        }
        Ok(())
    }
}

impl fmt::Display for QTPoly {
    /// Terms by descending `q` degree, then descending `t` degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.terms.iter().rev().enumerate() {
            let mono = [var_power("q", *a), var_power("t", *b)]
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect::<Vec<_>>()
                .join(" ");
            fmt_coeff(f, i == 0, c, &mono)?;
        }
        Ok(())
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl Serialize for QTPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

macro_rules! ring_ops {
    ($t:ty) => {
        impl Add for &$t {
            type Output = $t;
            fn add(self, o: &$t) -> $t {
                let mut r = self.clone();
                r += o;
                r
            }
        }
        impl Add for $t {
            type Output = $t;
            fn add(mut self, o: $t) -> $t {
                self += &o;
                self
            }
        }
        impl AddAssign<&$t> for $t {
            fn add_assign(&mut self, o: &$t) {
                for (k, c) in &o.terms {
                    add_term(&mut self.terms, *k, c.clone());
                }
            }
        }
        impl SubAssign<&$t> for $t {
            fn sub_assign(&mut self, o: &$t) {
                for (k, c) in &o.terms {
                    add_term(&mut self.terms, *k, -c.clone());
                }
            }
        }
        impl Sub for &$t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t {
                let mut r = self.clone();
                r -= o;
                r
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(mut self, o: $t) -> $t {
                self -= &o;
                self
            }
        }
        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                self.scale(&BigInt::from(-1))
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl std::iter::Sum for $t {
            fn sum<I: Iterator<Item = $t>>(it: I) -> $t {
                let mut r = <$t>::zero();
                for x in it {
                    r += &x;
                }
                r
            }
        }
    };
}

ring_ops!(QPoly);
ring_ops!(QTPoly);

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        let mut r = QPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                add_term(&mut r.terms, a + b, x * y);
            }
        }
        r
    }
}

impl Mul for &QTPoly {
    type Output = QTPoly;
    fn mul(self, o: &QTPoly) -> QTPoly {
        let mut r = QTPoly::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &o.terms {
                add_term(&mut r.terms, (a + c, b + d), x * y);
            }
        }
        r
    }
}

impl Mul<&QPoly> for &QTPoly {
    type Output = QTPoly;
    /// Multiplies by a polynomial in `q` alone.
    fn mul(self, o: &QPoly) -> QTPoly {
        let mut r = QTPoly::zero();
        for ((a, b), x) in &self.terms {
            for (c, y) in &o.terms {
                add_term(&mut r.terms, (a + c, *b), x * y);
            }
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_no_zero_terms_kept() {
        let p = QPoly::monomial(2, 3) + QPoly::monomial(2, -3);
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn test_display_orders_descending() {
        let p = QPoly::from_terms([(0, 4), (5, 1), (4, 4), (1, -7)]);
        assert_eq!(p.to_string(), "q^5 + 4q^4 - 7q + 4");
        let t = QTPoly::from_terms([((6, 0), 1), ((4, 1), 1), ((2, 2), 2)]);
        assert_eq!(t.to_string(), "q^6 + q^4 t + 2q^2 t^2");
    }

    #[test]
    fn test_mul_and_specialize() {
        let a = QPoly::from_terms([(0, 1), (1, 1)]);
        let sq = &a * &a;
        assert_eq!(sq, QPoly::from_terms([(0, 1), (1, 2), (2, 1)]));
        assert_eq!(sq.eval_one(), BigInt::from(4));
        assert_eq!(sq.invert().shift(2), sq);
    }

    #[test]
    fn test_div_exact() {
        let a = QPoly::from_terms([(0, 1), (1, -1)]);
        let b = QPoly::from_terms([(0, 1), (3, -1)]);
        let q = b.div_exact(&a).unwrap();
        assert_eq!(q, QPoly::from_terms([(0, 1), (1, 1), (2, 1)]));
        assert!(QPoly::from_terms([(0, 1), (1, 1)]).div_exact(&a).is_err());
    }

    #[test]
    fn test_json_round_trip() {
        let t = QTPoly::from_terms([((6, 0), 1), ((10, 1), 2), ((-1, 2), -5)]);
        let v = t.to_json();
        let s = serde_json::to_string(&v).unwrap();
        let back: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
        assert_eq!(QTPoly::from_json(&back).unwrap(), t);
        let big = QPoly::monomial(3, "123456789012345678901234567890".parse::<BigInt>().unwrap());
        let s = serde_json::to_string(&big.to_json()).unwrap();
        assert_eq!(s, r#"{"q^3":123456789012345678901234567890}"#);
        let back: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(QPoly::from_json(&back).unwrap(), big);
    }
}
