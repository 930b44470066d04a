//! Laurent polynomials over the integers and over F2.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::json;

use super::{PolyF2, Ring, RingTag};

/// Laurent polynomial with arbitrary-precision integer coefficients,
/// stored sparsely as exponent -> nonzero coefficient.
///
/// Sparse storage matters here: iterated commutator words produce matrices
/// whose entries have wide, gappy degree windows, and the coefficients grow
/// without bound (hence `BigInt`; overflow is never silent).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentInt {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentInt {
    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                map.remove(&e);
            }
        }
        Self { terms: map }
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        Self::from_terms([(exp, BigInt::from(coeff))])
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `Some((k, s))` iff the value is the unit `s * t^k` with `s = ±1`.
    pub fn as_unit(&self) -> Option<(i64, i8)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, c) = self.terms.iter().next().unwrap();
        if c.magnitude().is_one() {
            Some((e, if c.is_negative() { -1 } else { 1 }))
        } else {
            None
        }
    }

    /// Entrywise reduction modulo 2.
    pub fn mod2(&self) -> LaurentF2 {
        LaurentF2::from_exponents(
            self.terms
                .iter()
                .filter(|(_, c)| c.magnitude().bit(0))
                .map(|(&e, _)| e),
        )
    }
}

impl Ring for LaurentInt {
    const TAG: RingTag = RingTag::IntLaurent;

    fn zero() -> Self {
        Self::default()
    }

    fn one() -> Self {
        Self::monomial(0, 1)
    }

    fn t_pow(k: i64) -> Self {
        Self::monomial(k, 1)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.terms.clone();
        for (&e, c) in &rhs.terms {
            let entry = out.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                out.remove(&e);
            }
        }
        Self { terms: out }
    }

    fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                let e = ea + eb;
                let entry = out.entry(e).or_insert_with(BigInt::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    out.remove(&e);
                }
            }
        }
        Self { terms: out }
    }

    fn inv_unit(&self) -> Option<Self> {
        let (k, s) = self.as_unit()?;
        Some(Self::monomial(-k, s as i64))
    }

    fn encode(&self, out: &mut String) {
        use fmt::Write;
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write!(out, "{e}:{c}").unwrap();
        }
    }

    fn to_json(&self) -> serde_json::Value {
        json!(self
            .terms
            .iter()
            .map(|(&e, c)| json!([e, c.to_string()]))
            .collect::<Vec<_>>())
    }
}

impl fmt::Display for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms().collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        terms.reverse();
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.magnitude();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one();
            if !unit_coeff || e == 0 {
                write!(f, "{mag}")?;
            }
            if e != 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                if e == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentInt({self})")
    }
}

/// Laurent polynomial over F2, stored as `t^offset * poly` with `poly`
/// having a nonzero constant term (or `poly = 0` for the zero value).
///
/// The factorization is unique because the units of F2[t, t^-1] are exactly
/// the powers of t: the `offset` IS the minimal exponent, which makes both
/// products and projective normalization cheap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentF2 {
    offset: i64,
    poly: PolyF2,
}

impl Default for LaurentF2 {
    fn default() -> Self {
        Self {
            offset: 0,
            poly: PolyF2::zero(),
        }
    }
}

impl LaurentF2 {
    fn normalized(offset: i64, poly: PolyF2) -> Self {
        match poly.trailing_zeros() {
            None => Self::default(),
            Some(0) => Self { offset, poly },
            Some(s) => Self {
                offset: offset + s as i64,
                poly: poly.shr(s),
            },
        }
    }

    /// XOR-accumulates the given exponents.
    pub fn from_exponents<I: IntoIterator<Item = i64>>(exps: I) -> Self {
        let exps: Vec<i64> = exps.into_iter().collect();
        let Some(&min) = exps.iter().min() else {
            return Self::default();
        };
        let poly = PolyF2::from_exponents(exps.iter().map(|&e| (e - min) as usize));
        Self::normalized(min, poly)
    }

    /// The polynomial part `p` of the factorization `t^k * p`, `p(0) = 1`.
    pub fn poly_part(&self) -> &PolyF2 {
        &self.poly
    }

    /// The power of t split off by the canonical factorization.
    pub fn unit_exp(&self) -> i64 {
        self.offset
    }

    pub fn from_parts(offset: i64, poly: PolyF2) -> Self {
        Self::normalized(offset, poly)
    }

    pub fn coeff(&self, exp: i64) -> bool {
        exp >= self.offset && self.poly.coeff((exp - self.offset) as usize)
    }

    pub fn exponents(&self) -> Vec<i64> {
        self.poly
            .exponents()
            .into_iter()
            .map(|e| e as i64 + self.offset)
            .collect()
    }

    pub fn term_count(&self) -> usize {
        self.poly.term_count()
    }

    pub fn min_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset)
        }
    }

    pub fn max_exp(&self) -> Option<i64> {
        Some(self.poly.degree()? as i64 + self.offset)
    }

    /// `Some((k, 1))` iff the value is the unit t^k.
    pub fn as_unit(&self) -> Option<(i64, i8)> {
        if self.poly.is_one() {
            Some((self.offset, 1))
        } else {
            None
        }
    }
}

impl Ring for LaurentF2 {
    const TAG: RingTag = RingTag::F2Laurent;

    fn zero() -> Self {
        Self::default()
    }

    fn one() -> Self {
        Self {
            offset: 0,
            poly: PolyF2::one(),
        }
    }

    fn t_pow(k: i64) -> Self {
        Self {
            offset: k,
            poly: PolyF2::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn is_one(&self) -> bool {
        self.offset == 0 && self.poly.is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let min = self.offset.min(rhs.offset);
        let a = self.poly.shl((self.offset - min) as usize);
        let b = rhs.poly.shl((rhs.offset - min) as usize);
        Self::normalized(min, a.add(&b))
    }

    fn neg(&self) -> Self {
        self.clone()
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::default();
        }
        // Constant terms are 1, so the product needs no renormalization.
        Self {
            offset: self.offset + rhs.offset,
            poly: self.poly.mul(&rhs.poly),
        }
    }

    fn inv_unit(&self) -> Option<Self> {
        if self.poly.is_one() {
            Some(Self::t_pow(-self.offset))
        } else {
            None
        }
    }

    fn encode(&self, out: &mut String) {
        use fmt::Write;
        for (i, e) in self.exponents().into_iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write!(out, "{e}").unwrap();
        }
    }

    fn to_json(&self) -> serde_json::Value {
        json!(self
            .exponents()
            .into_iter()
            .map(|e| json!([e]))
            .collect::<Vec<_>>())
    }
}

impl fmt::Display for LaurentF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut exps = self.exponents();
        exps.reverse();
        for (i, e) in exps.into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "1")?,
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentF2({self})")
    }
}
