//! Dense bit-packed polynomials over F2.
//!
//! Bit `i` is the coefficient of t^i. Addition is XOR and multiplication is
//! shift-and-XOR over 64-bit limbs, which keeps the iterated matrix products
//! elsewhere in the crate fast even when degrees reach the hundreds.

use std::fmt;

use crate::error::{Error, Result};

/// Polynomial over F2 with nonnegative exponents.
///
/// The zero polynomial has an empty limb vector; otherwise the top limb is
/// nonzero. Over F2 every nonzero polynomial is monic, so gcds need no
/// leading-coefficient normalization.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyF2 {
    limbs: Vec<u64>,
}

fn xor_shifted(dst: &mut Vec<u64>, src: &[u64], shift: usize) {
    let (ws, bs) = (shift / 64, shift % 64);
    let need = ws + src.len() + 1;
    if dst.len() < need {
        dst.resize(need, 0);
    }
    if bs == 0 {
        for (i, &s) in src.iter().enumerate() {
            dst[ws + i] ^= s;
        }
    } else {
        let mut carry = 0u64;
        for (i, &s) in src.iter().enumerate() {
            dst[ws + i] ^= (s << bs) | carry;
            carry = s >> (64 - bs);
        }
        dst[ws + src.len()] ^= carry;
    }
}

impl PolyF2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { limbs: vec![1] }
    }

    pub fn monomial(degree: usize) -> Self {
        let mut p = Self::default();
        p.toggle(degree);
        p
    }

    /// XOR-accumulates the given exponents (a repeated exponent cancels).
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut p = Self::default();
        for e in exps {
            p.toggle(e);
        }
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    fn toggle(&mut self, i: usize) {
        let w = i / 64;
        if self.limbs.len() <= w {
            self.limbs.resize(w + 1, 0);
        }
        self.limbs[w] ^= 1u64 << (i % 64);
        self.trim();
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs == [1]
    }

    pub fn coeff(&self, i: usize) -> bool {
        let w = i / 64;
        w < self.limbs.len() && (self.limbs[w] >> (i % 64)) & 1 == 1
    }

    pub fn constant_term(&self) -> bool {
        self.coeff(0)
    }

    /// Highest set exponent; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.limbs.last()?;
        Some((self.limbs.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    /// Lowest set exponent; `None` for the zero polynomial.
    pub fn trailing_zeros(&self) -> Option<usize> {
        for (w, &limb) in self.limbs.iter().enumerate() {
            if limb != 0 {
                return Some(w * 64 + limb.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &limb) in self.limbs.iter().enumerate() {
            let mut l = limb;
            while l != 0 {
                out.push(w * 64 + l.trailing_zeros() as usize);
                l &= l - 1;
            }
        }
        out
    }

    pub fn term_count(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (long, short) = if self.limbs.len() >= rhs.limbs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut limbs = long.limbs.clone();
        for (i, &s) in short.limbs.iter().enumerate() {
            limbs[i] ^= s;
        }
        let mut p = Self { limbs };
        p.trim();
        p
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::default();
        }
        // Iterate the set bits of the operand with fewer terms.
        let (bits, other) = if self.term_count() <= rhs.term_count() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = vec![0u64; self.limbs.len() + rhs.limbs.len()];
        for (w, &limb) in bits.limbs.iter().enumerate() {
            let mut l = limb;
            while l != 0 {
                let b = l.trailing_zeros() as usize;
                l &= l - 1;
                xor_shifted(&mut out, &other.limbs, w * 64 + b);
            }
        }
        let mut p = Self { limbs: out };
        p.trim();
        p
    }

    /// Multiplication by t^n.
    pub fn shl(&self, n: usize) -> Self {
        if self.is_zero() || n == 0 {
            return self.clone();
        }
        let mut out = Vec::new();
        xor_shifted(&mut out, &self.limbs, n);
        let mut p = Self { limbs: out };
        p.trim();
        p
    }

    /// Exact division by t^n (low bits must be zero).
    pub fn shr(&self, n: usize) -> Self {
        debug_assert!(self.trailing_zeros().is_none_or(|t| t >= n));
        Self::from_exponents(self.exponents().into_iter().map(|e| e - n))
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Self::default();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            xor_shifted(&mut rem.limbs, &divisor.limbs, shift);
            rem.trim();
            quot.toggle(shift);
        }
        Ok((quot, rem))
    }

    /// Monic gcd. Errors when both inputs are zero.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::InvalidRingOp("gcd(0, 0) is undefined".into()));
        }
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Exact quotient; errors when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InvalidRingOp(format!(
                "{divisor} does not divide {self}"
            )))
        }
    }
}

impl fmt::Display for PolyF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut exps = self.exponents();
        exps.reverse();
        for (i, e) in exps.iter().enumerate() {
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

impl fmt::Debug for PolyF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyF2({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(exps: &[usize]) -> PolyF2 {
        PolyF2::from_exponents(exps.iter().copied())
    }

    #[test]
    fn frobenius_square() {
        let one_plus_t = p(&[0, 1]);
        assert_eq!(one_plus_t.mul(&one_plus_t), p(&[0, 2]));
    }

    #[test]
    fn gcd_of_square_factors() {
        // 1 + t^2 = (1 + t)^2 over F2, so gcd with (1 + t)^3 is the square.
        let a = p(&[0, 2]);
        let b = p(&[0, 1]).mul(&p(&[0, 1])).mul(&p(&[0, 1]));
        assert_eq!(PolyF2::gcd(&a, &b).unwrap(), p(&[0, 2]));
    }

    #[test]
    fn gcd_with_zero_and_coprime() {
        let a = p(&[0, 3, 5]);
        assert_eq!(PolyF2::gcd(&a, &PolyF2::zero()).unwrap(), a);
        assert_eq!(PolyF2::gcd(&p(&[1]), &p(&[0, 1])).unwrap(), PolyF2::one());
        assert!(PolyF2::gcd(&PolyF2::zero(), &PolyF2::zero()).is_err());
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = p(&[0, 1, 4, 7]);
        let d = p(&[0, 2]);
        let (q, r) = a.div_rem(&d).unwrap();
        assert_eq!(q.mul(&d).add(&r), a);
        assert!(r.degree().unwrap_or(0) < d.degree().unwrap());
    }

    #[test]
    fn degree_and_trailing() {
        let a = p(&[3, 70]);
        assert_eq!(a.degree(), Some(70));
        assert_eq!(a.trailing_zeros(), Some(3));
        assert_eq!(a.shr(3), p(&[0, 67]));
        assert_eq!(PolyF2::zero().degree(), None);
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[0, 1, 5]).to_string(), "t^5 + t + 1");
        assert_eq!(PolyF2::zero().to_string(), "0");
    }
}
