//! The rational function field F2(t), as reduced fractions.

use std::fmt;

use serde_json::json;

use crate::error::{Error, Result};

use super::{LaurentF2, PolyF2, Ring, RingTag};

/// Element of F2(t) in canonical form.
///
/// The numerator is a Laurent polynomial and the denominator a polynomial
/// with nonzero constant term: every power of t is absorbed into the
/// numerator, which is possible because the units of F2[t, t^-1] are exactly
/// t^k. Together with gcd(num poly part, den) = 1 this makes the pair
/// unique, so structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatF2 {
    num: LaurentF2,
    den: PolyF2,
}

impl RatF2 {
    /// Builds the reduced canonical fraction. Errors when `den = 0`.
    pub fn new(num: LaurentF2, den: PolyF2) -> Result<Self> {
        let Some(shift) = den.trailing_zeros() else {
            return Err(Error::DivisionByZero);
        };
        if num.is_zero() {
            return Ok(Self {
                num: LaurentF2::zero(),
                den: PolyF2::one(),
            });
        }
        let num = LaurentF2::from_parts(num.unit_exp() - shift as i64, num.poly_part().clone());
        let den = den.shr(shift);
        let g = PolyF2::gcd(num.poly_part(), &den)?;
        if g.is_one() {
            return Ok(Self { num, den });
        }
        Ok(Self {
            num: LaurentF2::from_parts(num.unit_exp(), num.poly_part().div_exact(&g)?),
            den: den.div_exact(&g)?,
        })
    }

    pub fn num(&self) -> &LaurentF2 {
        &self.num
    }

    pub fn den(&self) -> &PolyF2 {
        &self.den
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        let inv = rhs.inv_unit().ok_or(Error::DivisionByZero)?;
        Ok(self.mul(&inv))
    }
}

impl From<LaurentF2> for RatF2 {
    fn from(num: LaurentF2) -> Self {
        Self {
            num,
            den: PolyF2::one(),
        }
    }
}

impl Ring for RatF2 {
    const TAG: RingTag = RingTag::F2Rational;

    fn zero() -> Self {
        LaurentF2::zero().into()
    }

    fn one() -> Self {
        LaurentF2::one().into()
    }

    fn t_pow(k: i64) -> Self {
        LaurentF2::t_pow(k).into()
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let a = self.num.mul(&LaurentF2::from_parts(0, rhs.den.clone()));
        let b = rhs.num.mul(&LaurentF2::from_parts(0, self.den.clone()));
        // Denominators have nonzero constant term, so the product does too.
        Self::new(a.add(&b), self.den.mul(&rhs.den)).expect("nonzero denominator")
    }

    fn neg(&self) -> Self {
        self.clone()
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        // Cross-cancel before multiplying; each side is already reduced.
        let g1 = PolyF2::gcd(self.num.poly_part(), &rhs.den).expect("nonzero den");
        let g2 = PolyF2::gcd(rhs.num.poly_part(), &self.den).expect("nonzero den");
        let np1 = self.num.poly_part().div_exact(&g1).expect("gcd divides");
        let np2 = rhs.num.poly_part().div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g1).expect("gcd divides");
        Self {
            num: LaurentF2::from_parts(self.num.unit_exp() + rhs.num.unit_exp(), np1.mul(&np2)),
            den: d1.mul(&d2),
        }
    }

    fn inv_unit(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // num = t^k * p with p(0) = 1, so p is a valid denominator.
        Some(Self {
            num: LaurentF2::from_parts(-self.num.unit_exp(), self.den.clone()),
            den: self.num.poly_part().clone(),
        })
    }

    fn encode(&self, out: &mut String) {
        self.num.encode(out);
        out.push('/');
        for (i, e) in self.den.exponents().into_iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            use fmt::Write;
            write!(out, "{e}").unwrap();
        }
    }

    fn to_json(&self) -> serde_json::Value {
        json!({
            "num": self.num.to_json(),
            "den": self.den.exponents().into_iter().map(|e| json!([e])).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for RatF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatF2({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lf2(exps: &[i64]) -> LaurentF2 {
        LaurentF2::from_exponents(exps.iter().copied())
    }

    fn pf2(exps: &[usize]) -> PolyF2 {
        PolyF2::from_exponents(exps.iter().copied())
    }

    fn frac(n: &[i64], d: &[usize]) -> RatF2 {
        RatF2::new(lf2(n), pf2(d)).unwrap()
    }

    #[test]
    fn monomial_denominator_absorbed() {
        // t^2 / (t + t^2) = t / (1 + t)
        let a = frac(&[2], &[1, 2]);
        let b = frac(&[1], &[0, 1]);
        assert_eq!(a, b);
    }

    #[test]
    fn inverse_of_fraction() {
        // (t^3 / (1+t)^2)^-1 = t^-3 * (1+t)^2 with denominator 1
        let a = frac(&[3], &[0, 2]);
        let inv = a.inv_unit().unwrap();
        assert_eq!(inv.num(), &lf2(&[-3, -1]));
        assert!(inv.den().is_one());
        assert!(a.mul(&inv).is_one());
    }

    #[test]
    fn char_two_addition() {
        let a = frac(&[1], &[0, 1]);
        assert!(a.add(&a).is_zero());
    }

    #[test]
    fn square_cancellation() {
        // (1 + t^2)/(1 + t) = 1 + t because 1 + t^2 = (1 + t)^2
        let a = frac(&[0, 2], &[0, 1]);
        let b: RatF2 = lf2(&[0, 1]).into();
        assert_eq!(a, b);
        assert_ne!(RatF2::one(), b);
    }

    #[test]
    fn division_by_zero() {
        assert!(RatF2::new(LaurentF2::one(), PolyF2::zero()).is_err());
        assert!(RatF2::zero().inv_unit().is_none());
        assert!(RatF2::one().div(&RatF2::zero()).is_err());
    }

    #[test]
    fn canonical_is_idempotent() {
        let a = frac(&[-1, 0, 4], &[0, 1, 3]);
        let again = RatF2::new(a.num().clone(), a.den().clone()).unwrap();
        assert_eq!(a, again);
    }
}
