//! Exact coefficient arithmetic: Laurent polynomials over the integers and
//! over F2, and the rational function field F2(t).
//!
//! All values are immutable and canonical: two values compare equal exactly
//! when they represent the same ring element, so they can be used directly as
//! dedup keys. Units of the Laurent rings are `±t^k` (just `t^k` over F2),
//! which is what makes projective normalization in [`crate::matrix`] exact.

mod f2;
mod laurent;
mod rational;

pub use f2::PolyF2;
pub use laurent::{LaurentF2, LaurentInt};
pub use rational::RatF2;

/// Which coefficient structure a matrix or serialized value lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingTag {
    IntLaurent,
    F2Laurent,
    F2Rational,
}

impl RingTag {
    /// Stable tag used as the prefix of canonical byte strings.
    pub fn as_str(self) -> &'static str {
        match self {
            RingTag::IntLaurent => "zl",
            RingTag::F2Laurent => "f2l",
            RingTag::F2Rational => "f2q",
        }
    }
}

/// Common interface of the three entry rings.
///
/// `t_pow` embeds the distinguished variable; every implementation keeps a
/// unique canonical form so `==` is semantic equality.
pub trait Ring:
    Clone + PartialEq + Eq + std::hash::Hash + std::fmt::Debug + std::fmt::Display
{
    const TAG: RingTag;

    fn zero() -> Self;
    fn one() -> Self;
    /// The monomial t^k.
    fn t_pow(k: i64) -> Self;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// Multiplicative inverse when `self` is a unit of the ring.
    fn inv_unit(&self) -> Option<Self>;

    /// Append the canonical encoding (no ring tag) to `out`.
    fn encode(&self, out: &mut String);

    /// JSON form following the exchange format of this crate.
    fn to_json(&self) -> serde_json::Value;
}
