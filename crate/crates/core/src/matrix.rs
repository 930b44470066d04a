//! Exact 3x3 matrix algebra over the entry rings, with projective
//! canonical forms for PGL-level equality.

use std::fmt;

use serde_json::json;

use crate::error::{Error, Result};
use crate::ring::{LaurentF2, LaurentInt, RatF2, Ring};

/// 3x3 matrix over an exact ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat3<R: Ring> {
    rows: [[R; 3]; 3],
}

impl<R: Ring> Mat3<R> {
    pub fn from_rows(rows: [[R; 3]; 3]) -> Self {
        Self { rows }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> R) -> Self {
        Self {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn entry(&self, i: usize, j: usize) -> &R {
        &self.rows[i][j]
    }

    pub fn entries(&self) -> impl Iterator<Item = &R> {
        self.rows.iter().flatten()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| {
            let mut acc = self.rows[i][0].mul(&rhs.rows[0][j]);
            for k in 1..3 {
                acc = acc.add(&self.rows[i][k].mul(&rhs.rows[k][j]));
            }
            acc
        })
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_fn(|i, j| self.rows[i][j].mul(c))
    }

    /// Cofactor-expansion determinant.
    pub fn det(&self) -> R {
        let m = &self.rows;
        let minor = |a: usize, b: usize, c: usize, d: usize| {
            m[1][a].mul(&m[2][b]).sub(&m[1][c].mul(&m[2][d]))
        };
        let t0 = m[0][0].mul(&minor(1, 2, 2, 1));
        let t1 = m[0][1].mul(&minor(0, 2, 2, 0));
        let t2 = m[0][2].mul(&minor(0, 1, 1, 0));
        t0.sub(&t1).add(&t2)
    }

    /// Transpose of the cofactor matrix, so `self * adjugate = det * I`.
    pub fn adjugate(&self) -> Self {
        let m = &self.rows;
        let minor = |r: usize, c: usize| {
            let (r0, r1) = match r {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let (c0, c1) = match c {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let det = m[r0][c0].mul(&m[r1][c1]).sub(&m[r0][c1].mul(&m[r1][c0]));
            if (r + c).is_multiple_of(2) {
                det
            } else {
                det.neg()
            }
        };
        Self::from_fn(|i, j| minor(j, i))
    }

    /// Adjugate-based inverse: needs the determinant to be a unit, which
    /// avoids leaving the ring (no fraction field required over Laurent
    /// rings).
    pub fn inv(&self) -> Result<Self> {
        let d = self.det();
        let di = d
            .inv_unit()
            .ok_or_else(|| Error::SingularMatrix(d.to_string()))?;
        Ok(self.adjugate().scale(&di))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::identity();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// True iff the matrix is `c * I` for a unit `c`.
    pub fn is_scalar(&self) -> bool {
        let d = &self.rows[0][0];
        if d.inv_unit().is_none() {
            return false;
        }
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    if self.rows[i][j] != *d {
                        return false;
                    }
                } else if !self.rows[i][j].is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> Mat3<S> {
        Mat3::from_fn(|i, j| f(&self.rows[i][j]))
    }

    /// Canonical byte string: ring tag plus the nine entry encodings in
    /// row-major order. Injective on canonical values and stable across
    /// runs, so it doubles as a dedup key for group enumeration.
    pub fn canonical_string(&self) -> String {
        let mut out = String::from(R::TAG.as_str());
        out.push_str(":[");
        for (k, e) in self.entries().enumerate() {
            if k > 0 {
                out.push('|');
            }
            e.encode(&mut out);
        }
        out.push(']');
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "ring": R::TAG.as_str(),
            "entries": self.entries().map(|e| e.to_json()).collect::<Vec<_>>(),
        })
    }
}

impl Mat3<LaurentInt> {
    pub fn mod2(&self) -> Mat3<LaurentF2> {
        self.map(|e| e.mod2())
    }
}

impl Mat3<LaurentF2> {
    pub fn embed_rational(&self) -> Mat3<RatF2> {
        self.map(|e| e.clone().into())
    }
}

impl<R: Ring> fmt::Display for Mat3<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..3 {
            writeln!(
                f,
                "[{}, {}, {}]",
                self.rows[i][0], self.rows[i][1], self.rows[i][2]
            )?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for Mat3<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat3[{}]", self.canonical_string())
    }
}

/// Rings whose unit group admits a canonical representative on each scalar
/// orbit of invertible matrices.
pub trait ProjRing: Ring {
    /// A unit `u` such that `u * m` is the canonical orbit representative.
    fn proj_normalizer(m: &Mat3<Self>) -> Option<Self>;
}

impl ProjRing for LaurentF2 {
    // Units are exactly t^k: shift so the minimal exponent over all entries
    // is zero (at least one entry then has a constant term).
    fn proj_normalizer(m: &Mat3<Self>) -> Option<Self> {
        let min = m.entries().filter_map(|e| e.min_exp()).min()?;
        Some(LaurentF2::t_pow(-min))
    }
}

impl ProjRing for LaurentInt {
    // Units are ±t^k: shift the minimal exponent to zero and make the
    // lowest-degree coefficient of the first nonzero entry positive.
    fn proj_normalizer(m: &Mat3<Self>) -> Option<Self> {
        let min = m.entries().filter_map(|e| e.min_exp()).min()?;
        let lead = m.entries().find(|e| !e.is_zero())?;
        let low = lead.coeff(lead.min_exp()?);
        use num_traits::Signed;
        let sign = if low.is_negative() { -1 } else { 1 };
        Some(LaurentInt::monomial(-min, sign))
    }
}

impl ProjRing for RatF2 {
    // Every nonzero element is a unit: normalize the first nonzero entry
    // (row-major) to 1.
    fn proj_normalizer(m: &Mat3<Self>) -> Option<Self> {
        m.entries().find(|e| !e.is_zero())?.inv_unit()
    }
}

/// Canonical representative of a scalar orbit in PGL(3).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjMat<R: ProjRing> {
    rep: Mat3<R>,
}

impl<R: ProjRing> ProjMat<R> {
    /// Canonicalizes an invertible matrix. Errors on singular input.
    pub fn new(m: Mat3<R>) -> Result<Self> {
        let d = m.det();
        if d.inv_unit().is_none() {
            return Err(Error::SingularMatrix(d.to_string()));
        }
        let u = R::proj_normalizer(&m).expect("invertible matrix is nonzero");
        Ok(Self { rep: m.scale(&u) })
    }

    pub fn identity() -> Self {
        Self {
            rep: Mat3::identity(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rep.is_identity()
    }

    pub fn representative(&self) -> &Mat3<R> {
        &self.rep
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(self.rep.mul(&rhs.rep)).expect("product of invertibles")
    }

    pub fn inv(&self) -> Self {
        Self::new(self.rep.inv().expect("invertible")).expect("inverse is invertible")
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut acc = Self::identity();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    pub fn canonical_string(&self) -> String {
        self.rep.canonical_string()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = self.rep.to_json();
        v["projective"] = json!(true);
        v
    }
}

impl<R: ProjRing> fmt::Display for ProjMat<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(f)
    }
}

impl<R: ProjRing> fmt::Debug for ProjMat<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjMat[{}]", self.canonical_string())
    }
}

/// PGL-level equality: `a = c * b` for some unit `c`.
pub fn proj_eq<R: ProjRing>(a: &Mat3<R>, b: &Mat3<R>) -> Result<bool> {
    Ok(ProjMat::new(a.clone())? == ProjMat::new(b.clone())?)
}

/// Parses a canonical `f2l:` matrix string back into its matrix.
///
/// Accepts exactly what `canonical_string` over F2 Laurent entries emits;
/// anything else is a parse error.
pub fn parse_canonical_f2l(s: &str) -> Result<Mat3<LaurentF2>> {
    let body = s
        .strip_prefix("f2l:[")
        .and_then(|rest| rest.strip_suffix(']'))
        .ok_or_else(|| Error::parse(0, "expected f2l:[...]"))?;
    let fields: Vec<&str> = body.split('|').collect();
    if fields.len() != 9 {
        return Err(Error::parse(
            0,
            format!("expected 9 entries, got {}", fields.len()),
        ));
    }
    let mut entries = Vec::with_capacity(9);
    for (k, field) in fields.iter().enumerate() {
        let mut exps = Vec::new();
        if !field.is_empty() {
            let mut prev: Option<i64> = None;
            for part in field.split(',') {
                let e: i64 = part
                    .parse()
                    .map_err(|_| Error::parse(k, format!("bad exponent {part:?}")))?;
                if prev.is_some_and(|p| p >= e) {
                    return Err(Error::parse(k, "exponents not strictly increasing"));
                }
                prev = Some(e);
                exps.push(e);
            }
        }
        entries.push(LaurentF2::from_exponents(exps));
    }
    let mut it = entries.into_iter();
    Ok(Mat3::from_fn(|_, _| it.next().unwrap()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lf2(exps: &[i64]) -> LaurentF2 {
        LaurentF2::from_exponents(exps.iter().copied())
    }

    fn scalar_f2(k: i64) -> Mat3<LaurentF2> {
        Mat3::identity().scale(&LaurentF2::t_pow(k))
    }

    // t * [[0,0,1],[1,0,1],[0,1,1]]
    fn x_mat() -> Mat3<LaurentF2> {
        Mat3::from_rows([
            [lf2(&[]), lf2(&[]), lf2(&[1])],
            [lf2(&[1]), lf2(&[]), lf2(&[1])],
            [lf2(&[]), lf2(&[1]), lf2(&[1])],
        ])
    }

    #[test]
    fn identity_is_neutral() {
        let a = x_mat();
        assert_eq!(a.mul(&Mat3::identity()), a);
        assert_eq!(Mat3::identity().mul(&a), a);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = x_mat();
        let inv = a.inv().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(inv.mul(&a).is_identity());
        assert_eq!(inv.inv().unwrap(), a);
    }

    #[test]
    fn det_of_x_is_t_cubed() {
        assert_eq!(x_mat().det(), lf2(&[3]));
        assert_eq!(Mat3::<LaurentF2>::identity().det(), LaurentF2::one());
    }

    #[test]
    fn non_unit_determinant_is_singular() {
        // diag(1+t, 1, 1) has determinant 1+t, not a unit of F2[t,t^-1]
        let mut m = Mat3::<LaurentF2>::identity();
        m = Mat3::from_fn(|i, j| {
            if (i, j) == (0, 0) {
                lf2(&[0, 1])
            } else {
                m.entry(i, j).clone()
            }
        });
        assert!(matches!(m.inv(), Err(Error::SingularMatrix(_))));
        assert!(ProjMat::new(m).is_err());
    }

    #[test]
    fn projective_scalar_collapse() {
        let p = ProjMat::new(scalar_f2(4)).unwrap();
        assert!(p.is_identity());
        let a = x_mat();
        let scaled = a.scale(&LaurentF2::t_pow(7));
        assert_eq!(
            ProjMat::new(a.clone()).unwrap(),
            ProjMat::new(scaled).unwrap()
        );
        // canonical form of x drops the factor t
        let canon = ProjMat::new(a).unwrap();
        assert_eq!(canon.representative().entry(0, 2), &LaurentF2::one());
        assert_eq!(canon.representative().entry(0, 0), &LaurentF2::zero());
    }

    #[test]
    fn scalar_recognition() {
        assert!(scalar_f2(4).is_scalar());
        assert!(!x_mat().is_scalar());
        // diag(2) over the integers is not unit-scalar
        let two = Mat3::<LaurentInt>::identity().scale(&LaurentInt::monomial(0, 2));
        assert!(!two.is_scalar());
        let m = Mat3::<LaurentInt>::identity().scale(&LaurentInt::monomial(4, -1));
        assert!(m.is_scalar());
    }

    #[test]
    fn int_projective_sign_normalization() {
        let a = Mat3::<LaurentInt>::identity().scale(&LaurentInt::monomial(2, -1));
        let b = Mat3::<LaurentInt>::identity().scale(&LaurentInt::monomial(-1, 1));
        assert!(proj_eq(&a, &b).unwrap());
        assert!(ProjMat::new(a).unwrap().is_identity());
    }

    #[test]
    fn serialization_is_canonical() {
        let a = x_mat();
        assert_eq!(a.canonical_string(), a.clone().canonical_string());
        let p1 = ProjMat::new(a.clone()).unwrap();
        let p2 = ProjMat::new(a.scale(&LaurentF2::t_pow(5))).unwrap();
        assert_eq!(p1.canonical_string(), p2.canonical_string());
        // distinct canonical matrices have distinct strings
        let b = Mat3::from_fn(|i, j| {
            if (i, j) == (1, 0) {
                lf2(&[2])
            } else {
                x_mat().entry(i, j).clone()
            }
        });
        assert_ne!(a.canonical_string(), b.canonical_string());
    }

    #[test]
    fn canonical_string_roundtrip() {
        let a = x_mat();
        let parsed = parse_canonical_f2l(&a.canonical_string()).unwrap();
        assert_eq!(parsed, a);
        assert!(parse_canonical_f2l("f2l:[0|0]").is_err());
        assert!(parse_canonical_f2l("zl:[||||||||]").is_err());
        assert!(parse_canonical_f2l("f2l:[3,1|||||||0]").is_err());
    }
}
