//! The reduced Burau representation of the 4-strand braid group, over
//! Z[t, t^-1] and F2[t, t^-1], its projectivization, and kernel predicates.
//!
//! The generator matrices are pinned by two requirements checked in the
//! test suite: the braid relations hold over the integers, and the mod-2
//! images of x = s1 s2 s3 and y = s1 s2 s3 s1 are the published matrices
//! t*[[0,0,1],[1,0,1],[0,1,1]] and t*[[0,0,1],[t,1,1],[0,1,1]].

use crate::error::Result;
use crate::matrix::{Mat3, ProjMat};
use crate::ring::{LaurentF2, Ring};
use crate::words::{GroupWord, Letter, Sign};

/// Image of the braid generator s_i (i in 1..=3).
pub fn sigma<R: Ring>(i: u8) -> Mat3<R> {
    let o = R::one;
    let z = R::zero;
    let t = || R::t_pow(1);
    let mt = || R::t_pow(1).neg();
    match i {
        1 => Mat3::from_rows([[mt(), o(), z()], [z(), o(), z()], [z(), z(), o()]]),
        2 => Mat3::from_rows([[o(), z(), z()], [t(), mt(), o()], [z(), z(), o()]]),
        3 => Mat3::from_rows([[o(), z(), z()], [z(), o(), z()], [z(), t(), mt()]]),
        _ => panic!("braid generator index out of range: {i}"),
    }
}

/// Whether the braid relations hold for the generator matrices over `R`.
pub fn braid_relations_hold<R: Ring>() -> bool {
    let s: Vec<Mat3<R>> = (1..=3).map(sigma).collect();
    let (s1, s2, s3) = (&s[0], &s[1], &s[2]);
    s1.mul(s2).mul(s1) == s2.mul(s1).mul(s2)
        && s2.mul(s3).mul(s2) == s3.mul(s2).mul(s3)
        && s1.mul(s3) == s3.mul(s1)
}

/// Evaluates a word under the representation. Words over {x, y, D} are
/// rewritten into braid letters first; the stable letter t is rejected.
pub fn eval_braid<R: Ring>(w: &GroupWord) -> Result<Mat3<R>> {
    let bw = w.to_braid()?;
    let gens: Vec<Mat3<R>> = (1..=3).map(sigma).collect();
    let invs: Vec<Mat3<R>> = gens
        .iter()
        .map(|g| g.inv().expect("generator determinant is a unit"))
        .collect();
    let mut acc = Mat3::identity();
    for &(l, s) in bw.letters() {
        let i = match l {
            Letter::S1 => 0,
            Letter::S2 => 1,
            Letter::S3 => 2,
            _ => unreachable!("to_braid yields braid letters"),
        };
        let m = match s {
            Sign::Pos => &gens[i],
            Sign::Neg => &invs[i],
        };
        acc = acc.mul(m);
    }
    Ok(acc)
}

/// The projectivized mod-2 evaluation.
pub fn gamma_eval(w: &GroupWord) -> Result<ProjMat<LaurentF2>> {
    ProjMat::new(eval_braid::<LaurentF2>(w)?)
}

/// Membership in the kernel of the mod-2 representation (image = identity).
pub fn kernel_mod2(w: &GroupWord) -> Result<bool> {
    Ok(eval_braid::<LaurentF2>(w)?.is_identity())
}

/// Membership in the kernel of the projectivized map (image is scalar).
pub fn kernel_gamma(w: &GroupWord) -> Result<bool> {
    Ok(eval_braid::<LaurentF2>(w)?.is_scalar())
}

pub fn det_of_word<R: Ring>(w: &GroupWord) -> Result<R> {
    Ok(eval_braid::<R>(w)?.det())
}

fn lf2(exps: &[i64]) -> LaurentF2 {
    LaurentF2::from_exponents(exps.iter().copied())
}

/// Published mod-2 matrix of x = s1 s2 s3: t * [[0,0,1],[1,0,1],[0,1,1]].
pub fn golden_x() -> Mat3<LaurentF2> {
    Mat3::from_rows([
        [lf2(&[]), lf2(&[]), lf2(&[1])],
        [lf2(&[1]), lf2(&[]), lf2(&[1])],
        [lf2(&[]), lf2(&[1]), lf2(&[1])],
    ])
}

/// Published mod-2 matrix of y = s1 s2 s3 s1: t * [[0,0,1],[t,1,1],[0,1,1]].
pub fn golden_y() -> Mat3<LaurentF2> {
    Mat3::from_rows([
        [lf2(&[]), lf2(&[]), lf2(&[1])],
        [lf2(&[2]), lf2(&[1]), lf2(&[1])],
        [lf2(&[]), lf2(&[1]), lf2(&[1])],
    ])
}

/// Published mod-2 matrix of yxy: [[t^4,0,0],[t^4,t^3(1+t),t^4],[t^4,t^3,0]].
pub fn golden_yxy() -> Mat3<LaurentF2> {
    Mat3::from_rows([
        [lf2(&[4]), lf2(&[]), lf2(&[])],
        [lf2(&[4]), lf2(&[3, 4]), lf2(&[4])],
        [lf2(&[4]), lf2(&[3]), lf2(&[])],
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::LaurentInt;
    use crate::words::{family_x, parse_word, word_x, word_y, word_yxy, GroupWord};

    fn w(s: &str) -> GroupWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn braid_relations() {
        assert!(braid_relations_hold::<LaurentInt>());
        assert!(braid_relations_hold::<LaurentF2>());
    }

    #[test]
    fn golden_images() {
        assert_eq!(eval_braid::<LaurentF2>(&word_x()).unwrap(), golden_x());
        assert_eq!(eval_braid::<LaurentF2>(&word_y()).unwrap(), golden_y());
        assert_eq!(eval_braid::<LaurentF2>(&word_yxy()).unwrap(), golden_yxy());
        // y = x * sigma(1)
        assert_eq!(golden_x().mul(&sigma::<LaurentF2>(1)), golden_y());
    }

    #[test]
    fn full_twist_is_t4_identity() {
        let m = eval_braid::<LaurentInt>(&w("D^2")).unwrap();
        assert_eq!(m, Mat3::identity().scale(&LaurentInt::monomial(4, 1)));
        assert!(m.is_scalar());
        assert!(gamma_eval(&w("D^2")).unwrap().is_identity());
        assert!(eval_braid::<LaurentInt>(&GroupWord::empty())
            .unwrap()
            .is_identity());
    }

    #[test]
    fn presentation_relations_over_z() {
        let x4 = eval_braid::<LaurentInt>(&w("x^4")).unwrap();
        let y3 = eval_braid::<LaurentInt>(&w("y^3")).unwrap();
        let d2 = eval_braid::<LaurentInt>(&w("D^2")).unwrap();
        assert_eq!(x4, y3);
        assert_eq!(x4, d2);
        assert!(eval_braid::<LaurentInt>(&w("[ x^2 , y x y ]"))
            .unwrap()
            .is_identity());
    }

    #[test]
    fn central_scalar_invariance() {
        for s in ["x", "y x^-1", "x y^2 x^-1"] {
            let word = w(s);
            let a = gamma_eval(&word).unwrap();
            let b = gamma_eval(&word.concat(&w("D^2")).unwrap()).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn kernel_predicates() {
        let x1 = family_x(1, 8).unwrap();
        assert!(kernel_mod2(&x1.pow(4)).unwrap());
        assert!(kernel_gamma(&w("x^4")).unwrap());
        assert!(!kernel_mod2(&w("x^4")).unwrap());
        assert!(!kernel_mod2(&w("s1")).unwrap());
        assert!(!kernel_gamma(&w("x")).unwrap());
    }

    #[test]
    fn determinants() {
        assert_eq!(
            det_of_word::<LaurentF2>(&word_x()).unwrap(),
            LaurentF2::t_pow(3)
        );
        let x1 = family_x(1, 8).unwrap();
        assert!(det_of_word::<LaurentInt>(&x1).unwrap().is_one());
        assert_eq!(
            det_of_word::<LaurentInt>(&w("D^2")).unwrap(),
            LaurentInt::monomial(12, 1)
        );
        // det(yxy) = t^11 = det(y)^2 det(x)
        let dy = det_of_word::<LaurentF2>(&word_y()).unwrap();
        let dx = det_of_word::<LaurentF2>(&word_x()).unwrap();
        assert_eq!(golden_yxy().det(), LaurentF2::t_pow(11));
        assert_eq!(dy.mul(&dy).mul(&dx), LaurentF2::t_pow(11));
    }

    #[test]
    fn homomorphism_on_samples() {
        let samples = ["x y", "y^-1 x", "s1 s2^-1", "s3 s1 s2"];
        for a in samples {
            for b in samples {
                let (wa, wb) = (w(a), w(b));
                if wa.alphabet() != wb.alphabet() {
                    continue;
                }
                let ab = wa.concat(&wb).unwrap();
                assert_eq!(
                    eval_braid::<LaurentF2>(&ab).unwrap(),
                    eval_braid::<LaurentF2>(&wa)
                        .unwrap()
                        .mul(&eval_braid::<LaurentF2>(&wb).unwrap())
                );
            }
        }
    }

    #[test]
    fn stable_letter_is_rejected() {
        assert!(eval_braid::<LaurentF2>(&w("t x t^-1")).is_err());
    }
}
