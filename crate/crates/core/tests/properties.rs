//! Randomized algebra-law tests for the ring, matrix and word layers.

use burau2::burau::eval_braid;
use burau2::matrix::{proj_eq, ProjMat};
use burau2::ring::{LaurentF2, LaurentInt, PolyF2, RatF2, Ring};
use burau2::words::{braid, GroupWord, Letter, Sign};
use num_bigint::BigInt;
use proptest::prelude::*;

fn laurent_int() -> impl Strategy<Value = LaurentInt> {
    prop::collection::vec((-6i64..=6, -9i64..=9), 0..=6).prop_map(|terms| {
        LaurentInt::from_terms(terms.into_iter().map(|(e, c)| (e, BigInt::from(c))))
    })
}

fn laurent_f2() -> impl Strategy<Value = LaurentF2> {
    prop::collection::vec(-6i64..=6, 0..=6).prop_map(LaurentF2::from_exponents)
}

fn poly_f2() -> impl Strategy<Value = PolyF2> {
    prop::collection::vec(0usize..=8, 0..=6).prop_map(PolyF2::from_exponents)
}

fn rat_f2() -> impl Strategy<Value = RatF2> {
    (laurent_f2(), poly_f2()).prop_filter_map("nonzero denominator", |(num, den)| {
        RatF2::new(num, den).ok()
    })
}

fn braid_word() -> impl Strategy<Value = GroupWord> {
    prop::collection::vec((0u8..3, prop::bool::ANY), 0..=12).prop_map(|letters| {
        GroupWord::from_letters(letters.into_iter().map(|(g, pos)| {
            let l = [Letter::S1, Letter::S2, Letter::S3][g as usize];
            (l, if pos { Sign::Pos } else { Sign::Neg })
        }))
        .expect("single alphabet")
    })
}

proptest! {
    #[test]
    fn int_ring_axioms(a in laurent_int(), b in laurent_int(), c in laurent_int()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&a.neg()), LaurentInt::zero());
        prop_assert_eq!(a.mul(&LaurentInt::one()), a.clone());
    }

    #[test]
    fn f2_ring_axioms(a in laurent_f2(), b in laurent_f2(), c in laurent_f2()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&a), LaurentF2::zero());
    }

    #[test]
    fn unit_recognition(e in -6i64..=6, sign in prop::bool::ANY) {
        let m = LaurentInt::monomial(e, if sign { 1 } else { -1 });
        let (k, s) = m.as_unit().expect("monomial with coefficient ±1 is a unit");
        prop_assert_eq!(k, e);
        prop_assert_eq!(s == 1, sign);
        prop_assert_eq!(m.mul(&m.inv_unit().unwrap()), LaurentInt::one());
        let f = LaurentF2::t_pow(e);
        prop_assert_eq!(f.mul(&f.inv_unit().unwrap()), LaurentF2::one());
    }

    #[test]
    fn gcd_divides_both(a in poly_f2(), b in poly_f2()) {
        prop_assume!(!a.is_zero() || !b.is_zero());
        let g = PolyF2::gcd(&a, &b).unwrap();
        for p in [&a, &b] {
            if !p.is_zero() {
                let (_, r) = p.div_rem(&g).unwrap();
                prop_assert!(r.is_zero());
            }
        }
    }

    #[test]
    fn rational_field_laws(a in rat_f2(), b in rat_f2()) {
        // canonical form is idempotent
        let re = RatF2::new(a.num().clone(), a.den().clone()).unwrap();
        prop_assert_eq!(&re, &a);
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&a), RatF2::zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv_unit().unwrap()).is_one());
        }
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn matrix_laws(u in braid_word(), v in braid_word()) {
        let a = eval_braid::<LaurentF2>(&u).unwrap();
        let b = eval_braid::<LaurentF2>(&v).unwrap();
        // determinant is multiplicative
        prop_assert_eq!(a.mul(&b).det(), a.det().mul(&b.det()));
        // inverse is an involution
        prop_assert_eq!(a.inv().unwrap().inv().unwrap(), a.clone());
        // homomorphism
        let uv = u.concat(&v).unwrap();
        prop_assert_eq!(eval_braid::<LaurentF2>(&uv).unwrap(), a.mul(&b));
    }

    #[test]
    fn projective_canonicalization(u in braid_word(), k in -6i64..=6) {
        let a = eval_braid::<LaurentF2>(&u).unwrap();
        let scaled = a.scale(&LaurentF2::t_pow(k));
        prop_assert!(proj_eq(&a, &scaled).unwrap());
        let canon = ProjMat::new(a).unwrap();
        // idempotent: canonicalizing the representative is the identity
        let again = ProjMat::new(canon.representative().clone()).unwrap();
        prop_assert_eq!(again, canon);
    }

    #[test]
    fn word_reduction_laws(letters in prop::collection::vec((0u8..3, prop::bool::ANY), 0..=20)) {
        let w = GroupWord::from_letters(letters.into_iter().map(|(g, pos)| {
            let l = [Letter::S1, Letter::S2, Letter::S3][g as usize];
            (l, if pos { Sign::Pos } else { Sign::Neg })
        })).unwrap();
        // reduction is idempotent
        let again = GroupWord::from_letters(w.letters().iter().copied()).unwrap();
        prop_assert_eq!(&again, &w);
        // inverse is an involution and cancels
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert!(w.concat(&w.inverse()).unwrap().is_empty());
    }

    #[test]
    fn gamma_ignores_the_center(u in braid_word()) {
        let delta_sq = braid(&[1, 2, 3, 1, 2, 1, 1, 2, 3, 1, 2, 1]);
        let shifted = u.concat(&delta_sq).unwrap();
        let a = burau2::burau::gamma_eval(&u).unwrap();
        let b = burau2::burau::gamma_eval(&shifted).unwrap();
        prop_assert_eq!(a, b);
    }
}
