//! Free-group word calculus over the braid alphabet {s1, s2, s3} and the
//! extended alphabet {x, y, t, D}, plus the recursive word families used
//! throughout the verification suites.
//!
//! Words are always stored freely reduced, so equality of `GroupWord`
//! values is equality in the free group. The letter `t` is a formal stable
//! letter: it has no braid or matrix image, and any attempt to push it
//! through the braid substitution is an error.

mod parse;

pub use parse::parse_word;

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Alphabet {
    Braid,
    Xyt,
    Named,
}

/// A single generator symbol. `Named` generators carry an opaque id and are
/// used for relation checking inside enumerated finite groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    S1,
    S2,
    S3,
    X,
    Y,
    T,
    D,
    Named(u16),
}

impl Letter {
    pub fn alphabet(self) -> Alphabet {
        match self {
            Letter::S1 | Letter::S2 | Letter::S3 => Alphabet::Braid,
            Letter::X | Letter::Y | Letter::T | Letter::D => Alphabet::Xyt,
            Letter::Named(_) => Alphabet::Named,
        }
    }

    fn symbol(self) -> String {
        match self {
            Letter::S1 => "s1".into(),
            Letter::S2 => "s2".into(),
            Letter::S3 => "s3".into(),
            Letter::X => "x".into(),
            Letter::Y => "y".into(),
            Letter::T => "t".into(),
            Letter::D => "D".into(),
            Letter::Named(k) => format!("g{k}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// Freely reduced word over a single alphabet.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupWord {
    letters: Vec<(Letter, Sign)>,
}

fn reduce_append(stack: &mut Vec<(Letter, Sign)>, l: Letter, s: Sign) {
    match stack.last() {
        Some(&(top, ts)) if top == l && ts == s.flip() => {
            stack.pop();
        }
        _ => stack.push((l, s)),
    }
}

impl GroupWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn gen(l: Letter) -> Self {
        Self {
            letters: vec![(l, Sign::Pos)],
        }
    }

    /// Freely reduces a letter sequence; errors when letters from different
    /// alphabets are mixed.
    pub fn from_letters<I: IntoIterator<Item = (Letter, Sign)>>(letters: I) -> Result<Self> {
        let mut stack = Vec::new();
        let mut alphabet: Option<Alphabet> = None;
        for (l, s) in letters {
            match alphabet {
                None => alphabet = Some(l.alphabet()),
                Some(a) if a != l.alphabet() => {
                    return Err(Error::AlphabetMismatch(format!(
                        "letter {} does not belong to the {:?} alphabet",
                        l.symbol(),
                        a
                    )))
                }
                _ => {}
            }
            reduce_append(&mut stack, l, s);
        }
        Ok(Self { letters: stack })
    }

    pub fn letters(&self) -> &[(Letter, Sign)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The alphabet of the word; `None` for the empty word, which is
    /// compatible with every alphabet.
    pub fn alphabet(&self) -> Option<Alphabet> {
        self.letters.first().map(|&(l, _)| l.alphabet())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        match (self.alphabet(), other.alphabet()) {
            (Some(a), Some(b)) if a != b => Err(Error::AlphabetMismatch(format!(
                "cannot combine a {a:?} word with a {b:?} word"
            ))),
            _ => Ok(()),
        }
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut stack = self.letters.clone();
        for &(l, s) in &other.letters {
            reduce_append(&mut stack, l, s);
        }
        Ok(Self { letters: stack })
    }

    pub fn inverse(&self) -> Self {
        Self {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&(l, s)| (l, s.flip()))
                .collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::empty();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base).expect("same alphabet");
        }
        out
    }

    /// Product of `word^exp` factors, freely reduced.
    pub fn compose(parts: &[(&GroupWord, i64)]) -> Result<Self> {
        let mut out = Self::empty();
        for &(w, k) in parts {
            out = out.concat(&w.pow(k))?;
        }
        Ok(out)
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(a: &Self, b: &Self) -> Result<Self> {
        Self::compose(&[(a, -1), (b, -1), (a, 1), (b, 1)])
    }

    /// `by * self * by^-1`.
    pub fn conjugated(&self, by: &Self) -> Result<Self> {
        Self::compose(&[(by, 1), (self, 1), (by, -1)])
    }

    /// Homomorphic image under a generator assignment, freely reduced.
    pub fn substitute(&self, image: impl Fn(Letter) -> Option<GroupWord>) -> Result<Self> {
        let mut out: Vec<(Letter, Sign)> = Vec::new();
        for &(l, s) in &self.letters {
            let img = image(l).ok_or_else(|| Error::MissingAssignment(l.symbol()))?;
            match s {
                Sign::Pos => {
                    for &p in &img.letters {
                        reduce_append(&mut out, p.0, p.1);
                    }
                }
                Sign::Neg => {
                    for &(il, is) in img.letters.iter().rev() {
                        reduce_append(&mut out, il, is.flip());
                    }
                }
            }
        }
        Self::from_letters(out)
    }

    /// Rewrites into the braid alphabet via x -> s1 s2 s3, y -> s1 s2 s3 s1,
    /// D -> s1 s2 s3 s1 s2 s1. Errors when the word contains the stable
    /// letter t, which has no braid image.
    pub fn to_braid(&self) -> Result<Self> {
        match self.alphabet() {
            None | Some(Alphabet::Braid) => Ok(self.clone()),
            Some(Alphabet::Named) => Err(Error::AlphabetMismatch(
                "named words have no braid image".into(),
            )),
            Some(Alphabet::Xyt) => {
                if self.letters.iter().any(|&(l, _)| l == Letter::T) {
                    return Err(Error::StableLetterHasNoImage);
                }
                self.substitute(|l| match l {
                    Letter::X => Some(braid(&[1, 2, 3])),
                    Letter::Y => Some(braid(&[1, 2, 3, 1])),
                    Letter::D => Some(braid(&[1, 2, 3, 1, 2, 1])),
                    _ => None,
                })
            }
        }
    }

    /// Alternates free reduction with deletion of contiguous subwords equal
    /// to a relator or a relator inverse, until a fixpoint. Sound (the result
    /// equals the input in the presented group) but deliberately incomplete.
    pub fn rewrite_with_relators(&self, relators: &[GroupWord]) -> Self {
        let mut patterns: Vec<Vec<(Letter, Sign)>> = Vec::new();
        for r in relators {
            if !r.is_empty() {
                patterns.push(r.letters.clone());
                patterns.push(r.inverse().letters);
            }
        }
        let mut cur = self.letters.clone();
        'outer: loop {
            for pat in &patterns {
                if pat.len() > cur.len() {
                    continue;
                }
                for start in 0..=cur.len() - pat.len() {
                    if cur[start..start + pat.len()] == pat[..] {
                        cur.drain(start..start + pat.len());
                        let mut stack = Vec::with_capacity(cur.len());
                        for &(l, s) in &cur {
                            reduce_append(&mut stack, l, s);
                        }
                        cur = stack;
                        continue 'outer;
                    }
                }
            }
            return Self { letters: cur };
        }
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.letters.len() {
            let (l, s) = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == (l, s) {
                run += 1;
            }
            i += run;
            let exp = s.as_i64() * run as i64;
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if exp == 1 {
                write!(f, "{}", l.symbol())?;
            } else {
                write!(f, "{}^{}", l.symbol(), exp)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupWord({self})")
    }
}

/// Braid word from generator indices (positive only).
pub fn braid(indices: &[u8]) -> GroupWord {
    GroupWord::from_letters(indices.iter().map(|&i| {
        let l = match i {
            1 => Letter::S1,
            2 => Letter::S2,
            3 => Letter::S3,
            _ => panic!("braid generator index out of range: {i}"),
        };
        (l, Sign::Pos)
    }))
    .expect("single alphabet")
}

pub fn word_x() -> GroupWord {
    GroupWord::gen(Letter::X)
}

pub fn word_y() -> GroupWord {
    GroupWord::gen(Letter::Y)
}

pub fn word_t() -> GroupWord {
    GroupWord::gen(Letter::T)
}

/// The word y x y.
pub fn word_yxy() -> GroupWord {
    GroupWord::from_letters([
        (Letter::Y, Sign::Pos),
        (Letter::X, Sign::Pos),
        (Letter::Y, Sign::Pos),
    ])
    .expect("single alphabet")
}

/// The recursive family x_0 = x, x_{i+1} = [yxy, x_i], as reduced words.
///
/// Word length roughly doubles per level, hence the depth bound.
pub fn family_x(i: i64, max_depth: i64) -> Result<GroupWord> {
    if i < 0 {
        return Err(Error::InvalidIndex(format!(
            "family_x({i}): index must be >= 0"
        )));
    }
    if i > max_depth {
        return Err(Error::DepthExceeded {
            what: "family_x depth",
            requested: i,
            bound: max_depth,
        });
    }
    let yxy = word_yxy();
    let mut w = word_x();
    for _ in 0..i {
        w = GroupWord::commutator(&yxy, &w)?;
    }
    Ok(w)
}

/// a_i = (yxy)^{i+1} x (yxy)^{-i-1}.
pub fn family_a(i: i64) -> Result<GroupWord> {
    if i < 0 {
        return Err(Error::InvalidIndex(format!(
            "family_a({i}): index must be >= 0"
        )));
    }
    word_x().conjugated(&word_yxy().pow(i + 1))
}

/// b_i = [x, (yxy)^{-i}] for i >= 1 (equivalently x^-1 a_{i-1}) and
/// b_{-i} = [x, (yxy)^{i}] for i >= 1. The index 0 is not defined.
pub fn family_b(i: i64) -> Result<GroupWord> {
    if i == 0 {
        return Err(Error::InvalidIndex("family_b(0) is undefined".into()));
    }
    GroupWord::commutator(&word_x(), &word_yxy().pow(-i))
}

/// The telescoping product a (d a d^-1) (d^2 a d^-2) ... with
/// d = t x t^-1 and a = [yxy, x] t x^-1 t^-1.
pub fn telescoping_product(factors: i64) -> GroupWord {
    let t = word_t();
    let x = word_x();
    let delta = GroupWord::compose(&[(&t, 1), (&x, 1), (&t, -1)]).unwrap();
    let alpha = GroupWord::compose(&[
        (&GroupWord::commutator(&word_yxy(), &x).unwrap(), 1),
        (&t, 1),
        (&x, -1),
        (&t, -1),
    ])
    .unwrap();
    let mut out = GroupWord::empty();
    for k in 0..factors {
        out = out
            .concat(&alpha.conjugated(&delta.pow(k)).unwrap())
            .unwrap();
    }
    out
}

/// The telescoping identity: the four-factor product rewrites to
/// [yxy, x]^4 under free reduction plus deletion of x^4.
pub fn corollary_telescoping_check() -> bool {
    let relator = word_x().pow(4);
    let target = GroupWord::commutator(&word_yxy(), &word_x())
        .unwrap()
        .pow(4);
    telescoping_product(4).rewrite_with_relators(&[relator]) == target
}

/// Builds an assignment closure from a letter -> word table.
pub fn assignment(table: &HashMap<Letter, GroupWord>) -> impl Fn(Letter) -> Option<GroupWord> + '_ {
    move |l| table.get(&l).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GroupWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn free_reduction() {
        assert_eq!(w("x x^-1 y"), w("y"));
        let reduced = w("y x y^-1");
        assert_eq!(
            GroupWord::from_letters(reduced.letters().iter().copied()).unwrap(),
            reduced
        );
        // t x^-1 t^-1 t x t^-1 -> 1
        let v = GroupWord::compose(&[
            (&word_t(), 1),
            (&word_x(), -1),
            (&word_t(), -1),
            (&word_t(), 1),
            (&word_x(), 1),
            (&word_t(), -1),
        ])
        .unwrap();
        assert!(v.is_empty());
    }

    #[test]
    fn commutator_identities() {
        let a = w("y x y");
        let b = w("x");
        let c = GroupWord::commutator(&a, &b).unwrap();
        assert_eq!(c, w("y^-1 x^-1 y^-1 x^-1 y x y x"));
        assert!(GroupWord::commutator(&a, &a).unwrap().is_empty());
        assert_eq!(
            GroupWord::commutator(&a, &b).unwrap().inverse(),
            GroupWord::commutator(&b, &a).unwrap()
        );
    }

    #[test]
    fn alphabet_mixing_is_rejected() {
        let braid_word = w("s1 s2");
        let xyt_word = w("x y");
        assert!(braid_word.concat(&xyt_word).is_err());
        assert!(GroupWord::commutator(&braid_word, &xyt_word).is_err());
        assert!(parse_word("s1 x").is_err());
    }

    #[test]
    fn family_x_recursion() {
        assert_eq!(family_x(0, 8).unwrap(), w("x"));
        assert_eq!(
            family_x(1, 8).unwrap(),
            GroupWord::commutator(&word_yxy(), &word_x()).unwrap()
        );
        for i in 0..4 {
            let xi = family_x(i, 8).unwrap();
            let next = family_x(i + 1, 8).unwrap();
            assert_eq!(next, GroupWord::commutator(&word_yxy(), &xi).unwrap());
            assert!(next.len() <= 2 * xi.len() + 2 * word_yxy().len());
        }
        assert!(matches!(family_x(9, 8), Err(Error::DepthExceeded { .. })));
    }

    #[test]
    fn family_a_and_b() {
        assert_eq!(family_a(0).unwrap(), w("y x y x ( y x y )^-1"));
        // b_1 = x^-1 a_0 and [x, (yxy)^-1] are the same reduced word
        let b1 = family_b(1).unwrap();
        assert_eq!(b1, w("x^-1 y x y x ( y x y )^-1"));
        assert_eq!(
            b1,
            word_x().inverse().concat(&family_a(0).unwrap()).unwrap()
        );
        // b_{i} = x^-1 a_{i-1} for higher indices too
        for i in 2..6 {
            assert_eq!(
                family_b(i).unwrap(),
                word_x()
                    .inverse()
                    .concat(&family_a(i - 1).unwrap())
                    .unwrap()
            );
        }
        // b_{-1} = x_1^-1
        assert_eq!(family_b(-1).unwrap(), family_x(1, 8).unwrap().inverse());
        assert!(family_b(0).is_err());
    }

    #[test]
    fn substitution() {
        let x_img = w("s1 s2 s3");
        assert_eq!(w("x").to_braid().unwrap(), x_img);
        assert_eq!(w("D").to_braid().unwrap(), w("s1 s2 s3 s1 s2 s1"));
        assert!(w("t x t^-1").to_braid().is_err());
        assert!(GroupWord::empty().to_braid().unwrap().is_empty());
        // homomorphism: substitution commutes with commutators
        let a = w("x y");
        let b = w("y x^-1");
        let sub = |v: &GroupWord| v.to_braid().unwrap();
        assert_eq!(
            sub(&GroupWord::commutator(&a, &b).unwrap()),
            GroupWord::commutator(&sub(&a), &sub(&b)).unwrap()
        );
    }

    #[test]
    fn relator_rewriting() {
        let x4 = w("x^4");
        assert!(w("x x x x")
            .rewrite_with_relators(std::slice::from_ref(&x4))
            .is_empty());
        assert!(w("t x^-4 t^-1")
            .rewrite_with_relators(std::slice::from_ref(&x4))
            .is_empty());
        let free = w("y x y^-1");
        assert_eq!(free.rewrite_with_relators(&[x4]), free);
        assert_eq!(free.rewrite_with_relators(&[]), free);
    }

    #[test]
    fn telescoping_identity() {
        assert!(corollary_telescoping_check());
        // three factors leave the trailing t x^-3 t^-1 intact
        let c = GroupWord::commutator(&word_yxy(), &word_x()).unwrap();
        let three = telescoping_product(3).rewrite_with_relators(&[w("x^4")]);
        let expected_tail =
            GroupWord::compose(&[(&c, 3), (&word_t(), 1), (&word_x(), -3), (&word_t(), -1)])
                .unwrap();
        assert_eq!(three, expected_tail);
        assert_ne!(three, c.pow(3));
        // without the relator the x^-4 tail survives
        let four = telescoping_product(4).rewrite_with_relators(&[]);
        assert_ne!(four, c.pow(4));
    }

    #[test]
    fn display_roundtrip() {
        for s in ["x^2 y^-3 x", "s1 s2^-1 s3", "y x y x^-1", "t x t^-1"] {
            let parsed = w(s);
            assert_eq!(parse_word(&parsed.to_string()).unwrap(), parsed);
        }
        assert_eq!(w("x x x").to_string(), "x^3");
    }
}
