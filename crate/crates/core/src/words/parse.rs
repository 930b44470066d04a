//! Recursive-descent parser for the word grammar:
//!
//! ```text
//! word := term+
//! term := atom ('^' signed-int)?
//! atom := 's1' | 's2' | 's3' | 'x' | 'y' | 't' | 'D'
//!       | '(' word ')' | '[' word ',' word ']'
//! ```
//!
//! `D` is the half-twist s1 s2 s3 s1 s2 s1 and `[u, v]` expands to the
//! commutator u^-1 v^-1 u v.

use crate::error::{Error, Result};

use super::{GroupWord, Letter};

/// Upper bound on the letter count of a fully expanded word; guards the
/// parser against inputs like `x^999999999`.
const MAX_EXPANDED_LETTERS: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Letter(Letter),
    Delta,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Caret,
    Int(i64),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(usize, Tok)>> {
        let mut lex = Lexer {
            src: src.as_bytes(),
            pos: 0,
        };
        let mut out = Vec::new();
        while let Some(t) = lex.next_token()? {
            out.push(t);
        }
        Ok(out)
    }

    fn next_token(&mut self) -> Result<Option<(usize, Tok)>> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let c = self.src[self.pos];
        let tok = match c {
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b'[' => {
                self.pos += 1;
                Tok::LBracket
            }
            b']' => {
                self.pos += 1;
                Tok::RBracket
            }
            b',' => {
                self.pos += 1;
                Tok::Comma
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'-' | b'+' | b'0'..=b'9' => {
                let mut end = self.pos + 1;
                while end < self.src.len() && self.src[end].is_ascii_digit() {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                let n: i64 = text
                    .parse()
                    .map_err(|_| Error::parse(start, format!("bad integer {text:?}")))?;
                self.pos = end;
                Tok::Int(n)
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = self.pos + 1;
                while end < self.src.len() && self.src[end].is_ascii_alphanumeric() {
                    end += 1;
                }
                let ident = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                self.pos = end;
                match ident {
                    "s1" => Tok::Letter(Letter::S1),
                    "s2" => Tok::Letter(Letter::S2),
                    "s3" => Tok::Letter(Letter::S3),
                    "x" => Tok::Letter(Letter::X),
                    "y" => Tok::Letter(Letter::Y),
                    "t" => Tok::Letter(Letter::T),
                    "D" => Tok::Delta,
                    _ => return Err(Error::parse(start, format!("unknown generator {ident:?}"))),
                }
            }
            c => {
                return Err(Error::parse(
                    start,
                    format!("unexpected character {:?}", c as char),
                ))
            }
        };
        Ok(Some((start, tok)))
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    cursor: usize,
    end: usize,
    budget: u64,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.cursor).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks
            .get(self.cursor)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn advance(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.cursor).map(|(_, t)| t.clone());
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let pos = self.pos();
        match self.advance() {
            Some(t) if t == want => Ok(()),
            _ => Err(Error::parse(pos, format!("expected {what}"))),
        }
    }

    fn charge(&mut self, letters: u64) -> Result<()> {
        self.budget = self.budget.saturating_sub(letters);
        if self.budget == 0 {
            Err(Error::parse(self.pos(), "word expansion too large"))
        } else {
            Ok(())
        }
    }

    fn word(&mut self) -> Result<GroupWord> {
        let mut out = GroupWord::empty();
        let mut any = false;
        while matches!(
            self.peek(),
            Some(Tok::Letter(_) | Tok::Delta | Tok::LParen | Tok::LBracket)
        ) {
            let term = self.term()?;
            let pos = self.pos();
            out = out
                .concat(&term)
                .map_err(|e| Error::parse(pos, e.to_string()))?;
            any = true;
        }
        if !any {
            return Err(Error::parse(self.pos(), "expected a term"));
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<GroupWord> {
        let atom = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.advance();
            let pos = self.pos();
            match self.advance() {
                Some(Tok::Int(k)) => {
                    self.charge(atom.len() as u64 * k.unsigned_abs())?;
                    Ok(atom.pow(k))
                }
                _ => Err(Error::parse(pos, "expected an integer exponent after ^")),
            }
        } else {
            self.charge(atom.len() as u64)?;
            Ok(atom)
        }
    }

    fn atom(&mut self) -> Result<GroupWord> {
        let pos = self.pos();
        match self.advance() {
            Some(Tok::Letter(l)) => Ok(GroupWord::gen(l)),
            Some(Tok::Delta) => Ok(GroupWord::gen(Letter::D)),
            Some(Tok::LParen) => {
                let w = self.word()?;
                self.expect(Tok::RParen, "closing )")?;
                Ok(w)
            }
            Some(Tok::LBracket) => {
                let a = self.word()?;
                self.expect(Tok::Comma, "a comma inside [ , ]")?;
                let b = self.word()?;
                self.expect(Tok::RBracket, "closing ]")?;
                let pos = self.pos();
                GroupWord::commutator(&a, &b).map_err(|e| Error::parse(pos, e.to_string()))
            }
            _ => Err(Error::parse(pos, "expected a generator, '(' or '['")),
        }
    }
}

/// Parses a word in the shared grammar.
pub fn parse_word(src: &str) -> Result<GroupWord> {
    let toks = Lexer::tokens(src)?;
    let mut p = Parser {
        toks,
        cursor: 0,
        end: src.len(),
        budget: MAX_EXPANDED_LETTERS,
    };
    let w = p.word()?;
    if p.cursor != p.toks.len() {
        return Err(Error::parse(p.pos(), "trailing input after word"));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::braid;

    #[test]
    fn atoms_and_exponents() {
        assert_eq!(parse_word("x").unwrap().to_string(), "x");
        assert_eq!(parse_word("x^-3").unwrap().to_string(), "x^-3");
        assert_eq!(parse_word("( x y )^2").unwrap().to_string(), "x y x y");
        assert_eq!(parse_word("x^0").unwrap(), GroupWord::empty());
    }

    #[test]
    fn commutator_brackets() {
        let w = parse_word("[ y x y , x ]").unwrap();
        assert_eq!(w.to_string(), "y^-1 x^-1 y^-1 x^-1 y x y x");
        let nested = parse_word("[ [ y x y , x ] , y ]").unwrap();
        assert!(!nested.is_empty());
    }

    #[test]
    fn delta_is_xyt() {
        let d = parse_word("D^2").unwrap();
        assert_eq!(d.to_string(), "D^2");
        assert_eq!(
            d.to_braid().unwrap(),
            braid(&[1, 2, 3, 1, 2, 1, 1, 2, 3, 1, 2, 1])
        );
        // mixing D with x is fine (both have braid images)
        assert!(parse_word("x^4 D^-2").is_ok());
        // mixing braid letters with xyt letters is not
        assert!(parse_word("s1 D").is_err());
    }

    #[test]
    fn malformed_inputs() {
        for bad in [
            "",
            "x ^",
            "x^",
            "( x",
            "[ x , ]",
            "[ x ]",
            "[ x , y",
            "q",
            "x )",
            "1",
            "x^x",
            "[ [ y x y , x ] , 1 ]",
        ] {
            assert!(
                matches!(parse_word(bad), Err(Error::Parse { .. })),
                "expected parse error for {bad:?}"
            );
        }
    }

    #[test]
    fn expansion_budget() {
        assert!(parse_word("x^99999999999").is_err());
        assert!(parse_word("( x^4096 )^4096").is_err());
    }

    #[test]
    fn whitespace_is_flexible() {
        assert_eq!(parse_word("x y").unwrap(), parse_word(" x  y ").unwrap());
        assert_eq!(
            parse_word("[y x y,x]").unwrap(),
            parse_word("[ y x y , x ]").unwrap()
        );
    }
}
