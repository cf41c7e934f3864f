//! Expression reader and printer.
//!
//! Grammar: integer literals, identifiers, `+ - * ^` and parentheses. `^`
//! binds tightest and is right-associative with a nonnegative integer literal
//! exponent. Juxtaposition is rejected.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use super::{Polynomial, Ring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(text: &'a str) -> Result<Vec<(Tok, usize)>> {
        let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
        let mut out = Vec::new();
        loop {
            let (t, at) = lx.next()?;
            let end = t == Tok::End;
            out.push((t, at));
            if end {
                return Ok(out);
            }
        }
    }

    fn next(&mut self) -> Result<(Tok, usize)> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&c) = self.src.get(self.pos) else {
            return Ok((Tok::End, start));
        };
        let single = match c {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            self.pos += 1;
            return Ok((t, start));
        }
        if c.is_ascii_digit() {
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            return Ok((Tok::Int(digits.parse().unwrap()), start));
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
            {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            return Ok((Tok::Ident(name.to_string()), start));
        }
        Err(Error::Syntax { position: start, message: format!("unexpected character `{}`", c as char) })
    }
}

struct Parser<'r> {
    toks: Vec<(Tok, usize)>,
    idx: usize,
    ring: &'r Ring,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.idx].0
    }

    fn pos(&self) -> usize {
        self.toks[self.idx].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.idx].0.clone();
        if t != Tok::End {
            self.idx += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.pos(), message: message.into() })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let mut exps = Vec::new();
        while *self.peek() == Tok::Caret {
            self.bump();
            match self.peek().clone() {
                Tok::Int(n) => {
                    self.bump();
                    exps.push(n);
                }
                _ => return self.error("exponent must be a nonnegative integer literal"),
            }
        }
        // right-associative: a^b^c = a^(b^c)
        let mut e = exps.pop().unwrap();
        while let Some(b) = exps.pop() {
            let Some(k) = e.to_u32() else { return self.error("exponent too large") };
            e = b.pow(k);
        }
        let Some(e) = e.to_u32() else { return self.error("exponent too large") };
        Ok(base.power(e))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let at = self.pos();
        match self.bump() {
            Tok::Int(n) => Ok(Polynomial::constant(self.ring, n)),
            Tok::Ident(name) => match self.ring.var_index(&name) {
                Some(_) => Polynomial::var(self.ring, &name),
                None => Err(Error::UnknownVariable { name, position: at }),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.error("expected `)`");
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => self.error("unexpected end of input"),
            _ => {
                self.idx -= 1;
                self.error("expected a number, variable or `(`")
            }
        }
    }
}

impl Polynomial {
    pub fn parse(text: &str, ring: &Ring) -> Result<Polynomial> {
        let toks = Lexer::tokens(text)?;
        let mut p = Parser { toks, idx: 0, ring };
        let poly = p.expr()?;
        if *p.peek() != Tok::End {
            return p.error("unexpected token (implicit multiplication is not allowed)");
        }
        Ok(poly)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let vars = self.ring().variables();
        for (i, (m, c)) in self.terms().iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if m.is_one() || !abs.is_one() {
                factors.push(abs.to_string());
            }
            for (v, &e) in vars.iter().zip(m.exponents()) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
