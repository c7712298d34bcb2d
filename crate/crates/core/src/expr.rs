//! Text forms of varieties and sheaves.
//!
//! ```text
//! variety := "n=" int ("," int)* ";" "k=" int ("," int)*
//! sheaf   := "0" | term ("+" term)*
//! term    := [int "*"] atom
//! atom    := factor ("x" factor)*
//! factor  := "O(" int ")" | "Om(a=" int ";t=" int ")"
//! ```
//!
//! Whitespace is allowed between tokens. `Display` on the domain types prints
//! these forms.

use crate::bott::FactorSheaf;
use crate::error::{Error, Result};
use crate::sheaf::{BoxAtom, FormalSheaf};
use crate::variety::SegreVeronese;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.error(format!("expected `{token}`"))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        let digits = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits {
            return self.error("expected an integer");
        }
        match self.src[start..end].parse() {
            Ok(v) => {
                self.pos = end;
                Ok(v)
            }
            Err(_) => self.error("integer out of range"),
        }
    }

    fn unsigned(&mut self) -> Result<u32> {
        self.skip_ws();
        let at = self.pos;
        let v = self.int()?;
        u32::try_from(v).or_else(|_| {
            self.pos = at;
            self.error("expected a nonnegative integer")
        })
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            self.error("unexpected trailing input")
        }
    }
}

/// Parses `n=2,1;k=1,3`.
pub fn parse_variety(text: &str) -> Result<SegreVeronese> {
    let mut c = Cursor::new(text);
    c.expect("n=")?;
    let n = list(&mut c)?;
    c.expect(";")?;
    c.expect("k=")?;
    let k = list(&mut c)?;
    c.finish()?;
    SegreVeronese::new(n, k)
}

fn list(c: &mut Cursor<'_>) -> Result<Vec<u32>> {
    let mut out = vec![c.unsigned()?];
    while c.eat(",") {
        out.push(c.unsigned()?);
    }
    Ok(out)
}

/// Parses a sheaf expression on the ambient space of `variety`.
pub fn parse_sheaf(text: &str, variety: &SegreVeronese) -> Result<FormalSheaf> {
    parse_sheaf_on(text, variety.dims())
}

/// Parses a sheaf expression on `P^{dims[0]} x ... `.
pub fn parse_sheaf_on(text: &str, dims: &[u32]) -> Result<FormalSheaf> {
    if text.trim() == "0" {
        return Ok(FormalSheaf::zero(dims));
    }
    let mut c = Cursor::new(text);
    let mut terms = Vec::new();
    loop {
        terms.push(term(&mut c, dims)?);
        if !c.eat("+") {
            break;
        }
    }
    c.finish()?;
    FormalSheaf::from_terms(dims, terms)
}

fn term(c: &mut Cursor<'_>, dims: &[u32]) -> Result<(BoxAtom, u64)> {
    let mut mult = 1;
    if c.peek().is_some_and(|ch| ch.is_ascii_digit()) {
        let at = c.pos;
        let v = c.int()?;
        if v < 1 {
            c.pos = at;
            return c.error("multiplicity must be positive");
        }
        mult = v as u64;
        c.expect("*")?;
    }
    let start = c.pos;
    let mut factors = Vec::new();
    loop {
        let index = factors.len();
        let Some(&n) = dims.get(index) else {
            c.pos = start;
            return c.error(format!("atom has more than {} factors", dims.len()));
        };
        factors.push(factor(c, n)?);
        if !c.eat("x") {
            break;
        }
    }
    if factors.len() != dims.len() {
        c.pos = start;
        return c.error(format!("atom has {} factors, expected {}", factors.len(), dims.len()));
    }
    Ok((BoxAtom::new(factors)?, mult))
}

fn factor(c: &mut Cursor<'_>, n: u32) -> Result<FactorSheaf> {
    if c.eat("Om(") {
        c.expect("a=")?;
        let at = c.pos;
        let p = c.unsigned()?;
        if p > n {
            c.pos = at;
            return c.error(format!("a={p} exceeds the factor dimension {n}"));
        }
        c.expect(";")?;
        c.expect("t=")?;
        let t = c.int()?;
        c.expect(")")?;
        FactorSheaf::new(n, p, t)
    } else if c.eat("O(") {
        let t = c.int()?;
        c.expect(")")?;
        FactorSheaf::line(n, t)
    } else {
        c.error("expected `O(` or `Om(`")
    }
}
