//! Pattern descriptors:
//!
//! ```text
//! pattern := atom ("oplus(" int ")")*
//! atom    := name "(" int ")" | "edges{" "[" ints? "]" ("," "[" ints? "]")* "}"
//! ```
//!
//! Whitespace is ignored everywhere.

use super::builders;
use super::pattern::{oplus, BasePattern};
use crate::error::{Error, Result};
use crate::setfam::{VertexSet, MAX_VERTEX};

pub fn build_pattern(descriptor: &str) -> Result<BasePattern> {
    let mut p = Parser::new(descriptor);
    let out = p.pattern()?;
    p.end()?;
    Ok(out)
}

/// Cursor over the descriptor with whitespace stripped; positions refer to the original text.
pub(crate) struct Parser<'a> {
    chars: Vec<(usize, char)>,
    at: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        let chars = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Parser { chars, at: 0, src }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map(|&(i, _)| i).unwrap_or(self.src.len())
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.at += 1;
                Ok(())
            }
            Some(x) => self.fail(format!("expected `{c}`, found `{x}`")),
            None => self.fail(format!("expected `{c}`, found end of input")),
        }
    }

    fn ident(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphabetic() || c == '-' {
                s.push(c);
                self.at += 1;
            } else {
                break;
            }
        }
        s
    }

    fn int(&mut self) -> Result<u32> {
        let start = self.at;
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.at += 1;
        }
        if s.is_empty() {
            return self.fail("expected an integer");
        }
        s.parse().or_else(|_| {
            self.at = start;
            self.fail("integer out of range")
        })
    }

    fn paren_int(&mut self) -> Result<u32> {
        self.eat('(')?;
        let v = self.int()?;
        self.eat(')')?;
        Ok(v)
    }

    pub(crate) fn end(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.fail(format!("unexpected `{c}`")),
        }
    }

    /// A name that may start a descriptor; returns it without consuming when it is not a pattern name.
    pub(crate) fn peek_ident(&mut self) -> String {
        let save = self.at;
        let s = self.ident();
        self.at = save;
        s
    }

    pub(crate) fn simplex(&mut self) -> Result<u32> {
        let name = self.ident();
        debug_assert_eq!(name, "simplex");
        self.paren_int()
    }

    pub(crate) fn pattern(&mut self) -> Result<BasePattern> {
        let mut base = self.atom()?;
        loop {
            let save = self.at;
            let name = self.ident();
            match name.as_str() {
                "" => break,
                "oplus" => {
                    let t = self.paren_int()?;
                    base = oplus(&base, t)?;
                }
                _ => {
                    self.at = save;
                    return self.fail(format!("unexpected `{name}`"));
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BasePattern> {
        let start = self.at;
        let name = self.ident();
        let built = match name.as_str() {
            "matching" => builders::matching(self.paren_int()?),
            "path" => builders::path(self.paren_int()?),
            "cycle" => builders::cycle(self.paren_int()?),
            "special-simplex" => builders::special_simplex(self.paren_int()?),
            "one-intersection" => builders::one_intersection(self.paren_int()?),
            "edges" => return self.edges(),
            "" => return self.fail("expected a pattern"),
            _ => {
                self.at = start;
                return self.fail(format!("unknown pattern `{name}`"));
            }
        };
        built
    }

    fn edges(&mut self) -> Result<BasePattern> {
        self.eat('{')?;
        let mut edges = Vec::new();
        loop {
            edges.push(self.edge()?);
            match self.peek() {
                Some(',') => self.at += 1,
                _ => break,
            }
        }
        self.eat('}')?;
        BasePattern::new(edges)
    }

    fn edge(&mut self) -> Result<VertexSet> {
        self.eat('[')?;
        let mut e = VertexSet::EMPTY;
        if self.peek() == Some(']') {
            self.at += 1;
            return Ok(e);
        }
        loop {
            let start = self.at;
            let v = self.int()?;
            if v == 0 || v > MAX_VERTEX {
                self.at = start;
                return self.fail(format!("vertex {v} outside 1..={MAX_VERTEX}"));
            }
            if e.contains(v) {
                self.at = start;
                return self.fail(format!("vertex {v} repeated in an edge"));
            }
            e.insert(v);
            match self.peek() {
                Some(',') => self.at += 1,
                _ => break,
            }
        }
        self.eat(']')?;
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hstruct::builders::porcupine_counterexample;
    use crate::setfam::vs;

    #[test]
    fn named_and_literal() {
        assert_eq!(
            build_pattern("special-simplex(2)").unwrap().edges(),
            &[vs(&[2, 3]), vs(&[1, 3]), vs(&[1, 2])]
        );
        assert_eq!(build_pattern("matching(3)").unwrap().edges(), &[VertexSet::EMPTY; 3]);
        let p = build_pattern("edges{[1,2],[1,4],[1,5],[2,6],[2,7],[3]}").unwrap();
        assert!(p.same_edges(&porcupine_counterexample()));
        assert_eq!(p.render(), "edges{[1,2],[1,4],[1,5],[2,6],[2,7],[3]}");
    }

    #[test]
    fn whitespace_and_oplus() {
        let p = build_pattern(" matching ( 2 )  oplus (2)").unwrap();
        assert_eq!(p.edges(), &[vs(&[1, 2]), vs(&[1, 2])]);
        let q = build_pattern("edges{ [1] , [ 2 ] } oplus(1)").unwrap();
        assert_eq!(q.edges(), &[vs(&[1, 3]), vs(&[2, 3])]);
        assert_eq!(build_pattern("edges{[],[]}").unwrap().edges(), &[VertexSet::EMPTY; 2]);
    }

    #[test]
    fn errors_have_positions() {
        assert!(matches!(build_pattern("cycle(2)"), Err(Error::Argument(_))));
        assert_eq!(build_pattern("matchin(3)").unwrap_err(), Error::Parse { pos: 0, msg: "unknown pattern `matchin`".into() });
        assert!(matches!(build_pattern("matching(3"), Err(Error::Parse { pos: 10, .. })));
        assert!(matches!(build_pattern("edges{[1,0]}"), Err(Error::Parse { pos: 9, .. })));
        assert!(matches!(build_pattern("path(3) x"), Err(Error::Parse { pos: 8, .. })));
        assert!(matches!(build_pattern(""), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(build_pattern("one-intersection(2) oplus(1)"), Err(Error::Argument(_))));
    }
}
