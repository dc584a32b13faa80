use super::PlaneTree;
use crate::error::{Error, Result};

const MAX_DEPTH: usize = 512;

/// Recursive-descent reader for the bracket grammar. With `delayed` set,
/// leaves may also be positive integer literals, collected in leaf order.
pub(super) struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
    delayed: bool,
    pub(super) delays: Vec<u32>,
}

impl<'a> Reader<'a> {
    pub(super) fn new(text: &'a str, delayed: bool) -> Self {
        Reader {
            bytes: text.as_bytes(),
            pos: 0,
            delayed,
            delays: Vec::new(),
        }
    }

    fn err(&self, offset: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub(super) fn document(&mut self) -> Result<PlaneTree> {
        self.skip_ws();
        let tree = self.node(0)?;
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return Err(self.err(self.pos, "trailing input after tree"));
        }
        Ok(tree)
    }

    fn node(&mut self, depth: usize) -> Result<PlaneTree> {
        if depth > MAX_DEPTH {
            return Err(self.err(self.pos, "tree nested too deeply"));
        }
        let start = self.pos;
        match self.bytes.get(self.pos) {
            None => Err(self.err(start, "unexpected end of input, expected a tree")),
            Some(b'.') => {
                self.pos += 1;
                self.delays.push(1);
                Ok(PlaneTree::point())
            }
            Some(b'(') => {
                self.pos += 1;
                let mut children = Vec::new();
                loop {
                    self.skip_ws();
                    match self.bytes.get(self.pos) {
                        None => {
                            return Err(self.err(self.pos, "unexpected end of input, expected ')'"))
                        }
                        Some(b')') => {
                            if children.is_empty() {
                                return Err(self.err(start, "empty node \"()\""));
                            }
                            self.pos += 1;
                            return Ok(PlaneTree::new(children));
                        }
                        Some(_) => children.push(self.node(depth + 1)?),
                    }
                }
            }
            Some(b) if self.delayed && b.is_ascii_digit() => {
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                let value: u32 = digits
                    .parse()
                    .map_err(|_| self.err(start, format!("delay {digits} is too large")))?;
                if value == 0 {
                    return Err(Error::ZeroDelay { offset: start });
                }
                self.delays.push(value);
                Ok(PlaneTree::point())
            }
            Some(&b) => Err(self.err(start, format!("unexpected character {:?}", char::from(b)))),
        }
    }
}

/// Parses `Tree := "." | "(" Tree+ ")"`; whitespace may separate tokens.
pub fn parse_tree(text: &str) -> Result<PlaneTree> {
    Reader::new(text, false).document()
}
