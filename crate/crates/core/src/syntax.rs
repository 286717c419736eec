//! Text forms: image tuples `[2,3,4,1]`, cycles `(1,3)(2,4)` and partial
//! permutations `{1:3, 2:1, 4:2}`. Whitespace is ignored everywhere; error
//! positions are byte offsets into the original text.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{CycleExpr, PartialPerm, Transformation};

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(d) => self.err(format!("expected `{c}`, found `{d}`")),
            None => self.err(format!("expected `{c}`, found end of input")),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.text[start..]
            .bytes()
            .take_while(|b| b.is_ascii_digit())
            .count();
        if digits == 0 {
            return self.err("expected a point");
        }
        self.pos += digits;
        let value: usize = self.text[start..self.pos].parse().map_err(|_| Error::Parse {
            position: start,
            message: "point too large".into(),
        })?;
        if value == 0 {
            return Err(Error::Parse {
                position: start,
                message: "points are numbered from 1".into(),
            });
        }
        Ok(value)
    }

    fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }
}

fn tuple(cur: &mut Cursor) -> Result<Vec<usize>> {
    cur.expect('[')?;
    let mut out = Vec::new();
    if cur.eat(']') {
        return Ok(out);
    }
    loop {
        out.push(cur.number()?);
        if cur.eat(']') {
            return Ok(out);
        }
        cur.expect(',')?;
    }
}

fn cycles(cur: &mut Cursor) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    while cur.peek() == Some('(') {
        cur.expect('(')?;
        let mut cycle = Vec::new();
        if !cur.eat(')') {
            loop {
                cycle.push(cur.number()?);
                if cur.eat(')') {
                    break;
                }
                cur.expect(',')?;
            }
        }
        out.push(cycle);
    }
    if out.is_empty() {
        return cur.err("expected `(`");
    }
    Ok(out)
}

/// Parses a cycle expression such as `(1,3)(2,4)`; `()` is the identity.
pub fn parse_cycles(text: &str) -> Result<CycleExpr> {
    let mut cur = Cursor::new(text);
    let raw = cycles(&mut cur)?;
    cur.finish()?;
    CycleExpr::new(raw)
}

/// Parses an image tuple, or a cycle expression evaluated at degree `n`.
///
/// When `n` is given, a tuple of a different length is rejected.
pub fn parse_transformation(text: &str, n: Option<usize>) -> Result<Transformation> {
    let mut cur = Cursor::new(text);
    match cur.peek() {
        Some('[') => {
            let images = tuple(&mut cur)?;
            cur.finish()?;
            if let Some(n) = n {
                if images.len() != n {
                    return Err(Error::DegreeMismatch {
                        left: n,
                        right: images.len(),
                    });
                }
            }
            Transformation::new(images)
        }
        Some('(') => {
            let raw = cycles(&mut cur)?;
            cur.finish()?;
            let Some(n) = n else {
                return Err(Error::Parse {
                    position: 0,
                    message: "cycle notation needs an explicit degree".into(),
                });
            };
            CycleExpr::new(raw)?.eval(n)
        }
        Some(c) => cur.err(format!("expected `[` or `(`, found `{c}`")),
        None => cur.err("empty element"),
    }
}

/// Parses `{x:y, ...}` as a partial permutation of degree `n`.
pub fn parse_partial(text: &str, n: usize) -> Result<PartialPerm> {
    let mut cur = Cursor::new(text);
    cur.expect('{')?;
    let mut pairs = Vec::new();
    if !cur.eat('}') {
        loop {
            let x = cur.number()?;
            cur.expect(':')?;
            let y = cur.number()?;
            pairs.push((x, y));
            if cur.eat('}') {
                break;
            }
            cur.expect(',')?;
        }
    }
    cur.finish()?;
    PartialPerm::new(n, pairs)
}

impl FromStr for Transformation {
    type Err = Error;

    /// Image-tuple form only; cycles need a degree.
    fn from_str(s: &str) -> Result<Self> {
        parse_transformation(s, None)
    }
}

impl FromStr for CycleExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_cycles(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_and_cycles() {
        let a: Transformation = " [2, 3,4 ,1] ".parse().unwrap();
        assert_eq!(a.to_vec(), vec![2, 3, 4, 1]);
        let b = parse_transformation("(1,3) (2,4)", Some(4)).unwrap();
        assert_eq!(b.to_vec(), vec![3, 4, 1, 2]);
        assert_eq!(
            parse_transformation("()", Some(3)).unwrap(),
            Transformation::identity(3)
        );
    }

    #[test]
    fn partial_form() {
        let p = parse_partial("{4:2, 1:3,2:1}", 4).unwrap();
        assert_eq!(p.to_string(), "{1:3, 2:1, 4:2}");
        assert_eq!(p.inversions(), 2);
    }

    #[test]
    fn errors_carry_position() {
        match parse_transformation("[1,2,x]", None) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_transformation("[1,2] junk", None),
            Err(Error::Parse { position: 6, .. })
        ));
        assert!(matches!(
            parse_transformation("[1,2,3]", Some(4)),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(matches!(
            parse_transformation("[1,5]", None),
            Err(Error::PointOutOfRange { point: 5, .. })
        ));
    }
}
