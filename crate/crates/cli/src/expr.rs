//! Linear combinations of trees written as text.
//!
//! ```text
//! expr   := ["-"] term (("+" | "-") term)*
//! term   := integer ["*" factor] | factor
//! factor := tree | "(" expr ")"
//! ```
//!
//! A bare integer `n` stands for `n·|`. A factor starting with `(` is read as
//! a tree when possible and as a parenthesized expression otherwise.

use num_bigint::BigInt;
use pbt_hopf::tree::parse_prefix;
use pbt_hopf::{Error, LinComb, Result};

pub fn parse_expr(text: &str) -> Result<LinComb> {
    let mut p = Parser { src: text, pos: 0 };
    let x = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.expected("'+', '-' or end of input"));
    }
    Ok(x)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.as_bytes().get(self.pos).copied()
    }

    fn expected(&self, what: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            expected: what.to_string(),
        }
    }

    fn expr(&mut self) -> Result<LinComb> {
        let negate = self.peek() == Some(b'-');
        if negate {
            self.pos += 1;
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LinComb> {
        if !self.peek().is_some_and(|b| b.is_ascii_digit()) {
            return self.factor();
        }
        let start = self.pos;
        let digits = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        self.pos += digits;
        let coeff: BigInt = self.src[start..self.pos].parse().expect("ascii digits");
        if self.peek() == Some(b'*') {
            self.pos += 1;
            Ok(self.factor()?.scale(&coeff))
        } else {
            Ok(LinComb::one().scale(&coeff))
        }
    }

    fn factor(&mut self) -> Result<LinComb> {
        match self.peek() {
            Some(b'|') | Some(b'(') => {}
            _ => return Err(self.expected("'|', '(' or integer")),
        }
        let start = self.pos;
        let tree_err = match parse_prefix(self.src, start) {
            Ok((tree, end)) => {
                self.pos = end;
                return Ok(LinComb::from(tree));
            }
            Err(e) => e,
        };
        if self.src.as_bytes()[start] != b'(' {
            return Err(tree_err);
        }
        self.pos = start + 1;
        match self.parenthesized() {
            Ok(x) => Ok(x),
            Err(e) => Err(furthest(tree_err, e)),
        }
    }

    fn parenthesized(&mut self) -> Result<LinComb> {
        let inner = self.expr()?;
        if self.peek() != Some(b')') {
            return Err(self.expected("')'"));
        }
        self.pos += 1;
        Ok(inner)
    }
}

/// Of two failed alternatives, the one that got further into the input.
fn furthest(a: Error, b: Error) -> Error {
    match (&a, &b) {
        (Error::Parse { offset: x, .. }, Error::Parse { offset: y, .. }) if y > x => b,
        _ => a,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use pbt_hopf::{Coeff, Tree};

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    #[test]
    fn single_tree() {
        assert_eq!(parse_expr("(|^a |)").unwrap(), LinComb::from(t("(|^a |)")));
        assert_eq!(parse_expr(" | ").unwrap(), LinComb::one());
    }

    #[test]
    fn sums_and_coefficients() {
        let x = parse_expr("2*(|^a |) - (|^a (|^b |)) + 3").unwrap();
        let want: LinComb = [
            (Coeff::from(2), t("(|^a |)")),
            (Coeff::from(-1), t("(|^a (|^b |))")),
            (Coeff::from(3), Tree::Leaf),
        ]
        .into_iter()
        .collect();
        assert_eq!(x, want);
        assert_eq!(
            parse_expr("-(|^a |)").unwrap(),
            -LinComb::from(t("(|^a |)"))
        );
        assert!(parse_expr("(|^a |) - (|^a |)").unwrap().is_zero());
    }

    #[test]
    fn parenthesized() {
        let x = parse_expr("2*((|^a |) - |)").unwrap();
        assert_eq!(
            x,
            LinComb::term(2, t("(|^a |)")) - LinComb::term(2, Tree::Leaf)
        );
        assert_eq!(
            parse_expr("((|^a |))").unwrap(),
            LinComb::from(t("(|^a |)"))
        );
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_expr(""),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(
            parse_expr("(|^a |) +"),
            Err(Error::Parse { offset: 9, .. })
        ));
        assert!(matches!(
            parse_expr("(|^a |) x"),
            Err(Error::Parse { offset: 8, .. })
        ));
        assert!(matches!(
            parse_expr("(|^a"),
            Err(Error::Parse { offset: 4, .. })
        ));
        assert!(matches!(
            parse_expr("(2*| x"),
            Err(Error::Parse { offset: 5, .. })
        ));
        assert!(matches!(
            parse_expr("2*"),
            Err(Error::Parse { offset: 2, .. })
        ));
    }
}
