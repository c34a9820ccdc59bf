//! Text form of trees.
//!
//! ```text
//! tree := "|" | "(" tree "^" label tree ")"
//! ```
//!
//! Whitespace is allowed between tokens. The canonical printed form puts a
//! single space between the label and the right subtree and nowhere else.

use super::{Label, Tree};
use crate::error::{Error, Result};

/// Parses a complete tree expression.
pub fn parse(text: &str) -> Result<Tree> {
    let (tree, end) = parse_prefix(text, 0)?;
    let end = skip_ws(text.as_bytes(), end);
    if end != text.len() {
        return Err(expected(end, "end of input"));
    }
    Ok(tree)
}

/// Parses one tree starting at byte `offset`, returning it together with the
/// offset just past its last token. Leading whitespace is skipped.
pub fn parse_prefix(text: &str, offset: usize) -> Result<(Tree, usize)> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: offset,
    };
    let tree = p.tree()?;
    Ok((tree, p.pos))
}

fn skip_ws(src: &[u8], mut pos: usize) -> usize {
    while pos < src.len() && src[pos].is_ascii_whitespace() {
        pos += 1;
    }
    pos
}

fn expected(offset: usize, what: &str) -> Error {
    Error::Parse {
        offset,
        expected: what.to_owned(),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&mut self) -> Option<u8> {
        self.pos = skip_ws(self.src, self.pos);
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8, what: &str) -> Result<()> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(expected(self.pos, what))
        }
    }

    fn tree(&mut self) -> Result<Tree> {
        match self.peek() {
            Some(b'|') => {
                self.pos += 1;
                Ok(Tree::Leaf)
            }
            Some(b'(') => {
                self.pos += 1;
                let left = self.tree()?;
                self.eat(b'^', "'^'")?;
                let label = self.label()?;
                let right = self.tree()?;
                self.eat(b')', "')'")?;
                Ok(Tree::graft(left, label, right))
            }
            _ => Err(expected(self.pos, "'|' or '('")),
        }
    }

    fn label(&mut self) -> Result<Label> {
        let start = skip_ws(self.src, self.pos);
        let mut end = start;
        while end < self.src.len()
            && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
        {
            end += 1;
        }
        if end == start {
            return Err(expected(start, "label"));
        }
        self.pos = end;
        // only ASCII bytes were consumed, so this slice is valid UTF-8
        let name = std::str::from_utf8(&self.src[start..end]).expect("ascii label");
        Label::new(name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{enumerate, Alphabet};
    use proptest::prelude::*;

    #[test]
    fn base_cases() {
        assert_eq!(parse("|").unwrap(), Tree::Leaf);
        let t = parse("(|^a |)").unwrap();
        assert_eq!(t, Tree::single(Label::new("a").unwrap()));
    }

    #[test]
    fn canonical_print() {
        let b = Tree::single(Label::new("b").unwrap());
        let t = Tree::graft(b, Label::new("a").unwrap(), Tree::Leaf);
        assert_eq!(t.to_string(), "((|^b |)^a |)");
    }

    #[test]
    fn whitespace_is_optional() {
        let t = parse("  ( ( | ^b| ) ^ a\n|)  ").unwrap();
        assert_eq!(t.to_string(), "((|^b |)^a |)");
        assert_eq!(parse("(|^a|)").unwrap().to_string(), "(|^a |)");
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(
            parse("(|^ |)"),
            Err(Error::Parse {
                offset: 4,
                expected: "label".into()
            })
        );
        assert_eq!(
            parse("(| a |)"),
            Err(Error::Parse {
                offset: 3,
                expected: "'^'".into()
            })
        );
        assert_eq!(
            parse("(|^a |"),
            Err(Error::Parse {
                offset: 6,
                expected: "')'".into()
            })
        );
        assert_eq!(
            parse("| |"),
            Err(Error::Parse {
                offset: 2,
                expected: "end of input".into()
            })
        );
        assert!(matches!(parse(""), Err(Error::Parse { offset: 0, .. })));
    }

    #[test]
    fn round_trip_on_enumerated_trees() {
        for labels in ["o", "a,b"] {
            let x = Alphabet::parse_list(labels).unwrap();
            for n in 0..=6 {
                for t in enumerate(n, &x).unwrap() {
                    assert_eq!(parse(t.as_str()).unwrap(), t);
                }
            }
        }
    }

    fn arb_tree() -> impl Strategy<Value = Tree> {
        let leaf = Just(Tree::Leaf);
        leaf.prop_recursive(6, 32, 2, |inner| {
            (inner.clone(), "[a-z_][a-z0-9]{0,2}", inner)
                .prop_map(|(l, a, r)| Tree::graft(l, Label::new(&a).unwrap(), r))
        })
    }

    proptest! {
        #[test]
        fn parse_print_round_trip(t in arb_tree()) {
            let printed = t.to_string();
            prop_assert_eq!(parse(&printed).unwrap(), t);
            prop_assert!(!printed.ends_with(' '));
        }
    }
}
