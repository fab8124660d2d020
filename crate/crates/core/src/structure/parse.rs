//! Parser for the canonical line notation, the inverse of the emitters on
//! valid codes. Rejects anything the generators would never emit.

use std::rc::Rc;

use crate::element::AtomKind;
use crate::error::{Error, Result};

use super::free::FreeStructure;
use super::rooted::RootedStructure;
use super::Structure;

/// Result of parsing one code line.
#[derive(Debug)]
pub enum Parsed {
    Rooted(Rc<RootedStructure>),
    Free(Rc<FreeStructure>),
}

impl Parsed {
    pub fn canonical_code(&self) -> String {
        match self {
            Parsed::Rooted(s) => s.canonical_code(),
            Parsed::Free(s) => s.canonical_code(),
        }
    }
}

/// Parse a `*`-prefixed rooted code, a `!`-prefixed centroid-node code, or
/// an `=(A,B)` bicentroid code. Validates valence-exactness, child
/// ordering, and the centroid/bicentroid conditions; errors carry the byte
/// position of the offense.
pub fn parse_code(code: &str) -> Result<Parsed> {
    let mut parser = Parser {
        bytes: code.as_bytes(),
        pos: 0,
    };
    let parsed = match parser.peek() {
        Some(b'*') => {
            parser.pos += 1;
            let node = parser.parse_rooted()?;
            Parsed::Rooted(node)
        }
        Some(b'!') => {
            parser.pos += 1;
            Parsed::Free(parser.parse_node_centered()?)
        }
        Some(b'=') => {
            parser.pos += 1;
            Parsed::Free(parser.parse_edge_centered()?)
        }
        Some(other) => {
            return Err(Error::Syntax {
                pos: 0,
                msg: format!(
                    "expected '*', '!' or '=' at the start, found {:?}",
                    other as char
                ),
            })
        }
        None => {
            return Err(Error::Syntax {
                pos: 0,
                msg: "empty code".into(),
            })
        }
    };
    if parser.pos != parser.bytes.len() {
        return Err(Error::Syntax {
            pos: parser.pos,
            msg: "trailing characters after a complete code".into(),
        });
    }
    Ok(parsed)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Syntax {
                pos: self.pos,
                msg: format!(
                    "expected {:?}, found {}",
                    byte as char,
                    match self.peek() {
                        Some(b) => format!("{:?}", b as char),
                        None => "end of input".into(),
                    }
                ),
            })
        }
    }

    fn parse_symbol(&mut self) -> Result<AtomKind> {
        let pos = self.pos;
        match self.peek().and_then(|b| AtomKind::from_symbol(b as char)) {
            Some(kind) => {
                self.pos += 1;
                Ok(kind)
            }
            None => Err(Error::Syntax {
                pos,
                msg: "expected an atom symbol (H, C, N, O or F)".into(),
            }),
        }
    }

    /// A rooted subtree: a leaf, or a heavy atom over exactly
    /// `branch_count` sorted children.
    fn parse_rooted(&mut self) -> Result<Rc<RootedStructure>> {
        let symbol_pos = self.pos;
        let kind = self.parse_symbol()?;
        if !kind.is_heavy() {
            if self.peek() == Some(b'(') {
                return Err(Error::Valence {
                    pos: self.pos,
                    msg: format!("{kind} is a leaf and takes no branches"),
                });
            }
            return Ok(RootedStructure::leaf(kind));
        }
        let children = self.parse_children(kind, kind.branch_count(), symbol_pos)?;
        Ok(RootedStructure::branch(kind, children))
    }

    /// Parenthesized child list with exact count and ascending-code order.
    fn parse_children(
        &mut self,
        kind: AtomKind,
        expected: usize,
        symbol_pos: usize,
    ) -> Result<Vec<Rc<RootedStructure>>> {
        self.expect(b'(')?;
        let mut children = Vec::new();
        loop {
            let child_pos = self.pos;
            let child = self.parse_rooted()?;
            if let Some(prev) = children.last() {
                let prev: &Rc<RootedStructure> = prev;
                if child.bare_code() < prev.bare_code() {
                    return Err(Error::NonCanonical {
                        pos: child_pos,
                        msg: "children are not in ascending code order".into(),
                    });
                }
            }
            children.push(child);
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                }
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                other => {
                    return Err(Error::Syntax {
                        pos: self.pos,
                        msg: format!(
                            "expected ',' or ')', found {}",
                            match other {
                                Some(b) => format!("{:?}", b as char),
                                None => "end of input".into(),
                            }
                        ),
                    })
                }
            }
        }
        if children.len() != expected {
            return Err(Error::Valence {
                pos: symbol_pos,
                msg: format!(
                    "{kind} takes exactly {expected} branches here, found {}",
                    children.len()
                ),
            });
        }
        Ok(children)
    }

    fn parse_node_centered(&mut self) -> Result<Rc<FreeStructure>> {
        let symbol_pos = self.pos;
        let kind = self.parse_symbol()?;
        if !kind.is_heavy() {
            return Err(Error::Valence {
                pos: symbol_pos,
                msg: format!("{kind} cannot center a molecule"),
            });
        }
        let branches = self.parse_children(kind, kind.valence(), symbol_pos)?;
        let total = 1 + branches.iter().map(|b| b.heavy_size()).sum::<usize>();
        for branch in &branches {
            if branch.heavy_size() > (total - 1) / 2 {
                return Err(Error::NonCanonical {
                    pos: symbol_pos,
                    msg: format!(
                        "a branch of heavy size {} violates the centroid bound {}",
                        branch.heavy_size(),
                        (total - 1) / 2
                    ),
                });
            }
        }
        Ok(FreeStructure::node_centered(kind, branches))
    }

    fn parse_edge_centered(&mut self) -> Result<Rc<FreeStructure>> {
        self.expect(b'(')?;
        let left_pos = self.pos;
        let left = self.parse_rooted()?;
        self.expect(b',')?;
        let right_pos = self.pos;
        let right = self.parse_rooted()?;
        self.expect(b')')?;
        for (half, pos) in [(&left, left_pos), (&right, right_pos)] {
            if !half.is_heavy_rooted() {
                return Err(Error::Valence {
                    pos,
                    msg: "edge halves must be rooted at heavy atoms".into(),
                });
            }
        }
        if left.heavy_size() != right.heavy_size() {
            return Err(Error::NonCanonical {
                pos: right_pos,
                msg: "edge halves must have equal heavy size".into(),
            });
        }
        if left.bare_code() > right.bare_code() {
            return Err(Error::NonCanonical {
                pos: right_pos,
                msg: "edge halves are not in ascending code order".into(),
            });
        }
        Ok(FreeStructure::edge_centered(left, right))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn methyl_round_trip() {
        let parsed = parse_code("*C(H,H,H)").unwrap();
        assert_eq!(parsed.canonical_code(), "*C(H,H,H)");
        assert!(matches!(parsed, Parsed::Rooted(_)));
    }

    #[test]
    fn bare_leaf_radical() {
        let parsed = parse_code("*H").unwrap();
        assert_eq!(parsed.canonical_code(), "*H");
    }

    #[test]
    fn undervalent_carbon_is_rejected() {
        assert!(matches!(
            parse_code("*C(H)"),
            Err(Error::Valence { pos: 1, .. })
        ));
    }

    #[test]
    fn unsorted_children_are_rejected() {
        assert!(matches!(
            parse_code("*C(H,C(H,H,H),H)"),
            Err(Error::NonCanonical { pos: 5, .. })
        ));
    }

    #[test]
    fn butane_codes_round_trip() {
        for code in [
            "=(C(C(H,H,H),H,H),C(C(H,H,H),H,H))",
            "!C(C(H,H,H),C(H,H,H),C(H,H,H),H)",
        ] {
            assert_eq!(parse_code(code).unwrap().canonical_code(), code);
        }
    }

    #[test]
    fn centroid_violation_is_rejected() {
        // propane written node-centered at an end carbon
        assert!(matches!(
            parse_code("!C(C(C(H,H,H),H,H),H,H,H)"),
            Err(Error::NonCanonical { .. })
        ));
    }

    #[test]
    fn unequal_edge_halves_are_rejected() {
        assert!(matches!(
            parse_code("=(C(H,H,H),C(C(H,H,H),H,H))"),
            Err(Error::NonCanonical { .. })
        ));
    }

    #[test]
    fn unordered_edge_halves_are_rejected() {
        assert!(matches!(
            parse_code("=(O(H),C(H,H,H))"),
            Err(Error::NonCanonical { .. })
        ));
    }

    #[test]
    fn leaf_edge_halves_are_rejected() {
        assert!(matches!(
            parse_code("=(H,H)"),
            Err(Error::Valence { .. })
        ));
    }

    #[test]
    fn garbage_is_a_syntax_error() {
        assert!(matches!(parse_code(""), Err(Error::Syntax { .. })));
        assert!(matches!(parse_code("C(H,H,H)"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_code("*C(H,H,H)x"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_code("*X"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_code("*H("), Err(Error::Valence { .. })));
    }
}
