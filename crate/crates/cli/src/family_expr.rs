//! Parser for the command-line graph family grammar:
//!
//! ```text
//! expr  := term { "+" term }          (* "+" is the graph join *)
//! term  := atom | "(" expr ")"
//! atom  := "K" size [ "," size ]      (* complete / complete bipartite *)
//!        | "E" size                   (* empty graph *)
//! size  := digit { digit }
//! ```
//!
//! Whitespace between tokens is ignored. Examples: `K4 + (E3 + E3)` is
//! the ten-vertex join of a 4-clique with two independent triples;
//! `K3,3` is the complete bipartite graph on 3 + 3 vertices.

use specgraph_core::graph::GraphFamilySpec;

pub fn parse_family(input: &str) -> Result<GraphFamilySpec, String> {
    let mut parser = Parser {
        bytes: input.as_bytes(),
        pos: 0,
    };
    let spec = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(format!(
            "unexpected character {:?} at position {}",
            parser.bytes[parser.pos] as char,
            parser.pos
        ));
    }
    Ok(spec)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<GraphFamilySpec, String> {
        let mut acc = self.term()?;
        while self.peek() == Some(b'+') {
            self.pos += 1;
            let rhs = self.term()?;
            acc = GraphFamilySpec::join(acc, rhs);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<GraphFamilySpec, String> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(format!("expected ')' at position {}", self.pos));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'K') | Some(b'k') => {
                self.pos += 1;
                let s = self.size()?;
                if self.peek() == Some(b',') {
                    self.pos += 1;
                    let t = self.size()?;
                    Ok(GraphFamilySpec::CompleteBipartite(s, t))
                } else {
                    Ok(GraphFamilySpec::Complete(s))
                }
            }
            Some(b'E') | Some(b'e') => {
                self.pos += 1;
                let n = self.size()?;
                Ok(GraphFamilySpec::EmptyGraph(n))
            }
            Some(c) => Err(format!(
                "expected 'K', 'E' or '(' at position {}, found {:?}",
                self.pos, c as char
            )),
            None => Err("unexpected end of expression".to_string()),
        }
    }

    fn size(&mut self) -> Result<usize, String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(format!("expected a number at position {start}"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ASCII")
            .parse()
            .map_err(|e| format!("bad number at position {start}: {e}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use specgraph_core::graph::Graph;

    #[test]
    fn parses_named_families() {
        assert_eq!(parse_family("K4").unwrap(), GraphFamilySpec::Complete(4));
        assert_eq!(parse_family("E3").unwrap(), GraphFamilySpec::EmptyGraph(3));
        assert_eq!(
            parse_family("K3,3").unwrap(),
            GraphFamilySpec::CompleteBipartite(3, 3)
        );
    }

    #[test]
    fn parses_join_expressions() {
        let spec = parse_family("K4 + (E3 + E3)").unwrap();
        let g = spec.build().unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.degree_sequence(), vec![7, 7, 7, 7, 7, 7, 9, 9, 9, 9]);
        // join associativity: flat and grouped forms give the same graph
        assert_eq!(
            parse_family("E2 + E2 + E2").unwrap().build().unwrap(),
            parse_family("(E2 + E2) + E2").unwrap().build().unwrap()
        );
    }

    #[test]
    fn join_of_empties_is_complete_bipartite() {
        assert_eq!(
            parse_family("E3 + E3").unwrap().build().unwrap(),
            Graph::complete_bipartite(3, 3)
        );
    }

    #[test]
    fn whitespace_and_case_are_tolerated() {
        assert_eq!(
            parse_family("  k4 +( e3+ e3 ) ").unwrap(),
            parse_family("K4+(E3+E3)").unwrap()
        );
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "K", "K4 +", "(K4", "K4)", "Q3", "K4 ^ E3", "K3,", "4"] {
            assert!(parse_family(bad).is_err(), "{bad:?} should fail");
        }
    }
}
