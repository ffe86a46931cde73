//! Line-based text format for graphs.
//!
//! ```text
//! # two tripods joined along one edge
//! vertex u a b x
//! vertex v y c d
//! edge x y
//! ```
//!
//! A `vertex` line names a vertex followed by its half-edges in order; an
//! `edge` line names the two half-edges of an internal edge. Half-edges
//! not named by any edge are legs. Tokens are separated by whitespace and
//! may contain any other character except a leading `#`; a `#` at the start
//! of a token comments out the rest of the line. Blank lines are ignored.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::Graph;
use crate::{Error, Result};

impl Graph {
    /// Parses the text format; errors carry the 1-based line number.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut vertices: Vec<(String, Vec<String>)> = Vec::new();
        let mut edges: Vec<(String, String)> = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let tokens: Vec<&str> = line
                .split_whitespace()
                .take_while(|t| !t.starts_with('#'))
                .collect();
            let bad = |m: &str| Error::InvalidGraph(format!("line {}: {m}", n + 1));
            match tokens.as_slice() {
                [] => {}
                ["vertex", name, halves @ ..] => vertices.push((
                    name.to_string(),
                    halves.iter().map(ToString::to_string).collect(),
                )),
                ["vertex"] => return Err(bad("`vertex` needs a name")),
                ["edge", a, b] => edges.push((a.to_string(), b.to_string())),
                ["edge", ..] => return Err(bad("`edge` needs exactly two half-edges")),
                [other, ..] => return Err(bad(&format!("unknown keyword `{other}`"))),
            }
        }
        Graph::new(vertices, edges)
    }

    /// Vertices in name order, then internal edges in order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, hs) in self.vertex_map() {
            out.push_str("vertex ");
            out.push_str(v);
            for h in hs {
                out.push(' ');
                out.push_str(h);
            }
            out.push('\n');
        }
        for (a, b) in self.internal_edges() {
            out.push_str(&format!("edge {a} {b}\n"));
        }
        out
    }
}
