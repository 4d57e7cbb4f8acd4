// SPDX-License-Identifier: Apache-2.0

//! DIMACS and JSON adjacency output.

use std::fmt::Write;

use serde::Serialize;

use super::Graph;

/// DIMACS `edge` format with 1-based vertex ids in canonical order.
pub fn to_dimacs(g: &Graph, comment: &str) -> String {
    let mut out = String::new();
    for line in comment.lines() {
        writeln!(out, "c {line}").unwrap();
    }
    writeln!(out, "p edge {} {}", g.order(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Rows are hex strings: word 0 first, each word as 16 lowercase hex digits,
/// bit `j` of the row at bit `j mod 64` of word `j / 64`.
#[derive(Clone, Debug, Serialize)]
pub struct AdjacencyJson {
    pub q: u32,
    pub v: usize,
    pub k: usize,
    pub rows: Vec<String>,
}

pub fn row_hex(words: &[u64]) -> String {
    words.iter().fold(String::new(), |mut s, w| {
        write!(s, "{w:016x}").unwrap();
        s
    })
}

pub fn to_adjacency_json(g: &Graph, q: u32) -> AdjacencyJson {
    AdjacencyJson {
        q,
        v: g.order(),
        k: if g.order() > 0 { g.degree(0) } else { 0 },
        rows: (0..g.order()).map(|u| row_hex(g.row(u))).collect(),
    }
}
