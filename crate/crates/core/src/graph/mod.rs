// SPDX-License-Identifier: Apache-2.0

//! Bitset graphs and the Paley graph `P(q²)`.

pub mod bitset;
pub mod export;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::QuadExt;
pub use bitset::Bitset;
use bitset::{and_count, ones, words_for};

/// Default limit on the number of vertices of a materialized Paley graph.
pub const DEFAULT_GRAPH_CAP: usize = 1 << 14;

/// Simple undirected graph stored as one bitset row per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        ones(self.row(u))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        and_count(self.row(u), self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut out = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    out.add_edge(u, v);
                }
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|u| !self.has_edge(u, u) && self.neighbors(u).all(|v| self.has_edge(v, u)))
    }

    fn check_set(&self, set: &[usize]) -> Result<()> {
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        match set.iter().find(|&&v| v >= self.n) {
            Some(&vertex) => Err(Error::VertexOutOfRange { vertex, order: self.n }),
            None => Ok(()),
        }
    }

    /// First pair of distinct members of `set` that are not adjacent.
    pub fn non_edge_in(&self, set: &[usize]) -> Option<(usize, usize)> {
        set.iter().enumerate().find_map(|(i, &u)| {
            set[i + 1..]
                .iter()
                .find(|&&v| u == v || !self.has_edge(u, v))
                .map(|&v| (u, v))
        })
    }

    /// First pair of members of `set` that are adjacent.
    pub fn edge_in(&self, set: &[usize]) -> Option<(usize, usize)> {
        set.iter().enumerate().find_map(|(i, &u)| {
            set[i + 1..]
                .iter()
                .find(|&&v| u == v || self.has_edge(u, v))
                .map(|&v| (u, v))
        })
    }

    pub fn is_clique(&self, set: &[usize]) -> Result<bool> {
        self.check_set(set)?;
        Ok(self.non_edge_in(set).is_none())
    }

    pub fn is_coclique(&self, set: &[usize]) -> Result<bool> {
        self.check_set(set)?;
        Ok(self.edge_in(set).is_none())
    }

    /// Vertices outside `set` adjacent to every member of `set`.
    pub fn clique_extensions(&self, set: &[usize]) -> Bitset {
        let mut common = Bitset::full(self.n);
        for &v in set {
            common.intersect_with(self.row(v));
        }
        common
    }

    /// Vertices outside `set` adjacent to no member of `set`.
    pub fn coclique_extensions(&self, set: &[usize]) -> Bitset {
        let mut free = Bitset::full(self.n);
        for &v in set {
            free.remove(v);
            free = free.difference(self.row(v));
        }
        free
    }

    pub fn is_maximal_clique(&self, set: &[usize]) -> Result<bool> {
        Ok(self.is_clique(set)? && self.clique_extensions(set).is_empty())
    }

    pub fn is_maximal_coclique(&self, set: &[usize]) -> Result<bool> {
        Ok(self.is_coclique(set)? && self.coclique_extensions(set).is_empty())
    }

    /// Induced subgraph on `set`, relabelled `0..set.len()` in the given order.
    pub fn induced(&self, set: &[usize]) -> Graph {
        let mut out = Graph::empty(set.len());
        for (i, &u) in set.iter().enumerate() {
            for (j, &v) in set.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    out.add_edge(i, j);
                }
            }
        }
        out
    }

    /// `true` iff `perm` maps non-adjacent pairs of `self` exactly onto adjacent pairs.
    pub fn is_complement_isomorphism(&self, perm: &[usize]) -> bool {
        if perm.len() != self.n {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return false;
            }
        }
        (0..self.n)
            .into_par_iter()
            .all(|u| ((u + 1)..self.n).all(|v| self.has_edge(u, v) != self.has_edge(perm[u], perm[v])))
    }
}

/// Parameters `(v, k, λ, μ)` of a strongly regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    /// `(q², (q²−1)/2, (q²−5)/4, (q²−1)/4)`.
    pub fn paley_square(q: u64) -> Self {
        let v = q * q;
        SrgParams {
            v,
            k: (v - 1) / 2,
            lambda: (v - 5) / 4,
            mu: (v - 1) / 4,
        }
    }

    /// `k(k − λ − 1) = (v − k − 1)μ`.
    pub fn is_feasible(&self) -> bool {
        self.k * (self.k - self.lambda - 1) == (self.v - self.k - 1) * self.mu
    }

    /// Restricted eigenvalues `(θ₁, θ₂)`, the roots of `x² − (λ−μ)x − (k−μ)`,
    /// when both are integers.
    pub fn eigenvalues(&self) -> Option<(i64, i64)> {
        let b = self.lambda as i64 - self.mu as i64;
        let disc = b * b + 4 * (self.k as i64 - self.mu as i64);
        let root = u64::try_from(disc).ok()?.isqrt() as i64;
        if root * root != disc {
            return None;
        }
        if (b + root) % 2 != 0 {
            return None;
        }
        Some(((b + root) / 2, (b - root) / 2))
    }

    /// `{k, θ₁, θ₂}` when integral.
    pub fn spectrum(&self) -> Option<[i64; 3]> {
        let (t1, t2) = self.eigenvalues()?;
        Some([self.k as i64, t1, t2])
    }
}

/// Exhaustive common-neighbour count over all pairs.
///
/// Fails with the first offending pair (lexicographic) if the counts are not
/// constant on adjacent and on non-adjacent pairs.
pub fn srg_parameters(g: &Graph) -> Result<SrgParams> {
    let n = g.order();
    if n < 2 {
        return Err(Error::NotStronglyRegular(format!("{n} vertices")));
    }
    let k = g.degree(0);
    if let Some(u) = (0..n).find(|&u| g.degree(u) != k) {
        return Err(Error::NotStronglyRegular(format!(
            "vertex {u} has degree {} != {k}",
            g.degree(u)
        )));
    }
    let lambda = g.neighbors(0).next().map(|v| g.common_neighbors(0, v));
    let mu = (1..n).find(|&v| !g.has_edge(0, v)).map(|v| g.common_neighbors(0, v));
    let violation = (0..n).into_par_iter().find_map_first(|u| {
        ((u + 1)..n).find_map(|v| {
            let c = g.common_neighbors(u, v);
            let expected = if g.has_edge(u, v) { lambda } else { mu };
            (Some(c) != expected).then_some((u, v, c))
        })
    });
    if let Some((u, v, c)) = violation {
        return Err(Error::NotStronglyRegular(format!(
            "pair ({u}, {v}) has {c} common neighbours"
        )));
    }
    Ok(SrgParams {
        v: n as u64,
        k: k as u64,
        lambda: lambda.unwrap_or(0) as u64,
        mu: mu.unwrap_or(0) as u64,
    })
}

/// `P(q²)`: vertices are the elements of `F_{q²}` in canonical order, adjacent
/// iff their difference is a nonzero square.
#[derive(Clone, Debug)]
pub struct PaleyGraph {
    q: u32,
    graph: Graph,
}

impl PaleyGraph {
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

impl std::ops::Deref for PaleyGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

pub fn build_paley(ctx: &QuadExt) -> Result<PaleyGraph> {
    build_paley_with_cap(ctx, DEFAULT_GRAPH_CAP)
}

pub fn build_paley_with_cap(ctx: &QuadExt, cap: usize) -> Result<PaleyGraph> {
    let n = ctx.order();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "graph order",
            value: n as u64,
            cap: cap as u64,
        });
    }
    // Cayley graph: the row of γ is γ + S for the connection set S of squares.
    let squares: Vec<_> = ctx
        .square_table()
        .iter()
        .enumerate()
        .filter(|(_, &s)| s)
        .map(|(i, _)| ctx.element(i))
        .collect();
    let words = words_for(n);
    let mut rows = vec![0u64; n * words];
    rows.par_chunks_mut(words).enumerate().for_each(|(u, row)| {
        let gamma = ctx.element(u);
        for &s in &squares {
            let v = ctx.index(ctx.add(gamma, s));
            row[v / 64] |= 1 << (v % 64);
        }
    });
    Ok(PaleyGraph {
        q: ctx.q(),
        graph: Graph { n, words, rows },
    })
}

/// Multiplication by the primitive element `β`, as a vertex permutation.
pub fn beta_multiplier(ctx: &QuadExt) -> Vec<usize> {
    let beta = ctx.primitive();
    (0..ctx.order())
        .map(|i| ctx.index(ctx.mul(beta, ctx.element(i))))
        .collect()
}

/// Checks that `γ ↦ βγ` maps the complement of `g` onto `g`, pair by pair.
pub fn verify_self_complementary(g: &PaleyGraph, ctx: &QuadExt) -> bool {
    g.is_complement_isomorphism(&beta_multiplier(ctx))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paley(q: u64) -> (QuadExt, PaleyGraph) {
        let ctx = QuadExt::of_order(q).unwrap();
        let g = build_paley(&ctx).unwrap();
        (ctx, g)
    }

    #[test]
    fn small_orders_and_degrees() {
        let (_, g3) = paley(3);
        assert_eq!(g3.order(), 9);
        assert!((0..9).all(|u| g3.degree(u) == 4));
        let (_, g5) = paley(5);
        assert_eq!(g5.order(), 25);
        assert!((0..25).all(|u| g5.degree(u) == 12 && !g5.has_edge(u, u)));
        assert!(g5.is_symmetric());
        assert_eq!(g5.edge_count(), 150);
    }

    #[test]
    fn srg_small() {
        assert_eq!(
            srg_parameters(&paley(3).1).unwrap(),
            SrgParams {
                v: 9,
                k: 4,
                lambda: 1,
                mu: 2
            }
        );
        assert_eq!(
            srg_parameters(&paley(5).1).unwrap(),
            SrgParams {
                v: 25,
                k: 12,
                lambda: 5,
                mu: 6
            }
        );
        assert_eq!(
            srg_parameters(&paley(7).1).unwrap(),
            SrgParams {
                v: 49,
                k: 24,
                lambda: 11,
                mu: 12
            }
        );
    }

    #[test]
    fn srg_rejects_path() {
        let mut g = Graph::empty(3);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        assert!(matches!(srg_parameters(&g), Err(Error::NotStronglyRegular(_))));
    }

    #[test]
    fn eigenvalues_from_parameters() {
        assert_eq!(SrgParams::paley_square(3).spectrum(), Some([4, 1, -2]));
        assert_eq!(SrgParams::paley_square(5).eigenvalues(), Some((2, -3)));
        assert_eq!(SrgParams::paley_square(7).eigenvalues(), Some((3, -4)));
        assert!(SrgParams::paley_square(11).is_feasible());
    }

    #[test]
    fn self_complementary_witness() {
        for q in [3, 5, 9] {
            let (ctx, g) = paley(q);
            assert!(verify_self_complementary(&g, &ctx));
            let identity: Vec<usize> = (0..g.order()).collect();
            assert!(!g.is_complement_isomorphism(&identity));
        }
    }

    #[test]
    fn complement_involution() {
        let (_, g) = paley(5);
        let c = g.complement();
        assert!((0..25).all(|u| c.degree(u) == 12));
        assert_eq!(&c.complement(), g.graph());
    }

    #[test]
    fn clique_predicates() {
        let (ctx, g) = paley(5);
        // subfield {(x, 0)} is a clique of order q
        let sub: Vec<usize> = (0..5).map(|x| ctx.index(ctx.embed(crate::field::Elem(x)))).collect();
        assert!(g.is_maximal_clique(&sub).unwrap());
        assert!(g.is_clique(&[3]).unwrap());
        assert!(!g.is_maximal_clique(&[3]).unwrap());
        assert!(matches!(g.is_clique(&[]), Err(Error::EmptySet)));
        assert!(matches!(
            g.is_clique(&[25]),
            Err(Error::VertexOutOfRange { vertex: 25, order: 25 })
        ));
    }

    #[test]
    fn graph_cap() {
        let ctx = QuadExt::of_order(11).unwrap();
        assert!(matches!(
            build_paley_with_cap(&ctx, 100),
            Err(Error::CapExceeded { .. })
        ));
    }
}
