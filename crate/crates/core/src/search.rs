// SPDX-License-Identifier: Apache-2.0

//! Maximal clique enumeration (Bron–Kerbosch with Tomita pivoting over
//! bitsets) and clique censuses.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Bitset, Graph};

/// Default limit on the order of graphs handed to the enumerator.
pub const DEFAULT_ENUMERATION_CAP: usize = 2500;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnumOptions {
    pub min_size: usize,
    pub max_size: Option<usize>,
    /// Stop after this many cliques; the result is then marked truncated.
    pub limit: Option<usize>,
    #[serde(skip)]
    pub cap: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            min_size: 1,
            max_size: None,
            limit: None,
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl EnumOptions {
    pub fn exact_size(size: usize) -> Self {
        EnumOptions {
            min_size: size,
            max_size: Some(size),
            ..Default::default()
        }
    }

    fn max(&self) -> usize {
        self.max_size.unwrap_or(usize::MAX)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    /// Sorted vertex sets, in lexicographic order.
    pub cliques: Vec<Vec<usize>>,
    pub truncated: bool,
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.order() > cap {
        return Err(Error::CapExceeded {
            what: "enumeration graph order",
            value: g.order() as u64,
            cap: cap as u64,
        });
    }
    Ok(())
}

struct Search<'a> {
    g: &'a Graph,
    opts: EnumOptions,
    budget: usize,
}

impl Search<'_> {
    fn pivot(&self, p: &Bitset, x: &Bitset) -> Option<usize> {
        // max |P ∩ N(u)| over u ∈ P ∪ X, least index on ties
        let mut best: Option<(usize, usize)> = None;
        for u in p.iter().chain(x.iter()) {
            let c = p.intersection_len(self.g.row(u));
            match best {
                Some((bu, bc)) if c < bc || (c == bc && u > bu) => {}
                _ => best = Some((u, c)),
            }
        }
        best.map(|(u, _)| u)
    }

    fn expand(&self, r: &mut Vec<usize>, mut p: Bitset, mut x: Bitset, out: &mut Vec<Vec<usize>>) {
        if out.len() >= self.budget {
            return;
        }
        if p.is_empty() {
            if x.is_empty() && r.len() >= self.opts.min_size && r.len() <= self.opts.max() {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return;
        }
        if r.len() + p.len() < self.opts.min_size || r.len() >= self.opts.max() {
            return;
        }
        let u = self.pivot(&p, &x).expect("P is nonempty");
        let branch: Vec<usize> = p.difference(self.g.row(u)).iter().collect();
        for v in branch {
            let row = self.g.row(v);
            r.push(v);
            self.expand(r, p.intersection(row), x.intersection(row), out);
            r.pop();
            p.remove(v);
            x.insert(v);
        }
    }
}

/// Every maximal clique with size in `[min_size, max_size]`, each exactly once,
/// sorted. Root branches run in parallel; the output does not depend on the
/// thread count.
pub fn enumerate_maximal_cliques(g: &Graph, opts: EnumOptions) -> Result<Enumeration> {
    check_cap(g, opts.cap)?;
    let n = g.order();
    if n == 0 {
        return Ok(Enumeration {
            cliques: Vec::new(),
            truncated: false,
        });
    }
    let budget = opts.limit.map_or(usize::MAX, |l| l.saturating_add(1));
    let search = Search { g, opts, budget };

    let all = Bitset::full(n);
    let root_pivot = search.pivot(&all, &Bitset::new(n)).expect("nonempty graph");
    let roots: Vec<usize> = all.difference(g.row(root_pivot)).iter().collect();
    let mut found: Vec<Vec<usize>> = roots
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, &v)| {
            let mut p = all.clone();
            let mut x = Bitset::new(n);
            for &w in &roots[..i] {
                p.remove(w);
                x.insert(w);
            }
            let row = g.row(v);
            let mut out = Vec::new();
            search.expand(&mut vec![v], p.intersection(row), x.intersection(row), &mut out);
            out
        })
        .collect();
    found.sort();
    let truncated = opts.limit.is_some_and(|l| found.len() > l);
    if let Some(l) = opts.limit {
        found.truncate(l);
    }
    Ok(Enumeration {
        cliques: found,
        truncated,
    })
}

/// Size of a largest clique, by branch and bound.
pub fn clique_number(g: &Graph, cap: usize) -> Result<usize> {
    check_cap(g, cap)?;
    let n = g.order();
    if n == 0 {
        return Ok(0);
    }
    let best = AtomicUsize::new(1);

    fn grow(g: &Graph, size: usize, p: Bitset, best: &AtomicUsize) {
        if p.is_empty() {
            best.fetch_max(size, Ordering::Relaxed);
            return;
        }
        let mut p = p;
        while let Some(v) = p.first() {
            if size + p.len() <= best.load(Ordering::Relaxed) {
                return;
            }
            grow(g, size + 1, p.intersection(g.row(v)), best);
            p.remove(v);
        }
    }

    (0..n).into_par_iter().for_each(|v| {
        // cliques whose least vertex is v
        let mut later = Bitset::full(n);
        for w in 0..=v {
            later.remove(w);
        }
        grow(g, 1, later.intersection(g.row(v)), &best);
    });
    Ok(best.into_inner())
}

/// An orbit of reference sets to compare census results against.
#[derive(Clone, Debug)]
pub struct ReferenceOrbit {
    pub name: String,
    /// Sorted vertex sets, sorted lexicographically.
    pub sets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CliqueCensus {
    pub q: u32,
    pub options: EnumOptions,
    pub histogram: BTreeMap<usize, usize>,
    /// Per reference: how many enumerated cliques lie in its orbit.
    pub orbit_counts: BTreeMap<String, usize>,
    /// Per reference: full orbit size.
    pub orbit_sizes: BTreeMap<String, usize>,
    pub samples: BTreeMap<usize, Vec<Vec<usize>>>,
    pub truncated: bool,
    #[serde(skip)]
    pub cliques: Vec<Vec<usize>>,
}

impl CliqueCensus {
    pub fn total(&self) -> usize {
        self.histogram.values().sum()
    }
}

/// Enumerates, spot-checks every clique for maximality, and counts orbit
/// membership for each reference.
pub fn census(
    g: &Graph,
    q: u32,
    opts: EnumOptions,
    references: &[ReferenceOrbit],
    samples_per_size: usize,
) -> Result<CliqueCensus> {
    let found = enumerate_maximal_cliques(g, opts)?;
    if let Some(bad) = found
        .cliques
        .par_iter()
        .find_first(|c| !g.is_maximal_clique(c).unwrap_or(false))
    {
        return Err(Error::check(
            "enumeration soundness",
            format!("{bad:?} is not a maximal clique"),
        ));
    }
    let mut histogram = BTreeMap::new();
    let mut samples: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for c in &found.cliques {
        *histogram.entry(c.len()).or_insert(0) += 1;
        let s = samples.entry(c.len()).or_default();
        if s.len() < samples_per_size {
            s.push(c.clone());
        }
    }
    let mut orbit_counts = BTreeMap::new();
    let mut orbit_sizes = BTreeMap::new();
    for r in references {
        let hits = found.cliques.iter().filter(|c| r.sets.binary_search(c).is_ok()).count();
        orbit_counts.insert(r.name.clone(), hits);
        orbit_sizes.insert(r.name.clone(), r.sets.len());
    }
    Ok(CliqueCensus {
        q,
        options: opts,
        histogram,
        orbit_counts,
        orbit_sizes,
        samples,
        truncated: found.truncated,
        cliques: found.cliques,
    })
}

/// Canonical-key membership test against the enumerated cliques.
pub fn contains_set(census: &CliqueCensus, set: &[usize]) -> bool {
    if set.is_empty() {
        return false;
    }
    let mut key = set.to_vec();
    key.sort_unstable();
    census.cliques.binary_search(&key).is_ok()
}
