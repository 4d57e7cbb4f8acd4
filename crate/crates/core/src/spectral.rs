// SPDX-License-Identifier: Apache-2.0

//! Eigenfunctions of `P(q²)`: the ±1 function on the oval halves, an exact
//! check of `θ·f(γ) = Σ_{δ ~ γ} f(δ)`, and an exhaustive minimum-support
//! oracle for tiny graphs.

use std::collections::BTreeMap;
use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::OvalDecomposition;
use crate::error::{Error, Result};
use crate::graph::{srg_parameters, Graph};
use crate::linalg::{kernel_vector_corank_one, rank};

/// Subsets examined, solutions found, first solving subset.
type FirstTally = (u64, usize, Option<Vec<usize>>);

/// Integer vertex function paired with an integer eigenvalue.
///
/// Construction does not validate; [`verify_local_condition`] does.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenfunction {
    values: Vec<i64>,
    theta: i64,
}

impl Eigenfunction {
    pub fn new(values: Vec<i64>, theta: i64) -> Self {
        Eigenfunction { values, theta }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn theta(&self) -> i64 {
        self.theta
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&v| self.values[v] != 0).collect()
    }

    pub fn scaled(&self, c: i64) -> Eigenfunction {
        Eigenfunction {
            values: self.values.iter().map(|v| v * c).collect(),
            theta: self.theta,
        }
    }
}

/// `θ₂ = (−1−q)/2` for `q ≡ 1 (4)`, `θ₁ = (−1+q)/2` for `q ≡ 3 (4)`.
pub fn oval_eigenvalue(q: u32) -> i64 {
    let q = q as i64;
    if q % 4 == 1 {
        (-1 - q) / 2
    } else {
        (-1 + q) / 2
    }
}

/// `f = 1` on `Q₀`, `−1` on `Q₁`, `0` elsewhere.
pub fn build_oval_eigenfunction(dec: &OvalDecomposition) -> Eigenfunction {
    let q = dec.q() as usize;
    let mut values = vec![0i64; q * q];
    for &v in dec.q0() {
        values[v] = 1;
    }
    for &v in dec.q1() {
        values[v] = -1;
    }
    Eigenfunction::new(values, oval_eigenvalue(dec.q()))
}

pub fn support_size(f: &Eigenfunction) -> usize {
    f.values.iter().filter(|&&v| v != 0).count()
}

/// Lower bound `q + 1` on the support of an eigenfunction of `P(q²)` for a
/// non-principal eigenvalue (cited, not derived here).
pub fn weight_distribution_bound(q: u32) -> usize {
    q as usize + 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalConditionReport {
    pub theta: i64,
    pub vertices_checked: usize,
    pub max_residual: i64,
    pub support_size: usize,
}

/// Checks `θ·f(γ) = Σ_{δ ~ γ} f(δ)` at every vertex in exact integers.
/// The first violating vertex (lowest index) is reported with its neighbour sum.
pub fn verify_local_condition(g: &Graph, f: &Eigenfunction) -> Result<LocalConditionReport> {
    if f.values.len() != g.order() {
        return Err(Error::LengthMismatch {
            got: f.values.len(),
            expected: g.order(),
        });
    }
    let support = f.support();
    if support.is_empty() {
        return Err(Error::ZeroFunction);
    }
    let residuals: Vec<(usize, i64, i64)> = (0..g.order())
        .into_par_iter()
        .map(|v| {
            let sum: i64 = support
                .iter()
                .filter(|&&u| g.has_edge(v, u))
                .map(|&u| f.values[u])
                .sum();
            (v, sum, f.theta * f.values[v] - sum)
        })
        .collect();
    if let Some(&(v, sum, _)) = residuals.iter().find(|(_, _, r)| *r != 0) {
        return Err(Error::check(
            "local eigen-condition",
            format!("vertex {v}: θ·f = {} but neighbour sum = {sum}", f.theta * f.values[v]),
        ));
    }
    Ok(LocalConditionReport {
        theta: f.theta,
        vertices_checked: residuals.len(),
        max_residual: 0,
        support_size: support.len(),
    })
}

/// Size limits for [`min_support_oracle`]. The defaults admit `q ∈ {3, 5}`.
#[derive(Clone, Copy, Debug)]
pub struct OracleLimits {
    pub max_vertices: usize,
    pub max_cap: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices: 25,
            max_cap: 8,
        }
    }
}

#[derive(Clone, Debug)]
pub struct OracleResult {
    /// Least support size of a nonzero solution, if one exists within the cap.
    pub min_support: Option<usize>,
    /// Number of vertex sets of that size carrying a solution.
    pub minimal_supports: usize,
    /// An actual solution on the lexicographically first such set, verified
    /// against the full eigen-condition.
    pub witness: Option<Eigenfunction>,
    pub subsets_examined: u64,
}

/// Least `|S| ≤ cap` such that a nonzero function supported inside `S`
/// satisfies the eigen-condition at every vertex.
///
/// Support sets are enumerated by increasing size; `S` carries a solution iff
/// the columns of `A − θI` indexed by `S` are dependent (rank by fraction-free
/// elimination). At the first size where this happens no smaller set works,
/// so every solution on such `S` has support exactly `S`.
pub fn min_support_oracle(g: &Graph, theta: i64, cap: usize, limits: OracleLimits) -> Result<OracleResult> {
    let n = g.order();
    if n > limits.max_vertices {
        return Err(Error::CapExceeded {
            what: "oracle graph order",
            value: n as u64,
            cap: limits.max_vertices as u64,
        });
    }
    if cap > limits.max_cap {
        return Err(Error::CapExceeded {
            what: "oracle support cap",
            value: cap as u64,
            cap: limits.max_cap as u64,
        });
    }
    let spectrum = srg_parameters(g)?
        .spectrum()
        .ok_or_else(|| Error::check("integral spectrum", "SRG eigenvalues are not integers"))?;
    if !spectrum.contains(&theta) {
        return Err(Error::NotAnEigenvalue(theta));
    }

    // column v of A − θI
    let columns: Vec<Vec<i64>> = (0..n)
        .map(|v| {
            (0..n)
                .map(|u| if u == v { -theta } else { g.has_edge(u, v) as i64 })
                .collect()
        })
        .collect();
    let matrix =
        |set: &[usize]| -> Vec<Vec<i64>> { (0..n).map(|u| set.iter().map(|&v| columns[v][u]).collect()).collect() };

    let mut examined = 0u64;
    for size in 1..=cap.min(n) {
        let per_first: Vec<Result<FirstTally>> = (0..=n - size)
            .into_par_iter()
            .map(|first| {
                let mut seen = 0u64;
                let mut count = 0usize;
                let mut witness = None;
                let mut err = None;
                for_each_combination(first + 1, n, size - 1, |rest| {
                    if err.is_some() {
                        return;
                    }
                    seen += 1;
                    let set: Vec<usize> = std::iter::once(first).chain(rest.iter().copied()).collect();
                    match rank(&matrix(&set)) {
                        Ok(r) if r < size => {
                            count += 1;
                            witness.get_or_insert(set);
                        }
                        Ok(_) => {}
                        Err(e) => err = Some(e),
                    }
                });
                match err {
                    Some(e) => Err(e),
                    None => Ok((seen, count, witness)),
                }
            })
            .collect();
        let mut count = 0;
        let mut witness_set = None;
        for r in per_first {
            let (seen, c, w) = r?;
            examined += seen;
            count += c;
            if witness_set.is_none() {
                witness_set = w;
            }
        }
        if let Some(set) = witness_set {
            let kernel = kernel_vector_corank_one(&matrix(&set))?
                .ok_or_else(|| Error::check("oracle corank", "minimal dependent set has corank > 1"))?;
            let g_ = kernel.iter().fold(0i128, |acc, &x| gcd(acc, x.abs()));
            let sign = if kernel.iter().find(|&&x| x != 0).copied().unwrap_or(1) < 0 {
                -1
            } else {
                1
            };
            let mut values = vec![0i64; n];
            for (&v, &x) in set.iter().zip(&kernel) {
                values[v] = i64::try_from(sign * x / g_).map_err(|_| Error::Overflow)?;
            }
            let f = Eigenfunction::new(values, theta);
            let report = verify_local_condition(g, &f)?;
            if report.support_size != size {
                return Err(Error::check(
                    "oracle witness support",
                    format!("solution on a {size}-set has support {}", report.support_size),
                ));
            }
            return Ok(OracleResult {
                min_support: Some(size),
                minimal_supports: count,
                witness: Some(f),
                subsets_examined: examined,
            });
        }
    }
    Ok(OracleResult {
        min_support: None,
        minimal_supports: 0,
        witness: None,
        subsets_examined: examined,
    })
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Calls `f` on every `k`-subset of `start..n` in lexicographic order.
fn for_each_combination(start: usize, n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k == 0 {
        f(&[]);
        return;
    }
    if n < start + k {
        return;
    }
    let mut idx: Vec<usize> = (start..start + k).collect();
    loop {
        f(&idx);
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenfunctionJson {
    pub q: u32,
    pub theta: i64,
    pub values: BTreeMap<usize, i64>,
    pub support_size: usize,
}

pub fn to_json(q: u32, f: &Eigenfunction) -> EigenfunctionJson {
    EigenfunctionJson {
        q,
        theta: f.theta,
        values: f.support().into_iter().map(|v| (v, f.values[v])).collect(),
        support_size: support_size(f),
    }
}

/// `vertex,value` for every vertex.
pub fn to_csv(f: &Eigenfunction) -> String {
    let mut out = String::from("vertex,value\n");
    for (v, x) in f.values.iter().enumerate() {
        writeln!(out, "{v},{x}").unwrap();
    }
    out
}
