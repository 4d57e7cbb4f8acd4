// SPDX-License-Identifier: Apache-2.0

//! Acceptance checks, one PASS/FAIL line per criterion. All comparisons are
//! exact. Runs without the libtest harness so the lines always print.

mod oracle;

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};

use serde_json::Value;

use oracle::{mask_of, maximal_cliques, rank_mod, PrimeSquare};
use paley_core::arith::{is_prime, odd_prime_powers_up_to};
use paley_core::certify::{self, lemma_suite, Instance, VERIFY_MAX_Q};
use paley_core::constructions::{theorem1_sets, SetKind};
use paley_core::field::QuadExt;
use paley_core::graph::{build_paley, srg_parameters, verify_self_complementary, SrgParams};
use paley_core::search::{clique_number, DEFAULT_ENUMERATION_CAP};
use paley_core::spectral::{
    build_oval_eigenfunction, min_support_oracle, support_size, verify_local_condition, weight_distribution_bound,
    OracleLimits,
};

/// Criteria that cannot hold as stated, with the reason. They still print
/// FAIL; the run only succeeds if the observed counterexample is the one
/// documented here.
const KNOWN_GAPS: &[(&str, &str)] = &[(
    "6b",
    "at q = 7 every maximal 5-clique is an affine image of the oval cliques (294 = 294); the strict excess first appears at q = 9 and q = 11",
)];

struct Outcome {
    id: &'static str,
    passed: bool,
    detail: String,
}

fn outcome(id: &'static str, failures: Vec<String>, ok_detail: impl Into<String>) -> Outcome {
    let passed = failures.is_empty();
    Outcome {
        id,
        passed,
        detail: if passed { ok_detail.into() } else { failures.join("; ") },
    }
}

fn criterion_1() -> Outcome {
    let mut failures = Vec::new();
    for q in [3u64, 5, 7, 9, 11, 13] {
        let ctx = QuadExt::of_order(q).unwrap();
        let g = build_paley(&ctx).unwrap();
        let v = q * q;
        let expected = SrgParams {
            v,
            k: (v - 1) / 2,
            lambda: (v - 5) / 4,
            mu: (v - 1) / 4,
        };
        match srg_parameters(&g) {
            Ok(p) if p == expected => {}
            other => failures.push(format!("q = {q}: {other:?}")),
        }
        if q != 9 {
            let o = PrimeSquare::new(q);
            let same = (0..o.order()).all(|i| (0..o.order()).all(|j| o.adj[i][j] == g.has_edge(i, j)));
            if !same {
                failures.push(format!("q = {q}: adjacency differs from the reference construction"));
            }
        }
    }
    outcome(
        "1",
        failures,
        "q in {3,5,7,9,11,13}; adjacency matches reference for prime q",
    )
}

fn criterion_2() -> Outcome {
    let mut failures = Vec::new();
    let qs = odd_prime_powers_up_to(31);
    for &q in &qs {
        let inst = Instance::new(q, VERIFY_MAX_Q).unwrap();
        let g = inst.graph.graph();
        let sets = theorem1_sets(&inst.dec);
        let (kind, size) = if q % 4 == 1 {
            (SetKind::Coclique, (q as usize + 1) / 2)
        } else {
            (SetKind::Clique, (q as usize + 3) / 2)
        };
        if sets.len() != 2 {
            failures.push(format!("q = {q}: {} sets", sets.len()));
        }
        for s in &sets {
            let want_edge = kind == SetKind::Clique;
            let internal = s
                .set
                .iter()
                .enumerate()
                .all(|(i, &u)| s.set[i + 1..].iter().all(|&v| g.has_edge(u, v) == want_edge));
            let extendable = (0..g.order())
                .filter(|v| !s.set.contains(v))
                .find(|&v| s.set.iter().all(|&u| g.has_edge(u, v) == want_edge));
            if s.kind != kind || s.set.len() != size || !internal || extendable.is_some() {
                failures.push(format!(
                    "q = {q} {}: kind {:?}, size {}, property {internal}, extension {extendable:?}",
                    s.claim,
                    s.kind,
                    s.set.len()
                ));
            }
        }
        let cert = certify::verify(
            q,
            VERIFY_MAX_Q,
            certify::Selection {
                theorem1: true,
                ..Default::default()
            },
        )
        .unwrap();
        if !cert.passed {
            failures.push(format!("q = {q}: oval-set certificate failed"));
        }
    }
    outcome("2", failures, format!("{} orders q <= 31", qs.len()))
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    let qs = odd_prime_powers_up_to(31);
    for &q in &qs {
        let inst = Instance::new(q, VERIFY_MAX_Q).unwrap();
        let g = inst.graph.graph();
        let f = build_oval_eigenfunction(&inst.dec);
        let theta = if q % 4 == 1 {
            -(q as i64 + 1) / 2
        } else {
            (q as i64 - 1) / 2
        };
        let vals = f.values();
        let bad = (0..g.order()).find(|&v| {
            let s: i64 = g.neighbors(v).map(|u| vals[u]).sum();
            s != theta * vals[v]
        });
        let lib = verify_local_condition(g, &f);
        let support = support_size(&f);
        let bound = weight_distribution_bound(q as u32);
        if f.theta() != theta || bad.is_some() || lib.is_err() || support != q as usize + 1 || bound != support {
            failures.push(format!(
                "q = {q}: theta {} vs {theta}, bad vertex {bad:?}, library {:?}, support {support}, bound {bound}",
                f.theta(),
                lib.err()
            ));
        }
    }
    outcome(
        "3",
        failures,
        format!("{} orders q <= 31, all q^2 vertices each", qs.len()),
    )
}

/// No nonzero solution supported on any set of size `≤ q`, and a solution of
/// support `q + 1`: so the minimum is exactly `q + 1`.
fn independent_min_support(q: u64, theta: i64) -> Option<usize> {
    const M: u64 = 2_147_483_647;
    let o = PrimeSquare::new(q);
    let n = o.order();
    let col = |v: usize| -> Vec<i64> {
        (0..n)
            .map(|u| if u == v { -theta } else { o.adj[u][v] as i64 })
            .collect()
    };
    let cols: Vec<Vec<i64>> = (0..n).map(col).collect();
    let mut subset = Vec::new();
    fn rec(cols: &[Vec<i64>], start: usize, k: usize, subset: &mut Vec<usize>, m: u64) -> bool {
        if subset.len() == k {
            let n = cols.len();
            let rows: Vec<Vec<i64>> = (0..n).map(|r| subset.iter().map(|&c| cols[c][r]).collect()).collect();
            return rank_mod(&rows, m) == k;
        }
        (start..cols.len()).all(|v| {
            subset.push(v);
            let ok = rec(cols, v + 1, k, subset, m);
            subset.pop();
            ok
        })
    }
    for k in 1..=q as usize {
        if !rec(&cols, 0, k, &mut subset, M) {
            return None;
        }
    }
    let [h0, h1] = o.oval_halves();
    let mut f = vec![0i64; n];
    h0.iter().for_each(|&v| f[v] = 1);
    h1.iter().for_each(|&v| f[v] = -1);
    let holds = (0..n).all(|v| (0..n).filter(|&u| o.adj[v][u]).map(|u| f[u]).sum::<i64>() == theta * f[v]);
    holds.then_some(q as usize + 1)
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    let mut found = Vec::new();
    for (q, theta, expected) in [(3u64, 1i64, 4usize), (5, -3, 6)] {
        let ctx = QuadExt::of_order(q).unwrap();
        let g = build_paley(&ctx).unwrap();
        let lib = min_support_oracle(&g, theta, expected, OracleLimits::default()).unwrap();
        let reference = independent_min_support(q, theta);
        found.push(format!("q={q}, theta={theta}: {:?}", lib.min_support));
        if lib.min_support != Some(expected) || reference != Some(expected) {
            failures.push(format!(
                "q = {q}, theta = {theta}: library {:?}, reference {reference:?}",
                lib.min_support
            ));
        }
        if let Some(w) = &lib.witness {
            if verify_local_condition(&g, w).is_err() || support_size(w) != expected {
                failures.push(format!("q = {q}: witness does not verify"));
            }
        }
    }
    outcome("4", failures, found.join(", "))
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    let qs = odd_prime_powers_up_to(31);
    let required = [
        "plane.quadratic_lines",
        "field.minus_one",
        "field.minus_nonsquares",
        "extension.norm_criterion",
        "extension.base_field_squares",
        "oval.squares",
        "extension.alpha",
        "oval.axioms",
        "oval.qvist",
        "oval.tangent_uniformity",
        "q.adjacency_structure",
    ];
    for &q in &qs {
        let inst = Instance::new(q, VERIFY_MAX_Q).unwrap();
        let checks = lemma_suite(&inst).unwrap();
        let mut names: Vec<String> = required.iter().map(|s| s.to_string()).collect();
        if q <= 13 {
            names.extend((1..=7).map(|i| format!("tq.item{i}")));
        }
        for name in &names {
            match checks.iter().find(|c| &c.name == name) {
                Some(c) if c.passed => {}
                Some(c) => failures.push(format!("q = {q} {name}: {}", c.details)),
                None => failures.push(format!("q = {q}: {name} missing")),
            }
        }
        if let Some(o) = is_prime(q).then(|| PrimeSquare::new(q)) {
            // directions 1 and c + α: a line is quadratic iff its direction is a square
            let dirs = std::iter::once((1, 0)).chain((0..q).map(|c| (c, 1)));
            let quadratic = dirs.filter(|&v| o.square[o.index(v)]).count();
            if quadratic != (q as usize + 1) / 2 {
                failures.push(format!("q = {q}: reference count of quadratic directions {quadratic}"));
            }
            let qset: BTreeSet<usize> = (1..o.order()).filter(|&i| o.norm(o.element(i)) == 1).collect();
            let tangents_ok = (0..o.order()).filter(|v| !qset.contains(v)).all(|v| {
                let t = std::iter::once((1, 0))
                    .chain((0..q).map(|c| (c, 1)))
                    .filter(|&dir| {
                        let pt = o.element(v);
                        let mut hits = 0;
                        let mut cur = pt;
                        for _ in 0..q {
                            hits += qset.contains(&o.index(cur)) as usize;
                            cur = o.add(cur, dir);
                        }
                        hits == 1
                    })
                    .count();
                t == 0 || t == 2
            });
            if !tangents_ok {
                failures.push(format!("q = {q}: reference tangent count not 0 or 2"));
            }
        }
    }
    outcome(
        "5",
        failures,
        format!("{} orders q <= 31; T_Q items for q <= 13", qs.len()),
    )
}

fn histogram(cliques: &[u128]) -> Vec<(u32, usize)> {
    let mut h = std::collections::BTreeMap::new();
    for c in cliques {
        *h.entry(c.count_ones()).or_insert(0) += 1;
    }
    h.into_iter().collect()
}

fn criterion_6a() -> Outcome {
    let cert = certify::cliques(
        3,
        certify::CENSUS_FULL_MAX_Q,
        certify::CliquesRequest {
            size: None,
            limit: None,
        },
    )
    .unwrap();
    let census = cert.census.clone().unwrap();
    let lib: Vec<(u32, usize)> = census.histogram.iter().map(|(&k, &v)| (k as u32, v)).collect();
    let reference = histogram(&maximal_cliques(&PrimeSquare::new(3).masks()));
    let mut failures = Vec::new();
    if lib != vec![(3, 6)] || reference != vec![(3, 6)] || census.truncated {
        failures.push(format!("library {lib:?}, reference {reference:?}"));
    }
    outcome("6a", failures, "6 maximal cliques, all of size 3")
}

/// Images of `Qᵢ ∪ {0}` under `γ ↦ sγ + t`, `s` a nonzero square.
fn reference_orbit(o: &PrimeSquare) -> BTreeSet<u128> {
    let [h0, h1] = o.oval_halves();
    let mut out = BTreeSet::new();
    for half in [h0, h1] {
        let set: Vec<(u64, u64)> = half.iter().chain([&0]).map(|&v| o.element(v)).collect();
        for s in (1..o.order()).filter(|&s| o.square[s]) {
            for t in 0..o.order() {
                let img: Vec<usize> = set
                    .iter()
                    .map(|&g| o.index(o.add(o.mul(o.element(s), g), o.element(t))))
                    .collect();
                out.insert(mask_of(&img));
            }
        }
    }
    out
}

fn criterion_6b() -> Outcome {
    let q = 7;
    let cert = certify::cliques(
        q,
        certify::CENSUS_SIZED_MAX_Q,
        certify::CliquesRequest {
            size: Some(5),
            limit: None,
        },
    )
    .unwrap();
    let census = cert.census.clone().unwrap();
    let lib_total = census.histogram.get(&5).copied().unwrap_or(0);
    let lib_orbit = census.orbit_counts.get("oval").copied().unwrap_or(0);

    let o = PrimeSquare::new(q);
    let all = maximal_cliques(&o.masks());
    let fives: BTreeSet<u128> = all.iter().copied().filter(|c| c.count_ones() == 5).collect();
    let orbit = reference_orbit(&o);
    let orbit_maximal = orbit.iter().filter(|c| fives.contains(c)).count();

    let consistent = lib_total == fives.len() && lib_orbit == orbit.len() && orbit_maximal == orbit.len();
    let detail = format!(
        "q = 7: maximal 5-cliques {} (reference {}), affine images {} (reference {})",
        lib_total,
        fives.len(),
        lib_orbit,
        orbit.len()
    );
    Outcome {
        id: "6b",
        passed: consistent && lib_total > lib_orbit,
        detail: if consistent {
            detail
        } else {
            format!("library and reference disagree: {detail}")
        },
    }
}

/// Not a criterion: the strict excess at the next orders, for context.
fn excess_beyond_seven() -> String {
    [9u64, 11]
        .iter()
        .map(|&q| {
            let cert = certify::cliques(
                q,
                certify::CENSUS_FULL_MAX_Q,
                certify::CliquesRequest {
                    size: None,
                    limit: None,
                },
            )
            .unwrap();
            let c = cert.census.unwrap();
            let size = if q % 4 == 1 { (q + 1) / 2 } else { (q + 3) / 2 } as usize;
            format!(
                "q = {q}: {} maximal {size}-cliques, {} affine images",
                c.histogram[&size], c.orbit_counts["oval"]
            )
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn criterion_6c() -> Outcome {
    let mut failures = Vec::new();
    for q in [3u64, 5, 7] {
        let ctx = QuadExt::of_order(q).unwrap();
        let g = build_paley(&ctx).unwrap();
        let lib = clique_number(&g, DEFAULT_ENUMERATION_CAP).unwrap();
        let reference = maximal_cliques(&PrimeSquare::new(q).masks())
            .iter()
            .map(|c| c.count_ones() as usize)
            .max()
            .unwrap();
        if lib != q as usize || reference != q as usize {
            failures.push(format!("q = {q}: library {lib}, reference {reference}"));
        }
    }
    outcome("6c", failures, "clique number q for q in {3,5,7}")
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    for q in [3u64, 5, 7, 11, 13] {
        let ctx = QuadExt::of_order(q).unwrap();
        let g = build_paley(&ctx).unwrap();
        if !verify_self_complementary(&g, &ctx) {
            failures.push(format!("q = {q}: library check failed"));
        }
        let o = PrimeSquare::new(q);
        let beta = ctx.primitive();
        let b = (beta.x.0 as u64, beta.y.0 as u64);
        let img = |i: usize| o.index(o.mul(b, o.element(i)));
        let n = o.order();
        let ok = (0..n).all(|i| (i + 1..n).all(|j| o.adj[i][j] != o.adj[img(i)][img(j)]));
        if !ok {
            failures.push(format!("q = {q}: reference edge check failed"));
        }
    }
    outcome("7", failures, "gamma -> beta*gamma for q in {3,5,7,11,13}")
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("timing");
            m.values_mut().for_each(strip_timing);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

fn run_cli(args: &[&str]) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_paley"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?} exited with {:?}", out.status.code()));
    }
    let mut v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    if v.get("timing").is_none() {
        return Err(format!("{args:?}: no timing field"));
    }
    strip_timing(&mut v);
    Ok(v)
}

fn criterion_8() -> Outcome {
    let mut failures = Vec::new();
    let pairs: [(&[&str], &[&str]); 2] = [
        (&["verify", "--q", "9", "--all"], &["verify", "--q", "9", "--all"]),
        (
            &["cliques", "--q", "7", "--size", "5", "--threads", "1"],
            &["cliques", "--q", "7", "--size", "5", "--threads", "8"],
        ),
    ];
    for (a, b) in pairs {
        match (run_cli(a), run_cli(b)) {
            (Ok(x), Ok(y)) if x == y => {}
            (Ok(_), Ok(_)) => failures.push(format!("{a:?} and {b:?} differ")),
            (x, y) => failures.push(format!("{:?} / {:?}", x.err(), y.err())),
        }
    }
    outcome(
        "8",
        failures,
        "verify --q 9 --all twice; cliques --q 7 --size 5 with 1 and 8 threads",
    )
}

fn main() -> ExitCode {
    let criteria: [fn() -> Outcome; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6a,
        criterion_6b,
        criterion_6c,
        criterion_7,
        criterion_8,
    ];
    let mut unexpected = Vec::new();
    for c in criteria {
        let o = c();
        let verdict = if o.passed { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {}: {}", o.id, o.detail);
        if !o.passed {
            match KNOWN_GAPS.iter().find(|(id, _)| *id == o.id) {
                Some((_, why)) if !o.detail.starts_with("library and reference disagree") => {
                    println!("     known gap: {why}");
                    if o.id == "6b" {
                        println!("     {}", excess_beyond_seven());
                    }
                }
                _ => unexpected.push(o.id),
            }
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}
