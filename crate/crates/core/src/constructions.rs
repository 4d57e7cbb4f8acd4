// SPDX-License-Identifier: Apache-2.0

//! The norm-one oval `Q = ⟨ω⟩`, its halves `Q₀`, `Q₁`, the cliques and
//! cocliques built from them, and the affine maps `γ ↦ β₁γ + β₂`.

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::affine::{AffinePlane, Line, Oval};
use crate::error::{Error, Result};
use crate::field::{Elem, QuadElem, QuadExt};
use crate::graph::Graph;

/// `ω = β^(q−1)` and the split of `Q = ⟨ω⟩` into even and odd powers.
#[derive(Clone, Debug)]
pub struct OvalDecomposition {
    q: u32,
    omega: QuadElem,
    powers: Vec<QuadElem>,
    q0: Vec<usize>,
    q1: Vec<usize>,
}

impl OvalDecomposition {
    pub fn build(ctx: &QuadExt) -> Result<Self> {
        let q = ctx.q();
        let omega = ctx.pow(ctx.primitive(), q as u64 - 1);
        let powers: Vec<QuadElem> = std::iter::successors(Some(QuadElem::ONE), |&w| Some(ctx.mul(w, omega)))
            .take(q as usize + 1)
            .collect();
        if ctx.mul(powers[q as usize], omega) != QuadElem::ONE {
            return Err(Error::check("ω^(q+1) = 1", "order of ω does not divide q + 1"));
        }
        if ctx.order_of(omega) != Some(q as u64 + 1) {
            return Err(Error::check("order of ω", format!("{:?}", ctx.order_of(omega))));
        }
        if !ctx.is_square(omega)? {
            return Err(Error::check("ω is a square", "ω is a non-square"));
        }
        let mut q0: Vec<usize> = powers.iter().step_by(2).map(|&w| ctx.index(w)).collect();
        let mut q1: Vec<usize> = powers.iter().skip(1).step_by(2).map(|&w| ctx.index(w)).collect();
        q0.sort_unstable();
        q1.sort_unstable();

        let mut all: Vec<usize> = q0.iter().chain(&q1).copied().collect();
        all.sort_unstable();
        let kernel: Vec<usize> = (0..ctx.order())
            .filter(|&i| ctx.norm(ctx.element(i)) == Elem::ONE)
            .collect();
        if all != kernel {
            return Err(Error::check(
                "Q = Ker(N)",
                format!("⟨ω⟩ = {all:?}, kernel = {kernel:?}"),
            ));
        }
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::check("Q₀ ∩ Q₁ = ∅", "halves overlap"));
        }
        Ok(OvalDecomposition {
            q,
            omega,
            powers,
            q0,
            q1,
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn omega(&self) -> QuadElem {
        self.omega
    }

    /// `[ω⁰, ω¹, …, ω^q]`.
    pub fn powers(&self) -> &[QuadElem] {
        &self.powers
    }

    /// Even powers, sorted by vertex index.
    pub fn q0(&self) -> &[usize] {
        &self.q0
    }

    /// Odd powers, sorted by vertex index.
    pub fn q1(&self) -> &[usize] {
        &self.q1
    }

    pub fn all(&self) -> Vec<usize> {
        sorted(self.q0.iter().chain(&self.q1).copied())
    }

    pub fn half(&self, i: usize) -> &[usize] {
        if i == 0 {
            &self.q0
        } else {
            &self.q1
        }
    }
}

fn sorted(it: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = it.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SetKind {
    Clique,
    Coclique,
}

/// A vertex set with the property and size it is claimed to have.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimedSet {
    pub claim: String,
    pub kind: SetKind,
    pub set: Vec<usize>,
    pub expected_size: usize,
}

/// `q ≡ 1 (4)`: `Q₀`, `Q₁` as maximal cocliques of size `(q+1)/2`.
/// `q ≡ 3 (4)`: `Q₀ ∪ {0}`, `Q₁ ∪ {0}` as maximal cliques of size `(q+3)/2`.
pub fn theorem1_sets(dec: &OvalDecomposition) -> Vec<ClaimedSet> {
    let q = dec.q() as usize;
    (0..2)
        .map(|i| {
            if q % 4 == 1 {
                ClaimedSet {
                    claim: format!("Q{i}"),
                    kind: SetKind::Coclique,
                    set: dec.half(i).to_vec(),
                    expected_size: (q + 1) / 2,
                }
            } else {
                ClaimedSet {
                    claim: format!("Q{i}+{{0}}"),
                    kind: SetKind::Clique,
                    set: sorted(dec.half(i).iter().copied().chain([0])),
                    expected_size: (q + 3) / 2,
                }
            }
        })
        .collect()
}

/// Certificate for one verified set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetCertificate {
    pub claim: String,
    pub kind: SetKind,
    pub set: Vec<usize>,
    pub size: usize,
    pub maximal: bool,
    pub witnesses: SetWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetWitness {
    pub pairs_checked: usize,
    pub outside_checked: usize,
    pub extensions_found: usize,
}

/// Checks the claimed property, exact size, and maximality by extension test.
pub fn verify_claimed_set(g: &Graph, claimed: &ClaimedSet) -> Result<SetCertificate> {
    let set = &claimed.set;
    let check = format!("{} {:?}", claimed.claim, claimed.kind);
    if set.len() != claimed.expected_size {
        return Err(Error::check(
            check,
            format!("size {} != {}", set.len(), claimed.expected_size),
        ));
    }
    let (holds, extensions, violation) = match claimed.kind {
        SetKind::Clique => (g.is_clique(set)?, g.clique_extensions(set), g.non_edge_in(set)),
        SetKind::Coclique => (g.is_coclique(set)?, g.coclique_extensions(set), g.edge_in(set)),
    };
    if !holds {
        let (u, v) = violation.expect("violating pair");
        return Err(Error::check(check, format!("vertex pair ({u}, {v})")));
    }
    if let Some(v) = extensions.first() {
        return Err(Error::check(check, format!("not maximal: vertex {v} extends the set")));
    }
    Ok(SetCertificate {
        claim: claimed.claim.clone(),
        kind: claimed.kind,
        set: set.clone(),
        size: set.len(),
        maximal: true,
        witnesses: SetWitness {
            pairs_checked: set.len() * (set.len() - 1) / 2,
            outside_checked: g.order() - set.len(),
            extensions_found: 0,
        },
    })
}

pub fn verify_theorem1(g: &Graph, sets: &[ClaimedSet]) -> Result<Vec<SetCertificate>> {
    sets.iter().map(|s| verify_claimed_set(g, s)).collect()
}

/// `{(x, 0)}`: the embedded base field, a clique of order `q`.
pub fn subfield_clique(ctx: &QuadExt) -> Vec<usize> {
    sorted(ctx.base().elements().map(|x| ctx.index(ctx.embed(x))))
}

/// `sQ₀ ∪ {0}` and `sQ₁ ∪ {0}` for `s ∈ F_q*`; only defined for `q ≡ 3 (4)`.
///
/// These are the images of `Qᵢ ∪ {0}` under `γ ↦ sγ`. Centering at `s`
/// instead does not work: `s ∈ sQ₀`, and `s` has no neighbour in `sQ₁`.
pub fn scaled_cliques(ctx: &QuadExt, dec: &OvalDecomposition, s: Elem) -> Result<[Vec<usize>; 2]> {
    if ctx.q() % 4 != 3 {
        return Err(Error::WrongResidueClass {
            q: ctx.q() as u64,
            expected: 3,
        });
    }
    if s.is_zero() {
        return Err(Error::ZeroMultiplier);
    }
    let scaled = |half: &[usize]| sorted(half.iter().map(|&v| ctx.index(ctx.scale(s, ctx.element(v)))).chain([0]));
    Ok([scaled(dec.q0()), scaled(dec.q1())])
}

/// The reference cliques of `P(q²)` whose affine orbits are compared against a
/// census: `Q₀ ∪ {0}`, `Q₁ ∪ {0}` when `q ≡ 3 (4)`, and the images `βQ₀`,
/// `βQ₁` of the cocliques when `q ≡ 1 (4)` (multiplication by the non-square
/// `β` maps cocliques to cliques).
pub fn reference_cliques(ctx: &QuadExt, dec: &OvalDecomposition) -> Vec<Vec<usize>> {
    if ctx.q() % 4 == 3 {
        theorem1_sets(dec).into_iter().map(|s| s.set).collect()
    } else {
        let beta = AffineMap::new(ctx.primitive(), QuadElem::ZERO).expect("β ≠ 0");
        (0..2).map(|i| beta.apply_set(ctx, dec.half(i))).collect()
    }
}

/// `γ ↦ β₁γ + β₂` with `β₁ ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AffineMap {
    mul: QuadElem,
    shift: QuadElem,
}

impl AffineMap {
    pub fn new(mul: QuadElem, shift: QuadElem) -> Result<Self> {
        if mul.is_zero() {
            return Err(Error::ZeroMultiplier);
        }
        Ok(AffineMap { mul, shift })
    }

    pub fn identity() -> Self {
        AffineMap {
            mul: QuadElem::ONE,
            shift: QuadElem::ZERO,
        }
    }

    pub fn multiplier(&self) -> QuadElem {
        self.mul
    }

    pub fn shift(&self) -> QuadElem {
        self.shift
    }

    pub fn apply(&self, ctx: &QuadExt, g: QuadElem) -> QuadElem {
        ctx.add(ctx.mul(self.mul, g), self.shift)
    }

    pub fn apply_set(&self, ctx: &QuadExt, set: &[usize]) -> Vec<usize> {
        sorted(set.iter().map(|&v| ctx.index(self.apply(ctx, ctx.element(v)))))
    }

    /// The map as a vertex permutation.
    pub fn permutation(&self, ctx: &QuadExt) -> Vec<usize> {
        (0..ctx.order())
            .map(|v| ctx.index(self.apply(ctx, ctx.element(v))))
            .collect()
    }

    /// Image of a line, or `None` if the image points are not collinear.
    pub fn apply_line(&self, plane: &AffinePlane<'_>, l: &Line) -> Option<Line> {
        let ctx = plane.ctx();
        let image: Vec<QuadElem> = plane.points(l).into_iter().map(|p| self.apply(ctx, p)).collect();
        let line = plane.line_through(image[0], image[1]).ok()?;
        image.iter().all(|&p| plane.contains(&line, p)).then_some(line)
    }
}

/// Generators of `T = {γ ↦ β₁γ + β₂ : β₁ a nonzero square}`: `ψ_{β²,0}` and `ψ_{1,1}`.
pub fn square_affine_generators(ctx: &QuadExt) -> Vec<AffineMap> {
    let b = ctx.primitive();
    vec![
        AffineMap::new(ctx.mul(b, b), QuadElem::ZERO).expect("β ≠ 0"),
        AffineMap::new(QuadElem::ONE, QuadElem::ONE).expect("1 ≠ 0"),
    ]
}

pub fn is_automorphism(g: &Graph, perm: &[usize]) -> bool {
    (0..g.order())
        .into_par_iter()
        .all(|u| g.neighbors(u).all(|v| g.has_edge(perm[u], perm[v])))
}

/// Closure of `seeds` under the generators, as sorted vertex sets, with the
/// orbit itself sorted lexicographically.
pub fn orbit(ctx: &QuadExt, seeds: &[Vec<usize>], generators: &[AffineMap]) -> Vec<Vec<usize>> {
    let perms: Vec<Vec<usize>> = generators.iter().map(|g| g.permutation(ctx)).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    for s in seeds {
        let s = sorted(s.iter().copied());
        if seen.insert(s.clone()) {
            queue.push_back(s);
        }
    }
    while let Some(set) = queue.pop_front() {
        for perm in &perms {
            let image = sorted(set.iter().map(|&v| perm[v]));
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = seen.into_iter().collect();
    out.sort();
    out
}

/// Induced structure on `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AdjStructure {
    CompleteBipartite,
    TwoCliques,
}

impl AdjStructure {
    pub fn expected(q: u32) -> Self {
        if q % 4 == 1 {
            AdjStructure::CompleteBipartite
        } else {
            AdjStructure::TwoCliques
        }
    }
}

/// Exhaustive edge check on the subgraph induced by `Q`.
pub fn adjacency_structure(g: &Graph, dec: &OvalDecomposition) -> Result<AdjStructure> {
    let within = |a: &[usize], b: &[usize]| -> (usize, usize) {
        let mut edges = 0;
        let mut pairs = 0;
        for (i, &u) in a.iter().enumerate() {
            for &v in if std::ptr::eq(a, b) { &b[i + 1..] } else { b } {
                pairs += 1;
                edges += g.has_edge(u, v) as usize;
            }
        }
        (edges, pairs)
    };
    let (e00, p00) = within(dec.q0(), dec.q0());
    let (e11, p11) = within(dec.q1(), dec.q1());
    let (e01, p01) = within(dec.q0(), dec.q1());
    if e00 == 0 && e11 == 0 && e01 == p01 {
        Ok(AdjStructure::CompleteBipartite)
    } else if e00 == p00 && e11 == p11 && e01 == 0 {
        Ok(AdjStructure::TwoCliques)
    } else {
        Err(Error::check(
            "induced structure of Q",
            format!("edges within Q0 {e00}/{p00}, within Q1 {e11}/{p11}, across {e01}/{p01}"),
        ))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeighboursOfOne {
    pub adjacent_in_q0: usize,
    pub adjacent_in_q1: usize,
}

/// `q ≡ 1 (4)`: `1` is adjacent to all of `Q₁` and none of `Q₀ ∖ {1}`;
/// `q ≡ 3 (4)`: to all of `Q₀ ∖ {1}` and none of `Q₁`.
pub fn verify_neighbours_of_one(g: &Graph, ctx: &QuadExt, dec: &OvalDecomposition) -> Result<NeighboursOfOne> {
    let one = ctx.index(QuadElem::ONE);
    let q0_adj: Vec<bool> = dec
        .q0()
        .iter()
        .filter(|&&v| v != one)
        .map(|&v| g.has_edge(one, v))
        .collect();
    let q1_adj: Vec<bool> = dec.q1().iter().map(|&v| g.has_edge(one, v)).collect();
    let report = NeighboursOfOne {
        adjacent_in_q0: q0_adj.iter().filter(|&&a| a).count(),
        adjacent_in_q1: q1_adj.iter().filter(|&&a| a).count(),
    };
    let half = (ctx.q() as usize + 1) / 2;
    let ok = if ctx.q() % 4 == 1 {
        report.adjacent_in_q0 == 0 && report.adjacent_in_q1 == half
    } else {
        report.adjacent_in_q0 == half - 1 && report.adjacent_in_q1 == 0
    };
    if ok {
        Ok(report)
    } else {
        Err(Error::check("neighbours of 1", format!("{report:?}")))
    }
}

/// Result of one item of the `T_Q` lemma.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TqItem {
    pub item: u8,
    pub statement: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Checks the seven statements about `T_Q = ⟨ψ_{ω,0}⟩`:
/// line preservation, stabilizing `Q`, transitivity on `Q` and on its
/// tangents, the action of `T_{Q₀}` and `T_{Q₁}` on the halves, and
/// preservation of the quadratic/non-quadratic line classes.
pub fn verify_lemma_tq(plane: &AffinePlane<'_>, oval: &Oval, dec: &OvalDecomposition) -> Vec<TqItem> {
    let ctx = plane.ctx();
    let maps: Vec<AffineMap> = dec
        .powers()
        .iter()
        .map(|&w| AffineMap::new(w, QuadElem::ZERO).expect("ω^i ≠ 0"))
        .collect();
    let psi = maps[1];
    let psi2 = maps[2 % maps.len()];
    let lines = plane.lines();
    let mut items = Vec::with_capacity(7);

    // (1) and (7) share the image computation
    let images: Vec<(usize, usize, Option<Line>)> = maps
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, m)| {
            lines
                .iter()
                .enumerate()
                .map(move |(j, l)| (i, j, m.apply_line(plane, l)))
        })
        .collect();
    let bad_line = images.iter().find(|(_, _, img)| img.is_none());
    items.push(TqItem {
        item: 1,
        statement: "T_Q preserves the lines",
        passed: bad_line.is_none(),
        detail: match bad_line {
            None => format!("{} maps x {} lines", maps.len(), lines.len()),
            Some((i, j, _)) => format!("ω^{i} does not map line #{j} to a line"),
        },
    });

    let q_all = dec.all();
    let img_q = psi.apply_set(ctx, &q_all);
    items.push(TqItem {
        item: 2,
        statement: "T_Q stabilizes Q",
        passed: img_q == q_all,
        detail: format!("ψ_ω(Q) = {img_q:?}"),
    });

    let one = ctx.index(QuadElem::ONE);
    let perm = psi.permutation(ctx);
    let orbit_of = |perm: &[usize], start: usize| -> Vec<usize> {
        let mut out = vec![start];
        let mut cur = perm[start];
        while cur != start && out.len() <= perm.len() {
            out.push(cur);
            cur = perm[cur];
        }
        sorted(out)
    };
    let orbit_one = orbit_of(&perm, one);
    items.push(TqItem {
        item: 3,
        statement: "T_Q is transitive on Q",
        passed: orbit_one == q_all,
        detail: format!("orbit of 1 has size {}", orbit_one.len()),
    });

    let mut tangents = oval.tangent_lines(plane);
    tangents.sort();
    let mut tangent_orbit: Vec<Line> = Vec::new();
    let start = oval.tangents_from(plane, one).lines[0];
    let mut cur = Some(start);
    while let Some(l) = cur {
        if tangent_orbit.contains(&l) || tangent_orbit.len() > tangents.len() {
            break;
        }
        tangent_orbit.push(l);
        cur = psi.apply_line(plane, &l);
    }
    tangent_orbit.sort();
    items.push(TqItem {
        item: 4,
        statement: "T_Q is transitive on the tangents to Q",
        passed: tangent_orbit == tangents,
        detail: format!(
            "orbit of the tangent at 1 has {} of {} tangents",
            tangent_orbit.len(),
            tangents.len()
        ),
    });

    let perm2 = psi2.permutation(ctx);
    let omega = ctx.index(dec.omega());
    let stab0 = psi2.apply_set(ctx, dec.q0()) == dec.q0();
    let stab1 = psi2.apply_set(ctx, dec.q1()) == dec.q1();
    let trans0 = orbit_of(&perm2, one) == dec.q0();
    let trans1 = orbit_of(&perm2, omega) == dec.q1();
    items.push(TqItem {
        item: 5,
        statement: "T_Q0 stabilizes Q0 and Q1 and is transitive on each",
        passed: stab0 && stab1 && trans0 && trans1,
        detail: format!("stabilizes: {stab0}/{stab1}, transitive: {trans0}/{trans1}"),
    });

    let bad_swap = maps
        .iter()
        .enumerate()
        .skip(1)
        .step_by(2)
        .find(|(_, m)| m.apply_set(ctx, dec.q0()) != dec.q1() || m.apply_set(ctx, dec.q1()) != dec.q0());
    items.push(TqItem {
        item: 6,
        statement: "each element of T_Q1 swaps Q0 and Q1",
        passed: bad_swap.is_none(),
        detail: match bad_swap {
            None => format!("{} odd powers checked", maps.len() / 2),
            Some((i, _)) => format!("ω^{i} does not swap the halves"),
        },
    });

    let bad_class = images.iter().find(|(_, j, img)| match img {
        Some(img) => plane.is_quadratic_line(img) != plane.is_quadratic_line(&lines[*j]),
        None => true,
    });
    items.push(TqItem {
        item: 7,
        statement: "T_Q preserves quadratic and non-quadratic lines",
        passed: bad_class.is_none(),
        detail: match bad_class {
            None => format!("{} line images checked", images.len()),
            Some((i, j, _)) => format!("ω^{i} changes the class of line #{j}"),
        },
    });
    items
}
