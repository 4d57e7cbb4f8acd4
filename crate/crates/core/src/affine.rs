// SPDX-License-Identifier: Apache-2.0

//! The affine plane `A(2,q)` realized on `F_{q²}`.
//!
//! A line is `{a + c·s : c ∈ F_q}` for a point `a` and a nonzero slope `s`.
//! Slopes are taken up to `F_q*` scaling; the canonical representatives are
//! `1` and `c + α` for `c ∈ F_q`. A line is keyed by its representative and
//! its least point in vertex order.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Elem, QuadElem, QuadExt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line {
    slope: QuadElem,
    base: QuadElem,
}

impl Line {
    pub fn slope(&self) -> QuadElem {
        self.slope
    }

    /// The least point on the line.
    pub fn base(&self) -> QuadElem {
        self.base
    }
}

pub struct AffinePlane<'a> {
    ctx: &'a QuadExt,
    squares: Vec<bool>,
}

impl<'a> AffinePlane<'a> {
    pub fn new(ctx: &'a QuadExt) -> Self {
        AffinePlane {
            ctx,
            squares: ctx.square_table(),
        }
    }

    pub fn ctx(&self) -> &QuadExt {
        self.ctx
    }

    pub fn is_square(&self, a: QuadElem) -> bool {
        self.squares[self.ctx.index(a)]
    }

    /// The `q + 1` canonical slope representatives: `1`, then `c + α` by rank of `c`.
    pub fn directions(&self) -> Vec<QuadElem> {
        std::iter::once(QuadElem::ONE)
            .chain(self.ctx.base().elements().map(|c| QuadElem::new(c, Elem::ONE)))
            .collect()
    }

    /// Canonical representative of the slope class of a nonzero vector.
    pub fn direction_of(&self, v: QuadElem) -> QuadElem {
        debug_assert!(!v.is_zero());
        if v.y.is_zero() {
            return QuadElem::ONE;
        }
        let f = self.ctx.base();
        let inv = f.inv(v.y).expect("nonzero");
        QuadElem::new(f.mul(v.x, inv), Elem::ONE)
    }

    pub fn line(&self, point: QuadElem, slope: QuadElem) -> Line {
        let slope = self.direction_of(slope);
        let base = self
            .ctx
            .base()
            .elements()
            .map(|c| self.ctx.add(point, self.ctx.scale(c, slope)))
            .min_by_key(|&p| self.ctx.index(p))
            .expect("nonempty field");
        Line { slope, base }
    }

    pub fn line_through(&self, a: QuadElem, b: QuadElem) -> Result<Line> {
        if a == b {
            return Err(Error::EqualPoints);
        }
        Ok(self.line(a, self.ctx.sub(b, a)))
    }

    /// Points of `l` as `base + c·slope` for `c` in rank order.
    pub fn points(&self, l: &Line) -> Vec<QuadElem> {
        self.ctx
            .base()
            .elements()
            .map(|c| self.ctx.add(l.base, self.ctx.scale(c, l.slope)))
            .collect()
    }

    pub fn contains(&self, l: &Line, p: QuadElem) -> bool {
        p == l.base || self.direction_of(self.ctx.sub(p, l.base)) == l.slope
    }

    /// A line is quadratic iff its slope is a square in `F_{q²}*`.
    pub fn is_quadratic_line(&self, l: &Line) -> bool {
        self.is_square(l.slope)
    }

    /// All `q(q + 1)` lines, ordered by (slope, least point).
    pub fn lines(&self) -> Vec<Line> {
        let mut out: Vec<Line> = self
            .directions()
            .into_iter()
            .flat_map(|s| {
                // one line per coset of the direction; collect distinct keys
                let mut ls: Vec<Line> = self.ctx.elements().map(|p| self.line(p, s)).collect();
                ls.sort_by_key(|l| self.ctx.index(l.base));
                ls.dedup();
                ls
            })
            .collect();
        out.sort_by_key(|l| (self.ctx.index(l.slope), self.ctx.index(l.base)));
        out
    }

    pub fn lines_through(&self, p: QuadElem) -> Vec<Line> {
        self.directions().into_iter().map(|s| self.line(p, s)).collect()
    }

    /// Classifies the lines through `p` by grouping every other point by the
    /// direction it is seen in, and checks that all differences along a line
    /// share the line's squareness.
    pub fn classify_point(&self, p: QuadElem) -> Result<PointLines> {
        let q = self.ctx.q() as usize;
        let dirs = self.directions();
        let mut seen = vec![0usize; dirs.len()];
        let slot = |s: QuadElem| -> usize {
            if s == QuadElem::ONE {
                0
            } else {
                1 + s.x.rank()
            }
        };
        let mut quadratic = vec![None::<bool>; dirs.len()];
        for r in self.ctx.elements().filter(|&r| r != p) {
            let diff = self.ctx.sub(r, p);
            let i = slot(self.direction_of(diff));
            seen[i] += 1;
            let sq = self.is_square(diff);
            match quadratic[i] {
                None => quadratic[i] = Some(sq),
                Some(prev) if prev != sq => {
                    return Err(Error::check(
                        "difference squareness along a line",
                        format!(
                            "point {} direction {} mixes squares and non-squares",
                            self.ctx.index(p),
                            self.ctx.index(dirs[i])
                        ),
                    ))
                }
                _ => {}
            }
        }
        if let Some(i) = seen.iter().position(|&c| c != q - 1) {
            return Err(Error::check(
                "incidence",
                format!(
                    "direction {} at point {} holds {} points",
                    i,
                    self.ctx.index(p),
                    seen[i] + 1
                ),
            ));
        }
        for (i, class) in quadratic.iter().enumerate() {
            if *class != Some(self.is_square(dirs[i])) {
                return Err(Error::check(
                    "slope squareness",
                    format!("direction {} disagrees with its points", self.ctx.index(dirs[i])),
                ));
            }
        }
        let quad = quadratic.iter().filter(|c| **c == Some(true)).count();
        Ok(PointLines {
            point: self.ctx.index(p),
            lines: dirs.len(),
            quadratic: quad,
            non_quadratic: dirs.len() - quad,
        })
    }

    /// [`AffinePlane::classify_point`] at every point, in vertex order.
    pub fn line_report(&self) -> Result<Vec<PointLines>> {
        (0..self.ctx.order())
            .into_par_iter()
            .map(|i| self.classify_point(self.ctx.element(i)))
            .collect()
    }
}

/// Line counts through one point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PointLines {
    pub point: usize,
    pub lines: usize,
    pub quadratic: usize,
    pub non_quadratic: usize,
}

/// A set of `q + 1` points, no three collinear.
#[derive(Clone, Debug)]
pub struct Oval {
    points: Vec<usize>,
    member: Vec<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Incidence {
    Exterior,
    Tangent,
    Secant,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intersection {
    pub kind: Incidence,
    pub points: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TangentClass {
    AllQuadratic,
    AllNonQuadratic,
}

/// Tangents to an oval through one point.
#[derive(Clone, Debug)]
pub struct Tangents {
    pub on_oval: bool,
    pub lines: Vec<Line>,
}

impl Tangents {
    pub fn count(&self) -> usize {
        self.lines.len()
    }
}

impl Oval {
    /// Validates the oval axioms: `q + 1` distinct points, no three collinear.
    pub fn new(plane: &AffinePlane<'_>, mut points: Vec<usize>) -> Result<Oval> {
        let ctx = plane.ctx();
        points.sort_unstable();
        points.dedup();
        if points.len() != ctx.q() as usize + 1 {
            return Err(Error::check(
                "oval size",
                format!("{} points, expected {}", points.len(), ctx.q() + 1),
            ));
        }
        for &a in &points {
            let pa = ctx.element(a);
            let mut dirs: Vec<QuadElem> = points
                .iter()
                .filter(|&&b| b != a)
                .map(|&b| plane.direction_of(ctx.sub(ctx.element(b), pa)))
                .collect();
            dirs.sort();
            if let Some(w) = dirs.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::check(
                    "no three collinear",
                    format!("three points collinear through {a} in direction {}", ctx.index(w[0])),
                ));
            }
        }
        let mut member = vec![false; ctx.order()];
        for &p in &points {
            member[p] = true;
        }
        Ok(Oval { points, member })
    }

    /// The norm-one subgroup `{γ : N(γ) = 1}`.
    pub fn norm_one(plane: &AffinePlane<'_>) -> Result<Oval> {
        let ctx = plane.ctx();
        let points = ctx
            .elements()
            .filter(|&g| ctx.norm(g) == Elem::ONE)
            .map(|g| ctx.index(g))
            .collect();
        Oval::new(plane, points)
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn contains(&self, v: usize) -> bool {
        self.member[v]
    }

    pub fn intersection(&self, plane: &AffinePlane<'_>, l: &Line) -> Intersection {
        let mut points: Vec<usize> = plane
            .points(l)
            .into_iter()
            .map(|p| plane.ctx().index(p))
            .filter(|&v| self.member[v])
            .collect();
        points.sort_unstable();
        let kind = match points.len() {
            0 => Incidence::Exterior,
            1 => Incidence::Tangent,
            2 => Incidence::Secant,
            n => unreachable!("oval meets a line in {n} points"),
        };
        Intersection { kind, points }
    }

    /// Tangent lines through `p`: exactly one when `p` is on the oval, and by
    /// Qvist's theorem zero or two otherwise.
    pub fn tangents_from(&self, plane: &AffinePlane<'_>, p: usize) -> Tangents {
        let ctx = plane.ctx();
        let pe = ctx.element(p);
        let dirs = plane.directions();
        let mut hits = vec![0usize; dirs.len()];
        for &o in self.points.iter().filter(|&&o| o != p) {
            let s = plane.direction_of(ctx.sub(ctx.element(o), pe));
            let slot = if s == QuadElem::ONE { 0 } else { 1 + s.x.rank() };
            hits[slot] += 1;
        }
        let on_oval = self.member[p];
        // on the oval the tangent is the one direction that meets no other point
        let wanted = if on_oval { 0 } else { 1 };
        let lines = dirs
            .iter()
            .zip(&hits)
            .filter(|(_, &h)| h == wanted)
            .map(|(&s, _)| plane.line(pe, s))
            .collect();
        Tangents { on_oval, lines }
    }

    /// The tangent at each oval point, in point order.
    pub fn tangent_lines(&self, plane: &AffinePlane<'_>) -> Vec<Line> {
        self.points
            .iter()
            .map(|&p| {
                let t = self.tangents_from(plane, p);
                debug_assert_eq!(t.count(), 1);
                t.lines[0]
            })
            .collect()
    }

    /// All tangents of the oval are quadratic, or all are non-quadratic.
    pub fn tangent_uniformity(&self, plane: &AffinePlane<'_>) -> Result<TangentClass> {
        let tangents = self.tangent_lines(plane);
        let quadratic = tangents.iter().filter(|l| plane.is_quadratic_line(l)).count();
        match quadratic {
            0 => Ok(TangentClass::AllNonQuadratic),
            n if n == tangents.len() => Ok(TangentClass::AllQuadratic),
            n => Err(Error::check(
                "tangent uniformity",
                format!("{n} of {} tangents are quadratic", tangents.len()),
            )),
        }
    }

    /// Counts exterior points by number of tangents; fails on any count
    /// outside `{0, 2}` with the offending point.
    pub fn qvist_census(&self, plane: &AffinePlane<'_>) -> Result<QvistCensus> {
        let counts: Vec<(usize, usize)> = (0..plane.ctx().order())
            .into_par_iter()
            .filter(|&p| !self.member[p])
            .map(|p| (p, self.tangents_from(plane, p).count()))
            .collect();
        if let Some(&(p, c)) = counts.iter().find(|(_, c)| *c != 0 && *c != 2) {
            return Err(Error::check(
                "Qvist 0-or-2 tangents",
                format!("point {p} has {c} tangents"),
            ));
        }
        let two = counts.iter().filter(|(_, c)| *c == 2).count();
        Ok(QvistCensus {
            on_oval: self.points.len(),
            exterior_with_tangents: two,
            exterior_without_tangents: counts.len() - two,
        })
    }
}

/// Vertex classes relative to an oval.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct QvistCensus {
    pub on_oval: usize,
    pub exterior_with_tangents: usize,
    pub exterior_without_tangents: usize,
}
