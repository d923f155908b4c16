//! Rotation of arc endpoints, the inverse Auslander-Reiten translate and
//! Auslander-Reiten triangles.
//!
//! The boundary piece of the polygon of a maximal path `ω` runs from the end
//! of the laminate at the last position of `ω`, past the marked point, to the
//! end of the laminate at position 0. Sliding an endpoint clockwise to the next
//! marked point passes the end of the laminate at position 0 and so sweeps
//! across every laminate ending there, in fan order; their vertices form a
//! forbidden thread. The rotated arc is the old crossing sequence followed by
//! that sweep, with backtracking pairs cancelled.
//!
//! Read on strings, the cancellation reproduces the familiar case split. When
//! the end vertex sits inside its second maximal path, the string grows by the
//! inverse of the initial part of that path and then by a direct antipath.
//! When it sits at the start, the sweep eats into the last letter: a direct
//! letter grows by one arrow, an inverse letter shrinks by one, and a letter
//! that shrinks to nothing is removed before the sweep goes on.

use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Algebra, Path};
use crate::complex::{ChainMap, HomSpace, PathTable};
use crate::cones::mapping_cone;
use crate::curves::{Dictionary, GradedArc};
use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::morphisms::{realize, standard_basis, Descriptor, Kind, Morphism};
use crate::ribbon::{RibbonGraph, RibbonVertexKind};
use crate::strings::{GradedString, Object};

/// Exit half-edges of the laminates swept when the marked point of polygon
/// `v` slides clockwise past the end of its first laminate.
pub fn sweep(rg: &RibbonGraph, v: usize) -> Vec<usize> {
    let mut h = rg.fan(v)[0];
    let mut out = Vec::new();
    loop {
        out.push(h);
        let q = rg.iota(h);
        let fan = rg.fan(rg.vertex_of(q));
        let p = rg.position(q);
        if p + 1 == fan.len() {
            return out;
        }
        h = fan[p + 1];
    }
}

/// The arc traversed backwards.
pub fn reverse(rg: &RibbonGraph, arc: &GradedArc) -> GradedArc {
    GradedArc {
        crossings: arc.crossings.iter().rev().map(|&h| rg.iota(h)).collect(),
        grading: arc.grading.iter().rev().copied().collect(),
    }
}

/// An arc under rotation. When every crossing cancels, the arc is a
/// contractible path at one marked point; `anchor` then remembers the passage
/// and grading of the last crossing that cancelled, which fixes the grading
/// of any crossing added later.
#[derive(Clone, Debug)]
struct Walk {
    crossings: Vec<usize>,
    grading: Vec<i64>,
    anchor: Option<(usize, i64)>,
}

impl Walk {
    fn of(arc: &GradedArc) -> Walk {
        Walk {
            crossings: arc.crossings.clone(),
            grading: arc.grading.clone(),
            anchor: None,
        }
    }

    fn reversed(&self, rg: &RibbonGraph) -> Walk {
        Walk {
            crossings: self.crossings.iter().rev().map(|&h| rg.iota(h)).collect(),
            grading: self.grading.iter().rev().copied().collect(),
            anchor: self.anchor,
        }
    }

    fn end_polygon(&self, rg: &RibbonGraph) -> usize {
        match (self.crossings.last(), self.anchor) {
            (Some(&h), _) => rg.vertex_of(rg.iota(h)),
            (None, Some((h, _))) => rg.vertex_of(h),
            (None, None) => unreachable!("an emptied walk always has an anchor"),
        }
    }

    fn rotate_end(&mut self, rg: &RibbonGraph) {
        for f in sweep(rg, self.end_polygon(rg)) {
            match self.crossings.last() {
                Some(&last) if rg.iota(last) == f => {
                    self.crossings.pop();
                    let g = self.grading.pop().unwrap();
                    if self.crossings.is_empty() {
                        self.anchor = Some((last, g));
                    }
                }
                Some(&last) => {
                    let up = rg.position(f) > rg.position(rg.iota(last));
                    let g = *self.grading.last().unwrap() + if up { 1 } else { -1 };
                    self.crossings.push(f);
                    self.grading.push(g);
                }
                None => {
                    // Both passages leave the same polygon; passing its
                    // marked point on the way costs one degree.
                    let (first, g) = self.anchor.expect("an emptied walk always has an anchor");
                    let wraps = rg.position(f) <= rg.position(first);
                    self.crossings.push(f);
                    self.grading.push(if wraps { g - 1 } else { g });
                }
            }
        }
    }

    fn arc(self) -> Option<GradedArc> {
        (!self.crossings.is_empty()).then_some(GradedArc {
            crossings: self.crossings,
            grading: self.grading,
        })
    }
}

/// Slides the end of `arc` clockwise to the next marked point. `None` means
/// the rotated arc is contractible, which is the zero object.
pub fn rotate_end_arc(rg: &RibbonGraph, arc: &GradedArc) -> Option<GradedArc> {
    let mut w = Walk::of(arc);
    w.rotate_end(rg);
    w.arc()
}

/// Slides the start of `arc` clockwise to the next marked point.
pub fn rotate_start_arc(rg: &RibbonGraph, arc: &GradedArc) -> Option<GradedArc> {
    let mut w = Walk::of(arc).reversed(rg);
    w.rotate_end(rg);
    w.reversed(rg).arc()
}

/// Slides both endpoints; an intermediate contractible arc is carried through.
pub fn rotate_both_arc(rg: &RibbonGraph, arc: &GradedArc) -> Option<GradedArc> {
    let mut w = Walk::of(arc);
    w.rotate_end(rg);
    let mut w = w.reversed(rg);
    w.rotate_end(rg);
    w.reversed(rg).arc()
}

/// `σₑ`: the string of the arc with its end rotated; `None` is the zero object.
pub fn rotate_end(dict: &Dictionary, x: &GradedString) -> Result<Option<GradedString>> {
    rotate_end_arc(dict.ribbon(), &dict.arc_from_string(x))
        .map(|a| dict.string_from_arc(&a))
        .transpose()
}

/// `sσ`: the string of the arc with its start rotated; `None` is the zero object.
pub fn rotate_start(dict: &Dictionary, x: &GradedString) -> Result<Option<GradedString>> {
    rotate_start_arc(dict.ribbon(), &dict.arc_from_string(x))
        .map(|a| dict.string_from_arc(&a))
        .transpose()
}

/// `τ⁻¹`: bands are fixed; a string has both endpoints rotated.
pub fn inverse_ar_translate(dict: &Dictionary, x: &Object) -> Result<Object> {
    match x {
        Object::Band(_) => Ok(x.clone()),
        Object::String(s) => {
            let arc =
                rotate_both_arc(dict.ribbon(), &dict.arc_from_string(s)).ok_or_else(|| {
                    Error::Precondition("rotating both endpoints gave a contractible arc".into())
                })?;
            Ok(Object::String(dict.string_from_arc(&arc)?))
        }
    }
}

/// An Auslander-Reiten triangle `X → E → Z → X[1]` with `E = sX ⊕ Xₑ` (zero
/// summands dropped) and `Z = τ⁻¹X`. `f[i]: X → E[i]`, `g[i]: E[i] → Z` and
/// `h: Z → X[1]` are standard basis elements; the triangle's second map is
/// `Σ signs[i]·g[i]`.
#[derive(Clone, Debug)]
pub struct ArTriangle {
    pub x: Object,
    pub e: Vec<Object>,
    pub z: Object,
    pub f: Vec<Morphism>,
    pub g: Vec<Morphism>,
    pub h: Morphism,
    pub signs: Vec<i64>,
}

/// Outcome of the checks run on a triangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleChecks {
    pub composite_fg_null: bool,
    pub composite_gh_null: bool,
    pub composite_hf_null: bool,
    pub euler_additive: bool,
}

impl TriangleChecks {
    pub fn all(&self) -> bool {
        self.composite_fg_null
            && self.composite_gh_null
            && self.composite_hf_null
            && self.euler_additive
    }
}

/// How an arc and its rotation meet at their shared marked point.
enum Contact {
    /// The first `k ≥ 1` crossings agree.
    Common(usize),
    /// No crossing agrees; the arcs leave the marked point through
    /// neighbouring passages joined by this arrow.
    Arrow(Path),
}

fn contact(alg: &Algebra, rg: &RibbonGraph, a: &GradedArc, b: &GradedArc) -> Contact {
    let k = a
        .crossings
        .iter()
        .zip(&b.crossings)
        .take_while(|(x, y)| x == y)
        .count();
    if k > 0 {
        return Contact::Common(k);
    }
    let h = a.crossings[0];
    let RibbonVertexKind::Path(omega) = rg.kind(rg.vertex_of(h)) else {
        unreachable!("dictionaries reject cyclic polygons")
    };
    let p = rg.position(h);
    Contact::Arrow(omega.sub(alg, p, p + 1))
}

/// The basis element of `Hom(a, b)` at the marked point where both arcs
/// start, or end when `at_end` holds.
fn boundary_map(
    dict: &Dictionary,
    paths: &PathTable,
    (a, ao): (&GradedArc, &Object),
    (b, bo): (&GradedArc, &Object),
    at_end: bool,
) -> Result<Morphism> {
    let (alg, rg) = (dict.algebra(), dict.ribbon());
    let c = if at_end {
        contact(alg, rg, &reverse(rg, a), &reverse(rg, b))
    } else {
        contact(alg, rg, a, b)
    };
    let (na, nb) = (a.crossings.len(), b.crossings.len());
    // Node at distance `i` from the shared endpoint.
    let node = |n: usize, i: usize| if at_end { n - 1 - i } else { i };
    let found = standard_basis(alg, paths, ao, bo)?
        .into_iter()
        .find(|m| match (&c, m.kind) {
            (Contact::Common(k), Kind::Graph) => m.overlap.is_some_and(|o| {
                let len = *k as i64 - 1;
                let ends = [
                    (node(na, 0), node(nb, 0)),
                    (node(na, k - 1), node(nb, k - 1)),
                ];
                let covered = |(i, j): (usize, usize)| {
                    [(o.x_at(0), o.y_at(0)), (o.x_at(len), o.y_at(len))]
                        .contains(&(i as i64, j as i64))
                };
                o.len as i64 == len && ends.into_iter().all(covered)
            }),
            (Contact::Arrow(p), Kind::SingletonSingle) => {
                m.anchor == (node(na, 0), node(nb, 0)) && m.p.as_ref() == Some(p)
            }
            _ => false,
        });
    found.ok_or_else(|| {
        Error::Precondition(format!(
            "no boundary morphism {} → {}",
            ao.format(alg),
            bo.format(alg)
        ))
    })
}

/// Builds the Auslander-Reiten triangle starting in the string object `x`.
pub fn ar_triangle(dict: &Dictionary, paths: &PathTable, x: &Object) -> Result<ArTriangle> {
    let (alg, rg) = (dict.algebra(), dict.ribbon());
    let Object::String(xs) = x else {
        return Err(Error::Precondition(
            "Auslander-Reiten triangles are built for string objects; bands are fixed by τ⁻¹"
                .into(),
        ));
    };
    let xa = dict.arc_from_string(xs);
    let za = rotate_both_arc(rg, &xa).ok_or_else(|| {
        Error::Precondition("rotating both endpoints gave a contractible arc".into())
    })?;
    let obj = |a: &GradedArc| dict.string_from_arc(a).map(Object::String);
    let z = obj(&za)?;
    let (mut e, mut f, mut g) = (Vec::new(), Vec::new(), Vec::new());
    // sX shares the end of X and the start of Z; Xₑ shares the start of X and the end of Z.
    for (arc, at_end) in [
        (rotate_start_arc(rg, &xa), true),
        (rotate_end_arc(rg, &xa), false),
    ] {
        let Some(arc) = arc else { continue };
        let o = obj(&arc)?;
        f.push(boundary_map(dict, paths, (&xa, x), (&arc, &o), at_end)?);
        g.push(boundary_map(dict, paths, (&arc, &o), (&za, &z), !at_end)?);
        e.push(o);
    }
    // The connecting map is the basis element whose cone is E[1].
    let x1 = x.shift(1);
    let mut expected: Vec<Object> = e.iter().map(|o| o.shift(1).canonical()).collect();
    expected.sort();
    let mut h = None;
    for m in standard_basis(alg, paths, &z, &x1)? {
        let mut got: Vec<Object> = mapping_cone(alg, &z, &x1, &m)?
            .summands
            .iter()
            .map(Object::canonical)
            .collect();
        got.sort();
        if got == expected {
            h = Some(m);
            break;
        }
    }
    let h = h.ok_or_else(|| {
        Error::Precondition("no connecting morphism with the expected cone".into())
    })?;
    let mut t = ArTriangle {
        x: x.clone(),
        e,
        z,
        f,
        g,
        h,
        signs: Vec::new(),
    };
    t.signs = t.choose_signs(alg, paths)?;
    Ok(t)
}

impl ArTriangle {
    fn summand_maps(&self, alg: &Algebra) -> Result<Vec<(ChainMap, ChainMap)>> {
        self.e
            .iter()
            .zip(self.f.iter().zip(&self.g))
            .map(|(o, (f, g))| Ok((realize(alg, &self.x, o, f)?, realize(alg, o, &self.z, g)?)))
            .collect()
    }

    /// Signs making `Σ ± f[i]·g[i]` null-homotopic; `(1, −1)` when none does.
    fn choose_signs(&self, alg: &Algebra, paths: &PathTable) -> Result<Vec<i64>> {
        let maps = self.summand_maps(alg)?;
        let hom = HomSpace::new(&Rationals, alg, paths, &self.x.complex(), &self.z.complex());
        let candidates: Vec<Vec<i64>> = if maps.len() == 2 {
            vec![vec![1, -1], vec![1, 1]]
        } else {
            vec![vec![1; maps.len()]]
        };
        for signs in &candidates {
            if composite_null(alg, &hom, &maps, signs)? {
                return Ok(signs.clone());
            }
        }
        Ok(candidates[0].clone())
    }

    /// Runs the exact checks: consecutive composites are null-homotopic and
    /// the Grothendieck class of the middle term is the sum of the outer ones.
    pub fn check(&self, alg: &Algebra, paths: &PathTable) -> Result<TriangleChecks> {
        let q = Rationals;
        let maps = self.summand_maps(alg)?;
        let x1 = self.x.shift(1);
        let (cx, cz, cx1) = (self.x.complex(), self.z.complex(), x1.complex());
        let fg = composite_null(
            alg,
            &HomSpace::new(&q, alg, paths, &cx, &cz),
            &maps,
            &self.signs,
        )?;
        let h = realize(alg, &self.z, &x1, &self.h)?;
        let (mut gh, mut hf) = (true, true);
        for (o, (f, g)) in self.e.iter().zip(&maps) {
            let to_x1 = HomSpace::new(&q, alg, paths, &o.complex(), &cx1);
            gh &= to_x1.is_null_homotopic(&to_x1.vector(&g.then(alg, &h))?);
            // A shift keeps the entries of a chain map, so `f` also maps X[1] → E[i][1].
            let from_z = HomSpace::new(&q, alg, paths, &cz, &o.shift(1).complex());
            hf &= from_z.is_null_homotopic(&from_z.vector(&h.then(alg, f))?);
        }
        let n = alg.num_vertices();
        let mut middle = vec![0; n];
        for o in &self.e {
            for (s, c) in middle.iter_mut().zip(o.complex().euler_class(n)) {
                *s += c;
            }
        }
        let (ex, ez) = (cx.euler_class(n), cz.euler_class(n));
        let euler_additive = (0..n).all(|v| middle[v] == ex[v] + ez[v]);
        Ok(TriangleChecks {
            composite_fg_null: fg,
            composite_gh_null: gh,
            composite_hf_null: hf,
            euler_additive,
        })
    }

    pub fn to_json(&self, alg: &Algebra) -> Value {
        let d = |m: &Morphism, a: &Object, b: &Object| -> Descriptor { m.descriptor(alg, a, b) };
        let f: Vec<Descriptor> = self
            .f
            .iter()
            .zip(&self.e)
            .map(|(m, o)| d(m, &self.x, o))
            .collect();
        let g: Vec<Descriptor> = self
            .g
            .iter()
            .zip(&self.e)
            .map(|(m, o)| d(m, o, &self.z))
            .collect();
        json!({
            "X": self.x.format(alg),
            "E": self.e.iter().map(|o| o.format(alg)).collect::<Vec<_>>(),
            "Z": self.z.format(alg),
            "maps": { "f": f, "g": g, "signs": self.signs, "h": d(&self.h, &self.z, &self.x.shift(1)) },
        })
    }
}

fn composite_null(
    alg: &Algebra,
    hom: &HomSpace<Rationals>,
    maps: &[(ChainMap, ChainMap)],
    signs: &[i64],
) -> Result<bool> {
    let mut total = ChainMap::default();
    for ((f, g), &s) in maps.iter().zip(signs) {
        total = total.plus(&f.then(alg, g).scaled(&BigRational::from_integer(s.into())));
    }
    Ok(hom.is_null_homotopic(&hom.vector(&total)?))
}
