//! The standard basis of morphisms between string and band objects: graph
//! maps, quasi-graph maps, singleton single maps and singleton double maps.
//!
//! Objects are viewed as chains (strings) or cycles (bands) of nodes joined by
//! letters. Seen from a node, a neighbouring letter is either *up* (its path
//! starts at the node) or *down* (its path ends at the node). Overlaps are
//! maximal runs of equal letters in two objects, read in either orientation of
//! the target.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{Algebra, Path, Vertex};
use crate::complex::{chain_constraints, ChainMap, PathTable};
use crate::error::{Error, Result};
use crate::field::{kernel, Rationals};
use crate::strings::{Letter, Object};

/// Nodes and letters of an object with `m = 1`.
#[derive(Clone, Debug)]
pub struct Shape {
    pub nodes: Vec<(i64, Vertex)>,
    /// Letter `k` joins node `k` to node `k + 1` (cyclically for bands).
    pub letters: Vec<Letter>,
    pub cyclic: bool,
    /// Holonomy of a band (see `GradedBand::holonomy`).
    pub holonomy: Option<BigRational>,
}

/// A neighbouring letter seen from a node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side {
    pub path: Path,
    pub up: bool,
    /// Unrolled index of the node at the other end.
    pub outer: i64,
    /// Index of the letter.
    pub edge: usize,
}

impl Shape {
    pub fn of(obj: &Object) -> Result<Shape> {
        match obj {
            Object::String(s) => Ok(Shape {
                nodes: s.mu.iter().copied().zip(s.string.node_vertices()).collect(),
                letters: s.string.letters().to_vec(),
                cyclic: false,
                holonomy: None,
            }),
            Object::Band(b) => {
                if b.m != 1 {
                    return Err(Error::Unsupported(
                        "bands with Jordan blocks of size m > 1".into(),
                    ));
                }
                Ok(Shape {
                    nodes: b.mu.iter().copied().zip(b.band.node_vertices()).collect(),
                    letters: b.band.letters().to_vec(),
                    cyclic: true,
                    holonomy: Some(b.holonomy()),
                })
            }
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn norm(&self, i: i64) -> Option<usize> {
        let n = self.nodes.len() as i64;
        if self.cyclic {
            Some(i.rem_euclid(n) as usize)
        } else {
            (0..n).contains(&i).then_some(i as usize)
        }
    }

    pub fn degree(&self, i: i64) -> i64 {
        self.nodes[self.norm(i).expect("node in range")].0
    }

    pub fn vertex(&self, i: i64) -> Vertex {
        self.nodes[self.norm(i).expect("node in range")].1
    }

    /// The letter leaving node `i` towards `i + dir`, oriented away from `i`.
    pub fn letter_from(&self, i: i64, dir: i64) -> Option<Letter> {
        self.norm(i)?;
        self.norm(i + dir)?;
        let edge = if dir > 0 { i } else { i - 1 };
        let l = &self.letters[self.norm(edge)?];
        Some(if dir > 0 { l.clone() } else { l.reversed() })
    }

    pub fn side(&self, i: i64, dir: i64) -> Option<Side> {
        let l = self.letter_from(i, dir)?;
        let edge = self.norm(if dir > 0 { i } else { i - 1 })?;
        Some(Side {
            path: l.path,
            up: !l.inverse,
            outer: i + dir,
            edge,
        })
    }

    /// Sides in both directions.
    pub fn sides(&self, i: i64) -> Vec<Side> {
        [-1, 1].iter().filter_map(|&d| self.side(i, d)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Graph,
    QuasiGraph,
    SingletonSingle,
    SingletonDouble,
}

/// A maximal common subword: X nodes `x..=x+len` match Y nodes `y + eps·k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Overlap {
    pub x: i64,
    pub y: i64,
    pub eps: i64,
    pub len: usize,
    /// The whole cycle of two bands matches.
    pub full: bool,
}

impl Overlap {
    pub fn x_at(&self, k: i64) -> i64 {
        self.x + k
    }

    pub fn y_at(&self, k: i64) -> i64 {
        self.y + self.eps * k
    }
}

/// One element of the standard basis of `Hom(X, Y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub kind: Kind,
    pub overlap: Option<Overlap>,
    /// Node pair anchoring the map: the start of the overlap, the pair joined
    /// by `p`, or the lower pair of a double map.
    pub anchor: (usize, usize),
    pub p: Option<Path>,
    pub q: Option<Path>,
    /// 1 when the map is read as a map `X → W[1]` with `W = Y[−1]`.
    pub shift: i64,
    /// Node-level entries `(x, y, path)` of a representative chain map.
    pub support: Vec<(usize, usize, Path)>,
}

fn extend(x: &Shape, y: &Shape, xs: i64, ys: i64, eps: i64, dir: i64, cap: usize) -> usize {
    let mut k = 0;
    while k < cap {
        let (xi, yi) = (xs + dir * k as i64, ys + eps * dir * k as i64);
        match (x.letter_from(xi, dir), y.letter_from(yi, eps * dir)) {
            (Some(a), Some(b)) if a == b => k += 1,
            _ => break,
        }
    }
    k
}

/// All maximal overlaps between `x` and `y` in both orientations of `y`.
pub fn overlaps(x: &Shape, y: &Shape) -> Vec<Overlap> {
    let cap = x.len() + y.len() + 2;
    let mut out = BTreeSet::new();
    for xi in 0..x.len() as i64 {
        for yi in 0..y.len() as i64 {
            if x.vertex(xi) != y.vertex(yi) {
                continue;
            }
            for eps in [1, -1] {
                let kf = extend(x, y, xi, yi, eps, 1, cap);
                let kb = extend(x, y, xi, yi, eps, -1, cap);
                if kf == cap || kb == cap {
                    let y0 = (yi - eps * xi).rem_euclid(y.len() as i64);
                    out.insert(Overlap {
                        x: 0,
                        y: y0,
                        eps,
                        len: x.len(),
                        full: true,
                    });
                    continue;
                }
                let (mut x0, mut y0) = (xi - kb as i64, yi - eps * kb as i64);
                if x.cyclic {
                    x0 = x0.rem_euclid(x.len() as i64);
                }
                if y.cyclic {
                    y0 = y0.rem_euclid(y.len() as i64);
                }
                out.insert(Overlap {
                    x: x0,
                    y: y0,
                    eps,
                    len: kb + kf,
                    full: false,
                });
            }
        }
    }
    out.into_iter().collect()
}

fn other_alignment_is_nontrivial(x: &Shape, y: &Shape, o: &Overlap) -> bool {
    let cap = x.len() + y.len() + 2;
    extend(x, y, o.x, o.y, -o.eps, 1, cap) + extend(x, y, o.x, o.y, -o.eps, -1, cap) > 0
}

/// Endpoint conditions shared by the left and right ends of an overlap.
/// `E1`: both up with the X path a proper prefix of the Y path, or both down
/// with the Y path a proper suffix of the X path. `E2`: X side absent or up,
/// Y side absent or down.
fn end_ok(xs: &Option<Side>, ys: &Option<Side>) -> bool {
    match (xs, ys) {
        (Some(a), Some(b)) if a.up && b.up => a.path.is_prefix_of(&b.path) && a.path != b.path,
        (Some(a), Some(b)) if !a.up && !b.up => b.path.is_suffix_of(&a.path) && a.path != b.path,
        _ => xs.as_ref().is_none_or(|a| a.up) && ys.as_ref().is_none_or(|b| !b.up),
    }
}

/// The extra entry forced at an end satisfying `E1`.
fn end_extra(alg: &Algebra, xs: &Option<Side>, ys: &Option<Side>) -> Option<(i64, i64, Path)> {
    let (a, b) = (xs.as_ref()?, ys.as_ref()?);
    if a.up && b.up && a.path.is_prefix_of(&b.path) && a.path != b.path {
        return Some((
            a.outer,
            b.outer,
            b.path.sub(alg, a.path.len(), b.path.len()),
        ));
    }
    if !a.up && !b.up && b.path.is_suffix_of(&a.path) && a.path != b.path {
        return Some((
            a.outer,
            b.outer,
            a.path.sub(alg, 0, a.path.len() - b.path.len()),
        ));
    }
    None
}

fn ends(x: &Shape, y: &Shape, o: &Overlap) -> [(Option<Side>, Option<Side>); 2] {
    let l = o.len as i64;
    [
        (x.side(o.x_at(0), -1), y.side(o.y_at(0), -o.eps)),
        (x.side(o.x_at(l), 1), y.side(o.y_at(l), o.eps)),
    ]
}

fn holonomies_match(x: &Shape, y: &Shape, o: &Overlap) -> bool {
    match (&x.holonomy, &y.holonomy) {
        (Some(a), Some(b)) => {
            if o.eps == 1 {
                a == b
            } else {
                *a == b.recip()
            }
        }
        _ => false,
    }
}

fn normalize(x: &Shape, y: &Shape, support: Vec<(i64, i64, Path)>) -> Vec<(usize, usize, Path)> {
    let mut s: Vec<(usize, usize, Path)> = support
        .into_iter()
        .map(|(i, j, p)| (x.norm(i).unwrap(), y.norm(j).unwrap(), p))
        .collect();
    s.sort();
    s
}

pub fn graph_maps(alg: &Algebra, x: &Shape, y: &Shape) -> Vec<Morphism> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for o in overlaps(x, y) {
        if x.degree(o.x) != y.degree(o.y) {
            continue;
        }
        let mut support = Vec::new();
        if o.full {
            if !holonomies_match(x, y, &o) {
                continue;
            }
            for k in 0..o.len as i64 {
                support.push((o.x_at(k), o.y_at(k), Path::trivial(x.vertex(o.x_at(k)))));
            }
        } else {
            if o.len == 0 && other_alignment_is_nontrivial(x, y, &o) {
                continue;
            }
            let e = ends(x, y, &o);
            if !e.iter().all(|(a, b)| end_ok(a, b)) {
                continue;
            }
            for k in 0..=o.len as i64 {
                support.push((o.x_at(k), o.y_at(k), Path::trivial(x.vertex(o.x_at(k)))));
            }
            for (a, b) in &e {
                support.extend(end_extra(alg, a, b));
            }
        }
        let support = normalize(x, y, support);
        if seen.insert(support.clone()) {
            out.push(Morphism {
                kind: Kind::Graph,
                overlap: Some(o),
                anchor: (x.norm(o.x).unwrap(), y.norm(o.y).unwrap()),
                p: None,
                q: None,
                shift: 0,
                support,
            });
        }
    }
    out
}

/// Quasi-graph maps `X → W[1]`, read off overlaps of `X` and `W`. The
/// support refers to the nodes of `W`, which are those of `W[1]`.
///
/// On a trivial overlap the end conditions alone are not enough, because the
/// two boundary terms meet at the same node. There the map exists exactly when
/// the reverse graph map `W → X` exists at the same node pair and the two
/// curves cross rather than share an endpoint.
pub fn quasi_graph_maps(alg: &Algebra, x: &Shape, w: &Shape) -> Vec<Morphism> {
    let mut out = Vec::new();
    // A trivial overlap is a single node pair whichever alignment reads it.
    let mut trivial_pairs = BTreeSet::new();
    for o in overlaps(x, w) {
        if x.degree(o.x) != w.degree(o.y) {
            continue;
        }
        let support = if o.full {
            if !holonomies_match(x, w, &o) {
                continue;
            }
            left_terms(x, w, o.x, o.y, o.eps)
        } else if o.len == 0 {
            if other_alignment_is_nontrivial(x, w, &o)
                || !trivial_pairs.insert((x.norm(o.x), w.norm(o.y)))
            {
                continue;
            }
            let Some(eps) = trivial_graph_alignment(w, x, o.y, o.x) else {
                continue;
            };
            if shared_endpoint(alg, &x.sides(o.x), &w.sides(o.y)) {
                continue;
            }
            let all = all_terms(x, w, o.x, o.y);
            let mut candidates = vec![
                left_terms(x, w, o.x, o.y, eps),
                right_terms(x, w, o.x, o.y, eps),
                left_terms(x, w, o.x, o.y, -eps),
                right_terms(x, w, o.x, o.y, -eps),
            ];
            candidates.extend(all.iter().map(|t| vec![t.clone()]));
            match candidates.into_iter().find(|c| {
                !c.is_empty() && c.len() < all.len() && closed_under_links(alg, c, x, w, o.x, o.y)
            }) {
                Some(c) => c,
                None => continue,
            }
        } else {
            if ends(x, w, &o).iter().any(|(a, b)| end_ok(a, b)) {
                continue;
            }
            left_terms(x, w, o.x, o.y, o.eps)
        };
        let support = normalize(x, w, support);
        out.push(Morphism {
            kind: Kind::QuasiGraph,
            overlap: Some(o),
            anchor: (x.norm(o.x).unwrap(), w.norm(o.y).unwrap()),
            p: None,
            q: None,
            shift: 1,
            support,
        });
    }
    out
}

type Term = (i64, i64, Path);

/// Boundary terms of the identity homotopy at node pair `(xi, yi)` coming
/// from the X side in direction `dx` and the W side in direction `dy`: an X
/// letter coming down into `xi` and a W letter going up from `yi`.
fn terms(x: &Shape, w: &Shape, xi: i64, yi: i64, dx: i64, dy: i64) -> Vec<Term> {
    let mut t = Vec::new();
    if let Some(a) = x.side(xi, dx).filter(|a| dx != 0 && !a.up) {
        t.push((a.outer, yi, a.path));
    }
    if let Some(b) = w.side(yi, dy).filter(|b| dy != 0 && b.up) {
        t.push((xi, b.outer, b.path));
    }
    t
}

fn left_terms(x: &Shape, w: &Shape, xi: i64, yi: i64, eps: i64) -> Vec<Term> {
    terms(x, w, xi, yi, -1, -eps)
}

fn right_terms(x: &Shape, w: &Shape, xi: i64, yi: i64, eps: i64) -> Vec<Term> {
    terms(x, w, xi, yi, 1, eps)
}

fn all_terms(x: &Shape, w: &Shape, xi: i64, yi: i64) -> Vec<Term> {
    let mut t = terms(x, w, xi, yi, -1, -1);
    t.extend(terms(x, w, xi, yi, 1, 1));
    t
}

/// An X term `s` at `(x', y)` and a W term `t` at `(x, y')` both contribute
/// `s·t` to the chain condition; a chain map contains both or neither
/// whenever that composite is nonzero.
fn closed_under_links(
    alg: &Algebra,
    chosen: &[Term],
    x: &Shape,
    w: &Shape,
    xi: i64,
    yi: i64,
) -> bool {
    let xt: Vec<Term> = [-1, 1]
        .into_iter()
        .flat_map(|d| terms(x, w, xi, yi, d, 0))
        .collect();
    let wt: Vec<Term> = [-1, 1]
        .into_iter()
        .flat_map(|d| terms(x, w, xi, yi, 0, d))
        .collect();
    xt.iter().all(|a| {
        wt.iter()
            .all(|b| alg.multiply(&a.2, &b.2).is_none() || chosen.contains(a) == chosen.contains(b))
    })
}

/// Alignment in which a trivial graph map `W → X` at `(yi, xi)` exists.
fn trivial_graph_alignment(w: &Shape, x: &Shape, yi: i64, xi: i64) -> Option<i64> {
    [1, -1].into_iter().find(|&eps| {
        end_ok(&w.side(yi, -1), &x.side(xi, -eps)) && end_ok(&w.side(yi, 1), &x.side(xi, eps))
    })
}

/// Do the two curves through these nodes end at the same marked point? Each
/// side of a node lies in one of the two polygons meeting along the edge of
/// the node's vertex; a missing side means the curve ends at the marked point
/// of the polygon not used by the other side.
fn shared_endpoint(alg: &Algebra, xs: &[Side], ws: &[Side]) -> bool {
    match (xs.len(), ws.len()) {
        (0, n) | (n, 0) => n < 2,
        (1, 1) => same_polygon(alg, &xs[0], &ws[0]),
        _ => false,
    }
}

fn same_polygon(alg: &Algebra, a: &Side, b: &Side) -> bool {
    match (a.up, b.up) {
        (true, true) => a.path.first() == b.path.first(),
        (false, false) => a.path.last() == b.path.last(),
        (true, false) => !alg.is_relation(b.path.last().unwrap(), a.path.first().unwrap()),
        (false, true) => !alg.is_relation(a.path.last().unwrap(), b.path.first().unwrap()),
    }
}

pub fn singleton_single_maps(
    alg: &Algebra,
    x: &Shape,
    y: &Shape,
    paths: &PathTable,
) -> Vec<Morphism> {
    let mut out = Vec::new();
    for xi in 0..x.len() as i64 {
        for yi in 0..y.len() as i64 {
            if x.degree(xi) != y.degree(yi) {
                continue;
            }
            let (xsides, ysides) = (x.sides(xi), y.sides(yi));
            for p in paths.between(x.vertex(xi), y.vertex(yi)) {
                if p.is_trivial() {
                    continue;
                }
                let chain = xsides
                    .iter()
                    .filter(|s| !s.up)
                    .all(|s| alg.multiply(&s.path, p).is_none())
                    && ysides
                        .iter()
                        .filter(|s| s.up)
                        .all(|s| alg.multiply(p, &s.path).is_none());
                let singleton = xsides
                    .iter()
                    .filter(|s| s.up)
                    .all(|s| !s.path.is_prefix_of(p))
                    && ysides
                        .iter()
                        .filter(|s| !s.up)
                        .all(|s| !s.path.is_suffix_of(p));
                if chain && singleton {
                    out.push(Morphism {
                        kind: Kind::SingletonSingle,
                        overlap: None,
                        anchor: (xi as usize, yi as usize),
                        p: Some(p.clone()),
                        q: None,
                        shift: 0,
                        support: vec![(xi as usize, yi as usize, p.clone())],
                    });
                }
            }
        }
    }
    out
}

pub fn singleton_double_maps(alg: &Algebra, x: &Shape, y: &Shape) -> Vec<Morphism> {
    let mut out = Vec::new();
    let edges = |s: &Shape| -> Vec<(usize, i64, i64, Path)> {
        let count = if s.cyclic {
            s.len()
        } else {
            s.len().saturating_sub(1)
        };
        (0..count)
            .map(|k| {
                let l = &s.letters[k];
                let k1 = k as i64;
                if l.inverse {
                    (k, k1 + 1, k1, l.path.clone())
                } else {
                    (k, k1, k1 + 1, l.path.clone())
                }
            })
            .collect()
    };
    let others = |s: &Shape, node: i64, edge: usize| -> Vec<Side> {
        s.sides(node)
            .into_iter()
            .filter(|sd| sd.edge != edge)
            .collect()
    };
    let kills = |a: &Path, b: &Path| alg.multiply(a, b).is_none();
    for (kx, xlo, xhi, ell) in edges(x) {
        for (ky, ylo, yhi, m) in edges(y) {
            if x.degree(xlo) != y.degree(ylo) {
                continue;
            }
            for i in 1..ell.len() {
                let p = ell.sub(alg, 0, i);
                let r = ell.sub(alg, i, ell.len());
                if !r.is_prefix_of(&m) || r.len() == m.len() {
                    continue;
                }
                let q = m.sub(alg, r.len(), m.len());
                let ok = others(x, xlo, kx)
                    .iter()
                    .filter(|s| !s.up)
                    .all(|s| kills(&s.path, &p))
                    && others(y, ylo, ky)
                        .iter()
                        .filter(|s| s.up)
                        .all(|s| kills(&p, &s.path))
                    && others(x, xhi, kx)
                        .iter()
                        .filter(|s| !s.up)
                        .all(|s| kills(&s.path, &q))
                    && others(y, yhi, ky)
                        .iter()
                        .filter(|s| s.up)
                        .all(|s| kills(&q, &s.path));
                if ok {
                    let (a, b, c, d) = (
                        x.norm(xlo).unwrap(),
                        y.norm(ylo).unwrap(),
                        x.norm(xhi).unwrap(),
                        y.norm(yhi).unwrap(),
                    );
                    let mut support = vec![(a, b, p.clone()), (c, d, q.clone())];
                    support.sort();
                    out.push(Morphism {
                        kind: Kind::SingletonDouble,
                        overlap: None,
                        anchor: (a, b),
                        p: Some(p.clone()),
                        q: Some(q),
                        shift: 0,
                        support,
                    });
                }
            }
        }
    }
    out
}

/// The standard basis of `Hom(X, Y)`.
pub fn standard_basis(
    alg: &Algebra,
    paths: &PathTable,
    x: &Object,
    y: &Object,
) -> Result<Vec<Morphism>> {
    let xs = Shape::of(x)?;
    let ys = Shape::of(y)?;
    let ws = Shape::of(&y.shift(-1))?;
    let mut out = graph_maps(alg, &xs, &ys);
    out.extend(quasi_graph_maps(alg, &xs, &ws));
    out.extend(singleton_single_maps(alg, &xs, &ys, paths));
    out.extend(singleton_double_maps(alg, &xs, &ys));
    Ok(out)
}

/// A chain map with the support of `m`, coefficients solved exactly.
pub fn realize(alg: &Algebra, x: &Object, y: &Object, m: &Morphism) -> Result<ChainMap> {
    let (cx, cy) = (x.complex(), y.complex());
    let q = Rationals;
    let rows = chain_constraints(&q, alg, &cx, &cy, &m.support);
    let ker = kernel(&q, &rows, m.support.len());
    if ker.is_empty() {
        return Err(Error::NotChainMap(format!(
            "{:?} map with support {:?} admits no coefficients",
            m.kind, m.support
        )));
    }
    let sum: Vec<BigRational> = (0..m.support.len())
        .map(|i| ker.iter().fold(BigRational::zero(), |acc, v| acc + &v[i]))
        .collect();
    let pick = ker
        .iter()
        .find(|v| v.iter().all(|c| !c.is_zero()))
        .cloned()
        .or_else(|| sum.iter().all(|c| !c.is_zero()).then_some(sum))
        .unwrap_or_else(|| ker[0].clone());
    let lead = pick
        .iter()
        .find(|c| !c.is_zero())
        .cloned()
        .unwrap_or_else(BigRational::one);
    let mut f = ChainMap::default();
    for ((i, j, p), c) in m.support.iter().zip(&pick) {
        f.add(*i, *j, p.clone(), c / &lead);
    }
    Ok(f)
}

/// Serializable description of a basis element.
#[derive(Clone, Debug, Serialize)]
pub struct Descriptor {
    pub kind: Kind,
    pub from: String,
    pub to: String,
    pub anchor: Anchor,
    pub p: Option<String>,
    pub q: Option<String>,
    pub shift: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Anchor {
    pub i: usize,
    pub j: usize,
}

impl Morphism {
    pub fn descriptor(&self, alg: &Algebra, x: &Object, y: &Object) -> Descriptor {
        Descriptor {
            kind: self.kind,
            from: x.format(alg),
            to: y.format(alg),
            anchor: Anchor {
                i: self.anchor.0,
                j: self.anchor.1,
            },
            p: self.p.as_ref().map(|p| alg.format_path(p)),
            q: self.q.as_ref().map(|q| alg.format_path(q)),
            shift: self.shift,
        }
    }
}

/// Intersection type of a basis element: graph and quasi-graph maps come
/// from intersections with a nonempty common segment, singleton maps from
/// intersections with an empty one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntersectionTag {
    CommonSegment,
    EmptySegment,
}

/// Graded intersections of the curves of `x` and `y`: the standard basis
/// with the identity of an arc, or the identity and `ξ` of a closed curve,
/// removed.
pub fn graded_intersections(
    alg: &Algebra,
    paths: &PathTable,
    x: &Object,
    y: &Object,
) -> Result<Vec<(Morphism, IntersectionTag)>> {
    let basis = standard_basis(alg, paths, x, y)?;
    let identity = |m: &Morphism| match (x, m.overlap) {
        (_, Some(o)) if o.full => true,
        // A whole-string overlap of a string with itself is the identity;
        // reduced nontrivial strings are never their own inverse.
        (Object::String(s), Some(o)) => x == y && m.kind == Kind::Graph && o.len == s.string.len(),
        _ => false,
    };
    Ok(basis
        .into_iter()
        .filter(|m| !identity(m))
        .map(|m| {
            let tag = match m.kind {
                Kind::Graph | Kind::QuasiGraph => IntersectionTag::CommonSegment,
                _ => IntersectionTag::EmptySegment,
            };
            (m, tag)
        })
        .collect())
}
