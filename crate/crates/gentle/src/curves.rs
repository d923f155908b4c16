//! Graded curves on the marked surface and their dictionary with strings.
//!
//! An arc is stored as the sequence of half-edges through which it leaves a
//! polygon, one per laminate it crosses. Crossing half-edge `h` takes the arc
//! from the polygon of `h` into the polygon of `ι(h)`. Between two crossings
//! the arc runs inside one polygon from the passage at position `a` to the
//! passage at position `b`; that segment reads as the subpath of the polygon's
//! maximal path between the two positions, direct when `a < b` and inverse
//! when `a > b`. The first and last polygons are where the endpoints sit, each
//! on the unique marked point of its polygon.

use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::{Algebra, ArrowIx, Vertex};
use crate::error::{Error, Result};
use crate::ribbon::{RibbonGraph, RibbonVertexKind};
use crate::strings::{Band, GradedBand, GradedString, HString, Letter, Object};

/// A finite graded arc: exit half-edges and the grading at every crossing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GradedArc {
    pub crossings: Vec<usize>,
    pub grading: Vec<i64>,
}

/// A graded closed curve with its local system. Crossing `i + 1` follows
/// crossing `i` cyclically; the segment closing the cycle carries `λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedClosedCurve {
    pub crossings: Vec<usize>,
    pub grading: Vec<i64>,
    pub lambda: BigRational,
    pub m: usize,
}

/// A graded curve of either kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Curve {
    Arc(GradedArc),
    Closed(GradedClosedCurve),
}

/// Where each arrow sits: the ribbon vertex of its maximal path and its index there.
#[derive(Clone, Debug)]
pub struct Dictionary<'a> {
    alg: &'a Algebra,
    rg: &'a RibbonGraph,
    arrow_at: Vec<(usize, usize)>,
}

impl<'a> Dictionary<'a> {
    pub fn new(alg: &'a Algebra, rg: &'a RibbonGraph) -> Result<Self> {
        let mut arrow_at = vec![(usize::MAX, 0); alg.num_arrows()];
        for v in 0..rg.num_vertices() {
            match rg.kind(v) {
                RibbonVertexKind::Path(p) => {
                    for (i, &a) in p.arrows().iter().enumerate() {
                        arrow_at[a] = (v, i);
                    }
                }
                RibbonVertexKind::Cycle(_) => {
                    return Err(Error::Unsupported(
                        "curves on surfaces with relation-free cycles".into(),
                    ))
                }
            }
        }
        Ok(Dictionary { alg, rg, arrow_at })
    }

    pub fn algebra(&self) -> &'a Algebra {
        self.alg
    }

    pub fn ribbon(&self) -> &'a RibbonGraph {
        self.rg
    }

    /// Half-edges of the two nodes of a letter, in the letter's polygon.
    fn letter_ends(&self, l: &Letter) -> (usize, usize) {
        let (v, i) = self.arrow_at[l.path.first().expect("letters are nonempty")];
        let fan = self.rg.fan(v);
        let (s, t) = (fan[i], fan[i + l.path.len()]);
        if l.inverse {
            (t, s)
        } else {
            (s, t)
        }
    }

    /// The letter read between leaving through `prev` and leaving through `next`.
    pub fn segment(&self, prev: usize, next: usize) -> Result<Letter> {
        let entry = self.rg.iota(prev);
        let v = self.rg.vertex_of(entry);
        if self.rg.vertex_of(next) != v {
            return Err(Error::InvalidWord(format!(
                "crossings {prev} and {next} are not in a common polygon"
            )));
        }
        let (a, b) = (self.rg.position(entry), self.rg.position(next));
        let RibbonVertexKind::Path(omega) = self.rg.kind(v) else {
            return Err(Error::Unsupported("segment in a cyclic polygon".into()));
        };
        if a == b {
            return Err(Error::InvalidWord(
                "arc leaves a polygon through the edge it entered by".into(),
            ));
        }
        Ok(Letter {
            path: omega.sub(self.alg, a.min(b), a.max(b)),
            inverse: a > b,
        })
    }

    fn check_grading(
        &self,
        crossings: &[usize],
        grading: &[i64],
        cyclic: bool,
    ) -> Result<Vec<Letter>> {
        if crossings.is_empty() || crossings.len() != grading.len() {
            return Err(Error::InvalidWord(
                "a curve needs one grading value per crossing".into(),
            ));
        }
        let n = crossings.len();
        let segments = if cyclic { n } else { n - 1 };
        let mut letters = Vec::with_capacity(segments);
        for j in 0..segments {
            let l = self.segment(crossings[j], crossings[(j + 1) % n])?;
            let step = if l.inverse { -1 } else { 1 };
            if grading[(j + 1) % n] - grading[j] != step {
                return Err(Error::InvalidWord(format!(
                    "grading jumps by the wrong amount after crossing {j}"
                )));
            }
            letters.push(l);
        }
        Ok(letters)
    }

    pub fn arc_from_string(&self, s: &GradedString) -> GradedArc {
        let letters = s.string.letters();
        let crossings = if letters.is_empty() {
            vec![self.rg.half_edges_of(s.string.start()).0]
        } else {
            let mut c = vec![self.rg.iota(self.letter_ends(&letters[0]).0)];
            c.extend(letters.iter().map(|l| self.letter_ends(l).1));
            c
        };
        GradedArc {
            crossings,
            grading: s.mu.clone(),
        }
    }

    pub fn string_from_arc(&self, arc: &GradedArc) -> Result<GradedString> {
        let letters = self.check_grading(&arc.crossings, &arc.grading, false)?;
        let start = self.rg.label(arc.crossings[0]);
        Ok(GradedString {
            string: HString::from_letters(self.alg, start, &letters)?,
            mu: arc.grading.clone(),
        })
    }

    pub fn curve_from_band(&self, b: &GradedBand) -> GradedClosedCurve {
        let letters = b.band.letters();
        let n = letters.len();
        let crossings = (0..n)
            .map(|j| self.letter_ends(&letters[(j + n - 1) % n]).1)
            .collect();
        GradedClosedCurve {
            crossings,
            grading: b.mu.clone(),
            lambda: b.lambda.clone(),
            m: b.m,
        }
    }

    pub fn band_from_curve(&self, c: &GradedClosedCurve) -> Result<GradedBand> {
        let letters = self.check_grading(&c.crossings, &c.grading, true)?;
        let start = self.rg.label(c.crossings[0]);
        let steps: Vec<_> = letters.iter().flat_map(|l| l.steps()).collect();
        let band = Band::from_steps(self.alg, start, &steps)?;
        if band.letters() != letters.as_slice() {
            return Err(Error::InvalidWord(
                "closed curve does not start at a crossing".into(),
            ));
        }
        GradedBand::grade(band, c.grading[0], c.lambda.clone(), c.m)
    }

    pub fn curve_of(&self, x: &Object) -> Curve {
        match x {
            Object::String(s) => Curve::Arc(self.arc_from_string(s)),
            Object::Band(b) => Curve::Closed(self.curve_from_band(b)),
        }
    }

    pub fn object_of(&self, c: &Curve) -> Result<Object> {
        match c {
            Curve::Arc(a) => self.string_from_arc(a).map(Object::String),
            Curve::Closed(c) => self.band_from_curve(c).map(Object::Band),
        }
    }

    /// The quiver vertices whose laminates the arc crosses, in order.
    pub fn laminates(&self, crossings: &[usize]) -> Vec<Vertex> {
        crossings.iter().map(|&h| self.rg.label(h)).collect()
    }

    /// Ribbon vertices (elements of the augmented set of maximal paths) whose
    /// polygons hold the start and end of the arc.
    pub fn endpoints(&self, arc: &GradedArc) -> (usize, usize) {
        let last = *arc
            .crossings
            .last()
            .expect("arcs cross at least one laminate");
        (
            self.rg.vertex_of(arc.crossings[0]),
            self.rg.vertex_of(self.rg.iota(last)),
        )
    }

    pub fn arc_from_infinite(&self, s: &InfiniteString) -> Result<InfiniteArc> {
        s.check(self.alg)?;
        let core = self.arc_from_string(&s.core);
        let tail = |t: &Option<Tail>| -> Option<ArcTail> {
            t.as_ref().map(|t| {
                let conv = |arrows: &[ArrowIx]| -> Vec<usize> {
                    arrows
                        .iter()
                        .map(|&a| {
                            let l = Letter {
                                path: self.alg.path_from_arrows(&[a]).unwrap(),
                                inverse: false,
                            };
                            self.letter_ends(&l).0
                        })
                        .collect()
                };
                ArcTail {
                    pre: conv(&t.pre),
                    period: conv(&t.period),
                }
            })
        };
        Ok(InfiniteArc {
            left: tail(&s.left),
            core,
            right: tail(&s.right),
        })
    }

    pub fn infinite_from_arc(&self, arc: &InfiniteArc) -> Result<InfiniteString> {
        let core = self.string_from_arc(&arc.core)?;
        let tail = |t: &Option<ArcTail>| -> Result<Option<Tail>> {
            let Some(t) = t else { return Ok(None) };
            let conv = |hs: &[usize]| -> Result<Vec<ArrowIx>> {
                hs.iter()
                    .map(|&h| {
                        let omega = match self.rg.kind(self.rg.vertex_of(h)) {
                            RibbonVertexKind::Path(p) => p,
                            RibbonVertexKind::Cycle(_) => unreachable!("rejected in new"),
                        };
                        let i = self.rg.position(h);
                        omega.arrows().get(i).copied().ok_or_else(|| {
                            Error::InvalidWord("tail crossing is not followed by an arrow".into())
                        })
                    })
                    .collect()
            };
            Ok(Some(Tail {
                pre: conv(&t.pre)?,
                period: conv(&t.period)?,
            }))
        };
        let s = InfiniteString {
            left: tail(&arc.left)?,
            core,
            right: tail(&arc.right)?,
        };
        s.check(self.alg)?;
        Ok(s)
    }
}

/// An eventually periodic antipath attached to one end of a string, listed
/// outwards from the core: arrow `r_1` ends at the core's end vertex, arrow
/// `r_{k+1}` ends at the start of `r_k`, and `r_{k+1} r_k` is a relation. The
/// period repeats forever after the pre-period.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tail {
    pub pre: Vec<ArrowIx>,
    pub period: Vec<ArrowIx>,
}

impl Tail {
    fn arrows(&self, count: usize) -> impl Iterator<Item = ArrowIx> + '_ {
        self.pre
            .iter()
            .copied()
            .chain(self.period.iter().copied().cycle())
            .take(count)
    }

    /// Rotates the period so that the pre-period is as short as possible.
    pub fn normalized(&self) -> Tail {
        let mut t = self.clone();
        while let (Some(&p), Some(&q)) = (t.pre.last(), t.period.last()) {
            if p != q {
                break;
            }
            t.pre.pop();
            t.period.rotate_right(1);
        }
        let n = t.period.len();
        if let Some(k) =
            (1..n).find(|&k| n.is_multiple_of(k) && (0..n).all(|i| t.period[i] == t.period[i % k]))
        {
            t.period.truncate(k);
        }
        t
    }
}

/// A homotopy string that may continue forever on either side: to the left by
/// a direct antipath and to the right by an inverse antipath.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InfiniteString {
    pub left: Option<Tail>,
    pub core: GradedString,
    pub right: Option<Tail>,
}

impl InfiniteString {
    pub fn check(&self, alg: &Algebra) -> Result<()> {
        let core = &self.core.string;
        let ends = [
            (core.start(), &self.left, true),
            (core.inverse().start(), &self.right, false),
        ];
        for (end, tail, left) in ends {
            let Some(t) = tail else { continue };
            if t.period.is_empty() {
                return Err(Error::InvalidWord(
                    "an infinite tail needs a nonempty period".into(),
                ));
            }
            let span = t.pre.len() + 2 * t.period.len();
            let mut at = end;
            let mut prev: Option<ArrowIx> = None;
            for a in t.arrows(span) {
                if alg.target(a) != at || prev.is_some_and(|p| !alg.is_relation(a, p)) {
                    return Err(Error::InvalidWord(
                        "tail is not an antipath ending at the core".into(),
                    ));
                }
                prev = Some(a);
                at = alg.source(a);
            }
            // The first tail letter must not merge with, or cancel, the core's outer letter.
            let outer = if left {
                core.letters().first().cloned()
            } else {
                core.inverse().letters().first().cloned()
            };
            let r1 = t.arrows(1).next().unwrap();
            if let Some(l) = outer {
                let blocked = if l.inverse {
                    l.path.last() == Some(r1)
                } else {
                    !alg.is_relation(r1, l.path.first().unwrap())
                };
                if blocked {
                    return Err(Error::InvalidWord(
                        "tail does not attach to the core as a reduced string".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Equality of the represented infinite strings, comparing normalized tails.
    pub fn same(&self, other: &InfiniteString) -> bool {
        let n = |t: &Option<Tail>| t.as_ref().map(Tail::normalized);
        self.core == other.core
            && n(&self.left) == n(&other.left)
            && n(&self.right) == n(&other.right)
    }

    /// The core string extended by `k` tail letters on each infinite side.
    pub fn truncate(&self, alg: &Algebra, k: usize) -> Result<GradedString> {
        let mut letters: Vec<Letter> = Vec::new();
        let mut start = self.core.string.start();
        let mut base = self.core.base();
        if let Some(t) = &self.left {
            let arrows: Vec<ArrowIx> = t.arrows(k).collect();
            for &a in arrows.iter().rev() {
                letters.push(Letter {
                    path: alg.path_from_arrows(&[a]).unwrap(),
                    inverse: false,
                });
            }
            start = arrows.last().map(|&a| alg.source(a)).unwrap_or(start);
            base -= arrows.len() as i64;
        }
        letters.extend(self.core.string.letters().iter().cloned());
        if let Some(t) = &self.right {
            for a in t.arrows(k) {
                letters.push(Letter {
                    path: alg.path_from_arrows(&[a]).unwrap(),
                    inverse: true,
                });
            }
        }
        Ok(GradedString::grade(
            HString::from_letters(alg, start, &letters)?,
            base,
        ))
    }
}

/// Tail of an infinite arc, wrapping around an unmarked boundary component:
/// for each tail letter, the passage of its outer node in the letter's polygon.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArcTail {
    pub pre: Vec<usize>,
    pub period: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InfiniteArc {
    pub left: Option<ArcTail>,
    pub core: GradedArc,
    pub right: Option<ArcTail>,
}
