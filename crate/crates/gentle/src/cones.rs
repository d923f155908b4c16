//! Mapping cones of standard basis morphisms, read off as strings and bands.
//!
//! The two objects are glued along the entries of the morphism into one
//! graph whose nodes are indecomposable projectives and whose edges are paths.
//! The graph is then straightened by two kinds of local moves:
//!
//! * an edge labelled by a trivial path is cancelled together with its two
//!   endpoints, and every path that ran through it is reconnected;
//! * when two edges leave a node with one path a prefix of the other (or
//!   arrive at a node with one a suffix of the other), the longer one is slid
//!   off along the difference.
//!
//! When no move applies every node has at most one edge on each side and the
//! components are the words of the summands: chains give strings, cycles give
//! bands whose parameter is the product of the edge scalars around the cycle.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::algebra::{Algebra, Path, Vertex};
use crate::complex::{comb_add_scaled, comb_mul, comb_of, cone_complex, Comb, Complex};
use crate::curves::{Curve, Dictionary};
use crate::error::{Error, Result};
use crate::morphisms::{realize, Kind, Morphism};
use crate::strings::{Band, GradedBand, GradedString, HString, Object, Step};

/// The indecomposable summands of a mapping cone; empty for the zero object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeDecomposition {
    pub summands: Vec<Object>,
}

#[derive(Serialize)]
struct ConeJson {
    summands: Vec<String>,
}

impl ConeDecomposition {
    pub fn complex(&self) -> Complex {
        Complex::direct_sum(
            &self
                .summands
                .iter()
                .map(Object::complex)
                .collect::<Vec<_>>(),
        )
    }

    pub fn to_json(&self, alg: &Algebra) -> serde_json::Value {
        let summands = self.summands.iter().map(|o| o.format(alg)).collect();
        serde_json::to_value(ConeJson { summands }).expect("plain data serializes")
    }
}

/// The cone of the basis element `m` of `Hom(x, y)`.
pub fn mapping_cone(
    alg: &Algebra,
    x: &Object,
    y: &Object,
    m: &Morphism,
) -> Result<ConeDecomposition> {
    // A self-extension of a band is the band with a Jordan block of size two.
    if m.kind == Kind::QuasiGraph && m.overlap.is_some_and(|o| o.full) {
        if let Object::Band(b) = x {
            let doubled = GradedBand::grade(b.band.clone(), b.base(), b.lambda.clone(), 2)?;
            return Ok(ConeDecomposition {
                summands: vec![Object::Band(doubled).shift(1).canonical()],
            });
        }
    }
    let f = realize(alg, x, y, m)?;
    let cone = cone_complex(&x.complex(), &y.complex(), &f);
    let summands = straighten(alg, &cone)?;
    if summands.len() > 2 {
        return Err(Error::Unsupported(format!(
            "cone splits into {} summands",
            summands.len()
        )));
    }
    Ok(ConeDecomposition { summands })
}

/// Resolves the crossing of two different graded curves at the intersection
/// given by the basis element `m`: the curves of the cone summands.
pub fn resolve_crossing(
    dict: &Dictionary,
    a: &Curve,
    b: &Curve,
    m: &Morphism,
) -> Result<Vec<Curve>> {
    let (x, y) = (dict.object_of(a)?, dict.object_of(b)?);
    let ungraded = |o: &Object| o.shift(o.canonical().base()).canonical();
    if ungraded(&x) == ungraded(&y) {
        return Err(Error::Precondition(
            "a curve does not cross itself here; pass two different curves".into(),
        ));
    }
    let cone = mapping_cone(dict.algebra(), &x, &y, m)?;
    Ok(cone.summands.iter().map(|o| dict.curve_of(o)).collect())
}

/// Local-move normal form of a complex of projectives with path entries.
/// Returns the summands, canonicalized and sorted.
pub fn straighten(alg: &Algebra, cx: &Complex) -> Result<Vec<Object>> {
    let mut g = Graph::new(cx);
    let mut visited = BTreeSet::new();
    let budget = 64 * (cx.summands.len() + cx.d.len() + 1) * (alg.num_arrows() + 1);
    for _ in 0..budget {
        if !(g.cancel_unit(alg) || g.slide(alg, &mut visited)) {
            let mut out = g.components(alg)?;
            out.sort();
            return Ok(out);
        }
    }
    Err(Error::Unsupported(
        "cone straightening did not terminate".into(),
    ))
}

#[derive(Clone)]
struct Graph {
    nodes: Vec<Option<(i64, Vertex)>>,
    edges: BTreeMap<(usize, usize), Comb>,
}

impl Graph {
    fn new(cx: &Complex) -> Self {
        Graph {
            nodes: cx.summands.iter().map(|&s| Some(s)).collect(),
            edges: cx.d.clone(),
        }
    }

    fn vertex(&self, i: usize) -> Vertex {
        self.nodes[i].expect("live node").1
    }

    fn degree(&self, i: usize) -> i64 {
        self.nodes[i].expect("live node").0
    }

    fn add(&mut self, i: usize, j: usize, c: &Comb, s: &BigRational) {
        let e = self.edges.entry((i, j)).or_default();
        comb_add_scaled(e, c, s);
        if e.is_empty() {
            self.edges.remove(&(i, j));
        }
    }

    fn incoming(&self, v: usize) -> Vec<(usize, Comb)> {
        self.edges
            .iter()
            .filter(|(&(_, j), _)| j == v)
            .map(|(&(i, _), c)| (i, c.clone()))
            .collect()
    }

    fn out_of(&self, u: usize) -> Vec<(usize, Comb)> {
        self.edges
            .iter()
            .filter(|(&(i, _), _)| i == u)
            .map(|(&(_, j), c)| (j, c.clone()))
            .collect()
    }

    /// Cancels an edge `a → b` whose label is a nonzero multiple of a trivial
    /// path: every `i → b` followed by `a → j` becomes a direct edge `i → j`.
    fn cancel_unit(&mut self, alg: &Algebra) -> bool {
        let unit = self.edges.iter().find_map(|(&(a, b), e)| {
            let only = e.len() == 1 && self.vertex(a) == self.vertex(b);
            e.get(&Path::trivial(self.vertex(a)))
                .filter(|_| only)
                .map(|c| (a, b, c.clone()))
        });
        let Some((a, b, c)) = unit else { return false };
        let scale = -c.recip();
        let ins: Vec<_> = self
            .incoming(b)
            .into_iter()
            .filter(|&(i, _)| i != a)
            .collect();
        let outs: Vec<_> = self
            .out_of(a)
            .into_iter()
            .filter(|&(j, _)| j != b)
            .collect();
        for (i, x) in &ins {
            for (j, y) in &outs {
                self.add(*i, *j, &comb_mul(alg, x, y), &scale);
            }
        }
        self.edges
            .retain(|&(i, j), _| i != a && j != a && i != b && j != b);
        self.nodes[a] = None;
        self.nodes[b] = None;
        true
    }

    /// Base change adding `κ·r` from summand `from` into summand `to`, both of
    /// the same degree: edges into `to` pick up the edges into `from`
    /// followed by `r`, and edges out of `from` lose `r` followed by the
    /// edges out of `to`.
    fn base_change(
        &mut self,
        alg: &Algebra,
        from: usize,
        to: usize,
        r: &Path,
        kappa: &BigRational,
    ) {
        let rc = comb_of(r.clone(), BigRational::one());
        for (a, c) in self.incoming(from) {
            self.add(a, to, &comb_mul(alg, &c, &rc), kappa);
        }
        for (b, t) in self.out_of(to) {
            self.add(from, b, &comb_mul(alg, &rc, &t), &-kappa.clone());
        }
    }

    /// Every applicable slide, as `(from, to, r, κ)` base changes. Two edges
    /// `u → v1` labelled `c1·p` and `u → v2` containing `c2·p r` give the slide
    /// of the second along `r`; dually for two edges into a node when one
    /// path is a suffix of the other.
    fn slides(&self, alg: &Algebra) -> Vec<(usize, usize, Path, BigRational)> {
        let mut out = Vec::new();
        let terms = || {
            self.edges
                .iter()
                .flat_map(|(&k, e)| e.iter().map(move |(p, c)| (k, p, c)))
        };
        for ((u1, v1), p, c1) in terms() {
            for ((u2, v2), q, c2) in terms() {
                if (u1, v1) == (u2, v2) {
                    continue;
                }
                {
                    if u1 == u2 && p.is_prefix_of(q) {
                        out.push((v1, v2, q.sub(alg, p.len(), q.len()), -(c2 / c1)));
                    }
                    if v1 == v2 && p.is_suffix_of(q) {
                        out.push((u2, u1, q.sub(alg, 0, q.len() - p.len()), c2 / c1));
                    }
                }
            }
        }
        out
    }

    /// Applies the slide leaving the fewest further slides, then the fewest
    /// edges, never returning to a graph met before.
    fn slide(
        &mut self,
        alg: &Algebra,
        visited: &mut BTreeSet<BTreeMap<(usize, usize), Comb>>,
    ) -> bool {
        let mut best: Option<((usize, usize), Graph)> = None;
        for (from, to, r, kappa) in self.slides(alg) {
            let mut g = self.clone();
            g.base_change(alg, from, to, &r, &kappa);
            if visited.contains(&g.edges) {
                continue;
            }
            let score = (g.slides(alg).len(), g.edges.len());
            if best.as_ref().is_none_or(|(s, _)| score < *s) {
                best = Some((score, g));
            }
        }
        match best {
            Some((_, g)) => {
                visited.insert(g.edges.clone());
                *self = g;
                true
            }
            None => false,
        }
    }

    /// Reads the straightened graph as a list of strings and bands. Each
    /// path term of an entry is an edge of its own, so a band through two
    /// nodes shows up as a pair of parallel edges.
    fn components(&self, alg: &Algebra) -> Result<Vec<Object>> {
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .flat_map(|(&(i, j), e)| e.iter().map(move |(p, c)| (i, j, p.clone(), c.clone())))
            .collect();
        let mut incident: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (k, e) in edges.iter().enumerate() {
            incident.entry(e.0).or_default().push(k);
            incident.entry(e.1).or_default().push(k);
        }
        if incident.values().any(|v| v.len() > 2) {
            return Err(Error::Unsupported("cone graph has a branching node".into()));
        }
        let live: Vec<usize> = (0..self.nodes.len())
            .filter(|&i| self.nodes[i].is_some())
            .collect();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        // Chains first, started from an end; whatever is left lies on cycles.
        let ends: Vec<usize> = live
            .iter()
            .copied()
            .filter(|i| incident.get(i).map_or(0, Vec::len) < 2)
            .collect();
        for start in ends {
            if !seen.contains(&start) {
                let (walk, _) = walk(&edges, start, &incident, &mut seen);
                out.push(self.read_string(alg, start, &edges, &walk)?);
            }
        }
        for &start in &live {
            if !seen.contains(&start) {
                let (walk, hol) = walk(&edges, start, &incident, &mut seen);
                out.push(self.read_band(alg, start, &edges, &walk, hol)?);
            }
        }
        Ok(out.into_iter().map(|o| o.canonical()).collect())
    }

    fn steps_and_degrees(
        &self,
        start: usize,
        edges: &[Edge],
        walk: &[(usize, bool)],
    ) -> (Vec<Step>, Vec<i64>) {
        let mut steps = Vec::new();
        let mut degrees = vec![self.degree(start)];
        for &(k, forward) in walk {
            let (i, j, p, _) = &edges[k];
            if forward {
                steps.extend(p.arrows().iter().map(|&a| Step {
                    arrow: a,
                    inverse: false,
                }));
                degrees.push(self.degree(*j));
            } else {
                steps.extend(p.arrows().iter().rev().map(|&a| Step {
                    arrow: a,
                    inverse: true,
                }));
                degrees.push(self.degree(*i));
            }
        }
        (steps, degrees)
    }

    fn read_string(
        &self,
        alg: &Algebra,
        start: usize,
        edges: &[Edge],
        walk: &[(usize, bool)],
    ) -> Result<Object> {
        let (steps, degrees) = self.steps_and_degrees(start, edges, walk);
        let s = HString::from_steps(alg, self.vertex(start), &steps)
            .map_err(|e| Error::Unsupported(format!("cone component is not a string: {e}")))?;
        let g = GradedString::grade(s, degrees[0]);
        if g.mu != degrees {
            return Err(Error::Unsupported(
                "cone component has letters spanning several nodes".into(),
            ));
        }
        Ok(Object::String(g))
    }

    fn read_band(
        &self,
        alg: &Algebra,
        start: usize,
        edges: &[Edge],
        walk: &[(usize, bool)],
        hol: BigRational,
    ) -> Result<Object> {
        let (steps, mut degrees) = self.steps_and_degrees(start, edges, walk);
        degrees.pop();
        let b = Band::from_steps(alg, self.vertex(start), &steps)
            .map_err(|e| Error::Unsupported(format!("cone component is not a band: {e}")))?;
        let lambda = if b.letters().last().unwrap().inverse {
            hol.recip()
        } else {
            hol
        };
        let g = GradedBand::grade(b, degrees[0], lambda, 1)?;
        if g.mu != degrees {
            return Err(Error::Unsupported(
                "cone component has letters spanning several nodes".into(),
            ));
        }
        Ok(Object::Band(g))
    }
}

/// One path term of an entry: source, target, path and scalar.
type Edge = (usize, usize, Path, BigRational);

/// Follows edges from `start` until an end or back to `start`. Returns the
/// traversed `(edge, forward)` list and the holonomy of the walk.
fn walk(
    edges: &[Edge],
    start: usize,
    incident: &BTreeMap<usize, Vec<usize>>,
    seen: &mut BTreeSet<usize>,
) -> (Vec<(usize, bool)>, BigRational) {
    let mut out = Vec::new();
    let mut hol = BigRational::one();
    let mut used = BTreeSet::new();
    let mut at = start;
    seen.insert(at);
    loop {
        let next = incident
            .get(&at)
            .and_then(|es| es.iter().find(|e| !used.contains(*e)).copied());
        let Some(k) = next else { break };
        used.insert(k);
        let (i, j, _, c) = &edges[k];
        let forward = *i == at;
        hol = if forward { hol * c } else { hol / c };
        out.push((k, forward));
        at = if forward { *j } else { *i };
        if !seen.insert(at) {
            break;
        }
    }
    (out, hol)
}
