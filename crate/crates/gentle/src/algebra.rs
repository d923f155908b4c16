//! Quivers with quadratic monomial relations: the presentation format, gentle
//! validation, and path arithmetic.
//!
//! Paths compose left to right: the path `a b` runs along `a` first and then
//! along `b`, and it vanishes in the algebra when `(a, b)` is a relation.
//! Vertices and arrows are stored in lexicographic order of their ids, so index
//! order is the canonical order used everywhere downstream.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type ArrowIx = usize;

/// A path in the quiver, possibly trivial. Nonzero-ness is a property relative
/// to an [`Algebra`], not of the path itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    start: Vertex,
    end: Vertex,
    arrows: Vec<ArrowIx>,
}

impl Path {
    pub fn trivial(v: Vertex) -> Self {
        Path {
            start: v,
            end: v,
            arrows: Vec::new(),
        }
    }

    pub fn start(&self) -> Vertex {
        self.start
    }

    pub fn end(&self) -> Vertex {
        self.end
    }

    pub fn arrows(&self) -> &[ArrowIx] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn first(&self) -> Option<ArrowIx> {
        self.arrows.first().copied()
    }

    pub fn last(&self) -> Option<ArrowIx> {
        self.arrows.last().copied()
    }

    /// Subpath made of arrows `i..j`; a trivial path at the right vertex when `i == j`.
    pub fn sub(&self, alg: &Algebra, i: usize, j: usize) -> Path {
        assert!(i <= j && j <= self.arrows.len());
        if i == j {
            let v = if i == 0 {
                self.start
            } else {
                alg.target(self.arrows[i - 1])
            };
            return Path::trivial(v);
        }
        Path {
            start: alg.source(self.arrows[i]),
            end: alg.target(self.arrows[j - 1]),
            arrows: self.arrows[i..j].to_vec(),
        }
    }

    /// Is `self` an initial segment of `other`?
    pub fn is_prefix_of(&self, other: &Path) -> bool {
        self.start == other.start && other.arrows.starts_with(&self.arrows)
    }

    /// Is `self` a final segment of `other`?
    pub fn is_suffix_of(&self, other: &Path) -> bool {
        self.end == other.end && other.arrows.ends_with(&self.arrows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: Vertex,
    pub target: Vertex,
}

/// One violated clause of the presentation or of gentleness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    DuplicateVertex(String),
    DuplicateArrow(String),
    DuplicateRelation(String, String),
    UnknownVertex { arrow: String, vertex: String },
    UnknownArrow(String),
    NameClash(String),
    NotComposable(String, String),
    OutDegree { vertex: String, degree: usize },
    InDegree { vertex: String, degree: usize },
    TwoRelationsAfter { arrow: String },
    TwoNonRelationsAfter { arrow: String },
    TwoRelationsBefore { arrow: String },
    TwoNonRelationsBefore { arrow: String },
    RelationFreeCycle(Vec<String>),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            DuplicateVertex(v) => write!(f, "vertex {v} declared twice"),
            DuplicateArrow(a) => write!(f, "arrow {a} declared twice"),
            DuplicateRelation(a, b) => write!(f, "relation {a} {b} declared twice"),
            UnknownVertex { arrow, vertex } => {
                write!(f, "arrow {arrow} uses undeclared vertex {vertex}")
            }
            UnknownArrow(a) => write!(f, "relation uses undeclared arrow {a}"),
            NameClash(n) => write!(f, "id {n} names both a vertex and an arrow"),
            NotComposable(a, b) => write!(f, "relation {a} {b} is not composable"),
            OutDegree { vertex, degree } => {
                write!(f, "out-degree > 2 at vertex {vertex} ({degree})")
            }
            InDegree { vertex, degree } => write!(f, "in-degree > 2 at vertex {vertex} ({degree})"),
            TwoRelationsAfter { arrow } => {
                write!(
                    f,
                    "arrow {arrow} is followed by two arrows forming relations with it"
                )
            }
            TwoNonRelationsAfter { arrow } => {
                write!(
                    f,
                    "arrow {arrow} is followed by two arrows not forming relations with it"
                )
            }
            TwoRelationsBefore { arrow } => {
                write!(
                    f,
                    "arrow {arrow} is preceded by two arrows forming relations with it"
                )
            }
            TwoNonRelationsBefore { arrow } => {
                write!(
                    f,
                    "arrow {arrow} is preceded by two arrows not forming relations with it"
                )
            }
            RelationFreeCycle(c) => write!(f, "relation-free cycle {}", c.join(" ")),
        }
    }
}

/// A presentation as written in a file: ids only, nothing validated yet.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
    pub relations: Vec<(String, String)>,
}

impl Presentation {
    /// Parses the line-based format: `vertex <id>`, `arrow <id> <source> <target>`,
    /// `rel <arrow> <arrow>`, with `#` comments. Several statements may share a
    /// line when separated by `;`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Presentation::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            for stmt in line.split(';') {
                let toks: Vec<&str> = stmt.split_whitespace().collect();
                let syntax = |message: String| Error::Syntax {
                    line: n + 1,
                    message,
                };
                match toks.as_slice() {
                    [] => {}
                    ["vertex", ids @ ..] if !ids.is_empty() => {
                        p.vertices.extend(ids.iter().map(|s| s.to_string()))
                    }
                    ["arrow", a, s, t] => {
                        p.arrows.push((a.to_string(), s.to_string(), t.to_string()))
                    }
                    ["rel", a, b] => p.relations.push((a.to_string(), b.to_string())),
                    [kw @ ("vertex" | "arrow" | "rel"), ..] => {
                        return Err(syntax(format!("wrong number of fields for `{kw}`")))
                    }
                    [kw, ..] => return Err(syntax(format!("unknown keyword `{kw}`"))),
                }
            }
        }
        Ok(p)
    }

    /// Writes the presentation back in the file format, in canonical order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut vs = self.vertices.clone();
        vs.sort();
        for v in &vs {
            out.push_str(&format!("vertex {v}\n"));
        }
        let mut arrows = self.arrows.clone();
        arrows.sort();
        for (a, s, t) in &arrows {
            out.push_str(&format!("arrow {a} {s} {t}\n"));
        }
        let mut rels = self.relations.clone();
        rels.sort();
        for (a, b) in &rels {
            out.push_str(&format!("rel {a} {b}\n"));
        }
        out
    }

    /// All violated clauses; empty means the presentation defines a
    /// finite-dimensional gentle algebra.
    pub fn validate(&self) -> Vec<Violation> {
        let (alg, mut bad) = Algebra::assemble(self);
        bad.extend(alg.gentle_violations(true));
        bad
    }

    /// Builds a finite-dimensional gentle algebra.
    pub fn build(&self) -> Result<Algebra> {
        self.build_with(true)
    }

    /// Builds a locally gentle algebra: relation-free cycles are allowed.
    pub fn build_locally_gentle(&self) -> Result<Algebra> {
        self.build_with(false)
    }

    fn build_with(&self, finite: bool) -> Result<Algebra> {
        let (mut alg, mut violations) = Algebra::assemble(self);
        violations.extend(alg.gentle_violations(finite));
        if !violations.is_empty() {
            if violations.len() == 1 {
                if let Violation::RelationFreeCycle(c) = &violations[0] {
                    return Err(Error::InfiniteDimensional(format!(
                        "relation-free cycle {}",
                        c.join(" ")
                    )));
                }
            }
            return Err(Error::NotGentle(violations));
        }
        alg.finite = alg.relation_free_cycles().is_empty();
        Ok(alg)
    }
}

/// A (locally) gentle algebra `kQ/I` with indexed vertices and arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    relations: BTreeSet<(ArrowIx, ArrowIx)>,
    out: Vec<Vec<ArrowIx>>,
    inc: Vec<Vec<ArrowIx>>,
    finite: bool,
}

impl Algebra {
    pub fn parse(text: &str) -> Result<Self> {
        Presentation::parse(text)?.build()
    }

    /// Indexes a presentation, dropping (and reporting) anything that refers
    /// to undeclared ids.
    fn assemble(p: &Presentation) -> (Algebra, Vec<Violation>) {
        let mut bad = Vec::new();
        let mut vertices: Vec<String> = p.vertices.clone();
        vertices.sort();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                bad.push(Violation::DuplicateVertex(w[0].clone()));
            }
        }
        vertices.dedup();
        let vix: BTreeMap<&str, Vertex> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut raw = p.arrows.clone();
        raw.sort();
        let mut arrows = Vec::new();
        let mut names = BTreeSet::new();
        for (a, s, t) in &raw {
            if !names.insert(a.clone()) {
                bad.push(Violation::DuplicateArrow(a.clone()));
                continue;
            }
            if vix.contains_key(a.as_str()) {
                bad.push(Violation::NameClash(a.clone()));
            }
            let lookup = |x: &String| vix.get(x.as_str()).copied();
            match (lookup(s), lookup(t)) {
                (Some(source), Some(target)) => arrows.push(Arrow {
                    name: a.clone(),
                    source,
                    target,
                }),
                (src, _) => {
                    let vertex = if src.is_none() { s } else { t };
                    bad.push(Violation::UnknownVertex {
                        arrow: a.clone(),
                        vertex: vertex.clone(),
                    });
                }
            }
        }
        let aix: BTreeMap<&str, ArrowIx> = arrows
            .iter()
            .enumerate()
            .map(|(i, a)| (a.name.as_str(), i))
            .collect();
        let mut relations = BTreeSet::new();
        for (a, b) in &p.relations {
            match (aix.get(a.as_str()), aix.get(b.as_str())) {
                (Some(&x), Some(&y)) => {
                    if arrows[x].target != arrows[y].source {
                        bad.push(Violation::NotComposable(a.clone(), b.clone()));
                    } else if !relations.insert((x, y)) {
                        bad.push(Violation::DuplicateRelation(a.clone(), b.clone()));
                    }
                }
                (x, _) => {
                    let missing = if x.is_none() { a } else { b };
                    bad.push(Violation::UnknownArrow(missing.clone()));
                }
            }
        }
        let mut out = vec![Vec::new(); vertices.len()];
        let mut inc = vec![Vec::new(); vertices.len()];
        for (i, a) in arrows.iter().enumerate() {
            out[a.source].push(i);
            inc[a.target].push(i);
        }
        (
            Algebra {
                vertices,
                arrows,
                relations,
                out,
                inc,
                finite: true,
            },
            bad,
        )
    }

    fn gentle_violations(&self, require_finite: bool) -> Vec<Violation> {
        let mut bad = Vec::new();
        for v in 0..self.vertices.len() {
            if self.out[v].len() > 2 {
                bad.push(Violation::OutDegree {
                    vertex: self.vertices[v].clone(),
                    degree: self.out[v].len(),
                });
            }
            if self.inc[v].len() > 2 {
                bad.push(Violation::InDegree {
                    vertex: self.vertices[v].clone(),
                    degree: self.inc[v].len(),
                });
            }
        }
        for a in 0..self.arrows.len() {
            let name = || self.arrows[a].name.clone();
            let after = &self.out[self.target(a)];
            let rel_after = after.iter().filter(|&&b| self.is_relation(a, b)).count();
            if rel_after > 1 {
                bad.push(Violation::TwoRelationsAfter { arrow: name() });
            }
            if after.len() - rel_after > 1 {
                bad.push(Violation::TwoNonRelationsAfter { arrow: name() });
            }
            let before = &self.inc[self.source(a)];
            let rel_before = before.iter().filter(|&&b| self.is_relation(b, a)).count();
            if rel_before > 1 {
                bad.push(Violation::TwoRelationsBefore { arrow: name() });
            }
            if before.len() - rel_before > 1 {
                bad.push(Violation::TwoNonRelationsBefore { arrow: name() });
            }
        }
        if require_finite {
            for c in self.relation_free_cycles() {
                bad.push(Violation::RelationFreeCycle(
                    c.iter().map(|&a| self.arrows[a].name.clone()).collect(),
                ));
            }
        }
        bad
    }

    /// Oriented cycles along which no consecutive pair is a relation, each
    /// rotated to start at its least arrow.
    pub fn relation_free_cycles(&self) -> Vec<Vec<ArrowIx>> {
        cycles_of(self.arrows.len(), |a| {
            self.out[self.target(a)]
                .iter()
                .copied()
                .filter(|&b| !self.is_relation(a, b))
                .collect()
        })
    }

    /// Oriented cycles all of whose consecutive pairs (including the closing
    /// pair) are relations.
    pub fn full_relation_cycles(&self) -> Vec<Vec<ArrowIx>> {
        cycles_of(self.arrows.len(), |a| {
            self.out[self.target(a)]
                .iter()
                .copied()
                .filter(|&b| self.is_relation(a, b))
                .collect()
        })
    }

    pub fn presentation(&self) -> Presentation {
        Presentation {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| {
                    (
                        a.name.clone(),
                        self.vertices[a.source].clone(),
                        self.vertices[a.target].clone(),
                    )
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|&(a, b)| (self.arrows[a].name.clone(), self.arrows[b].name.clone()))
                .collect(),
        }
    }

    pub fn is_finite_dimensional(&self) -> bool {
        self.finite
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_name(&self, v: Vertex) -> &str {
        &self.vertices[v]
    }

    pub fn arrow_name(&self, a: ArrowIx) -> &str {
        &self.arrows[a].name
    }

    pub fn arrow(&self, a: ArrowIx) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.vertices
            .binary_search_by(|v| v.as_str().cmp(name))
            .ok()
    }

    pub fn arrow_ix(&self, name: &str) -> Option<ArrowIx> {
        self.arrows
            .binary_search_by(|a| a.name.as_str().cmp(name))
            .ok()
    }

    pub fn source(&self, a: ArrowIx) -> Vertex {
        self.arrows[a].source
    }

    pub fn target(&self, a: ArrowIx) -> Vertex {
        self.arrows[a].target
    }

    pub fn out_arrows(&self, v: Vertex) -> &[ArrowIx] {
        &self.out[v]
    }

    pub fn in_arrows(&self, v: Vertex) -> &[ArrowIx] {
        &self.inc[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.out[v].len() + self.inc[v].len()
    }

    pub fn relations(&self) -> &BTreeSet<(ArrowIx, ArrowIx)> {
        &self.relations
    }

    pub fn is_relation(&self, a: ArrowIx, b: ArrowIx) -> bool {
        self.relations.contains(&(a, b))
    }

    /// The arrow continuing `a` without a relation, if any.
    pub fn next_nonrel(&self, a: ArrowIx) -> Option<ArrowIx> {
        self.out[self.target(a)]
            .iter()
            .copied()
            .find(|&b| !self.is_relation(a, b))
    }

    /// The arrow forming a relation with `a` on its right, if any.
    pub fn next_rel(&self, a: ArrowIx) -> Option<ArrowIx> {
        self.out[self.target(a)]
            .iter()
            .copied()
            .find(|&b| self.is_relation(a, b))
    }

    pub fn prev_nonrel(&self, b: ArrowIx) -> Option<ArrowIx> {
        self.inc[self.source(b)]
            .iter()
            .copied()
            .find(|&a| !self.is_relation(a, b))
    }

    pub fn prev_rel(&self, b: ArrowIx) -> Option<ArrowIx> {
        self.inc[self.source(b)]
            .iter()
            .copied()
            .find(|&a| self.is_relation(a, b))
    }

    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() == 1 && self.arrows.is_empty()
    }

    pub fn path_from_arrows(&self, arrows: &[ArrowIx]) -> Option<Path> {
        let first = *arrows.first()?;
        for w in arrows.windows(2) {
            if self.target(w[0]) != self.source(w[1]) {
                return None;
            }
        }
        Some(Path {
            start: self.source(first),
            end: self.target(*arrows.last().unwrap()),
            arrows: arrows.to_vec(),
        })
    }

    pub fn arrow_path(&self, a: ArrowIx) -> Path {
        Path {
            start: self.source(a),
            end: self.target(a),
            arrows: vec![a],
        }
    }

    /// True when no two consecutive arrows of `p` form a relation.
    pub fn is_nonzero(&self, p: &Path) -> bool {
        p.arrows.windows(2).all(|w| !self.is_relation(w[0], w[1]))
    }

    /// The product `p q` in the algebra: `None` when not composable or zero.
    pub fn multiply(&self, p: &Path, q: &Path) -> Option<Path> {
        if p.end != q.start {
            return None;
        }
        if let (Some(a), Some(b)) = (p.last(), q.first()) {
            if self.is_relation(a, b) {
                return None;
            }
        }
        let mut arrows = p.arrows.clone();
        arrows.extend_from_slice(&q.arrows);
        Some(Path {
            start: p.start,
            end: q.end,
            arrows,
        })
    }

    /// All nonzero paths (a basis of the algebra), trivial paths first.
    pub fn path_basis(&self) -> Result<Vec<Path>> {
        if !self.finite {
            return Err(Error::InfiniteDimensional(
                "the path basis is infinite".into(),
            ));
        }
        let mut basis: Vec<Path> = (0..self.vertices.len()).map(Path::trivial).collect();
        for a in 0..self.arrows.len() {
            let mut p = self.arrow_path(a);
            loop {
                basis.push(p.clone());
                match self.next_nonrel(p.last().unwrap()) {
                    Some(b) => {
                        p.arrows.push(b);
                        p.end = self.target(b);
                    }
                    None => break,
                }
            }
        }
        Ok(basis)
    }

    pub fn format_path(&self, p: &Path) -> String {
        if p.is_trivial() {
            format!("e@{}", self.vertices[p.start])
        } else {
            p.arrows
                .iter()
                .map(|&a| self.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join(" ")
        }
    }

    /// Parses a path written as space-separated arrow ids or `e@<vertex>`.
    pub fn parse_path(&self, text: &str) -> Result<Path> {
        let text = text.trim();
        if let Some(v) = text.strip_prefix("e@") {
            let v = self
                .vertex(v)
                .ok_or_else(|| Error::InvalidWord(format!("unknown vertex {v}")))?;
            return Ok(Path::trivial(v));
        }
        let arrows = text
            .split_whitespace()
            .map(|n| {
                self.arrow_ix(n)
                    .ok_or_else(|| Error::InvalidWord(format!("unknown arrow {n}")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.path_from_arrows(&arrows)
            .ok_or_else(|| Error::InvalidWord(format!("`{text}` is not a path")))
    }

    /// Number of connected components of the underlying graph.
    pub fn components(&self) -> usize {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        let mut comps = n;
        for a in &self.arrows {
            let (x, y) = (find(&mut parent, a.source), find(&mut parent, a.target));
            if x != y {
                parent[x] = y;
                comps -= 1;
            }
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components() == 1
    }

    /// First Betti number of the underlying graph of the quiver.
    pub fn betti1(&self) -> usize {
        self.arrows.len() + self.components() - self.vertices.len()
    }

    /// Maximal nonzero paths together with the admitted trivial paths.
    pub fn maximal_paths(&self) -> MaximalPaths {
        let mut paths = Vec::new();
        for a in 0..self.arrows.len() {
            if self.prev_nonrel(a).is_none() {
                let mut arrows = vec![a];
                while let Some(b) = self.next_nonrel(*arrows.last().unwrap()) {
                    arrows.push(b);
                }
                paths.push(self.path_from_arrows(&arrows).unwrap());
            }
        }
        let trivial = (0..self.vertices.len())
            .filter(|&v| {
                let (i, o) = (&self.inc[v], &self.out[v]);
                // An isolated vertex only occurs in the one-vertex algebra.
                i.len() + o.len() <= 1
                    || (i.len() == 1 && o.len() == 1 && !self.is_relation(i[0], o[0]))
            })
            .collect();
        let mut m = MaximalPaths {
            paths,
            trivial,
            cycles: self.relation_free_cycles(),
        };
        m.paths.sort_by_key(|p| self.format_path(p));
        m
    }

    /// Forbidden threads: maximal paths all of whose length-two subpaths are relations.
    pub fn forbidden_threads(&self) -> ForbiddenThreads {
        let mut threads = Vec::new();
        for a in 0..self.arrows.len() {
            if self.prev_rel(a).is_none() {
                let mut arrows = vec![a];
                while let Some(b) = self.next_rel(*arrows.last().unwrap()) {
                    arrows.push(b);
                }
                threads.push(self.path_from_arrows(&arrows).unwrap());
            }
        }
        let trivial = (0..self.vertices.len())
            .filter(|&v| {
                let (i, o) = (&self.inc[v], &self.out[v]);
                i.len() + o.len() <= 1
                    || (i.len() == 1 && o.len() == 1 && self.is_relation(i[0], o[0]))
            })
            .collect();
        threads.sort_by_key(|p| self.format_path(p));
        ForbiddenThreads {
            threads,
            trivial,
            cycles: self.full_relation_cycles(),
        }
    }
}

/// Simple cycles of a graph on `0..n` whose out-degrees are at most two,
/// each rotated to start at its least element, deduplicated and sorted.
fn cycles_of(n: usize, succ: impl Fn(usize) -> Vec<usize>) -> Vec<Vec<usize>> {
    let succs: Vec<Vec<usize>> = (0..n).map(&succ).collect();
    let mut found = BTreeSet::new();
    // Johnson-style enumeration is overkill here: cycles through a vertex of
    // minimal index are found by DFS restricted to larger indices.
    for start in 0..n {
        let mut stack = vec![(start, 0usize)];
        let mut path = vec![start];
        let mut on_path = vec![false; n];
        on_path[start] = true;
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i < succs[v].len() {
                let w = succs[v][*i];
                *i += 1;
                if w == start {
                    found.insert(path.clone());
                } else if w > start && !on_path[w] {
                    on_path[w] = true;
                    path.push(w);
                    stack.push((w, 0));
                }
            } else {
                stack.pop();
                if let Some(v) = path.pop() {
                    on_path[v] = false;
                }
            }
        }
    }
    found.into_iter().collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalPaths {
    /// Maximal nonzero paths of positive length.
    pub paths: Vec<Path>,
    /// Vertices `v` whose trivial path `e_v` is admitted.
    pub trivial: Vec<Vertex>,
    /// Relation-free cycles (only present for locally gentle algebras).
    pub cycles: Vec<Vec<ArrowIx>>,
}

impl MaximalPaths {
    /// The augmented set: maximal paths followed by the admitted trivial paths.
    pub fn all(&self) -> Vec<Path> {
        let mut v = self.paths.clone();
        v.extend(self.trivial.iter().map(|&x| Path::trivial(x)));
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenThreads {
    pub threads: Vec<Path>,
    pub trivial: Vec<Vertex>,
    pub cycles: Vec<Vec<ArrowIx>>,
}
