//! Homotopy strings and bands, their gradings, canonical forms and the object
//! literal grammar.
//!
//! A string is stored as a walk in the quiver: a start vertex and a sequence of
//! arrow steps, each taken forwards (direct) or backwards (inverse). A walk is
//! reduced when no step is immediately undone. Homotopy letters are recovered by
//! cutting the walk wherever the direction changes and wherever two consecutive
//! steps in the same direction form a relation. Node `i` of a string sits
//! between letters `i` and `i + 1`; a direct letter goes up one degree and an
//! inverse letter goes down one.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{Algebra, ArrowIx, Path, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub arrow: ArrowIx,
    pub inverse: bool,
}

impl Step {
    pub fn reversed(self) -> Step {
        Step {
            arrow: self.arrow,
            inverse: !self.inverse,
        }
    }

    pub fn from(self, alg: &Algebra) -> Vertex {
        if self.inverse {
            alg.target(self.arrow)
        } else {
            alg.source(self.arrow)
        }
    }

    pub fn to(self, alg: &Algebra) -> Vertex {
        if self.inverse {
            alg.source(self.arrow)
        } else {
            alg.target(self.arrow)
        }
    }
}

/// Do two consecutive steps belong to the same homotopy letter?
fn same_letter(alg: &Algebra, s: Step, t: Step) -> bool {
    match (s.inverse, t.inverse) {
        (false, false) => !alg.is_relation(s.arrow, t.arrow),
        (true, true) => !alg.is_relation(t.arrow, s.arrow),
        _ => false,
    }
}

/// A homotopy letter: a nonzero path read forwards or backwards.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub path: Path,
    pub inverse: bool,
}

impl Letter {
    pub fn steps(&self) -> Vec<Step> {
        let mut s: Vec<Step> = self
            .path
            .arrows()
            .iter()
            .map(|&a| Step {
                arrow: a,
                inverse: self.inverse,
            })
            .collect();
        if self.inverse {
            s.reverse();
        }
        s
    }

    /// Vertex where the letter starts when read in walk order.
    pub fn from(&self) -> Vertex {
        if self.inverse {
            self.path.end()
        } else {
            self.path.start()
        }
    }

    pub fn to(&self) -> Vertex {
        if self.inverse {
            self.path.start()
        } else {
            self.path.end()
        }
    }

    pub fn reversed(&self) -> Letter {
        Letter {
            path: self.path.clone(),
            inverse: !self.inverse,
        }
    }

    pub fn format(&self, alg: &Algebra) -> String {
        let body = alg.format_path(&self.path);
        if self.inverse {
            format!("~({body})")
        } else {
            format!("({body})")
        }
    }
}

/// Groups a step sequence into letters; the caller guarantees connectivity.
fn group(alg: &Algebra, steps: &[Step]) -> Vec<Letter> {
    let mut letters = Vec::new();
    let mut i = 0;
    while i < steps.len() {
        let mut j = i + 1;
        while j < steps.len() && same_letter(alg, steps[j - 1], steps[j]) {
            j += 1;
        }
        let mut arrows: Vec<ArrowIx> = steps[i..j].iter().map(|s| s.arrow).collect();
        let inverse = steps[i].inverse;
        if inverse {
            arrows.reverse();
        }
        letters.push(Letter {
            path: alg
                .path_from_arrows(&arrows)
                .expect("grouped steps compose"),
            inverse,
        });
        i = j;
    }
    letters
}

fn check_walk(alg: &Algebra, start: Vertex, steps: &[Step], cyclic: bool) -> Result<()> {
    let mut v = start;
    for (i, s) in steps.iter().enumerate() {
        if s.arrow >= alg.num_arrows() {
            return Err(Error::InvalidWord(format!(
                "unknown arrow index {}",
                s.arrow
            )));
        }
        if s.from(alg) != v {
            return Err(Error::InvalidWord(format!(
                "step {i} ({}) does not continue the walk",
                alg.arrow_name(s.arrow)
            )));
        }
        v = s.to(alg);
    }
    for (i, w) in steps.windows(2).enumerate() {
        if w[1] == w[0].reversed() {
            return Err(Error::InvalidWord(format!(
                "walk is not reduced at step {}",
                i + 1
            )));
        }
    }
    if cyclic {
        if v != start {
            return Err(Error::InvalidWord("band walk does not close up".into()));
        }
        if steps.len() > 1 && steps[0] == steps[steps.len() - 1].reversed() {
            return Err(Error::InvalidWord(
                "band walk is not reduced at the closing point".into(),
            ));
        }
    }
    Ok(())
}

/// A finite homotopy string, as a reduced walk grouped into letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HString {
    start: Vertex,
    letters: Vec<Letter>,
}

impl HString {
    pub fn trivial(v: Vertex) -> Self {
        HString {
            start: v,
            letters: Vec::new(),
        }
    }

    pub fn from_steps(alg: &Algebra, start: Vertex, steps: &[Step]) -> Result<Self> {
        check_walk(alg, start, steps, false)?;
        Ok(HString {
            start,
            letters: group(alg, steps),
        })
    }

    pub fn from_letters(alg: &Algebra, start: Vertex, letters: &[Letter]) -> Result<Self> {
        let steps: Vec<Step> = letters.iter().flat_map(|l| l.steps()).collect();
        Self::from_steps(alg, start, &steps)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn steps(&self) -> Vec<Step> {
        self.letters.iter().flat_map(|l| l.steps()).collect()
    }

    pub fn start(&self) -> Vertex {
        self.start
    }

    /// Vertices `v_0, …, v_r` of the nodes.
    pub fn node_vertices(&self) -> Vec<Vertex> {
        let mut v = vec![self.start];
        v.extend(self.letters.iter().map(|l| l.to()));
        v
    }

    pub fn inverse(&self) -> HString {
        let start = self.letters.last().map(|l| l.to()).unwrap_or(self.start);
        HString {
            start,
            letters: self.letters.iter().rev().map(|l| l.reversed()).collect(),
        }
    }

    /// Degree steps between consecutive nodes: +1 for direct, −1 for inverse.
    pub fn degree_steps(&self) -> Vec<i64> {
        self.letters
            .iter()
            .map(|l| if l.inverse { -1 } else { 1 })
            .collect()
    }

    pub fn format_steps(&self, alg: &Algebra) -> String {
        if self.letters.is_empty() {
            return format!("e@{}", alg.vertex_name(self.start));
        }
        format_steps(alg, &self.steps())
    }
}

pub fn format_steps(alg: &Algebra, steps: &[Step]) -> String {
    steps
        .iter()
        .map(|s| {
            if s.inverse {
                format!("~{}", alg.arrow_name(s.arrow))
            } else {
                alg.arrow_name(s.arrow).to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// A homotopy string together with a grading of its nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedString {
    pub string: HString,
    pub mu: Vec<i64>,
}

impl GradedString {
    /// Grades `string` with value `base` at node 0.
    pub fn grade(string: HString, base: i64) -> Self {
        let mut mu = vec![base];
        for d in string.degree_steps() {
            let last = *mu.last().unwrap();
            mu.push(last + d);
        }
        GradedString { string, mu }
    }

    pub fn base(&self) -> i64 {
        self.mu[0]
    }

    /// Shift `[n]`: every degree decreases by `n`.
    pub fn shift(&self, n: i64) -> Self {
        GradedString {
            string: self.string.clone(),
            mu: self.mu.iter().map(|m| m - n).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        GradedString {
            string: self.string.inverse(),
            mu: self.mu.iter().rev().copied().collect(),
        }
    }

    /// The smaller of the string and its inverse, ordered by step sequence.
    pub fn canonical(&self) -> Self {
        let inv = self.inverse();
        if (inv.string.steps(), inv.string.start) < (self.string.steps(), self.string.start) {
            inv
        } else {
            self.clone()
        }
    }

    pub fn format(&self, alg: &Algebra) -> String {
        format!("{}@{}", self.string.format_steps(alg), self.base())
    }
}

/// A homotopy band: a cyclic reduced walk, cut at a letter boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Band {
    letters: Vec<Letter>,
}

impl Band {
    /// Builds a band from a closed walk, rotating it to start at a letter boundary.
    pub fn from_steps(alg: &Algebra, start: Vertex, steps: &[Step]) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::InvalidWord("a band needs at least one step".into()));
        }
        check_walk(alg, start, steps, true)?;
        let n = steps.len();
        let cut = (0..n)
            .find(|&i| !same_letter(alg, steps[(i + n - 1) % n], steps[i]))
            .ok_or_else(|| Error::InvalidWord("closed walk has no letter boundary".into()))?;
        let rotated: Vec<Step> = (0..n).map(|k| steps[(cut + k) % n]).collect();
        let letters = group(alg, &rotated);
        let direct = letters.iter().filter(|l| !l.inverse).count();
        if 2 * direct != letters.len() {
            return Err(Error::InvalidWord(format!(
                "band needs equal numbers of direct and inverse letters ({direct} direct of {})",
                letters.len()
            )));
        }
        for p in 1..n {
            if n.is_multiple_of(p) && (0..n).all(|k| rotated[k] == rotated[k % p]) {
                return Err(Error::InvalidWord("band word is a proper power".into()));
            }
        }
        Ok(Band { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn steps(&self) -> Vec<Step> {
        self.letters.iter().flat_map(|l| l.steps()).collect()
    }

    /// Vertex of node `i`, the start of letter `i`.
    pub fn node_vertices(&self) -> Vec<Vertex> {
        self.letters.iter().map(|l| l.from()).collect()
    }

    /// Rotation so that node `k` becomes node 0.
    pub fn rotate(&self, k: usize) -> Band {
        let n = self.letters.len();
        Band {
            letters: (0..n).map(|i| self.letters[(k + i) % n].clone()).collect(),
        }
    }

    pub fn inverse(&self) -> Band {
        Band {
            letters: self.letters.iter().rev().map(|l| l.reversed()).collect(),
        }
    }

    pub fn degree_steps(&self) -> Vec<i64> {
        self.letters
            .iter()
            .map(|l| if l.inverse { -1 } else { 1 })
            .collect()
    }
}

/// A graded band with its Jordan-block parameters. The closing letter (the
/// last one) carries the scalar `λ`, or the block `J_m(λ)` when `m > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedBand {
    pub band: Band,
    pub mu: Vec<i64>,
    pub lambda: BigRational,
    pub m: usize,
}

impl GradedBand {
    pub fn grade(band: Band, base: i64, lambda: BigRational, m: usize) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::InvalidWord("band parameter must be nonzero".into()));
        }
        if m == 0 {
            return Err(Error::InvalidWord(
                "Jordan block size must be positive".into(),
            ));
        }
        let mut mu = vec![base];
        let steps = band.degree_steps();
        for d in &steps[..steps.len() - 1] {
            let last = *mu.last().unwrap();
            mu.push(last + d);
        }
        Ok(GradedBand {
            band,
            mu,
            lambda,
            m,
        })
    }

    pub fn base(&self) -> i64 {
        self.mu[0]
    }

    pub fn shift(&self, n: i64) -> Self {
        GradedBand {
            mu: self.mu.iter().map(|m| m - n).collect(),
            ..self.clone()
        }
    }

    /// Product of the letter scalars around the cycle, each raised to +1 for
    /// a direct and −1 for an inverse letter. It is invariant under rescaling
    /// the summands and determines the isomorphism class for fixed `m`.
    pub fn holonomy(&self) -> BigRational {
        if self.band.letters.last().unwrap().inverse {
            self.lambda.recip()
        } else {
            self.lambda.clone()
        }
    }

    fn with_holonomy(band: Band, mu: Vec<i64>, h: BigRational, m: usize) -> Self {
        let lambda = if band.letters.last().unwrap().inverse {
            h.recip()
        } else {
            h
        };
        GradedBand {
            band,
            mu,
            lambda,
            m,
        }
    }

    pub fn rotate(&self, k: usize) -> Self {
        let n = self.mu.len();
        let mu = (0..n).map(|i| self.mu[(k + i) % n]).collect();
        Self::with_holonomy(self.band.rotate(k), mu, self.holonomy(), self.m)
    }

    pub fn inverse(&self) -> Self {
        // Node i of the inverse is node (n − i) mod n of the original.
        let n = self.mu.len();
        let mu = (0..n).map(|i| self.mu[(n - i) % n]).collect();
        Self::with_holonomy(self.band.inverse(), mu, self.holonomy().recip(), self.m)
    }

    /// Least representative over rotations and inversion, ordered by step sequence.
    pub fn canonical(&self) -> Self {
        let n = self.mu.len();
        let mut best = self.clone();
        let mut key = best.band.steps();
        for base in [self.clone(), self.inverse()] {
            for k in 0..n {
                let c = base.rotate(k);
                let ck = c.band.steps();
                if ck < key {
                    key = ck;
                    best = c;
                }
            }
        }
        best
    }

    pub fn format(&self, alg: &Algebra) -> String {
        format!(
            "band({})@{} lambda={} m={}",
            format_steps(alg, &self.band.steps()),
            self.base(),
            self.lambda,
            self.m
        )
    }
}

/// An indecomposable perfect object: a graded string or a graded band.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Object {
    String(GradedString),
    Band(GradedBand),
}

impl Object {
    pub fn shift(&self, n: i64) -> Object {
        match self {
            Object::String(s) => Object::String(s.shift(n)),
            Object::Band(b) => Object::Band(b.shift(n)),
        }
    }

    pub fn canonical(&self) -> Object {
        match self {
            Object::String(s) => Object::String(s.canonical()),
            Object::Band(b) => Object::Band(b.canonical()),
        }
    }

    pub fn format(&self, alg: &Algebra) -> String {
        match self {
            Object::String(s) => s.format(alg),
            Object::Band(b) => b.format(alg),
        }
    }

    /// Grading value at node 0.
    pub fn base(&self) -> i64 {
        match self {
            Object::String(s) => s.base(),
            Object::Band(b) => b.base(),
        }
    }

    pub fn as_string(&self) -> Option<&GradedString> {
        match self {
            Object::String(s) => Some(s),
            Object::Band(_) => None,
        }
    }

    pub fn is_band(&self) -> bool {
        matches!(self, Object::Band(_))
    }

    /// Parses the object literal grammar: space-separated arrow steps (`~a`
    /// for an inverse step) or `e@<vertex>`, followed by an optional
    /// `@<base>`; bands are written `band(<steps>)@<base> lambda=<q> m=<k>`.
    pub fn parse(alg: &Algebra, text: &str) -> Result<Object> {
        let lit = |message: &str| Error::Literal {
            literal: text.to_string(),
            message: message.to_string(),
        };
        let text = text.trim();
        if let Some(rest) = text.strip_prefix("band(") {
            let close = rest.find(')').ok_or_else(|| lit("missing `)`"))?;
            let steps = parse_steps(alg, &rest[..close]).map_err(|e| lit(&e.to_string()))?;
            let mut base = 0;
            let mut lambda = BigRational::one();
            let mut m = 1;
            for tok in rest[close + 1..].split_whitespace() {
                if let Some(b) = tok.strip_prefix('@') {
                    base = b.parse().map_err(|_| lit("bad base degree"))?;
                } else if let Some(l) = tok.strip_prefix("lambda=") {
                    lambda = parse_rational(l).ok_or_else(|| lit("bad lambda"))?;
                } else if let Some(k) = tok.strip_prefix("m=") {
                    m = k.parse().map_err(|_| lit("bad m"))?;
                } else {
                    return Err(lit(&format!("unexpected `{tok}`")));
                }
            }
            let start = steps.first().ok_or_else(|| lit("empty band"))?.from(alg);
            let band = Band::from_steps(alg, start, &steps).map_err(|e| lit(&e.to_string()))?;
            // The literal is taken as written when it starts at a letter boundary.
            return Ok(Object::Band(
                GradedBand::grade(band, base, lambda, m).map_err(|e| lit(&e.to_string()))?,
            ));
        }
        let (body, base) = split_base(text);
        let body = body.trim();
        if let Some(v) = body.strip_prefix("e@") {
            let v = alg.vertex(v.trim()).ok_or_else(|| lit("unknown vertex"))?;
            return Ok(Object::String(GradedString::grade(
                HString::trivial(v),
                base,
            )));
        }
        let steps = parse_steps(alg, body).map_err(|e| lit(&e.to_string()))?;
        let start = steps.first().ok_or_else(|| lit("empty string"))?.from(alg);
        let s = HString::from_steps(alg, start, &steps).map_err(|e| lit(&e.to_string()))?;
        Ok(Object::String(GradedString::grade(s, base)))
    }
}

fn split_base(text: &str) -> (&str, i64) {
    if let Some(at) = text.rfind('@') {
        let (head, tail) = (&text[..at], &text[at + 1..]);
        if let Ok(b) = tail.trim().parse::<i64>() {
            let h = head.trim();
            if !h.is_empty() && h != "e" {
                return (head, b);
            }
        }
    }
    (text, 0)
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: num_bigint::BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

pub fn parse_steps(alg: &Algebra, text: &str) -> Result<Vec<Step>> {
    text.split_whitespace()
        .map(|tok| {
            let (name, inverse) = match tok.strip_prefix('~') {
                Some(n) => (n, true),
                None => (tok, false),
            };
            let arrow = alg
                .arrow_ix(name)
                .ok_or_else(|| Error::InvalidWord(format!("unknown arrow {name}")))?;
            Ok(Step { arrow, inverse })
        })
        .collect()
}

/// Free reduction of a walk: cancels every step immediately undone.
pub fn reduce(steps: &[Step]) -> Vec<Step> {
    let mut out: Vec<Step> = Vec::with_capacity(steps.len());
    for &s in steps {
        if out.last() == Some(&s.reversed()) {
            out.pop();
        } else {
            out.push(s);
        }
    }
    out
}

/// Is the closed walk a band (reduced cyclically, balanced, primitive)?
pub fn is_band(alg: &Algebra, start: Vertex, steps: &[Step]) -> bool {
    Band::from_steps(alg, start, steps).is_ok()
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.inverse { "~" } else { "" }, self.arrow)
    }
}

/// All homotopy strings with at most `max_letters` letters, one per inversion
/// class, in canonical orientation.
pub fn enumerate_strings(alg: &Algebra, max_letters: usize) -> Vec<HString> {
    let mut out = std::collections::BTreeSet::new();
    for v in 0..alg.num_vertices() {
        let mut stack = vec![(v, Vec::<Step>::new())];
        while let Some((at, steps)) = stack.pop() {
            let s = HString::from_steps(alg, v, &steps).expect("extensions stay reduced");
            if s.len() > max_letters {
                continue;
            }
            let c = GradedString::grade(s, 0).canonical().string;
            out.insert(c);
            let mut next = Vec::new();
            for &a in alg.out_arrows(at) {
                next.push(Step {
                    arrow: a,
                    inverse: false,
                });
            }
            for &a in alg.in_arrows(at) {
                next.push(Step {
                    arrow: a,
                    inverse: true,
                });
            }
            for t in next {
                if steps.last() == Some(&t.reversed()) {
                    continue;
                }
                let mut s2 = steps.clone();
                s2.push(t);
                stack.push((t.to(alg), s2));
            }
        }
    }
    out.into_iter().collect()
}

/// All bands whose walk has at most `max_steps` steps, one per rotation and
/// inversion class, in canonical form.
pub fn enumerate_bands(alg: &Algebra, max_steps: usize) -> Vec<Band> {
    let mut out = std::collections::BTreeSet::new();
    for v in 0..alg.num_vertices() {
        let mut stack = vec![(v, Vec::<Step>::new())];
        while let Some((at, steps)) = stack.pop() {
            if !steps.is_empty() && at == v {
                if let Ok(b) = Band::from_steps(alg, v, &steps) {
                    let g =
                        GradedBand::grade(b, 0, BigRational::one(), 1).expect("valid parameters");
                    out.insert(g.canonical().band);
                }
            }
            if steps.len() == max_steps {
                continue;
            }
            let mut next = Vec::new();
            for &a in alg.out_arrows(at) {
                next.push(Step {
                    arrow: a,
                    inverse: false,
                });
            }
            for &a in alg.in_arrows(at) {
                next.push(Step {
                    arrow: a,
                    inverse: true,
                });
            }
            for t in next {
                if steps.last() == Some(&t.reversed()) {
                    continue;
                }
                let mut s2 = steps.clone();
                s2.push(t);
                stack.push((t.to(alg), s2));
            }
        }
    }
    out.into_iter().collect()
}
