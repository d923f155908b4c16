//! Explicit bounded complexes of indecomposable projectives and the exact
//! linear-algebra oracle built on them: morphism spaces in the homotopy
//! category, homology, mapping cones and isomorphism testing.
//!
//! A complex is a list of summands `(degree, vertex)`, one for each copy of
//! `P_v`, with differential entries from summands of degree `n` to summands of
//! degree `n + 1`. An entry is a linear combination of paths between the two
//! vertices; a path `p` from `x` to `y` acts `P_x → P_y` by right
//! multiplication, so entries compose in diagrammatic order.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Path, Vertex};
use crate::error::{Error, Result};
use crate::field::{kernel, rank, rref, Field};
use crate::strings::{GradedBand, GradedString, Object};

/// A linear combination of parallel paths.
pub type Comb = BTreeMap<Path, BigRational>;

pub fn comb_of(p: Path, c: BigRational) -> Comb {
    let mut m = Comb::new();
    if !c.is_zero() {
        m.insert(p, c);
    }
    m
}

pub fn comb_mul(alg: &Algebra, x: &Comb, y: &Comb) -> Comb {
    let mut out = Comb::new();
    for (p, a) in x {
        for (q, b) in y {
            if let Some(r) = alg.multiply(p, q) {
                *out.entry(r).or_insert_with(BigRational::zero) += a * b;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn comb_add_scaled(acc: &mut Comb, x: &Comb, s: &BigRational) {
    for (p, a) in x {
        *acc.entry(p.clone()).or_insert_with(BigRational::zero) += a * s;
    }
    acc.retain(|_, c| !c.is_zero());
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Complex {
    pub summands: Vec<(i64, Vertex)>,
    pub d: BTreeMap<(usize, usize), Comb>,
}

impl Complex {
    pub fn zero() -> Self {
        Complex::default()
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn add_summand(&mut self, degree: i64, v: Vertex) -> usize {
        self.summands.push((degree, v));
        self.summands.len() - 1
    }

    /// Adds `c·p` to the entry from summand `i` to summand `j`.
    pub fn add_entry(&mut self, i: usize, j: usize, p: Path, c: BigRational) {
        let e = self.d.entry((i, j)).or_default();
        comb_add_scaled(e, &comb_of(p, BigRational::one()), &c);
        if e.is_empty() {
            self.d.remove(&(i, j));
        }
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.summands[i].0
    }

    pub fn vertex(&self, i: usize) -> Vertex {
        self.summands[i].1
    }

    /// Degrees are lowered by `n`; the differential keeps its sign, which gives
    /// an isomorphic complex.
    pub fn shift(&self, n: i64) -> Complex {
        Complex {
            summands: self.summands.iter().map(|&(d, v)| (d - n, v)).collect(),
            d: self.d.clone(),
        }
    }

    pub fn direct_sum(parts: &[Complex]) -> Complex {
        let mut out = Complex::zero();
        for c in parts {
            let off = out.summands.len();
            out.summands.extend(c.summands.iter().copied());
            for (&(i, j), e) in &c.d {
                out.d.insert((i + off, j + off), e.clone());
            }
        }
        out
    }

    /// Class in the Grothendieck group: for each vertex, the number of copies
    /// of its projective in even degrees minus the number in odd degrees.
    pub fn euler_class(&self, num_vertices: usize) -> Vec<i64> {
        let mut out = vec![0; num_vertices];
        for &(d, v) in &self.summands {
            out[v] += if d.rem_euclid(2) == 0 { 1 } else { -1 };
        }
        out
    }

    /// Checks degrees, endpoints of entries and `d ∘ d = 0`.
    pub fn check(&self, alg: &Algebra) -> Result<()> {
        for (&(i, j), e) in &self.d {
            if self.degree(j) != self.degree(i) + 1 {
                return Err(Error::Precondition(format!(
                    "entry {i}→{j} does not raise the degree by one"
                )));
            }
            for p in e.keys() {
                if p.start() != self.vertex(i) || p.end() != self.vertex(j) {
                    return Err(Error::Precondition(format!(
                        "entry {i}→{j} has a path with wrong endpoints"
                    )));
                }
            }
        }
        let mut sq: BTreeMap<(usize, usize), Comb> = BTreeMap::new();
        for (&(i, j), e) in &self.d {
            for (&(j2, k), e2) in self.d.range((j, 0)..(j + 1, 0)) {
                debug_assert_eq!(j2, j);
                let prod = comb_mul(alg, e, e2);
                comb_add_scaled(sq.entry((i, k)).or_default(), &prod, &BigRational::one());
            }
        }
        if sq.values().any(|c| !c.is_empty()) {
            return Err(Error::Precondition(
                "differential does not square to zero".into(),
            ));
        }
        Ok(())
    }

    /// Gaussian elimination of every entry with an invertible coefficient.
    /// The result is homotopy equivalent and minimal, so two minimal
    /// complexes are homotopy equivalent exactly when they are isomorphic.
    pub fn minimize(&self, alg: &Algebra) -> Complex {
        let mut cx = self.clone();
        loop {
            let unit = cx.d.iter().find_map(|(&(a, b), e)| {
                let c = e.get(&Path::trivial(cx.vertex(a)))?;
                (cx.vertex(a) == cx.vertex(b) && !c.is_zero()).then_some((a, b))
            });
            let Some((a, b)) = unit else { return cx };
            let inv = unit_inverse(alg, &cx.d[&(a, b)], cx.vertex(a));
            let into_b: Vec<(usize, Comb)> =
                cx.d.iter()
                    .filter(|(&(i, j), _)| j == b && i != a)
                    .map(|(&(i, _), e)| (i, e.clone()))
                    .collect();
            let out_of_a: Vec<(usize, Comb)> =
                cx.d.iter()
                    .filter(|(&(i, j), _)| i == a && j != b)
                    .map(|(&(_, j), e)| (j, e.clone()))
                    .collect();
            for (i, x) in &into_b {
                let xi = comb_mul(alg, x, &inv);
                for (j, y) in &out_of_a {
                    let corr = comb_mul(alg, &xi, y);
                    let e = cx.d.entry((*i, *j)).or_default();
                    comb_add_scaled(e, &corr, &-BigRational::one());
                    if e.is_empty() {
                        cx.d.remove(&(*i, *j));
                    }
                }
            }
            cx = cx.without(&[a, b]);
        }
    }

    fn without(&self, drop: &[usize]) -> Complex {
        let mut map = vec![None; self.summands.len()];
        let mut out = Complex::zero();
        for (i, &s) in self.summands.iter().enumerate() {
            if !drop.contains(&i) {
                map[i] = Some(out.summands.len());
                out.summands.push(s);
            }
        }
        for (&(i, j), e) in &self.d {
            if let (Some(i2), Some(j2)) = (map[i], map[j]) {
                out.d.insert((i2, j2), e.clone());
            }
        }
        out
    }

    /// Sorted multiset of `(degree, vertex)`.
    pub fn signature(&self) -> Vec<(i64, Vertex)> {
        let mut s = self.summands.clone();
        s.sort();
        s
    }
}

/// Inverse of a unit `c·e_v + r` with `r` a combination of cycles at `v`.
fn unit_inverse(alg: &Algebra, u: &Comb, v: Vertex) -> Comb {
    let e = Path::trivial(v);
    let c = u[&e].clone();
    let cinv = c.recip();
    // u = c (e − n) with n = −c⁻¹ r nilpotent; u⁻¹ = c⁻¹ Σ nᵏ.
    let mut n = Comb::new();
    for (p, a) in u {
        if *p != e {
            n.insert(p.clone(), -(a * &cinv));
        }
    }
    let mut total = comb_of(e.clone(), BigRational::one());
    let mut power = comb_of(e, BigRational::one());
    for _ in 0..=alg.num_arrows() * alg.num_vertices() + 1 {
        power = comb_mul(alg, &power, &n);
        if power.is_empty() {
            break;
        }
        comb_add_scaled(&mut total, &power, &BigRational::one());
    }
    assert!(power.is_empty(), "radical part of a unit is not nilpotent");
    let mut out = Comb::new();
    comb_add_scaled(&mut out, &total, &cinv);
    out
}

pub fn string_complex(s: &GradedString) -> Complex {
    let mut cx = Complex::zero();
    for (k, v) in s.string.node_vertices().into_iter().enumerate() {
        cx.add_summand(s.mu[k], v);
    }
    for (i, l) in s.string.letters().iter().enumerate() {
        let (a, b) = if l.inverse { (i + 1, i) } else { (i, i + 1) };
        cx.add_entry(a, b, l.path.clone(), BigRational::one());
    }
    cx
}

/// The band complex: `m` copies of each node, identity blocks on every letter
/// but the closing one, which carries the Jordan block `J_m(λ)`.
pub fn band_complex(b: &GradedBand) -> Complex {
    let m = b.m;
    let r = b.band.len();
    let mut cx = Complex::zero();
    for (k, v) in b.band.node_vertices().into_iter().enumerate() {
        for _ in 0..m {
            cx.add_summand(b.mu[k], v);
        }
    }
    for (i, l) in b.band.letters().iter().enumerate() {
        let (from, to) = (i, (i + 1) % r);
        let (src, tgt) = if l.inverse { (to, from) } else { (from, to) };
        for c in 0..m {
            if i + 1 == r {
                cx.add_entry(src * m + c, tgt * m + c, l.path.clone(), b.lambda.clone());
                if c + 1 < m {
                    cx.add_entry(
                        src * m + c,
                        tgt * m + c + 1,
                        l.path.clone(),
                        BigRational::one(),
                    );
                }
            } else {
                cx.add_entry(src * m + c, tgt * m + c, l.path.clone(), BigRational::one());
            }
        }
    }
    cx
}

impl Object {
    pub fn complex(&self) -> Complex {
        match self {
            Object::String(s) => string_complex(s),
            Object::Band(b) => band_complex(b),
        }
    }
}

/// A degree-zero map of complexes given by its nonzero entries.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ChainMap {
    pub entries: BTreeMap<(usize, usize), Comb>,
}

impl ChainMap {
    pub fn add(&mut self, i: usize, j: usize, p: Path, c: BigRational) {
        let e = self.entries.entry((i, j)).or_default();
        comb_add_scaled(e, &comb_of(p, BigRational::one()), &c);
        if e.is_empty() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Diagrammatic composite: first `self`, then `g`.
    pub fn then(&self, alg: &Algebra, g: &ChainMap) -> ChainMap {
        let mut out = ChainMap::default();
        for (&(i, j), x) in &self.entries {
            for (&(j2, k), y) in &g.entries {
                if j2 == j {
                    let prod = comb_mul(alg, x, y);
                    let e = out.entries.entry((i, k)).or_default();
                    comb_add_scaled(e, &prod, &BigRational::one());
                }
            }
        }
        out.entries.retain(|_, e| !e.is_empty());
        out
    }

    pub fn scaled(&self, s: &BigRational) -> ChainMap {
        let mut out = ChainMap::default();
        for (&k, e) in &self.entries {
            let mut c = Comb::new();
            comb_add_scaled(&mut c, e, s);
            if !c.is_empty() {
                out.entries.insert(k, c);
            }
        }
        out
    }

    pub fn plus(&self, other: &ChainMap) -> ChainMap {
        let mut out = self.clone();
        for (&k, e) in &other.entries {
            comb_add_scaled(out.entries.entry(k).or_default(), e, &BigRational::one());
        }
        out.entries.retain(|_, e| !e.is_empty());
        out
    }
}

/// The mapping cone of `f: X → Y`: `Y^n ⊕ X^{n+1}` with differential
/// `[[d_Y, 0], [f, −d_X]]` in row convention. Summands of `Y` come first.
pub fn cone_complex(x: &Complex, y: &Complex, f: &ChainMap) -> Complex {
    let ny = y.summands.len();
    let mut cx = y.clone();
    for &(d, v) in &x.summands {
        cx.add_summand(d - 1, v);
    }
    for (&(i, j), e) in &x.d {
        let mut neg = Comb::new();
        comb_add_scaled(&mut neg, e, &-BigRational::one());
        cx.d.insert((ny + i, ny + j), neg);
    }
    for (&(i, j), e) in &f.entries {
        cx.d.insert((ny + i, j), e.clone());
    }
    cx
}

/// Paths between ordered vertex pairs, from the path basis.
pub struct PathTable {
    table: HashMap<(Vertex, Vertex), Vec<Path>>,
    ending_at: HashMap<Vertex, Vec<Path>>,
}

impl PathTable {
    pub fn new(alg: &Algebra) -> Result<Self> {
        let mut table: HashMap<(Vertex, Vertex), Vec<Path>> = HashMap::new();
        let mut ending_at: HashMap<Vertex, Vec<Path>> = HashMap::new();
        for p in alg.path_basis()? {
            table
                .entry((p.start(), p.end()))
                .or_default()
                .push(p.clone());
            ending_at.entry(p.end()).or_default().push(p);
        }
        Ok(PathTable { table, ending_at })
    }

    pub fn between(&self, u: Vertex, v: Vertex) -> &[Path] {
        self.table.get(&(u, v)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn ending_at(&self, v: Vertex) -> &[Path] {
        self.ending_at.get(&v).map(|v| v.as_slice()).unwrap_or(&[])
    }
}

type Var = (usize, usize, Path);

/// The chain-map equations `d_X f − f d_Y = 0` restricted to the given entry
/// variables; one row per `(source, target, path)` coefficient.
pub fn chain_constraints<F: Field>(
    field: &F,
    alg: &Algebra,
    x: &Complex,
    y: &Complex,
    vars: &[Var],
) -> Vec<Vec<F::E>> {
    let n = vars.len();
    let mut rows: HashMap<Var, usize> = HashMap::new();
    let mut constraints: Vec<Vec<F::E>> = Vec::new();
    let mut bump = |key: Var, col: usize, c: F::E, constraints: &mut Vec<Vec<F::E>>| {
        let r = *rows.entry(key).or_insert_with(|| {
            constraints.push(vec![field.zero(); n]);
            constraints.len() - 1
        });
        constraints[r][col] = field.add(&constraints[r][col], &c);
    };
    for (col, (i, j, p)) in vars.iter().enumerate() {
        // d_X · f: entries X_a → X_i followed by p.
        for (&(a, i2), e) in &x.d {
            if i2 != *i {
                continue;
            }
            for (q, c) in e {
                if let Some(r) = alg.multiply(q, p) {
                    bump(
                        (a, *j, r),
                        col,
                        field.from_rational(c).expect("coefficient in field"),
                        &mut constraints,
                    );
                }
            }
        }
        // − f · d_Y.
        for (&(_, b), e) in y.d.range((*j, 0)..(*j + 1, 0)) {
            for (q, c) in e {
                if let Some(r) = alg.multiply(p, q) {
                    let c = field.neg(&field.from_rational(c).expect("coefficient in field"));
                    bump((*i, b, r), col, c, &mut constraints);
                }
            }
        }
    }
    constraints
}

fn variables(
    paths: &PathTable,
    x: &Complex,
    y: &Complex,
    drop: i64,
) -> (Vec<Var>, HashMap<Var, usize>) {
    let mut vars = Vec::new();
    for (i, &(dx, vx)) in x.summands.iter().enumerate() {
        for (j, &(dy, vy)) in y.summands.iter().enumerate() {
            if dy == dx - drop {
                for p in paths.between(vx, vy) {
                    vars.push((i, j, p.clone()));
                }
            }
        }
    }
    let index = vars
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, v)| (v, k))
        .collect();
    (vars, index)
}

/// The morphism space `Hom(X, Y)` in the homotopy category, over a field.
pub struct HomSpace<'a, F: Field> {
    field: &'a F,
    alg: &'a Algebra,
    pub vars: Vec<Var>,
    index: HashMap<Var, usize>,
    constraints: Vec<Vec<F::E>>,
    /// A basis of the degree-zero chain maps.
    pub cycles: Vec<Vec<F::E>>,
    /// Spanning set of the null-homotopic maps.
    pub boundaries: Vec<Vec<F::E>>,
    boundary_rank: usize,
}

impl<'a, F: Field> HomSpace<'a, F> {
    pub fn new(
        field: &'a F,
        alg: &'a Algebra,
        paths: &PathTable,
        x: &Complex,
        y: &Complex,
    ) -> Self {
        let (vars, index) = variables(paths, x, y, 0);
        let n = vars.len();
        let constraints = chain_constraints(field, alg, x, y, &vars);
        let cycles = kernel(field, &constraints, n);
        // Homotopies h: X^n → Y^{n−1}; f = d_X h + h d_Y.
        let (hvars, _) = variables(paths, x, y, 1);
        let mut boundaries = Vec::new();
        for (i, j, p) in &hvars {
            let mut v = vec![field.zero(); n];
            for (&(a, i2), e) in &x.d {
                if i2 != *i {
                    continue;
                }
                for (q, c) in e {
                    if let Some(r) = alg.multiply(q, p) {
                        let k = index[&(a, *j, r)];
                        v[k] = field.add(&v[k], &field.from_rational(c).unwrap());
                    }
                }
            }
            for (&(_, b), e) in y.d.range((*j, 0)..(*j + 1, 0)) {
                for (q, c) in e {
                    if let Some(r) = alg.multiply(p, q) {
                        let k = index[&(*i, b, r)];
                        v[k] = field.add(&v[k], &field.from_rational(c).unwrap());
                    }
                }
            }
            if v.iter().any(|e| !field.is_zero(e)) {
                boundaries.push(v);
            }
        }
        let boundary_rank = rank(field, &boundaries, n);
        HomSpace {
            field,
            alg,
            vars,
            index,
            constraints,
            cycles,
            boundaries,
            boundary_rank,
        }
    }

    pub fn dim(&self) -> usize {
        self.cycles.len() - self.boundary_rank
    }

    pub fn vector(&self, f: &ChainMap) -> Result<Vec<F::E>> {
        let mut v = vec![self.field.zero(); self.vars.len()];
        for (&(i, j), e) in &f.entries {
            for (p, c) in e {
                let k = *self.index.get(&(i, j, p.clone())).ok_or_else(|| {
                    Error::NotChainMap(format!("entry {i}→{j} has the wrong degree or endpoints"))
                })?;
                let c = self.field.from_rational(c).ok_or_else(|| {
                    Error::Precondition("coefficient not defined in the field".into())
                })?;
                v[k] = self.field.add(&v[k], &c);
            }
        }
        Ok(v)
    }

    pub fn is_chain_map(&self, v: &[F::E]) -> bool {
        let f = self.field;
        self.constraints.iter().all(|row| {
            let s = row
                .iter()
                .zip(v)
                .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)));
            f.is_zero(&s)
        })
    }

    /// Rank of the given maps modulo null-homotopic ones.
    pub fn rank_mod_homotopy(&self, maps: &[Vec<F::E>]) -> usize {
        let mut all = self.boundaries.clone();
        all.extend(maps.iter().cloned());
        rank(self.field, &all, self.vars.len()) - self.boundary_rank
    }

    pub fn is_null_homotopic(&self, v: &[F::E]) -> bool {
        self.rank_mod_homotopy(&[v.to_vec()]) == 0
    }

    /// A chain map from an element of the field space (used for random search).
    fn chain_map_entries(&self, v: &[F::E]) -> Vec<(usize, usize, Path, F::E)> {
        self.vars
            .iter()
            .zip(v)
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|((i, j, p), c)| (*i, *j, p.clone(), c.clone()))
            .collect()
    }

    pub fn algebra(&self) -> &Algebra {
        self.alg
    }
}

/// Homology dimensions by degree (nonzero ones only).
pub fn homology_dims<F: Field>(
    field: &F,
    alg: &Algebra,
    paths: &PathTable,
    cx: &Complex,
) -> BTreeMap<i64, usize> {
    let _ = alg;
    let mut degrees: Vec<i64> = cx.summands.iter().map(|s| s.0).collect();
    degrees.sort();
    degrees.dedup();
    // Basis of X^n: (summand, path ending at its vertex).
    let basis = |n: i64| -> Vec<(usize, Path)> {
        let mut b = Vec::new();
        for (i, &(d, v)) in cx.summands.iter().enumerate() {
            if d == n {
                for q in paths.ending_at(v) {
                    b.push((i, q.clone()));
                }
            }
        }
        b
    };
    let diff_rank = |n: i64| -> usize {
        let src = basis(n);
        let tgt = basis(n + 1);
        if src.is_empty() || tgt.is_empty() {
            return 0;
        }
        let pos: HashMap<(usize, Path), usize> = tgt
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, v)| (v, k))
            .collect();
        let mut m = vec![vec![field.zero(); tgt.len()]; src.len()];
        for (r, (i, q)) in src.iter().enumerate() {
            for (&(i2, j), e) in cx.d.range((*i, 0)..(*i + 1, 0)) {
                debug_assert_eq!(i2, *i);
                for (p, c) in e {
                    if let Some(prod) = alg.multiply(q, p) {
                        let k = pos[&(j, prod)];
                        m[r][k] = field.add(&m[r][k], &field.from_rational(c).unwrap());
                    }
                }
            }
        }
        rank(field, &m, tgt.len())
    };
    let mut out = BTreeMap::new();
    for &n in &degrees {
        let dim = basis(n).len();
        let h = dim - diff_rank(n) - diff_rank(n - 1);
        if h > 0 {
            out.insert(n, h);
        }
    }
    out
}

/// Are the two complexes isomorphic in the homotopy category?
///
/// Both sides are minimized first; minimal complexes are homotopy equivalent
/// exactly when they are isomorphic as complexes, which happens exactly when
/// some chain map is invertible modulo the radical in every degree. Such a map
/// is searched for among the basis chain maps and random combinations of them
/// (deterministic seed).
pub fn is_isomorphic<F: Field>(
    field: &F,
    alg: &Algebra,
    paths: &PathTable,
    x: &Complex,
    y: &Complex,
) -> bool {
    let xm = x.minimize(alg);
    let ym = y.minimize(alg);
    if xm.signature() != ym.signature() {
        return false;
    }
    if xm.is_zero() {
        return true;
    }
    let hom = HomSpace::new(field, alg, paths, &xm, &ym);
    let blocks = {
        let mut b: BTreeMap<(i64, Vertex), (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for (i, &s) in xm.summands.iter().enumerate() {
            b.entry(s).or_default().0.push(i);
        }
        for (j, &s) in ym.summands.iter().enumerate() {
            b.entry(s).or_default().1.push(j);
        }
        b
    };
    let invertible = |v: &[F::E]| -> bool {
        let entries = hom.chain_map_entries(v);
        blocks.values().all(|(xs, ys)| {
            let mut m = vec![vec![field.zero(); ys.len()]; xs.len()];
            for (i, j, p, c) in &entries {
                if p.is_trivial() {
                    if let (Some(a), Some(b)) = (
                        xs.iter().position(|k| k == i),
                        ys.iter().position(|k| k == j),
                    ) {
                        m[a][b] = c.clone();
                    }
                }
            }
            let mut w = m.clone();
            rref(field, &mut w, ys.len()).len() == xs.len()
        })
    };
    if hom.cycles.iter().any(|v| invertible(v)) {
        return true;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..48 {
        let mut v = vec![field.zero(); hom.vars.len()];
        for z in &hom.cycles {
            let c = field.from_i64(rng.gen_range(-1000..=1000));
            for (a, b) in v.iter_mut().zip(z) {
                *a = field.add(a, &field.mul(&c, b));
            }
        }
        if invertible(&v) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn alg(s: &str) -> Algebra {
        Algebra::parse(s).unwrap()
    }

    fn obj(a: &Algebra, s: &str) -> Complex {
        Object::parse(a, s).unwrap().complex()
    }

    const A2: &str = "vertex 1 2\narrow a 1 2\n";
    const KRONECKER: &str = "vertex 1 2\narrow a 1 2\narrow b 1 2\n";

    #[test]
    fn a2_hom_dimensions() {
        let a = alg(A2);
        let t = PathTable::new(&a).unwrap();
        let q = Rationals;
        let p1 = obj(&a, "e@1@0");
        let p2 = obj(&a, "e@2@0");
        let cone = obj(&a, "a@0");
        let dim = |x: &Complex, y: &Complex| HomSpace::new(&q, &a, &t, x, y).dim();
        assert_eq!(dim(&p1, &p2), 1);
        assert_eq!(dim(&p2, &p1), 0);
        assert_eq!(dim(&p1, &p1), 1);
        assert_eq!(dim(&cone, &cone), 1);
        assert_eq!(dim(&p2, &cone), 0);
        assert_eq!(dim(&p2.shift(-1), &cone), 1);
        assert_eq!(dim(&cone, &p1), 1);
        assert_eq!(dim(&cone, &p1.shift(-1)), 0);
    }

    #[test]
    fn homology_and_minimization() {
        let a = alg(A2);
        let t = PathTable::new(&a).unwrap();
        let q = Rationals;
        let cone = obj(&a, "a@0");
        // P_1 → P_2 resolves the simple at 2, living in degree 1.
        assert_eq!(homology_dims(&q, &a, &t, &cone), BTreeMap::from([(1, 1)]));
        let mut id = ChainMap::default();
        id.add(0, 0, Path::trivial(0), BigRational::one());
        let p1 = obj(&a, "e@1@0");
        let c = cone_complex(&p1, &p1, &id);
        c.check(&a).unwrap();
        assert!(c.minimize(&a).is_zero());
        assert!(is_isomorphic(&q, &a, &t, &c, &Complex::zero()));
    }

    #[test]
    fn kronecker_bands_by_parameter() {
        let k = alg(KRONECKER);
        let t = PathTable::new(&k).unwrap();
        let q = Rationals;
        let b1 = obj(&k, "band(a ~b)@0 lambda=1");
        let b2 = obj(&k, "band(a ~b)@0 lambda=2");
        let b2r = obj(&k, "band(~b a)@0 lambda=1/2");
        assert!(!is_isomorphic(&q, &k, &t, &b1, &b2));
        assert!(is_isomorphic(&q, &k, &t, &b2, &b2r.shift(-1)));
        assert_eq!(HomSpace::new(&q, &k, &t, &b1, &b1).dim(), 1);
        assert_eq!(HomSpace::new(&q, &k, &t, &b1, &b2).dim(), 0);
        assert_eq!(HomSpace::new(&q, &k, &t, &b1, &b1.shift(1)).dim(), 1);
        assert_eq!(HomSpace::new(&q, &k, &t, &b1, &b1.shift(-1)).dim(), 0);
        let j = obj(&k, "band(a ~b)@0 lambda=1 m=2");
        j.check(&k).unwrap();
        assert_eq!(HomSpace::new(&q, &k, &t, &j, &j).dim(), 2);
        let p = PrimeField::new(101).unwrap();
        assert_eq!(HomSpace::new(&p, &k, &t, &b1, &b1.shift(1)).dim(), 1);
    }
}
