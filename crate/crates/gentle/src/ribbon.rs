//! The marked ribbon graph of a gentle algebra, its faces, the surface it
//! thickens to, the dual lamination, recovery of the algebra, and Koszul duals.
//!
//! Each element of the augmented set of maximal paths is a ribbon vertex with
//! one half-edge per passage through a quiver vertex, cyclically ordered from
//! start to end. The two half-edges carrying the same quiver vertex form an
//! edge. A corner `c_h` is the pair `(h, σh)`; faces are orbits of
//! `h ↦ ι(σ(h))` and are the boundary components of the surface. Relation-free
//! cycles of a locally gentle algebra become cyclic ribbon vertices without a
//! marking; each of them adds one unmarked boundary component.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{Algebra, ArrowIx, Path, Presentation, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RibbonVertexKind {
    /// An element of the augmented set of maximal paths.
    Path(Path),
    /// A relation-free cycle (locally gentle algebras only).
    Cycle(Vec<ArrowIx>),
}

#[derive(Clone, Debug)]
pub struct RibbonGraph {
    kinds: Vec<RibbonVertexKind>,
    /// Half-edge ids of each ribbon vertex in σ order.
    fans: Vec<Vec<usize>>,
    he_vertex: Vec<usize>,
    he_pos: Vec<usize>,
    he_label: Vec<Vertex>,
    iota: Vec<usize>,
    sigma: Vec<usize>,
    marking: Vec<Option<usize>>,
    /// Quiver vertex names, indexed like the algebra's vertices.
    labels: Vec<String>,
}

impl RibbonGraph {
    /// Builds the marked ribbon graph. Fails on the one-vertex algebra without
    /// arrows, which has no half-edge pair.
    pub fn build(alg: &Algebra) -> Result<Self> {
        if alg.is_degenerate() {
            return Err(Error::Degenerate(
                "one vertex and no arrows: the ribbon graph has no edge".into(),
            ));
        }
        let m = alg.maximal_paths();
        let mut kinds: Vec<RibbonVertexKind> =
            m.all().into_iter().map(RibbonVertexKind::Path).collect();
        kinds.extend(m.cycles.iter().cloned().map(RibbonVertexKind::Cycle));
        let mut g = RibbonGraph {
            kinds: Vec::new(),
            fans: Vec::new(),
            he_vertex: Vec::new(),
            he_pos: Vec::new(),
            he_label: Vec::new(),
            iota: Vec::new(),
            sigma: Vec::new(),
            marking: Vec::new(),
            labels: (0..alg.num_vertices())
                .map(|v| alg.vertex_name(v).to_string())
                .collect(),
        };
        for (vi, kind) in kinds.iter().enumerate() {
            let labels: Vec<Vertex> = match kind {
                RibbonVertexKind::Path(p) => {
                    let mut l = vec![p.start()];
                    l.extend(p.arrows().iter().map(|&a| alg.target(a)));
                    l
                }
                RibbonVertexKind::Cycle(c) => c.iter().map(|&a| alg.source(a)).collect(),
            };
            let base = g.he_vertex.len();
            let n = labels.len();
            let mut fan = Vec::with_capacity(n);
            for (k, &lab) in labels.iter().enumerate() {
                g.he_vertex.push(vi);
                g.he_pos.push(k);
                g.he_label.push(lab);
                g.sigma.push(base + (k + 1) % n);
                fan.push(base + k);
            }
            g.fans.push(fan);
            g.marking.push(match kind {
                RibbonVertexKind::Path(_) => Some(base + n - 1),
                RibbonVertexKind::Cycle(_) => None,
            });
        }
        let mut by_label: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
        for (h, &lab) in g.he_label.iter().enumerate() {
            by_label.entry(lab).or_default().push(h);
        }
        g.iota = vec![usize::MAX; g.he_label.len()];
        for (lab, hs) in &by_label {
            if hs.len() != 2 {
                return Err(Error::Precondition(format!(
                    "vertex {} has {} passages instead of 2",
                    alg.vertex_name(*lab),
                    hs.len()
                )));
            }
            g.iota[hs[0]] = hs[1];
            g.iota[hs[1]] = hs[0];
        }
        if g.iota.contains(&usize::MAX) {
            return Err(Error::Precondition(
                "isolated vertex in a quiver with arrows".into(),
            ));
        }
        g.kinds = kinds;
        Ok(g)
    }

    pub fn num_vertices(&self) -> usize {
        self.kinds.len()
    }

    pub fn num_half_edges(&self) -> usize {
        self.he_label.len()
    }

    pub fn num_edges(&self) -> usize {
        self.he_label.len() / 2
    }

    pub fn kind(&self, v: usize) -> &RibbonVertexKind {
        &self.kinds[v]
    }

    pub fn fan(&self, v: usize) -> &[usize] {
        &self.fans[v]
    }

    pub fn vertex_of(&self, h: usize) -> usize {
        self.he_vertex[h]
    }

    pub fn position(&self, h: usize) -> usize {
        self.he_pos[h]
    }

    pub fn label(&self, h: usize) -> Vertex {
        self.he_label[h]
    }

    pub fn label_name(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn iota(&self, h: usize) -> usize {
        self.iota[h]
    }

    pub fn sigma(&self, h: usize) -> usize {
        self.sigma[h]
    }

    pub fn sigma_inv(&self, h: usize) -> usize {
        let fan = &self.fans[self.he_vertex[h]];
        fan[(self.he_pos[h] + fan.len() - 1) % fan.len()]
    }

    pub fn marking(&self, v: usize) -> Option<usize> {
        self.marking[v]
    }

    pub fn is_marked_corner(&self, h: usize) -> bool {
        self.marking[self.he_vertex[h]] == Some(h)
    }

    /// The two half-edges carrying quiver vertex `v`.
    pub fn half_edges_of(&self, v: Vertex) -> (usize, usize) {
        let h = self
            .he_label
            .iter()
            .position(|&l| l == v)
            .expect("every vertex has two half-edges");
        (h, self.iota[h])
    }

    pub fn num_cycle_vertices(&self) -> usize {
        self.kinds
            .iter()
            .filter(|k| matches!(k, RibbonVertexKind::Cycle(_)))
            .count()
    }

    /// Faces as sequences of corners `c_h` (stored as `h`), each rotated to
    /// start at its least half-edge; ordered by that half-edge.
    pub fn faces(&self) -> Vec<Face> {
        let n = self.num_half_edges();
        let mut seen = vec![false; n];
        let mut faces = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut corners = Vec::new();
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                corners.push(h);
                h = self.iota[self.sigma[h]];
            }
            let marked = corners
                .iter()
                .filter(|&&h| self.is_marked_corner(h))
                .count();
            faces.push(Face { corners, marked });
        }
        faces
    }

    /// Index of the face through every corner.
    pub fn face_of_corner(&self) -> Vec<usize> {
        let mut f = vec![0; self.num_half_edges()];
        for (i, face) in self.faces().iter().enumerate() {
            for &h in &face.corners {
                f[h] = i;
            }
        }
        f
    }

    pub fn surface(&self) -> SurfaceModel {
        let faces = self.faces();
        let e = self.num_edges() as i64;
        let v = self.num_vertices() as i64;
        let f = faces.len() as i64;
        let genus = (e - v - f + 2) / 2;
        let mut out = Vec::new();
        for face in &faces {
            out.push(FaceData {
                b: face.marked,
                l: face.corners.len(),
                unmarked_cycle_len: (face.marked == 0).then_some(face.corners.len()),
            });
        }
        for _ in 0..self.num_cycle_vertices() {
            out.push(FaceData {
                b: 0,
                l: 0,
                unmarked_cycle_len: None,
            });
        }
        SurfaceModel {
            genus: genus as usize,
            chi: v - e + f,
            faces: out,
        }
    }

    /// One laminate per quiver vertex, with the faces on the two sides of its edge.
    pub fn lamination(&self) -> Vec<Laminate> {
        let fc = self.face_of_corner();
        (0..self.labels.len())
            .map(|v| {
                let (h, ih) = self.half_edges_of(v);
                Laminate {
                    vertex: self.labels[v].clone(),
                    faces: (fc[h], fc[ih]),
                }
            })
            .collect()
    }

    /// Reads the algebra back off the ribbon graph: every unmarked corner is an
    /// arrow, and two unmarked corners that follow each other along a face give
    /// a relation. Arrows are named `r0, r1, …` in corner order.
    pub fn recover(&self) -> Presentation {
        let n = self.num_half_edges();
        let mut arrow_of = vec![None; n];
        let mut p = Presentation {
            vertices: self.labels.clone(),
            ..Default::default()
        };
        for h in 0..n {
            if !self.is_marked_corner(h) {
                let name = format!("r{}", p.arrows.len());
                p.arrows.push((
                    name.clone(),
                    self.labels[self.he_label[h]].clone(),
                    self.labels[self.he_label[self.sigma[h]]].clone(),
                ));
                arrow_of[h] = Some(name);
            }
        }
        for h in 0..n {
            let next = self.iota[self.sigma[h]];
            if let (Some(a), Some(b)) = (&arrow_of[h], &arrow_of[next]) {
                p.relations.push((a.clone(), b.clone()));
            }
        }
        p
    }

    /// DOT rendering: ribbon vertices as nodes with their half-edge labels in σ
    /// order, one undirected edge per quiver vertex.
    pub fn to_dot(&self, alg: &Algebra) -> String {
        let mut s = String::from("graph ribbon {\n");
        for (v, kind) in self.kinds.iter().enumerate() {
            let name = match kind {
                RibbonVertexKind::Path(p) => alg.format_path(p),
                RibbonVertexKind::Cycle(c) => {
                    format!(
                        "cycle {}",
                        c.iter()
                            .map(|&a| alg.arrow_name(a))
                            .collect::<Vec<_>>()
                            .join(" ")
                    )
                }
            };
            let order: Vec<&str> = self.fans[v]
                .iter()
                .map(|&h| self.labels[self.he_label[h]].as_str())
                .collect();
            let marked = match self.marking[v] {
                Some(h) => self.labels[self.he_label[h]].as_str(),
                None => "",
            };
            s.push_str(&format!(
                "  v{v} [label=\"{name}\", sigma=\"{}\", marking=\"{marked}\"];\n",
                order.join(",")
            ));
        }
        for (lab, name) in self.labels.iter().enumerate() {
            let (h, ih) = self.half_edges_of(lab);
            s.push_str(&format!(
                "  v{} -- v{} [label=\"{name}\"];\n",
                self.he_vertex[h], self.he_vertex[ih]
            ));
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Corners `c_h` in boundary order, recorded by `h`.
    pub corners: Vec<usize>,
    /// Number of marked corners on this face.
    pub marked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceData {
    pub b: usize,
    pub l: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unmarked_cycle_len: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceModel {
    pub genus: usize,
    pub chi: i64,
    pub faces: Vec<FaceData>,
}

impl SurfaceModel {
    pub fn boundary_components(&self) -> usize {
        self.faces.len()
    }

    pub fn marked_points(&self) -> usize {
        self.faces.iter().map(|f| f.b).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Laminate {
    pub vertex: String,
    pub faces: (usize, usize),
}

/// Surface invariants of the algebra; the one-vertex algebra is a disc with one
/// marked point.
pub fn surface_invariants(alg: &Algebra) -> Result<SurfaceModel> {
    if alg.is_degenerate() {
        return Ok(SurfaceModel {
            genus: 0,
            chi: 2,
            faces: vec![FaceData {
                b: 1,
                l: 2,
                unmarked_cycle_len: None,
            }],
        });
    }
    if !alg.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(RibbonGraph::build(alg)?.surface())
}

/// First Betti number of the quiver and the rank `2g + b − 1` of the
/// fundamental group of the surface; equal for every connected gentle algebra.
pub fn pi1_rank_check(alg: &Algebra) -> Result<(usize, usize)> {
    let s = surface_invariants(alg)?;
    Ok((alg.betti1(), 2 * s.genus + s.boundary_components() - 1))
}

/// The Koszul dual `A^!`: opposite arrows `a^op`, and `(α^op, β^op)` is a
/// relation exactly when `β α` is composable and nonzero in `A`.
#[derive(Clone, Debug)]
pub struct KoszulDual {
    pub presentation: Presentation,
    /// False when `A` has a full cycle of relations; the dual then has a
    /// relation-free cycle.
    pub finite_dimensional: bool,
}

pub fn koszul_dual(alg: &Algebra) -> KoszulDual {
    let op = |a: ArrowIx| format!("{}^op", alg.arrow_name(a));
    let mut p = Presentation {
        vertices: (0..alg.num_vertices())
            .map(|v| alg.vertex_name(v).to_string())
            .collect(),
        ..Default::default()
    };
    for a in 0..alg.num_arrows() {
        p.arrows.push((
            op(a),
            alg.vertex_name(alg.target(a)).into(),
            alg.vertex_name(alg.source(a)).into(),
        ));
    }
    for beta in 0..alg.num_arrows() {
        for &alpha in alg.out_arrows(alg.target(beta)) {
            if !alg.is_relation(beta, alpha) {
                p.relations.push((op(alpha), op(beta)));
            }
        }
    }
    KoszulDual {
        presentation: p,
        finite_dimensional: alg.full_relation_cycles().is_empty(),
    }
}

/// Isomorphism of presentations on the same vertex set that fixes every
/// vertex; arrows may be renamed.
pub fn isomorphic_fixing_vertices(a: &Algebra, b: &Algebra) -> bool {
    if a.num_vertices() != b.num_vertices() || a.num_arrows() != b.num_arrows() {
        return false;
    }
    if (0..a.num_vertices()).any(|v| a.vertex_name(v) != b.vertex_name(v)) {
        return false;
    }
    if a.relations().len() != b.relations().len() {
        return false;
    }
    let key = |alg: &Algebra, x: ArrowIx| (alg.source(x), alg.target(x));
    let mut candidates: Vec<Vec<ArrowIx>> = Vec::new();
    for x in 0..a.num_arrows() {
        let c: Vec<ArrowIx> = (0..b.num_arrows())
            .filter(|&y| key(b, y) == key(a, x))
            .collect();
        if c.is_empty() {
            return false;
        }
        candidates.push(c);
    }
    let mut image = vec![usize::MAX; a.num_arrows()];
    let mut used = vec![false; b.num_arrows()];
    fn extend(
        i: usize,
        a: &Algebra,
        b: &Algebra,
        cands: &[Vec<ArrowIx>],
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if i == cands.len() {
            return a
                .relations()
                .iter()
                .all(|&(x, y)| b.is_relation(image[x], image[y]));
        }
        for &y in &cands[i] {
            if used[y] {
                continue;
            }
            // Prune on relations among arrows already mapped.
            let ok = (0..i).all(|j| {
                a.is_relation(j, i) == b.is_relation(image[j], y)
                    && a.is_relation(i, j) == b.is_relation(y, image[j])
            }) && a.is_relation(i, i) == b.is_relation(y, y);
            if !ok {
                continue;
            }
            image[i] = y;
            used[y] = true;
            if extend(i + 1, a, b, cands, image, used) {
                return true;
            }
            used[y] = false;
        }
        false
    }
    extend(0, a, b, &candidates, &mut image, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(s: &str) -> Algebra {
        Algebra::parse(s).unwrap()
    }

    const A4: &str = "vertex 1 2 3 4\narrow a1 1 2\narrow a2 2 3\narrow a3 3 4\n";
    const KRONECKER: &str = "vertex 1 2\narrow a 1 2\narrow b 1 2\n";
    const CYCLE3: &str =
        "vertex 1 2 3\narrow a 1 2\narrow b 2 3\narrow c 3 1\nrel a b\nrel b c\nrel c a\n";

    #[test]
    fn a4_is_a_disc_with_five_marked_points() {
        for text in [A4.to_string(), format!("{A4}rel a1 a2\nrel a2 a3\n")] {
            let a = alg(&text);
            let s = surface_invariants(&a).unwrap();
            assert_eq!(
                (s.genus, s.boundary_components(), s.marked_points()),
                (0, 1, 5)
            );
            assert_eq!(s.faces[0].l, 8);
        }
        let g = RibbonGraph::build(&alg(A4)).unwrap();
        assert_eq!(g.num_vertices(), 5);
        assert_eq!(g.fan(0).len(), 4);
    }

    #[test]
    fn kronecker_is_an_annulus() {
        let s = surface_invariants(&alg(KRONECKER)).unwrap();
        assert_eq!(s.genus, 0);
        assert_eq!(
            s.faces,
            vec![
                FaceData {
                    b: 1,
                    l: 2,
                    unmarked_cycle_len: None
                };
                2
            ]
        );
        assert_eq!(pi1_rank_check(&alg(KRONECKER)).unwrap(), (1, 1));
        let lam = RibbonGraph::build(&alg(KRONECKER)).unwrap().lamination();
        assert!(lam.iter().all(|l| l.faces.0 != l.faces.1));
    }

    #[test]
    fn three_cycle_has_an_unmarked_boundary() {
        let s = surface_invariants(&alg(CYCLE3)).unwrap();
        let mut pairs: Vec<(usize, usize)> = s.faces.iter().map(|f| (f.b, f.l)).collect();
        pairs.sort();
        assert_eq!(pairs, vec![(0, 3), (3, 3)]);
        assert_eq!(s.genus, 0);
    }

    #[test]
    fn recovery_round_trips() {
        for text in [
            A4,
            KRONECKER,
            CYCLE3,
            "vertex 1 2 3\narrow a 1 2\narrow b 2 3\narrow c 2 3\nrel a b\n",
        ] {
            let a = alg(text);
            let back = RibbonGraph::build(&a).unwrap().recover().build().unwrap();
            assert!(isomorphic_fixing_vertices(&a, &back), "{text}");
        }
    }

    #[test]
    fn koszul_duals() {
        let c = alg(CYCLE3);
        let d = koszul_dual(&c);
        assert!(!d.finite_dimensional);
        let dual = d.presentation.build_locally_gentle().unwrap();
        assert!(dual.relations().is_empty());
        assert!(!dual.is_finite_dimensional());
        let s = RibbonGraph::build(&dual).unwrap().surface();
        assert_eq!((s.genus, s.boundary_components()), (0, 2));
        let a2 = alg("vertex 1 2\narrow a 1 2\n");
        let d = koszul_dual(&a2).presentation.build().unwrap();
        assert!(d.relations().is_empty());
        let a3 = alg("vertex 1 2 3\narrow a 1 2\narrow b 2 3\n");
        let d = koszul_dual(&a3).presentation.build().unwrap();
        assert_eq!(d.relations().len(), 1);
        let dd = koszul_dual(&d).presentation.build().unwrap();
        assert!(isomorphic_fixing_vertices(&a3, &dd));
    }

    #[test]
    fn degenerate_algebra_is_a_disc() {
        let a = alg("vertex x\n");
        assert!(RibbonGraph::build(&a).is_err());
        let s = surface_invariants(&a).unwrap();
        assert_eq!((s.genus, s.marked_points()), (0, 1));
    }
}
