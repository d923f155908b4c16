//! The standard morphism basis against the linear-algebra oracle, and mapping
//! cones against the cone of the realized chain map.

use gentle::complex::{cone_complex, homology_dims, is_isomorphic, HomSpace, PathTable};
use gentle::cones::{mapping_cone, resolve_crossing};
use gentle::corpus::{generate, named, CorpusConfig};
use gentle::curves::Dictionary;
use gentle::field::{PrimeField, Rationals};
use gentle::morphisms::{
    graded_intersections, graph_maps, realize, standard_basis, IntersectionTag, Kind, Shape,
};
use gentle::ribbon::RibbonGraph;
use gentle::strings::{enumerate_strings, GradedString, Object};
use gentle::Algebra;

fn alg(name: &str) -> Algebra {
    named(name).unwrap()
}

fn obj(a: &Algebra, text: &str) -> Object {
    Object::parse(a, text).unwrap()
}

fn oracle_dim(a: &Algebra, x: &Object, y: &Object) -> usize {
    let t = PathTable::new(a).unwrap();
    HomSpace::new(&Rationals, a, &t, &x.complex(), &y.complex()).dim()
}

fn basis(a: &Algebra, x: &Object, y: &Object) -> Vec<gentle::morphisms::Morphism> {
    standard_basis(a, &PathTable::new(a).unwrap(), x, y).unwrap()
}

#[test]
fn a2_arrow_string_meets_each_stalk_in_one_graph_map() {
    let a = alg("A2");
    // The string a@0 is P1 in degree 0 followed by P2 in degree 1.
    let s = obj(&a, "a@0");
    for (x, y) in [(s.clone(), obj(&a, "e@1@0")), (obj(&a, "e@2@1"), s.clone())] {
        let g = graph_maps(&a, &Shape::of(&x).unwrap(), &Shape::of(&y).unwrap());
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].overlap.unwrap().len, 0);
        assert_eq!(oracle_dim(&a, &x, &y), 1);
    }
    assert!(basis(&a, &obj(&a, "e@1@0"), &s).is_empty());
    assert_eq!(oracle_dim(&a, &obj(&a, "e@1@0"), &s), 0);
}

#[test]
fn a2_singleton_single_map_between_stalks() {
    let a = alg("A2");
    let (x, y) = (obj(&a, "e@1@0"), obj(&a, "e@2@0"));
    let b = basis(&a, &x, &y);
    assert_eq!(b.len(), 1);
    assert_eq!(b[0].kind, Kind::SingletonSingle);
    assert_eq!(a.format_path(b[0].p.as_ref().unwrap()), "a");
    assert_eq!(oracle_dim(&a, &x, &y), 1);
    // Nothing goes back.
    assert!(basis(&a, &y, &x).is_empty());
    assert_eq!(oracle_dim(&a, &y, &x), 0);
}

#[test]
fn kronecker_stalks_have_two_maps() {
    let k = alg("kronecker");
    let (x, y) = (obj(&k, "e@1@0"), obj(&k, "e@2@0"));
    assert_eq!(basis(&k, &x, &y).len(), 2);
    assert_eq!(oracle_dim(&k, &x, &y), 2);
}

#[test]
fn grading_mismatch_kills_graph_maps() {
    let a = alg("A3rel");
    let x = obj(&a, "a b@0");
    let shifted = x.shift(1);
    let g = graph_maps(&a, &Shape::of(&x).unwrap(), &Shape::of(&shifted).unwrap());
    assert!(g.is_empty());
}

#[test]
fn endomorphisms_contain_the_identity() {
    for name in ["A3rel", "A4rel", "kronecker", "cycle3"] {
        let a = alg(name);
        for s in enumerate_strings(&a, 3) {
            let x = Object::String(GradedString::grade(s, 0));
            let b = basis(&a, &x, &x);
            assert!(
                b.iter().any(|m| m.kind == Kind::Graph
                    && m.overlap
                        .is_some_and(|o| o.x == 0 && o.len == x.as_string().unwrap().string.len())),
                "{name}: {}",
                x.format(&a)
            );
        }
    }
}

#[test]
fn graded_intersections_drop_only_the_identity() {
    let a = alg("A4rel");
    let t = PathTable::new(&a).unwrap();
    for s in enumerate_strings(&a, 3) {
        let x = Object::String(GradedString::grade(s, 0));
        let ends = standard_basis(&a, &t, &x, &x).unwrap().len();
        let meets = graded_intersections(&a, &t, &x, &x).unwrap();
        assert_eq!(meets.len() + 1, ends, "{}", x.format(&a));
    }
    let (x, y) = (obj(&a, "e@1@0"), obj(&a, "e@2@0"));
    let meets = graded_intersections(&a, &t, &x, &y).unwrap();
    assert_eq!(meets.len(), basis(&a, &x, &y).len());
    assert!(meets
        .iter()
        .all(|(_, t)| *t == IntersectionTag::EmptySegment));
}

/// Every basis element is a chain map; the basis has the oracle dimension and
/// is independent modulo homotopy. Swept over small corpus algebras so that
/// every kind of map occurs.
#[test]
fn basis_matches_the_oracle_on_random_algebras() {
    let algs = generate(&CorpusConfig {
        max_vertices: 6,
        max_arrows: 8,
        relation_density: 0.5,
        count: 30,
        seed: 11,
    })
    .unwrap();
    let q = Rationals;
    let mut kinds = std::collections::BTreeSet::new();
    for a in &algs {
        let t = PathTable::new(a).unwrap();
        let objs: Vec<Object> = enumerate_strings(a, 2)
            .into_iter()
            .take(12)
            .map(|s| Object::String(GradedString::grade(s, 0)))
            .collect();
        for x in &objs {
            for y0 in &objs {
                for d in -2..=2 {
                    let y = y0.shift(d);
                    let b = standard_basis(a, &t, x, &y).unwrap();
                    let hom = HomSpace::new(&q, a, &t, &x.complex(), &y.complex());
                    let vecs: Vec<_> = b
                        .iter()
                        .map(|m| {
                            let v = hom.vector(&realize(a, x, &y, m).unwrap()).unwrap();
                            assert!(hom.is_chain_map(&v));
                            v
                        })
                        .collect();
                    assert_eq!(b.len(), hom.dim(), "{} -> {}", x.format(a), y.format(a));
                    assert_eq!(hom.rank_mod_homotopy(&vecs), b.len());
                    kinds.extend(b.iter().map(|m| m.kind));
                }
            }
        }
    }
    assert_eq!(kinds.len(), 4, "kinds seen: {kinds:?}");
}

#[test]
fn hom_dimensions_agree_over_a_prime_field() {
    let f = PrimeField::new(5).unwrap();
    for name in ["A3rel", "A4rel", "kronecker"] {
        let a = alg(name);
        let t = PathTable::new(&a).unwrap();
        let objs: Vec<Object> = enumerate_strings(&a, 2)
            .into_iter()
            .map(|s| Object::String(GradedString::grade(s, 0)))
            .collect();
        for x in &objs {
            for y in &objs {
                let (cx, cy) = (x.complex(), y.complex());
                assert_eq!(
                    HomSpace::new(&f, &a, &t, &cx, &cy).dim(),
                    HomSpace::new(&Rationals, &a, &t, &cx, &cy).dim()
                );
            }
        }
    }
}

#[test]
fn descriptors_name_both_objects() {
    let a = alg("A2");
    let (x, y) = (obj(&a, "e@1@0"), obj(&a, "e@2@0"));
    let d = basis(&a, &x, &y)[0].descriptor(&a, &x, &y);
    let v = serde_json::to_value(&d).unwrap();
    assert_eq!(v["kind"], "singleton-single");
    assert_eq!(v["from"], "e@1@0");
    assert_eq!(v["to"], "e@2@0");
    assert_eq!(v["p"], "a");
    assert_eq!(v["anchor"]["i"], 0);
}

#[test]
fn cone_of_the_identity_is_zero() {
    let a = alg("A4rel");
    for s in enumerate_strings(&a, 3) {
        let x = Object::String(GradedString::grade(s, 0));
        let id = basis(&a, &x, &x)
            .into_iter()
            .find(|m| m.kind == Kind::Graph && m.overlap.is_some_and(|o| o.x == 0))
            .unwrap();
        let len = x.as_string().unwrap().string.len();
        if id.overlap.unwrap().len == len {
            assert!(mapping_cone(&a, &x, &x, &id).unwrap().summands.is_empty());
        }
    }
}

#[test]
fn a2_cone_of_the_arrow_is_the_arrow_string() {
    let a = alg("A2");
    let (x, y) = (obj(&a, "e@1@0"), obj(&a, "e@2@0"));
    let m = &basis(&a, &x, &y)[0];
    let cone = mapping_cone(&a, &x, &y, m).unwrap();
    assert_eq!(cone.summands, vec![obj(&a, "a@-1")]);
    let Object::String(s) = &cone.summands[0] else {
        panic!()
    };
    assert_eq!(s.mu, vec![-1, 0]);
    assert_eq!(
        cone.to_json(&a),
        serde_json::json!({ "summands": ["a@-1"] })
    );
}

#[test]
fn cones_match_the_realized_cone() {
    let q = Rationals;
    for name in ["A3rel", "A4rel", "kronecker", "cycle3"] {
        let a = alg(name);
        let t = PathTable::new(&a).unwrap();
        let objs: Vec<Object> = enumerate_strings(&a, 2)
            .into_iter()
            .map(|s| Object::String(GradedString::grade(s, 0)))
            .collect();
        for x in &objs {
            for y0 in &objs {
                for d in -1..=1 {
                    let y = y0.shift(d);
                    for m in basis(&a, x, &y) {
                        let pc = mapping_cone(&a, x, &y, &m).unwrap().complex();
                        let raw = cone_complex(
                            &x.complex(),
                            &y.complex(),
                            &realize(&a, x, &y, &m).unwrap(),
                        );
                        assert!(is_isomorphic(&q, &a, &t, &pc, &raw));
                        assert_eq!(
                            homology_dims(&q, &a, &t, &pc),
                            homology_dims(&q, &a, &t, &raw)
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn resolving_a_crossing_gives_the_cone_curves() {
    let a = alg("A2");
    let rg = RibbonGraph::build(&a).unwrap();
    let dict = Dictionary::new(&a, &rg).unwrap();
    let (x, y) = (obj(&a, "e@1@0"), obj(&a, "e@2@0"));
    let m = &basis(&a, &x, &y)[0];
    let curves = resolve_crossing(&dict, &dict.curve_of(&x), &dict.curve_of(&y), m).unwrap();
    assert_eq!(curves, vec![dict.curve_of(&obj(&a, "a@-1"))]);
    // A curve does not cross itself at an interior point here.
    assert!(resolve_crossing(&dict, &dict.curve_of(&x), &dict.curve_of(&x.shift(1)), m).is_err());
}
