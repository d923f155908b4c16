//! Endpoint rotation, the inverse Auslander-Reiten translate and
//! Auslander-Reiten triangles.

use gentle::ar::{ar_triangle, inverse_ar_translate, rotate_end, rotate_start};
use gentle::complex::{is_isomorphic, HomSpace, PathTable};
use gentle::corpus::{generate, named, small_family, CorpusConfig};
use gentle::curves::Dictionary;
use gentle::field::Rationals;
use gentle::ribbon::RibbonGraph;
use gentle::strings::{enumerate_bands, enumerate_strings, GradedBand, GradedString, Object};
use gentle::Algebra;
use num_rational::BigRational;

fn alg(name: &str) -> Algebra {
    named(name).unwrap()
}

fn obj(a: &Algebra, text: &str) -> Object {
    Object::parse(a, text).unwrap()
}

fn translate(a: &Algebra, text: &str) -> String {
    let rg = RibbonGraph::build(a).unwrap();
    let d = Dictionary::new(a, &rg).unwrap();
    inverse_ar_translate(&d, &obj(a, text))
        .unwrap()
        .canonical()
        .format(a)
}

/// Values computed once and confirmed by the Serre-duality check below.
#[test]
fn inverse_translates_on_a3() {
    let a = alg("A3");
    for (x, z) in [
        ("e@1@0", "a@-1"),
        ("a@0", "b@0"),
        ("a b@0", "e@2@0"),
        ("e@2@0", "a b@-1"),
        ("b@0", "e@3@0"),
        ("e@3@0", "e@1@-1"),
    ] {
        assert_eq!(translate(&a, x), z, "{x}");
    }
}

#[test]
fn inverse_translates_on_the_kronecker_algebra() {
    let k = alg("kronecker");
    assert_eq!(translate(&k, "e@1@0"), "~a b@0");
    assert_eq!(translate(&k, "~a b@0"), "~a b ~a b ~a b@0");
    // The two strings of length one are fixed: each sits in a tube of rank one.
    assert_eq!(translate(&k, "a@0"), "a@0");
    assert_eq!(translate(&k, "b@0"), "b@0");
}

#[test]
fn bands_are_fixed() {
    let k = alg("kronecker");
    let rg = RibbonGraph::build(&k).unwrap();
    let d = Dictionary::new(&k, &rg).unwrap();
    for b in enumerate_bands(&k, 4) {
        for (l, m) in [(1, 1), (5, 3)] {
            let x = Object::Band(
                GradedBand::grade(b.clone(), 2, BigRational::from_integer(l.into()), m).unwrap(),
            );
            assert_eq!(inverse_ar_translate(&d, &x).unwrap(), x);
        }
    }
}

#[test]
fn a3_orbits_close_after_four_steps_up_to_shift() {
    let a = alg("A3");
    let rg = RibbonGraph::build(&a).unwrap();
    let d = Dictionary::new(&a, &rg).unwrap();
    let t = PathTable::new(&a).unwrap();
    for s in enumerate_strings(&a, 3) {
        for base in [-1, 0, 3] {
            let x = Object::String(GradedString::grade(s.clone(), base));
            let mut z = x.clone();
            for _ in 0..4 {
                z = inverse_ar_translate(&d, &z).unwrap();
            }
            assert!(is_isomorphic(
                &Rationals,
                &a,
                &t,
                &z.complex(),
                &x.shift(2).complex()
            ));
            assert_eq!(z.canonical(), x.shift(2).canonical());
        }
    }
}

#[test]
fn endpoint_rotations_commute() {
    for (name, a) in small_family() {
        let rg = RibbonGraph::build(&a).unwrap();
        let d = Dictionary::new(&a, &rg).unwrap();
        for s in enumerate_strings(&a, 3) {
            let x = GradedString::grade(s, 0);
            let se = rotate_end(&d, &x)
                .unwrap()
                .and_then(|y| rotate_start(&d, &y).unwrap());
            let es = rotate_start(&d, &x)
                .unwrap()
                .and_then(|y| rotate_end(&d, &y).unwrap());
            // Through a contractible intermediate arc only the combined
            // rotation is defined.
            if let (Some(p), Some(q)) = (se, es) {
                assert_eq!(p.canonical(), q.canonical(), "{name}: {}", x.format(&a));
            }
        }
    }
}

/// `Hom(τ⁻¹X, Y)` and `Hom(Y, X[1])` have the same dimension on algebras of
/// finite global dimension.
fn serre_check(a: &Algebra, letters: usize, shifts: i64) {
    let rg = RibbonGraph::build(a).unwrap();
    let d = Dictionary::new(a, &rg).unwrap();
    let t = PathTable::new(a).unwrap();
    let q = Rationals;
    let objs: Vec<Object> = enumerate_strings(a, letters)
        .into_iter()
        .map(|s| Object::String(GradedString::grade(s, 0)))
        .collect();
    for x in &objs {
        let z = inverse_ar_translate(&d, x).unwrap().complex();
        let x1 = x.shift(1).complex();
        for y0 in &objs {
            for s in -shifts..=shifts {
                let y = y0.shift(s).complex();
                assert_eq!(
                    HomSpace::new(&q, a, &t, &z, &y).dim(),
                    HomSpace::new(&q, a, &t, &y, &x1).dim(),
                    "{} against {}",
                    x.format(a),
                    y0.shift(s).format(a)
                );
            }
        }
    }
}

#[test]
fn serre_duality_on_the_family() {
    for (_, a) in small_family() {
        if a.full_relation_cycles().is_empty() {
            serre_check(&a, 3, 2);
        }
    }
}

#[test]
fn serre_duality_on_random_algebras() {
    let algs = generate(&CorpusConfig {
        max_vertices: 6,
        max_arrows: 8,
        relation_density: 0.4,
        count: 40,
        seed: 5,
    })
    .unwrap();
    let mut checked = 0;
    for a in algs
        .iter()
        .filter(|a| a.full_relation_cycles().is_empty() && !a.is_degenerate())
    {
        serre_check(a, 2, 1);
        checked += 1;
    }
    assert!(checked >= 20);
}

#[test]
fn triangles_pass_their_checks() {
    for (name, a) in small_family() {
        if !a.full_relation_cycles().is_empty() {
            continue;
        }
        let rg = RibbonGraph::build(&a).unwrap();
        let d = Dictionary::new(&a, &rg).unwrap();
        let t = PathTable::new(&a).unwrap();
        for s in enumerate_strings(&a, 3) {
            let x = Object::String(GradedString::grade(s, 0));
            let tri = ar_triangle(&d, &t, &x).unwrap();
            assert_eq!(tri.z, inverse_ar_translate(&d, &x).unwrap());
            let checks = tri.check(&a, &t).unwrap();
            assert!(checks.all(), "{name}: {} {checks:?}", x.format(&a));
        }
    }
}

#[test]
fn triangle_middle_terms() {
    let a = alg("A3");
    let rg = RibbonGraph::build(&a).unwrap();
    let d = Dictionary::new(&a, &rg).unwrap();
    let t = PathTable::new(&a).unwrap();
    let middle = |x: &str| -> Vec<String> {
        let mut e: Vec<String> = ar_triangle(&d, &t, &obj(&a, x))
            .unwrap()
            .e
            .iter()
            .map(|o| o.canonical().format(&a))
            .collect();
        e.sort();
        e
    };
    assert_eq!(middle("e@1@0"), vec!["e@2@0"]);
    assert_eq!(middle("e@2@0"), vec!["a@-1", "e@3@0"]);
    assert_eq!(middle("a b@0"), vec!["b@0", "e@1@0"]);
}

#[test]
fn triangle_json_has_the_four_parts() {
    let a = alg("A3");
    let rg = RibbonGraph::build(&a).unwrap();
    let d = Dictionary::new(&a, &rg).unwrap();
    let t = PathTable::new(&a).unwrap();
    let v = ar_triangle(&d, &t, &obj(&a, "e@2@0")).unwrap().to_json(&a);
    assert_eq!(v["X"], "e@2@0");
    assert_eq!(v["Z"], "a b@-1");
    assert_eq!(v["E"].as_array().unwrap().len(), 2);
    assert!(v["maps"]["h"].is_object());
}

#[test]
fn bands_have_no_triangle_here() {
    let k = alg("kronecker");
    let rg = RibbonGraph::build(&k).unwrap();
    let d = Dictionary::new(&k, &rg).unwrap();
    let t = PathTable::new(&k).unwrap();
    assert!(ar_triangle(&d, &t, &obj(&k, "band(a ~b)@0 lambda=1 m=1")).is_err());
}
