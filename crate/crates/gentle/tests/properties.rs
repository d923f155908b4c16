//! Property tests over randomly generated gentle algebras and objects.

use gentle::ag::{ag_paths, ag_paths_seeded, ag_surface};
use gentle::complex::{HomSpace, PathTable};
use gentle::corpus::{generate, named, CorpusConfig};
use gentle::curves::{Dictionary, InfiniteString, Tail};
use gentle::field::Rationals;
use gentle::ribbon::{
    isomorphic_fixing_vertices, koszul_dual, pi1_rank_check, surface_invariants, RibbonGraph,
};
use gentle::strings::{enumerate_bands, GradedBand, GradedString, HString, Object, Step};
use gentle::{Algebra, Presentation};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn draw(seed: u64, max_vertices: usize, density: f64) -> Vec<Algebra> {
    generate(&CorpusConfig {
        max_vertices,
        max_arrows: max_vertices + 4,
        relation_density: density,
        count: 4,
        seed,
    })
    .unwrap()
}

/// A reduced walk of at most `len` steps that forms a homotopy string.
fn walk(rng: &mut ChaCha8Rng, alg: &Algebra, len: usize) -> GradedString {
    loop {
        let start = rng.gen_range(0..alg.num_vertices());
        let mut steps: Vec<Step> = Vec::new();
        let mut at = start;
        for _ in 0..rng.gen_range(0..=len) {
            let next: Vec<Step> = alg
                .out_arrows(at)
                .iter()
                .map(|&a| Step {
                    arrow: a,
                    inverse: false,
                })
                .chain(alg.in_arrows(at).iter().map(|&a| Step {
                    arrow: a,
                    inverse: true,
                }))
                .filter(|t| steps.last() != Some(&t.reversed()))
                .collect();
            if next.is_empty() {
                break;
            }
            let t = next[rng.gen_range(0..next.len())];
            steps.push(t);
            at = t.to(alg);
        }
        if let Ok(s) = HString::from_steps(alg, start, &steps) {
            return GradedString::grade(s, rng.gen_range(-4..=4));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_presentations_are_gentle(seed in any::<u64>(), density in 0.0f64..=1.0) {
        for a in draw(seed, 8, density) {
            let text = a.presentation().to_text();
            let p = Presentation::parse(&text).unwrap();
            prop_assert!(p.validate().is_empty());
            prop_assert!(a.is_finite_dimensional());
            prop_assert!(a.is_connected());
        }
    }

    #[test]
    fn fundamental_group_rank_matches_betti(seed in any::<u64>()) {
        for a in draw(seed, 8, 0.5) {
            let (b, r) = pi1_rank_check(&a).unwrap();
            prop_assert_eq!(b, r);
        }
    }

    #[test]
    fn marked_points_and_laminate_ends_add_up(seed in any::<u64>()) {
        for a in draw(seed, 8, 0.5).into_iter().filter(|a| !a.is_degenerate()) {
            let s = surface_invariants(&a).unwrap();
            // Each laminate has two ends; every quiver vertex is a laminate.
            let ends: usize = s.faces.iter().map(|f| f.l).sum();
            prop_assert_eq!(ends, 2 * a.num_vertices());
            prop_assert_eq!(s.chi, 2 - 2 * s.genus as i64);
        }
    }

    #[test]
    fn derived_invariant_agrees_and_ignores_seeding(seed in any::<u64>(), pick in any::<u64>()) {
        for a in draw(seed, 8, 0.5) {
            let reference = ag_paths(&a);
            prop_assert_eq!(ag_surface(&a).unwrap(), reference.clone());
            let mut rng = ChaCha8Rng::seed_from_u64(pick);
            let other = ag_paths_seeded(&a, |free| free[rng.gen_range(0..free.len())]);
            prop_assert_eq!(other, reference);
        }
    }

    #[test]
    fn koszul_duality_is_an_involution(seed in any::<u64>()) {
        for a in draw(seed, 8, 0.5) {
            let d = koszul_dual(&a).presentation.build_locally_gentle().unwrap();
            let dd = koszul_dual(&d).presentation.build_locally_gentle().unwrap();
            prop_assert!(isomorphic_fixing_vertices(&a, &dd));
            let (sa, sd) = (surface_invariants(&a).unwrap(), surface_invariants(&d).unwrap());
            prop_assert_eq!(sa.genus, sd.genus);
            prop_assert_eq!(sa.boundary_components(), sd.boundary_components());
        }
    }

    #[test]
    fn ribbon_graph_recovers_the_presentation(seed in any::<u64>()) {
        for a in draw(seed, 8, 0.5).into_iter().filter(|a| !a.is_degenerate()) {
            let back = RibbonGraph::build(&a).unwrap().recover().build().unwrap();
            prop_assert!(isomorphic_fixing_vertices(&a, &back));
        }
    }

    #[test]
    fn strings_round_trip_through_arcs(seed in any::<u64>(), walk_seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(walk_seed);
        for a in draw(seed, 8, 0.5).into_iter().filter(|a| !a.is_degenerate()) {
            let rg = RibbonGraph::build(&a).unwrap();
            let d = Dictionary::new(&a, &rg).unwrap();
            for _ in 0..8 {
                let s = walk(&mut rng, &a, 10);
                let arc = d.arc_from_string(&s);
                prop_assert_eq!(arc.crossings.len(), s.string.len() + 1);
                let back = d.string_from_arc(&arc).unwrap();
                prop_assert_eq!(back.canonical(), s.canonical());
                // Shifting the object shifts every crossing's grading.
                let shifted = d.arc_from_string(&s.shift(3));
                let expected: Vec<i64> = arc.grading.iter().map(|g| g - 3).collect();
                prop_assert_eq!(shifted.grading, expected);
            }
        }
    }

    #[test]
    fn bands_round_trip_through_closed_curves(
        seed in any::<u64>(),
        num in 1i64..20,
        den in 1i64..7,
        m in 1usize..4,
        rot in 0usize..8,
    ) {
        for a in draw(seed, 6, 0.3).into_iter().filter(|a| !a.is_degenerate()) {
            let rg = RibbonGraph::build(&a).unwrap();
            let d = Dictionary::new(&a, &rg).unwrap();
            for b in enumerate_bands(&a, 6) {
                let k = rot % b.len();
                let g = GradedBand::grade(b, 1, BigRational::new(num.into(), den.into()), m)
                    .unwrap()
                    .rotate(k);
                let back = d.band_from_curve(&d.curve_from_band(&g)).unwrap();
                prop_assert_eq!(back.canonical(), g.canonical());
            }
        }
    }

    #[test]
    fn hom_dimensions_are_shift_invariant(seed in any::<u64>(), walk_seed in any::<u64>(), n in -3i64..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(walk_seed);
        for a in draw(seed, 5, 0.5) {
            let t = PathTable::new(&a).unwrap();
            let x = Object::String(walk(&mut rng, &a, 3));
            let y = Object::String(walk(&mut rng, &a, 3));
            let dim = |x: &Object, y: &Object| {
                HomSpace::new(&Rationals, &a, &t, &x.complex(), &y.complex()).dim()
            };
            prop_assert_eq!(dim(&x, &y), dim(&x.shift(n), &y.shift(n)));
        }
    }
}

#[test]
fn infinite_strings_round_trip_through_infinite_arcs() {
    let a = named("cycle3").unwrap();
    let rg = RibbonGraph::build(&a).unwrap();
    let d = Dictionary::new(&a, &rg).unwrap();
    let ix = |n: &str| a.arrow_ix(n).unwrap();
    let Object::String(core) = Object::parse(&a, "e@1@0").unwrap() else {
        panic!()
    };
    // c ends at 1, b c and a b are relations: an antipath wrapping forever.
    let s = InfiniteString {
        left: Some(Tail {
            pre: vec![],
            period: vec![ix("c"), ix("b"), ix("a")],
        }),
        core,
        right: None,
    };
    s.check(&a).unwrap();
    let back = d
        .infinite_from_arc(&d.arc_from_infinite(&s).unwrap())
        .unwrap();
    assert!(back.same(&s));
    let longer = s.truncate(&a, 4).unwrap();
    assert_eq!(longer.string.len(), 4);

    let unnormalized = Tail {
        pre: vec![ix("c")],
        period: vec![ix("b"), ix("a"), ix("c")],
    };
    assert_eq!(
        unnormalized.normalized(),
        Tail {
            pre: vec![],
            period: vec![ix("c"), ix("b"), ix("a")],
        }
    );
}
