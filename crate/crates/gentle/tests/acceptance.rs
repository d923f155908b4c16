//! The acceptance suite: eight criteria, one `PASS`/`FAIL` line each.
//!
//! Runs without the libtest harness so the verdict lines always reach the
//! output; the process fails when any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use gentle::ag::{ag_paths, ag_surface, AgInvariant};
use gentle::ar::{ar_triangle, inverse_ar_translate};
use gentle::complex::{cone_complex, homology_dims, is_isomorphic, HomSpace, PathTable};
use gentle::cones::mapping_cone;
use gentle::corpus::{generate, named, small_family, CorpusConfig};
use gentle::curves::Dictionary;
use gentle::field::Rationals;
use gentle::morphisms::{realize, standard_basis};
use gentle::ribbon::{isomorphic_fixing_vertices, koszul_dual, surface_invariants, RibbonGraph};
use gentle::strings::{
    enumerate_bands, enumerate_strings, Band, GradedBand, GradedString, HString, Object, Step,
};
use gentle::Algebra;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn corpus() -> Vec<Algebra> {
    generate(&CorpusConfig::default()).expect("default corpus generates")
}

fn rational(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn criterion_1() -> Verdict {
    for name in ["A4", "A4rel"] {
        let s = surface_invariants(&named(name).unwrap()).map_err(|e| e.to_string())?;
        ensure(
            s.genus == 0 && s.boundary_components() == 1 && s.marked_points() == 5,
            || format!("{name}: {s:?}"),
        )?;
    }
    Ok("A4 and A4 with relations: disc with 5 marked points".into())
}

fn criterion_2() -> Verdict {
    let algs = corpus();
    let (mut trees, mut annuli) = (0, 0);
    for a in &algs {
        let s = surface_invariants(a).map_err(|e| e.to_string())?;
        let (g, f) = (s.genus, s.boundary_components());
        ensure(a.betti1() == 2 * g + f - 1, || {
            format!(
                "betti1 {} vs g={g} f={f}\n{}",
                a.betti1(),
                a.presentation().to_text()
            )
        })?;
        match a.betti1() {
            0 => {
                trees += 1;
                ensure(g == 0 && f == 1, || "tree is not a disc".into())?;
            }
            1 => {
                annuli += 1;
                ensure(g == 0 && f == 2, || "one cycle is not an annulus".into())?;
            }
            _ => {}
        }
    }
    ensure(trees > 0 && annuli > 0, || {
        "corpus lacks trees or annuli".into()
    })?;
    Ok(format!(
        "{} algebras; {trees} discs, {annuli} annuli",
        algs.len()
    ))
}

fn criterion_3() -> Verdict {
    let algs = corpus();
    for a in &algs {
        let s = ag_surface(a).map_err(|e| e.to_string())?;
        ensure(s == ag_paths(a), || {
            format!("disagree on\n{}", a.presentation().to_text())
        })?;
    }
    let spots: [(&str, Vec<(usize, usize)>); 3] = [
        ("A4", vec![(5, 3)]),
        ("kronecker", vec![(1, 1), (1, 1)]),
        ("cycle3", vec![(0, 3), (3, 0)]),
    ];
    for (name, want) in spots {
        let a = named(name).unwrap();
        let got = ag_paths(&a);
        ensure(got == AgInvariant::new(want.clone()), || {
            format!("{name}: {:?}", got.pairs())
        })?;
    }
    Ok(format!("{} algebras agree; spot values match", algs.len()))
}

/// Objects swept on one algebra: strings of at most `letters` letters at base
/// zero, and for the Kronecker algebra its band with λ ∈ {1, 2}.
fn family_objects(name: &str, alg: &Algebra, letters: usize) -> Vec<Object> {
    let mut out: Vec<Object> = enumerate_strings(alg, letters)
        .into_iter()
        .map(|s| Object::String(GradedString::grade(s, 0)))
        .collect();
    if name == "kronecker" {
        for b in enumerate_bands(alg, 2) {
            for l in [1, 2] {
                out.push(Object::Band(
                    GradedBand::grade(b.clone(), 0, rational(l), 1).unwrap(),
                ));
            }
        }
    }
    out
}

fn criterion_4() -> Verdict {
    let q = Rationals;
    let mut pairs = 0;
    for (name, alg) in small_family() {
        let paths = PathTable::new(&alg).map_err(|e| e.to_string())?;
        let objs = family_objects(name, &alg, 4);
        for x in &objs {
            for y0 in &objs {
                for d in -3..=3 {
                    let y = y0.shift(d);
                    let basis = standard_basis(&alg, &paths, x, &y).map_err(|e| e.to_string())?;
                    let hom = HomSpace::new(&q, &alg, &paths, &x.complex(), &y.complex());
                    let mut vecs = Vec::new();
                    for m in &basis {
                        let f = realize(&alg, x, &y, m).map_err(|e| e.to_string())?;
                        vecs.push(hom.vector(&f).map_err(|e| e.to_string())?);
                    }
                    ensure(
                        basis.len() == hom.dim() && hom.rank_mod_homotopy(&vecs) == basis.len(),
                        || {
                            format!(
                                "{name}: {} -> {}: basis {} oracle {}",
                                x.format(&alg),
                                y.format(&alg),
                                basis.len(),
                                hom.dim()
                            )
                        },
                    )?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} Hom spaces match the oracle"))
}

fn criterion_5() -> Verdict {
    let q = Rationals;
    let mut cones = 0;
    for (name, alg) in small_family() {
        let paths = PathTable::new(&alg).map_err(|e| e.to_string())?;
        let objs = family_objects(name, &alg, 4);
        for x in &objs {
            for y0 in &objs {
                for d in -3..=3 {
                    let y = y0.shift(d);
                    let basis = standard_basis(&alg, &paths, x, &y).map_err(|e| e.to_string())?;
                    for m in &basis {
                        let predicted = mapping_cone(&alg, x, &y, m)
                            .map_err(|e| format!("{name}: {e}"))?
                            .complex();
                        let f = realize(&alg, x, &y, m).map_err(|e| e.to_string())?;
                        let raw = cone_complex(&x.complex(), &y.complex(), &f);
                        ensure(
                            is_isomorphic(&q, &alg, &paths, &predicted, &raw)
                                && homology_dims(&q, &alg, &paths, &predicted)
                                    == homology_dims(&q, &alg, &paths, &raw),
                            || {
                                format!(
                                    "{name}: cone of {:?} from {} to {}",
                                    m.kind,
                                    x.format(&alg),
                                    y.format(&alg)
                                )
                            },
                        )?;
                        cones += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{cones} cones match the raw cone"))
}

fn criterion_6() -> Verdict {
    let q = Rationals;
    // (a) bands are fixed.
    let mut bands = 0;
    for (_, alg) in small_family() {
        let rg = RibbonGraph::build(&alg).map_err(|e| e.to_string())?;
        let dict = Dictionary::new(&alg, &rg).map_err(|e| e.to_string())?;
        for b in enumerate_bands(&alg, 6) {
            for (l, m, base) in [(1, 1, 0), (2, 2, -1), (-3, 1, 2)] {
                let x = Object::Band(GradedBand::grade(b.clone(), base, rational(l), m).unwrap());
                let z = inverse_ar_translate(&dict, &x).map_err(|e| e.to_string())?;
                ensure(z == x, || format!("band {} moved", x.format(&alg)))?;
                bands += 1;
            }
        }
    }
    // (b) on hereditary A3, four inverse translates are the shift [2].
    let a3 = named("A3").unwrap();
    let rg = RibbonGraph::build(&a3).map_err(|e| e.to_string())?;
    let dict = Dictionary::new(&a3, &rg).map_err(|e| e.to_string())?;
    let paths = PathTable::new(&a3).map_err(|e| e.to_string())?;
    let strings = enumerate_strings(&a3, 4);
    for s in &strings {
        let x = Object::String(GradedString::grade(s.clone(), 0));
        let mut z = x.clone();
        for _ in 0..4 {
            z = inverse_ar_translate(&dict, &z).map_err(|e| e.to_string())?;
        }
        ensure(
            is_isomorphic(&q, &a3, &paths, &z.complex(), &x.shift(2).complex()),
            || format!("A3: {} goes to {}", x.format(&a3), z.format(&a3)),
        )?;
    }
    // (c) Auslander-Reiten triangles in the family.
    let mut triangles = 0;
    for (name, alg) in small_family() {
        if !alg.full_relation_cycles().is_empty() {
            continue;
        }
        let rg = RibbonGraph::build(&alg).map_err(|e| e.to_string())?;
        let dict = Dictionary::new(&alg, &rg).map_err(|e| e.to_string())?;
        let paths = PathTable::new(&alg).map_err(|e| e.to_string())?;
        for s in enumerate_strings(&alg, 4) {
            let x = Object::String(GradedString::grade(s, 0));
            let checks = ar_triangle(&dict, &paths, &x)
                .and_then(|t| t.check(&alg, &paths))
                .map_err(|e| format!("{name}: {}: {e}", x.format(&alg)))?;
            ensure(checks.all(), || {
                format!("{name}: triangle at {}: {checks:?}", x.format(&alg))
            })?;
            triangles += 1;
        }
    }
    Ok(format!(
        "{bands} bands fixed; {} A3 orbits close; {triangles} triangles",
        strings.len()
    ))
}

/// A random homotopy string: a reduced walk, redrawn until the walk is a
/// string of at most six letters.
fn random_string(rng: &mut ChaCha8Rng, alg: &Algebra) -> GradedString {
    loop {
        let start = rng.gen_range(0..alg.num_vertices());
        let len = rng.gen_range(0..=8);
        let mut steps: Vec<Step> = Vec::new();
        let mut at = start;
        for _ in 0..len {
            let mut next: Vec<Step> = alg
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
                .collect();
            next.retain(|t| steps.last() != Some(&t.reversed()));
            if next.is_empty() {
                break;
            }
            let t = next[rng.gen_range(0..next.len())];
            steps.push(t);
            at = t.to(alg);
        }
        if let Ok(s) = HString::from_steps(alg, start, &steps) {
            if s.len() <= 6 {
                return GradedString::grade(s, rng.gen_range(-5..=5));
            }
        }
    }
}

fn criterion_7() -> Verdict {
    let algs: Vec<Algebra> = corpus()
        .into_iter()
        .filter(|a| !a.is_degenerate())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let alg = &algs[rng.gen_range(0..algs.len())];
        let rg = RibbonGraph::build(alg).map_err(|e| e.to_string())?;
        let dict = Dictionary::new(alg, &rg).map_err(|e| e.to_string())?;
        let s = random_string(&mut rng, alg);
        let back = dict
            .string_from_arc(&dict.arc_from_string(&s))
            .map_err(|e| e.to_string())?;
        ensure(back.canonical() == s.canonical(), || {
            format!("{} came back as {}", s.format(alg), back.format(alg))
        })?;
    }
    let with_bands: Vec<(&Algebra, Vec<Band>)> = algs
        .iter()
        .map(|a| (a, enumerate_bands(a, 8)))
        .filter(|(_, b)| !b.is_empty())
        .collect();
    for _ in 0..1000 {
        let (alg, bands) = &with_bands[rng.gen_range(0..with_bands.len())];
        let rg = RibbonGraph::build(alg).map_err(|e| e.to_string())?;
        let dict = Dictionary::new(alg, &rg).map_err(|e| e.to_string())?;
        let band = bands[rng.gen_range(0..bands.len())].clone();
        let k = rng.gen_range(0..band.len());
        let lambda = BigRational::new(rng.gen_range(1..=9).into(), rng.gen_range(1..=4).into());
        let g = GradedBand::grade(band, rng.gen_range(-5..=5), lambda, rng.gen_range(1..=3))
            .map_err(|e| e.to_string())?
            .rotate(k);
        let back = dict
            .band_from_curve(&dict.curve_from_band(&g))
            .map_err(|e| e.to_string())?;
        ensure(back.canonical() == g.canonical(), || {
            format!("{} came back as {}", g.format(alg), back.format(alg))
        })?;
    }
    Ok("1000 strings and 1000 bands round-trip".into())
}

fn criterion_8() -> Verdict {
    let algs = corpus();
    let mut finite = 0;
    for a in &algs {
        let dual = koszul_dual(a);
        let d = dual
            .presentation
            .build_locally_gentle()
            .map_err(|e| e.to_string())?;
        let (sa, sd) = (
            surface_invariants(a).map_err(|e| e.to_string())?,
            surface_invariants(&d).map_err(|e| e.to_string())?,
        );
        ensure(
            sa.genus == sd.genus && sa.boundary_components() == sd.boundary_components(),
            || format!("surfaces differ for\n{}", a.presentation().to_text()),
        )?;
        if dual.finite_dimensional {
            finite += 1;
            let dd = koszul_dual(&d)
                .presentation
                .build_locally_gentle()
                .map_err(|e| e.to_string())?;
            ensure(isomorphic_fixing_vertices(a, &dd), || {
                format!("double dual differs for\n{}", a.presentation().to_text())
            })?;
        }
    }
    let c3 = named("cycle3").unwrap();
    let dual = koszul_dual(&c3);
    ensure(!dual.finite_dimensional, || {
        "cycle3 dual flagged finite".into()
    })?;
    let d = dual
        .presentation
        .build_locally_gentle()
        .map_err(|e| e.to_string())?;
    ensure(
        d.num_arrows() == 3 && d.relations().is_empty() && !d.is_finite_dimensional(),
        || "cycle3 dual is not the relation-free 3-cycle".into(),
    )?;
    ensure(dual.presentation.build().is_err(), || {
        "relation-free 3-cycle accepted as finite-dimensional".into()
    })?;
    Ok(format!(
        "{} algebras; {finite} involutions; cycle3 dual is relation-free",
        algs.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("surfaces of A4", criterion_1),
        (
            "discs, annuli and the rank of the fundamental group",
            criterion_2,
        ),
        ("two computations of the derived invariant", criterion_3),
        ("standard basis against the oracle", criterion_4),
        ("cones against the raw cone", criterion_5),
        ("inverse translate and triangles", criterion_6),
        ("curve dictionary round trips", criterion_7),
        ("Koszul duality", criterion_8),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(note) => println!("criterion {}: PASS ({title}: {note}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL ({title}: {why}) [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
