//! Cross-checks run over a generated corpus. Each algebra is checked on its own
//! worker; the report is assembled afterwards in corpus order, so the output
//! does not depend on scheduling.

use std::collections::BTreeMap;

use gentle::ag::{ag_paths, ag_surface};
use gentle::ar::{ar_triangle, inverse_ar_translate};
use gentle::complex::{cone_complex, is_isomorphic, HomSpace, PathTable};
use gentle::cones::mapping_cone;
use gentle::corpus::CorpusConfig;
use gentle::curves::Dictionary;
use gentle::field::Field;
use gentle::morphisms::{realize, standard_basis};
use gentle::ribbon::{
    isomorphic_fixing_vertices, koszul_dual, pi1_rank_check, surface_invariants, RibbonGraph,
};
use gentle::strings::{enumerate_bands, enumerate_strings, GradedBand, GradedString, Object};
use gentle::{Algebra, Presentation, Result};
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

/// Names of the checks, in report order.
pub const CHECKS: [&str; 10] = [
    "presentation-roundtrip",
    "betti-vs-surface",
    "ag-agreement",
    "koszul-involution",
    "koszul-surface",
    "string-arc-roundtrip",
    "band-curve-roundtrip",
    "hom-basis",
    "cone-iso",
    "ar-serre-and-triangles",
];

/// Hom, cone and triangle sweeps are limited to algebras this small.
const MORPHISM_MAX_VERTICES: usize = 6;
/// Objects per algebra in the morphism sweeps.
const MORPHISM_OBJECTS: usize = 10;

#[derive(Debug, Serialize)]
pub struct CheckTally {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Serialize)]
pub struct Failure {
    pub algebra: usize,
    pub check: &'static str,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub config: CorpusConfig,
    pub algebras: usize,
    pub checks: Vec<CheckTally>,
    pub failures: Vec<Failure>,
    pub ok: bool,
}

/// Outcomes of one algebra: per check, number of cases passed and the details
/// of failed cases.
#[derive(Default)]
struct Outcome {
    passed: BTreeMap<&'static str, usize>,
    failed: Vec<(&'static str, String)>,
}

impl Outcome {
    fn record(&mut self, check: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            *self.passed.entry(check).or_default() += 1;
        } else {
            self.failed.push((check, detail()));
        }
    }

    fn record_result(
        &mut self,
        check: &'static str,
        r: Result<bool>,
        detail: impl FnOnce() -> String,
    ) {
        match r {
            Ok(ok) => self.record(check, ok, detail),
            Err(e) => self.failed.push((check, format!("{}: {e}", detail()))),
        }
    }
}

/// Failure details kept in the report.
const MAX_FAILURES: usize = 50;

pub fn run<F: Field>(field: &F, config: &CorpusConfig, algebras: &[Algebra]) -> Report {
    let outcomes: Vec<Outcome> = algebras
        .par_iter()
        .map(|alg| check_algebra(field, alg))
        .collect();
    let mut checks: Vec<CheckTally> = CHECKS
        .iter()
        .map(|&name| CheckTally {
            name,
            passed: 0,
            failed: 0,
        })
        .collect();
    let mut failures = Vec::new();
    for (i, o) in outcomes.into_iter().enumerate() {
        for t in checks.iter_mut() {
            t.passed += o.passed.get(t.name).copied().unwrap_or(0);
        }
        for (check, detail) in o.failed {
            if let Some(t) = checks.iter_mut().find(|t| t.name == check) {
                t.failed += 1;
            }
            if failures.len() < MAX_FAILURES {
                failures.push(Failure {
                    algebra: i,
                    check,
                    detail: format!("{detail}\n{}", algebras[i].presentation().to_text()),
                });
            }
        }
    }
    let ok = checks.iter().all(|t| t.failed == 0);
    Report {
        config: config.clone(),
        algebras: algebras.len(),
        checks,
        failures,
        ok,
    }
}

fn check_algebra<F: Field>(field: &F, alg: &Algebra) -> Outcome {
    let mut out = Outcome::default();

    let text = alg.presentation().to_text();
    let reparsed = Presentation::parse(&text).map(|p| p.validate().is_empty());
    out.record_result("presentation-roundtrip", reparsed, || "reparse".into());

    let betti = pi1_rank_check(alg).map(|(b, r)| b == r);
    out.record_result("betti-vs-surface", betti, || "betti1 vs 2g+b-1".into());

    let ag = ag_surface(alg).map(|s| s == ag_paths(alg));
    out.record_result("ag-agreement", ag, || "paths vs surface".into());

    let dual = koszul_dual(alg);
    let twice = dual
        .presentation
        .build_locally_gentle()
        .map(|d| koszul_dual(&d).presentation.build_locally_gentle());
    let involution = match twice {
        Ok(Ok(dd)) => Ok(isomorphic_fixing_vertices(alg, &dd)),
        Ok(Err(e)) | Err(e) => Err(e),
    };
    out.record_result("koszul-involution", involution, || "(A^!)^! vs A".into());
    let surfaces = dual
        .presentation
        .build_locally_gentle()
        .and_then(|d| Ok((surface_invariants(alg)?, surface_invariants(&d)?)))
        .map(|(a, d)| a.genus == d.genus && a.boundary_components() == d.boundary_components());
    out.record_result("koszul-surface", surfaces, || {
        "genus and boundary of A^!".into()
    });

    // The one-vertex algebra has no laminates and hence no arcs to compare.
    if alg.is_degenerate() {
        return out;
    }
    let rg = match RibbonGraph::build(alg) {
        Ok(rg) => rg,
        Err(e) => {
            out.failed
                .push(("string-arc-roundtrip", format!("ribbon graph: {e}")));
            return out;
        }
    };
    let dict = match Dictionary::new(alg, &rg) {
        Ok(d) => d,
        Err(e) => {
            out.failed
                .push(("string-arc-roundtrip", format!("dictionary: {e}")));
            return out;
        }
    };
    let strings: Vec<GradedString> = enumerate_strings(alg, 3)
        .into_iter()
        .map(|s| GradedString::grade(s, 0))
        .collect();
    for s in &strings {
        let back = dict.string_from_arc(&dict.arc_from_string(s));
        out.record_result(
            "string-arc-roundtrip",
            back.map(|b| b.canonical() == s.canonical()),
            || s.format(alg),
        );
    }
    for b in enumerate_bands(alg, 6) {
        let g = GradedBand::grade(b, 0, BigRational::from_integer(2.into()), 1)
            .expect("band parameters are valid");
        let back = dict.band_from_curve(&dict.curve_from_band(&g));
        out.record_result(
            "band-curve-roundtrip",
            back.map(|b| b.canonical() == g.canonical()),
            || g.format(alg),
        );
    }

    if alg.num_vertices() > MORPHISM_MAX_VERTICES {
        return out;
    }
    let paths = match PathTable::new(alg) {
        Ok(t) => t,
        Err(e) => {
            out.failed.push(("hom-basis", format!("path table: {e}")));
            return out;
        }
    };
    let mut objects: Vec<Object> = enumerate_strings(alg, 1)
        .into_iter()
        .take(MORPHISM_OBJECTS)
        .map(|s| Object::String(GradedString::grade(s, 0)))
        .collect();
    for b in enumerate_bands(alg, 4).into_iter().take(2) {
        let g = GradedBand::grade(b, 0, BigRational::from_integer(3.into()), 1)
            .expect("band parameters are valid");
        objects.push(Object::Band(g));
    }
    let finite_gldim = alg.full_relation_cycles().is_empty();
    for x in &objects {
        for y0 in &objects {
            for d in -1..=1 {
                let y = y0.shift(d);
                check_pair(field, alg, &paths, x, &y, &mut out);
            }
        }
        if finite_gldim && !x.is_band() {
            check_ar(field, alg, &paths, &dict, x, &objects, &mut out);
        }
    }
    out
}

fn check_pair<F: Field>(
    field: &F,
    alg: &Algebra,
    paths: &PathTable,
    x: &Object,
    y: &Object,
    out: &mut Outcome,
) {
    let label = || format!("{} -> {}", x.format(alg), y.format(alg));
    let basis = match standard_basis(alg, paths, x, y) {
        Ok(b) => b,
        Err(e) => {
            out.failed.push(("hom-basis", format!("{}: {e}", label())));
            return;
        }
    };
    let (cx, cy) = (x.complex(), y.complex());
    let hom = HomSpace::new(field, alg, paths, &cx, &cy);
    let mut vecs = Vec::new();
    let mut realized = Vec::new();
    for m in &basis {
        match realize(alg, x, y, m).and_then(|f| Ok((hom.vector(&f)?, f))) {
            Ok((v, f)) => {
                vecs.push(v);
                realized.push(f);
            }
            Err(e) => {
                out.failed.push(("hom-basis", format!("{}: {e}", label())));
                return;
            }
        }
    }
    let ok = basis.len() == hom.dim() && hom.rank_mod_homotopy(&vecs) == basis.len();
    out.record("hom-basis", ok, || {
        format!("{}: basis {} oracle {}", label(), basis.len(), hom.dim())
    });
    for (k, (m, f)) in basis.iter().zip(&realized).enumerate() {
        let verdict = mapping_cone(alg, x, y, m).map(|c| {
            let raw = cone_complex(&cx, &cy, f);
            is_isomorphic(field, alg, paths, &c.complex(), &raw)
        });
        out.record_result("cone-iso", verdict, || format!("{} #{k}", label()));
    }
}

/// Serre duality `Hom(τ⁻¹X, Y) ≅ D Hom(Y, X[1])` on the sample, and the checks
/// of the Auslander-Reiten triangle starting at `x`.
fn check_ar<F: Field>(
    field: &F,
    alg: &Algebra,
    paths: &PathTable,
    dict: &Dictionary,
    x: &Object,
    objects: &[Object],
    out: &mut Outcome,
) {
    const CHECK: &str = "ar-serre-and-triangles";
    let z = match inverse_ar_translate(dict, x) {
        Ok(z) => z,
        Err(e) => {
            out.failed.push((CHECK, format!("{}: {e}", x.format(alg))));
            return;
        }
    };
    let x1 = x.shift(1).complex();
    for y0 in objects {
        for d in -1..=1 {
            let y = y0.shift(d).complex();
            let left = HomSpace::new(field, alg, paths, &z.complex(), &y).dim();
            let right = HomSpace::new(field, alg, paths, &y, &x1).dim();
            out.record(CHECK, left == right, || {
                format!(
                    "Serre: tau^-1 {} vs {}: {left} != {right}",
                    x.format(alg),
                    y0.shift(d).format(alg)
                )
            });
        }
    }
    let tri = ar_triangle(dict, paths, x).and_then(|t| t.check(alg, paths));
    out.record_result(CHECK, tri.map(|c| c.all()), || {
        format!("triangle at {}", x.format(alg))
    });
}
