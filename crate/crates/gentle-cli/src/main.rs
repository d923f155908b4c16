//! `gentle`: surface models, morphisms, cones and translates of gentle
//! algebras from the command line.
//!
//! Presentations are read from a file (`-` for standard input). The field of
//! the linear-algebra oracle is chosen by `GENTLE_FIELD` (`rationals` or
//! `gf:<p>`). Exit codes: 0 success, 1 usage, 2 invalid input, 3 a
//! combinatorial prediction disagreed with the oracle.

mod selftest;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gentle::ag::{ag_paths, ag_surface};
use gentle::ar::inverse_ar_translate;
use gentle::complex::{cone_complex, homology_dims, is_isomorphic, HomSpace, PathTable};
use gentle::cones::mapping_cone;
use gentle::corpus::{generate, CorpusConfig};
use gentle::curves::Dictionary;
use gentle::field::{Field, FieldChoice, PrimeField, Rationals};
use gentle::morphisms::{realize, standard_basis};
use gentle::ribbon::{koszul_dual, surface_invariants, RibbonGraph};
use gentle::strings::Object;
use gentle::{Algebra, Error, Presentation};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "gentle",
    version,
    about = "Geometric models for gentle algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a presentation defines a finite-dimensional gentle algebra.
    Validate { file: PathBuf },
    /// Genus, Euler characteristic and boundary components of the surface.
    Surface {
        file: PathBuf,
        /// Print the surface model as JSON (the default).
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        /// Print the ribbon graph in DOT format.
        #[arg(long)]
        dot: bool,
    },
    /// The derived invariant, computed from paths and from the surface.
    Ag { file: PathBuf },
    /// The Koszul dual presentation.
    Koszul { file: PathBuf },
    /// Standard basis of Hom(X, Y) and the oracle dimension.
    Hom {
        file: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Cone of the k-th standard basis element of Hom(X, Y), checked against
    /// the cone computed from the chain map.
    Cone {
        file: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        index: usize,
    },
    /// Applies the inverse Auslander-Reiten translate `power` times.
    Tau {
        file: PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// Runs every cross-check over a generated corpus.
    Selftest {
        /// JSON file holding a corpus configuration; the flags below override it.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long)]
        max_arrows: Option<usize>,
        #[arg(long)]
        density: Option<f64>,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Why a command stopped; each variant has its own exit code.
enum Failure {
    Usage(String),
    Invalid(String),
    Invariant(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Invalid(_) => 2,
            Failure::Invariant(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Invalid(m) | Failure::Invariant(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotChainMap(_) => Failure::Invariant(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs `$body` with `$f` bound to the field named by `GENTLE_FIELD`.
macro_rules! with_field {
    (|$f:ident| $body:expr) => {
        match FieldChoice::from_env()? {
            FieldChoice::Rationals => {
                let $f = &Rationals;
                $body
            }
            FieldChoice::Prime(p) => {
                let $f = &PrimeField::new(p)?;
                $body
            }
        }
    };
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Validate { file } => validate(&file),
        Command::Surface { file, dot, .. } => surface(&file, dot),
        Command::Ag { file } => ag(&file),
        Command::Koszul { file } => koszul(&file),
        Command::Hom { file, from, to } => {
            let alg = load(&file)?;
            with_field!(|f| hom(f, &alg, &from, &to))
        }
        Command::Cone {
            file,
            from,
            to,
            index,
        } => {
            let alg = load(&file)?;
            with_field!(|f| cone(f, &alg, &from, &to, index))
        }
        Command::Tau {
            file,
            object,
            power,
        } => tau(&file, &object, power),
        Command::Selftest {
            corpus,
            max_vertices,
            max_arrows,
            density,
            count,
            seed,
        } => {
            let mut config = match corpus {
                Some(path) => serde_json::from_str(&read(&path)?)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
                None => CorpusConfig::default(),
            };
            let CorpusConfig {
                max_vertices: v,
                max_arrows: a,
                relation_density: r,
                count: c,
                seed: s,
            } = &mut config;
            *v = max_vertices.unwrap_or(*v);
            *a = max_arrows.unwrap_or(*a);
            *r = density.unwrap_or(*r);
            *c = count.unwrap_or(*c);
            *s = seed.unwrap_or(*s);
            let algebras = generate(&config).map_err(|e| Failure::Usage(e.to_string()))?;
            with_field!(|f| selftest_report(f, &config, &algebras))
        }
    }
}

fn read(path: &PathBuf) -> std::result::Result<String, Failure> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn load(path: &PathBuf) -> std::result::Result<Algebra, Failure> {
    Ok(Algebra::parse(&read(path)?)?)
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("JSON values always serialize")
    );
}

fn validate(path: &PathBuf) -> Outcome {
    let p = Presentation::parse(&read(path)?)?;
    let violations = p.validate();
    if violations.is_empty() {
        println!("ok");
        return Ok(());
    }
    for v in &violations {
        println!("{v}");
    }
    Err(Failure::Invalid(format!(
        "{} violation(s)",
        violations.len()
    )))
}

fn surface(path: &PathBuf, dot: bool) -> Outcome {
    let alg = load(path)?;
    if dot {
        print!("{}", RibbonGraph::build(&alg)?.to_dot(&alg));
    } else {
        print_json(&json!(surface_invariants(&alg)?));
    }
    Ok(())
}

fn ag(path: &PathBuf) -> Outcome {
    let alg = load(path)?;
    let by_paths = ag_paths(&alg);
    let by_surface = ag_surface(&alg)?;
    let agreement = by_paths == by_surface;
    print_json(&json!({
        "pairs": by_paths.pairs(),
        "surface_pairs": by_surface.pairs(),
        "agreement": agreement,
    }));
    if agreement {
        Ok(())
    } else {
        Err(Failure::Invariant(
            "the two computations of the invariant disagree".into(),
        ))
    }
}

fn koszul(path: &PathBuf) -> Outcome {
    let alg = load(path)?;
    let dual = koszul_dual(&alg);
    if !dual.finite_dimensional {
        println!("# infinite-dimensional: relation-free cycle");
    }
    print!("{}", dual.presentation.to_text());
    Ok(())
}

fn object(alg: &Algebra, text: &str) -> std::result::Result<Object, Failure> {
    Ok(Object::parse(alg, text)?)
}

fn hom<F: Field>(field: &F, alg: &Algebra, from: &str, to: &str) -> Outcome {
    let (x, y) = (object(alg, from)?, object(alg, to)?);
    let paths = PathTable::new(alg)?;
    let basis = standard_basis(alg, &paths, &x, &y)?;
    let (cx, cy) = (x.complex(), y.complex());
    let space = HomSpace::new(field, alg, &paths, &cx, &cy);
    let mut vecs = Vec::new();
    for m in &basis {
        vecs.push(space.vector(&realize(alg, &x, &y, m)?)?);
    }
    let independent = space.rank_mod_homotopy(&vecs) == basis.len();
    let agreement = independent && basis.len() == space.dim();
    let descriptors: Vec<_> = basis.iter().map(|m| m.descriptor(alg, &x, &y)).collect();
    print_json(&json!({
        "from": x.format(alg),
        "to": y.format(alg),
        "basis": descriptors,
        "oracle_dim": space.dim(),
        "independent": independent,
        "agreement": agreement,
    }));
    if agreement {
        Ok(())
    } else {
        Err(Failure::Invariant(
            "standard basis disagrees with the oracle".into(),
        ))
    }
}

fn cone<F: Field>(field: &F, alg: &Algebra, from: &str, to: &str, index: usize) -> Outcome {
    let (x, y) = (object(alg, from)?, object(alg, to)?);
    let paths = PathTable::new(alg)?;
    let basis = standard_basis(alg, &paths, &x, &y)?;
    let m = basis.get(index).ok_or_else(|| {
        Failure::Usage(format!(
            "index {index} out of range: Hom has {} basis elements",
            basis.len()
        ))
    })?;
    let predicted = mapping_cone(alg, &x, &y, m)?;
    let raw = cone_complex(&x.complex(), &y.complex(), &realize(alg, &x, &y, m)?);
    let pc = predicted.complex();
    let isomorphic = is_isomorphic(field, alg, &paths, &pc, &raw);
    let homology =
        homology_dims(field, alg, &paths, &pc) == homology_dims(field, alg, &paths, &raw);
    let verified = isomorphic && homology;
    let mut out = predicted.to_json(alg);
    out["morphism"] = json!(m.descriptor(alg, &x, &y));
    out["verified"] = json!(verified);
    print_json(&out);
    if verified {
        Ok(())
    } else {
        Err(Failure::Invariant(
            "predicted cone is not isomorphic to the computed cone".into(),
        ))
    }
}

fn tau(path: &PathBuf, text: &str, power: u32) -> Outcome {
    let alg = load(path)?;
    let rg = RibbonGraph::build(&alg)?;
    let dict = Dictionary::new(&alg, &rg)?;
    let mut x = object(&alg, text)?;
    for _ in 0..power {
        x = inverse_ar_translate(&dict, &x)?;
    }
    println!("{}", x.canonical().format(&alg));
    Ok(())
}

fn selftest_report<F: Field>(field: &F, config: &CorpusConfig, algebras: &[Algebra]) -> Outcome {
    let report = selftest::run(field, config, algebras);
    print_json(&json!(report));
    if report.ok {
        Ok(())
    } else {
        Err(Failure::Invariant("selftest found failures".into()))
    }
}
