//! Named small gentle algebras and a seeded random generator.
//!
//! Random draws build a connected quiver with in- and out-degree at most two,
//! then choose relations vertex by vertex. Where two arrows meet two arrows the
//! relations must form a perfect matching; where two meet one, exactly one pair
//! is a relation; where one meets one, the pair is a relation with the
//! configured density. Draws with a relation-free oriented cycle are rejected.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Presentation};
use crate::error::{Error, Result};

pub const A2: &str = "vertex 1 2\narrow a 1 2\n";
pub const A3: &str = "vertex 1 2 3\narrow a 1 2\narrow b 2 3\n";
pub const A3_REL: &str = "vertex 1 2 3\narrow a 1 2\narrow b 2 3\nrel a b\n";
pub const A4: &str = "vertex 1 2 3 4\narrow a1 1 2\narrow a2 2 3\narrow a3 3 4\n";
pub const A4_REL: &str =
    "vertex 1 2 3 4\narrow a1 1 2\narrow a2 2 3\narrow a3 3 4\nrel a1 a2\nrel a2 a3\n";
pub const KRONECKER: &str = "vertex 1 2\narrow a 1 2\narrow b 1 2\n";
pub const CYCLE3: &str =
    "vertex 1 2 3\narrow a 1 2\narrow b 2 3\narrow c 3 1\nrel a b\nrel b c\nrel c a\n";

/// Looks up a named algebra: `A2`, `A3`, `A3rel`, `A4`, `A4rel`, `kronecker`, `cycle3`.
pub fn named(name: &str) -> Option<Algebra> {
    let text = match name {
        "A2" => A2,
        "A3" => A3,
        "A3rel" => A3_REL,
        "A4" => A4,
        "A4rel" => A4_REL,
        "kronecker" => KRONECKER,
        "cycle3" => CYCLE3,
        _ => return None,
    };
    Some(Algebra::parse(text).expect("named algebras are gentle"))
}

/// The algebras on which morphisms, cones and triangles are swept exhaustively.
pub fn small_family() -> Vec<(&'static str, Algebra)> {
    ["A2", "A3rel", "A4rel", "kronecker", "cycle3"]
        .into_iter()
        .map(|n| (n, named(n).unwrap()))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusConfig {
    pub max_vertices: usize,
    pub max_arrows: usize,
    pub relation_density: f64,
    pub count: usize,
    pub seed: u64,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            max_vertices: 8,
            max_arrows: 12,
            relation_density: 0.5,
            count: 200,
            seed: 1,
        }
    }
}

/// Draws `count` connected finite-dimensional gentle algebras.
pub fn generate(config: &CorpusConfig) -> Result<Vec<Algebra>> {
    if config.max_vertices == 0 || !(0.0..=1.0).contains(&config.relation_density) {
        return Err(Error::Precondition(
            "need max_vertices ≥ 1 and relation_density in [0, 1]".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut out = Vec::with_capacity(config.count);
    let mut attempts = 0usize;
    while out.len() < config.count {
        attempts += 1;
        if attempts > 1000 * (config.count + 1) {
            return Err(Error::Precondition(
                "generator keeps drawing infinite-dimensional algebras".into(),
            ));
        }
        let p = draw(&mut rng, config);
        if let Ok(a) = p.build() {
            out.push(a);
        }
    }
    Ok(out)
}

fn draw(rng: &mut ChaCha8Rng, config: &CorpusConfig) -> Presentation {
    let n = rng.gen_range(1..=config.max_vertices);
    let mut outdeg = vec![0usize; n];
    let mut indeg = vec![0usize; n];
    let mut arrows: Vec<(usize, usize)> = Vec::new();
    // Spanning tree: attach each new vertex to an earlier one with spare degree.
    for v in 1..n {
        let mut cands: Vec<(usize, bool)> = Vec::new();
        for u in 0..v {
            if outdeg[u] < 2 {
                cands.push((u, true));
            }
            if indeg[u] < 2 {
                cands.push((u, false));
            }
        }
        let &(u, forward) = cands
            .choose(rng)
            .expect("a tree with degree ≤ 4 always has room");
        let (s, t) = if forward { (u, v) } else { (v, u) };
        outdeg[s] += 1;
        indeg[t] += 1;
        arrows.push((s, t));
    }
    let budget = config.max_arrows.max(arrows.len());
    let extra = rng.gen_range(0..=budget - arrows.len()).min(n + 1);
    for _ in 0..extra * 4 {
        if arrows.len() >= budget || arrows.len() >= n - 1 + extra {
            break;
        }
        let (s, t) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if outdeg[s] < 2 && indeg[t] < 2 {
            outdeg[s] += 1;
            indeg[t] += 1;
            arrows.push((s, t));
        }
    }
    let mut relations = Vec::new();
    for v in 0..n {
        let ins: Vec<usize> = (0..arrows.len()).filter(|&i| arrows[i].1 == v).collect();
        let outs: Vec<usize> = (0..arrows.len()).filter(|&i| arrows[i].0 == v).collect();
        match (ins.len(), outs.len()) {
            (2, 2) => {
                let flip = rng.gen_bool(0.5);
                relations.push((ins[0], outs[flip as usize]));
                relations.push((ins[1], outs[1 - flip as usize]));
            }
            (2, 1) => relations.push((ins[rng.gen_range(0..2)], outs[0])),
            (1, 2) => relations.push((ins[0], outs[rng.gen_range(0..2)])),
            (1, 1) if rng.gen_bool(config.relation_density) => {
                relations.push((ins[0], outs[0]));
            }
            _ => {}
        }
    }
    let name = |i: usize| format!("x{i}");
    let vname = |v: usize| format!("{}", v + 1);
    Presentation {
        vertices: (0..n).map(vname).collect(),
        arrows: arrows
            .iter()
            .enumerate()
            .map(|(i, &(s, t))| (name(i), vname(s), vname(t)))
            .collect(),
        relations: relations
            .into_iter()
            .map(|(a, b)| (name(a), name(b)))
            .collect(),
    }
}
