//! The Avella-Alaminos–Geiss invariant, computed by the original alternation
//! of maximal paths and forbidden threads and, independently, from the
//! boundary components of the ribbon surface.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::{Algebra, Path};
use crate::error::Result;
use crate::ribbon::RibbonGraph;

/// A multiset of `(k, l)` pairs, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct AgInvariant(pub Vec<(usize, usize)>);

impl AgInvariant {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort();
        AgInvariant(pairs)
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.0
    }
}

/// Runs the path/thread alternation, seeding each run with the least element
/// of `M̄` not yet visited, then appends `(0, n)` for every full relation cycle.
pub fn ag_paths(alg: &Algebra) -> AgInvariant {
    ag_paths_seeded(alg, |unvisited| unvisited[0])
}

/// The same algorithm with a caller-chosen seed: `choose` receives the
/// indices of the unvisited elements of `M̄`, in order, and returns one of them.
pub fn ag_paths_seeded(alg: &Algebra, mut choose: impl FnMut(&[usize]) -> usize) -> AgInvariant {
    let mbar = alg.maximal_paths().all();
    let ft = alg.forbidden_threads();
    // Threads are extended by the admitted trivial threads F₀.
    let mut threads = ft.threads.clone();
    threads.extend(ft.trivial.iter().map(|&v| Path::trivial(v)));
    let thread_after = |h: &Path| -> Path {
        threads
            .iter()
            .find(|f| {
                !f.is_trivial() && f.end() == h.end() && (h.is_trivial() || f.last() != h.last())
            })
            .cloned()
            .unwrap_or_else(|| Path::trivial(h.end()))
    };
    let path_after = |f: &Path| -> Path {
        mbar.iter()
            .find(|m| {
                !m.is_trivial()
                    && m.start() == f.start()
                    && (f.is_trivial() || m.first() != f.first())
            })
            .cloned()
            .unwrap_or_else(|| Path::trivial(f.start()))
    };
    let mut visited = BTreeSet::new();
    let mut pairs = Vec::new();
    loop {
        let unvisited: Vec<usize> = (0..mbar.len()).filter(|i| !visited.contains(i)).collect();
        if unvisited.is_empty() {
            break;
        }
        let seed = choose(&unvisited);
        let h0 = mbar[seed].clone();
        let (mut h, mut k, mut l) = (h0.clone(), 0, 0);
        loop {
            let idx = mbar
                .iter()
                .position(|m| *m == h)
                .expect("alternation stays inside M̄");
            visited.insert(idx);
            let f = thread_after(&h);
            l += f.len();
            h = path_after(&f);
            k += 1;
            assert!(k <= mbar.len(), "alternation does not close up");
            if h == h0 {
                break;
            }
        }
        pairs.push((k, l));
    }
    for c in &ft.cycles {
        pairs.push((0, c.len()));
    }
    AgInvariant::new(pairs)
}

/// Reads the invariant off the surface: `(b, l − b)` for each boundary
/// component with `b` marked points and `l` laminate endpoints.
pub fn ag_surface(alg: &Algebra) -> Result<AgInvariant> {
    if alg.is_degenerate() {
        return Ok(AgInvariant::new(vec![(1, 0)]));
    }
    let g = RibbonGraph::build(alg)?;
    Ok(AgInvariant::new(
        g.faces()
            .iter()
            .map(|f| (f.marked, f.corners.len() - f.marked))
            .collect(),
    ))
}

/// For every marked boundary component, `Σ (k_j − 2)` over the polygons cut
/// out by the lamination along it. Each boundary segment between consecutive
/// marked points lies in one such polygon, whose unmarked corners are the
/// arrows of a forbidden thread, so `k_j − 2` is that corner count. Returned
/// per face, in face order, `None` for unmarked faces.
pub fn polygon_sums(alg: &Algebra) -> Result<Vec<Option<usize>>> {
    let g = RibbonGraph::build(alg)?;
    Ok(g.faces()
        .iter()
        .map(|f| {
            if f.marked == 0 {
                return None;
            }
            let start = f
                .corners
                .iter()
                .position(|&h| g.is_marked_corner(h))
                .unwrap();
            let mut total = 0;
            let mut run = 0;
            for i in 1..=f.corners.len() {
                let h = f.corners[(start + i) % f.corners.len()];
                if g.is_marked_corner(h) {
                    total += run;
                    run = 0;
                } else {
                    run += 1;
                }
            }
            Some(total)
        })
        .collect())
}

pub fn same_ag(a: &Algebra, b: &Algebra) -> bool {
    ag_paths(a) == ag_paths(b)
}
