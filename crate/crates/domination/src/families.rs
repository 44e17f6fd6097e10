//! Seeded graph family generators, including the extremal constructions
//! used to probe tightness of the global and Roman bounds.

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::rng::Rng;
use serde::{Deserialize, Serialize};

/// A graph family plus its numeric parameters.
///
/// `AlonGlobal(delta)`: clique `F = K_{floor(delta ln delta)}` on vertices
/// `0..|F|`, then `delta` attached vertices each adjacent to a uniformly
/// random `delta`-subset of `F`, then a disjoint `K_{delta+1}`;
/// `n = floor(delta ln delta) + 2 delta + 1`. `RomanExtremal(delta)` is the
/// same without the clique component, `n = floor(delta ln delta) + delta`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Gnp { n: usize, p: f64 },
    AlonGlobal { delta: usize },
    RomanExtremal { delta: usize },
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    DisjointUnion { parts: Vec<FamilySpec> },
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Gnp { .. } => "gnp",
            FamilySpec::AlonGlobal { .. } => "alon_global",
            FamilySpec::RomanExtremal { .. } => "roman_extremal",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::DisjointUnion { .. } => "disjoint_union",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::Gnp { n, p } => {
                if *n < 1 {
                    return Err(Error::Param("gnp requires n >= 1".into()));
                }
                if !(0.0..=1.0).contains(p) {
                    return Err(Error::Param(format!("gnp requires 0 <= p <= 1, got {p}")));
                }
            }
            FamilySpec::AlonGlobal { delta } | FamilySpec::RomanExtremal { delta } => {
                if *delta < 3 {
                    return Err(Error::Param(format!(
                        "{} requires delta >= 3, got {delta}",
                        self.name()
                    )));
                }
            }
            FamilySpec::Path { n } | FamilySpec::Complete { n } => {
                if *n < 1 {
                    return Err(Error::Param(format!("{} requires n >= 1", self.name())));
                }
            }
            FamilySpec::Cycle { n } => {
                if *n < 3 {
                    return Err(Error::Param("cycle requires n >= 3".into()));
                }
            }
            FamilySpec::DisjointUnion { parts } => {
                if parts.is_empty() {
                    return Err(Error::Param("disjoint_union requires at least one part".into()));
                }
                for p in parts {
                    p.validate()?;
                }
            }
        }
        Ok(())
    }
}

/// `floor(delta ln delta)`, the clique order in the extremal constructions.
pub fn clique_order(delta: usize) -> usize {
    (delta as f64 * (delta as f64).ln()).floor() as usize
}

/// Generate a graph of the given family. Identical `(spec, seed)` pairs
/// produce identical edge sets.
pub fn generate(spec: &FamilySpec, seed: u64) -> Result<Graph> {
    spec.validate()?;
    let mut rng = Rng::new(seed);
    Ok(generate_inner(spec, &mut rng))
}

fn generate_inner(spec: &FamilySpec, rng: &mut Rng) -> Graph {
    match spec {
        FamilySpec::Gnp { n, p } => {
            let mut g = Graph::empty(*n);
            for u in 0..*n {
                for v in u + 1..*n {
                    if rng.next_bool(*p) {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        }
        FamilySpec::AlonGlobal { delta } => {
            let core = attached_clique(*delta, rng);
            let f = clique_order(*delta);
            let n = f + 2 * delta + 1;
            let mut g = Graph::empty(n);
            copy_edges(&mut g, &core, 0);
            // disjoint K_{delta+1}, labelled last
            for u in f + delta..n {
                for v in u + 1..n {
                    g.add_edge(u, v);
                }
            }
            g
        }
        FamilySpec::RomanExtremal { delta } => attached_clique(*delta, rng),
        FamilySpec::Path { n } => graph::path(*n),
        FamilySpec::Cycle { n } => graph::cycle(*n),
        FamilySpec::Complete { n } => graph::complete(*n),
        FamilySpec::DisjointUnion { parts } => {
            let subs: Vec<Graph> = parts.iter().map(|p| generate_inner(p, rng)).collect();
            let n: usize = subs.iter().map(|g| g.n()).sum();
            let mut g = Graph::empty(n);
            let mut offset = 0;
            for sub in &subs {
                copy_edges(&mut g, sub, offset);
                offset += sub.n();
            }
            g
        }
    }
}

/// Clique `F = K_{floor(delta ln delta)}` plus `delta` attached vertices,
/// each adjacent to a uniform random `delta`-subset of `F`.
fn attached_clique(delta: usize, rng: &mut Rng) -> Graph {
    let f = clique_order(delta);
    debug_assert!(f >= delta, "delta >= 3 guarantees floor(delta ln delta) >= delta");
    let n = f + delta;
    let mut g = Graph::empty(n);
    for u in 0..f {
        for v in u + 1..f {
            g.add_edge(u, v);
        }
    }
    let clique: Vec<usize> = (0..f).collect();
    for i in 0..delta {
        let attached = f + i;
        for target in rng.choose_k(&clique, delta) {
            g.add_edge(attached, target);
        }
    }
    g
}

fn copy_edges(dst: &mut Graph, src: &Graph, offset: usize) {
    for (u, v) in src.edges() {
        dst.add_edge(u + offset, v + offset);
    }
}
