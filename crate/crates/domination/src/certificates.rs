//! Certificates for the six domination variants and their validators.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// The six domination variants handled by the solvers and validators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Dominating,
    Total,
    Global,
    Restrained,
    TotalRestrained,
    Roman,
}

impl Variant {
    pub const ALL: [Variant; 6] = [
        Variant::Dominating,
        Variant::Total,
        Variant::Global,
        Variant::Restrained,
        Variant::TotalRestrained,
        Variant::Roman,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::Dominating => "dominating",
            Variant::Total => "total",
            Variant::Global => "global",
            Variant::Restrained => "restrained",
            Variant::TotalRestrained => "total_restrained",
            Variant::Roman => "roman",
        }
    }

    /// Conventional symbol for the parameter value.
    pub fn symbol(&self) -> &'static str {
        match self {
            Variant::Dominating => "gamma",
            Variant::Total => "gamma_t",
            Variant::Global => "gamma_g",
            Variant::Restrained => "gamma_r",
            Variant::TotalRestrained => "gamma_tr",
            Variant::Roman => "gamma_R",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Variant> {
        match s {
            "gamma" | "dominating" => Some(Variant::Dominating),
            "gamma_t" | "total" => Some(Variant::Total),
            "gamma_g" | "global" => Some(Variant::Global),
            "gamma_r" | "restrained" => Some(Variant::Restrained),
            "gamma_tr" | "total_restrained" => Some(Variant::TotalRestrained),
            "gamma_R" | "roman" => Some(Variant::Roman),
            _ => None,
        }
    }

    /// Total variants need minimum degree at least 1 for any certificate to exist.
    pub fn requires_min_degree_one(&self) -> bool {
        matches!(self, Variant::Total | Variant::TotalRestrained)
    }
}

/// A vertex assignment into `{0, 1, 2}` where every 0-vertex must have a
/// 2-neighbour. Level sets `D_0, D_1, D_2` partition the vertices and the
/// weight is `|D_1| + 2 |D_2|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RomanFunction {
    values: Vec<u8>,
}

impl RomanFunction {
    pub fn new(values: Vec<u8>) -> Result<Self> {
        if let Some(bad) = values.iter().position(|&v| v > 2) {
            return Err(Error::Param(format!(
                "roman assignment at vertex {bad} is {} (must be 0, 1 or 2)",
                values[bad]
            )));
        }
        Ok(RomanFunction { values })
    }

    pub fn constant(n: usize, value: u8) -> Self {
        RomanFunction::new(vec![value; n]).unwrap()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn value(&self, v: usize) -> u8 {
        self.values[v]
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn weight(&self) -> usize {
        self.values.iter().map(|&v| v as usize).sum()
    }

    /// Level sets `(D_0, D_1, D_2)`.
    pub fn level_sets(&self) -> (BitSet, BitSet, BitSet) {
        let n = self.values.len();
        let mut sets = (BitSet::new(n), BitSet::new(n), BitSet::new(n));
        for (v, &val) in self.values.iter().enumerate() {
            match val {
                0 => sets.0.insert(v),
                1 => sets.1.insert(v),
                _ => sets.2.insert(v),
            }
        }
        sets
    }
}

/// A checkable witness: a vertex set for the five set variants, or a
/// Roman dominating function.
#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    Set { variant: Variant, set: BitSet },
    Roman(RomanFunction),
}

impl Certificate {
    pub fn variant(&self) -> Variant {
        match self {
            Certificate::Set { variant, .. } => *variant,
            Certificate::Roman(_) => Variant::Roman,
        }
    }

    pub fn width(&self) -> usize {
        match self {
            Certificate::Set { set, .. } => set.width(),
            Certificate::Roman(f) => f.len(),
        }
    }

    /// Cardinality for set certificates, weight for Roman functions.
    pub fn size_or_weight(&self) -> usize {
        match self {
            Certificate::Set { set, .. } => set.len(),
            Certificate::Roman(f) => f.weight(),
        }
    }
}

// JSON schema: {"variant": "...", "set": [indices]} or
// {"variant": "roman", "assignment": [0..2 per vertex]}.
#[derive(Serialize, Deserialize)]
struct CertificateJson {
    variant: Variant,
    #[serde(skip_serializing_if = "Option::is_none")]
    set: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    assignment: Option<Vec<u8>>,
}

impl Certificate {
    pub fn to_json(&self) -> serde_json::Value {
        let j = match self {
            Certificate::Set { variant, set } => CertificateJson {
                variant: *variant,
                set: Some(set.to_vec()),
                assignment: None,
            },
            Certificate::Roman(f) => CertificateJson {
                variant: Variant::Roman,
                set: None,
                assignment: Some(f.values().to_vec()),
            },
        };
        serde_json::to_value(j).expect("certificate serialization cannot fail")
    }

    /// Parse a certificate for a graph of order `n`.
    pub fn from_json(value: &serde_json::Value, n: usize) -> Result<Certificate> {
        let j: CertificateJson = serde_json::from_value(value.clone())?;
        match (j.variant, j.set, j.assignment) {
            (Variant::Roman, None, Some(assignment)) => {
                if assignment.len() != n {
                    return Err(Error::WidthMismatch {
                        cert: assignment.len(),
                        graph: n,
                    });
                }
                Ok(Certificate::Roman(RomanFunction::new(assignment)?))
            }
            (Variant::Roman, _, _) => Err(Error::Param(
                "roman certificate requires an 'assignment' field".into(),
            )),
            (variant, Some(indices), None) => {
                if let Some(&bad) = indices.iter().find(|&&v| v >= n) {
                    return Err(Error::Param(format!(
                        "certificate vertex {bad} out of range (n = {n})"
                    )));
                }
                Ok(Certificate::Set {
                    variant,
                    set: BitSet::from_indices(n, &indices),
                })
            }
            _ => Err(Error::Param(
                "set certificate requires a 'set' field".into(),
            )),
        }
    }
}

/// Which defining clause a certificate violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    /// vertex outside the set has no neighbour in the set
    NotDominated,
    /// vertex has no neighbour in the set in the complement graph
    NotDominatedInComplement,
    /// vertex has no neighbour in the set (total condition)
    NoNeighborInSet,
    /// vertex outside the set has no neighbour outside the set
    NoOutsideNeighbor,
    /// 0-vertex has no neighbour assigned 2
    ZeroWithoutTwoNeighbor,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum Verdict {
    Valid,
    Invalid { witness: usize, clause: Clause },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// Check a certificate against its variant's defining conditions.
/// Invalid verdicts carry the lowest-index violating vertex.
pub fn check_certificate(g: &Graph, cert: &Certificate) -> Result<Verdict> {
    if cert.width() != g.n() {
        return Err(Error::WidthMismatch {
            cert: cert.width(),
            graph: g.n(),
        });
    }
    match cert {
        Certificate::Set { variant, set } => Ok(check_set(g, *variant, set)),
        Certificate::Roman(f) => Ok(check_roman(g, f)),
    }
}

fn check_set(g: &Graph, variant: Variant, set: &BitSet) -> Verdict {
    let n = g.n();
    let complement = matches!(variant, Variant::Global).then(|| g.complement());
    for v in 0..n {
        let in_set = set.contains(v);
        let dominated = in_set || g.neighbors(v).intersects(set);
        match variant {
            Variant::Dominating | Variant::Global | Variant::Restrained
                if !dominated =>
            {
                return Verdict::Invalid {
                    witness: v,
                    clause: Clause::NotDominated,
                }
            }
            _ => {}
        }
        if let Some(gbar) = &complement {
            if !in_set && !gbar.neighbors(v).intersects(set) {
                return Verdict::Invalid {
                    witness: v,
                    clause: Clause::NotDominatedInComplement,
                };
            }
        }
        if matches!(variant, Variant::Total | Variant::TotalRestrained)
            && !g.neighbors(v).intersects(set)
        {
            return Verdict::Invalid {
                witness: v,
                clause: if in_set {
                    Clause::NoNeighborInSet
                } else {
                    Clause::NotDominated
                },
            };
        }
        if matches!(variant, Variant::Restrained | Variant::TotalRestrained)
            && !in_set
            && g.neighbors(v).is_subset_of(set)
        {
            return Verdict::Invalid {
                witness: v,
                clause: Clause::NoOutsideNeighbor,
            };
        }
    }
    Verdict::Valid
}

fn check_roman(g: &Graph, f: &RomanFunction) -> Verdict {
    let (_, _, twos) = f.level_sets();
    for v in 0..g.n() {
        if f.value(v) == 0 && !g.neighbors(v).intersects(&twos) {
            return Verdict::Invalid {
                witness: v,
                clause: Clause::ZeroWithoutTwoNeighbor,
            };
        }
    }
    Verdict::Valid
}

/// Extend a seed set `s` to a Roman dominating function: 2 on `s`,
/// 0 on `N[s] - s`, 1 on `V - N[s]`. The result is always valid and
/// has weight `2|s| + |V - N[s]|`.
pub fn complete_roman(g: &Graph, s: &BitSet) -> RomanFunction {
    let covered = g.closed_neighborhood_of_set(s);
    let values = (0..g.n())
        .map(|v| {
            if s.contains(v) {
                2
            } else if covered.contains(v) {
                0
            } else {
                1
            }
        })
        .collect();
    RomanFunction { values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::graph::{complete, cycle, Graph};
    use crate::rng::Rng;

    fn set_cert(variant: Variant, n: usize, indices: &[usize]) -> Certificate {
        Certificate::Set {
            variant,
            set: BitSet::from_indices(n, indices),
        }
    }

    #[test]
    fn restrained_examples() {
        let c4 = cycle(4);
        let v = check_certificate(&c4, &set_cert(Variant::Restrained, 4, &[0, 1])).unwrap();
        assert!(v.is_valid());
        let c5 = cycle(5);
        let v = check_certificate(&c5, &set_cert(Variant::Restrained, 5, &[0, 2])).unwrap();
        assert_eq!(
            v,
            Verdict::Invalid {
                witness: 1,
                clause: Clause::NoOutsideNeighbor
            }
        );
    }

    #[test]
    fn all_ones_roman_is_valid() {
        let g = generate(&FamilySpec::Gnp { n: 9, p: 0.3 }, 5).unwrap();
        let cert = Certificate::Roman(RomanFunction::constant(9, 1));
        assert!(check_certificate(&g, &cert).unwrap().is_valid());
        assert_eq!(cert.size_or_weight(), 9);
    }

    #[test]
    fn global_fails_on_complete_graph_singleton() {
        let k5 = complete(5);
        let v = check_certificate(&k5, &set_cert(Variant::Global, 5, &[1])).unwrap();
        assert_eq!(
            v,
            Verdict::Invalid {
                witness: 0,
                clause: Clause::NotDominatedInComplement
            }
        );
    }

    #[test]
    fn full_set_verdicts() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap(); // K2 + K1
        assert!(check_certificate(&g, &set_cert(Variant::Dominating, 3, &[0, 1, 2]))
            .unwrap()
            .is_valid());
        // X = V is vacuously restrained
        assert!(check_certificate(&g, &set_cert(Variant::Restrained, 3, &[0, 1, 2]))
            .unwrap()
            .is_valid());
        // total fails on the isolated vertex
        let v = check_certificate(&g, &set_cert(Variant::Total, 3, &[0, 1, 2])).unwrap();
        assert_eq!(
            v,
            Verdict::Invalid {
                witness: 2,
                clause: Clause::NoNeighborInSet
            }
        );
    }

    #[test]
    fn complete_roman_c4() {
        let c4 = cycle(4);
        let f = complete_roman(&c4, &BitSet::from_indices(4, &[0]));
        assert_eq!(f.values(), &[2, 0, 1, 0]);
        assert_eq!(f.weight(), 3);
    }

    #[test]
    fn complete_roman_extremes() {
        let k3 = complete(3);
        let f = complete_roman(&k3, &BitSet::new(3));
        assert_eq!(f.values(), &[1, 1, 1]);
        let f = complete_roman(&k3, &BitSet::full(3));
        assert_eq!(f.weight(), 6);
    }

    #[test]
    fn complete_roman_always_valid_with_exact_weight() {
        let mut rng = Rng::new(2024);
        for trial in 0..200 {
            let n = 4 + (trial % 13);
            let g = generate(&FamilySpec::Gnp { n, p: 0.4 }, rng.next_u64()).unwrap();
            let mut s = BitSet::new(n);
            for v in 0..n {
                if rng.next_bool(0.3) {
                    s.insert(v);
                }
            }
            let f = complete_roman(&g, &s);
            assert!(check_certificate(&g, &Certificate::Roman(f.clone()))
                .unwrap()
                .is_valid());
            let covered = g.closed_neighborhood_of_set(&s);
            assert_eq!(f.weight(), 2 * s.len() + (n - covered.len()));
        }
    }

    #[test]
    fn implication_structure_on_random_certificates() {
        let mut rng = Rng::new(55);
        for trial in 0..200 {
            let n = 3 + (trial % 10);
            let g = generate(&FamilySpec::Gnp { n, p: 0.5 }, rng.next_u64()).unwrap();
            let mut s = BitSet::new(n);
            for v in 0..n {
                if rng.next_bool(0.5) {
                    s.insert(v);
                }
            }
            let check = |variant| {
                check_certificate(&g, &Certificate::Set { variant, set: s.clone() })
                    .unwrap()
                    .is_valid()
            };
            if check(Variant::TotalRestrained) {
                assert!(check(Variant::Total));
                assert!(check(Variant::Restrained));
            }
            if check(Variant::Global) {
                assert!(check(Variant::Dominating));
            }
            // V(G) always dominates; it is total iff delta >= 1
            let full = Certificate::Set {
                variant: Variant::Dominating,
                set: BitSet::full(n),
            };
            assert!(check_certificate(&g, &full).unwrap().is_valid());
            let full_total = Certificate::Set {
                variant: Variant::Total,
                set: BitSet::full(n),
            };
            assert_eq!(
                check_certificate(&g, &full_total).unwrap().is_valid(),
                g.degree_profile().delta >= 1
            );
        }
    }

    #[test]
    fn width_mismatch_is_an_error() {
        let g = cycle(4);
        let cert = set_cert(Variant::Dominating, 5, &[0]);
        assert!(matches!(
            check_certificate(&g, &cert),
            Err(Error::WidthMismatch { .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let cert = set_cert(Variant::Restrained, 5, &[0, 3]);
        let j = cert.to_json();
        assert_eq!(j["variant"], "restrained");
        assert_eq!(Certificate::from_json(&j, 5).unwrap(), cert);
        let roman = Certificate::Roman(RomanFunction::new(vec![0, 1, 2]).unwrap());
        let j = roman.to_json();
        assert_eq!(Certificate::from_json(&j, 3).unwrap(), roman);
        assert!(Certificate::from_json(&j, 4).is_err());
    }
}
