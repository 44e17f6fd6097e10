//! Randomized bound-achieving constructions, their derandomizations by
//! conditional expectations, and the matching/degree-condition
//! constructions for the restrained variants.

use crate::bitset::BitSet;
use crate::certificates::{check_certificate, complete_roman, Certificate, Variant};
use crate::error::{Error, Result};
use crate::exact::exact_value;
use crate::graph::{DegreeProfile, Graph};
use crate::matching::max_matching;
use crate::rng::{derive_seed, Rng};
use serde::{Deserialize, Serialize};

/// Independent-sampling parameters for the randomized constructions.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SamplingPlan {
    pub p: f64,
    pub seed: u64,
    pub trials: u64,
}

impl SamplingPlan {
    fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::Param(format!("p must lie in [0, 1], got {}", self.p)));
        }
        if self.trials < 1 {
            return Err(Error::Param("trials must be at least 1".into()));
        }
        Ok(())
    }
}

/// Extra detail for the matching-based constructions.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct MatchingDetail {
    pub beta1: usize,
    /// edges of the matching meeting the base dominating set
    pub k: usize,
    pub base_size: usize,
    pub base_source: &'static str,
}

/// A constructed certificate together with the bound it is certified against.
#[derive(Clone, Debug)]
pub struct ConstructionOutcome {
    pub certificate: Certificate,
    pub size_or_weight: usize,
    /// bound value the outcome is guaranteed to respect, when one applies
    pub guarantee: Option<f64>,
    pub detail: Option<MatchingDetail>,
}

impl ConstructionOutcome {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "variant": self.certificate.variant().as_str(),
            "size_or_weight": self.size_or_weight,
            "guarantee": self.guarantee,
            "detail": self.detail.map(|d| serde_json::json!({
                "beta1": d.beta1,
                "k": d.k,
                "base_size": d.base_size,
                "base_source": d.base_source,
            })),
            "certificate": self.certificate.to_json(),
        })
    }
}

/// CLI-facing construction method identifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Method {
    RandomDom,
    RandomTotal,
    RandomGlobal,
    RandomRoman,
    DerandDom,
    DerandTotal,
    DerandGlobal,
    DerandRoman,
    RestrainedSmallOrder,
    TotalRestrainedSmallOrder,
    RestrainedMatching,
    TotalRestrainedMatching,
}

impl Method {
    pub const ALL: [Method; 12] = [
        Method::RandomDom,
        Method::RandomTotal,
        Method::RandomGlobal,
        Method::RandomRoman,
        Method::DerandDom,
        Method::DerandTotal,
        Method::DerandGlobal,
        Method::DerandRoman,
        Method::RestrainedSmallOrder,
        Method::TotalRestrainedSmallOrder,
        Method::RestrainedMatching,
        Method::TotalRestrainedMatching,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::RandomDom => "random-dom",
            Method::RandomTotal => "random-total",
            Method::RandomGlobal => "random-global",
            Method::RandomRoman => "random-roman",
            Method::DerandDom => "derand-dom",
            Method::DerandTotal => "derand-total",
            Method::DerandGlobal => "derand-global",
            Method::DerandRoman => "derand-roman",
            Method::RestrainedSmallOrder => "restrained-smallorder",
            Method::TotalRestrainedSmallOrder => "trestrained-smallorder",
            Method::RestrainedMatching => "restrained-matching",
            Method::TotalRestrainedMatching => "trestrained-matching",
        }
    }

    pub fn parse(s: &str) -> Option<Method> {
        Method::ALL.iter().copied().find(|m| m.as_str() == s)
    }

    /// Run this method on a graph with optional overrides.
    pub fn run(
        &self,
        g: &Graph,
        p: Option<f64>,
        seed: u64,
        trials: u64,
    ) -> Result<ConstructionOutcome> {
        let random = |variant| {
            let p = match p {
                Some(p) => p,
                None => default_p(&g.degree_profile(), variant)?,
            };
            random_construct(g, variant, &SamplingPlan { p, seed, trials })
        };
        match self {
            Method::RandomDom => random(Variant::Dominating),
            Method::RandomTotal => random(Variant::Total),
            Method::RandomGlobal => random(Variant::Global),
            Method::RandomRoman => random(Variant::Roman),
            Method::DerandDom => derandomized_construct(g, Variant::Dominating, p),
            Method::DerandTotal => derandomized_construct(g, Variant::Total, p),
            Method::DerandGlobal => derandomized_construct(g, Variant::Global, p),
            Method::DerandRoman => derandomized_construct(g, Variant::Roman, p),
            Method::RestrainedSmallOrder => restrained_small_order(g, Variant::Restrained),
            Method::TotalRestrainedSmallOrder => {
                restrained_small_order(g, Variant::TotalRestrained)
            }
            Method::RestrainedMatching => restrained_from_matching(g, Variant::Restrained),
            Method::TotalRestrainedMatching => {
                restrained_from_matching(g, Variant::TotalRestrained)
            }
        }
    }
}

impl TryFrom<String> for Method {
    type Error = String;
    fn try_from(s: String) -> std::result::Result<Self, String> {
        Method::parse(&s).ok_or_else(|| format!("unknown construction method '{s}'"))
    }
}

impl From<Method> for String {
    fn from(m: Method) -> String {
        m.as_str().to_string()
    }
}

fn require_sampled_variant(variant: Variant) -> Result<()> {
    match variant {
        Variant::Dominating | Variant::Total | Variant::Global | Variant::Roman => Ok(()),
        _ => Err(Error::Param(format!(
            "no sampling construction for the {} variant; use the small-order or matching constructions",
            variant.as_str()
        ))),
    }
}

/// The sampling probability minimizing each proof's expectation bound.
pub fn default_p(profile: &DegreeProfile, variant: Variant) -> Result<f64> {
    require_sampled_variant(variant)?;
    let delta = profile.delta as f64;
    let dp = profile.delta_prime as f64;
    match variant {
        Variant::Global => {
            if profile.delta_prime < 1 {
                return Err(Error::Param("global sampling needs delta' >= 1".into()));
            }
            Ok(1.0 - 1.0 / (2f64.powf(1.0 / dp) * (1.0 + dp).powf(1.0 / dp)))
        }
        Variant::Roman => {
            if profile.delta < 1 {
                return Err(Error::Param("roman sampling needs delta >= 1".into()));
            }
            Ok(1.0 - (2.0 / (1.0 + delta)).powf(1.0 / delta))
        }
        Variant::Dominating => {
            if profile.delta < 1 {
                return Err(Error::Param("dominating sampling needs delta >= 1".into()));
            }
            Ok(((delta + 1.0).ln() / (delta + 1.0)).min(1.0))
        }
        Variant::Total => {
            if profile.delta < 1 {
                return Err(Error::Param("total sampling needs delta >= 1".into()));
            }
            Ok((delta.ln() / delta).min(1.0))
        }
        _ => unreachable!(),
    }
}

/// The expectation bound each sampled construction is certified against.
pub fn theorem_rhs(profile: &DegreeProfile, n: usize, variant: Variant) -> Result<f64> {
    require_sampled_variant(variant)?;
    let n = n as f64;
    let delta = profile.delta as f64;
    let dp = profile.delta_prime as f64;
    match variant {
        Variant::Dominating => {
            if profile.delta < 1 {
                return Err(Error::Param("bound needs delta >= 1".into()));
            }
            Ok(((delta + 1.0).ln() + 1.0) / (delta + 1.0) * n)
        }
        Variant::Total => {
            if profile.delta < 1 {
                return Err(Error::Param("bound needs delta >= 1".into()));
            }
            Ok((delta.ln() + 1.0) / delta * n)
        }
        Variant::Global => {
            if profile.delta_prime < 1 {
                return Err(Error::Param("bound needs delta' >= 1".into()));
            }
            Ok((1.0 - dp / (2f64.powf(1.0 / dp) * (1.0 + dp).powf(1.0 + 1.0 / dp))) * n)
        }
        Variant::Roman => {
            if profile.delta < 1 {
                return Err(Error::Param("bound needs delta >= 1".into()));
            }
            Ok(2.0 * (1.0 - 2f64.powf(1.0 / delta) * delta / (1.0 + delta).powf(1.0 + 1.0 / delta)) * n)
        }
        _ => unreachable!(),
    }
}

/// Turn a sampled seed set `A` into a valid certificate by adding the
/// proof's repair sets; valid for every `A`.
fn realize(g: &Graph, gbar: Option<&Graph>, variant: Variant, a: &BitSet) -> Certificate {
    let n = g.n();
    match variant {
        Variant::Dominating => {
            let mut d = a.clone();
            d.union_with(&g.closed_neighborhood_of_set(a).inverted());
            Certificate::Set {
                variant,
                set: d,
            }
        }
        Variant::Global => {
            let gbar = gbar.expect("complement supplied for global realization");
            let mut d = a.clone();
            d.union_with(&g.closed_neighborhood_of_set(a).inverted());
            d.union_with(&gbar.closed_neighborhood_of_set(a).inverted());
            Certificate::Set { variant, set: d }
        }
        Variant::Total => {
            // every vertex with no neighbour in A adopts its lowest neighbour
            let mut d = a.clone();
            for v in 0..n {
                if !g.neighbors(v).intersects(a) {
                    let u = g
                        .neighbors(v)
                        .iter()
                        .next()
                        .expect("total construction requires delta >= 1");
                    d.insert(u);
                }
            }
            Certificate::Set { variant, set: d }
        }
        Variant::Roman => Certificate::Roman(complete_roman(g, a)),
        _ => unreachable!("realize is only called for sampled variants"),
    }
}

fn single_trial(g: &Graph, gbar: Option<&Graph>, variant: Variant, p: f64, seed: u64) -> Certificate {
    let mut rng = Rng::new(seed);
    let mut a = BitSet::new(g.n());
    for v in 0..g.n() {
        if rng.next_bool(p) {
            a.insert(v);
        }
    }
    realize(g, gbar, variant, &a)
}

/// Sizes (or Roman weights) of `trials` independent runs; used for
/// expectation checks.
pub fn trial_sizes(g: &Graph, variant: Variant, p: f64, seed: u64, trials: u64) -> Result<Vec<usize>> {
    require_sampled_variant(variant)?;
    if variant == Variant::Total && g.degree_profile().delta < 1 {
        return Err(Error::Param("total construction needs delta >= 1".into()));
    }
    let gbar = matches!(variant, Variant::Global).then(|| g.complement());
    let indices: Vec<u64> = (0..trials).collect();
    Ok(crate::indexed_map(indices, |t| {
        single_trial(g, gbar.as_ref(), variant, p, derive_seed(seed, t)).size_or_weight()
    }))
}

fn best_of_trials(
    g: &Graph,
    variant: Variant,
    plan: &SamplingPlan,
    parallel: bool,
) -> Result<ConstructionOutcome> {
    require_sampled_variant(variant)?;
    plan.validate()?;
    if variant == Variant::Total && g.degree_profile().delta < 1 {
        return Err(Error::Param("total construction needs delta >= 1".into()));
    }
    let gbar = matches!(variant, Variant::Global).then(|| g.complement());
    let run = |t: u64| {
        single_trial(g, gbar.as_ref(), variant, plan.p, derive_seed(plan.seed, t)).size_or_weight()
    };
    let sizes: Vec<usize> = if parallel {
        crate::indexed_map((0..plan.trials).collect(), run)
    } else {
        (0..plan.trials).map(run).collect()
    };
    // ties broken by trial index, so the winner is scheduling-independent
    let (best_trial, &best_size) = sizes
        .iter()
        .enumerate()
        .min_by_key(|(t, &s)| (s, *t))
        .expect("trials >= 1");
    let certificate = single_trial(
        g,
        gbar.as_ref(),
        variant,
        plan.p,
        derive_seed(plan.seed, best_trial as u64),
    );
    debug_assert_eq!(certificate.size_or_weight(), best_size);
    debug_assert!(check_certificate(g, &certificate).unwrap().is_valid());
    let guarantee = theorem_rhs(&g.degree_profile(), g.n(), variant).ok();
    Ok(ConstructionOutcome {
        certificate,
        size_or_weight: best_size,
        guarantee,
        detail: None,
    })
}

/// Best of `plan.trials` independent randomized constructions. Always
/// returns a valid certificate for every `p` and seed.
pub fn random_construct(g: &Graph, variant: Variant, plan: &SamplingPlan) -> Result<ConstructionOutcome> {
    best_of_trials(g, variant, plan, true)
}

/// Sequential reference path for the trial loop (used by the benchmarks).
pub fn random_construct_sequential(
    g: &Graph,
    variant: Variant,
    plan: &SamplingPlan,
) -> Result<ConstructionOutcome> {
    best_of_trials(g, variant, plan, false)
}

/// Per-vertex decision state during derandomization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexStatus {
    In,
    Out,
    Undecided,
}

/// Exact conditional expectation of the proof objective given a partial
/// assignment: `E|A| + E|B| (+ E|C|)` for the set variants, or
/// `2 E|A| + E|C|` for Roman.
pub fn conditional_expectation(
    g: &Graph,
    variant: Variant,
    statuses: &[VertexStatus],
    p: f64,
) -> f64 {
    let gbar = matches!(variant, Variant::Global).then(|| g.complement());
    cond_exp(g, gbar.as_ref(), variant, statuses, p)
}

fn cond_exp(
    g: &Graph,
    gbar: Option<&Graph>,
    variant: Variant,
    statuses: &[VertexStatus],
    p: f64,
) -> f64 {
    let n = g.n();
    assert_eq!(statuses.len(), n, "statuses sized to the graph order");
    let mut in_set = BitSet::new(n);
    let mut undecided = BitSet::new(n);
    for (v, s) in statuses.iter().enumerate() {
        match s {
            VertexStatus::In => in_set.insert(v),
            VertexStatus::Undecided => undecided.insert(v),
            VertexStatus::Out => {}
        }
    }
    let expected_a = in_set.len() as f64 + p * undecided.len() as f64;
    let q = 1.0 - p;
    // P[no member of `scope` lands in A]
    let miss = |scope: &BitSet| -> f64 {
        if scope.intersects(&in_set) {
            0.0
        } else {
            q.powi(scope.intersection_len(&undecided) as i32)
        }
    };
    let closed_miss_sum = |h: &Graph| -> f64 {
        (0..n)
            .map(|v| {
                let mut scope = h.neighbors(v).clone();
                scope.insert(v);
                miss(&scope)
            })
            .sum()
    };
    match variant {
        Variant::Dominating => expected_a + closed_miss_sum(g),
        Variant::Global => {
            expected_a
                + closed_miss_sum(g)
                + closed_miss_sum(gbar.expect("complement supplied for global"))
        }
        Variant::Roman => 2.0 * expected_a + closed_miss_sum(g),
        Variant::Total => {
            expected_a + (0..n).map(|v| miss(g.neighbors(v))).sum::<f64>()
        }
        _ => unreachable!("conditional expectation applies to sampled variants"),
    }
}

/// Derandomize by the method of conditional expectations: fix vertices in
/// index order, choosing the status that minimizes the conditional
/// objective; ties break toward Out. Returns the outcome and the
/// expectation after each fixing step (index 0 = the all-undecided value).
pub fn derandomize_with_trace(
    g: &Graph,
    variant: Variant,
    p: Option<f64>,
) -> Result<(ConstructionOutcome, Vec<f64>)> {
    require_sampled_variant(variant)?;
    let profile = g.degree_profile();
    let p = match p {
        Some(p) if (0.0..=1.0).contains(&p) => p,
        Some(p) => return Err(Error::Param(format!("p must lie in [0, 1], got {p}"))),
        None => default_p(&profile, variant)?,
    };
    if variant == Variant::Total && profile.delta < 1 {
        return Err(Error::Param("total construction needs delta >= 1".into()));
    }
    let gbar = matches!(variant, Variant::Global).then(|| g.complement());
    let n = g.n();
    let mut statuses = vec![VertexStatus::Undecided; n];
    let mut trace = vec![cond_exp(g, gbar.as_ref(), variant, &statuses, p)];
    for v in 0..n {
        statuses[v] = VertexStatus::In;
        let e_in = cond_exp(g, gbar.as_ref(), variant, &statuses, p);
        statuses[v] = VertexStatus::Out;
        let e_out = cond_exp(g, gbar.as_ref(), variant, &statuses, p);
        if e_in < e_out {
            statuses[v] = VertexStatus::In;
            trace.push(e_in);
        } else {
            trace.push(e_out);
        }
    }
    let mut a = BitSet::new(n);
    for (v, s) in statuses.iter().enumerate() {
        if *s == VertexStatus::In {
            a.insert(v);
        }
    }
    let certificate = realize(g, gbar.as_ref(), variant, &a);
    debug_assert!(check_certificate(g, &certificate).unwrap().is_valid());
    let outcome = ConstructionOutcome {
        size_or_weight: certificate.size_or_weight(),
        certificate,
        guarantee: theorem_rhs(&profile, n, variant).ok(),
        detail: None,
    };
    Ok((outcome, trace))
}

/// Deterministic construction meeting the corresponding expectation bound:
/// the final objective never exceeds the initial expectation, and the
/// realized certificate never exceeds the final objective.
pub fn derandomized_construct(
    g: &Graph,
    variant: Variant,
    p: Option<f64>,
) -> Result<ConstructionOutcome> {
    derandomize_with_trace(g, variant, p).map(|(outcome, _)| outcome)
}

/// Restrained (or total restrained) set from the small-order degree
/// condition `n < delta^2 / (ln delta + 1)`: the derandomized dominating
/// (resp. total) set is small enough that every outside vertex keeps an
/// outside neighbour.
pub fn restrained_small_order(g: &Graph, variant: Variant) -> Result<ConstructionOutcome> {
    let base_variant = match variant {
        Variant::Restrained => Variant::Dominating,
        Variant::TotalRestrained => Variant::Total,
        _ => {
            return Err(Error::Param(format!(
                "small-order construction applies to restrained variants, not {}",
                variant.as_str()
            )))
        }
    };
    let profile = g.degree_profile();
    let delta = profile.delta as f64;
    if profile.delta < 1 || (g.n() as f64) >= delta * delta / (delta.ln() + 1.0) {
        return Err(Error::Param(format!(
            "degree condition not met: need delta >= 1 and n < delta^2/(ln delta + 1) \
             (n = {}, delta = {})",
            g.n(),
            profile.delta
        )));
    }
    let base = derandomized_construct(g, base_variant, None)?;
    let certificate = match base.certificate {
        Certificate::Set { set, .. } => Certificate::Set { variant, set },
        Certificate::Roman(_) => unreachable!(),
    };
    assert!(
        check_certificate(g, &certificate)?.is_valid(),
        "degree condition guarantees the restrained property"
    );
    Ok(ConstructionOutcome {
        size_or_weight: certificate.size_or_weight(),
        certificate,
        guarantee: theorem_rhs(&profile, g.n(), base_variant).ok(),
        detail: None,
    })
}

const EXACT_BASE_GUARD: usize = 24;

/// Restrained (or total restrained) set from a base dominating set `D` and
/// a maximum matching `M`: add to `D` every vertex not lying on an `M`-edge
/// avoiding `D`. The result has size exactly `n - 2 (beta1 - k)` where `k`
/// counts `M`-edges meeting `D`.
pub fn restrained_from_matching(g: &Graph, variant: Variant) -> Result<ConstructionOutcome> {
    let base_variant = match variant {
        Variant::Restrained => Variant::Dominating,
        Variant::TotalRestrained => Variant::Total,
        _ => {
            return Err(Error::Param(format!(
                "matching construction applies to restrained variants, not {}",
                variant.as_str()
            )))
        }
    };
    let n = g.n();
    let (base_set, base_source) = if n <= EXACT_BASE_GUARD {
        let sol = exact_value(g, base_variant)?;
        match sol.witness {
            Certificate::Set { set, .. } => (set, "exact"),
            Certificate::Roman(_) => unreachable!(),
        }
    } else {
        let outcome = derandomized_construct(g, base_variant, None)?;
        match outcome.certificate {
            Certificate::Set { set, .. } => (set, "derandomized"),
            Certificate::Roman(_) => unreachable!(),
        }
    };
    let matching = max_matching(g);
    let beta1 = matching.size();
    let mut outside_endpoints = BitSet::new(n);
    let mut k = 0;
    for &(u, v) in matching.edges() {
        if base_set.contains(u) || base_set.contains(v) {
            k += 1;
        } else {
            outside_endpoints.insert(u);
            outside_endpoints.insert(v);
        }
    }
    let d_prime = outside_endpoints.inverted();
    debug_assert!(base_set.is_subset_of(&d_prime));
    let certificate = Certificate::Set {
        variant,
        set: d_prime,
    };
    assert!(
        check_certificate(g, &certificate)?.is_valid(),
        "matching construction yields a valid {} set",
        variant.as_str()
    );
    let size = certificate.size_or_weight();
    debug_assert_eq!(size, n - 2 * (beta1 - k));
    Ok(ConstructionOutcome {
        size_or_weight: size,
        guarantee: Some((n + 2 * base_set.len()) as f64 - 2.0 * beta1 as f64),
        detail: Some(MatchingDetail {
            beta1,
            k,
            base_size: base_set.len(),
            base_source,
        }),
        certificate,
    })
}
