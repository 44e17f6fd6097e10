//! Catalog of closed-form bounds on the six domination parameters, with
//! applicability predicates, an audit that checks exact values against
//! every applicable bound, and the concentration-point evaluator for the
//! domination number of dense random graphs.

use crate::certificates::Variant;
use crate::error::{Error, Result};
use crate::exact::exact_value;
use crate::graph::Graph;
use crate::matching::max_matching;
use serde::Serialize;

/// Graph parameters consumed by the bound evaluators.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct BoundParams {
    pub n: usize,
    pub delta: usize,
    pub big_delta: usize,
    pub delta_bar: usize,
    pub big_delta_bar: usize,
    pub delta_prime: usize,
    pub beta1: usize,
    pub connected: bool,
    pub connected_bar: bool,
}

impl BoundParams {
    pub fn from_graph(g: &Graph) -> BoundParams {
        let profile = g.degree_profile();
        BoundParams {
            n: g.n(),
            delta: profile.delta,
            big_delta: profile.big_delta,
            delta_bar: profile.delta_bar,
            big_delta_bar: profile.big_delta_bar,
            delta_prime: profile.delta_prime,
            beta1: max_matching(g).size(),
            connected: g.is_connected(),
            connected_bar: g.complement().is_connected(),
        }
    }

    /// Perfect matching: all vertices covered, all but one if n is odd.
    pub fn has_perfect_matching(&self) -> bool {
        self.beta1 == self.n / 2
    }
}

/// How a bound constrains its parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Upper,
    Lower,
    Equality,
    Disjunction,
    Sandwich,
    Informational,
}

/// Whether a failed check is a hard inconsistency or advisory.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    Failure,
    Warning,
}

/// Right-hand side of an evaluated bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Rhs {
    Value(f64),
    Descriptor(&'static str),
}

/// One evaluated bound.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub bound_id: &'static str,
    pub applicable: bool,
    /// precondition summary: why the bound applies, or which check failed
    pub reason: String,
    pub rhs: Option<Rhs>,
    pub kind: BoundKind,
    pub severity: Severity,
    /// the constraint in plain form
    pub statement: &'static str,
}

/// All catalog identifiers, in evaluation order.
pub const BOUND_IDS: [&str; 24] = [
    "thm1-dom",
    "thm2-extremal",
    "alon-hypergraph",
    "thm3-global-eq",
    "thm4-global-disj",
    "thm5-global",
    "thm6-roman-sandwich",
    "thm7-roman-lb",
    "thm8-restrained",
    "thm9-trestrained",
    "thm-main1-global",
    "cor2-global",
    "thm-main-roman",
    "cor1-roman",
    "prop2-restrained",
    "prop2-trestrained",
    "thm-beta-restrained",
    "thm-beta-trestrained",
    "cor-pm-restrained",
    "cor-pm-trestrained",
    "ore",
    "mccuaig",
    "reed",
    "weber-k",
];

fn nf(x: usize) -> f64 {
    x as f64
}

/// `(ln(delta+1)+1)/(delta+1) * n` — the classic expectation bound on gamma.
fn classic_dom_rhs(delta: usize, n: usize) -> f64 {
    let d = nf(delta);
    ((d + 1.0).ln() + 1.0) / (d + 1.0) * nf(n)
}

/// `(ln(delta)+1)/delta * n` — the analogous bound on gamma_t (delta >= 1).
fn classic_total_rhs(delta: usize, n: usize) -> f64 {
    let d = nf(delta);
    (d.ln() + 1.0) / d * nf(n)
}

fn report(
    bound_id: &'static str,
    kind: BoundKind,
    severity: Severity,
    statement: &'static str,
    outcome: std::result::Result<(String, Option<Rhs>), String>,
) -> BoundReport {
    match outcome {
        Ok((reason, rhs)) => BoundReport {
            bound_id,
            applicable: true,
            reason,
            rhs,
            kind,
            severity,
            statement,
        },
        Err(reason) => BoundReport {
            bound_id,
            applicable: false,
            reason,
            rhs: None,
            kind,
            severity,
            statement,
        },
    }
}

/// Evaluate one bound's applicability predicate and right-hand side.
pub fn evaluate_bound(p: &BoundParams, bound_id: &str) -> Result<BoundReport> {
    use BoundKind::*;
    use Severity::*;
    let n = p.n;
    let delta = p.delta;
    let dp = p.delta_prime;
    let val = |x: f64| Some(Rhs::Value(x));
    let ok = |reason: &str, rhs: Option<Rhs>| Ok((reason.to_string(), rhs));
    let no = |reason: String| Err(reason);
    let outcome: std::result::Result<(String, Option<Rhs>), String> = match bound_id {
        "thm1-dom" => ok("holds for every graph", val(classic_dom_rhs(delta, n))),
        "thm2-extremal" => no("informational: existence statement, not checkable".into()),
        "alon-hypergraph" => no("informational: hypergraph transversal bound, not checkable".into()),
        "thm3-global-eq" => {
            if !p.connected || !p.connected_bar {
                ok(
                    "graph or complement disconnected",
                    Some(Rhs::Descriptor("max{gamma, gamma of complement}")),
                )
            } else {
                no("needs the graph or its complement disconnected".into())
            }
        }
        "thm4-global-disj" => ok(
            "holds for every graph",
            Some(Rhs::Descriptor(
                "gamma_g = max{gamma, gamma of complement} or gamma_g <= min{Delta, Delta of complement} + 1",
            )),
        ),
        "thm5-global" => {
            if delta == p.delta_bar && delta <= 2 {
                ok("delta = delta of complement <= 2", val(nf(delta) + 2.0))
            } else {
                ok(
                    "general branch",
                    val(nf(delta.max(p.delta_bar)) + 1.0),
                )
            }
        }
        "thm6-roman-sandwich" => ok(
            "holds for every graph",
            Some(Rhs::Descriptor("gamma <= gamma_R <= 2 gamma")),
        ),
        "thm7-roman-lb" => {
            // the counting argument needs at least one edge
            if p.big_delta >= 1 {
                ok("Delta >= 1", val(2.0 * nf(n) / (nf(p.big_delta) + 1.0)))
            } else {
                no(format!("needs Delta >= 1 (Delta = {})", p.big_delta))
            }
        }
        "thm8-restrained" => {
            if delta >= 2 {
                ok("delta >= 2", val(nf(n) - nf(p.big_delta)))
            } else {
                no(format!("needs delta >= 2 (delta = {delta})"))
            }
        }
        "thm9-trestrained" => {
            if p.connected && n >= 4 && delta >= 2 && p.big_delta <= n - 2 {
                ok(
                    "connected, n >= 4, delta >= 2, Delta <= n - 2",
                    val(nf(n) - nf(p.big_delta) / 2.0 - 1.0),
                )
            } else {
                no(format!(
                    "needs connected, n >= 4, delta >= 2, Delta <= n - 2 \
                     (connected = {}, n = {n}, delta = {delta}, Delta = {})",
                    p.connected, p.big_delta
                ))
            }
        }
        "thm-main1-global" => {
            if dp >= 1 {
                let d = nf(dp);
                ok(
                    "delta' >= 1",
                    val((1.0 - d / (2f64.powf(1.0 / d) * (1.0 + d).powf(1.0 + 1.0 / d))) * nf(n)),
                )
            } else {
                no(format!("needs delta' >= 1 (delta' = {dp})"))
            }
        }
        "cor2-global" => {
            if dp >= 1 {
                let d = nf(dp);
                ok(
                    "delta' >= 1",
                    val(((d + 1.0).ln() + 2f64.ln() + 1.0) / (d + 1.0) * nf(n)),
                )
            } else {
                no(format!("needs delta' >= 1 (delta' = {dp})"))
            }
        }
        "thm-main-roman" => {
            if delta >= 1 {
                let d = nf(delta);
                ok(
                    "delta >= 1",
                    val(2.0 * (1.0 - 2f64.powf(1.0 / d) * d / (1.0 + d).powf(1.0 + 1.0 / d)) * nf(n)),
                )
            } else {
                no(format!("needs delta >= 1 (delta = {delta})"))
            }
        }
        "cor1-roman" => {
            if delta >= 1 {
                let d = nf(delta);
                ok(
                    "delta >= 1",
                    val((2.0 * (d + 1.0).ln() - 4f64.ln() + 2.0) / (d + 1.0) * nf(n)),
                )
            } else {
                no(format!("needs delta >= 1 (delta = {delta})"))
            }
        }
        "prop2-restrained" | "prop2-trestrained" => {
            let d = nf(delta);
            if delta >= 1 && nf(n) < d * d / (d.ln() + 1.0) {
                let rhs = if bound_id == "prop2-restrained" {
                    classic_dom_rhs(delta, n)
                } else {
                    classic_total_rhs(delta, n)
                };
                ok("delta >= 1 and n < delta^2/(ln delta + 1)", val(rhs))
            } else {
                no(format!(
                    "needs delta >= 1 and n < delta^2/(ln delta + 1) (n = {n}, delta = {delta})"
                ))
            }
        }
        "thm-beta-restrained" => {
            if delta >= 1 {
                let d = nf(delta);
                ok(
                    "delta >= 1",
                    val((2.0 * (d + 1.0).ln() + d + 3.0) / (d + 1.0) * nf(n) - 2.0 * nf(p.beta1)),
                )
            } else {
                no(format!("needs delta >= 1 (delta = {delta})"))
            }
        }
        "thm-beta-trestrained" => {
            if delta >= 1 {
                let d = nf(delta);
                ok(
                    "delta >= 1",
                    val((2.0 * d.ln() + d + 2.0) / d * nf(n) - 2.0 * nf(p.beta1)),
                )
            } else {
                no(format!("needs delta >= 1 (delta = {delta})"))
            }
        }
        "cor-pm-restrained" | "cor-pm-trestrained" => {
            if delta >= 1 && p.has_perfect_matching() {
                let eps = if n.is_multiple_of(2) { 0.0 } else { 1.0 };
                let rhs = if bound_id == "cor-pm-restrained" {
                    classic_dom_rhs(delta, 2 * n) + eps
                } else {
                    classic_total_rhs(delta, 2 * n) + eps
                };
                ok("delta >= 1 and a perfect matching exists", val(rhs))
            } else {
                no(format!(
                    "needs delta >= 1 and a perfect matching (delta = {delta}, beta1 = {}, n = {n})",
                    p.beta1
                ))
            }
        }
        "ore" => {
            if delta >= 1 {
                ok("delta >= 1", val(nf(n) / 2.0))
            } else {
                no(format!("needs delta >= 1 (delta = {delta})"))
            }
        }
        "mccuaig" => {
            if p.connected && delta >= 2 {
                ok(
                    "connected and delta >= 2 (advisory: finitely many exceptions exist)",
                    val(0.4 * nf(n)),
                )
            } else {
                no(format!(
                    "needs connected and delta >= 2 (connected = {}, delta = {delta})",
                    p.connected
                ))
            }
        }
        "reed" => {
            if p.connected && delta >= 3 {
                ok("connected and delta >= 3", val(0.375 * nf(n)))
            } else {
                no(format!(
                    "needs connected and delta >= 3 (connected = {}, delta = {delta})",
                    p.connected
                ))
            }
        }
        "weber-k" => no("informational here: needs an edge probability, see weber_point".into()),
        _ => return Err(Error::UnknownBound(bound_id.to_string())),
    };
    let (kind, severity, statement): (BoundKind, Severity, &'static str) = match bound_id {
        "thm1-dom" => (Upper, Failure, "gamma <= (ln(delta+1)+1)/(delta+1) * n"),
        "thm2-extremal" => (Informational, Warning, "graphs exist with gamma >= (ln(delta+1)+1)/(delta+1) * n * (1+o(1))"),
        "alon-hypergraph" => (Informational, Warning, "k-uniform transversal: tau <= ln(k)/k * (n+m)"),
        "thm3-global-eq" => (Equality, Failure, "gamma_g = max{gamma, gamma of complement} when G or its complement is disconnected"),
        "thm4-global-disj" => (Disjunction, Failure, "gamma_g = max{gamma, gamma of complement} or gamma_g <= min{Delta, Delta of complement} + 1"),
        "thm5-global" => (Upper, Failure, "gamma_g <= delta + 2 if delta = delta of complement <= 2, else gamma_g <= max{delta, delta of complement} + 1"),
        "thm6-roman-sandwich" => (Sandwich, Failure, "gamma <= gamma_R <= 2 gamma"),
        "thm7-roman-lb" => (Lower, Failure, "gamma_R >= 2n/(Delta+1)"),
        "thm8-restrained" => (Upper, Failure, "gamma_r <= n - Delta when delta >= 2"),
        "thm9-trestrained" => (Upper, Failure, "gamma_tr <= n - Delta/2 - 1 when connected, n >= 4, delta >= 2, Delta <= n-2"),
        "thm-main1-global" => (Upper, Failure, "gamma_g <= (1 - delta'/(2^(1/delta') (1+delta')^(1+1/delta'))) * n"),
        "cor2-global" => (Upper, Failure, "gamma_g <= (ln(delta'+1) + ln 2 + 1)/(delta'+1) * n"),
        "thm-main-roman" => (Upper, Failure, "gamma_R <= 2 (1 - 2^(1/delta) delta / (1+delta)^(1+1/delta)) * n"),
        "cor1-roman" => (Upper, Failure, "gamma_R <= (2 ln(delta+1) - ln 4 + 2)/(delta+1) * n"),
        "prop2-restrained" => (Upper, Failure, "gamma_r <= (ln(delta+1)+1)/(delta+1) * n when n < delta^2/(ln delta + 1)"),
        "prop2-trestrained" => (Upper, Failure, "gamma_tr <= (ln delta + 1)/delta * n when n < delta^2/(ln delta + 1)"),
        "thm-beta-restrained" => (Upper, Failure, "gamma_r <= (2 ln(delta+1) + delta + 3)/(delta+1) * n - 2 beta1"),
        "thm-beta-trestrained" => (Upper, Failure, "gamma_tr <= (2 ln delta + delta + 2)/delta * n - 2 beta1"),
        "cor-pm-restrained" => (Upper, Failure, "gamma_r <= (ln(delta+1)+1)/(delta+1) * 2n + eps with a perfect matching"),
        "cor-pm-trestrained" => (Upper, Failure, "gamma_tr <= (ln delta + 1)/delta * 2n + eps with a perfect matching"),
        "ore" => (Upper, Failure, "gamma <= n/2 when delta >= 1"),
        "mccuaig" => (Upper, Warning, "gamma <= 2n/5 when connected and delta >= 2, up to finitely many exceptions"),
        "reed" => (Upper, Failure, "gamma <= 3n/8 when connected and delta >= 3"),
        "weber-k" => (Informational, Warning, "gamma of a dense random graph concentrates on {k+1, k+2}"),
        _ => unreachable!("unknown ids already rejected"),
    };
    Ok(report(
        BOUND_IDS.iter().find(|s| **s == bound_id).copied().unwrap(),
        kind,
        severity,
        statement,
        outcome,
    ))
}

/// Exact parameter values consumed by the audit.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct ExactValues {
    pub gamma: Option<usize>,
    pub gamma_bar: Option<usize>,
    pub gamma_t: Option<usize>,
    pub gamma_g: Option<usize>,
    pub gamma_r: Option<usize>,
    pub gamma_tr: Option<usize>,
    pub gamma_roman: Option<usize>,
}

impl ExactValues {
    /// Solve every parameter that exists for the graph (total variants are
    /// skipped when the graph has an isolated vertex).
    pub fn compute(g: &Graph) -> Result<ExactValues> {
        let solve = |variant| -> Result<Option<usize>> {
            match exact_value(g, variant) {
                Ok(sol) => Ok(Some(sol.value)),
                Err(Error::Infeasible { .. }) => Ok(None),
                Err(e) => Err(e),
            }
        };
        Ok(ExactValues {
            gamma: solve(Variant::Dominating)?,
            gamma_bar: Some(exact_value(&g.complement(), Variant::Dominating)?.value),
            gamma_t: solve(Variant::Total)?,
            gamma_g: solve(Variant::Global)?,
            gamma_r: solve(Variant::Restrained)?,
            gamma_tr: solve(Variant::TotalRestrained)?,
            gamma_roman: solve(Variant::Roman)?,
        })
    }
}

/// A bound that an exact value contradicts.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub bound_id: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub severity: Severity,
    pub detail: String,
}

const SLACK: f64 = 1e-9;

/// Check the supplied exact values against every applicable bound.
/// Advisory bounds report warning severity; everything else is a failure.
pub fn audit(g: &Graph, exact: &ExactValues) -> Result<Vec<Violation>> {
    let p = BoundParams::from_graph(g);
    let need = |bound: &str, name: &'static str, v: Option<usize>| -> Result<f64> {
        v.map(nf).ok_or(Error::MissingValue {
            bound: bound.to_string(),
            value: name,
        })
    };
    let mut violations = Vec::new();
    for id in BOUND_IDS {
        let r = evaluate_bound(&p, id)?;
        if !r.applicable || r.kind == BoundKind::Informational {
            continue;
        }
        let rhs_value = match &r.rhs {
            Some(Rhs::Value(x)) => Some(*x),
            _ => None,
        };
        let mut push = |lhs: f64, rhs: f64, detail: String| {
            violations.push(Violation {
                bound_id: r.bound_id,
                lhs,
                rhs,
                severity: r.severity,
                detail,
            })
        };
        match id {
            "thm1-dom" | "ore" | "mccuaig" | "reed" => {
                let lhs = need(id, "gamma", exact.gamma)?;
                let rhs = rhs_value.unwrap();
                if lhs > rhs + SLACK {
                    push(lhs, rhs, format!("gamma = {lhs} exceeds {rhs}"));
                }
            }
            "thm3-global-eq" => {
                let gg = need(id, "gamma_g", exact.gamma_g)?;
                let target = need(id, "gamma", exact.gamma)?.max(need(id, "gamma_bar", exact.gamma_bar)?);
                if (gg - target).abs() > SLACK {
                    push(gg, target, format!("gamma_g = {gg}, expected exactly {target}"));
                }
            }
            "thm4-global-disj" => {
                let gg = need(id, "gamma_g", exact.gamma_g)?;
                let eq = need(id, "gamma", exact.gamma)?.max(need(id, "gamma_bar", exact.gamma_bar)?);
                let cap = nf(p.big_delta.min(p.big_delta_bar)) + 1.0;
                if (gg - eq).abs() > SLACK && gg > cap + SLACK {
                    push(gg, cap, format!("gamma_g = {gg}: neither equal to {eq} nor <= {cap}"));
                }
            }
            "thm5-global" | "thm-main1-global" | "cor2-global" => {
                let lhs = need(id, "gamma_g", exact.gamma_g)?;
                let rhs = rhs_value.unwrap();
                if lhs > rhs + SLACK {
                    push(lhs, rhs, format!("gamma_g = {lhs} exceeds {rhs}"));
                }
            }
            "thm6-roman-sandwich" => {
                let gr = need(id, "gamma_R", exact.gamma_roman)?;
                let gamma = need(id, "gamma", exact.gamma)?;
                if gr < gamma - SLACK {
                    push(gr, gamma, format!("gamma_R = {gr} below gamma = {gamma}"));
                }
                if gr > 2.0 * gamma + SLACK {
                    push(gr, 2.0 * gamma, format!("gamma_R = {gr} above 2 gamma = {}", 2.0 * gamma));
                }
            }
            "thm7-roman-lb" => {
                let lhs = need(id, "gamma_R", exact.gamma_roman)?;
                let rhs = rhs_value.unwrap();
                if lhs < rhs - SLACK {
                    push(lhs, rhs, format!("gamma_R = {lhs} below lower bound {rhs}"));
                }
            }
            "thm-main-roman" | "cor1-roman" => {
                let lhs = need(id, "gamma_R", exact.gamma_roman)?;
                let rhs = rhs_value.unwrap();
                if lhs > rhs + SLACK {
                    push(lhs, rhs, format!("gamma_R = {lhs} exceeds {rhs}"));
                }
            }
            "thm8-restrained" | "prop2-restrained" | "thm-beta-restrained" | "cor-pm-restrained" => {
                let lhs = need(id, "gamma_r", exact.gamma_r)?;
                let rhs = rhs_value.unwrap();
                if lhs > rhs + SLACK {
                    push(lhs, rhs, format!("gamma_r = {lhs} exceeds {rhs}"));
                }
            }
            "thm9-trestrained" | "prop2-trestrained" | "thm-beta-trestrained"
            | "cor-pm-trestrained" => {
                let lhs = need(id, "gamma_tr", exact.gamma_tr)?;
                let rhs = rhs_value.unwrap();
                if lhs > rhs + SLACK {
                    push(lhs, rhs, format!("gamma_tr = {lhs} exceeds {rhs}"));
                }
            }
            _ => {}
        }
    }
    Ok(violations)
}

/// Predicted concentration point of gamma for a dense random graph.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct WeberPoint {
    pub n: usize,
    pub q: f64,
    pub k: i64,
    /// gamma lands in {k+1, k+2}
    pub predicted: (i64, i64),
}

/// `k = floor(log n - 2 log log n + log log e)` with logarithms base `1/q`.
pub fn weber_point(n: usize, q: f64) -> Result<WeberPoint> {
    if n < 4 {
        return Err(Error::Param(format!("weber point needs n >= 4, got {n}")));
    }
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::Param(format!("weber point needs 0 < q < 1, got {q}")));
    }
    let ln_base = (1.0 / q).ln();
    let log = |x: f64| x.ln() / ln_base;
    let log_n = log(n as f64);
    if log_n <= 1.0 {
        return Err(Error::Param(format!(
            "iterated logarithm undefined: log_(1/q)(n) = {log_n} <= 1 for n = {n}, q = {q}"
        )));
    }
    let k = (log_n - 2.0 * log(log_n) + log(log(std::f64::consts::E))).floor() as i64;
    Ok(WeberPoint {
        n,
        q,
        k,
        predicted: (k + 1, k + 2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, petersen};

    #[test]
    fn evaluate_bound_examples() {
        let p = BoundParams::from_graph(&petersen());
        let r = evaluate_bound(&p, "thm7-roman-lb").unwrap();
        assert!(r.applicable);
        assert_eq!(r.rhs, Some(Rhs::Value(5.0)), "2*10/(3+1)");

        let p = BoundParams::from_graph(&cycle(4));
        let r = evaluate_bound(&p, "thm8-restrained").unwrap();
        assert!(r.applicable, "delta = 2");
        assert_eq!(r.rhs, Some(Rhs::Value(2.0)), "4 - 2");

        // delta' = 1: 1 - 1/(2 * 4) = 0.875 per vertex
        let g = cycle(5);
        let mut p = BoundParams::from_graph(&g);
        p.delta_prime = 1;
        let r = evaluate_bound(&p, "thm-main1-global").unwrap();
        match r.rhs {
            Some(Rhs::Value(x)) => assert!((x - 0.875 * 5.0).abs() < 1e-12),
            other => panic!("expected a value, got {other:?}"),
        }

        // n=6, delta=2, beta1=3: (2 ln 3 + 5)/3 * 6 - 6
        let p = BoundParams::from_graph(&cycle(6));
        let r = evaluate_bound(&p, "thm-beta-restrained").unwrap();
        let expected = (2.0 * 3f64.ln() + 5.0) / 3.0 * 6.0 - 6.0;
        match r.rhs {
            Some(Rhs::Value(x)) => assert!((x - expected).abs() < 1e-12),
            other => panic!("expected a value, got {other:?}"),
        }

        assert!(matches!(
            evaluate_bound(&p, "no-such-bound"),
            Err(Error::UnknownBound(_))
        ));
    }

    #[test]
    fn inapplicable_bounds_state_the_failed_precondition() {
        let p = BoundParams::from_graph(&cycle(4)); // connected, delta = 2, n = 4
        let r = evaluate_bound(&p, "reed").unwrap();
        assert!(!r.applicable);
        assert!(r.reason.contains("delta >= 3"), "{}", r.reason);
        let r = evaluate_bound(&p, "thm9-trestrained").unwrap();
        assert!(r.applicable, "C4: Delta = 2 <= n-2");
    }

    #[test]
    fn audit_c4_is_clean() {
        let g = cycle(4);
        let exact = ExactValues::compute(&g).unwrap();
        assert_eq!(
            (exact.gamma, exact.gamma_g, exact.gamma_r, exact.gamma_roman),
            (Some(2), Some(2), Some(2), Some(3))
        );
        let violations = audit(&g, &exact).unwrap();
        // C4 is an exceptional graph for the advisory 2n/5 bound, which is
        // why that check carries warning severity; no hard failures occur
        assert!(
            violations.iter().all(|v| v.severity == Severity::Warning),
            "{violations:?}"
        );
        assert!(violations.iter().all(|v| v.bound_id == "mccuaig"));
    }

    #[test]
    fn audit_k5_equality_branch() {
        let g = complete(5);
        let exact = ExactValues::compute(&g).unwrap();
        assert_eq!(exact.gamma_g, Some(5));
        assert_eq!(exact.gamma_bar, Some(5), "complement is edgeless");
        let violations = audit(&g, &exact).unwrap();
        assert!(
            violations.iter().all(|v| v.severity == Severity::Warning),
            "{violations:?}"
        );
    }

    #[test]
    fn audit_flags_fabricated_inconsistency() {
        let g = cycle(4);
        let mut exact = ExactValues::compute(&g).unwrap();
        exact.gamma = Some(3);
        exact.gamma_roman = Some(2); // gamma_R < gamma: sandwich lower branch
        let violations = audit(&g, &exact).unwrap();
        assert!(
            violations.iter().any(|v| v.bound_id == "thm6-roman-sandwich"),
            "{violations:?}"
        );
    }

    #[test]
    fn audit_reports_missing_values() {
        let g = cycle(4);
        let exact = ExactValues {
            gamma: Some(2),
            ..Default::default()
        };
        assert!(matches!(
            audit(&g, &exact),
            Err(Error::MissingValue { .. })
        ));
    }

    #[test]
    fn corollary_relaxes_theorem() {
        for d in 1..=100usize {
            let p = BoundParams {
                n: 100,
                delta: d,
                big_delta: d,
                delta_bar: d,
                big_delta_bar: d,
                delta_prime: d,
                beta1: 0,
                connected: true,
                connected_bar: true,
            };
            let get = |id: &str| match evaluate_bound(&p, id).unwrap().rhs {
                Some(Rhs::Value(x)) => x,
                other => panic!("expected value for {id}, got {other:?}"),
            };
            assert!(get("thm-main1-global") <= get("cor2-global") + 1e-9, "delta' = {d}");
            assert!(get("thm-main-roman") <= get("cor1-roman") + 1e-9, "delta = {d}");
        }
    }

    #[test]
    fn weber_point_frozen_values() {
        let w = weber_point(80, 0.5).unwrap();
        assert_eq!(w.k, 1);
        assert_eq!(w.predicted, (2, 3));
        let w = weber_point(1 << 20, 0.5).unwrap();
        assert_eq!(w.k, 11);
        assert_eq!(w.predicted, (12, 13));
        assert!(weber_point(3, 0.5).is_err());
        assert!(weber_point(80, 0.0).is_err());
        assert!(weber_point(80, 1.0).is_err());
    }

    #[test]
    fn weber_point_nondecreasing_in_n() {
        let mut last = i64::MIN;
        let mut n = 16usize;
        while n <= 1 << 16 {
            let k = weber_point(n, 0.5).unwrap().k;
            assert!(k >= last, "n = {n}");
            last = k;
            n *= 2;
        }
    }
}
