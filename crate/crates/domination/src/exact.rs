//! Exact computation of the six domination parameters with witness
//! certificates, plus exhaustive oracles for cross-validation.

use crate::bitset::BitSet;
use crate::certificates::{check_certificate, complete_roman, Certificate, RomanFunction, Variant};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// An optimal value together with a witness certificate.
#[derive(Clone, Debug)]
pub struct Solution {
    pub variant: Variant,
    pub value: usize,
    pub witness: Certificate,
}

impl Solution {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "param": self.variant.symbol(),
            "value": self.value,
            "witness": self.witness.to_json(),
        })
    }
}

fn feasibility(g: &Graph, variant: Variant) -> Result<()> {
    if variant.requires_min_degree_one() {
        if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
            return Err(Error::Infeasible {
                variant: variant.as_str(),
                vertex: v,
            });
        }
    }
    Ok(())
}

/// Exact optimum by branch and bound. The search order is deterministic;
/// the returned witness always validates.
pub fn exact_value(g: &Graph, variant: Variant) -> Result<Solution> {
    feasibility(g, variant)?;
    match variant {
        Variant::Roman => Ok(solve_roman(g)),
        _ => Ok(solve_set(g, variant)),
    }
}

// ---------------------------------------------------------------------------
// set variants

struct SetSearch<'a> {
    g: &'a Graph,
    n: usize,
    total: bool,
    restrained: bool,
    /// what adding u newly satisfies in G: N[u], or N(u) for total variants
    gain: Vec<BitSet>,
    /// closed neighbourhoods in the complement, for the global variant
    gain_bar: Option<Vec<BitSet>>,
    best_size: usize,
    best_set: BitSet,
}

fn solve_set(g: &Graph, variant: Variant) -> Solution {
    let n = g.n();
    let total = matches!(variant, Variant::Total | Variant::TotalRestrained);
    let restrained = matches!(variant, Variant::Restrained | Variant::TotalRestrained);
    let gain: Vec<BitSet> = (0..n)
        .map(|u| {
            if total {
                g.neighbors(u).clone()
            } else {
                g.closed_neighbors(u)
            }
        })
        .collect();
    let gain_bar = matches!(variant, Variant::Global).then(|| {
        let gbar = g.complement();
        (0..n).map(|u| gbar.closed_neighbors(u)).collect::<Vec<_>>()
    });

    // incumbent: greedy cover where it stays valid, otherwise V(G)
    let mut incumbent = BitSet::full(n);
    let greedy = greedy_cover(n, &gain, gain_bar.as_deref());
    let greedy_cert = Certificate::Set {
        variant,
        set: greedy.clone(),
    };
    if greedy.len() < n && check_certificate(g, &greedy_cert).unwrap().is_valid() {
        incumbent = greedy;
    }

    let mut search = SetSearch {
        g,
        n,
        total,
        restrained,
        gain,
        gain_bar,
        best_size: incumbent.len(),
        best_set: incumbent,
    };
    search.recurse(&BitSet::new(n), &BitSet::new(n), &BitSet::new(n), 0);

    let witness = Certificate::Set {
        variant,
        set: search.best_set.clone(),
    };
    debug_assert!(check_certificate(g, &witness).unwrap().is_valid());
    Solution {
        variant,
        value: search.best_size,
        witness,
    }
}

/// Greedy max-coverage seed for the incumbent.
fn greedy_cover(n: usize, gain: &[BitSet], gain_bar: Option<&[BitSet]>) -> BitSet {
    let mut chosen = BitSet::new(n);
    let mut covered = BitSet::new(n);
    let mut covered_bar = BitSet::new(n);
    loop {
        let done = covered.len() == n && gain_bar.is_none_or(|_| covered_bar.len() == n);
        if done {
            return chosen;
        }
        let mut best = None;
        for u in 0..n {
            if chosen.contains(u) {
                continue;
            }
            let mut score = gain[u].len() - gain[u].intersection_len(&covered);
            if let Some(gb) = gain_bar {
                score += gb[u].len() - gb[u].intersection_len(&covered_bar);
            }
            if best.is_none_or(|(s, _)| score > s) {
                best = Some((score, u));
            }
        }
        match best {
            Some((score, u)) if score > 0 => {
                chosen.insert(u);
                covered.union_with(&gain[u]);
                if let Some(gb) = gain_bar {
                    covered_bar.union_with(&gb[u]);
                }
            }
            // no progress possible (isolated vertices under the total
            // condition are rejected before the search starts)
            _ => return BitSet::full(n),
        }
    }
}

impl SetSearch<'_> {
    fn lower_bound(&self, covered: &BitSet, covered_bar: &BitSet, chosen: &BitSet) -> usize {
        let mut extra = self.pressure(covered, &self.gain, chosen);
        if let Some(gb) = &self.gain_bar {
            extra = extra.max(self.pressure(covered_bar, gb, chosen));
        }
        extra
    }

    /// ceil(uncovered / best residual coverage): admissible since every
    /// added vertex covers at most that many still-uncovered vertices.
    fn pressure(&self, covered: &BitSet, gain: &[BitSet], chosen: &BitSet) -> usize {
        let uncovered = self.n - covered.len();
        if uncovered == 0 {
            return 0;
        }
        let mut cmax = 0;
        for (u, g) in gain.iter().enumerate() {
            if !chosen.contains(u) {
                cmax = cmax.max(g.len() - g.intersection_len(covered));
            }
        }
        debug_assert!(cmax > 0, "uncovered vertex without candidate dominator");
        uncovered.div_ceil(cmax)
    }

    fn recurse(&mut self, chosen: &BitSet, covered: &BitSet, covered_bar: &BitSet, size: usize) {
        if size + self.lower_bound(covered, covered_bar, chosen) >= self.best_size {
            return;
        }
        if let Some(candidates) = self.pick_branch(chosen, covered, covered_bar) {
            for u in candidates {
                let mut chosen2 = chosen.clone();
                chosen2.insert(u);
                let mut covered2 = covered.clone();
                covered2.union_with(&self.gain[u]);
                let mut covered_bar2 = covered_bar.clone();
                if let Some(gb) = &self.gain_bar {
                    covered_bar2.union_with(&gb[u]);
                }
                self.recurse(&chosen2, &covered2, &covered_bar2, size + 1);
            }
        } else {
            // feasible and strictly better than the incumbent (the bound
            // check above already compared sizes)
            self.best_size = size;
            self.best_set = chosen.clone();
        }
    }

    /// Candidate additions fixing the most constrained violated vertex,
    /// or None when the partial set is already feasible.
    fn pick_branch(
        &self,
        chosen: &BitSet,
        covered: &BitSet,
        covered_bar: &BitSet,
    ) -> Option<Vec<usize>> {
        // most constrained uncovered vertex in G, then in the complement
        let mut pick: Option<(usize, usize, bool)> = None;
        for v in 0..self.n {
            if !covered.contains(v) {
                let count = self.dominator_count(v, chosen, false);
                if pick.is_none_or(|(c, _, _)| count < c) {
                    pick = Some((count, v, false));
                }
            }
        }
        if pick.is_none() && self.gain_bar.is_some() {
            for v in 0..self.n {
                if !covered_bar.contains(v) {
                    let count = self.dominator_count(v, chosen, true);
                    if pick.is_none_or(|(c, _, _)| count < c) {
                        pick = Some((count, v, true));
                    }
                }
            }
        }
        if let Some((_, v, in_complement)) = pick {
            return Some(self.dominators_of(v, chosen, in_complement));
        }
        if self.restrained {
            // an outside vertex with all neighbours inside can only be
            // repaired by joining the set itself
            for v in 0..self.n {
                if !chosen.contains(v) && self.g.neighbors(v).is_subset_of(chosen) {
                    return Some(vec![v]);
                }
            }
        }
        None
    }

    fn dominator_pool(&self, v: usize, in_complement: bool) -> (BitSet, &[BitSet]) {
        if in_complement {
            let gb = self.gain_bar.as_ref().unwrap();
            (gb[v].clone(), gb.as_slice())
        } else if self.total {
            (self.g.neighbors(v).clone(), &self.gain)
        } else {
            (self.g.closed_neighbors(v), &self.gain)
        }
    }

    fn dominator_count(&self, v: usize, chosen: &BitSet, in_complement: bool) -> usize {
        let (pool, _) = self.dominator_pool(v, in_complement);
        pool.len() - pool.intersection_len(chosen)
    }

    /// Vertices whose addition would satisfy `v`, sorted by coverage
    /// (descending), ties by index.
    fn dominators_of(&self, v: usize, chosen: &BitSet, in_complement: bool) -> Vec<usize> {
        let (pool, gain) = self.dominator_pool(v, in_complement);
        let mut cands: Vec<usize> = pool.iter().filter(|&u| !chosen.contains(u)).collect();
        cands.sort_by_key(|&u| (usize::MAX - gain[u].len(), u));
        cands
    }
}

// ---------------------------------------------------------------------------
// Roman domination via the set reduction: minimize 2|S| + |V - N[S]|

struct RomanSearch<'a> {
    g: &'a Graph,
    n: usize,
    closed: Vec<BitSet>,
    best_cost: usize,
    best: (BitSet, BitSet), // (S, ones)
}

fn solve_roman(g: &Graph) -> Solution {
    let n = g.n();
    let closed: Vec<BitSet> = (0..n).map(|v| g.closed_neighbors(v)).collect();

    // incumbent: complete a greedy dominating set, or f = 1 everywhere
    let greedy = greedy_cover(n, &closed, None);
    let from_greedy = complete_roman(g, &greedy);
    let (mut best_cost, mut best) = (n, (BitSet::new(n), BitSet::full(n)));
    if from_greedy.weight() < best_cost {
        best_cost = from_greedy.weight();
        let (_, ones, twos) = from_greedy.level_sets();
        best = (twos, ones);
    }

    let mut search = RomanSearch {
        g,
        n,
        closed,
        best_cost,
        best,
    };
    search.recurse(&BitSet::new(n), &BitSet::new(n), &BitSet::new(n), 0);

    let f = build_roman(g, &search.best.0, &search.best.1);
    debug_assert!(check_certificate(g, &Certificate::Roman(f.clone()))
        .unwrap()
        .is_valid());
    debug_assert_eq!(f.weight(), search.best_cost);
    Solution {
        variant: Variant::Roman,
        value: search.best_cost,
        witness: Certificate::Roman(f),
    }
}

fn build_roman(g: &Graph, twos: &BitSet, ones: &BitSet) -> RomanFunction {
    let covered = g.closed_neighborhood_of_set(twos);
    let values = (0..g.n())
        .map(|v| {
            if twos.contains(v) {
                2
            } else if ones.contains(v) && !covered.contains(v) {
                1
            } else {
                0
            }
        })
        .collect();
    RomanFunction::new(values).unwrap()
}

impl RomanSearch<'_> {
    fn recurse(&mut self, s: &BitSet, ones: &BitSet, covered: &BitSet, cost: usize) {
        // unresolved: neither dominated by S nor paying weight 1
        let mut resolved = covered.clone();
        resolved.union_with(ones);
        let unresolved = self.n - resolved.len();
        if cost + self.lower_bound(unresolved, covered, s) >= self.best_cost {
            return;
        }
        let v = match (0..self.n).find(|&v| !resolved.contains(v)) {
            Some(v) => v,
            None => {
                // a marked vertex may have been covered by a later 2-vertex;
                // the realized weight never exceeds the path cost
                let weight = build_roman(self.g, s, ones).weight();
                if weight < self.best_cost {
                    self.best_cost = weight;
                    self.best = (s.clone(), ones.clone());
                }
                return;
            }
        };
        // either some vertex of N[v] gets value 2, ordered by coverage...
        let mut cands: Vec<usize> = self.closed[v].iter().filter(|&u| !s.contains(u)).collect();
        cands.sort_by_key(|&u| (usize::MAX - self.closed[u].len(), u));
        for u in cands {
            let mut s2 = s.clone();
            s2.insert(u);
            let mut covered2 = covered.clone();
            covered2.union_with(&self.closed[u]);
            self.recurse(&s2, ones, &covered2, cost + 2);
        }
        // ...or v itself gets value 1
        let mut ones2 = ones.clone();
        ones2.insert(v);
        self.recurse(s, &ones2, covered, cost + 1);
    }

    fn lower_bound(&self, unresolved: usize, covered: &BitSet, s: &BitSet) -> usize {
        if unresolved == 0 {
            return 0;
        }
        let mut cmax = 1;
        for u in 0..self.n {
            if !s.contains(u) {
                cmax = cmax.max(self.closed[u].len() - self.closed[u].intersection_len(covered));
            }
        }
        if cmax >= 2 {
            // a 2-assignment resolves at most cmax vertices per 2 units of
            // weight; a 1-assignment resolves one vertex per unit
            (2 * unresolved).div_ceil(cmax)
        } else {
            unresolved
        }
    }
}

// ---------------------------------------------------------------------------
// exhaustive oracles

const SUBSET_GUARD: usize = 24;
const ASSIGNMENT_GUARD: usize = 12;

/// Exhaustive reference solver. Set variants enumerate subsets in
/// increasing cardinality (first feasible wins); the Roman variant scans
/// all subsets for the minimum of `2|S| + |V - N[S]|`.
pub fn brute_force_value(g: &Graph, variant: Variant) -> Result<Solution> {
    feasibility(g, variant)?;
    let n = g.n();
    if n > SUBSET_GUARD {
        return Err(Error::SizeGuard(format!(
            "brute_force_value requires n <= {SUBSET_GUARD} (n = {n})"
        )));
    }
    if variant == Variant::Roman {
        return Ok(brute_force_roman(g));
    }
    for k in 0..=n {
        for mask in subsets_of_size(n, k) {
            let set = mask_to_bitset(n, mask);
            let cert = Certificate::Set { variant, set };
            if check_certificate(g, &cert)?.is_valid() {
                return Ok(Solution {
                    variant,
                    value: k,
                    witness: cert,
                });
            }
        }
    }
    unreachable!("V(G) certifies every feasible variant")
}

fn brute_force_roman(g: &Graph) -> Solution {
    let n = g.n();
    let mut best_weight = usize::MAX;
    let mut best_seed = BitSet::new(n);
    for mask in 0u64..(1u64 << n) {
        let s = mask_to_bitset(n, mask);
        let covered = g.closed_neighborhood_of_set(&s);
        let weight = 2 * s.len() + (n - covered.len());
        if weight < best_weight {
            best_weight = weight;
            best_seed = s;
        }
    }
    let f = complete_roman(g, &best_seed);
    Solution {
        variant: Variant::Roman,
        value: best_weight,
        witness: Certificate::Roman(f),
    }
}

fn mask_to_bitset(n: usize, mask: u64) -> BitSet {
    let mut s = BitSet::new(n);
    let mut m = mask;
    while m != 0 {
        s.insert(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    s
}

/// Masks of popcount `k` over `n` bits in increasing numeric order
/// (Gosper's hack).
fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let mut current = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut exhausted = false;
    std::iter::from_fn(move || {
        if exhausted || current >= limit {
            return None;
        }
        let out = current;
        if k == 0 || out == 0 {
            exhausted = true;
            return Some(out);
        }
        let c = current & current.wrapping_neg();
        let r = current + c;
        if r >= limit || c == 0 {
            current = limit; // next call ends the stream
        } else {
            current = (((r ^ current) >> 2) / c) | r;
        }
        Some(out)
    })
}

/// Independent Roman oracle over the full assignment space `{0,1,2}^n`.
/// Returns the minimum weight of a valid Roman dominating function.
pub fn roman_assignment_oracle(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > ASSIGNMENT_GUARD {
        return Err(Error::SizeGuard(format!(
            "roman_assignment_oracle requires n <= {ASSIGNMENT_GUARD} (n = {n})"
        )));
    }
    let adj_masks: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, u| acc | 1 << u))
        .collect();
    let mut best = usize::MAX;
    let mut digits = vec![0u8; n];
    loop {
        let mut twos = 0u32;
        let mut weight = 0usize;
        for (v, &d) in digits.iter().enumerate() {
            weight += d as usize;
            if d == 2 {
                twos |= 1 << v;
            }
        }
        if weight < best {
            let valid = digits
                .iter()
                .enumerate()
                .all(|(v, &d)| d != 0 || adj_masks[v] & twos != 0);
            if valid {
                best = weight;
            }
        }
        // increment the base-3 counter
        let mut i = 0;
        loop {
            if i == n {
                return Ok(best);
            }
            if digits[i] < 2 {
                digits[i] += 1;
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}
