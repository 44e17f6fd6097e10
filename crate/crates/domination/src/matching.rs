//! Maximum matching in general graphs via augmenting paths with blossom
//! contraction, plus an exhaustive oracle for cross-validation.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A set of pairwise disjoint edges of a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    fn from_mates(mate: &[Option<usize>]) -> Self {
        let mut edges = Vec::new();
        for (v, &m) in mate.iter().enumerate() {
            if let Some(u) = m {
                if v < u {
                    edges.push((v, u));
                }
            }
        }
        Matching { edges }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Vertices covered by the matching.
    pub fn covered(&self, n: usize) -> crate::bitset::BitSet {
        let mut s = crate::bitset::BitSet::new(n);
        for &(u, v) in &self.edges {
            s.insert(u);
            s.insert(v);
        }
        s
    }
}

/// Maximum cardinality matching (Edmonds' blossom algorithm, O(n^3)).
/// Exposed vertices are scanned in increasing index order, so the output
/// is deterministic.
pub fn max_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    // cheap greedy seed
    for v in 0..n {
        if mate[v].is_none() {
            for u in g.neighbors(v).iter() {
                if mate[u].is_none() {
                    mate[v] = Some(u);
                    mate[u] = Some(v);
                    break;
                }
            }
        }
    }
    for root in 0..n {
        if mate[root].is_none() {
            augment(g, root, &mut mate);
        }
    }
    Matching::from_mates(&mate)
}

fn augment(g: &Graph, root: usize, mate: &mut [Option<usize>]) -> bool {
    let n = g.n();
    let mut used = vec![false; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut queue = std::collections::VecDeque::new();
    used[root] = true;
    queue.push_back(root);

    while let Some(v) = queue.pop_front() {
        for to in g.neighbors(v).iter() {
            if base[v] == base[to] || mate[v] == Some(to) {
                continue;
            }
            if to == root || mate[to].is_some_and(|m| parent[m].is_some()) {
                // odd cycle: contract the blossom at the lowest common base
                let curbase = lca(v, to, &base, &parent, mate);
                let mut blossom = vec![false; n];
                mark_path(v, curbase, to, &base, &mut parent, mate, &mut blossom);
                mark_path(to, curbase, v, &base, &mut parent, mate, &mut blossom);
                for i in 0..n {
                    if blossom[base[i]] {
                        base[i] = curbase;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to].is_none() {
                parent[to] = Some(v);
                match mate[to] {
                    None => {
                        // augmenting path found: flip along the parent chain
                        let mut v = to;
                        loop {
                            let pv = parent[v].expect("parent chain reaches the root");
                            let next = mate[pv];
                            mate[v] = Some(pv);
                            mate[pv] = Some(v);
                            match next {
                                Some(x) => v = x,
                                None => return true,
                            }
                        }
                    }
                    Some(m) => {
                        if !used[m] {
                            used[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
    }
    false
}

fn lca(
    mut a: usize,
    mut b: usize,
    base: &[usize],
    parent: &[Option<usize>],
    mate: &[Option<usize>],
) -> usize {
    let n = base.len();
    let mut seen = vec![false; n];
    loop {
        a = base[a];
        seen[a] = true;
        match mate[a].and_then(|m| parent[m]) {
            Some(p) => a = p,
            None => break,
        }
    }
    loop {
        b = base[b];
        if seen[b] {
            return b;
        }
        b = parent[mate[b].expect("even-level vertex is matched")]
            .expect("path to root exists");
    }
}

#[allow(clippy::too_many_arguments)]
fn mark_path(
    mut v: usize,
    curbase: usize,
    mut child: usize,
    base: &[usize],
    parent: &mut [Option<usize>],
    mate: &[Option<usize>],
    blossom: &mut [bool],
) {
    while base[v] != curbase {
        let m = mate[v].expect("blossom vertices below the base are matched");
        blossom[base[v]] = true;
        blossom[base[m]] = true;
        parent[v] = Some(child);
        child = m;
        v = parent[m].expect("path to base exists");
    }
}

/// True iff a maximum matching covers all vertices (all but one if `n` is odd).
pub fn has_perfect_matching(g: &Graph) -> bool {
    max_matching(g).size() == g.n() / 2
}

/// Exhaustive maximum matching. Guard: `n <= 12` (bitmask DP) or
/// `m <= 16` (edge subset recursion).
pub fn brute_force_matching(g: &Graph) -> Result<Matching> {
    let n = g.n();
    let m = g.m();
    if n <= 12 {
        Ok(dp_matching(g))
    } else if m <= 16 {
        Ok(edge_recursion_matching(g))
    } else {
        Err(Error::SizeGuard(format!(
            "brute_force_matching requires n <= 12 or m <= 16 (n = {n}, m = {m})"
        )))
    }
}

fn dp_matching(g: &Graph) -> Matching {
    let n = g.n();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, u| acc | 1 << u))
        .collect();
    let mut dp = vec![0u8; (full as usize) + 1];
    for mask in 1..=full {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = dp[rest as usize];
        let mut cands = adj[v] & rest;
        while cands != 0 {
            let u = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            best = best.max(1 + dp[(rest & !(1 << u)) as usize]);
        }
        dp[mask as usize] = best;
    }
    // reconstruct deterministically: drop the lowest vertex if possible,
    // otherwise match it to its smallest eligible neighbour
    let mut mask = full;
    let mut edges = Vec::new();
    while mask != 0 {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        if dp[mask as usize] == dp[rest as usize] {
            mask = rest;
            continue;
        }
        let mut cands = adj[v] & rest;
        while cands != 0 {
            let u = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            let next = rest & !(1 << u);
            if dp[mask as usize] == 1 + dp[next as usize] {
                edges.push((v.min(u), v.max(u)));
                mask = next;
                break;
            }
        }
    }
    Matching { edges }
}

fn edge_recursion_matching(g: &Graph) -> Matching {
    let edges = g.edges();
    let mut best: Vec<(usize, usize)> = Vec::new();
    let mut current: Vec<(usize, usize)> = Vec::new();
    let mut used = vec![false; g.n()];
    fn recurse(
        edges: &[(usize, usize)],
        idx: usize,
        used: &mut [bool],
        current: &mut Vec<(usize, usize)>,
        best: &mut Vec<(usize, usize)>,
    ) {
        if current.len() + (edges.len() - idx) <= best.len() {
            return;
        }
        if idx == edges.len() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        let (u, v) = edges[idx];
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            current.push((u, v));
            recurse(edges, idx + 1, used, current, best);
            current.pop();
            used[u] = false;
            used[v] = false;
        }
        recurse(edges, idx + 1, used, current, best);
    }
    recurse(&edges, 0, &mut used, &mut current, &mut best);
    Matching { edges: best }
}

/// Check that a matching's edges are pairwise disjoint and lie in `g`.
pub fn is_valid_matching(g: &Graph, m: &Matching) -> bool {
    let mut seen = crate::bitset::BitSet::new(g.n());
    for &(u, v) in m.edges() {
        if !g.has_edge(u, v) || seen.contains(u) || seen.contains(v) {
            return false;
        }
        seen.insert(u);
        seen.insert(v);
    }
    true
}
