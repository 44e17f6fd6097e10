//! Simple undirected graphs with bit-set adjacency, degree statistics,
//! complement, connectivity and file I/O.

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Immutable simple undirected graph on vertices `0..n`.
///
/// `adj[v]` is the open neighbourhood `N(v)`; the structure is symmetric
/// and loop-free by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
}

impl Graph {
    /// Graph with no edges.
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1, "graph order must be at least 1");
        Graph {
            n,
            adj: vec![BitSet::new(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge_checked(u, v, 0)?;
        }
        Ok(g)
    }

    fn add_edge_checked(&mut self, u: usize, v: usize, line: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Parse {
                line,
                msg: format!("index {} out of range (n = {})", u.max(v), self.n),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> BitSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// `N[X]` for a vertex set.
    pub fn closed_neighborhood_of_set(&self, set: &BitSet) -> BitSet {
        let mut out = set.clone();
        for v in set.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for v in 0..self.n {
            let mut row = self.adj[v].inverted();
            row.remove(v);
            g.adj[v] = row;
        }
        g
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let delta = *degrees.iter().min().unwrap();
        let big_delta = *degrees.iter().max().unwrap();
        let delta_bar = self.n - 1 - big_delta;
        let big_delta_bar = self.n - 1 - delta;
        DegreeProfile {
            delta,
            big_delta,
            delta_bar,
            big_delta_bar,
            delta_prime: delta.min(delta_bar),
        }
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = BitSet::new(self.n);
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = vec![start];
            seen.insert(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in self.adj[v].iter() {
                    if !seen.contains(u) {
                        seen.insert(u);
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Induced subgraph on `vertices` (relabelled 0.. in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m(), self.edges())
    }
}

/// Minimum/maximum degrees of a graph and its complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DegreeProfile {
    /// minimum degree
    pub delta: usize,
    /// maximum degree
    pub big_delta: usize,
    /// minimum degree of the complement, `n - 1 - big_delta`
    pub delta_bar: usize,
    /// maximum degree of the complement, `n - 1 - delta`
    pub big_delta_bar: usize,
    /// `min(delta, delta_bar)`
    pub delta_prime: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
}

/// Parse a graph from text.
///
/// Edge-list format: first line `n m`, then `m` lines `u v`, 0-based.
/// DIMACS: `p edge n m` header, then `e u v` lines, 1-based.
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

fn split_nums(line: &str, lineno: usize, want: usize) -> Result<Vec<usize>> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != want {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("expected {want} fields, found {}", parts.len()),
        });
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<usize>().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("invalid integer '{p}'"),
            })
        })
        .collect()
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());
    let (lineno, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    let header = split_nums(header, lineno, 2)?;
    let (n, m) = (header[0], header[1]);
    if n == 0 {
        return Err(Error::Parse {
            line: lineno,
            msg: "graph order must be at least 1".into(),
        });
    }
    let mut g = Graph::empty(n);
    let mut count = 0;
    for (lineno, line) in lines {
        let e = split_nums(line, lineno, 2)?;
        g.add_edge_checked(e[0], e[1], lineno)?;
        count += 1;
    }
    if count != m {
        return Err(Error::Parse {
            line: 1,
            msg: format!("header declares {m} edges, found {count}"),
        });
    }
    Ok(g)
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    let mut declared = 0usize;
    let mut count = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("p ") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 3 || parts[0] != "edge" {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "malformed header, expected 'p edge n m'".into(),
                });
            }
            let n: usize = parts[1].parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("invalid vertex count '{}'", parts[1]),
            })?;
            declared = parts[2].parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("invalid edge count '{}'", parts[2]),
            })?;
            if n == 0 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "graph order must be at least 1".into(),
                });
            }
            g = Some(Graph::empty(n));
        } else if let Some(rest) = line.strip_prefix("e ") {
            let g = g.as_mut().ok_or(Error::Parse {
                line: lineno,
                msg: "edge before 'p edge' header".into(),
            })?;
            let e = split_nums(rest, lineno, 2)?;
            if e[0] == 0 || e[1] == 0 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "DIMACS vertices are 1-based".into(),
                });
            }
            g.add_edge_checked(e[0] - 1, e[1] - 1, lineno)?;
            count += 1;
        } else {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("unrecognized line '{line}'"),
            });
        }
    }
    let g = g.ok_or(Error::Parse {
        line: 1,
        msg: "missing 'p edge' header".into(),
    })?;
    if count != declared {
        return Err(Error::Parse {
            line: 1,
            msg: format!("header declares {declared} edges, found {count}"),
        });
    }
    Ok(g)
}

/// Edge-list text, edges emitted with `u < v` in sorted order.
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// DIMACS text, 1-based, edges with `u < v` in sorted order.
pub fn write_dimacs(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p edge {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

// ---------------------------------------------------------------------------
// named small graphs used throughout the tests and the bound audit corpus

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::empty(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v);
    }
    g
}

pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for v in 0..5 {
        g.add_edge(v, (v + 1) % 5); // outer pentagon
        g.add_edge(v, v + 5); // spokes
        g.add_edge(v + 5, (v + 2) % 5 + 5); // inner pentagram
    }
    g
}

/// Circulant graph C_n(offsets): `v ~ v +/- d (mod n)` for each offset `d`.
pub fn circulant(n: usize, offsets: &[usize]) -> Graph {
    let mut g = Graph::empty(n);
    for v in 0..n {
        for &d in offsets {
            assert!(d >= 1 && 2 * d <= n, "offset out of range");
            let u = (v + d) % n;
            if u != v {
                g.add_edge(v, u);
            }
        }
    }
    g
}
