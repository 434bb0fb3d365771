//! Exact maximum clique by branch and bound with greedy-colouring bounds.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::graph::Graph;

/// A vertex set claimed pairwise adjacent. `proven` marks a completed
/// maximum-clique search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCertificate {
    pub vertices: Vec<usize>,
    pub proven: bool,
}

impl CliqueCertificate {
    pub fn new(mut vertices: Vec<usize>, proven: bool) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        CliqueCertificate { vertices, proven }
    }

    pub fn omega(&self) -> usize {
        self.vertices.len()
    }
}

impl fmt::Display for CliqueCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.proven { "=" } else { ">=" };
        writeln!(f, "omega {rel} {}", self.omega())?;
        let list: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        writeln!(f, "{}", list.join(" "))
    }
}

pub fn is_clique(g: &Graph, vertices: &[usize]) -> bool {
    vertices.iter().all(|&v| v < g.vertex_count())
        && vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| u != v && g.has_edge(u, v))
        })
}

/// First pair of `vertices` that is not adjacent, if any.
pub fn missing_pair(g: &Graph, vertices: &[usize]) -> Option<(usize, usize)> {
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if !g.has_edge(u, v) {
                return Some((u, v));
            }
        }
    }
    None
}

pub fn min_degree(g: &Graph) -> usize {
    (0..g.vertex_count())
        .map(|v| g.degree(v))
        .min()
        .unwrap_or(0)
}

#[derive(Debug, Clone)]
pub struct CliqueSearch {
    pub certificate: CliqueCertificate,
    pub nodes: u64,
}

struct Search {
    adj: Vec<FixedBitSet>,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
    aborted: bool,
}

impl Search {
    /// Greedy sequential colouring of `cands` (kept in the given order).
    /// Returns the vertices sorted by colour with their colour numbers.
    fn color_sort(&self, cands: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(cands.len());
        let mut colors = Vec::with_capacity(cands.len());
        let mut uncolored: Vec<usize> = cands.to_vec();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut class: Vec<usize> = Vec::new();
            let mut rest = Vec::new();
            for &v in &uncolored {
                if class.iter().all(|&w| !self.adj[v].contains(w)) {
                    class.push(v);
                } else {
                    rest.push(v);
                }
            }
            for v in class {
                order.push(v);
                colors.push(color);
            }
            uncolored = rest;
        }
        (order, colors)
    }

    fn expand(&mut self, cands: Vec<usize>) {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.aborted = true;
            return;
        }
        let (order, colors) = self.color_sort(&cands);
        for i in (0..order.len()).rev() {
            if self.aborted || self.current.len() + colors[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            self.current.push(v);
            let next: Vec<usize> = order[..i]
                .iter()
                .copied()
                .filter(|&w| self.adj[v].contains(w))
                .collect();
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
        }
    }
}

/// Maximum clique search; `budget` caps the number of branch nodes. When
/// the budget runs out the best clique found so far is returned with
/// `proven = false`.
pub fn max_clique(g: &Graph, budget: Option<u64>) -> CliqueSearch {
    let n = g.vertex_count();
    let adj = (0..n)
        .map(|v| {
            let mut s = FixedBitSet::with_capacity(n);
            s.extend(g.neighbors(v));
            s
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut search = Search {
        adj,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        budget,
        aborted: false,
    };
    if n > 0 {
        search.expand(order);
    }
    CliqueSearch {
        certificate: CliqueCertificate::new(search.best, !search.aborted),
        nodes: search.nodes,
    }
}
