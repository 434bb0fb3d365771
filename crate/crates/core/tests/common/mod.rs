#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use signed_bounds::{Edge, Graph, Sign, SignedGraph};

pub const SEED: u64 = 0x5167_2023;

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_signing(rng: &mut impl Rng, g: &Graph, p: f64) -> SignedGraph {
    let sigma = g.edges().filter(|_| rng.gen_bool(p)).collect();
    SignedGraph::new(g.clone(), sigma).unwrap()
}

/// Random bipartite graph with parts of the given sizes.
pub fn random_bipartite(rng: &mut impl Rng, left: usize, right: usize, p: f64) -> Graph {
    let mut g = Graph::new(left + right);
    for u in 0..left {
        for v in left..left + right {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Every cycle of `g` as a vertex list, each listed once (smallest vertex
/// first, second vertex smaller than last).
pub fn all_cycles(g: &Graph) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let start = path[0];
        let last = *path.last().unwrap();
        for w in g.neighbors(last) {
            if w == start && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            }
            if w > start && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                extend(g, path, on_path, out);
                path.pop();
                on_path[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        on_path[s] = true;
        extend(g, &mut vec![s], &mut on_path, &mut out);
        on_path[s] = false;
    }
    out
}

pub fn cycle_edges(c: &[usize]) -> Vec<Edge> {
    (0..c.len())
        .map(|i| Edge::new(c[i], c[(i + 1) % c.len()]))
        .collect()
}

/// Canonical form under vertex relabelling (brute force over permutations).
fn canonical(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    (0..n)
        .permutations(n)
        .map(|p| {
            let mut es: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (p[u], p[v]);
                    (a.min(b), a.max(b))
                })
                .collect();
            es.sort_unstable();
            es
        })
        .min()
        .unwrap_or_default()
}

/// Non-isomorphic graphs on 1..=max_n vertices without isolated vertices
/// (except the single vertex) and with at most `max_m` edges.
pub fn small_graphs(max_n: usize, max_m: usize) -> Vec<Graph> {
    let mut out = vec![Graph::new(1)];
    for n in 2..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        let mut seen = BTreeSet::new();
        for m in 1..=max_m.min(pairs.len()) {
            for combo in pairs.iter().copied().combinations(m) {
                let mut deg = vec![0; n];
                for &(u, v) in &combo {
                    deg[u] += 1;
                    deg[v] += 1;
                }
                if deg.contains(&0) {
                    continue;
                }
                if seen.insert(canonical(n, &combo)) {
                    out.push(Graph::from_edges(n, combo).unwrap());
                }
            }
        }
    }
    out
}

/// One signature per switching class: tree edges of a BFS forest positive,
/// co-tree edges free.
pub fn switching_classes(g: &Graph) -> Vec<SignedGraph> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut tree = BTreeSet::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    tree.insert(Edge::new(v, w));
                    queue.push_back(w);
                }
            }
        }
    }
    let cotree: Vec<Edge> = g.edges().filter(|e| !tree.contains(e)).collect();
    (0u32..1 << cotree.len())
        .map(|mask| {
            let sigma = (0..cotree.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| cotree[i])
                .collect();
            SignedGraph::new(g.clone(), sigma).unwrap()
        })
        .collect()
}

pub fn signed_from(n: usize, edges: &[(usize, usize, bool)]) -> SignedGraph {
    let mut sg = SignedGraph::all_positive(Graph::new(n));
    for &(u, v, neg) in edges {
        sg.add_edge(u, v, Sign::from_negative(neg)).unwrap();
    }
    sg
}
