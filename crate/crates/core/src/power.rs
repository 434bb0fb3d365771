//! Walk-powers of graphs and path-based powers of signed graphs.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::girth::{shortest_odd_closed_walk, shortest_unbalanced_closed_walk};
use crate::graph::{Graph, SignedGraph};
use crate::signed::two_coloring;

/// Row `x` holds every `y` reachable from `x` by a walk of length exactly
/// `k` (including `x` itself when a closed walk exists). No precondition.
pub fn walk_reachability(g: &Graph, k: usize) -> Vec<FixedBitSet> {
    let n = g.vertex_count();
    let neighborhoods: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut s = FixedBitSet::with_capacity(n);
            s.extend(g.neighbors(v));
            s
        })
        .collect();
    (0..n)
        .map(|x| {
            let mut layer = FixedBitSet::with_capacity(n);
            layer.insert(x);
            for _ in 0..k {
                let mut next = FixedBitSet::with_capacity(n);
                for v in layer.ones() {
                    next.union_with(&neighborhoods[v]);
                }
                layer = next;
            }
            layer
        })
        .collect()
}

fn check_odd_exponent(k: usize) -> Result<()> {
    if k == 0 || k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "walk-power exponent must be a positive odd integer, got {k}"
        )));
    }
    Ok(())
}

fn check_odd_girth(g: &Graph, k: usize) -> Result<()> {
    if let Some(walk) = shortest_odd_closed_walk(g) {
        if walk.len() - 1 < k + 2 {
            return Err(Error::GirthPrecondition { walk, bound: k });
        }
    }
    Ok(())
}

/// `x ~ y` iff some walk of length exactly `k` joins them. Requires odd `k`
/// and odd girth at least `k + 2`, which keeps the result loopless.
pub fn walk_power(g: &Graph, k: usize) -> Result<Graph> {
    check_odd_exponent(k)?;
    check_odd_girth(g, k)?;
    let rows = walk_reachability(g, k);
    let mut out = Graph::new(g.vertex_count());
    for (x, row) in rows.iter().enumerate() {
        for y in row.ones().filter(|&y| y > x) {
            out.add_edge(x, y)?;
        }
    }
    Ok(out)
}

/// For each target vertex, the set of parities (bit 0 = even, bit 1 = odd)
/// of negative-edge counts over simple paths from `source` of length
/// `1..=max_len`.
fn path_parities(sg: &SignedGraph, source: usize, max_len: usize) -> Vec<u8> {
    struct Dfs<'a> {
        sg: &'a SignedGraph,
        max_len: usize,
        visited: Vec<bool>,
        seen: Vec<u8>,
    }
    impl Dfs<'_> {
        fn go(&mut self, v: usize, parity: bool, len: usize) {
            if len > 0 {
                self.seen[v] |= 1 << u8::from(parity);
            }
            if len == self.max_len {
                return;
            }
            let g = self.sg.graph();
            for w in g.neighbors(v) {
                if !self.visited[w] {
                    self.visited[w] = true;
                    let p = parity ^ self.sg.is_negative(v, w);
                    self.go(w, p, len + 1);
                    self.visited[w] = false;
                }
            }
        }
    }
    let n = sg.vertex_count();
    let mut dfs = Dfs {
        sg,
        max_len,
        visited: vec![false; n],
        seen: vec![0; n],
    };
    dfs.visited[source] = true;
    dfs.go(source, false, 0);
    dfs.seen
}

/// `u ~ v` iff they lie in the same part and two simple u-v paths of length
/// at most `r` have negative-edge counts of opposite parity.
pub fn signed_bipartite_power(sg: &SignedGraph, r: usize) -> Result<Graph> {
    if r == 0 || r % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "signed power exponent must be a positive even integer, got {r}"
        )));
    }
    let side = two_coloring(sg.graph()).ok_or(Error::NotBipartite)?;
    if let Some(walk) = shortest_unbalanced_closed_walk(sg) {
        if walk.len() - 1 < r + 2 {
            return Err(Error::GirthPrecondition { walk, bound: r });
        }
    }
    let n = sg.vertex_count();
    let mut out = Graph::new(n);
    for u in 0..n {
        let parities = path_parities(sg, u, r);
        for v in (u + 1..n).filter(|&v| side[v] == side[u] && parities[v] == 0b11) {
            out.add_edge(u, v)?;
        }
    }
    Ok(out)
}

/// Path-based refinement of the odd walk-power: `u ~ v` iff two simple
/// u-v paths of length at most `k` have lengths of opposite parity.
pub fn refined_odd_power(g: &Graph, k: usize) -> Result<Graph> {
    check_odd_exponent(k)?;
    check_odd_girth(g, k)?;
    let all_negative = SignedGraph::all_negative(g.clone());
    let n = g.vertex_count();
    let mut out = Graph::new(n);
    for u in 0..n {
        let parities = path_parities(&all_negative, u, k);
        for v in (u + 1..n).filter(|&v| parities[v] == 0b11) {
            out.add_edge(u, v)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    /// Boolean adjacency-matrix power.
    fn matrix_power(g: &Graph, k: usize) -> Vec<Vec<bool>> {
        let n = g.vertex_count();
        let a: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| g.has_edge(i, j)).collect())
            .collect();
        let mut m: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
        for _ in 0..k {
            m = (0..n)
                .map(|i| (0..n).map(|j| (0..n).any(|t| m[i][t] && a[t][j])).collect())
                .collect();
        }
        m
    }

    #[test]
    fn power_one_is_identity() {
        let g = Graph::cycle(7);
        assert_eq!(walk_power(&g, 1).unwrap(), g);
    }

    #[test]
    fn c5_cubed_is_k5() {
        let g = Graph::cycle(5);
        let m = matrix_power(&g, 3);
        assert!((0..5).all(|i| (0..5).all(|j| m[i][j] == (i != j))));
        assert_eq!(walk_power(&g, 3).unwrap(), Graph::complete(5));
    }

    #[test]
    fn even_exponent_rejected() {
        assert!(matches!(
            walk_power(&Graph::cycle(7), 2),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn girth_precondition_reports_walk() {
        match walk_power(&Graph::cycle(5), 5) {
            Err(Error::GirthPrecondition { walk, bound }) => {
                assert_eq!(bound, 5);
                assert_eq!(walk.len(), 6);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn reachability_matches_matrix() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        for k in 1..6 {
            let rows = walk_reachability(&g, k);
            let m = matrix_power(&g, k);
            for i in 0..6 {
                for j in 0..6 {
                    assert_eq!(rows[i].contains(j), m[i][j], "k={k} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn tree_signed_power_is_edgeless() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let sg = SignedGraph::new(g, [Edge::new(1, 2)].into_iter().collect()).unwrap();
        for r in [2, 4] {
            assert_eq!(signed_bipartite_power(&sg, r).unwrap().edge_count(), 0);
        }
    }

    #[test]
    fn signed_power_errors() {
        let c5 = SignedGraph::all_positive(Graph::cycle(5));
        assert_eq!(signed_bipartite_power(&c5, 2), Err(Error::NotBipartite));
        let c4 =
            SignedGraph::new(Graph::cycle(4), [Edge::new(0, 1)].into_iter().collect()).unwrap();
        assert!(matches!(
            signed_bipartite_power(&c4, 4),
            Err(Error::GirthPrecondition { .. })
        ));
        assert!(matches!(
            signed_bipartite_power(&c4, 3),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn c4_signed_square() {
        let c4 =
            SignedGraph::new(Graph::cycle(4), [Edge::new(0, 1)].into_iter().collect()).unwrap();
        let p = signed_bipartite_power(&c4, 2).unwrap();
        let edges: Vec<_> = p.edges().collect();
        assert_eq!(edges, vec![Edge::new(0, 2), Edge::new(1, 3)]);
    }

    #[test]
    fn refined_power_examples() {
        // adjacent cycle vertices only have paths of lengths 1 and 4
        let pentagram = Graph::from_edges(5, [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]).unwrap();
        assert_eq!(refined_odd_power(&Graph::cycle(5), 3).unwrap(), pentagram);
        assert_eq!(
            refined_odd_power(&Graph::path(4), 3).unwrap().edge_count(),
            0
        );
    }
}
