//! Odd girth and unbalanced girth through the signed double cover.

use std::collections::VecDeque;
use std::fmt;

use crate::graph::{Graph, SignedGraph};

/// Girth value; `Infinite` sorts above every finite length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(n) => Some(n),
            Girth::Infinite => None,
        }
    }

    pub fn is_at_least(self, bound: usize) -> bool {
        self >= Girth::Finite(bound)
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(n) => write!(f, "{n}"),
            Girth::Infinite => write!(f, "infinite"),
        }
    }
}

/// Shortest closed walk with an odd number of negative edges, as a vertex
/// sequence starting and ending at the same vertex. Its length equals the
/// unbalanced girth.
pub fn shortest_unbalanced_closed_walk(sg: &SignedGraph) -> Option<Vec<usize>> {
    let g = sg.graph();
    let n = g.vertex_count();
    let mut best: Option<Vec<usize>> = None;
    // Cover vertex 2v + p: copy p of v. Reaching (v, 1) from (v, 0) means an
    // odd number of negative edges were used.
    let mut dist = vec![usize::MAX; 2 * n];
    let mut parent = vec![usize::MAX; 2 * n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        let start = 2 * s;
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        let limit = best.as_ref().map_or(usize::MAX, |w| w.len() - 1);
        while let Some(x) = queue.pop_front() {
            if x == 2 * s + 1 || dist[x] + 1 >= limit {
                break;
            }
            let (v, p) = (x / 2, x % 2);
            for w in g.neighbors(v) {
                let q = p ^ usize::from(sg.is_negative(v, w));
                let y = 2 * w + q;
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let target = 2 * s + 1;
        if dist[target] != usize::MAX && dist[target] < limit {
            let mut walk = vec![s];
            let mut x = target;
            while x != start {
                x = parent[x];
                walk.push(x / 2);
            }
            walk.reverse();
            best = Some(walk);
        }
    }
    best
}

pub fn unbalanced_girth(sg: &SignedGraph) -> Girth {
    match shortest_unbalanced_closed_walk(sg) {
        Some(w) => Girth::Finite(w.len() - 1),
        None => Girth::Infinite,
    }
}

pub fn odd_girth(g: &Graph) -> Girth {
    unbalanced_girth(&SignedGraph::all_negative(g.clone()))
}

/// Shortest odd closed walk of `g`.
pub fn shortest_odd_closed_walk(g: &Graph) -> Option<Vec<usize>> {
    shortest_unbalanced_closed_walk(&SignedGraph::all_negative(g.clone()))
}
