//! Simple undirected graphs and signed graphs.
//!
//! Edges are stored canonically as `(min, max)` and edge sets iterate in
//! lexicographic order, so every algorithm built on top is deterministic.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// An unordered vertex pair stored as `(min, max)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn other(self, x: usize) -> usize {
        if x == self.0 {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn from_negative(neg: bool) -> Self {
        if neg {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

/// Simple undirected graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    edges: BTreeSet<Edge>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); vertex_count],
            edges: BTreeSet::new(),
            labels: None,
        }
    }

    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_unchecked(Edge(u, v));
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::new(n);
        for i in 0..n {
            g.insert_unchecked(Edge::new(i, (i + 1) % n));
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.insert_unchecked(Edge(i - 1, i));
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(BTreeSet::new());
        if let Some(labels) = &mut self.labels {
            labels.push(String::new());
        }
        self.adj.len() - 1
    }

    pub fn add_labeled_vertex(&mut self, label: impl Into<String>) -> usize {
        let n = self.adj.len();
        let labels = self.labels.get_or_insert_with(|| vec![String::new(); n]);
        labels.push(label.into());
        self.adj.push(BTreeSet::new());
        n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<Edge> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        let e = Edge::new(u, v);
        if self.edges.contains(&e) {
            return Err(Error::ParallelEdge(e));
        }
        self.insert_unchecked(e);
        Ok(e)
    }

    fn insert_unchecked(&mut self, e: Edge) {
        self.adj[e.0].insert(e.1);
        self.adj[e.1].insert(e.0);
        self.edges.insert(e);
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count(),
            })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].contains(&v)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        let n = self.adj.len();
        let labels = self.labels.get_or_insert_with(|| vec![String::new(); n]);
        labels[v] = label.into();
    }

    pub fn without_labels(&self) -> Graph {
        Graph {
            adj: self.adj.clone(),
            edges: self.edges.clone(),
            labels: None,
        }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.insert_unchecked(Edge(i, j));
                }
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.vertex_count() <= other.vertex_count() && self.edges().all(|e| other.contains_edge(e))
    }
}

/// A graph together with its set of negative edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignedGraph {
    graph: Graph,
    sigma: BTreeSet<Edge>,
}

impl SignedGraph {
    pub fn new(graph: Graph, sigma: BTreeSet<Edge>) -> Result<Self> {
        if let Some(e) = sigma.iter().find(|e| !graph.contains_edge(**e)) {
            return Err(Error::NotAnEdge(*e));
        }
        Ok(SignedGraph { graph, sigma })
    }

    pub fn all_positive(graph: Graph) -> Self {
        SignedGraph {
            graph,
            sigma: BTreeSet::new(),
        }
    }

    pub fn all_negative(graph: Graph) -> Self {
        let sigma = graph.edge_set().clone();
        SignedGraph { graph, sigma }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn sigma(&self) -> &BTreeSet<Edge> {
        &self.sigma
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn sign(&self, e: Edge) -> Sign {
        Sign::from_negative(self.sigma.contains(&e))
    }

    pub fn is_negative(&self, u: usize, v: usize) -> bool {
        self.sigma.contains(&Edge::new(u, v))
    }

    pub fn add_vertex(&mut self) -> usize {
        self.graph.add_vertex()
    }

    pub fn add_labeled_vertex(&mut self, label: impl Into<String>) -> usize {
        self.graph.add_labeled_vertex(label)
    }

    pub fn add_edge(&mut self, u: usize, v: usize, sign: Sign) -> Result<Edge> {
        let e = self.graph.add_edge(u, v)?;
        if sign.is_negative() {
            self.sigma.insert(e);
        }
        Ok(e)
    }

    /// Signed edges in lexicographic order.
    pub fn signed_edges(&self) -> impl Iterator<Item = (Edge, Sign)> + '_ {
        self.graph.edges().map(|e| (e, self.sign(e)))
    }

    pub fn with_sigma(&self, sigma: BTreeSet<Edge>) -> Result<SignedGraph> {
        SignedGraph::new(self.graph.clone(), sigma)
    }
}

/// A set of vertices whose incident edges get their signs flipped.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SwitchSet {
    vertices: BTreeSet<usize>,
}

impl SwitchSet {
    pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        SwitchSet {
            vertices: vertices.into_iter().collect(),
        }
    }

    pub fn empty() -> Self {
        SwitchSet::default()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn validate(&self, vertex_count: usize) -> Result<()> {
        match self.vertices.iter().find(|&&v| v >= vertex_count) {
            Some(&vertex) => Err(Error::VertexOutOfRange {
                vertex,
                vertex_count,
            }),
            None => Ok(()),
        }
    }
}

/// Cyclic vertex sequence of a cycle in some host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    pub fn new(host: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::NotACycle(format!(
                "needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            host.check_vertex(v)?;
            if !seen.insert(v) {
                return Err(Error::NotACycle(format!("vertex {v} repeats")));
            }
        }
        let c = Cycle { vertices };
        if let Some(e) = c.edges().find(|e| !host.contains_edge(*e)) {
            return Err(Error::NotACycle(format!("{e} is not an edge")));
        }
        Ok(c)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| Edge::new(self.vertices[i], self.vertices[(i + 1) % n]))
    }
}
