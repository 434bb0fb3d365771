//! Exact search for graph and signed-graph homomorphisms, and the edge
//! packing characterisation of maps to signed projective cubes.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, SignedGraph, SwitchSet};
use crate::signed::{classify_consistency, signatures_equivalent, ConsistencyClass};

/// Vertex map plus the switch set applied to the source before mapping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomWitness {
    pub map: Vec<usize>,
    pub switch: SwitchSet,
}

/// Edge classes `0..=d`, each equivalent to the source signature, with the
/// switch set taking each class onto that signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingWitness {
    pub classes: BTreeMap<Edge, usize>,
    pub switches: Vec<SwitchSet>,
}

impl PackingWitness {
    pub fn class_count(&self) -> usize {
        self.switches.len()
    }

    pub fn class_edges(&self, c: usize) -> impl Iterator<Item = Edge> + '_ {
        self.classes
            .iter()
            .filter(move |(_, &k)| k == c)
            .map(|(e, _)| *e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    Absent,
    /// Node budget exhausted before the search completed.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult<T> {
    pub outcome: SearchOutcome<T>,
    pub nodes: u64,
}

impl<T> SearchResult<T> {
    pub fn witness(&self) -> Option<&T> {
        match &self.outcome {
            SearchOutcome::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn into_witness(self) -> Option<T> {
        match self.outcome {
            SearchOutcome::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self.outcome, SearchOutcome::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self.outcome, SearchOutcome::Absent)
    }
}

const POSITIVE: u8 = 0b01;
const NEGATIVE: u8 = 0b10;

/// Target of a signed homomorphism. Each adjacent pair carries the set of
/// signs it offers, which lets the one-dimensional signed projective cube
/// (a positive and a negative edge on the same pair) be used as a target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedTarget {
    signs: Vec<BTreeMap<usize, u8>>,
}

impl SignedTarget {
    pub fn from_signed(sh: &SignedGraph) -> Self {
        let mut signs = vec![BTreeMap::new(); sh.vertex_count()];
        for (e, s) in sh.signed_edges() {
            let bit = if s.is_negative() { NEGATIVE } else { POSITIVE };
            signs[e.u()].insert(e.v(), bit);
            signs[e.v()].insert(e.u(), bit);
        }
        SignedTarget { signs }
    }

    /// Signed projective cube of any dimension `d >= 1`.
    pub fn projective_cube(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameter(
                "cube dimension must be >= 1".into(),
            ));
        }
        if d >= 2 {
            return Ok(Self::from_signed(&crate::cube::signed_projective_cube(d)?));
        }
        let mut signs = vec![BTreeMap::new(); 2];
        signs[0].insert(1, POSITIVE | NEGATIVE);
        signs[1].insert(0, POSITIVE | NEGATIVE);
        Ok(SignedTarget { signs })
    }

    pub fn vertex_count(&self) -> usize {
        self.signs.len()
    }

    fn offers(&self, a: usize, b: usize, negative: bool) -> bool {
        let bit = if negative { NEGATIVE } else { POSITIVE };
        self.signs[a].get(&b).is_some_and(|m| m & bit != 0)
    }
}

/// Backtracking CSP shared by the plain and signed solvers.
struct Csp<'a> {
    order: Vec<usize>,
    /// Per source vertex: neighbours with the edge's negativity.
    neighbors: Vec<Vec<(usize, bool)>>,
    /// `allow[val][s]`: values a neighbour may take across an edge of sign `s`.
    allow: &'a [[FixedBitSet; 2]],
    assigned: Vec<Option<usize>>,
    nodes: u64,
    budget: Option<u64>,
    aborted: bool,
}

impl Csp<'_> {
    fn solve(&mut self, depth: usize, domains: &mut [FixedBitSet]) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let values: Vec<usize> = domains[v].ones().collect();
        for val in values {
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                self.aborted = true;
                return false;
            }
            let mut saved: Vec<(usize, FixedBitSet)> = Vec::new();
            let mut wiped = false;
            for &(w, neg) in &self.neighbors[v] {
                if self.assigned[w].is_some() {
                    continue;
                }
                let allowed = &self.allow[val][usize::from(neg)];
                if !domains[w].is_subset(allowed) {
                    saved.push((w, domains[w].clone()));
                    domains[w].intersect_with(allowed);
                    if domains[w].is_clear() {
                        wiped = true;
                        break;
                    }
                }
            }
            if !wiped {
                self.assigned[v] = Some(val);
                if self.solve(depth + 1, domains) {
                    return true;
                }
                self.assigned[v] = None;
            }
            for (w, d) in saved.into_iter().rev() {
                domains[w] = d;
            }
            if self.aborted {
                return false;
            }
        }
        false
    }
}

/// Source vertices by descending degree, ties by index.
fn variable_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

fn run_csp(
    g: &Graph,
    negative: impl Fn(usize, usize) -> bool,
    allow: &[[FixedBitSet; 2]],
    mut domains: Vec<FixedBitSet>,
    budget: Option<u64>,
) -> (SearchOutcome<Vec<usize>>, u64) {
    let n = g.vertex_count();
    let neighbors = (0..n)
        .map(|v| g.neighbors(v).map(|w| (w, negative(v, w))).collect())
        .collect();
    let mut csp = Csp {
        order: variable_order(g),
        neighbors,
        allow,
        assigned: vec![None; n],
        nodes: 0,
        budget,
        aborted: false,
    };
    if domains.iter().any(|d| d.is_clear()) {
        return (SearchOutcome::Absent, 0);
    }
    let outcome = if csp.solve(0, &mut domains) {
        SearchOutcome::Found(csp.assigned.iter().map(|a| a.unwrap_or(0)).collect())
    } else if csp.aborted {
        SearchOutcome::Unknown
    } else {
        SearchOutcome::Absent
    };
    (outcome, csp.nodes)
}

/// Graph homomorphism `g -> h` by backtracking with forward checking.
pub fn find_graph_hom(g: &Graph, h: &Graph, budget: Option<u64>) -> SearchResult<HomWitness> {
    let m = h.vertex_count();
    let allow: Vec<[FixedBitSet; 2]> = (0..m)
        .map(|t| {
            let mut s = FixedBitSet::with_capacity(m);
            s.extend(h.neighbors(t));
            [s.clone(), s]
        })
        .collect();
    let mut full = FixedBitSet::with_capacity(m);
    full.insert_range(..);
    let domains = vec![full; g.vertex_count()];
    let (outcome, nodes) = run_csp(g, |_, _| false, &allow, domains, budget);
    SearchResult {
        outcome: map_outcome(outcome, |map| HomWitness {
            map,
            switch: SwitchSet::empty(),
        }),
        nodes,
    }
}

fn map_outcome<A, B>(o: SearchOutcome<A>, f: impl FnOnce(A) -> B) -> SearchOutcome<B> {
    match o {
        SearchOutcome::Found(a) => SearchOutcome::Found(f(a)),
        SearchOutcome::Absent => SearchOutcome::Absent,
        SearchOutcome::Unknown => SearchOutcome::Unknown,
    }
}

pub fn find_signed_hom(
    sg: &SignedGraph,
    sh: &SignedGraph,
    budget: Option<u64>,
) -> SearchResult<HomWitness> {
    find_signed_hom_to(sg, &SignedTarget::from_signed(sh), budget)
}

/// Signed homomorphism search. Values are pairs (target vertex, switch
/// bit) encoded as `2 * t + b`; the first vertex of each component in the
/// variable order is pinned to switch bit 0.
pub fn find_signed_hom_to(
    sg: &SignedGraph,
    target: &SignedTarget,
    budget: Option<u64>,
) -> SearchResult<HomWitness> {
    let m = target.vertex_count();
    let values = 2 * m;
    let mut allow: Vec<[FixedBitSet; 2]> = Vec::with_capacity(values);
    for val in 0..values {
        let (t, b) = (val / 2, val % 2 == 1);
        let per_sign = [false, true].map(|s| {
            let mut set = FixedBitSet::with_capacity(values);
            for &t2 in target.signs[t].keys() {
                for b2 in [false, true] {
                    // the switched source sign must equal the target sign
                    if target.offers(t, t2, s ^ b ^ b2) {
                        set.insert(2 * t2 + usize::from(b2));
                    }
                }
            }
            set
        });
        allow.push(per_sign);
    }
    let g = sg.graph();
    let mut full = FixedBitSet::with_capacity(values);
    full.insert_range(..);
    let mut pinned = FixedBitSet::with_capacity(values);
    pinned.extend((0..m).map(|t| 2 * t));
    let mut domains = vec![full; g.vertex_count()];
    let order = variable_order(g);
    let mut comp_of = vec![usize::MAX; g.vertex_count()];
    for (i, comp) in g.components().into_iter().enumerate() {
        for v in comp {
            comp_of[v] = i;
        }
    }
    let mut seen_comp = vec![false; comp_of.iter().filter(|&&c| c != usize::MAX).count()];
    for &v in &order {
        if !seen_comp[comp_of[v]] {
            seen_comp[comp_of[v]] = true;
            domains[v] = pinned.clone();
        }
    }
    let (outcome, nodes) = run_csp(g, |u, v| sg.is_negative(u, v), &allow, domains, budget);
    SearchResult {
        outcome: map_outcome(outcome, |vals| HomWitness {
            map: vals.iter().map(|v| v / 2).collect(),
            switch: SwitchSet::new(
                vals.iter()
                    .enumerate()
                    .filter(|(_, v)| *v % 2 == 1)
                    .map(|(i, _)| i),
            ),
        }),
        nodes,
    }
}

fn check_shapes(source_n: usize, target_n: usize, w: &HomWitness) -> Result<()> {
    if w.map.len() != source_n {
        return Err(Error::InvalidParameter(format!(
            "witness maps {} vertices, source has {source_n}",
            w.map.len()
        )));
    }
    if let Some(&vertex) = w.map.iter().find(|&&t| t >= target_n) {
        return Err(Error::VertexOutOfRange {
            vertex,
            vertex_count: target_n,
        });
    }
    w.switch.validate(source_n)
}

/// Checks every edge constraint of a witness.
pub fn verify_hom(sg: &SignedGraph, sh: &SignedGraph, w: &HomWitness) -> Result<bool> {
    verify_hom_to(sg, &SignedTarget::from_signed(sh), w)
}

pub fn verify_hom_to(sg: &SignedGraph, target: &SignedTarget, w: &HomWitness) -> Result<bool> {
    check_shapes(sg.vertex_count(), target.vertex_count(), w)?;
    Ok(sg.signed_edges().all(|(e, s)| {
        let switched = s.is_negative() ^ w.switch.contains(e.u()) ^ w.switch.contains(e.v());
        target.offers(w.map[e.u()], w.map[e.v()], switched)
    }))
}

pub fn verify_graph_hom(g: &Graph, h: &Graph, w: &HomWitness) -> Result<bool> {
    check_shapes(g.vertex_count(), h.vertex_count(), w)?;
    Ok(w.switch.is_empty() && g.edges().all(|e| h.has_edge(w.map[e.u()], w.map[e.v()])))
}

/// Edge sets of the fundamental cycles of a BFS spanning forest, as
/// indices into the lexicographic edge list.
fn fundamental_cycles(g: &Graph, edges: &[Edge]) -> Vec<Vec<usize>> {
    let index: BTreeMap<Edge, usize> = edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let n = g.vertex_count();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    let mut tree = vec![false; edges.len()];
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
                    parent[w] = Some(v);
                    depth[w] = depth[v] + 1;
                    tree[index[&Edge::new(v, w)]] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut cycles = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        if tree[i] {
            continue;
        }
        let mut cycle = vec![i];
        let (mut a, mut b) = (e.u(), e.v());
        while a != b {
            if depth[a] < depth[b] {
                std::mem::swap(&mut a, &mut b);
            }
            let p = parent[a].expect("non-root has a parent");
            cycle.push(index[&Edge::new(a, p)]);
            a = p;
        }
        cycles.push(cycle);
    }
    cycles
}

/// Partition of `E(G)` into `d + 1` classes, each a signature equivalent
/// to `Σ`, found by backtracking over edges in lexicographic order. A class
/// label is never skipped (labels are interchangeable).
pub fn packing_to_spc(
    sg: &SignedGraph,
    d: usize,
    budget: Option<u64>,
) -> Result<SearchResult<PackingWitness>> {
    if d == 0 {
        return Err(Error::InvalidParameter("d must be >= 1".into()));
    }
    if classify_consistency(sg) == ConsistencyClass::Inconsistent {
        return Err(Error::Inconsistent);
    }
    let g = sg.graph();
    let edges: Vec<Edge> = g.edges().collect();
    let cycles = fundamental_cycles(g, &edges);
    let mut closing: Vec<Vec<(Vec<usize>, bool)>> = vec![Vec::new(); edges.len()];
    for c in cycles {
        let last = *c.iter().max().expect("cycle is non-empty");
        let parity = c
            .iter()
            .filter(|&&i| sg.sigma().contains(&edges[i]))
            .count()
            % 2
            == 1;
        closing[last].push((c, parity));
    }

    struct Packer<'a> {
        classes: usize,
        closing: &'a [Vec<(Vec<usize>, bool)>],
        assignment: Vec<usize>,
        nodes: u64,
        budget: Option<u64>,
        aborted: bool,
    }
    impl Packer<'_> {
        fn consistent_at(&self, i: usize) -> bool {
            self.closing[i].iter().all(|(cycle, parity)| {
                (0..self.classes).all(|c| {
                    let count = cycle.iter().filter(|&&j| self.assignment[j] == c).count();
                    (count % 2 == 1) == *parity
                })
            })
        }

        fn go(&mut self, i: usize, used: usize) -> bool {
            if i == self.assignment.len() {
                return true;
            }
            for c in 0..self.classes.min(used + 1) {
                self.nodes += 1;
                if self.budget.is_some_and(|b| self.nodes > b) {
                    self.aborted = true;
                    return false;
                }
                self.assignment[i] = c;
                if self.consistent_at(i) && self.go(i + 1, used.max(c + 1)) {
                    return true;
                }
                if self.aborted {
                    return false;
                }
            }
            false
        }
    }

    let mut packer = Packer {
        classes: d + 1,
        closing: &closing,
        assignment: vec![0; edges.len()],
        nodes: 0,
        budget,
        aborted: false,
    };
    let found = packer.go(0, 0);
    let nodes = packer.nodes;
    if !found {
        let outcome = if packer.aborted {
            SearchOutcome::Unknown
        } else {
            SearchOutcome::Absent
        };
        return Ok(SearchResult { outcome, nodes });
    }
    let classes: BTreeMap<Edge, usize> = edges
        .iter()
        .copied()
        .zip(packer.assignment.iter().copied())
        .collect();
    let switches = certify_classes(sg, &classes, d + 1)?
        .ok_or_else(|| Error::Verification("packing class not equivalent to sigma".into()))?;
    Ok(SearchResult {
        outcome: SearchOutcome::Found(PackingWitness { classes, switches }),
        nodes,
    })
}

/// Switch set per class taking that class onto `Σ`, or `None` if some
/// class is not equivalent.
pub fn certify_classes(
    sg: &SignedGraph,
    classes: &BTreeMap<Edge, usize>,
    class_count: usize,
) -> Result<Option<Vec<SwitchSet>>> {
    let g = sg.graph();
    if classes.len() != g.edge_count() || g.edges().any(|e| !classes.contains_key(&e)) {
        return Err(Error::InvalidParameter(
            "class assignment must cover every edge exactly once".into(),
        ));
    }
    if let Some((_, &c)) = classes.iter().find(|(_, &c)| c >= class_count) {
        return Err(Error::InvalidParameter(format!("class {c} out of range")));
    }
    let mut out = Vec::with_capacity(class_count);
    for c in 0..class_count {
        let set = classes
            .iter()
            .filter(|(_, &k)| k == c)
            .map(|(e, _)| *e)
            .collect();
        match signatures_equivalent(g, &set, sg.sigma())? {
            Some(w) => out.push(w),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

pub fn verify_packing(sg: &SignedGraph, w: &PackingWitness) -> Result<bool> {
    Ok(certify_classes(sg, &w.classes, w.class_count())?.is_some())
}
