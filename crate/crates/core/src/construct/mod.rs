//! Plane constructions built by repeatedly doubling threads of a
//! subdivided K4, with an explicit combinatorial embedding (face list),
//! a thread registry and the designated clique(s) tracked step by step.

mod gadget;
mod k4;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

pub use gadget::{degree_gadget, DegreeGadget};
pub use k4::{subdivided_k4, verify_subdivided_k4_power, PathLengths, SubdividedK4};

use crate::clique::{missing_pair, CliqueCertificate};
use crate::error::{Error, Result};
use crate::graph::{Cycle, Edge, Sign, SignedGraph};
use crate::power::{signed_bipartite_power, walk_power};
use crate::signed::{cycle_sign, CycleSign};

/// Which family: odd girth 2k+1 (walk-powers) or signed bipartite of
/// unbalanced girth 2k (signed powers).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    Odd,
    Signed,
}

impl Case {
    pub fn name(self) -> &'static str {
        match self {
            Case::Odd => "odd",
            Case::Signed => "bipartite",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchPair {
    AB,
    CD,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThreadStatus {
    /// A maximal thread on an a-b or c-d path; may be doubled.
    Eligible,
    /// A connecting thread added by a doubling; never doubled.
    Bridge,
    /// Already doubled; no longer maximal.
    Split,
}

/// Path `start, internal..., end` whose internal vertices have degree 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thread {
    pub id: usize,
    pub start: usize,
    pub internal: Vec<usize>,
    pub end: usize,
    pub status: ThreadStatus,
    pub branch: BranchPair,
}

impl Thread {
    pub fn eligible(&self) -> bool {
        self.status == ThreadStatus::Eligible
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.internal.len() + 1
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.internal.len() + 2);
        v.push(self.start);
        v.extend_from_slice(&self.internal);
        v.push(self.end);
        v
    }
}

/// Closed-form designated clique size after step `i`.
///
/// Odd: `4k + sum_{j=1}^{i-1} 2^j (2k-j-1)`.
/// Signed: `(2k-1) + sum_{j=1}^{i-1} 2^(j-1) (2k-j-2)` per part.
pub fn clique_size_formula(k: usize, i: usize, case: Case) -> Result<usize> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be >= 2, got {k}")));
    }
    if i == 0 || i > 2 * k - 1 {
        return Err(Error::InvalidParameter(format!(
            "step must lie in 1..={}, got {i}",
            2 * k - 1
        )));
    }
    let total = match case {
        Case::Odd => (1..i).fold(4 * k, |acc, j| acc + (1 << j) * (2 * k - j - 1)),
        // 2k - j - 2 is zero at j = 2k - 2
        Case::Signed => (1..i).fold(2 * k - 1, |acc, j| acc + (1 << (j - 1)) * (2 * k - j - 2)),
    };
    Ok(total)
}

/// State of an iterative plane construction.
#[derive(Debug, Clone)]
pub struct PlaneConstruction {
    case: Case,
    k: usize,
    step: usize,
    host: SignedGraph,
    faces: Vec<Vec<usize>>,
    threads: Vec<Thread>,
    /// Odd: one set. Signed: the part containing `a`, then the other part.
    designated: Vec<BTreeSet<usize>>,
    /// Bipartition side of each vertex (signed case; all false otherwise).
    side: Vec<bool>,
    log: Vec<String>,
}

impl PlaneConstruction {
    /// Step 1 of the construction: the gadget with P_ab and P_cd of length
    /// 2k-1 (odd) or 2k-2 (signed).
    pub fn initial(case: Case, k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParameter(format!("k must be >= 2, got {k}")));
        }
        let long = match case {
            Case::Odd => 2 * k - 1,
            Case::Signed => 2 * k - 2,
        };
        Self::from_gadget(subdivided_k4(k, PathLengths::two_long(long), case)?)
    }

    pub fn from_gadget(gadget: SubdividedK4) -> Result<Self> {
        let n = gadget.host.vertex_count();
        let (side, designated) = match gadget.case {
            Case::Odd => (vec![false; n], vec![(0..n).collect()]),
            Case::Signed => {
                let side =
                    crate::signed::two_coloring(gadget.graph()).ok_or(Error::NotBipartite)?;
                let a_side = side[gadget.branch[0]];
                let (x, y): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| side[v] == a_side);
                (side, vec![x.into_iter().collect(), y.into_iter().collect()])
            }
        };
        let mk = |id, path: &[usize], branch| Thread {
            id,
            start: path[0],
            internal: path[1..path.len() - 1].to_vec(),
            end: path[path.len() - 1],
            status: ThreadStatus::Eligible,
            branch,
        };
        let threads = vec![
            mk(0, gadget.path_ab(), BranchPair::AB),
            mk(1, gadget.path_cd(), BranchPair::CD),
        ];
        let mut state = PlaneConstruction {
            case: gadget.case,
            k: gadget.k,
            step: 1,
            host: gadget.host,
            faces: gadget.faces,
            threads,
            designated,
            side,
            log: Vec::new(),
        };
        state.log_step_summary();
        Ok(state)
    }

    pub fn case(&self) -> Case {
        self.case
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn host(&self) -> &SignedGraph {
        &self.host
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn threads(&self) -> &[Thread] {
        &self.threads
    }

    pub fn eligible_threads(&self) -> impl Iterator<Item = &Thread> {
        self.threads.iter().filter(|t| t.eligible())
    }

    pub fn designated(&self) -> &[BTreeSet<usize>] {
        &self.designated
    }

    pub fn log(&self) -> &[String] {
        &self.log
    }

    /// Length every face must have.
    pub fn face_length(&self) -> usize {
        PathLengths::target(self.case, self.k)
    }

    fn log_step_summary(&mut self) {
        let mut lengths: BTreeMap<usize, usize> = BTreeMap::new();
        for t in self.threads.iter().filter(|t| t.eligible()) {
            *lengths.entry(t.length()).or_default() += 1;
        }
        let threads: Vec<String> = lengths
            .iter()
            .map(|(len, count)| format!("{count} of length {len}"))
            .collect();
        let sizes: Vec<String> = self
            .designated
            .iter()
            .map(|s| s.len().to_string())
            .collect();
        let msg = format!(
            "step {}: {} vertices, {} edges, designated {}, eligible threads: {}",
            self.step,
            self.host.vertex_count(),
            self.host.graph().edge_count(),
            sizes.join("/"),
            if threads.is_empty() {
                "none".to_string()
            } else {
                threads.join(", ")
            }
        );
        self.log.push(msg);
    }

    fn new_vertex(&mut self, label: String, side: bool) -> usize {
        self.side.push(side);
        self.host.add_labeled_vertex(label)
    }

    /// Doubles thread `id`: a parallel thread through fresh vertices is drawn
    /// in one of the two faces on the thread, and a bridging thread from the
    /// first internal vertex to the last new vertex splits the new face into
    /// two faces of the target length.
    pub fn thread_double(mut self, id: usize) -> Result<Self> {
        let thread = self
            .threads
            .get(id)
            .cloned()
            .ok_or_else(|| Error::InvalidParameter(format!("no thread {id}")))?;
        if !thread.eligible() {
            return Err(Error::IneligibleThread(id));
        }
        let r = thread.internal.len();
        if r == 0 {
            return Err(Error::InvalidParameter(format!(
                "thread {id} has no internal vertices"
            )));
        }
        let k = self.k;
        let bridge_edges = match self.case {
            Case::Odd => (2 * k).checked_sub(r),
            Case::Signed => (2 * k).checked_sub(r + 1),
        }
        .filter(|&l| l >= 1)
        .ok_or_else(|| {
            Error::InvalidParameter(format!(
                "thread {id} too long for faces of length {}",
                self.face_length()
            ))
        })?;

        let path = thread.vertices();
        let containing: Vec<usize> = (0..self.faces.len())
            .filter(|&f| face_contains_path(&self.faces[f], &path))
            .collect();
        if containing.len() != 2 {
            return Err(Error::Faces(format!(
                "thread {id} borders {} faces, expected 2",
                containing.len()
            )));
        }
        let outer = containing[0];

        let (u, w) = (thread.start, thread.end);
        let old_edges: Vec<Edge> = path.windows(2).map(|p| Edge::new(p[0], p[1])).collect();
        let old_signs: Vec<bool> = old_edges
            .iter()
            .map(|e| self.host.sigma().contains(e))
            .collect();

        // parallel thread u v'_1 .. v'_r w
        let u_side = self.side[u];
        let copies: Vec<usize> = (1..=r)
            .map(|j| self.new_vertex(format!("t{id}'{j}"), u_side ^ (j % 2 == 1)))
            .collect();
        let mut new_path = Vec::with_capacity(r + 2);
        new_path.push(u);
        new_path.extend_from_slice(&copies);
        new_path.push(w);
        for (i, pair) in new_path.windows(2).enumerate() {
            // mirror: edge i of the copy takes the sign of edge r - i
            let neg = self.case == Case::Signed && old_signs[r - i];
            self.host
                .add_edge(pair[0], pair[1], Sign::from_negative(neg))?;
        }

        // bridging thread v_1 .. v'_r
        let first = thread.internal[0];
        let last_copy = copies[r - 1];
        let bridge_negative =
            self.case == Case::Signed && old_signs.iter().filter(|&&s| s).count() % 2 == 0;
        let first_side = self.side[first];
        let bridge_internal: Vec<usize> = (1..bridge_edges)
            .map(|j| self.new_vertex(format!("t{id}~{j}"), first_side ^ (j % 2 == 1)))
            .collect();
        let mut bridge = Vec::with_capacity(bridge_edges + 1);
        bridge.push(first);
        bridge.extend_from_slice(&bridge_internal);
        bridge.push(last_copy);
        for (i, pair) in bridge.windows(2).enumerate() {
            let neg = bridge_negative && i == 0;
            self.host
                .add_edge(pair[0], pair[1], Sign::from_negative(neg))?;
        }

        // faces: the outer face now runs along the copy
        let relabel: BTreeMap<usize, usize> = thread
            .internal
            .iter()
            .copied()
            .zip(copies.iter().copied())
            .collect();
        for v in self.faces[outer].iter_mut() {
            if let Some(&c) = relabel.get(v) {
                *v = c;
            }
        }
        let mut face_a: Vec<usize> = thread.internal.clone();
        face_a.push(w);
        face_a.push(last_copy);
        face_a.extend(bridge_internal.iter().rev());
        let mut face_b: Vec<usize> = vec![first];
        face_b.extend_from_slice(&bridge_internal);
        face_b.extend(copies.iter().rev());
        face_b.push(u);
        self.faces.push(face_a);
        self.faces.push(face_b);

        // designated cliques
        for &c in &copies {
            let slot = match self.case {
                Case::Odd => 0,
                Case::Signed => usize::from(self.side[c] != self.side[0]),
            };
            self.designated[slot].insert(c);
        }

        // thread registry
        self.threads[id].status = ThreadStatus::Split;
        let next_id = self.threads.len();
        self.threads.push(Thread {
            id: next_id,
            start: first,
            internal: thread.internal[1..].to_vec(),
            end: w,
            status: ThreadStatus::Eligible,
            branch: thread.branch,
        });
        self.threads.push(Thread {
            id: next_id + 1,
            start: u,
            internal: copies[..r - 1].to_vec(),
            end: last_copy,
            status: ThreadStatus::Eligible,
            branch: thread.branch,
        });
        self.threads.push(Thread {
            id: next_id + 2,
            start: first,
            internal: bridge_internal,
            end: last_copy,
            status: ThreadStatus::Bridge,
            branch: thread.branch,
        });
        self.log.push(format!(
            "  doubled thread {id} (r={r}): +{r} designated, bridge of {bridge_edges} edges"
        ));
        Ok(self)
    }

    /// Doubles every eligible thread present at the start of the step, in
    /// registry order. Threads without internal vertices are skipped.
    pub fn advance(mut self) -> Result<Self> {
        let ids: Vec<usize> = self.eligible_threads().map(|t| t.id).collect();
        let mut skipped = 0;
        for id in ids {
            if self.threads[id].internal.is_empty() {
                skipped += 1;
                continue;
            }
            self = self.thread_double(id)?;
        }
        if skipped > 0 {
            self.log.push(format!(
                "  skipped {skipped} threads without internal vertices"
            ));
        }
        self.step += 1;
        self.log_step_summary();
        Ok(self)
    }

    /// Combinatorial checks: faces are cycles of the target length (and
    /// unbalanced in the signed case), every edge lies on exactly two
    /// faces, Euler's formula holds, live threads have degree-2 interiors,
    /// and the designated sets have the closed-form size.
    pub fn check_invariants(&self) -> Result<()> {
        let g = self.host.graph();
        let target = self.face_length();
        let mut edge_faces: BTreeMap<Edge, usize> = BTreeMap::new();
        for (i, face) in self.faces.iter().enumerate() {
            let cycle =
                Cycle::new(g, face.clone()).map_err(|e| Error::Faces(format!("face {i}: {e}")))?;
            if face.len() != target {
                return Err(Error::Faces(format!(
                    "face {i} has length {}, expected {target}",
                    face.len()
                )));
            }
            if self.case == Case::Signed && cycle_sign(&self.host, &cycle)? != CycleSign::Unbalanced
            {
                return Err(Error::Faces(format!("face {i} is balanced")));
            }
            for e in cycle.edges() {
                *edge_faces.entry(e).or_default() += 1;
            }
        }
        for e in g.edges() {
            let count = edge_faces.get(&e).copied().unwrap_or(0);
            if count != 2 {
                return Err(Error::Faces(format!("edge {e} lies on {count} faces")));
            }
        }
        let euler = g.vertex_count() as i64 - g.edge_count() as i64 + self.faces.len() as i64;
        if euler != 2 || g.components().len() != 1 {
            return Err(Error::Faces(format!("euler characteristic {euler}")));
        }
        for t in self
            .threads
            .iter()
            .filter(|t| t.status != ThreadStatus::Split)
        {
            if let Some(&v) = t.internal.iter().find(|&&v| g.degree(v) != 2) {
                return Err(Error::Verification(format!(
                    "thread {}: internal vertex {v} has degree {}",
                    t.id,
                    g.degree(v)
                )));
            }
            for v in [t.start, t.end] {
                if g.degree(v) < 3 {
                    return Err(Error::Verification(format!(
                        "thread {}: endpoint {v} has degree {}",
                        t.id,
                        g.degree(v)
                    )));
                }
            }
        }
        let expected = clique_size_formula(self.k, self.step, self.case)?;
        for set in &self.designated {
            if set.len() != expected {
                return Err(Error::Verification(format!(
                    "designated set has {} vertices, formula gives {expected}",
                    set.len()
                )));
            }
        }
        Ok(())
    }

    /// Checks the designated sets directly in the relevant power: the
    /// (2k-1)-th walk-power (odd) or the (2k-2)-th signed bipartite power.
    pub fn verify_designated_cliques(&self) -> Result<Vec<CliqueCertificate>> {
        let k = self.k;
        let (power, name) = match self.case {
            Case::Odd => (walk_power(self.host.graph(), 2 * k - 1)?, "walk-power"),
            Case::Signed => (
                signed_bipartite_power(&self.host, 2 * k - 2)?,
                "signed power",
            ),
        };
        self.designated
            .iter()
            .map(|set| {
                let vs: Vec<usize> = set.iter().copied().collect();
                match missing_pair(&power, &vs) {
                    Some((u, v)) => Err(Error::Verification(format!(
                        "designated vertices {u} and {v} not adjacent in {name}"
                    ))),
                    None => Ok(CliqueCertificate::new(vs, false)),
                }
            })
            .collect()
    }

    /// Plain-text sidecar: parameters, designated sets, faces, threads,
    /// labels and the step log.
    pub fn certificate(&self) -> String {
        let mut out = String::new();
        let g = self.host.graph();
        let _ = writeln!(out, "case {}", self.case.name());
        let _ = writeln!(out, "k {}", self.k);
        let _ = writeln!(out, "step {}", self.step);
        let _ = writeln!(out, "vertices {}", g.vertex_count());
        let _ = writeln!(out, "edges {}", g.edge_count());
        for (i, set) in self.designated.iter().enumerate() {
            let list: Vec<String> = set.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "clique {i} size {} : {}", set.len(), list.join(" "));
        }
        for (i, face) in self.faces.iter().enumerate() {
            let list: Vec<String> = face.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "face {i} : {}", list.join(" "));
        }
        for t in &self.threads {
            let status = match t.status {
                ThreadStatus::Eligible => "eligible",
                ThreadStatus::Bridge => "bridge",
                ThreadStatus::Split => "split",
            };
            let branch = match t.branch {
                BranchPair::AB => "ab",
                BranchPair::CD => "cd",
            };
            let list: Vec<String> = t.vertices().iter().map(|v| v.to_string()).collect();
            let _ = writeln!(
                out,
                "thread {} {status} {branch} : {}",
                t.id,
                list.join(" ")
            );
        }
        if let Some(labels) = g.labels() {
            for (v, l) in labels.iter().enumerate() {
                let _ = writeln!(out, "label {v} {l}");
            }
        }
        for line in &self.log {
            let _ = writeln!(out, "log {}", line.trim_start());
        }
        out
    }
}

/// True when `path` occurs as consecutive vertices of the cyclic `face`,
/// in either direction.
fn face_contains_path(face: &[usize], path: &[usize]) -> bool {
    let n = face.len();
    if path.len() > n {
        return false;
    }
    let Some(start) = face.iter().position(|&v| v == path[0]) else {
        return false;
    };
    let forward = (0..path.len()).all(|i| face[(start + i) % n] == path[i]);
    let backward = (0..path.len()).all(|i| face[(start + n - i) % n] == path[i]);
    forward || backward
}

fn check_steps(k: usize, steps: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be >= 2, got {k}")));
    }
    if steps == 0 || steps > 2 * k - 1 {
        return Err(Error::InvalidParameter(format!(
            "steps must lie in 1..={}, got {steps}",
            2 * k - 1
        )));
    }
    Ok(())
}

fn run(case: Case, k: usize, steps: usize) -> Result<PlaneConstruction> {
    check_steps(k, steps)?;
    let mut state = PlaneConstruction::initial(case, k)?;
    while state.step < steps {
        state = state.advance()?;
    }
    Ok(state)
}

/// Planar graph of odd girth 2k+1 whose (2k-1)-th walk-power contains the
/// designated clique, after `steps` steps (2^(2k) vertices at step 2k-1).
pub fn odd_construction(k: usize, steps: usize) -> Result<PlaneConstruction> {
    run(Case::Odd, k, steps)
}

/// Planar signed bipartite graph of unbalanced girth 2k whose parts carry
/// the designated cliques of the (2k-2)-th signed power.
pub fn signed_construction(k: usize, steps: usize) -> Result<PlaneConstruction> {
    run(Case::Signed, k, steps)
}
