//! Subdivisions of K4 whose four faces all have the same length.

use crate::clique::{missing_pair, CliqueCertificate};
use crate::error::{Error, Result};
use crate::graph::{Graph, Sign, SignedGraph};
use crate::power::{signed_bipartite_power, walk_power};
use crate::signed::bipartition;

use super::Case;

/// Edge counts of the six subdivision paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathLengths {
    pub ab: usize,
    pub ac: usize,
    pub ad: usize,
    pub bc: usize,
    pub bd: usize,
    pub cd: usize,
}

impl PathLengths {
    /// `ab` and `cd` of length `long`, the other four single edges.
    pub fn two_long(long: usize) -> Self {
        PathLengths {
            ab: long,
            ac: 1,
            ad: 1,
            bc: 1,
            bd: 1,
            cd: long,
        }
    }

    fn as_array(&self) -> [(&'static str, usize); 6] {
        [
            ("ab", self.ab),
            ("ac", self.ac),
            ("ad", self.ad),
            ("bc", self.bc),
            ("bd", self.bd),
            ("cd", self.cd),
        ]
    }

    /// Face length every face must have in the given case.
    pub fn target(case: Case, k: usize) -> usize {
        match case {
            Case::Odd => 2 * k + 1,
            Case::Signed => 2 * k,
        }
    }

    fn validate(&self, case: Case, k: usize) -> Result<()> {
        for (name, t) in self.as_array() {
            if t == 0 {
                return Err(Error::InfeasibleLengths(format!("t_{name} must be >= 1")));
            }
        }
        for (x, tx, y, ty) in [
            ("ab", self.ab, "cd", self.cd),
            ("ac", self.ac, "bd", self.bd),
            ("ad", self.ad, "bc", self.bc),
        ] {
            if tx != ty {
                return Err(Error::InfeasibleLengths(format!(
                    "t_{x} = t_{y} violated ({tx} != {ty})"
                )));
            }
        }
        let target = Self::target(case, k);
        for (face, sum) in [
            ("abc", self.ab + self.bc + self.ac),
            ("abd", self.ab + self.bd + self.ad),
            ("acd", self.ac + self.cd + self.ad),
            ("bcd", self.bc + self.cd + self.bd),
        ] {
            if sum != target {
                return Err(Error::InfeasibleLengths(format!(
                    "face {face} has length {sum}, expected {target}"
                )));
            }
        }
        Ok(())
    }
}

/// A subdivided K4 with its branch vertices, full subdivision paths and the
/// four facial cycles of its plane embedding.
#[derive(Debug, Clone)]
pub struct SubdividedK4 {
    pub case: Case,
    pub k: usize,
    pub host: SignedGraph,
    /// Branch vertices a, b, c, d.
    pub branch: [usize; 4],
    pub lengths: PathLengths,
    /// Vertex sequences of P_ab, P_ac, P_ad, P_bc, P_bd, P_cd, endpoints included.
    pub paths: [Vec<usize>; 6],
    pub faces: Vec<Vec<usize>>,
}

const AB: usize = 0;
const AC: usize = 1;
const AD: usize = 2;
const BC: usize = 3;
const BD: usize = 4;
const CD: usize = 5;

/// Builds the gadget. In the signed case the first edges of P_ab (at a) and
/// of P_cd (at c) are negative, which makes every face unbalanced.
pub fn subdivided_k4(k: usize, lengths: PathLengths, case: Case) -> Result<SubdividedK4> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be >= 1".into()));
    }
    lengths.validate(case, k)?;
    let mut host = SignedGraph::default();
    let branch = ["a", "b", "c", "d"].map(|l| host.add_labeled_vertex(l));
    let [a, b, c, d] = branch;
    let mut build = |name: &str, x: usize, y: usize, len: usize, first_negative: bool| {
        let mut path = vec![x];
        for i in 1..len {
            path.push(host.add_labeled_vertex(format!("{name}{i}")));
        }
        path.push(y);
        for (i, pair) in path.windows(2).enumerate() {
            let sign = Sign::from_negative(first_negative && i == 0);
            host.add_edge(pair[0], pair[1], sign)?;
        }
        Ok::<_, Error>(path)
    };
    let signed = case == Case::Signed;
    let paths = [
        build("ab", a, b, lengths.ab, signed)?,
        build("ac", a, c, lengths.ac, false)?,
        build("ad", a, d, lengths.ad, false)?,
        build("bc", b, c, lengths.bc, false)?,
        build("bd", b, d, lengths.bd, false)?,
        build("cd", c, d, lengths.cd, signed)?,
    ];
    let walk = |segments: &[(usize, bool)]| -> Vec<usize> {
        let mut face = Vec::new();
        for &(p, forward) in segments {
            let path = &paths[p];
            let seq: Vec<usize> = if forward {
                path.clone()
            } else {
                path.iter().rev().copied().collect()
            };
            face.extend_from_slice(&seq[..seq.len() - 1]);
        }
        face
    };
    let faces = vec![
        walk(&[(AB, true), (BC, true), (AC, false)]),
        walk(&[(AB, true), (BD, true), (AD, false)]),
        walk(&[(AC, true), (CD, true), (AD, false)]),
        walk(&[(BC, true), (CD, true), (BD, false)]),
    ];
    Ok(SubdividedK4 {
        case,
        k,
        host,
        branch,
        lengths,
        paths,
        faces,
    })
}

impl SubdividedK4 {
    pub fn graph(&self) -> &Graph {
        self.host.graph()
    }

    pub fn path_ab(&self) -> &[usize] {
        &self.paths[AB]
    }

    pub fn path_cd(&self) -> &[usize] {
        &self.paths[CD]
    }
}

/// Odd case: the (2k-1)-th walk-power is complete on all 4k vertices.
/// Signed case: the (2k-2)-th signed bipartite power is complete on each
/// part. Returns one certificate per clique, or the first missing pair.
pub fn verify_subdivided_k4_power(gadget: &SubdividedK4) -> Result<Vec<CliqueCertificate>> {
    let k = gadget.k;
    let g = gadget.graph();
    match gadget.case {
        Case::Odd => {
            let power = walk_power(g, 2 * k - 1)?;
            let all: Vec<usize> = (0..g.vertex_count()).collect();
            if let Some((u, v)) = missing_pair(&power, &all) {
                return Err(Error::Verification(format!(
                    "{u} and {v} not adjacent in walk-power {}",
                    2 * k - 1
                )));
            }
            Ok(vec![CliqueCertificate::new(all, true)])
        }
        Case::Signed => {
            if k < 2 {
                return Err(Error::InvalidParameter("signed gadget needs k >= 2".into()));
            }
            let power = signed_bipartite_power(&gadget.host, 2 * k - 2)?;
            let (x, y) = bipartition(g).ok_or(Error::NotBipartite)?;
            let mut certs = Vec::new();
            for part in [x, y] {
                if let Some((u, v)) = missing_pair(&power, &part) {
                    return Err(Error::Verification(format!(
                        "{u} and {v} not adjacent in signed power {}",
                        2 * k - 2
                    )));
                }
                certs.push(CliqueCertificate::new(part, true));
            }
            Ok(certs)
        }
    }
}
