//! Projective cubes: Cayley graphs on Z_2^d generated by the unit vectors
//! and the all-ones vector.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, Sign, SignedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CubeSpec {
    pub dimension: usize,
    pub signed: bool,
}

impl CubeSpec {
    pub fn vertex_count(&self) -> usize {
        1 << self.dimension
    }

    pub fn all_ones(&self) -> usize {
        (1 << self.dimension) - 1
    }

    /// `e_1, ..., e_d` followed by `J`.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = (0..self.dimension).map(|i| 1 << i).collect();
        gens.push(self.all_ones());
        gens
    }

    pub fn build(&self) -> Result<SignedGraph> {
        let d = self.dimension;
        if d < 2 {
            return Err(Error::InvalidParameter(format!(
                "projective cube needs dimension >= 2, got {d}"
            )));
        }
        // Bit-vectors as integers; 2^d vertices must stay addressable.
        if d >= usize::BITS as usize - 1 {
            return Err(Error::InvalidParameter(format!("dimension {d} too large")));
        }
        let j = self.all_ones();
        let mut sg = SignedGraph::default();
        for v in 0..self.vertex_count() {
            sg.add_labeled_vertex(format!("{v:0d$b}"));
        }
        for v in 0..self.vertex_count() {
            for g in self.generators() {
                let w = v ^ g;
                if v < w {
                    let sign = if self.signed && g == j {
                        Sign::Negative
                    } else {
                        Sign::Positive
                    };
                    sg.add_edge(v, w, sign)?;
                }
            }
        }
        Ok(sg)
    }
}

/// `pc:<d>` or `spc:<d>`.
impl FromStr for CubeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("expected pc:<d> or spc:<d>, got {s:?}"));
        let (kind, d) = s.split_once(':').ok_or_else(bad)?;
        let signed = match kind {
            "pc" => false,
            "spc" => true,
            _ => return Err(bad()),
        };
        let dimension = d.parse().map_err(|_| bad())?;
        Ok(CubeSpec { dimension, signed })
    }
}

impl fmt::Display for CubeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.signed { "spc" } else { "pc" };
        write!(f, "{kind}:{}", self.dimension)
    }
}

pub fn projective_cube(d: usize) -> Result<Graph> {
    Ok(CubeSpec {
        dimension: d,
        signed: false,
    }
    .build()?
    .into_graph())
}

/// Projective cube with the antipodal (`J`) edges negative.
pub fn signed_projective_cube(d: usize) -> Result<SignedGraph> {
    CubeSpec {
        dimension: d,
        signed: true,
    }
    .build()
}
