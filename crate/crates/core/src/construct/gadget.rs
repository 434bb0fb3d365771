use crate::clique::missing_pair;
use crate::error::{Error, Result};
use crate::girth::{odd_girth, Girth};
use crate::graph::Graph;
use crate::power::walk_power;

/// Path x_1..x_{2k+1} with every edge subdivided 2k-2 times, the shortcut
/// chain x_1, y_1^2, y_2^3, ..., y_{2k-2}^{2k-1}, x_{2k+1}, and an apex
/// joined to every x_i.
#[derive(Debug, Clone)]
pub struct DegreeGadget {
    pub graph: Graph,
    pub apex: usize,
    pub xs: Vec<usize>,
}

/// Builds the gadget and verifies it: odd girth 2k+1 and the x_i pairwise
/// adjacent in the (2k-1)-th walk-power. A failed check is an error.
pub fn degree_gadget(k: usize) -> Result<DegreeGadget> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be >= 2, got {k}")));
    }
    let mut g = Graph::new(0);
    let xs: Vec<usize> = (1..=2 * k + 1)
        .map(|i| g.add_labeled_vertex(format!("x{i}")))
        .collect();
    // ys[i][t]: t-th subdivision vertex (t = 1..=2k-2) of x_i x_{i+1}, 1-based i
    let mut ys: Vec<Vec<usize>> = vec![Vec::new(); 2 * k + 1];
    for i in 1..=2 * k {
        let mut prev = xs[i - 1];
        ys[i].push(usize::MAX);
        for t in 1..=2 * k - 2 {
            let y = g.add_labeled_vertex(format!("y{t}^{i}"));
            g.add_edge(prev, y)?;
            ys[i].push(y);
            prev = y;
        }
        g.add_edge(prev, xs[i])?;
    }
    let mut chain = vec![xs[0]];
    chain.extend((1..=2 * k - 2).map(|t| ys[t + 1][t]));
    chain.push(xs[2 * k]);
    for pair in chain.windows(2) {
        g.add_edge(pair[0], pair[1])?;
    }
    let apex = g.add_labeled_vertex("u");
    for &x in &xs {
        g.add_edge(apex, x)?;
    }

    let girth = odd_girth(&g);
    if girth != Girth::Finite(2 * k + 1) {
        return Err(Error::Verification(format!(
            "degree gadget has odd girth {girth}, expected {}",
            2 * k + 1
        )));
    }
    let power = walk_power(&g, 2 * k - 1)?;
    if let Some((a, b)) = missing_pair(&power, &xs) {
        return Err(Error::Verification(format!(
            "degree gadget: {a} and {b} not adjacent in walk-power {}",
            2 * k - 1
        )));
    }
    Ok(DegreeGadget { graph: g, apex, xs })
}
