//! The arc-count bound for orientable graphs of a fixed order, an explicit
//! graph meeting it, and an exhaustive verifier at small orders.

use crate::decide::{is_23_orientable, orient_by_labelling, Witness};
use crate::families::complete_graph;
use crate::graph::Graph;
use crate::labelling::{binomial, is_cordial_triple, is_friendly, lambda, Scope, VertexLabelling};
use crate::{Error, Result};

/// Number of monochromatic vertex pairs every friendly labelling of `n`
/// vertices forces: the pairs inside the two balanced label classes.
pub fn forced_monochromatic_pairs(n: usize) -> u64 {
    binomial(n.div_ceil(2) as u32, 2) + binomial((n / 2) as u32, 2)
}

/// Arc-count bound for order `n >= 6`: with `P` vertex pairs and `Z` forced
/// monochromatic pairs, the bound is `(P - Z) + ceil((P - Z) / 2)`, keeping
/// every cross pair and half the monochromatic ones.
pub fn max_arcs(n: usize) -> Result<u64> {
    if n < 6 {
        return Err(Error::OrderOutOfRange {
            what: "arc-count bound",
            order: n,
            min: 6,
            max: usize::MAX,
        });
    }
    let pairs = binomial(n as u32, 2);
    let cross = pairs - forced_monochromatic_pairs(n);
    Ok(cross + cross.div_ceil(2))
}

/// Outcome of exhaustively testing the bound at one order: an explicit
/// orientable graph meeting the bound, and a sweep of every graph one arc
/// above it.
#[derive(Clone, Debug)]
pub struct ExtremalReport {
    pub order: usize,
    pub bound: u64,
    pub witness_graph: Graph,
    pub witness: Witness,
    pub bound_is_tight: bool,
    pub oversize_subsets: u64,
    pub oversize_orientable: u64,
    pub bound_holds: bool,
}

impl ExtremalReport {
    /// True when the bound is met by the witness and exceeded by nothing.
    pub fn confirmed(&self) -> bool {
        self.bound_is_tight && self.bound_holds
    }
}

/// The deterministic graph used to meet the bound: vertices `0..floor(n/2)`
/// are labelled 1, every cross pair is an edge, and the lexicographically
/// first `ceil((P - Z) / 2)` monochromatic pairs are kept as edges.
fn bound_witness(n: usize) -> Result<(Graph, VertexLabelling)> {
    let ones = n / 2;
    let labels: Vec<u8> = (0..n).map(|v| u8::from(v < ones)).collect();
    let all_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let cross = binomial(n as u32, 2) - forced_monochromatic_pairs(n);
    let keep_mono = cross.div_ceil(2);
    let mut kept_mono = 0u64;
    let mut edges = Vec::new();
    for &(u, v) in &all_pairs {
        if labels[u] != labels[v] {
            edges.push((u, v));
        } else if kept_mono < keep_mono {
            edges.push((u, v));
            kept_mono += 1;
        }
    }
    let g = Graph::new(n, edges)?;
    let f = VertexLabelling::new(labels, Scope::NonisolatedOnly)?;
    Ok((g, f))
}

fn next_combination(idx: &mut [usize], total: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < total - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exhaustively tests the bound at order `6 <= n <= 7`: re-checks the
/// explicit witness graph and decides orientability for every subgraph of
/// the complete graph with `max_arcs(n) + 1` edges. The report records what
/// the sweep actually found.
pub fn verify_extremal_bound(n: usize) -> Result<ExtremalReport> {
    if n < 6 {
        return Err(Error::OrderOutOfRange {
            what: "bound verification",
            order: n,
            min: 6,
            max: 7,
        });
    }
    if n > 7 {
        return Err(Error::SizeCap {
            what: "bound verification",
            requested: n as u64,
            cap: 7,
        });
    }
    let bound = max_arcs(n)?;
    let (witness_graph, labelling) = bound_witness(n)?;
    if witness_graph.edge_count() as u64 != bound {
        return Err(Error::Falsified(format!(
            "witness graph has {} edges, bound is {bound}",
            witness_graph.edge_count()
        )));
    }
    let oriented = orient_by_labelling(&witness_graph, &labelling)?;
    let realized = lambda(&oriented, &labelling)?;
    let bound_is_tight = is_friendly(&labelling, &witness_graph)? && is_cordial_triple(realized);
    let witness = Witness {
        labelling,
        orientation: Some(oriented),
        lambda: realized,
    };
    let complete = complete_graph(n)?;
    let all_edges = complete.edges().to_vec();
    let total = all_edges.len();
    let delete = total - (bound as usize + 1);
    let mut deletion: Vec<usize> = (0..delete).collect();
    let mut oversize_subsets = 0u64;
    let mut oversize_orientable = 0u64;
    loop {
        oversize_subsets += 1;
        let edges: Vec<(usize, usize)> = all_edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !deletion.contains(i))
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, edges)?;
        if is_23_orientable(&g, Scope::NonisolatedOnly)?.decision {
            oversize_orientable += 1;
        }
        if !next_combination(&mut deletion, total) {
            break;
        }
    }
    Ok(ExtremalReport {
        order: n,
        bound,
        witness_graph,
        witness,
        bound_is_tight,
        oversize_subsets,
        oversize_orientable,
        bound_holds: oversize_orientable == 0,
    })
}
