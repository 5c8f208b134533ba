//! Generators for the graph and digraph families the deciders and
//! constructions exercise.

use crate::graph::{Digraph, Graph, Tournament};
use crate::{Error, Result};

/// Complete graph on `n >= 1` vertices.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::OrderOutOfRange {
            what: "complete graph",
            order: n,
            min: 1,
            max: usize::MAX,
        });
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges)
}

/// Cycle on `n >= 3` vertices, edges `{i, i+1 mod n}`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::OrderOutOfRange {
            what: "cycle",
            order: n,
            min: 3,
            max: usize::MAX,
        });
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Wheel on `n >= 4` vertices: rim cycle on `0..n-1` plus center `n - 1`
/// joined to every rim vertex.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::OrderOutOfRange {
            what: "wheel",
            order: n,
            min: 4,
            max: usize::MAX,
        });
    }
    let c = n - 1;
    let rim = (0..c).map(|i| (i, (i + 1) % c));
    let spokes = (0..c).map(|i| (c, i));
    Graph::new(n, rim.chain(spokes))
}

/// Fan on `n >= 4` vertices: the cycle `0-1-...-(n-1)-0` plus the chords
/// `{0, j}` for `2 <= j <= n-2`, so vertex `0` is adjacent to every other
/// vertex and `1..n-1` is a path. Has `2n - 3` edges.
pub fn fan(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::OrderOutOfRange {
            what: "fan",
            order: n,
            min: 4,
            max: usize::MAX,
        });
    }
    let ring = (0..n).map(|i| (i, (i + 1) % n));
    let chords = (2..n - 1).map(|j| (0, j));
    Graph::new(n, ring.chain(chords))
}

/// Orientation of the wheel with every spoke pointing away from the center
/// and the rim directed `0 -> 1 -> ... -> n-2 -> 0`.
pub fn cycle_out_wheel(n: usize) -> Result<Digraph> {
    if n < 4 {
        return Err(Error::OrderOutOfRange {
            what: "wheel orientation",
            order: n,
            min: 4,
            max: usize::MAX,
        });
    }
    let c = n - 1;
    let rim = (0..c).map(|i| (i, (i + 1) % c));
    let spokes = (0..c).map(|i| (c, i));
    Digraph::new(n, rim.chain(spokes))
}

/// Orientation of the fan with the outer cycle directed
/// `0 -> 1 -> ... -> n-1 -> 0` and every chord pointing away from vertex `0`.
pub fn cycle_out_fan(n: usize) -> Result<Digraph> {
    if n < 4 {
        return Err(Error::OrderOutOfRange {
            what: "fan orientation",
            order: n,
            min: 4,
            max: usize::MAX,
        });
    }
    let ring = (0..n).map(|i| (i, (i + 1) % n));
    let chords = (2..n - 1).map(|j| (0, j));
    Digraph::new(n, ring.chain(chords))
}

/// Three pairwise disjoint edges `{0,1}`, `{2,3}`, `{4,5}` plus `n - 6`
/// isolated vertices.
pub fn parallel_edges(n: usize) -> Result<Graph> {
    if n < 6 {
        return Err(Error::OrderOutOfRange {
            what: "three parallel edges",
            order: n,
            min: 6,
            max: usize::MAX,
        });
    }
    Graph::new(n, vec![(0, 1), (2, 3), (4, 5)])
}

/// The two 4-tournaments that admit no cordial labelling: the orientation
/// with out-degrees `(2, 2, 2, 0)` (a 3-cycle beating a sink) and the one
/// with out-degrees `(3, 1, 1, 1)` (a source beating a 3-cycle). Each is
/// isomorphic to the other's reversal.
pub fn exceptional_4_tournaments() -> (Tournament, Tournament) {
    let sink = Digraph::new(4, vec![(2, 0), (2, 3), (3, 1), (1, 0), (1, 2), (3, 0)])
        .expect("static arc list is valid");
    let source = Digraph::new(4, vec![(0, 2), (2, 3), (3, 1), (0, 1), (1, 2), (0, 3)])
        .expect("static arc list is valid");
    (
        Tournament::new(sink).expect("one arc per pair"),
        Tournament::new(source).expect("one arc per pair"),
    )
}

/// All `2^(n(n-1)/2)` labelled tournaments on `n` vertices, in ascending
/// bitmask order: bit `k` of the mask controls pair `k` of the lexicographic
/// pair list `(0,1), (0,2), ..., (n-2, n-1)`, clear pointing low to high and
/// set pointing high to low. Capped at `n <= 8`.
pub fn enumerate_tournaments(n: usize) -> Result<impl Iterator<Item = Tournament>> {
    if n < 1 {
        return Err(Error::OrderOutOfRange {
            what: "tournament enumeration",
            order: n,
            min: 1,
            max: 8,
        });
    }
    if n > 8 {
        return Err(Error::SizeCap {
            what: "tournament enumeration",
            requested: n as u64,
            cap: 8,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total).map(move |mask| {
        let arcs: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .map(|(k, &(u, v))| if mask >> k & 1 == 0 { (u, v) } else { (v, u) })
            .collect();
        let d = Digraph::new(n, arcs).expect("pair list is valid");
        Tournament::new(d).expect("one arc per pair by construction")
    }))
}
