//! Digraph, graph, and tournament value types.

use crate::{Error, Result};

/// Common view of digraphs and graphs for labelling code: a fixed vertex set
/// `0..vertex_count()` and a notion of isolated vertices.
pub trait Vertices {
    fn vertex_count(&self) -> usize;
    fn is_isolated(&self, v: usize) -> bool;
}

/// Out-degrees sorted descending, an isomorphism invariant used to identify
/// tournament classes.
pub type OutDegreeSequence = Vec<usize>;

/// A finite simple directed graph on vertices `0..n`.
///
/// Loops are rejected. Both `(u, v)` and `(v, u)` may be present. Arcs are
/// stored sorted and deduplicated, so two digraphs compare equal exactly when
/// they have the same order and arc set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    /// Builds a digraph on `n` vertices from an arc list. Duplicates
    /// collapse; loops and out-of-range endpoints are errors.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        for &(u, v) in &arcs {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    order: n,
                });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
        }
        arcs.sort_unstable();
        arcs.dedup();
        Ok(Self { n, arcs })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in ascending lexicographic order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(u, _)| u == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(_, w)| w == v).count()
    }

    /// Number of arcs incident with `v` in either direction.
    pub fn degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(u, w)| u == v || w == v).count()
    }

    /// The digraph with every arc reversed. Reversing twice returns the
    /// original digraph.
    pub fn reversed(&self) -> Self {
        let arcs: Vec<(usize, usize)> = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        Self::new(self.n, arcs).expect("reversal preserves validity")
    }

    /// Out-degrees sorted descending.
    pub fn out_degree_sequence(&self) -> OutDegreeSequence {
        let mut degs = vec![0usize; self.n];
        for &(u, _) in &self.arcs {
            degs[u] += 1;
        }
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }

    /// Forgets directions. A digon (both `(u, v)` and `(v, u)`) collapses to
    /// a single edge.
    pub fn underlying_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self.arcs.iter().map(|&(u, v)| (u, v)).collect();
        Graph::new(self.n, edges).expect("arc endpoints are valid edge endpoints")
    }

    /// The digraph induced on all vertices except `v`, with vertices above
    /// `v` shifted down by one.
    pub fn without_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let arcs: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .filter(|&&(u, w)| u != v && w != v)
            .map(|&(u, w)| (shift(u), shift(w)))
            .collect();
        Self::new(self.n - 1, arcs)
    }
}

impl Vertices for Digraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn is_isolated(&self, v: usize) -> bool {
        self.degree(v) == 0
    }
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(min, max)` pairs, sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Endpoint order
    /// within a pair is irrelevant; duplicates collapse; loops and
    /// out-of-range endpoints are errors.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut norm: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    order: n,
                });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        norm.dedup();
        Ok(Self { n, edges: norm })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in ascending lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, w)| u == v || w == v)
            .count()
    }

    /// Orients every edge by one bit of `mask`: bit `k` clear orients edge
    /// `k` of [`Self::edges`] from its smaller to its larger endpoint, bit
    /// `k` set the other way. Requires at most 63 edges.
    pub fn orientation(&self, mask: u64) -> Result<Digraph> {
        if self.edges.len() > 63 {
            return Err(Error::SizeCap {
                what: "orientation by bitmask",
                requested: self.edges.len() as u64,
                cap: 63,
            });
        }
        let arcs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .enumerate()
            .map(|(k, &(u, v))| if mask >> k & 1 == 0 { (u, v) } else { (v, u) })
            .collect();
        Digraph::new(self.n, arcs)
    }

    /// True when every vertex is reachable from every other; the one-vertex
    /// and empty graphs count as connected, and any isolated vertex in a
    /// larger graph disconnects it.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

impl Vertices for Graph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn is_isolated(&self, v: usize) -> bool {
        self.degree(v) == 0
    }
}

/// A tournament: an orientation of a complete graph, held as a [`Digraph`]
/// with exactly one arc per vertex pair and no digons.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tournament(Digraph);

impl Tournament {
    /// Validates that `d` has exactly one arc between every vertex pair.
    pub fn new(d: Digraph) -> Result<Self> {
        let n = d.vertex_count();
        let expected = n * n.saturating_sub(1) / 2;
        if d.arc_count() != expected {
            return Err(Error::NotTournament(format!(
                "order {n} needs exactly {expected} arcs, got {}",
                d.arc_count()
            )));
        }
        for u in 0..n {
            for v in u + 1..n {
                if d.has_arc(u, v) == d.has_arc(v, u) {
                    return Err(Error::NotTournament(format!(
                        "pair {{{u}, {v}}} must carry exactly one arc"
                    )));
                }
            }
        }
        Ok(Self(d))
    }

    pub fn as_digraph(&self) -> &Digraph {
        &self.0
    }

    pub fn into_digraph(self) -> Digraph {
        self.0
    }

    /// The reversal is again a tournament.
    pub fn reversed(&self) -> Self {
        Self(self.0.reversed())
    }
}

impl std::ops::Deref for Tournament {
    type Target = Digraph;

    fn deref(&self) -> &Digraph {
        &self.0
    }
}

impl Vertices for Tournament {
    fn vertex_count(&self) -> usize {
        self.0.vertex_count()
    }

    fn is_isolated(&self, v: usize) -> bool {
        self.0.is_isolated(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digraph_normalizes_and_deduplicates_arcs() {
        let d = Digraph::new(3, vec![(2, 1), (0, 1), (2, 1)]).unwrap();
        assert_eq!(d.arcs(), &[(0, 1), (2, 1)]);
        assert_eq!(d.arc_count(), 2);
        assert!(d.has_arc(2, 1));
        assert!(!d.has_arc(1, 2));
    }

    #[test]
    fn digraph_rejects_loops_and_bad_vertices() {
        assert_eq!(
            Digraph::new(2, vec![(1, 1)]).unwrap_err(),
            Error::SelfLoop(1)
        );
        assert_eq!(
            Digraph::new(2, vec![(0, 2)]).unwrap_err(),
            Error::VertexOutOfRange {
                vertex: 2,
                order: 2
            }
        );
    }

    #[test]
    fn digraph_allows_digons() {
        let d = Digraph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        assert_eq!(d.arc_count(), 2);
        assert_eq!(d.underlying_graph().edge_count(), 1);
    }

    #[test]
    fn reversal_is_an_involution() {
        let d = Digraph::new(4, vec![(0, 1), (2, 1), (3, 0)]).unwrap();
        assert_eq!(d.reversed().reversed(), d);
        assert!(d.reversed().has_arc(1, 0));
    }

    #[test]
    fn out_degree_sequence_sorts_descending() {
        let d = Digraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        assert_eq!(d.out_degree_sequence(), vec![3, 1, 0, 0]);
    }

    #[test]
    fn without_vertex_shifts_higher_indices() {
        let d = Digraph::new(4, vec![(0, 1), (1, 3), (3, 2)]).unwrap();
        let e = d.without_vertex(1).unwrap();
        assert_eq!(e.vertex_count(), 3);
        assert_eq!(e.arcs(), &[(2, 1)]);
    }

    #[test]
    fn graph_normalizes_edge_orientation() {
        let g = Graph::new(4, vec![(3, 1), (1, 3), (0, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 3)]);
        assert!(g.has_edge(3, 1));
        assert_eq!(g.degree(3), 1);
    }

    #[test]
    fn orientation_follows_mask_bits() {
        let g = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let d = g.orientation(0b10).unwrap();
        assert_eq!(d.arcs(), &[(0, 1), (2, 1)]);
    }

    #[test]
    fn connectivity_detects_isolated_vertices() {
        let path = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(path.is_connected());
        let with_isolated = Graph::new(3, vec![(0, 1)]).unwrap();
        assert!(!with_isolated.is_connected());
        assert!(with_isolated.is_isolated(2));
        assert!(Graph::new(1, Vec::new()).unwrap().is_connected());
    }

    #[test]
    fn tournament_requires_one_arc_per_pair() {
        let cyclic = Digraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(Tournament::new(cyclic).is_ok());
        let digon = Digraph::new(3, vec![(0, 1), (1, 0), (1, 2)]).unwrap();
        assert!(matches!(
            Tournament::new(digon),
            Err(Error::NotTournament(_))
        ));
        let missing = Digraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            Tournament::new(missing),
            Err(Error::NotTournament(_))
        ));
    }
}
