//! Canonical forms for small digraphs and graphs by exhaustive permutation
//! minimization, giving exact isomorphism tests at the orders the census
//! needs.

use crate::graph::{Digraph, Graph};
use crate::{Error, Result};

/// Largest order [`canonical_form`] accepts; every permutation of the vertex
/// set is tried, so the cost is `n!` matrix rebuilds.
pub const MAX_CANONICAL_ORDER: usize = 9;

/// Isomorphism fingerprint of a digraph: the vertex count together with the
/// lexicographically smallest row-major adjacency bit string over all vertex
/// relabellings. Two digraphs of the same order are isomorphic exactly when
/// their canonical forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: u8,
    packed: Vec<u8>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// The adjacency bits packed most significant first, padded with zero
    /// bits to a whole number of bytes.
    pub fn packed_bits(&self) -> &[u8] {
        &self.packed
    }

    /// Two hex digits of order followed by the packed bits in hex.
    pub fn hex(&self) -> String {
        use std::fmt::Write;
        let mut s = String::with_capacity(2 + 2 * self.packed.len());
        write!(s, "{:02x}", self.order).expect("writing to a string cannot fail");
        for b in &self.packed {
            write!(s, "{b:02x}").expect("writing to a string cannot fail");
        }
        s
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.hex())
    }
}

impl serde::Serialize for CanonicalForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.hex())
    }
}

/// Calls `visit` with every permutation of `0..n`, starting from the
/// identity. Uses Heap's algorithm, so consecutive permutations differ by a
/// single swap.
pub(crate) fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    visit(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            visit(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Canonical form of a digraph of order at most [`MAX_CANONICAL_ORDER`].
pub fn canonical_form(d: &Digraph) -> Result<CanonicalForm> {
    let n = d.vertex_count();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::SizeCap {
            what: "canonical form",
            requested: n as u64,
            cap: MAX_CANONICAL_ORDER as u64,
        });
    }
    let mut adj = [0u16; MAX_CANONICAL_ORDER];
    for &(u, v) in d.arcs() {
        adj[u] |= 1 << v;
    }
    let mut best = u128::MAX;
    for_each_permutation(n, |p| {
        let mut bits: u128 = 0;
        for &pi in p {
            let row = adj[pi];
            for &pj in p {
                bits = bits << 1 | u128::from(row >> pj & 1);
            }
        }
        if bits < best {
            best = bits;
        }
    });
    if n == 0 {
        best = 0;
    }
    let total = n * n;
    let mut packed = vec![0u8; total.div_ceil(8)];
    for t in 0..total {
        if best >> (total - 1 - t) & 1 == 1 {
            packed[t / 8] |= 1 << (7 - t % 8);
        }
    }
    Ok(CanonicalForm {
        order: n as u8,
        packed,
    })
}

/// Canonical form of an undirected graph, computed on the digraph that
/// replaces each edge with a digon. Graphs are isomorphic exactly when those
/// digraphs are, so equality of the results is an exact isomorphism test.
pub fn canonical_form_graph(g: &Graph) -> Result<CanonicalForm> {
    let arcs = g
        .edges()
        .iter()
        .flat_map(|&(u, v)| [(u, v), (v, u)])
        .collect::<Vec<_>>();
    let d = Digraph::new(g.vertex_count(), arcs).expect("edge endpoints are valid");
    canonical_form(&d)
}
