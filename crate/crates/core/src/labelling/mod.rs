//! Vertex labellings, the induced arc labelling, and the count statistics
//! the cordiality conditions are phrased in.

mod masks;
pub mod quasigroup;

pub(crate) use masks::{binomial, half_mask_family, in_scope_vertices};
pub use masks::{enumerate_friendly_labellings, FriendlyLabellings};

use crate::graph::{Digraph, Vertices};
use crate::{Error, Result};

/// Which vertices count toward the friendly balance.
///
/// The default ignores isolated vertices, matching the convention that a
/// digraph is judged on the subgraph induced by its nonisolated vertices.
/// `AllVertices` makes isolated vertices participate as well, which can
/// change the verdict for graphs that have them.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub enum Scope {
    #[default]
    NonisolatedOnly,
    AllVertices,
}

impl Scope {
    pub fn as_str(self) -> &'static str {
        match self {
            Scope::NonisolatedOnly => "nonisolated",
            Scope::AllVertices => "all",
        }
    }
}

impl std::fmt::Display for Scope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nonisolated" => Ok(Scope::NonisolatedOnly),
            "all" => Ok(Scope::AllVertices),
            other => Err(Error::Parse {
                line: 0,
                msg: format!("unknown scope '{other}', expected 'nonisolated' or 'all'"),
            }),
        }
    }
}

/// A (0,1) labelling of every vertex of a host graph or digraph, tagged with
/// the scope its friendliness should be judged under.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexLabelling {
    labels: Vec<u8>,
    scope: Scope,
}

impl VertexLabelling {
    /// Wraps a label vector; every entry must be 0 or 1.
    pub fn new(labels: Vec<u8>, scope: Scope) -> Result<Self> {
        if let Some(&bad) = labels.iter().find(|&&l| l > 1) {
            return Err(Error::BadLabel(bad));
        }
        Ok(Self { labels, scope })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Label of vertex `v`.
    pub fn get(&self, v: usize) -> u8 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn scope(&self) -> Scope {
        self.scope
    }

    /// Number of vertices labelled 1.
    pub fn ones(&self) -> usize {
        self.labels.iter().filter(|&&l| l == 1).count()
    }
}

impl serde::Serialize for VertexLabelling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.labels.iter())
    }
}

/// Counts of `+1`, `-1`, and `0` arc labels, in that order.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, serde::Serialize)]
pub struct LambdaTriple {
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
}

impl LambdaTriple {
    pub fn new(alpha: u64, beta: u64, gamma: u64) -> Self {
        Self { alpha, beta, gamma }
    }

    pub fn total(self) -> u64 {
        self.alpha + self.beta + self.gamma
    }

    /// The triple with the `+1` and `-1` counts exchanged, which is what both
    /// arc reversal and labelling complementation do to the statistic.
    pub fn swapped(self) -> Self {
        Self {
            alpha: self.beta,
            beta: self.alpha,
            gamma: self.gamma,
        }
    }
}

impl std::fmt::Display for LambdaTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.alpha, self.beta, self.gamma)
    }
}

/// Arc-label counts split between the arcs incident with a chosen center
/// vertex and all remaining arcs.
#[derive(Copy, Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LambdaSplit {
    pub center: LambdaTriple,
    pub rest: LambdaTriple,
}

/// True when the in-scope label classes differ in size by at most one.
pub fn is_friendly(f: &VertexLabelling, host: &impl Vertices) -> Result<bool> {
    let n = host.vertex_count();
    if f.len() != n {
        return Err(Error::LabellingSize {
            labelled: f.len(),
            order: n,
        });
    }
    let mut ones: i64 = 0;
    let mut zeros: i64 = 0;
    for v in 0..n {
        if f.scope() == Scope::NonisolatedOnly && host.is_isolated(v) {
            continue;
        }
        if f.get(v) == 1 {
            ones += 1;
        } else {
            zeros += 1;
        }
    }
    Ok((ones - zeros).abs() <= 1)
}

/// The induced arc labels `f(v) - f(u)`, aligned with `d.arcs()`.
pub fn induce_arc_labelling(d: &Digraph, f: &VertexLabelling) -> Result<Vec<i8>> {
    if f.len() != d.vertex_count() {
        return Err(Error::LabellingSize {
            labelled: f.len(),
            order: d.vertex_count(),
        });
    }
    Ok(d.arcs()
        .iter()
        .map(|&(u, v)| f.get(v) as i8 - f.get(u) as i8)
        .collect())
}

/// Counts the induced arc labels of `d` under `f`.
pub fn lambda(d: &Digraph, f: &VertexLabelling) -> Result<LambdaTriple> {
    if f.len() != d.vertex_count() {
        return Err(Error::LabellingSize {
            labelled: f.len(),
            order: d.vertex_count(),
        });
    }
    let mut t = LambdaTriple::default();
    for &(u, v) in d.arcs() {
        match f.get(v) as i8 - f.get(u) as i8 {
            1 => t.alpha += 1,
            -1 => t.beta += 1,
            _ => t.gamma += 1,
        }
    }
    Ok(t)
}

/// [`lambda`] split between the arcs incident with `center` and the rest.
pub fn lambda_split(d: &Digraph, center: usize, f: &VertexLabelling) -> Result<LambdaSplit> {
    if center >= d.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: center,
            order: d.vertex_count(),
        });
    }
    if f.len() != d.vertex_count() {
        return Err(Error::LabellingSize {
            labelled: f.len(),
            order: d.vertex_count(),
        });
    }
    let mut split = LambdaSplit {
        center: LambdaTriple::default(),
        rest: LambdaTriple::default(),
    };
    for &(u, v) in d.arcs() {
        let part = if u == center || v == center {
            &mut split.center
        } else {
            &mut split.rest
        };
        match f.get(v) as i8 - f.get(u) as i8 {
            1 => part.alpha += 1,
            -1 => part.beta += 1,
            _ => part.gamma += 1,
        }
    }
    Ok(split)
}

/// True when the three counts pairwise differ by at most one.
pub fn is_cordial_triple(t: LambdaTriple) -> bool {
    t.alpha.abs_diff(t.beta) <= 1 && t.alpha.abs_diff(t.gamma) <= 1 && t.beta.abs_diff(t.gamma) <= 1
}

/// Flips every vertex label. Complementation preserves friendliness and
/// exchanges the `+1` and `-1` counts of the induced arc labelling.
pub fn complement_labelling(f: &VertexLabelling) -> VertexLabelling {
    let labels = f.labels().iter().map(|&l| 1 - l).collect();
    VertexLabelling::new(labels, f.scope()).expect("complement labels stay binary")
}
