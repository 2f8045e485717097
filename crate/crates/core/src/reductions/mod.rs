//! Gadget reductions as executable instance transformations.
//!
//! Every builder returns the produced instance together with a
//! [`ReductionCertificate`] naming the counting identities the pair is
//! supposed to satisfy. Certificates are plain data; [`crate::verify`]
//! evaluates them.

mod bis;
mod domination;
mod gadgets;
mod nae;
mod unions;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::count::BigCount;
use crate::enumerate::NaeFormula;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Multigraph, SimpleGraph, Vertex};
use crate::setfamily::{SetFamily, Subset};

pub use bis::{bis_closed_form, mu, reduce_is_to_maximal_bis};
pub use domination::{count_good_dominating_sets, reduce_vc_to_bidomsets};
pub use gadgets::{
    is_z_good, project_separator, thicken_stretch_edge, thicken_stretch_vertex, GadgetContext, GadgetKind,
    GoodnessReport,
};
pub use nae::{large_cut_conditions, reduce_is_to_nae, reduce_nae_to_large_mes};
pub use unions::{reduce_maximalbis_to_setunion, reduce_vc_to_unionreps};

pub const SCHEMA: &str = "locopt/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionKind {
    IsToMaximalbis,
    IsToNae,
    NaeToLargeMes,
    CoreEdge,
    CoreVertex,
    VcToBidomsets,
    MaximalbisToSetunion,
    VcToUnionreps,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 8] = [
        ReductionKind::IsToMaximalbis,
        ReductionKind::IsToNae,
        ReductionKind::NaeToLargeMes,
        ReductionKind::CoreEdge,
        ReductionKind::CoreVertex,
        ReductionKind::VcToBidomsets,
        ReductionKind::MaximalbisToSetunion,
        ReductionKind::VcToUnionreps,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::IsToMaximalbis => "is-to-maximalbis",
            ReductionKind::IsToNae => "is-to-nae",
            ReductionKind::NaeToLargeMes => "nae-to-large-mes",
            ReductionKind::CoreEdge => "core-edge",
            ReductionKind::CoreVertex => "core-vertex",
            ReductionKind::VcToBidomsets => "vc-to-bidomsets",
            ReductionKind::MaximalbisToSetunion => "maximalbis-to-setunion",
            ReductionKind::VcToUnionreps => "vc-to-unionreps",
        }
    }
}

impl std::str::FromStr for ReductionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ReductionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown reduction {s:?}")))
    }
}

/// Any instance a reduction consumes or produces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum Instance {
    Graph(SimpleGraph),
    Bipartite(BipartiteGraph),
    Multigraph(Multigraph),
    Formula(NaeFormula),
    Family(SetFamily),
}

impl Instance {
    /// Hex SHA-256 of the canonical JSON text.
    pub fn digest(&self) -> String {
        let text = serde_json::to_string(self).expect("instances serialize");
        hex::encode(Sha256::digest(text.as_bytes()))
    }

    pub fn describe(&self) -> String {
        match self {
            Instance::Graph(g) => format!("graph on {} vertices with {} edges", g.vertex_count(), g.edge_count()),
            Instance::Bipartite(b) => format!(
                "bipartite graph on {} vertices with {} edges",
                b.graph().vertex_count(),
                b.graph().edge_count()
            ),
            Instance::Multigraph(m) => {
                format!("multigraph on {} vertices with {} edges", m.vertex_count(), m.edge_count())
            }
            Instance::Formula(f) => format!("formula with {} variables and {} clauses", f.vars(), f.clauses().len()),
            Instance::Family(f) => format!("family of {} subsets of [{}]", f.members().len(), f.n()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Source,
    Target,
}

/// A counted quantity of one side of a reduction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum Measure {
    IndependentSets,
    VertexCovers,
    DominatingSets,
    MaximalIndependentSets,
    NaeSat,
    MinimalEdgeSeparators,
    MinimalEdgeSeparatorsSt { s: Vertex, t: Vertex },
    /// Minimal edge separators of maximum cardinality.
    LargestMinimalEdgeSeparators,
    LargestMinimalEdgeSeparatorsSt { s: Vertex, t: Vertex },
    MinimalSeparators,
    MinimalSeparatorsSt { s: Vertex, t: Vertex },
    InclusionMinimalSeparators,
    UnionClosure,
    UnionRepresentations { target: Subset },
}

impl Measure {
    /// Whether the structured counter for this measure enumerates one
    /// witness at a time, so that its cost grows with the count.
    pub fn enumerates(&self) -> bool {
        matches!(
            self,
            Measure::MaximalIndependentSets
                | Measure::MinimalEdgeSeparators
                | Measure::MinimalEdgeSeparatorsSt { .. }
                | Measure::LargestMinimalEdgeSeparators
                | Measure::LargestMinimalEdgeSeparatorsSt { .. }
                | Measure::MinimalSeparators
                | Measure::MinimalSeparatorsSt { .. }
                | Measure::InclusionMinimalSeparators
        )
    }
}

/// `scale · measure(side)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub side: Side,
    pub measure: Measure,
    pub scale: BigCount,
}

impl Term {
    pub fn source(measure: Measure) -> Term {
        Term {
            side: Side::Source,
            measure,
            scale: BigCount::one(),
        }
    }

    pub fn target(measure: Measure) -> Term {
        Term {
            side: Side::Target,
            measure,
            scale: BigCount::one(),
        }
    }

    pub fn times(mut self, scale: u64) -> Term {
        self.scale = BigCount::from(scale);
        self
    }
}

/// A counting identity a certificate asserts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Contract {
    /// `lhs = rhs`.
    Exact { lhs: Term, rhs: Term },
    /// `A ≤ B/c ≤ A + 1/4` with `A = lower`, `B = numerator`,
    /// `c = denominator`. `claimed` is false when the chosen parameter is
    /// below the one the bound is proved for.
    Sandwich {
        lower: Term,
        numerator: Term,
        denominator: BigCount,
        slack: String,
        claimed: bool,
    },
    /// `term` equals a value computed from the source by a stated formula.
    ClosedForm {
        term: Term,
        formula: String,
        value: BigCount,
    },
    /// `MES(G') = Σ_i MES_i(G) · base^{k·i} + offset` for the 2-stretch
    /// gadget. `offset` is the corrected number of single-path separators;
    /// `literal_offset` is `m·k`.
    CardinalityExpansion {
        k: u64,
        base: u64,
        offset: BigCount,
        literal_offset: BigCount,
    },
    /// Good minimal separators of the 4-stretch gadget project onto the
    /// source's minimal edge separators, `3^{k|F|}` to one, and each leaves
    /// exactly two components. Non-good separators respect the stated bound.
    GoodSeparatorCorrespondence { k: u64, non_good_bound: BigCount },
    /// Good dominating sets number `scale · VC(source)`.
    GoodDominatingSets { scale: BigCount },
    /// A bipartition's crossing set has cardinality `k` exactly when the
    /// two maximality conditions hold.
    MaximalityConditions { k: u64 },
}

pub const QUARTER: &str = "1/4";

impl Contract {
    pub fn label(&self) -> String {
        match self {
            Contract::Exact { lhs, rhs } => format!("exact {:?} = {:?}", lhs.measure, rhs.measure),
            Contract::Sandwich { numerator, .. } => format!("sandwich {:?}", numerator.measure),
            Contract::ClosedForm { formula, .. } => format!("closed form {formula}"),
            Contract::CardinalityExpansion { .. } => "cardinality expansion".into(),
            Contract::GoodSeparatorCorrespondence { .. } => "good separator correspondence".into(),
            Contract::GoodDominatingSets { .. } => "good dominating sets".into(),
            Contract::MaximalityConditions { .. } => "maximality conditions".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionCertificate {
    pub schema: String,
    pub reduction: ReductionKind,
    pub source_digest: String,
    pub source: Instance,
    pub target: Instance,
    /// Gadget parameters (`t`, `k`, `n`, `m`, defaults, `x`, `y`, ...).
    pub parameters: BTreeMap<String, u64>,
    /// Designated terminals in the target.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub terminals: Option<(Vertex, Vertex)>,
    /// Readable names of gadget vertices.
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub names: BTreeMap<Vertex, String>,
    pub contracts: Vec<Contract>,
}

impl ReductionCertificate {
    fn new(reduction: ReductionKind, source: Instance, target: Instance) -> Self {
        ReductionCertificate {
            schema: SCHEMA.into(),
            reduction,
            source_digest: source.digest(),
            source,
            target,
            parameters: BTreeMap::new(),
            terminals: None,
            names: BTreeMap::new(),
            contracts: Vec::new(),
        }
    }

    fn param(mut self, key: &str, value: impl TryInto<u64>) -> Self {
        let v = value.try_into().ok().expect("parameter fits in u64");
        self.parameters.insert(key.into(), v);
        self
    }

    pub fn parameter(&self, key: &str) -> Option<u64> {
        self.parameters.get(key).copied()
    }

    pub fn to_json(&self) -> String {
        crate::canonical_json(self)
    }

    /// Rebuilds the certificate from its source and parameters. Structural
    /// verification compares the result with `self`.
    pub fn rebuild(&self) -> Result<ReductionCertificate> {
        let opts = ReduceOptions {
            t: self.parameter("t"),
            k: self.parameter("k"),
            st: self.terminals,
            indexed: self.parameter("indexed") == Some(1),
        };
        reduce(self.reduction, &self.source, &opts)
    }
}

/// Overrides accepted by [`reduce`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReduceOptions {
    pub t: Option<u64>,
    pub k: Option<u64>,
    pub st: Option<(Vertex, Vertex)>,
    pub indexed: bool,
}

fn wrong_input(kind: ReductionKind, want: &str, got: &Instance) -> Error {
    Error::Input(format!("{} expects {want}, got a {}", kind.name(), got.describe()))
}

/// Runs a reduction on a generic instance.
pub fn reduce(kind: ReductionKind, source: &Instance, opts: &ReduceOptions) -> Result<ReductionCertificate> {
    let as_graph = || match source {
        Instance::Graph(g) => Ok(g.clone()),
        Instance::Bipartite(b) => Ok(b.graph().clone()),
        other => Err(wrong_input(kind, "a simple graph", other)),
    };
    let as_multigraph = || match source {
        Instance::Multigraph(m) => Ok(m.clone()),
        Instance::Graph(g) => Ok(g.to_multigraph()),
        Instance::Bipartite(b) => Ok(b.graph().to_multigraph()),
        other => Err(wrong_input(kind, "a multigraph", other)),
    };
    let small = |v: Option<u64>| v.map(|x| x as usize);
    let cert = match kind {
        ReductionKind::IsToMaximalbis => reduce_is_to_maximal_bis(&as_graph()?, small(opts.t))?.1,
        ReductionKind::IsToNae => reduce_is_to_nae(&as_graph()?)?.1,
        ReductionKind::NaeToLargeMes => match source {
            Instance::Formula(f) => reduce_nae_to_large_mes(f)?.1,
            other => return Err(wrong_input(kind, "a formula", other)),
        },
        ReductionKind::CoreEdge => thicken_stretch_edge(&as_multigraph()?, small(opts.k), opts.st)?.1,
        ReductionKind::CoreVertex => thicken_stretch_vertex(&as_multigraph()?, small(opts.k), opts.st)?.1,
        ReductionKind::VcToBidomsets => reduce_vc_to_bidomsets(&as_graph()?, small(opts.t))?.1,
        ReductionKind::MaximalbisToSetunion => match source {
            Instance::Bipartite(b) => reduce_maximalbis_to_setunion(b)?.1,
            Instance::Graph(g) => reduce_maximalbis_to_setunion(&BipartiteGraph::from_coloring(g.clone())?)?.1,
            other => return Err(wrong_input(kind, "a bipartite graph", other)),
        },
        ReductionKind::VcToUnionreps => reduce_vc_to_unionreps(&as_graph()?, opts.indexed)?.1,
    };
    Ok(cert)
}

fn require_one_based(ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition("source vertices must be exactly 1..n".into()))
    }
}

/// Smallest `k ≥ 0` with `base^k ≥ bound`.
fn log_ceil(base: u64, bound: u64) -> u64 {
    let mut k = 0;
    let mut p: u128 = 1;
    while p < bound as u128 {
        p *= base as u128;
        k += 1;
    }
    k
}

/// `⌈m + log₂ m + 10⌉`: the smallest `k` with `2^{k-m-10} ≥ m`.
pub fn default_k_edge(m: usize) -> u64 {
    m as u64 + 10 + log_ceil(2, m as u64)
}

/// `⌈m + n + log₃(n²) + 16⌉`: the smallest `k` with `3^{k-m-n-16} ≥ n²`.
pub fn default_k_vertex(n: usize, m: usize) -> u64 {
    (m + n) as u64 + 16 + log_ceil(3, (n * n) as u64)
}

/// `⌈n + log₂(m+1) + 3⌉`: the smallest `t` with `2^{t-n-3} ≥ m+1`.
pub fn default_t_domination(n: usize, m: usize) -> u64 {
    n as u64 + 3 + log_ceil(2, m as u64 + 1)
}

/// `t = n + 2`.
pub fn default_t_bis(n: usize) -> u64 {
    n as u64 + 2
}

/// `k = n + 2m + n²` for a formula with `n` variables and `m` clauses.
pub fn large_mes_k(n: usize, m: usize) -> u64 {
    (n + 2 * m + n * n) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_ceilings() {
        assert_eq!(default_k_edge(1), 11);
        assert_eq!(default_k_edge(2), 13);
        assert_eq!(default_k_edge(3), 15);
        assert_eq!(default_k_vertex(2, 1), 21);
        assert_eq!(default_t_domination(2, 1), 6);
        assert_eq!(default_t_domination(1, 0), 4);
        assert_eq!(default_t_bis(3), 5);
        assert_eq!(large_mes_k(3, 1), 14);
        assert_eq!(large_mes_k(5, 2), 34);
    }

    #[test]
    fn reduction_names_round_trip() {
        for k in ReductionKind::ALL {
            assert_eq!(k.name().parse::<ReductionKind>().unwrap(), k);
            assert_eq!(serde_json::to_string(&k).unwrap(), format!("\"{}\"", k.name()));
        }
    }
}
