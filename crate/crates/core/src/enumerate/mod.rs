//! Exact counters and enumerators.
//!
//! Two tiers are provided. The functions at this level are the structured
//! tier: component decomposition, pivoted extension search for maximal
//! independent sets, full-component closure for minimal separators and
//! connected-bipartition growth for bonds. [`oracle`] holds the definitional
//! brute-force tier, which sweeps every subset and checks the definition
//! directly; it is the ground truth the structured tier is tested against.
//!
//! Every enumerator returns its witnesses in lexicographic order of the
//! sorted element list.

mod bonds;
mod independent;
mod nae;
pub mod oracle;
mod separators;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Pair, Vertex, VertexSet};

pub use bonds::{
    count_mes, count_mes_st, max_cardinality_mes, max_cardinality_mes_st, mes_by_cardinality,
    minimal_edge_separators,
};
pub use independent::{
    count_dominating_sets, count_independent_sets, count_maximal_independent_sets,
    count_maximal_independent_sets_bipartite, count_vertex_covers, maximal_independent_sets,
    maximal_independent_sets_bipartite,
};
pub use nae::{count_nae_sat, is_satisfiable, NaeFormula};
pub use separators::{count_separators, separators};

pub(crate) use bonds::mes_capped;
pub(crate) use independent::count_mis_capped;
pub(crate) use separators::separators_capped;

/// Largest subset sweep the oracle tier will attempt: `2^24` vertex or edge
/// subsets.
pub const ORACLE_LIMIT: usize = 24;

/// Which family of vertex separators to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeparatorKind {
    /// Minimal `(s,t)`-separators.
    MinimalSt,
    /// Minimal separators: minimal `(a,b)`-separators for some pair.
    MinimalAny,
    /// Minimal separators with no proper subset that is a minimal separator.
    InclusionMinimal,
    /// Minimal `(s,t)`-separators leaving exactly two components.
    TwoComponentSt,
    /// Minimal separators leaving exactly two components.
    TwoComponentAny,
}

impl SeparatorKind {
    pub const ALL: [SeparatorKind; 5] = [
        SeparatorKind::MinimalSt,
        SeparatorKind::MinimalAny,
        SeparatorKind::InclusionMinimal,
        SeparatorKind::TwoComponentSt,
        SeparatorKind::TwoComponentAny,
    ];

    pub fn needs_terminals(self) -> bool {
        matches!(self, SeparatorKind::MinimalSt | SeparatorKind::TwoComponentSt)
    }

    pub fn describe(self) -> &'static str {
        match self {
            SeparatorKind::MinimalSt => "minimal (s,t)-separators",
            SeparatorKind::MinimalAny => "minimal separators",
            SeparatorKind::InclusionMinimal => "inclusion-minimal separators",
            SeparatorKind::TwoComponentSt => "two-component minimal (s,t)-separators",
            SeparatorKind::TwoComponentAny => "two-component minimal separators",
        }
    }
}

/// One enumerated structure.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Vertices(VertexSet),
    EdgeLabels(EdgeSet),
    EdgePairs(BTreeSet<Pair>),
}

/// A count together with the enumerated witnesses, when requested.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub kind: String,
    pub count: BigCount,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Witness>>,
}

impl CountReport {
    pub fn counted(kind: impl Into<String>, count: BigCount) -> Self {
        CountReport {
            kind: kind.into(),
            count,
            witnesses: None,
        }
    }

    pub fn enumerated(kind: impl Into<String>, witnesses: Vec<Witness>) -> Self {
        CountReport {
            kind: kind.into(),
            count: BigCount::from(witnesses.len()),
            witnesses: Some(witnesses),
        }
    }
}

pub(crate) fn check_terminals(
    has_vertex: impl Fn(Vertex) -> bool,
    s: Vertex,
    t: Vertex,
) -> Result<()> {
    for v in [s, t] {
        if !has_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
    }
    if s == t {
        return Err(Error::SameTerminals(s));
    }
    Ok(())
}
