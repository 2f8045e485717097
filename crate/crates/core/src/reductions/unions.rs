use std::collections::{BTreeMap, BTreeSet};

use super::{require_one_based, Contract, Instance, Measure, ReductionCertificate, ReductionKind, Term};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, SimpleGraph};
use crate::setfamily::{FamilyMode, SetFamily, Subset};

/// The family `{N(v) : v ∈ B}` over class `A`, whose vertices are renamed
/// `1..=|A|` in increasing order. `MIS(G) = |U(F)|`.
pub fn reduce_maximalbis_to_setunion(g: &BipartiteGraph) -> Result<(SetFamily, ReductionCertificate)> {
    let rank: BTreeMap<usize, usize> = g.class_a().iter().enumerate().map(|(i, &v)| (v, i + 1)).collect();
    let mut members: Vec<Subset> = Vec::new();
    for v in g.class_b() {
        let set: Subset = g.graph().neighbors(v).iter().map(|w| rank[w]).collect();
        if !members.contains(&set) {
            members.push(set);
        }
    }
    let f = SetFamily::new(rank.len(), members, FamilyMode::Set)?;
    let mut cert = ReductionCertificate::new(
        ReductionKind::MaximalbisToSetunion,
        Instance::Bipartite(g.clone()),
        Instance::Family(f.clone()),
    )
    .param("n", rank.len())
    .param("b", g.class_b().len());
    cert.names = rank.iter().map(|(&v, &i)| (i, format!("class A vertex {v}"))).collect();
    cert.contracts.push(Contract::Exact {
        lhs: Term::source(Measure::MaximalIndependentSets),
        rhs: Term::target(Measure::UnionClosure),
    });
    Ok((f, cert))
}

/// `S_i` = labels of the edges at vertex `i`, with the edges numbered
/// `1..=m` in lexicographic order; the target union is `[m]`. In set mode
/// the `S_i` must be pairwise distinct and non-empty; indexed mode keeps one
/// member per vertex regardless. `VC(G) = |U_F^{-1}([m])|`.
pub fn reduce_vc_to_unionreps(g: &SimpleGraph, indexed: bool) -> Result<(SetFamily, ReductionCertificate)> {
    require_one_based(g.is_one_based())?;
    let n = g.vertex_count();
    let m = g.edge_count();
    let incidence: Vec<Subset> = (1..=n)
        .map(|i| {
            g.edges()
                .enumerate()
                .filter(|(_, (u, v))| *u == i || *v == i)
                .map(|(j, _)| j + 1)
                .collect()
        })
        .collect();
    if !indexed {
        let empty: Vec<usize> = (1..=n).filter(|i| incidence[i - 1].is_empty()).collect();
        if !empty.is_empty() {
            return Err(Error::Precondition(format!(
                "vertices {empty:?} have no incident edges; use indexed mode"
            )));
        }
        let mut first: BTreeMap<&Subset, usize> = BTreeMap::new();
        for (i, s) in incidence.iter().enumerate() {
            if let Some(j) = first.insert(s, i + 1) {
                return Err(Error::Precondition(format!(
                    "vertices {j} and {} have the same incident edges; use indexed mode",
                    i + 1
                )));
            }
        }
    }
    let mode = if indexed { FamilyMode::Indexed } else { FamilyMode::Set };
    let f = SetFamily::new(m, incidence, mode)?;
    let target: BTreeSet<usize> = (1..=m).collect();
    let mut cert = ReductionCertificate::new(
        ReductionKind::VcToUnionreps,
        Instance::Graph(g.clone()),
        Instance::Family(f.clone()),
    )
    .param("n", n)
    .param("m", m)
    .param("indexed", indexed as u64);
    cert.names = g
        .edges()
        .enumerate()
        .map(|(j, (u, v))| (j + 1, format!("edge {{{u},{v}}}")))
        .collect();
    cert.contracts.push(Contract::Exact {
        lhs: Term::source(Measure::VertexCovers),
        rhs: Term::target(Measure::UnionRepresentations { target }),
    });
    Ok((f, cert))
}
