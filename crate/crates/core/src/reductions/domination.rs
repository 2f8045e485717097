use std::collections::BTreeMap;

use super::{default_t_domination, require_one_based, Contract, Instance, Measure, ReductionCertificate, ReductionKind, Term, QUARTER};
use crate::count::BigCount;
use crate::enumerate::ORACLE_LIMIT;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, SimpleGraph, VertexSet};

/// Vertex `s = n + 1` is joined to every source vertex and to `t` pendant
/// vertices `Y = n+2 ..= n+t+1`; each source edge becomes `t` paths
/// `i w j`. Classes are `{s} ∪ W` and `Y ∪ [n]`. With the default
/// `t = ⌈n + log₂(m+1) + 3⌉`, `VC(G) ≤ DS(G')/2^{(m+1)t} ≤ VC(G) + 1/4`.
pub fn reduce_vc_to_bidomsets(g: &SimpleGraph, t: Option<usize>) -> Result<(BipartiteGraph, ReductionCertificate)> {
    require_one_based(g.is_one_based())?;
    let n = g.vertex_count();
    let m = g.edge_count();
    let default = default_t_domination(n, m) as usize;
    let t = t.unwrap_or(default);
    if t == 0 {
        return Err(Error::Precondition("t must be at least 1".into()));
    }
    let s = n + 1;
    let mut names = BTreeMap::from([(s, "s".to_string())]);
    let mut edges: Vec<(usize, usize)> = (1..=n).map(|i| (s, i)).collect();
    let mut class_a = VertexSet::from([s]);
    for r in 1..=t {
        edges.push((s, s + r));
        names.insert(s + r, format!("y_{r}"));
    }
    for (j, (u, v)) in g.edges().enumerate() {
        for r in 1..=t {
            let w = s + t + j * t + r;
            edges.extend([(u, w), (w, v)]);
            class_a.insert(w);
            names.insert(w, format!("x^{{{u}{v}}}_{r}"));
        }
    }
    let total = n + 1 + t + m * t;
    let target = BipartiteGraph::new(SimpleGraph::new(total, edges)?, class_a)?;
    let mut cert = ReductionCertificate::new(
        ReductionKind::VcToBidomsets,
        Instance::Graph(g.clone()),
        Instance::Bipartite(target.clone()),
    )
    .param("t", t)
    .param("default_t", default)
    .param("n", n)
    .param("m", m)
    .param("s", s);
    cert.names = names;
    let scale = BigCount::pow2(((m + 1) * t) as u64);
    cert.contracts = vec![
        Contract::Sandwich {
            lower: Term::source(Measure::VertexCovers),
            numerator: Term::target(Measure::DominatingSets),
            denominator: scale.clone(),
            slack: QUARTER.into(),
            claimed: t >= default,
        },
        Contract::GoodDominatingSets { scale },
    ];
    Ok((target, cert))
}

/// Dominating sets of the gadget that contain `s` and meet every source
/// edge, by sweeping all vertex subsets of the gadget.
pub fn count_good_dominating_sets(source: &SimpleGraph, gadget: &SimpleGraph, s: usize) -> Result<BigCount> {
    require_one_based(gadget.is_one_based())?;
    let n = gadget.vertex_count();
    if n > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            what: "vertex set",
            size: n,
            limit: ORACLE_LIMIT,
        });
    }
    let closed: Vec<u64> = (1..=n)
        .map(|v| gadget.neighbors(v).iter().fold(1u64 << (v - 1), |m, &w| m | 1 << (w - 1)))
        .collect();
    let edges: Vec<u64> = source.edges().map(|(u, v)| 1u64 << (u - 1) | 1 << (v - 1)).collect();
    let mut count = 0u64;
    for x in 0u64..(1 << n) {
        if x >> (s - 1) & 1 == 1 && edges.iter().all(|e| e & x != 0) && closed.iter().all(|c| c & x != 0) {
            count += 1;
        }
    }
    Ok(BigCount::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::oracle;

    #[test]
    fn k2_gadget() {
        let k2 = SimpleGraph::new(2, [(1, 2)]).unwrap();
        let (g, cert) = reduce_vc_to_bidomsets(&k2, None).unwrap();
        assert_eq!(cert.parameter("t"), Some(6));
        assert_eq!(g.graph().vertex_count(), 15);
        assert_eq!(g.class_a().len(), 7);
        let ds = oracle::count_dominating_sets(g.graph()).unwrap();
        let lo = BigCount::from(3u64) * BigCount::pow2(12);
        assert!(ds >= lo);
        assert_eq!(count_good_dominating_sets(&k2, g.graph(), 3).unwrap(), lo);
    }

    #[test]
    fn single_vertex() {
        let (g, cert) = reduce_vc_to_bidomsets(&SimpleGraph::edgeless(1), None).unwrap();
        assert_eq!(cert.parameter("t"), Some(4));
        assert_eq!(g.graph().vertex_count(), 6);
    }
}
