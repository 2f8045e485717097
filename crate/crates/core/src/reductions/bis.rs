use super::{default_t_bis, require_one_based, Contract, Instance, Measure, ReductionCertificate, ReductionKind, Term, QUARTER};
use crate::count::BigCount;
use crate::enumerate::ORACLE_LIMIT;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, SimpleGraph, VertexSet};

/// Number of edges with both endpoints in `s`.
pub fn mu(g: &SimpleGraph, s: &VertexSet) -> usize {
    g.edges().filter(|(u, v)| s.contains(u) && s.contains(v)).count()
}

/// `Σ_{S ⊆ [n]} 2^{(m - μ(S)) t}`: the number of maximal independent sets of
/// the bristled, thickened and stretched graph.
pub fn bis_closed_form(g: &SimpleGraph, t: u64) -> Result<BigCount> {
    let n = g.vertex_count();
    if n > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            what: "closed-form subset sum",
            size: n,
            limit: ORACLE_LIMIT,
        });
    }
    let index = |v| g.vertices().binary_search(&v).unwrap();
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (index(u), index(v))).collect();
    let m = edges.len() as u64;
    // tally subsets by μ first; the powers are shared
    let mut by_mu = vec![0u64; edges.len() + 1];
    for s in 0u64..(1 << n) {
        let inside = edges.iter().filter(|&&(u, v)| s >> u & 1 == 1 && s >> v & 1 == 1).count();
        by_mu[inside] += 1;
    }
    Ok(by_mu
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(k, &c)| BigCount::from(c) * BigCount::pow2((m - k as u64) * t))
        .sum())
}

/// Bristles every vertex, then replaces each edge `{i,j}` (`i < j`) by `t`
/// paths `i x y z j`. Vertex `n+i` is the bristle `v_i`; the paths follow in
/// edge order. Classes are `[n] ∪ Y` and `V* ∪ X ∪ Z`. With `t = n + 2`
/// (the default) `IS(G) ≤ MIS(G')/2^{tm} ≤ IS(G) + 1/4`.
pub fn reduce_is_to_maximal_bis(g: &SimpleGraph, t: Option<usize>) -> Result<(BipartiteGraph, ReductionCertificate)> {
    require_one_based(g.is_one_based())?;
    let n = g.vertex_count();
    let m = g.edge_count();
    let default = default_t_bis(n) as usize;
    let t = t.unwrap_or(default);
    if t == 0 {
        return Err(Error::Precondition("t must be at least 1".into()));
    }
    let mut names = std::collections::BTreeMap::new();
    let mut edges = Vec::new();
    let mut class_a: VertexSet = (1..=n).collect();
    for i in 1..=n {
        edges.push((i, n + i));
        names.insert(n + i, format!("v_{i}"));
    }
    for (j, (u, v)) in g.edges().enumerate() {
        for p in 0..t {
            let base = 2 * n + 3 * (j * t + p);
            let (x, y, z) = (base + 1, base + 2, base + 3);
            edges.extend([(u, x), (x, y), (y, z), (z, v)]);
            class_a.insert(y);
            for (w, letter) in [(x, "x"), (y, "y"), (z, "z")] {
                names.insert(w, format!("{letter}^{{{u}{v}}}_{}", p + 1));
            }
        }
    }
    let total = 2 * n + 3 * t * m;
    let target = BipartiteGraph::new(SimpleGraph::new(total, edges)?, class_a)?;
    let tm = (t * m) as u64;
    let mut cert = ReductionCertificate::new(
        ReductionKind::IsToMaximalbis,
        Instance::Graph(g.clone()),
        Instance::Bipartite(target.clone()),
    )
    .param("t", t)
    .param("default_t", default)
    .param("n", n)
    .param("m", m);
    cert.names = names;
    cert.contracts.push(Contract::Sandwich {
        lower: Term::source(Measure::IndependentSets),
        numerator: Term::target(Measure::MaximalIndependentSets),
        denominator: BigCount::pow2(tm),
        slack: QUARTER.into(),
        claimed: t >= default,
    });
    if n <= ORACLE_LIMIT {
        cert.contracts.push(Contract::ClosedForm {
            term: Term::target(Measure::MaximalIndependentSets),
            formula: "sum over S of 2^((m - mu(S)) t)".into(),
            value: bis_closed_form(g, t as u64)?,
        });
    }
    Ok((target, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{count_independent_sets, count_maximal_independent_sets_bipartite, oracle};

    #[test]
    fn mu_counts_inner_edges() {
        let k3 = SimpleGraph::new(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(mu(&k3, &[1, 2, 3].into()), 3);
        assert_eq!(mu(&k3, &VertexSet::new()), 0);
        let g = SimpleGraph::new(5, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5)]).unwrap();
        assert_eq!(mu(&g, &[1, 2, 5].into()), 2);
    }

    #[test]
    fn k2_gadget() {
        let k2 = SimpleGraph::new(2, [(1, 2)]).unwrap();
        let (g2, cert) = reduce_is_to_maximal_bis(&k2, Some(4)).unwrap();
        assert_eq!(g2.graph().vertex_count(), 16);
        assert_eq!(cert.parameter("t"), Some(4));
        assert_eq!(bis_closed_form(&k2, 4).unwrap(), BigCount::from(49u64));
        assert_eq!(count_maximal_independent_sets_bipartite(&g2), BigCount::from(49u64));
        assert_eq!(oracle::count_maximal_independent_sets(g2.graph()).unwrap(), BigCount::from(49u64));
        assert_eq!(count_independent_sets(&k2), BigCount::from(3u64));
    }

    #[test]
    fn edgeless_and_triangle() {
        let (g2, cert) = reduce_is_to_maximal_bis(&SimpleGraph::edgeless(2), None).unwrap();
        assert_eq!(g2.graph().vertex_count(), 4);
        assert_eq!(count_maximal_independent_sets_bipartite(&g2), BigCount::from(4u64));
        assert!(matches!(&cert.contracts[0], Contract::Sandwich { denominator, .. } if *denominator == BigCount::one()));
        let k3 = SimpleGraph::new(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        let (g3, cert) = reduce_is_to_maximal_bis(&k3, None).unwrap();
        assert_eq!(cert.parameter("t"), Some(5));
        assert_eq!(g3.graph().vertex_count(), 6 + 45);
        assert!(matches!(&cert.contracts[0], Contract::Sandwich { denominator, .. } if *denominator == BigCount::pow2(15)));
    }
}
