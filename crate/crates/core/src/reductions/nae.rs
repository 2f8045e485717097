use std::collections::BTreeMap;

use super::{large_mes_k, Contract, Instance, Measure, ReductionCertificate, ReductionKind, Term};
use crate::enumerate::{is_satisfiable, NaeFormula};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, SimpleGraph, VertexSet};

/// One clause `NAE(i, j, x)` per edge `{i,j}`, in edge order, with the shared
/// variable `x = n + 1`. `SAT(φ) = 2 · IS(G)`.
pub fn reduce_is_to_nae(g: &SimpleGraph) -> Result<(NaeFormula, ReductionCertificate)> {
    super::require_one_based(g.is_one_based())?;
    let n = g.vertex_count();
    let x = n + 1;
    let phi = NaeFormula::new(x, g.edges().map(|(i, j)| [i, j, x]))?;
    let mut cert = ReductionCertificate::new(
        ReductionKind::IsToNae,
        Instance::Graph(g.clone()),
        Instance::Formula(phi.clone()),
    )
    .param("n", n)
    .param("m", g.edge_count())
    .param("x", x);
    cert.contracts.push(Contract::Exact {
        lhs: Term::target(Measure::NaeSat),
        rhs: Term::source(Measure::IndependentSets).times(2),
    });
    Ok((phi, cert))
}

/// Literal vertices: `x_i = i` and `x̄_i = n + i`. Edge labels run through
/// the pairs `{x_i, x̄_i}`, then the three pairs of every clause in clause
/// order, then every pair of vertices in lexicographic order. The designated
/// terminals are `(x_1, x̄_1)`. Requires a satisfiable formula.
pub fn reduce_nae_to_large_mes(phi: &NaeFormula) -> Result<(Multigraph, ReductionCertificate)> {
    if !is_satisfiable(phi) {
        return Err(Error::Unsatisfiable);
    }
    let n = phi.vars();
    let m = phi.clauses().len();
    let mut pairs = Vec::new();
    for i in 1..=n {
        pairs.push((i, n + i));
    }
    for c in phi.clauses() {
        let mut c = *c;
        c.sort_unstable();
        pairs.extend([(c[0], c[1]), (c[0], c[2]), (c[1], c[2])]);
    }
    for u in 1..=2 * n {
        for v in u + 1..=2 * n {
            pairs.push((u, v));
        }
    }
    let g = Multigraph::new(2 * n, pairs)?;
    let k = large_mes_k(n, m);
    let (s, t) = (1, n + 1);
    let mut names = BTreeMap::new();
    for i in 1..=n {
        names.insert(i, format!("x_{i}"));
        names.insert(n + i, format!("not x_{i}"));
    }
    let mut cert = ReductionCertificate::new(
        ReductionKind::NaeToLargeMes,
        Instance::Formula(phi.clone()),
        Instance::Multigraph(g.clone()),
    )
    .param("n", n)
    .param("m", m)
    .param("k", k);
    cert.terminals = Some((s, t));
    cert.names = names;
    cert.contracts.push(Contract::Exact {
        lhs: Term::source(Measure::NaeSat),
        rhs: Term::target(Measure::LargestMinimalEdgeSeparators).times(2),
    });
    cert.contracts.push(Contract::Exact {
        lhs: Term::source(Measure::NaeSat),
        rhs: Term::target(Measure::LargestMinimalEdgeSeparatorsSt { s, t }).times(2),
    });
    cert.contracts.push(Contract::MaximalityConditions { k });
    Ok((g, cert))
}

/// The two conditions characterising a largest separator of the literal
/// graph, for the bipartition with side `side`: (i) each variable has
/// exactly one literal in `side`; (ii) every clause has exactly two of its
/// three pairs crossing. Literal vertices follow [`reduce_nae_to_large_mes`].
pub fn large_cut_conditions(phi: &NaeFormula, side: &VertexSet) -> bool {
    let n = phi.vars();
    let literals = (1..=n).all(|i| side.contains(&i) != side.contains(&(n + i)));
    let clauses = phi.clauses().iter().all(|c| {
        let inside = c.iter().filter(|v| side.contains(v)).count();
        // a 1-2 or 2-1 split crosses exactly two of the three pairs
        inside == 1 || inside == 2
    });
    literals && clauses
}
