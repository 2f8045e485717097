use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{
    default_k_edge, default_k_vertex, require_one_based, Contract, Instance, Measure, ReductionCertificate,
    ReductionKind, Term, QUARTER,
};
use crate::count::BigCount;
use crate::enumerate::{max_cardinality_mes, max_cardinality_mes_st, Witness};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, EdgeId, EdgeSet, Multigraph, SimpleGraph, Vertex, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GadgetKind {
    /// Each edge becomes `k` paths `u w v`.
    Edge,
    /// Each edge becomes `k` paths `u x y z v`.
    Vertex,
}

impl GadgetKind {
    fn internal(self) -> usize {
        match self {
            GadgetKind::Edge => 1,
            GadgetKind::Vertex => 3,
        }
    }
}

/// Identifies a thickened and stretched graph: internal vertex `r` of path
/// `i` of the source edge in position `j` (label order) is
/// `n + (j·k + i)·len + r + 1`, where `len` is the number of internal
/// vertices per path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetContext {
    kind: GadgetKind,
    source: Multigraph,
    k: usize,
}

impl GadgetContext {
    pub fn new(kind: GadgetKind, source: Multigraph, k: usize) -> Result<Self> {
        require_one_based(source.is_one_based())?;
        if k == 0 {
            return Err(Error::Precondition("k must be at least 1".into()));
        }
        Ok(GadgetContext { kind, source, k })
    }

    /// Context of a certificate produced by one of the two gadget builders.
    pub fn from_certificate(cert: &ReductionCertificate) -> Result<Self> {
        let kind = match cert.reduction {
            ReductionKind::CoreEdge => GadgetKind::Edge,
            ReductionKind::CoreVertex => GadgetKind::Vertex,
            other => return Err(Error::ContextMismatch(format!("{} is not a stretch gadget", other.name()))),
        };
        let source = match &cert.source {
            Instance::Multigraph(m) => m.clone(),
            other => return Err(Error::ContextMismatch(format!("source is a {}", other.describe()))),
        };
        let k = cert
            .parameter("k")
            .ok_or_else(|| Error::ContextMismatch("certificate has no k".into()))?;
        GadgetContext::new(kind, source, k as usize)
    }

    pub fn kind(&self) -> GadgetKind {
        self.kind
    }

    pub fn source(&self) -> &Multigraph {
        &self.source
    }

    pub fn k(&self) -> usize {
        self.k
    }

    fn n(&self) -> usize {
        self.source.vertex_count()
    }

    pub fn vertex_count(&self) -> usize {
        self.n() + self.kind.internal() * self.k * self.source.edge_count()
    }

    /// Internal vertices of path `i` (0-based) of the edge in position `j`.
    pub fn internal_vertices(&self, j: usize, i: usize) -> Vec<Vertex> {
        let len = self.kind.internal();
        let base = self.n() + (j * self.k + i) * len;
        (1..=len).map(|r| base + r).collect()
    }

    /// All vertices of path `i` of the edge in position `j`, endpoints
    /// included, in path order.
    pub fn path_vertices(&self, j: usize, i: usize) -> Vec<Vertex> {
        let e = self.source.edges()[j];
        let mut p = vec![e.u];
        p.extend(self.internal_vertices(j, i));
        p.push(e.v);
        p
    }

    /// Edge position and path of an internal vertex.
    fn locate(&self, w: Vertex) -> Option<(usize, usize)> {
        let n = self.n();
        if w <= n || w > self.vertex_count() {
            return None;
        }
        let slot = (w - n - 1) / self.kind.internal();
        Some((slot / self.k, slot % self.k))
    }

    fn build(&self) -> Result<(BipartiteGraph, BTreeMap<Vertex, String>)> {
        let mut edges = Vec::new();
        let mut names = BTreeMap::new();
        let mut class_a: VertexSet = self.source.vertices().iter().copied().collect();
        let letters: &[&str] = match self.kind {
            GadgetKind::Edge => &["w"],
            GadgetKind::Vertex => &["x", "y", "z"],
        };
        for (j, e) in self.source.edges().iter().enumerate() {
            for i in 0..self.k {
                let path = self.path_vertices(j, i);
                edges.extend(path.windows(2).map(|w| (w[0], w[1])));
                for (r, &w) in path[1..path.len() - 1].iter().enumerate() {
                    names.insert(w, format!("{}^{{e{}}}_{}", letters[r], e.id.0, i + 1));
                    // y sits at even distance from the endpoints
                    if r % 2 == 1 {
                        class_a.insert(w);
                    }
                }
            }
        }
        let g = SimpleGraph::new(self.vertex_count(), edges)?;
        Ok((BipartiteGraph::new(g, class_a)?, names))
    }
}

fn check_source(g: &Multigraph) -> Result<()> {
    require_one_based(g.is_one_based())?;
    if g.vertex_count() < 2 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn terminals(g: &Multigraph, st: Option<(Vertex, Vertex)>) -> Result<(Vertex, Vertex)> {
    let (s, t) = st.unwrap_or((1, g.vertex_count()));
    crate::enumerate::check_terminals(|v| g.has_vertex(v), s, t)?;
    Ok((s, t))
}

/// `k`-thickens then 2-stretches every edge of a connected multigraph. The
/// default `k` is `⌈m + log₂ m + 10⌉`; smaller values are accepted for
/// desk-scale checks, and the sandwich bounds are then marked unclaimed.
pub fn thicken_stretch_edge(
    g: &Multigraph,
    k: Option<usize>,
    st: Option<(Vertex, Vertex)>,
) -> Result<(BipartiteGraph, ReductionCertificate)> {
    check_source(g)?;
    let m = g.edge_count();
    let default = default_k_edge(m) as usize;
    let k = k.unwrap_or(default);
    let ctx = GadgetContext::new(GadgetKind::Edge, g.clone(), k)?;
    let (target, names) = ctx.build()?;
    let (s, t) = terminals(g, st)?;
    let (x, _) = max_cardinality_mes(g)?;
    let (y, _) = max_cardinality_mes_st(g, s, t)?;
    // a single path u w v is a separator unless removing w cuts the graph,
    // which happens exactly for bridges when k = 1
    let trivial = if k >= 2 { m * k } else { m - g.bridges().len() };
    let claimed = k >= default;
    let mut cert = ReductionCertificate::new(
        ReductionKind::CoreEdge,
        Instance::Multigraph(g.clone()),
        Instance::Bipartite(target.clone()),
    )
    .param("k", k)
    .param("default_k", default)
    .param("n", g.vertex_count())
    .param("m", m)
    .param("x", x)
    .param("y", y);
    cert.terminals = Some((s, t));
    cert.names = names;
    cert.contracts = vec![
        Contract::Sandwich {
            lower: Term::source(Measure::LargestMinimalEdgeSeparators),
            numerator: Term::target(Measure::MinimalEdgeSeparators),
            denominator: BigCount::pow2((k * x) as u64),
            slack: QUARTER.into(),
            claimed,
        },
        Contract::Sandwich {
            lower: Term::source(Measure::LargestMinimalEdgeSeparatorsSt { s, t }),
            numerator: Term::target(Measure::MinimalEdgeSeparatorsSt { s, t }),
            denominator: BigCount::pow2((k * y) as u64),
            slack: QUARTER.into(),
            claimed,
        },
        Contract::CardinalityExpansion {
            k: k as u64,
            base: 2,
            offset: BigCount::from(trivial),
            literal_offset: BigCount::from(m * k),
        },
    ];
    Ok((target, cert))
}

/// `2^5·m·k + n²·2^{m+n}·3^{k(x-1)}`: the bound on minimal separators of the
/// 4-stretch gadget that are not `x`-good.
pub fn non_good_bound(n: usize, m: usize, k: usize, x: usize) -> BigCount {
    BigCount::from(32 * m * k)
        + BigCount::from(n * n) * BigCount::pow2((m + n) as u64) * BigCount::pow(3, (k * (x - 1)) as u64)
}

/// `k`-thickens then 4-stretches every edge of a connected multigraph. The
/// default `k` is `⌈m + n + log₃(n²) + 16⌉`.
pub fn thicken_stretch_vertex(
    g: &Multigraph,
    k: Option<usize>,
    st: Option<(Vertex, Vertex)>,
) -> Result<(BipartiteGraph, ReductionCertificate)> {
    check_source(g)?;
    let n = g.vertex_count();
    let m = g.edge_count();
    let default = default_k_vertex(n, m) as usize;
    let k = k.unwrap_or(default);
    let ctx = GadgetContext::new(GadgetKind::Vertex, g.clone(), k)?;
    let (target, names) = ctx.build()?;
    let (s, t) = terminals(g, st)?;
    let (x, _) = max_cardinality_mes(g)?;
    let (y, _) = max_cardinality_mes_st(g, s, t)?;
    let claimed = k >= default;
    let mut cert = ReductionCertificate::new(
        ReductionKind::CoreVertex,
        Instance::Multigraph(g.clone()),
        Instance::Bipartite(target.clone()),
    )
    .param("k", k)
    .param("default_k", default)
    .param("n", n)
    .param("m", m)
    .param("x", x)
    .param("y", y);
    cert.terminals = Some((s, t));
    cert.names = names;
    let kx = BigCount::pow(3, (k * x) as u64);
    cert.contracts = vec![
        Contract::Sandwich {
            lower: Term::source(Measure::LargestMinimalEdgeSeparators),
            numerator: Term::target(Measure::MinimalSeparators),
            denominator: kx.clone(),
            slack: QUARTER.into(),
            claimed,
        },
        Contract::Sandwich {
            lower: Term::source(Measure::LargestMinimalEdgeSeparatorsSt { s, t }),
            numerator: Term::target(Measure::MinimalSeparatorsSt { s, t }),
            denominator: BigCount::pow(3, (k * y) as u64),
            slack: QUARTER.into(),
            claimed,
        },
        Contract::Sandwich {
            lower: Term::source(Measure::LargestMinimalEdgeSeparators),
            numerator: Term::target(Measure::InclusionMinimalSeparators),
            denominator: kx,
            slack: QUARTER.into(),
            claimed,
        },
        Contract::GoodSeparatorCorrespondence {
            k: k as u64,
            non_good_bound: non_good_bound(n, m, k, x),
        },
    ];
    Ok((target, cert))
}

/// Source edges whose gadget paths the separator touches. Vertex separators
/// are projected through the 4-stretch gadget, edge separators (as vertex
/// pairs of the gadget graph) through the 2-stretch gadget. Source vertices
/// in a vertex separator are ignored.
pub fn project_separator(ctx: &GadgetContext, sep: &Witness) -> Result<EdgeSet> {
    let label = |j: usize| ctx.source.edges()[j].id;
    match (ctx.kind, sep) {
        (GadgetKind::Vertex, Witness::Vertices(x)) => {
            let mut out = EdgeSet::new();
            for &w in x {
                match ctx.locate(w) {
                    Some((j, _)) => {
                        out.insert(label(j));
                    }
                    None if ctx.source.has_vertex(w) => {}
                    None => return Err(Error::ContextMismatch(format!("vertex {w} is not in the gadget"))),
                }
            }
            Ok(out)
        }
        (GadgetKind::Edge, Witness::EdgePairs(f)) => {
            let mut out = EdgeSet::new();
            for &(a, b) in f {
                let (inner, outer) = if ctx.locate(a).is_some() { (a, b) } else { (b, a) };
                let (j, _) = ctx
                    .locate(inner)
                    .ok_or_else(|| Error::ContextMismatch(format!("{{{a},{b}}} is not a gadget edge")))?;
                let e = ctx.source.edges()[j];
                if !e.touches(outer) {
                    return Err(Error::ContextMismatch(format!("{{{a},{b}}} is not a gadget edge")));
                }
                out.insert(EdgeId(e.id.0));
            }
            Ok(out)
        }
        (kind, _) => Err(Error::ContextMismatch(format!(
            "{kind:?} gadget separators are {}",
            if kind == GadgetKind::Vertex { "vertex sets" } else { "vertex pairs" }
        ))),
    }
}

/// Which of the goodness conditions a vertex set of the 4-stretch gadget
/// meets: (a) at most one vertex on each path, endpoints included; (b) an
/// edge's paths are hit all or none; (c) no source vertex. The set is
/// `z`-good for `z = |π(X)|` exactly when all three hold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoodnessReport {
    pub separator: VertexSet,
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub projection: EdgeSet,
    /// `|π(X)|` when (a)–(c) hold.
    pub z: Option<usize>,
}

impl GoodnessReport {
    pub fn good(&self) -> bool {
        self.z.is_some()
    }
}

pub fn is_z_good(ctx: &GadgetContext, x: &VertexSet) -> Result<GoodnessReport> {
    if ctx.kind != GadgetKind::Vertex {
        return Err(Error::ContextMismatch("goodness is defined for the 4-stretch gadget".into()));
    }
    let projection = project_separator(ctx, &Witness::Vertices(x.clone()))?;
    let mut a = true;
    let mut b = true;
    for j in 0..ctx.source.edge_count() {
        let hits: Vec<usize> = (0..ctx.k)
            .map(|i| ctx.path_vertices(j, i).iter().filter(|v| x.contains(v)).count())
            .collect();
        a &= hits.iter().all(|&h| h <= 1);
        if hits.contains(&1) {
            b &= hits.iter().all(|&h| h == 1);
        }
    }
    let c = x.iter().all(|v| !ctx.source.has_vertex(*v));
    let z = (a && b && c).then_some(projection.len());
    Ok(GoodnessReport {
        separator: x.clone(),
        a,
        b,
        c,
        projection,
        z,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{count_mes, minimal_edge_separators, separators, SeparatorKind};

    fn k2() -> Multigraph {
        Multigraph::new(2, [(1, 2)]).unwrap()
    }

    #[test]
    fn edge_gadget_on_k2() {
        let (g, cert) = thicken_stretch_edge(&k2(), None, None).unwrap();
        assert_eq!(cert.parameter("k"), Some(11));
        assert_eq!(g.graph().vertex_count(), 13);
        assert_eq!(count_mes(&g.graph().to_multigraph()), BigCount::from(2059u64));
        let (g, _) = thicken_stretch_edge(&k2(), Some(2), None).unwrap();
        assert_eq!(count_mes(&g.graph().to_multigraph()), BigCount::from(6u64));
    }

    #[test]
    fn single_path_is_not_a_separator_across_a_bridge() {
        let (g, cert) = thicken_stretch_edge(&k2(), Some(1), None).unwrap();
        assert_eq!(count_mes(&g.graph().to_multigraph()), BigCount::from(2u64));
        let Contract::CardinalityExpansion { offset, literal_offset, .. } = &cert.contracts[2] else {
            panic!("expansion contract");
        };
        assert_eq!((offset.clone(), literal_offset.clone()), (BigCount::zero(), BigCount::one()));
    }

    #[test]
    fn vertex_gadget_good_separators() {
        let (g, cert) = thicken_stretch_vertex(&k2(), Some(1), None).unwrap();
        let ctx = GadgetContext::from_certificate(&cert).unwrap();
        let seps = separators(g.graph(), SeparatorKind::MinimalAny, None).unwrap();
        let good: Vec<_> = seps
            .iter()
            .map(|x| is_z_good(&ctx, x).unwrap())
            .filter(|r| r.good())
            .collect();
        assert_eq!(good.len(), 3);
        assert!(good.iter().all(|r| r.projection == EdgeSet::from([EdgeId(0)]) && r.z == Some(1)));
        assert_eq!(seps.len(), 3);
    }

    #[test]
    fn goodness_conditions() {
        let p = Multigraph::new(2, [(1, 2), (1, 2)]).unwrap();
        let ctx = GadgetContext::new(GadgetKind::Vertex, p, 2).unwrap();
        assert!(!is_z_good(&ctx, &VertexSet::from([1])).unwrap().c);
        // middle vertices of both paths of the first edge
        let ys: VertexSet = (0..2).map(|i| ctx.internal_vertices(0, i)[1]).collect();
        let r = is_z_good(&ctx, &ys).unwrap();
        assert_eq!(r.z, Some(1));
        let two = ctx.internal_vertices(0, 0)[..2].iter().copied().collect();
        assert!(!is_z_good(&ctx, &two).unwrap().a);
        let one = VertexSet::from([ctx.internal_vertices(0, 0)[0]]);
        assert!(!is_z_good(&ctx, &one).unwrap().b);
        assert!(is_z_good(&ctx, &VertexSet::from([99])).is_err());
    }

    #[test]
    fn projections() {
        let p3 = Multigraph::new(3, [(1, 2), (2, 3)]).unwrap();
        let (g, cert) = thicken_stretch_edge(&p3, Some(2), None).unwrap();
        let ctx = GadgetContext::from_certificate(&cert).unwrap();
        for f in minimal_edge_separators(&g.graph().to_multigraph(), None).unwrap() {
            let pairs = f
                .iter()
                .map(|id| g.graph().edges().nth(id.0).unwrap())
                .collect();
            let pi = project_separator(&ctx, &Witness::EdgePairs(pairs)).unwrap();
            assert!(pi.len() == 1);
        }
        assert!(project_separator(&ctx, &Witness::Vertices(VertexSet::new())).is_err());
        let vctx = GadgetContext::new(GadgetKind::Vertex, p3, 1).unwrap();
        assert!(project_separator(&vctx, &Witness::Vertices(VertexSet::from([1, 2]))).unwrap().is_empty());
    }

    #[test]
    fn rejects_disconnected_sources() {
        let g = Multigraph::new(3, [(1, 2)]).unwrap();
        assert_eq!(thicken_stretch_edge(&g, None, None).unwrap_err(), Error::Disconnected);
        assert_eq!(thicken_stretch_vertex(&Multigraph::new(1, []).unwrap(), None, None).unwrap_err(), Error::Disconnected);
    }
}
