//! Immutable graph data model: simple graphs, bipartite graphs with declared
//! vertex classes, and loopless multigraphs with labeled parallel edges.
//!
//! Vertices are positive integers. Freshly built graphs use the dense range
//! `1..=n`; deleting vertices keeps the surviving ids, so a graph carries its
//! vertex set explicitly.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type VertexSet = BTreeSet<Vertex>;

/// Label of a multigraph edge. Parallel edges carry distinct labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

pub type EdgeSet = BTreeSet<EdgeId>;

/// An unordered vertex pair stored with the smaller endpoint first.
pub type Pair = (Vertex, Vertex);

fn norm(u: Vertex, v: Vertex) -> Pair {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

fn check_vertices(vertices: &[Vertex]) -> Result<()> {
    if let Some(&0) = vertices.first() {
        return Err(Error::UnknownVertex(0));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    vertices: Vec<Vertex>,
    edges: BTreeSet<Pair>,
}

impl SimpleGraph {
    /// Graph on vertices `1..=n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Pair>) -> Result<Self> {
        Self::with_vertices(1..=n, edges)
    }

    pub fn edgeless(n: usize) -> Self {
        SimpleGraph {
            vertices: (1..=n).collect(),
            edges: BTreeSet::new(),
        }
    }

    pub fn with_vertices(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = Pair>,
    ) -> Result<Self> {
        let vertices: Vec<Vertex> = vertices.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        check_vertices(&vertices)?;
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::Loop(u));
            }
            for w in [u, v] {
                if vertices.binary_search(&w).is_err() {
                    return Err(Error::UnknownVertex(w));
                }
            }
            if !set.insert(norm(u, v)) {
                let (a, b) = norm(u, v);
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(SimpleGraph { vertices, edges: set })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order, smaller endpoint first.
    pub fn edges(&self) -> impl Iterator<Item = Pair> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.contains(&norm(u, v))
    }

    /// True when the vertex set is exactly `1..=n`.
    pub fn is_one_based(&self) -> bool {
        self.vertices.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Open neighbourhood of a vertex set. May intersect `set`.
    pub fn neighborhood(&self, set: &VertexSet) -> Result<VertexSet> {
        self.require(set)?;
        let mut out = VertexSet::new();
        for &(a, b) in &self.edges {
            if set.contains(&a) {
                out.insert(b);
            }
            if set.contains(&b) {
                out.insert(a);
            }
        }
        Ok(out)
    }

    fn require(&self, set: &VertexSet) -> Result<()> {
        match set.iter().find(|v| !self.has_vertex(**v)) {
            Some(&v) => Err(Error::UnknownVertex(v)),
            None => Ok(()),
        }
    }

    /// Connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let d = self.dense();
        d.components(&d.full())
            .iter()
            .map(|c| d.to_set(c))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subgraph on `V \ set`. Surviving vertices keep their ids.
    pub fn delete_vertices(&self, set: &VertexSet) -> Result<SimpleGraph> {
        self.require(set)?;
        Ok(SimpleGraph {
            vertices: self.vertices.iter().copied().filter(|v| !set.contains(v)).collect(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|(a, b)| !set.contains(a) && !set.contains(b))
                .collect(),
        })
    }

    pub fn delete_edges(&self, set: &BTreeSet<Pair>) -> Result<SimpleGraph> {
        for &(a, b) in set {
            if !self.has_edge(a, b) {
                let (a, b) = norm(a, b);
                return Err(Error::Input(format!("edge {{{a},{b}}} is not in the graph")));
            }
        }
        let remove: BTreeSet<Pair> = set.iter().map(|&(a, b)| norm(a, b)).collect();
        Ok(SimpleGraph {
            vertices: self.vertices.clone(),
            edges: self.edges.difference(&remove).copied().collect(),
        })
    }

    /// Proper two-colouring, if one exists. Each component's smallest vertex
    /// goes to the first class.
    pub fn two_coloring(&self) -> Option<(VertexSet, VertexSet)> {
        let d = self.dense();
        let mut color: Vec<Option<bool>> = vec![None; d.len()];
        for start in 0..d.len() {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for w in d.adj[v].ones() {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        _ => {}
                    }
                }
            }
        }
        let mut a = VertexSet::new();
        let mut b = VertexSet::new();
        for (i, c) in color.iter().enumerate() {
            if c == &Some(false) {
                a.insert(d.ids[i]);
            } else {
                b.insert(d.ids[i]);
            }
        }
        Some((a, b))
    }

    /// Multigraph with one labeled edge per simple edge; label `i` is the
    /// `i`-th edge in lexicographic order.
    pub fn to_multigraph(&self) -> Multigraph {
        Multigraph {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| Edge { id: EdgeId(i), u, v })
                .collect(),
        }
    }

    pub(crate) fn dense(&self) -> Dense {
        Dense::build(&self.vertices, self.edges.iter().copied())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    base: SimpleGraph,
    class_a: VertexSet,
}

impl BipartiteGraph {
    pub fn new(base: SimpleGraph, class_a: VertexSet) -> Result<Self> {
        if let Some(&v) = class_a.iter().find(|v| !base.has_vertex(**v)) {
            return Err(Error::UnknownVertex(v));
        }
        for (u, v) in base.edges() {
            if class_a.contains(&u) == class_a.contains(&v) {
                return Err(Error::EdgeInsideClass(u, v));
            }
        }
        Ok(BipartiteGraph { base, class_a })
    }

    /// Bipartite view of a graph using its canonical two-colouring.
    pub fn from_coloring(base: SimpleGraph) -> Result<Self> {
        let (a, _) = base
            .two_coloring()
            .ok_or_else(|| Error::BadClasses("graph has an odd cycle".into()))?;
        BipartiteGraph::new(base, a)
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.base
    }

    pub fn class_a(&self) -> &VertexSet {
        &self.class_a
    }

    pub fn class_b(&self) -> VertexSet {
        self.base
            .vertices()
            .iter()
            .copied()
            .filter(|v| !self.class_a.contains(v))
            .collect()
    }

    pub fn delete_vertices(&self, set: &VertexSet) -> Result<BipartiteGraph> {
        let base = self.base.delete_vertices(set)?;
        let class_a = self.class_a.difference(set).copied().collect();
        Ok(BipartiteGraph { base, class_a })
    }

    pub fn into_graph(self) -> SimpleGraph {
        self.base
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub id: EdgeId,
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    pub fn endpoints(&self) -> Pair {
        (self.u, self.v)
    }

    pub fn touches(&self, w: Vertex) -> bool {
        self.u == w || self.v == w
    }
}

/// Loopless multigraph whose parallel edges are told apart by label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

impl Multigraph {
    /// Multigraph on `1..=n`; edges are labeled `0, 1, ...` in the given order.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Pair>) -> Result<Self> {
        let labeled = edges.into_iter().enumerate().map(|(i, (u, v))| (EdgeId(i), u, v));
        Self::from_labeled((1..=n).collect::<Vec<_>>(), labeled)
    }

    pub fn from_labeled(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (EdgeId, Vertex, Vertex)>,
    ) -> Result<Self> {
        let vertices: Vec<Vertex> = vertices.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        check_vertices(&vertices)?;
        let mut by_id = BTreeMap::new();
        for (id, u, v) in edges {
            if u == v {
                return Err(Error::Loop(u));
            }
            for w in [u, v] {
                if vertices.binary_search(&w).is_err() {
                    return Err(Error::UnknownVertex(w));
                }
            }
            let (u, v) = norm(u, v);
            if by_id.insert(id, Edge { id, u, v }).is_some() {
                return Err(Error::DuplicateLabel(id.0));
            }
        }
        Ok(Multigraph {
            vertices,
            edges: by_id.into_values().collect(),
        })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges ordered by label.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .ok()
            .map(|i| &self.edges[i])
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn is_one_based(&self) -> bool {
        self.vertices.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Collapses parallel edges.
    pub fn underlying_graph(&self) -> SimpleGraph {
        SimpleGraph {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().map(|e| (e.u, e.v)).collect(),
        }
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.underlying_graph().components()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn neighborhood(&self, set: &VertexSet) -> Result<VertexSet> {
        self.underlying_graph().neighborhood(set)
    }

    pub fn delete_vertices(&self, set: &VertexSet) -> Result<Multigraph> {
        if let Some(&v) = set.iter().find(|v| !self.has_vertex(**v)) {
            return Err(Error::UnknownVertex(v));
        }
        Ok(Multigraph {
            vertices: self.vertices.iter().copied().filter(|v| !set.contains(v)).collect(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| !set.contains(&e.u) && !set.contains(&e.v))
                .collect(),
        })
    }

    pub fn delete_edges(&self, set: &EdgeSet) -> Result<Multigraph> {
        if let Some(id) = set.iter().find(|id| self.edge(**id).is_none()) {
            return Err(Error::Input(format!("edge label {} is not in the multigraph", id.0)));
        }
        Ok(Multigraph {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().copied().filter(|e| !set.contains(&e.id)).collect(),
        })
    }

    /// Labels of all edges with exactly one endpoint in `side`.
    pub fn crossing_edges(&self, side: &VertexSet) -> EdgeSet {
        self.edges
            .iter()
            .filter(|e| side.contains(&e.u) != side.contains(&e.v))
            .map(|e| e.id)
            .collect()
    }

    /// Edges whose removal disconnects their endpoints (no parallel copy and
    /// no detour).
    pub fn bridges(&self) -> EdgeSet {
        self.edges
            .iter()
            .filter(|e| {
                let rest = self.delete_edges(&EdgeSet::from([e.id])).expect("own label");
                let d = rest.dense();
                let (iu, iv) = (d.index(e.u).unwrap(), d.index(e.v).unwrap());
                !d.reach(iu, &d.full()).contains(iv)
            })
            .map(|e| e.id)
            .collect()
    }

    pub(crate) fn dense(&self) -> Dense {
        Dense::build(&self.vertices, self.edges.iter().map(|e| (e.u, e.v)))
    }
}

impl From<&SimpleGraph> for Multigraph {
    fn from(g: &SimpleGraph) -> Self {
        g.to_multigraph()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Pair>,
}

impl Serialize for SimpleGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawGraph {
            vertices: self.vertices.clone(),
            edges: self.edges().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimpleGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RawGraph::deserialize(d)?;
        SimpleGraph::with_vertices(r.vertices, r.edges).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBipartite {
    vertices: Vec<Vertex>,
    edges: Vec<Pair>,
    class_a: VertexSet,
}

impl Serialize for BipartiteGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawBipartite {
            vertices: self.base.vertices.clone(),
            edges: self.base.edges().collect(),
            class_a: self.class_a.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BipartiteGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RawBipartite::deserialize(d)?;
        SimpleGraph::with_vertices(r.vertices, r.edges)
            .and_then(|g| BipartiteGraph::new(g, r.class_a))
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMultigraph {
    vertices: Vec<Vertex>,
    /// `[label, u, v]` triples.
    edges: Vec<(usize, Vertex, Vertex)>,
}

impl Serialize for Multigraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawMultigraph {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().map(|e| (e.id.0, e.u, e.v)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Multigraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RawMultigraph::deserialize(d)?;
        Multigraph::from_labeled(r.vertices, r.edges.into_iter().map(|(id, u, v)| (EdgeId(id), u, v)))
            .map_err(serde::de::Error::custom)
    }
}

/// Dense index view used by the counting kernels: vertex `ids[i]` has index
/// `i` and adjacency bitset `adj[i]`.
#[derive(Debug, Clone)]
pub(crate) struct Dense {
    pub ids: Vec<Vertex>,
    pub adj: Vec<FixedBitSet>,
}

impl Dense {
    fn build(vertices: &[Vertex], edges: impl Iterator<Item = Pair>) -> Dense {
        let n = vertices.len();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            let iu = vertices.binary_search(&u).expect("validated endpoint");
            let iv = vertices.binary_search(&v).expect("validated endpoint");
            adj[iu].insert(iv);
            adj[iv].insert(iu);
        }
        Dense {
            ids: vertices.to_vec(),
            adj,
        }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn index(&self, v: Vertex) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    pub fn empty(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.len())
    }

    pub fn full(&self) -> FixedBitSet {
        let mut b = self.empty();
        b.insert_range(..);
        b
    }

    pub fn to_set(&self, bits: &FixedBitSet) -> VertexSet {
        bits.ones().map(|i| self.ids[i]).collect()
    }

    /// Open neighbourhood of `set`, excluding `set` itself.
    pub fn boundary(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut out = self.empty();
        for v in set.ones() {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(set);
        out
    }

    /// Vertices reachable from `start` inside `allowed`.
    pub fn reach(&self, start: usize, allowed: &FixedBitSet) -> FixedBitSet {
        let mut seen = self.empty();
        if !allowed.contains(start) {
            return seen;
        }
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in self.adj[v].ones() {
                if allowed.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Components of the subgraph induced by `allowed`, ordered by smallest
    /// index.
    pub fn components(&self, allowed: &FixedBitSet) -> Vec<FixedBitSet> {
        let mut left = allowed.clone();
        let mut out = Vec::new();
        while let Some(v) = left.minimum() {
            let c = self.reach(v, allowed);
            left.difference_with(&c);
            out.push(c);
        }
        out
    }

    /// Adjacency as machine-word masks, for graphs of at most 64 vertices.
    pub fn masks(&self) -> Option<Vec<u64>> {
        if self.len() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|a| a.ones().fold(0u64, |m, i| m | (1 << i)))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[Vertex]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn example() -> SimpleGraph {
        SimpleGraph::new(5, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5)]).unwrap()
    }

    #[test]
    fn components_of_small_graphs() {
        assert_eq!(SimpleGraph::edgeless(3).components(), vec![set(&[1]), set(&[2]), set(&[3])]);
        let p3 = SimpleGraph::new(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(p3.components(), vec![set(&[1, 2, 3])]);
        let g = example().delete_vertices(&set(&[1, 3])).unwrap();
        assert_eq!(g.components(), vec![set(&[2]), set(&[4]), set(&[5])]);
    }

    #[test]
    fn delete_vertices_cases() {
        let p3 = SimpleGraph::new(3, [(1, 2), (2, 3)]).unwrap();
        let g = p3.delete_vertices(&set(&[2])).unwrap();
        assert_eq!(g.vertices(), &[1, 3]);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(p3.delete_vertices(&VertexSet::new()).unwrap(), p3);
        let g = example().delete_vertices(&set(&[1])).unwrap();
        assert_eq!(g.components(), vec![set(&[2, 3, 4]), set(&[5])]);
        assert_eq!(p3.delete_vertices(&set(&[7])), Err(Error::UnknownVertex(7)));
    }

    #[test]
    fn delete_edges_cases() {
        let p3 = SimpleGraph::new(3, [(1, 2), (2, 3)]).unwrap();
        let g = p3.delete_edges(&BTreeSet::from([(1, 2)])).unwrap();
        assert_eq!(g.components(), vec![set(&[1]), set(&[2, 3])]);
        assert_eq!(p3.delete_edges(&BTreeSet::new()).unwrap(), p3);
        let k3 = SimpleGraph::new(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        let all: BTreeSet<Pair> = k3.edges().collect();
        assert_eq!(k3.delete_edges(&all).unwrap().components().len(), 3);
    }

    #[test]
    fn neighborhoods() {
        let p3 = SimpleGraph::new(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(p3.neighborhood(&set(&[2])).unwrap(), set(&[1, 3]));
        assert_eq!(p3.neighborhood(&VertexSet::new()).unwrap(), VertexSet::new());
        // N(S) may intersect S
        assert_eq!(p3.neighborhood(&set(&[1, 2])).unwrap(), set(&[1, 2, 3]));
        assert!(p3.neighborhood(&set(&[4])).is_err());
    }

    #[test]
    fn underlying_graph_collapses_parallels() {
        let m = Multigraph::new(2, [(1, 2), (1, 2)]).unwrap();
        assert_eq!(m.edge_count(), 2);
        let u = m.underlying_graph();
        assert_eq!(u.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        let p3 = SimpleGraph::new(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(p3.to_multigraph().underlying_graph(), p3);
    }

    #[test]
    fn rejects_malformed_graphs() {
        assert_eq!(SimpleGraph::new(2, [(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(SimpleGraph::new(2, [(1, 3)]), Err(Error::UnknownVertex(3)));
        assert_eq!(SimpleGraph::new(2, [(1, 2), (2, 1)]), Err(Error::DuplicateEdge(1, 2)));
        assert_eq!(Multigraph::new(2, [(2, 2)]), Err(Error::Loop(2)));
    }

    #[test]
    fn bipartite_classes_validated() {
        let k2 = SimpleGraph::new(2, [(1, 2)]).unwrap();
        assert!(BipartiteGraph::new(k2.clone(), set(&[1])).is_ok());
        assert_eq!(BipartiteGraph::new(k2, set(&[1, 2])), Err(Error::EdgeInsideClass(1, 2)));
        let c4 = SimpleGraph::new(4, [(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let b = BipartiteGraph::from_coloring(c4).unwrap();
        assert_eq!(b.class_a(), &set(&[1, 3]));
        let sub = b.delete_vertices(&set(&[1])).unwrap();
        assert_eq!(sub.class_a(), &set(&[3]));
        assert_eq!(sub.class_b(), set(&[2, 4]));
    }

    #[test]
    fn json_round_trips() {
        let g = example();
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"vertices":[1,2,3,4,5],"edges":[[1,2],[1,4],[1,5],[2,3],[3,4]]}"#);
        assert_eq!(serde_json::from_str::<SimpleGraph>(&text).unwrap(), g);
        let m = Multigraph::new(2, [(1, 2), (2, 1)]).unwrap();
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(text, r#"{"vertices":[1,2],"edges":[[0,1,2],[1,1,2]]}"#);
        assert_eq!(serde_json::from_str::<Multigraph>(&text).unwrap(), m);
        let b = BipartiteGraph::new(SimpleGraph::new(2, [(1, 2)]).unwrap(), set(&[1])).unwrap();
        let text = serde_json::to_string(&b).unwrap();
        assert_eq!(serde_json::from_str::<BipartiteGraph>(&text).unwrap(), b);
        assert!(serde_json::from_str::<SimpleGraph>(r#"{"vertices":[1],"edges":[[1,1]]}"#).is_err());
    }

    #[test]
    fn bridges_in_multigraphs() {
        let m = Multigraph::new(3, [(1, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(m.bridges(), EdgeSet::from([EdgeId(2)]));
    }
}
