//! Definitional brute force. Every function here sweeps all vertex (or edge,
//! or assignment) subsets and tests the defining property literally, with
//! minimality checked by single-element deletion. Inputs beyond
//! [`ORACLE_LIMIT`] are refused.

use std::collections::{BTreeMap, HashSet};

use super::{check_terminals, SeparatorKind, ORACLE_LIMIT};
use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph, SimpleGraph, Vertex, VertexSet};
use crate::enumerate::NaeFormula;

struct Masks {
    ids: Vec<Vertex>,
    adj: Vec<u64>,
}

impl Masks {
    fn of(g: &SimpleGraph) -> Result<Masks> {
        guard("vertex set", g.vertex_count())?;
        let d = g.dense();
        Ok(Masks {
            adj: d.masks().expect("guarded"),
            ids: d.ids,
        })
    }

    fn n(&self) -> usize {
        self.ids.len()
    }

    fn full(&self) -> u64 {
        (1u64 << self.n()) - 1
    }

    fn index(&self, v: Vertex) -> usize {
        self.ids.binary_search(&v).unwrap()
    }

    fn to_set(&self, m: u64) -> VertexSet {
        (0..self.n()).filter(|i| m & (1 << i) != 0).map(|i| self.ids[i]).collect()
    }

    fn reach(&self, start: usize, allowed: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    fn components(&self, allowed: u64) -> Vec<u64> {
        let mut left = allowed;
        let mut out = Vec::new();
        while left != 0 {
            let c = self.reach(left.trailing_zeros() as usize, allowed);
            left &= !c;
            out.push(c);
        }
        out
    }

    /// `x` separates `a` from `b`: neither is in `x` and no path avoids `x`.
    fn separates(&self, x: u64, a: usize, b: usize) -> bool {
        let allowed = self.full() & !x;
        allowed & (1 << a) != 0 && allowed & (1 << b) != 0 && self.reach(a, allowed) & (1 << b) == 0
    }

    fn minimal_for(&self, x: u64, a: usize, b: usize) -> bool {
        if !self.separates(x, a, b) {
            return false;
        }
        let mut rest = x;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.separates(x & !(1 << v), a, b) {
                return false;
            }
        }
        true
    }

    /// Minimal `(a,b)`-separator for some pair. Separation depends only on
    /// the components holding `a` and `b`, so one representative per
    /// component suffices.
    fn minimal_any(&self, x: u64) -> bool {
        let reps: Vec<usize> = self
            .components(self.full() & !x)
            .iter()
            .map(|c| c.trailing_zeros() as usize)
            .collect();
        for (i, &a) in reps.iter().enumerate() {
            for &b in &reps[i + 1..] {
                if self.minimal_for(x, a, b) {
                    return true;
                }
            }
        }
        false
    }
}

fn guard(what: &'static str, size: usize) -> Result<()> {
    if size > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            what,
            size,
            limit: ORACLE_LIMIT,
        });
    }
    Ok(())
}

fn sweep(m: &Masks, mut keep: impl FnMut(u64) -> bool) -> Vec<u64> {
    (0..=m.full()).filter(|&x| keep(x)).collect()
}

fn independent(m: &Masks, x: u64) -> bool {
    let mut rest = x;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if m.adj[v] & x != 0 {
            return false;
        }
    }
    true
}

pub fn count_independent_sets(g: &SimpleGraph) -> Result<BigCount> {
    let m = Masks::of(g)?;
    Ok(BigCount::from(sweep(&m, |x| independent(&m, x)).len()))
}

/// Independent sets to which no vertex can be added.
pub fn maximal_independent_sets(g: &SimpleGraph) -> Result<Vec<VertexSet>> {
    let m = Masks::of(g)?;
    let found = sweep(&m, |x| {
        independent(&m, x) && (0..m.n()).all(|v| x & (1 << v) != 0 || !independent(&m, x | (1 << v)))
    });
    let mut out: Vec<VertexSet> = found.into_iter().map(|x| m.to_set(x)).collect();
    out.sort();
    Ok(out)
}

pub fn count_maximal_independent_sets(g: &SimpleGraph) -> Result<BigCount> {
    maximal_independent_sets(g).map(|v| BigCount::from(v.len()))
}

/// Sets meeting every edge.
pub fn count_vertex_covers(g: &SimpleGraph) -> Result<BigCount> {
    let m = Masks::of(g)?;
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (m.index(u), m.index(v))).collect();
    let found = sweep(&m, |x| edges.iter().all(|&(u, v)| x & (1 << u) != 0 || x & (1 << v) != 0));
    Ok(BigCount::from(found.len()))
}

/// Sets such that every vertex outside has a neighbour inside.
pub fn count_dominating_sets(g: &SimpleGraph) -> Result<BigCount> {
    let m = Masks::of(g)?;
    let found = sweep(&m, |x| (0..m.n()).all(|v| x & (1 << v) != 0 || m.adj[v] & x != 0));
    Ok(BigCount::from(found.len()))
}

/// Separators of the requested kind, found by sweeping every vertex subset.
pub fn separators(g: &SimpleGraph, kind: SeparatorKind, st: Option<(Vertex, Vertex)>) -> Result<Vec<VertexSet>> {
    let m = Masks::of(g)?;
    let two = |x: u64| m.components(m.full() & !x).len() == 2;
    let found = match kind {
        SeparatorKind::MinimalSt | SeparatorKind::TwoComponentSt => {
            let (s, t) = st.ok_or_else(|| Error::Input(format!("{} need terminals s and t", kind.describe())))?;
            check_terminals(|v| g.has_vertex(v), s, t)?;
            let (a, b) = (m.index(s), m.index(t));
            sweep(&m, |x| {
                m.minimal_for(x, a, b) && (kind == SeparatorKind::MinimalSt || two(x))
            })
        }
        SeparatorKind::MinimalAny => sweep(&m, |x| m.minimal_any(x)),
        SeparatorKind::TwoComponentAny => sweep(&m, |x| m.minimal_any(x) && two(x)),
        SeparatorKind::InclusionMinimal => {
            let minimal: HashSet<u64> = sweep(&m, |x| m.minimal_any(x)).into_iter().collect();
            let mut kept: Vec<u64> = minimal
                .iter()
                .copied()
                .filter(|&x| {
                    // every proper submask of x
                    let mut sub = x;
                    while sub != 0 {
                        sub = (sub - 1) & x;
                        if minimal.contains(&sub) {
                            return false;
                        }
                    }
                    true
                })
                .collect();
            kept.sort_unstable();
            kept
        }
    };
    let mut out: Vec<VertexSet> = found.into_iter().map(|x| m.to_set(x)).collect();
    out.sort();
    Ok(out)
}

pub fn count_separators(g: &SimpleGraph, kind: SeparatorKind, st: Option<(Vertex, Vertex)>) -> Result<BigCount> {
    separators(g, kind, st).map(|v| BigCount::from(v.len()))
}

struct EdgeMasks {
    n: usize,
    ends: Vec<(usize, usize)>,
    labels: Vec<crate::graph::EdgeId>,
}

impl EdgeMasks {
    fn of(g: &Multigraph) -> EdgeMasks {
        let index = |v: Vertex| g.vertices().binary_search(&v).unwrap();
        EdgeMasks {
            n: g.vertex_count(),
            ends: g.edges().iter().map(|e| (index(e.u), index(e.v))).collect(),
            labels: g.edges().iter().map(|e| e.id).collect(),
        }
    }

    /// Component label of every vertex in `G - f`, by union-find.
    fn labels_without(&self, f: u64) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (i, &(u, v)) in self.ends.iter().enumerate() {
            if f & (1 << i) == 0 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                parent[a] = b;
            }
        }
        (0..self.n).map(|x| find(&mut parent, x)).collect()
    }

    fn separates(&self, f: u64, a: usize, b: usize) -> bool {
        let l = self.labels_without(f);
        l[a] != l[b]
    }

    fn minimal_for(&self, f: u64, a: usize, b: usize) -> bool {
        if !self.separates(f, a, b) {
            return false;
        }
        let mut rest = f;
        while rest != 0 {
            let e = rest.trailing_zeros();
            rest &= rest - 1;
            if self.separates(f & !(1 << e), a, b) {
                return false;
            }
        }
        true
    }

    fn minimal_any(&self, f: u64) -> bool {
        let l = self.labels_without(f);
        let mut reps: Vec<usize> = Vec::new();
        for v in 0..self.n {
            if l[..v].iter().all(|&x| x != l[v]) {
                reps.push(v);
            }
        }
        reps.iter()
            .enumerate()
            .any(|(i, &a)| reps[i + 1..].iter().any(|&b| self.minimal_for(f, a, b)))
    }

    fn to_set(&self, f: u64) -> EdgeSet {
        (0..self.labels.len()).filter(|i| f & (1 << i) != 0).map(|i| self.labels[i]).collect()
    }
}

/// Minimal edge separators by sweeping all edge subsets: `F` separates
/// some pair and no single-edge deletion of `F` still separates it.
pub fn minimal_edge_separators(g: &Multigraph, st: Option<(Vertex, Vertex)>) -> Result<Vec<EdgeSet>> {
    guard("edge set", g.edge_count())?;
    let em = EdgeMasks::of(g);
    let full = (1u64 << g.edge_count()) - 1;
    let found: Vec<u64> = match st {
        Some((s, t)) => {
            check_terminals(|v| g.has_vertex(v), s, t)?;
            let index = |v: Vertex| g.vertices().binary_search(&v).unwrap();
            let (a, b) = (index(s), index(t));
            (0..=full).filter(|&f| em.minimal_for(f, a, b)).collect()
        }
        None => (0..=full).filter(|&f| em.minimal_any(f)).collect(),
    };
    let mut out: Vec<EdgeSet> = found.into_iter().map(|f| em.to_set(f)).collect();
    out.sort();
    Ok(out)
}

/// Visits the crossing edge set of every bipartition of a connected
/// multigraph into two connected sides, the first side holding the smallest
/// vertex (or `s`, with `t` on the other side).
fn for_each_bipartition(
    g: &Multigraph,
    st: Option<(Vertex, Vertex)>,
    mut visit: impl FnMut(VertexSet, Vec<usize>),
) -> Result<()> {
    guard("vertex set", g.vertex_count())?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = Masks::of(&g.underlying_graph())?;
    let (root, avoid) = match st {
        Some((s, t)) => {
            check_terminals(|v| g.has_vertex(v), s, t)?;
            (m.index(s), Some(m.index(t)))
        }
        None => (0, None),
    };
    let ends: Vec<(usize, usize, usize)> = g
        .edges()
        .iter()
        .map(|e| (m.index(e.u), m.index(e.v), e.id.0))
        .collect();
    let full = m.full();
    for side in 0..=full {
        let rest = full & !side;
        if side & (1 << root) == 0 || rest == 0 || avoid.is_some_and(|t| side & (1 << t) != 0) {
            continue;
        }
        if m.reach(root, side) != side || m.reach(rest.trailing_zeros() as usize, rest) != rest {
            continue;
        }
        let crossing = ends
            .iter()
            .filter(|&&(u, v, _)| (side >> u) & 1 != (side >> v) & 1)
            .map(|&(_, _, id)| id)
            .collect();
        visit(m.to_set(side), crossing);
    }
    Ok(())
}

/// Bonds of a connected multigraph as crossing sets of connected
/// bipartitions.
pub fn bipartition_bonds(g: &Multigraph, st: Option<(Vertex, Vertex)>) -> Result<Vec<EdgeSet>> {
    let mut out = Vec::new();
    for_each_bipartition(g, st, |_, ids| {
        out.push(ids.into_iter().map(crate::graph::EdgeId).collect::<EdgeSet>())
    })?;
    out.sort();
    Ok(out)
}

/// Every connected bipartition as its root side and crossing set.
pub fn bipartitions(g: &Multigraph, st: Option<(Vertex, Vertex)>) -> Result<Vec<(VertexSet, EdgeSet)>> {
    let mut out = Vec::new();
    for_each_bipartition(g, st, |side, ids| {
        out.push((side, ids.into_iter().map(crate::graph::EdgeId).collect::<EdgeSet>()))
    })?;
    Ok(out)
}

/// `MES_i` for each cardinality `i`, counted over connected bipartitions.
pub fn bond_cardinalities(g: &Multigraph, st: Option<(Vertex, Vertex)>) -> Result<BTreeMap<usize, BigCount>> {
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for_each_bipartition(g, st, |_, ids| *counts.entry(ids.len()).or_default() += 1)?;
    Ok(counts.into_iter().map(|(k, v)| (k, BigCount::from(v))).collect())
}

/// Satisfying assignments by sweeping all `2^vars` assignments.
pub fn count_nae_sat(phi: &NaeFormula) -> Result<BigCount> {
    guard("variable set", phi.vars())?;
    let n = phi.vars();
    let mut value = vec![false; n + 1];
    let mut count = 0u64;
    for a in 0u64..(1 << n) {
        for (v, slot) in value.iter_mut().enumerate().skip(1) {
            *slot = a & (1 << (v - 1)) != 0;
        }
        if phi.satisfied_by(&value) {
            count += 1;
        }
    }
    Ok(BigCount::from(count))
}
