use std::collections::{BTreeSet, HashSet};

use fixedbitset::FixedBitSet;

use super::{check_terminals, SeparatorKind};
use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::graph::{Dense, SimpleGraph, Vertex, VertexSet};

/// Components of `G - x` paired with whether each is full, i.e. has
/// neighbourhood exactly `x`.
fn full_component_data(d: &Dense, x: &FixedBitSet) -> Vec<(FixedBitSet, bool)> {
    let mut allowed = d.full();
    allowed.difference_with(x);
    d.components(&allowed)
        .into_iter()
        .map(|c| {
            let full = d.boundary(&c) == *x;
            (c, full)
        })
        .collect()
}

/// All minimal separators by closure: seeds are the neighbourhoods of the
/// components of `G - N[v]`; every minimal separator `S` and `x ∈ S`
/// contribute the neighbourhoods of the components of `G - (S ∪ N(x))`.
/// Returns `None` once more than `cap` separators have been found.
fn minimal_separators_capped(d: &Dense, cap: usize) -> Option<Vec<FixedBitSet>> {
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut queue: Vec<FixedBitSet> = Vec::new();
    let push = |sep: FixedBitSet, seen: &mut HashSet<FixedBitSet>, queue: &mut Vec<FixedBitSet>| {
        if seen.insert(sep.clone()) {
            queue.push(sep);
        }
        seen.len() <= cap
    };
    for v in 0..d.len() {
        let mut blocked = d.adj[v].clone();
        blocked.insert(v);
        let mut allowed = d.full();
        allowed.difference_with(&blocked);
        for c in d.components(&allowed) {
            if !push(d.boundary(&c), &mut seen, &mut queue) {
                return None;
            }
        }
    }
    while let Some(sep) = queue.pop() {
        for x in sep.ones() {
            let mut blocked = sep.clone();
            blocked.union_with(&d.adj[x]);
            let mut allowed = d.full();
            allowed.difference_with(&blocked);
            for c in d.components(&allowed) {
                if !push(d.boundary(&c), &mut seen, &mut queue) {
                    return None;
                }
            }
        }
    }
    let mut out: Vec<FixedBitSet> = seen.into_iter().collect();
    out.sort_by_key(|b| b.ones().collect::<Vec<_>>());
    Some(out)
}

fn st_ok(d: &Dense, sep: &FixedBitSet, s: usize, t: usize) -> bool {
    if sep.contains(s) || sep.contains(t) {
        return false;
    }
    let data = full_component_data(d, sep);
    let cs = data.iter().find(|(c, _)| c.contains(s)).unwrap();
    let ct = data.iter().find(|(c, _)| c.contains(t)).unwrap();
    !cs.0.contains(t) && cs.1 && ct.1
}

/// Separators of the requested kind, sorted lexicographically. The `(s,t)`
/// kinds require both terminals; separators never contain them.
pub fn separators(g: &SimpleGraph, kind: SeparatorKind, st: Option<(Vertex, Vertex)>) -> Result<Vec<VertexSet>> {
    Ok(separators_capped(g, kind, st, usize::MAX)?.expect("uncapped"))
}

/// As [`separators`], or `None` once the closure passes `cap` minimal
/// separators.
pub(crate) fn separators_capped(
    g: &SimpleGraph,
    kind: SeparatorKind,
    st: Option<(Vertex, Vertex)>,
    cap: usize,
) -> Result<Option<Vec<VertexSet>>> {
    let d = g.dense();
    let terminals = if kind.needs_terminals() {
        let (s, t) = st.ok_or_else(|| Error::Input(format!("{} need terminals s and t", kind.describe())))?;
        check_terminals(|v| g.has_vertex(v), s, t)?;
        Some((d.index(s).unwrap(), d.index(t).unwrap()))
    } else {
        None
    };
    let Some(all) = minimal_separators_capped(&d, cap) else {
        return Ok(None);
    };
    let chosen: Vec<&FixedBitSet> = match kind {
        SeparatorKind::MinimalAny => all.iter().collect(),
        SeparatorKind::MinimalSt => {
            let (s, t) = terminals.unwrap();
            all.iter().filter(|x| st_ok(&d, x, s, t)).collect()
        }
        SeparatorKind::TwoComponentSt => {
            let (s, t) = terminals.unwrap();
            all.iter()
                .filter(|x| st_ok(&d, x, s, t) && full_component_data(&d, x).len() == 2)
                .collect()
        }
        SeparatorKind::TwoComponentAny => all
            .iter()
            .filter(|x| full_component_data(&d, x).len() == 2)
            .collect(),
        SeparatorKind::InclusionMinimal => {
            let mut by_size: Vec<&FixedBitSet> = all.iter().collect();
            by_size.sort_by_key(|b| b.count_ones(..));
            let mut kept: Vec<&FixedBitSet> = Vec::new();
            for x in by_size {
                if !kept.iter().any(|k| k.is_subset(x)) {
                    kept.push(x);
                }
            }
            kept
        }
    };
    let out: BTreeSet<VertexSet> = chosen.into_iter().map(|b| d.to_set(b)).collect();
    Ok(Some(out.into_iter().collect()))
}

pub fn count_separators(g: &SimpleGraph, kind: SeparatorKind, st: Option<(Vertex, Vertex)>) -> Result<BigCount> {
    separators(g, kind, st).map(|v| BigCount::from(v.len()))
}
