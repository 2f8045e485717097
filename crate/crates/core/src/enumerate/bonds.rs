use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;

use super::check_terminals;
use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::graph::{Dense, EdgeSet, Multigraph, Vertex};

/// Candidate sides grown per component for each allowed separator.
const SIDES_PER_WITNESS: usize = 64;

/// Calls `visit` with every connected vertex set that contains `root`, lies
/// inside `within` and avoids `excluded`. Each set is produced once: a child
/// adds one border vertex and permanently excludes the border vertices that
/// precede it. Stops early when `visit` returns false.
fn connected_sets(
    d: &Dense,
    within: &FixedBitSet,
    set: &mut FixedBitSet,
    excluded: &mut FixedBitSet,
    visit: &mut dyn FnMut(&FixedBitSet) -> bool,
) -> bool {
    if !visit(set) {
        return false;
    }
    let mut border = d.boundary(set);
    border.intersect_with(within);
    border.difference_with(excluded);
    let border: Vec<usize> = border.ones().collect();
    let mut added = Vec::new();
    let mut ok = true;
    for v in border {
        set.insert(v);
        ok = connected_sets(d, within, set, excluded, visit);
        set.remove(v);
        if !ok {
            break;
        }
        excluded.insert(v);
        added.push(v);
    }
    for v in added {
        excluded.set(v, false);
    }
    ok
}

/// Bonds of the component `comp`: crossing sets of bipartitions into a
/// connected side holding `root` and a connected non-empty remainder. With
/// `avoid`, that vertex must stay on the far side.
fn bonds_of_component(
    g: &Multigraph,
    d: &Dense,
    comp: &FixedBitSet,
    root: usize,
    avoid: Option<usize>,
    cap: usize,
    out: &mut Vec<EdgeSet>,
) -> bool {
    let mut set = d.empty();
    set.insert(root);
    let mut excluded = d.empty();
    if let Some(a) = avoid {
        excluded.insert(a);
    }
    let total = comp.count_ones(..);
    let mut visited = 0usize;
    let side_limit = cap.saturating_mul(SIDES_PER_WITNESS);
    connected_sets(d, comp, &mut set, &mut excluded, &mut |side| {
        visited += 1;
        if visited > side_limit {
            return false;
        }
        let size = side.count_ones(..);
        if size == total {
            return true;
        }
        let mut rest = comp.clone();
        rest.difference_with(side);
        let start = rest.minimum().unwrap();
        if d.reach(start, &rest).count_ones(..) != total - size {
            return true;
        }
        let side_ids = d.to_set(side);
        out.push(g.crossing_edges(&side_ids));
        out.len() <= cap
    })
}

/// Minimal edge separators, or `None` once more than `cap` are found or
/// more than `64 · cap` candidate sides have been grown in one component.
/// A disconnected graph has the empty separator plus the bonds of each
/// component; with terminals in different components only the empty set
/// qualifies.
pub(crate) fn mes_capped(
    g: &Multigraph,
    st: Option<(Vertex, Vertex)>,
    cap: usize,
) -> Result<Option<Vec<EdgeSet>>> {
    let d = g.dense();
    let comps = d.components(&d.full());
    let mut out = Vec::new();
    match st {
        Some((s, t)) => {
            check_terminals(|v| g.has_vertex(v), s, t)?;
            let (is, it) = (d.index(s).unwrap(), d.index(t).unwrap());
            let comp = comps.iter().find(|c| c.contains(is)).unwrap();
            if !comp.contains(it) {
                out.push(EdgeSet::new());
            } else if !bonds_of_component(g, &d, comp, is, Some(it), cap, &mut out) {
                return Ok(None);
            }
        }
        None => {
            if comps.len() > 1 {
                out.push(EdgeSet::new());
            }
            for comp in &comps {
                let root = comp.minimum().unwrap();
                if !bonds_of_component(g, &d, comp, root, None, cap, &mut out) {
                    return Ok(None);
                }
            }
        }
    }
    if out.len() > cap {
        return Ok(None);
    }
    out.sort();
    Ok(Some(out))
}

/// All minimal edge separators (or minimal `(s,t)` edge separators), as
/// sorted sets of edge labels.
pub fn minimal_edge_separators(g: &Multigraph, st: Option<(Vertex, Vertex)>) -> Result<Vec<EdgeSet>> {
    Ok(mes_capped(g, st, usize::MAX)?.expect("uncapped"))
}

pub fn count_mes(g: &Multigraph) -> BigCount {
    BigCount::from(minimal_edge_separators(g, None).expect("no terminals").len())
}

pub fn count_mes_st(g: &Multigraph, s: Vertex, t: Vertex) -> Result<BigCount> {
    Ok(BigCount::from(minimal_edge_separators(g, Some((s, t)))?.len()))
}

/// `MES_i` for every cardinality `i` that occurs.
pub fn mes_by_cardinality(g: &Multigraph, st: Option<(Vertex, Vertex)>) -> Result<BTreeMap<usize, BigCount>> {
    let mut out: BTreeMap<usize, u64> = BTreeMap::new();
    for f in minimal_edge_separators(g, st)? {
        *out.entry(f.len()).or_default() += 1;
    }
    Ok(out.into_iter().map(|(k, v)| (k, BigCount::from(v))).collect())
}

fn largest(g: &Multigraph, st: Option<(Vertex, Vertex)>) -> Result<(usize, BigCount)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    mes_by_cardinality(g, st)?
        .into_iter()
        .next_back()
        .ok_or_else(|| Error::Precondition("graph has no minimal edge separator".into()))
}

/// Largest cardinality `x` of a minimal edge separator and the number of
/// separators attaining it. The graph must be connected.
pub fn max_cardinality_mes(g: &Multigraph) -> Result<(usize, BigCount)> {
    largest(g, None)
}

pub fn max_cardinality_mes_st(g: &Multigraph, s: Vertex, t: Vertex) -> Result<(usize, BigCount)> {
    check_terminals(|v| g.has_vertex(v), s, t)?;
    largest(g, Some((s, t)))
}
