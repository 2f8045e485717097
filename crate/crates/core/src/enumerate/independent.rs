use std::ops::ControlFlow;

use fixedbitset::FixedBitSet;

use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Dense, SimpleGraph, VertexSet};

/// Number of independent sets, counting the empty set.
pub fn count_independent_sets(g: &SimpleGraph) -> BigCount {
    let d = g.dense();
    count_is(&d, d.full())
}

fn count_is(d: &Dense, allowed: FixedBitSet) -> BigCount {
    if allowed.is_clear() {
        return BigCount::one();
    }
    let comps = d.components(&allowed);
    if comps.len() > 1 {
        return comps.into_iter().fold(BigCount::one(), |acc, c| acc * count_is(d, c));
    }
    let degree = |v: usize| d.adj[v].intersection(&allowed).count();
    let v = allowed.ones().max_by_key(|&v| (degree(v), std::cmp::Reverse(v))).unwrap();
    if degree(v) == 0 {
        return BigCount::from(2u64);
    }
    let mut without = allowed.clone();
    without.remove(v);
    let mut with = without.clone();
    with.difference_with(&d.adj[v]);
    count_is(d, without) + count_is(d, with)
}

/// Number of vertex covers. A set is a cover exactly when its complement is
/// independent, so this equals [`count_independent_sets`].
pub fn count_vertex_covers(g: &SimpleGraph) -> BigCount {
    count_independent_sets(g)
}

/// Component sweep cap for dominating sets.
const DOMINATION_COMPONENT_LIMIT: usize = 28;

/// Number of dominating sets. Disjoint unions multiply, so each component is
/// swept on its own. An isolated vertex must belong to every dominating set.
pub fn count_dominating_sets(g: &SimpleGraph) -> Result<BigCount> {
    let d = g.dense();
    let mut total = BigCount::one();
    for comp in d.components(&d.full()) {
        let idx: Vec<usize> = comp.ones().collect();
        if idx.len() > DOMINATION_COMPONENT_LIMIT {
            return Err(Error::TooLarge {
                what: "component for domination sweep",
                size: idx.len(),
                limit: DOMINATION_COMPONENT_LIMIT,
            });
        }
        let closed: Vec<u32> = idx
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut m = 1u32 << i;
                for (j, &w) in idx.iter().enumerate() {
                    if d.adj[v].contains(w) {
                        m |= 1 << j;
                    }
                }
                m
            })
            .collect();
        let mut count = 0u64;
        for s in 0u32..(1u32 << idx.len()) {
            if closed.iter().all(|&c| c & s != 0) {
                count += 1;
            }
        }
        total = total * BigCount::from(count);
    }
    Ok(total)
}

/// Pivoted extension search: `r` is the current independent set, `p` the
/// vertices that may still extend it, `x` those already tried.
fn bk(
    d: &Dense,
    closed: &[FixedBitSet],
    r: &mut FixedBitSet,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    visit: &mut dyn FnMut(&FixedBitSet) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if p.is_clear() {
        if x.is_clear() {
            return visit(r);
        }
        return ControlFlow::Continue(());
    }
    // every maximal extension contains a vertex of N[u] ∩ P for any u in P ∪ X
    let pivot = p
        .ones()
        .chain(x.ones())
        .min_by_key(|&u| closed[u].intersection(&p).count())
        .unwrap();
    let branch: Vec<usize> = closed[pivot].intersection(&p).collect();
    let _ = d;
    for v in branch {
        let mut np = p.clone();
        np.difference_with(&closed[v]);
        let mut nx = x.clone();
        nx.difference_with(&closed[v]);
        r.insert(v);
        bk(d, closed, r, np, nx, visit)?;
        r.remove(v);
        p.remove(v);
        x.insert(v);
    }
    ControlFlow::Continue(())
}

pub(crate) fn for_each_mis(
    d: &Dense,
    visit: &mut dyn FnMut(&FixedBitSet) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let closed: Vec<FixedBitSet> = (0..d.len())
        .map(|v| {
            let mut c = d.adj[v].clone();
            c.insert(v);
            c
        })
        .collect();
    let mut r = d.empty();
    bk(d, &closed, &mut r, d.full(), d.empty(), visit)
}

/// All maximal independent sets, sorted.
pub fn maximal_independent_sets(g: &SimpleGraph) -> Vec<VertexSet> {
    let d = g.dense();
    let mut out = Vec::new();
    let _ = for_each_mis(&d, &mut |s| {
        out.push(d.to_set(s));
        ControlFlow::Continue(())
    });
    out.sort();
    out
}

pub fn count_maximal_independent_sets(g: &SimpleGraph) -> BigCount {
    BigCount::from(count_mis_capped(g, u64::MAX).expect("uncapped"))
}

/// Counts maximal independent sets, giving up once more than `cap` exist.
pub(crate) fn count_mis_capped(g: &SimpleGraph, cap: u64) -> Option<u64> {
    if let Some((a, b)) = g.two_coloring() {
        if let Some(n) = class_sweep_count(g, &a, &b, cap) {
            return n;
        }
    }
    let d = g.dense();
    let mut n = 0u64;
    let flow = for_each_mis(&d, &mut |_| {
        n += 1;
        if n > cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    match flow {
        ControlFlow::Continue(()) => Some(n),
        ControlFlow::Break(()) => None,
    }
}

const CLASS_SWEEP_LIMIT: usize = 26;

/// In a bipartite graph a maximal independent set is determined by its trace
/// `S` on one class: it must be `S ∪ (B \ N(S))`, and that set is maximal iff
/// every vertex of `A \ S` keeps a neighbour in `B \ N(S)`. Returns `None`
/// when the sweep does not apply (too many vertices or too large a class).
fn class_sweep(
    g: &SimpleGraph,
    a: &VertexSet,
    b: &VertexSet,
    visit: &mut dyn FnMut(u64) -> ControlFlow<()>,
) -> Option<ControlFlow<()>> {
    let d = g.dense();
    let masks = d.masks()?;
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if small.len() > CLASS_SWEEP_LIMIT {
        return None;
    }
    let small_idx: Vec<usize> = small.iter().map(|&v| d.index(v).unwrap()).collect();
    let large_mask = large
        .iter()
        .fold(0u64, |m, &v| m | (1u64 << d.index(v).unwrap()));

    fn rec(
        i: usize,
        s: u64,
        ns: u64,
        small_idx: &[usize],
        masks: &[u64],
        large_mask: u64,
        visit: &mut dyn FnMut(u64) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if i == small_idx.len() {
            let free = large_mask & !ns;
            let maximal = small_idx
                .iter()
                .all(|&v| s & (1 << v) != 0 || masks[v] & free != 0);
            if maximal {
                return visit(s | free);
            }
            return ControlFlow::Continue(());
        }
        let v = small_idx[i];
        rec(i + 1, s, ns, small_idx, masks, large_mask, visit)?;
        rec(i + 1, s | (1 << v), ns | masks[v], small_idx, masks, large_mask, visit)
    }
    Some(rec(0, 0, 0, &small_idx, &masks, large_mask, visit))
}

fn class_sweep_count(g: &SimpleGraph, a: &VertexSet, b: &VertexSet, cap: u64) -> Option<Option<u64>> {
    let mut n = 0u64;
    let flow = class_sweep(g, a, b, &mut |_| {
        n += 1;
        if n > cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Some(match flow {
        ControlFlow::Continue(()) => Some(n),
        ControlFlow::Break(()) => None,
    })
}

/// Maximal independent sets of a bipartite graph, enumerated through their
/// trace on the smaller class when that is feasible.
pub fn maximal_independent_sets_bipartite(g: &BipartiteGraph) -> Vec<VertexSet> {
    let base = g.graph();
    let d = base.dense();
    let mut out = Vec::new();
    let swept = class_sweep(base, g.class_a(), &g.class_b(), &mut |m| {
        out.push((0..d.len()).filter(|i| m & (1 << i) != 0).map(|i| d.ids[i]).collect());
        ControlFlow::Continue(())
    });
    if swept.is_none() {
        return maximal_independent_sets(base);
    }
    out.sort();
    out
}

pub fn count_maximal_independent_sets_bipartite(g: &BipartiteGraph) -> BigCount {
    match class_sweep_count(g.graph(), g.class_a(), &g.class_b(), u64::MAX) {
        Some(Some(n)) => BigCount::from(n),
        _ => count_maximal_independent_sets(g.graph()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn independent_set_counts() {
        assert_eq!(count_independent_sets(&SimpleGraph::edgeless(5)), BigCount::from(32u64));
        assert_eq!(count_independent_sets(&SimpleGraph::new(2, [(1, 2)]).unwrap()), BigCount::from(3u64));
        let k3 = SimpleGraph::new(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(count_independent_sets(&k3), BigCount::from(4u64));
        assert_eq!(count_independent_sets(&SimpleGraph::edgeless(0)), BigCount::one());
    }

    #[test]
    fn vertex_cover_counts() {
        assert_eq!(count_vertex_covers(&SimpleGraph::edgeless(3)), BigCount::from(8u64));
        assert_eq!(count_vertex_covers(&SimpleGraph::new(2, [(1, 2)]).unwrap()), BigCount::from(3u64));
    }

    #[test]
    fn dominating_set_counts() {
        let k2 = SimpleGraph::new(2, [(1, 2)]).unwrap();
        assert_eq!(count_dominating_sets(&k2).unwrap(), BigCount::from(3u64));
        assert_eq!(count_dominating_sets(&SimpleGraph::edgeless(4)).unwrap(), BigCount::one());
        // {2},{1,2},{2,3},{1,3},{1,2,3}
        let p3 = SimpleGraph::new(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(count_dominating_sets(&p3).unwrap(), BigCount::from(5u64));
    }

    #[test]
    fn maximal_sets_small() {
        let c4 = SimpleGraph::new(4, [(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(maximal_independent_sets(&c4), vec![set(&[1, 3]), set(&[2, 4])]);
        let star = SimpleGraph::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(maximal_independent_sets(&star), vec![set(&[1]), set(&[2, 3, 4])]);
        assert_eq!(maximal_independent_sets(&SimpleGraph::edgeless(3)), vec![set(&[1, 2, 3])]);
        assert_eq!(maximal_independent_sets(&SimpleGraph::edgeless(0)), vec![VertexSet::new()]);
    }

    #[test]
    fn bipartite_sweep_agrees_with_pivot_search() {
        let c6 = SimpleGraph::new(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)]).unwrap();
        let b = BipartiteGraph::from_coloring(c6.clone()).unwrap();
        assert_eq!(maximal_independent_sets_bipartite(&b), maximal_independent_sets(&c6));
        assert_eq!(count_maximal_independent_sets_bipartite(&b), BigCount::from(5u64));
    }

    #[test]
    fn capped_count_stops() {
        let g = SimpleGraph::edgeless(3);
        assert_eq!(count_mis_capped(&g, 0), None);
        let c4 = SimpleGraph::new(4, [(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(count_mis_capped(&c4, 1), None);
        assert_eq!(count_mis_capped(&c4, 2), Some(2));
    }
}
