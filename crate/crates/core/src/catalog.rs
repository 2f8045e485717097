//! Built-in instances: the worked examples, standard families, exhaustive
//! small-graph catalogs, seeded random graphs and the certificate suite
//! behind `verify --all`.

use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::NaeFormula;
use crate::graph::{BipartiteGraph, Multigraph, Pair, SimpleGraph, VertexSet};
use crate::reductions::{reduce, Instance, ReduceOptions, ReductionCertificate, ReductionKind};
use crate::setfamily::{FamilyMode, SetFamily};

/// A 4-cycle with a pendant vertex: edges 12, 23, 34, 41, 15.
pub fn worked_example() -> SimpleGraph {
    SimpleGraph::new(5, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5)]).expect("valid graph")
}

/// The bipartite graph with `A = {1,2,3,4}` whose neighbourhood family is
/// `{{1,2}, {1,3,4}, {4}}`.
pub fn set_union_example() -> BipartiteGraph {
    let g = SimpleGraph::new(7, [(1, 5), (2, 5), (1, 6), (3, 6), (4, 6), (4, 7)]).expect("valid graph");
    BipartiteGraph::new(g, VertexSet::from([1, 2, 3, 4])).expect("valid classes")
}

/// `NAE(x1,x2,x3) ∧ NAE(x3,x4,x5)`.
pub fn two_clause_formula() -> NaeFormula {
    NaeFormula::new(5, [[1, 2, 3], [3, 4, 5]]).expect("valid formula")
}

pub fn path(n: usize) -> SimpleGraph {
    SimpleGraph::new(n, (1..n).map(|i| (i, i + 1))).expect("valid graph")
}

pub fn cycle(n: usize) -> SimpleGraph {
    assert!(n >= 3, "cycles need three vertices");
    SimpleGraph::new(n, (1..=n).map(|i| (i, i % n + 1))).expect("valid graph")
}

pub fn complete(n: usize) -> SimpleGraph {
    SimpleGraph::new(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)))).expect("valid graph")
}

/// Centre `1` joined to `n - 1` leaves.
pub fn star(n: usize) -> SimpleGraph {
    SimpleGraph::new(n, (2..=n).map(|i| (1, i))).expect("valid graph")
}

/// Classes `1..=a` and `a+1..=a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> BipartiteGraph {
    let g = SimpleGraph::new(a + b, (1..=a).flat_map(|i| (a + 1..=a + b).map(move |j| (i, j)))).expect("valid graph");
    BipartiteGraph::new(g, (1..=a).collect()).expect("valid classes")
}

fn pair_bit(u: usize, v: usize) -> u32 {
    // u < v, 0-based
    1 << (v * (v - 1) / 2 + u)
}

fn edge_mask(edges: &[(usize, usize)], perm: &[usize]) -> u32 {
    edges.iter().fold(0, |m, &(u, v)| {
        let (a, b) = (perm[u], perm[v]);
        m | if a < b { pair_bit(a, b) } else { pair_bit(b, a) }
    })
}

/// Calls `visit` with every permutation of `items`.
fn permutations(items: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Smallest edge mask over relabelings that list vertices by non-increasing
/// degree, an isomorphism invariant.
fn canonical(n: usize, edges: &[(usize, usize)]) -> u32 {
    let mut degree = vec![0usize; n];
    for &(u, v) in edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(degree[v]));
    for v in order {
        match classes.last_mut() {
            Some(c) if degree[c[0]] == degree[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best = u32::MAX;
    let mut perm = vec![0; n];
    fn rec(
        classes: &[Vec<usize>],
        i: usize,
        offset: usize,
        perm: &mut Vec<usize>,
        edges: &[(usize, usize)],
        best: &mut u32,
    ) {
        if i == classes.len() {
            *best = (*best).min(edge_mask(edges, perm));
            return;
        }
        let mut members = classes[i].clone();
        permutations(&mut members, 0, &mut |p| {
            for (slot, &v) in p.iter().enumerate() {
                perm[v] = offset + slot;
            }
            rec(classes, i + 1, offset + p.len(), perm, edges, best);
        });
    }
    rec(&classes, 0, 0, &mut perm, edges, &mut best);
    best
}

fn to_graph(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
    SimpleGraph::new(n, edges.iter().map(|&(u, v)| (u + 1, v + 1))).expect("valid graph")
}

/// Extends each graph on `n - 1` vertices by a vertex with every possible
/// neighbourhood. Every graph on `n` vertices is isomorphic to one of these.
fn extensions(smaller: &[Vec<(usize, usize)>], n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for edges in smaller {
        for nbrs in 0u32..(1 << (n - 1)) {
            let mut e = edges.clone();
            e.extend((0..n - 1).filter(|&u| nbrs >> u & 1 == 1).map(|u| (u, n - 1)));
            out.push(e);
        }
    }
    out
}

fn iso_classes(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut reps: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for size in 1..=n {
        let mut seen = HashSet::new();
        reps = extensions(&reps, size)
            .into_iter()
            .filter(|e| seen.insert(canonical(size, e)))
            .collect();
    }
    reps
}

/// One graph per isomorphism class on exactly `n ≤ 7` vertices, on
/// `1..=n`.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<SimpleGraph> {
    assert!(n <= 7, "isomorphism classes are generated up to 7 vertices");
    iso_classes(n).iter().map(|e| to_graph(n, e)).collect()
}

/// One connected graph per isomorphism class, for `1 ≤ n ≤ max_n`.
pub fn connected_graphs(max_n: usize) -> Vec<SimpleGraph> {
    (1..=max_n)
        .flat_map(graphs_up_to_isomorphism)
        .filter(|g| g.is_connected())
        .collect()
}

/// Graphs on `n ≤ 8` vertices meeting every isomorphism class, possibly
/// more than once: all classes below 8 vertices are extended by one vertex.
pub fn graphs_covering(n: usize) -> Vec<SimpleGraph> {
    assert!((1..=8).contains(&n), "covering families are built for 1..=8 vertices");
    if n <= 7 {
        return graphs_up_to_isomorphism(n);
    }
    extensions(&iso_classes(n - 1), n).iter().map(|e| to_graph(n, e)).collect()
}

/// Connected loopless multigraphs with `1..=max_edges` edges, one per
/// isomorphism class, on vertices `1..=n`.
pub fn small_multigraphs(max_edges: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 2..=max_edges + 1 {
        let pairs: Vec<Pair> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut seen = BTreeSet::new();
        for m in n - 1..=max_edges {
            // multisets of m pairs, as non-decreasing index sequences
            let mut idx = vec![0usize; m];
            loop {
                let edges: Vec<Pair> = idx.iter().map(|&i| pairs[i]).collect();
                let mut best: Option<Vec<Pair>> = None;
                permutations(&mut (0..n).collect(), 0, &mut |p| {
                    let mut e: Vec<Pair> = edges
                        .iter()
                        .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                        .collect();
                    e.sort_unstable();
                    if best.as_ref().is_none_or(|b| e < *b) {
                        best = Some(e);
                    }
                });
                let g = Multigraph::new(n, edges.iter().map(|&(u, v)| (u + 1, v + 1))).expect("valid multigraph");
                if g.is_connected() && seen.insert(best.unwrap()) {
                    out.push(g);
                }
                let Some(pos) = (0..m).rev().find(|&i| idx[i] + 1 < pairs.len()) else {
                    break;
                };
                let next = idx[pos] + 1;
                for slot in &mut idx[pos..] {
                    *slot = next;
                }
            }
        }
    }
    out
}

/// `G(n, p)` on `1..=n`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> SimpleGraph {
    let edges: Vec<Pair> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    SimpleGraph::new(n, edges).expect("valid graph")
}

/// `count` graphs with `1..=max_n` vertices and edge densities spread over
/// `[0.2, 0.8]`, reproducible from `seed`.
pub fn random_graphs(count: usize, max_n: usize, seed: u64) -> Vec<SimpleGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p = rng.gen_range(0.2..=0.8);
            random_graph(n, p, &mut rng)
        })
        .collect()
}

/// Bipartite graphs with classes `1..=a` and `a+1..=a+b`, `1 ≤ a, b ≤ max`.
pub fn random_bipartite_graphs(count: usize, max: usize, seed: u64) -> Vec<BipartiteGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = rng.gen_range(1..=max);
            let b = rng.gen_range(1..=max);
            let p = rng.gen_range(0.2..=0.8);
            let edges: Vec<Pair> = (1..=a)
                .flat_map(|u| (a + 1..=a + b).map(move |v| (u, v)))
                .collect::<Vec<_>>()
                .into_iter()
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = SimpleGraph::new(a + b, edges).expect("valid graph");
            BipartiteGraph::new(g, (1..=a).collect()).expect("valid classes")
        })
        .collect()
}

/// Named instances written by `seed-catalog`.
pub fn seed_instances() -> Vec<(&'static str, Instance)> {
    let family = SetFamily::new(
        4,
        [vec![1], vec![1, 2], vec![3, 4]].map(|s| s.into_iter().collect()),
        FamilyMode::Set,
    )
    .expect("valid family");
    vec![
        ("worked-example", Instance::Graph(worked_example())),
        ("set-union-example", Instance::Bipartite(set_union_example())),
        ("two-clause-formula", Instance::Formula(two_clause_formula())),
        (
            "single-clause-formula",
            Instance::Formula(NaeFormula::new(3, [[1, 2, 3]]).expect("valid formula")),
        ),
        ("k1", Instance::Graph(SimpleGraph::edgeless(1))),
        ("k2", Instance::Graph(complete(2))),
        ("k3", Instance::Graph(complete(3))),
        ("p3", Instance::Graph(path(3))),
        ("c4", Instance::Graph(cycle(4))),
        ("c5", Instance::Graph(cycle(5))),
        ("star4", Instance::Graph(star(4))),
        ("k23", Instance::Bipartite(complete_bipartite(2, 3))),
        (
            "double-edge",
            Instance::Multigraph(Multigraph::new(2, [(1, 2), (1, 2)]).expect("valid multigraph")),
        ),
        ("small-family", Instance::Family(family)),
    ]
}

fn cert(kind: ReductionKind, source: Instance, opts: ReduceOptions) -> ReductionCertificate {
    reduce(kind, &source, &opts).expect("catalog reductions succeed")
}

fn with_t(t: u64) -> ReduceOptions {
    ReduceOptions {
        t: Some(t),
        ..Default::default()
    }
}

fn with_k(k: u64) -> ReduceOptions {
    ReduceOptions {
        k: Some(k),
        ..Default::default()
    }
}

/// Certificates checked by `verify --all`: every reduction on small sources,
/// at the default parameter where that is within reach and at small
/// parameters for the all-parameter identities.
pub fn verify_suite() -> Vec<ReductionCertificate> {
    use ReductionKind::*;
    let g = |g: SimpleGraph| Instance::Graph(g);
    let mg = |g: SimpleGraph| Instance::Multigraph(g.to_multigraph());
    let double = Instance::Multigraph(Multigraph::new(2, [(1, 2), (1, 2)]).expect("valid multigraph"));
    let d = ReduceOptions::default;
    vec![
        cert(IsToMaximalbis, g(complete(2)), d()),
        cert(IsToMaximalbis, g(SimpleGraph::edgeless(1)), d()),
        cert(IsToMaximalbis, g(path(3)), d()),
        cert(IsToMaximalbis, g(complete(2)), with_t(2)),
        cert(IsToNae, g(worked_example()), d()),
        cert(IsToNae, g(cycle(4)), d()),
        cert(NaeToLargeMes, Instance::Formula(NaeFormula::new(3, [[1, 2, 3]]).expect("valid")), d()),
        cert(NaeToLargeMes, Instance::Formula(two_clause_formula()), d()),
        cert(CoreEdge, mg(complete(2)), d()),
        cert(CoreEdge, mg(complete(2)), with_k(1)),
        cert(CoreEdge, mg(path(3)), with_k(2)),
        cert(CoreEdge, double.clone(), with_k(3)),
        cert(CoreVertex, mg(complete(2)), d()),
        cert(CoreVertex, mg(complete(2)), with_k(1)),
        cert(CoreVertex, mg(path(3)), with_k(1)),
        cert(CoreVertex, double, with_k(2)),
        cert(VcToBidomsets, g(complete(2)), d()),
        cert(VcToBidomsets, g(SimpleGraph::edgeless(1)), d()),
        cert(MaximalbisToSetunion, Instance::Bipartite(set_union_example()), d()),
        cert(MaximalbisToSetunion, g(cycle(4)), d()),
        cert(VcToUnionreps, g(path(3)), d()),
        cert(VcToUnionreps, g(complete(3)), d()),
        cert(
            VcToUnionreps,
            g(complete(2)),
            ReduceOptions {
                indexed: true,
                ..Default::default()
            },
        ),
    ]
}
