//! Acceptance checks, one line per criterion. Run with
//! `cargo test --test acceptance`.
//!
//! A criterion that fails prints FAIL with the offending data. The process
//! exits non-zero only for failures that are not listed as known defects.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use locopt::catalog::{
    complete, connected_graphs, graphs_covering, random_bipartite_graphs, random_graphs, set_union_example,
    small_multigraphs, verify_suite, worked_example,
};
use locopt::enumerate::{
    count_maximal_independent_sets_bipartite, maximal_independent_sets,
    minimal_edge_separators, oracle, separators, NaeFormula, SeparatorKind,
};
use locopt::graph::{EdgeSet, Multigraph, SimpleGraph, VertexSet};
use locopt::reductions::{
    bis_closed_form, is_z_good, large_cut_conditions, reduce_is_to_maximal_bis, reduce_is_to_nae,
    reduce_maximalbis_to_setunion, reduce_nae_to_large_mes, reduce_vc_to_bidomsets, reduce_vc_to_unionreps,
    thicken_stretch_edge, thicken_stretch_vertex, GadgetContext, ReductionKind,
};
use locopt::setfamily::{self, Subset};
use locopt::verify::{check_sandwich, recover_count, verify_all, verify_certificate, Budget, Outcome};
use locopt::{BigCount, Error};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn set(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

fn worked_example_separators() -> Check {
    let g = worked_example();
    let st = ok(separators(&g, SeparatorKind::MinimalSt, Some((2, 4))))?;
    ensure!(st.contains(&set(&[1, 3])), "{{1,3}} missing from minimal (2,4)-separators {st:?}");
    let incl = ok(separators(&g, SeparatorKind::InclusionMinimal, None))?;
    ensure!(incl.contains(&set(&[1])), "{{1}} missing from inclusion-minimal separators {incl:?}");
    ensure!(!incl.contains(&set(&[1, 3])), "{{1,3}} reported inclusion-minimal");
    let any = ok(separators(&g, SeparatorKind::MinimalAny, None))?;
    ensure!(any.contains(&set(&[1, 3])), "{{1,3}} is not reported as a minimal separator");
    Ok(format!("minimal (2,4)-separators {st:?}, inclusion-minimal {incl:?}"))
}

fn oracle_equivalence() -> Check {
    let mut graphs = connected_graphs(6);
    let catalog = graphs.len();
    graphs.extend(random_graphs(200, 7, 20_240_601));
    let mut comparisons = 0usize;
    for g in &graphs {
        let n = g.vertex_count();
        for kind in SeparatorKind::ALL {
            let pairs: Vec<Option<(usize, usize)>> = if kind.needs_terminals() {
                (1..=n).flat_map(|s| (s + 1..=n).map(move |t| Some((s, t)))).collect()
            } else {
                vec![None]
            };
            for st in pairs {
                let fast = ok(separators(g, kind, st))?;
                let slow = ok(oracle::separators(g, kind, st))?;
                ensure!(fast == slow, "{kind:?} {st:?} on {g:?}: {fast:?} vs oracle {slow:?}");
                comparisons += 1;
            }
        }
        let mg = g.to_multigraph();
        let mut terminals = vec![None];
        if n >= 2 {
            terminals.push(Some((1, n)));
        }
        for st in terminals {
            let fast = ok(minimal_edge_separators(&mg, st))?;
            let slow = ok(oracle::minimal_edge_separators(&mg, st))?;
            ensure!(fast == slow, "edge separators {st:?} on {g:?} differ");
            comparisons += 1;
        }
        let mis = maximal_independent_sets(g);
        ensure!(mis == ok(oracle::maximal_independent_sets(g))?, "maximal independent sets of {g:?} differ");
        comparisons += 1;
    }
    Ok(format!(
        "{} graphs ({catalog} connected isomorphism classes with n ≤ 6, 200 random with n ≤ 7), {comparisons} comparisons",
        graphs.len()
    ))
}

/// Components of `g - f` by union-find over vertex indices.
fn components_without(g: &Multigraph, f: &EdgeSet) -> Vec<usize> {
    let index = |v| g.vertices().binary_search(&v).unwrap();
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] == x {
            x
        } else {
            let r = find(p, p[x]);
            p[x] = r;
            r
        }
    }
    for e in g.edges().iter().filter(|e| !f.contains(&e.id)) {
        let (a, b) = (find(&mut parent, index(e.u)), find(&mut parent, index(e.v)));
        parent[a] = b;
    }
    (0..g.vertex_count()).map(|x| find(&mut parent, x)).collect()
}

fn bond_characterisation() -> Check {
    let graphs = connected_graphs(6);
    let mut subsets = 0usize;
    for g in &graphs {
        let mg = g.to_multigraph();
        let m = mg.edge_count();
        let literal: BTreeSet<EdgeSet> = ok(oracle::minimal_edge_separators(&mg, None))?.into_iter().collect();
        let index = |v| mg.vertices().binary_search(&v).unwrap();
        for mask in 0u32..(1 << m) {
            let f: EdgeSet = mg.edges().iter().filter(|e| mask >> e.id.0 & 1 == 1).map(|e| e.id).collect();
            let label = components_without(&mg, &f);
            let roots: BTreeSet<usize> = label.iter().copied().collect();
            let between: EdgeSet = mg
                .edges()
                .iter()
                .filter(|e| label[index(e.u)] != label[index(e.v)])
                .map(|e| e.id)
                .collect();
            let characterised = roots.len() == 2 && between == f;
            ensure!(
                characterised == literal.contains(&f),
                "edge set {f:?} of {g:?}: two-component test {characterised}, definition {}",
                literal.contains(&f)
            );
            subsets += 1;
        }
    }
    Ok(format!("{} connected graphs, {subsets} edge subsets", graphs.len()))
}

/// All labeled graphs on `1..=n`.
fn labeled_graphs(n: usize) -> Vec<SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
    (0u32..(1 << pairs.len()))
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p);
            SimpleGraph::new(n, edges).unwrap()
        })
        .collect()
}

/// `Σ_S 2^{(m - μ(S)) t}`, summed directly over vertex subsets.
fn subset_sum(g: &SimpleGraph, t: u64) -> BigCount {
    let n = g.vertex_count();
    let m = g.edge_count() as u64;
    (0u32..(1 << n))
        .map(|s| {
            let inside = g.edges().filter(|&(u, v)| s >> (u - 1) & 1 == 1 && s >> (v - 1) & 1 == 1).count() as u64;
            BigCount::pow2((m - inside) * t)
        })
        .sum()
}

fn maximal_bis_identity() -> Check {
    let mut checked = 0;
    let mut oracle_sized = 0;
    for n in 1..=3 {
        for g in labeled_graphs(n) {
            let is = ok(oracle::count_independent_sets(&g))?;
            for t in [2, 3, 4, n + 2] {
                let (gadget, _) = ok(reduce_is_to_maximal_bis(&g, Some(t)))?;
                let mis = if gadget.graph().vertex_count() <= 24 {
                    oracle_sized += 1;
                    ok(oracle::count_maximal_independent_sets(gadget.graph()))?
                } else {
                    count_maximal_independent_sets_bipartite(&gadget)
                };
                let expected = subset_sum(&g, t as u64);
                ensure!(mis == expected, "t = {t} on {g:?}: MIS {mis}, subset sum {expected}");
                ensure!(ok(bis_closed_form(&g, t as u64))? == expected, "closed form disagrees on {g:?}");
                if t == n + 2 {
                    let c = BigCount::pow2((t * g.edge_count()) as u64);
                    ensure!(check_sandwich(&is, &mis, &c), "sandwich fails on {g:?}");
                    ensure!(recover_count(&mis, &c) == is, "recovery fails on {g:?}");
                }
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} (graph, t) pairs, {oracle_sized} with gadget MIS by subset sweep; sandwich and recovery at t = n + 2"
    ))
}

fn nae_from_independent_sets() -> Check {
    let graphs = random_graphs(100, 8, 5);
    for g in &graphs {
        let (phi, _) = ok(reduce_is_to_nae(g))?;
        let sat = ok(oracle::count_nae_sat(&phi))?;
        let is = ok(oracle::count_independent_sets(g))?;
        ensure!(sat == BigCount::from(2u64) * is.clone(), "{g:?}: SAT {sat}, IS {is}");
    }
    Ok(format!("{} random graphs with n ≤ 8", graphs.len()))
}

/// Monotone formulas on `vars` variables with `m` clauses over distinct
/// variables, clauses as a non-decreasing sequence of sorted triples.
fn formulas(vars: usize, m: usize) -> Vec<NaeFormula> {
    let triples: Vec<[usize; 3]> = (1..=vars)
        .flat_map(|a| (a + 1..=vars).flat_map(move |b| (b + 1..=vars).map(move |c| [a, b, c])))
        .collect();
    match m {
        0 => vec![NaeFormula::new(vars, []).unwrap()],
        1 => triples.iter().map(|&c| NaeFormula::new(vars, [c]).unwrap()).collect(),
        _ => (0..triples.len())
            .flat_map(|i| (i..triples.len()).map(move |j| (i, j)))
            .map(|(i, j)| NaeFormula::new(vars, [triples[i], triples[j]]).unwrap())
            .collect(),
    }
}

fn largest_edge_separators() -> Check {
    let mut checked = 0;
    let mut bipartitions = 0;
    for vars in 1..=6 {
        for m in 0..=2 {
            for phi in formulas(vars, m) {
                let sat = ok(oracle::count_nae_sat(&phi))?;
                if sat.is_zero() {
                    continue;
                }
                let (g, cert) = ok(reduce_nae_to_large_mes(&phi))?;
                let k = cert.parameter("k").unwrap() as usize;
                let two = BigCount::from(2u64);
                let global = ok(oracle::bond_cardinalities(&g, None))?;
                let st = ok(oracle::bond_cardinalities(&g, Some((1, vars + 1))))?;
                for (label, counts) in [("global", &global), ("(x1, not x1)", &st)] {
                    let (&top, tmes) = counts.iter().next_back().unwrap();
                    ensure!(top == k, "{phi} {label}: largest separator {top}, k = {k}");
                    ensure!(sat == two.clone() * tmes.clone(), "{phi} {label}: SAT {sat}, TMES {tmes}");
                }
                for (side, crossing) in ok(oracle::bipartitions(&g, None))? {
                    ensure!(
                        (crossing.len() == k) == large_cut_conditions(&phi, &side),
                        "{phi}: side {side:?} has {} crossing edges but the conditions say {}",
                        crossing.len(),
                        large_cut_conditions(&phi, &side)
                    );
                    bipartitions += 1;
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} satisfiable formulas, {bipartitions} bipartitions against the maximality conditions"))
}

fn edge_gadget_expansion() -> Check {
    let mut literal_failures = Vec::new();
    let mut instances = 0;
    for g in small_multigraphs(3) {
        let by_size = ok(oracle::bond_cardinalities(&g, None))?;
        let m = g.edge_count();
        let bridges = g.bridges().len();
        for k in 1..=3usize {
            let (gadget, _) = ok(thicken_stretch_edge(&g, Some(k), None))?;
            let mes = BigCount::from(ok(oracle::minimal_edge_separators(&gadget.graph().to_multigraph(), None))?.len());
            let sum: BigCount = by_size
                .iter()
                .map(|(&i, c)| c.clone() * BigCount::pow2((k * i) as u64))
                .sum();
            let literal = sum.clone() + BigCount::from(m * k);
            // single-path separators around a bridge only exist for k ≥ 2
            let corrected = sum + BigCount::from(if k >= 2 { m * k } else { m - bridges });
            ensure!(mes == corrected, "k = {k} on {g:?}: MES {mes}, corrected expansion {corrected}");
            if mes != literal {
                literal_failures.push(format!("k={k} m={m} bridges={bridges}: MES(G')={mes}, formula={literal}"));
            }
            instances += 1;
        }
    }
    let k2 = Multigraph::new(2, [(1, 2)]).unwrap();
    let (gadget, cert) = ok(thicken_stretch_edge(&k2, None, None))?;
    let k = cert.parameter("k").unwrap();
    ensure!(k == 11, "default k for one edge is {k}");
    let mes = BigCount::from(ok(oracle::bipartition_bonds(&gadget.graph().to_multigraph(), None))?.len());
    let c = BigCount::pow2(k);
    ensure!(mes == BigCount::from(2059u64), "MES(G') = {mes} at default k");
    ensure!(check_sandwich(&BigCount::one(), &mes, &c), "sandwich fails at default k");
    ensure!(recover_count(&mes, &c) == BigCount::one(), "recovered TMES is not 1");
    ensure!(
        literal_failures.is_empty(),
        "all-k identity with the m·k term fails on {} of {instances} instances: {}; the default-k sandwich holds \
         (MES = 2059, recovered 1)",
        literal_failures.len(),
        literal_failures.join("; ")
    );
    Ok(format!("{instances} (multigraph, k) instances; default k = 11 gives MES = 2059, recovered TMES = 1"))
}

fn vertex_gadget_correspondence() -> Check {
    let mut lines = Vec::new();
    for g in small_multigraphs(2) {
        let n = g.vertex_count();
        let m = g.edge_count();
        let source_seps = ok(oracle::minimal_edge_separators(&g, None))?;
        let x = source_seps.iter().map(|f| f.len()).max().unwrap();
        for k in 1..=2usize {
            let (gadget, cert) = ok(thicken_stretch_vertex(&g, Some(k), None))?;
            let ctx = ok(GadgetContext::from_certificate(&cert))?;
            let target = gadget.graph();
            let seps = ok(oracle::separators(target, SeparatorKind::MinimalAny, None))?;
            let mut between_source: BTreeSet<VertexSet> = BTreeSet::new();
            for s in 1..=n {
                for t in s + 1..=n {
                    between_source.extend(ok(oracle::separators(target, SeparatorKind::MinimalSt, Some((s, t))))?);
                }
            }
            let mut fibres: BTreeMap<EdgeSet, u64> = BTreeMap::new();
            let mut non_good = 0u64;
            let mut small_projection = 0u64;
            for sep in &seps {
                let report = ok(is_z_good(&ctx, sep))?;
                if report.good() {
                    let comps = ok(target.delete_vertices(sep))?.components().len();
                    ensure!(comps == 2, "good separator {sep:?} leaves {comps} components");
                    *fibres.entry(report.projection).or_default() += 1;
                } else {
                    non_good += 1;
                }
                if between_source.contains(sep) && report_projection_len(&ctx, sep)? < x {
                    small_projection += 1;
                }
            }
            let fibre = |f: &EdgeSet| BigCount::pow(3, (k * f.len()) as u64);
            let expected: BigCount = source_seps.iter().map(fibre).sum();
            let good: u64 = fibres.values().sum();
            ensure!(BigCount::from(good) == expected, "k = {k} on {g:?}: {good} good, expected {expected}");
            ensure!(
                fibres.keys().cloned().collect::<Vec<_>>() == source_seps,
                "projections of good separators are not the source separators"
            );
            for f in &source_seps {
                ensure!(BigCount::from(fibres[f]) == fibre(f), "fibre over {f:?} has {} members", fibres[f]);
            }
            let trivial_bound = (32 * m * k) as u64;
            let not_between = (seps.len() - seps.iter().filter(|s| between_source.contains(*s)).count()) as u64;
            ensure!(not_between <= trivial_bound, "{not_between} separators not between source vertices");
            let projection_bound =
                BigCount::from(n * n) * BigCount::pow2((m + n) as u64) * BigCount::pow(3, (k * (x - 1)) as u64);
            ensure!(BigCount::from(small_projection) <= projection_bound, "{small_projection} small projections");
            ensure!(
                BigCount::from(non_good) <= BigCount::from(trivial_bound) + projection_bound.clone(),
                "{non_good} non-good separators"
            );
            lines.push(format!("m={m},k={k}: {good} good, {non_good} other"));
        }
    }
    let k2 = locopt::reductions::Instance::Multigraph(Multigraph::new(2, [(1, 2)]).unwrap());
    let cert = ok(locopt::reductions::reduce(ReductionKind::CoreVertex, &k2, &Default::default()))?;
    let r = verify_certificate(&cert, Budget::default());
    let sandwiches: Vec<Outcome> = r
        .contracts
        .iter()
        .filter(|c| c.contract.starts_with("sandwich"))
        .map(|c| c.outcome)
        .collect();
    ensure!(
        sandwiches.len() == 3 && sandwiches.iter().all(|&o| o == Outcome::Unverifiable),
        "default-k sandwiches reported as {sandwiches:?}"
    );
    Ok(format!("{}; default-k sandwiches unverifiable at desk scale", lines.join(", ")))
}

fn report_projection_len(ctx: &GadgetContext, sep: &VertexSet) -> Result<usize, String> {
    Ok(ok(locopt::reductions::project_separator(ctx, &locopt::enumerate::Witness::Vertices(sep.clone())))?.len())
}

fn domination_sandwich() -> Check {
    let mut parts = Vec::new();
    for (g, t) in [(complete(2), 6), (SimpleGraph::edgeless(1), 4)] {
        let (gadget, cert) = ok(reduce_vc_to_bidomsets(&g, None))?;
        ensure!(cert.parameter("t") == Some(t), "default t is {:?}, expected {t}", cert.parameter("t"));
        let ds = ok(oracle::count_dominating_sets(gadget.graph()))?;
        let vc = ok(oracle::count_vertex_covers(&g))?;
        let c = BigCount::pow2((g.edge_count() as u64 + 1) * t);
        ensure!(check_sandwich(&vc, &ds, &c), "DS {ds} / {c} outside [{vc}, {vc} + 1/4]");
        ensure!(recover_count(&ds, &c) == vc, "recovered {} instead of {vc}", recover_count(&ds, &c));
        parts.push(format!("t={t}: DS={ds}, VC={vc}"));
    }
    Ok(parts.join(", "))
}

fn set_union_identity() -> Check {
    let fig = set_union_example();
    let (f, _) = ok(reduce_maximalbis_to_setunion(&fig))?;
    let expected: Vec<Subset> = [vec![1, 2], vec![1, 3, 4], vec![4]].map(|s| s.into_iter().collect()).to_vec();
    ensure!(f.members() == expected.as_slice(), "family {:?}", f.members());
    let mut graphs = vec![fig];
    graphs.extend(random_bipartite_graphs(100, 5, 77));
    for b in &graphs {
        let (f, _) = ok(reduce_maximalbis_to_setunion(b))?;
        let closure = ok(setfamily::oracle::union_closure(&f))?;
        ensure!(closure.contains(&Subset::new()), "empty union missing for {b:?}");
        let mis = ok(oracle::count_maximal_independent_sets(b.graph()))?;
        ensure!(mis == BigCount::from(closure.len()), "{b:?}: MIS {mis}, |U(F)| {}", closure.len());
    }
    Ok(format!("figure instance (MIS = |U(F)| = 6) and {} random bipartite graphs", graphs.len() - 1))
}

fn union_representation_identity() -> Check {
    let mut checked = 0;
    let mut seen = 0;
    for n in 1..=8 {
        for g in graphs_covering(n) {
            seen += 1;
            let Ok((f, _)) = reduce_vc_to_unionreps(&g, false) else { continue };
            let target: Subset = (1..=g.edge_count()).collect();
            let reps = ok(setfamily::oracle::count_union_representations(&f, &target))?;
            let vc = ok(oracle::count_vertex_covers(&g))?;
            ensure!(reps == vc, "{g:?}: representations {reps}, VC {vc}");
            checked += 1;
        }
    }
    match reduce_vc_to_unionreps(&complete(2), false) {
        Err(Error::Precondition(msg)) if msg.contains("same incident edges") => {}
        other => return Err(format!("K2 in set mode gave {other:?}")),
    }
    Ok(format!(
        "{checked} graphs with distinct non-empty incidence sets out of {seen} covering every isomorphism class with n ≤ 8; K2 rejected"
    ))
}

fn determinism() -> Check {
    let run = || {
        let results = verify_all(&verify_suite(), Budget::default());
        results.iter().map(|r| r.to_json()).collect::<Vec<_>>().join("\n")
    };
    let (a, b) = (run(), run());
    ensure!(a == b, "verify suite output differs between runs");
    let (code_a, cli_a) = locopt::cli::run(["locopt", "verify", "--all"]);
    let (code_b, cli_b) = locopt::cli::run(["locopt", "verify", "--all"]);
    ensure!(code_a == 0 && code_b == 0, "verify --all exited with {code_a}, {code_b}");
    ensure!(cli_a == cli_b, "verify --all output differs between runs");
    Ok(format!("{} bytes of suite JSON, identical across two runs", a.len() + cli_a.len()))
}

struct Criterion {
    id: u32,
    name: &'static str,
    run: fn() -> Check,
    /// Analysis of an expected failure.
    known_defect: Option<&'static str>,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "worked example separators", run: worked_example_separators, known_defect: None },
        Criterion { id: 2, name: "oracle equivalence", run: oracle_equivalence, known_defect: None },
        Criterion { id: 3, name: "bond characterisation", run: bond_characterisation, known_defect: None },
        Criterion { id: 4, name: "maximal bipartite IS identity", run: maximal_bis_identity, known_defect: None },
        Criterion { id: 5, name: "NAE from independent sets", run: nae_from_independent_sets, known_defect: None },
        Criterion { id: 6, name: "largest edge separators", run: largest_edge_separators, known_defect: None },
        Criterion {
            id: 7,
            name: "edge gadget expansion",
            run: edge_gadget_expansion,
            known_defect: Some(
                "for k = 1 a bridge uv becomes a path u-w-v whose two edges are not a minimal edge separator \
                 (either edge alone disconnects), so the m·k term overcounts by the number of bridges; the \
                 corrected offset m·k for k ≥ 2 and m - #bridges for k = 1 holds on every instance",
            ),
        },
        Criterion { id: 8, name: "vertex gadget correspondence", run: vertex_gadget_correspondence, known_defect: None },
        Criterion { id: 9, name: "domination sandwich", run: domination_sandwich, known_defect: None },
        Criterion { id: 10, name: "set union identity", run: set_union_identity, known_defect: None },
        Criterion { id: 11, name: "union representation identity", run: union_representation_identity, known_defect: None },
        Criterion { id: 12, name: "determinism", run: determinism, known_defect: None },
    ];
    let mut unexpected = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {}: {detail} ({secs:.2}s)", c.id, c.name),
            Err(why) => {
                println!("criterion {:>2} FAIL {}: {why} ({secs:.2}s)", c.id, c.name);
                match c.known_defect {
                    Some(analysis) => println!("             known defect: {analysis}"),
                    None => unexpected += 1,
                }
            }
        }
    }
    if unexpected > 0 {
        println!("{unexpected} unexpected failures");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
