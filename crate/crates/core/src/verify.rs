//! Checking reduction certificates against independent counts.
//!
//! Every measure a contract names is computed afresh: by the exhaustive
//! oracle tier when the instance admits a sweep of at most `2^24` subsets,
//! otherwise by the structured algorithms with a witness budget. A count
//! that no tier can reach within budget makes the contract unverifiable
//! rather than failed.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::count::BigCount;
use crate::enumerate::{
    count_dominating_sets, count_independent_sets, count_mis_capped, count_nae_sat, count_vertex_covers, mes_capped,
    oracle, separators_capped, SeparatorKind, ORACLE_LIMIT,
};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph, SimpleGraph, Vertex};
use crate::reductions::{
    bis_closed_form, count_good_dominating_sets, default_k_edge, default_k_vertex, default_t_bis,
    default_t_domination, is_z_good, large_cut_conditions, large_mes_k, Contract, GadgetContext, Instance, Measure,
    ReductionCertificate, ReductionKind, Side, Term, SCHEMA,
};
use crate::setfamily;

/// Witness budget of the structured tier.
pub const DEFAULT_WITNESS_CAP: u64 = 10_000_000;

/// Vertex sweeps for separators test every pair per subset, so the oracle
/// tier stops earlier for them.
const SEPARATOR_ORACLE_LIMIT: usize = 16;

/// Edge sweeps test connectivity per subset; above this the bipartition
/// sweep takes over for connected graphs.
const EDGE_ORACLE_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub witnesses: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            witnesses: DEFAULT_WITNESS_CAP,
        }
    }
}

impl FromStr for Budget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "default" {
            return Ok(Budget::default());
        }
        s.parse()
            .map(|witnesses| Budget { witnesses })
            .map_err(|_| Error::Input(format!("budget must be \"default\" or a witness count, got {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    Unverifiable,
    /// The parameter is below the one the bound is proved for; the values
    /// are still reported.
    NotClaimed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tier {
    Oracle,
    Structured,
}

/// One evaluated measure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evaluated {
    pub side: Side,
    pub measure: Measure,
    pub value: BigCount,
    pub tier: Tier,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractResult {
    pub contract: String,
    pub outcome: Outcome,
    pub values: Vec<Evaluated>,
    /// `B/c` in lowest terms, for sandwiches.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient: Option<String>,
    /// `⌊B/c⌋`, for sandwiches.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recovered: Option<BigCount>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationResult {
    pub schema: String,
    pub reduction: ReductionKind,
    pub certificate_digest: String,
    pub source_digest: String,
    pub result: Outcome,
    pub structure: Vec<Check>,
    pub contracts: Vec<ContractResult>,
    /// The source count recovered by the first passing sandwich.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recovered: Option<BigCount>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationResult {
    pub fn passed(&self) -> bool {
        self.result != Outcome::Fail
    }

    pub fn to_json(&self) -> String {
        crate::canonical_json(self)
    }
}

/// `A ≤ B/c ≤ A + 1/4`, checked as `4cA ≤ 4B ≤ 4cA + c`.
pub fn check_sandwich(a: &BigCount, b: &BigCount, c: &BigCount) -> bool {
    let four = BigCount::from(4u64);
    let lo = four.clone() * c.clone() * a.clone();
    let b4 = four * b.clone();
    lo <= b4 && b4 <= lo + c.clone()
}

/// `⌊B/c⌋`, which equals `A` whenever the sandwich holds.
pub fn recover_count(b: &BigCount, c: &BigCount) -> BigCount {
    b.div_floor(c)
}

fn rational(c: &BigCount) -> BigRational {
    BigRational::from_integer(BigInt::from(c.as_biguint().clone()))
}

/// Result of evaluating one measure.
enum Value {
    Known(BigCount, Tier),
    Unknown(String),
}

fn too_large(e: &Error) -> bool {
    matches!(e, Error::TooLarge { .. })
}

fn as_graph(inst: &Instance) -> Result<&SimpleGraph> {
    match inst {
        Instance::Graph(g) => Ok(g),
        Instance::Bipartite(b) => Ok(b.graph()),
        other => Err(Error::ContextMismatch(format!("expected a graph, got a {}", other.describe()))),
    }
}

fn as_multigraph(inst: &Instance) -> Result<Multigraph> {
    match inst {
        Instance::Multigraph(m) => Ok(m.clone()),
        Instance::Graph(_) | Instance::Bipartite(_) => Ok(as_graph(inst)?.to_multigraph()),
        other => Err(Error::ContextMismatch(format!("expected a multigraph, got a {}", other.describe()))),
    }
}

fn over_budget(count: &BigCount, budget: Budget) -> Value {
    Value::Unknown(format!(
        "at least {count} witnesses, over the budget of {}",
        budget.witnesses
    ))
}

fn cap(budget: Budget) -> usize {
    usize::try_from(budget.witnesses).unwrap_or(usize::MAX)
}

/// Minimal edge separators by the cheapest applicable tier.
fn edge_separators(g: &Multigraph, st: Option<(Vertex, Vertex)>, budget: Budget) -> Result<Option<(Vec<EdgeSet>, Tier)>> {
    if g.edge_count() <= EDGE_ORACLE_LIMIT {
        return Ok(Some((oracle::minimal_edge_separators(g, st)?, Tier::Oracle)));
    }
    if g.vertex_count() <= ORACLE_LIMIT && g.is_connected() {
        return Ok(Some((oracle::bipartition_bonds(g, st)?, Tier::Oracle)));
    }
    Ok(mes_capped(g, st, cap(budget))?.map(|v| (v, Tier::Structured)))
}

fn separator_count(
    g: &SimpleGraph,
    kind: SeparatorKind,
    st: Option<(Vertex, Vertex)>,
    budget: Budget,
) -> Result<Value> {
    if g.vertex_count() <= SEPARATOR_ORACLE_LIMIT {
        return Ok(Value::Known(oracle::count_separators(g, kind, st)?, Tier::Oracle));
    }
    Ok(match separators_capped(g, kind, st, cap(budget))? {
        Some(v) => Value::Known(BigCount::from(v.len()), Tier::Structured),
        None => over_budget(&BigCount::from(budget.witnesses), budget),
    })
}

/// Evaluates `measure` on `inst`. `lower` is a known lower bound on the
/// value; enumerating measures whose bound exceeds the budget are skipped
/// before any work is done.
fn evaluate(inst: &Instance, measure: &Measure, budget: Budget, lower: Option<&BigCount>) -> Result<Value> {
    if let Some(lb) = lower {
        if measure.enumerates() && *lb > BigCount::from(budget.witnesses) {
            return Ok(over_budget(lb, budget));
        }
    }
    let oracle_or = |n: usize, o: &dyn Fn() -> Result<BigCount>, s: &dyn Fn() -> Result<BigCount>| -> Result<Value> {
        if n <= ORACLE_LIMIT {
            return Ok(Value::Known(o()?, Tier::Oracle));
        }
        match s() {
            Ok(v) => Ok(Value::Known(v, Tier::Structured)),
            Err(e) if too_large(&e) => Ok(Value::Unknown(e.to_string())),
            Err(e) => Err(e),
        }
    };
    match measure {
        Measure::IndependentSets => {
            let g = as_graph(inst)?;
            oracle_or(g.vertex_count(), &|| oracle::count_independent_sets(g), &|| Ok(count_independent_sets(g)))
        }
        Measure::VertexCovers => {
            let g = as_graph(inst)?;
            oracle_or(g.vertex_count(), &|| oracle::count_vertex_covers(g), &|| Ok(count_vertex_covers(g)))
        }
        Measure::DominatingSets => {
            let g = as_graph(inst)?;
            oracle_or(g.vertex_count(), &|| oracle::count_dominating_sets(g), &|| count_dominating_sets(g))
        }
        Measure::MaximalIndependentSets => {
            let g = as_graph(inst)?;
            if g.vertex_count() <= ORACLE_LIMIT {
                return Ok(Value::Known(oracle::count_maximal_independent_sets(g)?, Tier::Oracle));
            }
            Ok(match count_mis_capped(g, budget.witnesses) {
                Some(c) => Value::Known(BigCount::from(c), Tier::Structured),
                None => over_budget(&BigCount::from(budget.witnesses), budget),
            })
        }
        Measure::NaeSat => match inst {
            Instance::Formula(phi) => oracle_or(phi.vars(), &|| oracle::count_nae_sat(phi), &|| Ok(count_nae_sat(phi))),
            other => Err(Error::ContextMismatch(format!("expected a formula, got a {}", other.describe()))),
        },
        Measure::MinimalEdgeSeparators | Measure::MinimalEdgeSeparatorsSt { .. } => {
            let g = as_multigraph(inst)?;
            let st = match measure {
                Measure::MinimalEdgeSeparatorsSt { s, t } => Some((*s, *t)),
                _ => None,
            };
            Ok(match edge_separators(&g, st, budget)? {
                Some((v, tier)) => Value::Known(BigCount::from(v.len()), tier),
                None => over_budget(&BigCount::from(budget.witnesses), budget),
            })
        }
        Measure::LargestMinimalEdgeSeparators | Measure::LargestMinimalEdgeSeparatorsSt { .. } => {
            let g = as_multigraph(inst)?;
            if !g.is_connected() {
                return Err(Error::Disconnected);
            }
            let st = match measure {
                Measure::LargestMinimalEdgeSeparatorsSt { s, t } => Some((*s, *t)),
                _ => None,
            };
            Ok(match edge_separators(&g, st, budget)? {
                Some((v, tier)) => {
                    let top = v.iter().map(|f| f.len()).max().unwrap_or(0);
                    Value::Known(BigCount::from(v.iter().filter(|f| f.len() == top).count()), tier)
                }
                None => over_budget(&BigCount::from(budget.witnesses), budget),
            })
        }
        Measure::MinimalSeparators => separator_count(as_graph(inst)?, SeparatorKind::MinimalAny, None, budget),
        Measure::MinimalSeparatorsSt { s, t } => {
            separator_count(as_graph(inst)?, SeparatorKind::MinimalSt, Some((*s, *t)), budget)
        }
        Measure::InclusionMinimalSeparators => {
            separator_count(as_graph(inst)?, SeparatorKind::InclusionMinimal, None, budget)
        }
        Measure::UnionClosure | Measure::UnionRepresentations { .. } => {
            let Instance::Family(f) = inst else {
                return Err(Error::ContextMismatch(format!("expected a set family, got a {}", inst.describe())));
            };
            let p = f.members().len();
            match measure {
                Measure::UnionClosure => oracle_or(
                    p,
                    &|| setfamily::oracle::union_closure(f).map(|v| BigCount::from(v.len())),
                    &|| setfamily::count_union_closure(f),
                ),
                Measure::UnionRepresentations { target } => oracle_or(
                    p,
                    &|| setfamily::oracle::count_union_representations(f, target),
                    &|| setfamily::count_union_representations(f, target),
                ),
                _ => unreachable!(),
            }
        }
    }
}

/// Evaluates contracts of one certificate, caching measures per side.
struct Evaluator<'a> {
    cert: &'a ReductionCertificate,
    budget: Budget,
    cache: BTreeMap<String, (BigCount, Tier)>,
}

enum TermValue {
    Known(Evaluated, BigCount),
    Unknown(String),
}

impl<'a> Evaluator<'a> {
    fn instance(&self, side: Side) -> &'a Instance {
        match side {
            Side::Source => &self.cert.source,
            Side::Target => &self.cert.target,
        }
    }

    fn term(&mut self, term: &Term, lower: Option<&BigCount>) -> Result<TermValue> {
        let key = format!("{:?}/{:?}", term.side, term.measure);
        let (value, tier) = match self.cache.get(&key) {
            Some(hit) => hit.clone(),
            None => match evaluate(self.instance(term.side), &term.measure, self.budget, lower)? {
                Value::Known(v, tier) => {
                    self.cache.insert(key, (v.clone(), tier));
                    (v, tier)
                }
                Value::Unknown(why) => return Ok(TermValue::Unknown(why)),
            },
        };
        let scaled = term.scale.clone() * value.clone();
        Ok(TermValue::Known(
            Evaluated {
                side: term.side,
                measure: term.measure.clone(),
                value,
                tier,
            },
            scaled,
        ))
    }

    fn contract(&mut self, contract: &Contract) -> ContractResult {
        let mut result = ContractResult {
            contract: contract.label(),
            outcome: Outcome::Fail,
            values: Vec::new(),
            quotient: None,
            recovered: None,
            detail: None,
        };
        match self.contract_inner(contract, &mut result) {
            Ok(()) => {}
            Err(e) => {
                result.outcome = Outcome::Fail;
                result.detail = Some(format!("error: {e}"));
            }
        }
        result
    }

    fn contract_inner(&mut self, contract: &Contract, out: &mut ContractResult) -> Result<()> {
        macro_rules! known {
            ($tv:expr) => {
                match $tv {
                    TermValue::Known(e, scaled) => {
                        out.values.push(e);
                        scaled
                    }
                    TermValue::Unknown(why) => {
                        out.outcome = Outcome::Unverifiable;
                        out.detail = Some(why);
                        return Ok(());
                    }
                }
            };
        }
        match contract {
            Contract::Exact { lhs, rhs } => {
                let l = known!(self.term(lhs, None)?);
                let r = known!(self.term(rhs, None)?);
                out.outcome = pass_if(l == r);
                out.detail = Some(format!("{l} vs {r}"));
            }
            Contract::Sandwich {
                lower,
                numerator,
                denominator,
                slack,
                claimed,
            } => {
                let a = known!(self.term(lower, None)?);
                let bound = denominator.clone() * a.clone();
                let b = known!(self.term(numerator, Some(&bound))?);
                let slack: BigRational = slack
                    .parse()
                    .map_err(|_| Error::Input(format!("bad sandwich slack {slack:?}")))?;
                let q = rational(&b) / rational(denominator);
                let lo = rational(&a);
                let holds = lo <= q && q <= lo + slack;
                out.quotient = Some(q.to_string());
                out.recovered = Some(recover_count(&b, denominator));
                if *claimed {
                    out.outcome = pass_if(holds);
                } else {
                    out.outcome = Outcome::NotClaimed;
                    out.detail = Some(format!(
                        "parameter below the proved default; the bound {} here",
                        if holds { "holds" } else { "does not hold" }
                    ));
                }
            }
            Contract::ClosedForm { term, value, .. } => {
                let recomputed = match (self.cert.reduction, &self.cert.source) {
                    (ReductionKind::IsToMaximalbis, Instance::Graph(g)) => {
                        let t = self.cert.parameter("t").unwrap_or(0);
                        bis_closed_form(g, t)?
                    }
                    _ => return Err(Error::ContextMismatch("no closed form for this reduction".into())),
                };
                let v = known!(self.term(term, None)?);
                out.outcome = pass_if(v == *value && recomputed == *value);
                out.detail = Some(format!("counted {v}, stated {value}, recomputed {recomputed}"));
            }
            Contract::CardinalityExpansion {
                k,
                base,
                offset,
                literal_offset,
            } => {
                let g = as_multigraph(&self.cert.source)?;
                let Some((seps, _)) = edge_separators(&g, None, self.budget)? else {
                    out.outcome = Outcome::Unverifiable;
                    out.detail = Some("source separators over budget".into());
                    return Ok(());
                };
                let m = g.edge_count() as u64;
                let corrected = if *k >= 2 { m * k } else { m - g.bridges().len() as u64 };
                let sum: BigCount = seps.iter().map(|f| BigCount::pow(*base, k * f.len() as u64)).sum();
                let expected = sum.clone() + offset.clone();
                let literal = sum + literal_offset.clone();
                let v = known!(self.term(&Term::target(Measure::MinimalEdgeSeparators), Some(&expected))?);
                let ok = v == expected && *offset == BigCount::from(corrected) && *literal_offset == BigCount::from(m * k);
                out.outcome = pass_if(ok);
                out.detail = Some(format!(
                    "counted {v}; expansion with offset {offset} gives {expected}; with m·k = {literal_offset} it gives {literal}{}",
                    if literal == v { "" } else { " (literal form off)" }
                ));
            }
            Contract::GoodSeparatorCorrespondence { k, non_good_bound } => {
                self.good_separators(*k, non_good_bound, out)?;
            }
            Contract::GoodDominatingSets { scale } => {
                let (Instance::Graph(source), Instance::Bipartite(gadget)) = (&self.cert.source, &self.cert.target) else {
                    return Err(Error::ContextMismatch("expected a graph and its domination gadget".into()));
                };
                let vc = known!(self.term(&Term::source(Measure::VertexCovers), None)?);
                if gadget.graph().vertex_count() > ORACLE_LIMIT {
                    out.outcome = Outcome::Unverifiable;
                    out.detail = Some("gadget too large for a subset sweep".into());
                    return Ok(());
                }
                let s = self.cert.parameter("s").unwrap_or(0) as Vertex;
                let good = count_good_dominating_sets(source, gadget.graph(), s)?;
                let expected = scale.clone() * vc;
                out.outcome = pass_if(good == expected);
                out.detail = Some(format!("{good} good dominating sets, expected {expected}"));
            }
            Contract::MaximalityConditions { k } => {
                let Instance::Formula(phi) = &self.cert.source else {
                    return Err(Error::ContextMismatch("expected a formula source".into()));
                };
                let g = as_multigraph(&self.cert.target)?;
                if g.vertex_count() > ORACLE_LIMIT {
                    out.outcome = Outcome::Unverifiable;
                    out.detail = Some("literal graph too large for a bipartition sweep".into());
                    return Ok(());
                }
                let mut largest = 0;
                let mut mismatches = 0;
                let mut at_k = 0;
                for (side, crossing) in oracle::bipartitions(&g, None)? {
                    largest = largest.max(crossing.len());
                    let big = crossing.len() as u64 == *k;
                    at_k += big as usize;
                    if big != large_cut_conditions(phi, &side) {
                        mismatches += 1;
                    }
                }
                out.outcome = pass_if(mismatches == 0 && largest as u64 <= *k);
                out.detail = Some(format!(
                    "{at_k} bipartitions of cardinality {k}, largest {largest}, {mismatches} disagreements"
                ));
            }
        }
        Ok(())
    }

    fn good_separators(&mut self, k: u64, bound: &BigCount, out: &mut ContractResult) -> Result<()> {
        let ctx = GadgetContext::from_certificate(self.cert)?;
        let target = as_graph(&self.cert.target)?;
        let Some((source_seps, _)) = edge_separators(ctx.source(), None, self.budget)? else {
            out.outcome = Outcome::Unverifiable;
            out.detail = Some("source separators over budget".into());
            return Ok(());
        };
        let fibre = |f: &EdgeSet| BigCount::pow(3, k * f.len() as u64);
        let expected: BigCount = source_seps.iter().map(fibre).sum();
        if expected > BigCount::from(self.budget.witnesses) {
            out.outcome = Outcome::Unverifiable;
            out.detail = Some(format!(
                "at least {expected} witnesses, over the budget of {}",
                self.budget.witnesses
            ));
            return Ok(());
        }
        let seps = if target.vertex_count() <= SEPARATOR_ORACLE_LIMIT {
            oracle::separators(target, SeparatorKind::MinimalAny, None)?
        } else {
            match separators_capped(target, SeparatorKind::MinimalAny, None, cap(self.budget))? {
                Some(v) => v,
                None => {
                    out.outcome = Outcome::Unverifiable;
                    out.detail = Some("gadget separators over budget".into());
                    return Ok(());
                }
            }
        };
        let mut fibres: BTreeMap<EdgeSet, u64> = BTreeMap::new();
        let mut non_good = 0u64;
        let mut not_two = 0u64;
        for x in &seps {
            let report = is_z_good(&ctx, x)?;
            if report.good() {
                *fibres.entry(report.projection).or_default() += 1;
                if target.delete_vertices(x)?.components().len() != 2 {
                    not_two += 1;
                }
            } else {
                non_good += 1;
            }
        }
        let good: u64 = fibres.values().sum();
        let onto = fibres.len() == source_seps.len()
            && source_seps
                .iter()
                .all(|f| fibres.get(f).is_some_and(|&c| BigCount::from(c) == fibre(f)));
        let ok = onto && not_two == 0 && BigCount::from(non_good) <= *bound && BigCount::from(good) == expected;
        out.outcome = pass_if(ok);
        out.detail = Some(format!(
            "{good} good separators (expected {expected}), {non_good} others (bound {bound}); \
             projection {} ; {not_two} good separators without exactly two components",
            if onto { "is onto with the stated fibres" } else { "does not match" }
        ));
        Ok(())
    }
}

fn pass_if(ok: bool) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn check(name: &str, ok: bool, detail: Option<String>) -> Check {
    Check {
        name: name.into(),
        ok,
        detail,
    }
}

/// Vertex-count and parameter formulas of each construction.
fn shape_checks(cert: &ReductionCertificate) -> Vec<Check> {
    let p = |k: &str| cert.parameter(k).unwrap_or(u64::MAX);
    let target_size = match &cert.target {
        Instance::Graph(g) => g.vertex_count(),
        Instance::Bipartite(b) => b.graph().vertex_count(),
        Instance::Multigraph(m) => m.vertex_count(),
        Instance::Formula(f) => f.vars(),
        Instance::Family(f) => f.n(),
    } as u64;
    let (n, m) = (p("n"), p("m"));
    let (expected, defaults) = match cert.reduction {
        ReductionKind::IsToMaximalbis => (2 * n + 3 * p("t") * m, p("default_t") == default_t_bis(n as usize)),
        ReductionKind::IsToNae => (n + 1, true),
        ReductionKind::NaeToLargeMes => (2 * n, p("k") == large_mes_k(n as usize, m as usize)),
        ReductionKind::CoreEdge => (n + p("k") * m, p("default_k") == default_k_edge(m as usize)),
        ReductionKind::CoreVertex => (
            n + 3 * p("k") * m,
            p("default_k") == default_k_vertex(n as usize, m as usize),
        ),
        ReductionKind::VcToBidomsets => (
            n + 1 + p("t") + m * p("t"),
            p("default_t") == default_t_domination(n as usize, m as usize),
        ),
        ReductionKind::MaximalbisToSetunion => (n, true),
        ReductionKind::VcToUnionreps => (m, true),
    };
    let mut out = vec![
        check(
            "target size",
            target_size == expected,
            Some(format!("{target_size}, formula gives {expected}")),
        ),
        check("default parameters", defaults, None),
    ];
    if let Instance::Bipartite(b) = &cert.target {
        let ok = b
            .graph()
            .edges()
            .all(|(u, v)| b.class_a().contains(&u) != b.class_a().contains(&v));
        out.push(check("bipartite target", ok, None));
    }
    out
}

/// Structural checks followed by every contract.
pub fn verify_certificate(cert: &ReductionCertificate, budget: Budget) -> VerificationResult {
    let start = Instant::now();
    let mut structure = vec![
        check("schema", cert.schema == SCHEMA, Some(cert.schema.clone())),
        check("source digest", cert.source.digest() == cert.source_digest, None),
    ];
    structure.push(match cert.rebuild() {
        Ok(rebuilt) => check("rebuild", rebuilt == *cert, None),
        Err(e) => check("rebuild", false, Some(e.to_string())),
    });
    structure.extend(shape_checks(cert));
    let mut ev = Evaluator {
        cert,
        budget,
        cache: BTreeMap::new(),
    };
    let contracts: Vec<ContractResult> = cert.contracts.iter().map(|c| ev.contract(c)).collect();
    let failed = structure.iter().any(|c| !c.ok) || contracts.iter().any(|c| c.outcome == Outcome::Fail);
    let any_pass = contracts.iter().any(|c| c.outcome == Outcome::Pass);
    let result = if failed {
        Outcome::Fail
    } else if any_pass || contracts.is_empty() {
        Outcome::Pass
    } else {
        Outcome::Unverifiable
    };
    let recovered = contracts
        .iter()
        .find(|c| c.outcome == Outcome::Pass && c.recovered.is_some())
        .and_then(|c| c.recovered.clone());
    let text = serde_json::to_string(cert).expect("certificates serialize");
    VerificationResult {
        schema: SCHEMA.into(),
        reduction: cert.reduction,
        certificate_digest: hex::encode(Sha256::digest(text.as_bytes())),
        source_digest: cert.source_digest.clone(),
        result,
        structure,
        contracts,
        recovered,
        elapsed: start.elapsed(),
    }
}

/// Verifies many certificates in parallel; results keep the input order.
pub fn verify_all(certs: &[ReductionCertificate], budget: Budget) -> Vec<VerificationResult> {
    certs.par_iter().map(|c| verify_certificate(c, budget)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;
    use crate::reductions::{reduce, ReduceOptions};

    fn k2() -> Instance {
        Instance::Graph(SimpleGraph::new(2, [(1, 2)]).unwrap())
    }

    #[test]
    fn sandwich_arithmetic() {
        let c = BigCount::from(16u64);
        assert!(check_sandwich(&3u64.into(), &49u64.into(), &c));
        assert!(check_sandwich(&3u64.into(), &52u64.into(), &c));
        assert!(!check_sandwich(&3u64.into(), &53u64.into(), &c));
        assert!(!check_sandwich(&3u64.into(), &47u64.into(), &c));
        assert_eq!(recover_count(&49u64.into(), &c), BigCount::from(3u64));
    }

    #[test]
    fn budget_parsing() {
        assert_eq!("default".parse::<Budget>().unwrap(), Budget::default());
        assert_eq!("12".parse::<Budget>().unwrap().witnesses, 12);
        assert!("lots".parse::<Budget>().is_err());
    }

    #[test]
    fn every_reduction_on_small_sources() {
        let p3 = Instance::Graph(SimpleGraph::new(3, [(1, 2), (2, 3)]).unwrap());
        let phi = Instance::Formula(crate::enumerate::NaeFormula::new(3, [[1, 2, 3]]).unwrap());
        let cases = [
            (ReductionKind::IsToMaximalbis, k2(), ReduceOptions::default()),
            (ReductionKind::IsToNae, p3.clone(), ReduceOptions::default()),
            (ReductionKind::NaeToLargeMes, phi, ReduceOptions::default()),
            (ReductionKind::CoreEdge, k2(), ReduceOptions::default()),
            (ReductionKind::CoreVertex, k2(), ReduceOptions { k: Some(2), ..Default::default() }),
            (ReductionKind::VcToBidomsets, k2(), ReduceOptions::default()),
            (ReductionKind::MaximalbisToSetunion, p3.clone(), ReduceOptions::default()),
            (ReductionKind::VcToUnionreps, p3, ReduceOptions::default()),
        ];
        for (kind, source, opts) in cases {
            let cert = reduce(kind, &source, &opts).unwrap();
            let r = verify_certificate(&cert, Budget::default());
            assert_eq!(r.result, Outcome::Pass, "{}: {}", kind.name(), r.to_json());
        }
    }

    #[test]
    fn recovered_count_from_maximal_bis() {
        let cert = reduce(ReductionKind::IsToMaximalbis, &k2(), &ReduceOptions::default()).unwrap();
        let r = verify_certificate(&cert, Budget::default());
        assert_eq!(r.recovered, Some(BigCount::from(3u64)));
        assert!(!r.to_json().contains("elapsed"));
    }

    #[test]
    fn default_vertex_gadget_is_unverifiable() {
        let cert = reduce(ReductionKind::CoreVertex, &k2(), &ReduceOptions::default()).unwrap();
        let r = verify_certificate(&cert, Budget::default());
        assert_eq!(r.contracts[0].outcome, Outcome::Unverifiable);
        assert_eq!(r.result, Outcome::Unverifiable);
    }

    #[test]
    fn tampering_is_caught() {
        let mut cert = reduce(ReductionKind::IsToNae, &k2(), &ReduceOptions::default()).unwrap();
        cert.contracts.push(Contract::Exact {
            lhs: Term::target(Measure::NaeSat),
            rhs: Term::source(Measure::IndependentSets).times(3),
        });
        let r = verify_certificate(&cert, Budget::default());
        assert_eq!(r.result, Outcome::Fail);
        assert!(!r.structure.iter().find(|c| c.name == "rebuild").unwrap().ok);
    }

    #[test]
    fn unclaimed_sandwich_is_reported() {
        let opts = ReduceOptions {
            t: Some(1),
            ..Default::default()
        };
        let cert = reduce(ReductionKind::IsToMaximalbis, &k2(), &opts).unwrap();
        let r = verify_certificate(&cert, Budget::default());
        assert_eq!(r.contracts[0].outcome, Outcome::NotClaimed);
        assert_eq!(r.result, Outcome::Pass);
    }
}
