//! Vertex covers recovered from dominating sets of a bipartite gadget.

use locopt::catalog::complete;
use locopt::enumerate::{count_vertex_covers, oracle};
use locopt::graph::SimpleGraph;
use locopt::reductions::reduce_vc_to_bidomsets;
use locopt::verify::{check_sandwich, recover_count};
use locopt::BigCount;

fn main() -> locopt::Result<()> {
    for g in [complete(2), SimpleGraph::edgeless(1)] {
        let (gadget, cert) = reduce_vc_to_bidomsets(&g, None)?;
        let t = cert.parameter("t").unwrap();
        let ds = oracle::count_dominating_sets(gadget.graph())?;
        let c = BigCount::pow2((g.edge_count() as u64 + 1) * t);
        let vc = count_vertex_covers(&g);
        assert!(check_sandwich(&vc, &ds, &c));
        println!("t = {t}: DS = {ds}, c = {c}, recovered VC = {} (direct {vc})", recover_count(&ds, &c));
    }
    Ok(())
}
