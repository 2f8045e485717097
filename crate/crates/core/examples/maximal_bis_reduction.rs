//! Independent sets counted through maximal independent sets of a bipartite
//! gadget: the gadget count divided by `2^{tm}` lands within a quarter of
//! IS(G), so the floor recovers it.

use locopt::catalog::{complete, path};
use locopt::enumerate::{count_independent_sets, count_maximal_independent_sets_bipartite};
use locopt::reductions::{bis_closed_form, reduce_is_to_maximal_bis};
use locopt::verify::{check_sandwich, recover_count};
use locopt::BigCount;

fn main() -> locopt::Result<()> {
    for g in [complete(2), path(3)] {
        let (gadget, cert) = reduce_is_to_maximal_bis(&g, None)?;
        let t = cert.parameter("t").unwrap();
        let mis = count_maximal_independent_sets_bipartite(&gadget);
        assert_eq!(mis, bis_closed_form(&g, t)?);
        let c = BigCount::pow2(t * g.edge_count() as u64);
        let is = count_independent_sets(&g);
        assert!(check_sandwich(&is, &mis, &c));
        println!(
            "{} vertices, t = {t}: MIS(gadget) = {mis}, c = {c}, recovered IS = {} (direct {is})",
            g.vertex_count(),
            recover_count(&mis, &c)
        );
    }
    Ok(())
}
