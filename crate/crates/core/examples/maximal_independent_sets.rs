//! Maximal independent sets of small graphs, with the bipartite class
//! sweep and the generic search side by side.

use locopt::catalog::{complete_bipartite, cycle, path};
use locopt::enumerate::{
    count_maximal_independent_sets, maximal_independent_sets, maximal_independent_sets_bipartite, oracle,
};

fn main() -> locopt::Result<()> {
    for (name, g) in [("C4", cycle(4)), ("C5", cycle(5)), ("P6", path(6))] {
        let sets = maximal_independent_sets(&g);
        assert_eq!(sets, oracle::maximal_independent_sets(&g)?);
        println!("{name}: {} maximal independent sets {sets:?}", sets.len());
    }
    let k33 = complete_bipartite(3, 3);
    let by_class = maximal_independent_sets_bipartite(&k33);
    assert_eq!(by_class, maximal_independent_sets(k33.graph()));
    println!("K3,3: {by_class:?}");
    println!("C30 has {} maximal independent sets", count_maximal_independent_sets(&cycle(30)));
    Ok(())
}
