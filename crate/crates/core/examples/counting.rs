//! Independent sets, vertex covers, dominating sets and monotone NAE
//! assignments, each against its brute-force oracle.

use locopt::catalog::{cycle, star, worked_example};
use locopt::enumerate::{
    count_dominating_sets, count_independent_sets, count_nae_sat, count_vertex_covers, oracle, NaeFormula,
};

fn main() -> locopt::Result<()> {
    for (name, g) in [("worked example", worked_example()), ("C7", cycle(7)), ("star on 6", star(6))] {
        let is = count_independent_sets(&g);
        let vc = count_vertex_covers(&g);
        let ds = count_dominating_sets(&g)?;
        assert_eq!(is, oracle::count_independent_sets(&g)?);
        assert_eq!(ds, oracle::count_dominating_sets(&g)?);
        println!("{name}: IS = {is}, VC = {vc}, DS = {ds}");
    }
    let phi = NaeFormula::new(5, [[1, 2, 3], [3, 4, 5]])?;
    println!("{phi}: {} satisfying assignments", count_nae_sat(&phi));
    Ok(())
}
