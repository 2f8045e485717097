//! From independent sets to monotone NAE-SAT, and from NAE-SAT to the
//! largest minimal edge separators of a literal multigraph.

use locopt::catalog::{cycle, two_clause_formula};
use locopt::enumerate::{count_independent_sets, count_nae_sat, max_cardinality_mes, max_cardinality_mes_st};
use locopt::reductions::{reduce_is_to_nae, reduce_nae_to_large_mes};

fn main() -> locopt::Result<()> {
    let g = cycle(5);
    let (phi, _) = reduce_is_to_nae(&g)?;
    println!("{phi}");
    println!("SAT = {}, 2·IS = {}", count_nae_sat(&phi), count_independent_sets(&g).as_biguint() * 2u32);

    let phi = two_clause_formula();
    let (h, cert) = reduce_nae_to_large_mes(&phi)?;
    let (x, tmes) = max_cardinality_mes(&h)?;
    let (_, tmes_st) = max_cardinality_mes_st(&h, 1, phi.vars() + 1)?;
    println!(
        "{phi}: k = {}, largest separators have {x} edges; SAT = {}, TMES = {tmes}, TMES(x1, not x1) = {tmes_st}",
        cert.parameter("k").unwrap(),
        count_nae_sat(&phi)
    );
    Ok(())
}
