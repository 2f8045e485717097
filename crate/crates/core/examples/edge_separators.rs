//! Minimal edge separators (bonds) of multigraphs, including the largest
//! ones and the (s,t) variant.

use locopt::catalog::cycle;
use locopt::enumerate::{count_mes_st, max_cardinality_mes, mes_by_cardinality, minimal_edge_separators};
use locopt::graph::Multigraph;

fn main() -> locopt::Result<()> {
    // a doubled edge 1-2 followed by a single edge 2-3
    let g = Multigraph::new(3, [(1, 2), (1, 2), (2, 3)])?;
    for f in minimal_edge_separators(&g, None)? {
        let labels: Vec<usize> = f.iter().map(|e| e.0).collect();
        println!("separator with edge labels {labels:?}");
    }
    let (x, n) = max_cardinality_mes(&g)?;
    println!("largest separators: {n} of cardinality {x}");

    let c6 = cycle(6).to_multigraph();
    println!("C6 by cardinality: {:?}", mes_by_cardinality(&c6, None)?);
    println!("C6 separators between 1 and 4: {}", count_mes_st(&c6, 1, 4)?);
    Ok(())
}
