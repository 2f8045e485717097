//! Union closures and union representations, and the reductions that
//! produce them from graphs.

use locopt::catalog::{path, set_union_example};
use locopt::enumerate::{count_maximal_independent_sets, count_vertex_covers};
use locopt::reductions::{reduce_maximalbis_to_setunion, reduce_vc_to_unionreps};
use locopt::setfamily::{count_union_representations, union_closure};

fn main() -> locopt::Result<()> {
    let b = set_union_example();
    let (f, _) = reduce_maximalbis_to_setunion(&b)?;
    let closure = union_closure(&f)?;
    println!("F = {:?}", f.members());
    println!("U(F) = {closure:?} (the empty union included)");
    println!("MIS = {}, |U(F)| = {}", count_maximal_independent_sets(b.graph()), closure.len());

    let g = path(4);
    let (f, _) = reduce_vc_to_unionreps(&g, false)?;
    let all = (1..=g.edge_count()).collect();
    println!(
        "P4 incidence sets {:?}: {} representations of [m], VC = {}",
        f.members(),
        count_union_representations(&f, &all)?,
        count_vertex_covers(&g)
    );
    Ok(())
}
