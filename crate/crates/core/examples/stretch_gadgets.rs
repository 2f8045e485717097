//! The thicken-and-stretch gadgets: edge separators of the 2-stretch and
//! good vertex separators of the 4-stretch.

use locopt::enumerate::{count_mes, separators, SeparatorKind};
use locopt::graph::Multigraph;
use locopt::reductions::{is_z_good, thicken_stretch_edge, thicken_stretch_vertex, GadgetContext};
use locopt::verify::recover_count;
use locopt::BigCount;

fn main() -> locopt::Result<()> {
    let k2 = Multigraph::new(2, [(1, 2)])?;
    let (g, cert) = thicken_stretch_edge(&k2, None, None)?;
    let k = cert.parameter("k").unwrap();
    let mes = count_mes(&g.graph().to_multigraph());
    println!("2-stretch of K2 at k = {k}: MES = {mes}, recovered TMES = {}", recover_count(&mes, &BigCount::pow2(k)));

    let p3 = Multigraph::new(3, [(1, 2), (2, 3)])?;
    let (g, cert) = thicken_stretch_vertex(&p3, Some(1), None)?;
    let ctx = GadgetContext::from_certificate(&cert)?;
    for x in separators(g.graph(), SeparatorKind::MinimalAny, None)? {
        let r = is_z_good(&ctx, &x)?;
        println!("{x:?}: good = {}, projects to {:?}", r.good(), r.projection);
    }
    Ok(())
}
