//! Minimal separators of a 4-cycle with a pendant vertex, read from the
//! text format.

use locopt::cli::{parse_graph, GraphMode, InstanceFile};
use locopt::enumerate::{separators, SeparatorKind};

fn main() -> locopt::Result<()> {
    let text = "# 4-cycle 1-2-3-4 with pendant 5 at vertex 1\nn 5\ne 1 2\ne 2 3\ne 3 4\ne 4 1\ne 1 5\n";
    let InstanceFile::Graph(g) = parse_graph(text, GraphMode::Simple)? else {
        unreachable!("no class lines")
    };
    for kind in SeparatorKind::ALL {
        let st = kind.needs_terminals().then_some((2, 4));
        let found = separators(&g, kind, st)?;
        let suffix = if st.is_some() { " for (2,4)" } else { "" };
        println!("{}{suffix}: {found:?}", kind.describe());
    }
    // {1,3} separates 2 from 4 minimally, yet contains the minimal separator {1}
    let inclusion = separators(&g, SeparatorKind::InclusionMinimal, None)?;
    assert!(!inclusion.iter().any(|x| x.len() == 2 && x.contains(&1) && x.contains(&3)));
    Ok(())
}
