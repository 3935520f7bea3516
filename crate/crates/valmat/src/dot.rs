use std::fmt::Write;

use valmat_core::lattice::{self, LatticePoint};
use valmat_core::{Caps, ElementSet, Result, Valuation};

/// Hasse diagram of `[x, y]`. When `y = x + 1` each node also shows its flat.
pub fn export_dot(v: &Valuation, x: &LatticePoint, y: &LatticePoint, caps: &Caps) -> Result<String> {
    let nodes = lattice::interval(v, x, y, caps)?;
    let unit = y.point() == &x.point().shifted(1)?;
    let mut out = String::from("digraph interval {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, z) in nodes.iter().enumerate() {
        let mut label = z.point().to_string();
        if unit {
            let flat: ElementSet =
                (0..z.point().len()).filter(|&e| z.point().get(e) > x.point().get(e)).collect();
            label = format!("{label}\\n{}", v.ground().format_set(flat));
        }
        writeln!(out, "  n{i} [label=\"{label}\"];").unwrap();
    }
    for (i, z) in nodes.iter().enumerate() {
        for c in lattice::covers(v, z)? {
            if let Some(j) = nodes.iter().position(|n| n.point() == c.point()) {
                writeln!(out, "  n{i} -> n{j};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}
