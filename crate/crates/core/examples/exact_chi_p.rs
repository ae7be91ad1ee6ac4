//! Exact packing chromatic numbers of small graphs and their subdivisions.

use subcubic_packing::gen::named;
use subcubic_packing::oracle::{chi_p_exact, ChiP, DEFAULT_BUDGET};

fn show(label: &str, chi: ChiP, nodes: u64) {
    match chi {
        ChiP::Value { k, .. } => println!("{label}: {k} ({nodes} nodes)"),
        other => println!("{label}: {other:?}"),
    }
}

fn main() {
    for name in ["path_4", "cycle_5", "k4", "prism_3", "petersen"] {
        let g = named(name).unwrap();
        let r = chi_p_exact(&g, 10, DEFAULT_BUDGET);
        show(name, r.chi, r.nodes_explored);
        let r = chi_p_exact(&g.subdivide().dgraph, 10, DEFAULT_BUDGET);
        show(&format!("D({name})"), r.chi, r.nodes_explored);
    }
}
