//! Verifiers on a valid coloring and on a corrupted copy.

use subcubic_packing::colorer::feasible_color_2degenerate;
use subcubic_packing::coloring::{verify_feasible, verify_s_coloring, Coloring, SSpec};
use subcubic_packing::gen::named;

fn main() {
    let g = named("cycle_7").unwrap();
    let f = feasible_color_2degenerate(&g).unwrap();
    println!("valid: {} conflicts", verify_feasible(&g, &f).unwrap().len());
    let mut bad = f.clone();
    bad.set(1, f[0]);
    for c in verify_feasible(&g, &bad).unwrap() {
        println!("corrupted: {c}");
    }
    let spec: SSpec = "1,2,3".parse().unwrap();
    let classes = Coloring::new(vec![1, 2, 1, 3, 1, 2, 1]);
    println!("(1,2,3) on C7: {} conflicts", verify_s_coloring(&g, &spec, &classes).unwrap().len());
}
