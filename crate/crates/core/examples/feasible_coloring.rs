//! Feasible six-coloring of a 2-degenerate subcubic graph along its
//! elimination order.

use subcubic_packing::colorer::feasible_color_2degenerate;
use subcubic_packing::coloring::verify_feasible;
use subcubic_packing::gen::random_2degenerate_subcubic;

fn main() {
    let g = random_2degenerate_subcubic(30, 11);
    let order = g.degeneracy_order().unwrap();
    println!("elimination order {:?}", order.order);
    let f = feasible_color_2degenerate(&g).unwrap();
    for (v, c) in f.iter().enumerate() {
        println!("{v} {c}");
    }
    println!("conflicts {}", verify_feasible(&g, &f).unwrap().len());
}
