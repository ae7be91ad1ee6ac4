//! Edge-list and graph6 encodings, and the subdivision vertex numbering.

use subcubic_packing::gen::{named, prism};
use subcubic_packing::io::{read_graph6, write_edge_list, write_graph6};

fn main() {
    let g = prism(3);
    let g6 = write_graph6(&g);
    println!("graph6 {g6}");
    print!("{}", write_edge_list(&read_graph6(&g6).unwrap()));
    let d = named("k4").unwrap().subdivide();
    for (v, o) in d.original_of.iter().enumerate() {
        println!("D(K4) vertex {v}: {o:?}");
    }
}
