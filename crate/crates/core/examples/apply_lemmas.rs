//! The two recoloring lemmas on small hand-made instances.

use subcubic_packing::coloring::{Coloring, SixColor::*};
use subcubic_packing::graph::Graph;
use subcubic_packing::lemmas::{apply_lemma_c1, apply_lemma_c2};

fn main() {
    // u = 1 on the path 0 - 1 - 2, colored 3a between two 1a vertices.
    let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
    let f = Coloring::new(vec![OneA, ThreeA, OneA]);
    let out = apply_lemma_c2(&p3, &f, 1).unwrap();
    println!("{}: {:?}", out.case_label, out.coloring.as_slice());

    // Two ends of a path of length 4 share 2a.
    let p5 = Graph::new(7, &[(5, 0), (0, 1), (1, 2), (2, 3), (3, 4), (4, 6)]).unwrap();
    let f = Coloring::new(vec![TwoA, OneA, OneB, OneA, TwoA, OneB, OneB]);
    let out = apply_lemma_c1(&p5, &f, 0, 4).unwrap();
    println!("{} ({:?}): {:?}", out.case_label, out.c1_outcome, out.coloring.as_slice());
}
