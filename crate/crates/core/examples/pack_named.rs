//! Packing coloring of the subdivision of a built-in graph: `pack_named [NAME]`.

use subcubic_packing::colorer::pack_subdivision;
use subcubic_packing::coloring::verify_packing;
use subcubic_packing::gen::named;
use subcubic_packing::graph::Origin;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "petersen".into());
    let g = named(&name).expect("known graph name");
    let p = pack_subdivision(&g).expect("connected subcubic input");
    for (v, c) in p.coloring.iter().enumerate() {
        match p.subdivision.original_of[v] {
            Origin::Vertex(x) => println!("vertex {x}: {c}"),
            Origin::Edge(a, b) => println!("edge {a}-{b}: {c}"),
        }
    }
    let conflicts = verify_packing(&p.subdivision.dgraph, &p.coloring).unwrap();
    println!("max color {}, conflicts {}", p.coloring.iter().max().unwrap(), conflicts.len());
}
