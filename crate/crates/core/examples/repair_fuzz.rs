//! Cubic repair campaign with planted conflicts: `repair_fuzz [COUNT] [NMIN] [NMAX] [SEED]`.

use subcubic_packing::fuzz::cubic_repair_campaign;
use subcubic_packing::lemmas::LemmaOptions;

fn main() {
    let num = |i: usize, d: u64| std::env::args().nth(i).and_then(|s| s.parse().ok()).unwrap_or(d);
    let (count, lo, hi, seed) = (num(1, 1000) as usize, num(2, 4) as usize, num(3, 40) as usize, num(4, 1));
    let r = cubic_repair_campaign((lo, hi), count, seed, &LemmaOptions::default());
    println!("instances {} failed {}", r.instances, r.failed);
    for (label, k) in r.coverage.iter().filter(|(l, _)| l.starts_with("T5")) {
        println!("  {label}: {k}");
    }
    for f in &r.failures {
        eprintln!("---\n{f}");
    }
}
