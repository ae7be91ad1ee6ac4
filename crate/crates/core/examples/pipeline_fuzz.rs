//! End-to-end campaign: `pipeline_fuzz [cubic|2deg] [COUNT] [NMIN] [NMAX] [SEED]`.

use subcubic_packing::fuzz::{pipeline_campaign, Family};
use subcubic_packing::lemmas::LemmaOptions;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let family: Family = args.get(1).map_or("cubic", |s| s).parse().unwrap_or_else(|e| panic!("{e}"));
    let num = |i: usize, d: u64| args.get(i).and_then(|s| s.parse().ok()).unwrap_or(d);
    let (count, lo, hi, seed) = (num(2, 1000) as usize, num(3, 4) as usize, num(4, 60) as usize, num(5, 1));
    let r = pipeline_campaign(family, (lo, hi), count, seed, &LemmaOptions::default());
    println!("{family:?}: instances {} failed {}", r.instances, r.failed);
    for (label, k) in &r.coverage {
        println!("  {label}: {k}");
    }
    for f in &r.failures {
        eprintln!("---\n{f}");
    }
}
