//! Good coloring of a random cubic graph and the case labels that fired.

use subcubic_packing::colorer::{good_color_cubic_with, CaseLog};
use subcubic_packing::coloring::verify_good;
use subcubic_packing::gen::random_cubic;
use subcubic_packing::lemmas::LemmaOptions;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20);
    let g = random_cubic(n, 7).expect("even n >= 4");
    let mut log = CaseLog::default();
    let f = good_color_cubic_with(&g, &LemmaOptions::default(), &mut log).unwrap();
    let colors: Vec<String> = f.iter().map(|c| c.to_string()).collect();
    println!("{}", colors.join(" "));
    let report = verify_good(&g, &f).unwrap();
    println!("valid {} with color 4 on {} vertex", report.is_valid(), report.four_count);
    for (label, k) in &log.counts {
        println!("  {label}: {k}");
    }
}
