//! Lemma fuzz campaign with case coverage: `lemma_fuzz [COUNT] [STEPS] [SEED]`.

use subcubic_packing::fuzz::{lemma_campaign, LemmaKind};

fn main() {
    let arg = |i: usize, d: u64| std::env::args().nth(i).and_then(|s| s.parse().ok()).unwrap_or(d);
    let (count, steps, seed) = (arg(1, 2000) as usize, arg(2, 100) as usize, arg(3, 1));
    for kind in [LemmaKind::Three, LemmaKind::Pair] {
        let r = lemma_campaign(kind, count, seed, steps);
        println!("{kind:?}: instances {} stuck {} invalid {}", r.instances, r.stuck, r.invalid);
        for c in kind.cases() {
            println!("  {c}: {}", r.coverage.get(c).copied().unwrap_or(0));
        }
        for f in &r.failures {
            eprintln!("--- {kind:?} {f}");
        }
    }
}
