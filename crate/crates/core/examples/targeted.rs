//! Hill-climbs for an LCD code with a printed weight distribution.
//!
//! Usage: targeted N K POLYNOMIAL ITERS [SEED] [PLATEAU]
use std::time::Instant;

use trilcd::printed::parse_polynomial;
use trilcd::search::{enumerator_search, SearchBudget};
use trilcd::WeightEnumerator;

fn main() {
    let a: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = a[0].parse().expect("n");
    let k: usize = a[1].parse().expect("k");
    let target = WeightEnumerator::from_terms(n, &parse_polynomial(&a[2]).expect("polynomial"));
    let mut budget = SearchBudget {
        max_iters: a[3].parse().expect("iters"),
        ..SearchBudget::default()
    };
    if let Some(s) = a.get(4) {
        budget.seed = s.parse().expect("seed");
    }
    if let Some(p) = a.get(5) {
        budget.plateau = p.parse().expect("plateau");
    }
    let t = Instant::now();
    let r = enumerator_search(n, k, &target, &budget).expect("search");
    println!(
        "[{n},{k}] seed {}: {} ({:.1?})",
        budget.seed,
        if r.is_some() { "match" } else { "none" },
        t.elapsed()
    );
    if let Some(w) = r {
        for i in 0..w.rows() {
            println!("  {}", w.row(i));
        }
    }
}
