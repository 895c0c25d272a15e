//! Searches every table cell the registry cannot witness and prints the
//! found generators in the witness data format.
//!
//! Usage: gaps [ITERS]
use std::time::Instant;

use trilcd::registry::{build_registry, diff_against_paper, format_code, DiffStatus};
use trilcd::search::{randomized_search_with, SearchBudget, Target};

fn main() {
    let mut budget = SearchBudget::default();
    if let Some(i) = std::env::args().nth(1) {
        budget.max_iters = i.parse().expect("integer");
    }
    let records = build_registry().expect("registry");
    for cell in diff_against_paper(&records)
        .into_iter()
        .filter(|c| c.status == DiffStatus::Miss)
    {
        let (n, k, d) = (cell.n, cell.k, cell.printed_lower);
        let t = Instant::now();
        let r = randomized_search_with(n, k, Target { d, dual_d: None }, &budget).expect("search");
        eprintln!(
            "[{n},{k}] target {d}: best_d={} ({:.1?})",
            r.best_d,
            t.elapsed()
        );
        if let Some(w) = r.witness.filter(|_| r.best_d >= d) {
            println!(
                "id=W_{n}_{k}_{} mode=randomized d={d} seed={} plateau={} iters={}",
                r.best_d, budget.seed, budget.plateau, budget.max_iters
            );
            println!("{}", format_code(&w));
        }
    }
}
