//! Runs the seeded hill-climb and prints witnesses in the stand-in data
//! format.
//!
//! Usage: standins                      (every stand-in, default budget)
//!        standins N K D DUAL_D [ITERS] [SEED] [PLATEAU]
use std::time::Instant;

use trilcd::registry::format_code;
use trilcd::search::{randomized_search_with, SearchBudget, Target};

const STANDINS: &[(usize, usize, usize, usize)] = &[
    (13, 6, 6, 5),
    (14, 7, 6, 6),
    (14, 8, 5, 6),
    (15, 6, 7, 4),
    (16, 9, 5, 6),
    (19, 12, 5, 8),
    (20, 12, 6, 8),
    (20, 13, 5, 8),
];

fn run(n: usize, k: usize, d: usize, dual_d: usize, budget: &SearchBudget) {
    let t = Instant::now();
    let target = Target {
        d,
        dual_d: (dual_d > 0).then_some(dual_d),
    };
    let r = randomized_search_with(n, k, target, budget).expect("search");
    eprintln!(
        "[{n},{k}] target {d}/{dual_d}: best_d={} ({:.1?})",
        r.best_d,
        t.elapsed()
    );
    if let Some(w) = r.witness.filter(|_| r.best_d >= d) {
        println!(
            "id=L_{n}_{k}_{d} mode=randomized d={d} dual_d={dual_d} seed={} plateau={} iters={}",
            budget.seed, budget.plateau, budget.max_iters
        );
        println!("{}", format_code(&w));
    }
}

fn main() {
    let a: Vec<u64> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("integer"))
        .collect();
    let mut budget = SearchBudget::default();
    if a.is_empty() {
        for &(n, k, d, dd) in STANDINS {
            run(n, k, d, dd, &budget);
        }
        return;
    }
    if let Some(&i) = a.get(4) {
        budget.max_iters = i;
    }
    if let Some(&s) = a.get(5) {
        budget.seed = s;
    }
    if let Some(&p) = a.get(6) {
        budget.plateau = p;
    }
    run(
        a[0] as usize,
        a[1] as usize,
        a[2] as usize,
        a[3] as usize,
        &budget,
    );
}
