//! Prints `d_LCD(n, k)` for every cell within the exhaustive budget.
use std::time::Instant;

use trilcd::search::{exhaustive_best_lcd, SearchBudget};

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(14);
    let budget = SearchBudget {
        max_exponent: max,
        ..SearchBudget::default()
    };
    for n in 2..=max + 1 {
        for k in 1..n {
            if k * (n - k) > max {
                continue;
            }
            let t = Instant::now();
            let r = exhaustive_best_lcd(n, k, &budget).expect("within budget");
            println!("n={n:2} k={k:2} d={:2} ({:.2?})", r.best_d, t.elapsed());
        }
    }
}
