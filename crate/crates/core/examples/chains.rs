//! Searches for a stand-in code whose shortened and punctured descendants
//! reproduce printed weight distributions.
//!
//! Usage: chains CONFIG ITERS [SEED] [PLATEAU]
//!
//! The witness is printed with, for each derived target, the first
//! coordinate choice (1-based) that reproduces it.
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trilcd::printed::parse_polynomial;
use trilcd::search::{randomized_search_with, SearchBudget, Target};
use trilcd::{LinearCode, TritMatrix, WeightEnumerator};

#[derive(Clone, Copy)]
enum Op {
    /// Shorten on `s` coordinates, then puncture `p` more.
    Shorten(usize, usize),
    /// Dual of the code punctured on `s` coordinates.
    DualPuncture(usize),
}

struct Derived {
    op: Op,
    target: Vec<u64>,
}

struct Config {
    n: usize,
    k: usize,
    d: usize,
    dual_d: usize,
    derived: Vec<Derived>,
}

fn poly(n: usize, text: &str) -> Vec<u64> {
    WeightEnumerator::from_terms(n, &parse_polynomial(text).expect("polynomial"))
        .counts()
        .to_vec()
}

fn config(name: &str) -> Config {
    match name {
        "15_6_7" => Config {
            n: 15,
            k: 6,
            d: 7,
            dual_d: 4,
            derived: vec![
                Derived {
                    op: Op::Shorten(1, 0),
                    target: poly(14, "1+34z^{7}+56z^{8}+46z^{9}+36z^{10}+34z^{11}+34z^{12}+2z^{13}"),
                },
                Derived {
                    op: Op::Shorten(2, 0),
                    target: poly(13, "1+16z^{7}+22z^{8}+20z^{9}+12z^{10}+8z^{11}+2z^{13}"),
                },
                Derived {
                    op: Op::Shorten(1, 1),
                    target: poly(13, "1+18z^{6}+44z^{7}+56z^{8}+52z^{9}+28z^{10}+34z^{11}+10z^{12}"),
                },
            ],
        },
        "20_8_8" => Config {
            n: 20,
            k: 8,
            d: 8,
            dual_d: 6,
            derived: vec![
                Derived {
                    op: Op::Shorten(2, 0),
                    target: poly(18, "1+18z^{8}+48z^{9}+108z^{10}+150z^{11}+106z^{12}+120z^{13}+84z^{14}+70z^{15}+24z^{16}"),
                },
                Derived {
                    op: Op::Shorten(3, 0),
                    target: poly(17, "1+8z^{8}+28z^{9}+46z^{10}+58z^{11}+40z^{12}+24z^{13}+24z^{14}+12z^{15}+2z^{16}"),
                },
                Derived {
                    op: Op::Shorten(4, 0),
                    target: poly(16, "1+18z^{9}+18z^{10}+22z^{11}+12z^{12}+6z^{13}+2z^{14}+2z^{15}"),
                },
                Derived {
                    op: Op::DualPuncture(3),
                    target: poly(
                        17,
                        "1+212z^{6}+328z^{7}+928z^{8}+1910z^{9}+3012z^{10}+3948z^{11}+3774z^{12}+2982z^{13}+1740z^{14}+664z^{15}+158z^{16}+26z^{17}",
                    ),
                },
                Derived {
                    op: Op::DualPuncture(1),
                    target: poly(
                        19,
                        "1+468z^{6}+840z^{7}+2882z^{8}+7284z^{9}+14408z^{10}+23646z^{11}+31296z^{12}+34140z^{13}+28896z^{14}+19248z^{15}+9822z^{16}+3382z^{17}+752z^{18}+82z^{19}",
                    ),
                },
            ],
        },
        other => panic!("unknown config {other}"),
    }
}

fn subsets(n: usize, size: usize) -> Vec<u32> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == size)
        .collect()
}

fn add(a: (u32, u32), b: (u32, u32)) -> (u32, u32) {
    let (a1, a2, b1, b2) = (a.0, a.1, b.0, b.1);
    let ones = (!a1 & !a2 & b1) | (a1 & !b1 & !b2) | (a2 & b2);
    let twos = (!a1 & !a2 & b2) | (a2 & !b1 & !b2) | (a1 & b1);
    (ones, twos)
}

/// All codewords of the span of `rows`, as support masks (sign is irrelevant
/// for weights).
fn supports(rows: &[(u32, u32)]) -> Vec<u32> {
    let mut words = vec![(0u32, 0u32)];
    for &r in rows {
        let twice = add(r, r);
        let len = words.len();
        for i in 0..len {
            words.push(add(words[i], r));
        }
        for i in 0..len {
            words.push(add(words[i], twice));
        }
    }
    words.into_iter().map(|(o, t)| o | t).collect()
}

fn krawtchouk(n: usize) -> Vec<Vec<i128>> {
    let binom = |a: i128, b: i128| -> i128 {
        if b < 0 || b > a {
            return 0;
        }
        (0..b).fold(1i128, |acc, i| acc * (a - i) / (i + 1))
    };
    (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    (0..=j.min(i))
                        .map(|s| {
                            let sign = if s % 2 == 0 { 1 } else { -1 };
                            sign * 2i128.pow((j - s) as u32)
                                * binom(i as i128, s as i128)
                                * binom((n - i) as i128, (j - s) as i128)
                        })
                        .sum()
                })
                .collect()
        })
        .collect()
}

struct Evaluator {
    cfg: Config,
    sets: Vec<Vec<(u32, u32)>>,
    kraw: Vec<Vec<Vec<i128>>>,
}

impl Evaluator {
    fn new(cfg: Config) -> Evaluator {
        let n = cfg.n;
        let sets = cfg
            .derived
            .iter()
            .map(|d| match d.op {
                Op::Shorten(s, 0) | Op::DualPuncture(s) => {
                    subsets(n, s).into_iter().map(|m| (m, 0)).collect()
                }
                Op::Shorten(s, p) => {
                    let mut out = Vec::new();
                    for a in subsets(n, s) {
                        for b in subsets(n, p) {
                            if a & b == 0 {
                                out.push((a, b));
                            }
                        }
                    }
                    out
                }
            })
            .collect();
        let kraw = (0..=n).map(krawtchouk).collect();
        Evaluator { cfg, sets, kraw }
    }

    fn distribution(&self, words: &[u32], zero: u32, drop: u32, len: usize) -> Vec<u64> {
        let mut c = vec![0u64; len + 1];
        let keep = !(zero | drop);
        for &w in words {
            if w & zero == 0 {
                c[(w & keep).count_ones() as usize] += 1;
            }
        }
        c
    }

    fn macwilliams(&self, counts: &[u64], k: usize) -> Vec<u64> {
        let n = counts.len() - 1;
        let q = 3i128.pow(k as u32);
        (0..=n)
            .map(|j| {
                let s: i128 = (0..=n)
                    .map(|i| counts[i] as i128 * self.kraw[n][i][j])
                    .sum();
                (s / q).max(0) as u64
            })
            .collect()
    }

    /// Per-target best L1 distance and the first choice achieving it.
    fn derived_scores(&self, words: &[u32]) -> Vec<(u64, (u32, u32))> {
        let n = self.cfg.n;
        self.cfg
            .derived
            .iter()
            .zip(&self.sets)
            .map(|(d, sets)| {
                let mut best = (u64::MAX, (0, 0));
                for &(a, b) in sets {
                    let len = n - (a | b).count_ones() as usize;
                    let dist = match d.op {
                        Op::Shorten(..) => self.distribution(words, a, b, len),
                        Op::DualPuncture(_) => {
                            let p = self.distribution(words, 0, a, len);
                            self.macwilliams(&p, self.cfg.k)
                        }
                    };
                    let l1: u64 = dist
                        .iter()
                        .zip(&d.target)
                        .map(|(x, y)| x.abs_diff(*y))
                        .sum();
                    if l1 < best.0 {
                        best = (l1, (a, b));
                        if l1 == 0 {
                            break;
                        }
                    }
                }
                best
            })
            .collect()
    }
}

fn rows_of(n: usize, k: usize, a: &[u8]) -> Vec<(u32, u32)> {
    (0..k)
        .map(|i| {
            let mut o = 1u32 << i;
            let mut t = 0u32;
            for j in 0..n - k {
                match a[i * (n - k) + j] {
                    1 => o |= 1 << (k + j),
                    2 => t |= 1 << (k + j),
                    _ => {}
                }
            }
            (o, t)
        })
        .collect()
}

fn matrix(n: usize, k: usize, a: &[u8]) -> TritMatrix {
    let rows: Vec<String> = (0..k)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if j < k {
                        if i == j {
                            '1'
                        } else {
                            '0'
                        }
                    } else {
                        char::from(b'0' + a[i * (n - k) + j - k])
                    }
                })
                .collect()
        })
        .collect();
    TritMatrix::from_digit_rows(&rows).expect("digits")
}

/// `(not lcd, shortfall, low-weight words, derived L1)`, compared
/// lexicographically.
fn score(ev: &Evaluator, a: &[u8]) -> (u64, u64, u64, u64) {
    let cfg = &ev.cfg;
    let g = matrix(cfg.n, cfg.k, a);
    let code = LinearCode::new(g).expect("systematic");
    if !code.is_lcd() {
        return (1, u64::MAX, u64::MAX, u64::MAX);
    }
    let words = supports(&rows_of(cfg.n, cfg.k, a));
    let ours = ev.distribution(&words, 0, 0, cfg.n);
    let dual = ev.macwilliams(&ours, cfg.k);
    let d = (1..=cfg.n).find(|&i| ours[i] > 0).unwrap_or(0);
    let dd = (1..=cfg.n).find(|&i| dual[i] > 0).unwrap_or(0);
    let short = (cfg.d.saturating_sub(d) + cfg.dual_d.saturating_sub(dd)) as u64;
    if short > 0 {
        let low = ours[1..cfg.d].iter().sum::<u64>() + dual[1..cfg.dual_d].iter().sum::<u64>();
        return (0, short, low, u64::MAX);
    }
    let l1 = ev.derived_scores(&words).iter().map(|s| s.0).sum();
    (0, 0, 0, l1)
}

fn coords(mask: u32) -> Vec<usize> {
    (0..32)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

/// A start point: a stand-in from the library search, in systematic form
/// (columns permuted so the pivots come first).
fn start(cfg: &Config, seed: u64) -> Option<Vec<u8>> {
    let (n, k) = (cfg.n, cfg.k);
    let budget = SearchBudget {
        seed,
        ..SearchBudget::default()
    };
    // search the side whose redundancy keeps the greedy starts cheap
    let code = if n - k <= k {
        let r = randomized_search_with(
            n,
            k,
            Target {
                d: cfg.d,
                dual_d: Some(cfg.dual_d),
            },
            &budget,
        )
        .ok()?;
        LinearCode::new(r.witness?).ok()?
    } else {
        let r = randomized_search_with(
            n,
            n - k,
            Target {
                d: cfg.dual_d,
                dual_d: Some(cfg.d),
            },
            &budget,
        )
        .ok()?;
        LinearCode::new(r.witness?).ok()?.dual().ok()?
    };
    let p = code.params().ok()?;
    if !(p.is_lcd && p.d >= cfg.d) {
        return None;
    }
    let (rref, pivots) = code.generator().rref();
    let order: Vec<usize> = pivots
        .iter()
        .copied()
        .chain((0..n).filter(|c| !pivots.contains(c)))
        .collect();
    let g = rref.select_columns(&order);
    let mut a = Vec::with_capacity(k * (n - k));
    for i in 0..k {
        for j in k..n {
            a.push(g.get(i, j).value());
        }
    }
    Some(a)
}

fn report(ev: &Evaluator, cur: &[u8]) {
    let (n, k) = (ev.cfg.n, ev.cfg.k);
    let words = supports(&rows_of(n, k, cur));
    for (d, (l1, (a, b))) in ev.cfg.derived.iter().zip(ev.derived_scores(&words)) {
        let kind = match d.op {
            Op::Shorten(..) => "shorten",
            Op::DualPuncture(_) => "dual-puncture",
        };
        println!(
            "  {kind} {:?} then puncture {:?}: L1 {l1}",
            coords(a),
            coords(b)
        );
    }
    let g = matrix(n, k, cur);
    for i in 0..k {
        println!("  {}", g.row(i));
    }
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let ev = Evaluator::new(config(&args[0]));
    let iters: u64 = args[1].parse().expect("iters");
    let mut seed: u64 = args.get(2).map_or(1, |s| s.parse().expect("seed"));
    let plateau: u64 = args.get(3).map_or(200, |s| s.parse().expect("plateau"));
    let (n, k) = (ev.cfg.n, ev.cfg.k);
    let len = k * (n - k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = Instant::now();
    let fresh = |seed: &mut u64| -> Vec<u8> {
        loop {
            *seed += 1;
            if let Some(a) = start(&ev.cfg, *seed) {
                return a;
            }
        }
    };
    let mut cur = fresh(&mut seed);
    let mut s = score(&ev, &cur);
    let mut best = s;
    let mut stale = 0;
    for it in 0..iters {
        if s == (0, 0, 0, 0) {
            println!(
                "match after {it} iterations, start seed {seed} ({:.1?})",
                t.elapsed()
            );
            report(&ev, &cur);
            return;
        }
        let pos = rng.gen_range(0..len);
        let old = cur[pos];
        cur[pos] = (old + rng.gen_range(1..3u8)) % 3;
        let s2 = score(&ev, &cur);
        if s2 <= s {
            stale = if s2 < s { 0 } else { stale + 1 };
            s = s2;
            if s < best {
                best = s;
                eprintln!("{it}: {best:?} seed {seed} ({:.1?})", t.elapsed());
            }
        } else {
            cur[pos] = old;
            stale += 1;
        }
        if stale >= plateau {
            cur = fresh(&mut seed);
            s = score(&ev, &cur);
            stale = 0;
        }
    }
    println!("no match; best {best:?}");
}
