//! Decides whether an LCD `[n, k, d]` code exists by walking every
//! systematic generator `[I_k | A]` up to monomial equivalence.
//!
//! The first row of `A` is brought to `1..10..0` by permuting and negating
//! the columns of `A`; the remaining rows are taken with leading entry 1 and
//! in increasing order. Partial generators whose span already holds a word
//! of weight below `d` are cut off.
//!
//! Usage: classify N K D        (requires n - k <= 20)
use trilcd::{LinearCode, TritMatrix};

#[derive(Clone, Copy)]
struct Planes {
    ones: u32,
    twos: u32,
}

impl Planes {
    const ZERO: Planes = Planes { ones: 0, twos: 0 };

    fn add(self, b: Planes) -> Planes {
        let (a1, a2, b1, b2) = (self.ones, self.twos, b.ones, b.twos);
        Planes {
            ones: (!a1 & !a2 & b1) | (a1 & !b1 & !b2) | (a2 & b2),
            twos: (!a1 & !a2 & b2) | (a2 & !b1 & !b2) | (a1 & b1),
        }
    }

    fn neg(self) -> Planes {
        Planes {
            ones: self.twos,
            twos: self.ones,
        }
    }

    fn weight(self) -> u32 {
        (self.ones | self.twos).count_ones()
    }

    fn digit(self, j: usize) -> i64 {
        if self.ones >> j & 1 == 1 {
            1
        } else if self.twos >> j & 1 == 1 {
            2
        } else {
            0
        }
    }
}

struct Walk {
    k: usize,
    d: u32,
    m: usize,
    rows: Vec<Planes>,
    leaves: u64,
    lcd: u64,
    example: Option<Vec<Planes>>,
}

impl Walk {
    fn generator(&self, chosen: &[Planes]) -> TritMatrix {
        let rows: Vec<Vec<i64>> = chosen
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let mut row = vec![0; self.k];
                row[i] = 1;
                row.extend((0..self.m).map(|j| a.digit(j)));
                row
            })
            .collect();
        TritMatrix::from_int_rows(&rows).expect("digits")
    }

    /// `words` holds (information weight, parity part) for the span so far.
    fn extend(&mut self, start: usize, chosen: &mut Vec<Planes>, words: &[(u32, Planes)]) {
        if chosen.len() == self.k {
            self.leaves += 1;
            let code = LinearCode::new(self.generator(chosen)).expect("systematic");
            if code.is_lcd() {
                self.lcd += 1;
                self.example.get_or_insert_with(|| chosen.clone());
            }
            return;
        }
        for r in start..self.rows.len() {
            let a = self.rows[r];
            let mut next = Vec::with_capacity(words.len() * 3);
            next.extend_from_slice(words);
            let fits = words.iter().all(|&(w, v)| {
                let (x, y) = (v.add(a), v.add(a.neg()));
                next.push((w + 1, x));
                next.push((w + 1, y));
                w + 1 + x.weight() >= self.d && w + 1 + y.weight() >= self.d
            });
            if fits {
                chosen.push(a);
                self.extend(r + 1, chosen, &next);
                chosen.pop();
            }
        }
    }
}

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("integer"))
        .collect();
    let [n, k, d] = args[..] else {
        eprintln!("usage: classify N K D");
        std::process::exit(2);
    };
    let m = n - k;
    assert!(k >= 1 && m <= 20, "need 1 <= k and n - k <= 20");
    let d = d as u32;
    let mut rows = Vec::new();
    for x in 0..3usize.pow(m as u32) {
        let (mut v, mut y, mut lead) = (Planes::ZERO, x, 0);
        for j in 0..m {
            match y % 3 {
                1 => v.ones |= 1 << j,
                2 => v.twos |= 1 << j,
                _ => {}
            }
            if lead == 0 {
                lead = y % 3;
            }
            y /= 3;
        }
        if lead == 1 && v.weight() + 1 >= d {
            rows.push(v);
        }
    }
    let mut walk = Walk {
        k,
        d,
        m,
        rows,
        leaves: 0,
        lcd: 0,
        example: None,
    };
    for w in 0..=m {
        if (w as u32) + 1 < d {
            continue;
        }
        let first = Planes {
            ones: (1u32 << w) - 1,
            twos: 0,
        };
        let words = [(0, Planes::ZERO), (1, first), (1, first.neg())];
        walk.extend(0, &mut vec![first], &words);
    }
    println!(
        "[{n},{k},{d}]: {} systematic generators with d >= {d}, {} of them LCD",
        walk.leaves, walk.lcd
    );
    if let Some(chosen) = &walk.example {
        print!("{}", trilcd::registry::format_code(&walk.generator(chosen)));
    }
}
