//! Exhaustive and randomized search for LCD codes.
//!
//! The exhaustive sweep runs over systematic generators `[I_k | A]`. Every
//! code is a column permutation of a systematic one, and permuting or
//! negating columns leaves the rank of `G * G^T` unchanged over GF(3) (since
//! `2^2 = 1`), so the sweep sees every LCD code up to an LCD-preserving
//! equivalence and its maximum is `d_LCD(n, k)`.

use std::sync::atomic::{AtomicUsize, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{gray_walk, Fixed, Krawtchouk, Lanes, LinearCode, WeightEnumerator};
use crate::error::{Error, Result};
use crate::gf3::{rank_small, Trit, TritMatrix, TritVector};

pub const DEFAULT_SEED: u64 = 0x5eed_1cd3;

/// Limits and knobs for the searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Exhaustive mode requires `k * (n - k) <= max_exponent`.
    pub max_exponent: usize,
    /// Total candidate evaluations in randomized mode.
    pub max_iters: u64,
    /// Consecutive non-improving moves before a randomized restart.
    pub plateau: u64,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_exponent: 16,
            max_iters: 2_000_000,
            plateau: 200,
            seed: DEFAULT_SEED,
        }
    }
}

/// Outcome of a search for the best LCD `[n, k]` code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub n: usize,
    pub k: usize,
    pub best_d: usize,
    pub witness: Option<TritMatrix>,
    pub exhaustive: bool,
}

impl SearchResult {
    fn verified(
        n: usize,
        k: usize,
        best_d: usize,
        witness: Option<TritMatrix>,
        exhaustive: bool,
    ) -> Result<SearchResult> {
        if let Some(w) = &witness {
            let code = LinearCode::new(w.clone())?;
            let p = code.params()?;
            if p.tuple() != (n, k, best_d, true) {
                return Err(Error::VerificationMismatch {
                    id: format!("search witness [{n},{k}]"),
                    expected: (n, k, best_d, true),
                    computed: p.tuple(),
                });
            }
        }
        Ok(SearchResult {
            n,
            k,
            best_d,
            witness,
            exhaustive,
        })
    }
}

/// A systematic `[n, k]` code `[I_k | A]` held as one word pair per row.
///
/// The row-major entries of `A` are addressed by a candidate index read as a
/// base-3 number whose most significant digit is `A[0][0]`; counter order is
/// therefore lexicographic order on the entries.
struct Systematic {
    n: usize,
    k: usize,
    r: usize,
    kraw: Krawtchouk,
}

impl Systematic {
    fn new(n: usize, k: usize) -> Result<Systematic> {
        if n > 64 {
            return Err(Error::OutOfRange(format!(
                "systematic search supports n <= 64, got {n}"
            )));
        }
        Ok(Systematic {
            n,
            k,
            r: n - k,
            kraw: Krawtchouk::new(n),
        })
    }

    fn decode(&self, mut index: u64, entries: &mut [u8]) {
        for e in entries.iter_mut().rev() {
            *e = (index % 3) as u8;
            index /= 3;
        }
    }

    fn rows(&self, entries: &[u8]) -> Vec<(u64, u64)> {
        (0..self.k)
            .map(|i| {
                let mut o = 1u64 << i;
                let mut t = 0u64;
                for j in 0..self.r {
                    match entries[i * self.r + j] {
                        1 => o |= 1 << (self.k + j),
                        2 => t |= 1 << (self.k + j),
                        _ => {}
                    }
                }
                (o, t)
            })
            .collect()
    }

    /// Rows of the parity-check matrix `[-A^T | I_r]`.
    fn dual_rows(&self, entries: &[u8]) -> Vec<(u64, u64)> {
        (0..self.r)
            .map(|j| {
                let mut o = 1u64 << (self.k + j);
                let mut t = 0u64;
                for i in 0..self.k {
                    match entries[i * self.r + j] {
                        1 => t |= 1 << i,
                        2 => o |= 1 << i,
                        _ => {}
                    }
                }
                (o, t)
            })
            .collect()
    }

    fn is_lcd(&self, rows: &[(u64, u64)]) -> bool {
        let k = rows.len();
        let mut gram: Vec<(u64, u64)> = vec![(0, 0); k];
        for i in 0..k {
            for j in i..k {
                let (a, b) = (rows[i], rows[j]);
                let plus = ((a.0 & b.0) | (a.1 & b.1)).count_ones();
                let minus = ((a.0 & b.1) | (a.1 & b.0)).count_ones();
                let v = (plus + 2 * minus) % 3;
                let bit_i = 1u64 << i;
                let bit_j = 1u64 << j;
                match v {
                    1 => {
                        gram[i].0 |= bit_j;
                        gram[j].0 |= bit_i;
                    }
                    2 => {
                        gram[i].1 |= bit_j;
                        gram[j].1 |= bit_i;
                    }
                    _ => {}
                }
            }
        }
        rank_small(&mut gram) == k
    }

    /// Weight distribution of the span of `rows` (projective enumeration).
    fn distribution(&self, rows: &[(u64, u64)], counts: &mut [u64]) {
        counts.iter_mut().for_each(|c| *c = 0);
        counts[0] = 1;
        let lanes: Vec<Fixed<1>> = rows.iter().map(|&(o, t)| Fixed::from_pair(o, t)).collect();
        for i in 0..lanes.len() {
            gray_walk(&lanes[i], &lanes[i + 1..], |v| {
                counts[v.weight() as usize] += 2;
                true
            });
        }
    }

    /// Smallest codeword weight, stopping as soon as one `<= floor` appears.
    /// Returns `None` when the walk was cut short.
    fn min_weight_above(&self, rows: &[(u64, u64)], floor: usize) -> Option<usize> {
        let lanes: Vec<Fixed<1>> = rows.iter().map(|&(o, t)| Fixed::from_pair(o, t)).collect();
        let mut best = usize::MAX;
        for i in 0..lanes.len() {
            let done = gray_walk(&lanes[i], &lanes[i + 1..], |v| {
                let w = v.weight() as usize;
                best = best.min(w);
                w > floor
            });
            if !done {
                return None;
            }
        }
        Some(best)
    }

    /// Minimum distance if it exceeds `floor`, else `None`.
    fn distance_above(
        &self,
        entries: &[u8],
        rows: &[(u64, u64)],
        floor: usize,
        scratch: &mut Vec<u64>,
    ) -> Option<usize> {
        if rows
            .iter()
            .any(|&(o, t)| ((o | t).count_ones() as usize) <= floor)
        {
            return None;
        }
        if self.k <= self.r {
            return self.min_weight_above(rows, floor);
        }
        let dual = self.dual_rows(entries);
        scratch.resize(self.n + 1, 0);
        self.distribution(&dual, scratch);
        let ours = self.kraw.transform(scratch, self.r)?;
        let d = (1..=self.n).find(|&i| ours[i] > 0)?;
        (d > floor).then_some(d)
    }

    /// Weight distributions of the code and of its dual.
    fn distributions(
        &self,
        entries: &[u8],
        rows: &[(u64, u64)],
        scratch: &mut Vec<u64>,
    ) -> (Vec<u64>, Vec<u64>) {
        scratch.resize(self.n + 1, 0);
        if self.k <= self.r {
            self.distribution(rows, scratch);
            let ours = scratch.clone();
            let theirs = self
                .kraw
                .transform(&ours, self.k)
                .expect("valid enumerator");
            (ours, theirs)
        } else {
            let dual = self.dual_rows(entries);
            self.distribution(&dual, scratch);
            let theirs = scratch.clone();
            let ours = self
                .kraw
                .transform(&theirs, self.r)
                .expect("valid enumerator");
            (ours, theirs)
        }
    }

    /// LCD flag, distances and the number of words below the targets.
    fn profile(&self, entries: &[u8], target: &Target, scratch: &mut Vec<u64>) -> Profile {
        let rows = self.rows(entries);
        let lcd = self.is_lcd(&rows);
        let (ours, theirs) = self.distributions(entries, &rows, scratch);
        let d = (1..=self.n).find(|&i| ours[i] > 0).unwrap_or(0);
        let dd = (1..=self.n).find(|&i| theirs[i] > 0).unwrap_or(0);
        let below = |w: &[u64], t: usize| w[1..t.clamp(1, self.n + 1)].iter().sum::<u64>();
        Profile {
            lcd,
            d,
            dual_d: dd,
            low: below(&ours, target.d) + target.dual_d.map_or(0, |t| below(&theirs, t)),
        }
    }

    fn witness(&self, entries: &[u8]) -> TritMatrix {
        let mut g = TritMatrix::identity(self.k);
        let vals: Vec<Trit> = entries
            .iter()
            .map(|&e| Trit::new(e).expect("trit"))
            .collect();
        let a = TritMatrix::new(self.k, self.r, &vals).expect("shape");
        g = g.hstack(&a).expect("rows");
        g
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Profile {
    lcd: bool,
    d: usize,
    dual_d: usize,
    low: u64,
}

fn check_exhaustive(n: usize, k: usize, budget: &SearchBudget) -> Result<usize> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!(
            "need 1 <= k <= n, got n={n} k={k}"
        )));
    }
    let exponent = k * (n - k);
    if exponent > budget.max_exponent {
        return Err(Error::SearchBudget {
            exponent,
            max: budget.max_exponent,
        });
    }
    Ok(exponent)
}

const CHUNKS: u64 = 243;

/// Certifies `d_LCD(n, k)` by sweeping every systematic generator.
///
/// The first candidate (in counter order) reaching the maximum is returned
/// as the witness, independent of thread count.
pub fn exhaustive_best_lcd(n: usize, k: usize, budget: &SearchBudget) -> Result<SearchResult> {
    let exponent = check_exhaustive(n, k, budget)?;
    if k == n {
        return SearchResult::verified(n, k, 1, Some(TritMatrix::identity(n)), true);
    }
    let sys = Systematic::new(n, k)?;
    let total = 3u64.pow(exponent as u32);
    let chunk = total.div_ceil(CHUNKS).max(1);
    let global = AtomicUsize::new(0);
    let results: Vec<(usize, u64)> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut entries = vec![0u8; exponent];
            let mut scratch = Vec::new();
            let mut best = (0usize, u64::MAX);
            for idx in c * chunk..((c + 1) * chunk).min(total) {
                // keep ties with the global best so the earliest witness survives
                let floor = best.0.max(global.load(Ordering::Relaxed).saturating_sub(1));
                sys.decode(idx, &mut entries);
                let rows = sys.rows(&entries);
                let Some(d) = sys.distance_above(&entries, &rows, floor, &mut scratch) else {
                    continue;
                };
                if d > best.0 && sys.is_lcd(&rows) {
                    best = (d, idx);
                    global.fetch_max(d, Ordering::Relaxed);
                }
            }
            best
        })
        .collect();
    let (best_d, idx) = results.into_iter().fold((0, u64::MAX), |acc, r| {
        if r.0 > acc.0 || (r.0 == acc.0 && r.1 < acc.1) {
            r
        } else {
            acc
        }
    });
    let witness = (best_d > 0).then(|| {
        let mut entries = vec![0u8; exponent];
        sys.decode(idx, &mut entries);
        sys.witness(&entries)
    });
    SearchResult::verified(n, k, best_d, witness, true)
}

/// Whether some systematic LCD `[n, k, >= d]` code exists; returns the first
/// witness in counter order.
pub fn exists_lcd(
    n: usize,
    k: usize,
    d: usize,
    budget: &SearchBudget,
) -> Result<Option<TritMatrix>> {
    let exponent = check_exhaustive(n, k, budget)?;
    if k == n {
        return Ok((d <= 1).then(|| TritMatrix::identity(n)));
    }
    let sys = Systematic::new(n, k)?;
    let total = 3u64.pow(exponent as u32);
    let chunk = total.div_ceil(CHUNKS).max(1);
    let floor = d.saturating_sub(1);
    let hit = (0..total.div_ceil(chunk))
        .into_par_iter()
        .find_map_first(|c| {
            let mut entries = vec![0u8; exponent];
            let mut scratch = Vec::new();
            for idx in c * chunk..((c + 1) * chunk).min(total) {
                sys.decode(idx, &mut entries);
                let rows = sys.rows(&entries);
                if sys
                    .distance_above(&entries, &rows, floor, &mut scratch)
                    .is_some()
                    && sys.is_lcd(&rows)
                {
                    return Some(entries.clone());
                }
            }
            None
        });
    let Some(entries) = hit else { return Ok(None) };
    let w = sys.witness(&entries);
    let p = LinearCode::new(w.clone())?.params()?;
    if !(p.is_lcd && p.d >= d) {
        return Err(Error::VerificationMismatch {
            id: format!("exists_lcd witness [{n},{k},{d}]"),
            expected: (n, k, d, true),
            computed: p.tuple(),
        });
    }
    Ok(Some(w))
}

/// Targets for the randomized search; the dual target is optional.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Target {
    pub d: usize,
    pub dual_d: Option<usize>,
}

impl Profile {
    /// Lexicographic objective: LCD first, then shortfall against the
    /// targets, then fewer words below the target weights.
    fn score(&self, target: &Target) -> (bool, i64, i64) {
        let short = target.d.saturating_sub(self.d) as i64;
        let dual_short = target.dual_d.map_or(0, |t| t.saturating_sub(self.dual_d)) as i64;
        (self.lcd, -(short + dual_short), -(self.low as i64))
    }

    fn meets(&self, target: &Target) -> bool {
        self.lcd && self.d >= target.d && target.dual_d.is_none_or(|t| self.dual_d >= t)
    }
}

/// Largest redundancy `n - k` for which restarts use greedy starts.
const GREEDY_MAX_R: usize = 10;

/// A random block `A` for which `[I_k | A]` already has distance `>= d`,
/// built by choosing the columns of the parity-check matrix one at a time
/// so that every `d - 1` of them stay independent. `None` when the
/// space is too large, `Some(None)` when this attempt ran out of room.
fn greedy_block(k: usize, r: usize, d: usize, rng: &mut ChaCha8Rng) -> Option<Option<Vec<u8>>> {
    if d < 3 || r > GREEDY_MAX_R || d - 1 > r {
        return None;
    }
    // a vector is the word pair (ones, twos) packed as `ones | twos << r`
    let size = 1usize << (2 * r);
    let mask = (1usize << r) - 1;
    let pack = |(o, t): (usize, usize)| o | t << r;
    let unpack = |v: usize| (v & mask, v >> r);
    let add = |a: (usize, usize), b: (usize, usize)| -> (usize, usize) {
        let (a1, a2, b1, b2) = (a.0, a.1, b.0, b.1);
        let ones = (!a1 & !a2 & b1) | (a1 & !b1 & !b2) | (a2 & b2);
        let twos = (!a1 & !a2 & b2) | (a2 & !b1 & !b2) | (a1 & b1);
        (ones & mask, twos & mask)
    };
    // level j holds the union of spans of at most j chosen columns
    let top = d - 2;
    let mut member = vec![vec![false; size]; top + 1];
    let mut lists: Vec<Vec<usize>> = vec![vec![0]; top + 1];
    for level in member.iter_mut() {
        level[0] = true;
    }
    let insert = |p: (usize, usize), member: &mut Vec<Vec<bool>>, lists: &mut Vec<Vec<usize>>| {
        let multiples = [p, (p.1, p.0)];
        for j in (1..=top).rev() {
            let mut fresh = Vec::new();
            for &s in &lists[j - 1] {
                for &m in &multiples {
                    let v = pack(add(unpack(s), m));
                    if !member[j][v] {
                        member[j][v] = true;
                        fresh.push(v);
                    }
                }
            }
            if j < top {
                lists[j].extend(fresh);
            }
        }
    };
    for i in 0..r {
        insert((1 << i, 0), &mut member, &mut lists);
    }
    let mut points = Vec::with_capacity(k);
    for _ in 0..k {
        let free: Vec<usize> = (1..size)
            .filter(|&v| v & (v >> r) == 0 && !member[top][v])
            .collect();
        if free.is_empty() {
            return Some(None);
        }
        let p = unpack(free[rng.gen_range(0..free.len())]);
        insert(p, &mut member, &mut lists);
        points.push(p);
    }
    // column i of the parity check [-A^T | I_r] is point i
    let mut block = vec![0u8; k * r];
    for (i, &(o, t)) in points.iter().enumerate() {
        for j in 0..r {
            block[i * r + j] = if o >> j & 1 == 1 {
                2
            } else if t >> j & 1 == 1 {
                1
            } else {
                0
            };
        }
    }
    Some(Some(block))
}

/// Attempts per restart before falling back to a uniformly random block.
const GREEDY_ATTEMPTS: usize = 4096;

/// Seeded hill-climb over systematic generators.
///
/// Moves change one entry of `A`; equal-score moves are accepted, and the
/// walk restarts after `plateau` moves without improvement. Each start is a
/// random greedy block whose code already reaches the target distance when
/// the redundancy is small enough, else a uniformly random block. Stops at
/// the first candidate meeting the target.
pub fn randomized_search(
    n: usize,
    k: usize,
    target_d: usize,
    budget: &SearchBudget,
) -> Result<SearchResult> {
    randomized_search_with(
        n,
        k,
        Target {
            d: target_d,
            dual_d: None,
        },
        budget,
    )
}

pub fn randomized_search_with(
    n: usize,
    k: usize,
    target: Target,
    budget: &SearchBudget,
) -> Result<SearchResult> {
    if k == 0 || k >= n {
        return Err(Error::OutOfRange(format!(
            "need 1 <= k < n, got n={n} k={k}"
        )));
    }
    let sys = Systematic::new(n, k)?;
    let len = k * (n - k);
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut scratch = Vec::new();
    let r = n - k;
    let mut greedy = true;
    let mut random_block = |rng: &mut ChaCha8Rng| -> Vec<u8> {
        for _ in 0..GREEDY_ATTEMPTS {
            if !greedy {
                break;
            }
            match greedy_block(k, r, target.d, rng) {
                Some(Some(b)) => return b,
                Some(None) => {}
                None => greedy = false,
            }
        }
        (0..len).map(|_| rng.gen_range(0..3u8)).collect()
    };

    let mut current = random_block(&mut rng);
    let mut cur = sys.profile(&current, &target, &mut scratch);
    let mut best_entries = current.clone();
    let mut best = cur;
    let mut stale = 0u64;
    let mut iters = 0u64;
    while !best.meets(&target) && iters < budget.max_iters {
        iters += 1;
        let pos = rng.gen_range(0..len);
        let old = current[pos];
        current[pos] = (old + rng.gen_range(1..3u8)) % 3;
        let p = sys.profile(&current, &target, &mut scratch);
        if p.score(&target) >= cur.score(&target) {
            if p.score(&target) > cur.score(&target) {
                stale = 0;
            } else {
                stale += 1;
            }
            cur = p;
            if better_result(&cur, &best, &target) {
                best = cur;
                best_entries = current.clone();
            }
        } else {
            current[pos] = old;
            stale += 1;
        }
        if stale >= budget.plateau {
            current = random_block(&mut rng);
            cur = sys.profile(&current, &target, &mut scratch);
            if better_result(&cur, &best, &target) {
                best = cur;
                best_entries = current.clone();
            }
            stale = 0;
        }
    }
    if !best.lcd {
        return Ok(SearchResult {
            n,
            k,
            best_d: 0,
            witness: None,
            exhaustive: false,
        });
    }
    SearchResult::verified(n, k, best.d, Some(sys.witness(&best_entries)), false)
}

fn better_result(p: &Profile, best: &Profile, target: &Target) -> bool {
    p.score(target) > best.score(target)
}

/// Seeded hill-climb for a systematic LCD code with a prescribed weight
/// distribution. The objective is the L1 distance between distributions,
/// with non-LCD candidates ranked last; move and restart rules match
/// [`randomized_search_with`]. Returns the first exact match.
pub fn enumerator_search(
    n: usize,
    k: usize,
    target: &WeightEnumerator,
    budget: &SearchBudget,
) -> Result<Option<TritMatrix>> {
    if k == 0 || k >= n || target.n() != n {
        return Err(Error::OutOfRange(format!(
            "need 1 <= k < n = target length, got n={n} k={k}"
        )));
    }
    let sys = Systematic::new(n, k)?;
    let len = k * (n - k);
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut scratch = Vec::new();
    let goal = target.counts();
    let mut score = |entries: &[u8]| -> u64 {
        let rows = sys.rows(entries);
        if !sys.is_lcd(&rows) {
            return u64::MAX;
        }
        let (ours, _) = sys.distributions(entries, &rows, &mut scratch);
        ours.iter().zip(goal).map(|(a, b)| a.abs_diff(*b)).sum()
    };
    let random_block =
        |rng: &mut ChaCha8Rng| -> Vec<u8> { (0..len).map(|_| rng.gen_range(0..3u8)).collect() };
    let mut current = random_block(&mut rng);
    let mut cur = score(&current);
    let mut stale = 0u64;
    for _ in 0..budget.max_iters {
        if cur == 0 {
            let w = sys.witness(&current);
            let code = LinearCode::new(w.clone())?;
            if !code.is_lcd() || code.weight_enumerator()? != *target {
                return Err(Error::Parse(
                    "enumerator search produced an inconsistent witness".into(),
                ));
            }
            return Ok(Some(w));
        }
        let pos = rng.gen_range(0..len);
        let old = current[pos];
        current[pos] = (old + rng.gen_range(1..3u8)) % 3;
        let s = score(&current);
        if s <= cur {
            stale = if s < cur { 0 } else { stale + 1 };
            cur = s;
        } else {
            current[pos] = old;
            stale += 1;
        }
        if stale >= budget.plateau {
            current = random_block(&mut rng);
            cur = score(&current);
            stale = 0;
        }
    }
    Ok(None)
}

/// Oracle over every `k`-dimensional subspace of GF(3)^n, enumerated once
/// each through its reduced row-echelon generator. Feasible only for tiny
/// parameters; used to confirm that the systematic sweep loses nothing.
pub fn brute_force_best_lcd(n: usize, k: usize) -> Result<usize> {
    if k == 0 || k > n || n > 12 {
        return Err(Error::OutOfRange(format!(
            "brute force needs 1 <= k <= n <= 12, got n={n} k={k}"
        )));
    }
    let mut best = 0;
    for pivots in combinations(n, k) {
        // free positions: row i, columns after its pivot that are not pivots
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| {
                let p = &pivots;
                ((p[i] + 1)..n)
                    .filter(move |c| !p.contains(c))
                    .map(move |c| (i, c))
            })
            .collect();
        let total = 3u64.pow(free.len() as u32);
        for idx in 0..total {
            let mut rows = vec![TritVector::zeros(n); k];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i].set(p, Trit::ONE);
            }
            let mut x = idx;
            for &(i, c) in &free {
                rows[i].set(c, Trit::new((x % 3) as u8).expect("digit"));
                x /= 3;
            }
            let g = TritMatrix::from_rows(n, rows)?;
            let code = LinearCode::new(g)?;
            if code.is_lcd() {
                best = best.max(code.min_distance()?);
            }
        }
    }
    Ok(best)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..n {
            cur.push(c);
            rec(c + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Largest `d` allowed by the Griesmer bound for an `[n, k]` ternary code.
pub fn griesmer_max_d(n: usize, k: usize) -> usize {
    (1..=n)
        .rev()
        .find(|&d| {
            let mut sum = 0;
            let mut pow = 1;
            for _ in 0..k {
                sum += d.div_ceil(pow);
                pow *= 3;
            }
            sum <= n
        })
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn small_certificates() {
        assert_eq!(exhaustive_best_lcd(4, 2, &budget()).unwrap().best_d, 2);
        assert_eq!(exhaustive_best_lcd(7, 2, &budget()).unwrap().best_d, 4);
        assert_eq!(exhaustive_best_lcd(5, 3, &budget()).unwrap().best_d, 2);
    }

    #[test]
    fn budget_is_enforced() {
        let b = SearchBudget {
            max_exponent: 4,
            ..budget()
        };
        assert!(matches!(
            exhaustive_best_lcd(7, 2, &b),
            Err(Error::SearchBudget {
                exponent: 10,
                max: 4
            })
        ));
        assert!(exists_lcd(7, 2, 3, &b).is_err());
    }

    #[test]
    fn existence_examples() {
        assert!(exists_lcd(4, 2, 3, &budget()).unwrap().is_none());
        assert!(exists_lcd(6, 2, 4, &budget()).unwrap().is_some());
        for (n, k) in [(5, 2), (6, 4), (7, 1)] {
            let w = exists_lcd(n, k, 1, &budget()).unwrap().unwrap();
            assert_eq!(
                w,
                TritMatrix::identity(k)
                    .hstack(&TritMatrix::zeros(k, n - k))
                    .unwrap()
            );
        }
    }

    #[test]
    fn randomized_trivial_target() {
        let r = randomized_search(8, 3, 0, &budget()).unwrap();
        assert!(!r.exhaustive);
    }

    #[test]
    fn randomized_is_deterministic() {
        let b = SearchBudget {
            max_iters: 5_000,
            ..budget()
        };
        let a = randomized_search(10, 4, 5, &b).unwrap();
        let c = randomized_search(10, 4, 5, &b).unwrap();
        assert_eq!(a, c);
        assert_eq!(a.best_d, 5);
    }

    #[test]
    fn systematic_sweep_matches_all_subspaces() {
        for n in 2..=7 {
            for k in 1..=n {
                if k * (n - k) > 6 {
                    continue;
                }
                let sweep = exhaustive_best_lcd(n, k, &budget()).unwrap().best_d;
                assert_eq!(sweep, brute_force_best_lcd(n, k).unwrap(), "[{n},{k}]");
            }
        }
    }

    #[test]
    fn enumerator_search_hits_a_known_distribution() {
        let target = crate::constructions::dim2_code(7)
            .unwrap()
            .weight_enumerator()
            .unwrap();
        let b = SearchBudget {
            max_iters: 200_000,
            ..budget()
        };
        let w = enumerator_search(7, 2, &target, &b)
            .unwrap()
            .expect("found");
        let code = LinearCode::new(w).unwrap();
        assert!(code.is_lcd());
        assert_eq!(code.weight_enumerator().unwrap(), target);
    }

    #[test]
    fn enumerator_search_gives_up() {
        let target = WeightEnumerator::from_terms(4, &[(0, 1), (3, 8)]);
        let b = SearchBudget {
            max_iters: 2_000,
            ..budget()
        };
        assert_eq!(enumerator_search(4, 2, &target, &b).unwrap(), None);
        assert!(enumerator_search(5, 2, &target, &b).is_err());
    }

    #[test]
    fn griesmer_values() {
        assert_eq!(griesmer_max_d(13, 3), 9);
        assert_eq!(griesmer_max_d(4, 2), 3);
        assert_eq!(griesmer_max_d(5, 5), 1);
    }
}
