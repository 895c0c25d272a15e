//! Linear codes over GF(3): validation, duality, the LCD test and weight
//! enumeration.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf3::{add_word, weight_planes, words_for, TritMatrix};

/// Default cap on the message-space exponent for exhaustive enumeration.
pub const DEFAULT_MAX_ENUM_K: usize = 16;

/// Limits how many codewords a single enumeration may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumBudget {
    /// Largest `k` such that all `3^k` codewords may be enumerated.
    pub max_k: usize,
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget {
            max_k: DEFAULT_MAX_ENUM_K,
        }
    }
}

impl EnumBudget {
    pub fn check(&self, k: usize) -> Result<()> {
        if k > self.max_k {
            Err(Error::TooLarge {
                k,
                max_k: self.max_k,
            })
        } else {
            Ok(())
        }
    }
}

/// A validated `[n, k]` linear code given by a full-rank generator matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    generator: TritMatrix,
}

impl LinearCode {
    /// Validates `generator` as a basis and wraps it.
    pub fn new(generator: TritMatrix) -> Result<LinearCode> {
        if generator.rows() == 0 || generator.cols() == 0 {
            return Err(Error::EmptyGenerator);
        }
        let rank = generator.rank();
        if rank < generator.rows() {
            return Err(Error::NotABasis {
                rank,
                rows: generator.rows(),
            });
        }
        Ok(LinearCode { generator })
    }

    /// Builds the code spanned by the rows, dropping dependent rows.
    pub fn spanned_by(generator: &TritMatrix) -> Result<LinearCode> {
        let (r, _) = generator.rref();
        LinearCode::new(r)
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &TritMatrix {
        &self.generator
    }

    /// Generator of the dual code, i.e. a parity-check matrix of `self`.
    pub fn dual(&self) -> Result<LinearCode> {
        if self.k() == self.n() {
            return Err(Error::ZeroDual { n: self.n() });
        }
        LinearCode::new(self.generator.nullspace_basis())
    }

    pub fn gram_report(&self) -> GramReport {
        GramReport::of(&self.generator)
    }

    pub fn is_lcd(&self) -> bool {
        self.gram_report().is_lcd
    }

    pub fn weight_enumerator(&self) -> Result<WeightEnumerator> {
        self.weight_enumerator_with(EnumBudget::default())
    }

    /// Exact weight distribution by visiting every codeword.
    pub fn weight_enumerator_with(&self, budget: EnumBudget) -> Result<WeightEnumerator> {
        budget.check(self.k())?;
        Ok(WeightEnumerator {
            counts: enumerate_weights(&self.generator),
        })
    }

    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_with(EnumBudget::default())
    }

    /// Minimum Hamming weight of a nonzero codeword.
    ///
    /// Enumerates whichever of the code and its dual is smaller; the dual
    /// route recovers the distribution with the MacWilliams transform.
    pub fn min_distance_with(&self, budget: EnumBudget) -> Result<usize> {
        let (n, k) = (self.n(), self.k());
        if k == n {
            return Ok(1);
        }
        if k <= n - k {
            budget.check(k)?;
            return Ok(min_weight_direct(&self.generator, n + 1).unwrap_or(0));
        }
        budget.check(n - k)?;
        let dual = self.dual()?;
        let w = WeightEnumerator {
            counts: enumerate_weights(dual.generator()),
        };
        match macwilliams_dual_enumerator(&w, n, n - k) {
            Ok(ours) => Ok(ours.min_distance().unwrap_or(0)),
            Err(Error::Overflow(_)) => {
                let big = macwilliams_big_counts(&w, n, n - k)?;
                Ok((1..=n).find(|&j| !big[j].is_zero()).unwrap_or(0))
            }
            Err(e) => Err(e),
        }
    }

    pub fn params(&self) -> Result<CodeParams> {
        Ok(CodeParams {
            n: self.n(),
            k: self.k(),
            d: self.min_distance()?,
            is_lcd: self.is_lcd(),
        })
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinearCode[{},{}] {:?}",
            self.n(),
            self.k(),
            self.generator
        )
    }
}

/// Verified `[n, k, d]` parameters plus the LCD flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub is_lcd: bool,
}

impl CodeParams {
    pub fn tuple(&self) -> (usize, usize, usize, bool) {
        (self.n, self.k, self.d, self.is_lcd)
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.n, self.k, self.d)
    }
}

/// The Gram matrix `G * G^T` of a generator and what it says about the hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramReport {
    pub gram: TritMatrix,
    pub gram_rank: usize,
    pub hull_dim: usize,
    pub is_lcd: bool,
}

impl GramReport {
    pub fn of(generator: &TritMatrix) -> GramReport {
        let gram = generator.gram();
        let gram_rank = gram.rank();
        let k = generator.rows();
        GramReport {
            gram,
            gram_rank,
            hull_dim: k - gram_rank,
            is_lcd: gram_rank == k,
        }
    }
}

/// Counts `A_0..A_n` of codewords by Hamming weight.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightEnumerator {
    counts: Vec<u64>,
}

impl WeightEnumerator {
    pub fn from_counts(counts: Vec<u64>) -> WeightEnumerator {
        WeightEnumerator { counts }
    }

    /// Builds an enumerator of length `n` from `(weight, count)` terms; repeated
    /// weights accumulate.
    pub fn from_terms(n: usize, terms: &[(usize, u64)]) -> WeightEnumerator {
        let mut counts = vec![0; n + 1];
        for &(w, c) in terms {
            counts[w] += c;
        }
        WeightEnumerator { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn coefficient(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    pub fn min_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&i| self.counts[i] > 0)
    }

    /// Nonzero `(weight, count)` terms in increasing weight.
    pub fn terms(&self) -> Vec<(usize, u64)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i, c))
            .collect()
    }

    /// Checks `A_0 = 1`, `sum = 3^k` and that every nonzero weight class has
    /// even size.
    pub fn is_consistent(&self, k: usize) -> bool {
        self.counts.first() == Some(&1)
            && self.total() == 3u128.pow(k as u32)
            && self.counts.iter().skip(1).all(|c| c % 2 == 0)
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match w {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}z")?,
                _ => write!(f, "{c}z^{w}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W({self})")
    }
}

/// Krawtchouk values `K_j(i)` for GF(3) and a fixed length.
pub(crate) struct Krawtchouk {
    n: usize,
    table: Vec<i128>,
}

impl Krawtchouk {
    pub(crate) fn new(n: usize) -> Krawtchouk {
        let binom = binomials(n);
        let mut table = vec![0i128; (n + 1) * (n + 1)];
        for j in 0..=n {
            for i in 0..=n {
                let mut acc = 0i128;
                for s in 0..=j.min(i) {
                    if j - s > n - i {
                        continue;
                    }
                    let term = binom[i][s] * binom[n - i][j - s] * (1i128 << (j - s));
                    if s % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                table[j * (n + 1) + i] = acc;
            }
        }
        Krawtchouk { n, table }
    }

    #[inline]
    pub(crate) fn get(&self, j: usize, i: usize) -> i128 {
        self.table[j * (self.n + 1) + i]
    }

    /// Dual distribution `B_j = 3^-k * sum_i A_i K_j(i)`, or `None` on overflow
    /// or a non-integral result.
    pub(crate) fn transform(&self, counts: &[u64], k: usize) -> Option<Vec<u64>> {
        let size = 3i128.checked_pow(k as u32)?;
        let mut out = Vec::with_capacity(self.n + 1);
        for j in 0..=self.n {
            let mut acc = 0i128;
            for (i, &a) in counts.iter().enumerate() {
                if a != 0 {
                    acc = acc.checked_add((a as i128).checked_mul(self.get(j, i))?)?;
                }
            }
            if acc < 0 || acc % size != 0 {
                return None;
            }
            out.push((acc / size) as u64);
        }
        Some(out)
    }
}

fn binomials(n: usize) -> Vec<Vec<i128>> {
    let mut b = vec![vec![0i128; n + 1]; n + 1];
    for i in 0..=n {
        b[i][0] = 1;
        for j in 1..=i {
            b[i][j] = b[i - 1][j - 1] + if j < i { b[i - 1][j] } else { 0 };
        }
    }
    b
}

/// Weight enumerator of the dual of an `[n, k]` code with distribution `w`.
///
/// `k = n` is accepted here (the dual is then the zero code) so the transform
/// can be checked at the boundary.
pub fn macwilliams_dual_enumerator(
    w: &WeightEnumerator,
    n: usize,
    k: usize,
) -> Result<WeightEnumerator> {
    if w.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "enumerator of length {} for n = {n}",
            w.n()
        )));
    }
    if n <= 40 {
        if let Some(counts) = Krawtchouk::new(n).transform(&w.counts, k) {
            return Ok(WeightEnumerator { counts });
        }
    }
    macwilliams_big(w, n, k)
}

fn macwilliams_big(w: &WeightEnumerator, n: usize, k: usize) -> Result<WeightEnumerator> {
    let counts = macwilliams_big_counts(w, n, k)?
        .into_iter()
        .enumerate()
        .map(|(j, c)| {
            c.to_u64()
                .ok_or_else(|| Error::Overflow(format!("dual coefficient {j} does not fit in u64")))
        })
        .collect::<Result<_>>()?;
    Ok(WeightEnumerator { counts })
}

/// Exact dual distribution in arbitrary precision.
fn macwilliams_big_counts(w: &WeightEnumerator, n: usize, k: usize) -> Result<Vec<BigInt>> {
    let mut binom = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for i in 0..=n {
        binom[i][0] = BigInt::from(1);
        for j in 1..=i {
            let above = if j < i {
                binom[i - 1][j].clone()
            } else {
                BigInt::zero()
            };
            binom[i][j] = &binom[i - 1][j - 1] + above;
        }
    }
    let size = BigInt::from(3).pow(k as u32);
    let mut counts = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc = BigInt::zero();
        for (i, &a) in w.counts.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let mut kr = BigInt::zero();
            for s in 0..=j.min(i) {
                if j - s > n - i {
                    continue;
                }
                let term =
                    &binom[i][s] * &binom[n - i][j - s] * BigInt::from(2).pow((j - s) as u32);
                if s % 2 == 0 {
                    kr += term;
                } else {
                    kr -= term;
                }
            }
            acc += kr * BigInt::from(a);
        }
        if !(&acc % &size).is_zero() {
            return Err(Error::Overflow(format!(
                "MacWilliams coefficient {j} is not divisible by 3^{k}; input is not a code enumerator"
            )));
        }
        counts.push(acc / &size);
    }
    Ok(counts)
}

// ---------------------------------------------------------------------------
// Enumeration kernel
// ---------------------------------------------------------------------------

/// Bit-sliced accumulator over a fixed number of words.
pub(crate) trait Lanes: Clone + Send + Sync {
    fn add_assign(&mut self, other: &Self);
    fn weight(&self) -> u32;
}

#[derive(Clone, Copy)]
pub(crate) struct Fixed<const W: usize> {
    o: [u64; W],
    t: [u64; W],
}

impl Fixed<1> {
    pub(crate) fn from_pair(o: u64, t: u64) -> Fixed<1> {
        Fixed { o: [o], t: [t] }
    }
}

impl<const W: usize> Lanes for Fixed<W> {
    #[inline(always)]
    fn add_assign(&mut self, other: &Self) {
        for i in 0..W {
            let (o, t) = add_word(self.o[i], self.t[i], other.o[i], other.t[i]);
            self.o[i] = o;
            self.t[i] = t;
        }
    }

    #[inline(always)]
    fn weight(&self) -> u32 {
        let mut w = 0;
        for i in 0..W {
            w += (self.o[i] | self.t[i]).count_ones();
        }
        w
    }
}

#[derive(Clone)]
pub(crate) struct Dynamic {
    o: Vec<u64>,
    t: Vec<u64>,
}

impl Lanes for Dynamic {
    fn add_assign(&mut self, other: &Self) {
        crate::gf3::add_planes(&mut self.o, &mut self.t, &other.o, &other.t);
    }

    fn weight(&self) -> u32 {
        weight_planes(&self.o, &self.t)
    }
}

pub(crate) fn fixed_rows<const W: usize>(g: &TritMatrix) -> Vec<Fixed<W>> {
    g.row_vectors()
        .iter()
        .map(|r| {
            let mut f = Fixed {
                o: [0; W],
                t: [0; W],
            };
            f.o[..r.ones().len()].copy_from_slice(r.ones());
            f.t[..r.twos().len()].copy_from_slice(r.twos());
            f
        })
        .collect()
}

fn dynamic_rows(g: &TritMatrix) -> Vec<Dynamic> {
    g.row_vectors()
        .iter()
        .map(|r| Dynamic {
            o: r.ones().to_vec(),
            t: r.twos().to_vec(),
        })
        .collect()
}

/// Visits `start + span(rows)` in modular Gray-code order: step `t` adds the
/// row indexed by the number of trailing zero base-3 digits of `t`, so every
/// step is a single row addition. `visit` returns `false` to stop early;
/// the return value reports whether the walk completed.
#[inline]
pub(crate) fn gray_walk<L: Lanes>(
    start: &L,
    rows: &[L],
    mut visit: impl FnMut(&L) -> bool,
) -> bool {
    let mut acc = start.clone();
    if !visit(&acc) {
        return false;
    }
    let m = rows.len();
    let mut digits = vec![0u8; m];
    loop {
        let mut j = 0;
        while j < m && digits[j] == 2 {
            digits[j] = 0;
            j += 1;
        }
        if j == m {
            return true;
        }
        digits[j] += 1;
        acc.add_assign(&rows[j]);
        if !visit(&acc) {
            return false;
        }
    }
}

/// Splits the projective message space into independent work items.
///
/// Every nonzero codeword is `c` or `-c` for exactly one `c` whose message has
/// leading coefficient 1. Item `(i, prefix)` covers messages whose first
/// nonzero coefficient is on row `i` (fixed to 1), whose next `prefix.len()`
/// coefficients equal `prefix`, and whose remaining coefficients are free.
fn work_items(k: usize, split: usize) -> Vec<(usize, Vec<u8>)> {
    let mut items = Vec::new();
    for i in 0..k {
        let rest = k - i - 1;
        let s = rest.min(split);
        for code in 0..3usize.pow(s as u32) {
            let mut prefix = Vec::with_capacity(s);
            let mut c = code;
            for _ in 0..s {
                prefix.push((c % 3) as u8);
                c /= 3;
            }
            items.push((i, prefix));
        }
    }
    items
}

fn item_start<L: Lanes>(rows: &[L], i: usize, prefix: &[u8]) -> L {
    let mut acc = rows[i].clone();
    for (off, &p) in prefix.iter().enumerate() {
        for _ in 0..p {
            acc.add_assign(&rows[i + 1 + off]);
        }
    }
    acc
}

const SPLIT_DIGITS: usize = 3;
const PARALLEL_MIN_K: usize = 9;

fn enumerate_lanes<L: Lanes>(rows: &[L], n: usize) -> Vec<u64> {
    let k = rows.len();
    let run = |(i, prefix): &(usize, Vec<u8>)| -> Vec<u64> {
        let mut local = vec![0u64; n + 1];
        let start = item_start(rows, *i, prefix);
        let free = &rows[i + 1 + prefix.len()..];
        gray_walk(&start, free, |v| {
            local[v.weight() as usize] += 2;
            true
        });
        local
    };
    let split = if k >= PARALLEL_MIN_K { SPLIT_DIGITS } else { 0 };
    let items = work_items(k, split);
    let mut counts = if k >= PARALLEL_MIN_K {
        items.par_iter().map(run).reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
    } else {
        items.iter().map(run).fold(vec![0u64; n + 1], |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        })
    };
    counts[0] += 1;
    counts
}

fn min_weight_lanes<L: Lanes>(rows: &[L], bound: usize) -> Option<usize> {
    let k = rows.len();
    let mut best = bound;
    for (i, prefix) in work_items(k, 0) {
        let start = item_start(rows, i, &prefix);
        gray_walk(&start, &rows[i + 1..], |v| {
            let w = v.weight() as usize;
            if w < best {
                best = w;
            }
            best > 1
        });
        if best <= 1 {
            break;
        }
    }
    (best < bound).then_some(best)
}

macro_rules! dispatch_width {
    ($g:expr, $f:ident, $($arg:expr),*) => {{
        let g: &TritMatrix = $g;
        match words_for(g.cols()) {
            0 | 1 => $f(&fixed_rows::<1>(g), $($arg),*),
            2 => $f(&fixed_rows::<2>(g), $($arg),*),
            3 | 4 => $f(&fixed_rows::<4>(g), $($arg),*),
            5..=8 => $f(&fixed_rows::<8>(g), $($arg),*),
            9..=16 => $f(&fixed_rows::<16>(g), $($arg),*),
            _ => $f(&dynamic_rows(g), $($arg),*),
        }
    }};
}

/// Weight distribution of the row space of `g` (rows must be independent).
pub(crate) fn enumerate_weights(g: &TritMatrix) -> Vec<u64> {
    let n = g.cols();
    dispatch_width!(g, enumerate_lanes, n)
}

/// Smallest nonzero codeword weight below `bound`, if any.
pub(crate) fn min_weight_direct(g: &TritMatrix, bound: usize) -> Option<usize> {
    dispatch_width!(g, min_weight_lanes, bound)
}

/// Reference enumerator: multiply every message by the generator.
///
/// Used by tests as an oracle independent of the Gray-code kernel.
pub fn naive_weight_enumerator(g: &TritMatrix) -> WeightEnumerator {
    let (k, n) = (g.rows(), g.cols());
    let mut counts = vec![0u64; n + 1];
    let mut msg = vec![0i64; k];
    loop {
        let mut w = 0;
        for c in 0..n {
            let s: i64 = (0..k).map(|r| msg[r] * g.get(r, c).value() as i64).sum();
            if s % 3 != 0 {
                w += 1;
            }
        }
        counts[w] += 1;
        let mut j = 0;
        while j < k && msg[j] == 2 {
            msg[j] = 0;
            j += 1;
        }
        if j == k {
            break;
        }
        msg[j] += 1;
    }
    WeightEnumerator { counts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf3::Trit;
    use proptest::prelude::*;

    fn m(rows: &[&str]) -> TritMatrix {
        TritMatrix::from_digit_rows(rows).unwrap()
    }

    #[test]
    fn make_code_rejects_dependent_rows() {
        assert!(matches!(
            LinearCode::new(m(&["1021", "1021"])),
            Err(Error::NotABasis { rank: 1, rows: 2 })
        ));
        let c = LinearCode::new(TritMatrix::identity(4)).unwrap();
        assert_eq!((c.n(), c.k()), (4, 4));
    }

    #[test]
    fn full_space_has_no_dual() {
        let c = LinearCode::new(TritMatrix::identity(3)).unwrap();
        assert!(matches!(c.dual(), Err(Error::ZeroDual { n: 3 })));
    }

    #[test]
    fn dual_of_codim_one_is_dim_one() {
        let c = LinearCode::new(m(&["10001", "01001", "00101", "00011"])).unwrap();
        let d = c.dual().unwrap();
        assert_eq!((d.n(), d.k()), (5, 1));
        assert!(c
            .generator()
            .mul(&d.generator().transpose())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn identity_gram_is_lcd() {
        for k in 1..6 {
            let r = LinearCode::new(TritMatrix::identity(k))
                .unwrap()
                .gram_report();
            assert!(r.is_lcd);
            assert_eq!(r.hull_dim, 0);
        }
    }

    #[test]
    fn simplex_two_hull_is_everything() {
        let r = LinearCode::new(m(&["1011", "0112"])).unwrap().gram_report();
        assert_eq!(r.gram_rank, 0);
        assert_eq!(r.hull_dim, 2);
        assert!(!r.is_lcd);
    }

    #[test]
    fn all_ones_enumerator() {
        let c = LinearCode::new(m(&["1111111"])).unwrap();
        let w = c.weight_enumerator().unwrap();
        assert_eq!(w.terms(), vec![(0, 1), (7, 2)]);
        assert_eq!(c.min_distance().unwrap(), 7);
    }

    #[test]
    fn identity_distance_is_one() {
        for n in 1..8 {
            let c = LinearCode::new(TritMatrix::identity(n)).unwrap();
            assert_eq!(c.min_distance().unwrap(), 1);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let c = LinearCode::new(TritMatrix::identity(5)).unwrap();
        assert!(matches!(
            c.weight_enumerator_with(EnumBudget { max_k: 4 }),
            Err(Error::TooLarge { k: 5, max_k: 4 })
        ));
    }

    #[test]
    fn macwilliams_of_full_space_is_zero_code() {
        let n = 5;
        let full = LinearCode::new(TritMatrix::identity(n)).unwrap();
        let w = full.weight_enumerator().unwrap();
        let d = macwilliams_dual_enumerator(&w, n, n).unwrap();
        assert_eq!(d.terms(), vec![(0, 1)]);
    }

    #[test]
    fn enumerator_display() {
        let w = WeightEnumerator::from_terms(7, &[(0, 1), (4, 12), (5, 6), (6, 8)]);
        assert_eq!(w.to_string(), "1 + 12z^4 + 6z^5 + 8z^6");
    }

    #[test]
    fn wide_codes_use_multiword_kernel() {
        // 3 x 150 with a repeating pattern exercises the 4-word path
        let rows: Vec<Vec<i64>> = (0..3)
            .map(|r| (0..150).map(|c| ((c * (r + 2) + r) % 3) as i64).collect())
            .collect();
        let g = TritMatrix::identity(3)
            .hstack(&TritMatrix::from_int_rows(&rows).unwrap())
            .unwrap();
        let c = LinearCode::new(g.clone()).unwrap();
        assert_eq!(c.weight_enumerator().unwrap(), naive_weight_enumerator(&g));
    }

    fn arb_code() -> impl Strategy<Value = LinearCode> {
        (1usize..=5, 1usize..=9).prop_flat_map(|(k, extra)| {
            let n = k + extra;
            proptest::collection::vec(0u8..3, k * extra).prop_map(move |v| {
                let a: Vec<Trit> = v.into_iter().map(|x| Trit::new(x).unwrap()).collect();
                let a = TritMatrix::new(k, extra, &a).unwrap();
                let _ = n;
                LinearCode::new(TritMatrix::identity(k).hstack(&a).unwrap()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn kernel_matches_naive(c in arb_code()) {
            let w = c.weight_enumerator().unwrap();
            prop_assert_eq!(&w, &naive_weight_enumerator(c.generator()));
            prop_assert!(w.is_consistent(c.k()));
            prop_assert_eq!(c.min_distance().unwrap(), w.min_distance().unwrap());
        }

        #[test]
        fn duality_properties(c in arb_code()) {
            prop_assume!(c.k() < c.n());
            let d = c.dual().unwrap();
            prop_assert_eq!(d.k(), c.n() - c.k());
            prop_assert!(c.generator().mul(&d.generator().transpose()).unwrap().is_zero());
            prop_assert!(d.dual().unwrap().generator().same_row_space(c.generator()));
            let (rc, rd) = (c.gram_report(), d.gram_report());
            prop_assert_eq!(rc.is_lcd, rd.is_lcd);
            prop_assert_eq!(rc.hull_dim, rd.hull_dim);
            if rc.is_lcd {
                prop_assert_eq!(c.generator().vstack(d.generator()).unwrap().rank(), c.n());
            }
            let wc = c.weight_enumerator().unwrap();
            let wd = d.weight_enumerator().unwrap();
            prop_assert_eq!(macwilliams_dual_enumerator(&wc, c.n(), c.k()).unwrap(), wd.clone());
            prop_assert_eq!(macwilliams_big(&wc, c.n(), c.k()).unwrap(), wd);
            prop_assert!(c.min_distance().unwrap() <= c.n() - c.k() + 1);
        }
    }
}
