//! Arithmetic and linear algebra over GF(3).
//!
//! Vectors are bit-sliced: each 64 coordinates occupy two machine words, one
//! plane marking the coordinates equal to 1 and one marking those equal to 2.
//! A coordinate is never set in both planes, and padding bits past `len` are
//! always zero. With that encoding a vector addition is six word operations
//! per 64 lanes and the Hamming weight is a popcount of the OR of the planes.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// An element of GF(3), stored as its canonical residue `0`, `1` or `2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Trit(u8);

impl Trit {
    pub const ZERO: Trit = Trit(0);
    pub const ONE: Trit = Trit(1);
    pub const TWO: Trit = Trit(2);

    /// Builds a trit from a residue; values above 2 are rejected.
    pub fn new(value: u8) -> Result<Trit> {
        if value < 3 {
            Ok(Trit(value))
        } else {
            Err(Error::InvalidTrit(value as i64))
        }
    }

    /// Reduces any integer modulo 3.
    pub fn from_int(value: i64) -> Trit {
        Trit(value.rem_euclid(3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplicative inverse; `None` for zero. Every unit is its own inverse.
    pub fn inverse(self) -> Option<Trit> {
        if self.0 == 0 {
            None
        } else {
            Some(self)
        }
    }
}

impl Add for Trit {
    type Output = Trit;
    fn add(self, rhs: Trit) -> Trit {
        Trit((self.0 + rhs.0) % 3)
    }
}

impl Sub for Trit {
    type Output = Trit;
    fn sub(self, rhs: Trit) -> Trit {
        Trit((self.0 + 3 - rhs.0) % 3)
    }
}

impl Mul for Trit {
    type Output = Trit;
    fn mul(self, rhs: Trit) -> Trit {
        Trit((self.0 * rhs.0) % 3)
    }
}

impl Neg for Trit {
    type Output = Trit;
    fn neg(self) -> Trit {
        Trit((3 - self.0) % 3)
    }
}

impl fmt::Display for Trit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// Lane-wise `(xo, xt) += (yo, yt)` on one word pair.
#[inline(always)]
pub(crate) fn add_word(xo: u64, xt: u64, yo: u64, yt: u64) -> (u64, u64) {
    let t = (xo | yt) ^ (xt | yo);
    ((xt | yt) ^ t, (xo | yo) ^ t)
}

/// `x += y` over whole planes.
#[inline]
pub(crate) fn add_planes(xo: &mut [u64], xt: &mut [u64], yo: &[u64], yt: &[u64]) {
    for i in 0..xo.len() {
        let (o, t) = add_word(xo[i], xt[i], yo[i], yt[i]);
        xo[i] = o;
        xt[i] = t;
    }
}

/// `x -= y` over whole planes (subtraction adds the negation, which swaps planes).
#[inline]
pub(crate) fn sub_planes(xo: &mut [u64], xt: &mut [u64], yo: &[u64], yt: &[u64]) {
    add_planes(xo, xt, yt, yo)
}

#[inline]
pub(crate) fn weight_planes(o: &[u64], t: &[u64]) -> u32 {
    o.iter().zip(t).map(|(a, b)| (a | b).count_ones()).sum()
}

/// Dot product of two bit-sliced vectors.
#[inline]
pub(crate) fn dot_planes(xo: &[u64], xt: &[u64], yo: &[u64], yt: &[u64]) -> Trit {
    // products equal to 1: (1,1) or (2,2); equal to 2: (1,2) or (2,1)
    let mut plus = 0u32;
    let mut minus = 0u32;
    for i in 0..xo.len() {
        plus += ((xo[i] & yo[i]) | (xt[i] & yt[i])).count_ones();
        minus += ((xo[i] & yt[i]) | (xt[i] & yo[i])).count_ones();
    }
    Trit::from_int(plus as i64 - minus as i64)
}

/// A vector in GF(3)^len.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TritVector {
    len: usize,
    ones: Vec<u64>,
    twos: Vec<u64>,
}

impl TritVector {
    pub fn zeros(len: usize) -> TritVector {
        let w = words_for(len);
        TritVector {
            len,
            ones: vec![0; w],
            twos: vec![0; w],
        }
    }

    pub fn from_trits(trits: &[Trit]) -> TritVector {
        let mut v = TritVector::zeros(trits.len());
        for (i, &t) in trits.iter().enumerate() {
            v.set(i, t);
        }
        v
    }

    /// Builds a vector from integers reduced modulo 3.
    pub fn from_ints(values: &[i64]) -> TritVector {
        let trits: Vec<Trit> = values.iter().map(|&x| Trit::from_int(x)).collect();
        TritVector::from_trits(&trits)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub(crate) fn ones(&self) -> &[u64] {
        &self.ones
    }

    pub(crate) fn twos(&self) -> &[u64] {
        &self.twos
    }

    pub fn get(&self, i: usize) -> Trit {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        let (w, b) = (i / WORD_BITS, i % WORD_BITS);
        if self.ones[w] >> b & 1 == 1 {
            Trit::ONE
        } else if self.twos[w] >> b & 1 == 1 {
            Trit::TWO
        } else {
            Trit::ZERO
        }
    }

    pub fn set(&mut self, i: usize, t: Trit) {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        let (w, b) = (i / WORD_BITS, i % WORD_BITS);
        let mask = 1u64 << b;
        self.ones[w] &= !mask;
        self.twos[w] &= !mask;
        match t.value() {
            1 => self.ones[w] |= mask,
            2 => self.twos[w] |= mask,
            _ => {}
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Trit> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn to_trits(&self) -> Vec<Trit> {
        self.iter().collect()
    }

    pub fn hamming_weight(&self) -> usize {
        weight_planes(&self.ones, &self.twos) as usize
    }

    pub fn is_zero(&self) -> bool {
        self.ones.iter().chain(&self.twos).all(|&w| w == 0)
    }

    pub fn add(&self, other: &TritVector) -> TritVector {
        assert_eq!(self.len, other.len, "vector length mismatch");
        let mut out = self.clone();
        add_planes(&mut out.ones, &mut out.twos, &other.ones, &other.twos);
        out
    }

    pub fn sub(&self, other: &TritVector) -> TritVector {
        assert_eq!(self.len, other.len, "vector length mismatch");
        let mut out = self.clone();
        sub_planes(&mut out.ones, &mut out.twos, &other.ones, &other.twos);
        out
    }

    pub fn neg(&self) -> TritVector {
        TritVector {
            len: self.len,
            ones: self.twos.clone(),
            twos: self.ones.clone(),
        }
    }

    pub fn scale(&self, t: Trit) -> TritVector {
        match t.value() {
            0 => TritVector::zeros(self.len),
            1 => self.clone(),
            _ => self.neg(),
        }
    }

    pub fn dot(&self, other: &TritVector) -> Trit {
        assert_eq!(self.len, other.len, "vector length mismatch");
        dot_planes(&self.ones, &self.twos, &other.ones, &other.twos)
    }

    /// In-place `self += factor * other`.
    pub(crate) fn axpy(&mut self, factor: Trit, other: &TritVector) {
        match factor.value() {
            1 => add_planes(&mut self.ones, &mut self.twos, &other.ones, &other.twos),
            2 => sub_planes(&mut self.ones, &mut self.twos, &other.ones, &other.twos),
            _ => {}
        }
    }

    fn negate_in_place(&mut self) {
        std::mem::swap(&mut self.ones, &mut self.twos);
    }

    /// Index of the first nonzero coordinate.
    pub fn leading_index(&self) -> Option<usize> {
        for (w, (o, t)) in self.ones.iter().zip(&self.twos).enumerate() {
            let m = o | t;
            if m != 0 {
                return Some(w * WORD_BITS + m.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Concatenation `(self | other)`.
    pub fn concat(&self, other: &TritVector) -> TritVector {
        let mut out = TritVector::zeros(self.len + other.len);
        for i in 0..self.len {
            out.set(i, self.get(i));
        }
        for i in 0..other.len {
            out.set(self.len + i, other.get(i));
        }
        out
    }

    /// Keeps the listed 0-based coordinates, in the given order.
    pub fn select(&self, coords: &[usize]) -> TritVector {
        let mut out = TritVector::zeros(coords.len());
        for (j, &c) in coords.iter().enumerate() {
            out.set(j, self.get(c));
        }
        out
    }
}

impl fmt::Display for TritVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in self.iter() {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TritVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TritVector({self})")
    }
}

impl FromStr for TritVector {
    type Err = Error;

    /// Parses a string of digits `0`, `1`, `2`; spaces are ignored.
    fn from_str(s: &str) -> Result<TritVector> {
        let trits = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(Trit::ZERO),
                '1' => Ok(Trit::ONE),
                '2' => Ok(Trit::TWO),
                other => Err(Error::Parse(format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TritVector::from_trits(&trits))
    }
}

/// A dense matrix over GF(3), stored as packed rows.
///
/// A matrix may have zero rows (the nullspace of a nonsingular matrix, for
/// instance) but always has a definite column count.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TritMatrix {
    cols: usize,
    rows: Vec<TritVector>,
}

impl TritMatrix {
    /// Builds a matrix from row-major data.
    pub fn new(rows: usize, cols: usize, data: &[Trit]) -> Result<TritMatrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(TritMatrix {
            cols,
            rows: data
                .chunks(cols.max(1))
                .take(rows)
                .map(TritVector::from_trits)
                .collect(),
        })
    }

    pub fn from_rows(cols: usize, rows: Vec<TritVector>) -> Result<TritMatrix> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                r.len()
            )));
        }
        Ok(TritMatrix { cols, rows })
    }

    /// Builds a matrix from integer rows reduced modulo 3.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<TritMatrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        TritMatrix::from_rows(
            cols,
            rows.iter().map(|r| TritVector::from_ints(r)).collect(),
        )
    }

    /// Parses one row per string, e.g. `["1011", "0112"]`.
    pub fn from_digit_rows<S: AsRef<str>>(rows: &[S]) -> Result<TritMatrix> {
        let parsed = rows
            .iter()
            .map(|r| r.as_ref().parse::<TritVector>())
            .collect::<Result<Vec<_>>>()?;
        let cols = parsed.first().map_or(0, |r| r.len());
        TritMatrix::from_rows(cols, parsed)
    }

    pub fn zeros(rows: usize, cols: usize) -> TritMatrix {
        TritMatrix {
            cols,
            rows: vec![TritVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> TritMatrix {
        let mut m = TritMatrix::zeros(n, n);
        for i in 0..n {
            m.rows[i].set(i, Trit::ONE);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Trit {
        self.rows[r].get(c)
    }

    pub fn row(&self, r: usize) -> &TritVector {
        &self.rows[r]
    }

    pub fn row_vectors(&self) -> &[TritVector] {
        &self.rows
    }

    pub fn column(&self, c: usize) -> TritVector {
        let trits: Vec<Trit> = self.rows.iter().map(|r| r.get(c)).collect();
        TritVector::from_trits(&trits)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(TritVector::is_zero)
    }

    /// Row-major entries.
    pub fn to_trits(&self) -> Vec<Trit> {
        self.rows.iter().flat_map(|r| r.to_trits()).collect()
    }

    pub fn transpose(&self) -> TritMatrix {
        let mut out = TritMatrix::zeros(self.cols, self.rows());
        for (i, row) in self.rows.iter().enumerate() {
            for j in 0..self.cols {
                let t = row.get(j);
                if !t.is_zero() {
                    out.rows[j].set(i, t);
                }
            }
        }
        out
    }

    /// Matrix product over GF(3).
    pub fn mul(&self, other: &TritMatrix) -> Result<TritMatrix> {
        if self.cols != other.rows() {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows(),
                self.cols,
                other.rows(),
                other.cols
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|a| {
                let mut acc = TritVector::zeros(other.cols);
                for (j, b) in other.rows.iter().enumerate() {
                    acc.axpy(a.get(j), b);
                }
                acc
            })
            .collect();
        Ok(TritMatrix {
            cols: other.cols,
            rows,
        })
    }

    /// `self * self^T`.
    pub fn gram(&self) -> TritMatrix {
        let k = self.rows();
        let mut out = TritMatrix::zeros(k, k);
        for i in 0..k {
            for j in i..k {
                let v = self.rows[i].dot(&self.rows[j]);
                out.rows[i].set(j, v);
                out.rows[j].set(i, v);
            }
        }
        out
    }

    /// Horizontal concatenation `(self | other)`.
    pub fn hstack(&self, other: &TritMatrix) -> Result<TritMatrix> {
        if self.rows() != other.rows() {
            return Err(Error::DimensionMismatch(format!(
                "cannot juxtapose {} rows with {} rows",
                self.rows(),
                other.rows()
            )));
        }
        Ok(TritMatrix {
            cols: self.cols + other.cols,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.concat(b))
                .collect(),
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &TritMatrix) -> Result<TritMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} columns on {} columns",
                other.cols, self.cols
            )));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(TritMatrix {
            cols: self.cols,
            rows,
        })
    }

    /// Keeps the listed 0-based columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> TritMatrix {
        TritMatrix {
            cols: cols.len(),
            rows: self.rows.iter().map(|r| r.select(cols)).collect(),
        }
    }

    /// Drops the listed 0-based columns.
    pub fn delete_columns(&self, cols: &[usize]) -> TritMatrix {
        let keep: Vec<usize> = (0..self.cols).filter(|c| !cols.contains(c)).collect();
        self.select_columns(&keep)
    }

    /// Multiplies the listed 0-based columns by `factor`.
    pub fn scale_columns(&self, cols: &[usize], factor: Trit) -> TritMatrix {
        let mut out = self.clone();
        for row in &mut out.rows {
            for &c in cols {
                let v = row.get(c);
                row.set(c, v * factor);
            }
        }
        out
    }

    /// `copies` horizontal repetitions of the matrix.
    pub fn repeat_horizontal(&self, copies: usize) -> TritMatrix {
        let mut out = TritMatrix {
            cols: 0,
            rows: vec![TritVector::zeros(0); self.rows()],
        };
        for _ in 0..copies {
            out = out.hstack(self).expect("same row count");
        }
        out
    }

    /// Reduced row-echelon form together with the (0-based) pivot columns.
    ///
    /// Zero rows are dropped, so the returned matrix has exactly `rank` rows.
    /// Pivots are chosen as the first nonzero entry at or below the current
    /// row, scanning columns left to right.
    pub fn rref(&self) -> (TritMatrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i].get(c).is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            if rows[r].get(c) == Trit::TWO {
                rows[r].negate_in_place();
            }
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r {
                    let f = row.get(c);
                    if !f.is_zero() {
                        row.axpy(-f, &pivot);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        (
            TritMatrix {
                cols: self.cols,
                rows,
            },
            pivots,
        )
    }

    /// Row rank over GF(3).
    pub fn rank(&self) -> usize {
        rank_of_rows(self.rows.clone())
    }

    /// Basis of the right nullspace `{x : self * x^T = 0}`, one vector per row.
    pub fn nullspace_basis(&self) -> TritMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let rows = free
            .iter()
            .map(|&f| {
                let mut v = TritVector::zeros(self.cols);
                v.set(f, Trit::ONE);
                for (i, &p) in pivots.iter().enumerate() {
                    v.set(p, -r.get(i, f));
                }
                v
            })
            .collect();
        TritMatrix {
            cols: self.cols,
            rows,
        }
    }

    /// True when the row space of `self` equals that of `other`.
    pub fn same_row_space(&self, other: &TritMatrix) -> bool {
        self.cols == other.cols && self.rref().0 == other.rref().0
    }

    /// SHA-256 over the canonical text rendering (`rows`x`cols` header then digit rows).
    pub fn content_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut h = Sha256::new();
        h.update(format!("{}x{}\n", self.rows(), self.cols));
        for r in &self.rows {
            h.update(r.to_string());
            h.update("\n");
        }
        hex::encode(h.finalize())
    }
}

/// Rank of a list of equal-length rows, consuming them.
pub(crate) fn rank_of_rows(mut rows: Vec<TritVector>) -> usize {
    let mut rank = 0;
    let cols = rows.first().map_or(0, |r| r.len());
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i].get(c).is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        let pv = pivot.get(c);
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row.get(c);
            if !f.is_zero() {
                // row -= (f / pv) * pivot; units are self-inverse
                row.axpy(-(f * pv), &pivot);
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of a small matrix whose rows fit in one word pair each.
///
/// `rows` holds `(ones, twos)` planes and is clobbered.
#[inline]
pub(crate) fn rank_small(rows: &mut [(u64, u64)]) -> usize {
    let mut rank = 0;
    let n = rows.len();
    while rank < n {
        // lowest set column among remaining rows
        let mut best: Option<(usize, u32)> = None;
        for (i, &(o, t)) in rows.iter().enumerate().skip(rank) {
            let m = o | t;
            if m != 0 {
                let c = m.trailing_zeros();
                if best.is_none_or(|(_, bc)| c < bc) {
                    best = Some((i, c));
                }
            }
        }
        let Some((p, c)) = best else { break };
        rows.swap(rank, p);
        let (po, pt) = rows[rank];
        let bit = 1u64 << c;
        for row in rows.iter_mut().skip(rank + 1) {
            let same = (row.0 & po | row.1 & pt) & bit != 0;
            let opposite = (row.0 & pt | row.1 & po) & bit != 0;
            if same {
                // row -= pivot
                *row = add_word(row.0, row.1, pt, po);
            } else if opposite {
                *row = add_word(row.0, row.1, po, pt);
            }
        }
        rank += 1;
    }
    rank
}

impl fmt::Display for TritMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TritMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "TritMatrix {}x{} [", self.rows(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&str]) -> TritMatrix {
        TritMatrix::from_digit_rows(rows).unwrap()
    }

    fn s2() -> TritMatrix {
        m(&["1011", "0112"])
    }

    #[test]
    fn trit_tables_are_mod_three() {
        for a in 0..3u8 {
            for b in 0..3u8 {
                let (x, y) = (Trit::new(a).unwrap(), Trit::new(b).unwrap());
                assert_eq!((x + y).value(), (a + b) % 3);
                assert_eq!((x * y).value(), (a * b) % 3);
                assert_eq!((x - y).value(), (a + 3 - b) % 3);
            }
        }
        assert_eq!(-Trit::ONE, Trit::TWO);
        assert!(Trit::new(3).is_err());
        assert_eq!(Trit::from_int(-1), Trit::TWO);
    }

    #[test]
    fn packed_add_matches_scalar_across_word_boundary() {
        let a: Vec<i64> = (0..150).map(|i| (i * 7 + 1) % 3).collect();
        let b: Vec<i64> = (0..150).map(|i| (i * 5 + 2) % 3).collect();
        let sum = TritVector::from_ints(&a).add(&TritVector::from_ints(&b));
        let diff = TritVector::from_ints(&a).sub(&TritVector::from_ints(&b));
        for i in 0..150 {
            assert_eq!(sum.get(i), Trit::from_int(a[i] + b[i]));
            assert_eq!(diff.get(i), Trit::from_int(a[i] - b[i]));
        }
    }

    #[test]
    fn identity_times_matrix() {
        let a = m(&["0121", "2200", "1112"]);
        assert_eq!(TritMatrix::identity(3).mul(&a).unwrap(), a);
    }

    #[test]
    fn simplex_two_is_self_orthogonal() {
        let g = s2();
        assert!(g.mul(&g.transpose()).unwrap().is_zero());
        assert_eq!(g.mul(&g.transpose()).unwrap().rank(), 0);
    }

    #[test]
    fn hand_product() {
        let a = m(&["12"]);
        let b = m(&["1", "2"]);
        assert_eq!(a.mul(&b).unwrap(), m(&["2"]));
    }

    #[test]
    fn mul_dimension_mismatch() {
        assert!(matches!(
            m(&["12"]).mul(&m(&["12"])),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn rref_examples() {
        let (r, p) = TritMatrix::identity(4).rref();
        assert_eq!(r, TritMatrix::identity(4));
        assert_eq!(p, vec![0, 1, 2, 3]);

        let (r, p) = m(&["21", "12"]).rref();
        assert_eq!(r, m(&["12"]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn nullspace_examples() {
        let ns = TritMatrix::identity(5).nullspace_basis();
        assert_eq!(ns.rows(), 0);
        assert_eq!(ns.cols(), 5);

        let ones = m(&["111"]);
        let ns = ones.nullspace_basis();
        assert_eq!(ns.rows(), 2);
        assert!(ones.mul(&ns.transpose()).unwrap().is_zero());
    }

    #[test]
    fn rank_small_agrees() {
        let g = m(&["1011", "0112", "1120"]);
        let mut rows: Vec<(u64, u64)> = g
            .row_vectors()
            .iter()
            .map(|r| (r.ones()[0], r.twos()[0]))
            .collect();
        assert_eq!(rank_small(&mut rows), g.rank());
    }

    fn arb_matrix(max_r: usize, max_c: usize) -> impl Strategy<Value = TritMatrix> {
        (1..=max_r, 1..=max_c).prop_flat_map(|(r, c)| {
            proptest::collection::vec(0u8..3, r * c).prop_map(move |v| {
                let t: Vec<Trit> = v.into_iter().map(|x| Trit::new(x).unwrap()).collect();
                TritMatrix::new(r, c, &t).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_properties(a in arb_matrix(6, 9)) {
            let r = a.rank();
            prop_assert!(r <= a.rows().min(a.cols()));
            prop_assert_eq!(r, a.transpose().rank());
            let ns = a.nullspace_basis();
            prop_assert_eq!(r + ns.rows(), a.cols());
            if ns.rows() > 0 {
                prop_assert!(a.mul(&ns.transpose()).unwrap().is_zero());
            }
            let (e, p) = a.rref();
            prop_assert_eq!(e.rref(), (e.clone(), p.clone()));
            prop_assert!(p.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(e.same_row_space(&a));
            let mut small: Vec<(u64, u64)> = a.row_vectors().iter().map(|v| (v.ones()[0], v.twos()[0])).collect();
            prop_assert_eq!(rank_small(&mut small), r);
        }

        #[test]
        fn rank_of_product_is_bounded(a in arb_matrix(5, 5), b in arb_matrix(5, 6)) {
            let b = TritMatrix::from_rows(b.cols(), (0..a.cols()).map(|i| b.row(i % b.rows()).clone()).collect()).unwrap();
            let ab = a.mul(&b).unwrap();
            prop_assert!(ab.rank() <= a.rank().min(b.rank()));
        }
    }
}
