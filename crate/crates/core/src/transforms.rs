//! Puncturing, shortening, juxtaposition and column scaling.
//!
//! Coordinates are 1-based at this interface.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf3::{Trit, TritMatrix};

/// A strictly increasing set of 1-based coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CoordSet(Vec<usize>);

impl CoordSet {
    /// Sorts the coordinates; rejects zero and duplicates.
    pub fn new(mut coords: Vec<usize>) -> Result<CoordSet> {
        coords.sort_unstable();
        if coords.first() == Some(&0) {
            return Err(Error::InvalidCoords("coordinates are 1-based".into()));
        }
        if coords.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCoords(format!(
                "duplicate coordinate in {coords:?}"
            )));
        }
        Ok(CoordSet(coords))
    }

    /// Every coordinate `1..=n`.
    pub fn all(n: usize) -> CoordSet {
        CoordSet((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }

    pub fn zero_based(&self) -> Vec<usize> {
        self.0.iter().map(|c| c - 1).collect()
    }

    fn check_within(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&c) if c > n => Err(Error::InvalidCoords(format!(
                "coordinate {c} exceeds length {n}"
            ))),
            _ => Ok(()),
        }
    }
}

impl TryFrom<Vec<usize>> for CoordSet {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<CoordSet> {
        CoordSet::new(v)
    }
}

impl From<CoordSet> for Vec<usize> {
    fn from(c: CoordSet) -> Vec<usize> {
        c.0
    }
}

impl FromStr for CoordSet {
    type Err = Error;

    /// Parses `"1,2,7"` or `"{1, 2, 7}"`.
    fn from_str(s: &str) -> Result<CoordSet> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        if inner.trim().is_empty() {
            return CoordSet::new(Vec::new());
        }
        let coords = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidCoords(format!("{p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        CoordSet::new(coords)
    }
}

impl fmt::Display for CoordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// Deletes the coordinates in `s` from every codeword.
///
/// The dimension must survive; a rank drop is reported as an error.
pub fn puncture(c: &LinearCode, s: &CoordSet) -> Result<LinearCode> {
    if s.is_empty() {
        return Err(Error::InvalidCoords(
            "puncture needs at least one coordinate".into(),
        ));
    }
    s.check_within(c.n())?;
    if s.len() >= c.n() {
        return Err(Error::InvalidCoords(format!(
            "cannot puncture {} of {} coordinates",
            s.len(),
            c.n()
        )));
    }
    let g = c.generator().delete_columns(&s.zero_based());
    let rank = g.rank();
    if rank < c.k() {
        return Err(Error::PunctureCollapse { k: c.k(), rank });
    }
    LinearCode::new(g)
}

/// Keeps the codewords vanishing on `s`, then deletes those coordinates.
///
/// The subcode is found as the left nullspace of the selected columns acting
/// on message space; its dimension must be exactly `k - |s|`.
pub fn shorten(c: &LinearCode, s: &CoordSet) -> Result<LinearCode> {
    if s.is_empty() {
        return Err(Error::InvalidCoords(
            "shorten needs at least one coordinate".into(),
        ));
    }
    s.check_within(c.n())?;
    if s.len() >= c.k() {
        return Err(Error::InvalidCoords(format!(
            "cannot shorten a dimension-{} code on {} coordinates",
            c.k(),
            s.len()
        )));
    }
    let cols = s.zero_based();
    let selected = c.generator().select_columns(&cols);
    // messages m with m * selected = 0
    let messages = selected.transpose().nullspace_basis();
    let expected = c.k() - s.len();
    if messages.rows() != expected {
        return Err(Error::ShortenDimension {
            expected,
            achieved: messages.rows(),
        });
    }
    let sub = messages.mul(c.generator())?;
    LinearCode::new(sub.delete_columns(&cols))
}

/// Appends `copies` copies of `block` to the right of the generator.
pub fn juxtapose(c: &LinearCode, block: &TritMatrix, copies: usize) -> Result<LinearCode> {
    if block.rows() != c.k() {
        return Err(Error::DimensionMismatch(format!(
            "block has {} rows, code has dimension {}",
            block.rows(),
            c.k()
        )));
    }
    if copies == 0 {
        return Ok(c.clone());
    }
    let g = c.generator().hstack(&block.repeat_horizontal(copies))?;
    LinearCode::new(g)
}

/// Multiplies the coordinates in `s` by a nonzero `factor`.
pub fn scale_columns(c: &LinearCode, s: &CoordSet, factor: Trit) -> Result<LinearCode> {
    if factor.is_zero() {
        return Err(Error::OutOfRange("scaling factor must be nonzero".into()));
    }
    s.check_within(c.n())?;
    LinearCode::new(c.generator().scale_columns(&s.zero_based(), factor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::naive_weight_enumerator;
    use proptest::prelude::*;

    fn code(rows: &[&str]) -> LinearCode {
        LinearCode::new(TritMatrix::from_digit_rows(rows).unwrap()).unwrap()
    }

    fn s2() -> TritMatrix {
        TritMatrix::from_digit_rows(&["1011", "0112"]).unwrap()
    }

    #[test]
    fn coordset_parsing() {
        let s: CoordSet = "{7, 1,2}".parse().unwrap();
        assert_eq!(s.coords(), &[1, 2, 7]);
        assert_eq!(s.to_string(), "{1,2,7}");
        assert!("1,1".parse::<CoordSet>().is_err());
        assert!("0,3".parse::<CoordSet>().is_err());
        assert!("".parse::<CoordSet>().unwrap().is_empty());
    }

    #[test]
    fn empty_sets_are_rejected() {
        let c = code(&["10111", "01112"]);
        let empty = CoordSet::new(vec![]).unwrap();
        assert!(puncture(&c, &empty).is_err());
        assert!(shorten(&c, &empty).is_err());
    }

    #[test]
    fn out_of_range_coordinate() {
        let c = code(&["10111", "01112"]);
        assert!(matches!(
            puncture(&c, &CoordSet::new(vec![6]).unwrap()),
            Err(Error::InvalidCoords(_))
        ));
    }

    #[test]
    fn puncture_that_drops_rank_is_an_error() {
        let c = code(&["1000", "0100"]);
        assert!(matches!(
            puncture(&c, &CoordSet::new(vec![1]).unwrap()),
            Err(Error::PunctureCollapse { k: 2, rank: 1 })
        ));
    }

    #[test]
    fn shorten_on_systematic_column() {
        let c = code(&["10121", "01112"]);
        let s = shorten(&c, &CoordSet::new(vec![1]).unwrap()).unwrap();
        assert_eq!((s.n(), s.k()), (4, 1));
        assert_eq!(s.generator().to_string(), "1112");
    }

    #[test]
    fn shorten_reports_unexpected_dimension() {
        // column 3 is zero, so every codeword vanishes there
        let c = code(&["10011", "01012", "00111"]);
        let zero_col = code(&["10011", "01012"]);
        assert!(matches!(
            shorten(&zero_col, &CoordSet::new(vec![3]).unwrap()),
            Err(Error::ShortenDimension {
                expected: 1,
                achieved: 2
            })
        ));
        assert_eq!(
            shorten(&c, &CoordSet::new(vec![1, 2]).unwrap())
                .unwrap()
                .k(),
            1
        );
    }

    #[test]
    fn juxtapose_zero_copies_is_identity() {
        let c = code(&["10121", "01112"]);
        assert_eq!(juxtapose(&c, &s2(), 0).unwrap(), c);
        assert!(juxtapose(&c, &TritMatrix::identity(3), 1).is_err());
    }

    #[test]
    fn juxtapose_with_simplex_keeps_gram() {
        let c = code(&["10121", "01112"]);
        let j = juxtapose(&c, &s2(), 3).unwrap();
        assert_eq!(j.n(), 5 + 12);
        assert_eq!(j.gram_report().gram, c.gram_report().gram);
        assert_eq!(j.min_distance().unwrap(), c.min_distance().unwrap() + 9);
    }

    #[test]
    fn scaling_examples() {
        let c = code(&["10121", "01112"]);
        assert_eq!(scale_columns(&c, &CoordSet::all(5), Trit::ONE).unwrap(), c);
        assert!(scale_columns(&c, &CoordSet::all(5), Trit::ZERO).is_err());
        let s = LinearCode::new(s2()).unwrap();
        let scaled = scale_columns(&s, &CoordSet::new(vec![1]).unwrap(), Trit::TWO).unwrap();
        assert_eq!(
            scaled.weight_enumerator().unwrap().terms(),
            vec![(0, 1), (3, 8)]
        );
    }

    fn arb_systematic(k_max: usize, r_max: usize) -> impl Strategy<Value = LinearCode> {
        (1..=k_max, 1..=r_max).prop_flat_map(|(k, r)| {
            proptest::collection::vec(0u8..3, k * r).prop_map(move |v| {
                let t: Vec<Trit> = v.into_iter().map(|x| Trit::new(x).unwrap()).collect();
                let a = TritMatrix::new(k, r, &t).unwrap();
                LinearCode::new(TritMatrix::identity(k).hstack(&a).unwrap()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn puncture_contract(c in arb_systematic(4, 6), pick in 0usize..64) {
            let j = 1 + pick % c.n();
            let s = CoordSet::new(vec![j]).unwrap();
            if let Ok(p) = puncture(&c, &s) {
                prop_assert_eq!(p.n(), c.n() - 1);
                prop_assert_eq!(p.k(), c.k());
                let (d0, d1) = (c.min_distance().unwrap(), p.min_distance().unwrap());
                prop_assert!(d1 <= d0 && d0 <= d1 + 1);
            }
        }

        #[test]
        fn shorten_contract(c in arb_systematic(5, 5), pick in 0usize..64) {
            prop_assume!(c.k() >= 2);
            let j = 1 + pick % c.n();
            let s = CoordSet::new(vec![j]).unwrap();
            if let Ok(sh) = shorten(&c, &s) {
                prop_assert_eq!(sh.k(), c.k() - 1);
                prop_assert_eq!(sh.n(), c.n() - 1);
                prop_assert!(sh.min_distance().unwrap() >= c.min_distance().unwrap());
            }
        }

        #[test]
        fn scaling_preserves_enumerator_and_lcd(c in arb_systematic(4, 6), mask in 0u32..4096) {
            let cols: Vec<usize> = (1..=c.n()).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let s = CoordSet::new(cols).unwrap();
            let scaled = scale_columns(&c, &s, Trit::TWO).unwrap();
            prop_assert_eq!(naive_weight_enumerator(scaled.generator()), c.weight_enumerator().unwrap());
            prop_assert_eq!(scaled.gram_report().gram_rank, c.gram_report().gram_rank);
        }

        #[test]
        fn enumerator_invariant_under_row_ops_and_permutation(c in arb_systematic(4, 5), seed in 0u64..1000) {
            let g = c.generator();
            let k = g.rows();
            // add row 0 to every other row scaled by a seed-dependent factor
            let mut rows = g.row_vectors().to_vec();
            for (i, row) in rows.iter_mut().enumerate().skip(1) {
                let f = Trit::from_int(((seed >> i) & 1) as i64 + 1);
                *row = row.add(&g.row(0).scale(f));
            }
            let mixed = TritMatrix::from_rows(g.cols(), rows).unwrap();
            let mut perm: Vec<usize> = (0..g.cols()).collect();
            perm.rotate_left((seed as usize) % g.cols());
            let permuted = mixed.select_columns(&perm).scale_columns(&[0], Trit::TWO);
            let c2 = LinearCode::new(permuted).unwrap();
            prop_assert_eq!(c2.k(), k);
            prop_assert_eq!(c2.weight_enumerator().unwrap(), c.weight_enumerator().unwrap());
            prop_assert_eq!(c2.is_lcd(), c.is_lcd());
        }
    }
}
