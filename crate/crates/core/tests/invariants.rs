use proptest::prelude::*;

use trilcd::code::naive_weight_enumerator;
use trilcd::registry::{format_code, parse_code};
use trilcd::{
    juxtapose, macwilliams_dual_enumerator, puncture, scale_columns, shorten, CoordSet, LinearCode,
    Trit, TritMatrix,
};

fn code(max_n: usize) -> impl Strategy<Value = LinearCode> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_flat_map(|(n, k)| proptest::collection::vec(proptest::collection::vec(0i64..3, n), k))
        .prop_filter_map("rank deficient", |rows| {
            LinearCode::new(TritMatrix::from_int_rows(&rows).ok()?).ok()
        })
}

fn coords(n: usize, max: usize) -> impl Strategy<Value = CoordSet> {
    proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), 1..=max.max(1))
        .prop_map(|c| CoordSet::new(c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lcd_is_symmetric_under_duality(c in code(9)) {
        let dual = c.dual().unwrap();
        prop_assert_eq!(c.is_lcd(), dual.is_lcd());
        prop_assert_eq!(dual.dual().unwrap().generator().same_row_space(c.generator()), true);
        let stacked = c.generator().vstack(dual.generator()).unwrap();
        prop_assert_eq!(stacked.rank() == c.n(), c.is_lcd());
    }

    #[test]
    fn hull_dimension_is_gram_corank(c in code(9)) {
        let report = c.gram_report();
        prop_assert_eq!(report.hull_dim, c.k() - report.gram_rank);
        prop_assert_eq!(report.is_lcd, report.hull_dim == 0);
    }

    #[test]
    fn macwilliams_matches_direct_enumeration(c in code(9)) {
        let w = naive_weight_enumerator(c.generator());
        let dual = c.dual().unwrap();
        let predicted = macwilliams_dual_enumerator(&w, c.n(), c.k()).unwrap();
        prop_assert_eq!(predicted, naive_weight_enumerator(dual.generator()));
        prop_assert_eq!(c.weight_enumerator().unwrap(), w);
    }

    #[test]
    fn text_form_round_trips(c in code(12)) {
        let text = format_code(c.generator());
        prop_assert_eq!(parse_code(&text).unwrap(), c);
    }

    #[test]
    fn scaling_by_two_keeps_gram(c in code(9), pick in any::<proptest::sample::Index>()) {
        let s = CoordSet::new(vec![pick.index(c.n()) + 1]).unwrap();
        let scaled = scale_columns(&c, &s, Trit::TWO).unwrap();
        prop_assert_eq!(scaled.generator().gram(), c.generator().gram());
        prop_assert_eq!(scaled.min_distance().unwrap(), c.min_distance().unwrap());
    }

    #[test]
    fn simplex_juxtaposition_keeps_gram(c in code(8).prop_filter("k in 2..=4", |c| (2..=4).contains(&c.k())), copies in 1usize..3) {
        let s = trilcd::constructions::simplex(c.k()).unwrap();
        let j = juxtapose(&c, &s, copies).unwrap();
        prop_assert_eq!(j.generator().gram(), c.generator().gram());
        let shift = copies * 3usize.pow(c.k() as u32 - 1);
        prop_assert_eq!(j.min_distance().unwrap(), c.min_distance().unwrap() + shift);
    }

    #[test]
    fn puncturing_costs_at_most_one_per_coordinate(c in code(9), raw in any::<proptest::sample::Index>()) {
        let n = c.n();
        let s = CoordSet::new(vec![raw.index(n) + 1]).unwrap();
        if let Ok(p) = puncture(&c, &s) {
            prop_assert_eq!((p.n(), p.k()), (n - 1, c.k()));
            prop_assert!(p.min_distance().unwrap() + 1 >= c.min_distance().unwrap());
        }
    }

    #[test]
    fn shortening_never_lowers_distance(
        (c, s) in code(9).prop_filter("k >= 2", |c| c.k() >= 2).prop_flat_map(|c| {
            let (n, k) = (c.n(), c.k());
            (Just(c), coords(n, k - 1))
        })
    ) {
        if let Ok(sh) = shorten(&c, &s) {
            prop_assert_eq!((sh.n(), sh.k()), (c.n() - s.len(), c.k() - s.len()));
            prop_assert!(sh.min_distance().unwrap() >= c.min_distance().unwrap());
        }
    }
}
