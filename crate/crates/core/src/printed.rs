//! Reference data as printed: weight polynomials and the bounds tables.
//!
//! Everything here is verbatim, including terms that are known to be wrong;
//! consumers decide how to treat inconsistent entries.

use serde::Serialize;

use crate::code::WeightEnumerator;
use crate::error::{Error, Result};

/// A printed weight polynomial and the registry code it describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrintedEnumerator {
    pub name: &'static str,
    pub code_id: &'static str,
    pub n: usize,
    pub k: usize,
    pub text: &'static str,
}

/// Why a printed polynomial cannot be compared term by term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "issue", rename_all = "snake_case")]
pub enum PrintedIssue {
    /// The same exponent appears twice; identical repeats are dropped.
    DuplicateTerm { exponent: usize },
    /// Coefficients do not add up to `3^k`.
    WrongSum { sum: u128, expected: u128 },
}

impl PrintedEnumerator {
    /// Terms in printed order, duplicates kept.
    pub fn terms(&self) -> Result<Vec<(usize, u64)>> {
        parse_polynomial(self.text)
    }

    /// Inconsistencies in the printed text; empty when the polynomial is a
    /// valid enumerator shape for an `[n, k]` code.
    pub fn issues(&self) -> Result<Vec<PrintedIssue>> {
        let terms = self.terms()?;
        let mut issues = Vec::new();
        let mut seen: Vec<(usize, u64)> = Vec::new();
        for &(e, c) in &terms {
            if seen.iter().any(|&(e2, _)| e2 == e) {
                issues.push(PrintedIssue::DuplicateTerm { exponent: e });
            } else {
                seen.push((e, c));
            }
        }
        let sum: u128 = seen.iter().map(|&(_, c)| c as u128).sum();
        let expected = 3u128.pow(self.k as u32);
        if sum != expected {
            issues.push(PrintedIssue::WrongSum { sum, expected });
        }
        Ok(issues)
    }

    /// The polynomial with exact repeats removed.
    pub fn enumerator(&self) -> Result<WeightEnumerator> {
        let mut seen: Vec<(usize, u64)> = Vec::new();
        for (e, c) in self.terms()? {
            match seen.iter().find(|&&(e2, _)| e2 == e) {
                Some(&(_, c2)) if c2 != c => {
                    return Err(Error::Parse(format!(
                        "{}: conflicting coefficients for z^{e}",
                        self.name
                    )))
                }
                Some(_) => {}
                None => seen.push((e, c)),
            }
        }
        if seen.iter().any(|&(e, _)| e > self.n) {
            return Err(Error::Parse(format!(
                "{}: exponent exceeds length {}",
                self.name, self.n
            )));
        }
        Ok(WeightEnumerator::from_terms(self.n, &seen))
    }

    /// Smallest positive exponent.
    pub fn min_distance(&self) -> Result<usize> {
        self.terms()?
            .into_iter()
            .filter(|&(e, c)| e > 0 && c > 0)
            .map(|(e, _)| e)
            .min()
            .ok_or_else(|| Error::Parse(format!("{}: no nonzero terms", self.name)))
    }
}

/// Parses `1+6z^{2}+8z^3+z` style polynomials into `(exponent, coefficient)`.
pub fn parse_polynomial(text: &str) -> Result<Vec<(usize, u64)>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |t: &str| Error::Parse(format!("bad polynomial term {t:?}"));
    compact
        .split('+')
        .map(|term| {
            let (coef, exp) = match term.split_once('z') {
                None => (term, 0),
                Some((c, rest)) => {
                    let e = if rest.is_empty() {
                        1
                    } else {
                        let inner = rest.strip_prefix('^').ok_or_else(|| bad(term))?;
                        let inner = inner.trim_start_matches('{').trim_end_matches('}');
                        inner.parse().map_err(|_| bad(term))?
                    };
                    (c, e)
                }
            };
            let c = if coef.is_empty() {
                1
            } else {
                coef.parse().map_err(|_| bad(term))?
            };
            Ok((exp, c))
        })
        .collect()
}

macro_rules! printed {
    ($name:literal, $id:literal, $n:literal, $k:literal, $text:literal) => {
        PrintedEnumerator {
            name: $name,
            code_id: $id,
            n: $n,
            k: $k,
            text: $text,
        }
    };
}

/// Every printed weight polynomial.
pub const PRINTED_ENUMERATORS: &[PrintedEnumerator] = &[
    printed!("W_{3,5}", "dim3_n5", 5, 3, "1+6z^{2}+8z^{3}+6z^{4}+6z^{5}"),
    printed!("W_{3,6}", "dim3_n6", 6, 3, "1+6z^{3}+12z^{4}+6z^{5}+2z^{6}"),
    printed!("W_{3,7}", "dim3_n7", 7, 3, "1+12z^{4}+6z^{5}+8z^{6}"),
    printed!("W_{3,8}", "dim3_n8", 8, 3, "1+2z^{4}+12z^{5}+8z^{6}+4z^{7}"),
    printed!("W_{3,9}", "dim3_n9", 9, 3, "1+6z^{5}+8z^{6}+6z^{5}+12z^{7}"),
    printed!("W_{3,10}", "dim3_n10", 10, 3, "1+8z^{6}+12z^{7}+6z^{8}"),
    printed!("W_{3,11}", "dim3_n11", 11, 3, "1+6z^{6}+4z^{7}+12z^{8}+2z^{9}+2z^{10}"),
    printed!("W_{3,12}", "dim3_n12", 12, 3, "1+10z^{7}+4z^{8}+8z^{9}+2z^{10}+2z^{11}"),
    printed!("W_{3,13}", "dim3_n13", 13, 3, "1+12z^{8}+6z^{9}+6z^{10}+2z^{12}"),
    printed!("W_{3,14}", "dim3_n14", 14, 3, "1+4z^{8}+8z^{9}+10z^{10}+2z^{11}+2z^{13}"),
    printed!("W_{3,15}", "dim3_n15", 15, 3, "1+8z^{9}+4z^{10}+12z^{11}+2z^{13}"),
    printed!("W_{3,16}", "dim3_n16", 16, 3, "1+10z^{10}+6z^{11}+8z^{12}+2z^{13}"),
    printed!("W_{3,17}", "dim3_n17", 17, 3, "1+12z^{11}+8z^{12}+8z^{12}+6z^{13}"),
    printed!("W_{5,14}", "C_14_5_7", 14, 5, "1+34z^{7}+56z^{8}+46z^{9}+36z^{10}+34z^{11}+34z^{12}+2z^{13}"),
    printed!("W_{4,13}", "C_13_4_7", 13, 4, "1+16z^{7}+22z^{8}+20z^{9}+12z^{10}+8z^{11}+2z^{13}"),
    printed!("W_{5,13}", "C_13_5_6", 13, 5, "1+18z^{6}+44z^{7}+56z^{8}+52z^{9}+28z^{10}+34z^{11}+10z^{12}"),
    printed!(
        "W_{11,20}",
        "C_20_11_6",
        20,
        11,
        "1+314z^{6}+696z^{7}+1982z^{8}+4996z^{9}+10316z^{10}+17520z^{11}+25260z^{12}+30594z^{13}+30804z^{14}+25354z^{15}+16968z^{16}+8422z^{17}+3124z^{18}+718z^{19}+78z^{20}"
    ),
    printed!(
        "W_{10,19}",
        "C_19_10_6",
        19,
        10,
        "1+204z^{6}+454z^{7}+1150z^{8}+2574z^{9}+4988z^{10}+7746z^{11}+9822z^{12}+10734z^{13}+9462z^{14}+6588z^{15}+3548z^{16}+1406z^{17}+332z^{18}+40z^{19}"
    ),
    printed!(
        "W_{9,18}",
        "C_18_9_6",
        18,
        9,
        "1+136z^{6}+264z^{7}+622z^{8}+1390z^{9}+2190z^{10}+3186z^{11}+3606z^{12}+3414z^{13}+2670z^{14}+1406z^{15}+612z^{16}+164z^{17}+22z^{18}"
    ),
    printed!(
        "W_{8,17}",
        "C_17_8_6",
        17,
        8,
        "1+128z^{6}+208z^{7}+502z^{8}+876z^{9}+1252z^{10}+1354z^{11}+1162z^{12}+68z^{13}+304z^{14}+74z^{15}+12z^{16}"
    ),
    printed!(
        "W_{10,20}",
        "C_20_10_6",
        20,
        10,
        "1+324z^{6}+524z^{7}+1648z^{8}+3892z^{9}+6798z^{10}+9906z^{11}+11610z^{12}+10698z^{13}+7698z^{14}+3978z^{15}+1582z^{16}+350z^{17}+40z^{18}"
    ),
    printed!(
        "W_{9,19}",
        "C_19_9_6",
        19,
        9,
        "1+212z^{6}+332z^{7}+930z^{8}+1886z^{9}+3012z^{10}+3990z^{11}+3768z^{12}+2970z^{13}+1704z^{14}+694z^{15}+166z^{16}+18z^{17}"
    ),
    printed!(
        "W_{8,18}",
        "C_18_8_6",
        18,
        8,
        "1+132z^{6}+196z^{7}+514z^{8}+870z^{9}+1252z^{10}+1366z^{11}+1144z^{12}+706z^{13}+280z^{14}+94z^{15}+6z^{16}"
    ),
    printed!(
        "W_{7,17}",
        "C_17_7_6",
        17,
        7,
        "1+84z^{6}+110z^{7}+250z^{8}+380z^{9}+488z^{10}+424z^{11}+258z^{12}+158z^{13}+28z^{14}+6z^{15}"
    ),
    printed!(
        "W_{11,19}",
        "C_19_11_6",
        19,
        11,
        "1+468z^{6}+840z^{7}+2882z^{8}+7284z^{9}+14408z^{10}+23646z^{11}+31296z^{12}+34140z^{13}+28896z^{14}+19248z^{15}+9822z^{16}+3382z^{17}+752z^{18}+82z^{19}"
    ),
    printed!(
        "W_{10,18}",
        "C_18_10_6",
        18,
        10,
        "1+316z^{6}+538z^{7}+1680z^{8}+3812z^{9}+6810z^{10}+9972z^{11}+11574z^{12}+10740z^{13}+757z^{14}+4106z^{15}+1514z^{16}+372z^{17}+36z^{18}"
    ),
    printed!(
        "W_{9,17}",
        "C_17_9_6",
        17,
        9,
        "1+212z^{6}+328z^{7}+928z^{8}+1910z^{9}+3012z^{10}+3948z^{11}+3774z^{12}+2982z^{13}+1740z^{14}+664z^{15}+158z^{16}+26z^{17}"
    ),
    printed!(
        "W_{6,18}",
        "C_18_6_8",
        18,
        6,
        "1+18z^{8}+48z^{9}+108z^{10}+150z^{11}+106z^{12}+120z^{13}+84z^{14}+70z^{15}+24z^{16}"
    ),
    printed!("W_{5,17}", "C_17_5_8", 17, 5, "1+8z^{8}+28z^{9}+46z^{10}+58z^{11}+40z^{12}+24z^{13}+24z^{14}+12z^{15}+2z^{16}"),
    printed!("W_{4,16}", "C_16_4_9", 16, 4, "1+18z^{9}+18z^{10}+22z^{11}+12z^{12}+6z^{13}+2z^{14}+2z^{15}"),
    printed!("W_{4,21}", "C_21_4_12", 21, 4, "1+12z^{12}+18z^{13}+20z^{14}+18z^{15}+4z^{16}+4z^{17}+2z^{18}+2z^{19}"),
    printed!("W_{4,20}", "C_20_4_11", 20, 4, "1+6z^{11}+18z^{12}+22z^{13}+14z^{14}+12z^{15}+2z^{16}+4z^{17}+2z^{18}"),
    printed!("W_{4,19}", "C_19_4_11", 19, 4, "1+16z^{11}+24z^{12}+22z^{13}+6z^{14}+6z^{15}+2z^{16}+2z^{17}+2z^{18}"),
    printed!("W_{4,18}", "C_18_4_10", 18, 4, "1+10z^{10}+18z^{11}+28z^{12}+12z^{13}+6z^{14}+2z^{15}+2z^{16}+2z^{18}"),
    printed!("W_{4,17}", "C_17_4_9", 17, 4, "1+4z^{9}+20z^{10}+24z^{11}+14z^{12}+10z^{13}+4z^{14}+2z^{15}+2z^{17}"),
    printed!("W_{4,15}", "C_15_4_8", 15, 4, "1+12z^{8}+20z^{9}+20z^{10}+12z^{11}+10z^{12}+4z^{13}+2z^{15}"),
    printed!(
        "W_{6,17}",
        "C_17_6_8",
        17,
        6,
        "1+52z^{8}+82z^{9}+124z^{10}+136z^{11}+110z^{12}+124z^{13}+64z^{14}+32z^{15}+4z^{16}"
    ),
    printed!(
        "W_{6,16}",
        "C_16_6_7",
        16,
        6,
        "1+24z^{7}+76z^{8}+102z^{9}+140z^{10}+136z^{11}+118z^{12}+86z^{13}+40z^{14}+4z^{15}+2z^{16}"
    ),
    printed!("W_{5,16}", "C_16_5_8", 16, 5, "1+20z^{8}+44z^{9}+64z^{10}+42z^{11}+28z^{12}+26z^{13}+10z^{14}+8z^{15}"),
    printed!("W_{5,15}", "C_15_5_7", 15, 5, "1+6z^{7}+46z^{8}+52z^{9}+50z^{10}+36z^{11}+28z^{12}+16z^{13}+8z^{14}"),
    printed!(
        "W_{5,17}",
        "C_17_5_9",
        17,
        5,
        "1+34z^{9}+60z^{10}+48z^{11}+36z^{12}+28z^{13}+22z^{14}+10z^{15}+2z^{16}+2z^{17}"
    ),
    printed!(
        "W_{5,18}",
        "C_18_5_9",
        18,
        5,
        "1+20z^{9}+36z^{10}+48z^{11}+36z^{12}+28z^{13}+22z^{14}+10z^{15}+2z^{16}+2z^{17}"
    ),
    printed!(
        "W_{5,19}",
        "C_19_5_10_fit",
        19,
        5,
        "1+34z^{10}+44z^{11}+46z^{12}+40z^{13}+24z^{14}+32z^{15}+14z^{16}+4z^{17}+2z^{18}+2z^{19}"
    ),
    printed!("W_{5,20}", "C_20_5_11", 20, 5, "1+48z^{11}+44z^{12}+50z^{13}+32z^{14}+28z^{15}+22z^{16}+10z^{17}+8z^{18}"),
    printed!("W_{9,20}", "C_20_9_8_printed", 20, 9, "1+390z^{8}+520z^{9}+3840z^{11}+2880z^{12}+64z^{14}+32z^{15}+4z^{16}"),
];

/// Final bounds table, one row per length: entries for `k = 1, 2, ...`.
/// A range `a-b` bounds `d_LCD` from both sides.
pub const TABLE_BOUNDS_MAIN: &str = "\
3: 2
4: 4 2
5: 5 3 2 2
6: 5 4 3 2 1
7: 7 4 4 3 2 2
8: 8 5 4 4 3 2 2
9: 8 6 5 4 3 3 2 1
10: 10 7 6 5 4 3 3 2 2
11: 11 7 6 6 5 4 3 2 2 2
12: 11 8 7 6 6 5 4 3 2 2 1
13: 13 9 8 7 6 6 5 4 3 2 2 2
14: 13 10 8 8 7 6 6 5 4 3 2 2 2
15: 15 10 9 8 7 7 6 5 4 4 3 2 2 1
16: 15 11 10 9 8 7 6 6 5 4 4 3 2 2 2
17: 17 12 11 9 9 8 6-7 6-7 6-7 5 4 3 3 2 2 2
18: 17 13 11 10 9 8-9 7-8 6-7 6-7 6 5 4 3 3 2 2 1
19: 19 13 12 11 10 8-9 8-9 7-8 6-7 6 6 5 4 3 3 2 2 2
20: 19 14 13 11 11 9-10 8-9 8-9 7-8 6 6 6 5 4 3 3 2 2 2
";

/// One cell of a printed table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrintedCell {
    pub n: usize,
    pub k: usize,
    pub lower: usize,
    pub upper: usize,
}

impl PrintedCell {
    pub fn is_range(&self) -> bool {
        self.lower != self.upper
    }
}

/// Parses `TABLE_BOUNDS_MAIN`-style text.
pub fn parse_bounds_table(text: &str) -> Result<Vec<PrintedCell>> {
    let mut cells = Vec::new();
    for (i, line) in text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
    {
        let err = |m: &str| Error::Format {
            line: i + 1,
            message: m.to_string(),
        };
        let (n, rest) = line.split_once(':').ok_or_else(|| err("missing ':'"))?;
        let n: usize = n.trim().parse().map_err(|_| err("bad length"))?;
        for (j, tok) in rest.split_whitespace().enumerate() {
            let (lo, hi) = match tok.split_once('-') {
                Some((a, b)) => (a.parse(), b.parse()),
                None => (tok.parse(), tok.parse()),
            };
            let (lower, upper) = (lo.map_err(|_| err(tok))?, hi.map_err(|_| err(tok))?);
            if lower > upper || j + 1 >= n {
                return Err(err(tok));
            }
            cells.push(PrintedCell {
                n,
                k: j + 1,
                lower,
                upper,
            });
        }
    }
    Ok(cells)
}

pub fn table_bounds_main() -> Vec<PrintedCell> {
    parse_bounds_table(TABLE_BOUNDS_MAIN).expect("embedded table parses")
}

/// Distance of optimal (not necessarily LCD) `[n, 2]` codes, `n = 4s + r`:
/// `3s, 3s, 3s + 1, 3s + 2`.
pub fn table_dim2_optimal(n: usize) -> usize {
    let s = n / 4;
    3 * s + [0, 0, 1, 2][n % 4]
}

/// Statements made in the text that disagree with the tables; each entry
/// is `(n, k, claimed d, note)`.
pub const TEXT_CLAIMS: &[(usize, usize, usize, &str)] = &[
    (10, 2, 6, "closed form floor(2n/3) for n = 2,3 mod 4 gives 6; the table gives 7"),
    (14, 2, 9, "closed form floor(2n/3) for n = 2,3 mod 4 gives 9; the table gives 10"),
    (18, 2, 12, "closed form floor(2n/3) for n = 2,3 mod 4 gives 12; the table gives 13"),
    (19, 2, 12, "closed form floor(2n/3) for n = 2,3 mod 4 gives 12; the table gives 13"),
    (17, 3, 10, "the n = 13s+4 row of the [n,3] table gives 9s+1 = 10; the construction and this table give 11"),
    (17, 7, 6, "text states d_LCD = 6 exactly; the table gives the range 6-7"),
    (17, 8, 6, "text states d_LCD = 6 exactly; the table gives the range 6-7"),
    (17, 9, 6, "text states d_LCD = 6 exactly; the table gives the range 6-7"),
    (18, 8, 6, "text states d_LCD = 6 exactly; the table gives the range 6-7"),
    (18, 9, 6, "text states d_LCD = 6 exactly; the table gives the range 6-7"),
    (19, 9, 6, "text states d_LCD = 6 exactly; the table gives the range 6-7"),
    (19, 7, 8, "text states d_LCD = 8 exactly; the table gives the range 8-9"),
    (20, 7, 8, "text states d_LCD = 8 exactly; the table gives the range 8-9"),
    (20, 8, 8, "text states d_LCD = 8 exactly; the table gives the range 8-9"),
    (15, 4, 13, "closed form ceil(9n/11) gives 13 at n = 15; the table gives 8 (ceil(9n/17) fits n = 15..18)"),
    (16, 4, 14, "closed form ceil(9n/11) gives 14 at n = 16; the table gives 9"),
    (17, 4, 14, "closed form ceil(9n/11) gives 14 at n = 17; the table gives 9"),
    (18, 4, 15, "closed form ceil(9n/11) gives 15 at n = 18; the table gives 10"),
];

/// Cells of the final table contradicted by the dimension-one theorem
/// (`d_LCD(n, 1)` is `n`, or `n - 1` when `3 | n`) or by exhaustive
/// classification; each entry is `(n, k, corrected d, note)`.
pub const TABLE_TYPOS: &[(usize, usize, usize, &str)] = &[
    (14, 1, 14, "printed 13; the all-ones [14,1,14] code is LCD since 14 is not divisible by 3"),
    (15, 1, 14, "printed 15; every weight-15 vector is self-orthogonal, so d_LCD(15,1) = 14"),
    (16, 1, 16, "printed 15; the all-ones [16,1,16] code is LCD since 16 is not divisible by 3"),
    (20, 1, 20, "printed 19; the all-ones [20,1,20] code is LCD since 20 is not divisible by 3"),
    (12, 5, 5, "printed 6; none of the 970200 systematic [12,5,6] generators up to monomial equivalence is LCD"),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_parsing() {
        assert_eq!(
            parse_polynomial("1+6z^{2}+z^3+z").unwrap(),
            vec![(0, 1), (2, 6), (3, 1), (1, 1)]
        );
        assert!(parse_polynomial("1+6y^{2}").is_err());
        assert!(parse_polynomial("1+z^{x}").is_err());
    }

    #[test]
    fn printed_sums() {
        let flagged: Vec<&str> = PRINTED_ENUMERATORS
            .iter()
            .filter(|p| !p.issues().unwrap().is_empty())
            .map(|p| p.name)
            .collect();
        assert_eq!(
            flagged,
            [
                "W_{3,9}",
                "W_{3,17}",
                "W_{8,17}",
                "W_{10,18}",
                "W_{5,18}",
                "W_{9,20}"
            ]
        );
    }

    #[test]
    fn duplicate_terms_collapse() {
        let w39 = PRINTED_ENUMERATORS
            .iter()
            .find(|p| p.name == "W_{3,9}")
            .unwrap();
        assert_eq!(
            w39.issues().unwrap(),
            vec![PrintedIssue::DuplicateTerm { exponent: 5 }]
        );
        assert_eq!(w39.enumerator().unwrap().total(), 27);
    }

    #[test]
    fn table_shape() {
        let cells = table_bounds_main();
        assert_eq!(cells.len(), 1 + 2 + (5..=20).map(|n| n - 1).sum::<usize>());
        let c = cells.iter().find(|c| (c.n, c.k) == (17, 7)).unwrap();
        assert_eq!((c.lower, c.upper), (6, 7));
        let c = cells.iter().find(|c| (c.n, c.k) == (12, 11)).unwrap();
        assert_eq!((c.lower, c.upper), (1, 1));
        assert!(parse_bounds_table("3: 2 2 2").is_err());
        assert!(parse_bounds_table("5: 3-2").is_err());
    }

    #[test]
    fn dim2_optimal_table() {
        assert_eq!(table_dim2_optimal(4), 3);
        assert_eq!(table_dim2_optimal(7), 5);
    }
}
