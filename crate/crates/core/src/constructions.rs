//! Concrete generator matrices, infinite families and derivation recipes.

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf3::{Trit, TritMatrix, TritVector};
use crate::transforms::{juxtapose, puncture, shorten, CoordSet};

/// The simplex generator `S_k`, built by the recursion
/// `S_k = [S_{k-1}, 0, S_{k-1}, S_{k-1}; 0..0, 1, 1..1, 2..2]`.
pub fn simplex(k: usize) -> Result<TritMatrix> {
    if !(2..=8).contains(&k) {
        return Err(Error::OutOfRange(format!(
            "simplex dimension must be in 2..=8, got {k}"
        )));
    }
    let mut s = TritMatrix::identity(1);
    for level in 2..=k {
        let m = s.cols();
        let zero_col = TritMatrix::zeros(level - 1, 1);
        let top = s.hstack(&zero_col)?.hstack(&s)?.hstack(&s)?;
        let mut bottom = vec![Trit::ZERO; m];
        bottom.push(Trit::ONE);
        bottom.extend(std::iter::repeat_n(Trit::ONE, m));
        bottom.extend(std::iter::repeat_n(Trit::TWO, m));
        let bottom = TritMatrix::from_rows(3 * m + 1, vec![TritVector::from_trits(&bottom)])?;
        s = top.vstack(&bottom)?;
    }
    Ok(s)
}

/// Column `i` (1-based) of `S_k`: `alpha_i` for `k = 2`, `beta_i` for `k = 3`.
pub fn simplex_column(k: usize, i: usize) -> Result<TritVector> {
    let s = simplex(k)?;
    if i == 0 || i > s.cols() {
        return Err(Error::OutOfRange(format!("S_{k} has no column {i}")));
    }
    Ok(s.column(i - 1))
}

fn columns(k: usize, picks: &[(usize, u8)]) -> Result<TritMatrix> {
    let s = simplex(k)?;
    let cols: Vec<Vec<Trit>> = picks
        .iter()
        .map(|&(i, f)| {
            s.column(i - 1)
                .scale(Trit::new(f).expect("unit"))
                .to_trits()
        })
        .collect();
    let data: Vec<Trit> = (0..k)
        .flat_map(|r| cols.iter().map(move |c| c[r]))
        .collect();
    TritMatrix::new(k, picks.len(), &data)
}

/// `d_LCD(n, 1)`: `n`, or `n - 1` when `3 | n`.
pub fn dim1_distance(n: usize) -> usize {
    if n.is_multiple_of(3) {
        n - 1
    } else {
        n
    }
}

/// The `[n, 1]` LCD code of largest distance: all-ones, with the first
/// coordinate zeroed when `3 | n` so the single Gram entry is nonzero.
pub fn dim1_code(n: usize) -> Result<LinearCode> {
    if n < 2 {
        return Err(Error::OutOfRange(format!(
            "dim1_code needs n >= 2, got {n}"
        )));
    }
    let mut row = vec![1i64; n];
    if n.is_multiple_of(3) {
        row[0] = 0;
    }
    LinearCode::new(TritMatrix::from_int_rows(&[row])?)
}

/// `d_LCD(n, n - 1)`: 2, or 1 when `3 | n`.
pub fn codim1_distance(n: usize) -> usize {
    if n.is_multiple_of(3) {
        1
    } else {
        2
    }
}

/// `[I_{n-1} | b]` with `b` all-ones, or all-ones but for a final zero when
/// `3 | n`.
pub fn codim1_code(n: usize) -> Result<LinearCode> {
    if n < 3 {
        return Err(Error::OutOfRange(format!(
            "codim1_code needs n >= 3, got {n}"
        )));
    }
    let mut b = vec![Trit::ONE; n - 1];
    if n.is_multiple_of(3) {
        b[n - 2] = Trit::ZERO;
    }
    let g = TritMatrix::identity(n - 1).hstack(&TritMatrix::new(n - 1, 1, &b)?)?;
    LinearCode::new(g)
}

/// `[I_{n-2} | B]` where `B` is the first `(n-2) x 2` block in row-major
/// lexicographic order giving an LCD code of distance 2.
///
/// A zero row of `B` gives a weight-1 codeword, so only blocks whose rows
/// are all nonzero are visited; the order among those is unchanged.
pub fn codim2_code(n: usize) -> Result<LinearCode> {
    if n < 4 {
        return Err(Error::OutOfRange(format!(
            "codim2_code needs n >= 4, got {n}"
        )));
    }
    let k = n - 2;
    // nonzero pairs in lexicographic order: 01, 02, 10, 11, ..., 22
    let pairs: Vec<[u8; 2]> = (1..9u8).map(|v| [v / 3, v % 3]).collect();
    let mut idx = vec![0usize; k];
    loop {
        let data: Vec<Trit> = idx
            .iter()
            .flat_map(|&i| pairs[i].map(|v| Trit::new(v).expect("digit")))
            .collect();
        let g = TritMatrix::identity(k).hstack(&TritMatrix::new(k, 2, &data)?)?;
        let code = LinearCode::new(g)?;
        if code.is_lcd() && code.min_distance()? == 2 {
            return Ok(code);
        }
        // advance the last row fastest
        let mut pos = k;
        loop {
            if pos == 0 {
                return Err(Error::OutOfRange(format!(
                    "no LCD [{n},{k},2] code of the searched form"
                )));
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < pairs.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Seeds for the two-dimensional family at lengths 4, 5, 6, 7; each is the
/// first optimal systematic witness of the exhaustive sweep.
const DIM2_SEEDS: [[&str; 2]; 4] = [
    ["1001", "0110"],
    ["10011", "01101"],
    ["100111", "011012"],
    ["1000111", "0101012"],
];

/// `d_LCD(n, 2)` for `n = 4s + r`: `3s - 1, 3s, 3s + 1, 3s + 1` for
/// `r = 0, 1, 2, 3`.
pub fn dim2_distance(n: usize) -> usize {
    let s = n / 4;
    match n % 4 {
        0 => 3 * s - 1,
        1 => 3 * s,
        _ => 3 * s + 1,
    }
}

pub fn dim2_seed(len: usize) -> Result<TritMatrix> {
    if !(4..=7).contains(&len) {
        return Err(Error::OutOfRange(format!(
            "dim2 seeds have length 4..=7, got {len}"
        )));
    }
    TritMatrix::from_digit_rows(&DIM2_SEEDS[len - 4])
}

/// Seed of matching residue padded with copies of `S_2`.
pub fn dim2_code(n: usize) -> Result<LinearCode> {
    if n < 4 {
        return Err(Error::OutOfRange(format!(
            "dim2_code needs n >= 4, got {n}"
        )));
    }
    let len = 4 + n % 4;
    let base = LinearCode::new(dim2_seed(len)?)?;
    juxtapose(&base, &simplex(2)?, (n - len) / 4)
}

/// Extra columns (after `I_3 = (beta_1, beta_2, beta_5)`) of the base
/// generators `G_{3,n}`, as `(beta index, scale)`.
fn dim3_extra(n: usize) -> &'static [(usize, u8)] {
    match n {
        3 => &[],
        4 => &[(8, 2)],
        5 => &[(5, 1), (13, 1)],
        6 => &[(9, 1), (11, 1), (13, 1)],
        7 => &[(4, 1), (7, 1), (10, 1), (13, 1)],
        8 => &[(7, 1), (8, 1), (10, 1), (11, 1), (12, 1)],
        9 => &[(3, 1), (4, 1), (6, 1), (7, 1), (11, 1), (13, 1)],
        10 => &[(3, 1), (4, 1), (6, 1), (7, 1), (11, 1), (13, 1), (9, 1)],
        11 => &[
            (2, 1),
            (5, 1),
            (6, 1),
            (7, 1),
            (8, 1),
            (9, 1),
            (10, 1),
            (12, 1),
        ],
        12 => &[
            (1, 1),
            (2, 1),
            (4, 1),
            (5, 1),
            (7, 1),
            (9, 1),
            (10, 1),
            (12, 1),
            (13, 1),
        ],
        13 => &[
            (1, 1),
            (2, 1),
            (4, 1),
            (5, 1),
            (7, 1),
            (8, 1),
            (9, 1),
            (10, 1),
            (12, 1),
            (13, 1),
        ],
        14 => &[
            (1, 1),
            (2, 1),
            (4, 1),
            (5, 1),
            (7, 1),
            (8, 1),
            (9, 1),
            (10, 1),
            (10, 1),
            (11, 1),
            (12, 1),
        ],
        15 => &[
            (2, 1),
            (3, 1),
            (4, 1),
            (4, 1),
            (5, 1),
            (6, 1),
            (7, 1),
            (8, 1),
            (10, 1),
            (10, 1),
            (11, 1),
            (13, 1),
        ],
        16 => &[
            (1, 1),
            (2, 1),
            (3, 1),
            (4, 1),
            (5, 1),
            (6, 1),
            (7, 1),
            (9, 1),
            (10, 1),
            (11, 1),
            (12, 1),
            (13, 1),
            (13, 1),
        ],
        17 => &[
            (1, 1),
            (2, 1),
            (3, 1),
            (4, 1),
            (5, 1),
            (6, 1),
            (7, 1),
            (8, 1),
            (9, 1),
            (10, 1),
            (11, 1),
            (12, 1),
            (13, 1),
            (13, 1),
        ],
        _ => unreachable!("dim3 bases cover 3..=17"),
    }
}

/// Base generator `G_{3,n}` for `3 <= n <= 17`.
pub fn dim3_base(n: usize) -> Result<TritMatrix> {
    if !(3..=17).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "dim3 bases have length 3..=17, got {n}"
        )));
    }
    let mut picks = vec![(1, 1), (2, 1), (5, 1)];
    picks.extend_from_slice(dim3_extra(n));
    columns(3, &picks)
}

const DIM3_SMALL: [usize; 11] = [1, 2, 2, 3, 4, 4, 5, 6, 6, 7, 8];
const DIM3_OFFSET: [isize; 13] = [-1, -1, 0, 1, 2, 2, 3, 4, 4, 5, 6, 6, 7];

/// Distance of the three-dimensional family; for `n = 13s + t >= 14` it is
/// `9s + offset(t)`.
pub fn dim3_distance(n: usize) -> usize {
    if n <= 13 {
        return DIM3_SMALL[n - 3];
    }
    (9 * (n / 13) as isize + DIM3_OFFSET[n % 13]) as usize
}

/// `G_{3,n}` directly for `n <= 17`; beyond that a base of length
/// `13 + t` (`t <= 4`) or `t` (`5 <= t <= 12`) padded with copies of `S_3`.
pub fn dim3_code(n: usize) -> Result<LinearCode> {
    if n < 3 {
        return Err(Error::OutOfRange(format!(
            "dim3_code needs n >= 3, got {n}"
        )));
    }
    if n <= 17 {
        return LinearCode::new(dim3_base(n)?);
    }
    let (s, t) = (n / 13, n % 13);
    let (base, copies) = if t <= 4 { (13 + t, s - 1) } else { (t, s) };
    juxtapose(&LinearCode::new(dim3_base(base)?)?, &simplex(3)?, copies)
}

/// Matrices printed in the constructions, verbatim, plus one derived block.
const NAMED: &[(&str, &[&str])] = &[
    (
        "A_11_9",
        &[
            "110011110",
            "001002211",
            "021110020",
            "002112002",
            "012202201",
            "022200022",
            "011210100",
            "001122010",
            "000111101",
            "021022112",
            "011121212",
        ],
    ),
    (
        "A_13_10",
        &[
            "0000101111",
            "0011000211",
            "0010210121",
            "0010022110",
            "0002001212",
            "0022120020",
            "0001121001",
            "0011201202",
            "0021200021",
            "0012220100",
            "0002111010",
            "0000122102",
            "0022011111",
        ],
    ),
    (
        "A_4_17",
        &[
            "12210021201022200",
            "02110102002112112",
            "12121001101200111",
            "01011222110020101",
        ],
    ),
    (
        "A_6_11",
        &[
            "01001212021",
            "11121120202",
            "11020021210",
            "12220112111",
            "02211222202",
            "11202010022",
        ],
    ),
    (
        "A_5_12",
        &[
            "220201202221",
            "212111120002",
            "012001122210",
            "212022012122",
            "122221000112",
        ],
    ),
    (
        "G_A_13",
        &[
            "2222222200000",
            "1222002120012",
            "2210021021020",
            "1122221121222",
            "2001200201112",
        ],
    ),
    ("B_5_2", &["10", "21", "20", "20", "00"]),
    (
        "A_5_15",
        &[
            "102222112021010",
            "010220212202201",
            "021121211111211",
            "121100122020022",
            "121202201002221",
        ],
    ),
    (
        "A_9_11",
        &[
            "10110110202",
            "21021110201",
            "12122012112",
            "21222000122",
            "22102002220",
            "02210200222",
            "20201122200",
            "02020112220",
            "00202011222",
        ],
    ),
    // B_5_2 with three entries changed; reproduces the printed enumerator of [19,5,10]
    ("B_5_2_fit", &["10", "11", "20", "00", "10"]),
];

/// SHA-256 content hashes locking the transcriptions above.
pub const NAMED_HASHES: &[(&str, &str)] = &[
    (
        "A_11_9",
        "a942a5088859302454dd002c19449ccc056f19756d4ca7386ca239066ef00e0f",
    ),
    (
        "A_13_10",
        "d6a3359a3f95c3355ea64e36cfc7cf36961683abe324f54a197225367844318b",
    ),
    (
        "A_4_17",
        "90459be2319f24b9daacff4c620f0d6446ada931a4a344aae03da77a76a37d32",
    ),
    (
        "A_6_11",
        "d03b317aecf267c9b9470e204c005d1fbeb0a0217b21ac556620a3fe8bef3343",
    ),
    (
        "A_5_12",
        "e3a5e28e33291f4fe0accef1d0b7e9af508679c2504631a4b9f32e312a3bdf9a",
    ),
    (
        "G_A_13",
        "88feb5e03f74cc28d91d3bc6bd3192a85832c19cf9e6a1d47a20c47d9ac8cc1d",
    ),
    (
        "B_5_2",
        "dd4f40804570935f5f1dec1094985625bb48e494c32e7cb38e8dfde15e9130f7",
    ),
    (
        "A_5_15",
        "9caf13d223a96e82206d35dc97edf1abeadc991f3e145f789776cf9be15829bd",
    ),
    (
        "A_9_11",
        "900143ff5a64ec07f06f747cefb61c6cf7bcad26decaf73c1200bb8263876b47",
    ),
    (
        "B_5_2_fit",
        "57b9e1efb4855f396b5c3e57aa9645c43d05d114cae74f7884194670e896d079",
    ),
];

pub fn named_ids() -> impl Iterator<Item = &'static str> {
    NAMED.iter().map(|(id, _)| *id)
}

pub fn named_matrix(id: &str) -> Result<TritMatrix> {
    let (_, rows) = NAMED
        .iter()
        .find(|(name, _)| *name == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))?;
    TritMatrix::from_digit_rows(rows)
}

/// Expected content hash of a named matrix.
pub fn named_hash(id: &str) -> Result<&'static str> {
    NAMED_HASHES
        .iter()
        .find(|(name, _)| *name == id)
        .map(|(_, h)| *h)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

/// One step of a derivation chain. The first step of a recipe is a source
/// (`Systematic`, `Code` or `StandIn`); the rest transform it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Step {
    /// `[I_k | M]` for a named matrix `M`.
    Systematic {
        matrix: String,
    },
    /// The code of another recipe.
    Code {
        id: String,
    },
    /// A searched witness for a parameter set whose construction is not given.
    StandIn {
        id: String,
    },
    /// Appends a named block once.
    Append {
        matrix: String,
    },
    Shorten {
        coords: Vec<usize>,
    },
    Puncture {
        coords: Vec<usize>,
    },
    Dual,
}

impl std::fmt::Display for Step {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let set = |c: &[usize]| {
            c.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Step::Systematic { matrix } => write!(f, "[I|{matrix}]"),
            Step::Code { id } => write!(f, "{id}"),
            Step::StandIn { id } => write!(f, "stand-in {id}"),
            Step::Append { matrix } => write!(f, "append {matrix}"),
            Step::Shorten { coords } => write!(f, "shorten {{{}}}", set(coords)),
            Step::Puncture { coords } => write!(f, "puncture {{{}}}", set(coords)),
            Step::Dual => write!(f, "dual"),
        }
    }
}

/// Parameters a recipe must reproduce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub lcd: bool,
}

impl Expected {
    pub fn tuple(&self) -> (usize, usize, usize, bool) {
        (self.n, self.k, self.d, self.lcd)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recipe {
    pub id: String,
    pub steps: Vec<Step>,
    pub expected: Expected,
}

impl Recipe {
    /// Runs the chain without checking the outcome.
    pub fn execute(&self) -> Result<LinearCode> {
        let mut steps = self.steps.iter();
        let mut code = match steps.next() {
            Some(Step::Systematic { matrix }) => {
                let a = named_matrix(matrix)?;
                LinearCode::new(TritMatrix::identity(a.rows()).hstack(&a)?)?
            }
            Some(Step::Code { id }) => recipe(id)?.execute()?,
            Some(Step::StandIn { id }) => crate::registry::standin(id)?,
            other => {
                return Err(Error::Parse(format!(
                    "{}: recipe must start with a source, got {other:?}",
                    self.id
                )))
            }
        };
        for step in steps {
            code = match step {
                Step::Append { matrix } => juxtapose(&code, &named_matrix(matrix)?, 1)?,
                Step::Shorten { coords } => shorten(&code, &CoordSet::new(coords.clone())?)?,
                Step::Puncture { coords } => puncture(&code, &CoordSet::new(coords.clone())?)?,
                Step::Dual => code.dual()?,
                other => {
                    return Err(Error::Parse(format!(
                        "{}: source step {other} in the middle of a chain",
                        self.id
                    )))
                }
            };
        }
        Ok(code)
    }

    /// Runs the chain and checks `(n, k, d, is_lcd)` against `expected`.
    pub fn build(&self) -> Result<LinearCode> {
        let code = self.execute()?;
        let computed = code.params()?.tuple();
        if computed != self.expected.tuple() {
            return Err(Error::VerificationMismatch {
                id: self.id.clone(),
                expected: self.expected.tuple(),
                computed,
            });
        }
        Ok(code)
    }

    pub fn describe(&self) -> String {
        self.steps
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" -> ")
    }
}

fn sys(m: &str) -> Step {
    Step::Systematic { matrix: m.into() }
}

fn from(id: &str) -> Step {
    Step::Code { id: id.into() }
}

fn standin(id: &str) -> Step {
    Step::StandIn { id: id.into() }
}

fn sh(c: &[usize]) -> Step {
    Step::Shorten { coords: c.to_vec() }
}

fn pu(c: &[usize]) -> Step {
    Step::Puncture { coords: c.to_vec() }
}

fn make(id: &str, steps: Vec<Step>, (n, k, d): (usize, usize, usize)) -> Recipe {
    make_lcd(id, steps, (n, k, d), true)
}

fn make_lcd(id: &str, steps: Vec<Step>, (n, k, d): (usize, usize, usize), lcd: bool) -> Recipe {
    Recipe {
        id: id.into(),
        steps,
        expected: Expected { n, k, d, lcd },
    }
}

/// Every derivation chain, sources first.
pub fn recipes() -> Vec<Recipe> {
    vec![
        // searched stand-ins and their duals
        make("L_13_6_6", vec![standin("L_13_6_6")], (13, 6, 6)),
        make("L_14_7_6", vec![standin("L_14_7_6")], (14, 7, 6)),
        make("L_14_8_5", vec![standin("L_14_8_5")], (14, 8, 5)),
        make("L_15_6_7", vec![standin("L_15_6_7")], (15, 6, 7)),
        make("L_16_9_5", vec![standin("L_16_9_5")], (16, 9, 5)),
        make("L_19_12_5", vec![standin("L_19_12_5")], (19, 12, 5)),
        make("L_20_12_6", vec![standin("L_20_12_6")], (20, 12, 6)),
        make("L_20_13_5", vec![standin("L_20_13_5")], (20, 13, 5)),
        make("L_13_7_5", vec![from("L_13_6_6"), Step::Dual], (13, 7, 5)),
        make("L_14_6_6", vec![from("L_14_8_5"), Step::Dual], (14, 6, 6)),
        make("L_15_9_4", vec![from("L_15_6_7"), Step::Dual], (15, 9, 4)),
        make("L_16_7_6", vec![from("L_16_9_5"), Step::Dual], (16, 7, 6)),
        make("L_19_7_8", vec![from("L_19_12_5"), Step::Dual], (19, 7, 8)),
        make("L_20_8_8", vec![from("L_20_12_6"), Step::Dual], (20, 8, 8)),
        make("L_20_7_8", vec![from("L_20_13_5"), Step::Dual], (20, 7, 8)),
        // shortening and puncturing the [15,6,7]; coordinates chosen for the stand-in
        make("C_14_5_7", vec![from("L_15_6_7"), sh(&[12])], (14, 5, 7)),
        make("C_13_4_7", vec![from("L_15_6_7"), sh(&[3, 6])], (13, 4, 7)),
        make("C_13_5_6", vec![from("C_14_5_7"), pu(&[5])], (13, 5, 6)),
        // [I_11 | A_11_9]
        make("C_20_11_6", vec![sys("A_11_9")], (20, 11, 6)),
        make("C_19_10_6", vec![from("C_20_11_6"), sh(&[3])], (19, 10, 6)),
        make(
            "C_18_9_6",
            vec![from("C_20_11_6"), sh(&[2, 11])],
            (18, 9, 6),
        ),
        make(
            "C_17_8_6",
            vec![from("C_20_11_6"), sh(&[1, 2, 4])],
            (17, 8, 6),
        ),
        // [I_13 | A_13_10] is not LCD, its shortenings are
        make_lcd("C_23_13_6", vec![sys("A_13_10")], (23, 13, 6), false),
        make(
            "C_20_10_6",
            vec![from("C_23_13_6"), sh(&[1, 4, 11])],
            (20, 10, 6),
        ),
        make(
            "C_19_9_6",
            vec![from("C_23_13_6"), sh(&[3, 4, 9, 12])],
            (19, 9, 6),
        ),
        make(
            "C_18_8_6",
            vec![from("C_23_13_6"), sh(&[1, 8, 9, 12, 13])],
            (18, 8, 6),
        ),
        make(
            "C_17_7_6",
            vec![from("C_23_13_6"), sh(&[4, 6, 8, 10, 11, 12])],
            (17, 7, 6),
        ),
        // shortening the [20,12,6] and [20,8,8]; coordinates chosen for the stand-in
        make("C_19_11_6", vec![from("L_20_12_6"), sh(&[8])], (19, 11, 6)),
        make(
            "C_18_10_6",
            vec![from("L_20_12_6"), sh(&[1, 3])],
            (18, 10, 6),
        ),
        make(
            "C_17_9_6",
            vec![from("L_20_12_6"), sh(&[1, 2, 5])],
            (17, 9, 6),
        ),
        make("C_18_6_8", vec![from("L_20_8_8"), sh(&[7, 11])], (18, 6, 8)),
        make(
            "C_17_5_8",
            vec![from("L_20_8_8"), sh(&[7, 9, 15])],
            (17, 5, 8),
        ),
        make(
            "C_16_4_9",
            vec![from("L_20_8_8"), sh(&[9, 13, 15, 16])],
            (16, 4, 9),
        ),
        // [I_4 | A_4_17] and its punctures
        make("C_21_4_12", vec![sys("A_4_17")], (21, 4, 12)),
        make("C_20_4_11", vec![from("C_21_4_12"), pu(&[1])], (20, 4, 11)),
        make(
            "C_19_4_11",
            vec![from("C_21_4_12"), pu(&[7, 16])],
            (19, 4, 11),
        ),
        make(
            "C_18_4_10",
            vec![from("C_21_4_12"), pu(&[1, 2, 7])],
            (18, 4, 10),
        ),
        make(
            "C_17_4_9",
            vec![from("C_21_4_12"), pu(&[1, 2, 7, 8])],
            (17, 4, 9),
        ),
        make(
            "C_15_4_8",
            vec![from("C_21_4_12"), pu(&[1, 2, 3, 5, 7, 8])],
            (15, 4, 8),
        ),
        // [I_6 | A_6_11]
        make("C_17_6_8", vec![sys("A_6_11")], (17, 6, 8)),
        make("C_16_6_7", vec![from("C_17_6_8"), pu(&[1])], (16, 6, 7)),
        make("C_16_5_8", vec![from("C_17_6_8"), sh(&[2])], (16, 5, 8)),
        make("C_15_5_7", vec![from("C_16_5_8"), pu(&[1])], (15, 5, 7)),
        // five-dimensional codes
        make("C_17_5_9", vec![sys("A_5_12")], (17, 5, 9)),
        make("C_18_5_9", vec![sys("G_A_13")], (18, 5, 9)),
        make(
            "C_19_5_10",
            vec![
                from("C_17_5_9"),
                Step::Append {
                    matrix: "B_5_2".into(),
                },
            ],
            (19, 5, 10),
        ),
        make(
            "C_19_5_10_fit",
            vec![
                from("C_17_5_9"),
                Step::Append {
                    matrix: "B_5_2_fit".into(),
                },
            ],
            (19, 5, 10),
        ),
        make("C_20_5_11", vec![sys("A_5_15")], (20, 5, 11)),
        // the dual [20,15,3] and its shortenings
        make(
            "C_20_15_3",
            vec![from("C_20_5_11"), Step::Dual],
            (20, 15, 3),
        ),
        make("C_19_14_3", vec![from("C_20_15_3"), sh(&[10])], (19, 14, 3)),
        make(
            "C_18_13_3",
            vec![from("C_20_15_3"), sh(&[9, 13])],
            (18, 13, 3),
        ),
        make(
            "C_17_12_3",
            vec![from("C_20_15_3"), sh(&[7, 9, 12])],
            (17, 12, 3),
        ),
        // [I_9 | A_9_11] as printed has a singular Gram matrix
        make_lcd("C_20_9_8_printed", vec![sys("A_9_11")], (20, 9, 8), false),
    ]
}

pub fn recipe(id: &str) -> Result<Recipe> {
    recipes()
        .into_iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_two_is_printed_matrix() {
        let s = simplex(2).unwrap();
        assert_eq!(s, TritMatrix::from_digit_rows(&["1011", "0112"]).unwrap());
        assert!(simplex(1).is_err());
        assert!(simplex(9).is_err());
    }

    #[test]
    fn simplex_gram_vanishes() {
        for k in 2..=6 {
            let s = simplex(k).unwrap();
            assert_eq!(s.cols(), (3usize.pow(k as u32) - 1) / 2);
            assert!(s.gram().is_zero());
        }
    }

    #[test]
    fn simplex_beta_columns() {
        assert_eq!(simplex_column(3, 5).unwrap().to_string(), "001");
        assert_eq!(simplex_column(3, 13).unwrap().to_string(), "122");
        assert!(simplex_column(3, 14).is_err());
    }

    #[test]
    fn dim1_examples() {
        assert_eq!(
            dim1_code(5).unwrap().params().unwrap().tuple(),
            (5, 1, 5, true)
        );
        assert_eq!(
            dim1_code(6).unwrap().params().unwrap().tuple(),
            (6, 1, 5, true)
        );
        assert_eq!(
            dim1_code(5).unwrap().gram_report().gram,
            TritMatrix::from_int_rows(&[vec![2]]).unwrap()
        );
        assert!(dim1_code(1).is_err());
    }

    #[test]
    fn codim_examples() {
        assert_eq!(
            codim1_code(5).unwrap().params().unwrap().tuple(),
            (5, 4, 2, true)
        );
        assert_eq!(
            codim1_code(6).unwrap().params().unwrap().tuple(),
            (6, 5, 1, true)
        );
        assert_eq!(
            codim2_code(6).unwrap().params().unwrap().tuple(),
            (6, 4, 2, true)
        );
        assert_eq!(
            codim2_code(12).unwrap().params().unwrap().tuple(),
            (12, 10, 2, true)
        );
        assert_eq!(
            codim2_code(4).unwrap().params().unwrap().tuple(),
            (4, 2, 2, true)
        );
    }

    #[test]
    fn dim2_examples() {
        let six = dim2_code(6).unwrap();
        assert_eq!(six.params().unwrap().tuple(), (6, 2, 4, true));
        assert_eq!(six.gram_report().gram, TritMatrix::identity(2));
        assert_eq!(dim2_code(13).unwrap().params().unwrap().d, 9);
        assert_eq!(dim2_code(4).unwrap().params().unwrap().d, 2);
    }

    #[test]
    fn dim3_examples() {
        assert_eq!(
            dim3_code(9).unwrap().params().unwrap().tuple(),
            (9, 3, 5, true)
        );
        assert_eq!(dim3_code(13).unwrap().params().unwrap().d, 8);
        assert_eq!(dim3_code(26).unwrap().params().unwrap().d, 17);
        assert_eq!(dim3_distance(17), 11);
        assert_eq!(dim3_distance(30), 20);
    }

    #[test]
    fn named_shapes() {
        for (id, r, c) in [
            ("A_11_9", 11, 9),
            ("A_13_10", 13, 10),
            ("A_4_17", 4, 17),
            ("A_6_11", 6, 11),
            ("A_5_12", 5, 12),
            ("G_A_13", 5, 13),
            ("B_5_2", 5, 2),
            ("A_5_15", 5, 15),
            ("A_9_11", 9, 11),
            ("B_5_2_fit", 5, 2),
        ] {
            let m = named_matrix(id).unwrap();
            assert_eq!((m.rows(), m.cols()), (r, c), "{id}");
        }
        assert_eq!(
            named_matrix("A_4_17").unwrap().row(0).to_string(),
            "12210021201022200"
        );
        assert!(matches!(named_matrix("A_1_1"), Err(Error::UnknownId(_))));
    }

    #[test]
    fn recipe_ids_are_unique() {
        let all = recipes();
        let mut ids: Vec<_> = all.iter().map(|r| r.id.as_str()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), all.len());
    }
}
