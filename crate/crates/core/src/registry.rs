//! The code registry: canonical files, provenance, the bounds table and the
//! comparison with the printed table.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::code::{macwilliams_dual_enumerator, LinearCode, WeightEnumerator};
use crate::constructions::{self, Recipe, Step};
use crate::error::{Error, Result};
use crate::gf3::TritMatrix;
use crate::printed::{self, PRINTED_ENUMERATORS, TEXT_CLAIMS};

pub const CODE_HEADER: &str = "ternary-code v1";

/// Canonical text form of a generator matrix.
pub fn format_code(g: &TritMatrix) -> String {
    let mut s = format!("{CODE_HEADER}\nn={} k={}\n", g.cols(), g.rows());
    for r in g.row_vectors() {
        s.push_str(&r.to_string());
        s.push('\n');
    }
    s
}

/// Parses the canonical text form; errors carry 1-based line numbers.
pub fn parse_code(text: &str) -> Result<LinearCode> {
    let g = parse_text(text, true)?;
    LinearCode::new(g).map_err(|e| Error::Format {
        line: 3,
        message: e.to_string(),
    })
}

/// Parses the canonical text form without requiring full row rank or
/// `k <= n`, as for the named blocks.
pub fn parse_matrix(text: &str) -> Result<TritMatrix> {
    parse_text(text, false)
}

fn parse_text(text: &str, as_code: bool) -> Result<TritMatrix> {
    let lines: Vec<&str> = text.lines().collect();
    let err = |line: usize, message: String| Error::Format { line, message };
    match lines.first() {
        Some(&h) if h.trim_end() == CODE_HEADER => {}
        Some(h) => return Err(err(1, format!("expected {CODE_HEADER:?}, found {h:?}"))),
        None => return Err(err(1, "empty file".into())),
    }
    let dims = lines
        .get(1)
        .ok_or_else(|| err(2, "missing dimensions line".into()))?;
    let mut n = None;
    let mut k = None;
    for part in dims.split_whitespace() {
        match part.split_once('=') {
            Some(("n", v)) => n = v.parse::<usize>().ok(),
            Some(("k", v)) => k = v.parse::<usize>().ok(),
            _ => return Err(err(2, format!("unexpected token {part:?}"))),
        }
    }
    let (n, k) = match (n, k) {
        (Some(n), Some(k)) if n > 0 && k > 0 && (k <= n || !as_code) => (n, k),
        _ if as_code => {
            return Err(err(
                2,
                format!("expected `n=<n> k=<k>` with 1 <= k <= n, found {dims:?}"),
            ))
        }
        _ => {
            return Err(err(
                2,
                format!("expected `n=<n> k=<k>` with positive n and k, found {dims:?}"),
            ))
        }
    };
    let body: Vec<&str> = lines[2..]
        .iter()
        .copied()
        .filter(|l| !l.trim().is_empty())
        .collect();
    if body.len() != k {
        return Err(err(
            2 + body.len().min(k) + 1,
            format!("expected {k} generator rows, found {}", body.len()),
        ));
    }
    for (i, row) in body.iter().enumerate() {
        let row = row.trim_end();
        if row.len() != n || !row.bytes().all(|b| matches!(b, b'0' | b'1' | b'2')) {
            return Err(err(
                i + 3,
                format!("expected {n} digits from {{0,1,2}}, found {row:?}"),
            ));
        }
    }
    TritMatrix::from_digit_rows(&body.iter().map(|r| r.trim_end()).collect::<Vec<_>>())
}

/// Writes `contents` next to `path` and renames it into place.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Exhaustive,
    Randomized,
    /// Hill-climb that also fits the enumerators of derived codes.
    Chain,
}

/// How a searched witness was obtained; enough to rerun the search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchDescriptor {
    pub mode: SearchMode,
    pub target_d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_d: Option<usize>,
    pub seed: u64,
    pub plateau: u64,
    pub max_iters: u64,
}

/// A searched generator stored with the crate.
#[derive(Clone, Debug)]
pub struct StoredWitness {
    pub id: String,
    pub search: SearchDescriptor,
    pub code: LinearCode,
}

const STANDINS: &str = include_str!("../data/standins.txt");
const WITNESSES: &str = include_str!("../data/witnesses.txt");

/// Parses a witness data file: blocks of a `key=value` header line followed
/// by a canonical code, separated by blank lines. `#` starts a comment line.
pub fn parse_witnesses(text: &str) -> Result<Vec<StoredWitness>> {
    let mut out = Vec::new();
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.starts_with('#'))
        .peekable();
    while let Some((i, header)) = lines.next() {
        if header.trim().is_empty() {
            continue;
        }
        let err = |m: String| Error::Format {
            line: i + 1,
            message: m,
        };
        let mut fields = BTreeMap::new();
        for part in header.split_whitespace() {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| err(format!("bad field {part:?}")))?;
            fields.insert(key, value);
        }
        let get = |key: &str| {
            fields
                .get(key)
                .copied()
                .ok_or_else(|| err(format!("missing {key}")))
        };
        let num = |key: &str| {
            get(key)?
                .parse::<u64>()
                .map_err(|_| err(format!("bad {key}")))
        };
        let mode = match get("mode")? {
            "exhaustive" => SearchMode::Exhaustive,
            "randomized" => SearchMode::Randomized,
            "chain" => SearchMode::Chain,
            other => return Err(err(format!("unknown mode {other:?}"))),
        };
        let search = SearchDescriptor {
            mode,
            target_d: num("d")? as usize,
            dual_d: fields
                .get("dual_d")
                .map(|v| v.parse())
                .transpose()
                .map_err(|_| err("bad dual_d".into()))?,
            seed: num("seed").unwrap_or(0),
            plateau: num("plateau").unwrap_or(0),
            max_iters: num("iters").unwrap_or(0),
        };
        let mut block = String::new();
        while let Some((_, l)) = lines.peek() {
            if l.trim().is_empty() {
                break;
            }
            block.push_str(l);
            block.push('\n');
            lines.next();
        }
        let code =
            parse_code(&block).map_err(|e| err(format!("{}: {e}", get("id").unwrap_or("?"))))?;
        out.push(StoredWitness {
            id: get("id")?.to_string(),
            search,
            code,
        });
    }
    Ok(out)
}

pub fn standins() -> Result<Vec<StoredWitness>> {
    parse_witnesses(STANDINS)
}

pub fn gap_witnesses() -> Result<Vec<StoredWitness>> {
    parse_witnesses(WITNESSES)
}

/// The stored stand-in generator for `id`.
pub fn standin(id: &str) -> Result<LinearCode> {
    standins()?
        .into_iter()
        .find(|w| w.id == id)
        .map(|w| w.code)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

/// Agreement between a record and the published material.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PaperMatch {
    Exact,
    PaperTypoFlagged,
    DerivedStandin,
}

impl fmt::Display for PaperMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PaperMatch::Exact => "exact",
            PaperMatch::PaperTypoFlagged => "paper-typo-flagged",
            PaperMatch::DerivedStandin => "derived-standin",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Family { family: String, param: usize },
    Recipe { steps: Vec<Step> },
    Search(SearchDescriptor),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Family { family, param } => write!(f, "{family}({param})"),
            Provenance::Recipe { steps } => {
                let s: Vec<String> = steps.iter().map(|s| s.to_string()).collect();
                write!(f, "{}", s.join(" -> "))
            }
            Provenance::Search(s) => match s.mode {
                SearchMode::Exhaustive => write!(f, "exhaustive sweep"),
                SearchMode::Randomized => {
                    write!(f, "hill-climb seed={} plateau={}", s.seed, s.plateau)
                }
                SearchMode::Chain => write!(
                    f,
                    "chain-fitted hill-climb seed={} plateau={}",
                    s.seed, s.plateau
                ),
            },
        }
    }
}

/// Full weight distribution, enumerating the smaller of the code and its dual.
pub fn full_enumerator(code: &LinearCode) -> Result<WeightEnumerator> {
    let (n, k) = (code.n(), code.k());
    if k == n || k <= n - k {
        return code.weight_enumerator();
    }
    let dual = code.dual()?;
    macwilliams_dual_enumerator(&dual.weight_enumerator()?, n, n - k)
}

/// A named code with recomputed parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeRecord {
    pub id: String,
    pub code: LinearCode,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub is_lcd: bool,
    pub provenance: Provenance,
    pub enumerator: WeightEnumerator,
    pub paper_match: PaperMatch,
}

impl CodeRecord {
    pub fn new(
        id: &str,
        code: LinearCode,
        provenance: Provenance,
        paper_match: PaperMatch,
    ) -> Result<CodeRecord> {
        let enumerator = full_enumerator(&code)?;
        Ok(CodeRecord {
            id: id.to_string(),
            n: code.n(),
            k: code.k(),
            d: enumerator.min_distance().unwrap_or(0),
            is_lcd: code.is_lcd(),
            code,
            provenance,
            enumerator,
            paper_match,
        })
    }

    pub fn params(&self) -> (usize, usize, usize, bool) {
        (self.n, self.k, self.d, self.is_lcd)
    }
}

fn depends_on_standin(recipe: &Recipe) -> Result<bool> {
    for step in &recipe.steps {
        match step {
            Step::StandIn { .. } => return Ok(true),
            Step::Code { id } if depends_on_standin(&constructions::recipe(id)?)? => {
                return Ok(true)
            }
            _ => {}
        }
    }
    Ok(false)
}

/// Whether the printed material about `id` is internally inconsistent or
/// disagrees with the recomputed enumerator.
fn printed_disagrees(id: &str, enumerator: &WeightEnumerator) -> Result<bool> {
    for p in PRINTED_ENUMERATORS.iter().filter(|p| p.code_id == id) {
        if !p.issues()?.is_empty() || p.enumerator()? != *enumerator {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Runs a recipe and wraps the verified code as a record.
pub fn paper_code(id: &str) -> Result<CodeRecord> {
    recipe_record(&constructions::recipe(id)?)
}

fn recipe_record(recipe: &Recipe) -> Result<CodeRecord> {
    let code = recipe.build()?;
    let mut rec = CodeRecord::new(
        &recipe.id,
        code,
        Provenance::Recipe {
            steps: recipe.steps.clone(),
        },
        PaperMatch::Exact,
    )?;
    rec.paper_match = if depends_on_standin(recipe)? {
        PaperMatch::DerivedStandin
    } else if printed_disagrees(&recipe.id, &rec.enumerator)? {
        PaperMatch::PaperTypoFlagged
    } else {
        PaperMatch::Exact
    };
    Ok(rec)
}

/// Largest length covered by the family constructions in the registry.
pub const REGISTRY_MAX_N: usize = 20;

type Builder = fn(usize) -> Result<LinearCode>;

const FAMILIES: &[(&str, usize, Builder)] = &[
    ("dim1", 2, constructions::dim1_code),
    ("dim2", 4, constructions::dim2_code),
    ("dim3", 3, constructions::dim3_code),
    ("codim1", 3, constructions::codim1_code),
    ("codim2", 4, constructions::codim2_code),
];

/// Every family code up to length 20, every recipe and every stored witness,
/// all recomputed.
pub fn build_registry() -> Result<Vec<CodeRecord>> {
    let mut jobs: Vec<Box<dyn Fn() -> Result<CodeRecord> + Send + Sync>> = Vec::new();
    for k in 2..=3 {
        jobs.push(Box::new(move || {
            let code = LinearCode::new(constructions::simplex(k)?)?;
            CodeRecord::new(
                &format!("simplex_k{k}"),
                code,
                Provenance::Family {
                    family: "simplex".into(),
                    param: k,
                },
                PaperMatch::Exact,
            )
        }));
    }
    for &(family, start, build) in FAMILIES {
        for n in start..=REGISTRY_MAX_N {
            jobs.push(Box::new(move || {
                CodeRecord::new(
                    &format!("{family}_n{n}"),
                    build(n)?,
                    Provenance::Family {
                        family: family.into(),
                        param: n,
                    },
                    PaperMatch::Exact,
                )
            }));
        }
    }
    for recipe in constructions::recipes() {
        jobs.push(Box::new(move || recipe_record(&recipe)));
    }
    for w in gap_witnesses()? {
        jobs.push(Box::new(move || {
            CodeRecord::new(
                &w.id,
                w.code.clone(),
                Provenance::Search(w.search.clone()),
                PaperMatch::DerivedStandin,
            )
        }));
    }
    let records: Vec<CodeRecord> = jobs.par_iter().map(|job| job()).collect::<Result<_>>()?;
    let mut ids: Vec<&str> = records.iter().map(|r| r.id.as_str()).collect();
    ids.sort_unstable();
    if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Parse(format!("duplicate registry id {}", w[0])));
    }
    Ok(records)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct ManifestEntry {
    id: String,
    file: String,
    n: usize,
    k: usize,
    d: usize,
    is_lcd: bool,
    paper_match: PaperMatch,
    provenance: Provenance,
    sha256: String,
}

pub const MANIFEST: &str = "manifest.json";

/// Writes one canonical file per record plus `manifest.json`. The manifest
/// is renamed into place last, so readers see all of it or none.
pub fn export_registry(records: &[CodeRecord], dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut manifest = Vec::with_capacity(records.len());
    for r in records {
        let file = format!("{}.code", r.id);
        let text = format_code(r.code.generator());
        write_atomic(&dir.join(&file), text.as_bytes())?;
        manifest.push(ManifestEntry {
            id: r.id.clone(),
            file,
            n: r.n,
            k: r.k,
            d: r.d,
            is_lcd: r.is_lcd,
            paper_match: r.paper_match,
            provenance: r.provenance.clone(),
            sha256: sha256_hex(text.as_bytes()),
        });
    }
    let mut json = serde_json::to_string_pretty(&manifest)?;
    json.push('\n');
    write_atomic(&dir.join(MANIFEST), json.as_bytes())
}

/// Loads a registry directory, recomputing every parameter and rejecting
/// hash or parameter drift.
pub fn import_registry(dir: &Path) -> Result<Vec<CodeRecord>> {
    let manifest: Vec<ManifestEntry> = serde_json::from_slice(&fs::read(dir.join(MANIFEST))?)?;
    manifest
        .par_iter()
        .map(|e| {
            let bytes = fs::read(dir.join(&e.file))?;
            let found = sha256_hex(&bytes);
            if found != e.sha256 {
                return Err(Error::HashMismatch {
                    id: e.id.clone(),
                    expected: e.sha256.clone(),
                    found,
                });
            }
            let text = String::from_utf8(bytes)
                .map_err(|_| Error::Parse(format!("{}: not UTF-8", e.file)))?;
            let rec = CodeRecord::new(
                &e.id,
                parse_code(&text)?,
                e.provenance.clone(),
                e.paper_match,
            )?;
            let stored = (e.n, e.k, e.d, e.is_lcd);
            if rec.params() != stored {
                return Err(Error::VerificationMismatch {
                    id: e.id.clone(),
                    expected: stored,
                    computed: rec.params(),
                });
            }
            Ok(rec)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundStatus {
    Tight,
    Gap,
    MissingWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsEntry {
    pub n: usize,
    pub k: usize,
    pub d_lower: usize,
    pub d_upper: usize,
    pub status: BoundStatus,
    pub witness: Option<String>,
}

/// Best LCD witness per `(n, k)`; ties go to the first record.
fn best_witnesses(records: &[CodeRecord]) -> BTreeMap<(usize, usize), &CodeRecord> {
    let mut best: BTreeMap<(usize, usize), &CodeRecord> = BTreeMap::new();
    for r in records.iter().filter(|r| r.is_lcd) {
        let slot = best.entry((r.n, r.k)).or_insert(r);
        if r.d > slot.d {
            *slot = r;
        }
    }
    best
}

/// `d_LCD` bounds for `1 <= k < n <= max_n`: the lower end is the best
/// LCD record, the upper end the printed one where tabulated, else Singleton.
pub fn bounds_table(records: &[CodeRecord], max_n: usize) -> Vec<BoundsEntry> {
    let best = best_witnesses(records);
    let printed: BTreeMap<(usize, usize), printed::PrintedCell> = printed::table_bounds_main()
        .into_iter()
        .map(|c| ((c.n, c.k), c))
        .collect();
    let mut out = Vec::new();
    for n in 2..=max_n {
        for k in 1..n {
            let w = best.get(&(n, k));
            let d_lower = w.map_or(0, |r| r.d);
            let typo = printed::TABLE_TYPOS.iter().find(|t| (t.0, t.1) == (n, k));
            let d_upper = match (typo, printed.get(&(n, k))) {
                (Some(t), _) => t.2,
                (None, Some(c)) => c.upper,
                (None, None) => n - k + 1,
            };
            let status = match w {
                None => BoundStatus::MissingWitness,
                Some(_) if d_lower >= d_upper => BoundStatus::Tight,
                Some(_) => BoundStatus::Gap,
            };
            out.push(BoundsEntry {
                n,
                k,
                d_lower,
                d_upper,
                status,
                witness: w.map(|r| r.id.clone()),
            });
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum DiffStatus {
    Ok,
    Better,
    Miss,
    TypoFlag,
}

impl fmt::Display for DiffStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiffStatus::Ok => "OK",
            DiffStatus::Better => "BETTER",
            DiffStatus::Miss => "MISS",
            DiffStatus::TypoFlag => "TYPO-FLAG",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffCell {
    pub n: usize,
    pub k: usize,
    pub printed_lower: usize,
    pub printed_upper: usize,
    pub witnessed: usize,
    pub witness: Option<String>,
    pub status: DiffStatus,
    pub note: Option<String>,
}

/// Cells whose printed lower bound has no construction behind it.
const UNSUPPORTED_CELLS: &[(usize, usize, &str)] = &[(20, 6, "no [20,6,9] construction is given")];

/// Compares every printed cell of the final bounds table with the registry.
///
/// A witness below the printed lower bound is a MISS; a cell where the text
/// contradicts the table is a TYPO-FLAG as long as the witness reaches the
/// printed lower bound, and so is a misprinted cell whose witness attains
/// the corrected value.
pub fn diff_against_paper(records: &[CodeRecord]) -> Vec<DiffCell> {
    let best = best_witnesses(records);
    printed::table_bounds_main()
        .into_iter()
        .map(|c| {
            let w = best.get(&(c.n, c.k));
            let witnessed = w.map_or(0, |r| r.d);
            let claim = TEXT_CLAIMS.iter().find(|t| (t.0, t.1) == (c.n, c.k));
            let typo = printed::TABLE_TYPOS
                .iter()
                .find(|t| (t.0, t.1) == (c.n, c.k));
            let unsupported = UNSUPPORTED_CELLS
                .iter()
                .find(|u| (u.0, u.1) == (c.n, c.k))
                .map(|u| u.2);
            let (status, note) = if let Some(t) = typo.filter(|t| witnessed == t.2) {
                (DiffStatus::TypoFlag, Some(t.3.to_string()))
            } else if witnessed < c.lower {
                let note = unsupported
                    .map(|u| format!("{u}; the printed lower bound cannot be reproduced"));
                (DiffStatus::Miss, note)
            } else if let Some(t) = claim {
                (DiffStatus::TypoFlag, Some(t.3.to_string()))
            } else {
                let status = if witnessed > c.lower {
                    DiffStatus::Better
                } else {
                    DiffStatus::Ok
                };
                let note = unsupported.map(|u| format!("{u}; witnessed by a searched generator"));
                (status, note)
            };
            DiffCell {
                n: c.n,
                k: c.k,
                printed_lower: c.lower,
                printed_upper: c.upper,
                witnessed,
                witness: w.map(|r| r.id.clone()),
                status,
                note,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_format_round_trip() {
        let g = TritMatrix::from_digit_rows(&["1011", "0112"]).unwrap();
        let text = format_code(&g);
        assert_eq!(text, "ternary-code v1\nn=4 k=2\n1011\n0112\n");
        assert_eq!(parse_code(&text).unwrap().generator(), &g);
    }

    #[test]
    fn malformed_files_name_the_line() {
        let cases = [
            ("", 1),
            ("ternary-code v2\n", 1),
            ("ternary-code v1\nn=4\n", 2),
            ("ternary-code v1\nn=4 k=2\n1011\n", 4),
            ("ternary-code v1\nn=4 k=2\n1011\n01a2\n", 4),
            ("ternary-code v1\nn=4 k=2\n1011\n012\n", 4),
        ];
        for (text, line) in cases {
            match parse_code(text) {
                Err(Error::Format { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn dependent_rows_are_rejected() {
        assert!(parse_code("ternary-code v1\nn=3 k=2\n111\n222\n").is_err());
    }

    #[test]
    fn witness_blocks_parse() {
        let text = "# comment\nid=X mode=randomized d=2 seed=7 plateau=5 iters=9\nternary-code v1\nn=3 k=1\n111\n\n";
        let w = parse_witnesses(text).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].search.seed, 7);
        assert_eq!(w[0].code.n(), 3);
    }
}
