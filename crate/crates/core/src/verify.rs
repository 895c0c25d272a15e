//! The full verification suite: embedded data integrity, family formulas,
//! recipe chains, printed enumerators, stand-ins and the bounds table.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::code::LinearCode;
use crate::constructions::{self, named_hash, named_ids, named_matrix};
use crate::error::Result;
use crate::gf3::TritMatrix;
use crate::printed::PRINTED_ENUMERATORS;
use crate::registry::{self, bounds_table, diff_against_paper, CodeRecord, DiffStatus};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub group: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(
        group: &'static str,
        name: impl Into<String>,
        passed: bool,
        detail: impl Into<String>,
    ) -> Check {
        Check {
            group,
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    fn from_result(group: &'static str, name: impl Into<String>, r: Result<String>) -> Check {
        match r {
            Ok(detail) => Check::new(group, name, true, detail),
            Err(e) => Check::new(group, name, false, e.to_string()),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Replacement transcriptions for named matrices, keyed by id.
pub type Overrides = BTreeMap<String, TritMatrix>;

/// Compares every named matrix (or its override) with its locked hash.
pub fn check_named_matrices(overrides: &Overrides) -> Vec<Check> {
    named_ids()
        .map(|id| {
            let r = (|| {
                let m = match overrides.get(id) {
                    Some(m) => m.clone(),
                    None => named_matrix(id)?,
                };
                let expected = named_hash(id)?;
                let found = m.content_hash();
                if found != expected {
                    return Err(crate::Error::HashMismatch {
                        id: id.to_string(),
                        expected: expected.to_string(),
                        found,
                    });
                }
                Ok(format!("{}x{} sha256 {}", m.rows(), m.cols(), &found[..12]))
            })();
            Check::from_result("named-matrix", id, r)
        })
        .collect()
}

fn family_check(
    name: &str,
    range: std::ops::RangeInclusive<usize>,
    build: fn(usize) -> Result<LinearCode>,
    expected_d: fn(usize) -> usize,
) -> Check {
    let (lo, hi) = (*range.start(), *range.end());
    let bad: Vec<String> = range
        .into_par_iter()
        .filter_map(|n| {
            let r = build(n).and_then(|c| c.params());
            match r {
                Ok(p) if p.is_lcd && p.d == expected_d(n) => None,
                Ok(p) => Some(format!(
                    "n={n}: got d={} lcd={}, want d={}",
                    p.d,
                    p.is_lcd,
                    expected_d(n)
                )),
                Err(e) => Some(format!("n={n}: {e}")),
            }
        })
        .collect();
    Check::new(
        "family",
        format!("{name} n={lo}..{hi}"),
        bad.is_empty(),
        if bad.is_empty() {
            "LCD with the tabulated distance".to_string()
        } else {
            bad.join("; ")
        },
    )
}

fn simplex_checks() -> Vec<Check> {
    (2..=6)
        .map(|k| {
            let r = (|| {
                let s = constructions::simplex(k)?;
                let code = LinearCode::new(s.clone())?;
                let n = (3usize.pow(k as u32) - 1) / 2;
                let d = 3usize.pow(k as u32 - 1);
                let e = code.weight_enumerator()?;
                let ok = code.n() == n
                    && e.terms() == vec![(0, 1), (d, 3u64.pow(k as u32) - 1)]
                    && s.gram().is_zero();
                if !ok {
                    return Err(crate::Error::Parse(format!(
                        "S_{k} is not a self-orthogonal [{n},{k},{d}] constant-weight code"
                    )));
                }
                let mut detail = format!("[{n},{k},{d}], constant weight, zero Gram");
                if k == 2 {
                    detail.push_str(
                        "; TYPO-FLAG: labelled [4,2,4] although its enumerator 1+8z^3 forces d = 3",
                    );
                }
                Ok(detail)
            })();
            Check::from_result("simplex", format!("S_{k}"), r)
        })
        .collect()
}

fn recipe_checks(records: &BTreeMap<String, CodeRecord>) -> Vec<Check> {
    constructions::recipes()
        .iter()
        .map(|r| {
            let want = r.expected.tuple();
            match records.get(&r.id) {
                Some(rec) if rec.params() == want => Check::new(
                    "recipe",
                    &r.id,
                    true,
                    format!("{:?} via {}", want, r.describe()),
                ),
                Some(rec) => Check::new(
                    "recipe",
                    &r.id,
                    false,
                    format!("expected {want:?}, computed {:?}", rec.params()),
                ),
                None => Check::new("recipe", &r.id, false, "missing from registry"),
            }
        })
        .collect()
}

fn enumerator_checks(records: &BTreeMap<String, CodeRecord>) -> Vec<Check> {
    PRINTED_ENUMERATORS
        .iter()
        .map(|p| {
            let name = format!("{} ({})", p.name, p.code_id);
            let r: Result<(bool, String)> = (|| {
                let rec = records
                    .get(p.code_id)
                    .ok_or_else(|| crate::Error::UnknownId(p.code_id.to_string()))?;
                let issues = p.issues()?;
                let total_ok = rec.enumerator.total() == 3u128.pow(rec.k as u32);
                if issues.is_empty() {
                    if p.enumerator()? == rec.enumerator {
                        Ok((true, "matches coefficient for coefficient".to_string()))
                    } else {
                        Ok((
                            false,
                            format!(
                                "printed {:?}, computed {:?}",
                                p.terms()?,
                                rec.enumerator.terms()
                            ),
                        ))
                    }
                } else {
                    let claimed = match constructions::recipe(p.code_id) {
                        Ok(r) => r.expected.d,
                        Err(_) => p.min_distance()?,
                    };
                    let ok = total_ok && rec.d == claimed;
                    Ok((
                        ok,
                        format!(
                            "TYPO-FLAG {issues:?}; recomputed d={} sum=3^{}",
                            rec.d, rec.k
                        ),
                    ))
                }
            })();
            match r {
                Ok((ok, detail)) => Check::new("enumerator", name, ok, detail),
                Err(e) => Check::new("enumerator", name, false, e.to_string()),
            }
        })
        .collect()
}

fn standin_checks() -> Vec<Check> {
    let standins = match registry::standins() {
        Ok(s) => s,
        Err(e) => return vec![Check::new("stand-in", "data", false, e.to_string())],
    };
    standins
        .par_iter()
        .map(|w| {
            let r = (|| {
                let p = w.code.params()?;
                let dual = w.code.dual()?.params()?;
                let ok = p.is_lcd
                    && p.d >= w.search.target_d
                    && w.search.dual_d.is_none_or(|t| dual.d >= t);
                let detail = format!(
                    "[{},{},{}] LCD={}, dual [{},{},{}]",
                    p.n, p.k, p.d, p.is_lcd, dual.n, dual.k, dual.d
                );
                if ok {
                    Ok(detail)
                } else {
                    Err(crate::Error::Parse(detail))
                }
            })();
            Check::from_result("stand-in", &w.id, r)
        })
        .collect()
}

fn table_checks(records: &[CodeRecord]) -> Vec<Check> {
    let mut out: Vec<Check> = diff_against_paper(records)
        .into_iter()
        .map(|c| {
            let mut detail = format!(
                "{} printed {}-{}, witnessed {} ({})",
                c.status,
                c.printed_lower,
                c.printed_upper,
                c.witnessed,
                c.witness.as_deref().unwrap_or("none")
            );
            if let Some(note) = &c.note {
                detail.push_str("; ");
                detail.push_str(note);
            }
            Check::new(
                "table",
                format!("d_LCD({},{})", c.n, c.k),
                c.status != DiffStatus::Miss,
                detail,
            )
        })
        .collect();
    let bounds = bounds_table(records, registry::REGISTRY_MAX_N);
    let bad: Vec<String> = bounds
        .iter()
        .filter(|b| b.d_lower > b.d_upper)
        .map(|b| format!("({},{}) {} > {}", b.n, b.k, b.d_lower, b.d_upper))
        .collect();
    out.push(Check::new(
        "bounds",
        "d_lower <= d_upper",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} cells", bounds.len())
        } else {
            bad.join("; ")
        },
    ));
    out
}

/// Rebuilds everything and runs every check.
pub fn verify_paper(overrides: &Overrides) -> Report {
    let mut checks = check_named_matrices(overrides);
    checks.extend(simplex_checks());
    checks.push(family_check(
        "dim1",
        2..=100,
        constructions::dim1_code,
        constructions::dim1_distance,
    ));
    checks.push(family_check(
        "codim1",
        3..=100,
        constructions::codim1_code,
        constructions::codim1_distance,
    ));
    checks.push(family_check(
        "codim2",
        4..=40,
        constructions::codim2_code,
        |_| 2,
    ));
    checks.push(family_check(
        "dim2",
        4..=60,
        constructions::dim2_code,
        constructions::dim2_distance,
    ));
    checks.push(family_check(
        "dim3",
        3..=100,
        constructions::dim3_code,
        constructions::dim3_distance,
    ));
    checks.extend(standin_checks());
    match registry::build_registry() {
        Ok(records) => {
            let by_id: BTreeMap<String, CodeRecord> =
                records.iter().map(|r| (r.id.clone(), r.clone())).collect();
            checks.extend(recipe_checks(&by_id));
            checks.extend(enumerator_checks(&by_id));
            checks.extend(table_checks(&records));
        }
        Err(e) => checks.push(Check::new("registry", "build", false, e.to_string())),
    }
    Report { checks }
}
