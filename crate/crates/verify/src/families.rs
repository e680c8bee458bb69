//! Closed-form bounds for paths, cycles and hypercubes, and sweeps that
//! compare them with exact solver values.

use burngame::engine::{game_value, Player};
use burngame::generators::{family, Family};
use burngame::VertexSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::check::{to_results, Assertion};
use crate::facts::Facts;
use crate::report::{CheckResult, Relation};

pub const MAX_PATH_CYCLE_N: usize = 22;
pub const MAX_HYPERCUBE_D: usize = 4;

pub const FAMILY_NAMES: &[&str] = &[
    "path-bg",
    "path-bg'",
    "cycle-bg",
    "cycle-bg'",
    "hypercube-bg",
    "hypercube-bg'",
];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family bound {0:?}; expected one of {FAMILY_NAMES:?}")]
    UnknownName(String),
    #[error("{name}: parameter {n} outside the supported range {min}..={max}")]
    OutOfRange {
        name: String,
        n: usize,
        min: usize,
        max: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub name: String,
    pub n: usize,
    pub lower: usize,
    pub upper: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed: Option<usize>,
}

impl BoundRow {
    pub fn within(&self) -> Option<bool> {
        self.computed.map(|c| self.lower <= c && c <= self.upper)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundTable {
    pub rows: Vec<BoundRow>,
}

/// Smallest `r >= 0` with `ok(r)`.
fn least(ok: impl Fn(usize) -> bool) -> usize {
    (0..).find(|&r| ok(r)).unwrap_or_else(|| unreachable!())
}

// The ceiling expressions are evaluated in integers:
//   ceil(sqrt(2n+1) - 1)       = least r with (r+1)^2 >= 2n+1
//   ceil(sqrt(2n+2) - 1)       = least r with (r+1)^2 >= 2n+2
//   ceil(sqrt(2n+1/4) - 1/2)   = least r with (2r+1)^2 >= 8n+1
//   ceil(sqrt(2n+7) - 2)       = least r with (r+2)^2 >= 2n+7
//   ceil(sqrt(2n+17/4) - 3/2)  = least r with (2r+3)^2 >= 8n+17
fn path_upper(n: usize) -> usize {
    least(|r| (2 * r + 1).pow(2) > 8 * n)
}

fn family_of(name: &str, n: usize) -> Result<Family, FamilyError> {
    let range = |min: usize, max: usize| {
        if (min..=max).contains(&n) {
            Ok(())
        } else {
            Err(FamilyError::OutOfRange {
                name: name.to_string(),
                n,
                min,
                max,
            })
        }
    };
    match name {
        "path-bg" | "path-bg'" => range(1, MAX_PATH_CYCLE_N).map(|_| Family::Path(n)),
        "cycle-bg" | "cycle-bg'" => range(3, MAX_PATH_CYCLE_N).map(|_| Family::Cycle(n)),
        "hypercube-bg" | "hypercube-bg'" => range(1, MAX_HYPERCUBE_D).map(|_| Family::Hypercube(n)),
        _ => Err(FamilyError::UnknownName(name.to_string())),
    }
}

fn starter_of(name: &str) -> Player {
    if name.ends_with('\'') {
        Player::Staller
    } else {
        Player::Burner
    }
}

/// The cited `[lower, upper]` window for one family member (`computed` unset).
pub fn closed_forms(name: &str, n: usize) -> Result<BoundRow, FamilyError> {
    family_of(name, n)?;
    let (lower, upper) = match name {
        "path-bg" | "cycle-bg" => (least(|r| (r + 1).pow(2) > 2 * n), path_upper(n)),
        "path-bg'" => (least(|r| (r + 1).pow(2) >= 2 * n + 2), path_upper(n)),
        "cycle-bg'" => (
            least(|r| (r + 2).pow(2) >= 2 * n + 7),
            least(|r| (2 * r + 3).pow(2) >= 8 * n + 17),
        ),
        "hypercube-bg" => {
            let v = if n <= 2 { 2 } else { (n + 1).div_ceil(2) + 1 };
            (v, v)
        }
        "hypercube-bg'" => {
            let v = n.div_ceil(2) + 1;
            (v, v)
        }
        _ => unreachable!("validated by family_of"),
    };
    Ok(BoundRow {
        name: name.to_string(),
        n,
        lower,
        upper,
        computed: None,
    })
}

/// Exact solver values against the closed forms for every `n` in `range`.
pub fn family_sweep(name: &str, range: std::ops::RangeInclusive<usize>) -> Result<BoundTable, FamilyError> {
    let mut rows = vec![];
    for n in range {
        let mut row = closed_forms(name, n)?;
        let g = family(family_of(name, n)?).unwrap_or_else(|e| unreachable!("{e}"));
        row.computed = Some(game_value(&g, VertexSet::EMPTY, starter_of(name)));
        rows.push(row);
    }
    Ok(BoundTable { rows })
}

/// The full default sweep of one family check as results.
pub fn sweep_results(check_id: &str) -> Vec<CheckResult> {
    let (names, range): (&[&str], _) = match check_id {
        "thm-5.3" => (&["path-bg", "path-bg'"], 1..=MAX_PATH_CYCLE_N),
        "thm-cycles" => (&["cycle-bg", "cycle-bg'"], 3..=MAX_PATH_CYCLE_N),
        "thm-6.2" => (&["hypercube-bg", "hypercube-bg'"], 1..=MAX_HYPERCUBE_D),
        _ => return vec![],
    };
    let def = crate::catalog::find(check_id).unwrap_or_else(|| unreachable!("{check_id} registered"));
    let mut out = vec![];
    for name in names {
        let table = family_sweep(name, range.clone()).unwrap_or_else(|e| unreachable!("{e}"));
        for row in table.rows {
            let g = family(family_of(name, row.n).unwrap_or_else(|e| unreachable!("{e}")))
                .unwrap_or_else(|e| unreachable!("{e}"));
            let facts = Facts::new(g);
            let computed = row.computed.unwrap_or_default();
            let subject = format!("{}:{}", name.split('-').next().unwrap_or(name), row.n);
            let value = |a: Assertion| {
                a.param("family", *name)
                    .param("n", row.n)
                    .value("computed", computed as i64)
            };
            let assertions = if row.lower == row.upper {
                vec![value(Assertion::new(
                    format!("{name}({}) = {}", row.n, row.lower),
                    computed,
                    Relation::Eq,
                    row.lower,
                ))]
            } else {
                vec![
                    value(Assertion::new(
                        format!("{name}({}) >= lower", row.n),
                        computed,
                        Relation::Ge,
                        row.lower,
                    )),
                    value(Assertion::new(
                        format!("{name}({}) <= upper", row.n),
                        computed,
                        Relation::Le,
                        row.upper,
                    )),
                ]
            };
            out.extend(to_results(def, &facts, &subject, assertions));
        }
    }
    out
}
