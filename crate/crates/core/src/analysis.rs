//! One-call invariant report for the Hibi ring of a poset.
//!
//! | invariant            | formula        |
//! |----------------------|----------------|
//! | diagonal F-threshold | `rank* P + 2`  |
//! | F-pure threshold     | `rank_* P + 2` |
//! | `-a(R)`              | `rank P + 2`   |
//! | Krull dimension      | `#P + 1`       |

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::segre_poset;
use crate::ideals::dimension;
use crate::io::to_json;
use crate::levels::{compute_levels, psi_as_sigma, witness_attains_bound};
use crate::limits::Limits;
use crate::oracle::nu;
use crate::paths::{path_ranks, StarPath};
use crate::poset::Poset;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n_elements: usize,
    pub dim: usize,
    pub rank: i64,
    pub upper_rank: i64,
    pub lower_rank: i64,
    pub c_diagonal: i64,
    pub fpt: i64,
    pub minus_a: i64,
    pub min_maximal_chain: i64,
    pub pure: bool,
    pub gorenstein: bool,
    pub inequality_ok: bool,
    pub witnesses: Witnesses,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    /// A maximal (*)-path of greatest upper length; `null` for the empty poset.
    pub upper_path: Option<Vec<String>>,
    /// A maximal (*)-path of least upper length; `null` for the empty poset.
    pub lower_path: Option<Vec<String>>,
    /// The level walk from `-inf` to `inf` in the extended poset.
    pub level_path: Vec<String>,
    /// The level sets `Λ_0 = {inf}, Λ_1, ...`; the last one is `{-inf}`.
    pub levels: Vec<Vec<String>>,
}

fn owned_names(poset: &Poset, path: &StarPath) -> Vec<String> {
    path.names(poset).into_iter().map(str::to_string).collect()
}

impl InvariantReport {
    /// `fpt <= min maximal chain + 2 <= -a <= c_diagonal`.
    pub fn inequality_chain_holds(&self) -> bool {
        self.fpt <= self.min_maximal_chain + 2
            && self.min_maximal_chain + 2 <= self.minus_a
            && self.minus_a <= self.c_diagonal
    }
}

pub fn analyze(poset: &Poset, limits: &Limits) -> Result<InvariantReport> {
    let (upper, lower) = path_ranks(poset, limits)?;
    let labeling = compute_levels(poset);
    let ext = labeling.extended().poset();
    let fpt_levels = labeling.bottom_level() as i64;
    let fpt_paths = lower.value + 2;

    let witnesses = Witnesses {
        upper_path: upper.path.as_ref().map(|p| owned_names(poset, p)),
        lower_path: lower.path.as_ref().map(|p| owned_names(poset, p)),
        level_path: owned_names(ext, labeling.witness()),
        levels: labeling
            .named_levels()
            .into_iter()
            .map(|l| l.into_iter().map(str::to_string).collect())
            .collect(),
    };

    if fpt_levels != fpt_paths || !witness_attains_bound(&labeling) {
        return Err(Error::InternalDisagreement(format!(
            "levels give fpt {fpt_levels} via {:?} with levels {:?}; path search gives {fpt_paths} via {:?}; poset {}",
            witnesses.level_path,
            witnesses.levels,
            witnesses.lower_path,
            to_json(poset)
        )));
    }
    psi_as_sigma(&labeling)?;

    let rank = poset.rank();
    let pure = poset.is_pure();
    let mut report = InvariantReport {
        n_elements: poset.len(),
        dim: dimension(poset),
        rank,
        upper_rank: upper.value,
        lower_rank: lower.value,
        c_diagonal: upper.value + 2,
        fpt: fpt_levels,
        minus_a: rank + 2,
        min_maximal_chain: poset.min_maximal_chain(),
        pure,
        gorenstein: pure,
        inequality_ok: false,
        witnesses,
    };
    report.inequality_ok = report.inequality_chain_holds();
    Ok(report)
}

/// Report for the Segre product of polynomial rings in `m` and `n` variables,
/// checked against `c = -a = max(m, n)` and `fpt = min(m, n)`.
pub fn segre_invariants(m: usize, n: usize, limits: &Limits) -> Result<InvariantReport> {
    let report = analyze(&segre_poset(m, n)?, limits)?;
    let (hi, lo) = (m.max(n) as i64, m.min(n) as i64);
    if report.c_diagonal != hi || report.minus_a != hi || report.fpt != lo {
        return Err(Error::InternalDisagreement(format!(
            "segre ({m}, {n}): c = {}, -a = {}, fpt = {}",
            report.c_diagonal, report.minus_a, report.fpt
        )));
    }
    Ok(report)
}

/// `ν(q) = c_diagonal · (q - 1)` for every listed `q`.
pub fn verify_against_oracle(poset: &Poset, qs: &[u64], limits: &Limits) -> Result<bool> {
    let c = path_ranks(poset, limits)?.0.value + 2;
    for &q in qs {
        if nu(poset, q, limits)?.nu != c as u64 * (q - 1) {
            return Ok(false);
        }
    }
    Ok(true)
}
