//! Level labeling of the extended poset and the F-pure threshold it computes.
//!
//! Starting from `Λ_0 = λ_0 = {∞}`, level `i` collects the unassigned elements
//! covered by something in `Λ_{i-1}` (that is `λ_i`) and then everything
//! unassigned lying above them (`Λ_i`). The level of `-∞` is the F-pure
//! threshold. The level function is a feasible point of the Σ program and
//! the walk read off from the levels is a (*)-path of the same upper length,
//! which certifies optimality.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::paths::{enumerate_maximal_star_paths, satisfies_star, StarPath};
use crate::poset::{ExtendedPoset, Poset};

#[derive(Debug, Clone)]
pub struct LevelLabeling {
    extended: ExtendedPoset,
    lambda: Vec<Vec<usize>>,
    big_lambda: Vec<Vec<usize>>,
    psi: Vec<usize>,
    witness: StarPath,
}

impl LevelLabeling {
    pub fn extended(&self) -> &ExtendedPoset {
        &self.extended
    }

    /// `λ_0, λ_1, ...` as indices into the extended poset.
    pub fn lambda_sets(&self) -> &[Vec<usize>] {
        &self.lambda
    }

    /// `Λ_0, Λ_1, ...` as indices into the extended poset.
    pub fn level_sets(&self) -> &[Vec<usize>] {
        &self.big_lambda
    }

    /// Level of every element of the extended poset.
    pub fn psi(&self) -> &[usize] {
        &self.psi
    }

    pub fn level_of(&self, x: usize) -> usize {
        self.psi[x]
    }

    /// `ψ(-∞)`.
    pub fn bottom_level(&self) -> usize {
        self.psi[self.extended.bottom()]
    }

    /// The level walk from `-∞` to `∞`, a path in the extended poset.
    pub fn witness(&self) -> &StarPath {
        &self.witness
    }

    /// Level sets rendered with element names.
    pub fn named_levels(&self) -> Vec<Vec<&str>> {
        let p = self.extended.poset();
        self.big_lambda
            .iter()
            .map(|level| level.iter().map(|&x| p.name(x)).collect())
            .collect()
    }
}

pub fn compute_levels(poset: &Poset) -> LevelLabeling {
    let extended = poset.extend();
    let ext = extended.poset();
    let (bottom, top) = (extended.bottom(), extended.top());
    let mut psi: Vec<Option<usize>> = vec![None; ext.len()];
    psi[top] = Some(0);
    let mut lambda = vec![vec![top]];
    let mut big_lambda = vec![vec![top]];

    while psi[bottom].is_none() {
        let i = big_lambda.len();
        let prev = &big_lambda[i - 1];
        let small: Vec<usize> = (0..ext.len())
            .filter(|&p| psi[p].is_none() && ext.upper_covers(p).iter().any(|q| prev.contains(q)))
            .collect();
        assert!(
            !small.is_empty(),
            "level {i} is empty before -inf was reached"
        );
        let big: Vec<usize> = (0..ext.len())
            .filter(|&p| psi[p].is_none() && small.iter().any(|&q| ext.le(q, p)))
            .collect();
        for &p in &big {
            psi[p] = Some(i);
        }
        lambda.push(small);
        big_lambda.push(big);
    }

    let psi: Vec<usize> = psi
        .into_iter()
        .map(|v| v.expect("every element lies above -inf"))
        .collect();
    let witness = walk(&extended, &lambda, &psi);
    LevelLabeling {
        extended,
        lambda,
        big_lambda,
        psi,
        witness,
    }
}

fn walk(extended: &ExtendedPoset, lambda: &[Vec<usize>], psi: &[usize]) -> StarPath {
    let ext = extended.poset();
    let mut vertices = vec![extended.bottom()];
    let mut current = extended.bottom();
    while current != extended.top() {
        let level = psi[current];
        current = if lambda[level].contains(&current) {
            *ext.upper_covers(current)
                .iter()
                .find(|&&y| psi[y] + 1 == level)
                .expect("a lambda element is covered by the previous level")
        } else {
            *ext.lower_covers(current)
                .iter()
                .find(|&&y| psi[y] == level)
                .expect("a non-lambda element has a lower cover in its own level")
        };
        vertices.push(current);
    }
    StarPath::new(ext, vertices).expect("the level walk is a path of the extended poset")
}

/// `ψ(-∞)`, the F-pure threshold of the maximal ideal.
pub fn fpt_by_levels(poset: &Poset) -> i64 {
    compute_levels(poset).bottom_level() as i64
}

/// Elements of a higher level are never above elements of a lower level.
pub fn check_level_order(labeling: &LevelLabeling) -> bool {
    let ext = labeling.extended.poset();
    let psi = &labeling.psi;
    (0..ext.len()).all(|p| (0..ext.len()).all(|q| !(psi[p] > psi[q] && ext.lt(q, p))))
}

/// A rational function on the extended poset with `f(∞) = 0` and
/// `0 <= f(x) - f(y) <= 1` across every cover `x ⋖ y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaFunction {
    values: Vec<Ratio<i64>>,
}

impl SigmaFunction {
    /// Checks feasibility on `extended`.
    pub fn new(extended: &ExtendedPoset, values: Vec<Ratio<i64>>) -> Result<SigmaFunction> {
        let ext = extended.poset();
        if values.len() != ext.len() {
            return Err(Error::InfeasibleLabeling(format!(
                "{} values for {} elements",
                values.len(),
                ext.len()
            )));
        }
        if values[extended.top()] != Ratio::from_integer(0) {
            return Err(Error::InfeasibleLabeling(format!(
                "value {} at {}",
                values[extended.top()],
                ext.name(extended.top())
            )));
        }
        for (x, y) in ext.cover_pairs() {
            let drop = values[x] - values[y];
            if drop < Ratio::from_integer(0) || drop > Ratio::from_integer(1) {
                return Err(Error::InfeasibleLabeling(format!(
                    "f({}) - f({}) = {drop}",
                    ext.name(x),
                    ext.name(y)
                )));
            }
        }
        Ok(SigmaFunction { values })
    }

    pub fn zero(extended: &ExtendedPoset) -> SigmaFunction {
        SigmaFunction {
            values: vec![Ratio::from_integer(0); extended.poset().len()],
        }
    }

    pub fn values(&self) -> &[Ratio<i64>] {
        &self.values
    }

    pub fn value(&self, x: usize) -> Ratio<i64> {
        self.values[x]
    }
}

pub fn psi_as_sigma(labeling: &LevelLabeling) -> Result<SigmaFunction> {
    let values = labeling
        .psi
        .iter()
        .map(|&v| Ratio::from_integer(v as i64))
        .collect();
    SigmaFunction::new(&labeling.extended, values)
}

pub fn extract_witness_path(labeling: &LevelLabeling) -> StarPath {
    labeling.witness.clone()
}

/// `f(-∞) <= len*(C)` for every maximal (*)-path `C` of the extended poset.
pub fn check_weak_duality(
    extended: &ExtendedPoset,
    f: &SigmaFunction,
    limits: &Limits,
) -> Result<bool> {
    let bound = f.value(extended.bottom());
    Ok(enumerate_maximal_star_paths(extended.poset(), limits)?
        .iter()
        .all(|c| bound <= Ratio::from_integer(c.upper_length() as i64)))
}

/// The labeling's witness is a (*)-path whose upper length equals `ψ(-∞)`.
pub fn witness_attains_bound(labeling: &LevelLabeling) -> bool {
    let ext = labeling.extended.poset();
    satisfies_star(ext, &labeling.witness)
        && labeling.witness.upper_length() == labeling.bottom_level()
}
