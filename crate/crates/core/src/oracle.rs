//! Brute-force computation of `ν(q) = max{r | 𝔪^r ⊄ 𝔪^[q]}` in a Hibi ring.
//!
//! `𝔪^[q]` is generated by the `φ(I)^q`, so a monomial `(r, s)` lies in it
//! exactly when `(r - q, s - q·1_I)` is still in the semigroup for some
//! ideal `I`. The search walks t-degrees around the predicted value
//! `(rank* + 2)(q - 1)` and enumerates every monomial of each degree.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::ideals::{enumerate_ideals, in_semigroup, phi, HibiMonomial, PosetIdeal};
use crate::limits::Limits;
use crate::paths::{decompose, path_ranks, satisfies_star, StarPath};
use crate::poset::Poset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub q: u64,
    pub nu: u64,
    /// A monomial of t-degree `nu` outside `𝔪^[q]`.
    pub witness: HibiMonomial,
    /// `(rank* + 2)(q - 1)`.
    pub predicted: u64,
    pub matches: bool,
}

/// Membership test against precomputed ideal indicators.
struct Membership<'a> {
    poset: &'a Poset,
    indicators: Vec<Vec<bool>>,
}

impl<'a> Membership<'a> {
    fn new(poset: &'a Poset, limits: &Limits) -> Result<Self> {
        let indicators = enumerate_ideals(poset, limits)?
            .iter()
            .map(|i| i.indicator(poset.len()))
            .collect();
        Ok(Membership { poset, indicators })
    }

    fn contains(&self, t_degree: u64, exponents: &[u64], q: u64) -> bool {
        if t_degree < q {
            return false;
        }
        let r = (t_degree - q) as i64;
        let mut s = vec![0i64; exponents.len()];
        self.indicators.iter().any(|ind| {
            for (k, (&e, &inside)) in exponents.iter().zip(ind).enumerate() {
                s[k] = e as i64 - if inside { q as i64 } else { 0 };
            }
            in_semigroup(self.poset, r, &s)
        })
    }
}

/// `u ∈ 𝔪^[q]`.
pub fn in_frobenius_power(
    poset: &Poset,
    u: &HibiMonomial,
    q: u64,
    limits: &Limits,
) -> Result<bool> {
    if q < 2 {
        return Err(Error::BadParameters(format!("q = {q} must be at least 2")));
    }
    Ok(Membership::new(poset, limits)?.contains(u.t_degree(), u.exponents(), q))
}

/// Enumerates every monomial of a fixed t-degree, assigning exponents from
/// the maximal elements downward so that each stays at least its upper covers.
struct DegreeSearch<'a> {
    poset: &'a Poset,
    order: Vec<usize>,
    exponents: Vec<u64>,
    visited: u64,
    cap: u64,
}

impl DegreeSearch<'_> {
    fn find<F: FnMut(&[u64]) -> bool>(
        &mut self,
        degree: u64,
        accept: &mut F,
    ) -> Result<Option<Vec<u64>>> {
        self.assign(0, degree, accept)
    }

    fn assign<F: FnMut(&[u64]) -> bool>(
        &mut self,
        depth: usize,
        degree: u64,
        accept: &mut F,
    ) -> Result<Option<Vec<u64>>> {
        self.visited += 1;
        if self.visited > self.cap {
            return Err(Error::OracleCapExceeded(format!(
                "visited {} partial exponent vectors at t-degree {degree} (cap {})",
                self.visited - 1,
                self.cap
            )));
        }
        if depth == self.order.len() {
            return Ok(accept(&self.exponents).then(|| self.exponents.clone()));
        }
        let x = self.order[depth];
        let floor = self
            .poset
            .upper_covers(x)
            .iter()
            .map(|&y| self.exponents[y])
            .max()
            .unwrap_or(0);
        for e in floor..=degree {
            self.exponents[x] = e;
            if let Some(found) = self.assign(depth + 1, degree, accept)? {
                return Ok(Some(found));
            }
        }
        self.exponents[x] = 0;
        Ok(None)
    }
}

fn check_caps(poset: &Poset, q: u64, limits: &Limits) -> Result<()> {
    if q < 2 {
        return Err(Error::BadParameters(format!("q = {q} must be at least 2")));
    }
    if poset.len() > limits.oracle.max_elements {
        return Err(Error::OracleCapExceeded(format!(
            "{} elements exceeds the oracle cap of {}",
            poset.len(),
            limits.oracle.max_elements
        )));
    }
    if q > limits.oracle.max_q {
        return Err(Error::OracleCapExceeded(format!(
            "q = {q} exceeds the oracle cap of {}",
            limits.oracle.max_q
        )));
    }
    Ok(())
}

/// Computes `ν(q)` by exhaustive search and compares it with the prediction.
pub fn nu(poset: &Poset, q: u64, limits: &Limits) -> Result<FrobeniusReport> {
    check_caps(poset, q, limits)?;
    let membership = Membership::new(poset, limits)?;
    let upper = path_ranks(poset, limits)?.0.value;
    let predicted = ((upper + 2) as u64) * (q - 1);
    let bound = predicted + 2;
    // a product of more generators than this repeats some φ(I) q times
    let ceiling = membership.indicators.len() as u64 * (q - 1) + 1;

    let mut search = DegreeSearch {
        poset,
        order: poset.linear_extension().into_iter().rev().collect(),
        exponents: vec![0; poset.len()],
        visited: 0,
        cap: limits.max_states,
    };
    let witness_at = |search: &mut DegreeSearch, r: u64| {
        search
            .find(r, &mut |s: &[u64]| !membership.contains(r, s, q))
            .map(|found| found.map(|s| HibiMonomial::from_parts_unchecked(r, s)))
    };

    let (nu, witness) = match witness_at(&mut search, bound)? {
        Some(mut best) => {
            let mut r = bound;
            loop {
                if r >= ceiling {
                    return Err(Error::InternalDisagreement(format!(
                        "witness of t-degree {r} outside m^[{q}] exceeds the pigeonhole ceiling {ceiling}"
                    )));
                }
                match witness_at(&mut search, r + 1)? {
                    Some(w) => {
                        best = w;
                        r += 1;
                    }
                    None => break (r, best),
                }
            }
        }
        None => {
            let mut r = bound;
            loop {
                // t-degree 0 always has the witness 1
                r -= 1;
                if let Some(w) = witness_at(&mut search, r)? {
                    break (r, w);
                }
            }
        }
    };

    if nu > 0 {
        let closed = membership.indicators.iter().any(|ind| {
            let ideal = PosetIdeal::new(poset, (0..ind.len()).filter(|&k| ind[k]))
                .expect("enumerated ideal");
            witness
                .divide(poset, &phi(poset, &ideal))
                .is_some_and(|w| !membership.contains(w.t_degree(), w.exponents(), q))
        });
        if !closed {
            return Err(Error::InternalDisagreement(format!(
                "witness {} has no generator quotient outside m^[{q}]",
                witness.display(poset)
            )));
        }
    }

    Ok(FrobeniusReport {
        q,
        nu,
        witness,
        predicted,
        matches: nu == predicted,
    })
}

/// The ideal tower over the ascending vertices of `path`: `I_1 = <a_1>`,
/// `I_i = <a_i> ∪ I_{i-1}`.
pub fn witness_tower(poset: &Poset, path: &StarPath) -> Result<Vec<PosetIdeal>> {
    if !satisfies_star(poset, path) {
        return Err(Error::StarViolation(path.display(poset).to_string()));
    }
    if !path.is_maximal(poset) {
        return Err(Error::StarViolation(format!(
            "{} does not end at a maximal element",
            path.display(poset)
        )));
    }
    let mut tower: Vec<PosetIdeal> = Vec::new();
    for &a in decompose(path).ascending().flatten() {
        let next = PosetIdeal::principal(poset, a);
        let ideal = match tower.last() {
            Some(prev) => next.union(prev),
            None => next,
        };
        tower.push(PosetIdeal::new(poset, ideal.members().iter().copied())?);
    }
    Ok(tower)
}

/// `M = ∏ φ(I)^{q-1}` over `∅, I_1, ..., I_m`; lies in `𝔪^{(m+1)(q-1)}` but not in `𝔪^[q]`.
pub fn witness_monomial(poset: &Poset, path: &StarPath, q: u64) -> Result<HibiMonomial> {
    if q < 2 {
        return Err(Error::BadParameters(format!("q = {q} must be at least 2")));
    }
    let tower = witness_tower(poset, path)?;
    let mut m = phi(poset, &PosetIdeal::empty()).pow(q - 1);
    for ideal in &tower {
        m = &m * &phi(poset, ideal).pow(q - 1);
    }
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalEstimate {
    pub q: u64,
    pub nu: u64,
    /// `ν(q) / (q - 1)`.
    pub per_q_minus_one: Ratio<i64>,
    /// `ν(q) / q`.
    pub per_q: Ratio<i64>,
}

/// Finite-q approximations of the diagonal F-threshold with the limit `rank* + 2`.
pub fn c_diagonal_estimate(
    poset: &Poset,
    qs: &[u64],
    limits: &Limits,
) -> Result<(Vec<DiagonalEstimate>, i64)> {
    let mut out = Vec::with_capacity(qs.len());
    for &q in qs {
        let report = nu(poset, q, limits)?;
        out.push(DiagonalEstimate {
            q,
            nu: report.nu,
            per_q_minus_one: Ratio::new(report.nu as i64, q as i64 - 1),
            per_q: Ratio::new(report.nu as i64, q as i64),
        });
    }
    let prediction = path_ranks(poset, limits)?.0.value + 2;
    Ok((out, prediction))
}
