//! Finite posets stored as a Hasse diagram plus a reachability matrix.
//!
//! Elements are addressed by their declaration index. Declaration order is the
//! tie-breaker for every search in the crate, so two posets built from the same
//! input always produce the same witnesses.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    /// `upper[x]` lists the elements covering `x`, ascending by index.
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    /// Row-major `len * len` matrix, `leq[x * len + y]` iff `x <= y`.
    leq: Vec<bool>,
}

impl Poset {
    /// Builds a poset from element names and arbitrary order relations `x < y`.
    ///
    /// The relations are closed transitively and then reduced to the cover
    /// relation, so redundant pairs such as `(a, c)` next to `(a, b), (b, c)`
    /// are accepted and dropped.
    pub fn build<E, R, A, B>(elements: E, relations: R) -> Result<Poset>
    where
        E: IntoIterator,
        E::Item: Into<String>,
        R: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let names: Vec<String> = elements.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        let mut pairs = Vec::new();
        for (a, b) in relations {
            let lookup = |s: &str| {
                index
                    .get(s)
                    .copied()
                    .ok_or_else(|| Error::UnknownElement(s.to_string()))
            };
            pairs.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        Poset::from_indexed(names, &pairs)
    }

    /// Same as [`Poset::build`] with relations given as index pairs.
    pub fn from_indexed(names: Vec<String>, relations: &[(usize, usize)]) -> Result<Poset> {
        let n = names.len();
        let mut index = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(Error::UnknownElement(format!("#{}", a.max(b))));
            }
            if a == b {
                return Err(Error::Cycle(names[a].clone()));
            }
            succ[a].push(b);
        }

        // strict reachability by a DFS from every element
        let mut lt = vec![false; n * n];
        let mut stack = Vec::new();
        for start in 0..n {
            stack.extend(succ[start].iter().copied());
            while let Some(y) = stack.pop() {
                if y == start {
                    return Err(Error::Cycle(names[start].clone()));
                }
                if !lt[start * n + y] {
                    lt[start * n + y] = true;
                    stack.extend(succ[y].iter().copied());
                }
            }
        }

        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for x in 0..n {
            for y in 0..n {
                if !lt[x * n + y] {
                    continue;
                }
                let between = (0..n).any(|z| lt[x * n + z] && lt[z * n + y]);
                if !between {
                    upper[x].push(y);
                    lower[y].push(x);
                }
            }
        }

        let mut leq = lt;
        for x in 0..n {
            leq[x * n + x] = true;
        }
        Ok(Poset {
            names,
            index,
            upper,
            lower,
            leq,
        })
    }

    pub fn empty() -> Poset {
        Poset::from_indexed(Vec::new(), &[]).expect("empty poset is valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    /// Resolves a list of names to indices.
    pub fn indices<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<usize>> {
        names.iter().map(|s| self.index_of(s.as_ref())).collect()
    }

    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.len() + y]
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.le(x, y)
    }

    /// `x <= y` by name.
    pub fn leq(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.le(self.index_of(x)?, self.index_of(y)?))
    }

    /// True iff `y` covers `x`.
    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.upper[x].binary_search(&y).is_ok()
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    /// All cover pairs `(x, y)` with `x ⋖ y`, ordered by `x` then `y`.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| self.upper[x].iter().map(move |&y| (x, y)))
            .collect()
    }

    pub fn is_minimal(&self, x: usize) -> bool {
        self.lower[x].is_empty()
    }

    pub fn is_maximal(&self, x: usize) -> bool {
        self.upper[x].is_empty()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.is_minimal(x)).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.is_maximal(x)).collect()
    }

    /// Elements `<= x`, ascending by index.
    pub fn down_set(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.le(y, x)).collect()
    }

    /// A linear extension: every element comes after everything below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let below: Vec<usize> = (0..n)
            .map(|x| (0..n).filter(|&y| self.lt(y, x)).count())
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (below[x], x));
        order
    }

    /// Longest and shortest saturated chain from a minimal element up to each element.
    fn chain_heights(&self) -> (Vec<i64>, Vec<i64>) {
        let n = self.len();
        let mut longest = vec![0i64; n];
        let mut shortest = vec![0i64; n];
        for x in self.linear_extension() {
            if let Some(m) = self.lower[x].iter().map(|&y| longest[y] + 1).max() {
                longest[x] = m;
            }
            if let Some(m) = self.lower[x].iter().map(|&y| shortest[y] + 1).min() {
                shortest[x] = m;
            }
        }
        (longest, shortest)
    }

    /// Length of the longest chain; `-1` for the empty poset.
    pub fn rank(&self) -> i64 {
        let (longest, _) = self.chain_heights();
        longest.into_iter().max().unwrap_or(-1)
    }

    /// Length of the shortest maximal chain; `-1` for the empty poset.
    pub fn min_maximal_chain(&self) -> i64 {
        let (_, shortest) = self.chain_heights();
        self.maximal_elements()
            .into_iter()
            .map(|x| shortest[x])
            .min()
            .unwrap_or(-1)
    }

    /// All maximal chains have the same length. This is also exactly when the
    /// Hibi ring is Gorenstein.
    pub fn is_pure(&self) -> bool {
        self.min_maximal_chain() == self.rank()
    }

    /// Connected as an undirected Hasse graph. The empty poset counts as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in self.upper[x].iter().chain(&self.lower[x]) {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == n
    }

    pub fn extend(&self) -> ExtendedPoset {
        ExtendedPoset::new(self)
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .cover_pairs()
            .into_iter()
            .map(|(x, y)| format!("{}<{}", self.names[x], self.names[y]))
            .collect();
        f.debug_struct("Poset")
            .field("elements", &self.names)
            .field("covers", &covers)
            .finish()
    }
}

/// `P` with a new bottom `-inf` below every minimal element and a new top
/// `inf` above every maximal element.
///
/// Base elements keep their indices; the bottom is `base_len()` and the top is
/// `base_len() + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedPoset {
    poset: Poset,
    base_len: usize,
}

impl ExtendedPoset {
    fn new(base: &Poset) -> ExtendedPoset {
        let n = base.len();
        let fresh = |stem: &str| {
            let mut name = stem.to_string();
            while base.index.contains_key(&name) {
                name.push('\'');
            }
            name
        };
        let mut names = base.names.clone();
        names.push(fresh("-inf"));
        names.push(fresh("inf"));
        let (bottom, top) = (n, n + 1);
        let mut relations = base.cover_pairs();
        relations.extend(base.minimal_elements().into_iter().map(|m| (bottom, m)));
        relations.extend(base.maximal_elements().into_iter().map(|m| (m, top)));
        if n == 0 {
            relations.push((bottom, top));
        }
        let poset =
            Poset::from_indexed(names, &relations).expect("extension of a poset is a poset");
        ExtendedPoset { poset, base_len: n }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn base_len(&self) -> usize {
        self.base_len
    }

    pub fn bottom(&self) -> usize {
        self.base_len
    }

    pub fn top(&self) -> usize {
        self.base_len + 1
    }

    pub fn is_base(&self, x: usize) -> bool {
        x < self.base_len
    }
}
