//! Walks on the Hasse diagram, their ascending/descending decomposition,
//! condition (*) and the exhaustive search behind the upper and lower rank.
//!
//! A path starts at a minimal element, visits distinct elements, moves along
//! cover edges in either direction and ends with an upward step. Its upper
//! length counts the upward steps. A single element that is both minimal and
//! maximal is accepted as a path of upper length 0.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideals::PosetIdeal;
use crate::limits::Limits;
use crate::poset::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// `q_i ⋖ q_{i+1}`
    Up,
    /// `q_{i+1} ⋖ q_i`
    Down,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StarPath {
    vertices: Vec<usize>,
    steps: Vec<Step>,
}

impl StarPath {
    pub fn new(poset: &Poset, vertices: Vec<usize>) -> Result<StarPath> {
        let invalid = |why: &str| {
            Err(Error::InvalidPath(format!(
                "{why} in {}",
                render(poset, &vertices)
            )))
        };
        let Some(&first) = vertices.first() else {
            return invalid("empty vertex list");
        };
        if vertices.iter().any(|&v| v >= poset.len()) {
            return Err(Error::UnknownElement(format!(
                "#{}",
                vertices.iter().max().unwrap()
            )));
        }
        if !poset.is_minimal(first) {
            return invalid("first vertex is not minimal");
        }
        let mut seen = vec![false; poset.len()];
        for &v in &vertices {
            if std::mem::replace(&mut seen[v], true) {
                return invalid("repeated vertex");
            }
        }
        let mut steps = Vec::with_capacity(vertices.len().saturating_sub(1));
        for w in vertices.windows(2) {
            steps.push(match step_between(poset, w[0], w[1]) {
                Some(s) => s,
                None => return invalid("consecutive vertices are not a cover pair"),
            });
        }
        match steps.last() {
            Some(Step::Down) => return invalid("final step is not upward"),
            None if !poset.is_maximal(first) => {
                return invalid("single vertex that is not also maximal")
            }
            _ => {}
        }
        Ok(StarPath { vertices, steps })
    }

    pub fn from_names<S: AsRef<str>>(poset: &Poset, names: &[S]) -> Result<StarPath> {
        StarPath::new(poset, poset.indices(names)?)
    }

    fn from_parts(vertices: Vec<usize>, steps: Vec<Step>) -> StarPath {
        StarPath { vertices, steps }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().expect("paths are nonempty")
    }

    /// Number of upward steps.
    pub fn upper_length(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::Up).count()
    }

    /// Ends at a maximal element of the poset.
    pub fn is_maximal(&self, poset: &Poset) -> bool {
        poset.is_maximal(self.last())
    }

    pub fn names<'p>(&self, poset: &'p Poset) -> Vec<&'p str> {
        self.vertices.iter().map(|&v| poset.name(v)).collect()
    }

    pub fn display<'a>(&'a self, poset: &'a Poset) -> impl fmt::Display + 'a {
        PathDisplay {
            vertices: &self.vertices,
            poset,
        }
    }
}

struct PathDisplay<'a> {
    vertices: &'a [usize],
    poset: &'a Poset,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, &v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.poset.name(v))?;
        }
        write!(f, ")")
    }
}

fn render(poset: &Poset, vertices: &[usize]) -> String {
    if vertices.iter().all(|&v| v < poset.len()) {
        PathDisplay { vertices, poset }.to_string()
    } else {
        format!("{vertices:?}")
    }
}

fn step_between(poset: &Poset, from: usize, to: usize) -> Option<Step> {
    if poset.covers(from, to) {
        Some(Step::Up)
    } else if poset.covers(to, from) {
        Some(Step::Down)
    } else {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieceKind {
    Ascending,
    Descending,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub kind: PieceKind,
    pub vertices: Vec<usize>,
}

/// `A_1 + D_1 + A_2 + ... + D_{n-1} + A_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathDecomposition {
    pub pieces: Vec<Piece>,
}

impl PathDecomposition {
    pub fn ascending(&self) -> impl Iterator<Item = &[usize]> {
        self.pieces
            .iter()
            .filter(|p| p.kind == PieceKind::Ascending)
            .map(|p| p.vertices.as_slice())
    }

    pub fn descending(&self) -> impl Iterator<Item = &[usize]> {
        self.pieces
            .iter()
            .filter(|p| p.kind == PieceKind::Descending)
            .map(|p| p.vertices.as_slice())
    }
}

/// Splits a path at its locally maximal and locally minimal vertices.
///
/// `q_1` and every vertex entered by an upward step belong to ascending
/// pieces; vertices entered by a downward step belong to descending pieces.
pub fn decompose(path: &StarPath) -> PathDecomposition {
    decompose_raw(&path.vertices, &path.steps)
}

fn decompose_raw(vertices: &[usize], steps: &[Step]) -> PathDecomposition {
    let mut pieces = vec![Piece {
        kind: PieceKind::Ascending,
        vertices: vec![vertices[0]],
    }];
    for (&v, &step) in vertices[1..].iter().zip(steps) {
        let kind = match step {
            Step::Up => PieceKind::Ascending,
            Step::Down => PieceKind::Descending,
        };
        let current = pieces.last_mut().expect("nonempty");
        if current.kind == kind {
            current.vertices.push(v);
        } else {
            pieces.push(Piece {
                kind,
                vertices: vec![v],
            });
        }
    }
    PathDecomposition { pieces }
}

/// The ideal `<A>` generated by the top of an ascending run; `<∅> = ∅`.
pub fn principal_ideal_of_run(poset: &Poset, run: &[usize]) -> PosetIdeal {
    match run.last() {
        Some(&top) => PosetIdeal::principal(poset, top),
        None => PosetIdeal::empty(),
    }
}

/// Condition (*) evaluated on the decomposition: for every `i < n`,
/// `D_i` avoids `<A_1> ∪ ... ∪ <A_{i-1}> ∪ <A_i \ t(A_i)> ∪ {t(A_i)}` and
/// `A_{i+1}` avoids `<A_1> ∪ ... ∪ <A_i>`.
pub fn satisfies_star(poset: &Poset, path: &StarPath) -> bool {
    star_by_decomposition(poset, &path.vertices, &path.steps)
}

fn star_by_decomposition(poset: &Poset, vertices: &[usize], steps: &[Step]) -> bool {
    let dec = decompose_raw(vertices, steps);
    let asc: Vec<&[usize]> = dec.ascending().collect();
    let desc: Vec<&[usize]> = dec.descending().collect();
    let n = poset.len();
    // membership in <A_1> ∪ ... ∪ <A_i>, grown as i advances
    let mut generated = vec![false; n];
    for (i, d) in desc.iter().enumerate() {
        let a = asc[i];
        let top = *a.last().expect("ascending pieces are nonempty");
        let below_pre_top = |x: usize| a.len() >= 2 && poset.le(x, a[a.len() - 2]);
        if d.iter()
            .any(|&x| generated[x] || below_pre_top(x) || x == top)
        {
            return false;
        }
        for (x, g) in generated.iter_mut().enumerate() {
            *g |= poset.le(x, top);
        }
        match asc.get(i + 1) {
            Some(next) if next.iter().any(|&x| generated[x]) => return false,
            _ => {}
        }
    }
    true
}

/// Condition (*) evaluated vertex-wise: whenever `q_r` is locally maximal or
/// locally minimal, no later vertex lies below an earlier one across `r`.
pub fn satisfies_star_pivot(poset: &Poset, path: &StarPath) -> bool {
    let v = &path.vertices;
    let pivots = (1..v.len().saturating_sub(1)).filter(|&r| path.steps[r - 1] != path.steps[r]);
    for r in pivots {
        for &later in &v[r + 1..] {
            if v[..r].iter().any(|&earlier| poset.le(later, earlier)) {
                return false;
            }
        }
    }
    true
}

/// Appends upward covers (smallest index first) until the path ends at a
/// maximal element. Condition (*) survives every such step.
pub fn extend_to_maximal(poset: &Poset, path: &StarPath) -> Result<StarPath> {
    if !satisfies_star(poset, path) {
        return Err(Error::StarViolation(render(poset, &path.vertices)));
    }
    let mut vertices = path.vertices.clone();
    let mut steps = path.steps.clone();
    loop {
        let last = *vertices.last().expect("nonempty");
        let Some(&next) = poset.upper_covers(last).first() else {
            break;
        };
        if vertices.contains(&next) {
            return Err(Error::StarViolation(format!(
                "{} cannot climb to visited {}",
                render(poset, &vertices),
                poset.name(next)
            )));
        }
        vertices.push(next);
        steps.push(Step::Up);
    }
    Ok(StarPath::from_parts(vertices, steps))
}

/// Which paths an enumeration reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathQuery {
    /// Only paths ending at a maximal element.
    pub maximal_only: bool,
    /// Only paths satisfying condition (*).
    pub star_only: bool,
}

impl PathQuery {
    pub const MAXIMAL_STAR: PathQuery = PathQuery {
        maximal_only: true,
        star_only: true,
    };
}

/// All maximal paths satisfying condition (*), in lexicographic order of
/// their vertex sequences.
pub fn enumerate_maximal_star_paths(poset: &Poset, limits: &Limits) -> Result<Vec<StarPath>> {
    enumerate_paths(poset, PathQuery::MAXIMAL_STAR, limits)
}

/// Depth-first enumeration over walks on the Hasse diagram.
///
/// With `star_only`, a prefix is abandoned as soon as it violates the
/// vertex-wise form of condition (*); a violation involves only interior
/// pivots, so no extension can repair it. Reported paths are re-checked
/// against the decomposition form.
pub fn enumerate_paths(poset: &Poset, query: PathQuery, limits: &Limits) -> Result<Vec<StarPath>> {
    let mut out = Vec::new();
    visit_paths(poset, query, limits, |p| out.push(p.clone()))?;
    Ok(out)
}

/// Upper or lower rank with the lexicographically first path attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankWitness {
    /// `-1` when the poset is empty and no path exists.
    pub value: i64,
    pub path: Option<StarPath>,
}

/// `(rank*, rank_*)` from a single enumeration.
pub fn path_ranks(poset: &Poset, limits: &Limits) -> Result<(RankWitness, RankWitness)> {
    let mut upper: Option<StarPath> = None;
    let mut lower: Option<StarPath> = None;
    visit_paths(poset, PathQuery::MAXIMAL_STAR, limits, |p| {
        let len = p.upper_length();
        if upper.as_ref().is_none_or(|u| len > u.upper_length()) {
            upper = Some(p.clone());
        }
        if lower.as_ref().is_none_or(|l| len < l.upper_length()) {
            lower = Some(p.clone());
        }
    })?;
    let witness = |p: Option<StarPath>| RankWitness {
        value: p.as_ref().map_or(-1, |p| p.upper_length() as i64),
        path: p,
    };
    Ok((witness(upper), witness(lower)))
}

/// Maximum upper length over maximal (*)-paths.
pub fn upper_rank(poset: &Poset, limits: &Limits) -> Result<RankWitness> {
    Ok(path_ranks(poset, limits)?.0)
}

/// Minimum upper length over maximal (*)-paths.
pub fn lower_rank(poset: &Poset, limits: &Limits) -> Result<RankWitness> {
    Ok(path_ranks(poset, limits)?.1)
}

struct Search<'a, F> {
    poset: &'a Poset,
    query: PathQuery,
    cap: u64,
    visited: u64,
    vertices: Vec<usize>,
    steps: Vec<Step>,
    on_path: Vec<bool>,
    report: F,
}

fn visit_paths<F: FnMut(&StarPath)>(
    poset: &Poset,
    query: PathQuery,
    limits: &Limits,
    report: F,
) -> Result<()> {
    let mut search = Search {
        poset,
        query,
        cap: limits.max_states,
        visited: 0,
        vertices: Vec::new(),
        steps: Vec::new(),
        on_path: vec![false; poset.len()],
        report,
    };
    for root in poset.minimal_elements() {
        search.tick()?;
        search.vertices.push(root);
        search.on_path[root] = true;
        if poset.is_maximal(root) {
            search.emit();
        }
        search.descend(0)?;
        search.on_path[root] = false;
        search.vertices.pop();
    }
    Ok(())
}

impl<F: FnMut(&StarPath)> Search<'_, F> {
    fn tick(&mut self) -> Result<()> {
        self.visited += 1;
        if self.visited > self.cap {
            return Err(Error::SearchCapExceeded { cap: self.cap });
        }
        Ok(())
    }

    fn emit(&mut self) {
        if self.query.star_only && !star_by_decomposition(self.poset, &self.vertices, &self.steps) {
            return;
        }
        let path = StarPath::from_parts(self.vertices.clone(), self.steps.clone());
        (self.report)(&path);
    }

    /// `last_pivot` is the index of the latest interior locally extremal vertex, 0 if none.
    fn descend(&mut self, last_pivot: usize) -> Result<()> {
        let poset = self.poset;
        let tail = *self.vertices.last().expect("nonempty");
        let mut neighbours: Vec<usize> = poset
            .upper_covers(tail)
            .iter()
            .chain(poset.lower_covers(tail))
            .copied()
            .filter(|&w| !self.on_path[w])
            .collect();
        neighbours.sort_unstable();

        for next in neighbours {
            self.tick()?;
            let step = if poset.covers(tail, next) {
                Step::Up
            } else {
                Step::Down
            };
            let k = self.vertices.len();
            let pivot = match self.steps.last() {
                Some(&prev) if prev != step => k - 1,
                _ => last_pivot,
            };
            if self.query.star_only
                && self.vertices[..pivot]
                    .iter()
                    .any(|&earlier| poset.le(next, earlier))
            {
                continue;
            }
            self.vertices.push(next);
            self.steps.push(step);
            self.on_path[next] = true;
            if step == Step::Up && (!self.query.maximal_only || poset.is_maximal(next)) {
                self.emit();
            }
            self.descend(pivot)?;
            self.on_path[next] = false;
            self.steps.pop();
            self.vertices.pop();
        }
        Ok(())
    }
}
