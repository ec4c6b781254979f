//! Named posets and parametrized families.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::io::to_json;
use crate::limits::Limits;
use crate::paths::path_ranks;
use crate::poset::Poset;

fn chain_named(prefix: &str, n: usize) -> Poset {
    let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
    let relations: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Poset::from_indexed(names, &relations).expect("a chain is a poset")
}

/// `c1 < c2 < ... < cn`.
pub fn chain(n: usize) -> Poset {
    chain_named("c", n)
}

/// `a1, ..., an`, pairwise incomparable.
pub fn antichain(n: usize) -> Poset {
    Poset::from_indexed((1..=n).map(|i| format!("a{i}")).collect(), &[])
        .expect("an antichain is a poset")
}

/// Elements of `p` become `l.x`, elements of `q` become `r.x`.
pub fn disjoint_union(p: &Poset, q: &Poset) -> Poset {
    let names = p
        .names()
        .iter()
        .map(|x| format!("l.{x}"))
        .chain(q.names().iter().map(|x| format!("r.{x}")))
        .collect();
    let shift = p.len();
    let relations: Vec<(usize, usize)> = p
        .cover_pairs()
        .into_iter()
        .chain(
            q.cover_pairs()
                .into_iter()
                .map(|(x, y)| (x + shift, y + shift)),
        )
        .collect();
    Poset::from_indexed(names, &relations).expect("prefixed names are distinct")
}

/// Two disjoint chains `p1 < ... < p_{m-1}` and `q1 < ... < q_{n-1}`; its Hibi
/// ring is the Segre product of polynomial rings in `m` and `n` variables.
pub fn segre_poset(m: usize, n: usize) -> Result<Poset> {
    if m < 2 || n < 2 {
        return Err(Error::BadParameters(format!(
            "segre needs m, n >= 2, got ({m}, {n})"
        )));
    }
    let names: Vec<String> = (1..m)
        .map(|i| format!("p{i}"))
        .chain((1..n).map(|i| format!("q{i}")))
        .collect();
    let shift = m - 1;
    let relations: Vec<(usize, usize)> = (1..m - 1)
        .map(|i| (i - 1, i))
        .chain((1..n - 1).map(|i| (shift + i - 1, shift + i)))
        .collect();
    Ok(Poset::from_indexed(names, &relations).expect("two chains form a poset"))
}

pub const SAMPLE_TAGS: [&str; 3] = ["ex1_2", "ex1_9", "ex1_11"];

/// Small worked posets.
///
/// * `ex1_2`: `1 < 3`, `2 < 3`, `2 < 4`
/// * `ex1_9`: six elements where the path through every element breaks (*)
/// * `ex1_11`: six elements with upper rank 3 and rank and lower rank 2
pub fn sample_poset(tag: &str) -> Result<Poset> {
    let q = ["q1", "q2", "q3", "q4", "q5", "q6"];
    match tag {
        "ex1_2" => Poset::build(["1", "2", "3", "4"], [("1", "3"), ("2", "3"), ("2", "4")]),
        "ex1_9" => Poset::build(
            q,
            [
                ("q1", "q2"),
                ("q2", "q3"),
                ("q4", "q3"),
                ("q5", "q4"),
                ("q5", "q2"),
                ("q5", "q6"),
            ],
        ),
        "ex1_11" => Poset::build(
            q,
            [
                ("q1", "q2"),
                ("q2", "q3"),
                ("q4", "q2"),
                ("q4", "q5"),
                ("q5", "q6"),
            ],
        ),
        other => Err(Error::UnknownTag(other.to_string())),
    }
}

/// Which shape [`example44`] produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealizationCase {
    /// `a = b`: one chain, with a side chain when `c < b`.
    Chain,
    /// `a > 2b`: `e >= 3` stacked chains joined by links.
    Stacked,
    /// `b < a <= 2b` with a long link between two chains.
    Linked,
    /// `b < a <= 2b` with a direct cover between two chains and a side chain.
    Hooked,
}

struct Builder {
    names: Vec<String>,
    relations: Vec<(usize, usize)>,
}

impl Builder {
    fn node(&mut self, name: String) -> usize {
        match self.names.iter().position(|n| *n == name) {
            Some(i) => i,
            None => {
                self.names.push(name);
                self.names.len() - 1
            }
        }
    }

    fn cover(&mut self, x: usize, y: usize) {
        self.relations.push((x, y));
    }

    /// `q{i},1 < ... < q{i},{b+1}`.
    fn main_chain(&mut self, i: usize, b: usize) {
        let mut prev = self.node(format!("q{i},1"));
        for j in 2..=b + 1 {
            let next = self.node(format!("q{i},{j}"));
            self.cover(prev, next);
            prev = next;
        }
    }

    /// A chain of `length` covers from `bottom` to `top` through fresh
    /// elements `q'{i},2 ... q'{i},{length}`.
    fn link(&mut self, i: usize, bottom: usize, top: usize, length: usize) {
        let mut prev = bottom;
        for j in 2..=length {
            let next = self.node(format!("q'{i},{j}"));
            self.cover(prev, next);
            prev = next;
        }
        self.cover(prev, top);
    }

    /// A side chain of `length` covers hanging above `bottom`.
    fn side_chain(&mut self, i: usize, bottom: usize, length: usize) {
        let mut prev = bottom;
        for j in 2..=length + 1 {
            let next = self.node(format!("q'{i},{j}"));
            self.cover(prev, next);
            prev = next;
        }
    }
}

/// A connected poset with upper rank `a`, rank `b` and lower rank `c`, for
/// any `a >= b >= c >= 1`.
///
/// Write `a = d·b + r` with `1 <= r <= b`. The main chains
/// `q{i},1 < ... < q{i},{b+1}` all have length `b`. For `d >= 2` there are
/// `d + 1` of them; chain `i + 1` starts below the top of chain `i` through a
/// link of length `c`, and the last chain attaches to `q{d},{r+1}` through a
/// link of length `max(c - (b - r + 1), 0) + 1`. For `d = 1` two chains are
/// joined at `q1,{r+1}` either through a link of length `c - b + r` or, when
/// that would be empty, directly, with a side chain of length `c` above
/// `q1,1` to bring the lower rank down. The result is re-analysed and any
/// disagreement is reported as [`Error::ConstructionMismatch`].
pub fn example44(
    a: usize,
    b: usize,
    c: usize,
    limits: &Limits,
) -> Result<(Poset, RealizationCase)> {
    if !(c >= 1 && b >= c && a >= b) {
        return Err(Error::BadParameters(format!(
            "need a >= b >= c >= 1, got ({a}, {b}, {c})"
        )));
    }
    let d = a.div_ceil(b) - 1;
    let r = a - d * b;
    let mut g = Builder {
        names: Vec::new(),
        relations: Vec::new(),
    };
    let case = match d {
        0 => {
            g.main_chain(1, b);
            if c < b {
                let root = g.node("q1,1".into());
                g.side_chain(1, root, c);
            }
            RealizationCase::Chain
        }
        1 => {
            g.main_chain(1, b);
            g.main_chain(2, b);
            let bottom = g.node("q2,1".into());
            let top = g.node(format!("q1,{}", r + 1));
            if c > b - r {
                g.link(1, bottom, top, c + r - b);
                RealizationCase::Linked
            } else {
                g.cover(bottom, top);
                let root = g.node("q1,1".into());
                g.side_chain(1, root, c);
                RealizationCase::Hooked
            }
        }
        _ => {
            let e = d + 1;
            for i in 1..=e {
                g.main_chain(i, b);
            }
            for i in 1..=e - 2 {
                let bottom = g.node(format!("q{},1", i + 1));
                let top = g.node(format!("q{i},{}", b + 1));
                g.link(i, bottom, top, c);
            }
            let bottom = g.node(format!("q{e},1"));
            let top = g.node(format!("q{},{}", e - 1, r + 1));
            let f = (c + r).saturating_sub(b + 1) + 1;
            g.link(e - 1, bottom, top, f);
            RealizationCase::Stacked
        }
    };
    let poset = Poset::from_indexed(g.names, &g.relations)?;

    let (upper, lower) = path_ranks(&poset, limits)?;
    let found = (upper.value, poset.rank(), lower.value);
    let expected = (a as i64, b as i64, c as i64);
    if found != expected || !poset.is_connected() {
        return Err(Error::ConstructionMismatch {
            expected,
            found,
            poset: to_json(&poset),
        });
    }
    Ok((poset, case))
}

pub fn example44_poset(a: usize, b: usize, c: usize, limits: &Limits) -> Result<Poset> {
    example44(a, b, c, limits).map(|(p, _)| p)
}

/// A random poset on `x1..xn`. The elements are shuffled into a random
/// order and each pair is related along that order independently with
/// probability `density`; the relation is then reduced.
pub fn random_poset(n: usize, density: f64, seed: u64) -> Poset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut relations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                relations.push((order[i], order[j]));
            }
        }
    }
    Poset::from_indexed((1..=n).map(|i| format!("x{i}")).collect(), &relations)
        .expect("relations follow a linear order")
}
