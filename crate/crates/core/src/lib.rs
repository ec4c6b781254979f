//! Invariants of Hibi rings computed from the underlying poset.
//!
//! For a finite poset `P` with Hibi ring `R` and graded maximal ideal `𝔪`:
//!
//! * the diagonal F-threshold `c^𝔪(𝔪)` is `rank* P + 2`,
//! * the F-pure threshold `fpt(𝔪)` is `rank_* P + 2`,
//! * `-a(R)` is `rank P + 2`,
//!
//! where the upper and lower ranks are the largest and smallest number of
//! upward steps along maximal paths of the Hasse diagram satisfying
//! condition (*). See [`analysis::analyze`] for the combined report,
//! [`levels`] for a polynomial-time F-pure threshold, and [`oracle`] for a
//! brute-force check of the diagonal F-threshold on small posets.
//!
//! ```
//! use hibi::{analyze, Limits, Poset};
//!
//! let p = Poset::build(["1", "2", "3", "4"], [("1", "3"), ("2", "3"), ("2", "4")]).unwrap();
//! let report = analyze(&p, &Limits::default()).unwrap();
//! assert_eq!((report.c_diagonal, report.fpt, report.minus_a), (4, 3, 3));
//! ```

pub mod analysis;
pub mod cli;
pub mod error;
pub mod families;
pub mod ideals;
pub mod io;
pub mod levels;
pub mod limits;
pub mod oracle;
pub mod paths;
pub mod poset;

pub use analysis::{analyze, InvariantReport};
pub use error::{Error, Result};
pub use ideals::{HibiMonomial, PosetIdeal};
pub use levels::{compute_levels, fpt_by_levels, LevelLabeling};
pub use limits::Limits;
pub use paths::{StarPath, Step};
pub use poset::{ExtendedPoset, Poset};
