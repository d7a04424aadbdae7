//! Fence posets, circular fence posets, and the combinatorics attached to
//! them: exact rank polynomials, unimodality and interlacing classification,
//! closed forms, rowmotion orbits with their tiling encodings, and a
//! verification harness that sweeps composition space for the theorems and
//! conjectures in this area.
//!
//! A fence poset F(a) is a zigzag of chains whose lengths are given by a
//! composition a; the circular fence identifies the two ends. Lower order
//! ideals of either poset form a distributive lattice graded by ideal size,
//! and the generating polynomial of that grading is the rank polynomial.
//! Everything here is exact integer arithmetic; there are no floats.
//!
//! ```
//! use fences::{Composition, PosetKind, rank_poly};
//!
//! let alpha: Composition = "2,1,1,3".parse().unwrap();
//! let r = rank_poly(&alpha, PosetKind::Fence).unwrap();
//! assert_eq!(r.dense_i64().unwrap(), vec![1, 3, 5, 6, 6, 5, 3, 2, 1]);
//! ```
//!
//! The `book/` directory of the repository walks through the theory with
//! runnable snippets; each chapter is compiled as a doctest of this crate.

pub mod closed;
pub mod composition;
pub mod extremal;
pub mod poly;
pub mod poset;
pub mod rank;
pub mod report;
pub mod rowmotion;
pub mod shape;

pub use composition::{compositions_of, even_compositions_of, Composition, Step};
pub use num_bigint::BigInt;
pub use poly::{q_int, HalfExpPoly, RankPoly};
pub use poset::{circular_fence, fence, IdealSet, PosetKind, ZigzagPoset};
pub use rank::{rank_poly, rank_poly_oracle};
pub use report::{Finding, Report, Severity};
pub use shape::ShapeClass;

/// Errors for invalid inputs and exceeded enumeration bounds.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("composition must have at least one part")]
    EmptyComposition,
    #[error(
        "composition parts must be positive (got {part}); zero ends need the half-open constructor"
    )]
    ZeroPart { part: u32 },
    #[error("circular fences need an even number of positive parts, got ({composition})")]
    OddParts { composition: String },
    #[error("cannot parse composition from {0:?}")]
    Parse(String),
    #[error("poset has {nodes} nodes, above the enumeration bound {bound}")]
    EnumerationBound { nodes: usize, bound: usize },
    #[error("set is not an order ideal of the poset")]
    NotAnIdeal,
    #[error("half-open composition not allowed here")]
    HalfOpenNotAllowed,
    #[error("tiling is invalid: {0}")]
    InvalidTiling(String),
    #[error("tiling is valid but matches no rowmotion orbit")]
    UnrealizableTiling,
    #[error("orbit index {index} out of range ({count} orbits)")]
    OrbitIndex { index: usize, count: usize },
    #[error("closed-form evaluation failed: {0}")]
    ClosedForm(String),
}

#[cfg(doctest)]
mod book {
    //! Keeps the guide's code blocks honest: every chapter below is compiled
    //! and run by `cargo test --doc`.
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fences-and-ideals.md")]
    mod fences_and_ideals {}
    #[doc = include_str!("../../../book/src/rank-polynomials.md")]
    mod rank_polynomials {}
    #[doc = include_str!("../../../book/src/unimodality-and-symmetry.md")]
    mod unimodality_and_symmetry {}
    #[doc = include_str!("../../../book/src/closed-forms.md")]
    mod closed_forms {}
    #[doc = include_str!("../../../book/src/rowmotion.md")]
    mod rowmotion_chapter {}
    #[doc = include_str!("../../../book/src/harness.md")]
    mod harness {}
}
