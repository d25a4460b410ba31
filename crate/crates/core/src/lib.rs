//! Cubic bi-Cayley graphs over split metacyclic `p`-groups.
//!
//! The crate covers exact group arithmetic ([`metacyclic`]), permutation
//! groups ([`perm`]), simple graphs and their text formats ([`graph`]),
//! bi-Cayley graph construction and the `σ`/`δ` maps ([`bicayley`]),
//! automorphism groups, orbit counts and canonical forms ([`symmetry`]),
//! and the named families with their verifiers and a census ([`families`]).

pub(crate) mod arith;
pub mod bicayley;
pub mod error;
pub mod families;
pub mod graph;
pub mod metacyclic;
pub mod perm;
pub mod symmetry;

pub use bicayley::{BiCayleyGraph, Candidate, Condition};
pub use error::{Error, Result};
pub use graph::{Graph, GraphFormat};
pub use metacyclic::{Element, GroupMap, MetacyclicGroup, Presentation};
pub use perm::{PermGroup, Permutation};
pub use symmetry::{Classification, SymmetryReport};

// The guide under `book/` is compiled into doctests so its snippets stay
// in step with the library.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    mod permutations {}
    #[doc = include_str!("../../../book/src/bicayley.md")]
    mod bicayley {}
    #[doc = include_str!("../../../book/src/symmetry.md")]
    mod symmetry {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
