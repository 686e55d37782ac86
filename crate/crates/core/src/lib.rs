pub mod cfk;
pub mod error;
pub mod f2;
pub(crate) mod homology;
pub mod invariants;
pub mod knots;
pub mod laurent;
pub mod pl;
pub mod reduce;
pub mod verify;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/complexes.md")]
    mod complexes {}
    #[doc = include_str!("../../../book/src/expressions.md")]
    mod expressions {}
    #[doc = include_str!("../../../book/src/simplification.md")]
    mod simplification {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/upsilon.md")]
    mod upsilon {}
}
