//! Even transformation monoids: the groups Γ_n and monoids Δ_n, Σ_n of maps on
//! `[n]` whose injective restrictions to `(n-1)`-subsets are all even.

pub mod counting;
pub mod engine;
pub mod error;
pub mod family;
pub mod named;
pub mod perm;
pub mod syntax;
pub mod verify;

pub use error::{Error, Result};
pub use family::{FamilySpec, FamilyTag};
pub use perm::{CycleExpr, KernelPartition, PartialPerm, Parity, Transformation};

#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/transformations.md")]
    mod transformations {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
}
