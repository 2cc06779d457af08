//! Finite groupoids given by explicit tables, and the constructions built on
//! them: slices, induced functors and their kernels, the action groupoid,
//! and coset action groupoids.

pub mod action;
pub mod builders;
pub mod coset;
pub mod emit;
mod error;
pub mod explore;
pub mod functor;
pub mod gdsl;
pub mod gen;
pub mod groupoid;
pub mod kernel;
pub mod slice;
pub mod suite;
pub mod subgroupoid;

pub use error::{Error, Result};
pub use functor::{Functor, Variance};
pub use groupoid::{Groupoid, MorId, Morphism, ObjId, RawGroupoid, Violation, DEFAULT_SIZE_LIMIT};
pub use subgroupoid::Subgroupoid;
