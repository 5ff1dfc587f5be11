//! diagcat — a finite, exact computation engine for diagram categories.
//!
//! Given a finite index category `I` (explicit object, morphism, and
//! composition tables) and a concrete closed symmetric monoidal base
//! category `M` (finite sets, or finite-dimensional rational vector
//! spaces), this crate computes in the functor category `M^I`:
//! representables, ends and coends, mapping objects, free/evaluation
//! and restriction adjunctions, right Kan extensions, internal homs,
//! Reedy latching/matching objects, and pushout products — and verifies
//! every isomorphism and closure statement by exhaustive finite
//! computation with exact arithmetic (no floating point anywhere).
//!
//! The crate is organized as a library; `examples/` contains one
//! runnable program per major capability, and the `diagcat` binary is a
//! thin batch runner over the check registry in [`checks`].

pub mod base;
pub mod checks;
pub mod diagram;
pub mod fincat;
pub mod fixtures;
pub mod gen;
pub mod io;
pub mod kan;
pub mod ratmat;
pub mod reedy;
pub mod report;
pub mod rng;

pub use base::{BaseMor, BaseObj, Backend, ModelClasses};
pub use fincat::{CatFunctor, FinCat, MorId, ObjId, ReedyData};
