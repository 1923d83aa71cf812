//! Exact computational algebra for twisted Drinfeld doubles of finite groups.
//!
//! The crate constructs the quasi-Hopf algebra D^ω(G) from a finite group G
//! and a normalized 3-cocycle ω, verifies every axiom by exhaustive sweeps in
//! exact cyclotomic arithmetic, decomposes morphisms between twisted doubles
//! into their (p, u, r, v) components, decides cohomologousness of 3-cocycles
//! through an integer Smith-normal-form solver, and classifies rigid
//! automorphism subgroups.
//!
//! Verification sweeps are data-parallel; the `parallel` feature (on by
//! default) runs them on a rayon pool, and disabling it falls back to
//! sequential loops with identical results.

pub mod classify;
pub mod cocycle;
pub mod components;
pub mod double;
pub mod error;
pub mod files;
pub mod group;
pub mod morphism;
pub mod report;
pub mod scalar;
pub mod scenarios;
pub mod snf;
pub mod sweep;
pub mod tensor;

pub use error::{
    ClassifyError, CocycleError, ComponentsError, DoubleError, GroupError, MorphismError,
    ScalarError,
};
