//! Exact computation of derivations and N-derivations of graded Lie
//! algebras on finite truncations.

pub mod algebra;
pub mod builders;
pub mod cli;
pub mod derivation;
pub mod error;
pub mod format;
pub mod linalg;
pub mod property_p;
pub mod rational;
pub mod report;

pub use algebra::{Degree, Element, GradedAlgebra};
pub use error::{Error, Result};
pub use rational::Rational;
