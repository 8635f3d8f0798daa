//! Tropical plane curves over Q(t) with the t-adic valuation, and faithful
//! re-embeddings of hyperelliptic curves of genus at most three.

pub mod algebra;
pub mod cones;
pub mod error;
pub(crate) mod ser;
pub mod hyperelliptic;
pub mod projections;
pub mod tropical;

pub use error::{Error, Result};
