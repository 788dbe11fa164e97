//! Certified numerics for covolume bounds of arithmetic lattices in
//! symplectic groups.

pub mod bounds;
pub mod certifier;
pub mod error;
pub mod localfactors;
pub mod numberfields;
pub mod optimizer;
pub mod poly;
pub mod rigor;
pub mod specfun;

pub use error::{Error, Result};
pub use rigor::{Cmp, Interval, Rational};

/// Default working precision in bits.
pub const DEFAULT_PRECISION: u32 = 256;
