mod arith;
pub mod cli;
pub mod error;
pub mod field;
pub mod linear_space;
pub mod num_theory;
pub mod perm;
pub mod pipeline;
pub mod poly;
pub mod spread;
pub mod sweep;

pub use error::{Error, Result};
pub use field::{FieldElement, FieldTower, Level};
pub use poly::{PolyRing, Polynomial};
