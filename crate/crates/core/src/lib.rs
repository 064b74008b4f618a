//! Formal Puiseux series solutions of autonomous first-order algebraic
//! ODEs `F(y, y') = 0`, around a finite point or at infinity, computed in
//! exact arithmetic over towers of algebraic extensions.

pub mod algnum;
pub mod briot;
pub mod error;
pub mod oracle;
pub mod poly;
pub mod places;
pub mod reparam;
pub mod series;
pub mod solver;

pub use error::{Error, Result};
