//! Exact arithmetic in towers of simple extensions of the rationals, with
//! dynamic evaluation and free transcendental parameters.

mod elem;
pub mod rational;
mod tower;
pub mod upoly;

pub use elem::{Alg, Mono, TermRepr};
pub use tower::{Level, Tower, TowerRepr, ZeroTest};

pub type Rational = num_rational::BigRational;
