//! Exact scalar arithmetic: rationals and cyclotomic numbers.

pub mod cyclotomic;
pub mod rational;

pub use cyclotomic::{CycField, CycNum};
pub use rational::Rational;
