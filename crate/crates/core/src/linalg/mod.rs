//! Dense linear algebra over cyclotomic fields and over the integers.

mod field;
mod int;

pub use field::{diagonalize_finite_order, linear_forms, linear_substitute, FieldMatrix};
pub use int::{IntMatrix, SmithForm};
