//! u-integers, u-binomials and the matrix families built from them.

mod binomial;
mod ctable;
mod matrix;

pub use binomial::{k_series, sym_u_binomial, u_binomial, u_factorial, u_integer};
pub use ctable::{c_table, CTable};
pub use matrix::{matrix_entry, verify_product, EntryTable, MatrixKind};
