//! Exact rank computations over GF(2) and over the rationals.
//!
//! Everything here is pure and allocation-local, so the functions can be
//! called from any number of threads at once.

mod bareiss;
mod gf2;

pub use bareiss::IntMatrix;
pub use gf2::Gf2Matrix;

/// Rank of `m` over the two-element field.
pub fn gf2_rank(m: &Gf2Matrix) -> usize {
    m.rank()
}

/// Dimension of the (right) kernel of `m` over GF(2): `cols - rank`.
pub fn gf2_kernel_dim(m: &Gf2Matrix) -> usize {
    m.cols() - m.rank()
}

/// Exact rank of an integer matrix over the rationals.
pub fn rat_rank(m: &IntMatrix) -> usize {
    m.rank()
}
