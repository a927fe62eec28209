//! Exact linear algebra over GF(2).
//!
//! Vectors and matrices are bit-packed into `u64` words and reduced with
//! dense Gaussian elimination. Every basis returned here (kernels, images,
//! homology representatives) is chosen from pivot positions, so results are
//! reproducible run to run.

mod bitvec;
mod complex;
mod matrix;

pub use bitvec::BitVec;
pub use complex::{
    induced_map, induced_map_on_homology, F2ChainComplex, F2Complex, Homology,
};
pub use matrix::{image_intersection_basis, image_intersection_rank, F2Matrix};

/// GF(2) rank.
pub fn rank(m: &F2Matrix) -> usize {
    m.rank()
}

pub fn kernel_basis(m: &F2Matrix) -> Vec<BitVec> {
    m.kernel_basis()
}

pub fn image_basis(m: &F2Matrix) -> Vec<BitVec> {
    m.image_basis()
}

pub fn homology_dimensions(c: &F2ChainComplex) -> Vec<usize> {
    c.homology_dimensions()
}
