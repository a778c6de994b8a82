//! Exact linear algebra over ℚ and 𝔽_p: matrices, canonical subspaces,
//! quotients and tensor-index bookkeeping.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{
    add_vectors, apply_on_factor, axpy, basis_vector, is_zero_vector, rref, scale_vector,
    sub_vectors, tensor_vectors, zero_vector, Matrix, Rref, TensorIndex,
};
pub use scalar::{Field, Scalar};
pub use subspace::{preimage_subspace, quotient_space, Quotient, Subspace};

