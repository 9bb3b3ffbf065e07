//! Exact scalar arithmetic in `K = Q(w)` with `w^4 = -1`, and exact dense
//! linear algebra over `K`. No floating point anywhere.

pub mod cyclo;
pub mod linalg;
pub mod subspace;
pub mod tensor;

pub use cyclo::{
    fourth_roots, is_primitive_fourth_root, root_from_name, root_name, Cyclo, Rational,
};
pub use linalg::{
    kvec_add, kvec_axpy, kvec_cmp, kvec_is_zero, kvec_scale, kvec_sub, kvec_unit, kvec_zero, KVec,
    Mat,
};
pub use subspace::{eigenspace, fixed_space, Subspace};
pub use tensor::{sparse_from_dense, sparse_to_dense, SparseVec, Tensor3};
