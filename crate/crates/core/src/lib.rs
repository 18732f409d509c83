pub mod coord;
pub mod homogeneous;
pub mod linalg;
pub mod rmatrix;
pub mod scalars;
pub mod uqrep;
