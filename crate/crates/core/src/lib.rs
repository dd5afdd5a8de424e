pub mod arith_a;
pub mod central_extension;
pub mod expression;
pub mod lie;
pub mod par;
pub mod random;
pub mod report;
pub mod scalar;
pub mod sl2;
pub mod subalgebra_lab;
pub mod suites;
pub mod tetrahedron;
