//! Construction and verification of functions of k-valued logic.
//!
//! A function `f: E_k^n -> E_k` is held as a dense [`TruthTable`] and can be
//! viewed as an n-dimensional hypercube of order `k`. The crate computes
//! ranges and spectra, decides the H-function family of predicates and the
//! Latin hypercube property, synthesizes functions with prescribed spectra as
//! modular sums of block functions, identifies variables, and produces the
//! polynomial form of unary functions over prime `k`.

pub mod analysis;
pub mod arith;
pub mod cli;
pub mod construction;
pub mod error;
pub mod format;
pub mod function;
pub mod interpolation;
pub mod partition;

pub use analysis::{
    check_hq, check_hsq, check_qh, hereditary_check, is_h_function, is_latin_hypercube, range,
    spectrum, subfunction, Fixing, SpectrumSet, Verdict, Witness, WitnessKind,
};
pub use construction::{
    affine_transform, compose_sum, construct_linear_h, identification_condition,
    identify_variables, sample_with_range, AffineParams, BlockSummand,
};
pub use error::{Error, Result};
pub use format::{parse, serialize};
pub use function::{flat_index, Assignment, HypercubeView, TruthTable, VariableSet};
pub use interpolation::{eval_polynomial, interpolate_unary, UnaryPolynomial};
pub use partition::{Partition, QVector};
