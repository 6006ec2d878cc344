//! Exact computation of Frobenius root ideals `I_s(f^(p^s - 1))` for a
//! polynomial `f` over a prime field, detection of the level at which their
//! descending chain stabilizes, and synthesis of explicit differential
//! operators `delta` with `delta(1/f) = 1/f^p`.
//!
//! ```
//! use frobgen_core::{compute_chain, parse_poly, synthesize_delta, LevelCap, MonomialOrder, RingContext};
//!
//! let ring = RingContext::new(5, &["x1", "x2", "x3", "x4"], MonomialOrder::Grevlex).unwrap();
//! let f = parse_poly("x1^2 + x2^2 + x3^2 + x4^2", &ring).unwrap();
//! let chain = compute_chain(&f, LevelCap::Auto).unwrap();
//! assert_eq!(chain.stabilized_at, Some(1));
//! let delta = synthesize_delta(&chain).unwrap();
//! assert_eq!(delta.operator.to_string(), "4 * D[2,2,2,2]");
//! ```

pub mod chain;
pub mod context;
pub mod diffop;
pub mod error;
pub mod field;
pub mod frobenius;
mod groebner;
pub mod ideal;
pub mod monomial;
pub mod oracle;
pub mod parse;
pub mod poly;

pub use chain::{compute_chain, stabilization_level, ChainLevel, ChainReport, LevelCap};
pub use context::{MonomialOrder, Ring, RingContext};
pub use diffop::{
    apply_localized, apply_operator, dual_projection, frobenius_twist, generator_witness, interpolate_operator,
    monomial_fast_path, parse_operator, parse_operator_expr, synthesize_delta, synthesize_delta_at, verify_delta,
    DiffOperator, FastPath, Localized, OperatorExpr, Synthesis, SynthesisMethod,
};
pub use error::{Error, Result};
pub use field::{lucas_binomial, FieldScalar, PrimeField};
pub use frobenius::{frob_decompose, frobenius_root_ideal, FrobDecomposition};
pub use ideal::{bracket_power, divide_with_cofactors, ideal_equal, ideal_product, normal_form, reduced_groebner, Ideal};
pub use monomial::ExponentVector;
pub use parse::parse_poly;
pub use poly::{Poly, PowerLadder};
