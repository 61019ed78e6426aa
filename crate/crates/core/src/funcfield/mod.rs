//! Exact arithmetic in the rational function field k(t), k = ℚ or 𝔽_p.

mod cover;
mod derivation;
mod element;
pub mod factor;
mod field;
mod fp;
pub mod parse;
mod place;
mod poly;
mod ratfunc;
mod scalar;

pub use cover::CoverMap;
pub use derivation::Derivation;
pub use element::FieldElement;
pub use factor::{factor, irreducible_factors, is_irreducible, squarefree_decomposition, Factorization};
pub use field::{null_space, Field};
pub use parse::{parse_expr, parse_field_element, parse_x_polynomial, Expr};
pub use place::{
    degree_of, divisor_of, divisor_of_differential, ord_at, ord_differential, ord_dt, ord_nonzero, support_candidates,
    Differential, Place,
};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use scalar::{ConstantField, ModInt, Scalar};
