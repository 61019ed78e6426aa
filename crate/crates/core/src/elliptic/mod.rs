//! Weierstrass models over K = k(t), the group law, functions on the curve
//! and local reduction data.

mod function;
mod model;
mod point;
mod reduction;
mod series;

pub use function::CurveFunction;
pub use model::WeierstrassModel;
pub use point::CurvePoint;
pub use reduction::{
    bad_places, candidate_places, deg_omega, height_contribution, intersection_with_zero, kodaira_from_orders,
    kodaira_type, minimal_model_at, twist_exponent, KodairaType, LocalMinimalModel,
};
pub use series::LaurentSeries;
