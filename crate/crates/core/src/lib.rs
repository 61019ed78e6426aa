//! Manin-type maps on elliptic curves over rational function fields.
//!
//! The crate works over K = k(t) with k = ℚ or 𝔽_p (p > 3) and provides
//!
//! * exact function-field arithmetic, places and valuations ([`funcfield`]),
//! * Weierstrass models, the group law, minimal models and Kodaira types
//!   ([`elliptic`]),
//! * sections of ω^κ ⊗ (Ω¹)^m and their divisors ([`sections`]),
//! * the characteristic-p descent map μ, the section ν and the
//!   associated tangency bound ([`pdescent`]),
//! * Picard–Fuchs operators, the characteristic-0 Manin map and the
//!   complex tangency bound ([`maninmap`]).

pub mod elliptic;
pub mod error;
pub mod funcfield;
pub mod maninmap;
pub mod pdescent;
pub mod sections;

pub use error::{Error, Result};
