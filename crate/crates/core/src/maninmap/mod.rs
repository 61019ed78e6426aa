//! The characteristic-0 Manin map: Picard–Fuchs operators with exactness
//! witnesses, the map M and its invariant form 𝓜, the exceptional set S and
//! the tangency bound.

mod exceptional;
mod manin;
mod operator;

pub use exceptional::{
    exceptional_set, manin_value, tangency_report, ExceptionReason, ExceptionalEntry, ExceptionalSet, JRow,
    TangencyReport,
};
pub use manin::{manin_m, manin_section};
pub use operator::{find_pf, find_witness, pullback_pf, rescale_model, shift_model, verify_pf, PFOperator};
