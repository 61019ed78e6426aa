use super::element::FieldElement;
use super::field::Field;
use crate::error::{Error, Result};

/// The derivation `h · d/dt` of k(t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    scale: FieldElement,
}

impl Derivation {
    pub fn new(scale: FieldElement) -> Result<Self> {
        if scale.is_zero() {
            return Err(Error::ZeroDerivation);
        }
        Ok(Derivation { scale })
    }

    /// d/dt
    pub fn standard(template: &FieldElement) -> Self {
        Derivation {
            scale: template.one_like(),
        }
    }

    pub fn scale(&self) -> &FieldElement {
        &self.scale
    }

    pub fn is_standard(&self) -> bool {
        self.scale.is_one()
    }

    pub fn apply(&self, f: &FieldElement) -> FieldElement {
        if self.scale.is_one() {
            f.derivative()
        } else {
            self.scale.clone() * &f.derivative()
        }
    }

    /// `g · self`.
    pub fn rescaled(&self, g: &FieldElement) -> Result<Self> {
        Derivation::new(self.scale.clone() * g)
    }
}
