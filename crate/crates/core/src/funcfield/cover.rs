use super::element::FieldElement;
use super::field::Field;
use crate::error::{Error, Result};

/// A cover of the line given by the substitution `target ↦ image(source)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverMap {
    pub source: String,
    pub target: String,
    pub image: FieldElement,
}

impl CoverMap {
    pub fn new(source: impl Into<String>, target: impl Into<String>, image: FieldElement) -> Result<Self> {
        if image.is_constant() {
            return Err(Error::ConstantCover);
        }
        Ok(CoverMap {
            source: source.into(),
            target: target.into(),
            image,
        })
    }

    pub fn identity(var: &str, k: crate::funcfield::ConstantField) -> Self {
        CoverMap {
            source: var.to_string(),
            target: var.to_string(),
            image: FieldElement::var(k),
        }
    }

    pub fn pullback(&self, f: &FieldElement) -> FieldElement {
        f.compose(&self.image)
    }

    /// d(image)/d(source)
    pub fn derivative(&self) -> FieldElement {
        self.image.derivative()
    }

    /// `self` after `first`: first maps a → b, self maps b → c; result a → c.
    pub fn after(&self, first: &CoverMap) -> CoverMap {
        CoverMap {
            source: first.source.clone(),
            target: self.target.clone(),
            image: first.pullback(&self.image),
        }
    }

    pub fn is_separable(&self) -> bool {
        !self.derivative().is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcfield::parse::parse_field_element;
    use crate::funcfield::ConstantField;

    #[test]
    fn legendre_quadratic_cover() {
        let q = ConstantField::Rationals;
        let phi = CoverMap::new("s", "t", parse_field_element("2 - s^2/2", q, "s").unwrap()).unwrap();
        let f = parse_field_element("t - 2", q, "t").unwrap();
        assert_eq!(phi.pullback(&f), parse_field_element("-s^2/2", q, "s").unwrap());
        let g = parse_field_element("t - 1", q, "t").unwrap();
        assert_eq!(phi.pullback(&g), parse_field_element("(2 - s^2)/2", q, "s").unwrap());
        let id = CoverMap::identity("t", q);
        assert_eq!(id.pullback(&f), f);
        assert!(CoverMap::new("s", "t", FieldElement::from_i64(q, 3)).is_err());
    }
}
