use crate::funcfield::{Field, FieldElement};

/// A K-rational point of a Weierstrass model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurvePoint {
    Zero,
    Affine { x: FieldElement, y: FieldElement },
}

impl CurvePoint {
    pub fn is_zero(&self) -> bool {
        matches!(self, CurvePoint::Zero)
    }

    pub fn x(&self) -> Option<&FieldElement> {
        match self {
            CurvePoint::Zero => None,
            CurvePoint::Affine { x, .. } => Some(x),
        }
    }

    pub fn y(&self) -> Option<&FieldElement> {
        match self {
            CurvePoint::Zero => None,
            CurvePoint::Affine { y, .. } => Some(y),
        }
    }

    /// Points with y = 0 are exactly the nonzero 2-torsion.
    pub fn is_two_torsion(&self) -> bool {
        match self {
            CurvePoint::Zero => true,
            CurvePoint::Affine { y, .. } => y.is_zero(),
        }
    }
}
