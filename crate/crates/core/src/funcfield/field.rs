use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A commutative field whose elements know enough about their parent to
/// produce constants.
///
/// There is no global `zero()`: the constant fields are chosen at runtime
/// (ℚ or 𝔽_p for a runtime p), so constants are always derived from an
/// existing element.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    fn from_i64_like(&self, n: i64) -> Self;

    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;

    /// Product of coefficient vectors (low to high), for fields with a
    /// faster kernel than the generic loop.
    fn mul_coeffs(_a: &[Self], _b: &[Self]) -> Option<Vec<Self>> {
        None
    }

    fn div_rem_coeffs(_a: &[Self], _d: &[Self]) -> Option<(Vec<Self>, Vec<Self>)> {
        None
    }

    /// Monic gcd of two nonzero coefficient vectors, or `None` to fall back
    /// to the Euclidean algorithm.
    fn gcd_coeffs(_a: &[Self], _b: &[Self]) -> Option<Vec<Self>> {
        None
    }

    fn pow_u64(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }

    fn pow_i64(&self, e: i64) -> Self {
        if e >= 0 {
            self.pow_u64(e as u64)
        } else {
            self.inv().pow_u64(e.unsigned_abs())
        }
    }
}

/// Null space of a matrix over a field, by Gauss–Jordan elimination.
///
/// `rows` is a list of equal-length rows; returns a basis of
/// `{ v : rows · v = 0 }` with one free variable set to one in each vector.
pub fn null_space<F: Field>(rows: &[Vec<F>], template: &F) -> Vec<Vec<F>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].inv();
        for k in c..ncols {
            m[r][k] = m[r][k].clone() * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for k in c..ncols {
                    let delta = factor.clone() * &m[r][k];
                    m[i][k] = m[i][k].clone() - &delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let zero = template.zero_like();
    let one = template.one_like();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero.clone(); ncols];
        v[free] = one.clone();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        basis.push(v);
    }
    basis
}
