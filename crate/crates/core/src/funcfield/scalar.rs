use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};

use super::field::Field;
use super::fp;
use crate::error::{Error, Result};

/// The constant field k of the base curve: ℚ or a prime field 𝔽_p with p > 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstantField {
    Rationals,
    PrimeField(u64),
}

impl ConstantField {
    pub fn prime(p: u64) -> Result<Self> {
        if p <= 3 || !is_prime_u64(p) {
            return Err(Error::InvalidCharacteristic(p));
        }
        Ok(ConstantField::PrimeField(p))
    }

    /// Accepts 0 for ℚ.
    pub fn from_characteristic(p: u64) -> Result<Self> {
        if p == 0 {
            Ok(ConstantField::Rationals)
        } else {
            Self::prime(p)
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            ConstantField::Rationals => 0,
            ConstantField::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            ConstantField::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            ConstantField::PrimeField(p) => {
                let m = BigInt::from(*p);
                let r = ((n % &m) + &m) % &m;
                Scalar::Modular(ModInt::new(r.to_u64().unwrap(), *p))
            }
        }
    }

    /// Maps a rational into the field; `None` when the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Option<Scalar> {
        match self {
            ConstantField::Rationals => Some(Scalar::Rational(q.clone())),
            ConstantField::PrimeField(_) => {
                let d = self.from_bigint(q.denom());
                if d.is_zero() {
                    None
                } else {
                    Some(self.from_bigint(q.numer()) / d)
                }
            }
        }
    }
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Residue class modulo a word-sized prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModInt {
    value: u64,
    modulus: u64,
}

impl ModInt {
    pub fn new(value: u64, modulus: u64) -> Self {
        ModInt {
            value: value % modulus,
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn mul_raw(a: u64, b: u64, m: u64) -> u64 {
        ((a as u128 * b as u128) % m as u128) as u64
    }

    fn inverse(&self) -> ModInt {
        assert!(self.value != 0, "inverse of zero in F_{}", self.modulus);
        // Fermat
        let mut e = self.modulus - 2;
        let mut base = self.value;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = Self::mul_raw(acc, base, self.modulus);
            }
            base = Self::mul_raw(base, base, self.modulus);
            e >>= 1;
        }
        ModInt::new(acc, self.modulus)
    }
}

/// An element of the constant field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular(ModInt),
}

impl Scalar {
    pub fn field(&self) -> ConstantField {
        match self {
            Scalar::Rational(_) => ConstantField::Rationals,
            Scalar::Modular(m) => ConstantField::PrimeField(m.modulus),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular(_) => None,
        }
    }

    pub fn as_modint(&self) -> Option<ModInt> {
        match self {
            Scalar::Modular(m) => Some(*m),
            Scalar::Rational(_) => None,
        }
    }

    /// True for negative rationals; always false in 𝔽_p.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(q.abs()),
            Scalar::Modular(_) => self.clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_integer(),
            Scalar::Modular(_) => true,
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("mixed constant fields: {:?} and {:?}", a.field(), b.field())
}

impl Add<&Scalar> for Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (&self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular(a), Scalar::Modular(b)) if a.modulus == b.modulus => {
                let s = a.value + b.value;
                Scalar::Modular(ModInt::new(if s >= a.modulus { s - a.modulus } else { s }, a.modulus))
            }
            _ => mismatch(&self, rhs),
        }
    }
}

impl Sub<&Scalar> for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (&self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Modular(a), Scalar::Modular(b)) if a.modulus == b.modulus => {
                let v = if a.value >= b.value {
                    a.value - b.value
                } else {
                    a.value + a.modulus - b.value
                };
                Scalar::Modular(ModInt::new(v, a.modulus))
            }
            _ => mismatch(&self, rhs),
        }
    }
}

impl Mul<&Scalar> for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (&self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular(a), Scalar::Modular(b)) if a.modulus == b.modulus => {
                Scalar::Modular(ModInt::new(ModInt::mul_raw(a.value, b.value, a.modulus), a.modulus))
            }
            _ => mismatch(&self, rhs),
        }
    }
}

impl Div<&Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                $tr::$m(self, &rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular(a) => Scalar::Modular(ModInt::new(
                if a.value == 0 { 0 } else { a.modulus - a.value },
                a.modulus,
            )),
        }
    }
}

impl Field for Scalar {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }

    fn one_like(&self) -> Self {
        self.field().one()
    }

    fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(a) => a.is_zero(),
            Scalar::Modular(a) => a.value == 0,
        }
    }

    fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(a) => a.is_one(),
            Scalar::Modular(a) => a.value == 1,
        }
    }

    fn inv(&self) -> Self {
        match self {
            Scalar::Rational(a) => {
                assert!(!a.is_zero(), "division by zero in Q");
                Scalar::Rational(a.recip())
            }
            Scalar::Modular(a) => Scalar::Modular(a.inverse()),
        }
    }

    fn from_i64_like(&self, n: i64) -> Self {
        self.field().from_i64(n)
    }

    fn characteristic(&self) -> u64 {
        self.field().characteristic()
    }

    fn mul_coeffs(a: &[Self], b: &[Self]) -> Option<Vec<Self>> {
        if let Some((ra, p)) = residues(a) {
            let (rb, _) = residues(b)?;
            return Some(from_residues(fp::poly_mul(&ra, &rb, p), p));
        }
        if a.len() < 2 || b.len() < 2 {
            return None;
        }
        // integer products over a common denominator, one reduction per term
        let (na, da) = integer_numerators(a)?;
        let (nb, db) = integer_numerators(b)?;
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in na.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in nb.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        let den = da * db;
        Some(
            out.into_iter()
                .map(|n| Scalar::Rational(BigRational::new(n, den.clone())))
                .collect(),
        )
    }

    fn div_rem_coeffs(a: &[Self], d: &[Self]) -> Option<(Vec<Self>, Vec<Self>)> {
        let (ra, p) = residues(a)?;
        let (rd, _) = residues(d)?;
        let (q, r) = fp::poly_div_rem(&ra, &rd, p);
        Some((from_residues(q, p), from_residues(r, p)))
    }

    fn gcd_coeffs(a: &[Self], b: &[Self]) -> Option<Vec<Self>> {
        if let Some((ra, p)) = residues(a) {
            let (rb, _) = residues(b)?;
            return Some(from_residues(fp::poly_gcd(&ra, &rb, p), p));
        }
        // Over ℚ: coprime images modulo a prime not dividing the leading
        // coefficients or any denominator prove coprimality.
        let ra = reduce_rationals(a)?;
        let rb = reduce_rationals(b)?;
        let g = fp::poly_gcd(&ra, &rb, CHECK_PRIME);
        (g.len() == 1).then(|| vec![ConstantField::Rationals.one()])
    }
}

const CHECK_PRIME: u64 = 2_147_483_647;

fn residues(a: &[Scalar]) -> Option<(Vec<u64>, u64)> {
    let p = match a.first()? {
        Scalar::Modular(m) => m.modulus,
        Scalar::Rational(_) => return None,
    };
    let v = a
        .iter()
        .map(|c| match c {
            Scalar::Modular(m) => m.value,
            Scalar::Rational(_) => mismatch(&a[0], c),
        })
        .collect();
    Some((v, p))
}

fn from_residues(v: Vec<u64>, p: u64) -> Vec<Scalar> {
    v.into_iter()
        .map(|value| Scalar::Modular(ModInt { value, modulus: p }))
        .collect()
}

fn integer_numerators(a: &[Scalar]) -> Option<(Vec<BigInt>, BigInt)> {
    let mut den = BigInt::one();
    for c in a {
        let q = c.as_rational()?;
        if !q.denom().is_one() {
            den = den.lcm(q.denom());
        }
    }
    let nums = a
        .iter()
        .map(|c| {
            let q = c.as_rational().unwrap();
            q.numer() * (&den / q.denom())
        })
        .collect();
    Some((nums, den))
}

fn reduce_rationals(a: &[Scalar]) -> Option<Vec<u64>> {
    let p = BigInt::from(CHECK_PRIME);
    let mut out = Vec::with_capacity(a.len());
    for c in a {
        let q = c.as_rational()?;
        let d = (q.denom() % &p).to_u64()?;
        if d == 0 {
            return None;
        }
        let n = q.numer().mod_floor(&p).to_u64()?;
        out.push(fp::mul(n, fp::inv(d, CHECK_PRIME), CHECK_PRIME));
    }
    if out.last() == Some(&0) {
        return None;
    }
    Some(out)
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used only for canonical sorting of places and terms.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Modular(a), Scalar::Modular(b)) => (a.modulus, a.value).cmp(&(b.modulus, b.value)),
            (Scalar::Rational(_), Scalar::Modular(_)) => Ordering::Less,
            (Scalar::Modular(_), Scalar::Rational(_)) => Ordering::Greater,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Modular(m) => write!(f, "{}", m.value),
        }
    }
}
