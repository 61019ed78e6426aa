use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;

/// Dense univariate polynomial over a field, coefficients stored low to high
/// with no trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c · X^k`
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![c.zero_like(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// The variable X, with constants taken from `template`.
    pub fn x(template: &F) -> Self {
        Self::monomial(template.one_like(), 1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with -1 for the zero polynomial.
    pub fn degree_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> Option<&F> {
        self.coeffs.get(i)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Some element of the coefficient field, used to build constants.
    pub fn template(&self) -> Option<&F> {
        self.coeffs.first()
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv()),
        }
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![self.coeffs[0].zero_like(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluate in any field receiving the coefficients through `embed`.
    pub fn eval_with<G: Field>(&self, x: &G, embed: impl Fn(&F) -> G) -> G {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + &embed(c);
        }
        acc
    }

    pub fn compose(&self, inner: &Poly<F>) -> Poly<F> {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * &c.from_i64_like(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let Some(t) = self.template() else {
            return if e == 0 {
                panic!("0^0 on an empty polynomial has no constant field")
            } else {
                Self::zero()
            };
        };
        let mut acc = Poly::constant(t.one_like());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dl = d.leading().expect("polynomial division by zero");
        let dn = d.coeffs.len();
        if self.coeffs.len() < dn {
            return (Self::zero(), self.clone());
        }
        if let Some((q, r)) = F::div_rem_coeffs(&self.coeffs, &d.coeffs) {
            return (Poly::from_coeffs(q), Poly::from_coeffs(r));
        }
        let inv = dl.inv();
        let mut r = self.coeffs.clone();
        let mut q = vec![dl.zero_like(); r.len() - dn + 1];
        for i in (0..q.len()).rev() {
            let c = r[i + dn - 1].clone() * &inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let delta = c.clone() * dc;
                    r[i + j] = r[i + j].clone() - &delta;
                }
            }
            q[i] = c;
        }
        r.truncate(dn - 1);
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient; `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if !a.is_zero() && !b.is_zero() {
            if let Some(g) = F::gcd_coeffs(&a.coeffs, &b.coeffs) {
                return Poly::from_coeffs(g);
            }
        }
        let mut a = a.monic();
        let mut b = b.monic();
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }

    /// Returns (g, s, t) with s·a + t·b = g monic.
    pub fn ext_gcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let template = a
            .template()
            .or(b.template())
            .expect("ext_gcd of two zero polynomials")
            .clone();
        let one = Poly::constant(template.one_like());
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (one.clone(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), one);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = l.inv();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Multiplicity of `p` (non-constant) in `self` ≠ 0, and the cofactor.
    pub fn split_off(&self, p: &Self) -> (u32, Self) {
        let mut m = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.div_rem(p);
            if !r.is_zero() {
                return (m, cur);
            }
            m += 1;
            cur = q;
        }
    }

    /// Square-free decomposition in characteristic 0 (Yun).
    ///
    /// Returns pairs (gᵢ, i) with gᵢ monic, square-free, pairwise coprime and
    /// `self = lc · Π gᵢ^i`. Panics in positive characteristic; use
    /// `squarefree_decomposition` in `factor` for 𝔽_p.
    pub fn yun(&self) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = Self::gcd(&f, &fp);
        let mut b = f.exact_div(&a0).unwrap();
        let mut c = fp.exact_div(&a0).unwrap();
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = Self::gcd(&b, &d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).unwrap();
            if b.is_constant() {
                break;
            }
            c = d.exact_div(&a).unwrap();
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }
}

impl<F: Field + Ord> Poly<F> {
    /// Canonical ordering: by degree, then coefficients from the top down.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] = coeffs[i].clone() + c;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.clone() - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = F::mul_coeffs(&self.coeffs, &rhs.coeffs) {
            return Poly::from_coeffs(c);
        }
        let zero = self.coeffs[0].zero_like();
        let mut coeffs = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a.clone() * b;
                coeffs[i + j] = coeffs[i + j].clone() + &prod;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_poly_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<F: Field> $tr<Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: Poly<F>) -> Poly<F> {
                $tr::$m(&self, &rhs)
            }
        }
        impl<F: Field> $tr<&Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: &Poly<F>) -> Poly<F> {
                $tr::$m(&self, rhs)
            }
        }
    )*};
}
forward_poly_owned!(Add add, Sub sub, Mul mul);

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -&self
    }
}
