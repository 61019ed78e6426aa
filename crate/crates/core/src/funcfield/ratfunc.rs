use std::ops::{Add, Div, Mul, Neg, Sub};

use super::field::Field;
use super::poly::Poly;

/// Rational function `num/den` in one variable over a field `F`.
///
/// Canonical form: `gcd(num, den) = 1` and `den` monic, so structural
/// equality is equality of functions. The zero function is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFunc<F> {
    /// Builds `num/den` and normalizes. Panics if `den` is zero.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            let one = den.leading().unwrap().one_like();
            return RatFunc {
                num,
                den: Poly::constant(one),
            };
        }
        let g = Poly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let l = den.leading().unwrap().clone();
        if !l.is_one() {
            let inv = l.inv();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    /// Skips the gcd; caller guarantees coprimality.
    fn new_coprime(num: Poly<F>, den: Poly<F>) -> Self {
        let l = den.leading().expect("zero denominator").clone();
        if num.is_zero() {
            return RatFunc {
                num,
                den: Poly::constant(l.one_like()),
            };
        }
        if l.is_one() {
            RatFunc { num, den }
        } else {
            let inv = l.inv();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: Poly<F>, template: &F) -> Self {
        RatFunc {
            num: p,
            den: Poly::constant(template.one_like()),
        }
    }

    pub fn constant(c: F) -> Self {
        let one = c.one_like();
        RatFunc {
            num: Poly::constant(c),
            den: Poly::constant(one),
        }
    }

    pub fn variable(template: &F) -> Self {
        Self::from_poly(Poly::x(template), template)
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn template(&self) -> &F {
        self.den.leading().unwrap()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_constant() && self.num.is_constant()
    }

    /// Constant value, if this function is constant.
    pub fn as_constant(&self) -> Option<F> {
        if self.is_constant() {
            Some(
                self.num
                    .coeff(0)
                    .cloned()
                    .unwrap_or_else(|| self.template().zero_like()),
            )
        } else {
            None
        }
    }

    /// deg(den) − deg(num): the order at the place at infinity, for f ≠ 0.
    pub fn ord_infinity(&self) -> Option<i64> {
        if self.num.is_zero() {
            None
        } else {
            Some(self.den.degree_i64() - self.num.degree_i64())
        }
    }

    /// Order at the irreducible polynomial `p`; `None` for the zero function.
    pub fn ord_poly(&self, p: &Poly<F>) -> Option<i64> {
        if self.num.is_zero() {
            return None;
        }
        let (a, _) = self.num.split_off(p);
        let (b, _) = self.den.split_off(p);
        Some(a as i64 - b as i64)
    }

    /// d/dX of the function in its own variable.
    pub fn derivative(&self) -> Self {
        self.derive_with(|p| p.derivative())
    }

    /// Applies a derivation acting on polynomials, extended by the quotient rule.
    pub fn derive_with(&self, d: impl Fn(&Poly<F>) -> Poly<F>) -> Self {
        if self.num.is_zero() {
            return self.clone();
        }
        let dn = d(&self.num);
        let dd = d(&self.den);
        RatFunc::new(&(&dn * &self.den) - &(&self.num * &dd), &self.den * &self.den)
    }

    /// Evaluates at a field element; `None` at a pole.
    pub fn eval(&self, x: &F) -> Option<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Substitutes `inner` for the variable.
    pub fn compose(&self, inner: &RatFunc<F>) -> Self {
        let n = self.num.eval_with(inner, |c| RatFunc::constant(c.clone()));
        let d = self.den.eval_with(inner, |c| RatFunc::constant(c.clone()));
        n / d
    }

    /// Applies a map to every coefficient of numerator and denominator.
    pub fn map_coeffs(&self, f: impl Fn(&F) -> F) -> Self {
        RatFunc::new(self.num.map(&f), self.den.map(&f))
    }

    /// Ring homomorphism from the coefficient field into another field.
    pub fn eval_with<G: Field>(&self, x: &G, embed: impl Fn(&F) -> G) -> Option<G> {
        let d = self.den.eval_with(x, &embed);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval_with(x, &embed) / d)
        }
    }
}

impl<F: Field> Add<&RatFunc<F>> for RatFunc<F> {
    type Output = RatFunc<F>;
    fn add(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self;
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den);
        }
        if self.den.is_constant() {
            return RatFunc::new_coprime(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        if rhs.den.is_constant() {
            return RatFunc::new_coprime(&self.num + &(&rhs.num * &self.den), self.den);
        }
        let g = Poly::gcd(&self.den, &rhs.den);
        if g.is_constant() {
            return RatFunc::new_coprime(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den);
        }
        let d1 = self.den.exact_div(&g).unwrap();
        let d2 = rhs.den.exact_div(&g).unwrap();
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        let den = &(&d1 * &d2) * &g;
        // only factors of g can cancel
        let h = Poly::gcd(&num, &g);
        if h.is_constant() {
            RatFunc::new_coprime(num, den)
        } else {
            RatFunc::new_coprime(num.exact_div(&h).unwrap(), den.exact_div(&h).unwrap())
        }
    }
}

impl<F: Field> Neg for RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<F: Field> Sub<&RatFunc<F>> for RatFunc<F> {
    type Output = RatFunc<F>;
    fn sub(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        self + &(-rhs.clone())
    }
}

impl<F: Field> Mul<&RatFunc<F>> for RatFunc<F> {
    type Output = RatFunc<F>;
    fn mul(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFunc::new_coprime(Poly::zero(), self.den);
        }
        let g1 = Poly::gcd(&self.num, &rhs.den);
        let g2 = Poly::gcd(&rhs.num, &self.den);
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = rhs.den.exact_div(&g1).unwrap();
        let n2 = rhs.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        RatFunc::new_coprime(&n1 * &n2, &d1 * &d2)
    }
}

impl<F: Field> Div<&RatFunc<F>> for RatFunc<F> {
    type Output = RatFunc<F>;
    fn div(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        self * &rhs.inv()
    }
}

macro_rules! forward_rat_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<F: Field> $tr<RatFunc<F>> for RatFunc<F> {
            type Output = RatFunc<F>;
            fn $m(self, rhs: RatFunc<F>) -> RatFunc<F> {
                $tr::$m(self, &rhs)
            }
        }
        impl<F: Field> $tr<&RatFunc<F>> for &RatFunc<F> {
            type Output = RatFunc<F>;
            fn $m(self, rhs: &RatFunc<F>) -> RatFunc<F> {
                $tr::$m(self.clone(), rhs)
            }
        }
    )*};
}
forward_rat_owned!(Add add, Sub sub, Mul mul, Div div);

impl<F: Field> Field for RatFunc<F> {
    fn zero_like(&self) -> Self {
        RatFunc::new_coprime(Poly::zero(), self.den.clone())
    }

    fn one_like(&self) -> Self {
        RatFunc::constant(self.template().one_like())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.den.is_constant() && self.num.is_constant() && self.num.coeff(0).is_some_and(|c| c.is_one())
    }

    fn inv(&self) -> Self {
        assert!(!self.num.is_zero(), "division by the zero rational function");
        RatFunc::new_coprime(self.den.clone(), self.num.clone())
    }

    fn from_i64_like(&self, n: i64) -> Self {
        RatFunc::constant(self.template().from_i64_like(n))
    }

    fn characteristic(&self) -> u64 {
        self.template().characteristic()
    }

    // Clears denominators so the inner products need no gcds; each output
    // coefficient is reduced once.
    fn mul_coeffs(a: &[Self], b: &[Self]) -> Option<Vec<Self>> {
        if a.len() < 2 || b.len() < 2 {
            return None;
        }
        let (na, da) = over_common_den(a);
        let (nb, db) = over_common_den(b);
        let zero = Poly::zero();
        let mut out = vec![zero; a.len() + b.len() - 1];
        for (i, x) in na.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in nb.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] = &out[i + j] + &(x * y);
                }
            }
        }
        let den = &da * &db;
        Some(out.into_iter().map(|n| RatFunc::new(n, den.clone())).collect())
    }

    // Coprime specializations at a t where no leading coefficient or
    // denominator vanishes prove coprimality.
    fn gcd_coeffs(a: &[Self], b: &[Self]) -> Option<Vec<Self>> {
        let one = a.last()?.one_like();
        let template = a.last()?.template().clone();
        for t0 in [2, 5, 11] {
            let t0 = template.from_i64_like(t0);
            let (Some(sa), Some(sb)) = (specialize(a, &t0), specialize(b, &t0)) else {
                continue;
            };
            if Poly::gcd(&sa, &sb).is_constant() {
                return Some(vec![one]);
            }
        }
        None
    }
}

fn specialize<F: Field>(xs: &[RatFunc<F>], t0: &F) -> Option<Poly<F>> {
    let cs = xs.iter().map(|x| x.eval(t0)).collect::<Option<Vec<F>>>()?;
    if cs.last()?.is_zero() {
        return None;
    }
    Some(Poly::from_coeffs(cs))
}

/// Numerators over the lcm of the denominators.
fn over_common_den<F: Field>(xs: &[RatFunc<F>]) -> (Vec<Poly<F>>, Poly<F>) {
    let mut den = xs[0].den.clone();
    for x in &xs[1..] {
        if x.num.is_zero() || x.den == den || x.den.is_constant() {
            continue;
        }
        let g = Poly::gcd(&den, &x.den);
        den = &den * &x.den.exact_div(&g).unwrap();
    }
    let nums = xs
        .iter()
        .map(|x| {
            if x.num.is_zero() {
                Poly::zero()
            } else if x.den == den {
                x.num.clone()
            } else {
                &x.num * &den.exact_div(&x.den).unwrap()
            }
        })
        .collect();
    (nums, den)
}
