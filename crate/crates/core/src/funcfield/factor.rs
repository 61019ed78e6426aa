//! Factorization of polynomials over the constant field.
//!
//! Over 𝔽_p: square-free decomposition, distinct-degree splitting and
//! Cantor–Zassenhaus equal-degree splitting. Over ℚ: Yun square-free
//! decomposition followed by Zassenhaus (factor mod a small prime, Hensel
//! lift past the Mignotte bound, recombine).

use num::bigint::{BigInt, BigUint};
use num::integer::Integer;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::Field;
use super::poly::Poly;
use super::scalar::{is_prime_u64, ConstantField, Scalar};
use crate::error::{Error, Result};

/// `q = unit · Π factor^multiplicity` with monic irreducible factors in
/// canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Scalar,
    pub factors: Vec<(Poly<Scalar>, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> Poly<Scalar> {
        let mut acc = Poly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }
}

pub fn factor(q: &Poly<Scalar>) -> Result<Factorization> {
    let unit = q.leading().ok_or(Error::FactorZero)?.clone();
    let mut factors = Vec::new();
    for (g, m) in squarefree_decomposition(q) {
        for h in factor_squarefree(&g) {
            factors.push((h, m));
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(Factorization { unit, factors })
}

/// Distinct monic irreducible factors (the support of `q`).
pub fn irreducible_factors(q: &Poly<Scalar>) -> Result<Vec<Poly<Scalar>>> {
    Ok(factor(q)?.factors.into_iter().map(|(f, _)| f).collect())
}

pub fn is_irreducible(q: &Poly<Scalar>) -> bool {
    match q.degree() {
        None | Some(0) => false,
        Some(1) => true,
        Some(_) => factor(q).is_ok_and(|f| f.factors.len() == 1 && f.factors[0].1 == 1),
    }
}

/// Square-free decomposition valid in every characteristic.
///
/// Returns monic, square-free, pairwise coprime (gᵢ, i) with
/// `q = lc · Π gᵢ^i`; entries with equal multiplicity are merged.
pub fn squarefree_decomposition(q: &Poly<Scalar>) -> Vec<(Poly<Scalar>, u32)> {
    let Some(lead) = q.leading() else {
        return Vec::new();
    };
    let mut out = match lead.characteristic() {
        0 => q.yun(),
        p => squarefree_char_p(&q.monic(), p),
    };
    out.sort_by_key(|(_, m)| *m);
    let mut merged: Vec<(Poly<Scalar>, u32)> = Vec::new();
    for (g, m) in out {
        match merged.last_mut() {
            Some((h, mm)) if *mm == m => *h = &*h * &g,
            _ => merged.push((g, m)),
        }
    }
    merged
}

fn squarefree_char_p(f: &Poly<Scalar>, p: u64) -> Vec<(Poly<Scalar>, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let fp = f.derivative();
    let mut r = Poly::gcd(f, &fp);
    let mut w = f.exact_div(&r).unwrap();
    let mut i = 1;
    while !w.is_constant() {
        let y = Poly::gcd(&w, &r);
        let z = w.exact_div(&y).unwrap();
        if !z.is_constant() {
            out.push((z, i));
        }
        i += 1;
        w = y.clone();
        r = r.exact_div(&y).unwrap();
    }
    if !r.is_constant() {
        // r is a p-th power; Frobenius is the identity on 𝔽_p.
        let root = Poly::from_coeffs(r.coeffs().iter().step_by(p as usize).cloned().collect());
        for (g, m) in squarefree_char_p(&root, p) {
            out.push((g, m * p as u32));
        }
    }
    out
}

fn factor_squarefree(g: &Poly<Scalar>) -> Vec<Poly<Scalar>> {
    match g.degree() {
        None | Some(0) => Vec::new(),
        Some(1) => vec![g.monic()],
        Some(_) => match g.leading().unwrap().characteristic() {
            0 => factor_squarefree_rational(g),
            p => factor_squarefree_mod_p(&g.monic(), p),
        },
    }
}

// ---------------------------------------------------------------- 𝔽_p

fn pow_mod(base: &Poly<Scalar>, exp: &BigUint, m: &Poly<Scalar>) -> Poly<Scalar> {
    let one = Poly::constant(m.leading().unwrap().one_like());
    let mut acc = one;
    let b = base.rem(m);
    for i in (0..exp.bits()).rev() {
        acc = (&acc * &acc).rem(m);
        if exp.bit(i) {
            acc = (&acc * &b).rem(m);
        }
    }
    acc
}

fn factor_squarefree_mod_p(f: &Poly<Scalar>, p: u64) -> Vec<Poly<Scalar>> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f, p) {
        equal_degree(&g, d, p, &mut out);
    }
    out
}

fn distinct_degree(f: &Poly<Scalar>, p: u64) -> Vec<(Poly<Scalar>, usize)> {
    let t = f.leading().unwrap().clone();
    let x = Poly::x(&t);
    let pe = BigUint::from(p);
    let mut out = Vec::new();
    let mut f = f.clone();
    let mut h = x.clone();
    let mut d = 1;
    while f.degree().unwrap_or(0) >= 2 * d {
        h = pow_mod(&h, &pe, &f);
        let g = Poly::gcd(&(&h - &x), &f);
        if !g.is_constant() {
            f = f.exact_div(&g).unwrap();
            h = h.rem(&f);
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(n) = f.degree() {
        if n > 0 {
            out.push((f, n));
        }
    }
    out
}

fn equal_degree(g: &Poly<Scalar>, d: usize, p: u64, out: &mut Vec<Poly<Scalar>>) {
    let n = g.degree().unwrap();
    if n == d {
        out.push(g.clone());
        return;
    }
    let field = g.leading().unwrap().field();
    let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    // Deterministic seed keeps factor order and runtime reproducible.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ (n as u64) ^ (p << 16));
    loop {
        let a = Poly::from_coeffs((0..n).map(|_| field.from_i64(rng.gen_range(0..p as i64))).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = &pow_mod(&a, &exp, g) - &Poly::constant(field.one());
        let h = Poly::gcd(&b, g);
        let k = h.degree().unwrap_or(0);
        if k > 0 && k < n {
            let rest = g.exact_div(&h).unwrap();
            equal_degree(&h, d, p, out);
            equal_degree(&rest, d, p, out);
            return;
        }
    }
}

// ---------------------------------------------------------------- ℚ

type ZPoly = Vec<BigInt>;

fn trim(mut v: ZPoly) -> ZPoly {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn zsub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
            .collect(),
    )
}

fn zcontent(a: &ZPoly) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn symmetric_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Primitive integer polynomial with positive leading coefficient.
fn primitive_part(a: &ZPoly) -> ZPoly {
    let mut c = zcontent(a);
    if a.last().is_some_and(|l| l.is_negative()) {
        c = -c;
    }
    a.iter().map(|x| x / &c).collect()
}

fn to_zpoly(g: &Poly<Scalar>) -> ZPoly {
    let qs: Vec<&BigRational> = g.coeffs().iter().map(|c| c.as_rational().unwrap()).collect();
    let l = qs.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    let v: ZPoly = qs
        .iter()
        .map(|q| (*q * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    primitive_part(&v)
}

fn from_zpoly(a: &ZPoly) -> Poly<Scalar> {
    Poly::from_coeffs(
        a.iter()
            .map(|c| Scalar::Rational(BigRational::from_integer(c.clone())))
            .collect(),
    )
}

fn to_mod(a: &ZPoly, k: ConstantField) -> Poly<Scalar> {
    Poly::from_coeffs(a.iter().map(|c| k.from_bigint(c)).collect())
}

fn from_mod(a: &Poly<Scalar>) -> ZPoly {
    a.coeffs()
        .iter()
        .map(|c| BigInt::from(c.as_modint().unwrap().value()))
        .collect()
}

/// Exact division over ℤ; `None` unless the quotient is integral.
fn zdiv_exact(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    if b.len() > a.len() {
        return None;
    }
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    for i in (0..q.len()).rev() {
        let top = &r[i + b.len() - 1];
        if !(top % lb).is_zero() {
            return None;
        }
        let c = top / lb;
        for (j, bc) in b.iter().enumerate() {
            r[i + j] -= &c * bc;
        }
        q[i] = c;
    }
    r.iter().all(|c| c.is_zero()).then_some(trim(q))
}

fn factor_squarefree_rational(g: &Poly<Scalar>) -> Vec<Poly<Scalar>> {
    let f = to_zpoly(g);
    let mut out: Vec<Poly<Scalar>> = zassenhaus(&f).iter().map(|h| from_zpoly(h).monic()).collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

fn choose_prime(f: &ZPoly) -> (u64, Vec<Poly<Scalar>>) {
    let lc = f.last().unwrap();
    let mut best: Option<(u64, Vec<Poly<Scalar>>)> = None;
    let mut tried = 0;
    let mut p = 5u64;
    while tried < 6 {
        if is_prime_u64(p) && !(lc % BigInt::from(p)).is_zero() {
            let k = ConstantField::PrimeField(p);
            let fm = to_mod(f, k);
            if Poly::gcd(&fm, &fm.derivative()).is_constant() {
                tried += 1;
                let facs = factor_squarefree_mod_p(&fm.monic(), p);
                if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
                    best = Some((p, facs));
                }
            }
        }
        p += 2;
    }
    best.unwrap()
}

fn zassenhaus(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.clone()];
    }
    let (p, modfacs) = choose_prime(f);
    if modfacs.len() == 1 {
        return vec![f.clone()];
    }
    let lc = f.last().unwrap().abs();
    let maxc = f.iter().map(|c| c.abs()).max().unwrap();
    let bound = BigInt::from(2u32).pow(n as u32) * BigInt::from(n as u64 + 1) * maxc * &lc * 2u32;
    let pz = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pz.clone();
    while pk <= bound {
        pk *= &pz;
        k += 1;
    }
    let lifted = hensel_lift(f, &modfacs, p, k);
    recombine(f.clone(), lifted, &pk)
}

fn hensel_lift(f: &ZPoly, facs: &[Poly<Scalar>], p: u64, k: u32) -> Vec<ZPoly> {
    let pk = BigInt::from(p).pow(k);
    if facs.len() == 1 {
        let lc_inv = BigInt::from(
            ConstantField::PrimeField(p)
                .from_bigint(f.last().unwrap())
                .inv()
                .as_modint()
                .unwrap()
                .value(),
        );
        // monic representative mod p^k: multiply by lc^{-1} mod p^k
        let inv = mod_inverse(f.last().unwrap(), &pk, &lc_inv, p);
        return vec![f.iter().map(|c| (c * &inv).mod_floor(&pk)).collect()];
    }
    let mid = facs.len() / 2;
    let prod = |fs: &[Poly<Scalar>]| fs.iter().skip(1).fold(fs[0].clone(), |a, b| &a * b);
    let a = prod(&facs[..mid]);
    let b = prod(&facs[mid..]);
    let (la, lb) = lift_two(f, &a, &b, p, k);
    let mut out = hensel_lift(&la, &facs[..mid], p, k);
    out.extend(hensel_lift(&lb, &facs[mid..], p, k));
    out
}

/// Inverse of `a` modulo p^k by Newton iteration from the inverse mod p.
fn mod_inverse(a: &BigInt, pk: &BigInt, inv_p: &BigInt, p: u64) -> BigInt {
    let mut x = inv_p.clone();
    let mut m = BigInt::from(p);
    while &m < pk {
        m = &m * &m;
        x = (&x * (BigInt::from(2) - a * &x)).mod_floor(&m);
    }
    x.mod_floor(pk)
}

/// Lifts f ≡ lc·a·b (mod p) with a, b monic coprime to f ≡ lc·A·B (mod p^k).
fn lift_two(f: &ZPoly, a: &Poly<Scalar>, b: &Poly<Scalar>, p: u64, k: u32) -> (ZPoly, ZPoly) {
    let field = ConstantField::PrimeField(p);
    let lc = f.last().unwrap().clone();
    let lc_inv_p = field.from_bigint(&lc).inv();
    let (_, s, _) = Poly::ext_gcd(a, b);
    let mut big_a = from_mod(a);
    let mut big_b = from_mod(b);
    let mut m = BigInt::from(p);
    let pz = BigInt::from(p);
    for _ in 1..k {
        let lab: ZPoly = zmul(&big_a, &big_b).iter().map(|c| c * &lc).collect();
        let e = zsub(f, &lab);
        let e_mod: ZPoly = e.iter().map(|c| c / &m).collect();
        let e2 = to_mod(&e_mod, field).scale(&lc_inv_p);
        let sigma = (&e2 * &s).rem(b);
        let tau = (&e2 - &(&sigma * a)).exact_div(b).unwrap();
        let add = |big: &mut ZPoly, d: &Poly<Scalar>| {
            let dz = from_mod(d);
            if big.len() < dz.len() {
                big.resize(dz.len(), BigInt::zero());
            }
            for (i, c) in dz.iter().enumerate() {
                big[i] += c * &m;
            }
        };
        add(&mut big_a, &tau);
        add(&mut big_b, &sigma);
        m *= &pz;
    }
    let red = |v: ZPoly| trim(v.iter().map(|c| c.mod_floor(&m)).collect());
    (red(big_a), red(big_b))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn recombine(mut f: ZPoly, mut lifted: Vec<ZPoly>, pk: &BigInt) -> Vec<ZPoly> {
    let mut result = Vec::new();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut found = None;
        for subset in combinations(lifted.len(), s) {
            let lc = f.last().unwrap().clone();
            let mut g: ZPoly = vec![lc];
            for &i in &subset {
                g = zmul(&g, &lifted[i]);
            }
            let g = trim(g.iter().map(|c| symmetric_mod(c, pk)).collect());
            if g.len() < 2 {
                continue;
            }
            let g = primitive_part(&g);
            if let Some(q) = zdiv_exact(&f, &g) {
                found = Some((subset, g, q));
                break;
            }
        }
        match found {
            Some((subset, g, q)) => {
                result.push(g);
                f = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => s += 1,
        }
    }
    if f.len() > 1 {
        result.push(primitive_part(&f));
    }
    result
}

/// Rational roots of a polynomial over ℚ (used by tests as an independent check).
pub fn rational_roots(q: &Poly<Scalar>) -> Vec<BigRational> {
    let f = to_zpoly(q);
    let a0 = f.iter().find(|c| !c.is_zero()).unwrap().abs();
    let an = f.last().unwrap().abs();
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let n = n.to_u64().expect("rational_roots: coefficient too large");
        (1..=n).filter(|d| n % d == 0).map(BigInt::from).collect()
    };
    let mut roots = Vec::new();
    if f[0].is_zero() {
        roots.push(BigRational::zero());
    }
    for num in divisors(&a0) {
        for den in divisors(&an) {
            for sign in [1, -1] {
                let r = BigRational::new(&num * sign, den.clone());
                if roots.contains(&r) {
                    continue;
                }
                if q.eval(&Scalar::Rational(r.clone())).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(k: ConstantField, cs: &[i64]) -> Poly<Scalar> {
        Poly::from_coeffs(cs.iter().map(|&c| k.from_i64(c)).collect())
    }

    #[test]
    fn legendre_cover_support() {
        // s(s^2-4)(s^2-2) = s^5 - 6 s^3 + 8 s
        let q = ConstantField::Rationals;
        let f = poly(q, &[0, 8, 0, -6, 0, 1]);
        let fac = factor(&f).unwrap();
        let got: Vec<_> = fac.factors.iter().map(|(g, m)| (g.clone(), *m)).collect();
        assert_eq!(
            got,
            vec![
                (poly(q, &[-2, 1]), 1),
                (poly(q, &[0, 1]), 1),
                (poly(q, &[2, 1]), 1),
                (poly(q, &[-2, 0, 1]), 1),
            ]
        );
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn square_mod_5() {
        let k = ConstantField::prime(5).unwrap();
        let fac = factor(&poly(k, &[0, 0, 1])).unwrap();
        assert_eq!(fac.factors, vec![(poly(k, &[0, 1]), 2)]);
    }

    #[test]
    fn u2_minus_3_irreducible() {
        let q = ConstantField::Rationals;
        assert!(is_irreducible(&poly(q, &[-3, 0, 1])));
        assert!(!is_irreducible(&poly(q, &[-4, 0, 1])));
    }

    #[test]
    fn pth_power_parts_mod_p() {
        let k = ConstantField::prime(5).unwrap();
        // (t^5 + 1)(t + 2)^2 = (t+1)^5 (t+2)^2
        let f = &poly(k, &[1, 0, 0, 0, 0, 1]) * &poly(k, &[4, 4, 1]);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors, vec![(poly(k, &[1, 1]), 5), (poly(k, &[2, 1]), 2)]);
    }

    #[test]
    fn swinnerton_dyer_like_recombination() {
        // x^4 - 10x^2 + 1 is irreducible over Q but splits mod every prime.
        let q = ConstantField::Rationals;
        assert!(is_irreducible(&poly(q, &[1, 0, -10, 0, 1])));
        // (x^4 - 10x^2 + 1)(x^2 - 2)(3x + 1)
        let f = &(&poly(q, &[1, 0, -10, 0, 1]) * &poly(q, &[-2, 0, 1])) * &poly(q, &[1, 3]);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors.len(), 3);
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn rational_root_oracle_agrees() {
        let q = ConstantField::Rationals;
        let f = &poly(q, &[-1, 2]) * &poly(q, &[3, 0, 1]);
        assert_eq!(rational_roots(&f), vec![BigRational::new(1.into(), 2.into())]);
    }
}
