//! Dense polynomial kernels over 𝔽_p on raw residues.

#[inline]
pub(crate) fn mul(a: u64, b: u64, p: u64) -> u64 {
    if p < 1 << 32 {
        a * b % p
    } else {
        ((a as u128 * b as u128) % p as u128) as u64
    }
}

#[inline]
fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    assert!(a != 0, "inverse of zero in F_{p}");
    let (mut e, mut base, mut acc) = (p - 2, a, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, base, p);
        }
        base = mul(base, base, p);
        e >>= 1;
    }
    acc
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let n = a.len() + b.len() - 1;
    if p < 1 << 32 {
        // products fit in 64 bits, so sums can wait in 128
        let mut acc = vec![0u128; n];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                acc[i + j] += (x * y) as u128;
            }
        }
        acc.into_iter().map(|c| (c % p as u128) as u64).collect()
    } else {
        let mut out = vec![0u64; n];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                let s = out[i + j] as u128 + mul(x, y, p) as u128;
                out[i + j] = (s % p as u128) as u64;
            }
        }
        out
    }
}

/// Reduces `a` modulo monic `d` in place, returning the quotient.
fn rem_monic(a: &mut Vec<u64>, d: &[u64], p: u64) -> Vec<u64> {
    let dn = d.len();
    if a.len() < dn {
        return Vec::new();
    }
    let mut q = vec![0u64; a.len() - dn + 1];
    for i in (0..q.len()).rev() {
        let c = a[i + dn - 1];
        q[i] = c;
        if c == 0 {
            continue;
        }
        for (j, &dj) in d.iter().enumerate() {
            a[i + j] = sub(a[i + j], mul(c, dj, p), p);
        }
    }
    a.truncate(dn - 1);
    trim(a);
    q
}

fn make_monic(a: &mut [u64], p: u64) {
    if let Some(&l) = a.last() {
        if l != 1 {
            let li = inv(l, p);
            for c in a.iter_mut() {
                *c = mul(*c, li, p);
            }
        }
    }
}

pub(crate) fn poly_div_rem(a: &[u64], d: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let l = *d.last().expect("polynomial division by zero");
    let li = inv(l, p);
    let dm: Vec<u64> = d.iter().map(|&c| mul(c, li, p)).collect();
    let mut r = a.to_vec();
    let mut q = rem_monic(&mut r, &dm, p);
    for c in q.iter_mut() {
        *c = mul(*c, li, p);
    }
    trim(&mut q);
    (q, r)
}

/// Monic gcd.
pub(crate) fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    make_monic(&mut a, p);
    make_monic(&mut b, p);
    while !b.is_empty() {
        rem_monic(&mut a, &b, p);
        make_monic(&mut a, p);
        std::mem::swap(&mut a, &mut b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernels_agree_on_small_cases() {
        let p = 7;
        // (x+1)(x+2) = x² + 3x + 2
        assert_eq!(poly_mul(&[1, 1], &[2, 1], p), vec![2, 3, 1]);
        let (q, r) = poly_div_rem(&[3, 3, 1], &[1, 1], p);
        assert_eq!((q, r), (vec![2, 1], vec![1]));
        assert_eq!(poly_gcd(&[2, 3, 1], &[4, 5, 1], p), vec![1, 1]);
        assert_eq!(poly_gcd(&[2, 3, 1], &[0, 1], p), vec![1]);
        let big = (1u64 << 61) - 1;
        assert_eq!(poly_mul(&[big - 1], &[big - 1], big), vec![1]);
    }
}
