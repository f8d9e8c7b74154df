//! Dense polynomials over a [`BaseField`], little-endian coefficient vectors.

use super::BaseField;
use crate::error::{Error, Result};
use crate::primes;

pub type Poly = Vec<u32>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree, with `None` for the zero polynomial.
pub fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn add(f: &BaseField, a: &[u32], b: &[u32]) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            f.add(
                a.get(i).copied().unwrap_or(0),
                b.get(i).copied().unwrap_or(0),
            )
        })
        .collect();
    trim(out)
}

pub fn sub(f: &BaseField, a: &[u32], b: &[u32]) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            f.sub(
                a.get(i).copied().unwrap_or(0),
                b.get(i).copied().unwrap_or(0),
            )
        })
        .collect();
    trim(out)
}

pub fn scale(f: &BaseField, a: &[u32], c: u32) -> Poly {
    trim(a.iter().map(|&x| f.mul(x, c)).collect())
}

pub fn mul(f: &BaseField, a: &[u32], b: &[u32]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Quotient and remainder; `b` must be nonzero.
pub fn div_rem(f: &BaseField, a: &[u32], b: &[u32]) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = f.inv(b[db]).expect("nonzero leading coefficient");
    let mut r: Poly = trim(a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u32; r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = f.mul(r[dr], lead_inv);
        let shift = dr - db;
        q[shift] = c;
        for (i, &bi) in b[..=db].iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(c, bi));
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn rem(f: &BaseField, a: &[u32], b: &[u32]) -> Poly {
    div_rem(f, a, b).1
}

pub fn make_monic(f: &BaseField, a: &[u32]) -> Poly {
    match degree(a) {
        None => Vec::new(),
        Some(d) => scale(f, a, f.inv(a[d]).unwrap()),
    }
}

pub fn gcd(f: &BaseField, a: &[u32], b: &[u32]) -> Poly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    make_monic(f, &x)
}

/// `a^e mod m`.
pub fn pow_mod(f: &BaseField, a: &[u32], mut e: u64, m: &[u32]) -> Poly {
    let mut base = rem(f, a, m);
    let mut acc = rem(f, &[1], m);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(f, &mul(f, &acc, &base), m);
        }
        base = rem(f, &mul(f, &base, &base), m);
        e >>= 1;
    }
    acc
}

pub fn eval(f: &BaseField, a: &[u32], x: u32) -> u32 {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Rabin's test: `f` of degree `k` is irreducible iff `t^(q^k) = t mod f` and
/// `gcd(t^(q^(k/r)) - t, f) = 1` for every prime `r | k`.
pub fn is_irreducible(field: &BaseField, f: &[u32]) -> bool {
    let k = match degree(f) {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(k) => k,
    };
    let f = make_monic(field, f);
    let q = field.order() as u64;
    let t: Poly = vec![0, 1];
    let mut frob = Vec::with_capacity(k + 1);
    frob.push(t.clone());
    for j in 1..=k {
        let next = pow_mod(field, &frob[j - 1], q, &f);
        frob.push(next);
    }
    if frob[k] != t {
        return false;
    }
    primes::prime_divisors(k as u64).into_iter().all(|r| {
        let h = sub(field, &frob[k / r as usize], &t);
        degree(&gcd(field, &h, &f)) == Some(0)
    })
}

/// Smallest monic irreducible polynomial of degree `k` over `field`, where
/// candidates are compared lexicographically on their little-endian
/// coefficient vectors (constant term first, then `t`, ...).
pub fn find_irreducible(field: &BaseField, k: usize) -> Result<Poly> {
    if k == 0 {
        return Err(Error::Precondition("degree must be at least 1".into()));
    }
    let q = field.order();
    let bits = (q as f64).log2() * k as f64;
    if q > 1 << 16 || bits > 64.0 + 1e-9 {
        return Err(Error::OutOfRange(format!(
            "irreducible search needs q <= 2^16 and k*log2(q) <= 64 (q={q}, k={k})"
        )));
    }
    let mut c = vec![0u32; k];
    if k >= 2 {
        // multiples of t are reducible
        c[0] = 1;
    }
    loop {
        let mut cand = c.clone();
        cand.push(1);
        if is_irreducible(field, &cand) {
            return Ok(cand);
        }
        // odometer: the last coefficient moves fastest
        let mut i = k;
        loop {
            if i == 0 {
                unreachable!("an irreducible polynomial of every degree exists");
            }
            i -= 1;
            c[i] += 1;
            if c[i] < q {
                break;
            }
            c[i] = 0;
        }
    }
}
