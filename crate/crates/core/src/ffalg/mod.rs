//! Exact arithmetic in prime fields, small extension fields `F_q = F_p[u]/(g)`,
//! and the algebras `F_q[t]/(f)` (field extensions) and `F_q[t]/(t^l)`
//! (truncations).
//!
//! Base-field elements are `u32` indices: the element `c_0 + c_1 u + ...` of
//! `F_p[u]/(g)` has index `c_0 + c_1 p + ...`. For a prime field the index is
//! the residue itself.

pub mod poly;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primes;

pub use poly::{find_irreducible, Poly};

/// The base field `F_q`, `q = p^e`.
#[derive(Clone)]
pub struct BaseField {
    p: u32,
    ext_degree: u32,
    order: u32,
    /// Monic modulus over `F_p` defining the extension; empty for `e = 1`.
    tower: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BaseField")
            .field("p", &self.p)
            .field("q", &self.order)
            .field("tower", &self.tower)
            .finish()
    }
}

impl PartialEq for BaseField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.ext_degree == other.ext_degree && self.tower == other.tower
    }
}

impl Eq for BaseField {}

/// Largest extension-field order we tabulate.
pub const MAX_EXTENSION_ORDER: u64 = 1 << 16;

impl BaseField {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self> {
        if !primes::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(Error::OutOfRange(format!("prime {p} exceeds 2^31")));
        }
        Ok(BaseField {
            p: p as u32,
            ext_degree: 1,
            order: p as u32,
            tower: Vec::new(),
            exp: Vec::new(),
            log: Vec::new(),
        })
    }

    /// `F_q` for a prime power `q`; proper extensions use the modulus
    /// returned by [`find_irreducible`] over `F_p`.
    pub fn new(q: u64) -> Result<Self> {
        let (p, e) = primes::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if e == 1 {
            return Self::prime(p);
        }
        if q > MAX_EXTENSION_ORDER {
            return Err(Error::OutOfRange(format!(
                "extension base field order {q} exceeds {MAX_EXTENSION_ORDER}"
            )));
        }
        let fp = Self::prime(p)?;
        let tower = find_irreducible(&fp, e as usize)?;
        Self::with_tower(p, tower)
    }

    /// `F_p[u]/(tower)`; the tower polynomial must be monic irreducible.
    pub fn with_tower(p: u64, tower: Vec<u32>) -> Result<Self> {
        let fp = Self::prime(p)?;
        if tower.is_empty() {
            return Ok(fp);
        }
        let e = tower.len() - 1;
        if tower.iter().any(|&c| c >= p as u32)
            || tower[e] != 1
            || e < 1
            || !poly::is_irreducible(&fp, &tower)
        {
            return Err(Error::InvalidSpec(format!(
                "tower modulus {tower:?} is not monic irreducible over F_{p}"
            )));
        }
        if e == 1 {
            // a degree-1 tower is just F_p
            return Ok(fp);
        }
        let order = p
            .checked_pow(e as u32)
            .filter(|&q| q <= MAX_EXTENSION_ORDER)
            .ok_or_else(|| Error::OutOfRange(format!("{p}^{e} exceeds {MAX_EXTENSION_ORDER}")))?
            as u32;
        let mut field = BaseField {
            p: p as u32,
            ext_degree: e as u32,
            order,
            tower,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let fp = BaseField::prime(self.p as u64).unwrap();
        let prod = poly::mul(&fp, &self.digits(a), &self.digits(b));
        let r = poly::rem(&fp, &prod, &self.tower);
        self.from_digits(&r)
    }

    fn build_tables(&mut self) {
        let n = self.order as usize - 1;
        for g in 2..self.order {
            let mut exp = Vec::with_capacity(n);
            let mut x = 1u32;
            for _ in 0..n {
                exp.push(x);
                x = self.slow_mul(x, g);
                if x == 1 {
                    break;
                }
            }
            if exp.len() == n && x == 1 {
                let mut log = vec![0u32; self.order as usize];
                for (i, &v) in exp.iter().enumerate() {
                    log[v as usize] = i as u32;
                }
                self.exp = exp;
                self.log = log;
                return;
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic");
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn ext_degree(&self) -> u32 {
        self.ext_degree
    }

    pub fn tower(&self) -> &[u32] {
        &self.tower
    }

    pub fn is_prime_field(&self) -> bool {
        self.ext_degree == 1
    }

    /// Coordinates over `F_p`, little-endian, length `e`.
    pub fn digits(&self, a: u32) -> Vec<u32> {
        let mut a = a;
        (0..self.ext_degree)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.order
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.ext_degree == 1 {
            let s = a as u64 + b as u64;
            return (s % self.p as u64) as u32;
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0u32, 1u32);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.ext_degree == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        if self.p == 2 {
            return a;
        }
        let (mut a, mut out, mut place) = (a, 0u32, 1u32);
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if self.ext_degree == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.order - 1;
        let i = (self.log[a as usize] + self.log[b as usize]) % n;
        self.exp[i as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if self.ext_degree == 1 {
            let p = self.p as u64;
            return Some(primes::pow_mod(a as u64, p - 2, p) as u32);
        }
        let n = self.order - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// JSON form of an element: an integer over a prime field, else the
    /// list of its `F_p` coordinates.
    pub fn encode(&self, a: u32) -> Coeff {
        if self.is_prime_field() {
            Coeff::Scalar(a)
        } else {
            Coeff::Vector(self.digits(a))
        }
    }

    pub fn decode(&self, c: &Coeff) -> Result<u32> {
        match c {
            Coeff::Scalar(a) if self.is_prime_field() => {
                if *a < self.p {
                    Ok(*a)
                } else {
                    Err(Error::Malformed(format!("residue {a} not reduced mod {}", self.p)))
                }
            }
            Coeff::Vector(d) if d.len() == self.ext_degree as usize => {
                if d.iter().all(|&x| x < self.p) {
                    Ok(self.from_digits(d))
                } else {
                    Err(Error::Malformed(format!("coordinates {d:?} not reduced mod {}", self.p)))
                }
            }
            other => Err(Error::Malformed(format!(
                "coefficient {other:?} does not match F_{}",
                self.order
            ))),
        }
    }
}

/// Serialized base-field element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Scalar(u32),
    Vector(Vec<u32>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AlgebraKind {
    #[serde(rename = "field")]
    Field,
    #[serde(rename = "trunc")]
    Truncation,
}

/// `F_q[t]/(modulus)` with a monic modulus of degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    base: Arc<BaseField>,
    kind: AlgebraKind,
    modulus: Vec<u32>,
}

/// Element of an algebra: `degree` coefficients over the base field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    pub coeffs: Vec<u32>,
}

impl AlgebraElement {
    pub fn new(coeffs: Vec<u32>) -> Self {
        AlgebraElement { coeffs }
    }

    pub fn zero(k: usize) -> Self {
        AlgebraElement { coeffs: vec![0; k] }
    }

    pub fn one(k: usize) -> Self {
        Self::basis(k, 0)
    }

    /// The monomial `t^i`.
    pub fn basis(k: usize, i: usize) -> Self {
        let mut coeffs = vec![0; k];
        coeffs[i] = 1;
        AlgebraElement { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl AlgebraSpec {
    /// `F_{q^k}` presented by the smallest monic irreducible of degree `k`.
    pub fn field(q: u64, k: usize) -> Result<Self> {
        Self::field_over(Arc::new(BaseField::new(q)?), k)
    }

    pub fn field_over(base: Arc<BaseField>, k: usize) -> Result<Self> {
        let modulus = find_irreducible(&base, k)?;
        Ok(AlgebraSpec {
            base,
            kind: AlgebraKind::Field,
            modulus,
        })
    }

    /// `F_q[t]/(t^l)`.
    pub fn truncation(q: u64, l: usize) -> Result<Self> {
        Self::truncation_over(Arc::new(BaseField::new(q)?), l)
    }

    pub fn truncation_over(base: Arc<BaseField>, l: usize) -> Result<Self> {
        if l == 0 {
            return Err(Error::Precondition("truncation length must be at least 1".into()));
        }
        let mut modulus = vec![0; l + 1];
        modulus[l] = 1;
        Ok(AlgebraSpec {
            base,
            kind: AlgebraKind::Truncation,
            modulus,
        })
    }

    /// Validating constructor for an explicit modulus.
    pub fn from_parts(base: Arc<BaseField>, kind: AlgebraKind, modulus: Vec<u32>) -> Result<Self> {
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidSpec(format!(
                "modulus {modulus:?} is not monic of degree >= 1"
            )));
        }
        if modulus.iter().any(|&c| !base.contains(c)) {
            return Err(Error::InvalidSpec("modulus coefficient outside the base field".into()));
        }
        let k = modulus.len() - 1;
        match kind {
            AlgebraKind::Field => {
                if !poly::is_irreducible(&base, &modulus) {
                    return Err(Error::InvalidSpec(format!(
                        "modulus {modulus:?} is reducible over F_{}",
                        base.order()
                    )));
                }
            }
            AlgebraKind::Truncation => {
                if modulus[..k].iter().any(|&c| c != 0) {
                    return Err(Error::InvalidSpec(format!("truncation modulus must be t^{k}")));
                }
            }
        }
        Ok(AlgebraSpec { base, kind, modulus })
    }

    pub fn base(&self) -> &BaseField {
        &self.base
    }

    pub fn base_arc(&self) -> &Arc<BaseField> {
        &self.base
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// `q^k`, saturating.
    pub fn cardinality(&self) -> u128 {
        (self.base.order() as u128)
            .checked_pow(self.degree() as u32)
            .unwrap_or(u128::MAX)
    }

    pub fn check(&self, x: &AlgebraElement) -> Result<()> {
        if x.coeffs.len() != self.degree() {
            return Err(Error::DimensionMismatch {
                expected: self.degree(),
                got: x.coeffs.len(),
            });
        }
        if x.coeffs.iter().any(|&c| !self.base.contains(c)) {
            return Err(Error::Malformed("coefficient outside the base field".into()));
        }
        Ok(())
    }

    /// Reduces an arbitrary polynomial into the algebra.
    pub fn reduce(&self, a: &[u32]) -> AlgebraElement {
        let k = self.degree();
        let mut coeffs = match self.kind {
            AlgebraKind::Truncation => a.iter().take(k).copied().collect(),
            AlgebraKind::Field => poly::rem(&self.base, a, &self.modulus),
        };
        coeffs.resize(k, 0);
        AlgebraElement { coeffs }
    }

    pub fn add(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(AlgebraElement {
            coeffs: x
                .coeffs
                .iter()
                .zip(&y.coeffs)
                .map(|(&a, &b)| self.base.add(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, x: &AlgebraElement, c: u32) -> AlgebraElement {
        AlgebraElement {
            coeffs: x.coeffs.iter().map(|&a| self.base.mul(a, c)).collect(),
        }
    }

    /// Product in the algebra.
    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.reduce(&poly::mul(&self.base, &x.coeffs, &y.coeffs)))
    }

    /// Multiplicative inverse by the extended Euclidean algorithm; `None` for
    /// non-units.
    pub fn inverse(&self, x: &AlgebraElement) -> Result<Option<AlgebraElement>> {
        self.check(x)?;
        let f = &*self.base;
        let (mut r0, mut r1) = (self.modulus.clone(), poly::trim(x.coeffs.clone()));
        let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = poly::div_rem(f, &r0, &r1);
            let s = poly::sub(f, &s0, &poly::mul(f, &q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if poly::degree(&r0) != Some(0) {
            return Ok(None);
        }
        let c = f.inv(r0[0]).unwrap();
        Ok(Some(self.reduce(&poly::scale(f, &s0, c))))
    }

    /// Table of products of the monomial basis `e_i = t^i`.
    pub fn basis_products(&self) -> Vec<Vec<AlgebraElement>> {
        let k = self.degree();
        (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let mut mono = vec![0u32; i + j + 1];
                        mono[i + j] = 1;
                        self.reduce(&mono)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn encode_element(&self, x: &AlgebraElement) -> Vec<Coeff> {
        x.coeffs.iter().map(|&c| self.base.encode(c)).collect()
    }

    pub fn decode_element(&self, v: &[Coeff]) -> Result<AlgebraElement> {
        if v.len() != self.degree() {
            return Err(Error::DimensionMismatch {
                expected: self.degree(),
                got: v.len(),
            });
        }
        Ok(AlgebraElement {
            coeffs: v.iter().map(|c| self.base.decode(c)).collect::<Result<_>>()?,
        })
    }

    pub fn to_json(&self) -> AlgebraSpecJson {
        AlgebraSpecJson {
            p: self.base.characteristic() as u64,
            tower: self.base.tower().to_vec(),
            kind: self.kind,
            degree: self.degree(),
            modulus: self.modulus.iter().map(|&c| self.base.encode(c)).collect(),
        }
    }

    pub fn from_json(j: &AlgebraSpecJson) -> Result<Self> {
        let base = Arc::new(BaseField::with_tower(j.p, j.tower.clone())?);
        if j.modulus.len() != j.degree + 1 {
            return Err(Error::InvalidSpec(format!(
                "modulus has {} coefficients, degree is {}",
                j.modulus.len(),
                j.degree
            )));
        }
        let modulus = j
            .modulus
            .iter()
            .map(|c| base.decode(c))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::InvalidSpec(e.to_string()))?;
        Self::from_parts(base, j.kind, modulus)
    }

    /// Human-readable rendering of an element, e.g. `g^2+2g+1` style with
    /// the variable `t`.
    pub fn render(&self, x: &AlgebraElement) -> String {
        let terms: Vec<String> = x
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let c = if self.base.is_prime_field() {
                    c.to_string()
                } else {
                    format!("{:?}", self.base.digits(c))
                };
                match (i, c.as_str()) {
                    (0, _) => c,
                    (1, "1") => "t".into(),
                    (1, _) => format!("{c}*t"),
                    (_, "1") => format!("t^{i}"),
                    _ => format!("{c}*t^{i}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Wire form of an [`AlgebraSpec`]; coefficients little-endian.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpecJson {
    pub p: u64,
    pub tower: Vec<u32>,
    pub kind: AlgebraKind,
    pub degree: usize,
    pub modulus: Vec<Coeff>,
}

/// Free-function form of [`AlgebraSpec::multiply`].
pub fn multiply(spec: &AlgebraSpec, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    spec.multiply(x, y)
}

/// Free-function form of [`AlgebraSpec::basis_products`].
pub fn basis_products(spec: &AlgebraSpec) -> Vec<Vec<AlgebraElement>> {
    spec.basis_products()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn el(c: &[u32]) -> AlgebraElement {
        AlgebraElement::new(c.to_vec())
    }

    #[test]
    fn f4_generator_squared() {
        let f4 = AlgebraSpec::field(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let g = el(&[0, 1]);
        assert_eq!(f4.multiply(&g, &g).unwrap(), el(&[1, 1]));
    }

    #[test]
    fn truncation_kills_top() {
        let a = AlgebraSpec::truncation(2, 2).unwrap();
        let t = el(&[0, 1]);
        assert_eq!(a.multiply(&t, &t).unwrap(), el(&[0, 0]));
    }

    #[test]
    fn f9_product() {
        let f9 = AlgebraSpec::field(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        // (t+1)(t+2) = t^2 + 2 = 1
        assert_eq!(f9.multiply(&el(&[1, 1]), &el(&[2, 1])).unwrap(), el(&[1, 0]));
    }

    #[test]
    fn dimension_mismatch() {
        let f4 = AlgebraSpec::field(2, 2).unwrap();
        assert!(matches!(
            f4.multiply(&el(&[1]), &el(&[1, 0])),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn basis_tables() {
        let a = AlgebraSpec::truncation(2, 2).unwrap();
        let t = a.basis_products();
        assert_eq!(t[0][0], el(&[1, 0]));
        assert_eq!(t[0][1], el(&[0, 1]));
        assert_eq!(t[1][1], el(&[0, 0]));

        let f4 = AlgebraSpec::field(2, 2).unwrap();
        let t = f4.basis_products();
        assert_eq!(t, vec![vec![el(&[1, 0]), el(&[0, 1])], vec![el(&[0, 1]), el(&[1, 1])]]);

        let a = AlgebraSpec::truncation(3, 3).unwrap();
        assert!(a.basis_products()[2][2].is_zero());
    }

    #[test]
    fn basis_tables_symmetric() {
        for (q, k) in [(2, 3), (3, 3), (4, 2), (5, 4), (9, 2), (7, 5)] {
            for spec in [AlgebraSpec::field(q, k).unwrap(), AlgebraSpec::truncation(q, k).unwrap()] {
                let t = spec.basis_products();
                for i in 0..k {
                    for j in 0..k {
                        assert_eq!(t[i][j], t[j][i]);
                    }
                }
            }
        }
    }

    #[test]
    fn extension_base_fields() {
        for q in [4u64, 8, 9, 16, 25, 27, 49] {
            let f = BaseField::new(q).unwrap();
            assert_eq!(f.order() as u64, q);
            for a in 1..f.order() {
                let inv = f.inv(a).unwrap();
                assert_eq!(f.mul(a, inv), 1, "q={q} a={a}");
                assert_eq!(f.add(a, f.neg(a)), 0);
            }
            // F_q^* has order q-1
            for a in 1..f.order() {
                assert_eq!(f.pow(a, q - 1), 1);
            }
        }
        assert!(BaseField::new(12).is_err());
        assert!(BaseField::new(1 << 17).is_err());
    }

    #[test]
    fn every_nonzero_element_is_invertible() {
        for (q, k) in [(2u64, 8usize), (2, 16), (3, 5), (4, 4), (5, 3), (16, 2), (256, 2)] {
            let spec = AlgebraSpec::field(q, k).unwrap();
            let size = spec.cardinality() as u64;
            assert!(size <= 1 << 16);
            let one = AlgebraElement::one(k);
            let qq = q;
            for idx in 1..size {
                let x = el(&(0..k)
                    .map(|i| ((idx / qq.pow(i as u32)) % qq) as u32)
                    .collect::<Vec<_>>());
                let inv = spec.inverse(&x).unwrap().expect("unit");
                assert_eq!(spec.multiply(&x, &inv).unwrap(), one);
            }
        }
        let trunc = AlgebraSpec::truncation(3, 2).unwrap();
        assert_eq!(trunc.inverse(&el(&[0, 1])).unwrap(), None);
    }

    #[test]
    fn ring_axioms_random_triples() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let specs = [
            AlgebraSpec::field(2, 7).unwrap(),
            AlgebraSpec::field(5, 3).unwrap(),
            AlgebraSpec::field(4, 5).unwrap(),
            AlgebraSpec::field(13, 4).unwrap(),
            AlgebraSpec::truncation(3, 6).unwrap(),
            AlgebraSpec::truncation(9, 4).unwrap(),
        ];
        for spec in &specs {
            let q = spec.base().order();
            let k = spec.degree();
            let mut rand_el = || el(&(0..k).map(|_| rng.gen_range(0..q)).collect::<Vec<_>>());
            for _ in 0..200 {
                let (x, y, z) = (rand_el(), rand_el(), rand_el());
                let m = |a: &AlgebraElement, b: &AlgebraElement| spec.multiply(a, b).unwrap();
                assert_eq!(m(&x, &y), m(&y, &x));
                assert_eq!(m(&m(&x, &y), &z), m(&x, &m(&y, &z)));
                let lhs = m(&x, &spec.add(&y, &z).unwrap());
                let rhs = spec.add(&m(&x, &y), &m(&x, &z)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn json_spec_round_trip_and_validation() {
        for spec in [
            AlgebraSpec::field(7, 3).unwrap(),
            AlgebraSpec::field(4, 3).unwrap(),
            AlgebraSpec::truncation(25, 2).unwrap(),
        ] {
            let j = serde_json::to_string(&spec.to_json()).unwrap();
            let back: AlgebraSpecJson = serde_json::from_str(&j).unwrap();
            assert_eq!(AlgebraSpec::from_json(&back).unwrap(), spec);
        }
        let j = r#"{"p":2,"tower":[],"kind":"field","degree":2,"modulus":[1,0,1]}"#;
        let bad: AlgebraSpecJson = serde_json::from_str(j).unwrap();
        assert!(matches!(AlgebraSpec::from_json(&bad), Err(Error::InvalidSpec(_))));
        let j = r#"{"p":2,"tower":[],"kind":"trunc","degree":2,"modulus":[1,0,1]}"#;
        let bad: AlgebraSpecJson = serde_json::from_str(j).unwrap();
        assert!(AlgebraSpec::from_json(&bad).is_err());
    }

    #[test]
    fn f4_json_uses_coordinate_pairs() {
        let spec = AlgebraSpec::field(4, 2).unwrap();
        let j = serde_json::to_value(spec.to_json()).unwrap();
        assert_eq!(j["tower"], serde_json::json!([1, 1, 1]));
        assert!(j["modulus"][2].is_array());
    }

    proptest! {
        #[test]
        fn prime_field_mul_matches_u64(a in 0u32..1_000_003, b in 0u32..1_000_003) {
            let f = BaseField::prime(1_000_003).unwrap();
            prop_assert_eq!(f.mul(a, b) as u64, a as u64 * b as u64 % 1_000_003);
            prop_assert_eq!(f.add(a, b) as u64, (a as u64 + b as u64) % 1_000_003);
        }
    }
}
