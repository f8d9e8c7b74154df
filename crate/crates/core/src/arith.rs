//! Dedekind psi, the generalised family `f_a`, elliptic-point counts and the
//! genus of `X_0(N)`, and certified lower bounds on `|X_0(N)(F_{p^2})|`.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primes::{self, factorize};
use crate::rational::{self, Rational};

/// `psi(N) = prod l^(v-1) (l+1)` over `l^v || N`.
pub fn dedekind_psi(n: u64) -> u64 {
    assert!(n >= 1, "psi is defined for N >= 1");
    factorize(n)
        .into_iter()
        .map(|(l, v)| l.pow(v - 1) * (l + 1))
        .product()
}

pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "phi is defined for N >= 1");
    factorize(n)
        .into_iter()
        .map(|(l, v)| l.pow(v - 1) * (l - 1))
        .product()
}

/// A function `a` on primes taking finitely many values: a default plus
/// explicit exceptions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArithFunctionSpec {
    pub default: i64,
    pub exceptions: BTreeMap<u64, i64>,
}

impl ArithFunctionSpec {
    pub fn new(default: i64, exceptions: BTreeMap<u64, i64>) -> Result<Self> {
        if let Some(&l) = exceptions.keys().find(|&&l| !primes::is_prime(l)) {
            return Err(Error::NotPrime(l));
        }
        Ok(Self { default, exceptions })
    }

    pub fn constant(default: i64) -> Self {
        Self {
            default,
            exceptions: BTreeMap::new(),
        }
    }

    /// `a = 1`, giving Dedekind psi.
    pub fn psi() -> Self {
        Self::constant(1)
    }

    /// `a = -1`, giving Euler phi.
    pub fn phi() -> Self {
        Self::constant(-1)
    }

    pub fn value(&self, l: u64) -> i64 {
        self.exceptions.get(&l).copied().unwrap_or(self.default)
    }

    pub fn is_psi(&self) -> bool {
        self.default == 1 && self.exceptions.values().all(|&v| v == 1)
    }
}

impl fmt::Display for ArithFunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.default)?;
        for (l, v) in &self.exceptions {
            write!(f, ",{l}={v}")?;
        }
        Ok(())
    }
}

/// Parses `"<default>[,<prime>=<value>]*"`, e.g. `"1,7=-7"`.
impl FromStr for ArithFunctionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad arithmetic function {s:?}; expected <default>[,<prime>=<value>]*"));
        let mut parts = s.split(',').map(str::trim);
        let default = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let mut exceptions = BTreeMap::new();
        for part in parts {
            let (l, v) = part.split_once('=').ok_or_else(bad)?;
            let l: u64 = l.trim().parse().map_err(|_| bad())?;
            let v: i64 = v.trim().parse().map_err(|_| bad())?;
            if exceptions.insert(l, v).is_some() {
                return Err(bad());
            }
        }
        Self::new(default, exceptions)
    }
}

/// `f_a(N) = N prod_{l | N} (1 + a(l)/l) = prod l^(v-1) (l + a(l))`, always
/// an integer. It can be zero, or negative when some `a(l) < -l`.
pub fn f_a(n: u64, a: &ArithFunctionSpec) -> i128 {
    assert!(n >= 1, "f_a is defined for N >= 1");
    factorize(n)
        .into_iter()
        .map(|(l, v)| (l as i128).pow(v - 1) * (l as i128 + a.value(l) as i128))
        .product()
}

/// `chi(l) = (-3/l)` with `chi(3) = 0` and `chi(2) = -1`.
pub fn chi_minus3(l: u64) -> i64 {
    match l {
        3 => 0,
        2 => -1,
        _ if l % 3 == 1 => 1,
        _ => -1,
    }
}

/// `chi(l) = (-1/l)` with `chi(2) = 0`.
pub fn chi_minus1(l: u64) -> i64 {
    match l {
        2 => 0,
        _ if l % 4 == 1 => 1,
        _ => -1,
    }
}

/// Number of cusps and of elliptic points of order 2 and 3 on `X_0(N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllipticData {
    pub cusps: u64,
    pub nu2: u64,
    pub nu3: u64,
}

pub fn elliptic_data(n: u64) -> EllipticData {
    assert!(n >= 1, "levels start at 1");
    let fac = factorize(n);
    let cusps = fac
        .iter()
        .map(|&(l, v)| {
            if v % 2 == 1 {
                2 * l.pow((v - 1) / 2)
            } else {
                (l + 1) * l.pow(v / 2 - 1)
            }
        })
        .product();
    let nu3 = if n.is_multiple_of(9) {
        0
    } else {
        fac.iter().map(|&(l, _)| (1 + chi_minus3(l)) as u64).product()
    };
    let nu2 = if n.is_multiple_of(4) {
        0
    } else {
        fac.iter().map(|&(l, _)| (1 + chi_minus1(l)) as u64).product()
    };
    EllipticData { cusps, nu2, nu3 }
}

/// Exact genus of `X_0(N)`:
/// `g = 1 + psi/12 - cusps/2 - nu3/3 - nu2/4`.
///
/// # Panics
/// If the formula does not produce a non-negative integer, which would mean
/// the character conventions are broken.
pub fn genus_x0(n: u64) -> u64 {
    genus_from(n, dedekind_psi(n), &elliptic_data(n))
}

fn genus_from(n: u64, psi: u64, e: &EllipticData) -> u64 {
    let twelve_g = psi as i128 + 12 - 6 * e.cusps as i128 - 4 * e.nu3 as i128 - 3 * e.nu2 as i128;
    assert!(
        twelve_g >= 0 && twelve_g % 12 == 0,
        "genus formula gave 12g = {twelve_g} at N = {n}; elliptic data {e:?}"
    );
    (twelve_g / 12) as u64
}

/// Certified lower bound on `|X_0(N)(F_{p^2})|`.
///
/// Basic: `(p-1) psi(N) / 12`, needs `gcd(N, p) = 1`. Refined adds the
/// elliptic contributions `(1 - (-3/p))/3 nu3 + (1 - (-1/p))/4 nu2`, and
/// needs `N > 1` and `gcd(N, 6p) = 1`.
pub fn point_lower_bound(p: u64, n: u64, refined: bool) -> Result<Rational> {
    if !primes::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::Precondition("level must be positive".into()));
    }
    if n.gcd(&p) != 1 {
        return Err(Error::Precondition(format!("level {n} is not prime to p = {p}")));
    }
    if refined && (n == 1 || n.gcd(&6) != 1) {
        return Err(Error::Precondition(format!(
            "refined bound needs N > 1 prime to 6p (N = {n}, p = {p})"
        )));
    }
    let psi = dedekind_psi(n);
    Ok(lower_bound_from(p, psi, refined.then(|| elliptic_data(n))))
}

fn lower_bound_from(p: u64, psi: u64, elliptic: Option<EllipticData>) -> Rational {
    let mut lb = rational::ratio((p as i128 - 1) * psi as i128, 12);
    if let Some(e) = elliptic {
        lb += rational::ratio((1 - chi_minus3(p)) as i128 * e.nu3 as i128, 3);
        lb += rational::ratio((1 - chi_minus1(p)) as i128 * e.nu2 as i128, 4);
    }
    lb
}

/// A level `N` with the data that feeds the modular-curve bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveCandidate {
    #[serde(rename = "N")]
    pub n: u64,
    pub psi: u64,
    pub genus: u64,
    #[serde(with = "rational::serde_string")]
    pub point_lb: Rational,
    pub refined: bool,
}

/// Levels `N <= n_max` prime to `p` (to `6p`, and `N > 1`, when refined),
/// sorted by genus, then psi, then `N`.
pub fn curve_candidates(p: u64, n_max: u64, refined: bool) -> Result<Vec<CurveCandidate>> {
    if !primes::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n_max > 1_000_000 {
        return Err(Error::OutOfRange(format!("N_max = {n_max} exceeds 10^6")));
    }
    let mut out: Vec<CurveCandidate> = (1..=n_max)
        .filter(|&n| n.gcd(&p) == 1 && (!refined || (n > 1 && n.gcd(&6) == 1)))
        .map(|n| {
            let psi = dedekind_psi(n);
            let e = elliptic_data(n);
            CurveCandidate {
                n,
                psi,
                genus: genus_from(n, psi, &e),
                point_lb: lower_bound_from(p, psi, refined.then_some(e)),
                refined,
            }
        })
        .collect();
    out.sort_by_key(|c| (c.genus, c.psi, c.n));
    Ok(out)
}

/// CSV with columns `N,psi,genus,point_lb_num,point_lb_den,refined`.
pub fn write_candidates_csv<W: Write>(mut w: W, candidates: &[CurveCandidate]) -> Result<()> {
    writeln!(w, "N,psi,genus,point_lb_num,point_lb_den,refined")?;
    for c in candidates {
        writeln!(
            w,
            "{},{},{},{},{},{}",
            c.n,
            c.psi,
            c.genus,
            c.point_lb.numer(),
            c.point_lb.denom(),
            c.refined
        )?;
    }
    Ok(())
}
