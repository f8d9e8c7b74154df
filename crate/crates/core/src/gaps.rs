//! Ceilings `ceil_A(x) = min A ∩ [x, inf)` and relative gaps
//! `eps_A(x) = sup_{y >= x} (ceil_A(y) - y)/y` over integer value sets:
//! primes, images of `f_a` (optionally restricted to levels prime to `m`),
//! and psi values of smooth levels.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::ArithFunctionSpec;
use crate::error::{Error, Result};
use crate::primes;
use crate::rational::{self, Rational};

/// Largest value bound accepted for `f_a` images.
pub const FA_VALUE_LIMIT: u64 = 10_000_000;
/// Largest value bound accepted for primes.
pub const PRIME_VALUE_LIMIT: u64 = 1_000_000_000;
/// Largest level the `f_a` scanner will visit.
const FA_SCAN_LIMIT: u64 = 1 << 28;

/// An infinite set of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ValueSet {
    Primes,
    /// `{ f_a(N) : gcd(N, coprime_to) = 1 }`, positive values only.
    FaImage {
        a: ArithFunctionSpec,
        coprime_to: Option<u64>,
    },
    /// `{ N' psi(N_B) : N' B-smooth }` with `N_B = prod B`, i.e. psi of the
    /// levels divisible by every prime of `B` and by no other prime.
    SmoothPsi { base: Vec<u64>, excluded: u64 },
    /// `{ psi(2^j) : j >= 1 } = { 3 * 2^j }`.
    Power2Psi,
}

impl ValueSet {
    /// `psi(N)` over levels prime to `p`.
    pub fn psi_coprime(p: u64) -> Self {
        ValueSet::FaImage {
            a: ArithFunctionSpec::psi(),
            coprime_to: Some(p),
        }
    }

    pub fn phi() -> Self {
        ValueSet::FaImage {
            a: ArithFunctionSpec::phi(),
            coprime_to: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ValueSet::Primes | ValueSet::Power2Psi => Ok(()),
            ValueSet::FaImage { coprime_to, .. } => match coprime_to {
                Some(0) => Err(Error::InvalidSpec("coprimality modulus must be positive".into())),
                _ => Ok(()),
            },
            ValueSet::SmoothPsi { base, excluded } => check_smooth_base(base, *excluded),
        }
    }
}

impl fmt::Display for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueSet::Primes => f.write_str("primes"),
            ValueSet::FaImage { a, coprime_to } => {
                if a.is_psi() && a.exceptions.is_empty() {
                    match coprime_to {
                        Some(m) => return write!(f, "psi-coprime:{m}"),
                        None => return f.write_str("psi"),
                    }
                }
                if *a == ArithFunctionSpec::phi() && coprime_to.is_none() {
                    return f.write_str("phi");
                }
                write!(f, "fa:{a}")?;
                if let Some(m) = coprime_to {
                    write!(f, ";coprime={m}")?;
                }
                Ok(())
            }
            ValueSet::SmoothPsi { base, excluded } => {
                let b: Vec<String> = base.iter().map(u64::to_string).collect();
                write!(f, "smooth-psi:{}:{excluded}", b.join(","))
            }
            ValueSet::Power2Psi => f.write_str("power2-psi"),
        }
    }
}

/// Accepts `primes`, `psi`, `psi-coprime:<p>`, `phi`,
/// `fa:<default>[,<prime>=<value>]*[;coprime=<m>]`, `power2-psi` and
/// `smooth-psi:<l1>,<l2>,...:<p>`.
impl FromStr for ValueSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown value set {s:?}"));
        let set = match s.trim() {
            "primes" => ValueSet::Primes,
            "phi" => ValueSet::phi(),
            "psi" => ValueSet::FaImage {
                a: ArithFunctionSpec::psi(),
                coprime_to: None,
            },
            "power2-psi" => ValueSet::Power2Psi,
            t => {
                if let Some(p) = t.strip_prefix("psi-coprime:") {
                    ValueSet::psi_coprime(p.trim().parse().map_err(|_| bad())?)
                } else if let Some(rest) = t.strip_prefix("fa:") {
                    let (a, m) = match rest.split_once(';') {
                        Some((a, m)) => {
                            let m = m.trim().strip_prefix("coprime=").ok_or_else(bad)?;
                            (a, Some(m.trim().parse().map_err(|_| bad())?))
                        }
                        None => (rest, None),
                    };
                    ValueSet::FaImage {
                        a: a.parse()?,
                        coprime_to: m,
                    }
                } else if let Some(rest) = t.strip_prefix("smooth-psi:") {
                    let (b, p) = rest.rsplit_once(':').ok_or_else(bad)?;
                    let base = b
                        .split(',')
                        .map(|l| l.trim().parse().map_err(|_| bad()))
                        .collect::<Result<Vec<u64>>>()?;
                    ValueSet::SmoothPsi {
                        base,
                        excluded: p.trim().parse().map_err(|_| bad())?,
                    }
                } else {
                    return Err(bad());
                }
            }
        };
        set.validate()?;
        Ok(set)
    }
}

/// `ceil_A(x)`, with the level realising it when the set is a psi or `f_a`
/// image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ceiling {
    pub value: u64,
    pub witness: Option<u64>,
}

fn ceil_pos(x: &Rational) -> u64 {
    rational::ceil(x).max(1) as u64
}

fn check_x(x: &Rational) -> Result<()> {
    if !rational::is_positive(x) {
        return Err(Error::Precondition(format!(
            "query point must be positive, got {}",
            rational::to_string(x)
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// f_a images

/// Calls `visit(N, f_a(N))` for `N` in `start..=hi` prime to `coprime_to`,
/// in increasing order. Segmented: primes up to `sqrt(hi)` are divided out
/// and any remaining cofactor is a single large prime.
fn scan_fa(
    a: &ArithFunctionSpec,
    coprime_to: Option<u64>,
    start: u64,
    hi: u64,
    mut visit: impl FnMut(u64, i128),
) {
    const SEG: u64 = 1 << 16;
    let small = primes::primes_up_to(hi.isqrt());
    let mut rem = Vec::with_capacity(SEG as usize);
    let mut val = Vec::with_capacity(SEG as usize);
    let mut lo = start.max(1);
    while lo <= hi {
        let top = (lo + SEG - 1).min(hi);
        rem.clear();
        rem.extend(lo..=top);
        val.clear();
        val.resize(rem.len(), 1i128);
        for &l in &small {
            let first = lo.div_ceil(l) * l;
            let factor = l as i128 + a.value(l) as i128;
            let mut m = first;
            while m <= top {
                let i = (m - lo) as usize;
                let mut pw: i128 = 1;
                rem[i] /= l;
                while rem[i] % l == 0 {
                    rem[i] /= l;
                    pw *= l as i128;
                }
                val[i] = val[i].saturating_mul(pw.saturating_mul(factor));
                m += l;
            }
        }
        for (i, (&r, v)) in rem.iter().zip(val.iter_mut()).enumerate() {
            if r > 1 {
                *v = v.saturating_mul(r as i128 + a.value(r) as i128);
            }
            let n = lo + i as u64;
            if coprime_to.is_none_or(|m| n.gcd(&m) == 1) {
                visit(n, *v);
            }
        }
        lo = top + 1;
    }
}

/// Level bound `B` such that every admissible `N > B` has `f_a(N) = 0` or
/// `|f_a(N)| > v_max`.
///
/// Each prime contributes a factor `|1 + a(l)/l|` to `f_a(N)/N`; factors
/// below 1 are what allow `f_a(N) < N`. With a non-negative default only the
/// finitely many exceptions do this. With a negative default, a level below
/// `M` has at most `s(M)` prime factors (the largest `s` whose primorial is
/// `<= M`), so `f_a(N)/N` is at least the product of the `s(M)` smallest
/// default factors; the bound is then located dyadically.
fn fa_scan_limit(a: &ArithFunctionSpec, coprime_to: Option<u64>, v_max: u64) -> Result<u64> {
    let admissible = |l: u64| coprime_to.is_none_or(|m| m % l != 0);
    let floor_factor = |l: u64| -> f64 {
        let r = 1.0 + a.value(l) as f64 / l as f64;
        if r == 0.0 { 1.0 } else { r.abs().min(1.0) }
    };
    // slack against rounding in the float products
    const SLACK: f64 = 1.0 - 1e-9;
    let exc: f64 = a
        .exceptions
        .keys()
        .filter(|&&l| admissible(l))
        .map(|&l| floor_factor(l))
        .product::<f64>()
        * SLACK;

    let too_big = || {
        Error::OutOfRange(format!(
            "enumerating f_a values up to {v_max} needs levels beyond {FA_SCAN_LIMIT}"
        ))
    };
    if a.default >= 0 {
        let b = (v_max as f64 / exc).floor() as u64 + 1;
        return if b > FA_SCAN_LIMIT { Err(too_big()) } else { Ok(b) };
    }

    let d = a.default.unsigned_abs();
    let mut factors = Vec::new();
    let mut beyond = 0;
    let mut l = 2;
    while beyond < 64 {
        if !a.exceptions.contains_key(&l) && admissible(l) {
            factors.push(floor_factor(l));
            if l > d {
                beyond += 1;
            }
        }
        l = primes::next_prime(l + 1);
    }
    factors.sort_by(f64::total_cmp);

    for j in 0..62u32 {
        let s = max_prime_factors(1 << (j + 1));
        let c = exc * factors[..s].iter().product::<f64>() * SLACK;
        if (1u64 << j) as f64 * c > v_max as f64 && factors[s] >= 0.5 {
            let b = (1u64 << j) - 1;
            return if b > FA_SCAN_LIMIT { Err(too_big()) } else { Ok(b) };
        }
    }
    Err(too_big())
}

/// Largest number of distinct prime factors of an integer `<= m`.
fn max_prime_factors(m: u64) -> usize {
    let mut s = 0;
    let mut primorial: u64 = 1;
    let mut l = 2;
    while let Some(next) = primorial.checked_mul(l).filter(|&v| v <= m) {
        primorial = next;
        s += 1;
        l = primes::next_prime(l + 1);
    }
    s
}

/// Smallest level `N <= hi` that can have `f_a(N) >= lo`: `f_a(N)/N` is at
/// most the product of the `s(hi)` largest factors `max(1, |1 + a(l)/l|)`.
/// For a non-negative default these sit at the smallest primes; for a
/// negative default, factors above 1 only occur at `l < |default|/2`.
fn fa_level_floor(a: &ArithFunctionSpec, coprime_to: Option<u64>, lo: u64, hi: u64) -> u64 {
    let admissible = |l: u64| coprime_to.is_none_or(|m| m % l != 0);
    let ceil_factor = |l: u64| (1.0 + a.value(l) as f64 / l as f64).abs().max(1.0);
    let reach = 2 * a.default.unsigned_abs();
    let mut factors: Vec<f64> = a.exceptions.keys().filter(|&&l| admissible(l)).map(|&l| ceil_factor(l)).collect();
    let mut count = 0;
    let mut l = 2;
    while count < 64 || l <= reach {
        if !a.exceptions.contains_key(&l) && admissible(l) {
            factors.push(ceil_factor(l));
            count += 1;
        }
        l = primes::next_prime(l + 1);
    }
    factors.sort_by(|x, y| y.total_cmp(x));
    let g: f64 = factors.iter().take(max_prime_factors(hi)).product::<f64>() * (1.0 + 1e-9);
    ((lo as f64 / g).floor() as u64).max(1)
}

/// Positive values of `f_a` up to `v_max`, each with its smallest level.
fn fa_values(a: &ArithFunctionSpec, coprime_to: Option<u64>, v_max: u64) -> Result<BTreeMap<u64, u64>> {
    let hi = fa_scan_limit(a, coprime_to, v_max)?;
    let mut out = BTreeMap::new();
    scan_fa(a, coprime_to, 1, hi, |n, v| {
        if v >= 1 && v <= v_max as i128 {
            out.entry(v as u64).or_insert(n);
        }
    });
    Ok(out)
}

/// Smallest positive value in `[lo, v_max]`, with its smallest level.
fn fa_min_in(a: &ArithFunctionSpec, coprime_to: Option<u64>, lo: u64, v_max: u64, hi: u64) -> Option<(u64, u64)> {
    let mut best: Option<(u64, u64)> = None;
    let start = fa_level_floor(a, coprime_to, lo, hi);
    scan_fa(a, coprime_to, start, hi, |n, v| {
        if v >= lo as i128 && v <= v_max as i128 && best.is_none_or(|(b, _)| (v as u64) < b) {
            best = Some((v as u64, n));
        }
    });
    best
}

fn fa_ceiling(a: &ArithFunctionSpec, coprime_to: Option<u64>, x: &Rational) -> Result<Ceiling> {
    let lo = ceil_pos(x);
    if lo > FA_VALUE_LIMIT {
        return Err(Error::OutOfRange(format!("f_a ceilings are limited to x <= {FA_VALUE_LIMIT}")));
    }
    // psi(N) >= N, so an element known to exist bounds the levels to scan
    if a.is_psi() && a.exceptions.is_empty() {
        if let Some(p) = coprime_to.filter(|&p| primes::is_prime(p) && *x > rational::int(p as i128 + 1)) {
            let u = prime_strategy_ceiling(x, p)?.value;
            let (value, n) = fa_min_in(a, coprime_to, lo, u, u).expect("the prime level is in range");
            return Ok(Ceiling {
                value,
                witness: Some(n),
            });
        }
    }
    let mut v_max = (2 * lo).max(16);
    loop {
        let hi = fa_scan_limit(a, coprime_to, v_max)?;
        if let Some((value, n)) = fa_min_in(a, coprime_to, lo, v_max, hi) {
            return Ok(Ceiling {
                value,
                witness: Some(n),
            });
        }
        if v_max > 4 * FA_VALUE_LIMIT {
            return Err(Error::OutOfRange(format!(
                "no element of the f_a image in [{lo}, {v_max}]"
            )));
        }
        v_max *= 2;
    }
}

// ---------------------------------------------------------------------------
// smooth levels

fn check_smooth_base(base: &[u64], p: u64) -> Result<()> {
    if base.is_empty() {
        return Err(Error::InvalidSpec("prime base must be non-empty".into()));
    }
    if !primes::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    for (i, &l) in base.iter().enumerate() {
        if !primes::is_prime(l) {
            return Err(Error::NotPrime(l));
        }
        if l == p {
            return Err(Error::Precondition(format!("excluded prime {p} is in the base")));
        }
        if base[..i].contains(&l) {
            return Err(Error::InvalidSpec(format!("prime {l} repeated in the base")));
        }
    }
    Ok(())
}

/// `B`-smooth integers in `[1, limit]`, unsorted.
fn smooth_numbers(base: &[u64], limit: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for &l in base {
        let mut next = Vec::new();
        for &m in &out {
            let mut v = m;
            while let Some(w) = v.checked_mul(l).filter(|&w| w <= limit) {
                next.push(w);
                v = w;
            }
        }
        out.extend(next);
    }
    out
}

fn base_products(base: &[u64]) -> Result<(u64, u64)> {
    let overflow = || Error::OutOfRange("prime base product overflows".into());
    let mut n = 1u64;
    let mut psi = 1u64;
    for &l in base {
        n = n.checked_mul(l).ok_or_else(overflow)?;
        psi = psi.checked_mul(l + 1).ok_or_else(overflow)?;
    }
    Ok((n, psi))
}

/// Smooth-level strategy: `N' psi(N_B)` for the smallest `B`-smooth
/// `N' >= x / psi(N_B)`, witnessed by the level `N' N_B`.
///
/// When `psi(N_B) >= x` this returns `N' = 1`.
pub fn smooth_strategy_ceiling(x: &Rational, base: &[u64], p: u64) -> Result<Ceiling> {
    check_x(x)?;
    check_smooth_base(base, p)?;
    let (n_b, psi_b) = base_products(base)?;
    let t = ceil_pos(&(x / rational::int(psi_b as i128)));
    let lmin = *base.iter().min().unwrap();
    let limit = t.checked_mul(lmin).ok_or_else(|| Error::OutOfRange("query too large".into()))?;
    let n_prime = smooth_numbers(base, limit)
        .into_iter()
        .filter(|&m| m >= t)
        .min()
        .expect("some power of the smallest base prime lies in [t, l*t]");
    let overflow = || Error::OutOfRange("smooth ceiling overflows".into());
    Ok(Ceiling {
        value: n_prime.checked_mul(psi_b).ok_or_else(overflow)?,
        witness: Some(n_prime.checked_mul(n_b).ok_or_else(overflow)?),
    })
}

/// Prime-level strategy: `ceil_P(x - 1) + 1`, an upper bound on the ceiling
/// of `x` in psi of levels prime to `p`, witnessed by the prime
/// `ceil_P(x - 1)`. Needs `x > p + 1` so the witness differs from `p`.
pub fn prime_strategy_ceiling(x: &Rational, p: u64) -> Result<Ceiling> {
    if !primes::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if *x <= rational::int(p as i128 + 1) {
        return Err(Error::Precondition(format!(
            "prime strategy needs x > p + 1 = {} (x = {})",
            p + 1,
            rational::to_string(x)
        )));
    }
    let n = primes::next_prime(rational::ceil(&(x - rational::int(1))) as u64);
    Ok(Ceiling {
        value: n + 1,
        witness: Some(n),
    })
}

// ---------------------------------------------------------------------------
// generic queries

/// Elements of `set` in `[1, x_max]`, sorted.
pub fn enumerate_values(set: &ValueSet, x_max: u64) -> Result<Vec<u64>> {
    Ok(enumerate_with_witness(set, x_max)?.into_keys().collect())
}

/// Elements of `set` in `[1, x_max]` with the smallest level realising each
/// (the element itself for primes).
pub fn enumerate_with_witness(set: &ValueSet, x_max: u64) -> Result<BTreeMap<u64, u64>> {
    set.validate()?;
    match set {
        ValueSet::Primes => {
            if x_max > PRIME_VALUE_LIMIT {
                return Err(Error::OutOfRange(format!("prime enumeration is limited to {PRIME_VALUE_LIMIT}")));
            }
            let sieve = primes::shared_sieve(x_max)?;
            Ok(sieve.primes_in(1, x_max).map(|l| (l, l)).collect())
        }
        ValueSet::FaImage { a, coprime_to } => {
            if x_max > FA_VALUE_LIMIT {
                return Err(Error::OutOfRange(format!("f_a enumeration is limited to {FA_VALUE_LIMIT}")));
            }
            fa_values(a, *coprime_to, x_max)
        }
        ValueSet::SmoothPsi { base, .. } => {
            let (n_b, psi_b) = base_products(base)?;
            Ok(smooth_numbers(base, x_max / psi_b)
                .into_iter()
                .map(|m| (m * psi_b, m * n_b))
                .collect())
        }
        ValueSet::Power2Psi => Ok((1..64)
            .map(|j| (3u64 << (j - 1), 1u64 << j))
            .take_while(|&(v, _)| v <= x_max)
            .collect()),
    }
}

/// `ceil_A(x)`: the smallest element of `set` that is `>= x`.
pub fn ceil_in_set(x: &Rational, set: &ValueSet) -> Result<Ceiling> {
    check_x(x)?;
    set.validate()?;
    match set {
        ValueSet::Primes => {
            let lo = ceil_pos(x);
            Ok(Ceiling {
                value: primes::next_prime(lo),
                witness: None,
            })
        }
        ValueSet::FaImage { a, coprime_to } => fa_ceiling(a, *coprime_to, x),
        ValueSet::SmoothPsi { base, excluded } => smooth_strategy_ceiling(x, base, *excluded),
        ValueSet::Power2Psi => smooth_strategy_ceiling(x, &[2], 3),
    }
}

/// Windowed relative gap of a set, kept apart from any analytic statement
/// about the range beyond the window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapCertificate {
    pub set: String,
    #[serde(with = "rational::serde_string")]
    pub x: Rational,
    /// `ceil_A(x)`.
    pub witness: u64,
    pub witness_level: Option<u64>,
    /// `max (ceil_A(y) - y)/y` over `y` in `[x, y_max]`.
    #[serde(with = "rational::serde_string")]
    pub epsilon_window: Rational,
    /// The ratio is approached as `y` decreases to `max_left`; `max_right`
    /// is the next element.
    #[serde(with = "rational::serde_string")]
    pub max_left: Rational,
    pub max_right: u64,
    pub y_max: u64,
    pub tail_note: Option<String>,
}

/// Computes the windowed gap `max_{x <= y <= y_max} (ceil_A(y) - y)/y`.
///
/// On `(a, a']` between consecutive elements the ratio tends to its sup
/// `(a' - a)/a` as `y` decreases to `a`; the pair straddling `x` contributes
/// `(ceil_A(x) - x)/x`.
pub fn epsilon_window(x: &Rational, y_max: u64, set: &ValueSet) -> Result<GapCertificate> {
    check_x(x)?;
    let first = ceil_in_set(x, set)?;
    if first.value > y_max {
        return Err(Error::WindowTooSmall {
            x: rational::to_string(x),
            y_max,
        });
    }
    let mut elems: Vec<u64> = enumerate_values(set, y_max)?
        .into_iter()
        .filter(|&v| v >= first.value)
        .collect();
    let after = ceil_in_set(&rational::int(y_max as i128), set)?.value;
    if elems.last() != Some(&after) {
        elems.push(after);
    }

    let c0 = rational::int(first.value as i128);
    let mut best = (c0 - x) / x;
    let mut left = *x;
    let mut right = first.value;
    for w in elems.windows(2) {
        if w[0] >= y_max {
            break;
        }
        let r = rational::ratio((w[1] - w[0]) as i128, w[0] as i128);
        if r > best {
            best = r;
            left = rational::int(w[0] as i128);
            right = w[1];
        }
    }
    Ok(GapCertificate {
        set: set.to_string(),
        x: *x,
        witness: first.value,
        witness_level: first.witness,
        epsilon_window: best,
        max_left: left,
        max_right: right,
        y_max,
        tail_note: None,
    })
}

/// [`epsilon_window`] with a note naming `estimate` as the tail bound when
/// it applies from `y_max` on.
pub fn epsilon_window_with_tail(
    x: &Rational,
    y_max: u64,
    set: &ValueSet,
    estimate: NamedEstimate,
) -> Result<GapCertificate> {
    let mut cert = epsilon_window(x, y_max, set)?;
    if *set == ValueSet::Primes {
        let tail = named_epsilon_bound(&rational::int(y_max as i128), estimate);
        if let (Validity::Applicable, Some(v)) = (tail.validity, &tail.value) {
            cert.tail_note = Some(format!(
                "{}: eps_P(y) <= {} for y >= {}",
                estimate,
                rational::to_string(v),
                tail.threshold
            ));
        }
    }
    Ok(cert)
}

/// Consecutive elements `left < right` with `left` in `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapRow {
    pub left: u64,
    pub right: u64,
    pub gap: u64,
    #[serde(with = "rational::serde_string")]
    pub ratio: Rational,
}

pub fn gap_rows(set: &ValueSet, lo: u64, hi: u64) -> Result<Vec<GapRow>> {
    if lo > hi || hi == 0 {
        return Ok(Vec::new());
    }
    let mut elems: Vec<u64> = enumerate_values(set, hi)?
        .into_iter()
        .filter(|&v| v >= lo)
        .collect();
    if elems.is_empty() {
        return Ok(Vec::new());
    }
    elems.push(ceil_in_set(&rational::int(hi as i128 + 1), set)?.value);
    Ok(elems
        .windows(2)
        .map(|w| GapRow {
            left: w[0],
            right: w[1],
            gap: w[1] - w[0],
            ratio: rational::ratio((w[1] - w[0]) as i128, w[0] as i128),
        })
        .collect())
}

// ---------------------------------------------------------------------------
// analytic estimates on prime gaps

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum NamedEstimate {
    Bertrand,
    Schoenfeld,
    Dusart,
    Rs,
    Bhp,
    Dudek,
}

impl NamedEstimate {
    pub const ALL: [NamedEstimate; 6] = [
        NamedEstimate::Bertrand,
        NamedEstimate::Schoenfeld,
        NamedEstimate::Dusart,
        NamedEstimate::Rs,
        NamedEstimate::Bhp,
        NamedEstimate::Dudek,
    ];
}

impl fmt::Display for NamedEstimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NamedEstimate::Bertrand => "BERTRAND",
            NamedEstimate::Schoenfeld => "SCHOENFELD",
            NamedEstimate::Dusart => "DUSART",
            NamedEstimate::Rs => "RS",
            NamedEstimate::Bhp => "BHP",
            NamedEstimate::Dudek => "DUDEK",
        })
    }
}

impl FromStr for NamedEstimate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedEstimate::ALL
            .into_iter()
            .find(|e| e.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown estimate {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Validity {
    Applicable,
    Inapplicable,
    NonEffective,
}

/// A literature bound on `eps_P(x)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NamedBound {
    pub estimate: NamedEstimate,
    #[serde(with = "rational::serde_string")]
    pub x: Rational,
    pub validity: Validity,
    /// Certified rational upper bound, present only when applicable.
    #[serde(with = "rational::serde_string_opt")]
    pub value: Option<Rational>,
    /// Floating-point value of the bound's formula at `x`.
    pub nominal: f64,
    pub threshold: String,
}

pub const SCHOENFELD_FROM: u64 = 2_010_760;
pub const DUSART_FROM: u64 = 396_744;
const LN_DEN: i128 = 1_000_000;

/// Certified upper bound on `1 / (25 ln^2 x)` for `x > 1`.
pub fn dusart_value(x: &Rational) -> Rational {
    let ln_lower = rational::lower_from_f64(rational::to_f64(x).ln(), LN_DEN);
    rational::int(1) / (rational::int(25) * ln_lower * ln_lower)
}

/// Evaluates a named bound on `eps_P` at `x` with its validity region.
pub fn named_epsilon_bound(x: &Rational, estimate: NamedEstimate) -> NamedBound {
    let xf = rational::to_f64(x);
    let at_least = |t: u64| *x >= rational::int(t as i128);
    let (validity, value, nominal, threshold) = match estimate {
        NamedEstimate::Bertrand => {
            let ok = at_least(1);
            (ok, Some(rational::int(1)), 1.0, "x >= 1".to_string())
        }
        NamedEstimate::Schoenfeld => (
            at_least(SCHOENFELD_FROM),
            Some(rational::ratio(1, 16597)),
            1.0 / 16597.0,
            format!("x >= {SCHOENFELD_FROM}"),
        ),
        NamedEstimate::Dusart => {
            let ok = at_least(DUSART_FROM);
            let nominal = 1.0 / (25.0 * xf.ln().powi(2));
            (ok, ok.then(|| dusart_value(x)), nominal, format!("x >= {DUSART_FROM}"))
        }
        NamedEstimate::Rs => {
            let threshold = 24.0 * 50f64.exp();
            (
                xf >= threshold * (1.0 + 1e-9),
                Some(rational::ratio(1, 200_000_000)),
                5e-9,
                format!("x >= 24*e^50 ~ {threshold:.4e}"),
            )
        }
        NamedEstimate::Dudek => {
            // e^(e^33.3) is far beyond any f64
            let ok = xf.is_finite() && xf > 1.0 && xf.ln().ln() > 33.3 + 1e-9;
            (
                ok,
                None,
                3.0 * xf.powf(-1.0 / 3.0),
                "x > e^(e^33.3)".to_string(),
            )
        }
        NamedEstimate::Bhp => {
            return NamedBound {
                estimate,
                x: *x,
                validity: Validity::NonEffective,
                value: None,
                nominal: xf.powf(-0.475),
                threshold: "x large enough (non-effective)".into(),
            };
        }
    };
    NamedBound {
        estimate,
        x: *x,
        validity: if validity { Validity::Applicable } else { Validity::Inapplicable },
        value: if validity { value } else { None },
        nominal,
        threshold,
    }
}

// ---------------------------------------------------------------------------
// certified eps_P

/// A certified upper bound on `eps_P(x)` and how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedEpsilon {
    #[serde(with = "rational::serde_string")]
    pub value: Rational,
    pub source: String,
    pub certificate: Option<GapCertificate>,
}

/// Standard window end for prime gaps: just past the point where the
/// Schoenfeld tail estimate takes over.
pub const PRIME_WINDOW: u64 = 2_100_000;
const WINDOW_QUERY_MAX: u64 = 100_000_000;

struct PrimeGapProfile {
    primes: Vec<u64>,
    /// `suffix[i]`: index `j >= i` maximising `(p_{j+1} - p_j)/p_j` over
    /// `p_j < PRIME_WINDOW`.
    suffix: Vec<usize>,
}

fn prime_profile() -> Result<&'static PrimeGapProfile> {
    static PROFILE: OnceLock<PrimeGapProfile> = OnceLock::new();
    if let Some(p) = PROFILE.get() {
        return Ok(p);
    }
    let mut ps = enumerate_values(&ValueSet::Primes, PRIME_WINDOW)?;
    ps.push(primes::next_prime(PRIME_WINDOW));
    let n = ps.len() - 1;
    let ratio = |j: usize| rational::ratio((ps[j + 1] - ps[j]) as i128, ps[j] as i128);
    let mut suffix = vec![0; n];
    suffix[n - 1] = n - 1;
    for i in (0..n - 1).rev() {
        let j = suffix[i + 1];
        suffix[i] = if ratio(i) >= ratio(j) { i } else { j };
    }
    Ok(PROFILE.get_or_init(|| PrimeGapProfile { primes: ps, suffix }))
}

/// Certified upper bound on `eps_P(x)`: the exact window maximum up to a
/// window end combined with the Schoenfeld tail beyond it, improved by the
/// Dusart estimate when that applies at `x`.
pub fn certified_prime_epsilon(x: &Rational) -> Result<CertifiedEpsilon> {
    check_x(x)?;
    let schoenfeld = rational::ratio(1, 16597);
    let lo = ceil_pos(x);
    let mut best: Option<CertifiedEpsilon> = None;
    if lo <= PRIME_WINDOW / 2 {
        let prof = prime_profile()?;
        let c0 = primes::next_prime(lo);
        let idx = prof.primes.partition_point(|&v| v < c0);
        let j = prof.suffix[idx];
        let straddle = (rational::int(c0 as i128) - x) / x;
        let pair = rational::ratio(
            (prof.primes[j + 1] - prof.primes[j]) as i128,
            prof.primes[j] as i128,
        );
        let (window, left, right) = if straddle >= pair {
            (straddle, *x, c0)
        } else {
            (pair, rational::int(prof.primes[j] as i128), prof.primes[j + 1])
        };
        let cert = GapCertificate {
            set: ValueSet::Primes.to_string(),
            x: *x,
            witness: c0,
            witness_level: None,
            epsilon_window: window,
            max_left: left,
            max_right: right,
            y_max: PRIME_WINDOW,
            tail_note: Some(format!("SCHOENFELD: eps_P(y) <= 1/16597 for y >= {SCHOENFELD_FROM}")),
        };
        best = Some(CertifiedEpsilon {
            value: window.max(schoenfeld),
            source: format!("window to {PRIME_WINDOW} + SCHOENFELD tail"),
            certificate: Some(cert),
        });
    } else if lo <= WINDOW_QUERY_MAX {
        let y_max = (2 * lo).max(PRIME_WINDOW);
        let cert = epsilon_window_with_tail(x, y_max, &ValueSet::Primes, NamedEstimate::Schoenfeld)?;
        best = Some(CertifiedEpsilon {
            value: cert.epsilon_window.max(schoenfeld),
            source: format!("window to {y_max} + SCHOENFELD tail"),
            certificate: Some(cert),
        });
    }
    if *x >= rational::int(DUSART_FROM as i128) {
        let d = dusart_value(x);
        if best.as_ref().is_none_or(|b| d < b.value) {
            best = Some(CertifiedEpsilon {
                value: d,
                source: format!("DUSART at x >= {DUSART_FROM}"),
                certificate: None,
            });
        }
    }
    best.ok_or_else(|| Error::OutOfRange("no certified estimate for this x".into()))
}
