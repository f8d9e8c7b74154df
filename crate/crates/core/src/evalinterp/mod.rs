//! Symmetric bilinear multiplication algorithms: the genus-0
//! evaluation-interpolation construction on the projective line, a
//! verifier, and exhaustive symmetric-rank search for tiny algebras.
//!
//! An algorithm of length `n` for an algebra `A` is a list of linear forms
//! `alpha_i` and outputs `w_i` with `x*y = sum_i alpha_i(x) alpha_i(y) w_i`.
//! The same form is applied to both arguments, so every algorithm here is
//! symmetric by construction.

mod rank;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffalg::{poly, AlgebraElement, AlgebraSpec, AlgebraSpecJson, Coeff};

pub use rank::{bruteforce_symmetric_rank, search_space_estimate, RankResult, SEARCH_LIMIT};

/// Evaluation site on `P^1(F_q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Site {
    Finite(u32),
    Infinity,
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Site::Finite(a) => write!(f, "{a}"),
            Site::Infinity => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for Site {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(Site::Infinity);
        }
        s.parse()
            .map(Site::Finite)
            .map_err(|_| Error::Malformed(format!("bad evaluation site {s:?}")))
    }
}

/// The first `n` sites of `P^1(F_q)`: finite points in increasing index
/// order, then infinity.
pub fn evaluation_sites(q: u32, n: usize) -> Result<Vec<Site>> {
    if n as u64 > q as u64 + 1 {
        return Err(Error::PointCountLimit(format!(
            "P^1(F_{q}) has only {} rational points but {n} are needed",
            q as u64 + 1
        )));
    }
    Ok((0..q)
        .map(Site::Finite)
        .chain(std::iter::once(Site::Infinity))
        .take(n)
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricBilinearAlgorithm {
    pub spec: AlgebraSpec,
    /// `alpha_i` as row vectors on the monomial basis.
    pub forms: Vec<Vec<u32>>,
    pub outputs: Vec<AlgebraElement>,
    /// Evaluation sites, when the algorithm came from the constructor.
    pub points: Option<Vec<Site>>,
}

impl SymmetricBilinearAlgorithm {
    pub fn length(&self) -> usize {
        self.forms.len()
    }

    fn structural_check(&self) -> Result<()> {
        let k = self.spec.degree();
        let q = self.spec.base().order();
        if self.forms.len() != self.outputs.len() {
            return Err(Error::Malformed(format!(
                "{} forms but {} outputs",
                self.forms.len(),
                self.outputs.len()
            )));
        }
        for (i, form) in self.forms.iter().enumerate() {
            if form.len() != k {
                return Err(Error::Malformed(format!(
                    "form {i} has {} coefficients, algebra dimension is {k}",
                    form.len()
                )));
            }
            if form.iter().any(|&c| c >= q) {
                return Err(Error::Malformed(format!("form {i} has a coefficient outside F_{q}")));
            }
        }
        for (i, w) in self.outputs.iter().enumerate() {
            self.spec
                .check(w)
                .map_err(|e| Error::Malformed(format!("output {i}: {e}")))?;
        }
        if let Some(points) = &self.points {
            if points.len() != self.forms.len() {
                return Err(Error::Malformed(format!(
                    "{} points for {} forms",
                    points.len(),
                    self.forms.len()
                )));
            }
        }
        Ok(())
    }

    fn eval_form(&self, i: usize, x: &AlgebraElement) -> u32 {
        let f = self.spec.base();
        self.forms[i]
            .iter()
            .zip(&x.coeffs)
            .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
    }

    pub fn to_json(&self) -> AlgorithmJson {
        let base = self.spec.base();
        AlgorithmJson {
            spec: self.spec.to_json(),
            length: self.length(),
            forms: self
                .forms
                .iter()
                .map(|f| f.iter().map(|&c| base.encode(c)).collect())
                .collect(),
            outputs: self.outputs.iter().map(|w| self.spec.encode_element(w)).collect(),
            points: self
                .points
                .as_ref()
                .map(|ps| ps.iter().map(|s| s.to_string()).collect()),
        }
    }

    /// Decodes the wire form. Count mismatches are kept so that the verifier
    /// can report them as malformed input.
    pub fn from_json(j: &AlgorithmJson) -> Result<Self> {
        let spec = AlgebraSpec::from_json(&j.spec).map_err(|e| Error::Malformed(e.to_string()))?;
        if j.length != j.forms.len() || j.length != j.outputs.len() {
            return Err(Error::Malformed(format!(
                "declared length {} but {} forms and {} outputs",
                j.length,
                j.forms.len(),
                j.outputs.len()
            )));
        }
        let base = spec.base();
        let forms = j
            .forms
            .iter()
            .map(|f| f.iter().map(|c| base.decode(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let outputs = j
            .outputs
            .iter()
            .map(|w| {
                w.iter()
                    .map(|c| base.decode(c))
                    .collect::<Result<Vec<_>>>()
                    .map(AlgebraElement::new)
            })
            .collect::<Result<Vec<_>>>()?;
        let points = j
            .points
            .as_ref()
            .map(|ps| ps.iter().map(|s| s.parse()).collect::<Result<Vec<Site>>>())
            .transpose()?;
        let alg = SymmetricBilinearAlgorithm {
            spec,
            forms,
            outputs,
            points,
        };
        alg.structural_check()?;
        Ok(alg)
    }
}

/// Wire form of an algorithm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgorithmJson {
    pub spec: AlgebraSpecJson,
    pub length: usize,
    pub forms: Vec<Vec<Coeff>>,
    pub outputs: Vec<Vec<Coeff>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<String>>,
}

/// Evaluation-interpolation on `P^1` for any algebra `F_q[t]/(f)` of
/// dimension `k` with `2k - 1 <= q + 1`.
///
/// Inputs are read as polynomials of degree `< k`; their product has degree
/// `<= 2k - 2` and is recovered from its values at `2k - 1` sites, where the
/// value at infinity is the coefficient of `t^(2k-2)`. The interpolation
/// basis is then reduced modulo `f`.
pub fn construct_genus0(spec: AlgebraSpec) -> Result<SymmetricBilinearAlgorithm> {
    let base = spec.base().clone();
    let q = base.order();
    let k = spec.degree();
    let n = 2 * k - 1;
    let sites = evaluation_sites(q, n).map_err(|_| {
        Error::PointCountLimit(format!(
            "a length-{n} genus-0 algorithm needs 2k-1 = {n} rational points but P^1(F_{q}) has {} (k must be <= q/2 + 1)",
            q as u64 + 1
        ))
    })?;
    let finite: Vec<u32> = sites
        .iter()
        .filter_map(|s| match s {
            Site::Finite(a) => Some(*a),
            Site::Infinity => None,
        })
        .collect();

    let mut forms = Vec::with_capacity(n);
    for s in &sites {
        let row = match s {
            Site::Finite(a) => {
                let mut row = Vec::with_capacity(k);
                let mut pw = 1;
                for _ in 0..k {
                    row.push(pw);
                    pw = base.mul(pw, *a);
                }
                row
            }
            Site::Infinity => {
                let mut row = vec![0; k];
                row[k - 1] = 1;
                row
            }
        };
        forms.push(row);
    }

    // prod_j (t - a_j) over the finite sites
    let mut full: Vec<u32> = vec![1];
    for &a in &finite {
        full = poly::mul(&base, &full, &[base.neg(a), 1]);
    }
    let mut outputs = Vec::with_capacity(n);
    for &a in &finite {
        let (num, r) = poly::div_rem(&base, &full, &[base.neg(a), 1]);
        debug_assert!(r.is_empty());
        let den = poly::eval(&base, &num, a);
        let lagrange = poly::scale(&base, &num, base.inv(den).expect("distinct sites"));
        outputs.push(spec.reduce(&lagrange));
    }
    if finite.len() < n {
        outputs.push(spec.reduce(&full));
    }

    Ok(SymmetricBilinearAlgorithm {
        spec,
        forms,
        outputs,
        points: Some(sites),
    })
}

/// Length-`(2k-1)` algorithm for `F_{q^k}` over `F_q`, requires
/// `k <= q/2 + 1`.
pub fn construct_genus0_field(q: u64, k: usize) -> Result<SymmetricBilinearAlgorithm> {
    check_point_limit(q, k)?;
    construct_genus0(AlgebraSpec::field(q, k)?)
}

/// Length-`(2l-1)` algorithm for `F_q[t]/(t^l)`, requires `l <= q/2 + 1`.
pub fn construct_genus0_short(q: u64, l: usize) -> Result<SymmetricBilinearAlgorithm> {
    check_point_limit(q, l)?;
    construct_genus0(AlgebraSpec::truncation(q, l)?)
}

fn check_point_limit(q: u64, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Precondition("degree must be at least 1".into()));
    }
    if 2 * k as u64 - 1 > q + 1 {
        return Err(Error::PointCountLimit(format!(
            "2k-1 = {} exceeds the {} rational points of P^1(F_{q}); need k <= q/2 + 1",
            2 * k - 1,
            q + 1
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisFailure {
    pub a: usize,
    pub b: usize,
    pub expected: AlgebraElement,
    pub computed: AlgebraElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub passed: bool,
    pub pairs_checked: usize,
    pub failures: Vec<BasisFailure>,
}

/// Checks `sum_i alpha_i(e_a) alpha_i(e_b) w_i = e_a e_b` on every pair of
/// basis monomials, which is complete by bilinearity. Stops at the first
/// failure unless `all_failures` is set.
pub fn verify(alg: &SymmetricBilinearAlgorithm, all_failures: bool) -> Result<VerificationReport> {
    alg.structural_check()?;
    let spec = &alg.spec;
    let f = spec.base();
    let k = spec.degree();
    let table = spec.basis_products();
    let mut failures = Vec::new();
    let mut pairs_checked = 0;
    for a in 0..k {
        for b in 0..k {
            pairs_checked += 1;
            let mut acc = AlgebraElement::zero(k);
            for (i, w) in alg.outputs.iter().enumerate() {
                let c = f.mul(alg.forms[i][a], alg.forms[i][b]);
                if c != 0 {
                    acc = spec.add(&acc, &spec.scale(w, c))?;
                }
            }
            if acc != table[a][b] {
                failures.push(BasisFailure {
                    a,
                    b,
                    expected: table[a][b].clone(),
                    computed: acc,
                });
                if !all_failures {
                    return Ok(VerificationReport {
                        passed: false,
                        pairs_checked,
                        failures,
                    });
                }
            }
        }
    }
    Ok(VerificationReport {
        passed: failures.is_empty(),
        pairs_checked,
        failures,
    })
}

/// [`verify`] reporting only the first failure.
pub fn verify_symmetric_algorithm(alg: &SymmetricBilinearAlgorithm) -> Result<VerificationReport> {
    verify(alg, false)
}

/// `sum_i alpha_i(x) alpha_i(y) w_i`.
pub fn apply_algorithm(
    alg: &SymmetricBilinearAlgorithm,
    x: &AlgebraElement,
    y: &AlgebraElement,
) -> Result<AlgebraElement> {
    let spec = &alg.spec;
    spec.check(x)?;
    spec.check(y)?;
    let f = spec.base();
    let k = spec.degree();
    let mut acc = AlgebraElement::zero(k);
    for (i, w) in alg.outputs.iter().enumerate() {
        let c = f.mul(alg.eval_form(i, x), alg.eval_form(i, y));
        if c != 0 {
            acc = spec.add(&acc, &spec.scale(w, c))?;
        }
    }
    Ok(acc)
}
