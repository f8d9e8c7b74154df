use crate::error::{Error, Result};
use crate::ffalg::{AlgebraElement, AlgebraSpec, BaseField};

use super::SymmetricBilinearAlgorithm;

/// Maximum number of candidate form tuples the exhaustive search will visit.
pub const SEARCH_LIMIT: u128 = 1_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankResult {
    /// Exact symmetric rank together with a decomposition of that length.
    Exact {
        rank: usize,
        witness: SymmetricBilinearAlgorithm,
    },
    /// No decomposition of length `<= n_max` exists.
    Exceeds(usize),
}

/// Number of form tuples visited for lengths `1..=n_max`:
/// `sum_n C(P, n)` with `P = (q^k - 1)/(q - 1)` projective forms.
pub fn search_space_estimate(q: u64, k: usize, n_max: usize) -> u128 {
    let mut forms: u128 = 0;
    let mut pw: u128 = 1;
    for _ in 0..k {
        forms = forms.saturating_add(pw);
        pw = pw.saturating_mul(q as u128);
    }
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for n in 1..=n_max as u128 {
        if n > forms {
            break;
        }
        binom = binom.saturating_mul(forms - n + 1) / n;
        total = total.saturating_add(binom);
    }
    total
}

/// Exact symmetric tensor rank of `spec` by exhaustive search, up to `n_max`.
///
/// Forms are enumerated projectively (first nonzero coordinate 1). For each
/// set of `n` distinct forms the outputs are solved from the linear system on
/// the basis pairs `a <= b`. Repeated forms never help since their outputs
/// can be merged.
pub fn bruteforce_symmetric_rank(spec: &AlgebraSpec, n_max: usize) -> Result<RankResult> {
    if n_max == 0 {
        return Err(Error::Precondition("n_max must be positive".into()));
    }
    let base = spec.base();
    let q = base.order() as u64;
    let k = spec.degree();
    let estimate = search_space_estimate(q, k, n_max);
    if estimate > SEARCH_LIMIT {
        return Err(Error::SearchSpaceTooLarge {
            estimate,
            limit: SEARCH_LIMIT,
        });
    }

    let forms = projective_forms(base, k);
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|a| (a..k).map(move |b| (a, b))).collect();
    let table = spec.basis_products();
    // coefficient of w_i in the equation for pair (a,b), per form
    let coeff: Vec<Vec<u32>> = forms
        .iter()
        .map(|f| pairs.iter().map(|&(a, b)| base.mul(f[a], f[b])).collect())
        .collect();
    let rhs: Vec<&AlgebraElement> = pairs.iter().map(|&(a, b)| &table[a][b]).collect();

    for n in 1..=n_max.min(forms.len()) {
        let mut idx: Vec<usize> = (0..n).collect();
        loop {
            if let Some(outputs) = solve_outputs(base, &idx, &coeff, &rhs, k) {
                let witness = SymmetricBilinearAlgorithm {
                    spec: spec.clone(),
                    forms: idx.iter().map(|&i| forms[i].clone()).collect(),
                    outputs,
                    points: None,
                };
                return Ok(RankResult::Exact { rank: n, witness });
            }
            if !next_combination(&mut idx, forms.len()) {
                break;
            }
        }
    }
    Ok(RankResult::Exceeds(n_max))
}

fn projective_forms(base: &BaseField, k: usize) -> Vec<Vec<u32>> {
    let q = base.order();
    let mut out = Vec::new();
    for lead in 0..k {
        let tail = k - lead - 1;
        let count = (q as u64).pow(tail as u32);
        for idx in 0..count {
            let mut f = vec![0u32; k];
            f[lead] = 1;
            let mut r = idx;
            for j in (lead + 1..k).rev() {
                f[j] = (r % q as u64) as u32;
                r /= q as u64;
            }
            out.push(f);
        }
    }
    out
}

fn next_combination(idx: &mut [usize], total: usize) -> bool {
    let n = idx.len();
    let mut i = n;
    while i > 0 {
        i -= 1;
        if idx[i] < total - n + i {
            idx[i] += 1;
            for j in i + 1..n {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Gaussian elimination on `[M | B]` where `M` has one column per chosen form
/// and `B` holds the `k` coordinates of each right-hand side.
fn solve_outputs(
    base: &BaseField,
    chosen: &[usize],
    coeff: &[Vec<u32>],
    rhs: &[&AlgebraElement],
    k: usize,
) -> Option<Vec<AlgebraElement>> {
    let n = chosen.len();
    let rows = rhs.len();
    let mut m: Vec<Vec<u32>> = (0..rows)
        .map(|r| {
            let mut row: Vec<u32> = chosen.iter().map(|&i| coeff[i][r]).collect();
            row.extend_from_slice(&rhs[r].coeffs);
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let inv = base.inv(m[r][c]).unwrap();
        for v in m[r].iter_mut() {
            *v = base.mul(*v, inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let factor = m[i][c];
                for j in 0..n + k {
                    let t = base.mul(factor, m[r][j]);
                    m[i][j] = base.sub(m[i][j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| row[n..].iter().any(|&v| v != 0)) {
        return None;
    }
    let mut outputs = vec![AlgebraElement::zero(k); n];
    for (row, &c) in pivots.iter().enumerate() {
        outputs[c] = AlgebraElement::new(m[row][n..].to_vec());
    }
    Some(outputs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evalinterp::verify_symmetric_algorithm;

    fn exact(r: RankResult) -> (usize, SymmetricBilinearAlgorithm) {
        match r {
            RankResult::Exact { rank, witness } => (rank, witness),
            RankResult::Exceeds(n) => panic!("expected an exact rank, got EXCEEDS({n})"),
        }
    }

    #[test]
    fn projective_form_count() {
        for (q, k) in [(2u64, 2usize), (3, 2), (2, 3), (4, 2)] {
            let base = BaseField::new(q).unwrap();
            let forms = projective_forms(&base, k);
            assert_eq!(forms.len() as u64, (q.pow(k as u32) - 1) / (q - 1));
            let mut sorted = forms.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), forms.len());
        }
    }

    #[test]
    fn rank_of_f4() {
        let spec = AlgebraSpec::field(2, 2).unwrap();
        let (rank, witness) = exact(bruteforce_symmetric_rank(&spec, 3).unwrap());
        assert_eq!(rank, 3);
        assert!(verify_symmetric_algorithm(&witness).unwrap().passed);
        assert_eq!(bruteforce_symmetric_rank(&spec, 2).unwrap(), RankResult::Exceeds(2));
    }

    #[test]
    fn rank_of_f9_and_dual_numbers() {
        let (rank, w) = exact(bruteforce_symmetric_rank(&AlgebraSpec::field(3, 2).unwrap(), 3).unwrap());
        assert_eq!(rank, 3);
        assert!(verify_symmetric_algorithm(&w).unwrap().passed);

        let trunc = AlgebraSpec::truncation(2, 2).unwrap();
        let (rank, w) = exact(bruteforce_symmetric_rank(&trunc, 3).unwrap());
        assert_eq!(rank, 3);
        assert!(verify_symmetric_algorithm(&w).unwrap().passed);
        assert_eq!(bruteforce_symmetric_rank(&trunc, 2).unwrap(), RankResult::Exceeds(2));
    }

    #[test]
    fn scalar_tensor_has_rank_one() {
        let (rank, _) = exact(bruteforce_symmetric_rank(&AlgebraSpec::field(2, 1).unwrap(), 1).unwrap());
        assert_eq!(rank, 1);
    }

    #[test]
    fn f8_has_rank_six() {
        // three points of P^1(F_2) only cover k <= 2; the known value for k = 3 is 6
        let spec = AlgebraSpec::field(2, 3).unwrap();
        assert_eq!(bruteforce_symmetric_rank(&spec, 5).unwrap(), RankResult::Exceeds(5));
        let (rank, w) = exact(bruteforce_symmetric_rank(&spec, 6).unwrap());
        assert_eq!(rank, 6);
        assert!(verify_symmetric_algorithm(&w).unwrap().passed);
    }

    #[test]
    fn refuses_large_searches() {
        let spec = AlgebraSpec::field(5, 4).unwrap();
        match bruteforce_symmetric_rank(&spec, 8) {
            Err(Error::SearchSpaceTooLarge { estimate, limit }) => {
                assert!(estimate > limit);
                assert_eq!(estimate, search_space_estimate(5, 4, 8));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn estimate_counts_subsets() {
        // 3 projective forms for F_4/F_2: C(3,1)+C(3,2)+C(3,3)
        assert_eq!(search_space_estimate(2, 2, 3), 7);
        assert_eq!(search_space_estimate(2, 2, 5), 7);
        assert_eq!(search_space_estimate(3, 2, 2), 4 + 6);
    }
}
