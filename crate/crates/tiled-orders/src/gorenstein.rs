//! Gorenstein structure of a basic exponent matrix.
//!
//! A basic tiled order is Gorenstein exactly when there is a bijection `nu`
//! with `d(nu i, j) + d(j, i) = d(nu i, i)` for all `i, j`. The entries
//! `b_i = d(nu i, i)` are the b-invariants and `p_i = 1 - b_i` the Gorenstein
//! parameters. For basic matrices the bijection is unique when it exists: two
//! candidate rows for one column would differ by a constant vector.

use crate::error::{Error, Result};
use crate::matrix::{ExponentMatrix, Permutation};

/// Nakayama permutation with its b-invariants and Gorenstein parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GorensteinData {
    pub nu: Permutation,
    pub b: Vec<i64>,
    pub p: Vec<i64>,
}

impl GorensteinData {
    /// How many Gorenstein parameters equal `value`.
    pub fn count_parameters(&self, value: i64) -> usize {
        self.p.iter().filter(|&&v| v == value).count()
    }
}

/// Detects the Nakayama permutation of a valid basic matrix by direct
/// candidate-row search: `nu i` is the unique row `r` with
/// `d(r, j) + d(j, i) = d(r, i)` for every `j`. Returns `None` when the
/// matrix is not Gorenstein. Non-basic input is rejected because uniqueness
/// of the bijection is only guaranteed for basic matrices.
pub fn nakayama(m: &ExponentMatrix) -> Result<Option<GorensteinData>> {
    m.require_basic()?;
    let n = m.size();
    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        let mut candidate = None;
        for r in 0..n {
            let fits = (0..n)
                .all(|j| m.entry(r, j) as i128 + m.entry(j, i) as i128 == m.entry(r, i) as i128);
            if fits {
                if candidate.is_some() {
                    // two candidate rows would contradict basicness
                    return Ok(None);
                }
                candidate = Some(r);
            }
        }
        match candidate {
            Some(r) => images.push(r),
            None => return Ok(None),
        }
    }
    let nu = match Permutation::new(images) {
        Ok(nu) => nu,
        Err(_) => return Ok(None),
    };
    let b: Vec<i64> = (0..n).map(|i| m.entry(nu.apply(i), i)).collect();
    let p: Vec<i64> = b.iter().map(|&bi| 1 - bi).collect();
    Ok(Some(GorensteinData { nu, b, p }))
}

/// Whether the Nakayama permutation acts transitively on the index set.
pub fn is_cyclic(g: &GorensteinData) -> bool {
    g.nu.is_transitive()
}

/// The cyclic family: `d(i,j)` is the sum of the parameters `m_k` along the
/// cyclic walk from `i` to `j`. Always basic, N-graded and Gorenstein with
/// `nu i = i + 1` cyclically.
pub fn cyclic_order(params: &[i64]) -> Result<ExponentMatrix> {
    let n = params.len();
    if n == 0 || params.iter().any(|&v| v < 0) || params.iter().all(|&v| v == 0) {
        return Err(Error::BadCyclicParams);
    }
    let total: i128 = params.iter().map(|&v| v as i128).sum();
    let mut prefix = vec![0i128; n + 1];
    for k in 0..n {
        prefix[k + 1] = prefix[k] + params[k] as i128;
    }
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let v = if i <= j {
                prefix[j] - prefix[i]
            } else {
                total - prefix[i] + prefix[j]
            };
            row.push(i64::try_from(v).map_err(|_| Error::Overflow)?);
        }
        rows.push(row);
    }
    ExponentMatrix::new(rows)
}
