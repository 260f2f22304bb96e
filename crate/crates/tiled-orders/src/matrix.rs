//! Exponent matrices of tiled orders.
//!
//! An exponent matrix is an integer matrix `d` with zero diagonal satisfying
//! the triangle inequality `d(i,k) + d(k,j) >= d(i,j)`, i.e. a quasi-metric on
//! the index set. It encodes a tiled order completely. Graded Morita moves act
//! on it in two ways: diagonal shifts, which send `d(i,j)` to
//! `d(i,j) + l_i - l_j`, and relabelings of the index set. All indices in this
//! module are zero-based; reports destined for humans use one-based indices.

use crate::error::{Error, Result};

/// A validated quasi-metric, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl std::fmt::Debug for ExponentMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for ExponentMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
                format!("[{}]", row.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl ExponentMatrix {
    /// Builds a matrix from rows, rejecting anything that is not a
    /// quasi-metric. Entries may be negative; use [`ExponentMatrix::is_n_graded`]
    /// to test non-negativity.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let report = validate(&rows)?;
        if !report.diagonal_ok {
            return Err(Error::NotQuasiMetric {
                detail: "nonzero diagonal entry".to_string(),
            });
        }
        if let Some(&(i, k, j)) = report.triangle_violations.first() {
            return Err(Error::NotQuasiMetric {
                detail: format!("d({i},{k}) + d({k},{j}) < d({i},{j}) (1-based indices)"),
            });
        }
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            entries.extend(row);
        }
        Ok(Self { n, entries })
    }

    /// Builds a matrix entrywise from a function of (row, column).
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> i64) -> Result<Self> {
        let rows = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
        Self::new(rows)
    }

    // Internal constructor for entries already known to form a quasi-metric.
    pub(crate) fn from_valid_parts(n: usize, entries: Vec<i64>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        debug_assert!((0..n).all(|i| entries[i * n + i] == 0));
        Self { n, entries }
    }

    /// The lower-triangular staircase matrix: `d(i,j) = 0` for `i <= j` and
    /// `step` for `i > j`. Its truncation poset is a grid.
    pub fn staircase(step: i64, n: usize) -> Result<Self> {
        if step < 0 {
            return Err(Error::NotQuasiMetric {
                detail: "staircase step must be non-negative".to_string(),
            });
        }
        Self::from_fn(n, |i, j| if i > j { step } else { 0 })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry `d(i,j)`, zero-based.
    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_n_graded(&self) -> bool {
        self.entries.iter().all(|&v| v >= 0)
    }

    /// Basic means `d(i,j) + d(j,i) > 0` for all `i != j`; equivalently no two
    /// rows differ by a constant vector.
    pub fn is_basic(&self) -> bool {
        (0..self.n).all(|i| {
            (i + 1..self.n).all(|j| self.entry(i, j) as i128 + self.entry(j, i) as i128 > 0)
        })
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.entries.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    pub fn max_row_entry(&self, i: usize) -> i64 {
        self.row(i).iter().copied().max().unwrap_or(0)
    }

    pub(crate) fn require_n_graded(&self) -> Result<()> {
        for i in 0..self.n {
            for j in 0..self.n {
                let v = self.entry(i, j);
                if v < 0 {
                    return Err(Error::NotNGraded {
                        i: i + 1,
                        j: j + 1,
                        value: v,
                    });
                }
            }
        }
        Ok(())
    }

    pub(crate) fn require_basic(&self) -> Result<()> {
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.entry(i, j) as i128 + self.entry(j, i) as i128 <= 0 {
                    return Err(Error::NotBasic { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(())
    }

    /// The multiset of symmetrized sums `d(i,j) + d(j,i)` over `i < j`,
    /// sorted. Invariant under diagonal shifts and relabelings.
    pub fn symmetrized_sums(&self) -> Vec<i64> {
        let mut sums = Vec::with_capacity(self.n * (self.n - 1) / 2);
        for i in 0..self.n {
            for j in i + 1..self.n {
                sums.push(self.entry(i, j) + self.entry(j, i));
            }
        }
        sums.sort_unstable();
        sums
    }
}

/// Per-check validation outcome for a raw square matrix.
///
/// Triangle violations are listed as one-based triples `(i, k, j)` with
/// `d(i,k) + d(k,j) < d(i,j)`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ValidationReport {
    pub diagonal_ok: bool,
    pub triangle_violations: Vec<(usize, usize, usize)>,
    pub is_n_graded: bool,
    pub is_basic: bool,
}

impl ValidationReport {
    pub fn is_quasi_metric(&self) -> bool {
        self.diagonal_ok && self.triangle_violations.is_empty()
    }
}

/// Checks a raw matrix: zero diagonal, every violated triangle triple,
/// non-negativity of all entries, and basicness.
pub fn validate(rows: &[Vec<i64>]) -> Result<ValidationReport> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare {
                row: i + 1,
                got: row.len(),
                expected: n,
            });
        }
    }
    let d = |i: usize, j: usize| rows[i][j];
    let diagonal_ok = (0..n).all(|i| d(i, i) == 0);
    let mut triangle_violations = Vec::new();
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                if (d(i, k) as i128 + d(k, j) as i128) < d(i, j) as i128 {
                    triangle_violations.push((i + 1, k + 1, j + 1));
                }
            }
        }
    }
    let is_n_graded = rows.iter().all(|row| row.iter().all(|&v| v >= 0));
    let is_basic = (0..n).all(|i| (0..n).all(|j| i == j || d(i, j) as i128 + d(j, i) as i128 > 0));
    Ok(ValidationReport {
        diagonal_ok,
        triangle_violations,
        is_n_graded,
        is_basic,
    })
}

/// A vector of degree shifts, one per index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftVector(pub Vec<i64>);

impl ShiftVector {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self(v)
    }

    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|&v| -v).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A permutation of `{0..n}` stored as its list of images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n {
                return Err(Error::BadPermutation {
                    n,
                    detail: format!("image {img} out of range"),
                });
            }
            if seen[img] {
                return Err(Error::BadPermutation {
                    n,
                    detail: format!("image {img} repeated"),
                });
            }
            seen[img] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Parses one-based images, e.g. `[2, 1]` for the swap on two points.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let shifted: Vec<usize> = images
            .iter()
            .map(|&v| {
                if v == 0 || v > n {
                    Err(Error::BadPermutation {
                        n,
                        detail: format!("one-based image {v} out of range 1..={n}"),
                    })
                } else {
                    Ok(v - 1)
                }
            })
            .collect::<Result<_>>()?;
        Self::new(shifted)
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img] = i;
        }
        Self { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Whether the permutation acts transitively, i.e. is a single cycle.
    pub fn is_transitive(&self) -> bool {
        let n = self.images.len();
        if n == 0 {
            return true;
        }
        let mut seen = 0usize;
        let mut at = 0usize;
        loop {
            seen += 1;
            at = self.images[at];
            if at == 0 {
                break;
            }
        }
        seen == n
    }

    /// Orbit representative labels: `orbit_id[i] == orbit_id[j]` iff `i` and
    /// `j` lie in one cycle.
    pub fn orbit_ids(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut ids = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if ids[start] != usize::MAX {
                continue;
            }
            let mut at = start;
            while ids[at] == usize::MAX {
                ids[at] = next;
                at = self.images[at];
            }
            next += 1;
        }
        ids
    }
}

/// Diagonal conjugation: `d'(i,j) = d(i,j) + l_i - l_j`. The result is always
/// a quasi-metric; it need not stay N-graded.
pub fn conjugate_shifts(m: &ExponentMatrix, l: &ShiftVector) -> Result<ExponentMatrix> {
    let n = m.size();
    if l.len() != n {
        return Err(Error::BadVectorLength {
            got: l.len(),
            expected: n,
        });
    }
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let v = m.entry(i, j) as i128 + l.0[i] as i128 - l.0[j] as i128;
            entries.push(i64::try_from(v).map_err(|_| Error::Overflow)?);
        }
    }
    Ok(ExponentMatrix::from_valid_parts(n, entries))
}

/// Conjugation by a permutation matrix: `d'(i,j) = d(sigma^-1 i, sigma^-1 j)`.
pub fn conjugate_permutation(m: &ExponentMatrix, sigma: &Permutation) -> Result<ExponentMatrix> {
    let n = m.size();
    if sigma.len() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: sigma.len(),
        });
    }
    let inv = sigma.inverse();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(m.entry(inv.apply(i), inv.apply(j)));
        }
    }
    Ok(ExponentMatrix::from_valid_parts(n, entries))
}

/// Searches for a relabeling `sigma` with `d2(sigma i, sigma j) = d1(i, j)`.
///
/// Backtracking with row/column multiset pruning; first witness in
/// lexicographic image order.
pub fn are_isomorphic(m1: &ExponentMatrix, m2: &ExponentMatrix) -> Result<Option<Permutation>> {
    let n = m1.size();
    if m2.size() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: m2.size(),
        });
    }
    let row_multiset = |m: &ExponentMatrix, i: usize| {
        let mut v = m.row(i).to_vec();
        v.sort_unstable();
        v
    };
    let col_multiset = |m: &ExponentMatrix, j: usize| {
        let mut v: Vec<i64> = (0..n).map(|i| m.entry(i, j)).collect();
        v.sort_unstable();
        v
    };
    let rows1: Vec<_> = (0..n).map(|i| row_multiset(m1, i)).collect();
    let rows2: Vec<_> = (0..n).map(|i| row_multiset(m2, i)).collect();
    let cols1: Vec<_> = (0..n).map(|j| col_multiset(m1, j)).collect();
    let cols2: Vec<_> = (0..n).map(|j| col_multiset(m2, j)).collect();

    {
        let mut s1 = rows1.clone();
        let mut s2 = rows2.clone();
        s1.sort();
        s2.sort();
        if s1 != s2 {
            return Ok(None);
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        m1: &ExponentMatrix,
        m2: &ExponentMatrix,
        rows1: &[Vec<i64>],
        rows2: &[Vec<i64>],
        cols1: &[Vec<i64>],
        cols2: &[Vec<i64>],
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let i = images.len();
        let n = m1.size();
        if i == n {
            return true;
        }
        for r in 0..n {
            if used[r] || rows1[i] != rows2[r] || cols1[i] != cols2[r] {
                continue;
            }
            let consistent = images.iter().enumerate().all(|(j, &sj)| {
                m2.entry(r, sj) == m1.entry(i, j) && m2.entry(sj, r) == m1.entry(j, i)
            });
            if !consistent {
                continue;
            }
            images.push(r);
            used[r] = true;
            if extend(m1, m2, rows1, rows2, cols1, cols2, images, used) {
                return true;
            }
            images.pop();
            used[r] = false;
        }
        false
    }

    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n];
    if extend(
        m1,
        m2,
        &rows1,
        &rows2,
        &cols1,
        &cols2,
        &mut images,
        &mut used,
    ) {
        Ok(Some(
            Permutation::new(images).expect("search yields a bijection"),
        ))
    } else {
        Ok(None)
    }
}

/// Searches for a conjugacy witness `(sigma, l)` with
/// `conjugate_permutation(conjugate_shifts(m1, l), sigma) = m2`.
///
/// The shift search fixes `l_0 = 0` (constant shifts cancel). When both
/// matrices are required to stay N-graded, the feasible region for `l_i` is
/// the exact box `[-d1(i,0), d1(0,i)]` forced by non-negativity; otherwise a
/// symmetric box of radius `max|d1| + max|d2|` is used.
pub fn are_conjugate(
    m1: &ExponentMatrix,
    m2: &ExponentMatrix,
    require_n_graded: bool,
) -> Result<Option<(Permutation, ShiftVector)>> {
    let n = m1.size();
    if m2.size() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: m2.size(),
        });
    }
    if m1.symmetrized_sums() != m2.symmetrized_sums() {
        return Ok(None);
    }
    if let Some(sigma) = are_isomorphic(m1, m2)? {
        return Ok(Some((sigma, ShiftVector::zero(n))));
    }
    if n == 1 {
        return Ok(None);
    }

    let (lo, hi): (Vec<i64>, Vec<i64>) = if require_n_graded {
        (
            (1..n).map(|i| -m1.entry(i, 0)).collect(),
            (1..n).map(|i| m1.entry(0, i)).collect(),
        )
    } else {
        let radius = m1
            .max_abs_entry()
            .checked_add(m2.max_abs_entry())
            .ok_or(Error::Overflow)?;
        (
            (1..n).map(|_| -radius).collect(),
            (1..n).map(|_| radius).collect(),
        )
    };
    if lo.iter().zip(&hi).any(|(a, b)| a > b) {
        return Ok(None);
    }

    let mut tail = lo.clone();
    loop {
        let mut l = Vec::with_capacity(n);
        l.push(0);
        l.extend_from_slice(&tail);
        let l = ShiftVector(l);
        if tail.iter().any(|&v| v != 0) {
            let shifted = conjugate_shifts(m1, &l)?;
            let graded_ok = !require_n_graded || shifted.is_n_graded();
            if graded_ok {
                if let Some(sigma) = are_isomorphic(&shifted, m2)? {
                    return Ok(Some((sigma, l)));
                }
            }
        }
        // odometer over the shift box
        let mut pos = 0;
        loop {
            if pos == tail.len() {
                return Ok(None);
            }
            if tail[pos] < hi[pos] {
                tail[pos] += 1;
                break;
            }
            tail[pos] = lo[pos];
            pos += 1;
        }
    }
}
