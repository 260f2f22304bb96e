//! Coverings of tiled orders and of numerical semigroup algebras.
//!
//! The degree-m covering of an n x n exponent matrix is the (mn) x (mn)
//! matrix whose block at block-row r, block-column c is the entrywise ceiling
//! `ceil((d + (r - c)) / m)`. Indices `(i, j)` with `i` an original index and
//! `j` a residue in `0..m` are linearized as `j * n + i`, so block `j` holds
//! the copies of all original indices. Ceilings and floors of negative
//! integers follow the mathematical convention via Euclidean division.

use crate::error::{Error, Result};
use crate::gorenstein::GorensteinData;
use crate::matrix::{conjugate_shifts, ExponentMatrix, Permutation, ShiftVector};

/// Index of a covering: original index `i` (zero-based) and residue `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverIndex {
    pub i: usize,
    pub j: usize,
}

impl CoverIndex {
    /// Reduces an arbitrary integer residue mod `m`.
    pub fn reduced(i: usize, j: i64, m: usize) -> Self {
        Self {
            i,
            j: j.rem_euclid(m as i64) as usize,
        }
    }

    pub fn linear(&self, n: usize) -> usize {
        self.j * n + self.i
    }

    pub fn from_linear(idx: usize, n: usize) -> Self {
        Self {
            i: idx % n,
            j: idx / n,
        }
    }
}

impl std::fmt::Display for CoverIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        // one-based original index, as in diagnostics
        write!(f, "{}.{}", self.i + 1, self.j)
    }
}

fn ceil_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    a.div_euclid(b) + if a.rem_euclid(b) != 0 { 1 } else { 0 }
}

fn floor_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

/// The degree-m covering of an exponent matrix.
pub fn cover(m: &ExponentMatrix, degree: usize) -> Result<ExponentMatrix> {
    if degree < 1 {
        return Err(Error::BadCoverDegree(degree as i64));
    }
    let n = m.size();
    let size = n * degree;
    let mut rows = Vec::with_capacity(size);
    for row_idx in 0..size {
        let a = CoverIndex::from_linear(row_idx, n);
        let mut row = Vec::with_capacity(size);
        for col_idx in 0..size {
            let b = CoverIndex::from_linear(col_idx, n);
            let numerator = m.entry(a.i, b.i) as i128 + a.j as i128 - b.j as i128;
            let v = ceil_div(numerator, degree as i128);
            row.push(i64::try_from(v).map_err(|_| Error::Overflow)?);
        }
        rows.push(row);
    }
    ExponentMatrix::new(rows)
}

/// Nakayama data of a covering, transported by the formulas
/// `nu(i, j) = (nu i, p_i + j)` and `p_(i,j) = floor((p_i + j) / m)`.
pub fn predicted_cover_gorenstein(g: &GorensteinData, degree: usize) -> Result<GorensteinData> {
    if degree < 1 {
        return Err(Error::BadCoverDegree(degree as i64));
    }
    let n = g.nu.len();
    let size = n * degree;
    let mut images = vec![0usize; size];
    let mut p = vec![0i64; size];
    for i in 0..n {
        for j in 0..degree {
            let source = CoverIndex { i, j }.linear(n);
            let target = CoverIndex::reduced(g.nu.apply(i), g.p[i] + j as i64, degree);
            images[source] = target.linear(n);
            p[source] = floor_div(g.p[i] + j as i64, degree as i64);
        }
    }
    let b = p.iter().map(|&pi| 1 - pi).collect();
    Ok(GorensteinData {
        nu: Permutation::new(images).expect("transported bijection stays bijective"),
        b,
        p,
    })
}

/// A numerical semigroup: cofinite submonoid of the naturals given by
/// generators with gcd 1.
#[derive(Debug, Clone)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    frobenius: i64,
    /// membership sieve for 0..=bound; everything above the Frobenius number
    /// is a member
    members: Vec<bool>,
}

impl NumericalSemigroup {
    pub fn new(generators: &[i64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::BadGcd(0));
        }
        for &g in generators {
            if g <= 0 {
                return Err(Error::BadGenerator(g));
            }
        }
        let gcd = generators.iter().fold(0i64, |acc, &g| gcd(acc, g));
        if gcd != 1 {
            return Err(Error::BadGcd(gcd));
        }
        // The Frobenius number of any semigroup containing a and b is at most
        // ab - a - b, so the product of the two smallest generators bounds
        // the sieve.
        let mut sorted = generators.to_vec();
        sorted.sort_unstable();
        let bound = if sorted.len() == 1 {
            1
        } else {
            usize::try_from(sorted[0].checked_mul(sorted[1]).ok_or(Error::Overflow)?)
                .map_err(|_| Error::Overflow)?
        };
        let mut members = vec![false; bound + 1];
        members[0] = true;
        for &g in &sorted {
            let g = g as usize;
            for v in g..=bound {
                if members[v - g] {
                    members[v] = true;
                }
            }
        }
        let frobenius = (0..=bound)
            .rev()
            .find(|&v| !members[v])
            .map(|v| v as i64)
            .unwrap_or(-1);
        Ok(Self {
            generators: generators.to_vec(),
            frobenius,
            members,
        })
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// The largest integer not in the semigroup, or -1 when the semigroup is
    /// all of the naturals.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn contains(&self, v: i64) -> bool {
        if v < 0 {
            return false;
        }
        if v > self.frobenius {
            return true;
        }
        self.members[v as usize]
    }
}

/// The Frobenius number computed by sieve.
pub fn frobenius(generators: &[i64]) -> Result<i64> {
    Ok(NumericalSemigroup::new(generators)?.frobenius())
}

/// The degree-m covering of a numerical semigroup algebra as an exponent
/// matrix: `d(r, c) = min { q >= 0 : m q + (c - r) in S }`. Requires
/// `m > frobenius(S)` so that the covering is a tiled order.
pub fn semigroup_cover(s: &NumericalSemigroup, degree: usize) -> Result<ExponentMatrix> {
    if degree < 1 {
        return Err(Error::BadCoverDegree(degree as i64));
    }
    let m = degree as i64;
    if m <= s.frobenius() {
        return Err(Error::CoverDegreeTooSmall {
            degree: m,
            frobenius: s.frobenius(),
        });
    }
    let mut rows = Vec::with_capacity(degree);
    for r in 0..degree {
        let mut row = Vec::with_capacity(degree);
        for c in 0..degree {
            let offset = c as i64 - r as i64;
            let q = (0..)
                .find(|&q| s.contains(m * q + offset))
                .expect("membership is cofinite");
            row.push(q);
        }
        rows.push(row);
    }
    ExponentMatrix::new(rows)
}

/// Whether covering commutes with the graded Morita move that shifts the
/// summand at `i0` by one degree, up to relabeling.
///
/// Shifting `e_{i0} A` by one sends `d(i,j)` to `d(i,j) - l_i + l_j` with
/// `l = e_{i0}`, i.e. to `conjugate_shifts` with the negated unit vector; on
/// the covering the matching summand is the one at residue `m - 1`.
pub fn compatibility_holds(m: &ExponentMatrix, i0: usize, degree: usize) -> Result<bool> {
    let n = m.size();
    let left = cover(
        &conjugate_shifts(m, &ShiftVector::unit(n, i0).negated())?,
        degree,
    )?;
    let covered = cover(m, degree)?;
    let shifted_index = CoverIndex {
        i: i0,
        j: degree - 1,
    }
    .linear(n);
    let right = conjugate_shifts(
        &covered,
        &ShiftVector::unit(n * degree, shifted_index).negated(),
    )?;
    Ok(crate::matrix::are_isomorphic(&left, &right)?.is_some())
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}
