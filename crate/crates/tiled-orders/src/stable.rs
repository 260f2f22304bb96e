//! Truncation vectors and the stable poset of an exponent matrix.
//!
//! For an N-graded matrix the truncation vector of row `i` at shift `j >= 1`
//! is `(max(d(i,k) - j, 0))_k`. Collecting these over all rows and shifts,
//! deduplicating, and removing the row vectors themselves yields a finite
//! subposet of Z^n under the componentwise order. Its opposite's incidence
//! algebra is the endomorphism algebra of the standard tilting object, so the
//! opposite is exposed as [`gamma_poset`].

use crate::error::{Error, Result};
use crate::gorenstein::{nakayama, GorensteinData};
use crate::matrix::{ExponentMatrix, ShiftVector};
use crate::poset::FinitePoset;

/// A truncation vector together with the `(row, shift)` pair that produced
/// it. The row index is zero-based; the shift is at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncationVector {
    pub v: Vec<i64>,
    pub origin: (usize, i64),
}

/// The stable poset: deduplicated truncation vectors under componentwise
/// order, with the vector literals as labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPoset {
    vectors: Vec<Vec<i64>>,
    carrier: FinitePoset,
}

impl VPoset {
    /// Sorted list of member vectors, aligned with the carrier's elements.
    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    pub fn carrier(&self) -> &FinitePoset {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

pub(crate) fn vector_label(v: &[i64]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

/// Builds a poset from integer vectors under componentwise order, sorted
/// lexicographically and labeled by their literals.
pub(crate) fn poset_from_vectors(mut vectors: Vec<Vec<i64>>) -> (Vec<Vec<i64>>, FinitePoset) {
    vectors.sort();
    vectors.dedup();
    let labels: Vec<String> = vectors.iter().map(|v| vector_label(v)).collect();
    let n = vectors.len();
    let mut leq = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            leq[a * n + b] = vectors[a].iter().zip(&vectors[b]).all(|(x, y)| x <= y);
        }
    }
    let poset = FinitePoset::from_leq_matrix(labels, leq)
        .expect("componentwise order on distinct vectors is a partial order");
    (vectors, poset)
}

/// The truncation vector `(max(d(i,k) - j, 0))_k` of row `i` at shift `j`.
pub fn truncation_vector(m: &ExponentMatrix, i: usize, j: i64) -> Result<TruncationVector> {
    m.require_n_graded()?;
    if j < 1 {
        return Err(Error::BadTruncationShift(j));
    }
    let v = (0..m.size()).map(|k| (m.entry(i, k) - j).max(0)).collect();
    Ok(TruncationVector { v, origin: (i, j) })
}

/// The set of truncation vectors of a valid N-graded matrix, with the row
/// vectors removed, under componentwise order. No Gorenstein check; prefer
/// [`v_poset`] when the endomorphism-algebra reading matters.
pub fn truncation_poset(m: &ExponentMatrix) -> Result<VPoset> {
    m.require_n_graded()?;
    let n = m.size();
    let mut vectors: Vec<Vec<i64>> = Vec::new();
    // shifts beyond the row maximum all give the zero vector, so the range
    // 1..=max is exact, with the zero vector added unconditionally
    vectors.push(vec![0; n]);
    for i in 0..n {
        for j in 1..=m.max_row_entry(i) {
            vectors.push(truncation_vector(m, i, j)?.v);
        }
    }
    let rows = m.rows();
    vectors.retain(|v| !rows.contains(v));
    let (vectors, carrier) = poset_from_vectors(vectors);
    Ok(VPoset { vectors, carrier })
}

/// The stable poset of a basic N-graded Gorenstein matrix.
pub fn v_poset(m: &ExponentMatrix) -> Result<VPoset> {
    m.require_n_graded()?;
    m.require_basic()?;
    if nakayama(m)?.is_none() {
        return Err(Error::NotGorenstein);
    }
    truncation_poset(m)
}

/// The opposite of the stable poset; its incidence algebra is the
/// endomorphism algebra of the standard tilting object.
pub fn gamma_poset(m: &ExponentMatrix) -> Result<FinitePoset> {
    Ok(v_poset(m)?.carrier().opposite())
}

/// Direction of a one-index degree shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftDirection {
    /// `l_i = 1`: removes the truncation of row `nu i` at shift 1 and adds
    /// row `i` itself.
    Up,
    /// `l_i = -1`: removes the truncation of row `i` at shift 1 and adds row
    /// `nu i` itself.
    Down,
}

/// Predicted stable poset after conjugating by a one-index shift, built by
/// surgery on the vector set rather than by recomputing truncations: remove
/// one shift-1 truncation vector, add one row vector.
///
/// The prediction is exact for the normalization move (downward shift at an
/// index with zero b-invariant and nonempty stable poset, where it removes
/// the maximum and adds the zero vector as the new minimum). In general the
/// conjugation lowers one coordinate of every truncation vector, which can
/// merge distinct vectors; the surgery does not model such merges, so
/// [`truncation_poset`] of the shifted matrix is the ground truth.
pub fn predicted_conjugacy_poset(
    m: &ExponentMatrix,
    g: &GorensteinData,
    i: usize,
    direction: ShiftDirection,
) -> Result<FinitePoset> {
    let n = m.size();
    let shift = match direction {
        ShiftDirection::Up => ShiftVector::unit(n, i),
        ShiftDirection::Down => ShiftVector::unit(n, i).negated(),
    };
    let shifted = crate::matrix::conjugate_shifts(m, &shift)?;
    if !shifted.is_n_graded() {
        return Err(Error::SurgeryNotGraded);
    }
    let base = truncation_poset(m)?;
    let (removed, added) = match direction {
        ShiftDirection::Up => (truncation_vector(m, g.nu.apply(i), 1)?.v, m.row(i).to_vec()),
        ShiftDirection::Down => (truncation_vector(m, i, 1)?.v, m.row(g.nu.apply(i)).to_vec()),
    };
    let mut vectors: Vec<Vec<i64>> = base
        .vectors()
        .iter()
        .filter(|v| **v != removed)
        .cloned()
        .collect();
    vectors.push(added);
    let (_, poset) = poset_from_vectors(vectors);
    Ok(poset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::conjugate_shifts;

    fn m(rows: &[&[i64]]) -> ExponentMatrix {
        ExponentMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn truncation_of_staircase_row() {
        let a = m(&[&[0, 0, 0], &[2, 0, 0], &[2, 2, 0]]);
        let t = truncation_vector(&a, 1, 1).unwrap();
        assert_eq!(t.v, vec![1, 0, 0]);
        assert_eq!(t.origin, (1, 1));
    }

    #[test]
    fn truncation_beyond_row_maximum_is_zero() {
        let a = m(&[&[0, 2], &[1, 0]]);
        assert_eq!(truncation_vector(&a, 0, 2).unwrap().v, vec![0, 0]);
        assert_eq!(truncation_vector(&a, 0, 7).unwrap().v, vec![0, 0]);
        assert_eq!(truncation_vector(&a, 0, 1).unwrap().v, vec![0, 1]);
    }

    #[test]
    fn truncation_shift_must_be_positive() {
        let a = m(&[&[0, 2], &[1, 0]]);
        assert!(matches!(
            truncation_vector(&a, 0, 0),
            Err(Error::BadTruncationShift(0))
        ));
    }

    #[test]
    fn staircase_stable_poset_is_a_two_chain() {
        let a = m(&[&[0, 0, 0], &[2, 0, 0], &[2, 2, 0]]);
        let vp = v_poset(&a).unwrap();
        assert_eq!(vp.vectors(), &[vec![1, 0, 0], vec![1, 1, 0]]);
        let c = vp.carrier();
        assert!(c.lt(0, 1));
    }

    #[test]
    fn hereditary_matrix_has_empty_stable_poset() {
        let a = m(&[&[0, 0, 0], &[1, 0, 0], &[1, 1, 0]]);
        assert!(v_poset(&a).unwrap().is_empty());
    }

    #[test]
    fn symmetric_unit_gives_singleton_zero() {
        let vp = v_poset(&m(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(vp.vectors(), &[vec![0, 0]]);
    }

    #[test]
    fn two_chain_case() {
        let vp = v_poset(&m(&[&[0, 2], &[1, 0]])).unwrap();
        assert_eq!(vp.vectors(), &[vec![0, 0], vec![0, 1]]);
        assert!(vp.carrier().lt(0, 1));
    }

    #[test]
    fn v_poset_requires_gorenstein() {
        let not_gorenstein = m(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        assert!(matches!(
            v_poset(&not_gorenstein),
            Err(Error::NotGorenstein)
        ));
        assert!(truncation_poset(&not_gorenstein).is_ok());
    }

    #[test]
    fn v_poset_requires_n_graded() {
        let signed = m(&[&[0, 3], &[-1, 0]]);
        assert!(matches!(v_poset(&signed), Err(Error::NotNGraded { .. })));
    }

    #[test]
    fn gamma_poset_of_symmetric_two() {
        // two incomparable sources over a unique sink, drawn toward the sink
        let gamma = gamma_poset(&m(&[&[0, 2], &[2, 0]])).unwrap();
        assert_eq!(gamma.len(), 3);
        let e = gamma.extrema();
        assert!(e.has_maximum);
        assert_eq!(e.minima.len(), 2);
        let quiver = gamma.opposite().hasse();
        assert!(quiver.is_tree_with_unique_sink());
    }

    #[test]
    fn gamma_poset_linear_chain() {
        let gamma = gamma_poset(&m(&[&[0, 1], &[3, 0]])).unwrap();
        assert!(gamma.is_isomorphic(&FinitePoset::chain(3)).is_some());
    }

    #[test]
    fn predicted_surgery_up_matches_direct_computation() {
        let a = m(&[&[0, 2], &[1, 0]]);
        let g = nakayama(&a).unwrap().unwrap();
        let predicted = predicted_conjugacy_poset(&a, &g, 0, ShiftDirection::Up).unwrap();
        assert_eq!(
            predicted.labels(),
            &["(0,1)".to_string(), "(0,2)".to_string()]
        );
        let shifted = conjugate_shifts(&a, &ShiftVector::unit(2, 0)).unwrap();
        let direct = v_poset(&shifted).unwrap();
        assert!(predicted.is_isomorphic(direct.carrier()).is_some());
    }

    #[test]
    fn predicted_surgery_down_matches_direct_computation() {
        let a = m(&[&[0, 2], &[1, 0]]);
        let g = nakayama(&a).unwrap().unwrap();
        let predicted = predicted_conjugacy_poset(&a, &g, 0, ShiftDirection::Down).unwrap();
        assert_eq!(
            predicted.labels(),
            &["(0,0)".to_string(), "(1,0)".to_string()]
        );
        let shifted = conjugate_shifts(&a, &ShiftVector::unit(2, 0).negated()).unwrap();
        let direct = v_poset(&shifted).unwrap();
        assert!(predicted.is_isomorphic(direct.carrier()).is_some());
    }

    #[test]
    fn surgery_requires_graded_shift() {
        // raising index 1 would make column 1 negative
        let a = m(&[&[0, 0, 0], &[2, 0, 0], &[2, 2, 0]]);
        let g = nakayama(&a).unwrap().unwrap();
        assert!(matches!(
            predicted_conjugacy_poset(&a, &g, 1, ShiftDirection::Up),
            Err(Error::SurgeryNotGraded)
        ));
    }

    #[test]
    fn stable_poset_is_empty_or_has_minimum() {
        for rows in [
            vec![vec![0i64, 1], vec![1, 0]],
            vec![vec![0, 2], vec![1, 0]],
            vec![vec![0, 2], vec![2, 0]],
            vec![vec![0, 0], vec![2, 0]],
            vec![vec![0, 0, 0], vec![2, 0, 0], vec![2, 2, 0]],
        ] {
            let vp = v_poset(&ExponentMatrix::new(rows).unwrap()).unwrap();
            if !vp.is_empty() {
                assert!(vp.carrier().extrema().has_minimum);
            }
        }
    }
}
