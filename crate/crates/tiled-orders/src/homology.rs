//! Projective dimensions of simple modules over the incidence algebra of a
//! finite poset, over the rationals.
//!
//! Modules are poset representations: one finite-dimensional rational vector
//! space per element and one map per comparable pair, maps going upward. The
//! projective at `x` is the representation of the principal filter above `x`.
//! Each simple is resolved by explicit minimal projective covers, with
//! syzygies computed by exact rational linear algebra, iterated until zero.
//! Coefficients are fixed to characteristic zero; global dimension of an
//! incidence algebra can depend on the characteristic, and the rationals are
//! the canonical choice here.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::RatMat;
use crate::poset::{FinitePoset, DEFAULT_HOMOLOGY_BOUND};

/// Projective dimensions of the simples and their maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologicalReport {
    /// Indexed like the poset's elements.
    pub proj_dims: Vec<usize>,
    pub global_dimension: usize,
}

impl HomologicalReport {
    pub fn proj_dim_of(&self, p: &FinitePoset, label: &str) -> Option<usize> {
        p.index_of(label).map(|i| self.proj_dims[i])
    }
}

/// Representation of a poset: dims per element, maps for all pairs x < y.
struct Rep {
    dims: Vec<usize>,
    /// maps[x][y] defined for x < y: a dims[y] x dims[x] matrix.
    maps: Vec<Vec<Option<RatMat>>>,
}

impl Rep {
    fn zero_shaped(n: usize) -> Self {
        Rep {
            dims: vec![0; n],
            maps: (0..n).map(|_| vec![None; n]).collect(),
        }
    }

    fn simple(p: &FinitePoset, x: usize) -> Self {
        let mut rep = Self::zero_shaped(p.len());
        rep.dims[x] = 1;
        rep
    }

    fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    fn map(&self, x: usize, y: usize) -> RatMat {
        match &self.maps[x][y] {
            Some(m) => m.clone(),
            None => RatMat::zero(self.dims[y], self.dims[x]),
        }
    }
}

/// Basis of a projective module with given multiplicities: at element `y` one
/// copy of the base field for every pair `(x, t)` with `x <= y` and
/// `t < mult[x]`.
struct ProjectiveBasis {
    /// basis[y] lists the (x, t) pairs in (element order, copy) order.
    basis: Vec<Vec<(usize, usize)>>,
}

impl ProjectiveBasis {
    fn new(p: &FinitePoset, mult: &[usize]) -> Self {
        let n = p.len();
        let basis = (0..n)
            .map(|y| {
                let mut at = Vec::new();
                for (x, &count) in mult.iter().enumerate() {
                    if p.leq(x, y) {
                        for t in 0..count {
                            at.push((x, t));
                        }
                    }
                }
                at
            })
            .collect();
        ProjectiveBasis { basis }
    }

    fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(|b| b.len()).collect()
    }

    /// The structure map of the projective from `x` up to `y`: basis element
    /// `(z, t)` at `x` goes to the same `(z, t)` at `y`.
    fn structure_map(&self, x: usize, y: usize) -> RatMat {
        let rows = self.basis[y].len();
        let cols = self.basis[x].len();
        let mut m = RatMat::zero(rows, cols);
        for (col, key) in self.basis[x].iter().enumerate() {
            let row = self.basis[y]
                .iter()
                .position(|k| k == key)
                .expect("filter basis at x embeds into basis at y");
            m[(row, col)] = BigRational::one();
        }
        m
    }
}

/// Multiplicities and lifted generators of the top of `m`: at each element a
/// set of standard basis vectors completing the radical image to a basis.
fn top_generators(p: &FinitePoset, m: &Rep) -> (Vec<usize>, Vec<Vec<Vec<BigRational>>>) {
    let n = p.len();
    let mut mult = vec![0usize; n];
    let mut gens: Vec<Vec<Vec<BigRational>>> = vec![Vec::new(); n];
    for y in 0..n {
        if m.dims[y] == 0 {
            continue;
        }
        let mut radical_columns: Vec<Vec<BigRational>> = Vec::new();
        for z in 0..n {
            if p.lt(z, y) && m.dims[z] > 0 {
                let f = m.map(z, y);
                for j in 0..f.cols {
                    radical_columns.push(f.column(j));
                }
            }
        }
        let mut span = radical_columns;
        let mut current_rank = RatMat::from_columns(m.dims[y], &span).rank();
        for t in 0..m.dims[y] {
            let mut e = vec![BigRational::zero(); m.dims[y]];
            e[t] = BigRational::one();
            span.push(e.clone());
            let new_rank = RatMat::from_columns(m.dims[y], &span).rank();
            if new_rank > current_rank {
                current_rank = new_rank;
                mult[y] += 1;
                gens[y].push(e);
            } else {
                span.pop();
            }
        }
    }
    (mult, gens)
}

/// One syzygy step: build the projective cover of `m` and return its kernel.
fn syzygy(p: &FinitePoset, m: &Rep) -> Rep {
    let n = p.len();
    let (mult, gens) = top_generators(p, m);
    let proj = ProjectiveBasis::new(p, &mult);
    let proj_dims = proj.dims();

    // cover map at each element: column (x, t) goes to the image of the
    // generator gens[x][t] pushed up to y
    let cover: Vec<RatMat> = (0..n)
        .map(|y| {
            let cols: Vec<Vec<BigRational>> = proj.basis[y]
                .iter()
                .map(|&(x, t)| {
                    if x == y {
                        gens[x][t].clone()
                    } else {
                        m.map(x, y).mul_vec(&gens[x][t])
                    }
                })
                .collect();
            RatMat::from_columns(m.dims[y], &cols)
        })
        .collect();

    let kernel_bases: Vec<Vec<Vec<BigRational>>> =
        (0..n).map(|y| cover[y].kernel_basis()).collect();
    let mut out = Rep::zero_shaped(n);
    out.dims = kernel_bases.iter().map(|b| b.len()).collect();
    for x in 0..n {
        for y in 0..n {
            if !p.lt(x, y) || out.dims[x] == 0 || out.dims[y] == 0 {
                continue;
            }
            let ambient = proj.structure_map(x, y);
            let target = RatMat::from_columns(proj_dims[y], &kernel_bases[y]);
            let cols: Vec<Vec<BigRational>> = kernel_bases[x]
                .iter()
                .map(|v| {
                    let image = ambient.mul_vec(v);
                    target
                        .solve(&image)
                        .expect("kernel is mapped into the kernel")
                })
                .collect();
            out.maps[x][y] = Some(RatMat::from_columns(out.dims[y], &cols));
        }
    }
    out
}

fn proj_dim_of_simple(p: &FinitePoset, x: usize, chain_bound: usize) -> usize {
    let mut current = Rep::simple(p, x);
    let mut steps = 0usize;
    while !current.is_zero() {
        assert!(
            steps <= chain_bound + 1,
            "minimal resolution exceeded the longest-chain bound"
        );
        current = syzygy(p, &current);
        steps += 1;
    }
    steps - 1
}

/// Projective dimension of every simple and the global dimension, with the
/// default size bound.
pub fn homology(p: &FinitePoset) -> Result<HomologicalReport> {
    homology_with_bound(p, DEFAULT_HOMOLOGY_BOUND)
}

/// Same as [`homology`] with an explicit size bound.
pub fn homology_with_bound(p: &FinitePoset, bound: usize) -> Result<HomologicalReport> {
    if p.len() > bound {
        return Err(Error::HomologyBound {
            size: p.len(),
            bound,
        });
    }
    let chain_bound = p.longest_chain_edges();
    let proj_dims: Vec<usize> = (0..p.len())
        .map(|x| proj_dim_of_simple(p, x, chain_bound))
        .collect();
    let global_dimension = proj_dims.iter().copied().max().unwrap_or(0);
    Ok(HomologicalReport {
        proj_dims,
        global_dimension,
    })
}

/// Global dimension at most one.
pub fn is_hereditary(p: &FinitePoset) -> Result<bool> {
    Ok(homology(p)?.global_dimension <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antichain_is_semisimple() {
        let report = homology(&FinitePoset::antichain(2)).unwrap();
        assert_eq!(report.proj_dims, vec![0, 0]);
        assert_eq!(report.global_dimension, 0);
    }

    #[test]
    fn chains_have_global_dimension_one() {
        for k in 2..=5 {
            let report = homology(&FinitePoset::chain(k)).unwrap();
            assert_eq!(report.global_dimension, 1, "chain of {k}");
        }
    }

    #[test]
    fn diamond_has_global_dimension_two() {
        let diamond = FinitePoset::chain(2).product(&FinitePoset::chain(2));
        let report = homology(&diamond).unwrap();
        assert_eq!(report.global_dimension, 2);
        // only the bottom simple has projective dimension 2
        assert_eq!(report.proj_dims.iter().filter(|&&d| d == 2).count(), 1);
    }

    #[test]
    fn empty_poset_report() {
        let report = homology(&FinitePoset::empty()).unwrap();
        assert!(report.proj_dims.is_empty());
        assert_eq!(report.global_dimension, 0);
    }

    #[test]
    fn global_dimension_bounded_by_longest_chain() {
        let grid = FinitePoset::chain(2).product(&FinitePoset::chain(3));
        let report = homology(&grid).unwrap();
        assert!(report.global_dimension <= grid.longest_chain_edges());
        assert_eq!(report.global_dimension, 2);
    }

    #[test]
    fn hereditary_cases() {
        assert!(is_hereditary(&FinitePoset::chain(3)).unwrap());
        let diamond = FinitePoset::chain(2).product(&FinitePoset::chain(2));
        assert!(!is_hereditary(&diamond).unwrap());
    }

    #[test]
    fn size_bound_is_enforced() {
        let big = FinitePoset::antichain(15);
        assert!(matches!(
            homology(&big),
            Err(Error::HomologyBound {
                size: 15,
                bound: 14
            })
        ));
        assert!(homology_with_bound(&big, 20).is_ok());
    }

    #[test]
    fn homology_is_relabeling_invariant() {
        let p = FinitePoset::from_relations(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
        )
        .unwrap();
        let q = FinitePoset::from_relations(
            vec!["d".into(), "c".into(), "b".into(), "a".into()],
            &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
        )
        .unwrap();
        let rp = homology(&p).unwrap();
        let rq = homology(&q).unwrap();
        assert_eq!(rp.global_dimension, rq.global_dimension);
        let witness = p.is_isomorphic(&q).unwrap();
        for (i, &img) in witness.iter().enumerate() {
            assert_eq!(rp.proj_dims[i], rq.proj_dims[img]);
        }
    }
}
