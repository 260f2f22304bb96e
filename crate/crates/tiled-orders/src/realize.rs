//! Realizing finite posets as Gorenstein tiled orders.
//!
//! Every finite poset that is empty or has a maximum arises as the stable
//! poset of a basic N-graded Gorenstein tiled order with all b-invariants 1
//! or 2, and no other poset does. The construction drops the maximum, lists
//! the rest along a linear extension, forms the 0/1 comparability matrix `d`,
//! and returns the doubled block matrix `[[d, 1 - d^t], [2 - d^t, d]]`.

use crate::error::{Error, Result};
use crate::matrix::ExponentMatrix;
use crate::poset::{FinitePoset, HasseQuiver};

/// Realizes a poset with maximum (or the empty poset) as an exponent matrix
/// whose opposite stable poset is isomorphic to the input.
pub fn realize_poset(p: &FinitePoset) -> Result<ExponentMatrix> {
    realize_with_order(p, &p.linear_extension())
}

// The linear extension fixes only the row ordering; different extensions
// yield permutation-conjugate outputs.
pub(crate) fn realize_with_order(p: &FinitePoset, extension: &[usize]) -> Result<ExponentMatrix> {
    if p.is_empty() {
        return ExponentMatrix::new(vec![vec![0]]);
    }
    if p.len() == 1 {
        return ExponentMatrix::new(vec![vec![0, 1], vec![1, 0]]);
    }
    let extrema = p.extrema();
    if !extrema.has_maximum {
        return Err(Error::NoMaximum);
    }
    let max = extrema.maxima[0];
    let base: Vec<usize> = extension.iter().copied().filter(|&x| x != max).collect();
    let q = base.len();
    // comparability of the opposite base order: the truncation vectors of the
    // doubled matrix are then the up-set indicators, whose componentwise
    // order reproduces the input poset after taking opposites
    let d = |a: usize, b: usize| -> i64 {
        if p.leq(base[b], base[a]) {
            0
        } else {
            1
        }
    };
    ExponentMatrix::from_fn(2 * q, |i, j| {
        let (bi, bj) = (i % q, j % q);
        match (i < q, j < q) {
            (true, true) | (false, false) => d(bi, bj),
            (true, false) => 1 - d(bj, bi),
            (false, true) => 2 - d(bj, bi),
        }
    })
}

/// Realizes a quiver that is empty or a tree with a unique sink. Arrows are
/// read as covering relations ascending toward the sink, which becomes the
/// maximum of the realized poset.
pub fn realize_quiver(q: &HasseQuiver) -> Result<ExponentMatrix> {
    if q.is_empty() {
        return realize_poset(&FinitePoset::empty());
    }
    if !q.is_tree_with_unique_sink() {
        return Err(Error::NotSinkTree {
            detail:
                "realizable quivers are exactly the empty quiver and the trees with a unique sink"
                    .to_string(),
        });
    }
    let labels = q.labels().to_vec();
    let pairs: Vec<(String, String)> = q
        .arrows()
        .iter()
        .map(|&(a, b)| (labels[a].clone(), labels[b].clone()))
        .collect();
    let poset = FinitePoset::from_relations(labels, &pairs)?;
    realize_poset(&poset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gorenstein::nakayama;
    use crate::stable::gamma_poset;

    fn poset<S: AsRef<str>>(labels: &[&str], pairs: &[(S, S)]) -> FinitePoset {
        FinitePoset::from_relations(labels.iter().map(|s| s.to_string()).collect(), pairs).unwrap()
    }

    fn rows(m: &ExponentMatrix) -> Vec<Vec<i64>> {
        m.rows()
    }

    #[test]
    fn chain_of_two_realizes_to_the_two_chain_order() {
        let p = poset(&["a", "0"], &[("a", "0")]);
        let a = realize_poset(&p).unwrap();
        assert_eq!(rows(&a), vec![vec![0, 1], vec![2, 0]]);
        assert!(gamma_poset(&a).unwrap().is_isomorphic(&p).is_some());
    }

    #[test]
    fn two_incomparable_elements_under_a_maximum() {
        let p = poset(&["a", "b", "0"], &[("a", "0"), ("b", "0")]);
        let a = realize_poset(&p).unwrap();
        assert_eq!(
            rows(&a),
            vec![
                vec![0, 1, 1, 0],
                vec![1, 0, 0, 1],
                vec![2, 1, 0, 1],
                vec![1, 2, 1, 0]
            ]
        );
        assert!(gamma_poset(&a).unwrap().is_isomorphic(&p).is_some());
    }

    #[test]
    fn degenerate_sizes() {
        assert_eq!(
            rows(&realize_poset(&FinitePoset::empty()).unwrap()),
            vec![vec![0]]
        );
        assert_eq!(
            rows(&realize_poset(&FinitePoset::singleton("0")).unwrap()),
            vec![vec![0, 1], vec![1, 0]]
        );
    }

    #[test]
    fn poset_without_maximum_is_rejected() {
        let v = poset(&["m", "a", "b"], &[("m", "a"), ("m", "b")]);
        assert!(matches!(realize_poset(&v), Err(Error::NoMaximum)));
    }

    #[test]
    fn b_invariants_are_one_or_two() {
        let p = poset(
            &["a", "b", "c", "0"],
            &[("a", "b"), ("a", "c"), ("b", "0"), ("c", "0")],
        );
        let a = realize_poset(&p).unwrap();
        assert!(a.is_basic());
        assert!(a.is_n_graded());
        let g = nakayama(&a)
            .unwrap()
            .expect("realized orders are Gorenstein");
        assert!(g.b.iter().all(|&b| b == 1 || b == 2));
        assert_eq!(a.size(), 2 * (p.len() - 1));
    }

    #[test]
    fn output_is_extension_independent_up_to_relabeling() {
        let p = poset(&["a", "b", "0"], &[("a", "0"), ("b", "0")]);
        let forward = realize_poset(&p).unwrap();
        let mut reversed = p.linear_extension();
        reversed[..2].reverse(); // still a linear extension: a, b incomparable
        let other = realize_with_order(&p, &reversed).unwrap();
        assert!(crate::matrix::are_isomorphic(&forward, &other)
            .unwrap()
            .is_some());
    }

    #[test]
    fn quiver_realization_round_trips() {
        let single = HasseQuiver::new(vec!["a".into(), "0".into()], &[("a", "0")]).unwrap();
        let a = realize_quiver(&single).unwrap();
        assert_eq!(rows(&a), vec![vec![0, 1], vec![2, 0]]);

        let fork = HasseQuiver::new(
            vec!["a".into(), "b".into(), "0".into()],
            &[("a", "0"), ("b", "0")],
        )
        .unwrap();
        let b = realize_quiver(&fork).unwrap();
        // the realized order's quiver, drawn toward the sink, is the input
        let drawn = crate::stable::v_poset(&b).unwrap().carrier().hasse();
        assert!(drawn.is_isomorphic(&fork).is_some());
    }

    #[test]
    fn cyclic_quivers_are_rejected() {
        let cycle = HasseQuiver::new(
            vec!["a".into(), "b".into(), "c".into()],
            &[("a", "b"), ("b", "c"), ("c", "a")],
        )
        .unwrap();
        assert!(matches!(
            realize_quiver(&cycle),
            Err(Error::NotSinkTree { .. })
        ));
    }
}
