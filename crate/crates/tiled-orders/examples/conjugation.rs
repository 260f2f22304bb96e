//! Graded Morita moves: diagonal shifts, relabelings, and the equivalence
//! searches built on them.
//!
//! Run with `cargo run --example conjugation`.

use tiled_orders::{
    are_conjugate, are_isomorphic, conjugate_permutation, conjugate_shifts, ExponentMatrix,
    Permutation, ShiftVector,
};

fn main() {
    let a = ExponentMatrix::new(vec![vec![0, 2], vec![1, 0]]).unwrap();

    let shifted = conjugate_shifts(&a, &ShiftVector(vec![-1, 0])).unwrap();
    println!("{a} shifted by (-1, 0) gives {shifted}");

    let swapped =
        conjugate_permutation(&a, &Permutation::from_one_based(&[2, 1]).unwrap()).unwrap();
    println!("{a} relabeled by the swap gives {swapped}");

    match are_conjugate(&a, &shifted, true).unwrap() {
        Some((sigma, l)) => println!(
            "conjugacy witness from {a} to {shifted}: sigma = {:?}, shifts = {:?}",
            sigma.one_based(),
            l.0
        ),
        None => println!("not conjugate"),
    }

    let b = ExponentMatrix::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
    println!(
        "{a} and {b} conjugate: {} (symmetrized sums {:?} vs {:?})",
        are_conjugate(&a, &b, true).unwrap().is_some(),
        a.symmetrized_sums(),
        b.symmetrized_sums()
    );

    println!(
        "{a} and {shifted} isomorphic (relabeling only): {:?}",
        are_isomorphic(&a, &shifted).unwrap().map(|s| s.one_based())
    );
}
