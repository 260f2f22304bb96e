//! Coverings of tiled orders, transported Nakayama data, and the numerical
//! semigroup bridge.
//!
//! Run with `cargo run --example coverings`.

use tiled_orders::{
    cover, nakayama, predicted_cover_gorenstein, semigroup_cover, ExponentMatrix,
    NumericalSemigroup,
};

fn main() {
    let a = ExponentMatrix::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
    let covered = cover(&a, 2).unwrap();
    println!("degree-2 covering of {a} is {covered}");

    let g = nakayama(&a).unwrap().unwrap();
    let predicted = predicted_cover_gorenstein(&g, 2).unwrap();
    let direct = nakayama(&covered).unwrap().unwrap();
    println!(
        "transported nu {:?} matches direct {:?}: {}",
        predicted.nu.one_based(),
        direct.nu.one_based(),
        predicted == direct
    );

    let s = NumericalSemigroup::new(&[2, 3]).unwrap();
    println!(
        "semigroup <2,3>: Frobenius number {}, degree-2 covering {}",
        s.frobenius(),
        semigroup_cover(&s, 2).unwrap()
    );

    let s345 = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
    let c = semigroup_cover(&s345, 3).unwrap();
    println!(
        "semigroup <3,4,5>: Frobenius number {}, degree-3 covering {} (Gorenstein: {})",
        s345.frobenius(),
        c,
        nakayama(&c).unwrap().is_some()
    );

    println!(
        "covering commutes with the one-index shift move: {}",
        tiled_orders::compatibility_holds(&a, 0, 2).unwrap()
    );
}
