//! Validation and Nakayama data of exponent matrices.
//!
//! Run with `cargo run --example gorenstein_invariants`.

use tiled_orders::{nakayama, validate, ExponentMatrix};

fn main() {
    let raw = vec![vec![0i64, 2, 0], vec![0, 0, 0], vec![0, 0, 0]];
    let report = validate(&raw).unwrap();
    println!(
        "[[0,2,0],[0,0,0],[0,0,0]]: quasi-metric {}, violations {:?}",
        report.is_quasi_metric(),
        report.triangle_violations
    );

    for rows in [
        vec![vec![0i64, 1], vec![1, 0]],
        vec![vec![0, 2], vec![1, 0]],
        vec![vec![0, 0], vec![1, 0]],
        vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]],
    ] {
        let m = ExponentMatrix::new(rows).unwrap();
        match nakayama(&m).unwrap() {
            Some(g) => println!(
                "{m}: nu = {:?}, b = {:?}, p = {:?}, cyclic: {}",
                g.nu.one_based(),
                g.b,
                g.p,
                tiled_orders::is_cyclic(&g)
            ),
            None => println!("{m}: not Gorenstein"),
        }
    }

    let family = tiled_orders::cyclic_order(&[1, 1, 1]).unwrap();
    println!("cyclic family (1,1,1) gives {family}");
}
