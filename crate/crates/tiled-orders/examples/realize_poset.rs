//! Realizing a poset with maximum as a Gorenstein exponent matrix whose
//! stable poset reproduces it.
//!
//! Run with `cargo run --example realize_poset`.

use tiled_orders::{gamma_poset, nakayama, realize_poset, FinitePoset};

fn main() {
    // diamond: a < b, a < c, b < t, c < t
    let diamond = FinitePoset::from_relations(
        vec!["a".into(), "b".into(), "c".into(), "t".into()],
        &[("a", "b"), ("a", "c"), ("b", "t"), ("c", "t")],
    )
    .unwrap();

    let matrix = realize_poset(&diamond).unwrap();
    println!("realization of the diamond: {matrix}");

    let g = nakayama(&matrix).unwrap().unwrap();
    println!("b-invariants: {:?} (always 1 or 2)", g.b);

    let gamma = gamma_poset(&matrix).unwrap();
    println!(
        "round trip: opposite stable poset isomorphic to the diamond: {}",
        gamma.is_isomorphic(&diamond).is_some()
    );

    // a poset without maximum cannot be realized
    let fork = FinitePoset::from_relations(
        vec!["m".into(), "x".into(), "y".into()],
        &[("m", "x"), ("m", "y")],
    )
    .unwrap();
    println!(
        "realizing a poset without maximum: {:?}",
        realize_poset(&fork).err()
    );
}
