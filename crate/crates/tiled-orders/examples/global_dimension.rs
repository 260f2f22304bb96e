//! Projective dimensions of simples over incidence algebras, by explicit
//! minimal resolutions with exact rational arithmetic.
//!
//! Run with `cargo run --example global_dimension`.

use tiled_orders::{gamma_poset, homology, ExponentMatrix, FinitePoset};

fn main() {
    for (name, p) in [
        ("chain of 4", FinitePoset::chain(4)),
        ("antichain of 3", FinitePoset::antichain(3)),
        (
            "diamond",
            FinitePoset::chain(2).product(&FinitePoset::chain(2)),
        ),
        (
            "2x3 grid",
            FinitePoset::chain(2).product(&FinitePoset::chain(3)),
        ),
    ] {
        let report = homology(&p).unwrap();
        println!(
            "{name}: projective dimensions {:?}, global dimension {}",
            report.proj_dims, report.global_dimension
        );
    }

    // the endomorphism algebra of a staircase order is the incidence algebra
    // of a grid, of global dimension 2
    let gamma = gamma_poset(&ExponentMatrix::staircase(3, 3).unwrap()).unwrap();
    let report = homology(&gamma).unwrap();
    println!(
        "staircase(3,3) endomorphism poset: {} elements, global dimension {}, hereditary {}",
        gamma.len(),
        report.global_dimension,
        report.global_dimension <= 1
    );
}
