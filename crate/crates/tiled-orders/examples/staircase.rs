//! The staircase family: its stable poset is a grid.
//!
//! Run with `cargo run --example staircase`.

use tiled_orders::{ExponentMatrix, FinitePoset};

fn main() {
    for (step, size) in [(2i64, 3usize), (3, 4), (4, 4)] {
        let matrix = ExponentMatrix::staircase(step, size).unwrap();
        let vp = tiled_orders::v_poset(&matrix).unwrap();
        let grid = FinitePoset::chain((step - 1) as usize).product(&FinitePoset::chain(size - 1));
        let isomorphic = vp.carrier().opposite().is_isomorphic(&grid).is_some();
        println!(
            "staircase step {step}, size {size}: stable poset has {} elements, \
             opposite isomorphic to the {}x{} grid: {}",
            vp.len(),
            step - 1,
            size - 1,
            isomorphic
        );
    }

    let matrix = ExponentMatrix::staircase(2, 3).unwrap();
    let vp = tiled_orders::v_poset(&matrix).unwrap();
    println!("\nquiver of the stable poset of {matrix}, drawn toward the sink:");
    print!("{}", vp.carrier().hasse().to_dot());
}
