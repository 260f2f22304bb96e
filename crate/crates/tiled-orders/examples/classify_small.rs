//! Exhaustive verification of the small classification statements.
//!
//! Run with `cargo run --release --example classify_small`.

use tiled_orders::{verify_classification, ClassificationTarget};

fn main() {
    for (size, max_entry, target) in [
        (2, 2, ClassificationTarget::Empty),
        (2, 2, ClassificationTarget::A1),
        (2, 2, ClassificationTarget::A2),
        (4, 2, ClassificationTarget::A3Nonlinear),
        (4, 2, ClassificationTarget::A3Linear),
        (3, 4, ClassificationTarget::Rank3),
    ] {
        let report = verify_classification(size, max_entry, target).unwrap();
        println!(
            "target {:>8} at size {size}, entries <= {max_entry}: scanned {} raw, \
             {} Gorenstein classes, {} in target, matches {:?}, unmatched {}",
            report.target,
            report.total_scanned,
            report.gorenstein_found,
            report.in_target,
            report.per_family,
            report.unmatched.len()
        );
    }
}
