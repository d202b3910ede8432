//! Partition combinatorics: transpose, a×b-duality, Littlewood-Richardson
//! coefficients and Specht dimensions.
//!
//! Run with `cargo run --example partitions`.

use deligne_cat::partition::{
    ab_dual, is_ab_dual, lr_coefficient, partitions_of, rect_reach_condition, specht_dim,
    Partition,
};

fn main() {
    let p = |parts: &[usize]| Partition::new(parts.to_vec()).unwrap();

    let lambda = p(&[3, 1]);
    println!("λ = {lambda}, λ^t = {}, |λ| = {}", lambda.transpose(), lambda.size());
    println!("standard tableaux of shape {lambda}: {}", specht_dim(&lambda));

    // Every λ inside a 2×4 rectangle has a unique 2×4-dual; (3,1) is its own.
    let dual = ab_dual(&lambda, 2, 4).unwrap();
    println!("2×4-dual of {lambda} is {dual} (self-dual: {})", is_ab_dual(&lambda, &dual, 2, 4));

    // The duality is detected by a single Littlewood-Richardson coefficient:
    // λ, μ are a×b-dual exactly when the reachability condition holds and
    // c^{(b^a)}_{λμ} = 1.
    let rect = p(&[4, 4]);
    for mu in partitions_of(4) {
        let c = lr_coefficient(&lambda, &mu, &rect);
        let reach = rect_reach_condition(&lambda, &mu, 2, 4);
        println!(
            "c^(4,4)_({lambda},{mu}) = {c}   reach = {reach}   dual = {}",
            is_ab_dual(&lambda, &mu, 2, 4)
        );
    }

    // A classical product: c^ν_{(2,1),(2,1)} over all ν ⊢ 6 sums to 4² = 16
    // weighted by Specht dimensions... here just list the nonzero ones.
    let s21 = p(&[2, 1]);
    println!("\nnonzero LR coefficients of {s21} ⊗ {s21}:");
    for nu in partitions_of(6) {
        let c = lr_coefficient(&s21, &s21, &nu);
        if c > 0 {
            println!("  c^{nu} = {c}");
        }
    }
}
