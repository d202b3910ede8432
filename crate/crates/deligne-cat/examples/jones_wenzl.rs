//! The Temperley-Lieb algebra at δ = −1: the Jones-Wenzl element f = 1 + e,
//! its idempotency and annihilation properties, and the match between its
//! two-sided closure and the Gram radical.
//!
//! Run with `cargo run --example jones_wenzl`.

use deligne_cat::algebra::{
    annihilated_by_cups_caps, is_quasi_idempotent, jones_wenzl, multiply, negligible_dim,
    scalar_string, two_sided_ideal, AlgebraParams,
};
use deligne_cat::diagram::{Flavor, Row, Shape};

fn main() {
    let delta = -1;
    let f = jones_wenzl(3, delta).unwrap();
    println!("Jones-Wenzl element of TL_2(δ=−1):");
    for (d, c) in f.terms() {
        println!("  {} · {d}", scalar_string(c));
    }

    let ff = multiply(&f, &f).unwrap();
    let (quasi, alpha) = is_quasi_idempotent(&f).unwrap();
    println!("f² has {} terms; quasi-idempotent: {quasi}, α = {}", ff.num_terms(), scalar_string(&alpha));
    println!("annihilated by all cups/caps: {}", annihilated_by_cups_caps(&f).unwrap());

    // The two-sided tensor-ideal closure of f recovers exactly the radical of
    // the Markov trace form, rank by rank.
    let params = AlgebraParams::new(Flavor::TemperleyLieb, delta);
    for n in 3..=5 {
        let big = f.tensor_identity(Row::Plain(n - 2)).unwrap();
        let shape = Shape::plain(n, n);
        let closure = two_sided_ideal(params, &shape, &[big], None).unwrap();
        let radical = negligible_dim(params, &shape).unwrap();
        println!(
            "TL_{n}(−1): closure dim = {}, Gram radical dim = {} ({})",
            closure.dim(),
            radical,
            if closure.dim() == radical { "match" } else { "MISMATCH" }
        );
    }
}
