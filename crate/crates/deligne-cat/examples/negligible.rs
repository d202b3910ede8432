//! Negligible morphisms: radicals of the Markov trace form across flavors,
//! compared against the kernels of the concrete matrix realizations.
//!
//! Run with `cargo run --example negligible`.

use deligne_cat::algebra::{negligible_dim, AlgebraParams};
use deligne_cat::diagram::{enumerate_diagrams, Flavor, Shape};
use deligne_cat::oracle::{phi_rank, RepSpec};

fn main() {
    // Brauer algebras at integer δ: the Gram radical is exactly the kernel of
    // the map onto the orthosymplectic endomorphism algebra.
    println!("Brauer B_r(δ) radical vs oracle kernel:");
    let cases = [
        (3i64, RepSpec::O { m: 3, n: 0 }),
        (2, RepSpec::O { m: 2, n: 0 }),
        (-2, RepSpec::O { m: 0, n: 1 }),
        (-1, RepSpec::O { m: 1, n: 1 }),
    ];
    for (delta, spec) in cases {
        let params = AlgebraParams::new(Flavor::Brauer, delta);
        for r in 1..=3 {
            let shape = Shape::plain(r, r);
            let dim = enumerate_diagrams(Flavor::Brauer, &shape).unwrap().len();
            let radical = negligible_dim(params, &shape).unwrap();
            let kernel = dim - phi_rank(&spec, &shape, None).unwrap();
            println!("  δ={delta:2} r={r}: radical {radical:2}  kernel {kernel:2}");
            assert_eq!(radical, kernel);
        }
    }

    // Partition category at t = 4: everything is faithful until 2k > t.
    println!("\nPartition algebra P_k(4):");
    let params = AlgebraParams::new(Flavor::PartitionCat, 4);
    let spec = RepSpec::S { t: 4 };
    for k in 1..=3 {
        let shape = Shape::plain(k, k);
        let dim = enumerate_diagrams(Flavor::PartitionCat, &shape).unwrap().len();
        let radical = negligible_dim(params, &shape).unwrap();
        let kernel = dim - phi_rank(&spec, &shape, None).unwrap();
        println!("  k={k}: dim {dim:3}  radical {radical:2}  kernel {kernel:2}");
        assert_eq!(radical, kernel);
    }
}
