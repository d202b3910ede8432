//! The matrix oracle: exact realizations of diagram algebras on tensor
//! powers, the rank of the comparison map φ, and the kernel that opens up at
//! the critical rank — compared against the closed-form predictions.
//!
//! Run with `cargo run --example schur_weyl_oracle`.

use deligne_cat::algebra::annihilated_by_cups_caps;
use deligne_cat::classifier::{critical_rank, kernel_dim_at_threshold};
use deligne_cat::diagram::{enumerate_diagrams, Shape};
use deligne_cat::oracle::{kernel_generator, phi_kernel_basis, phi_rank, RepSpec};

fn main() {
    let grid = [
        ("O(3)", RepSpec::O { m: 3, n: 0 }),
        ("O(2)", RepSpec::O { m: 2, n: 0 }),
        ("Sp(2)", RepSpec::O { m: 0, n: 1 }),
        ("OSp(1|2)", RepSpec::O { m: 1, n: 1 }),
        ("Pe(1)", RepSpec::P { n: 1 }),
        ("S_4", RepSpec::S { t: 4 }),
    ];
    println!("spec        r  dim B_r  rank φ  kernel  predicted");
    for (name, spec) in &grid {
        let rc = critical_rank(spec);
        for r in 1..=rc.min(3) {
            let shape = Shape::plain(r, r);
            let dim = enumerate_diagrams(spec.flavor(), &shape).unwrap().len();
            let rank = phi_rank(spec, &shape, None).unwrap();
            let predicted = if r < rc {
                0
            } else {
                kernel_dim_at_threshold(spec, None).unwrap() as usize
            };
            println!(
                "{name:<10} {r:2}  {dim:7}  {rank:6}  {:6}  {predicted:9}",
                dim - rank
            );
            assert_eq!(dim - rank, predicted);
        }
    }

    // At the critical rank of Sp(2) the kernel is one-dimensional and its
    // canonical generator is an honest idempotent killed by all cups/caps.
    let sp2 = RepSpec::O { m: 0, n: 1 };
    let shape = Shape::plain(2, 2);
    let kernel = phi_kernel_basis(&sp2, &shape, None).unwrap();
    let f = kernel_generator(&sp2, &shape, None).unwrap();
    println!(
        "\nSp(2) at r = 2: kernel dim {}, generator has {} terms, cup/cap-annihilated: {}",
        kernel.len(),
        f.num_terms(),
        annihilated_by_cups_caps(&f).unwrap()
    );
}
