//! A walk through the tensor-ideal classification: parameter tables, the
//! rectangle labels ν^(j), membership predicates, boundary generators and
//! Hom-space predictions.
//!
//! Run with `cargo run --example ideal_classifier`.

use deligne_cat::classifier::{
    hom_unit_dim, in_ideal, lambda_set, matches_nu_pattern, nu, params, predicted_hom_j,
    weight_diagram, Family, ObjectLabel,
};
use deligne_cat::partition::{partitions_of, Partition};

fn main() {
    // The chain J_0 ⊋ J_1 ⊋ J_2 ⊋ ⋯ for the orthosymplectic family at δ=−1.
    let fam = Family::O { delta: -1 };
    println!("O at δ = −1:");
    for j in 1..=3 {
        let t = params(fam, j).unwrap();
        let v = nu(fam, j).unwrap();
        let gens = lambda_set(fam, j).unwrap();
        println!(
            "  j={j}: (m,n,r) = ({},{},{}), ν = {v}, Λ = {}",
            t.m,
            t.n,
            t.r,
            gens.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
        );
    }

    // Membership is a hook condition; the generators sit exactly at the
    // boundary between consecutive ideals.
    for label in lambda_set(fam, 1).unwrap() {
        println!(
            "  {label}: in J_1 = {}, in J_2 = {}",
            in_ideal(fam, 1, &label).unwrap(),
            in_ideal(fam, 2, &label).unwrap()
        );
    }

    // The first nonzero Hom space inside J_1 appears at |λ|+|μ| = 2r_1 and is
    // detected by rectangle duality.
    let l = ObjectLabel::Single(Partition::new(vec![3, 1]).unwrap());
    println!(
        "  predicted dim J_1(R(3,1), R(3,1)) = {}",
        predicted_hom_j(fam, 1, &l, &l).unwrap()
    );

    // For positive even δ the predicate "λ ∈ Υ" can be read off a weight
    // diagram: the pattern ∘^s ∧^{2j} ∨^… characterizes the ν^(j).
    println!("\nweight diagrams at δ = 2:");
    for size in [0, 6] {
        for lambda in partitions_of(size) {
            let seq = weight_diagram(2, &lambda, size + 4).unwrap();
            let picture: String = seq.iter().map(|s| s.to_string()).collect();
            let matches = matches_nu_pattern(&seq, 1);
            let dim = hom_unit_dim(
                Family::O { delta: 2 },
                &ObjectLabel::Single(lambda.clone()),
            )
            .unwrap();
            if matches || dim == 1 {
                println!("  {lambda:>10}: {picture}  Hom(1,R(λ)) = {dim}");
            }
        }
    }
}
