//! The periplectic Brauer algebra: signed structure constants solved through
//! a faithful matrix realization, independence of the realization parameter,
//! and the vanishing of loops.
//!
//! Run with `cargo run --example periplectic`.

use deligne_cat::algebra::{multiply_periplectic, Morphism};
use deligne_cat::diagram::{enumerate_diagrams, Flavor, Shape};
use deligne_cat::oracle::{
    periplectic_default_n, periplectic_structure_constants, phi_rank, RepSpec,
};
use deligne_cat::scalar;
use std::collections::BTreeMap;

fn main() {
    // Products of rank-2 diagrams: same pictures as the Brauer algebra, but
    // with signs, and with loops evaluated at zero.
    let r = 2;
    let n = periplectic_default_n(r);
    let table = periplectic_structure_constants(r, n).unwrap();
    let shape = Shape::plain(r, r);
    let basis = enumerate_diagrams(Flavor::Periplectic, &shape).unwrap();
    println!("A_{r} basis ({} diagrams) with realization n = {n}:", basis.len());
    for (i, d) in basis.iter().enumerate() {
        println!("  [{i}] {d}");
    }
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            let c = table.product(i, j).unwrap();
            let text = if c.is_empty() {
                "0".to_string()
            } else {
                c.iter().map(|(k, v)| format!("{v}·[{k}]")).collect::<Vec<_>>().join(" + ")
            };
            println!("  [{i}]·[{j}] = {text}");
        }
    }

    // The constants do not depend on which faithful realization solves them.
    let t2 = periplectic_structure_constants(3, 2).unwrap();
    let t3 = periplectic_structure_constants(3, 3).unwrap();
    assert_eq!(t2.products, t3.products);
    println!("\nrank-3 constants agree between n = 2 and n = 3");

    // Signed multiplication through the table: the hook squares to zero
    // (its Brauer analogue squares to δ·e, and δ = 0 here).
    let params = RepSpec::P { n }.params();
    let index: BTreeMap<_, _> = basis.iter().cloned().zip(0..).collect();
    let hook = basis
        .iter()
        .find(|d| d.diagram_stats().unwrap().0 == 0)
        .unwrap();
    let m = Morphism::from_diagram(params, hook.clone(), scalar(1));
    let sq = multiply_periplectic(&m, &m, &basis, &index, &table).unwrap();
    println!("hook² = 0: {}", sq.is_zero());

    // The kernel of the realization map opens at the critical rank 3 of
    // Pe(1), with the predicted dimension 5.
    let spec = RepSpec::P { n: 1 };
    for rr in 1..=3 {
        let shape = Shape::plain(rr, rr);
        let dim = enumerate_diagrams(Flavor::Periplectic, &shape).unwrap().len();
        let rank = phi_rank(&spec, &shape, None).unwrap();
        println!("Pe(1) r={rr}: dim {dim:2}, rank {rank:2}, kernel {}", dim - rank);
    }
}
