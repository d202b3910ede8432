//! Diagram calculus: composition with loop counting, tensor products,
//! reflection, planarity, slice decomposition and enumeration counts.
//!
//! Run with `cargo run --example diagram_calculus`.

use deligne_cat::diagram::{
    enumerate_diagrams, recompose, slice_decomposition, Diagram, Flavor, Shape,
};

fn main() {
    // The hook e = cup∘cap in the Brauer picture: composing it with itself
    // closes one loop, which the algebra layer later evaluates at δ.
    let e = Diagram::hook_at(Flavor::Brauer, 2, 0);
    let (ee, loops) = Diagram::compose(&e, &e).unwrap();
    println!("e∘e = {ee} with {loops} closed loop(s)");

    // Tensor and reflection.
    let s = Diagram::crossing_at(Flavor::Brauer, 2, 0);
    let t = Diagram::tensor(&s, &e).unwrap();
    println!("s⊗e = {t}");
    println!("(s⊗e)* = {}", t.star());
    println!("s planar: {}, e planar: {}", s.is_planar(), e.is_planar());

    // Every diagram factors into caps, then cups, then crossings; the slice
    // word recomposes to the diagram with no loops.
    let word = slice_decomposition(&t).unwrap();
    println!("slice word of s⊗e has {} generators", word.len());
    let (back, loops) = recompose(Flavor::Brauer, &t.shape().source, &word).unwrap();
    assert_eq!(back, t);
    assert_eq!(loops, 0);

    // Enumeration matches the classical counts: (2r−1)!! Brauer diagrams,
    // Catalan-many Temperley-Lieb diagrams, Bell-many partition diagrams.
    println!("\n r  (2r−1)!!  Catalan  Bell(2r)");
    for r in 1..=4 {
        let shape = Shape::plain(r, r);
        let brauer = enumerate_diagrams(Flavor::Brauer, &shape).unwrap().len();
        let tl = enumerate_diagrams(Flavor::TemperleyLieb, &shape).unwrap().len();
        let pc = enumerate_diagrams(Flavor::PartitionCat, &shape).unwrap().len();
        println!("{r:2}  {brauer:8}  {tl:7}  {pc:8}");
    }
}
