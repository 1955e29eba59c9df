//! The signature rule in action: signatures, raising/lowering operators,
//! the Weyl group action, and projection to the highest-weight component.
//!
//! Run with `cargo run --example kashiwara_operators`.

use crystal_strata::crystal::{
    conjugate_with_weight, project_to_highest, weyl_act, CrystalElement, Tableau, TensorElement,
};
use crystal_strata::lattice::Permutation;

fn main() -> crystal_strata::Result<()> {
    let t = Tableau::new(4, vec![vec![1, 1, 2, 4], vec![2, 3, 3], vec![4]])?;
    println!("tableau {t}, weight {}", t.weight());
    println!("column reading: {:?}", t.column_reading());

    for i in 1..4 {
        let sig = t.column_reading().signature(i);
        println!(
            "  i = {i}: reduced {:<6} epsilon {} phi {}  e -> {:<14} f -> {}",
            sig.reduced,
            sig.epsilon,
            sig.phi,
            t.e(i).map_or("null".into(), |x| x.to_string()),
            t.f(i).map_or("null".into(), |x| x.to_string()),
        );
    }

    // The Weyl action permutes weights; equal-weight routes agree.
    let s2 = Permutation::simple(4, 2);
    let moved = weyl_act(&s2, &t);
    println!("s_2 . t = {moved}, weight {}", moved.weight());
    let conj = conjugate_with_weight(&t, &moved.weight())?;
    assert_eq!(conj, moved);

    // Projection classifies arbitrary words.
    let word = TensorElement::new(4, vec![3, 1, 4, 2, 2])?;
    let (shape, element) = project_to_highest(&word);
    println!(
        "word {:?} projects to shape {shape}, element {element}",
        word.boxes()
    );
    assert_eq!(element.weight(), word.weight());
    Ok(())
}
