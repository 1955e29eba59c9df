//! Generate the crystal of a shape and print its lowering graph.
//!
//! Run with `cargo run --example crystal_graph -- [n] [mu...]`, defaulting
//! to `n = 3`, `mu = (2,1,0)`.

use crystal_strata::crystal::generate_crystal;
use crystal_strata::lattice::Cocharacter;

fn main() -> crystal_strata::Result<()> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer arguments"))
        .collect();
    let (n, mu) = if args.is_empty() {
        (3, Cocharacter::new(vec![2, 1, 0]))
    } else {
        (args[0] as usize, Cocharacter::new(args[1..].to_vec()))
    };

    let crystal = generate_crystal(n, &mu)?;
    println!(
        "crystal of shape {mu} at rank {n}: {} elements",
        crystal.len()
    );
    for (idx, t) in crystal.elements().iter().enumerate() {
        println!("  [{idx:>3}] {t:<16} wt {}", t.weight());
    }
    println!("lowering edges:");
    for edge in crystal.edges() {
        println!("  {:>3} --f_{}--> {:>3}", edge.from, edge.i, edge.to);
    }

    // Weight spaces partition the crystal.
    let mut total = 0;
    let mut seen = std::collections::BTreeSet::new();
    for t in crystal.elements() {
        if seen.insert(t.weight()) {
            let space = crystal.weight_space(&t.weight());
            total += space.len();
        }
    }
    assert_eq!(total, crystal.len());
    println!("{} distinct weights", seen.len());
    Ok(())
}
