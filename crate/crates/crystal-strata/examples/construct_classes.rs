//! Construct the top shift classes for every tableau of weight `λ_b` in one
//! crystal, and show the resulting one-to-one correspondence.
//!
//! Run with `cargo run --example construct_classes -- [n] [m] [mu...]`,
//! defaulting to `n = 3`, `m = 4`, `mu = (2,2,0)`.

use std::collections::BTreeMap;

use crystal_strata::construct::construct_all;
use crystal_strata::crystal::generate_crystal;
use crystal_strata::lattice::Cocharacter;
use crystal_strata::stratum::{CocharTuple, SuperbasicData};

fn main() -> crystal_strata::Result<()> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer arguments"))
        .collect();
    let (n, m, mu) = if args.is_empty() {
        (3usize, 4usize, Cocharacter::new(vec![2, 2, 0]))
    } else {
        (
            args[0] as usize,
            args[1] as usize,
            Cocharacter::new(args[2..].to_vec()),
        )
    };

    let data = SuperbasicData::new(n, m)?;
    let crystal = generate_crystal(n, &mu)?;
    let lam_b = data.lambda_b();
    println!(
        "shape {mu}, slope {m}/{n}, lambda_b = {lam_b}: {} tableaux of that weight",
        crystal.weight_space(&lam_b).len()
    );

    let mut classes: BTreeMap<CocharTuple, String> = BTreeMap::new();
    for idx in crystal.weight_space(&lam_b) {
        let b = crystal.elements()[idx].clone();
        let report = construct_all(data.clone(), b.clone())?;
        println!("\nb = {b}");
        println!("  w(b) = {}", report.w_of_b.cycle_string());
        println!("  class representative: {:?}", report.eta_class);
        let previous = classes.insert(report.eta_class, b.to_string());
        assert!(previous.is_none(), "classes must be distinct per tableau");
    }
    println!(
        "\n{} tableaux -> {} distinct classes",
        classes.len(),
        classes.len()
    );
    Ok(())
}
