//! Cross-check the construction against the exhaustive stratum enumeration:
//! the brute-force search over flat tuples and starting vectors finds
//! exactly the classes the construction produces.
//!
//! Run with `cargo run --example brute_force`.

use std::collections::BTreeSet;

use crystal_strata::construct::construct_all;
use crystal_strata::crystal::{generate_crystal, project_to_highest};
use crystal_strata::lattice::Cocharacter;
use crystal_strata::oracle::{enumerate_top_bruteforce, ScaleGuard};
use crystal_strata::stratum::SuperbasicData;

fn main() -> crystal_strata::Result<()> {
    let data = SuperbasicData::new(3, 5)?;
    let mu = Cocharacter::new(vec![3, 2, 0]);
    let guard = ScaleGuard::default();

    let classes = enumerate_top_bruteforce(&data, &mu, &guard)?;
    println!(
        "exhaustive search at shape {mu}, slope 5/3: {} top classes in total",
        classes.len()
    );

    // Split by the component their flat coordinates project into.
    let mut constructed = BTreeSet::new();
    let crystal = generate_crystal(3, &mu)?;
    for idx in crystal.weight_space(&data.lambda_b()) {
        let report = construct_all(data.clone(), crystal.elements()[idx].clone())?;
        constructed.insert(report.eta_class);
    }
    let mut in_mu = BTreeSet::new();
    for class in &classes {
        let flat = class.flat_of().expect("top classes have flat coordinates");
        let (shape, _) = project_to_highest(&flat.to_tensor());
        println!("  class {class:?} projects to shape {shape}");
        if shape == mu {
            in_mu.insert(class.clone());
        }
    }
    assert_eq!(in_mu, constructed, "brute force and construction disagree");
    println!(
        "{} classes project to {mu} and match the construction exactly",
        in_mu.len()
    );
    Ok(())
}
