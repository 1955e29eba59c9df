//! Full pipeline walkthrough at `n = 5`, `m = 12`, `mu = (4,3,3,2,0)`:
//! from one tableau of weight `λ_b` to its top cocharacter tuples.
//!
//! Run with `cargo run --example walkthrough`.

use crystal_strata::construct::Construction;
use crystal_strata::crystal::{CrystalElement, Tableau};
use crystal_strata::oracle::nie_words;
use crystal_strata::stratum::SuperbasicData;

fn main() -> crystal_strata::Result<()> {
    let data = SuperbasicData::new(5, 12)?;
    println!("superbasic slope 12/5:");
    println!("  lambda_b     = {}", data.lambda_b());
    println!("  lambda_b^op  = {}", data.lambda_b_opposite());
    println!(
        "  breakpoints  = i_1 = {}, i_2 = {}",
        data.breakpoint(1),
        data.breakpoint(2)
    );

    let b = Tableau::new(
        5,
        vec![vec![1, 1, 3, 3], vec![2, 2, 4], vec![3, 4, 5], vec![5, 5]],
    )?;
    println!("\ntableau b = {b} with weight {}", b.weight());
    println!("  column reading  = {:?}", b.column_reading());
    println!("  factorization   = {:?}", b.factorize());

    // Signatures drive the raising/lowering operators.
    for i in [2, 4] {
        let sig = b.column_reading().signature(i);
        println!(
            "  signature i={i}: reduced {:<4} epsilon {} phi {}",
            sig.reduced, sig.epsilon, sig.phi
        );
    }
    println!("  e_2 b = {}", b.e(2).expect("epsilon_2 > 0"));
    println!("  f_4 b = {:?} (phi_4 = 0)", b.f(4).map(|t| t.to_string()));

    // The raising path to b^op yields the word tuple and Coxeter element.
    let construction = Construction::new(data.clone(), b)?;
    println!("\nraising to b^op = {}", construction.b_op());
    for (j, w) in construction.w_tuple().iter().enumerate() {
        println!("  w_{} = {} {}", j + 1, w, w.cycle_string());
    }
    println!(
        "  w(b) = {} {}",
        construction.w_of_b(),
        construction.w_of_b().cycle_string()
    );

    // The n elements conjugating the shift cycle to w(b), and their tuples.
    println!("\nconjugating set and xi data:");
    for u in construction.upsilon() {
        let xi = construction.xi_vector_for(u);
        println!(
            "  u = {:<12} xi(u^-1 b^-) = {}   u.xi = {}",
            u.cycle_string(),
            xi,
            u.act(&xi)
        );
    }

    let report = construction.report()?;
    println!("\ncanonical class representative:");
    for (j, lam) in report.eta_class.lambdas().iter().enumerate() {
        println!("  xi_{} = {lam}", j + 1);
    }
    let tuple = &report.eta_class;
    println!("  |R| = {} = top dimension", tuple.r_set().len());
    let closure = data.b_act(tuple.lambda(0)).sub(tuple.lambda(tuple.d() - 1));
    println!("  b.xi_1 - xi_d = {closure}");

    // Cross-check the word tuple through the arithmetic recursion.
    let recovered = nie_words(tuple)?;
    assert_eq!(recovered, report.w_tuple);
    println!("  word recursion recovers (w_1..w_d): ok");

    // All n tuples are shifts of the canonical representative.
    println!("\nshift chain of first components:");
    for tuple in report.eta_ordered_tuples() {
        println!("  {}", tuple.lambda(0));
    }
    Ok(())
}
