//! Bijection census over a small coprime grid: tableau counts, constructed
//! classes, and brute-force classes must agree cell by cell.
//!
//! Run with `cargo run --example census -- [max_n] [max_m]`, defaulting to
//! the grid `n <= 3`, `m <= 5`.

use crystal_strata::cli::{cmd_census, Format};
use crystal_strata::oracle::ScaleGuard;

fn main() -> crystal_strata::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer arguments"))
        .collect();
    let (max_n, max_m) = match args.as_slice() {
        [] => (3, 5),
        [n, m] => (*n, *m),
        _ => panic!("usage: census [max_n max_m]"),
    };
    let out = cmd_census(max_n, max_m, Format::Tsv, &ScaleGuard::default())?;
    print!("{}", out.text);
    assert_eq!(out.failures, 0, "census cells disagree");
    Ok(())
}
