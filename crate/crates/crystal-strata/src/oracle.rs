//! Independent brute-force verifiers.
//!
//! Everything here recomputes a quantity produced elsewhere in the crate by
//! a different route: tableau counts by direct backtracking, top shift
//! classes by exhaustive search over flat tuples and starting vectors, the
//! conjugating set by a full scan of the symmetric group, and the word tuple
//! by an arithmetic recursion on the sorted values `i + n·λ(i)`.
//!
//! The searches are super-exponential in the worst case, so each entry point
//! takes an explicit [`ScaleGuard`] and refuses estimates beyond its limits.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use crate::construct::Construction;
use crate::crystal::{generate_crystal, project_to_highest, FlatTuple};
use crate::lattice::{Cocharacter, Permutation};
use crate::stratum::{fareastern_heights, CocharTuple, SuperbasicData};
use crate::{Error, Result};

/// Limits for the brute-force searches.
#[derive(Clone, Copy, Debug)]
pub struct ScaleGuard {
    /// Largest box count for crystal generation and tableau counting.
    pub max_boxes: usize,
    /// Largest `n` for which `n!` scans are attempted.
    pub max_factorial: usize,
    /// Largest number of (flat tuple, starting vector) pairs for the
    /// stratum enumeration.
    pub max_search: u64,
}

impl Default for ScaleGuard {
    fn default() -> Self {
        ScaleGuard {
            max_boxes: 14,
            max_factorial: 6,
            max_search: 100_000_000,
        }
    }
}

impl ScaleGuard {
    /// A guard with all limits lifted.
    pub fn unlimited() -> Self {
        ScaleGuard {
            max_boxes: usize::MAX,
            max_factorial: usize::MAX,
            max_search: u64::MAX,
        }
    }
}

/// Counts semistandard tableaux of the given shape and content by direct
/// backtracking over the cells in row-major order.
pub fn kostka(n: usize, shape: &Cocharacter, content: &Cocharacter) -> Result<u64> {
    if !shape.is_dominant() || shape.min_entry() < 0 {
        return Err(Error::Config(format!("shape must be a partition: {shape}")));
    }
    if shape.total() != content.total() {
        return Err(Error::Config(format!(
            "shape size {} differs from content size {}",
            shape.total(),
            content.total()
        )));
    }
    let rows: Vec<usize> = (1..=shape.rank())
        .map(|i| shape.entry(i) as usize)
        .filter(|&len| len > 0)
        .collect();
    if rows.len() > n {
        return Ok(0);
    }
    let mut remaining: Vec<i64> = (1..=content.rank().min(n))
        .map(|i| content.entry(i))
        .collect();
    remaining.resize(n, 0);
    if remaining.iter().any(|&c| c < 0) {
        return Ok(0);
    }
    let mut filling: Vec<Vec<usize>> = rows.iter().map(|&len| vec![0; len]).collect();
    fn rec(
        n: usize,
        rows: &[usize],
        filling: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<i64>,
        r: usize,
        c: usize,
    ) -> u64 {
        if r == rows.len() {
            return 1;
        }
        let (next_r, next_c) = if c + 1 < rows[r] {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let lo = {
            let left = if c > 0 { filling[r][c - 1] } else { 1 };
            let above = if r > 0 { filling[r - 1][c] + 1 } else { 1 };
            left.max(above)
        };
        let mut count = 0;
        for v in lo..=n {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            filling[r][c] = v;
            count += rec(n, rows, filling, remaining, next_r, next_c);
            remaining[v - 1] += 1;
        }
        filling[r][c] = 0;
        count
    }
    Ok(rec(n, &rows, &mut filling, &mut remaining, 0, 0))
}

/// Scans all `n!` permutations for solutions of `u⁻¹ τ^m u = w_b`.
pub fn upsilon_fullscan(
    w_b: &Permutation,
    data: &SuperbasicData,
    guard: &ScaleGuard,
) -> Result<Vec<Permutation>> {
    let n = data.n();
    if n > guard.max_factorial {
        return Err(Error::ScaleGuard {
            estimate: (1..=n as u64).product(),
            limit: (1..=guard.max_factorial as u64).product(),
        });
    }
    let tau_m = data.tau_power_m();
    let mut out: Vec<Permutation> = (1..=n)
        .permutations(n)
        .map(|images| Permutation::from_one_line(images).expect("permutation by construction"))
        .filter(|u| u.inverse().compose(&tau_m).compose(u) == *w_b)
        .collect();
    out.sort_by_key(|u| u.apply(1));
    Ok(out)
}

/// Recovers the word tuple of a top stratum from the arithmetic recursion on
/// `a_{j,i} = u_{λ_j}(i) + n·λ_j(u_{λ_j}(i))`: for each `i`,
/// `a_{j+1, w_j(i)} = a_{j,i} + n·λ_j^♭(i)`, wrapping at `j = d` with an
/// extra `−m`.
pub fn nie_words(tuple: &CocharTuple) -> Result<Vec<Permutation>> {
    let data = tuple.data();
    let n = data.n() as i64;
    let flat = tuple.flat_of().ok_or(Error::Unsolvable)?;
    let d = tuple.d();
    let a: Vec<Vec<i64>> = (0..d)
        .map(|j| {
            let lam = tuple.lambda(j);
            let u = lam.sorting_permutation();
            (1..=data.n())
                .map(|i| {
                    let ui = u.apply(i);
                    ui as i64 + n * lam.entry(ui)
                })
                .collect()
        })
        .collect();
    for row in &a {
        debug_assert!(
            row.windows(2).all(|w| w[0] > w[1]),
            "a-rows decrease strictly"
        );
    }
    let mut words = Vec::with_capacity(d);
    for j in 0..d {
        let next = &a[(j + 1) % d];
        let correction = if j + 1 == d { data.m() as i64 } else { 0 };
        let flat_j = flat.part_cochar(j);
        let mut images = Vec::with_capacity(d);
        for i in 1..=data.n() {
            let target = a[j][i - 1] + n * flat_j.entry(i) - correction;
            let pos = next
                .iter()
                .position(|&v| v == target)
                .ok_or(Error::Unsolvable)?;
            images.push(pos + 1);
        }
        words.push(Permutation::from_one_line(images).map_err(|_| Error::Unsolvable)?);
    }
    Ok(words)
}

/// One grid cell of the bijection census.
#[derive(Clone, Debug, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub m: usize,
    pub mu: Cocharacter,
    /// Tableaux of shape `mu` and content `λ_b`, counted by backtracking.
    pub kostka: u64,
    /// Distinct shift classes produced by the construction, one tableau at
    /// a time.
    pub classes_constructed: u64,
    /// Distinct shift classes found by exhaustive enumeration whose flat
    /// tuple projects into the shape-`mu` component.
    pub classes_bruteforce: u64,
    pub agree: bool,
}

/// Exhaustively enumerates canonical representatives of top shift classes
/// for the column decomposition of `mu`.
///
/// For every flat tuple summing to `λ_b` and every starting vector in
/// `[0, m+n]^n` with minimum entry zero, the remaining components are forced
/// by `λ_{l+1} = λ_l + u_{λ_l}(β_l)`; a candidate survives when the wrap
/// step closes up. The search box is re-run wider if any hit touches its
/// boundary, since the bound is empirical rather than proven.
pub fn enumerate_top_bruteforce(
    data: &SuperbasicData,
    mu: &Cocharacter,
    guard: &ScaleGuard,
) -> Result<Vec<CocharTuple>> {
    let n = data.n();
    let heights = fareastern_heights(mu)?;
    let lam_b = data.lambda_b();
    let flats = FlatTuple::enumerate_with_sum(n, &heights, &lam_b);
    let mut bound = (data.m() + n) as i64;
    loop {
        let volume = ((bound + 1) as u64).pow(n as u32);
        let estimate = flats.len() as u64 * volume;
        if estimate > guard.max_search {
            return Err(Error::ScaleGuard {
                estimate,
                limit: guard.max_search,
            });
        }
        let mut hits: BTreeSet<CocharTuple> = BTreeSet::new();
        let mut touched_boundary = false;
        let mut start = vec![0i64; n];
        'outer: loop {
            if start.contains(&0) {
                let lam1 = Cocharacter::new(start.clone());
                for flat in &flats {
                    if let Some(tuple) = propagate(data, mu, flat, &lam1) {
                        if lam1.max_entry() == bound {
                            touched_boundary = true;
                        }
                        let (canonical, _) = tuple.eta_class();
                        if !canonical.is_top() {
                            return Err(Error::CheckFailed(format!(
                                "enumerated tuple {canonical:?} fails the dimension count; \
                                 the defect normalization is wrong"
                            )));
                        }
                        hits.insert(canonical);
                    }
                }
            }
            // Odometer over [0, bound]^n.
            for pos in (0..n).rev() {
                if start[pos] < bound {
                    start[pos] += 1;
                    continue 'outer;
                }
                start[pos] = 0;
                if pos == 0 {
                    break 'outer;
                }
            }
        }
        if !touched_boundary {
            return Ok(hits.into_iter().collect());
        }
        bound += n as i64;
    }
}

/// Forces the tuple from its first component and flat coordinates; `None`
/// when the wrap-around step fails to close.
fn propagate(
    data: &SuperbasicData,
    mu: &Cocharacter,
    flat: &FlatTuple,
    lam1: &Cocharacter,
) -> Option<CocharTuple> {
    let d = flat.len();
    let mut lambdas = Vec::with_capacity(d);
    let mut current = lam1.clone();
    for l in 0..d {
        lambdas.push(current.clone());
        let step = current.sorting_permutation().act(&flat.part_cochar(l));
        current = current.add(&step);
    }
    // current is now λ_1 + Σ u(β) over all parts; closure needs b·λ_1.
    if current != data.b_act(lam1) {
        return None;
    }
    Some(CocharTuple::new(data, mu.clone(), lambdas).expect("propagated tuple is well-formed"))
}

/// Runs the three counts of one census cell and compares them.
pub fn census_row(
    data: &SuperbasicData,
    mu: &Cocharacter,
    guard: &ScaleGuard,
) -> Result<CensusRow> {
    let n = data.n();
    let boxes = mu.total().max(0) as u64;
    if boxes > guard.max_boxes as u64 {
        return Err(Error::ScaleGuard {
            estimate: boxes,
            limit: guard.max_boxes as u64,
        });
    }
    let lam_b = data.lambda_b();
    let kostka_count = kostka(n, mu, &lam_b)?;
    let crystal = generate_crystal(n, mu)?;
    let weight_space = crystal.weight_space(&lam_b);
    let mut constructed: BTreeSet<CocharTuple> = BTreeSet::new();
    for &idx in &weight_space {
        let report = Construction::new(data.clone(), crystal.elements()[idx].clone())?.report()?;
        constructed.insert(report.eta_class);
    }
    // The class-to-tableau map must be injective.
    if constructed.len() != weight_space.len() {
        return Err(Error::CheckFailed(format!(
            "constructed classes collapse: {} classes for {} tableaux",
            constructed.len(),
            weight_space.len()
        )));
    }
    let brute = enumerate_top_bruteforce(data, mu, guard)?;
    let mut brute_mu = 0u64;
    for tuple in &brute {
        let flat = tuple
            .flat_of()
            .expect("enumerated tuples have flat coordinates");
        let (shape, _) = project_to_highest(&flat.to_tensor());
        if &shape == mu {
            brute_mu += 1;
        }
    }
    let counts = [
        kostka_count,
        weight_space.len() as u64,
        constructed.len() as u64,
        brute_mu,
    ];
    Ok(CensusRow {
        n,
        m: data.m(),
        mu: mu.clone(),
        kostka: kostka_count,
        classes_constructed: constructed.len() as u64,
        classes_bruteforce: brute_mu,
        agree: counts.iter().all(|&c| c == counts[0]),
    })
}
