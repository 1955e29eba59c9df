//! Command drivers behind the `crystal-strata` binary.
//!
//! Each driver is a pure function from a validated [`RunConfig`] to a text
//! document plus a failure count, so the binary stays a thin argument
//! parser and the drivers stay testable. Output is deterministic for a
//! fixed config: element orders come from the crystal, never from hash
//! iteration.
//!
//! Exit code contract: 0 all checks pass, 1 at least one check failed,
//! 2 configuration error (reported before any computation).

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::construct::{construct_all, is_allowed, Construction};
use crate::crystal::{
    generate_crystal, project_to_highest, tensor_rule, CrystalElement, FlatTuple, Tableau,
    TensorElement,
};
use crate::lattice::{Cocharacter, Permutation};
use crate::oracle::{census_row, nie_words, upsilon_fullscan, ScaleGuard};
use crate::stratum::{fareastern_heights, SuperbasicData};
use crate::{Error, Result, SCHEMA_VERSION};

/// Output format selector.
#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Tsv,
}

/// A validated command configuration.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub data: SuperbasicData,
    pub mu: Cocharacter,
    /// Central shift applied to reach `mu(n) = 0`; echoed in output.
    pub shift: i64,
    /// `m` as supplied, before the central shift.
    pub m_input: usize,
    pub format: Format,
    pub guard: ScaleGuard,
    pub seed: u64,
}

impl RunConfig {
    /// Validates `(n, m, mu)` and normalizes `mu(n)` to zero by a central
    /// shift, adjusting `m` accordingly.
    pub fn new(
        n: usize,
        m: usize,
        mu: Vec<i64>,
        format: Format,
        guard: ScaleGuard,
        seed: u64,
    ) -> Result<Self> {
        if mu.len() != n {
            return Err(Error::Config(format!(
                "mu must have n = {n} entries, got {}",
                mu.len()
            )));
        }
        let mu = Cocharacter::new(mu);
        if !mu.is_dominant() {
            return Err(Error::Config(format!("mu must be weakly decreasing: {mu}")));
        }
        if mu.total() != m as i64 {
            return Err(Error::Config(format!(
                "the entries of mu must sum to m = {m}, got {}",
                mu.total()
            )));
        }
        let c = mu.entry(n);
        let shifted_m = m as i64 - n as i64 * c;
        if shifted_m <= 0 {
            return Err(Error::Config(
                "mu is central; the normalized slope is not positive".into(),
            ));
        }
        let data = SuperbasicData::new(n, shifted_m as usize)?;
        Ok(RunConfig {
            data,
            mu: mu.shift_central(-c),
            shift: -c,
            m_input: m,
            format,
            guard,
            seed,
        })
    }
}

/// Text output of a driver plus the number of failed checks.
#[derive(Clone, Debug)]
pub struct CommandOutput {
    pub text: String,
    pub failures: usize,
}

// ---------------------------------------------------------------------------
// example
// ---------------------------------------------------------------------------

/// Expected values for the built-in worked example (`n = 5`, `m = 12`,
/// `mu = (4,3,3,2,0)`).
#[derive(Clone, Debug)]
pub struct GoldenFixture {
    pub n: usize,
    pub m: usize,
    pub mu: Vec<i64>,
    pub b_rows: Vec<Vec<usize>>,
    pub lambda_b: Vec<i64>,
    pub lambda_b_op: Vec<i64>,
    pub mu_heights: Vec<usize>,
    pub fe_one_sets: Vec<Vec<usize>>,
    /// `(reduced word, epsilon, phi)` of the signatures at indices 2 and 4.
    pub signature_2: (String, usize, usize),
    pub signature_4: (String, usize, usize),
    pub e2_rows: Vec<Vec<usize>>,
    pub f4_is_null: bool,
    pub w_tuple: Vec<Vec<usize>>,
    pub w_of_b: Vec<usize>,
    /// Ordered by the image of 1.
    pub upsilon: Vec<Vec<usize>>,
    /// `ξ(u⁻¹b⁻)` in the order of `upsilon`.
    pub xi_vectors: Vec<Vec<i64>>,
    /// `u·ξ(u⁻¹b⁻)` in the order of `upsilon`.
    pub u_xi: Vec<Vec<i64>>,
    /// Pairs `(a, b)` with `u_xi[a] = η(u_xi[b])`.
    pub eta_chain: Vec<(usize, usize)>,
    /// Which member of `upsilon` the full tuple below belongs to.
    pub xi_upsilon_index: usize,
    pub xi_tuple: Vec<Vec<i64>>,
    /// Sorting elements of the tuple components.
    pub xi_sorting: Vec<Vec<usize>>,
    pub closure: Vec<i64>,
    pub r_set_size: usize,
}

/// The embedded fixture.
pub fn golden_fixture() -> GoldenFixture {
    GoldenFixture {
        n: 5,
        m: 12,
        mu: vec![4, 3, 3, 2, 0],
        b_rows: vec![vec![1, 1, 3, 3], vec![2, 2, 4], vec![3, 4, 5], vec![5, 5]],
        lambda_b: vec![2, 2, 3, 2, 3],
        lambda_b_op: vec![3, 2, 3, 2, 2],
        mu_heights: vec![1, 3, 4, 4],
        fe_one_sets: vec![vec![3], vec![3, 4, 5], vec![1, 2, 4, 5], vec![1, 2, 3, 5]],
        signature_2: ("--+".into(), 2, 1),
        signature_4: ("-".into(), 1, 0),
        e2_rows: vec![vec![1, 1, 2, 3], vec![2, 2, 4], vec![3, 4, 5], vec![5, 5]],
        f4_is_null: true,
        w_tuple: vec![
            vec![1, 2, 3, 4, 5],
            vec![2, 3, 1, 4, 5],
            vec![1, 2, 4, 3, 5],
            vec![1, 2, 3, 5, 4],
        ],
        w_of_b: vec![3, 1, 4, 5, 2],
        upsilon: vec![
            vec![1, 4, 3, 5, 2], // (2 4 5)
            vec![2, 5, 4, 1, 3], // (1 2 5 3 4)
            vec![3, 1, 5, 2, 4], // (1 3 5 4 2)
            vec![4, 2, 1, 3, 5], // (1 4 3)
            vec![5, 3, 2, 4, 1], // (1 5)(2 3)
        ],
        xi_vectors: vec![
            vec![3, 2, 1, 0, 0],
            vec![3, 2, 1, 1, 0],
            vec![3, 3, 1, 1, 0],
            vec![3, 3, 2, 1, 0],
            vec![2, 2, 1, 0, 0],
        ],
        u_xi: vec![
            vec![3, 0, 1, 2, 0],
            vec![1, 3, 0, 1, 2],
            vec![3, 1, 3, 0, 1],
            vec![2, 3, 1, 3, 0],
            vec![0, 1, 2, 0, 2],
        ],
        eta_chain: vec![(0, 4), (1, 0), (2, 1), (3, 2)],
        xi_upsilon_index: 4,
        xi_tuple: vec![
            vec![0, 1, 2, 0, 2],
            vec![0, 2, 2, 0, 2],
            vec![1, 3, 2, 1, 2],
            vec![2, 4, 2, 2, 3],
        ],
        xi_sorting: vec![
            vec![5, 3, 2, 4, 1],
            vec![5, 3, 2, 4, 1],
            vec![2, 5, 3, 4, 1],
            vec![2, 5, 4, 3, 1],
        ],
        closure: vec![1, 1, 0, 1, 1],
        r_set_size: 7,
    }
}

/// JSON document of the example run; field names are frozen (schema v1).
#[derive(Clone, Debug, Serialize)]
pub struct GoldenReport {
    pub schema_version: &'static str,
    pub n: usize,
    pub m: usize,
    pub mu: Vec<i64>,
    pub b: Tableau,
    pub lambda_b: Cocharacter,
    pub lambda_b_op: Cocharacter,
    pub mu_heights: Vec<usize>,
    pub fe: FlatTuple,
    pub signature_2: (String, usize, usize),
    pub signature_4: (String, usize, usize),
    pub e2: Tableau,
    pub f4_null: bool,
    pub w_tuple: Vec<Permutation>,
    pub w_of_b: Permutation,
    pub upsilon: Vec<Permutation>,
    pub xi_vectors: Vec<Cocharacter>,
    pub u_xi: Vec<Cocharacter>,
    pub eta_chain: Vec<(usize, usize)>,
    pub xi_tuple: Vec<Cocharacter>,
    pub xi_sorting: Vec<Permutation>,
    pub closure: Cocharacter,
    /// Triples `[l, i, j]`, all 1-based.
    pub r_set: Vec<(usize, usize, usize)>,
    pub r_set_size: usize,
    pub diffs: Vec<String>,
    pub pass: bool,
}

/// Runs the worked example against a fixture, recording every divergence.
pub fn run_example_against(fixture: &GoldenFixture) -> Result<GoldenReport> {
    let mut diffs: Vec<String> = Vec::new();
    let mut check = |name: &str, ok: bool| {
        if !ok {
            diffs.push(name.to_string());
        }
    };

    let data = SuperbasicData::new(fixture.n, fixture.m)?;
    let mu = Cocharacter::new(fixture.mu.clone());
    let b = Tableau::new(fixture.n, fixture.b_rows.clone())?;

    let lambda_b = data.lambda_b();
    check("lambda_b", lambda_b.as_slice() == &fixture.lambda_b[..]);
    let lambda_b_op = data.lambda_b_opposite();
    check(
        "lambda_b_op",
        lambda_b_op.as_slice() == &fixture.lambda_b_op[..],
    );
    let mu_heights = fareastern_heights(&mu)?;
    check("mu_heights", mu_heights == fixture.mu_heights);

    let fe = b.factorize();
    check(
        "fe",
        (0..fe.len()).map(|l| fe.one_set(l)).collect::<Vec<_>>() == fixture.fe_one_sets,
    );

    let word = b.column_reading();
    let sig2 = word.signature(2);
    check(
        "signature_2",
        (sig2.reduced.as_str(), sig2.epsilon, sig2.phi)
            == (
                fixture.signature_2.0.as_str(),
                fixture.signature_2.1,
                fixture.signature_2.2,
            ),
    );
    let sig4 = word.signature(4);
    check(
        "signature_4",
        (sig4.reduced.as_str(), sig4.epsilon, sig4.phi)
            == (
                fixture.signature_4.0.as_str(),
                fixture.signature_4.1,
                fixture.signature_4.2,
            ),
    );
    let e2 = b
        .e(2)
        .ok_or_else(|| Error::CheckFailed("e_2 vanished".into()))?;
    check("e2", e2.rows() == &fixture.e2_rows[..]);
    check("f4_null", b.f(4).is_none() == fixture.f4_is_null);

    let construction = Construction::new(data.clone(), b.clone())?;
    check(
        "w_tuple",
        construction
            .w_tuple()
            .iter()
            .map(|w| w.one_line().to_vec())
            .collect::<Vec<_>>()
            == fixture.w_tuple,
    );
    check(
        "w_of_b",
        construction.w_of_b().one_line() == &fixture.w_of_b[..],
    );
    check(
        "upsilon",
        construction
            .upsilon()
            .iter()
            .map(|u| u.one_line().to_vec())
            .collect::<Vec<_>>()
            == fixture.upsilon,
    );

    let xi_vectors: Vec<Cocharacter> = construction
        .upsilon()
        .iter()
        .map(|u| construction.xi_vector_for(u))
        .collect();
    check(
        "xi_vectors",
        xi_vectors
            .iter()
            .map(|v| v.as_slice().to_vec())
            .collect::<Vec<_>>()
            == fixture.xi_vectors,
    );
    let u_xi: Vec<Cocharacter> = construction
        .upsilon()
        .iter()
        .zip(&xi_vectors)
        .map(|(u, v)| u.act(v))
        .collect();
    check(
        "u_xi",
        u_xi.iter()
            .map(|v| v.as_slice().to_vec())
            .collect::<Vec<_>>()
            == fixture.u_xi,
    );
    check(
        "eta_chain",
        fixture
            .eta_chain
            .iter()
            .all(|&(a, src)| u_xi[a] == u_xi[src].eta_shift(1)),
    );

    let u = &construction.upsilon()[fixture.xi_upsilon_index];
    let tuple = construction.xi_tuple(u)?;
    check(
        "xi_tuple",
        tuple
            .lambdas()
            .iter()
            .map(|v| v.as_slice().to_vec())
            .collect::<Vec<_>>()
            == fixture.xi_tuple,
    );
    let xi_sorting: Vec<Permutation> = tuple
        .lambdas()
        .iter()
        .map(Cocharacter::sorting_permutation)
        .collect();
    check(
        "xi_sorting",
        xi_sorting
            .iter()
            .map(|w| w.one_line().to_vec())
            .collect::<Vec<_>>()
            == fixture.xi_sorting,
    );
    let closure = data.b_act(tuple.lambda(0)).sub(tuple.lambda(tuple.d() - 1));
    check("closure", closure.as_slice() == &fixture.closure[..]);
    let r_set = tuple.r_set();
    check("r_set_size", r_set.len() == fixture.r_set_size);
    check("is_top", tuple.is_top());

    let pass = diffs.is_empty();
    Ok(GoldenReport {
        schema_version: SCHEMA_VERSION,
        n: fixture.n,
        m: fixture.m,
        mu: fixture.mu.clone(),
        b,
        lambda_b,
        lambda_b_op,
        mu_heights,
        fe,
        signature_2: (sig2.reduced, sig2.epsilon, sig2.phi),
        signature_4: (sig4.reduced, sig4.epsilon, sig4.phi),
        e2,
        f4_null: fixture.f4_is_null,
        w_tuple: construction.w_tuple().to_vec(),
        w_of_b: construction.w_of_b().clone(),
        upsilon: construction.upsilon().to_vec(),
        xi_vectors,
        u_xi,
        eta_chain: fixture.eta_chain.clone(),
        xi_tuple: tuple.lambdas().to_vec(),
        xi_sorting,
        closure,
        r_set_size: r_set.len(),
        r_set,
        diffs,
        pass,
    })
}

/// `example` driver: run the embedded fixture and render the outcome.
pub fn cmd_example(format: Format) -> Result<CommandOutput> {
    let report = run_example_against(&golden_fixture())?;
    let failures = report.diffs.len();
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes"),
        _ => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "worked example: n = {}, m = {}, mu = {}",
                report.n,
                report.m,
                Cocharacter::new(report.mu.clone())
            );
            let _ = writeln!(out, "  b           = {}", report.b);
            let _ = writeln!(out, "  lambda_b    = {}", report.lambda_b);
            let _ = writeln!(out, "  lambda_b_op = {}", report.lambda_b_op);
            let _ = writeln!(out, "  fe          = {:?}", report.fe);
            let _ = writeln!(
                out,
                "  signature 2 = {} (epsilon {}, phi {})",
                report.signature_2.0, report.signature_2.1, report.signature_2.2
            );
            let _ = writeln!(
                out,
                "  signature 4 = {} (epsilon {}, phi {})",
                report.signature_4.0, report.signature_4.1, report.signature_4.2
            );
            let _ = writeln!(out, "  e_2 b       = {}", report.e2);
            let _ = writeln!(out, "  f_4 b       = null");
            for (j, w) in report.w_tuple.iter().enumerate() {
                let _ = writeln!(out, "  w_{}        = {} {}", j + 1, w, w.cycle_string());
            }
            let _ = writeln!(
                out,
                "  w(b)        = {} {}",
                report.w_of_b,
                report.w_of_b.cycle_string()
            );
            for (u, v) in report.upsilon.iter().zip(&report.u_xi) {
                let _ = writeln!(out, "  u = {:<12} u.xi(u^-1 b^-) = {}", u.cycle_string(), v);
            }
            let u = &report.upsilon[golden_fixture().xi_upsilon_index];
            let _ = writeln!(out, "  xi tuple at u = {}:", u.cycle_string());
            for (j, lam) in report.xi_tuple.iter().enumerate() {
                let _ = writeln!(out, "    xi_{} = {}", j + 1, lam);
            }
            let _ = writeln!(out, "  closure     = {}", report.closure);
            let _ = writeln!(out, "  |R|         = {}", report.r_set_size);
            if report.pass {
                let _ = writeln!(out, "PASS: 0 diffs");
            } else {
                let _ = writeln!(
                    out,
                    "FAIL: diverging quantities: {}",
                    report.diffs.join(", ")
                );
            }
            out
        }
    };
    Ok(CommandOutput { text, failures })
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

/// `construct` driver: one report per tableau of weight `λ_b` in `B_mu`.
pub fn cmd_construct(config: &RunConfig) -> Result<CommandOutput> {
    guard_boxes(config)?;
    let crystal = generate_crystal(config.data.n(), &config.mu)?;
    let lam_b = config.data.lambda_b();
    let indices = crystal.weight_space(&lam_b);
    let mut text = String::new();
    match config.format {
        Format::Json => {
            let header = serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "n": config.data.n(),
                "m": config.data.m(),
                "m_input": config.m_input,
                "mu": config.mu,
                "shift": config.shift,
                "count": indices.len(),
            });
            let _ = writeln!(text, "{header}");
            for &idx in &indices {
                let report = construct_all(config.data.clone(), crystal.elements()[idx].clone())?;
                let _ = writeln!(
                    text,
                    "{}",
                    serde_json::to_string(&report).expect("serializes")
                );
            }
        }
        _ => {
            let _ = writeln!(
                text,
                "n = {}, m = {}, mu = {} (shift {}), |B_mu(lambda_b)| = {}",
                config.data.n(),
                config.data.m(),
                config.mu,
                config.shift,
                indices.len()
            );
            for &idx in &indices {
                let report = construct_all(config.data.clone(), crystal.elements()[idx].clone())?;
                let _ = writeln!(text, "b = {}", report.b);
                let _ = writeln!(text, "  fe   = {:?}", report.fe);
                let words: Vec<String> = report.w_tuple.iter().map(|w| w.cycle_string()).collect();
                let _ = writeln!(text, "  w    = [{}]", words.join(", "));
                let _ = writeln!(text, "  w(b) = {}", report.w_of_b.cycle_string());
                let _ = writeln!(text, "  class = {:?}", report.eta_class);
            }
        }
    }
    Ok(CommandOutput { text, failures: 0 })
}

// ---------------------------------------------------------------------------
// crystal
// ---------------------------------------------------------------------------

/// `crystal` driver: crystal graph export as an adjacency list.
pub fn cmd_crystal(
    n: usize,
    mu: Vec<i64>,
    format: Format,
    guard: &ScaleGuard,
) -> Result<CommandOutput> {
    if mu.len() != n {
        return Err(Error::Config(format!(
            "mu must have n = {n} entries, got {}",
            mu.len()
        )));
    }
    let mu = Cocharacter::new(mu);
    if !mu.is_dominant() || mu.entry(n) < 0 {
        return Err(Error::Config(format!(
            "mu must be a dominant shape with non-negative entries: {mu}"
        )));
    }
    if mu.total() as u64 > guard.max_boxes as u64 {
        return Err(Error::ScaleGuard {
            estimate: mu.total() as u64,
            limit: guard.max_boxes as u64,
        });
    }
    let crystal = generate_crystal(n, &mu)?;
    let text = match format {
        Format::Json => {
            let doc = serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "n": n,
                "mu": mu,
                "elements": crystal.elements(),
                "edges": crystal.edges(),
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("serializes");
            s.push('\n');
            s
        }
        _ => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "crystal of shape {mu} at rank {n}: {} elements",
                crystal.len()
            );
            for (idx, t) in crystal.elements().iter().enumerate() {
                let _ = writeln!(out, "  [{idx}] {t}  wt {}", t.weight());
            }
            for e in crystal.edges() {
                let _ = writeln!(out, "  {} --f_{}--> {}", e.from, e.i, e.to);
            }
            out
        }
    };
    Ok(CommandOutput { text, failures: 0 })
}

// ---------------------------------------------------------------------------
// census
// ---------------------------------------------------------------------------

/// All partitions of `m` with at most `parts` parts, largest part first.
pub fn partitions(m: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, parts: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if m == 0 {
            out.push(prefix.clone());
            return;
        }
        if parts == 0 {
            return;
        }
        for p in (1..=max.min(m)).rev() {
            prefix.push(p);
            rec(m - p, parts - 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, parts, m, &mut Vec::new(), &mut out);
    out
}

/// `census` driver: one row per coprime `(n, m)` with `n ≤ max_n`,
/// `m ≤ max_m`, and per partition of `m` with at most `n` parts.
///
/// Partitions with `n` nonzero parts are normalized by a central shift
/// before counting; the row echoes the normalized shape.
pub fn cmd_census(
    max_n: usize,
    max_m: usize,
    format: Format,
    guard: &ScaleGuard,
) -> Result<CommandOutput> {
    let mut text = String::new();
    if format != Format::Json {
        let _ = writeln!(
            text,
            "n\tm\tmu\tkostka\tclasses_constructed\tclasses_bruteforce\tagree"
        );
    }
    let mut failures = 0;
    // Partitions with n nonzero parts normalize into smaller cells already
    // on the grid; emit each cell once.
    let mut seen = BTreeSet::new();
    for n in 2..=max_n {
        for m in 1..=max_m {
            if gcd(n, m) != 1 {
                continue;
            }
            for partition in partitions(m, n) {
                let mut entries: Vec<i64> = partition.iter().map(|&p| p as i64).collect();
                entries.resize(n, 0);
                let config = RunConfig::new(n, m, entries, format, *guard, 0)?;
                if !seen.insert((n, config.data.m(), config.mu.clone())) {
                    continue;
                }
                let row = census_row(&config.data, &config.mu, guard)?;
                if !row.agree {
                    failures += 1;
                }
                match format {
                    Format::Json => {
                        let _ =
                            writeln!(text, "{}", serde_json::to_string(&row).expect("serializes"));
                    }
                    _ => {
                        let _ = writeln!(
                            text,
                            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                            row.n,
                            row.m,
                            row.mu
                                .as_slice()
                                .iter()
                                .map(ToString::to_string)
                                .collect::<Vec<_>>()
                                .join(","),
                            row.kostka,
                            row.classes_constructed,
                            row.classes_bruteforce,
                            row.agree
                        );
                    }
                }
            }
        }
    }
    Ok(CommandOutput { text, failures })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

/// One named check with its outcome.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Aggregated verification summary.
#[derive(Clone, Debug, Serialize)]
pub struct VerifySummary {
    pub schema_version: &'static str,
    pub n: usize,
    pub m: usize,
    pub mu: Cocharacter,
    pub checks: Vec<CheckOutcome>,
    pub passed: usize,
    pub failed: usize,
}

fn outcome(name: &str, result: std::result::Result<String, String>) -> CheckOutcome {
    match result {
        Ok(detail) => CheckOutcome {
            name: name.into(),
            passed: true,
            detail,
        },
        Err(detail) => CheckOutcome {
            name: name.into(),
            passed: false,
            detail,
        },
    }
}

/// `verify` driver: runs every module invariant at the configured case.
pub fn cmd_verify(config: &RunConfig) -> Result<CommandOutput> {
    guard_boxes(config)?;
    let checks = vec![
        outcome(
            "lattice/sorting-shift-commutation",
            check_sorting_shift(config),
        ),
        outcome("lattice/shift-period", check_shift_period(config)),
        outcome("lattice/coxeter-cycle-blocks", check_coxeter_blocks(config)),
        outcome("crystal/axioms", check_crystal_axioms(config)),
        outcome("crystal/tensor-rule", check_tensor_rule(config)),
        outcome(
            "crystal/factorization-uniqueness",
            check_factorization_uniqueness(config),
        ),
        outcome("construct/grid", check_construct_grid(config)),
        outcome("construct/allowed", check_allowed(config)),
        outcome("stratum/census", check_census(config)),
    ];

    let passed = checks.iter().filter(|c| c.passed).count();
    let failed = checks.len() - passed;
    let summary = VerifySummary {
        schema_version: SCHEMA_VERSION,
        n: config.data.n(),
        m: config.data.m(),
        mu: config.mu.clone(),
        checks,
        passed,
        failed,
    };
    let text = match config.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&summary).expect("serializes");
            s.push('\n');
            s
        }
        _ => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "verify n = {}, m = {}, mu = {} (shift {})",
                summary.n, summary.m, summary.mu, config.shift
            );
            for c in &summary.checks {
                let _ = writeln!(
                    out,
                    "  [{}] {} — {}",
                    if c.passed { "ok" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
            let _ = writeln!(out, "{} passed, {} failed", summary.passed, summary.failed);
            out
        }
    };
    Ok(CommandOutput {
        text,
        failures: failed,
    })
}

fn guard_boxes(config: &RunConfig) -> Result<()> {
    let boxes = config.mu.total() as u64;
    if boxes > config.guard.max_boxes as u64 {
        return Err(Error::ScaleGuard {
            estimate: boxes,
            limit: config.guard.max_boxes as u64,
        });
    }
    Ok(())
}

fn random_cochar(rng: &mut ChaCha8Rng, n: usize) -> Cocharacter {
    Cocharacter::new((0..n).map(|_| rng.gen_range(-6..=6)).collect())
}

fn check_sorting_shift(config: &RunConfig) -> std::result::Result<String, String> {
    let n = config.data.n();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let tau = Permutation::tau(n);
    for trial in 0..1000 {
        let lam = random_cochar(&mut rng, n);
        let lhs = lam.eta_shift(1).sorting_permutation();
        let rhs = tau.compose(&lam.sorting_permutation());
        if lhs != rhs {
            return Err(format!("trial {trial}: {lam} violates the commutation"));
        }
        if !lam.sorting_permutation().inverse().act(&lam).is_dominant() {
            return Err(format!("trial {trial}: sorted {lam} is not dominant"));
        }
    }
    Ok("1000 sampled cocharacters".into())
}

fn check_shift_period(config: &RunConfig) -> std::result::Result<String, String> {
    let n = config.data.n();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(1));
    for trial in 0..1000 {
        let lam = random_cochar(&mut rng, n);
        if lam.eta_shift(n as i64) != lam.shift_central(1) {
            return Err(format!("trial {trial}: period fails for {lam}"));
        }
        if lam.eta_shift(-1).eta_shift(1) != lam {
            return Err(format!("trial {trial}: inverse fails for {lam}"));
        }
    }
    Ok("1000 sampled cocharacters".into())
}

/// Every Coxeter element, as an `n`-cycle, passes through `{1..j}` (and
/// `{n−j+1..n}`) in a single block of `j` consecutive steps.
pub fn coxeter_blocks_hold(n: usize) -> bool {
    use itertools::Itertools;
    let coxeters: BTreeSet<Permutation> = (1..n)
        .permutations(n - 1)
        .map(|word| Permutation::from_word(n, &word))
        .collect();
    coxeters.iter().all(|w| {
        (1..=n).all(|j| {
            let low = (1..=j).any(|start| {
                let mut seen = BTreeSet::new();
                let mut x = start;
                for _ in 0..j {
                    seen.insert(x);
                    x = w.apply(x);
                }
                seen == (1..=j).collect()
            });
            let high = (n - j + 1..=n).any(|start| {
                let mut seen = BTreeSet::new();
                let mut x = start;
                for _ in 0..j {
                    seen.insert(x);
                    x = w.apply(x);
                }
                seen == (n - j + 1..=n).collect()
            });
            low && high
        })
    })
}

fn check_coxeter_blocks(config: &RunConfig) -> std::result::Result<String, String> {
    let n = config.data.n().min(7);
    if coxeter_blocks_hold(n) {
        Ok(format!("all Coxeter elements at rank {n}"))
    } else {
        Err(format!(
            "a Coxeter element at rank {n} violates the block property"
        ))
    }
}

/// Checks the crystal axioms on every element of `B_mu`: weight shifts,
/// mutual inversion of the operators, `φ − ε` equal to the weight pairing,
/// and agreement of `ε`/`φ` with actual operator iteration counts.
pub fn crystal_axioms_hold(n: usize, mu: &Cocharacter) -> std::result::Result<String, String> {
    let crystal = generate_crystal(n, mu).map_err(|e| e.to_string())?;
    for t in crystal.elements() {
        let wt = t.weight();
        for i in 1..n {
            let eps = t.epsilon(i);
            let phi = t.phi(i);
            if phi as i64 - eps as i64 != wt.simple_pairing(i) {
                return Err(format!("phi - epsilon != pairing at {t}, i = {i}"));
            }
            if let Some(up) = t.e(i) {
                let expected = wt
                    .add(&Cocharacter::unit(n, i))
                    .sub(&Cocharacter::unit(n, i + 1));
                if up.weight() != expected {
                    return Err(format!("raising weight shift fails at {t}, i = {i}"));
                }
                if up.f(i).as_ref() != Some(t) {
                    return Err(format!("f_i e_i != id at {t}, i = {i}"));
                }
            } else if eps != 0 {
                return Err(format!("e_i null but epsilon > 0 at {t}, i = {i}"));
            }
            if let Some(down) = t.f(i) {
                if down.e(i).as_ref() != Some(t) {
                    return Err(format!("e_i f_i != id at {t}, i = {i}"));
                }
            } else if phi != 0 {
                return Err(format!("f_i null but phi > 0 at {t}, i = {i}"));
            }
            // ε and φ are the exact iteration counts.
            let mut count = 0;
            let mut cur = t.clone();
            while let Some(next) = cur.e(i) {
                cur = next;
                count += 1;
            }
            if count != eps {
                return Err(format!("epsilon is not the raising count at {t}, i = {i}"));
            }
            count = 0;
            cur = t.clone();
            while let Some(next) = cur.f(i) {
                cur = next;
                count += 1;
            }
            if count != phi {
                return Err(format!("phi is not the lowering count at {t}, i = {i}"));
            }
        }
    }
    Ok(format!("{} elements", crystal.len()))
}

fn check_crystal_axioms(config: &RunConfig) -> std::result::Result<String, String> {
    crystal_axioms_hold(config.data.n(), &config.mu)
}

/// Compares the recursive pair rule with the signature scan on all words of
/// length at most `max_len`.
pub fn tensor_rule_agrees(n: usize, max_len: usize) -> std::result::Result<String, String> {
    use itertools::Itertools;
    let mut words = 0u64;
    for len in 1..=max_len {
        for boxes in (0..len).map(|_| 1..=n).multi_cartesian_product() {
            let t = TensorElement::new(n, boxes.clone()).expect("letters in range");
            for i in 1..n {
                if tensor_rule::epsilon(&boxes, i) != t.epsilon(i) as i64
                    || tensor_rule::phi(&boxes, i) != t.phi(i) as i64
                    || tensor_rule::e(&boxes, i) != t.e(i).map(|x| x.boxes().to_vec())
                    || tensor_rule::f(&boxes, i) != t.f(i).map(|x| x.boxes().to_vec())
                {
                    return Err(format!("rules disagree on {boxes:?} at i = {i}"));
                }
            }
            words += 1;
        }
    }
    Ok(format!("{words} words of length <= {max_len}"))
}

fn check_tensor_rule(config: &RunConfig) -> std::result::Result<String, String> {
    let n = config.data.n();
    let max_len = if n <= 3 { 7 } else { 5 };
    tensor_rule_agrees(n, max_len)
}

/// For every flat tuple summing to `λ_b`, the projection lands in the
/// shape-`mu` component for exactly one tuple per tableau, namely its
/// column factorization.
pub fn factorization_uniqueness_holds(
    data: &SuperbasicData,
    mu: &Cocharacter,
) -> std::result::Result<String, String> {
    let n = data.n();
    let lam_b = data.lambda_b();
    let heights = fareastern_heights(mu).map_err(|e| e.to_string())?;
    let flats = FlatTuple::enumerate_with_sum(n, &heights, &lam_b);
    let crystal = generate_crystal(n, mu).map_err(|e| e.to_string())?;
    let mut hits: std::collections::BTreeMap<Vec<Vec<usize>>, Vec<FlatTuple>> = Default::default();
    for flat in &flats {
        let (shape, tableau) = project_to_highest(&flat.to_tensor());
        if &shape == mu {
            hits.entry(tableau.rows().to_vec())
                .or_default()
                .push(flat.clone());
        }
    }
    let expected = crystal.weight_space(&lam_b);
    if hits.len() != expected.len() {
        return Err(format!(
            "{} tableaux reached, expected {}",
            hits.len(),
            expected.len()
        ));
    }
    for &idx in &expected {
        let t = &crystal.elements()[idx];
        match hits.get(t.rows()) {
            Some(list) if list.len() == 1 && list[0] == t.factorize() => {}
            Some(list) => return Err(format!("tableau {t} reached by {} flat tuples", list.len())),
            None => return Err(format!("tableau {t} not reached")),
        }
    }
    Ok(format!(
        "{} flat tuples, {} tableaux",
        flats.len(),
        expected.len()
    ))
}

fn check_factorization_uniqueness(config: &RunConfig) -> std::result::Result<String, String> {
    factorization_uniqueness_holds(&config.data, &config.mu)
}

fn check_construct_grid(config: &RunConfig) -> std::result::Result<String, String> {
    let data = &config.data;
    let n = data.n();
    let crystal = generate_crystal(n, &config.mu).map_err(|e| e.to_string())?;
    let lam_b = data.lambda_b();
    let indices = crystal.weight_space(&lam_b);
    for &idx in &indices {
        let b = crystal.elements()[idx].clone();
        let construction = Construction::new(data.clone(), b.clone()).map_err(|e| e.to_string())?;
        let report = construction.report().map_err(|e| e.to_string())?;
        for u in construction.upsilon() {
            if !construction.coxeter_weight_identity_holds(u) {
                return Err(format!("weight identity fails at {b}"));
            }
        }
        for (_, tuple, _) in &report.xi_by_upsilon {
            let words = nie_words(tuple).map_err(|e| e.to_string())?;
            if words != report.w_tuple {
                return Err(format!("word recursion disagrees at {b}"));
            }
            // Flat coordinates are shift-invariant.
            for k in [-1i64, 2, n as i64] {
                if tuple.eta_shift(k).flat_of() != tuple.flat_of() {
                    return Err(format!("flat coordinates vary under shifts at {b}"));
                }
            }
        }
        // The orbit contains exactly n members whose first component is
        // non-negative with a zero entry: the offsets 0..n-1.
        let canonical = &report.eta_class;
        for k in -(2 * n as i64)..=2 * n as i64 {
            let first = canonical.lambda(0).eta_shift(k);
            let in_window = first.min_entry() == 0;
            if in_window != (0..n as i64).contains(&k) {
                return Err(format!("shift window broken at {b}, k = {k}"));
            }
        }
        if n <= config.guard.max_factorial {
            let scanned = upsilon_fullscan(construction.w_of_b(), data, &config.guard)
                .map_err(|e| e.to_string())?;
            if scanned != construction.upsilon() {
                return Err(format!("full scan disagrees at {b}"));
            }
        }
    }
    Ok(format!("{} tableaux of weight lambda_b", indices.len()))
}

/// For every `u` conjugating `τ^m` to a Coxeter element, `u⁻¹λ_b⁻` passes
/// the prefix-count criterion, and the criterion agrees with a direct
/// search over raising chains.
pub fn allowed_criterion_holds(data: &SuperbasicData) -> std::result::Result<String, String> {
    use itertools::Itertools;
    let n = data.n();
    let lam_b = data.lambda_b();
    let lam_b_minus = data.lambda_b_antidominant();
    let tau_m = data.tau_power_m();
    // Direct route: DFS over chains of distinct letters, each pairing to -1
    // at application time.
    let mut reachable: BTreeSet<Cocharacter> = BTreeSet::new();
    let mut stack = vec![(lam_b.clone(), BTreeSet::<usize>::new())];
    while let Some((lam, used)) = stack.pop() {
        if !reachable.insert(lam.clone()) {
            continue;
        }
        for i in 1..n {
            if !used.contains(&i) && lam.simple_pairing(i) == -1 {
                let mut next_used = used.clone();
                next_used.insert(i);
                stack.push((Permutation::simple(n, i).act(&lam), next_used));
            }
        }
    }
    let mut checked = 0u64;
    let mut conjugating = 0u64;
    for images in (1..=n).permutations(n) {
        let u = Permutation::from_one_line(images).expect("permutation");
        let conjugated = u.inverse().compose(&tau_m).compose(&u);
        let lam = u.inverse().act(&lam_b_minus);
        let witness = is_allowed(&lam, data).map_err(|e| e.to_string())?;
        if witness.allowed != reachable.contains(&lam) {
            return Err(format!("criterion and direct search disagree at {lam}"));
        }
        if let Some(w) = &witness.partial_coxeter {
            if w.act(&lam_b) != lam {
                return Err(format!("witness does not reach {lam}"));
            }
        }
        if conjugated.is_coxeter() {
            conjugating += 1;
            if !witness.allowed {
                return Err(format!("conjugating element yields non-allowed {lam}"));
            }
        }
        checked += 1;
    }
    Ok(format!("{checked} permutations, {conjugating} conjugating"))
}

fn check_allowed(config: &RunConfig) -> std::result::Result<String, String> {
    if config.data.n() > config.guard.max_factorial {
        return Ok(format!(
            "skipped: n = {} exceeds the factorial guard",
            config.data.n()
        ));
    }
    allowed_criterion_holds(&config.data)
}

fn check_census(config: &RunConfig) -> std::result::Result<String, String> {
    match census_row(&config.data, &config.mu, &config.guard) {
        Ok(row) if row.agree => Ok(format!(
            "kostka = constructed = bruteforce = {}",
            row.kostka
        )),
        Ok(row) => Err(format!(
            "counts disagree: kostka {}, constructed {}, bruteforce {}",
            row.kostka, row.classes_constructed, row.classes_bruteforce
        )),
        Err(Error::ScaleGuard { estimate, limit }) => Ok(format!(
            "skipped: estimated {estimate} exceeds guard {limit}"
        )),
        Err(e) => Err(e.to_string()),
    }
}

// ---------------------------------------------------------------------------
// shared helpers for the binary
// ---------------------------------------------------------------------------

/// Maps an error to the process exit code (2 for configuration problems).
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Config(_)
        | Error::ScaleGuard { .. }
        | Error::InvalidPermutation(..)
        | Error::RankMismatch(..)
        | Error::NotCoprime { .. } => 2,
        _ => 1,
    }
}
