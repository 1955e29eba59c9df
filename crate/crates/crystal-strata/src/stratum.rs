//! The semi-module side: cocharacter tuples attached to a superbasic element
//! and the numerical criterion for their strata to be top-dimensional.
//!
//! Fix coprime `n ≥ 2` and `m ≥ 1` and let `b = η^m`, acting on the lattice
//! by `λ ↦ τ^m(λ) + λ_b^+`. A tuple `λ_• = (λ_1, …, λ_d)` carries derived
//! data
//!
//! * `λ_l^† = λ_{l+1}` for `l < d` and `λ_d^† = b·λ_1`,
//! * `λ_l^♮ = λ_l^† − λ_l`,
//! * `λ_l^♭ = u_{λ_l}⁻¹(λ_l^♮)` where `u_λ` is the sorting element,
//!
//! and its stratum is top-dimensional exactly when every `λ_l^♮` is a 0/1
//! vector of the prescribed column height and the `R`-set has cardinality
//! `⟨ρ, μ⟩ − (n−1)/2`.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::crystal::FlatTuple;
use crate::lattice::{AffineElement, Cocharacter, Permutation};
use crate::{Error, Result};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The arithmetic of a superbasic element of slope `m/n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperbasicData {
    n: usize,
    m: usize,
    m0: usize,
    /// `i_0 = 1 < i_1 < … < i_{m_0} = n`; `λ_b(i_k) = ⌊m/n⌋ + 1` exactly at
    /// the breakpoints `k ≥ 1`.
    breakpoints: Vec<usize>,
}

impl SuperbasicData {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n < 2 || m == 0 {
            return Err(Error::Config(format!(
                "need n >= 2 and m >= 1, got n={n}, m={m}"
            )));
        }
        if gcd(n, m) != 1 {
            return Err(Error::NotCoprime { n, m });
        }
        let m0 = m % n;
        // i_k is the minimal index with ⌊i·m0/n⌋ ≥ k.
        let breakpoints = (0..=m0)
            .map(|k| (1..=n).find(|i| i * m0 / n >= k).expect("i = n attains m0"))
            .collect();
        Ok(SuperbasicData {
            n,
            m,
            m0,
            breakpoints,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Residue of `m` modulo `n`.
    pub fn m0(&self) -> usize {
        self.m0
    }

    /// `⌊m/n⌋`, the small entry value of `λ_b`.
    pub fn mbar(&self) -> i64 {
        (self.m / self.n) as i64
    }

    /// `i_k` for `0 ≤ k ≤ m_0`.
    pub fn breakpoint(&self, k: usize) -> usize {
        self.breakpoints[k]
    }

    /// The best integral approximation of the slope:
    /// `λ_b(i) = ⌊im/n⌋ − ⌊(i−1)m/n⌋`.
    pub fn lambda_b(&self) -> Cocharacter {
        Cocharacter::new(
            (1..=self.n)
                .map(|i| (i * self.m / self.n) as i64 - ((i - 1) * self.m / self.n) as i64)
                .collect(),
        )
    }

    pub fn lambda_b_dominant(&self) -> Cocharacter {
        self.lambda_b().dominant_rearranged()
    }

    pub fn lambda_b_antidominant(&self) -> Cocharacter {
        self.lambda_b().antidominant_rearranged()
    }

    /// `w_max · λ_b`, the entry-reversed vector.
    pub fn lambda_b_opposite(&self) -> Cocharacter {
        let mut entries = self.lambda_b().as_slice().to_vec();
        entries.reverse();
        Cocharacter::new(entries)
    }

    /// Action of `b = η^m` on a cocharacter.
    pub fn b_act(&self, lam: &Cocharacter) -> Cocharacter {
        lam.eta_shift(self.m as i64)
    }

    /// `b = η^m` written out as `φ^{λ_b^+} τ^m`.
    pub fn b_affine(&self) -> AffineElement {
        AffineElement::new(self.lambda_b_dominant(), self.tau_power_m())
    }

    /// `τ^m` as a finite permutation.
    pub fn tau_power_m(&self) -> Permutation {
        Permutation::tau(self.n).pow(self.m as i64)
    }
}

/// Decomposes a normalized dominant shape into column heights, smallest
/// first: `μ = μ_1 + ⋯ + μ_d` with `μ_j` a conjugate of `ω_{k_j}` and
/// `k_1 ≤ … ≤ k_d`, `d = μ(1)`.
pub fn fareastern_heights(mu: &Cocharacter) -> Result<Vec<usize>> {
    let n = mu.rank();
    if !mu.is_dominant() || mu.entry(n) != 0 || mu.max_entry() == 0 {
        return Err(Error::Config(format!(
            "shape must be dominant, nonzero, with last entry 0: {mu}"
        )));
    }
    let d = mu.entry(1);
    let heights: Vec<usize> = (1..=d)
        .map(|k| (1..=n).filter(|&i| mu.entry(i) > d - k).count())
        .collect();
    debug_assert!(heights.windows(2).all(|w| w[0] <= w[1]));
    Ok(heights)
}

/// The dimension of a top stratum: `⟨ρ, μ⟩ − (n−1)/2`, evaluated exactly
/// over doubled integers.
///
/// The defect term is `n − 1` (rank minus the rank of the σ-centralizer,
/// which is one for a superbasic class); every constructed tuple is checked
/// against this value through its `R`-set, so a wrong defect cannot pass
/// silently.
pub fn top_dimension(data: &SuperbasicData, mu: &Cocharacter) -> Result<u64> {
    let n = data.n;
    if mu.rank() != n {
        return Err(Error::RankMismatch(mu.rank(), n));
    }
    if mu.total() != data.m as i64 {
        return Err(Error::Config(format!(
            "total of mu = {} must equal m = {}",
            mu.total(),
            data.m
        )));
    }
    // 2⟨ρ, μ⟩ = Σ (n + 1 − 2i) μ(i).
    let doubled: i64 = (1..=n)
        .map(|i| (n as i64 + 1 - 2 * i as i64) * mu.entry(i))
        .sum();
    let value = doubled - (n as i64 - 1);
    if value < 0 || value % 2 != 0 {
        return Err(Error::CheckFailed(format!(
            "dimension 2*{value}/2 is not a non-negative integer for mu={mu}, n={n}, m={}",
            data.m
        )));
    }
    Ok((value / 2) as u64)
}

/// A tuple `λ_• ∈ Y^d` together with its superbasic context and shape.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CocharTuple {
    lambdas: Vec<Cocharacter>,
    mu: Cocharacter,
    n: usize,
    m: usize,
}

impl CocharTuple {
    pub fn new(data: &SuperbasicData, mu: Cocharacter, lambdas: Vec<Cocharacter>) -> Result<Self> {
        let heights = fareastern_heights(&mu)?;
        if lambdas.len() != heights.len() {
            return Err(Error::Config(format!(
                "expected d = {} cocharacters, got {}",
                heights.len(),
                lambdas.len()
            )));
        }
        if mu.total() != data.m as i64 {
            return Err(Error::Config(format!(
                "total of mu = {} must equal m = {}",
                mu.total(),
                data.m
            )));
        }
        for lam in &lambdas {
            if lam.rank() != data.n {
                return Err(Error::RankMismatch(lam.rank(), data.n));
            }
        }
        Ok(CocharTuple {
            lambdas,
            mu,
            n: data.n,
            m: data.m,
        })
    }

    pub fn data(&self) -> SuperbasicData {
        SuperbasicData::new(self.n, self.m).expect("validated on construction")
    }

    pub fn mu(&self) -> &Cocharacter {
        &self.mu
    }

    pub fn d(&self) -> usize {
        self.lambdas.len()
    }

    pub fn lambdas(&self) -> &[Cocharacter] {
        &self.lambdas
    }

    pub fn lambda(&self, l: usize) -> &Cocharacter {
        &self.lambdas[l]
    }

    /// `λ_l^†`: the cyclic successor, with `b` applied on wrap-around
    /// (0-based `l`).
    pub fn dagger(&self, l: usize) -> Cocharacter {
        if l + 1 < self.lambdas.len() {
            self.lambdas[l + 1].clone()
        } else {
            self.data().b_act(&self.lambdas[0])
        }
    }

    /// `λ_l^♮ = λ_l^† − λ_l`.
    pub fn natural(&self, l: usize) -> Cocharacter {
        self.dagger(l).sub(&self.lambdas[l])
    }

    /// `λ_l^♭ = u_{λ_l}⁻¹(λ_l^♮)`.
    pub fn flat(&self, l: usize) -> Cocharacter {
        self.lambdas[l]
            .sorting_permutation()
            .inverse()
            .act(&self.natural(l))
    }

    /// The flat coordinates, when every `λ_l^♮` is a 0/1 vector of column
    /// height `k_l`. `None` signals an empty stratum.
    pub fn flat_of(&self) -> Option<FlatTuple> {
        let heights = fareastern_heights(&self.mu).expect("validated on construction");
        let mut parts = Vec::with_capacity(self.lambdas.len());
        for (l, &height) in heights.iter().enumerate() {
            let nat = self.natural(l);
            if nat.as_slice().iter().any(|&v| v != 0 && v != 1) {
                return None;
            }
            if nat.total() != height as i64 {
                return None;
            }
            let flat = self.flat(l);
            parts.push(flat.as_slice().iter().map(|&v| v as u8).collect());
        }
        Some(FlatTuple::new(self.n, parts).expect("entries are 0/1"))
    }

    /// The index set whose cardinality computes the stratum dimension:
    /// triples `(l, i, j)` (all 1-based) with `⟨χ_{i,j}, λ_l^♮⟩ = −1` and
    /// `(λ_l)_{χ_{i,j}} ≥ 1`, where `λ_α = ⟨α, λ⟩` for negative `α` and
    /// `⟨α, λ⟩ − 1` for positive `α`.
    pub fn r_set(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for l in 0..self.lambdas.len() {
            let nat = self.natural(l);
            let lam = &self.lambdas[l];
            for i in 1..=self.n {
                for j in 1..=self.n {
                    if i == j {
                        continue;
                    }
                    if nat.chi_pairing(i, j) != -1 {
                        continue;
                    }
                    let lam_alpha = lam.chi_pairing(i, j) - i64::from(i < j);
                    if lam_alpha >= 1 {
                        out.push((l + 1, i, j));
                    }
                }
            }
        }
        out
    }

    /// Top-dimensional: the flat coordinates exist and the `R`-set size
    /// matches the dimension formula.
    pub fn is_top(&self) -> bool {
        if self.flat_of().is_none() {
            return false;
        }
        let dim = top_dimension(&self.data(), &self.mu).expect("validated on construction");
        self.r_set().len() as u64 == dim
    }

    /// Applies `η^k` to every component.
    pub fn eta_shift(&self, k: i64) -> CocharTuple {
        CocharTuple {
            lambdas: self.lambdas.iter().map(|lam| lam.eta_shift(k)).collect(),
            mu: self.mu.clone(),
            n: self.n,
            m: self.m,
        }
    }

    /// Canonical representative of the shift class together with the offset
    /// `k` such that `self = canonical.eta_shift(k)`.
    ///
    /// Among the `n` shifts whose first component has minimum entry zero the
    /// lexicographically least tuple is chosen; the choice is deterministic
    /// across platforms.
    pub fn eta_class(&self) -> (CocharTuple, i64) {
        let n = self.n as i64;
        let mut best: Option<(CocharTuple, i64)> = None;
        for r in 0..n {
            let rotated_min = self.lambdas[0].eta_shift(r).min_entry();
            // η^n is the central shift by one, so k = r - n·min has a first
            // component with minimum entry exactly zero.
            let k = r - n * rotated_min;
            let candidate = self.eta_shift(k);
            debug_assert_eq!(candidate.lambdas[0].min_entry(), 0);
            match &best {
                Some((cur, _)) if cur.lambdas <= candidate.lambdas => {}
                _ => best = Some((candidate, -k)),
            }
        }
        best.expect("n >= 2 candidates")
    }
}

impl fmt::Debug for CocharTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (l, lam) in self.lambdas.iter().enumerate() {
            if l > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{lam}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for CocharTuple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CocharTuple", 4)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field("mu", &self.mu)?;
        s.serialize_field("lambdas", &self.lambdas)?;
        s.end()
    }
}
