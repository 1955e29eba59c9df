//! Symmetric-group and cocharacter-lattice combinatorics.
//!
//! Conventions used throughout the crate:
//!
//! * Permutations are stored in one-line notation with 1-based values:
//!   `images[i - 1] = w(i)`.
//! * Composition is `(w ∘ x)(i) = w(x(i))` — the right factor acts first.
//! * A permutation acts on a cocharacter by `(w·λ)(i) = λ(w⁻¹(i))`, so the
//!   entry at position `i` moves to position `w(i)`.
//! * An affine element `φ^λ w` acts by `v ↦ w(v) + λ`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An element of the rank-`n` cocharacter lattice, i.e. a vector in `Z^n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cocharacter {
    entries: Vec<i64>,
}

impl Cocharacter {
    pub fn new(entries: Vec<i64>) -> Self {
        Cocharacter { entries }
    }

    pub fn zero(n: usize) -> Self {
        Cocharacter {
            entries: vec![0; n],
        }
    }

    /// Standard basis vector `v_k` (1-based position).
    pub fn unit(n: usize, k: usize) -> Self {
        let mut entries = vec![0; n];
        entries[k - 1] = 1;
        Cocharacter { entries }
    }

    /// Indicator vector `ω_k = (1,…,1,0,…,0)` with `k` leading ones.
    pub fn omega(n: usize, k: usize) -> Self {
        let mut entries = vec![0; n];
        entries[..k].fill(1);
        Cocharacter { entries }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Entry at the 1-based position `i`.
    pub fn entry(&self, i: usize) -> i64 {
        self.entries[i - 1]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.entries
    }

    pub fn total(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn min_entry(&self) -> i64 {
        *self.entries.iter().min().expect("nonempty cocharacter")
    }

    pub fn max_entry(&self) -> i64 {
        *self.entries.iter().max().expect("nonempty cocharacter")
    }

    /// Pairing with the root `χ_{i,j}`: `λ(i) − λ(j)` (1-based).
    pub fn chi_pairing(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1] - self.entries[j - 1]
    }

    /// Pairing with the simple root `χ_{i,i+1}`.
    pub fn simple_pairing(&self, i: usize) -> i64 {
        self.entries[i - 1] - self.entries[i]
    }

    /// Weakly decreasing entries.
    pub fn is_dominant(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }

    /// Weakly increasing entries.
    pub fn is_antidominant(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] <= w[1])
    }

    /// The dominant rearrangement (entries sorted decreasing).
    pub fn dominant_rearranged(&self) -> Cocharacter {
        let mut entries = self.entries.clone();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Cocharacter { entries }
    }

    /// The anti-dominant rearrangement (entries sorted increasing).
    pub fn antidominant_rearranged(&self) -> Cocharacter {
        let mut entries = self.entries.clone();
        entries.sort_unstable();
        Cocharacter { entries }
    }

    pub fn add(&self, other: &Cocharacter) -> Cocharacter {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        Cocharacter {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Cocharacter) -> Cocharacter {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        Cocharacter {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Adds the central cocharacter `(c,…,c)`.
    pub fn shift_central(&self, c: i64) -> Cocharacter {
        Cocharacter {
            entries: self.entries.iter().map(|a| a + c).collect(),
        }
    }

    /// Applies the `k`-th power of the shift element `η`.
    ///
    /// A single step sends `λ` to `(λ(n)+1, λ(1), …, λ(n−1))`; negative `k`
    /// applies the inverse. `η^n` is the central shift by `(1,…,1)`.
    pub fn eta_shift(&self, k: i64) -> Cocharacter {
        let n = self.rank() as i64;
        // Whole periods are central shifts; only the residue needs rotation.
        let central = k.div_euclid(n);
        let steps = k.rem_euclid(n);
        let mut out = self.shift_central(central);
        for _ in 0..steps {
            let mut next = Vec::with_capacity(out.entries.len());
            next.push(out.entries[out.entries.len() - 1] + 1);
            next.extend_from_slice(&out.entries[..out.entries.len() - 1]);
            out = Cocharacter { entries: next };
        }
        out
    }

    /// The sorting element `u` with `u⁻¹·λ` dominant.
    ///
    /// Among equal entries the one with the larger index is taken first, so
    /// `λ(u(1)) ≥ … ≥ λ(u(n))` with ties broken by `u(a) > u(a+1)`.
    /// Equivalently, `u(1), …, u(n)` sorts `i + n·λ(i)` decreasingly.
    pub fn sorting_permutation(&self) -> Permutation {
        let mut order: Vec<usize> = (0..self.entries.len()).collect();
        order.sort_unstable_by(|&a, &b| {
            self.entries[b]
                .cmp(&self.entries[a])
                .then_with(|| b.cmp(&a))
        });
        Permutation {
            images: order.into_iter().map(|i| i + 1).collect(),
        }
    }

    /// Entry multisets agree, i.e. the vectors lie in one Weyl orbit.
    pub fn is_conjugate_to(&self, other: &Cocharacter) -> bool {
        self.dominant_rearranged() == other.dominant_rearranged()
    }
}

impl fmt::Display for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of the symmetric group `W_0` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds from one-line notation, validating that it is a bijection.
    pub fn from_one_line(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(images.clone(), n));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The simple reflection `s_i` swapping `i` and `i+1` (1 ≤ i ≤ n−1).
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "simple reflection index out of range");
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Product of simple reflections, rightmost letter applied first:
    /// `from_word(n, [a, b]) = s_a ∘ s_b`.
    pub fn from_word(n: usize, letters: &[usize]) -> Self {
        letters.iter().fold(Permutation::identity(n), |acc, &i| {
            acc.compose(&Permutation::simple(n, i))
        })
    }

    /// The long cycle `τ = s_1 s_2 ⋯ s_{n−1}`, sending `i ↦ i+1 (mod n)`.
    pub fn tau(n: usize) -> Self {
        let mut images: Vec<usize> = (2..=n).collect();
        images.push(1);
        Permutation { images }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `(w ∘ x)(i) = w(x(i))`; `x` acts first.
    ///
    /// Panics if the ranks differ.
    pub fn compose(&self, x: &Permutation) -> Permutation {
        assert_eq!(self.rank(), x.rank(), "rank mismatch in composition");
        Permutation {
            images: x.images.iter().map(|&v| self.images[v - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// `w^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Permutation::identity(self.rank());
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base);
        }
        out
    }

    /// Action on a cocharacter: `(w·λ)(i) = λ(w⁻¹(i))`.
    ///
    /// Panics if the ranks differ.
    pub fn act(&self, lam: &Cocharacter) -> Cocharacter {
        assert_eq!(self.rank(), lam.rank(), "rank mismatch in action");
        let mut entries = vec![0; lam.rank()];
        for (i, &v) in self.images.iter().enumerate() {
            entries[v - 1] = lam.entries[i];
        }
        Cocharacter { entries }
    }

    /// Coxeter length, i.e. the inversion count of the one-line word.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// A reduced word, produced by repeatedly peeling the smallest descent.
    ///
    /// Letters are in product order, so
    /// `w == from_word(n, &w.reduced_word())`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut peeled = Vec::new();
        while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
            w.swap(i, i + 1);
            peeled.push(i + 1);
        }
        peeled.reverse();
        peeled
    }

    /// Letters appearing in any reduced word (the set is word-independent).
    pub fn support(&self) -> BTreeSet<usize> {
        self.reduced_word().into_iter().collect()
    }

    /// Every letter of a reduced word appears at most once.
    pub fn is_partial_coxeter(&self) -> bool {
        self.length() == self.support().len()
    }

    /// Every simple reflection appears exactly once in a reduced word.
    pub fn is_coxeter(&self) -> bool {
        self.is_partial_coxeter() && self.support().len() == self.rank() - 1
    }

    /// `true` when the permutation is a single cycle through all `n` points.
    pub fn is_n_cycle(&self) -> bool {
        let n = self.rank();
        let mut seen = 1usize;
        let mut j = self.apply(1);
        while j != 1 {
            seen += 1;
            j = self.apply(j);
        }
        seen == n
    }

    /// Cycle notation with fixed points omitted, e.g. `(1 5)(2 3)`.
    pub fn cycle_string(&self) -> String {
        let n = self.rank();
        let mut visited = vec![false; n];
        let mut out = String::new();
        for start in 1..=n {
            if visited[start - 1] || self.apply(start) == start {
                visited[start - 1] = true;
                continue;
            }
            out.push('(');
            let mut j = start;
            loop {
                visited[j - 1] = true;
                if j != start {
                    out.push(' ');
                }
                out.push_str(&j.to_string());
                j = self.apply(j);
                if j == start {
                    break;
                }
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.images
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(images)
    }
}

/// Bruhat order on `W_0`.
///
/// `x ≤ w` iff some (equivalently any) reduced word of `w` contains a reduced
/// word of `x` as a subword. Decided here by the prefix dominance criterion:
/// for every `k`, the increasing rearrangement of `x(1..k)` is entrywise at
/// most that of `w(1..k)`.
pub fn bruhat_leq(x: &Permutation, w: &Permutation) -> bool {
    assert_eq!(x.rank(), w.rank(), "rank mismatch in Bruhat comparison");
    let n = x.rank();
    let mut xs: Vec<usize> = Vec::with_capacity(n);
    let mut ws: Vec<usize> = Vec::with_capacity(n);
    for k in 0..n {
        let xv = x.images[k];
        let wv = w.images[k];
        xs.insert(xs.binary_search(&xv).unwrap_err(), xv);
        ws.insert(ws.binary_search(&wv).unwrap_err(), wv);
        if xs.iter().zip(&ws).any(|(a, b)| a > b) {
            return false;
        }
    }
    true
}

/// An element `φ^λ w` of the extended affine Weyl group, acting on the
/// cocharacter lattice by `v ↦ w(v) + λ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineElement {
    translation: Cocharacter,
    finite_part: Permutation,
}

impl AffineElement {
    pub fn new(translation: Cocharacter, finite_part: Permutation) -> Self {
        assert_eq!(translation.rank(), finite_part.rank(), "rank mismatch");
        AffineElement {
            translation,
            finite_part,
        }
    }

    /// The shift element `η = φ^{v_1} τ`, a single step of
    /// [`Cocharacter::eta_shift`].
    pub fn eta(n: usize) -> Self {
        AffineElement {
            translation: Cocharacter::unit(n, 1),
            finite_part: Permutation::tau(n),
        }
    }

    pub fn translation(&self) -> &Cocharacter {
        &self.translation
    }

    pub fn finite_part(&self) -> &Permutation {
        &self.finite_part
    }

    pub fn act(&self, v: &Cocharacter) -> Cocharacter {
        self.finite_part.act(v).add(&self.translation)
    }

    /// `φ^λ w · φ^μ x = φ^{λ + w(μ)} (w ∘ x)`.
    pub fn compose(&self, other: &AffineElement) -> AffineElement {
        AffineElement {
            translation: self
                .translation
                .add(&self.finite_part.act(&other.translation)),
            finite_part: self.finite_part.compose(&other.finite_part),
        }
    }

    pub fn pow(&self, k: u32) -> AffineElement {
        let n = self.translation.rank();
        let mut out = AffineElement::new(Cocharacter::zero(n), Permutation::identity(n));
        for _ in 0..k {
            out = out.compose(self);
        }
        out
    }
}
