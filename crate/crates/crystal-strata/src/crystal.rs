//! `GL(n)` crystals realized on words and semistandard tableaux.
//!
//! The canonical carrier is the box sequence ([`TensorElement`]): the
//! raising/lowering operators and the factor bookkeeping needed elsewhere are
//! positional. A [`Tableau`] is a view of such a word through its column
//! reading, convertible in both directions.
//!
//! The reading order is fixed once and for all: down columns, top to bottom,
//! rightmost column first. All signatures, operators and factorizations use
//! that order.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::lattice::{Cocharacter, Permutation};
use crate::{Error, Result};

/// An element of the `N`-fold tensor power of the box crystal: a word in the
/// letters `1..=n`, leftmost box first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TensorElement {
    n: usize,
    boxes: Vec<usize>,
}

/// Outcome of the signature (bracketing) scan for one simple index.
///
/// `reduced` is the surviving word after all `+-` cancellations, e.g. `--+`;
/// targets are 0-based positions into the box sequence, absent when the
/// corresponding operator kills the element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Signature {
    pub reduced: String,
    pub epsilon: usize,
    pub phi: usize,
    pub e_target: Option<usize>,
    pub f_target: Option<usize>,
}

impl TensorElement {
    pub fn new(n: usize, boxes: Vec<usize>) -> Result<Self> {
        if boxes.iter().any(|&b| b == 0 || b > n) {
            return Err(Error::Config(format!(
                "box letters must lie in 1..={n}: {boxes:?}"
            )));
        }
        Ok(TensorElement { n, boxes })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn boxes(&self) -> &[usize] {
        &self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// Letter counts `(k_1, …, k_n)`.
    pub fn weight(&self) -> Cocharacter {
        let mut counts = vec![0i64; self.n];
        for &b in &self.boxes {
            counts[b - 1] += 1;
        }
        Cocharacter::new(counts)
    }

    /// Positions of the surviving minuses and pluses for index `i`.
    ///
    /// A box `i` reads as `+`, a box `i+1` as `-`; adjacent `+-` pairs cancel
    /// until none remain. After cancellation every surviving minus precedes
    /// every surviving plus.
    fn scan(&self, i: usize) -> (Vec<usize>, Vec<usize>) {
        debug_assert!(i >= 1 && i < self.n);
        let mut minuses = Vec::new();
        let mut stack = Vec::new();
        for (pos, &b) in self.boxes.iter().enumerate() {
            if b == i {
                stack.push(pos);
            } else if b == i + 1 && stack.pop().is_none() {
                minuses.push(pos);
            }
        }
        (minuses, stack)
    }

    pub fn signature(&self, i: usize) -> Signature {
        let (minuses, pluses) = self.scan(i);
        let mut reduced = String::with_capacity(minuses.len() + pluses.len());
        reduced.extend(std::iter::repeat_n('-', minuses.len()));
        reduced.extend(std::iter::repeat_n('+', pluses.len()));
        Signature {
            reduced,
            epsilon: minuses.len(),
            phi: pluses.len(),
            e_target: minuses.last().copied(),
            f_target: pluses.first().copied(),
        }
    }

    pub fn epsilon(&self, i: usize) -> usize {
        self.scan(i).0.len()
    }

    pub fn phi(&self, i: usize) -> usize {
        self.scan(i).1.len()
    }

    /// Raising operator: turns the rightmost surviving `i+1` into `i`.
    pub fn e(&self, i: usize) -> Option<TensorElement> {
        let pos = *self.scan(i).0.last()?;
        let mut out = self.clone();
        out.boxes[pos] = i;
        Some(out)
    }

    /// Lowering operator: turns the leftmost surviving `i` into `i+1`.
    pub fn f(&self, i: usize) -> Option<TensorElement> {
        let pos = *self.scan(i).1.first()?;
        let mut out = self.clone();
        out.boxes[pos] = i + 1;
        Some(out)
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⊗{:?}", self.boxes)
    }
}

/// A semistandard Young tableau with entries in `1..=n`: rows weakly
/// increase left to right, columns strictly increase top to bottom.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Tableau {
    #[serde(skip)]
    n: usize,
    shape: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(n: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        if shape.contains(&0) || shape.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSemistandard);
        }
        if rows.len() > n {
            return Err(Error::NotSemistandard);
        }
        for r in 0..rows.len() {
            for c in 0..rows[r].len() {
                let v = rows[r][c];
                if v == 0 || v > n {
                    return Err(Error::NotSemistandard);
                }
                if c > 0 && rows[r][c - 1] > v {
                    return Err(Error::NotSemistandard);
                }
                if r > 0 && rows[r - 1][c] >= v {
                    return Err(Error::NotSemistandard);
                }
            }
        }
        Ok(Tableau { n, shape, rows })
    }

    /// The empty tableau (the unique element for shape `0`).
    pub fn empty(n: usize) -> Self {
        Tableau {
            n,
            shape: vec![],
            rows: vec![],
        }
    }

    /// The highest-weight filling of a dominant shape: row `i` filled with
    /// `i`. Trailing zero rows of `mu` contribute nothing.
    pub fn highest(n: usize, mu: &Cocharacter) -> Result<Self> {
        if mu.rank() != n || !mu.is_dominant() || mu.min_entry() < 0 {
            return Err(Error::Config(format!(
                "shape must be a dominant cocharacter with non-negative entries, got {mu}"
            )));
        }
        let rows: Vec<Vec<usize>> = (1..=n)
            .filter(|&i| mu.entry(i) > 0)
            .map(|i| vec![i; mu.entry(i) as usize])
            .collect();
        if rows.is_empty() {
            return Ok(Tableau::empty(n));
        }
        Tableau::new(n, rows)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Shape padded with zeros to a rank-`n` dominant cocharacter.
    pub fn shape_cochar(&self) -> Cocharacter {
        let mut entries = vec![0i64; self.n];
        for (i, &len) in self.shape.iter().enumerate() {
            entries[i] = len as i64;
        }
        Cocharacter::new(entries)
    }

    pub fn weight(&self) -> Cocharacter {
        let mut counts = vec![0i64; self.n];
        for row in &self.rows {
            for &v in row {
                counts[v - 1] += 1;
            }
        }
        Cocharacter::new(counts)
    }

    /// Column heights right to left; these are weakly increasing.
    pub fn column_heights(&self) -> Vec<usize> {
        let width = self.shape.first().copied().unwrap_or(0);
        (0..width)
            .rev()
            .map(|c| self.shape.iter().filter(|&&len| len > c).count())
            .collect()
    }

    /// The column reading: down columns top to bottom, rightmost first.
    pub fn column_reading(&self) -> TensorElement {
        let width = self.shape.first().copied().unwrap_or(0);
        let mut boxes = Vec::new();
        for c in (0..width).rev() {
            for row in &self.rows {
                if let Some(&v) = row.get(c) {
                    boxes.push(v);
                }
            }
        }
        TensorElement { n: self.n, boxes }
    }

    /// Rebuilds a tableau of the given shape from a column-reading word.
    pub fn from_column_reading(n: usize, shape: &[usize], word: &TensorElement) -> Result<Self> {
        let width = shape.first().copied().unwrap_or(0);
        let heights: Vec<usize> = (0..width)
            .map(|c| shape.iter().filter(|&&len| len > c).count())
            .collect();
        if word.len() != heights.iter().sum::<usize>() {
            return Err(Error::NotSemistandard);
        }
        let mut columns: Vec<&[usize]> = Vec::with_capacity(width);
        let mut offset = 0;
        for c in (0..width).rev() {
            columns.push(&word.boxes()[offset..offset + heights[c]]);
            offset += heights[c];
        }
        columns.reverse();
        let rows: Vec<Vec<usize>> = (0..shape.len())
            .map(|r| (0..shape[r]).map(|c| columns[c][r]).collect())
            .collect();
        if rows.is_empty() {
            return Ok(Tableau::empty(n));
        }
        Tableau::new(n, rows)
    }

    /// Far-Eastern factorization: one indicator vector per column, rightmost
    /// column first.
    pub fn factorize(&self) -> FlatTuple {
        let width = self.shape.first().copied().unwrap_or(0);
        let mut parts = Vec::with_capacity(width);
        for c in (0..width).rev() {
            let mut part = vec![0u8; self.n];
            for row in &self.rows {
                if let Some(&v) = row.get(c) {
                    part[v - 1] = 1;
                }
            }
            parts.push(part);
        }
        FlatTuple { n: self.n, parts }
    }

    /// Concatenation of all rows, top row first (used for ordering).
    pub fn row_reading(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "∅");
        }
        let strings: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<String>())
            .collect();
        write!(f, "{}", strings.join("/"))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Common interface of the two crystal carriers.
pub trait CrystalElement: Sized + Clone {
    fn rank(&self) -> usize;
    fn weight(&self) -> Cocharacter;
    fn e(&self, i: usize) -> Option<Self>;
    fn f(&self, i: usize) -> Option<Self>;
    fn epsilon(&self, i: usize) -> usize;
    fn phi(&self, i: usize) -> usize;
}

impl CrystalElement for TensorElement {
    fn rank(&self) -> usize {
        self.n
    }
    fn weight(&self) -> Cocharacter {
        TensorElement::weight(self)
    }
    fn e(&self, i: usize) -> Option<Self> {
        TensorElement::e(self, i)
    }
    fn f(&self, i: usize) -> Option<Self> {
        TensorElement::f(self, i)
    }
    fn epsilon(&self, i: usize) -> usize {
        TensorElement::epsilon(self, i)
    }
    fn phi(&self, i: usize) -> usize {
        TensorElement::phi(self, i)
    }
}

impl CrystalElement for Tableau {
    fn rank(&self) -> usize {
        self.n
    }
    fn weight(&self) -> Cocharacter {
        Tableau::weight(self)
    }
    /// Operators act through the column reading; the image is again a
    /// column-reading word of the same shape.
    fn e(&self, i: usize) -> Option<Self> {
        let word = self.column_reading().e(i)?;
        Some(
            Tableau::from_column_reading(self.n, &self.shape, &word)
                .expect("raising preserves semistandardness"),
        )
    }
    fn f(&self, i: usize) -> Option<Self> {
        let word = self.column_reading().f(i)?;
        Some(
            Tableau::from_column_reading(self.n, &self.shape, &word)
                .expect("lowering preserves semistandardness"),
        )
    }
    fn epsilon(&self, i: usize) -> usize {
        self.column_reading().epsilon(i)
    }
    fn phi(&self, i: usize) -> usize {
        self.column_reading().phi(i)
    }
}

/// The Weyl group action on a crystal.
///
/// A simple reflection acts as `f_i^k` when `k = ⟨χ_{i,i+1}, wt⟩ ≥ 0` and as
/// `e_i^{-k}` otherwise; a general element acts through one fixed reduced
/// word (the result is word-independent).
pub fn weyl_act<T: CrystalElement>(w: &Permutation, t: &T) -> T {
    let mut out = t.clone();
    for &i in w.reduced_word().iter().rev() {
        out = simple_act(i, &out);
    }
    out
}

fn simple_act<T: CrystalElement>(i: usize, t: &T) -> T {
    let k = t.weight().simple_pairing(i);
    let mut out = t.clone();
    if k >= 0 {
        for _ in 0..k {
            out = out
                .f(i)
                .expect("phi >= pairing by the axiom phi - epsilon = pairing");
        }
    } else {
        for _ in 0..-k {
            out = out
                .e(i)
                .expect("epsilon >= -pairing by the axiom phi - epsilon = pairing");
        }
    }
    out
}

/// The conjugate of `t` with weight `target` (a rearrangement of `wt(t)`).
///
/// Independent of which sorting element is used to move the weight.
pub fn conjugate_with_weight<T: CrystalElement>(t: &T, target: &Cocharacter) -> Result<T> {
    let wt = t.weight();
    if !wt.is_conjugate_to(target) {
        return Err(Error::NotConjugate {
            got: target.as_slice().to_vec(),
            reference: wt.as_slice().to_vec(),
        });
    }
    // Any w with w(wt) = target works; compose the two sorting elements.
    let w = target
        .sorting_permutation()
        .compose(&wt.sorting_permutation().inverse());
    debug_assert_eq!(w.act(&wt), *target);
    Ok(weyl_act(&w, t))
}

/// A `d`-tuple of 0/1 vectors, each a conjugate of some `ω_k`; the flat
/// coordinates of a stratum and the factorized form of a tableau.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FlatTuple {
    #[serde(skip)]
    n: usize,
    parts: Vec<Vec<u8>>,
}

impl FlatTuple {
    pub fn new(n: usize, parts: Vec<Vec<u8>>) -> Result<Self> {
        for part in &parts {
            if part.len() != n || part.iter().any(|&b| b > 1) {
                return Err(Error::Config(format!(
                    "flat tuple parts must be 0/1 vectors of length {n}"
                )));
            }
        }
        Ok(FlatTuple { n, parts })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[Vec<u8>] {
        &self.parts
    }

    pub fn part_cochar(&self, l: usize) -> Cocharacter {
        Cocharacter::new(self.parts[l].iter().map(|&b| b as i64).collect())
    }

    /// 1-based positions of the ones in part `l` (a strictly increasing
    /// column word).
    pub fn one_set(&self, l: usize) -> Vec<usize> {
        self.parts[l]
            .iter()
            .enumerate()
            .filter(|(_, &b)| b == 1)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn sum(&self) -> Cocharacter {
        let mut total = Cocharacter::zero(self.n);
        for l in 0..self.parts.len() {
            total = total.add(&self.part_cochar(l));
        }
        total
    }

    /// Concatenates the column words of all parts into one tensor word.
    pub fn to_tensor(&self) -> TensorElement {
        let boxes: Vec<usize> = (0..self.parts.len())
            .flat_map(|l| self.one_set(l))
            .collect();
        TensorElement { n: self.n, boxes }
    }

    /// All tuples with the given column heights summing to `target`.
    ///
    /// Each part contributes at most one to each coordinate, which gives the
    /// feasibility prune: after `l` parts, every remaining coordinate deficit
    /// must fit in the number of parts left.
    pub fn enumerate_with_sum(n: usize, heights: &[usize], target: &Cocharacter) -> Vec<FlatTuple> {
        assert_eq!(target.rank(), n);
        let total: usize = heights.iter().sum();
        if target.as_slice().iter().any(|&v| v < 0) || target.total() != total as i64 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut parts: Vec<Vec<u8>> = Vec::with_capacity(heights.len());
        let mut deficit: Vec<i64> = target.as_slice().to_vec();
        fn rec(
            n: usize,
            heights: &[usize],
            l: usize,
            deficit: &mut Vec<i64>,
            parts: &mut Vec<Vec<u8>>,
            out: &mut Vec<FlatTuple>,
        ) {
            let remaining = (heights.len() - l) as i64;
            if deficit.iter().any(|&d| d < 0 || d > remaining) {
                return;
            }
            if l == heights.len() {
                out.push(FlatTuple {
                    n,
                    parts: parts.clone(),
                });
                return;
            }
            // Choose the one-set of part l among coordinates still in deficit.
            let candidates: Vec<usize> = (0..n).filter(|&i| deficit[i] > 0).collect();
            let k = heights[l];
            if candidates.len() < k {
                return;
            }
            let mut choice = vec![0usize; k];
            choose(
                n,
                heights,
                l,
                &candidates,
                0,
                0,
                &mut choice,
                deficit,
                parts,
                out,
            );
        }
        #[allow(clippy::too_many_arguments)]
        fn choose(
            n: usize,
            heights: &[usize],
            l: usize,
            candidates: &[usize],
            from: usize,
            depth: usize,
            choice: &mut Vec<usize>,
            deficit: &mut Vec<i64>,
            parts: &mut Vec<Vec<u8>>,
            out: &mut Vec<FlatTuple>,
        ) {
            let k = heights[l];
            if depth == k {
                let mut part = vec![0u8; n];
                for &i in choice.iter() {
                    part[i] = 1;
                    deficit[i] -= 1;
                }
                parts.push(part);
                rec(n, heights, l + 1, deficit, parts, out);
                parts.pop();
                for &i in choice.iter() {
                    deficit[i] += 1;
                }
                return;
            }
            for idx in from..candidates.len() {
                if candidates.len() - idx < k - depth {
                    break;
                }
                choice[depth] = candidates[idx];
                choose(
                    n,
                    heights,
                    l,
                    candidates,
                    idx + 1,
                    depth + 1,
                    choice,
                    deficit,
                    parts,
                    out,
                );
            }
        }
        rec(n, heights, 0, &mut deficit, &mut parts, &mut out);
        out.sort_unstable();
        out
    }
}

impl fmt::Debug for FlatTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: Vec<String> = (0..self.parts.len())
            .map(|l| {
                format!(
                    "{{{}}}",
                    self.one_set(l)
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
        write!(f, "[{}]", sets.join(" "))
    }
}

/// A lowering edge `from --i--> to` between element indices.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CrystalEdge {
    pub from: usize,
    pub to: usize,
    pub i: usize,
}

/// The crystal of a dominant shape: all semistandard tableaux reachable from
/// the highest-weight filling, with the lowering edges between them.
#[derive(Clone, Debug)]
pub struct Crystal {
    n: usize,
    mu: Cocharacter,
    elements: Vec<Tableau>,
    edges: Vec<CrystalEdge>,
    index: BTreeMap<Vec<Vec<usize>>, usize>,
}

impl Crystal {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn mu(&self) -> &Cocharacter {
        &self.mu
    }

    /// Elements in row-reading order (lexicographic, deterministic).
    pub fn elements(&self) -> &[Tableau] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn edges(&self) -> &[CrystalEdge] {
        &self.edges
    }

    pub fn position(&self, t: &Tableau) -> Option<usize> {
        self.index.get(t.rows()).copied()
    }

    /// Indices of all elements of the given weight.
    pub fn weight_space(&self, lam: &Cocharacter) -> Vec<usize> {
        self.elements
            .iter()
            .enumerate()
            .filter(|(_, t)| &t.weight() == lam)
            .map(|(idx, _)| idx)
            .collect()
    }
}

/// Generates the full crystal of the dominant shape `mu` by closing the
/// highest-weight tableau under all lowering operators.
pub fn generate_crystal(n: usize, mu: &Cocharacter) -> Result<Crystal> {
    let highest = Tableau::highest(n, mu)?;
    let mut seen: BTreeSet<Tableau> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(highest.clone());
    queue.push_back(highest);
    while let Some(t) = queue.pop_front() {
        for i in 1..n {
            if let Some(next) = t.f(i) {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    // BTreeSet order on equal shapes is row-reading order.
    let elements: Vec<Tableau> = seen.into_iter().collect();
    let index: BTreeMap<Vec<Vec<usize>>, usize> = elements
        .iter()
        .enumerate()
        .map(|(idx, t)| (t.rows().to_vec(), idx))
        .collect();
    let mut edges = Vec::new();
    for (from, t) in elements.iter().enumerate() {
        for i in 1..n {
            if let Some(next) = t.f(i) {
                let to = *index.get(next.rows()).expect("closure contains image");
                edges.push(CrystalEdge { from, to, i });
            }
        }
    }
    Ok(Crystal {
        n,
        mu: mu.clone(),
        elements,
        edges,
        index,
    })
}

/// Projects a tensor word to its highest-weight component.
///
/// Raises by the smallest applicable index until every `ε_i` vanishes; the
/// resulting weight `μ'` is dominant and the recorded path replayed with
/// lowering operators from the highest tableau of shape `μ'` identifies the
/// component element.
pub fn project_to_highest(t: &TensorElement) -> (Cocharacter, Tableau) {
    let n = t.rank();
    let mut current = t.clone();
    let mut path = Vec::new();
    while let Some(i) = (1..n).find(|&i| current.epsilon(i) > 0) {
        current = current.e(i).expect("epsilon > 0");
        path.push(i);
    }
    let mu = current.weight();
    debug_assert!(mu.is_dominant());
    let mut out = Tableau::highest(n, &mu).expect("highest weight of a word is dominant");
    for &i in path.iter().rev() {
        out = out.f(i).expect("replayed path stays in the crystal");
    }
    (mu, out)
}

/// The tensor-product operators computed by the recursive pair rule, used as
/// an independent cross-check of the signature scan.
///
/// For a pair, `e` goes left iff `φ(left) ≥ ε(right)` and `f` goes left iff
/// `φ(left) > ε(right)`; a word is bracketed as `b_1 ⊗ (b_2 ⊗ ⋯ ⊗ b_N)`.
pub mod tensor_rule {
    fn single_epsilon(b: usize, i: usize) -> i64 {
        (b == i + 1) as i64
    }

    fn single_phi(b: usize, i: usize) -> i64 {
        (b == i) as i64
    }

    fn single_pairing(b: usize, i: usize) -> i64 {
        single_phi(b, i) - single_epsilon(b, i)
    }

    pub fn epsilon(boxes: &[usize], i: usize) -> i64 {
        match boxes {
            [] => 0,
            [b] => single_epsilon(*b, i),
            [head, tail @ ..] => {
                single_epsilon(*head, i).max(epsilon(tail, i) - single_pairing(*head, i))
            }
        }
    }

    pub fn phi(boxes: &[usize], i: usize) -> i64 {
        match boxes {
            [] => 0,
            [b] => single_phi(*b, i),
            [head, tail @ ..] => phi(tail, i).max(single_phi(*head, i) + pairing(tail, i)),
        }
    }

    fn pairing(boxes: &[usize], i: usize) -> i64 {
        boxes.iter().map(|&b| single_pairing(b, i)).sum()
    }

    pub fn e(boxes: &[usize], i: usize) -> Option<Vec<usize>> {
        match boxes {
            [] => None,
            [b] => (*b == i + 1).then(|| vec![i]),
            [head, tail @ ..] => {
                let mut out = boxes.to_vec();
                if single_phi(*head, i) >= epsilon(tail, i) {
                    if *head != i + 1 {
                        return None;
                    }
                    out[0] = i;
                } else {
                    out.splice(1.., e(tail, i)?);
                }
                Some(out)
            }
        }
    }

    pub fn f(boxes: &[usize], i: usize) -> Option<Vec<usize>> {
        match boxes {
            [] => None,
            [b] => (*b == i).then(|| vec![i + 1]),
            [head, tail @ ..] => {
                let mut out = boxes.to_vec();
                if single_phi(*head, i) > epsilon(tail, i) {
                    if *head != i {
                        return None;
                    }
                    out[0] = i + 1;
                } else {
                    out.splice(1.., f(tail, i)?);
                }
                Some(out)
            }
        }
    }
}
