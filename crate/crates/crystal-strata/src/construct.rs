//! From a tableau of weight `λ_b` to the top cocharacter tuples of its
//! shift class.
//!
//! The pipeline for `b ∈ B_μ(λ_b)`:
//!
//! 1. raise `b` to its opposite conjugate `b^op` letter by letter along the
//!    fixed word of [`raising_word`], recording which column factor each
//!    raising step lands in — this yields the word tuple `(w_1, …, w_d)` and
//!    the Coxeter element `w(b) = w_1⁻¹ ⋯ w_d⁻¹`;
//! 2. enumerate the `n` elements `u` conjugating `τ^m` to `w(b)`
//!    ([`upsilon`]);
//! 3. for each `u`, assemble the tuple
//!    `ξ_j = u·ξ(u⁻¹b⁻) + Σ_{j'<j} u w_1⁻¹⋯w_{j'−1}⁻¹ wt(b_{j'})`
//!    from the suffix sums of `ε_i` ([`xi_vector`]) and the factor weights.
//!
//! The report checks every claimed property of the output: the sorting
//! elements of the `ξ_j`, the flat coordinates recovering the column
//! factorization, top-dimensionality, the closure identity, and the shift
//! relations among the `n` tuples.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::crystal::{
    conjugate_with_weight, weyl_act, CrystalElement, FlatTuple, Tableau, TensorElement,
};
use crate::lattice::{Cocharacter, Permutation};
use crate::stratum::{CocharTuple, SuperbasicData};
use crate::{Error, Result};

/// The fixed reduced word `(s_{i_{m_0−1}} ⋯ s_{n−1}) ⋯ (s_1 ⋯ s_{i_1−1})` in
/// product order (rightmost block acts first).
///
/// Its letters are `1..n-1`, each exactly once; acting on `λ_b` it produces
/// the reversed vector `λ_b^op`, and on a crystal element of weight `λ_b`
/// every letter acts as a raising operator.
pub fn raising_word(data: &SuperbasicData) -> Vec<usize> {
    let m0 = data.m0();
    let mut word = Vec::with_capacity(data.n() - 1);
    for k in (0..m0).rev() {
        word.extend(data.breakpoint(k)..data.breakpoint(k + 1));
    }
    word
}

/// Suffix sums of the raising distances:
/// `ξ(b') = (ε_1 + ⋯ + ε_{n−1}, ε_2 + ⋯ + ε_{n−1}, …, ε_{n−1}, 0)`.
pub fn xi_vector<T: CrystalElement>(t: &T) -> Cocharacter {
    let n = t.rank();
    let mut entries = vec![0i64; n];
    let mut acc = 0i64;
    for i in (1..n).rev() {
        acc += t.epsilon(i) as i64;
        entries[i - 1] = acc;
    }
    Cocharacter::new(entries)
}

/// Witness data for the prefix-count criterion on conjugates of `λ_b`.
///
/// `λ` is allowed when it can be reached from `λ_b` by moving each raised
/// entry leftward at most once; equivalently `c_{i_k−1} ≤ k` and
/// `c'_{i_{m_0−k}+1} ≤ k` for all `k`, where `c_i` (resp. `c'_i`) counts the
/// entries equal to `⌊m/n⌋+1` among the first `i` (resp. last `n−i+1`)
/// positions.
#[derive(Clone, Debug)]
pub struct AllowedWitness {
    pub lambda: Cocharacter,
    pub allowed: bool,
    /// The unique partial Coxeter element with `w·λ_b = λ`, present iff
    /// allowed.
    pub partial_coxeter: Option<Permutation>,
    /// `c_1, …, c_n`.
    pub prefix_counts: Vec<usize>,
    /// `c'_1, …, c'_n`.
    pub suffix_counts: Vec<usize>,
}

/// Evaluates the prefix-count criterion for a conjugate of `λ_b`.
pub fn is_allowed(lam: &Cocharacter, data: &SuperbasicData) -> Result<AllowedWitness> {
    let n = data.n();
    let lam_b = data.lambda_b();
    if !lam.is_conjugate_to(&lam_b) {
        return Err(Error::NotConjugate {
            got: lam.as_slice().to_vec(),
            reference: lam_b.as_slice().to_vec(),
        });
    }
    let high = data.mbar() + 1;
    let mut prefix = vec![0usize; n];
    let mut acc = 0;
    for i in 1..=n {
        acc += usize::from(lam.entry(i) == high);
        prefix[i - 1] = acc;
    }
    let mut suffix = vec![0usize; n];
    acc = 0;
    for i in (1..=n).rev() {
        acc += usize::from(lam.entry(i) == high);
        suffix[i - 1] = acc;
    }
    let m0 = data.m0();
    let allowed = (1..=m0).all(|k| {
        prefix[data.breakpoint(k) - 1 - 1] <= k && suffix[data.breakpoint(m0 - k) + 1 - 1] <= k
    });
    let partial_coxeter = if allowed {
        // Block t_k moves the raised entry at breakpoint k to its position
        // in λ; the full element is t_{m_0} ∘ ⋯ ∘ t_1.
        let mut word = Vec::new();
        for k in (1..=m0).rev() {
            let ik = data.breakpoint(k);
            if prefix[ik - 1 - 1] == k {
                let jk = (data.breakpoint(k - 1)..ik)
                    .filter(|&j| lam.entry(j) == high)
                    .max()
                    .expect("prefix count k forces a raised entry in the block");
                word.extend(jk..ik);
            }
        }
        let w = Permutation::from_word(n, &word);
        if w.act(&lam_b) != *lam || !w.is_partial_coxeter() {
            return Err(Error::CheckFailed(format!(
                "witness {w:?} does not carry {lam_b} to {lam}"
            )));
        }
        Some(w)
    } else {
        None
    };
    Ok(AllowedWitness {
        lambda: lam.clone(),
        allowed,
        partial_coxeter,
        prefix_counts: prefix,
        suffix_counts: suffix,
    })
}

/// The `n` solutions of `u⁻¹ τ^m u = w_b`, ordered by `u(1)`.
///
/// Both `τ^m` and `w_b` are `n`-cycles; a solution is fixed by the image of
/// one point and the rest follows around the cycle.
pub fn upsilon(w_b: &Permutation, data: &SuperbasicData) -> Result<Vec<Permutation>> {
    let n = data.n();
    if w_b.rank() != n {
        return Err(Error::RankMismatch(w_b.rank(), n));
    }
    if !w_b.is_n_cycle() {
        return Err(Error::NotAnNCycle);
    }
    let tau_m = data.tau_power_m();
    let mut out = Vec::with_capacity(n);
    for z in 1..=n {
        let mut images = vec![0usize; n];
        let mut j = 1usize;
        let mut val = z;
        loop {
            images[j - 1] = val;
            j = w_b.apply(j);
            val = tau_m.apply(val);
            if j == 1 {
                break;
            }
        }
        let u = Permutation::from_one_line(images)?;
        debug_assert_eq!(u.inverse().compose(&tau_m).compose(&u), *w_b);
        out.push(u);
    }
    out.sort_by_key(|u| u.apply(1));
    Ok(out)
}

/// Everything derived from one tableau of weight `λ_b`.
#[derive(Clone, Debug)]
pub struct Construction {
    data: SuperbasicData,
    mu: Cocharacter,
    b: Tableau,
    fe: FlatTuple,
    factors: Vec<TensorElement>,
    w_tuple: Vec<Permutation>,
    b_op: Tableau,
    w_of_b: Permutation,
    upsilon: Vec<Permutation>,
    b_minus: Tableau,
}

impl Construction {
    /// Runs steps 1 and 2 of the pipeline and validates every intermediate.
    pub fn new(data: SuperbasicData, b: Tableau) -> Result<Self> {
        let n = data.n();
        if b.rank() != n {
            return Err(Error::RankMismatch(b.rank(), n));
        }
        if b.shape().len() >= n {
            return Err(Error::Config(format!(
                "shape {:?} must have fewer than n = {n} rows",
                b.shape()
            )));
        }
        let lam_b = data.lambda_b();
        if b.weight() != lam_b {
            return Err(Error::WeightMismatch {
                expected: lam_b.as_slice().to_vec(),
                got: b.weight().as_slice().to_vec(),
            });
        }
        let mu = b.shape_cochar();
        if mu.max_entry() == 0 {
            return Err(Error::Config("shape must be nonzero".into()));
        }

        let fe = b.factorize();
        let d = fe.len();
        let heights = b.column_heights();
        let mut bounds = vec![0usize; d + 1];
        for j in 0..d {
            bounds[j + 1] = bounds[j] + heights[j];
        }

        // Raise to b^op, recording the factor of each changed box.
        let word = raising_word(&data);
        let mut t = b.column_reading();
        let mut recorded: Vec<Vec<usize>> = vec![Vec::new(); d];
        for &i in word.iter().rev() {
            if t.weight().simple_pairing(i) != -1 {
                return Err(Error::CheckFailed(format!(
                    "letter {i} does not pair to -1 against the current weight"
                )));
            }
            let sig = t.signature(i);
            let pos = sig
                .e_target
                .ok_or_else(|| Error::CheckFailed(format!("letter {i} has no raising target")))?;
            let factor = bounds.partition_point(|&start| start <= pos) - 1;
            recorded[factor].push(i);
            t = t.e(i).expect("raising target exists");
        }
        let b_op = Tableau::from_column_reading(n, b.shape(), &t)?;
        if b_op.weight() != data.lambda_b_opposite() {
            return Err(Error::CheckFailed("weight of b^op is not reversed".into()));
        }

        // Later-applied letters compose on the left.
        let w_tuple: Vec<Permutation> = recorded
            .iter()
            .map(|letters| {
                let reversed: Vec<usize> = letters.iter().rev().copied().collect();
                Permutation::from_word(n, &reversed)
            })
            .collect();

        // The factorwise action reproduces the columns of b^op.
        let factors: Vec<TensorElement> = (0..d)
            .map(|j| TensorElement::new(n, fe.one_set(j)).expect("letters in range"))
            .collect();
        let op_fe = b_op.factorize();
        for j in 0..d {
            let moved = weyl_act(&w_tuple[j], &factors[j]);
            if moved.boxes()
                != TensorElement::new(n, op_fe.one_set(j))
                    .expect("in range")
                    .boxes()
            {
                return Err(Error::CheckFailed(format!(
                    "factor {j} of b^op is not w_{} applied to factor {j} of b",
                    j + 1
                )));
            }
        }
        let mut letter_count = vec![0usize; n];
        for w in &w_tuple {
            if !w.is_partial_coxeter() {
                return Err(Error::CheckFailed(
                    "factor word is not partial Coxeter".into(),
                ));
            }
            for i in w.support() {
                letter_count[i] += 1;
            }
        }
        if (1..n).any(|i| letter_count[i] != 1) {
            return Err(Error::CheckFailed(
                "each simple reflection must appear exactly once across the factor words".into(),
            ));
        }

        let w_of_b = w_tuple
            .iter()
            .fold(Permutation::identity(n), |acc, w| acc.compose(&w.inverse()));
        if !w_of_b.is_coxeter() {
            return Err(Error::CheckFailed("w(b) is not a Coxeter element".into()));
        }

        let upsilon = upsilon(&w_of_b, &data)?;
        let b_minus = conjugate_with_weight(&b, &data.lambda_b_antidominant())?;

        Ok(Construction {
            data,
            mu,
            b,
            fe,
            factors,
            w_tuple,
            b_op,
            w_of_b,
            upsilon,
            b_minus,
        })
    }

    pub fn data(&self) -> &SuperbasicData {
        &self.data
    }

    pub fn mu(&self) -> &Cocharacter {
        &self.mu
    }

    pub fn b(&self) -> &Tableau {
        &self.b
    }

    pub fn fe(&self) -> &FlatTuple {
        &self.fe
    }

    pub fn w_tuple(&self) -> &[Permutation] {
        &self.w_tuple
    }

    pub fn b_op(&self) -> &Tableau {
        &self.b_op
    }

    pub fn w_of_b(&self) -> &Permutation {
        &self.w_of_b
    }

    pub fn upsilon(&self) -> &[Permutation] {
        &self.upsilon
    }

    pub fn b_minus(&self) -> &Tableau {
        &self.b_minus
    }

    /// The conjugate `u⁻¹ b⁻`.
    pub fn twisted_antidominant(&self, u: &Permutation) -> Tableau {
        weyl_act(&u.inverse(), &self.b_minus)
    }

    /// `ξ(u⁻¹ b⁻)`.
    pub fn xi_vector_for(&self, u: &Permutation) -> Cocharacter {
        xi_vector(&self.twisted_antidominant(u))
    }

    /// The prefix elements `u, u w_1⁻¹, …, u w_1⁻¹⋯w_{d−1}⁻¹`.
    pub fn upsilon_prefixes(&self, u: &Permutation) -> Vec<Permutation> {
        let mut out = Vec::with_capacity(self.w_tuple.len());
        let mut prefix = u.clone();
        for w in &self.w_tuple {
            out.push(prefix.clone());
            prefix = prefix.compose(&w.inverse());
        }
        out
    }

    /// Step 3 of the pipeline for one `u ∈ Υ(b)`.
    pub fn xi_tuple(&self, u: &Permutation) -> Result<CocharTuple> {
        if !self.upsilon.contains(u) {
            return Err(Error::NotInUpsilon);
        }
        let d = self.w_tuple.len();
        let prefixes = self.upsilon_prefixes(u);
        let mut lambdas = Vec::with_capacity(d);
        let mut acc = u.act(&self.xi_vector_for(u));
        for (j, prefix) in prefixes.iter().enumerate() {
            lambdas.push(acc.clone());
            if j + 1 < d {
                acc = acc.add(&prefix.act(&self.factors[j].weight()));
            }
        }
        CocharTuple::new(&self.data, self.mu.clone(), lambdas)
    }

    /// The weight identity behind the closure relation:
    /// `w(b)(ξ(u⁻¹b⁻) + u⁻¹λ_b⁻) = ξ(u⁻¹b⁻) + Σ_j w_1⁻¹⋯w_{j−1}⁻¹ wt(b_j)`.
    pub fn coxeter_weight_identity_holds(&self, u: &Permutation) -> bool {
        let xiv = self.xi_vector_for(u);
        let twisted = u.inverse().act(&self.data.lambda_b_antidominant());
        let lhs = self.w_of_b.act(&xiv.add(&twisted));
        let mut rhs = xiv;
        let mut prefix = Permutation::identity(self.data.n());
        for (j, w) in self.w_tuple.iter().enumerate() {
            rhs = rhs.add(&prefix.act(&self.factors[j].weight()));
            prefix = prefix.compose(&w.inverse());
        }
        lhs == rhs
    }

    /// Runs the whole pipeline and verifies the full contract.
    pub fn report(&self) -> Result<ConstructionReport> {
        let n = self.data.n();
        let d = self.w_tuple.len();
        if self.upsilon.len() != n {
            return Err(Error::CheckFailed(
                "conjugating set must have n elements".into(),
            ));
        }
        let mut per_upsilon = Vec::with_capacity(n);
        let mut canonical: Option<CocharTuple> = None;
        let mut offsets = Vec::with_capacity(n);
        for u in &self.upsilon {
            let tuple = self.xi_tuple(u)?;
            let prefixes = self.upsilon_prefixes(u);
            for (j, prefix) in prefixes.iter().enumerate() {
                if &tuple.lambda(j).sorting_permutation() != prefix {
                    return Err(Error::CheckFailed(format!(
                        "sorting element of xi_{} differs from the prefix element",
                        j + 1
                    )));
                }
            }
            if tuple.lambda(0).min_entry() != 0 || tuple.lambda(0).as_slice().iter().any(|&v| v < 0)
            {
                return Err(Error::CheckFailed(
                    "xi_1 must be non-negative with a zero entry".into(),
                ));
            }
            match tuple.flat_of() {
                Some(flat) if flat == self.fe => {}
                _ => {
                    return Err(Error::CheckFailed(
                        "flat coordinates do not recover the column factorization".into(),
                    ))
                }
            }
            if !tuple.is_top() {
                return Err(Error::CheckFailed("xi tuple is not top-dimensional".into()));
            }
            // Closure: b·ξ_1 − ξ_d = u w_1⁻¹⋯w_{d−1}⁻¹ wt(b_d).
            let closure = self.data.b_act(tuple.lambda(0)).sub(tuple.lambda(d - 1));
            if closure != prefixes[d - 1].act(&self.factors[d - 1].weight()) {
                return Err(Error::CheckFailed("closure relation fails".into()));
            }
            let (class, offset) = tuple.eta_class();
            match &canonical {
                None => canonical = Some(class),
                Some(existing) if *existing == class => {}
                Some(_) => {
                    return Err(Error::CheckFailed(
                        "tuples of one tableau fall in different shift classes".into(),
                    ))
                }
            }
            offsets.push(offset);
            per_upsilon.push((u.clone(), tuple, offset));
        }
        let eta_class = canonical.expect("upsilon is nonempty");
        let mut sorted = offsets.clone();
        sorted.sort_unstable();
        if sorted != (0..n as i64).collect::<Vec<_>>() {
            return Err(Error::CheckFailed(format!(
                "shift offsets must be exactly 0..n-1, got {sorted:?}"
            )));
        }
        Ok(ConstructionReport {
            b: self.b.clone(),
            fe: self.fe.clone(),
            w_tuple: self.w_tuple.clone(),
            w_of_b: self.w_of_b.clone(),
            upsilon: self.upsilon.clone(),
            xi_by_upsilon: per_upsilon,
            eta_class,
            b_op: self.b_op.clone(),
        })
    }
}

/// `construct_all`: the full pipeline for one tableau.
pub fn construct_all(data: SuperbasicData, b: Tableau) -> Result<ConstructionReport> {
    Construction::new(data, b)?.report()
}

/// The verified output of the pipeline for one tableau.
#[derive(Clone, Debug)]
pub struct ConstructionReport {
    pub b: Tableau,
    pub fe: FlatTuple,
    pub w_tuple: Vec<Permutation>,
    pub w_of_b: Permutation,
    pub upsilon: Vec<Permutation>,
    /// One tuple per `u`, in the order of `upsilon`, with the shift offset
    /// relative to the canonical class representative.
    pub xi_by_upsilon: Vec<(Permutation, CocharTuple, i64)>,
    pub eta_class: CocharTuple,
    pub b_op: Tableau,
}

impl ConstructionReport {
    /// The tuples ordered so that the `i`-th is `η^{i−1}` applied to the
    /// first; the first is the canonical class representative.
    pub fn eta_ordered_tuples(&self) -> Vec<CocharTuple> {
        let mut pairs: Vec<(i64, &CocharTuple)> = self
            .xi_by_upsilon
            .iter()
            .map(|(_, tuple, offset)| (*offset, tuple))
            .collect();
        pairs.sort_by_key(|(offset, _)| *offset);
        pairs.into_iter().map(|(_, tuple)| tuple.clone()).collect()
    }
}

impl Serialize for ConstructionReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let xi: BTreeMap<String, Vec<Cocharacter>> = self
            .xi_by_upsilon
            .iter()
            .map(|(u, tuple, _)| {
                let key = u
                    .one_line()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",");
                (key, tuple.lambdas().to_vec())
            })
            .collect();
        let mut s = serializer.serialize_struct("ConstructionReport", 7)?;
        s.serialize_field("b", &self.b)?;
        s.serialize_field("fe", &self.fe)?;
        s.serialize_field("w_tuple", &self.w_tuple)?;
        s.serialize_field("w_of_b", &self.w_of_b)?;
        s.serialize_field("upsilon", &self.upsilon)?;
        s.serialize_field("xi", &xi)?;
        s.serialize_field("eta_class", &self.eta_class)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn cochar(v: &[i64]) -> Cocharacter {
        Cocharacter::new(v.to_vec())
    }

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v.to_vec()).unwrap()
    }

    fn sample() -> (SuperbasicData, Tableau) {
        let data = SuperbasicData::new(5, 12).unwrap();
        let b = Tableau::new(
            5,
            vec![vec![1, 1, 3, 3], vec![2, 2, 4], vec![3, 4, 5], vec![5, 5]],
        )
        .unwrap();
        (data, b)
    }

    #[test]
    fn raising_word_examples() {
        assert_eq!(
            raising_word(&SuperbasicData::new(5, 12).unwrap()),
            vec![3, 4, 1, 2]
        );
        // m0 = 1 gives the single block 1..n-1.
        assert_eq!(
            raising_word(&SuperbasicData::new(4, 1).unwrap()),
            vec![1, 2, 3]
        );
        assert_eq!(
            raising_word(&SuperbasicData::new(3, 2).unwrap()),
            vec![2, 1]
        );
        // Acting on λ_b yields λ_b^op.
        for (n, m) in [(5usize, 12usize), (4, 1), (3, 2), (5, 3)] {
            let data = SuperbasicData::new(n, m).unwrap();
            let w = Permutation::from_word(n, &raising_word(&data));
            assert!(w.is_coxeter());
            assert_eq!(w.act(&data.lambda_b()), data.lambda_b_opposite());
        }
        assert_eq!(
            SuperbasicData::new(3, 2).unwrap().lambda_b_opposite(),
            cochar(&[1, 1, 0])
        );
    }

    #[test]
    fn w_tuple_of_the_sample() {
        let (data, b) = sample();
        let c = Construction::new(data, b).unwrap();
        assert_eq!(
            c.w_tuple(),
            &[
                Permutation::identity(5),
                Permutation::from_word(5, &[1, 2]),
                Permutation::simple(5, 3),
                Permutation::simple(5, 4),
            ]
        );
        assert_eq!(c.w_of_b(), &Permutation::from_word(5, &[2, 1, 3, 4]));
        assert_eq!(
            c.b_op().rows(),
            &[vec![1, 1, 1, 3], vec![2, 2, 4], vec![3, 3, 5], vec![4, 5]]
        );
    }

    #[test]
    fn w_tuple_of_the_smallest_case() {
        let data = SuperbasicData::new(2, 1).unwrap();
        let b = Tableau::new(2, vec![vec![2]]).unwrap();
        let c = Construction::new(data, b).unwrap();
        assert_eq!(c.w_tuple(), &[Permutation::simple(2, 1)]);
        assert_eq!(c.upsilon().len(), 2);
        assert!(c.upsilon().contains(&Permutation::identity(2)));
        assert!(c.upsilon().contains(&Permutation::simple(2, 1)));
    }

    #[test]
    fn upsilon_of_the_sample() {
        let (data, b) = sample();
        let c = Construction::new(data, b).unwrap();
        let expected = [
            perm(&[3, 1, 5, 2, 4]), // (1 3 5 4 2)
            perm(&[1, 4, 3, 5, 2]), // (2 4 5)
            perm(&[5, 3, 2, 4, 1]), // (1 5)(2 3)
            perm(&[2, 5, 4, 1, 3]), // (1 2 5 3 4)
            perm(&[4, 2, 1, 3, 5]), // (1 4 3)
        ];
        for u in &expected {
            assert!(c.upsilon().contains(u), "missing {u:?}");
        }
        assert_eq!(c.upsilon().len(), 5);
        // Ordered by the image of 1.
        let firsts: Vec<usize> = c.upsilon().iter().map(|u| u.apply(1)).collect();
        assert_eq!(firsts, vec![1, 2, 3, 4, 5]);
        // Defining property.
        let tau_m = c.data().tau_power_m();
        for u in c.upsilon() {
            assert_eq!(u.inverse().compose(&tau_m).compose(u), *c.w_of_b());
        }
    }

    #[test]
    fn xi_vectors_of_the_sample() {
        let (data, b) = sample();
        let c = Construction::new(data, b).unwrap();
        let by_cycle: BTreeMap<String, Cocharacter> = c
            .upsilon()
            .iter()
            .map(|u| (u.cycle_string(), c.xi_vector_for(u)))
            .collect();
        assert_eq!(by_cycle["(1 3 5 4 2)"], cochar(&[3, 3, 1, 1, 0]));
        assert_eq!(by_cycle["(2 4 5)"], cochar(&[3, 2, 1, 0, 0]));
        assert_eq!(by_cycle["(1 5)(2 3)"], cochar(&[2, 2, 1, 0, 0]));
        assert_eq!(by_cycle["(1 2 5 3 4)"], cochar(&[3, 2, 1, 1, 0]));
        assert_eq!(by_cycle["(1 4 3)"], cochar(&[3, 3, 2, 1, 0]));
        // Twisted conjugates match the expected raising paths.
        let u3 = perm(&[5, 3, 2, 4, 1]);
        assert_eq!(
            c.twisted_antidominant(&u3).rows(),
            &[vec![1, 1, 1, 3], vec![2, 2, 4], vec![3, 4, 5], vec![4, 5]]
        );
        // Highest-weight elements have a zero vector.
        let hw = Tableau::highest(5, &cochar(&[4, 3, 3, 2, 0])).unwrap();
        assert_eq!(xi_vector(&hw), Cocharacter::zero(5));
    }

    #[test]
    fn xi_tuple_of_the_sample() {
        let (data, b) = sample();
        let c = Construction::new(data, b).unwrap();
        let u3 = perm(&[5, 3, 2, 4, 1]);
        let tuple = c.xi_tuple(&u3).unwrap();
        assert_eq!(
            tuple.lambdas(),
            &[
                cochar(&[0, 1, 2, 0, 2]),
                cochar(&[0, 2, 2, 0, 2]),
                cochar(&[1, 3, 2, 1, 2]),
                cochar(&[2, 4, 2, 2, 3]),
            ]
        );
        // Closure: b·ξ_1 − ξ_4 = (1,1,0,1,1).
        let closure = c.data().b_act(tuple.lambda(0)).sub(tuple.lambda(3));
        assert_eq!(closure, cochar(&[1, 1, 0, 1, 1]));
        // Sorting elements are the prefixes.
        let prefixes = c.upsilon_prefixes(&u3);
        assert_eq!(prefixes[1], u3);
        assert_eq!(prefixes[3], perm(&[2, 5, 4, 3, 1]));
        for (j, prefix) in prefixes.iter().enumerate() {
            assert_eq!(&tuple.lambda(j).sorting_permutation(), prefix);
        }
        // A permutation outside the set is rejected.
        assert!(matches!(
            c.xi_tuple(&Permutation::identity(5)),
            Err(Error::NotInUpsilon)
        ));
    }

    #[test]
    fn full_report_of_the_sample() {
        let (data, b) = sample();
        let report = construct_all(data, b).unwrap();
        assert_eq!(report.upsilon.len(), 5);
        // The canonical representative is the tuple attached to (1 5)(2 3).
        assert_eq!(report.eta_class.lambdas()[0], cochar(&[0, 1, 2, 0, 2]));
        let ordered = report.eta_ordered_tuples();
        for (i, tuple) in ordered.iter().enumerate() {
            assert_eq!(tuple, &report.eta_class.eta_shift(i as i64));
            assert!(tuple.is_top());
        }
        // The shift chain of first components.
        let first_components: Vec<Cocharacter> =
            ordered.iter().map(|t| t.lambda(0).clone()).collect();
        assert_eq!(
            first_components,
            vec![
                cochar(&[0, 1, 2, 0, 2]),
                cochar(&[3, 0, 1, 2, 0]),
                cochar(&[1, 3, 0, 1, 2]),
                cochar(&[3, 1, 3, 0, 1]),
                cochar(&[2, 3, 1, 3, 0]),
            ]
        );
    }

    #[test]
    fn report_of_the_smallest_case() {
        let data = SuperbasicData::new(2, 1).unwrap();
        let b = Tableau::new(2, vec![vec![2]]).unwrap();
        let report = construct_all(data, b).unwrap();
        assert_eq!(report.w_tuple.len(), 1);
        let ordered = report.eta_ordered_tuples();
        assert_eq!(ordered[0].lambdas(), &[cochar(&[0, 0])]);
        assert_eq!(ordered[1].lambdas(), &[cochar(&[1, 0])]);
    }

    #[test]
    fn coxeter_weight_identity_on_the_sample() {
        let (data, b) = sample();
        let c = Construction::new(data, b).unwrap();
        for u in c.upsilon() {
            assert!(c.coxeter_weight_identity_holds(u));
        }
    }

    #[test]
    fn twisted_conjugate_is_sorting_route_independent() {
        // Route independence: any permutation carrying λ_b to its
        // anti-dominant rearrangement produces the same conjugate.
        let (data, b) = sample();
        let c = Construction::new(data.clone(), b.clone()).unwrap();
        let lam_b = data.lambda_b();
        let target = data.lambda_b_antidominant();
        let mut count = 0;
        for images in (1..=5usize).permutations(5) {
            let w = Permutation::from_one_line(images).unwrap();
            if w.act(&lam_b) == target {
                assert_eq!(&weyl_act(&w, &b), c.b_minus());
                count += 1;
            }
        }
        assert!(count > 1, "expected several sorting routes");
    }

    #[test]
    fn allowed_examples() {
        let data = SuperbasicData::new(5, 12).unwrap();
        // λ_b itself is allowed with identity witness.
        let w = is_allowed(&data.lambda_b(), &data).unwrap();
        assert!(w.allowed);
        assert_eq!(w.partial_coxeter, Some(Permutation::identity(5)));
        // Both raised entries in the leading slots: not allowed.
        let w = is_allowed(&cochar(&[3, 3, 2, 2, 2]), &data).unwrap();
        assert!(!w.allowed);
        assert!(w.partial_coxeter.is_none());
        // The twisted anti-dominant weight of the sample: allowed.
        let w = is_allowed(&cochar(&[3, 2, 2, 3, 2]), &data).unwrap();
        assert!(w.allowed);
        let pc = w.partial_coxeter.unwrap();
        assert!(pc.is_partial_coxeter());
        assert_eq!(pc.act(&data.lambda_b()), cochar(&[3, 2, 2, 3, 2]));
        // Not conjugate: error.
        assert!(is_allowed(&cochar(&[5, 0, 0, 0, 7]), &data).is_err());
    }

    #[test]
    fn twisted_weights_avoid_clustered_raised_entries() {
        // At n = 5, m0 = 2, no conjugating element puts both raised entries
        // of the twisted anti-dominant weight into the two leading or the
        // two trailing slots.
        use itertools::Itertools;
        let data = SuperbasicData::new(5, 12).unwrap();
        let lam_minus = data.lambda_b_antidominant();
        let tau_m = data.tau_power_m();
        let forbidden = [cochar(&[3, 3, 2, 2, 2]), cochar(&[2, 2, 2, 3, 3])];
        let mut seen = 0;
        for images in (1..=5usize).permutations(5) {
            let u = Permutation::from_one_line(images).unwrap();
            if u.inverse().compose(&tau_m).compose(&u).is_coxeter() {
                let lam = u.inverse().act(&lam_minus);
                assert!(!forbidden.contains(&lam), "u = {u:?}");
                assert!(is_allowed(&lam, &data).unwrap().allowed);
                seen += 1;
            }
        }
        // 8 Coxeter elements, 5 solutions each.
        assert_eq!(seen, 40);
    }

    #[test]
    fn report_json_fields() {
        let data = SuperbasicData::new(2, 1).unwrap();
        let b = Tableau::new(2, vec![vec![2]]).unwrap();
        let report = construct_all(data, b).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        let obj = json.as_object().unwrap();
        let keys: Vec<&String> = obj.keys().collect();
        assert_eq!(
            keys,
            ["b", "eta_class", "fe", "upsilon", "w_of_b", "w_tuple", "xi"]
        );
        assert_eq!(json["xi"]["1,2"], serde_json::json!([[1, 0]]));
        assert_eq!(json["xi"]["2,1"], serde_json::json!([[0, 0]]));
    }
}
