//! Randomized invariants over the lattice and crystal carriers.

use proptest::prelude::*;

use crystal_strata::crystal::{weyl_act, CrystalElement, Tableau, TensorElement};
use crystal_strata::lattice::{bruhat_leq, Cocharacter, Permutation};

fn cochar_strategy(max_n: usize) -> impl Strategy<Value = Cocharacter> {
    (2..=max_n)
        .prop_flat_map(|n| proptest::collection::vec(-6i64..=6, n).prop_map(Cocharacter::new))
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| {
            Permutation::from_one_line(images).expect("shuffled identity is a permutation")
        })
}

/// A tableau sampled by walking down from a highest-weight filling.
fn tableau_strategy() -> impl Strategy<Value = Tableau> {
    (2..=4usize)
        .prop_flat_map(|n| {
            let shape = proptest::collection::vec(0i64..=3, n).prop_map(move |mut v| {
                v.sort_unstable_by(|a, b| b.cmp(a));
                Cocharacter::new(v)
            });
            (
                Just(n),
                shape,
                proptest::collection::vec((1..n, 0..4usize), 0..12),
            )
        })
        .prop_map(|(n, shape, steps)| {
            let mut t = Tableau::highest(n, &shape).expect("dominant shape");
            for (i, reps) in steps {
                for _ in 0..reps {
                    match t.f(i) {
                        Some(next) => t = next,
                        None => break,
                    }
                }
            }
            t
        })
}

proptest! {
    #[test]
    fn sorting_element_commutes_with_shift(lam in cochar_strategy(8)) {
        let tau = Permutation::tau(lam.rank());
        prop_assert_eq!(
            lam.eta_shift(1).sorting_permutation(),
            tau.compose(&lam.sorting_permutation())
        );
    }

    #[test]
    fn sorted_cocharacter_is_dominant(lam in cochar_strategy(8)) {
        let u = lam.sorting_permutation();
        prop_assert!(u.inverse().act(&lam).is_dominant());
    }

    #[test]
    fn shift_has_period_n_up_to_central(lam in cochar_strategy(8), k in -20i64..=20) {
        let n = lam.rank() as i64;
        prop_assert_eq!(lam.eta_shift(n), lam.shift_central(1));
        prop_assert_eq!(lam.eta_shift(k).eta_shift(-k), lam.clone());
        prop_assert_eq!(lam.eta_shift(k + n), lam.eta_shift(k).shift_central(1));
    }

    #[test]
    fn composition_acts_functorially(
        lam in cochar_strategy(6),
        seed in any::<u64>(),
    ) {
        let n = lam.rank();
        // Two permutations derived deterministically from the seed.
        let mut images: Vec<usize> = (1..=n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            images.swap(i, (s >> 33) as usize % (i + 1));
        }
        let w = Permutation::from_one_line(images.clone()).unwrap();
        let x = w.inverse().compose(&Permutation::tau(n));
        prop_assert!(w.compose(&x).length() <= w.length() + x.length());
        prop_assert_eq!(w.compose(&x).act(&lam), w.act(&x.act(&lam)));
    }

    #[test]
    fn reduced_words_multiply_back(w in perm_strategy(6)) {
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(Permutation::from_word(6, &word), w);
    }

    #[test]
    fn bruhat_matches_subword_check(w in perm_strategy(4), x in perm_strategy(4)) {
        let word = w.reduced_word();
        let subword_route = (0u32..1 << word.len()).any(|mask| {
            let sub: Vec<usize> = word
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &i)| i)
                .collect();
            Permutation::from_word(4, &sub) == x
        });
        prop_assert_eq!(bruhat_leq(&x, &w), subword_route);
    }

    #[test]
    fn operators_are_mutually_inverse(t in tableau_strategy()) {
        let n = t.rank();
        for i in 1..n {
            if let Some(up) = t.e(i) {
                let down = up.f(i);
                prop_assert_eq!(down.as_ref(), Some(&t));
            }
            if let Some(down) = t.f(i) {
                let up = down.e(i);
                prop_assert_eq!(up.as_ref(), Some(&t));
            }
            let wt = t.weight();
            prop_assert_eq!(t.phi(i) as i64 - t.epsilon(i) as i64, wt.simple_pairing(i));
        }
    }

    #[test]
    fn column_reading_round_trips(t in tableau_strategy()) {
        let word = t.column_reading();
        let back = Tableau::from_column_reading(t.rank(), t.shape(), &word).unwrap();
        prop_assert_eq!(back, t.clone());
        // Factor sum equals the weight.
        prop_assert_eq!(t.factorize().sum(), t.weight());
    }

    #[test]
    fn weyl_action_is_weight_equivariant(t in tableau_strategy(), seed in any::<u64>()) {
        let n = t.rank();
        let mut images: Vec<usize> = (1..=n).collect();
        let mut s = seed | 1;
        for i in (1..n).rev() {
            s = s.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
            images.swap(i, (s >> 32) as usize % (i + 1));
        }
        let w = Permutation::from_one_line(images).unwrap();
        prop_assert_eq!(weyl_act(&w, &t).weight(), w.act(&t.weight()));
    }

    #[test]
    fn signature_counts_box_letters(boxes in proptest::collection::vec(1..=4usize, 0..10)) {
        let t = TensorElement::new(4, boxes.clone()).unwrap();
        let wt = t.weight();
        prop_assert_eq!(wt.total(), boxes.len() as i64);
        for i in 1..4 {
            let sig = t.signature(i);
            prop_assert_eq!(sig.phi as i64 - sig.epsilon as i64, wt.simple_pairing(i));
        }
    }
}
