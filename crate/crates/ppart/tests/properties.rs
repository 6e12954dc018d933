//! Property-based invariants over randomly generated structures.

use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

use ppart::gf::{alpha_beta, descent_gf, u_gf, u_m};
use ppart::perm::descent_statistics;
use ppart::poly::{q_binomial_poly, IntPoly};
use ppart::poset::LabeledPoset;
use ppart::qsym::Composition;

/// Random labeled poset on up to `max_p` elements: a random bit mask selects
/// relations i < j from the natural order, then a random permutation relabels.
fn poset_strategy(max_p: usize) -> impl Strategy<Value = LabeledPoset> {
    (1..=max_p)
        .prop_flat_map(|p| {
            let pairs = p * (p - 1) / 2;
            (
                Just(p),
                proptest::collection::vec(any::<bool>(), pairs),
                Just(()).prop_perturb(move |_, mut rng| {
                    let mut labels: Vec<u32> = (1..=p as u32).collect();
                    for i in (1..p).rev() {
                        labels.swap(i, rng.random_range(0..=i));
                    }
                    labels
                }),
            )
        })
        .prop_map(|(p, mask, labels)| {
            let mut covers = Vec::new();
            let mut idx = 0;
            for i in 1..=p {
                for j in i + 1..=p {
                    if mask[idx] {
                        covers.push((i, j));
                    }
                    idx += 1;
                }
            }
            LabeledPoset::from_covers(p, &covers, Some(labels)).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn u_m_matches_series_truncation(poset in poset_strategy(5), m in 0u32..4) {
        // the coefficient of q^n in U_m stabilizes to the unbounded series
        // once m >= n, because adding larger parts cannot produce sum n
        let bounded = u_m(&poset, m);
        let series = u_gf(&poset).q_series(m as usize);
        for n in 0..=m as usize {
            prop_assert_eq!(bounded.coeff(n), series.coeff(n));
        }
    }

    #[test]
    fn disjoint_union_multiplies_u(a in poset_strategy(3), b in poset_strategy(3)) {
        // relabel the second factor above the first so labels stay injective
        let shifted: Vec<u32> = b.omega().iter().map(|&l| l + a.size() as u32).collect();
        let b = b.with_labels(shifted).unwrap();
        let union = a.disjoint_union(&b).unwrap();
        for m in 0..3u32 {
            prop_assert_eq!(&u_m(&union, m), &(&u_m(&a, m) * &u_m(&b, m)));
        }
    }

    #[test]
    fn complement_is_an_involution(poset in poset_strategy(5)) {
        let twice = poset.complement_labeling().unwrap().complement_labeling().unwrap();
        prop_assert_eq!(twice.omega(), poset.omega());
        prop_assert_eq!(twice.cover_pairs(), poset.cover_pairs());
    }

    #[test]
    fn beta_table_is_inclusion_exclusion_consistent(poset in poset_strategy(5)) {
        prop_assert!(alpha_beta(&poset).inclusion_exclusion_consistent());
    }

    #[test]
    fn w_polynomial_at_one_counts_extensions(poset in poset_strategy(5)) {
        let gf = descent_gf(&poset);
        prop_assert_eq!(gf.w_polynomial().eval_one(), gf.extension_count());
        prop_assert_eq!(
            gf.extension_count(),
            BigInt::from(poset.linear_extensions().len() as u64)
        );
    }

    #[test]
    fn composition_descent_set_round_trip(parts in proptest::collection::vec(1u32..5, 1..6)) {
        let c = Composition::new(parts).unwrap();
        let back = Composition::from_descent_set(&c.descent_set(), c.degree());
        prop_assert_eq!(&back, &c);
    }

    #[test]
    fn q_binomial_symmetry(n in 0i64..10, k in 0i64..10) {
        prop_assume!(k <= n);
        prop_assert_eq!(q_binomial_poly(n, k), q_binomial_poly(n, n - k));
        prop_assert_eq!(
            q_binomial_poly(n, k).eval_one(),
            ppart::poly::binom(n, k)
        );
    }

    #[test]
    fn descent_stats_are_consistent(word in proptest::collection::vec(1u32..40, 1..10)) {
        let stats = descent_statistics(&word);
        prop_assert_eq!(stats.des, stats.descent_set.len());
        prop_assert_eq!(stats.maj, stats.descent_set.iter().sum::<usize>());
        for &j in &stats.descent_set {
            prop_assert!(word[j - 1] > word[j]);
        }
    }

    #[test]
    fn um_zero_counts_zero_partition_only(poset in poset_strategy(5)) {
        // with all parts bounded by zero, only the all-zero map can survive,
        // and it does exactly when no strict condition forces a positive part
        let u0 = u_m(&poset, 0);
        let strict_pair = poset
            .cover_pairs()
            .iter()
            .any(|&(x, y)| poset.label(x) > poset.label(y));
        if strict_pair {
            prop_assert!(u0.is_zero());
        } else {
            prop_assert_eq!(u0, IntPoly::from_coeffs(vec![BigInt::one()]));
        }
    }
}
