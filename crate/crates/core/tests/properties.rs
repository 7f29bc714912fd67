//! Randomized invariants: proptest picks shapes and tableaux from small
//! exhaustive pools; a seeded ChaCha stream drives random slide orders.

mod common;

use std::sync::OnceLock;

use common::{shifted_skew_shapes, skew_shapes};
use genomic_tableaux::jdt::{genomic_jdt, kjdt, rectify, rectify_with};
use genomic_tableaux::json::{parse_tableau, to_string, AnyTableau, ToJson};
use genomic_tableaux::kstd::{k_semistandardize, k_standardize};
use genomic_tableaux::shapes::{Diagram, Partition};
use genomic_tableaux::shifted::{delta, for_each_shifted_genomic_upto, gamma, Delta, Kind, ShiftedGenomicTableau};
use genomic_tableaux::tableaux::{for_each_genomic_upto, GenomicTableau};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn genomic_pool() -> &'static Vec<GenomicTableau> {
    static POOL: OnceLock<Vec<GenomicTableau>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut out = Vec::new();
        for shape in skew_shapes(7, 5) {
            for_each_genomic_upto(&shape, 3, |t| out.push(t.clone()));
        }
        out
    })
}

fn shifted_pool() -> &'static Vec<ShiftedGenomicTableau> {
    static POOL: OnceLock<Vec<ShiftedGenomicTableau>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut out = Vec::new();
        for shape in shifted_skew_shapes(7, 4) {
            for kind in [Kind::P, Kind::Q] {
                for_each_shifted_genomic_upto(&shape, kind, 2, |t| out.push(t.clone()));
            }
        }
        out
    })
}

fn ballot_pool() -> &'static Vec<GenomicTableau> {
    static POOL: OnceLock<Vec<GenomicTableau>> = OnceLock::new();
    POOL.get_or_init(|| genomic_pool().iter().filter(|t| t.is_ballot()).cloned().collect())
}

fn p_pool() -> &'static Vec<ShiftedGenomicTableau> {
    static POOL: OnceLock<Vec<ShiftedGenomicTableau>> = OnceLock::new();
    POOL.get_or_init(|| shifted_pool().iter().filter(|t| t.kind() == Kind::P).cloned().collect())
}

fn pick<T: Clone + std::fmt::Debug>(pool: &'static [T]) -> impl Strategy<Value = T> {
    (0..pool.len()).prop_map(move |i| pool[i].clone())
}

fn genomic() -> impl Strategy<Value = GenomicTableau> {
    pick(genomic_pool())
}

fn shifted() -> impl Strategy<Value = ShiftedGenomicTableau> {
    pick(shifted_pool())
}

fn mu_of(t: &GenomicTableau) -> Vec<usize> {
    t.content()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 512, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn genomic_json_round_trips(t in genomic()) {
        let text = to_string(&t.to_json());
        let back = parse_tableau(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back, AnyTableau::Genomic(t));
    }

    #[test]
    fn shifted_json_round_trips(t in shifted()) {
        let back = parse_tableau(&t.to_json()).unwrap();
        prop_assert_eq!(back, AnyTableau::ShiftedGenomic(t));
    }

    #[test]
    fn standardization_round_trips(t in genomic()) {
        let s = k_standardize(&t);
        prop_assert!(s.is_increasing());
        prop_assert_eq!(k_semistandardize(&s, &mu_of(&t)).unwrap(), t);
    }

    #[test]
    fn shifted_standardization_round_trips(t in pick(p_pool())) {
        prop_assert_eq!(delta(&gamma(&t), &t.content()), Delta::Defined(t));
    }

    #[test]
    fn slide_commutes_with_standardization(t in genomic(), pick in any::<prop::sample::Index>()) {
        let corners = t.shape().inner_corners();
        prop_assume!(!corners.is_empty());
        let c = [*pick.get(&corners)];
        let slid = genomic_jdt(&t, &c).unwrap();
        prop_assert_eq!(kjdt(&k_standardize(&t), &c).unwrap(), k_standardize(&slid));
        prop_assert_eq!(slid.is_ballot(), t.is_ballot());
        prop_assert_eq!(slid.content(), t.content());
    }

    #[test]
    fn ballot_rectification_ignores_slide_order(t in pick(ballot_pool()), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let random = rectify_with(&t, |cs| vec![*cs.choose(&mut rng).unwrap()]).unwrap();
        let mu = Partition::new(t.content()).unwrap();
        prop_assert_eq!(&random, &GenomicTableau::highest_weight(&mu));
        prop_assert_eq!(random, rectify(&t).unwrap());
    }
}
