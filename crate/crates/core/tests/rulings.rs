mod common;

use std::collections::BTreeSet;

use common::{decode, knotted_front, open_prefix, word};
use legendrian_core::front::random_moves;
use legendrian_core::rulings::{
    enumerate_oriented_rulings, enumerate_rulings, is_ruling, oriented_ruling_polynomial, oriented_ruling_polynomial_with,
    ruling_polynomial, ruling_polynomial_with, SweepMode,
};
use legendrian_core::{FrontWord, Letter, LaurentPoly1, OrientedFront};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn exhaustive(word: &FrontWord, orient: Option<&OrientedFront>) -> BTreeSet<Vec<usize>> {
    let cr = word.crossing_count();
    (0u32..1 << cr)
        .map(|mask| (1..=cr).filter(|i| mask & (1 << (i - 1)) != 0).collect::<Vec<_>>())
        .filter(|s| is_ruling(word, s, orient))
        .collect()
}

fn z() -> LaurentPoly1 {
    LaurentPoly1::z_pow(1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sweep_matches_exhaustive_oracle(w in knotted_front(24, 10)) {
        let swept: BTreeSet<Vec<usize>> = enumerate_rulings(&w).into_iter().map(|r| r.switches().to_vec()).collect();
        prop_assert_eq!(swept, exhaustive(&w, None));
    }

    #[test]
    fn oriented_sweep_matches_oracle(w in knotted_front(20, 8), flips in prop::collection::vec(any::<bool>(), 4)) {
        let of = OrientedFront::new(&w, &flips);
        let swept: BTreeSet<Vec<usize>> = enumerate_oriented_rulings(&of).into_iter().map(|r| r.switches().to_vec()).collect();
        prop_assert_eq!(swept, exhaustive(&w, Some(&of)));
    }

    #[test]
    fn oriented_rulings_are_rulings(w in knotted_front(20, 8), flips in prop::collection::vec(any::<bool>(), 4)) {
        let of = OrientedFront::new(&w, &flips);
        let all: BTreeSet<_> = enumerate_rulings(&w).into_iter().collect();
        for r in enumerate_oriented_rulings(&of) {
            prop_assert!(all.contains(&r));
        }
        if !oriented_ruling_polynomial(&of).is_zero() {
            prop_assert!(!ruling_polynomial(&w).is_zero());
        }
    }

    #[test]
    fn merged_and_branching_agree(w in knotted_front(24, 10)) {
        prop_assert_eq!(ruling_polynomial_with(&w, SweepMode::Merged), ruling_polynomial_with(&w, SweepMode::Branching));
        let of = OrientedFront::default_of(&w);
        prop_assert_eq!(
            oriented_ruling_polynomial_with(&of, SweepMode::Merged),
            oriented_ruling_polynomial_with(&of, SweepMode::Branching)
        );
    }

    #[test]
    fn left_cusp_skein_relation((pre, n, suf) in open_prefix(10, 8), pick in any::<u16>()) {
        // site m with 1 <= m <= n, so both l_{m+1} x_m and l_m x_{m+1} fit
        let m = pick as usize % n + 1;
        let rest = decode(n + 2, &suf, 4);
        let build = |head: &[Letter]| {
            let mut v = pre.clone();
            v.extend_from_slice(head);
            v.extend_from_slice(&rest);
            word(v)
        };
        let lhs = ruling_polynomial(&build(&[Letter::left(m + 1), Letter::cross(m)]))
            - ruling_polynomial(&build(&[Letter::left(m), Letter::cross(m + 1)]));
        let rhs = z() * (ruling_polynomial(&build(&[Letter::left(m + 1)])) - ruling_polynomial(&build(&[Letter::left(m)])));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn disjoint_union_divides_by_z(a in knotted_front(16, 5), b in knotted_front(16, 5)) {
        let both = a.concat(&b);
        prop_assert_eq!(
            ruling_polynomial(&both),
            LaurentPoly1::z_pow(-1) * ruling_polynomial(&a) * ruling_polynomial(&b)
        );
    }

    #[test]
    fn invariant_under_moves(w in knotted_front(16, 6), seed in any::<u64>(), flips in prop::collection::vec(any::<bool>(), 3)) {
        let of = OrientedFront::new(&w, &flips);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (moved, _) = random_moves(&of, 12, &mut rng);
        prop_assert_eq!(ruling_polynomial(moved.word()), ruling_polynomial(&w));
        prop_assert_eq!(oriented_ruling_polynomial(&moved), oriented_ruling_polynomial(&of));
    }
}

#[test]
fn branch_order_is_canonical() {
    let t: FrontWord = "l1 l3 x2 x2 x2 r1 r1".parse().unwrap();
    let got: Vec<Vec<usize>> = enumerate_rulings(&t).into_iter().map(|r| r.switches().to_vec()).collect();
    assert_eq!(got, vec![vec![3], vec![1], vec![1, 2, 3]]);
}
