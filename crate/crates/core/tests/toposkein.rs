mod common;

use common::knotted_front;
use legendrian_core::front::{PdCrossing, Rule};
use legendrian_core::toposkein::{
    homfly_h, homfly_h_with, kauffman_d, kauffman_d_with, kauffman_f, smooth_at, switch_at, Evaluator, Expansion, Heuristic,
    Relation, SkeinNode, SkeinOptions,
};
use legendrian_core::{Degree, FrontWord, LaurentPoly2, OrientedFront, PlanarDiagram};
use proptest::prelude::*;

fn top(of: &OrientedFront) -> PlanarDiagram {
    PlanarDiagram::from_front(of)
}

fn sz(sign: i64) -> LaurentPoly2 {
    LaurentPoly2::monomial(sign, 1, 0)
}

/// Splits arc `a` and inserts a one-crossing curl of the given sign.
fn add_kink(d: &PlanarDiagram, a: usize, positive: bool) -> PlanarDiagram {
    let fresh = d.crossings.iter().flat_map(|x| x.arcs).max().unwrap_or(0) + 1;
    let (loop_arc, out_arc) = (fresh, fresh + 1);
    let mut out = d.clone();
    // the old head of `a` now receives `out_arc`
    for x in &mut out.crossings {
        for p in 0..4 {
            if x.arcs[p] == a && x.is_incoming(p) {
                x.arcs[p] = out_arc;
            }
        }
    }
    out.crossings.push(if positive {
        PdCrossing { arcs: [a, out_arc, loop_arc, loop_arc], over_forward: false }
    } else {
        PdCrossing { arcs: [a, loop_arc, loop_arc, out_arc], over_forward: true }
    });
    out
}

fn orientation(w: &FrontWord, flips: &[bool]) -> OrientedFront {
    OrientedFront::new(w, flips)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn skein_identities_hold_at_every_crossing(w in knotted_front(18, 6), flips in prop::collection::vec(any::<bool>(), 3)) {
        let d = top(&orientation(&w, &flips));
        for idx in 0..d.crossings.len() {
            let s = d.crossings[idx].sign();
            let plus_minus = kauffman_d(&d).unwrap() - kauffman_d(&switch_at(&d, idx)).unwrap();
            let smooth = kauffman_d(&smooth_at(&d, idx, true)).unwrap() - kauffman_d(&smooth_at(&d, idx, false)).unwrap();
            prop_assert_eq!(plus_minus, sz(s) * smooth);
            let plus_minus = homfly_h(&d).unwrap() - homfly_h(&switch_at(&d, idx)).unwrap();
            prop_assert_eq!(plus_minus, sz(s) * homfly_h(&smooth_at(&d, idx, true)).unwrap());
        }
    }

    #[test]
    fn heuristic_and_memo_do_not_matter(w in knotted_front(20, 7), flips in prop::collection::vec(any::<bool>(), 3)) {
        let d = top(&orientation(&w, &flips));
        let a = SkeinOptions { heuristic: Heuristic::FirstBad, memo: true };
        let b = SkeinOptions { heuristic: Heuristic::LastBad, memo: false };
        prop_assert_eq!(kauffman_d_with(&d, a).unwrap(), kauffman_d_with(&d, b).unwrap());
        prop_assert_eq!(homfly_h_with(&d, a).unwrap(), homfly_h_with(&d, b).unwrap());
    }

    #[test]
    fn leaves_sum_to_root(w in knotted_front(18, 6)) {
        let d = top(&OrientedFront::default_of(&w));
        for relation in [Relation::Kauffman, Relation::Homfly] {
            let mut ev = Evaluator::new(relation, Heuristic::FirstBad, false);
            let root = ev.evaluate(&d);
            let summed = match ev.expand(&SkeinNode::root(d.clone())) {
                Expansion::Leaf(v) => v,
                Expansion::Children(ch) => ch
                    .iter()
                    .map(|n| (&n.coefficient * &ev.evaluate(&n.diagram)).shift_a(n.kink_exponent))
                    .sum(),
            };
            prop_assert_eq!(root, summed);
        }
    }

    #[test]
    fn regular_isotopy_invariance(w in knotted_front(16, 6), flips in prop::collection::vec(any::<bool>(), 3), pick in any::<prop::sample::Index>()) {
        // planar isotopies, type 2 and type 3 front moves are Reidemeister
        // II and III moves (or planar isotopies) of the diagram
        let of = orientation(&w, &flips);
        let moves: Vec<_> = w
            .applicable_moves()
            .into_iter()
            .flatten()
            .filter(|m| matches!(m.rule, Rule::Commute | Rule::CommuteAlt | Rule::Type2Remove | Rule::Type2Insert { .. } | Rule::Type3))
            .collect();
        prop_assume!(!moves.is_empty());
        let mv = moves[pick.index(moves.len())];
        let moved = of.apply_move(mv).unwrap();
        prop_assert_eq!(kauffman_d(&top(&moved)).unwrap(), kauffman_d(&top(&of)).unwrap());
        prop_assert_eq!(homfly_h(&top(&moved)).unwrap(), homfly_h(&top(&of)).unwrap());
    }

    #[test]
    fn f_is_invariant_under_every_move(w in knotted_front(16, 6), pick in any::<prop::sample::Index>()) {
        let of = OrientedFront::default_of(&w);
        let moves: Vec<_> = w.applicable_moves().into_iter().flatten().collect();
        prop_assume!(!moves.is_empty());
        let moved = of.apply_move(moves[pick.index(moves.len())]).unwrap();
        prop_assert_eq!(kauffman_f(&moved).unwrap(), kauffman_f(&of).unwrap());
    }

    #[test]
    fn kink_multiplies_by_a(w in knotted_front(16, 5), positive in any::<bool>(), pick in any::<prop::sample::Index>()) {
        let d = top(&OrientedFront::default_of(&w));
        prop_assume!(!d.crossings.is_empty());
        let arcs: Vec<usize> = d.crossings.iter().flat_map(|x| x.arcs).collect();
        let kinked = add_kink(&d, arcs[pick.index(arcs.len())], positive);
        kinked.validate().unwrap();
        let e = if positive { 1 } else { -1 };
        prop_assert_eq!(kinked.writhe(), d.writhe() + e);
        prop_assert_eq!(kauffman_d(&kinked).unwrap(), kauffman_d(&d).unwrap().shift_a(e));
        prop_assert_eq!(homfly_h(&kinked).unwrap(), homfly_h(&d).unwrap().shift_a(e));
    }

    #[test]
    fn degree_bound(w in knotted_front(20, 7), flips in prop::collection::vec(any::<bool>(), 3)) {
        let of = orientation(&w, &flips);
        let c = w.left_cusps() as i64;
        prop_assert!(kauffman_d(&top(&of)).unwrap().deg_a() <= Degree::Finite(c - 1));
        prop_assert!(homfly_h(&top(&of)).unwrap().deg_a() <= Degree::Finite(c - 1));
    }
}

#[test]
fn figure_eight_pd() {
    let d: PlanarDiagram = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]".parse().unwrap();
    assert_eq!(d.writhe(), 0);
    // amphichiral, and mirroring sends (a, z) to (a^-1, -z)
    let f = kauffman_d(&d).unwrap();
    let mirrored = LaurentPoly2::from_terms(f.terms().map(|((ze, ae), c)| {
        let c = if ze % 2 == 0 { c.clone() } else { -c.clone() };
        ((ze, -ae), c)
    }));
    assert_eq!(f, mirrored);
}
