//! Kauffman and HOMFLY polynomials of planar diagrams by skein recursion,
//! and the coefficients and degree bounds they give for fronts.

mod engine;

use serde::Serialize;
use thiserror::Error;

use crate::front::{FrontWord, OrientedFront, PlanarDiagram};
use crate::poly::{Degree, LaurentPoly1, LaurentPoly2};

pub use engine::{smooth_at, switch_at, Evaluator, Expansion, Heuristic, Relation, SkeinNode};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkeinError {
    #[error("the diagram has no components")]
    EmptyDiagram,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// Knobs for the skein recursion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkeinOptions {
    pub heuristic: Heuristic,
    pub memo: bool,
}

impl Default for SkeinOptions {
    fn default() -> Self {
        Self { heuristic: Heuristic::FirstBad, memo: true }
    }
}

fn evaluate(d: &PlanarDiagram, relation: Relation, opts: SkeinOptions) -> Result<LaurentPoly2, SkeinError> {
    if d.component_count() == 0 {
        return Err(SkeinError::EmptyDiagram);
    }
    Ok(Evaluator::new(relation, opts.heuristic, opts.memo).evaluate(d))
}

/// Dubrovnik polynomial, normalized to 1 on the round circle.
pub fn kauffman_d(d: &PlanarDiagram) -> Result<LaurentPoly2, SkeinError> {
    kauffman_d_with(d, SkeinOptions::default())
}

pub fn kauffman_d_with(d: &PlanarDiagram, opts: SkeinOptions) -> Result<LaurentPoly2, SkeinError> {
    evaluate(d, Relation::Kauffman, opts)
}

/// Regular-isotopy HOMFLY polynomial, normalized to 1 on the round circle.
pub fn homfly_h(d: &PlanarDiagram) -> Result<LaurentPoly2, SkeinError> {
    homfly_h_with(d, SkeinOptions::default())
}

pub fn homfly_h_with(d: &PlanarDiagram, opts: SkeinOptions) -> Result<LaurentPoly2, SkeinError> {
    evaluate(d, Relation::Homfly, opts)
}

/// `a^-w D` of the front's diagram.
pub fn kauffman_f(of: &OrientedFront) -> Result<LaurentPoly2, SkeinError> {
    Ok(kauffman_d(&PlanarDiagram::from_front(of))?.shift_a(-of.writhe()))
}

/// `a^-w H` of the front's diagram.
pub fn homfly_p(of: &OrientedFront) -> Result<LaurentPoly2, SkeinError> {
    Ok(homfly_h(&PlanarDiagram::from_front(of))?.shift_a(-of.writhe()))
}

/// Coefficient of `a^(c-1)` in the Dubrovnik polynomial of the front's
/// diagram, cross-checked against the `a^-1` coefficient of `a^beta F`.
pub fn b_of(word: &FrontWord) -> Result<LaurentPoly1, SkeinError> {
    let of = OrientedFront::default_of(word);
    let d = kauffman_d(&PlanarDiagram::from_front(&of))?;
    b_from(&of, &d)
}

fn b_from(of: &OrientedFront, d: &LaurentPoly2) -> Result<LaurentPoly1, SkeinError> {
    let inv = of.invariants();
    let direct = d.coeff_a(inv.c - 1);
    let via_f = d.shift_a(-inv.w).shift_a(inv.beta).coeff_a(-1);
    if direct != via_f {
        return Err(SkeinError::InternalInconsistency(format!(
            "coefficient of a^(c-1) in D is {direct} but a^-1 coefficient of a^beta F is {via_f}"
        )));
    }
    Ok(direct)
}

/// Coefficient of `a^(c-1)` in the HOMFLY polynomial of the front's diagram.
pub fn q_of(of: &OrientedFront) -> Result<LaurentPoly1, SkeinError> {
    let h = homfly_h(&PlanarDiagram::from_front(of))?;
    Ok(h.coeff_a(of.invariants().c - 1))
}

/// How close the Kauffman and HOMFLY bounds on beta come to the front.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SharpnessReport {
    pub beta: i64,
    pub deg_a_d: Degree,
    pub deg_a_h: Degree,
    pub kauffman_sharp: bool,
    pub homfly_sharp: bool,
    #[serde(rename = "B")]
    pub b: LaurentPoly1,
    #[serde(rename = "Q")]
    pub q: LaurentPoly1,
    /// The HOMFLY bound beats the Kauffman bound.
    pub homfly_stronger: bool,
}

pub fn sharpness(of: &OrientedFront) -> Result<SharpnessReport, SkeinError> {
    let diagram = PlanarDiagram::from_front(of);
    let d = kauffman_d(&diagram)?;
    let h = homfly_h(&diagram)?;
    let inv = of.invariants();
    let b = b_from(of, &d)?;
    let q = h.coeff_a(inv.c - 1);

    let f = d.shift_a(-inv.w);
    let p = h.shift_a(-inv.w);
    let by_coefficient = !b.is_zero();
    let by_degree = d.deg_a() == Degree::Finite(inv.c - 1);
    let by_beta = f.deg_a().finite().map(|deg| inv.beta == -deg - 1).unwrap_or(false);
    if by_coefficient != by_degree || by_degree != by_beta {
        return Err(SkeinError::InternalInconsistency(format!(
            "Kauffman sharpness disagrees: B nonzero {by_coefficient}, degree test {by_degree}, beta test {by_beta}"
        )));
    }
    Ok(SharpnessReport {
        beta: inv.beta,
        deg_a_d: d.deg_a(),
        deg_a_h: h.deg_a(),
        kauffman_sharp: by_coefficient,
        homfly_sharp: !q.is_zero(),
        b,
        q,
        homfly_stronger: p.deg_a() > f.deg_a(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "l1 l3 x2 x2 x2 r1 r1";

    fn top(s: &str) -> PlanarDiagram {
        PlanarDiagram::from_front(&OrientedFront::default_of(&s.parse().unwrap()))
    }

    fn p1(s: &str) -> LaurentPoly1 {
        s.parse().unwrap()
    }

    fn p2(s: &str) -> LaurentPoly2 {
        s.parse().unwrap()
    }

    #[test]
    fn round_circle_is_one() {
        assert_eq!(kauffman_d(&top("l1 r1")).unwrap(), LaurentPoly2::one());
        assert_eq!(homfly_h(&top("l1 r1")).unwrap(), LaurentPoly2::one());
    }

    #[test]
    fn empty_diagram_is_refused() {
        assert_eq!(kauffman_d(&top("")), Err(SkeinError::EmptyDiagram));
    }

    #[test]
    fn positive_kink() {
        let kink: PlanarDiagram = "X[1,2,2,1]".parse().unwrap();
        let expected = LaurentPoly2::a_pow(kink.writhe());
        assert_eq!(kauffman_d(&kink).unwrap(), expected);
        assert_eq!(homfly_h(&kink).unwrap(), expected);
    }

    #[test]
    fn split_circles() {
        assert_eq!(homfly_h(&top("l1 r1 l1 r1")).unwrap(), p2("z^-1*a - z^-1*a^-1"));
        assert_eq!(kauffman_d(&top("l1 r1 l1 r1")).unwrap(), p2("z^-1*a + 1 - z^-1*a^-1"));
    }

    #[test]
    fn stabilized_unknot() {
        let of = OrientedFront::default_of(&"l1 x1 r1".parse().unwrap());
        let d = kauffman_d(&top("l1 x1 r1")).unwrap();
        assert_eq!(kauffman_f(&of).unwrap(), d.shift_a(1));
        assert_eq!(kauffman_f(&of).unwrap(), LaurentPoly2::one());
        let r = sharpness(&of).unwrap();
        assert!(!r.kauffman_sharp && !r.homfly_sharp);
    }

    #[test]
    fn trefoil_coefficients() {
        let w: FrontWord = TREFOIL.parse().unwrap();
        let of = OrientedFront::default_of(&w);
        assert_eq!(b_of(&w).unwrap(), p1("z^2 + 2"));
        assert_eq!(q_of(&of).unwrap(), p1("z^2 + 2"));
        assert_eq!(kauffman_d(&top(TREFOIL)).unwrap().coeff_a(1), p1("z^2 + 2"));
    }

    #[test]
    fn unknot_sharp() {
        let of = OrientedFront::default_of(&FrontWord::unknot());
        let r = sharpness(&of).unwrap();
        assert!(r.kauffman_sharp && r.homfly_sharp);
        assert_eq!((r.b.clone(), r.q.clone()), (p1("1"), p1("1")));
        assert_eq!(kauffman_f(&of).unwrap(), LaurentPoly2::one());
        assert_eq!(homfly_p(&of).unwrap(), LaurentPoly2::one());
    }

    #[test]
    fn split_unlink_b() {
        assert_eq!(b_of(&"l1 r1 l1 r1".parse().unwrap()).unwrap(), p1("z^-1"));
    }

    #[test]
    fn hopf_q_follows_orientation() {
        let w: FrontWord = "l1 l3 x2 x2 r1 r1".parse().unwrap();
        assert_eq!(b_of(&w).unwrap(), p1("z + z^-1"));
        assert_eq!(q_of(&OrientedFront::new(&w, &[false, false])).unwrap(), p1("z^-1"));
        assert_eq!(q_of(&OrientedFront::new(&w, &[false, true])).unwrap(), p1("z + z^-1"));
    }
}
