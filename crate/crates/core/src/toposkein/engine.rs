use std::collections::HashMap;

use crate::front::{PdCrossing, PlanarDiagram};
use crate::poly::LaurentPoly2;

/// Which skein theory drives the recursion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// Dubrovnik: `D+ - D- = z (D0 - Dinf)`.
    Kauffman,
    /// Regular-isotopy HOMFLY: `H+ - H- = z H0`.
    Homfly,
}

impl Relation {
    /// Value of a crossingless circle added to a nonempty diagram.
    pub fn loop_factor(self) -> LaurentPoly2 {
        let base = LaurentPoly2::monomial(1, -1, 1) - LaurentPoly2::monomial(1, -1, -1);
        match self {
            Relation::Kauffman => base + LaurentPoly2::one(),
            Relation::Homfly => base,
        }
    }
}

/// Which non-descending crossing the recursion resolves first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Heuristic {
    #[default]
    FirstBad,
    LastBad,
}

/// One node of a skein tree: its value is `coefficient * a^kink_exponent`
/// times the polynomial of `diagram`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinNode {
    pub diagram: PlanarDiagram,
    pub coefficient: LaurentPoly2,
    pub kink_exponent: i64,
}

impl SkeinNode {
    pub fn root(diagram: PlanarDiagram) -> Self {
        Self { diagram, coefficient: LaurentPoly2::one(), kink_exponent: 0 }
    }
}

/// Outcome of one expansion step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expansion {
    Leaf(LaurentPoly2),
    Children(Vec<SkeinNode>),
}

fn rename(d: &mut PlanarDiagram, from: usize, to: usize) {
    for x in &mut d.crossings {
        for a in &mut x.arcs {
            if *a == from {
                *a = to;
            }
        }
    }
}

/// Deletes crossing `idx` and joins the arcs at each given pair of ports.
fn splice(d: &PlanarDiagram, idx: usize, pairs: &[(usize, usize)]) -> PlanarDiagram {
    let mut out = d.clone();
    let mut ports = out.crossings.remove(idx).arcs;
    for &(p, q) in pairs {
        let (keep, gone) = (ports[p], ports[q]);
        if keep == gone {
            out.free_loops += 1;
            continue;
        }
        rename(&mut out, gone, keep);
        for a in &mut ports {
            if *a == gone {
                *a = keep;
            }
        }
    }
    out
}

/// Removes every one-crossing curl, returning the net curl sign.
fn strip_curls(d: &PlanarDiagram) -> (PlanarDiagram, i64) {
    let mut d = d.clone();
    let mut exponent = 0;
    'scan: loop {
        for (idx, x) in d.crossings.iter().enumerate() {
            for i in 0..4 {
                if x.arcs[i] == x.arcs[(i + 1) % 4] {
                    exponent += x.sign();
                    // the small loop vanishes; the through strand is rejoined
                    d = splice(&d, idx, &[((i + 2) % 4, (i + 3) % 4)]);
                    continue 'scan;
                }
            }
        }
        return (d, exponent);
    }
}

fn switched(x: PdCrossing) -> PdCrossing {
    let [a0, a1, a2, a3] = x.arcs;
    if x.over_forward {
        PdCrossing { arcs: [a1, a2, a3, a0], over_forward: false }
    } else {
        PdCrossing { arcs: [a3, a0, a1, a2], over_forward: true }
    }
}

/// The diagram with crossing `idx` changed from over to under.
pub fn switch_at(d: &PlanarDiagram, idx: usize) -> PlanarDiagram {
    let mut out = d.clone();
    out.crossings[idx] = switched(d.crossings[idx]);
    out
}

/// The diagram with crossing `idx` smoothed, either along the orientation
/// or across it. The cross smoothing is reoriented afterwards.
pub fn smooth_at(d: &PlanarDiagram, idx: usize, along: bool) -> PlanarDiagram {
    let (oriented, other) = smoothing_pairs(&d.crossings[idx]);
    if along {
        splice(d, idx, &oriented)
    } else {
        reorient(&splice(d, idx, &other))
    }
}

/// Port pairs joined by the orientation-respecting smoothing, then by the
/// other one.
fn smoothing_pairs(x: &PdCrossing) -> ([(usize, usize); 2], [(usize, usize); 2]) {
    let a = [(0, 3), (1, 2)];
    let b = [(0, 1), (2, 3)];
    if x.over_forward {
        (a, b)
    } else {
        (b, a)
    }
}

/// Gives every component a consistent orientation, keeping the existing
/// direction of the first understrand met on each component.
fn reorient(d: &PlanarDiagram) -> PlanarDiagram {
    let n = d.crossings.len();
    let mut slots: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
    for (c, x) in d.crossings.iter().enumerate() {
        for p in 0..4 {
            slots.entry(x.arcs[p]).or_default().push((c, p));
        }
    }
    // entry port of each strand: [under, over]
    let mut entry: Vec<[Option<usize>; 2]> = vec![[None, None]; n];
    for c in 0..n {
        for start_port in [2, if d.crossings[c].over_forward { 3 } else { 1 }] {
            if entry[c][start_port % 2].is_some() {
                continue;
            }
            let (mut cc, mut exit) = (c, start_port);
            entry[c][start_port % 2] = Some((start_port + 2) % 4);
            loop {
                let arc = d.crossings[cc].arcs[exit];
                let &(nc, np) = slots[&arc].iter().find(|&&s| s != (cc, exit)).expect("arc has two ends");
                if entry[nc][np % 2].is_some() {
                    break;
                }
                entry[nc][np % 2] = Some(np);
                cc = nc;
                exit = (np + 2) % 4;
            }
        }
    }
    let crossings = d
        .crossings
        .iter()
        .zip(entry)
        .map(|(x, [u, o])| {
            let (u, o) = (u.unwrap(), o.unwrap());
            let arcs = if u == 0 { x.arcs } else { [x.arcs[2], x.arcs[3], x.arcs[0], x.arcs[1]] };
            let o = if u == 0 { o } else { (o + 2) % 4 };
            PdCrossing { arcs, over_forward: o == 1 }
        })
        .collect();
    PlanarDiagram { crossings, free_loops: d.free_loops }
}

/// Relabels arcs by order of first appearance so that equal diagrams share
/// one memo entry.
fn normalize(d: &PlanarDiagram) -> PlanarDiagram {
    let mut map = HashMap::new();
    let crossings = d
        .crossings
        .iter()
        .map(|x| {
            let arcs = x.arcs.map(|a| {
                let next = map.len() + 1;
                *map.entry(a).or_insert(next)
            });
            PdCrossing { arcs, over_forward: x.over_forward }
        })
        .collect();
    PlanarDiagram { crossings, free_loops: d.free_loops }
}

/// Crossings first reached along their understrand, with components
/// taken in order of their smallest arc label, each from that arc.
fn bad_crossings(d: &PlanarDiagram) -> Vec<usize> {
    let n = d.crossings.len();
    let mut under_time = vec![usize::MAX; n];
    let mut over_time = vec![usize::MAX; n];
    let ends = d.arc_ends();
    let mut t = 0;
    for comp in d.traverse() {
        for a in comp {
            let (c, p) = ends[&a].1;
            if p == 0 {
                under_time[c] = t;
            } else {
                over_time[c] = t;
            }
            t += 1;
        }
    }
    (0..n).filter(|&c| under_time[c] < over_time[c]).collect()
}

/// A skein evaluator with its own memo table.
pub struct Evaluator {
    relation: Relation,
    heuristic: Heuristic,
    memo: Option<HashMap<PlanarDiagram, LaurentPoly2>>,
    delta: LaurentPoly2,
}

impl Evaluator {
    pub fn new(relation: Relation, heuristic: Heuristic, memo: bool) -> Self {
        Self { relation, heuristic, memo: memo.then(HashMap::new), delta: relation.loop_factor() }
    }

    /// One step of the recursion. Panics on a diagram with no components.
    pub fn expand(&self, node: &SkeinNode) -> Expansion {
        let (d, curls) = strip_curls(&node.diagram);
        let kink = node.kink_exponent + curls;
        let weight = |p: LaurentPoly2| (&node.coefficient * &p).shift_a(kink);
        let bad = bad_crossings(&d);
        let pick = match self.heuristic {
            Heuristic::FirstBad => bad.first(),
            Heuristic::LastBad => bad.last(),
        };
        let Some(&idx) = pick else {
            let k = d.traverse().len() + d.free_loops;
            assert!(k > 0, "skein evaluation needs at least one component");
            let value = self.delta.pow(k as u32 - 1).shift_a(d.writhe());
            return Expansion::Leaf(weight(value));
        };
        let x = d.crossings[idx];
        let s = x.sign();
        let sz = LaurentPoly2::monomial(s, 1, 0);
        let mut children = vec![
            SkeinNode { diagram: switch_at(&d, idx), coefficient: node.coefficient.clone(), kink_exponent: kink },
            SkeinNode { diagram: smooth_at(&d, idx, true), coefficient: &node.coefficient * &sz, kink_exponent: kink },
        ];
        if self.relation == Relation::Kauffman {
            children.push(SkeinNode {
                diagram: smooth_at(&d, idx, false),
                coefficient: -(&node.coefficient * &sz),
                kink_exponent: kink,
            });
        }
        Expansion::Children(children)
    }

    pub fn evaluate(&mut self, d: &PlanarDiagram) -> LaurentPoly2 {
        let (d, curls) = strip_curls(d);
        // base points follow the caller's labels, which switching preserves;
        // only the memo key is relabeled
        let key = self.memo.as_ref().map(|_| normalize(&d));
        if let Some(v) = key.as_ref().and_then(|k| self.memo.as_ref()?.get(k)) {
            return v.shift_a(curls);
        }
        let value = match self.expand(&SkeinNode::root(d)) {
            Expansion::Leaf(v) => v,
            Expansion::Children(children) => children
                .into_iter()
                .map(|ch| (&ch.coefficient * &self.evaluate(&ch.diagram)).shift_a(ch.kink_exponent))
                .sum(),
        };
        if let (Some(m), Some(k)) = (self.memo.as_mut(), key) {
            m.insert(k, value.clone());
        }
        value.shift_a(curls)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(s: &str) -> PlanarDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn switching_twice_is_identity() {
        let x = PdCrossing { arcs: [1, 2, 3, 4], over_forward: true };
        assert_eq!(switched(switched(x)), x);
        assert_eq!(switched(x).sign(), -x.sign());
    }

    #[test]
    fn kink_strips_to_loop() {
        let (d, e) = strip_curls(&pd("X[1,1,2,2]"));
        assert!(d.crossings.is_empty());
        assert_eq!(d.free_loops, 1);
        assert_eq!(e.abs(), 1);
    }

    #[test]
    fn reorient_keeps_consistent_diagrams() {
        let t = pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
        assert_eq!(reorient(&t), t);
    }

    #[test]
    fn loop_factors() {
        assert_eq!(Relation::Homfly.loop_factor().to_string(), "z^-1*a - z^-1*a^-1");
        assert_eq!(Relation::Kauffman.loop_factor().to_string(), "z^-1*a + 1 - z^-1*a^-1");
    }
}
