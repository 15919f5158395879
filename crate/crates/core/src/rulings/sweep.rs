use std::collections::HashMap;

use crate::front::{FrontWord, Letter, LetterKind, OrientedFront};

/// The eye structure of one vertical slice during a ruling sweep: every
/// position is paired with the other strand of its eye.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SweepState {
    /// `partner[p-1]` is the 1-based position paired with `p`.
    partner: Vec<usize>,
    switches: usize,
}

/// Result of advancing the sweep by one letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Alive(SweepState),
    Dead,
}

impl SweepState {
    pub fn empty() -> Self {
        Self { partner: Vec::new(), switches: 0 }
    }

    /// Builds a state from explicit eye pairs, e.g. `[(1, 2), (3, 4)]`.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        let n = pairs.len() * 2;
        let mut partner = vec![0; n];
        for &(a, b) in pairs {
            partner[a - 1] = b;
            partner[b - 1] = a;
        }
        assert!(partner.iter().all(|&p| p != 0), "pairs must cover 1..=N");
        Self { partner, switches: 0 }
    }

    pub fn strands(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p - 1]
    }

    pub fn switches(&self) -> usize {
        self.switches
    }

    /// Eye pairs `(upper, lower)` sorted by upper position.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.strands())
            .filter(|&p| p < self.partner(p))
            .map(|p| (p, self.partner(p)))
            .collect()
    }
}

fn span(p: usize, q: usize) -> (usize, usize) {
    (p.min(q), p.max(q))
}

/// Eyes through `m` and `m+1` may switch only if they are disjoint or
/// nested.
fn normal_at(state: &SweepState, m: usize) -> bool {
    let (a0, a1) = span(m, state.partner(m));
    let (b0, b1) = span(m + 1, state.partner(m + 1));
    let disjoint = a1 < b0 || b1 < a0;
    let nested = (a0 < b0 && b1 < a1) || (b0 < a0 && a1 < b1);
    disjoint || nested
}

/// Advances the sweep across `letter`. `switch` is the decision at a
/// crossing and is ignored for cusps. `codirected` says whether the two
/// strands of a crossing travel the same way; pass `true` when orientation
/// is not being enforced.
pub fn sweep_step(state: &SweepState, letter: Letter, switch: bool, codirected: bool) -> Step {
    let m = letter.index;
    let mut next = state.clone();
    match letter.kind {
        LetterKind::LeftCusp => {
            // positions >= m shift down by two
            for q in next.partner.iter_mut() {
                if *q >= m {
                    *q += 2;
                }
            }
            next.partner.insert(m - 1, m + 1);
            next.partner.insert(m, m);
        }
        LetterKind::RightCusp => {
            if state.partner(m) != m + 1 {
                return Step::Dead;
            }
            next.partner.drain(m - 1..m + 1);
            for q in next.partner.iter_mut() {
                if *q > m + 1 {
                    *q -= 2;
                }
            }
        }
        LetterKind::Crossing => {
            if state.partner(m) == m + 1 {
                // an eye cannot cross itself, switched or not
                return Step::Dead;
            }
            if switch {
                if !normal_at(state, m) {
                    return Step::Dead;
                }
                if !codirected {
                    return Step::Dead;
                }
                next.switches += 1;
            } else {
                let (pm, pm1) = (state.partner(m), state.partner(m + 1));
                next.partner.swap(m - 1, m);
                next.partner[pm - 1] = m + 1;
                next.partner[pm1 - 1] = m;
            }
        }
    }
    Step::Alive(next)
}

fn codirected(orient: Option<&OrientedFront>, k: usize) -> bool {
    orient.is_none_or(|o| o.crossing_sign(k) > 0)
}

/// Depth-first enumeration of all rulings; returns switch sets as 1-based
/// crossing ordinals, non-switch branches first.
pub(crate) fn enumerate(word: &FrontWord, orient: Option<&OrientedFront>) -> Vec<Vec<usize>> {
    let letters = word.letters();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn go(
        letters: &[Letter],
        orient: Option<&OrientedFront>,
        k: usize,
        ordinal: usize,
        state: &SweepState,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == letters.len() {
            out.push(chosen.clone());
            return;
        }
        let l = letters[k];
        if l.is_cross() {
            let ord = ordinal + 1;
            if let Step::Alive(s) = sweep_step(state, l, false, true) {
                go(letters, orient, k + 1, ord, &s, chosen, out);
            }
            if let Step::Alive(s) = sweep_step(state, l, true, codirected(orient, k)) {
                chosen.push(ord);
                go(letters, orient, k + 1, ord, &s, chosen, out);
                chosen.pop();
            }
        } else if let Step::Alive(s) = sweep_step(state, l, false, true) {
            go(letters, orient, k + 1, ordinal, &s, chosen, out);
        }
    }
    go(letters, orient, 0, 0, &SweepState::empty(), &mut chosen, &mut out);
    out
}

/// Counts rulings by switch number, merging branches that reach the same
/// eye structure at the same slice.
pub(crate) fn count_by_switches(word: &FrontWord, orient: Option<&OrientedFront>) -> HashMap<usize, u64> {
    // state -> (switch count -> multiplicity); the switch counter inside the
    // state is reset so that equal eye structures merge
    let mut layer: HashMap<SweepState, HashMap<usize, u64>> = HashMap::new();
    layer.insert(SweepState::empty(), HashMap::from([(0, 1)]));
    for (k, &l) in word.letters().iter().enumerate() {
        let co = !l.is_cross() || codirected(orient, k);
        let mut next: HashMap<SweepState, HashMap<usize, u64>> = HashMap::new();
        for (state, counts) in &layer {
            let decisions: &[bool] = if l.is_cross() { &[false, true] } else { &[false] };
            for &sw in decisions {
                if let Step::Alive(mut s) = sweep_step(state, l, sw, co) {
                    let extra = s.switches;
                    s.switches = 0;
                    let slot = next.entry(s).or_default();
                    for (&n, &c) in counts {
                        *slot.entry(n + extra).or_default() += c;
                    }
                }
            }
        }
        layer = next;
    }
    layer.into_values().next().unwrap_or_default()
}
