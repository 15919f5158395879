//! Direct check of the ruling definition on a candidate switch set. Kept
//! apart from the sweep on purpose: it resolves the whole front at once and
//! reads the eye structure off the resolved curves.

use crate::front::{FrontWord, LetterKind, OrientedFront};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Role {
    Upper,
    Lower,
}

struct Resolution {
    offsets: Vec<usize>,
    /// resolved successor of each segment in the next slice
    right: Vec<Option<usize>>,
    parent: Vec<usize>,
}

impl Resolution {
    fn seg(&self, k: usize, p: usize) -> usize {
        self.offsets[k] + p - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[rb] = ra;
        }
    }
}

fn resolve(word: &FrontWord, switched: &[bool]) -> Resolution {
    let counts = word.strand_counts();
    let mut offsets = vec![0];
    for n in counts {
        offsets.push(offsets.last().unwrap() + n);
    }
    let total = *offsets.last().unwrap();
    let mut r = Resolution { offsets, right: vec![None; total], parent: (0..total).collect() };
    for (k, l) in word.letters().iter().enumerate() {
        let m = l.index;
        for p in 1..=counts[k] {
            let q = match l.kind {
                LetterKind::LeftCusp => Some(if p < m { p } else { p + 2 }),
                LetterKind::RightCusp if p == m || p == m + 1 => None,
                LetterKind::RightCusp => Some(if p < m { p } else { p - 2 }),
                LetterKind::Crossing if switched[k] => Some(p),
                LetterKind::Crossing if p == m => Some(m + 1),
                LetterKind::Crossing if p == m + 1 => Some(m),
                LetterKind::Crossing => Some(p),
            };
            if let Some(q) = q {
                let (a, b) = (r.seg(k, p), r.seg(k + 1, q));
                r.right[a] = Some(b);
                r.union(a, b);
            }
        }
        match l.kind {
            LetterKind::LeftCusp => {
                let (a, b) = (r.seg(k + 1, m), r.seg(k + 1, m + 1));
                r.union(a, b);
            }
            LetterKind::RightCusp => {
                let (a, b) = (r.seg(k, m), r.seg(k, m + 1));
                r.union(a, b);
            }
            LetterKind::Crossing => {}
        }
    }
    r
}

/// Whether the crossings with the given 1-based ordinals form a ruling of
/// `word`. With `orient`, every switch must also be a positive crossing.
pub fn is_ruling(word: &FrontWord, switches: &[usize], orient: Option<&OrientedFront>) -> bool {
    let crossings = word.crossing_positions();
    let mut switched = vec![false; word.len()];
    for &ord in switches {
        match crossings.get(ord.wrapping_sub(1)) {
            Some(&k) => switched[k] = true,
            None => return false,
        }
    }
    let mut res = resolve(word, &switched);
    let total = res.right.len();
    let comp: Vec<usize> = (0..total).map(|s| res.find(s)).collect();

    // exactly one left cusp per resolved curve
    let mut cusps = vec![0usize; total];
    for (k, l) in word.letters().iter().enumerate() {
        if l.is_left() {
            cusps[comp[res.seg(k + 1, l.index)]] += 1;
        }
    }
    if (0..total).any(|s| cusps[comp[s]] != 1) {
        return false;
    }

    // no curve meets itself at a crossing
    for &k in &crossings {
        let m = word.letters()[k].index;
        if comp[res.seg(k, m)] == comp[res.seg(k, m + 1)] {
            return false;
        }
    }

    // upper and lower strand of each eye, traced from its left cusp
    let mut role = vec![None; total];
    for (k, l) in word.letters().iter().enumerate() {
        if !l.is_left() {
            continue;
        }
        for (start, r) in [(l.index, Role::Upper), (l.index + 1, Role::Lower)] {
            let mut s = Some(res.seg(k + 1, start));
            while let Some(x) = s {
                role[x] = Some(r);
                s = res.right[x];
            }
        }
    }

    let position_of = |k: usize, c: usize, r: Role| -> usize {
        (1..=word.strands_at(k))
            .find(|&p| {
                let s = res.offsets[k] + p - 1;
                comp[s] == c && role[s] == Some(r)
            })
            .expect("eye has both strands in every slice it spans")
    };

    for &k in crossings.iter().filter(|&&k| switched[k]) {
        let m = word.letters()[k].index;
        let (p, q) = (res.seg(k, m), res.seg(k, m + 1));
        let (j1, j2) = (comp[p], comp[q]);
        let normal = match (role[p].unwrap(), role[q].unwrap()) {
            // eye j1 sits entirely above eye j2
            (Role::Lower, Role::Upper) => true,
            // j1's lower strand lies below j2's
            (Role::Upper, Role::Upper) => position_of(k, j1, Role::Lower) > position_of(k, j2, Role::Lower),
            // j1's upper strand lies below j2's
            (Role::Lower, Role::Lower) => position_of(k, j1, Role::Upper) > position_of(k, j2, Role::Upper),
            (Role::Upper, Role::Lower) => false,
        };
        if !normal {
            return false;
        }
        if let Some(o) = orient {
            if o.crossing_sign(k) < 0 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "l1 l3 x2 x2 x2 r1 r1";

    fn w(s: &str) -> FrontWord {
        s.parse().unwrap()
    }

    #[test]
    fn unknot_empty_ruling() {
        assert!(is_ruling(&w("l1 r1"), &[], None));
    }

    #[test]
    fn trefoil_cases() {
        let t = w(TREFOIL);
        assert!(is_ruling(&t, &[1], None));
        assert!(is_ruling(&t, &[3], None));
        assert!(is_ruling(&t, &[1, 2, 3], None));
        assert!(!is_ruling(&t, &[2], None));
        assert!(!is_ruling(&t, &[], None));
        assert!(!is_ruling(&t, &[1, 2], None));
    }

    #[test]
    fn zigzag_has_no_ruling() {
        let z = w("l1 x1 r1");
        assert!(!is_ruling(&z, &[], None));
        assert!(!is_ruling(&z, &[1], None));
    }

    #[test]
    fn bad_ordinal_is_rejected() {
        assert!(!is_ruling(&w(TREFOIL), &[4], None));
        assert!(!is_ruling(&w(TREFOIL), &[0], None));
    }

    #[test]
    fn negative_switch_fails_oriented() {
        let h = w("l1 l3 x2 x2 r1 r1");
        let default = OrientedFront::new(&h, &[false, false]);
        let flipped = OrientedFront::new(&h, &[false, true]);
        assert!(is_ruling(&h, &[1, 2], None));
        assert!(!is_ruling(&h, &[1, 2], Some(&default)));
        assert!(is_ruling(&h, &[1, 2], Some(&flipped)));
    }
}
