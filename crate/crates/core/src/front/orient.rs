use serde::{Deserialize, Serialize};

use super::{FrontWord, LetterKind};

/// Horizontal direction of travel along a strand segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Left,
    Right,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Left => Direction::Right,
            Direction::Right => Direction::Left,
        }
    }
}

/// Adjacency of segment `(k, p)` across letter `k` to slice `k+1`:
/// `Some(q)` when the strand continues at position `q`, `None` when it
/// ends in a right cusp. Crossings swap their two strands.
pub(crate) fn next_position(word: &FrontWord, k: usize, p: usize) -> Option<usize> {
    let l = word.letters()[k];
    let m = l.index;
    match l.kind {
        LetterKind::LeftCusp => Some(if p < m { p } else { p + 2 }),
        LetterKind::Crossing => Some(if p == m {
            m + 1
        } else if p == m + 1 {
            m
        } else {
            p
        }),
        LetterKind::RightCusp => {
            if p < m {
                Some(p)
            } else if p > m + 1 {
                Some(p - 2)
            } else {
                None
            }
        }
    }
}

/// Partition of the strand segments of a front into components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentMap {
    offsets: Vec<usize>,
    component: Vec<usize>,
    count: usize,
}

impl ComponentMap {
    pub fn of(word: &FrontWord) -> Self {
        let offsets = word.segment_offsets();
        let total = *offsets.last().unwrap();
        let seg = |k: usize, p: usize| offsets[k] + p - 1;
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let union = |a: usize, b: usize, parent: &mut Vec<usize>| {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                parent[rb] = ra;
            }
        };
        for (k, l) in word.letters().iter().enumerate() {
            for p in 1..=word.strands_at(k) {
                if let Some(q) = next_position(word, k, p) {
                    union(seg(k, p), seg(k + 1, q), &mut parent);
                }
            }
            match l.kind {
                LetterKind::LeftCusp => union(seg(k + 1, l.index), seg(k + 1, l.index + 1), &mut parent),
                LetterKind::RightCusp => union(seg(k, l.index), seg(k, l.index + 1), &mut parent),
                LetterKind::Crossing => {}
            }
        }
        // number components by their first left cusp
        let mut label = vec![usize::MAX; total];
        let mut count = 0;
        for (k, l) in word.letters().iter().enumerate() {
            if l.is_left() {
                let r = find(&mut parent, seg(k + 1, l.index));
                if label[r] == usize::MAX {
                    label[r] = count;
                    count += 1;
                }
            }
        }
        let component = (0..total).map(|s| label[find(&mut parent, s)]).collect();
        Self { offsets, component, count }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Component id (0-based) of segment `(k, p)`.
    pub fn component(&self, k: usize, p: usize) -> usize {
        self.component[self.offsets[k] + p - 1]
    }
}

/// A front together with a direction on every strand segment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedFront {
    word: FrontWord,
    components: ComponentMap,
    reversed: Vec<bool>,
    dirs: Vec<Direction>,
}

impl OrientedFront {
    /// Orients each component so that the upper strand at its first left
    /// cusp travels right, then reverses the components flagged in
    /// `reversed` (missing entries keep the default).
    pub fn new(word: &FrontWord, reversed: &[bool]) -> Self {
        let components = ComponentMap::of(word);
        let offsets = &components.offsets;
        let total = *offsets.last().unwrap();
        let mut dirs: Vec<Option<Direction>> = vec![None; total];
        let flags: Vec<bool> = (0..components.count)
            .map(|c| reversed.get(c).copied().unwrap_or(false))
            .collect();

        let mut seeded = vec![false; components.count];
        for (k, l) in word.letters().iter().enumerate() {
            if !l.is_left() {
                continue;
            }
            let c = components.component(k + 1, l.index);
            if seeded[c] {
                continue;
            }
            seeded[c] = true;
            let start = if flags[c] { Direction::Left } else { Direction::Right };
            propagate(word, offsets, &mut dirs, k + 1, l.index, start);
        }
        let dirs = dirs.into_iter().map(|d| d.expect("every segment lies on a component")).collect();
        Self { word: word.clone(), components, reversed: flags, dirs }
    }

    pub fn default_of(word: &FrontWord) -> Self {
        Self::new(word, &[])
    }

    pub fn word(&self) -> &FrontWord {
        &self.word
    }

    pub fn components(&self) -> &ComponentMap {
        &self.components
    }

    /// Per-component flags, `true` where the orientation is reversed.
    pub fn reversed(&self) -> &[bool] {
        &self.reversed
    }

    pub fn direction(&self, k: usize, p: usize) -> Direction {
        self.dirs[self.components.offsets[k] + p - 1]
    }

    /// +1 for crossings whose strands travel the same horizontal way.
    pub fn crossing_sign(&self, letter: usize) -> i64 {
        let l = self.word.letters()[letter];
        debug_assert!(l.is_cross());
        if self.direction(letter, l.index) == self.direction(letter, l.index + 1) {
            1
        } else {
            -1
        }
    }

    pub fn writhe(&self) -> i64 {
        self.word
            .crossing_positions()
            .into_iter()
            .map(|i| self.crossing_sign(i))
            .sum()
    }

    pub fn invariants(&self) -> FrontInvariants {
        let c = self.word.left_cusps() as i64;
        let cr = self.word.crossing_count() as i64;
        let w = self.writhe();
        let (mut down, mut up) = (0i64, 0i64);
        for (k, l) in self.word.letters().iter().enumerate() {
            match l.kind {
                // the traversal leaves a left cusp along the upper strand
                // exactly when that strand heads right
                LetterKind::LeftCusp => {
                    if self.direction(k + 1, l.index) == Direction::Right {
                        up += 1;
                    } else {
                        down += 1;
                    }
                }
                LetterKind::RightCusp => {
                    if self.direction(k, l.index) == Direction::Right {
                        down += 1;
                    } else {
                        up += 1;
                    }
                }
                LetterKind::Crossing => {}
            }
        }
        FrontInvariants { c, cr, w, beta: w - c, r: (down - up) / 2 }
    }
}

fn propagate(
    word: &FrontWord,
    offsets: &[usize],
    dirs: &mut [Option<Direction>],
    k0: usize,
    p0: usize,
    d0: Direction,
) {
    // walk the closed curve from (k0, p0) in direction d0
    let idx = |k: usize, p: usize| offsets[k] + p - 1;
    let (mut k, mut p, mut d) = (k0, p0, d0);
    loop {
        let i = idx(k, p);
        if dirs[i].is_some() {
            break;
        }
        dirs[i] = Some(d);
        match d {
            Direction::Right => match next_position(word, k, p) {
                Some(q) => {
                    k += 1;
                    p = q;
                }
                None => {
                    // right cusp at letter k joins positions m, m+1 of slice k
                    let m = word.letters()[k].index;
                    p = if p == m { m + 1 } else { m };
                    d = Direction::Left;
                }
            },
            Direction::Left => {
                let prev = k - 1;
                let l = word.letters()[prev];
                match previous_position(word, prev, p) {
                    Some(q) => {
                        k = prev;
                        p = q;
                    }
                    None => {
                        let m = l.index;
                        p = if p == m { m + 1 } else { m };
                        d = Direction::Right;
                    }
                }
            }
        }
    }
}

/// Inverse of [`next_position`]: where segment `(k+1, q)` comes from in
/// slice `k`, or `None` when it starts at the left cusp of letter `k`.
pub(crate) fn previous_position(word: &FrontWord, k: usize, q: usize) -> Option<usize> {
    let l = word.letters()[k];
    let m = l.index;
    match l.kind {
        LetterKind::LeftCusp => {
            if q < m {
                Some(q)
            } else if q > m + 1 {
                Some(q - 2)
            } else {
                None
            }
        }
        LetterKind::Crossing => Some(if q == m {
            m + 1
        } else if q == m + 1 {
            m
        } else {
            q
        }),
        LetterKind::RightCusp => Some(if q < m { q } else { q + 2 }),
    }
}

/// Classical invariants of an oriented front.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrontInvariants {
    pub c: i64,
    pub cr: i64,
    pub w: i64,
    pub beta: i64,
    pub r: i64,
}
