//! Oriented planar diagrams and the topological diagram of a front.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Direction, LetterKind, OrientedFront};

/// One crossing. `arcs` lists the four incident arcs counterclockwise,
/// starting with the incoming under-arc, so the understrand runs
/// `arcs[0] -> arcs[2]`. The overstrand runs `arcs[1] -> arcs[3]` when
/// `over_forward` and `arcs[3] -> arcs[1]` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PdCrossing {
    pub arcs: [usize; 4],
    pub over_forward: bool,
}

impl PdCrossing {
    pub fn sign(&self) -> i64 {
        if self.over_forward {
            -1
        } else {
            1
        }
    }

    pub fn is_incoming(&self, port: usize) -> bool {
        match port {
            0 => true,
            2 => false,
            1 => self.over_forward,
            _ => !self.over_forward,
        }
    }
}

/// A link diagram: crossings plus crossingless circles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    pub crossings: Vec<PdCrossing>,
    pub free_loops: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PdParseError {
    #[error("unexpected text {0:?}")]
    Syntax(String),
    #[error("arc {0} does not appear exactly twice")]
    ArcCount(usize),
    #[error("arcs around crossing {0} are not consistently oriented")]
    Orientation(usize),
}

impl PlanarDiagram {
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(PdCrossing::sign).sum()
    }

    /// Incoming and outgoing port of every arc.
    pub(crate) fn arc_ends(&self) -> HashMap<usize, ((usize, usize), (usize, usize))> {
        let mut heads = HashMap::new();
        let mut tails = HashMap::new();
        for (c, x) in self.crossings.iter().enumerate() {
            for p in 0..4 {
                if x.is_incoming(p) {
                    heads.insert(x.arcs[p], (c, p));
                } else {
                    tails.insert(x.arcs[p], (c, p));
                }
            }
        }
        heads
            .into_iter()
            .map(|(a, h)| (a, (tails[&a], h)))
            .collect()
    }

    /// Checks that every arc has one tail and one head.
    pub fn validate(&self) -> Result<(), PdParseError> {
        let mut seen: BTreeMap<usize, (u32, u32)> = BTreeMap::new();
        for x in &self.crossings {
            for p in 0..4 {
                let e = seen.entry(x.arcs[p]).or_default();
                if x.is_incoming(p) {
                    e.0 += 1;
                } else {
                    e.1 += 1;
                }
            }
        }
        for (a, (i, o)) in seen {
            if i + o != 2 {
                return Err(PdParseError::ArcCount(a));
            }
            if i != 1 {
                return Err(PdParseError::Orientation(a));
            }
        }
        Ok(())
    }

    /// Components with crossings, each as its arcs in traversal order,
    /// starting from its smallest arc label; components sorted by that label.
    pub fn traverse(&self) -> Vec<Vec<usize>> {
        let ends = self.arc_ends();
        let mut arcs: Vec<usize> = ends.keys().copied().collect();
        arcs.sort_unstable();
        let mut done = std::collections::HashSet::new();
        let mut out = Vec::new();
        for start in arcs {
            if done.contains(&start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut a = start;
            loop {
                done.insert(a);
                comp.push(a);
                let (c, p) = ends[&a].1;
                a = self.crossings[c].arcs[(p + 2) % 4];
                if a == start {
                    break;
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.traverse().len() + self.free_loops
    }

    /// Renumbers arcs `1, 2, ...` consecutively along each component.
    pub fn relabeled(&self) -> PlanarDiagram {
        let mut map = HashMap::new();
        let mut next = 1;
        for comp in self.traverse() {
            for a in comp {
                map.insert(a, next);
                next += 1;
            }
        }
        PlanarDiagram {
            crossings: self
                .crossings
                .iter()
                .map(|x| PdCrossing { arcs: x.arcs.map(|a| map[&a]), over_forward: x.over_forward })
                .collect(),
            free_loops: self.free_loops,
        }
    }

    /// The topological diagram of an oriented front: cusps are smoothed and
    /// at each crossing the strand running from upper left to lower right
    /// passes over.
    pub fn from_front(of: &OrientedFront) -> PlanarDiagram {
        let word = of.word();
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
        fn union(parent: &mut [usize], a: usize, b: usize) {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                parent[rb] = ra;
            }
        }
        for (k, l) in word.letters().iter().enumerate() {
            let m = l.index;
            match l.kind {
                LetterKind::LeftCusp => {
                    for p in 1..=word.strands_at(k) {
                        union(&mut parent, seg(k, p), seg(k + 1, if p < m { p } else { p + 2 }));
                    }
                    union(&mut parent, seg(k + 1, m), seg(k + 1, m + 1));
                }
                LetterKind::RightCusp => {
                    for p in 1..=word.strands_at(k) {
                        if p < m {
                            union(&mut parent, seg(k, p), seg(k + 1, p));
                        } else if p > m + 1 {
                            union(&mut parent, seg(k, p), seg(k + 1, p - 2));
                        }
                    }
                    union(&mut parent, seg(k, m), seg(k, m + 1));
                }
                LetterKind::Crossing => {
                    for p in 1..=word.strands_at(k) {
                        if p != m && p != m + 1 {
                            union(&mut parent, seg(k, p), seg(k + 1, p));
                        }
                    }
                }
            }
        }
        let mut crossings = Vec::new();
        let mut used = vec![false; total];
        for k in word.crossing_positions() {
            let m = word.letters()[k].index;
            // ports counterclockwise from south-west
            let ports = [seg(k, m + 1), seg(k + 1, m + 1), seg(k + 1, m), seg(k, m)];
            let arcs = ports.map(|s| find(&mut parent, s));
            for a in arcs {
                used[a] = true;
            }
            let under_right = of.direction(k, m + 1) == Direction::Right;
            let over_right = of.direction(k, m) == Direction::Right;
            let x = if under_right {
                PdCrossing { arcs, over_forward: !over_right }
            } else {
                PdCrossing { arcs: [arcs[2], arcs[3], arcs[0], arcs[1]], over_forward: over_right }
            };
            crossings.push(x);
        }
        let mut free = std::collections::BTreeSet::new();
        for s in 0..total {
            let r = find(&mut parent, s);
            if !used[r] {
                free.insert(r);
            }
        }
        PlanarDiagram { crossings, free_loops: free.len() }.relabeled()
    }

    /// Infers overstrand directions for crossings given as bare
    /// `[i, j, k, l]` quadruples with `i` the incoming under-arc.
    pub fn from_quadruples(quads: &[[usize; 4]], free_loops: usize) -> Result<PlanarDiagram, PdParseError> {
        let mut count: BTreeMap<usize, usize> = BTreeMap::new();
        for q in quads {
            for a in q {
                *count.entry(*a).or_default() += 1;
            }
        }
        if let Some((a, _)) = count.iter().find(|(_, n)| **n != 2) {
            return Err(PdParseError::ArcCount(*a));
        }
        // occurrences of every arc: (crossing, port)
        let mut occ: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
        for (c, q) in quads.iter().enumerate() {
            for p in 0..4 {
                occ.entry(q[p]).or_default().push((c, p));
            }
        }
        let mut dir: Vec<Option<bool>> = vec![None; quads.len()];
        let incoming = |c: usize, p: usize, dir: &[Option<bool>]| -> Option<bool> {
            match p {
                0 => Some(true),
                2 => Some(false),
                1 => dir[c],
                _ => dir[c].map(|f| !f),
            }
        };
        loop {
            let mut changed = false;
            for ends in occ.values() {
                let [(c1, p1), (c2, p2)] = [ends[0], ends[1]];
                let (i1, i2) = (incoming(c1, p1, &dir), incoming(c2, p2, &dir));
                match (i1, i2) {
                    (Some(a), Some(b)) if a == b => return Err(PdParseError::Orientation(c1)),
                    (Some(a), None) => {
                        // (c2, p2) must be the opposite end; p2 is an over port
                        dir[c2] = Some(if p2 == 1 { !a } else { a });
                        changed = true;
                    }
                    (None, Some(b)) => {
                        dir[c1] = Some(if p1 == 1 { !b } else { b });
                        changed = true;
                    }
                    _ => {}
                }
            }
            if changed {
                continue;
            }
            // a component that only passes over: orient by label order
            match dir.iter().position(Option::is_none) {
                Some(c) => {
                    let [_, j, _, l] = quads[c];
                    dir[c] = Some(l == j + 1 || j > l + 1);
                }
                None => break,
            }
        }
        let d = PlanarDiagram {
            crossings: quads
                .iter()
                .zip(dir)
                .map(|(q, f)| PdCrossing { arcs: *q, over_forward: f.unwrap() })
                .collect(),
            free_loops,
        };
        d.validate()?;
        Ok(d)
    }
}

impl fmt::Display for PlanarDiagram {
    /// `X[i,j,k,l]` records followed by one `O[n]` record per free loop.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .crossings
            .iter()
            .map(|x| format!("X[{},{},{},{}]", x.arcs[0], x.arcs[1], x.arcs[2], x.arcs[3]))
            .collect();
        let max_arc = self.crossings.iter().flat_map(|x| x.arcs).max().unwrap_or(0);
        for i in 0..self.free_loops {
            parts.push(format!("O[{}]", max_arc + 1 + i));
        }
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for PlanarDiagram {
    type Err = PdParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut quads = Vec::new();
        let mut loops = 0;
        let mut rest = s.trim();
        while !rest.is_empty() {
            let (tag, after) = rest.split_at(1);
            let close = after.find(']').ok_or_else(|| PdParseError::Syntax(rest.to_string()))?;
            let inner = after[..close]
                .strip_prefix('[')
                .ok_or_else(|| PdParseError::Syntax(rest.to_string()))?;
            let nums: Result<Vec<usize>, _> = inner.split(',').map(|t| t.trim().parse()).collect();
            let nums = nums.map_err(|_| PdParseError::Syntax(inner.to_string()))?;
            match (tag, nums.len()) {
                ("X", 4) => quads.push([nums[0], nums[1], nums[2], nums[3]]),
                ("O", 1) => loops += 1,
                _ => return Err(PdParseError::Syntax(rest.to_string())),
            }
            rest = after[close + 1..].trim_start_matches(|c: char| c.is_whitespace() || c == ',');
        }
        Self::from_quadruples(&quads, loops)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::FrontWord;

    fn top(s: &str, rev: &[bool]) -> PlanarDiagram {
        let w: FrontWord = s.parse().unwrap();
        PlanarDiagram::from_front(&OrientedFront::new(&w, rev))
    }

    #[test]
    fn unknot_is_a_free_loop() {
        let d = top("l1 r1", &[]);
        assert!(d.crossings.is_empty());
        assert_eq!(d.free_loops, 1);
        assert_eq!(top("l1 r1 l1 r1", &[]).free_loops, 2);
    }

    #[test]
    fn trefoil_and_kink_writhes() {
        let t = top("l1 l3 x2 x2 x2 r1 r1", &[]);
        assert_eq!(t.crossings.len(), 3);
        assert_eq!(t.writhe(), 3);
        assert_eq!(t.component_count(), 1);
        t.validate().unwrap();
        let k = top("l1 x1 r1", &[]);
        assert_eq!((k.crossings.len(), k.writhe()), (1, -1));
    }

    #[test]
    fn pd_text_round_trip() {
        let t = top("l1 l3 x2 x2 r1 r1 l1 r1", &[false, true]);
        let text = t.to_string();
        let back: PlanarDiagram = text.parse().unwrap();
        assert_eq!(back, t);
        assert_eq!(back.free_loops, 1);
    }

    #[test]
    fn standard_pd_codes_parse() {
        let fig8: PlanarDiagram = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]".parse().unwrap();
        assert_eq!(fig8.writhe(), 0);
        let trefoil: PlanarDiagram = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]".parse().unwrap();
        assert_eq!(trefoil.writhe().abs(), 3);
        assert!("X[1,2,3]".parse::<PlanarDiagram>().is_err());
        assert!("X[1,1,2,3]".parse::<PlanarDiagram>().is_err());
    }
}
