use std::collections::{HashMap, HashSet};

use crate::front::{FrontWord, Letter, LetterKind};

// A word is read as a plane graph: events (cusps and crossings) joined by
// strand edges, each gap between strands labelled by the face it lies in.
// Commutation-equivalent words list the same events in different orders.
// A partial order is described by the cut, the edges crossing the vertical
// line after its last letter. A crossing or right cusp may fire on adjacent
// incoming edges; a left cusp may be born in a gap of its own face provided
// the undrawn part can still be embedded to the right of the new cut.

#[derive(Clone, Copy, Debug)]
enum Event {
    Left { face: usize, out: [usize; 2] },
    Cross { inc: [usize; 2], out: [usize; 2] },
    Right { inc: [usize; 2] },
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (a, b) = (find(parent, a), find(parent, b));
    parent[b] = a;
}

struct Graph {
    events: Vec<Event>,
    /// faces directly above and below each edge
    above: Vec<usize>,
    below: Vec<usize>,
    outer: usize,
    /// the event whose upper incoming edge this is
    consumer: Vec<Option<usize>>,
    src: Vec<usize>,
    dst: Vec<usize>,
}

impl Graph {
    fn build(letters: &[Letter]) -> Self {
        let mut parent = vec![0];
        let mut gaps = vec![0];
        let mut strands: Vec<usize> = Vec::new();
        let mut below: Vec<usize> = Vec::new();
        let mut above: Vec<usize> = Vec::new();
        let mut events = Vec::with_capacity(letters.len());
        for l in letters {
            let m = l.index;
            match l.kind {
                LetterKind::LeftCusp => {
                    let host = gaps[m - 1];
                    let inside = parent.len();
                    parent.push(inside);
                    let (a, b) = (below.len(), below.len() + 1);
                    below.extend([inside, host]);
                    above.extend([host, inside]);
                    strands.splice(m - 1..m - 1, [a, b]);
                    gaps.splice(m..m, [inside, host]);
                    events.push(Event::Left { face: host, out: [a, b] });
                }
                LetterKind::Crossing => {
                    let inc = [strands[m - 1], strands[m]];
                    let fresh = parent.len();
                    parent.push(fresh);
                    gaps[m] = fresh;
                    let out = [below.len(), below.len() + 1];
                    below.extend([fresh, gaps[m + 1]]);
                    above.extend([gaps[m - 1], fresh]);
                    strands[m - 1] = out[0];
                    strands[m] = out[1];
                    events.push(Event::Cross { inc, out });
                }
                LetterKind::RightCusp => {
                    let inc = [strands[m - 1], strands[m]];
                    strands.drain(m - 1..m + 1);
                    union(&mut parent, gaps[m - 1], gaps[m + 1]);
                    gaps.drain(m..m + 2);
                    events.push(Event::Right { inc });
                }
            }
        }
        for f in below.iter_mut().chain(above.iter_mut()) {
            *f = find(&mut parent, *f);
        }
        for e in events.iter_mut() {
            if let Event::Left { face, .. } = e {
                *face = find(&mut parent, *face);
            }
        }
        let mut consumer = vec![None; below.len()];
        let (mut src, mut dst) = (vec![0; below.len()], vec![0; below.len()]);
        for (k, e) in events.iter().enumerate() {
            if let Event::Cross { inc, .. } | Event::Right { inc } = e {
                consumer[inc[0]] = Some(k);
                dst[inc[0]] = k;
                dst[inc[1]] = k;
            }
            if let Event::Cross { out, .. } | Event::Left { out, .. } = e {
                src[out[0]] = k;
                src[out[1]] = k;
            }
        }
        let outer = find(&mut parent, 0);
        Self { events, above, below, outer, consumer, src, dst }
    }

    /// Whether the undrawn events can still be drawn as a front to the
    /// right of `cut`. The drawn part is shrunk to a single source whose
    /// edges leave in cut order. The part attached to it must then pass the
    /// upward-planarity test for a fixed embedding: every face with `2k`
    /// switch angles holds `k - 1` large angles, or `k + 1` for the outer
    /// face, where each cusp's large angle is on its tip side. A component
    /// not yet attached must lie in a face that will still be open.
    fn embeds(&self, done: &[u64], cut: &[usize]) -> bool {
        let is_done = |k: usize| done[k / 64] >> (k % 64) & 1 == 1;
        let ne = self.below.len();
        let source = self.events.len();
        let mut in_cut = vec![false; ne];
        for &e in cut {
            in_cut[e] = true;
        }
        let live = |e: usize| !is_done(self.dst[e]) && (in_cut[e] || !is_done(self.src[e]));
        let tail = |e: usize| if is_done(self.src[e]) { source } else { self.src[e] };

        // which undrawn events hang off the cut
        let mut comp: Vec<usize> = (0..=source).collect();
        for e in (0..ne).filter(|&e| live(e)) {
            union(&mut comp, tail(e), self.dst[e]);
        }
        let attached = find(&mut comp, source);
        let on = |comp: &mut Vec<usize>, v: usize| find(comp, v) == attached;

        if !cut.is_empty() {
            // rotations are counterclockwise; darts 2e leave the tail of e,
            // 2e + 1 leave its head
            let mut rot: Vec<Vec<usize>> = vec![Vec::new(); source + 1];
            for (k, ev) in self.events.iter().enumerate() {
                if is_done(k) || !on(&mut comp, k) {
                    continue;
                }
                rot[k] = match *ev {
                    Event::Cross { inc: [u, l], out: [ou, ol] } => vec![2 * ou, 2 * u + 1, 2 * l + 1, 2 * ol],
                    Event::Left { out: [a, b], .. } => vec![2 * a, 2 * b],
                    Event::Right { inc: [u, l] } => vec![2 * u + 1, 2 * l + 1],
                };
            }
            let n = cut.len();
            rot[source] = cut.iter().rev().map(|&e| 2 * e).collect();
            // (switch, large) for the angle following position i at v
            let angle = |v: usize, i: usize| -> (bool, bool) {
                if v == source {
                    // the angle from the top edge round to the bottom one faces west
                    return (true, i == n - 1);
                }
                match self.events[v] {
                    Event::Cross { .. } => (i % 2 == 1, false),
                    Event::Left { .. } => (true, i == 0),
                    Event::Right { .. } => (true, i == 1),
                }
            };

            let mut slot = vec![(usize::MAX, 0); 2 * ne];
            let mut vertices = 0;
            for (v, r) in rot.iter().enumerate() {
                vertices += !r.is_empty() as usize;
                for (i, &d) in r.iter().enumerate() {
                    slot[d] = (v, i);
                }
            }
            let mut seen = vec![false; 2 * ne];
            let (mut faces, mut darts) = (0, 0);
            for d0 in 0..2 * ne {
                if seen[d0] || slot[d0].0 == usize::MAX {
                    continue;
                }
                faces += 1;
                let (mut switches, mut large, mut outer) = (0, 0, false);
                let mut d = d0;
                while !seen[d] {
                    seen[d] = true;
                    darts += 1;
                    let (v, i) = slot[d ^ 1];
                    if v == usize::MAX {
                        return false;
                    }
                    let (sw, big) = angle(v, i);
                    switches += sw as usize;
                    large += big as usize;
                    outer |= big && v == source;
                    let r = &rot[v];
                    d = r[(i + 1) % r.len()];
                }
                let want = if outer { switches / 2 + 1 } else { (switches / 2).wrapping_sub(1) };
                if switches % 2 == 1 || large != want {
                    return false;
                }
            }
            if vertices + faces != 2 + darts / 2 {
                return false;
            }
        }

        let mut open: HashSet<usize> = HashSet::from([self.outer]);
        open.extend(cut.iter().map(|&e| self.below[e]));
        let mut floating: HashMap<usize, (usize, Vec<usize>)> = HashMap::new();
        for (k, ev) in self.events.iter().enumerate() {
            if let (false, Event::Left { face, .. }) = (is_done(k), ev) {
                if !on(&mut comp, k) {
                    // the first left cusp of a component sits in its outer face
                    floating.entry(find(&mut comp, k)).or_insert((*face, Vec::new()));
                }
            }
        }
        for e in (0..ne).filter(|&e| live(e)) {
            let c = find(&mut comp, self.dst[e]);
            match floating.get_mut(&c) {
                Some((_, faces)) => faces.extend([self.above[e], self.below[e]]),
                None => open.extend([self.above[e], self.below[e]]),
            }
        }
        loop {
            let ready: Vec<usize> = floating.iter().filter(|(_, (f, _))| open.contains(f)).map(|(&c, _)| c).collect();
            if ready.is_empty() {
                return floating.is_empty();
            }
            for c in ready {
                let (_, faces) = floating.remove(&c).unwrap();
                open.extend(faces);
            }
        }
    }
}

type State = (Vec<u64>, Vec<usize>);

/// Sort key of a letter in the representative: right cusps, then
/// crossings, then left cusps, each by index. Ranking births last keeps
/// eyes unborn until something needs them, which keeps the search narrow.
fn rank(l: &Letter) -> (u8, usize) {
    let kind = match l.kind {
        LetterKind::RightCusp => 0,
        LetterKind::Crossing => 1,
        LetterKind::LeftCusp => 2,
    };
    (kind, l.index)
}

struct Search<'g> {
    g: &'g Graph,
    completable: HashMap<State, bool>,
}

impl Search<'_> {
    fn finished(&self, done: &[u64]) -> bool {
        (0..self.g.events.len()).all(|k| done[k / 64] >> (k % 64) & 1 == 1)
    }

    /// Crossings and right cusps that may fire next, with the letter each
    /// writes and the state it leads to.
    fn fires(&self, (done, cut): &State) -> Vec<(Letter, State)> {
        let mut out = Vec::new();
        for p in 0..cut.len().saturating_sub(1) {
            let Some(k) = self.g.consumer[cut[p]] else { continue };
            let mut d = done.clone();
            d[k / 64] |= 1 << (k % 64);
            match self.g.events[k] {
                Event::Cross { inc, out: o } if inc[1] == cut[p + 1] => {
                    let mut c = cut.clone();
                    c[p] = o[0];
                    c[p + 1] = o[1];
                    out.push((Letter::cross(p + 1), (d, c)));
                }
                Event::Right { inc } if inc[1] == cut[p + 1] => {
                    let mut c = cut.clone();
                    c.drain(p..p + 2);
                    out.push((Letter::right(p + 1), (d, c)));
                }
                _ => {}
            }
        }
        out.retain(|(_, (d, c))| self.g.embeds(d, c));
        out
    }

    /// Left cusps that may be born next.
    fn births(&self, (done, cut): &State) -> Vec<(Letter, State)> {
        let face_of = |gap: usize| if gap == 0 { self.g.outer } else { self.g.below[cut[gap - 1]] };
        let mut out = Vec::new();
        for (k, ev) in self.g.events.iter().enumerate() {
            let &Event::Left { face, out: o } = ev else { continue };
            if done[k / 64] >> (k % 64) & 1 == 1 {
                continue;
            }
            let mut d = done.clone();
            d[k / 64] |= 1 << (k % 64);
            for gap in (0..=cut.len()).filter(|&g| face_of(g) == face) {
                let mut c = cut.clone();
                c.splice(gap..gap, o);
                if self.g.embeds(&d, &c) {
                    out.push((Letter::left(gap + 1), (d.clone(), c)));
                }
            }
        }
        out
    }

    fn is_completable(&mut self, s: &State) -> bool {
        if self.finished(&s.0) {
            return true;
        }
        if let Some(&hit) = self.completable.get(s) {
            return hit;
        }
        let ok = self.fires(s).iter().any(|(_, t)| self.is_completable(t))
            || self.births(s).iter().any(|(_, t)| self.is_completable(t));
        self.completable.insert(s.clone(), ok);
        ok
    }

    /// Least completion: every state reachable by the best prefix so far is
    /// advanced by the least letter that still leads somewhere.
    fn least(&mut self) -> Vec<Letter> {
        let n = self.g.events.len();
        let mut frontier: Vec<State> = vec![(vec![0; n / 64 + 1], Vec::new())];
        let mut word = Vec::with_capacity(n);
        while !self.finished(&frontier[0].0) {
            let mut options: Vec<(Letter, State)> = frontier.iter().flat_map(|s| self.fires(s)).collect();
            options.retain(|(_, t)| self.is_completable(t));
            if options.is_empty() {
                options = frontier.iter().flat_map(|s| self.births(s)).collect();
                options.retain(|(_, t)| self.is_completable(t));
            }
            let least = options.iter().map(|o| o.0).min_by_key(rank).expect("the input order always completes");
            let mut seen = HashSet::new();
            frontier = options.into_iter().filter(|(l, s)| *l == least && seen.insert(s.clone())).map(|(_, s)| s).collect();
            word.push(least);
        }
        word
    }
}

/// Least member of a word's commutation class under [`rank`], with a cache
/// keyed on the input word.
pub(crate) struct Canonicalizer {
    memo: HashMap<Vec<Letter>, FrontWord>,
}

impl Canonicalizer {
    pub(crate) fn new() -> Self {
        Self { memo: HashMap::new() }
    }

    pub(crate) fn canonical(&mut self, word: &FrontWord) -> FrontWord {
        if let Some(hit) = self.memo.get(word.letters()) {
            return hit.clone();
        }
        let g = Graph::build(word.letters());
        let least = Search { g: &g, completable: HashMap::new() }.least();
        let canon = FrontWord::new(least).expect("event orders are valid words");
        self.memo.insert(word.letters().to_vec(), canon.clone());
        canon
    }
}

/// A fixed representative of the word's class under the planar-isotopy
/// commutations: its least member when letters are ordered right cusps
/// first, then crossings, then left cusps, each by index.
pub fn canonicalize(word: &FrontWord) -> FrontWord {
    Canonicalizer::new().canonical(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canon(s: &str) -> String {
        canonicalize(&s.parse().unwrap()).to_string()
    }

    #[test]
    fn commuting_crossings() {
        assert_eq!(canon("l1 l3 x1 x3 r3 r1"), canon("l1 l3 x3 x1 r3 r1"));
    }

    #[test]
    fn idempotent() {
        for s in ["l1 l3 x2 x2 x2 r1 r1", "l1 r1 l1 r1", "l1 l1 x2 x1 r1 r1"] {
            assert_eq!(canon(&canon(s)), canon(s));
        }
    }

    #[test]
    fn nested_cusps_commute() {
        assert_eq!(canon("l1 l3 r1 r1"), canon("l1 l1 r1 r1"));
        assert_eq!(canon("l1 l3 r1 r1"), "l1 r1 l1 r1");
    }
}

