//! Word-level Legendrian moves: planar-isotopy commutations and the three
//! Reidemeister-type relations, each usable in both directions.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use super::{FrontWord, Letter, LetterKind, OrientedFront};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Swap the letters at `site` and `site+1` by a planar-isotopy relation.
    Commute,
    /// Same, taking the second available rewriting (only `r_m l_m` and its
    /// two rewritten forms admit two).
    CommuteAlt,
    /// `l_m x_{m-1} r_m -> id` or `l_m x_{m+1} r_m -> id` starting at `site`.
    Type1Remove,
    /// Insert `l_m x_{m-1} r_m` (`above`) or `l_m x_{m+1} r_m` before letter `site`.
    Type1Insert { index: usize, above: bool },
    /// `l_{m-1} x_m x_{m-1} -> l_m`, `l_{m+1} x_m x_{m+1} -> l_m` and their
    /// mirrors `x_{m-1} x_m r_{m-1} -> r_m`, `x_{m+1} x_m r_{m+1} -> r_m`.
    Type2Remove,
    /// Inverse of `Type2Remove` applied to the cusp letter at `site`.
    Type2Insert { above: bool },
    /// `x_{m+1} x_m x_{m+1} <-> x_m x_{m+1} x_m` starting at `site`.
    Type3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub rule: Rule,
    pub site: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StabilizeFlavor {
    /// The new eye sits above the strand: `l_p r_{p+1}`.
    Up,
    /// The new eye sits below the strand: `l_{p+1} r_p`.
    Down,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("move {0} is not applicable")]
    NotApplicable(Move),
    #[error("cannot parse move {0:?}")]
    Syntax(String),
    #[error("no strand segment at slice {slice}, position {position}")]
    BadSite { slice: usize, position: usize },
}

/// All rewritings `a b = b' a'` of an adjacent pair by the planar-isotopy
/// relations. Results are not yet checked against strand counts.
pub(crate) fn commutations(a: Letter, b: Letter) -> Vec<(Letter, Letter)> {
    use LetterKind::*;
    let (p, q) = (a.index as i64, b.index as i64);
    let mk = |k: LetterKind, i: i64| Letter { kind: k, index: i as usize };
    let mut out = Vec::new();
    match (a.kind, b.kind) {
        (Crossing, Crossing) => {
            if (p - q).abs() >= 2 {
                out.push((b, a));
            }
        }
        (LeftCusp, Crossing) => {
            if p > q + 1 {
                out.push((b, a));
            }
            if q > p + 1 {
                out.push((mk(Crossing, q - 2), a));
            }
        }
        (Crossing, LeftCusp) => {
            if q > p + 1 {
                out.push((b, a));
            }
            if p >= q {
                out.push((b, mk(Crossing, p + 2)));
            }
        }
        (Crossing, RightCusp) => {
            if q > p + 1 {
                out.push((b, a));
            }
            if p > q + 1 {
                out.push((b, mk(Crossing, p - 2)));
            }
        }
        (RightCusp, Crossing) => {
            if p > q + 1 {
                out.push((b, a));
            }
            if q >= p {
                out.push((mk(Crossing, q + 2), a));
            }
        }
        (LeftCusp, LeftCusp) => {
            if q > p + 1 {
                out.push((mk(LeftCusp, q - 2), a));
            }
            if p >= q {
                out.push((b, mk(LeftCusp, p + 2)));
            }
        }
        (RightCusp, RightCusp) => {
            if p > q + 1 {
                out.push((b, mk(RightCusp, p - 2)));
            }
            if q >= p {
                out.push((mk(RightCusp, q + 2), a));
            }
        }
        (RightCusp, LeftCusp) => {
            if p >= q {
                out.push((b, mk(RightCusp, p + 2)));
            }
            if q >= p {
                out.push((mk(LeftCusp, q + 2), a));
            }
        }
        (LeftCusp, RightCusp) => {
            if q - 2 >= p {
                out.push((mk(RightCusp, q - 2), a));
            }
            if p - 2 >= q {
                out.push((b, mk(LeftCusp, p - 2)));
            }
        }
    }
    out.retain(|(x, y)| x.index >= 1 && y.index >= 1);
    out
}

/// Valid rewritings of the pair at `site`, checked against strand counts.
pub(crate) fn valid_commutations(letters: &[Letter], counts: &[usize], site: usize) -> Vec<(Letter, Letter)> {
    let n = counts[site];
    commutations(letters[site], letters[site + 1])
        .into_iter()
        .filter(|(x, y)| {
            x.apply(n).and_then(|n1| y.apply(n1)) == Some(counts[site + 2])
        })
        .collect()
}

fn type1_match(w: &[Letter]) -> bool {
    matches!(w, [l, x, r] if l.is_left() && x.is_cross() && r.is_right()
        && r.index == l.index
        && (x.index + 1 == l.index || x.index == l.index + 1))
}

fn type2_match(w: &[Letter]) -> Option<Letter> {
    match w {
        [l, a, b] if l.is_left() && a.is_cross() && b.is_cross() => {
            let m = a.index;
            let (above, below) = (l.index + 1 == m && b.index + 1 == m, l.index == m + 1 && b.index == m + 1);
            (above || below).then(|| Letter::left(m))
        }
        [a, b, r] if a.is_cross() && b.is_cross() && r.is_right() => {
            let m = b.index;
            let (above, below) = (a.index + 1 == m && r.index + 1 == m, a.index == m + 1 && r.index == m + 1);
            (above || below).then(|| Letter::right(m))
        }
        _ => None,
    }
}

fn type3_match(w: &[Letter]) -> Option<[Letter; 3]> {
    match w {
        [a, b, c] if a.is_cross() && b.is_cross() && c.is_cross() && a.index == c.index => {
            if a.index == b.index + 1 || b.index == a.index + 1 {
                Some([*b, *a, *b])
            } else {
                None
            }
        }
        _ => None,
    }
}

impl FrontWord {
    /// Rewrites the word by one relation at an explicit site. Returns the
    /// new word and the replaced ranges `(old, new)` of letter positions.
    pub fn apply_move_with_window(&self, mv: Move) -> Result<(FrontWord, Range<usize>, Range<usize>), MoveError> {
        let letters = self.letters();
        let counts = self.strand_counts();
        let na = || MoveError::NotApplicable(mv);
        let s = mv.site;
        let (old_len, replacement): (usize, Vec<Letter>) = match mv.rule {
            Rule::Commute | Rule::CommuteAlt => {
                if s + 1 >= letters.len() {
                    return Err(na());
                }
                let opts = valid_commutations(letters, counts, s);
                let pick = if mv.rule == Rule::Commute { 0 } else { 1 };
                let (x, y) = *opts.get(pick).ok_or_else(na)?;
                (2, vec![x, y])
            }
            Rule::Type1Remove => {
                if s + 3 > letters.len() || !type1_match(&letters[s..s + 3]) {
                    return Err(na());
                }
                (3, vec![])
            }
            Rule::Type1Insert { index: m, above } => {
                if s > letters.len() {
                    return Err(na());
                }
                let x = if above {
                    if m < 2 {
                        return Err(na());
                    }
                    m - 1
                } else {
                    m + 1
                };
                (0, vec![Letter::left(m), Letter::cross(x), Letter::right(m)])
            }
            Rule::Type2Remove => {
                if s + 3 > letters.len() {
                    return Err(na());
                }
                let l = type2_match(&letters[s..s + 3]).ok_or_else(na)?;
                (3, vec![l])
            }
            Rule::Type2Insert { above } => {
                let l = *letters.get(s).ok_or_else(na)?;
                let m = l.index;
                if above && m < 2 {
                    return Err(na());
                }
                let rep = match (l.kind, above) {
                    (LetterKind::LeftCusp, true) => {
                        vec![Letter::left(m - 1), Letter::cross(m), Letter::cross(m - 1)]
                    }
                    (LetterKind::LeftCusp, false) => {
                        vec![Letter::left(m + 1), Letter::cross(m), Letter::cross(m + 1)]
                    }
                    (LetterKind::RightCusp, true) => {
                        vec![Letter::cross(m - 1), Letter::cross(m), Letter::right(m - 1)]
                    }
                    (LetterKind::RightCusp, false) => {
                        vec![Letter::cross(m + 1), Letter::cross(m), Letter::right(m + 1)]
                    }
                    (LetterKind::Crossing, _) => return Err(na()),
                };
                (1, rep)
            }
            Rule::Type3 => {
                if s + 3 > letters.len() {
                    return Err(na());
                }
                (3, type3_match(&letters[s..s + 3]).ok_or_else(na)?.to_vec())
            }
        };
        let new_len = replacement.len();
        let mut out = letters[..s].to_vec();
        out.extend(replacement);
        out.extend_from_slice(&letters[s + old_len..]);
        // every relation preserves closure; reject anything out of range
        let w = FrontWord::new(out).map_err(|_| na())?;
        Ok((w, s..s + old_len, s..s + new_len))
    }

    pub fn apply_move(&self, mv: Move) -> Result<FrontWord, MoveError> {
        self.apply_move_with_window(mv).map(|(w, _, _)| w)
    }

    /// Every move applicable to this word, grouped by family in the order
    /// commute, type 1 removal, type 1 insertion, type 2 removal, type 2
    /// insertion, type 3.
    pub fn applicable_moves(&self) -> Vec<Vec<Move>> {
        let letters = self.letters();
        let counts = self.strand_counts();
        let n = letters.len();
        let mut fam: Vec<Vec<Move>> = vec![Vec::new(); 6];
        for s in 0..n.saturating_sub(1) {
            let opts = valid_commutations(letters, counts, s).len();
            if opts >= 1 {
                fam[0].push(Move { rule: Rule::Commute, site: s });
            }
            if opts >= 2 {
                fam[0].push(Move { rule: Rule::CommuteAlt, site: s });
            }
        }
        for s in 0..n.saturating_sub(2) {
            let w = &letters[s..s + 3];
            if type1_match(w) {
                fam[1].push(Move { rule: Rule::Type1Remove, site: s });
            }
            if type2_match(w).is_some() {
                fam[3].push(Move { rule: Rule::Type2Remove, site: s });
            }
            if type3_match(w).is_some() {
                fam[5].push(Move { rule: Rule::Type3, site: s });
            }
        }
        for s in 0..=n {
            let strands = counts[s];
            for m in 1..=strands + 1 {
                for above in [true, false] {
                    let mv = Move { rule: Rule::Type1Insert { index: m, above }, site: s };
                    if self.apply_move(mv).is_ok() {
                        fam[2].push(mv);
                    }
                }
            }
        }
        for s in 0..n {
            if !letters[s].is_cross() {
                for above in [true, false] {
                    let mv = Move { rule: Rule::Type2Insert { above }, site: s };
                    if self.apply_move(mv).is_ok() {
                        fam[4].push(mv);
                    }
                }
            }
        }
        fam
    }

    /// Inserts a zig-zag on the segment at `(slice, position)`.
    pub fn stabilize(&self, slice: usize, position: usize, flavor: StabilizeFlavor) -> Result<FrontWord, MoveError> {
        if slice >= self.strand_counts().len()
            || position == 0
            || position > self.strands_at(slice)
        {
            return Err(MoveError::BadSite { slice, position });
        }
        let p = position;
        let pair = match flavor {
            StabilizeFlavor::Up => [Letter::left(p), Letter::right(p + 1)],
            StabilizeFlavor::Down => [Letter::left(p + 1), Letter::right(p)],
        };
        let mut out = self.letters()[..slice].to_vec();
        out.extend(pair);
        out.extend_from_slice(&self.letters()[slice..]);
        Ok(FrontWord::new(out).expect("zig-zag insertion keeps the word closed"))
    }

    /// The first strand segment `(slice, position)`, if the front is nonempty.
    pub fn first_segment(&self) -> Option<(usize, usize)> {
        (!self.is_empty()).then_some((1, 1))
    }
}

/// Carries the orientation of `of` over to `new`, a word that agrees with
/// `of.word()` outside the letter ranges `old` / `new_range`.
pub(crate) fn transport(of: &OrientedFront, new: &FrontWord, old: Range<usize>, new_range: Range<usize>) -> OrientedFront {
    let default = OrientedFront::default_of(new);
    let comps = default.components();
    let mut flags: Vec<Option<bool>> = vec![None; comps.count()];
    let slices = new.strand_counts().len();
    for k in 0..slices {
        let old_k = if k <= new_range.start {
            k
        } else if k >= new_range.end {
            k - new_range.end + old.end
        } else {
            continue;
        };
        for p in 1..=new.strands_at(k) {
            let c = comps.component(k, p);
            if flags[c].is_none() {
                flags[c] = Some(of.direction(old_k, p) != default.direction(k, p));
            }
        }
    }
    let flags: Vec<bool> = flags.into_iter().map(|f| f.unwrap_or(false)).collect();
    OrientedFront::new(new, &flags)
}

impl OrientedFront {
    /// Applies a move and carries the orientation along.
    pub fn apply_move(&self, mv: Move) -> Result<OrientedFront, MoveError> {
        let (w, old, new) = self.word().apply_move_with_window(mv)?;
        Ok(transport(self, &w, old, new))
    }

    /// [`FrontWord::stabilize`] with the orientation carried along.
    pub fn stabilize(&self, slice: usize, position: usize, flavor: StabilizeFlavor) -> Result<OrientedFront, MoveError> {
        let w = self.word().stabilize(slice, position, flavor)?;
        Ok(transport(self, &w, slice..slice, slice..slice + 2))
    }
}

/// Draws a sequence of `len` moves, applying each as it is drawn: a family
/// with at least one applicable move is chosen uniformly, then a move in it.
pub fn random_moves<R: Rng>(start: &OrientedFront, len: usize, rng: &mut R) -> (OrientedFront, Vec<Move>) {
    let mut cur = start.clone();
    let mut applied = Vec::with_capacity(len);
    for _ in 0..len {
        let fams: Vec<Vec<Move>> = cur
            .word()
            .applicable_moves()
            .into_iter()
            .filter(|f| !f.is_empty())
            .collect();
        let Some(fam) = fams.choose(rng) else { break };
        let mv = *fam.choose(rng).unwrap();
        cur = cur.apply_move(mv).expect("enumerated moves apply");
        applied.push(mv);
    }
    (cur, applied)
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |above: bool| if above { "above" } else { "below" };
        match self.rule {
            Rule::Commute => write!(f, "commute")?,
            Rule::CommuteAlt => write!(f, "commute-alt")?,
            Rule::Type1Remove => write!(f, "type1-remove")?,
            Rule::Type1Insert { index, above } => write!(f, "type1-insert:{index}:{}", side(above))?,
            Rule::Type2Remove => write!(f, "type2-remove")?,
            Rule::Type2Insert { above } => write!(f, "type2-insert:{}", side(above))?,
            Rule::Type3 => write!(f, "type3")?,
        }
        write!(f, "@{}", self.site)
    }
}

impl FromStr for Move {
    type Err = MoveError;

    /// `rule@site`, e.g. `commute@3`, `type1-insert:2:above@0`,
    /// `type2-insert:below@1`. Sites are 0-based letter positions.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || MoveError::Syntax(s.to_string());
        let (rule, site) = s.trim().split_once('@').ok_or_else(bad)?;
        let site: usize = site.parse().map_err(|_| bad())?;
        let side = |t: &str| match t {
            "above" => Ok(true),
            "below" => Ok(false),
            _ => Err(bad()),
        };
        let parts: Vec<&str> = rule.split(':').collect();
        let rule = match parts.as_slice() {
            ["commute"] => Rule::Commute,
            ["commute-alt"] => Rule::CommuteAlt,
            ["type1-remove"] => Rule::Type1Remove,
            ["type1-insert", m, s] => Rule::Type1Insert {
                index: m.parse().map_err(|_| bad())?,
                above: side(s)?,
            },
            ["type2-remove"] => Rule::Type2Remove,
            ["type2-insert", s] => Rule::Type2Insert { above: side(s)? },
            ["type3"] => Rule::Type3,
            _ => return Err(bad()),
        };
        Ok(Move { rule, site })
    }
}
