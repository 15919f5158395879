//! Front diagrams as words in the elementary tangles.
//!
//! A front is read left to right as a product of letters acting on a stack
//! of horizontal strands. Strand positions are numbered `1..=N` from the
//! top (position 1 has the largest z-coordinate).
//!
//! * `l<m>` opens a left cusp whose two new strands take positions `m` and
//!   `m+1` (valid for `1 <= m <= N+1`, adds two strands);
//! * `x<m>` crosses the strands at `m` and `m+1` (`1 <= m <= N-1`);
//! * `r<m>` closes the strands at `m` and `m+1` in a right cusp
//!   (`1 <= m <= N-1`, removes two strands).
//!
//! The strand between letter `k-1` and letter `k` at position `p` is the
//! segment `(k, p)`; slice `k` has `strand_count(k)` segments.

mod moves;
mod orient;
mod planar;

pub use moves::{random_moves, Move, MoveError, Rule, StabilizeFlavor};

pub use orient::{ComponentMap, Direction, FrontInvariants, OrientedFront};
pub use planar::{PdCrossing, PdParseError, PlanarDiagram};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LetterKind {
    LeftCusp,
    Crossing,
    RightCusp,
}

/// One elementary tangle with its 1-based position index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub kind: LetterKind,
    pub index: usize,
}

impl Letter {
    pub const fn left(m: usize) -> Self {
        Self { kind: LetterKind::LeftCusp, index: m }
    }
    pub const fn cross(m: usize) -> Self {
        Self { kind: LetterKind::Crossing, index: m }
    }
    pub const fn right(m: usize) -> Self {
        Self { kind: LetterKind::RightCusp, index: m }
    }

    pub fn is_left(&self) -> bool {
        self.kind == LetterKind::LeftCusp
    }
    pub fn is_cross(&self) -> bool {
        self.kind == LetterKind::Crossing
    }
    pub fn is_right(&self) -> bool {
        self.kind == LetterKind::RightCusp
    }

    /// Strand count after this letter, if the letter is admissible on
    /// `n` incoming strands.
    pub fn apply(&self, n: usize) -> Option<usize> {
        let m = self.index;
        if m == 0 {
            return None;
        }
        match self.kind {
            LetterKind::LeftCusp => (m <= n + 1).then_some(n + 2),
            LetterKind::Crossing => (m < n).then_some(n),
            LetterKind::RightCusp => (m < n).then(|| n - 2),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            LetterKind::LeftCusp => 'l',
            LetterKind::Crossing => 'x',
            LetterKind::RightCusp => 'r',
        };
        write!(f, "{c}{}", self.index)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrontError {
    #[error("line {line}, column {column}: unknown token {token:?}")]
    UnknownToken {
        token: String,
        line: usize,
        column: usize,
    },
    #[error("letter {position} ({letter}) is out of range on {strands} strands")]
    IndexOutOfRange {
        position: usize,
        letter: Letter,
        strands: usize,
    },
    #[error("front is not closed: {strands} strands remain at the right end")]
    NotClosed { strands: usize },
    #[error("line {line}: malformed orientation header: {reason}")]
    BadOrientation { line: usize, reason: String },
}

/// A validated closed front.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrontWord {
    letters: Vec<Letter>,
    counts: Vec<usize>,
}

impl FrontWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self, FrontError> {
        let counts = strand_profile(&letters, 0)?;
        let last = *counts.last().unwrap();
        if last != 0 {
            return Err(FrontError::NotClosed { strands: last });
        }
        Ok(Self { letters, counts })
    }

    /// The empty front (the empty link).
    pub fn empty() -> Self {
        Self { letters: Vec::new(), counts: vec![0] }
    }

    pub fn unknot() -> Self {
        Self::new(vec![Letter::left(1), Letter::right(1)]).unwrap()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Strand counts of slices `0..=len`.
    pub fn strand_counts(&self) -> &[usize] {
        &self.counts
    }

    /// Strand count of slice `k` (before letter `k`).
    pub fn strands_at(&self, k: usize) -> usize {
        self.counts[k]
    }

    pub fn left_cusps(&self) -> usize {
        self.letters.iter().filter(|l| l.is_left()).count()
    }

    pub fn crossing_count(&self) -> usize {
        self.letters.iter().filter(|l| l.is_cross()).count()
    }

    /// Word positions of the crossing letters, in order; the i-th entry is
    /// the crossing with ordinal `i+1`.
    pub fn crossing_positions(&self) -> Vec<usize> {
        (0..self.letters.len())
            .filter(|&i| self.letters[i].is_cross())
            .collect()
    }

    /// Concatenation (split union placed side by side).
    pub fn concat(&self, other: &FrontWord) -> FrontWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        FrontWord::new(letters).expect("concatenation of closed fronts is closed")
    }

    /// Offset of the first segment of slice `k` in a flat segment numbering.
    pub(crate) fn segment_offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.counts.len() + 1);
        let mut acc = 0;
        for &n in &self.counts {
            off.push(acc);
            acc += n;
        }
        off.push(acc);
        off
    }
}

/// Strand counts for `letters` starting from `start` strands, validating
/// every index.
pub(crate) fn strand_profile(letters: &[Letter], start: usize) -> Result<Vec<usize>, FrontError> {
    let mut counts = Vec::with_capacity(letters.len() + 1);
    let mut n = start;
    counts.push(n);
    for (i, l) in letters.iter().enumerate() {
        n = l.apply(n).ok_or(FrontError::IndexOutOfRange {
            position: i + 1,
            letter: *l,
            strands: n,
        })?;
        counts.push(n);
    }
    Ok(counts)
}

impl fmt::Display for FrontWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn parse_token(tok: &str) -> Option<Letter> {
    let mut chars = tok.chars();
    let kind = match chars.next()? {
        'l' => LetterKind::LeftCusp,
        'x' => LetterKind::Crossing,
        'r' => LetterKind::RightCusp,
        _ => return None,
    };
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let index = digits.parse().ok()?;
    Some(Letter { kind, index })
}

/// Parses the letters of a token stream without closure validation.
pub fn parse_letters(text: &str) -> Result<Vec<Letter>, FrontError> {
    let mut letters = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let mut col = 0;
        for piece in line.split_inclusive(char::is_whitespace) {
            let tok = piece.trim_end();
            if !tok.is_empty() {
                letters.push(parse_token(tok).ok_or_else(|| FrontError::UnknownToken {
                    token: tok.to_string(),
                    line: ln + 1,
                    column: col + 1,
                })?);
            }
            col += piece.chars().count();
        }
    }
    Ok(letters)
}

/// Parses a whitespace separated token stream into a closed front.
pub fn parse_front(text: &str) -> Result<FrontWord, FrontError> {
    FrontWord::new(parse_letters(text)?)
}

impl FromStr for FrontWord {
    type Err = FrontError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_front(s)
    }
}

/// Contents of a `.front` file: the word plus per-component orientation
/// flags (`true` = reversed from the default).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrontFile {
    pub word: FrontWord,
    pub reversed: Vec<bool>,
}

impl FrontFile {
    /// Parses `#` comments, an optional `orient: 1=+,2=-` header and the
    /// token stream.
    pub fn parse(text: &str) -> Result<Self, FrontError> {
        let mut body = String::new();
        let mut reversed = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.starts_with('#') {
                body.push('\n');
                continue;
            }
            if let Some(rest) = t.strip_prefix("orient:") {
                reversed = parse_orient_header(rest, ln + 1)?;
                body.push('\n');
                continue;
            }
            body.push_str(line);
            body.push('\n');
        }
        let word = parse_front(&body)?;
        Ok(Self { word, reversed })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        if self.reversed.iter().any(|&r| r) {
            let flags: Vec<String> = self
                .reversed
                .iter()
                .enumerate()
                .map(|(i, r)| format!("{}={}", i + 1, if *r { '-' } else { '+' }))
                .collect();
            out.push_str(&format!("orient: {}\n", flags.join(",")));
        }
        out.push_str(&self.word.to_string());
        out.push('\n');
        out
    }
}

fn parse_orient_header(rest: &str, line: usize) -> Result<Vec<bool>, FrontError> {
    let bad = |reason: String| FrontError::BadOrientation { line, reason };
    let mut flags: Vec<bool> = Vec::new();
    for item in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (id, sign) = item
            .split_once('=')
            .ok_or_else(|| bad(format!("expected <component>=<+|->, got {item:?}")))?;
        let id: usize = id
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad component id {id:?}")))?;
        if id == 0 {
            return Err(bad("component ids are 1-based".into()));
        }
        let rev = match sign.trim() {
            "+" => false,
            "-" => true,
            s => return Err(bad(format!("bad direction {s:?}"))),
        };
        if flags.len() < id {
            flags.resize(id, false);
        }
        flags[id - 1] = rev;
    }
    Ok(flags)
}
