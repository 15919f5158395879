use std::collections::VecDeque;

use serde::Serialize;

use crate::front::{FrontWord, Letter, LetterKind};
use crate::poly::LaurentPoly1;

/// Measure snapshot taken before a step: left cusps `L`, `M = N + cr(Y)`
/// with `N` the strand count right after the active cusp, and the two run
/// lengths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Measure {
    #[serde(rename = "L")]
    pub l: usize,
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "N1")]
    pub n1: usize,
    #[serde(rename = "N2")]
    pub n2: usize,
}

impl Measure {
    /// Whether `next` may follow `self` within one frame.
    pub fn admits(&self, next: &Measure) -> bool {
        (next.l, next.m) < (self.l, self.m) || ((next.l, next.m) == (self.l, self.m) && next.n1 + next.n2 > self.n1 + self.n2)
    }
}

pub(crate) type Terms = Vec<(LaurentPoly1, FrontWord)>;

/// Result of one frame step. The frame's original word equals the sum of
/// every `sides` emitted so far plus either `done` (when present) or the
/// frame's current word.
#[derive(Clone, Debug)]
pub struct StepOutcome {
    pub rule: &'static str,
    pub sides: Terms,
    pub done: Option<Terms>,
}

/// A word held as `X l_m A B Y` with `A = x_{m-1} ... x_{m-n1}` and
/// `B = x_{m+1} ... x_{m+n2}`, where `l_m` is the rightmost left cusp.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionFrame {
    x: Vec<Letter>,
    m: usize,
    n1: usize,
    n2: usize,
    y: VecDeque<Letter>,
}

fn down(top: usize, len: usize) -> impl Iterator<Item = Letter> {
    (0..len).map(move |j| Letter::cross(top - j))
}

fn up(bottom: usize, len: usize) -> impl Iterator<Item = Letter> {
    (0..len).map(move |j| Letter::cross(bottom + j))
}

fn word(letters: Vec<Letter>) -> FrontWord {
    FrontWord::new(letters).expect("frame rewrites preserve validity")
}

fn z(sign: i64) -> LaurentPoly1 {
    LaurentPoly1::monomial(sign, 1)
}

impl ReductionFrame {
    /// Splits at the rightmost left cusp; `None` for words without one.
    pub fn new(w: &FrontWord) -> Option<Self> {
        let letters = w.letters();
        let p = letters.iter().rposition(Letter::is_left)?;
        Some(Self {
            x: letters[..p].to_vec(),
            m: letters[p].index,
            n1: 0,
            n2: 0,
            y: letters[p + 1..].iter().copied().collect(),
        })
    }

    fn runs(&self) -> impl Iterator<Item = Letter> + '_ {
        down(self.m - 1, self.n1).chain(up(self.m + 1, self.n2))
    }

    pub fn letters(&self) -> Vec<Letter> {
        let mut v = self.x.clone();
        v.push(Letter::left(self.m));
        v.extend(self.runs());
        v.extend(self.y.iter().copied());
        v
    }

    pub fn word(&self) -> FrontWord {
        word(self.letters())
    }

    /// Position of the active left cusp in [`Self::letters`].
    pub fn site(&self) -> usize {
        self.x.len()
    }

    pub fn measure(&self) -> Measure {
        let strands_x = self.x.iter().fold(0, |n, l| l.apply(n).expect("valid prefix"));
        Measure {
            l: self.x.iter().filter(|l| l.is_left()).count() + 1,
            m: strands_x + 2 + self.y.iter().filter(|l| l.is_cross()).count(),
            n1: self.n1,
            n2: self.n2,
        }
    }

    fn assemble(&self, cusp: Letter, middle: impl IntoIterator<Item = Letter>, skip_y: usize) -> FrontWord {
        let mut v = self.x.clone();
        v.push(cusp);
        v.extend(middle);
        v.extend(self.y.iter().skip(skip_y).copied());
        word(v)
    }

    /// Moves the cusp up past the first crossing of `A` by relation (i),
    /// returning the two crossing-free side terms.
    fn skein_up(&mut self) -> Terms {
        let m = self.m;
        let rest: Vec<Letter> = down(m - 2, self.n1 - 1).chain(up(m + 1, self.n2)).collect();
        let sides = vec![
            (z(1), self.assemble(Letter::left(m), rest.clone(), 0)),
            (z(-1), self.assemble(Letter::left(m - 1), rest, 0)),
        ];
        self.m -= 1;
        self.n1 -= 1;
        self.n2 += 1;
        sides
    }

    /// Mirror of [`Self::skein_up`] on the `B` side.
    fn skein_down(&mut self) -> Terms {
        let m = self.m;
        let rest: Vec<Letter> = up(m + 2, self.n2 - 1).chain(down(m - 1, self.n1)).collect();
        let sides = vec![
            (z(-1), self.assemble(Letter::left(m + 1), rest.clone(), 0)),
            (z(1), self.assemble(Letter::left(m), rest, 0)),
        ];
        self.m += 1;
        self.n1 += 1;
        self.n2 -= 1;
        sides
    }

    fn finish(&self, rule: &'static str, sides: Terms, done: Terms) -> StepOutcome {
        StepOutcome { rule, sides, done: Some(done) }
    }

    /// Advances by one letter of `Y`.
    pub fn step(&mut self) -> StepOutcome {
        let first = *self.y.front().expect("the active cusp is closed somewhere in Y");
        let (m, n1, n2) = (self.m, self.n1, self.n2);
        let u = m - n1;
        let v = m + 1 + n2;
        let i = first.index;
        let proceed = |rule, sides| StepOutcome { rule, sides, done: None };
        match first.kind {
            LetterKind::Crossing => {
                if i + 1 < u || i > v {
                    self.y.pop_front();
                    self.x.push(Letter::cross(if i > v { i - 2 } else { i }));
                    proceed("cross.absorb", vec![])
                } else if i + 1 == u {
                    self.y.pop_front();
                    self.n1 += 1;
                    proceed("cross.extend", vec![])
                } else if i == v {
                    self.y.pop_front();
                    self.n2 += 1;
                    proceed("cross.extend", vec![])
                } else if i == u && n1 >= 1 {
                    let mut sides = Vec::new();
                    while self.n1 > 0 {
                        sides.extend(self.skein_up());
                    }
                    // now l_u x_{u+1} ... with Y = x_u Y'
                    self.y.pop_front();
                    self.m += 1;
                    self.n2 -= 1;
                    proceed("cross.skein-type2", sides)
                } else if i == v - 1 && n2 >= 1 {
                    let mut sides = Vec::new();
                    while self.n2 > 0 {
                        sides.extend(self.skein_down());
                    }
                    self.y.pop_front();
                    self.m -= 1;
                    self.n1 -= 1;
                    proceed("cross.skein-type2", sides)
                } else if (u < i && i < m) || (m < i && i + 1 < v) {
                    self.y.pop_front();
                    self.x.push(Letter::cross(i - 1));
                    proceed("cross.type3", vec![])
                } else {
                    debug_assert_eq!(i, m);
                    match (n1, n2) {
                        (0, 0) => self.finish("cross.zigzag", vec![], vec![]),
                        (0, _) => {
                            self.y.pop_front();
                            self.m += 1;
                            self.n2 -= 1;
                            proceed("cross.type2", vec![])
                        }
                        (_, 0) => {
                            self.y.pop_front();
                            self.m -= 1;
                            self.n1 -= 1;
                            proceed("cross.type2", vec![])
                        }
                        _ => {
                            let sides = self.skein_up();
                            self.y.pop_front();
                            self.x.push(Letter::cross(m - 1));
                            proceed("cross.skein-type3", sides)
                        }
                    }
                }
            }
            LetterKind::RightCusp => {
                if i + 1 < u {
                    self.y.pop_front();
                    self.x.push(first);
                    self.m -= 2;
                    proceed("cusp.absorb", vec![])
                } else if i > v {
                    self.y.pop_front();
                    self.x.push(Letter::right(i - 2));
                    proceed("cusp.absorb", vec![])
                } else if i + 1 == u {
                    let mut sides = Vec::new();
                    while self.n1 > 0 {
                        sides.extend(self.skein_up());
                    }
                    self.finish("cusp.skein-zigzag", sides, vec![])
                } else if i == v {
                    let mut sides = Vec::new();
                    while self.n2 > 0 {
                        sides.extend(self.skein_down());
                    }
                    self.finish("cusp.skein-zigzag", sides, vec![])
                } else if (i == u && n1 >= 1) || (i + 1 == v && n2 >= 1) {
                    self.finish("cusp.zigzag", vec![], vec![])
                } else if u < i && i < m {
                    // x_i x_{i-1} r_i collapses to r_{i-1}
                    let middle: Vec<Letter> = down(m - 1, m - 1 - i)
                        .chain([Letter::right(i - 1)])
                        .chain(down(i - 2, i - 1 - u))
                        .chain(up(m - 1, n2))
                        .collect();
                    let w = self.assemble(Letter::left(m), middle, 1);
                    self.finish("cusp.type2", vec![], vec![(LaurentPoly1::one(), w)])
                } else if m < i && i + 1 < v {
                    let middle: Vec<Letter> = down(m - 1, n1)
                        .chain(up(m + 1, i - 1 - m))
                        .chain([Letter::right(i + 1)])
                        .chain(up(i, v - 2 - i))
                        .collect();
                    let w = self.assemble(Letter::left(m), middle, 1);
                    self.finish("cusp.type2", vec![], vec![(LaurentPoly1::one(), w)])
                } else {
                    debug_assert_eq!(i, m);
                    let tail = |s: &Self, mid: Vec<Letter>| {
                        let mut v = s.x.clone();
                        v.extend(mid);
                        v.extend(s.y.iter().skip(1).copied());
                        word(v)
                    };
                    match (n1, n2) {
                        (0, 0) => {
                            let w = tail(self, vec![]);
                            self.finish("cusp.split", vec![], vec![(LaurentPoly1::z_pow(-1), w)])
                        }
                        (_, 0) => {
                            let w = tail(self, down(m - 2, n1 - 1).collect());
                            self.finish("cusp.type1", vec![], vec![(LaurentPoly1::one(), w)])
                        }
                        (0, _) => {
                            let w = tail(self, up(m, n2 - 1).collect());
                            self.finish("cusp.type1", vec![], vec![(LaurentPoly1::one(), w)])
                        }
                        _ => {
                            let sides = self.skein_up();
                            // restore the pre-skein indices for the closed form
                            let mut mid = vec![Letter::left(m - 1), Letter::right(m + 1)];
                            mid.extend(down(m - 2, n1 - 1));
                            mid.extend(up(m, n2 - 1));
                            let w = tail(self, mid);
                            self.finish("cusp.skein-type2", sides, vec![(LaurentPoly1::one(), w)])
                        }
                    }
                }
            }
            LetterKind::LeftCusp => unreachable!("Y follows the rightmost left cusp"),
        }
    }
}
