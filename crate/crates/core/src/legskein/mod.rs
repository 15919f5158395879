//! Direct evaluation of the ruling polynomial by Legendrian skein
//! rewriting of tangle words, without enumerating rulings.

mod canon;
mod frame;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::front::{FrontError, FrontWord, Letter};
use crate::poly::LaurentPoly1;

pub use canon::canonicalize;
pub use frame::{Measure, ReductionFrame, StepOutcome};

/// Step budget used when `LEGSKEIN_FUEL` is unset.
pub const DEFAULT_FUEL: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LegSkeinError {
    #[error("no skein move applies at letter {site} of {word}")]
    PatternMismatch { word: String, site: usize },
    #[error("step budget of {0} exhausted")]
    FuelExhausted(u64),
    #[error(transparent)]
    NotClosed(#[from] FrontError),
}

/// A finite combination of words with Laurent coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordExpr {
    terms: BTreeMap<FrontWord, LaurentPoly1>,
}

impl WordExpr {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(word: FrontWord) -> Self {
        let mut e = Self::new();
        e.add(LaurentPoly1::one(), word);
        e
    }

    pub fn add(&mut self, coeff: LaurentPoly1, word: FrontWord) {
        let slot = self.terms.entry(word).or_default();
        *slot = &*slot + &coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    /// Adds `coeff` times every term of `other`.
    pub fn add_scaled(&mut self, coeff: &LaurentPoly1, other: &WordExpr) {
        for (w, c) in &other.terms {
            self.add(coeff * c, w.clone());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FrontWord, &LaurentPoly1)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Linear extension of `value` to the combination.
    pub fn evaluate<E>(&self, mut value: impl FnMut(&FrontWord) -> Result<LaurentPoly1, E>) -> Result<LaurentPoly1, E> {
        let mut total = LaurentPoly1::zero();
        for (w, c) in &self.terms {
            total = total + c * &value(w)?;
        }
        Ok(total)
    }
}

impl fmt::Display for WordExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})[{w}]")?;
        }
        Ok(())
    }
}

/// Rewrites the pair at `site` by relation (i): `l_{m+1} x_m` becomes
/// `l_m x_{m+1}` and vice versa, with the two crossing-free corrections.
pub fn skein_expand(word: &FrontWord, site: usize) -> Result<WordExpr, LegSkeinError> {
    let letters = word.letters();
    let mismatch = || LegSkeinError::PatternMismatch { word: word.to_string(), site };
    let (&cusp, &cross) = match (letters.get(site), letters.get(site + 1)) {
        (Some(a), Some(b)) if a.is_left() && b.is_cross() => (a, b),
        _ => return Err(mismatch()),
    };
    let rebuilt = |mid: &[Letter]| {
        let mut v = letters[..site].to_vec();
        v.extend_from_slice(mid);
        v.extend_from_slice(&letters[site + 2..]);
        FrontWord::new(v)
    };
    let z = LaurentPoly1::z_pow(1);
    let mut e = WordExpr::new();
    if cusp.index == cross.index + 1 {
        // l_{m+1} x_m = l_m x_{m+1} + z l_{m+1} - z l_m
        let m = cross.index;
        e.add(LaurentPoly1::one(), rebuilt(&[Letter::left(m), Letter::cross(m + 1)])?);
        e.add(z.clone(), rebuilt(&[Letter::left(m + 1)])?);
        e.add(-z, rebuilt(&[Letter::left(m)])?);
    } else if cross.index == cusp.index + 1 {
        let m = cusp.index;
        e.add(LaurentPoly1::one(), rebuilt(&[Letter::left(m + 1), Letter::cross(m)])?);
        e.add(-z.clone(), rebuilt(&[Letter::left(m + 1)])?);
        e.add(z, rebuilt(&[Letter::left(m)])?);
    } else {
        return Err(mismatch());
    }
    Ok(e)
}

/// Relation (ii) patterns that force the value to zero.
fn has_zero_pattern(letters: &[Letter]) -> bool {
    letters.windows(2).any(|p| {
        let (a, b) = (p[0], p[1]);
        (a.is_left() && b.is_right() && (b.index + 1 == a.index || b.index == a.index + 1))
            || (a.is_cross() && b.is_right() && a.index == b.index)
            || (a.is_left() && b.is_cross() && a.index == b.index)
    })
}

/// One logged frame step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub step: usize,
    pub frame: usize,
    pub rule: &'static str,
    pub site: usize,
    pub measure: Measure,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
}

impl ReductionTrace {
    /// Checks that within every frame the measure only ever moves in the
    /// allowed direction.
    pub fn is_monotone(&self) -> bool {
        let mut last: HashMap<usize, Measure> = HashMap::new();
        for s in &self.steps {
            if let Some(prev) = last.insert(s.frame, s.measure) {
                if !prev.admits(&s.measure) {
                    return false;
                }
            }
        }
        true
    }

    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        self.steps
            .iter()
            .map(|s| serde_json::to_string(s).expect("trace steps serialize") + "\n")
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LegSkeinOptions {
    pub memo: bool,
    pub fuel: u64,
    pub trace: bool,
}

impl Default for LegSkeinOptions {
    fn default() -> Self {
        Self { memo: true, fuel: DEFAULT_FUEL, trace: false }
    }
}

impl LegSkeinOptions {
    /// Defaults, with the fuel taken from `LEGSKEIN_FUEL` when it parses.
    pub fn from_env() -> Self {
        let fuel = std::env::var("LEGSKEIN_FUEL").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_FUEL);
        Self { fuel, ..Self::default() }
    }
}

/// How one word is reduced before recursing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    Value(LaurentPoly1),
    /// `z^-1 R(left) R(right)` for a split word.
    Split { left: FrontWord, right: FrontWord },
    Combination(WordExpr),
}

/// Skein evaluator with its memo table, step budget and trace.
pub struct LegSkein {
    opts: LegSkeinOptions,
    memo: HashMap<FrontWord, LaurentPoly1>,
    canon: canon::Canonicalizer,
    spent: u64,
    frames: usize,
    trace: ReductionTrace,
}

impl LegSkein {
    pub fn new(opts: LegSkeinOptions) -> Self {
        Self { opts, memo: HashMap::new(), canon: canon::Canonicalizer::new(), spent: 0, frames: 0, trace: ReductionTrace::default() }
    }

    pub fn trace(&self) -> &ReductionTrace {
        &self.trace
    }

    pub fn steps_spent(&self) -> u64 {
        self.spent
    }

    fn burn(&mut self) -> Result<(), LegSkeinError> {
        self.spent += 1;
        if self.spent > self.opts.fuel {
            return Err(LegSkeinError::FuelExhausted(self.opts.fuel));
        }
        Ok(())
    }

    /// Reduces `word` one level: a known value, a split, or a combination
    /// of words each with fewer crossings or fewer left cusps.
    pub fn reduce(&mut self, word: &FrontWord) -> Result<Reduction, LegSkeinError> {
        if word.is_empty() {
            return Ok(Reduction::Value(LaurentPoly1::z_pow(1)));
        }
        let canonical = self.canon.canonical(word);
        let letters = canonical.letters();
        if has_zero_pattern(word.letters()) || has_zero_pattern(letters) {
            return Ok(Reduction::Value(LaurentPoly1::zero()));
        }
        if letters == [Letter::left(1), Letter::right(1)] {
            return Ok(Reduction::Value(LaurentPoly1::one()));
        }
        let counts = canonical.strand_counts();
        if let Some(cut) = (1..letters.len()).find(|&k| counts[k] == 0) {
            let left = FrontWord::new(letters[..cut].to_vec())?;
            let right = FrontWord::new(letters[cut..].to_vec())?;
            return Ok(Reduction::Split { left, right });
        }
        if let Some(k) = letters.windows(2).position(|p| p[0].is_left() && p[1].is_right() && p[0].index == p[1].index) {
            let mut rest = letters.to_vec();
            rest.drain(k..k + 2);
            let mut e = WordExpr::new();
            e.add(LaurentPoly1::z_pow(-1), FrontWord::new(rest)?);
            return Ok(Reduction::Combination(e));
        }
        let mut frame = ReductionFrame::new(&canonical).expect("a nonempty closed word has a left cusp");
        let id = self.frames;
        self.frames += 1;
        let mut e = WordExpr::new();
        let mut n = 0;
        loop {
            self.burn()?;
            let measure = frame.measure();
            let site = frame.site();
            let out = frame.step();
            if self.opts.trace {
                self.trace.steps.push(TraceStep { step: n, frame: id, rule: out.rule, site, measure });
            }
            n += 1;
            for (c, w) in out.sides {
                e.add(c, w);
            }
            if let Some(done) = out.done {
                for (c, w) in done {
                    e.add(c, w);
                }
                return Ok(Reduction::Combination(e));
            }
        }
    }

    pub fn evaluate(&mut self, word: &FrontWord) -> Result<LaurentPoly1, LegSkeinError> {
        self.burn()?;
        let key = if self.opts.memo { Some(self.canon.canonical(word)) } else { None };
        if let Some(hit) = key.as_ref().and_then(|k| self.memo.get(k)) {
            return Ok(hit.clone());
        }
        let value = match self.reduce(word)? {
            Reduction::Value(v) => v,
            Reduction::Split { left, right } => {
                let l = self.evaluate(&left)?;
                let r = self.evaluate(&right)?;
                (l * r).shift(-1)
            }
            Reduction::Combination(e) => e.evaluate(|w| self.evaluate(w))?,
        };
        if let Some(k) = key {
            self.memo.insert(k, value.clone());
        }
        Ok(value)
    }
}

/// The ruling polynomial computed by skein rewriting alone.
pub fn evaluate_b(word: &FrontWord) -> Result<LaurentPoly1, LegSkeinError> {
    LegSkein::new(LegSkeinOptions::from_env()).evaluate(word)
}

/// As [`evaluate_b`] for a raw letter sequence, which must close up.
pub fn evaluate_b_letters(letters: &[Letter]) -> Result<LaurentPoly1, LegSkeinError> {
    evaluate_b(&FrontWord::new(letters.to_vec())?)
}
