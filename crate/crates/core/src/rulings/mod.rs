//! Rulings of a front, found by sweeping slices left to right.

mod oracle;
mod sweep;

use serde::{Deserialize, Serialize};

use crate::front::{FrontWord, OrientedFront};
use crate::poly::LaurentPoly1;

pub use oracle::is_ruling;
pub use sweep::{sweep_step, Step, SweepState};

/// A ruling, recorded by the 1-based ordinals of its switched crossings in
/// increasing order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ruling {
    switches: Vec<usize>,
}

impl Ruling {
    pub fn new(mut switches: Vec<usize>) -> Self {
        switches.sort_unstable();
        switches.dedup();
        Self { switches }
    }

    pub fn switches(&self) -> &[usize] {
        &self.switches
    }

    pub fn switch_count(&self) -> usize {
        self.switches.len()
    }
}

/// Whether the sweep merges branches that reach the same eye structure.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SweepMode {
    #[default]
    Merged,
    Branching,
}

/// All rulings in branch order (no switch before switch at each crossing).
pub fn enumerate_rulings(word: &FrontWord) -> Vec<Ruling> {
    sweep::enumerate(word, None).into_iter().map(Ruling::new).collect()
}

/// Rulings whose switches are all positive crossings.
pub fn enumerate_oriented_rulings(of: &OrientedFront) -> Vec<Ruling> {
    sweep::enumerate(of.word(), Some(of)).into_iter().map(Ruling::new).collect()
}

fn generating_function(word: &FrontWord, orient: Option<&OrientedFront>, mode: SweepMode) -> LaurentPoly1 {
    let c = word.left_cusps() as i64;
    let mut terms: Vec<(i64, i64)> = Vec::new();
    match mode {
        SweepMode::Merged => {
            for (s, n) in sweep::count_by_switches(word, orient) {
                terms.push((s as i64 - c + 1, n as i64));
            }
        }
        SweepMode::Branching => {
            for r in sweep::enumerate(word, orient) {
                terms.push((r.len() as i64 - c + 1, 1));
            }
        }
    }
    terms
        .into_iter()
        .map(|(e, n)| LaurentPoly1::monomial(n, e))
        .sum()
}

pub fn ruling_polynomial(word: &FrontWord) -> LaurentPoly1 {
    generating_function(word, None, SweepMode::default())
}

pub fn ruling_polynomial_with(word: &FrontWord, mode: SweepMode) -> LaurentPoly1 {
    generating_function(word, None, mode)
}

pub fn oriented_ruling_polynomial(of: &OrientedFront) -> LaurentPoly1 {
    generating_function(of.word(), Some(of), SweepMode::default())
}

pub fn oriented_ruling_polynomial_with(of: &OrientedFront, mode: SweepMode) -> LaurentPoly1 {
    generating_function(of.word(), Some(of), mode)
}
