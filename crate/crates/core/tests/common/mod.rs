#![allow(dead_code)]

use legendrian_core::{FrontWord, Letter};
use proptest::prelude::*;

pub type Choices = Vec<(u8, u16)>;

/// Decodes raw choices into letters starting from `start` strands, emitting
/// at most `max_cross` crossings. Returns the letters and the final strand
/// count; nothing is closed.
pub fn decode_open(start: usize, choices: &[(u8, u16)], max_cross: usize) -> (Vec<Letter>, usize) {
    let mut n = start;
    let mut out = Vec::new();
    let mut crossings = 0;
    for &(kind, pick) in choices {
        let pick = pick as usize;
        match kind % 3 {
            0 => {
                out.push(Letter::left(pick % (n + 1) + 1));
                n += 2;
            }
            1 if n >= 2 && crossings < max_cross => {
                out.push(Letter::cross(pick % (n - 1) + 1));
                crossings += 1;
            }
            2 if n >= 2 => {
                out.push(Letter::right(pick % (n - 1) + 1));
                n -= 2;
            }
            _ => {}
        }
    }
    (out, n)
}

/// Like [`decode_open`], then closes the remaining strands with `r1`.
pub fn decode(start: usize, choices: &[(u8, u16)], max_cross: usize) -> Vec<Letter> {
    let (mut out, mut n) = decode_open(start, choices, max_cross);
    while n > 0 {
        out.push(Letter::right(1));
        n -= 2;
    }
    out
}

pub fn choices(max_len: usize) -> impl Strategy<Value = Choices> {
    prop::collection::vec((any::<u8>(), any::<u16>()), 0..max_len)
}

pub fn front(max_len: usize, max_cross: usize) -> impl Strategy<Value = FrontWord> {
    choices(max_len).prop_map(move |c| FrontWord::new(decode(0, &c, max_cross)).expect("decoder emits valid words"))
}

/// A nonempty front, so that there is at least one component.
pub fn knotted_front(max_len: usize, max_cross: usize) -> impl Strategy<Value = FrontWord> {
    front(max_len, max_cross).prop_filter("nonempty", |w| !w.is_empty())
}

/// An open prefix with at least two strands, paired with raw choices for a
/// suffix. Crossings in prefix and suffix together stay under `max_cross`.
pub fn open_prefix(max_len: usize, max_cross: usize) -> impl Strategy<Value = (Vec<Letter>, usize, Choices)> {
    (choices(max_len), choices(max_len)).prop_map(move |(pre, suf)| {
        let (mut letters, mut n) = decode_open(0, &pre, max_cross / 2);
        if n == 0 {
            letters.push(Letter::left(1));
            n = 2;
        }
        (letters, n, suf)
    })
}

pub fn word(letters: Vec<Letter>) -> FrontWord {
    FrontWord::new(letters).expect("valid word")
}
