use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::text;

/// A restricted growth function `f_1 … f_n`: `f_1 = 1` and each letter exceeds
/// the running maximum by at most one. Canonical form of a set partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct RgfWord {
    letters: Vec<usize>,
}

impl RgfWord {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidRgf("empty word".into()));
        }
        if letters[0] != 1 {
            return Err(Error::InvalidRgf(format!("first letter is {}, not 1", letters[0])));
        }
        let mut max = 0;
        for (i, &x) in letters.iter().enumerate() {
            if x == 0 || x > max + 1 {
                return Err(Error::InvalidRgf(format!(
                    "letter {x} at position {} exceeds 1 + prefix maximum {max}",
                    i + 1
                )));
            }
            max = max.max(x);
        }
        Ok(Self { letters })
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<usize>) -> Self {
        debug_assert!(Self::new(letters.clone()).is_ok(), "not an RGF: {letters:?}");
        Self { letters }
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.letters
    }

    /// Largest letter, which is also the number of blocks.
    pub fn max_letter(&self) -> usize {
        self.letters.iter().copied().max().unwrap_or(0)
    }

    /// Inverse of [`SetPartition::canonical_form`].
    pub fn to_partition(&self) -> SetPartition {
        let mut blocks = vec![Vec::new(); self.max_letter()];
        for (j, &b) in self.letters.iter().enumerate() {
            blocks[b - 1].push(j + 1);
        }
        SetPartition::from_blocks_unchecked(self.n(), blocks)
    }

    /// Positions of strict left-to-right maxima (1-based).
    pub fn lrmax_positions(&self) -> Vec<usize> {
        lrmax_positions(&self.letters)
    }

    /// Positions of weak left-to-right maxima (1-based).
    pub fn lwmp_positions(&self) -> Vec<usize> {
        lwmp_positions(&self.letters)
    }

    /// Membership in `T_n`: every strict left-to-right maximum letter `s > 1`
    /// has an occurrence of `s - 1` somewhere to its right.
    pub fn is_in_t(&self) -> bool {
        let f = &self.letters;
        let mut last = vec![0; self.max_letter() + 1];
        for (i, &x) in f.iter().enumerate() {
            last[x] = i;
        }
        // the first occurrence of s is its strict left-to-right maximum
        let mut first = vec![usize::MAX; self.max_letter() + 1];
        for (i, &x) in f.iter().enumerate() {
            if first[x] == usize::MAX {
                first[x] = i;
            }
        }
        (2..=self.max_letter()).all(|s| last[s - 1] > first[s])
    }

    /// No `a < b < c` with `f_a = f_c > f_b`.
    pub fn avoids_212(&self) -> bool {
        let f = &self.letters;
        // for each c, some earlier equal letter with a smaller letter in between
        let mut last_seen: Vec<Option<usize>> = vec![None; self.max_letter() + 1];
        for (c, &x) in f.iter().enumerate() {
            if let Some(a) = last_seen[x] {
                if f[a + 1..c].iter().any(|&y| y < x) {
                    return false;
                }
            }
            last_seen[x] = Some(c);
        }
        true
    }

    /// `f_1 ≤ … ≤ f_m ≥ f_{m+1} ≥ … ≥ f_n` for some `m`.
    pub fn is_weakly_unimodal(&self) -> bool {
        let f = &self.letters;
        let mut i = 1;
        while i < f.len() && f[i] >= f[i - 1] {
            i += 1;
        }
        while i < f.len() && f[i] <= f[i - 1] {
            i += 1;
        }
        i == f.len()
    }
}

pub(crate) fn lrmax_positions(f: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut max = 0;
    for (i, &x) in f.iter().enumerate() {
        if i == 0 || x > max {
            out.push(i + 1);
            max = max.max(x);
        }
    }
    out
}

pub(crate) fn lwmp_positions(f: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut max = 0;
    for (i, &x) in f.iter().enumerate() {
        if x >= max {
            out.push(i + 1);
            max = x;
        }
    }
    out
}

impl fmt::Display for RgfWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::join(&self.letters, f)
    }
}

impl FromStr for RgfWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(text::parse_letters("restricted growth function", s, s)?)
    }
}

impl TryFrom<Vec<usize>> for RgfWord {
    type Error = Error;

    fn try_from(letters: Vec<usize>) -> Result<Self> {
        Self::new(letters)
    }
}

impl From<RgfWord> for Vec<usize> {
    fn from(f: RgfWord) -> Self {
        f.letters
    }
}

/// All restricted growth functions of length `n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct RgfIter {
    letters: Vec<usize>,
    // prefix maxima: max[i] = max(letters[..=i])
    max: Vec<usize>,
    done: bool,
}

impl RgfIter {
    pub fn new(n: usize) -> Self {
        Self {
            letters: vec![1; n],
            max: vec![1; n],
            done: n == 0,
        }
    }
}

impl Iterator for RgfIter {
    type Item = RgfWord;

    fn next(&mut self) -> Option<RgfWord> {
        if self.done {
            return None;
        }
        let out = RgfWord::from_letters_unchecked(self.letters.clone());
        let n = self.letters.len();
        // rightmost position that can still grow
        let Some(i) = (1..n).rev().find(|&i| self.letters[i] <= self.max[i - 1]) else {
            self.done = true;
            return Some(out);
        };
        self.letters[i] += 1;
        self.max[i] = self.max[i - 1].max(self.letters[i]);
        for j in i + 1..n {
            self.letters[j] = 1;
            self.max[j] = self.max[i];
        }
        Some(out)
    }
}
