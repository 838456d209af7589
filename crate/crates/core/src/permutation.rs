use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text;

/// A permutation of `[n]` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty word".into()));
        }
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n {
                return Err(Error::InvalidPermutation(format!("letter {x} is outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("letter {x} occurs twice")));
            }
        }
        Ok(Self { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Self::new(word.clone()).is_ok(), "not a permutation: {word:?}");
        Self { word }
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new((1..=n).collect())
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn into_word(self) -> Vec<usize> {
        self.word
    }

    /// 1-based positions `i` with `π_i > π_{i+1}`.
    pub fn descents(&self) -> Vec<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn run_count(&self) -> usize {
        1 + self.word.windows(2).filter(|w| w[0] > w[1]).count()
    }

    pub fn run_decomposition(&self) -> RunDecomposition {
        let mut runs: Vec<Vec<usize>> = Vec::new();
        let mut prev = usize::MAX;
        for &x in &self.word {
            match runs.last_mut() {
                Some(run) if x > prev => run.push(x),
                _ => runs.push(vec![x]),
            }
            prev = x;
        }
        RunDecomposition {
            runs,
            source: self.clone(),
        }
    }

    /// Run minima strictly increase from left to right.
    pub fn is_run_sorted(&self) -> bool {
        let mut last_min = 0;
        let mut prev = usize::MAX;
        for &x in &self.word {
            if x < prev {
                if x < last_min {
                    return false;
                }
                last_min = x;
            }
            prev = x;
        }
        true
    }

    /// Values smaller than every value to their right, in increasing order.
    pub fn rlmin_set(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut min = usize::MAX;
        for &x in self.word.iter().rev() {
            if x < min {
                out.push(x);
                min = x;
            }
        }
        out.reverse();
        out
    }

    pub fn rlmin_count(&self) -> usize {
        self.rlmin_set().len()
    }

    /// 0-based index of the letter `value`.
    pub(crate) fn index_of(&self, value: usize) -> Option<usize> {
        self.word.iter().position(|&x| x == value)
    }
}

/// The maximal increasing factors of a permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunDecomposition {
    runs: Vec<Vec<usize>>,
    source: Permutation,
}

impl RunDecomposition {
    pub fn runs(&self) -> &[Vec<usize>] {
        &self.runs
    }

    pub fn source(&self) -> &Permutation {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn minima(&self) -> impl Iterator<Item = usize> + '_ {
        self.runs.iter().map(|r| r[0])
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::join(&self.word, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(text::parse_letters("permutation", s, s)?)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<usize>) -> Result<Self> {
        Self::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.word
    }
}
