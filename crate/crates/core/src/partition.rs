use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::rgf::RgfWord;
use crate::text;

/// A set partition of `[n]` in block representation: every block is strictly
/// increasing and blocks are ordered by increasing minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates blocks that are already in block representation.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidPartition(msg));
        if blocks.is_empty() {
            return bad("no blocks (n = 0 is not a valid ground set)".into());
        }
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        let mut prev_min = 0;
        for (i, block) in blocks.iter().enumerate() {
            let Some(&min) = block.first() else {
                return bad(format!("block {} is empty", i + 1));
            };
            if min <= prev_min {
                return bad(format!("block minima are not increasing at block {}", i + 1));
            }
            prev_min = min;
            for w in block.windows(2) {
                if w[0] >= w[1] {
                    return bad(format!("block {} is not strictly increasing", i + 1));
                }
            }
            for &x in block {
                if x == 0 || x > n {
                    return bad(format!("element {x} is outside 1..={n}"));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return bad(format!("element {x} occurs twice"));
                }
            }
        }
        Ok(Self { n, blocks })
    }

    /// Sorts arbitrary disjoint blocks into block representation, then validates.
    pub fn from_unordered_blocks(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        blocks.retain(|b| !b.is_empty());
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Self::new(blocks)
    }

    pub(crate) fn from_blocks_unchecked(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        debug_assert!(Self::new(blocks.clone()).is_ok_and(|p| p.n == n));
        Self { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn into_blocks(self) -> Vec<Vec<usize>> {
        self.blocks
    }

    /// The word `f` with `j ∈ B_{f_j}`.
    pub fn canonical_form(&self) -> RgfWord {
        let mut letters = vec![0; self.n];
        for (i, block) in self.blocks.iter().enumerate() {
            for &x in block {
                letters[x - 1] = i + 1;
            }
        }
        RgfWord::from_letters_unchecked(letters)
    }

    /// Concatenation of the blocks; always run-sorted.
    pub fn flatten(&self) -> Permutation {
        Permutation::from_word_unchecked(self.blocks.concat())
    }

    /// `max(B_i) > min(B_{i+1})` for every pair of adjacent blocks.
    pub fn is_merging_free(&self) -> bool {
        self.blocks.windows(2).all(|w| w[0][w[0].len() - 1] > w[1][0])
    }

    /// No block contains two consecutive integers.
    pub fn is_separated(&self) -> bool {
        self.blocks.iter().all(|b| b.windows(2).all(|w| w[1] != w[0] + 1))
    }

    /// No two blocks interleave as `a < x < b < y`.
    ///
    /// Decided through 212-avoidance of the canonical form; debug builds also
    /// run the direct pairwise test and assert that both agree.
    pub fn is_noncrossing(&self) -> bool {
        let avoids = self.canonical_form().avoids_212();
        debug_assert_eq!(avoids, !self.has_crossing_pair(), "212 test disagrees for {self}");
        avoids
    }

    /// Direct search over quadruples `a < x < b < y` with `a, b` in one block
    /// and `x, y` in another.
    pub fn has_crossing_pair(&self) -> bool {
        let mut label = vec![0; self.n + 1];
        for (i, block) in self.blocks.iter().enumerate() {
            for &x in block {
                label[x] = i;
            }
        }
        let n = self.n;
        for a in 1..=n {
            for x in a + 1..=n {
                if label[x] == label[a] {
                    continue;
                }
                for b in x + 1..=n {
                    if label[b] != label[a] {
                        continue;
                    }
                    if (b + 1..=n).any(|y| label[y] == label[x]) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            text::join(block, f)?;
        }
        Ok(())
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .split('/')
            .map(|part| text::parse_letters("set partition", s, part))
            .collect::<Result<Vec<_>>>()?;
        Self::new(blocks)
    }
}

impl TryFrom<Vec<Vec<usize>>> for SetPartition {
    type Error = Error;

    fn try_from(blocks: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(blocks)
    }
}

impl From<SetPartition> for Vec<Vec<usize>> {
    fn from(p: SetPartition) -> Self {
        p.blocks
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(sp("1,3,8/2/4,7/5,6").canonical_form().to_string(), "1,2,1,3,4,4,3,1");
        assert_eq!(sp("1/2/3").canonical_form().to_string(), "1,2,3");
        assert_eq!(
            sp("1,4,9/2,3,8/5,7/6").canonical_form().to_string(),
            "1,2,2,1,3,4,3,2,1"
        );
    }

    #[test]
    fn flatten_concatenates_blocks() {
        assert_eq!(sp("1,2,6/3/4,8/5,7").flatten().to_string(), "1,2,6,3,4,8,5,7");
        assert_eq!(sp("1,2,3").flatten().to_string(), "1,2,3");
        assert_eq!(sp("1,4,9/2,3,8/5,7/6").flatten().to_string(), "1,4,9,2,3,8,5,7,6");
    }

    #[test]
    fn merging_free() {
        assert!(sp("1,2,6/3,4,8/5,7").is_merging_free());
        assert!(!sp("1/2").is_merging_free());
        assert!(!sp("1,2,6/3/4,8/5,7").is_merging_free());
        assert!(sp("1,2,3").is_merging_free());
    }

    #[test]
    fn separated() {
        assert!(sp("1,3,5,8/2,6/4,7").is_separated());
        assert!(!sp("1,2").is_separated());
        assert!(sp("1,3,6/2,5,8/4,7").is_separated());
    }

    #[test]
    fn noncrossing() {
        assert!(sp("1,2,3,9,10/4,6,7,8/5").is_noncrossing());
        assert!(!sp("1,2,5,7/3,9,10/4,6,8").is_noncrossing());
        assert!(sp("1/2/3/4/5").is_noncrossing());
        assert!(sp("1,2,5,7/3,9,10/4,6,8").has_crossing_pair());
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "1,3/2,2", "2/1", "1,3", "3,1/2", "1//2", "0/1", "1, 2", "a"] {
            assert!(bad.parse::<SetPartition>().is_err(), "{bad:?} accepted");
        }
        assert!(SetPartition::new(vec![]).is_err());
    }

    #[test]
    fn unordered_blocks_are_normalized() {
        let p = SetPartition::from_unordered_blocks(vec![vec![5, 2], vec![3, 1, 4]]).unwrap();
        assert_eq!(p.to_string(), "1,3,4/2,5");
    }

    #[test]
    fn json_is_array_of_arrays() {
        let p = sp("1,4/2,5,8/3,7/6");
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, "[[1,4],[2,5,8],[3,7],[6]]");
        assert_eq!(serde_json::from_str::<SetPartition>(&js).unwrap(), p);
        assert!(serde_json::from_str::<SetPartition>("[[2],[1]]").is_err());
    }
}
