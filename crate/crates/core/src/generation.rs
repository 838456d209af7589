//! Exhaustive generation.
//!
//! [`generate_rsp`] is the two-row dynamic program: row `n` is built from rows
//! `n − 1` and `n − 2` only, with cell `k` equal to
//! `function_one(row[n−1][k]) ++ function_two(row[n−2][k−1])`.
//! Everything else here is brute force over restricted growth functions and
//! serves as an oracle.

use std::collections::BTreeSet;

use crate::bijections::{rlmin_insert, InsertTarget};
use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::permutation::Permutation;
use crate::rgf::{RgfIter, RgfWord};

/// Largest `n` accepted by the dynamic programs.
pub const DP_MAX_N: usize = 13;
/// Largest `n` accepted by [`oracle_rsp`].
pub const ORACLE_MAX_N: usize = 11;
/// Largest `n` accepted by the filtered enumerations over `RGF(n)`.
pub const FILTER_MAX_N: usize = 12;

fn guard(operation: &'static str, n: usize, limit: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            value: 0,
            min: 1,
            max: limit,
        });
    }
    if n > limit {
        return Err(Error::SizeLimit { operation, n, limit });
    }
    Ok(())
}

/// Which statistic a family is graded by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    Runs,
    RightToLeftMinima,
}

/// Run-sorted permutations of `[n]` split into cells by a statistic; cell `k`
/// holds the permutations whose statistic equals `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RspFamily {
    n: usize,
    statistic: Statistic,
    cells: Vec<Vec<Permutation>>,
}

impl RspFamily {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn statistic(&self) -> Statistic {
        self.statistic
    }

    /// Cell `k` (1-based); empty beyond the stored cells.
    pub fn cell(&self, k: usize) -> &[Permutation] {
        k.checked_sub(1)
            .and_then(|i| self.cells.get(i))
            .map_or(&[], Vec::as_slice)
    }

    /// Stored cells, `k = 1..=cells().len()`.
    pub fn cells(&self) -> &[Vec<Permutation>] {
        &self.cells
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.cells.iter().flatten()
    }

    /// Each cell sorted, for order-agnostic comparison.
    pub fn sorted_cells(&self) -> Vec<Vec<Permutation>> {
        self.cells
            .iter()
            .map(|c| {
                let mut c = c.clone();
                c.sort_unstable();
                c
            })
            .collect()
    }
}

/// Inserts `n` after every internal descent, then at the end, of each input.
pub fn function_one(cell: &[Permutation], n: usize) -> Vec<Permutation> {
    let mut out = Vec::with_capacity(cell.iter().map(Permutation::run_count).sum());
    for pi in cell {
        debug_assert_eq!(pi.n() + 1, n);
        let w = pi.word();
        for t in 0..w.len() - 1 {
            if w[t] > w[t + 1] {
                let mut next = Vec::with_capacity(n);
                next.extend_from_slice(&w[..=t]);
                next.push(n);
                next.extend_from_slice(&w[t + 1..]);
                out.push(Permutation::from_word_unchecked(next));
            }
        }
        let mut next = Vec::with_capacity(n);
        next.extend_from_slice(w);
        next.push(n);
        out.push(Permutation::from_word_unchecked(next));
    }
    out
}

fn grow_by_two(w: &[usize], p: usize) -> Permutation {
    let len = w.len();
    let mut next: Vec<usize> = Vec::with_capacity(len + 2);
    next.extend(w.iter().map(|&x| if x > p { x + 1 } else { x }));
    let mut pos = len - 1;
    while next[pos] > p {
        pos -= 1;
    }
    next.insert(pos + 1, len + 2);
    next.insert(pos + 2, p + 1);
    Permutation::from_word_unchecked(next)
}

/// Scan-from-the-right form of `psi(p, pi)`.
pub fn size_inc_by_two(pi: &Permutation, p: usize) -> Result<Permutation> {
    if !pi.is_run_sorted() {
        return Err(Error::NotInClass {
            object: pi.to_string(),
            class: "run-sorted",
        });
    }
    if p == 0 || p > pi.n() {
        return Err(Error::OutOfRange {
            what: "p",
            value: p,
            min: 1,
            max: pi.n(),
        });
    }
    Ok(grow_by_two(pi.word(), p))
}

/// [`size_inc_by_two`] for every input and every `p = 1..=len`.
pub fn function_two(cell: &[Permutation]) -> Vec<Permutation> {
    let mut out = Vec::with_capacity(cell.iter().map(Permutation::n).sum());
    for pi in cell {
        for p in 1..=pi.n() {
            out.push(grow_by_two(pi.word(), p));
        }
    }
    out
}

fn cell_of(row: &[Vec<Permutation>], k: usize) -> &[Permutation] {
    k.checked_sub(1).and_then(|i| row.get(i)).map_or(&[], Vec::as_slice)
}

/// All run-sorted permutations of `[n]` by number of runs, keeping only the
/// last two rows of the table alive.
pub fn generate_rsp(n: usize) -> Result<RspFamily> {
    guard("generate_rsp", n, DP_MAX_N)?;
    let seed = |w: Vec<usize>| vec![vec![Permutation::from_word_unchecked(w)]];
    let mut before_last = seed(vec![1]);
    if n == 1 {
        return Ok(RspFamily {
            n,
            statistic: Statistic::Runs,
            cells: before_last,
        });
    }
    let mut last = seed(vec![1, 2]);
    for i in 3..=n {
        let current: Vec<Vec<Permutation>> = (1..=i.div_ceil(2))
            .map(|k| {
                let mut cell = function_one(cell_of(&last, k), i);
                cell.extend(function_two(cell_of(&before_last, k - 1)));
                cell
            })
            .collect();
        before_last = std::mem::replace(&mut last, current);
    }
    Ok(RspFamily {
        n,
        statistic: Statistic::Runs,
        cells: last,
    })
}

fn bucket(n: usize, statistic: Statistic, perms: impl IntoIterator<Item = Permutation>) -> RspFamily {
    let default_cells = match statistic {
        Statistic::Runs => n.div_ceil(2),
        Statistic::RightToLeftMinima => n,
    };
    let mut cells: Vec<Vec<Permutation>> = vec![Vec::new(); default_cells];
    for pi in perms {
        let k = match statistic {
            Statistic::Runs => pi.run_count(),
            Statistic::RightToLeftMinima => pi.rlmin_count(),
        };
        if cells.len() < k {
            cells.resize(k, Vec::new());
        }
        cells[k - 1].push(pi);
    }
    RspFamily { n, statistic, cells }
}

/// Brute force: flatten every set partition of `[n]`, deduplicate and bucket
/// by run count. Cells come out sorted.
pub fn oracle_rsp(n: usize) -> Result<RspFamily> {
    guard("oracle_rsp", n, ORACLE_MAX_N)?;
    let distinct: BTreeSet<Permutation> = RgfIter::new(n).map(|f| f.to_partition().flatten()).collect();
    Ok(bucket(n, Statistic::Runs, distinct))
}

/// Every set partition of `[n]`, in lexicographic order of canonical forms.
pub fn generate_set_partitions(n: usize) -> Result<Vec<SetPartition>> {
    guard("generate_set_partitions", n, FILTER_MAX_N)?;
    Ok(RgfIter::new(n).map(|f| f.to_partition()).collect())
}

/// Canonical forms of merging-free partitions of `[n]`.
pub fn generate_t(n: usize) -> Result<Vec<RgfWord>> {
    guard("generate_t", n, FILTER_MAX_N)?;
    Ok(RgfIter::new(n).filter(RgfWord::is_in_t).collect())
}

/// Merging-free partitions of `[n]`.
pub fn generate_merging_free(n: usize) -> Result<Vec<SetPartition>> {
    guard("generate_merging_free", n, FILTER_MAX_N)?;
    Ok(RgfIter::new(n)
        .filter(RgfWord::is_in_t)
        .map(|f| f.to_partition())
        .collect())
}

/// Partitions of `[n]` with no two consecutive integers in a block.
pub fn generate_separated(n: usize) -> Result<Vec<SetPartition>> {
    guard("generate_separated", n, FILTER_MAX_N)?;
    Ok(RgfIter::new(n)
        .filter(|f| f.letters().windows(2).all(|w| w[0] != w[1]))
        .map(|f| f.to_partition())
        .collect())
}

/// Non-crossing merging-free partitions of `[n]`.
pub fn generate_ncmf(n: usize) -> Result<Vec<SetPartition>> {
    guard("generate_ncmf", n, FILTER_MAX_N)?;
    Ok(RgfIter::new(n)
        .filter(RgfWord::is_in_t)
        .map(|f| f.to_partition())
        .filter(SetPartition::is_noncrossing)
        .collect())
}

/// All run-sorted permutations of `[n]` by number of right-to-left minima,
/// grown from `{1}` by appending the new maximum or inserting it before a
/// right-to-left minimum other than 1.
pub fn generate_rsp_by_rlmin(n: usize) -> Result<RspFamily> {
    guard("generate_rsp_by_rlmin", n, DP_MAX_N)?;
    // cells[r - 1] holds the permutations with r right-to-left minima
    let mut cells = vec![vec![Permutation::from_word_unchecked(vec![1])]];
    for size in 2..=n {
        let mut next: Vec<Vec<Permutation>> = vec![Vec::new(); size];
        for (r0, cell) in cells.iter().enumerate() {
            for pi in cell {
                next[r0 + 1].push(rlmin_insert(pi, InsertTarget::End).expect("run-sorted"));
                for v in pi.rlmin_set().into_iter().skip(1) {
                    next[r0].push(rlmin_insert(pi, InsertTarget::Before(v)).expect("valid target"));
                }
            }
        }
        cells = next;
    }
    Ok(RspFamily {
        n,
        statistic: Statistic::RightToLeftMinima,
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }
    fn strings(v: &[Permutation]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn function_one_examples() {
        assert_eq!(
            strings(&function_one(&[perm("1,3,5,2,4")], 6)),
            ["1,3,5,6,2,4", "1,3,5,2,4,6"]
        );
        assert_eq!(strings(&function_one(&[perm("1")], 2)), ["1,2"]);
        assert_eq!(strings(&function_one(&[perm("1,2")], 3)), ["1,2,3"]);
    }

    #[test]
    fn size_inc_by_two_examples() {
        assert_eq!(
            size_inc_by_two(&perm("1,3,5,2,4"), 3).unwrap().to_string(),
            "1,3,6,2,7,4,5"
        );
        assert_eq!(size_inc_by_two(&perm("1"), 1).unwrap().to_string(), "1,3,2");
        assert_eq!(size_inc_by_two(&perm("1,2"), 2).unwrap().to_string(), "1,2,4,3");
        assert!(size_inc_by_two(&perm("1,2"), 3).is_err());
        assert!(size_inc_by_two(&perm("1,2"), 0).is_err());
    }

    #[test]
    fn function_two_examples() {
        assert_eq!(strings(&function_two(&[perm("1")])), ["1,3,2"]);
        assert_eq!(strings(&function_two(&[perm("1,2")])), ["1,4,2,3", "1,2,4,3"]);
        assert!(function_two(&[]).is_empty());
    }

    #[test]
    fn small_rows() {
        let one = generate_rsp(1).unwrap();
        assert_eq!(one.cells(), &[vec![perm("1")]]);
        let two = generate_rsp(2).unwrap();
        assert_eq!(two.cells(), &[vec![perm("1,2")]]);
        let four = generate_rsp(4).unwrap();
        assert_eq!(strings(four.cell(2)), ["1,3,4,2", "1,3,2,4", "1,4,2,3", "1,2,4,3"]);
        assert!(generate_rsp(0).is_err());
        assert!(matches!(generate_rsp(DP_MAX_N + 1), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn oracle_small() {
        assert_eq!(oracle_rsp(2).unwrap().cells(), &[vec![perm("1,2")]]);
        assert_eq!(oracle_rsp(4).unwrap().cell(2).len(), 4);
        assert_eq!(oracle_rsp(5).unwrap().len(), 15);
        assert!(matches!(oracle_rsp(12), Err(Error::SizeLimit { limit: 11, .. })));
    }

    #[test]
    fn filtered_families() {
        assert_eq!(generate_set_partitions(3).unwrap().len(), 5);
        assert_eq!(generate_ncmf(4).unwrap().len(), 4);
        let t3: Vec<String> = generate_t(3).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(t3, ["1,1,1", "1,2,1"]);
        assert_eq!(generate_separated(4).unwrap().len(), 5);
        assert!(generate_t(13).is_err());
    }

    #[test]
    fn rlmin_buckets() {
        let f = generate_rsp_by_rlmin(5).unwrap();
        assert_eq!(f.cell(3).len(), 7);
        assert_eq!(strings(f.cell(2)), ["1,3,4,5,2"]);
        assert_eq!(generate_rsp_by_rlmin(1).unwrap().cells(), &[vec![perm("1")]]);
    }
}
