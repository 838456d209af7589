//! Constructive bijections between set partitions, canonical forms and
//! run-sorted permutations, each with its inverse.

use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::permutation::Permutation;
use crate::rgf::RgfWord;

/// The four correction vectors behind `α(f) = 1·(f − u + δ)` and
/// `β(1·g) = g + v − δ'`, for a pair `f ↔ 1·g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionTrace {
    /// Unique left-to-right maximum letters of `f` to the left of `i` that are smaller than `f_i`.
    pub u: Vec<usize>,
    /// 1 where `f_i` is a non-unique left-to-right maximum letter of `f`.
    pub delta: Vec<usize>,
    /// Non-strict left-to-right maximum letters of `g` to the left of `i` that are at most `g_i`.
    pub v: Vec<usize>,
    /// 1 where `g_i` is a left-to-right maximum letter.
    pub delta_prime: Vec<usize>,
}

/// Where [`rlmin_insert`] places the new largest letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InsertTarget {
    /// Append at the end; the right-to-left minimum count grows by one.
    End,
    /// Insert immediately before this right-to-left minimum value (never 1).
    Before(usize),
}

fn require_run_sorted(pi: &Permutation) -> Result<()> {
    if pi.is_run_sorted() {
        Ok(())
    } else {
        Err(Error::NotInClass {
            object: pi.to_string(),
            class: "run-sorted",
        })
    }
}

/// Maps `SP(n)` onto `RSP(n+1)`: rotate each block minimum to the end of its
/// block, concatenate, shift every letter up by one and prepend 1.
pub fn prop0_forward(p: &SetPartition) -> Permutation {
    let mut word = Vec::with_capacity(p.n() + 1);
    word.push(1);
    for block in p.blocks() {
        word.extend(block[1..].iter().map(|x| x + 1));
        word.push(block[0] + 1);
    }
    Permutation::from_word_unchecked(word)
}

/// Inverse of [`prop0_forward`]: cut after every right-to-left minimum, drop
/// the letter 1, shift down by one and sort each block.
pub fn prop0_inverse(pi: &Permutation) -> Result<SetPartition> {
    require_run_sorted(pi)?;
    if pi.n() < 2 {
        return Err(Error::OutOfRange {
            what: "permutation length",
            value: pi.n(),
            min: 2,
            max: usize::MAX,
        });
    }
    let rlmin = rlmin_mask(pi);
    let mut blocks = Vec::new();
    let mut current = Vec::new();
    for &x in &pi.word()[1..] {
        current.push(x - 1);
        if rlmin[x] {
            blocks.push(std::mem::take(&mut current));
        }
    }
    debug_assert!(current.is_empty());
    SetPartition::from_unordered_blocks(blocks)
}

fn rlmin_mask(pi: &Permutation) -> Vec<bool> {
    let mut mask = vec![false; pi.n() + 1];
    for v in pi.rlmin_set() {
        mask[v] = true;
    }
    mask
}

fn alpha_vectors(f: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let max = f.iter().copied().max().unwrap_or(0);
    let mut count = vec![0usize; max + 1];
    for &x in f {
        count[x] += 1;
    }
    let mut u = Vec::with_capacity(f.len());
    let mut delta = Vec::with_capacity(f.len());
    // unique strict maxima seen so far, by letter
    let mut unique_seen: Vec<usize> = Vec::new();
    let mut running = 0;
    for &x in f {
        u.push(unique_seen.iter().filter(|&&s| s < x).count());
        let is_lrmax = x > running;
        delta.push(usize::from(is_lrmax && count[x] > 1));
        if is_lrmax {
            running = x;
            if count[x] == 1 {
                unique_seen.push(x);
            }
        }
    }
    (u, delta)
}

// `full` is `1·g`; vectors are indexed by the letters of `g`.
fn beta_vectors(full: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut v = Vec::with_capacity(full.len() - 1);
    let mut delta_prime = Vec::with_capacity(full.len() - 1);
    let mut non_strict: Vec<usize> = Vec::new();
    let mut running = full[0];
    for &x in &full[1..] {
        v.push(non_strict.iter().filter(|&&s| s <= x).count());
        delta_prime.push(usize::from(x > running));
        if x == running {
            non_strict.push(x);
        }
        running = running.max(x);
    }
    (v, delta_prime)
}

/// `α(f) = 1·(f − u + δ)`, a bijection `RGF(n) → T_{n+1}`.
pub fn alpha(f: &RgfWord) -> RgfWord {
    let (u, delta) = alpha_vectors(f.letters());
    let mut out = Vec::with_capacity(f.n() + 1);
    out.push(1);
    out.extend(
        f.letters()
            .iter()
            .zip(u.iter().zip(&delta))
            .map(|(&x, (&ui, &di))| x - ui + di),
    );
    RgfWord::from_letters_unchecked(out)
}

/// `β(1·g) = g + v − δ'`, the inverse of [`alpha`].
pub fn beta(g: &RgfWord) -> Result<RgfWord> {
    if g.n() < 2 {
        return Err(Error::OutOfRange {
            what: "word length",
            value: g.n(),
            min: 2,
            max: usize::MAX,
        });
    }
    if !g.is_in_t() {
        return Err(Error::NotInClass {
            object: g.to_string(),
            class: "the canonical form of a merging-free partition",
        });
    }
    let (v, delta_prime) = beta_vectors(g.letters());
    let out = g.letters()[1..]
        .iter()
        .zip(v.iter().zip(&delta_prime))
        .map(|(&x, (&vi, &di))| x + vi - di)
        .collect();
    Ok(RgfWord::from_letters_unchecked(out))
}

/// All four correction vectors for `f` and its image `α(f)`.
pub fn alpha_trace(f: &RgfWord) -> BijectionTrace {
    let (u, delta) = alpha_vectors(f.letters());
    let (v, delta_prime) = beta_vectors(alpha(f).letters());
    BijectionTrace {
        u,
        delta,
        v,
        delta_prime,
    }
}

/// Inserts `n` at the end of the `i`-th run of `sigma ∈ RSP(n−1, k)`.
pub fn phi(i: usize, sigma: &Permutation) -> Result<Permutation> {
    require_run_sorted(sigma)?;
    let runs = sigma.run_decomposition();
    if i == 0 || i > runs.len() {
        return Err(Error::OutOfRange {
            what: "run index",
            value: i,
            min: 1,
            max: runs.len(),
        });
    }
    let n = sigma.n() + 1;
    let mut word = Vec::with_capacity(n);
    for (j, run) in runs.runs().iter().enumerate() {
        word.extend_from_slice(run);
        if j + 1 == i {
            word.push(n);
        }
    }
    Ok(Permutation::from_word_unchecked(word))
}

/// Maps `(i, π) ∈ [n−2] × RSP(n−2, k−1)` into `RSP⁽²⁾(n, k)`: shift letters above
/// `i` up by one and insert `n, i+1` right after the rightmost letter in `1..=i`.
pub fn psi(i: usize, pi: &Permutation) -> Result<Permutation> {
    require_run_sorted(pi)?;
    let m = pi.n();
    if i == 0 || i > m {
        return Err(Error::OutOfRange {
            what: "psi index",
            value: i,
            min: 1,
            max: m,
        });
    }
    let mut word: Vec<usize> = pi.word().iter().map(|&x| if x > i { x + 1 } else { x }).collect();
    let at = word.iter().rposition(|&x| x <= i).expect("letter 1 is always present");
    word.splice(at + 1..at + 1, [m + 2, i + 1]);
    Ok(Permutation::from_word_unchecked(word))
}

/// Inverse of [`psi`]. Returns `(j − 1, π)` where `j` is the letter after `n`.
pub fn psi_inverse(pi: &Permutation) -> Result<(usize, Permutation)> {
    require_run_sorted(pi)?;
    let n = pi.n();
    let not_in = || Error::NotInClass {
        object: pi.to_string(),
        class: "in RSP(2) (removing the largest letter must merge two runs)",
    };
    if n < 3 {
        return Err(not_in());
    }
    let word = pi.word();
    let at = pi.index_of(n).expect("n is present");
    if at == 0 || at + 1 == n || word[at - 1] > word[at + 1] {
        return Err(not_in());
    }
    let j = word[at + 1];
    let rest: Vec<usize> = word
        .iter()
        .enumerate()
        .filter(|&(t, _)| t != at && t != at + 1)
        .map(|(_, &x)| if x > j { x - 1 } else { x })
        .collect();
    let sigma = Permutation::from_word_unchecked(rest);
    debug_assert!(sigma.is_run_sorted());
    Ok((j - 1, sigma))
}

/// Canonical-form counterpart of [`psi`] on `T_{n−2}`: with `m = max(f_1..f_i)`,
/// bump every later letter `≥ m`, insert `m + 1` at position `i + 1` and append `m`.
pub fn canonical_extend(i: usize, f: &RgfWord) -> Result<RgfWord> {
    if !f.is_in_t() {
        return Err(Error::NotInClass {
            object: f.to_string(),
            class: "the canonical form of a merging-free partition",
        });
    }
    let letters = f.letters();
    if i == 0 || i > letters.len() {
        return Err(Error::OutOfRange {
            what: "insertion position",
            value: i,
            min: 1,
            max: letters.len(),
        });
    }
    let m = letters[..i].iter().copied().max().expect("i >= 1");
    let mut out = Vec::with_capacity(letters.len() + 2);
    out.extend_from_slice(&letters[..i]);
    out.push(m + 1);
    out.extend(letters[i..].iter().map(|&x| if x >= m { x + 1 } else { x }));
    out.push(m);
    Ok(RgfWord::from_letters_unchecked(out))
}

/// Grows `π ∈ RSP(n−1)` to `RSP(n)` by appending `n` or inserting it before a
/// right-to-left minimum other than 1.
pub fn rlmin_insert(pi: &Permutation, target: InsertTarget) -> Result<Permutation> {
    require_run_sorted(pi)?;
    let n = pi.n() + 1;
    let mut word = pi.word().to_vec();
    match target {
        InsertTarget::End => word.push(n),
        InsertTarget::Before(v) => {
            if v == 1 || !pi.rlmin_set().contains(&v) {
                return Err(Error::NotInClass {
                    object: v.to_string(),
                    class: "a right-to-left minimum other than 1",
                });
            }
            let at = pi.index_of(v).expect("rlmin values are letters");
            word.insert(at, n);
        }
    }
    Ok(Permutation::from_word_unchecked(word))
}

fn block_locations(n: usize, blocks: &[Vec<usize>]) -> Vec<usize> {
    let mut loc = vec![0; n + 1];
    for (i, b) in blocks.iter().enumerate() {
        for &x in b {
            loc[x] = i;
        }
    }
    loc
}

fn move_element(blocks: &mut [Vec<usize>], loc: &mut [usize], b: usize, to: usize) {
    let from = loc[b];
    blocks[from].retain(|&x| x != b);
    let at = blocks[to].partition_point(|&x| x < b);
    blocks[to].insert(at, b);
    loc[b] = to;
}

/// Separated partitions of `[n]` with `k` blocks onto run-sorted permutations of
/// `[n]` with `k` right-to-left minima.
pub fn theta(p: &SetPartition) -> Result<Permutation> {
    if !p.is_separated() {
        return Err(Error::NotInClass {
            object: p.to_string(),
            class: "separated",
        });
    }
    let mut blocks = p.blocks().to_vec();
    let mut loc = block_locations(p.n(), &blocks);
    for i in 1..blocks.len() {
        let candidates: Vec<usize> = blocks[i][1..].to_vec();
        for b in candidates {
            if loc[b - 1] < i {
                move_element(&mut blocks, &mut loc, b, i - 1);
            }
        }
    }
    Ok(Permutation::from_word_unchecked(blocks.concat()))
}

/// Inverse of [`theta`].
pub fn theta_inverse(pi: &Permutation) -> Result<SetPartition> {
    require_run_sorted(pi)?;
    let rlmin = rlmin_mask(pi);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &x in pi.word() {
        match blocks.last_mut() {
            Some(block) if !rlmin[x] => block.push(x),
            _ => blocks.push(vec![x]),
        }
    }
    for b in &mut blocks {
        b.sort_unstable();
    }
    let mut loc = block_locations(pi.n(), &blocks);
    for i in (0..blocks.len()).rev() {
        let candidates: Vec<usize> = blocks[i][1..].to_vec();
        for b in candidates {
            if loc[b - 1] <= i {
                debug_assert!(i + 1 < blocks.len(), "last block is a singleton");
                move_element(&mut blocks, &mut loc, b, i + 1);
            }
        }
    }
    let p = SetPartition::from_blocks_unchecked(pi.n(), blocks);
    debug_assert!(p.is_separated());
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }
    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }
    fn rgf(s: &str) -> RgfWord {
        s.parse().unwrap()
    }

    #[test]
    fn prop0_examples() {
        assert_eq!(prop0_forward(&sp("1,4/2,5,8/3,7/6")).to_string(), "1,5,2,6,9,3,8,4,7");
        assert_eq!(prop0_forward(&sp("1")).to_string(), "1,2");
        assert_eq!(prop0_forward(&sp("1,2/3")).to_string(), "1,3,2,4");
        assert_eq!(
            prop0_inverse(&perm("1,5,2,6,9,3,8,4,7")).unwrap().to_string(),
            "1,4/2,5,8/3,7/6"
        );
        assert_eq!(prop0_inverse(&perm("1,2")).unwrap().to_string(), "1");
        assert_eq!(prop0_inverse(&perm("1,3,2,4")).unwrap().to_string(), "1,2/3");
    }

    #[test]
    fn prop0_inverse_rejects() {
        assert!(matches!(prop0_inverse(&perm("2,1")), Err(Error::NotInClass { .. })));
        assert!(prop0_inverse(&perm("1")).is_err());
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&rgf("1,2,1,3,1,2,4")).to_string(), "1,2,3,1,3,1,2,3");
        assert_eq!(alpha(&rgf("1")).to_string(), "1,1");
        assert_eq!(alpha(&rgf("1,1")).to_string(), "1,2,1");
        let t = alpha_trace(&rgf("1,2,1,3,1,2,4"));
        assert_eq!(t.u, vec![0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(t.delta, vec![1, 1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta(&rgf("1,2,2,1,3,4,3,2,1")).unwrap().to_string(), "1,2,1,3,4,4,3,1");
        assert_eq!(beta(&rgf("1,1")).unwrap().to_string(), "1");
        assert_eq!(beta(&rgf("1,2,1")).unwrap().to_string(), "1,1");
        assert_eq!(beta(&rgf("1,2,3,1,3,1,2,3")).unwrap().to_string(), "1,2,1,3,1,2,4");
        assert!(matches!(beta(&rgf("1,2")), Err(Error::NotInClass { .. })));
        assert!(beta(&rgf("1")).is_err());
        let (v, dp) = beta_vectors(rgf("1,2,2,1,3,4,3,2,1").letters());
        assert_eq!(v, vec![0, 0, 0, 1, 1, 1, 1, 0]);
        assert_eq!(dp, vec![1, 0, 0, 1, 1, 0, 0, 0]);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(1, &perm("1,3,5,2,4")).unwrap().to_string(), "1,3,5,6,2,4");
        assert_eq!(phi(2, &perm("1,3,5,2,4")).unwrap().to_string(), "1,3,5,2,4,6");
        assert_eq!(phi(1, &perm("1")).unwrap().to_string(), "1,2");
        assert!(matches!(phi(3, &perm("1,3,5,2,4")), Err(Error::OutOfRange { .. })));
        assert!(phi(0, &perm("1")).is_err());
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(3, &perm("1,3,5,2,4")).unwrap().to_string(), "1,3,6,2,7,4,5");
        assert_eq!(psi(1, &perm("1")).unwrap().to_string(), "1,3,2");
        assert_eq!(psi(2, &perm("1,2")).unwrap().to_string(), "1,2,4,3");
        assert!(matches!(psi(6, &perm("1,3,5,2,4")), Err(Error::OutOfRange { .. })));
        assert!(psi(0, &perm("1")).is_err());
    }

    #[test]
    fn psi_inverse_examples() {
        let (i, p) = psi_inverse(&perm("1,3,6,2,7,4,5")).unwrap();
        assert_eq!((i, p.to_string()), (3, "1,3,5,2,4".to_string()));
        let (i, p) = psi_inverse(&perm("1,3,2")).unwrap();
        assert_eq!((i, p.to_string()), (1, "1".to_string()));
        let (i, p) = psi_inverse(&perm("1,2,4,3")).unwrap();
        assert_eq!((i, p.to_string()), (2, "1,2".to_string()));
    }

    #[test]
    fn psi_inverse_rejects_rsp1() {
        // n last
        assert!(psi_inverse(&perm("1,2,3")).is_err());
        // removing 5 leaves two runs 1,3,4 / 2
        assert!(psi_inverse(&perm("1,3,4,5,2")).is_err());
        assert!(psi_inverse(&perm("1,2")).is_err());
        assert!(psi_inverse(&perm("2,1,3")).is_err());
    }

    #[test]
    fn canonical_extend_examples() {
        assert_eq!(
            canonical_extend(3, &rgf("1,2,1,3,2")).unwrap().to_string(),
            "1,2,1,3,4,3,2"
        );
        assert_eq!(canonical_extend(1, &rgf("1")).unwrap().to_string(), "1,2,1");
        assert_eq!(canonical_extend(2, &rgf("1,1")).unwrap().to_string(), "1,1,2,1");
        assert!(canonical_extend(3, &rgf("1,1")).is_err());
        assert!(canonical_extend(1, &rgf("1,2")).is_err());
    }

    #[test]
    fn rlmin_insert_examples() {
        assert_eq!(
            rlmin_insert(&perm("1,2"), InsertTarget::End).unwrap().to_string(),
            "1,2,3"
        );
        assert_eq!(
            rlmin_insert(&perm("1,2"), InsertTarget::Before(2)).unwrap().to_string(),
            "1,3,2"
        );
        let out = rlmin_insert(&perm("1,3,2,4"), InsertTarget::Before(2)).unwrap();
        assert_eq!(out.to_string(), "1,3,5,2,4");
        assert_eq!(out.rlmin_set(), vec![1, 2, 4]);
        assert!(rlmin_insert(&perm("1,2"), InsertTarget::Before(1)).is_err());
        assert!(rlmin_insert(&perm("1,3,2,4"), InsertTarget::Before(3)).is_err());
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&sp("1,3,5,8/2,6/4,7")).unwrap().to_string(), "1,3,5,6,8,2,7,4");
        assert_eq!(theta(&sp("1/2/3")).unwrap().to_string(), "1,2,3");
        assert_eq!(theta(&sp("1,3/2")).unwrap().to_string(), "1,3,2");
        assert!(theta(&sp("1,2/3")).is_err());
    }

    #[test]
    fn theta_inverse_examples() {
        assert_eq!(
            theta_inverse(&perm("1,3,6,2,5,7,8,4")).unwrap().to_string(),
            "1,3,6/2,5,8/4,7"
        );
        assert_eq!(theta_inverse(&perm("1,2,3")).unwrap().to_string(), "1/2/3");
        assert_eq!(
            theta_inverse(&perm("1,3,5,6,8,2,7,4")).unwrap().to_string(),
            "1,3,5,8/2,6/4,7"
        );
        assert!(theta_inverse(&perm("3,1,2")).is_err());
    }
}
