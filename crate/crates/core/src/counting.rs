//! Counting sequences and triangles over arbitrary-precision integers.
//!
//! | kind | index | meaning |
//! |------|-------|---------|
//! | `R` | `(n, k)` | run-sorted permutations of `[n]` with `k` runs |
//! | `H` | `(n, r)` | run-sorted permutations of `[n]` with `r` right-to-left minima |
//! | `A` | `(n, k, r)` | both statistics jointly |
//! | `L` | `(n)` | partitions whose blocks all have size ≥ 2 except possibly the last |
//! | `Bell` | `(n)` | set partitions of `[n]` |
//! | `Stirling2` | `(n, k)` | set partitions of `[n]` into `k` blocks |
//! | `Ncmf` | `(n, t)` | non-crossing merging-free partitions of `[n]` with `t` blocks |

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    R,
    H,
    A,
    L,
    Bell,
    Stirling2,
    Ncmf,
}

impl TableKind {
    /// Number of indices, including `n`.
    pub fn dims(self) -> usize {
        match self {
            TableKind::L | TableKind::Bell => 1,
            TableKind::R | TableKind::H | TableKind::Stirling2 | TableKind::Ncmf => 2,
            TableKind::A => 3,
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableKind::R => "r",
            TableKind::H => "h",
            TableKind::A => "a",
            TableKind::L => "l",
            TableKind::Bell => "bell",
            TableKind::Stirling2 => "stirling",
            TableKind::Ncmf => "ncmf",
        })
    }
}

/// A dense table indexed by `0 ≤ n, k, r ≤ nmax`. Reads outside the box are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    kind: TableKind,
    nmax: usize,
    values: Vec<BigUint>,
}

impl CountTable {
    fn zeros(kind: TableKind, nmax: usize) -> Self {
        let side = nmax + 1;
        Self {
            kind,
            nmax,
            values: vec![BigUint::zero(); side.pow(kind.dims() as u32)],
        }
    }

    fn offset(&self, idx: &[usize]) -> Option<usize> {
        assert_eq!(idx.len(), self.kind.dims(), "wrong index arity for {} table", self.kind);
        let side = self.nmax + 1;
        idx.iter().try_fold(0, |acc, &i| (i < side).then_some(acc * side + i))
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn nmax(&self) -> usize {
        self.nmax
    }

    /// Entry at `idx` (arity must match the kind); zero outside the box.
    pub fn get(&self, idx: &[usize]) -> BigUint {
        self.offset(idx).map(|o| self.values[o].clone()).unwrap_or_default()
    }

    fn at(&mut self, idx: &[usize]) -> &mut BigUint {
        let o = self.offset(idx).expect("index inside the table");
        &mut self.values[o]
    }

    /// Sum over every index after `n`.
    pub fn row_sum(&self, n: usize) -> BigUint {
        if n > self.nmax {
            return BigUint::zero();
        }
        let stride = (self.nmax + 1).pow(self.kind.dims() as u32 - 1);
        self.values[n * stride..(n + 1) * stride].iter().sum()
    }
}

/// Pascal's triangle `C(n, k)` for `0 ≤ k ≤ n ≤ nmax`.
pub fn binomials(nmax: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        let mut row = vec![BigUint::one(); n + 1];
        for k in 1..n {
            row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
        }
        rows.push(row);
    }
    rows
}

fn choose(c: &[Vec<BigUint>], n: usize, k: usize) -> BigUint {
    if k > n {
        BigUint::zero()
    } else {
        c[n][k].clone()
    }
}

/// `r_{n,k} = k·r_{n−1,k} + (n−2)·r_{n−2,k−1}` with `r_{0,0} = r_{1,1} = 1`.
pub fn r_table(nmax: usize) -> CountTable {
    let mut t = CountTable::zeros(TableKind::R, nmax);
    *t.at(&[0, 0]) = BigUint::one();
    if nmax >= 1 {
        *t.at(&[1, 1]) = BigUint::one();
    }
    for n in 2..=nmax {
        for k in 1..=n {
            let mut v = t.get(&[n - 1, k]) * k;
            v += t.get(&[n - 2, k - 1]) * (n - 2);
            *t.at(&[n, k]) = v;
        }
    }
    t
}

/// `h_{n,r} = h_{n−1,r−1} + (r−1)·h_{n−1,r}` with `h_{1,1} = 1`.
pub fn h_table(nmax: usize) -> CountTable {
    let mut t = CountTable::zeros(TableKind::H, nmax);
    if nmax >= 1 {
        *t.at(&[1, 1]) = BigUint::one();
    }
    for n in 2..=nmax {
        for r in 1..=n {
            let mut v = t.get(&[n - 1, r - 1]);
            v += t.get(&[n - 1, r]) * (r - 1);
            *t.at(&[n, r]) = v;
        }
    }
    t
}

/// `a_{n,k,r} = a_{n−1,k,r−1} + (k−1)·a_{n−1,k,r} + (n−2)·a_{n−2,k−1,r−1}`
/// with `a_{0,0,0} = a_{1,1,1} = 1`.
pub fn a_table(nmax: usize) -> CountTable {
    let mut t = CountTable::zeros(TableKind::A, nmax);
    *t.at(&[0, 0, 0]) = BigUint::one();
    if nmax >= 1 {
        *t.at(&[1, 1, 1]) = BigUint::one();
    }
    for n in 2..=nmax {
        for k in 1..=n {
            for r in 1..=n {
                let mut v = t.get(&[n - 1, k, r - 1]);
                v += t.get(&[n - 1, k, r]) * (k - 1);
                v += t.get(&[n - 2, k - 1, r - 1]) * (n - 2);
                *t.at(&[n, k, r]) = v;
            }
        }
    }
    t
}

/// The joint table again, from the binomial-sum recurrence
/// `a_{m+2,k,r} = a_{m+1,k,r−1} + Σ_{i=1}^{m} C(m,i)·a_{m+1−i,k−1,r−1}`.
pub fn a_table_binomial(nmax: usize) -> CountTable {
    let mut t = CountTable::zeros(TableKind::A, nmax);
    let c = binomials(nmax);
    *t.at(&[0, 0, 0]) = BigUint::one();
    if nmax >= 1 {
        *t.at(&[1, 1, 1]) = BigUint::one();
    }
    for n in 2..=nmax {
        let m = n - 2;
        for k in 1..=n {
            for r in 1..=n {
                let mut v = t.get(&[n - 1, k, r - 1]);
                for i in 1..=m {
                    v += choose(&c, m, i) * t.get(&[m + 1 - i, k - 1, r - 1]);
                }
                *t.at(&[n, k, r]) = v;
            }
        }
    }
    t
}

/// `l_n = Σ_{k=1}^{n−1} C(n−1,k)·l_{n−k−1}` with `l_0 = l_1 = 1`.
pub fn l_sequence(nmax: usize) -> CountTable {
    let mut t = CountTable::zeros(TableKind::L, nmax);
    let c = binomials(nmax);
    *t.at(&[0]) = BigUint::one();
    if nmax >= 1 {
        *t.at(&[1]) = BigUint::one();
    }
    for n in 2..=nmax {
        let v = (1..n).map(|k| choose(&c, n - 1, k) * t.get(&[n - k - 1])).sum();
        *t.at(&[n]) = v;
    }
    t
}

/// `S(n,k) = S(n−1,k−1) + k·S(n−1,k)` with `S(0,0) = 1`.
pub fn stirling2(nmax: usize) -> CountTable {
    let mut t = CountTable::zeros(TableKind::Stirling2, nmax);
    *t.at(&[0, 0]) = BigUint::one();
    for n in 1..=nmax {
        for k in 1..=n {
            let v = t.get(&[n - 1, k - 1]) + t.get(&[n - 1, k]) * k;
            *t.at(&[n, k]) = v;
        }
    }
    t
}

/// `b_n = Σ_k S(n,k)`.
pub fn bell(nmax: usize) -> CountTable {
    let s = stirling2(nmax);
    let mut t = CountTable::zeros(TableKind::Bell, nmax);
    for n in 0..=nmax {
        *t.at(&[n]) = s.row_sum(n);
    }
    t
}

/// Coefficients of `q^t`, `t = 1..=⌊(n+1)/2⌋`, of the block-count polynomial of
/// non-crossing merging-free partitions of `[n]`: `C(n−1, 2(t−1))`.
pub fn ncmf_polynomial(n: usize) -> Result<Vec<BigUint>> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            value: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    let c = binomials(n - 1);
    Ok((1..=n.div_ceil(2)).map(|t| choose(&c, n - 1, 2 * (t - 1))).collect())
}

/// [`ncmf_polynomial`] for every `1 ≤ n ≤ nmax`, as `(n, t)` entries.
pub fn ncmf_table(nmax: usize) -> CountTable {
    let mut t = CountTable::zeros(TableKind::Ncmf, nmax);
    for n in 1..=nmax {
        for (i, v) in ncmf_polynomial(n).expect("n >= 1").into_iter().enumerate() {
            *t.at(&[n, i + 1]) = v;
        }
    }
    t
}

/// Builds the table of `kind` up to `nmax`.
pub fn table(kind: TableKind, nmax: usize) -> CountTable {
    match kind {
        TableKind::R => r_table(nmax),
        TableKind::H => h_table(nmax),
        TableKind::A => a_table(nmax),
        TableKind::L => l_sequence(nmax),
        TableKind::Bell => bell(nmax),
        TableKind::Stirling2 => stirling2(nmax),
        TableKind::Ncmf => ncmf_table(nmax),
    }
}

/// Default number of correct decimal digits carried by [`dobinski_estimate`].
pub const DOBINSKI_DIGITS: u32 = 60;

/// An exact rational carrying a stated number of trustworthy decimal digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighPrecision {
    value: BigRational,
    digits: u32,
}

impl HighPrecision {
    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN)
    }

    /// Nearest integer.
    pub fn round(&self) -> BigInt {
        self.value.round().to_integer()
    }

    /// `|self − x|`, exactly.
    pub fn abs_diff(&self, x: &BigRational) -> BigRational {
        (&self.value - x).abs()
    }
}

impl fmt::Display for HighPrecision {
    /// Fixed-point with `digits` decimals, truncated toward zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scale = BigInt::from(10u32).pow(self.digits);
        let scaled = (&self.value * BigRational::from_integer(scale.clone()))
            .trunc()
            .to_integer();
        let sign = if scaled.is_negative() { "-" } else { "" };
        let (int, frac) = scaled.abs().div_rem(&scale);
        write!(
            f,
            "{sign}{int}.{:0>width$}",
            frac.to_string(),
            width = self.digits as usize
        )
    }
}

/// `(1/e)·Σ_{m=0}^{terms−1} m^{n−1}/m!` with [`DOBINSKI_DIGITS`] digits of headroom.
pub fn dobinski_estimate(n: usize, terms: usize) -> Result<HighPrecision> {
    dobinski_estimate_with_digits(n, terms, DOBINSKI_DIGITS)
}

/// As [`dobinski_estimate`], with `1/e` accurate to at least `digits` decimals.
pub fn dobinski_estimate_with_digits(n: usize, terms: usize, digits: u32) -> Result<HighPrecision> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            value: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    if terms == 0 {
        return Err(Error::OutOfRange {
            what: "terms",
            value: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    let mut sum = BigRational::zero();
    let mut factorial = BigInt::one();
    for m in 0..terms {
        if m > 0 {
            factorial *= m;
        }
        let power = BigInt::from(m).pow((n - 1) as u32);
        sum += BigRational::new(power, factorial.clone());
    }
    Ok(HighPrecision {
        value: sum * inverse_e(digits),
        digits,
    })
}

/// Alternating series for `1/e`, truncated once the next term is below `10^-(digits+1)`.
fn inverse_e(digits: u32) -> BigRational {
    let bound = BigInt::from(10u32).pow(digits + 1);
    let mut sum = BigRational::zero();
    let mut factorial = BigInt::one();
    let mut j = 0u32;
    loop {
        if j > 0 {
            factorial *= j;
        }
        let term = BigRational::new(BigInt::one(), factorial.clone());
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        if factorial > bound {
            return sum;
        }
        j += 1;
    }
}
