//! Exact trivariate power series truncated independently in each variable,
//! used to expand the closed form of `∂A/∂x` where
//! `A(x, y, z) = Σ a_{n,k,r} xⁿ/n! yᵏ zʳ`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Box of exponents `0..=bounds[v]` per variable `x, y, z`; everything outside
/// is dropped by every operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries3 {
    bounds: [usize; 3],
    coeffs: Vec<BigRational>,
}

pub type Exponents = [usize; 3];

impl TruncatedSeries3 {
    pub fn zero(bounds: [usize; 3]) -> Self {
        let len = bounds.iter().map(|b| b + 1).product();
        Self {
            bounds,
            coeffs: vec![BigRational::zero(); len],
        }
    }

    pub fn one(bounds: [usize; 3]) -> Self {
        Self::monomial(bounds, BigRational::one(), [0, 0, 0])
    }

    /// `c·x^i y^j z^l`, or zero if the exponents fall outside the box.
    pub fn monomial(bounds: [usize; 3], c: BigRational, exps: Exponents) -> Self {
        let mut s = Self::zero(bounds);
        if let Some(o) = s.offset(exps) {
            s.coeffs[o] = c;
        }
        s
    }

    pub fn x(bounds: [usize; 3]) -> Self {
        Self::monomial(bounds, BigRational::one(), [1, 0, 0])
    }

    pub fn y(bounds: [usize; 3]) -> Self {
        Self::monomial(bounds, BigRational::one(), [0, 1, 0])
    }

    pub fn z(bounds: [usize; 3]) -> Self {
        Self::monomial(bounds, BigRational::one(), [0, 0, 1])
    }

    /// `e^x = Σ xⁱ/i!` up to the x bound.
    pub fn exp_x(bounds: [usize; 3]) -> Self {
        let mut s = Self::zero(bounds);
        let mut fact = BigInt::one();
        for i in 0..=bounds[0] {
            if i > 0 {
                fact *= i;
            }
            let o = s.offset([i, 0, 0]).expect("inside");
            s.coeffs[o] = BigRational::new(BigInt::one(), fact.clone());
        }
        s
    }

    pub fn bounds(&self) -> [usize; 3] {
        self.bounds
    }

    fn offset(&self, [i, j, l]: Exponents) -> Option<usize> {
        let [nx, ny, nz] = self.bounds;
        (i <= nx && j <= ny && l <= nz).then(|| (i * (ny + 1) + j) * (nz + 1) + l)
    }

    fn exponents(&self, o: usize) -> Exponents {
        let [_, ny, nz] = self.bounds;
        let l = o % (nz + 1);
        let rest = o / (nz + 1);
        [rest / (ny + 1), rest % (ny + 1), l]
    }

    /// Coefficient of `x^i y^j z^l`; zero outside the box.
    pub fn coeff(&self, exps: Exponents) -> BigRational {
        self.offset(exps)
            .map(|o| self.coeffs[o].clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn set_coeff(&mut self, exps: Exponents, c: BigRational) -> Result<()> {
        let o = self.offset(exps).ok_or(Error::OutOfRange {
            what: "exponent",
            value: exps.into_iter().max().unwrap_or(0),
            min: 0,
            max: self.bounds.into_iter().min().unwrap_or(0),
        })?;
        self.coeffs[o] = c;
        Ok(())
    }

    /// Nonzero terms as `(exponents, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (Exponents, &BigRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(o, c)| (self.exponents(o), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_bounds(&self, other: &Self) -> Result<()> {
        if self.bounds == other.bounds {
            Ok(())
        } else {
            Err(Error::BoundMismatch {
                left: self.bounds,
                right: other.bounds,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self {
            bounds: self.bounds,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            bounds: self.bounds,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let mut out = Self::zero(self.bounds);
        let rhs: Vec<(Exponents, &BigRational)> = other.terms().collect();
        for (a, ca) in self.terms() {
            for &(b, cb) in &rhs {
                if let Some(o) = out.offset([a[0] + b[0], a[1] + b[1], a[2] + b[2]]) {
                    out.coeffs[o] += ca * cb;
                }
            }
        }
        Ok(out)
    }

    /// `Σ_{m=0}^{M} sᵐ/m!` with `M = Nx + Ny + Nz`, exact because every power
    /// beyond `M` vanishes in the box when `s` has no constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeff([0, 0, 0]).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order: usize = self.bounds.iter().sum();
        let mut result = Self::one(self.bounds);
        let mut term = Self::one(self.bounds);
        for m in 1..=order {
            term = term.mul(self)?.scale(&BigRational::new(BigInt::one(), BigInt::from(m)));
            if term.is_zero() {
                break;
            }
            result = result.add(&term)?;
        }
        Ok(result)
    }

    /// `∂/∂x`; the top x-degree becomes zero.
    pub fn derivative_x(&self) -> Self {
        let mut out = Self::zero(self.bounds);
        for ([i, j, l], c) in self.terms() {
            if i > 0 {
                let o = out.offset([i - 1, j, l]).expect("inside");
                out.coeffs[o] = c * BigRational::from_integer(BigInt::from(i));
            }
        }
        out
    }

    /// `∫₀ˣ`, dropping whatever leaves the box.
    pub fn integrate_x(&self) -> Self {
        let mut out = Self::zero(self.bounds);
        for ([i, j, l], c) in self.terms() {
            if let Some(o) = out.offset([i + 1, j, l]) {
                out.coeffs[o] = c / BigRational::from_integer(BigInt::from(i + 1));
            }
        }
        out
    }

    /// Substitutes 1 for variable `var` (0 = x, 1 = y, 2 = z); the result has bound 0 there.
    pub fn set_to_one(&self, var: usize) -> Self {
        let mut bounds = self.bounds;
        bounds[var] = 0;
        let mut out = Self::zero(bounds);
        for (mut e, c) in self.terms() {
            e[var] = 0;
            let o = out.offset(e).expect("inside");
            out.coeffs[o] += c;
        }
        out
    }

    /// `m!·[x^m y^j z^l]`.
    pub fn scaled_coeff(&self, [m, j, l]: Exponents) -> BigRational {
        self.coeff([m, j, l]) * BigRational::from_integer(factorial(m))
    }
}

impl fmt::Display for TruncatedSeries3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for ([i, j, l], c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (v, e) in [("x", i), ("y", j), ("z", l)] {
                match e {
                    0 => {}
                    1 => write!(f, "{v}")?,
                    _ => write!(f, "{v}^{e}")?,
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub fn factorial(m: usize) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc * i)
}

fn require_positive(bounds: [usize; 3]) -> Result<()> {
    for b in bounds {
        if b == 0 {
            return Err(Error::OutOfRange {
                what: "series bound",
                value: 0,
                min: 1,
                max: usize::MAX,
            });
        }
    }
    Ok(())
}

/// `∂A/∂x = yz·exp(xz + yz(eˣ − x − 1))`; `m!·[xᵐ yᵏ zʳ]` equals `a_{m+1,k,r}`.
///
/// Through the correspondence with set partitions of `[m]`, `z` marks every
/// block and `y` every block of size at least two, each shifted by one.
/// Setting `z = 1` gives [`bivariate_rhs`].
pub fn egf_rhs(nx: usize, ny: usize, nz: usize) -> Result<TruncatedSeries3> {
    let bounds = [nx, ny, nz];
    require_positive(bounds)?;
    let x = TruncatedSeries3::x(bounds);
    let y = TruncatedSeries3::y(bounds);
    let z = TruncatedSeries3::z(bounds);
    let yz = y.mul(&z)?;
    let non_singleton = TruncatedSeries3::exp_x(bounds)
        .sub(&x)?
        .sub(&TruncatedSeries3::one(bounds))?;
    let arg = x.mul(&z)?.add(&yz.mul(&non_singleton)?)?;
    yz.mul(&arg.exp()?)
}

/// `y·exp(x + y(−x − 1) + y·eˣ)` with z bound 0; `m!·[xᵐ yᵏ]` equals `r_{m+1,k}`.
pub fn bivariate_rhs(nx: usize, ny: usize) -> Result<TruncatedSeries3> {
    require_positive([nx, ny, 1])?;
    let bounds = [nx, ny, 0];
    let x = TruncatedSeries3::x(bounds);
    let y = TruncatedSeries3::y(bounds);
    let x_plus_one = x.add(&TruncatedSeries3::one(bounds))?;
    let arg = x
        .sub(&y.mul(&x_plus_one)?)?
        .add(&y.mul(&TruncatedSeries3::exp_x(bounds))?)?;
    y.mul(&arg.exp()?)
}

/// `m!·[xᵐ] exp(eˣ − 1)` for `m = 0..=nx`: the Bell numbers.
pub fn bell_egf_check(nx: usize) -> Result<Vec<BigInt>> {
    require_positive([nx, 1, 1])?;
    let bounds = [nx, 0, 0];
    let arg = TruncatedSeries3::exp_x(bounds).sub(&TruncatedSeries3::one(bounds))?;
    let s = arg.exp()?;
    Ok((0..=nx)
        .map(|m| {
            let c = s.scaled_coeff([m, 0, 0]);
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect())
}
