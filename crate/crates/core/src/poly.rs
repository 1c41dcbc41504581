//! Exact integer polynomial arithmetic for Hilbert numerators.
//!
//! Everything is generic over a primitive signed integer so that callers can
//! trade `i64` for `i128` when coefficients grow. All operations are checked;
//! overflow surfaces as [`Error::Computation`].

use std::fmt::{Debug, Display};

use num_traits::{NumCast, PrimInt, Signed};

use crate::error::{Error, Result};

/// Scalar type for counts and h-vector coefficients.
pub trait Coefficient: PrimInt + Signed + Debug + Display + Send + Sync + 'static {}

impl<T> Coefficient for T where T: PrimInt + Signed + Debug + Display + Send + Sync + 'static {}

fn overflow<T>(what: &str) -> Result<T> {
    Err(Error::Computation(format!("integer overflow in {what}")))
}

pub fn cast<T: Coefficient, U: NumCast + Copy + Display>(v: U) -> Result<T> {
    match T::from(v) {
        Some(t) => Ok(t),
        None => Err(Error::Computation(format!("{v} does not fit the coefficient type"))),
    }
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial<T: Coefficient>(n: u64, k: u64) -> Result<T> {
    if k > n {
        return Ok(T::zero());
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        let num: T = cast(n - i)?;
        let den: T = cast(i + 1)?;
        acc = match acc.checked_mul(&num) {
            Some(v) => v / den,
            None => return overflow("binomial"),
        };
    }
    Ok(acc)
}

pub fn checked_sum<T: Coefficient>(terms: impl IntoIterator<Item = T>) -> Result<T> {
    let mut acc = T::zero();
    for t in terms {
        acc = match acc.checked_add(&t) {
            Some(v) => v,
            None => return overflow("sum"),
        };
    }
    Ok(acc)
}

pub fn poly_mul<T: Coefficient>(a: &[T], b: &[T]) -> Result<Vec<T>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            let term = ai.checked_mul(&bj);
            out[i + j] = match term.and_then(|t| out[i + j].checked_add(&t)) {
                Some(v) => v,
                None => return overflow("polynomial product"),
            };
        }
    }
    Ok(out)
}

/// First `values.len()` coefficients of `(1 - t)^dim · Σ values[k] t^k`.
pub fn numerator_coefficients<T: Coefficient>(values: &[T], dim: usize) -> Result<Vec<T>> {
    let signs: Vec<T> = (0..=dim)
        .map(|i| {
            let c: T = binomial(dim as u64, i as u64)?;
            Ok(if i % 2 == 0 { c } else { -c })
        })
        .collect::<Result<_>>()?;
    (0..values.len())
        .map(|j| {
            let terms = (0..=j.min(dim)).map(|i| signs[i].checked_mul(&values[j - i]));
            let terms: Option<Vec<T>> = terms.collect();
            match terms {
                Some(ts) => checked_sum(ts),
                None => overflow("binomial transform"),
            }
        })
        .collect()
}

/// h-polynomial of a graded ring together with its Krull dimension `D`:
/// the Hilbert series is `h(t) / (1 - t)^D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HPolynomial<T> {
    coefficients: Vec<T>,
    krull_dim: usize,
}

impl<T: Coefficient> HPolynomial<T> {
    /// Trailing zero coefficients are trimmed; `h_0 = 1` and non-negativity
    /// are checked.
    pub fn new(mut coefficients: Vec<T>, krull_dim: usize) -> Result<Self> {
        while coefficients.len() > 1 && coefficients.last() == Some(&T::zero()) {
            coefficients.pop();
        }
        if coefficients.first() != Some(&T::one()) {
            return Err(Error::Computation(format!(
                "h-vector must start with 1, got {coefficients:?}"
            )));
        }
        if coefficients.iter().any(|c| c.is_negative()) {
            return Err(Error::Computation(format!(
                "negative h-vector coefficient in {coefficients:?}"
            )));
        }
        Ok(HPolynomial {
            coefficients,
            krull_dim,
        })
    }

    /// The polynomial ring on zero generators: `h = 1`, dimension 0.
    pub fn one() -> Self {
        HPolynomial {
            coefficients: vec![T::one()],
            krull_dim: 0,
        }
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coefficients
    }

    pub fn krull_dim(&self) -> usize {
        self.krull_dim
    }

    /// `s`, the degree of the numerator.
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `h_i`, zero outside `0..=s`.
    pub fn get(&self, i: usize) -> T {
        self.coefficients.get(i).copied().unwrap_or_else(T::zero)
    }

    /// `h_s`.
    pub fn leading(&self) -> T {
        self.coefficients[self.degree()]
    }

    /// `h_{s-1}`; `None` when `s = 0`.
    pub fn next_to_leading(&self) -> Option<T> {
        self.degree().checked_sub(1).map(|i| self.coefficients[i])
    }

    pub fn is_palindromic(&self) -> bool {
        self.coefficients.iter().eq(self.coefficients.iter().rev())
    }

    /// Tensor product of graded rings: numerators multiply, dimensions add.
    pub fn product(&self, other: &Self) -> Result<Self> {
        Ok(HPolynomial {
            coefficients: poly_mul(&self.coefficients, &other.coefficients)?,
            krull_dim: self.krull_dim + other.krull_dim,
        })
    }

    /// `dim R_k` recovered from the numerator.
    pub fn hilbert_value(&self, k: usize) -> Result<T> {
        if self.krull_dim == 0 {
            return Ok(self.get(k));
        }
        let terms = (0..=self.degree().min(k)).map(|i| {
            let c: T = binomial((k - i + self.krull_dim - 1) as u64, (self.krull_dim - 1) as u64)?;
            self.coefficients[i]
                .checked_mul(&c)
                .ok_or_else(|| Error::Computation("integer overflow in Hilbert value".into()))
        });
        checked_sum(terms.collect::<Result<Vec<T>>>()?)
    }

    /// Number of interior lattice points of `kP` (`k ≥ 1`) read off the
    /// reciprocal series `t^D h(1/t) / (1 - t)^D`.
    pub fn interior_count(&self, k: usize) -> Result<T> {
        let d = self.krull_dim;
        if k == 0 || d == 0 {
            return Ok(T::zero());
        }
        // h_i contributes at t^{D-i} times Σ_j C(j + D - 1, D - 1) t^j
        let terms = (0..=self.degree()).filter(|&i| k + i >= d).map(|i| {
            let j = k + i - d;
            let c: T = binomial((j + d - 1) as u64, (d - 1) as u64)?;
            self.coefficients[i]
                .checked_mul(&c)
                .ok_or_else(|| Error::Computation("integer overflow in reciprocity".into()))
        });
        checked_sum(terms.collect::<Result<Vec<T>>>()?)
    }

    pub fn convert<U: Coefficient>(&self) -> Result<HPolynomial<U>> {
        Ok(HPolynomial {
            coefficients: self.coefficients.iter().map(|&c| cast(c)).collect::<Result<_>>()?,
            krull_dim: self.krull_dim,
        })
    }
}
