//! Dense square matrices over arbitrary-precision integers.
//!
//! Every matrix is immutable once built; all operations return new values,
//! so matrices can be shared freely between threads.

mod rank;
mod rational;
pub mod serde_int;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use rational::RationalMatrix;

/// Arbitrary-precision signed integer used for every matrix element.
pub type ExactInt = BigInt;

/// Square matrix of [`ExactInt`] stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    order: usize,
    elements: Vec<ExactInt>,
}

impl SquareMatrix {
    pub fn new(order: usize, elements: Vec<ExactInt>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyMatrix);
        }
        if elements.len() != order * order {
            return Err(Error::ElementCount {
                order,
                expected: order * order,
                found: elements.len(),
            });
        }
        Ok(Self { order, elements })
    }

    /// Builds a matrix from `f(row, col)`. Panics if `order` is zero.
    pub fn from_fn<T: Into<ExactInt>>(order: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(order > 0, "matrix order must be positive");
        let mut elements = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                elements.push(f(i, j).into());
            }
        }
        Self { order, elements }
    }

    pub fn from_rows<T: Into<ExactInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut elements = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(Error::ElementCount {
                    order,
                    expected: order,
                    found: row.len(),
                });
            }
            elements.extend(row.iter().cloned().map(Into::into));
        }
        Ok(Self { order, elements })
    }

    pub fn zeros(order: usize) -> Self {
        Self::from_fn(order, |_, _| 0)
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| i32::from(i == j))
    }

    /// The all-ones matrix `E_n`.
    pub fn all_ones(order: usize) -> Self {
        Self::from_fn(order, |_, _| 1)
    }

    /// `R_n`: ones on the cross (anti-) diagonal, zeros elsewhere.
    pub fn cross_identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| i32::from(i + j == order - 1))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> &ExactInt {
        &self.elements[row * self.order + col]
    }

    pub fn elements(&self) -> &[ExactInt] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<ExactInt> {
        self.elements
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ExactInt]> {
        self.elements.chunks(self.order)
    }

    pub fn is_zero(&self) -> bool {
        self.elements.iter().all(Zero::is_zero)
    }

    fn check_same_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        let elements = self
            .elements
            .iter()
            .zip(&other.elements)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { order: self.order, elements })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        let elements = self
            .elements
            .iter()
            .zip(&other.elements)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self { order: self.order, elements })
    }

    pub fn scalar_mul(&self, k: &ExactInt) -> Self {
        Self {
            order: self.order,
            elements: self.elements.iter().map(|e| e * k).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            order: self.order,
            elements: self.elements.iter().map(|e| -e).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        let n = self.order;
        let mut elements = vec![ExactInt::zero(); n * n];
        for i in 0..n {
            let out = &mut elements[i * n..(i + 1) * n];
            for k in 0..n {
                let a = &self.elements[i * n + k];
                if a.is_zero() {
                    continue;
                }
                let row = &other.elements[k * n..(k + 1) * n];
                for (o, b) in out.iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        Ok(Self { order: n, elements })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> ExactInt {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// Sum of the cross diagonal, equal to `tr(R·M)`.
    pub fn anti_trace(&self) -> ExactInt {
        let n = self.order;
        (0..n).map(|i| self.get(i, n - 1 - i)).sum()
    }

    /// Block `(i, j)` of the result is `a[i, j] · b`.
    pub fn kronecker(a: &Self, b: &Self) -> Self {
        let (m, n) = (a.order, b.order);
        Self::from_fn(m * n, |r, c| a.get(r / n, c / n) * b.get(r % n, c % n))
    }

    /// `AB − BA`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.matmul(other)?.sub(&other.matmul(self)?)
    }

    /// Squared Frobenius norm: the sum of the squares of all elements.
    pub fn frobenius_sq(&self) -> ExactInt {
        self.elements.iter().map(|e| e * e).sum()
    }

    /// Rank over the rationals.
    pub fn exact_rank(&self) -> usize {
        rank::bareiss_rank(self)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::identity(self.order);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.matmul(&base).expect("same order");
            }
            e >>= 1;
            if e > 0 {
                base = base.matmul(&base).expect("same order");
            }
        }
        result
    }

    pub fn max_abs(&self) -> ExactInt {
        self.elements
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(ExactInt::zero)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.elements
            .iter()
            .map(|e| e.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Row-major lexicographic comparison.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.elements.cmp(&other.elements))
    }

    pub fn is_one(&self) -> bool {
        (0..self.order).all(|i| {
            (0..self.order).all(|j| {
                let e = self.get(i, j);
                if i == j { e.is_one() } else { e.is_zero() }
            })
        })
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SquareMatrix({})", self.order)?;
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", line.join(", "))?;
        }
        Ok(())
    }
}

/// Shared text grid: one row per line, elements separated by single spaces.
impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let mut first = true;
            for e in row {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{e}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
