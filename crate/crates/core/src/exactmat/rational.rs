use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::SquareMatrix;
use crate::error::{Error, Result};

/// Square matrix of exact rationals, each kept in lowest terms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    order: usize,
    elements: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(order: usize, elements: Vec<BigRational>) -> Result<Self> {
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

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        &self.elements[row * self.order + col]
    }

    pub fn elements(&self) -> &[BigRational] {
        &self.elements
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigRational]> {
        self.elements.chunks(self.order)
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        let n = self.order;
        let mut out = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.elements[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * &other.elements[k * n + j];
                }
            }
        }
        Ok(Self { order: n, elements: out })
    }

    pub fn is_identity(&self) -> bool {
        let n = self.order;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let e = self.get(i, j);
                if i == j { e.is_one() } else { e.is_zero() }
            })
        })
    }
}

impl From<&SquareMatrix> for RationalMatrix {
    fn from(m: &SquareMatrix) -> Self {
        Self {
            order: m.order(),
            elements: m
                .elements()
                .iter()
                .map(|e| BigRational::from_integer(e.clone()))
                .collect(),
        }
    }
}

/// Grid form; non-integral entries are written as `p/q`.
impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
