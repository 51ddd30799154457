//! Finite sums `Σ qₖ·√dₖ` over distinct squarefree radicands, closed under
//! multiplication. Eigenvector entries of compound squares are products of
//! per-level entries `1 ± Ω`, which need more than one radical.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::radical::Radical;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SurdSum {
    terms: BTreeMap<BigInt, BigRational>,
}

impl SurdSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::from_radical(&Radical::from_rational(q))
    }

    pub fn from_integer(k: impl Into<BigInt>) -> Self {
        Self::from_radical(&Radical::from_integer(k))
    }

    pub fn from_radical(r: &Radical) -> Self {
        let mut s = Self::zero();
        s.add_term(r);
        s
    }

    fn add_term(&mut self, r: &Radical) {
        if r.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(r.radicand().clone())
            .or_insert_with(BigRational::zero);
        *slot += r.coeff();
        if slot.is_zero() {
            self.terms.remove(r.radicand());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = Radical> + '_ {
        self.terms
            .iter()
            .map(|(d, q)| Radical::normalize(q.clone(), d.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value as a single radical, when it has at most one term.
    pub fn as_radical(&self) -> Option<Radical> {
        match self.terms.len() {
            0 => Some(Radical::zero()),
            1 => self.terms().next(),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for t in other.terms() {
            out.add_term(&t);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(d, q)| (d.clone(), -q)).collect(),
        }
    }

    pub fn mul_radical(&self, r: &Radical) -> Self {
        let mut out = Self::zero();
        for t in self.terms() {
            out.add_term(&t.mul(r));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for a in self.terms() {
            for b in other.terms() {
                out.add_term(&a.mul(&b));
            }
        }
        out
    }

    pub fn to_complex(&self) -> Complex64 {
        self.terms().map(|t| t.to_complex()).sum()
    }
}

impl fmt::Display for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.terms().enumerate() {
            let s = t.to_string();
            if i == 0 {
                f.write_str(&s)?;
            } else if let Some(rest) = s.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {s}")?;
            }
        }
        Ok(())
    }
}

/// Dense square matrix of [`SurdSum`] entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurdMatrix {
    order: usize,
    elements: Vec<SurdSum>,
}

impl SurdMatrix {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> SurdSum) -> Self {
        let mut elements = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                elements.push(f(i, j));
            }
        }
        Self { order, elements }
    }

    pub fn from_integers(m: &crate::exactmat::SquareMatrix) -> Self {
        Self::from_fn(m.order(), |i, j| SurdSum::from_integer(m.get(i, j).clone()))
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| {
            if i == j { SurdSum::one() } else { SurdSum::zero() }
        })
    }

    pub fn diagonal(values: &[Radical]) -> Self {
        Self::from_fn(values.len(), |i, j| {
            if i == j {
                SurdSum::from_radical(&values[i])
            } else {
                SurdSum::zero()
            }
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &SurdSum {
        &self.elements[i * self.order + j]
    }

    pub fn elements(&self) -> &[SurdSum] {
        &self.elements
    }

    pub fn kronecker(a: &Self, b: &Self) -> Self {
        let n = b.order;
        Self::from_fn(a.order * n, |r, c| a.get(r / n, c / n).mul(b.get(r % n, c % n)))
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "order mismatch");
        let n = self.order;
        Self::from_fn(n, |i, j| {
            let mut acc = SurdSum::zero();
            for k in 0..n {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add(&a.mul(b));
                }
            }
            acc
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, |i, j| self.get(j, i).clone())
    }

    /// Reorders columns so that new column `k` is old column `perm[k]`.
    pub fn permute_columns(&self, perm: &[usize]) -> Self {
        Self::from_fn(self.order, |i, j| self.get(i, perm[j]).clone())
    }

    pub fn negate_column(&mut self, col: usize) {
        for i in 0..self.order {
            let e = &mut self.elements[i * self.order + col];
            *e = e.neg();
        }
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.elements.iter().map(SurdSum::to_complex).collect()
    }
}
