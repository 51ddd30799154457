use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;

use super::numeric::{relative_residual, CMatrix};
use super::surd::{SurdMatrix, SurdSum};
use super::{block_order, lambda};
use crate::construct::LucasParams;
use crate::error::{Error, Result};
use crate::exactmat::{ExactInt, SquareMatrix};
use crate::radical::Radical;

/// `M = S·diag(d)·S⁻¹`, columns of `S` in block order.
#[derive(Clone, Debug)]
pub struct JordanDecomposition {
    pub s: SurdMatrix,
    pub d: Vec<Radical>,
}

/// `Ω = 3(v+y)/λ(v,y)`. A level with `v = y = 0` is a multiple of `E` and
/// any eigenvector basis works, so it uses `Ω = √3`.
pub fn omega(v: &ExactInt, y: &ExactInt) -> Result<Radical> {
    if v.is_zero() && y.is_zero() {
        return Ok(Radical::sqrt(3));
    }
    let l = lambda(v, y);
    let inv = l.recip().ok_or_else(|| {
        Error::Degenerate(format!("v = ±y ({v}, {y}) leaves no eigenvector basis"))
    })?;
    Ok(inv.mul_int(&((v + y) * 3)))
}

fn eigenvector_block(omega: &Radical) -> SurdMatrix {
    let one = SurdSum::one();
    let w = SurdSum::from_radical(omega);
    let plus = one.add(&w);
    let minus = one.sub(&w);
    let two = SurdSum::from_integer(-2);
    let rows = [
        [one.clone(), plus.clone(), minus.clone()],
        [one.clone(), two.clone(), two],
        [one, minus, plus],
    ];
    SurdMatrix::from_fn(3, |i, j| rows[i][j].clone())
}

fn kron_diag(a: &[Radical], b: &[Radical]) -> Vec<SurdSum> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| SurdSum::from_radical(&x.mul(y))))
        .collect()
}

/// Diagonal of the all-ones matrix of order `3^k` in eigenvector order.
fn ones_diag(k: usize) -> Vec<Radical> {
    let n = 3usize.pow(k as u32);
    let mut d = vec![Radical::zero(); n];
    d[0] = Radical::from_integer(n);
    d
}

pub fn jcf_matrices(params: &LucasParams) -> Result<JordanDecomposition> {
    let mut s: Option<SurdMatrix> = None;
    let mut d: Vec<Radical> = Vec::new();
    for (i, t) in params.triples().iter().enumerate() {
        let block = eigenvector_block(&omega(&t.v, &t.y)?);
        let l = lambda(&t.v, &t.y);
        let level_diag = vec![
            Radical::from_integer(&t.c * BigInt::from(3)),
            l.clone(),
            l.negate(),
        ];
        s = Some(match s {
            None => block,
            Some(inner) => SurdMatrix::kronecker(&block, &inner),
        });
        d = if i == 0 {
            level_diag
        } else {
            // D_{ℓ} = D_E ⊗ D_{ℓ−1} + D_L ⊗ D_{E, ℓ−1}
            kron_diag(&ones_diag(1), &d)
                .iter()
                .zip(kron_diag(&level_diag, &ones_diag(i)))
                .map(|(a, b)| a.add(&b).as_radical().expect("one nonzero term per slot"))
                .collect()
        };
    }
    let s = s.expect("at least one level");
    let perm = block_order(params.level());
    Ok(JordanDecomposition {
        s: s.permute_columns(&perm),
        d: perm.iter().map(|&k| d[k].clone()).collect(),
    })
}

/// `M·S = S·D` in exact radical arithmetic.
pub fn jcf_exact_check(m: &SquareMatrix, dec: &JordanDecomposition) -> bool {
    let mm = SurdMatrix::from_integers(m);
    mm.matmul(&dec.s) == dec.s.matmul(&SurdMatrix::diagonal(&dec.d))
}

/// `‖M·S − S·D‖_F / ‖M‖_F` in complex double precision.
pub fn jcf_residual(m: &SquareMatrix, dec: &JordanDecomposition) -> f64 {
    let n = m.order();
    let mm = CMatrix::from_real(n, &m.to_f64());
    let s = CMatrix::new(n, dec.s.to_complex());
    let d: Vec<Complex64> = dec.d.iter().map(Radical::to_complex).collect();
    relative_residual(&mm.matmul(&s), &s.matmul(&CMatrix::diagonal(&d)), &mm)
}
