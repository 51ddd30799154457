use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use super::numeric::{relative_residual, CMatrix};
use super::surd::{SurdMatrix, SurdSum};
use super::{block_order, phi, psi};
use crate::construct::LucasParams;
use crate::exactmat::SquareMatrix;
use crate::radical::Radical;

/// `M = U·diag(σ)·Vᵀ` with every `σ ≥ 0`, columns in block order.
#[derive(Clone, Debug)]
pub struct SingularDecomposition {
    pub u: SurdMatrix,
    pub sigma: Vec<Radical>,
    pub v: SurdMatrix,
    /// `−1` where a column of `U` was negated to make its singular value nonnegative.
    pub column_signs: Vec<i8>,
}

fn sixth(num: i64, radicand: i64) -> SurdSum {
    SurdSum::from_radical(&Radical::normalize(
        BigRational::new(num.into(), 6.into()),
        radicand.into(),
    ))
}

fn table(rows: [[(i64, i64); 3]; 3]) -> SurdMatrix {
    SurdMatrix::from_fn(3, |i, j| sixth(rows[i][j].0, rows[i][j].1))
}

/// Left singular vectors shared by every order-3 Lucas square.
fn left_block() -> SurdMatrix {
    table([
        [(2, 3), (-3, 2), (1, 6)],
        [(2, 3), (0, 1), (-2, 6)],
        [(2, 3), (3, 2), (1, 6)],
    ])
}

/// Right singular vectors shared by every order-3 Lucas square.
fn right_block() -> SurdMatrix {
    table([
        [(2, 3), (-1, 6), (3, 2)],
        [(2, 3), (2, 6), (0, 1)],
        [(2, 3), (-1, 6), (-3, 2)],
    ])
}

fn kron_power(block: &SurdMatrix, level: usize) -> SurdMatrix {
    let mut acc = block.clone();
    for _ in 1..level {
        acc = SurdMatrix::kronecker(block, &acc);
    }
    acc
}

pub fn svd_matrices(params: &LucasParams) -> SingularDecomposition {
    let level = params.level();
    let ones = |k: usize| {
        let n = 3usize.pow(k as u32);
        let mut d = vec![Radical::zero(); n];
        d[0] = Radical::from_integer(n);
        d
    };
    let kron = |a: &[Radical], b: &[Radical]| -> Vec<SurdSum> {
        a.iter()
            .flat_map(|x| b.iter().map(move |y| SurdSum::from_radical(&x.mul(y))))
            .collect()
    };
    // signed diagonal in Kronecker order: Σ_ℓ = Σ_E ⊗ Σ_{ℓ−1} + Σ_L ⊗ Σ_{E, ℓ−1}
    let mut sigma: Vec<Radical> = Vec::new();
    for (i, t) in params.triples().iter().enumerate() {
        let level_diag = vec![
            Radical::from_integer(&t.c * BigInt::from(3)),
            phi(&t.v, &t.y),
            psi(&t.v, &t.y),
        ];
        sigma = if i == 0 {
            level_diag
        } else {
            kron(&ones(1), &sigma)
                .iter()
                .zip(kron(&level_diag, &ones(i)))
                .map(|(a, b)| a.add(&b).as_radical().expect("one nonzero term per slot"))
                .collect()
        };
    }
    let perm = block_order(level);
    let mut u = kron_power(&left_block(), level).permute_columns(&perm);
    let v = kron_power(&right_block(), level).permute_columns(&perm);
    let mut column_signs = vec![1i8; sigma.len()];
    let sigma = perm
        .iter()
        .enumerate()
        .map(|(col, &k)| {
            let s = &sigma[k];
            if s.coeff().is_negative() {
                u.negate_column(col);
                column_signs[col] = -1;
                s.negate()
            } else {
                s.clone()
            }
        })
        .collect();
    SingularDecomposition {
        u,
        sigma,
        v,
        column_signs,
    }
}

/// `U·Σ·Vᵀ = M`, `UᵀU = I` and `VᵀV = I`, all in exact radical arithmetic.
pub fn svd_exact_check(m: &SquareMatrix, dec: &SingularDecomposition) -> bool {
    let n = m.order();
    let recon = dec
        .u
        .matmul(&SurdMatrix::diagonal(&dec.sigma))
        .matmul(&dec.v.transpose());
    recon == SurdMatrix::from_integers(m)
        && dec.u.transpose().matmul(&dec.u) == SurdMatrix::identity(n)
        && dec.v.transpose().matmul(&dec.v) == SurdMatrix::identity(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SvdResiduals {
    /// `‖U·Σ·Vᵀ − M‖_F / ‖M‖_F`
    pub reconstruction: f64,
    /// `‖UᵀU − I‖_F`
    pub u_orthogonality: f64,
    /// `‖VᵀV − I‖_F`
    pub v_orthogonality: f64,
}

pub fn svd_residuals(m: &SquareMatrix, dec: &SingularDecomposition) -> SvdResiduals {
    let n = m.order();
    let mm = CMatrix::from_real(n, &m.to_f64());
    let u = CMatrix::new(n, dec.u.to_complex());
    let v = CMatrix::new(n, dec.v.to_complex());
    let s: Vec<Complex64> = dec.sigma.iter().map(Radical::to_complex).collect();
    let recon = u.matmul(&CMatrix::diagonal(&s)).matmul(&v.transpose());
    let id = CMatrix::identity(n);
    SvdResiduals {
        reconstruction: relative_residual(&recon, &mm, &mm),
        u_orthogonality: u.transpose().matmul(&u).sub(&id).frobenius(),
        v_orthogonality: v.transpose().matmul(&v).sub(&id).frobenius(),
    }
}
