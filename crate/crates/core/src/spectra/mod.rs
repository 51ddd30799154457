//! Closed-form spectra of compound Lucas squares: eigenvalues, singular
//! values, the Jordan and singular value decompositions, matrix powers and
//! the order-3 inverse.

mod jcf;
pub mod numeric;
mod power;
mod surd;
mod svd;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::construct::{lucas, LucasParams};
use crate::exactmat::{serde_int, ExactInt};
use crate::radical::Radical;

pub use jcf::{jcf_exact_check, jcf_matrices, jcf_residual, omega, JordanDecomposition};
pub use power::{lucas3_inverse, matrix_power, PowerMethod, PowerResult};
pub use surd::{SurdMatrix, SurdSum};
pub use svd::{
    svd_exact_check, svd_matrices, svd_residuals, SingularDecomposition, SvdResiduals,
};

/// `3^{ℓ−1}`, the factor every per-level value picks up from the other levels.
fn level_scale(level: usize) -> BigInt {
    BigInt::from(3).pow(level as u32 - 1)
}

/// `√(3(v² − y²))`; imaginary when `y² > v²`.
pub fn lambda(v: &ExactInt, y: &ExactInt) -> Radical {
    Radical::sqrt((v * v - y * y) * 3)
}

/// `√3·(v + y)`.
pub fn phi(v: &ExactInt, y: &ExactInt) -> Radical {
    Radical::new(v + y, 3)
}

/// `√3·(v − y)`.
pub fn psi(v: &ExactInt, y: &ExactInt) -> Radical {
    Radical::new(v - y, 3)
}

/// Column order that puts the Kronecker-indexed diagonal into block order:
/// index 0, then `3^{i−1}` and `2·3^{i−1}` for each level, then the rest.
pub fn block_order(level: usize) -> Vec<usize> {
    let n = 3usize.pow(level as u32);
    let mut order = vec![0];
    for i in 0..level {
        let k = 3usize.pow(i as u32);
        order.extend([k, 2 * k]);
    }
    let mut used = vec![false; n];
    for &k in &order {
        used[k] = true;
    }
    order.extend((0..n).filter(|&k| !used[k]));
    order
}

/// `μ`, then `±3^{ℓ−1}λᵢ` for each level, then zeros.
pub fn eigenvalues(params: &LucasParams) -> Vec<Radical> {
    let scale = level_scale(params.level());
    let mut out = vec![Radical::from_integer(params.summation_index())];
    for t in params.triples() {
        let l = lambda(&t.v, &t.y).mul_int(&scale);
        out.push(l.clone());
        out.push(l.negate());
    }
    out.resize(params.order(), Radical::zero());
    out
}

/// `|μ|`, then `3^{ℓ−1}|φᵢ|` and `3^{ℓ−1}|ψᵢ|` for each level, then zeros.
pub fn singular_values(params: &LucasParams) -> Vec<Radical> {
    let scale = level_scale(params.level());
    let mut out = vec![Radical::from_integer(params.summation_index()).abs()];
    for t in params.triples() {
        out.push(phi(&t.v, &t.y).mul_int(&scale).abs());
        out.push(psi(&t.v, &t.y).mul_int(&scale).abs());
    }
    out.resize(params.order(), Radical::zero());
    out
}

/// Values sorted by decreasing magnitude (imaginary values by `|·|`).
pub fn sorted_by_magnitude(values: &[Radical]) -> Vec<Radical> {
    let mut out = values.to_vec();
    out.sort_by(|a, b| {
        b.magnitude()
            .compare_magnitude(&a.magnitude())
            .unwrap_or(Ordering::Equal)
            .then_with(|| b.coeff().cmp(a.coeff()))
    });
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub order: usize,
    #[serde(with = "serde_int")]
    pub mu: ExactInt,
    pub eigenvalues: Vec<Radical>,
    pub singular_values: Vec<Radical>,
    pub rank: usize,
    /// `None` when the Jordan decomposition is refused (some `vᵢ = ±yᵢ ≠ 0`).
    pub jcf_residual: Option<f64>,
    pub svd_residual: f64,
    pub u_orthogonality: f64,
    pub v_orthogonality: f64,
}

pub fn spectrum_report(params: &LucasParams) -> SpectrumReport {
    let m = lucas(params);
    let singular = singular_values(params);
    let jcf_residual = jcf_matrices(params).ok().map(|d| jcf_residual(&m, &d));
    let res = svd_residuals(&m, &svd_matrices(params));
    SpectrumReport {
        order: params.order(),
        mu: params.summation_index(),
        eigenvalues: eigenvalues(params),
        rank: singular.iter().filter(|s| !s.is_zero()).count(),
        singular_values: singular,
        jcf_residual,
        svd_residual: res.reconstruction,
        u_orthogonality: res.u_orthogonality,
        v_orthogonality: res.v_orthogonality,
    }
}

/// The per-level spectral columns used for side-by-side comparison:
/// `|λᵢ|` for each level and the nonzero `σ/√3` after `μ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralRow {
    pub eigenvalue_magnitudes: Vec<Radical>,
    #[serde(serialize_with = "serialize_rationals")]
    pub sigma_over_sqrt3: Vec<BigRational>,
}

fn serialize_rationals<S: serde::Serializer>(
    v: &[BigRational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|q| q.to_string()))
}

pub fn spectral_row(params: &LucasParams) -> SpectralRow {
    let ev = eigenvalues(params);
    let sv = singular_values(params);
    let level = params.level();
    SpectralRow {
        eigenvalue_magnitudes: (0..level).map(|i| ev[1 + 2 * i].magnitude()).collect(),
        sigma_over_sqrt3: sv[1..=2 * level]
            .iter()
            .map(|s| {
                s.div_sqrt(3)
                    .as_rational()
                    .cloned()
                    .unwrap_or_else(BigRational::zero)
            })
            .collect(),
    }
}
