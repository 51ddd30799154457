//! Double-precision complex matrices, used only to measure reconstruction
//! residuals of the exact decompositions.

use num_complex::Complex64;

#[derive(Clone, Debug)]
pub struct CMatrix {
    order: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn new(order: usize, data: Vec<Complex64>) -> Self {
        assert_eq!(data.len(), order * order, "element count");
        Self { order, data }
    }

    pub fn from_real(order: usize, data: &[f64]) -> Self {
        Self::new(order, data.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn identity(order: usize) -> Self {
        let mut data = vec![Complex64::new(0.0, 0.0); order * order];
        for i in 0..order {
            data[i * order + i] = Complex64::new(1.0, 0.0);
        }
        Self { order, data }
    }

    pub fn diagonal(values: &[Complex64]) -> Self {
        let n = values.len();
        let mut m = Self::new(n, vec![Complex64::new(0.0, 0.0); n * n]);
        for (i, v) in values.iter().enumerate() {
            m.data[i * n + i] = *v;
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn matmul(&self, other: &Self) -> Self {
        let n = self.order;
        assert_eq!(n, other.order, "order mismatch");
        let mut out = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        Self::new(n, out)
    }

    /// Plain transpose, no conjugation.
    pub fn transpose(&self) -> Self {
        let n = self.order;
        let mut out = self.data.clone();
        for i in 0..n {
            for j in 0..n {
                out[j * n + i] = self.data[i * n + j];
            }
        }
        Self::new(n, out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(
            self.order,
            self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        )
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// `‖a − b‖_F / ‖scale‖_F`, or the absolute difference when `scale` is zero.
pub fn relative_residual(a: &CMatrix, b: &CMatrix, scale: &CMatrix) -> f64 {
    let diff = a.sub(b).frobenius();
    let s = scale.frobenius();
    if s == 0.0 { diff } else { diff / s }
}
