use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::construct::{lucas, lucas3, LucasParams};
use crate::error::{Error, Result};
use crate::exactmat::{ExactInt, RationalMatrix, SquareMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PowerMethod {
    ClosedForm,
    /// No closed form beyond level 2; computed by repeated squaring.
    RepeatedMultiplication,
}

#[derive(Clone, Debug)]
pub struct PowerResult {
    pub matrix: SquareMatrix,
    pub method: PowerMethod,
}

fn pow(base: impl Into<ExactInt>, e: u32) -> ExactInt {
    base.into().pow(e)
}

fn combine(terms: &[(ExactInt, SquareMatrix)]) -> SquareMatrix {
    let mut it = terms.iter().map(|(k, m)| m.scalar_mul(k));
    let first = it.next().expect("at least one term");
    it.fold(first, |acc, m| acc.add(&m).expect("same order"))
}

fn level1_power(c: &ExactInt, v: &ExactInt, y: &ExactInt, k: u32) -> SquareMatrix {
    let e = SquareMatrix::all_ones(3);
    let gap = v * v - y * y;
    let tail = (pow(3, k - 1) * c.pow(k), e.clone());
    let head = if k % 2 == 1 {
        let h = (k - 1) / 2;
        let traceless = lucas3(c, v, y).sub(&e.scalar_mul(c)).expect("order 3");
        (pow(3, h) * gap.pow(h), traceless)
    } else {
        let h = k / 2;
        let shape = SquareMatrix::identity(3)
            .scalar_mul(&3.into())
            .sub(&e)
            .expect("order 3");
        (pow(3, h - 1) * gap.pow(h), shape)
    };
    combine(&[head, tail])
}

fn level2_power(params: &LucasParams, k: u32) -> SquareMatrix {
    let [inner, outer] = params.triples() else {
        unreachable!("level 2");
    };
    let e3 = SquareMatrix::all_ones(3);
    let i3 = SquareMatrix::identity(3);
    let e9 = SquareMatrix::all_ones(9);
    let gap_in = &inner.v * &inner.v - &inner.y * &inner.y;
    let gap_out = &outer.v * &outer.v - &outer.y * &outer.y;
    let tail = (pow(9, k - 1) * (&inner.c + &outer.c).pow(k), e9.clone());
    if k % 2 == 1 {
        let h = (k - 1) / 2;
        let a9 = SquareMatrix::kronecker(&e3, &lucas3(&inner.c, &inner.v, &inner.y));
        let b9 = SquareMatrix::kronecker(&lucas3(&outer.c, &outer.v, &outer.y), &e3);
        let scale = pow(27, h);
        combine(&[
            (
                &scale * gap_in.pow(h),
                a9.sub(&e9.scalar_mul(&inner.c)).expect("order 9"),
            ),
            (
                scale * gap_out.pow(h),
                b9.sub(&e9.scalar_mul(&outer.c)).expect("order 9"),
            ),
            tail,
        ])
    } else {
        let h = k / 2;
        let scale = pow(3, 3 * h - 2);
        let three = ExactInt::from(3);
        let shape_in = SquareMatrix::kronecker(&e3, &i3)
            .scalar_mul(&three)
            .sub(&e9)
            .expect("order 9");
        let shape_out = SquareMatrix::kronecker(&i3, &e3)
            .scalar_mul(&three)
            .sub(&e9)
            .expect("order 9");
        combine(&[
            (&scale * gap_in.pow(h), shape_in),
            (scale * gap_out.pow(h), shape_out),
            tail,
        ])
    }
}

/// `lucas(params)^k` for `k ≥ 1`, from the closed forms at levels 1 and 2.
pub fn matrix_power(params: &LucasParams, k: u32) -> Result<PowerResult> {
    if k == 0 {
        return Err(Error::InvalidArgument("power must be at least 1".into()));
    }
    Ok(match params.level() {
        1 => {
            let t = &params.triples()[0];
            PowerResult {
                matrix: level1_power(&t.c, &t.v, &t.y, k),
                method: PowerMethod::ClosedForm,
            }
        }
        2 => PowerResult {
            matrix: level2_power(params, k),
            method: PowerMethod::ClosedForm,
        },
        _ => PowerResult {
            matrix: lucas(params).pow(k),
            method: PowerMethod::RepeatedMultiplication,
        },
    })
}

/// `L₃⁻¹ = (3c·L₃ + (v² − y² − 3c²)·E) / (9c(v² − y²))`.
pub fn lucas3_inverse(c: &ExactInt, v: &ExactInt, y: &ExactInt) -> Result<RationalMatrix> {
    let gap = v * v - y * y;
    if c.is_zero() || gap.is_zero() {
        return Err(Error::Singular(format!(
            "L3({c},{v},{y}) needs c != 0 and v^2 != y^2"
        )));
    }
    let num = lucas3(c, v, y)
        .scalar_mul(&(c * ExactInt::from(3)))
        .add(&SquareMatrix::all_ones(3).scalar_mul(&(&gap - c * c * 3)))
        .expect("order 3");
    let den: ExactInt = c * gap * 9;
    RationalMatrix::new(
        3,
        num.elements()
            .iter()
            .map(|e| BigRational::new(e.clone(), den.clone()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn lp(t: &[(i64, i64, i64)]) -> LucasParams {
        LucasParams::from_tuples(t)
    }

    #[test]
    fn square_of_order3() {
        let p = lp(&[(4, 3, 1)]);
        let got = matrix_power(&p, 2).unwrap();
        assert_eq!(got.method, PowerMethod::ClosedForm);
        let l = lucas(&p);
        assert_eq!(got.matrix, l.matmul(&l).unwrap());
        // 8·(3I − E) + 48·E
        let expect = SquareMatrix::from_fn(3, |i, j| if i == j { 16 + 48 } else { -8 + 48 });
        assert_eq!(got.matrix, expect);
    }

    #[test]
    fn first_power_is_identity_map() {
        for p in [lp(&[(4, 3, 1)]), lp(&[(4, 3, 1), (36, 27, 9)])] {
            assert_eq!(matrix_power(&p, 1).unwrap().matrix, lucas(&p));
        }
    }

    #[test]
    fn cube_of_order9() {
        let p = lp(&[(4, 3, 1), (36, 27, 9)]);
        let l = lucas(&p);
        let cube = l.matmul(&l).unwrap().matmul(&l).unwrap();
        assert_eq!(matrix_power(&p, 3).unwrap().matrix, cube);
    }

    #[test]
    fn level3_falls_back() {
        let p = lp(&[(4, 3, 1), (36, 27, 9), (324, 243, 81)]);
        let got = matrix_power(&p, 2).unwrap();
        assert_eq!(got.method, PowerMethod::RepeatedMultiplication);
        assert_eq!(got.matrix, lucas(&p).pow(2));
        assert!(matrix_power(&p, 0).is_err());
    }

    #[test]
    fn inverse_examples() {
        for (c, v, y) in [(4, 3, 1), (4, 3, -1)] {
            let (c, v, y) = (c.into(), v.into(), y.into());
            let inv = lucas3_inverse(&c, &v, &y).unwrap();
            let l = RationalMatrix::from(&lucas3(&c, &v, &y));
            assert!(l.matmul(&inv).unwrap().is_identity());
            assert!(inv.matmul(&l).unwrap().is_identity());
        }
        let singular = |c: i64, v: i64, y: i64| lucas3_inverse(&c.into(), &v.into(), &y.into());
        assert!(matches!(singular(1, 0, 0), Err(Error::Singular(_))));
        assert!(singular(4, 2, -2).is_err());
        assert!(singular(0, 3, 1).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn level1_closed_form(c in -30i64..=30, v in -30i64..=30, y in -30i64..=30, k in 1u32..=6) {
            let p = lp(&[(c, v, y)]);
            prop_assert_eq!(matrix_power(&p, k).unwrap().matrix, lucas(&p).pow(k));
        }

        #[test]
        fn level2_closed_form(t in prop::collection::vec((-30i64..=30, -30i64..=30, -30i64..=30), 2), k in 1u32..=6) {
            let p = LucasParams::from_tuples(&t);
            prop_assert_eq!(matrix_power(&p, k).unwrap().matrix, lucas(&p).pow(k));
        }
    }
}
