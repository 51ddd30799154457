//! Magic, regular, natural and Frobenius-norm tests for arbitrary integer
//! squares, plus recovery of Lucas parameters.

use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::construct::{level_of_order, lucas, LucasParams, LucasTriple};
use crate::error::{Error, Result};
use crate::exactmat::{serde_int, ExactInt, SquareMatrix};

/// The common line sum when every row, column and both diagonals agree.
pub fn check_magic(m: &SquareMatrix) -> Option<ExactInt> {
    let n = m.order();
    let target = m.trace();
    if m.anti_trace() != target {
        return None;
    }
    let rows_ok = m.rows().all(|r| r.iter().sum::<ExactInt>() == target);
    if !rows_ok {
        return None;
    }
    let mut cols = vec![ExactInt::zero(); n];
    for row in m.rows() {
        for (acc, e) in cols.iter_mut().zip(row) {
            *acc += e;
        }
    }
    cols.iter().all(|c| *c == target).then_some(target)
}

/// Whether every centrosymmetric pair sums to `2μ/n`. Errors on non-magic
/// input; a magic square whose `2μ` is not a multiple of `n` is not regular.
pub fn check_regular(m: &SquareMatrix) -> Result<bool> {
    let mu = check_magic(m).ok_or(Error::NotMagic)?;
    let n = m.order();
    let twice: ExactInt = mu * 2;
    let n_big = ExactInt::from(n);
    if !(&twice % &n_big).is_zero() {
        return Ok(false);
    }
    let pair_sum = twice / n_big;
    Ok((0..n).all(|i| (0..n).all(|j| m.get(i, j) + m.get(n - 1 - i, n - 1 - j) == pair_sum)))
}

/// Whether the elements are exactly `0, 1, …, n²−1`.
pub fn check_natural(m: &SquareMatrix) -> bool {
    let count = m.order() * m.order();
    let mut seen = vec![false; count];
    for e in m.elements() {
        match e.to_usize() {
            Some(k) if k < count && !seen[k] => seen[k] = true,
            _ => return false,
        }
    }
    true
}

/// `n²(n²−1)(2n²−1)/6`, the squared Frobenius norm of any natural square.
pub fn fnc_target(order: usize) -> ExactInt {
    let n2 = ExactInt::from(order) * ExactInt::from(order);
    &n2 * (&n2 - 1) * (&n2 * 2 - 1) / 6
}

pub fn check_fnc(m: &SquareMatrix) -> bool {
    m.frobenius_sq() == fnc_target(m.order())
}

/// The value `Σ(vᵢ² + yᵢ²)` must take for a natural level-`ℓ` Lucas square:
/// `(9^{2ℓ} − 1)/8`.
pub fn fnc_parameter_equation(level: usize) -> ExactInt {
    (ExactInt::from(81).pow(level as u32) - 1) / 8
}

/// Recovers Lucas parameters by peeling off the outermost level and
/// recursing on the centre block, then rebuilds and compares.
///
/// The split of `Σcᵢ` across levels is not determined by the matrix; the
/// result uses `cᵢ = |vᵢ| + |yᵢ|` for every level but the outermost, which
/// takes the remainder. This reproduces natural parameters exactly.
pub fn recover_lucas_params(m: &SquareMatrix) -> Option<LucasParams> {
    let level = level_of_order(m.order())?;
    let mut pairs = Vec::with_capacity(level);
    let (mut row0, mut size) = (0usize, m.order());
    while size >= 3 {
        let k = size / 3;
        let at = |i: usize, j: usize| m.get(row0 + i, row0 + j);
        let centre = at(k, k);
        pairs.push((at(0, 0) - centre, at(0, 2 * k) - centre));
        row0 += k;
        size = k;
    }
    pairs.reverse();
    let c_total = m.get(m.order() / 2, m.order() / 2).clone();
    let mut used = ExactInt::zero();
    let mut triples = Vec::with_capacity(level);
    for (i, (v, y)) in pairs.into_iter().enumerate() {
        let c = if i + 1 < level {
            v.abs() + y.abs()
        } else {
            &c_total - &used
        };
        used += &c;
        triples.push(LucasTriple { c, v, y });
    }
    let params = LucasParams::new(triples).ok()?;
    (lucas(&params) == *m).then_some(params)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub order: usize,
    pub is_magic: bool,
    #[serde(with = "serde_int::option")]
    pub summation_index: Option<ExactInt>,
    pub is_regular: bool,
    #[serde(with = "serde_int")]
    pub frobenius_sq: ExactInt,
    pub fnc_pass: bool,
    pub is_natural: bool,
    pub exact_rank: usize,
    pub lucas_params: Option<LucasParams>,
}

pub fn verify(m: &SquareMatrix) -> VerificationReport {
    let summation_index = check_magic(m);
    let is_regular = summation_index.is_some() && check_regular(m).unwrap_or(false);
    VerificationReport {
        order: m.order(),
        is_magic: summation_index.is_some(),
        summation_index,
        is_regular,
        frobenius_sq: m.frobenius_sq(),
        fnc_pass: check_fnc(m),
        is_natural: check_natural(m),
        exact_rank: m.exact_rank(),
        lucas_params: recover_lucas_params(m),
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::construct::{frierson, lucas3, FriersonParams};

    fn m(rows: &[&[i64]]) -> SquareMatrix {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        SquareMatrix::from_rows(&rows).unwrap()
    }

    fn loshu() -> SquareMatrix {
        lucas3(&4.into(), &3.into(), &1.into())
    }

    fn m5() -> SquareMatrix {
        m(&[
            &[9, 12, 15, 23, 1],
            &[15, 23, 1, 9, 12],
            &[1, 9, 12, 15, 23],
            &[12, 15, 23, 1, 9],
            &[23, 1, 9, 12, 15],
        ])
    }

    fn natural9() -> SquareMatrix {
        lucas(&LucasParams::from_tuples(&[(4, 3, 1), (36, 27, 9)]))
    }

    #[test]
    fn magic_examples() {
        assert_eq!(check_magic(&loshu()), Some(12.into()));
        assert_eq!(check_magic(&SquareMatrix::identity(3)), None);
        assert_eq!(check_magic(&m5()), Some(60.into()));
        assert_eq!(check_magic(&natural9()), Some(360.into()));
        // rows and columns agree but one diagonal does not
        assert_eq!(check_magic(&m(&[&[1, 0], &[0, 1]])), None);
    }

    #[test]
    fn regular_examples() {
        assert!(check_regular(&loshu()).unwrap());
        assert!(check_regular(&natural9()).unwrap());
        let odd = lucas(&LucasParams::from_tuples(&[(5, -2, 7), (-3, 11, 4)]));
        assert!(check_regular(&odd).unwrap());
        assert!(matches!(check_regular(&SquareMatrix::identity(3)), Err(Error::NotMagic)));
        // centrosymmetric pairs of this square all sum to 24 = 2·60/5
        assert!(check_regular(&m5()).unwrap());
    }

    #[test]
    fn regular_needs_divisible_pair_sum() {
        // permutation square with one fixed and one cross-diagonal point: μ = 1, n = 4
        let perm = m(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 1, 0, 0]]);
        assert_eq!(check_magic(&perm), Some(1.into()));
        assert!(!check_regular(&perm).unwrap());
        assert!(check_regular(&SquareMatrix::all_ones(2)).unwrap());
    }

    #[test]
    fn natural_examples() {
        assert!(check_natural(&loshu()));
        assert!(!check_natural(&SquareMatrix::all_ones(3)));
        assert!(!check_natural(&m5()));
        assert!(check_natural(&natural9()));
        assert!(!check_natural(&m(&[&[-1, 0], &[1, 2]])));
        assert!(!check_natural(&m(&[&[0, 1], &[2, 4]])));
    }

    #[test]
    fn fnc_examples() {
        assert_eq!(fnc_target(3), 204.into());
        assert_eq!(fnc_target(5), 4900.into());
        assert!(check_fnc(&m5()));
        assert!(check_fnc(&loshu()));
        assert!(check_fnc(&natural9()));
        for n in 2..6 {
            assert!(!check_fnc(&SquareMatrix::all_ones(n)));
        }
    }

    #[test]
    fn fnc_parameter_values() {
        assert_eq!(fnc_parameter_equation(1), 10.into());
        assert_eq!(fnc_parameter_equation(2), 820.into());
        let direct: i64 = (0..6).map(|i| 9i64.pow(i)).sum();
        assert_eq!(direct, 66430);
        assert_eq!(fnc_parameter_equation(3), direct.into());
    }

    #[test]
    fn fnc_parameter_equation_matches_natural_params() {
        for (level, pairs) in [
            (1, vec![(3, 1)]),
            (2, vec![(3, 1), (27, 9)]),
            (3, vec![(1, 3), (27, 9), (81, 243)]),
        ] {
            let sum: i64 = pairs.iter().map(|&(v, y): &(i64, i64)| v * v + y * y).sum();
            assert_eq!(fnc_parameter_equation(level), sum.into());
            let sq = frierson(&FriersonParams::from_pairs(&pairs).unwrap());
            assert!(check_fnc(&sq));
        }
    }

    #[test]
    fn recovery_examples() {
        assert_eq!(
            recover_lucas_params(&loshu()),
            Some(LucasParams::from_tuples(&[(4, 3, 1)]))
        );
        // E₉ is the member with every vᵢ = yᵢ = 0 and Σcᵢ = 1
        assert_eq!(
            recover_lucas_params(&SquareMatrix::all_ones(9)),
            Some(LucasParams::from_tuples(&[(0, 0, 0), (1, 0, 0)]))
        );
        let mut els = SquareMatrix::all_ones(9).into_elements();
        els[10] = 2.into();
        assert_eq!(recover_lucas_params(&SquareMatrix::new(9, els).unwrap()), None);
        assert_eq!(recover_lucas_params(&SquareMatrix::identity(9)), None);
        assert_eq!(recover_lucas_params(&m5()), None);
        assert_eq!(recover_lucas_params(&SquareMatrix::identity(3)), None);
        let p = LucasParams::from_tuples(&[(4, 3, 1), (36, 27, 9), (324, 243, 81)]);
        assert_eq!(recover_lucas_params(&lucas(&p)), Some(p));
    }

    #[test]
    fn report_for_counterexample() {
        let r = verify(&m5());
        assert!(r.is_magic && r.fnc_pass && !r.is_natural);
        assert_eq!(r.summation_index, Some(60.into()));
        assert_eq!(r.frobenius_sq, 4900.into());
        assert!(r.lucas_params.is_none());
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["summation_index"], 60);
        assert_eq!(json["lucas_params"], serde_json::Value::Null);
    }

    #[test]
    fn report_for_natural_square() {
        let r = verify(&natural9());
        assert!(r.is_magic && r.is_regular && r.fnc_pass && r.is_natural);
        assert_eq!(r.summation_index, Some(360.into()));
        assert_eq!(r.exact_rank, 5);
        assert!(r.lucas_params.is_some());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn magic_and_regular_for_constructed(t in prop::collection::vec((-60i64..=60, -60i64..=60, -60i64..=60), 1..=3)) {
            let p = LucasParams::from_tuples(&t);
            let sq = lucas(&p);
            prop_assert_eq!(check_magic(&sq), Some(p.summation_index()));
            prop_assert!(check_regular(&sq).unwrap());
            // M + R·M·R = (2μ/n)·E
            let n = sq.order();
            let r = SquareMatrix::cross_identity(n);
            let lhs = sq.add(&r.matmul(&sq).unwrap().matmul(&r).unwrap()).unwrap();
            let k = p.summation_index() * 2 / ExactInt::from(n);
            prop_assert_eq!(lhs, SquareMatrix::all_ones(n).scalar_mul(&k));
            // 3^{-ℓ}·tr = Σcᵢ
            prop_assert_eq!(sq.trace() / ExactInt::from(n), p.c_sum());
        }

        #[test]
        fn recovery_round_trips(t in prop::collection::vec((-60i64..=60, -60i64..=60, -60i64..=60), 1..=3)) {
            let p = LucasParams::from_tuples(&t);
            let sq = lucas(&p);
            let got = recover_lucas_params(&sq).expect("family member");
            prop_assert_eq!(lucas(&got), sq);
            for (a, b) in got.triples().iter().zip(p.triples()) {
                prop_assert_eq!(&a.v, &b.v);
                prop_assert_eq!(&a.y, &b.y);
            }
            prop_assert_eq!(got.c_sum(), p.c_sum());
        }

        #[test]
        fn recovery_is_exact_under_abs_convention(t in prop::collection::vec((-60i64..=60, -60i64..=60), 1..=3), extra in -100i64..=100) {
            let mut triples: Vec<(i64, i64, i64)> = t.iter().map(|&(v, y)| (v.abs() + y.abs(), v, y)).collect();
            triples.last_mut().unwrap().0 += extra;
            let p = LucasParams::from_tuples(&triples);
            prop_assert_eq!(recover_lucas_params(&lucas(&p)), Some(p));
        }

        #[test]
        fn frobenius_equals_trace_of_gram(v in prop::collection::vec(-1000i64..=1000, 1..=81)) {
            let n = (v.len() as f64).sqrt() as usize;
            let sq = SquareMatrix::from_fn(n, |i, j| v[i * n + j]);
            prop_assert_eq!(sq.frobenius_sq(), sq.matmul(&sq.transpose()).unwrap().trace());
        }
    }
}
