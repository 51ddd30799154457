//! Natural compound Lucas and Frierson squares: parameter assignments,
//! phase-canonical deduplication, Frobenius-norm searches and censuses.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::construct::{
    apply_to_params, canonical_phase_of_elements, lucas, FriersonParams, LucasParams, LucasTriple,
};
use crate::error::{Error, Result};
use crate::exactmat::{serde_int, ExactInt};
use crate::spectra::{singular_values, sorted_by_magnitude};
use crate::verify::{check_magic, check_natural, check_regular, fnc_parameter_equation};

/// Largest level enumerated square by square unless overridden.
pub const DEFAULT_CEILING: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Lucas,
    Frierson,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lucas" => Ok(Family::Lucas),
            "frierson" => Ok(Family::Frierson),
            other => Err(Error::InvalidArgument(format!("unknown family {other:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Lucas => "lucas",
            Family::Frierson => "frierson",
        })
    }
}

fn factorial(n: u64) -> ExactInt {
    (1..=n).map(ExactInt::from).product()
}

fn double_factorial_odd(level: usize) -> ExactInt {
    (1..=level as u64).map(|k| ExactInt::from(2 * k - 1)).product()
}

fn params_from_values(values: &[i64]) -> LucasParams {
    let triples = values
        .chunks(2)
        .map(|p| LucasTriple::new(p[0].abs() + p[1].abs(), p[0], p[1]))
        .collect();
    LucasParams::new(triples).expect("at least one level")
}

/// Every assignment of `±3⁰, …, ±3^{2ℓ−1}` to `(v₁, y₁, …, v_ℓ, y_ℓ)` with
/// `cᵢ = |vᵢ| + |yᵢ|`. Frierson assignments use positive values only.
pub fn natural_parameter_assignments(
    level: usize,
    family: Family,
) -> impl Iterator<Item = LucasParams> {
    assert!((1..=19).contains(&level), "level out of range");
    let powers: Vec<i64> = (0..2 * level as u32).map(|k| 3i64.pow(k)).collect();
    let sign_patterns: u64 = match family {
        Family::Lucas => 1 << (2 * level),
        Family::Frierson => 1,
    };
    powers
        .clone()
        .into_iter()
        .permutations(powers.len())
        .flat_map(move |perm| {
            (0..sign_patterns).map(move |mask| {
                let signed: Vec<i64> = perm
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x })
                    .collect();
                params_from_values(&signed)
            })
        })
}

/// `4^ℓ·(2ℓ)!` for Lucas, `(2ℓ)!` for Frierson.
pub fn total_assignments(level: usize, family: Family) -> ExactInt {
    let perms = factorial(2 * level as u64);
    match family {
        Family::Lucas => perms * ExactInt::from(4).pow(level as u32),
        Family::Frierson => perms,
    }
}

/// Fundamental count from the closed formula: Lucas phases come in orbits
/// of 8, Frierson squares in pairs `{F, F·R}`.
pub fn fundamental_formula(level: usize, family: Family) -> ExactInt {
    total_assignments(level, family)
        / ExactInt::from(match family {
            Family::Lucas => 8,
            Family::Frierson => 2,
        })
}

/// The alternative Frierson count `(2ℓ)!/2^ℓ`, which also identifies the
/// squares obtained by exchanging `vᵢ` and `yᵢ` level by level.
pub fn frierson_alternate_count(level: usize) -> ExactInt {
    factorial(2 * level as u64) / ExactInt::from(2).pow(level as u32)
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationResult {
    pub level: usize,
    pub family: Family,
    #[serde(with = "serde_int")]
    pub total_assignments: ExactInt,
    #[serde(with = "serde_int")]
    pub fundamental_count: ExactInt,
    #[serde(with = "serde_int")]
    pub formula_count: ExactInt,
    /// Whether `fundamental_count` comes from square-by-square deduplication.
    pub materialized: bool,
    pub representatives: Option<Vec<LucasParams>>,
    #[serde(with = "serde_int")]
    pub sv_class_count: ExactInt,
    #[serde(with = "serde_int::option")]
    pub alternate_frierson_count: Option<ExactInt>,
}

#[derive(Clone, Copy, Debug)]
pub struct EnumerateOptions {
    /// Keep the representative parameters in the result.
    pub emit: bool,
    /// Highest level enumerated square by square.
    pub ceiling: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self {
            emit: false,
            ceiling: DEFAULT_CEILING,
        }
    }
}

/// Row-major elements of a natural square as machine integers, for the
/// phase comparison in the enumeration hot loop.
fn small_elements(params: &LucasParams) -> Vec<i64> {
    let tables: Vec<[[i64; 3]; 3]> = params
        .triples()
        .iter()
        .map(|t| {
            let (c, v, y) = (
                t.c.to_i64().expect("natural parameters fit"),
                t.v.to_i64().expect("natural parameters fit"),
                t.y.to_i64().expect("natural parameters fit"),
            );
            [
                [c + v, c - v - y, c + y],
                [c - v + y, c, c + v - y],
                [c - y, c + v + y, c - v],
            ]
        })
        .collect();
    let n = params.order();
    let mut out = Vec::with_capacity(n * n);
    for r in 0..n {
        for s in 0..n {
            let (mut r, mut s, mut acc) = (r, s, 0i64);
            for t in &tables {
                acc += t[r % 3][s % 3];
                r /= 3;
                s /= 3;
            }
            out.push(acc);
        }
    }
    out
}

/// Canonical parameters: those of the lexicographically smallest phase.
fn canonical_key(params: &LucasParams) -> LucasParams {
    let els = small_elements(params);
    apply_to_params(params, canonical_phase_of_elements(params.order(), &els))
}

/// The Frierson member of `{F, F·R}` whose matrix is lexicographically smaller.
fn frierson_representative(params: &LucasParams) -> LucasParams {
    let fr = params.as_frierson().expect("Frierson assignment");
    let other = fr.swapped().to_lucas();
    if small_elements(&other) < small_elements(params) {
        other
    } else {
        params.clone()
    }
}

/// Deduplicates natural squares up to phase. Above the ceiling, counts come
/// from the closed formulas and emitting representatives is refused.
pub fn enumerate_fundamental(
    level: usize,
    family: Family,
    options: EnumerateOptions,
) -> Result<EnumerationResult> {
    if level == 0 {
        return Err(Error::InvalidArgument("level must be at least 1".into()));
    }
    let formula_count = fundamental_formula(level, family);
    let alternate = (family == Family::Frierson).then(|| frierson_alternate_count(level));
    if level > options.ceiling {
        if options.emit {
            return Err(Error::CeilingExceeded {
                level,
                ceiling: options.ceiling,
            });
        }
        return Ok(EnumerationResult {
            level,
            family,
            total_assignments: total_assignments(level, family),
            fundamental_count: formula_count.clone(),
            formula_count,
            materialized: false,
            representatives: None,
            sv_class_count: sv_class_count(level),
            alternate_frierson_count: alternate,
        });
    }
    let mut classes: BTreeMap<LucasParams, LucasParams> = BTreeMap::new();
    let mut total = 0u64;
    for p in natural_parameter_assignments(level, family) {
        total += 1;
        let key = canonical_key(&p);
        if let std::collections::btree_map::Entry::Vacant(slot) = classes.entry(key) {
            let rep = match family {
                Family::Lucas => slot.key().clone(),
                Family::Frierson => frierson_representative(&p),
            };
            slot.insert(rep);
        }
    }
    let mut reps: Vec<LucasParams> = classes.into_values().collect();
    reps.sort();
    let sv_classes = count_sv_classes(&reps);
    Ok(EnumerationResult {
        level,
        family,
        total_assignments: total.into(),
        fundamental_count: reps.len().into(),
        formula_count,
        materialized: true,
        representatives: options.emit.then_some(reps),
        sv_class_count: sv_classes.into(),
        alternate_frierson_count: alternate,
    })
}

fn count_sv_classes(reps: &[LucasParams]) -> usize {
    reps.iter()
        .map(|p| sorted_by_magnitude(&singular_values(p)))
        .collect::<HashSet<_>>()
        .len()
}

/// `(2ℓ−1)!!`.
pub fn sv_class_count(level: usize) -> ExactInt {
    double_factorial_odd(level)
}

/// Distinct singular-value multisets over the materialized Frierson
/// fundamentals.
pub fn materialized_sv_class_count(level: usize, ceiling: usize) -> Result<usize> {
    let res = enumerate_fundamental(level, Family::Frierson, EnumerateOptions { emit: true, ceiling })?;
    Ok(count_sv_classes(res.representatives.as_deref().unwrap_or_default()))
}

/// Ascending tuples of positive integers with the given count and sum of
/// squares, optionally also a fixed plain sum, optionally all distinct.
fn square_sum_search(count: usize, sq_target: u64, sum_target: Option<u64>, distinct: bool) -> Vec<Vec<u64>> {
    fn go(
        rest: usize,
        min: u64,
        sq_left: u64,
        sum_left: Option<u64>,
        distinct: bool,
        prefix: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if rest == 0 {
            if sq_left == 0 && sum_left.is_none_or(|s| s == 0) {
                out.push(prefix.clone());
            }
            return;
        }
        let mut x = min;
        // the remaining `rest` values are all ≥ x
        while x * x * rest as u64 <= sq_left {
            if sum_left.is_some_and(|s| x * rest as u64 > s) {
                break;
            }
            prefix.push(x);
            let next = if distinct { x + 1 } else { x };
            go(
                rest - 1,
                next,
                sq_left - x * x,
                sum_left.map(|s| s - x),
                distinct,
                prefix,
                out,
            );
            prefix.pop();
            x += 1;
        }
    }
    let mut out = Vec::new();
    go(count, 1, sq_target, sum_target, distinct, &mut Vec::new(), &mut out);
    out
}

/// Multisets of `2ℓ` distinct positive integers whose squares sum to
/// `(9^{2ℓ}−1)/8`, the squared-norm equation on the parameters. At level 2
/// this admits nine solutions besides `{1, 3, 9, 27}`; see
/// [`fnc_natural_solutions`] for the search that also fixes the plain sum.
pub fn fnc_integer_solutions(level: usize) -> Vec<Vec<u64>> {
    fnc_norm_solutions(level, true)
}

/// Positive solutions of the squared-norm equation, optionally distinct.
pub fn fnc_norm_solutions(level: usize, distinct: bool) -> Vec<Vec<u64>> {
    let sq = fnc_parameter_equation(level).to_u64().expect("level in range");
    square_sum_search(2 * level, sq, None, distinct)
}

/// Distinct positive solutions of the squared-norm equation that also satisfy
/// `Σ(|vᵢ| + |yᵢ|) = (9^ℓ−1)/2`. A natural square needs both: its smallest
/// element `Σcᵢ − Σ(|vᵢ| + |yᵢ|)` is zero and its centre `Σcᵢ` is the
/// median `(9^ℓ−1)/2`. Unique at levels 1 and 2 only; level 3 already has
/// many solutions.
pub fn fnc_natural_solutions(level: usize) -> Vec<Vec<u64>> {
    let sq = fnc_parameter_equation(level).to_u64().expect("level in range");
    let sum = (9u64.pow(level as u32) - 1) / 2;
    square_sum_search(2 * level, sq, Some(sum), true)
}

/// Whether every element of the constructed square is distinct.
pub fn duplicate_element_check(params: &LucasParams) -> bool {
    let m = lucas(params);
    let mut seen = HashSet::with_capacity(m.elements().len());
    m.elements().iter().all(|e| seen.insert(e))
}

/// `(a, b)` with `L₃(c,v,y)[r][s] = c + a·v + b·y`.
const LUCAS3_COEFFS: [[(i8, i8); 3]; 3] = [
    [(1, 0), (-1, -1), (0, 1)],
    [(-1, 1), (0, 0), (1, -1)],
    [(0, -1), (1, 1), (-1, 0)],
];

/// `|x| = 3^k`.
fn ternary_exponent(x: &ExactInt) -> Option<u32> {
    let mut x = x.abs();
    let three = ExactInt::from(3);
    let mut k = 0;
    while x > ExactInt::one() {
        if !(&x % &three).is_zero() {
            return None;
        }
        x /= &three;
        k += 1;
    }
    x.is_one().then_some(k)
}

/// Whether a balanced digit combination can only vanish with all digits
/// zero. For `|dₖ| ≤ 2` it always holds: the lowest digit must be `0 mod 3`.
fn balanced_digits_vanish_only_trivially(digits: &BTreeMap<u32, i8>) -> bool {
    let value: i128 = digits
        .iter()
        .map(|(&k, &d)| i128::from(d) * 3i128.pow(k))
        .sum();
    if value != 0 {
        return true;
    }
    let top = digits.keys().copied().max().unwrap_or(0);
    (0..=top).all(|k| digits.get(&k).copied().unwrap_or(0) == 0)
}

/// Executes the distinctness argument for parameters whose `|vᵢ|, |yᵢ|` are
/// distinct powers of 3: each cell is `Σcᵢ + Σ eₖ·3^k` with signed ternary
/// digits `eₖ ∈ {−1, 0, 1}`, distinct cells have distinct digit vectors, and
/// a difference of two such vectors (digits in `[−2, 2]`) never sums to zero.
/// Returns `None` when the parameters are not of that form.
pub fn ternary_distinctness_argument(params: &LucasParams) -> Option<bool> {
    let mut exps = Vec::with_capacity(2 * params.level());
    for t in params.triples() {
        exps.push((ternary_exponent(&t.v)?, t.v.is_negative()));
        exps.push((ternary_exponent(&t.y)?, t.y.is_negative()));
    }
    if exps.iter().map(|e| e.0).collect::<HashSet<_>>().len() != exps.len() {
        return None;
    }
    let n = params.order();
    let mut vectors: Vec<BTreeMap<u32, i8>> = Vec::with_capacity(n * n);
    for r in 0..n {
        for s in 0..n {
            let (mut r, mut s) = (r, s);
            let mut digits = BTreeMap::new();
            for lvl in 0..params.level() {
                let (a, b) = LUCAS3_COEFFS[r % 3][s % 3];
                let (kv, nv) = exps[2 * lvl];
                let (ky, ny) = exps[2 * lvl + 1];
                digits.insert(kv, if nv { -a } else { a });
                digits.insert(ky, if ny { -b } else { b });
                r /= 3;
                s /= 3;
            }
            vectors.push(digits);
        }
    }
    if vectors.iter().collect::<HashSet<_>>().len() != vectors.len() {
        return Some(false);
    }
    for (i, a) in vectors.iter().enumerate() {
        for b in &vectors[i + 1..] {
            let diff: BTreeMap<u32, i8> = a.iter().map(|(&k, &d)| (k, d - b[&k])).collect();
            let nonzero = diff.values().any(|&d| d != 0);
            if nonzero && !balanced_digits_vanish_only_trivially(&diff) {
                return Some(false);
            }
        }
    }
    Some(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub level: usize,
    pub order: usize,
    #[serde(with = "serde_int")]
    pub mu: ExactInt,
    #[serde(with = "serde_int")]
    pub lucas_fundamentals: ExactInt,
    #[serde(with = "serde_int")]
    pub frierson_fundamentals: ExactInt,
    pub rank: usize,
    #[serde(with = "serde_int")]
    pub sv_classes: ExactInt,
}

pub fn census(level: usize) -> Result<CensusRow> {
    if level == 0 {
        return Err(Error::InvalidArgument("level must be at least 1".into()));
    }
    let order = 3usize
        .checked_pow(level as u32)
        .ok_or_else(|| Error::InvalidArgument(format!("level {level} is too large")))?;
    let n = ExactInt::from(order);
    Ok(CensusRow {
        level,
        order,
        mu: &n * (&n * &n - 1) / 2,
        lucas_fundamentals: fundamental_formula(level, Family::Lucas),
        frierson_fundamentals: fundamental_formula(level, Family::Frierson),
        rank: 2 * level + 1,
        sv_classes: sv_class_count(level),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleReport {
    pub level: usize,
    pub checked: usize,
    pub all_natural: bool,
    pub all_magic: bool,
    pub all_regular: bool,
}

/// Builds `count` random natural assignments at `level` and checks each.
pub fn sample_verify(level: usize, count: usize, seed: u64) -> SampleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut powers: Vec<i64> = (0..2 * level as u32).map(|k| 3i64.pow(k)).collect();
    let mut report = SampleReport {
        level,
        checked: 0,
        all_natural: true,
        all_magic: true,
        all_regular: true,
    };
    let target = {
        let n = ExactInt::from(3usize.pow(level as u32));
        &n * (&n * &n - 1) / 2
    };
    for _ in 0..count {
        powers.shuffle(&mut rng);
        let signed: Vec<i64> = powers
            .iter()
            .map(|&x| if rng.gen::<bool>() { -x } else { x })
            .collect();
        let m = lucas(&params_from_values(&signed));
        report.checked += 1;
        report.all_natural &= check_natural(&m);
        report.all_magic &= check_magic(&m).as_ref() == Some(&target);
        report.all_regular &= check_regular(&m).unwrap_or(false);
    }
    report
}

/// Distinct canonical keys among arbitrary parameter sets; used to compare
/// families of squares up to phase.
pub fn canonical_classes<'a>(params: impl IntoIterator<Item = &'a LucasParams>) -> BTreeSet<LucasParams> {
    params.into_iter().map(canonical_key).collect()
}

/// Every Frierson member of the phase orbit of `params`: `F` and `F·R`.
pub fn frierson_pair(params: &FriersonParams) -> [FriersonParams; 2] {
    [params.clone(), params.swapped()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{apply_phase, canonical_phase, lucas3, Phase};
    use crate::exactmat::SquareMatrix;

    fn lp(t: &[(i64, i64, i64)]) -> LucasParams {
        LucasParams::from_tuples(t)
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn coefficient_table_matches_construction() {
        let (c, v, y) = (1000i64, 10, 1);
        let m = lucas3(&c.into(), &v.into(), &y.into());
        for r in 0..3 {
            for s in 0..3 {
                let (a, b) = LUCAS3_COEFFS[r][s];
                assert_eq!(m.get(r, s), &ExactInt::from(c + i64::from(a) * v + i64::from(b) * y));
            }
        }
    }

    #[test]
    fn small_elements_match_construction() {
        let p = lp(&[(4, -3, 1), (36, 9, -27)]);
        let big: Vec<i64> = lucas(&p).elements().iter().map(|e| e.to_i64().unwrap()).collect();
        assert_eq!(small_elements(&p), big);
    }

    #[test]
    fn order3_assignments() {
        let lucas_sq: Vec<SquareMatrix> =
            natural_parameter_assignments(1, Family::Lucas).map(|p| lucas(&p)).collect();
        assert_eq!(lucas_sq.len(), 8);
        let loshu = lucas3(&4.into(), &3.into(), &1.into());
        let phases: HashSet<SquareMatrix> = Phase::ALL.iter().map(|&p| apply_phase(&loshu, p)).collect();
        assert_eq!(lucas_sq.iter().cloned().collect::<HashSet<_>>(), phases);
        let fr: Vec<LucasParams> = natural_parameter_assignments(1, Family::Frierson).collect();
        assert_eq!(fr, vec![lp(&[(4, 1, 3)]), lp(&[(4, 3, 1)])]);
    }

    #[test]
    fn order9_assignment_count() {
        assert_eq!(natural_parameter_assignments(2, Family::Lucas).count(), 384);
        assert_eq!(natural_parameter_assignments(2, Family::Frierson).count(), 24);
    }

    #[test]
    fn formulas() {
        assert_eq!(total_assignments(2, Family::Lucas), 384.into());
        assert_eq!(fundamental_formula(3, Family::Lucas), 5760.into());
        assert_eq!(fundamental_formula(3, Family::Frierson), 360.into());
        assert_eq!(frierson_alternate_count(2), 6.into());
        assert_eq!(frierson_alternate_count(3), 90.into());
        assert_eq!(sv_class_count(2), 3.into());
        assert_eq!(sv_class_count(3), 15.into());
        assert_eq!(sv_class_count(6), 10395.into());
    }

    #[test]
    fn order3_dedup() {
        let res = enumerate_fundamental(1, Family::Lucas, EnumerateOptions { emit: true, ceiling: 3 }).unwrap();
        assert_eq!(res.fundamental_count, 1.into());
        assert_eq!(res.representatives.unwrap().len(), 1);
        let fr = enumerate_fundamental(1, Family::Frierson, EnumerateOptions::default()).unwrap();
        assert_eq!(fr.fundamental_count, 1.into());
        assert!(fr.representatives.is_none());
    }

    #[test]
    fn order9_dedup() {
        let opts = EnumerateOptions { emit: true, ceiling: 3 };
        let l = enumerate_fundamental(2, Family::Lucas, opts).unwrap();
        assert!(l.materialized);
        assert_eq!(l.fundamental_count, 48.into());
        assert_eq!(l.fundamental_count, l.formula_count);
        assert_eq!(l.sv_class_count, 3.into());
        // keys are canonical: their matrices are already the canonical phase
        for p in l.representatives.as_ref().unwrap() {
            let m = lucas(p);
            assert_eq!(canonical_phase(&m), m);
        }
        let f = enumerate_fundamental(2, Family::Frierson, opts).unwrap();
        assert_eq!(f.fundamental_count, 12.into());
        assert_eq!(f.alternate_frierson_count, Some(6.into()));
        assert!(f.representatives.unwrap().iter().all(|p| p.as_frierson().is_some()));
    }

    #[test]
    fn order27_dedup() {
        let l = enumerate_fundamental(3, Family::Lucas, EnumerateOptions::default()).unwrap();
        assert_eq!((l.total_assignments.clone(), l.fundamental_count.clone()), (46080.into(), 5760.into()));
        let f = enumerate_fundamental(3, Family::Frierson, EnumerateOptions::default()).unwrap();
        assert_eq!(f.fundamental_count, 360.into());
        assert_eq!(f.sv_class_count, 15.into());
    }

    #[test]
    fn ceiling_behaviour() {
        let opts = EnumerateOptions { emit: true, ceiling: 3 };
        assert!(matches!(
            enumerate_fundamental(4, Family::Lucas, opts),
            Err(Error::CeilingExceeded { level: 4, ceiling: 3 })
        ));
        let formula = enumerate_fundamental(4, Family::Lucas, EnumerateOptions::default()).unwrap();
        assert!(!formula.materialized);
        assert_eq!(formula.fundamental_count, 1_290_240.into());
        let low = EnumerateOptions { emit: false, ceiling: 1 };
        assert!(!enumerate_fundamental(2, Family::Lucas, low).unwrap().materialized);
    }

    #[test]
    fn fnc_searches() {
        assert_eq!(fnc_integer_solutions(1), vec![vec![1, 3]]);
        assert_eq!(fnc_norm_solutions(1, false), vec![vec![1, 3]]);
        assert_eq!(fnc_natural_solutions(1), vec![vec![1, 3]]);
        assert_eq!(fnc_natural_solutions(2), vec![vec![1, 3, 9, 27]]);
        let norm_only = fnc_integer_solutions(2);
        assert_eq!(norm_only.len(), 10);
        assert!(norm_only.contains(&vec![1, 3, 9, 27]));
        assert!(norm_only.contains(&vec![8, 10, 16, 20]));
        for s in &norm_only {
            assert_eq!(s.iter().map(|x| x * x).sum::<u64>(), 820);
        }
    }

    #[test]
    fn duplicate_checks() {
        assert!(duplicate_element_check(&lp(&[(4, 3, 1)])));
        assert!(!duplicate_element_check(&lp(&[(4, 3, 1), (4, 3, 1)])));
        for p in natural_parameter_assignments(2, Family::Lucas) {
            assert!(duplicate_element_check(&p));
            assert_eq!(ternary_distinctness_argument(&p), Some(true));
        }
        assert_eq!(ternary_distinctness_argument(&lp(&[(4, 3, 1), (4, 3, 1)])), None);
        assert_eq!(ternary_distinctness_argument(&lp(&[(7, 5, 2)])), None);
    }

    #[test]
    fn balanced_digit_lemma() {
        let d = |pairs: &[(u32, i8)]| pairs.iter().copied().collect::<BTreeMap<_, _>>();
        assert!(balanced_digits_vanish_only_trivially(&d(&[(0, 1), (1, -1)])));
        assert!(balanced_digits_vanish_only_trivially(&d(&[(0, 2), (1, 2), (2, -2)])));
        assert!(balanced_digits_vanish_only_trivially(&d(&[(0, 0), (1, 0)])));
        // digit 3 is outside the lemma's range: 3·3⁰ − 1·3¹ = 0
        assert!(!balanced_digits_vanish_only_trivially(&d(&[(0, 3), (1, -1)])));
    }

    #[test]
    fn census_rows() {
        let row = |l| census(l).unwrap();
        let r2 = row(2);
        assert_eq!((r2.order, r2.rank), (9, 5));
        assert_eq!(r2.mu, 360.into());
        assert_eq!(r2.lucas_fundamentals, 48.into());
        assert_eq!(r2.frierson_fundamentals, 12.into());
        assert_eq!(r2.sv_classes, 3.into());
        let r4 = row(4);
        assert_eq!(r4.mu, 265_680.into());
        assert_eq!(r4.lucas_fundamentals, 1_290_240.into());
        assert_eq!(r4.frierson_fundamentals, 20_160.into());
        assert_eq!((r4.rank, r4.sv_classes.clone()), (9, 105.into()));
        let r6 = row(6);
        assert_eq!(r6.mu, 193_709_880u64.into());
        assert_eq!(r6.lucas_fundamentals, 245_248_819_200u64.into());
        assert_eq!(r6.frierson_fundamentals, 239_500_800u64.into());
        assert_eq!((r6.order, r6.rank), (729, 13));
        assert!(census(0).is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_verify(2, 5, 7);
        assert_eq!(a, sample_verify(2, 5, 7));
        assert!(a.all_natural && a.all_magic && a.all_regular);
        assert_eq!(a.checked, 5);
    }
}
