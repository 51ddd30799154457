//! Commutation of Lucas and Frierson squares: closed-form predicates, always
//! reported next to the exact commutator, and commuting-pair constructions.

use std::collections::HashMap;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::construct::{
    apply_phase, apply_to_params, frierson9, lucas, FriersonParams, LucasParams, LucasTriple,
    Phase, FRIERSON9_FUNDAMENTALS,
};
use crate::error::{Error, Result};
use crate::exactmat::{ExactInt, SquareMatrix};
use crate::spectra::{jcf_matrices, SurdMatrix, SurdSum};

/// `L₃(c,v,y)` and `L₃(d,s,t)` commute iff `v·t = y·s`.
pub fn commute3_predicate(p: &LucasTriple, q: &LucasTriple) -> bool {
    &p.v * &q.y == &p.y * &q.v
}

/// The order-3 condition at every level. Cross terms between levels vanish
/// because every level has equal line sums, so this is exact for all
/// compound Lucas squares, not only natural ones.
pub fn levelwise_predicate(p: &LucasParams, q: &LucasParams) -> Result<bool> {
    if p.level() != q.level() {
        return Err(Error::OrderMismatch {
            left: p.order(),
            right: q.order(),
        });
    }
    Ok(p
        .triples()
        .iter()
        .zip(q.triples())
        .all(|(a, b)| commute3_predicate(a, b)))
}

/// How an order-9 partner reuses the parameters of `L₉(c,v,y,d,s,t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SwapPattern {
    /// `L₉(d,s,t,c,v,y)`, commuting iff `v·t = y·s`.
    LevelsExchanged,
    /// `L₉(d,t,s,c,y,v)`, commuting iff `v·s = y·t`.
    LevelsExchangedSwapped,
}

pub fn swap_pattern(p: &LucasParams, q: &LucasParams) -> Option<SwapPattern> {
    let ([a, b], [qa, qb]) = (p.triples(), q.triples()) else {
        return None;
    };
    let swapped = |t: &LucasTriple| LucasTriple {
        c: t.c.clone(),
        v: t.y.clone(),
        y: t.v.clone(),
    };
    if qa == b && qb == a {
        Some(SwapPattern::LevelsExchanged)
    } else if *qa == swapped(b) && *qb == swapped(a) {
        Some(SwapPattern::LevelsExchangedSwapped)
    } else {
        None
    }
}

/// Order-9 predicate: one of the two exchange patterns with its condition,
/// otherwise the levelwise condition.
pub fn commute9_predicate(p: &LucasParams, q: &LucasParams) -> Result<bool> {
    if p.level() != 2 || q.level() != 2 {
        return Err(Error::InvalidArgument("order-9 predicate needs level 2".into()));
    }
    let [a, b] = p.triples() else { unreachable!() };
    Ok(match swap_pattern(p, q) {
        Some(SwapPattern::LevelsExchanged) => &a.v * &b.y == &a.y * &b.v,
        Some(SwapPattern::LevelsExchangedSwapped) => &a.v * &b.v == &a.y * &b.y,
        None => levelwise_predicate(p, q)?,
    })
}

/// Closed-form prediction for any level.
pub fn commute_predicate(p: &LucasParams, q: &LucasParams) -> Result<bool> {
    match (p.level(), q.level()) {
        (1, 1) => Ok(commute3_predicate(&p.triples()[0], &q.triples()[0])),
        (2, 2) => commute9_predicate(p, q),
        _ => levelwise_predicate(p, q),
    }
}

pub fn commutes(a: &SquareMatrix, b: &SquareMatrix) -> Result<bool> {
    Ok(a.commutator(b)?.is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutingPairReport {
    pub left: LucasParams,
    pub right: LucasParams,
    /// From the closed-form condition.
    pub predicted: bool,
    /// From the exact commutator.
    pub observed: bool,
    pub consistent: bool,
}

pub fn commuting_report(left: &LucasParams, right: &LucasParams) -> Result<CommutingPairReport> {
    let predicted = commute_predicate(left, right)?;
    let observed = commutes(&lucas(left), &lucas(right))?;
    Ok(CommutingPairReport {
        left: left.clone(),
        right: right.clone(),
        predicted,
        observed,
        consistent: predicted == observed,
    })
}

/// Unordered index pairs `i < j` whose exact commutator is zero.
pub fn find_commuting_pairs(squares: &[SquareMatrix]) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for (i, a) in squares.iter().enumerate() {
        for (j, b) in squares.iter().enumerate().skip(i + 1) {
            if commutes(a, b)? {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

fn scaled(t: &LucasTriple, k: &ExactInt) -> LucasTriple {
    LucasTriple {
        c: &t.c * k,
        v: &t.v * k,
        y: &t.y * k,
    }
}

/// `|x| = 3^k` for some `k ≤ max_exp`.
fn power_of_three_at_most(x: &ExactInt, max_exp: u32) -> Option<u32> {
    (0..=max_exp).find(|&k| x.abs() == ExactInt::from(3).pow(k))
}

fn check_base(base: &LucasParams) -> Result<()> {
    let level = base.level();
    let bad = |msg: String| Err(Error::InvalidArgument(msg));
    if level < 2 {
        return bad("a commuting construction needs level at least 2".into());
    }
    let (lower, top) = base.triples().split_at(level - 1);
    let mut seen = Vec::new();
    for t in lower {
        for x in [&t.v, &t.y] {
            match power_of_three_at_most(x, 2 * level as u32 - 3) {
                Some(k) if !seen.contains(&k) => seen.push(k),
                _ => return bad(format!("lower-level value {x} is not a fresh ±3^k, k ≤ {}", 2 * level - 3)),
            }
        }
    }
    let mut top_exps: Vec<u32> = [&top[0].v, &top[0].y]
        .into_iter()
        .filter_map(|x| power_of_three_at_most(x, 1))
        .collect();
    top_exps.sort_unstable();
    if top_exps != [0, 1] {
        return bad(format!(
            "top-level values ({}, {}) must be ±1 and ±3",
            top[0].v, top[0].y
        ));
    }
    Ok(())
}

/// From base parameters builds `L′` (top level scaled by `9^{ℓ−1}`) and `L″`
/// (every lower level scaled by 9). Levelwise ratios are unchanged, so the
/// pair always commutes; the value constraints make both natural. An
/// all-zero base is accepted and yields two zero squares.
pub fn build_commuting_lucas_pair(base: &LucasParams) -> Result<(LucasParams, LucasParams)> {
    let all_zero = base
        .triples()
        .iter()
        .all(|t| t.c.is_zero() && t.v.is_zero() && t.y.is_zero());
    if !all_zero {
        check_base(base)?;
    }
    let level = base.level();
    let nine = ExactInt::from(9);
    let top_scale = nine.pow(level as u32 - 1);
    let (lower, top) = base.triples().split_at(level - 1);
    let mut first: Vec<LucasTriple> = lower.to_vec();
    first.push(scaled(&top[0], &top_scale));
    let mut second: Vec<LucasTriple> = lower.iter().map(|t| scaled(t, &nine)).collect();
    second.push(top[0].clone());
    Ok((LucasParams::new(first)?, LucasParams::new(second)?))
}

/// Puts the same new outer level on a commuting pair.
pub fn extend_commuting_pair(
    a: &LucasParams,
    b: &LucasParams,
    outer: &LucasTriple,
) -> Result<(LucasParams, LucasParams)> {
    if !levelwise_predicate(a, b)? {
        return Err(Error::InvalidArgument("the pair does not commute".into()));
    }
    let grow = |p: &LucasParams| {
        let mut t = p.triples().to_vec();
        t.push(outer.clone());
        LucasParams::new(t)
    };
    Ok((grow(a)?, grow(b)?))
}

/// The sixteen squares formed by the eight phases of `L₉(c,v,y,d,s,t)` and
/// of `L₉(c,v,y,d,−s,−t)`.
pub fn sixteen_forms(params: &LucasParams) -> Result<Vec<LucasParams>> {
    let [inner, outer] = params.triples() else {
        return Err(Error::InvalidArgument("needs level 2".into()));
    };
    if [&inner.v, &inner.y, &outer.v, &outer.y]
        .iter()
        .any(|x| x.is_negative())
    {
        return Err(Error::InvalidArgument("v, y, s, t must be nonnegative".into()));
    }
    let negated = LucasParams::new(vec![
        inner.clone(),
        LucasTriple {
            c: outer.c.clone(),
            v: -&outer.v,
            y: -&outer.y,
        },
    ])?;
    Ok([params.clone(), negated]
        .iter()
        .flat_map(|p| Phase::ALL.map(|ph| apply_to_params(p, ph)))
        .collect())
}

/// Ordered pairs `(i, j)`, self-pairs included, among [`sixteen_forms`]
/// with zero exact commutator.
pub fn count_commuting_64(params: &LucasParams) -> Result<usize> {
    let squares: Vec<SquareMatrix> = sixteen_forms(params)?.iter().map(lucas).collect();
    let unordered = find_commuting_pairs(&squares)?.len();
    Ok(2 * unordered + squares.len())
}

/// Whether all eight like phases of `a` and `b` commute.
pub fn like_phases_commute(a: &SquareMatrix, b: &SquareMatrix) -> Result<bool> {
    for p in Phase::ALL {
        if !commutes(&apply_phase(a, p), &apply_phase(b, p))? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn column_multiset(m: &SurdMatrix) -> HashMap<Vec<SurdSum>, usize> {
    let n = m.order();
    let mut out = HashMap::new();
    for j in 0..n {
        let col: Vec<SurdSum> = (0..n).map(|i| m.get(i, j).clone()).collect();
        *out.entry(col).or_insert(0) += 1;
    }
    out
}

/// Whether the closed-form eigenvector matrices of `p` and `q` hold the same
/// columns. A negative levelwise ratio flips `Ω`, which only reorders them.
pub fn shares_eigenvectors(p: &LucasParams, q: &LucasParams) -> Result<bool> {
    let (sp, sq) = (jcf_matrices(p)?, jcf_matrices(q)?);
    Ok(column_multiset(&sp.s) == column_multiset(&sq.s))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelledSquare {
    pub label: String,
    pub params: LucasParams,
}

/// The twelve fundamental order-9 Frierson squares and their `·R` phases.
pub fn frierson9_suite() -> Vec<LabelledSquare> {
    let base: Vec<(char, FriersonParams)> = FRIERSON9_FUNDAMENTALS
        .iter()
        .map(|(l, _)| (*l, frierson9(*l).expect("fixture letter")))
        .collect();
    let plain = base.iter().map(|(l, f)| LabelledSquare {
        label: l.to_string(),
        params: f.to_lucas(),
    });
    let right = base.iter().map(|(l, f)| LabelledSquare {
        label: format!("{l}*R"),
        params: apply_to_params(&f.to_lucas(), Phase::Right),
    });
    plain.chain(right).collect()
}

/// The eight phases of the order-3 natural square, labelled by phase.
pub fn order3_phase_suite() -> Vec<LabelledSquare> {
    let loshu = LucasParams::from_tuples(&[(4, 3, 1)]);
    Phase::ALL
        .iter()
        .map(|&p| LabelledSquare {
            label: p.label().to_string(),
            params: apply_to_params(&loshu, p),
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub squares: usize,
    /// Commuting pairs by label, from exact commutators.
    pub commuting: Vec<(String, String)>,
    /// Every unordered pair had predicted == observed.
    pub all_consistent: bool,
    /// Every commuting pair also commutes in all like phases.
    pub like_phases_commute: bool,
    /// Every commuting pair has the same eigenvector columns.
    pub eigenvectors_shared: bool,
}

pub fn run_suite(suite: &[LabelledSquare]) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        squares: suite.len(),
        commuting: Vec::new(),
        all_consistent: true,
        like_phases_commute: true,
        eigenvectors_shared: true,
    };
    let squares: Vec<SquareMatrix> = suite.iter().map(|s| lucas(&s.params)).collect();
    for (i, a) in suite.iter().enumerate() {
        for (j, b) in suite.iter().enumerate().skip(i + 1) {
            let r = commuting_report(&a.params, &b.params)?;
            report.all_consistent &= r.consistent;
            if r.observed {
                report.commuting.push((a.label.clone(), b.label.clone()));
                report.like_phases_commute &= like_phases_commute(&squares[i], &squares[j])?;
                report.eigenvectors_shared &= shares_eigenvectors(&a.params, &b.params)?;
            }
        }
    }
    Ok(report)
}
