//! Lucas and Frierson squares of order `3^ℓ` and their eight phases.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmat::{serde_int, ExactInt, SquareMatrix};

/// One compounding level `(c, v, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LucasTriple {
    #[serde(with = "serde_int")]
    pub c: ExactInt,
    #[serde(with = "serde_int")]
    pub v: ExactInt,
    #[serde(with = "serde_int")]
    pub y: ExactInt,
}

impl LucasTriple {
    pub fn new(c: impl Into<ExactInt>, v: impl Into<ExactInt>, y: impl Into<ExactInt>) -> Self {
        Self {
            c: c.into(),
            v: v.into(),
            y: y.into(),
        }
    }
}

/// Parameters of a compound Lucas square. Index 0 is the innermost level
/// (the finest blocks), so `[(c,v,y), (d,s,t)]` builds
/// `E₃⊗L₃(c,v,y) + L₃(d,s,t)⊗E₃`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ParamsRepr", into = "ParamsRepr")]
pub struct LucasParams {
    triples: Vec<LucasTriple>,
}

#[derive(Serialize, Deserialize)]
struct ParamsRepr {
    level: usize,
    triples: Vec<LucasTriple>,
}

impl From<LucasParams> for ParamsRepr {
    fn from(p: LucasParams) -> Self {
        Self {
            level: p.level(),
            triples: p.triples,
        }
    }
}

impl TryFrom<ParamsRepr> for LucasParams {
    type Error = Error;

    fn try_from(r: ParamsRepr) -> Result<Self> {
        if r.level != r.triples.len() {
            return Err(Error::InvalidArgument(format!(
                "level {} but {} triples",
                r.level,
                r.triples.len()
            )));
        }
        Self::new(r.triples)
    }
}

impl LucasParams {
    pub fn new(triples: Vec<LucasTriple>) -> Result<Self> {
        if triples.is_empty() {
            return Err(Error::InvalidArgument("at least one level is required".into()));
        }
        Ok(Self { triples })
    }

    /// Convenience constructor from `(c, v, y)` tuples, innermost first.
    pub fn from_tuples<T: Into<ExactInt> + Clone>(tuples: &[(T, T, T)]) -> Self {
        Self::new(
            tuples
                .iter()
                .cloned()
                .map(|(c, v, y)| LucasTriple::new(c, v, y))
                .collect(),
        )
        .expect("at least one level")
    }

    pub fn level(&self) -> usize {
        self.triples.len()
    }

    pub fn order(&self) -> usize {
        3usize.pow(self.level() as u32)
    }

    pub fn triples(&self) -> &[LucasTriple] {
        &self.triples
    }

    pub fn into_triples(self) -> Vec<LucasTriple> {
        self.triples
    }

    pub fn c_sum(&self) -> ExactInt {
        self.triples.iter().map(|t| &t.c).sum()
    }

    /// `3^ℓ·Σcᵢ`.
    pub fn summation_index(&self) -> ExactInt {
        self.c_sum() * ExactInt::from(self.order())
    }

    /// The Frierson parameters when every `cᵢ = vᵢ + yᵢ` with `vᵢ, yᵢ ≥ 0`.
    pub fn as_frierson(&self) -> Option<FriersonParams> {
        let fits = self
            .triples
            .iter()
            .all(|t| !t.v.is_negative() && !t.y.is_negative() && t.c == &t.v + &t.y);
        fits.then(|| FriersonParams {
            pairs: self
                .triples
                .iter()
                .map(|t| (t.v.clone(), t.y.clone()))
                .collect(),
        })
    }
}

fn parse_int(tok: &str) -> Result<ExactInt> {
    ExactInt::from_str(tok.trim())
        .map_err(|_| Error::InvalidArgument(format!("not an integer: {:?}", tok.trim())))
}

fn parse_groups(s: &str, width: usize) -> Result<Vec<Vec<ExactInt>>> {
    let groups: Vec<&str> = s.split(';').filter(|g| !g.trim().is_empty()).collect();
    if groups.is_empty() {
        return Err(Error::InvalidArgument("empty parameter string".into()));
    }
    groups
        .into_iter()
        .map(|g| {
            let vals = g.split(',').map(parse_int).collect::<Result<Vec<_>>>()?;
            if vals.len() != width {
                return Err(Error::InvalidArgument(format!(
                    "expected {width} comma-separated values per level, got {:?}",
                    g.trim()
                )));
            }
            Ok(vals)
        })
        .collect()
}

/// `"c1,v1,y1;c2,v2,y2;..."`
impl FromStr for LucasParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let triples = parse_groups(s, 3)?
            .into_iter()
            .map(|g| {
                let [c, v, y]: [ExactInt; 3] = g.try_into().expect("width checked");
                LucasTriple { c, v, y }
            })
            .collect();
        Self::new(triples)
    }
}

impl fmt::Display for LucasParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.triples.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{},{},{}", t.c, t.v, t.y)?;
        }
        Ok(())
    }
}

/// Parameters `(vᵢ, yᵢ)` of a compound Frierson square, innermost first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FriersonParams {
    pairs: Vec<(ExactInt, ExactInt)>,
}

impl FriersonParams {
    pub fn new(pairs: Vec<(ExactInt, ExactInt)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidArgument("at least one level is required".into()));
        }
        for (i, (v, y)) in pairs.iter().enumerate() {
            for (name, value) in [("v", v), ("y", y)] {
                if value.is_negative() {
                    return Err(Error::NegativeParameter {
                        name: format!("{name}{}", i + 1),
                        value: value.to_string(),
                    });
                }
            }
        }
        Ok(Self { pairs })
    }

    pub fn from_pairs<T: Into<ExactInt> + Clone>(pairs: &[(T, T)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .cloned()
                .map(|(v, y)| (v.into(), y.into()))
                .collect(),
        )
    }

    pub fn level(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(ExactInt, ExactInt)] {
        &self.pairs
    }

    /// Zero parameters are admitted, but such squares can never be natural.
    pub fn has_zero_parameter(&self) -> bool {
        self.pairs.iter().any(|(v, y)| v.is_zero() || y.is_zero())
    }

    pub fn to_lucas(&self) -> LucasParams {
        LucasParams {
            triples: self
                .pairs
                .iter()
                .map(|(v, y)| LucasTriple {
                    c: v + y,
                    v: v.clone(),
                    y: y.clone(),
                })
                .collect(),
        }
    }

    /// The parameters of `F·R`: every pair swapped.
    pub fn swapped(&self) -> Self {
        Self {
            pairs: self
                .pairs
                .iter()
                .map(|(v, y)| (y.clone(), v.clone()))
                .collect(),
        }
    }
}

/// `"v1,y1;v2,y2;..."`
impl FromStr for FriersonParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let pairs = parse_groups(s, 2)?
            .into_iter()
            .map(|g| {
                let [v, y]: [ExactInt; 2] = g.try_into().expect("width checked");
                (v, y)
            })
            .collect();
        Self::new(pairs)
    }
}

impl fmt::Display for FriersonParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, y)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{v},{y}")?;
        }
        Ok(())
    }
}

impl Serialize for FriersonParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[serde_json::Value; 2]> = self
            .pairs
            .iter()
            .map(|(v, y)| [serde_int::to_json(v), serde_int::to_json(y)])
            .collect();
        serde_json::json!({ "level": self.level(), "pairs": pairs }).serialize(s)
    }
}

/// `3^ℓ` for `order`, when `order = 3^ℓ` with `ℓ ≥ 1`.
pub fn level_of_order(order: usize) -> Option<usize> {
    let mut n = order;
    let mut level = 0;
    while n > 1 && n.is_multiple_of(3) {
        n /= 3;
        level += 1;
    }
    (n == 1 && level >= 1).then_some(level)
}

fn lucas3_table(c: &ExactInt, v: &ExactInt, y: &ExactInt) -> [[ExactInt; 3]; 3] {
    [
        [c + v, c - v - y, c + y],
        [c - v + y, c.clone(), c + v - y],
        [c - y, c + v + y, c - v],
    ]
}

/// The general order-3 magic square with summation index `3c`.
pub fn lucas3(c: &ExactInt, v: &ExactInt, y: &ExactInt) -> SquareMatrix {
    let t = lucas3_table(c, v, y);
    SquareMatrix::from_fn(3, |i, j| t[i][j].clone())
}

pub fn frierson3(v: &ExactInt, y: &ExactInt) -> Result<SquareMatrix> {
    let p = FriersonParams::new(vec![(v.clone(), y.clone())])?;
    Ok(lucas(&p.to_lucas()))
}

/// `E₃ ⊗ inner + L₃(c, v, y) ⊗ E`, one compounding step.
pub fn compound_once(
    inner: &SquareMatrix,
    c: &ExactInt,
    v: &ExactInt,
    y: &ExactInt,
) -> Result<SquareMatrix> {
    let n = inner.order();
    if level_of_order(n).is_none() {
        return Err(Error::NotPowerOfThree(n));
    }
    let a = SquareMatrix::kronecker(&SquareMatrix::all_ones(3), inner);
    let b = SquareMatrix::kronecker(&lucas3(c, v, y), &SquareMatrix::all_ones(n));
    a.add(&b)
}

/// Builds the compound square directly: element `(r, s)` is the sum over
/// levels of the order-3 entry addressed by the base-3 digits of `r` and `s`
/// at that level.
pub fn lucas(params: &LucasParams) -> SquareMatrix {
    let tables: Vec<_> = params
        .triples
        .iter()
        .map(|t| lucas3_table(&t.c, &t.v, &t.y))
        .collect();
    SquareMatrix::from_fn(params.order(), |r, s| {
        let (mut r, mut s) = (r, s);
        let mut acc = ExactInt::zero();
        for t in &tables {
            acc += &t[r % 3][s % 3];
            r /= 3;
            s /= 3;
        }
        acc
    })
}

pub fn frierson(params: &FriersonParams) -> SquareMatrix {
    lucas(&params.to_lucas())
}

/// One of the eight dihedral images of a square, written as a product of
/// `R` (cross identity) factors around `M` or its transpose.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Phase {
    Identity,
    /// `M·R`
    Right,
    /// `R·M`
    Left,
    /// `R·M·R`
    Both,
    /// `Mᵀ`
    Transpose,
    /// `Mᵀ·R`
    TransposeRight,
    /// `R·Mᵀ`
    LeftTranspose,
    /// `R·Mᵀ·R`
    LeftTransposeRight,
}

impl Phase {
    pub const ALL: [Phase; 8] = [
        Phase::Identity,
        Phase::Right,
        Phase::Left,
        Phase::Both,
        Phase::Transpose,
        Phase::TransposeRight,
        Phase::LeftTranspose,
        Phase::LeftTransposeRight,
    ];

    /// `(transpose, left R, right R)`.
    pub fn parts(self) -> (bool, bool, bool) {
        match self {
            Phase::Identity => (false, false, false),
            Phase::Right => (false, false, true),
            Phase::Left => (false, true, false),
            Phase::Both => (false, true, true),
            Phase::Transpose => (true, false, false),
            Phase::TransposeRight => (true, false, true),
            Phase::LeftTranspose => (true, true, false),
            Phase::LeftTransposeRight => (true, true, true),
        }
    }

    pub fn from_parts(transpose: bool, left: bool, right: bool) -> Self {
        Self::ALL[usize::from(transpose) * 4 + usize::from(left) * 2 + usize::from(right)]
    }

    /// The phase equal to applying `self` first and `next` to the result.
    pub fn then(self, next: Phase) -> Phase {
        let (t, l, r) = self.parts();
        let (nt, nl, nr) = next.parts();
        if nt {
            Phase::from_parts(!t, r ^ nl, l ^ nr)
        } else {
            Phase::from_parts(t, l ^ nl, r ^ nr)
        }
    }

    pub fn inverse(self) -> Phase {
        Self::ALL
            .into_iter()
            .find(|&q| self.then(q) == Phase::Identity)
            .expect("finite group")
    }

    pub fn label(self) -> &'static str {
        match self {
            Phase::Identity => "M",
            Phase::Right => "M*R",
            Phase::Left => "R*M",
            Phase::Both => "R*M*R",
            Phase::Transpose => "M^T",
            Phase::TransposeRight => "M^T*R",
            Phase::LeftTranspose => "R*M^T",
            Phase::LeftTransposeRight => "R*M^T*R",
        }
    }

    /// Source position in the original matrix of result element `(i, j)`.
    #[inline]
    fn source(self, n: usize, i: usize, j: usize) -> (usize, usize) {
        let (t, l, r) = self.parts();
        let i = if l { n - 1 - i } else { i };
        let j = if r { n - 1 - j } else { j };
        if t { (j, i) } else { (i, j) }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub fn apply_phase(m: &SquareMatrix, p: Phase) -> SquareMatrix {
    let n = m.order();
    SquareMatrix::from_fn(n, |i, j| {
        let (a, b) = p.source(n, i, j);
        m.get(a, b).clone()
    })
}

/// The parameters of `apply_phase(lucas(params), p)`. Transposition negates
/// every `yᵢ`, a left `R` negates both `vᵢ` and `yᵢ`, and an odd number of
/// `R` factors swaps `vᵢ` with `yᵢ`.
pub fn apply_to_params(params: &LucasParams, p: Phase) -> LucasParams {
    let (t, l, r) = p.parts();
    let triples = params
        .triples
        .iter()
        .map(|tr| {
            let mut v = tr.v.clone();
            let mut y = tr.y.clone();
            if t {
                y = -y;
            }
            if l {
                v = -v;
                y = -y;
            }
            if l ^ r {
                std::mem::swap(&mut v, &mut y);
            }
            LucasTriple { c: tr.c.clone(), v, y }
        })
        .collect();
    LucasParams { triples }
}

fn phase_cmp<T: Ord>(n: usize, elements: &[T], p: Phase, q: Phase) -> Ordering {
    for i in 0..n {
        for j in 0..n {
            let (a, b) = p.source(n, i, j);
            let (c, d) = q.source(n, i, j);
            match elements[a * n + b].cmp(&elements[c * n + d]) {
                Ordering::Equal => {}
                other => return other,
            }
        }
    }
    Ordering::Equal
}

/// [`canonical_phase_of`] over any row-major element slice of order `n`.
pub fn canonical_phase_of_elements<T: Ord>(n: usize, elements: &[T]) -> Phase {
    assert_eq!(elements.len(), n * n, "element count");
    let mut best = Phase::Identity;
    for p in Phase::ALL.into_iter().skip(1) {
        if phase_cmp(n, elements, p, best) == Ordering::Less {
            best = p;
        }
    }
    best
}

/// The phase whose image of `m` is lexicographically smallest (row-major).
/// Ties resolve to the first phase in [`Phase::ALL`] order.
pub fn canonical_phase_of(m: &SquareMatrix) -> Phase {
    canonical_phase_of_elements(m.order(), m.elements())
}

pub fn canonical_phase(m: &SquareMatrix) -> SquareMatrix {
    apply_phase(m, canonical_phase_of(m))
}

/// Parameters of the canonical phase of `lucas(params)`.
pub fn canonical_params(params: &LucasParams) -> LucasParams {
    apply_to_params(params, canonical_phase_of(&lucas(params)))
}

/// The twelve fundamental order-9 Frierson squares by letter, as
/// `(v₁, y₁, v₂, y₂)`.
pub const FRIERSON9_FUNDAMENTALS: [(char, [i64; 4]); 12] = [
    ('A', [3, 1, 27, 9]),
    ('B', [27, 1, 9, 3]),
    ('C', [9, 1, 27, 3]),
    ('D', [27, 9, 3, 1]),
    ('E', [9, 3, 27, 1]),
    ('F', [27, 3, 9, 1]),
    ('G', [3, 1, 9, 27]),
    ('H', [27, 1, 3, 9]),
    ('I', [9, 1, 3, 27]),
    ('J', [9, 27, 3, 1]),
    ('K', [3, 9, 27, 1]),
    ('L', [3, 27, 9, 1]),
];

/// Parameters of the fundamental order-9 Frierson square with this letter.
pub fn frierson9(letter: char) -> Option<FriersonParams> {
    let letter = letter.to_ascii_uppercase();
    FRIERSON9_FUNDAMENTALS
        .iter()
        .find(|(l, _)| *l == letter)
        .map(|(_, [a, b, c, d])| FriersonParams::from_pairs(&[(*a, *b), (*c, *d)]).expect("positive"))
}
