//! Exact values of the form `a·√d` with `a` rational and `d` a squarefree
//! integer. A negative radicand encodes the imaginary value `a·i·√|d|`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Deserializer;
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmat::serde_int;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Radical {
    coeff: BigRational,
    radicand: BigInt,
}

/// Splits `n` into `(s, core)` with `n = s²·core` and `core` squarefree.
fn square_split(n: &BigUint) -> (BigUint, BigUint) {
    if let Some(small) = n.to_u64() {
        let (s, core) = square_split_u64(small);
        return (s.into(), core.into());
    }
    let mut rem = n.clone();
    let mut s = BigUint::one();
    let mut core = BigUint::one();
    let mut p = BigUint::from(2u32);
    while &p * &p <= rem {
        let mut e = 0u32;
        while (&rem % &p).is_zero() {
            rem /= &p;
            e += 1;
        }
        if e > 0 {
            s *= p.pow(e / 2);
            if e % 2 == 1 {
                core *= &p;
            }
        }
        p += 1u32;
    }
    (s, core * rem)
}

fn square_split_u64(mut rem: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut core = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rem {
        let mut e = 0u32;
        while rem.is_multiple_of(p) {
            rem /= p;
            e += 1;
        }
        if e > 0 {
            s *= p.pow(e / 2);
            if e % 2 == 1 {
                core *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (s, core * rem)
}

impl Radical {
    pub fn zero() -> Self {
        Self {
            coeff: BigRational::zero(),
            radicand: BigInt::zero(),
        }
    }

    /// Normalizes `coeff·√radicand`: square factors move into the coefficient,
    /// the sign of the radicand is kept, and any zero becomes the canonical zero.
    pub fn normalize(coeff: BigRational, radicand: BigInt) -> Self {
        if coeff.is_zero() || radicand.is_zero() {
            return Self::zero();
        }
        let sign = radicand.sign();
        let (s, core) = square_split(radicand.magnitude());
        Self {
            coeff: coeff * BigRational::from_integer(BigInt::from(s)),
            radicand: BigInt::from_biguint(sign, core),
        }
    }

    pub fn new(coeff: impl Into<BigInt>, radicand: impl Into<BigInt>) -> Self {
        Self::normalize(BigRational::from_integer(coeff.into()), radicand.into())
    }

    pub fn from_integer(v: impl Into<BigInt>) -> Self {
        Self::new(v, 1)
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::normalize(q, BigInt::one())
    }

    /// `√d`.
    pub fn sqrt(d: impl Into<BigInt>) -> Self {
        Self::new(1, d)
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_real(&self) -> bool {
        !self.radicand.is_negative()
    }

    pub fn is_imaginary(&self) -> bool {
        self.radicand.is_negative()
    }

    /// The value as a rational, if the radicand is 1 (or the value is zero).
    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.is_zero() || self.radicand.is_one()).then_some(&self.coeff)
    }

    pub fn negate(&self) -> Self {
        Self {
            coeff: -&self.coeff,
            radicand: self.radicand.clone(),
        }
    }

    /// Flips the sign of the coefficient only; imaginary values stay imaginary.
    pub fn abs(&self) -> Self {
        Self {
            coeff: self.coeff.abs(),
            radicand: self.radicand.clone(),
        }
    }

    /// `|a·√d|` as a real radical, valid for imaginary values too.
    pub fn magnitude(&self) -> Self {
        Self {
            coeff: self.coeff.abs(),
            radicand: self.radicand.abs(),
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        Self::normalize(&self.coeff * k, self.radicand.clone())
    }

    pub fn mul_rational(&self, q: &BigRational) -> Self {
        Self::normalize(&self.coeff * q, self.radicand.clone())
    }

    /// Exact product. For squarefree `d`, `e` with `g = gcd(d, e)`,
    /// `√d·√e = g·√((d/g)(e/g))`, which is already squarefree.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (d, e) = (self.radicand.magnitude(), other.radicand.magnitude());
        let g = d.gcd(e);
        let core = (d / &g) * (e / &g);
        let both_negative = self.radicand.is_negative() && other.radicand.is_negative();
        let one_negative = self.radicand.is_negative() != other.radicand.is_negative();
        let mut coeff = &self.coeff * &other.coeff * BigRational::from_integer(BigInt::from(g));
        if both_negative {
            coeff = -coeff;
        }
        let sign = if one_negative { Sign::Minus } else { Sign::Plus };
        Self {
            coeff,
            radicand: BigInt::from_biguint(sign, core),
        }
    }

    /// `1/(a·√d) = (1/(a·d))·√d`, valid for either sign of `d`.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let denom = &self.coeff * BigRational::from_integer(self.radicand.clone());
        Some(Self {
            coeff: denom.recip(),
            radicand: self.radicand.clone(),
        })
    }

    /// `self / √k`.
    pub fn div_sqrt(&self, k: u64) -> Self {
        assert!(k > 0, "division by sqrt(0)");
        let inv = Self::normalize(
            BigRational::new(BigInt::one(), BigInt::from(k)),
            BigInt::from(k),
        );
        self.mul(&inv)
    }

    /// The exact square `a²·d` (negative for imaginary values).
    pub fn square(&self) -> BigRational {
        &self.coeff * &self.coeff * BigRational::from_integer(self.radicand.clone())
    }

    /// Orders two real values by absolute value.
    pub fn compare_magnitude(&self, other: &Self) -> Result<Ordering> {
        if self.is_imaginary() || other.is_imaginary() {
            return Err(Error::ImaginaryComparison);
        }
        Ok(self.square().abs().cmp(&other.square().abs()))
    }

    /// Real value as `f64`; errors for imaginary values.
    pub fn to_f64(&self) -> Result<f64> {
        if self.is_imaginary() {
            return Err(Error::ImaginaryComparison);
        }
        Ok(self.magnitude_f64() * self.sign_f64())
    }

    pub fn to_complex(&self) -> Complex64 {
        let v = self.magnitude_f64() * self.sign_f64();
        if self.is_imaginary() {
            Complex64::new(0.0, v)
        } else {
            Complex64::new(v, 0.0)
        }
    }

    fn sign_f64(&self) -> f64 {
        if self.coeff.is_negative() { -1.0 } else { 1.0 }
    }

    fn magnitude_f64(&self) -> f64 {
        let a = self.coeff.abs().to_f64().unwrap_or(f64::NAN);
        let d = self.radicand.abs().to_f64().unwrap_or(f64::NAN);
        a * d.sqrt()
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if self.coeff.is_negative() {
            f.write_str("-")?;
        }
        if self.is_imaginary() {
            f.write_str("i*")?;
        }
        let a = self.coeff.abs();
        let d = self.radicand.abs();
        if d.is_one() {
            write!(f, "{a}")
        } else {
            write!(f, "{a}*sqrt({d})")
        }
    }
}

impl Serialize for Radical {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Radical", 2)?;
        st.serialize_field(
            "coeff",
            &[
                serde_int::to_json(self.coeff.numer()),
                serde_int::to_json(self.coeff.denom()),
            ],
        )?;
        st.serialize_field("radicand", &serde_int::to_json(&self.radicand))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Radical {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;

        #[derive(Deserialize)]
        struct Raw {
            coeff: [serde_json::Value; 2],
            radicand: serde_json::Value,
        }
        let raw = Raw::deserialize(d)?;
        let int = |v: &serde_json::Value| {
            serde_int::from_json(v).ok_or_else(|| D::Error::custom("expected an integer"))
        };
        let (num, den, radicand) = (int(&raw.coeff[0])?, int(&raw.coeff[1])?, int(&raw.radicand)?);
        if den.is_zero() {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(Self::normalize(BigRational::new(num, den), radicand))
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn r(a: i64, d: i64) -> Radical {
        Radical::new(a, d)
    }

    fn parts(x: &Radical) -> (BigRational, BigInt) {
        (x.coeff().clone(), x.radicand().clone())
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(parts(&r(1, 12)), (q(2), 3.into()));
        // λ(3,1) = √3·√(3² − 1²) = √24 = 2√6
        assert_eq!(parts(&r(1, 3 * (9 - 1))), (q(2), 6.into()));
        assert_eq!(parts(&r(5, 0)), (q(0), 0.into()));
        assert_eq!(parts(&r(0, 7)), (q(0), 0.into()));
        assert_eq!(parts(&r(1, -12)), (q(2), (-3).into()));
        assert_eq!(parts(&r(3, 49)), (q(21), 1.into()));
    }

    #[test]
    fn abs_negate_scale() {
        assert_eq!(r(-1, 6).abs(), r(1, 6));
        assert_eq!(r(1, 6).negate(), r(-1, 6));
        // 3·λ(3,1) = 6√6
        assert_eq!(r(2, 6).mul_int(&3.into()), r(6, 6));
        assert_eq!(r(-2, -6).abs(), r(2, -6));
        assert_eq!(r(-2, -6).magnitude(), r(2, 6));
    }

    #[test]
    fn magnitude_comparison() {
        assert_eq!(r(12, 3).compare_magnitude(&r(6, 3)).unwrap(), Ordering::Greater);
        assert_eq!(r(-2, 6).compare_magnitude(&r(1, 24)).unwrap(), Ordering::Equal);
        assert_eq!(r(1, 2).compare_magnitude(&r(1, 3)).unwrap(), Ordering::Less);
        assert!(matches!(
            r(1, -3).compare_magnitude(&r(1, 3)),
            Err(Error::ImaginaryComparison)
        ));
    }

    #[test]
    fn floats() {
        // 2√6 = 4.898979485566356
        assert!((r(2, 6).to_f64().unwrap() - 4.898_979_485_566_356).abs() < 1e-15);
        assert_eq!(Radical::zero().to_f64().unwrap(), 0.0);
        let z = r(1, -3).to_complex();
        assert_eq!(z.re, 0.0);
        assert!((z.im - 1.732_050_807_568_877_2).abs() < 1e-15);
        assert!(r(1, -3).to_f64().is_err());
    }

    #[test]
    fn products() {
        assert_eq!(r(1, 2).mul(&r(1, 3)), r(1, 6));
        assert_eq!(r(1, 6).mul(&r(1, 6)), r(6, 1));
        assert_eq!(r(2, 6).mul(&r(3, 10)), r(12, 15));
        // i√3 · i√3 = −3
        assert_eq!(r(1, -3).mul(&r(1, -3)), r(-3, 1));
        // i√2 · √3 = i√6
        assert_eq!(r(1, -2).mul(&r(1, 3)), r(1, -6));
        assert_eq!(r(12, 3).div_sqrt(3), r(12, 1));
    }

    #[test]
    fn reciprocals() {
        for x in [r(2, 6), r(-3, 5), r(1, -3), r(-2, -6), r(7, 1)] {
            assert_eq!(x.mul(&x.recip().unwrap()), r(1, 1), "{x}");
        }
        assert!(Radical::zero().recip().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(r(2, 6).to_string(), "2*sqrt(6)");
        assert_eq!(r(-2, -6).to_string(), "-i*2*sqrt(6)");
        assert_eq!(r(5, 1).to_string(), "5");
        assert_eq!(r(5, -1).to_string(), "i*5");
        assert_eq!(Radical::zero().to_string(), "0");
        let half = Radical::normalize(BigRational::new(1.into(), 2.into()), 3.into());
        assert_eq!(half.to_string(), "1/2*sqrt(3)");
    }

    #[test]
    fn json_form() {
        let v = serde_json::to_value(r(2, 6)).unwrap();
        assert_eq!(v, serde_json::json!({"coeff": [2, 1], "radicand": 6}));
        let back: Radical = serde_json::from_value(v).unwrap();
        assert_eq!(back, r(2, 6));
        let unnormalized: Radical =
            serde_json::from_value(serde_json::json!({"coeff": [1, 1], "radicand": 12})).unwrap();
        assert_eq!(unnormalized, r(2, 3));
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(a in -1_000_000i64..=1_000_000, d in -1_000_000i64..=1_000_000) {
            let x = r(a, d);
            let again = Radical::normalize(x.coeff().clone(), x.radicand().clone());
            prop_assert_eq!(x, again);
        }

        #[test]
        fn float_matches_direct_evaluation(a in -1_000_000i64..=1_000_000, d in 0i64..=1_000_000) {
            let x = r(a, d);
            let direct = a as f64 * (d as f64).sqrt();
            let got = x.to_f64().unwrap();
            prop_assert!((got - direct).abs() <= 1e-12 * direct.abs().max(1.0));
        }

        #[test]
        fn equal_forms_equal_floats(a in 1i64..=1000, s in 1i64..=30, d in 1i64..=1000) {
            // a·√(s²d) and (a·s)·√d normalize identically
            let x = r(a, s * s * d);
            let y = r(a * s, d);
            prop_assert_eq!(&x, &y);
            prop_assert!((x.to_f64().unwrap() - y.to_f64().unwrap()).abs()
                <= 1e-12 * y.to_f64().unwrap().abs());
        }

        #[test]
        fn product_matches_square_roots(a in -50i64..=50, d in -500i64..=500, b in -50i64..=50, e in -500i64..=500) {
            let p = r(a, d).mul(&r(b, e));
            let expect = r(a, d).to_complex() * r(b, e).to_complex();
            let got = p.to_complex();
            prop_assert!((got - expect).norm() <= 1e-9 * expect.norm().max(1.0));
            prop_assert_eq!(p.square(), r(a, d).square() * r(b, e).square());
        }
    }
}
