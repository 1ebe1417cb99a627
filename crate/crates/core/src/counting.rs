//! Closed-form counts: Euler's totient, divisor sums, the footprint count
//! M(n), the isotemporal class count N(n) and its correction subterms.
//!
//! Every formula is evaluated over exact rationals and must come out integral;
//! a fractional result is reported as [`CountError::Inexact`].
//!
//! `totient` is the standard Euler function (the count of `1 <= k <= d` coprime
//! to `d`), not a count of non-divisors.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("TooSmall: n = {n}, need n >= {min}")]
    TooSmall { n: u64, min: u64 },
    #[error("OddInput: {0} is odd, this count is defined for even n")]
    OddInput(u64),
    #[error("Inexact: {what} at n = {n} evaluates to the non-integer {value}")]
    Inexact {
        what: &'static str,
        n: u64,
        value: String,
    },
}

/// An exact nonnegative count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactCount(BigUint);

impl ExactCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl From<u64> for ExactCount {
    fn from(v: u64) -> Self {
        ExactCount(BigUint::from(v))
    }
}

impl From<BigUint> for ExactCount {
    fn from(v: BigUint) -> Self {
        ExactCount(v)
    }
}

impl PartialEq<u64> for ExactCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for ExactCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Serialize for ExactCount {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

pub fn totient(d: u64) -> u64 {
    assert!(d >= 1, "totient is defined for d >= 1");
    let mut result = d;
    let mut rest = d;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    result
}

/// All divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors are defined for n >= 1");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `sum_{d | n} phi(d)`, which is `n`.
pub fn totient_sum(n: u64) -> u64 {
    divisors(n).into_iter().map(totient).sum()
}

fn pow2(e: i64) -> BigRational {
    let p = BigRational::from_integer(BigUint::from(2u8).pow(e.unsigned_abs() as u32).into());
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

fn int(v: u64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn exact(value: BigRational, what: &'static str, n: u64) -> Result<ExactCount, CountError> {
    if !value.is_integer() || value.is_negative() {
        return Err(CountError::Inexact {
            what,
            n,
            value: value.to_string(),
        });
    }
    Ok(ExactCount(
        value
            .to_integer()
            .to_biguint()
            .expect("checked nonnegative"),
    ))
}

/// `sum_{d | n} phi(d) 2^(n/d - 1 + shift)`, minus `phi(d)` per term when `less_one`.
fn weighted_sum(n: u64, less_one: bool) -> BigRational {
    divisors(n)
        .into_iter()
        .map(|d| {
            let mut term = pow2((n / d) as i64 - 1);
            if less_one {
                term -= BigRational::one();
            }
            term * int(totient(d))
        })
        .fold(BigRational::zero(), |a, b| a + b)
}

/// `sum_{c | n/2} 2^(n/2c - 1) phi(2c)`.
fn skewed_sum(n: u64) -> BigRational {
    divisors(n / 2)
        .into_iter()
        .map(|c| pow2((n / (2 * c)) as i64 - 1) * int(totient(2 * c)))
        .fold(BigRational::zero(), |a, b| a + b)
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

fn require(n: u64, min: u64) -> Result<(), CountError> {
    if n < min {
        Err(CountError::TooSmall { n, min })
    } else {
        Ok(())
    }
}

fn require_even(n: u64) -> Result<(), CountError> {
    require(n, 4)?;
    if n % 2 == 1 {
        return Err(CountError::OddInput(n));
    }
    Ok(())
}

/// M(n): footprints (even, nonempty edge subsets) of the n-gon up to rotation.
pub fn footprint_count(n: u64) -> Result<ExactCount, CountError> {
    require(n, 3)?;
    let mut value = weighted_sum(n, true) / int(n);
    if n.is_multiple_of(2) {
        value += BigRational::one();
    }
    exact(value, "footprint_count", n)
}

/// Footprints carrying a mirror-symmetric ±-labeling, even n.
pub fn mirror_footprint_count(n: u64) -> Result<ExactCount, CountError> {
    require_even(n)?;
    let second = if n.is_multiple_of(4) {
        (n - 4) / 4
    } else {
        (n - 6) / 4
    };
    exact(
        pow2(((n - 4) / 2) as i64) + pow2(second as i64),
        "mirror_footprint_count",
        n,
    )
}

/// The correction `Λ`: ±-forms with skewed rotational symmetry and some
/// reflective symmetry.
pub fn skewed_reflective_correction(n: u64) -> Result<ExactCount, CountError> {
    require_even(n)?;
    let value = if n % 4 == 2 {
        pow2(((n - 2) / 4) as i64)
    } else {
        pow2(((n - 4) / 4) as i64) + pow2(ceil_div(n - 4, 8) as i64)
    };
    exact(value, "skewed_reflective_correction", n)
}

/// Dihedral classes of ±-forms with skewed rotational symmetry, even n.
pub fn skewed_rotational_form_count(n: u64) -> Result<ExactCount, CountError> {
    require_even(n)?;
    let lambda = BigRational::from_integer(skewed_reflective_correction(n)?.0.into());
    let rotational = int(2) * skewed_sum(n) / int(n);
    exact(
        (rotational + lambda) / int(2),
        "skewed_rotational_form_count",
        n,
    )
}

/// N(n), the number of isotemporal classes of the n-gon, evaluated from the
/// three-branch closed formula (n odd, n = 4k + 2, n = 4k).
pub fn isotemporal_class_count(n: u64) -> Result<ExactCount, CountError> {
    require(n, 3)?;
    if n % 2 == 1 {
        return exact(weighted_sum(n, true) / int(n), "isotemporal_class_count", n);
    }
    let orbit_part = (weighted_sum(n, false) - skewed_sum(n)) / int(n);
    exact(
        orbit_part.clone(),
        "isotemporal_class_count (divided sum)",
        n,
    )?;
    let mut value = orbit_part + pow2(((n - 4) / 2) as i64);
    if n.is_multiple_of(4) {
        // at n = 4 both exponents are -1 and the two halves cancel
        value += pow2((n as i64 - 8) / 4);
        value -= pow2(ceil_div(n - 4, 8) as i64 - 1);
    }
    exact(value, "isotemporal_class_count", n)
}

/// Burnside count of acyclic orientations of the n-cycle up to rotation and
/// reflection. Rotation by `s` fixes the `2^gcd(s,n) - 2` non-constant
/// periodic orientations; for even n, each of the n/2 reflections that fix no
/// arrow fixes `2^(n/2)` orientations, and every other reflection fixes none.
pub fn burnside_class_count(n: u64) -> Result<ExactCount, CountError> {
    require(n, 3)?;
    let mut total = divisors(n)
        .into_iter()
        .map(|d| (pow2((n / d) as i64) - int(2)) * int(totient(d)))
        .fold(BigRational::zero(), |a, b| a + b);
    if n.is_multiple_of(2) {
        total += int(n / 2) * pow2((n / 2) as i64);
    }
    exact(total / int(2 * n), "burnside_class_count", n)
}

/// `sum_{d | n} phi(d) 2^(n/d)`, the binary-necklace sum before dividing by n.
pub fn necklace_sum(n: u64) -> BigUint {
    assert!(n >= 1, "necklaces are defined for n >= 1");
    divisors(n)
        .into_iter()
        .map(|d| BigUint::from(totient(d)) << (n / d))
        .sum()
}

/// Binary strings of length n up to rotation.
pub fn binary_necklace_count(n: u64) -> Result<ExactCount, CountError> {
    require(n, 1)?;
    let (q, r) = necklace_sum(n).div_rem(&BigUint::from(n));
    if !r.is_zero() {
        return Err(CountError::Inexact {
            what: "binary_necklace_count",
            n,
            value: format!("{} / {n}", necklace_sum(n)),
        });
    }
    Ok(ExactCount(q))
}

/// `N(n) / N(n - 1)` for each n in `from..=to`, truncated to `digits` decimals.
pub fn growth_ratios(from: u64, to: u64, digits: u32) -> Result<Vec<(u64, String)>, CountError> {
    require(from, 4)?;
    (from..=to)
        .map(|n| {
            let num = isotemporal_class_count(n)?.0;
            let den = isotemporal_class_count(n - 1)?.0;
            Ok((n, decimal_ratio(&num, &den, digits)))
        })
        .collect()
}

/// `num / den` written with `digits` decimals, truncated.
pub fn decimal_ratio(num: &BigUint, den: &BigUint, digits: u32) -> String {
    let scaled = num * BigUint::from(10u8).pow(digits) / den;
    let text = scaled.to_str_radix(10);
    let digits = digits as usize;
    if digits == 0 {
        return text;
    }
    let padded = format!("{text:0>width$}", width = digits + 1);
    let (whole, frac) = padded.split_at(padded.len() - digits);
    format!("{whole}.{frac}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(r: Result<ExactCount, CountError>) -> u64 {
        r.unwrap().to_u64().unwrap()
    }

    #[test]
    fn totients() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(7), 6);
        assert_eq!(totient(12), 4);
        assert_eq!(totient(36), 12);
        assert_eq!(totient(97 * 89), 96 * 88);
    }

    #[test]
    fn totient_matches_gcd_count() {
        for d in 1..300u64 {
            let brute = (1..=d).filter(|&k| k.gcd(&d) == 1).count() as u64;
            assert_eq!(totient(d), brute, "d = {d}");
        }
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1), [1]);
        assert_eq!(divisors(12), [1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(27), [1, 3, 9, 27]);
        assert_eq!(divisors(49), [1, 7, 49]);
    }

    #[test]
    fn footprint_counts() {
        assert_eq!(count(footprint_count(3)), 1);
        assert_eq!(count(footprint_count(4)), 3);
        assert_eq!(count(footprint_count(6)), 7);
        assert_eq!(
            footprint_count(2).unwrap_err(),
            CountError::TooSmall { n: 2, min: 3 }
        );
    }

    #[test]
    fn mirror_footprints() {
        assert_eq!(count(mirror_footprint_count(8)), 6);
        assert_eq!(count(mirror_footprint_count(6)), 3);
        assert_eq!(count(mirror_footprint_count(4)), 2);
        assert_eq!(
            mirror_footprint_count(7).unwrap_err(),
            CountError::OddInput(7)
        );
    }

    #[test]
    fn skewed_rotational_forms() {
        // census: {+0-0, +-+-}, {+-+-+-, +00-00}, and four classes at n = 8
        assert_eq!(count(skewed_rotational_form_count(4)), 2);
        assert_eq!(count(skewed_rotational_form_count(6)), 2);
        assert_eq!(count(skewed_rotational_form_count(8)), 4);
        assert!(skewed_rotational_form_count(9).is_err());
    }

    #[test]
    fn class_counts_from_the_formula() {
        assert_eq!(count(isotemporal_class_count(3)), 1);
        assert_eq!(count(isotemporal_class_count(4)), 3);
        assert_eq!(count(isotemporal_class_count(27)), 2_485_533);
        assert!(isotemporal_class_count(2).is_err());
    }

    #[test]
    fn burnside_counts() {
        let got: Vec<u64> = (3..=10).map(|n| count(burnside_class_count(n))).collect();
        assert_eq!(got, [1, 3, 3, 8, 9, 21, 29, 61]);
    }

    #[test]
    fn necklaces() {
        assert_eq!(count(binary_necklace_count(1)), 2);
        assert_eq!(count(binary_necklace_count(3)), 4);
        assert_eq!(count(binary_necklace_count(6)), 14);
        assert!(binary_necklace_count(0).is_err());
    }

    #[test]
    fn necklaces_match_rotation_orbits() {
        for n in 1..=12u64 {
            let full = (1u64 << n) - 1;
            let rot = |m: u64, r: u64| ((m >> r) | (m << (n - r))) & full;
            let orbits = (0..=full)
                .filter(|&m| (1..n).all(|r| rot(m, r) >= m))
                .count() as u64;
            assert_eq!(count(binary_necklace_count(n)), orbits, "n = {n}");
        }
    }

    #[test]
    fn ratios() {
        let big = |v: u64| BigUint::from(v);
        assert_eq!(decimal_ratio(&big(188), &big(93), 4), "2.0215");
        assert_eq!(decimal_ratio(&big(1), &big(3), 3), "0.333");
        assert_eq!(decimal_ratio(&big(7), &big(7), 0), "1");
        let r = growth_ratios(4, 5, 2).unwrap();
        assert_eq!(r, [(4, "3.00".to_string()), (5, "1.00".to_string())]);
    }
}
