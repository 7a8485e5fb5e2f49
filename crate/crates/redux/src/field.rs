//! Exact coefficient domains: prime fields GF(p) and the rationals.
//!
//! Every polynomial carries a [`CoefficientField`]; scalar arithmetic is
//! dispatched through the field so that GF(p) residues stay canonical in
//! `[0, p)` and rationals stay in lowest terms. Arbitrary precision
//! throughout: witnesses such as 4^(-2^m) need 2^(m+1)-bit denominators,
//! so fixed-width arithmetic would be unsound.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A coefficient domain: GF(p) for a prime p, or the rational numbers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientField {
    Prime(BigUint),
    Rationals,
}

/// A field element. `Fp` holds the canonical representative in `[0, p)`;
/// `Rat` is always reduced (num-rational keeps lowest terms).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Fp(BigUint),
    Rat(BigRational),
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp(v) => write!(f, "{}", v),
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp(v) => v.is_zero(),
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    /// The rational payload; panics on GF(p) scalars.
    pub fn as_rational(&self) -> &BigRational {
        match self {
            Scalar::Rat(r) => r,
            Scalar::Fp(_) => panic!("expected a rational scalar"),
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::Rat(r)
    }
}

fn is_prime_trial_division(p: &BigUint) -> bool {
    let two = BigUint::from(2u8);
    if p < &two {
        return false;
    }
    if p == &two {
        return true;
    }
    if p.is_even() {
        return false;
    }
    let mut d = BigUint::from(3u8);
    while &d * &d <= *p {
        if (p % &d).is_zero() {
            return false;
        }
        d += 2u8;
    }
    true
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Prime(p) => write!(f, "GF({})", p),
            CoefficientField::Rationals => write!(f, "Q"),
        }
    }
}

impl CoefficientField {
    /// GF(p). Primality is checked by trial division (inputs are desk-scale).
    pub fn prime(p: u64) -> Result<Self> {
        Self::prime_big(BigUint::from(p))
    }

    pub fn prime_big(p: BigUint) -> Result<Self> {
        if is_prime_trial_division(&p) {
            Ok(CoefficientField::Prime(p))
        } else {
            Err(Error::NotPrime(p.to_string()))
        }
    }

    pub fn rationals() -> Self {
        CoefficientField::Rationals
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, CoefficientField::Prime(_))
    }

    /// The modulus of a prime field, if it fits in u64.
    pub fn modulus_u64(&self) -> Option<u64> {
        match self {
            CoefficientField::Prime(p) => p.to_u64(),
            CoefficientField::Rationals => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            CoefficientField::Prime(_) => Scalar::Fp(BigUint::zero()),
            CoefficientField::Rationals => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            CoefficientField::Prime(_) => Scalar::Fp(BigUint::one()),
            CoefficientField::Rationals => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_int(&self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            CoefficientField::Prime(p) => {
                let p_int = BigInt::from(p.clone());
                let r = v.mod_floor(&p_int);
                Scalar::Fp(r.to_biguint().expect("mod_floor is nonnegative"))
            }
            CoefficientField::Rationals => Scalar::Rat(BigRational::from(v.clone())),
        }
    }

    pub fn from_rational(&self, r: &BigRational) -> Result<Scalar> {
        match self {
            CoefficientField::Prime(_) => {
                // n/d maps to n * d^{-1} mod p; the denominator must be a unit.
                let n = self.from_bigint(r.numer());
                let d = self.from_bigint(r.denom());
                self.div(&n, &d)
            }
            CoefficientField::Rationals => Ok(Scalar::Rat(r.clone())),
        }
    }

    /// Parses decimal coefficient strings: `5`, `-3`, `-3/2`.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::BadCoefficient(s.to_string());
        let parse_int = |t: &str| t.parse::<BigInt>().map_err(|_| bad());
        let r = match s.split_once('/') {
            None => BigRational::from(parse_int(s)?),
            Some((n, d)) => {
                let num = parse_int(n)?;
                let den = parse_int(d)?;
                if den.is_zero() {
                    return Err(bad());
                }
                BigRational::new(num, den)
            }
        };
        self.from_rational(&r)
    }

    fn check_fp<'a>(&self, a: &'a Scalar) -> &'a BigUint {
        match a {
            Scalar::Fp(v) => v,
            Scalar::Rat(_) => panic!("rational scalar used with a prime field"),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            CoefficientField::Prime(p) => {
                let s = self.check_fp(a) + self.check_fp(b);
                Scalar::Fp(s % p)
            }
            CoefficientField::Rationals => Scalar::Rat(a.as_rational() + b.as_rational()),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            CoefficientField::Prime(p) => {
                let v = self.check_fp(a);
                if v.is_zero() {
                    Scalar::Fp(BigUint::zero())
                } else {
                    Scalar::Fp(p - v)
                }
            }
            CoefficientField::Rationals => Scalar::Rat(-a.as_rational()),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            CoefficientField::Prime(p) => Scalar::Fp(self.check_fp(a) * self.check_fp(b) % p),
            CoefficientField::Rationals => Scalar::Rat(a.as_rational() * b.as_rational()),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            CoefficientField::Prime(p) => {
                let a = BigInt::from(self.check_fp(a).clone());
                let p_int = BigInt::from(p.clone());
                let ext = a.extended_gcd(&p_int);
                debug_assert!(ext.gcd.is_one());
                let r = ext.x.mod_floor(&p_int);
                Ok(Scalar::Fp(r.to_biguint().expect("mod_floor nonnegative")))
            }
            CoefficientField::Rationals => Ok(Scalar::Rat(a.as_rational().recip())),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, e: u32) -> Scalar {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Number of field elements, if finite and represented as u64.
    pub fn size_u64(&self) -> Option<u64> {
        self.modulus_u64()
    }

    /// The k-th element in canonical enumeration order (0, 1, 2, ...).
    /// Used by the exhaustive oracles; prime fields only.
    pub fn element(&self, k: u64) -> Scalar {
        match self {
            CoefficientField::Prime(_) => self.from_bigint(&BigInt::from(k)),
            CoefficientField::Rationals => Scalar::Rat(BigRational::from(BigInt::from(k))),
        }
    }

    /// The first `r` distinct nonzero elements in canonical order: 1, 2, ..., r.
    /// For GF(p) this requires r < p.
    pub fn first_nonzero_elements(&self, r: usize) -> Result<Vec<Scalar>> {
        if let CoefficientField::Prime(p) = self {
            if BigUint::from(r) >= *p {
                return Err(Error::FieldTooSmall { need: r as u64 });
            }
        }
        Ok((1..=r as u64).map(|k| self.element(k)).collect())
    }

    /// Converts a scalar back to a `BigRational` where that makes sense
    /// (rationals directly; GF(p) via the canonical representative).
    pub fn to_rational(&self, a: &Scalar) -> BigRational {
        match a {
            Scalar::Rat(r) => r.clone(),
            Scalar::Fp(v) => BigRational::from(BigInt::from(v.clone())),
        }
    }

    /// Absolute value as a rational; GF(p) scalars use the canonical
    /// representative (always nonnegative).
    pub fn abs_rational(&self, a: &Scalar) -> BigRational {
        self.to_rational(a).abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_by_trial_division() {
        assert!(CoefficientField::prime(2).is_ok());
        assert!(CoefficientField::prime(67).is_ok());
        assert!(CoefficientField::prime(1).is_err());
        assert!(CoefficientField::prime(91).is_err()); // 7 * 13
    }

    #[test]
    fn gf3_arithmetic() {
        let f = CoefficientField::prime(3).unwrap();
        let two = f.from_int(2);
        // 2 + 2 = 4 = 1 mod 3
        assert_eq!(f.add(&two, &two), f.one());
        assert_eq!(f.mul(&two, &two), f.one());
        assert_eq!(f.neg(&f.one()), two);
    }

    #[test]
    fn gf67_inverse() {
        let f = CoefficientField::prime(67).unwrap();
        for k in 1..67 {
            let a = f.element(k);
            let inv = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &inv), f.one());
        }
        assert!(f.inv(&f.zero()).is_err());
    }

    #[test]
    fn rational_parse_and_reduce() {
        let f = CoefficientField::rationals();
        let x = f.parse("-6/4").unwrap();
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!(f.parse("5").unwrap().to_string(), "5");
        assert!(f.parse("1/0").is_err());
        assert!(f.parse("abc").is_err());
    }

    #[test]
    fn negative_coefficient_mod_p() {
        let f = CoefficientField::prime(67).unwrap();
        assert_eq!(f.parse("-1").unwrap(), f.from_int(66));
        // -3/2 = -3 * inverse(2) = 64 * 34 = 2176 mod 67 = 32
        let v = f.parse("-3/2").unwrap();
        let two = f.from_int(2);
        assert_eq!(f.mul(&v, &two), f.from_int(-3));
    }
}
