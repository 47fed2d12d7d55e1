//! Coefficient ring descriptors and base coefficients.
//!
//! A ring is `k[p1,…,pn]` where `k` is ℚ (characteristic 0) or the prime
//! field GF(p), and `p1,…,pn` are named commuting parameters. The descriptor
//! is immutable and shared behind an `Arc`; two rings are equal when their
//! characteristic and parameter lists agree.

use crate::error::Error;
use crate::Result;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, PartialEq, Eq)]
struct RingInner {
    characteristic: u64,
    parameters: Vec<String>,
}

/// Shared, immutable coefficient ring descriptor.
#[derive(Debug, Clone)]
pub struct Ring(Arc<RingInner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for Ring {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    /// Ring with the given characteristic (0 or a prime) and parameter names.
    pub fn new(characteristic: u64, parameters: &[&str]) -> Result<Ring> {
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(Error::InvalidArgument(format!(
                "characteristic must be 0 or prime, got {characteristic}"
            )));
        }
        let mut seen = Vec::new();
        for p in parameters {
            if !valid_name(p) {
                return Err(Error::InvalidArgument(format!("bad parameter name {p:?}")));
            }
            if seen.contains(p) {
                return Err(Error::InvalidArgument(format!("duplicate parameter {p}")));
            }
            seen.push(p);
        }
        Ok(Ring(Arc::new(RingInner {
            characteristic,
            parameters: parameters.iter().map(|s| s.to_string()).collect(),
        })))
    }

    /// The rational numbers, no parameters.
    pub fn rationals() -> Ring {
        Ring::new(0, &[]).expect("valid")
    }

    /// The prime field GF(p), no parameters.
    pub fn gf(p: u64) -> Result<Ring> {
        Ring::new(p, &[])
    }

    pub fn characteristic(&self) -> u64 {
        self.0.characteristic
    }

    pub fn parameters(&self) -> &[String] {
        &self.0.parameters
    }

    pub fn param_index(&self, name: &str) -> Option<usize> {
        self.0.parameters.iter().position(|p| p == name)
    }

    pub fn is_parametric(&self) -> bool {
        !self.0.parameters.is_empty()
    }

    /// True when the parameter-free part is a field element domain we can
    /// invert in (always true: ℚ or GF(p)).
    pub fn is_field_when_constant(&self) -> bool {
        true
    }

    /// Short human-readable form, e.g. `QQ[m,z]` or `GF(5)`.
    pub fn describe(&self) -> String {
        let base = if self.0.characteristic == 0 {
            "QQ".to_string()
        } else {
            format!("GF({})", self.0.characteristic)
        };
        if self.0.parameters.is_empty() {
            base
        } else {
            format!("{base}[{}]", self.0.parameters.join(","))
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Base coefficient: an exact rational (characteristic 0) or a residue
/// mod p (characteristic p). The ring is carried alongside by [`crate::Scalar`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coeff {
    Rat(BigRational),
    Mod(u64),
}

impl Coeff {
    pub fn zero(ring: &Ring) -> Coeff {
        if ring.characteristic() == 0 {
            Coeff::Rat(BigRational::zero())
        } else {
            Coeff::Mod(0)
        }
    }

    pub fn one(ring: &Ring) -> Coeff {
        if ring.characteristic() == 0 {
            Coeff::Rat(BigRational::one())
        } else {
            Coeff::Mod(1)
        }
    }

    pub fn from_bigint(ring: &Ring, n: &BigInt) -> Coeff {
        let p = ring.characteristic();
        if p == 0 {
            Coeff::Rat(BigRational::from_integer(n.clone()))
        } else {
            let pb = BigInt::from(p);
            let mut r = n % &pb;
            if r.is_negative() {
                r += &pb;
            }
            let digits = r.to_u64_digits().1;
            Coeff::Mod(if digits.is_empty() { 0 } else { digits[0] })
        }
    }

    pub fn from_i64(ring: &Ring, n: i64) -> Coeff {
        Coeff::from_bigint(ring, &BigInt::from(n))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Mod(m) => *m == 0,
        }
    }

    pub fn add(&self, other: &Coeff, p: u64) -> Coeff {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a + b),
            (Coeff::Mod(a), Coeff::Mod(b)) => Coeff::Mod(mod_add(*a, *b, p)),
            _ => unreachable!("coefficient kind mismatch"),
        }
    }

    pub fn neg(&self, p: u64) -> Coeff {
        match self {
            Coeff::Rat(a) => Coeff::Rat(-a),
            Coeff::Mod(a) => Coeff::Mod(if *a == 0 { 0 } else { p - a }),
        }
    }

    pub fn mul(&self, other: &Coeff, p: u64) -> Coeff {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a * b),
            (Coeff::Mod(a), Coeff::Mod(b)) => Coeff::Mod(mod_mul(*a, *b, p)),
            _ => unreachable!("coefficient kind mismatch"),
        }
    }

    /// Multiplicative inverse; `Err` on zero.
    pub fn inv(&self, p: u64) -> Result<Coeff> {
        match self {
            Coeff::Rat(a) => {
                if a.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Coeff::Rat(a.recip()))
                }
            }
            Coeff::Mod(a) => {
                if *a == 0 {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Coeff::Mod(mod_inv(*a, p)?))
                }
            }
        }
    }
}

pub fn mod_add(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, p);
        }
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    acc
}

pub fn mod_inv(a: u64, p: u64) -> Result<u64> {
    if a % p == 0 {
        return Err(Error::DivisionByZero);
    }
    // p is prime, so Fermat's little theorem applies.
    Ok(mod_pow(a, p - 2, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_equality_is_structural() {
        let a = Ring::new(5, &["x", "y"]).unwrap();
        let b = Ring::new(5, &["x", "y"]).unwrap();
        let c = Ring::new(5, &["y", "x"]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_ne!(a, Ring::rationals());
    }

    #[test]
    fn rejects_composite_characteristic_and_bad_names() {
        assert!(Ring::new(6, &[]).is_err());
        assert!(Ring::new(0, &["2x"]).is_err());
        assert!(Ring::new(0, &["x", "x"]).is_err());
    }

    #[test]
    fn mod_inverse_round_trips() {
        for p in [2u64, 3, 5, 7, 101] {
            for a in 1..p {
                let inv = mod_inv(a, p).unwrap();
                assert_eq!(mod_mul(a, inv, p), 1, "a={a} p={p}");
            }
        }
        assert!(mod_inv(0, 5).is_err());
    }

    #[test]
    fn describe_forms() {
        assert_eq!(Ring::rationals().describe(), "QQ");
        assert_eq!(Ring::gf(3).unwrap().describe(), "GF(3)");
        assert_eq!(Ring::new(0, &["m", "z"]).unwrap().describe(), "QQ[m,z]");
    }
}
