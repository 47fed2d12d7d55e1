//! Sparse multivariate polynomials over a [`Ring`].
//!
//! A [`Scalar`] is a finite sum of terms `c * p1^a1 * … * pn^an` where `c` is
//! an exact base coefficient and the `pi` are the ring's parameters. Terms are
//! kept in a sorted map keyed by monomial (graded lexicographic order) and
//! zero terms are never stored, so equal polynomials compare equal
//! structurally and printing is canonical.

use crate::error::Error;
use crate::ring::{mod_inv, mod_mul, mod_pow, Coeff, Ring};
use crate::Result;
use num::bigint::BigInt;
use num::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector over the ring's parameters, ordered graded-lex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn unit(nparams: usize) -> Monomial {
        Monomial(vec![0; nparams])
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Monomial {
        Monomial(exponents)
    }

    pub fn var(nparams: usize, index: usize) -> Monomial {
        let mut e = vec![0; nparams];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact polynomial scalar: element of `k[p1,…,pn]` with `k` the ring's base
/// field (ℚ or GF(p)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scalar {
    ring: Ring,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Scalar {
    pub fn zero(ring: &Ring) -> Scalar {
        Scalar {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Scalar {
        Scalar::constant(ring, Coeff::one(ring))
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Scalar {
        let mut s = Scalar::zero(ring);
        s.add_term(Monomial::unit(ring.parameters().len()), c);
        s
    }

    pub fn from_int(ring: &Ring, n: i64) -> Scalar {
        Scalar::constant(ring, Coeff::from_i64(ring, n))
    }

    /// The single term `c * m`.
    pub fn monomial_term(ring: &Ring, m: Monomial, c: Coeff) -> Scalar {
        let mut s = Scalar::zero(ring);
        s.add_term(m, c);
        s
    }

    /// The fraction `n/d` as a scalar; in GF(p) this is `n * d^-1`.
    pub fn from_fraction(ring: &Ring, n: i64, d: i64) -> Result<Scalar> {
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        let num = Coeff::from_i64(ring, n);
        let den = Coeff::from_i64(ring, d);
        let inv = den.inv(ring.characteristic())?;
        Ok(Scalar::constant(ring, num.mul(&inv, ring.characteristic())))
    }

    /// The parameter named `name` as a scalar.
    pub fn param(ring: &Ring, name: &str) -> Result<Scalar> {
        let idx = ring
            .param_index(name)
            .ok_or_else(|| Error::UnknownParameter(name.to_string()))?;
        let mut s = Scalar::zero(ring);
        s.add_term(Monomial::var(ring.parameters().len(), idx), Coeff::one(ring));
        Ok(s)
    }

    /// `1/2`, or an error in characteristic 2.
    pub fn half(ring: &Ring) -> Result<Scalar> {
        if ring.characteristic() == 2 {
            return Err(Error::HalfUnavailable);
        }
        Scalar::from_fraction(ring, 1, 2)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| *c == Coeff::one(&self.ring))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_unit())
    }

    /// The base coefficient when the scalar is a (possibly zero) constant.
    pub fn as_constant(&self) -> Option<&Coeff> {
        if self.terms.is_empty() {
            None
        } else if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_unit() {
                Some(c)
            } else {
                None
            }
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    /// Highest term in graded-lex order, if any.
    pub fn leading_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let p = self.ring.characteristic();
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let sum = old.add(&c, p.max(1));
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
        }
    }

    fn same_ring(&self, other: &Scalar) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring.describe(),
                right: other.ring.describe(),
            })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&other.negate())
    }

    pub fn negate(&self) -> Scalar {
        let p = self.ring.characteristic().max(1);
        Scalar {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg(p)))
                .collect(),
        }
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_ring(other)?;
        let p = self.ring.characteristic().max(1);
        let mut out = Scalar::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb, p));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> Scalar {
        let p = self.ring.characteristic().max(1);
        let mut out = Scalar::zero(&self.ring);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.mul(c, p));
        }
        out
    }

    pub fn scale_int(&self, n: i64) -> Scalar {
        self.scale(&Coeff::from_i64(&self.ring, n))
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one(&self.ring);
        for _ in 0..e {
            acc = acc.checked_mul(self).expect("same ring");
        }
        acc
    }

    /// Multiplicative inverse; only nonzero constants are units here.
    pub fn inverse(&self) -> Result<Scalar> {
        match self.as_constant() {
            Some(c) => Ok(Scalar::constant(
                &self.ring,
                c.inv(self.ring.characteristic().max(1))?,
            )),
            None => {
                if self.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Err(Error::NotInvertible(format!(
                        "nonconstant polynomial {self}"
                    )))
                }
            }
        }
    }

    /// Exact polynomial division; errors with [`Error::InexactDivision`] when
    /// `other` does not divide `self`.
    pub fn divide_exact(&self, other: &Scalar) -> Result<Scalar> {
        self.same_ring(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.ring.characteristic().max(1);
        let (gm, gc) = other.leading_term().unwrap();
        let gm = gm.clone();
        let gcinv = gc.inv(p)?;
        let mut rem = self.clone();
        let mut quot = Scalar::zero(&self.ring);
        while let Some((fm, fc)) = rem.leading_term() {
            if !gm.divides(fm) {
                return Err(Error::InexactDivision);
            }
            let qm = gm.quotient_into(fm);
            let qc = fc.mul(&gcinv, p);
            let mut qterm = Scalar::zero(&self.ring);
            qterm.add_term(qm, qc);
            rem = rem.checked_sub(&qterm.checked_mul(other)?)?;
            quot = quot.checked_add(&qterm)?;
        }
        Ok(quot)
    }

    /// Substitute parameters by scalars. Every key must name a parameter of
    /// this ring; parameters not mentioned must exist in the target ring
    /// (inferred from the substitution values, or this ring when the map is
    /// empty).
    pub fn substitute(&self, map: &BTreeMap<String, Scalar>) -> Result<Scalar> {
        let target = match map.values().next() {
            Some(v) => v.ring().clone(),
            None => self.ring.clone(),
        };
        for (name, v) in map {
            if self.ring.param_index(name).is_none() {
                return Err(Error::UnknownParameter(name.clone()));
            }
            if v.ring() != &target {
                return Err(Error::RingMismatch {
                    left: target.describe(),
                    right: v.ring().describe(),
                });
            }
        }
        if self.ring.characteristic() != target.characteristic() {
            return Err(Error::BadCharacteristic {
                expected: self.ring.characteristic().to_string(),
                got: target.characteristic(),
            });
        }
        let mut out = Scalar::zero(&target);
        for (m, c) in &self.terms {
            let mut term = Scalar::constant(&target, lift_coeff(c, &target));
            for (idx, &exp) in m.exponents().iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let name = &self.ring.parameters()[idx];
                let base = match map.get(name) {
                    Some(v) => v.clone(),
                    None => Scalar::param(&target, name)?,
                };
                term = term.checked_mul(&base.pow(exp))?;
            }
            out = out.checked_add(&term)?;
        }
        Ok(out)
    }

    /// Evaluate at a full parameter assignment in GF(p). The scalar's ring
    /// must have characteristic 0 or p; rational coefficients reduce mod p
    /// (their denominators must be invertible).
    pub fn specialize(&self, p: u64, assignment: &[u64]) -> Result<Scalar> {
        let c = self.ring.characteristic();
        if c != 0 && c != p {
            return Err(Error::BadCharacteristic {
                expected: c.to_string(),
                got: p,
            });
        }
        if assignment.len() != self.ring.parameters().len() {
            return Err(Error::InvalidArgument(format!(
                "assignment length {} for {} parameters",
                assignment.len(),
                self.ring.parameters().len()
            )));
        }
        let target = Ring::gf(p)?;
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut v = reduce_mod(c, p)?;
            for (idx, &exp) in m.exponents().iter().enumerate() {
                if exp > 0 {
                    v = mod_mul(v, mod_pow(assignment[idx] % p, exp as u64, p), p);
                }
            }
            acc = (acc + v) % p;
        }
        Ok(Scalar::constant(&target, Coeff::Mod(acc)))
    }
}

fn lift_coeff(c: &Coeff, target: &Ring) -> Coeff {
    match c {
        Coeff::Rat(r) => Coeff::Rat(r.clone()),
        Coeff::Mod(m) => {
            debug_assert!(target.characteristic() != 0);
            Coeff::Mod(*m)
        }
    }
}

fn reduce_mod(c: &Coeff, p: u64) -> Result<u64> {
    match c {
        Coeff::Mod(m) => Ok(m % p),
        Coeff::Rat(r) => {
            let num = bigint_mod(r.numer(), p);
            let den = bigint_mod(r.denom(), p);
            if den == 0 {
                return Err(Error::InvalidArgument(format!(
                    "denominator of {r} vanishes mod {p}"
                )));
            }
            Ok(mod_mul(num, mod_inv(den, p)?, p))
        }
    }
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let mut r = n % &pb;
    if r.is_negative() {
        r += &pb;
    }
    let digits = r.to_u64_digits().1;
    if digits.is_empty() {
        0
    } else {
        digits[0]
    }
}

/// Deterministic assignment of each ring parameter to a residue mod `p`,
/// drawn from a seeded stream in declaration order. With `nonzero` set the
/// residues avoid 0 (useful when parameters must stay invertible).
pub fn specialization_assignment(ring: &Ring, seed: u64, p: u64, nonzero: bool) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ring.parameters()
        .iter()
        .map(|_| {
            if nonzero {
                rng.gen_range(1..p)
            } else {
                rng.gen_range(0..p)
            }
        })
        .collect()
}

macro_rules! binop_impls {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar ring mismatch")
            }
        }
        impl std::ops::$trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$checked(&rhs).expect("scalar ring mismatch")
            }
        }
        impl std::ops::$trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$checked(rhs).expect("scalar ring mismatch")
            }
        }
    };
}

binop_impls!(Add, add, checked_add);
binop_impls!(Sub, sub, checked_sub);
binop_impls!(Mul, mul, checked_mul);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.negate()
    }
}
impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.negate()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let params = self.ring.parameters();
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let (negative, mag) = match c {
                Coeff::Rat(r) => {
                    let neg = r.is_negative();
                    let abs = if neg { -r } else { r.clone() };
                    let s = if abs.denom().is_one() {
                        abs.numer().to_string()
                    } else {
                        format!("{}/{}", abs.numer(), abs.denom())
                    };
                    (neg, s)
                }
                Coeff::Mod(v) => (false, v.to_string()),
            };
            if first {
                if negative {
                    f.write_str("-")?;
                }
                first = false;
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != "1" || m.is_unit() {
                factors.push(mag);
            }
            for (idx, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(params[idx].clone()),
                    _ => factors.push(format!("{}^{}", params[idx], e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn lex(text: &str) -> Result<Lexer> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                toks.push((Tok::Int(text.parse().unwrap()), col));
                continue;
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((Tok::Name(chars[start..i].iter().collect()), col));
                continue;
            }
            _ => {
                return Err(Error::Parse {
                    line: 1,
                    col,
                    msg: format!("unexpected character {c:?}"),
                })
            }
        };
        toks.push((tok, col));
        i += 1;
    }
    Ok(Lexer { toks, pos: 0 })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(_, c)| *c)
            .unwrap_or_else(|| self.toks.last().map(|(_, c)| c + 1).unwrap_or(1))
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_int(&mut self) -> Result<BigInt> {
        let col = self.col();
        match self.next() {
            Some(Tok::Int(n)) => Ok(n),
            other => Err(Error::Parse {
                line: 1,
                col,
                msg: format!("expected integer, found {other:?}"),
            }),
        }
    }
}

impl Scalar {
    /// Parse an expression like `2*m*z^3 - (1/2)*z + 1` in this ring.
    /// Supported syntax: `+ - * ^ / ( )`, integers, integer fractions, and
    /// parameter names; multiplication is always explicit.
    pub fn parse(ring: &Ring, text: &str) -> Result<Scalar> {
        let mut lx = lex(text)?;
        let v = parse_expr(ring, &mut lx)?;
        if let Some(t) = lx.peek() {
            return Err(Error::Parse {
                line: 1,
                col: lx.col(),
                msg: format!("trailing input at {t:?}"),
            });
        }
        Ok(v)
    }
}

fn parse_expr(ring: &Ring, lx: &mut Lexer) -> Result<Scalar> {
    let mut acc = Scalar::zero(ring);
    let mut first = true;
    loop {
        let mut sign = 1i64;
        let mut saw_sign = false;
        while let Some(t) = lx.peek() {
            match t {
                Tok::Plus => {
                    lx.next();
                    saw_sign = true;
                }
                Tok::Minus => {
                    lx.next();
                    sign = -sign;
                    saw_sign = true;
                }
                _ => break,
            }
        }
        if !first && !saw_sign {
            break;
        }
        if first && lx.peek().is_none() && !saw_sign {
            return Err(Error::Parse {
                line: 1,
                col: lx.col(),
                msg: "empty expression".to_string(),
            });
        }
        let term = parse_term(ring, lx)?;
        let term = if sign < 0 { term.negate() } else { term };
        acc = acc.checked_add(&term)?;
        first = false;
        match lx.peek() {
            Some(Tok::Plus) | Some(Tok::Minus) => continue,
            _ => break,
        }
    }
    Ok(acc)
}

fn parse_term(ring: &Ring, lx: &mut Lexer) -> Result<Scalar> {
    let mut acc = parse_factor(ring, lx)?;
    while let Some(Tok::Star) = lx.peek() {
        lx.next();
        let f = parse_factor(ring, lx)?;
        acc = acc.checked_mul(&f)?;
    }
    Ok(acc)
}

fn parse_factor(ring: &Ring, lx: &mut Lexer) -> Result<Scalar> {
    let col = lx.col();
    let base = match lx.next() {
        Some(Tok::Int(n)) => {
            if let Some(Tok::Slash) = lx.peek() {
                lx.next();
                let d = lx.expect_int()?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let num = Coeff::from_bigint(ring, &n);
                let den = Coeff::from_bigint(ring, &d);
                let quot = match (&num, &den) {
                    (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a / b),
                    _ => num.mul(&den.inv(ring.characteristic().max(1))?, ring.characteristic().max(1)),
                };
                Scalar::constant(ring, quot)
            } else {
                Scalar::constant(ring, Coeff::from_bigint(ring, &n))
            }
        }
        Some(Tok::Name(name)) => Scalar::param(ring, &name).map_err(|_| Error::Parse {
            line: 1,
            col,
            msg: format!("unknown parameter {name}"),
        })?,
        Some(Tok::LParen) => {
            let inner = parse_expr(ring, lx)?;
            match lx.next() {
                Some(Tok::RParen) => inner,
                _ => {
                    return Err(Error::Parse {
                        line: 1,
                        col,
                        msg: "unclosed parenthesis".to_string(),
                    })
                }
            }
        }
        other => {
            return Err(Error::Parse {
                line: 1,
                col,
                msg: format!("expected factor, found {other:?}"),
            })
        }
    };
    if let Some(Tok::Caret) = lx.peek() {
        lx.next();
        let e = lx.expect_int()?;
        let e: u32 = e.try_into().map_err(|_| Error::Parse {
            line: 1,
            col,
            msg: "exponent out of range".to_string(),
        })?;
        return Ok(base.pow(e));
    }
    Ok(base)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qq_mz() -> Ring {
        Ring::new(0, &["m", "z"]).unwrap()
    }

    fn random_scalar(ring: &Ring, rng: &mut ChaCha8Rng) -> Scalar {
        let nterms = rng.gen_range(0..5);
        let mut s = Scalar::zero(ring);
        for _ in 0..nterms {
            let mut m = vec![0u32; ring.parameters().len()];
            for e in m.iter_mut() {
                *e = rng.gen_range(0..3);
            }
            let c = rng.gen_range(-6i64..7);
            let term = Scalar::constant(ring, Coeff::from_i64(ring, c));
            let mono = Monomial(m);
            let mut t = Scalar::zero(ring);
            t.add_term(mono, Coeff::one(ring));
            s = s + term * t;
        }
        s
    }

    #[test]
    fn grlex_orders_by_degree_then_lex() {
        let a = Monomial(vec![2, 0]);
        let b = Monomial(vec![1, 2]);
        let c = Monomial(vec![1, 1]);
        assert!(b > a, "degree 3 beats degree 2");
        assert!(a > c, "same degree, first exponent decides");
    }

    #[test]
    fn parse_display_round_trip() {
        let ring = qq_mz();
        for text in [
            "0",
            "1",
            "-1",
            "m",
            "2*m*z^3 - 1",
            "-3/2*m^2 + z",
            "m*z + m + z + 1",
            "7/3",
        ] {
            let s = Scalar::parse(&ring, text).unwrap();
            let printed = s.to_string();
            let again = Scalar::parse(&ring, &printed).unwrap();
            assert_eq!(s, again, "round trip through {printed:?}");
        }
        let s = Scalar::parse(&ring, "2*(m + 1)*z").unwrap();
        assert_eq!(s, Scalar::parse(&ring, "2*m*z + 2*z").unwrap());
        assert!(Scalar::parse(&ring, "q + 1").is_err());
        assert!(Scalar::parse(&ring, "m +").is_err());
        assert!(Scalar::parse(&ring, "(m").is_err());
    }

    #[test]
    fn parse_in_finite_characteristic() {
        let ring = Ring::new(5, &["t"]).unwrap();
        let s = Scalar::parse(&ring, "7*t + 1/2").unwrap();
        assert_eq!(s, Scalar::parse(&ring, "2*t + 3").unwrap());
    }

    #[test]
    fn ring_arithmetic_properties() {
        let rings = [qq_mz(), Ring::new(3, &["g"]).unwrap(), Ring::gf(7).unwrap()];
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let mut checked = 0usize;
        for ring in &rings {
            for _ in 0..400 {
                let a = random_scalar(ring, &mut rng);
                let b = random_scalar(ring, &mut rng);
                let c = random_scalar(ring, &mut rng);
                assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                assert_eq!(&a + &b, &b + &a);
                assert_eq!(&a * &b, &b * &a);
                assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                assert_eq!(&a - &a, Scalar::zero(ring));
                if !b.is_zero() {
                    let prod = &a * &b;
                    assert_eq!(prod.divide_exact(&b).unwrap(), a);
                }
                checked += 1;
            }
        }
        assert!(checked >= 1000);
    }

    #[test]
    fn inexact_division_detected() {
        let ring = qq_mz();
        let m = Scalar::param(&ring, "m").unwrap();
        let z = Scalar::param(&ring, "z").unwrap();
        let f = &m * &m + Scalar::one(&ring);
        assert!(matches!(
            f.divide_exact(&z).unwrap_err(),
            Error::InexactDivision
        ));
        assert!(matches!(
            Scalar::one(&ring).divide_exact(&Scalar::zero(&ring)).unwrap_err(),
            Error::DivisionByZero
        ));
    }

    #[test]
    fn inverse_only_for_constants() {
        let ring = qq_mz();
        let two = Scalar::from_int(&ring, 2);
        assert_eq!(two.inverse().unwrap(), Scalar::from_fraction(&ring, 1, 2).unwrap());
        let m = Scalar::param(&ring, "m").unwrap();
        assert!(matches!(m.inverse().unwrap_err(), Error::NotInvertible(_)));
    }

    #[test]
    fn substitution_is_a_homomorphism() {
        let ring = qq_mz();
        let target = Ring::new(0, &["z"]).unwrap();
        let mut map = BTreeMap::new();
        map.insert(
            "m".to_string(),
            Scalar::parse(&target, "z^2 + 1").unwrap(),
        );
        map.insert("z".to_string(), Scalar::param(&target, "z").unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let a = random_scalar(&ring, &mut rng);
            let b = random_scalar(&ring, &mut rng);
            let lhs = (&a * &b).substitute(&map).unwrap();
            let rhs = &a.substitute(&map).unwrap() * &b.substitute(&map).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn specialization_is_deterministic_and_linear() {
        let ring = qq_mz();
        let a1 = specialization_assignment(&ring, 9, 5, true);
        let a2 = specialization_assignment(&ring, 9, 5, true);
        assert_eq!(a1, a2);
        assert!(a1.iter().all(|&v| v >= 1 && v < 5));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for seed in 0..20u64 {
            let asn = specialization_assignment(&ring, seed, 5, false);
            let a = random_scalar(&ring, &mut rng);
            let b = random_scalar(&ring, &mut rng);
            let lhs = (&a * &b).specialize(5, &asn).unwrap();
            let rhs = a
                .specialize(5, &asn)
                .unwrap()
                .checked_mul(&b.specialize(5, &asn).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn half_unavailable_in_characteristic_two() {
        let ring = Ring::gf(2).unwrap();
        assert!(matches!(Scalar::half(&ring).unwrap_err(), Error::HalfUnavailable));
        let ring3 = Ring::gf(3).unwrap();
        assert_eq!(Scalar::half(&ring3).unwrap(), Scalar::from_int(&ring3, 2));
    }
}
