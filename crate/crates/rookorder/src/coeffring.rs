//! Exact sparse polynomial arithmetic over the integers in the deformation
//! variable `q` and the relation coefficients `alpha0..alphaS`.
//!
//! Every coefficient produced anywhere in this crate lives in the ring
//! `Z[q, alpha0, ..., alphaS]`. The degree bound `s` of the relation
//! polynomial is fixed per [`Ring`]; mixing values from rings with different
//! `s` is an error, never a silent promotion.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("ring mismatch: left has s={left}, right has s={right}")]
    RingMismatch { left: usize, right: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("expected {expected} specialization values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

/// The coefficient ring `Z[q, alpha0..alphaS]`, identified by the degree
/// bound `s` of the relation polynomial `f`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Ring {
    s: usize,
}

/// Exponent vector of one monomial: a power of `q` plus one power per
/// `alpha` variable. `alpha_exps.len()` always equals `s + 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub q_exp: u32,
    pub alpha_exps: Vec<u32>,
}

impl Monomial {
    fn unit(nvars: usize) -> Self {
        Monomial {
            q_exp: 0,
            alpha_exps: vec![0; nvars],
        }
    }

    pub fn total_degree(&self) -> u64 {
        self.q_exp as u64 + self.alpha_exps.iter().map(|&e| e as u64).sum::<u64>()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            q_exp: self.q_exp + other.q_exp,
            alpha_exps: self
                .alpha_exps
                .iter()
                .zip(&other.alpha_exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

// Graded lexicographic order on (q_exp, alpha0, ..., alphaS): total degree
// first, then the exponent vector. This fixes the canonical term order used
// for serialization.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.q_exp.cmp(&other.q_exp))
            .then_with(|| self.alpha_exps.cmp(&other.alpha_exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse polynomial in `Z[q, alpha0..alphaS]`. The zero polynomial has an
/// empty term map; stored coefficients are never zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoeffPoly {
    s: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Ring {
    pub fn new(s: usize) -> Ring {
        Ring { s }
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Number of alpha variables, `s + 1`.
    pub fn nvars(&self) -> usize {
        self.s + 1
    }

    pub fn zero(&self) -> CoeffPoly {
        CoeffPoly {
            s: self.s,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> CoeffPoly {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> CoeffPoly {
        self.bigint(BigInt::from(n))
    }

    pub fn bigint(&self, n: BigInt) -> CoeffPoly {
        let mut p = self.zero();
        if !n.is_zero() {
            p.terms.insert(Monomial::unit(self.nvars()), n);
        }
        p
    }

    pub fn q(&self) -> CoeffPoly {
        self.q_pow(1)
    }

    pub fn q_pow(&self, e: u32) -> CoeffPoly {
        let mut key = Monomial::unit(self.nvars());
        key.q_exp = e;
        let mut p = self.zero();
        p.terms.insert(key, BigInt::one());
        p
    }

    /// The variable `alpha_i`. Panics if `i > s`; an alpha index beyond the
    /// ring's degree bound is a programming error.
    pub fn alpha(&self, i: usize) -> CoeffPoly {
        self.alpha_pow(i, 1)
    }

    pub fn alpha_pow(&self, i: usize, e: u32) -> CoeffPoly {
        assert!(
            i <= self.s,
            "alpha index {i} exceeds ring degree bound {}",
            self.s
        );
        let mut key = Monomial::unit(self.nvars());
        key.alpha_exps[i] = e;
        let mut p = self.zero();
        p.terms.insert(key, BigInt::one());
        p
    }

    pub fn monomial(&self, coeff: BigInt, q_exp: u32, alpha_exps: &[u32]) -> CoeffPoly {
        assert_eq!(
            alpha_exps.len(),
            self.nvars(),
            "alpha exponent vector length"
        );
        let mut p = self.zero();
        if !coeff.is_zero() {
            p.terms.insert(
                Monomial {
                    q_exp,
                    alpha_exps: alpha_exps.to_vec(),
                },
                coeff,
            );
        }
        p
    }

    /// The q-integer `[n]_q = 1 + q + ... + q^{n-1}`; `[0]_q = 0`.
    pub fn q_int(&self, n: u32) -> CoeffPoly {
        let mut p = self.zero();
        for e in 0..n {
            p.terms.insert(
                Monomial {
                    q_exp: e,
                    alpha_exps: vec![0; self.nvars()],
                },
                BigInt::one(),
            );
        }
        p
    }

    /// The Gaussian binomial coefficient as a polynomial in `q`, via the
    /// Pascal-type recurrence `[m,k]_q = [m-1,k-1]_q + q^k [m-1,k]_q`. The
    /// recurrence never leaves the polynomial ring.
    pub fn q_binomial(&self, m: u32, k: u32) -> Result<CoeffPoly, CoeffError> {
        if k > m {
            return Err(CoeffError::Domain(format!(
                "q-binomial requires k <= m, got m={m}, k={k}"
            )));
        }
        // row[j] = binom(i, j)_q while iterating i = 0..=m
        let mut row: Vec<CoeffPoly> = vec![self.one()];
        for _i in 1..=m {
            let mut next = Vec::with_capacity(row.len() + 1);
            next.push(self.one());
            for j in 1..row.len() {
                next.push(&row[j - 1] + &self.q_pow(j as u32).mul(&row[j]));
            }
            next.push(self.one());
            row = next;
        }
        Ok(row[k as usize].clone())
    }

    /// Parse a polynomial expression: integers, `q`, `alphaK` (aliases `aK`,
    /// `mu` = alpha0, `nu` = alpha1), `+`, `-`, `*`, `^`, parentheses.
    pub fn parse(&self, text: &str) -> Result<CoeffPoly, CoeffError> {
        Parser {
            ring: *self,
            bytes: text.as_bytes(),
            pos: 0,
        }
        .parse_all()
    }
}

impl CoeffPoly {
    pub fn ring(&self) -> Ring {
        Ring { s: self.s }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.total_degree() == 0 && c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    fn check_ring(&self, other: &CoeffPoly) -> Result<(), CoeffError> {
        if self.s != other.s {
            return Err(CoeffError::RingMismatch {
                left: self.s,
                right: other.s,
            });
        }
        Ok(())
    }

    fn add_term(&mut self, key: Monomial, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &CoeffPoly) -> Result<CoeffPoly, CoeffError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (key, coeff) in &other.terms {
            out.add_term(key.clone(), coeff);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &CoeffPoly) -> Result<CoeffPoly, CoeffError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &CoeffPoly) -> Result<CoeffPoly, CoeffError> {
        self.check_ring(other)?;
        let mut out = self.ring().zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                out.add_term(ka.mul(kb), &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &CoeffPoly) -> CoeffPoly {
        self.try_add(other).expect("ring mismatch in add")
    }

    pub fn sub(&self, other: &CoeffPoly) -> CoeffPoly {
        self.try_sub(other).expect("ring mismatch in sub")
    }

    pub fn mul(&self, other: &CoeffPoly) -> CoeffPoly {
        self.try_mul(other).expect("ring mismatch in mul")
    }

    pub fn neg(&self) -> CoeffPoly {
        CoeffPoly {
            s: self.s,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> CoeffPoly {
        if factor.is_zero() {
            return self.ring().zero();
        }
        CoeffPoly {
            s: self.s,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * factor))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> CoeffPoly {
        let mut out = self.ring().one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coeff_of(&self, q_exp: u32, alpha_exps: &[u32]) -> BigInt {
        let key = Monomial {
            q_exp,
            alpha_exps: alpha_exps.to_vec(),
        };
        self.terms.get(&key).cloned().unwrap_or_else(BigInt::zero)
    }

    /// If the polynomial is a constant (including zero), return it.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            return Some(BigInt::zero());
        }
        if self.terms.len() == 1 {
            let (key, coeff) = self.terms.iter().next().unwrap();
            if key.total_degree() == 0 {
                return Some(coeff.clone());
            }
        }
        None
    }

    /// Substitute an integer value for `q`, keeping the alphas symbolic.
    pub fn specialize_q(&self, q_val: &BigInt) -> CoeffPoly {
        let ring = self.ring();
        let mut out = ring.zero();
        for (key, coeff) in &self.terms {
            let folded = coeff * q_val.pow(key.q_exp);
            let mut new_key = key.clone();
            new_key.q_exp = 0;
            out.add_term(new_key, &folded);
        }
        out
    }

    /// Substitute integer values for all alphas, keeping `q` symbolic.
    pub fn specialize_alphas(&self, vals: &[BigInt]) -> Result<CoeffPoly, CoeffError> {
        if vals.len() != self.s + 1 {
            return Err(CoeffError::LengthMismatch {
                expected: self.s + 1,
                got: vals.len(),
            });
        }
        let ring = self.ring();
        let mut out = ring.zero();
        for (key, coeff) in &self.terms {
            let mut folded = coeff.clone();
            for (i, &e) in key.alpha_exps.iter().enumerate() {
                folded *= vals[i].pow(e);
            }
            let mut new_key = key.clone();
            new_key.alpha_exps = vec![0; self.s + 1];
            out.add_term(new_key, &folded);
        }
        Ok(out)
    }

    /// Exact rational evaluation at `q = q_val`, `alpha_i = alpha_vals[i]`.
    pub fn evaluate(
        &self,
        q_val: &BigRational,
        alpha_vals: &[BigRational],
    ) -> Result<BigRational, CoeffError> {
        if alpha_vals.len() != self.s + 1 {
            return Err(CoeffError::LengthMismatch {
                expected: self.s + 1,
                got: alpha_vals.len(),
            });
        }
        let mut acc = BigRational::zero();
        for (key, coeff) in &self.terms {
            let mut term = BigRational::from_integer(coeff.clone());
            term *= pow_rational(q_val, key.q_exp);
            for (i, &e) in key.alpha_exps.iter().enumerate() {
                term *= pow_rational(&alpha_vals[i], e);
            }
            acc += term;
        }
        Ok(acc)
    }
}

fn pow_rational(base: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

impl std::ops::Add for &CoeffPoly {
    type Output = CoeffPoly;
    fn add(self, rhs: &CoeffPoly) -> CoeffPoly {
        CoeffPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &CoeffPoly {
    type Output = CoeffPoly;
    fn sub(self, rhs: &CoeffPoly) -> CoeffPoly {
        CoeffPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &CoeffPoly {
    type Output = CoeffPoly;
    fn mul(self, rhs: &CoeffPoly) -> CoeffPoly {
        CoeffPoly::mul(self, rhs)
    }
}

impl std::ops::Neg for &CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        CoeffPoly::neg(self)
    }
}

/// Canonical text form: ` + `-joined monomials in canonical order, each as
/// `c * q^a * alpha0^e0 * ...` with zero exponents omitted and exponent 1
/// written bare. The zero polynomial renders as `0`.
impl fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (key, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", coeff)?;
            if key.q_exp == 1 {
                write!(f, " * q")?;
            } else if key.q_exp > 1 {
                write!(f, " * q^{}", key.q_exp)?;
            }
            for (i, &e) in key.alpha_exps.iter().enumerate() {
                if e == 1 {
                    write!(f, " * alpha{}", i)?;
                } else if e > 1 {
                    write!(f, " * alpha{}^{}", i, e)?;
                }
            }
        }
        Ok(())
    }
}

// Recursive-descent parser for polynomial expressions. The canonical text
// form is a subset of the accepted grammar, so Display/parse round-trips.
struct Parser<'a> {
    ring: Ring,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn parse_all(mut self) -> Result<CoeffPoly, CoeffError> {
        let p = self.expr()?;
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(p)
    }

    fn err(&self, message: &str) -> CoeffError {
        CoeffError::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<CoeffPoly, CoeffError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<CoeffPoly, CoeffError> {
        let mut negate = false;
        while let Some(c) = self.peek() {
            match c {
                b'-' => {
                    negate = !negate;
                    self.pos += 1;
                }
                b'+' => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                // juxtaposition: "(1+q)(1+q)" or "2 q"
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    acc = &acc * &self.factor()?;
                }
                _ => break,
            }
        }
        Ok(if negate { acc.neg() } else { acc })
    }

    fn factor(&mut self) -> Result<CoeffPoly, CoeffError> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.uint()?;
            if e > 10_000 {
                return Err(self.err("exponent too large"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<CoeffPoly, CoeffError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                let n: BigInt = text.parse().map_err(|_| self.err("bad integer"))?;
                Ok(self.ring.bigint(n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                self.variable(name, start)
            }
            _ => Err(self.err("expected a factor")),
        }
    }

    fn variable(&mut self, name: &str, offset: usize) -> Result<CoeffPoly, CoeffError> {
        let alpha_index = |idx: &str| idx.parse::<usize>().ok();
        let poly = match name {
            "q" => Some(self.ring.q()),
            "mu" => Some(self.ring.alpha(0)),
            "nu" if self.ring.s() >= 1 => Some(self.ring.alpha(1)),
            _ if name.starts_with("alpha") => alpha_index(&name[5..])
                .and_then(|i| (i <= self.ring.s()).then(|| self.ring.alpha(i))),
            _ if name.starts_with('a') => alpha_index(&name[1..])
                .and_then(|i| (i <= self.ring.s()).then(|| self.ring.alpha(i))),
            _ => None,
        };
        poly.ok_or(CoeffError::Parse {
            offset,
            message: format!("unknown variable `{name}` in ring with s={}", self.ring.s()),
        })
    }

    fn uint(&mut self) -> Result<u32, CoeffError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("bad integer"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring1() -> Ring {
        Ring::new(1)
    }

    #[test]
    fn add_cancellation() {
        let r = ring1();
        let sum = &(&r.q() + &r.one()) + &r.int(-1);
        assert_eq!(sum, r.q());
    }

    #[test]
    fn add_identity() {
        let r = ring1();
        let p = r.parse("2 q + nu").unwrap();
        assert_eq!(&r.zero() + &p, p);
    }

    #[test]
    fn add_merges_like_monomials() {
        // mu*nu + q*mu*nu = (1+q) mu nu: like monomials combine
        let r = ring1();
        let munu = &r.alpha(0) * &r.alpha(1);
        let sum = &munu + &(&r.q() * &munu);
        assert_eq!(sum, r.parse("(1+q) mu nu").unwrap());
    }

    #[test]
    fn mul_examples() {
        let r = ring1();
        assert_eq!(&r.q_pow(2) * &r.q_pow(3), r.q_pow(5));
        let one_q = r.parse("1+q").unwrap();
        assert_eq!(&one_q * &one_q, r.parse("1 + 2q + q^2").unwrap());
        // weight product of the 2-rook/3-file mixed placement: q^8 mu^2 nu^3
        let w = r.parse("mu * nu * q^8 * mu * nu^2").unwrap();
        assert_eq!(w, r.parse("q^8 mu^2 nu^3").unwrap());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Ring::new(1).q();
        let b = Ring::new(2).q();
        assert!(matches!(
            a.try_add(&b),
            Err(CoeffError::RingMismatch { left: 1, right: 2 })
        ));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn q_int_values() {
        let r = ring1();
        assert!(r.q_int(0).is_zero());
        assert_eq!(r.q_int(2), r.parse("1+q").unwrap());
        assert_eq!(r.q_int(3), r.parse("1+q+q^2").unwrap());
    }

    #[test]
    fn q_int_at_one_counts() {
        let r = ring1();
        for n in 0..=50u32 {
            let v = r.q_int(n).specialize_q(&BigInt::from(1));
            assert_eq!(v.as_constant().unwrap(), BigInt::from(n));
        }
    }

    #[test]
    fn q_binomial_values() {
        let r = ring1();
        assert_eq!(r.q_binomial(4, 0).unwrap(), r.one());
        assert_eq!(
            r.q_binomial(4, 2).unwrap(),
            r.parse("1 + q + 2q^2 + q^3 + q^4").unwrap()
        );
        assert_eq!(r.q_binomial(3, 1).unwrap(), r.parse("1+q+q^2").unwrap());
        assert!(r.q_binomial(2, 3).is_err());
    }

    #[test]
    fn q_binomial_at_one_is_binomial() {
        let r = ring1();
        for m in 0..=20u32 {
            let mut expect = BigInt::one();
            for k in 0..=m {
                let v = r
                    .q_binomial(m, k)
                    .unwrap()
                    .specialize_q(&BigInt::from(1))
                    .as_constant()
                    .unwrap();
                assert_eq!(v, expect, "binom({m},{k})");
                // next binomial along the row
                if k < m {
                    expect = expect * BigInt::from(m - k) / BigInt::from(k + 1);
                }
            }
        }
    }

    #[test]
    fn evaluate_examples() {
        let r = ring1();
        let rat = |n: i64| BigRational::from_integer(BigInt::from(n));
        // (2+q) mu nu at q=1, mu=nu=1 -> 3 = S(3,2)|s(2,1)|
        let p = r.parse("(2+q) mu nu").unwrap();
        assert_eq!(p.evaluate(&rat(1), &[rat(1), rat(1)]).unwrap(), rat(3));
        assert_eq!(
            r.q_pow(3).evaluate(&rat(1), &[rat(0), rat(0)]).unwrap(),
            rat(1)
        );
        // (q + 2q^2) nu at q=2, nu=3 -> 30
        let p = r.parse("(q + 2q^2) nu").unwrap();
        assert_eq!(p.evaluate(&rat(2), &[rat(0), rat(3)]).unwrap(), rat(30));
        // wrong specialization length
        assert!(p.evaluate(&rat(1), &[rat(1)]).is_err());
    }

    #[test]
    fn display_canonical_form() {
        let r = ring1();
        let p = r.parse("(2+q) mu nu").unwrap();
        assert_eq!(
            p.to_string(),
            "2 * alpha0 * alpha1 + 1 * q * alpha0 * alpha1"
        );
        assert_eq!(r.zero().to_string(), "0");
        assert_eq!(r.parse("q^2").unwrap().to_string(), "1 * q^2");
    }

    #[test]
    fn specialize_alphas_examples() {
        let r = Ring::new(2);
        let p = r.parse("q a2 + 3 a0 a1").unwrap();
        let sub = p
            .specialize_alphas(&[BigInt::from(1), BigInt::from(0), BigInt::from(1)])
            .unwrap();
        assert_eq!(sub, r.q());
        assert!(p.specialize_alphas(&[BigInt::one()]).is_err());
    }

    fn arb_poly(s: usize, max_terms: usize, max_deg: u32) -> impl Strategy<Value = CoeffPoly> {
        let term = (
            0..=max_deg,
            proptest::collection::vec(0..=max_deg, s + 1),
            -1_000_000i64..=1_000_000,
        );
        proptest::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
            let ring = Ring::new(s);
            let mut acc = ring.zero();
            for (qe, ae, c) in terms {
                acc = &acc + &ring.monomial(BigInt::from(c), qe, &ae);
            }
            acc
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(1, 5, 6), b in arb_poly(1, 5, 6), c in arb_poly(1, 5, 6)) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn display_parse_round_trip(p in arb_poly(2, 6, 5)) {
            let ring = p.ring();
            let reparsed = ring.parse(&p.to_string()).unwrap();
            prop_assert_eq!(reparsed, p);
        }
    }
}
