//! Sparse multivariate polynomials in `z_1, ..., z_k` and `q` with
//! arbitrary-precision integer coefficients.
//!
//! Terms are kept merged and free of zero coefficients, ordered by graded
//! lexicographic order on the exponent vector `(z_1, ..., z_k, q)`. Formatting
//! and iteration go from the highest term down.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector `(z_1, ..., z_k, q)`; ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Exps(Box<[u64]>);

impl Exps {
    fn degree(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl Ord for Exps {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exps {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A single term `coeff * z_1^{z[0]} ... z_k^{z[k-1]} * q^q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: BigInt,
    pub z: Vec<u64>,
    pub q: u64,
}

impl Monomial {
    pub fn new(coeff: impl Into<BigInt>, z: Vec<u64>, q: u64) -> Self {
        Monomial {
            coeff: coeff.into(),
            z,
            q,
        }
    }

    fn exps(&self) -> Exps {
        let mut v = Vec::with_capacity(self.z.len() + 1);
        v.extend_from_slice(&self.z);
        v.push(self.q);
        Exps(v.into_boxed_slice())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.z.len();
        let p = Polynomial::from_monomials(k, [self.clone()]).map_err(|_| fmt::Error)?;
        write!(f, "{p}")
    }
}

/// Canonical sparse polynomial over the integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    k: usize,
    terms: BTreeMap<Exps, BigInt>,
}

impl Polynomial {
    pub fn zero(k: usize) -> Self {
        Polynomial {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(k: usize) -> Self {
        Self::constant(k, 1)
    }

    pub fn constant(k: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut p = Self::zero(k);
        if !c.is_zero() {
            p.terms.insert(Exps(vec![0; k + 1].into_boxed_slice()), c);
        }
        p
    }

    /// The variable `z_index` (1-based).
    pub fn z_var(k: usize, index: usize) -> Result<Self> {
        if index == 0 || index > k {
            return Err(Error::Domain(format!("z{index} is not a variable of a ring with k = {k}")));
        }
        let mut z = vec![0; k];
        z[index - 1] = 1;
        Self::from_monomials(k, [Monomial::new(1, z, 0)])
    }

    pub fn q_var(k: usize) -> Self {
        Self::from_exps(k, vec![0; k], 1, BigInt::one())
    }

    pub(crate) fn from_exps(k: usize, z: Vec<u64>, q: u64, coeff: BigInt) -> Self {
        debug_assert_eq!(z.len(), k);
        let mut p = Self::zero(k);
        if !coeff.is_zero() {
            let mut e = z;
            e.push(q);
            p.terms.insert(Exps(e.into_boxed_slice()), coeff);
        }
        p
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_monomials(k: usize, terms: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut p = Self::zero(k);
        for m in terms {
            if m.z.len() != k {
                return Err(Error::RingMismatch {
                    left: k,
                    right: m.z.len(),
                });
            }
            p.add_term(m.exps(), m.coeff);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exps, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Number of z-variables of the ring.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order (highest first).
    pub fn terms(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().rev().map(|(e, c)| Monomial {
            coeff: c.clone(),
            z: e.0[..self.k].to_vec(),
            q: e.0[self.k],
        })
    }

    pub fn leading_term(&self) -> Option<Monomial> {
        self.terms().next()
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.k != other.k {
            return Err(Error::RingMismatch {
                left: self.k,
                right: other.k,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.k));
        }
        let mut acc: HashMap<Box<[u64]>, BigInt> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Box<[u64]> = ea.0.iter().zip(eb.0.iter()).map(|(x, y)| x + y).collect();
                let prod = ca * cb;
                acc.entry(e)
                    .and_modify(|v| *v += &prod)
                    .or_insert(prod);
            }
        }
        Ok(Self::from_raw(self.k, acc))
    }

    pub(crate) fn from_raw(k: usize, raw: HashMap<Box<[u64]>, BigInt>) -> Self {
        let terms = raw
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (Exps(e), c))
            .collect();
        Polynomial { k, terms }
    }

    pub(crate) fn from_counts(k: usize, raw: HashMap<Box<[u64]>, u64>) -> Self {
        let terms = raw
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(e, c)| (Exps(e), BigInt::from(c)))
            .collect();
        Polynomial { k, terms }
    }

    /// Multiplies by `coeff * z^z * q^q` without a general product.
    pub(crate) fn mul_term(&self, z: &[u64], q: u64, coeff: &BigInt) -> Self {
        debug_assert_eq!(z.len(), self.k);
        if coeff.is_zero() {
            return Self::zero(self.k);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut v = e.0.clone();
                for (x, d) in v.iter_mut().zip(z) {
                    *x += d;
                }
                v[self.k] += q;
                (Exps(v), c * coeff)
            })
            .collect();
        Polynomial { k: self.k, terms }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.mul_term(&vec![0; self.k], 0, c)
    }

    /// Substitutes `z_i -> z_i * q^{e_i}` for every `i`.
    pub fn substitute_z_scale(&self, e: &[i64]) -> Result<Self> {
        if e.len() != self.k {
            return Err(Error::RingMismatch {
                left: self.k,
                right: e.len(),
            });
        }
        if let Some((i, &v)) = e.iter().enumerate().find(|(_, &v)| v < 0) {
            return Err(Error::InvalidShift {
                index: i + 1,
                value: v,
            });
        }
        Ok(self.shift_unchecked(&e.iter().map(|&v| v as u64).collect::<Vec<_>>()))
    }

    pub(crate) fn shift_unchecked(&self, e: &[u64]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(ex, c)| {
                let mut v = ex.0.clone();
                let extra: u64 = v[..self.k].iter().zip(e).map(|(a, b)| a * b).sum();
                v[self.k] += extra;
                (Exps(v), c.clone())
            })
            .collect();
        Polynomial { k: self.k, terms }
    }

    /// Embeds into a ring with `k >= self.k` z-variables.
    pub fn widen(&self, k: usize) -> Result<Self> {
        if k < self.k {
            return Err(Error::RingMismatch {
                left: self.k,
                right: k,
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut v = e.0[..self.k].to_vec();
                v.resize(k, 0);
                v.push(e.0[self.k]);
                (Exps(v.into_boxed_slice()), c.clone())
            })
            .collect();
        Ok(Polynomial { k, terms })
    }

    /// Exact integer value at the given point.
    pub fn evaluate(&self, z_vals: &[i64], q_val: i64) -> Result<BigInt> {
        if z_vals.len() != self.k {
            return Err(Error::RingMismatch {
                left: self.k,
                right: z_vals.len(),
            });
        }
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (&base, &exp) in z_vals.iter().zip(e.0.iter()) {
                t *= pow(base, exp);
            }
            t *= pow(q_val, e.0[self.k]);
            total += t;
        }
        Ok(total)
    }

    /// Value at `z_i = 1`, `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Parses the canonical text form; see [`Polynomial`]'s `Display`.
    pub fn parse(s: &str, k: usize) -> Result<Self> {
        Parser::new(s, k).polynomial()
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            k: self.k,
            terms: self
                .terms()
                .map(|m| TermJson {
                    coeff: m.coeff.to_string(),
                    z: m.z,
                    q: m.q,
                })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            let coeff: BigInt = t.coeff.parse().map_err(|_| Error::Syntax {
                pos: 0,
                msg: format!("bad coefficient {:?}", t.coeff),
            })?;
            terms.push(Monomial::new(coeff, t.z.clone(), t.q));
        }
        Self::from_monomials(j.k, terms)
    }
}

fn pow(base: i64, exp: u64) -> BigInt {
    num_traits::pow::pow(BigInt::from(base), exp as usize)
}

/// JSON form `{"k": K, "terms": [{"coeff": "<decimal>", "z": [...], "q": e}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub k: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub z: Vec<u64>,
    pub q: u64,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        Polynomial::from_json(&j).map_err(serde::de::Error::custom)
    }
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TermJson {
            coeff: self.coeff.to_string(),
            z: self.z.clone(),
            q: self.q,
        }
        .serialize(s)
    }
}

fn write_factors(f: &mut fmt::Formatter<'_>, z: &[u64], q: u64) -> fmt::Result {
    let mut first = true;
    let mut emit = |f: &mut fmt::Formatter<'_>, name: &str, e: u64| -> fmt::Result {
        if e == 0 {
            return Ok(());
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
        Ok(())
    };
    for (i, &e) in z.iter().enumerate() {
        emit(f, &format!("z{}", i + 1), e)?;
    }
    emit(f, "q", q)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let constant = e.0.iter().all(|&x| x == 0);
            if constant {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write_factors(f, &e.0[..self.k], e.0[self.k])?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    k: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str, k: usize) -> Self {
        Parser {
            src: s.as_bytes(),
            pos: 0,
            k,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn small(&mut self) -> Result<u64> {
        let at = self.pos;
        let d = self.digits()?;
        d.parse().map_err(|_| Error::Syntax {
            pos: at,
            msg: format!("number {d} out of range"),
        })
    }

    fn polynomial(mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.k);
        self.skip_ws();
        let mut negative = false;
        if self.peek() == Some(b'-') {
            negative = true;
            self.pos += 1;
            self.skip_ws();
        }
        loop {
            let m = self.term(negative)?;
            out.add_term(m.exps(), m.coeff);
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return self.err("expected ' + ' or ' - '"),
            }
            self.pos += 1;
            self.skip_ws();
        }
        Ok(out)
    }

    fn term(&mut self, negative: bool) -> Result<Monomial> {
        let mut coeff = BigInt::one();
        let mut z = vec![0u64; self.k];
        let mut q = 0u64;
        let mut need_factor = true;
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let at = self.pos;
            let d = self.digits()?;
            coeff = d.parse().map_err(|_| Error::Syntax {
                pos: at,
                msg: "bad coefficient".into(),
            })?;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
            } else {
                need_factor = false;
            }
        }
        while need_factor {
            match self.peek() {
                Some(b'z') => {
                    self.pos += 1;
                    let at = self.pos;
                    let idx = self.small()? as usize;
                    if idx == 0 || idx > self.k {
                        return Err(Error::Syntax {
                            pos: at,
                            msg: format!("z{idx} outside z1..z{}", self.k),
                        });
                    }
                    z[idx - 1] += self.exponent()?;
                }
                Some(b'q') => {
                    self.pos += 1;
                    q += self.exponent()?;
                }
                _ => return self.err("expected factor 'z<i>' or 'q'"),
            }
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
            } else {
                need_factor = false;
            }
        }
        if negative {
            coeff = -coeff;
        }
        Ok(Monomial { coeff, z, q })
    }

    fn exponent(&mut self) -> Result<u64> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.small()
        } else {
            Ok(1)
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// Panics on mismatched rings; use [`Polynomial::try_add`] to handle that case.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&BigInt::from(-1))
    }
}
