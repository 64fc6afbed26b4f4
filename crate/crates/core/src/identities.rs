//! Exact checks of the tiling identities: the first-tile recursion, the
//! split-board convolution and the reduction from tiles of length `<= k` to
//! tiles of length `<= k - 1`, in generic weighted form, at `z = q = 1`, and in
//! the simplified form each statistic admits.
//!
//! The right-hand sides apply the shift factors a rule *claims* (rather than
//! re-running the evaluator with the board moved), so a rule whose shifts are
//! wrong produces a failing report with a concrete witness term.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::statistics::{distribution, Family, StatSetPair, Statistic};
use crate::tiling::{after_shift, before_shift, fibonacci_k, weighted_sum_enumerative, AppendSpec, TileWeight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub n: usize,
    pub k: usize,
    pub scheme: String,
}

/// Outcome of one exact comparison `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub params: Params,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
    pub verdict: Verdict,
    /// Leading term of `lhs - rhs` when the sides differ.
    pub witness: Option<Monomial>,
}

impl IdentityReport {
    pub fn new(identity: impl Into<String>, params: Params, lhs: Polynomial, rhs: Polynomial) -> Result<Self> {
        let diff = lhs.try_sub(&rhs)?;
        let witness = diff.leading_term();
        Ok(IdentityReport {
            identity: identity.into(),
            params,
            verdict: if witness.is_none() { Verdict::Pass } else { Verdict::Fail },
            lhs,
            rhs,
            witness,
        })
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}", self.identity)?;
        if let Some(m) = self.params.m {
            write!(f, " m={m}")?;
        }
        write!(f, " n={} k={} scheme={}", self.params.n, self.params.k, self.params.scheme)?;
        if let Some(w) = &self.witness {
            write!(f, " witness(lhs-rhs)={w}")?;
        }
        Ok(())
    }
}

fn params(m: Option<usize>, n: usize, k: usize, w: &dyn TileWeight) -> Params {
    Params {
        m,
        n,
        k,
        scheme: w.name().to_string(),
    }
}

fn unit(ring: usize, i: usize) -> Vec<u64> {
    let mut z = vec![0; ring];
    z[i - 1] = 1;
    z
}

/// `z_i q^{e} * p`.
fn tile_times(p: &Polynomial, i: usize, e: u64) -> Polynomial {
    p.mul_term(&unit(p.k(), i), e, &BigInt::one())
}

fn plain(n: i64, k: usize, w: &dyn TileWeight) -> Result<Polynomial> {
    weighted_sum_enumerative(n, k, w, AppendSpec::NONE)
}

/// `F_n(s^-_m z; q)` using the rule's claimed shift.
fn shifted_before(n: i64, k: usize, w: &dyn TileWeight, m: usize) -> Result<Polynomial> {
    Ok(plain(n, k, w)?.shift_unchecked(&before_shift(w, m)))
}

/// `F_n(s^+_m z; q)` using the rule's claimed shift.
fn shifted_after(n: i64, k: usize, w: &dyn TileWeight, m: usize) -> Result<Polynomial> {
    Ok(plain(n, k, w)?.shift_unchecked(&after_shift(w, m)))
}

fn require_bound(k: usize, w: &dyn TileWeight) -> Result<()> {
    if k == 0 || k > w.max_len() {
        return Err(domain(format!("k = {k} outside 1..={} for scheme '{}'", w.max_len(), w.name())));
    }
    Ok(())
}

/// `F_n = sum_i z_i f_{i,1,n-i} F_{n-i}(s^-_i z)`.
pub fn verify_recursion(n: usize, k: usize, w: &dyn TileWeight) -> Result<IdentityReport> {
    if n < 1 {
        return Err(domain("recursion needs n >= 1"));
    }
    require_bound(k, w)?;
    let lhs = plain(n as i64, k, w)?;
    let mut rhs = Polynomial::zero(w.max_len());
    for i in 1..=k.min(n) {
        let rest = shifted_before((n - i) as i64, k, w, i)?;
        rhs = &rhs + &tile_times(&rest, i, w.exponent(i, 1, n - i));
    }
    IdentityReport::new("recursion", params(None, n, k, w), lhs, rhs)
}

/// `F_{m+n} = F_m(s^+_n z) F_n(s^-_m z) + sum_{i=2}^k sum_{j=1}^{i-1}
/// z_i f_{i,m-j+1,n-i+j} F_{m-j}(s^+_{n+j} z) F_{n-i+j}(s^-_{m+i-j} z)`.
pub fn verify_convolution(m: usize, n: usize, k: usize, w: &dyn TileWeight) -> Result<IdentityReport> {
    if m < 1 || n < 1 {
        return Err(domain("convolution needs m >= 1 and n >= 1"));
    }
    require_bound(k, w)?;
    let lhs = plain((m + n) as i64, k, w)?;
    let mut rhs = &shifted_after(m as i64, k, w, n)? * &shifted_before(n as i64, k, w, m)?;
    for i in 2..=k {
        for j in 1..i {
            let (left, right) = (m as i64 - j as i64, n as i64 - i as i64 + j as i64);
            if left < 0 || right < 0 {
                continue;
            }
            let prod = &shifted_after(left, k, w, n + j)? * &shifted_before(right, k, w, m + i - j)?;
            let e = w.exponent(i, m - j + 1, right as usize);
            rhs = &rhs + &tile_times(&prod, i, e);
        }
    }
    IdentityReport::new("convolution", params(Some(m), n, k, w), lhs, rhs)
}

/// `F^k_n = F^{k-1}_n + sum_{j=0}^{n-k} z_k f_{k,j+1,n-k-j}
/// F^{k-1}_j(s^+_{n-j} z) F^k_{n-k-j}(s^-_{k+j} z)`: split at the first tile
/// of maximal length.
pub fn verify_k_reduction(n: usize, k: usize, w: &dyn TileWeight) -> Result<IdentityReport> {
    if n < 1 {
        return Err(domain("k-reduction needs n >= 1"));
    }
    if k < 2 {
        return Err(domain("k-reduction needs k >= 2"));
    }
    require_bound(k, w)?;
    let lhs = plain(n as i64, k, w)?;
    let mut rhs = plain(n as i64, k - 1, w)?;
    if n >= k {
        for j in 0..=n - k {
            let rest = n - k - j;
            let prod = &shifted_after(j as i64, k - 1, w, n - j)? * &shifted_before(rest as i64, k, w, k + j)?;
            rhs = &rhs + &tile_times(&prod, k, w.exponent(k, j + 1, rest));
        }
    }
    IdentityReport::new("kreduce", params(None, n, k, w), lhs, rhs)
}

fn fib(n: i64, k: usize) -> Result<BigInt> {
    fibonacci_k(n, k)
}

fn count_report(identity: &str, m: Option<usize>, n: usize, k: usize, lhs: BigInt, rhs: BigInt) -> Result<IdentityReport> {
    let p = Params {
        m,
        n,
        k,
        scheme: "count".into(),
    };
    IdentityReport::new(identity, p, Polynomial::constant(k, lhs), Polynomial::constant(k, rhs))
}

/// `F_n = F_{n-1} + ... + F_{n-k}` on integers.
pub fn verify_recursion_count(n: usize, k: usize) -> Result<IdentityReport> {
    if n < 1 || k < 1 {
        return Err(domain("needs n >= 1 and k >= 1"));
    }
    let rhs = (1..=k).map(|i| fib(n as i64 - i as i64, k)).sum::<Result<BigInt>>()?;
    count_report("recursion-count", None, n, k, fib(n as i64, k)?, rhs)
}

/// `F_{m+n} = F_m F_n + sum_{i=2}^k sum_{j=1}^{i-1} F_{m-j} F_{n-i+j}` on integers.
pub fn verify_convolution_count(m: usize, n: usize, k: usize) -> Result<IdentityReport> {
    if m < 1 || n < 1 || k < 1 {
        return Err(domain("needs m, n, k >= 1"));
    }
    let (mi, ni) = (m as i64, n as i64);
    let mut rhs = fib(mi, k)? * fib(ni, k)?;
    for i in 2..=k as i64 {
        for j in 1..i {
            rhs += fib(mi - j, k)? * fib(ni - i + j, k)?;
        }
    }
    count_report("convolution-count", Some(m), n, k, fib(mi + ni, k)?, rhs)
}

/// `F^k_n = F^{k-1}_n + sum_{j=0}^{n-k} F^{k-1}_j F^k_{n-k-j}` on integers.
pub fn verify_k_reduction_count(n: usize, k: usize) -> Result<IdentityReport> {
    if n < 1 || k < 2 {
        return Err(domain("needs n >= 1 and k >= 2"));
    }
    let mut rhs = fib(n as i64, k - 1)?;
    for j in 0..=(n as i64 - k as i64) {
        rhs += fib(j, k - 1)? * fib(n as i64 - k as i64 - j, k)?;
    }
    count_report("kreduce-count", None, n, k, fib(n as i64, k)?, rhs)
}

/// The weighted right-hand side evaluated at `z = q = 1` against the integer
/// right-hand side, for each of the three identities at one grid point.
pub fn verify_at_one(m: usize, n: usize, k: usize, w: &dyn TileWeight) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    let mut pairs = vec![
        (verify_recursion(n, k, w)?, verify_recursion_count(n, k)?),
        (verify_convolution(m, n, k, w)?, verify_convolution_count(m, n, k)?),
    ];
    if k >= 2 {
        pairs.push((verify_k_reduction(n, k, w)?, verify_k_reduction_count(n, k)?));
    }
    for (weighted, count) in pairs {
        let lhs = Polynomial::constant(k, weighted.rhs.at_one());
        let rhs = Polynomial::constant(k, count.rhs.at_one());
        let p = Params {
            scheme: w.name().to_string(),
            ..weighted.params.clone()
        };
        out.push(IdentityReport::new(format!("{}-at-one", weighted.identity), p, lhs, rhs)?);
    }
    Ok(out)
}

/// A `q`-power prefactor together with per-variable shift exponents
/// (`z_l -> z_l q^{e_l}`) for each factor it multiplies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term<const F: usize> {
    pub q: u64,
    pub shifts: [Vec<u64>; F],
}

/// The simplified right-hand sides a statistic admits once its shift
/// factors are written out. `k` is the tile bound, so shift vectors have
/// length `k`.
pub trait SpecializedForms: Send + Sync {
    fn pair(&self) -> StatSetPair;

    /// Factor `q^e F_{n-i}(...)` multiplying `z_i` in the recursion.
    fn recursion(&self, n: u64, i: u64, k: usize) -> Term<1>;

    /// Factor `q^e F_m(...) F_n(...)` for the split between cells `m` and `m+1`.
    fn split(&self, m: u64, n: u64, k: usize) -> Term<2>;

    /// Factor `q^e F_{m-j}(...) F_{n-i+j}(...)` multiplying `z_i` for a
    /// tile of length `i` covering cell `m` as its `j`-th cell.
    fn crossing(&self, m: u64, n: u64, i: u64, j: u64, k: usize) -> Term<2>;

    /// Factor `q^e F^{k-1}_j(...) F^k_{n-k-j}(...)` multiplying `z_k`.
    fn reduction(&self, n: u64, k: u64, j: u64) -> Term<2>;

    /// Exponent of `q` in the shifted Toeplitz minor's determinant.
    fn determinant_q(&self, n: u64, k: u64) -> u64;
}

fn c2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

fn flat(k: usize) -> Vec<u64> {
    vec![0; k]
}

fn slope(k: usize, f: impl Fn(u64) -> u64) -> Vec<u64> {
    (1..=k as u64).map(f).collect()
}

/// `n + k - 1 = p k + r` with `0 <= r < k`.
pub fn euclid(n: u64, k: u64) -> (u64, u64) {
    let big_n = n + k - 1;
    (big_n / k, big_n % k)
}

fn inv_lp_det(n: u64, k: u64) -> u64 {
    let (p, r) = euclid(n, k);
    p * r * k * k + k * k * k * c2(p)
}

struct InvLp;
struct InvRlp;
struct InvPrlp;
struct MajLp(StatSetPair);
struct MajRlp;
struct MajPrlp;

fn pair(s: Statistic, f: Family) -> StatSetPair {
    StatSetPair { statistic: s, family: f }
}

impl SpecializedForms for InvLp {
    fn pair(&self) -> StatSetPair {
        pair(Statistic::Inv, Family::Lp)
    }
    fn recursion(&self, n: u64, i: u64, k: usize) -> Term<1> {
        Term { q: i * (n - i), shifts: [flat(k)] }
    }
    fn split(&self, m: u64, n: u64, k: usize) -> Term<2> {
        Term { q: n * m, shifts: [flat(k), flat(k)] }
    }
    fn crossing(&self, m: u64, n: u64, i: u64, j: u64, k: usize) -> Term<2> {
        Term {
            q: i * (n + j - i) + (m - j) * (n + j),
            shifts: [flat(k), flat(k)],
        }
    }
    fn reduction(&self, n: u64, k: u64, j: u64) -> Term<2> {
        Term {
            q: k * (n - k - j) + j * (n - j),
            shifts: [flat(k as usize), flat(k as usize)],
        }
    }
    fn determinant_q(&self, n: u64, k: u64) -> u64 {
        inv_lp_det(n, k)
    }
}

impl SpecializedForms for InvRlp {
    fn pair(&self) -> StatSetPair {
        pair(Statistic::Inv, Family::Rlp)
    }
    fn recursion(&self, _n: u64, i: u64, k: usize) -> Term<1> {
        Term { q: c2(i), shifts: [flat(k)] }
    }
    fn split(&self, _m: u64, _n: u64, k: usize) -> Term<2> {
        Term { q: 0, shifts: [flat(k), flat(k)] }
    }
    fn crossing(&self, _m: u64, _n: u64, i: u64, _j: u64, k: usize) -> Term<2> {
        Term { q: c2(i), shifts: [flat(k), flat(k)] }
    }
    fn reduction(&self, _n: u64, k: u64, _j: u64) -> Term<2> {
        Term {
            q: c2(k),
            shifts: [flat(k as usize), flat(k as usize)],
        }
    }
    fn determinant_q(&self, n: u64, k: u64) -> u64 {
        (n + k - 1) * c2(k)
    }
}

impl SpecializedForms for InvPrlp {
    fn pair(&self) -> StatSetPair {
        pair(Statistic::Inv, Family::Prlp)
    }
    fn recursion(&self, n: u64, i: u64, k: usize) -> Term<1> {
        Term {
            q: c2(i - 1) + i * (n - i),
            shifts: [flat(k)],
        }
    }
    fn split(&self, m: u64, n: u64, k: usize) -> Term<2> {
        Term { q: n * m, shifts: [flat(k), flat(k)] }
    }
    fn crossing(&self, m: u64, n: u64, i: u64, j: u64, k: usize) -> Term<2> {
        Term {
            q: c2(i - 1) + i * (n + j - i) + (m - j) * (n + j),
            shifts: [flat(k), flat(k)],
        }
    }
    fn reduction(&self, n: u64, k: u64, j: u64) -> Term<2> {
        Term {
            q: c2(k - 1) + k * (n - k - j) + j * (n - j),
            shifts: [flat(k as usize), flat(k as usize)],
        }
    }
    fn determinant_q(&self, n: u64, k: u64) -> u64 {
        (n + k - 1) * c2(k - 1) + inv_lp_det(n, k)
    }
}

impl SpecializedForms for MajLp {
    fn pair(&self) -> StatSetPair {
        self.0
    }
    fn recursion(&self, _n: u64, i: u64, k: usize) -> Term<1> {
        Term { q: 0, shifts: [slope(k, |_| i)] }
    }
    fn split(&self, m: u64, _n: u64, k: usize) -> Term<2> {
        Term { q: 0, shifts: [flat(k), slope(k, |_| m)] }
    }
    fn crossing(&self, m: u64, _n: u64, i: u64, j: u64, k: usize) -> Term<2> {
        Term {
            q: m - j,
            shifts: [flat(k), slope(k, |_| m + i - j)],
        }
    }
    fn reduction(&self, _n: u64, k: u64, j: u64) -> Term<2> {
        Term {
            q: j,
            shifts: [flat(k as usize), slope(k as usize, |_| k + j)],
        }
    }
    fn determinant_q(&self, n: u64, k: u64) -> u64 {
        c2(n + k - 1)
    }
}

impl SpecializedForms for MajRlp {
    fn pair(&self) -> StatSetPair {
        pair(Statistic::Maj, Family::Rlp)
    }
    fn recursion(&self, _n: u64, i: u64, k: usize) -> Term<1> {
        Term {
            q: c2(i),
            shifts: [slope(k, |l| (l - 1) * i)],
        }
    }
    fn split(&self, m: u64, _n: u64, k: usize) -> Term<2> {
        Term {
            q: 0,
            shifts: [flat(k), slope(k, |l| (l - 1) * m)],
        }
    }
    fn crossing(&self, m: u64, _n: u64, i: u64, j: u64, k: usize) -> Term<2> {
        Term {
            q: c2(i) + (i - 1) * (m - j),
            shifts: [flat(k), slope(k, |l| (l - 1) * (m + i - j))],
        }
    }
    fn reduction(&self, _n: u64, k: u64, j: u64) -> Term<2> {
        Term {
            q: c2(k) + (k - 1) * j,
            shifts: [flat(k as usize), slope(k as usize, |l| (l - 1) * (k + j))],
        }
    }
    fn determinant_q(&self, n: u64, k: u64) -> u64 {
        (k - 1) * c2(n + k - 1) + c2(k) * (n + k - 1)
    }
}

fn prlp_slope(l: u64) -> u64 {
    (l - 1).max(1)
}

impl SpecializedForms for MajPrlp {
    fn pair(&self) -> StatSetPair {
        pair(Statistic::Maj, Family::Prlp)
    }
    fn recursion(&self, _n: u64, i: u64, k: usize) -> Term<1> {
        Term {
            q: c2(i - 1),
            shifts: [slope(k, |l| prlp_slope(l) * i)],
        }
    }
    fn split(&self, m: u64, _n: u64, k: usize) -> Term<2> {
        Term {
            q: 0,
            shifts: [flat(k), slope(k, |l| prlp_slope(l) * m)],
        }
    }
    fn crossing(&self, m: u64, _n: u64, i: u64, j: u64, k: usize) -> Term<2> {
        Term {
            q: c2(i - 1) + prlp_slope(i) * (m - j),
            shifts: [flat(k), slope(k, |l| prlp_slope(l) * (m + i - j))],
        }
    }
    fn reduction(&self, _n: u64, k: u64, j: u64) -> Term<2> {
        Term {
            q: c2(k - 1) + prlp_slope(k) * j,
            shifts: [flat(k as usize), slope(k as usize, |l| prlp_slope(l) * (k + j))],
        }
    }
    fn determinant_q(&self, n: u64, k: u64) -> u64 {
        (n + k - 1) * c2(k - 1) + prlp_slope(k) * c2(n + k - 1)
    }
}

/// Simplified forms for a pair; `rb-lpi` shares those of `maj-lp`.
pub fn specialized_forms(p: StatSetPair) -> Result<Box<dyn SpecializedForms>> {
    Ok(match (p.statistic, p.family) {
        (Statistic::Inv, Family::Lp) => Box::new(InvLp),
        (Statistic::Inv, Family::Rlp) => Box::new(InvRlp),
        (Statistic::Inv, Family::Prlp) => Box::new(InvPrlp),
        (Statistic::Maj, Family::Lp) | (Statistic::Rb, Family::Lpi) => Box::new(MajLp(p)),
        (Statistic::Maj, Family::Rlp) => Box::new(MajRlp),
        (Statistic::Maj, Family::Prlp) => Box::new(MajPrlp),
        (Statistic::Ls, Family::Lpi) => {
            return Err(Error::UnsupportedScheme(format!(
                "{p} has no tile-local weight and no simplified identities"
            )))
        }
        _ => return Err(domain(format!("{p} is not a valid pair"))),
    })
}

/// Object-level distribution in the ring with `ring` z-variables, or zero
/// for a negative length.
fn dist(p: StatSetPair, n: i64, k: usize, ring: usize) -> Result<Polynomial> {
    if n < 0 {
        return Ok(Polynomial::zero(ring));
    }
    distribution(p, n as usize, k)?.widen(ring)
}

fn dist_shifted(p: StatSetPair, n: i64, k: usize, ring: usize, shift: &[u64]) -> Result<Polynomial> {
    let mut s = shift.to_vec();
    s.resize(ring, 0);
    Ok(dist(p, n, k, ring)?.shift_unchecked(&s))
}

fn display_params(m: Option<usize>, n: usize, k: usize, p: StatSetPair) -> Params {
    Params {
        m,
        n,
        k,
        scheme: p.name(),
    }
}

/// Recursion right-hand side from the weight rule against the simplified
/// form built from object-level distributions.
pub fn verify_recursion_display(n: usize, k: usize, forms: &dyn SpecializedForms, w: &dyn TileWeight) -> Result<IdentityReport> {
    let generic = verify_recursion(n, k, w)?;
    let p = forms.pair();
    let ring = w.max_len();
    let mut rhs = Polynomial::zero(ring);
    for i in 1..=k.min(n) {
        let t = forms.recursion(n as u64, i as u64, k);
        let rest = dist_shifted(p, (n - i) as i64, k, ring, &t.shifts[0])?;
        rhs = &rhs + &tile_times(&rest, i, t.q);
    }
    IdentityReport::new("recursion-display", display_params(None, n, k, p), generic.rhs, rhs)
}

pub fn verify_convolution_display(
    m: usize,
    n: usize,
    k: usize,
    forms: &dyn SpecializedForms,
    w: &dyn TileWeight,
) -> Result<IdentityReport> {
    let generic = verify_convolution(m, n, k, w)?;
    let p = forms.pair();
    let ring = w.max_len();
    let t = forms.split(m as u64, n as u64, k);
    let split = &dist_shifted(p, m as i64, k, ring, &t.shifts[0])? * &dist_shifted(p, n as i64, k, ring, &t.shifts[1])?;
    let mut rhs = split.mul_term(&vec![0; ring], t.q, &BigInt::one());
    for i in 2..=k {
        for j in 1..i {
            let (left, right) = (m as i64 - j as i64, n as i64 - i as i64 + j as i64);
            if left < 0 || right < 0 {
                continue;
            }
            let t = forms.crossing(m as u64, n as u64, i as u64, j as u64, k);
            let prod = &dist_shifted(p, left, k, ring, &t.shifts[0])? * &dist_shifted(p, right, k, ring, &t.shifts[1])?;
            rhs = &rhs + &tile_times(&prod, i, t.q);
        }
    }
    IdentityReport::new("convolution-display", display_params(Some(m), n, k, p), generic.rhs, rhs)
}

pub fn verify_k_reduction_display(n: usize, k: usize, forms: &dyn SpecializedForms, w: &dyn TileWeight) -> Result<IdentityReport> {
    let generic = verify_k_reduction(n, k, w)?;
    let p = forms.pair();
    let ring = w.max_len();
    let mut rhs = dist(p, n as i64, k - 1, ring)?;
    if n >= k {
        for j in 0..=n - k {
            let t = forms.reduction(n as u64, k as u64, j as u64);
            let prod = &dist_shifted(p, j as i64, k - 1, ring, &t.shifts[0])?
                * &dist_shifted(p, (n - k - j) as i64, k, ring, &t.shifts[1])?;
            rhs = &rhs + &tile_times(&prod, k, t.q);
        }
    }
    IdentityReport::new("kreduce-display", display_params(None, n, k, p), generic.rhs, rhs)
}

/// Sign of the shifted minor's determinant: `+1` for odd `k`,
/// `(-1)^{n-1}` for even `k`.
pub fn determinant_sign(n: usize, k: usize) -> i64 {
    if k.is_multiple_of(2) && n.is_multiple_of(2) {
        -1
    } else {
        1
    }
}

/// `sign * z_k^{n+k-1} q^{e}` with `e` from the pair's simplified form.
pub fn determinant_display(n: usize, k: usize, forms: &dyn SpecializedForms, ring: usize) -> Polynomial {
    let mut z = vec![0; ring];
    z[k - 1] = (n + k - 1) as u64;
    Polynomial::from_exps(ring, z, forms.determinant_q(n as u64, k as u64), BigInt::from(determinant_sign(n, k)))
}

/// Every generic and simplified-form check for one built-in pair over
/// `m, n <= max_n` with tile bound `k`, in a fixed order.
pub fn verify_specializations(p: StatSetPair, k: usize, max_n: usize) -> Result<Vec<IdentityReport>> {
    let forms = specialized_forms(p)?;
    let w = crate::statistics::builtin_scheme(p, k)?;
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push(verify_recursion(n, k, &w)?);
        out.push(verify_recursion_display(n, k, forms.as_ref(), &w)?);
    }
    for m in 1..=max_n {
        for n in 1..=max_n {
            out.push(verify_convolution(m, n, k, &w)?);
            out.push(verify_convolution_display(m, n, k, forms.as_ref(), &w)?);
        }
    }
    if k >= 2 {
        for n in 1..=max_n {
            out.push(verify_k_reduction(n, k, &w)?);
            out.push(verify_k_reduction_display(n, k, forms.as_ref(), &w)?);
        }
    }
    Ok(out)
}
