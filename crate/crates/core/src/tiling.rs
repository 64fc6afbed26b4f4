//! Board tilings, the k-Fibonacci recursion and weighted tiling sums.
//!
//! A tile of length `i` that starts in cell `start` (1-based) with `trailing`
//! cells after it contributes `z_i * q^{e(i, start, trailing)}`; the weight of a
//! tiling is the product over its tiles. Appending untiled cells before or
//! after the board moves every tile's `start` or `trailing` value.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{domain, Result};
use crate::expr::LengthExpr;
use crate::poly::Polynomial;

/// An ordered composition of `n`; the tile lengths read left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tiling {
    parts: Vec<usize>,
    n: usize,
}

/// One tile of a tiling, located on the bare board.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Tile {
    pub len: usize,
    pub start: usize,
    pub trailing: usize,
}

impl Tiling {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(domain("tiles must have positive length"));
        }
        let n = parts.iter().sum();
        Ok(Tiling { parts, n })
    }

    pub fn empty() -> Self {
        Tiling {
            parts: Vec::new(),
            n: 0,
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Board length.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_part(&self) -> usize {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    pub fn tiles(&self) -> impl Iterator<Item = Tile> + '_ {
        let n = self.n;
        self.parts.iter().scan(0usize, move |before, &len| {
            let start = *before + 1;
            *before += len;
            Some(Tile {
                len,
                start,
                trailing: n - *before,
            })
        })
    }

    pub fn reversed(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        Tiling { parts, n: self.n }
    }
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Untiled cells appended before (`before`) and after (`after`) the board.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AppendSpec {
    pub before: usize,
    pub after: usize,
}

impl AppendSpec {
    pub const NONE: AppendSpec = AppendSpec {
        before: 0,
        after: 0,
    };

    pub fn new(before: usize, after: usize) -> Self {
        AppendSpec { before, after }
    }
}

/// `F_n^k`: `F_0 = 1`, `F_n = 0` for `n < 0`, `F_n = F_{n-1} + ... + F_{n-k}`.
pub fn fibonacci_k(n: i64, k: usize) -> Result<BigInt> {
    if k == 0 {
        return Err(domain("k must be at least 1"));
    }
    if n < 0 {
        return Ok(BigInt::zero());
    }
    let n = n as usize;
    let mut seq: Vec<BigInt> = Vec::with_capacity(n + 1);
    seq.push(BigInt::one());
    let mut window = BigInt::one();
    for m in 1..=n {
        let next = window.clone();
        window += &next;
        if m >= k {
            window -= &seq[m - k];
        }
        seq.push(next);
    }
    Ok(seq.swap_remove(n))
}

/// Calls `f` on every composition of `n` with parts in `1..=k`, in
/// lexicographic order of the part sequence.
pub fn for_each_composition(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn go(rem: usize, k: usize, parts: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if rem == 0 {
            f(parts);
            return;
        }
        for i in 1..=k.min(rem) {
            parts.push(i);
            go(rem - i, k, parts, f);
            parts.pop();
        }
    }
    go(n, k, &mut Vec::with_capacity(n), &mut f);
}

/// All tilings of an `n`-board by tiles of length at most `k`.
pub fn enumerate_tilings(n: usize, k: usize) -> Vec<Tiling> {
    let mut out = Vec::new();
    for_each_composition(n, k, |p| {
        out.push(Tiling {
            parts: p.to_vec(),
            n,
        })
    });
    out
}

/// A tile-weight rule: the exponent of `q` carried by a tile, and the shift
/// factors `s^-_{m,i} = q^{shift_before(i, m)}`, `s^+_{m,i} = q^{shift_after(i, m)}`
/// the rule claims for boards appended before or after.
pub trait TileWeight: Send + Sync {
    fn name(&self) -> &str;

    /// Largest tile length the rule is defined for; also the number of
    /// z-variables of the polynomials it produces.
    fn max_len(&self) -> usize;

    fn exponent(&self, len: usize, start: usize, trailing: usize) -> u64;

    fn shift_before(&self, len: usize, m: usize) -> u64;

    fn shift_after(&self, len: usize, m: usize) -> u64;
}

impl fmt::Debug for dyn TileWeight + '_ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TileWeight({}, k = {})", self.name(), self.max_len())
    }
}

/// Shift exponents `(e_1, ..., e_k)` for an `m`-board appended before.
pub fn before_shift(w: &dyn TileWeight, m: usize) -> Vec<u64> {
    (1..=w.max_len()).map(|i| w.shift_before(i, m)).collect()
}

/// Shift exponents `(e_1, ..., e_k)` for an `m`-board appended after.
pub fn after_shift(w: &dyn TileWeight, m: usize) -> Vec<u64> {
    (1..=w.max_len()).map(|i| w.shift_after(i, m)).collect()
}

/// Separable scheme `q^{A(i) + B(i)(start - 1) + C(i) trailing}`, tabulated
/// for tile lengths `1..=k`. Its shift factors are `q^{B(i) m}` and `q^{C(i) m}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightScheme {
    pub name: String,
    a: Vec<u64>,
    b: Vec<u64>,
    c: Vec<u64>,
}

impl WeightScheme {
    /// `abc(i)` gives `(A(i), B(i), C(i))` for `i` in `1..=k`.
    pub fn from_fn(name: impl Into<String>, k: usize, abc: impl Fn(u64) -> (u64, u64, u64)) -> Self {
        let (mut a, mut b, mut c) = (Vec::with_capacity(k), Vec::with_capacity(k), Vec::with_capacity(k));
        for i in 1..=k as u64 {
            let (x, y, z) = abc(i);
            a.push(x);
            b.push(y);
            c.push(z);
        }
        WeightScheme {
            name: name.into(),
            a,
            b,
            c,
        }
    }

    pub fn from_tables(name: impl Into<String>, a: Vec<u64>, b: Vec<u64>, c: Vec<u64>) -> Result<Self> {
        if a.is_empty() || a.len() != b.len() || a.len() != c.len() {
            return Err(domain("A, B and C tables must be non-empty and of equal length"));
        }
        Ok(WeightScheme {
            name: name.into(),
            a,
            b,
            c,
        })
    }

    /// Tabulates three expressions in `i`; every value must be nonnegative.
    pub fn from_exprs(
        name: impl Into<String>,
        k: usize,
        a: &LengthExpr,
        b: &LengthExpr,
        c: &LengthExpr,
    ) -> Result<Self> {
        if k == 0 {
            return Err(domain("k must be at least 1"));
        }
        let mut tables = [Vec::new(), Vec::new(), Vec::new()];
        for (label, e, t) in [("A", a, 0), ("B", b, 1), ("C", c, 2)] {
            for i in 1..=k as i64 {
                let v = e.eval(i)?;
                if v < 0 {
                    return Err(domain(format!("{label}({i}) = {v} is negative")));
                }
                tables[t].push(v as u64);
            }
        }
        let [a, b, c] = tables;
        Self::from_tables(name, a, b, c)
    }

    /// All-zero exponents: the plain count `F_n^k` per z-profile.
    pub fn unweighted(k: usize) -> Self {
        Self::from_fn("count", k, |_| (0, 0, 0))
    }

    /// `count` schemes with A, B, C drawn uniformly from `0..=3` per tile
    /// length, from a ChaCha8 stream seeded with `seed`.
    pub fn random_family(k: usize, seed: u64, count: usize) -> Vec<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|idx| {
                let mut draw = || (0..k).map(|_| rng.gen_range(0..=3u64)).collect::<Vec<_>>();
                let (a, b, c) = (draw(), draw(), draw());
                WeightScheme {
                    name: format!("random-{seed}-{idx}"),
                    a,
                    b,
                    c,
                }
            })
            .collect()
    }

    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self, i: usize) -> u64 {
        self.a[i - 1]
    }

    pub fn b(&self, i: usize) -> u64 {
        self.b[i - 1]
    }

    pub fn c(&self, i: usize) -> u64 {
        self.c[i - 1]
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

impl TileWeight for WeightScheme {
    fn name(&self) -> &str {
        &self.name
    }

    fn max_len(&self) -> usize {
        self.a.len()
    }

    fn exponent(&self, len: usize, start: usize, trailing: usize) -> u64 {
        self.a(len) + self.b(len) * (start as u64 - 1) + self.c(len) * trailing as u64
    }

    fn shift_before(&self, len: usize, m: usize) -> u64 {
        self.b(len) * m as u64
    }

    fn shift_after(&self, len: usize, m: usize) -> u64 {
        self.c(len) * m as u64
    }
}

/// A scheme that adds `coupling * (start - 1) * trailing` to a separable base
/// while still claiming the base's shift factors. Not shift-coherent whenever
/// `coupling > 0`; used to show that the identity checks can fail.
#[derive(Clone, Debug)]
pub struct CoupledScheme {
    base: WeightScheme,
    coupling: u64,
    name: String,
}

impl CoupledScheme {
    pub fn new(base: WeightScheme, coupling: u64) -> Self {
        let name = format!("coupled-{}", base.name);
        CoupledScheme {
            base,
            coupling,
            name,
        }
    }
}

impl TileWeight for CoupledScheme {
    fn name(&self) -> &str {
        &self.name
    }

    fn max_len(&self) -> usize {
        self.base.max_len()
    }

    fn exponent(&self, len: usize, start: usize, trailing: usize) -> u64 {
        self.base.exponent(len, start, trailing) + self.coupling * (start as u64 - 1) * trailing as u64
    }

    fn shift_before(&self, len: usize, m: usize) -> u64 {
        self.base.shift_before(len, m)
    }

    fn shift_after(&self, len: usize, m: usize) -> u64 {
        self.base.shift_after(len, m)
    }
}

fn check_bound(k: usize, w: &dyn TileWeight) -> Result<()> {
    if k == 0 {
        return Err(domain("k must be at least 1"));
    }
    if k > w.max_len() {
        return Err(domain(format!(
            "tile bound {k} exceeds scheme '{}' (defined up to length {})",
            w.name(),
            w.max_len()
        )));
    }
    Ok(())
}

/// Weight of one tiling with boards appended on either side. Positions are
/// measured on the bare board and then moved by `app`.
pub fn tiling_weight(t: &Tiling, w: &dyn TileWeight, app: AppendSpec) -> Result<Polynomial> {
    let k = w.max_len();
    let mut z = vec![0u64; k];
    let mut q = 0u64;
    for tile in t.tiles() {
        if tile.len > k {
            return Err(domain(format!(
                "tile of length {} exceeds scheme '{}' bound {k}",
                tile.len,
                w.name()
            )));
        }
        z[tile.len - 1] += 1;
        q += w.exponent(tile.len, tile.start + app.before, tile.trailing + app.after);
    }
    Ok(Polynomial::from_exps(k, z, q, BigInt::one()))
}

/// Sum of tiling weights over every tiling of the `n`-board, by explicit
/// enumeration. `1` for `n = 0`, `0` for `n < 0`.
pub fn weighted_sum_enumerative(n: i64, k: usize, w: &dyn TileWeight, app: AppendSpec) -> Result<Polynomial> {
    check_bound(k, w)?;
    let ring = w.max_len();
    if n < 0 {
        return Ok(Polynomial::zero(ring));
    }
    let n = n as usize;
    let mut counts: HashMap<Box<[u64]>, u64> = HashMap::new();
    let mut exps = vec![0u64; ring + 1];
    enumerate_into(n, k, w, app, 0, &mut exps, &mut counts);
    Ok(Polynomial::from_counts(ring, counts))
}

// Depth-first over compositions, carrying the running exponent vector so that
// no tiling is materialised.
fn enumerate_into(
    n: usize,
    k: usize,
    w: &dyn TileWeight,
    app: AppendSpec,
    covered: usize,
    exps: &mut Vec<u64>,
    counts: &mut HashMap<Box<[u64]>, u64>,
) {
    let rem = n - covered;
    if rem == 0 {
        *counts.entry(exps.clone().into_boxed_slice()).or_insert(0) += 1;
        return;
    }
    let qi = exps.len() - 1;
    for i in 1..=k.min(rem) {
        let e = w.exponent(i, covered + 1 + app.before, rem - i + app.after);
        exps[i - 1] += 1;
        exps[qi] += e;
        enumerate_into(n, k, w, app, covered + i, exps, counts);
        exps[i - 1] -= 1;
        exps[qi] -= e;
    }
}

/// Same value as [`weighted_sum_enumerative`], by the first-tile recursion:
/// a first tile of length `i` leaves an `(n - i)`-board with `i` more cells
/// in front of it. The memo is indexed by the remaining length, which fixes
/// the accumulated prefix within one call.
pub fn weighted_sum_recursive(n: i64, k: usize, w: &dyn TileWeight, app: AppendSpec) -> Result<Polynomial> {
    check_bound(k, w)?;
    let ring = w.max_len();
    if n < 0 {
        return Ok(Polynomial::zero(ring));
    }
    let n = n as usize;
    let one = BigInt::one();
    let mut memo: Vec<Polynomial> = Vec::with_capacity(n + 1);
    memo.push(Polynomial::one(ring));
    for rem in 1..=n {
        let prefix = n - rem;
        let mut acc = Polynomial::zero(ring);
        for i in 1..=k.min(rem) {
            let mut z = vec![0u64; ring];
            z[i - 1] = 1;
            let e = w.exponent(i, prefix + 1 + app.before, rem - i + app.after);
            acc = &acc + &memo[rem - i].mul_term(&z, e, &one);
        }
        memo.push(acc);
    }
    Ok(memo.swap_remove(n))
}

/// Which side of the board a coherence check appends to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Before,
    After,
}

/// First point where a rule's tile exponent disagrees with its claimed shift.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoherenceViolation {
    pub side: Side,
    pub len: usize,
    pub start: usize,
    pub trailing: usize,
    pub m: usize,
    /// Exponent predicted by the shift factor.
    pub expected: u64,
    /// Exponent of the moved tile.
    pub actual: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoherenceReport {
    pub scheme: String,
    pub n_max: usize,
    pub checked: u64,
    pub violation: Option<CoherenceViolation>,
}

impl CoherenceReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks `f(i, s + m, t) = f(i, s, t) s^-_{m,i}` and
/// `f(i, s, t + m) = f(i, s, t) s^+_{m,i}` for all tile lengths and all
/// `s, t, m` up to `n_max`.
pub fn validate_weight_scheme(w: &dyn TileWeight, n_max: usize) -> Result<CoherenceReport> {
    if n_max == 0 {
        return Err(domain("n_max must be at least 1"));
    }
    let mut checked = 0u64;
    let report = |violation| CoherenceReport {
        scheme: w.name().to_string(),
        n_max,
        checked: 0,
        violation,
    };
    for len in 1..=w.max_len() {
        for start in 1..=n_max {
            for trailing in 0..=n_max {
                let base = w.exponent(len, start, trailing);
                for m in 1..=n_max {
                    for side in [Side::Before, Side::After] {
                        let (actual, shift) = match side {
                            Side::Before => (w.exponent(len, start + m, trailing), w.shift_before(len, m)),
                            Side::After => (w.exponent(len, start, trailing + m), w.shift_after(len, m)),
                        };
                        checked += 1;
                        if actual != base + shift {
                            let mut r = report(Some(CoherenceViolation {
                                side,
                                len,
                                start,
                                trailing,
                                m,
                                expected: base + shift,
                                actual,
                            }));
                            r.checked = checked;
                            return Ok(r);
                        }
                    }
                }
            }
        }
    }
    let mut r = report(None);
    r.checked = checked;
    Ok(r)
}

impl fmt::Display for CoherenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(
                f,
                "PASS scheme={} n_max={} checks={}",
                self.scheme, self.n_max, self.checked
            ),
            Some(v) => write!(
                f,
                "FAIL scheme={} side={:?} len={} start={} trailing={} m={} expected=q^{} actual=q^{}",
                self.scheme, v.side, v.len, v.start, v.trailing, v.m, v.expected, v.actual
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn inv_lp(k: usize) -> WeightScheme {
        WeightScheme::from_fn("inv-lp", k, |i| (0, 0, i))
    }

    fn maj_lp(k: usize) -> WeightScheme {
        WeightScheme::from_fn("maj-lp", k, |_| (0, 1, 0))
    }

    fn maj_rlp(k: usize) -> WeightScheme {
        WeightScheme::from_fn("maj-rlp", k, |i| (i * (i - 1) / 2, i - 1, 0))
    }

    fn p(s: &str, k: usize) -> Polynomial {
        Polynomial::parse(s, k).unwrap()
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fibonacci_k(0, 3).unwrap(), BigInt::from(1));
        assert_eq!(fibonacci_k(-2, 4).unwrap(), BigInt::from(0));
        assert_eq!(fibonacci_k(4, 2).unwrap(), BigInt::from(5));
        assert_eq!(fibonacci_k(4, 3).unwrap(), BigInt::from(7));
        assert_eq!(fibonacci_k(5, 1).unwrap(), BigInt::from(1));
        assert!(matches!(fibonacci_k(3, 0).unwrap_err(), Error::Domain(_)));
    }

    #[test]
    fn fibonacci_matches_naive_window_sum() {
        for k in 1..=5usize {
            let mut naive: Vec<i64> = Vec::new();
            for n in 0..=20usize {
                let v = if n == 0 {
                    1
                } else {
                    (1..=k).filter(|&d| d <= n).map(|d| naive[n - d]).sum()
                };
                naive.push(v);
                assert_eq!(fibonacci_k(n as i64, k).unwrap(), BigInt::from(v), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn tilings_in_lex_order() {
        let got: Vec<Vec<usize>> = enumerate_tilings(3, 2).iter().map(|t| t.parts().to_vec()).collect();
        assert_eq!(got, vec![vec![1, 1, 1], vec![1, 2], vec![2, 1]]);
        let empty = enumerate_tilings(0, 5);
        assert_eq!(empty, vec![Tiling::empty()]);
        assert_eq!(enumerate_tilings(4, 3).len(), 7);
    }

    #[test]
    fn tile_positions_satisfy_length_identity() {
        let t = Tiling::new(vec![2, 1, 3]).unwrap();
        for tile in t.tiles() {
            assert_eq!(tile.start - 1 + tile.len + tile.trailing, t.n());
        }
        let starts: Vec<usize> = t.tiles().map(|x| x.start).collect();
        assert_eq!(starts, [1, 3, 4]);
        assert_eq!(t.to_string(), "(2,1,3)");
        assert_eq!(Tiling::empty().to_string(), "()");
    }

    #[test]
    fn single_tiling_weights() {
        let t = Tiling::new(vec![1, 2]).unwrap();
        assert_eq!(tiling_weight(&t, &inv_lp(2), AppendSpec::NONE).unwrap(), p("z1*z2*q^2", 2));
        assert_eq!(
            tiling_weight(&Tiling::empty(), &inv_lp(2), AppendSpec::NONE).unwrap(),
            Polynomial::one(2)
        );
        let t = Tiling::new(vec![2]).unwrap();
        assert_eq!(
            tiling_weight(&t, &maj_rlp(2), AppendSpec::new(3, 0)).unwrap(),
            p("z2*q^4", 2)
        );
        let long = Tiling::new(vec![3]).unwrap();
        assert!(matches!(tiling_weight(&long, &inv_lp(2), AppendSpec::NONE).unwrap_err(), Error::Domain(_)));
    }

    #[test]
    fn enumerative_sum_small_case() {
        let got = weighted_sum_enumerative(3, 2, &maj_lp(2), AppendSpec::NONE).unwrap();
        assert_eq!(got, p("z1^3*q^3 + z1*z2*q + z1*z2*q^2", 2));
        let got = weighted_sum_enumerative(0, 2, &maj_lp(2), AppendSpec::new(4, 1)).unwrap();
        assert_eq!(got, Polynomial::one(2));
        assert!(weighted_sum_enumerative(-1, 2, &maj_lp(2), AppendSpec::NONE).unwrap().is_zero());
        let six = weighted_sum_enumerative(6, 3, &maj_rlp(3), AppendSpec::NONE).unwrap();
        assert_eq!(six.at_one(), fibonacci_k(6, 3).unwrap());
    }

    #[test]
    fn recursive_sum_small_cases() {
        let w = maj_rlp(3);
        let one = weighted_sum_recursive(1, 3, &w, AppendSpec::NONE).unwrap();
        assert_eq!(one, Polynomial::from_exps(3, vec![1, 0, 0], w.a(1), BigInt::one()));
        let inv_rlp = WeightScheme::from_fn("inv-rlp", 2, |i| (i * (i - 1) / 2, 0, 0));
        let five = weighted_sum_recursive(5, 2, &inv_rlp, AppendSpec::NONE).unwrap();
        assert_eq!(five.evaluate(&[1, 1], 1).unwrap(), BigInt::from(8));
    }

    #[test]
    fn bound_checks() {
        assert!(weighted_sum_enumerative(3, 3, &inv_lp(2), AppendSpec::NONE).is_err());
        assert!(weighted_sum_recursive(3, 0, &inv_lp(2), AppendSpec::NONE).is_err());
    }

    #[test]
    fn coherence_of_separable_schemes() {
        assert!(validate_weight_scheme(&inv_lp(4), 10).unwrap().passed());
        assert!(validate_weight_scheme(&maj_rlp(4), 10).unwrap().passed());
        assert!(validate_weight_scheme(&inv_lp(2), 0).is_err());
    }

    #[test]
    fn coupled_scheme_fails_with_witness() {
        let bad = CoupledScheme::new(maj_lp(2), 1);
        let r = validate_weight_scheme(&bad, 10).unwrap();
        let v = r.violation.expect("coupling breaks coherence");
        assert_eq!((v.side, v.len, v.start, v.trailing, v.m), (Side::Before, 1, 1, 1, 1));
        assert_eq!((v.expected, v.actual), (1, 2));
    }

    #[test]
    fn random_family_is_reproducible() {
        let a = WeightScheme::random_family(4, 7, 3);
        let b = WeightScheme::random_family(4, 7, 3);
        assert_eq!(a, b);
        assert_ne!(a, WeightScheme::random_family(4, 8, 3));
        for s in &a {
            for i in 1..=4 {
                assert!(s.a(i) <= 3 && s.b(i) <= 3 && s.c(i) <= 3);
            }
        }
    }

    #[test]
    fn expression_schemes_reject_negative_values() {
        let e = |s| LengthExpr::parse(s).unwrap();
        let ok = WeightScheme::from_exprs("g", 3, &e("i*(i-1)/2"), &e("i-1"), &e("0")).unwrap();
        assert_eq!(ok, maj_rlp(3).renamed("g"));
        assert!(WeightScheme::from_exprs("g", 3, &e("i-2"), &e("0"), &e("0")).is_err());
    }
}
