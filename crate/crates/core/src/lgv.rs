//! The shifted Toeplitz minor of weighted Fibonacci polynomials, its exact
//! determinant, the product formula for it, and a brute-force enumeration of
//! the vertex-disjoint path tuples that should account for it.
//!
//! Vertices are the integers `0, 1, 2, ...`; an arc `x -> x + d` with
//! `1 <= d <= k` is a tile of length `d` covering cells `x + 1 ..= x + d`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::identities::{determinant_sign, euclid, IdentityReport, Params};
use crate::poly::Polynomial;
use crate::tiling::{weighted_sum_enumerative, AppendSpec, TileWeight, WeightScheme};

pub const MAX_DET_DIM: usize = 6;
pub const MAX_PATH_VERTEX: usize = 24;

/// Rows `u = 0..k-1`, columns `v = n+k-1 ..= n+2k-2`, and
/// `n + k - 1 = p k + r` with `0 <= r < k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorSpec {
    pub n: usize,
    pub k: usize,
    pub u: Vec<usize>,
    pub v: Vec<usize>,
    pub p: usize,
    pub r: usize,
}

impl MinorSpec {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 1 || k < 1 {
            return Err(domain("minor needs n >= 1 and k >= 1"));
        }
        let (p, r) = euclid(n as u64, k as u64);
        Ok(MinorSpec {
            n,
            k,
            u: (0..k).collect(),
            v: (n + k - 1..=n + 2 * k - 2).collect(),
            p: p as usize,
            r: r as usize,
        })
    }
}

/// Square matrix of polynomials over a common ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    pub fn new(rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(domain("empty matrix"));
        }
        let ring = rows[0].first().map(Polynomial::k).unwrap_or(0);
        for row in &rows {
            if row.len() != dim {
                return Err(domain("matrix is not square"));
            }
            for e in row {
                if e.k() != ring {
                    return Err(Error::RingMismatch { left: ring, right: e.k() });
                }
            }
        }
        Ok(PolyMatrix { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ring(&self) -> usize {
        self.rows[0][0].k()
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Polynomial>] {
        &self.rows
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        PolyMatrix {
            rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }
}

impl Serialize for PolyMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows.len()))?;
        for row in &self.rows {
            seq.serialize_element(row)?;
        }
        seq.end()
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Entry `(i, j)` is the weighted sum over tilings of a `(v_j - u_i)`-board
/// preceded by `u_i` cells: the total weight of paths `u_i -> v_j`.
pub fn build_minor(spec: &MinorSpec, w: &dyn TileWeight) -> Result<PolyMatrix> {
    let rows = spec
        .u
        .iter()
        .map(|&ui| {
            spec.v
                .iter()
                .map(|&vj| weighted_sum_enumerative(vj as i64 - ui as i64, spec.k, w, AppendSpec::new(ui, 0)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    PolyMatrix::new(rows)
}

/// Exact determinant by expansion along successive rows, memoised on the set
/// of columns still available.
pub fn determinant(mat: &PolyMatrix) -> Result<Polynomial> {
    let dim = mat.dim();
    if dim > MAX_DET_DIM {
        return Err(Error::SizeLimit(format!(
            "determinant of a {dim}x{dim} matrix (limit {MAX_DET_DIM})"
        )));
    }
    let mut memo = HashMap::new();
    Ok(minor_det(mat, 0, (1u32 << dim) - 1, &mut memo))
}

fn minor_det(mat: &PolyMatrix, row: usize, cols: u32, memo: &mut HashMap<u32, Polynomial>) -> Polynomial {
    if row == mat.dim() {
        return Polynomial::one(mat.ring());
    }
    if let Some(d) = memo.get(&cols) {
        return d.clone();
    }
    let mut acc = Polynomial::zero(mat.ring());
    let mut sign_positive = true;
    for j in 0..mat.dim() {
        if cols & (1 << j) == 0 {
            continue;
        }
        let entry = mat.get(row, j);
        if !entry.is_zero() {
            let rest = minor_det(mat, row + 1, cols & !(1 << j), memo);
            let term = entry * &rest;
            acc = if sign_positive { &acc + &term } else { &acc - &term };
        }
        sign_positive = !sign_positive;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// `sign * z_k^{n+k-1} prod_{i=1}^r f_{k,i,pk} prod_{j=0}^{p-1} prod_{a=1}^k
/// f_{k,r+jk+a,(p-j-1)k}`, the weight of the tuple made only of length-`k`
/// arcs, with sign `+1` for odd `k` and `(-1)^{n-1}` for even `k`.
pub fn closed_form_det(spec: &MinorSpec, w: &dyn TileWeight) -> Result<Polynomial> {
    let (k, p, r) = (spec.k, spec.p, spec.r);
    if k > w.max_len() {
        return Err(domain(format!("k = {k} exceeds scheme '{}'", w.name())));
    }
    let mut q = 0u64;
    for i in 1..=r {
        q += w.exponent(k, i, p * k);
    }
    for j in 0..p {
        for a in 1..=k {
            q += w.exponent(k, r + j * k + a, (p - j - 1) * k);
        }
    }
    let ring = w.max_len();
    let mut z = vec![0; ring];
    z[k - 1] = (spec.n + k - 1) as u64;
    Ok(Polynomial::from_exps(ring, z, q, BigInt::from(determinant_sign(spec.n, k))))
}

/// One path per source: `paths[i]` runs from `u_i` to `v_{alpha[i]}` and
/// lists every vertex it visits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathTuple {
    pub paths: Vec<Vec<usize>>,
    pub alpha: Vec<usize>,
}

impl PathTuple {
    /// Sign of the permutation `alpha`.
    pub fn sign(&self) -> i64 {
        let mut sign = 1;
        for i in 0..self.alpha.len() {
            for j in i + 1..self.alpha.len() {
                if self.alpha[i] > self.alpha[j] {
                    sign = -sign;
                }
            }
        }
        sign
    }

    /// Product of arc weights; the arc `x -> y` on a path ending at `e` is a
    /// tile of length `y - x` starting at cell `x + 1` with `e - y` cells
    /// after it.
    pub fn weight(&self, w: &dyn TileWeight) -> Polynomial {
        let ring = w.max_len();
        let mut z = vec![0u64; ring];
        let mut q = 0;
        for path in &self.paths {
            let end = *path.last().expect("paths are nonempty");
            for arc in path.windows(2) {
                let len = arc[1] - arc[0];
                z[len - 1] += 1;
                q += w.exponent(len, arc[0] + 1, end - arc[1]);
            }
        }
        Polynomial::from_exps(ring, z, q, BigInt::one())
    }

    pub fn signed_weight(&self, w: &dyn TileWeight) -> Polynomial {
        self.weight(w).scale(&BigInt::from(self.sign()))
    }

    pub fn only_length(&self, len: usize) -> bool {
        self.paths.iter().all(|p| p.windows(2).all(|a| a[1] - a[0] == len))
    }
}

impl fmt::Display for PathTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.paths.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            let steps: Vec<String> = p.iter().map(ToString::to_string).collect();
            f.write_str(&steps.join("->"))?;
        }
        Ok(())
    }
}

/// All tuples of pairwise vertex-disjoint paths from `u` to `v` (in some
/// order), with arcs of length `1..=k`. Sources are routed in order and every
/// `u` and `v` vertex is reserved up front, so a path can only pass through
/// free vertices and must stop at an unused sink.
pub fn enumerate_noncrossing_tuples(spec: &MinorSpec) -> Result<Vec<PathTuple>> {
    let top = spec.n + 2 * spec.k - 2;
    if top > MAX_PATH_VERTEX {
        return Err(Error::SizeLimit(format!(
            "path enumeration up to vertex {top} (limit {MAX_PATH_VERTEX})"
        )));
    }
    let mut occupied = vec![false; top + 1];
    for &x in spec.u.iter().chain(&spec.v) {
        occupied[x] = true;
    }
    let mut search = PathSearch {
        spec,
        occupied,
        sink_used: vec![false; spec.k],
        paths: Vec::new(),
        alpha: Vec::new(),
        out: Vec::new(),
    };
    search.route(0);
    Ok(search.out)
}

struct PathSearch<'a> {
    spec: &'a MinorSpec,
    occupied: Vec<bool>,
    sink_used: Vec<bool>,
    paths: Vec<Vec<usize>>,
    alpha: Vec<usize>,
    out: Vec<PathTuple>,
}

impl PathSearch<'_> {
    fn route(&mut self, source: usize) {
        if source == self.spec.k {
            self.out.push(PathTuple {
                paths: self.paths.clone(),
                alpha: self.alpha.clone(),
            });
            return;
        }
        let mut path = vec![self.spec.u[source]];
        self.extend(source, &mut path);
    }

    fn extend(&mut self, source: usize, path: &mut Vec<usize>) {
        let at = *path.last().expect("path starts at its source");
        for d in 1..=self.spec.k {
            let next = at + d;
            if next >= self.occupied.len() {
                break;
            }
            if let Some(j) = self.spec.v.iter().position(|&x| x == next) {
                if !self.sink_used[j] {
                    self.sink_used[j] = true;
                    path.push(next);
                    self.paths.push(path.clone());
                    self.alpha.push(j);
                    self.route(source + 1);
                    self.alpha.pop();
                    self.paths.pop();
                    path.pop();
                    self.sink_used[j] = false;
                }
                continue;
            }
            if self.occupied[next] {
                continue;
            }
            self.occupied[next] = true;
            path.push(next);
            self.extend(source, path);
            path.pop();
            self.occupied[next] = false;
        }
    }
}

fn lgv_params(spec: &MinorSpec, scheme: &str) -> Params {
    Params {
        m: None,
        n: spec.n,
        k: spec.k,
        scheme: scheme.to_string(),
    }
}

/// Exact determinant against the product formula.
pub fn verify_determinant(n: usize, k: usize, w: &dyn TileWeight) -> Result<IdentityReport> {
    let spec = MinorSpec::new(n, k)?;
    let exact = determinant(&build_minor(&spec, w)?)?;
    let closed = closed_form_det(&spec, w)?;
    IdentityReport::new("det", lgv_params(&spec, w.name()), exact, closed)
}

/// Exact determinant against the signed weight of the vertex-disjoint path
/// tuples.
pub fn verify_determinant_paths(n: usize, k: usize, w: &dyn TileWeight) -> Result<IdentityReport> {
    let spec = MinorSpec::new(n, k)?;
    let exact = determinant(&build_minor(&spec, w)?)?;
    let mut paths = Polynomial::zero(w.max_len());
    for t in enumerate_noncrossing_tuples(&spec)? {
        paths = &paths + &t.signed_weight(w);
    }
    IdentityReport::new("det-paths", lgv_params(&spec, w.name()), exact, paths)
}

/// The unweighted minor's determinant is `1` for odd `k` and `(-1)^{n-1}`
/// for even `k`.
pub fn miles_sign_check(n: usize, k: usize) -> Result<IdentityReport> {
    if k > 5 {
        return Err(Error::SizeLimit(format!("sign check for k = {k} (limit 5)")));
    }
    let spec = MinorSpec::new(n, k)?;
    let w = WeightScheme::unweighted(k);
    let det = determinant(&build_minor(&spec, &w)?)?.at_one();
    IdentityReport::new(
        "det-sign",
        lgv_params(&spec, "count"),
        Polynomial::constant(k, det),
        Polynomial::constant(k, determinant_sign(n, k)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statistics::builtin_scheme;

    fn scheme(name: &str, k: usize) -> WeightScheme {
        builtin_scheme(name.parse().unwrap(), k).unwrap()
    }

    fn constants(rows: &[&[i64]]) -> PolyMatrix {
        let ring = 1;
        PolyMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&c| Polynomial::constant(ring, c)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn minor_spec_layout() {
        let s = MinorSpec::new(2, 3).unwrap();
        assert_eq!(s.u, vec![0, 1, 2]);
        assert_eq!(s.v, vec![4, 5, 6]);
        assert_eq!((s.p, s.r), (1, 1));
        let s = MinorSpec::new(3, 2).unwrap();
        assert_eq!((s.p, s.r), (2, 0));
        assert!(MinorSpec::new(0, 2).is_err());
    }

    #[test]
    fn unweighted_minor_values() {
        let spec = MinorSpec::new(2, 2).unwrap();
        let m = build_minor(&spec, &WeightScheme::unweighted(2)).unwrap();
        let at_one = m.map(|p| Polynomial::constant(1, p.at_one()));
        assert_eq!(at_one, constants(&[&[3, 5], &[2, 3]]));
        assert_eq!(determinant(&m).unwrap().at_one(), BigInt::from(-1));
    }

    #[test]
    fn one_by_one_minor() {
        let w = scheme("inv-lp", 1);
        let spec = MinorSpec::new(4, 1).unwrap();
        let m = build_minor(&spec, &w).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.get(0, 0), &weighted_sum_enumerative(4, 1, &w, AppendSpec::NONE).unwrap());
        let spec = MinorSpec::new(1, 1).unwrap();
        assert_eq!(determinant(&build_minor(&spec, &w).unwrap()).unwrap().to_string(), "z1");
    }

    #[test]
    fn determinant_basics() {
        assert_eq!(determinant(&constants(&[&[1, 0], &[0, 1]])).unwrap(), Polynomial::one(1));
        assert_eq!(determinant(&constants(&[&[3, 5], &[2, 3]])).unwrap(), Polynomial::constant(1, -1));
        let equal_rows = constants(&[&[1, 2, 3], &[4, 5, 6], &[1, 2, 3]]);
        assert!(determinant(&equal_rows).unwrap().is_zero());
        let big = PolyMatrix::new(vec![vec![Polynomial::one(1); 7]; 7]).unwrap();
        assert!(matches!(determinant(&big), Err(Error::SizeLimit(_))));
    }

    #[test]
    fn closed_form_examples() {
        let s = MinorSpec::new(2, 2).unwrap();
        assert_eq!(closed_form_det(&s, &scheme("inv-lp", 2)).unwrap().to_string(), "-z2^3*q^4");
        let s = MinorSpec::new(1, 3).unwrap();
        assert_eq!(closed_form_det(&s, &scheme("inv-rlp", 3)).unwrap().to_string(), "z3^3*q^9");
        for (n, k) in [(1, 2), (4, 3), (3, 4)] {
            let s = MinorSpec::new(n, k).unwrap();
            let d = closed_form_det(&s, &scheme("maj-lp", k)).unwrap();
            let t = d.leading_term().unwrap();
            let big_n = (n + k - 1) as u64;
            assert_eq!(t.q, big_n * (big_n - 1) / 2);
            assert_eq!(t.z[k - 1], big_n);
        }
    }

    #[test]
    fn unique_tuple_small_cases() {
        let spec = MinorSpec::new(2, 2).unwrap();
        let tuples = enumerate_noncrossing_tuples(&spec).unwrap();
        assert_eq!(tuples.len(), 1);
        assert!(tuples[0].only_length(2));
        assert_eq!(tuples[0].alpha, vec![1, 0]);
        assert_eq!(tuples[0].sign(), -1);
        let spec = MinorSpec::new(5, 1).unwrap();
        let tuples = enumerate_noncrossing_tuples(&spec).unwrap();
        assert_eq!(tuples.len(), 1);
        assert_eq!(tuples[0].paths[0], vec![0, 1, 2, 3, 4, 5]);
        let spec = MinorSpec::new(20, 4).unwrap();
        assert!(matches!(enumerate_noncrossing_tuples(&spec), Err(Error::SizeLimit(_))));
    }

    #[test]
    fn sign_examples() {
        let one = |n, k| miles_sign_check(n, k).unwrap();
        assert!(one(4, 3).passed());
        assert_eq!(one(4, 3).lhs.at_one(), BigInt::from(1));
        assert_eq!(one(1, 2).lhs.at_one(), BigInt::from(1));
        assert_eq!(one(2, 2).lhs.at_one(), BigInt::from(-1));
        assert!(miles_sign_check(2, 6).is_err());
    }

    #[test]
    fn rows_are_shifted_copies_of_the_first() {
        let w = scheme("maj-rlp", 3);
        let spec = MinorSpec::new(3, 3).unwrap();
        let m = build_minor(&spec, &w).unwrap();
        for i in 1..3 {
            for j in 0..3 {
                let len = (spec.v[j] - spec.u[i]) as i64;
                let unshifted = weighted_sum_enumerative(len, 3, &w, AppendSpec::NONE).unwrap();
                let shift = crate::tiling::before_shift(&w, spec.u[i]);
                assert_eq!(m.get(i, j), &unshifted.shift_unchecked(&shift));
            }
        }
    }

    #[test]
    fn matrix_json_is_nested_rows() {
        let spec = MinorSpec::new(1, 2).unwrap();
        let m = build_minor(&spec, &scheme("maj-lp", 2)).unwrap();
        let v = serde_json::to_value(&m).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 2);
        assert_eq!(v[0].as_array().unwrap().len(), 2);
        assert_eq!(v[0][0]["k"], 2);
    }
}
