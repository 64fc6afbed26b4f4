//! Layered permutations and layered set partitions built from tilings, the
//! statistics `inv`, `maj`, `rb`, `ls` computed from their definitions, and
//! the tile-weight schemes that reproduce each statistic's distribution.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::poly::Polynomial;
use crate::tiling::{enumerate_tilings, for_each_composition, Tiling, WeightScheme};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(domain(format!("{values:?} is not a permutation of 1..={n}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() > 9 { " " } else { "" };
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"4231"` or, for values above 9, `"10 2 1 ..."`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Option<Vec<usize>> = if s.contains(char::is_whitespace) {
            s.split_whitespace().map(|t| t.parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        let values = values.ok_or_else(|| domain(format!("cannot read permutation {s:?}")))?;
        Permutation::new(values)
    }
}

/// A set partition of `1..=n`, blocks sorted internally and ordered by
/// increasing minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition(Vec<Vec<usize>>);

impl SetPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(domain("empty block"));
            }
            b.sort_unstable();
            for &v in b.iter() {
                if v == 0 || v > n || seen[v] {
                    return Err(domain(format!("blocks do not partition 1..={n}")));
                }
                seen[v] = true;
            }
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition(blocks))
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().map(Vec::len).sum()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() > 9 { "," } else { "" };
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, v) in b.iter().enumerate() {
                if j > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LayeredObject {
    Permutation(Permutation),
    Partition(SetPartition),
}

impl fmt::Display for LayeredObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LayeredObject::Permutation(p) => p.fmt(f),
            LayeredObject::Partition(p) => p.fmt(f),
        }
    }
}

/// Layered permutation: layer `j` holds the values `trailing+1 ..= trailing+len`
/// in increasing order, so every layer sits above all later ones.
pub fn tiling_to_lp(t: &Tiling) -> Permutation {
    let mut values = Vec::with_capacity(t.n());
    for tile in t.tiles() {
        values.extend(tile.trailing + 1..=tile.trailing + tile.len);
    }
    Permutation(values)
}

/// Reverse layered permutation: the reversal of [`tiling_to_lp`].
pub fn tiling_to_rlp(t: &Tiling) -> Permutation {
    tiling_to_lp(t).reversed()
}

/// Partially reversed layered permutation: each LP layer with all but its
/// last (largest) entry reversed.
pub fn tiling_to_prlp(t: &Tiling) -> Permutation {
    let mut values = Vec::with_capacity(t.n());
    for tile in t.tiles() {
        let lo = tile.trailing + 1;
        let hi = tile.trailing + tile.len;
        values.extend((lo..hi).rev());
        values.push(hi);
    }
    Permutation(values)
}

/// Layered set partition: consecutive intervals with the tile lengths.
pub fn tiling_to_partition(t: &Tiling) -> SetPartition {
    SetPartition(
        t.tiles()
            .map(|tile| (tile.start..tile.start + tile.len).collect())
            .collect(),
    )
}

/// Number of pairs `i < j` with `p(i) > p(j)`.
pub fn inv(p: &Permutation) -> u64 {
    let v = p.values();
    let mut count = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                count += 1;
            }
        }
    }
    count
}

/// Sum of the (1-based) descent positions.
pub fn maj(p: &Permutation) -> u64 {
    p.values()
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i as u64 + 1)
        .sum()
}

/// Pairs `(b, B_j)` with `b` in an earlier block and `b < max B_j`.
pub fn rb(p: &SetPartition) -> u64 {
    let blocks = p.blocks();
    let mut count = 0;
    for (j, later) in blocks.iter().enumerate() {
        let max = *later.last().expect("blocks are nonempty");
        for earlier in &blocks[..j] {
            count += earlier.iter().filter(|&&b| b < max).count() as u64;
        }
    }
    count
}

/// Pairs `(b, B_i)` with `b` in a later block and `b > min B_i`.
pub fn ls(p: &SetPartition) -> u64 {
    let blocks = p.blocks();
    let mut count = 0;
    for (i, earlier) in blocks.iter().enumerate() {
        let min = earlier[0];
        for later in &blocks[i + 1..] {
            count += later.iter().filter(|&&b| b > min).count() as u64;
        }
    }
    count
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    Lp,
    Rlp,
    Prlp,
    Lpi,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Lp, Family::Rlp, Family::Prlp, Family::Lpi];

    pub fn name(self) -> &'static str {
        match self {
            Family::Lp => "lp",
            Family::Rlp => "rlp",
            Family::Prlp => "prlp",
            Family::Lpi => "lpi",
        }
    }

    pub fn build(self, t: &Tiling) -> LayeredObject {
        match self {
            Family::Lp => LayeredObject::Permutation(tiling_to_lp(t)),
            Family::Rlp => LayeredObject::Permutation(tiling_to_rlp(t)),
            Family::Prlp => LayeredObject::Permutation(tiling_to_prlp(t)),
            Family::Lpi => LayeredObject::Partition(tiling_to_partition(t)),
        }
    }

    /// Layer lengths read off the object itself, left to right. `None` if
    /// the object does not belong to this family's shape.
    pub fn layer_lengths(self, obj: &LayeredObject) -> Option<Vec<usize>> {
        match (self, obj) {
            (Family::Lpi, LayeredObject::Partition(p)) => Some(p.blocks().iter().map(Vec::len).collect()),
            (Family::Lp | Family::Prlp, LayeredObject::Permutation(p)) => {
                Some(split_points(p.values(), |prefix_min, _, _, suffix_max| prefix_min > suffix_max))
            }
            (Family::Rlp, LayeredObject::Permutation(p)) => {
                Some(split_points(p.values(), |_, prefix_max, suffix_min, _| prefix_max < suffix_min))
            }
            _ => None,
        }
    }

    pub fn objects(self, n: usize, k: usize) -> Vec<(Tiling, LayeredObject)> {
        enumerate_tilings(n, k)
            .into_iter()
            .map(|t| {
                let o = self.build(&t);
                (t, o)
            })
            .collect()
    }
}

// Cuts `v` after every position where `cut(prefix_min, prefix_max,
// suffix_min, suffix_max)` holds; returns the piece lengths.
fn split_points(v: &[usize], cut: impl Fn(usize, usize, usize, usize) -> bool) -> Vec<usize> {
    let n = v.len();
    let mut suffix_min = vec![usize::MAX; n + 1];
    let mut suffix_max = vec![0; n + 1];
    for i in (0..n).rev() {
        suffix_min[i] = suffix_min[i + 1].min(v[i]);
        suffix_max[i] = suffix_max[i + 1].max(v[i]);
    }
    let mut lengths = Vec::new();
    let (mut pmin, mut pmax, mut last) = (usize::MAX, 0, 0);
    for i in 0..n {
        pmin = pmin.min(v[i]);
        pmax = pmax.max(v[i]);
        if i + 1 == n || cut(pmin, pmax, suffix_min[i + 1], suffix_max[i + 1]) {
            lengths.push(i + 1 - last);
            last = i + 1;
        }
    }
    lengths
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Statistic {
    Inv,
    Maj,
    Rb,
    Ls,
}

impl Statistic {
    pub fn name(self) -> &'static str {
        match self {
            Statistic::Inv => "inv",
            Statistic::Maj => "maj",
            Statistic::Rb => "rb",
            Statistic::Ls => "ls",
        }
    }

    pub fn eval(self, obj: &LayeredObject) -> Option<u64> {
        match (self, obj) {
            (Statistic::Inv, LayeredObject::Permutation(p)) => Some(inv(p)),
            (Statistic::Maj, LayeredObject::Permutation(p)) => Some(maj(p)),
            (Statistic::Rb, LayeredObject::Partition(p)) => Some(rb(p)),
            (Statistic::Ls, LayeredObject::Partition(p)) => Some(ls(p)),
            _ => None,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "inv" => Ok(Statistic::Inv),
            "maj" => Ok(Statistic::Maj),
            "rb" => Ok(Statistic::Rb),
            "ls" => Ok(Statistic::Ls),
            _ => Err(domain(format!("unknown statistic {s:?}"))),
        }
    }
}

/// A statistic together with the family it is distributed over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StatSetPair {
    pub statistic: Statistic,
    pub family: Family,
}

impl StatSetPair {
    pub const ALL: [StatSetPair; 8] = [
        StatSetPair::of(Statistic::Inv, Family::Lp),
        StatSetPair::of(Statistic::Inv, Family::Rlp),
        StatSetPair::of(Statistic::Inv, Family::Prlp),
        StatSetPair::of(Statistic::Maj, Family::Lp),
        StatSetPair::of(Statistic::Maj, Family::Rlp),
        StatSetPair::of(Statistic::Maj, Family::Prlp),
        StatSetPair::of(Statistic::Rb, Family::Lpi),
        StatSetPair::of(Statistic::Ls, Family::Lpi),
    ];

    const fn of(statistic: Statistic, family: Family) -> Self {
        StatSetPair { statistic, family }
    }

    pub fn new(statistic: Statistic, family: Family) -> Result<Self> {
        let permutation_stat = matches!(statistic, Statistic::Inv | Statistic::Maj);
        let permutation_family = family != Family::Lpi;
        if permutation_stat != permutation_family {
            return Err(domain(format!(
                "{} is not defined on {}",
                statistic.name(),
                family.name()
            )));
        }
        Ok(StatSetPair { statistic, family })
    }

    pub fn name(&self) -> String {
        format!("{}-{}", self.statistic.name(), self.family.name())
    }

    /// Pairs that have a tile-local weight scheme (all but `ls-lpi`).
    pub fn schemed() -> impl Iterator<Item = StatSetPair> {
        Self::ALL.into_iter().filter(|p| p.statistic != Statistic::Ls)
    }
}

impl fmt::Display for StatSetPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.statistic.name(), self.family.name())
    }
}

impl FromStr for StatSetPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (stat, fam) = s
            .split_once('-')
            .ok_or_else(|| domain(format!("expected <stat>-<family>, got {s:?}")))?;
        let family = Family::ALL
            .into_iter()
            .find(|f| f.name() == fam)
            .ok_or_else(|| domain(format!("unknown family {fam:?}")))?;
        StatSetPair::new(Statistic::parse(stat)?, family)
    }
}

/// `sum over objects (prod_j z_{len(layer_j)}) q^{stat}` over the family's
/// objects of size `n` with layers of length at most `k`. Layer lengths and
/// statistic values come from the objects, not from any weight scheme.
pub fn distribution(pair: StatSetPair, n: usize, k: usize) -> Result<Polynomial> {
    let pair = StatSetPair::new(pair.statistic, pair.family)?;
    if k == 0 {
        return Err(domain("k must be at least 1"));
    }
    let mut counts: HashMap<Box<[u64]>, u64> = HashMap::new();
    let mut failure = None;
    for_each_composition(n, k, |parts| {
        if failure.is_some() {
            return;
        }
        let t = Tiling::new(parts.to_vec()).expect("positive parts");
        let obj = pair.family.build(&t);
        let layers = pair.family.layer_lengths(&obj).expect("object built by its own family");
        let stat = pair.statistic.eval(&obj).expect("pair validated");
        let mut exps = vec![0u64; k + 1];
        for len in layers {
            if len > k {
                failure = Some(domain(format!("{obj} has a layer longer than {k}")));
                return;
            }
            exps[len - 1] += 1;
        }
        exps[k] = stat;
        *counts.entry(exps.into_boxed_slice()).or_insert(0) += 1;
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(Polynomial::from_counts(k, counts)),
    }
}

/// The family's objects of size `n` (layers at most `k`) in tiling order,
/// each with its statistic value.
pub fn objects_with_stat(pair: StatSetPair, n: usize, k: usize) -> Result<Vec<(LayeredObject, u64)>> {
    let pair = StatSetPair::new(pair.statistic, pair.family)?;
    Ok(pair
        .family
        .objects(n, k)
        .into_iter()
        .map(|(_, o)| {
            let s = pair.statistic.eval(&o).expect("pair validated");
            (o, s)
        })
        .collect())
}

fn binom2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// The separable weight scheme `(A, B, C)` whose weighted tiling sum equals
/// `distribution(pair, n, k)`, tabulated for tile lengths `1..=k`.
pub fn builtin_scheme(pair: StatSetPair, k: usize) -> Result<WeightScheme> {
    if k == 0 {
        return Err(domain("k must be at least 1"));
    }
    let abc: fn(u64) -> (u64, u64, u64) = match (pair.statistic, pair.family) {
        (Statistic::Inv, Family::Lp) => |i| (0, 0, i),
        (Statistic::Inv, Family::Rlp) => |i| (binom2(i), 0, 0),
        (Statistic::Inv, Family::Prlp) => |i| (binom2(i - 1), 0, i),
        (Statistic::Maj, Family::Lp) | (Statistic::Rb, Family::Lpi) => |_| (0, 1, 0),
        (Statistic::Maj, Family::Rlp) => |i| (binom2(i), i - 1, 0),
        // A length-1 layer still closes the descent at the end of the layer
        // before it, so its slope is 1 rather than i - 1 = 0.
        (Statistic::Maj, Family::Prlp) => |i| (binom2(i - 1), (i - 1).max(1), 0),
        (Statistic::Ls, Family::Lpi) => {
            return Err(Error::UnsupportedScheme(
                "ls-lpi: a block's ls contribution depends on how many blocks precede it".into(),
            ))
        }
        _ => return Err(domain(format!("{} is not a valid pair", pair.name()))),
    };
    Ok(WeightScheme::from_fn(pair.name(), k, abc))
}
