//! Frozen values computed by hand or from first principles, checked against
//! the library.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use qfib_core::lgv::{build_minor, closed_form_det, determinant, MinorSpec};
use qfib_core::statistics::{distribution, objects_with_stat, StatSetPair};
use qfib_core::tiling::{enumerate_tilings, fibonacci_k, WeightScheme};
use qfib_core::Polynomial;

fn pair(s: &str) -> StatSetPair {
    s.parse().unwrap()
}

/// Collapses the z-variables: coefficient of each power of q.
fn q_marginal(p: &Polynomial) -> BTreeMap<u64, i64> {
    let mut out = BTreeMap::new();
    for t in p.terms() {
        *out.entry(t.q).or_insert(0) += i64::try_from(t.coeff).unwrap();
    }
    out
}

fn marginal(pairs: &[(u64, i64)]) -> BTreeMap<u64, i64> {
    pairs.iter().copied().collect()
}

#[test]
fn k_fibonacci_values() {
    let fib: Vec<u64> = (0..=10).map(|n| fibonacci_k(n, 2).unwrap().try_into().unwrap()).collect();
    assert_eq!(fib, [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89]);
    let trib: Vec<u64> = (0..=10).map(|n| fibonacci_k(n, 3).unwrap().try_into().unwrap()).collect();
    assert_eq!(trib, [1, 1, 2, 4, 7, 13, 24, 44, 81, 149, 274]);
    assert_eq!(fibonacci_k(-1, 3).unwrap(), BigInt::from(0));
    assert_eq!(fibonacci_k(7, 1).unwrap(), BigInt::from(1));
    assert_eq!(fibonacci_k(100, 2).unwrap().to_string(), "573147844013817084101");
}

#[test]
fn inversions_over_layered_permutations_of_four() {
    // inv of 1234, 2341, 3412, 3421, 4123, 4231, 4312, 4321
    let d = distribution(pair("inv-lp"), 4, 4).unwrap();
    assert_eq!(q_marginal(&d), marginal(&[(0, 1), (3, 2), (4, 1), (5, 3), (6, 1)]));
}

#[test]
fn major_index_over_layered_permutations_of_four() {
    // maj of 1234, 2341, 3412, 3421, 4123, 4231, 4312, 4321
    let d = distribution(pair("maj-lp"), 4, 4).unwrap();
    assert_eq!(q_marginal(&d), marginal(&[(0, 1), (1, 1), (2, 1), (3, 2), (4, 1), (5, 1), (6, 1)]));
}

#[test]
fn inversions_over_reverse_layered_permutations_of_four() {
    // inv of 4321, 1432, 2143, 1243, 3214, 1324, 2134, 1234
    let d = distribution(pair("inv-rlp"), 4, 4).unwrap();
    assert_eq!(q_marginal(&d), marginal(&[(0, 1), (1, 3), (2, 1), (3, 2), (6, 1)]));
}

#[test]
fn block_statistics_over_small_partitions() {
    // 12/34, 1/2/34, 1/23/4, 12/3/4, 1/2/3/4 with rb 2, 3, 4, 5, 6 and ls 2, 5, 4, 3, 6
    let rb = distribution(pair("rb-lpi"), 4, 2).unwrap();
    assert_eq!(
        rb,
        Polynomial::parse("z1^4*q^6 + z1^2*z2*q^5 + z1^2*z2*q^4 + z1^2*z2*q^3 + z2^2*q^2", 2).unwrap()
    );
    let ls = distribution(pair("ls-lpi"), 4, 2).unwrap();
    assert_eq!(q_marginal(&ls), q_marginal(&rb));
}

#[test]
fn objects_with_statistics_listing() {
    let rows = objects_with_stat(pair("maj-prlp"), 3, 3).unwrap();
    let text: Vec<String> = rows.iter().map(|(o, s)| format!("{o} {s}")).collect();
    assert_eq!(text, ["321 3", "312 1", "231 2", "213 1"]);
}

#[test]
fn tilings_of_four_with_bound_two() {
    let shown: Vec<String> = enumerate_tilings(4, 2).iter().map(ToString::to_string).collect();
    assert_eq!(shown, ["(1,1,1,1)", "(1,1,2)", "(1,2,1)", "(2,1,1)", "(2,2)"]);
}

#[test]
fn small_determinants() {
    let spec = MinorSpec::new(3, 2).unwrap();
    let w = WeightScheme::unweighted(2);
    let d = determinant(&build_minor(&spec, &w).unwrap()).unwrap();
    // F4*F4 - F5*F3 = 25 - 24 at z = q = 1
    assert_eq!(d.at_one(), BigInt::from(1));
    assert_eq!(d, closed_form_det(&spec, &w).unwrap());
    assert_eq!(d.to_string(), "z2^4");
}
