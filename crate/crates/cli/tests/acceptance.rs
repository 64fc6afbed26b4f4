//! One test per acceptance criterion. Each prints a single
//! `criterion N: PASS|FAIL ...` line before asserting.

use std::collections::HashSet;
use std::time::Instant;

use num_bigint::BigInt;
use qfib_core::identities::{determinant_sign, verify_convolution, verify_k_reduction, verify_recursion};
use qfib_core::lgv::{build_minor, closed_form_det, determinant, enumerate_noncrossing_tuples, MinorSpec};
use qfib_core::registry::{IdentityRegistry, SchemeCase, SchemeRegistry, VerifyContext};
use qfib_core::statistics::{
    builtin_scheme, distribution, inv, maj, tiling_to_lp, tiling_to_partition, tiling_to_prlp, tiling_to_rlp,
    Family, Permutation, StatSetPair,
};
use qfib_core::tiling::{
    enumerate_tilings, fibonacci_k, validate_weight_scheme, weighted_sum_enumerative, weighted_sum_recursive,
    AppendSpec, CoupledScheme, WeightScheme,
};
use qfib_core::Polynomial;

fn report(n: u32, failures: &[String], detail: &str) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {n}: {verdict} {detail}");
    for f in failures.iter().take(20) {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {n}: {} failure(s)", failures.len());
}

#[test]
fn criterion_1_counting() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for k in 1..=5 {
        for n in 0..=16 {
            let tilings = enumerate_tilings(n, k);
            let expected = fibonacci_k(n as i64, k).unwrap();
            if BigInt::from(tilings.len()) != expected {
                failures.push(format!("n={n} k={k}: {} tilings, F = {expected}", tilings.len()));
            }
            let images = [
                tilings.iter().map(|t| tiling_to_lp(t).to_string()).collect::<HashSet<_>>(),
                tilings.iter().map(|t| tiling_to_rlp(t).to_string()).collect(),
                tilings.iter().map(|t| tiling_to_prlp(t).to_string()).collect(),
                tilings.iter().map(|t| tiling_to_partition(t).to_string()).collect(),
            ];
            for (name, img) in ["lp", "rlp", "prlp", "partition"].iter().zip(&images) {
                if img.len() != tilings.len() {
                    failures.push(format!("n={n} k={k}: {name} image has {} elements", img.len()));
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs > 30.0 {
        failures.push(format!("took {secs:.1}s (target 30s)"));
    }
    report(1, &failures, &format!("n<=16, k<=5 in {secs:.1}s"));
}

fn set(items: &[&str]) -> HashSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

#[test]
fn criterion_2_distribution_equals_weight() {
    let mut failures = Vec::new();
    for pair in StatSetPair::schemed() {
        for k in 1..=4 {
            let w = builtin_scheme(pair, k).unwrap();
            for n in 0..=10 {
                let by_objects = distribution(pair, n, k).unwrap();
                let by_enum = weighted_sum_enumerative(n as i64, k, &w, AppendSpec::NONE).unwrap();
                let by_rec = weighted_sum_recursive(n as i64, k, &w, AppendSpec::NONE).unwrap();
                if by_objects != by_enum || by_enum != by_rec {
                    let diff = (&by_objects - &by_enum).leading_term();
                    failures.push(format!("{pair} n={n} k={k}: witness {diff:?}"));
                }
            }
        }
    }
    let p: Permutation = "453612".parse().unwrap();
    if inv(&p) != 10 || maj(&p) != 6 {
        failures.push(format!("453612: inv {} maj {}", inv(&p), maj(&p)));
    }
    let listing = |f: Family, n, k| -> HashSet<String> { f.objects(n, k).iter().map(|(_, o)| o.to_string()).collect() };
    let listings = [
        ("LP_4", listing(Family::Lp, 4, 4), set(&["1234", "2341", "3412", "3421", "4123", "4231", "4312", "4321"])),
        ("RLP_4", listing(Family::Rlp, 4, 4), set(&["4321", "1432", "2143", "1243", "3214", "1324", "2134", "1234"])),
        ("PRLP_4", listing(Family::Prlp, 4, 4), set(&["3214", "3241", "3412", "3421", "4213", "4231", "4312", "4321"])),
        ("LPi_4^2", listing(Family::Lpi, 4, 2), set(&["12/34", "1/2/34", "1/23/4", "12/3/4", "1/2/3/4"])),
    ];
    for (name, got, want) in listings {
        if got != want {
            failures.push(format!("{name}: got {got:?}"));
        }
    }
    report(2, &failures, "7 schemed pairs, n<=10, k<=4, anchors and listings");
}

#[test]
fn criterion_3_ls_rb_equidistribution() {
    let mut failures = Vec::new();
    for k in 1..=4 {
        for n in 0..=10 {
            let ls = distribution("ls-lpi".parse().unwrap(), n, k).unwrap();
            let rb = distribution("rb-lpi".parse().unwrap(), n, k).unwrap();
            if ls != rb {
                failures.push(format!("n={n} k={k}: witness {:?}", (&ls - &rb).leading_term()));
            }
        }
    }
    report(3, &failures, "n<=10, k<=4 with full z-profile");
}

#[test]
fn criterion_4_identity_suite() {
    let start = Instant::now();
    let registry = SchemeRegistry::standard();
    let identities = IdentityRegistry::standard();
    let mut failures = Vec::new();
    let mut checked = 0;
    for k in 2..=4 {
        let mut cases: Vec<SchemeCase> = registry
            .builtins()
            .iter()
            .map(|f| SchemeCase::from_factory(f.as_ref(), k).unwrap())
            .collect();
        for w in WeightScheme::random_family(k, 2024 + k as u64, 3) {
            cases.push(SchemeCase::new(w, None));
        }
        let ctx = VerifyContext { k, max_n: 8, cases };
        for name in ["recursion", "convolution", "kreduce", "counts", "display"] {
            for r in identities.run(name, &ctx).unwrap() {
                checked += 1;
                if !r.passed() {
                    failures.push(r.to_string());
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs > 180.0 {
        failures.push(format!("took {secs:.1}s (target 180s)"));
    }
    report(4, &failures, &format!("{checked} exact checks, m,n<=8, k in 2..=4, in {secs:.1}s"));
}

#[test]
fn criterion_5_determinants() {
    let mut failures = Vec::new();
    for pair in StatSetPair::schemed() {
        for k in 2..=4 {
            let w = builtin_scheme(pair, k).unwrap();
            for n in 1..=6 {
                let spec = MinorSpec::new(n, k).unwrap();
                let exact = determinant(&build_minor(&spec, &w).unwrap()).unwrap();
                let closed = closed_form_det(&spec, &w).unwrap();
                if exact != closed {
                    failures.push(format!(
                        "{pair} n={n} k={k}: exact has {} terms, closed {closed}, witness {}",
                        exact.len(),
                        (&exact - &closed).leading_term().unwrap()
                    ));
                }
                if exact.at_one() != BigInt::from(determinant_sign(n, k)) {
                    failures.push(format!("{pair} n={n} k={k}: value at one {}", exact.at_one()));
                }
                if k <= 3 && n <= 4 {
                    let tuples = enumerate_noncrossing_tuples(&spec).unwrap();
                    if tuples.len() != 1 {
                        failures.push(format!("{pair} n={n} k={k}: {} noncrossing tuples", tuples.len()));
                    } else if tuples[0].signed_weight(&w) != exact {
                        failures.push(format!("{pair} n={n} k={k}: unique tuple weight differs from determinant"));
                    }
                }
            }
        }
    }
    report(5, &failures, "k in 2..=4, n<=6, every built-in scheme");
}

#[test]
fn criterion_6_falsifiability() {
    let mut failures = Vec::new();
    let base = builtin_scheme("maj-lp".parse().unwrap(), 3).unwrap();
    let bad = CoupledScheme::new(base, 1);
    let mut reports = Vec::new();
    for n in 1..=6 {
        reports.push(verify_recursion(n, 3, &bad).unwrap());
        reports.push(verify_k_reduction(n, 3, &bad).unwrap());
        for m in 1..=4 {
            reports.push(verify_convolution(m, n, 3, &bad).unwrap());
        }
    }
    match reports.iter().find(|r| !r.passed()) {
        None => failures.push("no verifier failed on an incoherent scheme".into()),
        Some(r) => {
            let w = r.witness.as_ref().expect("failing report carries a witness");
            let diff = r.lhs.try_sub(&r.rhs).unwrap();
            let term = Polynomial::from_monomials(3, [w.clone()]).unwrap();
            if diff.leading_term().as_ref() != Some(w) || term.is_zero() {
                failures.push(format!("witness {w} is not a term of lhs - rhs"));
            }
            println!("    first failing check: {r}");
        }
    }
    let coherence = validate_weight_scheme(&bad, 6).unwrap();
    if coherence.passed() {
        failures.push("validate_weight_scheme accepted an incoherent scheme".into());
    }
    println!("    {coherence}");
    report(6, &failures, "coupled scheme rejected by verifiers and validator");
}

#[test]
fn criterion_7_determinism() {
    let args = [
        "qfib",
        "verify",
        "--identity",
        "all",
        "--k",
        "3",
        "--max-n",
        "6",
        "--stat",
        "maj-rlp",
        "--random-schemes",
        "3",
        "--seed",
        "17",
    ];
    let once = || {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = qfib::run_with_seed(args, None, &mut out, &mut err);
        (code, out, err)
    };
    let (a, b) = (once(), once());
    let mut failures = Vec::new();
    if a != b {
        failures.push("two runs with identical flags differ".into());
    }
    if a.1.is_empty() {
        failures.push("no output".into());
    }
    report(7, &failures, &format!("{} bytes identical across runs", a.1.len()));
}
