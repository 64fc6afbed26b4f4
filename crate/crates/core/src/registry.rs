//! Named weight schemes and named identity checks, looked up by string so
//! the command line (and tests) can select them without matching on types.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::expr::LengthExpr;
use crate::identities::{
    specialized_forms, verify_at_one, verify_convolution, verify_convolution_count, verify_convolution_display,
    verify_k_reduction, verify_k_reduction_count, verify_k_reduction_display, verify_recursion,
    verify_recursion_count, verify_recursion_display, IdentityReport,
};
use crate::lgv::{miles_sign_check, verify_determinant, verify_determinant_paths, MAX_DET_DIM, MAX_PATH_VERTEX};
use crate::statistics::{builtin_scheme, StatSetPair, Statistic};
use crate::tiling::{CoupledScheme, TileWeight, WeightScheme};

/// Something that can produce a weight scheme for a given tile bound.
pub trait SchemeFactory: Send + Sync {
    fn name(&self) -> String;

    /// The statistic/family pair the scheme models, if any.
    fn pair(&self) -> Option<StatSetPair> {
        None
    }

    fn build(&self, k: usize) -> Result<WeightScheme>;
}

struct Builtin(StatSetPair);

impl SchemeFactory for Builtin {
    fn name(&self) -> String {
        self.0.name()
    }

    fn pair(&self) -> Option<StatSetPair> {
        Some(self.0)
    }

    fn build(&self, k: usize) -> Result<WeightScheme> {
        builtin_scheme(self.0, k)
    }
}

struct Count;

impl SchemeFactory for Count {
    fn name(&self) -> String {
        "count".into()
    }

    fn build(&self, k: usize) -> Result<WeightScheme> {
        if k == 0 {
            return Err(domain("k must be at least 1"));
        }
        Ok(WeightScheme::unweighted(k))
    }
}

enum GenericBody {
    Exprs([LengthExpr; 3]),
    Table(Vec<[u64; 3]>),
}

/// `generic:<A>,<B>,<C>` with expressions in `i` (optionally labelled
/// `A=`, `B=`, `C=`; unlabelled fields are positional, missing labelled
/// fields are `0`), or `generic:a1,b1,c1;a2,b2,c2;...` listing one triple per
/// tile length.
pub struct Generic {
    label: String,
    body: GenericBody,
}

impl Generic {
    pub fn parse(spec: &str) -> Result<Self> {
        let body_text = spec
            .strip_prefix("generic:")
            .ok_or_else(|| domain(format!("expected generic:..., got {spec:?}")))?;
        let body = if body_text.contains(';') {
            let rows = body_text
                .split(';')
                .map(|row| {
                    let vals: Vec<&str> = row.split(',').map(str::trim).collect();
                    if vals.len() != 3 {
                        return Err(domain(format!("triple {row:?} needs three values")));
                    }
                    let mut out = [0u64; 3];
                    for (slot, v) in out.iter_mut().zip(vals) {
                        *slot = v
                            .parse()
                            .map_err(|_| domain(format!("{v:?} is not a nonnegative integer")))?;
                    }
                    Ok(out)
                })
                .collect::<Result<Vec<_>>>()?;
            GenericBody::Table(rows)
        } else {
            GenericBody::Exprs(parse_fields(body_text)?)
        };
        Ok(Generic {
            label: spec.to_string(),
            body,
        })
    }
}

fn parse_fields(text: &str) -> Result<[LengthExpr; 3]> {
    let fields: Vec<&str> = text.split(',').map(str::trim).collect();
    let labelled = fields.iter().filter(|f| f.contains('=')).count();
    if labelled == 0 {
        if fields.len() != 3 {
            return Err(domain(format!("expected three expressions A,B,C, got {}", fields.len())));
        }
        return Ok([
            LengthExpr::parse(fields[0])?,
            LengthExpr::parse(fields[1])?,
            LengthExpr::parse(fields[2])?,
        ]);
    }
    if labelled != fields.len() {
        return Err(domain("mix of labelled and positional fields"));
    }
    let mut out = [LengthExpr::Const(0), LengthExpr::Const(0), LengthExpr::Const(0)];
    let mut seen = [false; 3];
    for f in fields {
        let (name, expr) = f.split_once('=').expect("counted above");
        let slot = match name.trim() {
            "A" | "a" => 0,
            "B" | "b" => 1,
            "C" | "c" => 2,
            other => return Err(domain(format!("unknown field {other:?}; use A, B or C"))),
        };
        if seen[slot] {
            return Err(domain(format!("field {} given twice", name.trim())));
        }
        seen[slot] = true;
        out[slot] = LengthExpr::parse(expr)?;
    }
    Ok(out)
}

impl SchemeFactory for Generic {
    fn name(&self) -> String {
        self.label.clone()
    }

    fn build(&self, k: usize) -> Result<WeightScheme> {
        match &self.body {
            GenericBody::Exprs([a, b, c]) => WeightScheme::from_exprs(self.label.clone(), k, a, b, c),
            GenericBody::Table(rows) => {
                if k == 0 || k > rows.len() {
                    return Err(domain(format!("k = {k} but {} triples were given", rows.len())));
                }
                let col = |c: usize| rows[..k].iter().map(|r| r[c]).collect();
                WeightScheme::from_tables(self.label.clone(), col(0), col(1), col(2))
            }
        }
    }
}

/// Lookup table of scheme factories: the seven statistic schemes, `count`,
/// and `generic:` specifications parsed on demand.
pub struct SchemeRegistry {
    entries: Vec<Arc<dyn SchemeFactory>>,
}

impl SchemeRegistry {
    pub fn standard() -> Self {
        let mut entries: Vec<Arc<dyn SchemeFactory>> = StatSetPair::schemed()
            .map(|p| Arc::new(Builtin(p)) as Arc<dyn SchemeFactory>)
            .collect();
        entries.push(Arc::new(Count));
        SchemeRegistry { entries }
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    /// The built-in statistic schemes, in a fixed order.
    pub fn builtins(&self) -> Vec<Arc<dyn SchemeFactory>> {
        self.entries.iter().filter(|e| e.pair().is_some()).cloned().collect()
    }

    pub fn resolve(&self, name: &str) -> Result<Arc<dyn SchemeFactory>> {
        if name.starts_with("generic:") {
            return Ok(Arc::new(Generic::parse(name)?));
        }
        if let Some(e) = self.entries.iter().find(|e| e.name() == name) {
            return Ok(e.clone());
        }
        match name.parse::<StatSetPair>() {
            Ok(p) if p.statistic == Statistic::Ls => Err(Error::UnsupportedScheme(format!(
                "{p}: a block's ls contribution depends on how many blocks precede it"
            ))),
            _ => Err(domain(format!(
                "unknown scheme {name:?}; expected one of {} or generic:A,B,C",
                self.names().join(", ")
            ))),
        }
    }
}

/// One scheme under test, with the pair it models when it is a built-in.
#[derive(Clone)]
pub struct SchemeCase {
    pub weight: Arc<dyn TileWeight>,
    pub pair: Option<StatSetPair>,
}

impl SchemeCase {
    pub fn new(weight: impl TileWeight + 'static, pair: Option<StatSetPair>) -> Self {
        SchemeCase {
            weight: Arc::new(weight),
            pair,
        }
    }

    pub fn from_factory(f: &dyn SchemeFactory, k: usize) -> Result<Self> {
        Ok(SchemeCase::new(f.build(k)?, f.pair()))
    }

    /// The same scheme with a position/trailing coupling added to every
    /// tile exponent while the claimed shift factors stay unchanged.
    pub fn corrupted(&self, k: usize, coupling: u64) -> Result<Self> {
        let base = match self.pair {
            Some(p) => builtin_scheme(p, k)?,
            None => WeightScheme::from_fn(self.weight.name(), k, |i| {
                let i = i as usize;
                (
                    self.weight.exponent(i, 1, 0),
                    self.weight.shift_before(i, 1),
                    self.weight.shift_after(i, 1),
                )
            }),
        };
        Ok(SchemeCase::new(CoupledScheme::new(base, coupling), self.pair))
    }
}

/// Grid and schemes for a verification run.
#[derive(Clone)]
pub struct VerifyContext {
    pub k: usize,
    pub max_n: usize,
    pub cases: Vec<SchemeCase>,
}

/// A named family of checks over a [`VerifyContext`].
pub trait Identity: Send + Sync {
    fn name(&self) -> &'static str;

    /// Whether the identity makes sense for this context; `all` skips the
    /// ones that do not.
    fn applies(&self, _ctx: &VerifyContext) -> bool {
        true
    }

    fn run(&self, ctx: &VerifyContext) -> Result<Vec<IdentityReport>>;
}

// Runs `f` over `cells` in parallel and returns the results in input order.
fn grid<T: Sync>(cells: Vec<T>, f: impl Fn(&T) -> Result<Vec<IdentityReport>> + Send + Sync) -> Result<Vec<IdentityReport>> {
    let chunks = cells.par_iter().map(f).collect::<Result<Vec<_>>>()?;
    Ok(chunks.into_iter().flatten().collect())
}

fn per_case_n(ctx: &VerifyContext) -> Vec<(&SchemeCase, usize)> {
    ctx.cases
        .iter()
        .flat_map(|c| (1..=ctx.max_n).map(move |n| (c, n)))
        .collect()
}

fn per_case_mn(ctx: &VerifyContext) -> Vec<(&SchemeCase, usize, usize)> {
    ctx.cases
        .iter()
        .flat_map(|c| (1..=ctx.max_n).flat_map(move |m| (1..=ctx.max_n).map(move |n| (c, m, n))))
        .collect()
}

struct Recursion;
struct Convolution;
struct KReduction;
struct Counts;
struct Display;
struct Determinant;
struct DeterminantSign;
struct DeterminantPaths;

impl Identity for Recursion {
    fn name(&self) -> &'static str {
        "recursion"
    }

    fn run(&self, ctx: &VerifyContext) -> Result<Vec<IdentityReport>> {
        grid(per_case_n(ctx), |&(c, n)| Ok(vec![verify_recursion(n, ctx.k, c.weight.as_ref())?]))
    }
}

impl Identity for Convolution {
    fn name(&self) -> &'static str {
        "convolution"
    }

    fn run(&self, ctx: &VerifyContext) -> Result<Vec<IdentityReport>> {
        grid(per_case_mn(ctx), |&(c, m, n)| {
            Ok(vec![verify_convolution(m, n, ctx.k, c.weight.as_ref())?])
        })
    }
}

impl Identity for KReduction {
    fn name(&self) -> &'static str {
        "kreduce"
    }

    fn applies(&self, ctx: &VerifyContext) -> bool {
        ctx.k >= 2
    }

    fn run(&self, ctx: &VerifyContext) -> Result<Vec<IdentityReport>> {
        grid(per_case_n(ctx), |&(c, n)| Ok(vec![verify_k_reduction(n, ctx.k, c.weight.as_ref())?]))
    }
}

impl Identity for Counts {
    fn name(&self) -> &'static str {
        "counts"
    }

    fn run(&self, ctx: &VerifyContext) -> Result<Vec<IdentityReport>> {
        let k = ctx.k;
        let ns: Vec<usize> = (1..=ctx.max_n).collect();
        let mut out = grid(ns.clone(), |&n| {
            let mut v = vec![verify_recursion_count(n, k)?];
            if k >= 2 {
                v.push(verify_k_reduction_count(n, k)?);
            }
            Ok(v)
        })?;
        let mns: Vec<(usize, usize)> = ns.iter().flat_map(|&m| ns.iter().map(move |&n| (m, n))).collect();
        out.extend(grid(mns, |&(m, n)| Ok(vec![verify_convolution_count(m, n, k)?]))?);
        out.extend(grid(per_case_mn(ctx), |&(c, m, n)| verify_at_one(m, n, k, c.weight.as_ref()))?);
        Ok(out)
    }
}

impl Identity for Display {
    fn name(&self) -> &'static str {
        "display"
    }

    fn applies(&self, ctx: &VerifyContext) -> bool {
        ctx.cases.iter().any(|c| c.pair.is_some())
    }

    fn run(&self, ctx: &VerifyContext) -> Result<Vec<IdentityReport>> {
        let k = ctx.k;
        let cases: Vec<&SchemeCase> = ctx.cases.iter().filter(|c| c.pair.is_some()).collect();
        if cases.is_empty() {
            return Err(domain("simplified forms need a built-in statistic scheme"));
        }
        let mut cells = Vec::new();
        for c in &cases {
            for n in 1..=ctx.max_n {
                cells.push((*c, 0, n));
            }
            for m in 1..=ctx.max_n {
                for n in 1..=ctx.max_n {
                    cells.push((*c, m, n));
                }
            }
        }
        grid(cells, |&(c, m, n)| {
            let forms = specialized_forms(c.pair.expect("filtered"))?;
            let w = c.weight.as_ref();
            if m == 0 {
                let mut v = vec![verify_recursion_display(n, k, forms.as_ref(), w)?];
                if k >= 2 {
                    v.push(verify_k_reduction_display(n, k, forms.as_ref(), w)?);
                }
                Ok(v)
            } else {
                Ok(vec![verify_convolution_display(m, n, k, forms.as_ref(), w)?])
            }
        })
    }
}

impl Identity for Determinant {
    fn name(&self) -> &'static str {
        "det"
    }

    fn applies(&self, ctx: &VerifyContext) -> bool {
        ctx.k <= MAX_DET_DIM
    }

    fn run(&self, ctx: &VerifyContext) -> Result<Vec<IdentityReport>> {
        grid(per_case_n(ctx), |&(c, n)| Ok(vec![verify_determinant(n, ctx.k, c.weight.as_ref())?]))
    }
}

impl Identity for DeterminantSign {
    fn name(&self) -> &'static str {
        "det-sign"
    }

    fn applies(&self, ctx: &VerifyContext) -> bool {
        ctx.k <= 5
    }

    fn run(&self, ctx: &VerifyContext) -> Result<Vec<IdentityReport>> {
        grid((1..=ctx.max_n).collect(), |&n| Ok(vec![miles_sign_check(n, ctx.k)?]))
    }
}

impl Identity for DeterminantPaths {
    fn name(&self) -> &'static str {
        "det-paths"
    }

    fn applies(&self, ctx: &VerifyContext) -> bool {
        ctx.max_n + 2 * ctx.k - 2 <= MAX_PATH_VERTEX
    }

    fn run(&self, ctx: &VerifyContext) -> Result<Vec<IdentityReport>> {
        grid(per_case_n(ctx), |&(c, n)| {
            Ok(vec![verify_determinant_paths(n, ctx.k, c.weight.as_ref())?])
        })
    }
}

/// Identity checks by name. `all` runs every applicable member except
/// `det-paths`, whose brute-force path search is only meant for small cases.
pub struct IdentityRegistry {
    entries: Vec<Box<dyn Identity>>,
}

impl IdentityRegistry {
    pub fn standard() -> Self {
        IdentityRegistry {
            entries: vec![
                Box::new(Recursion),
                Box::new(Convolution),
                Box::new(KReduction),
                Box::new(Counts),
                Box::new(Display),
                Box::new(Determinant),
                Box::new(DeterminantSign),
                Box::new(DeterminantPaths),
            ],
        }
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    /// Runs the named identity (or `all`) and returns reports in a fixed
    /// order: identity, then scheme, then grid point.
    pub fn run(&self, name: &str, ctx: &VerifyContext) -> Result<Vec<IdentityReport>> {
        if name == "all" {
            let mut out = Vec::new();
            for e in self.entries.iter().filter(|e| e.name() != "det-paths") {
                if e.applies(ctx) {
                    out.extend(e.run(ctx)?);
                }
            }
            return Ok(out);
        }
        let e = self.entries.iter().find(|e| e.name() == name).ok_or_else(|| {
            domain(format!("unknown identity {name:?}; expected all or one of {}", self.names().join(", ")))
        })?;
        if !e.applies(ctx) {
            return Err(Error::Domain(format!("identity {name} does not apply for k = {}", ctx.k)));
        }
        e.run(ctx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(k: usize, max_n: usize, cases: Vec<SchemeCase>) -> VerifyContext {
        VerifyContext { k, max_n, cases }
    }

    #[test]
    fn resolves_builtins_and_generic() {
        let reg = SchemeRegistry::standard();
        assert_eq!(reg.builtins().len(), 7);
        let w = reg.resolve("maj-rlp").unwrap().build(3).unwrap();
        assert_eq!((w.a(3), w.b(3), w.c(3)), (3, 2, 0));
        let g = reg.resolve("generic:A=i*(i-1)/2,B=i-1").unwrap().build(3).unwrap();
        assert_eq!((g.a(3), g.b(3), g.c(3)), (3, 2, 0));
        let g = reg.resolve("generic:0,0,i").unwrap().build(2).unwrap();
        assert_eq!(g.c(2), 2);
        let g = reg.resolve("generic:0,0,1;1,0,2").unwrap().build(2).unwrap();
        assert_eq!((g.a(2), g.c(2)), (1, 2));
        assert!(reg.resolve("generic:0,0,1;1,0,2").unwrap().build(3).is_err());
    }

    #[test]
    fn rejects_bad_names() {
        let reg = SchemeRegistry::standard();
        assert!(matches!(reg.resolve("ls-lpi"), Err(Error::UnsupportedScheme(_))));
        assert!(reg.resolve("nope").is_err());
        assert!(reg.resolve("generic:1,2").is_err());
        assert!(reg.resolve("generic:A=1,2,3").is_err());
        assert!(reg.resolve("generic:D=1").is_err());
        assert!(reg.resolve("generic:0,-i,0").unwrap().build(2).is_err());
    }

    #[test]
    fn runs_in_deterministic_order() {
        let reg = SchemeRegistry::standard();
        let case = SchemeCase::from_factory(reg.resolve("maj-lp").unwrap().as_ref(), 2).unwrap();
        let ids = IdentityRegistry::standard();
        let c = ctx(2, 3, vec![case]);
        let a = ids.run("convolution", &c).unwrap();
        let b = ids.run("convolution", &c).unwrap();
        assert_eq!(a, b);
        let order: Vec<_> = a.iter().map(|r| (r.params.m.unwrap(), r.params.n)).collect();
        assert_eq!(order[..4], [(1, 1), (1, 2), (1, 3), (2, 1)]);
        assert!(a.iter().all(|r| r.passed()));
    }

    #[test]
    fn all_covers_applicable_identities() {
        let reg = SchemeRegistry::standard();
        let case = SchemeCase::from_factory(reg.resolve("maj-rlp").unwrap().as_ref(), 3).unwrap();
        let reports = IdentityRegistry::standard().run("all", &ctx(3, 3, vec![case])).unwrap();
        let mut kinds: Vec<&str> = reports.iter().map(|r| r.identity.as_str()).collect();
        kinds.dedup();
        assert!(kinds.contains(&"kreduce-display"));
        assert!(kinds.contains(&"det"));
        assert!(!kinds.contains(&"det-paths"));
        assert!(reports.iter().all(|r| r.passed()));
    }

    #[test]
    fn corrupted_case_fails() {
        let reg = SchemeRegistry::standard();
        let case = SchemeCase::from_factory(reg.resolve("inv-rlp").unwrap().as_ref(), 2).unwrap();
        let bad = case.corrupted(2, 1).unwrap();
        let reports = IdentityRegistry::standard().run("recursion", &ctx(2, 5, vec![bad])).unwrap();
        assert!(reports.iter().any(|r| !r.passed() && r.witness.is_some()));
    }

    #[test]
    fn unknown_identity() {
        let c = ctx(2, 2, vec![]);
        assert!(IdentityRegistry::standard().run("bogus", &c).is_err());
        assert!(IdentityRegistry::standard().run("kreduce", &ctx(1, 2, vec![])).is_err());
    }
}
