//! Bundled benchmark systems.

use num_bigint::BigInt;

use crate::error::ProblemError;
use crate::poly::{Monomial, MonomialOrder, Poly, PolyRing, Term};
use crate::problem::ProblemFile;
use crate::ring::{Integers, RingDescriptor};

/// Katsura-`n` over ℤ in `u0 > … > un` under grevlex:
/// `Σ_{l=-n..n} u_|l|·u_|k-l| − u_k` for `k = 0..n-1`, then
/// `Σ_{l=-n..n} u_|l| − 1`. Indices above `n` denote zero.
pub fn katsura(n: usize) -> ProblemFile {
    let vars: Vec<String> = (0..=n).map(|i| format!("u{i}")).collect();
    let ctx = PolyRing::new(Integers, vars.clone(), MonomialOrder::GrevLex);
    let nv = n + 1;
    let n = n as i64;
    let u = |i: i64| -> Option<usize> { (i.unsigned_abs() as usize <= n as usize).then_some(i.unsigned_abs() as usize) };
    let mut generators = Vec::new();
    for k in 0..n {
        let mut terms: Vec<Term<BigInt>> = Vec::new();
        for l in -n..=n {
            if let (Some(a), Some(b)) = (u(l), u(k - l)) {
                terms.push(Term::new(1.into(), Monomial::var(nv, a).mul(&Monomial::var(nv, b))));
            }
        }
        terms.push(Term::new((-1).into(), Monomial::var(nv, k as usize)));
        generators.push(ctx.format(&ctx.from_terms(terms)));
    }
    let mut terms: Vec<Term<BigInt>> =
        (-n..=n).map(|l| Term::new(1.into(), Monomial::var(nv, u(l).unwrap()))).collect();
    terms.push(Term::new((-1).into(), Monomial::one(nv)));
    let linear: Poly<BigInt> = ctx.from_terms(terms);
    generators.push(ctx.format(&linear));
    ProblemFile { ring: RingDescriptor::integers(), vars, order: MonomialOrder::GrevLex, generators }
}

pub const KATSURA2_FIXTURE: &str = include_str!("../data/katsura2.txt");
pub const KATSURA3_FIXTURE: &str = include_str!("../data/katsura3.txt");

/// `katsura2` or `katsura3`, read from the bundled fixture files.
pub fn bundled_benchmark(name: &str) -> Result<ProblemFile, ProblemError> {
    match name {
        "katsura2" => ProblemFile::parse(KATSURA2_FIXTURE),
        "katsura3" => ProblemFile::parse(KATSURA3_FIXTURE),
        other => Err(ProblemError::UnknownBenchmark(other.to_string())),
    }
}
