//! Möller's weak algorithm: saturated sets, weak top-reduction and weak
//! S-polynomials.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::AlgoError;
use crate::poly::{Monomial, Poly, PolyRing};
use crate::ring::Ring;

/// Counters shared by both drivers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunStats {
    pub saturated_sets_considered: u64,
    pub s_polynomials_reduced: u64,
    pub reductions_to_zero: u64,
    pub discarded_f5: u64,
    pub discarded_singular: u64,
    pub discarded_syzygy: u64,
    pub discarded_1singular: u64,
    pub basis_size: u64,
}

/// A set of basis indices `J` (0-based) together with `M(J)`, the lcm of
/// their leading monomials. Printed 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SaturatedSet {
    pub indices: Vec<usize>,
    pub lcm: Monomial,
}

impl SaturatedSet {
    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

impl fmt::Display for SaturatedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_indices(&self.indices, None))
    }
}

/// `{1,3,4*}`-style rendering of 0-based indices, starring `marked`.
pub fn format_indices(indices: &[usize], marked: Option<usize>) -> String {
    let inner: Vec<String> = indices
        .iter()
        .map(|&i| if Some(i) == marked { format!("{}*", i + 1) } else { (i + 1).to_string() })
        .collect();
    format!("{{{}}}", inner.join(","))
}

/// `Sat(m)`: every index whose monomial divides `m`, with the lcm recomputed
/// over the selected indices.
pub fn saturate(m: &Monomial, lms: &[Monomial]) -> SaturatedSet {
    let indices: Vec<usize> = (0..lms.len()).filter(|&i| lms[i].divides(m)).collect();
    let lcm = indices
        .iter()
        .fold(Monomial::one(m.nvars()), |acc, &i| acc.lcm(&lms[i]));
    SaturatedSet { indices, lcm }
}

/// All saturated subsets of `0..lms.len()` that contain `required` and have
/// at least two elements, sorted by ascending `M(J)` and then by index set.
///
/// A saturated set is determined by its lcm, so the candidates are the lcms
/// `lcm(lms[required], lms[j] : j ∈ S)` over subsets `S`, built incrementally.
pub fn enumerate_saturated_sets(
    lms: &[Monomial],
    required: usize,
    order: crate::poly::MonomialOrder,
) -> Vec<SaturatedSet> {
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut frontier = vec![lms[required].clone()];
    seen.insert(lms[required].clone());
    for (j, lm) in lms.iter().enumerate() {
        if j == required {
            continue;
        }
        let fresh: Vec<Monomial> = frontier
            .iter()
            .map(|m| m.lcm(lm))
            .filter(|m| !seen.contains(m))
            .collect();
        for m in fresh {
            if seen.insert(m.clone()) {
                frontier.push(m);
            }
        }
    }
    let mut by_lcm: HashSet<Monomial> = HashSet::new();
    let mut out: Vec<SaturatedSet> = Vec::new();
    for m in frontier {
        let set = saturate(&m, lms);
        if set.len() >= 2 && by_lcm.insert(set.lcm.clone()) {
            out.push(set);
        }
    }
    out.sort_by(|a, b| order.cmp(&a.lcm, &b.lcm).then_with(|| a.indices.cmp(&b.indices)));
    out
}

/// Writes `k` as a combination of `lcs`, returned as `(position, cofactor)`
/// pairs. The first single coefficient dividing `k` is preferred over a full
/// `lin_decomp`, whose Bézout cofactors grow quickly under repeated reduction.
pub(crate) fn leading_combination<R: Ring>(
    ring: &R,
    lcs: &[&R::Elem],
    k: &R::Elem,
) -> Result<Option<Vec<(usize, R::Elem)>>, AlgoError> {
    for (pos, c) in lcs.iter().enumerate() {
        if let Some(q) = ring.divides(c, k)? {
            return Ok(Some(vec![(pos, q)]));
        }
    }
    let owned: Vec<R::Elem> = lcs.iter().map(|c| (*c).clone()).collect();
    Ok(ring
        .lin_decomp(&owned, k)?
        .map(|l| l.into_iter().enumerate().filter(|(_, c)| !ring.is_zero(c)).collect()))
}

/// Weak top-reduction: while the leading coefficient of `p` lies in the
/// ideal of leading coefficients of the basis elements whose leading
/// monomial divides `LM(p)`, cancel the leading term with that combination.
pub fn weak_reduce<R: Ring>(
    ctx: &PolyRing<R>,
    p: &Poly<R::Elem>,
    basis: &[Poly<R::Elem>],
) -> Result<Poly<R::Elem>, AlgoError> {
    let ring = ctx.ring();
    let mut r = p.clone();
    while let Some(lt) = r.leading_term().cloned() {
        let divisors: Vec<usize> = (0..basis.len())
            .filter(|&j| basis[j].lm().is_some_and(|m| m.divides(&lt.mono)))
            .collect();
        if divisors.is_empty() {
            break;
        }
        let lcs: Vec<&R::Elem> = divisors.iter().map(|&j| basis[j].lc().unwrap()).collect();
        let Some(k) = leading_combination(ring, &lcs, &lt.coeff)? else {
            break;
        };
        for (pos, kj) in k {
            let j = divisors[pos];
            let shift = lt.mono.div(basis[j].lm().unwrap()).expect("divisor");
            r = ctx.add_scaled(&r, &ring.neg(&kj), &shift, &basis[j]);
        }
        debug_assert!(r.lm().is_none_or(|m| ctx.mono_cmp(m, &lt.mono) == Ordering::Less));
    }
    Ok(r)
}

/// Leading monomials of a list of (nonzero) polynomials.
pub fn leading_monomials<E>(basis: &[Poly<E>]) -> Vec<Monomial> {
    basis.iter().map(|g| g.lm().expect("nonzero basis element").clone()).collect()
}

/// The weak S-polynomials of `set` with the given pivot, one per generator
/// `c` of `⟨C(i) : i ∈ J*⟩ : ⟨C(pivot)⟩`:
/// `c·(M(J)/M(s))·g_s − Σ b_i·(M(J)/M(i))·g_i`.
pub fn weak_s_polynomials<R: Ring>(
    ctx: &PolyRing<R>,
    set: &SaturatedSet,
    pivot: usize,
    basis: &[Poly<R::Elem>],
) -> Result<Vec<Poly<R::Elem>>, AlgoError> {
    combination_polys(ctx, &set.indices, &set.lcm, pivot, |i| &basis[i])?
        .into_iter()
        .map(|(_, p)| Ok(p))
        .collect()
}

/// Shared S-polynomial construction, also used by the signature driver.
/// Returns each colon generator `c` with its polynomial.
pub(crate) fn combination_polys<'a, R: Ring, F>(
    ctx: &PolyRing<R>,
    indices: &[usize],
    lcm: &Monomial,
    pivot: usize,
    poly_of: F,
) -> Result<Vec<(R::Elem, Poly<R::Elem>)>, AlgoError>
where
    F: Fn(usize) -> &'a Poly<R::Elem>,
    R::Elem: 'a,
{
    let ring = ctx.ring();
    let others: Vec<usize> = indices.iter().copied().filter(|&i| i != pivot).collect();
    let lcs: Vec<R::Elem> = others.iter().map(|&i| poly_of(i).lc().unwrap().clone()).collect();
    let gs = poly_of(pivot);
    let cs = ring.sat_ideal(&lcs, gs.lc().unwrap())?;
    let mut out = Vec::with_capacity(cs.len());
    for c in cs {
        let target = ring.mul(&c, gs.lc().unwrap());
        let b = ring.lin_decomp(&lcs, &target)?.ok_or_else(|| {
            AlgoError::Internal("colon-ideal generator times C(s) is not in ⟨C(J*)⟩".into())
        })?;
        let mut p = ctx.mul_term(&c, &lcm.div(gs.lm().unwrap()).expect("M(s) | M(J)"), gs);
        for (&i, bi) in others.iter().zip(&b) {
            let gi = poly_of(i);
            let shift = lcm.div(gi.lm().unwrap()).expect("M(i) | M(J)");
            p = ctx.add_scaled(&p, &ring.neg(bi), &shift, gi);
        }
        debug_assert!(p.lm().is_none_or(|m| ctx.mono_cmp(m, lcm) == Ordering::Less));
        out.push((c, p));
    }
    Ok(out)
}

/// Configuration for [`moeller_weak`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeakConfig {
    /// Maximum number of saturated sets processed before giving up.
    pub max_iterations: u64,
    /// Wall-clock budget, checked between saturated sets.
    pub time_limit: Option<Duration>,
}

impl Default for WeakConfig {
    fn default() -> Self {
        Self { max_iterations: 100_000, time_limit: None }
    }
}

/// Fails once `limit` has elapsed since `start`.
pub(crate) fn check_time(start: Instant, limit: Option<Duration>) -> Result<(), AlgoError> {
    match limit {
        Some(limit) if start.elapsed() > limit => Err(AlgoError::TimeLimit(limit)),
        _ => Ok(()),
    }
}

/// Result of a Möller run.
#[derive(Debug, Clone, PartialEq)]
pub struct GBState<E> {
    pub basis: Vec<Poly<E>>,
    pub stats: RunStats,
}

pub(crate) fn check_inputs<E>(f: &[Poly<E>]) -> Result<(), AlgoError> {
    if f.is_empty() {
        return Err(AlgoError::EmptyInput);
    }
    match f.iter().position(Poly::is_zero) {
        Some(i) => Err(AlgoError::ZeroInput(i + 1)),
        None => Ok(()),
    }
}

/// Möller's weak algorithm. For each basis position σ in turn (the basis
/// grows while this runs), every saturated subset of `{1..σ}` containing σ
/// contributes its S-polynomials with pivot σ; nonzero reductions are
/// appended.
pub fn moeller_weak<R: Ring>(
    ctx: &PolyRing<R>,
    f: &[Poly<R::Elem>],
    config: &WeakConfig,
) -> Result<GBState<R::Elem>, AlgoError> {
    check_inputs(f)?;
    let start = Instant::now();
    let mut basis = f.to_vec();
    let mut stats = RunStats::default();
    let mut sigma = 1;
    while sigma < basis.len() {
        let lms = leading_monomials(&basis[..=sigma]);
        for set in enumerate_saturated_sets(&lms, sigma, ctx.order()) {
            stats.saturated_sets_considered += 1;
            if stats.saturated_sets_considered > config.max_iterations {
                return Err(AlgoError::IterationLimit(config.max_iterations));
            }
            check_time(start, config.time_limit)?;
            for p in weak_s_polynomials(ctx, &set, sigma, &basis)? {
                stats.s_polynomials_reduced += 1;
                let r = weak_reduce(ctx, &p, &basis)?;
                if r.is_zero() {
                    stats.reductions_to_zero += 1;
                } else {
                    basis.push(r);
                }
            }
        }
        sigma += 1;
    }
    stats.basis_size = basis.len() as u64;
    Ok(GBState { basis, stats })
}

/// Checks that every weak S-polynomial of every prefix-saturated set, for
/// every choice of pivot, weak-reduces to zero modulo `basis`.
pub fn is_weak_gb<R: Ring>(ctx: &PolyRing<R>, basis: &[Poly<R::Elem>]) -> Result<bool, AlgoError> {
    check_weak_gb(ctx, basis, Pivots::All, None)
}

/// Which elements of a saturated set serve as pivots in [`check_weak_gb`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pivots {
    /// Every index of the set.
    All,
    /// Only the largest index, as in Möller's criterion; sufficient and
    /// much cheaper on large bases.
    Newest,
}

/// [`is_weak_gb`] with a choice of pivots and an optional time limit.
pub fn check_weak_gb<R: Ring>(
    ctx: &PolyRing<R>,
    basis: &[Poly<R::Elem>],
    pivots: Pivots,
    time_limit: Option<Duration>,
) -> Result<bool, AlgoError> {
    if basis.iter().any(Poly::is_zero) {
        return Ok(false);
    }
    let start = Instant::now();
    for sigma in 1..basis.len() {
        let lms = leading_monomials(&basis[..=sigma]);
        for set in enumerate_saturated_sets(&lms, sigma, ctx.order()) {
            check_time(start, time_limit)?;
            let chosen: &[usize] = match pivots {
                Pivots::All => &set.indices,
                Pivots::Newest => std::slice::from_ref(&sigma),
            };
            for &pivot in chosen {
                for p in weak_s_polynomials(ctx, &set, pivot, basis)? {
                    if !weak_reduce(ctx, &p, basis)?.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// True if every polynomial of `polys` weak-reduces to zero modulo `basis`.
pub fn reduces_to_zero<R: Ring>(
    ctx: &PolyRing<R>,
    polys: &[Poly<R::Elem>],
    basis: &[Poly<R::Elem>],
) -> Result<bool, AlgoError> {
    for p in polys {
        if !weak_reduce(ctx, p, basis)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;
    use crate::ring::{Integers, Rationals};

    fn zxy() -> PolyRing<Integers> {
        PolyRing::new(Integers, ["x", "y"], MonomialOrder::Lex)
    }

    fn mono(r: &PolyRing<Integers>, s: &str) -> Monomial {
        r.parse(s).unwrap().lm().unwrap().clone()
    }

    #[test]
    fn saturation_examples() {
        let r = zxy();
        let lms: Vec<_> = ["x*y", "x^2"].iter().map(|s| mono(&r, s)).collect();
        let j = saturate(&mono(&r, "x^2*y"), &lms);
        assert_eq!((j.indices.clone(), j.lcm.clone()), (vec![0, 1], mono(&r, "x^2*y")));
        assert!(saturate(&Monomial::one(2), &lms).is_empty());
        let lms: Vec<_> = ["x*y", "x^2", "x*y^2", "x*y", "x"].iter().map(|s| mono(&r, s)).collect();
        let j = saturate(&mono(&r, "x*y^2"), &lms);
        assert_eq!(j.indices, vec![0, 2, 3, 4]);
        assert_eq!(j.lcm, mono(&r, "x*y^2"));
        assert_eq!(j.to_string(), "{1,3,4,5}");
    }

    #[test]
    fn enumeration() {
        let r = zxy();
        let lms: Vec<_> = ["x*y", "x^2"].iter().map(|s| mono(&r, s)).collect();
        let sets = enumerate_saturated_sets(&lms, 1, MonomialOrder::Lex);
        assert_eq!(sets.len(), 1);
        assert_eq!(sets[0].lcm, mono(&r, "x^2*y"));
        assert!(enumerate_saturated_sets(&lms[..1], 0, MonomialOrder::Lex).is_empty());
        // The step-7 basis: LMs xy, x², xy², xy, x, y⁴, y⁴. Sets containing g7
        // come from the lcms y⁴, xy⁴, x²y⁴.
        let lms: Vec<_> = ["x*y", "x^2", "x*y^2", "x*y", "x", "y^4", "y^4"]
            .iter()
            .map(|s| mono(&r, s))
            .collect();
        let sets = enumerate_saturated_sets(&lms, 6, MonomialOrder::Lex);
        let lcms: Vec<_> = sets.iter().map(|s| r.format_mono(&s.lcm)).collect();
        assert_eq!(lcms, ["y^4", "x*y^4", "x^2*y^4"]);
    }

    #[test]
    fn one_step_weak_reduction() {
        let r = zxy();
        let basis: Vec<_> = ["4*x*y + x", "3*x^2 + y", "5*x", "4*y^2 + y", "5*y"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        let f = r.parse("2*x*y + 13*y - 5").unwrap();
        // 2x + 13y − 5 is not reducible further since 2 ∉ ⟨5⟩.
        assert_eq!(weak_reduce(&r, &f, &basis).unwrap(), r.parse("2*x + 13*y - 5").unwrap());
    }

    #[test]
    fn worked_example_s_polynomials() {
        let r = zxy();
        let g: Vec<_> = ["3*x*y + x + y^2", "x^2", "-x*y^2"].iter().map(|s| r.parse(s).unwrap()).collect();
        let lms = leading_monomials(&g[..2]);
        let set = &enumerate_saturated_sets(&lms, 1, MonomialOrder::Lex)[0];
        let s = weak_s_polynomials(&r, set, 1, &g).unwrap();
        assert_eq!(s, vec![r.parse("-x^2 - x*y^2").unwrap()]);
        let set = saturate(&mono(&r, "x*y^2"), &leading_monomials(&[g[0].clone(), g[2].clone()]));
        let pair = [g[0].clone(), g[2].clone()];
        let s = weak_s_polynomials(&r, &set, 1, &pair).unwrap();
        assert_eq!(s, vec![r.parse("x*y + y^3").unwrap()]);
        let twins = [g[0].clone(), g[0].clone()];
        let set = saturate(&mono(&r, "x*y"), &leading_monomials(&twins));
        assert!(weak_s_polynomials(&r, &set, 0, &twins).unwrap()[0].is_zero());
    }

    #[test]
    fn moeller_on_worked_example_input() {
        let r = zxy();
        let f: Vec<_> = ["3*x*y + x + y^2", "x^2"].iter().map(|s| r.parse(s).unwrap()).collect();
        let out = moeller_weak(&r, &f, &WeakConfig::default()).unwrap();
        assert!(is_weak_gb(&r, &out.basis).unwrap());
        assert!(reduces_to_zero(&r, &f, &out.basis).unwrap());
        assert_eq!(out.stats.basis_size as usize, out.basis.len());
        let single = moeller_weak(&r, &f[..1], &WeakConfig::default()).unwrap();
        assert_eq!(single.basis, f[..1].to_vec());
        assert_eq!(single.stats, RunStats { basis_size: 1, ..RunStats::default() });
    }

    #[test]
    fn checker_examples() {
        let r = PolyRing::new(Integers, ["x"], MonomialOrder::Lex);
        let g: Vec<_> = ["2*x", "3*x"].iter().map(|s| r.parse(s).unwrap()).collect();
        assert!(is_weak_gb(&r, &g).unwrap());
        assert!(is_weak_gb(&r, &g[..1]).unwrap());
        // {2x, x^2 + 1}: x·2x − 2(x^2 + 1) = −2 is not reducible.
        let h: Vec<_> = ["2*x", "x^2 + 1"].iter().map(|s| r.parse(s).unwrap()).collect();
        assert!(!is_weak_gb(&r, &h).unwrap());
    }

    #[test]
    fn rejects_bad_inputs() {
        let r = PolyRing::new(Rationals, ["x"], MonomialOrder::Lex);
        assert_eq!(moeller_weak(&r, &[], &WeakConfig::default()), Err(AlgoError::EmptyInput));
        let f = vec![r.parse("x").unwrap(), r.parse("0").unwrap()];
        assert_eq!(moeller_weak(&r, &f, &WeakConfig::default()), Err(AlgoError::ZeroInput(2)));
    }
}
