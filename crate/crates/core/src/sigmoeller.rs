//! The SigMöller driver: a queue of regular saturated sets processed by
//! minimal presignature, with the syzygy, F5 and singular criteria.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::AlgoError;
use crate::poly::{Poly, PolyRing};
use crate::ring::Ring;
use crate::sig::{
    format_module_monomial, format_signature, is_1_singular_reducible, regular_reduce, regularize,
    sig_compare, LabeledPoly, RegularSaturatedSet, Signature,
};
use crate::weak::{check_inputs, check_time, enumerate_saturated_sets, leading_monomials, RunStats};

/// Which signature criteria are enabled.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Criteria {
    pub f5: bool,
    pub singular: bool,
    pub syzygy: bool,
}

impl Criteria {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn all() -> Self {
        Self { f5: true, singular: true, syzygy: true }
    }
}

impl FromStr for Criteria {
    type Err = String;

    /// `none`, `all`, or a comma-separated subset of `f5,singular,syzygy`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "none" | "" => return Ok(Self::none()),
            "all" => return Ok(Self::all()),
            _ => {}
        }
        let mut c = Self::none();
        for part in s.split(',') {
            match part.trim() {
                "f5" => c.f5 = true,
                "singular" => c.singular = true,
                "syzygy" => c.syzygy = true,
                other => return Err(format!("unknown criterion `{other}`")),
            }
        }
        Ok(c)
    }
}

impl fmt::Display for Criteria {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = [(self.f5, "f5"), (self.singular, "singular"), (self.syzygy, "syzygy")]
            .into_iter()
            .filter_map(|(on, n)| on.then_some(n))
            .collect();
        if names.is_empty() {
            f.write_str("none")
        } else {
            f.write_str(&names.join(","))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SigConfig {
    pub criteria: Criteria,
    /// Ceiling on queue pops; exceeding it aborts the run.
    pub max_iterations: u64,
    /// Wall-clock budget, checked between queue pops.
    pub time_limit: Option<Duration>,
}

impl Default for SigConfig {
    fn default() -> Self {
        Self { criteria: Criteria::none(), max_iterations: 100_000, time_limit: None }
    }
}

impl SigConfig {
    pub fn with_criteria(criteria: Criteria) -> Self {
        Self { criteria, ..Self::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyzygyOrigin {
    Koszul,
    ReductionToZero,
}

/// Signature of a known syzygy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygySignature<E> {
    pub sig: Signature<E>,
    pub origin: SyzygyOrigin,
}

/// Events reported to an [`Observer`]. `Display` gives the stable trace line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    Pop { set: String, presig: String },
    SPoly { sig: String },
    Criterion { name: &'static str, sig: String },
    Add { position: usize, lt: String, sig: String },
    Drop1Singular { sig: String },
    Zero { sig: String },
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceEvent::Pop { set, presig } => write!(f, "POP {set} presig={presig}"),
            TraceEvent::SPoly { sig } => write!(f, "SPOL sig={sig}"),
            TraceEvent::Criterion { name, sig } => write!(f, "CRIT {name} sig={sig}"),
            TraceEvent::Add { position, lt, sig } => write!(f, "ADD g{position} lt={lt} sig={sig}"),
            TraceEvent::Drop1Singular { sig } => write!(f, "DROP 1SING sig={sig}"),
            TraceEvent::Zero { sig } => write!(f, "ZERO sig={sig}"),
        }
    }
}

pub trait Observer {
    fn on_event(&mut self, event: &TraceEvent);
}

/// Collects trace lines.
impl Observer for Vec<String> {
    fn on_event(&mut self, event: &TraceEvent) {
        self.push(event.to_string());
    }
}

/// State of a SigMöller run; after [`sig_moeller`] returns, `basis` is a
/// signature Gröbner basis whose values form a weak Gröbner basis.
#[derive(Debug, Clone)]
pub struct SigState<E> {
    pub basis: Vec<LabeledPoly<E>>,
    pub queue: Vec<RegularSaturatedSet>,
    pub syzygies: Vec<SyzygySignature<E>>,
    pub stats: RunStats,
    pub criteria: Criteria,
    seen: HashSet<Vec<usize>>,
}

impl<E: Clone> SigState<E> {
    pub fn new(criteria: Criteria) -> Self {
        Self {
            basis: Vec::new(),
            queue: Vec::new(),
            syzygies: Vec::new(),
            stats: RunStats::default(),
            criteria,
            seen: HashSet::new(),
        }
    }

    /// Polynomial values of the basis.
    pub fn values(&self) -> Vec<Poly<E>> {
        self.basis.iter().map(|g| g.value.clone()).collect()
    }
}

/// `LT(ᾱ_i)·𝔰(α_j)`, the signature of the Koszul syzygy of `α_i` and `α_j`
/// when `comp(i) < comp(j)`.
pub fn koszul_signature<R: Ring>(
    ring: &R,
    i: &LabeledPoly<R::Elem>,
    j: &LabeledPoly<R::Elem>,
) -> Result<Signature<R::Elem>, AlgoError> {
    if i.sig.index >= j.sig.index {
        return Err(AlgoError::KoszulComponents { left: i.sig.index + 1, right: j.sig.index + 1 });
    }
    let lt = i.value.leading_term().expect("nonzero basis element");
    Ok(j.sig.mul_term(ring, &lt.coeff, &lt.mono))
}

/// `sig` is a combination `Σ m_i·𝔰(z_i)` of known syzygy signatures: among
/// those with the same index whose monomial divides `mono(sig)`, the
/// coefficients generate an ideal containing `coeff(sig)`.
pub fn syzygy_criterion<R: Ring>(
    ring: &R,
    sig: &Signature<R::Elem>,
    syzygies: &[SyzygySignature<R::Elem>],
) -> bool {
    let coeffs: Vec<R::Elem> = syzygies
        .iter()
        .filter(|z| z.sig.index == sig.index && z.sig.mono.divides(&sig.mono))
        .map(|z| z.sig.coeff.clone())
        .collect();
    !coeffs.is_empty() && matches!(ring.lin_decomp(&coeffs, &sig.coeff), Ok(Some(_)))
}

/// The term `coeff(sig)·mono(sig)` is weakly top-reducible by the values of
/// the basis elements from components below `index(sig)`.
pub fn f5_criterion<R: Ring>(
    ring: &R,
    sig: &Signature<R::Elem>,
    basis: &[LabeledPoly<R::Elem>],
) -> bool {
    let lcs: Vec<R::Elem> = basis
        .iter()
        .filter(|g| g.sig.index < sig.index && g.value.lm().unwrap().divides(&sig.mono))
        .map(|g| g.value.lc().unwrap().clone())
        .collect();
    !lcs.is_empty() && matches!(ring.lin_decomp(&lcs, &sig.coeff), Ok(Some(_)))
}

/// Some basis element has this signature up to a unit of the coefficient.
pub fn singular_criterion<R: Ring>(ring: &R, sig: &Signature<R::Elem>, basis: &[LabeledPoly<R::Elem>]) -> bool {
    let divides = |a: &R::Elem, b: &R::Elem| matches!(ring.divides(a, b), Ok(Some(_)));
    basis.iter().any(|g| {
        g.sig.index == sig.index
            && g.sig.mono == sig.mono
            && divides(&g.sig.coeff, &sig.coeff)
            && divides(&sig.coeff, &g.sig.coeff)
    })
}

/// The regular S-polynomial of `set` for colon generator `c`, with
/// signature `c·(M(J)/M(τ))·𝔰(α_τ)`.
pub fn regular_s_polynomial<R: Ring>(
    ctx: &PolyRing<R>,
    set: &RegularSaturatedSet,
    c: &R::Elem,
    basis: &[LabeledPoly<R::Elem>],
) -> Result<LabeledPoly<R::Elem>, AlgoError> {
    let ring = ctx.ring();
    let tau = &basis[set.sig_index];
    let shift = set.lcm.div(tau.value.lm().unwrap()).expect("M(τ) | M(J)");
    let sig = tau.sig.mul_term(ring, c, &shift);
    let others: Vec<usize> = set.indices.iter().copied().filter(|&i| i != set.sig_index).collect();
    let lcs: Vec<R::Elem> = others.iter().map(|&i| basis[i].value.lc().unwrap().clone()).collect();
    let target = ring.mul(c, tau.value.lc().unwrap());
    let b = ring
        .lin_decomp(&lcs, &target)?
        .ok_or_else(|| AlgoError::Internal(format!("c·C(τ) not in ⟨C(J*)⟩ for {set}")))?;
    let mut value = ctx.mul_term(c, &shift, &tau.value);
    for (&i, bi) in others.iter().zip(&b) {
        let gi = &basis[i].value;
        value = ctx.add_scaled(&value, &ring.neg(bi), &set.lcm.div(gi.lm().unwrap()).unwrap(), gi);
    }
    Ok(LabeledPoly { value, sig })
}

/// Generators `c` of `⟨C(j) : j ∈ J*⟩ : ⟨C(τ)⟩`.
pub fn colon_generators<R: Ring>(
    ring: &R,
    set: &RegularSaturatedSet,
    basis: &[LabeledPoly<R::Elem>],
) -> Result<Vec<R::Elem>, AlgoError> {
    let lcs: Vec<R::Elem> = set
        .indices
        .iter()
        .filter(|&&i| i != set.sig_index)
        .map(|&i| basis[i].value.lc().unwrap().clone())
        .collect();
    Ok(ring.sat_ideal(&lcs, basis[set.sig_index].value.lc().unwrap())?)
}

/// Queue order: presignature, then `M(J)`, then the index set.
fn queue_cmp(a: &RegularSaturatedSet, b: &RegularSaturatedSet, order: crate::poly::MonomialOrder) -> Ordering {
    a.presig
        .cmp(&b.presig, order)
        .then_with(|| order.cmp(&a.lcm, &b.lcm))
        .then_with(|| a.indices.cmp(&b.indices))
}

/// Adds the regular saturated sets of the current basis that contain
/// `new_index`. Index sets that were queued before are skipped. A queued set
/// with the same lcm and signature index is superseded by the new one: its
/// S-polynomial has the same signature monomial and a coefficient that is a
/// multiple of the new one's.
pub fn enqueue_regular_sets<R: Ring>(ctx: &PolyRing<R>, state: &mut SigState<R::Elem>, new_index: usize) {
    let lms = leading_monomials(&state.values());
    for set in enumerate_saturated_sets(&lms, new_index, ctx.order()) {
        for rs in regularize(ctx, &set.indices, &state.basis) {
            if rs.indices.binary_search(&new_index).is_ok() && state.seen.insert(rs.indices.clone()) {
                state.queue.retain(|q| q.sig_index != rs.sig_index || q.lcm != rs.lcm);
                state.queue.push(rs);
            }
        }
    }
}

fn pop_min(state: &mut SigState<impl Clone>, order: crate::poly::MonomialOrder) -> Option<RegularSaturatedSet> {
    let best = (0..state.queue.len())
        .min_by(|&a, &b| queue_cmp(&state.queue[a], &state.queue[b], order))?;
    Some(state.queue.swap_remove(best))
}

struct Driver<'a, 'o, R: Ring> {
    ctx: &'a PolyRing<R>,
    observer: Option<&'o mut dyn Observer>,
}

impl<R: Ring> Driver<'_, '_, R> {
    fn emit(&mut self, event: impl FnOnce() -> TraceEvent) {
        if let Some(o) = self.observer.as_deref_mut() {
            o.on_event(&event());
        }
    }

    fn sig_text(&self, sig: &Signature<R::Elem>) -> String {
        format_signature(self.ctx, sig)
    }

    /// Appends `p`, checking that signatures stay nondecreasing, and records
    /// the Koszul signatures it forms with earlier components.
    fn append(&mut self, state: &mut SigState<R::Elem>, p: LabeledPoly<R::Elem>) -> Result<(), AlgoError> {
        if let Some(last) = state.basis.last() {
            if sig_compare(&last.sig, &p.sig, self.ctx.order()) == Ordering::Greater {
                return Err(AlgoError::SignatureOrder {
                    index: state.basis.len() + 1,
                    previous: self.sig_text(&last.sig),
                    new: self.sig_text(&p.sig),
                });
            }
        }
        for g in state.basis.iter().filter(|g| g.sig.index < p.sig.index) {
            let sig = koszul_signature(self.ctx.ring(), g, &p)?;
            state.syzygies.push(SyzygySignature { sig, origin: SyzygyOrigin::Koszul });
        }
        let ctx = self.ctx;
        let position = state.basis.len() + 1;
        self.emit(|| TraceEvent::Add {
            position,
            lt: ctx.format_term(p.value.leading_term().unwrap()),
            sig: format_signature(ctx, &p.sig),
        });
        state.basis.push(p);
        Ok(())
    }

    fn criterion(&self, state: &SigState<R::Elem>, sig: &Signature<R::Elem>) -> Option<&'static str> {
        let ring = self.ctx.ring();
        let c = state.criteria;
        if c.syzygy && syzygy_criterion(ring, sig, &state.syzygies) {
            Some("syzygy")
        } else if c.f5 && f5_criterion(ring, sig, &state.basis) {
            Some("f5")
        } else if c.singular && singular_criterion(self.ctx.ring(), sig, &state.basis) {
            Some("singular")
        } else {
            None
        }
    }

    fn process(&mut self, state: &mut SigState<R::Elem>, set: RegularSaturatedSet) -> Result<(), AlgoError> {
        let ctx = self.ctx;
        self.emit(|| TraceEvent::Pop {
            set: set.to_string(),
            presig: format_module_monomial(ctx, &set.presig),
        });
        let tau = &state.basis[set.sig_index];
        let shift = set.lcm.div(tau.value.lm().unwrap()).expect("M(τ) | M(J)");
        for c in colon_generators(ctx.ring(), &set, &state.basis)? {
            let sig = state.basis[set.sig_index].sig.mul_term(ctx.ring(), &c, &shift);
            self.emit(|| TraceEvent::SPoly { sig: format_signature(ctx, &sig) });
            if let Some(name) = self.criterion(state, &sig) {
                match name {
                    "syzygy" => state.stats.discarded_syzygy += 1,
                    "f5" => state.stats.discarded_f5 += 1,
                    _ => state.stats.discarded_singular += 1,
                }
                self.emit(|| TraceEvent::Criterion { name, sig: format_signature(ctx, &sig) });
                continue;
            }
            let p = regular_s_polynomial(ctx, &set, &c, &state.basis)?;
            debug_assert_eq!(p.sig, sig);
            state.stats.s_polynomials_reduced += 1;
            let r = regular_reduce(ctx, &p, &state.basis)?;
            if r.value.is_zero() {
                state.stats.reductions_to_zero += 1;
                self.emit(|| TraceEvent::Zero { sig: format_signature(ctx, &r.sig) });
                state.syzygies.push(SyzygySignature { sig: r.sig, origin: SyzygyOrigin::ReductionToZero });
            } else if is_1_singular_reducible(ctx, &r, &state.basis) {
                state.stats.discarded_1singular += 1;
                self.emit(|| TraceEvent::Drop1Singular { sig: format_signature(ctx, &r.sig) });
            } else {
                self.append(state, r)?;
                let new = state.basis.len() - 1;
                enqueue_regular_sets(ctx, state, new);
            }
        }
        Ok(())
    }
}

/// Runs SigMöller on `f`. Inputs are introduced one at a time: each `f_i`
/// with signature `1·e_i` is regular-reduced against the current basis and,
/// if nonzero, appended; the queue is then drained before the next input.
pub fn sig_moeller<R: Ring>(
    ctx: &PolyRing<R>,
    f: &[Poly<R::Elem>],
    config: &SigConfig,
    observer: Option<&mut dyn Observer>,
) -> Result<SigState<R::Elem>, AlgoError> {
    check_inputs(f)?;
    let start = Instant::now();
    let mut driver = Driver { ctx, observer };
    let mut state = SigState::new(config.criteria);
    for (i, fi) in f.iter().enumerate() {
        let e = LabeledPoly { value: fi.clone(), sig: Signature::unit(ctx.ring(), ctx.nvars(), i) };
        let r = regular_reduce(ctx, &e, &state.basis)?;
        if r.value.is_zero() {
            state.stats.reductions_to_zero += 1;
            driver.emit(|| TraceEvent::Zero { sig: format_signature(ctx, &r.sig) });
            state.syzygies.push(SyzygySignature { sig: r.sig, origin: SyzygyOrigin::ReductionToZero });
            continue;
        }
        driver.append(&mut state, r)?;
        let new = state.basis.len() - 1;
        enqueue_regular_sets(ctx, &mut state, new);
        while let Some(set) = pop_min(&mut state, ctx.order()) {
            state.stats.saturated_sets_considered += 1;
            if state.stats.saturated_sets_considered > config.max_iterations {
                return Err(AlgoError::IterationLimit(config.max_iterations));
            }
            check_time(start, config.time_limit)?;
            driver.process(&mut state, set)?;
        }
    }
    state.stats.basis_size = state.basis.len() as u64;
    Ok(state)
}
