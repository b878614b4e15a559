//! Textbook Buchberger over ℚ, kept independent of the weak algorithms so it
//! can serve as a reference for leading-monomial ideals.

use num_rational::BigRational;

use crate::poly::{Monomial, Poly, PolyRing};
use crate::ring::Rationals;

type QPoly = Poly<BigRational>;

/// Full normal form of `f` modulo `g` by repeated division of leading terms.
fn normal_form(ctx: &PolyRing<Rationals>, f: &QPoly, g: &[QPoly]) -> QPoly {
    let mut p = f.clone();
    let mut rem = Vec::new();
    while let Some(lt) = p.leading_term().cloned() {
        match g.iter().find(|h| h.lm().unwrap().divides(&lt.mono)) {
            Some(h) => {
                let q = lt.mono.checked_div(h.lm().unwrap()).unwrap();
                let c = -(&lt.coeff / h.lc().unwrap());
                p = ctx.add_scaled(&p, &c, &q, h);
            }
            None => {
                p = ctx.sub(&p, &ctx.monomial(lt.coeff.clone(), lt.mono.clone()));
                rem.push(lt);
            }
        }
    }
    ctx.from_terms(rem)
}

fn s_poly(ctx: &PolyRing<Rationals>, a: &QPoly, b: &QPoly) -> QPoly {
    let (ma, mb) = (a.lm().unwrap(), b.lm().unwrap());
    let l = ma.lcm(mb);
    let left = ctx.mul_term(&a.lc().unwrap().recip(), &l.checked_div(ma).unwrap(), a);
    let right = ctx.mul_term(&b.lc().unwrap().recip(), &l.checked_div(mb).unwrap(), b);
    ctx.sub(&left, &right)
}

fn monic(ctx: &PolyRing<Rationals>, p: &QPoly) -> QPoly {
    ctx.scale(&p.lc().unwrap().recip(), p)
}

/// A Gröbner basis of `⟨f⟩` by the classical pair-by-pair algorithm:
/// smallest lcm first, skipping pairs with coprime leading monomials.
pub fn buchberger(ctx: &PolyRing<Rationals>, f: &[QPoly]) -> Vec<QPoly> {
    let mut g: Vec<QPoly> = f.iter().filter(|p| !p.is_zero()).map(|p| monic(ctx, p)).collect();
    let mut pairs: Vec<(usize, usize)> = (0..g.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let lcm = |g: &[QPoly], (i, j): (usize, usize)| g[i].lm().unwrap().lcm(g[j].lm().unwrap());
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| ctx.mono_cmp(&lcm(&g, pairs[a]), &lcm(&g, pairs[b])))
            .unwrap();
        let (i, j) = pairs.swap_remove(best);
        let (a, b) = (g[i].lm().unwrap(), g[j].lm().unwrap());
        if a.lcm(b).degree() == a.degree() + b.degree() {
            continue;
        }
        let r = normal_form(ctx, &s_poly(ctx, &g[i], &g[j]), &g);
        if !r.is_zero() {
            let n = g.len();
            g.push(monic(ctx, &r));
            pairs.extend((0..n).map(|i| (i, n)));
        }
    }
    g
}

/// The minimal generators of the monomial ideal `⟨lms⟩`, sorted by exponent vector.
pub fn minimal_generators(lms: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for (i, m) in lms.iter().enumerate() {
        let redundant = lms
            .iter()
            .enumerate()
            .any(|(j, d)| d.divides(m) && (d != m || j < i));
        if !redundant {
            out.push(m.clone());
        }
    }
    out.sort_by(|a, b| a.exponents().cmp(b.exponents()));
    out
}

/// Minimal generators of the ideal spanned by the leading monomials of `basis`.
pub fn leading_monomial_ideal<E>(basis: &[Poly<E>]) -> Vec<Monomial> {
    let lms: Vec<Monomial> = basis.iter().filter_map(|p| p.lm().cloned()).collect();
    minimal_generators(&lms)
}
