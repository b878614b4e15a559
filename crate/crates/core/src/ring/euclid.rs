//! Linear decomposition and colon ideals for Euclidean domains.

use super::{nonzero_positions, scatter, Ring};
use crate::error::RingError;

/// A ring with Euclidean division and a choice of canonical associates.
pub trait EuclideanDomain: Ring {
    /// Returns `(q, r)` with `a = q·b + r` and `r` smaller than `b`. `b` is nonzero.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);

    /// Returns `(unit, canonical)` for a nonzero `a`.
    fn normalize(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem);
}

/// Extended Euclid: `(g, s, t)` with `g = s·a + t·b`. No normalization of `g`.
pub(crate) fn ext_gcd<R: EuclideanDomain>(
    ring: &R,
    a: &R::Elem,
    b: &R::Elem,
) -> (R::Elem, R::Elem, R::Elem) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (ring.one(), ring.zero());
    let (mut old_t, mut t) = (ring.zero(), ring.one());
    while !ring.is_zero(&r) {
        let (q, rem) = ring.div_rem(&old_r, &r);
        old_r = std::mem::replace(&mut r, rem);
        let next_s = ring.sub(&old_s, &ring.mul(&q, &s));
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = ring.sub(&old_t, &ring.mul(&q, &t));
        old_t = std::mem::replace(&mut t, next_t);
    }
    (old_r, old_s, old_t)
}

/// Folds the gcd over the generators left to right, recording Bézout
/// factors, then scales the combination by `k / gcd`.
///
/// When a later generator divides the running gcd, Euclid returns the
/// cofactor pair `(0, unit)`, so earlier generators receive zero
/// coefficients.
pub(crate) fn lin_decomp<R: EuclideanDomain>(
    ring: &R,
    gens: &[R::Elem],
    k: &R::Elem,
) -> Option<Vec<R::Elem>> {
    let positions = nonzero_positions(ring, gens);
    let Some((&first, rest)) = positions.split_first() else {
        return ring.is_zero(k).then(|| vec![ring.zero(); gens.len()]);
    };
    let mut g = gens[first].clone();
    let mut coeffs = vec![ring.one()];
    for &p in rest {
        let (d, s, t) = ext_gcd(ring, &g, &gens[p]);
        for c in coeffs.iter_mut() {
            *c = ring.mul(c, &s);
        }
        coeffs.push(t);
        g = d;
    }
    let (unit, g) = ring.normalize(&g);
    let (q, r) = ring.div_rem(k, &g);
    if !ring.is_zero(&r) {
        return None;
    }
    let factor = ring.mul(&unit, &q);
    let mut coeffs: Vec<R::Elem> = coeffs.iter().map(|c| ring.mul(c, &factor)).collect();
    shrink_cofactors(ring, &positions.iter().map(|&p| gens[p].clone()).collect::<Vec<_>>(), &mut coeffs);
    Some(scatter(ring, gens.len(), &positions, coeffs))
}

/// Reduces every cofactor but the last modulo `a_n / gcd(a_i, a_n)`, moving
/// the quotient onto the last one, so that `Σ l_i·a_i` is unchanged. Scaling
/// the fold by `k / gcd` otherwise leaves cofactors of size about `|k|·|a|`.
fn shrink_cofactors<R: EuclideanDomain>(ring: &R, gens: &[R::Elem], coeffs: &mut [R::Elem]) {
    let Some((last_gen, others)) = gens.split_last() else {
        return;
    };
    let n = others.len();
    for (i, a) in others.iter().enumerate() {
        let g = ext_gcd(ring, a, last_gen).0;
        let (m, _) = ring.div_rem(last_gen, &g);
        let (t, rem) = ring.div_rem(&coeffs[i], &m);
        if ring.is_zero(&t) {
            continue;
        }
        let (step, _) = ring.div_rem(a, &g);
        coeffs[i] = rem;
        coeffs[n] = ring.add(&coeffs[n], &ring.mul(&t, &step));
    }
}

fn gcd_all<R: EuclideanDomain>(ring: &R, gens: &[R::Elem]) -> Option<R::Elem> {
    let mut acc: Option<R::Elem> = None;
    for g in gens.iter().filter(|g| !ring.is_zero(g)) {
        acc = Some(match acc {
            None => g.clone(),
            Some(a) => ext_gcd(ring, &a, g).0,
        });
    }
    acc.map(|g| ring.normalize(&g).1)
}

/// `⟨g⟩ : ⟨k⟩ = ⟨g / gcd(g, k)⟩` where `g` generates `⟨gens⟩`.
pub(crate) fn sat_ideal<R: EuclideanDomain>(
    ring: &R,
    gens: &[R::Elem],
    k: &R::Elem,
) -> Result<Vec<R::Elem>, RingError> {
    if ring.is_zero(k) {
        return Err(RingError::ZeroInput("sat_ideal"));
    }
    let Some(g) = gcd_all(ring, gens) else {
        return Ok(Vec::new());
    };
    let d = ring.normalize(&ext_gcd(ring, &g, k).0).1;
    let (q, _) = ring.div_rem(&g, &d);
    Ok(vec![ring.normalize(&q).1])
}

pub(crate) fn gcd_lcm<R: EuclideanDomain>(
    ring: &R,
    a: &R::Elem,
    b: &R::Elem,
) -> Result<(R::Elem, R::Elem), RingError> {
    if ring.is_zero(a) && ring.is_zero(b) {
        return Err(RingError::ZeroInput("gcd_lcm"));
    }
    let g = ring.normalize(&ext_gcd(ring, a, b).0).1;
    if ring.is_zero(a) || ring.is_zero(b) {
        return Ok((g, ring.zero()));
    }
    let (q, _) = ring.div_rem(&ring.mul(a, b), &g);
    Ok((g, ring.normalize(&q).1))
}
