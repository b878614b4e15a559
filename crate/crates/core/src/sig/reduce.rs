use std::cmp::Ordering;

use super::LabeledPoly;
use crate::error::AlgoError;
use crate::poly::PolyRing;
use crate::ring::Ring;
use crate::weak::leading_combination;

/// Regular weak top s-reduction: as weak reduction, but a basis element
/// `α_j` may only take part when `(LM(r)/LM(α_j))·𝔰(α_j) < 𝔰(r)`.
/// The signature of the result is that of `p`.
pub fn regular_reduce<R: Ring>(
    ctx: &PolyRing<R>,
    p: &LabeledPoly<R::Elem>,
    basis: &[LabeledPoly<R::Elem>],
) -> Result<LabeledPoly<R::Elem>, AlgoError> {
    let ring = ctx.ring();
    let order = ctx.order();
    let target = p.sig.module_monomial();
    let mut r = p.value.clone();
    while let Some(lt) = r.leading_term().cloned() {
        let mut reducers = Vec::new();
        for (j, g) in basis.iter().enumerate() {
            let Some(shift) = lt.mono.checked_div(g.value.lm().unwrap()) else {
                continue;
            };
            if g.sig.module_monomial().shifted(&shift).cmp(&target, order) == Ordering::Less {
                reducers.push((j, shift));
            }
        }
        if reducers.is_empty() {
            break;
        }
        let lcs: Vec<&R::Elem> = reducers.iter().map(|(j, _)| basis[*j].value.lc().unwrap()).collect();
        let Some(k) = leading_combination(ring, &lcs, &lt.coeff)? else {
            break;
        };
        for (pos, kj) in k {
            let (j, shift) = &reducers[pos];
            r = ctx.add_scaled(&r, &ring.neg(&kj), shift, &basis[*j].value);
        }
    }
    Ok(LabeledPoly { value: r, sig: p.sig.clone() })
}

/// The 1-singular test: some `α_j` with `LM(α_j) | LM(p)` has shifted
/// signature `≃ 𝔰(p)` and a coefficient dividing that of `𝔰(p)`. Only
/// signatures are inspected. When coefficient divisibility cannot be decided
/// the answer is `false`, so the element is kept.
pub fn is_1_singular_reducible<R: Ring>(
    ctx: &PolyRing<R>,
    p: &LabeledPoly<R::Elem>,
    basis: &[LabeledPoly<R::Elem>],
) -> bool {
    let Some(lm) = p.value.lm() else {
        return false;
    };
    let target = p.sig.module_monomial();
    basis.iter().any(|g| {
        let Some(shift) = lm.checked_div(g.value.lm().unwrap()) else {
            return false;
        };
        g.sig.module_monomial().shifted(&shift).cmp(&target, ctx.order()) == Ordering::Equal
            && matches!(ctx.ring().divides(&g.sig.coeff, &p.sig.coeff), Ok(Some(_)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;
    use crate::ring::Integers;
    use crate::sig::tests::sig;

    fn ctx() -> PolyRing<Integers> {
        PolyRing::new(Integers, ["x", "y"], MonomialOrder::Lex)
    }

    fn lp(r: &PolyRing<Integers>, v: &str, k: i64, m: &str, i: usize) -> LabeledPoly<num_bigint::BigInt> {
        LabeledPoly { value: r.parse(v).unwrap(), sig: sig(r, k, m, i) }
    }

    #[test]
    fn worked_h3_reduces_to_g3() {
        let r = ctx();
        let g = [lp(&r, "3*x*y + x + y^2", 1, "1", 1), lp(&r, "x^2", 1, "1", 2)];
        let h3 = lp(&r, "-x^2 - x*y^2", 3, "y", 2);
        let out = regular_reduce(&r, &h3, &g).unwrap();
        assert_eq!(out, lp(&r, "-x*y^2", 3, "y", 2));
        assert_eq!(regular_reduce(&r, &out, &g).unwrap(), out);
    }

    #[test]
    fn equal_signature_reducer_is_excluded() {
        let r = ctx();
        let g6 = lp(&r, "3*y^4", 27, "y^2", 2);
        let p = lp(&r, "y^4", 9, "y^2", 2);
        assert_eq!(regular_reduce(&r, &p, &[g6]).unwrap(), p);
    }

    #[test]
    fn one_singular() {
        let r = ctx();
        let g6 = lp(&r, "3*y^4", 27, "y^2", 2);
        let h8 = lp(&r, "3*y^5", 27, "y^3", 2);
        assert!(is_1_singular_reducible(&r, &h8, &[g6]));
        assert!(!is_1_singular_reducible(&r, &h8, &[]));
        let p = lp(&r, "5*y^3", 3, "y", 2);
        let q = lp(&r, "y^3", 2, "y", 2);
        assert!(!is_1_singular_reducible(&r, &p, &[q]));
    }
}
