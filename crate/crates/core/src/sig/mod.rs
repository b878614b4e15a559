//! Signatures under the position-over-term order, regular and 1-singular
//! s-reduction, and regular saturated sets.

use std::cmp::Ordering;

use crate::error::RingError;
use crate::poly::{Monomial, MonomialOrder, Poly, PolyRing};
use crate::ring::Ring;

mod reduce;
mod regular;

pub use reduce::{is_1_singular_reducible, regular_reduce};
pub use regular::{presignature, regularize, Presignature, RegularSaturatedSet};

/// A module monomial `x^a·e_i` (0-based `index`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleMonomial {
    pub mono: Monomial,
    pub index: usize,
}

impl ModuleMonomial {
    /// Position over term: the component index decides first, a lower index
    /// being smaller.
    pub fn cmp(&self, other: &Self, order: MonomialOrder) -> Ordering {
        self.index.cmp(&other.index).then_with(|| order.cmp(&self.mono, &other.mono))
    }

    pub fn shifted(&self, m: &Monomial) -> Self {
        Self { mono: self.mono.mul(m), index: self.index }
    }
}

/// A module term `k·x^a·e_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature<E> {
    pub coeff: E,
    pub mono: Monomial,
    pub index: usize,
}

impl<E: Clone> Signature<E> {
    /// The unit signature `1·e_index`.
    pub fn unit<R: Ring<Elem = E>>(ring: &R, nvars: usize, index: usize) -> Self {
        Self { coeff: ring.one(), mono: Monomial::one(nvars), index }
    }

    pub fn module_monomial(&self) -> ModuleMonomial {
        ModuleMonomial { mono: self.mono.clone(), index: self.index }
    }

    /// `k·m·self`.
    pub fn mul_term<R: Ring<Elem = E>>(&self, ring: &R, k: &E, m: &Monomial) -> Self {
        Self { coeff: ring.mul(k, &self.coeff), mono: self.mono.mul(m), index: self.index }
    }
}

/// Compares signatures ignoring coefficients; `Equal` means `≃`.
pub fn sig_compare<E>(a: &Signature<E>, b: &Signature<E>, order: MonomialOrder) -> Ordering {
    a.index.cmp(&b.index).then_with(|| order.cmp(&a.mono, &b.mono))
}

/// `(k, m)` with `k·m·a = b` when the indices agree, `mono(a) | mono(b)`
/// and `coeff(a) | coeff(b)`.
pub fn sig_divides<R: Ring>(
    ring: &R,
    a: &Signature<R::Elem>,
    b: &Signature<R::Elem>,
) -> Result<Option<(R::Elem, Monomial)>, RingError> {
    if a.index != b.index {
        return Ok(None);
    }
    let Some(m) = b.mono.checked_div(&a.mono) else {
        return Ok(None);
    };
    Ok(ring.divides(&a.coeff, &b.coeff)?.map(|k| (k, m)))
}

/// A module element represented by its polynomial value and its signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledPoly<E> {
    pub value: Poly<E>,
    pub sig: Signature<E>,
}

/// `3ye2`, `1e1`, `(t + 1)xe2`.
pub fn format_signature<R: Ring>(ctx: &PolyRing<R>, sig: &Signature<R::Elem>) -> String {
    format!("{}e{}", ctx.format_coeff_mono(&sig.coeff, &sig.mono), sig.index + 1)
}

/// `ye2`, `e1`.
pub fn format_module_monomial<R: Ring>(ctx: &PolyRing<R>, m: &ModuleMonomial) -> String {
    format!("{}e{}", ctx.format_mono_compact(&m.mono), m.index + 1)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::ring::Integers;
    use num_bigint::BigInt;

    fn ctx() -> PolyRing<Integers> {
        PolyRing::new(Integers, ["x", "y"], MonomialOrder::Lex)
    }

    pub(crate) fn sig(r: &PolyRing<Integers>, k: i64, m: &str, i: usize) -> Signature<BigInt> {
        Signature { coeff: k.into(), mono: r.parse(m).unwrap().lm().unwrap().clone(), index: i - 1 }
    }

    #[test]
    fn pot_comparison() {
        let r = ctx();
        assert_eq!(sig_compare(&sig(&r, 1, "x", 1), &sig(&r, 1, "y", 2), r.order()), Ordering::Less);
        assert_eq!(sig_compare(&sig(&r, 6, "y", 2), &sig(&r, 5, "y", 2), r.order()), Ordering::Equal);
        assert_eq!(sig_compare(&sig(&r, 1, "y", 2), &sig(&r, 1, "y^2", 2), r.order()), Ordering::Less);
    }

    #[test]
    fn divisibility() {
        let r = ctx();
        let y2 = r.parse("y^2").unwrap().lm().unwrap().clone();
        let d = sig_divides(&Integers, &sig(&r, 27, "y", 2), &sig(&r, 27, "y^3", 2)).unwrap();
        assert_eq!(d, Some((BigInt::from(1), y2)));
        let d = sig_divides(&Integers, &sig(&r, 27, "y^2", 2), &sig(&r, 27, "y^3", 2)).unwrap();
        assert_eq!(d.unwrap().1, r.parse("y").unwrap().lm().unwrap().clone());
        assert_eq!(sig_divides(&Integers, &sig(&r, 2, "y", 2), &sig(&r, 3, "y", 2)).unwrap(), None);
        assert_eq!(sig_divides(&Integers, &sig(&r, 1, "y", 1), &sig(&r, 1, "y", 2)).unwrap(), None);
    }

    #[test]
    fn printing() {
        let r = ctx();
        assert_eq!(format_signature(&r, &sig(&r, 27, "y^2", 2)), "27y^2e2");
        assert_eq!(format_signature(&r, &sig(&r, 1, "1", 1)), "1e1");
        assert_eq!(format_module_monomial(&r, &sig(&r, 3, "x*y", 2).module_monomial()), "xye2");
    }
}
