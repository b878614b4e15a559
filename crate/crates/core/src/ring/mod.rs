//! Effective coefficient rings.
//!
//! A ring is effective when it has exact arithmetic, a linear decomposition
//! procedure ([`Ring::lin_decomp`]) and generators for colon ideals
//! ([`Ring::sat_ideal`]). Four backends are provided: the integers, the
//! rationals, univariate polynomials over the rationals and (experimental)
//! multivariate polynomials over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::RingError;

mod euclid;
mod integers;
mod multipoly;
mod rationals;
mod unipoly;

pub use euclid::EuclideanDomain;
pub use integers::Integers;
pub use multipoly::MultiPolyRing;
pub use rationals::Rationals;
pub use unipoly::{UniPoly, UniPolyRing};

/// Which backend a ring is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingKind {
    Integers,
    Rationals,
    UnivariatePoly,
    MultivariatePoly,
}

/// Runtime description of a coefficient ring, as read from problem files.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    pub kind: RingKind,
    /// Names of the coefficient ring's own variables (polynomial backends only).
    pub aux_vars: Vec<String>,
}

impl RingDescriptor {
    pub fn integers() -> Self {
        Self { kind: RingKind::Integers, aux_vars: Vec::new() }
    }

    pub fn rationals() -> Self {
        Self { kind: RingKind::Rationals, aux_vars: Vec::new() }
    }

    pub fn univariate(var: impl Into<String>) -> Self {
        Self { kind: RingKind::UnivariatePoly, aux_vars: vec![var.into()] }
    }

    pub fn multivariate<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Self {
        Self {
            kind: RingKind::MultivariatePoly,
            aux_vars: vars.into_iter().map(Into::into).collect(),
        }
    }

    pub fn is_pid(&self) -> bool {
        matches!(
            self.kind,
            RingKind::Integers | RingKind::Rationals | RingKind::UnivariatePoly
        )
    }

    pub fn is_field(&self) -> bool {
        self.kind == RingKind::Rationals
    }

    /// The multivariate backend is a UFD for which SigMöller is not proven correct.
    pub fn is_experimental(&self) -> bool {
        self.kind == RingKind::MultivariatePoly
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RingKind::Integers => f.write_str("int"),
            RingKind::Rationals => f.write_str("rat"),
            RingKind::UnivariatePoly => write!(f, "unipoly({})", self.aux_vars.join(",")),
            RingKind::MultivariatePoly => write!(f, "multipoly({})", self.aux_vars.join(",")),
        }
    }
}

impl std::str::FromStr for RingDescriptor {
    type Err = String;

    /// `int`, `rat`, `unipoly(t)` or `multipoly(t,u)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "int" => return Ok(Self::integers()),
            "rat" => return Ok(Self::rationals()),
            _ => {}
        }
        let (head, rest) = s.split_once('(').ok_or_else(|| format!("unknown ring `{s}`"))?;
        let inner = rest.strip_suffix(')').ok_or_else(|| format!("unclosed `(` in `{s}`"))?;
        let vars: Vec<String> = inner.split(',').map(|v| v.trim().to_string()).collect();
        if let Some(bad) = vars.iter().find(|v| !is_identifier(v)) {
            return Err(format!("`{bad}` is not a valid variable name"));
        }
        match (head.trim(), vars.len()) {
            ("unipoly", 1) => Ok(Self::univariate(vars[0].clone())),
            ("unipoly", _) => Err("unipoly takes exactly one variable".into()),
            ("multipoly", _) => Ok(Self::multivariate(vars)),
            (other, _) => Err(format!("unknown ring `{other}`")),
        }
    }
}

/// Names accepted for variables: a letter or `_`, then letters, digits, `_`.
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// One summand `scalar * aux` of a coefficient, used when printing
/// polynomials in the flat problem-file grammar. `aux` is a product of
/// auxiliary variables such as `t^2*u`, or empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffSummand {
    pub scalar: BigRational,
    pub aux: String,
}

/// An effective commutative integral domain with unit.
///
/// Elements are plain values; the ring object carries whatever context the
/// backend needs (variable names, monomial order of the coefficients).
pub trait Ring: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;

    fn descriptor(&self) -> RingDescriptor;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn from_int(&self, n: &BigInt) -> Self::Elem;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    /// Embeds a rational literal, if the ring contains it.
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem>;

    /// The element named by an auxiliary variable of a polynomial coefficient ring.
    fn aux_variable(&self, _name: &str) -> Option<Self::Elem> {
        None
    }

    /// Decides `k ∈ ⟨gens⟩` and returns a witness `(l_i)` with `k = Σ l_i·gens_i`.
    ///
    /// The witness has one entry per generator, including zero generators
    /// (whose coefficient is always zero).
    fn lin_decomp(
        &self,
        gens: &[Self::Elem],
        k: &Self::Elem,
    ) -> Result<Option<Vec<Self::Elem>>, RingError>;

    /// Generators of the colon ideal `⟨gens⟩ : ⟨k⟩`. `k` must be nonzero.
    fn sat_ideal(&self, gens: &[Self::Elem], k: &Self::Elem)
        -> Result<Vec<Self::Elem>, RingError>;

    /// Returns `(unit, canonical)` with `canonical = unit·k`.
    fn canonical_associate(&self, k: &Self::Elem)
        -> Result<(Self::Elem, Self::Elem), RingError>;

    /// Canonical gcd and lcm; only PID backends implement this.
    fn gcd_lcm(&self, a: &Self::Elem, b: &Self::Elem)
        -> Result<(Self::Elem, Self::Elem), RingError>;

    /// Returns `q` with `b = q·a`, if `a` divides `b`.
    fn divides(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Option<Self::Elem>, RingError> {
        Ok(self
            .lin_decomp(std::slice::from_ref(a), b)?
            .map(|mut l| l.remove(0)))
    }

    /// Human-readable form, e.g. `-5`, `3/4` or `t^2 + 1`.
    fn display(&self, a: &Self::Elem) -> String;

    /// True if `display` yields a sum that needs parentheses when printed as a factor.
    fn is_compound(&self, _a: &Self::Elem) -> bool {
        false
    }

    /// Splits an element into `scalar * aux-monomial` summands.
    fn summands(&self, a: &Self::Elem) -> Vec<CoeffSummand>;
}

/// A computation generic over the backend, selected at runtime by [`dispatch`].
pub trait RingVisitor {
    type Output;
    fn visit<R: Ring + 'static>(self, ring: R) -> Self::Output;
}

/// Instantiates the backend described by `desc` and hands it to `visitor`.
pub fn dispatch<V: RingVisitor>(desc: &RingDescriptor, visitor: V) -> V::Output {
    match desc.kind {
        RingKind::Integers => visitor.visit(Integers),
        RingKind::Rationals => visitor.visit(Rationals),
        RingKind::UnivariatePoly => visitor.visit(UniPolyRing::new(desc.aux_vars[0].clone())),
        RingKind::MultivariatePoly => visitor.visit(MultiPolyRing::new(desc.aux_vars.iter().cloned())),
    }
}

/// Drops zero generators, remembering their original positions.
pub(crate) fn nonzero_positions<R: Ring>(ring: &R, gens: &[R::Elem]) -> Vec<usize> {
    (0..gens.len()).filter(|&i| !ring.is_zero(&gens[i])).collect()
}

/// Spreads a witness computed over the nonzero generators back onto the full list.
pub(crate) fn scatter<R: Ring>(
    ring: &R,
    len: usize,
    positions: &[usize],
    coeffs: Vec<R::Elem>,
) -> Vec<R::Elem> {
    let mut out = vec![ring.zero(); len];
    for (&p, c) in positions.iter().zip(coeffs) {
        out[p] = c;
    }
    out
}
