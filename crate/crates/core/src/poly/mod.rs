//! Sparse multivariate polynomials over an effective ring.
//!
//! A [`Poly`] is a list of terms sorted strictly decreasing in the monomial
//! order of its [`PolyRing`]; the leading term is always the first one. The
//! ring context owns the coefficient ring, the variable names and the order,
//! so every operation that needs to compare monomials goes through it.

use std::cmp::Ordering;

use crate::error::{ParseError, PolyError};
use crate::ring::Ring;

mod monomial;
mod parse;

pub use monomial::{Monomial, MonomialOrder};

/// A term `k·x^a` with `k ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term<E> {
    pub coeff: E,
    pub mono: Monomial,
}

impl<E> Term<E> {
    pub fn new(coeff: E, mono: Monomial) -> Self {
        Self { coeff, mono }
    }
}

/// A polynomial, terms strictly decreasing in the ring's monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<E> {
    terms: Vec<Term<E>>,
}

impl<E> Poly<E> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term<E>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term<E>> {
        self.terms.first()
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn lc(&self) -> Option<&E> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn into_terms(self) -> Vec<Term<E>> {
        self.terms
    }
}

/// The polynomial ring `R[x_1, …, x_n]` with a fixed monomial order.
#[derive(Debug, Clone)]
pub struct PolyRing<R: Ring> {
    ring: R,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl<R: Ring> PolyRing<R> {
    pub fn new<S: Into<String>>(
        ring: R,
        vars: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Self {
        Self { ring, vars: vars.into_iter().map(Into::into).collect(), order }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn mono_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn mono_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, PolyError> {
        self.order.compare(a, b)
    }

    pub fn one_mono(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.monomial(c, self.one_mono())
    }

    pub fn one(&self) -> Poly<R::Elem> {
        self.constant(self.ring.one())
    }

    pub fn var(&self, i: usize) -> Poly<R::Elem> {
        self.monomial(self.ring.one(), Monomial::var(self.nvars(), i))
    }

    pub fn monomial(&self, c: R::Elem, m: Monomial) -> Poly<R::Elem> {
        if self.ring.is_zero(&c) {
            Poly::zero()
        } else {
            Poly { terms: vec![Term::new(c, m)] }
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges equal
    /// monomials and drops zero coefficients.
    pub fn from_terms(&self, mut terms: Vec<Term<R::Elem>>) -> Poly<R::Elem> {
        terms.sort_by(|a, b| self.order.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term<R::Elem>> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = self.ring.add(&last.coeff, &t.coeff);
                }
                _ => {
                    if out.last().is_some_and(|l| self.ring.is_zero(&l.coeff)) {
                        out.pop();
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|l| self.ring.is_zero(&l.coeff)) {
            out.pop();
        }
        Poly { terms: out }
    }

    /// True if the terms are strictly decreasing and all coefficients are nonzero.
    pub fn is_canonical(&self, p: &Poly<R::Elem>) -> bool {
        p.terms.iter().all(|t| !self.ring.is_zero(&t.coeff) && t.mono.nvars() == self.nvars())
            && p.terms
                .windows(2)
                .all(|w| self.order.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater)
    }

    pub fn add(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.add_scaled(a, &self.ring.one(), &self.one_mono(), b)
    }

    pub fn sub(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.add_scaled(a, &self.ring.neg(&self.ring.one()), &self.one_mono(), b)
    }

    pub fn neg(&self, a: &Poly<R::Elem>) -> Poly<R::Elem> {
        Poly {
            terms: a
                .terms
                .iter()
                .map(|t| Term::new(self.ring.neg(&t.coeff), t.mono.clone()))
                .collect(),
        }
    }

    /// `c·m·p`. Monomial orders are multiplicative and `R` is a domain, so
    /// the term order is preserved.
    pub fn mul_term(&self, c: &R::Elem, m: &Monomial, p: &Poly<R::Elem>) -> Poly<R::Elem> {
        if self.ring.is_zero(c) {
            return Poly::zero();
        }
        Poly {
            terms: p
                .terms
                .iter()
                .map(|t| Term::new(self.ring.mul(c, &t.coeff), m.mul(&t.mono)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &R::Elem, p: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.mul_term(c, &self.one_mono(), p)
    }

    /// `a + c·m·b`, merging the two sorted term lists.
    pub fn add_scaled(
        &self,
        a: &Poly<R::Elem>,
        c: &R::Elem,
        m: &Monomial,
        b: &Poly<R::Elem>,
    ) -> Poly<R::Elem> {
        if self.ring.is_zero(c) || b.is_zero() {
            return a.clone();
        }
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut ia = a.terms.iter().peekable();
        let mut ib = b
            .terms
            .iter()
            .map(|t| Term::new(self.ring.mul(c, &t.coeff), m.mul(&t.mono)))
            .peekable();
        loop {
            let ord = match (ia.peek(), ib.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => self.order.cmp(&x.mono, &y.mono),
            };
            match ord {
                Ordering::Greater => out.push(ia.next().unwrap().clone()),
                Ordering::Less => out.push(ib.next().unwrap()),
                Ordering::Equal => {
                    let x = ia.next().unwrap();
                    let y = ib.next().unwrap();
                    let s = self.ring.add(&x.coeff, &y.coeff);
                    if !self.ring.is_zero(&s) {
                        out.push(Term::new(s, y.mono));
                    }
                }
            }
        }
        Poly { terms: out }
    }

    pub fn mul(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        a.terms
            .iter()
            .fold(Poly::zero(), |acc, t| self.add_scaled(&acc, &t.coeff, &t.mono, b))
    }

    pub fn pow(&self, a: &Poly<R::Elem>, e: u32) -> Poly<R::Elem> {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// Parses the flat grammar `[+|-] term ((+|-) term)*`, where a term is a
    /// `*`-separated product of numeric literals (`3`, `2/5`) and variables
    /// with optional `^exponent`. Coefficient-ring variables are accepted as
    /// factors too.
    pub fn parse(&self, text: &str) -> Result<Poly<R::Elem>, ParseError> {
        parse::parse(self, text)
    }

    /// Monomial in the parse grammar: `x^2*y`, or `1` for the constant monomial.
    pub fn format_mono(&self, m: &Monomial) -> String {
        let parts = self.mono_factors(m);
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// Monomial without separators, as used in signatures: `x^2y`, empty for 1.
    pub fn format_mono_compact(&self, m: &Monomial) -> String {
        self.mono_factors(m).concat()
    }

    fn mono_factors(&self, m: &Monomial) -> Vec<String> {
        m.exponents()
            .iter()
            .zip(&self.vars)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect()
    }

    /// Prints in the parse grammar; `parse(format(p)) == p`.
    pub fn format(&self, p: &Poly<R::Elem>) -> String {
        let mut out = String::new();
        for t in &p.terms {
            for s in self.ring.summands(&t.coeff) {
                use num_traits::{One, Signed};
                let neg = s.scalar.is_negative();
                let abs = s.scalar.abs();
                let mut factors = Vec::new();
                if !abs.is_one() {
                    factors.push(abs.to_string());
                }
                if !s.aux.is_empty() {
                    factors.push(s.aux.clone());
                }
                factors.extend(self.mono_factors(&t.mono));
                if factors.is_empty() {
                    factors.push("1".into());
                }
                if out.is_empty() {
                    if neg {
                        out.push('-');
                    }
                } else {
                    out.push_str(if neg { " - " } else { " + " });
                }
                out.push_str(&factors.join("*"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// A single term in the parse grammar.
    pub fn format_term(&self, t: &Term<R::Elem>) -> String {
        self.format(&Poly { terms: vec![t.clone()] })
    }

    /// Coefficient followed by a compact monomial, e.g. `27y^2` or `(t + 1)x`.
    pub fn format_coeff_mono(&self, c: &R::Elem, m: &Monomial) -> String {
        let c = if self.ring.is_compound(c) {
            format!("({})", self.ring.display(c))
        } else {
            self.ring.display(c)
        };
        format!("{c}{}", self.format_mono_compact(m))
    }
}
