//! ℚ[y_1, …, y_k] as a coefficient ring (experimental: a UFD, not a PID).
//!
//! Ideal membership and colon ideals are computed with field Gröbner bases
//! in the coefficient variables: a Buchberger run that tracks, for every
//! basis element, its expression in the original generators.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{nonzero_positions, scatter, CoeffSummand, Rationals, Ring, RingDescriptor};
use crate::error::RingError;
use crate::poly::{Monomial, MonomialOrder, Poly, PolyRing, Term};

type QPoly = Poly<BigRational>;

/// Multivariate polynomials over ℚ used as coefficients, ordered by grevlex.
#[derive(Debug, Clone)]
pub struct MultiPolyRing {
    ctx: PolyRing<Rationals>,
}

impl MultiPolyRing {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Self {
        Self { ctx: PolyRing::new(Rationals, vars, MonomialOrder::GrevLex) }
    }

    /// The polynomial ring of the coefficients themselves.
    pub fn inner(&self) -> &PolyRing<Rationals> {
        &self.ctx
    }

    pub fn parse_elem(&self, text: &str) -> Result<QPoly, crate::error::ParseError> {
        self.ctx.parse(text)
    }
}

/// A basis element together with its cofactors over the input generators.
struct Tracked {
    poly: QPoly,
    cofactors: Vec<QPoly>,
}

/// Full multivariate division of `f` by `basis`: returns the remainder and
/// one quotient per basis element.
fn divide(ctx: &PolyRing<Rationals>, basis: &[&QPoly], f: &QPoly) -> (QPoly, Vec<QPoly>) {
    let mut quotients = vec![QPoly::zero(); basis.len()];
    let mut rest = f.clone();
    let mut rem_terms = Vec::new();
    while let Some(lt) = rest.leading_term().cloned() {
        let hit = basis.iter().enumerate().find_map(|(i, g)| {
            lt.mono.checked_div(g.lm().unwrap()).map(|m| (i, m))
        });
        match hit {
            Some((i, m)) => {
                let c = &lt.coeff / basis[i].lc().unwrap();
                quotients[i] = ctx.add(&quotients[i], &ctx.monomial(c.clone(), m.clone()));
                rest = ctx.add_scaled(&rest, &-c, &m, basis[i]);
            }
            None => {
                rest = ctx.sub(&rest, &ctx.monomial(lt.coeff.clone(), lt.mono.clone()));
                rem_terms.push(lt);
            }
        }
    }
    (ctx.from_terms(rem_terms), quotients)
}

fn combine(ctx: &PolyRing<Rationals>, parts: &[(QPoly, &[QPoly])], width: usize) -> Vec<QPoly> {
    let mut out = vec![QPoly::zero(); width];
    for (factor, cof) in parts {
        for (o, c) in out.iter_mut().zip(cof.iter()) {
            *o = ctx.add(o, &ctx.mul(factor, c));
        }
    }
    out
}

/// Buchberger over ℚ with cofactor tracking. Pairs with coprime leading
/// monomials are skipped.
fn tracked_groebner(ctx: &PolyRing<Rationals>, gens: &[QPoly]) -> Vec<Tracked> {
    let width = gens.len();
    let mut basis: Vec<Tracked> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut cofactors = vec![QPoly::zero(); width];
            cofactors[i] = ctx.one();
            Tracked { poly: g.clone(), cofactors }
        })
        .collect();
    let mut pairs: Vec<(usize, usize)> =
        (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop() {
        let (mi, mj) = (basis[i].poly.lm().unwrap(), basis[j].poly.lm().unwrap());
        let l = mi.lcm(mj);
        if l == mi.mul(mj) {
            continue;
        }
        let ci = basis[i].poly.lc().unwrap().recip();
        let cj = -basis[j].poly.lc().unwrap().recip();
        let (ui, uj) = (l.checked_div(mi).unwrap(), l.checked_div(mj).unwrap());
        let s = ctx.add(
            &ctx.mul_term(&ci, &ui, &basis[i].poly),
            &ctx.mul_term(&cj, &uj, &basis[j].poly),
        );
        let refs: Vec<&QPoly> = basis.iter().map(|t| &t.poly).collect();
        let (r, q) = divide(ctx, &refs, &s);
        if r.is_zero() {
            continue;
        }
        let mut parts = vec![
            (ctx.monomial(ci, ui), basis[i].cofactors.as_slice()),
            (ctx.monomial(cj, uj), basis[j].cofactors.as_slice()),
        ];
        for (k, qk) in q.iter().enumerate().filter(|(_, q)| !q.is_zero()) {
            parts.push((ctx.neg(qk), basis[k].cofactors.as_slice()));
        }
        let cofactors = combine(ctx, &parts, width);
        let n = basis.len();
        basis.push(Tracked { poly: r, cofactors });
        pairs.extend((0..n).map(|i| (i, n)));
    }
    basis
}

impl Ring for MultiPolyRing {
    type Elem = QPoly;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::multivariate(self.ctx.vars().iter().cloned())
    }

    fn zero(&self) -> QPoly {
        QPoly::zero()
    }

    fn one(&self) -> QPoly {
        self.ctx.one()
    }

    fn is_zero(&self, a: &QPoly) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &QPoly, b: &QPoly) -> QPoly {
        self.ctx.add(a, b)
    }

    fn sub(&self, a: &QPoly, b: &QPoly) -> QPoly {
        self.ctx.sub(a, b)
    }

    fn mul(&self, a: &QPoly, b: &QPoly) -> QPoly {
        self.ctx.mul(a, b)
    }

    fn neg(&self, a: &QPoly) -> QPoly {
        self.ctx.neg(a)
    }

    fn from_int(&self, n: &BigInt) -> QPoly {
        self.ctx.constant(BigRational::from_integer(n.clone()))
    }

    fn from_rational(&self, q: &BigRational) -> Option<QPoly> {
        Some(self.ctx.constant(q.clone()))
    }

    fn aux_variable(&self, name: &str) -> Option<QPoly> {
        self.ctx.vars().iter().position(|v| v == name).map(|i| self.ctx.var(i))
    }

    fn lin_decomp(&self, gens: &[QPoly], k: &QPoly) -> Result<Option<Vec<QPoly>>, RingError> {
        let positions = nonzero_positions(self, gens);
        if positions.is_empty() {
            return Ok(k.is_zero().then(|| vec![QPoly::zero(); gens.len()]));
        }
        let nz: Vec<QPoly> = positions.iter().map(|&p| gens[p].clone()).collect();
        let basis = tracked_groebner(&self.ctx, &nz);
        let refs: Vec<&QPoly> = basis.iter().map(|t| &t.poly).collect();
        let (r, q) = divide(&self.ctx, &refs, k);
        if !r.is_zero() {
            return Ok(None);
        }
        let parts: Vec<(QPoly, &[QPoly])> = q
            .into_iter()
            .zip(&basis)
            .filter(|(q, _)| !q.is_zero())
            .map(|(q, t)| (q, t.cofactors.as_slice()))
            .collect();
        let coeffs = combine(&self.ctx, &parts, nz.len());
        Ok(Some(scatter(self, gens.len(), &positions, coeffs)))
    }

    /// `I : ⟨k⟩ = (1/k)·(I ∩ ⟨k⟩)`, with the intersection obtained by
    /// eliminating a fresh variable `w` from `w·I + (1 − w)·⟨k⟩`.
    fn sat_ideal(&self, gens: &[QPoly], k: &QPoly) -> Result<Vec<QPoly>, RingError> {
        if k.is_zero() {
            return Err(RingError::ZeroInput("sat_ideal"));
        }
        let positions = nonzero_positions(self, gens);
        if positions.is_empty() {
            return Ok(Vec::new());
        }
        let n = self.ctx.nvars();
        let mut names = vec!["__w".to_string()];
        names.extend(self.ctx.vars().iter().cloned());
        let big = PolyRing::new(Rationals, names, MonomialOrder::Lex);
        let lift = |p: &QPoly| {
            big.from_terms(
                p.terms()
                    .iter()
                    .map(|t| {
                        let mut e = vec![0];
                        e.extend_from_slice(t.mono.exponents());
                        Term::new(t.coeff.clone(), Monomial::new(e))
                    })
                    .collect(),
            )
        };
        let w = big.var(0);
        let one_minus_w = big.sub(&big.one(), &w);
        let mut system: Vec<QPoly> =
            positions.iter().map(|&p| big.mul(&w, &lift(&gens[p]))).collect();
        system.push(big.mul(&one_minus_w, &lift(k)));
        let gb = tracked_groebner(&big, &system);
        let mut out: Vec<QPoly> = Vec::new();
        for t in gb.iter().filter(|t| t.poly.terms().iter().all(|t| t.mono.exponents()[0] == 0)) {
            let h = self.ctx.from_terms(
                t.poly
                    .terms()
                    .iter()
                    .map(|t| Term::new(t.coeff.clone(), Monomial::new(t.mono.exponents()[1..=n].to_vec())))
                    .collect(),
            );
            let (r, q) = divide(&self.ctx, &[k], &h);
            debug_assert!(r.is_zero(), "elements of I ∩ ⟨k⟩ are multiples of k");
            let (_, c) = self.canonical_associate(&q[0])?;
            out.push(c);
        }
        // The quotients form a Gröbner basis of the colon ideal; keep a minimal one.
        let mut minimal: Vec<QPoly> = Vec::new();
        for (i, p) in out.iter().enumerate() {
            let lm = p.lm().unwrap();
            let redundant = out.iter().enumerate().any(|(j, q)| {
                j != i && q.lm().unwrap().divides(lm) && (q.lm() != p.lm() || j < i)
            });
            if !redundant && !minimal.contains(p) {
                minimal.push(p.clone());
            }
        }
        Ok(minimal)
    }

    fn canonical_associate(&self, k: &QPoly) -> Result<(QPoly, QPoly), RingError> {
        let lc = k.lc().ok_or(RingError::ZeroInput("canonical_associate"))?;
        let inv = lc.recip();
        Ok((self.ctx.constant(inv.clone()), self.ctx.scale(&inv, k)))
    }

    fn gcd_lcm(&self, _a: &QPoly, _b: &QPoly) -> Result<(QPoly, QPoly), RingError> {
        Err(RingError::Unsupported { op: "gcd_lcm", ring: "multivariate polynomial" })
    }

    fn is_one(&self, a: &QPoly) -> bool {
        a.len() == 1 && a.lm().unwrap().is_one() && a.lc().unwrap().is_one()
    }

    fn display(&self, a: &QPoly) -> String {
        self.ctx.format(a)
    }

    fn is_compound(&self, a: &QPoly) -> bool {
        a.len() > 1
    }

    fn summands(&self, a: &QPoly) -> Vec<CoeffSummand> {
        a.terms()
            .iter()
            .map(|t| CoeffSummand {
                scalar: t.coeff.clone(),
                aux: if t.mono.is_one() { String::new() } else { self.ctx.format_mono(&t.mono) },
            })
            .collect()
    }
}
