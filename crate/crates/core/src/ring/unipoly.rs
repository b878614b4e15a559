use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::euclid::{self, EuclideanDomain};
use super::{CoeffSummand, Ring, RingDescriptor};
use crate::error::RingError;

/// Dense univariate polynomial over ℚ, coefficients from degree 0 upwards.
/// The coefficient vector never ends in a zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly(Vec<BigRational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.0.last()
    }

    fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.0.iter().map(|a| a * c).collect())
    }
}

/// The PID ℚ[t].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPolyRing {
    var: String,
}

impl UniPolyRing {
    pub fn new(var: impl Into<String>) -> Self {
        Self { var: var.into() }
    }

    pub fn var_name(&self) -> &str {
        &self.var
    }

    fn var_power(&self, e: usize) -> String {
        match e {
            0 => String::new(),
            1 => self.var.clone(),
            _ => format!("{}^{}", self.var, e),
        }
    }
}

impl Ring for UniPolyRing {
    type Elem = UniPoly;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::univariate(self.var.clone())
    }

    fn zero(&self) -> UniPoly {
        UniPoly::default()
    }

    fn one(&self) -> UniPoly {
        UniPoly::constant(BigRational::one())
    }

    fn is_zero(&self, a: &UniPoly) -> bool {
        a.0.is_empty()
    }

    fn add(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        let n = a.0.len().max(b.0.len());
        let zero = BigRational::zero();
        UniPoly::new(
            (0..n)
                .map(|i| a.0.get(i).unwrap_or(&zero) + b.0.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    fn sub(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        if a.0.is_empty() || b.0.is_empty() {
            return UniPoly::default();
        }
        let mut out = vec![BigRational::zero(); a.0.len() + b.0.len() - 1];
        for (i, x) in a.0.iter().enumerate() {
            for (j, y) in b.0.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        UniPoly::new(out)
    }

    fn neg(&self, a: &UniPoly) -> UniPoly {
        UniPoly(a.0.iter().map(|c| -c).collect())
    }

    fn from_int(&self, n: &BigInt) -> UniPoly {
        UniPoly::constant(BigRational::from_integer(n.clone()))
    }

    fn from_rational(&self, q: &BigRational) -> Option<UniPoly> {
        Some(UniPoly::constant(q.clone()))
    }

    fn aux_variable(&self, name: &str) -> Option<UniPoly> {
        (name == self.var).then(|| UniPoly::from_ints(&[0, 1]))
    }

    fn lin_decomp(&self, gens: &[UniPoly], k: &UniPoly) -> Result<Option<Vec<UniPoly>>, RingError> {
        Ok(euclid::lin_decomp(self, gens, k))
    }

    fn sat_ideal(&self, gens: &[UniPoly], k: &UniPoly) -> Result<Vec<UniPoly>, RingError> {
        euclid::sat_ideal(self, gens, k)
    }

    fn canonical_associate(&self, k: &UniPoly) -> Result<(UniPoly, UniPoly), RingError> {
        if k.0.is_empty() {
            return Err(RingError::ZeroInput("canonical_associate"));
        }
        Ok(self.normalize(k))
    }

    fn gcd_lcm(&self, a: &UniPoly, b: &UniPoly) -> Result<(UniPoly, UniPoly), RingError> {
        euclid::gcd_lcm(self, a, b)
    }

    fn display(&self, a: &UniPoly) -> String {
        if a.0.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in a.0.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()) {
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let power = self.var_power(e);
            match (abs.is_one(), power.is_empty()) {
                (_, true) => out.push_str(&abs.to_string()),
                (true, false) => out.push_str(&power),
                (false, false) => out.push_str(&format!("{abs}*{power}")),
            }
        }
        out
    }

    fn is_compound(&self, a: &UniPoly) -> bool {
        a.0.iter().filter(|c| !c.is_zero()).count() > 1
    }

    fn summands(&self, a: &UniPoly) -> Vec<CoeffSummand> {
        a.0.iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| CoeffSummand { scalar: c.clone(), aux: self.var_power(e) })
            .collect()
    }
}

impl EuclideanDomain for UniPolyRing {
    fn div_rem(&self, a: &UniPoly, b: &UniPoly) -> (UniPoly, UniPoly) {
        let db = b.degree().expect("division by the zero polynomial");
        let lb = b.leading().unwrap().clone();
        let mut rem = a.0.clone();
        let mut quot = vec![BigRational::zero(); a.0.len().saturating_sub(db)];
        while rem.len() > db {
            let top = rem.len() - 1;
            let c = &rem[top] / &lb;
            if !c.is_zero() {
                let shift = top - db;
                for (i, bc) in b.0.iter().enumerate() {
                    rem[shift + i] -= &c * bc;
                }
                quot[shift] = c;
            }
            rem.pop();
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    fn normalize(&self, a: &UniPoly) -> (UniPoly, UniPoly) {
        let inv = a.leading().unwrap().recip();
        (UniPoly::constant(inv.clone()), a.scale(&inv))
    }
}
