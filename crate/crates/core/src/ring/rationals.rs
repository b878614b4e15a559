use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::euclid::{self, EuclideanDomain};
use super::{CoeffSummand, Ring, RingDescriptor};
use crate::error::RingError;

/// The field ℚ.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::rationals()
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn from_int(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }

    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }

    fn lin_decomp(
        &self,
        gens: &[BigRational],
        k: &BigRational,
    ) -> Result<Option<Vec<BigRational>>, RingError> {
        Ok(euclid::lin_decomp(self, gens, k))
    }

    fn sat_ideal(&self, gens: &[BigRational], k: &BigRational) -> Result<Vec<BigRational>, RingError> {
        euclid::sat_ideal(self, gens, k)
    }

    fn canonical_associate(&self, k: &BigRational) -> Result<(BigRational, BigRational), RingError> {
        if k.is_zero() {
            return Err(RingError::ZeroInput("canonical_associate"));
        }
        Ok(self.normalize(k))
    }

    fn gcd_lcm(&self, a: &BigRational, b: &BigRational) -> Result<(BigRational, BigRational), RingError> {
        euclid::gcd_lcm(self, a, b)
    }

    fn divides(&self, a: &BigRational, b: &BigRational) -> Result<Option<BigRational>, RingError> {
        if a.is_zero() {
            return Ok(b.is_zero().then(BigRational::zero));
        }
        Ok(Some(b / a))
    }

    fn display(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn summands(&self, a: &BigRational) -> Vec<CoeffSummand> {
        vec![CoeffSummand { scalar: a.clone(), aux: String::new() }]
    }
}

impl EuclideanDomain for Rationals {
    fn div_rem(&self, a: &BigRational, b: &BigRational) -> (BigRational, BigRational) {
        (a / b, BigRational::zero())
    }

    fn normalize(&self, a: &BigRational) -> (BigRational, BigRational) {
        (a.recip(), BigRational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn field_operations() {
        let r = Rationals;
        assert_eq!(r.canonical_associate(&q(7, 1)).unwrap(), (q(1, 7), q(1, 1)));
        assert_eq!(r.sat_ideal(&[q(4, 1)], &q(6, 1)).unwrap(), vec![q(1, 1)]);
        assert_eq!(r.sat_ideal(&[], &q(6, 1)).unwrap(), Vec::<BigRational>::new());
        assert_eq!(r.lin_decomp(&[q(2, 1), q(3, 1)], &q(1, 2)).unwrap(), Some(vec![q(0, 1), q(1, 6)]));
        assert_eq!(r.lin_decomp(&[q(0, 1)], &q(1, 2)).unwrap(), None);
        assert_eq!(r.gcd_lcm(&q(4, 1), &q(6, 1)).unwrap(), (q(1, 1), q(1, 1)));
    }
}
