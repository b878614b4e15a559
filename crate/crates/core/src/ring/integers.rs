use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::euclid::{self, EuclideanDomain};
use super::{CoeffSummand, Ring, RingDescriptor};
use crate::error::RingError;

/// The ring ℤ of arbitrary-precision integers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::integers()
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigInt) -> bool {
        a.is_one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }

    fn from_rational(&self, q: &BigRational) -> Option<BigInt> {
        q.is_integer().then(|| q.to_integer())
    }

    fn lin_decomp(&self, gens: &[BigInt], k: &BigInt) -> Result<Option<Vec<BigInt>>, RingError> {
        Ok(euclid::lin_decomp(self, gens, k))
    }

    fn sat_ideal(&self, gens: &[BigInt], k: &BigInt) -> Result<Vec<BigInt>, RingError> {
        euclid::sat_ideal(self, gens, k)
    }

    fn canonical_associate(&self, k: &BigInt) -> Result<(BigInt, BigInt), RingError> {
        if k.is_zero() {
            return Err(RingError::ZeroInput("canonical_associate"));
        }
        Ok(self.normalize(k))
    }

    fn gcd_lcm(&self, a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt), RingError> {
        euclid::gcd_lcm(self, a, b)
    }

    fn divides(&self, a: &BigInt, b: &BigInt) -> Result<Option<BigInt>, RingError> {
        if a.is_zero() {
            return Ok(b.is_zero().then(BigInt::zero));
        }
        let (q, r) = b.div_rem(a);
        Ok(r.is_zero().then_some(q))
    }

    fn display(&self, a: &BigInt) -> String {
        a.to_string()
    }

    fn summands(&self, a: &BigInt) -> Vec<CoeffSummand> {
        vec![CoeffSummand { scalar: BigRational::from_integer(a.clone()), aux: String::new() }]
    }
}

impl EuclideanDomain for Integers {
    /// Truncating division, matching `BigInt`'s `/` and `%`.
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        (a / b, a % b)
    }

    fn normalize(&self, a: &BigInt) -> (BigInt, BigInt) {
        if a.is_negative() {
            (-BigInt::one(), -a)
        } else {
            (BigInt::one(), a.clone())
        }
    }
}
