#![allow(dead_code)]

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sigmoeller::poly::{Monomial, MonomialOrder, Poly, PolyRing, Term};
use sigmoeller::ring::Ring;

/// A random system: variable count, order and generators as exponent/coefficient lists.
#[derive(Debug, Clone)]
pub struct RandomSystem {
    pub nvars: usize,
    pub order: MonomialOrder,
    pub gens: Vec<Vec<(Vec<u32>, i64)>>,
}

impl RandomSystem {
    pub fn vars(&self) -> Vec<String> {
        ["x", "y", "z"][..self.nvars].iter().map(|s| s.to_string()).collect()
    }

    pub fn polys<R: Ring>(&self, ctx: &PolyRing<R>) -> Vec<Poly<R::Elem>> {
        let ring = ctx.ring();
        self.gens
            .iter()
            .map(|g| {
                let terms = g
                    .iter()
                    .map(|(e, c)| Term::new(ring.from_int(&BigInt::from(*c)), Monomial::new(e.clone())))
                    .collect();
                ctx.from_terms(terms)
            })
            .collect()
    }
}

fn exponents(nvars: usize, max_deg: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..nvars {
        out = out
            .into_iter()
            .flat_map(|e: Vec<u32>| {
                let used: u32 = e.iter().sum();
                (0..=max_deg - used).map(move |k| {
                    let mut f = e.clone();
                    f.push(k);
                    f
                })
            })
            .collect();
    }
    out
}

/// Grevlex systems with 2–3 variables, total degree ≤ 3, 2–3 generators of 1–4
/// terms, coefficients in [−9, 9] \ {0}; every generator is nonconstant.
pub fn random_systems(seed: u64, count: usize) -> Vec<RandomSystem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let nvars = rng.gen_range(2..=3);
        let pool = exponents(nvars, 3);
        let ngens = rng.gen_range(2..=3);
        let gens: Vec<Vec<(Vec<u32>, i64)>> = (0..ngens)
            .map(|_| {
                let nterms = rng.gen_range(1..=4);
                pool.choose_multiple(&mut rng, nterms)
                    .map(|e| {
                        let mut c = 0;
                        while c == 0 {
                            c = rng.gen_range(-9..=9);
                        }
                        (e.clone(), c)
                    })
                    .collect()
            })
            .collect();
        let nonconstant = gens.iter().all(|g| g.iter().any(|(e, _)| e.iter().any(|&k| k > 0)));
        if nonconstant {
            out.push(RandomSystem { nvars, order: MonomialOrder::GrevLex, gens });
        }
    }
    out
}
