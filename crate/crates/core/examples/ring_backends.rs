//! LinDecomp and SatIdeal on each coefficient backend.

use num_bigint::BigInt;
use sigmoeller::ring::{Integers, Rationals, Ring, UniPoly, UniPolyRing};

fn main() {
    let z = Integers;
    let n = |v: i64| BigInt::from(v);
    println!("Z: LinDecomp((4), 12) = {:?}", z.lin_decomp(&[n(4)], &n(12)).unwrap());
    println!("Z: LinDecomp((6, 10, 15), 1) = {:?}", z.lin_decomp(&[n(6), n(10), n(15)], &n(1)).unwrap());
    println!("Z: LinDecomp((4, 6), 3) = {:?}", z.lin_decomp(&[n(4), n(6)], &n(3)).unwrap());
    println!("Z: SatIdeal((4), 6) = {:?}", z.sat_ideal(&[n(4)], &n(6)).unwrap());

    let q = Rationals;
    let half = q.from_i64(1) / q.from_i64(2);
    let l = q.lin_decomp(&[half], &q.from_i64(3)).unwrap().unwrap();
    println!("Q: LinDecomp((1/2), 3) = ({})", q.display(&l[0]));

    let t = UniPolyRing::new("t");
    let a = UniPoly::from_ints(&[-1, 0, 1]); // t^2 - 1
    let b = UniPoly::from_ints(&[1, 1]); // t + 1
    let show = |v: &[UniPoly]| v.iter().map(|p| t.display(p)).collect::<Vec<_>>().join(", ");
    let l = t.lin_decomp(std::slice::from_ref(&a), &b).unwrap();
    println!("Q[t]: t + 1 in (t^2 - 1)? {}", l.is_some());
    println!("Q[t]: SatIdeal((t^2 - 1), t + 1) = ({})", show(&t.sat_ideal(&[a], &b).unwrap()));
}
