//! Weak top-reduction with several reducers at once, and a check that the
//! inputs of a system lie in the ideal of its weak Gröbner basis.

use sigmoeller::poly::{MonomialOrder, PolyRing};
use sigmoeller::ring::Integers;
use sigmoeller::weak::{is_weak_gb, moeller_weak, reduces_to_zero, weak_reduce, WeakConfig};

fn main() {
    let ctx = PolyRing::new(Integers, ["x", "y"], MonomialOrder::Lex);
    let basis: Vec<_> = ["4*x*y + x", "3*x^2 + y", "5*x", "4*y^2 + y", "5*y"]
        .iter()
        .map(|s| ctx.parse(s).unwrap())
        .collect();
    let f = ctx.parse("2*x*y + 13*y - 5").unwrap();
    // 2 = 2·5 − 2·4, so 2xy is cancelled by 2y·(5x) − 2·(4xy + x).
    println!("{} -> {}", ctx.format(&f), ctx.format(&weak_reduce(&ctx, &f, &basis).unwrap()));

    let f = vec![ctx.parse("3*x*y + x + y^2").unwrap(), ctx.parse("x^2").unwrap()];
    let out = moeller_weak(&ctx, &f, &WeakConfig::default()).unwrap();
    for (i, g) in out.basis.iter().enumerate() {
        println!("g{} = {}", i + 1, ctx.format(g));
    }
    println!("{:?}", out.stats);
    println!("weak GB: {}", is_weak_gb(&ctx, &out.basis).unwrap());
    println!("inputs reduce to zero: {}", reduces_to_zero(&ctx, &f, &out.basis).unwrap());
}
