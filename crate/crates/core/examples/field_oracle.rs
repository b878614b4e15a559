//! Over ℚ a weak Gröbner basis is an ordinary one: the leading-monomial
//! ideal of Möller's output matches Buchberger's.

use sigmoeller::oracle::{buchberger, leading_monomial_ideal};
use sigmoeller::poly::{MonomialOrder, PolyRing};
use sigmoeller::ring::Rationals;
use sigmoeller::weak::{moeller_weak, WeakConfig};

fn main() {
    let ctx = PolyRing::new(Rationals, ["x", "y", "z"], MonomialOrder::GrevLex);
    let f: Vec<_> = ["x^2 + y*z - 2", "x*y - z^2 + 1", "y^2 - x + z"]
        .iter()
        .map(|s| ctx.parse(s).unwrap())
        .collect();
    let weak = moeller_weak(&ctx, &f, &WeakConfig::default()).unwrap();
    let oracle = buchberger(&ctx, &f);
    let show = |b: &[_]| {
        leading_monomial_ideal(b).iter().map(|m| ctx.format_mono(m)).collect::<Vec<_>>().join(", ")
    };
    println!("moeller:    {} elements, LM ideal <{}>", weak.basis.len(), show(&weak.basis));
    println!("buchberger: {} elements, LM ideal <{}>", oracle.len(), show(&oracle));
}
