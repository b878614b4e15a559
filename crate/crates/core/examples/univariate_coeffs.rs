//! SigMöller with coefficients in ℚ[t].

use sigmoeller::poly::{MonomialOrder, PolyRing};
use sigmoeller::ring::UniPolyRing;
use sigmoeller::sig::format_signature;
use sigmoeller::sigmoeller::{sig_moeller, Criteria, SigConfig};
use sigmoeller::weak::is_weak_gb;

fn main() {
    let ctx = PolyRing::new(UniPolyRing::new("t"), ["x", "y"], MonomialOrder::Lex);
    let f: Vec<_> = ["t^2*x*y - x*y + y", "t*x^2 + x^2 - t*y"].iter().map(|s| ctx.parse(s).unwrap()).collect();
    let out = sig_moeller(&ctx, &f, &SigConfig::with_criteria(Criteria::all()), None).unwrap();
    for (i, g) in out.basis.iter().enumerate() {
        println!("g{} = {}   [{}]", i + 1, ctx.format(&g.value), format_signature(&ctx, &g.sig));
    }
    let values: Vec<_> = out.basis.iter().map(|g| g.value.clone()).collect();
    println!("{:?}\nweak GB: {}", out.stats, is_weak_gb(&ctx, &values).unwrap());
}
