//! SigMöller on f1 = 3xy + x + y², f2 = x² over ℤ[x, y] with lex x > y,
//! printing the trace, then the same run with the F5 criterion.

use sigmoeller::poly::{MonomialOrder, PolyRing};
use sigmoeller::ring::Integers;
use sigmoeller::sig::format_signature;
use sigmoeller::sigmoeller::{sig_moeller, Criteria, SigConfig};

fn main() {
    let ctx = PolyRing::new(Integers, ["x", "y"], MonomialOrder::Lex);
    let f = vec![ctx.parse("3*x*y + x + y^2").unwrap(), ctx.parse("x^2").unwrap()];

    for criteria in [Criteria::none(), Criteria { f5: true, ..Criteria::none() }] {
        println!("== criteria: {criteria}");
        let mut trace: Vec<String> = Vec::new();
        let out = sig_moeller(&ctx, &f, &SigConfig::with_criteria(criteria), Some(&mut trace)).unwrap();
        for line in &trace {
            println!("  {line}");
        }
        for (i, g) in out.basis.iter().enumerate() {
            println!("g{} = {}   [{}]", i + 1, ctx.format(&g.value), format_signature(&ctx, &g.sig));
        }
        println!("{:?}\n", out.stats);
    }
}
