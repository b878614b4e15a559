//! ℚ[s, t] coefficients are not a PID, so runs over them are gated behind
//! the experimental flag.

use sigmoeller::problem::ProblemFile;
use sigmoeller::run::{run, RunOptions};

fn main() {
    let problem = ProblemFile::parse("ring: multipoly(s,t)\nvars: x\norder: lex\ns*x - t\nt*x\n").unwrap();
    match run(&problem, &RunOptions::default()) {
        Ok(_) => println!("unexpected: ran without the flag"),
        Err(e) => println!("without the flag: {e}"),
    }
    let report = run(&problem, &RunOptions { experimental_ufd: true, verify: true, ..RunOptions::default() }).unwrap();
    for g in &report.basis {
        println!("{}   [{}]", g.poly, g.signature.as_deref().unwrap_or(""));
    }
    println!("verified: {:?}", report.verified);
}
