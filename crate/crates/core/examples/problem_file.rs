//! Parse a problem file, run it with verification and print the JSON report.

use sigmoeller::problem::ProblemFile;
use sigmoeller::run::{run, RunOptions};
use sigmoeller::sigmoeller::Criteria;

const TEXT: &str = "\
# worked example
ring: int
vars: x, y
order: lex
3*x*y + x + y^2
x^2
";

fn main() {
    let problem = ProblemFile::parse(TEXT).unwrap();
    print!("{problem}");
    let opts = RunOptions { criteria: Criteria::all(), verify: true, trace: true, ..RunOptions::default() };
    let report = run(&problem, &opts).unwrap();
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
