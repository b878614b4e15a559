//! Statistics for the bundled Katsura systems over ℤ under grevlex, for
//! Möller's weak algorithm and for SigMöller with and without criteria.
//!
//! `cargo run --release --example katsura_tables [katsura2|katsura3]`

use sigmoeller::katsura::bundled_benchmark;
use sigmoeller::run::{run, Algorithm, RunOptions};
use sigmoeller::sigmoeller::Criteria;

fn main() {
    let names: Vec<String> = match std::env::args().nth(1) {
        Some(n) => vec![n],
        None => vec!["katsura2".into(), "katsura3".into()],
    };
    for name in names {
        let problem = bundled_benchmark(&name).expect("bundled benchmark");
        println!("{name}");
        println!("  {:<24} {:>10} {:>8} {:>8} {:>6} {:>10}", "run", "sat. sets", "S-pols", "to zero", "basis", "ms");
        let runs = [
            ("sigmoeller, all", Algorithm::SigMoeller, Criteria::all()),
            ("sigmoeller, f5", Algorithm::SigMoeller, Criteria { f5: true, ..Criteria::none() }),
            ("sigmoeller, none", Algorithm::SigMoeller, Criteria::none()),
            ("moeller", Algorithm::Moeller, Criteria::none()),
        ];
        for (label, algorithm, criteria) in runs {
            if name == "katsura3" && algorithm == Algorithm::Moeller {
                println!("  {label:<24} skipped (exponential saturated-set growth)");
                continue;
            }
            let opts = RunOptions { algorithm, criteria, ..RunOptions::default() };
            match run(&problem, &opts) {
                Ok(r) => println!(
                    "  {:<24} {:>10} {:>8} {:>8} {:>6} {:>10.1}",
                    label,
                    r.stats.saturated_sets_considered,
                    r.stats.s_polynomials_reduced,
                    r.stats.reductions_to_zero,
                    r.stats.basis_size,
                    r.wall_time_ms
                ),
                Err(e) => println!("  {label:<24} failed: {e}"),
            }
        }
    }
}
