// Computes a distribution twice: by inclusion-exclusion over the members
// of a family, where only partition counts p(n − weight) are needed, and
// by enumerating every partition.

use partition_sieve::catalog::Builtin;
use partition_sieve::distribution::distribution_bruteforce;
use partition_sieve::families::Side;
use partition_sieve::sieve::{sieve_distribution, DEFAULT_SUBSET_CAP};
use partition_sieve::statistics::Statistic;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for builtin in [Builtin::Euler, Builtin::Squares, Builtin::RemmelConsecutive] {
        let pair = builtin.pair();
        for side in [Side::X, Side::Y] {
            let fam = pair.side(side);
            let n = 20;
            let sieve = sieve_distribution(fam, n, DEFAULT_SUBSET_CAP);
            let table = sieve.table.ok_or("subset cap reached")?;
            let brute = distribution_bruteforce(&Statistic::from_family(fam.clone()), n);
            let n_t: Vec<String> = sieve
                .superset_counts
                .iter()
                .map(|c| c.to_string())
                .collect();
            println!(
                "{:<22} n={n} N_t=[{}] subsets={} agree={}",
                fam.name(),
                n_t.join(", "),
                sieve.subsets_explored,
                table == brute
            );
            if table != brute {
                return Err(format!("{} disagrees with enumeration", fam.name()).into());
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
