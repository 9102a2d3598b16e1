// Even part sizes and repeated part sizes have the same distribution over
// the partitions of every n. The j = 0 column is Euler's odd-parts /
// distinct-parts identity.

use partition_sieve::catalog::Builtin;
use partition_sieve::distribution::{compare, distribution_bruteforce};
use partition_sieve::statistics::Statistic;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pair = Builtin::Euler.pair();
    let even = Statistic::from_family(pair.f().clone());
    let repeated = Statistic::from_family(pair.g().clone());

    let report = compare(&even, &repeated, 1, 25);
    println!(
        "{} vs {} for n in 1..=25: identical = {}",
        even,
        repeated,
        report.all_identical()
    );
    if !report.all_identical() {
        return Err("euler pair diverged".into());
    }

    let table = distribution_bruteforce(&repeated, 10);
    print!("{}", table.to_text());
    let (num, den) = table.probability(0);
    println!("Prob_10(Y = 0) = {num}/{den}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
