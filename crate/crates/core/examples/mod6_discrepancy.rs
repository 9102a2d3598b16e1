// The weight-matched mod 6 families give identically distributed
// statistics. Reading Y as "multiples of 3, or repeated non-multiples of
// 3" does not: the two disagree already at n = 6.

use partition_sieve::catalog::Builtin;
use partition_sieve::distribution::{compare, Verdict};
use partition_sieve::statistics::{native, Statistic};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pair = Builtin::Mod6.pair();
    let x = Statistic::from_family(pair.f().clone());
    let y = Statistic::from_family(pair.g().clone());
    println!(
        "family form, n <= 30: identical = {}",
        compare(&x, &y, 1, 30).all_identical()
    );

    let prose = native("mod6_Y_prose", None, None)?;
    let report = compare(&x, &prose, 1, 10);
    let first = report.first_divergence().ok_or("expected a divergence")?;
    if let Verdict::Divergent {
        j,
        x_count,
        y_count,
    } = &first.verdict
    {
        println!(
            "prose form first differs at n={}, j={j}: {x_count} vs {y_count}",
            first.n
        );
    }
    print!("X:\n{}Y (prose):\n{}", first.x.to_text(), first.y.to_text());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
