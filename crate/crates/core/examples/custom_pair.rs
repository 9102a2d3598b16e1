// Describes a pair of families in JSON, validates it, and compares the
// statistics it induces. Here F_t = {3t} and G_t = {t, t, t}: multiples of
// 3 against sizes occurring at least three times.

use partition_sieve::distribution::compare;
use partition_sieve::pairfile::{parse_family_pair, render_family_pair};
use partition_sieve::sieve::check_theorem_b;
use partition_sieve::statistics::Statistic;

const DOC: &str = r#"{
  "name": "triples",
  "tmin": 1,
  "F": [ { "entries": [ { "size": [0, 3, 0], "mult": [0, 1] } ] } ],
  "G": [ { "entries": [ { "size": [0, 1, 0], "mult": [0, 3] } ] } ]
}"#;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pair = parse_family_pair(DOC)?;
    println!(
        "disjoint-family condition up to 30: {}",
        check_theorem_b(&pair, 30).holds()
    );

    let x = Statistic::from_family(pair.f().clone());
    let y = Statistic::from_family(pair.g().clone());
    println!(
        "identical for n <= 20: {}",
        compare(&x, &y, 1, 20).all_identical()
    );

    // Invalid documents are rejected with a location.
    let bad = DOC.replace("[0, 3, 0]", "[0, 3, -3]");
    match parse_family_pair(&bad) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => return Err("size 0 at t=1 should be rejected".into()),
    }
    println!("{}", render_family_pair(&pair));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
