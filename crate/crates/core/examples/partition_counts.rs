// Partition enumeration, exact p(n), and the containment count
// p(n − weight(M)).

use partition_sieve::{count_containing, count_partitions, enumerate_partitions, Multiset};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for p in enumerate_partitions(6) {
        println!("{p}");
    }
    for n in [10, 100, 1000] {
        println!("p({n}) = {}", count_partitions(n));
    }
    let pattern = Multiset::from_parts([2, 2, 3])?;
    let brute = enumerate_partitions(15)
        .filter(|p| p.parts().contains(&pattern))
        .count();
    println!(
        "partitions of 15 containing {pattern}: {} (enumerated {brute})",
        count_containing(15, &pattern)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
