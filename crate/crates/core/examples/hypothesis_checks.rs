// Checks the disjoint-family condition and the weaker union-weight
// condition on every catalog pair. The consecutive pair fails the first
// (its members overlap) but passes the second.

use partition_sieve::catalog::{Builtin, DoublingSet};
use partition_sieve::sieve::{check_theorem_b, check_theorem_c, Outcome, DEFAULT_SUBSET_CAP};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pairs = [
        Builtin::Euler,
        Builtin::Squares,
        Builtin::Mod6,
        Builtin::glaisher(3)?,
        Builtin::Andrews(DoublingSet::new([1, 2, 4, 8, 16], 24)?),
        Builtin::RemmelConsecutive,
    ];
    for b in pairs {
        let pair = b.pair();
        let disjoint = check_theorem_b(&pair, 24);
        let union = check_theorem_c(&pair, 24, DEFAULT_SUBSET_CAP);
        let show = |o: &Outcome| match o {
            Outcome::Holds => "holds".to_string(),
            Outcome::Violated(w) => format!("violated by {w:?}"),
            Outcome::Inconclusive => "inconclusive".to_string(),
        };
        println!("{:<20} disjoint: {}", pair.name(), show(&disjoint.outcome));
        println!("{:<20} union:    {}", "", show(&union.outcome));
        if let Some(w) = disjoint.witness() {
            assert!(w.revalidate(&pair));
        }
        if !union.holds() {
            return Err(format!("{} fails the union-weight condition", pair.name()).into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
