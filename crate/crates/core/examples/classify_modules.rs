// When the inverse equals the antipode: comparing the algebraic predicates
// with the module-level ones.

use graded_cogroups::classify::{classify_module, default_truncation};
use graded_cogroups::graded::GradedModule;
use graded_cogroups::ring::RingSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    type Case<'a> = (&'a str, RingSpec, &'a [(&'a str, usize, u64)]);
    let cases: [Case; 6] = [
        ("Q, one even generator", RingSpec::Rationals, &[("X", 4, 0)]),
        ("Q, one odd generator", RingSpec::Rationals, &[("X", 3, 0)]),
        ("F2, one odd generator", RingSpec::PrimeField(2), &[("x", 3, 0)]),
        ("Z, coprime torsion", RingSpec::Integers, &[("x", 2, 3), ("y", 4, 5)]),
        ("Z, shared 3-torsion", RingSpec::Integers, &[("x", 2, 3), ("y", 4, 6)]),
        ("Z/4, odd generator", RingSpec::IntegersMod(4), &[("x", 3, 0)]),
    ];
    for (label, ring, gens) in cases {
        let m = GradedModule::from_triples(ring, gens)?;
        let report = classify_module(&m, default_truncation(&m))?;
        println!("{label} ({m})\n{report}\n");
        assert!(report.consistent);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("classification example");
}
