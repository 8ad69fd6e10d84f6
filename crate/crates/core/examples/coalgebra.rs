// Connected graded coalgebras given by structure constants.

use graded_cogroups::coalgebra::{trivial_coalgebra, CoalgebraPresentation};
use graded_cogroups::cogroup::tcm;
use graded_cogroups::graded::GradedModule;
use graded_cogroups::ring::RingSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = GradedModule::from_triples(RingSpec::Rationals, &[("y", 2, 0), ("z", 2, 0), ("x", 4, 0)])?;

    // Δ̄x = y⊗z + z⊗y is coassociative and cocommutative
    let sym = CoalgebraPresentation::with_coproduct(m.clone(), &[("x", 1, "y", "z"), ("x", 1, "z", "y")])?;
    let report = sym.check_axioms(6);
    println!("{report}");
    assert!(report.passed());
    println!("cocommutative: {}", sym.is_cocommutative());
    assert!(sym.is_cocommutative());

    let skew = CoalgebraPresentation::with_coproduct(m.clone(), &[("x", 1, "y", "z")])?;
    println!("y⊗z alone cocommutative: {}", skew.is_cocommutative());
    assert!(!skew.is_cocommutative());

    // Δ̄b = a⊗a, Δ̄c = a⊗b is not coassociative: (1⊗Δ̄)Δ̄c = a⊗a⊗a but (Δ̄⊗1)Δ̄c = 0
    let m3 = GradedModule::from_triples(RingSpec::Rationals, &[("a", 1, 0), ("b", 2, 0), ("c", 3, 0)])?;
    let bad = CoalgebraPresentation::with_coproduct(m3, &[("b", 1, "a", "a"), ("c", 1, "a", "b")])?;
    let report = bad.check_axioms(3);
    println!("{report}");
    assert!(!report.passed());
    match tcm(&bad, 3) {
        Ok(_) => return Err("non-coassociative input accepted".into()),
        Err(e) => println!("cogroup construction refused: {e}"),
    }

    let trivial = trivial_coalgebra(&m);
    println!("trivial coalgebra is trivial: {}", trivial.is_trivial());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("coalgebra example");
}
