// The cogroup on a single even generator: Δ(X^k) is binomial and ν(X) = -X.

use graded_cogroups::algebra::Word;
use graded_cogroups::coalgebra::trivial_coalgebra;
use graded_cogroups::cogroup::tcm;
use graded_cogroups::graded::GradedModule;
use graded_cogroups::ring::RingSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = GradedModule::from_triples(RingSpec::Rationals, &[("X", 2, 0)])?;
    let a = tcm(&trivial_coalgebra(&m), 10)?;
    let sq = a.square();

    for k in 1..=4 {
        let w = Word(vec![0; k]);
        println!("Δ({}) = {}", a.algebra().format_word(&w), sq.format(&a.coproduct(&w)));
    }
    let d3 = a.coproduct(&Word(vec![0; 3]));
    let mid = d3.terms().get(&vec![Word(vec![0]), Word(vec![0, 0])]).ok_or("missing X⊗X^2")?;
    assert_eq!(mid.to_string(), "3");

    println!("Φ(X) = {}", a.comultiplication().image_of_generator(0));
    println!("ν(X) = {}", a.inverse().image_of_generator(0));
    println!("ν(X^3) = {}", a.inverse().apply_word(&Word(vec![0; 3])));
    assert_eq!(a.inverse().image_of_generator(0).to_string(), "-X");

    let report = a.check_axioms(10);
    println!("{report}");
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("polynomial cogroup example");
}
