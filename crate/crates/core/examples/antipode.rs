// The antipode χ against the inverse ν, and surjectivity of χ degree by degree.

use graded_cogroups::algebra::Word;
use graded_cogroups::coalgebra::trivial_coalgebra;
use graded_cogroups::cogroup::tcm;
use graded_cogroups::convolution::{
    antipode, check_hopf_antipode, convolution_inverse, indecomposables_check, is_antipode_surjective,
    is_graded_antihomomorphism, GradedMap,
};
use graded_cogroups::graded::GradedModule;
use graded_cogroups::ring::RingSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // two even generators over ℤ: χ reverses words, ν does not
    let m = GradedModule::from_triples(RingSpec::Integers, &[("x", 2, 0), ("y", 2, 0)])?;
    let a = tcm(&trivial_coalgebra(&m), 8)?;
    let chi = antipode(&a);
    for w in [Word(vec![0, 1]), Word(vec![0, 1, 1])] {
        let name = a.algebra().format_word(&w);
        println!("χ({name}) = {}, ν({name}) = {}", chi.evaluate(&w), a.inverse().apply_word(&w));
    }
    assert_eq!(chi.evaluate(&Word(vec![0, 1])).to_string(), "y*x");

    println!("{}", check_hopf_antipode(&a, &chi));
    let generic = convolution_inverse(&a, &GradedMap::identity(&a))?;
    assert_eq!(generic.table(), chi.table());
    println!("χ is an antihomomorphism: {}", is_graded_antihomomorphism(&chi, &a).0);
    println!("χ = -1 on indecomposables: {}", indecomposables_check(&a, &chi).0);

    // an odd generator of order 4: χ(x^2) = -x^2 = 3x^2 while ν(x^2) = x^2
    let odd = GradedModule::from_triples(RingSpec::IntegersMod(4), &[("x", 3, 0)])?;
    let b = tcm(&trivial_coalgebra(&odd), 9)?;
    let chi_b = antipode(&b);
    let x2 = Word(vec![0, 0]);
    println!("over Z/4: χ(x^2) = {}, ν(x^2) = {}", chi_b.evaluate(&x2), b.inverse().apply_word(&x2));
    assert_ne!(chi_b.evaluate(&x2), b.inverse().apply_word(&x2));

    let onto = is_antipode_surjective(&b, &chi_b);
    println!("χ surjective in degrees 0..=9: {onto:?}");
    assert!(onto.iter().all(|&s| s));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("antipode example");
}
