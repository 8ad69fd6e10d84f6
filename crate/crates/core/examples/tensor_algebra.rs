// Truncated tensor algebras on graded modules with cyclic summands.

use graded_cogroups::algebra::{tensor_algebra, Word};
use graded_cogroups::graded::GradedModule;
use graded_cogroups::ring::RingSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // x in degree 1 with 2x = 0, y in degree 2 free
    let m = GradedModule::from_triples(RingSpec::Integers, &[("x", 1, 2), ("y", 2, 0)])?;
    println!("module: {m}");
    let t = tensor_algebra(&m, 4);
    for d in 0..=4 {
        let words: Vec<String> = t.basis(d).iter().map(|w| t.format_word(w)).collect();
        println!("degree {d}: {}", words.join(", "));
    }
    assert_eq!(t.basis(3).len(), 3);

    let (x, y) = (t.generator_named("x")?, t.generator_named("y")?);
    let xy = t.multiply(&x, &y)?;
    let yx = t.multiply(&y, &x)?;
    println!("x*y = {xy}, y*x = {yx}");
    println!("2*x*y = {}", xy.scale_int(2));
    assert!(xy.scale_int(2).is_zero());

    let c = t.graded_commutator(&x, &y)?;
    println!("[x, y] = {c}");
    let (commutative, pair) = t.is_graded_commutative();
    println!("graded commutative: {commutative}, first pair {pair:?}");
    assert!(!commutative);
    assert_eq!(t.word_modulus(&Word(vec![0, 1])), 2);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("tensor algebra example");
}
