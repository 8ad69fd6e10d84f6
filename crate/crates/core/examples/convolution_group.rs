// The convolution group of graded maps out of a cogroup.

use graded_cogroups::coalgebra::trivial_coalgebra;
use graded_cogroups::cogroup::tcm;
use graded_cogroups::convolution::{convolution_inverse, convolve, random_element, GradedMap};
use graded_cogroups::graded::GradedModule;
use graded_cogroups::ring::RingSpec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = GradedModule::from_triples(RingSpec::Integers, &[("x", 2, 3), ("y", 4, 5)])?;
    let a = tcm(&trivial_coalgebra(&m), 8)?;
    let t = a.algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    let f = random_element(&a, t, 8, &mut rng)?;
    let g = random_element(&a, t, 8, &mut rng)?;
    let show = |label: &str, h: &GradedMap| {
        println!("{label}:");
        for (w, img) in h.format_table(&a) {
            println!("  {w} -> {img}");
        }
    };
    show("f", &f);
    show("g", &g);
    let fg = convolve(&a, &f, &g)?;
    show("f * g", &fg);

    let inv = convolution_inverse(&a, &f)?;
    show("f^-1", &inv);
    let e = GradedMap::unit(&a, t, 8)?;
    assert_eq!(convolve(&a, &f, &inv)?.table(), e.table());

    // identity * identity doubles generators
    let id = GradedMap::identity(&a);
    let twice = convolve(&a, &id, &id)?;
    show("id * id", &twice);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("convolution group example");
}
