// Exact coefficient rings and Smith normal form over ℤ.

use graded_cogroups::ring::snf::{smith_normal_form, IntMatrix};
use graded_cogroups::ring::RingSpec;
use num_bigint::BigInt;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z6 = RingSpec::integers_mod(6)?;
    let (a, b) = (z6.from_int(4), z6.from_int(5));
    println!("in {z6}: 4 + 5 = {}, 4 * 5 = {}, -4 = {}", z6.add(&a, &b), z6.mul(&a, &b), z6.neg(&a));
    assert_eq!(z6.mul(&a, &b), z6.from_int(2));

    let f3 = RingSpec::prime_field(3)?;
    let half = f3.from_ratio(1, 2).ok_or("2 is invertible mod 3")?;
    println!("in {f3}: 1/2 = {half}");
    assert_eq!(half, f3.from_int(2));

    let q = RingSpec::Rationals;
    let third = q.from_ratio(1, 3).ok_or("nonzero denominator")?;
    println!("in {q}: 1/3 + 1/3 = {}", q.add(&third, &third));

    // cyclic summands: ann 4 in ℤ gives ℤ/4, ann 4 in ℤ/6 gives ℤ/2
    println!("ann 4 over Z: modulus {}", RingSpec::Integers.cyclic_modulus(4));
    println!("ann 4 over Z/6: modulus {}", z6.cyclic_modulus(4));
    assert_eq!(z6.cyclic_modulus(4), 2);

    let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&m);
    let factors: Vec<BigInt> = snf.invariant_factors();
    println!("invariant factors: {factors:?}");
    assert_eq!(factors, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
    assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("ring example");
}
