#![allow(dead_code)]

use graded_cogroups::coalgebra::{trivial_coalgebra, CoalgebraPresentation};
use graded_cogroups::graded::GradedModule;
use graded_cogroups::ring::RingSpec;

pub struct Instance {
    pub label: &'static str,
    pub coalgebra: CoalgebraPresentation,
    /// Expected graded commutativity, worked out by hand.
    pub commutative: bool,
}

fn trivial(label: &'static str, ring: RingSpec, gens: &[(&str, usize, u64)], commutative: bool) -> Instance {
    let m = GradedModule::from_triples(ring, gens).unwrap();
    Instance {
        label,
        coalgebra: trivial_coalgebra(&m),
        commutative,
    }
}

fn with_coproduct(
    label: &'static str,
    ring: RingSpec,
    gens: &[(&str, usize, u64)],
    table: &[(&str, i64, &str, &str)],
    commutative: bool,
) -> Instance {
    let m = GradedModule::from_triples(ring, gens).unwrap();
    Instance {
        label,
        coalgebra: CoalgebraPresentation::with_coproduct(m, table).unwrap(),
        commutative,
    }
}

/// Cogroup inputs over Z, Q, F_2, F_3, Z/4, Z/6 with 1–3 generators of
/// degree 1–5 and annihilators in {0, 2, 3, 4, 6}.
pub fn matrix() -> Vec<Instance> {
    use RingSpec::*;
    vec![
        trivial("Q X[2]", Rationals, &[("X", 2, 0)], true),
        trivial("Q X[3]", Rationals, &[("X", 3, 0)], false),
        trivial("Q x[1]", Rationals, &[("x", 1, 0)], false),
        trivial("Q x[2] + y[2]", Rationals, &[("x", 2, 0), ("y", 2, 0)], false),
        trivial("Z x[4]", Integers, &[("x", 4, 0)], true),
        trivial("Z x[3]", Integers, &[("x", 3, 0)], false),
        trivial("Z/2 x[5]", Integers, &[("x", 5, 2)], true),
        trivial("Z/4 x[3] over Z", Integers, &[("x", 3, 4)], false),
        trivial("Z/3 x[2] + Z/5 y[4]", Integers, &[("x", 2, 3), ("y", 4, 5)], true),
        trivial("Z/3 x[2] + Z/6 y[4]", Integers, &[("x", 2, 3), ("y", 4, 6)], false),
        trivial("Z/2 x[1] + Z/3 y[3]", Integers, &[("x", 1, 2), ("y", 3, 3)], false),
        trivial("Z/2 x[1] + Z/3 y[2]", Integers, &[("x", 1, 2), ("y", 2, 3)], true),
        trivial("Z/2 x[1] + Z/3 y[2] + Z/4 z[4]", Integers, &[("x", 1, 2), ("y", 2, 3), ("z", 4, 4)], false),
        trivial("F2 x[1]", PrimeField(2), &[("x", 1, 0)], true),
        trivial("F2 x[3]", PrimeField(2), &[("x", 3, 0)], true),
        trivial("F2 x[1] + y[2]", PrimeField(2), &[("x", 1, 0), ("y", 2, 0)], false),
        trivial("F3 x[2]", PrimeField(3), &[("x", 2, 0)], true),
        trivial("F3 x[1]", PrimeField(3), &[("x", 1, 0)], false),
        trivial("Z/4 x[2]", IntegersMod(4), &[("x", 2, 0)], true),
        trivial("Z/4 (ann 2) x[3]", IntegersMod(4), &[("x", 3, 2)], true),
        trivial("Z/4 x[1]", IntegersMod(4), &[("x", 1, 0)], false),
        trivial("Z/6 x[2]", IntegersMod(6), &[("x", 2, 0)], true),
        trivial("Z/6 x[3]", IntegersMod(6), &[("x", 3, 0)], false),
        trivial("Z/6 (ann 2) x[3]", IntegersMod(6), &[("x", 3, 2)], true),
        trivial("Z/6 (ann 2) x[2] + (ann 3) y[4]", IntegersMod(6), &[("x", 2, 2), ("y", 4, 3)], true),
        trivial("Z/6 (ann 2) x[1] + (ann 3) y[2] + (ann 3) z[5]", IntegersMod(6), &[("x", 1, 2), ("y", 2, 3), ("z", 5, 3)], false),
        with_coproduct("Q y[2], x[4], x -> y*y", Rationals, &[("y", 2, 0), ("x", 4, 0)], &[("x", 1, "y", "y")], false),
        with_coproduct(
            "Z y[1], z[2], x[3], x -> 2 y*z - z*y",
            Integers,
            &[("y", 1, 0), ("z", 2, 0), ("x", 3, 0)],
            &[("x", 2, "y", "z"), ("x", -1, "z", "y")],
            false,
        ),
        with_coproduct("F3 y[2], x[4], x -> y*y", PrimeField(3), &[("y", 2, 0), ("x", 4, 0)], &[("x", 2, "y", "y")], false),
    ]
}
