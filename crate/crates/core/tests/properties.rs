mod common;

use std::time::Instant;

use graded_cogroups::classify::{classify_module, default_truncation};
use graded_cogroups::coalgebra::trivial_coalgebra;
use graded_cogroups::cogroup::{tcm, Cogroup};
use graded_cogroups::convolution::{
    antipode, check_hopf_antipode, convolution_inverse, convolve, is_antipode_surjective, is_antipode_surjective_dense,
    is_graded_antihomomorphism, left_convolution_inverse, random_element, GradedMap,
};
use graded_cogroups::graded::GradedModule;
use graded_cogroups::ring::RingSpec;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const RINGS: [RingSpec; 6] = [
    RingSpec::Integers,
    RingSpec::Rationals,
    RingSpec::PrimeField(2),
    RingSpec::PrimeField(3),
    RingSpec::IntegersMod(4),
    RingSpec::IntegersMod(6),
];

/// One or two cyclic generators; at most one in degree 1 so that the
/// truncated algebras stay small.
fn module_strategy() -> impl Strategy<Value = GradedModule> {
    (0..RINGS.len(), prop::collection::vec((1usize..5, prop::sample::select(vec![0u64, 2, 3, 4, 6])), 1..3)).prop_map(
        |(r, gens)| {
            let ring = RINGS[r];
            let names = ["x", "y"];
            let mut seen_degree_one = false;
            let triples: Vec<(&str, usize, u64)> = gens
                .iter()
                .enumerate()
                .map(|(i, &(d, a))| {
                    let d = if d == 1 && seen_degree_one { 2 } else { d };
                    seen_degree_one |= d == 1;
                    let a = if ring.is_legal_annihilator(a) { a } else { 0 };
                    (names[i], d, a)
                })
                .collect();
            GradedModule::from_triples(ring, &triples).unwrap()
        },
    )
}

fn same(f: &GradedMap, g: &GradedMap) -> bool {
    f.table() == g.table()
}

fn cogroup(m: &GradedModule, d: usize) -> Cogroup {
    tcm(&trivial_coalgebra(m), d).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cogroup_axioms_hold(m in module_strategy()) {
        let a = cogroup(&m, 6);
        let report = a.check_axioms(6);
        prop_assert!(report.passed(), "{m:?}: {report:?}");
    }

    #[test]
    fn antipode_is_two_sided_inverse_of_identity(m in module_strategy()) {
        let a = cogroup(&m, 7);
        let chi = antipode(&a);
        prop_assert!(check_hopf_antipode(&a, &chi).passed());
        let id = GradedMap::identity(&a);
        prop_assert!(same(&chi, &convolution_inverse(&a, &id).unwrap()));
        prop_assert!(same(&chi, &left_convolution_inverse(&a, &id).unwrap()));
        prop_assert!(is_graded_antihomomorphism(&chi, &a).0);
    }

    #[test]
    fn antipode_is_surjective_and_eliminations_agree(m in module_strategy()) {
        let a = cogroup(&m, 7);
        let chi = antipode(&a);
        let sparse = is_antipode_surjective(&a, &chi);
        prop_assert_eq!(&sparse, &is_antipode_surjective_dense(&a, &chi));
        prop_assert!(sparse.iter().all(|&b| b));
    }

    #[test]
    fn classification_is_consistent(m in module_strategy()) {
        let r = classify_module(&m, default_truncation(&m)).unwrap();
        prop_assert!(r.consistent, "{m:?}: {r}");
        if let Some(f) = r.module_in_f {
            prop_assert_eq!(f, r.module_in_s);
        }
    }

    #[test]
    fn convolution_group_laws(m in module_strategy(), seed in any::<u64>()) {
        let a = cogroup(&m, 6);
        let t = a.algebra();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_element(&a, t, 6, &mut rng).unwrap();
        let g = random_element(&a, t, 6, &mut rng).unwrap();
        let h = random_element(&a, t, 6, &mut rng).unwrap();
        let e = GradedMap::unit(&a, t, 6).unwrap();
        let fg_h = convolve(&a, &convolve(&a, &f, &g).unwrap(), &h).unwrap();
        let f_gh = convolve(&a, &f, &convolve(&a, &g, &h).unwrap()).unwrap();
        prop_assert!(same(&fg_h, &f_gh));
        prop_assert_eq!(convolve(&a, &f, &e).unwrap().table().clone(), f.table().clone());
        prop_assert_eq!(convolve(&a, &e, &f).unwrap().table().clone(), f.table().clone());
        let r = convolution_inverse(&a, &f).unwrap();
        let l = left_convolution_inverse(&a, &f).unwrap();
        prop_assert!(same(&r, &l));
        prop_assert_eq!(convolve(&a, &f, &r).unwrap().table().clone(), e.table().clone());
        prop_assert_eq!(convolve(&a, &l, &f).unwrap().table().clone(), e.table().clone());
    }

    #[test]
    fn sparse_and_dense_surjectivity_agree_on_random_maps(m in module_strategy(), seed in any::<u64>()) {
        let a = cogroup(&m, 6);
        let t = a.algebra();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_element(&a, t, 6, &mut rng).unwrap();
        let shifted = f.add(&GradedMap::identity(&a)).unwrap();
        for map in [&f, &shifted] {
            prop_assert_eq!(is_antipode_surjective(&a, map), is_antipode_surjective_dense(&a, map));
        }
    }
}

#[test]
fn cogroup_axioms_hold_on_matrix_at_degree_ten() {
    for inst in common::matrix() {
        let start = Instant::now();
        let a = tcm(&inst.coalgebra, 10).unwrap();
        let report = a.check_axioms(10);
        assert!(report.passed(), "{}: {report:?}", inst.label);
        eprintln!("{}: {:.2}s", inst.label, start.elapsed().as_secs_f64());
    }
}
