//! Independent recomputations of derived values, compared with the library.

use std::collections::HashMap;

use graded_cogroups::algebra::Word;
use graded_cogroups::coalgebra::trivial_coalgebra;
use graded_cogroups::cogroup::tcm;
use graded_cogroups::convolution::antipode;
use graded_cogroups::graded::GradedModule;
use graded_cogroups::ring::RingSpec;
use proptest::prelude::*;

type Poly = HashMap<Vec<usize>, i64>;

/// Δ on a word of primitive letters: signed shuffles. Splitting a word into a
/// subsequence for the left slot and its complement for the right slot costs
/// the sign (-1)^{|a||b|} for every left letter a that passes a right letter b.
fn shuffle_coproduct(w: &[usize], deg: &[usize]) -> HashMap<(Vec<usize>, Vec<usize>), i64> {
    let mut out = HashMap::new();
    for mask in 0u32..(1 << w.len()) {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        let mut sign = 1i64;
        let mut right_deg = 0;
        for (i, &x) in w.iter().enumerate() {
            if mask & (1 << i) != 0 {
                if (deg[x] * right_deg) % 2 == 1 {
                    sign = -sign;
                }
                left.push(x);
            } else {
                right_deg += deg[x];
                right.push(x);
            }
        }
        *out.entry((left, right)).or_insert(0) += sign;
    }
    out
}

/// χ(w) = -w - Σ y χ(z) over the middle terms of Δw, in plain integers.
fn brute_antipode(w: &[usize], deg: &[usize], memo: &mut HashMap<Vec<usize>, Poly>) -> Poly {
    if let Some(p) = memo.get(w) {
        return p.clone();
    }
    let mut out: Poly = HashMap::new();
    *out.entry(w.to_vec()).or_insert(0) -= 1;
    for ((y, z), c) in shuffle_coproduct(w, deg) {
        if y.is_empty() || z.is_empty() || c == 0 {
            continue;
        }
        for (v, k) in brute_antipode(&z, deg, memo) {
            let mut word = y.clone();
            word.extend(v);
            *out.entry(word).or_insert(0) -= c * k;
        }
    }
    out.retain(|_, v| *v != 0);
    memo.insert(w.to_vec(), out.clone());
    out
}

/// Closed form for primitive generators: χ(x₁⋯x_k) = (-1)^{k + Σ_{i<j}|xᵢ||xⱼ|} x_k⋯x₁.
fn reversal(w: &[usize], deg: &[usize]) -> Poly {
    let mut e = w.len();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            e += deg[w[i]] * deg[w[j]];
        }
    }
    let mut rev = w.to_vec();
    rev.reverse();
    HashMap::from([(rev, if e.is_multiple_of(2) { 1 } else { -1 })])
}

fn library_antipode(degrees: &[usize], max_degree: usize) -> HashMap<Vec<usize>, Poly> {
    let names = ["a", "b", "c"];
    let gens: Vec<(&str, usize, u64)> = degrees.iter().enumerate().map(|(i, &d)| (names[i], d, 0)).collect();
    let m = GradedModule::from_triples(RingSpec::Integers, &gens).unwrap();
    let a = tcm(&trivial_coalgebra(&m), max_degree).unwrap();
    let chi = antipode(&a);
    a.algebra()
        .positive_words_upto(max_degree)
        .map(|w| {
            let p: Poly = chi
                .evaluate(w)
                .terms()
                .iter()
                .map(|(k, c)| (k.0.clone(), c.as_integer().unwrap().try_into().unwrap()))
                .collect();
            (w.0.clone(), p)
        })
        .collect()
}

#[test]
fn antipode_matches_brute_force_and_closed_form() {
    for degrees in [vec![1, 2], vec![2, 2], vec![1, 1], vec![3], vec![1, 2, 3]] {
        let lib = library_antipode(&degrees, 7);
        let mut memo = HashMap::new();
        for (w, p) in &lib {
            assert_eq!(*p, brute_antipode(w, &degrees, &mut memo), "word {w:?}, degrees {degrees:?}");
            assert_eq!(*p, reversal(w, &degrees), "word {w:?}, degrees {degrees:?}");
        }
    }
}

#[test]
fn named_examples() {
    // χ(xy) = yx for x, y of degree 2; χ(xy) = -yx in degree 1
    let lib = library_antipode(&[2, 2], 4);
    assert_eq!(lib[&vec![0, 1]], HashMap::from([(vec![1, 0], 1)]));
    let lib = library_antipode(&[1, 1], 2);
    assert_eq!(lib[&vec![0, 1]], HashMap::from([(vec![1, 0], -1)]));
    // χ(x²) = -x² for odd x; the coefficient is reduced mod 4 in the library
    let mut memo = HashMap::new();
    assert_eq!(brute_antipode(&[0, 0], &[3], &mut memo), HashMap::from([(vec![0, 0], -1)]));
    let m = GradedModule::from_triples(RingSpec::IntegersMod(4), &[("x", 3, 0)]).unwrap();
    let a = tcm(&trivial_coalgebra(&m), 6).unwrap();
    assert_eq!(antipode(&a).evaluate(&Word(vec![0, 0])).to_string(), "3*x^2");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn antipode_matches_closed_form_on_random_degrees(degrees in prop::collection::vec(1usize..5, 1..4)) {
        let lib = library_antipode(&degrees, 8);
        for (w, p) in &lib {
            prop_assert_eq!(p, &reversal(w, &degrees));
        }
    }
}
