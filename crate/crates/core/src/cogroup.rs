//! The cogroup T_CM(C) on the tensor algebra T(C̄).
//!
//! Comultiplication Φ: A → A ∗ A is the algebra map with
//! Φ(x) = x' + x'' + Σ c y'z'' for Δ̄x = Σ c y⊗z. The underlying bialgebra
//! coproduct is Δ = π∘Φ, where π: A ∗ A → A ⊗ A sends a' ↦ a⊗1, a'' ↦ 1⊗a
//! into the Koszul-signed tensor square.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{
    free_product_of, AlgebraElement, AlgebraMorphism, FreeProduct, Tensor, TensorAlgebra, TensorPower, Word,
};
use crate::axioms::AxiomReport;
use crate::coalgebra::{CoalgebraPresentation, GradedCoalgebra};
use crate::convolution::{convolution_inverse, GradedMap};
use crate::error::{Error, Result};
use crate::graded::GradedModule;
use crate::ring::RingElement;

#[derive(Clone, Debug)]
pub struct Cogroup {
    coalgebra: CoalgebraPresentation,
    algebra: Arc<TensorAlgebra>,
    doubled: FreeProduct,
    comultiplication: AlgebraMorphism,
    counit: AlgebraMorphism,
    inverse: AlgebraMorphism,
}

/// T_CM(C) truncated at `max_degree`. Fails if C is not a coalgebra there.
pub fn tcm(coalgebra: &CoalgebraPresentation, max_degree: usize) -> Result<Cogroup> {
    Cogroup::new(coalgebra, max_degree)
}

impl Cogroup {
    pub fn new(coalgebra: &CoalgebraPresentation, max_degree: usize) -> Result<Self> {
        let report = coalgebra.check_axioms(max_degree);
        if !report.passed() {
            return Err(Error::CoalgebraAxioms(report.to_string()));
        }
        let module = coalgebra.module();
        let algebra = TensorAlgebra::new(module.clone(), max_degree);
        let doubled = free_product_of(&[&algebra, &algebra])?;
        let n = module.len();

        let phi_images = (0..n)
            .map(|i| {
                let d = &doubled.algebra;
                let mut img = d.generator(i).add(&d.generator(n + i));
                for t in coalgebra.reduced_terms(i) {
                    let w = Word(vec![t.left, n + t.right]);
                    img = img.add(&AlgebraElement::word(d, w, t.coefficient.clone()));
                }
                img
            })
            .collect();
        let comultiplication = AlgebraMorphism::new(&algebra, &doubled.algebra, phi_images)?;

        let ground = TensorAlgebra::new(GradedModule::zero(module.ring()), max_degree);
        let counit = AlgebraMorphism::new(&algebra, &ground, vec![AlgebraElement::zero(&ground); n])?;

        let inverse = inverse_from_coalgebra(coalgebra, &algebra)?;

        Ok(Cogroup {
            coalgebra: coalgebra.clone(),
            algebra,
            doubled,
            comultiplication,
            counit,
            inverse,
        })
    }

    pub fn coalgebra(&self) -> &CoalgebraPresentation {
        &self.coalgebra
    }

    pub fn algebra(&self) -> &Arc<TensorAlgebra> {
        &self.algebra
    }

    pub fn max_degree(&self) -> usize {
        self.algebra.truncation()
    }

    /// A ∗ A with its two inclusions.
    pub fn doubled(&self) -> &FreeProduct {
        &self.doubled
    }

    pub fn comultiplication(&self) -> &AlgebraMorphism {
        &self.comultiplication
    }

    pub fn counit(&self) -> &AlgebraMorphism {
        &self.counit
    }

    /// The cogroup inverse ν.
    pub fn inverse(&self) -> &AlgebraMorphism {
        &self.inverse
    }

    /// Codiagonal A ∗ A → A.
    pub fn fold(&self) -> AlgebraMorphism {
        let n = self.algebra.generator_count();
        let images = (0..2 * n).map(|i| self.algebra.generator(i % n)).collect();
        AlgebraMorphism::new(&self.doubled.algebra, &self.algebra, images).expect("fold is well defined")
    }

    pub fn square(&self) -> TensorPower {
        TensorPower::new(&self.algebra, 2)
    }

    /// π: A ∗ A → A ⊗ A.
    pub fn project(&self, e: &AlgebraElement) -> Tensor {
        let sq = self.square();
        let n = self.algebra.generator_count();
        let ring = self.algebra.ring();
        let mut out = sq.zero();
        for (w, c) in e.terms() {
            let mut left = Vec::new();
            let mut right = Vec::new();
            let mut right_degree = 0usize;
            let mut exponent = 0usize;
            for &l in w.letters() {
                if l < n {
                    exponent += self.algebra.generator_degree(l) * right_degree;
                    left.push(l);
                } else {
                    right_degree += self.algebra.generator_degree(l - n);
                    right.push(l - n);
                }
            }
            let c = if exponent % 2 == 1 { ring.neg(c) } else { c.clone() };
            sq.add_term(&mut out, vec![Word(left), Word(right)], &c);
        }
        out
    }

    /// Δ(w) = π(Φ(w)).
    pub fn coproduct(&self, w: &Word) -> Tensor {
        self.project(&self.comultiplication.apply_word(w))
    }

    fn word_label(&self, w: &Word) -> (String, usize) {
        (self.algebra.format_word(w), self.algebra.word_degree(w))
    }

    /// Comonoid, inverse and bialgebra checks on every word of degree ≤ `max_degree`.
    pub fn check_axioms(&self, max_degree: usize) -> AxiomReport {
        let d = max_degree.min(self.max_degree());
        let n = self.algebra.generator_count();
        let a = &self.algebra;
        let dbl = &self.doubled.algebra;
        let phi = &self.comultiplication;
        let mut report = AxiomReport::new(d);

        let triple = free_product_of(&[a, a, a]).expect("same truncation");
        let t = &triple.algebra;
        let j12 = AlgebraMorphism::new(dbl, t, (0..2 * n).map(|i| t.generator(i)).collect()).unwrap();
        let j23 = AlgebraMorphism::new(dbl, t, (0..2 * n).map(|i| t.generator(n + i)).collect()).unwrap();
        let phi_then = |j: &AlgebraMorphism, i: usize| j.apply(phi.image_of_generator(i)).unwrap();
        let phi_id = AlgebraMorphism::new(
            dbl,
            t,
            (0..n)
                .map(|i| phi_then(&j12, i))
                .chain((0..n).map(|i| t.generator(2 * n + i)))
                .collect(),
        )
        .unwrap();
        let id_phi = AlgebraMorphism::new(
            dbl,
            t,
            (0..n)
                .map(|i| t.generator(i))
                .chain((0..n).map(|i| phi_then(&j23, i)))
                .collect(),
        )
        .unwrap();

        let zero = AlgebraElement::zero(a);
        let eps_id = AlgebraMorphism::new(
            dbl,
            a,
            (0..n).map(|_| zero.clone()).chain((0..n).map(|i| a.generator(i))).collect(),
        )
        .unwrap();
        let id_eps = AlgebraMorphism::new(
            dbl,
            a,
            (0..n).map(|i| a.generator(i)).chain((0..n).map(|_| zero.clone())).collect(),
        )
        .unwrap();

        let left = self.doubled.left();
        let right = self.doubled.right();
        let nu = &self.inverse;
        let nu_id = AlgebraMorphism::new(
            dbl,
            dbl,
            (0..n)
                .map(|i| left.apply(nu.image_of_generator(i)).unwrap())
                .chain((0..n).map(|i| dbl.generator(n + i)))
                .collect(),
        )
        .unwrap();
        let id_nu = AlgebraMorphism::new(
            dbl,
            dbl,
            (0..n)
                .map(|i| dbl.generator(i))
                .chain((0..n).map(|i| right.apply(nu.image_of_generator(i)).unwrap()))
                .collect(),
        )
        .unwrap();
        let fold = self.fold();

        let sq = self.square();
        let cube = TensorPower::new(a, 3);
        let ring = a.ring();

        let mut fails: [Option<(String, usize)>; 9] = Default::default();
        let memo: RefCell<HashMap<Word, Tensor>> = RefCell::new(HashMap::new());
        let delta = |u: &Word| -> Tensor {
            if let Some(t) = memo.borrow().get(u) {
                return t.clone();
            }
            let t = self.coproduct(u);
            memo.borrow_mut().insert(u.clone(), t.clone());
            t
        };
        let words = std::iter::once(Word::unit())
            .chain(a.positive_words_upto(d).cloned())
            .collect::<Vec<_>>();
        for w in &words {
            let we = AlgebraElement::word(a, w.clone(), ring.one());
            let unit_part = if w.is_unit() { AlgebraElement::one(a) } else { zero.clone() };
            let phi_w = phi.apply_word(w);
            let dw = self.project(&phi_w);
            let slot_part = |empty: usize| {
                let terms = dw.terms().iter().filter(|(k, _)| k[empty].is_unit());
                AlgebraElement::from_terms(a, terms.map(|(k, c)| (k[1 - empty].clone(), c.clone())))
            };

            let checks: [Box<dyn Fn() -> bool + '_>; 9] = [
                Box::new(|| phi_id.apply(&phi_w).unwrap() == id_phi.apply(&phi_w).unwrap()),
                Box::new(|| eps_id.apply(&phi_w).unwrap() == we),
                Box::new(|| id_eps.apply(&phi_w).unwrap() == we),
                Box::new(|| fold.apply(&nu_id.apply(&phi_w).unwrap()).unwrap() == unit_part),
                Box::new(|| fold.apply(&id_nu.apply(&phi_w).unwrap()).unwrap() == unit_part),
                Box::new(|| sq.map_slot(&dw, 0, delta, &cube) == sq.map_slot(&dw, 1, delta, &cube)),
                Box::new(|| slot_part(0) == we),
                Box::new(|| slot_part(1) == we),
                Box::new(|| match w.letters() {
                    [x] => dw == self.defining_coproduct(*x),
                    _ => true,
                }),
            ];
            for (slot, check) in fails.iter_mut().zip(checks.iter()) {
                if slot.is_none() && !check() {
                    *slot = Some(self.word_label(w));
                }
            }
            memo.borrow_mut().insert(w.clone(), dw.clone());
        }
        let laws = [
            "coassociativity",
            "left counit",
            "right counit",
            "left inverse",
            "right inverse",
            "bialgebra coassociativity",
            "bialgebra left counit",
            "bialgebra right counit",
            "restriction to defining coalgebra",
        ];
        for (law, fail) in laws.iter().zip(fails) {
            report.record(law, fail);
        }
        report
    }

    /// x⊗1 + Σ c y⊗z + 1⊗x from the defining table.
    fn defining_coproduct(&self, x: usize) -> Tensor {
        let sq = self.square();
        let one = self.algebra.ring().one();
        let mut t = sq.pure(vec![Word::letter(x), Word::unit()], one.clone());
        sq.add_term(&mut t, vec![Word::unit(), Word::letter(x)], &one);
        for term in self.coalgebra.reduced_terms(x) {
            sq.add_term(&mut t, vec![Word::letter(term.left), Word::letter(term.right)], &term.coefficient);
        }
        t
    }

    #[cfg(test)]
    pub(crate) fn with_comultiplication(mut self, phi: AlgebraMorphism) -> Self {
        self.comultiplication = phi;
        self
    }
}

/// ν: the convolution inverse of the inclusion C ↪ A, extended multiplicatively.
pub fn inverse_nu(cogroup: &Cogroup) -> AlgebraMorphism {
    cogroup.inverse.clone()
}

fn inverse_from_coalgebra(coalgebra: &CoalgebraPresentation, algebra: &Arc<TensorAlgebra>) -> Result<AlgebraMorphism> {
    let inclusion = GradedMap::inclusion(coalgebra, algebra)?;
    let g = convolution_inverse(coalgebra, &inclusion)?;
    let images = (0..algebra.generator_count())
        .map(|i| {
            g.image(&Word::letter(i))
                .cloned()
                .unwrap_or_else(|| AlgebraElement::zero(algebra))
        })
        .collect();
    AlgebraMorphism::new(algebra, algebra, images)
}

/// Φ_B ∘ f = (f ∗ f) ∘ Φ_A on every generator of A of degree ≤ `max_degree`.
pub fn is_cogroup_morphism(f: &AlgebraMorphism, a: &Cogroup, b: &Cogroup, max_degree: usize) -> Result<bool> {
    if **f.source() != *a.algebra || **f.target() != *b.algebra {
        return Err(Error::AlgebraMismatch);
    }
    let n = a.algebra.generator_count();
    let bl = b.doubled.left();
    let br = b.doubled.right();
    let images = (0..n)
        .map(|i| bl.apply(f.image_of_generator(i)))
        .chain((0..n).map(|i| br.apply(f.image_of_generator(i))))
        .collect::<Result<Vec<_>>>()?;
    let ff = AlgebraMorphism::new(&a.doubled.algebra, &b.doubled.algebra, images)?;
    for i in 0..n {
        if a.algebra.generator_degree(i) > max_degree {
            continue;
        }
        let lhs = b.comultiplication.apply(f.image_of_generator(i))?;
        let rhs = ff.apply(a.comultiplication.image_of_generator(i))?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

impl GradedCoalgebra for Cogroup {
    fn carrier(&self) -> &Arc<TensorAlgebra> {
        &self.algebra
    }

    /// Words spanning a nonzero cyclic summand.
    fn basis(&self, d: usize) -> Vec<Word> {
        self.algebra
            .basis(d)
            .iter()
            .filter(|w| self.algebra.word_modulus(w) != 1)
            .cloned()
            .collect()
    }

    fn reduced_coproduct(&self, w: &Word) -> Vec<(RingElement, Word, Word)> {
        self.coproduct(w)
            .terms()
            .iter()
            .filter(|(k, _)| !k[0].is_unit() && !k[1].is_unit())
            .map(|(k, c)| (c.clone(), k[0].clone(), k[1].clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::trivial_coalgebra;
    use crate::ring::RingSpec;

    fn module(ring: RingSpec, gens: &[(&str, usize, u64)]) -> GradedModule {
        GradedModule::from_triples(ring, gens).unwrap()
    }

    fn polynomial(ring: RingSpec, n: usize, d: usize) -> Cogroup {
        tcm(&trivial_coalgebra(&module(ring, &[("X", n, 0)])), d).unwrap()
    }

    #[test]
    fn polynomial_cogroup_structure() {
        let a = polynomial(RingSpec::Rationals, 2, 12);
        let x = a.algebra().generator(0);
        let phi_x = a.comultiplication().apply(&x).unwrap();
        let d = &a.doubled().algebra;
        assert_eq!(phi_x, d.generator(0).add(&d.generator(1)));
        assert_eq!(phi_x.to_string(), "X' + X''");
        assert_eq!(a.inverse().apply(&x).unwrap(), x.neg());
        assert!(a.check_axioms(12).passed(), "{}", a.check_axioms(12));
    }

    #[test]
    fn a_zero_is_the_ground_ring() {
        let a = tcm(&trivial_coalgebra(&GradedModule::zero(RingSpec::Integers)), 6).unwrap();
        assert_eq!(a.algebra().generator_count(), 0);
        assert!((1..=6).all(|d| a.algebra().basis(d).is_empty()));
        assert!(a.check_axioms(6).passed());
    }

    #[test]
    fn nu_on_powers() {
        let a = polynomial(RingSpec::Integers, 3, 12);
        let nu = inverse_nu(&a);
        for k in 1..=4 {
            let w = Word(vec![0; k]);
            let expected = AlgebraElement::word(a.algebra(), w.clone(), RingSpec::Integers.from_int(if k % 2 == 0 { 1 } else { -1 }));
            assert_eq!(nu.apply_word(&w), expected);
        }
        let a = tcm(&trivial_coalgebra(&module(RingSpec::Integers, &[("x", 3, 4)])), 9).unwrap();
        let x2 = Word(vec![0, 0]);
        assert_eq!(inverse_nu(&a).apply_word(&x2).to_string(), "x^2");

        let a = polynomial(RingSpec::PrimeField(2), 3, 9);
        assert_eq!(inverse_nu(&a), AlgebraMorphism::identity(a.algebra()));
    }

    #[test]
    fn square_coproduct_cogroup() {
        let m = module(RingSpec::Rationals, &[("y", 2, 0), ("x", 4, 0)]);
        let c = CoalgebraPresentation::with_coproduct(m, &[("x", 1, "y", "y")]).unwrap();
        let a = tcm(&c, 10).unwrap();
        let phi_x = a.comultiplication().image_of_generator(1);
        assert_eq!(phi_x.to_string(), "y'*y'' + x' + x''");
        let r = a.check_axioms(10);
        assert!(r.passed(), "{r}");
        // ν(x) = -x - y ν(y) = -x + y²
        assert_eq!(a.inverse().image_of_generator(1).to_string(), "y^2 - x");
    }

    #[test]
    fn torsion_cogroup_passes() {
        let n = module(RingSpec::Integers, &[("x", 2, 3), ("y", 4, 5)]);
        let a = tcm(&trivial_coalgebra(&n), 10).unwrap();
        assert!(a.check_axioms(10).passed());
    }

    #[test]
    fn corrupted_comultiplication_breaks_inverse_law() {
        let a = polynomial(RingSpec::Rationals, 2, 8);
        let d = a.doubled().algebra.clone();
        let bad = AlgebraMorphism::new(a.algebra(), &d, vec![d.generator(0)]).unwrap();
        let a = a.with_comultiplication(bad);
        let r = a.check_axioms(8);
        let inv = r.check("left inverse").unwrap();
        assert!(!inv.passed);
        assert_eq!(inv.failure_degree, Some(2));
    }

    #[test]
    fn rejects_non_coassociative_input() {
        let m = module(RingSpec::Rationals, &[("z", 1, 0), ("y", 2, 0), ("x", 3, 0)]);
        let c = CoalgebraPresentation::with_coproduct(m, &[("x", 1, "y", "z"), ("y", 1, "z", "z")]).unwrap();
        assert!(matches!(tcm(&c, 6), Err(Error::CoalgebraAxioms(_))));
    }

    #[test]
    fn coproduct_restricts_to_defining_table() {
        let m = module(RingSpec::Integers, &[("y", 1, 0), ("z", 2, 0), ("x", 3, 0)]);
        let c = CoalgebraPresentation::with_coproduct(m, &[("x", 2, "y", "z"), ("x", -1, "z", "y")]).unwrap();
        let a = tcm(&c, 6).unwrap();
        for i in 0..3 {
            assert_eq!(a.coproduct(&Word::letter(i)), a.defining_coproduct(i));
        }
        assert!(a.check_axioms(6).passed());
    }

    #[test]
    fn primitive_odd_square() {
        // Δ(x²) = x²⊗1 + 1⊗x² when |x| is odd
        let a = tcm(&trivial_coalgebra(&module(RingSpec::Integers, &[("x", 3, 4)])), 9).unwrap();
        let dx2 = a.coproduct(&Word(vec![0, 0]));
        assert_eq!(a.square().format(&dx2), "1⊗x^2 + x^2⊗1");
        let b = polynomial(RingSpec::Rationals, 2, 8);
        let dx2 = b.coproduct(&Word(vec![0, 0]));
        assert_eq!(b.square().format(&dx2), "1⊗X^2 + 2*X⊗X + X^2⊗1");
    }

    #[test]
    fn cogroup_morphisms_between_polynomial_cogroups() {
        let q = RingSpec::Rationals;
        let a2 = polynomial(q, 2, 8);
        let x = a2.algebra().generator(0);
        for c in [0, 1, -1, 2] {
            let f = AlgebraMorphism::new(a2.algebra(), a2.algebra(), vec![x.scale_int(c)]).unwrap();
            assert!(is_cogroup_morphism(&f, &a2, &a2, 8).unwrap());
        }
        let a4 = polynomial(q, 4, 8);
        let zero = AlgebraMorphism::new(a2.algebra(), a4.algebra(), vec![AlgebraElement::zero(a4.algebra())]).unwrap();
        assert!(is_cogroup_morphism(&zero, &a2, &a4, 8).unwrap());

        let a1 = polynomial(q, 1, 8);
        let y = a1.algebra().generator(0);
        let y2 = a1.algebra().multiply(&y, &y).unwrap();
        let f = AlgebraMorphism::new(a2.algebra(), a1.algebra(), vec![y2]).unwrap();
        assert!(!is_cogroup_morphism(&f, &a2, &a1, 8).unwrap());

        assert_eq!(is_cogroup_morphism(&zero, &a4, &a2, 8), Err(Error::AlgebraMismatch));
    }
}
