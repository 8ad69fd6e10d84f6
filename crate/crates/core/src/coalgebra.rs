//! Connected graded coalgebras R ⊕ C̄ given by a reduced-coproduct table on
//! cyclic generators: Δx = x⊗1 + Σ cᵢ yᵢ⊗zᵢ + 1⊗x.

use std::sync::Arc;

use crate::algebra::{AlgebraElement, Tensor, TensorAlgebra, TensorPower, Word};
use crate::axioms::AxiomReport;
use crate::error::{Error, Result};
use crate::graded::GradedModule;
use crate::ring::{gcd, RingElement, RingSpec};

/// A connected graded coalgebra whose positive-degree basis is indexed by
/// words of some carrier tensor algebra. Convolution is defined over this.
pub trait GradedCoalgebra {
    /// Algebra whose words index the basis (and supply degrees and moduli).
    fn carrier(&self) -> &Arc<TensorAlgebra>;

    /// Basis elements of degree `d > 0`.
    fn basis(&self, d: usize) -> Vec<Word>;

    /// The middle part Σ c y⊗z of Δw, with y and z of positive degree.
    fn reduced_coproduct(&self, w: &Word) -> Vec<(RingElement, Word, Word)>;

    fn ring(&self) -> RingSpec {
        self.carrier().ring()
    }
}

/// One term c·(y⊗z) of a reduced coproduct, by generator index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoproductTerm {
    pub coefficient: RingElement,
    pub left: usize,
    pub right: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraPresentation {
    module: GradedModule,
    reduced: Vec<Vec<CoproductTerm>>,
    carrier: Arc<TensorAlgebra>,
}

/// C(N): every generator primitive.
pub fn trivial_coalgebra(module: &GradedModule) -> CoalgebraPresentation {
    CoalgebraPresentation::trivial(module.clone())
}

impl CoalgebraPresentation {
    pub fn trivial(module: GradedModule) -> Self {
        let n = module.len();
        let carrier = TensorAlgebra::new(module.clone(), module.max_degree());
        CoalgebraPresentation {
            module,
            reduced: vec![Vec::new(); n],
            carrier,
        }
    }

    /// Builds a presentation from `(x, c, y, z)` entries meaning Δ̄x ∋ c·y⊗z.
    ///
    /// Rejects unknown names, unbalanced degrees, and terms that are not
    /// killed by the annihilator of `x` (Δ̄ must be a module map).
    pub fn with_coproduct(module: GradedModule, entries: &[(&str, i64, &str, &str)]) -> Result<Self> {
        let ring = module.ring();
        let lookup = |name: &str| {
            module
                .index_of(name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
        };
        let mut indexed = Vec::with_capacity(entries.len());
        for &(x, c, y, z) in entries {
            indexed.push((lookup(x)?, ring.from_int(c), lookup(y)?, lookup(z)?));
        }
        Self::from_indexed(module, indexed)
    }

    pub fn from_indexed(module: GradedModule, entries: Vec<(usize, RingElement, usize, usize)>) -> Result<Self> {
        let ring = module.ring();
        let gens = module.generators();
        let mut reduced: Vec<Vec<CoproductTerm>> = vec![Vec::new(); gens.len()];
        for (x, c, y, z) in entries {
            let got = gens[y].degree + gens[z].degree;
            if got != gens[x].degree {
                return Err(Error::CoproductImbalance {
                    generator: gens[x].name.clone(),
                    left: gens[y].name.clone(),
                    right: gens[z].name.clone(),
                    got,
                    expected: gens[x].degree,
                });
            }
            let m = gcd(gcd(module.modulus(y), module.modulus(z)), ring.base_modulus());
            let mx = module.modulus(x);
            if mx > 0 && !ring.is_zero_mod(&ring.mul(&c, &ring.from_int(mx as i64)), m) {
                return Err(Error::AnnihilatorViolation {
                    generator: gens[x].name.clone(),
                    annihilator: gens[x].annihilator,
                });
            }
            let terms = &mut reduced[x];
            match terms.iter_mut().find(|t| t.left == y && t.right == z) {
                Some(t) => t.coefficient = ring.add_mod(&t.coefficient, &c, m),
                None => terms.push(CoproductTerm {
                    coefficient: ring.reduce(c, m),
                    left: y,
                    right: z,
                }),
            }
            terms.retain(|t| {
                let m = gcd(gcd(module.modulus(t.left), module.modulus(t.right)), ring.base_modulus());
                !ring.is_zero_mod(&t.coefficient, m)
            });
        }
        let carrier = TensorAlgebra::new(module.clone(), module.max_degree());
        Ok(CoalgebraPresentation {
            module,
            reduced,
            carrier,
        })
    }

    pub fn module(&self) -> &GradedModule {
        &self.module
    }

    pub fn reduced_terms(&self, x: usize) -> &[CoproductTerm] {
        &self.reduced[x]
    }

    pub fn is_trivial(&self) -> bool {
        self.reduced.iter().all(Vec::is_empty)
    }

    /// Δ on a basis element of C (the unit or a single generator).
    fn delta(&self, w: &Word, square: &TensorPower) -> Tensor {
        let one = self.module.ring().one();
        match w.letters() {
            [] => square.one(),
            [x] => {
                let mut t = square.pure(vec![w.clone(), Word::unit()], one.clone());
                square.add_term(&mut t, vec![Word::unit(), w.clone()], &one);
                for term in &self.reduced[*x] {
                    square.add_term(
                        &mut t,
                        vec![Word::letter(term.left), Word::letter(term.right)],
                        &term.coefficient,
                    );
                }
                t
            }
            _ => panic!("coalgebra basis elements are single letters"),
        }
    }

    /// Coassociativity and both counit laws on every generator of degree ≤ `max_degree`.
    pub fn check_axioms(&self, max_degree: usize) -> AxiomReport {
        let square = TensorPower::new(&self.carrier, 2);
        let cube = TensorPower::new(&self.carrier, 3);
        let mut report = AxiomReport::new(max_degree);
        let mut coassoc = None;
        let mut left_counit = None;
        let mut right_counit = None;
        for (i, g) in self.module.generators().iter().enumerate() {
            if g.degree > max_degree {
                continue;
            }
            let x = Word::letter(i);
            let dx = self.delta(&x, &square);
            let lhs = square.map_slot(&dx, 0, |w| self.delta(w, &square), &cube);
            let rhs = square.map_slot(&dx, 1, |w| self.delta(w, &square), &cube);
            if coassoc.is_none() && lhs != rhs {
                coassoc = Some((g.name.clone(), g.degree));
            }
            // (ε⊗1)Δx and (1⊗ε)Δx
            let expected = self.carrier.generator(i);
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (key, c) in dx.terms() {
                if key[0].is_unit() {
                    left.push((key[1].clone(), c.clone()));
                }
                if key[1].is_unit() {
                    right.push((key[0].clone(), c.clone()));
                }
            }
            if left_counit.is_none() && AlgebraElement::from_terms(&self.carrier, left) != expected {
                left_counit = Some((g.name.clone(), g.degree));
            }
            if right_counit.is_none() && AlgebraElement::from_terms(&self.carrier, right) != expected {
                right_counit = Some((g.name.clone(), g.degree));
            }
        }
        report.record("coassociativity", coassoc);
        report.record("left counit", left_counit);
        report.record("right counit", right_counit);
        report
    }

    /// Δ̄ invariant under the signed twist y⊗z ↦ (-1)^{|y||z|} z⊗y.
    pub fn is_cocommutative(&self) -> bool {
        let square = TensorPower::new(&self.carrier, 2);
        let ring = self.module.ring();
        self.reduced.iter().all(|terms| {
            let mut t = square.zero();
            let mut twisted = square.zero();
            for term in terms {
                square.add_term(
                    &mut t,
                    vec![Word::letter(term.left), Word::letter(term.right)],
                    &term.coefficient,
                );
                let p = self.carrier.generator_degree(term.left) * self.carrier.generator_degree(term.right);
                let c = if p % 2 == 1 {
                    ring.neg(&term.coefficient)
                } else {
                    term.coefficient.clone()
                };
                square.add_term(&mut twisted, vec![Word::letter(term.right), Word::letter(term.left)], &c);
            }
            t == twisted
        })
    }

    /// Whether generator images (linear combinations of target generators)
    /// define a coalgebra map: Δ∘f = (f⊗f)∘Δ on every generator.
    pub fn is_coalgebra_morphism(&self, target: &CoalgebraPresentation, images: &[AlgebraElement]) -> Result<bool> {
        if images.len() != self.module.len() {
            return Err(Error::ImageCount {
                expected: self.module.len(),
                got: images.len(),
            });
        }
        let t_alg = target.carrier();
        let sq = TensorPower::new(t_alg, 2);
        let ring = self.module.ring();
        for img in images {
            if img.terms().keys().any(|w| w.len() != 1) || **img.algebra() != **t_alg {
                return Err(Error::AlgebraMismatch);
            }
        }
        // validates degrees and annihilators
        crate::algebra::AlgebraMorphism::new(&self.carrier, t_alg, images.to_vec())?;
        let f_of = |w: &Word| -> Vec<(Word, RingElement)> {
            match w.letters() {
                [] => vec![(Word::unit(), ring.one())],
                [i] => images[*i].terms().iter().map(|(w, c)| (w.clone(), c.clone())).collect(),
                _ => unreachable!(),
            }
        };
        for (i, image) in images.iter().enumerate() {
            let mut lhs = sq.zero();
            for (w, c) in image.terms() {
                let d = target.delta(w, &sq);
                for (k, v) in d.terms() {
                    sq.add_term(&mut lhs, k.clone(), &ring.mul(v, c));
                }
            }
            let own_sq = TensorPower::new(&self.carrier, 2);
            let dx = self.delta(&Word::letter(i), &own_sq);
            let mut rhs = sq.zero();
            for (k, c) in dx.terms() {
                for (a, ca) in f_of(&k[0]) {
                    for (b, cb) in f_of(&k[1]) {
                        let v = ring.mul(&ring.mul(c, &ca), &cb);
                        sq.add_term(&mut rhs, vec![a.clone(), b.clone()], &v);
                    }
                }
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl GradedCoalgebra for CoalgebraPresentation {
    fn carrier(&self) -> &Arc<TensorAlgebra> {
        &self.carrier
    }

    fn basis(&self, d: usize) -> Vec<Word> {
        self.module
            .generators()
            .iter()
            .enumerate()
            .filter(|(_, g)| g.degree == d)
            .map(|(i, _)| Word::letter(i))
            .collect()
    }

    fn reduced_coproduct(&self, w: &Word) -> Vec<(RingElement, Word, Word)> {
        match w.letters() {
            [x] => self.reduced[*x]
                .iter()
                .map(|t| (t.coefficient.clone(), Word::letter(t.left), Word::letter(t.right)))
                .collect(),
            _ => Vec::new(),
        }
    }
}
