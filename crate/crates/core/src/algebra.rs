//! Truncated tensor algebras T(N) on modules with torsion generators.
//!
//! A word w = x₁⋯x_k spans the cyclic module R/(m_w) with m_w the gcd of the
//! letters' moduli (ℤ/a ⊗ ℤ/b ≅ ℤ/gcd(a, b)), so a word whose letters have
//! coprime annihilators is zero. Everything of degree above the truncation is
//! discarded.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::graded::GradedModule;
use crate::ring::{gcd, RingElement, RingSpec};

/// A word in generator indices; the empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i])
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

pub(crate) type Terms = BTreeMap<Word, RingElement>;

/// T(N) truncated at degree `truncation`.
pub struct TensorAlgebra {
    module: GradedModule,
    truncation: usize,
    degrees: Vec<usize>,
    moduli: Vec<u64>,
    basis: OnceLock<Vec<Vec<Word>>>,
}

impl PartialEq for TensorAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.module == other.module && self.truncation == other.truncation
    }
}

impl Eq for TensorAlgebra {}

impl fmt::Debug for TensorAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({}) over {} up to degree {}", self.module, self.module.ring(), self.truncation)
    }
}

pub fn tensor_algebra(module: &GradedModule, truncation: usize) -> Arc<TensorAlgebra> {
    TensorAlgebra::new(module.clone(), truncation)
}

impl TensorAlgebra {
    pub fn new(module: GradedModule, truncation: usize) -> Arc<Self> {
        let degrees = module.generators().iter().map(|g| g.degree).collect();
        let moduli = (0..module.len()).map(|i| module.modulus(i)).collect();
        Arc::new(TensorAlgebra {
            module,
            truncation,
            degrees,
            moduli,
            basis: OnceLock::new(),
        })
    }

    pub fn module(&self) -> &GradedModule {
        &self.module
    }

    pub fn ring(&self) -> RingSpec {
        self.module.ring()
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn generator_count(&self) -> usize {
        self.degrees.len()
    }

    pub fn generator_degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn generator_modulus(&self, i: usize) -> u64 {
        self.moduli[i]
    }

    pub fn generator_name(&self, i: usize) -> &str {
        &self.module.generators()[i].name
    }

    pub fn word_degree(&self, w: &Word) -> usize {
        w.0.iter().map(|&i| self.degrees[i]).sum()
    }

    /// Coefficient modulus of a word; 1 means the word spans the zero module.
    pub fn word_modulus(&self, w: &Word) -> u64 {
        w.0.iter()
            .fold(self.ring().base_modulus(), |acc, &i| gcd(acc, self.moduli[i]))
    }

    fn all_bases(&self) -> &Vec<Vec<Word>> {
        self.basis.get_or_init(|| {
            let mut by_degree: Vec<Vec<Word>> = vec![Vec::new(); self.truncation + 1];
            by_degree[0].push(Word::unit());
            for d in 1..=self.truncation {
                let mut words = Vec::new();
                for (i, &gd) in self.degrees.iter().enumerate() {
                    if gd <= d {
                        for prefix in &by_degree[d - gd] {
                            let mut v = prefix.0.clone();
                            v.push(i);
                            words.push(Word(v));
                        }
                    }
                }
                words.sort();
                by_degree[d] = words;
            }
            by_degree
        })
    }

    /// All words of degree `d` (empty above the truncation).
    pub fn basis(&self, d: usize) -> &[Word] {
        self.all_bases().get(d).map_or(&[], Vec::as_slice)
    }

    /// Words of degree 1..=d, in degree order.
    pub fn positive_words_upto(&self, d: usize) -> impl Iterator<Item = &Word> {
        (1..=d.min(self.truncation)).flat_map(move |k| self.basis(k).iter())
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_unit() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut iter = w.0.iter().peekable();
        while let Some(&i) = iter.next() {
            let mut run = 1;
            while iter.peek() == Some(&&i) {
                iter.next();
                run += 1;
            }
            let name = self.generator_name(i);
            parts.push(if run == 1 {
                name.to_string()
            } else {
                format!("{name}^{run}")
            });
        }
        parts.join("*")
    }

    pub(crate) fn add_term(&self, terms: &mut Terms, w: Word, c: &RingElement) {
        let m = self.word_modulus(&w);
        let ring = self.ring();
        match terms.get_mut(&w) {
            Some(existing) => {
                let s = ring.add_mod(existing, c, m);
                if ring.is_zero_mod(&s, m) {
                    terms.remove(&w);
                } else {
                    *existing = s;
                }
            }
            None => {
                let r = ring.reduce(c.clone(), m);
                if !ring.is_zero_mod(&r, m) {
                    terms.insert(w, r);
                }
            }
        }
    }

    pub(crate) fn mul_terms(&self, a: &Terms, b: &Terms) -> Terms {
        let ring = self.ring();
        let mut out = Terms::new();
        for (wa, ca) in a {
            let da = self.word_degree(wa);
            for (wb, cb) in b {
                if da + self.word_degree(wb) > self.truncation {
                    continue;
                }
                let w = wa.concat(wb);
                let c = ring.mul_mod(ca, cb, self.word_modulus(&w));
                self.add_term(&mut out, w, &c);
            }
        }
        out
    }

    /// Product of two elements, truncated.
    pub fn multiply(self: &Arc<Self>, u: &AlgebraElement, v: &AlgebraElement) -> Result<AlgebraElement> {
        if !self.owns(u) || !self.owns(v) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(AlgebraElement {
            algebra: Arc::clone(self),
            terms: self.mul_terms(&u.terms, &v.terms),
        })
    }

    fn owns(self: &Arc<Self>, u: &AlgebraElement) -> bool {
        Arc::ptr_eq(self, &u.algebra) || **self == *u.algebra
    }

    pub fn generator(self: &Arc<Self>, i: usize) -> AlgebraElement {
        AlgebraElement::word(self, Word::letter(i), self.ring().one())
    }

    pub fn generator_named(self: &Arc<Self>, name: &str) -> Result<AlgebraElement> {
        let i = self
            .module
            .index_of(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        Ok(self.generator(i))
    }

    /// Exact check of uv = (-1)^{pq} vu on all generator pairs (including
    /// u = v). Generator pairs suffice because they generate the algebra.
    pub fn is_graded_commutative(&self) -> (bool, Option<(usize, usize)>) {
        let ring = self.ring();
        for i in 0..self.generator_count() {
            for j in i..self.generator_count() {
                let p = self.degrees[i] * self.degrees[j];
                let sign = if p.is_multiple_of(2) { 1 } else { -1 };
                let m = gcd(self.moduli[i], self.moduli[j]);
                let m = gcd(m, ring.base_modulus());
                let nonzero = if i == j {
                    !ring.is_zero_mod(&ring.from_int(1 - sign), m)
                } else {
                    // xy and yx are distinct basis words with the same modulus
                    !ring.is_zero_mod(&ring.one(), m)
                };
                if nonzero {
                    return (false, Some((i, j)));
                }
            }
        }
        (true, None)
    }

    /// uv - (-1)^{pq} vu for homogeneous u, v (truncated product).
    pub fn graded_commutator(self: &Arc<Self>, u: &AlgebraElement, v: &AlgebraElement) -> Result<AlgebraElement> {
        let p = u.degree().unwrap_or(0);
        let q = v.degree().unwrap_or(0);
        let uv = self.multiply(u, v)?;
        let vu = self.multiply(v, u)?;
        Ok(if (p * q).is_multiple_of(2) { uv.sub(&vu) } else { uv.add(&vu) })
    }
}

/// An element of a truncated tensor algebra.
#[derive(Clone)]
pub struct AlgebraElement {
    algebra: Arc<TensorAlgebra>,
    terms: Terms,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra)
            && self.terms == other.terms
    }
}

impl Eq for AlgebraElement {}

impl AlgebraElement {
    pub fn zero(algebra: &Arc<TensorAlgebra>) -> Self {
        AlgebraElement {
            algebra: Arc::clone(algebra),
            terms: Terms::new(),
        }
    }

    pub fn one(algebra: &Arc<TensorAlgebra>) -> Self {
        Self::word(algebra, Word::unit(), algebra.ring().one())
    }

    /// `c · w`, reduced; words beyond the truncation give zero.
    pub fn word(algebra: &Arc<TensorAlgebra>, w: Word, c: RingElement) -> Self {
        let mut terms = Terms::new();
        if algebra.word_degree(&w) <= algebra.truncation {
            algebra.add_term(&mut terms, w, &c);
        }
        AlgebraElement {
            algebra: Arc::clone(algebra),
            terms,
        }
    }

    pub fn from_terms(algebra: &Arc<TensorAlgebra>, terms: impl IntoIterator<Item = (Word, RingElement)>) -> Self {
        let mut out = Self::zero(algebra);
        for (w, c) in terms {
            if algebra.word_degree(&w) <= algebra.truncation {
                algebra.add_term(&mut out.terms, w, &c);
            }
        }
        out
    }

    pub(crate) fn from_raw(algebra: &Arc<TensorAlgebra>, terms: Terms) -> Self {
        AlgebraElement {
            algebra: Arc::clone(algebra),
            terms,
        }
    }

    pub fn algebra(&self) -> &Arc<TensorAlgebra> {
        &self.algebra
    }

    pub fn terms(&self) -> &BTreeMap<Word, RingElement> {
        &self.terms
    }

    pub fn coefficient(&self, w: &Word) -> RingElement {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| self.algebra.ring().zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms; `None` for zero or inhomogeneous.
    pub fn degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|w| self.algebra.word_degree(w));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms.keys().all(|w| self.algebra.word_degree(w) == d)
    }

    pub fn homogeneous_part(&self, d: usize) -> Self {
        AlgebraElement {
            algebra: Arc::clone(&self.algebra),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| self.algebra.word_degree(w) == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(*self.algebra == *other.algebra, "algebra mismatch");
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            self.algebra.add_term(&mut terms, w.clone(), c);
        }
        AlgebraElement {
            algebra: Arc::clone(&self.algebra),
            terms,
        }
    }

    pub fn neg(&self) -> Self {
        let ring = self.algebra.ring();
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), ring.neg_mod(c, self.algebra.word_modulus(w))))
            .collect();
        AlgebraElement {
            algebra: Arc::clone(&self.algebra),
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &RingElement) -> Self {
        let ring = self.algebra.ring();
        let mut terms = Terms::new();
        for (w, a) in &self.terms {
            let v = ring.mul_mod(a, c, self.algebra.word_modulus(w));
            self.algebra.add_term(&mut terms, w.clone(), &v);
        }
        AlgebraElement {
            algebra: Arc::clone(&self.algebra),
            terms,
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&self.algebra.ring().from_int(k))
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let mut coeff = c.to_string();
            let negative = coeff.starts_with('-');
            if negative {
                coeff.remove(0);
            }
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let word = self.algebra.format_word(w);
            if w.is_unit() {
                write!(f, "{coeff}")?;
            } else if coeff == "1" {
                write!(f, "{word}")?;
            } else {
                write!(f, "{coeff}*{word}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An algebra map determined by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    source: Arc<TensorAlgebra>,
    target: Arc<TensorAlgebra>,
    images: Vec<AlgebraElement>,
}

impl AlgebraMorphism {
    /// Checks that each image is homogeneous of the generator's degree and is
    /// killed by the generator's annihilator.
    pub fn new(source: &Arc<TensorAlgebra>, target: &Arc<TensorAlgebra>, images: Vec<AlgebraElement>) -> Result<Self> {
        if images.len() != source.generator_count() {
            return Err(Error::ImageCount {
                expected: source.generator_count(),
                got: images.len(),
            });
        }
        let ring = source.ring();
        if target.ring() != ring {
            return Err(Error::RingMismatch(ring, target.ring()));
        }
        for (i, img) in images.iter().enumerate() {
            if !target.owns(img) {
                return Err(Error::AlgebraMismatch);
            }
            let name = source.generator_name(i).to_string();
            if !img.is_homogeneous_of(source.generator_degree(i)) {
                return Err(Error::DegreeMismatch {
                    generator: name,
                    expected: source.generator_degree(i),
                });
            }
            let m = source.generator_modulus(i);
            if m > 0 && !img.scale(&ring.from_int(m as i64)).is_zero() {
                return Err(Error::AnnihilatorViolation {
                    generator: name,
                    annihilator: source.module().generators()[i].annihilator,
                });
            }
        }
        Ok(AlgebraMorphism {
            source: Arc::clone(source),
            target: Arc::clone(target),
            images,
        })
    }

    pub fn identity(algebra: &Arc<TensorAlgebra>) -> Self {
        AlgebraMorphism {
            source: Arc::clone(algebra),
            target: Arc::clone(algebra),
            images: (0..algebra.generator_count()).map(|i| algebra.generator(i)).collect(),
        }
    }

    pub fn source(&self) -> &Arc<TensorAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<TensorAlgebra> {
        &self.target
    }

    pub fn images(&self) -> &[AlgebraElement] {
        &self.images
    }

    pub fn image_of_generator(&self, i: usize) -> &AlgebraElement {
        &self.images[i]
    }

    pub fn apply_word(&self, w: &Word) -> AlgebraElement {
        let mut acc: Terms = Terms::new();
        self.target.add_term(&mut acc, Word::unit(), &self.target.ring().one());
        for &i in &w.0 {
            acc = self.target.mul_terms(&acc, &self.images[i].terms);
            if acc.is_empty() {
                break;
            }
        }
        AlgebraElement::from_raw(&self.target, acc)
    }

    /// Extends multiplicatively and linearly.
    pub fn apply(&self, u: &AlgebraElement) -> Result<AlgebraElement> {
        if !self.source.owns(u) {
            return Err(Error::AlgebraMismatch);
        }
        let ring = self.target.ring();
        let mut out = Terms::new();
        for (w, c) in &u.terms {
            for (tw, tc) in self.apply_word(w).terms {
                let v = ring.mul_mod(&tc, c, self.target.word_modulus(&tw));
                self.target.add_term(&mut out, tw, &v);
            }
        }
        Ok(AlgebraElement::from_raw(&self.target, out))
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &AlgebraMorphism) -> Result<AlgebraMorphism> {
        if *self.target != *then.source {
            return Err(Error::AlgebraMismatch);
        }
        let images = self
            .images
            .iter()
            .map(|img| then.apply(img))
            .collect::<Result<Vec<_>>>()?;
        Ok(AlgebraMorphism {
            source: Arc::clone(&self.source),
            target: Arc::clone(&then.target),
            images,
        })
    }
}

/// `algebra_morphism` in operation form.
pub fn algebra_morphism(
    src: &Arc<TensorAlgebra>,
    dst: &Arc<TensorAlgebra>,
    images: Vec<AlgebraElement>,
) -> Result<AlgebraMorphism> {
    AlgebraMorphism::new(src, dst, images)
}

/// A k-fold free product T(N₁) ∗ ⋯ ∗ T(N_k) = T(N₁ ⊕ ⋯ ⊕ N_k) with its
/// canonical inclusions.
#[derive(Clone, Debug)]
pub struct FreeProduct {
    pub algebra: Arc<TensorAlgebra>,
    pub inclusions: Vec<AlgebraMorphism>,
}

impl FreeProduct {
    pub fn left(&self) -> &AlgebraMorphism {
        &self.inclusions[0]
    }

    pub fn right(&self) -> &AlgebraMorphism {
        &self.inclusions[1]
    }
}

/// Factor i is tagged with i+1 primes: x', x'', x''', ...
pub fn free_product_of(factors: &[&Arc<TensorAlgebra>]) -> Result<FreeProduct> {
    let Some(first) = factors.first() else {
        return Err(Error::AlgebraMismatch);
    };
    let truncation = first.truncation;
    if factors.iter().any(|f| f.truncation != truncation) {
        return Err(Error::AlgebraMismatch);
    }
    let tags: Vec<String> = (1..=factors.len()).map(|k| "'".repeat(k)).collect();
    let parts: Vec<(&GradedModule, &str)> = factors
        .iter()
        .zip(&tags)
        .map(|(f, t)| (&f.module, t.as_str()))
        .collect();
    let module = GradedModule::direct_sum_tagged(&parts)?;
    let algebra = TensorAlgebra::new(module, truncation);
    let mut offset = 0;
    let mut inclusions = Vec::new();
    for f in factors {
        let images = (0..f.generator_count()).map(|i| algebra.generator(offset + i)).collect();
        inclusions.push(AlgebraMorphism {
            source: Arc::clone(f),
            target: Arc::clone(&algebra),
            images,
        });
        offset += f.generator_count();
    }
    Ok(FreeProduct { algebra, inclusions })
}

pub fn free_product(a: &Arc<TensorAlgebra>, b: &Arc<TensorAlgebra>) -> Result<FreeProduct> {
    free_product_of(&[a, b])
}

/// The k-fold graded tensor power A ⊗ ⋯ ⊗ A with the Koszul sign rule.
#[derive(Clone, Debug)]
pub struct TensorPower {
    algebra: Arc<TensorAlgebra>,
    factors: usize,
}

/// An element of a [`TensorPower`]; keys hold one word per factor.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Tensor {
    terms: BTreeMap<Vec<Word>, RingElement>,
}

pub fn tensor_square(algebra: &Arc<TensorAlgebra>) -> TensorPower {
    TensorPower::new(algebra, 2)
}

impl TensorPower {
    pub fn new(algebra: &Arc<TensorAlgebra>, factors: usize) -> Self {
        TensorPower {
            algebra: Arc::clone(algebra),
            factors,
        }
    }

    pub fn algebra(&self) -> &Arc<TensorAlgebra> {
        &self.algebra
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub fn key_modulus(&self, key: &[Word]) -> u64 {
        key.iter()
            .fold(self.algebra.ring().base_modulus(), |acc, w| gcd(acc, self.algebra.word_modulus(w)))
    }

    pub fn key_degree(&self, key: &[Word]) -> usize {
        key.iter().map(|w| self.algebra.word_degree(w)).sum()
    }

    pub fn zero(&self) -> Tensor {
        Tensor::default()
    }

    pub fn one(&self) -> Tensor {
        self.pure(vec![Word::unit(); self.factors], self.algebra.ring().one())
    }

    pub fn pure(&self, key: Vec<Word>, c: RingElement) -> Tensor {
        assert_eq!(key.len(), self.factors, "wrong number of tensor factors");
        let mut t = Tensor::default();
        self.add_term(&mut t, key, &c);
        t
    }

    pub fn add_term(&self, t: &mut Tensor, key: Vec<Word>, c: &RingElement) {
        let ring = self.algebra.ring();
        let m = self.key_modulus(&key);
        match t.terms.get_mut(&key) {
            Some(existing) => {
                let s = ring.add_mod(existing, c, m);
                if ring.is_zero_mod(&s, m) {
                    t.terms.remove(&key);
                } else {
                    *existing = s;
                }
            }
            None => {
                let r = ring.reduce(c.clone(), m);
                if !ring.is_zero_mod(&r, m) {
                    t.terms.insert(key, r);
                }
            }
        }
    }

    pub fn add(&self, a: &Tensor, b: &Tensor) -> Tensor {
        let mut out = a.clone();
        for (k, c) in &b.terms {
            self.add_term(&mut out, k.clone(), c);
        }
        out
    }

    pub fn neg(&self, a: &Tensor) -> Tensor {
        let ring = self.algebra.ring();
        Tensor {
            terms: a
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), ring.neg_mod(c, self.key_modulus(k))))
                .collect(),
        }
    }

    pub fn sub(&self, a: &Tensor, b: &Tensor) -> Tensor {
        self.add(a, &self.neg(b))
    }

    /// (a₁⊗⋯⊗a_k)(b₁⊗⋯⊗b_k) = (-1)^{Σ_{i>j} |aᵢ||bⱼ|} a₁b₁⊗⋯⊗a_kb_k
    pub fn multiply(&self, a: &Tensor, b: &Tensor) -> Tensor {
        let ring = self.algebra.ring();
        let mut out = Tensor::default();
        for (ka, ca) in &a.terms {
            let da: Vec<usize> = ka.iter().map(|w| self.algebra.word_degree(w)).collect();
            let total_a: usize = da.iter().sum();
            for (kb, cb) in &b.terms {
                let db: Vec<usize> = kb.iter().map(|w| self.algebra.word_degree(w)).collect();
                if total_a + db.iter().sum::<usize>() > self.algebra.truncation {
                    continue;
                }
                let mut exponent = 0usize;
                let mut passed = 0usize; // Σ_{j<i} |bⱼ|
                for i in 0..self.factors {
                    exponent += da[i] * passed;
                    passed += db[i];
                }
                let key: Vec<Word> = ka.iter().zip(kb).map(|(x, y)| x.concat(y)).collect();
                let m = self.key_modulus(&key);
                let mut c = ring.mul_mod(ca, cb, m);
                if exponent % 2 == 1 {
                    c = ring.neg_mod(&c, m);
                }
                self.add_term(&mut out, key, &c);
            }
        }
        out
    }

    /// Applies a linear map to one tensor slot; no sign appears because every
    /// map used here preserves degree.
    pub fn map_slot(&self, t: &Tensor, slot: usize, f: impl Fn(&Word) -> Tensor, target: &TensorPower) -> Tensor {
        let ring = self.algebra.ring();
        let mut out = Tensor::default();
        for (key, c) in &t.terms {
            let image = f(&key[slot]);
            for (ik, ic) in &image.terms {
                let mut nk: Vec<Word> = key[..slot].to_vec();
                nk.extend(ik.iter().cloned());
                nk.extend(key[slot + 1..].iter().cloned());
                let m = target.key_modulus(&nk);
                let v = ring.mul_mod(ic, c, m);
                target.add_term(&mut out, nk, &v);
            }
        }
        out
    }

    pub fn format(&self, t: &Tensor) -> String {
        if t.terms.is_empty() {
            return "0".to_string();
        }
        t.terms
            .iter()
            .map(|(k, c)| {
                let body: Vec<String> = k.iter().map(|w| self.algebra.format_word(w)).collect();
                if c.is_one() {
                    body.join("⊗")
                } else {
                    format!("{c}*{}", body.join("⊗"))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Tensor {
    pub fn terms(&self) -> &BTreeMap<Vec<Word>, RingElement> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(ring: RingSpec, gens: &[(&str, usize, u64)], d: usize) -> Arc<TensorAlgebra> {
        TensorAlgebra::new(GradedModule::from_triples(ring, gens).unwrap(), d)
    }

    #[test]
    fn polynomial_basis() {
        let a = alg(RingSpec::Rationals, &[("x", 2, 0)], 6);
        let sizes: Vec<usize> = (0..=6).map(|d| a.basis(d).len()).collect();
        assert_eq!(sizes, vec![1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(a.basis(6), &[Word(vec![0, 0, 0])]);
    }

    #[test]
    fn free_words_in_degree_two() {
        let a = alg(RingSpec::Rationals, &[("x", 1, 0), ("y", 1, 0)], 2);
        let names: Vec<String> = a.basis(2).iter().map(|w| a.format_word(w)).collect();
        assert_eq!(names, vec!["x^2", "x*y", "y*x", "y^2"]);
    }

    #[test]
    fn coprime_torsion_kills_mixed_words() {
        let a = alg(RingSpec::Integers, &[("x", 2, 3), ("y", 4, 5)], 6);
        let xy = Word(vec![0, 1]);
        assert!(a.basis(6).contains(&xy));
        assert_eq!(a.word_modulus(&xy), 1);
        let p = a.multiply(&a.generator(0), &a.generator(1)).unwrap();
        assert!(p.is_zero());
        assert_eq!(a.word_modulus(&Word(vec![0, 0])), 3);
        assert_eq!(a.word_modulus(&Word::unit()), 0);
    }

    #[test]
    fn multiplication_examples() {
        let a = alg(RingSpec::Rationals, &[("x", 2, 0)], 6);
        let x = a.generator(0);
        assert_eq!(a.multiply(&x, &x).unwrap().to_string(), "x^2");

        let b = alg(RingSpec::Rationals, &[("x", 1, 0), ("y", 1, 0)], 4);
        let (x, y) = (b.generator(0), b.generator(1));
        let p = b.multiply(&x.add(&y), &x).unwrap();
        assert_eq!(p, b.multiply(&x, &x).unwrap().add(&b.multiply(&y, &x).unwrap()));

        assert_eq!(a.multiply(&a.generator(0), &b.generator(0)), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn truncation_discards() {
        let a = alg(RingSpec::Rationals, &[("x", 2, 0)], 4);
        let x2 = a.multiply(&a.generator(0), &a.generator(0)).unwrap();
        assert!(a.multiply(&x2, &a.generator(0)).unwrap().is_zero());
    }

    #[test]
    fn free_product_tags() {
        let a = alg(RingSpec::Rationals, &[("X", 2, 0)], 6);
        let fp = free_product(&a, &a).unwrap();
        let m = fp.algebra.module();
        assert_eq!(m.generators()[0].name, "X'");
        assert_eq!(m.generators()[1].name, "X''");
        assert!(m.generators().iter().all(|g| g.degree == 2));
        let x = fp.right().apply(&a.generator(0)).unwrap();
        assert_eq!(x, fp.algebra.generator(1));

        let zero = alg(RingSpec::Rationals, &[], 6);
        let fp = free_product(&zero, &a).unwrap();
        assert_eq!(fp.algebra.generator_count(), 1);
        assert_eq!(fp.algebra.generator_degree(0), 2);

        let b = alg(RingSpec::Integers, &[("x", 2, 3)], 6);
        let c = alg(RingSpec::Integers, &[("y", 4, 5)], 6);
        let fp = free_product(&b, &c).unwrap();
        let expected = GradedModule::from_triples(RingSpec::Integers, &[("x'", 2, 3), ("y''", 4, 5)]).unwrap();
        assert_eq!(fp.algebra.module(), &expected);
    }

    #[test]
    fn koszul_signs() {
        for (deg, sign) in [(3, -1), (2, 1)] {
            let a = alg(RingSpec::Rationals, &[("x", deg, 0)], 2 * deg);
            let sq = tensor_square(&a);
            let one = RingSpec::Rationals.one();
            let x1 = sq.pure(vec![Word::letter(0), Word::unit()], one.clone());
            let x2 = sq.pure(vec![Word::unit(), Word::letter(0)], one.clone());
            let xx = sq.pure(vec![Word::letter(0), Word::letter(0)], one.clone());
            assert_eq!(sq.multiply(&x1, &x2), xx);
            let expected = if sign == 1 { xx.clone() } else { sq.neg(&xx) };
            assert_eq!(sq.multiply(&x2, &x1), expected);
        }
    }

    #[test]
    fn commutativity_examples() {
        assert!(!alg(RingSpec::Rationals, &[("x", 3, 0)], 6).is_graded_commutative().0);
        assert!(alg(RingSpec::PrimeField(2), &[("x", 3, 0)], 6).is_graded_commutative().0);
        let (ok, ce) = alg(RingSpec::Integers, &[("x", 2, 3), ("y", 4, 6)], 6).is_graded_commutative();
        assert!(!ok);
        assert_eq!(ce, Some((0, 1)));
        assert!(alg(RingSpec::Integers, &[("x", 2, 3), ("y", 4, 5)], 6).is_graded_commutative().0);
    }

    #[test]
    fn morphisms() {
        let a = alg(RingSpec::Rationals, &[("X", 2, 0)], 8);
        let x = a.generator(0);
        let double = AlgebraMorphism::new(&a, &a, vec![x.scale_int(2)]).unwrap();
        let x2 = a.multiply(&x, &x).unwrap();
        assert_eq!(double.apply(&x2).unwrap(), x2.scale_int(4));
        assert_eq!(
            AlgebraMorphism::identity(&a).apply(&x2).unwrap(),
            x2
        );
        assert_eq!(double.apply(&AlgebraElement::one(&a)).unwrap(), AlgebraElement::one(&a));

        let nu = AlgebraMorphism::new(&a, &a, vec![x.neg()]).unwrap();
        assert_eq!(nu.apply(&x2).unwrap(), x2);

        assert!(matches!(
            AlgebraMorphism::new(&a, &a, vec![x2.clone()]),
            Err(Error::DegreeMismatch { .. })
        ));

        let t = alg(RingSpec::Integers, &[("x", 2, 3)], 4);
        let free = alg(RingSpec::Integers, &[("y", 2, 0)], 4);
        assert!(matches!(
            AlgebraMorphism::new(&t, &free, vec![free.generator(0)]),
            Err(Error::AnnihilatorViolation { .. })
        ));
        // 3 | 6, so x ↦ y is fine into ℤ/3 but not into ℤ/6? 3·y ≠ 0 in ℤ/6
        let z6 = alg(RingSpec::Integers, &[("y", 2, 6)], 4);
        assert!(AlgebraMorphism::new(&t, &z6, vec![z6.generator(0).scale_int(2)]).is_ok());
        assert!(AlgebraMorphism::new(&t, &z6, vec![z6.generator(0)]).is_err());
    }

    #[test]
    fn display_forms() {
        let a = alg(RingSpec::Integers, &[("x", 3, 4), ("y", 1, 0)], 9);
        let x = a.generator(0);
        assert_eq!(x.neg().to_string(), "3*x");
        let y = a.generator(1);
        let e = a.multiply(&y, &y).unwrap().sub(&a.multiply(&y, &y).unwrap().scale_int(3));
        assert_eq!(e.to_string(), "-2*y^2");
        assert_eq!(AlgebraElement::zero(&a).to_string(), "0");
    }
}
