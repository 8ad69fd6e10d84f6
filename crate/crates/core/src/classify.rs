//! Classification: ν = χ, χ multiplicative and graded commutativity are
//! evaluated independently and compared with the module-level predicates.

use std::fmt;

use serde::Serialize;

use crate::algebra::Word;
use crate::coalgebra::trivial_coalgebra;
use crate::cogroup::{tcm, Cogroup};
use crate::convolution::{antipode, is_algebra_morphism, GradedMap};
use crate::error::Result;
use crate::graded::GradedModule;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub max_degree: usize,
    pub nu_eq_chi: bool,
    pub chi_is_morphism: bool,
    pub graded_commutative: bool,
    /// Locally at most singly generated.
    pub module_in_s: bool,
    /// Membership in F; `None` unless the ring is a field.
    pub module_in_f: Option<bool>,
    /// Closed form "n even or ch(R/𝔞) = 2" for single-generator modules.
    pub closed_form: Option<bool>,
    pub consistent: bool,
    pub witness: Option<String>,
}

/// Default truncation for classification: 2·(max generator degree) + 2.
pub fn default_truncation(module: &GradedModule) -> usize {
    2 * module.max_degree() + 2
}

/// Compares ν and χ on every word of degree ≤ `max_degree`; returns the first
/// word where they differ.
pub fn nu_equals_chi(cogroup: &Cogroup, max_degree: usize) -> (bool, Option<Word>) {
    let chi = antipode(cogroup);
    nu_equals_given_chi(cogroup, &chi, max_degree)
}

fn nu_equals_given_chi(cogroup: &Cogroup, chi: &GradedMap, max_degree: usize) -> (bool, Option<Word>) {
    let a = cogroup.algebra();
    let nu = cogroup.inverse();
    for w in a.positive_words_upto(max_degree) {
        if nu.apply_word(w) != chi.evaluate(w) {
            return (false, Some(w.clone()));
        }
    }
    (true, None)
}

/// Evaluates the three algebra predicates and the module predicates
/// independently and records whether they agree.
pub fn equivalence_report(cogroup: &Cogroup, max_degree: usize) -> ClassificationReport {
    let a = cogroup.algebra();
    let d = max_degree.min(a.truncation());
    let chi = antipode(cogroup);
    let (nu_eq_chi, nu_witness) = nu_equals_given_chi(cogroup, &chi, d);
    let restricted = GradedMap::from_table(
        a,
        a,
        d,
        chi.table()
            .iter()
            .filter(|(w, _)| a.word_degree(w) <= d)
            .map(|(w, v)| (w.clone(), v.clone()))
            .collect(),
    );
    let (chi_is_morphism, hom_witness) = is_algebra_morphism(&restricted, cogroup);
    let (graded_commutative, pair) = a.is_graded_commutative();
    let module = cogroup.coalgebra().module();
    let (module_in_s, locality) = module.is_locally_at_most_singly_generated();
    let module_in_f = module.in_category_f().ok();

    let consistent = nu_eq_chi == chi_is_morphism
        && chi_is_morphism == graded_commutative
        && graded_commutative == module_in_s
        && module_in_f.is_none_or(|f| f == module_in_s);

    let witness = if let Some(w) = nu_witness {
        Some(format!(
            "nu({0}) = {1}, chi({0}) = {2}",
            a.format_word(&w),
            cogroup.inverse().apply_word(&w),
            chi.evaluate(&w)
        ))
    } else if let Some((u, v)) = hom_witness {
        Some(format!("chi({}*{}) differs from chi({})*chi({})", a.format_word(&u), a.format_word(&v), a.format_word(&u), a.format_word(&v)))
    } else if let Some((i, j)) = pair {
        Some(format!("{}, {} do not graded-commute", a.generator_name(i), a.generator_name(j)))
    } else {
        locality.map(|l| l.to_string())
    };

    ClassificationReport {
        max_degree: d,
        nu_eq_chi,
        chi_is_morphism,
        graded_commutative,
        module_in_s,
        module_in_f,
        closed_form: None,
        consistent,
        witness,
    }
}

/// Builds T_CM(C(N)) at `max_degree` and reports; single-generator modules
/// are also checked against the closed form.
pub fn classify_module(module: &GradedModule, max_degree: usize) -> Result<ClassificationReport> {
    let cogroup = tcm(&trivial_coalgebra(module), max_degree)?;
    let mut report = equivalence_report(&cogroup, max_degree);
    if let [g] = module.generators() {
        let closed = GradedModule::single_summand_closed_form(module.ring(), g.annihilator, g.degree);
        report.closed_form = Some(closed);
        report.consistent &= closed == report.graded_commutative;
    }
    Ok(report)
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<bool>| v.map_or("n/a".to_string(), |b| b.to_string());
        writeln!(f, "nu = chi: {}", self.nu_eq_chi)?;
        writeln!(f, "chi multiplicative: {}", self.chi_is_morphism)?;
        writeln!(f, "graded commutative: {}", self.graded_commutative)?;
        writeln!(f, "locally at most singly generated: {}", self.module_in_s)?;
        writeln!(f, "in F: {}", opt(self.module_in_f))?;
        if self.closed_form.is_some() {
            writeln!(f, "closed form: {}", opt(self.closed_form))?;
        }
        write!(f, "consistent: {}", self.consistent)?;
        if let Some(w) = &self.witness {
            write!(f, "\nwitness: {w}")?;
        }
        Ok(())
    }
}
