//! Positively graded modules presented as finite sums of shifted cyclic
//! modules ⊕ R/(aᵢ)[nᵢ], and the locality predicates on them.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{factorize, gcd, RingSpec};

/// One cyclic summand R/(annihilator) placed in a single degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CyclicGenerator {
    pub name: String,
    pub degree: usize,
    /// 0 means free.
    pub annihilator: u64,
}

/// N = ⊕ R/(aᵢ)[nᵢ] over a fixed base ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedModule {
    ring: RingSpec,
    generators: Vec<CyclicGenerator>,
}

impl GradedModule {
    pub fn zero(ring: RingSpec) -> Self {
        GradedModule {
            ring,
            generators: Vec::new(),
        }
    }

    pub fn new(ring: RingSpec, generators: Vec<CyclicGenerator>) -> Result<Self> {
        let ring = ring.validate()?;
        let mut seen = HashSet::new();
        for g in &generators {
            if g.degree == 0 {
                return Err(Error::NonPositiveDegree(0));
            }
            if !ring.is_legal_annihilator(g.annihilator) {
                return Err(Error::IllegalAnnihilator {
                    ring,
                    annihilator: g.annihilator,
                });
            }
            if !seen.insert(g.name.as_str()) {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(GradedModule { ring, generators })
    }

    /// Convenience constructor from `(name, degree, annihilator)` triples.
    pub fn from_triples(ring: RingSpec, gens: &[(&str, usize, u64)]) -> Result<Self> {
        Self::new(
            ring,
            gens.iter()
                .map(|&(name, degree, annihilator)| CyclicGenerator {
                    name: name.to_string(),
                    degree,
                    annihilator,
                })
                .collect(),
        )
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn generators(&self) -> &[CyclicGenerator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn max_degree(&self) -> usize {
        self.generators.iter().map(|g| g.degree).max().unwrap_or(0)
    }

    /// Coefficient modulus of generator `i` (see [`RingSpec::cyclic_modulus`]).
    pub fn modulus(&self, i: usize) -> u64 {
        self.ring.cyclic_modulus(self.generators[i].annihilator)
    }

    /// Places an ungraded list of cyclic modules R/(aᵢ) in degree `n`.
    pub fn shift(ring: RingSpec, cyclic: &[(&str, u64)], n: i64) -> Result<Self> {
        if n <= 0 {
            return Err(Error::NonPositiveDegree(n));
        }
        let gens: Vec<(&str, usize, u64)> =
            cyclic.iter().map(|&(name, a)| (name, n as usize, a)).collect();
        Self::from_triples(ring, &gens)
    }

    /// Degreewise direct sum. Clashing names get `'` (left) and `''` (right).
    pub fn direct_sum(&self, other: &GradedModule) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring, other.ring));
        }
        let clash: HashSet<&str> = self
            .generators
            .iter()
            .map(|g| g.name.as_str())
            .filter(|n| other.index_of(n).is_some())
            .collect();
        let tag = |g: &CyclicGenerator, suffix: &str| CyclicGenerator {
            name: if clash.contains(g.name.as_str()) {
                format!("{}{suffix}", g.name)
            } else {
                g.name.clone()
            },
            ..g.clone()
        };
        let mut gens: Vec<_> = self.generators.iter().map(|g| tag(g, "'")).collect();
        gens.extend(other.generators.iter().map(|g| tag(g, "''")));
        Self::new(self.ring, gens)
    }

    /// Direct sum that always tags every name, used for free products.
    pub(crate) fn direct_sum_tagged(parts: &[(&GradedModule, &str)]) -> Result<Self> {
        let ring = parts.first().map_or(RingSpec::Integers, |p| p.0.ring);
        let mut gens = Vec::new();
        for (m, suffix) in parts {
            if m.ring != ring {
                return Err(Error::RingMismatch(ring, m.ring));
            }
            gens.extend(m.generators.iter().map(|g| CyclicGenerator {
                name: format!("{}{suffix}", g.name),
                ..g.clone()
            }));
        }
        Self::new(ring, gens)
    }

    /// Summands surviving localisation at each relevant prime, as
    /// (generator index, local characteristic) pairs.
    fn local_summands(&self) -> LocalPicture {
        let mut free = Vec::new();
        let mut by_prime: BTreeMap<u64, Vec<(usize, u64)>> = BTreeMap::new();
        for (i, _) in self.generators.iter().enumerate() {
            let m = self.modulus(i);
            if m == 0 {
                free.push(i);
            } else {
                for (p, e) in factorize(m) {
                    by_prime.entry(p).or_default().push((i, p.pow(e)));
                }
            }
        }
        LocalPicture { free, by_prime }
    }

    /// Whether every localisation at a maximal ideal is 0 or a single shifted
    /// cyclic R_𝔪/𝔞_𝔪[n], with n even unless that quotient has characteristic 2.
    pub fn is_locally_at_most_singly_generated(&self) -> (bool, Option<LocalityWitness>) {
        if self.ring.is_field() {
            let ch = self.ring.characteristic();
            return match self.generators.as_slice() {
                [] => (true, None),
                [g] => {
                    if g.degree % 2 == 0 || ch == 2 {
                        (true, None)
                    } else {
                        (
                            false,
                            Some(LocalityWitness::Parity {
                                prime: None,
                                generator: g.name.clone(),
                                degree: g.degree,
                                local_characteristic: ch,
                            }),
                        )
                    }
                }
                [a, b, ..] => (
                    false,
                    Some(LocalityWitness::TwoSummands {
                        prime: None,
                        first: a.name.clone(),
                        second: b.name.clone(),
                    }),
                ),
            };
        }

        let pic = self.local_summands();
        let name = |i: usize| self.generators[i].name.clone();
        // free summands over ℤ survive at every prime
        if pic.free.len() >= 2 {
            return (
                false,
                Some(LocalityWitness::TwoSummands {
                    prime: None,
                    first: name(pic.free[0]),
                    second: name(pic.free[1]),
                }),
            );
        }
        if let [f] = pic.free.as_slice() {
            if let Some((&p, s)) = pic.by_prime.iter().next() {
                return (
                    false,
                    Some(LocalityWitness::TwoSummands {
                        prime: Some(p),
                        first: name(*f),
                        second: name(s[0].0),
                    }),
                );
            }
            let g = &self.generators[*f];
            if g.degree % 2 == 1 {
                return (
                    false,
                    Some(LocalityWitness::Parity {
                        prime: None,
                        generator: g.name.clone(),
                        degree: g.degree,
                        local_characteristic: 0,
                    }),
                );
            }
            return (true, None);
        }
        for (&p, summands) in &pic.by_prime {
            match summands.as_slice() {
                [(i, ch)] => {
                    let g = &self.generators[*i];
                    if g.degree % 2 == 1 && *ch != 2 {
                        return (
                            false,
                            Some(LocalityWitness::Parity {
                                prime: Some(p),
                                generator: g.name.clone(),
                                degree: g.degree,
                                local_characteristic: *ch,
                            }),
                        );
                    }
                }
                [(a, _), (b, _), ..] => {
                    return (
                        false,
                        Some(LocalityWitness::TwoSummands {
                            prime: Some(p),
                            first: name(*a),
                            second: name(*b),
                        }),
                    )
                }
                [] => {}
            }
        }
        (true, None)
    }

    /// Membership in the subcategory of 0, R[n] with n even (all n in
    /// characteristic 2). Only defined over fields.
    pub fn in_category_f(&self) -> Result<bool> {
        if !self.ring.is_field() {
            return Err(Error::NotAField(self.ring));
        }
        let ch2 = self.ring.characteristic() == 2;
        Ok(match self.generators.as_slice() {
            [] => true,
            [g] => g.annihilator == 0 && (g.degree % 2 == 0 || ch2),
            _ => false,
        })
    }

    /// Closed form for a single cyclic summand R/(a)[n]: commutative tensor
    /// algebra iff n is even or R/(a) has characteristic 2.
    pub fn single_summand_closed_form(ring: RingSpec, annihilator: u64, degree: usize) -> bool {
        degree.is_multiple_of(2) || ring.cyclic_modulus(annihilator) == 2
    }
}

struct LocalPicture {
    free: Vec<usize>,
    by_prime: BTreeMap<u64, Vec<(usize, u64)>>,
}

/// Why a module fails to be locally at most singly generated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LocalityWitness {
    /// Two summands survive at `prime` (`None`: at every prime / over a field).
    TwoSummands {
        prime: Option<u64>,
        first: String,
        second: String,
    },
    /// The single local summand sits in odd degree with characteristic ≠ 2.
    Parity {
        prime: Option<u64>,
        generator: String,
        degree: usize,
        local_characteristic: u64,
    },
}

impl fmt::Display for LocalityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = |p: &Option<u64>| match p {
            Some(p) => format!("at p={p}"),
            None => "at every prime".to_string(),
        };
        match self {
            LocalityWitness::TwoSummands { prime, first, second } => {
                write!(f, "{first} and {second} both survive {}", at(prime))
            }
            LocalityWitness::Parity {
                prime,
                generator,
                degree,
                local_characteristic,
            } => write!(
                f,
                "{generator} has odd degree {degree} with local characteristic {local_characteristic} {}",
                at(prime)
            ),
        }
    }
}

impl fmt::Display for GradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .generators
            .iter()
            .map(|g| {
                if g.annihilator == 0 {
                    format!("{}(deg {})", g.name, g.degree)
                } else {
                    format!("{}(deg {}, ann {})", g.name, g.degree, g.annihilator)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Whether two cyclic annihilators are comaximal over the ring.
pub fn coprime_annihilators(ring: RingSpec, a: u64, b: u64) -> bool {
    gcd(ring.cyclic_modulus(a), ring.cyclic_modulus(b)) == 1
}
