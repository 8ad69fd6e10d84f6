//! Line-oriented input language:
//!
//! ```text
//! ring (Z | Q | Zmod <n> | Fp <p>)
//! generator <name> degree <d> [ann <m>]
//! coproduct <x> = [<int>] <y> * <z> { + [<int>] <y> * <z> }
//! ```
//!
//! `#` starts a comment. Coproduct coefficients are integers mapped into the ring.

use std::collections::BTreeMap;
use std::fmt;

use crate::coalgebra::CoalgebraPresentation;
use crate::error::Error;
use crate::graded::{CyclicGenerator, GradedModule};
use crate::ring::RingSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// One `c · y ⊗ z` term of a coproduct line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoproductEntry {
    pub generator: String,
    pub coefficient: i64,
    pub left: String,
    pub right: String,
}

/// Where a declaration appeared in the source text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug)]
pub struct ProblemSpec {
    pub ring: RingSpec,
    pub module: GradedModule,
    pub coproduct: Vec<CoproductEntry>,
    /// Declaration site of each generator, by name.
    pub positions: BTreeMap<String, Position>,
}

impl PartialEq for ProblemSpec {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.module == other.module && self.coproduct == other.coproduct
    }
}

impl Eq for ProblemSpec {}

impl ProblemSpec {
    pub fn coalgebra(&self) -> CoalgebraPresentation {
        build_coalgebra(&self.module, &self.coproduct).expect("validated while parsing")
    }
}

fn build_coalgebra(module: &GradedModule, entries: &[CoproductEntry]) -> crate::error::Result<CoalgebraPresentation> {
    let table: Vec<(&str, i64, &str, &str)> = entries
        .iter()
        .map(|e| (e.generator.as_str(), e.coefficient, e.left.as_str(), e.right.as_str()))
        .collect();
    CoalgebraPresentation::with_coproduct(module.clone(), &table)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Int(i64),
    Sym(char),
}

struct Token {
    tok: Tok,
    column: usize,
    text: String,
}

fn tokenize(line: &str, line_no: usize) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Word(text.clone()),
                column,
                text,
            });
        } else if c.is_ascii_digit() || (c == '-' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let v = text.parse::<i64>().map_err(|_| ParseError {
                line: line_no,
                column,
                message: format!("integer out of range: {text}"),
            })?;
            out.push(Token {
                tok: Tok::Int(v),
                column,
                text,
            });
        } else if matches!(c, '=' | '*' | '+') {
            i += 1;
            out.push(Token {
                tok: Tok::Sym(c),
                column,
                text: c.to_string(),
            });
        } else {
            return Err(ParseError {
                line: line_no,
                column,
                message: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

struct Cursor<'a> {
    tokens: &'a [Token],
    pos: usize,
    line: usize,
    end_column: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self, expected: &str) -> Result<&'a Token, ParseError> {
        let t = self
            .tokens
            .get(self.pos)
            .ok_or_else(|| self.err(self.end_column, format!("expected {expected}, found end of line")))?;
        self.pos += 1;
        Ok(t)
    }

    fn word(&mut self, expected: &str) -> Result<(&'a str, usize), ParseError> {
        let t = self.next(expected)?;
        match &t.tok {
            Tok::Word(w) => Ok((w.as_str(), t.column)),
            _ => Err(self.err(t.column, format!("expected {expected}, found '{}'", t.text))),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        let t = self.next(&format!("'{kw}'"))?;
        match &t.tok {
            Tok::Word(w) if w == kw => Ok(()),
            _ => Err(self.err(t.column, format!("expected '{kw}', found '{}'", t.text))),
        }
    }

    fn int(&mut self, expected: &str) -> Result<(i64, usize), ParseError> {
        let t = self.next(expected)?;
        match t.tok {
            Tok::Int(v) => Ok((v, t.column)),
            _ => Err(self.err(t.column, format!("expected {expected}, found '{}'", t.text))),
        }
    }

    fn sym(&mut self, c: char) -> Result<(), ParseError> {
        let t = self.next(&format!("'{c}'"))?;
        match t.tok {
            Tok::Sym(s) if s == c => Ok(()),
            _ => Err(self.err(t.column, format!("expected '{c}', found '{}'", t.text))),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(self.err(t.column, format!("unexpected '{}'", t.text))),
        }
    }
}

pub fn parse_spec(text: &str) -> Result<ProblemSpec, ParseError> {
    let mut ring: Option<RingSpec> = None;
    let mut generators: Vec<CyclicGenerator> = Vec::new();
    let mut positions: BTreeMap<String, Position> = BTreeMap::new();
    let mut coproduct: Vec<CoproductEntry> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens = tokenize(raw, line)?;
        if tokens.is_empty() {
            continue;
        }
        let mut cur = Cursor {
            tokens: &tokens,
            pos: 0,
            line,
            end_column: raw.split('#').next().unwrap_or("").trim_end().chars().count() + 1,
        };
        let (head, head_col) = cur.word("a declaration")?;
        match head {
            "ring" => {
                if ring.is_some() {
                    return Err(cur.err(head_col, "ring declared twice"));
                }
                let (kind, col) = cur.word("ring name")?;
                let r = match kind {
                    "Z" => RingSpec::Integers,
                    "Q" => RingSpec::Rationals,
                    "Zmod" | "Fp" => {
                        let (n, ncol) = cur.int("modulus")?;
                        if n < 0 {
                            return Err(cur.err(ncol, format!("modulus must be positive: {n}")));
                        }
                        let made = if kind == "Zmod" {
                            RingSpec::integers_mod(n as u64)
                        } else {
                            RingSpec::prime_field(n as u64)
                        };
                        made.map_err(|e| cur.err(ncol, e.to_string()))?
                    }
                    other => return Err(cur.err(col, format!("unknown ring '{other}' (expected Z, Q, Zmod, Fp)"))),
                };
                cur.finish()?;
                if !generators.is_empty() {
                    return Err(cur.err(head_col, "ring must be declared before generators"));
                }
                ring = Some(r);
            }
            "generator" => {
                let (name, name_col) = cur.word("generator name")?;
                cur.keyword("degree")?;
                let (degree, dcol) = cur.int("degree")?;
                if degree <= 0 {
                    return Err(cur.err(dcol, format!("degree must be positive: {degree}")));
                }
                let mut ann = 0u64;
                let mut ann_col = None;
                if cur.peek().is_some() {
                    cur.keyword("ann")?;
                    let (a, acol) = cur.int("annihilator")?;
                    if a < 0 {
                        return Err(cur.err(acol, format!("annihilator must be nonnegative: {a}")));
                    }
                    ann = a as u64;
                    ann_col = Some(acol);
                }
                cur.finish()?;
                let Some(r) = ring else {
                    return Err(cur.err(head_col, "ring must be declared before generators"));
                };
                if !r.is_legal_annihilator(ann) {
                    return Err(cur.err(
                        ann_col.unwrap_or(head_col),
                        Error::IllegalAnnihilator {
                            ring: r,
                            annihilator: ann,
                        }
                        .to_string(),
                    ));
                }
                if positions.contains_key(name) {
                    return Err(cur.err(name_col, format!("duplicate generator '{name}'")));
                }
                positions.insert(
                    name.to_string(),
                    Position {
                        line,
                        column: name_col,
                    },
                );
                generators.push(CyclicGenerator {
                    name: name.to_string(),
                    degree: degree as usize,
                    annihilator: ann,
                });
            }
            "coproduct" => {
                let Some(r) = ring else {
                    return Err(cur.err(head_col, "ring must be declared before coproducts"));
                };
                let module = GradedModule::new(r, generators.clone()).map_err(|e| cur.err(head_col, e.to_string()))?;
                let degree_of = |name: &str, col: usize, cur: &Cursor| {
                    module
                        .index_of(name)
                        .map(|i| module.generators()[i].degree)
                        .ok_or_else(|| cur.err(col, format!("unknown generator '{name}'")))
                };
                let (x, xcol) = cur.word("generator name")?;
                let xdeg = degree_of(x, xcol, &cur)?;
                cur.sym('=')?;
                let mut line_entries = Vec::new();
                loop {
                    let coefficient = match cur.peek().map(|t| &t.tok) {
                        Some(Tok::Int(_)) => cur.int("coefficient")?.0,
                        _ => 1,
                    };
                    let (y, ycol) = cur.word("generator name")?;
                    let ydeg = degree_of(y, ycol, &cur)?;
                    cur.sym('*')?;
                    let (z, zcol) = cur.word("generator name")?;
                    let zdeg = degree_of(z, zcol, &cur)?;
                    if ydeg + zdeg != xdeg {
                        return Err(cur.err(
                            ycol,
                            format!("degree imbalance: |{y}| + |{z}| = {} but |{x}| = {xdeg}", ydeg + zdeg),
                        ));
                    }
                    line_entries.push(CoproductEntry {
                        generator: x.to_string(),
                        coefficient,
                        left: y.to_string(),
                        right: z.to_string(),
                    });
                    if cur.peek().is_none() {
                        break;
                    }
                    cur.sym('+')?;
                }
                let mut all = coproduct.clone();
                all.extend(line_entries.iter().cloned());
                build_coalgebra(&module, &all).map_err(|e| cur.err(xcol, e.to_string()))?;
                coproduct.extend(line_entries);
            }
            other => {
                return Err(cur.err(
                    head_col,
                    format!("unknown declaration '{other}' (expected ring, generator, coproduct)"),
                ))
            }
        }
    }
    let ring = ring.ok_or(ParseError {
        line: 1,
        column: 1,
        message: "missing ring declaration".to_string(),
    })?;
    let module = GradedModule::new(ring, generators).map_err(|e| ParseError {
        line: 1,
        column: 1,
        message: e.to_string(),
    })?;
    Ok(ProblemSpec {
        ring,
        module,
        coproduct,
        positions,
    })
}

/// Canonical text form; `parse_spec(&render(s)) == s`.
pub fn render(spec: &ProblemSpec) -> String {
    let mut out = String::new();
    let ring = match spec.ring {
        RingSpec::Integers => "Z".to_string(),
        RingSpec::Rationals => "Q".to_string(),
        RingSpec::IntegersMod(n) => format!("Zmod {n}"),
        RingSpec::PrimeField(p) => format!("Fp {p}"),
    };
    out.push_str(&format!("ring {ring}\n"));
    for g in spec.module.generators() {
        out.push_str(&format!("generator {} degree {}", g.name, g.degree));
        if g.annihilator != 0 {
            out.push_str(&format!(" ann {}", g.annihilator));
        }
        out.push('\n');
    }
    let mut by_generator: BTreeMap<usize, Vec<&CoproductEntry>> = BTreeMap::new();
    for e in &spec.coproduct {
        let i = spec.module.index_of(&e.generator).expect("validated");
        by_generator.entry(i).or_default().push(e);
    }
    for entries in by_generator.values() {
        let terms: Vec<String> = entries
            .iter()
            .map(|e| {
                if e.coefficient == 1 {
                    format!("{} * {}", e.left, e.right)
                } else {
                    format!("{} {} * {}", e.coefficient, e.left, e.right)
                }
            })
            .collect();
        out.push_str(&format!("coproduct {} = {}\n", entries[0].generator, terms.join(" + ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn coprime_torsion_input() {
        let s = parse_spec("ring Z\ngenerator x degree 2 ann 3\ngenerator y degree 4 ann 5").unwrap();
        assert_eq!(s.ring, RingSpec::Integers);
        assert_eq!(s.module.to_string(), GradedModule::from_triples(RingSpec::Integers, &[("x", 2, 3), ("y", 4, 5)]).unwrap().to_string());
        assert_eq!(s.positions["y"], Position { line: 3, column: 11 });
    }

    #[test]
    fn polynomial_input() {
        let s = parse_spec("ring Q\ngenerator X degree 4").unwrap();
        assert_eq!(s.module.generators()[0].degree, 4);
        assert!(s.coproduct.is_empty());
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_spec("generator x degree 0").unwrap_err();
        assert_eq!((e.line, e.column), (1, 20));
        assert!(e.message.contains("degree must be positive"));

        let e = parse_spec("ring Q\ngenerator x degree 2 ann 3").unwrap_err();
        assert_eq!((e.line, e.column), (2, 26));

        let e = parse_spec("ring Z\ngenerator y degree 1\ngenerator x degree 3\ncoproduct x = y * w").unwrap_err();
        assert_eq!((e.line, e.column), (4, 19));
        assert!(e.message.contains("unknown generator 'w'"));

        let e = parse_spec("ring Z\ngenerator y degree 1\ngenerator x degree 3\ncoproduct x = y * y").unwrap_err();
        assert_eq!((e.line, e.column), (4, 15));
        assert!(e.message.contains("degree imbalance"));

        let e = parse_spec("ring Z\ngenerator x degree 2 ann").unwrap_err();
        assert_eq!((e.line, e.column), (2, 25));

        let e = parse_spec("ring Zmod 6\ngenerator x degree 2 ann 4").unwrap_err();
        assert_eq!((e.line, e.column), (2, 26));

        let e = parse_spec("ring R").unwrap_err();
        assert_eq!((e.line, e.column), (1, 6));

        let e = parse_spec("# nothing\n").unwrap_err();
        assert!(e.message.contains("missing ring"));

        let e = parse_spec("ring Z\ngenerator x degree 2\ngenerator x degree 4").unwrap_err();
        assert_eq!((e.line, e.column), (3, 11));
    }

    #[test]
    fn coproduct_lines_and_comments() {
        let text = "ring Z  # integers\n\ngenerator y degree 2\ngenerator x degree 4\ncoproduct x = 2 y * y\n";
        let s = parse_spec(text).unwrap();
        assert_eq!(s.coproduct, vec![CoproductEntry {
            generator: "x".into(),
            coefficient: 2,
            left: "y".into(),
            right: "y".into(),
        }]);
        assert_eq!(render(&s), "ring Z\ngenerator y degree 2\ngenerator x degree 4\ncoproduct x = 2 y * y\n");
    }

    #[test]
    fn non_coassociative_table_is_accepted_by_parser() {
        // coassociativity is checked when the cogroup is built
        let text = "ring Q\ngenerator z degree 1\ngenerator y degree 2\ngenerator x degree 3\ncoproduct x = y * z\ncoproduct y = z * z";
        assert!(parse_spec(text).is_ok());
    }

    #[test]
    fn annihilator_violation_in_coproduct() {
        let text = "ring Z\ngenerator y degree 2\ngenerator x degree 4 ann 2\ncoproduct x = y * y";
        let e = parse_spec(text).unwrap_err();
        assert_eq!((e.line, e.column), (4, 11));
    }

    fn arb_spec() -> impl Strategy<Value = String> {
        let ring = prop_oneof![
            Just(("Z", RingSpec::Integers)),
            Just(("Q", RingSpec::Rationals)),
            Just(("Zmod 4", RingSpec::IntegersMod(4))),
            Just(("Zmod 6", RingSpec::IntegersMod(6))),
            Just(("Fp 2", RingSpec::PrimeField(2))),
            Just(("Fp 3", RingSpec::PrimeField(3))),
        ];
        (ring, prop::collection::vec((1usize..6, 0usize..5), 1..4)).prop_map(|((name, r), gens)| {
            let mut text = format!("ring {name}\n");
            for (i, (d, a)) in gens.iter().enumerate() {
                let ann = [0u64, 2, 3, 4, 6][*a];
                text.push_str(&format!("generator g{i} degree {d}"));
                if ann != 0 && r.is_legal_annihilator(ann) {
                    text.push_str(&format!(" ann {ann}"));
                }
                text.push('\n');
            }
            // a primitive-compatible coproduct when degrees allow it
            if let Some(j) = gens.iter().position(|(d, _)| *d == 2 * gens[0].0) {
                if gens[0].1 == 0 && gens[j].1 == 0 {
                    text.push_str(&format!("coproduct g{j} = 3 g0 * g0\n"));
                }
            }
            text
        })
    }

    proptest! {
        #[test]
        fn render_round_trips(text in arb_spec()) {
            let s = parse_spec(&text).unwrap();
            let again = parse_spec(&render(&s)).unwrap();
            prop_assert_eq!(&s, &again);
            prop_assert_eq!(render(&s), render(&again));
        }
    }
}
