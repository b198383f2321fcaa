//! Line-oriented space documents.
//!
//! ```text
//! universe y z
//! denominator 10
//! topology explicit
//!   0 0
//!   10 10
//! end
//! primal point_excluding y 7
//! second_primal point_excluding z 8
//! check primal_intersection
//! ```
//!
//! Memberships are integer numerators over the denominator. `topology
//! generate` lists seed sets instead of open sets. Primals are `trivial`,
//! `point_excluding <label> <numerator>`, or `explicit` followed by a member
//! block. `#` starts a comment.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::grid::{FuzzySet, Lattice, Space, Universe};
use crate::primal_ops::PrimalSpace;
use crate::structures::{FuzzyFamily, FuzzyPrimal, FuzzyTopology, PrimalKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopologyMode {
    Explicit,
    Generate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologySpec {
    pub mode: TopologyMode,
    pub sets: BTreeSet<FuzzySet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimalSpec {
    Trivial,
    PointExcluding { support: usize, t: u32 },
    Explicit(BTreeSet<FuzzySet>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceDocument {
    pub universe: Universe,
    pub k: u32,
    pub topology: TopologySpec,
    pub primal: PrimalSpec,
    pub second_primal: Option<PrimalSpec>,
    pub check_intersection: bool,
}

/// A validated document.
#[derive(Debug, Clone)]
pub struct LoadedSpace {
    pub space: PrimalSpace,
    pub second: Option<FuzzyPrimal>,
    pub check_intersection: bool,
}

impl LoadedSpace {
    pub fn new(space: PrimalSpace, second: Option<FuzzyPrimal>) -> Self {
        LoadedSpace {
            space,
            second,
            check_intersection: false,
        }
    }

    pub fn to_document(&self) -> SpaceDocument {
        let space = &self.space;
        SpaceDocument {
            universe: space.universe().clone(),
            k: space.space().k(),
            topology: TopologySpec {
                mode: TopologyMode::Explicit,
                sets: space.topology().opens().iter().cloned().collect(),
            },
            primal: primal_spec(space.primal()),
            second_primal: self.second.as_ref().map(primal_spec),
            check_intersection: self.check_intersection,
        }
    }

    /// Hex SHA-256 of the canonical serialization.
    pub fn digest(&self) -> String {
        let text = serialize_space(self);
        Sha256::digest(text.as_bytes())
            .iter()
            .fold(String::with_capacity(64), |mut acc, b| {
                let _ = write!(acc, "{b:02x}");
                acc
            })
    }
}

fn primal_spec(primal: &FuzzyPrimal) -> PrimalSpec {
    match primal.kind() {
        PrimalKind::Trivial => PrimalSpec::Trivial,
        PrimalKind::PointExcluding { support, t } => PrimalSpec::PointExcluding {
            support: *support,
            t: *t,
        },
        PrimalKind::Explicit => PrimalSpec::Explicit(primal.members().iter().cloned().collect()),
    }
}

struct Cursor<'a> {
    line: usize,
    tokens: Vec<(usize, &'a str)>,
}

fn tokenize(text: &str) -> Vec<Cursor<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (pos, ch) in body
                .char_indices()
                .chain(std::iter::once((body.len(), ' ')))
            {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(pos),
                    (true, Some(s)) => {
                        tokens.push((s + 1, &body[s..pos]));
                        start = None;
                    }
                    _ => {}
                }
            }
            (!tokens.is_empty()).then_some(Cursor {
                line: i + 1,
                tokens,
            })
        })
        .collect()
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn parse_number(line: usize, (column, token): (usize, &str)) -> Result<u32> {
    token.parse::<u32>().map_err(|_| {
        syntax(
            line,
            column,
            format!("expected a non-negative integer, found {token:?}"),
        )
    })
}

struct Parser<'a> {
    lines: Vec<Cursor<'a>>,
    pos: usize,
    universe: Option<Universe>,
    k: Option<u32>,
}

impl<'a> Parser<'a> {
    fn header(&self) -> Result<(&Universe, u32, usize)> {
        let cursor = &self.lines[self.pos];
        let universe = self
            .universe
            .as_ref()
            .ok_or_else(|| syntax(cursor.line, 1, "`universe` must come first"))?;
        let k = self
            .k
            .ok_or_else(|| syntax(cursor.line, 1, "`denominator` must precede set blocks"))?;
        Ok((universe, k, cursor.line))
    }

    fn block(&mut self) -> Result<BTreeSet<FuzzySet>> {
        let (universe, k, opened) = self.header()?;
        let n = universe.len();
        let mut sets = BTreeSet::new();
        self.pos += 1;
        while let Some(cursor) = self.lines.get(self.pos) {
            if cursor.tokens[0].1 == "end" {
                if cursor.tokens.len() > 1 {
                    return Err(syntax(
                        cursor.line,
                        cursor.tokens[1].0,
                        "unexpected token after `end`",
                    ));
                }
                return Ok(sets);
            }
            if cursor.tokens.len() != n {
                return Err(syntax(
                    cursor.line,
                    cursor.tokens[0].0,
                    format!("expected {n} numerators, found {}", cursor.tokens.len()),
                ));
            }
            let mut values = Vec::with_capacity(n);
            for &token in &cursor.tokens {
                let v = parse_number(cursor.line, token)?;
                if v > k {
                    return Err(syntax(
                        cursor.line,
                        token.0,
                        format!("numerator {v} exceeds the denominator {k}"),
                    ));
                }
                values.push(v);
            }
            sets.insert(FuzzySet::new(k, values)?);
            self.pos += 1;
        }
        Err(syntax(opened, 1, "block is missing its `end`"))
    }

    fn primal(&mut self) -> Result<PrimalSpec> {
        let (universe, k, line) = self.header()?;
        let tokens = self.lines[self.pos].tokens.clone();
        let kind = tokens
            .get(1)
            .ok_or_else(|| syntax(line, tokens[0].0 + tokens[0].1.len(), "missing primal kind"))?;
        let arity = |want: usize| -> Result<()> {
            match tokens.get(want) {
                Some(extra) => Err(syntax(line, extra.0, "unexpected token")),
                None if tokens.len() < want => Err(syntax(line, kind.0, "missing arguments")),
                None => Ok(()),
            }
        };
        match kind.1 {
            "trivial" => {
                arity(2)?;
                Ok(PrimalSpec::Trivial)
            }
            "point_excluding" => {
                arity(4)?;
                let label = tokens[2];
                let support = universe
                    .position(label.1)
                    .ok_or_else(|| syntax(line, label.0, format!("unknown label {:?}", label.1)))?;
                let t = parse_number(line, tokens[3])?;
                if t == 0 || t > k {
                    return Err(syntax(
                        line,
                        tokens[3].0,
                        format!("point value must lie in 1..={k}"),
                    ));
                }
                Ok(PrimalSpec::PointExcluding { support, t })
            }
            "explicit" => {
                arity(2)?;
                Ok(PrimalSpec::Explicit(self.block()?))
            }
            other => Err(syntax(
                line,
                kind.0,
                format!("unknown primal kind {other:?}"),
            )),
        }
    }
}

/// Syntax-level parse; no validation of the structures.
pub fn parse_document(text: &str) -> Result<SpaceDocument> {
    let mut p = Parser {
        lines: tokenize(text),
        pos: 0,
        universe: None,
        k: None,
    };
    let mut topology = None;
    let mut primal = None;
    let mut second_primal = None;
    let mut check_intersection = false;

    while p.pos < p.lines.len() {
        let line = p.lines[p.pos].line;
        let tokens = p.lines[p.pos].tokens.clone();
        let (column, keyword) = tokens[0];
        let duplicate = || syntax(line, column, format!("duplicate `{keyword}`"));
        match keyword {
            "universe" => {
                if p.universe.is_some() {
                    return Err(duplicate());
                }
                let labels: Vec<&str> = tokens[1..].iter().map(|t| t.1).collect();
                p.universe =
                    Some(Universe::new(labels).map_err(|e| syntax(line, column, e.to_string()))?);
            }
            "denominator" => {
                if p.k.is_some() {
                    return Err(duplicate());
                }
                if tokens.len() != 2 {
                    return Err(syntax(line, column, "expected `denominator <k>`"));
                }
                let k = parse_number(line, tokens[1])?;
                if k == 0 {
                    return Err(syntax(line, tokens[1].0, "denominator must be positive"));
                }
                p.k = Some(k);
            }
            "topology" => {
                if topology.is_some() {
                    return Err(duplicate());
                }
                let mode = match tokens.get(1).map(|t| t.1) {
                    Some("explicit") if tokens.len() == 2 => TopologyMode::Explicit,
                    Some("generate") if tokens.len() == 2 => TopologyMode::Generate,
                    _ => {
                        return Err(syntax(
                            line,
                            column,
                            "expected `topology explicit` or `topology generate`",
                        ))
                    }
                };
                topology = Some(TopologySpec {
                    mode,
                    sets: p.block()?,
                });
            }
            "primal" => {
                if primal.is_some() {
                    return Err(duplicate());
                }
                primal = Some(p.primal()?);
            }
            "second_primal" => {
                if second_primal.is_some() {
                    return Err(duplicate());
                }
                second_primal = Some(p.primal()?);
            }
            "check" => match tokens.get(1).map(|t| t.1) {
                Some("primal_intersection") if tokens.len() == 2 => check_intersection = true,
                _ => return Err(syntax(line, column, "expected `check primal_intersection`")),
            },
            other => return Err(syntax(line, column, format!("unknown keyword {other:?}"))),
        }
        p.pos += 1;
    }

    let end = p.lines.last().map_or(1, |c| c.line);
    let missing = |what: &str| syntax(end, 1, format!("missing `{what}`"));
    Ok(SpaceDocument {
        universe: p.universe.ok_or_else(|| missing("universe"))?,
        k: p.k.ok_or_else(|| missing("denominator"))?,
        topology: topology.ok_or_else(|| missing("topology"))?,
        primal: primal.ok_or_else(|| missing("primal"))?,
        second_primal,
        check_intersection,
    })
}

fn write_block(out: &mut String, sets: &BTreeSet<FuzzySet>) {
    for s in sets {
        out.push(' ');
        for v in s.numerators() {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out.push_str("end\n");
}

fn write_primal(out: &mut String, keyword: &str, spec: &PrimalSpec, universe: &Universe) {
    match spec {
        PrimalSpec::Trivial => {
            let _ = writeln!(out, "{keyword} trivial");
        }
        PrimalSpec::PointExcluding { support, t } => {
            let _ = writeln!(
                out,
                "{keyword} point_excluding {} {t}",
                universe.labels()[*support]
            );
        }
        PrimalSpec::Explicit(sets) => {
            let _ = writeln!(out, "{keyword} explicit");
            write_block(out, sets);
        }
    }
}

/// Canonical text: fixed keyword order, members sorted, two-space indent.
pub fn serialize_document(doc: &SpaceDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "universe {}", doc.universe.labels().join(" "));
    let _ = writeln!(out, "denominator {}", doc.k);
    let mode = match doc.topology.mode {
        TopologyMode::Explicit => "explicit",
        TopologyMode::Generate => "generate",
    };
    let _ = writeln!(out, "topology {mode}");
    write_block(&mut out, &doc.topology.sets);
    write_primal(&mut out, "primal", &doc.primal, &doc.universe);
    if let Some(second) = &doc.second_primal {
        write_primal(&mut out, "second_primal", second, &doc.universe);
    }
    if doc.check_intersection {
        out.push_str("check primal_intersection\n");
    }
    out
}

fn build_primal(spec: &PrimalSpec, lattice: &Lattice) -> Result<FuzzyPrimal> {
    match spec {
        PrimalSpec::Trivial => Ok(FuzzyPrimal::trivial(lattice)),
        PrimalSpec::PointExcluding { support, t } => {
            FuzzyPrimal::point_excluding(lattice, lattice.space().point(*support, *t)?)
        }
        PrimalSpec::Explicit(sets) => FuzzyPrimal::explicit(
            FuzzyFamily::from_sets(lattice.space(), sets.iter().cloned())?,
            lattice,
        ),
    }
}

impl SpaceDocument {
    /// Validates the topology and primals; `budget` caps the lattice size.
    pub fn build(&self, budget: usize) -> Result<LoadedSpace> {
        let space = Space::new(self.universe.len(), self.k)?;
        let lattice = Lattice::new(space, budget)?;
        let family = FuzzyFamily::from_sets(space, self.topology.sets.iter().cloned())?;
        let topology = match self.topology.mode {
            TopologyMode::Explicit => FuzzyTopology::new(family)?,
            TopologyMode::Generate => FuzzyTopology::generate(&family, budget)?,
        };
        let primal = build_primal(&self.primal, &lattice)?;
        let second = self
            .second_primal
            .as_ref()
            .map(|spec| build_primal(spec, &lattice))
            .transpose()?;
        Ok(LoadedSpace {
            space: PrimalSpace::new(self.universe.clone(), topology, primal)?,
            second,
            check_intersection: self.check_intersection,
        })
    }
}

pub fn parse_space(text: &str, budget: usize) -> Result<LoadedSpace> {
    parse_document(text)?.build(budget)
}

pub fn serialize_space(loaded: &LoadedSpace) -> String {
    serialize_document(&loaded.to_document())
}

/// Parses a comma- or space-separated numerator vector such as `3,0,10`.
pub fn parse_set_arg(text: &str, space: Space) -> Result<FuzzySet> {
    let mut values = Vec::new();
    let mut column = 1;
    for token in text.split([',', ' ']) {
        if !token.is_empty() {
            let v = parse_number(1, (column, token))?;
            if v > space.k() {
                return Err(syntax(
                    1,
                    column,
                    format!("numerator {v} exceeds the denominator {}", space.k()),
                ));
            }
            values.push(v);
        }
        column += token.len() + 1;
    }
    if values.len() != space.n() {
        return Err(syntax(
            1,
            1,
            format!("expected {} numerators, found {}", space.n(), values.len()),
        ));
    }
    space.set(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    const INTERSECTION: &str = "\
universe y z
denominator 10
topology explicit
  0 0
  10 10
end
primal point_excluding y 7
second_primal point_excluding z 8
check primal_intersection
";

    #[test]
    fn canonical_text_round_trips() {
        let doc = parse_document(INTERSECTION).unwrap();
        assert_eq!(serialize_document(&doc), INTERSECTION);
        let loaded = doc.build(1 << 16).unwrap();
        assert_eq!(serialize_space(&loaded), INTERSECTION);
    }

    #[test]
    fn non_canonical_input_is_normalized() {
        let messy = "# comment\nuniverse a b\ndenominator 2\ntopology generate\n 2 1\n  2 1\n0 1 # seed\nend\nprimal trivial\n";
        let doc = parse_document(messy).unwrap();
        let text = serialize_document(&doc);
        assert_eq!(
            text,
            "universe a b\ndenominator 2\ntopology generate\n  0 1\n  2 1\nend\nprimal trivial\n"
        );
        let loaded = doc.build(1 << 16).unwrap();
        let once = serialize_space(&loaded);
        let twice = serialize_space(&parse_space(&once, 1 << 16).unwrap());
        assert_eq!(once, twice);
        assert!(once.contains("topology explicit"));
    }

    #[test]
    fn indiscrete_trivial_document() {
        let text =
            "universe a b\ndenominator 3\ntopology explicit\n  0 0\n  3 3\nend\nprimal trivial\n";
        let loaded = parse_space(text, 1 << 16).unwrap();
        assert!(loaded.space.topology().is_indiscrete());
        assert!(loaded.space.primal().is_trivial());
    }

    #[test]
    fn explicit_primal_with_one_is_rejected() {
        let text = "universe a\ndenominator 1\ntopology explicit\n  0\n  1\nend\nprimal explicit\n  0\n  1\nend\n";
        match parse_space(text, 1 << 16) {
            Err(Error::Validation(report)) => {
                assert_eq!(report.axiom().unwrap().number(), "i");
            }
            other => panic!("expected a validation failure, got {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let cases = [
            ("universe a\ndenominator 2\ntopology explicit\n  0\n  3\nend\nprimal trivial\n", 5, 3),
            ("universe a\ndenominator 2\ntopology explicit\n  0 1\nend\nprimal trivial\n", 4, 3),
            ("universe a\ndenominator 2\nprimal bogus\n", 3, 8),
            ("universe a\ndenominator 2\ntopology explicit\n  0\n", 3, 1),
            ("denominator 2\n", 1, 1),
            ("universe a\ndenominator 2\ntopology explicit\n  0\n  2\nend\nprimal point_excluding b 1\n", 7, 24),
            ("universe a\ndenominator x\n", 2, 13),
        ];
        for (text, line, column) in cases {
            match parse_document(text) {
                Err(Error::Syntax {
                    line: l, column: c, ..
                }) => {
                    assert_eq!((l, c), (line, column), "{text:?}")
                }
                other => panic!("expected a syntax error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn set_arguments() {
        let space = Space::new(3, 4).unwrap();
        assert_eq!(
            parse_set_arg("0,2,4", space).unwrap().numerators(),
            &[0, 2, 4]
        );
        assert_eq!(
            parse_set_arg("0 2 4", space).unwrap().numerators(),
            &[0, 2, 4]
        );
        assert!(parse_set_arg("0,2", space).is_err());
        assert!(parse_set_arg("0,2,5", space).is_err());
    }

    #[test]
    fn digest_is_stable_and_distinguishes_spaces() {
        let a = parse_space(INTERSECTION, 1 << 16).unwrap();
        let b = parse_space(&INTERSECTION.replace("z 8", "z 9"), 1 << 16).unwrap();
        assert_eq!(a.digest(), a.clone().digest());
        assert_ne!(a.digest(), b.digest());
        assert_eq!(a.digest().len(), 64);
    }
}
