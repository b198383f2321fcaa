//! Finite families of grid fuzzy sets: topologies, primals and grills.
//!
//! Validators never fail with an error. They return a [`ValidationReport`]
//! naming the first violated axiom together with the sets that witness it,
//! so callers (the verification harness in particular) can re-check a
//! failure directly.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{FuzzyPoint, FuzzySet, Lattice, Space};

/// A finite set of fuzzy sets over one space, kept in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FuzzyFamily {
    space: Space,
    members: BTreeSet<FuzzySet>,
}

impl FuzzyFamily {
    pub fn new(space: Space) -> Self {
        FuzzyFamily {
            space,
            members: BTreeSet::new(),
        }
    }

    pub fn from_sets<I>(space: Space, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = FuzzySet>,
    {
        let mut family = FuzzyFamily::new(space);
        for s in sets {
            family.insert(s)?;
        }
        Ok(family)
    }

    /// All lattice sets satisfying `keep`.
    pub fn from_lattice(lattice: &Lattice, keep: impl Fn(&FuzzySet) -> bool) -> Self {
        FuzzyFamily {
            space: lattice.space(),
            members: lattice.iter().filter(|s| keep(s)).cloned().collect(),
        }
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn insert(&mut self, set: FuzzySet) -> Result<bool> {
        self.check(&set)?;
        Ok(self.members.insert(set))
    }

    pub fn remove(&mut self, set: &FuzzySet) -> bool {
        self.members.remove(set)
    }

    pub fn contains(&self, set: &FuzzySet) -> bool {
        self.members.contains(set)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::collections::btree_set::Iter<'_, FuzzySet> {
        self.members.iter()
    }

    pub fn is_subset(&self, other: &FuzzyFamily) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &FuzzyFamily) -> Result<FuzzyFamily> {
        self.same_space(other)?;
        Ok(FuzzyFamily {
            space: self.space,
            members: self.members.union(&other.members).cloned().collect(),
        })
    }

    pub fn intersection(&self, other: &FuzzyFamily) -> Result<FuzzyFamily> {
        self.same_space(other)?;
        Ok(FuzzyFamily {
            space: self.space,
            members: self.members.intersection(&other.members).cloned().collect(),
        })
    }

    /// `{λ̄ : λ ∈ self}`.
    pub fn complement_image(&self) -> FuzzyFamily {
        FuzzyFamily {
            space: self.space,
            members: self.members.iter().map(FuzzySet::complement).collect(),
        }
    }

    /// The family with `set` added if absent and removed if present.
    pub fn toggled(&self, set: &FuzzySet) -> FuzzyFamily {
        let mut out = self.clone();
        if !out.members.remove(set) {
            out.members.insert(set.clone());
        }
        out
    }

    pub(crate) fn check(&self, set: &FuzzySet) -> Result<()> {
        if set.space() != self.space {
            return Err(Error::SpaceMismatch {
                left: self.space,
                right: set.space(),
            });
        }
        Ok(())
    }

    fn same_space(&self, other: &FuzzyFamily) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch {
                left: self.space,
                right: other.space,
            });
        }
        Ok(())
    }

    fn check_lattice(&self, lattice: &Lattice) -> Result<()> {
        if lattice.space() != self.space {
            return Err(Error::SpaceMismatch {
                left: self.space,
                right: lattice.space(),
            });
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a FuzzyFamily {
    type Item = &'a FuzzySet;
    type IntoIter = std::collections::btree_set::Iter<'a, FuzzySet>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl fmt::Display for FuzzyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Structure {
    Topology,
    Primal,
    Grill,
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Structure::Topology => "fuzzy topology",
            Structure::Primal => "fuzzy primal",
            Structure::Grill => "fuzzy grill",
        })
    }
}

/// Axioms are numbered (i)-(iii) for each structure, in the usual order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axiom {
    /// Topology (i): `0_Y` and `1_Y` are open.
    ContainsBounds,
    /// Topology (ii): closed under pairwise meet.
    MeetClosed,
    /// Topology (iii): closed under joins (pairwise suffices when finite).
    JoinClosed,
    /// Primal (i): `1_Y` is not a member.
    ExcludesOne,
    /// Primal (ii): downward closed.
    DownwardClosed,
    /// Primal (iii): `μ ∧ ν` member implies `μ` or `ν` member.
    MeetPrime,
    /// Grill (i): `0_Y` is not a member.
    ExcludesZero,
    /// Grill (ii): upward closed.
    UpwardClosed,
    /// Grill (iii): `μ ∨ ν` member implies `μ` or `ν` member.
    JoinPrime,
}

impl Axiom {
    pub fn number(&self) -> &'static str {
        match self {
            Axiom::ContainsBounds | Axiom::ExcludesOne | Axiom::ExcludesZero => "i",
            Axiom::MeetClosed | Axiom::DownwardClosed | Axiom::UpwardClosed => "ii",
            Axiom::JoinClosed | Axiom::MeetPrime | Axiom::JoinPrime => "iii",
        }
    }

    fn describe(&self) -> &'static str {
        match self {
            Axiom::ContainsBounds => "must contain 0_Y and 1_Y",
            Axiom::MeetClosed => "not closed under meet",
            Axiom::JoinClosed => "not closed under join",
            Axiom::ExcludesOne => "contains 1_Y",
            Axiom::DownwardClosed => "not downward closed",
            Axiom::MeetPrime => "not meet-prime",
            Axiom::ExcludesZero => "contains 0_Y",
            Axiom::UpwardClosed => "not upward closed",
            Axiom::JoinPrime => "not join-prime",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witnesses: Vec<FuzzySet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub structure: Structure,
    pub violation: Option<Violation>,
    pub notes: Vec<String>,
}

impl ValidationReport {
    fn valid(structure: Structure) -> Self {
        ValidationReport {
            structure,
            violation: None,
            notes: Vec::new(),
        }
    }

    fn invalid(structure: Structure, axiom: Axiom, witnesses: Vec<FuzzySet>) -> Self {
        ValidationReport {
            structure,
            violation: Some(Violation { axiom, witnesses }),
            notes: Vec::new(),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }

    pub fn axiom(&self) -> Option<Axiom> {
        self.violation.as_ref().map(|v| v.axiom)
    }

    pub fn witnesses(&self) -> &[FuzzySet] {
        self.violation.as_ref().map_or(&[], |v| &v.witnesses)
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::Validation(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(f, "valid {}", self.structure)?,
            Some(v) => {
                write!(
                    f,
                    "not a {}: axiom ({}) {}",
                    self.structure,
                    v.axiom.number(),
                    v.axiom.describe()
                )?;
                if !v.witnesses.is_empty() {
                    f.write_str("; witnesses")?;
                    for w in &v.witnesses {
                        write!(f, " {w}")?;
                    }
                }
            }
        }
        for note in &self.notes {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

pub fn validate_topology(family: &FuzzyFamily) -> ValidationReport {
    let space = family.space();
    for bound in [space.zero(), space.one()] {
        if !family.contains(&bound) {
            return ValidationReport::invalid(
                Structure::Topology,
                Axiom::ContainsBounds,
                vec![bound],
            );
        }
    }
    let members: Vec<&FuzzySet> = family.iter().collect();
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            if !family.contains(&(*a & *b)) {
                return ValidationReport::invalid(
                    Structure::Topology,
                    Axiom::MeetClosed,
                    vec![(*a).clone(), (*b).clone()],
                );
            }
        }
    }
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            if !family.contains(&(*a | *b)) {
                return ValidationReport::invalid(
                    Structure::Topology,
                    Axiom::JoinClosed,
                    vec![(*a).clone(), (*b).clone()],
                );
            }
        }
    }
    ValidationReport::valid(Structure::Topology)
}

fn membership_table(family: &FuzzyFamily, lattice: &Lattice) -> Vec<bool> {
    let mut table = vec![false; lattice.len()];
    for s in family {
        table[s.lattice_index()] = true;
    }
    table
}

fn note_empty(mut report: ValidationReport, family: &FuzzyFamily) -> ValidationReport {
    if family.is_empty() && report.is_valid() {
        report
            .notes
            .push("empty family: every axiom holds vacuously".into());
    }
    report
}

/// Primal check straight from the three defining postulates.
pub fn validate_primal(family: &FuzzyFamily, lattice: &Lattice) -> Result<ValidationReport> {
    family.check_lattice(lattice)?;
    let inside = membership_table(family, lattice);
    let one = lattice.space().one();
    if family.contains(&one) {
        return Ok(ValidationReport::invalid(
            Structure::Primal,
            Axiom::ExcludesOne,
            vec![one],
        ));
    }
    for member in family {
        if let Some(below) = lattice.below(member).find(|s| !inside[s.lattice_index()]) {
            return Ok(ValidationReport::invalid(
                Structure::Primal,
                Axiom::DownwardClosed,
                vec![member.clone(), below.clone()],
            ));
        }
    }
    let sets = lattice.sets();
    for (i, a) in sets.iter().enumerate() {
        for b in &sets[i..] {
            if inside[(a & b).lattice_index()]
                && !inside[a.lattice_index()]
                && !inside[b.lattice_index()]
            {
                return Ok(ValidationReport::invalid(
                    Structure::Primal,
                    Axiom::MeetPrime,
                    vec![a.clone(), b.clone()],
                ));
            }
        }
    }
    Ok(note_empty(
        ValidationReport::valid(Structure::Primal),
        family,
    ))
}

/// Primal check through the complementary characterization: the sets
/// outside the family contain `1_Y`, are upward closed, and are closed
/// under meets.
pub fn validate_primal_by_complement(
    family: &FuzzyFamily,
    lattice: &Lattice,
) -> Result<ValidationReport> {
    family.check_lattice(lattice)?;
    let outside: Vec<&FuzzySet> = lattice.iter().filter(|s| !family.contains(s)).collect();
    let one = lattice.space().one();
    if !outside.contains(&&one) {
        return Ok(ValidationReport::invalid(
            Structure::Primal,
            Axiom::ExcludesOne,
            vec![one],
        ));
    }
    for &low in &outside {
        for high in lattice.iter() {
            if low.is_subset(high) && family.contains(high) {
                return Ok(ValidationReport::invalid(
                    Structure::Primal,
                    Axiom::DownwardClosed,
                    vec![high.clone(), low.clone()],
                ));
            }
        }
    }
    for (i, &a) in outside.iter().enumerate() {
        for &b in &outside[i..] {
            if family.contains(&(a & b)) {
                return Ok(ValidationReport::invalid(
                    Structure::Primal,
                    Axiom::MeetPrime,
                    vec![a.clone(), b.clone()],
                ));
            }
        }
    }
    Ok(note_empty(
        ValidationReport::valid(Structure::Primal),
        family,
    ))
}

pub fn validate_grill(family: &FuzzyFamily, lattice: &Lattice) -> Result<ValidationReport> {
    family.check_lattice(lattice)?;
    let inside = membership_table(family, lattice);
    let zero = lattice.space().zero();
    if family.contains(&zero) {
        return Ok(ValidationReport::invalid(
            Structure::Grill,
            Axiom::ExcludesZero,
            vec![zero],
        ));
    }
    for member in family {
        if let Some(above) = lattice
            .iter()
            .find(|s| member.is_subset(s) && !inside[s.lattice_index()])
        {
            return Ok(ValidationReport::invalid(
                Structure::Grill,
                Axiom::UpwardClosed,
                vec![member.clone(), above.clone()],
            ));
        }
    }
    let sets = lattice.sets();
    for (i, a) in sets.iter().enumerate() {
        for b in &sets[i..] {
            if inside[(a | b).lattice_index()]
                && !inside[a.lattice_index()]
                && !inside[b.lattice_index()]
            {
                return Ok(ValidationReport::invalid(
                    Structure::Grill,
                    Axiom::JoinPrime,
                    vec![a.clone(), b.clone()],
                ));
            }
        }
    }
    Ok(note_empty(
        ValidationReport::valid(Structure::Grill),
        family,
    ))
}

/// A validated Chang fuzzy topology on a finite grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FuzzyTopology {
    opens: FuzzyFamily,
}

impl FuzzyTopology {
    pub fn new(opens: FuzzyFamily) -> Result<Self> {
        validate_topology(&opens).into_result()?;
        Ok(FuzzyTopology { opens })
    }

    pub fn indiscrete(space: Space) -> Self {
        let opens = FuzzyFamily {
            space,
            members: [space.zero(), space.one()].into_iter().collect(),
        };
        FuzzyTopology { opens }
    }

    pub fn discrete(lattice: &Lattice) -> Self {
        FuzzyTopology {
            opens: FuzzyFamily::from_lattice(lattice, |_| true),
        }
    }

    /// Smallest topology containing `seed`: close `seed ∪ {0_Y, 1_Y}` under
    /// pairwise meet and join.
    pub fn generate(seed: &FuzzyFamily, budget: usize) -> Result<Self> {
        let space = seed.space();
        space.check_budget(budget)?;
        let mut members: BTreeSet<FuzzySet> = seed.members.clone();
        members.insert(space.zero());
        members.insert(space.one());
        let mut frontier: Vec<FuzzySet> = members.iter().cloned().collect();
        while let Some(fresh) = frontier.pop() {
            let current: Vec<FuzzySet> = members.iter().cloned().collect();
            for other in &current {
                for candidate in [&fresh & other, &fresh | other] {
                    if members.insert(candidate.clone()) {
                        frontier.push(candidate);
                    }
                }
            }
        }
        FuzzyTopology::new(FuzzyFamily { space, members })
    }

    pub fn space(&self) -> Space {
        self.opens.space()
    }

    pub fn opens(&self) -> &FuzzyFamily {
        &self.opens
    }

    pub fn into_opens(self) -> FuzzyFamily {
        self.opens
    }

    pub fn is_open(&self, set: &FuzzySet) -> bool {
        self.opens.contains(set)
    }

    pub fn is_closed(&self, set: &FuzzySet) -> bool {
        self.opens.contains(&set.complement())
    }

    pub fn closed_sets(&self) -> FuzzyFamily {
        self.opens.complement_image()
    }

    pub fn is_indiscrete(&self) -> bool {
        self.opens.len() == 2 || (self.opens.len() == 1)
    }

    /// Opens `η` with `t + η(y) > 1`.
    pub fn q_nbhds<'a>(&'a self, p: &'a FuzzyPoint) -> impl Iterator<Item = &'a FuzzySet> + 'a {
        self.opens.iter().filter(move |eta| p.quasi_unchecked(eta))
    }

    pub fn open_q_nbhds(&self, p: &FuzzyPoint) -> Result<FuzzyFamily> {
        self.check_point(p)?;
        Ok(FuzzyFamily {
            space: self.space(),
            members: self.q_nbhds(p).cloned().collect(),
        })
    }

    /// Some open `μ` with `y_t ∈ μ ⊆ η`.
    pub fn is_nbhd(&self, p: &FuzzyPoint, eta: &FuzzySet) -> Result<bool> {
        self.check_point(p)?;
        self.opens.check(eta)?;
        Ok(self
            .opens
            .iter()
            .any(|mu| p.t() <= mu.numerators()[p.support()] && mu.is_subset(eta)))
    }

    /// Some open `μ` with `y_t ≺ μ ⊆ η`.
    pub fn is_q_nbhd(&self, p: &FuzzyPoint, eta: &FuzzySet) -> Result<bool> {
        self.check_point(p)?;
        self.opens.check(eta)?;
        Ok(self.q_nbhds(p).any(|mu| mu.is_subset(eta)))
    }

    /// Join of all opens below `λ`.
    pub fn interior(&self, set: &FuzzySet) -> Result<FuzzySet> {
        self.opens.check(set)?;
        Ok(self.interior_of(set))
    }

    pub(crate) fn interior_of(&self, set: &FuzzySet) -> FuzzySet {
        self.opens
            .iter()
            .filter(|mu| mu.is_subset(set))
            .fold(self.space().zero(), |acc, mu| &acc | mu)
    }

    /// Closure from closure points: `Cl(λ)(y)` is the largest `t` such that
    /// every open q-neighborhood of `y_t` is quasi-coincident with `λ`.
    pub fn closure(&self, set: &FuzzySet) -> Result<FuzzySet> {
        self.opens.check(set)?;
        Ok(self.closure_of(set))
    }

    pub(crate) fn closure_of(&self, set: &FuzzySet) -> FuzzySet {
        let space = self.space();
        let values = (0..space.n())
            .map(|y| {
                (1..=space.k())
                    .rev()
                    .find(|&t| {
                        self.opens
                            .iter()
                            .filter(|eta| t + eta.numerators()[y] > space.k())
                            .all(|eta| eta.quasi_at(set).is_some())
                    })
                    .unwrap_or(0)
            })
            .collect();
        FuzzySet::new(space.k(), values).expect("closure stays on the grid")
    }

    /// `1 - Int(1 - λ)`, the cross-check for [`FuzzyTopology::closure`].
    pub fn closure_via_interior(&self, set: &FuzzySet) -> Result<FuzzySet> {
        Ok(self.interior(&set.complement())?.complement())
    }

    /// Whether every open q-neighborhood of every point contains a member of
    /// `base` that the point is quasi-coincident with.
    pub fn is_base_for(&self, base: &FuzzyFamily) -> Result<bool> {
        Ok(self.base_failure(base)?.is_none())
    }

    /// First `(point, open q-neighborhood)` pair that `base` cannot serve.
    pub fn base_failure(&self, base: &FuzzyFamily) -> Result<Option<(FuzzyPoint, FuzzySet)>> {
        if base.space() != self.space() {
            return Err(Error::SpaceMismatch {
                left: self.space(),
                right: base.space(),
            });
        }
        if let Some(stray) = base.iter().find(|b| !self.is_open(b)) {
            return Err(Error::BaseNotOpen(stray.to_string()));
        }
        for p in self.space().points() {
            for mu in self.q_nbhds(&p) {
                let served = base
                    .iter()
                    .any(|beta| p.quasi_unchecked(beta) && beta.is_subset(mu));
                if !served {
                    return Ok(Some((p, mu.clone())));
                }
            }
        }
        Ok(None)
    }

    fn check_point(&self, p: &FuzzyPoint) -> Result<()> {
        let space = self.space();
        if p.support() >= space.n() || p.value().denominator() != space.k() {
            return Err(Error::SpaceMismatch {
                left: space,
                right: Space::new(p.support() + 1, p.value().denominator())?,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PrimalKind {
    Trivial,
    /// `{λ : λ(y0) < t0}`, i.e. the sets that exclude the point `y0_t0`.
    PointExcluding {
        support: usize,
        t: u32,
    },
    Explicit,
}

/// A validated fuzzy primal, stored extensionally.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FuzzyPrimal {
    members: FuzzyFamily,
    kind: PrimalKind,
}

impl FuzzyPrimal {
    /// Validates `family` before accepting it.
    pub fn explicit(family: FuzzyFamily, lattice: &Lattice) -> Result<Self> {
        validate_primal(&family, lattice)?.into_result()?;
        Ok(FuzzyPrimal {
            members: family,
            kind: PrimalKind::Explicit,
        })
    }

    /// Every set except `1_Y`.
    pub fn trivial(lattice: &Lattice) -> Self {
        FuzzyPrimal {
            members: FuzzyFamily::from_lattice(lattice, |s| !s.is_one()),
            kind: PrimalKind::Trivial,
        }
    }

    /// `{λ : y_t ∉ λ} = {λ : λ(y) < t}`.
    pub fn point_excluding(lattice: &Lattice, point: FuzzyPoint) -> Result<Self> {
        let space = lattice.space();
        let point = space.point(point.support(), point.t())?;
        let (y, t) = (point.support(), point.t());
        Ok(FuzzyPrimal {
            members: FuzzyFamily::from_lattice(lattice, |s| s.numerators()[y] < t),
            kind: PrimalKind::PointExcluding { support: y, t },
        })
    }

    /// `{λ : a ⊄ λ}`. On a finite lattice every primal has this form, with
    /// `a` the meet of the non-members.
    pub fn excluding_filter(lattice: &Lattice, generator: &FuzzySet) -> Result<Self> {
        if generator.space() != lattice.space() {
            return Err(Error::SpaceMismatch {
                left: lattice.space(),
                right: generator.space(),
            });
        }
        Ok(FuzzyPrimal {
            members: FuzzyFamily::from_lattice(lattice, |s| !generator.is_subset(s)),
            kind: PrimalKind::Explicit,
        })
    }

    pub fn members(&self) -> &FuzzyFamily {
        &self.members
    }

    pub fn kind(&self) -> &PrimalKind {
        &self.kind
    }

    pub fn space(&self) -> Space {
        self.members.space()
    }

    pub fn contains(&self, set: &FuzzySet) -> bool {
        self.members.contains(set)
    }

    pub fn is_trivial(&self) -> bool {
        let size = self.space().lattice_size();
        self.members.len() as u128 + 1 == size && !self.contains(&self.space().one())
    }

    /// Meet of the non-members: the least set outside the primal.
    pub fn filter_generator(&self, lattice: &Lattice) -> FuzzySet {
        lattice
            .iter()
            .filter(|s| !self.contains(s))
            .fold(self.space().one(), |acc, s| &acc & s)
    }

    /// The excluded point when this primal has the form `{λ : λ(y) < t}`.
    pub fn excluded_point(&self, lattice: &Lattice) -> Option<FuzzyPoint> {
        let generator = self.filter_generator(lattice);
        let mut support = generator.support();
        let y = support.next()?;
        if support.next().is_some() {
            return None;
        }
        self.space().point(y, generator.numerators()[y]).ok()
    }

    pub fn union(&self, other: &FuzzyPrimal) -> Result<FuzzyPrimal> {
        Ok(FuzzyPrimal {
            members: self.members.union(&other.members)?,
            kind: PrimalKind::Explicit,
        })
    }

    /// Member-wise intersection, unvalidated: it need not be a primal.
    pub fn intersection_raw(&self, other: &FuzzyPrimal) -> Result<FuzzyFamily> {
        self.members.intersection(&other.members)
    }

    pub fn to_grill(&self) -> FuzzyGrill {
        FuzzyGrill {
            members: self.members.complement_image(),
        }
    }

    pub fn from_grill(grill: &FuzzyGrill) -> FuzzyPrimal {
        FuzzyPrimal {
            members: grill.members.complement_image(),
            kind: PrimalKind::Explicit,
        }
    }
}

/// A validated fuzzy grill.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FuzzyGrill {
    members: FuzzyFamily,
}

impl FuzzyGrill {
    pub fn new(family: FuzzyFamily, lattice: &Lattice) -> Result<Self> {
        validate_grill(&family, lattice)?.into_result()?;
        Ok(FuzzyGrill { members: family })
    }

    /// `{λ : λ ⊄ b}`; every grill on a finite lattice has this form.
    pub fn excluding_ideal(lattice: &Lattice, bound: &FuzzySet) -> Self {
        FuzzyGrill {
            members: FuzzyFamily::from_lattice(lattice, |s| !s.is_subset(bound)),
        }
    }

    pub fn members(&self) -> &FuzzyFamily {
        &self.members
    }

    pub fn contains(&self, set: &FuzzySet) -> bool {
        self.members.contains(set)
    }
}

pub fn primal_from_grill(grill: &FuzzyGrill) -> FuzzyPrimal {
    FuzzyPrimal::from_grill(grill)
}

pub fn grill_from_primal(primal: &FuzzyPrimal) -> FuzzyGrill {
    primal.to_grill()
}
