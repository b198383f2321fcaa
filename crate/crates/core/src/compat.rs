//! Compatibility of a topology with a primal, the square operator, and the
//! checks built on them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{FuzzyPoint, FuzzySet};
use crate::primal_ops::PrimalSpace;

/// `λ□`: the points of `λ` that are not in `λ⋄`.
///
/// On the grid this point set is `{y_t : λ⋄(y) < t ≤ λ(y)}`. As a fuzzy set
/// it is read as the largest set containing those points, which keeps
/// `λ(y)` wherever `λ(y) > λ⋄(y)` and is 0 elsewhere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareView {
    pub set: FuzzySet,
    pub diamond: FuzzySet,
    pub induced: FuzzySet,
}

impl SquareView {
    pub fn contains_point(&self, p: &FuzzyPoint) -> bool {
        let y = p.support();
        y < self.set.len()
            && self.diamond.numerators()[y] < p.t()
            && p.t() <= self.set.numerators()[y]
    }
}

pub fn square(space: &PrimalSpace, set: &FuzzySet) -> Result<SquareView> {
    space.check(set)?;
    Ok(square_of(space, set))
}

pub(crate) fn square_of(space: &PrimalSpace, set: &FuzzySet) -> SquareView {
    let diamond = space.diamond_of(set);
    let values = set
        .numerators()
        .iter()
        .zip(diamond.numerators())
        .map(|(&l, &d)| if l > d { l } else { 0 })
        .collect();
    SquareView {
        induced: FuzzySet::new(set.k(), values).expect("square stays on the grid"),
        set: set.clone(),
        diamond,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Compatibility {
    pub compatible: bool,
    /// A set `λ` with `λ̄ ∈ P` although every point of `λ` has an open
    /// q-neighborhood `μ` with `λ̄ ⊕ μ̄ ∉ P`.
    pub witness: Option<FuzzySet>,
}

impl Compatibility {
    fn from_witness(witness: Option<FuzzySet>) -> Self {
        Compatibility {
            compatible: witness.is_none(),
            witness,
        }
    }
}

/// Quantifies over every lattice set and every point in it.
pub fn is_compatible_via_definition(space: &PrimalSpace) -> Compatibility {
    let k = space.space().k();
    let witness = space.lattice().iter().find(|lam| {
        let co = lam.complement();
        let every_point_escapes = space
            .space()
            .points()
            .filter(|p| p.t() <= lam.numerators()[p.support()])
            .all(|p| {
                space
                    .topology()
                    .opens()
                    .iter()
                    .filter(|mu| p.t() + mu.numerators()[p.support()] > k)
                    .any(|mu| !space.in_primal(&(&co + &mu.complement())))
            });
        every_point_escapes && space.in_primal(&co)
    });
    Compatibility::from_witness(witness.cloned())
}

/// `λ ∧ λ⋄ = 0_Y ⇒ λ̄ ∉ P` for every lattice set.
pub fn is_compatible_via_support(space: &PrimalSpace) -> Compatibility {
    let witness = space.lattice().iter().find(|lam| {
        (*lam & &space.diamond_of(lam)).is_zero() && space.in_primal(&lam.complement())
    });
    Compatibility::from_witness(witness.cloned())
}

pub fn is_compatible(space: &PrimalSpace) -> bool {
    is_compatible_via_definition(space).compatible
}

/// Five characterizations of compatibility, each with its first failing set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub clauses: [bool; 5],
    pub witnesses: [Option<FuzzySet>; 5],
}

impl EquivalenceReport {
    pub fn all_equal(&self) -> bool {
        self.clauses.iter().all(|&c| c == self.clauses[0])
    }
}

/// Evaluates:
/// (i) the definition, (ii) the support form, (iii) `λ□̄ ∉ P` for all `λ`,
/// (iv) `λ` containing no `σ ≠ 0` with `σ ⊆ σ⋄` implies `λ̄ ∉ P`,
/// (v) clause (iii) restricted to sets closed in the primal topology.
///
/// Clause (iv) inspects every `σ ⊆ λ`; spaces whose lattice exceeds
/// `subset_budget` are refused.
pub fn equivalence_report(space: &PrimalSpace, subset_budget: usize) -> Result<EquivalenceReport> {
    space.space().check_budget(subset_budget)?;
    let lattice = space.lattice();
    let first = |pred: &dyn Fn(&FuzzySet) -> bool| lattice.iter().find(|s| pred(s)).cloned();

    let by_definition = is_compatible_via_definition(space).witness;
    let by_support = is_compatible_via_support(space).witness;
    let squares: Vec<SquareView> = lattice.iter().map(|lam| square_of(space, lam)).collect();
    let square_small =
        |lam: &FuzzySet| !space.in_primal(&squares[lam.lattice_index()].induced.complement());
    let clause_iii = first(&|lam| !square_small(lam));

    let self_dense: Vec<bool> = lattice
        .iter()
        .map(|s| !s.is_zero() && s.is_subset(&squares[s.lattice_index()].diamond))
        .collect();
    let clause_iv = first(&|lam| {
        let sparse = !lattice.below(lam).any(|s| self_dense[s.lattice_index()]);
        sparse && space.in_primal(&lam.complement())
    });
    let clause_v =
        first(&|lam| squares[lam.lattice_index()].diamond.is_subset(lam) && !square_small(lam));

    let witnesses = [by_definition, by_support, clause_iii, clause_iv, clause_v];
    Ok(EquivalenceReport {
        clauses: witnesses.clone().map(|w| w.is_none()),
        witnesses,
    })
}

/// Three consequences of compatibility that are claimed equivalent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsequenceReport {
    pub compatible: bool,
    pub clauses: [bool; 3],
    pub witnesses: [Option<FuzzySet>; 3],
}

impl ConsequenceReport {
    pub fn all_equal(&self) -> bool {
        self.clauses.iter().all(|&c| c == self.clauses[0])
    }

    pub fn implied(&self) -> bool {
        !self.compatible || self.clauses.iter().all(|&c| c)
    }
}

/// (i) `λ ∧ λ⋄ = 0 ⇒ λ⋄ = 0`; (ii) `(λ□)⋄ = 0`; (iii) `(λ ∧ λ⋄)⋄ = λ⋄`.
pub fn consequence_report(space: &PrimalSpace) -> ConsequenceReport {
    let lattice = space.lattice();
    let mut witnesses: [Option<FuzzySet>; 3] = [None, None, None];
    for lam in lattice {
        let d = space.diamond_of(lam);
        let core = lam & &d;
        let checks = [
            !core.is_zero() || d.is_zero(),
            space.diamond_of(&square_of(space, lam).induced).is_zero(),
            space.diamond_of(&core) == d,
        ];
        for (slot, ok) in witnesses.iter_mut().zip(checks) {
            if !ok && slot.is_none() {
                *slot = Some(lam.clone());
            }
        }
    }
    ConsequenceReport {
        compatible: is_compatible(space),
        clauses: witnesses.clone().map(|w| w.is_none()),
        witnesses,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotenceReport {
    pub compatible: bool,
    /// `(λ⋄)⋄ = λ⋄` for every lattice set.
    pub holds: bool,
    /// `(λ⋄)⋄ ⊆ λ⋄` for every lattice set.
    pub one_sided: bool,
    pub witness: Option<FuzzySet>,
}

pub fn idempotence_report(space: &PrimalSpace) -> IdempotenceReport {
    let mut witness = None;
    let mut one_sided = true;
    for lam in space.lattice() {
        let d = space.diamond_of(lam);
        let dd = space.diamond_of(&d);
        one_sided &= dd.is_subset(&d);
        if dd != d && witness.is_none() {
            witness = Some(lam.clone());
        }
    }
    IdempotenceReport {
        compatible: is_compatible(space),
        holds: witness.is_none(),
        one_sided,
        witness,
    }
}

/// Some `(c, η)` with `c` closed in `T`, `η̄ ∉ P` and `λ = c ∨ η`.
///
/// The largest closed `c ⊆ λ` leaves the smallest remainder `η`, and the
/// sets outside `P` are upward closed, so that choice decides existence.
pub fn find_decomposition(
    space: &PrimalSpace,
    set: &FuzzySet,
) -> Result<Option<(FuzzySet, FuzzySet)>> {
    space.check(set)?;
    let closed = space
        .topology()
        .closed_sets()
        .iter()
        .filter(|c| c.is_subset(set))
        .fold(space.space().zero(), |acc, c| &acc | c);
    let rest = set
        .numerators()
        .iter()
        .zip(closed.numerators())
        .map(|(&l, &c)| if c < l { l } else { 0 })
        .collect();
    let rest = FuzzySet::new(set.k(), rest)?;
    Ok((!space.in_primal(&rest.complement())).then_some((closed, rest)))
}

/// Splits a set closed in the primal topology into a `T`-closed part and a
/// part whose complement lies outside `P`. The pair `(λ⋄, λ□)` is returned
/// when it qualifies, otherwise the pair from [`find_decomposition`].
pub fn closed_decomposition(space: &PrimalSpace, set: &FuzzySet) -> Result<(FuzzySet, FuzzySet)> {
    space.check(set)?;
    if let Some(w) = is_compatible_via_definition(space).witness {
        return Err(Error::Incompatible(w.to_string()));
    }
    let view = square_of(space, set);
    if !view.diamond.is_subset(set) {
        return Err(Error::NotPrimalClosed(set.to_string()));
    }
    let canonical = space.topology().is_closed(&view.diamond)
        && !space.in_primal(&view.induced.complement())
        && &view.diamond | &view.induced == *set;
    if canonical {
        return Ok((view.diamond, view.induced));
    }
    find_decomposition(space, set)?.ok_or_else(|| Error::NoDecomposition(set.to_string()))
}

/// Whether the base `{μ − λ̄}` is the whole primal topology.
pub fn base_equals_topology(space: &PrimalSpace, budget: usize) -> Result<bool> {
    if let Some(w) = is_compatible_via_definition(space).witness {
        return Err(Error::Incompatible(w.to_string()));
    }
    Ok(space.primal_base(budget)? == space.primal_topology_family(budget)?)
}

/// A point in both `λ□` and `(λ□)⋄`, reading `λ□` as the induced set.
pub fn square_diamond_overlap(space: &PrimalSpace, set: &FuzzySet) -> Result<Option<FuzzyPoint>> {
    space.check(set)?;
    let view = square_of(space, set);
    for p in space.space().points() {
        if view.contains_point(&p) && space.point_in_diamond(&view.induced, &p)? {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{Lattice, Space, Universe};
    use crate::structures::{FuzzyFamily, FuzzyPrimal, FuzzyTopology};

    fn set(k: u32, v: &[u32]) -> FuzzySet {
        FuzzySet::new(k, v.to_vec()).unwrap()
    }

    fn lattice(n: usize, k: u32) -> Lattice {
        Lattice::new(Space::new(n, k).unwrap(), 1 << 12).unwrap()
    }

    fn build(l: &Lattice, seeds: &[&[u32]], generator: &[u32]) -> PrimalSpace {
        let k = l.space().k();
        let fam = FuzzyFamily::from_sets(l.space(), seeds.iter().map(|v| set(k, v))).unwrap();
        PrimalSpace::new(
            Universe::numbered(l.space().n()),
            FuzzyTopology::generate(&fam, 1 << 12).unwrap(),
            FuzzyPrimal::excluding_filter(l, &set(k, generator)).unwrap(),
        )
        .unwrap()
    }

    /// Half-step chain at k = 2 with the primal of sets below 1/2.
    fn half_chain() -> PrimalSpace {
        build(&lattice(1, 2), &[&[1]], &[1])
    }

    fn all_spaces(n: usize, k: u32) -> Vec<PrimalSpace> {
        let l = lattice(n, k);
        let mut out = Vec::new();
        for seed in l.iter() {
            for generator in l.iter().filter(|g| !g.is_zero()) {
                out.push(build(&l, &[seed.numerators()], generator.numerators()));
            }
        }
        out
    }

    #[test]
    fn square_views() {
        let l = lattice(2, 2);
        let s = build(&l, &[&[2, 1]], &[1, 1]);
        for lam in &l {
            let v = square(&s, lam).unwrap();
            assert!(v.induced.is_subset(lam));
            if v.diamond.is_zero() {
                assert_eq!(&v.induced, lam);
            }
            if lam.is_subset(&v.diamond) {
                assert!(v.induced.is_zero());
            }
            assert_eq!(&(&v.induced | &(lam & &v.diamond)), lam);
            for p in l.space().points() {
                if v.contains_point(&p) {
                    assert!(p.is_in(&v.induced).unwrap());
                    assert!(!s.point_in_diamond(lam, &p).unwrap());
                }
            }
        }
    }

    #[test]
    fn compatibility_variants_agree_and_hold_everywhere_small() {
        for (n, k) in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)] {
            for s in all_spaces(n, k) {
                let a = is_compatible_via_definition(&s);
                let b = is_compatible_via_support(&s);
                assert_eq!(a.compatible, b.compatible);
                assert!(a.compatible, "{}", s.topology().opens());
            }
        }
    }

    #[test]
    fn trivial_primal_is_compatible() {
        let l = lattice(2, 2);
        let s = build(&l, &[&[1, 2]], &[2, 2]);
        assert!(s.primal().is_trivial());
        assert!(is_compatible(&s));
        let r = consequence_report(&s);
        assert!(r.all_equal() && r.implied());
        assert!(idempotence_report(&s).holds);
        assert!(base_equals_topology(&s, 1 << 12).unwrap());
    }

    #[test]
    fn single_point_two_level_space_by_hand() {
        // lattice {0, 1}; the only primal is {0}; every clause is true
        let l = lattice(1, 1);
        for seeds in [&[][..], &[&[1u32][..]][..]] {
            let s = build(&l, seeds, &[1]);
            let r = equivalence_report(&s, 1 << 12).unwrap();
            assert_eq!(r.clauses, [true; 5]);
        }
    }

    #[test]
    fn half_chain_breaks_idempotence_and_clause_four() {
        let s = half_chain();
        assert!(is_compatible(&s));
        let one = set(2, &[2]);
        let half = set(2, &[1]);
        assert_eq!(s.diamond(&one).unwrap(), half);
        assert_eq!(s.diamond(&half).unwrap(), set(2, &[0]));
        let idem = idempotence_report(&s);
        assert!(!idem.holds && idem.one_sided);
        let r = equivalence_report(&s, 1 << 12).unwrap();
        assert!(r.clauses[0] && r.clauses[1]);
        assert!(!r.clauses[3]);
        assert_eq!(r.witnesses[3], Some(one));
    }

    #[test]
    fn closed_set_without_decomposition() {
        // k = 3, T = {0, 2/3, 1}, P = sets below 2/3, λ = 2/3
        let s = build(&lattice(1, 3), &[&[2]], &[2]);
        let lam = set(3, &[2]);
        assert!(s.is_primal_closed(&lam).unwrap());
        assert!(find_decomposition(&s, &lam).unwrap().is_none());
        assert!(matches!(
            closed_decomposition(&s, &lam),
            Err(Error::NoDecomposition(_))
        ));
        assert!(matches!(
            closed_decomposition(&s, &set(3, &[3])),
            Ok(_) | Err(Error::NoDecomposition(_)) | Err(Error::NotPrimalClosed(_))
        ));
    }

    #[test]
    fn decomposition_search_matches_pair_enumeration() {
        for s in all_spaces(2, 2).into_iter().chain(all_spaces(1, 3)) {
            let closed = s.topology().closed_sets();
            for lam in s.lattice() {
                let brute = closed.iter().any(|c| {
                    s.lattice()
                        .iter()
                        .any(|eta| !s.in_primal(&eta.complement()) && &(c | eta) == lam)
                });
                let found = find_decomposition(&s, lam).unwrap();
                assert_eq!(found.is_some(), brute, "λ={lam}");
                if let Some((c, eta)) = found {
                    assert!(s.topology().is_closed(&c));
                    assert!(!s.in_primal(&eta.complement()));
                    assert_eq!(&(&c | &eta), lam);
                    assert!(s.is_primal_closed(lam).unwrap());
                }
            }
        }
    }

    #[test]
    fn closed_decomposition_of_closed_and_small_sets() {
        let l = lattice(2, 2);
        let s = build(&l, &[&[2, 0]], &[2, 2]);
        for c in s.topology().closed_sets().iter() {
            let (closed, small) = closed_decomposition(&s, c).unwrap();
            assert_eq!(&(&closed | &small), c);
        }
        let lam = set(2, &[1, 2]);
        assert!(matches!(
            closed_decomposition(&s, &lam),
            Err(Error::NotPrimalClosed(_))
        ));
    }

    #[test]
    fn square_overlap_is_empty_at_point_level() {
        for s in all_spaces(2, 2) {
            for lam in s.lattice() {
                assert_eq!(square_diamond_overlap(&s, lam).unwrap(), None);
            }
        }
    }
}
