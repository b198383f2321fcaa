//! The diamond operator, its closure `Cl⋄(λ) = λ ∨ λ⋄`, the primal fuzzy
//! topology and its base.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{FuzzyPoint, FuzzySet, Lattice, Space, Universe};
use crate::structures::{FuzzyFamily, FuzzyPrimal, FuzzyTopology};

/// A primal fuzzy topological space `(Y, T, P)`.
#[derive(Debug, Clone)]
pub struct PrimalSpace {
    universe: Universe,
    topology: FuzzyTopology,
    primal: FuzzyPrimal,
    lattice: Arc<Lattice>,
    in_primal: Arc<Vec<bool>>,
}

impl PrimalSpace {
    pub fn new(universe: Universe, topology: FuzzyTopology, primal: FuzzyPrimal) -> Result<Self> {
        let space = topology.space();
        if primal.space() != space {
            return Err(Error::SpaceMismatch {
                left: space,
                right: primal.space(),
            });
        }
        if universe.len() != space.n() {
            return Err(Error::InvalidSpace(format!(
                "universe has {} labels but the sets have {} coordinates",
                universe.len(),
                space.n()
            )));
        }
        let lattice = Arc::new(Lattice::new(space, usize::MAX)?);
        Ok(Self::assemble(universe, topology, primal, lattice))
    }

    fn assemble(
        universe: Universe,
        topology: FuzzyTopology,
        primal: FuzzyPrimal,
        lattice: Arc<Lattice>,
    ) -> Self {
        let mut in_primal = vec![false; lattice.len()];
        for s in primal.members() {
            in_primal[s.lattice_index()] = true;
        }
        PrimalSpace {
            universe,
            topology,
            primal,
            lattice,
            in_primal: Arc::new(in_primal),
        }
    }

    /// Same universe and topology with another primal.
    pub fn with_primal(&self, primal: FuzzyPrimal) -> Result<Self> {
        if primal.space() != self.space() {
            return Err(Error::SpaceMismatch {
                left: self.space(),
                right: primal.space(),
            });
        }
        Ok(Self::assemble(
            self.universe.clone(),
            self.topology.clone(),
            primal,
            Arc::clone(&self.lattice),
        ))
    }

    /// Same universe and primal with another topology.
    pub fn with_topology(&self, topology: FuzzyTopology) -> Result<Self> {
        if topology.space() != self.space() {
            return Err(Error::SpaceMismatch {
                left: self.space(),
                right: topology.space(),
            });
        }
        Ok(Self::assemble(
            self.universe.clone(),
            topology,
            self.primal.clone(),
            Arc::clone(&self.lattice),
        ))
    }

    pub fn space(&self) -> Space {
        self.topology.space()
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn topology(&self) -> &FuzzyTopology {
        &self.topology
    }

    pub fn primal(&self) -> &FuzzyPrimal {
        &self.primal
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn in_primal(&self, set: &FuzzySet) -> bool {
        self.in_primal[set.lattice_index()]
    }

    /// Lattice sets outside the primal.
    pub fn non_members(&self) -> impl Iterator<Item = &FuzzySet> + '_ {
        self.lattice.iter().filter(|s| !self.in_primal(s))
    }

    pub(crate) fn check(&self, set: &FuzzySet) -> Result<()> {
        if set.space() != self.space() {
            return Err(Error::SpaceMismatch {
                left: self.space(),
                right: set.space(),
            });
        }
        Ok(())
    }

    fn check_point(&self, p: &FuzzyPoint) -> Result<()> {
        let space = self.space();
        if p.support() >= space.n() || p.value().denominator() != space.k() {
            return Err(Error::InvalidSpace(format!(
                "point {p} does not live in {space}"
            )));
        }
        Ok(())
    }

    /// `y_t ∈ λ⋄`: every open q-neighborhood `η` of `y_t` has `λ̄ ⊕ η̄ ∈ P`.
    pub fn point_in_diamond(&self, set: &FuzzySet, p: &FuzzyPoint) -> Result<bool> {
        self.check(set)?;
        self.check_point(p)?;
        Ok(self.point_in_diamond_of(&set.complement(), p.support(), p.t()))
    }

    fn point_in_diamond_of(&self, co_set: &FuzzySet, y: usize, t: u32) -> bool {
        let k = self.space().k();
        self.topology
            .opens()
            .iter()
            .filter(|eta| t + eta.numerators()[y] > k)
            .all(|eta| self.in_primal(&(co_set + &eta.complement())))
    }

    /// `λ⋄(y)` is the largest `t` with `y_t ∈ λ⋄`. Membership is downward
    /// closed in `t`, so a descending scan stops at the first success.
    pub fn diamond(&self, set: &FuzzySet) -> Result<FuzzySet> {
        self.check(set)?;
        Ok(self.diamond_of(set))
    }

    pub(crate) fn diamond_of(&self, set: &FuzzySet) -> FuzzySet {
        let space = self.space();
        let co_set = set.complement();
        let values = (0..space.n())
            .map(|y| {
                (1..=space.k())
                    .rev()
                    .find(|&t| self.point_in_diamond_of(&co_set, y, t))
                    .unwrap_or(0)
            })
            .collect();
        FuzzySet::new(space.k(), values).expect("diamond stays on the grid")
    }

    pub fn cl_diamond(&self, set: &FuzzySet) -> Result<FuzzySet> {
        self.check(set)?;
        Ok(self.cl_diamond_of(set))
    }

    pub(crate) fn cl_diamond_of(&self, set: &FuzzySet) -> FuzzySet {
        set | &self.diamond_of(set)
    }

    /// `λ` is closed in the primal fuzzy topology: `λ⋄ ⊆ λ`.
    pub fn is_primal_closed(&self, set: &FuzzySet) -> Result<bool> {
        self.check(set)?;
        Ok(self.diamond_of(set).is_subset(set))
    }

    /// `Cl⋄(μ̄) = μ̄`.
    pub fn in_primal_topology(&self, set: &FuzzySet) -> Result<bool> {
        self.check(set)?;
        let co = set.complement();
        Ok(self.cl_diamond_of(&co) == co)
    }

    pub fn primal_topology_family(&self, budget: usize) -> Result<FuzzyFamily> {
        self.space().check_budget(budget)?;
        Ok(FuzzyFamily::from_lattice(&self.lattice, |mu| {
            let co = mu.complement();
            self.diamond_of(&co).is_subset(&co)
        }))
    }

    /// The open family, validated as a fuzzy topology.
    pub fn primal_topology(&self, budget: usize) -> Result<FuzzyTopology> {
        FuzzyTopology::new(self.primal_topology_family(budget)?)
    }

    /// `{μ − λ̄ : μ ∈ T, λ ∉ P}`.
    pub fn primal_base(&self, budget: usize) -> Result<FuzzyFamily> {
        self.space().check_budget(budget)?;
        let mut base = FuzzyFamily::new(self.space());
        let co_outside: Vec<FuzzySet> = self.non_members().map(FuzzySet::complement).collect();
        for mu in self.topology.opens() {
            for co in &co_outside {
                base.insert(mu - co)?;
            }
        }
        Ok(base)
    }
}

/// Diamonds of one set under two primals `P₁`, `P₂` and their union.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoPrimalReport {
    pub first: FuzzySet,
    pub second: FuzzySet,
    pub union: FuzzySet,
    /// `None` when `P₁ ⊄ P₂`, otherwise whether `λ⋄₁ ⊆ λ⋄₂`.
    pub inclusion: Option<bool>,
    /// `λ⋄_{P₁∪P₂} = λ⋄₁ ∨ λ⋄₂`.
    pub union_formula: bool,
}

pub fn diamond_monotone_in_primal(
    space: &PrimalSpace,
    other: &FuzzyPrimal,
    set: &FuzzySet,
) -> Result<TwoPrimalReport> {
    space.check(set)?;
    let second_space = space.with_primal(other.clone())?;
    let union_space = space.with_primal(space.primal().union(other)?)?;
    let first = space.diamond_of(set);
    let second = second_space.diamond_of(set);
    let union = union_space.diamond_of(set);
    let inclusion = space
        .primal()
        .members()
        .is_subset(other.members())
        .then(|| first.is_subset(&second));
    let union_formula = union == &first | &second;
    Ok(TwoPrimalReport {
        first,
        second,
        union,
        inclusion,
        union_formula,
    })
}

/// Comparison of `μ⋄` with the closures `Cl(μ − λ̄)` over all `λ ∉ P`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub diamond: FuzzySet,
    /// Those `λ ∉ P` with `μ⋄ ⊄ Cl(μ − λ̄)`.
    pub upper_bound_failures: Vec<FuzzySet>,
    pub meet_of_closures: FuzzySet,
    pub meet_equals_diamond: bool,
    /// Least `λ ∉ P` with `Cl(μ − λ̄) = μ⋄`, if any.
    pub single_witness: Option<FuzzySet>,
}

impl DecompositionReport {
    pub fn holds(&self) -> bool {
        self.upper_bound_failures.is_empty() && self.meet_equals_diamond
    }
}

pub fn diamond_vs_closure_decomposition(
    space: &PrimalSpace,
    set: &FuzzySet,
) -> Result<DecompositionReport> {
    space.check(set)?;
    let diamond = space.diamond_of(set);
    let mut upper_bound_failures = Vec::new();
    let mut meet_of_closures = space.space().one();
    let mut single_witness = None;
    for outside in space.non_members() {
        let cl = space.topology().closure_of(&(set - &outside.complement()));
        if !diamond.is_subset(&cl) {
            upper_bound_failures.push(outside.clone());
        }
        if single_witness.is_none() && cl == diamond {
            single_witness = Some(outside.clone());
        }
        meet_of_closures = &meet_of_closures & &cl;
    }
    Ok(DecompositionReport {
        meet_equals_diamond: meet_of_closures == diamond,
        diamond,
        upper_bound_failures,
        meet_of_closures,
        single_witness,
    })
}
