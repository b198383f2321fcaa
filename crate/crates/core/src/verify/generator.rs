use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::Subject;
use crate::error::Result;
use crate::grid::{FuzzySet, Lattice, Space, Universe};
use crate::primal_ops::PrimalSpace;
use crate::structures::{FuzzyFamily, FuzzyPrimal, FuzzyTopology};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum PrimalRecipe {
    Trivial,
    PointExcluding {
        support: usize,
        t: u32,
    },
    /// `{λ : a ⊄ λ}` for the listed `a`.
    Filter(Vec<u32>),
}

impl PrimalRecipe {
    fn build(&self, lattice: &Lattice) -> Result<FuzzyPrimal> {
        let space = lattice.space();
        match self {
            PrimalRecipe::Trivial => Ok(FuzzyPrimal::trivial(lattice)),
            PrimalRecipe::PointExcluding { support, t } => {
                FuzzyPrimal::point_excluding(lattice, space.point(*support, *t)?)
            }
            PrimalRecipe::Filter(a) => {
                FuzzyPrimal::excluding_filter(lattice, &space.set(a.clone())?)
            }
        }
    }

    fn weight(&self) -> u64 {
        match self {
            PrimalRecipe::Trivial => 0,
            PrimalRecipe::PointExcluding { t, .. } => u64::from(*t),
            PrimalRecipe::Filter(a) => a.iter().map(|&v| u64::from(v)).sum(),
        }
    }

    fn drop_coordinate(&self, y: usize) -> PrimalRecipe {
        match self {
            PrimalRecipe::PointExcluding { support, .. } if *support == y => PrimalRecipe::Trivial,
            PrimalRecipe::PointExcluding { support, t } => PrimalRecipe::PointExcluding {
                support: if *support > y { support - 1 } else { *support },
                t: *t,
            },
            PrimalRecipe::Filter(a) => {
                let mut a = a.clone();
                a.remove(y);
                PrimalRecipe::Filter(a)
            }
            PrimalRecipe::Trivial => PrimalRecipe::Trivial,
        }
    }

    fn rescale(&self, k: u32, to: u32) -> PrimalRecipe {
        match self {
            PrimalRecipe::PointExcluding { support, t } => PrimalRecipe::PointExcluding {
                support: *support,
                t: (t * to / k).max(1),
            },
            PrimalRecipe::Filter(a) => {
                PrimalRecipe::Filter(a.iter().map(|v| (v * to).div_ceil(k)).collect())
            }
            PrimalRecipe::Trivial => PrimalRecipe::Trivial,
        }
    }

    fn smaller(&self) -> Vec<PrimalRecipe> {
        let mut out = vec![PrimalRecipe::Trivial];
        match self {
            PrimalRecipe::PointExcluding { support, t } if *t > 1 => {
                out.push(PrimalRecipe::PointExcluding {
                    support: *support,
                    t: 1,
                });
                out.push(PrimalRecipe::PointExcluding {
                    support: *support,
                    t: t - 1,
                });
            }
            PrimalRecipe::Filter(a) => {
                for y in 0..a.len() {
                    if a[y] > 0 {
                        for v in [0, a[y] - 1] {
                            let mut b = a.clone();
                            b[y] = v;
                            out.push(PrimalRecipe::Filter(b));
                        }
                    }
                }
            }
            _ => {}
        }
        out.retain(|r| r.weight() < self.weight());
        out
    }
}

/// Everything needed to rebuild a generated space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SpaceRecipe {
    pub n: usize,
    pub k: u32,
    /// The topology is the one generated by these sets.
    pub seeds: Vec<Vec<u32>>,
    pub primal: PrimalRecipe,
    pub second: PrimalRecipe,
}

impl SpaceRecipe {
    pub fn build(&self, budget: usize) -> Result<Subject> {
        let space = Space::new(self.n, self.k)?;
        let lattice = Lattice::new(space, budget)?;
        let seeds = self
            .seeds
            .iter()
            .map(|v| space.set(v.clone()))
            .collect::<Result<Vec<FuzzySet>>>()?;
        let topology = FuzzyTopology::generate(&FuzzyFamily::from_sets(space, seeds)?, budget)?;
        let primal = self.primal.build(&lattice)?;
        let second = self.second.build(&lattice)?;
        Ok(Subject::new(
            PrimalSpace::new(Universe::numbered(self.n), topology, primal)?,
            second,
        ))
    }

    /// Lexicographic size used to guarantee that shrinking terminates.
    pub fn measure(&self) -> (usize, u32, usize, u64, u64) {
        let spread: u64 = self
            .seeds
            .iter()
            .flatten()
            .map(|&v| u64::from(v.min(self.k - v)))
            .sum();
        (
            self.n,
            self.k,
            self.seeds.len(),
            spread,
            self.primal.weight() + self.second.weight(),
        )
    }

    /// Candidate simplifications, in order: fewer points, a coarser grid,
    /// fewer or more extreme seeds, smaller primal generators.
    pub fn shrink_candidates(&self) -> Vec<SpaceRecipe> {
        let mut out = Vec::new();
        if self.n > 1 {
            for y in 0..self.n {
                out.push(SpaceRecipe {
                    n: self.n - 1,
                    k: self.k,
                    seeds: self
                        .seeds
                        .iter()
                        .map(|v| {
                            let mut v = v.clone();
                            v.remove(y);
                            v
                        })
                        .collect(),
                    primal: self.primal.drop_coordinate(y),
                    second: self.second.drop_coordinate(y),
                });
            }
        }
        for to in 1..self.k {
            out.push(SpaceRecipe {
                n: self.n,
                k: to,
                seeds: self
                    .seeds
                    .iter()
                    .map(|v| v.iter().map(|x| x * to / self.k).collect())
                    .collect(),
                primal: self.primal.rescale(self.k, to),
                second: self.second.rescale(self.k, to),
            });
        }
        for i in 0..self.seeds.len() {
            let mut fewer = self.clone();
            fewer.seeds.remove(i);
            out.push(fewer);
        }
        for i in 0..self.seeds.len() {
            for y in 0..self.n {
                for v in [0, self.k] {
                    if self.seeds[i][y] != v {
                        let mut moved = self.clone();
                        moved.seeds[i][y] = v;
                        out.push(moved);
                    }
                }
            }
        }
        for p in self.primal.smaller() {
            out.push(SpaceRecipe {
                primal: p,
                ..self.clone()
            });
        }
        for p in self.second.smaller() {
            out.push(SpaceRecipe {
                second: p,
                ..self.clone()
            });
        }
        let measure = self.measure();
        out.retain(|c| c.measure() < measure);
        out
    }
}

/// Ranges sampled by [`SpaceGenerator`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub n: (usize, usize),
    pub k: (u32, u32),
    pub max_seeds: usize,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            n: (1, 2),
            k: (1, 2),
            max_seeds: 3,
        }
    }
}

/// Deterministic stream of space recipes.
///
/// Topologies are generated from 0 to `max_seeds` uniformly random seed
/// sets, so they are not uniform over all topologies. Each primal is trivial
/// with probability 1/4, point-excluding with probability 1/4, and otherwise
/// excludes the filter above a uniformly random nonzero set.
#[derive(Debug, Clone)]
pub struct SpaceGenerator {
    config: GeneratorConfig,
    rng: ChaCha8Rng,
}

impl SpaceGenerator {
    pub fn new(seed: u64, config: GeneratorConfig) -> Self {
        SpaceGenerator {
            config,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn vector(&mut self, n: usize, k: u32) -> Vec<u32> {
        (0..n).map(|_| self.rng.gen_range(0..=k)).collect()
    }

    fn primal(&mut self, n: usize, k: u32) -> PrimalRecipe {
        match self.rng.gen_range(0..4) {
            0 => PrimalRecipe::Trivial,
            1 => PrimalRecipe::PointExcluding {
                support: self.rng.gen_range(0..n),
                t: self.rng.gen_range(1..=k),
            },
            _ => loop {
                let a = self.vector(n, k);
                if a.iter().any(|&v| v > 0) {
                    break PrimalRecipe::Filter(a);
                }
            },
        }
    }
}

impl Iterator for SpaceGenerator {
    type Item = SpaceRecipe;

    fn next(&mut self) -> Option<SpaceRecipe> {
        let (n_lo, n_hi) = self.config.n;
        let (k_lo, k_hi) = self.config.k;
        let n = self.rng.gen_range(n_lo..=n_hi);
        let k = self.rng.gen_range(k_lo..=k_hi);
        let count = self.rng.gen_range(0..=self.config.max_seeds);
        let seeds = (0..count).map(|_| self.vector(n, k)).collect();
        let primal = self.primal(n, k);
        let second = self.primal(n, k);
        Some(SpaceRecipe {
            n,
            k,
            seeds,
            primal,
            second,
        })
    }
}
