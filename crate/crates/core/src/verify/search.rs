use rayon::prelude::*;
use serde::Serialize;

use super::properties::{evaluate, Context};
use super::{Limits, PropertyId, SpaceGenerator, SpaceRecipe, Verdict, Witness};
use crate::io::{serialize_space, LoadedSpace};

/// A space on which a property fails.
#[derive(Debug, Clone, Serialize)]
pub struct Finding {
    pub recipe: SpaceRecipe,
    pub document: String,
    pub digest: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub property: PropertyId,
    /// Position of the first failing recipe in the generator stream.
    pub index: usize,
    pub original: Finding,
    pub shrunk: Finding,
}

fn probe(id: PropertyId, recipe: &SpaceRecipe, limits: &Limits) -> Option<Finding> {
    let subject = recipe.build(limits.max_lattice).ok()?;
    let ctx = Context::new(subject);
    let (verdict, witness) = evaluate(id, &ctx, limits);
    if !verdict.is_violation() {
        return None;
    }
    let subject = ctx.subject();
    let loaded = LoadedSpace::new(subject.space.clone(), Some(subject.second.clone()));
    Some(Finding {
        recipe: recipe.clone(),
        document: serialize_space(&loaded),
        digest: loaded.digest(),
        verdict,
        witness,
    })
}

/// The first of `spaces` generated recipes on which `id` fails, together
/// with a greedily shrunk version: fewer points first, then a coarser grid,
/// then simpler seed sets and primal generators.
pub fn search_counterexample(
    id: PropertyId,
    generator: SpaceGenerator,
    spaces: usize,
    limits: &Limits,
) -> Option<Counterexample> {
    let recipes: Vec<SpaceRecipe> = generator.take(spaces).collect();
    let (index, original) = recipes
        .par_iter()
        .enumerate()
        .find_map_first(|(i, r)| probe(id, r, limits).map(|f| (i, f)))?;

    let mut shrunk = original.clone();
    'improve: loop {
        for candidate in shrunk.recipe.shrink_candidates() {
            if let Some(found) = probe(id, &candidate, limits) {
                shrunk = found;
                continue 'improve;
            }
        }
        break;
    }
    Some(Counterexample {
        property: id,
        index,
        original,
        shrunk,
    })
}
