use std::collections::BTreeSet;

use crate::grid::FuzzySet;

/// Lexicographic size of a witness tuple: distinct sets, distinct values
/// per set, distance of the values from {0, k}, total mass.
fn measure(sets: &[FuzzySet]) -> (usize, usize, u64, u64) {
    let distinct: BTreeSet<&FuzzySet> = sets.iter().collect();
    let values: usize = sets
        .iter()
        .map(|s| s.numerators().iter().collect::<BTreeSet<_>>().len())
        .sum();
    let spread = sets
        .iter()
        .flat_map(|s| {
            s.numerators()
                .iter()
                .map(move |&v| u64::from(v.min(s.k() - v)))
        })
        .sum();
    let mass = sets
        .iter()
        .flat_map(|s| s.numerators().iter().map(|&v| u64::from(v)))
        .sum();
    (distinct.len(), values, spread, mass)
}

fn candidates(sets: &[FuzzySet]) -> Vec<Vec<FuzzySet>> {
    let mut out = Vec::new();
    let Some(first) = sets.first() else {
        return out;
    };
    let (n, k) = (first.len(), first.k());
    let constant = |v: u32| FuzzySet::new(k, vec![v; n]).expect("grid value");

    for i in 0..sets.len() {
        for j in 0..sets.len() {
            if i != j && sets[i] != sets[j] {
                let mut c = sets.to_vec();
                c[j] = sets[i].clone();
                out.push(c);
            }
        }
    }
    let levels: BTreeSet<u32> = sets
        .iter()
        .flat_map(|s| s.numerators().iter().copied())
        .collect();
    for &v in &levels {
        out.push(vec![constant(v); sets.len()]);
    }
    for i in 0..sets.len() {
        for &v in &levels {
            let mut c = sets.to_vec();
            c[i] = constant(v);
            out.push(c);
        }
    }
    for i in 0..sets.len() {
        for y in 0..n {
            let v = sets[i].numerators()[y];
            let step = if v <= k - v {
                v.saturating_sub(1)
            } else {
                (v + 1).min(k)
            };
            for w in [0, k, step] {
                if w != v {
                    let mut c = sets.to_vec();
                    c[i] = sets[i].with_value(y, w).expect("grid value");
                    out.push(c);
                }
            }
        }
    }
    out
}

/// Greedily simplifies a failing tuple while `holds` keeps rejecting it.
/// Moves that make slots equal, make sets constant, or push values toward
/// 0 or k are accepted only when they strictly decrease the tuple's size.
pub(crate) fn minimize(sets: Vec<FuzzySet>, holds: &dyn Fn(&[&FuzzySet]) -> bool) -> Vec<FuzzySet> {
    let fails = |c: &[FuzzySet]| {
        let refs: Vec<&FuzzySet> = c.iter().collect();
        !holds(&refs)
    };
    let mut current = sets;
    'improve: loop {
        let size = measure(&current);
        for c in candidates(&current) {
            if measure(&c) < size && fails(&c) {
                current = c;
                continue 'improve;
            }
        }
        return current;
    }
}
