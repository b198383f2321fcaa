//! Library operators against direct transcriptions of their definitions,
//! quantifying over fuzzy points and the whole lattice.

use fuzzy_primal::compat::{is_compatible_via_definition, is_compatible_via_support};
use fuzzy_primal::grid::{FuzzyPoint, FuzzySet, Lattice, Space};
use fuzzy_primal::structures::{
    grill_from_primal, primal_from_grill, validate_grill, validate_primal,
    validate_primal_by_complement, validate_topology, FuzzyFamily, FuzzyPrimal,
};
use fuzzy_primal::verify::{GeneratorConfig, SpaceGenerator, Subject};
use fuzzy_primal::PrimalSpace;

fn subjects(seed: u64, n: (usize, usize), k: (u32, u32), count: usize) -> Vec<Subject> {
    let config = GeneratorConfig { n, k, max_seeds: 3 };
    SpaceGenerator::new(seed, config)
        .take(count)
        .map(|r| r.build(1 << 12).unwrap())
        .collect()
}

/// Open q-neighborhoods of a point.
fn open_q_nbhds<'a>(
    space: &'a PrimalSpace,
    p: &'a FuzzyPoint,
) -> impl Iterator<Item = &'a FuzzySet> + 'a {
    space
        .topology()
        .opens()
        .iter()
        .filter(move |mu| p.quasi(mu).unwrap())
}

fn in_diamond_by_definition(space: &PrimalSpace, lam: &FuzzySet, p: &FuzzyPoint) -> bool {
    let co = lam.complement();
    open_q_nbhds(space, p).all(|mu| space.in_primal(&(&co + &mu.complement())))
}

/// Join of the points accepted by `accept`.
fn join_of_points(grid: Space, accept: impl Fn(&FuzzyPoint) -> bool) -> FuzzySet {
    let mut values = vec![0; grid.n()];
    for p in grid.points().filter(|p| accept(p)) {
        values[p.support()] = values[p.support()].max(p.t());
    }
    grid.set(values).unwrap()
}

#[test]
fn diamond_is_the_join_of_its_defining_points() {
    for subject in subjects(11, (1, 2), (1, 4), 40) {
        let space = &subject.space;
        let grid = space.space();
        for lam in space.lattice() {
            let accepted = |p: &FuzzyPoint| in_diamond_by_definition(space, lam, p);
            let diamond = space.diamond(lam).unwrap();
            assert_eq!(diamond, join_of_points(grid, accepted), "λ = {lam}");
            for p in grid.points() {
                assert_eq!(space.point_in_diamond(lam, &p).unwrap(), accepted(&p));
                assert_eq!(
                    p.is_in(&diamond).unwrap(),
                    accepted(&p),
                    "point set is not downward closed"
                );
            }
            assert_eq!(space.cl_diamond(lam).unwrap(), lam | &diamond);
        }
    }
}

#[test]
fn closure_is_the_join_of_closure_points() {
    for subject in subjects(12, (1, 2), (1, 4), 30) {
        let topology = subject.space.topology();
        let grid = subject.space.space();
        let lattice = subject.space.lattice();
        for lam in lattice {
            let closure_point = |p: &FuzzyPoint| {
                lattice
                    .iter()
                    .filter(|eta| topology.is_q_nbhd(p, eta).unwrap())
                    .all(|eta| eta.quasi(lam).unwrap())
            };
            assert_eq!(
                topology.closure(lam).unwrap(),
                join_of_points(grid, closure_point)
            );
            assert_eq!(
                topology.closure_via_interior(lam).unwrap(),
                topology.closure(lam).unwrap()
            );
        }
    }
}

#[test]
fn primal_topology_and_base_match_their_definitions() {
    for subject in subjects(13, (1, 2), (1, 3), 40) {
        let space = &subject.space;
        let lattice = space.lattice();
        let closed_under_cl = |mu: &FuzzySet| space.cl_diamond(mu).unwrap() == *mu;
        let expected = FuzzyFamily::from_lattice(lattice, |mu| closed_under_cl(&mu.complement()));
        let ptop = space.primal_topology_family(1 << 12).unwrap();
        assert_eq!(ptop, expected);
        assert!(validate_topology(&ptop).is_valid());
        assert!(space.topology().opens().is_subset(&ptop));

        let mut base = FuzzyFamily::new(space.space());
        for mu in space.topology().opens().iter() {
            for lam in lattice.iter().filter(|l| !space.in_primal(l)) {
                base.insert(mu - &lam.complement()).unwrap();
            }
        }
        assert_eq!(space.primal_base(1 << 12).unwrap(), base);
        let ptop = space.primal_topology(1 << 12).unwrap();
        assert!(ptop.is_base_for(&base).unwrap());
    }
}

#[test]
fn compatibility_forms_agree_and_always_hold_on_the_grid() {
    for subject in subjects(14, (1, 2), (1, 4), 60) {
        let space = &subject.space;
        let grid = space.space();
        let literal = space.lattice().iter().all(|lam| {
            let escapes = grid.points().filter(|p| p.is_in(lam).unwrap()).all(|p| {
                open_q_nbhds(space, &p)
                    .any(|mu| !space.in_primal(&(&lam.complement() + &mu.complement())))
            });
            !escapes || !space.in_primal(&lam.complement())
        });
        assert_eq!(is_compatible_via_definition(space).compatible, literal);
        assert_eq!(is_compatible_via_support(space).compatible, literal);
        assert!(literal);
    }
}

fn primal_by_axioms(family: &FuzzyFamily, lattice: &Lattice) -> bool {
    let sets: Vec<&FuzzySet> = lattice.iter().collect();
    let one = lattice.space().one();
    !family.contains(&one)
        && sets.iter().all(|a| {
            sets.iter().all(|b| {
                let down = !(family.contains(a) && b.is_subset(a)) || family.contains(b);
                let prime =
                    !family.contains(&(*a & *b)) || family.contains(a) || family.contains(b);
                down && prime
            })
        })
}

#[test]
fn validators_match_axioms_on_every_family_of_a_small_lattice() {
    for (n, k) in [(1, 1), (1, 2), (1, 3), (2, 1)] {
        let lattice = Lattice::new(Space::new(n, k).unwrap(), 64).unwrap();
        let sets: Vec<FuzzySet> = lattice.iter().cloned().collect();
        for mask in 0u32..(1 << sets.len()) {
            let family = FuzzyFamily::from_sets(
                lattice.space(),
                sets.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, s)| s.clone()),
            )
            .unwrap();
            let expected = primal_by_axioms(&family, &lattice);
            assert_eq!(
                validate_primal(&family, &lattice).unwrap().is_valid(),
                expected
            );
            assert_eq!(
                validate_primal_by_complement(&family, &lattice)
                    .unwrap()
                    .is_valid(),
                expected
            );
            let complements = family.complement_image();
            assert_eq!(
                validate_grill(&complements, &lattice).unwrap().is_valid(),
                expected
            );
        }
    }
}

#[test]
fn every_primal_on_a_small_lattice_excludes_a_filter() {
    let lattice = Lattice::new(Space::new(2, 1).unwrap(), 64).unwrap();
    let sets: Vec<FuzzySet> = lattice.iter().cloned().collect();
    let mut primals = 0;
    for mask in 0u32..(1 << sets.len()) {
        let family = FuzzyFamily::from_sets(
            lattice.space(),
            sets.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, s)| s.clone()),
        )
        .unwrap();
        if family.is_empty() || !primal_by_axioms(&family, &lattice) {
            continue;
        }
        primals += 1;
        let primal = FuzzyPrimal::explicit(family.clone(), &lattice).unwrap();
        let generator = primal.filter_generator(&lattice);
        assert_eq!(
            FuzzyPrimal::excluding_filter(&lattice, &generator)
                .unwrap()
                .members(),
            &family
        );
        let back = primal_from_grill(&grill_from_primal(&primal));
        assert_eq!(back.members(), &family);
    }
    assert_eq!(primals, 3);
}
