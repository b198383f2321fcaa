use fuzzy_primal::grid::{FuzzySet, Space};
use proptest::prelude::*;

fn sets(count: usize) -> impl Strategy<Value = Vec<FuzzySet>> {
    (1usize..=4, 1u32..=8).prop_flat_map(move |(n, k)| {
        proptest::collection::vec(proptest::collection::vec(0..=k, n), count).prop_map(move |vs| {
            vs.into_iter()
                .map(|v| FuzzySet::new(k, v).unwrap())
                .collect::<Vec<_>>()
        })
    })
}

fn as_fraction(s: &FuzzySet, y: usize) -> f64 {
    f64::from(s.numerators()[y]) / f64::from(s.k())
}

proptest! {
    #[test]
    fn lukasiewicz_ops_match_real_arithmetic(s in sets(2)) {
        let (a, b) = (&s[0], &s[1]);
        let (sum, prod, diff) = (a + b, a * b, a - b);
        for y in 0..a.len() {
            let (x, z) = (as_fraction(a, y), as_fraction(b, y));
            prop_assert!(((x + z).min(1.0) - as_fraction(&sum, y)).abs() < 1e-12);
            prop_assert!(((x + z - 1.0).max(0.0) - as_fraction(&prod, y)).abs() < 1e-12);
            prop_assert!(((x - z).max(0.0) - as_fraction(&diff, y)).abs() < 1e-12);
        }
    }

    #[test]
    fn lattice_and_lukasiewicz_laws(s in sets(3)) {
        let (a, b, c) = (&s[0], &s[1], &s[2]);
        prop_assert_eq!(a & b, b & a);
        prop_assert_eq!(a | b, b | a);
        prop_assert_eq!(&(a & b) & c, a & &(b & c));
        prop_assert_eq!(&(a | b) | c, a | &(b | c));
        prop_assert_eq!(a & &(a | b), a.clone());
        prop_assert_eq!(a | &(a & b), a.clone());
        prop_assert_eq!(a & &(b | c), &(a & b) | &(a & c));
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(&(a + b) + c, a + &(b + c));
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &a.complement(), a.space().zero());
        prop_assert_eq!(a + &a.complement(), a.space().one());
    }

    #[test]
    fn de_morgan_dualities(s in sets(2)) {
        let (a, b) = (&s[0], &s[1]);
        let (na, nb) = (a.complement(), b.complement());
        prop_assert_eq!(a.complement().complement(), a.clone());
        prop_assert_eq!((a + b).complement(), &na * &nb);
        prop_assert_eq!((a * b).complement(), &na + &nb);
        prop_assert_eq!((a | b).complement(), &na & &nb);
        prop_assert_eq!((a & b).complement(), &na | &nb);
        prop_assert_eq!(a - b, a * &nb);
    }

    #[test]
    fn inclusion_is_the_pointwise_order(s in sets(2)) {
        let (a, b) = (&s[0], &s[1]);
        prop_assert_eq!(a.is_subset(b), a & b == *a);
        prop_assert_eq!(a.is_subset(b), a | b == *b);
        prop_assert_eq!(a.is_subset(b), b.complement().is_subset(&a.complement()));
        prop_assert_eq!(a.leq(b).unwrap(), a.is_subset(b));
    }

    #[test]
    fn quasi_coincidence_is_failure_of_inclusion_in_complement(s in sets(2)) {
        let (a, b) = (&s[0], &s[1]);
        let quasi = a.quasi(b).unwrap();
        prop_assert_eq!(quasi, !a.is_subset(&b.complement()));
        prop_assert_eq!(quasi, b.quasi(a).unwrap());
        prop_assert_eq!(quasi, a.quasi_at(b).is_some());
        prop_assert_eq!(quasi, !(a * b).is_zero());
    }

    #[test]
    fn points_agree_with_their_sets(s in sets(1)) {
        let a = &s[0];
        let space = a.space();
        for p in space.points() {
            let as_set = p.to_set(space.n()).unwrap();
            prop_assert_eq!(p.is_in(a).unwrap(), as_set.is_subset(a));
            prop_assert_eq!(p.quasi(a).unwrap(), as_set.quasi(a).unwrap());
        }
    }

    #[test]
    fn lattice_index_is_position_in_enumeration(s in sets(1)) {
        let a = &s[0];
        let space = a.space();
        prop_assume!(space.lattice_size() <= 1 << 14);
        let position = space.enumerate(1 << 14).unwrap().position(|x| x == *a).unwrap();
        prop_assert_eq!(a.lattice_index(), position);
    }
}

#[test]
fn mismatched_spaces_are_rejected() {
    let a = Space::new(2, 3).unwrap().zero();
    let b = Space::new(2, 4).unwrap().zero();
    assert!(a.oplus(&b).is_err());
    assert!(a.meet(&b).is_err());
    assert!(a.quasi(&b).is_err());
    assert!(FuzzySet::new(3, vec![4]).is_err());
    assert!(Space::new(0, 3).is_err());
    assert!(Space::new(2, 0).is_err());
}

#[test]
fn budget_is_enforced() {
    let space = Space::new(4, 9).unwrap();
    assert_eq!(space.lattice_size(), 10_000);
    assert!(space.check_budget(9_999).is_err());
    assert!(space.check_budget(10_000).is_ok());
}
