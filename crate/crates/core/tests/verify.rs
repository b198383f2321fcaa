use fuzzy_primal::io::{parse_space, render_json, render_text};
use fuzzy_primal::verify::{
    recheck, run_subject, run_suite, search_counterexample, select_ids, suite_passes, ClaimKind,
    Context, GeneratorConfig, Limits, PropertyId, SpaceGenerator, Subject, Verdict,
};

const INCLUDED_POINT: &str = include_str!("data/included_point.space");

fn config(n: (usize, usize), k: (u32, u32)) -> GeneratorConfig {
    GeneratorConfig { n, k, max_seeds: 3 }
}

#[test]
fn prefixes_select_families_of_ids() {
    let ids = select_ids("THM_4_9").unwrap();
    assert_eq!(ids.len(), 5);
    assert!(ids.iter().all(|id| id.as_str().starts_with("THM_4_9_")));
    assert_eq!(
        select_ids("THM_4_1").unwrap_err(),
        "no property matches \"THM_4_1\""
    );
    assert_eq!(
        select_ids("THM_4_10,THM_4_10").unwrap(),
        vec![PropertyId::THM_4_10]
    );
    assert_eq!(
        "THM_5_9".parse::<PropertyId>().unwrap(),
        PropertyId::THM_5_9
    );
}

#[test]
fn asserted_ids_pass_on_seeded_spaces() {
    let asserted: Vec<PropertyId> = PropertyId::ALL
        .iter()
        .copied()
        .filter(|id| id.kind() == ClaimKind::Asserted)
        .collect();
    let reports = run_suite(
        SpaceGenerator::new(5, config((1, 2), (1, 3))),
        &asserted,
        30,
        &Limits::default(),
    );
    let failures: Vec<_> = reports
        .iter()
        .filter(|r| r.verdict == Verdict::Fail)
        .collect();
    assert!(failures.is_empty(), "{}", render_text(&reports));
    assert!(suite_passes(&reports));
    assert!(reports.iter().all(|r| r.verdict != Verdict::Incomplete));
}

#[test]
fn every_witness_rechecks() {
    let limits = Limits::default();
    for recipe in SpaceGenerator::new(6, config((1, 2), (1, 3))).take(15) {
        let subject = recipe.build(limits.max_lattice).unwrap();
        let ctx = Context::new(subject.clone());
        for report in run_subject(&subject, PropertyId::ALL, &limits) {
            if report.verdict.is_violation() {
                let witness = report.witness.as_ref().unwrap();
                assert!(
                    recheck(report.property, &ctx, witness),
                    "{} {witness}",
                    report.property
                );
            }
        }
    }
}

#[test]
fn printed_complement_law_is_refuted_at_half() {
    let reports = run_suite(
        SpaceGenerator::new(3, config((2, 2), (2, 2))),
        &[
            PropertyId::REMARK_2_6_iii_as_printed,
            PropertyId::LUKASIEWICZ_DE_MORGAN,
        ],
        5,
        &Limits::default(),
    );
    for r in &reports {
        match r.property {
            PropertyId::REMARK_2_6_iii_as_printed => {
                assert_eq!(r.verdict, Verdict::RefutedPaperClaim);
                assert_eq!(r.witness.as_ref().unwrap().to_string(), "[1 1] [1 1]");
            }
            _ => assert_eq!(r.verdict, Verdict::Pass),
        }
    }
}

#[test]
fn included_point_space_matches_closed_form() {
    let loaded = parse_space(INCLUDED_POINT, 1 << 12).unwrap();
    let reports = run_subject(
        &Subject::from_loaded(&loaded),
        &[
            PropertyId::EX_4_15,
            PropertyId::EX_4_4,
            PropertyId::THM_4_11,
        ],
        &Limits::default(),
    );
    assert!(
        reports.iter().all(|r| r.verdict == Verdict::Pass),
        "{}",
        render_text(&reports)
    );
}

#[test]
fn inapplicable_claims_say_why() {
    let loaded = parse_space(INCLUDED_POINT, 1 << 12).unwrap();
    let mut subject = Subject::from_loaded(&loaded);
    subject.space = subject
        .space
        .with_topology(fuzzy_primal::FuzzyTopology::discrete(
            subject.space.lattice(),
        ))
        .unwrap();
    let report = &run_subject(&subject, &[PropertyId::EX_4_15], &Limits::default())[0];
    assert_eq!(report.verdict, Verdict::NotApplicable);
    assert_eq!(
        report.witness.as_ref().unwrap().note.as_deref(),
        Some("topology is not indiscrete")
    );
}

#[test]
fn oversized_spaces_are_incomplete() {
    let limits = Limits {
        max_lattice: 8,
        ..Limits::default()
    };
    let reports = run_suite(
        SpaceGenerator::new(1, config((2, 2), (2, 2))),
        &[PropertyId::THM_4_5_i],
        3,
        &limits,
    );
    assert!(reports.iter().all(|r| r.verdict == Verdict::Incomplete));
    let pairs = Limits {
        max_instances: 10,
        ..Limits::default()
    };
    let reports = run_suite(
        SpaceGenerator::new(1, config((2, 2), (2, 2))),
        &[PropertyId::THM_4_5_iv],
        3,
        &pairs,
    );
    assert!(reports.iter().all(|r| r.verdict == Verdict::Incomplete));
}

#[test]
fn suites_are_deterministic_and_canonically_ordered() {
    let run = || {
        run_suite(
            SpaceGenerator::new(42, GeneratorConfig::default()),
            PropertyId::ALL,
            20,
            &Limits::default(),
        )
    };
    let (a, b) = (run(), run());
    assert_eq!(render_json(&a), render_json(&b));
    assert!(a
        .windows(2)
        .all(|w| (&w[0].space_digest, w[0].property.as_str())
            <= (&w[1].space_digest, w[1].property.as_str())));
    for line in render_json(&a).lines() {
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(value.get("runtime_ms").is_none());
        assert!(value["property"].is_string());
    }
}

#[test]
fn intersection_search_shrinks_to_two_points() {
    let found = search_counterexample(
        PropertyId::PRIMAL_INTERSECTION_CLOSED,
        SpaceGenerator::new(1, config((1, 3), (1, 3))),
        200,
        &Limits::default(),
    )
    .unwrap();
    assert_eq!(found.shrunk.verdict, Verdict::CounterexampleFound);
    assert_eq!((found.shrunk.recipe.n, found.shrunk.recipe.k), (2, 1));
    assert!(found.shrunk.recipe.measure() <= found.original.recipe.measure());
}

#[test]
fn searches_for_true_claims_come_back_empty() {
    for id in [
        PropertyId::THM_3_5,
        PropertyId::BASE_IS_TOPOLOGY,
        PropertyId::THM_4_5_vi,
    ] {
        let found = search_counterexample(
            id,
            SpaceGenerator::new(2, config((1, 2), (1, 3))),
            100,
            &Limits::default(),
        );
        assert!(found.is_none(), "{id}");
    }
}

#[test]
fn half_chain_refutes_compatibility_consequences() {
    let text =
        "universe y\ndenominator 2\ntopology generate\n  1\nend\nprimal point_excluding y 1\n";
    let subject = Subject::from_loaded(&parse_space(text, 64).unwrap());
    let ids = [
        PropertyId::THM_5_5,
        PropertyId::THM_5_6,
        PropertyId::THM_5_7,
        PropertyId::DEF_5_1_SUPPORT_FORM,
    ];
    let reports = run_subject(&subject, &ids, &Limits::default());
    let verdicts: Vec<Verdict> = reports.iter().map(|r| r.verdict).collect();
    assert_eq!(
        verdicts,
        vec![
            Verdict::RefutedPaperClaim,
            Verdict::RefutedPaperClaim,
            Verdict::RefutedPaperClaim,
            Verdict::Pass
        ]
    );
}
