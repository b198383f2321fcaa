use std::sync::OnceLock;

use super::shrink::minimize;
use super::{ClaimKind, Limits, PropertyId, Subject, Verdict, Witness};
use crate::compat::{
    consequence_report, equivalence_report, find_decomposition, is_compatible_via_definition,
    is_compatible_via_support, square_of,
};
use crate::grid::{FuzzyPoint, FuzzySet, Lattice, Space};
use crate::primal_ops::{diamond_vs_closure_decomposition, PrimalSpace};
use crate::structures::{
    validate_grill, validate_primal, validate_primal_by_complement, validate_topology, FuzzyFamily,
    FuzzyGrill, FuzzyPrimal, FuzzyTopology,
};

/// A space under test with its derived data computed once.
pub struct Context {
    subject: Subject,
    second: PrimalSpace,
    union: PrimalSpace,
    diamonds: Vec<FuzzySet>,
    closures: Vec<FuzzySet>,
    ptop: OnceLock<FuzzyFamily>,
    base: OnceLock<FuzzyFamily>,
    second_ptop: OnceLock<FuzzyFamily>,
    union_ptop: OnceLock<FuzzyFamily>,
    compatible: OnceLock<bool>,
    trivial: OnceLock<PrimalSpace>,
    indiscrete: OnceLock<PrimalSpace>,
}

impl Context {
    pub fn new(subject: Subject) -> Self {
        let space = &subject.space;
        let second = space
            .with_primal(subject.second.clone())
            .expect("second primal shares the space");
        let union = space
            .with_primal(space.primal().union(&subject.second).expect("same space"))
            .expect("union shares the space");
        let diamonds = space
            .lattice()
            .iter()
            .map(|s| space.diamond_of(s))
            .collect();
        let closures = space
            .lattice()
            .iter()
            .map(|s| space.topology().closure_of(s))
            .collect();
        Context {
            subject,
            second,
            union,
            diamonds,
            closures,
            ptop: OnceLock::new(),
            base: OnceLock::new(),
            second_ptop: OnceLock::new(),
            union_ptop: OnceLock::new(),
            compatible: OnceLock::new(),
            trivial: OnceLock::new(),
            indiscrete: OnceLock::new(),
        }
    }

    pub fn subject(&self) -> &Subject {
        &self.subject
    }

    fn s(&self) -> &PrimalSpace {
        &self.subject.space
    }

    fn lattice(&self) -> &Lattice {
        self.s().lattice()
    }

    fn grid(&self) -> Space {
        self.s().space()
    }

    fn d(&self, set: &FuzzySet) -> &FuzzySet {
        &self.diamonds[set.lattice_index()]
    }

    fn cl(&self, set: &FuzzySet) -> &FuzzySet {
        &self.closures[set.lattice_index()]
    }

    fn cld(&self, set: &FuzzySet) -> FuzzySet {
        set | self.d(set)
    }

    fn in_p(&self, set: &FuzzySet) -> bool {
        self.s().in_primal(set)
    }

    fn ptop(&self) -> &FuzzyFamily {
        self.ptop.get_or_init(|| {
            FuzzyFamily::from_lattice(self.lattice(), |mu| {
                let co = mu.complement();
                self.d(&co).is_subset(&co)
            })
        })
    }

    fn base(&self) -> &FuzzyFamily {
        self.base.get_or_init(|| {
            self.s()
                .primal_base(usize::MAX)
                .expect("lattice already built")
        })
    }

    fn second_ptop(&self) -> &FuzzyFamily {
        self.second_ptop.get_or_init(|| {
            self.second
                .primal_topology_family(usize::MAX)
                .expect("lattice already built")
        })
    }

    fn union_ptop(&self) -> &FuzzyFamily {
        self.union_ptop.get_or_init(|| {
            self.union
                .primal_topology_family(usize::MAX)
                .expect("lattice already built")
        })
    }

    fn compatible(&self) -> bool {
        *self
            .compatible
            .get_or_init(|| is_compatible_via_definition(self.s()).compatible)
    }

    fn trivial(&self) -> &PrimalSpace {
        self.trivial.get_or_init(|| {
            self.s()
                .with_primal(FuzzyPrimal::trivial(self.lattice()))
                .expect("same space")
        })
    }

    fn indiscrete(&self) -> &PrimalSpace {
        self.indiscrete.get_or_init(|| {
            self.s()
                .with_topology(FuzzyTopology::indiscrete(self.grid()))
                .expect("same space")
        })
    }

    /// Primal spaces over the same topology paired as (smaller, larger).
    fn nested_pairs(&self) -> Vec<(&PrimalSpace, &PrimalSpace)> {
        let (p, g) = (self.s(), &self.second);
        let mut pairs = vec![(p, &self.union), (g, &self.union)];
        if p.primal().members().is_subset(g.primal().members()) {
            pairs.push((p, g));
        }
        if g.primal().members().is_subset(p.primal().members()) {
            pairs.push((g, p));
        }
        pairs
    }
}

enum Check {
    Holds,
    Fails(Vec<FuzzySet>, Option<String>),
}

impl Check {
    fn from(ok: bool) -> Check {
        if ok {
            Check::Holds
        } else {
            Check::Fails(Vec::new(), None)
        }
    }
}

type SetsFn = fn(&Context, &[&FuzzySet]) -> bool;
type SetPointFn = fn(&Context, &FuzzySet, &FuzzyPoint) -> bool;

enum Shape {
    Global(fn(&Context) -> Check),
    Sets(usize, SetsFn),
    Point(fn(&Context, &FuzzyPoint) -> bool),
    SetPoint(SetPointFn),
}

struct Property {
    shape: Shape,
    applies: fn(&Context) -> Option<&'static str>,
}

fn always(_: &Context) -> Option<&'static str> {
    None
}

fn needs_compatible(ctx: &Context) -> Option<&'static str> {
    (!ctx.compatible()).then_some("topology is not compatible with the primal")
}

fn global(f: fn(&Context) -> Check) -> Property {
    Property {
        shape: Shape::Global(f),
        applies: always,
    }
}

fn sets(arity: usize, f: SetsFn) -> Property {
    Property {
        shape: Shape::Sets(arity, f),
        applies: always,
    }
}

fn with_point(f: SetPointFn) -> Property {
    Property {
        shape: Shape::SetPoint(f),
        applies: always,
    }
}

fn primal_valid(family: &FuzzyFamily, lattice: &Lattice) -> Check {
    let report = validate_primal(family, lattice).expect("same space");
    match report.violation {
        None => Check::Holds,
        Some(v) => Check::Fails(
            v.witnesses,
            Some(format!("axiom ({}) fails", v.axiom.number())),
        ),
    }
}

fn first_missing(small: &FuzzyFamily, large: &FuzzyFamily) -> Check {
    match small.iter().find(|s| !large.contains(s)) {
        None => Check::Holds,
        Some(s) => Check::Fails(
            vec![s.clone()],
            Some("member missing from the larger family".into()),
        ),
    }
}

fn same_family(a: &FuzzyFamily, b: &FuzzyFamily) -> Check {
    match first_missing(a, b) {
        Check::Holds => first_missing(b, a),
        failed => failed,
    }
}

fn property(id: PropertyId) -> Property {
    use PropertyId::*;
    match id {
        REMARK_2_6_i => sets(3, |_, s| {
            !s[0].is_subset(s[1]) || (s[0] + s[2]).is_subset(&(s[1] + s[2]))
        }),
        REMARK_2_6_ii => sets(3, |_, s| {
            (&(s[0] + s[2]) & &(s[1] + s[2])).is_subset(&(&(s[0] & s[1]) + s[2]))
        }),
        REMARK_2_6_iii_as_printed => sets(2, |_, s| {
            (s[0] + s[1]).complement() == &s[0].complement() + &s[1].complement()
        }),
        LUKASIEWICZ_DE_MORGAN => sets(2, |_, s| {
            let (a, b) = (s[0].complement(), s[1].complement());
            (s[0] + s[1]).complement() == &a * &b && (s[0] * s[1]).complement() == &a + &b
        }),
        LATTICE_DE_MORGAN => sets(2, |_, s| {
            let (a, b) = (s[0].complement(), s[1].complement());
            (s[0] | s[1]).complement() == &a & &b && (s[0] & s[1]).complement() == &a | &b
        }),
        COMPLEMENT_INVOLUTION => sets(2, |_, s| {
            s[0].complement().complement() == *s[0]
                && (!s[0].is_subset(s[1]) || s[1].complement().is_subset(&s[0].complement()))
        }),
        LEMMA_2_10_i => sets(2, |_, s| {
            let (a, b, k) = (s[0].numerators(), s[1].numerators(), s[0].k());
            (0..a.len()).all(|y| a[y] + b[y] <= k || a[y].min(b[y]) != 0)
        }),
        LEMMA_2_10_ii => with_point(|_, mu, p| {
            p.is_in(mu).expect("same space") != p.quasi(&mu.complement()).expect("same space")
        }),
        LEMMA_2_10_iii => sets(2, |_, s| {
            s[0].is_subset(s[1]) != s[0].quasi(&s[1].complement()).expect("same space")
        }),
        CLOSURE_INTERIOR_DUALITY => sets(1, |ctx, s| {
            *ctx.cl(s[0])
                == ctx
                    .s()
                    .topology()
                    .closure_via_interior(s[0])
                    .expect("same space")
        }),

        THM_3_2 => sets(1, |ctx, s| {
            let family = ctx.s().primal().members().toggled(s[0]);
            let lattice = ctx.lattice();
            validate_primal(&family, lattice)
                .expect("same space")
                .is_valid()
                == validate_primal_by_complement(&family, lattice)
                    .expect("same space")
                    .is_valid()
        }),
        EX_3_3_i => {
            global(|ctx| primal_valid(FuzzyPrimal::trivial(ctx.lattice()).members(), ctx.lattice()))
        }
        EX_3_3_ii_as_printed => global(|ctx| {
            for mu in ctx.lattice().iter().filter(|m| !m.is_one()) {
                let below = FuzzyFamily::from_lattice(ctx.lattice(), |l| l.is_subset(mu));
                if let Check::Fails(pair, note) = primal_valid(&below, ctx.lattice()) {
                    let sets = std::iter::once(mu.clone()).chain(pair).collect();
                    return Check::Fails(sets, note);
                }
            }
            Check::Holds
        }),
        EX_3_3_iii => Property {
            shape: Shape::Point(|ctx, p| {
                let primal =
                    FuzzyPrimal::point_excluding(ctx.lattice(), *p).expect("point on the grid");
                validate_primal(primal.members(), ctx.lattice())
                    .expect("same space")
                    .is_valid()
            }),
            applies: always,
        },
        EX_3_3_iv_as_printed => global(|ctx| {
            let zero = FuzzyFamily::from_sets(ctx.grid(), [ctx.grid().zero()]).expect("same space");
            primal_valid(&zero, ctx.lattice())
        }),
        FULL_AND_ZERO_NOT_PRIMAL => Property {
            shape: Shape::Global(|ctx| {
                let lattice = ctx.lattice();
                let full = FuzzyFamily::from_lattice(lattice, |_| true);
                let zero =
                    FuzzyFamily::from_sets(ctx.grid(), [ctx.grid().zero()]).expect("same space");
                let accepted =
                    |f: &FuzzyFamily| validate_primal(f, lattice).expect("same space").is_valid();
                match (accepted(&full), accepted(&zero)) {
                    (false, false) => Check::Holds,
                    (true, _) => Check::Fails(vec![], Some("full lattice accepted".into())),
                    (_, true) => {
                        Check::Fails(vec![ctx.grid().zero()], Some("{0_Y} accepted".into()))
                    }
                }
            }),
            applies: |ctx| {
                (ctx.grid().n() < 2).then_some("{0_Y} is a primal on a one-point universe")
            },
        },
        THM_3_4 => sets(1, |ctx, s| {
            let grill = FuzzyGrill::excluding_ideal(ctx.lattice(), s[0]);
            let primal = FuzzyPrimal::from_grill(&grill);
            validate_primal(primal.members(), ctx.lattice())
                .expect("same space")
                .is_valid()
        }),
        COR_3_4 => sets(1, |ctx, s| {
            let lattice = ctx.lattice();
            let primal = FuzzyPrimal::excluding_filter(lattice, s[0]).expect("same space");
            let grill = primal.to_grill();
            validate_grill(grill.members(), lattice)
                .expect("same space")
                .is_valid()
                && FuzzyPrimal::from_grill(&grill).members() == primal.members()
        }),
        THM_3_5 => global(|ctx| {
            let union = ctx
                .s()
                .primal()
                .union(&ctx.subject.second)
                .expect("same space");
            primal_valid(union.members(), ctx.lattice())
        }),
        PRIMAL_INTERSECTION_CLOSED => global(|ctx| {
            let both = ctx
                .s()
                .primal()
                .intersection_raw(&ctx.subject.second)
                .expect("same space");
            primal_valid(&both, ctx.lattice())
        }),

        EX_4_3 => sets(1, |ctx, s| ctx.trivial().diamond_of(s[0]) == *ctx.cl(s[0])),
        EX_4_4 => sets(1, |ctx, s| {
            let expected = if ctx.in_p(&s[0].complement()) {
                ctx.grid().one()
            } else {
                ctx.grid().zero()
            };
            ctx.indiscrete().diamond_of(s[0]) == expected
        }),
        THM_4_5_i => global(|ctx| Check::from(ctx.d(&ctx.grid().zero()).is_zero())),
        THM_4_5_ii => sets(1, |ctx, s| {
            let d = ctx.d(s[0]);
            ctx.cl(d) == d && d.is_subset(ctx.cl(s[0]))
        }),
        THM_4_5_iii => sets(1, |ctx, s| {
            ctx.in_p(&s[0].complement()) || ctx.d(s[0]).is_zero()
        }),
        THM_4_5_iv => sets(2, |ctx, s| {
            !s[0].is_subset(s[1]) || ctx.d(s[0]).is_subset(ctx.d(s[1]))
        }),
        THM_4_5_v => sets(1, |ctx, s| ctx.d(ctx.d(s[0])).is_subset(ctx.d(s[0]))),
        THM_4_5_vi => sets(2, |ctx, s| {
            *ctx.d(&(s[0] | s[1])) == ctx.d(s[0]) | ctx.d(s[1])
        }),
        THM_4_5_vii => sets(2, |ctx, s| {
            ctx.d(&(s[0] & s[1]))
                .is_subset(&(ctx.d(s[0]) & ctx.d(s[1])))
        }),
        THM_4_5_viii => sets(2, |ctx, s| {
            ctx.in_p(&s[0].complement()) || ctx.d(&(s[0] | s[1])) == ctx.d(s[1])
        }),
        THM_4_6 => sets(1, |ctx, s| {
            diamond_vs_closure_decomposition(ctx.s(), s[0])
                .expect("same space")
                .holds()
        }),
        THM_4_6_single_witness => sets(1, |ctx, s| {
            diamond_vs_closure_decomposition(ctx.s(), s[0])
                .expect("same space")
                .single_witness
                .is_some()
        }),
        THM_4_7_i => sets(1, |ctx, s| {
            ctx.nested_pairs()
                .into_iter()
                .all(|(small, large)| small.diamond_of(s[0]).is_subset(&large.diamond_of(s[0])))
        }),
        THM_4_7_ii => sets(1, |ctx, s| {
            ctx.union.diamond_of(s[0]) == ctx.d(s[0]) | &ctx.second.diamond_of(s[0])
        }),
        DIAMOND_POINT_AGREEMENT => with_point(|ctx, s, p| {
            ctx.s().point_in_diamond(s, p).expect("same space")
                == (p.t() <= ctx.d(s).numerators()[p.support()])
        }),
        THM_4_9_i => global(|ctx| Check::from(ctx.cld(&ctx.grid().zero()).is_zero())),
        THM_4_9_ii => sets(1, |ctx, s| s[0].is_subset(&ctx.cld(s[0]))),
        THM_4_9_iii => sets(2, |ctx, s| {
            !s[0].is_subset(s[1]) || ctx.cld(s[0]).is_subset(&ctx.cld(s[1]))
        }),
        THM_4_9_iv => sets(2, |ctx, s| {
            ctx.cld(&(s[0] | s[1])) == &ctx.cld(s[0]) | &ctx.cld(s[1])
        }),
        THM_4_9_v => sets(1, |ctx, s| {
            let c = ctx.cld(s[0]);
            ctx.cld(&c) == c
        }),
        THM_4_10 => sets(2, |ctx, s| {
            let (a, b) = (s[0], s[1]);
            let ca = ctx.cld(a);
            ctx.cld(&ctx.grid().zero()).is_zero()
                && a.is_subset(&ca)
                && ctx.cld(&(a | b)) == &ca | &ctx.cld(b)
                && ctx.cld(&ca) == ca
        }),
        THM_4_11 => global(|ctx| match validate_topology(ctx.ptop()).violation {
            None => Check::Holds,
            Some(v) => Check::Fails(
                v.witnesses,
                Some(format!("axiom ({}) fails", v.axiom.number())),
            ),
        }),
        THM_4_13 => global(|ctx| {
            let Ok(ptop) = FuzzyTopology::new(ctx.ptop().clone()) else {
                return Check::Fails(vec![], Some("primal topology is not a topology".into()));
            };
            match ptop.base_failure(ctx.base()) {
                Ok(None) => Check::Holds,
                Ok(Some((p, mu))) => Check::Fails(
                    vec![p.to_set(ctx.grid().n()).expect("point on the grid"), mu],
                    Some("no base member serves this point and open set".into()),
                ),
                Err(e) => Check::Fails(vec![], Some(e.to_string())),
            }
        }),
        THM_4_14 => global(|ctx| first_missing(ctx.s().topology().opens(), ctx.ptop())),
        EX_4_15 => Property {
            shape: Shape::Global(|ctx| {
                let p = ctx
                    .s()
                    .primal()
                    .excluded_point(ctx.lattice())
                    .expect("checked by applies");
                let expected = FuzzyFamily::from_lattice(ctx.lattice(), |m| {
                    m.is_zero() || p.t() <= m.numerators()[p.support()]
                });
                same_family(ctx.ptop(), &expected)
            }),
            applies: |ctx| {
                if !ctx.s().topology().is_indiscrete() {
                    Some("topology is not indiscrete")
                } else if ctx.s().primal().excluded_point(ctx.lattice()).is_none() {
                    Some("primal does not exclude a single point")
                } else {
                    None
                }
            },
        },
        EX_TRIVIAL_PRIMAL => global(|ctx| {
            let trivial = ctx.trivial();
            let opens = ctx.s().topology().opens();
            let ptop = trivial
                .primal_topology_family(usize::MAX)
                .expect("lattice already built");
            match same_family(&ptop, opens) {
                Check::Holds => same_family(
                    &trivial
                        .primal_base(usize::MAX)
                        .expect("lattice already built"),
                    opens,
                ),
                failed => failed,
            }
        }),
        THM_4_16_i => sets(1, |ctx, s| {
            ctx.in_p(&s[0].complement()) || ctx.d(s[0]).is_subset(s[0])
        }),
        THM_4_16_ii => sets(1, |ctx, s| {
            ctx.s().is_primal_closed(ctx.d(s[0])).expect("same space")
        }),
        THM_4_17 => global(|ctx| {
            let ptop_of = |space: &PrimalSpace| -> &FuzzyFamily {
                if std::ptr::eq(space, ctx.s()) {
                    ctx.ptop()
                } else if std::ptr::eq(space, &ctx.second) {
                    ctx.second_ptop()
                } else {
                    ctx.union_ptop()
                }
            };
            for (small, large) in ctx.nested_pairs() {
                if let failed @ Check::Fails(..) = first_missing(ptop_of(large), ptop_of(small)) {
                    return failed;
                }
            }
            Check::Holds
        }),
        THM_4_18 => global(|ctx| {
            let meet = ctx
                .ptop()
                .intersection(ctx.second_ptop())
                .expect("same space");
            same_family(ctx.union_ptop(), &meet)
        }),
        BASE_IS_TOPOLOGY => global(|ctx| match validate_topology(ctx.base()).violation {
            None => Check::Holds,
            Some(v) => Check::Fails(
                v.witnesses,
                Some(format!("axiom ({}) fails", v.axiom.number())),
            ),
        }),

        DEF_5_1_SUPPORT_FORM => global(|ctx| {
            let by_definition = is_compatible_via_definition(ctx.s());
            let by_support = is_compatible_via_support(ctx.s());
            if by_definition.compatible == by_support.compatible {
                Check::Holds
            } else {
                let sets = by_definition
                    .witness
                    .into_iter()
                    .chain(by_support.witness)
                    .collect();
                Check::Fails(sets, Some("the two forms disagree".into()))
            }
        }),
        TRIVIAL_PRIMAL_COMPATIBLE => global(|ctx| {
            let verdict = is_compatible_via_definition(ctx.trivial());
            match verdict.witness {
                None => Check::Holds,
                Some(w) => Check::Fails(vec![w], None),
            }
        }),
        SQUARE_DIAMOND_DISJOINT => with_point(|ctx, s, p| {
            let view = square_of(ctx.s(), s);
            !(view.contains_point(p) && ctx.s().point_in_diamond(s, p).expect("same space"))
        }),
        THM_5_3 => sets(1, |ctx, s| {
            let view = square_of(ctx.s(), s[0]);
            &view.induced | &(s[0] & ctx.d(s[0])) == *s[0]
        }),
        THM_5_4 => with_point(|ctx, s, p| {
            let view = square_of(ctx.s(), s);
            !(view.contains_point(p)
                && ctx
                    .s()
                    .point_in_diamond(&view.induced, p)
                    .expect("same space"))
        }),
        THM_5_4_induced => sets(1, |ctx, s| {
            let induced = square_of(ctx.s(), s[0]).induced;
            (&induced & ctx.d(&induced)).is_zero()
        }),
        THM_5_5 => global(|ctx| {
            let report = equivalence_report(ctx.s(), usize::MAX).expect("lattice already built");
            if report.all_equal() {
                Check::Holds
            } else {
                let verdicts: Vec<&str> = report
                    .clauses
                    .iter()
                    .map(|&c| if c { "T" } else { "F" })
                    .collect();
                Check::Fails(
                    report.witnesses.iter().flatten().cloned().collect(),
                    Some(format!("clauses (i)-(v) = {}", verdicts.join(""))),
                )
            }
        }),
        THM_5_6 => global(|ctx| {
            let report = consequence_report(ctx.s());
            if report.all_equal() && report.implied() {
                Check::Holds
            } else {
                let verdicts: Vec<&str> = report
                    .clauses
                    .iter()
                    .map(|&c| if c { "T" } else { "F" })
                    .collect();
                Check::Fails(
                    report.witnesses.iter().flatten().cloned().collect(),
                    Some(format!(
                        "compatible={} clauses (i)-(iii) = {}",
                        report.compatible,
                        verdicts.join("")
                    )),
                )
            }
        }),
        THM_5_7 => Property {
            shape: Shape::Sets(1, |ctx, s| ctx.d(ctx.d(s[0])) == ctx.d(s[0])),
            applies: needs_compatible,
        },
        THM_5_8_closed_to_union => Property {
            shape: Shape::Sets(1, |ctx, s| {
                !ctx.d(s[0]).is_subset(s[0])
                    || find_decomposition(ctx.s(), s[0])
                        .expect("same space")
                        .is_some()
            }),
            applies: needs_compatible,
        },
        THM_5_8_union_to_closed => sets(2, |ctx, s| {
            let qualifies = ctx.s().topology().is_closed(s[0]) && !ctx.in_p(&s[1].complement());
            !qualifies || {
                let joined = s[0] | s[1];
                ctx.d(&joined).is_subset(&joined)
            }
        }),
        THM_5_9 => Property {
            shape: Shape::Global(|ctx| same_family(ctx.base(), ctx.ptop())),
            applies: needs_compatible,
        },
    }
}

fn verdict_for(id: PropertyId, holds: bool) -> Verdict {
    match (holds, id.kind()) {
        (true, _) => Verdict::Pass,
        (false, ClaimKind::Asserted) => Verdict::Fail,
        (false, ClaimKind::Erratum) => Verdict::RefutedPaperClaim,
        (false, ClaimKind::Exploratory) => Verdict::CounterexampleFound,
    }
}

/// Visits every `arity`-tuple of lattice sets in lexicographic order and
/// returns the first one rejected by `holds`.
fn first_failing_tuple<'a>(
    lattice: &'a Lattice,
    arity: usize,
    holds: &dyn Fn(&[&FuzzySet]) -> bool,
) -> Option<Vec<FuzzySet>> {
    let sets = lattice.sets();
    let mut idx = vec![0usize; arity];
    let mut tuple: Vec<&'a FuzzySet> = vec![&sets[0]; arity];
    loop {
        for (slot, &i) in tuple.iter_mut().zip(&idx) {
            *slot = &sets[i];
        }
        if !holds(&tuple) {
            return Some(tuple.iter().map(|s| (*s).clone()).collect());
        }
        let mut pos = arity;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < sets.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

pub(crate) fn evaluate(
    id: PropertyId,
    ctx: &Context,
    limits: &Limits,
) -> (Verdict, Option<Witness>) {
    let prop = property(id);
    if let Some(reason) = (prop.applies)(ctx) {
        let note = Witness {
            sets: vec![],
            point: None,
            note: Some(reason.to_string()),
        };
        return (Verdict::NotApplicable, Some(note));
    }
    let lattice = ctx.lattice();
    let witness = match prop.shape {
        Shape::Global(f) => match f(ctx) {
            Check::Holds => None,
            Check::Fails(sets, note) => Some(Witness {
                sets,
                point: None,
                note,
            }),
        },
        Shape::Sets(arity, f) => {
            if (lattice.len() as u128).saturating_pow(arity as u32) > limits.max_instances {
                return (Verdict::Incomplete, None);
            }
            let holds = |s: &[&FuzzySet]| f(ctx, s);
            first_failing_tuple(lattice, arity, &holds).map(|found| Witness {
                sets: minimize(found, &holds),
                point: None,
                note: None,
            })
        }
        Shape::Point(f) => ctx.grid().points().find(|p| !f(ctx, p)).map(|p| Witness {
            sets: vec![],
            point: Some(p),
            note: None,
        }),
        Shape::SetPoint(f) => {
            let points: Vec<FuzzyPoint> = ctx.grid().points().collect();
            points.iter().find_map(|p| {
                let holds = |s: &[&FuzzySet]| f(ctx, s[0], p);
                first_failing_tuple(lattice, 1, &holds).map(|found| Witness {
                    sets: minimize(found, &holds),
                    point: Some(*p),
                    note: None,
                })
            })
        }
    };
    (verdict_for(id, witness.is_none()), witness)
}

/// Re-evaluates the claim on exactly the witnessed instance. Returns true
/// when the witness still violates the claim.
pub fn recheck(id: PropertyId, ctx: &Context, witness: &Witness) -> bool {
    let prop = property(id);
    if (prop.applies)(ctx).is_some() {
        return false;
    }
    let lattice = ctx.lattice();
    if witness.sets.iter().any(|s| s.space() != lattice.space()) {
        return false;
    }
    let refs: Vec<&FuzzySet> = witness.sets.iter().collect();
    match prop.shape {
        Shape::Global(f) => matches!(f(ctx), Check::Fails(..)),
        Shape::Sets(arity, f) => refs.len() == arity && !f(ctx, &refs),
        Shape::Point(f) => witness.point.is_some_and(|p| !f(ctx, &p)),
        Shape::SetPoint(f) => match (refs.as_slice(), witness.point) {
            ([s], Some(p)) => !f(ctx, s, &p),
            _ => false,
        },
    }
}
