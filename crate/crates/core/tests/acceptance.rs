//! End-to-end guarantees, exhaustive at desk scale.  One test per criterion;
//! each prints a single `criterion NN (...): pass` line (visible with
//! `--nocapture`) and enforces its own wall-clock bound.  Every comparison is
//! exact — integer table indices and rational labels — so there are no
//! numeric tolerances anywhere in this suite.

use std::sync::Arc;
use std::time::{Duration, Instant};

use galois_kit::fca::{enumerate_concepts, FuzzyContext};
use galois_kit::lattice::{Elem, LatticeSpec};
use galois_kit::operator::{
    apply_induced, boolean_criterion_check, classify_mapping, closure_interior_check,
    decompose_operator, recover_relation, verify_galois, DecomposeMode, InducedKind,
    OperatorTable, Provenance, RecoverKind, DEFAULT_BUDGET,
};
use galois_kit::relation::{FuzzyRelation, IndexSet};
use galois_kit::temporal::{
    check_monadic, forall_submultiplicative, frame_correspondence, monadic_from_equivalence,
    MonadicSuite, TimeFrame,
};
use galois_kit::vector::enumerate;

fn finish(start: Instant, bound_secs: u64, number: u32, label: &str) {
    let elapsed = start.elapsed();
    assert!(
        elapsed <= Duration::from_secs(bound_secs),
        "criterion {number:02} ({label}) took {elapsed:?}, bound is {bound_secs} s"
    );
    println!("criterion {number:02} ({label}): pass in {elapsed:?}");
}

/// Every relation between the two index sets, in rank order (cells row-major,
/// earlier cells more significant).
fn all_relations(
    lattice: &Arc<LatticeSpec>,
    domain: &Arc<IndexSet>,
    codomain: &Arc<IndexSet>,
) -> Vec<FuzzyRelation> {
    let n = lattice.n();
    let cells = domain.len() * codomain.len();
    let total = (n as u128).pow(cells as u32) as usize;
    (0..total)
        .map(|rank| {
            let mut rest = rank;
            let mut values = vec![vec![lattice.bot(); codomain.len()]; domain.len()];
            for i in (0..domain.len()).rev() {
                for j in (0..codomain.len()).rev() {
                    values[i][j] = Elem(rest % n);
                    rest /= n;
                }
            }
            FuzzyRelation::from_table(lattice.clone(), domain.clone(), codomain.clone(), values)
                .unwrap()
        })
        .collect()
}

fn same_relation(a: &FuzzyRelation, b: &FuzzyRelation) -> bool {
    a.domain() == b.domain()
        && a.codomain() == b.codomain()
        && (0..a.domain().len())
            .all(|i| (0..a.codomain().len()).all(|j| a.get(i, j) == b.get(i, j)))
}

fn pair_2x2() -> (Arc<IndexSet>, Arc<IndexSet>) {
    (IndexSet::new(["i1", "i2"]).unwrap(), IndexSet::new(["j1", "j2"]).unwrap())
}

#[test]
fn criterion_01_chain_laws_and_classification() {
    let start = Instant::now();

    for k in 2..=5 {
        let l = LatticeSpec::lukasiewicz_chain(k).unwrap();
        assert!(l.validate().is_residuated(), "lukasiewicz k={k} must validate");
        let report = l.classify();
        assert!(report.is_mv, "lukasiewicz k={k} must be mv");
    }

    for k in 2..=4 {
        let l = LatticeSpec::goedel_chain(k).unwrap();
        assert!(l.validate().is_residuated(), "goedel k={k} must validate");
        let report = l.classify();
        assert!(report.is_bl, "goedel k={k} must be bl");
        assert_eq!(report.has_double_negation, k == 2, "double negation on goedel k={k}");
        if k >= 3 {
            let witness = report
                .counterexamples
                .iter()
                .find(|w| w.law == "double_negation")
                .unwrap_or_else(|| panic!("goedel k={k} must carry a double negation witness"));
            assert!(!witness.witness.is_empty());
        }
    }

    finish(start, 1, 1, "chain laws and classification");
}

#[test]
fn criterion_02_induced_pairs_are_adjoint_exhaustively() {
    let start = Instant::now();
    let luk3 = LatticeSpec::lukasiewicz_chain(3).unwrap();
    let (domain, codomain) = pair_2x2();

    let relations = all_relations(&luk3, &domain, &codomain);
    assert_eq!(relations.len(), 81);
    for r in &relations {
        let phi = OperatorTable::tabulate_induced(InducedKind::Phi, r, DEFAULT_BUDGET).unwrap();
        let rho = OperatorTable::tabulate_induced(InducedKind::Rho, r, DEFAULT_BUDGET).unwrap();
        let cov = verify_galois(&phi, &rho, false).unwrap();
        assert!(cov.all_ok(), "covariant pair failed: {:?}", cov.witnesses);

        let delta = OperatorTable::tabulate_induced(InducedKind::Delta, r, DEFAULT_BUDGET).unwrap();
        let eps = OperatorTable::tabulate_induced(InducedKind::Epsilon, r, DEFAULT_BUDGET).unwrap();
        let rev = verify_galois(&delta, &eps, true).unwrap();
        assert!(rev.all_ok(), "reversed pair failed: {:?}", rev.witnesses);
    }

    finish(start, 10, 2, "induced pairs adjoint over all 81 relations");
}

#[test]
fn criterion_03_recovery_is_exact() {
    let start = Instant::now();

    let luk3 = LatticeSpec::lukasiewicz_chain(3).unwrap();
    let bool2 = LatticeSpec::lukasiewicz_chain(2).unwrap();
    let (domain, codomain) = pair_2x2();

    let mut pools = all_relations(&luk3, &domain, &codomain);
    let boolean = all_relations(&bool2, &domain, &codomain);
    assert_eq!(boolean.len(), 16);
    pools.extend(boolean);

    for r in &pools {
        let phi = OperatorTable::tabulate_induced(InducedKind::Phi, r, DEFAULT_BUDGET).unwrap();
        let from_phi = recover_relation(&phi, RecoverKind::FromPhi, DEFAULT_BUDGET).unwrap();
        assert!(same_relation(&from_phi, r), "from_phi must return the source relation");

        let delta = OperatorTable::tabulate_induced(InducedKind::Delta, r, DEFAULT_BUDGET).unwrap();
        let from_delta = recover_relation(&delta, RecoverKind::FromDelta, DEFAULT_BUDGET).unwrap();
        assert!(same_relation(&from_delta, r), "from_delta must return the source relation");
    }

    finish(start, 30, 3, "relation recovery exact on 81 + 16 relations");
}

/// All mappings `A^in → A^out` as operator tables, in rank order of their
/// row choices.
fn all_functions(
    lattice: &Arc<LatticeSpec>,
    in_index: &Arc<IndexSet>,
    out_index: &Arc<IndexSet>,
) -> Vec<OperatorTable> {
    let outs = enumerate(lattice, in_index, DEFAULT_BUDGET)
        .unwrap()
        .len();
    let out_vectors = enumerate(lattice, out_index, DEFAULT_BUDGET).unwrap();
    let choices = out_vectors.len();
    let total = choices.pow(outs as u32);
    (0..total)
        .map(|rank| {
            let mut rest = rank;
            let mut rows = vec![out_vectors[0].clone(); outs];
            for row in rows.iter_mut().rev() {
                *row = out_vectors[rest % choices].clone();
                rest /= choices;
            }
            OperatorTable::from_rows(
                lattice.clone(),
                in_index.clone(),
                out_index.clone(),
                rows,
                Provenance::Explicit,
            )
            .unwrap()
        })
        .collect()
}

#[test]
fn criterion_04_classification_is_complete_for_boolean_functions() {
    let start = Instant::now();
    let bool2 = LatticeSpec::lukasiewicz_chain(2).unwrap();

    // 1×1: four functions A → A, exactly two of which come from a relation.
    let i1 = IndexSet::new(["i1"]).unwrap();
    let j1 = IndexSet::new(["j1"]).unwrap();
    let expressible: Vec<OperatorTable> = all_relations(&bool2, &i1, &j1)
        .iter()
        .map(|r| OperatorTable::tabulate_induced(InducedKind::Phi, r, DEFAULT_BUDGET).unwrap())
        .collect();
    let mut phi_count = 0;
    for f in all_functions(&bool2, &i1, &j1) {
        let report = classify_mapping(&f);
        let is_expressible = expressible.iter().any(|e| e.same_mapping(&f));
        assert_eq!(report.is_phi_type, is_expressible, "1×1 classification must match");
        phi_count += usize::from(report.is_phi_type);
    }
    assert_eq!(phi_count, 2);

    // 2×2: all 256 functions A² → A²; the 16 meet-and-top-preserving
    // candidates are exactly the 16 relation-induced ones.
    let (i2, j2) = pair_2x2();
    let expressible: Vec<OperatorTable> = all_relations(&bool2, &i2, &j2)
        .iter()
        .map(|r| OperatorTable::tabulate_induced(InducedKind::Phi, r, DEFAULT_BUDGET).unwrap())
        .collect();
    assert_eq!(expressible.len(), 16);
    let mut phi_count = 0;
    let mut candidate_count = 0;
    for f in all_functions(&bool2, &i2, &j2) {
        let report = classify_mapping(&f);
        let is_expressible = expressible.iter().any(|e| e.same_mapping(&f));
        assert_eq!(report.is_phi_type, is_expressible, "2×2 classification must match");
        phi_count += usize::from(report.is_phi_type);
        candidate_count += usize::from(report.infima_preserving);
    }
    assert_eq!(phi_count, 16);
    assert_eq!(candidate_count, 16, "every meet-preserving candidate is induced");

    finish(start, 10, 4, "mapping classification complete on boolean sweeps");
}

#[test]
fn criterion_05_composites_decompose_exactly() {
    let start = Instant::now();
    let luk3 = LatticeSpec::lukasiewicz_chain(3).unwrap();
    let (domain, codomain) = pair_2x2();

    for r in all_relations(&luk3, &domain, &codomain) {
        let phi = OperatorTable::tabulate_induced(InducedKind::Phi, &r, DEFAULT_BUDGET).unwrap();
        let rho = OperatorTable::tabulate_induced(InducedKind::Rho, &r, DEFAULT_BUDGET).unwrap();
        let delta = OperatorTable::tabulate_induced(InducedKind::Delta, &r, DEFAULT_BUDGET).unwrap();
        let eps = OperatorTable::tabulate_induced(InducedKind::Epsilon, &r, DEFAULT_BUDGET).unwrap();

        let closure = OperatorTable::compose(&eps, &delta).unwrap();
        let report = closure_interior_check(&closure).unwrap();
        assert!(report.is_closure, "composite must be a closure: {:?}", report.witnesses);
        assert!(report.scalar_law, "closure must satisfy the scalar law");
        let dec = decompose_operator(&closure, DecomposeMode::Closure).unwrap();
        for x in closure.inputs() {
            let rebuilt = apply_induced(
                InducedKind::Epsilon,
                &dec.relation,
                &apply_induced(InducedKind::Delta, &dec.relation, &x).unwrap(),
            )
            .unwrap();
            assert_eq!(rebuilt, closure.apply(&x).unwrap());
        }

        let interior = OperatorTable::compose(&rho, &phi).unwrap();
        let report = closure_interior_check(&interior).unwrap();
        assert!(report.is_interior, "composite must be an interior: {:?}", report.witnesses);
        assert!(report.scalar_law, "interior must satisfy the scalar law");
        let dec = decompose_operator(&interior, DecomposeMode::Interior).unwrap();
        for x in interior.inputs() {
            let rebuilt = apply_induced(
                InducedKind::Rho,
                &dec.relation,
                &apply_induced(InducedKind::Phi, &dec.relation, &x).unwrap(),
            )
            .unwrap();
            assert_eq!(rebuilt, interior.apply(&x).unwrap());
        }
    }

    finish(start, 60, 5, "closure and interior composites decompose exactly");
}

#[test]
fn criterion_06_submultiplicativity_detects_boolean_relations() {
    let start = Instant::now();
    let luk3 = LatticeSpec::lukasiewicz_chain(3).unwrap();

    let i1 = IndexSet::new(["i1"]).unwrap();
    let i2 = IndexSet::new(["i1", "i2"]).unwrap();
    let j1 = IndexSet::new(["j1"]).unwrap();

    let mut pools = all_relations(&luk3, &i1, &j1);
    pools.extend(all_relations(&luk3, &i2, &j1));
    assert_eq!(pools.len(), 3 + 9);

    for r in &pools {
        let report = boolean_criterion_check(r, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            report.submultiplicative, report.boolean_valued,
            "submultiplicativity must match boolean-valuedness"
        );
        assert!(report.equivalent);
    }

    // The half-valued point relation is the textbook failure.
    let half = FuzzyRelation::new(
        luk3.clone(),
        i1.clone(),
        j1,
        &[("i1".into(), "j1".into(), "1/2".into())],
    )
    .unwrap();
    let report = boolean_criterion_check(&half, DEFAULT_BUDGET).unwrap();
    assert!(!report.submultiplicative && !report.boolean_valued);
    let witness = &report.witnesses[0];
    assert_eq!(witness.law, "submultiplicative");
    assert_eq!(witness.witness, vec!["x=[1/2]", "y=[1/2]"]);

    finish(start, 5, 6, "boolean criterion over all 1×1 and 2×1 relations");
}

#[test]
fn criterion_07_frame_properties_match_operator_laws() {
    let start = Instant::now();
    let luk3 = LatticeSpec::lukasiewicz_chain(3).unwrap();
    let times = IndexSet::new(["t1", "t2"]).unwrap();

    for r in all_relations(&luk3, &times, &times) {
        let frame = TimeFrame::new(r).unwrap();
        let report = frame_correspondence(&frame, DEFAULT_BUDGET).unwrap();
        assert!(
            report.all_equivalent,
            "correspondence must hold on every frame: {:?}",
            report.witnesses
        );
    }

    finish(start, 30, 7, "frame correspondence over all 81 frames");
}

#[test]
fn criterion_08_quantifiers_from_equivalences() {
    let start = Instant::now();
    let luk3 = LatticeSpec::lukasiewicz_chain(3).unwrap();
    let times = IndexSet::new(["t1", "t2"]).unwrap();

    let mut equivalences = 0;
    for r in all_relations(&luk3, &times, &times) {
        if !r.properties().unwrap().fuzzy_equivalence {
            continue;
        }
        equivalences += 1;
        let boolean = r.is_boolean_valued();
        let frame = TimeFrame::new(r).unwrap();
        let ms = monadic_from_equivalence(&frame, DEFAULT_BUDGET).unwrap();

        let new = check_monadic(ms.exists(), MonadicSuite::New).unwrap();
        assert!(new.all_pass, "every equivalence quantifier passes: {:?}", new.witnesses);

        let original = check_monadic(ms.exists(), MonadicSuite::Original).unwrap();
        let (submultiplicative, _) = forall_submultiplicative(ms.exists()).unwrap();
        assert_eq!(original.all_pass, boolean, "original axioms single out crisp equivalences");
        assert_eq!(submultiplicative, boolean, "so does universal submultiplicativity");
    }
    // Diagonal fixed at 1, the two off-diagonal cells forced equal by
    // symmetry and bounded by transitivity: three equivalences in the sweep.
    assert_eq!(equivalences, 3);

    finish(start, 30, 8, "monadic suites on all fuzzy equivalences");
}

#[test]
fn criterion_09_concept_enumeration_is_sound_and_complete() {
    let start = Instant::now();

    let bool2 = LatticeSpec::lukasiewicz_chain(2).unwrap();
    let objects = IndexSet::new(["g1", "g2"]).unwrap();
    let attributes = IndexSet::new(["m1", "m2"]).unwrap();

    let identity = FuzzyContext::new(FuzzyRelation::identity(bool2.clone(), objects.clone()));
    let concepts = enumerate_concepts(&identity, DEFAULT_BUDGET).unwrap();
    assert_eq!(concepts.len(), 4);
    assert_eq!(concepts.cover_edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);

    let ones = FuzzyContext::new(FuzzyRelation::constant(
        bool2.clone(),
        objects.clone(),
        attributes.clone(),
        bool2.top(),
    ));
    assert_eq!(enumerate_concepts(&ones, DEFAULT_BUDGET).unwrap().len(), 1);

    let luk3 = LatticeSpec::lukasiewicz_chain(3).unwrap();
    for incidence in all_relations(&luk3, &objects, &attributes) {
        let delta =
            OperatorTable::tabulate_induced(InducedKind::Delta, &incidence, DEFAULT_BUDGET).unwrap();
        let eps =
            OperatorTable::tabulate_induced(InducedKind::Epsilon, &incidence, DEFAULT_BUDGET)
                .unwrap();
        let report = verify_galois(&delta, &eps, true).unwrap();
        assert!(report.all_ok(), "derivations must be a reversed pair: {:?}", report.witnesses);

        let ctx = FuzzyContext::new(incidence.clone());
        let concepts = enumerate_concepts(&ctx, DEFAULT_BUDGET).unwrap();
        let fixpoints = enumerate(&luk3, &objects, DEFAULT_BUDGET)
            .unwrap()
            .into_iter()
            .filter(|x| {
                let closed = apply_induced(
                    InducedKind::Epsilon,
                    &incidence,
                    &apply_induced(InducedKind::Delta, &incidence, x).unwrap(),
                )
                .unwrap();
                closed == *x
            })
            .count();
        assert_eq!(concepts.len(), fixpoints, "one concept per closed extent");
    }

    finish(start, 60, 9, "concept enumeration sound and complete");
}
