//! Cross-operator laws: conjugation under an involutive negation, the
//! crisp-relation criterion, and scalar-strong adjoint pairs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::LawWitness;
use crate::operator::galois::verify_galois;
use crate::operator::{apply_induced, InducedKind, OperatorTable};
use crate::relation::FuzzyRelation;
use crate::vector;

/// Whether negation swaps the two covariant operators of a relation with
/// the ones its transpose induces.
///
/// Needs an involutive negation, so the lattice must be an MV-algebra.
/// `phi_to_rho` checks `¬φ_R(¬x) = ρ_{Rᵀ}(x)` on all of `A^I`;
/// `rho_to_phi` checks `¬ρ_R(¬y) = φ_{Rᵀ}(y)` on all of `A^J`.
#[derive(Debug, Clone, Serialize)]
pub struct ConjugateReport {
    pub phi_to_rho: bool,
    pub rho_to_phi: bool,
    pub witnesses: Vec<LawWitness>,
}

impl ConjugateReport {
    pub fn all_ok(&self) -> bool {
        self.phi_to_rho && self.rho_to_phi
    }
}

/// Checks both conjugation identities for `r` by exhausting the two vector
/// spaces.
pub fn conjugate_check(r: &FuzzyRelation, budget: usize) -> Result<ConjugateReport> {
    let l = r.lattice().clone();
    l.mv_extend()?;
    let rt = r.transpose();
    let mut witnesses = Vec::new();

    let mut phi_to_rho = true;
    for x in vector::enumerate(&l, r.domain(), budget)? {
        let lhs = apply_induced(InducedKind::Phi, r, &x.neg())?.neg();
        let rhs = apply_induced(InducedKind::Rho, &rt, &x)?;
        if lhs != rhs {
            phi_to_rho = false;
            witnesses.push(LawWitness {
                law: "neg_phi_neg".into(),
                witness: vec![format!("x={}", x.label_list())],
            });
            break;
        }
    }

    let mut rho_to_phi = true;
    for y in vector::enumerate(&l, r.codomain(), budget)? {
        let lhs = apply_induced(InducedKind::Rho, r, &y.neg())?.neg();
        let rhs = apply_induced(InducedKind::Phi, &rt, &y)?;
        if lhs != rhs {
            rho_to_phi = false;
            witnesses.push(LawWitness {
                law: "neg_rho_neg".into(),
                witness: vec![format!("y={}", y.label_list())],
            });
            break;
        }
    }

    Ok(ConjugateReport { phi_to_rho, rho_to_phi, witnesses })
}

/// Outcome of the crisp-relation criterion: over an MV-algebra, `R` takes
/// only the values `0` and `1` exactly when `φ_R` is submultiplicative,
/// i.e. `φ_R(x) · φ_R(y) ≤ φ_R(x·y)` for all `x, y ∈ A^I`.
#[derive(Debug, Clone, Serialize)]
pub struct BooleanCriterionReport {
    pub submultiplicative: bool,
    pub boolean_valued: bool,
    pub equivalent: bool,
    pub witnesses: Vec<LawWitness>,
}

/// Evaluates both sides of the crisp-relation criterion. The pair sweep
/// costs the square of `|A|^|I|`; the budget bounds the enumeration itself.
pub fn boolean_criterion_check(r: &FuzzyRelation, budget: usize) -> Result<BooleanCriterionReport> {
    let l = r.lattice().clone();
    l.mv_extend()?;
    let inputs = vector::enumerate(&l, r.domain(), budget)?;
    let images: Vec<_> = inputs
        .iter()
        .map(|x| apply_induced(InducedKind::Phi, r, x))
        .collect::<Result<Vec<_>>>()?;

    let mut witnesses = Vec::new();
    let mut submultiplicative = true;
    'pairs: for (x, fx) in inputs.iter().zip(&images) {
        for (y, fy) in inputs.iter().zip(&images) {
            let product = apply_induced(InducedKind::Phi, r, &x.prod(y))?;
            if !fx.prod(fy).leq(&product) {
                submultiplicative = false;
                witnesses.push(LawWitness {
                    law: "submultiplicative".into(),
                    witness: vec![
                        format!("x={}", x.label_list()),
                        format!("y={}", y.label_list()),
                    ],
                });
                break 'pairs;
            }
        }
    }

    let boolean_valued = r.is_boolean_valued();
    Ok(BooleanCriterionReport {
        submultiplicative,
        boolean_valued,
        equivalent: submultiplicative == boolean_valued,
        witnesses,
    })
}

/// Whether an adjoint pair also lets scalars move across it.
///
/// For a covariant pair the two laws are `f(r→x) = r→f(x)` and
/// `g(r·y) = r·g(y)`; for a reversed pair, `d(r·x) = r→d(x)` and
/// `h(r·y) = r→h(y)`. For genuine adjoint pairs each law holds exactly
/// when the other does, which `equivalent` records.
#[derive(Debug, Clone, Serialize)]
pub struct StrongAdjointReport {
    pub reversed: bool,
    pub f_scalar_law: bool,
    pub g_scalar_law: bool,
    pub strong: bool,
    pub equivalent: bool,
    pub witnesses: Vec<LawWitness>,
}

/// Checks the scalar laws on top of an established adjunction; errors when
/// `(f, g)` is not an adjoint pair of the stated orientation to begin with.
pub fn strong_adjoint_check(
    f: &OperatorTable,
    g: &OperatorTable,
    reversed: bool,
) -> Result<StrongAdjointReport> {
    let base = verify_galois(f, g, reversed)?;
    if !base.all_ok() {
        let detail = base
            .witnesses
            .first()
            .map(|w| format!("{} fails at ({})", w.law, w.witness.join(", ")))
            .unwrap_or_else(|| "the adjunction fails".into());
        return Err(Error::NotGaloisPair {
            kind: if reversed { "reversed" } else { "covariant" }.into(),
            reason: detail,
        });
    }

    let l = f.lattice().clone();
    let mut witnesses = Vec::new();
    let mut scalar_law = |name: &str,
                          op: &OperatorTable,
                          law: &dyn Fn(crate::lattice::Elem, &vector::FuzzyVector) -> bool|
     -> bool {
        for d in l.elems() {
            for x in op.inputs() {
                if !law(d, &x) {
                    witnesses.push(LawWitness {
                        law: name.into(),
                        witness: vec![
                            format!("r={}", l.label_string(d)),
                            format!("x={}", x.label_list()),
                        ],
                    });
                    return false;
                }
            }
        }
        true
    };

    let apply = |op: &OperatorTable, x: &vector::FuzzyVector| {
        op.apply(x).expect("inputs enumerate the table's domain")
    };
    let (f_scalar_law, g_scalar_law) = if reversed {
        (
            scalar_law("f_scalar_mixed", f, &|d, x| {
                apply(f, &x.scalar_prod(d)) == apply(f, x).scalar_imp(d)
            }),
            scalar_law("g_scalar_mixed", g, &|d, y| {
                apply(g, &y.scalar_prod(d)) == apply(g, y).scalar_imp(d)
            }),
        )
    } else {
        (
            scalar_law("f_scalar_imp", f, &|d, x| {
                apply(f, &x.scalar_imp(d)) == apply(f, x).scalar_imp(d)
            }),
            scalar_law("g_scalar_prod", g, &|d, y| {
                apply(g, &y.scalar_prod(d)) == apply(g, y).scalar_prod(d)
            }),
        )
    };

    Ok(StrongAdjointReport {
        reversed,
        f_scalar_law,
        g_scalar_law,
        strong: f_scalar_law && g_scalar_law,
        equivalent: f_scalar_law == g_scalar_law,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeSpec;
    use crate::operator::{AdjointDirection, OperatorTable, DEFAULT_BUDGET};
    use crate::relation::IndexSet;
    use crate::vector::FuzzyVector;

    fn luk3_relation() -> FuzzyRelation {
        let l = LatticeSpec::lukasiewicz_chain(3).unwrap();
        let i = IndexSet::new(["i1", "i2"]).unwrap();
        let j = IndexSet::new(["j1", "j2"]).unwrap();
        let entries: Vec<(String, String, String)> = vec![
            ("i1".into(), "j1".into(), "1/2".into()),
            ("i1".into(), "j2".into(), "1".into()),
            ("i2".into(), "j2".into(), "1/2".into()),
        ];
        FuzzyRelation::new(l, i, j, &entries).unwrap()
    }

    fn one_point_half() -> FuzzyRelation {
        let l = LatticeSpec::lukasiewicz_chain(3).unwrap();
        FuzzyRelation::new(
            l,
            IndexSet::new(["i"]).unwrap(),
            IndexSet::new(["j"]).unwrap(),
            &[("i".to_string(), "j".to_string(), "1/2".to_string())],
        )
        .unwrap()
    }

    #[test]
    fn conjugation_holds_over_mv_chains() {
        for r in [luk3_relation(), one_point_half()] {
            let report = conjugate_check(&r, DEFAULT_BUDGET).unwrap();
            assert!(report.all_ok(), "{:?}", report.witnesses);
        }
    }

    #[test]
    fn conjugation_needs_an_involutive_negation() {
        let g = LatticeSpec::goedel_chain(3).unwrap();
        let r = FuzzyRelation::constant(
            g,
            IndexSet::new(["i"]).unwrap(),
            IndexSet::new(["j"]).unwrap(),
            crate::lattice::Elem(1),
        );
        assert!(matches!(
            conjugate_check(&r, DEFAULT_BUDGET),
            Err(Error::UnsupportedStructure(_))
        ));
    }

    #[test]
    fn crisp_relations_make_phi_submultiplicative() {
        let l = LatticeSpec::lukasiewicz_chain(5).unwrap();
        let idx = IndexSet::new(["a", "b"]).unwrap();
        let r = FuzzyRelation::identity(l, idx);
        let report = boolean_criterion_check(&r, DEFAULT_BUDGET).unwrap();
        assert!(report.submultiplicative && report.boolean_valued && report.equivalent);
    }

    #[test]
    fn properly_fuzzy_relations_fail_submultiplicativity() {
        // φ_R(1/2)·φ_R(1/2) = 1 but φ_R(1/2 · 1/2) = φ_R(0) = 1/2.
        let report = boolean_criterion_check(&one_point_half(), DEFAULT_BUDGET).unwrap();
        assert!(!report.submultiplicative);
        assert!(!report.boolean_valued);
        assert!(report.equivalent);
        assert_eq!(report.witnesses[0].witness, vec!["x=[1/2]", "y=[1/2]"]);
    }

    #[test]
    fn induced_pairs_are_strong() {
        let r = luk3_relation();
        let phi = OperatorTable::tabulate_induced(InducedKind::Phi, &r, DEFAULT_BUDGET).unwrap();
        let rho = OperatorTable::tabulate_induced(InducedKind::Rho, &r, DEFAULT_BUDGET).unwrap();
        let cov = strong_adjoint_check(&phi, &rho, false).unwrap();
        assert!(cov.strong && cov.equivalent, "{:?}", cov.witnesses);

        let delta = OperatorTable::tabulate_induced(InducedKind::Delta, &r, DEFAULT_BUDGET).unwrap();
        let eps = OperatorTable::tabulate_induced(InducedKind::Epsilon, &r, DEFAULT_BUDGET).unwrap();
        let rev = strong_adjoint_check(&delta, &eps, true).unwrap();
        assert!(rev.strong && rev.equivalent, "{:?}", rev.witnesses);
    }

    #[test]
    fn adjoint_pairs_need_not_be_strong() {
        // x ∨ 1/2 preserves infima on a chain, so it has a left adjoint,
        // but neither side satisfies its scalar law.
        let l = LatticeSpec::lukasiewicz_chain(3).unwrap();
        let idx = IndexSet::new(["i"]).unwrap();
        let half = FuzzyVector::from_labels(l.clone(), idx.clone(), &["1/2"]).unwrap();
        let f = OperatorTable::tabulate_fn(
            l.clone(),
            idx.clone(),
            idx,
            DEFAULT_BUDGET,
            |x| x.join(&half),
        )
        .unwrap();
        let g = crate::operator::compute_adjoint(&f, AdjointDirection::RightOfMonotone, DEFAULT_BUDGET)
            .unwrap();
        let report = strong_adjoint_check(&f, &g, false).unwrap();
        assert!(!report.f_scalar_law && !report.g_scalar_law);
        assert!(report.equivalent && !report.strong);
    }

    #[test]
    fn unrelated_tables_are_not_a_pair() {
        let r = luk3_relation();
        let phi = OperatorTable::tabulate_induced(InducedKind::Phi, &r, DEFAULT_BUDGET).unwrap();
        let other = FuzzyRelation::constant(
            r.lattice().clone(),
            r.domain().clone(),
            r.codomain().clone(),
            crate::lattice::Elem(2),
        );
        let rho = OperatorTable::tabulate_induced(InducedKind::Rho, &other, DEFAULT_BUDGET).unwrap();
        let err = strong_adjoint_check(&phi, &rho, false).unwrap_err();
        match err {
            Error::NotGaloisPair { kind, .. } => assert_eq!(kind, "covariant"),
            other => panic!("unexpected error: {other}"),
        }
    }
}
