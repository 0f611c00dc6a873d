//! Recovering a relation from the table it induces, and decomposing
//! closure/interior operators through a fixpoint index set.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::LawWitness;
use crate::operator::galois::{classify_mapping, compute_adjoint, AdjointDirection};
use crate::operator::{apply_induced, InducedKind, OperatorTable};
use crate::relation::{FuzzyRelation, IndexSet};
use crate::vector::FuzzyVector;

/// Which induced shape a table is assumed to have when reading a relation
/// back out of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecoverKind {
    FromPhi,
    FromDelta,
    FromRho,
}

/// Reconstructs the unique relation whose induced operator is `op`.
///
/// - `FromPhi` (table must be phi-type): `R(i,j) = ⋀_a (op(a)(j) → a(i))`.
/// - `FromDelta` (delta-type): `R(i,j) = ⋁_a (op(a)(j) · a(i))`.
/// - `FromRho` (rho-type): `R(i,j) = op(χ_j)(i)` on the unit vectors, which
///   here is cross-checked against recovering through the table's left
///   adjoint.
///
/// Each result is verified by tabulating the induced operator again and
/// comparing it with `op` entry for entry.
pub fn recover_relation(
    op: &OperatorTable,
    kind: RecoverKind,
    budget: usize,
) -> Result<FuzzyRelation> {
    let report = classify_mapping(op);
    let (expected, ok) = match kind {
        RecoverKind::FromPhi => ("phi_type", report.is_phi_type),
        RecoverKind::FromDelta => ("delta_type", report.is_delta_type),
        RecoverKind::FromRho => ("rho_type", report.is_rho_type),
    };
    if !ok {
        let detail = report
            .witnesses
            .first()
            .map(|w| format!("{} fails at ({})", w.law, w.witness.join(", ")))
            .unwrap_or_else(|| "a defining law fails".into());
        return Err(Error::WrongTypeClass { expected: expected.into(), reason: detail });
    }

    let l = op.lattice().clone();
    let relation = match kind {
        RecoverKind::FromPhi | RecoverKind::FromDelta => {
            // op : A^I → A^J, recovers R : I × J.
            let (rows, cols) = (op.in_index().len(), op.out_index().len());
            let inputs = op.inputs();
            let mut values = vec![vec![crate::lattice::Elem(0); cols]; rows];
            for (i, row) in values.iter_mut().enumerate() {
                for (j, cell) in row.iter_mut().enumerate() {
                    let mut acc = match kind {
                        RecoverKind::FromPhi => l.top(),
                        _ => l.bot(),
                    };
                    for a in &inputs {
                        let image = op.apply(a).expect("enumerated input");
                        acc = match kind {
                            RecoverKind::FromPhi => l.meet(acc, l.imp(image.get(j), a.get(i))),
                            _ => l.join(acc, l.prod(image.get(j), a.get(i))),
                        };
                    }
                    *cell = acc;
                }
            }
            FuzzyRelation::from_table(
                l.clone(),
                op.in_index().clone(),
                op.out_index().clone(),
                values,
            )?
        }
        RecoverKind::FromRho => {
            // op : A^J → A^I, recovers R : I × J from the unit vectors.
            let (rows, cols) = (op.out_index().len(), op.in_index().len());
            let mut values = vec![vec![crate::lattice::Elem(0); cols]; rows];
            for j in 0..cols {
                let unit = FuzzyVector::unit(l.clone(), op.in_index().clone(), j);
                let image = op.apply(&unit)?;
                for (i, row) in values.iter_mut().enumerate() {
                    row[j] = image.get(i);
                }
            }
            let direct = FuzzyRelation::from_table(
                l.clone(),
                op.out_index().clone(),
                op.in_index().clone(),
                values,
            )?;
            let left = compute_adjoint(op, AdjointDirection::LeftOfMonotone, budget)?;
            let via_adjoint = recover_relation(&left, RecoverKind::FromPhi, budget)?;
            assert_eq!(
                direct, via_adjoint,
                "unit-vector route and adjoint route disagree on the recovered relation"
            );
            direct
        }
    };

    let induced_kind = match kind {
        RecoverKind::FromPhi => InducedKind::Phi,
        RecoverKind::FromDelta => InducedKind::Delta,
        RecoverKind::FromRho => InducedKind::Rho,
    };
    let round_trip = OperatorTable::tabulate_induced(induced_kind, &relation, budget)?;
    assert!(
        round_trip.same_mapping(op),
        "recovered relation does not induce the original table"
    );
    Ok(relation)
}

/// Closure/interior diagnosis of an endo-operator.
///
/// `scalar_law` is `d · op(x) ≤ op(d · x)` for every scalar `d`; together
/// with `is_closure` (resp. `is_interior`) it is exactly what
/// [`decompose_operator`] needs.
#[derive(Debug, Clone, Serialize)]
pub struct ClosureInteriorReport {
    pub monotone: bool,
    pub extensive: bool,
    pub contractive: bool,
    pub idempotent: bool,
    pub scalar_law: bool,
    pub is_closure: bool,
    pub is_interior: bool,
    pub witnesses: Vec<LawWitness>,
}

/// Checks the closure/interior axioms and the scalar inequality for an
/// endo-operator, with first witnesses in input-rank order.
pub fn closure_interior_check(op: &OperatorTable) -> Result<ClosureInteriorReport> {
    if !op.is_endo() {
        return Err(Error::Shape(
            "closure/interior analysis needs matching input and output index sets".into(),
        ));
    }
    let l = op.lattice().clone();
    let inputs = op.inputs();
    let image = |x: &FuzzyVector| op.apply(x).expect("inputs enumerate the table's domain");
    let mut witnesses = Vec::new();

    let mut monotone = true;
    'mono: for a in &inputs {
        for b in &inputs {
            if a.leq(b) && !image(a).leq(&image(b)) {
                monotone = false;
                witnesses.push(LawWitness {
                    law: "monotone".into(),
                    witness: vec![
                        format!("x={}", a.label_list()),
                        format!("y={}", b.label_list()),
                    ],
                });
                break 'mono;
            }
        }
    }

    let mut single_law = |law: &str, ok: &dyn Fn(&FuzzyVector) -> bool| -> bool {
        for a in &inputs {
            if !ok(a) {
                witnesses.push(LawWitness {
                    law: law.into(),
                    witness: vec![format!("x={}", a.label_list())],
                });
                return false;
            }
        }
        true
    };

    let extensive = single_law("extensive", &|a| a.leq(&image(a)));
    let contractive = single_law("contractive", &|a| image(a).leq(a));
    let idempotent = single_law("idempotent", &|a| image(&image(a)) == image(a));

    let mut scalar_law = true;
    'scalar: for d in l.elems() {
        for a in &inputs {
            if !image(a).scalar_prod(d).leq(&image(&a.scalar_prod(d))) {
                scalar_law = false;
                witnesses.push(LawWitness {
                    law: "scalar_product".into(),
                    witness: vec![
                        format!("d={}", l.label_string(d)),
                        format!("x={}", a.label_list()),
                    ],
                });
                break 'scalar;
            }
        }
    }

    Ok(ClosureInteriorReport {
        monotone,
        extensive,
        contractive,
        idempotent,
        scalar_law,
        is_closure: monotone && extensive && idempotent,
        is_interior: monotone && contractive && idempotent,
        witnesses,
    })
}

/// Which two-step factorisation to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecomposeMode {
    /// `op = ρ_R ∘ φ_R` for an interior operator.
    Interior,
    /// `op = ε_R ∘ δ_R` for a closure operator.
    Closure,
}

impl DecomposeMode {
    pub fn name(self) -> &'static str {
        match self {
            DecomposeMode::Interior => "interior",
            DecomposeMode::Closure => "closure",
        }
    }
}

/// A two-step factorisation of an endo-operator through its fixpoints.
///
/// The relation runs from the operator's index set to one fresh index per
/// distinct image, `R(i, b) = b(i)`, and the fixpoints are listed in rank
/// order (matching the relation's codomain).
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub relation: FuzzyRelation,
    pub fixpoints: Vec<FuzzyVector>,
}

/// Factors a closure operator as `ε_R ∘ δ_R` (or an interior operator as
/// `ρ_R ∘ φ_R`) over its image set, verifying the composite against `op`
/// input by input. Errors when the axioms or the scalar inequality fail,
/// quoting the first witness.
pub fn decompose_operator(op: &OperatorTable, mode: DecomposeMode) -> Result<Decomposition> {
    let report = closure_interior_check(op)?;
    let shape_ok = match mode {
        DecomposeMode::Interior => report.is_interior,
        DecomposeMode::Closure => report.is_closure,
    };
    if !(shape_ok && report.scalar_law) {
        let relevant: &[&str] = match mode {
            DecomposeMode::Interior => &["monotone", "contractive", "idempotent", "scalar_product"],
            DecomposeMode::Closure => &["monotone", "extensive", "idempotent", "scalar_product"],
        };
        let detail = report
            .witnesses
            .iter()
            .find(|w| relevant.contains(&w.law.as_str()))
            .map(|w| format!("{} fails at ({})", w.law, w.witness.join(", ")))
            .unwrap_or_else(|| "a defining law fails".into());
        return Err(Error::NotDecomposable { mode: mode.name().into(), reason: detail });
    }

    let l = op.lattice().clone();
    let mut images: BTreeMap<usize, FuzzyVector> = BTreeMap::new();
    for row in op.rows() {
        images.entry(row.rank()).or_insert_with(|| row.clone());
    }
    let fixpoints: Vec<FuzzyVector> = images.into_values().collect();
    let names = IndexSet::new(fixpoints.iter().map(FuzzyVector::label_list))?;
    let values = (0..op.in_index().len())
        .map(|i| fixpoints.iter().map(|b| b.get(i)).collect())
        .collect();
    let relation = FuzzyRelation::from_table(l, op.in_index().clone(), names, values)?;

    let (first, second) = match mode {
        DecomposeMode::Interior => (InducedKind::Phi, InducedKind::Rho),
        DecomposeMode::Closure => (InducedKind::Delta, InducedKind::Epsilon),
    };
    for a in op.inputs() {
        let mid = apply_induced(first, &relation, &a)?;
        let back = apply_induced(second, &relation, &mid)?;
        assert_eq!(
            back,
            op.apply(&a)?,
            "two-step factorisation disagrees with the operator at {}",
            a.label_list()
        );
    }

    Ok(Decomposition { relation, fixpoints })
}
