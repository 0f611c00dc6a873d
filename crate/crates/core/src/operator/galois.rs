//! Adjoint pairs of operator tables: verification, mapping classification,
//! and computing the uniquely determined partner.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::LawWitness;
use crate::operator::OperatorTable;
use crate::vector::FuzzyVector;

/// Exhaustive verdict on a candidate adjoint pair.
///
/// For a covariant pair `(f: A^I→A^J, g: A^J→A^I)` the defining condition is
/// `x ≤ f(y)` iff `g(x) ≤ y` for all `y ∈ A^I`, `x ∈ A^J`; the derived
/// inequalities are `g(f(y)) ≤ y` and `x ≤ f(g(x))`. For a reversed pair
/// `(d, h)` the condition is `x ≤ d(y)` iff `y ≤ h(x)`, and both composites
/// are inflationary: `y ≤ h(d(y))`, `x ≤ d(h(x))`.
///
/// `f_compatible`/`g_compatible` report monotonicity for covariant pairs and
/// antitonicity for reversed ones. For such order-compatible maps the
/// biconditional and the two composite inequalities are equivalent
/// characterisations; `lemma_agrees` records that the two routes agreed.
#[derive(Debug, Clone, Serialize)]
pub struct GaloisReport {
    pub reversed: bool,
    pub holds: bool,
    pub unit_holds: bool,
    pub counit_holds: bool,
    pub f_compatible: bool,
    pub g_compatible: bool,
    pub lemma_agrees: bool,
    pub witnesses: Vec<LawWitness>,
}

impl GaloisReport {
    pub fn all_ok(&self) -> bool {
        self.holds
            && self.unit_holds
            && self.counit_holds
            && self.f_compatible
            && self.g_compatible
            && self.lemma_agrees
    }
}

/// Checks the adjunction biconditional over every input pair, plus the
/// composite inequalities and order compatibility, each independently.
pub fn verify_galois(
    f: &OperatorTable,
    g: &OperatorTable,
    reversed: bool,
) -> Result<GaloisReport> {
    if *f.lattice().as_ref() != *g.lattice().as_ref() {
        return Err(Error::LatticeMismatch);
    }
    if f.out_index() != g.in_index() || g.out_index() != f.in_index() {
        return Err(Error::Shape(
            "adjoint candidates must map A^I → A^J and A^J → A^I".into(),
        ));
    }

    let mut witnesses = Vec::new();
    let ys = f.inputs();
    let xs = g.inputs();

    let mut holds = true;
    'bi: for y in &ys {
        let fy = f.apply(y)?;
        for x in &xs {
            let lhs = x.leq(&fy);
            let rhs = if reversed { y.leq(&g.apply(x)?) } else { g.apply(x)?.leq(y) };
            if lhs != rhs {
                holds = false;
                witnesses.push(LawWitness {
                    law: "adjunction".into(),
                    witness: vec![
                        format!("y={}", y.label_list()),
                        format!("x={}", x.label_list()),
                    ],
                });
                break 'bi;
            }
        }
    }

    let mut unit_holds = true;
    for y in &ys {
        let gfy = g.apply(&f.apply(y)?)?;
        let ok = if reversed { y.leq(&gfy) } else { gfy.leq(y) };
        if !ok {
            unit_holds = false;
            witnesses.push(LawWitness {
                law: "composite_on_domain".into(),
                witness: vec![format!("y={}", y.label_list())],
            });
            break;
        }
    }

    let mut counit_holds = true;
    for x in &xs {
        let fgx = f.apply(&g.apply(x)?)?;
        if !x.leq(&fgx) {
            counit_holds = false;
            witnesses.push(LawWitness {
                law: "composite_on_codomain".into(),
                witness: vec![format!("x={}", x.label_list())],
            });
            break;
        }
    }

    let f_compatible = order_compatible(f, reversed, "f", &mut witnesses)?;
    let g_compatible = order_compatible(g, reversed, "g", &mut witnesses)?;

    let lemma_agrees = if f_compatible && g_compatible {
        holds == (unit_holds && counit_holds)
    } else {
        true
    };

    Ok(GaloisReport {
        reversed,
        holds,
        unit_holds,
        counit_holds,
        f_compatible,
        g_compatible,
        lemma_agrees,
        witnesses,
    })
}

fn order_compatible(
    op: &OperatorTable,
    antitone: bool,
    name: &str,
    witnesses: &mut Vec<LawWitness>,
) -> Result<bool> {
    let inputs = op.inputs();
    for a in &inputs {
        let fa = op.apply(a)?;
        for b in &inputs {
            if !a.leq(b) {
                continue;
            }
            let fb = op.apply(b)?;
            let ok = if antitone { fb.leq(&fa) } else { fa.leq(&fb) };
            if !ok {
                witnesses.push(LawWitness {
                    law: format!("{name}_{}", if antitone { "antitone" } else { "monotone" }),
                    witness: vec![
                        format!("x={}", a.label_list()),
                        format!("y={}", b.label_list()),
                    ],
                });
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Which of the three induced-operator shapes a table matches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TypeClass {
    PhiType,
    RhoType,
    DeltaType,
    None,
}

/// Structural classification of a single table.
///
/// - `infima_preserving`: `op(1) = 1` and `op(x∧y) = op(x)∧op(y)` — on a
///   finite lattice this is exactly preservation of all infima.
/// - `suprema_preserving`: dually with `0` and `∨`.
/// - `suprema_reversing`: `op(0) = 1` and `op(x∨y) = op(x)∧op(y)`.
///
/// The three diagonal laws quantify over every scalar `d`:
/// `diag_imp`: `d→op(x) = op(d→x)`; `diag_prod`: `d·op(x) = op(d·x)`;
/// `diag_mixed`: `d→op(x) = op(d·x)`.
///
/// A table may satisfy several type conditions at once (the identity is both
/// phi- and rho-type; the constant-`1` map is both phi- and delta-type), so
/// the individual `is_*_type` flags carry the full answer and `type_class`
/// picks the first match in the order phi, rho, delta.
#[derive(Debug, Clone, Serialize)]
pub struct MappingTypeReport {
    pub monotone: bool,
    pub antitone: bool,
    pub infima_preserving: bool,
    pub suprema_preserving: bool,
    pub suprema_reversing: bool,
    pub diag_imp_law: bool,
    pub diag_prod_law: bool,
    pub diag_mixed_law: bool,
    pub is_phi_type: bool,
    pub is_rho_type: bool,
    pub is_delta_type: bool,
    pub type_class: TypeClass,
    pub witnesses: Vec<LawWitness>,
}

/// Classifies a table against the three induced-operator shapes.
pub fn classify_mapping(op: &OperatorTable) -> MappingTypeReport {
    let l = op.lattice().clone();
    let inputs = op.inputs();
    let image = |x: &FuzzyVector| op.apply(x).expect("inputs enumerate the table's domain");
    let mut witnesses = Vec::new();

    let pair_law = |witnesses: &mut Vec<LawWitness>,
                    law: &str,
                    ok: &dyn Fn(&FuzzyVector, &FuzzyVector) -> bool|
     -> bool {
        for a in &inputs {
            for b in &inputs {
                if !ok(a, b) {
                    witnesses.push(LawWitness {
                        law: law.into(),
                        witness: vec![
                            format!("x={}", a.label_list()),
                            format!("y={}", b.label_list()),
                        ],
                    });
                    return false;
                }
            }
        }
        true
    };

    let monotone =
        pair_law(&mut witnesses, "monotone", &|a, b| !a.leq(b) || image(a).leq(&image(b)));
    let antitone =
        pair_law(&mut witnesses, "antitone", &|a, b| !a.leq(b) || image(b).leq(&image(a)));

    let top_in = FuzzyVector::top(l.clone(), op.in_index().clone());
    let bot_in = FuzzyVector::bottom(l.clone(), op.in_index().clone());
    let top_out = FuzzyVector::top(l.clone(), op.out_index().clone());
    let bot_out = FuzzyVector::bottom(l.clone(), op.out_index().clone());

    let unit_law = |witnesses: &mut Vec<LawWitness>, law: &str, ok: bool| -> bool {
        if !ok {
            witnesses.push(LawWitness { law: law.into(), witness: vec![] });
        }
        ok
    };
    let preserves_top = unit_law(&mut witnesses, "preserves_top", image(&top_in) == top_out);
    let preserves_bot = unit_law(&mut witnesses, "preserves_bottom", image(&bot_in) == bot_out);
    let reverses_bot = unit_law(&mut witnesses, "bottom_to_top", image(&bot_in) == top_out);

    let binary_meets = pair_law(&mut witnesses, "binary_meets", &|a, b| {
        image(&a.meet(b)) == image(a).meet(&image(b))
    });
    let binary_joins = pair_law(&mut witnesses, "binary_joins", &|a, b| {
        image(&a.join(b)) == image(a).join(&image(b))
    });
    let joins_to_meets = pair_law(&mut witnesses, "joins_to_meets", &|a, b| {
        image(&a.join(b)) == image(a).meet(&image(b))
    });

    let infima_preserving = preserves_top && binary_meets;
    let suprema_preserving = preserves_bot && binary_joins;
    let suprema_reversing = reverses_bot && joins_to_meets;

    let diag_law = |witnesses: &mut Vec<LawWitness>,
                    law: &str,
                    ok: &dyn Fn(crate::lattice::Elem, &FuzzyVector) -> bool|
     -> bool {
        for d in l.elems() {
            for x in &inputs {
                if !ok(d, x) {
                    witnesses.push(LawWitness {
                        law: law.into(),
                        witness: vec![
                            format!("d={}", l.label_string(d)),
                            format!("x={}", x.label_list()),
                        ],
                    });
                    return false;
                }
            }
        }
        true
    };

    let diag_imp_law = diag_law(&mut witnesses, "diag_imp", &|d, x| {
        image(x).scalar_imp(d) == image(&x.scalar_imp(d))
    });
    let diag_prod_law = diag_law(&mut witnesses, "diag_prod", &|d, x| {
        image(x).scalar_prod(d) == image(&x.scalar_prod(d))
    });
    let diag_mixed_law = diag_law(&mut witnesses, "diag_mixed", &|d, x| {
        image(x).scalar_imp(d) == image(&x.scalar_prod(d))
    });

    let is_phi_type = infima_preserving && diag_imp_law;
    let is_rho_type = suprema_preserving && diag_prod_law;
    let is_delta_type = suprema_reversing && diag_mixed_law;
    let type_class = if is_phi_type {
        TypeClass::PhiType
    } else if is_rho_type {
        TypeClass::RhoType
    } else if is_delta_type {
        TypeClass::DeltaType
    } else {
        TypeClass::None
    };

    MappingTypeReport {
        monotone,
        antitone,
        infima_preserving,
        suprema_preserving,
        suprema_reversing,
        diag_imp_law,
        diag_prod_law,
        diag_mixed_law,
        is_phi_type,
        is_rho_type,
        is_delta_type,
        type_class,
        witnesses,
    }
}

/// Which partner to compute, named after the property the *given* table
/// must have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdjointDirection {
    /// Given an infima-preserving `f`, the partner is
    /// `g(x) = ⋀{a | x ≤ f(a)}`.
    RightOfMonotone,
    /// Given a suprema-preserving `g`, the partner is
    /// `f(x) = ⋁{b | g(b) ≤ x}`.
    LeftOfMonotone,
    /// Given a suprema-reversing `d`, the partner is
    /// `h(x) = ⋁{a | x ≤ d(a)}`.
    ReversedPartner,
}

impl AdjointDirection {
    fn name(self) -> &'static str {
        match self {
            AdjointDirection::RightOfMonotone => "right_of_monotone",
            AdjointDirection::LeftOfMonotone => "left_of_monotone",
            AdjointDirection::ReversedPartner => "reversed_partner",
        }
    }
}

/// Computes the uniquely determined adjoint partner of `op`, mapping
/// `A^out → A^in`. Errors when `op` lacks the preservation property the
/// direction requires, quoting a witness.
pub fn compute_adjoint(
    op: &OperatorTable,
    direction: AdjointDirection,
    budget: usize,
) -> Result<OperatorTable> {
    let report = classify_mapping(op);
    let (required, ok) = match direction {
        AdjointDirection::RightOfMonotone => ("preserve all infima", report.infima_preserving),
        AdjointDirection::LeftOfMonotone => ("preserve all suprema", report.suprema_preserving),
        AdjointDirection::ReversedPartner => {
            ("turn suprema into infima", report.suprema_reversing)
        }
    };
    if !ok {
        let detail = report
            .witnesses
            .first()
            .map(|w| format!("{} fails at ({})", w.law, w.witness.join(", ")))
            .unwrap_or_else(|| "required preservation law fails".into());
        return Err(Error::NotAdjointable {
            direction: direction.name().into(),
            reason: format!("the table must {required}; {detail}"),
        });
    }

    let l = op.lattice().clone();
    let partner_inputs = crate::vector::enumerate(&l, op.out_index(), budget)?;
    let op_inputs = op.inputs();
    let rows = partner_inputs
        .iter()
        .map(|x| {
            let mut acc = match direction {
                AdjointDirection::RightOfMonotone => {
                    FuzzyVector::top(l.clone(), op.in_index().clone())
                }
                _ => FuzzyVector::bottom(l.clone(), op.in_index().clone()),
            };
            for a in &op_inputs {
                let fa = op.apply(a).expect("enumerated input");
                match direction {
                    AdjointDirection::RightOfMonotone | AdjointDirection::ReversedPartner => {
                        if x.leq(&fa) {
                            acc = match direction {
                                AdjointDirection::RightOfMonotone => acc.meet(a),
                                _ => acc.join(a),
                            };
                        }
                    }
                    AdjointDirection::LeftOfMonotone => {
                        if fa.leq(x) {
                            acc = acc.join(a);
                        }
                    }
                }
            }
            acc
        })
        .collect();

    OperatorTable::from_rows(
        l,
        op.out_index().clone(),
        op.in_index().clone(),
        rows,
        super::Provenance::Explicit,
    )
}
