//! Operators between fuzzy-subset spaces `A^I → A^J`.
//!
//! A relation `R: I×J → A` induces four operators:
//!
//! - `φ_R(x)(j) = ⋀_i (R(i,j) → x(i))` on `A^I → A^J`
//! - `ρ_R(x)(i) = ⋁_j (R(i,j) · x(j))` on `A^J → A^I`
//! - `δ_R(x)(j) = ⋀_i (x(i) → R(i,j))` on `A^I → A^J`
//! - `ε_R(x)(i) = ⋀_j (x(j) → R(i,j))` on `A^J → A^I`
//!
//! `(φ_R, ρ_R)` form an adjoint pair (`x ≤ φ_R(y)` iff `ρ_R(x) ≤ y`) and
//! `(δ_R, ε_R)` an order-reversing one (`x ≤ δ_R(y)` iff `y ≤ ε_R(x)`).
//!
//! Beyond direct application, operators are materialised as extensional
//! tables ([`OperatorTable`]): one output vector per input vector of `A^I`
//! in canonical rank order. Tables are what the verification, adjoint
//! computation, recovery and decomposition routines consume — they make no
//! assumption about where a mapping came from. Table construction enforces
//! a caller-supplied budget on `|A|^|I|` ([`DEFAULT_BUDGET`] unless asked
//! otherwise).

mod galois;
mod laws;
mod represent;

pub use galois::{
    classify_mapping, compute_adjoint, verify_galois, AdjointDirection, GaloisReport,
    MappingTypeReport, TypeClass,
};
pub use laws::{
    boolean_criterion_check, conjugate_check, strong_adjoint_check, BooleanCriterionReport,
    ConjugateReport, StrongAdjointReport,
};
pub use represent::{
    closure_interior_check, decompose_operator, recover_relation, ClosureInteriorReport,
    DecomposeMode, Decomposition, RecoverKind,
};

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::LatticeSpec;
use crate::relation::{FuzzyRelation, IndexSet};
use crate::vector::{self, FuzzyVector};

/// Default cap on `|A|^|I|` for table construction and other exhaustive
/// enumerations of a vector space.
pub const DEFAULT_BUDGET: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InducedKind {
    Phi,
    Rho,
    Delta,
    Epsilon,
}

impl fmt::Display for InducedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InducedKind::Phi => write!(f, "phi"),
            InducedKind::Rho => write!(f, "rho"),
            InducedKind::Delta => write!(f, "delta"),
            InducedKind::Epsilon => write!(f, "epsilon"),
        }
    }
}

/// Where a table came from. Metadata only: no algorithm consults it.
#[derive(Debug, Clone, PartialEq)]
pub enum Provenance {
    Explicit,
    Induced { kind: InducedKind, relation: FuzzyRelation },
}

/// An extensional mapping `A^in → A^out`: output vectors listed in the
/// canonical rank order of their inputs.
#[derive(Debug, Clone)]
pub struct OperatorTable {
    lattice: Arc<LatticeSpec>,
    in_index: Arc<IndexSet>,
    out_index: Arc<IndexSet>,
    rows: Vec<FuzzyVector>,
    provenance: Provenance,
}

impl OperatorTable {
    /// Builds a table from explicit rows; `rows[r]` is the image of the
    /// input with rank `r`, so exactly `|A|^|in|` rows are required.
    pub fn from_rows(
        lattice: Arc<LatticeSpec>,
        in_index: Arc<IndexSet>,
        out_index: Arc<IndexSet>,
        rows: Vec<FuzzyVector>,
        provenance: Provenance,
    ) -> Result<OperatorTable> {
        let expected = vector::space_size(&lattice, &in_index);
        if rows.len() as u128 != expected {
            return Err(Error::Shape(format!(
                "expected {expected} rows (one per input vector), got {}",
                rows.len()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.index() != &out_index {
                return Err(Error::Shape(format!("row {r} is not over the output index set")));
            }
            if *row.lattice().as_ref() != *lattice {
                return Err(Error::LatticeMismatch);
            }
        }
        Ok(OperatorTable { lattice, in_index, out_index, rows, provenance })
    }

    /// Tabulates the operator induced by `r`, one application per input.
    pub fn tabulate_induced(
        kind: InducedKind,
        r: &FuzzyRelation,
        budget: usize,
    ) -> Result<OperatorTable> {
        let in_index = match kind {
            InducedKind::Phi | InducedKind::Delta => r.domain().clone(),
            InducedKind::Rho | InducedKind::Epsilon => r.codomain().clone(),
        };
        let inputs = vector::enumerate(r.lattice(), &in_index, budget)?;
        let rows = inputs
            .iter()
            .map(|x| apply_induced(kind, r, x))
            .collect::<Result<Vec<_>>>()?;
        let out_index = match kind {
            InducedKind::Phi | InducedKind::Delta => r.codomain().clone(),
            InducedKind::Rho | InducedKind::Epsilon => r.domain().clone(),
        };
        Ok(OperatorTable {
            lattice: r.lattice().clone(),
            in_index,
            out_index,
            rows,
            provenance: Provenance::Induced { kind, relation: r.clone() },
        })
    }

    /// The identity table on `A^index`.
    pub fn identity(
        lattice: Arc<LatticeSpec>,
        index: Arc<IndexSet>,
        budget: usize,
    ) -> Result<OperatorTable> {
        let rows = vector::enumerate(&lattice, &index, budget)?;
        Ok(OperatorTable {
            lattice,
            in_index: index.clone(),
            out_index: index,
            rows,
            provenance: Provenance::Explicit,
        })
    }

    /// Tabulates an arbitrary function of vectors.
    pub fn tabulate_fn(
        lattice: Arc<LatticeSpec>,
        in_index: Arc<IndexSet>,
        out_index: Arc<IndexSet>,
        budget: usize,
        f: impl Fn(&FuzzyVector) -> FuzzyVector,
    ) -> Result<OperatorTable> {
        let inputs = vector::enumerate(&lattice, &in_index, budget)?;
        let rows = inputs.iter().map(&f).collect::<Vec<_>>();
        Self::from_rows(lattice, in_index, out_index, rows, Provenance::Explicit)
    }

    /// `outer ∘ inner`: feeds every image of `inner` through `outer`.
    pub fn compose(outer: &OperatorTable, inner: &OperatorTable) -> Result<OperatorTable> {
        if inner.out_index != outer.in_index {
            return Err(Error::Shape(
                "inner output index set differs from outer input index set".into(),
            ));
        }
        if *inner.lattice != *outer.lattice {
            return Err(Error::LatticeMismatch);
        }
        let rows = inner
            .rows
            .iter()
            .map(|mid| outer.apply(mid))
            .collect::<Result<Vec<_>>>()?;
        Ok(OperatorTable {
            lattice: inner.lattice.clone(),
            in_index: inner.in_index.clone(),
            out_index: outer.out_index.clone(),
            rows,
            provenance: Provenance::Explicit,
        })
    }

    pub fn apply(&self, x: &FuzzyVector) -> Result<FuzzyVector> {
        if x.index() != &self.in_index {
            return Err(Error::Shape("vector is not over the operator's input index set".into()));
        }
        if *x.lattice().as_ref() != *self.lattice {
            return Err(Error::LatticeMismatch);
        }
        Ok(self.rows[x.rank()].clone())
    }

    pub fn lattice(&self) -> &Arc<LatticeSpec> {
        &self.lattice
    }

    pub fn in_index(&self) -> &Arc<IndexSet> {
        &self.in_index
    }

    pub fn out_index(&self) -> &Arc<IndexSet> {
        &self.out_index
    }

    pub fn rows(&self) -> &[FuzzyVector] {
        &self.rows
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn is_endo(&self) -> bool {
        self.in_index == self.out_index
    }

    /// Input vectors in rank order (the domain enumeration this table is
    /// keyed by).
    pub fn inputs(&self) -> Vec<FuzzyVector> {
        (0..self.rows.len())
            .map(|r| FuzzyVector::from_rank(self.lattice.clone(), self.in_index.clone(), r))
            .collect()
    }

    /// Extensional equality: same lattice, same index sets, same rows.
    /// Provenance is ignored.
    pub fn same_mapping(&self, other: &OperatorTable) -> bool {
        *self.lattice == *other.lattice
            && self.in_index == other.in_index
            && self.out_index == other.out_index
            && self.rows == other.rows
    }
}

/// One application of an induced operator, straight from the defining
/// formula — no table is built.
pub fn apply_induced(kind: InducedKind, r: &FuzzyRelation, x: &FuzzyVector) -> Result<FuzzyVector> {
    if !r.same_lattice(x.lattice()) {
        return Err(Error::LatticeMismatch);
    }
    let l = r.lattice();
    let (rows, cols) = (r.domain().len(), r.codomain().len());
    match kind {
        InducedKind::Phi | InducedKind::Delta => {
            if x.index() != r.domain() {
                return Err(Error::Shape(format!(
                    "{kind} consumes vectors over the relation's domain"
                )));
            }
            let values = (0..cols)
                .map(|j| {
                    (0..rows).fold(l.top(), |acc, i| {
                        let term = match kind {
                            InducedKind::Phi => l.imp(r.get(i, j), x.get(i)),
                            _ => l.imp(x.get(i), r.get(i, j)),
                        };
                        l.meet(acc, term)
                    })
                })
                .collect();
            FuzzyVector::new(l.clone(), r.codomain().clone(), values)
        }
        InducedKind::Rho | InducedKind::Epsilon => {
            if x.index() != r.codomain() {
                return Err(Error::Shape(format!(
                    "{kind} consumes vectors over the relation's codomain"
                )));
            }
            let values = (0..rows)
                .map(|i| match kind {
                    InducedKind::Rho => (0..cols)
                        .fold(l.bot(), |acc, j| l.join(acc, l.prod(r.get(i, j), x.get(j)))),
                    _ => (0..cols)
                        .fold(l.top(), |acc, j| l.meet(acc, l.imp(x.get(j), r.get(i, j)))),
                })
                .collect();
            FuzzyVector::new(l.clone(), r.domain().clone(), values)
        }
    }
}
