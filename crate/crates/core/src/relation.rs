//! Fuzzy binary relations `R: I×J → A` between finite named index sets.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{Elem, LatticeSpec, LawWitness};

/// An ordered set of distinct index names, e.g. worlds, objects, attributes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    names: Vec<String>,
}

impl IndexSet {
    pub fn new<I, S>(names: I) -> Result<Arc<IndexSet>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyIndexSet);
        }
        for (pos, n) in names.iter().enumerate() {
            if names[..pos].contains(n) {
                return Err(Error::DuplicateIndex(n.clone()));
            }
        }
        Ok(Arc::new(IndexSet { names }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn position(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownIndex(name.to_string()))
    }
}

/// Dense relation table: every `(i, j)` pair carries a carrier element, with
/// unlisted pairs defaulting to `0` at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyRelation {
    lattice: Arc<LatticeSpec>,
    domain: Arc<IndexSet>,
    codomain: Arc<IndexSet>,
    values: Vec<Vec<Elem>>,
}

/// Property report for a relation. The square-only properties (reflexive,
/// symmetric, transitive) are only produced for relations with
/// `domain = codomain`; asking for them on any other shape is an error, not
/// `false`.
#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub boolean_valued: bool,
    pub fuzzy_equivalence: bool,
    pub witnesses: Vec<LawWitness>,
}

impl FuzzyRelation {
    /// Builds a relation from sparse `(i, j, label)` entries; unlisted pairs
    /// are `0`. Listing the same pair twice is rejected rather than silently
    /// overwritten.
    pub fn new(
        lattice: Arc<LatticeSpec>,
        domain: Arc<IndexSet>,
        codomain: Arc<IndexSet>,
        entries: &[(String, String, String)],
    ) -> Result<FuzzyRelation> {
        let mut values = vec![vec![lattice.bot(); codomain.len()]; domain.len()];
        let mut seen = vec![vec![false; codomain.len()]; domain.len()];
        for (i, j, v) in entries {
            let row = domain.position(i)?;
            let col = codomain.position(j)?;
            if seen[row][col] {
                return Err(Error::DuplicateEntry { i: i.clone(), j: j.clone() });
            }
            seen[row][col] = true;
            values[row][col] = lattice.element_for_label(v)?;
        }
        Ok(FuzzyRelation { lattice, domain, codomain, values })
    }

    /// Builds a relation from a full table of element indices, row per
    /// domain index.
    pub fn from_table(
        lattice: Arc<LatticeSpec>,
        domain: Arc<IndexSet>,
        codomain: Arc<IndexSet>,
        values: Vec<Vec<Elem>>,
    ) -> Result<FuzzyRelation> {
        if values.len() != domain.len() {
            return Err(Error::Shape(format!(
                "expected {} rows, got {}",
                domain.len(),
                values.len()
            )));
        }
        for (i, row) in values.iter().enumerate() {
            if row.len() != codomain.len() {
                return Err(Error::Shape(format!(
                    "row {} has {} columns, expected {}",
                    i,
                    row.len(),
                    codomain.len()
                )));
            }
            for &e in row {
                if e.0 >= lattice.n() {
                    return Err(Error::Shape(format!("element index {} out of range", e.0)));
                }
            }
        }
        Ok(FuzzyRelation { lattice, domain, codomain, values })
    }

    /// The crisp identity relation on `index`: `1` on the diagonal, `0` off.
    pub fn identity(lattice: Arc<LatticeSpec>, index: Arc<IndexSet>) -> FuzzyRelation {
        let n = index.len();
        let values = (0..n)
            .map(|i| (0..n).map(|j| if i == j { lattice.top() } else { lattice.bot() }).collect())
            .collect();
        FuzzyRelation { lattice, domain: index.clone(), codomain: index, values }
    }

    /// The constant relation with every entry `value`.
    pub fn constant(
        lattice: Arc<LatticeSpec>,
        domain: Arc<IndexSet>,
        codomain: Arc<IndexSet>,
        value: Elem,
    ) -> FuzzyRelation {
        let values = vec![vec![value; codomain.len()]; domain.len()];
        FuzzyRelation { lattice, domain, codomain, values }
    }

    pub fn lattice(&self) -> &Arc<LatticeSpec> {
        &self.lattice
    }

    pub fn domain(&self) -> &Arc<IndexSet> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<IndexSet> {
        &self.codomain
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.values[i][j]
    }

    pub fn get_by_name(&self, i: &str, j: &str) -> Result<Elem> {
        Ok(self.values[self.domain.position(i)?][self.codomain.position(j)?])
    }

    pub fn is_square(&self) -> bool {
        self.domain == self.codomain
    }

    /// Every entry is `0` or `1`.
    pub fn is_boolean_valued(&self) -> bool {
        let (bot, top) = (self.lattice.bot(), self.lattice.top());
        self.values.iter().flatten().all(|&e| e == bot || e == top)
    }

    /// `R⁻¹(j, i) = R(i, j)`.
    pub fn transpose(&self) -> FuzzyRelation {
        let values = (0..self.codomain.len())
            .map(|j| (0..self.domain.len()).map(|i| self.values[i][j]).collect())
            .collect();
        FuzzyRelation {
            lattice: self.lattice.clone(),
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            values,
        }
    }

    /// Reflexivity, symmetry, transitivity (`R(i,j)·R(j,k) ≤ R(i,k)`),
    /// boolean-valuedness, and their conjunction into `fuzzy_equivalence`.
    ///
    /// Errors with a shape error for non-square relations, because the
    /// square-only properties would be meaningless there.
    pub fn properties(&self) -> Result<RelationReport> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "reflexivity/symmetry/transitivity need domain = codomain, got {}x{}",
                self.domain.len(),
                self.codomain.len()
            )));
        }
        let l = &self.lattice;
        let n = self.domain.len();
        let mut witnesses = Vec::new();

        let mut reflexive = true;
        for i in 0..n {
            if self.values[i][i] != l.top() {
                reflexive = false;
                witnesses.push(LawWitness {
                    law: "reflexive".into(),
                    witness: vec![self.domain.name(i).to_string()],
                });
                break;
            }
        }

        let mut symmetric = true;
        'sym: for i in 0..n {
            for j in 0..n {
                if self.values[i][j] != self.values[j][i] {
                    symmetric = false;
                    witnesses.push(LawWitness {
                        law: "symmetric".into(),
                        witness: vec![
                            self.domain.name(i).to_string(),
                            self.domain.name(j).to_string(),
                        ],
                    });
                    break 'sym;
                }
            }
        }

        let mut transitive = true;
        'trans: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let step = l.prod(self.values[i][j], self.values[j][k]);
                    if !l.leq(step, self.values[i][k]) {
                        transitive = false;
                        witnesses.push(LawWitness {
                            law: "transitive".into(),
                            witness: vec![
                                self.domain.name(i).to_string(),
                                self.domain.name(j).to_string(),
                                self.domain.name(k).to_string(),
                            ],
                        });
                        break 'trans;
                    }
                }
            }
        }

        let boolean_valued = self.is_boolean_valued();
        Ok(RelationReport {
            reflexive,
            symmetric,
            transitive,
            boolean_valued,
            fuzzy_equivalence: reflexive && symmetric && transitive,
            witnesses,
        })
    }

    /// Structural compatibility with another relation or operand.
    pub fn same_lattice(&self, other: &LatticeSpec) -> bool {
        *self.lattice.as_ref() == *other
    }
}
