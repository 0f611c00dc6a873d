//! Fuzzy subsets: vectors in `A^I` with pointwise operations.
//!
//! Vectors over an index set of size `m` on a carrier of size `n` are
//! enumerated canonically as mixed-radix numerals: the rank runs from `0`
//! to `n^m - 1` with index position `0` as the most significant digit, so
//! rank `0` is the constant-`0` vector and rank `n^m - 1` the constant-`1`
//! vector. Tables and sweeps throughout the crate rely on this order.

use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::lattice::{Elem, LatticeSpec};
use crate::relation::IndexSet;

#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyVector {
    lattice: Arc<LatticeSpec>,
    index: Arc<IndexSet>,
    values: Vec<Elem>,
}

impl FuzzyVector {
    pub fn new(
        lattice: Arc<LatticeSpec>,
        index: Arc<IndexSet>,
        values: Vec<Elem>,
    ) -> Result<FuzzyVector> {
        if values.len() != index.len() {
            return Err(Error::Shape(format!(
                "vector has {} entries for {} indices",
                values.len(),
                index.len()
            )));
        }
        for &e in &values {
            if e.0 >= lattice.n() {
                return Err(Error::Shape(format!("element index {} out of range", e.0)));
            }
        }
        Ok(FuzzyVector { lattice, index, values })
    }

    pub fn from_labels(
        lattice: Arc<LatticeSpec>,
        index: Arc<IndexSet>,
        labels: &[&str],
    ) -> Result<FuzzyVector> {
        let values = labels
            .iter()
            .map(|s| lattice.element_for_label(s))
            .collect::<Result<Vec<_>>>()?;
        FuzzyVector::new(lattice, index, values)
    }

    /// The diagonal vector `d^I` with the same element at every position.
    pub fn diagonal(lattice: Arc<LatticeSpec>, index: Arc<IndexSet>, d: Elem) -> FuzzyVector {
        let values = vec![d; index.len()];
        FuzzyVector { lattice, index, values }
    }

    pub fn top(lattice: Arc<LatticeSpec>, index: Arc<IndexSet>) -> FuzzyVector {
        let top = lattice.top();
        Self::diagonal(lattice, index, top)
    }

    pub fn bottom(lattice: Arc<LatticeSpec>, index: Arc<IndexSet>) -> FuzzyVector {
        let bot = lattice.bot();
        Self::diagonal(lattice, index, bot)
    }

    /// The characteristic vector of position `j`: `1` there, `0` elsewhere.
    pub fn unit(lattice: Arc<LatticeSpec>, index: Arc<IndexSet>, j: usize) -> FuzzyVector {
        let mut values = vec![lattice.bot(); index.len()];
        values[j] = lattice.top();
        FuzzyVector { lattice, index, values }
    }

    pub fn lattice(&self) -> &Arc<LatticeSpec> {
        &self.lattice
    }

    pub fn index(&self) -> &Arc<IndexSet> {
        &self.index
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn get(&self, i: usize) -> Elem {
        self.values[i]
    }

    /// Canonical rank of this vector in the enumeration of `A^I`.
    pub fn rank(&self) -> usize {
        let n = self.lattice.n();
        self.values.iter().fold(0, |acc, e| acc * n + e.0)
    }

    /// Inverse of [`rank`](Self::rank).
    pub fn from_rank(
        lattice: Arc<LatticeSpec>,
        index: Arc<IndexSet>,
        mut rank: usize,
    ) -> FuzzyVector {
        let n = lattice.n();
        let m = index.len();
        let mut values = vec![Elem(0); m];
        for pos in (0..m).rev() {
            values[pos] = Elem(rank % n);
            rank /= n;
        }
        debug_assert_eq!(rank, 0, "rank out of range");
        FuzzyVector { lattice, index, values }
    }

    fn zip_with(&self, other: &FuzzyVector, f: impl Fn(Elem, Elem) -> Elem) -> FuzzyVector {
        assert_eq!(self.index, other.index, "vectors over different index sets");
        assert_eq!(
            *self.lattice, *other.lattice,
            "vectors over different lattices"
        );
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| f(a, b))
            .collect();
        FuzzyVector { lattice: self.lattice.clone(), index: self.index.clone(), values }
    }

    pub fn meet(&self, other: &FuzzyVector) -> FuzzyVector {
        self.zip_with(other, |a, b| self.lattice.meet(a, b))
    }

    pub fn join(&self, other: &FuzzyVector) -> FuzzyVector {
        self.zip_with(other, |a, b| self.lattice.join(a, b))
    }

    pub fn prod(&self, other: &FuzzyVector) -> FuzzyVector {
        self.zip_with(other, |a, b| self.lattice.prod(a, b))
    }

    /// Pointwise residuum `self(i) → other(i)`.
    pub fn imp(&self, other: &FuzzyVector) -> FuzzyVector {
        self.zip_with(other, |a, b| self.lattice.imp(a, b))
    }

    /// `d → x` pointwise: `(d → x(i))_i`.
    pub fn scalar_imp(&self, d: Elem) -> FuzzyVector {
        self.map(|e| self.lattice.imp(d, e))
    }

    /// `d · x` pointwise.
    pub fn scalar_prod(&self, d: Elem) -> FuzzyVector {
        self.map(|e| self.lattice.prod(d, e))
    }

    /// Pointwise `¬x(i) = x(i) → 0`.
    pub fn neg(&self) -> FuzzyVector {
        self.map(|e| self.lattice.neg(e))
    }

    fn map(&self, f: impl Fn(Elem) -> Elem) -> FuzzyVector {
        FuzzyVector {
            lattice: self.lattice.clone(),
            index: self.index.clone(),
            values: self.values.iter().map(|&e| f(e)).collect(),
        }
    }

    /// Pointwise order.
    pub fn leq(&self, other: &FuzzyVector) -> bool {
        assert_eq!(self.index, other.index, "vectors over different index sets");
        self.values
            .iter()
            .zip(&other.values)
            .all(|(&a, &b)| self.lattice.leq(a, b))
    }

    /// `[l1,l2,…]` with rational labels; the display used in witnesses and
    /// in decomposition index names.
    pub fn label_list(&self) -> String {
        format!(
            "[{}]",
            self.values.iter().map(|&e| self.lattice.label_string(e)).join(",")
        )
    }

    pub fn label_strings(&self) -> Vec<String> {
        self.values.iter().map(|&e| self.lattice.label_string(e)).collect()
    }
}

/// `|A|^|I|` as a u128, to compare against budgets before enumerating.
pub fn space_size(lattice: &LatticeSpec, index: &IndexSet) -> u128 {
    (lattice.n() as u128).pow(index.len() as u32)
}

/// Checks `|A|^|I| ≤ budget` and returns the size as usize.
pub fn checked_space_size(
    lattice: &LatticeSpec,
    index: &IndexSet,
    budget: usize,
) -> Result<usize> {
    let needed = space_size(lattice, index);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(needed as usize)
}

/// All vectors of `A^I` in canonical rank order.
pub fn enumerate(
    lattice: &Arc<LatticeSpec>,
    index: &Arc<IndexSet>,
    budget: usize,
) -> Result<Vec<FuzzyVector>> {
    let count = checked_space_size(lattice, index, budget)?;
    Ok((0..count)
        .map(|r| FuzzyVector::from_rank(lattice.clone(), index.clone(), r))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (Arc<LatticeSpec>, Arc<IndexSet>) {
        (
            LatticeSpec::lukasiewicz_chain(3).unwrap(),
            IndexSet::new(["i1", "i2"]).unwrap(),
        )
    }

    #[test]
    fn rank_round_trips_in_canonical_order() {
        let (l, idx) = setup();
        let all = enumerate(&l, &idx, 100).unwrap();
        assert_eq!(all.len(), 9);
        // first and last are the constant vectors
        assert_eq!(all[0].values(), &[Elem(0), Elem(0)]);
        assert_eq!(all[8].values(), &[Elem(2), Elem(2)]);
        // position 0 is the most significant digit
        assert_eq!(all[3].values(), &[Elem(1), Elem(0)]);
        for (r, v) in all.iter().enumerate() {
            assert_eq!(v.rank(), r);
        }
    }

    #[test]
    fn budget_cuts_off_enumeration() {
        let (l, idx) = setup();
        let err = enumerate(&l, &idx, 8).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { needed: 9, budget: 8 }));
    }

    #[test]
    fn pointwise_operations() {
        let (l, idx) = setup();
        let x = FuzzyVector::from_labels(l.clone(), idx.clone(), &["1/2", "1"]).unwrap();
        let y = FuzzyVector::from_labels(l.clone(), idx.clone(), &["1", "1/2"]).unwrap();
        assert_eq!(x.meet(&y).label_list(), "[1/2,1/2]");
        assert_eq!(x.join(&y).label_list(), "[1,1]");
        assert_eq!(x.prod(&y).label_list(), "[1/2,1/2]");
        assert_eq!(x.imp(&y).label_list(), "[1,1/2]");
        assert_eq!(x.neg().label_list(), "[1/2,0]");
        let half = l.element_for_label("1/2").unwrap();
        assert_eq!(x.scalar_imp(half).label_list(), "[1,1]");
        assert_eq!(x.scalar_prod(half).label_list(), "[0,1/2]");
    }

    #[test]
    fn order_is_pointwise() {
        let (l, idx) = setup();
        let x = FuzzyVector::from_labels(l.clone(), idx.clone(), &["0", "1/2"]).unwrap();
        let y = FuzzyVector::from_labels(l.clone(), idx.clone(), &["1/2", "1/2"]).unwrap();
        let z = FuzzyVector::from_labels(l.clone(), idx.clone(), &["1", "0"]).unwrap();
        assert!(x.leq(&y));
        assert!(!y.leq(&x));
        assert!(!x.leq(&z) && !z.leq(&x), "incomparable pair");
        assert!(x.leq(&x));
    }

    #[test]
    fn unit_vector_has_single_top() {
        let (l, idx) = setup();
        let u = FuzzyVector::unit(l, idx, 1);
        assert_eq!(u.label_list(), "[0,1]");
    }

    #[test]
    fn shape_errors_on_construction() {
        let (l, idx) = setup();
        assert!(FuzzyVector::new(l.clone(), idx.clone(), vec![Elem(0)]).is_err());
        assert!(FuzzyVector::new(l.clone(), idx.clone(), vec![Elem(0), Elem(9)]).is_err());
        assert!(FuzzyVector::from_labels(l, idx, &["1", "0.3"]).is_err());
    }
}
