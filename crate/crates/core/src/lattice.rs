//! Finite commutative bounded integral residuated lattices.
//!
//! A carrier is a finite set of elements named by exact rational labels.
//! All four binary operations are total `n×n` lookup tables over element
//! *indices*:
//!
//! - `∨` / `∧` — the bounded lattice structure with `0` at index `0` and
//!   `1` at index `n-1`,
//! - `·` — a commutative monoid with unit `1`,
//! - `→` — the residuum, tied to `·` by adjointness:
//!   `x·y ≤ z` iff `x ≤ y→z`.
//!
//! No floating point appears anywhere; element equality is index equality
//! and the lattice order is derived from the meet table.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use itertools::Itertools;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

/// Exact rational used for carrier labels.
pub type Rational = Ratio<i64>;

/// Index of a carrier element.
///
/// `Ord` on `Elem` is raw index order and is used only for canonical
/// enumeration; the lattice order is [`LatticeSpec::leq`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub usize);

/// How a carrier was built. Purely informational: two specs with equal
/// labels and tables are the same algebra regardless of kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeKind {
    Lukasiewicz,
    Goedel,
    Custom,
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeKind::Lukasiewicz => write!(f, "lukasiewicz"),
            LatticeKind::Goedel => write!(f, "goedel"),
            LatticeKind::Custom => write!(f, "custom"),
        }
    }
}

/// The four operation tables, each `n×n`, entries are element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeTables {
    pub join: Vec<Vec<usize>>,
    pub meet: Vec<Vec<usize>>,
    pub prod: Vec<Vec<usize>>,
    pub imp: Vec<Vec<usize>>,
}

/// A finite residuated-lattice candidate: labelled carrier plus tables.
///
/// Constructors that expose a `LatticeSpec` guarantee the structural shape
/// (square, total, in-range tables; distinct labels); the chain constructors
/// and [`LatticeSpec::custom`] additionally guarantee that [`validate`]
/// passes. [`LatticeSpec::unvalidated`] skips the law check so that broken
/// tables can still be diagnosed through [`validate`].
///
/// [`validate`]: LatticeSpec::validate
#[derive(Debug, Clone)]
pub struct LatticeSpec {
    labels: Vec<Rational>,
    kind: LatticeKind,
    tables: LatticeTables,
}

/// Equality ignores `kind`: a hand-entered copy of a chain is the same
/// algebra as the constructor output.
impl PartialEq for LatticeSpec {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.tables == other.tables
    }
}

impl Eq for LatticeSpec {}

/// A named law failure, with the offending elements as labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawWitness {
    pub law: String,
    pub witness: Vec<String>,
}

/// Outcome of checking the residuated-lattice laws and the BL/MV extras.
#[derive(Debug, Clone, Serialize)]
pub struct LatticeReport {
    pub is_bounded_lattice: bool,
    pub is_comm_monoid: bool,
    pub has_adjointness: bool,
    pub has_divisibility: bool,
    pub has_prelinearity: bool,
    pub has_double_negation: bool,
    pub is_bl: bool,
    pub is_mv: bool,
    /// First witness per failed law, in the order the laws are checked.
    pub counterexamples: Vec<LawWitness>,
}

impl LatticeReport {
    /// True when the structure is a commutative bounded integral residuated
    /// lattice (the three structural flags).
    pub fn is_residuated(&self) -> bool {
        self.is_bounded_lattice && self.is_comm_monoid && self.has_adjointness
    }
}

/// Derived MV operations `¬x = x→0` and `x⊕y = ¬(¬x·¬y)`, precomputed as
/// tables. Only available once the lattice classifies as an MV-algebra.
#[derive(Debug, Clone)]
pub struct MvOps {
    neg: Vec<Elem>,
    oplus: Vec<Vec<Elem>>,
}

impl MvOps {
    pub fn neg(&self, x: Elem) -> Elem {
        self.neg[x.0]
    }

    pub fn oplus(&self, x: Elem, y: Elem) -> Elem {
        self.oplus[x.0][y.0]
    }

    pub fn neg_table(&self) -> &[Elem] {
        &self.neg
    }

    pub fn oplus_table(&self) -> &[Vec<Elem>] {
        &self.oplus
    }
}

/// Result of spot-checking that `·` distributes over finite suprema and `→`
/// turns finite suprema in the first argument (resp. infima in the second)
/// into infima:
///
/// - `x·⋁M = ⋁{x·m}`
/// - `(⋁M)→x = ⋀{m→x}`
/// - `x→⋀M = ⋀{x→m}`
///
/// checked for every non-empty subset `M` up to the requested size.
#[derive(Debug, Clone, Serialize)]
pub struct DistributionReport {
    pub max_subset_checked: usize,
    pub prod_over_sup: bool,
    pub sup_into_imp: bool,
    pub inf_under_imp: bool,
    pub counterexamples: Vec<LawWitness>,
}

impl DistributionReport {
    pub fn holds(&self) -> bool {
        self.prod_over_sup && self.sup_into_imp && self.inf_under_imp
    }
}

impl LatticeSpec {
    /// Łukasiewicz chain on `k ≥ 2` elements `0, 1/(k-1), …, 1` with
    /// `x·y = max{x+y-1, 0}` and `x→y = min{1-x+y, 1}`.
    pub fn lukasiewicz_chain(k: usize) -> Result<Arc<LatticeSpec>> {
        if k < 2 {
            return Err(Error::CarrierTooSmall(k));
        }
        let top = k - 1;
        let spec = LatticeSpec {
            labels: chain_labels(k),
            kind: LatticeKind::Lukasiewicz,
            tables: LatticeTables {
                join: table(k, |i, j| i.max(j)),
                meet: table(k, |i, j| i.min(j)),
                prod: table(k, |i, j| (i + j).saturating_sub(top)),
                imp: table(k, |i, j| (top - i + j).min(top)),
            },
        };
        debug_assert!(spec.validate().is_residuated());
        Ok(Arc::new(spec))
    }

    /// Gödel chain on `k ≥ 2` elements with `x·y = min{x,y}` and
    /// `x→y = 1` if `x ≤ y`, else `y`. Note the boundary: `x→x = 1`.
    pub fn goedel_chain(k: usize) -> Result<Arc<LatticeSpec>> {
        if k < 2 {
            return Err(Error::CarrierTooSmall(k));
        }
        let top = k - 1;
        let spec = LatticeSpec {
            labels: chain_labels(k),
            kind: LatticeKind::Goedel,
            tables: LatticeTables {
                join: table(k, |i, j| i.max(j)),
                meet: table(k, |i, j| i.min(j)),
                prod: table(k, |i, j| i.min(j)),
                imp: table(k, |i, j| if i <= j { top } else { j }),
            },
        };
        debug_assert!(spec.validate().is_residuated());
        Ok(Arc::new(spec))
    }

    /// Builds a spec from explicit tables and rejects it unless every
    /// residuated-lattice law passes. The error carries the first failing
    /// law with its witness.
    pub fn custom(labels: Vec<Rational>, tables: LatticeTables) -> Result<Arc<LatticeSpec>> {
        let spec = Self::unvalidated(labels, tables)?;
        let report = spec.validate();
        if !report.is_residuated() {
            let wit = report
                .counterexamples
                .into_iter()
                .find(|w| !CLASSIFICATION_LAWS.contains(&w.law.as_str()))
                .expect("a structural flag is false, so a structural witness exists");
            return Err(Error::LawViolation { law: wit.law, witness: wit.witness });
        }
        Ok(spec)
    }

    /// Structural construction only: shapes, table closure, distinct labels.
    /// The algebraic laws are *not* checked — run [`validate`](Self::validate)
    /// to diagnose. Everything downstream expects a validated spec.
    pub fn unvalidated(labels: Vec<Rational>, tables: LatticeTables) -> Result<Arc<LatticeSpec>> {
        let n = labels.len();
        if n < 2 {
            return Err(Error::CarrierTooSmall(n));
        }
        for (pos, l) in labels.iter().enumerate() {
            if labels[..pos].contains(l) {
                return Err(Error::DuplicateLabel(l.to_string()));
            }
        }
        for (name, t) in [
            ("join", &tables.join),
            ("meet", &tables.meet),
            ("prod", &tables.prod),
            ("impl", &tables.imp),
        ] {
            if t.len() != n {
                return Err(Error::MalformedTable { table: name.into(), n, found: t.len() });
            }
            for (row, r) in t.iter().enumerate() {
                if r.len() != n {
                    return Err(Error::MalformedTable { table: name.into(), n, found: r.len() });
                }
                for (col, &v) in r.iter().enumerate() {
                    if v >= n {
                        return Err(Error::TableEntryOutOfRange {
                            table: name.into(),
                            row,
                            col,
                            value: v,
                            n,
                        });
                    }
                }
            }
        }
        Ok(Arc::new(LatticeSpec { labels, kind: LatticeKind::Custom, tables }))
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    pub fn labels(&self) -> &[Rational] {
        &self.labels
    }

    pub fn tables(&self) -> &LatticeTables {
        &self.tables
    }

    pub fn bot(&self) -> Elem {
        Elem(0)
    }

    pub fn top(&self) -> Elem {
        Elem(self.n() - 1)
    }

    pub fn elems(&self) -> impl Iterator<Item = Elem> {
        (0..self.n()).map(Elem)
    }

    pub fn label(&self, x: Elem) -> Rational {
        self.labels[x.0]
    }

    pub fn label_string(&self, x: Elem) -> String {
        self.labels[x.0].to_string()
    }

    /// Looks a label up by exact rational value, so `2/4`, `0.5` and `1/2`
    /// all name the same element.
    pub fn element_for_label(&self, text: &str) -> Result<Elem> {
        let value = parse_rational(text)?;
        self.labels
            .iter()
            .position(|l| *l == value)
            .map(Elem)
            .ok_or_else(|| Error::LabelNotInCarrier {
                label: text.to_string(),
                carrier: self.labels.iter().map(|l| l.to_string()).join(", "),
            })
    }

    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        Elem(self.tables.join[x.0][y.0])
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        Elem(self.tables.meet[x.0][y.0])
    }

    pub fn prod(&self, x: Elem, y: Elem) -> Elem {
        Elem(self.tables.prod[x.0][y.0])
    }

    pub fn imp(&self, x: Elem, y: Elem) -> Elem {
        Elem(self.tables.imp[x.0][y.0])
    }

    /// Lattice order: `x ≤ y` iff `x∧y = x`.
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.meet(x, y) == x
    }

    /// `¬x = x→0`. Defined on every spec; involutive only on MV-algebras.
    pub fn neg(&self, x: Elem) -> Elem {
        self.imp(x, self.bot())
    }

    /// Checks the bounded-lattice, commutative-monoid and adjointness laws
    /// exhaustively, then the BL/MV classification laws on top. Each failed
    /// law contributes its lexicographically first witness.
    pub fn validate(&self) -> LatticeReport {
        self.analyze()
    }

    /// Same sweep as [`validate`](Self::validate); named separately because
    /// callers interested in the BL/MV verdict read `is_bl` / `is_mv` while
    /// callers guarding inputs read `is_residuated()`.
    pub fn classify(&self) -> LatticeReport {
        self.analyze()
    }

    fn analyze(&self) -> LatticeReport {
        let mut cex: Vec<LawWitness> = Vec::new();
        let mut record = |law: &str, witness: Option<Vec<Elem>>| -> bool {
            match witness {
                None => true,
                Some(els) => {
                    cex.push(LawWitness {
                        law: law.to_string(),
                        witness: els.iter().map(|e| self.label_string(*e)).collect(),
                    });
                    false
                }
            }
        };

        let join = |x, y| self.join(x, y);
        let meet = |x, y| self.meet(x, y);
        let prod = |x, y| self.prod(x, y);
        let imp = |x, y| self.imp(x, y);
        let top = self.top();
        let bot = self.bot();

        let mut lattice_ok = true;
        lattice_ok &= record("join_idempotent", self.first1(|x| join(x, x) == x));
        lattice_ok &= record("join_commutative", self.first2(|x, y| join(x, y) == join(y, x)));
        lattice_ok &= record(
            "join_associative",
            self.first3(|x, y, z| join(join(x, y), z) == join(x, join(y, z))),
        );
        lattice_ok &= record("meet_idempotent", self.first1(|x| meet(x, x) == x));
        lattice_ok &= record("meet_commutative", self.first2(|x, y| meet(x, y) == meet(y, x)));
        lattice_ok &= record(
            "meet_associative",
            self.first3(|x, y, z| meet(meet(x, y), z) == meet(x, meet(y, z))),
        );
        lattice_ok &= record("absorption_join", self.first2(|x, y| join(x, meet(x, y)) == x));
        lattice_ok &= record("absorption_meet", self.first2(|x, y| meet(x, join(x, y)) == x));
        lattice_ok &= record("bottom_join_identity", self.first1(|x| join(x, bot) == x));
        lattice_ok &= record("top_meet_identity", self.first1(|x| meet(x, top) == x));
        lattice_ok &= record("top_join_absorbing", self.first1(|x| join(x, top) == top));
        lattice_ok &= record("bottom_meet_absorbing", self.first1(|x| meet(x, bot) == bot));
        lattice_ok &= record(
            "order_consistency",
            self.first2(|x, y| (meet(x, y) == x) == (join(x, y) == y)),
        );

        let mut monoid_ok = true;
        monoid_ok &= record("prod_commutative", self.first2(|x, y| prod(x, y) == prod(y, x)));
        monoid_ok &= record(
            "prod_associative",
            self.first3(|x, y, z| prod(prod(x, y), z) == prod(x, prod(y, z))),
        );
        monoid_ok &= record("prod_unit", self.first1(|x| prod(x, top) == x));

        let adjoint_ok = record(
            "adjointness",
            self.first3(|x, y, z| self.leq(prod(x, y), z) == self.leq(x, imp(y, z))),
        );

        let divisibility =
            record("divisibility", self.first2(|x, y| prod(x, imp(x, y)) == meet(x, y)));
        let prelinearity =
            record("prelinearity", self.first2(|x, y| join(imp(x, y), imp(y, x)) == top));
        let double_negation =
            record("double_negation", self.first1(|x| self.neg(self.neg(x)) == x));

        let is_residuated = lattice_ok && monoid_ok && adjoint_ok;
        let is_bl = is_residuated && divisibility && prelinearity;
        LatticeReport {
            is_bounded_lattice: lattice_ok,
            is_comm_monoid: monoid_ok,
            has_adjointness: adjoint_ok,
            has_divisibility: divisibility,
            has_prelinearity: prelinearity,
            has_double_negation: double_negation,
            is_bl,
            is_mv: is_bl && double_negation,
            counterexamples: cex,
        }
    }

    /// Derived MV operations; errors unless the lattice classifies as MV.
    pub fn mv_extend(&self) -> Result<MvOps> {
        let report = self.classify();
        if !report.is_mv {
            let reason = if !report.is_residuated() {
                "not a residuated lattice".to_string()
            } else if !report.is_bl {
                "BL laws fail".to_string()
            } else {
                "double negation fails".to_string()
            };
            return Err(Error::UnsupportedStructure(format!("MV operations need an MV-algebra ({reason})")));
        }
        let neg: Vec<Elem> = self.elems().map(|x| self.neg(x)).collect();
        let oplus = self
            .elems()
            .map(|x| self.elems().map(|y| self.neg(self.prod(neg[x.0], neg[y.0]))).collect())
            .collect();
        Ok(MvOps { neg, oplus })
    }

    /// Exhaustive subset check of the three finite distribution identities,
    /// for every element `x` and every non-empty subset `M` with
    /// `|M| ≤ max_subset` (clamped to the carrier size).
    pub fn residuation_distribution(&self, max_subset: usize) -> DistributionReport {
        let max = max_subset.min(self.n()).max(1);
        let mut cex = Vec::new();
        let mut prod_over_sup = true;
        let mut sup_into_imp = true;
        let mut inf_under_imp = true;

        let idx: Vec<usize> = (0..self.n()).collect();
        for size in 1..=max {
            for subset in idx.iter().copied().combinations(size) {
                let m: Vec<Elem> = subset.into_iter().map(Elem).collect();
                let sup = m.iter().copied().reduce(|a, b| self.join(a, b)).unwrap();
                let inf = m.iter().copied().reduce(|a, b| self.meet(a, b)).unwrap();
                for x in self.elems() {
                    if prod_over_sup {
                        let lhs = self.prod(x, sup);
                        let rhs = m
                            .iter()
                            .map(|&e| self.prod(x, e))
                            .reduce(|a, b| self.join(a, b))
                            .unwrap();
                        if lhs != rhs {
                            prod_over_sup = false;
                            cex.push(self.subset_witness("prod_over_sup", x, &m));
                        }
                    }
                    if sup_into_imp {
                        let lhs = self.imp(sup, x);
                        let rhs = m
                            .iter()
                            .map(|&e| self.imp(e, x))
                            .reduce(|a, b| self.meet(a, b))
                            .unwrap();
                        if lhs != rhs {
                            sup_into_imp = false;
                            cex.push(self.subset_witness("sup_into_imp", x, &m));
                        }
                    }
                    if inf_under_imp {
                        let lhs = self.imp(x, inf);
                        let rhs = m
                            .iter()
                            .map(|&e| self.imp(x, e))
                            .reduce(|a, b| self.meet(a, b))
                            .unwrap();
                        if lhs != rhs {
                            inf_under_imp = false;
                            cex.push(self.subset_witness("inf_under_imp", x, &m));
                        }
                    }
                }
            }
        }

        DistributionReport {
            max_subset_checked: max,
            prod_over_sup,
            sup_into_imp,
            inf_under_imp,
            counterexamples: cex,
        }
    }

    /// An MV-algebra whose product is idempotent, i.e. a Boolean algebra.
    pub fn is_boolean_algebra(&self) -> bool {
        self.classify().is_mv && self.elems().all(|x| self.prod(x, x) == x)
    }

    fn subset_witness(&self, law: &str, x: Elem, m: &[Elem]) -> LawWitness {
        let mut witness = vec![format!("x={}", self.label_string(x))];
        witness.push(format!(
            "M={{{}}}",
            m.iter().map(|&e| self.label_string(e)).join(", ")
        ));
        LawWitness { law: law.to_string(), witness }
    }

    fn first1(&self, ok: impl Fn(Elem) -> bool) -> Option<Vec<Elem>> {
        self.elems().find(|&x| !ok(x)).map(|x| vec![x])
    }

    fn first2(&self, ok: impl Fn(Elem, Elem) -> bool) -> Option<Vec<Elem>> {
        for x in self.elems() {
            for y in self.elems() {
                if !ok(x, y) {
                    return Some(vec![x, y]);
                }
            }
        }
        None
    }

    fn first3(&self, ok: impl Fn(Elem, Elem, Elem) -> bool) -> Option<Vec<Elem>> {
        for x in self.elems() {
            for y in self.elems() {
                for z in self.elems() {
                    if !ok(x, y, z) {
                        return Some(vec![x, y, z]);
                    }
                }
            }
        }
        None
    }
}

/// Laws that do not gate `is_residuated()`; used to pick the right witness
/// when a custom construction is rejected.
const CLASSIFICATION_LAWS: [&str; 3] = ["divisibility", "prelinearity", "double_negation"];

fn chain_labels(k: usize) -> Vec<Rational> {
    (0..k).map(|i| Rational::new(i as i64, (k - 1) as i64)).collect()
}

fn table(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect()
}

/// Parses `"1/2"`, `"0.75"` or `"1"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::BadRational { input: text.into(), reason: "empty".into() });
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['-', '+']);
        let int: i64 = if int_digits.is_empty() {
            0
        } else {
            int_digits.parse().map_err(|e| Error::BadRational {
                input: text.into(),
                reason: format!("{e}"),
            })?
        };
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::BadRational {
                input: text.into(),
                reason: "malformed decimal".into(),
            });
        }
        let frac: i64 = frac_part.parse().map_err(|e| Error::BadRational {
            input: text.into(),
            reason: format!("{e}"),
        })?;
        let denom = 10i64.checked_pow(frac_part.len() as u32).ok_or_else(|| Error::BadRational {
            input: text.into(),
            reason: "too many decimal digits".into(),
        })?;
        let magnitude = Rational::from(int) + Rational::new(frac, denom);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    Rational::from_str(s).map_err(|e| Error::BadRational { input: text.into(), reason: format!("{e}") })
}
