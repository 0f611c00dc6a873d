//! Formal concepts of a graded incidence relation between objects and
//! attributes.
//!
//! The two derivation operators are the order-reversing pair of the
//! incidence relation: an object vector `x` maps to the degree to which
//! every object of `x` has each attribute, and dually for attribute
//! vectors. Concepts are the pairs fixed by the round trip, ordered by
//! extent inclusion.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::lattice::LatticeSpec;
use crate::relation::{FuzzyRelation, IndexSet};
use crate::vector::{self, FuzzyVector};

/// An incidence relation read as objects × attributes.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyContext {
    incidence: FuzzyRelation,
}

impl FuzzyContext {
    pub fn new(incidence: FuzzyRelation) -> FuzzyContext {
        FuzzyContext { incidence }
    }

    pub fn lattice(&self) -> &Arc<LatticeSpec> {
        self.incidence.lattice()
    }

    pub fn objects(&self) -> &Arc<IndexSet> {
        self.incidence.domain()
    }

    pub fn attributes(&self) -> &Arc<IndexSet> {
        self.incidence.codomain()
    }

    pub fn incidence(&self) -> &FuzzyRelation {
        &self.incidence
    }

    /// `x ↦ ⋀_g (x(g) → I(g,m))`: how much every object of `x` has each
    /// attribute.
    pub fn derive_intent(&self, x: &FuzzyVector) -> Result<FuzzyVector> {
        if x.index() != self.objects() {
            return Err(Error::Shape("vector is not over the object index set".into()));
        }
        if !self.incidence.same_lattice(x.lattice()) {
            return Err(Error::LatticeMismatch);
        }
        let l = self.lattice();
        let values = (0..self.attributes().len())
            .map(|m| {
                (0..self.objects().len())
                    .fold(l.top(), |acc, g| l.meet(acc, l.imp(x.get(g), self.incidence.get(g, m))))
            })
            .collect();
        FuzzyVector::new(l.clone(), self.attributes().clone(), values)
    }

    /// `y ↦ ⋀_m (y(m) → I(g,m))`: how much each object has every attribute
    /// of `y`.
    pub fn derive_extent(&self, y: &FuzzyVector) -> Result<FuzzyVector> {
        if y.index() != self.attributes() {
            return Err(Error::Shape("vector is not over the attribute index set".into()));
        }
        if !self.incidence.same_lattice(y.lattice()) {
            return Err(Error::LatticeMismatch);
        }
        let l = self.lattice();
        let values = (0..self.objects().len())
            .map(|g| {
                (0..self.attributes().len())
                    .fold(l.top(), |acc, m| l.meet(acc, l.imp(y.get(m), self.incidence.get(g, m))))
            })
            .collect();
        FuzzyVector::new(l.clone(), self.objects().clone(), values)
    }
}

/// A pair fixed by both derivation round trips.
#[derive(Debug, Clone, PartialEq)]
pub struct Concept {
    pub extent: FuzzyVector,
    pub intent: FuzzyVector,
}

impl Concept {
    /// Concept order: extent inclusion (equivalently, reverse intent
    /// inclusion).
    pub fn leq(&self, other: &Concept) -> bool {
        self.extent.leq(&other.extent)
    }
}

impl Serialize for Concept {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Concept", 2)?;
        s.serialize_field("extent", &self.extent.label_strings())?;
        s.serialize_field("intent", &self.intent.label_strings())?;
        s.end()
    }
}

/// All concepts of a context, in extent rank order (least extent first, so
/// the bottom concept opens the list and the top one closes it).
#[derive(Debug, Clone, PartialEq)]
pub struct ConceptSet {
    objects: Arc<IndexSet>,
    attributes: Arc<IndexSet>,
    concepts: Vec<Concept>,
}

impl ConceptSet {
    pub fn concepts(&self) -> &[Concept] {
        &self.concepts
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    /// Hasse-diagram edges `(lower, upper)` as indices into
    /// [`concepts`](Self::concepts), sorted.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let n = self.concepts.len();
        let below = |a: usize, b: usize| a != b && self.concepts[a].leq(&self.concepts[b]);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if below(a, b) && !(0..n).any(|c| below(a, c) && below(c, b)) {
                    edges.push((a, b));
                }
            }
        }
        edges
    }

    /// Graphviz rendering of the concept lattice, one box per concept
    /// labelled `[object:degree, …] | [attribute:degree, …]`, cover edges
    /// pointing upward.
    pub fn to_dot(&self) -> String {
        fn escape(s: &str) -> String {
            s.replace('\\', "\\\\").replace('"', "\\\"")
        }
        fn graded(names: &IndexSet, v: &FuzzyVector) -> String {
            let pairs: Vec<String> = names
                .names()
                .iter()
                .zip(v.label_strings())
                .map(|(n, d)| format!("{n}:{d}"))
                .collect();
            format!("[{}]", pairs.join(", "))
        }

        let mut out = String::from("digraph concept_lattice {\n  rankdir=BT;\n  node [shape=box];\n");
        for (k, c) in self.concepts.iter().enumerate() {
            let label = format!(
                "{} | {}",
                graded(&self.objects, &c.extent),
                graded(&self.attributes, &c.intent)
            );
            out.push_str(&format!("  c{k} [label=\"{}\"];\n", escape(&label)));
        }
        for (a, b) in self.cover_edges() {
            out.push_str(&format!("  c{a} -> c{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl Serialize for ConceptSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ConceptSet", 3)?;
        s.serialize_field("objects", self.objects.names())?;
        s.serialize_field("attributes", self.attributes.names())?;
        s.serialize_field("concepts", &self.concepts)?;
        s.end()
    }
}

/// Enumerates every concept by closing each object vector, deduplicating
/// on the extent. The budget caps `|A|^|objects|`.
pub fn enumerate_concepts(ctx: &FuzzyContext, budget: usize) -> Result<ConceptSet> {
    let mut found: BTreeMap<usize, Concept> = BTreeMap::new();
    for x in vector::enumerate(ctx.lattice(), ctx.objects(), budget)? {
        let intent = ctx.derive_intent(&x)?;
        let extent = ctx.derive_extent(&intent)?;
        found.entry(extent.rank()).or_insert(Concept { extent, intent });
    }
    Ok(ConceptSet {
        objects: ctx.objects().clone(),
        attributes: ctx.attributes().clone(),
        concepts: found.into_values().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::{apply_induced, InducedKind, DEFAULT_BUDGET};

    fn one_point_half() -> FuzzyContext {
        let l = LatticeSpec::lukasiewicz_chain(3).unwrap();
        FuzzyContext::new(
            FuzzyRelation::new(
                l,
                IndexSet::new(["g"]).unwrap(),
                IndexSet::new(["m"]).unwrap(),
                &[("g".to_string(), "m".to_string(), "1/2".to_string())],
            )
            .unwrap(),
        )
    }

    fn crisp_identity_2x2() -> FuzzyContext {
        let l = LatticeSpec::lukasiewicz_chain(2).unwrap();
        let g = IndexSet::new(["g1", "g2"]).unwrap();
        let m = IndexSet::new(["m1", "m2"]).unwrap();
        let entries: Vec<(String, String, String)> = vec![
            ("g1".into(), "m1".into(), "1".into()),
            ("g2".into(), "m2".into(), "1".into()),
        ];
        FuzzyContext::new(FuzzyRelation::new(l, g, m, &entries).unwrap())
    }

    #[test]
    fn derivation_agrees_with_the_induced_operators() {
        let ctx = {
            let l = LatticeSpec::lukasiewicz_chain(3).unwrap();
            let g = IndexSet::new(["g1", "g2"]).unwrap();
            let m = IndexSet::new(["m1", "m2"]).unwrap();
            let entries: Vec<(String, String, String)> = vec![
                ("g1".into(), "m1".into(), "1/2".into()),
                ("g1".into(), "m2".into(), "1".into()),
                ("g2".into(), "m2".into(), "1/2".into()),
            ];
            FuzzyContext::new(FuzzyRelation::new(l, g, m, &entries).unwrap())
        };
        for x in vector::enumerate(ctx.lattice(), ctx.objects(), DEFAULT_BUDGET).unwrap() {
            assert_eq!(
                ctx.derive_intent(&x).unwrap(),
                apply_induced(InducedKind::Delta, ctx.incidence(), &x).unwrap()
            );
        }
        for y in vector::enumerate(ctx.lattice(), ctx.attributes(), DEFAULT_BUDGET).unwrap() {
            assert_eq!(
                ctx.derive_extent(&y).unwrap(),
                apply_induced(InducedKind::Epsilon, ctx.incidence(), &y).unwrap()
            );
        }
    }

    #[test]
    fn half_incidence_has_exactly_two_concepts() {
        let set = enumerate_concepts(&one_point_half(), DEFAULT_BUDGET).unwrap();
        assert_eq!(set.len(), 2);
        assert_eq!(set.concepts()[0].extent.label_list(), "[1/2]");
        assert_eq!(set.concepts()[0].intent.label_list(), "[1]");
        assert_eq!(set.concepts()[1].extent.label_list(), "[1]");
        assert_eq!(set.concepts()[1].intent.label_list(), "[1/2]");
        assert_eq!(set.cover_edges(), vec![(0, 1)]);
    }

    #[test]
    fn crisp_identity_context_is_a_diamond() {
        let set = enumerate_concepts(&crisp_identity_2x2(), DEFAULT_BUDGET).unwrap();
        assert_eq!(set.len(), 4);
        let extents: Vec<String> =
            set.concepts().iter().map(|c| c.extent.label_list()).collect();
        assert_eq!(extents, ["[0,0]", "[0,1]", "[1,0]", "[1,1]"]);
        assert_eq!(set.cover_edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn every_concept_is_fixed_and_every_closure_is_listed() {
        let ctx = {
            let l = LatticeSpec::lukasiewicz_chain(3).unwrap();
            let g = IndexSet::new(["g1", "g2"]).unwrap();
            let m = IndexSet::new(["m1", "m2"]).unwrap();
            let entries: Vec<(String, String, String)> = vec![
                ("g1".into(), "m1".into(), "1/2".into()),
                ("g1".into(), "m2".into(), "1".into()),
                ("g2".into(), "m2".into(), "1/2".into()),
            ];
            FuzzyContext::new(FuzzyRelation::new(l, g, m, &entries).unwrap())
        };
        let set = enumerate_concepts(&ctx, DEFAULT_BUDGET).unwrap();
        let extent_ranks: Vec<usize> =
            set.concepts().iter().map(|c| c.extent.rank()).collect();
        for c in set.concepts() {
            assert_eq!(ctx.derive_intent(&c.extent).unwrap(), c.intent);
            assert_eq!(ctx.derive_extent(&c.intent).unwrap(), c.extent);
        }
        for x in vector::enumerate(ctx.lattice(), ctx.objects(), DEFAULT_BUDGET).unwrap() {
            let closed = ctx.derive_extent(&ctx.derive_intent(&x).unwrap()).unwrap();
            assert!(x.leq(&closed));
            assert!(extent_ranks.contains(&closed.rank()));
        }
    }

    #[test]
    fn classical_subset_oracle_matches_on_a_crisp_context() {
        // g1:{m1,m2}, g2:{m2}, g3:{m2,m3} — classical derivation over
        // bitmask subsets, computed without the lattice machinery.
        let incidence: [[bool; 3]; 3] =
            [[true, true, false], [false, true, false], [false, true, true]];
        let mut oracle: std::collections::BTreeSet<(u8, u8)> = Default::default();
        for objs in 0u8..8 {
            let mut attrs = 0u8;
            for m in 0..3 {
                if (0..3).all(|g| objs & (1 << g) == 0 || incidence[g][m]) {
                    attrs |= 1 << m;
                }
            }
            let mut closed = 0u8;
            for g in 0..3 {
                if (0..3).all(|m| attrs & (1 << m) == 0 || incidence[g][m]) {
                    closed |= 1 << g;
                }
            }
            oracle.insert((closed, attrs));
        }

        let l = LatticeSpec::lukasiewicz_chain(2).unwrap();
        let g = IndexSet::new(["g1", "g2", "g3"]).unwrap();
        let m = IndexSet::new(["m1", "m2", "m3"]).unwrap();
        let mut entries = Vec::new();
        for (gi, row) in incidence.iter().enumerate() {
            for (mi, &has) in row.iter().enumerate() {
                if has {
                    entries.push((format!("g{}", gi + 1), format!("m{}", mi + 1), "1".to_string()));
                }
            }
        }
        let ctx = FuzzyContext::new(FuzzyRelation::new(l, g, m, &entries).unwrap());
        let set = enumerate_concepts(&ctx, DEFAULT_BUDGET).unwrap();

        let as_masks: std::collections::BTreeSet<(u8, u8)> = set
            .concepts()
            .iter()
            .map(|c| {
                let pack = |v: &FuzzyVector| {
                    v.values().iter().enumerate().fold(0u8, |acc, (k, e)| acc | ((e.0 as u8) << k))
                };
                (pack(&c.extent), pack(&c.intent))
            })
            .collect();
        assert_eq!(oracle.len(), 4);
        assert_eq!(as_masks, oracle);
    }

    #[test]
    fn dot_output_is_stable() {
        let set = enumerate_concepts(&one_point_half(), DEFAULT_BUDGET).unwrap();
        let expected = "digraph concept_lattice {\n\
                        \x20 rankdir=BT;\n\
                        \x20 node [shape=box];\n\
                        \x20 c0 [label=\"[g:1/2] | [m:1]\"];\n\
                        \x20 c1 [label=\"[g:1] | [m:1/2]\"];\n\
                        \x20 c0 -> c1;\n\
                        }\n";
        assert_eq!(set.to_dot(), expected);
    }

    #[test]
    fn enumeration_respects_the_budget() {
        let l = LatticeSpec::lukasiewicz_chain(3).unwrap();
        let names: Vec<String> = (0..20).map(|k| format!("g{k}")).collect();
        let g = IndexSet::new(names).unwrap();
        let m = IndexSet::new(["m"]).unwrap();
        let ctx = FuzzyContext::new(FuzzyRelation::constant(l, g, m, crate::lattice::Elem(1)));
        assert!(matches!(
            enumerate_concepts(&ctx, DEFAULT_BUDGET),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
