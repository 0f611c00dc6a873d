//! Builds a small fuzzy relation and applies one of its induced operators.

use galois_kit::operator::{apply_induced, InducedKind};
use galois_kit::{FuzzyRelation, FuzzyVector, IndexSet, LatticeSpec, Result};

fn main() -> Result<()> {
    let l = LatticeSpec::lukasiewicz_chain(3)?;
    let i = IndexSet::new(["i1", "i2"])?;
    let j = IndexSet::new(["j1", "j2"])?;
    let entries: Vec<(String, String, String)> = vec![
        ("i1".into(), "j1".into(), "1".into()),
        ("i1".into(), "j2".into(), "1/2".into()),
        ("i2".into(), "j2".into(), "1".into()),
    ];
    let r = FuzzyRelation::new(l.clone(), i.clone(), j, &entries)?;

    let x = FuzzyVector::from_labels(l, i, &["1", "1/2"])?;
    let y = apply_induced(InducedKind::Phi, &r, &x)?;
    println!("phi({}) = {}", x.label_list(), y.label_list());
    assert_eq!(y.label_strings(), ["1", "1/2"]);
    Ok(())
}
