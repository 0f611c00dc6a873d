//! On-disk formats: JSON descriptions of lattices, relations and operator
//! tables, plus formal contexts as either JSON or CSV.
//!
//! A lattice file carries labels, a kind, and (for `custom`) the four
//! operation tables.  Chain kinds regenerate their tables from the label
//! count and cross-check anything the file supplies.  Relation-shaped files
//! (relations, frames, contexts) name their lattice inline, by path relative
//! to the file, or not at all — callers may inject one loaded separately,
//! and an injected lattice always wins.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fca::FuzzyContext;
use crate::lattice::{parse_rational, LatticeKind, LatticeSpec, LatticeTables, Rational};
use crate::operator::{OperatorTable, Provenance};
use crate::relation::{FuzzyRelation, IndexSet};
use crate::vector::FuzzyVector;

/// The four operation tables as they appear on disk.  `impl` is a keyword,
/// hence the renamed field.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TablesFile {
    pub join: Vec<Vec<usize>>,
    pub meet: Vec<Vec<usize>>,
    pub prod: Vec<Vec<usize>>,
    #[serde(rename = "impl")]
    pub imp: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeFile {
    pub labels: Vec<String>,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tables: Option<TablesFile>,
}

/// Either the path of a lattice file (resolved against the referring file's
/// directory) or a whole lattice description inline.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LatticeRef {
    Path(String),
    Inline(LatticeFile),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EntryFile {
    pub i: String,
    pub j: String,
    pub v: String,
}

/// A fuzzy relation: named rows and columns plus sparse entries.  Cells not
/// listed are the lattice bottom.  `codomain` defaults to `domain`, which is
/// the usual shape for frames and equivalences.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeRef>,
    pub domain: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codomain: Option<Vec<String>>,
    pub entries: Vec<EntryFile>,
}

/// An operator table: one output vector (as labels) per input vector, listed
/// in canonical rank order of the inputs.  `provenance` is informational and
/// ignored on load.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OperatorFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeRef>,
    pub in_index: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out_index: Option<Vec<String>>,
    pub rows: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

fn format_err(path: &Path, message: impl Into<String>) -> Error {
    Error::FileFormat { file: path.display().to_string(), message: message.into() }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| format_err(path, e.to_string()))?;
    serde_json::from_str(&text).map_err(|e| format_err(path, e.to_string()))
}

fn parse_labels(file: &LatticeFile, origin: &Path) -> Result<Vec<Rational>> {
    file.labels
        .iter()
        .map(|l| {
            parse_rational(l)
                .map_err(|e| format_err(origin, format!("label `{l}`: {e}")))
        })
        .collect()
}

fn to_tables(t: &TablesFile) -> LatticeTables {
    LatticeTables { join: t.join.clone(), meet: t.meet.clone(), prod: t.prod.clone(), imp: t.imp.clone() }
}

fn tables_to_file(t: &LatticeTables) -> TablesFile {
    TablesFile { join: t.join.clone(), meet: t.meet.clone(), prod: t.prod.clone(), imp: t.imp.clone() }
}

fn check_chain(
    spec: &Arc<LatticeSpec>,
    file: &LatticeFile,
    labels: &[Rational],
    origin: &Path,
) -> Result<()> {
    if labels != spec.labels() {
        return Err(format_err(
            origin,
            format!(
                "labels do not match the {}-element {} chain (expected {:?})",
                spec.n(),
                file.kind,
                spec.labels().iter().map(ToString::to_string).collect::<Vec<_>>()
            ),
        ));
    }
    if let Some(tables) = &file.tables {
        if to_tables(tables) != *spec.tables() {
            return Err(format_err(
                origin,
                format!("tables do not match the {}-element {} chain", spec.n(), file.kind),
            ));
        }
    }
    Ok(())
}

fn build_lattice(file: &LatticeFile, origin: &Path) -> Result<Arc<LatticeSpec>> {
    let labels = parse_labels(file, origin)?;
    match file.kind.as_str() {
        "lukasiewicz" => {
            let spec = LatticeSpec::lukasiewicz_chain(labels.len())
                .map_err(|e| format_err(origin, e.to_string()))?;
            check_chain(&spec, file, &labels, origin)?;
            Ok(spec)
        }
        "goedel" => {
            let spec = LatticeSpec::goedel_chain(labels.len())
                .map_err(|e| format_err(origin, e.to_string()))?;
            check_chain(&spec, file, &labels, origin)?;
            Ok(spec)
        }
        "custom" => {
            let tables = file
                .tables
                .as_ref()
                .ok_or_else(|| format_err(origin, "custom lattices must carry tables"))?;
            LatticeSpec::custom(labels, to_tables(tables)).map_err(|e| match e {
                Error::LawViolation { .. } => e,
                other => format_err(origin, other.to_string()),
            })
        }
        other => Err(format_err(origin, format!("unknown lattice kind `{other}`"))),
    }
}

/// Loads a lattice and insists it really is a residuated lattice: custom
/// tables are validated, chain kinds are regenerated from the label count and
/// cross-checked against whatever the file supplies.
pub fn load_lattice(path: &Path) -> Result<Arc<LatticeSpec>> {
    let file: LatticeFile = read_json(path)?;
    build_lattice(&file, path)
}

/// Loads a lattice without judging its laws, so a validation command can
/// report exactly which law a broken table breaks.  Supplied tables take
/// precedence over the declared kind; without tables the kind must be a
/// chain, which is valid by construction.
pub fn load_lattice_unvalidated(path: &Path) -> Result<Arc<LatticeSpec>> {
    let file: LatticeFile = read_json(path)?;
    let labels = parse_labels(&file, path)?;
    match &file.tables {
        Some(tables) => LatticeSpec::unvalidated(labels, to_tables(tables))
            .map_err(|e| format_err(path, e.to_string())),
        None => build_lattice(&file, path),
    }
}

fn resolve_lattice(
    named: Option<&LatticeRef>,
    origin: &Path,
    injected: Option<Arc<LatticeSpec>>,
) -> Result<Arc<LatticeSpec>> {
    if let Some(spec) = injected {
        return Ok(spec);
    }
    match named {
        None => Err(format_err(
            origin,
            "no lattice: name one in the file (inline or by path) or supply one separately",
        )),
        Some(LatticeRef::Inline(file)) => build_lattice(file, origin),
        Some(LatticeRef::Path(p)) => {
            let resolved = match origin.parent() {
                Some(dir) => dir.join(p),
                None => PathBuf::from(p),
            };
            load_lattice(&resolved)
        }
    }
}

fn index_set(names: &[String], origin: &Path) -> Result<Arc<IndexSet>> {
    IndexSet::new(names.iter().cloned()).map_err(|e| format_err(origin, e.to_string()))
}

fn relation_from_file(
    file: &RelationFile,
    origin: &Path,
    injected: Option<Arc<LatticeSpec>>,
) -> Result<FuzzyRelation> {
    let lattice = resolve_lattice(file.lattice.as_ref(), origin, injected)?;
    let domain = index_set(&file.domain, origin)?;
    let codomain = match &file.codomain {
        Some(names) => index_set(names, origin)?,
        None => domain.clone(),
    };
    let entries: Vec<(String, String, String)> = file
        .entries
        .iter()
        .map(|e| (e.i.clone(), e.j.clone(), e.v.clone()))
        .collect();
    FuzzyRelation::new(lattice, domain, codomain, &entries)
        .map_err(|e| format_err(origin, e.to_string()))
}

pub fn load_relation(path: &Path, lattice: Option<Arc<LatticeSpec>>) -> Result<FuzzyRelation> {
    let file: RelationFile = read_json(path)?;
    relation_from_file(&file, path, lattice)
}

/// Loads a context from JSON (relation-shaped) or CSV.  A CSV context has
/// attribute names in the header row and object names in the first column;
/// the top-left corner cell is ignored.  CSV carries no lattice, so one must
/// be injected.
pub fn load_context(path: &Path, lattice: Option<Arc<LatticeSpec>>) -> Result<FuzzyContext> {
    let is_csv = path
        .extension()
        .map(|e| e.eq_ignore_ascii_case("csv"))
        .unwrap_or(false);
    if is_csv {
        let lattice = lattice.ok_or_else(|| {
            format_err(path, "csv contexts carry no lattice: supply one separately")
        })?;
        load_context_csv(path, lattice)
    } else {
        let file: RelationFile = read_json(path)?;
        Ok(FuzzyContext::new(relation_from_file(&file, path, lattice)?))
    }
}

fn load_context_csv(path: &Path, lattice: Arc<LatticeSpec>) -> Result<FuzzyContext> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| format_err(path, e.to_string()))?;
    let mut rows: Vec<Vec<String>> = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| format_err(path, e.to_string()))?;
        rows.push(record.iter().map(str::to_owned).collect());
    }
    let Some((header, body)) = rows.split_first() else {
        return Err(format_err(path, "empty file"));
    };
    if header.len() < 2 {
        return Err(format_err(path, "header row names no attributes"));
    }
    let attributes = &header[1..];
    if body.is_empty() {
        return Err(format_err(path, "no object rows"));
    }
    let mut objects = Vec::new();
    let mut entries = Vec::new();
    for row in body {
        let Some((object, cells)) = row.split_first() else {
            return Err(format_err(path, "blank row"));
        };
        if cells.len() != attributes.len() {
            return Err(format_err(
                path,
                format!(
                    "row `{object}` has {} cells, expected {}",
                    cells.len(),
                    attributes.len()
                ),
            ));
        }
        objects.push(object.clone());
        for (attribute, cell) in attributes.iter().zip(cells) {
            entries.push((object.clone(), attribute.clone(), cell.clone()));
        }
    }
    let domain = index_set(&objects, path)?;
    let codomain = index_set(attributes, path)?;
    let incidence = FuzzyRelation::new(lattice, domain, codomain, &entries)
        .map_err(|e| format_err(path, e.to_string()))?;
    Ok(FuzzyContext::new(incidence))
}

pub fn load_operator(path: &Path, lattice: Option<Arc<LatticeSpec>>) -> Result<OperatorTable> {
    let file: OperatorFile = read_json(path)?;
    let lattice = resolve_lattice(file.lattice.as_ref(), path, lattice)?;
    let in_index = index_set(&file.in_index, path)?;
    let out_index = match &file.out_index {
        Some(names) => index_set(names, path)?,
        None => in_index.clone(),
    };
    let rows = file
        .rows
        .iter()
        .map(|labels| {
            let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
            FuzzyVector::from_labels(lattice.clone(), out_index.clone(), &labels)
                .map_err(|e| format_err(path, e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    OperatorTable::from_rows(lattice, in_index, out_index, rows, Provenance::Explicit)
        .map_err(|e| format_err(path, e.to_string()))
}

pub fn lattice_to_file(spec: &LatticeSpec) -> LatticeFile {
    LatticeFile {
        labels: spec.labels().iter().map(ToString::to_string).collect(),
        kind: spec.kind().to_string(),
        tables: match spec.kind() {
            LatticeKind::Custom => Some(tables_to_file(spec.tables())),
            _ => None,
        },
    }
}

/// Serializes a relation; entries equal to the lattice bottom are left out.
pub fn relation_to_file(r: &FuzzyRelation, embed_lattice: bool) -> RelationFile {
    let lattice = r.lattice();
    let mut entries = Vec::new();
    for i in 0..r.domain().len() {
        for j in 0..r.codomain().len() {
            let v = r.get(i, j);
            if v != lattice.bot() {
                entries.push(EntryFile {
                    i: r.domain().name(i).to_owned(),
                    j: r.codomain().name(j).to_owned(),
                    v: lattice.label_string(v),
                });
            }
        }
    }
    RelationFile {
        lattice: embed_lattice.then(|| LatticeRef::Inline(lattice_to_file(lattice))),
        domain: r.domain().names().to_vec(),
        codomain: Some(r.codomain().names().to_vec()),
        entries,
    }
}

pub fn operator_to_file(op: &OperatorTable, embed_lattice: bool) -> OperatorFile {
    let provenance = match op.provenance() {
        Provenance::Explicit => "explicit".to_owned(),
        Provenance::Induced { kind, .. } => format!("induced_{kind}"),
    };
    OperatorFile {
        lattice: embed_lattice.then(|| LatticeRef::Inline(lattice_to_file(op.lattice()))),
        in_index: op.in_index().names().to_vec(),
        out_index: Some(op.out_index().names().to_vec()),
        rows: op.rows().iter().map(FuzzyVector::label_strings).collect(),
        provenance: Some(provenance),
    }
}
