//! Compound datasets: the two built-in alkane sets, CSV import and export,
//! and per-compound index tables.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::alkane::{parse_alkane, AlkaneError};
use crate::format::format_sig;
use crate::graph::MolGraph;
use crate::indices::{compute_all, IndexError, IndexKind};
use crate::stats::{linear_fit, RegressionResult, Sample, StatsError};

const OCTANE_CSV: &str = include_str!("../data/octane.csv");
const ALKANES_CSV: &str = include_str!("../data/alkanes.csv");
const ALKANES_NOTES_CSV: &str = include_str!("../data/alkanes_notes.csv");
const ALKANES_FLAGS_CSV: &str = include_str!("../data/alkanes_index_flags.csv");
const OCTANE_PUBLISHED_CSV: &str = include_str!("../data/octane_published_indices.csv");
const ALKANES_PUBLISHED_CSV: &str = include_str!("../data/alkanes_published_indices.csv");
const REGRESSIONS_CSV: &str = include_str!("../data/published_regressions.csv");

/// Names accepted by [`load_builtin`].
pub const BUILTIN: [&str; 2] = ["octane", "alkanes"];

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("unknown built-in dataset `{0}` (expected one of: octane, alkanes)")]
    UnknownDataset(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("missing header row")]
    MissingHeader,
    #[error("header must start with `name,smiles`, found `{0}`")]
    BadHeader(String),
    #[error("line {line}: duplicate compound name `{name}` (first seen on line {first})")]
    DuplicateName { line: u64, name: String, first: u64 },
    #[error("line {line}, column `{column}`: malformed number `{value}`")]
    MalformedNumber {
        line: u64,
        column: String,
        value: String,
    },
    #[error("line {line}: formula for `{name}`: {source}")]
    Formula {
        line: u64,
        name: String,
        source: AlkaneError,
    },
    #[error("line {line}: empty compound name")]
    EmptyName { line: u64 },
    #[error("dataset `{dataset}` has no property `{property}`")]
    UnknownProperty { dataset: String, property: String },
    #[error("compound `{0}` not found")]
    UnknownCompound(String),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Stats(#[from] StatsError),
}

/// Measured property columns, kept in the units of the source tables.
///
/// `CP` (octane set) and `Cp` (alkane set) are distinct columns whose CSV
/// names differ only by case, so name lookup is case-sensitive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropertyKind {
    AcentFac,
    S,
    Hvap,
    Dhvap,
    CP,
    Bp,
    Mv,
    Mr,
    Hv,
    Ct,
    Cp,
    St,
    Mp,
    /// Any column of a user dataset that is not one of the known tags.
    Other(String),
}

impl PropertyKind {
    pub const KNOWN: [PropertyKind; 13] = [
        PropertyKind::AcentFac,
        PropertyKind::S,
        PropertyKind::Hvap,
        PropertyKind::Dhvap,
        PropertyKind::CP,
        PropertyKind::Bp,
        PropertyKind::Mv,
        PropertyKind::Mr,
        PropertyKind::Hv,
        PropertyKind::Ct,
        PropertyKind::Cp,
        PropertyKind::St,
        PropertyKind::Mp,
    ];

    pub fn name(&self) -> &str {
        match self {
            PropertyKind::AcentFac => "AcentFac",
            PropertyKind::S => "S",
            PropertyKind::Hvap => "HVAP",
            PropertyKind::Dhvap => "DHVAP",
            PropertyKind::CP => "CP",
            PropertyKind::Bp => "bp",
            PropertyKind::Mv => "mv",
            PropertyKind::Mr => "mr",
            PropertyKind::Hv => "hv",
            PropertyKind::Ct => "ct",
            PropertyKind::Cp => "cp",
            PropertyKind::St => "st",
            PropertyKind::Mp => "mp",
            PropertyKind::Other(name) => name,
        }
    }

    pub fn unit(&self) -> &str {
        match self {
            PropertyKind::AcentFac => "1",
            PropertyKind::S => "cal/(K·mol)",
            PropertyKind::Hvap => "kJ/mol",
            PropertyKind::Dhvap => "kcal/mol",
            PropertyKind::CP => "atm",
            PropertyKind::Bp | PropertyKind::Ct | PropertyKind::Mp => "°C",
            PropertyKind::Mv | PropertyKind::Mr => "cm³",
            PropertyKind::Hv => "kJ",
            PropertyKind::Cp => "atm",
            PropertyKind::St => "dyne/cm",
            PropertyKind::Other(_) => "",
        }
    }

    pub fn description(&self) -> &str {
        match self {
            PropertyKind::AcentFac => "acentric factor",
            PropertyKind::S => "entropy",
            PropertyKind::Hvap => "enthalpy of vaporization",
            PropertyKind::Dhvap => "standard enthalpy of vaporization",
            PropertyKind::CP => "column labelled heat capacity; values coincide with critical pressure",
            PropertyKind::Bp => "boiling point",
            PropertyKind::Mv => "molar volume at 20 °C",
            PropertyKind::Mr => "molar refraction at 20 °C",
            PropertyKind::Hv => "heat of vaporization at 25 °C",
            PropertyKind::Ct => "critical temperature",
            PropertyKind::Cp => "critical pressure",
            PropertyKind::St => "surface tension at 20 °C",
            PropertyKind::Mp => "melting point",
            PropertyKind::Other(_) => "user-supplied property",
        }
    }
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for PropertyKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for PropertyKind {
    type Err = std::convert::Infallible;

    /// Known tags match exactly; anything else becomes [`PropertyKind::Other`].
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        Ok(PropertyKind::KNOWN
            .into_iter()
            .find(|k| k.name() == s)
            .unwrap_or_else(|| PropertyKind::Other(s.to_string())))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompoundRecord {
    pub name: String,
    /// Carbon skeleton in the restricted SMILES dialect.
    pub formula: String,
    pub properties: BTreeMap<PropertyKind, f64>,
}

impl CompoundRecord {
    pub fn graph(&self) -> MolGraph {
        parse_alkane(&self.formula).expect("formulas are validated on load")
    }

    pub fn property(&self, kind: &PropertyKind) -> Option<f64> {
        self.properties.get(kind).copied()
    }
}

/// A curation remark attached to one record and field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProvenanceNote {
    /// 0-based position in [`Dataset::records`].
    pub record: usize,
    pub field: String,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Dataset {
    pub name: String,
    /// Property columns in file order.
    pub columns: Vec<PropertyKind>,
    pub records: Vec<CompoundRecord>,
    pub provenance_notes: Vec<ProvenanceNote>,
}

impl Dataset {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn record(&self, name: &str) -> Option<&CompoundRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.records.iter().position(|r| r.name == name)
    }

    /// Looks a column up by name, case-sensitively.
    pub fn column(&self, name: &str) -> Result<PropertyKind, DatasetError> {
        self.columns
            .iter()
            .find(|c| c.name() == name)
            .cloned()
            .ok_or_else(|| DatasetError::UnknownProperty {
                dataset: self.name.clone(),
                property: name.to_string(),
            })
    }

    pub fn property_count(&self, kind: &PropertyKind) -> usize {
        self.records.iter().filter(|r| r.properties.contains_key(kind)).count()
    }

    pub fn graphs(&self) -> Vec<MolGraph> {
        self.records.iter().map(CompoundRecord::graph).collect()
    }

    /// Names of records that carry at least one provenance note.
    pub fn flagged(&self) -> Vec<&str> {
        let mut rows: Vec<usize> = self.provenance_notes.iter().map(|n| n.record).collect();
        rows.sort_unstable();
        rows.dedup();
        rows.into_iter().map(|i| self.records[i].name.as_str()).collect()
    }
}

pub fn load_builtin(name: &str) -> Result<Dataset, DatasetError> {
    match name {
        "octane" => parse_csv(OCTANE_CSV, "octane"),
        "alkanes" => {
            let mut d = parse_csv(ALKANES_CSV, "alkanes")?;
            for note in read_rows(ALKANES_NOTES_CSV)? {
                let record = d
                    .position(&note[0])
                    .ok_or_else(|| DatasetError::UnknownCompound(note[0].clone()))?;
                d.provenance_notes.push(ProvenanceNote {
                    record,
                    field: note[1].clone(),
                    note: note[2].clone(),
                });
            }
            for flag in index_flags()? {
                let record = d
                    .position(&flag.name)
                    .ok_or_else(|| DatasetError::UnknownCompound(flag.name.clone()))?;
                d.provenance_notes.push(ProvenanceNote {
                    record,
                    field: "indices".to_string(),
                    note: flag.reason,
                });
            }
            d.provenance_notes.sort_by_key(|n| n.record);
            Ok(d)
        }
        other => Err(DatasetError::UnknownDataset(other.to_string())),
    }
}

/// Reads a dataset from a CSV file; the dataset takes the file stem as name.
pub fn load_csv(path: impl AsRef<Path>) -> Result<Dataset, DatasetError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| DatasetError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let name = path
        .file_stem()
        .map_or_else(|| "dataset".to_string(), |s| s.to_string_lossy().into_owned());
    parse_csv(&text, &name)
}

/// Parses `name,smiles,<property>...` CSV text. Empty cells are absent
/// values.
pub fn parse_csv(text: &str, dataset_name: &str) -> Result<Dataset, DatasetError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows = reader.records();

    let header = match rows.next() {
        Some(h) => h?,
        None => return Err(DatasetError::MissingHeader),
    };
    if header.len() < 2 || &header[0] != "name" || &header[1] != "smiles" {
        return Err(DatasetError::BadHeader(header.iter().collect::<Vec<_>>().join(",")));
    }
    let columns: Vec<PropertyKind> = header
        .iter()
        .skip(2)
        .map(|h| h.parse().expect("infallible"))
        .collect();

    let mut records = Vec::new();
    let mut seen: HashMap<String, u64> = HashMap::new();
    for row in rows {
        let row = row?;
        let line = row.position().map_or(0, |p| p.line());
        let name = row.get(0).unwrap_or("").to_string();
        if name.is_empty() {
            return Err(DatasetError::EmptyName { line });
        }
        if let Some(&first) = seen.get(&name) {
            return Err(DatasetError::DuplicateName { line, name, first });
        }
        seen.insert(name.clone(), line);

        let formula = row.get(1).unwrap_or("").to_string();
        parse_alkane(&formula).map_err(|source| DatasetError::Formula {
            line,
            name: name.clone(),
            source,
        })?;

        let mut properties = BTreeMap::new();
        for (col, kind) in columns.iter().enumerate() {
            let cell = row.get(col + 2).unwrap_or("");
            if cell.is_empty() {
                continue;
            }
            let value: f64 = cell
                .parse()
                .ok()
                .filter(|v: &f64| v.is_finite())
                .ok_or_else(|| DatasetError::MalformedNumber {
                    line,
                    column: kind.name().to_string(),
                    value: cell.to_string(),
                })?;
            properties.insert(kind.clone(), value);
        }
        records.push(CompoundRecord {
            name,
            formula,
            properties,
        });
    }

    Ok(Dataset {
        name: dataset_name.to_string(),
        columns,
        records,
        provenance_notes: Vec::new(),
    })
}

/// Serializes a dataset in the format read by [`parse_csv`]. Values are
/// written in shortest round-trip form, so reading the output back yields
/// an equal dataset (provenance notes aside).
pub fn write_csv(d: &Dataset) -> Result<String, DatasetError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["name".to_string(), "smiles".to_string()];
    header.extend(d.columns.iter().map(|c| c.name().to_string()));
    w.write_record(&header)?;
    for r in &d.records {
        let mut row = vec![r.name.clone(), r.formula.clone()];
        row.extend(
            d.columns
                .iter()
                .map(|c| r.property(c).map_or_else(String::new, |v| v.to_string())),
        );
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Computed index values, one row per compound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexTable {
    pub names: Vec<String>,
    pub kinds: Vec<IndexKind>,
    pub rows: Vec<Vec<f64>>,
}

impl IndexTable {
    pub fn column(&self, kind: IndexKind) -> Option<Vec<f64>> {
        let c = self.kinds.iter().position(|&k| k == kind)?;
        Some(self.rows.iter().map(|r| r[c]).collect())
    }

    pub fn to_csv(&self, precision: usize) -> Result<String, DatasetError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["name".to_string()];
        header.extend(self.kinds.iter().map(|k| k.name().to_string()));
        w.write_record(&header)?;
        for (name, row) in self.names.iter().zip(&self.rows) {
            let mut out = vec![name.clone()];
            out.extend(row.iter().map(|&v| format_sig(v, precision)));
            w.write_record(&out)?;
        }
        let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

pub fn index_table(d: &Dataset, kinds: &[IndexKind]) -> Result<IndexTable, DatasetError> {
    let rows = d
        .records
        .iter()
        .map(|r| Ok(compute_all(&r.graph(), kinds)?.iter().map(|v| v.value).collect()))
        .collect::<Result<Vec<Vec<f64>>, DatasetError>>()?;
    Ok(IndexTable {
        names: d.records.iter().map(|r| r.name.clone()).collect(),
        kinds: kinds.to_vec(),
        rows,
    })
}

/// Fits `property = m·index + c` over the compounds that have the property
/// (pairwise deletion of blanks).
pub fn regress(d: &Dataset, index: IndexKind, property: &PropertyKind) -> Result<RegressionResult, DatasetError> {
    let values = index_table(d, &[index])?.column(index).expect("requested column");
    regress_values(d, &values, property)
}

/// Like [`regress`] but with caller-supplied index values, one per record.
pub fn regress_values(
    d: &Dataset,
    index_values: &[f64],
    property: &PropertyKind,
) -> Result<RegressionResult, DatasetError> {
    if !d.columns.contains(property) {
        return Err(DatasetError::UnknownProperty {
            dataset: d.name.clone(),
            property: property.name().to_string(),
        });
    }
    let pairs: Vec<(f64, f64)> = d
        .records
        .iter()
        .zip(index_values)
        .filter_map(|(r, &x)| r.property(property).map(|y| (x, y)))
        .collect();
    Ok(linear_fit(&Sample::new(&pairs)?))
}

/// Index row as printed in the source tables.
#[derive(Debug, Clone, PartialEq)]
pub struct PublishedIndices {
    pub name: String,
    /// ND1 through ND6.
    pub values: [f64; 6],
}

/// A record whose published index row does not match its skeleton, with
/// the values recomputed from that skeleton.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexFlag {
    pub name: String,
    pub reason: String,
    pub recomputed: [f64; 6],
}

/// One regression line as printed in the source tables.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct PublishedRegression {
    pub dataset: String,
    pub index: IndexKind,
    pub property: String,
    pub n: usize,
    pub c: f64,
    pub m: f64,
    pub r: f64,
    pub se: f64,
    pub f: f64,
    pub sf: f64,
}

pub fn published_indices(dataset: &str) -> Result<Vec<PublishedIndices>, DatasetError> {
    let text = match dataset {
        "octane" => OCTANE_PUBLISHED_CSV,
        "alkanes" => ALKANES_PUBLISHED_CSV,
        other => return Err(DatasetError::UnknownDataset(other.to_string())),
    };
    read_rows(text)?
        .into_iter()
        .map(|row| {
            Ok(PublishedIndices {
                values: six(&row[1..], &row[0])?,
                name: row[0].clone(),
            })
        })
        .collect()
}

pub fn index_flags() -> Result<Vec<IndexFlag>, DatasetError> {
    read_rows(ALKANES_FLAGS_CSV)?
        .into_iter()
        .map(|row| {
            Ok(IndexFlag {
                recomputed: six(&row[2..], &row[0])?,
                name: row[0].clone(),
                reason: row[1].clone(),
            })
        })
        .collect()
}

pub fn published_regressions() -> Result<Vec<PublishedRegression>, DatasetError> {
    let mut reader = csv::Reader::from_reader(REGRESSIONS_CSV.as_bytes());
    Ok(reader.deserialize().collect::<Result<Vec<_>, _>>()?)
}

fn six(cells: &[String], name: &str) -> Result<[f64; 6], DatasetError> {
    let mut out = [0.0; 6];
    for (i, (slot, cell)) in out.iter_mut().zip(cells).enumerate() {
        *slot = cell.parse().map_err(|_| DatasetError::MalformedNumber {
            line: 0,
            column: format!("{}:{}", name, IndexKind::ND[i]),
            value: cell.clone(),
        })?;
    }
    Ok(out)
}

fn read_rows(text: &str) -> Result<Vec<Vec<String>>, DatasetError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows = reader
        .records()
        .map(|r| r.map(|r| r.iter().map(str::to_string).collect()))
        .collect::<Result<Vec<Vec<String>>, _>>()?;
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octane_builtin() {
        let d = load_builtin("octane").unwrap();
        assert_eq!(d.len(), 18);
        let first = &d.records[0];
        assert_eq!(first.name, "n-octane");
        assert_eq!(first.property(&PropertyKind::S), Some(111.67));
        assert_eq!(first.property(&PropertyKind::AcentFac), Some(0.397898));
        for c in &d.columns {
            assert_eq!(d.property_count(c), 18, "{c}");
        }
    }

    #[test]
    fn alkanes_builtin() {
        let d = load_builtin("alkanes").unwrap();
        assert_eq!(d.len(), 67);
        let butane = d.record("Butane").unwrap();
        assert_eq!(butane.property(&PropertyKind::Bp), Some(-0.05));
        assert_eq!(butane.property(&PropertyKind::Mp), Some(-138.35));
        assert_eq!(butane.property(&PropertyKind::Mv), None);
        assert_eq!(d.property_count(&PropertyKind::Mp), 52);
        assert_eq!(d.property_count(&PropertyKind::Bp), 67);
        assert!(d.flagged().contains(&"3,3-dimethyl pentane"));
    }

    #[test]
    fn unknown_builtin() {
        assert!(matches!(load_builtin("decane"), Err(DatasetError::UnknownDataset(_))));
    }

    #[test]
    fn small_user_file() {
        let d = parse_csv("name,smiles,bp\nbutane,CCCC,-0.5\nisobutane,CC(C)C,\n", "t").unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.records[1].property(&PropertyKind::Bp), None);
        assert_eq!(d.columns, vec![PropertyKind::Bp]);
    }

    #[test]
    fn csv_errors_carry_locations() {
        assert!(matches!(parse_csv("", "t"), Err(DatasetError::MissingHeader)));
        assert!(matches!(parse_csv("id,formula\n", "t"), Err(DatasetError::BadHeader(_))));
        assert!(matches!(
            parse_csv("name,smiles,bp\na,CC,1\nb,CCC,2\na,CCCC,3\n", "t"),
            Err(DatasetError::DuplicateName { line: 4, first: 2, .. })
        ));
        match parse_csv("name,smiles,bp,mp\na,CC,1,x1\n", "t") {
            Err(DatasetError::MalformedNumber { line, column, value }) => {
                assert_eq!((line, column.as_str(), value.as_str()), (2, "mp", "x1"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_csv("name,smiles\na,CC(\n", "t"),
            Err(DatasetError::Formula { line: 2, .. })
        ));
    }

    #[test]
    fn builtin_round_trips() {
        for name in BUILTIN {
            let d = load_builtin(name).unwrap();
            let back = parse_csv(&write_csv(&d).unwrap(), name).unwrap();
            assert_eq!(back.records, d.records);
            assert_eq!(back.columns, d.columns);
        }
    }

    #[test]
    fn index_table_values() {
        let d = parse_csv("name,smiles\nethane,CC\n", "t").unwrap();
        let t = index_table(&d, &[IndexKind::ND5]).unwrap();
        assert_eq!(t.rows, vec![vec![2.0]]);

        let d = load_builtin("alkanes").unwrap();
        let t = index_table(&d, &[IndexKind::ND3]).unwrap();
        let row = d.position("2,2,3,3-tetramethyl pentane").unwrap();
        assert_eq!(t.rows[row][0], 3122.0);
    }

    #[test]
    fn published_tables_load() {
        assert_eq!(published_indices("octane").unwrap().len(), 18);
        assert_eq!(published_indices("alkanes").unwrap().len(), 67);
        assert_eq!(index_flags().unwrap().len(), 7);
        let regs = published_regressions().unwrap();
        assert_eq!(regs.len(), 68);
        assert!(regs.iter().all(|r| r.dataset == "octane" || r.dataset == "alkanes"));
    }

    #[test]
    fn property_names_are_case_sensitive() {
        assert_eq!("CP".parse::<PropertyKind>().unwrap(), PropertyKind::CP);
        assert_eq!("cp".parse::<PropertyKind>().unwrap(), PropertyKind::Cp);
        assert_eq!(
            "logP".parse::<PropertyKind>().unwrap(),
            PropertyKind::Other("logP".into())
        );
    }
}
