//! JSON and CSV serialization of class lists and character tables.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::characters::CharTable;
use crate::conjugacy::ConjClass;
use crate::error::{Error, Result};
use crate::field::FieldTowerCtx;
use crate::group::format_element;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub p: u32,
    pub k: u32,
    pub q: u32,
    /// Coefficients of the polynomial defining `F_q` over `F_p`, constant first.
    pub f: Vec<u32>,
    /// Coefficients of the cubic defining `F_{q^3}` over `F_q`, as `F_q` indices.
    pub g: Vec<u32>,
    pub eta: u32,
    /// Convention for the additive character.
    pub theta: String,
}

impl Metadata {
    pub fn new(ctx: &FieldTowerCtx) -> Self {
        Metadata {
            p: ctx.p(),
            k: ctx.k(),
            q: ctx.q(),
            f: ctx.f().to_vec(),
            g: ctx.g().iter().map(|c| c.index()).collect(),
            eta: ctx.eta().index(),
            theta: "zeta_p^Tr(b)".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub index: usize,
    pub family: String,
    pub rep: String,
    pub size: u64,
}

impl ClassRecord {
    pub fn new(ctx: &FieldTowerCtx, c: &ConjClass) -> Self {
        ClassRecord {
            index: c.index,
            family: c.family.name().into(),
            rep: format_element(ctx, &c.rep),
            size: c.size,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRecord {
    pub index: usize,
    pub family: String,
    pub label: String,
    pub degree: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassList {
    pub schema: u32,
    pub metadata: Metadata,
    pub classes: Vec<ClassRecord>,
}

impl ClassList {
    pub fn new(ctx: &FieldTowerCtx, classes: &[ConjClass]) -> Self {
        ClassList {
            schema: SCHEMA_VERSION,
            metadata: Metadata::new(ctx),
            classes: classes.iter().map(|c| ClassRecord::new(ctx, c)).collect(),
        }
    }
}

/// A character table; `values[i][j]` holds the coefficients of `χ_i(C_j)`
/// on `1, ζ_p, …, ζ_p^{p-2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableExport {
    pub schema: u32,
    pub metadata: Metadata,
    pub classes: Vec<ClassRecord>,
    pub characters: Vec<CharacterRecord>,
    pub values: Vec<Vec<Vec<i32>>>,
}

impl TableExport {
    pub fn new(ctx: &FieldTowerCtx, table: &CharTable) -> Self {
        let characters = table
            .labels()
            .iter()
            .enumerate()
            .map(|(index, l)| CharacterRecord {
                index,
                family: l.family().name().into(),
                label: l.describe(ctx),
                degree: l.degree(ctx),
            })
            .collect();
        let values = (0..table.n_chars())
            .map(|i| (0..table.n_classes()).map(|j| table.coeffs(i, j).to_vec()).collect())
            .collect();
        TableExport {
            schema: SCHEMA_VERSION,
            metadata: Metadata::new(ctx),
            classes: table.classes().iter().map(|c| ClassRecord::new(ctx, c)).collect(),
            characters,
            values,
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let t: TableExport = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if t.schema != SCHEMA_VERSION {
            return Err(Error::Parse(format!("unsupported schema {}", t.schema)));
        }
        Ok(t)
    }
}

pub fn write_json<T: Serialize, W: Write>(value: &T, out: W) -> Result<()> {
    serde_json::to_writer(out, value).map_err(|e| Error::Output(e.to_string()))
}

fn coefficient_tuple(c: &[i32]) -> String {
    let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// One row per character: label, degree, then one value per class as its
/// coefficient tuple.
pub fn write_table_csv<W: Write>(ctx: &FieldTowerCtx, table: &CharTable, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Output(e.to_string());
    let mut header = vec!["character".to_string(), "degree".to_string()];
    header.extend(table.classes().iter().map(|c| format_element(ctx, &c.rep)));
    w.write_record(&header).map_err(io)?;
    for (i, l) in table.labels().iter().enumerate() {
        let mut row = vec![l.describe(ctx), l.degree(ctx).to_string()];
        row.extend((0..table.n_classes()).map(|j| coefficient_tuple(table.coeffs(i, j))));
        w.write_record(&row).map_err(io)?;
    }
    w.flush().map_err(|e| Error::Output(e.to_string()))
}

pub fn write_classes_csv<W: Write>(ctx: &FieldTowerCtx, classes: &[ConjClass], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Output(e.to_string());
    for c in classes {
        w.serialize(ClassRecord::new(ctx, c)).map_err(io)?;
    }
    w.flush().map_err(|e| Error::Output(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjugacy::ClassCensus;
    use crate::field::build_tower;

    #[test]
    fn json_roundtrip() {
        let ctx = build_tower(3, 1, None, None).unwrap();
        let census = ClassCensus::new(&ctx);
        let table = CharTable::build(&ctx, &census).unwrap();
        let export = TableExport::new(&ctx, &table);
        let mut buf = Vec::new();
        write_json(&export, &mut buf).unwrap();
        let back = TableExport::from_json(std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(back, export);
        assert_eq!(back.values.len(), 609);
        assert_eq!(back.metadata.g, vec![1, 2, 0, 1]);
        assert!(TableExport::from_json("{\"schema\":2}").is_err());
    }

    #[test]
    fn csv_shape() {
        let ctx = build_tower(3, 1, None, None).unwrap();
        let census = ClassCensus::new(&ctx);
        let mut buf = Vec::new();
        write_classes_csv(&ctx, census.classes(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 610);
        assert!(text.starts_with("index,family,rep,size\n0,"));
    }
}
