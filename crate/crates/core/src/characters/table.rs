use rayon::prelude::*;

use super::{list_irreducibles, value_at_rep, CharLabel};
use crate::conjugacy::{ClassCensus, ConjClass};
use crate::error::{Error, Result};
use crate::field::FieldTowerCtx;
use crate::CycInt;

/// Largest number of stored coefficients (`#chars · #classes · (p - 1)`).
pub const TABLE_CELL_CAP: u64 = 250_000_000;

/// Dense character table: row `i` is `labels[i]`, column `j` is `classes[j]`,
/// each cell the `p - 1` canonical coefficients of the value.
#[derive(Debug, Clone)]
pub struct CharTable {
    p: u32,
    labels: Vec<CharLabel>,
    classes: Vec<ConjClass>,
    cells: Vec<i32>,
}

impl CharTable {
    pub fn build(ctx: &FieldTowerCtx, census: &ClassCensus) -> Result<Self> {
        let labels = list_irreducibles(ctx);
        Self::build_rows(ctx, census, labels)
    }

    /// The table restricted to the given rows.
    pub fn build_rows(ctx: &FieldTowerCtx, census: &ClassCensus, labels: Vec<CharLabel>) -> Result<Self> {
        Self::build_sub(ctx, labels, census.classes().to_vec())
    }

    /// The table restricted to the given rows and columns.
    pub fn build_sub(ctx: &FieldTowerCtx, labels: Vec<CharLabel>, classes: Vec<ConjClass>) -> Result<Self> {
        let width = ctx.p() as usize - 1;
        let size = labels.len() as u64 * classes.len() as u64 * width as u64;
        if size > TABLE_CELL_CAP {
            return Err(Error::TooLarge {
                what: "character table cells",
                size,
                cap: TABLE_CELL_CAP,
            });
        }
        let rows: Vec<Vec<i32>> = labels
            .par_iter()
            .map(|l| {
                let mut row = Vec::with_capacity(classes.len() * width);
                for c in &classes {
                    let v = value_at_rep(ctx, l, c.family, &c.rep);
                    for &x in v.coeffs() {
                        row.push(i32::try_from(x).map_err(|_| Error::IntegerOverflow)?);
                    }
                }
                Ok(row)
            })
            .collect::<Result<_>>()?;
        Ok(CharTable {
            p: ctx.p(),
            labels,
            classes,
            cells: rows.concat(),
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn labels(&self) -> &[CharLabel] {
        &self.labels
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn n_chars(&self) -> usize {
        self.labels.len()
    }

    pub fn n_classes(&self) -> usize {
        self.classes.len()
    }

    /// Canonical coefficients of cell `(i, j)`.
    #[inline]
    pub fn coeffs(&self, i: usize, j: usize) -> &[i32] {
        let w = self.p as usize - 1;
        let start = (i * self.classes.len() + j) * w;
        &self.cells[start..start + w]
    }

    pub fn get(&self, i: usize, j: usize) -> CycInt {
        CycInt::from_coeffs(self.p, self.coeffs(i, j).iter().map(|&c| c as i64).collect()).unwrap()
    }

    /// Overwrites one cell; used to check that verification notices tampering.
    pub fn set(&mut self, i: usize, j: usize, v: &CycInt) -> Result<()> {
        let w = self.p as usize - 1;
        let start = (i * self.classes.len() + j) * w;
        for (slot, &c) in self.cells[start..start + w].iter_mut().zip(v.coeffs()) {
            *slot = i32::try_from(c).map_err(|_| Error::IntegerOverflow)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_tower;

    #[test]
    fn table_matches_pointwise_values() {
        let ctx = build_tower(3, 1, None, None).unwrap();
        let census = ClassCensus::new(&ctx);
        let table = CharTable::build(&ctx, &census).unwrap();
        assert_eq!((table.n_chars(), table.n_classes()), (609, 609));
        for i in (0..609).step_by(37) {
            for j in (0..609).step_by(13) {
                let v = super::super::char_value(&ctx, &table.labels()[i], &table.classes()[j]).unwrap();
                assert_eq!(table.get(i, j), v);
            }
        }
        let mut t = table.clone();
        t.set(3, 4, &CycInt::from_int(3, 7)).unwrap();
        assert_eq!(t.get(3, 4), CycInt::from_int(3, 7));
    }

    #[test]
    fn oversized_tables_are_refused() {
        let ctx = build_tower(7, 1, None, None).unwrap();
        let census = ClassCensus::new(&ctx);
        assert!(matches!(CharTable::build(&ctx, &census), Err(Error::TooLarge { .. })));
    }
}
