use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// A Young tableau filled with `1..=n`, each entry exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(format!("row lengths: {e}")))?;
        let n = shape.weight();
        let mut seen = vec![false; n + 1];
        for &entry in rows.iter().flatten() {
            if entry == 0 || entry > n {
                return Err(Error::InvalidTableau(format!(
                    "entry {entry} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[entry], true) {
                return Err(Error::InvalidTableau(format!("entry {entry} repeated")));
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Columns read top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.shape.part(0))
            .map(|c| {
                self.rows
                    .iter()
                    .take_while(|row| row.len() > c)
                    .map(|row| row[c])
                    .collect()
            })
            .collect()
    }
}
