//! The three worked tables, regenerated from enumeration.
//!
//! 1. `mex_{2,3}` of each partition of 6 with the resulting `p_{2,3}(6)` and `p̄_{2,3}(6)`.
//! 2. `p_{3,1}, p_{3,2}, p̄_{3,3}, p̄_{1,2}` for `n ≤ 8` beside the partitions
//!    with rank ≥ 2 and crank ≥ 2.
//! 3. `p_{3,r+2}, p_{1,r+1}` for `r = 0..4` and `spt(n)`, `n ≤ 5`.
//!
//! CSV is the stable format; the text layout is for people.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mexfun::{p_mex_enum, pbar_mex_enum};
use crate::partitions::{enumerate_partitions, Partition};
use crate::statistics::{crank, mex, rank, spt_direct, MexParams};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let err = |e: csv::Error| Error::Usage(e.to_string());
        w.write_record(&self.columns).map_err(err)?;
        for row in &self.rows {
            w.write_record(row).map_err(err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Usage(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Usage(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.title);
        let _ = writeln!(out, "{}", line(&self.columns));
        let _ = writeln!(
            out,
            "{}",
            widths
                .iter()
                .map(|&w| "-".repeat(w))
                .collect::<Vec<_>>()
                .join("  ")
        );
        for row in &self.rows {
            let _ = writeln!(out, "{}", line(row));
        }
        out
    }
}

fn params(step: u64, base: u64) -> MexParams {
    MexParams::new(step, base).expect("table parameters are positive")
}

fn join(parts: impl Iterator<Item = Partition>) -> String {
    parts.map(|p| p.to_string()).collect::<Vec<_>>().join("; ")
}

fn flag(b: bool) -> String {
    if b { "1" } else { "0" }.to_string()
}

/// `mex_{2,3}(π)` for every partition of 6.
pub fn table1() -> Result<Table> {
    let pm = params(2, 3);
    let mut rows = Vec::new();
    let (mut p, mut pbar) = (0u32, 0u32);
    for pi in enumerate_partitions(6) {
        let m = mex(&pi, pm);
        let unbarred = pm.is_unbarred(m);
        if unbarred {
            p += 1;
        } else {
            pbar += 1;
        }
        rows.push(vec![
            pi.to_string(),
            m.to_string(),
            flag(unbarred),
            flag(!unbarred),
        ]);
    }
    rows.push(vec![
        "total".into(),
        String::new(),
        p.to_string(),
        pbar.to_string(),
    ]);
    Ok(Table {
        title: "mex_{2,3} of the partitions of 6".into(),
        columns: ["partition", "mex_2_3", "p_2_3", "pbar_2_3"]
            .map(String::from)
            .to_vec(),
        rows,
    })
}

/// `p_{3,1}, p_{3,2}, p̄_{3,3}, p̄_{1,2}` and the rank ≥ 2 / crank ≥ 2 partitions, `1 ≤ n ≤ 8`.
pub fn table2() -> Result<Table> {
    let mut rows = Vec::new();
    for n in 1..=8i64 {
        let parts = enumerate_partitions(n as u32);
        rows.push(vec![
            n.to_string(),
            p_mex_enum(params(3, 1), n)?.to_string(),
            p_mex_enum(params(3, 2), n)?.to_string(),
            pbar_mex_enum(params(3, 3), n)?.to_string(),
            pbar_mex_enum(params(1, 2), n)?.to_string(),
            join(parts.iter().filter(|p| rank(p) >= 2).cloned()),
            join(parts.iter().filter(|p| crank(p) >= 2).cloned()),
        ]);
    }
    Ok(Table {
        title: "mex counts beside partitions with rank >= 2 and crank >= 2".into(),
        columns: [
            "n",
            "p_3_1",
            "p_3_2",
            "pbar_3_3",
            "pbar_1_2",
            "rank_ge_2",
            "crank_ge_2",
        ]
        .map(String::from)
        .to_vec(),
        rows,
    })
}

/// `p_{3,r+2}(n), p_{1,r+1}(n)` for `r = 0..=4` and `spt(n)`, `1 ≤ n ≤ 5`.
pub fn table3() -> Result<Table> {
    let mut columns = vec!["n".to_string()];
    for r in 0..5 {
        columns.push(format!("p_3_{}", r + 2));
        columns.push(format!("p_1_{}", r + 1));
    }
    columns.push("spt".into());
    let mut rows = Vec::new();
    for n in 1..=5i64 {
        let mut row = vec![n.to_string()];
        for r in 0..5u64 {
            row.push(p_mex_enum(params(3, r + 2), n)?.to_string());
            row.push(p_mex_enum(params(1, r + 1), n)?.to_string());
        }
        row.push(spt_direct(n as usize)?.to_string());
        rows.push(row);
    }
    Ok(Table {
        title: "p_{3,r+2}(n) and p_{1,r+1}(n) beside spt(n)".into(),
        columns,
        rows,
    })
}

pub fn table(id: u8) -> Result<Table> {
    match id {
        1 => table1(),
        2 => table2(),
        3 => table3(),
        _ => Err(Error::Usage(format!("no table {id}; expected 1, 2 or 3"))),
    }
}

/// Column of a table as integers, for spot checks.
pub fn integer_column(t: &Table, name: &str) -> Option<Vec<BigInt>> {
    let i = t.columns.iter().position(|c| c == name)?;
    t.rows.iter().map(|r| r[i].parse().ok()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_totals() {
        let t = table1().unwrap();
        assert_eq!(t.rows.len(), 12);
        assert_eq!(t.rows.last().unwrap(), &["total", "", "8", "3"]);
    }

    #[test]
    fn table3_spt_column() {
        let spt = integer_column(&table3().unwrap(), "spt").unwrap();
        let expected: Vec<BigInt> = [1, 3, 5, 10, 14].map(BigInt::from).to_vec();
        assert_eq!(spt, expected);
    }

    #[test]
    fn unknown_table() {
        assert!(matches!(table(4), Err(Error::Usage(_))));
    }
}
