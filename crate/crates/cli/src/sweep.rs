//! `(p, η)` sweeps of closed-form and oracle measures, written as CSV.

use std::io::Write;

use anyhow::Result;
use bineg_core::channels::{evaluate, ChannelConfig, ChannelKind, Formulas, Sidedness};
use bineg_core::measures::MeasureTriple;
use bineg_core::states::EwParams;
use bineg_core::Complex64;
use rayon::prelude::*;

use crate::format::sig12;

pub const CSV_HEADER: &str = "p,eta,C,N,N2,C_oracle,N_oracle,N2_oracle";

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub p: f64,
    pub eta: f64,
    pub closed: MeasureTriple,
    pub oracle: MeasureTriple,
}

impl SweepRow {
    pub fn csv_line(&self) -> String {
        let cols = [
            self.p,
            self.eta,
            self.closed.concurrence,
            self.closed.negativity,
            self.closed.binegativity,
            self.oracle.concurrence,
            self.oracle.negativity,
            self.oracle.binegativity,
        ];
        cols.iter().map(|&v| sig12(v)).collect::<Vec<_>>().join(",")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepGrid {
    pub p_values: Vec<f64>,
    pub eta_values: Vec<f64>,
    pub alpha: Complex64,
    pub kind: ChannelKind,
    pub sidedness: Sidedness,
    pub formulas: Formulas,
    /// Row-major in `(p, η)`.
    pub rows: Vec<SweepRow>,
}

/// `n` evenly spaced points on `[0, 1]`; a single point sits at 0.
pub fn unit_grid(n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => (0..n).map(|i| i as f64 / (n - 1) as f64).collect(),
    }
}

impl SweepGrid {
    /// Evaluates every cell in parallel; rows come back ordered by `(p, η)`.
    pub fn run(
        kind: ChannelKind,
        sidedness: Sidedness,
        alpha: Complex64,
        p_values: Vec<f64>,
        eta_values: Vec<f64>,
        formulas: Formulas,
    ) -> Result<Self> {
        let cells: Vec<(f64, f64)> = p_values
            .iter()
            .flat_map(|&p| eta_values.iter().map(move |&eta| (p, eta)))
            .collect();
        let rows = cells
            .par_iter()
            .map(|&(p, eta)| -> Result<SweepRow> {
                let ew = EwParams::new(p, alpha)?;
                let cfg = ChannelConfig::new(kind, sidedness, eta)?;
                let report = evaluate(&cfg, &ew, formulas)?;
                Ok(SweepRow {
                    p,
                    eta,
                    closed: report.measures,
                    oracle: report.oracle_measures,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SweepGrid {
            p_values,
            eta_values,
            alpha,
            kind,
            sidedness,
            formulas,
            rows,
        })
    }

    /// Largest `|closed − oracle|` over all rows and measures.
    pub fn max_disagreement(&self) -> f64 {
        self.rows
            .iter()
            .map(|r| r.closed.max_deviation(&r.oracle))
            .fold(0.0, f64::max)
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        out.write_all(CSV_HEADER.as_bytes())?;
        out.write_all(b"\n")?;
        for row in &self.rows {
            out.write_all(row.csv_line().as_bytes())?;
            out.write_all(b"\n")?;
        }
        out.flush()
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV is ASCII")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_are_ordered_and_counted() {
        let grid = SweepGrid::run(
            ChannelKind::AmplitudeDamping,
            Sidedness::OneSidedA,
            Complex64::new(0.4, 0.0),
            unit_grid(5),
            unit_grid(4),
            Formulas::Corrected,
        )
        .unwrap();
        assert_eq!(grid.rows.len(), 20);
        for (k, row) in grid.rows.iter().enumerate() {
            assert_eq!(row.p, grid.p_values[k / 4]);
            assert_eq!(row.eta, grid.eta_values[k % 4]);
        }
        assert!(grid.max_disagreement() < 1e-9);
        let csv = grid.to_csv_string();
        assert!(csv.starts_with("p,eta,C,N,N2,C_oracle,N_oracle,N2_oracle\n"));
        assert_eq!(csv.lines().count(), 21);
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn unit_grid_edges() {
        assert!(unit_grid(0).is_empty());
        assert_eq!(unit_grid(1), vec![0.0]);
        assert_eq!(unit_grid(3), vec![0.0, 0.5, 1.0]);
    }
}
