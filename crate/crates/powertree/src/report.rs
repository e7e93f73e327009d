//! Text table and CSV output.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use crate::bench::RunReport;
use crate::config::Algorithm;
use crate::{Error, Result};

/// First line of every CSV file.
pub const CSV_COMMENT: &str = "# sd: population standard deviation over runs";
pub const CSV_HEADER: [&str; 7] = ["D", "n", "nr", "algo", "seed", "W", "time_s"];

/// Aligned table with one row per instance.
///
/// Columns are `D`, `n`, `nr`, the starting objective `W(T_CH)`, then best,
/// average and standard deviation of `W` and the mean run time, each split
/// by algorithm. Objectives are printed with two decimals; the lowest best
/// objective of a row carries a `*`.
pub fn emit_table(reports: &[RunReport]) -> String {
    let algos: Vec<Algorithm> = Algorithm::ALL
        .into_iter()
        .filter(|a| reports.iter().any(|r| r.algorithm == *a))
        .collect();

    let mut header: Vec<String> = ["D", "n", "nr", "W(T_CH)"].map(String::from).to_vec();
    for metric in ["Wbest", "Wav", "Wsd", "time"] {
        header.extend(algos.iter().map(|a| format!("{metric}:{a}")));
    }
    let mut rows = vec![header];

    let mut keys: Vec<(usize, usize, usize)> = Vec::new();
    for r in reports {
        let key = (r.hop_bound, r.n, r.nr);
        if !keys.contains(&key) {
            keys.push(key);
        }
    }
    for (d, n, nr) in keys {
        let group: Vec<&RunReport> = reports
            .iter()
            .filter(|r| (r.hop_bound, r.n, r.nr) == (d, n, nr))
            .collect();
        let cell = |a: Algorithm| group.iter().find(|r| r.algorithm == a).copied();
        let row_best = group.iter().map(|r| r.best).fold(f64::INFINITY, f64::min);
        let mut row = vec![
            d.to_string(),
            n.to_string(),
            nr.to_string(),
            format!("{:.2}", group[0].initial_objective),
        ];
        row.extend(algos.iter().map(|&a| match cell(a) {
            Some(r) if r.best == row_best => format!("{:.2}*", r.best),
            Some(r) => format!("{:.2}", r.best),
            None => "-".into(),
        }));
        for value in [
            (|r: &RunReport| r.average) as fn(&RunReport) -> f64,
            |r| r.sd,
            |r| r.average_seconds,
        ] {
            row.extend(algos.iter().map(|&a| match cell(a) {
                Some(r) => format!("{:.2}", value(r)),
                None => "-".into(),
            }));
        }
        rows.push(row);
    }

    let columns = rows[0].len();
    let widths: Vec<usize> = (0..columns)
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:>w$}"))
            .collect();
        writeln!(out, "{}", line.join("  ")).unwrap();
    }
    out
}

/// Writes per-run rows followed by the `best`, `avg`, `sd` and `init`
/// aggregate rows of each report. Values keep full precision.
pub fn write_csv<W: Write>(reports: &[RunReport], mut writer: W) -> Result<()> {
    writeln!(writer, "{CSV_COMMENT}").map_err(csv::Error::from)?;
    let mut csv = csv::Writer::from_writer(writer);
    csv.write_record(CSV_HEADER)?;
    for r in reports {
        let key = [r.hop_bound.to_string(), r.n.to_string(), r.nr.to_string()];
        let algo = r.algorithm.name();
        let mut row = |seed: &str, w: f64, time: Option<f64>| {
            csv.write_record([
                key[0].as_str(),
                &key[1],
                &key[2],
                algo,
                seed,
                &w.to_string(),
                &time.map(|t| t.to_string()).unwrap_or_default(),
            ])
        };
        for run in &r.runs {
            row(&run.seed.to_string(), run.objective, Some(run.seconds))?;
        }
        row("best", r.best, None)?;
        row("avg", r.average, Some(r.average_seconds))?;
        row("sd", r.sd, None)?;
        row("init", r.initial_objective, None)?;
    }
    csv.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn emit_csv(reports: &[RunReport], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    write_csv(reports, io::BufWriter::new(file))
}
